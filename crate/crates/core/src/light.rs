//! Lights: the constant-size persistent state of a robot.
//!
//! A light is the only memory a robot carries between cycles. Who gets to see
//! it is the whole difference between the two robot models handled here:
//! finite-state robots see only their own light, finite-communication robots
//! see only the other robot's light.

use std::fmt;

use crate::error::ParseError;

/// Which light a robot is permitted to see during a Look.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Visibility {
    /// The robot sees its own light: the light is an internal state.
    FState,
    /// The robot sees the other robot's light: the light is a broadcast
    /// message the owner itself cannot read.
    FComm,
}

impl fmt::Display for Visibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Visibility::FState => f.write_str("fstate"),
            Visibility::FComm => f.write_str("fcomm"),
        }
    }
}

/// Opaque index into a protocol's light alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LightId(pub u8);

/// A protocol's ordered set of lights with display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LightAlphabet {
    pub name: String,
    names: Vec<String>,
    start: LightId,
}

impl LightAlphabet {
    pub fn new(name: &str, lights: &[&str], start: LightId) -> LightAlphabet {
        assert!(!lights.is_empty());
        assert!((start.0 as usize) < lights.len(), "start light out of range");
        LightAlphabet {
            name: name.to_string(),
            names: lights.iter().map(|s| s.to_string()).collect(),
            start,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn start_light(&self) -> LightId {
        self.start
    }

    pub fn contains(&self, light: LightId) -> bool {
        (light.0 as usize) < self.names.len()
    }

    pub fn light_name(&self, light: LightId) -> &str {
        &self.names[light.0 as usize]
    }

    pub fn parse_light(&self, name: &str) -> Result<LightId, ParseError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| LightId(i as u8))
            .ok_or_else(|| ParseError::Light(name.to_string(), self.name.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = LightId> + '_ {
        (0..self.names.len()).map(|i| LightId(i as u8))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_lookup() {
        let a = LightAlphabet::new("abc", &["A", "B", "C"], LightId(0));
        assert_eq!(a.len(), 3);
        assert_eq!(a.parse_light("B").unwrap(), LightId(1));
        assert!(a.parse_light("D").is_err());
        assert_eq!(a.light_name(LightId(2)), "C");
        assert_eq!(a.start_light(), LightId(0));
    }
}
