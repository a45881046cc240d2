//! Private coordinate conventions.
//!
//! Each robot perceives the world through its own frame: a unit length (how
//! many global length units one local unit spans) and an axis sense. All
//! motion in the implemented protocols is collinear, so the global world is a
//! line; a frame decides where that line lands in the robot's private plane.
//! `PosX`/`NegX` put it on the local x-axis (aligned / anti-aligned with the
//! global direction), `PosY`/`NegY` on the local y-axis, which is the
//! degenerate case that exercises the y tie-break of the six-state protocol.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::scalar::Scalar;

/// Axis sense of a robot's private frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    PosX,
    NegX,
    PosY,
    NegY,
}

impl Sense {
    pub const ALL: [Sense; 4] = [Sense::PosX, Sense::NegX, Sense::PosY, Sense::NegY];

    /// Sign applied when mapping a global offset into local coordinates.
    pub fn sign(self) -> i32 {
        match self {
            Sense::PosX | Sense::PosY => 1,
            Sense::NegX | Sense::NegY => -1,
        }
    }

    /// True when the global line maps onto the local y-axis.
    pub fn is_vertical(self) -> bool {
        matches!(self, Sense::PosY | Sense::NegY)
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sense::PosX => "+x",
            Sense::NegX => "-x",
            Sense::PosY => "+y",
            Sense::NegY => "-y",
        };
        f.write_str(s)
    }
}

impl FromStr for Sense {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+x" => Ok(Sense::PosX),
            "-x" => Ok(Sense::NegX),
            "+y" => Ok(Sense::PosY),
            "-y" => Ok(Sense::NegY),
            other => Err(ParseError::Sense(other.to_string())),
        }
    }
}

/// A robot's private coordinate convention: unit length plus axis sense.
///
/// The unit is the global length of one local unit and must be positive.
/// Frames are immutable for the lifetime of an execution unless per-cycle
/// re-randomization is explicitly enabled, which is only valid for class-L
/// protocols (their global behaviour does not depend on the frame at all).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub unit: Scalar,
    pub sense: Sense,
}

impl Frame {
    pub fn new(unit: Scalar, sense: Sense) -> Frame {
        assert!(unit.is_positive(), "frame unit must be positive");
        Frame { unit, sense }
    }

    /// The canonical frame: unit 1, x-axis aligned with the global line.
    pub fn canonical() -> Frame {
        Frame::new(Scalar::one(), Sense::PosX)
    }
}
