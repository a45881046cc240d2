//! Class-L protocols: destination λ·other.position with λ a function of the
//! visible light alone.
//!
//! These protocols never inspect distances, so their global behaviour is
//! invariant under any change of a robot's frame (the frame cancels when the
//! local destination is mapped back to the line). That makes them the right
//! vehicle for the impossibility adversaries and the only protocols for
//! which per-cycle frame re-randomization is meaningful.

use std::fmt;

use crate::error::ParseError;
use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::Scalar;
use crate::snapshot::Snapshot;

use super::{scaled, Protocol, ProtocolOutput};

/// Per-light rule: scale factor for the destination plus the next light.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLEntry {
    pub lambda: Scalar,
    pub next_light: LightId,
}

/// A total map from lights to class-L rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLTable {
    pub alphabet: LightAlphabet,
    entries: Vec<ClassLEntry>,
}

impl ClassLTable {
    /// Build a table from `(light name, lambda, next light name)` rows. The
    /// first row's light is the start light.
    pub fn new(name: &str, rows: &[(&str, Scalar, &str)]) -> ClassLTable {
        assert!(!rows.is_empty());
        let light_names: Vec<&str> = rows.iter().map(|(n, _, _)| *n).collect();
        let alphabet = LightAlphabet::new(name, &light_names, LightId(0));
        let entries = rows
            .iter()
            .map(|(_, lambda, next)| ClassLEntry {
                lambda: lambda.clone(),
                next_light: alphabet
                    .parse_light(next)
                    .expect("next light missing from table rows"),
            })
            .collect();
        ClassLTable { alphabet, entries }
    }

    /// Parse the inline table grammar `light=lambda,next;...`, e.g.
    /// `A=1/2,B;B=0,C;C=1,A`. Every `next` must itself be a declared light,
    /// which keeps the map total over the alphabet.
    pub fn parse(spec: &str) -> Result<ClassLTable, ParseError> {
        let err = |msg: &str| ParseError::ClassLTable(spec.to_string(), msg.to_string());
        let mut names = Vec::new();
        let mut raw = Vec::new();
        for part in spec.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (light, rest) = part.split_once('=').ok_or_else(|| err("missing '='"))?;
            let (lambda, next) = rest.split_once(',').ok_or_else(|| err("missing ','"))?;
            let light = light.trim();
            if names.contains(&light.to_string()) {
                return Err(err("duplicate light"));
            }
            names.push(light.to_string());
            let lambda: Scalar = lambda
                .trim()
                .parse()
                .map_err(|_| err("lambda is not a rational"))?;
            raw.push((lambda, next.trim().to_string()));
        }
        if names.is_empty() {
            return Err(err("empty table"));
        }
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let alphabet = LightAlphabet::new("classL", &name_refs, LightId(0));
        let mut entries = Vec::new();
        for (lambda, next) in raw {
            let next_light = alphabet
                .parse_light(&next)
                .map_err(|_| err("next light not declared"))?;
            entries.push(ClassLEntry { lambda, next_light });
        }
        Ok(ClassLTable { alphabet, entries })
    }

    pub fn entry(&self, light: LightId) -> &ClassLEntry {
        &self.entries[light.0 as usize]
    }

    /// Canonical inline form, parseable by [`ClassLTable::parse`].
    pub fn to_spec(&self) -> String {
        self.alphabet
            .iter()
            .map(|l| {
                let e = self.entry(l);
                format!(
                    "{}={},{}",
                    self.alphabet.light_name(l),
                    e.lambda,
                    self.alphabet.light_name(e.next_light)
                )
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for ClassLTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

/// Apply a class-L table to the visible light: destination λ·other.position,
/// next light from the table.
pub fn step(table: &ClassLTable, visible: LightId, other_local: &(Scalar, Scalar)) -> ProtocolOutput {
    let e = table.entry(visible);
    ProtocolOutput::move_to(e.next_light, scaled(other_local, &e.lambda))
}

/// A class-L table packaged as a runnable protocol under a chosen light
/// model.
pub struct ClassLProtocol {
    table: ClassLTable,
    visibility: Visibility,
    name: String,
}

impl ClassLProtocol {
    pub fn new(table: ClassLTable, visibility: Visibility) -> ClassLProtocol {
        let name = format!("classL:{}", table.to_spec());
        ClassLProtocol {
            table,
            visibility,
            name,
        }
    }

    pub fn table(&self) -> &ClassLTable {
        &self.table
    }
}

impl Protocol for ClassLProtocol {
    fn name(&self) -> &str {
        &self.name
    }

    fn alphabet(&self) -> &LightAlphabet {
        &self.table.alphabet
    }

    fn visibility(&self) -> Visibility {
        self.visibility
    }

    fn compute(&self, snapshot: &Snapshot, _delta_local: Option<&Scalar>) -> ProtocolOutput {
        step(&self.table, snapshot.light(), &snapshot.other_local)
    }

    fn class_l_table(&self) -> Option<&ClassLTable> {
        Some(&self.table)
    }
}
