//! Three-color rendezvous for non-rigid semi-synchronous execution, lights
//! visible to the other robot only.
//!
//! This one is a class-L protocol: it ignores distances completely and works
//! from any initial color pair. Seeing A means "come halfway", seeing B
//! means "hold", seeing C means "come here".

use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::{rat, Scalar};
use crate::snapshot::Snapshot;

use super::class_l::{self, ClassLTable};
use super::{Protocol, ProtocolOutput};

pub const A: LightId = LightId(0);
pub const B: LightId = LightId(1);
pub const C: LightId = LightId(2);

/// The protocol as a class-L table: A → (1/2, B), B → (0, C), C → (1, A).
pub fn table() -> ClassLTable {
    ClassLTable::new(
        "alg3",
        &[
            ("A", rat(1, 2), "B"),
            ("B", Scalar::zero(), "C"),
            ("C", Scalar::one(), "A"),
        ],
    )
}

/// One Compute phase given the visible (other robot's) light.
pub fn step(visible: LightId, other_local: &(Scalar, Scalar)) -> ProtocolOutput {
    static TABLE: std::sync::OnceLock<ClassLTable> = std::sync::OnceLock::new();
    class_l::step(TABLE.get_or_init(table), visible, other_local)
}

pub struct ThreeColor {
    table: ClassLTable,
}

impl ThreeColor {
    pub fn new() -> ThreeColor {
        ThreeColor { table: table() }
    }
}

impl Default for ThreeColor {
    fn default() -> Self {
        Self::new()
    }
}

impl Protocol for ThreeColor {
    fn name(&self) -> &str {
        "alg3-fcomm-3"
    }

    fn alphabet(&self) -> &LightAlphabet {
        &self.table.alphabet
    }

    fn visibility(&self) -> Visibility {
        Visibility::FComm
    }

    fn compute(&self, snapshot: &Snapshot, _delta_local: Option<&Scalar>) -> ProtocolOutput {
        class_l::step(&self.table, snapshot.light(), &snapshot.other_local)
    }

    fn class_l_table(&self) -> Option<&ClassLTable> {
        Some(&self.table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_branches() {
        let other = (Scalar::from_int(4), Scalar::zero());

        let out = step(A, &other);
        assert_eq!(out.next_light, B);
        assert_eq!(out.dest_local, (Scalar::from_int(2), Scalar::zero()));

        let out = step(B, &other);
        assert_eq!(out.next_light, C);
        assert!(out.is_stay());

        let out = step(C, &other);
        assert_eq!(out.next_light, A);
        assert_eq!(out.dest_local, other);
    }

    #[test]
    fn agrees_with_generic_table_application() {
        let t = table();
        for light in [A, B, C] {
            for x in [-3i64, 0, 5] {
                let other = (Scalar::from_int(x), Scalar::zero());
                assert_eq!(step(light, &other), class_l::step(&t, light, &other));
            }
        }
    }
}
