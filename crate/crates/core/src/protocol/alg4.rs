//! Three-state rendezvous for non-rigid semi-synchronous execution with
//! knowledge of δ, lights visible to their owner only.
//!
//! Knowing δ buys back what non-rigid motion takes away: any move shorter
//! than δ is guaranteed to complete, so the protocol herds the robots to a
//! distance in [δ/2, δ) where from then on every computed move is rigid.

use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::{rat, Scalar};
use crate::snapshot::Snapshot;

use super::{scaled, Protocol, ProtocolOutput};

pub const A: LightId = LightId(0);
pub const B: LightId = LightId(1);
pub const C: LightId = LightId(2);

pub fn alphabet() -> LightAlphabet {
    LightAlphabet::new("alg4", &["A", "B", "C"], A)
}

/// One Compute phase. The visible light is the robot's own; `delta_local`
/// is δ in the observer's unit.
pub fn step(snapshot: &Snapshot, delta_local: &Scalar) -> ProtocolOutput {
    let me = snapshot.light();
    let dist = &snapshot.dist;
    let other = &snapshot.other_local;

    if dist.is_zero() {
        return ProtocolOutput::terminate(me);
    }

    let half_delta = delta_local / &Scalar::from_int(2);

    match me {
        A => {
            if *dist < half_delta {
                // reach the point at distance δ/2 from the other
                let lambda = &Scalar::one() - &(delta_local / &(Scalar::from_int(2) * dist));
                ProtocolOutput::move_to(A, scaled(other, &lambda))
            } else if *dist < *delta_local {
                // gather or switch positions
                ProtocolOutput::move_to(B, other.clone())
            } else {
                // dist >= δ: reach the point at distance δ/4 from the midpoint
                let lambda = &rat(1, 2) - &(delta_local / &(Scalar::from_int(4) * dist));
                ProtocolOutput::move_to(A, scaled(other, &lambda))
            }
        }
        B => {
            if half_delta <= *dist && *dist < *delta_local {
                ProtocolOutput::move_to(C, scaled(other, &rat(1, 2)))
            } else {
                ProtocolOutput::stay(B)
            }
        }
        C => ProtocolOutput::move_to(C, other.clone()),
        other => panic!("light {:?} outside the three-state alphabet", other),
    }
}

pub struct ThreeStateDelta;

impl Protocol for ThreeStateDelta {
    fn name(&self) -> &str {
        "alg4-fstate-delta-3"
    }

    fn alphabet(&self) -> &LightAlphabet {
        static ALPHABET: std::sync::OnceLock<LightAlphabet> = std::sync::OnceLock::new();
        ALPHABET.get_or_init(alphabet)
    }

    fn visibility(&self) -> Visibility {
        Visibility::FState
    }

    fn needs_delta(&self) -> bool {
        true
    }

    fn compute(&self, snapshot: &Snapshot, delta_local: Option<&Scalar>) -> ProtocolOutput {
        step(snapshot, delta_local.expect("alg4 needs delta"))
    }
}
