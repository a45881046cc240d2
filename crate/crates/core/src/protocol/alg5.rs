//! Three-color rendezvous for non-rigid asynchronous execution with
//! knowledge of δ, lights visible to the other robot only.
//!
//! Both robots shuffle in δ/2 steps until someone observes a separation in
//! (δ, 2δ]; from there every computed move is at most δ long and therefore
//! rigid, and a Ready/Come handshake closes the gap.

use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::{rat, Scalar};
use crate::snapshot::Snapshot;

use super::{scaled, Protocol, ProtocolOutput};

pub const START: LightId = LightId(0);
pub const READY: LightId = LightId(1);
pub const COME: LightId = LightId(2);

pub fn alphabet() -> LightAlphabet {
    LightAlphabet::new("alg5", &["Start", "Ready", "Come"], START)
}

/// One Compute phase. The visible light is the other robot's; `delta_local`
/// is δ in the observer's unit.
pub fn step(snapshot: &Snapshot, delta_local: &Scalar) -> ProtocolOutput {
    let seen = snapshot.light();
    let dist = &snapshot.dist;
    let other = &snapshot.other_local;

    let two_delta = Scalar::from_int(2) * delta_local;

    match seen {
        START => {
            if dist.is_zero() {
                // we have already gathered
                ProtocolOutput::stay(COME)
            } else if *dist <= *delta_local {
                // moving δ/2 away
                let lambda = -(delta_local / &(Scalar::from_int(2) * dist));
                ProtocolOutput::move_to(START, scaled(other, &lambda))
            } else if *dist > two_delta {
                // moving δ/2 in
                let lambda = delta_local / &(Scalar::from_int(2) * dist);
                ProtocolOutput::move_to(START, scaled(other, &lambda))
            } else {
                // δ < dist <= 2δ: ready to gather
                ProtocolOutput::stay(READY)
            }
        }
        READY => {
            if *delta_local < *dist && *dist <= two_delta {
                // reaching the midpoint
                ProtocolOutput::move_to(COME, scaled(other, &rat(1, 2)))
            } else {
                ProtocolOutput::stay(COME)
            }
        }
        COME => {
            if dist.is_zero() {
                // we have gathered
                ProtocolOutput::terminate(COME)
            } else {
                ProtocolOutput::move_to(READY, other.clone())
            }
        }
        other => panic!("light {:?} outside the Start/Ready/Come alphabet", other),
    }
}

pub struct ThreeColorDelta;

impl Protocol for ThreeColorDelta {
    fn name(&self) -> &str {
        "alg5-fcomm-delta-3"
    }

    fn alphabet(&self) -> &LightAlphabet {
        static ALPHABET: std::sync::OnceLock<LightAlphabet> = std::sync::OnceLock::new();
        ALPHABET.get_or_init(alphabet)
    }

    fn visibility(&self) -> Visibility {
        Visibility::FComm
    }

    fn needs_delta(&self) -> bool {
        true
    }

    fn compute(&self, snapshot: &Snapshot, delta_local: Option<&Scalar>) -> ProtocolOutput {
        step(snapshot, delta_local.expect("alg5 needs delta"))
    }
}
