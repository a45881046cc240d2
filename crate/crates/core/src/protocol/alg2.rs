//! Twelve-color rendezvous for rigid asynchronous execution, lights visible
//! to the other robot only.
//!
//! The robots cannot remember their own past, so the protocol is a
//! conversation: each branch reacts to the message currently shown by the
//! partner. Distances are again measured in the observer's own unit; the
//! moving-away step makes the gap exactly the sum of the two private units,
//! which is what lets the robots compare their units at the distance-2 test.

use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::{rat, Scalar};
use crate::snapshot::Snapshot;

use super::{scaled, Protocol, ProtocolOutput};

pub const TEST: LightId = LightId(0);
pub const ME_GE1: LightId = LightId(1);
pub const ME_LT1: LightId = LightId(2);
pub const APPROACHING: LightId = LightId(3);
pub const BOTH_LT1: LightId = LightId(4);
pub const MOVING_AWAY: LightId = LightId(5);
pub const YOU_MOVED: LightId = LightId(6);
pub const COMING: LightId = LightId(7);
pub const WAITING: LightId = LightId(8);
pub const BOTH_EQ2: LightId = LightId(9);
pub const STAY: LightId = LightId(10);
pub const HALTED: LightId = LightId(11);

pub fn alphabet() -> LightAlphabet {
    LightAlphabet::new(
        "alg2",
        &[
            "Test",
            "MeGe1",
            "MeLt1",
            "Approaching",
            "BothLt1",
            "MovingAway",
            "YouMoved",
            "Coming",
            "Waiting",
            "BothEq2",
            "Stay",
            "Halted",
        ],
        TEST,
    )
}

/// One Compute phase. The visible light is the other robot's.
pub fn step(snapshot: &Snapshot) -> ProtocolOutput {
    let seen = snapshot.light();
    let dist = &snapshot.dist;
    let other = &snapshot.other_local;

    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let half = rat(1, 2);

    match seen {
        TEST => {
            // testing distances
            if *dist >= one {
                ProtocolOutput::stay(ME_GE1)
            } else {
                ProtocolOutput::stay(ME_LT1)
            }
        }
        ME_GE1 => {
            // reducing distances
            ProtocolOutput::move_to(APPROACHING, scaled(other, &half))
        }
        APPROACHING => {
            // test distances again
            ProtocolOutput::stay(TEST)
        }
        ME_LT1 => {
            if *dist >= one {
                ProtocolOutput::stay(ME_GE1)
            } else {
                ProtocolOutput::stay(BOTH_LT1)
            }
        }
        BOTH_LT1 => {
            if dist.is_zero() {
                // we have gathered
                ProtocolOutput::stay(HALTED)
            } else if *dist < one {
                // moving away by 1 - dist/2
                let lambda = &half - &(&one / dist);
                ProtocolOutput::move_to(MOVING_AWAY, scaled(other, &lambda))
            } else {
                // already moved away; wait
                ProtocolOutput::stay(MOVING_AWAY)
            }
        }
        MOVING_AWAY => ProtocolOutput::stay(YOU_MOVED),
        YOU_MOVED => ProtocolOutput::move_to(COMING, other.clone()),
        COMING => ProtocolOutput::stay(WAITING),
        WAITING => {
            if *dist > two {
                // my unit is smaller
                ProtocolOutput::move_to(STAY, other.clone())
            } else if *dist == two {
                // our units are equal
                ProtocolOutput::stay(BOTH_EQ2)
            } else {
                // my unit is bigger or we have gathered
                ProtocolOutput::stay(HALTED)
            }
        }
        BOTH_EQ2 => {
            if *dist == two {
                // moving to the midpoint
                ProtocolOutput::move_to(STAY, scaled(other, &half))
            } else {
                ProtocolOutput::stay(STAY)
            }
        }
        STAY => ProtocolOutput::stay(HALTED),
        HALTED => {
            if dist.is_zero() {
                // we have gathered
                ProtocolOutput::terminate(HALTED)
            } else {
                // maintain position while I come
                ProtocolOutput::move_to(STAY, other.clone())
            }
        }
        other => panic!("light {:?} outside the twelve-color alphabet", other),
    }
}

pub struct TwelveColor;

impl Protocol for TwelveColor {
    fn name(&self) -> &str {
        "alg2-fcomm-12"
    }

    fn alphabet(&self) -> &LightAlphabet {
        static ALPHABET: std::sync::OnceLock<LightAlphabet> = std::sync::OnceLock::new();
        ALPHABET.get_or_init(alphabet)
    }

    fn visibility(&self) -> Visibility {
        Visibility::FComm
    }

    fn compute(&self, snapshot: &Snapshot, _delta_local: Option<&Scalar>) -> ProtocolOutput {
        step(snapshot)
    }
}
