//! The rendezvous protocols as pure Compute functions.
//!
//! Every protocol here is a pure function from a [`Snapshot`] (plus, for the
//! δ-aware ones, δ expressed in the observer's unit) to a [`ProtocolOutput`].
//! There is no hidden state: the robots are oblivious and everything they
//! know is in the snapshot and the one light they can see.

pub mod alg1;
pub mod alg2;
pub mod alg3;
pub mod alg4;
pub mod alg5;
pub mod class_l;

use crate::error::ParseError;
use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::Scalar;
use crate::snapshot::Snapshot;

pub use class_l::ClassLTable;

/// Result of one Compute phase: the light to commit, the local destination
/// (the origin means "stay"), and whether the robot terminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProtocolOutput {
    pub next_light: LightId,
    pub dest_local: (Scalar, Scalar),
    pub terminate: bool,
}

impl ProtocolOutput {
    pub fn stay(next_light: LightId) -> ProtocolOutput {
        ProtocolOutput {
            next_light,
            dest_local: (Scalar::zero(), Scalar::zero()),
            terminate: false,
        }
    }

    pub fn move_to(next_light: LightId, dest_local: (Scalar, Scalar)) -> ProtocolOutput {
        ProtocolOutput {
            next_light,
            dest_local,
            terminate: false,
        }
    }

    pub fn terminate(light: LightId) -> ProtocolOutput {
        ProtocolOutput {
            next_light: light,
            dest_local: (Scalar::zero(), Scalar::zero()),
            terminate: true,
        }
    }

    pub fn is_stay(&self) -> bool {
        self.dest_local.0.is_zero() && self.dest_local.1.is_zero()
    }
}

/// Scale the perceived position of the other robot by λ. Destinations of
/// this shape are automatically collinear with the two robots.
pub fn scaled(other_local: &(Scalar, Scalar), lambda: &Scalar) -> (Scalar, Scalar) {
    (&other_local.0 * lambda, &other_local.1 * lambda)
}

/// A rendezvous protocol: an alphabet, a visibility requirement, and a pure
/// Compute function.
pub trait Protocol {
    /// Stable registry name.
    fn name(&self) -> &str;

    fn alphabet(&self) -> &LightAlphabet;

    /// Which light model the protocol is written for.
    fn visibility(&self) -> Visibility;

    /// True when Compute needs δ expressed in the observer's unit.
    fn needs_delta(&self) -> bool {
        false
    }

    /// One Compute phase. `delta_local` is δ divided by the observer's frame
    /// unit; it is `Some` exactly when [`Protocol::needs_delta`] holds.
    fn compute(&self, snapshot: &Snapshot, delta_local: Option<&Scalar>) -> ProtocolOutput;

    /// The class-L table when the protocol is a member of class L
    /// (destination λ·other.position with λ a function of the visible light
    /// only). Class-L protocols tolerate frame re-randomization between
    /// cycles.
    fn class_l_table(&self) -> Option<&ClassLTable> {
        None
    }
}

/// Look up a protocol by its stable name.
///
/// `classL:<table>` needs a visibility to run under generic schedulers; the
/// adversary subcommands fix it themselves (the theorem for FState robots is
/// about class-L tables read through one's own light, the asynchronous one
/// about tables read through the other's light).
pub fn lookup(
    name: &str,
    class_l_visibility: Option<Visibility>,
) -> Result<Box<dyn Protocol>, ParseError> {
    match name {
        "alg1-fstate-6" => Ok(Box::new(alg1::SixState)),
        "alg2-fcomm-12" => Ok(Box::new(alg2::TwelveColor)),
        "alg3-fcomm-3" => Ok(Box::new(alg3::ThreeColor::new())),
        "alg4-fstate-delta-3" => Ok(Box::new(alg4::ThreeStateDelta)),
        "alg5-fcomm-delta-3" => Ok(Box::new(alg5::ThreeColorDelta)),
        other => match other.strip_prefix("classL:") {
            Some(table_spec) => {
                let table = ClassLTable::parse(table_spec)?;
                let visibility = class_l_visibility.ok_or_else(|| {
                    ParseError::ClassLTable(
                        table_spec.to_string(),
                        "class-L protocols need an explicit visibility".to_string(),
                    )
                })?;
                Ok(Box::new(class_l::ClassLProtocol::new(table, visibility)))
            }
            None => Err(ParseError::Protocol(other.to_string())),
        },
    }
}

/// All built-in protocol names, for CLI help and sweeps.
pub const BUILTIN_NAMES: [&str; 5] = [
    "alg1-fstate-6",
    "alg2-fcomm-12",
    "alg3-fcomm-3",
    "alg4-fstate-delta-3",
    "alg5-fcomm-delta-3",
];
