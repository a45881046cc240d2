//! What a robot perceives during a Look.

use crate::light::LightId;
use crate::scalar::Scalar;

/// Side on which the other robot is perceived, resolved the way the
/// six-state protocol resolves it: positive x means right, negative x means
/// left, and when x is zero the sign of y breaks the tie.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One robot's view of the world at the instant of a Look: the other robot's
/// position in local coordinates, the local distance, and the one light the
/// observer is permitted to see (its own under FState, the other's under
/// FComm).
///
/// Exactly one of the two local coordinates can be nonzero; which one depends
/// on the observer's axis sense.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Snapshot {
    pub other_local: (Scalar, Scalar),
    pub dist: Scalar,
    pub visible_light: Option<LightId>,
}

impl Snapshot {
    /// Perceived side of the other robot, `None` when coincident.
    pub fn side(&self) -> Option<Side> {
        let (x, y) = &self.other_local;
        if x.is_positive() {
            Some(Side::Right)
        } else if x.is_negative() {
            Some(Side::Left)
        } else if y.is_positive() {
            Some(Side::Right)
        } else if y.is_negative() {
            Some(Side::Left)
        } else {
            None
        }
    }

    /// The visible light; panics if the engine failed to populate it.
    pub fn light(&self) -> LightId {
        self.visible_light
            .expect("snapshot constructed without its visible light")
    }
}
