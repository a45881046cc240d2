//! World state and the frame maps between global and local coordinates.
//!
//! All five implemented protocols compute destinations of the form
//! λ·other.position or the origin, so motion never leaves the line through
//! the two robots. Global positions are therefore scalars on that line; the
//! frames decide how each robot privately sees it. A `WorldConfig` is an
//! immutable value: every operation returns a new world.

use std::fmt;

use crate::error::EngineError;
use crate::frame::Frame;
use crate::light::{LightId, Visibility};
use crate::protocol::ProtocolOutput;
use crate::scalar::Scalar;
use crate::snapshot::Snapshot;

/// The two robots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RobotId {
    R,
    S,
}

impl RobotId {
    pub const BOTH: [RobotId; 2] = [RobotId::R, RobotId::S];

    pub fn other(self) -> RobotId {
        match self {
            RobotId::R => RobotId::S,
            RobotId::S => RobotId::R,
        }
    }

    pub fn index(self) -> usize {
        match self {
            RobotId::R => 0,
            RobotId::S => 1,
        }
    }
}

impl fmt::Display for RobotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RobotId::R => f.write_str("R"),
            RobotId::S => f.write_str("S"),
        }
    }
}

/// An in-flight asynchronous cycle: what has been observed and computed but
/// not yet published or completed. Only the asynchronous engine populates
/// this; between semi-synchronous rounds it is always absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingCycle {
    pub snapshot: Snapshot,
    pub output: Option<ProtocolOutput>,
    /// Light published (CommitLight is a separate event after ComputeDone).
    pub committed: bool,
    /// Global destination, fixed at ComputeDone time.
    pub dest_global: Option<Scalar>,
    /// Position at MoveStart; progress is measured from here.
    pub move_start: Option<Scalar>,
}

/// One robot's body: position on the global line, private frame, published
/// light, and bookkeeping for termination and in-flight cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobotBody {
    pub id: RobotId,
    pub position: Scalar,
    pub frame: Frame,
    pub light: LightId,
    pub terminated: bool,
    pub pending: Option<PendingCycle>,
}

impl RobotBody {
    pub fn new(id: RobotId, position: Scalar, frame: Frame, light: LightId) -> RobotBody {
        RobotBody {
            id,
            position,
            frame,
            light,
            terminated: false,
            pending: None,
        }
    }
}

/// The full world: two robots, the motion regime, and the light model.
/// `delta = None` means rigid motion; otherwise δ is the global-length
/// progress guarantee for interrupted moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldConfig {
    robots: [RobotBody; 2],
    pub delta: Option<Scalar>,
    pub visibility: Visibility,
}

impl WorldConfig {
    pub fn new(
        r: RobotBody,
        s: RobotBody,
        delta: Option<Scalar>,
        visibility: Visibility,
    ) -> WorldConfig {
        assert_eq!(r.id, RobotId::R);
        assert_eq!(s.id, RobotId::S);
        if let Some(d) = &delta {
            assert!(d.is_positive(), "delta must be positive");
        }
        WorldConfig {
            robots: [r, s],
            delta,
            visibility,
        }
    }

    pub fn is_rigid(&self) -> bool {
        self.delta.is_none()
    }

    pub fn robot(&self, id: RobotId) -> &RobotBody {
        &self.robots[id.index()]
    }

    pub fn robot_mut(&mut self, id: RobotId) -> &mut RobotBody {
        &mut self.robots[id.index()]
    }

    pub fn robots(&self) -> &[RobotBody; 2] {
        &self.robots
    }

    /// Unsigned separation of the two robots on the global line.
    pub fn separation(&self) -> Scalar {
        (&self.robots[0].position - &self.robots[1].position).abs()
    }

    pub fn coincident(&self) -> bool {
        self.robots[0].position == self.robots[1].position
    }

    /// δ in the units of `observer`, for protocols that know δ.
    pub fn delta_local(&self, observer: RobotId) -> Option<Scalar> {
        self.delta
            .as_ref()
            .map(|d| d / &self.robot(observer).frame.unit)
    }

    /// The world with the two robots' roles exchanged (R becomes S and vice
    /// versa). Used by the symmetry checks.
    pub fn swapped(&self) -> WorldConfig {
        let mut w = self.clone();
        w.robots.swap(0, 1);
        w.robots[0].id = RobotId::R;
        w.robots[1].id = RobotId::S;
        w
    }
}

/// Map the other robot's global position through the observer's frame.
///
/// The signed local coordinate is sense-sign · (other − me) / unit, placed on
/// the x-axis for horizontal senses and on the y-axis for vertical ones. The
/// visible light is the observer's own under FState and the other's current
/// published light under FComm. The caller supplies the observed position
/// because under asynchrony a Look may catch the other robot mid-move.
pub fn observe(world: &WorldConfig, observer: RobotId, observed_other_pos: &Scalar) -> Snapshot {
    let me = world.robot(observer);
    let other = world.robot(observer.other());
    let offset = observed_other_pos - &me.position;
    let local = &offset / &me.frame.unit;
    let signed = if me.frame.sense.sign() < 0 { -local } else { local };
    let other_local = if me.frame.sense.is_vertical() {
        (Scalar::zero(), signed)
    } else {
        (signed, Scalar::zero())
    };
    let dist = (&other_local.0 + &other_local.1).abs();
    let visible_light = Some(match world.visibility {
        Visibility::FState => me.light,
        Visibility::FComm => other.light,
    });
    let snap = Snapshot {
        other_local,
        dist,
        visible_light,
    };
    debug_assert_eq!(
        to_global(me, &snap.other_local).expect("observe output is on-axis"),
        *observed_other_pos,
        "observe/to_global round trip"
    );
    snap
}

/// Map a local point on the observer's active axis back to the global line.
///
/// Rejects points with both coordinates nonzero: such a destination would
/// leave the line through the robots, which cannot arise from the
/// implemented protocols and signals a protocol bug.
pub fn to_global(observer: &RobotBody, local: &(Scalar, Scalar)) -> Result<Scalar, EngineError> {
    let (x, y) = local;
    if !x.is_zero() && !y.is_zero() {
        return Err(EngineError::OffAxisDestination {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    // On-axis: exactly one coordinate may be nonzero, and protocols only
    // produce it on the observer's active axis (scalar multiples of the
    // observed position). The origin is valid for either axis.
    let on_axis = &(x + y);
    let signed = if observer.frame.sense.sign() < 0 {
        -on_axis
    } else {
        on_axis.clone()
    };
    Ok(&observer.position + &(&signed * &observer.frame.unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Sense;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn world(r_pos: Scalar, r_frame: Frame, s_pos: Scalar, s_frame: Frame) -> WorldConfig {
        WorldConfig::new(
            RobotBody::new(RobotId::R, r_pos, r_frame, LightId(0)),
            RobotBody::new(RobotId::S, s_pos, s_frame, LightId(0)),
            None,
            Visibility::FState,
        )
    }

    #[test]
    fn observe_maps_through_the_frame() {
        // Observer at 0 with unit 2, sense -x; other at 3.
        let w = world(
            Scalar::zero(),
            Frame::new(Scalar::from_int(2), Sense::NegX),
            Scalar::from_int(3),
            Frame::canonical(),
        );
        let snap = observe(&w, RobotId::R, &Scalar::from_int(3));
        assert_eq!(snap.other_local, (rat(-3, 2), Scalar::zero()));
        assert_eq!(snap.dist, rat(3, 2));
    }

    #[test]
    fn observe_coincident() {
        let w = world(
            Scalar::one(),
            Frame::canonical(),
            Scalar::one(),
            Frame::canonical(),
        );
        let snap = observe(&w, RobotId::S, &Scalar::one());
        assert_eq!(snap.other_local, (Scalar::zero(), Scalar::zero()));
        assert!(snap.dist.is_zero());
        assert_eq!(snap.side(), None);
    }

    #[test]
    fn observe_vertical_sense_lands_on_y() {
        let w = world(
            Scalar::zero(),
            Frame::new(Scalar::one(), Sense::PosY),
            Scalar::from_int(5),
            Frame::canonical(),
        );
        let snap = observe(&w, RobotId::R, &Scalar::from_int(5));
        assert_eq!(snap.other_local, (Scalar::zero(), Scalar::from_int(5)));
        assert_eq!(snap.dist, Scalar::from_int(5));
        assert_eq!(snap.side(), Some(crate::snapshot::Side::Right));
    }

    #[test]
    fn to_global_inverts_observe() {
        let body = RobotBody::new(
            RobotId::R,
            Scalar::zero(),
            Frame::new(Scalar::from_int(2), Sense::NegX),
            LightId(0),
        );
        let g = to_global(&body, &(rat(-3, 2), Scalar::zero())).unwrap();
        assert_eq!(g, Scalar::from_int(3));

        let g = to_global(&body, &(Scalar::zero(), Scalar::zero())).unwrap();
        assert_eq!(g, Scalar::zero());
    }

    #[test]
    fn to_global_hand_example() {
        let body = RobotBody::new(
            RobotId::R,
            Scalar::from_int(7),
            Frame::new(rat(1, 3), Sense::PosX),
            LightId(0),
        );
        let g = to_global(&body, &(Scalar::from_int(6), Scalar::zero())).unwrap();
        assert_eq!(g, Scalar::from_int(9));
    }

    #[test]
    fn to_global_rejects_off_axis_points() {
        let body = RobotBody::new(RobotId::R, Scalar::zero(), Frame::canonical(), LightId(0));
        assert!(to_global(&body, &(Scalar::one(), Scalar::one())).is_err());
    }

    #[test]
    fn fcomm_shows_the_others_light() {
        let mut w = world(
            Scalar::zero(),
            Frame::canonical(),
            Scalar::one(),
            Frame::canonical(),
        );
        w.visibility = Visibility::FComm;
        w.robot_mut(RobotId::S).light = LightId(1);
        let snap = observe(&w, RobotId::R, &Scalar::one());
        assert_eq!(snap.visible_light, Some(LightId(1)));
        let snap = observe(&w, RobotId::S, &Scalar::zero());
        assert_eq!(snap.visible_light, Some(LightId(0)));
    }

    proptest! {
        #[test]
        fn observe_roundtrip(
            me_n in -50i64..50, other_n in -50i64..50,
            unit_n in 1i64..8, unit_d in 1i64..8,
            sense_idx in 0usize..4,
        ) {
            let sense = Sense::ALL[sense_idx];
            let me_pos = Scalar::from_int(me_n);
            let other_pos = Scalar::from_int(other_n);
            let w = world(
                me_pos,
                Frame::new(Scalar::ratio(unit_n, unit_d), sense),
                other_pos.clone(),
                Frame::canonical(),
            );
            let snap = observe(&w, RobotId::R, &other_pos);
            // One coordinate is zero and dist is the absolute local offset.
            prop_assert!(snap.other_local.0.is_zero() || snap.other_local.1.is_zero());
            prop_assert_eq!(&snap.dist, &(&snap.other_local.0 + &snap.other_local.1).abs());
            let back = to_global(w.robot(RobotId::R), &snap.other_local).unwrap();
            prop_assert_eq!(back, other_pos);
        }
    }
}
