//! Six-state rendezvous for rigid semi-synchronous execution, no unit
//! agreement, lights visible to their owner only.
//!
//! The distance thresholds 1, 1/2 and 1/4 are in the observer's own unit;
//! the trick of the protocol is to use that private unit as a computational
//! tool. The two "side" states remember where the other robot was last seen,
//! so a detected side switch reveals that both robots moved.

use crate::light::{LightAlphabet, LightId, Visibility};
use crate::scalar::{rat, Scalar};
use crate::snapshot::{Side, Snapshot};

use super::{scaled, Protocol, ProtocolOutput};

pub const START: LightId = LightId(0);
pub const S1: LightId = LightId(1);
pub const TWO_LEFT: LightId = LightId(2);
pub const TWO_RIGHT: LightId = LightId(3);
pub const S3: LightId = LightId(4);
pub const FINISH: LightId = LightId(5);

pub fn alphabet() -> LightAlphabet {
    LightAlphabet::new(
        "alg1",
        &["S_start", "S_1", "S_2left", "S_2right", "S_3", "S_finish"],
        START,
    )
}

fn two(side: Side) -> LightId {
    match side {
        Side::Left => TWO_LEFT,
        Side::Right => TWO_RIGHT,
    }
}

fn stored_side(light: LightId) -> Option<Side> {
    match light {
        TWO_LEFT => Some(Side::Left),
        TWO_RIGHT => Some(Side::Right),
        _ => None,
    }
}

/// One Compute phase. The visible light is the robot's own.
pub fn step(snapshot: &Snapshot) -> ProtocolOutput {
    let me = snapshot.light();
    let dist = &snapshot.dist;
    let other = &snapshot.other_local;

    if dist.is_zero() {
        return ProtocolOutput::terminate(me);
    }
    // dist > 0, so a side always resolves.
    let dir = snapshot.side().expect("nonzero distance has a side");

    let one = Scalar::one();
    let half = rat(1, 2);
    let quarter = rat(1, 4);

    match me {
        START => {
            if *dist < one {
                // Move away so the other robot lands at own-unit distance
                // exactly 1.
                let lambda = &one - &(&one / dist);
                ProtocolOutput::move_to(S1, scaled(other, &lambda))
            } else {
                ProtocolOutput::move_to(two(dir), other.clone())
            }
        }
        S1 => {
            if *dist <= one {
                ProtocolOutput::stay(FINISH)
            } else {
                ProtocolOutput::move_to(two(dir), other.clone())
            }
        }
        TWO_LEFT | TWO_RIGHT => {
            let stored = stored_side(me).unwrap();
            if dir == stored {
                ProtocolOutput::move_to(FINISH, other.clone())
            } else if *dist < half {
                // side switch detected
                ProtocolOutput::stay(FINISH)
            } else {
                let next = if *dist < one { S3 } else { me };
                ProtocolOutput::move_to(next, scaled(other, &half))
            }
        }
        S3 => {
            if *dist < quarter {
                ProtocolOutput::stay(FINISH)
            } else {
                ProtocolOutput::move_to(FINISH, other.clone())
            }
        }
        FINISH => {
            if *dist <= one {
                ProtocolOutput::stay(FINISH)
            } else {
                ProtocolOutput::move_to(FINISH, other.clone())
            }
        }
        other => panic!("light {:?} outside the six-state alphabet", other),
    }
}

/// The six-state protocol as a registry entry.
pub struct SixState;

impl Protocol for SixState {
    fn name(&self) -> &str {
        "alg1-fstate-6"
    }

    fn alphabet(&self) -> &LightAlphabet {
        static ALPHABET: std::sync::OnceLock<LightAlphabet> = std::sync::OnceLock::new();
        ALPHABET.get_or_init(alphabet)
    }

    fn visibility(&self) -> Visibility {
        Visibility::FState
    }

    fn compute(&self, snapshot: &Snapshot, _delta_local: Option<&Scalar>) -> ProtocolOutput {
        step(snapshot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snap(light: LightId, x: Scalar) -> Snapshot {
        let dist = x.abs();
        Snapshot {
            other_local: (x, Scalar::zero()),
            dist,
            visible_light: Some(light),
        }
    }

    fn snap_y(light: LightId, y: Scalar) -> Snapshot {
        let dist = y.abs();
        Snapshot {
            other_local: (Scalar::zero(), y),
            dist,
            visible_light: Some(light),
        }
    }

    #[test]
    fn start_far_chases_and_remembers_side() {
        let out = step(&snap(START, rat(3, 2)));
        assert_eq!(out.next_light, TWO_RIGHT);
        assert_eq!(out.dest_local, (rat(3, 2), Scalar::zero()));
        assert!(!out.terminate);

        let out = step(&snap(START, rat(-3, 2)));
        assert_eq!(out.next_light, TWO_LEFT);
        assert_eq!(out.dest_local, (rat(-3, 2), Scalar::zero()));
    }

    #[test]
    fn start_close_backs_off_to_distance_one() {
        let out = step(&snap(START, rat(1, 2)));
        assert_eq!(out.next_light, S1);
        assert_eq!(out.dest_local, (rat(-1, 2), Scalar::zero()));
        // After the move the own-unit distance to the other robot is exactly 1.
        let landing = (&rat(1, 2) - &rat(-1, 2)).abs();
        assert_eq!(landing, Scalar::one());
    }

    #[test]
    fn side_switch_close_stops() {
        let out = step(&snap(TWO_LEFT, rat(1, 3)));
        assert_eq!(out.next_light, FINISH);
        assert!(out.is_stay());
        assert!(!out.terminate);
    }

    #[test]
    fn coincident_terminates_in_any_light() {
        for light in [START, S1, TWO_LEFT, TWO_RIGHT, S3, FINISH] {
            let out = step(&snap(light, Scalar::zero()));
            assert!(out.terminate);
            assert!(out.is_stay());
        }
    }

    #[test]
    fn y_tiebreak_matches_x_behaviour() {
        // A robot whose frame maps the line onto its y-axis resolves sides
        // through the y sign.
        let out = step(&snap_y(START, Scalar::from_int(5)));
        assert_eq!(out.next_light, TWO_RIGHT);
        assert_eq!(out.dest_local, (Scalar::zero(), Scalar::from_int(5)));

        let out = step(&snap_y(START, Scalar::from_int(-5)));
        assert_eq!(out.next_light, TWO_LEFT);
    }

    /// Exhaustive decision table over interval representatives. Expected
    /// rows are hand-derived from the branch structure: for each own light
    /// and representative distance d (side: other seen on the right), the
    /// pair is (next light, λ) with destination λ·other.
    #[test]
    fn decision_table() {
        let d0 = rat(1, 8); // (0, 1/4)
        let d1 = rat(1, 4); // [1/4, 1/2)
        let d2 = rat(1, 2); // [1/2, 1)
        let d3 = Scalar::one(); // {1}
        let d4 = rat(3, 2); // (1, ∞)

        // (light, dist, expected next, expected λ)
        let table: Vec<(LightId, Scalar, LightId, Scalar)> = vec![
            (START, d0.clone(), S1, &Scalar::one() - &(Scalar::one() / d0.clone())),
            (START, d1.clone(), S1, &Scalar::one() - &(Scalar::one() / d1.clone())),
            (START, d2.clone(), S1, Scalar::from_int(-1)),
            (START, d3.clone(), TWO_RIGHT, Scalar::one()),
            (START, d4.clone(), TWO_RIGHT, Scalar::one()),
            (S1, d0.clone(), FINISH, Scalar::zero()),
            (S1, d1.clone(), FINISH, Scalar::zero()),
            (S1, d2.clone(), FINISH, Scalar::zero()),
            (S1, d3.clone(), FINISH, Scalar::zero()),
            (S1, d4.clone(), TWO_RIGHT, Scalar::one()),
            // Same side stored (seen right, stored right): chase.
            (TWO_RIGHT, d0.clone(), FINISH, Scalar::one()),
            (TWO_RIGHT, d4.clone(), FINISH, Scalar::one()),
            // Switched side (seen right, stored left).
            (TWO_LEFT, d0.clone(), FINISH, Scalar::zero()),
            (TWO_LEFT, d1.clone(), FINISH, Scalar::zero()),
            (TWO_LEFT, d2.clone(), S3, rat(1, 2)),
            (TWO_LEFT, d3.clone(), TWO_LEFT, rat(1, 2)),
            (TWO_LEFT, d4.clone(), TWO_LEFT, rat(1, 2)),
            (S3, d0.clone(), FINISH, Scalar::zero()),
            (S3, d1.clone(), FINISH, Scalar::one()),
            (S3, d2.clone(), FINISH, Scalar::one()),
            (S3, d3.clone(), FINISH, Scalar::one()),
            (S3, d4.clone(), FINISH, Scalar::one()),
            (FINISH, d0.clone(), FINISH, Scalar::zero()),
            (FINISH, d3.clone(), FINISH, Scalar::zero()),
            (FINISH, d4.clone(), FINISH, Scalar::one()),
        ];

        for (light, dist, want_light, want_lambda) in table {
            let s = snap(light, dist.clone());
            let out = step(&s);
            assert_eq!(
                out.next_light, want_light,
                "light {:?} dist {} -> wrong next light",
                light, dist
            );
            let want_dest = (&dist * &want_lambda, Scalar::zero());
            assert_eq!(
                out.dest_local, want_dest,
                "light {:?} dist {} -> wrong destination",
                light, dist
            );
            assert!(!out.terminate);
        }

        // Mirror: sides swap but the branch taken is the same one.
        let out_r = step(&snap(TWO_RIGHT, rat(1, 3)));
        let out_l = step(&snap(TWO_LEFT, rat(-1, 3)));
        assert_eq!(out_r.next_light, out_l.next_light);
    }

    #[test]
    fn landing_property_from_start() {
        // From S_start with dist < 1 the computed destination puts the robot
        // at own-unit distance exactly 1 from the other's observed position.
        for num in 1..20 {
            let d = rat(num, 20);
            if d >= Scalar::one() {
                continue;
            }
            let out = step(&snap(START, d.clone()));
            let landing = (&d - &out.dest_local.0).abs();
            assert_eq!(landing, Scalar::one(), "dist {}", d);
        }
    }
}
