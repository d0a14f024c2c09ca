//! Deterministic perturbation of secancy points.
//!
//! The j-th secancy point in the global ordering moves by epsilon * j with
//! epsilon = 2^-20 times the minimum gap between consecutive distinct
//! points (halved on every retry round). Strict ordering, and with it the
//! overlap number, is preserved; osculating anchors stay fixed because the
//! chart is pinned to them.

use num::bigint::BigInt;
use num::traits::One;

use crate::flags::{CurvePoint, FlagKind, FlagSpec};
use crate::rational::Rational;

fn two_pow_inverse(exp: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << (exp as usize))
}

/// Epsilon for a perturbation round, relative to the tightest gap among the
/// given landmarks (secancy points plus fixed anchors).
fn epsilon_for(landmarks: &mut Vec<Rational>, round: u32) -> Rational {
    landmarks.sort();
    landmarks.dedup();
    let min_gap = landmarks
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(|| Rational::one());
    min_gap * two_pow_inverse(20 + round)
}

/// Returns the flags with every secancy point p_j replaced by
/// p_j + epsilon * j, j being the 1-based rank of the point among all
/// secancy points.
pub fn perturb_flags(flags: &[FlagSpec], round: u32) -> Vec<FlagSpec> {
    let mut movable: Vec<Rational> = Vec::new();
    let mut landmarks: Vec<Rational> = Vec::new();
    for flag in flags {
        match &flag.kind {
            FlagKind::Secant { points } | FlagKind::Cosecant { points } => {
                movable.extend(points.iter().cloned());
                landmarks.extend(points.iter().cloned());
            }
            FlagKind::GeneralizedSecant { anchors } => {
                movable.extend(anchors.iter().map(|(p, _)| p.clone()));
                landmarks.extend(anchors.iter().map(|(p, _)| p.clone()));
            }
            FlagKind::Osculating { point } => {
                if let CurvePoint::Finite(v) = point {
                    landmarks.push(v.clone());
                }
            }
        }
    }
    if movable.is_empty() {
        return flags.to_vec();
    }
    let eps = epsilon_for(&mut landmarks, round);
    movable.sort();
    movable.dedup();
    let shift = |p: &Rational| -> Rational {
        let rank = movable.iter().position(|q| q == p).expect("point present") + 1;
        p + &(&eps * Rational::from_integer(BigInt::from(rank)))
    };

    flags
        .iter()
        .map(|flag| {
            let kind = match &flag.kind {
                FlagKind::Secant { points } => FlagKind::Secant {
                    points: points.iter().map(&shift).collect(),
                },
                FlagKind::Cosecant { points } => FlagKind::Cosecant {
                    points: points.iter().map(&shift).collect(),
                },
                FlagKind::GeneralizedSecant { anchors } => FlagKind::GeneralizedSecant {
                    anchors: anchors
                        .iter()
                        .map(|(p, o)| (shift(p), *o))
                        .collect(),
                },
                FlagKind::Osculating { point } => FlagKind::Osculating {
                    point: point.clone(),
                },
            };
            FlagSpec {
                kind,
                ambient: flag.ambient,
            }
        })
        .collect()
}

/// Perturbs a sorted point list directly (the four-lines pipeline works on
/// raw points rather than flag specs).
pub fn perturb_points(points: &[Rational], round: u32) -> Vec<Rational> {
    let mut landmarks = points.to_vec();
    let eps = epsilon_for(&mut landmarks, round);
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.dedup();
    points
        .iter()
        .map(|p| {
            let rank = sorted.iter().position(|q| q == p).unwrap() + 1;
            p + &(&eps * Rational::from_integer(BigInt::from(rank)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn ordering_preserved() {
        let points: Vec<Rational> = (1..=8).map(rat_int).collect();
        let moved = perturb_points(&points, 0);
        assert!(moved.windows(2).all(|w| w[0] < w[1]));
        assert_ne!(points, moved);
        // Displacements are tiny relative to the gaps.
        for (a, b) in points.iter().zip(&moved) {
            let delta = b - a;
            assert!(delta > Rational::from_integer(0.into()));
            assert!(delta < crate::rational::rat(1, 1000));
        }
    }

    #[test]
    fn rounds_shrink_epsilon() {
        let points: Vec<Rational> = (1..=4).map(rat_int).collect();
        let first = perturb_points(&points, 0);
        let second = perturb_points(&points, 1);
        let d0 = &first[0] - &points[0];
        let d1 = &second[0] - &points[0];
        assert_eq!(d0, &d1 * rat_int(2));
    }

    #[test]
    fn secant_flags_stay_sorted_and_osculating_fixed() {
        let flags = vec![
            FlagSpec::secant(5, vec![rat_int(1), rat_int(2), rat_int(3)]).unwrap(),
            FlagSpec::osculating(5, CurvePoint::Infinity),
            FlagSpec::secant(5, vec![rat_int(4), rat_int(5), rat_int(6)]).unwrap(),
        ];
        let moved = perturb_flags(&flags, 0);
        match &moved[0].kind {
            FlagKind::Secant { points } => {
                assert!(points.windows(2).all(|w| w[0] < w[1]));
                assert_ne!(points[0], rat_int(1));
            }
            _ => panic!("kind changed"),
        }
        assert_eq!(moved[1], flags[1]);
    }

    #[test]
    fn anchor_at_zero_not_crossed() {
        // A movable point just left of the fixed anchor at 0 must not cross
        // it: the anchor participates in the gap computation.
        let flags = vec![
            FlagSpec::secant(4, vec![crate::rational::rat(-1, 1024), rat_int(1)]).unwrap(),
            FlagSpec::osculating(4, CurvePoint::Finite(rat_int(0))),
        ];
        let moved = perturb_flags(&flags, 0);
        match &moved[0].kind {
            FlagKind::Secant { points } => {
                assert!(points[0] < rat_int(0));
            }
            _ => unreachable!(),
        }
    }
}
