//! Lines meeting four secant lines of the rational normal curve in P^3.
//!
//! Chord configurations are pairings of 8 cyclic positions into 4 chords up
//! to the dihedral symmetry of the circle; there are 17 classes. A chord
//! whose arc holds an odd number of foreign endpoints forces both solutions
//! real (the curve crosses the quadric through the other three lines an odd
//! number of times between the chord's endpoints). The solve path is the
//! n = 2 graph-map reduction: a quadratic eliminant whose discriminant sign
//! decides between 0 and 2 real solutions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::flags::{moment_point, FlagKind, FlagMatrix, FlagSpec};
use crate::rational::Rational;
use crate::solver::gap::solve_gap_auxiliary;
use crate::solver::perturb::perturb_points;
use crate::solver::{PerturbationRecord, SolveOutcome, SolveStatus};

/// A pairing of the 8 cyclic positions 0..8 into 4 unordered chords, stored
/// as the lexicographic minimum over the 16 dihedral relabelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChordConfiguration {
    pairs: [(u8, u8); 4],
}

fn normalize(mut pairs: [(u8, u8); 4]) -> [(u8, u8); 4] {
    for p in pairs.iter_mut() {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    pairs.sort();
    pairs
}

fn canonical(pairs: [(u8, u8); 4]) -> [(u8, u8); 4] {
    let mut best: Option<[(u8, u8); 4]> = None;
    for rotation in 0..8u8 {
        for flip in [false, true] {
            let map = |p: u8| -> u8 {
                let p = if flip { (8 - p) % 8 } else { p };
                (p + rotation) % 8
            };
            let image = normalize([
                (map(pairs[0].0), map(pairs[0].1)),
                (map(pairs[1].0), map(pairs[1].1)),
                (map(pairs[2].0), map(pairs[2].1)),
                (map(pairs[3].0), map(pairs[3].1)),
            ]);
            best = Some(match best {
                None => image,
                Some(b) => b.min(image),
            });
        }
    }
    best.unwrap()
}

impl ChordConfiguration {
    /// Builds the canonical representative of a pairing of 0..8.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        if pairs.len() != 4 {
            return Err(Error::Parse("need exactly 4 chords".into()));
        }
        let mut seen = [false; 8];
        let mut raw = [(0u8, 0u8); 4];
        for (slot, &(a, b)) in raw.iter_mut().zip(pairs) {
            if a >= 8 || b >= 8 || a == b {
                return Err(Error::Parse(format!("bad chord ({a}, {b})")));
            }
            if seen[a] || seen[b] {
                return Err(Error::Parse("positions reused across chords".into()));
            }
            seen[a] = true;
            seen[b] = true;
            *slot = (a as u8, b as u8);
        }
        Ok(ChordConfiguration {
            pairs: canonical(raw),
        })
    }

    /// Canonical pairing, pairs sorted, each pair (low, high).
    pub fn pairs(&self) -> [(usize, usize); 4] {
        self.pairs.map(|(a, b)| (a as usize, b as usize))
    }

    /// "1-2,3-4,5-6,7-8" with 1-based positions.
    pub fn parse(text: &str) -> Result<Self> {
        let pairs = text
            .split(',')
            .map(|chunk| {
                let (a, b) = chunk
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad chord `{chunk}`")))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad position `{a}`")))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad position `{b}`")))?;
                if a == 0 || b == 0 {
                    return Err(Error::Parse("positions are 1-based".into()));
                }
                Ok((a - 1, b - 1))
            })
            .collect::<Result<Vec<_>>>()?;
        ChordConfiguration::from_pairs(&pairs)
    }

    pub fn disjoint() -> Self {
        ChordConfiguration::from_pairs(&[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap()
    }

    pub fn nested() -> Self {
        ChordConfiguration::from_pairs(&[(0, 7), (1, 6), (2, 5), (3, 4)]).unwrap()
    }
}

impl std::fmt::Display for ChordConfiguration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect();
        write!(f, "{}", text.join(","))
    }
}

/// All pairings of 8 cyclic points into 4 chords up to rotation, reflection
/// and chord relabeling; exactly 17.
pub fn enumerate_chord_configurations() -> Vec<ChordConfiguration> {
    fn matchings(free: &mut Vec<u8>, acc: &mut Vec<(u8, u8)>, out: &mut BTreeSet<[(u8, u8); 4]>) {
        if free.is_empty() {
            out.insert(canonical([acc[0], acc[1], acc[2], acc[3]]));
            return;
        }
        let a = free[0];
        for i in 1..free.len() {
            let b = free[i];
            let mut rest: Vec<u8> = free
                .iter()
                .copied()
                .filter(|&p| p != a && p != b)
                .collect();
            acc.push((a, b));
            matchings(&mut rest, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    matchings(&mut (0..8).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|pairs| ChordConfiguration { pairs })
        .collect()
}

/// True iff some chord's arc contains an odd number of the other chords'
/// endpoints (odd on one arc iff odd on the other, 6 being even).
pub fn has_odd_interval(config: &ChordConfiguration) -> bool {
    let pairs = config.pairs();
    pairs.iter().any(|&(a, b)| {
        let inside = pairs
            .iter()
            .filter(|&&other| other != (a, b))
            .flat_map(|&(c, d)| [c, d])
            .filter(|&p| a < p && p < b)
            .count();
        inside % 2 == 1
    })
}

/// Secant lines through consecutive curve points per the pairing, solved by
/// the quadratic eliminant of the graph-map reduction. The pairing is taken
/// as given (not canonicalized), so arbitrary instances can be routed here.
pub(crate) fn solve_secant_lines(points: &[Rational], pairs: &[(usize, usize)]) -> SolveOutcome {
    if points.len() != 8 || points.windows(2).any(|w| w[0] >= w[1]) {
        return SolveOutcome::failed(2, "need 8 strictly increasing points".into());
    }
    const MAX_ROUNDS: u32 = 3;
    for round in 0..=MAX_ROUNDS {
        let pts = if round == 0 {
            points.to_vec()
        } else {
            perturb_points(points, round - 1)
        };
        let planes: Result<Vec<FlagMatrix>> = pairs
            .iter()
            .map(|&(a, b)| {
                FlagMatrix::new(
                    4,
                    vec![moment_point(&pts[a], 4), moment_point(&pts[b], 4)],
                )
            })
            .collect();
        let Ok(planes) = planes else { continue };
        let aux = solve_gap_auxiliary(&planes);
        if !aux.status.is_certified() {
            continue;
        }
        let status = match (round, &aux.status) {
            (0, SolveStatus::Certified) => SolveStatus::Certified,
            (r, SolveStatus::Certified) => {
                SolveStatus::CertifiedAfterPerturbation(PerturbationRecord { rounds: r })
            }
            (_, other) => other.clone(),
        };
        return SolveOutcome {
            real_count: aux.real,
            degree: 2,
            eliminant_variable: 0,
            status,
        };
    }
    SolveOutcome::failed(2, "degenerate four-lines instance after perturbation".into())
}

/// Real lines meeting the four secant lines given by the configuration on
/// the sorted points; the count is 0 or 2 by the discriminant sign.
pub fn solve_four_lines(points: &[Rational], config: &ChordConfiguration) -> SolveOutcome {
    solve_secant_lines(points, &config.pairs())
}

/// Extracts the point list and pairing from four 2-point secant flags, for
/// routing instances through the specialized path.
pub fn secant_pair_instance(flags: &[FlagSpec]) -> Result<(Vec<Rational>, Vec<(usize, usize)>)> {
    if flags.len() != 4 {
        return Err(Error::InvalidInstance("need 4 flags".into()));
    }
    let mut all: Vec<(Rational, usize)> = Vec::new();
    for (i, flag) in flags.iter().enumerate() {
        match &flag.kind {
            FlagKind::Secant { points } if points.len() == 2 => {
                all.push((points[0].clone(), i));
                all.push((points[1].clone(), i));
            }
            _ => {
                return Err(Error::InvalidInstance(
                    "expected 2-point secant flags".into(),
                ))
            }
        }
    }
    all.sort_by(|a, b| a.0.cmp(&b.0));
    if all.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::CoincidentPoints);
    }
    let points: Vec<Rational> = all.iter().map(|(p, _)| p.clone()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for flag_idx in 0..4 {
        let positions: Vec<usize> = all
            .iter()
            .enumerate()
            .filter_map(|(pos, (_, f))| (*f == flag_idx).then_some(pos))
            .collect();
        pairs.push((positions[0], positions[1]));
    }
    Ok((points, pairs))
}
