//! The overlap number of a configuration of secancy point sets on the
//! circle.
//!
//! The curve is topologically a circle (the reals plus a point at infinity).
//! Cutting at a point away from the configuration linearizes it; each
//! group's interval is the convex hull of its points in that linear order
//! and contributes the number of foreign points (with multiplicity) strictly
//! inside. The overlap number is the minimum of those sums over all cuts,
//! and only the gaps between cyclically consecutive distinct points matter.

use crate::error::{Error, Result};
use crate::flags::{CurvePoint, FlagKind, FlagSpec};
use crate::schubert::{relevant_dimension, SchubertProblem};

/// Groups of circle points with multiplicities. Points are pairwise
/// distinct across the whole configuration; multiplicities above 1 arise
/// only from osculating flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    groups: Vec<Vec<(CurvePoint, usize)>>,
}

impl PointConfiguration {
    pub fn new(groups: Vec<Vec<(CurvePoint, usize)>>) -> Result<Self> {
        let mut all: Vec<&CurvePoint> = Vec::new();
        for group in &groups {
            if group.is_empty() {
                return Err(Error::InvalidFlag("empty point group".into()));
            }
            for (p, mult) in group {
                if *mult == 0 {
                    return Err(Error::InvalidFlag("zero multiplicity".into()));
                }
                if all.contains(&p) {
                    return Err(Error::CoincidentPoints);
                }
                all.push(p);
            }
        }
        Ok(PointConfiguration { groups })
    }

    pub fn groups(&self) -> &[Vec<(CurvePoint, usize)>] {
        &self.groups
    }

    /// Minimum over all cuts of the total foreign-point count inside the
    /// groups' intervals.
    pub fn overlap_number(&self) -> usize {
        // Flatten: (point index in sorted circle order, group, multiplicity).
        let mut flat: Vec<(&CurvePoint, usize, usize)> = self
            .groups
            .iter()
            .enumerate()
            .flat_map(|(g, group)| group.iter().map(move |(p, m)| (p, g, *m)))
            .collect();
        flat.sort_by(|a, b| a.0.cmp(b.0));
        let n = flat.len();
        if n <= 1 {
            return 0;
        }

        let mut best = usize::MAX;
        // Cut c sits in the gap after sorted position c; the linear order
        // then starts at position c + 1 (mod n).
        for cut in 0..n {
            let start = (cut + 1) % n;
            let position = |sorted_idx: usize| (sorted_idx + n - start) % n;

            let mut sum = 0usize;
            for (g, _) in self.groups.iter().enumerate() {
                let mut lo = usize::MAX;
                let mut hi = 0usize;
                for (idx, &(_, pg, _)) in flat.iter().enumerate() {
                    if pg == g {
                        let pos = position(idx);
                        lo = lo.min(pos);
                        hi = hi.max(pos);
                    }
                }
                for (idx, &(_, pg, mult)) in flat.iter().enumerate() {
                    if pg != g {
                        let pos = position(idx);
                        if lo < pos && pos < hi {
                            sum += mult;
                        }
                    }
                }
            }
            best = best.min(sum);
            if best == 0 {
                break;
            }
        }
        best
    }
}

/// Builds the point configuration of an instance: secant flags contribute
/// their points with multiplicity 1, osculating flags one point with
/// multiplicity equal to the relevant-subspace dimension, generalized
/// secant flags each anchor with its order, and cosecant flags their points
/// with multiplicity 1.
pub fn instance_configuration(
    problem: &SchubertProblem,
    flags: &[FlagSpec],
) -> Result<PointConfiguration> {
    if flags.len() != problem.conditions().len() {
        return Err(Error::InvalidInstance(format!(
            "{} flags for {} conditions",
            flags.len(),
            problem.conditions().len()
        )));
    }
    let mut groups = Vec::with_capacity(flags.len());
    for (condition, flag) in problem.conditions().iter().zip(flags) {
        let dim = relevant_dimension(condition, problem.k(), problem.n())?;
        let group: Vec<(CurvePoint, usize)> = match &flag.kind {
            FlagKind::Secant { points } => {
                if points.len() != dim {
                    return Err(Error::InvalidInstance(format!(
                        "secant flag with {} points for a condition needing {dim}",
                        points.len()
                    )));
                }
                points
                    .iter()
                    .map(|p| (CurvePoint::Finite(p.clone()), 1))
                    .collect()
            }
            FlagKind::Osculating { point } => vec![(point.clone(), dim)],
            FlagKind::GeneralizedSecant { anchors } => {
                let total: usize = anchors.iter().map(|(_, o)| o).sum();
                if total != dim {
                    return Err(Error::InvalidInstance(format!(
                        "generalized secant flag with {total} rows for a condition needing {dim}"
                    )));
                }
                anchors
                    .iter()
                    .map(|(p, o)| (CurvePoint::Finite(p.clone()), *o))
                    .collect()
            }
            FlagKind::Cosecant { points } => points
                .iter()
                .map(|p| (CurvePoint::Finite(p.clone()), 1))
                .collect(),
        };
        groups.push(group);
    }
    PointConfiguration::new(groups)
}

/// Overlap number of an instance's secancy configuration.
pub fn overlap_for_instance(problem: &SchubertProblem, flags: &[FlagSpec]) -> Result<usize> {
    Ok(instance_configuration(problem, flags)?.overlap_number())
}
