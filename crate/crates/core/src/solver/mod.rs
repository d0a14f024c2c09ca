//! From instances to certified real-solution counts.
//!
//! The generic path builds determinantal equations in a local chart,
//! eliminates to a univariate polynomial, certifies it (degree equal to the
//! problem degree and square-free), and counts real roots. Two specialized
//! pipelines handle the four-secant-lines problem and the gap family, both
//! via the graph-map reduction to an eigenvalue problem.

pub mod equations;
pub mod fourlines;
pub mod gap;
mod perturb;
mod solve;

pub use equations::{build_equations, EquationSystem};
pub use fourlines::{
    enumerate_chord_configurations, has_odd_interval, solve_four_lines, ChordConfiguration,
};
pub use gap::{gap_predicted_count, solve_gap_auxiliary, solve_gap_problem, AuxiliaryOutcome};
pub use solve::solve_instance;

use crate::error::{Error, Result};
use crate::flags::{CurvePoint, FlagKind, FlagSpec};
use crate::schubert::{relevant_dimension, SchubertProblem};

/// Local coordinates used to model an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chart {
    /// H = (I_k : X) with k(n-k) unknowns.
    Standard,
    /// Schubert-cell chart adapted to one osculating flag at infinity; the
    /// index names the condition it absorbs.
    OneOsculatingAtInfinity(usize),
    /// Chart adapted to osculating flags at infinity and at zero.
    TwoOsculating { at_infinity: usize, at_zero: usize },
}

impl Chart {
    /// Condition indices the chart absorbs (no equations are generated for
    /// them).
    pub fn absorbed(&self) -> Vec<usize> {
        match self {
            Chart::Standard => Vec::new(),
            Chart::OneOsculatingAtInfinity(i) => vec![*i],
            Chart::TwoOsculating {
                at_infinity,
                at_zero,
            } => vec![*at_infinity, *at_zero],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Chart::Standard => "standard",
            Chart::OneOsculatingAtInfinity(_) => "one-osculating-infinity",
            Chart::TwoOsculating { .. } => "two-osculating",
        }
    }
}

/// A fully specified geometric problem: one flag per condition plus the
/// chart to model it in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    problem: SchubertProblem,
    flags: Vec<FlagSpec>,
    chart: Chart,
}

impl Instance {
    pub fn new(problem: SchubertProblem, flags: Vec<FlagSpec>, chart: Chart) -> Result<Self> {
        if flags.len() != problem.conditions().len() {
            return Err(Error::InvalidInstance(format!(
                "{} flags for {} conditions",
                flags.len(),
                problem.conditions().len()
            )));
        }
        for (idx, (condition, flag)) in problem.conditions().iter().zip(&flags).enumerate() {
            if flag.ambient != problem.n() {
                return Err(Error::InvalidInstance(format!(
                    "flag {idx} has ambient {} in a problem on G({}, {})",
                    flag.ambient,
                    problem.k(),
                    problem.n()
                )));
            }
            let dim = relevant_dimension(condition, problem.k(), problem.n())?;
            match &flag.kind {
                FlagKind::Secant { points } => {
                    if points.len() != dim {
                        return Err(Error::InvalidInstance(format!(
                            "flag {idx}: {} secant points, condition needs {dim}",
                            points.len()
                        )));
                    }
                }
                FlagKind::GeneralizedSecant { anchors } => {
                    let total: usize = anchors.iter().map(|(_, o)| o).sum();
                    if total != dim {
                        return Err(Error::InvalidInstance(format!(
                            "flag {idx}: {total} generalized-secant rows, condition needs {dim}"
                        )));
                    }
                }
                FlagKind::Osculating { .. } => {}
                FlagKind::Cosecant { points } => {
                    // The smallest referenced depth needs the most points.
                    let first_part = condition.part(0) as usize;
                    let min_depth = problem.n() - problem.k() + 1 - first_part;
                    if points.len() + min_depth < problem.n() {
                        return Err(Error::InvalidInstance(format!(
                            "flag {idx}: {} cosecant points cannot realize depth {min_depth}",
                            points.len()
                        )));
                    }
                }
            }
        }
        let check_osculating = |idx: usize, want: &CurvePoint| -> Result<()> {
            match flags.get(idx).map(|f| &f.kind) {
                Some(FlagKind::Osculating { point }) if point == want => Ok(()),
                _ => Err(Error::InvalidInstance(format!(
                    "chart expects an osculating flag at {want} in position {idx}"
                ))),
            }
        };
        match &chart {
            Chart::Standard => {}
            Chart::OneOsculatingAtInfinity(i) => check_osculating(*i, &CurvePoint::Infinity)?,
            Chart::TwoOsculating {
                at_infinity,
                at_zero,
            } => {
                if at_infinity == at_zero {
                    return Err(Error::InvalidInstance(
                        "two-osculating chart needs two distinct conditions".into(),
                    ));
                }
                check_osculating(*at_infinity, &CurvePoint::Infinity)?;
                check_osculating(
                    *at_zero,
                    &CurvePoint::Finite(crate::rational::rat_int(0)),
                )?;
            }
        }
        Ok(Instance {
            problem,
            flags,
            chart,
        })
    }

    /// Picks the chart matching the osculating flags present: two flags at
    /// infinity and zero give the two-osculating chart, one at infinity the
    /// one-osculating chart, anything else the standard chart.
    pub fn with_inferred_chart(problem: SchubertProblem, flags: Vec<FlagSpec>) -> Result<Self> {
        let zero = crate::rational::rat_int(0);
        let mut at_infinity = None;
        let mut at_zero = None;
        for (i, f) in flags.iter().enumerate() {
            if let FlagKind::Osculating { point } = &f.kind {
                match point {
                    CurvePoint::Infinity if at_infinity.is_none() => at_infinity = Some(i),
                    CurvePoint::Finite(v) if *v == zero && at_zero.is_none() => {
                        at_zero = Some(i)
                    }
                    _ => {}
                }
            }
        }
        let chart = match (at_infinity, at_zero) {
            (Some(a), Some(b)) => Chart::TwoOsculating {
                at_infinity: a,
                at_zero: b,
            },
            (Some(a), None) => Chart::OneOsculatingAtInfinity(a),
            _ => Chart::Standard,
        };
        Instance::new(problem, flags, chart)
    }

    pub fn problem(&self) -> &SchubertProblem {
        &self.problem
    }

    pub fn flags(&self) -> &[FlagSpec] {
        &self.flags
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn overlap(&self) -> Result<usize> {
        crate::overlap::overlap_for_instance(&self.problem, &self.flags)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationRecord {
    pub rounds: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Certified,
    CertifiedAfterPerturbation(PerturbationRecord),
    Failed(String),
}

impl SolveStatus {
    pub fn is_certified(&self) -> bool {
        !matches!(self, SolveStatus::Failed(_))
    }

    pub fn label(&self) -> String {
        match self {
            SolveStatus::Certified => "certified".into(),
            SolveStatus::CertifiedAfterPerturbation(r) => {
                format!("certified-after-perturbation({})", r.rounds)
            }
            SolveStatus::Failed(reason) => format!("failed: {reason}"),
        }
    }
}

/// A certified real-root count with eliminant metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub real_count: usize,
    pub degree: usize,
    pub eliminant_variable: usize,
    pub status: SolveStatus,
}

impl SolveOutcome {
    pub fn failed(degree: usize, reason: String) -> Self {
        SolveOutcome {
            real_count: 0,
            degree,
            eliminant_variable: 0,
            status: SolveStatus::Failed(reason),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status.is_certified()
    }
}
