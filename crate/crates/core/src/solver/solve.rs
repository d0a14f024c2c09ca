//! The generic certify-and-count pipeline.
//!
//! One Groebner basis per instance; eliminants for the chart coordinates
//! are tried in lexicographic order and the first one of full degree and
//! square-free is accepted (its Sturm count is then in bijection with the
//! real solutions). Eliminants of lower degree mean the chart missed
//! solutions, higher multiplicity shows up as a square factor; both trigger
//! the deterministic perturbation fallback.

use crate::elimination::{Eliminant, EliminationContext};
use crate::error::Result;
use crate::solver::perturb::perturb_flags;
use crate::solver::{
    build_equations, Instance, PerturbationRecord, SolveOutcome, SolveStatus,
};
use crate::unipoly::{count_real_roots, is_squarefree, UniPoly};

const MAX_PERTURBATION_ROUNDS: u32 = 3;

fn certified_eliminant(instance: &Instance, degree: usize) -> Result<Option<(usize, UniPoly)>> {
    let system = build_equations(instance)?;
    let ctx = EliminationContext::new(&system.generators)?;
    for var in 0..system.nvars {
        if let Eliminant::Poly(f) = ctx.eliminant(var) {
            if f.degree() == Some(degree) && is_squarefree(&f)? {
                return Ok(Some((var, f)));
            }
        }
    }
    Ok(None)
}

/// Solves an instance: certified real-root count or a Failed outcome; never
/// panics on degenerate geometry.
pub fn solve_instance(instance: &Instance) -> SolveOutcome {
    let degree = instance.problem().degree() as usize;
    for round in 0..=MAX_PERTURBATION_ROUNDS {
        let attempt = if round == 0 {
            instance.clone()
        } else {
            let flags = perturb_flags(instance.flags(), round - 1);
            match Instance::new(
                instance.problem().clone(),
                flags,
                instance.chart().clone(),
            ) {
                Ok(inst) => inst,
                Err(e) => return SolveOutcome::failed(degree, e.to_string()),
            }
        };
        match certified_eliminant(&attempt, degree) {
            Err(e) => return SolveOutcome::failed(degree, e.to_string()),
            Ok(None) => continue,
            Ok(Some((var, eliminant))) => {
                let real_count = match count_real_roots(&eliminant, None) {
                    Ok(c) => c,
                    Err(e) => return SolveOutcome::failed(degree, e.to_string()),
                };
                let status = if round == 0 {
                    SolveStatus::Certified
                } else {
                    SolveStatus::CertifiedAfterPerturbation(PerturbationRecord { rounds: round })
                };
                debug_assert!(real_count <= degree);
                debug_assert_eq!(real_count % 2, degree % 2);
                return SolveOutcome {
                    real_count,
                    degree,
                    eliminant_variable: var,
                    status,
                };
            }
        }
    }
    SolveOutcome::failed(
        degree,
        format!("no coordinate yielded a certified eliminant after {MAX_PERTURBATION_ROUNDS} perturbation rounds"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::FlagSpec;
    use crate::rational::rat_int;
    use crate::schubert::SchubertProblem;
    use crate::solver::Chart;

    fn secant(n: usize, values: &[i64]) -> FlagSpec {
        FlagSpec::secant(n, values.iter().map(|&v| rat_int(v)).collect()).unwrap()
    }

    #[test]
    fn conjecture_instance_all_real() {
        // Consecutive triples from 1..18: disjoint secancy intervals.
        let problem = SchubertProblem::parse("2 5 1^6").unwrap();
        let flags: Vec<FlagSpec> = (0..6)
            .map(|i| secant(5, &[3 * i + 1, 3 * i + 2, 3 * i + 3]))
            .collect();
        let inst = Instance::new(problem, flags, Chart::Standard).unwrap();
        assert_eq!(inst.overlap().unwrap(), 0);
        let outcome = solve_instance(&inst);
        assert_eq!(outcome.status, SolveStatus::Certified);
        assert_eq!(outcome.degree, 5);
        assert_eq!(outcome.real_count, 5);
    }

    #[test]
    fn disjoint_pairs_on_g24() {
        let problem = SchubertProblem::parse("2 4 1^4").unwrap();
        let flags: Vec<FlagSpec> = (0..4).map(|i| secant(4, &[2 * i + 1, 2 * i + 2])).collect();
        let inst = Instance::new(problem, flags, Chart::Standard).unwrap();
        let outcome = solve_instance(&inst);
        assert_eq!(outcome.status, SolveStatus::Certified);
        assert_eq!(outcome.real_count, 2);
    }

    #[test]
    fn crossing_pairs_can_be_complex() {
        // An even-interval crossing configuration with zero real solutions;
        // the count is confirmed by the four-lines discriminant path in the
        // fourlines module tests.
        let problem = SchubertProblem::parse("2 4 1^4").unwrap();
        let flags = vec![
            secant(4, &[1, 5]),
            secant(4, &[2, 6]),
            secant(4, &[3, 7]),
            secant(4, &[4, 8]),
        ];
        let inst = Instance::new(problem, flags, Chart::Standard).unwrap();
        let outcome = solve_instance(&inst);
        assert!(outcome.is_certified());
        assert_eq!(outcome.degree, 2);
        assert_eq!(outcome.real_count % 2, 0);
    }

    #[test]
    fn one_osculating_chart_solves() {
        let problem = SchubertProblem::parse("2 5 1^6").unwrap();
        let mut flags = vec![FlagSpec::osculating(5, crate::flags::CurvePoint::Infinity)];
        for i in 0..5 {
            flags.push(secant(5, &[3 * i + 1, 3 * i + 2, 3 * i + 3]));
        }
        let inst = Instance::new(problem, flags, Chart::OneOsculatingAtInfinity(0)).unwrap();
        let outcome = solve_instance(&inst);
        assert!(outcome.is_certified());
        assert_eq!(outcome.degree, 5);
        assert_eq!(outcome.real_count, 5);
    }

    #[test]
    fn degenerate_instance_perturbs() {
        // Two conditions sharing a secancy point make the intersection
        // non-transversal in a way the eliminant detects; the perturbation
        // fallback must still certify.
        let problem = SchubertProblem::parse("2 4 1^4").unwrap();
        let flags = vec![
            secant(4, &[1, 2]),
            secant(4, &[2, 3]),
            secant(4, &[5, 6]),
            secant(4, &[7, 8]),
        ];
        // Coincident points across flags: the configuration is excluded
        // from overlap statistics but the solver still runs.
        let inst = Instance::new(problem, flags, Chart::Standard).unwrap();
        let outcome = solve_instance(&inst);
        assert!(outcome.is_certified());
        assert_eq!(outcome.real_count % 2, 0);
    }
}
