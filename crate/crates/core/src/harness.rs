//! Reproducible experiment driver.
//!
//! Instances are a pure function of (seed, index): each index derives its
//! own counter-based RNG, so splitting a run across workers or machines
//! cannot change results. Outcomes aggregate into frequency tables keyed by
//! (real solutions, overlap number); failures are tabulated in metadata,
//! never silently dropped.

use std::collections::BTreeMap;
use std::time::Instant;

use num::bigint::BigInt;
use num::traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::{CurvePoint, FlagKind, FlagSpec};
use crate::rational::{parse_rational, rat_int, Rational};
use crate::schubert::{relevant_dimension, Partition, SchubertProblem};
use crate::solver::fourlines::{secant_pair_instance, solve_secant_lines};
use crate::solver::gap::secant_planes;
use crate::solver::{solve_gap_problem, solve_instance, Chart, Instance, SolveOutcome};

/// Fixed denominator of sampled points: coordinates are i/64 with integer i.
const POINT_DENOMINATOR: i64 = 64;
/// Rejection budget for TargetOverlap sampling.
const TARGET_OVERLAP_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SamplingMode {
    /// Sorted points cut into consecutive blocks, one per flag, in a random
    /// flag order; all-secant instances get overlap number 0.
    DisjointIntervals,
    /// Points assigned to flags by a uniformly random partition.
    UniformShuffle,
    /// UniformShuffle rejection-sampled until the overlap number hits the
    /// target.
    TargetOverlap(usize),
}

impl SamplingMode {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "disjoint" => Ok(SamplingMode::DisjointIntervals),
            "shuffle" => Ok(SamplingMode::UniformShuffle),
            other => match other.strip_prefix("overlap=") {
                Some(v) => Ok(SamplingMode::TargetOverlap(v.parse().map_err(|_| {
                    Error::Parse(format!("bad overlap target `{other}`"))
                })?)),
                None => Err(Error::Parse(format!("unknown sampling mode `{other}`"))),
            },
        }
    }
}

impl std::fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SamplingMode::DisjointIntervals => write!(f, "disjoint"),
            SamplingMode::UniformShuffle => write!(f, "shuffle"),
            SamplingMode::TargetOverlap(v) => write!(f, "overlap={v}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub problem: SchubertProblem,
    /// 1, 2 or 3: the number of osculating flags is the type minus one,
    /// replacing the first conditions' flags (at infinity, then at zero).
    pub computation_type: u8,
    pub sampling_mode: SamplingMode,
    pub instance_count: u64,
    pub seed: u64,
    pub index_offset: u64,
    pub point_range: (Rational, Rational),
    pub worker_count: usize,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.computation_type) {
            return Err(Error::InvalidConfig(format!(
                "computation type {} not in 1..=3",
                self.computation_type
            )));
        }
        let osculating = self.computation_type as usize - 1;
        if self.problem.conditions().len() < osculating {
            return Err(Error::InvalidConfig(
                "not enough conditions for the computation type".into(),
            ));
        }
        if self.instance_count == 0 {
            return Err(Error::InvalidConfig("instance count must be positive".into()));
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidConfig("worker count must be positive".into()));
        }
        if self.point_range.0 >= self.point_range.1 {
            return Err(Error::InvalidConfig("empty point range".into()));
        }
        if self.computation_type >= 2
            && matches!(self.sampling_mode, SamplingMode::DisjointIntervals)
            && self.point_range.1 <= Rational::zero()
        {
            return Err(Error::InvalidConfig(
                "disjoint sampling with osculating anchors needs a positive point range".into(),
            ));
        }
        Ok(())
    }

    fn range_string(&self) -> String {
        format!("{}:{}", self.point_range.0, self.point_range.1)
    }
}

/// Parses "lo:hi" rational bounds.
pub fn parse_point_range(text: &str) -> Result<(Rational, Rational)> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad point range `{text}`")))?;
    Ok((parse_rational(lo)?, parse_rational(hi)?))
}

fn integer_bounds(range: &(Rational, Rational), positive_only: bool) -> Result<(i64, i64)> {
    let scale = rat_int(POINT_DENOMINATOR);
    let lo = (&range.0 * &scale).floor().to_integer();
    let hi = (&range.1 * &scale).ceil().to_integer();
    let to_i64 = |v: BigInt| -> Result<i64> {
        i64::try_from(v).map_err(|_| Error::InvalidConfig("point range too large".into()))
    };
    let mut lo = to_i64(lo)? + 1;
    let hi = to_i64(hi)? - 1;
    if positive_only {
        lo = lo.max(1);
    }
    if lo > hi {
        return Err(Error::InvalidConfig("point range too small".into()));
    }
    Ok((lo, hi))
}

/// Distinct points i/64 in draw order; zero is excluded whenever an
/// osculating anchor sits at the origin.
fn sample_points(
    rng: &mut ChaCha8Rng,
    count: usize,
    bounds: (i64, i64),
    exclude_zero: bool,
) -> Result<Vec<Rational>> {
    let (lo, hi) = bounds;
    let capacity = (hi - lo + 1) - i64::from(exclude_zero && lo <= 0 && 0 <= hi);
    if capacity < count as i64 {
        return Err(Error::InvalidConfig(format!(
            "point range holds {capacity} sample values, need {count}"
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let i = rng.random_range(lo..=hi);
        if (exclude_zero && i == 0) || !seen.insert(i) {
            continue;
        }
        out.push(Rational::new(BigInt::from(i), BigInt::from(POINT_DENOMINATOR)));
    }
    Ok(out)
}

/// Flag layout of a computation type: conditions replaced by osculating
/// flags, and the chart to model the instance in.
fn flag_layout(config: &ExperimentConfig) -> (Vec<Option<CurvePoint>>, Chart) {
    let m = config.problem.conditions().len();
    let mut anchors: Vec<Option<CurvePoint>> = vec![None; m];
    let chart = match config.computation_type {
        2 => {
            anchors[0] = Some(CurvePoint::Infinity);
            Chart::OneOsculatingAtInfinity(0)
        }
        3 => {
            anchors[0] = Some(CurvePoint::Infinity);
            anchors[1] = Some(CurvePoint::Finite(rat_int(0)));
            Chart::TwoOsculating {
                at_infinity: 0,
                at_zero: 1,
            }
        }
        _ => Chart::Standard,
    };
    (anchors, chart)
}

fn build_flags(
    config: &ExperimentConfig,
    rng: &mut ChaCha8Rng,
    disjoint: bool,
) -> Result<Vec<FlagSpec>> {
    let problem = &config.problem;
    let n = problem.n();
    let (anchors, _) = flag_layout(config);
    let secant_indices: Vec<usize> = (0..anchors.len()).filter(|&i| anchors[i].is_none()).collect();
    let sizes: Vec<usize> = secant_indices
        .iter()
        .map(|&i| relevant_dimension(&problem.conditions()[i], problem.k(), n))
        .collect::<Result<_>>()?;
    let total: usize = sizes.iter().sum();
    let positive_only = disjoint && config.computation_type >= 2;
    let bounds = integer_bounds(&config.point_range, positive_only)?;
    let mut points = sample_points(rng, total, bounds, config.computation_type >= 2)?;
    if disjoint {
        points.sort();
    }
    let mut order: Vec<usize> = (0..secant_indices.len()).collect();
    if disjoint {
        order.shuffle(rng);
    }

    let mut flag_points: Vec<Vec<Rational>> = vec![Vec::new(); secant_indices.len()];
    let mut cursor = 0;
    for &slot in &order {
        let size = sizes[slot];
        let mut chunk = points[cursor..cursor + size].to_vec();
        cursor += size;
        chunk.sort();
        flag_points[slot] = chunk;
    }

    let mut flags: Vec<Option<FlagSpec>> = vec![None; anchors.len()];
    for (slot, &idx) in secant_indices.iter().enumerate() {
        flags[idx] = Some(FlagSpec::secant(n, std::mem::take(&mut flag_points[slot]))?);
    }
    for (idx, anchor) in anchors.iter().enumerate() {
        if let Some(point) = anchor {
            flags[idx] = Some(FlagSpec::osculating(n, point.clone()));
        }
    }
    Ok(flags.into_iter().map(|f| f.expect("all flags placed")).collect())
}

/// Deterministic function of (seed, index): the index-th instance of the
/// experiment.
pub fn generate_instance(config: &ExperimentConfig, index: u64) -> Result<Instance> {
    config.validate()?;
    if index >= config.instance_count {
        return Err(Error::InvalidConfig(format!(
            "index {index} out of range for {} instances",
            config.instance_count
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (config.index_offset + index));
    let (_, chart) = flag_layout(config);
    match &config.sampling_mode {
        SamplingMode::DisjointIntervals => {
            let flags = build_flags(config, &mut rng, true)?;
            Instance::new(config.problem.clone(), flags, chart)
        }
        SamplingMode::UniformShuffle => {
            let flags = build_flags(config, &mut rng, false)?;
            Instance::new(config.problem.clone(), flags, chart)
        }
        SamplingMode::TargetOverlap(target) => {
            for _ in 0..TARGET_OVERLAP_BUDGET {
                let flags = build_flags(config, &mut rng, false)?;
                let inst = Instance::new(config.problem.clone(), flags, chart.clone())?;
                if inst.overlap()? == *target {
                    return Ok(inst);
                }
            }
            Err(Error::TargetOverlapUnreachable {
                budget: TARGET_OVERLAP_BUDGET,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub problem: String,
    pub computation_type: u8,
    pub sampling_mode: String,
    pub instance_count: u64,
    pub seed: u64,
    pub index_offset: u64,
    pub point_range: String,
    pub failures: u64,
    pub wall_time_ms: u128,
}

/// Counts indexed by (real solutions, overlap number).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrequencyTable {
    meta: TableMeta,
    cells: BTreeMap<(u64, u64), u64>,
}

/// Equality ignores wall time: tables from reruns of one config are equal.
impl PartialEq for FrequencyTable {
    fn eq(&self, other: &Self) -> bool {
        let strip = |m: &TableMeta| -> TableMeta {
            TableMeta {
                wall_time_ms: 0,
                ..m.clone()
            }
        };
        self.cells == other.cells && strip(&self.meta) == strip(&other.meta)
    }
}

impl Eq for FrequencyTable {}

impl FrequencyTable {
    pub fn new(meta: TableMeta) -> Self {
        FrequencyTable {
            meta,
            cells: BTreeMap::new(),
        }
    }

    pub fn meta(&self) -> &TableMeta {
        &self.meta
    }

    pub fn cells(&self) -> &BTreeMap<(u64, u64), u64> {
        &self.cells
    }

    pub fn record(&mut self, real: u64, overlap: u64) {
        *self.cells.entry((real, overlap)).or_insert(0) += 1;
    }

    pub fn record_failure(&mut self) {
        self.meta.failures += 1;
    }

    pub fn total_recorded(&self) -> u64 {
        self.cells.values().sum()
    }

    /// CSV with columns real_solutions,overlap,count sorted by key.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("real_solutions,overlap,count\n");
        for (&(real, overlap), &count) in &self.cells {
            out.push_str(&format!("{real},{overlap},{count}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Cell {
            real_solutions: u64,
            overlap: u64,
            count: u64,
        }
        #[derive(Serialize)]
        struct Export<'a> {
            meta: &'a TableMeta,
            cells: Vec<Cell>,
        }
        let export = Export {
            meta: &self.meta,
            cells: self
                .cells
                .iter()
                .map(|(&(real_solutions, overlap), &count)| Cell {
                    real_solutions,
                    overlap,
                    count,
                })
                .collect(),
        };
        serde_json::to_string(&export).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Cell {
            real_solutions: u64,
            overlap: u64,
            count: u64,
        }
        #[derive(Deserialize)]
        struct Import {
            meta: TableMeta,
            cells: Vec<Cell>,
        }
        let import: Import = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("bad table json: {e}")))?;
        let mut table = FrequencyTable::new(import.meta);
        for cell in import.cells {
            *table
                .cells
                .entry((cell.real_solutions, cell.overlap))
                .or_insert(0) += cell.count;
        }
        Ok(table)
    }
}

/// Parses the cell rows of a CSV export.
pub fn parse_csv_cells(text: &str) -> Result<BTreeMap<(u64, u64), u64>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("real_solutions,overlap,count") => {}
        other => {
            return Err(Error::Parse(format!(
                "bad table csv header: {other:?}"
            )))
        }
    }
    let mut cells = BTreeMap::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("bad table csv row `{line}`")));
        }
        let parse = |s: &str| -> Result<u64> {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad table csv row `{line}`")))
        };
        cells.insert((parse(fields[0])?, parse(fields[1])?), parse(fields[2])?);
    }
    Ok(cells)
}

/// Cellwise sum of two tables of the same problem and computation type.
pub fn merge_tables(a: &FrequencyTable, b: &FrequencyTable) -> Result<FrequencyTable> {
    if a.meta.problem != b.meta.problem || a.meta.computation_type != b.meta.computation_type {
        return Err(Error::MismatchedTables);
    }
    let join = |x: &str, y: &str| -> String {
        if x == y {
            x.to_string()
        } else {
            format!("{x}+{y}")
        }
    };
    let meta = TableMeta {
        problem: a.meta.problem.clone(),
        computation_type: a.meta.computation_type,
        sampling_mode: join(&a.meta.sampling_mode, &b.meta.sampling_mode),
        instance_count: a.meta.instance_count + b.meta.instance_count,
        seed: a.meta.seed,
        index_offset: a.meta.index_offset.min(b.meta.index_offset),
        point_range: join(&a.meta.point_range, &b.meta.point_range),
        failures: a.meta.failures + b.meta.failures,
        wall_time_ms: a.meta.wall_time_ms + b.meta.wall_time_ms,
    };
    let mut table = FrequencyTable::new(meta);
    table.cells = a.cells.clone();
    for (&key, &count) in &b.cells {
        *table.cells.entry(key).or_insert(0) += count;
    }
    Ok(table)
}

/// True when the instance belongs to the gap family (m-2, m-2)^4 on
/// G(4, 2m) with secant flags.
fn gap_family_planes(instance: &Instance) -> Option<Vec<crate::flags::FlagMatrix>> {
    let problem = instance.problem();
    let n = problem.n();
    if problem.k() != 4 || n % 2 != 0 || n < 8 || problem.conditions().len() != 4 {
        return None;
    }
    let m = n / 2;
    let expected = Partition::new(vec![(m - 2) as u32; 2]).ok()?;
    if problem.conditions().iter().any(|c| *c != expected) {
        return None;
    }
    let mut groups = Vec::with_capacity(4);
    for flag in instance.flags() {
        match &flag.kind {
            FlagKind::Secant { points } if points.len() == m => groups.push(points.clone()),
            _ => return None,
        }
    }
    secant_planes(&groups).ok()
}

/// Solves one instance, routing the two specially-analyzed families through
/// their dedicated pipelines.
pub fn solve_routed(instance: &Instance) -> SolveOutcome {
    let problem = instance.problem();
    if problem.k() == 2
        && problem.n() == 4
        && problem.conditions().len() == 4
        && matches!(instance.chart(), Chart::Standard)
    {
        if let Ok((points, pairs)) = secant_pair_instance(instance.flags()) {
            return solve_secant_lines(&points, &pairs);
        }
    }
    if let Some(planes) = gap_family_planes(instance) {
        return solve_gap_problem(&planes, false);
    }
    solve_instance(instance)
}

/// Runs the experiment with a custom per-instance solver.
pub fn run_experiment_with<F>(config: &ExperimentConfig, solver: F) -> Result<FrequencyTable>
where
    F: Fn(&Instance) -> SolveOutcome + Sync,
{
    config.validate()?;
    let start = Instant::now();
    let workers = config.worker_count.min(config.instance_count as usize).max(1);
    let meta = TableMeta {
        problem: config.problem.canonical_string(),
        computation_type: config.computation_type,
        sampling_mode: config.sampling_mode.to_string(),
        instance_count: config.instance_count,
        seed: config.seed,
        index_offset: config.index_offset,
        point_range: config.range_string(),
        failures: 0,
        wall_time_ms: 0,
    };

    let partials: Vec<Result<FrequencyTable>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let meta = meta.clone();
                let solver = &solver;
                scope.spawn(move || -> Result<FrequencyTable> {
                    let mut table = FrequencyTable::new(meta);
                    let mut index = w as u64;
                    while index < config.instance_count {
                        let instance = generate_instance(config, index)?;
                        let overlap = instance.overlap()? as u64;
                        let outcome = solver(&instance);
                        if outcome.is_certified() {
                            table.record(outcome.real_count as u64, overlap);
                        } else {
                            table.record_failure();
                        }
                        index += workers as u64;
                    }
                    Ok(table)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut merged = FrequencyTable::new(meta);
    for partial in partials {
        let partial = partial?;
        merged.cells = merge_tables(&merged, &partial)?.cells;
        merged.meta.failures += partial.meta.failures;
    }
    merged.meta.wall_time_ms = start.elapsed().as_millis();
    Ok(merged)
}

/// Runs the experiment with the default routed solver.
pub fn run_experiment(config: &ExperimentConfig) -> Result<FrequencyTable> {
    run_experiment_with(config, solve_routed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config(problem: &str, mode: SamplingMode, count: u64) -> ExperimentConfig {
        ExperimentConfig {
            problem: SchubertProblem::parse(problem).unwrap(),
            computation_type: 1,
            sampling_mode: mode,
            instance_count: count,
            seed: 42,
            index_offset: 0,
            point_range: (rat_int(-8), rat_int(8)),
            worker_count: 2,
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let config = base_config("2 4 1^4", SamplingMode::UniformShuffle, 10);
        let a = generate_instance(&config, 3).unwrap();
        let b = generate_instance(&config, 3).unwrap();
        assert_eq!(a, b);
        let c = generate_instance(&config, 4).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn disjoint_mode_has_overlap_zero() {
        let config = base_config("2 5 1^6", SamplingMode::DisjointIntervals, 20);
        for index in 0..20 {
            let inst = generate_instance(&config, index).unwrap();
            assert_eq!(inst.overlap().unwrap(), 0, "index {index}");
        }
    }

    #[test]
    fn disjoint_mode_type3_keeps_anchors_outside_blocks() {
        let mut config = base_config("3 7 3,1^2 1^4", SamplingMode::DisjointIntervals, 10);
        config.computation_type = 3;
        config.point_range = (rat_int(-8), rat_int(8));
        for index in 0..10 {
            let inst = generate_instance(&config, index).unwrap();
            assert_eq!(inst.overlap().unwrap(), 0, "index {index}");
            assert!(matches!(inst.chart(), Chart::TwoOsculating { .. }));
        }
    }

    #[test]
    fn target_overlap_mode_hits_target() {
        let mut config = base_config("2 4 1^4", SamplingMode::TargetOverlap(2), 5);
        config.point_range = (rat_int(-4), rat_int(4));
        for index in 0..5 {
            let inst = generate_instance(&config, index).unwrap();
            assert_eq!(inst.overlap().unwrap(), 2);
        }
    }

    #[test]
    fn four_lines_disjoint_experiment() {
        let config = base_config("2 4 1^4", SamplingMode::DisjointIntervals, 25);
        let table = run_experiment(&config).unwrap();
        assert_eq!(table.meta().failures, 0);
        assert_eq!(table.cells().len(), 1);
        assert_eq!(table.cells().get(&(2, 0)), Some(&25));
    }

    #[test]
    fn determinism_across_worker_counts() {
        let mut config = base_config("2 4 1^4", SamplingMode::UniformShuffle, 30);
        config.worker_count = 1;
        let a = run_experiment(&config).unwrap();
        config.worker_count = 4;
        let b = run_experiment(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total_recorded() + a.meta().failures, 30);
    }

    #[test]
    fn merge_of_split_run_equals_full_run() {
        let full = base_config("2 4 1^4", SamplingMode::UniformShuffle, 20);
        let table_full = run_experiment(&full).unwrap();

        let mut first = full.clone();
        first.instance_count = 10;
        let mut second = full.clone();
        second.instance_count = 10;
        second.index_offset = 10;
        let merged = merge_tables(
            &run_experiment(&first).unwrap(),
            &run_experiment(&second).unwrap(),
        )
        .unwrap();
        assert_eq!(merged, table_full);
    }

    #[test]
    fn merge_validates_metadata() {
        let a = run_experiment(&base_config("2 4 1^4", SamplingMode::UniformShuffle, 3)).unwrap();
        let b = run_experiment(&base_config("2 5 1^6", SamplingMode::DisjointIntervals, 2)).unwrap();
        assert_eq!(merge_tables(&a, &b), Err(Error::MismatchedTables));
        let empty = FrequencyTable::new(a.meta().clone());
        let same = merge_tables(&a, &empty).unwrap();
        assert_eq!(same.cells(), a.cells());
    }

    #[test]
    fn export_formats() {
        let mut table = FrequencyTable::new(TableMeta {
            problem: "2 4 1^4".into(),
            computation_type: 1,
            sampling_mode: "disjoint".into(),
            instance_count: 100,
            seed: 7,
            index_offset: 0,
            point_range: "-8:8".into(),
            failures: 0,
            wall_time_ms: 12,
        });
        assert_eq!(table.to_csv(), "real_solutions,overlap,count\n");
        for _ in 0..100 {
            table.record(2, 0);
        }
        assert_eq!(table.to_csv(), "real_solutions,overlap,count\n2,0,100\n");

        // Round trips are byte-identical.
        let csv = table.to_csv();
        let cells = parse_csv_cells(&csv).unwrap();
        assert_eq!(&cells, table.cells());
        let mut rebuilt = FrequencyTable::new(table.meta().clone());
        rebuilt.cells = cells;
        assert_eq!(rebuilt.to_csv(), csv);

        let json = table.to_json();
        let parsed = FrequencyTable::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn config_validation() {
        let mut config = base_config("2 4 1^4", SamplingMode::DisjointIntervals, 5);
        config.computation_type = 4;
        assert!(config.validate().is_err());
        config.computation_type = 2;
        config.point_range = (rat_int(-8), rat_int(-1));
        assert!(config.validate().is_err());
        config.point_range = (rat_int(1), rat_int(8));
        assert!(config.validate().is_ok());
    }

    #[test]
    fn sampling_mode_parsing() {
        assert_eq!(
            SamplingMode::parse("disjoint").unwrap(),
            SamplingMode::DisjointIntervals
        );
        assert_eq!(
            SamplingMode::parse("shuffle").unwrap(),
            SamplingMode::UniformShuffle
        );
        assert_eq!(
            SamplingMode::parse("overlap=3").unwrap(),
            SamplingMode::TargetOverlap(3)
        );
        assert!(SamplingMode::parse("other").is_err());
    }
}
