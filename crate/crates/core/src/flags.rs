//! Flags anchored to the rational normal curve.
//!
//! Secant flags are spanned by curve points, osculating flags by derivative
//! rows at a point (with the point at infinity realized as the reversed
//! standard basis), generalized secant flags by osculating blocks at several
//! anchors, and cosecant flags by annihilators of secant spans. Also the
//! discrete and derivative Wronskians used by the arithmetic-progression
//! constructions.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polymatrix::unipoly_determinant;
use crate::rational::{parse_rational, Rational};
use crate::unipoly::UniPoly;

/// A point of the curve: a parameter value or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Finite(Rational),
    Infinity,
}

impl CurvePoint {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "inf" {
            Ok(CurvePoint::Infinity)
        } else {
            Ok(CurvePoint::Finite(parse_rational(text)?))
        }
    }
}

impl PartialOrd for CurvePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Linear order with infinity last; on the circle the successor of infinity
/// is the smallest finite point.
impl Ord for CurvePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use CurvePoint::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurvePoint::Finite(v) => write!(f, "{v}"),
            CurvePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// How a flag is anchored to the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagKind {
    /// Spanned by curve points at strictly increasing parameters.
    Secant { points: Vec<Rational> },
    /// Spanned by derivatives at one point (possibly infinity).
    Osculating { point: CurvePoint },
    /// Concatenated osculating blocks, one per anchor, in sequence order.
    GeneralizedSecant { anchors: Vec<(Rational, usize)> },
    /// Annihilator of a secant span; cut out by hyperplanes osculating the
    /// dual curve at the given points.
    Cosecant { points: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSpec {
    pub kind: FlagKind,
    pub ambient: usize,
}

impl FlagSpec {
    pub fn secant(ambient: usize, points: Vec<Rational>) -> Result<Self> {
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFlag(
                "secant points must be strictly increasing".into(),
            ));
        }
        Ok(FlagSpec {
            kind: FlagKind::Secant { points },
            ambient,
        })
    }

    pub fn osculating(ambient: usize, point: CurvePoint) -> Self {
        FlagSpec {
            kind: FlagKind::Osculating { point },
            ambient,
        }
    }

    pub fn generalized_secant(ambient: usize, anchors: Vec<(Rational, usize)>) -> Result<Self> {
        let mut seen: Vec<&Rational> = Vec::new();
        for (t, order) in &anchors {
            if *order == 0 {
                return Err(Error::InvalidFlag("anchor order must be positive".into()));
            }
            if seen.contains(&t) {
                return Err(Error::InvalidFlag("repeated anchor point".into()));
            }
            seen.push(t);
        }
        Ok(FlagSpec {
            kind: FlagKind::GeneralizedSecant { anchors },
            ambient,
        })
    }

    pub fn cosecant(ambient: usize, points: Vec<Rational>) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFlag("repeated cosecant point".into()));
        }
        Ok(FlagSpec {
            kind: FlagKind::Cosecant { points },
            ambient,
        })
    }

    /// Number of curve points the spec provides, counted with order.
    /// An osculating flag provides as many rows as requested, so the count
    /// is the ambient dimension.
    pub fn point_budget(&self) -> usize {
        match &self.kind {
            FlagKind::Secant { points } => points.len(),
            FlagKind::Osculating { .. } => self.ambient,
            FlagKind::GeneralizedSecant { anchors } => anchors.iter().map(|(_, o)| o).sum(),
            FlagKind::Cosecant { points } => points.len(),
        }
    }

    /// Text syntax: "sec:1/2,3/2,5", "osc:3", "osc:inf", "gsec:0^2,1",
    /// "cosec:1,2".
    pub fn parse(text: &str, ambient: usize) -> Result<Self> {
        let (tag, body) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad flag spec `{text}`")))?;
        match tag.trim() {
            "sec" => {
                let points = body
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                FlagSpec::secant(ambient, points)
            }
            "osc" => Ok(FlagSpec::osculating(ambient, CurvePoint::parse(body)?)),
            "gsec" => {
                let anchors = body
                    .split(',')
                    .map(|token| {
                        let (point, order) = match token.split_once('^') {
                            Some((p, o)) => (
                                parse_rational(p)?,
                                o.trim().parse::<usize>().map_err(|_| {
                                    Error::Parse(format!("bad anchor order `{token}`"))
                                })?,
                            ),
                            None => (parse_rational(token)?, 1),
                        };
                        Ok((point, order))
                    })
                    .collect::<Result<Vec<_>>>()?;
                FlagSpec::generalized_secant(ambient, anchors)
            }
            "cosec" => {
                let points = body
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                FlagSpec::cosecant(ambient, points)
            }
            other => Err(Error::Parse(format!("unknown flag kind `{other}`"))),
        }
    }
}

impl std::fmt::Display for FlagSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            FlagKind::Secant { points } => {
                let body: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                write!(f, "sec:{}", body.join(","))
            }
            FlagKind::Osculating { point } => write!(f, "osc:{point}"),
            FlagKind::GeneralizedSecant { anchors } => {
                let body: Vec<String> = anchors
                    .iter()
                    .map(|(p, o)| {
                        if *o == 1 {
                            p.to_string()
                        } else {
                            format!("{p}^{o}")
                        }
                    })
                    .collect();
                write!(f, "gsec:{}", body.join(","))
            }
            FlagKind::Cosecant { points } => {
                let body: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                write!(f, "cosec:{}", body.join(","))
            }
        }
    }
}

/// Exact matrix realization of (a prefix of) a flag: d rows in n columns,
/// full rank, whose row prefixes span the nested subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl FlagMatrix {
    pub fn new(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() > n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidFlag(format!(
                "flag matrix must be d x {n} with d <= {n}"
            )));
        }
        if linalg::rank(&rows) != rows.len() {
            return Err(Error::RankDeficient);
        }
        Ok(FlagMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Span equality of the full row spaces.
    pub fn same_span(&self, other: &FlagMatrix) -> bool {
        if self.n != other.n || self.depth() != other.depth() {
            return false;
        }
        let stacked = linalg::stack(&self.rows, &other.rows);
        linalg::rank(&stacked) == self.depth()
    }
}

/// gamma(t) = (1, t, t^2, ..., t^(n-1)).
pub fn moment_point(t: &Rational, n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n);
    let mut acc = Rational::one();
    for _ in 0..n {
        row.push(acc.clone());
        acc *= t;
    }
    row
}

/// gamma^(order)(t): plain derivatives, not divided by factorials.
pub fn moment_derivative(t: &Rational, n: usize, order: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    for (c, slot) in row.iter_mut().enumerate() {
        if c < order {
            continue;
        }
        // falling factorial c (c-1) ... (c-order+1)
        let mut coef = BigInt::one();
        for step in 0..order {
            coef *= BigInt::from(c - step);
        }
        let mut value = Rational::from_integer(coef);
        for _ in 0..(c - order) {
            value *= t;
        }
        *slot = value;
    }
    row
}

/// Realizes the first `depth` flag subspaces prescribed by the spec.
pub fn realize_flag(spec: &FlagSpec, depth: usize) -> Result<FlagMatrix> {
    let n = spec.ambient;
    if depth == 0 || depth > n {
        return Err(Error::InvalidFlag(format!(
            "depth {depth} out of range for ambient {n}"
        )));
    }
    let rows: Vec<Vec<Rational>> = match &spec.kind {
        FlagKind::Secant { points } => {
            if points.len() < depth {
                return Err(Error::InvalidFlag(format!(
                    "secant flag with {} points cannot realize depth {depth}",
                    points.len()
                )));
            }
            points[..depth].iter().map(|t| moment_point(t, n)).collect()
        }
        FlagKind::Osculating { point } => match point {
            CurvePoint::Finite(t) => (0..depth).map(|j| moment_derivative(t, n, j)).collect(),
            CurvePoint::Infinity => (0..depth)
                .map(|j| {
                    let mut row = vec![Rational::zero(); n];
                    row[n - 1 - j] = Rational::one();
                    row
                })
                .collect(),
        },
        FlagKind::GeneralizedSecant { anchors } => {
            let budget: usize = anchors.iter().map(|(_, o)| o).sum();
            if budget < depth {
                return Err(Error::InvalidFlag(format!(
                    "generalized secant flag provides {budget} rows, needs {depth}"
                )));
            }
            let mut rows = Vec::with_capacity(depth);
            'outer: for (t, order) in anchors {
                for j in 0..*order {
                    if rows.len() == depth {
                        break 'outer;
                    }
                    rows.push(moment_derivative(t, n, j));
                }
            }
            rows
        }
        FlagKind::Cosecant { points } => {
            // Depth-d subspace = annihilator of the span of the first n - d
            // curve points; basis rows are s^j * prod (s - s_i) coefficient
            // vectors.
            if points.len() + depth < n {
                return Err(Error::InvalidFlag(format!(
                    "cosecant flag with {} points cannot realize depth {depth} in ambient {n}",
                    points.len()
                )));
            }
            let base = UniPoly::from_roots(&points[..n - depth]);
            (0..depth)
                .map(|j| {
                    let mut shifted = vec![Rational::zero(); j];
                    shifted.extend(base.coeffs().iter().cloned());
                    shifted.resize(n, Rational::zero());
                    shifted
                })
                .collect()
        }
    };
    FlagMatrix::new(n, rows)
}

/// Dual of a full flag: the first i rows of the result span the annihilator
/// of the span of the input's first n - i rows.
pub fn dual_flag(m: &FlagMatrix) -> Result<FlagMatrix> {
    let n = m.n();
    if m.depth() != n {
        return Err(Error::InvalidFlag("dual_flag needs a full n x n flag".into()));
    }
    let inv = linalg::inverse(m.rows()).ok_or(Error::RankDeficient)?;
    // Column j of the inverse pairs to delta_ij with row i; reading the
    // columns in reverse order realizes the dual flag.
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|r| inv[r][n - 1 - i].clone()).collect())
        .collect();
    FlagMatrix::new(n, rows)
}

/// Normal vector of the hyperplane spanned by n-1 curve points: the
/// coefficient vector of prod (s - s_i), so that pairing with gamma(s) is
/// that polynomial identically.
pub fn cosecant_normal(points: &[Rational]) -> Result<Vec<Rational>> {
    let mut sorted = points.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::CoincidentPoints);
    }
    let n = points.len() + 1;
    let poly = UniPoly::from_roots(points);
    let mut coeffs = poly.coeffs().to_vec();
    coeffs.resize(n, Rational::zero());
    Ok(coeffs)
}

/// The dual curve point: coefficient vector of (s - t)^(n-1) in the basis
/// dual to the standard one; annihilates the osculating hyperplane at t.
pub fn dual_curve_point(t: &Rational, n: usize) -> Vec<Rational> {
    let roots = vec![t.clone(); n - 1];
    let poly = UniPoly::from_roots(&roots);
    let mut coeffs = poly.coeffs().to_vec();
    coeffs.resize(n, Rational::zero());
    coeffs
}

/// Basis of the intersection of the k hyperplanes osculating the dual curve
/// at the given points: the annihilator of Span{gamma(s_1), ..., gamma(s_k)}.
pub fn cosecant_subspace(points: &[Rational], n: usize) -> Result<FlagMatrix> {
    let k = points.len();
    if k >= n {
        return Err(Error::InvalidFlag(format!(
            "need fewer than {n} points, got {k}"
        )));
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::CoincidentPoints);
    }
    let span: Vec<Vec<Rational>> = points.iter().map(|t| moment_point(t, n)).collect();
    let basis = linalg::nullspace(&span);
    FlagMatrix::new(n, basis)
}


/// Discrete Wronskian with step h: det of the k x k matrix with entry
/// (i, j) equal to f_i(t + (j-1) h), as a polynomial in t.
pub fn discrete_wronskian(fs: &[UniPoly], h: &Rational) -> Result<UniPoly> {
    assert!(!fs.is_empty(), "need at least one polynomial");
    if h.is_zero() {
        return Err(Error::ZeroStep);
    }
    let k = fs.len();
    let entries: Vec<Vec<UniPoly>> = fs
        .iter()
        .map(|f| {
            (0..k)
                .map(|j| f.shift(&(h * Rational::from_integer(BigInt::from(j)))))
                .collect()
        })
        .collect();
    Ok(unipoly_determinant(entries))
}

/// Derivative Wronskian: det of the matrix with entry (i, j) = f_i^(j).
pub fn wronskian(fs: &[UniPoly]) -> UniPoly {
    assert!(!fs.is_empty(), "need at least one polynomial");
    let k = fs.len();
    let entries: Vec<Vec<UniPoly>> = fs
        .iter()
        .map(|f| {
            let mut row = Vec::with_capacity(k);
            let mut d = f.clone();
            for _ in 0..k {
                row.push(d.clone());
                d = d.derivative();
            }
            row
        })
        .collect();
    unipoly_determinant(entries)
}
