//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in descending degrevlex order, which doubles as the
//! term order of the elimination engine and as the deterministic iteration
//! order promised to callers.

use std::cmp::Ordering;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::rational::{bigint_gcd, bigint_lcm, Rational};
use crate::unipoly::UniPoly;

/// Exponent vector of a fixed variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Degrevlex: higher total degree wins; on ties the monomial with the
/// smaller exponent in the last differing variable is the larger one.
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Sparse polynomial; terms sorted descending in degrevlex, no zero
/// coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        MultiPoly {
            nvars,
            terms: vec![(Monomial::var(nvars, i), Rational::one())],
        }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| cmp_degrevlex(b, a));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.first().is_none_or(|(m, _)| m.is_one())
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_degrevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate_other { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (m, a) = &self.terms[i];
                    let b = &other.terms[j].1;
                    let c = if negate_other { a - b } else { a + b };
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            out.push((m.clone(), if negate_other { -c } else { c.clone() }));
        }
        MultiPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn mul_term(&self, mono: &Monomial, coef: &Rational) -> MultiPoly {
        if coef.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coef))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        self.mul_term(&Monomial::one(self.nvars), s)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Positive content: the rational c > 0 such that self / c has coprime
    /// integer coefficients. None for the zero polynomial.
    pub fn content(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = bigint_lcm(&den_lcm, c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = bigint_gcd(&g, &(c.numer() * (&den_lcm / c.denom())));
        }
        Some(Rational::new(g, den_lcm))
    }

    /// The polynomial without its leading term.
    pub fn drop_leading(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Positive rational c with self/c primitive integer, lead positive.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = bigint_lcm(&den_lcm, c.denom());
        }
        let mut g = BigInt::zero();
        let ints: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| c.numer() * (&den_lcm / c.denom()))
            .collect();
        for v in &ints {
            g = bigint_gcd(&g, v);
        }
        let flip = ints[0].is_negative();
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .zip(ints)
                .map(|((m, _), v)| {
                    let v = if flip { -v } else { v };
                    (m.clone(), Rational::from_integer(v / &g))
                })
                .collect(),
        }
    }

    /// Exact quotient self / g, or None when g does not divide self.
    pub fn exact_div(&self, g: &MultiPoly) -> Option<MultiPoly> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        let (g_lm, g_lc) = g.leading().unwrap();
        while let Some((lm, lc)) = rem.leading() {
            let mono = g_lm.div_into(lm)?;
            let coef = lc / g_lc;
            rem = rem.merge(&g.mul_term(&mono, &coef), true);
            quot_terms.push((mono, coef));
        }
        Some(MultiPoly::from_terms(self.nvars, quot_terms))
    }

    /// Projects to a univariate polynomial when only `var` occurs.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.0
                .iter()
                .enumerate()
                .any(|(i, &e)| i != var && e != 0)
            {
                return None;
            }
            let e = m.0[var] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    pub fn from_unipoly(nvars: usize, var: usize, f: &UniPoly) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            f.coeffs().iter().enumerate().filter_map(|(e, c)| {
                if c.is_zero() {
                    None
                } else {
                    let mut m = vec![0u16; nvars];
                    m[var] = u16::try_from(e).expect("degree overflow");
                    Some((Monomial(m), c.clone()))
                }
            }),
        )
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, false)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, true)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| cmp_degrevlex(b, a));
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                let mut first = true;
                for (v, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "x{v}")?;
                    } else {
                        write!(f, "x{v}^{e}")?;
                    }
                    first = false;
                }
            }
        }
        Ok(())
    }
}
