//! Univariate polynomials over the rationals, with Sturm-sequence real root
//! counting and square-freeness testing.
//!
//! Sturm chains are built from pseudo-remainders of primitive integer
//! polynomials with content removed at every step; eliminants of degree 12+
//! from determinantal systems carry large coefficients and plain rational
//! remainder chains blow up.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{bigint_gcd, bigint_lcm, sign, Rational};

/// Coefficients indexed by exponent; the highest stored coefficient is
/// nonzero and the empty vector is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// Open interval with optional infinite endpoints (None = unbounded side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenInterval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl OpenInterval {
    pub fn new(lo: Option<Rational>, hi: Option<Rational>) -> Self {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            assert!(a < b, "empty interval");
        }
        OpenInterval { lo, hi }
    }

    pub fn whole_line() -> Self {
        OpenInterval { lo: None, hi: None }
    }
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// x as a polynomial.
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Monic product of (x - r) over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = UniPoly::one();
        for r in roots {
            p = &p * &UniPoly::from_coeffs(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// f(x + c), by Horner in (x + c).
    pub fn shift(&self, c: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        let xc = UniPoly::from_coeffs(vec![c.clone(), Rational::one()]);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &xc) + &UniPoly::constant(a.clone());
        }
        acc
    }

    /// Primitive integer form: self / content, sign chosen so the leading
    /// coefficient is positive. Returns zero for zero.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = bigint_lcm(&den_lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = bigint_gcd(&g, v);
        }
        let flip = ints.last().unwrap().is_negative();
        UniPoly {
            coeffs: ints
                .into_iter()
                .map(|v| {
                    let v = if flip { -v } else { v };
                    Rational::from_integer(v / &g)
                })
                .collect(),
        }
    }

    /// Quotient and remainder of rational polynomial division.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lc;
            if !factor.is_zero() {
                quot[k] = factor.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &factor;
                    rem[k + i] -= t;
                }
            }
            rem.pop();
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Pseudo-remainder of primitive integer polynomials, together with the
/// parity of the leading-coefficient sign the scaling introduced. The result
/// satisfies r = s * rem(f, g) with sign(s) = sign(lc(g))^scalings.
fn pseudo_rem(f: &UniPoly, g: &UniPoly) -> (UniPoly, u32) {
    let dg = g.degree().unwrap();
    let lc_g = g.leading_coeff().unwrap().clone();
    let mut rem = f.clone();
    let mut scalings = 0u32;
    while let Some(dr) = rem.degree() {
        if dr < dg {
            break;
        }
        let lc_r = rem.leading_coeff().unwrap().clone();
        // rem <- lc_g * rem - lc_r * x^(dr-dg) * g
        let mut scaled = rem.scale(&lc_g);
        let mut shifted = vec![Rational::zero(); dr - dg];
        shifted.extend(g.coeffs.iter().map(|c| c * &lc_r));
        let sub = UniPoly::from_coeffs(shifted);
        scaled = &scaled - &sub;
        // The leading terms cancel by construction.
        debug_assert!(scaled.degree().map_or(true, |d| d < dr));
        rem = scaled;
        scalings += 1;
    }
    (rem, scalings)
}

/// Monic greatest common divisor; gcd(f, 0) = monic(f).
pub fn upoly_gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let mut a = f.primitive();
    let mut b = g.primitive();
    if a.is_zero() {
        return b.monic();
    }
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return UniPoly::one();
        }
        let (r, _) = pseudo_rem(&a, &b);
        a = b;
        b = r.primitive();
    }
    a.monic()
}

/// True iff gcd(f, f') is constant. Errors on the zero polynomial.
pub fn is_squarefree(f: &UniPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(true);
    }
    Ok(upoly_gcd(f, &f.derivative()).degree() == Some(0))
}

/// f divided by gcd(f, f'): same distinct roots, all simple.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = upoly_gcd(f, &f.derivative());
    if g.degree() == Some(0) {
        return Ok(f.primitive());
    }
    Ok(f.exact_div(&g).primitive())
}

/// Sturm chain of a square-free primitive polynomial of degree >= 1.
fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.clone(), f.derivative().primitive()];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let (r, scalings) = pseudo_rem(a, b);
        if r.is_zero() {
            break;
        }
        // Next element must equal -rem(a, b) up to a positive factor. The
        // pseudo-remainder is lc(b)^scalings * rem(a, b), and primitive()
        // normalizes the lead positive, so recover the true remainder sign.
        let rem_sign_flip = sign(b.leading_coeff().unwrap()) < 0 && scalings % 2 == 1;
        let r_lead_negative = r.leading_coeff().map(|c| c.is_negative()).unwrap_or(false);
        let true_lead_negative = r_lead_negative ^ rem_sign_flip;
        let mut next = r.primitive();
        if !true_lead_negative {
            next = -&next;
        }
        chain.push(next);
    }
    chain
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Place {
    NegInf,
    At,
    PosInf,
}

fn sign_at(p: &UniPoly, place: Place, x: Option<&Rational>) -> i32 {
    match place {
        Place::At => sign(&p.eval(x.unwrap())),
        Place::PosInf => p.leading_coeff().map_or(0, sign),
        Place::NegInf => match p.degree() {
            None => 0,
            Some(d) => {
                let s = p.leading_coeff().map_or(0, sign);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
    }
}

fn variations(chain: &[UniPoly], place: Place, x: Option<&Rational>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign_at(p, place, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `f` in the open range (whole line when
/// `range` is None). Endpoint roots are excluded; non-square-free input is
/// counted by distinct roots. Errors on the zero polynomial.
pub fn count_real_roots(f: &UniPoly, range: Option<&OpenInterval>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = squarefree_part(f)?;
    let whole = OpenInterval::whole_line();
    let range = range.unwrap_or(&whole);
    // Strip endpoint roots so that sign variations count the open interval.
    for endpoint in [&range.lo, &range.hi].into_iter().flatten() {
        if !g.is_zero() && g.eval(endpoint).is_zero() {
            let linear = UniPoly::from_coeffs(vec![-endpoint.clone(), Rational::one()]);
            g = g.exact_div(&linear).primitive();
        }
    }
    if g.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&g);
    let v_lo = match &range.lo {
        None => variations(&chain, Place::NegInf, None),
        Some(a) => variations(&chain, Place::At, Some(a)),
    };
    let v_hi = match &range.hi {
        None => variations(&chain, Place::PosInf, None),
        Some(b) => variations(&chain, Place::At, Some(b)),
    };
    Ok(v_lo.saturating_sub(v_hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn arithmetic_basics() {
        let f = UniPoly::from_int_coeffs(&[1, 2, 1]); // (x+1)^2
        let g = UniPoly::from_roots(&[rat_int(-1), rat_int(-1)]);
        assert_eq!(f, g);
        assert_eq!(f.eval(&rat_int(2)), rat_int(9));
        assert_eq!(f.derivative(), UniPoly::from_int_coeffs(&[2, 2]));
        let (q, r) = f.div_rem(&UniPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(q, UniPoly::from_int_coeffs(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn shift_composes() {
        let f = UniPoly::from_int_coeffs(&[0, 0, 0, 1]); // x^3
        let g = f.shift(&rat_int(1)); // (x+1)^3
        assert_eq!(g, UniPoly::from_int_coeffs(&[1, 3, 3, 1]));
        assert_eq!(g.eval(&rat_int(2)), f.eval(&rat_int(3)));
    }

    #[test]
    fn gcd_shared_linear_factor() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let f = UniPoly::from_int_coeffs(&[-1, 0, 1]);
        let g = UniPoly::from_int_coeffs(&[-1, 1]);
        assert_eq!(upoly_gcd(&f, &g), UniPoly::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        // gcd(x^2 + 1, x) = 1
        let f = UniPoly::from_int_coeffs(&[1, 0, 1]);
        let g = UniPoly::x();
        assert_eq!(upoly_gcd(&f, &g), UniPoly::one());
    }

    #[test]
    fn gcd_derived_by_euclid() {
        // (x-2)^3 (x+1) vs (x-2)(x+3): gcd = x - 2, expanded by construction.
        let f = UniPoly::from_roots(&[rat_int(2), rat_int(2), rat_int(2), rat_int(-1)]);
        let g = UniPoly::from_roots(&[rat_int(2), rat_int(-3)]);
        assert_eq!(upoly_gcd(&f, &g), UniPoly::from_int_coeffs(&[-2, 1]));
        assert_eq!(upoly_gcd(&f, &UniPoly::zero()), f.monic());
    }

    #[test]
    fn squarefree_checks() {
        let f = UniPoly::from_int_coeffs(&[-1, 0, 1]); // x^2 - 1
        assert!(is_squarefree(&f).unwrap());
        let g = UniPoly::from_int_coeffs(&[1, -2, 1]); // (x-1)^2
        assert!(!is_squarefree(&g).unwrap());
        let h = UniPoly::from_int_coeffs(&[0, -1, 0, 0, 0, 1]); // x^5 - x
        assert!(is_squarefree(&h).unwrap());
        assert_eq!(is_squarefree(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn root_counts_trivial() {
        let f = UniPoly::from_int_coeffs(&[1, 0, 1]); // x^2 + 1
        assert_eq!(count_real_roots(&f, None).unwrap(), 0);
        let g = UniPoly::from_int_coeffs(&[0, -1, 0, 1]); // x^3 - x
        assert_eq!(count_real_roots(&g, None).unwrap(), 3);
    }

    #[test]
    fn root_count_with_complex_factor() {
        // (x-1)(x-2)(x-3)(x^2+x+1): 3 real roots; expand by construction.
        let real = UniPoly::from_roots(&[rat_int(1), rat_int(2), rat_int(3)]);
        let quad = UniPoly::from_int_coeffs(&[1, 1, 1]);
        let f = &real * &quad;
        assert_eq!(count_real_roots(&f, None).unwrap(), 3);
    }

    #[test]
    fn root_count_open_interval_semantics() {
        let f = UniPoly::from_roots(&[rat_int(0), rat_int(1), rat_int(2)]);
        let between = OpenInterval::new(Some(rat_int(0)), Some(rat_int(2)));
        // Endpoints 0 and 2 are excluded.
        assert_eq!(count_real_roots(&f, Some(&between)).unwrap(), 1);
        let all = OpenInterval::new(Some(rat(-1, 2)), None);
        assert_eq!(count_real_roots(&f, Some(&all)).unwrap(), 3);
    }

    #[test]
    fn root_count_additive_over_split() {
        let f = UniPoly::from_roots(&[rat_int(-3), rat(-1, 2), rat_int(1), rat_int(4)]);
        let cut = rat_int(0);
        let a = OpenInterval::new(Some(rat_int(-10)), Some(cut.clone()));
        let b = OpenInterval::new(Some(cut), Some(rat_int(10)));
        let whole = OpenInterval::new(Some(rat_int(-10)), Some(rat_int(10)));
        let total = count_real_roots(&f, Some(&whole)).unwrap();
        assert_eq!(
            count_real_roots(&f, Some(&a)).unwrap() + count_real_roots(&f, Some(&b)).unwrap(),
            total
        );
        assert_eq!(total, 4);
    }

    #[test]
    fn distinct_count_on_non_squarefree() {
        let f = UniPoly::from_roots(&[rat_int(1), rat_int(1), rat_int(5)]);
        assert_eq!(count_real_roots(&f, None).unwrap(), 2);
    }
}
