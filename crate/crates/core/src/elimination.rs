//! Elimination of all but one variable from a polynomial system.
//!
//! Strategy: a degrevlex Groebner basis (Buchberger with the coprimality and
//! chain criteria, content removal after every reduction), then the monic
//! generator of the elimination ideal as the first linear dependence among
//! normal forms of powers of the kept variable. For a zero-dimensional ideal
//! the dependence is guaranteed within quotient-dimension many powers; for
//! anything else a bounded search either still finds the honest generator or
//! reports the system as not zero-dimensional in that variable, which
//! upstream treats as a non-generic chart.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::{cmp_degrevlex, Monomial, MultiPoly};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// Power cap for the dependence search when the ideal is not certified
/// zero-dimensional.
const NON_ZERO_DIM_POWER_CAP: usize = 64;

/// Result of an elimination: either the monic generator of the elimination
/// ideal, or the signal that the system is not zero-dimensional in the kept
/// variable (a non-generic chart upstream).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eliminant {
    Poly(UniPoly),
    NotZeroDimensional,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }
}

/// Cross-scaled S-polynomial: lc(g) (lcm/lm(f)) f - lc(f) (lcm/lm(g)) g.
/// Integer inputs stay integer; the result is only needed up to scale.
fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (lm_f, lc_f) = f.leading().unwrap();
    let (lm_g, lc_g) = g.leading().unwrap();
    let lcm = lm_f.lcm(lm_g);
    let tf = lm_f.div_into(&lcm).unwrap();
    let tg = lm_g.div_into(&lcm).unwrap();
    let a = f.mul_term(&tf, lc_g);
    let b = g.mul_term(&tg, lc_f);
    &a - &b
}

/// Full normal form of f with respect to `basis` (every term reduced),
/// linear in f. Rational arithmetic keeps coefficients in lowest terms;
/// picking the reducer with the fewest terms keeps the fill-in down.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let nvars = f.nvars();
    let mut cur = f.clone();
    let mut rem_terms: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = cur.leading() {
        let mut reducer: Option<&MultiPoly> = None;
        for g in basis {
            if g.leading().unwrap().0.divides(lm)
                && reducer.is_none_or(|r| g.terms().len() < r.terms().len())
            {
                reducer = Some(g);
            }
        }
        match reducer {
            Some(g) => {
                let (g_lm, g_lc) = g.leading().unwrap();
                let t = g_lm.div_into(lm).unwrap();
                let coef = lc / g_lc;
                cur = &cur - &g.mul_term(&t, &coef);
            }
            None => {
                // Irreducible leading term: move it to the remainder. Terms
                // arrive in strictly decreasing order, so rem stays sorted.
                rem_terms.push((lm.clone(), lc.clone()));
                cur = cur.drop_leading();
            }
        }
    }
    MultiPoly::from_terms(nvars, rem_terms)
}

/// Buchberger's algorithm in degrevlex with normal pair selection.
pub fn groebner_basis(generators: &[MultiPoly]) -> Result<GroebnerBasis> {
    if generators.is_empty() {
        return Err(Error::MismatchedGenerators("no generators".into()));
    }
    let nvars = generators[0].nvars();
    if generators.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::MismatchedGenerators(
            "generators with differing variable counts".into(),
        ));
    }

    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let g = g.primitive();
        if g.is_constant() {
            return Ok(GroebnerBasis {
                nvars,
                polys: vec![MultiPoly::one(nvars)],
            });
        }
        basis.push(g);
    }
    if basis.is_empty() {
        return Err(Error::MismatchedGenerators(
            "all generators are zero".into(),
        ));
    }

    // Pending pairs keyed by (lcm degree, lcm, i, j): normal strategy.
    let mut pending: BTreeSet<(u32, Vec<u16>, usize, usize)> = BTreeSet::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let pair_key = |basis: &[MultiPoly], i: usize, j: usize| {
        let lcm = basis[i]
            .leading()
            .unwrap()
            .0
            .lcm(basis[j].leading().unwrap().0);
        (lcm.total_degree(), lcm.0.clone(), i, j)
    };
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
        }
    }

    while let Some(entry) = pending.iter().next().cloned() {
        pending.remove(&entry);
        let (_, lcm_exp, i, j) = entry;
        treated.insert((i, j));
        let lcm = Monomial(lcm_exp);

        let lm_i = basis[i].leading().unwrap().0;
        let lm_j = basis[j].leading().unwrap().0;
        // Coprimality criterion: the S-polynomial reduces to zero.
        if lm_i.mul(lm_j) == lcm {
            continue;
        }
        // Chain criterion: a third element divides the lcm and both side
        // pairs are already treated.
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            if !basis[k].leading().unwrap().0.divides(&lcm) {
                return false;
            }
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            treated.contains(&a) && treated.contains(&b)
        });
        if chained {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j]);
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.primitive();
        if h.is_constant() {
            return Ok(GroebnerBasis {
                nvars,
                polys: vec![MultiPoly::one(nvars)],
            });
        }
        basis.push(h);
        let new = basis.len() - 1;
        for t in 0..new {
            pending.insert(pair_key(&basis, t, new));
        }
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading().unwrap().0;
            let lm_i = basis[i].leading().unwrap().0;
            if lm_j.divides(lm_i) && (lm_j != lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Interreduce tails for a canonical reduced basis.
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        reduced.push(normal_form(&minimal[i], &others).primitive());
    }
    reduced.sort_by(|a, b| cmp_degrevlex(a.leading().unwrap().0, b.leading().unwrap().0));
    Ok(GroebnerBasis {
        nvars,
        polys: reduced,
    })
}

/// Standard monomials of the quotient ring, ascending in degrevlex, or None
/// when the quotient is infinite-dimensional.
pub fn quotient_basis(gb: &GroebnerBasis) -> Option<Vec<Monomial>> {
    if gb.is_unit_ideal() {
        return Some(Vec::new());
    }
    let lms: Vec<&Monomial> = gb.polys.iter().map(|g| g.leading().unwrap().0).collect();
    // Finite iff every variable has a pure power among the leading monomials.
    for v in 0..gb.nvars {
        let has_pure_power = lms.iter().any(|m| {
            m.0.iter()
                .enumerate()
                .all(|(i, &e)| if i == v { e > 0 } else { e == 0 })
        });
        if !has_pure_power {
            return None;
        }
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    let start = Monomial::one(gb.nvars);
    if lms.iter().any(|lm| lm.divides(&start)) {
        return Some(Vec::new());
    }
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(m) = queue.pop_front() {
        for v in 0..gb.nvars {
            let mut next = m.clone();
            next.0[v] += 1;
            if seen.contains(&next) || lms.iter().any(|lm| lm.divides(&next)) {
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let mut basis: Vec<Monomial> = seen.into_iter().collect();
    basis.sort_by(cmp_degrevlex);
    Some(basis)
}

/// Incremental Gaussian elimination that finds the first linear dependence
/// among a stream of fixed-width vectors, tracking the combination.
struct DependenceFinder {
    // Each stored row: (coords normalized with pivot 1, pivot column, combo).
    rows: Vec<(Vec<Rational>, usize, Vec<Rational>)>,
    combo_len: usize,
}

impl DependenceFinder {
    fn new(combo_len: usize) -> Self {
        DependenceFinder {
            rows: Vec::new(),
            combo_len,
        }
    }

    /// Feeds vector number `j`; returns the dependence coefficients when the
    /// vector lies in the span of its predecessors.
    fn offer(&mut self, j: usize, coords: &[Rational]) -> Option<Vec<Rational>> {
        let mut coords = coords.to_vec();
        let mut combo = vec![Rational::zero(); self.combo_len];
        combo[j] = Rational::one();

        for (row, pivot, row_combo) in &self.rows {
            if coords[*pivot].is_zero() {
                continue;
            }
            let factor = coords[*pivot].clone();
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let t = v * &factor;
                    coords[k] -= t;
                }
            }
            for (k, v) in row_combo.iter().enumerate() {
                if !v.is_zero() {
                    let t = v * &factor;
                    combo[k] -= t;
                }
            }
        }

        match coords.iter().position(|c| !c.is_zero()) {
            None => Some(combo),
            Some(pivot) => {
                let inv = coords[pivot].clone().recip();
                for v in coords.iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
                for v in combo.iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
                self.rows.push((coords, pivot, combo));
                None
            }
        }
    }
}

/// A Groebner basis with the quotient structure cached, so several
/// eliminants of one system share the basis computation and the normal
/// forms of border monomials.
pub struct EliminationContext {
    gb: GroebnerBasis,
    quotient: Option<Vec<Monomial>>,
    monomial_nf_cache: HashMap<Monomial, Vec<Rational>>,
}

impl EliminationContext {
    pub fn new(generators: &[MultiPoly]) -> Result<Self> {
        let gb = groebner_basis(generators)?;
        let quotient = quotient_basis(&gb);
        Ok(EliminationContext {
            gb,
            quotient,
            monomial_nf_cache: HashMap::new(),
        })
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.quotient.is_some()
    }

    pub fn quotient_dimension(&self) -> Option<usize> {
        self.quotient.as_ref().map(|q| q.len())
    }

    /// Coordinates of NF(m) over the standard monomials.
    fn monomial_nf_coords(
        &mut self,
        m: &Monomial,
        index: &HashMap<Monomial, usize>,
    ) -> Vec<Rational> {
        if let Some(hit) = self.monomial_nf_cache.get(m) {
            return hit.clone();
        }
        let nvars = self.gb.nvars;
        let poly = MultiPoly::from_terms(nvars, [(m.clone(), Rational::one())]);
        let nf = normal_form(&poly, self.gb.polys());
        let mut coords = vec![Rational::zero(); index.len()];
        for (mono, c) in nf.terms() {
            coords[index[mono]] = c.clone();
        }
        self.monomial_nf_cache.insert(m.clone(), coords.clone());
        coords
    }

    /// Monic generator of the elimination ideal in variable `keep`.
    pub fn eliminant(&mut self, keep: usize) -> Eliminant {
        let nvars = self.gb.nvars;
        assert!(keep < nvars, "variable index out of range");
        match self.quotient.clone() {
            Some(standard) => self.eliminant_finite(keep, &standard),
            None => self.eliminant_bounded_search(keep),
        }
    }

    /// Finite quotient: multiplication matrix once, then powers of the kept
    /// variable as matrix-vector products in dimension D.
    fn eliminant_finite(&mut self, keep: usize, standard: &[Monomial]) -> Eliminant {
        let d = standard.len();
        if d == 0 {
            // Unit ideal: the elimination ideal is generated by 1.
            return Eliminant::Poly(UniPoly::one());
        }
        let nvars = self.gb.nvars;
        let index: HashMap<Monomial, usize> = standard
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let x = Monomial::var(nvars, keep);
        // columns[b] = coordinates of NF(x * standard[b]).
        let columns: Vec<Vec<Rational>> = standard
            .iter()
            .map(|b| {
                let m = b.mul(&x);
                match index.get(&m) {
                    Some(&i) => {
                        let mut unit = vec![Rational::zero(); d];
                        unit[i] = Rational::one();
                        unit
                    }
                    None => self.monomial_nf_coords(&m, &index),
                }
            })
            .collect();

        let mut finder = DependenceFinder::new(d + 2);
        let mut v = vec![Rational::zero(); d];
        v[index[&Monomial::one(nvars)]] = Rational::one();
        for j in 0..=d {
            if let Some(combo) = finder.offer(j, &v) {
                let poly = UniPoly::from_coeffs(combo);
                debug_assert!(!poly.is_zero());
                return Eliminant::Poly(poly.monic());
            }
            let mut next = vec![Rational::zero(); d];
            for (b, coef) in v.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (i, col) in columns[b].iter().enumerate() {
                    if !col.is_zero() {
                        next[i] += coef * col;
                    }
                }
            }
            v = next;
        }
        unreachable!("dependence must appear within quotient dimension many powers")
    }

    /// Infinite quotient: a bounded power search can still return an honest
    /// generator; otherwise the system is flagged as not zero-dimensional.
    fn eliminant_bounded_search(&mut self, keep: usize) -> Eliminant {
        let nvars = self.gb.nvars;
        let cap = NON_ZERO_DIM_POWER_CAP;
        // Collect the power normal forms first, then index their monomials.
        let x = MultiPoly::var(nvars, keep);
        let mut powers: Vec<MultiPoly> = Vec::with_capacity(cap + 2);
        let mut nf = normal_form(&MultiPoly::one(nvars), self.gb.polys());
        for _ in 0..=cap + 1 {
            powers.push(nf.clone());
            nf = normal_form(&(&nf * &x), self.gb.polys());
        }
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for p in &powers {
            for (m, _) in p.terms() {
                let next = index.len();
                index.entry(m.clone()).or_insert(next);
            }
        }
        let width = index.len().max(1);
        let mut finder = DependenceFinder::new(cap + 2);
        for (j, p) in powers.iter().enumerate() {
            let mut coords = vec![Rational::zero(); width];
            for (m, c) in p.terms() {
                coords[index[m]] = c.clone();
            }
            if let Some(combo) = finder.offer(j, &coords) {
                let poly = UniPoly::from_coeffs(combo);
                debug_assert!(!poly.is_zero());
                return Eliminant::Poly(poly.monic());
            }
        }
        Eliminant::NotZeroDimensional
    }
}

/// Eliminates all variables but `keep` from the ideal generated by
/// `generators`, returning the monic eliminant or the tagged failure.
pub fn eliminate_to_univariate(generators: &[MultiPoly], keep: usize) -> Result<Eliminant> {
    if generators.is_empty() {
        return Err(Error::MismatchedGenerators("no generators".into()));
    }
    if keep >= generators[0].nvars() {
        return Err(Error::MismatchedGenerators(format!(
            "kept variable {keep} out of range"
        )));
    }
    let mut ctx = EliminationContext::new(generators)?;
    Ok(ctx.eliminant(keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::Monomial;
    use crate::rational::rat_int;

    fn p(nvars: usize, terms: &[(&[u16], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (Monomial(e.to_vec()), rat_int(*c))),
        )
    }

    #[test]
    fn substitution_system() {
        // {x - y, x^2 + y^2 - 2}, keep x -> x^2 - 1.
        let gens = vec![
            p(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
            p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -2)]),
        ];
        let e = eliminate_to_univariate(&gens, 0).unwrap();
        assert_eq!(e, Eliminant::Poly(UniPoly::from_int_coeffs(&[-1, 0, 1])));
    }

    #[test]
    fn resultant_by_hand() {
        // {x*y - 1, x + y - 3}, keep y -> y^2 - 3y + 1.
        let gens = vec![
            p(2, &[(&[1, 1], 1), (&[0, 0], -1)]),
            p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]),
        ];
        let e = eliminate_to_univariate(&gens, 1).unwrap();
        assert_eq!(e, Eliminant::Poly(UniPoly::from_int_coeffs(&[1, -3, 1])));
    }

    #[test]
    fn not_zero_dimensional() {
        // A single curve in the plane projects onto both axes.
        let gens = vec![p(2, &[(&[1, 0], 1), (&[0, 1], -1)])];
        let e = eliminate_to_univariate(&gens, 0).unwrap();
        assert_eq!(e, Eliminant::NotZeroDimensional);
    }

    #[test]
    fn unit_ideal_gives_constant() {
        let gens = vec![p(1, &[(&[0], 5)])];
        let e = eliminate_to_univariate(&gens, 0).unwrap();
        assert_eq!(e, Eliminant::Poly(UniPoly::one()));
    }

    #[test]
    fn eliminant_vanishes_on_constructed_zeros() {
        // Generators vanishing at (2, -1, 1/3) by construction.
        use crate::rational::rat;
        let point = [rat_int(2), rat_int(-1), rat(1, 3)];
        let raw = vec![
            p(
                3,
                &[(&[1, 0, 0], 3), (&[0, 2, 0], 2), (&[1, 0, 1], -1), (&[0, 0, 0], 7)],
            ),
            p(3, &[(&[0, 1, 0], 5), (&[0, 0, 2], 4), (&[1, 1, 0], 1)]),
            p(3, &[(&[2, 0, 0], 1), (&[0, 0, 1], -6)]),
        ];
        let gens: Vec<MultiPoly> = raw
            .into_iter()
            .map(|g| {
                let v = g.eval(&point);
                &g - &MultiPoly::constant(3, v)
            })
            .collect();
        for keep in 0..3 {
            match eliminate_to_univariate(&gens, keep).unwrap() {
                Eliminant::Poly(f) => {
                    assert!(f.eval(&point[keep]).is_zero(), "var {keep}: {f}");
                }
                Eliminant::NotZeroDimensional => {
                    panic!("system unexpectedly not zero-dimensional")
                }
            }
        }
    }

    #[test]
    fn quotient_dimension_of_two_circles() {
        // x^2 + y^2 - 2 and x - y: two points, quotient dimension 2.
        let gens = vec![
            p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -2)]),
            p(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ];
        let ctx = EliminationContext::new(&gens).unwrap();
        assert_eq!(ctx.quotient_dimension(), Some(2));
    }
}
