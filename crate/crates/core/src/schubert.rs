//! Partitions, Schubert problems, and exact solution counts.
//!
//! Solution counts come from iterated Littlewood-Richardson multiplication
//! of Schur classes in the k x (n-k) box quotient, pairing the final class
//! against the full box. Coefficients are counted by direct enumeration of
//! ballot column-strict skew fillings; desk-scale problems have tiny
//! supports, so no optimized engine is warranted.

use std::collections::BTreeMap;

use num::bigint::BigUint;
use num::traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Weakly decreasing parts, trailing zeros trimmed. The empty partition is
/// allowed and imposes no condition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |lambda|, the codimension of the Schubert condition.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// At most `rows` parts, each at most `width`.
    pub fn fits_in_box(&self, rows: usize, width: u32) -> bool {
        self.0.len() <= rows && self.0.first().is_none_or(|&p| p <= width)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Column lengths of the Young diagram (matrix transpose).
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        let cols = (1..=first)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Comma-separated parts, e.g. "3,1".
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition `{text}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// A Schubert problem on G(k, n): conditions whose codimensions fill the
/// dimension of the Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertProblem {
    k: usize,
    n: usize,
    conditions: Vec<Partition>,
}

impl SchubertProblem {
    pub fn new(k: usize, n: usize, conditions: Vec<Partition>) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidProblem(format!("need 0 < k < n, got ({k}, {n})")));
        }
        let width = (n - k) as u32;
        for c in &conditions {
            if c.is_empty() {
                return Err(Error::InvalidProblem(
                    "empty condition imposes nothing".into(),
                ));
            }
            if !c.fits_in_box(k, width) {
                return Err(Error::InvalidProblem(format!(
                    "condition {c} does not fit in the {k}x{width} box"
                )));
            }
        }
        let total: u32 = conditions.iter().map(|c| c.size()).sum();
        if total != (k as u32) * width {
            return Err(Error::InvalidProblem(format!(
                "codimensions sum to {total}, expected {}",
                (k as u32) * width
            )));
        }
        Ok(SchubertProblem { k, n, conditions })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conditions(&self) -> &[Partition] {
        &self.conditions
    }

    pub fn box_width(&self) -> u32 {
        (self.n - self.k) as u32
    }

    /// Text form "k n l1 l2 ..." with repetition shorthand, e.g. "3 7 1^4 3,1^2".
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let k: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing k".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad problem `{text}`")))?;
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing n".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad problem `{text}`")))?;
        let mut conditions = Vec::new();
        for token in tokens {
            let (part_text, rep) = match token.split_once('^') {
                Some((p, r)) => (
                    p,
                    r.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad repetition `{token}`")))?,
                ),
                None => (token, 1),
            };
            let part = Partition::parse(part_text)?;
            for _ in 0..rep {
                conditions.push(part.clone());
            }
        }
        SchubertProblem::new(k, n, conditions)
    }

    /// Canonical text form with adjacent equal conditions grouped.
    pub fn canonical_string(&self) -> String {
        let mut pieces = vec![self.k.to_string(), self.n.to_string()];
        let mut i = 0;
        while i < self.conditions.len() {
            let mut j = i;
            while j < self.conditions.len() && self.conditions[j] == self.conditions[i] {
                j += 1;
            }
            let run = j - i;
            if run == 1 {
                pieces.push(self.conditions[i].to_string());
            } else {
                pieces.push(format!("{}^{}", self.conditions[i], run));
            }
            i = j;
        }
        pieces.join(" ")
    }

    /// The dual problem on G(n-k, n) with conjugated conditions.
    pub fn dual(&self) -> SchubertProblem {
        SchubertProblem {
            k: self.n - self.k,
            n: self.n,
            conditions: self.conditions.iter().map(|c| c.conjugate()).collect(),
        }
    }

    /// Number of solutions for general flags.
    pub fn degree(&self) -> u64 {
        problem_degree(self)
    }
}

impl std::fmt::Display for SchubertProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// Dimension of the largest flag element imposing a relevant condition:
/// n - k + i - lambda_i at the last nonzero part. Errors on the zero
/// partition, which imposes no condition.
pub fn relevant_dimension(lambda: &Partition, k: usize, n: usize) -> Result<usize> {
    if lambda.is_empty() {
        return Err(Error::ZeroPartition);
    }
    let i = lambda.len(); // 1-based index of the last nonzero part
    let li = lambda.part(i - 1) as usize;
    Ok(n - k + i - li)
}

/// Counts ballot column-strict fillings of nu/mu with content lambda.
fn lr_coefficient(mu: &Partition, lambda: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(mu) || nu.size() != mu.size() + lambda.size() {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for r in 0..nu.len() {
        let lo = mu.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let letters = lambda.len();
    let mut filling: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut used = vec![0u32; letters];

    fn recurse(
        cells: &[(usize, u32)],
        pos: usize,
        mu: &Partition,
        lambda: &Partition,
        filling: &mut BTreeMap<(usize, u32), usize>,
        used: &mut [u32],
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        let mut count = 0;
        for letter in 0..lambda.len() {
            if used[letter] >= lambda.part(letter) {
                continue;
            }
            // Ballot on the reverse reading word.
            if letter > 0 && used[letter - 1] <= used[letter] {
                continue;
            }
            // Weakly increasing along the row (right neighbor filled first).
            if let Some(&right) = filling.get(&(r, c + 1)) {
                if letter > right {
                    continue;
                }
            }
            // Strictly increasing down columns. The cell above is either in
            // mu (no constraint) or a previously filled skew cell.
            if r > 0 && c >= mu.part(r - 1) {
                match filling.get(&(r - 1, c)) {
                    Some(&above) if letter > above => {}
                    _ => continue,
                }
            }
            used[letter] += 1;
            filling.insert((r, c), letter);
            count += recurse(cells, pos + 1, mu, lambda, filling, used);
            filling.remove(&(r, c));
            used[letter] -= 1;
        }
        count
    }

    recurse(&cells, 0, mu, lambda, &mut filling, &mut used)
}

/// All partitions fitting in a rows x width box.
pub fn partitions_in_box(rows: usize, width: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack = vec![(Vec::new(), width)];
    while let Some((prefix, max)) = stack.pop() {
        if prefix.len() == rows {
            continue;
        }
        for p in 1..=max {
            let mut next = prefix.clone();
            next.push(p);
            out.push(Partition(next.clone()));
            stack.push((next, p));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Multiplies a class (multiset of Schur classes in the box quotient) by
/// s_lambda, discarding anything outside the box.
fn multiply_class(
    class: &BTreeMap<Partition, u128>,
    lambda: &Partition,
    rows: usize,
    width: u32,
) -> BTreeMap<Partition, u128> {
    let candidates = partitions_in_box(rows, width);
    let mut out = BTreeMap::new();
    for (mu, &mult) in class {
        for nu in &candidates {
            if nu.size() != mu.size() + lambda.size() || !nu.contains(mu) {
                continue;
            }
            let c = lr_coefficient(mu, lambda, nu);
            if c > 0 {
                *out.entry(nu.clone()).or_insert(0) += mult * c as u128;
            }
        }
    }
    out
}

/// Number of solutions of the problem for general flags.
pub fn problem_degree(problem: &SchubertProblem) -> u64 {
    let rows = problem.k();
    let width = problem.box_width();
    let mut class: BTreeMap<Partition, u128> = BTreeMap::new();
    class.insert(Partition::empty(), 1);
    for condition in problem.conditions() {
        class = multiply_class(&class, condition, rows, width);
        if class.is_empty() {
            return 0;
        }
    }
    let full_box = Partition(vec![width; rows]);
    let degree = class.get(&full_box).copied().unwrap_or(0);
    u64::try_from(degree).expect("degree exceeds u64")
}

/// [k(n-k)]! 1!2!...(k-1)! / ((n-k)!...(n-1)!), the degree of the
/// Grassmannian in its Pluecker embedding.
pub fn schubert_number(k: usize, n: usize) -> u64 {
    assert!(0 < k && k < n);
    let fact = |m: usize| -> BigUint {
        let mut acc = BigUint::one();
        for i in 2..=m {
            acc *= BigUint::from(i);
        }
        acc
    };
    let mut numerator = fact(k * (n - k));
    for i in 1..k {
        numerator *= fact(i);
    }
    let mut denominator = BigUint::one();
    for i in n - k..n {
        denominator *= fact(i);
    }
    debug_assert!((&numerator % &denominator).is_zero());
    (numerator / denominator)
        .to_u64()
        .expect("Schubert number exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn uniform(k: usize, n: usize) -> SchubertProblem {
        let m = k * (n - k);
        SchubertProblem::new(k, n, vec![part(&[1]); m]).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[2]).conjugate(), part(&[1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // Transpose the two-row diagram by hand: (3,1) -> (2,1,1).
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        for p in partitions_in_box(4, 5) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().size(), p.size());
        }
    }

    #[test]
    fn known_degrees() {
        assert_eq!(uniform(2, 4).degree(), 2);
        assert_eq!(uniform(2, 5).degree(), 5);
        assert_eq!(uniform(3, 7).degree(), 462);
        assert_eq!(uniform(2, 6).degree(), 14);

        let mixed = SchubertProblem::new(
            3,
            7,
            vec![
                part(&[1]),
                part(&[1]),
                part(&[1]),
                part(&[1]),
                part(&[3, 1]),
                part(&[3, 1]),
            ],
        )
        .unwrap();
        assert_eq!(mixed.degree(), 12);

        let gap = SchubertProblem::new(4, 8, vec![part(&[2, 2]); 4]).unwrap();
        assert_eq!(gap.degree(), 6);

        let aux = SchubertProblem::new(2, 8, vec![part(&[3]); 4]).unwrap();
        assert_eq!(aux.degree(), 4);
    }

    #[test]
    fn schubert_number_formula() {
        assert_eq!(schubert_number(2, 4), 2);
        assert_eq!(schubert_number(2, 5), 5);
        assert_eq!(schubert_number(3, 7), 462);
        for n in 2..=8usize {
            for k in 1..n {
                assert_eq!(schubert_number(k, n), uniform(k, n).degree(), "({k},{n})");
            }
        }
    }

    #[test]
    fn degree_invariant_under_permutation() {
        let a = SchubertProblem::new(
            3,
            7,
            vec![
                part(&[3, 1]),
                part(&[1]),
                part(&[3, 1]),
                part(&[1]),
                part(&[1]),
                part(&[1]),
            ],
        )
        .unwrap();
        assert_eq!(a.degree(), 12);
    }

    #[test]
    fn relevant_dimensions() {
        assert_eq!(relevant_dimension(&part(&[1]), 2, 5).unwrap(), 3);
        assert_eq!(relevant_dimension(&part(&[3, 1]), 3, 7).unwrap(), 5);
        assert_eq!(relevant_dimension(&part(&[1]), 3, 7).unwrap(), 4);
        assert_eq!(
            relevant_dimension(&Partition::empty(), 2, 5),
            Err(Error::ZeroPartition)
        );
    }

    #[test]
    fn dual_problems() {
        let a = uniform(2, 4);
        assert_eq!(a.dual(), a);

        let b = uniform(2, 5);
        let db = b.dual();
        assert_eq!(db.k(), 3);
        assert_eq!(db.n(), 5);
        assert_eq!(db.degree(), b.degree());

        let c = SchubertProblem::new(4, 8, vec![part(&[2, 2]); 4]).unwrap();
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn parse_and_canonical() {
        let p = SchubertProblem::parse("3 7 1^4 3,1^2").unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.n(), 7);
        assert_eq!(p.conditions().len(), 6);
        assert_eq!(p.canonical_string(), "3 7 1^4 3,1^2");
        assert_eq!(p.degree(), 12);

        assert!(SchubertProblem::parse("2 4 1^3").is_err());
        assert!(SchubertProblem::parse("2 4 3^2").is_err());
        assert!(Partition::parse("1,3").is_err());
    }

    #[test]
    fn validation_rejects_bad_problems() {
        assert!(SchubertProblem::new(2, 2, vec![]).is_err());
        assert!(SchubertProblem::new(2, 4, vec![part(&[1]); 3]).is_err());
        assert!(SchubertProblem::new(2, 4, vec![part(&[1, 1, 1]), part(&[1])]).is_err());
    }
}
