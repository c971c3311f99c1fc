//! Multigrade systems and their solutions.
//!
//! A solution of degree `k` is a pair of integer lists `lhs`, `rhs` with
//! `sum(lhs[i]^r) == sum(rhs[j]^r)` for every `r` in `1..=k`. Sides may have
//! different lengths; the shorter one is always stored on the left.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A single term of a solution. Arbitrary precision, never overflows.
pub type Term = BigInt;

/// `(k, s1, s2)`: the highest exponent and the number of terms on each side.
///
/// Constructed shapes always have `s1 <= s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemShape {
    k: u32,
    s1: usize,
    s2: usize,
}

impl SystemShape {
    /// Builds a shape, swapping the side counts if needed so that `s1 <= s2`.
    pub fn new(k: u32, s1: usize, s2: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidShape("k must be at least 1".into()));
        }
        if s1 == 0 || s2 == 0 {
            return Err(Error::InvalidShape(
                "both sides need at least one term".into(),
            ));
        }
        let (s1, s2) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        Ok(SystemShape { k, s1, s2 })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s1(&self) -> usize {
        self.s1
    }

    pub fn s2(&self) -> usize {
        self.s2
    }

    pub fn total(&self) -> usize {
        self.s1 + self.s2
    }

    /// Whether a nontrivial solution of this shape can exist at all, according
    /// to the side-count lower bounds (see [`shape_lower_bounds`]).
    pub fn is_feasible(&self) -> bool {
        let bounds = shape_lower_bounds(self.k);
        self.s2 >= bounds.max_side_min && self.s1 >= bounds.min_side_min
    }
}

impl fmt::Display for SystemShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} ({}, {})", self.k, self.s1, self.s2)
    }
}

/// Minimum side sizes and total term count for a nontrivial solution of degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeBounds {
    /// Lower bound on `max(s1, s2)`.
    pub max_side_min: usize,
    /// Lower bound on `min(s1, s2)`.
    pub min_side_min: usize,
    /// Lower bound on `s1 + s2`, i.e. on beta(k).
    pub total_min: usize,
}

/// Lower bounds any nontrivial solution of degree `k` must meet.
///
/// The longer side needs at least `k + 1` terms. From `k = 4` on, a single
/// term on the short side only admits trivial solutions, so the short side
/// needs two terms and the total rises from `k + 2` to `k + 3`.
pub fn shape_lower_bounds(k: u32) -> ShapeBounds {
    let k = k as usize;
    let min_side_min = if k >= 4 { 2 } else { 1 };
    ShapeBounds {
        max_side_min: k + 1,
        min_side_min,
        total_min: k + 1 + min_side_min,
    }
}

/// `sum(t^r)` over `terms`, exactly. The empty sum is zero.
pub fn power_sum(terms: &[Term], r: u32) -> Term {
    terms
        .iter()
        .map(|t| num_traits::pow(t.clone(), r as usize))
        .sum()
}

/// Both sides of a solution of degree `k`, shorter side on the left.
///
/// Construction checks only the shape. Whether the power sums agree is a
/// property queried with [`Solution::verify`] or [`Solution::holds_for`];
/// parametric constructions produce candidates that hold only for part of
/// the exponent range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    k: u32,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
}

impl Solution {
    pub fn new(k: u32, lhs: Vec<Term>, rhs: Vec<Term>) -> Result<Self> {
        SystemShape::new(k, lhs.len(), rhs.len())?;
        let (lhs, rhs) = if lhs.len() <= rhs.len() {
            (lhs, rhs)
        } else {
            (rhs, lhs)
        };
        Ok(Solution { k, lhs, rhs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(k: u32, lhs: &[i64], rhs: &[i64]) -> Result<Self> {
        Solution::new(
            k,
            lhs.iter().map(|&t| BigInt::from(t)).collect(),
            rhs.iter().map(|&t| BigInt::from(t)).collect(),
        )
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn lhs(&self) -> &[Term] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Term] {
        &self.rhs
    }

    pub fn shape(&self) -> SystemShape {
        SystemShape {
            k: self.k,
            s1: self.lhs.len(),
            s2: self.rhs.len(),
        }
    }

    /// Same terms, different degree. Useful to ask whether a solution of one
    /// degree also solves a higher one.
    pub fn with_degree(&self, k: u32) -> Result<Self> {
        Solution::new(k, self.lhs.clone(), self.rhs.clone())
    }

    /// `power_sum(lhs, r) - power_sum(rhs, r)`.
    pub fn defect(&self, r: u32) -> Term {
        power_sum(&self.lhs, r) - power_sum(&self.rhs, r)
    }

    pub fn holds_for(&self, r: u32) -> bool {
        self.defect(r).is_zero()
    }

    /// The exponents in `1..=k` for which the two sides agree.
    pub fn exponents_holding(&self) -> Vec<u32> {
        (1..=self.k).filter(|&r| self.holds_for(r)).collect()
    }

    /// True iff the power sums agree for every `r` in `1..=k`.
    pub fn verify(&self) -> bool {
        (1..=self.k).all(|r| self.holds_for(r))
    }

    /// True iff the solution is the short side padded with zeros, up to order.
    ///
    /// Exactly `s2 - s1` zeros are removed from the long side and the rest is
    /// compared with the short side as a multiset. Zeros beyond that quota
    /// therefore have to be matched by zeros on the short side.
    pub fn is_trivial(&self) -> bool {
        let quota = self.rhs.len() - self.lhs.len();
        let mut rest = Vec::with_capacity(self.lhs.len());
        let mut removed = 0;
        for t in &self.rhs {
            if removed < quota && t.is_zero() {
                removed += 1;
            } else {
                rest.push(t.clone());
            }
        }
        if removed < quota {
            return false;
        }
        let mut lhs = self.lhs.clone();
        lhs.sort();
        rest.sort();
        lhs == rest
    }

    fn is_all_zero(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).all(Zero::is_zero)
    }

    /// Canonical representative of the solution's class.
    ///
    /// Divides by the gcd of all terms, sorts each side in descending order
    /// and fixes the overall sign so that the term of largest magnitude is
    /// positive (ties broken by the lexicographically larger term sequence).
    /// When both sides have the same length the lexicographically larger side
    /// goes on the left. Every step maps solutions to solutions, so the
    /// exponents that hold are preserved. Fails on the all-zero solution.
    pub fn normalize(&self) -> Result<Solution> {
        if self.is_all_zero() {
            return Err(Error::Degenerate("all terms are zero".into()));
        }
        let g = self
            .lhs
            .iter()
            .chain(&self.rhs)
            .fold(BigInt::zero(), |acc, t| acc.gcd(t));
        let scale = |side: &[Term]| -> Vec<Term> { side.iter().map(|t| t / &g).collect() };
        let plus = self.arranged(scale(&self.lhs), scale(&self.rhs));
        let minus = self.arranged(
            plus.lhs.iter().map(|t| -t).collect(),
            plus.rhs.iter().map(|t| -t).collect(),
        );
        Ok(if sign_preference(&plus, &minus) == Ordering::Less {
            minus
        } else {
            plus
        })
    }

    fn arranged(&self, mut lhs: Vec<Term>, mut rhs: Vec<Term>) -> Solution {
        lhs.sort_by(|a, b| b.cmp(a));
        rhs.sort_by(|a, b| b.cmp(a));
        if lhs.len() == rhs.len() && rhs > lhs {
            std::mem::swap(&mut lhs, &mut rhs);
        }
        Solution {
            k: self.k,
            lhs,
            rhs,
        }
    }

    /// Maximum absolute value over all terms.
    pub fn height(&self) -> Term {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .map(|t| t.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiplies every term by `factor`.
    pub fn scaled(&self, factor: &BigInt) -> Solution {
        Solution {
            k: self.k,
            lhs: self.lhs.iter().map(|t| t * factor).collect(),
            rhs: self.rhs.iter().map(|t| t * factor).collect(),
        }
    }
}

/// Orders `a` against `b` by which one makes the better canonical sign
/// choice: the larger positive extreme wins, then lexicographic order.
fn sign_preference(a: &Solution, b: &Solution) -> Ordering {
    let top = |s: &Solution| {
        s.lhs
            .iter()
            .chain(&s.rhs)
            .max()
            .cloned()
            .unwrap_or_default()
    };
    top(a)
        .cmp(&top(b))
        .then_with(|| a.lhs.cmp(&b.lhs))
        .then_with(|| a.rhs.cmp(&b.rhs))
}

impl PartialOrd for Solution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, shape, then term sequence. This is the deterministic
/// order used for reports.
impl Ord for Solution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then_with(|| self.lhs.len().cmp(&other.lhs.len()))
            .then_with(|| self.rhs.len().cmp(&other.rhs.len()))
            .then_with(|| self.lhs.cmp(&other.lhs))
            .then_with(|| self.rhs.cmp(&other.rhs))
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |side: &[Term]| {
            side.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "[{}] = [{}]  (r = 1..{})",
            join(&self.lhs),
            join(&self.rhs),
            self.k
        )
    }
}

/// Two equal-length lists with equal power sums for `r` in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TEPair {
    k: u32,
    a: Vec<Term>,
    b: Vec<Term>,
}

impl TEPair {
    pub fn new(k: u32, a: Vec<Term>, b: Vec<Term>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidShape("k must be at least 1".into()));
        }
        if a.len() != b.len() {
            return Err(Error::InvalidShape(format!(
                "sides have different lengths ({} and {})",
                a.len(),
                b.len()
            )));
        }
        Ok(TEPair { k, a, b })
    }

    pub fn from_i64(k: u32, a: &[i64], b: &[i64]) -> Result<Self> {
        TEPair::new(
            k,
            a.iter().map(|&t| BigInt::from(t)).collect(),
            b.iter().map(|&t| BigInt::from(t)).collect(),
        )
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> &[Term] {
        &self.a
    }

    pub fn b(&self) -> &[Term] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn verify(&self) -> bool {
        (1..=self.k).all(|r| power_sum(&self.a, r) == power_sum(&self.b, r))
    }
}

/// Translates every term of a symmetric pair by `d`.
///
/// Equal power sums for `r = 1..k` are preserved under translation, so a
/// verifying pair stays a verifying pair. The input is checked first and the
/// output is checked again.
pub fn frolov_shift(te: &TEPair, d: &Term) -> Result<TEPair> {
    if !te.verify() {
        return Err(Error::NotASolution(
            "pair does not satisfy its system".into(),
        ));
    }
    let shift = |side: &[Term]| side.iter().map(|t| t + d).collect();
    let shifted = TEPair {
        k: te.k,
        a: shift(&te.a),
        b: shift(&te.b),
    };
    if !shifted.verify() {
        return Err(Error::NotASolution(
            "shifted pair failed verification".into(),
        ));
    }
    Ok(shifted)
}

/// Removes zero terms from both sides of a pair, giving an asymmetric solution.
///
/// Fails if a side consists only of zeros.
pub fn drop_zeros(te: &TEPair) -> Result<Solution> {
    let nonzero =
        |side: &[Term]| -> Vec<Term> { side.iter().filter(|t| !t.is_zero()).cloned().collect() };
    let (a, b) = (nonzero(&te.a), nonzero(&te.b));
    if a.is_empty() || b.is_empty() {
        return Err(Error::Degenerate("a side has no nonzero terms".into()));
    }
    Solution::new(te.k, a, b)
}

/// Least common multiple of the given integers, one for an empty slice.
pub(crate) fn lcm_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v))
}
