//! Closed-form parametric solutions for degrees 2 through 5.
//!
//! Every generator returns a [`Candidate`]: the integer terms together with
//! the exponents that were actually checked to hold and a triviality flag.
//! Nothing is assumed. A generator whose identity only covers part of the
//! exponent range (the intermediate constructions for degrees 3, 4 and 5)
//! reports exactly that part.
//!
//! Degenerate parameters give flagged candidates rather than errors, except
//! where a formula would divide by zero or a stated precondition fails.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{clear_denominators, int, Rational};
use crate::system::{Solution, TEPair, Term};

/// A generated solution with the exponent range it was verified for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    solution: Solution,
    verified_r: Vec<u32>,
    trivial: bool,
}

impl Candidate {
    /// Wraps integer terms, recording which exponents hold.
    pub fn new(k: u32, lhs: Vec<Term>, rhs: Vec<Term>) -> Result<Self> {
        Ok(Candidate::from_solution(Solution::new(k, lhs, rhs)?))
    }

    pub fn from_solution(solution: Solution) -> Self {
        Candidate {
            verified_r: solution.exponents_holding(),
            trivial: solution.is_trivial(),
            solution,
        }
    }

    /// Rational terms are scaled by the lcm of their denominators first.
    pub fn from_rationals(k: u32, lhs: &[Rational], rhs: &[Rational]) -> Result<Self> {
        let all: Vec<Rational> = lhs.iter().chain(rhs).cloned().collect();
        let mut ints = clear_denominators(&all);
        let rhs_ints = ints.split_off(lhs.len());
        Candidate::new(k, ints, rhs_ints)
    }

    /// Raw terms, before normalization.
    pub fn solution(&self) -> &Solution {
        &self.solution
    }

    pub fn into_solution(self) -> Solution {
        self.solution
    }

    /// Exponents in `1..=k` for which the power sums agree.
    pub fn verified_r(&self) -> &[u32] {
        &self.verified_r
    }

    /// True when the candidate holds for the whole range `1..=k`.
    pub fn is_complete(&self) -> bool {
        self.verified_r.len() == self.solution.k() as usize
    }

    /// Zero padding plus a permutation, including the all-zero candidate.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn normalized(&self) -> Result<Solution> {
        self.solution.normalize()
    }
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn both_zero(a: &BigInt, b: &BigInt) -> bool {
    a.is_zero() && b.is_zero()
}

/// Degree 2, shape (1, 3):
/// `(p^2+pq+q^2)^r = (p^2+pq)^r + (pq+q^2)^r + (-pq)^r` for `r = 1, 2`.
///
/// `p = 0` or `q = 0` gives a trivial candidate.
pub fn k2_family(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Candidate> {
    let (p, q) = (big(p), big(q));
    if both_zero(&p, &q) {
        return Err(Error::Precondition("(p, q) must not be (0, 0)".into()));
    }
    let pq = &p * &q;
    let lhs = vec![&p * &p + &pq + &q * &q];
    let rhs = vec![&p * &p + &pq, &pq + &q * &q, -pq];
    Candidate::new(2, lhs, rhs)
}

/// Degree 3, shape (2, 4): `(c, -c | a, -a, b, -b)` for a Pythagorean triple.
pub fn k3_pythagorean(
    a: impl Into<BigInt>,
    b: impl Into<BigInt>,
    c: impl Into<BigInt>,
) -> Result<Candidate> {
    let (a, b, c) = (big(a), big(b), big(c));
    if &a * &a + &b * &b != &c * &c {
        return Err(Error::Precondition(format!("{a}^2 + {b}^2 != {c}^2")));
    }
    Candidate::new(3, vec![c.clone(), -c], vec![a.clone(), -a, b.clone(), -b])
}

/// Degree 3, shape (2, 4), from the two-sided cubic identity. Holds for
/// `r = 1` and `r = 3` for every parameter choice; `r = 2` holds only when
/// `s` is a root of [`k3_solve_s`].
pub fn k3_partial(p: &Rational, q: &Rational, r: &Rational, s: &Rational) -> Result<Candidate> {
    let (pq, pr, qr) = (p * q, p * r, q * r);
    let lhs = [
        &pq - &pr + &qr - (p - q - r) * s,
        -&pq + &pr + &qr + (p - q + r) * s,
    ];
    let rhs = [
        &pq + &pr - &qr + (p - q + r) * s,
        &pq - &pr + &qr + (p + q - r) * s,
        -&pq + &pr + &qr - (p - q - r) * s,
        -&pq - &pr + &qr - (p + q - r) * s,
    ];
    Candidate::from_rationals(3, &lhs, &rhs)
}

/// Coefficients `(a, b, c)` of `a s^2 + b s + c = 0`, the condition for
/// [`k3_partial`] to hold at `r = 2`.
pub fn k3_s_quadratic(p: &BigInt, q: &BigInt, r: &BigInt) -> (BigInt, BigInt, BigInt) {
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let lead = p + q - r;
    let a = &two * &lead * &lead;
    let b =
        BigInt::from(12) * p * p * q - &four * p * p * r - &four * p * q * q - &four * p * q * r
            + &four * p * r * r
            + &four * q * q * r
            - &four * q * r * r;
    let tail = p * q + p * r - q * r;
    let c = two * &tail * &tail;
    (a, b, c)
}

/// Rational roots of the quadratic in `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SRoots {
    /// No rational root.
    None,
    /// One or two distinct rational roots, ascending.
    Roots(Vec<Rational>),
    /// Every coefficient vanishes; any `s` works.
    Any,
}

/// Solves the quadratic in `s` from [`k3_s_quadratic`] over the rationals.
///
/// With `r = p + q` the leading coefficient vanishes and the equation is
/// linear. Otherwise roots exist iff the discriminant is a perfect square.
pub fn k3_solve_s(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> SRoots {
    let (a, b, c) = k3_s_quadratic(&big(p), &big(q), &big(r));
    if a.is_zero() {
        return if !b.is_zero() {
            SRoots::Roots(vec![Rational::new(-c, b)])
        } else if c.is_zero() {
            SRoots::Any
        } else {
            SRoots::None
        };
    }
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return SRoots::None;
    }
    let root = disc.sqrt();
    if &root * &root != disc {
        return SRoots::None;
    }
    let two_a = BigInt::from(2) * &a;
    let mut roots = vec![
        Rational::new(-&b - &root, two_a.clone()),
        Rational::new(-&b + &root, two_a),
    ];
    roots.sort();
    roots.dedup();
    SRoots::Roots(roots)
}

/// Degree 3, shape (2, 4): the closed two-parameter family obtained from
/// [`k3_partial`] with `r = p + q`.
///
/// `p = q`, `p = 0` and `q = 0` give trivial candidates.
pub fn k3_family(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Candidate> {
    let (p, q) = (big(p), big(q));
    if both_zero(&p, &q) {
        return Err(Error::Precondition("(p, q) must not be (0, 0)".into()));
    }
    let p2 = &p * &p;
    let q2 = &q * &q;
    let p3 = &p2 * &p;
    let q3 = &q2 * &q;
    let p4 = &p2 * &p2;
    let q4 = &q2 * &q2;
    let two = BigInt::from(2);
    let pq = &p * &q;
    let lhs = vec![
        (BigInt::from(3) * &p4 - &two * &p3 * &q - &p2 * &q2 + &q4) * &q,
        (&p4 - &p2 * &q2 - &two * &p * &q3 + BigInt::from(3) * &q4) * &p,
    ];
    let rhs = vec![
        (&p4 - &p2 * &q2 + &two * &p * &q3 - &q4) * &p,
        &two * &pq * (&p - &q) * (&p2 - &pq - &q2),
        -(&p4 - &two * &p3 * &q + &p2 * &q2 - &q4) * &q,
        &two * &pq * (&p - &q) * (&p2 + &pq - &q2),
    ];
    Candidate::new(3, lhs, rhs)
}

/// Degree 4, shape (3, 5). Holds for `r = 1, 2` for any `u, v, w`;
/// `w = k4_w(u, v)` adds `r = 3`, and `v` from [`k4_v_candidates`] adds `r = 4`.
pub fn k4_raw(u: &Rational, v: &Rational, w: &Rational) -> Result<Candidate> {
    let one = int(1);
    let two = int(2);
    let four = int(4);
    let eight = int(8);
    let uv4 = &four * u * v;
    let quad = -&eight * u * u + &eight * u * v + &four * u;
    let lhs = [&uv4 + w + &one, -&uv4 + w - &one, &quad - &two];
    let rhs = [
        &four * u - &two,
        -&four * u,
        &uv4 + w - &one,
        -&uv4 + w + &one,
        quad,
    ];
    Candidate::from_rationals(4, &lhs, &rhs)
}

/// The `w` that makes [`k4_raw`] hold at `r = 3`.
pub fn k4_w(u: &Rational, v: &Rational) -> Result<Rational> {
    if v.is_zero() {
        return Err(Error::Precondition("v must be nonzero".into()));
    }
    let num = int(4) * u * u * u - int(8) * u * u * v + int(4) * u * v * v - int(4) * u * u
        + int(4) * u * v
        + u
        - v;
    Ok(num / v)
}

/// `-32u^4 + 32u^3 + 24u^2 - 16u + 1`, the quartic whose square values
/// give rational `v` in [`k4_v_candidates`].
pub fn k4_quartic(u: &Rational) -> Rational {
    let u2 = u * u;
    int(-32) * &u2 * &u2 + int(32) * &u2 * u + int(24) * &u2 - int(16) * u + int(1)
}

/// `24u v^2 - 2(4u - 1)^2 v + 3u(2u - 1)^2`, the factor whose vanishing
/// makes [`k4_raw`] (with `w` from [`k4_w`]) hold at `r = 4`.
pub fn k4_v_quadratic(u: &Rational, v: &Rational) -> Rational {
    let a = int(4) * u - int(1);
    let b = int(2) * u - int(1);
    int(24) * u * v * v - int(2) * &a * &a * v + int(3) * u * &b * &b
}

/// Both roots `((4u - 1)^2 ± t) / (24u)` of [`k4_v_quadratic`], `+t` first.
///
/// Requires `t^2 = k4_quartic(u)`. `u = 0` and `u = 1/2` are the vanishing
/// factors that only lead to trivial solutions and are rejected.
pub fn k4_v_candidates(u: &Rational, t: &Rational) -> Result<[Rational; 2]> {
    if t * t != k4_quartic(u) {
        return Err(Error::NotOnQuartic);
    }
    if u.is_zero() {
        return Err(Error::Degenerate("u = 0".into()));
    }
    if int(2) * u == int(1) {
        return Err(Error::Degenerate("u = 1/2".into()));
    }
    let a = int(4) * u - int(1);
    let base = &a * &a;
    let den = int(24) * u;
    Ok([(&base + t) / &den, (&base - t) / &den])
}

/// Degree 5, shape (4, 6), from the symmetric 6+6 pair with `X3 = 0`.
pub fn k5_family1(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Candidate> {
    let (m, n) = (big(m), big(n));
    if both_zero(&m, &n) {
        return Err(Error::Precondition("(m, n) must not be (0, 0)".into()));
    }
    let (m2, n2, mn) = (&m * &m, &n * &n, &m * &n);
    let two = BigInt::from(2);
    let base = &m2 + &mn + &n2;
    let lhs = vec![base.clone(), base.clone(), -base.clone(), -base];
    let rhs = vec![
        &m2 - &n2,
        -&m2 - &two * &mn,
        &two * &mn + &n2,
        -&two * &mn - &n2,
        &m2 + &two * &mn,
        -&m2 + &n2,
    ];
    Candidate::new(5, lhs, rhs)
}

/// Degree 5, shape (4, 6), from the symmetric 6+6 pair with `X2 = X3`,
/// translated by `-X3`.
pub fn k5_family2(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Candidate> {
    let (m, n) = (big(m), big(n));
    if both_zero(&m, &n) {
        return Err(Error::Precondition("(m, n) must not be (0, 0)".into()));
    }
    let (m2, n2, mn) = (&m * &m, &n * &n, &m * &n);
    let base = &m2 + &mn + &n2;
    let c = |k: i64| BigInt::from(k);
    let lhs = vec![c(3) * &base, c(2) * &base, -base.clone(), c(2) * &base];
    let rhs = vec![
        c(3) * &m2 + c(3) * &mn,
        c(-3) * &mn,
        c(3) * &mn + c(3) * &n2,
        c(2) * &m2 - &mn - &n2,
        c(2) * &m2 + c(5) * &mn + c(2) * &n2,
        -&m2 - &mn + c(2) * &n2,
    ];
    Candidate::new(5, lhs, rhs)
}

/// The symmetric 6+6 pair of degree 5. The first three terms of each side
/// have equal sums of squares and fourth powers; appending their negatives
/// makes the odd power sums vanish on both sides.
pub fn k5_symmetric_raw(
    m: impl Into<BigInt>,
    n: impl Into<BigInt>,
    x: impl Into<BigInt>,
    y: impl Into<BigInt>,
) -> TEPair {
    let (m, n, x, y) = (big(m), big(n), big(x), big(y));
    let two = BigInt::from(2);
    let a = &m + &two * &n; // m + 2n
    let b = &two * &m + &n; // 2m + n
    let c = &m - &n; // m - n
    let xs = [&a * &x - &c * &y, -(&b * &x) - &a * &y, &c * &x + &b * &y];
    let ys = [&c * &x - &a * &y, -(&b * &x) - &c * &y, &a * &x + &b * &y];
    let extend = |half: [BigInt; 3]| -> Vec<BigInt> {
        let mut side = half.to_vec();
        side.extend(half.iter().rev().map(|t| -t));
        side
    };
    TEPair::new(5, extend(xs), extend(ys)).expect("both sides have six terms")
}

/// `9u^4 - 72u^3 + 24u^2 + 96u - 48`.
pub fn k5_quartic(u: &Rational) -> Rational {
    let u2 = u * u;
    int(9) * &u2 * &u2 - int(72) * &u2 * u + int(24) * &u2 + int(96) * u - int(48)
}

/// `D = k5_quartic(u) - v^2`. [`k5_ec_raw`] is an exact solution iff `D = 0`.
pub fn k5_quartic_defect(u: &Rational, v: &Rational) -> Rational {
    k5_quartic(u) - v * v
}

/// The twelve rational terms of the degree-5 elliptic construction, before
/// denominators are cleared: `[x1, x2, -x1, -x2]` and
/// `[y1, y2, y3, -y3, -y2, -y1]`.
pub fn k5_ec_terms(u: &Rational, v: &Rational) -> (Vec<Rational>, Vec<Rational>) {
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u2 * &u2;
    let u5 = &u4 * u;
    let v2 = v * v;
    let c = int;
    let x1 = u * &v2 + (c(6) * &u3 - c(12) * &u2 + c(32) * u - c(32)) * v + c(9) * &u5
        - c(36) * &u4
        - c(336) * &u2
        + c(96) * &u3
        + c(240) * u;
    let x2 =
        (c(2) * u - c(2)) * &v2 + (c(12) * &u3 - c(48) * &u2 + c(40) * u - c(16)) * v + c(18) * &u5
            - c(126) * &u4
            - c(288) * &u2
            + c(264) * &u3
            + c(96);
    let y1 = (c(2) * u - c(2)) * &v2 + (c(12) * &u3 - c(48) * &u2 + c(48) * u) * v + c(18) * &u5
        - c(126) * &u4
        - c(144) * &u2
        + c(288) * &u3
        + c(96) * u
        - c(96);
    let y2 = u * &v2 + (c(6) * &u3 - c(12) * &u2 - c(32) * u + c(32)) * v + c(9) * &u5
        - c(36) * &u4
        + c(240) * &u2
        - c(96) * &u3
        - c(144) * u;
    let y3 = c(2) * &v2 + (c(24) * &u2 - c(40) * u + c(16)) * v + c(54) * &u4 - c(264) * &u3
        + c(96) * u
        + c(192) * &u2
        - c(96);
    let lhs = vec![x1.clone(), x2.clone(), -x1, -x2];
    let rhs = vec![y1.clone(), y2.clone(), y3.clone(), -y3, -y2, -y1];
    (lhs, rhs)
}

/// Degree 5, shape (4, 6). Odd exponents hold for every `(u, v)`; the even
/// exponents hold iff `v^2 = k5_quartic(u)`.
pub fn k5_ec_raw(u: &Rational, v: &Rational) -> Result<Candidate> {
    let (lhs, rhs) = k5_ec_terms(u, v);
    Candidate::from_rationals(5, &lhs, &rhs)
}

/// Exact power-sum defect `sum(x^r) - sum(y^r)` of the rational terms of
/// [`k5_ec_terms`], without clearing denominators.
pub fn k5_ec_defect(u: &Rational, v: &Rational, r: u32) -> Rational {
    let (lhs, rhs) = k5_ec_terms(u, v);
    let sum = |side: &[Rational]| -> Rational {
        side.iter()
            .map(|t| num_traits::pow(t.clone(), r as usize))
            .fold(Rational::zero(), |acc, t| acc + t)
    };
    sum(&lhs) - sum(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::system::drop_zeros;
    use crate::system::frolov_shift;

    fn sol(k: u32, l: &[i64], r: &[i64]) -> Solution {
        Solution::from_i64(k, l, r).unwrap()
    }

    #[test]
    fn k2_examples() {
        let c = k2_family(1, 1).unwrap();
        assert_eq!(c.solution(), &sol(2, &[3], &[2, 2, -1]));
        assert!(c.is_complete() && !c.is_trivial());

        let c = k2_family(1, 0).unwrap();
        assert_eq!(c.solution(), &sol(2, &[1], &[1, 0, 0]));
        assert!(c.is_trivial());

        assert_eq!(
            k2_family(2, 1).unwrap().solution(),
            &sol(2, &[7], &[6, 3, -2])
        );
        assert!(k2_family(0, 0).is_err());
    }

    #[test]
    fn pythagorean_examples() {
        let c = k3_pythagorean(3, 4, 5).unwrap();
        assert_eq!(c.solution(), &sol(3, &[5, -5], &[3, -3, 4, -4]));
        assert!(c.is_complete());
        assert!(k3_pythagorean(0, 5, 5).unwrap().is_trivial());
        let c = k3_pythagorean(5, 12, 13).unwrap();
        assert_eq!(c.solution(), &sol(3, &[13, -13], &[5, -5, 12, -12]));
        assert!(k3_pythagorean(1, 2, 3).is_err());
    }

    #[test]
    fn k3_partial_examples() {
        let one = int(1);
        let c = k3_partial(&one, &one, &one, &one).unwrap();
        assert_eq!(c.solution(), &sol(3, &[2, 2], &[2, 2, 2, -2]));
        assert_eq!(c.verified_r(), &[1, 3]);
        assert_eq!(c.solution().defect(2), BigInt::from(-8));

        let zero = int(0);
        assert!(k3_partial(&zero, &zero, &zero, &zero).unwrap().is_trivial());

        let c = k3_partial(&int(2), &int(1), &int(3), &rat(-25, 8)).unwrap();
        assert!(c.is_complete());
        assert!(c.solution().lhs().contains(&BigInt::from(-29)));
        assert_eq!(c.normalized().unwrap(), sol(3, &[29, 22], &[30, 20, 4, -3]));
    }

    #[test]
    fn solve_s_examples() {
        assert_eq!(k3_solve_s(2, 1, 3), SRoots::Roots(vec![rat(-25, 8)]));
        // on r = p + q the linear coefficient is 8pq(p - q), so p = q leaves
        // the nonzero constant 2(p^2 + pq - q^2)^2 and no root
        let (a, b, c) = k3_s_quadratic(&BigInt::from(1), &BigInt::from(1), &BigInt::from(2));
        assert_eq!(
            (a, b, c),
            (BigInt::from(0), BigInt::from(0), BigInt::from(2))
        );
        assert_eq!(k3_solve_s(1, 1, 2), SRoots::None);
        assert_eq!(k3_solve_s(3, 1, 4), SRoots::Roots(vec![rat(-121, 24)]));
        assert_eq!(k3_solve_s(1, 0, 0), SRoots::Roots(vec![int(0)]));
        assert_eq!(k3_solve_s(0, 0, 0), SRoots::Any);
    }

    #[test]
    fn k3_family_examples() {
        let c = k3_family(2, 1).unwrap();
        assert_eq!(c.solution(), &sol(3, &[29, 22], &[30, 4, -3, 20]));
        assert!(c.is_complete() && !c.is_trivial());

        let c = k3_family(1, 1).unwrap();
        assert!(c.is_complete() && c.is_trivial());
        assert!(c.solution().rhs()[1].is_zero() && c.solution().rhs()[3].is_zero());

        let c = k3_family(3, 1).unwrap();
        assert!(c.is_complete() && !c.is_trivial());
        assert!(c.normalized().unwrap().verify());
        assert!(k3_family(0, 0).is_err());
    }

    #[test]
    fn k4_raw_examples() {
        let c = k4_raw(&int(1), &int(1), &int(1)).unwrap();
        assert_eq!(c.solution(), &sol(4, &[6, -4, 2], &[2, -4, 4, -2, 4]));
        assert_eq!(c.verified_r(), &[1, 2]);
        assert_eq!(power_sum_i(&[6, -4, 2], 3), 160);
        assert_eq!(power_sum_i(&[2, -4, 4, -2, 4], 3), 64);

        let c = k4_raw(&int(0), &int(0), &int(5)).unwrap();
        assert_eq!(c.solution(), &sol(4, &[6, 4, -2], &[-2, 0, 4, 6, 0]));
        assert!(c.is_trivial());

        let half = rat(1, 2);
        let w = k4_w(&int(1), &half).unwrap();
        assert_eq!(w, int(-1));
        let c = k4_raw(&int(1), &half, &w).unwrap();
        assert_eq!(c.solution(), &sol(4, &[2, -4, -2], &[2, -4, 0, -2, 0]));
        assert!(c.is_complete() && c.is_trivial());
    }

    fn power_sum_i(v: &[i64], r: u32) -> i64 {
        v.iter().map(|t| t.pow(r)).sum()
    }

    #[test]
    fn k4_w_examples() {
        assert_eq!(k4_w(&int(1), &int(1)).unwrap(), int(0));
        assert_eq!(k4_w(&int(1), &rat(1, 2)).unwrap(), int(-1));
        assert!(k4_w(&int(1), &int(0)).is_err());
        for v in [rat(1, 3), rat(-7, 5), int(4)] {
            let u = rat(1, 2);
            let w = k4_w(&u, &v).unwrap();
            let c = k4_raw(&u, &v, &w).unwrap();
            assert!(c.verified_r().contains(&3));
        }
    }

    #[test]
    fn v_candidates_examples() {
        assert_eq!(k4_quartic(&int(1)), int(9));
        let [a, b] = k4_v_candidates(&int(1), &int(3)).unwrap();
        assert_eq!((a.clone(), b.clone()), (rat(1, 2), rat(1, 4)));
        let [c, d] = k4_v_candidates(&int(1), &int(-3)).unwrap();
        assert_eq!((c, d), (b, a));
        assert!(matches!(
            k4_v_candidates(&rat(1, 2), &int(1)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            k4_v_candidates(&int(0), &int(1)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            k4_v_candidates(&int(1), &int(2)),
            Err(Error::NotOnQuartic)
        ));
    }

    #[test]
    fn k5_family_examples() {
        let c = k5_family1(2, 1).unwrap();
        assert_eq!(
            c.solution(),
            &sol(5, &[7, 7, -7, -7], &[3, -8, 5, -5, 8, -3])
        );
        assert!(c.is_complete() && !c.is_trivial());
        let c = k5_family1(1, 0).unwrap();
        assert_eq!(
            c.solution(),
            &sol(5, &[1, 1, -1, -1], &[1, -1, 0, 0, 1, -1])
        );
        assert!(c.is_trivial());
        assert!(k5_family1(1, 1).unwrap().is_trivial());
        assert!(k5_family1(3, 1).unwrap().normalized().unwrap().verify());

        let c = k5_family2(2, 1).unwrap();
        assert_eq!(
            c.solution(),
            &sol(5, &[21, 14, -7, 14], &[18, -6, 9, 5, 20, -4])
        );
        assert!(c.is_complete() && !c.is_trivial());
        assert!(k5_family2(1, 0).unwrap().is_trivial());
        let c = k5_family2(1, -1).unwrap();
        assert!(c.is_complete());
        assert!(k5_family2(0, 0).is_err());
    }

    #[test]
    fn symmetric_pair_examples() {
        let te = k5_symmetric_raw(2, 1, -5, 1);
        assert!(te.verify());
        assert!(te.a()[2].is_zero());
        let asym = drop_zeros(&te).unwrap();
        assert_eq!(asym.shape().s1(), 4);
        assert_eq!(
            asym.normalize().unwrap(),
            k5_family1(2, 1).unwrap().normalized().unwrap()
        );

        assert!(k5_symmetric_raw(1, 1, 1, 1).verify());
        let zero = k5_symmetric_raw(3, 2, 0, 0);
        assert!(zero.a().iter().chain(zero.b()).all(|t| t.is_zero()));
    }

    #[test]
    fn shifted_symmetric_pair_gives_second_family() {
        // X2 = X3 when x = m + n, y = -m
        let (m, n) = (2i64, 1i64);
        let te = k5_symmetric_raw(m, n, m + n, -m);
        assert_eq!(te.a()[1], te.a()[2]);
        let d = -te.a()[2].clone();
        let shifted = frolov_shift(&te, &d).unwrap();
        let asym = drop_zeros(&shifted).unwrap();
        assert_eq!(asym.shape().s1(), 4);
        assert_eq!(
            asym.normalize().unwrap(),
            k5_family2(m, n).unwrap().normalized().unwrap()
        );
    }

    #[test]
    fn k5_ec_examples() {
        let u = rat(2, 3);
        let v = rat(-8, 3);
        assert_eq!(k5_quartic_defect(&u, &v), int(0));
        let c = k5_ec_raw(&u, &v).unwrap();
        assert!(c.is_complete());
        assert!(c.normalized().unwrap().is_trivial());

        let (u, v) = (int(1), int(1));
        let d = k5_quartic_defect(&u, &v);
        assert_eq!(d, int(8));
        assert_eq!(k5_ec_defect(&u, &v, 2), int(-512));
        for r in [1, 3, 5] {
            assert_eq!(k5_ec_defect(&u, &v, r), int(0));
        }
        let c = k5_ec_raw(&u, &v).unwrap();
        assert_eq!(c.verified_r(), &[1, 3, 5]);
    }
}
