//! Short Weierstrass curves `Y^2 = X^3 + A X + B` over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Curve {
    a: BigInt,
    b: BigInt,
}

impl Curve {
    /// Rejects singular curves (`4A^3 + 27B^2 = 0`).
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        let disc = BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b;
        if disc.is_zero() {
            return Err(Error::Precondition("singular curve".into()));
        }
        Ok(Curve { a, b })
    }

    /// `Y^2 = X^3 - 36X`, the Weierstrass model behind the degree-4 construction.
    pub fn k4() -> Self {
        Curve {
            a: BigInt::from(-36),
            b: BigInt::zero(),
        }
    }

    /// `Y^2 = X^3 - 21X - 20`, the Weierstrass model behind the degree-5 construction.
    pub fn k5() -> Self {
        Curve {
            a: BigInt::from(-21),
            b: BigInt::from(-20),
        }
    }

    /// Generator of the free part of `k4()`: `(-3, 9)`.
    pub fn k4_generator() -> RationalPoint {
        RationalPoint::from_ints(-3, 9)
    }

    /// Generator of the free part of `k5()`: `(-3, 4)`.
    pub fn k5_generator() -> RationalPoint {
        RationalPoint::from_ints(-3, 4)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `X^3 + A X + B`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x
            + Rational::from_integer(self.a.clone()) * x
            + Rational::from_integer(self.b.clone())
    }

    pub fn on_curve(&self, p: &RationalPoint) -> bool {
        match p {
            RationalPoint::Infinity => true,
            RationalPoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    fn check(&self, p: &RationalPoint) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// Chord-and-tangent addition with the point at infinity as identity.
    pub fn add(&self, p: &RationalPoint, q: &RationalPoint) -> Result<RationalPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &RationalPoint, q: &RationalPoint) -> RationalPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (RationalPoint::Infinity, _) => return q.clone(),
            (_, RationalPoint::Infinity) => return p.clone(),
            (RationalPoint::Affine { x: x1, y: y1 }, RationalPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                // inverse points, including doubling a 2-torsion point
                return RationalPoint::Infinity;
            }
            (int(3) * x1 * x1 + Rational::from_integer(self.a.clone())) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        RationalPoint::Affine { x: x3, y: y3 }
    }

    /// `n * p` by binary double-and-add. `0 * p` is the point at infinity.
    pub fn scalar_mul(&self, n: u64, p: &RationalPoint) -> Result<RationalPoint> {
        self.check(p)?;
        let mut acc = RationalPoint::Infinity;
        for bit in (0..u64::BITS - n.leading_zeros()).rev() {
            acc = self.add_unchecked(&acc, &acc);
            if (n >> bit) & 1 == 1 {
                acc = self.add_unchecked(&acc, p);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})X + ({})", self.a, self.b)
    }
}

/// A rational point in affine coordinates, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RationalPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint::Affine {
            x: int(x),
            y: int(y),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            RationalPoint::Infinity => RationalPoint::Infinity,
            RationalPoint::Affine { x, y } => RationalPoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, RationalPoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            RationalPoint::Infinity => None,
            RationalPoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPoint::Infinity => write!(f, "O"),
            RationalPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn membership() {
        assert!(Curve::k4().on_curve(&Curve::k4_generator()));
        assert!(Curve::k5().on_curve(&Curve::k5_generator()));
        assert!(!Curve::k4().on_curve(&RationalPoint::from_ints(0, 1)));
        assert!(Curve::k4().on_curve(&RationalPoint::Infinity));
    }

    #[test]
    fn singular_curves_are_rejected() {
        assert!(Curve::new(0, 0).is_err());
        assert!(Curve::new(-3, 2).is_err());
        assert!(Curve::new(-36, 0).is_ok());
    }

    #[test]
    fn identity_and_inverse() {
        let c = Curve::k4();
        let p = Curve::k4_generator();
        assert_eq!(c.add(&p, &p.neg()).unwrap(), RationalPoint::Infinity);
        assert_eq!(c.add(&p, &RationalPoint::Infinity).unwrap(), p);
        let t = RationalPoint::from_ints(0, 0);
        assert_eq!(c.add(&t, &t).unwrap(), RationalPoint::Infinity);
    }

    #[test]
    fn doubling() {
        let c = Curve::k5();
        let p = Curve::k5_generator();
        let two_p = RationalPoint::new(rat(105, 16), rat(-715, 64));
        assert_eq!(c.add(&p, &p).unwrap(), two_p);
        assert_eq!(c.scalar_mul(2, &p).unwrap(), two_p);

        let c = Curve::k4();
        let p = Curve::k4_generator();
        assert_eq!(
            c.scalar_mul(2, &p).unwrap(),
            RationalPoint::new(rat(25, 4), rat(-35, 8))
        );
        assert_eq!(c.scalar_mul(1, &p).unwrap(), p);
        assert_eq!(c.scalar_mul(0, &p).unwrap(), RationalPoint::Infinity);
    }

    #[test]
    fn off_curve_inputs_are_rejected() {
        let c = Curve::k4();
        let bad = RationalPoint::from_ints(0, 1);
        assert_eq!(c.add(&bad, &Curve::k4_generator()), Err(Error::NotOnCurve));
        assert_eq!(c.scalar_mul(3, &bad), Err(Error::NotOnCurve));
    }
}
