//! Quartic models and their birational maps to the Weierstrass curves.
//!
//! The degree-4 construction needs rational points on
//! `t^2 = -32u^4 + 32u^3 + 24u^2 - 16u + 1`, which is birational to
//! `Y^2 = X^3 - 36X`. The degree-5 construction needs rational points on
//! `v^2 = 9u^4 - 72u^3 + 24u^2 + 96u - 48`, birational to
//! `Y^2 = X^3 - 21X - 20`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{k4_quartic, k5_quartic};
use crate::rational::{int, Rational};

use super::curve::{Curve, RationalPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuarticModel {
    K4,
    K5,
}

impl QuarticModel {
    pub fn curve(&self) -> Curve {
        match self {
            QuarticModel::K4 => Curve::k4(),
            QuarticModel::K5 => Curve::k5(),
        }
    }

    pub fn generator(&self) -> RationalPoint {
        match self {
            QuarticModel::K4 => Curve::k4_generator(),
            QuarticModel::K5 => Curve::k5_generator(),
        }
    }

    /// The quartic polynomial evaluated at `u`.
    pub fn quartic(&self, u: &Rational) -> Rational {
        match self {
            QuarticModel::K4 => k4_quartic(u),
            QuarticModel::K5 => k5_quartic(u),
        }
    }
}

/// A rational point `(u, t)` (K4) or `(u, v)` (K5) on its quartic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticParams {
    model: QuarticModel,
    u: Rational,
    second: Rational,
}

impl QuarticParams {
    /// Checks the quartic equation exactly.
    pub fn new(model: QuarticModel, u: Rational, second: Rational) -> Result<Self> {
        if &second * &second != model.quartic(&u) {
            return Err(Error::NotOnQuartic);
        }
        Ok(QuarticParams { model, u, second })
    }

    pub fn model(&self) -> QuarticModel {
        self.model
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    /// `t` for K4, `v` for K5.
    pub fn second(&self) -> &Rational {
        &self.second
    }
}

fn affine(p: &RationalPoint) -> Result<(&Rational, &Rational)> {
    p.coords()
        .ok_or_else(|| Error::ExceptionalLocus("point at infinity".into()))
}

/// `u = (X - 12)/(4X + Y - 12)`, `t = (X^3 - 36X^2 + 36X - 72Y + 432)/(4X + Y - 12)^2`.
pub fn k4_point_to_uv(p: &RationalPoint) -> Result<QuarticParams> {
    let curve = Curve::k4();
    if !curve.on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    let (x, y) = affine(p)?;
    let den = int(4) * x + y - int(12);
    if den.is_zero() {
        return Err(Error::ExceptionalLocus("4X + Y - 12 = 0".into()));
    }
    let u = (x - int(12)) / &den;
    let t = (x * x * x - int(36) * x * x + int(36) * x - int(72) * y + int(432)) / (&den * &den);
    QuarticParams::new(QuarticModel::K4, u, t)
}

/// `X = (4u^2 - 8u + t + 1)/(2u^2)`, `Y = (8u^3 + 12u^2 - 4ut - 12u + t + 1)/(2u^3)`.
pub fn k4_uv_to_point(q: &QuarticParams) -> Result<RationalPoint> {
    if q.model != QuarticModel::K4 {
        return Err(Error::Precondition(
            "expected parameters on the K4 quartic".into(),
        ));
    }
    let (u, t) = (&q.u, &q.second);
    if u.is_zero() {
        return Err(Error::ExceptionalLocus("u = 0".into()));
    }
    let u2 = u * u;
    let x = (int(4) * &u2 - int(8) * u + t + int(1)) / (int(2) * &u2);
    let y = (int(8) * &u2 * u + int(12) * &u2 - int(4) * u * t - int(12) * u + t + int(1))
        / (int(2) * &u2 * u);
    Ok(RationalPoint::new(x, y))
}

/// `u = (6X + 2Y - 12)/(3X - 24)`, `v = (4X^3 - 96X^2 + 84X - 144Y + 832)/(3(X - 8)^2)`.
pub fn k5_point_to_uv(p: &RationalPoint) -> Result<QuarticParams> {
    let curve = Curve::k5();
    if !curve.on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    let (x, y) = affine(p)?;
    let shifted = x - int(8);
    if shifted.is_zero() {
        return Err(Error::ExceptionalLocus("X = 8".into()));
    }
    let u = (int(6) * x + int(2) * y - int(12)) / (int(3) * &shifted);
    let v = (int(4) * x * x * x - int(96) * x * x + int(84) * x - int(144) * y + int(832))
        / (int(3) * &shifted * &shifted);
    QuarticParams::new(QuarticModel::K5, u, v)
}

/// `X = (9u^2 - 36u + 3v + 4)/8`, `Y = (27u^3 - 162u^2 + 9uv + 36u - 18v + 72)/16`.
pub fn k5_uv_to_point(q: &QuarticParams) -> Result<RationalPoint> {
    if q.model != QuarticModel::K5 {
        return Err(Error::Precondition(
            "expected parameters on the K5 quartic".into(),
        ));
    }
    let (u, v) = (&q.u, &q.second);
    let u2 = u * u;
    let x = (int(9) * &u2 - int(36) * u + int(3) * v + int(4)) / int(8);
    let y = (int(27) * &u2 * u - int(162) * &u2 + int(9) * u * v + int(36) * u - int(18) * v
        + int(72))
        / int(16);
    Ok(RationalPoint::new(x, y))
}

/// Dispatches to the model's point-to-quartic map.
pub fn point_to_uv(model: QuarticModel, p: &RationalPoint) -> Result<QuarticParams> {
    match model {
        QuarticModel::K4 => k4_point_to_uv(p),
        QuarticModel::K5 => k5_point_to_uv(p),
    }
}

/// Dispatches to the model's quartic-to-point map.
pub fn uv_to_point(q: &QuarticParams) -> Result<RationalPoint> {
    match q.model {
        QuarticModel::K4 => k4_uv_to_point(q),
        QuarticModel::K5 => k5_uv_to_point(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn k4_generator_maps_to_u_one() {
        let q = k4_point_to_uv(&Curve::k4_generator()).unwrap();
        assert_eq!((q.u().clone(), q.second().clone()), (int(1), int(-3)));
        let two_p = RationalPoint::new(rat(25, 4), rat(-35, 8));
        let q2 = k4_point_to_uv(&two_p).unwrap();
        assert_eq!(q2.u(), &rat(-2, 3));
        assert_eq!(k4_uv_to_point(&q2).unwrap(), two_p);
    }

    #[test]
    fn k4_inverse_map() {
        let q = QuarticParams::new(QuarticModel::K4, int(1), int(3)).unwrap();
        assert_eq!(k4_uv_to_point(&q).unwrap(), RationalPoint::from_ints(0, 0));
        let q = QuarticParams::new(QuarticModel::K4, int(1), int(-3)).unwrap();
        assert_eq!(k4_uv_to_point(&q).unwrap(), Curve::k4_generator());
        let q = QuarticParams::new(QuarticModel::K4, int(0), int(1)).unwrap();
        assert!(matches!(
            k4_uv_to_point(&q),
            Err(Error::ExceptionalLocus(_))
        ));
    }

    #[test]
    fn k4_exceptional_locus() {
        // 4X + Y - 12 = 0 meets Y^2 = X^3 - 36X at (12, -36)
        let p = RationalPoint::from_ints(12, -36);
        assert!(Curve::k4().on_curve(&p));
        assert!(matches!(
            k4_point_to_uv(&p),
            Err(Error::ExceptionalLocus(_))
        ));
        assert!(matches!(
            k4_point_to_uv(&RationalPoint::Infinity),
            Err(Error::ExceptionalLocus(_))
        ));
    }

    #[test]
    fn k5_maps() {
        let q = k5_point_to_uv(&Curve::k5_generator()).unwrap();
        assert_eq!((q.u().clone(), q.second().clone()), (rat(2, 3), rat(-8, 3)));
        assert_eq!(k5_uv_to_point(&q).unwrap(), Curve::k5_generator());

        let two_p = RationalPoint::new(rat(105, 16), rat(-715, 64));
        let q2 = k5_point_to_uv(&two_p).unwrap();
        assert_eq!(
            (q2.u().clone(), q2.second().clone()),
            (rat(-7, 6), rat(-23, 12))
        );
        assert_eq!(k5_uv_to_point(&q2).unwrap(), two_p);
    }

    #[test]
    fn k5_rejections() {
        assert_eq!(
            QuarticParams::new(QuarticModel::K5, int(0), int(0)),
            Err(Error::NotOnQuartic)
        );
        // 512 - 168 - 20 = 18^2
        let p = RationalPoint::from_ints(8, 18);
        assert!(Curve::k5().on_curve(&p));
        assert!(matches!(
            k5_point_to_uv(&p),
            Err(Error::ExceptionalLocus(_))
        ));
    }
}
