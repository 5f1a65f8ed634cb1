//! Exact arithmetic on torus slopes.
//!
//! A slope is a primitive integer pair `(longitude, meridian)` naming an
//! essential simple closed curve on a torus. A curve and its reverse are the
//! same slope, so values are canonicalised up to overall sign. All arithmetic
//! is arbitrary precision.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlopeError {
    #[error("zero curve: (0,0) names no curve on the torus")]
    ZeroCurve,
    #[error("non-primitive slope ({longitude},{meridian}): gcd = {gcd}")]
    NonPrimitive {
        longitude: BigInt,
        meridian: BigInt,
        gcd: BigInt,
    },
    /// Only curves with even longitude and odd meridian bound one-sided
    /// surfaces in the solid torus.
    #[error("slope ({longitude},{meridian}) does not bound a one-sided surface: longitude must be even")]
    NotOneSidedSlope { longitude: BigInt, meridian: BigInt },
}

/// A primitive curve on the torus, unoriented.
///
/// Canonical form: `longitude >= 0`, and `meridian = 1` when the longitude is
/// zero. `(l, m)` and `(-l, -m)` construct equal values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    longitude: BigInt,
    meridian: BigInt,
}

impl Slope {
    /// Canonicalises and validates a coefficient pair.
    pub fn new(
        longitude: impl Into<BigInt>,
        meridian: impl Into<BigInt>,
    ) -> Result<Self, SlopeError> {
        let mut longitude = longitude.into();
        let mut meridian = meridian.into();
        if longitude.is_zero() && meridian.is_zero() {
            return Err(SlopeError::ZeroCurve);
        }
        let gcd = longitude.gcd(&meridian);
        if !gcd.is_one() {
            return Err(SlopeError::NonPrimitive {
                longitude,
                meridian,
                gcd,
            });
        }
        let flip = match longitude.sign() {
            Sign::Minus => true,
            Sign::NoSign => meridian.is_negative(),
            Sign::Plus => false,
        };
        if flip {
            longitude = -longitude;
            meridian = -meridian;
        }
        Ok(Slope {
            longitude,
            meridian,
        })
    }

    pub fn longitude(&self) -> &BigInt {
        &self.longitude
    }

    pub fn meridian(&self) -> &BigInt {
        &self.meridian
    }

    /// Componentwise absolute value, the genus-faithful projection onto the
    /// first-quadrant tree. Fails on curves that bound no one-sided surface.
    pub fn quadrant_project(&self) -> Result<QuadrantSlope, SlopeError> {
        if self.longitude.is_odd() {
            return Err(SlopeError::NotOneSidedSlope {
                longitude: self.longitude.clone(),
                meridian: self.meridian.clone(),
            });
        }
        Ok(QuadrantSlope {
            longitude: self.longitude.clone(),
            meridian: self.meridian.abs(),
        })
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.longitude, self.meridian)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Slope({},{})", self.longitude, self.meridian)
    }
}

/// A slope projected into the first quadrant: non-negative even longitude,
/// positive odd meridian, coprime. The boundary slopes of one-sided surfaces
/// in a solid torus all take this form, with `(0,1)` bounding the meridian
/// disc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadrantSlope {
    longitude: BigInt,
    meridian: BigInt,
}

impl QuadrantSlope {
    /// Validates and projects a coefficient pair in one step.
    pub fn new(
        longitude: impl Into<BigInt>,
        meridian: impl Into<BigInt>,
    ) -> Result<Self, SlopeError> {
        Slope::new(longitude, meridian)?.quadrant_project()
    }

    pub fn longitude(&self) -> &BigInt {
        &self.longitude
    }

    pub fn meridian(&self) -> &BigInt {
        &self.meridian
    }

    pub fn to_slope(&self) -> Slope {
        Slope {
            longitude: self.longitude.clone(),
            meridian: self.meridian.clone(),
        }
    }
}

impl From<&QuadrantSlope> for Slope {
    fn from(s: &QuadrantSlope) -> Slope {
        s.to_slope()
    }
}

impl fmt::Display for QuadrantSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.longitude, self.meridian)
    }
}

impl fmt::Debug for QuadrantSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadrantSlope({},{})", self.longitude, self.meridian)
    }
}

/// Signed intersection number of the canonical representatives: the 2x2
/// determinant `u.longitude * v.meridian - v.longitude * u.meridian`.
///
/// Antisymmetric, and zero exactly when the two slopes coincide. Callers
/// comparing against geometric intersection counts should take the absolute
/// value; the sign depends on the canonical representatives.
pub fn intersection_number(u: &Slope, v: &Slope) -> BigInt {
    u.longitude() * v.meridian() - v.longitude() * u.meridian()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(l: i64, m: i64) -> Slope {
        Slope::new(l, m).unwrap()
    }

    #[test]
    fn canonicalises_sign() {
        let s = slope(-8, 3);
        assert_eq!(s.longitude(), &BigInt::from(8));
        assert_eq!(s.meridian(), &BigInt::from(-3));
        assert_eq!(slope(0, -1), slope(0, 1));
        assert_eq!(slope(-1, 0), slope(1, 0));
        assert_eq!(slope(20, -7), slope(-20, 7));
    }

    #[test]
    fn rejects_degenerate_pairs() {
        assert_eq!(Slope::new(0, 0), Err(SlopeError::ZeroCurve));
        assert!(matches!(
            Slope::new(6, 2),
            Err(SlopeError::NonPrimitive { gcd, .. }) if gcd == BigInt::from(2)
        ));
        assert!(matches!(
            Slope::new(0, -5),
            Err(SlopeError::NonPrimitive { .. })
        ));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            intersection_number(&slope(4, 1), &slope(10, 3)),
            BigInt::from(2)
        );
        assert_eq!(
            intersection_number(&slope(0, 1), &slope(2, 1)),
            BigInt::from(-2)
        );
    }

    #[test]
    fn intersection_antisymmetric_and_zero_iff_equal() {
        let u = slope(4, 1);
        let v = slope(10, 3);
        assert_eq!(
            intersection_number(&u, &v),
            -intersection_number(&v, &u)
        );
        assert!(intersection_number(&u, &u).is_zero());
        // (20,-7) and (-20,7) are the same unoriented curve
        assert!(intersection_number(&slope(20, -7), &slope(-20, 7)).is_zero());
    }

    #[test]
    fn quadrant_projection() {
        let p = slope(20, -7).quadrant_project().unwrap();
        assert_eq!(p, QuadrantSlope::new(20, 7).unwrap());
        assert_eq!(
            slope(0, 1).quadrant_project().unwrap(),
            QuadrantSlope::new(0, 1).unwrap()
        );
        assert_eq!(
            slope(-2, 1).quadrant_project().unwrap(),
            QuadrantSlope::new(2, 1).unwrap()
        );
        assert!(matches!(
            slope(1, 0).quadrant_project(),
            Err(SlopeError::NotOneSidedSlope { .. })
        ));
        assert!(matches!(
            slope(3, 5).quadrant_project(),
            Err(SlopeError::NotOneSidedSlope { .. })
        ));
    }

    #[test]
    fn quadrant_projection_idempotent() {
        let p = slope(20, -7).quadrant_project().unwrap();
        let again = p.to_slope().quadrant_project().unwrap();
        assert_eq!(p, again);
    }
}
