use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::Real;

/// The unit complex number `e^{2πi r}` stored by its exact exponent `r mod 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalPhase(Ratio<i64>);

impl RationalPhase {
    pub fn new(numer: i64, denom: i64) -> Self {
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        RationalPhase(r - r.floor())
    }

    pub fn one() -> Self {
        RationalPhase(Ratio::zero())
    }

    /// `ζ^x` for `ζ = e^{2πi/n}` and rational `x`.
    pub fn root_power(x: Ratio<i64>, n: usize) -> Self {
        Self::from_ratio(x / Ratio::from_integer(n as i64))
    }

    /// The exponent `r ∈ [0, 1)`.
    pub fn turns(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::from_ratio(self.0 * Ratio::from_integer(e))
    }

    pub fn to_complex<T: Real>(&self) -> Complex<T> {
        let num = T::from_i64(*self.0.numer()).expect("float from i64");
        let den = T::from_i64(*self.0.denom()).expect("float from i64");
        Complex::from_polar(T::one(), T::TAU() * num / den)
    }
}

impl Default for RationalPhase {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for RationalPhase {
    type Output = RationalPhase;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: RationalPhase) -> RationalPhase {
        Self::from_ratio(self.0 + rhs.0)
    }
}

impl Neg for RationalPhase {
    type Output = RationalPhase;
    /// Complex conjugate.
    fn neg(self) -> RationalPhase {
        Self::from_ratio(-self.0)
    }
}

impl fmt::Display for RationalPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "e^0")
        } else if self.0.denom().is_one() {
            write!(f, "e^(2πi·{})", self.0.numer())
        } else {
            write!(f, "e^(2πi·{}/{})", self.0.numer(), self.0.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_products() {
        let a = RationalPhase::new(7, 4);
        assert_eq!(a.turns(), Ratio::new(3, 4));
        assert!((a * RationalPhase::new(1, 4)).is_one());
        assert_eq!(RationalPhase::new(-1, 3), RationalPhase::new(2, 3));
        assert_eq!(-RationalPhase::new(1, 3), RationalPhase::new(2, 3));
        assert_eq!(RationalPhase::new(1, 6).pow(9), RationalPhase::new(1, 2));
        assert_eq!(RationalPhase::root_power(Ratio::new(-3, 24), 3), RationalPhase::new(23, 24));
    }

    #[test]
    fn complex_values() {
        let i: Complex<f64> = RationalPhase::new(1, 4).to_complex();
        assert!((i - Complex::new(0.0, 1.0)).norm() < 1e-15);
        let m: Complex<f32> = RationalPhase::new(1, 2).to_complex();
        assert!((m + Complex::new(1.0, 0.0)).norm() < 1e-6);
    }
}
