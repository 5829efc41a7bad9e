//! The coefficient field: rational functions in `t` over the two-element field.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign};

use super::f2poly::F2Poly;
use crate::error::PolyError;

/// Element of the fraction field of `F2[t]`, kept in lowest terms.
///
/// Every denominator is monic automatically (all nonzero leading
/// coefficients are 1 in characteristic 2), so reduced fractions are
/// canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: F2Poly,
    den: F2Poly,
}

impl FieldElem {
    pub fn new(num: F2Poly, den: F2Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut e = FieldElem { num, den };
        e.reduce();
        e
    }

    pub fn from_poly(num: F2Poly) -> Self {
        FieldElem {
            num,
            den: F2Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(F2Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(F2Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(F2Poly::t())
    }

    pub fn t_pow(k: usize) -> Self {
        Self::from_poly(F2Poly::t_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn numerator(&self) -> &F2Poly {
        &self.num
    }

    pub fn denominator(&self) -> &F2Poly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = F2Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
    }

    pub fn inv(&self) -> Result<FieldElem, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivideByZero);
        }
        Ok(FieldElem {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(mut self, rhs: FieldElem) -> FieldElem {
        self += &rhs;
        self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if self.den == rhs.den {
            self.num += &rhs.num;
        } else {
            self.num = &self.num * &rhs.den + &rhs.num * &self.den;
            self.den = &self.den * &rhs.den;
        }
        self.reduce();
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs
    }
}

impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero();
        }
        FieldElem::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs.inv().expect("division by zero field element")
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_plus_1() -> FieldElem {
        FieldElem::t() + FieldElem::one()
    }

    #[test]
    fn char_two_addition() {
        // (t+1) + (t+1) = 0
        assert!((t_plus_1() + t_plus_1()).is_zero());
    }

    #[test]
    fn inverse_of_t2_minus_1() {
        // t^2-1 = t^2+1 = (t+1)^2 is nonzero, hence invertible
        let e = FieldElem::t_pow(2) + FieldElem::one();
        let inv = e.inv().unwrap();
        assert!((e * inv).is_one());
    }

    #[test]
    fn inverse_pair() {
        // (t/(t+1)) * ((t+1)/t) = 1
        let a = FieldElem::new(F2Poly::t(), F2Poly::t() + F2Poly::one());
        let b = FieldElem::new(F2Poly::t() + F2Poly::one(), F2Poly::t());
        assert!((a * b).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(FieldElem::zero().inv().is_err());
    }

    #[test]
    fn reduction_is_canonical() {
        let a = FieldElem::new(
            F2Poly::t_pow(2) + F2Poly::t(),
            F2Poly::t_pow(3) + F2Poly::t_pow(2),
        );
        let b = FieldElem::new(F2Poly::one(), F2Poly::t());
        assert_eq!(a, b);
    }
}
