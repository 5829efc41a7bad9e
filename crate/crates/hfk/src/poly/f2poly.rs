//! Dense univariate polynomials over the two-element field, bit-packed.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// Polynomial in `t` with coefficients in the two-element field.
///
/// Bit `i` of the backing words is the coefficient of `t^i`. The word
/// vector carries no trailing zero words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { words: vec![1] }
    }

    /// The monomial `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        F2Poly { words }
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    /// Build from ascending coefficient bits.
    pub fn from_coeffs(bits: &[u8]) -> Self {
        let mut p = F2Poly::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b % 2 == 1 {
                p.flip_bit(i);
            }
        }
        p.trim();
        p
    }

    fn flip_bit(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .map_or(false, |w| w >> (i % 64) & 1 == 1)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let w = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let (q, r) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + q + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + q] |= w << r;
            if r > 0 {
                words[i + q + 1] |= w >> (64 - r);
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &F2Poly) -> (F2Poly, F2Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut q = F2Poly::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            q.flip_bit(shift);
            r += &d.shifted(shift);
        }
        q.trim();
        (q, r)
    }

    pub fn rem(&self, d: &F2Poly) -> F2Poly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &F2Poly) -> F2Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact division in F2[t]");
        q
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(&self, other: &F2Poly) -> F2Poly {
        if self.is_zero() || other.is_zero() {
            return F2Poly::zero();
        }
        self.div_exact(&self.gcd(other)) * other.clone()
    }

    /// Evaluate at t = 1, i.e. the parity of the number of terms.
    pub fn eval_one(&self) -> bool {
        self.words.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 1
    }
}

impl AddAssign<&F2Poly> for F2Poly {
    fn add_assign(&mut self, rhs: &F2Poly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Add for F2Poly {
    type Output = F2Poly;
    fn add(mut self, rhs: F2Poly) -> F2Poly {
        self += &rhs;
        self
    }
}

impl Mul for F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: F2Poly) -> F2Poly {
        &self * &rhs
    }
}

impl Mul<&F2Poly> for &F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        if self.is_zero() || rhs.is_zero() {
            return F2Poly::zero();
        }
        let mut acc = F2Poly {
            words: vec![0; self.words.len() + rhs.words.len()],
        };
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                let shift = i * 64 + bit;
                let (q, r) = (shift / 64, shift % 64);
                for (j, &v) in rhs.words.iter().enumerate() {
                    acc.words[j + q] ^= v << r;
                    if r > 0 {
                        acc.words[j + q + 1] ^= v >> (64 - r);
                    }
                }
            }
        }
        acc.trim();
        acc
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree().unwrap()).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_xor() {
        let p = F2Poly::t() + F2Poly::one();
        assert_eq!(p.clone() + p, F2Poly::zero());
    }

    #[test]
    fn mul_and_degree() {
        // (t+1)^2 = t^2+1 in characteristic 2
        let p = F2Poly::t() + F2Poly::one();
        let sq = &p * &p;
        assert_eq!(sq, F2Poly::t_pow(2) + F2Poly::one());
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = F2Poly::from_coeffs(&[1, 0, 1, 1, 0, 1]); // 1+t^2+t^3+t^5
        let b = F2Poly::from_coeffs(&[1, 1]); // 1+t
        let (q, r) = a.div_rem(&b);
        assert_eq!(q * b + r, a);
    }

    #[test]
    fn gcd_of_multiples() {
        let g = F2Poly::from_coeffs(&[1, 1, 1]); // 1+t+t^2
        let a = &g * &F2Poly::t_pow(3);
        let b = &g * &(F2Poly::t() + F2Poly::one());
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn shift_across_words() {
        let p = F2Poly::from_coeffs(&[1, 1]);
        let s = p.shifted(100);
        assert_eq!(s.degree(), Some(101));
        assert!(s.coeff(100) && s.coeff(101));
    }
}
