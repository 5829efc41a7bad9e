//! Exponent vectors with a graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Monomial in edge variables `x0..x_{n}`, stored as an exponent vector.
///
/// The `Ord` instance is degrevlex with `x0` as the least variable:
/// higher total degree wins, and ties go to whichever monomial has the
/// smaller exponent at the first variable (scanning upward from `x0`)
/// where the two differ. Under this order `x0`-free computations are
/// unaffected by setting `x0` to zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.exps[i] > 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in 0..self.exps.len() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                // larger exponent at the least differing variable => smaller
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i)?;
            } else {
                write!(f, "x{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degree_dominates() {
        assert!(m(&[2, 0]) > m(&[0, 1]));
    }

    #[test]
    fn higher_index_variable_is_larger() {
        // x2 > x1 > x0 among degree-1 monomials
        assert!(m(&[0, 0, 1]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[1, 0, 0]));
    }

    #[test]
    fn degrevlex_tiebreak() {
        // x1*x2 vs x0*x3 in 4 vars: first difference at x0, where the
        // second has the larger exponent, so x1*x2 is greater.
        assert!(m(&[0, 1, 1, 0]) > m(&[1, 0, 0, 1]));
    }

    #[test]
    fn lcm_div_roundtrip() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 3, 0]));
        assert_eq!(a.div(&l), m(&[0, 2, 0]));
        assert!(a.divides(&l) && b.divides(&l));
    }
}
