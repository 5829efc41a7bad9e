//! Sparse multivariate polynomials over the fraction field of F2[t].

use std::collections::BTreeMap;
use std::fmt;

use super::f2poly::F2Poly;
use super::field::FieldElem;
use super::monomial::Monomial;

/// Sparse polynomial in the edge variables; no zero coefficients stored.
///
/// Terms are kept in a map ordered by the global monomial order, so the
/// leading term is the last entry.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_term(FieldElem::one(), Monomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_term(FieldElem::one(), Monomial::var(nvars, i))
    }

    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        Self::from_term(c, Monomial::one(nvars))
    }

    pub fn from_term(c: FieldElem, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, list: Vec<(FieldElem, Monomial)>) -> Self {
        let mut p = Self::zero(nvars);
        for (c, m) in list {
            p.add_term(c, m);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading().map(|(m, _)| m)
    }

    pub fn add_term(&mut self, c: FieldElem, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    /// In characteristic 2 subtraction and addition coincide; the alias
    /// keeps call sites readable next to the source formulas.
    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(other)
    }

    pub fn mul_term(&self, c: &FieldElem, m: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc * c))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &other.terms {
            for (mm, cc) in &self.terms {
                out.add_term(cc * c, mm.mul(m));
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> MultiPoly {
        self.mul_term(c, &Monomial::one(self.nvars))
    }

    /// Degree in the x-variables of the largest term, if nonzero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// True when every term has the same total x-degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Multiply through by the lcm of the coefficient denominators and
    /// divide out the overall F2[t] content, yielding the primitive
    /// integral representative (all denominators 1, coefficient gcd 1).
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = F2Poly::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denominator());
        }
        let nums: Vec<F2Poly> = self
            .terms
            .values()
            .map(|c| c.numerator() * &den_lcm.div_exact(c.denominator()))
            .collect();
        let mut content = F2Poly::zero();
        for n in &nums {
            content = content.gcd(n);
        }
        let terms = self
            .terms
            .keys()
            .zip(nums)
            .map(|(m, n)| (m.clone(), FieldElem::from_poly(n.div_exact(&content))))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Substitute variable `i` by the polynomial `value`.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                out.add_term(c.clone(), m.clone());
                continue;
            }
            let mut rest = m.exps().to_vec();
            rest[i] = 0;
            let mut piece = MultiPoly::from_term(c.clone(), Monomial::from_exps(rest));
            for _ in 0..e {
                piece = piece.mul(value);
            }
            out = out.add(&piece);
        }
        out
    }

    /// The squarefree product of the given variables, as a monomial.
    pub fn var_product(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Monomial {
        let mut exps = vec![0u32; nvars];
        for v in vars {
            exps[v] += 1;
        }
        Monomial::from_exps(exps)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{} * {}", c, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let n = 2;
        let x0 = MultiPoly::var(n, 0);
        let p = x0.add(&x0);
        assert!(p.is_zero());
    }

    #[test]
    fn primitive_part_strips_content_and_denominators() {
        let n = 2;
        // (t^2+t)*x0 + (t/(t+1))*x1  ->  lcm den = t+1, content = t
        let p = MultiPoly::from_terms(
            n,
            vec![
                (
                    FieldElem::from_poly(F2Poly::t_pow(2) + F2Poly::t()),
                    Monomial::var(n, 0),
                ),
                (
                    FieldElem::new(F2Poly::t(), F2Poly::t() + F2Poly::one()),
                    Monomial::var(n, 1),
                ),
            ],
        );
        let q = p.primitive_part();
        // becomes (t+1)^2*x0 + x1
        let expect = MultiPoly::from_terms(
            n,
            vec![
                (
                    FieldElem::from_poly(F2Poly::t_pow(2) + F2Poly::one()),
                    Monomial::var(n, 0),
                ),
                (FieldElem::one(), Monomial::var(n, 1)),
            ],
        );
        assert_eq!(q, expect);
    }

    #[test]
    fn substitution() {
        let n = 3;
        // x2^2 with x2 := t*x1 gives t^2*x1^2
        let p = MultiPoly::from_term(FieldElem::one(), Monomial::from_exps(vec![0, 0, 2]));
        let v = MultiPoly::from_term(FieldElem::t(), Monomial::var(n, 1));
        let q = p.substitute(2, &v);
        let expect = MultiPoly::from_term(
            FieldElem::t_pow(2),
            Monomial::from_exps(vec![0, 2, 0]),
        );
        assert_eq!(q, expect);
    }
}
