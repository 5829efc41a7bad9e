//! Buchberger's algorithm, normal forms, and quotient-basis extraction.
//!
//! Basis computation runs fraction-free: polynomials are kept with
//! denominator-free, content-free coefficients and reductions scale by
//! leading coefficients instead of dividing. The canonical field normal
//! form against the finished reduced basis is the only place fractions
//! appear.

use std::collections::BTreeSet;
use std::fmt;

use super::f2poly::F2Poly;
use super::field::FieldElem;
use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use crate::error::PolyError;

#[derive(Clone, Copy, Debug)]
pub struct GroebnerConfig {
    /// Abort if a basis element exceeds this total degree.
    pub degree_cap: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { degree_cap: 64 }
    }
}

/// Reduced Groebner basis for the fixed degrevlex order.
///
/// Elements are primitive over F2[t] (denominators cleared, content
/// removed), pairwise reduced, and sorted by leading monomial, so equal
/// ideals produce identical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial())
    }

    /// The ideal contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading_monomial().is_some_and(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    /// Canonical remainder of `p`: no term is divisible by any leading
    /// monomial of the basis. Linear over the coefficient field, and
    /// zero exactly on ideal members.
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let mut work = p.clone();
        let mut rem = MultiPoly::zero(self.nvars);
        'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            for g in &self.polys {
                let (gm, gc) = g.leading().expect("basis elements are nonzero");
                if gm.divides(&lm) {
                    let q = lc.clone() / gc.clone();
                    // subtract = add in characteristic 2
                    work = work.add(&g.mul_term(&q, &gm.div(&lm)));
                    continue 'outer;
                }
            }
            rem.add_term(lc.clone(), lm.clone());
            work.add_term(lc, lm); // cancels the leading term
        }
        rem
    }

    /// Membership test via fraction-free reduction.
    pub fn reduces_to_zero(&self, p: &MultiPoly) -> bool {
        pseudo_reduce(p, &self.polys).is_zero()
    }

    /// Monomials outside the leading-term ideal, ascending in the
    /// monomial order. Without a cap the quotient must be finite
    /// dimensional as a vector space.
    pub fn standard_monomials(&self, grade_cap: Option<u32>) -> Result<Vec<Monomial>, PolyError> {
        if self.is_unit_ideal() {
            return Ok(Vec::new());
        }
        let lts: Vec<Monomial> = self.leading_monomials().cloned().collect();
        let bound = match grade_cap {
            Some(cap) => vec![cap + 1; self.nvars],
            None => {
                let mut per_var = vec![None; self.nvars];
                for lt in &lts {
                    if let Some(i) = pure_power_var(lt) {
                        let e = lt.exp(i);
                        let slot = &mut per_var[i];
                        *slot = Some(slot.map_or(e, |old: u32| old.min(e)));
                    }
                }
                let mut bound = Vec::with_capacity(self.nvars);
                for b in per_var {
                    bound.push(b.ok_or(PolyError::InfiniteDimensional)?);
                }
                bound
            }
        };
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        enumerate_box(&mut exps, 0, &bound, grade_cap, &lts, &mut out);
        out.sort();
        Ok(out)
    }

    /// Hilbert series of the quotient by the leading-term ideal, graded
    /// by total degree.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let lts: Vec<Monomial> = self.leading_monomials().cloned().collect();
        let numerator = hilbert_numerator(minimalize(lts));
        HilbertSeries {
            numerator,
            denom_pow: self.nvars,
        }
        .reduced()
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.polys.iter()).finish()
    }
}

fn pure_power_var(m: &Monomial) -> Option<usize> {
    let mut var = None;
    for i in 0..m.nvars() {
        if m.exp(i) > 0 {
            if var.is_some() {
                return None;
            }
            var = Some(i);
        }
    }
    var
}

fn enumerate_box(
    exps: &mut Vec<u32>,
    i: usize,
    bound: &[u32],
    cap: Option<u32>,
    lts: &[Monomial],
    out: &mut Vec<Monomial>,
) {
    if let Some(c) = cap {
        if exps.iter().sum::<u32>() > c {
            return;
        }
    }
    if i == exps.len() {
        let m = Monomial::from_exps(exps.clone());
        if !lts.iter().any(|lt| lt.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bound[i] {
        exps[i] = e;
        enumerate_box(exps, i + 1, bound, cap, lts, out);
    }
    exps[i] = 0;
}

/// Fraction-free full reduction of `p` by `reducers`; the result is the
/// primitive remainder, which is zero iff the canonical normal form is.
fn pseudo_reduce(p: &MultiPoly, reducers: &[MultiPoly]) -> MultiPoly {
    let nvars = p.nvars();
    let mut work = p.primitive_part();
    let mut rem = MultiPoly::zero(nvars);
    let mut steps = 0usize;
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in reducers {
            let (gm, gc) = match g.leading() {
                Some(l) => l,
                None => continue,
            };
            if !gm.divides(&lm) {
                continue;
            }
            let d = lc.numerator().gcd(gc.numerator());
            let scale = FieldElem::from_poly(gc.numerator().div_exact(&d));
            let mult = FieldElem::from_poly(lc.numerator().div_exact(&d));
            work = work.scale(&scale).add(&g.mul_term(&mult, &gm.div(&lm)));
            rem = rem.scale(&scale);
            steps += 1;
            if steps % 16 == 0 {
                let joined = work.add(&rem);
                if !joined.is_zero() {
                    // strip shared content to keep t-degrees in check
                    let content = content_of(&joined);
                    work = divide_content(&work, &content);
                    rem = divide_content(&rem, &content);
                }
            }
            continue 'outer;
        }
        rem.add_term(lc.clone(), lm.clone());
        work.add_term(lc, lm);
    }
    rem.primitive_part()
}

fn content_of(p: &MultiPoly) -> F2Poly {
    let mut c = F2Poly::zero();
    for (_, coef) in p.terms() {
        debug_assert!(coef.denominator().is_one());
        c = c.gcd(coef.numerator());
        if c.is_one() {
            break;
        }
    }
    if c.is_zero() {
        F2Poly::one()
    } else {
        c
    }
}

fn divide_content(p: &MultiPoly, content: &F2Poly) -> MultiPoly {
    if content.is_one() {
        return p.clone();
    }
    let terms = p
        .terms()
        .map(|(m, c)| {
            (
                FieldElem::from_poly(c.numerator().div_exact(content)),
                m.clone(),
            )
        })
        .collect();
    MultiPoly::from_terms(p.nvars(), terms)
}

fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let d = fc.numerator().gcd(gc.numerator());
    let cf = FieldElem::from_poly(gc.numerator().div_exact(&d));
    let cg = FieldElem::from_poly(fc.numerator().div_exact(&d));
    f.mul_term(&cf, &fm.div(&l)).add(&g.mul_term(&cg, &gm.div(&l)))
}

/// Compute the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MultiPoly], cfg: &GroebnerConfig) -> Result<GroebnerBasis, PolyError> {
    let nvars = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let p = g.primitive_part();
            if !basis.contains(&p) {
                basis.push(p);
            }
        }
    }

    let mut pairs: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut queue_pairs = |pairs: &mut BTreeSet<(u32, Monomial, usize, usize)>,
                           basis: &[MultiPoly],
                           j: usize| {
        let gm = basis[j].leading_monomial().unwrap();
        for (i, f) in basis.iter().enumerate().take(j) {
            let fm = f.leading_monomial().unwrap();
            if fm.coprime(gm) {
                continue; // product criterion
            }
            let l = fm.lcm(gm);
            pairs.insert((l.total_degree(), l, i, j));
        }
    };
    for j in 0..basis.len() {
        queue_pairs(&mut pairs, &basis, j);
    }

    while let Some(pair) = pairs.iter().next().cloned() {
        pairs.remove(&pair);
        let (_, _, i, j) = pair;
        let s = s_poly(&basis[i], &basis[j]);
        let r = pseudo_reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.total_degree().unwrap_or(0) as usize > cfg.degree_cap {
            return Err(PolyError::DegreeCapExceeded {
                cap: cfg.degree_cap,
            });
        }
        basis.push(r);
        queue_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    Ok(interreduce(nvars, basis))
}

fn interreduce(nvars: usize, mut basis: Vec<MultiPoly>) -> GroebnerBasis {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = basis.remove(i);
            let r = pseudo_reduce(&g, &basis);
            if r.is_zero() {
                changed = true;
                continue;
            }
            if r != g {
                changed = true;
            }
            basis.insert(i, r);
            i += 1;
        }
        if !changed {
            break;
        }
    }
    // A unit ideal is represented by the single generator 1.
    if basis
        .iter()
        .any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    {
        basis = vec![MultiPoly::one(nvars)];
    }
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    GroebnerBasis { nvars, polys: basis }
}

/// Do two generating sets span the same ideal?
pub fn ideal_equal(
    a: &[MultiPoly],
    b: &[MultiPoly],
    cfg: &GroebnerConfig,
) -> Result<bool, PolyError> {
    let ga = buchberger(a, cfg)?;
    let gb = buchberger(b, cfg)?;
    Ok(a.iter().all(|p| gb.reduces_to_zero(p)) && b.iter().all(|p| ga.reduces_to_zero(p)))
}

/// Hilbert series as `numerator / (1-q)^denom_pow`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    /// Coefficient of `q^k` at index `k`.
    pub numerator: Vec<i64>,
    pub denom_pow: usize,
}

impl HilbertSeries {
    /// Cancel factors of `1-q` common to numerator and denominator.
    pub fn reduced(mut self) -> Self {
        trim_tail(&mut self.numerator);
        while self.denom_pow > 0 && !self.numerator.is_empty() {
            // divisible by 1-q iff numerator vanishes at q = 1
            if self.numerator.iter().sum::<i64>() != 0 {
                break;
            }
            // synthetic division by 1-q: q^k coefficient of quotient is
            // sum of numerator coefficients up to k
            let mut acc = 0i64;
            let mut quot = Vec::with_capacity(self.numerator.len());
            for &c in &self.numerator[..self.numerator.len() - 1] {
                acc += c;
                quot.push(acc);
            }
            trim_tail(&mut quot);
            self.numerator = quot;
            self.denom_pow -= 1;
        }
        if self.numerator.is_empty() {
            self.denom_pow = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push_str(if c > 0 { " + " } else { " - " });
            } else if c < 0 {
                s.push('-');
            }
            let a = c.abs();
            match (a, k) {
                (_, 0) => s.push_str(&a.to_string()),
                (1, 1) => s.push('q'),
                (_, 1) => s.push_str(&format!("{}*q", a)),
                (1, _) => s.push_str(&format!("q^{}", k)),
                _ => s.push_str(&format!("{}*q^{}", a, k)),
            }
        }
        match self.denom_pow {
            0 => write!(f, "{}", s),
            1 => write!(f, "({}) / (1-q)", s),
            p => write!(f, "({}) / (1-q)^{}", s, p),
        }
    }
}

fn trim_tail(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn hilbert_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let mut rest = gens;
    let m = rest.pop().unwrap();
    // (I : m) is generated by g / gcd(g, m)
    let colon = minimalize(rest.iter().map(|g| g.gcd(&m).div(g)).collect());
    let n_rest = hilbert_numerator(rest);
    let n_colon = hilbert_numerator(colon);
    // N(I + m) = N(I) - q^{deg m} * N(I : m)
    let shift = m.total_degree() as usize;
    let mut out = n_rest;
    if out.len() < shift + n_colon.len() {
        out.resize(shift + n_colon.len(), 0);
    }
    for (k, c) in n_colon.iter().enumerate() {
        out[shift + k] -= c;
    }
    trim_tail(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn single_linear_relation() {
        // t*x1 - x2 with x2 > x1: basis is x2 + t*x1 and NF(x2) = t*x1
        let n = 3;
        let g = x(n, 1).scale(&FieldElem::t()).add(&x(n, 2));
        let gb = buchberger(&[g], &cfg()).unwrap();
        assert_eq!(gb.polys().len(), 1);
        assert_eq!(
            gb.polys()[0].leading_monomial().unwrap(),
            &Monomial::var(n, 2)
        );
        let nf = gb.normal_form(&x(n, 2));
        assert_eq!(nf, x(n, 1).scale(&FieldElem::t()));
    }

    #[test]
    fn s_polynomial_generates_square() {
        // {x1*x2, x1+x2}: x1 = x2 forces a square to vanish; with x2
        // eliminated the reduced basis is {x2+x1, x1^2}
        let n = 3;
        let g1 = MultiPoly::from_term(
            FieldElem::one(),
            Monomial::from_exps(vec![0, 1, 1]),
        );
        let g2 = x(n, 1).add(&x(n, 2));
        let gb = buchberger(&[g1, g2], &cfg()).unwrap();
        let lts: Vec<_> = gb.leading_monomials().cloned().collect();
        assert!(lts.contains(&Monomial::var(n, 2)));
        assert!(lts.contains(&Monomial::from_exps(vec![0, 2, 0])));
        assert_eq!(gb.polys().len(), 2);
    }

    #[test]
    fn unit_ideal_from_invertible_constant() {
        // t^2-1 is a unit in the field, so the ideal is everything
        let n = 2;
        let c = MultiPoly::constant(n, FieldElem::t_pow(2) + FieldElem::one());
        let gb = buchberger(&[c, x(n, 0)], &cfg()).unwrap();
        assert!(gb.is_unit_ideal());
        assert!(gb.normal_form(&MultiPoly::one(n)).is_zero());
    }

    #[test]
    fn nf_of_generators_vanishes() {
        let n = 3;
        let gens = vec![
            x(n, 0).add(&x(n, 1).scale(&FieldElem::t())),
            x(n, 1).mul(&x(n, 2)),
        ];
        let gb = buchberger(&gens, &cfg()).unwrap();
        for g in &gens {
            assert!(gb.normal_form(g).is_zero());
            assert!(gb.reduces_to_zero(g));
        }
    }

    #[test]
    fn standard_monomials_examples() {
        let n = 2; // variables x0, x1 standing in for x1, x2
        // {x1 + t*x0, x0^2} -> standard monomials {1, x0}
        let g1 = x(n, 1).add(&x(n, 0).scale(&FieldElem::t()));
        let g2 = MultiPoly::from_term(FieldElem::one(), Monomial::from_exps(vec![2, 0]));
        let gb = buchberger(&[g1, g2], &cfg()).unwrap();
        let sm = gb.standard_monomials(None).unwrap();
        assert_eq!(sm, vec![Monomial::one(n), Monomial::var(n, 0)]);

        // unit ideal: zero algebra
        let gb = buchberger(&[MultiPoly::one(n)], &cfg()).unwrap();
        assert!(gb.standard_monomials(None).unwrap().is_empty());

        // empty basis in 1 variable with cap 2: {1, x, x^2}
        let gb = buchberger(&[], &cfg()).unwrap();
        let gb = GroebnerBasis {
            nvars: 1,
            polys: gb.polys().to_vec(),
        };
        let sm = gb.standard_monomials(Some(2)).unwrap();
        assert_eq!(sm.len(), 3);

        // zero ideal without a cap is infinite-dimensional
        let gb = GroebnerBasis {
            nvars: 1,
            polys: vec![],
        };
        assert_eq!(
            gb.standard_monomials(None),
            Err(PolyError::InfiniteDimensional)
        );
    }

    #[test]
    fn ideal_equal_examples() {
        let n = 3;
        let x1 = x(n, 1);
        let x1sq = x1.mul(&x1);
        assert!(ideal_equal(&[x1.clone()], &[x1.clone(), x1sq], &cfg()).unwrap());
        assert!(!ideal_equal(&[x1.clone()], &[x(n, 2)], &cfg()).unwrap());
    }

    #[test]
    fn hilbert_series_examples() {
        // <x0*x1> in 2 vars: (1-q^2)/(1-q)^2 = (1+q)/(1-q)
        let n = 2;
        let g = x(n, 0).mul(&x(n, 1));
        let gb = buchberger(&[g], &cfg()).unwrap();
        let h = gb.hilbert_series();
        assert_eq!(
            h,
            HilbertSeries {
                numerator: vec![1, 1],
                denom_pow: 1
            }
        );

        // unit ideal: 0
        let gb = buchberger(&[MultiPoly::one(n)], &cfg()).unwrap();
        assert!(gb.hilbert_series().is_zero());

        // zero ideal in 1 variable: 1/(1-q)
        let gb = GroebnerBasis {
            nvars: 1,
            polys: vec![],
        };
        assert_eq!(
            gb.hilbert_series(),
            HilbertSeries {
                numerator: vec![1],
                denom_pow: 1
            }
        );
    }

    #[test]
    fn buchberger_is_deterministic() {
        let n = 4;
        let gens = vec![
            x(n, 0).mul(&x(n, 1)).add(&x(n, 2).scale(&FieldElem::t())),
            x(n, 1).add(&x(n, 3)),
            x(n, 2).mul(&x(n, 2)).add(&x(n, 0)),
        ];
        let a = buchberger(&gens, &cfg()).unwrap();
        let b = buchberger(&gens, &cfg()).unwrap();
        assert_eq!(a.polys(), b.polys());
    }

    #[test]
    fn nf_is_linear_and_idempotent() {
        let n = 3;
        let gens = vec![
            x(n, 0).add(&x(n, 1).scale(&FieldElem::t())),
            x(n, 1).mul(&x(n, 1)),
        ];
        let gb = buchberger(&gens, &cfg()).unwrap();
        let p = x(n, 0).mul(&x(n, 2)).add(&x(n, 1));
        let q = x(n, 1).mul(&x(n, 2)).add(&MultiPoly::one(n));
        let a = FieldElem::t();
        let b = FieldElem::t() + FieldElem::one();
        let lin = gb.normal_form(&p.scale(&a).add(&q.scale(&b)));
        let rhs = gb.normal_form(&p).scale(&a).add(&gb.normal_form(&q).scale(&b));
        assert_eq!(lin, rhs);
        let nf = gb.normal_form(&p);
        assert_eq!(gb.normal_form(&nf), nf);
    }
}
