//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically (total degree first, then
//! exponents left to right), which fixes a canonical term order for printing
//! and serialization. The variable names are carried alongside the terms so a
//! polynomial prints the same way everywhere; arithmetic between polynomials
//! requires equal variable lists, with genuine constants (empty list)
//! adopting the other operand's variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::scalar::{GaussianRational, Scalar};

/// Exponent vector, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut exps = vec![0u32; n];
        for (i, &e) in self.0.iter().enumerate() {
            exps[i] += e;
        }
        for (i, &e) in other.0.iter().enumerate() {
            exps[i] += e;
        }
        Monomial(exps)
    }
}

// Graded-lex: compare total degree, then exponents left to right.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored zero coefficients; every stored monomial has exactly
/// `vars.len()` exponents.
#[derive(Clone, Debug)]
pub struct MPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero_with_vars(vars: Arc<Vec<String>>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<Vec<String>>, c: BigRational) -> Self {
        let mut p = Self::zero_with_vars(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Monomial(vec![0; n]), c);
        }
        p
    }

    /// The polynomial `x_idx`.
    pub fn var(vars: Arc<Vec<String>>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero_with_vars(vars);
        p.terms.insert(Monomial(exps), BigRational::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(Zero::zero)
    }

    // Constants are variable-agnostic; everything else must agree on vars.
    fn unify_vars(&self, rhs: &Self) -> Arc<Vec<String>> {
        if self.vars.is_empty() {
            rhs.vars.clone()
        } else if rhs.vars.is_empty() {
            self.vars.clone()
        } else {
            assert_eq!(
                self.vars, rhs.vars,
                "polynomial arithmetic across different variable lists"
            );
            self.vars.clone()
        }
    }

    fn pad(m: &Monomial, n: usize) -> Monomial {
        if m.0.len() == n {
            m.clone()
        } else {
            let mut exps = m.0.clone();
            exps.resize(n, 0);
            Monomial(exps)
        }
    }

    fn insert(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Substitute `x_j -> factors[j] * x_j`; used for quasi-homogeneity checks.
    /// Genuine constants (empty variable list) are fixed by any substitution.
    pub fn scale_vars(&self, factors: &[BigRational]) -> Self {
        if self.vars.is_empty() {
            return self.clone();
        }
        assert_eq!(factors.len(), self.vars.len());
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut scaled = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    scaled *= &factors[j];
                }
            }
            Self::insert(&mut terms, m.clone(), scaled);
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluate at a Gaussian-rational point. Genuine constants (empty
    /// variable list) accept a point of any dimension.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert!(
            self.vars.is_empty() || point.len() == self.vars.len(),
            "point dimension mismatch"
        );
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = GaussianRational::from_rat(c);
            for (j, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[j]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        // Zero-degree content compares equal regardless of variable lists.
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let n = self.vars.len().max(other.vars.len());
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((ma, ca), (mb, cb))| Self::pad(ma, n) == Self::pad(mb, n) && ca == cb)
    }
}

impl Eq for MPoly {}

impl Scalar for MPoly {
    fn zero() -> Self {
        Self::zero_with_vars(Arc::new(Vec::new()))
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_int(n: i64) -> Self {
        Self::constant(
            Arc::new(Vec::new()),
            BigRational::from_integer(BigInt::from(n)),
        )
    }
    fn from_rat(r: &BigRational) -> Self {
        Self::constant(Arc::new(Vec::new()), r.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        let vars = self.unify_vars(rhs);
        let n = vars.len();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            Self::insert(&mut terms, Self::pad(m, n), c.clone());
        }
        for (m, c) in &rhs.terms {
            Self::insert(&mut terms, Self::pad(m, n), c.clone());
        }
        Self { vars, terms }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let vars = self.unify_vars(rhs);
        let n = vars.len();
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Self::insert(
                    &mut terms,
                    Self::pad(&ma.mul(mb), n),
                    ca * cb,
                );
            }
        }
        Self { vars, terms }
    }
    fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading term first: descending graded-lex.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let unit = c.abs().is_one();
            if !unit || m.total_degree() == 0 {
                factors.push(c.abs().to_string());
            }
            for (j, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[j].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[j], e)),
                }
            }
            let sep = if i == 0 {
                if c.is_negative() {
                    "-"
                } else {
                    ""
                }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            write!(f, "{}{}", sep, factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn two_vars() -> Arc<Vec<String>> {
        Arc::new(vec!["a1_1".into(), "a2_2".into()])
    }

    #[test]
    fn graded_lex_order() {
        // deg 1 < deg 2; within deg 2: (0,2) < (1,1) < (2,0)
        let m01 = Monomial(vec![0, 1]);
        let m20 = Monomial(vec![2, 0]);
        let m11 = Monomial(vec![1, 1]);
        let m02 = Monomial(vec![0, 2]);
        assert!(m01 < m02);
        assert!(m02 < m11);
        assert!(m11 < m20);
    }

    #[test]
    fn arithmetic_and_display() {
        let vars = two_vars();
        let a1 = MPoly::var(vars.clone(), 0);
        let a2 = MPoly::var(vars.clone(), 1);
        // a1^2 + a2
        let p = a1.mul(&a1).add(&a2);
        assert_eq!(p.to_string(), "a1_1^2 + a2_2");
        // (a1^2 + a2) - a2 = a1^2
        let q = p.sub(&a2);
        assert_eq!(q.to_string(), "a1_1^2");
        // cancellation leaves no explicit zeros
        let z = p.sub(&p);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn constants_mix_with_any_vars() {
        let vars = two_vars();
        let a1 = MPoly::var(vars, 0);
        let c = MPoly::from_rat(&rat(3, 2));
        let p = a1.mul(&c);
        assert_eq!(p.to_string(), "3/2*a1_1");
    }

    #[test]
    fn scale_and_eval() {
        let vars = two_vars();
        let a1 = MPoly::var(vars.clone(), 0);
        let a2 = MPoly::var(vars.clone(), 1);
        let p = a1.mul(&a1).add(&a2); // a1^2 + a2
        // a1 -> 2 a1, a2 -> 4 a2 gives 4 a1^2 + 4 a2
        let scaled = p.scale_vars(&[rat(2, 1), rat(4, 1)]);
        let expected = p.mul(&MPoly::from_rat(&rat(4, 1)));
        assert_eq!(scaled, expected);

        let v = p.eval(&[GaussianRational::ratio(1, 2), GaussianRational::ratio(-1, 4)]);
        assert_eq!(v, GaussianRational::zero());
    }
}
