//! Sparse multivariate polynomials and Schur polynomials.
//!
//! Exponent vectors index variables x_1, x_2, ... (entry 0 is the exponent
//! of x_1). A BTreeMap keeps term order deterministic. Only nonzero
//! coefficients are stored.
//!
//! The Schur polynomials p_r are defined by the generating function
//! exp(sum_{n>=1} x_n y^n / n) = sum_r p_r(x_1, x_2, ...) y^r and are
//! computed here by the Newton-type recurrence r p_r = sum_{n=1}^r x_n
//! p_{r-n}. Substituting x_n -> (-1)^(n-1) x turns the generating function
//! into (1+y)^x, so the specialization of p_r is the binomial polynomial
//! C(x, r); that identity is what the rest of the library consumes.

use crate::poly::Poly;
use crate::rat::{rat_int, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

/// Exponent vector; index i is the exponent of x_{i+1}.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rat>,
}

fn trim_expts(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable x_n (1-indexed).
    pub fn var(n: usize) -> Self {
        assert!(n >= 1, "variables are 1-indexed");
        let mut e = vec![0u32; n];
        e[n - 1] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(e, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, expts: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        let expts = trim_expts(expts);
        let entry = self.terms.entry(expts);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Evaluate by substituting x_n = vals[n-1]; missing entries are 0.
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &pow) in e.iter().enumerate() {
                if pow == 0 {
                    continue;
                }
                let v = vals.get(i).cloned().unwrap_or_else(Rat::zero);
                for _ in 0..pow {
                    t *= &v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute x_n -> (-1)^(n-1) x, collapsing to a univariate polynomial.
    pub fn specialize_alternating(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let total: u32 = e.iter().sum();
            // sign (-1)^(sum over n of (n-1) * e_n)
            let flips: u32 = e
                .iter()
                .enumerate()
                .map(|(i, &pow)| (i as u32 % 2) * pow)
                .sum();
            let sign = if flips % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let mut coeffs = vec![Rat::zero(); total as usize + 1];
            coeffs[total as usize] = c * sign;
            out = &out + &Poly::from_coeffs(coeffs);
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (i, slot) in e.iter_mut().enumerate() {
                    *slot = e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0);
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// The Schur polynomial p_r in x_1..x_r, via r p_r = sum_{n=1}^r x_n p_{r-n}.
pub fn schur_poly(r: usize) -> MultiPoly {
    let mut ps: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=r {
        let mut acc = MultiPoly::zero();
        for n in 1..=m {
            acc = &acc + &(&MultiPoly::var(n) * &ps[m - n]);
        }
        ps.push(acc.scale(&rat_int(m as i64).recip()));
    }
    ps.pop().unwrap()
}

/// The alternating specialization of p_r, equal to C(x, r).
pub fn schur_specialize_alt(r: usize) -> Poly {
    schur_poly(r).specialize_alternating()
}
