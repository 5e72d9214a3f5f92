//! PBW normal form and multiplication for the three-generator algebras R(g).
//!
//! R(g) is generated by A, B, H subject to
//!
//! ```text
//! HA - AH = A,    HB - BH = -B,    AB - BA = g(H)
//! ```
//!
//! and has the PBW basis B^m H^n A^k. Elements are stored as finite
//! rational linear combinations of these monomials.
//!
//! Two reduction paths are provided. [`normal_form`] is a word rewriting
//! engine over {A, B, H} using the local rules
//!
//! ```text
//! A.H -> H.A - A        H.B -> B.H - B        A.B -> B.A + g(H)
//! ```
//!
//! applied until no offending adjacent pair remains. Each rule strictly
//! decreases the word measure (#AB-inversions, #AH-inversions,
//! #HB-inversions) in lexicographic order, for every word it produces, so
//! rewriting terminates; `word_measure` exposes the measure and the unit
//! tests check the decrease on random steps. [`nc_mul`] is the fast path:
//! it multiplies normal forms directly through the closed commutation rules
//!
//! ```text
//! A f(H) = f(H-1) A,    f(H) B = B f(H-1),
//! A B^m  = B^m A + B^(m-1) h_(m-1)(H),   h_j(x) = g(x) + ... + g(x-j).
//! ```

use super::SmithAlgebra;
use crate::poly::Poly;
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A generator of R(g).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    H,
}

/// PBW basis monomial B^m H^n A^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NcMonomial {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl NcMonomial {
    pub fn new(m: u32, n: u32, k: u32) -> Self {
        NcMonomial { m, n, k }
    }

    pub fn unit() -> Self {
        NcMonomial::new(0, 0, 0)
    }

    /// Z-grading: deg A = 1, deg B = -1, deg H = 0.
    pub fn degree(&self) -> i64 {
        self.k as i64 - self.m as i64
    }
}

/// Element of R(g): finite rational combination of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcElement {
    terms: BTreeMap<NcMonomial, Rat>,
}

impl NcElement {
    pub fn zero() -> Self {
        NcElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NcElement::monomial(NcMonomial::unit(), Rat::one())
    }

    pub fn gen(g: Gen) -> Self {
        let m = match g {
            Gen::A => NcMonomial::new(0, 0, 1),
            Gen::B => NcMonomial::new(1, 0, 0),
            Gen::H => NcMonomial::new(0, 1, 0),
        };
        NcElement::monomial(m, Rat::one())
    }

    pub fn monomial(m: NcMonomial, c: Rat) -> Self {
        let mut e = NcElement::zero();
        e.add_term(m, c);
        e
    }

    /// p(H) as an element.
    pub fn poly_in_h(p: &Poly) -> Self {
        let mut e = NcElement::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            e.add_term(NcMonomial::new(0, i as u32, 0), c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &NcMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: NcMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, rhs: &NcElement) -> NcElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NcElement) -> NcElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> NcElement {
        if c.is_zero() {
            return NcElement::zero();
        }
        NcElement {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Some(d) iff every monomial has Z-degree d (zero is homogeneous of
    /// any degree; reported as None).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            use num_traits::Signed;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (m.m == 0 && m.n == 0 && m.k == 0) {
                parts.push(rat_to_string(&abs));
            }
            for (sym, pow) in [("B", m.m), ("H", m.n), ("A", m.k)] {
                match pow {
                    0 => {}
                    1 => parts.push(sym.to_string()),
                    p => parts.push(format!("{sym}^{p}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NcTermJson {
    m: u32,
    n: u32,
    k: u32,
    c: String,
}

impl Serialize for NcElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<NcTermJson> = self
            .terms
            .iter()
            .map(|(m, c)| NcTermJson {
                m: m.m,
                n: m.n,
                k: m.k,
                c: rat_to_string(c),
            })
            .collect();
        list.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for NcElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<NcTermJson>::deserialize(de)?;
        let mut e = NcElement::zero();
        for t in list {
            let c = rat_from_str(&t.c).map_err(serde::de::Error::custom)?;
            e.add_term(NcMonomial::new(t.m, t.n, t.k), c);
        }
        Ok(e)
    }
}

/// Product in R(g), in PBW normal form.
///
/// Bilinear extension of the monomial product; the monomial product pushes
/// A-powers through B-powers with the closed rule
/// A B^m = B^m A + B^(m-1) h_(m-1)(H) and shifts polynomials in H across
/// A and B.
pub fn nc_mul(alg: &SmithAlgebra, a: &NcElement, b: &NcElement) -> NcElement {
    let mut out = NcElement::zero();
    // table[k][m] = A^k B^m in normal form, built once per call
    let max_k = a.terms.keys().map(|t| t.k).max().unwrap_or(0);
    let max_m = b.terms.keys().map(|t| t.m).max().unwrap_or(0);
    let table = a_pow_b_table(alg, max_k, max_m);
    for (t1, c1) in &a.terms {
        for (t2, c2) in &b.terms {
            let c = c1 * c2;
            let cross = &table[t1.k as usize][t2.m as usize];
            for (mid, cm) in &cross.terms {
                // t1.m B's, then t1.n H's, then cross term B^mid.m H^mid.n A^mid.k,
                // then t2.n H's, then t2.k A's
                let poly = h_power_product(t1.n, mid.m, mid.n, t2.n, mid.k);
                for (i, pc) in poly.coeffs().iter().enumerate() {
                    out.add_term(
                        NcMonomial::new(t1.m + mid.m, i as u32, mid.k + t2.k),
                        &c * cm * pc,
                    );
                }
            }
        }
    }
    out
}

/// (x - b_left)^n1 * x^mid_n * (x - a_right)^n2: the H-polynomial produced
/// when H^n1 passes right over B^b_left and H^n2 is passed over A^a_right.
fn h_power_product(n1: u32, b_left: u32, mid_n: u32, n2: u32, a_right: u32) -> Poly {
    let mut p = Poly::one();
    if n1 > 0 {
        let shifted = Poly::from_coeffs(vec![rat_int(-(b_left as i64)), Rat::one()]);
        p = &p * &shifted.pow(n1 as usize);
    }
    if mid_n > 0 {
        p = &p * &Poly::x().pow(mid_n as usize);
    }
    if n2 > 0 {
        let shifted = Poly::from_coeffs(vec![rat_int(-(a_right as i64)), Rat::one()]);
        p = &p * &shifted.pow(n2 as usize);
    }
    p
}

/// table[k][m] = A^k B^m in normal form, built by the recursion
/// A^k B^m = (A^(k-1) B^m) A + (A^(k-1) B^(m-1)) h_(m-1)(H).
fn a_pow_b_table(alg: &SmithAlgebra, max_k: u32, max_m: u32) -> Vec<Vec<NcElement>> {
    let mut table = vec![vec![NcElement::zero(); max_m as usize + 1]; max_k as usize + 1];
    for m in 0..=max_m {
        table[0][m as usize] = NcElement::monomial(NcMonomial::new(m, 0, 0), Rat::one());
    }
    for k in 1..=max_k {
        for m in 0..=max_m {
            let mut acc = NcElement::zero();
            // (A^(k-1) B^m) . A
            for (t, c) in &table[k as usize - 1][m as usize].terms {
                acc.add_term(NcMonomial::new(t.m, t.n, t.k + 1), c.clone());
            }
            // (A^(k-1) B^(m-1)) . h_(m-1)(H)
            if m > 0 {
                let h = alg.h_sum(m as usize - 1);
                let prev = table[k as usize - 1][m as usize - 1].clone();
                for (t, c) in &prev.terms {
                    // A^(t.k) h(H) = h(H - t.k) A^(t.k)
                    let shifted = &Poly::x().pow(t.n as usize)
                        * &h.shift(&rat_int(-(t.k as i64)));
                    for (i, pc) in shifted.coeffs().iter().enumerate() {
                        acc.add_term(NcMonomial::new(t.m, i as u32, t.k), c * pc);
                    }
                }
            }
            table[k as usize][m as usize] = acc;
        }
    }
    table
}

/// Which offending pair to reduce first when several are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

fn offending(w: &[Gen], i: usize) -> bool {
    matches!(
        (w[i], w[i + 1]),
        (Gen::A, Gen::B) | (Gen::A, Gen::H) | (Gen::H, Gen::B)
    )
}

/// Inversion counts (#AB, #AH, #HB) over all index pairs i < j. Every
/// rewriting step strictly decreases this triple lexicographically on each
/// word it emits, which is the termination argument for `normal_form`.
pub fn word_measure(w: &[Gen]) -> (u64, u64, u64) {
    let (mut ab, mut ah, mut hb) = (0u64, 0u64, 0u64);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            match (w[i], w[j]) {
                (Gen::A, Gen::B) => ab += 1,
                (Gen::A, Gen::H) => ah += 1,
                (Gen::H, Gen::B) => hb += 1,
                _ => {}
            }
        }
    }
    (ab, ah, hb)
}

/// One rewriting step on a single word at pair position i.
/// Returns the replacement combination.
fn rewrite_at(alg: &SmithAlgebra, w: &[Gen], i: usize) -> Vec<(Vec<Gen>, Rat)> {
    let mut out = Vec::new();
    let mut swapped = w.to_vec();
    match (w[i], w[i + 1]) {
        (Gen::A, Gen::B) => {
            // A.B -> B.A + g(H)
            swapped[i] = Gen::B;
            swapped[i + 1] = Gen::A;
            out.push((swapped, Rat::one()));
            for (d, c) in alg.g().coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut word = w[..i].to_vec();
                word.extend(std::iter::repeat_n(Gen::H, d));
                word.extend_from_slice(&w[i + 2..]);
                out.push((word, c.clone()));
            }
        }
        (Gen::A, Gen::H) => {
            // A.H -> H.A - A
            swapped[i] = Gen::H;
            swapped[i + 1] = Gen::A;
            out.push((swapped, Rat::one()));
            let mut dropped = w[..i].to_vec();
            dropped.push(Gen::A);
            dropped.extend_from_slice(&w[i + 2..]);
            out.push((dropped, -Rat::one()));
        }
        (Gen::H, Gen::B) => {
            // H.B -> B.H - B
            swapped[i] = Gen::B;
            swapped[i + 1] = Gen::H;
            out.push((swapped, Rat::one()));
            let mut dropped = w[..i].to_vec();
            dropped.push(Gen::B);
            dropped.extend_from_slice(&w[i + 2..]);
            out.push((dropped, -Rat::one()));
        }
        _ => unreachable!("rewrite_at called on a sorted pair"),
    }
    out
}

/// Rewrites a word over {A, B, H} to PBW normal form with the given
/// reduction strategy. The result is strategy-independent (confluence);
/// the property tests compare both strategies.
pub fn normal_form_with_strategy(
    alg: &SmithAlgebra,
    word: &[Gen],
    strategy: Strategy,
) -> NcElement {
    let mut combo: BTreeMap<Vec<Gen>, Rat> = BTreeMap::new();
    combo.insert(word.to_vec(), Rat::one());
    loop {
        // find a word with an offending pair
        let target = combo.iter().find_map(|(w, _)| {
            let positions: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| offending(w, i))
                .collect();
            match strategy {
                Strategy::LeftmostFirst => positions.first().map(|&i| (w.clone(), i)),
                Strategy::RightmostFirst => positions.last().map(|&i| (w.clone(), i)),
            }
        });
        let Some((w, i)) = target else { break };
        let c = combo.remove(&w).unwrap();
        for (nw, nc) in rewrite_at(alg, &w, i) {
            let entry = combo.entry(nw).or_insert_with(Rat::zero);
            *entry += &c * &nc;
        }
        combo.retain(|_, v| !v.is_zero());
    }
    let mut out = NcElement::zero();
    for (w, c) in combo {
        let m = w.iter().filter(|&&g| g == Gen::B).count() as u32;
        let n = w.iter().filter(|&&g| g == Gen::H).count() as u32;
        let k = w.iter().filter(|&&g| g == Gen::A).count() as u32;
        out.add_term(NcMonomial::new(m, n, k), c);
    }
    out
}

/// PBW normal form of a word (leftmost-first reduction).
pub fn normal_form(alg: &SmithAlgebra, word: &[Gen]) -> NcElement {
    normal_form_with_strategy(alg, word, Strategy::LeftmostFirst)
}
