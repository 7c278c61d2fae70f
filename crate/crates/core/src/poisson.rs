//! Degree-truncated free Poisson algebra `P(V) = S(L(V))`.
//!
//! Monomials are multisets of Lyndon words; the product merges multisets and
//! the bracket is the biderivation extending the free Lie bracket. Every
//! generator has degree 1 and both operations are degree-additive, so results
//! computed from inputs whose degrees sum to at most the truncation are exact.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::lie::{bracket_words, lyndon_words, render_lyndon, Letter, LyndonWord};
use crate::linear::{format_scalar, Scalar, SparseVec};

/// A commutative monomial in Lyndon words. Ordered by degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: usize,
    factors: Vec<LyndonWord>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.factors)
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            factors: Vec::new(),
        }
    }

    pub fn from_factors(mut factors: Vec<LyndonWord>) -> Self {
        factors.sort();
        let degree = factors.iter().map(LyndonWord::degree).sum();
        Monomial { degree, factors }
    }

    pub fn lyndon(w: LyndonWord) -> Self {
        Monomial {
            degree: w.degree(),
            factors: vec![w],
        }
    }

    pub fn generator(a: Letter) -> Self {
        Self::lyndon(LyndonWord::letter(a))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[LyndonWord] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            if self.factors[i] <= other.factors[j] {
                factors.push(self.factors[i].clone());
                i += 1;
            } else {
                factors.push(other.factors[j].clone());
                j += 1;
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// The monomial with the factor at `index` removed.
    pub fn without(&self, index: usize) -> Monomial {
        let mut factors = self.factors.clone();
        let w = factors.remove(index);
        Monomial {
            degree: self.degree - w.degree(),
            factors,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.factors.iter().flat_map(|w| w.letters().iter().copied())
    }

    pub fn relabel(&self, f: impl Fn(Letter) -> Letter) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|w| w.relabel(&f)).collect())
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|w| render_lyndon(w, names))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Raw polynomial over the monomial basis, without ambient bookkeeping.
pub type Poly = SparseVec<Monomial>;

pub fn constant(c: Scalar) -> Poly {
    Poly::term(Monomial::one(), c)
}

pub fn unit() -> Poly {
    Poly::basis(Monomial::one())
}

pub fn gen(a: Letter) -> Poly {
    Poly::basis(Monomial::generator(a))
}

/// Highest monomial degree occurring in `p` (0 for the zero polynomial).
pub fn filtration_degree(p: &Poly) -> usize {
    p.labels().map(Monomial::degree).max().unwrap_or(0)
}

/// Product, dropping terms of degree above `max_degree`. The flag reports
/// whether anything nonzero was dropped.
pub fn multiply(a: &Poly, b: &Poly, max_degree: usize) -> (Poly, bool) {
    let mut out = Poly::zero();
    let mut lossy = false;
    for (m, x) in a.iter() {
        for (n, y) in b.iter() {
            if m.degree + n.degree > max_degree {
                lossy = true;
                continue;
            }
            out.add_term(m.mul(n), x * y);
        }
    }
    (out, lossy)
}

/// Bracket of two monomials by the double Leibniz expansion.
pub fn bracket_monomials(m: &Monomial, n: &Monomial) -> Poly {
    let mut out = Poly::zero();
    if m == n {
        return out;
    }
    for (i, f) in m.factors.iter().enumerate() {
        for (j, g) in n.factors.iter().enumerate() {
            let lie = bracket_words(f, g);
            if lie.is_zero() {
                continue;
            }
            let rest = m.without(i).mul(&n.without(j));
            for (w, c) in lie.iter() {
                out.add_term(rest.mul(&Monomial::lyndon(w.clone())), c.clone());
            }
        }
    }
    out
}

/// Poisson bracket, dropping terms of degree above `max_degree`.
pub fn bracket(a: &Poly, b: &Poly, max_degree: usize) -> (Poly, bool) {
    let mut out = Poly::zero();
    let mut lossy = false;
    for (m, x) in a.iter() {
        for (n, y) in b.iter() {
            let t = bracket_monomials(m, n);
            if t.is_zero() {
                continue;
            }
            if m.degree + n.degree > max_degree {
                lossy = true;
                continue;
            }
            out.add_scaled(&t, &(x * y));
        }
    }
    (out, lossy)
}

/// Applies an order-preserving letter relabeling to every monomial.
pub fn relabel(p: &Poly, f: impl Fn(Letter) -> Letter + Copy) -> Poly {
    p.map_labels(|m| m.relabel(f))
}

/// The Poisson isomorphism `P(V) -> P(V)^op` fixing generators: each Lyndon
/// factor of degree `d` picks up the sign `(-1)^(d-1)`. It is an involution.
pub fn op_twist(p: &Poly) -> Poly {
    p.iter()
        .map(|(m, c)| {
            let even = m.factors.iter().filter(|w| w.degree() % 2 == 0).count();
            let c = if even % 2 == 1 { -c.clone() } else { c.clone() };
            (m.clone(), c)
        })
        .collect()
}

/// Canonical text form: terms in ascending monomial order, e.g. `1 - 2/3*a*[a,b]`.
pub fn render(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&format_scalar(&abs));
        } else if abs.is_one() {
            out.push_str(&m.render(names));
        } else {
            out.push_str(&format_scalar(&abs));
            out.push('*');
            out.push_str(&m.render(names));
        }
    }
    out
}

struct AmbientInner {
    names: Vec<String>,
    truncation: usize,
    lyndon: OnceLock<Vec<Vec<LyndonWord>>>,
    monomials: OnceLock<Vec<Vec<Monomial>>>,
}

/// Generator names plus a truncation degree: the truncated `P(V)^{<= N}`.
/// Cheap to clone.
#[derive(Clone)]
pub struct Ambient(Arc<AmbientInner>);

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.truncation == other.0.truncation && self.0.names == other.0.names)
    }
}

impl Eq for Ambient {}

impl fmt::Debug for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}; N={})", self.0.names.join(","), self.0.truncation)
    }
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ambient {
    pub fn new(names: Vec<String>, truncation: usize) -> Result<Self, Error> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Validation(format!("generator name `{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::Validation(format!("duplicate generator name `{n}`")));
            }
        }
        if names.len() > Letter::MAX as usize {
            return Err(Error::Validation("too many generators".into()));
        }
        Ok(Ambient(Arc::new(AmbientInner {
            names,
            truncation,
            lyndon: OnceLock::new(),
            monomials: OnceLock::new(),
        })))
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn rank(&self) -> usize {
        self.0.names.len()
    }

    pub fn truncation(&self) -> usize {
        self.0.truncation
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.0.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// Lyndon words of degrees `1..=N`; index `d - 1` holds degree `d`.
    pub fn lyndon_words(&self) -> &[Vec<LyndonWord>] {
        self.0
            .lyndon
            .get_or_init(|| lyndon_words(self.rank(), self.truncation()))
    }

    /// Lyndon words of degree at most `d`.
    pub fn lyndon_up_to(&self, d: usize) -> impl Iterator<Item = &LyndonWord> + '_ {
        self.lyndon_words().iter().take(d).flatten()
    }

    /// Monomials of each degree `0..=N`, ascending.
    pub fn monomials(&self) -> &[Vec<Monomial>] {
        self.0.monomials.get_or_init(|| {
            let n = self.truncation();
            let words: Vec<&LyndonWord> = self.lyndon_up_to(n).collect();
            let mut by_degree = vec![Vec::new(); n + 1];
            let mut stack = Vec::new();
            enumerate_multisets(&words, 0, n, &mut stack, &mut by_degree);
            for ms in &mut by_degree {
                ms.sort();
            }
            by_degree
        })
    }

    pub fn monomials_up_to(&self, d: usize) -> impl Iterator<Item = &Monomial> + '_ {
        self.monomials().iter().take(d + 1).flatten()
    }

    pub fn render(&self, p: &Poly) -> String {
        render(p, self.names())
    }

    pub fn zero(&self) -> PoissElt {
        self.element(Poly::zero())
    }

    pub fn one(&self) -> PoissElt {
        self.element(unit())
    }

    pub fn scalar(&self, c: Scalar) -> PoissElt {
        self.element(constant(c))
    }

    pub fn generator(&self, name: &str) -> Option<PoissElt> {
        self.letter(name).map(|a| self.element(gen(a)))
    }

    /// Wraps a raw polynomial, dropping (and flagging) terms above the truncation.
    pub fn element(&self, mut terms: Poly) -> PoissElt {
        let n = self.truncation();
        let before = terms.len();
        terms.retain(|m| m.degree() <= n);
        PoissElt {
            ambient: self.clone(),
            lossy: terms.len() != before,
            terms,
        }
    }
}

fn enumerate_multisets(
    words: &[&LyndonWord],
    start: usize,
    budget: usize,
    stack: &mut Vec<LyndonWord>,
    out: &mut [Vec<Monomial>],
) {
    let m = Monomial::from_factors(stack.clone());
    out[m.degree()].push(m);
    for (i, w) in words.iter().enumerate().skip(start) {
        if w.degree() <= budget {
            stack.push((*w).clone());
            enumerate_multisets(words, i, budget - w.degree(), stack, out);
            stack.pop();
        }
    }
}

/// Number of monomials of degree exactly `d` over `dim_v` generators,
/// counted from Lyndon-word multiplicities.
pub fn graded_dimension(dim_v: usize, d: usize) -> u128 {
    let lyndon: Vec<usize> = lyndon_words(dim_v, d).iter().map(Vec::len).collect();
    // coefficients of prod_k (1 - t^k)^(-l_k), truncated at t^d
    let mut series = vec![0u128; d + 1];
    series[0] = 1;
    for (k, &count) in lyndon.iter().enumerate() {
        let k = k + 1;
        for _ in 0..count {
            for j in k..=d {
                series[j] += series[j - k];
            }
        }
    }
    series[d]
}

/// Element of a truncated free Poisson algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct PoissElt {
    ambient: Ambient,
    terms: Poly,
    lossy: bool,
}

impl fmt::Debug for PoissElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PoissElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ambient.render(&self.terms))
    }
}

impl PoissElt {
    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn terms(&self) -> &Poly {
        &self.terms
    }

    pub fn into_terms(self) -> Poly {
        self.terms
    }

    pub fn lossy(&self) -> bool {
        self.lossy
    }

    /// Same element with the truncation-loss flag raised when `lossy`.
    pub fn flagged(mut self, lossy: bool) -> PoissElt {
        self.lossy |= lossy;
        self
    }

    pub fn truncation(&self) -> usize {
        self.ambient.truncation()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check(&self, other: &PoissElt) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AlphabetMismatch(format!(
                "{:?} vs {:?}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    fn wrap(&self, terms: Poly, lossy: bool) -> PoissElt {
        PoissElt {
            ambient: self.ambient.clone(),
            terms,
            lossy,
        }
    }

    pub fn add(&self, other: &PoissElt) -> Result<PoissElt, Error> {
        self.check(other)?;
        Ok(self.wrap(&self.terms + &other.terms, self.lossy || other.lossy))
    }

    pub fn sub(&self, other: &PoissElt) -> Result<PoissElt, Error> {
        self.check(other)?;
        Ok(self.wrap(&self.terms - &other.terms, self.lossy || other.lossy))
    }

    pub fn neg(&self) -> PoissElt {
        self.wrap(-&self.terms, self.lossy)
    }

    pub fn scale(&self, c: &Scalar) -> PoissElt {
        self.wrap(self.terms.scaled(c), self.lossy)
    }

    /// Commutative product; terms above the truncation are dropped and flagged.
    pub fn product(&self, other: &PoissElt) -> Result<PoissElt, Error> {
        self.check(other)?;
        let (terms, lost) = multiply(&self.terms, &other.terms, self.truncation());
        Ok(self.wrap(terms, self.lossy || other.lossy || lost))
    }

    /// Poisson bracket; terms above the truncation are dropped and flagged.
    pub fn bracket(&self, other: &PoissElt) -> Result<PoissElt, Error> {
        self.check(other)?;
        let (terms, lost) = bracket(&self.terms, &other.terms, self.truncation());
        Ok(self.wrap(terms, self.lossy || other.lossy || lost))
    }

    /// True iff every term has degree exactly `d`.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.labels().all(|m| m.degree() == d)
    }
}

impl Serialize for PoissElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Is `p` the zero polynomial or a scalar multiple of the unit?
pub fn is_scalar(p: &Poly) -> bool {
    p.labels().all(Monomial::is_one)
}

pub fn scalar_part(p: &Poly) -> Scalar {
    p.get(&Monomial::one()).cloned().unwrap_or_else(Scalar::zero)
}
