//! Exact axiom checkers over any structure table.
//!
//! A checker enumerates every witness of the algebra's monomial basis within
//! the truncation and reports each nonzero residual. Reports are sorted, so
//! their content does not depend on the enumeration order of the basis.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linear::{format_scalar, Scalar};
use crate::poisson::{render, Monomial, Poly};
use crate::tensor::{outer, render2, render3, Tensor2, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witnesses: Vec<String>,
    pub residual: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.law, self.witnesses.join(", "), self.residual)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, witnesses: Vec<String>, residual: String) {
        self.violations.push(Violation {
            law: law.to_string(),
            witnesses,
            residual,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn sorted(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    /// One violation per line; empty when clean.
    pub fn to_text(&self) -> String {
        self.violations.iter().map(|v| format!("{v}\n")).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// A (possibly quotient) truncated Poisson algebra presented on monomials.
/// Operations return normal forms.
pub trait PoissonStructure {
    fn names(&self) -> &[String];
    fn truncation(&self) -> usize;
    /// Normal-form basis monomials of degree at most the truncation.
    fn basis(&self) -> Vec<Monomial>;
    fn reduce(&self, p: &Poly) -> Poly;
    fn product(&self, a: &Poly, b: &Poly) -> Poly;
    fn bracket(&self, a: &Poly, b: &Poly) -> Poly;

    fn show(&self, p: &Poly) -> String {
        render(p, self.names())
    }
}

pub trait CoalgebraStructure: PoissonStructure {
    /// Coproduct with both tensor factors in normal form.
    fn coproduct(&self, p: &Poly) -> Tensor2;
    fn counit(&self, p: &Poly) -> Scalar;
}

pub trait AntipodeStructure: PoissonStructure {
    /// Antipode in normal form; `None` outside the (partial) domain.
    fn antipode(&self, p: &Poly) -> Option<Poly>;
}

fn mono(m: &Monomial) -> Poly {
    Poly::basis(m.clone())
}

fn witnesses_up_to<S: PoissonStructure + ?Sized>(s: &S, n: usize) -> Vec<Monomial> {
    let mut basis: Vec<Monomial> = s.basis().into_iter().filter(|m| m.degree() <= n).collect();
    basis.sort();
    basis
}

/// Residuals of `(Δ ⊗ id)Δ - (id ⊗ Δ)Δ` on every basis monomial of degree `<= n`.
pub fn check_coassociativity<S: CoalgebraStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    for m in witnesses_up_to(s, n) {
        let t = s.coproduct(&mono(&m));
        let mut residual = Tensor3::zero();
        for ((a, b), c) in t.iter() {
            for ((x, y), d) in s.coproduct(&mono(a)).iter() {
                residual.add_term((x.clone(), y.clone(), b.clone()), c * d);
            }
            for ((x, y), d) in s.coproduct(&mono(b)).iter() {
                residual.add_term((a.clone(), x.clone(), y.clone()), -(c * d));
            }
        }
        if !residual.is_zero() {
            report.push(
                "coassociativity",
                vec![m.render(s.names())],
                render3(&residual, s.names()),
            );
        }
    }
    report.sorted()
}

/// Both one-sided counit laws on every basis monomial, and `ε({a, b}) = 0`
/// on every pair with degree sum `<= n`.
pub fn check_counit<S: CoalgebraStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    let basis = witnesses_up_to(s, n);
    for m in &basis {
        let t = s.coproduct(&mono(m));
        let target = s.reduce(&mono(m));
        let mut left = Poly::zero();
        let mut right = Poly::zero();
        for ((a, b), c) in t.iter() {
            left.add_scaled(&mono(b), &(c * s.counit(&mono(a))));
            right.add_scaled(&mono(a), &(c * s.counit(&mono(b))));
        }
        let left = s.reduce(&left);
        let right = s.reduce(&right);
        if left != target {
            report.push("counit-left", vec![m.render(s.names())], s.show(&(&left - &target)));
        }
        if right != target {
            report.push("counit-right", vec![m.render(s.names())], s.show(&(&right - &target)));
        }
    }
    for_pairs(&basis, n, |a, b| {
        let e = s.counit(&s.bracket(&mono(a), &mono(b)));
        if !e.is_zero() {
            report.push(
                "counit-bracket",
                vec![a.render(s.names()), b.render(s.names())],
                format_scalar(&e),
            );
        }
    });
    report.sorted()
}

/// `[x, y]` in the tensor square, built from the structure's own product and
/// bracket: `[p ⊗ q, r ⊗ s] = pr ⊗ [q, s] + [p, r] ⊗ qs`.
pub fn structure_tensor_bracket<S: PoissonStructure + ?Sized>(s: &S, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((p, q), c) in x.iter() {
        for ((r, t), d) in y.iter() {
            let coeff = c * d;
            let (p, q, r, t) = (mono(p), mono(q), mono(r), mono(t));
            out.add_scaled(&outer(&s.product(&p, &r), &s.bracket(&q, &t)), &coeff);
            out.add_scaled(&outer(&s.bracket(&p, &r), &s.product(&q, &t)), &coeff);
        }
    }
    out
}

/// Unordered pairs of non-unit basis monomials with degree sum `<= n`.
fn for_pairs(basis: &[Monomial], n: usize, mut f: impl FnMut(&Monomial, &Monomial)) {
    for (i, a) in basis.iter().enumerate() {
        if a.is_one() {
            continue;
        }
        for b in &basis[i..] {
            if !b.is_one() && a.degree() + b.degree() <= n {
                f(a, b);
            }
        }
    }
}

/// `Δ({a, b}) = [Δa, Δb]` on every pair of basis monomials with degree sum `<= n`.
pub fn check_poisson_compat<S: CoalgebraStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    let basis = witnesses_up_to(s, n);
    for_pairs(&basis, n, |a, b| {
        let (pa, pb) = (mono(a), mono(b));
        let lhs = s.coproduct(&s.bracket(&pa, &pb));
        let rhs = structure_tensor_bracket(s, &s.coproduct(&pa), &s.coproduct(&pb));
        let residual = &lhs - &rhs;
        if !residual.is_zero() {
            report.push(
                "poisson-compatibility",
                vec![a.render(s.names()), b.render(s.names())],
                render2(&residual, s.names()),
            );
        }
    });
    report.sorted()
}

/// `{p, qr} = {p, q}r + q{p, r}` on triples of non-unit basis monomials with
/// degree sum `<= n`.
pub fn check_leibniz<S: PoissonStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    let basis: Vec<Monomial> = witnesses_up_to(s, n).into_iter().filter(|m| !m.is_one()).collect();
    for p in &basis {
        for (j, q) in basis.iter().enumerate() {
            for r in &basis[j..] {
                if p.degree() + q.degree() + r.degree() > n {
                    continue;
                }
                let (pp, pq, pr) = (mono(p), mono(q), mono(r));
                let lhs = s.bracket(&pp, &s.product(&pq, &pr));
                let rhs = &s.product(&s.bracket(&pp, &pq), &pr) + &s.product(&pq, &s.bracket(&pp, &pr));
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    report.push(
                        "leibniz",
                        vec![p.render(s.names()), q.render(s.names()), r.render(s.names())],
                        s.show(&residual),
                    );
                }
            }
        }
    }
    report.sorted()
}

/// Antisymmetry on pairs and the Jacobi identity on triples of non-unit basis
/// monomials with degree sum `<= n`.
pub fn check_jacobi<S: PoissonStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    let basis: Vec<Monomial> = witnesses_up_to(s, n).into_iter().filter(|m| !m.is_one()).collect();
    for_pairs(&basis, n, |a, b| {
        let (pa, pb) = (mono(a), mono(b));
        let residual = &s.bracket(&pa, &pb) + &s.bracket(&pb, &pa);
        if !residual.is_zero() {
            report.push(
                "antisymmetry",
                vec![a.render(s.names()), b.render(s.names())],
                s.show(&residual),
            );
        }
    });
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i) {
            for c in &basis[j..] {
                if a.degree() + b.degree() + c.degree() > n {
                    continue;
                }
                let (pa, pb, pc) = (mono(a), mono(b), mono(c));
                let mut residual = s.bracket(&pa, &s.bracket(&pb, &pc));
                residual.add_scaled(&s.bracket(&pb, &s.bracket(&pc, &pa)), &Scalar::from_integer(1.into()));
                residual.add_scaled(&s.bracket(&pc, &s.bracket(&pa, &pb)), &Scalar::from_integer(1.into()));
                if !residual.is_zero() {
                    report.push(
                        "jacobi",
                        vec![a.render(s.names()), b.render(s.names()), c.render(s.names())],
                        s.show(&residual),
                    );
                }
            }
        }
    }
    report.sorted()
}

/// `S(ab) = S(b)S(a)` and `S({a, b}) = {S(b), S(a)}` on pairs of basis
/// monomials inside the antipode's domain with degree sum `<= n`.
pub fn check_antipode_antimorphism<S: AntipodeStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = Report::new();
    let basis = witnesses_up_to(s, n);
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            if a.degree() + b.degree() > n {
                continue;
            }
            let (pa, pb) = (mono(a), mono(b));
            let (Some(sa), Some(sb)) = (s.antipode(&pa), s.antipode(&pb)) else {
                continue;
            };
            let w = vec![a.render(s.names()), b.render(s.names())];
            if let Some(sab) = s.antipode(&s.product(&pa, &pb)) {
                let residual = &sab - &s.product(&sb, &sa);
                if !residual.is_zero() {
                    report.push("antipode-product", w.clone(), s.show(&residual));
                }
            }
            if let Some(sbr) = s.antipode(&s.bracket(&pa, &pb)) {
                let residual = &sbr - &s.bracket(&sb, &sa);
                if !residual.is_zero() {
                    report.push("antipode-bracket", w, s.show(&residual));
                }
            }
        }
    }
    report.sorted()
}

/// Every law applicable to a Poisson bialgebra.
pub fn check_all_bialgebra<S: CoalgebraStructure + ?Sized>(s: &S, n: usize) -> Report {
    let mut report = check_coassociativity(s, n);
    report.merge(check_counit(s, n));
    report.merge(check_poisson_compat(s, n));
    report.merge(check_leibniz(s, n));
    report.merge(check_jacobi(s, n));
    report.sorted()
}
