//! Presented Poisson bialgebras: the free one on a coalgebra, coproducts,
//! coequalizers, the op-cop twist, and factorization through the free object.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::coalgebra::{render_target, target_outer, validate_coalgebra, CoalgebraSpec, TargetElt, TargetHopfSpec};
use crate::colimits::{coproduct_names, poisson_coequalizer, Evaluator, MorphismTable, TruncatedQuotient};
use crate::error::{Error, Result};
use crate::lie::{Letter, LyndonWord};
use crate::linear::{format_scalar, Scalar};
use crate::poisson::{bracket, gen, multiply, op_twist, relabel, Ambient, Monomial, Poly};
use crate::tensor::{flip, outer, render2, tensor_bracket, tensor_product, unit2, Tensor2};
use crate::verify::{check_all_bialgebra, CoalgebraStructure, PoissonStructure, Report};

/// A truncated Poisson algebra `P(V)/I` with `Δ` and `ε` prescribed on the
/// generators and extended as Poisson algebra maps.
pub struct PresentedPoissonBialgebra {
    quotient: Arc<TruncatedQuotient>,
    delta: Vec<Tensor2>,
    epsilon: Vec<Scalar>,
    cache: RwLock<HashMap<LyndonWord, Tensor2>>,
}

impl Clone for PresentedPoissonBialgebra {
    fn clone(&self) -> Self {
        PresentedPoissonBialgebra::new(self.quotient.clone(), self.delta.clone(), self.epsilon.clone())
            .expect("tables already validated")
    }
}

impl std::fmt::Debug for PresentedPoissonBialgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentedPoissonBialgebra")
            .field("quotient", &self.quotient)
            .field("delta", &self.delta)
            .finish()
    }
}

impl PresentedPoissonBialgebra {
    pub fn new(quotient: Arc<TruncatedQuotient>, delta: Vec<Tensor2>, epsilon: Vec<Scalar>) -> Result<Self> {
        let rank = quotient.ambient().rank();
        if delta.len() != rank || epsilon.len() != rank {
            return Err(Error::Validation(format!("tables must cover all {rank} generators")));
        }
        Ok(PresentedPoissonBialgebra {
            quotient,
            delta,
            epsilon,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn quotient(&self) -> &Arc<TruncatedQuotient> {
        &self.quotient
    }

    pub fn ambient(&self) -> &Ambient {
        self.quotient.ambient()
    }

    pub fn relations(&self) -> &[Poly] {
        self.quotient.generators()
    }

    pub fn generator_delta(&self, a: usize) -> &Tensor2 {
        &self.delta[a]
    }

    pub fn generator_epsilon(&self, a: usize) -> &Scalar {
        &self.epsilon[a]
    }

    /// Same tables over a different quotient of the same ambient.
    pub fn with_quotient(&self, quotient: Arc<TruncatedQuotient>) -> Result<Self> {
        if quotient.ambient() != self.ambient() {
            return Err(Error::AlphabetMismatch("quotient over a different ambient".into()));
        }
        Self::new(quotient, self.delta.clone(), self.epsilon.clone())
    }

    /// Replaces the coproduct table of one generator (for corruption tests).
    pub fn with_generator_delta(&self, a: usize, t: Tensor2) -> Self {
        let mut delta = self.delta.clone();
        delta[a] = t;
        Self::new(self.quotient.clone(), delta, self.epsilon.clone()).expect("same shape")
    }

    pub fn with_generator_epsilon(&self, a: usize, e: Scalar) -> Self {
        let mut epsilon = self.epsilon.clone();
        epsilon[a] = e;
        Self::new(self.quotient.clone(), self.delta.clone(), epsilon).expect("same shape")
    }

    fn lyndon_delta(&self, w: &LyndonWord) -> Tensor2 {
        if let Some(hit) = self.cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let n = self.ambient().truncation();
        let out = match w.standard_factorization() {
            None => self.delta[w.letters()[0] as usize].clone(),
            Some((u, v)) => tensor_bracket(&self.lyndon_delta(&u), &self.lyndon_delta(&v), n).0,
        };
        self.cache.write().unwrap().insert(w.clone(), out.clone());
        out
    }

    /// `Δ̄` on the free ambient, without reduction. Each tensor factor is
    /// truncated at `N`.
    pub fn free_coproduct(&self, p: &Poly) -> Tensor2 {
        let n = self.ambient().truncation();
        let mut out = Tensor2::zero();
        for (m, c) in p.iter() {
            let mut acc = unit2();
            for w in m.factors() {
                acc = tensor_product(&acc, &self.lyndon_delta(w), n).0;
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// `ε̄` on the free ambient: multiplicative, zero on brackets.
    pub fn free_counit(&self, p: &Poly) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in p.iter() {
            let mut e = Scalar::one();
            for w in m.factors() {
                if !w.is_letter() {
                    e = Scalar::zero();
                    break;
                }
                e *= &self.epsilon[w.letters()[0] as usize];
            }
            out += c * e;
        }
        out
    }

    /// Both tensor factors reduced to normal form.
    pub fn reduce_tensor(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        let mut left_cache: HashMap<Monomial, Poly> = HashMap::new();
        for ((a, b), c) in t.iter() {
            let na = left_cache
                .entry(a.clone())
                .or_insert_with(|| self.quotient.normal_form(&Poly::basis(a.clone())))
                .clone();
            let nb = left_cache
                .entry(b.clone())
                .or_insert_with(|| self.quotient.normal_form(&Poly::basis(b.clone())))
                .clone();
            out.add_scaled(&outer(&na, &nb), c);
        }
        out
    }

    /// Every ideal row must vanish in `Q/Ī ⊗ Q/Ī` under `Δ̄` and under `ε̄`.
    pub fn coideal_certificate(&self) -> Report {
        let mut report = Report::new();
        let amb = self.ambient();
        for row in self.quotient.generators().iter().chain(self.quotient.ideal().rows()) {
            let residual = self.reduce_tensor(&self.free_coproduct(row));
            if !residual.is_zero() {
                report.push("coideal", vec![amb.render(row)], render2(&residual, amb.names()));
            }
            let e = self.free_counit(row);
            if !e.is_zero() {
                report.push("coideal-counit", vec![amb.render(row)], format_scalar(&e));
            }
        }
        report.sorted()
    }

    /// The generator coalgebra when every `Δ(x)` lies in `V ⊗ V`.
    pub fn generator_coalgebra(&self) -> Option<CoalgebraSpec> {
        let mut delta = Vec::new();
        for t in &self.delta {
            let mut terms = Vec::new();
            for ((a, b), c) in t.iter() {
                let (fa, fb) = (a.factors(), b.factors());
                if fa.len() != 1 || fb.len() != 1 || !fa[0].is_letter() || !fb[0].is_letter() {
                    return None;
                }
                terms.push((fa[0].letters()[0] as usize, fb[0].letters()[0] as usize, c.clone()));
            }
            delta.push(terms);
        }
        CoalgebraSpec::new(self.ambient().names().to_vec(), delta, self.epsilon.clone()).ok()
    }
}

impl PoissonStructure for PresentedPoissonBialgebra {
    fn names(&self) -> &[String] {
        self.ambient().names()
    }

    fn truncation(&self) -> usize {
        self.ambient().truncation()
    }

    fn basis(&self) -> Vec<Monomial> {
        self.quotient.basis_monomials()
    }

    fn reduce(&self, p: &Poly) -> Poly {
        self.quotient.normal_form(p)
    }

    fn product(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::product(&*self.quotient, a, b)
    }

    fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::bracket(&*self.quotient, a, b)
    }
}

impl CoalgebraStructure for PresentedPoissonBialgebra {
    fn coproduct(&self, p: &Poly) -> Tensor2 {
        self.reduce_tensor(&self.free_coproduct(p))
    }

    fn counit(&self, p: &Poly) -> Scalar {
        self.free_counit(p)
    }
}

fn coalgebra_tables(spec: &CoalgebraSpec) -> (Vec<Tensor2>, Vec<Scalar>) {
    let delta = (0..spec.dim())
        .map(|i| {
            spec.delta(i)
                .iter()
                .map(|(a, b, c)| ((Monomial::generator(*a as Letter), Monomial::generator(*b as Letter)), c.clone()))
                .collect()
        })
        .collect();
    let epsilon = (0..spec.dim()).map(|i| spec.epsilon(i).clone()).collect();
    (delta, epsilon)
}

/// `P(C)^{<= N}` with `Δ̄`, `ε̄` induced from the structure constants of `C`.
pub fn induce_bialgebra(spec: &CoalgebraSpec, n: usize) -> Result<PresentedPoissonBialgebra> {
    let report = validate_coalgebra(spec);
    if !report.is_clean() {
        return Err(Error::Validation(report.to_text().trim_end().to_string()));
    }
    let ambient = Ambient::new(spec.basis().to_vec(), n)?;
    let (delta, epsilon) = coalgebra_tables(spec);
    PresentedPoissonBialgebra::new(Arc::new(TruncatedQuotient::free(ambient)), delta, epsilon)
}

/// Every bialgebra law on the quotient basis within the truncation.
pub fn check_bialgebra(b: &PresentedPoissonBialgebra) -> Report {
    check_all_bialgebra(b, b.ambient().truncation())
}

/// Same algebra with negated bracket and flipped coproduct, presented on the
/// same generators: relations are transported by the sign twist, which is a
/// Poisson isomorphism onto the opposite algebra fixing generators.
pub fn op_cop(b: &PresentedPoissonBialgebra) -> Result<PresentedPoissonBialgebra> {
    let relations = b.relations().iter().map(op_twist).collect();
    let quotient = Arc::new(TruncatedQuotient::new(b.ambient().clone(), relations)?);
    let delta = b.delta.iter().map(flip).collect();
    PresentedPoissonBialgebra::new(quotient, delta, b.epsilon.clone())
}

/// The identification of `op_cop(B)` with `B` as a set, in coordinates.
pub fn op_cop_to_underlying(p: &Poly) -> Poly {
    op_twist(p)
}

/// `(f ⊗ f)Δ(x) = Δ(f x)` and `ε(f x) = ε(x)` on every source generator.
pub fn check_bialgebra_morphism(
    f: &MorphismTable,
    source: &PresentedPoissonBialgebra,
    target: &PresentedPoissonBialgebra,
) -> Report {
    let mut report = Report::new();
    if f.source().ambient() != source.ambient() || f.target().ambient() != target.ambient() {
        report.push("morphism-shape", vec![], "table does not match the bialgebras".into());
        return report;
    }
    report.merge(f.well_definedness());
    let names = source.ambient().names();
    for (a, image) in f.images().iter().enumerate() {
        let lhs = crate::tensor::map_factors(
            source.generator_delta(a),
            |m| f.apply(&Poly::basis(m.clone())).0,
            |m| f.apply(&Poly::basis(m.clone())).0,
        );
        let residual = &target.reduce_tensor(&lhs) - &CoalgebraStructure::coproduct(target, image);
        if !residual.is_zero() {
            report.push(
                "morphism-coproduct",
                vec![names[a].clone()],
                render2(&residual, target.ambient().names()),
            );
        }
        let e = target.counit(image) - source.generator_epsilon(a);
        if !e.is_zero() {
            report.push("morphism-counit", vec![names[a].clone()], format_scalar(&e));
        }
    }
    report.sorted()
}

pub struct BialgebraCoproduct {
    pub object: Arc<PresentedPoissonBialgebra>,
    pub injections: Vec<MorphismTable>,
}

fn bialgebra_coproduct_named(
    operands: &[&PresentedPoissonBialgebra],
    n: usize,
    suffix: bool,
) -> Result<BialgebraCoproduct> {
    for op in operands {
        if op.ambient().truncation() != n {
            return Err(Error::TruncationMismatch(op.ambient().truncation(), n));
        }
    }
    let names = coproduct_names(&operands.iter().map(|o| o.ambient().names()).collect::<Vec<_>>(), suffix);
    let ambient = Ambient::new(names, n)?;
    let mut relations = Vec::new();
    let mut delta = Vec::new();
    let mut epsilon = Vec::new();
    let mut offsets = Vec::new();
    let mut offset = 0 as Letter;
    for op in operands {
        offsets.push(offset);
        let shift = move |a: Letter| a + offset;
        relations.extend(op.relations().iter().map(|r| relabel(r, shift)));
        for t in &op.delta {
            delta.push(t.map_labels(|(a, b)| (a.relabel(shift), b.relabel(shift))));
        }
        epsilon.extend(op.epsilon.iter().cloned());
        offset += op.ambient().rank() as Letter;
    }
    let quotient = Arc::new(TruncatedQuotient::new(ambient, relations)?);
    let object = Arc::new(PresentedPoissonBialgebra::new(quotient.clone(), delta, epsilon)?);
    let injections = operands
        .iter()
        .zip(offsets)
        .map(|(op, off)| {
            let images = (0..op.ambient().rank()).map(|a| gen(a as Letter + off)).collect();
            MorphismTable::new(op.quotient.clone(), quotient.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BialgebraCoproduct { object, injections })
}

/// Coproduct of presented bialgebras; `Δ` on the image of operand `l` is
/// `(q_l ⊗ q_l) ∘ Δ_l`.
pub fn bialgebra_coproduct(operands: &[&PresentedPoissonBialgebra], n: usize) -> Result<BialgebraCoproduct> {
    bialgebra_coproduct_named(operands, n, false)
}

/// As [`bialgebra_coproduct`] with every generator of operand `l` renamed to
/// `<name>_l`.
pub fn bialgebra_coproduct_staged(operands: &[&PresentedPoissonBialgebra], n: usize) -> Result<BialgebraCoproduct> {
    bialgebra_coproduct_named(operands, n, true)
}

/// The initial Poisson bialgebra `k`.
pub fn initial_bialgebra(n: usize) -> PresentedPoissonBialgebra {
    let ambient = Ambient::new(Vec::new(), n).expect("empty alphabet");
    PresentedPoissonBialgebra::new(Arc::new(TruncatedQuotient::free(ambient)), Vec::new(), Vec::new())
        .expect("empty tables")
}

pub struct BialgebraCoequalizer {
    pub object: Arc<PresentedPoissonBialgebra>,
    pub projection: MorphismTable,
    pub certificate: Report,
}

/// Coequalizer of two bialgebra morphisms, certified to be a coideal quotient.
pub fn bialgebra_coequalizer(
    f: &MorphismTable,
    g: &MorphismTable,
    source: &PresentedPoissonBialgebra,
    target: &PresentedPoissonBialgebra,
) -> Result<BialgebraCoequalizer> {
    for (name, m) in [("f", f), ("g", g)] {
        let report = check_bialgebra_morphism(m, source, target);
        if !report.is_clean() {
            return Err(Error::NotCoalgebraMap(format!("{name}: {}", report.to_text().trim_end())));
        }
    }
    let coeq = poisson_coequalizer(f, g)?;
    let object = Arc::new(target.with_quotient(coeq.object.clone())?);
    let certificate = object.coideal_certificate();
    if !certificate.is_clean() {
        return Err(Error::CoidealFailure(certificate.to_text().trim_end().to_string()));
    }
    Ok(BialgebraCoequalizer {
        object,
        projection: coeq.projection,
        certificate,
    })
}

/// A Poisson algebra map `P(C) -> H` into a closed-form target.
#[derive(Clone, Debug)]
pub struct TargetMap {
    source: Ambient,
    target: TargetHopfSpec,
    table: HashMap<Monomial, TargetElt>,
}

impl TargetMap {
    pub fn source(&self) -> &Ambient {
        &self.source
    }

    pub fn target(&self) -> &TargetHopfSpec {
        &self.target
    }

    /// A table given directly on basis monomials, for uniqueness tests.
    pub fn from_table(source: Ambient, target: TargetHopfSpec, table: HashMap<Monomial, TargetElt>) -> Self {
        TargetMap { source, target, table }
    }

    pub fn table(&self) -> &HashMap<Monomial, TargetElt> {
        &self.table
    }

    pub fn apply(&self, p: &Poly) -> TargetElt {
        let mut out = TargetElt::zero();
        for (m, c) in p.iter() {
            if let Some(v) = self.table.get(m) {
                out.add_scaled(v, c);
            }
        }
        out
    }

    /// `T(ab) = T(a)T(b)` and `T{a, b} = {T a, T b}` on basis pairs with degree
    /// sum `<= N`, and `T(1) = 1`.
    pub fn morphism_report(&self) -> Report {
        let mut report = Report::new();
        let n = self.source.truncation();
        let names = self.target.names();
        if self.apply(&Poly::basis(Monomial::one())) != self.target.unit() {
            report.push("map-unit", vec!["1".into()], "T(1) ≠ 1".into());
        }
        let monos: Vec<Monomial> = self.source.monomials_up_to(n).cloned().collect();
        for (i, a) in monos.iter().enumerate() {
            for b in &monos[i..] {
                if a.degree() + b.degree() > n || a.is_one() || b.is_one() {
                    continue;
                }
                let (pa, pb) = (Poly::basis(a.clone()), Poly::basis(b.clone()));
                let (ta, tb) = (self.apply(&pa), self.apply(&pb));
                let w = vec![a.render(self.source.names()), b.render(self.source.names())];
                let prod = &self.apply(&multiply(&pa, &pb, n).0) - &self.target.product(&ta, &tb);
                if !prod.is_zero() {
                    report.push("map-product", w.clone(), render_target(&prod, names));
                }
                let br = &self.apply(&bracket(&pa, &pb, n).0) - &self.target.bracket(&ta, &tb);
                if !br.is_zero() {
                    report.push("map-bracket", w, render_target(&br, names));
                }
            }
        }
        report.sorted()
    }

    /// `Δ_H T = (T ⊗ T) Δ̄` and `ε_H T = ε̄` on every basis monomial.
    pub fn coalgebra_report(&self, b: &PresentedPoissonBialgebra) -> Report {
        let mut report = Report::new();
        for m in self.source.monomials_up_to(self.source.truncation()) {
            let p = Poly::basis(m.clone());
            let image = self.apply(&p);
            let mut rhs = crate::coalgebra::TargetTensor::zero();
            for ((l, r), c) in b.free_coproduct(&p).iter() {
                let tl = self.apply(&Poly::basis(l.clone()));
                let tr = self.apply(&Poly::basis(r.clone()));
                rhs.add_scaled(&target_outer(&tl, &tr), c);
            }
            let residual = &self.target.coproduct(&image) - &rhs;
            let w = vec![m.render(self.source.names())];
            if !residual.is_zero() {
                report.push("map-coproduct", w.clone(), self.target.render_tensor(&residual));
            }
            let e = self.target.counit(&image) - b.free_counit(&p);
            if !e.is_zero() {
                report.push("map-counit", w, format_scalar(&e));
            }
        }
        report.sorted()
    }
}

pub struct Factorization {
    pub map: TargetMap,
    /// Coalgebra-map, Poisson-map, and restriction checks of the extension.
    pub report: Report,
}

/// Checks that `f: C -> H` is a coalgebra map, then extends it to the unique
/// Poisson algebra map on `P(C)^{<= N}` and verifies the extension.
pub fn factor_through_free(
    spec: &CoalgebraSpec,
    images: &[TargetElt],
    target: &TargetHopfSpec,
    n: usize,
) -> Result<Factorization> {
    if images.len() != spec.dim() {
        return Err(Error::NotCoalgebraMap(format!("{} images for {} basis elements", images.len(), spec.dim())));
    }
    if let Some(bad) = images.iter().flat_map(|e| e.labels()).find(|e| e.len() != target.rank()) {
        return Err(Error::NotCoalgebraMap(format!("exponent vector {bad:?} has wrong length")));
    }
    let mut violations = Report::new();
    for i in 0..spec.dim() {
        let mut rhs = crate::coalgebra::TargetTensor::zero();
        for (a, b, c) in spec.delta(i) {
            rhs.add_scaled(&target_outer(&images[*a], &images[*b]), c);
        }
        let residual = &target.coproduct(&images[i]) - &rhs;
        if !residual.is_zero() {
            violations.push("coalgebra-map", vec![spec.basis()[i].clone()], target.render_tensor(&residual));
        }
        let e = target.counit(&images[i]) - spec.epsilon(i);
        if !e.is_zero() {
            violations.push("coalgebra-map-counit", vec![spec.basis()[i].clone()], format_scalar(&e));
        }
    }
    if !violations.is_clean() {
        return Err(Error::NotCoalgebraMap(violations.sorted().to_text().trim_end().to_string()));
    }
    let free = induce_bialgebra(spec, n)?;
    let source = free.ambient().clone();
    let mut words: HashMap<LyndonWord, TargetElt> = HashMap::new();
    for w in source.lyndon_up_to(n) {
        let v = match w.standard_factorization() {
            None => images[w.letters()[0] as usize].clone(),
            Some((u, v)) => target.bracket(&words[&u], &words[&v]),
        };
        words.insert(w.clone(), v);
    }
    let mut table = HashMap::new();
    for m in source.monomials_up_to(n) {
        let mut v = target.unit();
        for w in m.factors() {
            v = target.product(&v, &words[w]);
        }
        table.insert(m.clone(), v);
    }
    let map = TargetMap {
        source: source.clone(),
        target: target.clone(),
        table,
    };
    let mut report = map.morphism_report();
    report.merge(map.coalgebra_report(&free));
    for (i, image) in images.iter().enumerate() {
        if &map.apply(&gen(i as Letter)) != image {
            report.push("restriction", vec![spec.basis()[i].clone()], "f̄ ∘ ī ≠ f".into());
        }
    }
    Ok(Factorization {
        map,
        report: report.sorted(),
    })
}

/// Induced Poisson map out of a presented bialgebra into another presented
/// algebra, evaluated with reduction at each step.
pub fn evaluate(table: &MorphismTable, p: &Poly) -> Poly {
    let mut e = Evaluator::new(table.target(), table.images());
    e.apply(p).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::builtin;
    use crate::linear::int;
    use crate::verify::check_counit;

    fn g(a: Letter) -> Monomial {
        Monomial::generator(a)
    }

    #[test]
    fn grouplike_square() {
        let b = induce_bialgebra(&builtin("grouplike-1").unwrap(), 3).unwrap();
        let g2 = g(0).mul(&g(0));
        assert_eq!(b.free_coproduct(&Poly::basis(g2.clone())), Tensor2::basis((g2.clone(), g2)));
    }

    #[test]
    fn grouplike_bracket_coproduct() {
        let b = induce_bialgebra(&builtin("grouplike-2").unwrap(), 2).unwrap();
        let w = bracket(&gen(0), &gen(1), 2).0;
        let gh = multiply(&gen(0), &gen(1), 2).0;
        let expected = &outer(&gh, &w) + &outer(&w, &gh);
        assert_eq!(b.free_coproduct(&w), expected);
        assert!(b.free_counit(&w).is_zero());
    }

    #[test]
    fn trig_product_coproduct() {
        let b = induce_bialgebra(&builtin("trig").unwrap(), 2).unwrap();
        let (c, s) = (g(0), g(1));
        let cs = c.mul(&s);
        let (cc, ss) = (c.mul(&c), s.mul(&s));
        let mut expected = Tensor2::zero();
        expected.add_term((cs.clone(), cc.clone()), int(1));
        expected.add_term((cc, cs.clone()), int(1));
        expected.add_term((ss.clone(), cs.clone()), int(-1));
        expected.add_term((cs, ss), int(-1));
        assert_eq!(b.free_coproduct(&Poly::basis(c.mul(&s))), expected);
    }

    #[test]
    fn corrupted_table_fails_counit() {
        let b = induce_bialgebra(&builtin("grouplike-1").unwrap(), 2).unwrap();
        let bad = b.with_generator_delta(0, Tensor2::basis((g(0), Monomial::one())));
        assert!(check_counit(&bad, 2).has_law("counit-left"));
        let bad = b.with_generator_epsilon(0, int(0));
        assert!(!check_counit(&bad, 2).is_clean());
    }

    #[test]
    fn op_cop_is_an_involution() {
        let b = induce_bialgebra(&builtin("trig").unwrap(), 3).unwrap();
        let oc = op_cop(&b).unwrap();
        assert_eq!(oc.generator_delta(0), b.generator_delta(0));
        assert_eq!(oc.generator_delta(1), &flip(b.generator_delta(1)));
        let back = op_cop(&oc).unwrap();
        for a in 0..2 {
            assert_eq!(back.generator_delta(a), b.generator_delta(a));
        }
        assert!(check_bialgebra(&oc).is_clean());
        let w = PoissonStructure::bracket(&oc, &gen(0), &gen(1));
        assert_eq!(op_cop_to_underlying(&w), -&PoissonStructure::bracket(&b, &gen(0), &gen(1)));
    }
}
