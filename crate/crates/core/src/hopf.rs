//! The free Poisson Hopf algebra on a Poisson bialgebra, built from a finite
//! run of alternating stages `B, B^{op,cop}, B, ...` and the quotient forcing
//! the stage shift `S'` to be a convolution inverse of the identity.
//!
//! Stage `n` of a base generator `x` is the letter `n * b + x`, named `x_n`,
//! where `b` is the number of base generators. Odd stages present
//! `B^{op,cop}` through the sign twist, so on coordinates `q_n` is a letter
//! shift for even `n` and a letter shift after the twist for odd `n`. In
//! these coordinates `S'` shifts every Lyndon factor of degree `d` one stage
//! up and multiplies it by `(-1)^(d-1)`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;

use crate::bialgebra::{bialgebra_coproduct, bialgebra_coproduct_staged, induce_bialgebra, op_cop, BialgebraCoproduct, PresentedPoissonBialgebra};
use crate::coalgebra::CoalgebraSpec;
use crate::colimits::{MorphismTable, TruncatedQuotient};
use crate::error::{Error, Result};
use crate::lie::{Letter, LyndonWord};
use crate::linear::{Scalar, SubspaceBasis};
use crate::poisson::{constant, gen, multiply, op_twist, relabel, unit, Ambient, Monomial, Poly};
use crate::tensor::{flip, map_factors, Tensor2};
use crate::verify::{check_antipode_antimorphism, AntipodeStructure, CoalgebraStructure, PoissonStructure, Report};

/// `B_0 ⊔ ... ⊔ B_{M-1}` with `B_n = B` for even `n` and `B^{op,cop}` for odd.
pub struct Staged {
    base: PresentedPoissonBialgebra,
    stages: usize,
    object: Arc<PresentedPoissonBialgebra>,
    injections: Vec<MorphismTable>,
}

pub fn staged_coproduct(base: &PresentedPoissonBialgebra, stages: usize) -> Result<Staged> {
    if stages < 2 {
        return Err(Error::StageOverflow(format!("stage budget {stages} < 2 leaves S' undefined")));
    }
    let twisted = op_cop(base)?;
    let operands: Vec<&PresentedPoissonBialgebra> =
        (0..stages).map(|n| if n % 2 == 0 { base } else { &twisted }).collect();
    let BialgebraCoproduct { object, injections } =
        bialgebra_coproduct_staged(&operands, base.ambient().truncation())?;
    Ok(Staged {
        base: base.clone(),
        stages,
        object,
        injections,
    })
}

impl Staged {
    pub fn base(&self) -> &PresentedPoissonBialgebra {
        &self.base
    }

    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn base_rank(&self) -> usize {
        self.base.ambient().rank()
    }

    pub fn bialgebra(&self) -> &Arc<PresentedPoissonBialgebra> {
        &self.object
    }

    pub fn ambient(&self) -> &Ambient {
        self.object.ambient()
    }

    /// Generator-inclusion table of stage `n`.
    pub fn injection(&self, n: usize) -> &MorphismTable {
        &self.injections[n]
    }

    pub fn letter(&self, stage: usize, base: usize) -> Letter {
        (stage * self.base_rank() + base) as Letter
    }

    pub fn stage_of(&self, a: Letter) -> usize {
        a as usize / self.base_rank()
    }

    /// Highest stage occurring in `p`, if any letter occurs.
    pub fn max_stage(&self, p: &Poly) -> Option<usize> {
        p.labels().flat_map(Monomial::letters).map(|a| self.stage_of(a)).max()
    }

    /// `q_n` applied to an element written in the coordinates of `B`.
    pub fn q(&self, n: usize, p: &Poly) -> Poly {
        let shift = (n * self.base_rank()) as Letter;
        let p = if n % 2 == 1 { op_twist(p) } else { p.clone() };
        relabel(&p, move |a| a + shift)
    }

    pub fn s_prime(&self, p: &Poly) -> Result<Poly> {
        s_prime_shift(p, self.base_rank(), self.stages)
    }

    /// `(S' ⊗ S') ∘ flip`, the coalgebra anti-morphism property of `S'`.
    pub fn s_prime_tensor(&self, t: &Tensor2) -> Result<Tensor2> {
        for ((a, b), _) in t.iter() {
            self.s_prime(&Poly::basis(a.clone()))?;
            self.s_prime(&Poly::basis(b.clone()))?;
        }
        let s = |m: &Monomial| self.s_prime(&Poly::basis(m.clone())).expect("checked");
        Ok(flip(&map_factors(t, s, s)))
    }

    /// `(S' ∗ Id − uε)(q_n x)` and `(Id ∗ S' − uε)(q_n x)` for every base
    /// generator `x` and stage `n <= M − 2`, in that order.
    pub fn hopf_ideal_generators(&self) -> Result<Vec<Poly>> {
        let mut out = Vec::new();
        for n in 0..self.stages - 1 {
            for x in 0..self.base_rank() {
                let (left, right) = self.convolution_relations(n, x)?;
                out.push(left);
                out.push(right);
            }
        }
        Ok(out)
    }

    fn convolution_relations(&self, n: usize, x: usize) -> Result<(Poly, Poly)> {
        let a = self.letter(n, x);
        let delta = self.object.generator_delta(a as usize);
        let eps = constant(self.object.generator_epsilon(a as usize).clone());
        let big_n = self.ambient().truncation();
        let mut left = -&eps;
        let mut right = -&eps;
        for ((l, r), c) in delta.iter() {
            let (pl, pr) = (Poly::basis(l.clone()), Poly::basis(r.clone()));
            let (sl, lost_l) = multiply(&self.s_prime(&pl)?, &pr, big_n);
            let (sr, lost_r) = multiply(&pl, &self.s_prime(&pr)?, big_n);
            if lost_l || lost_r {
                return Err(Error::Validation(format!(
                    "degree budget {big_n} cannot hold the convolution relations"
                )));
            }
            left.add_scaled(&sl, c);
            right.add_scaled(&sr, c);
        }
        Ok((left, right))
    }
}

/// Closed-form `S'` on coordinates with `base_rank` letters per stage.
pub fn s_prime_shift(p: &Poly, base_rank: usize, stages: usize) -> Result<Poly> {
    let top = ((stages - 1) * base_rank) as Letter;
    if let Some(a) = p.labels().flat_map(Monomial::letters).find(|&a| a >= top) {
        return Err(Error::StageOverflow(format!(
            "letter {a} lies in the top stage {} of {stages}",
            stages - 1
        )));
    }
    let shift = base_rank as Letter;
    let mut out = Poly::zero();
    for (m, c) in p.iter() {
        let mut sign = Scalar::one();
        let factors: Vec<LyndonWord> = m
            .factors()
            .iter()
            .map(|w| {
                if w.degree() % 2 == 0 {
                    sign = -sign.clone();
                }
                w.relabel(|a| a + shift)
            })
            .collect();
        out.add_term(Monomial::from_factors(factors), c * sign);
    }
    Ok(out)
}

/// `H = C / 𝓘` with its certificates.
pub struct TruncatedHopf {
    staged: Staged,
    relations: Vec<Poly>,
    hopf: Arc<PresentedPoissonBialgebra>,
    /// Ideal rows re-eliminated with top-stage monomials ordered last.
    by_stage: SubspaceBasis<(bool, Monomial)>,
    certificates: Report,
}

impl std::fmt::Debug for TruncatedHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruncatedHopf({:?}, stages {})", self.hopf.quotient(), self.staged.stages)
    }
}

pub fn free_poisson_hopf(spec: &CoalgebraSpec, stages: usize, n: usize) -> Result<TruncatedHopf> {
    free_hopf_on_bialgebra(&induce_bialgebra(spec, n)?, stages)
}

pub fn free_hopf_on_bialgebra(base: &PresentedPoissonBialgebra, stages: usize) -> Result<TruncatedHopf> {
    let staged = staged_coproduct(base, stages)?;
    let relations = staged.hopf_ideal_generators()?;
    hopf_quotient(staged, relations)
}

/// Quotient of the staged bialgebra by its own relations and `relations`.
pub fn hopf_quotient(staged: Staged, relations: Vec<Poly>) -> Result<TruncatedHopf> {
    let ambient = staged.ambient().clone();
    let mut all = staged.object.relations().to_vec();
    all.extend(relations.iter().cloned());
    let quotient = Arc::new(TruncatedQuotient::new(ambient, all)?);
    let hopf = Arc::new(staged.object.with_quotient(quotient)?);
    let top = staged.stages - 1;
    let mut by_stage = SubspaceBasis::new();
    for row in hopf.quotient().ideal().rows() {
        by_stage.insert(&row.map_labels(|m| (touches_stage(&staged, m, top), m.clone())));
    }
    let mut h = TruncatedHopf {
        staged,
        relations,
        hopf,
        by_stage,
        certificates: Report::new(),
    };
    h.certificates = h.compute_certificates();
    Ok(h)
}

fn touches_stage(staged: &Staged, m: &Monomial, stage: usize) -> bool {
    m.letters().any(|a| staged.stage_of(a) >= stage)
}

impl TruncatedHopf {
    pub fn staged(&self) -> &Staged {
        &self.staged
    }

    pub fn stages(&self) -> usize {
        self.staged.stages
    }

    pub fn bialgebra(&self) -> &Arc<PresentedPoissonBialgebra> {
        &self.hopf
    }

    pub fn quotient(&self) -> &Arc<TruncatedQuotient> {
        self.hopf.quotient()
    }

    pub fn ambient(&self) -> &Ambient {
        self.staged.ambient()
    }

    pub fn hopf_relations(&self) -> &[Poly] {
        &self.relations
    }

    /// Fixpoint, coideal, counit, `S'`-stability, and relation membership.
    pub fn certificates(&self) -> &Report {
        &self.certificates
    }

    pub fn filtration_dims(&self) -> Vec<usize> {
        self.quotient().filtration_dims()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.quotient().normal_form(p)
    }

    /// `π q_n(x)` for base generator index `x`.
    pub fn stage_generator(&self, n: usize, x: usize) -> Poly {
        self.normal_form(&gen(self.staged.letter(n, x)))
    }

    /// A representative of `p + 𝓘` avoiding the top stage, if one exists.
    pub fn below_top(&self, p: &Poly) -> Option<Poly> {
        let top = self.staged.stages - 1;
        let lifted = p.map_labels(|m| (touches_stage(&self.staged, m, top), m.clone()));
        let reduced = self.by_stage.normal_form(&lifted);
        if reduced.labels().any(|(t, _)| *t) {
            return None;
        }
        Some(reduced.map_labels(|(_, m)| m.clone()))
    }

    /// Rows of the ideal lying entirely below the top stage.
    pub fn rows_below_top(&self) -> Vec<Poly> {
        self.by_stage
            .rows()
            .filter(|r| r.leading().is_some_and(|((t, _), _)| !t))
            .map(|r| r.map_labels(|(_, m)| m.clone()))
            .collect()
    }

    /// `S̄(π p) = π S'(p)`, defined when `p` has a representative below the
    /// top stage.
    pub fn antipode_of(&self, p: &Poly) -> Option<Poly> {
        let u = self.below_top(p)?;
        let s = self.staged.s_prime(&u).expect("representative lies below the top stage");
        Some(self.normal_form(&s))
    }

    /// `S̄` on every staged generator; `None` where undefined.
    pub fn antipode_table(&self) -> Vec<Option<Poly>> {
        (0..self.ambient().rank()).map(|a| self.antipode_of(&gen(a as Letter))).collect()
    }

    fn compute_certificates(&self) -> Report {
        let mut report = self.quotient().fixpoint_certificate();
        report.merge(self.hopf.coideal_certificate());
        let amb = self.ambient();
        for row in self.rows_below_top() {
            let s = self.staged.s_prime(&row).expect("row lies below the top stage");
            if !self.quotient().contains(&s) {
                report.push("s-prime-stability", vec![amb.render(&row)], amb.render(&self.normal_form(&s)));
            }
        }
        for r in &self.relations {
            if !self.quotient().contains(r) {
                report.push("relation-membership", vec![amb.render(r)], amb.render(&self.normal_form(r)));
            }
        }
        report.sorted()
    }
}

impl PoissonStructure for TruncatedHopf {
    fn names(&self) -> &[String] {
        self.ambient().names()
    }

    fn truncation(&self) -> usize {
        self.ambient().truncation()
    }

    fn basis(&self) -> Vec<Monomial> {
        self.hopf.basis()
    }

    fn reduce(&self, p: &Poly) -> Poly {
        self.normal_form(p)
    }

    fn product(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::product(&*self.hopf, a, b)
    }

    fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::bracket(&*self.hopf, a, b)
    }
}

impl CoalgebraStructure for TruncatedHopf {
    fn coproduct(&self, p: &Poly) -> Tensor2 {
        self.hopf.coproduct(p)
    }

    fn counit(&self, p: &Poly) -> Scalar {
        self.hopf.counit(p)
    }
}

impl AntipodeStructure for TruncatedHopf {
    fn antipode(&self, p: &Poly) -> Option<Poly> {
        self.antipode_of(p)
    }
}

/// Convolution residuals `(S ∗ Id − uε)(x)` and `(Id ∗ S − uε)(x)` for a
/// structure, skipping terms outside the antipode's domain.
fn convolution_residuals<S: AntipodeStructure + CoalgebraStructure + ?Sized>(
    s: &S,
    x: &Poly,
    witness: &str,
    report: &mut Report,
) -> bool {
    let delta = s.coproduct(x);
    let eps = constant(s.counit(x));
    let mut left = -&eps;
    let mut right = -&eps;
    for ((a, b), c) in delta.iter() {
        let (pa, pb) = (Poly::basis(a.clone()), Poly::basis(b.clone()));
        let (Some(sa), Some(sb)) = (s.antipode(&pa), s.antipode(&pb)) else {
            return false;
        };
        left.add_scaled(&s.product(&sa, &pb), c);
        right.add_scaled(&s.product(&pa, &sb), c);
    }
    let (left, right) = (s.reduce(&left), s.reduce(&right));
    if !left.is_zero() {
        report.push("antipode-left-convolution", vec![witness.to_string()], s.show(&left));
    }
    if !right.is_zero() {
        report.push("antipode-right-convolution", vec![witness.to_string()], s.show(&right));
    }
    true
}

/// Convolution identities on `π q_n(x)` for stages `n < M − depth`, shifted
/// relations `S'^j(r)` for `j < depth`, the anti-morphism laws of `S̄`, and
/// `S̄(π{a, b}) = π{S' b, S' a}` on generator pairs below the top stage.
pub fn verify_antipode(h: &TruncatedHopf, depth: usize) -> Result<Report> {
    let m = h.stages();
    if depth == 0 || depth > m - 1 {
        return Err(Error::StageOverflow(format!("depth {depth} outside 1..={}", m - 1)));
    }
    let staged = h.staged();
    let amb = h.ambient();
    let mut report = Report::new();
    for n in 0..m - depth {
        for x in 0..staged.base_rank() {
            let a = staged.letter(n, x);
            let witness = amb.names()[a as usize].clone();
            if !convolution_residuals(h, &gen(a), &witness, &mut report) {
                report.push("antipode-domain", vec![witness], "outside the stage budget".into());
            }
        }
    }
    for r in h.hopf_relations() {
        let mut shifted = r.clone();
        for j in 1..depth {
            match staged.s_prime(&shifted) {
                Ok(s) => shifted = s,
                Err(_) => break,
            }
            if !h.quotient().contains(&shifted) {
                report.push(
                    "shifted-relation",
                    vec![amb.render(r), format!("S'^{j}")],
                    amb.render(&h.normal_form(&shifted)),
                );
            }
        }
    }
    report.merge(check_antipode_antimorphism(h, amb.truncation()));
    let below: Vec<Letter> = (0..amb.rank() as Letter)
        .filter(|&a| staged.stage_of(a) + 1 < m)
        .collect();
    for (i, &a) in below.iter().enumerate() {
        for &b in &below[i..] {
            if amb.truncation() < 2 {
                break;
            }
            let br = crate::poisson::bracket(&gen(a), &gen(b), amb.truncation()).0;
            let lhs = h.antipode_of(&br);
            let (sa, sb) = (staged.s_prime(&gen(a))?, staged.s_prime(&gen(b))?);
            let rhs = PoissonStructure::bracket(h, &sb, &sa);
            if lhs.as_ref() != Some(&rhs) {
                let residual = match lhs {
                    Some(l) => amb.render(&(&l - &rhs)),
                    None => "undefined".into(),
                };
                report.push(
                    "antipode-generator-bracket",
                    vec![amb.names()[a as usize].clone(), amb.names()[b as usize].clone()],
                    residual,
                );
            }
        }
    }
    Ok(report.sorted())
}

/// Partial antipode given on generators and extended as an algebra morphism
/// and bracket anti-morphism, reducing in `q` after each step.
pub struct ExtendedAntipode<'a> {
    quotient: &'a TruncatedQuotient,
    table: &'a [Option<Poly>],
    words: HashMap<LyndonWord, Option<Poly>>,
}

impl<'a> ExtendedAntipode<'a> {
    pub fn new(quotient: &'a TruncatedQuotient, table: &'a [Option<Poly>]) -> Self {
        ExtendedAntipode {
            quotient,
            table,
            words: HashMap::new(),
        }
    }

    fn word(&mut self, w: &LyndonWord) -> Option<Poly> {
        if let Some(hit) = self.words.get(w) {
            return hit.clone();
        }
        let out = match w.standard_factorization() {
            None => self.table[w.letters()[0] as usize].clone(),
            Some((u, v)) => {
                let su = self.word(&u);
                let sv = self.word(&v);
                match (su, sv) {
                    (Some(su), Some(sv)) => Some(PoissonStructure::bracket(self.quotient, &sv, &su)),
                    _ => None,
                }
            }
        };
        self.words.insert(w.clone(), out.clone());
        out
    }

    pub fn apply(&mut self, p: &Poly) -> Option<Poly> {
        let mut out = Poly::zero();
        for (m, c) in p.iter() {
            let mut acc = self.quotient.normal_form(&unit());
            for w in m.factors() {
                let sw = self.word(w)?;
                acc = PoissonStructure::product(self.quotient, &acc, &sw);
            }
            out.add_scaled(&acc, c);
        }
        Some(self.quotient.normal_form(&out))
    }
}

pub struct CoproductAntipode {
    pub coproduct: BialgebraCoproduct,
    /// `S(q_i x) = q_i(S_i x)` per coproduct generator.
    pub table: Vec<Option<Poly>>,
    pub report: Report,
}

impl CoproductAntipode {
    pub fn apply(&self, p: &Poly) -> Option<Poly> {
        ExtendedAntipode::new(self.coproduct.object.quotient(), &self.table).apply(p)
    }
}

struct WithAntipode<'a> {
    object: &'a PresentedPoissonBialgebra,
    table: &'a [Option<Poly>],
}

impl PoissonStructure for WithAntipode<'_> {
    fn names(&self) -> &[String] {
        self.object.names()
    }
    fn truncation(&self) -> usize {
        self.object.truncation()
    }
    fn basis(&self) -> Vec<Monomial> {
        self.object.basis()
    }
    fn reduce(&self, p: &Poly) -> Poly {
        self.object.reduce(p)
    }
    fn product(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::product(self.object, a, b)
    }
    fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonStructure::bracket(self.object, a, b)
    }
}

impl CoalgebraStructure for WithAntipode<'_> {
    fn coproduct(&self, p: &Poly) -> Tensor2 {
        self.object.coproduct(p)
    }
    fn counit(&self, p: &Poly) -> Scalar {
        self.object.counit(p)
    }
}

impl AntipodeStructure for WithAntipode<'_> {
    fn antipode(&self, p: &Poly) -> Option<Poly> {
        ExtendedAntipode::new(self.object.quotient(), self.table).apply(p)
    }
}

/// An operand of [`hopf_coproduct_antipode`]: a bialgebra with a partial
/// antipode table on its generators, or none.
pub type HopfOperand<'a> = (&'a PresentedPoissonBialgebra, Option<Vec<Option<Poly>>>);

/// Transports the antipodes of the operands along the coproduct injections
/// and checks the convolution identities on every generator in the domain.
pub fn hopf_coproduct_antipode(operands: &[HopfOperand<'_>]) -> Result<CoproductAntipode> {
    let n = operands.first().map(|(b, _)| b.ambient().truncation()).unwrap_or(0);
    let mut tables = Vec::new();
    for (i, (_, t)) in operands.iter().enumerate() {
        tables.push(t.as_ref().ok_or(Error::MissingAntipode(i))?);
    }
    let bialgebras: Vec<&PresentedPoissonBialgebra> = operands.iter().map(|(b, _)| *b).collect();
    let coproduct = bialgebra_coproduct(&bialgebras, n)?;
    let mut table = Vec::new();
    for (q, t) in coproduct.injections.iter().zip(&tables) {
        for s in t.iter() {
            table.push(s.as_ref().map(|p| q.apply(p).0));
        }
    }
    let object = coproduct.object.clone();
    let structure = WithAntipode {
        object: &object,
        table: &table,
    };
    let mut report = Report::new();
    for a in 0..object.ambient().rank() {
        if table[a].is_some() {
            convolution_residuals(&structure, &gen(a as Letter), &object.ambient().names()[a], &mut report);
        }
    }
    report.merge(check_antipode_antimorphism(&structure, n));
    Ok(CoproductAntipode {
        coproduct,
        table,
        report: report.sorted(),
    })
}
