//! Truncated Poisson ideals, quotients, and (co)limits of Poisson algebras.
//!
//! Every object is a presentation `P(V)/I` cut off at degree `N`. The ideal is
//! computed by linear-algebra saturation: the least subspace containing the
//! generators and closed under multiplication by Lyndon words and bracketing
//! with generators, staying within degree `N`. Products by arbitrary monomials
//! and brackets by arbitrary elements follow from these two by the Leibniz
//! rule and Jacobi, with every intermediate degree bounded by the final one.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::sync::Arc;


use crate::error::{Error, Result};
use crate::lie::{Letter, LyndonWord};
use crate::linear::{kernel, SubspaceBasis};
use crate::poisson::{bracket, filtration_degree, gen, multiply, relabel, unit, Ambient, Monomial, PoissElt, Poly};
use crate::verify::{PoissonStructure, Report};

/// Degree `<= N` part of the Poisson ideal generated by `generators`.
pub fn ideal_saturate(ambient: &Ambient, generators: &[Poly]) -> SubspaceBasis<Monomial> {
    let n = ambient.truncation();
    let mut ideal = SubspaceBasis::new();
    // residues inserted so far have pairwise distinct leading monomials, so
    // closing each residue within its own degree closes the whole span
    let mut residues: Vec<Poly> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let push = |ideal: &mut SubspaceBasis<Monomial>, residues: &mut Vec<Poly>, queue: &mut BinaryHeap<_>, v: &Poly| {
        if let Some(r) = ideal.insert(v) {
            queue.push(Reverse((filtration_degree(&r), residues.len())));
            residues.push(r);
        }
    };
    for g in generators {
        push(&mut ideal, &mut residues, &mut queue, g);
    }
    while let Some(Reverse((d, idx))) = queue.pop() {
        let r = residues[idx].clone();
        let words: Vec<LyndonWord> = ambient.lyndon_up_to(n - d).cloned().collect();
        for w in words {
            let (v, _) = multiply(&Poly::basis(Monomial::lyndon(w)), &r, n);
            push(&mut ideal, &mut residues, &mut queue, &v);
        }
        if d < n {
            for a in 0..ambient.rank() {
                let (v, _) = bracket(&gen(a as Letter), &r, n);
                push(&mut ideal, &mut residues, &mut queue, &v);
            }
        }
    }
    ideal
}

/// Independent re-check that `ideal` is closed under the generating
/// operations within the truncation.
pub fn fixpoint_certificate(ambient: &Ambient, ideal: &SubspaceBasis<Monomial>) -> Report {
    let n = ambient.truncation();
    let mut report = Report::new();
    for row in ideal.rows() {
        let d = filtration_degree(row);
        for w in ambient.lyndon_up_to(n - d) {
            let (v, _) = multiply(&Poly::basis(Monomial::lyndon(w.clone())), row, n);
            if !ideal.member(&v) {
                report.push(
                    "ideal-product-closure",
                    vec![ambient.render(&Poly::basis(Monomial::lyndon(w.clone()))), ambient.render(row)],
                    ambient.render(&ideal.normal_form(&v)),
                );
            }
        }
        if d < n {
            for a in 0..ambient.rank() {
                let (v, _) = bracket(&gen(a as Letter), row, n);
                if !ideal.member(&v) {
                    report.push(
                        "ideal-bracket-closure",
                        vec![ambient.names()[a].clone(), ambient.render(row)],
                        ambient.render(&ideal.normal_form(&v)),
                    );
                }
            }
        }
    }
    report.sorted()
}

/// `P(V)^{<= N} / I^{<= N}` with its defining relations.
#[derive(Clone)]
pub struct TruncatedQuotient {
    ambient: Ambient,
    generators: Vec<Poly>,
    ideal: SubspaceBasis<Monomial>,
}

impl std::fmt::Debug for TruncatedQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}/({} relations, rank {})", self.ambient, self.generators.len(), self.ideal.rank())
    }
}

impl TruncatedQuotient {
    pub fn free(ambient: Ambient) -> Self {
        TruncatedQuotient {
            ambient,
            generators: Vec::new(),
            ideal: SubspaceBasis::new(),
        }
    }

    /// Quotient by the Poisson ideal generated by `generators`, which must lie
    /// in degrees `<= N`.
    pub fn new(ambient: Ambient, generators: Vec<Poly>) -> Result<Self> {
        let n = ambient.truncation();
        for g in &generators {
            if filtration_degree(g) > n {
                return Err(Error::Validation(format!(
                    "relation {} exceeds truncation degree {n}",
                    ambient.render(g)
                )));
            }
            if let Some(bad) = g.labels().flat_map(Monomial::letters).find(|&a| a as usize >= ambient.rank()) {
                return Err(Error::AlphabetMismatch(format!("letter {bad} outside {:?}", ambient)));
            }
        }
        let ideal = ideal_saturate(&ambient, &generators);
        Ok(TruncatedQuotient {
            ambient,
            generators,
            ideal,
        })
    }

    pub fn from_elements(ambient: Ambient, generators: &[PoissElt]) -> Result<Self> {
        for g in generators {
            if g.ambient() != &ambient {
                return Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", g.ambient(), ambient)));
            }
        }
        Self::new(ambient, generators.iter().map(|g| g.terms().clone()).collect())
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn ideal(&self) -> &SubspaceBasis<Monomial> {
        &self.ideal
    }

    /// `1` lies in the ideal: the quotient is the zero algebra.
    pub fn is_degenerate(&self) -> bool {
        self.ideal.member(&unit())
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.ideal.normal_form(p)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.ideal.member(p)
    }

    /// Monomials that are not pivots of the ideal: a basis of the quotient.
    pub fn basis_monomials(&self) -> Vec<Monomial> {
        self.ambient
            .monomials_up_to(self.ambient.truncation())
            .filter(|m| !self.ideal.is_pivot(m))
            .cloned()
            .collect()
    }

    /// Dimension of the image of `P^{<= d}` for `d = 0..=N`.
    pub fn filtration_dims(&self) -> Vec<usize> {
        let graded = self.graded_dims();
        graded
            .iter()
            .scan(0, |acc, d| {
                *acc += d;
                Some(*acc)
            })
            .collect()
    }

    /// Successive differences of [`Self::filtration_dims`]; the honest graded
    /// dimensions when the relations are homogeneous.
    pub fn graded_dims(&self) -> Vec<usize> {
        let n = self.ambient.truncation();
        let mut dims: Vec<usize> = self.ambient.monomials().iter().map(Vec::len).collect();
        for p in self.ideal.pivots() {
            dims[p.degree()] -= 1;
        }
        dims.truncate(n + 1);
        dims
    }

    pub fn fixpoint_certificate(&self) -> Report {
        fixpoint_certificate(&self.ambient, &self.ideal)
    }

    /// Product then normal form.
    pub fn product(&self, a: &PoissElt, b: &PoissElt) -> Result<PoissElt> {
        let p = a.product(b)?;
        let lossy = p.lossy();
        Ok(self.wrap(self.normal_form(p.terms()), lossy))
    }

    /// Bracket then normal form.
    pub fn bracket(&self, a: &PoissElt, b: &PoissElt) -> Result<PoissElt> {
        let p = a.bracket(b)?;
        let lossy = p.lossy();
        Ok(self.wrap(self.normal_form(p.terms()), lossy))
    }

    pub fn reduce(&self, a: &PoissElt) -> PoissElt {
        self.wrap(self.normal_form(a.terms()), a.lossy())
    }

    fn wrap(&self, p: Poly, lossy: bool) -> PoissElt {
        self.ambient.element(p).flagged(lossy)
    }

    pub fn unit(&self) -> Poly {
        self.normal_form(&unit())
    }
}

impl PoissonStructure for TruncatedQuotient {
    fn names(&self) -> &[String] {
        self.ambient.names()
    }

    fn truncation(&self) -> usize {
        self.ambient.truncation()
    }

    fn basis(&self) -> Vec<Monomial> {
        self.basis_monomials()
    }

    fn reduce(&self, p: &Poly) -> Poly {
        self.normal_form(p)
    }

    fn product(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&multiply(a, b, self.ambient.truncation()).0)
    }

    fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&bracket(a, b, self.ambient.truncation()).0)
    }
}

/// `P(V)/I^{<= N}` from a list of defining relations.
pub fn quotient(ambient: &Ambient, generators: Vec<Poly>) -> Result<TruncatedQuotient> {
    TruncatedQuotient::new(ambient.clone(), generators)
}

/// A Poisson algebra map given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct MorphismTable {
    source: Arc<TruncatedQuotient>,
    target: Arc<TruncatedQuotient>,
    images: Vec<Poly>,
}

impl MorphismTable {
    pub fn new(source: Arc<TruncatedQuotient>, target: Arc<TruncatedQuotient>, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.ambient().rank() {
            return Err(Error::IllDefinedMorphism(format!(
                "{} images for {} source generators",
                images.len(),
                source.ambient().rank()
            )));
        }
        let n = target.ambient().truncation();
        for im in &images {
            if filtration_degree(im) > n
                || im.labels().flat_map(Monomial::letters).any(|a| a as usize >= target.ambient().rank())
            {
                return Err(Error::IllDefinedMorphism(format!(
                    "image {} does not live in {:?}",
                    target.ambient().render(im),
                    target.ambient()
                )));
            }
        }
        let images = images.iter().map(|p| target.normal_form(p)).collect();
        Ok(MorphismTable { source, target, images })
    }

    /// Images given as expressions already evaluated in the target ambient.
    pub fn from_elements(
        source: Arc<TruncatedQuotient>,
        target: Arc<TruncatedQuotient>,
        images: &[PoissElt],
    ) -> Result<Self> {
        Self::new(source, target, images.iter().map(|e| e.terms().clone()).collect())
    }

    pub fn identity(q: Arc<TruncatedQuotient>) -> Self {
        let images = (0..q.ambient().rank()).map(|a| gen(a as Letter)).collect();
        Self::new(q.clone(), q, images).expect("identity table")
    }

    pub fn source(&self) -> &Arc<TruncatedQuotient> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TruncatedQuotient> {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// Image of a source polynomial, in target normal form. The flag reports
    /// truncation loss in the target.
    pub fn apply(&self, p: &Poly) -> (Poly, bool) {
        let mut evaluator = Evaluator::new(&self.target, &self.images);
        evaluator.apply(p)
    }

    pub fn apply_element(&self, e: &PoissElt) -> Result<PoissElt> {
        if e.ambient() != self.source.ambient() {
            return Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", e.ambient(), self.source.ambient())));
        }
        let (p, lossy) = self.apply(e.terms());
        Ok(self.target.ambient().element(p).flagged(lossy || e.lossy()))
    }

    /// Every source ideal row must map into the target ideal.
    pub fn well_definedness(&self) -> Report {
        let mut report = Report::new();
        let mut evaluator = Evaluator::new(&self.target, &self.images);
        let source_amb = self.source.ambient();
        let rows = self.source.generators().iter().chain(self.source.ideal().rows());
        for row in rows {
            let (img, lossy) = evaluator.apply(row);
            if lossy {
                report.push(
                    "morphism-truncation",
                    vec![source_amb.render(row)],
                    "image exceeds target truncation".into(),
                );
            } else if !img.is_zero() {
                report.push(
                    "morphism-well-defined",
                    vec![source_amb.render(row)],
                    self.target.ambient().render(&img),
                );
            }
        }
        report.sorted()
    }

    pub fn is_well_defined(&self) -> bool {
        self.well_definedness().is_clean()
    }

    /// `next ∘ self`
    pub fn then(&self, next: &MorphismTable) -> Result<MorphismTable> {
        if next.source.ambient() != self.target.ambient() {
            return Err(Error::AlphabetMismatch("composition of incompatible tables".into()));
        }
        let mut evaluator = Evaluator::new(&next.target, &next.images);
        let images = self.images.iter().map(|p| evaluator.apply(p).0).collect();
        MorphismTable::new(self.source.clone(), next.target.clone(), images)
    }

    /// Equal images of every source generator, in target normal form.
    pub fn agrees_on_generators(&self, other: &MorphismTable) -> bool {
        self.target.ambient() == other.target.ambient() && self.images == other.images
    }

    /// Compares the two maps on the whole quotient basis of the source.
    pub fn agrees_on_basis(&self, other: &MorphismTable) -> bool {
        let mut e1 = Evaluator::new(&self.target, &self.images);
        let mut e2 = Evaluator::new(&other.target, &other.images);
        self.source
            .basis_monomials()
            .iter()
            .all(|m| e1.apply(&Poly::basis(m.clone())) == e2.apply(&Poly::basis(m.clone())))
    }
}

/// Extends generator images to a Poisson algebra map, reducing after every
/// operation in the target quotient.
pub(crate) struct Evaluator<'a> {
    target: &'a TruncatedQuotient,
    images: &'a [Poly],
    lyndon: HashMap<LyndonWord, (Poly, bool)>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(target: &'a TruncatedQuotient, images: &'a [Poly]) -> Self {
        Evaluator {
            target,
            images,
            lyndon: HashMap::new(),
        }
    }

    fn word(&mut self, w: &LyndonWord) -> (Poly, bool) {
        if let Some(hit) = self.lyndon.get(w) {
            return hit.clone();
        }
        let n = self.target.ambient().truncation();
        let out = match w.standard_factorization() {
            None => (self.images[w.letters()[0] as usize].clone(), false),
            Some((u, v)) => {
                let (pu, lu) = self.word(&u);
                let (pv, lv) = self.word(&v);
                let (b, lb) = bracket(&pu, &pv, n);
                (self.target.normal_form(&b), lu || lv || lb)
            }
        };
        self.lyndon.insert(w.clone(), out.clone());
        out
    }

    pub(crate) fn monomial(&mut self, m: &Monomial) -> (Poly, bool) {
        let n = self.target.ambient().truncation();
        let mut acc = self.target.normal_form(&unit());
        let mut lossy = false;
        for w in m.factors() {
            let (pw, lw) = self.word(w);
            let (prod, lp) = multiply(&acc, &pw, n);
            acc = self.target.normal_form(&prod);
            lossy |= lw || lp;
        }
        (acc, lossy)
    }

    pub(crate) fn apply(&mut self, p: &Poly) -> (Poly, bool) {
        let mut out = Poly::zero();
        let mut lossy = false;
        for (m, c) in p.iter() {
            let (pm, lm) = self.monomial(m);
            out.add_scaled(&pm, c);
            lossy |= lm;
        }
        (out, lossy)
    }
}

/// Generator names for a coproduct: kept when distinct across operands,
/// otherwise every name of operand `l` is suffixed with `_l`.
pub(crate) fn coproduct_names(lists: &[&[String]], force_suffix: bool) -> Vec<String> {
    let all: Vec<&String> = lists.iter().flat_map(|l| l.iter()).collect();
    let distinct = all.iter().enumerate().all(|(i, n)| !all[..i].contains(n));
    if distinct && !force_suffix {
        return all.into_iter().cloned().collect();
    }
    lists
        .iter()
        .enumerate()
        .flat_map(|(l, names)| names.iter().map(move |n| format!("{n}_{l}")))
        .collect()
}

pub struct Coproduct {
    pub object: Arc<TruncatedQuotient>,
    pub injections: Vec<MorphismTable>,
}

/// `P(⊕ V_l) / (∪ lifted I_l)` with the generator-inclusion tables `q_l`.
pub fn poisson_coproduct(operands: &[Arc<TruncatedQuotient>], n: usize) -> Result<Coproduct> {
    for op in operands {
        if op.ambient().truncation() != n {
            return Err(Error::TruncationMismatch(op.ambient().truncation(), n));
        }
    }
    let names = coproduct_names(&operands.iter().map(|o| o.ambient().names()).collect::<Vec<_>>(), false);
    let ambient = Ambient::new(names, n)?;
    let mut offsets = Vec::with_capacity(operands.len());
    let mut relations = Vec::new();
    let mut offset = 0usize;
    for op in operands {
        offsets.push(offset);
        let shift = offset as Letter;
        relations.extend(op.generators().iter().map(|r| relabel(r, move |a| a + shift)));
        offset += op.ambient().rank();
    }
    let object = Arc::new(TruncatedQuotient::new(ambient, relations)?);
    let injections = operands
        .iter()
        .zip(&offsets)
        .map(|(op, &off)| {
            let images = (0..op.ambient().rank()).map(|a| gen((a + off) as Letter)).collect();
            MorphismTable::new(op.clone(), object.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coproduct { object, injections })
}

/// The induced map `u` out of a coproduct with `u ∘ q_l = u_l`, together with
/// a report of well-definedness and of the factorization identities.
pub fn factorize_coproduct(coproduct: &Coproduct, maps: &[MorphismTable]) -> Result<(MorphismTable, Report)> {
    if maps.len() != coproduct.injections.len() {
        return Err(Error::IllDefinedMorphism(format!(
            "{} maps for {} operands",
            maps.len(),
            coproduct.injections.len()
        )));
    }
    let target = match maps.first() {
        Some(m) => m.target().clone(),
        None => return Err(Error::IllDefinedMorphism("empty family needs an explicit target".into())),
    };
    let mut images = Vec::new();
    for (m, q) in maps.iter().zip(&coproduct.injections) {
        if m.source().ambient() != q.source().ambient() {
            return Err(Error::AlphabetMismatch("map source differs from coproduct operand".into()));
        }
        if m.target().ambient() != target.ambient() {
            return Err(Error::AlphabetMismatch("maps have different targets".into()));
        }
        images.extend(m.images().iter().cloned());
    }
    let u = MorphismTable::new(coproduct.object.clone(), target, images)?;
    let mut report = u.well_definedness();
    for (l, (m, q)) in maps.iter().zip(&coproduct.injections).enumerate() {
        let composite = q.then(&u)?;
        if !composite.agrees_on_basis(m) {
            report.push("coproduct-factorization", vec![format!("operand {l}")], "u ∘ q_l ≠ u_l".into());
        }
    }
    Ok((u, report.sorted()))
}

pub struct Coequalizer {
    pub object: Arc<TruncatedQuotient>,
    pub projection: MorphismTable,
}

/// Target modulo the Poisson ideal generated by `{f(x) - g(x)}`.
pub fn poisson_coequalizer(f: &MorphismTable, g: &MorphismTable) -> Result<Coequalizer> {
    if f.source().ambient() != g.source().ambient() || f.target().ambient() != g.target().ambient() {
        return Err(Error::IllDefinedMorphism("f and g must share source and target".into()));
    }
    for (name, m) in [("f", f), ("g", g)] {
        let report = m.well_definedness();
        if !report.is_clean() {
            return Err(Error::IllDefinedMorphism(format!("{name}: {}", report.to_text().trim_end())));
        }
    }
    let target = f.target();
    let mut relations: Vec<Poly> = target.generators().to_vec();
    relations.extend(f.images().iter().zip(g.images()).map(|(a, b)| a - b).filter(|d| !d.is_zero()));
    let object = Arc::new(TruncatedQuotient::new(target.ambient().clone(), relations)?);
    let images = (0..target.ambient().rank()).map(|a| gen(a as Letter)).collect();
    let projection = MorphismTable::new(target.clone(), object.clone(), images)?;
    Ok(Coequalizer { object, projection })
}

/// Direct product with componentwise operations.
pub struct PoissonProduct {
    pub left: Arc<TruncatedQuotient>,
    pub right: Arc<TruncatedQuotient>,
}

pub type ProductElt = (Poly, Poly);

pub fn poisson_product(left: Arc<TruncatedQuotient>, right: Arc<TruncatedQuotient>) -> Result<PoissonProduct> {
    if left.ambient().truncation() != right.ambient().truncation() {
        return Err(Error::TruncationMismatch(left.ambient().truncation(), right.ambient().truncation()));
    }
    Ok(PoissonProduct { left, right })
}

impl PoissonProduct {
    pub fn graded_dims(&self) -> Vec<usize> {
        self.left
            .graded_dims()
            .iter()
            .zip(self.right.graded_dims())
            .map(|(a, b)| a + b)
            .collect()
    }

    pub fn unit(&self) -> ProductElt {
        (self.left.unit(), self.right.unit())
    }

    pub fn pair(&self, a: &Poly, b: &Poly) -> ProductElt {
        (self.left.normal_form(a), self.right.normal_form(b))
    }

    pub fn product(&self, x: &ProductElt, y: &ProductElt) -> ProductElt {
        (
            PoissonStructure::product(&*self.left, &x.0, &y.0),
            PoissonStructure::product(&*self.right, &x.1, &y.1),
        )
    }

    pub fn bracket(&self, x: &ProductElt, y: &ProductElt) -> ProductElt {
        (
            PoissonStructure::bracket(&*self.left, &x.0, &y.0),
            PoissonStructure::bracket(&*self.right, &x.1, &y.1),
        )
    }

    pub fn project_left(&self, x: &ProductElt) -> Poly {
        x.0.clone()
    }

    pub fn project_right(&self, x: &ProductElt) -> Poly {
        x.1.clone()
    }
}

/// The subalgebra of the source on which two maps agree.
pub struct Equalizer {
    pub source: Arc<TruncatedQuotient>,
    pub kernel: SubspaceBasis<Monomial>,
    /// Closure of the kernel under product and bracket (empty when closed).
    pub closure: Report,
}

impl Equalizer {
    pub fn contains(&self, p: &Poly) -> bool {
        self.kernel.member(&self.source.normal_form(p))
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.source.ambient().truncation() + 1];
        for p in self.kernel.pivots() {
            dims[p.degree()] += 1;
        }
        dims
    }

    pub fn dimension(&self) -> usize {
        self.kernel.rank()
    }
}

pub fn poisson_equalizer(f: &MorphismTable, g: &MorphismTable) -> Result<Equalizer> {
    if f.source().ambient() != g.source().ambient() || f.target().ambient() != g.target().ambient() {
        return Err(Error::IllDefinedMorphism("f and g must share source and target".into()));
    }
    for (name, m) in [("f", f), ("g", g)] {
        let report = m.well_definedness();
        if !report.is_clean() {
            return Err(Error::IllDefinedMorphism(format!("{name}: {}", report.to_text().trim_end())));
        }
    }
    let source = f.source().clone();
    let mut ef = Evaluator::new(f.target(), f.images());
    let mut eg = Evaluator::new(g.target(), g.images());
    let columns: Vec<(Monomial, Poly)> = source
        .basis_monomials()
        .into_iter()
        .map(|m| {
            let p = Poly::basis(m.clone());
            let diff = &ef.apply(&p).0 - &eg.apply(&p).0;
            (m, diff)
        })
        .collect();
    let mut kernel_basis = SubspaceBasis::new();
    kernel_basis.extend(kernel(&columns).iter());
    let n = source.ambient().truncation();
    let mut closure = Report::new();
    let rows: Vec<Poly> = kernel_basis.rows().cloned().collect();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i..] {
            if filtration_degree(a) + filtration_degree(b) > n {
                continue;
            }
            for (law, v) in [
                ("equalizer-product-closure", PoissonStructure::product(&*source, a, b)),
                ("equalizer-bracket-closure", PoissonStructure::bracket(&*source, a, b)),
            ] {
                let diff = &ef.apply(&v).0 - &eg.apply(&v).0;
                if !diff.is_zero() {
                    let amb = source.ambient();
                    closure.push(law, vec![amb.render(a), amb.render(b)], f.target().ambient().render(&diff));
                }
            }
        }
    }
    Ok(Equalizer {
        source,
        kernel: kernel_basis,
        closure: closure.sorted(),
    })
}
