//! Finite-dimensional coalgebras by structure constants, their JSON format,
//! builtin families, and two closed-form families of target Poisson Hopf
//! algebras.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{format_scalar, int, parse_scalar, Scalar, SparseVec};
use crate::poisson::is_identifier;
use crate::verify::Report;

/// `(left, right, coefficient)` term of `Δ(c)`, by basis index.
pub type DeltaTerm = (usize, usize, Scalar);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraSpec {
    basis: Vec<String>,
    delta: Vec<Vec<DeltaTerm>>,
    epsilon: Vec<Scalar>,
}

impl CoalgebraSpec {
    /// Structural checks only: names, references, and table shapes. The
    /// coalgebra laws are checked by [`validate_coalgebra`].
    pub fn new(basis: Vec<String>, delta: Vec<Vec<DeltaTerm>>, epsilon: Vec<Scalar>) -> Result<Self> {
        for (i, name) in basis.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Validation(format!("basis name `{name}` is not an identifier")));
            }
            if basis[..i].contains(name) {
                return Err(Error::Validation(format!("duplicate basis name `{name}`")));
            }
        }
        if delta.len() != basis.len() || epsilon.len() != basis.len() {
            return Err(Error::Validation("delta and epsilon must cover every basis element".into()));
        }
        for terms in &delta {
            if let Some((i, j, _)) = terms.iter().find(|(i, j, _)| *i >= basis.len() || *j >= basis.len()) {
                return Err(Error::Validation(format!("delta references unknown index ({i}, {j})")));
            }
        }
        Ok(CoalgebraSpec { basis, delta, epsilon })
    }

    /// Builds a spec from name-keyed tables, rejecting unknown or missing names.
    pub fn from_named(
        basis: Vec<String>,
        delta: &BTreeMap<String, Vec<(String, String, Scalar)>>,
        epsilon: &BTreeMap<String, Scalar>,
    ) -> Result<Self> {
        let index = |name: &str| {
            basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::Validation(format!("unknown basis name `{name}`")))
        };
        for key in delta.keys().chain(epsilon.keys()) {
            index(key)?;
        }
        let mut d = Vec::with_capacity(basis.len());
        let mut e = Vec::with_capacity(basis.len());
        for name in &basis {
            let terms = delta
                .get(name)
                .ok_or_else(|| Error::Validation(format!("missing delta for `{name}`")))?;
            d.push(
                terms
                    .iter()
                    .map(|(a, b, c)| Ok((index(a)?, index(b)?, c.clone())))
                    .collect::<Result<Vec<_>>>()?,
            );
            e.push(
                epsilon
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::Validation(format!("missing epsilon for `{name}`")))?,
            );
        }
        CoalgebraSpec::new(basis, d, e)
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn delta(&self, i: usize) -> &[DeltaTerm] {
        &self.delta[i]
    }

    pub fn epsilon(&self, i: usize) -> &Scalar {
        &self.epsilon[i]
    }

    /// `Δ(c_i)` with repeated index pairs combined.
    pub fn delta_vec(&self, i: usize) -> SparseVec<(usize, usize)> {
        self.delta[i].iter().map(|(a, b, c)| ((*a, *b), c.clone())).collect()
    }

    /// Same coalgebra with the flipped coproduct.
    pub fn cop(&self) -> Self {
        let delta = self
            .delta
            .iter()
            .map(|terms| terms.iter().map(|(a, b, c)| (*b, *a, c.clone())).collect())
            .collect();
        CoalgebraSpec {
            basis: self.basis.clone(),
            delta,
            epsilon: self.epsilon.clone(),
        }
    }

    /// Direct sum; names are suffixed with `_0` / `_1` when they collide.
    pub fn direct_sum(&self, other: &CoalgebraSpec) -> Self {
        let names = crate::colimits::coproduct_names(&[&self.basis, &other.basis], false);
        let off = self.dim();
        let mut delta = self.delta.clone();
        delta.extend(
            other
                .delta
                .iter()
                .map(|t| t.iter().map(|(a, b, c)| (a + off, b + off, c.clone())).collect()),
        );
        let mut epsilon = self.epsilon.clone();
        epsilon.extend(other.epsilon.iter().cloned());
        CoalgebraSpec {
            basis: names,
            delta,
            epsilon,
        }
    }

    pub fn to_json(&self) -> String {
        let file = SpecFile {
            basis: self.basis.clone(),
            delta: (0..self.dim())
                .map(|i| {
                    let terms = self.delta[i]
                        .iter()
                        .map(|(a, b, c)| (self.basis[*a].clone(), self.basis[*b].clone(), ScalarText(c.clone())))
                        .collect();
                    (self.basis[i].clone(), terms)
                })
                .collect(),
            epsilon: (0..self.dim())
                .map(|i| (self.basis[i].clone(), ScalarText(self.epsilon[i].clone())))
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("spec serializes");
        out.push('\n');
        out
    }
}

impl fmt::Display for CoalgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            let terms: Vec<String> = self.delta[i]
                .iter()
                .map(|(a, b, c)| format!("{}*{}⊗{}", format_scalar(c), self.basis[*a], self.basis[*b]))
                .collect();
            writeln!(
                f,
                "Δ({}) = {}; ε = {}",
                self.basis[i],
                terms.join(" + "),
                format_scalar(&self.epsilon[i])
            )?;
        }
        Ok(())
    }
}

/// Coassociativity and both counit laws on every basis element.
pub fn validate_coalgebra(spec: &CoalgebraSpec) -> Report {
    let mut report = Report::new();
    for i in 0..spec.dim() {
        let d = spec.delta_vec(i);
        let mut residual: SparseVec<(usize, usize, usize)> = SparseVec::zero();
        for ((a, b), c) in d.iter() {
            for ((x, y), e) in spec.delta_vec(*a).iter() {
                residual.add_term((*x, *y, *b), c * e);
            }
            for ((x, y), e) in spec.delta_vec(*b).iter() {
                residual.add_term((*a, *x, *y), -(c * e));
            }
        }
        if !residual.is_zero() {
            let terms: Vec<String> = residual
                .iter()
                .map(|((a, b, c), k)| {
                    format!(
                        "{}*({} ⊗ {} ⊗ {})",
                        format_scalar(k),
                        spec.basis[*a],
                        spec.basis[*b],
                        spec.basis[*c]
                    )
                })
                .collect();
            report.push("coassociativity", vec![spec.basis[i].clone()], terms.join(" + "));
        }
        let mut left: SparseVec<usize> = SparseVec::zero();
        let mut right: SparseVec<usize> = SparseVec::zero();
        for ((a, b), c) in d.iter() {
            left.add_term(*b, c * &spec.epsilon[*a]);
            right.add_term(*a, c * &spec.epsilon[*b]);
        }
        let id = SparseVec::basis(i);
        for (law, side) in [("counit-left", left), ("counit-right", right)] {
            if side != id {
                let diff = &side - &id;
                let terms: Vec<String> = diff
                    .iter()
                    .map(|(a, c)| format!("{}*{}", format_scalar(c), spec.basis[*a]))
                    .collect();
                report.push(law, vec![spec.basis[i].clone()], terms.join(" + "));
            }
        }
    }
    report.sorted()
}

fn builtin_grouplike(n: usize) -> CoalgebraSpec {
    let basis: Vec<String> = if n == 1 {
        vec!["g".into()]
    } else {
        (1..=n).map(|i| format!("g{i}")).collect()
    };
    let delta = (0..n).map(|i| vec![(i, i, int(1))]).collect();
    CoalgebraSpec::new(basis, delta, vec![int(1); n]).expect("builtin")
}

fn builtin_matrix(n: usize) -> CoalgebraSpec {
    let idx = |i: usize, j: usize| i * n + j;
    let mut basis = Vec::new();
    let mut delta = Vec::new();
    let mut epsilon = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(format!("e{}{}", i + 1, j + 1));
            delta.push((0..n).map(|k| (idx(i, k), idx(k, j), int(1))).collect());
            epsilon.push(int((i == j) as i64));
        }
    }
    CoalgebraSpec::new(basis, delta, epsilon).expect("builtin")
}

fn builtin_trig() -> CoalgebraSpec {
    CoalgebraSpec::new(
        vec!["c".into(), "s".into()],
        vec![vec![(0, 0, int(1)), (1, 1, int(-1))], vec![(1, 0, int(1)), (0, 1, int(1))]],
        vec![int(1), int(0)],
    )
    .expect("builtin")
}

/// `grouplike-n`, `matrix-n` (with `n <= 9`), or `trig`.
pub fn builtin(name: &str) -> Result<CoalgebraSpec> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    if name == "trig" {
        return Ok(builtin_trig());
    }
    let (family, n) = name.rsplit_once('-').ok_or_else(unknown)?;
    let n: usize = n.parse().map_err(|_| unknown())?;
    match family {
        "grouplike" if n >= 1 => Ok(builtin_grouplike(n)),
        "matrix" if (1..=9).contains(&n) => Ok(builtin_matrix(n)),
        _ => Err(unknown()),
    }
}

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Scalar written as a `"p/q"` string in spec files.
#[derive(Clone, Debug, PartialEq)]
struct ScalarText(Scalar);

impl Serialize for ScalarText {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text).map(ScalarText).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    basis: Vec<String>,
    delta: BTreeMap<String, Vec<(String, String, ScalarText)>>,
    epsilon: BTreeMap<String, ScalarText>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses a spec document with structural checks only.
pub fn parse_spec_unvalidated(text: &str) -> Result<CoalgebraSpec> {
    let file: SpecFile = serde_json::from_str(text).map_err(json_error)?;
    spec_from_file(file)
}

fn spec_from_file(file: SpecFile) -> Result<CoalgebraSpec> {
    let delta = file
        .delta
        .into_iter()
        .map(|(k, v)| (k, v.into_iter().map(|(a, b, c)| (a, b, c.0)).collect()))
        .collect();
    let epsilon = file.epsilon.into_iter().map(|(k, v)| (k, v.0)).collect();
    CoalgebraSpec::from_named(file.basis, &delta, &epsilon)
}

/// Spec from an inline JSON value (used by morphism files).
pub fn spec_from_value(value: serde_json::Value) -> Result<CoalgebraSpec> {
    let spec = match value {
        serde_json::Value::String(s) => match s.strip_prefix(BUILTIN_PREFIX) {
            Some(name) => builtin(name)?,
            None => return Err(Error::Validation(format!("expected `{BUILTIN_PREFIX}<name>`, got `{s}`"))),
        },
        other => {
            let file: SpecFile = serde_json::from_value(other).map_err(|e| Error::Parse {
                line: 0,
                column: 0,
                message: e.to_string(),
            })?;
            spec_from_file(file)?
        }
    };
    ensure_valid(&spec)?;
    Ok(spec)
}

fn ensure_valid(spec: &CoalgebraSpec) -> Result<()> {
    let report = validate_coalgebra(spec);
    if report.is_clean() {
        Ok(())
    } else {
        Err(Error::Validation(report.to_text().trim_end().to_string()))
    }
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<CoalgebraSpec> {
    let spec = parse_spec_unvalidated(text)?;
    ensure_valid(&spec)?;
    Ok(spec)
}

/// Reads a spec file, or a builtin when the path is `builtin:<name>`.
pub fn load_spec_unvalidated(path: &str) -> Result<CoalgebraSpec> {
    if let Some(name) = path.strip_prefix(BUILTIN_PREFIX) {
        return builtin(name);
    }
    parse_spec_unvalidated(&std::fs::read_to_string(path)?)
}

pub fn load_spec(path: &str) -> Result<CoalgebraSpec> {
    let spec = load_spec_unvalidated(path)?;
    ensure_valid(&spec)?;
    Ok(spec)
}

pub fn save_spec(spec: &CoalgebraSpec, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, spec.to_json())?;
    Ok(())
}

/// Exponent vector of a monomial in a target algebra. Group algebras allow
/// negative exponents.
pub type Exponents = Vec<i32>;
pub type TargetElt = SparseVec<Exponents>;
pub type TargetTensor = SparseVec<(Exponents, Exponents)>;

/// Closed-form Poisson Hopf algebras used as targets of universal maps.
#[derive(Clone, Debug, PartialEq)]
pub enum TargetHopfSpec {
    /// `S(g)` with primitive generators and `{x_i, x_j} = Σ_k c_ijk x_k`.
    SymmetricLie {
        names: Vec<String>,
        constants: Vec<Vec<SparseVec<usize>>>,
    },
    /// `k[Z^r]` with group-like generators and zero bracket.
    GroupAlgebra { names: Vec<String> },
}

impl TargetHopfSpec {
    /// Lie structure constants `brackets[(i, j)] = [x_i, x_j]` for `i < j`;
    /// antisymmetry fills the rest. Jacobi is checked.
    pub fn symmetric_lie(names: Vec<String>, brackets: &[((usize, usize), Vec<(usize, Scalar)>)]) -> Result<Self> {
        let n = names.len();
        let mut constants = vec![vec![SparseVec::zero(); n]; n];
        for ((i, j), terms) in brackets {
            if *i >= n || *j >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(Error::Validation("Lie constant index out of range".into()));
            }
            let v: SparseVec<usize> = terms.iter().cloned().collect();
            constants[*i][*j] = v.clone();
            constants[*j][*i] = -&v;
        }
        let spec = TargetHopfSpec::SymmetricLie { names, constants };
        let report = spec.lie_report();
        if !report.is_clean() {
            return Err(Error::Validation(report.to_text().trim_end().to_string()));
        }
        Ok(spec)
    }

    pub fn group_algebra(rank: usize) -> Self {
        let names = if rank == 1 {
            vec!["t".into()]
        } else {
            (1..=rank).map(|i| format!("t{i}")).collect()
        };
        TargetHopfSpec::GroupAlgebra { names }
    }

    pub fn names(&self) -> &[String] {
        match self {
            TargetHopfSpec::SymmetricLie { names, .. } | TargetHopfSpec::GroupAlgebra { names } => names,
        }
    }

    pub fn rank(&self) -> usize {
        self.names().len()
    }

    pub fn unit(&self) -> TargetElt {
        TargetElt::basis(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> TargetElt {
        self.power(i, 1)
    }

    /// `x_i^k`; negative `k` only in group algebras.
    pub fn power(&self, i: usize, k: i32) -> TargetElt {
        let mut e = vec![0; self.rank()];
        e[i] = k;
        TargetElt::basis(e)
    }

    pub fn product(&self, a: &TargetElt, b: &TargetElt) -> TargetElt {
        let mut out = TargetElt::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(x.iter().zip(y).map(|(p, q)| p + q).collect(), c * d);
            }
        }
        out
    }

    pub fn bracket(&self, a: &TargetElt, b: &TargetElt) -> TargetElt {
        let TargetHopfSpec::SymmetricLie { constants, .. } = self else {
            return TargetElt::zero();
        };
        let mut out = TargetElt::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                for (i, &xi) in x.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for (j, &yj) in y.iter().enumerate() {
                        if yj == 0 {
                            continue;
                        }
                        let scale = c * d * int((xi * yj) as i64);
                        for (k, e) in constants[i][j].iter() {
                            let mut m: Exponents = x.iter().zip(y).map(|(p, q)| p + q).collect();
                            m[i] -= 1;
                            m[j] -= 1;
                            m[*k] += 1;
                            out.add_term(m, &scale * e);
                        }
                    }
                }
            }
        }
        out
    }

    fn monomial_coproduct(&self, x: &Exponents) -> TargetTensor {
        match self {
            TargetHopfSpec::GroupAlgebra { .. } => TargetTensor::basis((x.clone(), x.clone())),
            TargetHopfSpec::SymmetricLie { .. } => {
                let mut out = TargetTensor::basis((vec![0; x.len()], vec![0; x.len()]));
                for (i, &a) in x.iter().enumerate() {
                    let mut next = TargetTensor::zero();
                    for ((l, r), c) in out.iter() {
                        let mut binom = BigInt::one();
                        for k in 0..=a {
                            let (mut l2, mut r2) = (l.clone(), r.clone());
                            l2[i] += k;
                            r2[i] += a - k;
                            next.add_term((l2, r2), c * Scalar::from_integer(binom.clone()));
                            binom = binom * BigInt::from(a - k) / BigInt::from(k + 1);
                        }
                    }
                    out = next;
                }
                out
            }
        }
    }

    pub fn coproduct(&self, a: &TargetElt) -> TargetTensor {
        let mut out = TargetTensor::zero();
        for (x, c) in a.iter() {
            out.add_scaled(&self.monomial_coproduct(x), c);
        }
        out
    }

    pub fn counit(&self, a: &TargetElt) -> Scalar {
        match self {
            TargetHopfSpec::GroupAlgebra { .. } => a.iter().fold(Scalar::zero(), |acc, (_, c)| acc + c),
            TargetHopfSpec::SymmetricLie { .. } => a.coeff(&vec![0; self.rank()]),
        }
    }

    pub fn tensor_product(&self, x: &TargetTensor, y: &TargetTensor) -> TargetTensor {
        let mut out = TargetTensor::zero();
        for ((p, q), c) in x.iter() {
            for ((r, s), d) in y.iter() {
                let pr = self.product(&TargetElt::basis(p.clone()), &TargetElt::basis(r.clone()));
                let qs = self.product(&TargetElt::basis(q.clone()), &TargetElt::basis(s.clone()));
                out.add_scaled(&target_outer(&pr, &qs), &(c * d));
            }
        }
        out
    }

    /// `[p ⊗ q, r ⊗ s] = pr ⊗ {q, s} + {p, r} ⊗ qs`
    pub fn tensor_bracket(&self, x: &TargetTensor, y: &TargetTensor) -> TargetTensor {
        let mut out = TargetTensor::zero();
        for ((p, q), c) in x.iter() {
            for ((r, s), d) in y.iter() {
                let (p, q, r, s) = (
                    TargetElt::basis(p.clone()),
                    TargetElt::basis(q.clone()),
                    TargetElt::basis(r.clone()),
                    TargetElt::basis(s.clone()),
                );
                let coeff = c * d;
                out.add_scaled(&target_outer(&self.product(&p, &r), &self.bracket(&q, &s)), &coeff);
                out.add_scaled(&target_outer(&self.bracket(&p, &r), &self.product(&q, &s)), &coeff);
            }
        }
        out
    }

    pub fn render(&self, a: &TargetElt) -> String {
        render_target(a, self.names())
    }

    pub fn render_tensor(&self, t: &TargetTensor) -> String {
        let names = self.names();
        let terms: Vec<String> = t
            .iter()
            .map(|((l, r), c)| {
                format!(
                    "{}*({} ⊗ {})",
                    format_scalar(c),
                    render_exponents(l, names),
                    render_exponents(r, names)
                )
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    fn lie_report(&self) -> Report {
        let mut report = Report::new();
        let TargetHopfSpec::SymmetricLie { names, constants } = self else {
            return report;
        };
        let n = names.len();
        for i in 0..n {
            if !constants[i][i].is_zero() {
                report.push("lie-antisymmetry", vec![names[i].clone()], format!("{:?}", constants[i][i]));
            }
            for j in 0..n {
                for k in 0..n {
                    // [x_i,[x_j,x_k]] + cyclic
                    let mut residual: SparseVec<usize> = SparseVec::zero();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, coeff) in constants[b][c].iter() {
                            residual.add_scaled(&constants[a][*m], coeff);
                        }
                    }
                    if !residual.is_zero() {
                        report.push(
                            "lie-jacobi",
                            vec![names[i].clone(), names[j].clone(), names[k].clone()],
                            format!("{residual:?}"),
                        );
                    }
                }
            }
        }
        report.sorted()
    }

    /// Exponent vectors of total absolute degree `<= n`, nonnegative except in
    /// group algebras.
    pub fn monomials_up_to(&self, n: usize) -> Vec<Exponents> {
        let negative = matches!(self, TargetHopfSpec::GroupAlgebra { .. });
        let mut out = vec![vec![]];
        for _ in 0..self.rank() {
            let mut next = Vec::new();
            for e in &out {
                let used: i32 = e.iter().map(|x: &i32| x.abs()).sum();
                let budget = n as i32 - used;
                let lo = if negative { -budget } else { 0 };
                for k in lo..=budget {
                    let mut e2 = e.clone();
                    e2.push(k);
                    next.push(e2);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Lie identities and `Δ{a, b} = [Δa, Δb]`, `ε{a, b} = 0`, coassociativity
    /// and the counit laws on monomials with degree sum `<= n`.
    pub fn structure_report(&self, n: usize) -> Report {
        let mut report = self.lie_report();
        let monos = self.monomials_up_to(n);
        let deg = |e: &Exponents| e.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>();
        for a in &monos {
            let pa = TargetElt::basis(a.clone());
            let da = self.coproduct(&pa);
            let mut left = TargetElt::zero();
            let mut right = TargetElt::zero();
            let mut assoc: SparseVec<(Exponents, Exponents, Exponents)> = SparseVec::zero();
            for ((l, r), c) in da.iter() {
                left.add_scaled(&TargetElt::basis(r.clone()), &(c * self.counit(&TargetElt::basis(l.clone()))));
                right.add_scaled(&TargetElt::basis(l.clone()), &(c * self.counit(&TargetElt::basis(r.clone()))));
                for ((x, y), d) in self.coproduct(&TargetElt::basis(l.clone())).iter() {
                    assoc.add_term((x.clone(), y.clone(), r.clone()), c * d);
                }
                for ((x, y), d) in self.coproduct(&TargetElt::basis(r.clone())).iter() {
                    assoc.add_term((l.clone(), x.clone(), y.clone()), -(c * d));
                }
            }
            if left != pa || right != pa {
                report.push("counit", vec![self.render(&pa)], "counit law fails".into());
            }
            if !assoc.is_zero() {
                report.push("coassociativity", vec![self.render(&pa)], format!("{} terms", assoc.len()));
            }
            for b in &monos {
                if deg(a) + deg(b) > n || a > b {
                    continue;
                }
                let pb = TargetElt::basis(b.clone());
                let br = self.bracket(&pa, &pb);
                let residual = &self.coproduct(&br) - &self.tensor_bracket(&da, &self.coproduct(&pb));
                let w = vec![self.render(&pa), self.render(&pb)];
                if !residual.is_zero() {
                    report.push("poisson-compatibility", w.clone(), self.render_tensor(&residual));
                }
                let e = self.counit(&br);
                if !e.is_zero() {
                    report.push("counit-bracket", w, format_scalar(&e));
                }
            }
        }
        report.sorted()
    }
}

pub fn target_outer(a: &TargetElt, b: &TargetElt) -> TargetTensor {
    let mut out = TargetTensor::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

fn render_exponents(e: &Exponents, names: &[String]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(names)
        .filter(|(k, _)| **k != 0)
        .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn render_target(a: &TargetElt, names: &[String]) -> String {
    let mut out = String::new();
    for (i, (e, c)) in a.iter().enumerate() {
        let neg = c.is_negative();
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let abs = c.abs();
        let m = render_exponents(e, names);
        if m == "1" {
            out.push_str(&format_scalar(&abs));
        } else if abs.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{}*{}", format_scalar(&abs), m));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
