//! Exact rational linear algebra over arbitrary ordered labels.
//!
//! Every quotient in the crate is realized through [`SubspaceBasis`]: a
//! reduced row-echelon basis whose pivots are the *largest* label of each
//! row. With a degree-first label order this makes the pivot of a row its
//! leading (highest-degree) term, so the rows of filtration degree `<= d`
//! span exactly the elements of the subspace of filtration degree `<= d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field: exact arbitrary-precision rationals, always reduced.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar `{text}`: {reason}")]
pub struct ScalarParseError {
    pub text: String,
    pub reason: &'static str,
}

/// Parses `"p"` or `"p/q"` with decimal integers; `q` must be nonzero.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let err = |reason| ScalarParseError {
        text: text.to_string(),
        reason,
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let valid_int = |s: &str| {
        let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num) {
        return Err(err("numerator is not a decimal integer"));
    }
    let n: BigInt = num.parse().map_err(|_| err("numerator is not a decimal integer"))?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if !valid_int(d) {
                return Err(err("denominator is not a decimal integer"));
            }
            d.parse().map_err(|_| err("denominator is not a decimal integer"))?
        }
    };
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Scalar::new(n, d))
}

/// Renders a scalar as `p` or `p/q`.
pub fn format_scalar(c: &Scalar) -> String {
    c.to_string()
}

/// A finite linear combination of labels. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<L: Ord> {
    entries: BTreeMap<L, Scalar>,
}

impl<L: Ord> Default for SparseVec<L> {
    fn default() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for SparseVec<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

impl<L: Ord + Clone> SparseVec<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: L) -> Self {
        Self::term(label, Scalar::one())
    }

    pub fn term(label: L, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(label, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &L) -> Option<&Scalar> {
        self.entries.get(label)
    }

    pub fn coeff(&self, label: &L) -> Scalar {
        self.entries.get(label).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&L, &Scalar)> + '_ {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl DoubleEndedIterator<Item = &L> + '_ {
        self.entries.keys()
    }

    /// The largest label with its coefficient.
    pub fn leading(&self) -> Option<(&L, &Scalar)> {
        self.entries.iter().next_back()
    }

    pub fn add_term(&mut self, label: L, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(label) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &SparseVec<L>, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (l, c) in other.iter() {
            self.add_term(l.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(l, c)| (l.clone(), c * factor))
                .collect(),
        }
    }

    /// Relabels every entry, merging coefficients of labels that collide.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> SparseVec<M> {
        self.iter().map(|(l, c)| (f(l), c.clone())).collect()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&L) -> bool) {
        self.entries.retain(|l, _| keep(l));
    }

    pub fn into_entries(self) -> BTreeMap<L, Scalar> {
        self.entries
    }
}

impl<L: Ord + Clone> FromIterator<(L, Scalar)> for SparseVec<L> {
    fn from_iter<I: IntoIterator<Item = (L, Scalar)>>(iter: I) -> Self {
        let mut v = SparseVec::zero();
        for (l, c) in iter {
            v.add_term(l, c);
        }
        v
    }
}

impl<L: Ord + Clone> Add for &SparseVec<L> {
    type Output = SparseVec<L>;
    fn add(self, rhs: Self) -> SparseVec<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<L: Ord + Clone> Sub for &SparseVec<L> {
    type Output = SparseVec<L>;
    fn sub(self, rhs: Self) -> SparseVec<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<L: Ord + Clone> Neg for &SparseVec<L> {
    type Output = SparseVec<L>;
    fn neg(self) -> SparseVec<L> {
        self.scaled(&-Scalar::one())
    }
}

/// Reduced row-echelon basis of a subspace, keyed by pivot label.
///
/// Invariants: each row's pivot is its largest label with coefficient 1, and
/// no row mentions another row's pivot.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceBasis<L: Ord> {
    rows: BTreeMap<L, SparseVec<L>>,
}

impl<L: Ord> Default for SubspaceBasis<L> {
    fn default() -> Self {
        SubspaceBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for SubspaceBasis<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.values()).finish()
    }
}

impl<L: Ord + Clone> SubspaceBasis<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in ascending pivot order.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &SparseVec<L>> + '_ {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl DoubleEndedIterator<Item = &L> + '_ {
        self.rows.keys()
    }

    pub fn is_pivot(&self, label: &L) -> bool {
        self.rows.contains_key(label)
    }

    /// `v` minus its projection onto the span along the pivot columns.
    pub fn normal_form(&self, v: &SparseVec<L>) -> SparseVec<L> {
        if self.rows.is_empty() {
            return v.clone();
        }
        let hits: Vec<(&SparseVec<L>, Scalar)> = v
            .iter()
            .filter_map(|(l, c)| self.rows.get(l).map(|row| (row, -c.clone())))
            .collect();
        let mut out = v.clone();
        for (row, c) in hits {
            out.add_scaled(row, &c);
        }
        out
    }

    pub fn member(&self, v: &SparseVec<L>) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Adds `v` to the span. Returns the normalized residue (the new row as
    /// inserted, before back-substitution into older rows) when the rank grew.
    pub fn insert(&mut self, v: &SparseVec<L>) -> Option<SparseVec<L>> {
        let residue = self.normal_form(v);
        let (pivot, lead) = match residue.leading() {
            Some((p, c)) => (p.clone(), c.clone()),
            None => return None,
        };
        let row = residue.scaled(&lead.recip());
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                other.add_scaled(&row, &-c);
            }
        }
        self.rows.insert(pivot, row.clone());
        Some(row)
    }

    pub fn extend<'a, I>(&mut self, vectors: I)
    where
        I: IntoIterator<Item = &'a SparseVec<L>>,
        L: 'a,
    {
        for v in vectors {
            self.insert(v);
        }
    }
}

/// The unique reduced row-echelon basis of the span of `vectors`.
pub fn row_reduce<L: Ord + Clone>(vectors: &[SparseVec<L>]) -> SubspaceBasis<L> {
    let mut basis = SubspaceBasis::new();
    basis.extend(vectors);
    basis
}

pub fn normal_form<L: Ord + Clone>(basis: &SubspaceBasis<L>, v: &SparseVec<L>) -> SparseVec<L> {
    basis.normal_form(v)
}

pub fn member<L: Ord + Clone>(basis: &SubspaceBasis<L>, v: &SparseVec<L>) -> bool {
    basis.member(v)
}

/// Label of an augmented vector `(image | tag)`. Tags sort below images so a
/// row with a tag pivot has an identically zero image part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Augmented<T, I> {
    Tag(T),
    Image(I),
}

/// Kernel of the linear map `columns[i] = image of basis vector tag_i`,
/// returned as combinations of the tags.
pub fn kernel<T, I>(columns: &[(T, SparseVec<I>)]) -> Vec<SparseVec<T>>
where
    T: Ord + Clone,
    I: Ord + Clone,
{
    let mut basis: SubspaceBasis<Augmented<T, I>> = SubspaceBasis::new();
    for (tag, image) in columns {
        let mut v: SparseVec<Augmented<T, I>> = image.map_labels(|l| Augmented::Image(l.clone()));
        v.add_term(Augmented::Tag(tag.clone()), Scalar::one());
        basis.insert(&v);
    }
    basis
        .rows()
        .filter(|row| matches!(row.leading(), Some((Augmented::Tag(_), _))))
        .map(|row| {
            row.iter()
                .filter_map(|(l, c)| match l {
                    Augmented::Tag(t) => Some((t.clone(), c.clone())),
                    Augmented::Image(_) => None,
                })
                .collect()
        })
        .collect()
}

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVec<usize> {
        xs.iter()
            .enumerate()
            .map(|(i, &x)| (i, int(x)))
            .collect()
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), Scalar::new(BigInt::from(-3), BigInt::from(2)));
        assert_eq!(parse_scalar("0/5").unwrap(), int(0));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("/2").is_err());
        assert_eq!(format_scalar(&parse_scalar("4/6").unwrap()), "2/3");
        assert_eq!(format_scalar(&int(-7)), "-7");
    }

    #[test]
    fn zero_is_never_stored() {
        let mut a = v(&[1, 2]);
        a.add_term(0, int(-1));
        assert_eq!(a.len(), 1);
        assert_eq!(&a - &a, SparseVec::zero());
    }

    #[test]
    fn row_reduce_examples() {
        let b = row_reduce(&[v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.rows().cloned().collect::<Vec<_>>(), vec![v(&[1, 0]), v(&[0, 1])]);

        assert_eq!(row_reduce(&[v(&[0, 0])]).rank(), 0);
        assert_eq!(row_reduce::<usize>(&[]).rank(), 0);

        let b = row_reduce(&[v(&[2, 4]), v(&[1, 2]), v(&[1, 3])]);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.rows().cloned().collect::<Vec<_>>(), vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn normal_form_examples() {
        let b = row_reduce(&[v(&[1, 0])]);
        assert_eq!(normal_form(&b, &v(&[3, 5])), v(&[0, 5]));
        let empty = SubspaceBasis::new();
        assert_eq!(normal_form(&empty, &v(&[3, 5])), v(&[3, 5]));
        let b = row_reduce(&[v(&[1, 2])]);
        assert!(normal_form(&b, &v(&[3, 6])).is_zero());
    }

    #[test]
    fn membership_examples() {
        assert!(member(&row_reduce(&[v(&[1, 2])]), &v(&[1, 2])));
        assert!(!member(&row_reduce(&[v(&[0, 1])]), &v(&[1, 0])));
        assert!(member(&row_reduce(&[v(&[2, 0]), v(&[0, 3])]), &v(&[1, 1])));
    }

    #[test]
    fn pivot_is_largest_label() {
        let b = row_reduce(&[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        for row in b.rows() {
            let (_, c) = row.leading().unwrap();
            assert_eq!(c, &int(1));
        }
        assert_eq!(b.pivots().cloned().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn kernel_of_small_map() {
        // columns: e0 -> (1, 0), e1 -> (2, 0), e2 -> (0, 1)
        let cols = vec![(0usize, v(&[1, 0])), (1, v(&[2, 0])), (2, v(&[0, 1]))];
        let k = kernel(&cols);
        assert_eq!(k.len(), 1);
        let expected: SparseVec<usize> = [(0, int(-2)), (1, int(1))].into_iter().collect();
        let kk = &k[0];
        // kernel vector is a multiple of (-2, 1, 0)
        let ratio = kk.coeff(&1) / expected.coeff(&1);
        assert_eq!(kk, &expected.scaled(&ratio));
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(integer_rank(&[vec![2, 4], vec![1, 2], vec![1, 3]]), 2);
        assert_eq!(integer_rank(&[vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]), 2);
    }
}
