//! Free Lie algebra in the Lyndon basis.
//!
//! A Lyndon word `w` stands for its standard bracketing `σ(w)`, defined by the
//! right standard factorization `w = uv` with `v` the longest proper Lyndon
//! suffix: `σ(w) = [σ(u), σ(v)]`. Brackets of basis elements are rewritten into
//! the basis with antisymmetry and Jacobi; results are memoized in a process-wide
//! read-mostly cache.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use crate::linear::{Scalar, SparseVec};

/// Generator index. Letters are ordered by index.
pub type Letter = u16;

/// A noncommutative word, the basis label of the tensor algebra.
pub type Word = Vec<Letter>;

/// Element of the tensor algebra `T(V)`.
pub type TensorElt = SparseVec<Word>;

/// Element of the free Lie algebra `L(V)` in the Lyndon basis.
pub type LieElt = SparseVec<LyndonWord>;

/// A Lyndon word. Ordered lexicographically (a proper prefix sorts first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Vec<Letter>);

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

/// True iff `w` is nonempty and strictly smaller than each proper rotation.
pub fn is_lyndon(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| {
        let rotated = w[i..].iter().chain(&w[..i]);
        w.iter().cmp(rotated) == std::cmp::Ordering::Less
    })
}

impl LyndonWord {
    pub fn new(letters: Vec<Letter>) -> Option<Self> {
        is_lyndon(&letters).then_some(LyndonWord(letters))
    }

    pub fn letter(a: Letter) -> Self {
        LyndonWord(vec![a])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_letter(&self) -> bool {
        self.0.len() == 1
    }

    /// Right standard factorization `(u, v)`; `None` for a single letter.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .map(|i| (LyndonWord(self.0[..i].to_vec()), LyndonWord(self.0[i..].to_vec())))
    }

    /// Applies an order-preserving relabeling of letters. Lyndon-ness and the
    /// standard factorization are both preserved.
    pub fn relabel(&self, f: impl Fn(Letter) -> Letter) -> LyndonWord {
        LyndonWord(self.0.iter().map(|&a| f(a)).collect())
    }

    fn concat(&self, other: &LyndonWord) -> LyndonWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        LyndonWord(letters)
    }
}

/// Lyndon words of each degree `1..=max_degree`, lexicographic within a degree.
/// Index `d - 1` holds degree `d`.
pub fn lyndon_words(alphabet_size: usize, max_degree: usize) -> Vec<Vec<LyndonWord>> {
    let mut by_degree = vec![Vec::new(); max_degree];
    if alphabet_size == 0 || max_degree == 0 {
        return by_degree;
    }
    // Duval's generation; emits every Lyndon word of length <= max_degree in
    // lexicographic order.
    let top = (alphabet_size - 1) as Letter;
    let mut w: Vec<Letter> = vec![0];
    while !w.is_empty() {
        by_degree[w.len() - 1].push(LyndonWord(w.clone()));
        let m = w.len();
        while w.len() < max_degree {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    by_degree
}

type BracketCache = RwLock<HashMap<(LyndonWord, LyndonWord), LieElt>>;

fn bracket_cache() -> &'static BracketCache {
    static CACHE: OnceLock<BracketCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `[σ(u), σ(v)]` in the Lyndon basis.
pub fn bracket_words(u: &LyndonWord, v: &LyndonWord) -> LieElt {
    if u == v {
        return LieElt::zero();
    }
    if u > v {
        return -&bracket_words(v, u);
    }
    let key = (u.clone(), v.clone());
    if let Some(hit) = bracket_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let result = match u.standard_factorization() {
        // uv is Lyndon with standard factorization (u, v)
        None => LieElt::basis(u.concat(v)),
        Some((_, ref u2)) if u2 >= v => LieElt::basis(u.concat(v)),
        Some((u1, u2)) => {
            // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
            let mut out = LieElt::zero();
            for (w, c) in bracket_words(&u2, v).iter() {
                out.add_scaled(&bracket_words(&u1, w), c);
            }
            for (w, c) in bracket_words(&u1, v).iter() {
                out.add_scaled(&bracket_words(&u2, w), &-c);
            }
            out
        }
    };
    bracket_cache()
        .write()
        .unwrap()
        .insert(key, result.clone());
    result
}

/// Bilinear extension of [`bracket_words`].
pub fn lie_bracket(x: &LieElt, y: &LieElt) -> LieElt {
    let mut out = LieElt::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            out.add_scaled(&bracket_words(u, v), &(a * b));
        }
    }
    out
}

pub fn tensor_mul(x: &TensorElt, y: &TensorElt) -> TensorElt {
    let mut out = TensorElt::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_term(w, a * b);
        }
    }
    out
}

/// `xy - yx` in `T(V)`.
pub fn commutator(x: &TensorElt, y: &TensorElt) -> TensorElt {
    &tensor_mul(x, y) - &tensor_mul(y, x)
}

/// Expansion of the standard bracketing `σ(w)` in the tensor algebra.
pub fn lyndon_to_tensor(w: &LyndonWord) -> TensorElt {
    match w.standard_factorization() {
        None => TensorElt::basis(w.letters().to_vec()),
        Some((u, v)) => commutator(&lyndon_to_tensor(&u), &lyndon_to_tensor(&v)),
    }
}

pub fn lie_to_tensor(x: &LieElt) -> TensorElt {
    let mut out = TensorElt::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&lyndon_to_tensor(w), c);
    }
    out
}

/// Standard bracketing printed with generator names, e.g. `[a,[a,b]]`.
pub fn render_lyndon(w: &LyndonWord, names: &[String]) -> String {
    match w.standard_factorization() {
        None => names[w.letters()[0] as usize].clone(),
        Some((u, v)) => format!("[{},{}]", render_lyndon(&u, names), render_lyndon(&v, names)),
    }
}

pub fn generator(a: Letter) -> LieElt {
    LieElt::term(LyndonWord::letter(a), Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::new(s.bytes().map(|b| (b - b'a') as Letter).collect()).unwrap()
    }

    fn word(s: &str) -> Word {
        s.bytes().map(|b| (b - b'a') as Letter).collect()
    }

    #[test]
    fn lyndon_recognition() {
        assert!(is_lyndon(&word("a")));
        assert!(is_lyndon(&word("aab")));
        assert!(is_lyndon(&word("abb")));
        assert!(!is_lyndon(&word("aa")));
        assert!(!is_lyndon(&word("ba")));
        assert!(!is_lyndon(&word("abab")));
        assert!(!is_lyndon(&[]));
    }

    #[test]
    fn enumeration_examples() {
        let ws = lyndon_words(2, 3);
        assert_eq!(ws[0], vec![lw("a"), lw("b")]);
        assert_eq!(ws[1], vec![lw("ab")]);
        assert_eq!(ws[2], vec![lw("aab"), lw("abb")]);

        let ws = lyndon_words(1, 4);
        assert_eq!(ws[0], vec![lw("a")]);
        assert!(ws[1..].iter().all(Vec::is_empty));

        assert_eq!(lyndon_words(3, 2)[1].len(), 3);
    }

    #[test]
    fn standard_factorizations() {
        assert_eq!(lw("aab").standard_factorization(), Some((lw("a"), lw("ab"))));
        assert_eq!(lw("abb").standard_factorization(), Some((lw("ab"), lw("b"))));
        assert_eq!(lw("aabab").standard_factorization(), Some((lw("aab"), lw("ab"))));
        assert_eq!(lw("a").standard_factorization(), None);
    }

    #[test]
    fn bracket_examples() {
        let a = generator(0);
        let b = generator(1);
        assert_eq!(lie_bracket(&a, &b), LieElt::basis(lw("ab")));
        assert_eq!(lie_bracket(&b, &a), LieElt::term(lw("ab"), int(-1)));
        let ab = LieElt::basis(lw("ab"));
        assert_eq!(lie_bracket(&ab, &a), LieElt::term(lw("aab"), int(-1)));
        assert!(lie_bracket(&ab, &ab).is_zero());
    }

    #[test]
    fn tensor_embedding_examples() {
        assert_eq!(lie_to_tensor(&generator(0)), TensorElt::basis(word("a")));
        let expected: TensorElt = [(word("ab"), int(1)), (word("ba"), int(-1))].into_iter().collect();
        assert_eq!(lie_to_tensor(&LieElt::basis(lw("ab"))), expected);
        let expected: TensorElt = [(word("aab"), int(1)), (word("aba"), int(-2)), (word("baa"), int(1))]
            .into_iter()
            .collect();
        assert_eq!(lie_to_tensor(&LieElt::basis(lw("aab"))), expected);
    }

    #[test]
    fn render_uses_standard_bracketing() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(render_lyndon(&lw("aab"), &names), "[a,[a,b]]");
        assert_eq!(render_lyndon(&lw("abb"), &names), "[[a,b],b]");
    }
}
