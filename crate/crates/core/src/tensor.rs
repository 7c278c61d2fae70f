//! Tensor powers of the truncated free Poisson algebra.
//!
//! Each tensor factor is truncated separately at the ambient degree, so the
//! coproduct of an element of degree `<= N` is computed without loss.

use num_traits::{One, Signed};

use crate::linear::{format_scalar, Scalar, SparseVec};
use crate::poisson::{bracket, multiply, Monomial, Poly};

pub type Tensor2 = SparseVec<(Monomial, Monomial)>;
pub type Tensor3 = SparseVec<(Monomial, Monomial, Monomial)>;

pub fn outer(a: &Poly, b: &Poly) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

pub fn unit2() -> Tensor2 {
    Tensor2::basis((Monomial::one(), Monomial::one()))
}

/// `(p ⊗ q)(r ⊗ s) = pr ⊗ qs`
pub fn tensor_product(x: &Tensor2, y: &Tensor2, max_degree: usize) -> (Tensor2, bool) {
    let mut out = Tensor2::zero();
    let mut lossy = false;
    for ((p, q), c) in x.iter() {
        for ((r, s), d) in y.iter() {
            if p.degree() + r.degree() > max_degree || q.degree() + s.degree() > max_degree {
                lossy = true;
                continue;
            }
            out.add_term((p.mul(r), q.mul(s)), c * d);
        }
    }
    (out, lossy)
}

/// `[p ⊗ q, r ⊗ s] = pr ⊗ [q, s] + [p, r] ⊗ qs` on the free ambient.
pub fn tensor_bracket(x: &Tensor2, y: &Tensor2, max_degree: usize) -> (Tensor2, bool) {
    let mut out = Tensor2::zero();
    let mut lossy = false;
    for ((p, q), c) in x.iter() {
        for ((r, s), d) in y.iter() {
            let coeff = c * d;
            let (pr, l1) = multiply(&Poly::basis(p.clone()), &Poly::basis(r.clone()), max_degree);
            let (qs_bracket, l2) = bracket(&Poly::basis(q.clone()), &Poly::basis(s.clone()), max_degree);
            let (pr_bracket, l3) = bracket(&Poly::basis(p.clone()), &Poly::basis(r.clone()), max_degree);
            let (qs, l4) = multiply(&Poly::basis(q.clone()), &Poly::basis(s.clone()), max_degree);
            lossy |= (l1 && !qs_bracket.is_zero()) || (l2 && !pr.is_zero());
            lossy |= (l3 && !qs.is_zero()) || (l4 && !pr_bracket.is_zero());
            out.add_scaled(&outer(&pr, &qs_bracket), &coeff);
            out.add_scaled(&outer(&pr_bracket, &qs), &coeff);
        }
    }
    (out, lossy)
}

pub fn flip(t: &Tensor2) -> Tensor2 {
    t.map_labels(|(a, b)| (b.clone(), a.clone()))
}

/// `(f ⊗ g)(t)` for linear maps given on monomials.
pub fn map_factors(
    t: &Tensor2,
    mut f: impl FnMut(&Monomial) -> Poly,
    mut g: impl FnMut(&Monomial) -> Poly,
) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&outer(&f(a), &g(b)), c);
    }
    out
}

fn render_terms<'a, L: Ord + Clone + 'a>(
    terms: impl Iterator<Item = (&'a L, &'a Scalar)>,
    show: impl Fn(&L) -> String,
) -> String {
    let mut out = String::new();
    for (i, (l, c)) in terms.enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if abs.is_one() {
            out.push_str(&show(l));
        } else {
            out.push_str(&format!("{}*({})", format_scalar(&abs), show(l)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render2(t: &Tensor2, names: &[String]) -> String {
    render_terms(t.iter(), |(a, b)| format!("{} ⊗ {}", a.render(names), b.render(names)))
}

pub fn render3(t: &Tensor3, names: &[String]) -> String {
    render_terms(t.iter(), |(a, b, c)| {
        format!("{} ⊗ {} ⊗ {}", a.render(names), b.render(names), c.render(names))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;
    use crate::poisson::gen;

    #[test]
    fn product_is_componentwise() {
        let g = Monomial::generator(0);
        let t = Tensor2::basis((g.clone(), g.clone()));
        let (sq, lossy) = tensor_product(&t, &t, 2);
        assert!(!lossy);
        let g2 = g.mul(&g);
        assert_eq!(sq, Tensor2::basis((g2.clone(), g2)));
        let (_, lossy) = tensor_product(&sq, &t, 2);
        assert!(lossy);
    }

    #[test]
    fn bracket_of_grouplikes() {
        // [g ⊗ g, h ⊗ h] = gh ⊗ {g,h} + {g,h} ⊗ gh
        let g = Monomial::generator(0);
        let h = Monomial::generator(1);
        let tg = Tensor2::basis((g.clone(), g.clone()));
        let th = Tensor2::basis((h.clone(), h.clone()));
        let (b, lossy) = tensor_bracket(&tg, &th, 2);
        assert!(!lossy);
        let (gh, _) = multiply(&gen(0), &gen(1), 2);
        let (w, _) = bracket(&gen(0), &gen(1), 2);
        let expected = &outer(&gh, &w) + &outer(&w, &gh);
        assert_eq!(b, expected);
        assert_eq!(flip(&b), b);
        assert_eq!(b.len(), 2);
        assert_eq!(expected.coeff(&(g.mul(&h), w.labels().next().unwrap().clone())), int(1));
    }
}
