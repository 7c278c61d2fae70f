use poisson_hopf::expr::eval_str;
use poisson_hopf::lie::lyndon_words;
use poisson_hopf::poisson::{bracket, graded_dimension, multiply, Ambient, Monomial, Poly};
use proptest::prelude::*;

fn ambient(n: usize) -> Ambient {
    Ambient::new(vec!["a".into(), "b".into()], n).unwrap()
}

fn mono(m: &Monomial) -> Poly {
    Poly::basis(m.clone())
}

/// Coefficients of `∏_d (1 − t^d)^{−ℓ_d}` up to `t^max`.
fn generating_function(n: usize, max: usize) -> Vec<u128> {
    let words = lyndon_words(n, max);
    let mut series = vec![0u128; max + 1];
    series[0] = 1;
    for d in 1..=max {
        for _ in 0..words[d - 1].len() {
            // multiply by 1/(1 − t^d)
            for k in d..=max {
                series[k] += series[k - d];
            }
        }
    }
    series
}

#[test]
fn dimension_law() {
    for n in 1..=3 {
        let series = generating_function(n, 6);
        for d in 1..=6 {
            assert_eq!(graded_dimension(n, d), (n as u128).pow(d as u32));
            assert_eq!(series[d], (n as u128).pow(d as u32), "n={n} d={d}");
        }
    }
    let amb = ambient(5);
    for d in 0..=5 {
        assert_eq!(amb.monomials()[d].len() as u128, 2u128.pow(d as u32));
    }
}

#[test]
fn product_and_bracket_examples() {
    let amb = ambient(3);
    let e = |s: &str| eval_str(s, &amb).unwrap();
    assert_eq!(e("a*b"), e("b*a"));
    assert_eq!(e("a*b").to_string(), "a*b");
    let u = e("a + [a,b]");
    let one_u = amb.one().product(&u).unwrap();
    assert_eq!(one_u, u);
    assert!(!one_u.lossy());
    assert_eq!(e("{a,b}").to_string(), "[a,b]");
    assert_eq!(e("{a, a*b}"), e("a*[a,b]"));
    assert_eq!(e("{[a,b], a}"), e("-[a,[a,b]]"));
    let lost = e("a*a").product(&e("a*b")).unwrap();
    assert!(lost.lossy() && lost.is_zero());
}

#[test]
fn jacobi_and_leibniz_exhaustive() {
    let n = 5;
    let amb = ambient(n);
    let monos: Vec<Monomial> = amb.monomials_up_to(n).cloned().collect();
    for p in &monos {
        for q in &monos {
            for r in &monos {
                if p.degree() + q.degree() + r.degree() > n {
                    continue;
                }
                let (p, q, r) = (mono(p), mono(q), mono(r));
                let br = |x: &Poly, y: &Poly| bracket(x, y, n).0;
                let mul = |x: &Poly, y: &Poly| multiply(x, y, n).0;
                let jacobi = &(&br(&p, &br(&q, &r)) + &br(&q, &br(&r, &p))) + &br(&r, &br(&p, &q));
                assert!(jacobi.is_zero());
                let leibniz = &br(&p, &mul(&q, &r)) - &(&mul(&br(&p, &q), &r) + &mul(&q, &br(&p, &r)));
                assert!(leibniz.is_zero());
            }
        }
    }
}

#[test]
fn commutative_and_associative() {
    let n = 4;
    let amb = ambient(n);
    let monos: Vec<Monomial> = amb.monomials_up_to(n).cloned().collect();
    for p in &monos {
        for q in &monos {
            let (x, y) = (mono(p), mono(q));
            assert_eq!(multiply(&x, &y, n).0, multiply(&y, &x, n).0);
            assert_eq!(bracket(&x, &y, n).0, -&bracket(&y, &x, n).0);
            for r in &monos {
                let z = mono(r);
                let l = multiply(&multiply(&x, &y, n).0, &z, n).0;
                let rr = multiply(&x, &multiply(&y, &z, n).0, n).0;
                assert_eq!(l, rr);
            }
        }
    }
}

proptest! {
    #[test]
    fn degree_additivity(i in 0usize..64, j in 0usize..64) {
        let n = 5;
        let amb = ambient(n);
        let monos: Vec<Monomial> = amb.monomials_up_to(n).cloned().collect();
        let (m, k) = (&monos[i % monos.len()], &monos[j % monos.len()]);
        let d = m.degree() + k.degree();
        let (prod, lost_p) = multiply(&mono(m), &mono(k), n);
        let (br, lost_b) = bracket(&mono(m), &mono(k), n);
        if d <= n {
            prop_assert!(!lost_p && !lost_b);
            prop_assert!(prod.labels().all(|t| t.degree() == d));
            prop_assert!(br.labels().all(|t| t.degree() == d));
        } else {
            prop_assert!(lost_p && prod.is_zero());
            prop_assert!(br.is_zero());
        }
    }
}
