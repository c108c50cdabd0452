//! Catalog-wide identities, 200 seeded samples per algebra.

use lielab::catalog::standard_instances;
use lielab::linalg::{char_poly, jordan_chevalley, min_poly, Matrix};
use lielab::poly::is_squarefree;
use lielab::regularity::ad_char_coeffs;
use lielab::{random_vector, Budget, Field, LieAlgebra, Scalar};
use rand::Rng;

const SAMPLES: usize = 200;

fn nonzero(field: Field, n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Scalar> {
    loop {
        let x = random_vector(field, n, 3, rng);
        if x.iter().any(|c| !c.is_zero()) {
            return x;
        }
    }
}

fn nonzero_scalar(field: Field, rng: &mut rand_chacha::ChaCha8Rng) -> Scalar {
    loop {
        let s = field.from_i64(rng.gen_range(-7..=7));
        if !s.is_zero() {
            return s;
        }
    }
}

fn scaled(s: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|c| s * c).collect()
}

// trace(ad a ad b), computed from the structure constants directly
fn killing(l: &LieAlgebra, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let n = l.dim();
    let mut t = l.field().zero();
    for k in 0..n {
        let e = l.basis_vector(k);
        let v = l.bracket(a, &l.bracket(b, &e).unwrap()).unwrap();
        t += &v[k];
    }
    t
}

#[test]
fn char_coeffs_are_homogeneous_with_a0_zero_and_monic() {
    for (name, l) in standard_instances() {
        let n = l.dim();
        let f = l.field();
        let mut rng = lielab::rng(11);
        for _ in 0..SAMPLES {
            let x = random_vector(f, n, 3, &mut rng);
            let lam = nonzero_scalar(f, &mut rng);
            let a = ad_char_coeffs(&l, &x).unwrap();
            let b = ad_char_coeffs(&l, &scaled(&lam, &x)).unwrap();
            assert!(a[0].is_zero(), "{name}: a0 != 0 at {x:?}");
            assert!(a[n].is_one(), "{name}: not monic");
            for i in 0..=n {
                assert_eq!(b[i], &lam.pow((n - i) as u64) * &a[i], "{name}: a_{i} not homogeneous");
            }
        }
    }
}

#[test]
fn symbolic_coefficients_are_homogeneous_forms() {
    let budget = Budget::default();
    for (name, l) in standard_instances() {
        if l.dim() > budget.symbolic_dim {
            continue;
        }
        let g = l.generic_char_poly(&budget).unwrap();
        let n = l.dim();
        assert!(g.coeff(0).is_zero(), "{name}");
        for i in 0..=n {
            let a = g.coeff(i);
            assert!(a.is_zero() || a.is_homogeneous_of((n - i) as u32), "{name}: a_{i}");
        }
        let mut rng = lielab::rng(12);
        for _ in 0..20 {
            let x = random_vector(l.field(), n, 3, &mut rng);
            assert_eq!(g.eval(&x).unwrap(), ad_char_coeffs(&l, &x).unwrap(), "{name}");
        }
    }
}

#[test]
fn fitting_components() {
    for (name, l) in standard_instances() {
        let n = l.dim();
        let mut rng = lielab::rng(13);
        for _ in 0..SAMPLES {
            let x = nonzero(l.field(), n, &mut rng);
            let d = l.fitting(&x).unwrap();
            d.check(&l).unwrap();
            assert_eq!(d.l0.dim() + d.l1.dim(), n, "{name}");
            assert!(l.is_subalgebra(&d.l0).unwrap(), "{name}");
            let ad = l.ad(&x).unwrap();
            assert_eq!(d.l1.restrict(&ad).unwrap().rank(), d.l1.dim(), "{name}: ad x singular on L1");
            assert!(d.l0.restrict(&ad).unwrap().is_nilpotent(), "{name}: ad x not nilpotent on L0");
            assert!(d.l0.contains(&x), "{name}: x not in L0(x)");
        }
    }
}

#[test]
fn killing_form_is_invariant() {
    for (name, l) in standard_instances() {
        let n = l.dim();
        let k = l.killing_form();
        assert!(k.is_invariant(), "{name}");
        let mut rng = lielab::rng(14);
        for _ in 0..SAMPLES {
            let x = random_vector(l.field(), n, 3, &mut rng);
            let y = random_vector(l.field(), n, 3, &mut rng);
            let z = random_vector(l.field(), n, 3, &mut rng);
            let lhs = killing(&l, &l.bracket(&x, &y).unwrap(), &z);
            let rhs = killing(&l, &x, &l.bracket(&y, &z).unwrap());
            assert_eq!(lhs, rhs, "{name}");
            assert_eq!(k.eval(&x, &y), killing(&l, &x, &y), "{name}: Gram disagrees with traces");
        }
    }
}

#[test]
fn cayley_hamilton_and_min_poly() {
    for (name, l) in standard_instances() {
        let mut rng = lielab::rng(15);
        for _ in 0..SAMPLES {
            let x = random_vector(l.field(), l.dim(), 3, &mut rng);
            let ad = l.ad(&x).unwrap();
            let chi = char_poly(&ad).unwrap();
            assert!(ad.eval_poly(&chi).is_zero(), "{name}");
            let mu = min_poly(&ad).unwrap();
            assert!(mu.divides(&chi), "{name}");
            assert!(ad.eval_poly(&mu).is_zero(), "{name}");
        }
    }
}

#[test]
fn jordan_chevalley_postconditions() {
    for (name, l) in standard_instances() {
        let mut rng = lielab::rng(16);
        for _ in 0..SAMPLES {
            let x = random_vector(l.field(), l.dim(), 3, &mut rng);
            let m: Matrix = l.ad(&x).unwrap();
            let (s, nil) = jordan_chevalley(&m).unwrap();
            assert_eq!(s.add(&nil), m, "{name}");
            assert!(s.commutator(&nil).is_zero(), "{name}");
            assert!(nil.is_nilpotent(), "{name}");
            assert!(is_squarefree(&min_poly(&s).unwrap()).unwrap(), "{name}");
        }
    }
}

#[test]
fn regular_elements_have_minimal_fitting_null_component() {
    let budget = Budget::default();
    for (name, l) in standard_instances() {
        let Ok(r) = l.rank_with(&budget) else { continue };
        let mut rng = lielab::rng(17);
        for _ in 0..SAMPLES {
            let x = nonzero(l.field(), l.dim(), &mut rng);
            let regular = l.is_regular_element(&x).unwrap();
            assert_eq!(regular, l.fitting(&x).unwrap().l0.dim() == r.rank, "{name}");
        }
    }
}
