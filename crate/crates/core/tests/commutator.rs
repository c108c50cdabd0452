use lielab::catalog::{self, standard_instances, QuaternionAlgebra};
use lielab::commutator::{
    check_fitting_orthogonality, commutator_search, is_minimal_non, quaternion_commutator, rank1_commutator,
    recheck_minimal_witness, Property, Provenance,
};
use lielab::verdict::{CertificateKind, Status};
use lielab::{random_vector, Budget, Error, Field, Scalar};

fn fp(p: u64) -> Field {
    Field::fp(p).unwrap()
}

// product in (a, b) with i² = a, j² = b, k = ij = -ji, written out by hand
fn quat_mul(a: &Scalar, b: &Scalar, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let ab = a * b;
    let p = |u: &Scalar, v: &Scalar| u * v;
    vec![
        &(&(&p(&x[0], &y[0]) + &(a * &p(&x[1], &y[1]))) + &(b * &p(&x[2], &y[2]))) - &(&ab * &p(&x[3], &y[3])),
        &(&(&p(&x[0], &y[1]) + &p(&x[1], &y[0])) - &(b * &p(&x[2], &y[3]))) + &(b * &p(&x[3], &y[2])),
        &(&(&p(&x[0], &y[2]) + &p(&x[2], &y[0])) + &(a * &p(&x[1], &y[3]))) - &(a * &p(&x[3], &y[1])),
        &(&(&p(&x[0], &y[3]) + &p(&x[3], &y[0])) + &p(&x[1], &y[2])) - &p(&x[2], &y[1]),
    ]
}

#[test]
fn hand_written_product_matches_the_table() {
    let q = Field::Q;
    let h = QuaternionAlgebra::from_i64(q, -2, 3).unwrap();
    let (a, b) = (q.from_i64(-2), q.from_i64(3));
    let mut rng = lielab::rng(30);
    for _ in 0..50 {
        let x = random_vector(q, 4, 5, &mut rng);
        let y = random_vector(q, 4, 5, &mut rng);
        assert_eq!(h.mul(&x, &y), quat_mul(&a, &b, &x, &y));
    }
}

#[test]
fn fitting_orthogonality_under_killing() {
    for (name, l) in standard_instances() {
        let k = l.killing_form();
        if !k.is_nondegenerate() {
            continue;
        }
        for i in 0..l.dim() {
            assert!(check_fitting_orthogonality(&l, &k, &[l.basis_vector(i)]).unwrap(), "{name}: b{i}");
        }
        let mut rng = lielab::rng(31);
        for _ in 0..20 {
            let x = random_vector(l.field(), l.dim(), 3, &mut rng);
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            assert!(check_fitting_orthogonality(&l, &k, &[x]).unwrap(), "{name}");
        }
    }
    // a torus of gl2 is an almost commuting set; the trace form is invariant and nondegenerate
    let l = catalog::gl(Field::Q, 2).unwrap();
    let forms = l.invariant_forms();
    let trace = forms.iter().find(|f| f.is_nondegenerate()).expect("trace form");
    assert!(check_fitting_orthogonality(&l, trace, &[l.basis_vector(0), l.basis_vector(3)]).unwrap());
}

#[test]
fn degenerate_forms_are_rejected() {
    let l = catalog::gl(Field::Q, 2).unwrap();
    let k = l.killing_form();
    assert_eq!(check_fitting_orthogonality(&l, &k, &[l.basis_vector(1)]), Err(Error::BadForm("degenerate")));
    let r = catalog::r2(Field::Q);
    let x = r.basis_vector(1);
    assert_eq!(rank1_commutator(&r, &r.killing_form(), &x).unwrap_err(), Error::BadForm("degenerate"));
}

#[test]
fn rank_one_solver_on_regular_algebras() {
    let q = Field::Q;
    let tz = QuaternionAlgebra::from_i64(q, -1, 3).unwrap().trace_zero_lie();
    for l in [catalog::su2q(), tz] {
        let k = l.killing_form();
        let mut rng = lielab::rng(32);
        let mut done = 0;
        while done < 100 {
            let x = random_vector(q, 3, 9, &mut rng);
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let w = rank1_commutator(&l, &k, &x).unwrap();
            assert_eq!(l.bracket(&w.z, &w.y).unwrap(), x);
            assert!(k.eval(&x, &w.y).is_zero());
            assert_eq!(w.provenance, Provenance::Rank1Solver);
            done += 1;
        }
    }
    let sl3 = catalog::sl(q, 3).unwrap();
    let err = rank1_commutator(&sl3, &sl3.killing_form(), &sl3.basis_vector(0)).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    let s = catalog::su2q();
    assert_eq!(rank1_commutator(&s, &s.killing_form(), &s.zero_vector()).unwrap_err(), Error::ZeroElement);
}

#[test]
fn quaternion_commutators_recheck_independently() {
    let q = Field::Q;
    for (a, b) in [(-1, -1), (-1, -3), (-2, -5)] {
        let h = QuaternionAlgebra::from_i64(q, a, b).unwrap();
        let (sa, sb) = (q.from_i64(a), q.from_i64(b));
        let mut rng = lielab::rng(33);
        let mut done = 0;
        while done < 100 {
            let mut x = random_vector(q, 4, 9, &mut rng);
            x[0] = q.zero();
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let c = quaternion_commutator(&h, &x, &Budget::default()).unwrap();
            let uv = quat_mul(&sa, &sb, &c.u, &c.v);
            let vu = quat_mul(&sa, &sb, &c.v, &c.u);
            let diff: Vec<Scalar> = uv.iter().zip(&vu).map(|(s, t)| s - t).collect();
            assert_eq!(diff, x);
            done += 1;
        }
    }
    let h = QuaternionAlgebra::from_i64(q, -1, -1).unwrap();
    let one = vec![q.one(), q.zero(), q.zero(), q.zero()];
    assert!(matches!(quaternion_commutator(&h, &one, &Budget::default()), Err(Error::Precondition(_))));
    // (1, 1) is split; the division certificate is refused
    let split = QuaternionAlgebra::from_i64(q, 1, 1).unwrap();
    let i = vec![q.zero(), q.one(), q.zero(), q.zero()];
    assert!(matches!(quaternion_commutator(&split, &i, &Budget::default()), Err(Error::Precondition(_))));
}

#[test]
fn division_verdicts() {
    let budget = Budget::default();
    let q = Field::Q;
    let v = QuaternionAlgebra::from_i64(q, -1, -1).unwrap().is_division(lielab::regularity::Mode::Certificate, &budget);
    assert_eq!(v.unwrap().certificate, Some(CertificateKind::DefiniteQuadraticForm));
    // every quaternion algebra over a finite field splits
    for p in [3, 5, 7] {
        let h = QuaternionAlgebra::from_i64(fp(p), -1, -1).unwrap();
        let v = h.is_division(lielab::regularity::Mode::Exhaustive, &budget).unwrap();
        assert_eq!(v.status, Status::Refuted);
        let w = match v.witness.unwrap() {
            lielab::verdict::Witness::Pair { x, y } => h.mul(&x, &y),
            other => panic!("{other:?}"),
        };
        assert!(w.iter().all(|c| c.is_zero()));
    }
}

#[test]
fn commutator_search_examples() {
    let budget = Budget::default();
    let l = catalog::gl(Field::Q, 2).unwrap();
    let w = commutator_search(&l, &l.basis_vector(1), &budget).unwrap().unwrap();
    assert_eq!(l.bracket(&w.z, &w.y).unwrap(), l.basis_vector(1));
    assert_eq!(w.provenance, Provenance::Search);
    // the identity matrix is not a commutator
    let mut one = l.zero_vector();
    one[0] = Field::Q.one();
    one[3] = Field::Q.one();
    assert!(matches!(commutator_search(&l, &one, &budget), Err(Error::Precondition(_))));
    let a = catalog::abelian(Field::Q, 2);
    let zero = commutator_search(&a, &a.zero_vector(), &budget).unwrap().unwrap();
    assert!(zero.z.iter().all(|c| c.is_zero()));
    // psl3(F3): a sample of targets, all found
    let p = catalog::psl(fp(3), 3).unwrap();
    for i in 0..p.dim() {
        let t = p.basis_vector(i);
        let w = commutator_search(&p, &t, &budget).unwrap().expect("found");
        assert_eq!(p.bracket(&w.z, &w.y).unwrap(), t);
    }
}

#[test]
fn minimal_non_verdicts() {
    let budget = Budget::default();
    let r2 = catalog::r2(fp(3));
    for p in [Property::Abelian, Property::Nilpotent, Property::Regular] {
        let v = is_minimal_non(&r2, p, &budget).unwrap();
        assert_eq!((v.status, v.certificate), (Status::Certified, Some(CertificateKind::Exhaustive)), "{p}");
    }
    // sl2 over F3 has the non-abelian Borel subalgebra span(e, h)
    let sl2 = catalog::sl(fp(3), 2).unwrap();
    let v = is_minimal_non(&sl2, Property::Abelian, &budget).unwrap();
    assert_eq!(v.status, Status::Refuted);
    assert!(recheck_minimal_witness(&sl2, Property::Abelian, v.witness_subspace().unwrap(), &budget).unwrap());
    // L itself has the property
    let h3 = catalog::heisenberg(fp(3), 1).unwrap();
    let v = is_minimal_non(&h3, Property::Nilpotent, &budget).unwrap();
    assert_eq!(v.status, Status::Refuted);
    assert_eq!(v.witness_subspace().unwrap().len(), 3);
    // infinite fields are out of reach, large spaces exceed the budget
    assert!(matches!(is_minimal_non(&catalog::r2(Field::Q), Property::Abelian, &budget), Err(Error::Unsupported(_))));
    let big = catalog::psl(fp(3), 3).unwrap();
    assert_eq!(is_minimal_non(&big, Property::Regular, &budget).unwrap().status, Status::Inconclusive);
}

#[test]
fn minimal_non_is_basis_independent() {
    let budget = Budget::default();
    let cases = [
        catalog::r2(fp(3)),
        catalog::sl(fp(3), 2).unwrap(),
        catalog::heisenberg(fp(3), 1).unwrap(),
        catalog::r2(fp(3)).direct_sum(&catalog::abelian(fp(3), 1)).unwrap(),
    ];
    for l in cases {
        let rev: Vec<usize> = (0..l.dim()).rev().collect();
        let m = l.permute_basis(&rev).unwrap();
        for p in [Property::Abelian, Property::Nilpotent, Property::Regular] {
            let a = is_minimal_non(&l, p, &budget).unwrap();
            let b = is_minimal_non(&m, p, &budget).unwrap();
            assert_eq!(a.status, b.status, "{p} {:?}", l.labels());
        }
    }
}

#[test]
fn property_names() {
    for p in [Property::Abelian, Property::Nilpotent, Property::Regular] {
        assert_eq!(p.to_string().parse::<Property>().unwrap(), p);
    }
    assert!("solvable".parse::<Property>().is_err());
}
