//! Instance checks of the structural facts the library is built around.

use std::time::Instant;

use lielab::catalog::{self, QuaternionAlgebra};
use lielab::commutator::{self, Property};
use lielab::linalg::char_poly;
use lielab::regularity::{ad_char_coeffs, Mode};
use lielab::verdict::{CertificateKind, Status, Witness};
use lielab::{random_vector, Budget, Error, Field, LieAlgebra, Result};
use serde::Serialize;

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub claim: &'static str,
    pub status: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
pub struct SuiteResult {
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

type Check = fn(&Budget) -> Result<(bool, String)>;

fn q() -> Field {
    Field::Q
}

fn fp(p: u64) -> Field {
    Field::fp(p).expect("prime")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> (bool, String) {
    if got == want {
        (true, format!("{what} = {got:?}"))
    } else {
        (false, format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn all(parts: Vec<(bool, String)>) -> (bool, String) {
    let ok = parts.iter().all(|(b, _)| *b);
    let detail = parts.into_iter().filter(|(b, _)| !ok || !*b).map(|(_, d)| d).collect::<Vec<_>>().join("; ");
    (ok, if ok { "ok".into() } else { detail })
}

fn nilpotent_regular(l: &LieAlgebra, b: &Budget) -> Result<(bool, String)> {
    let r = l.rank_with(b)?;
    let v = l.is_regular_algebra(Mode::Search, b)?;
    Ok(all(vec![
        expect_eq("rank", r.rank, l.dim()),
        expect_eq("certificate", v.certificate, Some(CertificateKind::Structural)),
    ]))
}

fn factorization(l: &LieAlgebra, ideal_basis: &[Vec<lielab::Scalar>], b: &Budget) -> Result<(bool, String)> {
    let ideal = l.span(ideal_basis);
    let mut rng = lielab::rng(b.seed);
    let mut bad = 0;
    for _ in 0..50 {
        let x = random_vector(l.field(), l.dim(), 9, &mut rng);
        let ad = l.ad(&x)?;
        let whole = char_poly(&ad)?;
        let split = char_poly(&ideal.restrict(&ad)?)?.mul(&char_poly(&ideal.induced_on_quotient(&ad))?);
        bad += (whole != split) as usize;
    }
    let quotient = l.quotient(&ideal)?;
    let additive = l.rank_with(b)?.rank == l.relative_rank(&ideal, b)? + quotient.rank_with(b)?.rank;
    Ok(all(vec![expect_eq("factorization failures", bad, 0), expect_eq("rank additivity", additive, true)]))
}

const CHECKS: &[(&str, &str, Check)] = &[
    ("nilpotent-regular-heisenberg", "h3, h5: rank = dim, regular", |b| {
        let (a, d1) = nilpotent_regular(&catalog::heisenberg(q(), 1)?, b)?;
        let (c, d2) = nilpotent_regular(&catalog::heisenberg(q(), 2)?, b)?;
        Ok(all(vec![(a, d1), (c, d2)]))
    }),
    ("nilpotent-regular-strict-upper", "strictly upper 4x4 over Q and F5: rank = dim, regular", |b| {
        let (a, d1) = nilpotent_regular(&catalog::strict_upper(q(), 4)?, b)?;
        let (c, d2) = nilpotent_regular(&catalog::strict_upper(fp(5), 4)?, b)?;
        Ok(all(vec![(a, d1), (c, d2)]))
    }),
    ("subalgebra-heredity-su2q", "subalgebras of su2q generated by element pairs are regular", |b| {
        let l = catalog::su2q();
        let mut rng = lielab::rng(b.seed);
        let mut refuted = 0;
        for _ in 0..20 {
            let x = random_vector(q(), 3, 3, &mut rng);
            let y = random_vector(q(), 3, 3, &mut rng);
            let s = l.subalgebra_generated(&[x, y])?;
            if s.is_zero() {
                continue;
            }
            refuted += l.subalgebra(&s)?.is_regular_algebra(Mode::Certificate, b)?.is_refuted() as usize;
        }
        Ok(expect_eq("refuted subalgebras", refuted, 0))
    }),
    ("non-semisimple-regular-nilpotent-r2", "r2 is neither nilpotent nor semisimple, hence not regular", |b| {
        let v = catalog::r2(q()).is_regular_algebra(Mode::Search, b)?;
        Ok(expect_eq("status", v.status, Status::Refuted))
    }),
    ("char-poly-factorization-r2", "chi(ad x) = chi(ad_I x) chi(ad_L/I x), I = span(y)", |b| {
        let l = catalog::r2(q());
        factorization(&l, &[l.basis_vector(1)], b)
    }),
    ("char-poly-factorization-sl2-sum", "same for sl2 + sl2 with I the first summand", |b| {
        let s = catalog::sl(q(), 2)?;
        let l = s.direct_sum(&s)?;
        factorization(&l, &[l.basis_vector(0), l.basis_vector(1), l.basis_vector(2)], b)
    }),
    ("anisotropic-iff-nilpotent-free-sl2", "sl2(Q): both refuted by e", |b| {
        let l = catalog::sl(q(), 2)?;
        let a = l.is_anisotropic(Mode::Search, b)?;
        let n = l.is_nilpotent_free(Mode::Search, b)?;
        let e = l.basis_vector(0);
        Ok(all(vec![
            expect_eq("anisotropic witness", a.witness_element().map(|w| w.to_vec()), Some(e.clone())),
            expect_eq("nilpotent-free witness", n.witness_element().map(|w| w.to_vec()), Some(e)),
        ]))
    }),
    ("regular-non-nilpotent-anisotropic-su2q", "su2q: regular, not nilpotent, anisotropic", |b| {
        let l = catalog::su2q();
        Ok(all(vec![
            expect_eq("regular", l.is_regular_algebra(Mode::Certificate, b)?.status, Status::Certified),
            expect_eq("nilpotent", l.is_nilpotent(), false),
            expect_eq("anisotropic", l.is_anisotropic(Mode::Certificate, b)?.status, Status::Certified),
        ]))
    }),
    ("definite-a1-su2q", "a1 = 4(x1^2 + x2^2 + x3^2), regular by the definite form", |b| {
        let l = catalog::su2q();
        let g = l.generic_char_poly(b)?;
        let f = q();
        let want = (0..3).fold(lielab::mpoly::MultiPoly::zero(f, 3), |acc, i| {
            let v = lielab::mpoly::MultiPoly::var(f, 3, i);
            acc.add(&v.mul(&v).scale(&f.from_i64(4)))
        });
        let v = l.is_regular_algebra(Mode::Certificate, b)?;
        Ok(all(vec![
            expect_eq("a1", g.coeff(1) == &want, true),
            expect_eq("certificate", v.certificate, Some(CertificateKind::DefiniteQuadraticForm)),
        ]))
    }),
    ("negative-sl2-q", "sl2(Q) not regular, witness e", |b| {
        let l = catalog::sl(q(), 2)?;
        let v = l.is_regular_algebra(Mode::Search, b)?;
        Ok(expect_eq("witness", v.witness_element().map(|w| w.to_vec()), Some(l.basis_vector(0))))
    }),
    ("negative-sl2-f5", "sl2(F5) not regular by exhaustive scan", |b| {
        let v = catalog::sl(fp(5), 2)?.is_regular_algebra(Mode::Exhaustive, b)?;
        Ok(all(vec![
            expect_eq("status", v.status, Status::Refuted),
            expect_eq("points", v.evidence.points_checked, 124),
        ]))
    }),
    ("negative-quaternion-f5", "(-1,-1) over F5 has zero divisors", |b| {
        let h = QuaternionAlgebra::from_i64(fp(5), -1, -1)?;
        let v = h.is_division(Mode::Exhaustive, b)?;
        let ok = match &v.witness {
            Some(Witness::Pair { x, y }) => h.mul(x, y).iter().all(|c| c.is_zero()),
            _ => false,
        };
        Ok(expect_eq("zero divisor pair", ok, true))
    }),
    ("fitting-orthogonality-sl2-killing", "L0(x)^perp = L1(x) for each basis element", |_| {
        let l = catalog::sl(q(), 2)?;
        let k = l.killing_form();
        let ok = (0..3)
            .map(|i| commutator::check_fitting_orthogonality(&l, &k, &[l.basis_vector(i)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(expect_eq("all equal", ok.iter().all(|&b| b), true))
    }),
    ("fitting-orthogonality-su2q-killing", "L0(x)^perp = L1(x) for each basis element", |_| {
        let l = catalog::su2q();
        let k = l.killing_form();
        let ok = (0..3)
            .map(|i| commutator::check_fitting_orthogonality(&l, &k, &[l.basis_vector(i)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(expect_eq("all equal", ok.iter().all(|&b| b), true))
    }),
    ("rank-one-commutator-su2q", "every nonzero x in su2q is [z, y] with <x, y> = 0", |b| {
        let l = catalog::su2q();
        let k = l.killing_form();
        let mut rng = lielab::rng(b.seed);
        let mut n = 0;
        while n < 20 {
            let x = random_vector(q(), 3, 9, &mut rng);
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let w = commutator::rank1_commutator(&l, &k, &x)?;
            if l.bracket(&w.z, &w.y)? != x || !k.eval(&x, &w.y).is_zero() {
                return Ok((false, format!("bad witness for {x:?}")));
            }
            n += 1;
        }
        Ok((true, "20 targets".into()))
    }),
    ("quaternion-commutator", "trace-zero quaternions in (-1,-1) over Q are commutators uv - vu", |b| {
        let h = QuaternionAlgebra::from_i64(q(), -1, -1)?;
        let mut rng = lielab::rng(b.seed);
        let mut n = 0;
        while n < 20 {
            let mut x = random_vector(q(), 4, 9, &mut rng);
            x[0] = q().zero();
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let c = commutator::quaternion_commutator(&h, &x, b)?;
            let uv = h.mul(&c.u, &c.v);
            let vu = h.mul(&c.v, &c.u);
            if uv.iter().zip(&vu).map(|(a, b)| a - b).collect::<Vec<_>>() != x {
                return Ok((false, format!("uv - vu != x for {x:?}")));
            }
            n += 1;
        }
        Ok((true, "20 targets".into()))
    }),
    ("psl-pgl-dimensions", "dim psl3(F3) = 7, dim pgl3(F3) = 8, [pgl, pgl] in psl", |_| {
        let f = fp(3);
        let g = catalog::pgl(f, 3)?;
        Ok(all(vec![
            expect_eq("dim psl", catalog::psl(f, 3)?.dim(), 7),
            expect_eq("dim pgl", g.dim(), 8),
            expect_eq("[pgl,pgl] in psl", catalog::psl_in_pgl(f, 3)?.contains_subspace(&g.commutant()), true),
        ]))
    }),
    ("derivations-psl3-f3", "Der(psl3(F3)) has dimension 8", |b| {
        let d = catalog::psl(fp(3), 3)?.derivation_algebra_with(b.derivation_dim_fp)?;
        Ok(expect_eq("dim Der", d.maps.len(), 8))
    }),
    ("h2-psl3-f3", "H2(psl3(F3)) has dimension 1", |_| {
        Ok(expect_eq("dim H2", catalog::psl(fp(3), 3)?.h2_trivial().dim(), 1))
    }),
    ("h2-psl5-f5", "H2(psl5(F5)) has dimension 1", |_| {
        Ok(expect_eq("dim H2", catalog::psl(fp(5), 5)?.h2_trivial().dim(), 1))
    }),
    ("h2-small", "H2(sl2(Q)) = 0, H2(h3) = 2", |_| {
        Ok(all(vec![
            expect_eq("sl2", catalog::sl(q(), 2)?.h2_trivial().dim(), 0),
            expect_eq("h3", catalog::heisenberg(q(), 1)?.h2_trivial().dim(), 2),
        ]))
    }),
    ("central-extension-psl3-f3", "sl3(F3) as extension of psl3(F3): perfect, center of dim 1", |_| {
        let f = fp(3);
        let s = catalog::sl(f, 3)?;
        let (p, omega) = s.extension_cocycle(&s.span(&[catalog::sl_identity(f, 3)]))?;
        let e = p.central_extension(&omega)?;
        Ok(all(vec![expect_eq("perfect", e.is_perfect(), true), expect_eq("center", e.center().dim(), 1)]))
    }),
    ("minimal-non-regular-r2-f3", "r2(F3): minimal non-regular, solvable minimal non-nilpotent", |b| {
        let l = catalog::r2(fp(3));
        Ok(all(vec![
            expect_eq(
                "minimal non-regular",
                commutator::is_minimal_non(&l, Property::Regular, b)?.status,
                Status::Certified,
            ),
            expect_eq(
                "minimal non-nilpotent",
                commutator::is_minimal_non(&l, Property::Nilpotent, b)?.status,
                Status::Certified,
            ),
            expect_eq("solvable", l.is_solvable(), true),
        ]))
    }),
    ("split-central-extension-su2q", "su2q + Kc not regular with central witness; su2q regular", |b| {
        let l = catalog::su2q_plus_center();
        let v = l.is_regular_algebra(Mode::Search, b)?;
        let central = v.witness_element().map(|w| l.center().contains(w)).unwrap_or(false);
        let s = l.subalgebra(&l.span(&[l.basis_vector(0), l.basis_vector(1), l.basis_vector(2)]))?;
        Ok(all(vec![
            expect_eq("central witness", central, true),
            expect_eq("su2q", s.is_regular_algebra(Mode::Certificate, b)?.status, Status::Certified),
        ]))
    }),
    ("enumeration-dim2-f2", "4 tables of dim 2 over F2, exactly 1 regular", |b| {
        let mut regular = 0;
        let mut err = None;
        let stats = catalog::enumerate_tables(fp(2), 2, b, |_, l| match l.is_regular_algebra(Mode::Exhaustive, b) {
            Ok(v) => regular += v.is_certified() as usize,
            Err(e) => err = Some(e),
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        Ok(all(vec![expect_eq("tables", stats.valid, 4), expect_eq("regular", regular, 1)]))
    }),
    ("coefficients-sl2-h", "chi(ad h) = t^3 - 4t in sl2(Q)", |_| {
        let l = catalog::sl(q(), 2)?;
        let c = ad_char_coeffs(&l, &l.basis_vector(1))?;
        let f = q();
        Ok(expect_eq("coefficients", c, vec![f.zero(), f.from_i64(-4), f.zero(), f.one()]))
    }),
];

pub fn run_suite(budget: &Budget, timings: bool) -> SuiteResult {
    let mut checks = Vec::new();
    for (name, claim, check) in CHECKS {
        let start = Instant::now();
        let (status, detail) = match check(budget) {
            Ok((true, d)) => ("PASS", d),
            Ok((false, d)) => ("FAIL", d),
            Err(e @ Error::Budget(_)) => ("SKIP", e.to_string()),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        let elapsed_ms = timings.then(|| start.elapsed().as_millis());
        checks.push(CheckResult { name, claim, status, detail, elapsed_ms });
    }
    let count = |s: &str| checks.iter().filter(|c| c.status == s).count();
    let (passed, failed, skipped) = (count("PASS"), count("FAIL"), count("SKIP"));
    SuiteResult { checks, passed, failed, skipped }
}
