use rayon::prelude::*;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel, min_poly, Matrix, Subspace};
use crate::poly::is_irreducible_small;
use crate::verdict::{CertificateKind, Evidence, Verdict, Witness};

use super::algebra::LieAlgebra;

fn ideal_witness(l: &LieAlgebra, s: &Subspace, evidence: Evidence) -> Verdict {
    debug_assert!(l.is_ideal(s).unwrap() && s.dim() < l.dim());
    Verdict::refuted(Witness::Subspace { basis: s.basis() }, evidence)
}

impl LieAlgebra {
    /// Simplicity: non-abelian with no ideals besides `0` and `L`.
    ///
    /// Over a finite field small enough, every projective point generates an
    /// ideal that is checked to be `L`. Over Q, a nondegenerate Killing form
    /// makes `L` semisimple, and then `L` is simple exactly when its centroid is
    /// a field, which is tested through the minimal polynomial of a centroid
    /// element.
    pub fn is_simple(&self, budget: &Budget) -> Result<Verdict> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::Precondition("simplicity of the zero algebra".into()));
        }
        let commutant = self.commutant();
        if commutant.dim() < n {
            if commutant.is_zero() {
                // abelian: a proper ideal exists only when n > 1, else the zero
                // commutant is the obstruction
                let w = if n > 1 { self.span(&[self.basis_vector(0)]) } else { commutant };
                return Ok(Verdict::refuted(Witness::Subspace { basis: w.basis() }, Evidence::note("abelian")));
            }
            return Ok(ideal_witness(self, &commutant, Evidence::note("commutant is a proper ideal")));
        }
        let center = self.center();
        if !center.is_zero() {
            return Ok(ideal_witness(self, &center, Evidence::note("center is a proper ideal")));
        }
        match self.field().order() {
            Some(q) => self.is_simple_exhaustive(q, budget),
            None => Ok(self.is_simple_rational(budget)),
        }
    }

    fn is_simple_exhaustive(&self, q: u64, budget: &Budget) -> Result<Verdict> {
        let n = self.dim();
        let total = (q as f64).powi(n as i32);
        if total > budget.exhaustive_points as f64 {
            return Ok(Verdict::inconclusive(Evidence::note(format!(
                "perfect and centerless; {q}^{n} points exceed the exhaustive budget"
            ))));
        }
        let field = self.field();
        let total = q.pow(n as u32);
        // points whose last nonzero coordinate is 1 represent every line once
        let found = (1..total).into_par_iter().find_first(|&idx| {
            let v = index_vector(field, q, n, idx);
            if !v.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_one()) {
                return false;
            }
            self.ideal_generated(&[v]).map(|s| s.dim() < n).unwrap_or(false)
        });
        let evidence = Evidence { points_checked: total - 1, ..Evidence::default() };
        Ok(match found {
            Some(idx) => {
                let s = self.ideal_generated(&[index_vector(field, q, n, idx)])?;
                ideal_witness(self, &s, evidence)
            }
            None => Verdict::certified(CertificateKind::Exhaustive, evidence),
        })
    }

    fn is_simple_rational(&self, budget: &Budget) -> Verdict {
        let n = self.dim();
        let killing = self.killing_form();
        if !killing.is_nondegenerate() {
            let rad = killing.radical();
            // the radical of the Killing form is an ideal; perfect => proper
            if rad.dim() < n {
                return ideal_witness(self, &rad, Evidence::note("Killing radical is a proper ideal"));
            }
            return Verdict::inconclusive(Evidence::note("Killing form vanishes on a perfect algebra"));
        }
        let centroid = self.centroid();
        let d = centroid.dim();
        if d == 1 {
            return Verdict::certified(CertificateKind::Structural, Evidence::note("semisimple with centroid K"));
        }
        let mut rng = crate::rng(budget.seed);
        let tries = 8;
        for _ in 0..tries {
            let phi = random_combination(&centroid.maps, &mut rng);
            let mu = match min_poly(&phi) {
                Ok(m) => m,
                Err(_) => continue,
            };
            // a rational root r splits off the proper ideal ker(φ - r)
            if let Some(r) = mu.rational_roots().into_iter().next() {
                if mu.degree() != Some(1) {
                    let shifted = phi.sub(&Matrix::identity(self.field(), n).scale(&r));
                    let ideal = kernel(&shifted);
                    if ideal.dim() > 0 && ideal.dim() < n && self.is_ideal(&ideal).unwrap_or(false) {
                        return ideal_witness(
                            self,
                            &ideal,
                            Evidence::note("centroid element with a rational eigenvalue"),
                        );
                    }
                }
            }
            if mu.degree() == Some(d) {
                match is_irreducible_small(&mu) {
                    Some(true) => {
                        return Verdict::certified(
                            CertificateKind::Structural,
                            Evidence::note(format!("centroid is a field of degree {d}")),
                        )
                    }
                    Some(false) => {}
                    None => {
                        return Verdict::inconclusive(Evidence::note(format!(
                            "centroid of dimension {d}: irreducibility beyond degree 4"
                        )))
                    }
                }
            }
        }
        Verdict::inconclusive(Evidence {
            random_trials: tries,
            seed: Some(budget.seed),
            note: Some(format!("centroid of dimension {d} not decided")),
            ..Evidence::default()
        })
    }
}

fn random_combination(maps: &[Matrix], rng: &mut rand_chacha::ChaCha8Rng) -> Matrix {
    use rand::Rng;
    let field = maps[0].field();
    let mut acc = Matrix::zeros(field, maps[0].rows(), maps[0].cols());
    for m in maps {
        acc = acc.add(&m.scale(&field.from_i64(rng.gen_range(-20..=20))));
    }
    acc
}

/// Vector whose coordinates are the base-`q` digits of `idx`, coordinate 0
/// least significant.
pub fn index_vector(field: crate::field::Field, q: u64, n: usize, mut idx: u64) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(field.element(idx % q));
        idx /= q;
    }
    v
}
