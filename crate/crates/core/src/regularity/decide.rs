use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::lie::{index_vector, LieAlgebra};
use crate::linalg::{diagonalize_quadratic, min_poly};
use crate::mpoly::MultiPoly;
use crate::poly::is_squarefree;
use crate::verdict::{CertificateKind, Evidence, Verdict, Witness};

use super::generic::{ad_char_coeffs, zero_multiplicity};
use super::points::SearchPoints;

/// How a property quantified over all nonzero elements is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every projective point of a finite field algebra.
    Exhaustive,
    /// Deterministic points of bounded height, then seeded random points.
    Search,
    /// A structural or quadratic-form certificate; otherwise a search.
    Certificate,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "search" => Ok(Mode::Search),
            "certificate" => Ok(Mode::Certificate),
            _ => Err(Error::InvalidParameters(format!("unknown mode '{s}'"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Search => "search",
            Mode::Certificate => "certificate",
        })
    }
}

fn is_zero_vec(x: &[Scalar]) -> bool {
    x.iter().all(|c| c.is_zero())
}

/// `±q` positive definite over the reals, for `q` a quadratic form over Q.
pub fn is_definite(q: &MultiPoly) -> Result<bool> {
    if q.field().is_finite() || q.is_zero() || !q.is_homogeneous_of(2) {
        return Ok(false);
    }
    let d = diagonalize_quadratic(&q.quadratic_gram()?)?;
    let signs: Vec<Option<Ordering>> = d.iter().map(|c| c.signum()).collect();
    Ok(signs.iter().all(|s| *s == Some(Ordering::Greater)) || signs.iter().all(|s| *s == Some(Ordering::Less)))
}

impl LieAlgebra {
    fn regular_for_rank(&self, x: &[Scalar], rank: usize) -> Result<bool> {
        Ok(zero_multiplicity(&ad_char_coeffs(self, x)?) == rank)
    }

    /// `a_rk(x) ≠ 0`, equivalently `dim L⁰(x) = rk L`; both are computed and
    /// must agree.
    pub fn is_regular_element(&self, x: &[Scalar]) -> Result<bool> {
        if x.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: x.len() });
        }
        if is_zero_vec(x) {
            return Err(Error::ZeroElement);
        }
        let rank = self.rank()?;
        let regular = self.regular_for_rank(x, rank)?;
        let l0 = self.fitting(x)?.l0.dim();
        if regular != (l0 == rank) {
            return Err(Error::Internal(format!("a_rank(x) and dim L0(x) = {l0} disagree for rank {rank}")));
        }
        Ok(regular)
    }

    /// Minimal polynomial of `ad x` squarefree.
    pub fn is_semisimple_ad(&self, x: &[Scalar]) -> Result<bool> {
        is_squarefree(&min_poly(&self.ad(x)?)?)
    }

    /// `ad x` nilpotent and `x` not central.
    fn is_nilpotent_noncentral(&self, x: &[Scalar]) -> Result<bool> {
        let ad = self.ad(x)?;
        Ok(!ad.is_zero() && ad.is_nilpotent())
    }

    /// Every nonzero element regular.
    pub fn is_regular_algebra(&self, mode: Mode, budget: &Budget) -> Result<Verdict> {
        let n = self.dim();
        if n == 0 {
            return Ok(Verdict::certified(CertificateKind::Structural, Evidence::note("zero algebra")));
        }
        let rank = self.rank_with(budget)?.rank;
        if rank == n {
            return Ok(Verdict::certified(
                CertificateKind::Structural,
                Evidence::note("rank = dim: nilpotent, every element regular"),
            ));
        }
        if mode == Mode::Certificate {
            if let Some(v) = self.definite_certificate(rank, budget)? {
                return Ok(v);
            }
        }
        let verdict = self.scan(mode, budget, |x| Ok(!self.regular_for_rank(x, rank)?))?;
        if let Some(x) = verdict.witness_element() {
            if self.is_regular_element(x)? {
                return Err(Error::Internal("regularity witness failed the recheck".into()));
            }
        }
        Ok(verdict)
    }

    /// `a_rk` a definite quadratic form: it then vanishes only at 0.
    fn definite_certificate(&self, rank: usize, budget: &Budget) -> Result<Option<Verdict>> {
        if self.field().is_finite() || self.dim() != rank + 2 {
            return Ok(None);
        }
        let g = match self.generic_char_poly(budget) {
            Ok(g) => g,
            Err(Error::Budget(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        Ok(is_definite(g.coeff(rank))?.then(|| {
            Verdict::certified(
                CertificateKind::DefiniteQuadraticForm,
                Evidence::note(format!("a_{rank} is a definite quadratic form")),
            )
        }))
    }

    /// For `dim 3`, rank 1 and `a_2 ≡ 0`: `χ_{ad x} = t(t² + a_1(x))`, squarefree
    /// whenever `a_1(x) ≠ 0`, which a definite `a_1` guarantees for `x ≠ 0`.
    fn anisotropy_certificate(&self, budget: &Budget) -> Result<Option<Verdict>> {
        if self.field().is_finite() || self.dim() != 3 || self.rank_with(budget)?.rank != 1 {
            return Ok(None);
        }
        let g = self.generic_char_poly(budget)?;
        if !g.coeff(2).is_zero() || !is_definite(g.coeff(1))? {
            return Ok(None);
        }
        Ok(Some(Verdict::certified(
            CertificateKind::DefiniteQuadraticForm,
            Evidence::note("dim 3, a_2 = 0 and a_1 definite: every nonzero ad x is semisimple"),
        )))
    }

    /// Every nonzero element has semisimple `ad`.
    pub fn is_anisotropic(&self, mode: Mode, budget: &Budget) -> Result<Verdict> {
        if self.is_abelian() {
            return Ok(Verdict::certified(CertificateKind::Structural, Evidence::note("abelian: every ad is 0")));
        }
        if mode == Mode::Certificate {
            if let Some(v) = self.anisotropy_certificate(budget)? {
                return Ok(v);
            }
        }
        let verdict = self.scan(mode, budget, |x| Ok(!self.is_semisimple_ad(x)?))?;
        if let Some(x) = verdict.witness_element() {
            if self.is_semisimple_ad(x)? {
                return Err(Error::Internal("anisotropy witness failed the recheck".into()));
            }
        }
        Ok(verdict)
    }

    /// Every element with nilpotent `ad` is central.
    pub fn is_nilpotent_free(&self, mode: Mode, budget: &Budget) -> Result<Verdict> {
        if self.is_abelian() {
            return Ok(Verdict::certified(CertificateKind::Structural, Evidence::note("abelian: everything central")));
        }
        if mode == Mode::Certificate {
            // semisimple and nilpotent forces ad x = 0
            if let Some(v) = self.anisotropy_certificate(budget)? {
                return Ok(v);
            }
        }
        let verdict = self.scan(mode, budget, |x| self.is_nilpotent_noncentral(x))?;
        if let Some(x) = verdict.witness_element() {
            if !self.is_nilpotent_noncentral(x)? {
                return Err(Error::Internal("nilpotent-freeness witness failed the recheck".into()));
            }
        }
        Ok(verdict)
    }

    /// Looks for a nonzero `x` with `bad(x)`; the predicate must be invariant
    /// under nonzero scaling so that projective points suffice.
    fn scan<F>(&self, mode: Mode, budget: &Budget, bad: F) -> Result<Verdict>
    where
        F: Fn(&[Scalar]) -> Result<bool> + Sync,
    {
        let n = self.dim();
        let field = self.field();
        let exhaustive = match (mode, field.order()) {
            (Mode::Exhaustive, None) => return Err(Error::Unsupported("exhaustive mode needs a finite field".into())),
            (Mode::Exhaustive, Some(q)) => {
                let total = q.checked_pow(n as u32).filter(|&t| t <= budget.exhaustive_points);
                Some((q, total.ok_or_else(|| Error::Budget(format!("{q}^{n} points exceed the exhaustive budget")))?))
            }
            _ => None,
        };
        if let Some((q, total)) = exhaustive {
            // last nonzero coordinate 1: one representative per line
            let found = (1..total).into_par_iter().find_map_first(|idx| {
                let v = index_vector(field, q, n, idx);
                if !v.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_one()) {
                    return None;
                }
                match bad(&v) {
                    Ok(true) => Some(Ok(v)),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            });
            let evidence = Evidence { points_checked: total - 1, ..Evidence::default() };
            return Ok(match found.transpose()? {
                Some(x) => Verdict::refuted(Witness::Element { x }, evidence),
                None => Verdict::certified(CertificateKind::Exhaustive, evidence),
            });
        }
        let mut points = SearchPoints::new(field, n, budget);
        let batch: Vec<Vec<Scalar>> = points.by_ref().filter(|x| !is_zero_vec(x)).collect();
        let found = batch.par_iter().find_map_first(|x| match bad(x) {
            Ok(true) => Some(Ok(x.clone())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        });
        let evidence = Evidence {
            points_checked: points.visited_points,
            random_trials: points.visited_trials,
            search_height: Some(budget.search_height),
            seed: Some(budget.seed),
            note: None,
        };
        Ok(match found.transpose()? {
            Some(x) => Verdict::refuted(Witness::Element { x }, evidence),
            None => Verdict::inconclusive(evidence),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::lie::labels;
    use crate::verdict::Status;

    fn sl2(f: Field) -> LieAlgebra {
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        LieAlgebra::new(f, labels(&["e", "h", "f"]), vec![(0, 1, v(-2, 0, 0)), (0, 2, v(0, 1, 0)), (1, 2, v(0, 0, -2))])
            .unwrap()
    }

    // trace-zero quaternions over Q: [i,j] = 2k, [j,k] = 2i, [k,i] = 2j
    fn su2() -> LieAlgebra {
        let f = Field::Q;
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        LieAlgebra::new(f, labels(&["i", "j", "k"]), vec![(0, 1, v(0, 0, 2)), (0, 2, v(0, -2, 0)), (1, 2, v(2, 0, 0))])
            .unwrap()
    }

    #[test]
    fn regular_elements() {
        let l = sl2(Field::Q);
        assert!(l.is_regular_element(&l.basis_vector(1)).unwrap());
        assert!(!l.is_regular_element(&l.basis_vector(0)).unwrap());
        assert_eq!(l.is_regular_element(&l.zero_vector()), Err(Error::ZeroElement));
    }

    #[test]
    fn regular_algebras() {
        let b = Budget::default();
        let v = su2().is_regular_algebra(Mode::Certificate, &b).unwrap();
        assert_eq!(v.certificate, Some(CertificateKind::DefiniteQuadraticForm));
        let f5 = Field::fp(5).unwrap();
        let v = sl2(f5).is_regular_algebra(Mode::Exhaustive, &b).unwrap();
        assert_eq!(v.witness_element().unwrap(), &[f5.one(), f5.zero(), f5.zero()][..]);
        assert_eq!(su2().is_regular_algebra(Mode::Search, &b).unwrap().status, Status::Inconclusive);
        assert!(matches!(su2().is_regular_algebra(Mode::Exhaustive, &b), Err(Error::Unsupported(_))));
        assert!("bogus".parse::<Mode>().is_err());
    }

    #[test]
    fn anisotropy() {
        let b = Budget::default();
        assert!(su2().is_semisimple_ad(&su2().basis_vector(0)).unwrap());
        assert!(!sl2(Field::Q).is_semisimple_ad(&sl2(Field::Q).basis_vector(0)).unwrap());
        assert!(su2().is_anisotropic(Mode::Certificate, &b).unwrap().is_certified());
        assert!(su2().is_nilpotent_free(Mode::Certificate, &b).unwrap().is_certified());
        let l = sl2(Field::Q);
        let v = l.is_anisotropic(Mode::Search, &b).unwrap();
        assert_eq!(v.witness_element().unwrap(), &l.basis_vector(0)[..]);
        let v = l.is_nilpotent_free(Mode::Certificate, &b).unwrap();
        assert_eq!(v.witness_element().unwrap(), &l.basis_vector(0)[..]);
    }
}
