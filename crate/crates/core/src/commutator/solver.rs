use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::QuaternionAlgebra;
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::lie::{BilinearForm, LieAlgebra};
use crate::linalg::Subspace;
use crate::regularity::{Mode, SearchPoints};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Rank1Solver,
    Search,
}

/// `[z, y] = target`, rechecked when built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorWitness {
    pub target: Vec<Scalar>,
    pub z: Vec<Scalar>,
    pub y: Vec<Scalar>,
    pub provenance: Provenance,
}

impl CommutatorWitness {
    pub fn new(
        l: &LieAlgebra,
        target: Vec<Scalar>,
        z: Vec<Scalar>,
        y: Vec<Scalar>,
        provenance: Provenance,
    ) -> Result<CommutatorWitness> {
        if l.bracket(&z, &y)? != target {
            return Err(Error::Internal("commutator witness failed the recheck".into()));
        }
        Ok(CommutatorWitness { target, z, y, provenance })
    }
}

/// `uv - vu = x` in a quaternion algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuaternionCommutator {
    pub x: Vec<Scalar>,
    pub u: Vec<Scalar>,
    pub v: Vec<Scalar>,
}

/// `S^⊥ = {y : <s, y> = 0 for all s ∈ S}`.
pub fn orthogonal_complement(form: &BilinearForm, s: &Subspace) -> Result<Subspace> {
    form.perp(s)
}

fn checked_form(l: &LieAlgebra, form: &BilinearForm) -> Result<BilinearForm> {
    // recompute the flags against this algebra
    let f = BilinearForm::new(l, form.gram().clone())?;
    if !f.is_invariant() {
        return Err(Error::BadForm("not invariant"));
    }
    if !f.is_nondegenerate() {
        return Err(Error::BadForm("degenerate"));
    }
    Ok(f)
}

/// `L⁰(X)^⊥ = L¹(X)` for a nondegenerate invariant form and an almost
/// commuting set `X`.
pub fn check_fitting_orthogonality(l: &LieAlgebra, form: &BilinearForm, xs: &[Vec<Scalar>]) -> Result<bool> {
    let form = checked_form(l, form)?;
    let d = l.fitting_set(xs)?;
    Ok(form.perp(&d.l0)? == d.l1)
}

/// `z` with `[z, y] = x`, i.e. `ad(y) z = -x`.
fn solve_for_z(l: &LieAlgebra, y: &[Scalar], x: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let rhs: Vec<Scalar> = x.iter().map(|c| -c).collect();
    l.ad(y)?.solve(&rhs)
}

/// In a regular algebra of rank 1 with a nondegenerate invariant form,
/// `<x, y> = 0` gives `x ∈ (Ky)^⊥ = [L, y]`. Takes `y` as the first echelon
/// basis vector of `(Kx)^⊥` that gives a solvable system.
pub fn rank1_commutator(l: &LieAlgebra, form: &BilinearForm, x: &[Scalar]) -> Result<CommutatorWitness> {
    if x.len() != l.dim() {
        return Err(Error::Dimension { expected: l.dim(), got: x.len() });
    }
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroElement);
    }
    let form = checked_form(l, form)?;
    if l.rank()? != 1 {
        return Err(Error::Precondition("rank is not 1".into()));
    }
    let perp = form.perp(&l.span(&[x.to_vec()]))?;
    for y in perp.basis() {
        if let Some(z) = solve_for_z(l, &y, x)? {
            return CommutatorWitness::new(l, x.to_vec(), z, y, Provenance::Rank1Solver);
        }
    }
    Err(Error::Precondition("no y in (Kx)^⊥ with x ∈ [L, y]: not a regular rank-one algebra".into()))
}

/// A trace-zero `x ≠ 0` in a division quaternion algebra as `uv - vu`, solved
/// on the trace-zero Lie algebra with its Killing form and rechecked with the
/// associative product.
pub fn quaternion_commutator(q: &QuaternionAlgebra, x: &[Scalar], budget: &Budget) -> Result<QuaternionCommutator> {
    if x.len() != 4 {
        return Err(Error::Dimension { expected: 4, got: x.len() });
    }
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroElement);
    }
    if !q.reduced_trace(x).is_zero() {
        return Err(Error::Precondition("reduced trace is not zero".into()));
    }
    if !q.is_division(Mode::Certificate, budget)?.is_certified() {
        return Err(Error::Precondition("not certified as a division algebra".into()));
    }
    let l = q.trace_zero_lie();
    let w = rank1_commutator(&l, &l.killing_form(), &x[1..])?;
    let lift = |v: &[Scalar]| [vec![q.field().zero()], v.to_vec()].concat();
    let (u, v) = (lift(&w.z), lift(&w.y));
    let uv = q.mul(&u, &v);
    let vu = q.mul(&v, &u);
    let c: Vec<Scalar> = uv.iter().zip(&vu).map(|(a, b)| a - b).collect();
    if c != x {
        return Err(Error::Internal("quaternion commutator failed the recheck".into()));
    }
    Ok(QuaternionCommutator { x: x.to_vec(), u, v })
}

/// Tries `y` along the deterministic search schedule and solves `[z, y] =
/// target`. `None` says nothing about existence.
pub fn commutator_search(l: &LieAlgebra, target: &[Scalar], budget: &Budget) -> Result<Option<CommutatorWitness>> {
    if target.len() != l.dim() {
        return Err(Error::Dimension { expected: l.dim(), got: target.len() });
    }
    if !l.commutant().contains(target) {
        return Err(Error::Precondition("target is outside the commutant".into()));
    }
    if target.iter().all(|c| c.is_zero()) {
        let z = l.zero_vector();
        return CommutatorWitness::new(l, target.to_vec(), z.clone(), z, Provenance::Search).map(Some);
    }
    let candidates: Vec<Vec<Scalar>> =
        SearchPoints::new(l.field(), l.dim(), budget).filter(|y| y.iter().any(|c| !c.is_zero())).collect();
    let found = candidates.par_iter().find_map_first(|y| match solve_for_z(l, y, target) {
        Ok(Some(z)) => Some(Ok((z, y.clone()))),
        Ok(None) => None,
        Err(e) => Some(Err(e)),
    });
    match found.transpose()? {
        Some((z, y)) => CommutatorWitness::new(l, target.to_vec(), z, y, Provenance::Search).map(Some),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{gl, r2, sl, su2q};
    use crate::field::Field;

    #[test]
    fn complements() {
        let s = sl(Field::Q, 2).unwrap();
        let k = s.killing_form();
        let h = s.span(&[s.basis_vector(1)]);
        assert_eq!(orthogonal_complement(&k, &h).unwrap(), s.span(&[s.basis_vector(0), s.basis_vector(2)]));
        assert_eq!(orthogonal_complement(&k, &s.zero_subspace()).unwrap(), s.whole());
        let r = r2(Field::Q);
        let forms = r.invariant_forms();
        assert_eq!(forms.len(), 1);
        assert_eq!(orthogonal_complement(&forms[0], &r.span(&[r.basis_vector(1)])).unwrap(), r.whole());
    }

    #[test]
    fn fitting_orthogonality() {
        let s = sl(Field::Q, 2).unwrap();
        assert!(check_fitting_orthogonality(&s, &s.killing_form(), &[s.basis_vector(1)]).unwrap());
        let q = su2q();
        assert!(check_fitting_orthogonality(&q, &q.killing_form(), &[q.basis_vector(0)]).unwrap());
        let r = r2(Field::Q);
        let forms = r.invariant_forms();
        assert!(matches!(check_fitting_orthogonality(&r, &forms[0], &[r.basis_vector(0)]), Err(Error::BadForm(_))));
    }

    #[test]
    fn rank_one_solver() {
        let f = Field::Q;
        let q = su2q();
        let w = rank1_commutator(&q, &q.killing_form(), &q.basis_vector(0)).unwrap();
        assert_eq!(w.y, q.basis_vector(1));
        assert_eq!(w.z, vec![f.zero(), f.zero(), f.ratio(-1, 2).unwrap()]);
        let s = sl(f, 2).unwrap();
        let w = rank1_commutator(&s, &s.killing_form(), &s.basis_vector(1)).unwrap();
        assert_eq!((w.y, w.z), (s.basis_vector(0), vec![f.zero(), f.zero(), f.from_i64(-1)]));
    }

    #[test]
    fn quaternions() {
        let f = Field::Q;
        let b = Budget::default();
        let h = QuaternionAlgebra::from_i64(f, -1, -1).unwrap();
        let i = h.algebra().basis_vector(1);
        let c = quaternion_commutator(&h, &i, &b).unwrap();
        assert_eq!(c.u, vec![f.zero(), f.zero(), f.zero(), f.ratio(-1, 2).unwrap()]);
        assert_eq!(c.v, h.algebra().basis_vector(2));
        assert_eq!(quaternion_commutator(&h, &[f.zero(), f.zero(), f.zero(), f.zero()], &b), Err(Error::ZeroElement));
        assert!(matches!(quaternion_commutator(&h, &h.algebra().basis_vector(0), &b), Err(Error::Precondition(_))));
    }

    #[test]
    fn search() {
        let f = Field::Q;
        let b = Budget::default();
        let s = sl(f, 2).unwrap();
        let w = commutator_search(&s, &s.basis_vector(1), &b).unwrap().unwrap();
        assert_eq!((w.y, w.z), (s.basis_vector(0), vec![f.zero(), f.zero(), f.from_i64(-1)]));
        let g = gl(f, 2).unwrap();
        assert!(commutator_search(&g, &g.basis_vector(1), &b).unwrap().is_some());
        let a = crate::catalog::abelian(f, 2);
        assert!(commutator_search(&a, &a.zero_vector(), &b).unwrap().is_some());
        assert!(commutator_search(&a, &a.basis_vector(0), &b).is_err());
    }
}
