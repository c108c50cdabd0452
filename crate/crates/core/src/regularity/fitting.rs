use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::lie::LieAlgebra;
use crate::linalg::{stable_image, stable_kernel, Subspace};

/// `L = L⁰ ∔ L¹` with respect to one element or an almost commuting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingDecomposition {
    pub l0: Subspace,
    pub l1: Subspace,
    pub elements: Vec<Vec<Scalar>>,
}

impl LieAlgebra {
    /// `L⁰(x) = ker (ad x)^n`, `L¹(x) = im (ad x)^n` with `n = dim L`, computed as
    /// the stable kernel and image.
    pub fn fitting(&self, x: &[Scalar]) -> Result<FittingDecomposition> {
        if x.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroElement);
        }
        let ad = self.ad(x)?;
        let d = FittingDecomposition { l0: stable_kernel(&ad), l1: stable_image(&ad), elements: vec![x.to_vec()] };
        d.check(self)?;
        Ok(d)
    }

    /// `x, y` almost commute when `(ad x)^m y = 0` for some `m`.
    pub fn almost_commute(&self, x: &[Scalar], y: &[Scalar]) -> Result<bool> {
        Ok(stable_kernel(&self.ad(x)?).contains(y))
    }

    /// `L⁰(X) = ∩ L⁰(x)` and `L¹(X) = Σ L¹(x)` for a pairwise almost commuting
    /// set `X` of nonzero elements.
    pub fn fitting_set(&self, xs: &[Vec<Scalar>]) -> Result<FittingDecomposition> {
        if xs.is_empty() {
            return Err(Error::Precondition("empty element set".into()));
        }
        for x in xs {
            for y in xs {
                if !self.almost_commute(x, y)? {
                    return Err(Error::NotAlmostCommuting);
                }
            }
        }
        let mut l0 = self.whole();
        let mut l1 = self.zero_subspace();
        for x in xs {
            let d = self.fitting(x)?;
            l0 = l0.intersection(&d.l0)?;
            l1 = l1.sum(&d.l1)?;
        }
        let d = FittingDecomposition { l0, l1, elements: xs.to_vec() };
        d.check(self)?;
        Ok(d)
    }
}

impl FittingDecomposition {
    /// Direct sum, `L⁰` a subalgebra, `[L⁰, L¹] ⊆ L¹`, and for each element
    /// `ad x` nilpotent on `L⁰` and invertible on `L¹`.
    pub fn check(&self, l: &LieAlgebra) -> Result<()> {
        let fail = |what: &str| Err(Error::Internal(format!("Fitting decomposition: {what}")));
        if self.l0.dim() + self.l1.dim() != l.dim() || !self.l0.intersection(&self.l1)?.is_zero() {
            return fail("not a direct sum");
        }
        if !l.is_subalgebra(&self.l0)? {
            return fail("L0 is not a subalgebra");
        }
        if !self.l1.contains_subspace(&l.bracket_subspaces(&self.l0, &self.l1)?) {
            return fail("[L0, L1] not in L1");
        }
        for x in &self.elements {
            let ad = l.ad(x)?;
            if !self.l0.restrict(&ad)?.is_nilpotent() {
                return fail("ad x not nilpotent on L0");
            }
            let on1 = self.l1.restrict(&ad)?;
            if on1.rank() != on1.rows() {
                return fail("ad x not invertible on L1");
            }
        }
        Ok(())
    }
}
