use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel, Matrix, Subspace};

use super::algebra::LieAlgebra;

impl LieAlgebra {
    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field(), self.dim())
    }

    pub fn span(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::span(self.field(), self.dim(), vectors)
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim() || s.field() != self.field() {
            return Err(Error::Dimension { expected: self.dim(), got: s.ambient() });
        }
        Ok(())
    }

    /// Intersection of the kernels of all `ad b_i`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = Matrix::zeros(self.field(), 0, n);
        for i in 0..n {
            stacked = stacked.vstack(self.ad_basis(i));
        }
        kernel(&stacked)
    }

    /// `[L, L]`.
    pub fn commutant(&self) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.brackets().into_iter().map(|(_, _, v)| v).collect();
        self.span(&vs)
    }

    pub fn centralizer(&self, x: &[Scalar]) -> Result<Subspace> {
        Ok(kernel(&self.ad(x)?))
    }

    /// `{y : [y, s] = 0 for all s in S}`.
    pub fn centralizer_of(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let mut stacked = Matrix::zeros(self.field(), 0, self.dim());
        for v in s.basis() {
            stacked = stacked.vstack(&self.ad(&v)?);
        }
        Ok(kernel(&stacked))
    }

    /// Largest `N` with `[S, N] ⊆ S`: for each basis vector `s` of `S`, the map
    /// `y -> [s, y] mod S` must vanish.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let n = self.dim();
        let q = n - s.dim();
        let mut stacked = Matrix::zeros(self.field(), 0, n);
        for v in s.basis() {
            let ad = self.ad(&v)?;
            let mut block = Matrix::zeros(self.field(), q, n);
            for j in 0..n {
                block.set_col(j, &s.quotient_coords(&ad.col(j)));
            }
            stacked = stacked.vstack(&block);
        }
        Ok(kernel(&stacked))
    }

    /// `[A, B]`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let (ab, bb) = (a.basis(), b.basis());
        let mut vs = Vec::with_capacity(ab.len() * bb.len());
        for x in &ab {
            for y in &bb {
                vs.push(self.bracket_unchecked(x, y));
            }
        }
        Ok(self.span(&vs))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_subspaces(s, s)?))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.check_ambient(s)?;
        Ok((0..self.dim()).all(|i| s.basis().iter().all(|v| s.contains(&self.ad_basis(i).mul_vec(v)))))
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[Vec<Scalar>]) -> Result<Subspace> {
        for g in gens {
            if g.len() != self.dim() {
                return Err(Error::Dimension { expected: self.dim(), got: g.len() });
            }
        }
        let mut cur = self.span(gens);
        loop {
            let mut vs = cur.basis();
            for v in cur.basis() {
                for i in 0..self.dim() {
                    vs.push(self.ad_basis(i).mul_vec(&v));
                }
            }
            let next = self.span(&vs);
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Smallest subalgebra containing `gens`.
    pub fn subalgebra_generated(&self, gens: &[Vec<Scalar>]) -> Result<Subspace> {
        for g in gens {
            if g.len() != self.dim() {
                return Err(Error::Dimension { expected: self.dim(), got: g.len() });
            }
        }
        let mut cur = self.span(gens);
        loop {
            let next = cur.sum(&self.bracket_subspaces(&cur, &cur)?)?;
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `L = L^1 ⊇ L^2 = [L, L] ⊇ L^3 = [L, L^2] ⊇ ...` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let whole = self.whole();
        let mut out = vec![whole.clone()];
        loop {
            let next = self.bracket_subspaces(&whole, out.last().unwrap()).expect("same ambient");
            if next.dim() == out.last().unwrap().dim() {
                return out;
            }
            out.push(next);
        }
    }

    /// `L ⊇ [L, L] ⊇ [[L, L], [L, L]] ⊇ ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.whole()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_subspaces(last, last).expect("same ambient");
            if next.dim() == last.dim() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_perfect(&self) -> bool {
        self.commutant().dim() == self.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::lie::algebra::labels;

    fn sl2() -> LieAlgebra {
        let f = Field::Q;
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        LieAlgebra::new(f, labels(&["e", "h", "f"]), vec![(0, 1, v(-2, 0, 0)), (0, 2, v(0, 1, 0)), (1, 2, v(0, 0, -2))])
            .unwrap()
    }

    fn h3() -> LieAlgebra {
        let f = Field::Q;
        LieAlgebra::new(f, labels(&["x", "y", "z"]), vec![(0, 1, vec![f.zero(), f.zero(), f.one()])]).unwrap()
    }

    #[test]
    fn queries() {
        let h = h3();
        assert_eq!(h.center(), h.span(&[h.basis_vector(2)]));
        let a = LieAlgebra::abelian(Field::Q, labels(&["a", "b"]));
        assert!(a.commutant().is_zero());
        let s = sl2();
        let e = s.span(&[s.basis_vector(0)]);
        assert_eq!(s.normalizer(&e).unwrap(), s.span(&[s.basis_vector(0), s.basis_vector(1)]));
        assert_eq!(s.centralizer(&s.basis_vector(1)).unwrap(), s.span(&[s.basis_vector(1)]));
        assert!(s.ideal_generated(&[s.basis_vector(0)]).unwrap().is_full());
        assert_eq!(s.subalgebra_generated(&[s.basis_vector(0), s.basis_vector(1)]).unwrap().dim(), 2);
        assert!(s.subalgebra_generated(&[s.basis_vector(0), s.basis_vector(2)]).unwrap().is_full());
    }

    #[test]
    fn series() {
        let h = h3();
        assert_eq!(h.lower_central_series().len(), 3);
        assert!(h.is_nilpotent());
        assert!(!sl2().is_solvable());
        let f = Field::Q;
        let r2 = LieAlgebra::new(f, labels(&["x", "y"]), vec![(0, 1, vec![f.zero(), f.one()])]).unwrap();
        assert!(r2.is_solvable() && !r2.is_nilpotent());
    }
}
