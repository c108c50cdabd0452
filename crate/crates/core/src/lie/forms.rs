use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel, LinearSystem, Matrix, Subspace};

use super::algebra::LieAlgebra;

/// Symmetric bilinear form on a Lie algebra, by its Gram matrix in the
/// algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    invariant: bool,
    nondegenerate: bool,
}

impl BilinearForm {
    /// Checks symmetry; the invariance flag is computed against `l` on all
    /// basis triples.
    pub fn new(l: &LieAlgebra, gram: Matrix) -> Result<BilinearForm> {
        if gram.rows() != l.dim() || gram.cols() != l.dim() {
            return Err(Error::Dimension { expected: l.dim(), got: gram.rows() });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let invariant = is_invariant(l, &gram);
        let nondegenerate = gram.rank() == l.dim();
        Ok(BilinearForm { gram, invariant, nondegenerate })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_invariant(&self) -> bool {
        self.invariant
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        let mut acc = self.gram.field().zero();
        for (a, b) in x.iter().zip(&gy) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `{y : <x, y> = 0 for all x}`.
    pub fn radical(&self) -> Subspace {
        kernel(&self.gram)
    }

    /// `{y : <s, y> = 0 for all s in S}`.
    pub fn perp(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: s.ambient() });
        }
        if s.is_zero() {
            return Ok(Subspace::full(self.gram.field(), self.dim()));
        }
        Ok(kernel(&s.basis_matrix().mul(&self.gram)))
    }
}

fn is_invariant(l: &LieAlgebra, g: &Matrix) -> bool {
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let bij = l.bracket_basis(i, j);
            for k in 0..n {
                let left = dot_col(bij, g, k);
                let right = dot_col(l.bracket_basis(j, k), g, i);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

// <v, b_k> = sum_m v_m G(m, k)
fn dot_col(v: &[Scalar], g: &Matrix, k: usize) -> Scalar {
    let mut acc = g.field().zero();
    for (m, x) in v.iter().enumerate() {
        if !x.is_zero() {
            acc += &(x * g.get(m, k));
        }
    }
    acc
}

impl LieAlgebra {
    /// `κ(b_i, b_j) = tr(ad b_i ad b_j)`.
    pub fn killing_form(&self) -> BilinearForm {
        let n = self.dim();
        let mut g = Matrix::zeros(self.field(), n, n);
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.ad_basis(i), self.ad_basis(j));
                let mut t = self.field().zero();
                for k in 0..n {
                    for m in 0..n {
                        let (x, y) = (a.get(k, m), b.get(m, k));
                        if !x.is_zero() && !y.is_zero() {
                            t += &(x * y);
                        }
                    }
                }
                g.set(i, j, t.clone());
                g.set(j, i, t);
            }
        }
        BilinearForm::new(self, g).expect("Killing form is symmetric")
    }

    /// Canonical basis of the space of symmetric invariant bilinear forms.
    pub fn invariant_forms(&self) -> Vec<BilinearForm> {
        let n = self.dim();
        let field = self.field();
        let idx = |a: usize, b: usize| {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            a * n - a * (a + 1) / 2 + b
        };
        let unknowns = n * (n + 1) / 2;
        let mut sys = LinearSystem::new(field, unknowns);
        let mut terms = Vec::new();
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if sys.rank() == unknowns {
                        break 'outer;
                    }
                    // sum_m c_ij^m g(m,k) - sum_m c_jk^m g(i,m) = 0
                    terms.clear();
                    for (m, c) in self.bracket_basis(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((idx(m, k), c.clone()));
                        }
                    }
                    for (m, c) in self.bracket_basis(j, k).iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((idx(i, m), -c));
                        }
                    }
                    sys.push_sparse(&terms);
                }
            }
        }
        sys.solutions()
            .into_iter()
            .map(|sol| {
                let mut g = Matrix::zeros(field, n, n);
                for a in 0..n {
                    for b in a..n {
                        g.set(a, b, sol[idx(a, b)].clone());
                        g.set(b, a, sol[idx(a, b)].clone());
                    }
                }
                BilinearForm { nondegenerate: g.rank() == n, gram: g, invariant: true }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub perfect: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
    pub center_dim: usize,
    pub commutant_dim: usize,
    /// Characteristic zero only.
    pub radical_dim: Option<usize>,
    pub semisimple: Option<bool>,
    pub killing_rank: usize,
}

impl LieAlgebra {
    pub fn structure_report(&self) -> StructureReport {
        let lcs = self.lower_central_series();
        let ds = self.derived_series();
        let nilpotent = lcs.last().unwrap().is_zero();
        let solvable = ds.last().unwrap().is_zero();
        let commutant = self.commutant();
        let killing = self.killing_form();
        let (radical_dim, semisimple) = if self.field().is_finite() {
            (None, None)
        } else {
            let rad = killing.perp(&commutant).expect("same ambient");
            (Some(rad.dim()), Some(killing.is_nondegenerate()))
        };
        StructureReport {
            dim: self.dim(),
            abelian: self.is_abelian(),
            nilpotent,
            solvable,
            perfect: commutant.dim() == self.dim(),
            nilpotency_class: nilpotent.then(|| lcs.len() - 1),
            derived_length: solvable.then(|| ds.len() - 1),
            center_dim: self.center().dim(),
            commutant_dim: commutant.dim(),
            radical_dim,
            semisimple,
            killing_rank: killing.rank(),
        }
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

    #[test]
    fn killing_of_sl2() {
        let k = sl2().killing_form();
        let g = k.gram();
        let f = Field::Q;
        assert_eq!(g.get(1, 1), &f.from_i64(8));
        assert_eq!(g.get(0, 2), &f.from_i64(4));
        assert_eq!(g.get(0, 1), &f.zero());
        assert!(k.is_invariant() && k.is_nondegenerate());
    }

    #[test]
    fn invariant_form_dimensions() {
        assert_eq!(sl2().invariant_forms().len(), 1);
        let f = Field::Q;
        assert_eq!(LieAlgebra::abelian(f, labels(&["a", "b", "c"])).invariant_forms().len(), 6);
        let r2 = LieAlgebra::new(f, labels(&["x", "y"]), vec![(0, 1, vec![f.zero(), f.one()])]).unwrap();
        let forms = r2.invariant_forms();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].gram(), &Matrix::from_i64(f, &[&[1, 0], &[0, 0]]));
        assert!(!forms[0].is_nondegenerate());
    }

    #[test]
    fn reports() {
        let r = sl2().structure_report();
        assert!(!r.solvable && r.semisimple == Some(true) && r.radical_dim == Some(0) && r.killing_rank == 3);
        let f = Field::Q;
        let h3 = LieAlgebra::new(f, labels(&["x", "y", "z"]), vec![(0, 1, vec![f.zero(), f.zero(), f.one()])]).unwrap();
        let r = h3.structure_report();
        assert_eq!((r.nilpotent, r.nilpotency_class, r.center_dim), (true, Some(2), 1));
    }
}
