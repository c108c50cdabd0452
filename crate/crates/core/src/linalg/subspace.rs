use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

use super::matrix::Matrix;

/// A subspace of `K^n`, stored as its reduced row echelon basis. Two
/// subspaces are equal exactly when their representations are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient, "ambient dimension");
        Subspace::from_row_matrix(&m)
    }

    pub fn from_row_matrix(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let basis = if rows.is_empty() {
            Matrix::zeros(m.field(), 0, m.cols())
        } else {
            Matrix::from_rows(m.field(), rows).unwrap()
        };
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Standard basis vectors `e_i` for the given indices.
    pub fn coordinate(field: Field, ambient: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = idx.iter().map(|&i| unit(field, ambient, i)).collect();
        Subspace::span(field, ambient, &vs)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (row, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(row).iter().enumerate() {
                if !x.is_zero() {
                    r[j] -= &(ci * x);
                }
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Linear combination of the echelon basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![self.field().zero(); self.ambient];
        for (row, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(row).iter().enumerate() {
                v[j] += &(c * x);
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::from_row_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        // a A = b B  <=>  [A^T | -B^T] (a, b) = 0
        let (da, db) = (self.dim(), other.dim());
        let field = self.field();
        let mut sys = Matrix::zeros(field, self.ambient, da + db);
        for j in 0..self.ambient {
            for i in 0..da {
                sys.set(j, i, self.basis.get(i, j).clone());
            }
            for i in 0..db {
                sys.set(j, da + i, -other.basis.get(i, j));
            }
        }
        let vs: Vec<Vec<Scalar>> = sys.null_vectors().into_iter().map(|k| self.combine(&k[..da])).collect();
        Ok(Subspace::span(field, self.ambient, &vs))
    }

    /// Standard basis vectors completing `self` to the ambient space (the
    /// non-pivot coordinates, ascending).
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn quotient_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field();
        self.complement_indices().into_iter().map(|i| unit(f, self.ambient, i)).collect()
    }

    /// Coordinates of the class of `v` modulo `self` with respect to
    /// [`Subspace::quotient_basis`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(row).iter().enumerate() {
                if !x.is_zero() {
                    r[j] -= &(&c * x);
                }
            }
        }
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.basis().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vs)
    }

    /// Matrix of `m` restricted to this (`m`-invariant) subspace, in the echelon
    /// basis. Errors if the subspace is not invariant.
    pub fn restrict(&self, m: &Matrix) -> Result<Matrix> {
        let d = self.dim();
        let mut r = Matrix::zeros(self.field(), d, d);
        for (j, b) in self.basis().iter().enumerate() {
            let img = m.mul_vec(b);
            let c = self.coords(&img).ok_or_else(|| Error::Precondition("subspace is not invariant".into()))?;
            r.set_col(j, &c);
        }
        Ok(r)
    }

    /// Matrix induced by `m` on the quotient `K^n / self` (which must be
    /// `m`-invariant).
    pub fn induced_on_quotient(&self, m: &Matrix) -> Matrix {
        let reps = self.quotient_basis();
        let d = reps.len();
        let mut r = Matrix::zeros(self.field(), d, d);
        for (j, b) in reps.iter().enumerate() {
            r.set_col(j, &self.quotient_coords(&m.mul_vec(b)));
        }
        r
    }
}

/// `∩ im m^k`: the largest subspace on which `m` is invertible.
pub fn stable_image(m: &Matrix) -> Subspace {
    let mut v = Subspace::full(m.field(), m.cols());
    loop {
        let w = v.image_under(m);
        if w.dim() == v.dim() {
            return v;
        }
        v = w;
    }
}

/// `∪ ker m^k`, grown one preimage at a time so entries stay reduced.
pub fn stable_kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let mut k = Subspace::zero(m.field(), n);
    loop {
        if k.is_full() {
            return k;
        }
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| k.quotient_coords(&m.col(j))).collect();
        let next = kernel(&Matrix::from_cols(m.field(), n - k.dim(), &cols));
        if next.dim() == k.dim() {
            return k;
        }
        k = next;
    }
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.cols(), &m.null_vectors())
}

/// Column space.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_row_matrix(&m.transpose())
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kernel_and_image_examples() {
        let f = Field::Q;
        let adh = Matrix::from_i64(f, &[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
        assert_eq!(kernel(&adh), Subspace::coordinate(f, 3, &[1]));
        assert!(image(&Matrix::zeros(f, 3, 3)).is_zero());
        assert_eq!(image(&adh), Subspace::coordinate(f, 3, &[0, 2]));
    }

    #[test]
    fn sum_intersection_quotient() {
        let f = Field::Q;
        let a = Subspace::coordinate(f, 3, &[0]);
        let b = Subspace::coordinate(f, 3, &[2]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
        let h = Subspace::coordinate(f, 3, &[1]);
        assert_eq!(h.quotient_basis(), vec![unit(f, 3, 0), unit(f, 3, 2)]);
        assert!(a.sum(&Subspace::zero(f, 4)).is_err());
    }

    #[test]
    fn zero_dimensional_is_legal() {
        let f = Field::Q;
        let z = Matrix::zeros(f, 0, 0);
        assert!(kernel(&z).is_zero());
        assert!(image(&z).is_zero());
        assert_eq!(Subspace::full(f, 0), Subspace::zero(f, 0));
    }

    fn mat(field: Field) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
            prop::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                let rows = v.chunks(c).map(|row| row.iter().map(|&x| field.from_i64(x)).collect()).collect();
                Matrix::from_rows(field, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in mat(Field::Q)) {
            prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), m.cols());
        }

        #[test]
        fn rank_nullity_mod_p(m in mat(Field::Fp { p: 3 })) {
            prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), m.cols());
        }

        #[test]
        fn dimension_formula(a in mat(Field::Q), b in mat(Field::Q)) {
            prop_assume!(a.cols() == b.cols());
            let (sa, sb) = (Subspace::from_row_matrix(&a), Subspace::from_row_matrix(&b));
            let s = sa.sum(&sb).unwrap();
            let i = sa.intersection(&sb).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), sa.dim() + sb.dim());
            prop_assert!(s.contains_subspace(&sa) && sa.contains_subspace(&i) && sb.contains_subspace(&i));
        }
    }
}
