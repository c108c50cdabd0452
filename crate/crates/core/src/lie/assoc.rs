use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

use super::algebra::LieAlgebra;

/// Unital associative algebra given by a full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct AssocAlgebra {
    field: Field,
    labels: Vec<String>,
    // products[i * n + j] = b_i b_j
    products: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
}

impl AssocAlgebra {
    /// Builds and checks associativity on all basis triples and that `unit` is
    /// a two-sided identity.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        products: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
    ) -> Result<AssocAlgebra> {
        let n = labels.len();
        if products.len() != n * n {
            return Err(Error::Dimension { expected: n * n, got: products.len() });
        }
        if unit.len() != n || products.iter().any(|v| v.len() != n) {
            return Err(Error::Dimension { expected: n, got: unit.len() });
        }
        if products.iter().flatten().chain(&unit).any(|x| x.field() != field) {
            return Err(Error::InvalidField("entries over a different field".into()));
        }
        let a = AssocAlgebra { field, labels, products, unit };
        a.check()?;
        Ok(a)
    }

    /// Table produced by `f(i, j) = b_i b_j`.
    pub fn from_fn(
        field: Field,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<AssocAlgebra> {
        let n = labels.len();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                products.push(f(i, j));
            }
        }
        AssocAlgebra::new(field, labels, products, unit)
    }

    fn check(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(Error::NotAssociative(format!("unit does not fix {}", self.labels[i])));
            }
            for j in 0..n {
                let bij = self.product_basis(i, j);
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let left = self.mul(bij, &bk);
                    let right = self.mul(&bi, self.product_basis(j, k));
                    if left != right {
                        return Err(Error::NotAssociative(format!(
                            "({} {}) {} != {} ({} {})",
                            self.labels[i],
                            self.labels[j],
                            self.labels[k],
                            self.labels[i],
                            self.labels[j],
                            self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit(self.field, self.dim(), i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!((x.len(), y.len()), (n, n), "element length");
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(self.product_basis(i, j)) {
                    if !t.is_zero() {
                        *o += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let a = self.mul(x, y);
        let b = self.mul(y, x);
        a.iter().zip(&b).map(|(p, q)| p - q).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.product_basis(i, j) == self.product_basis(j, i)))
    }

    /// The Lie algebra on the same space with `[a, b] = ab - ba`.
    pub fn minus_algebra(&self) -> LieAlgebra {
        let n = self.dim();
        let l = LieAlgebra::from_fn(self.field, self.labels.clone(), |i, j| {
            self.product_basis(i, j).iter().zip(self.product_basis(j, i)).map(|(p, q)| p - q).collect()
        });
        // commutators in an associative algebra always satisfy Jacobi
        let l = l.expect("minus algebra satisfies Jacobi");
        debug_assert_eq!(l.dim(), n);
        l
    }
}

impl fmt::Debug for AssocAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocAlgebra[{}; {:?}]", self.field, self.labels)
    }
}
