use crate::field::{Field, Scalar};

use super::matrix::Matrix;
use super::subspace::Subspace;

/// Homogeneous linear system built one equation at a time.
///
/// Each pushed row is reduced against the current echelon rows, so memory
/// stays bounded by the number of unknowns however many equations arrive.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    unknowns: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl LinearSystem {
    pub fn new(field: Field, unknowns: usize) -> LinearSystem {
        LinearSystem { field, unknowns, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `sum_u row[u] * x_u = 0`.
    pub fn push(&mut self, mut row: Vec<Scalar>) {
        debug_assert_eq!(row.len(), self.unknowns);
        if self.rows.len() == self.unknowns {
            return;
        }
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[p].inv().expect("nonzero");
            for x in row.iter_mut() {
                *x *= &inv;
            }
            self.rows.push(row);
            self.pivots.push(p);
        }
    }

    /// Adds an equation given sparsely as `(unknown, coefficient)` pairs.
    pub fn push_sparse(&mut self, terms: &[(usize, Scalar)]) {
        let mut row = vec![self.field.zero(); self.unknowns];
        let mut any = false;
        for (u, c) in terms {
            if !c.is_zero() {
                row[*u] += c;
                any = true;
            }
        }
        if any {
            self.push(row);
        }
    }

    /// Canonical basis of the solution space (free variables set to unit
    /// vectors in increasing order).
    pub fn solutions(&self) -> Vec<Vec<Scalar>> {
        if self.rows.is_empty() {
            return (0..self.unknowns).map(|i| super::subspace::unit(self.field, self.unknowns, i)).collect();
        }
        Matrix::from_rows(self.field, self.rows.clone()).expect("rectangular").null_vectors()
    }

    pub fn solution_space(&self) -> Subspace {
        Subspace::span(self.field, self.unknowns, &self.solutions())
    }
}

/// Coordinates with respect to a fixed, linearly independent list of vectors.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    span: Subspace,
    // row r: original coordinates of the r-th echelon basis vector
    echelon_to_orig: Matrix,
}

impl Coordinatizer {
    /// Errors (returns `None`) when the vectors are dependent.
    pub fn new(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Option<Coordinatizer> {
        let span = Subspace::span(field, ambient, vectors);
        if span.dim() != vectors.len() {
            return None;
        }
        let d = vectors.len();
        let mut t = Matrix::zeros(field, d, d);
        for (a, v) in vectors.iter().enumerate() {
            let c = span.coords(v).expect("in span");
            for (r, x) in c.into_iter().enumerate() {
                t.set(a, r, x);
            }
        }
        // v_a = sum_r t[a][r] e_r, so e = t^{-1} v
        let inv = t.inverse().expect("square").expect("independent");
        Some(Coordinatizer { span, echelon_to_orig: inv })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let e = self.span.coords(v)?;
        let d = e.len();
        let field = self.span.field();
        let mut out = vec![field.zero(); d];
        for (r, er) in e.iter().enumerate() {
            if er.is_zero() {
                continue;
            }
            for (a, o) in out.iter_mut().enumerate() {
                let t = self.echelon_to_orig.get(r, a);
                if !t.is_zero() {
                    *o += &(er * t);
                }
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incremental_matches_batch() {
        let f = Field::Q;
        let m = Matrix::from_i64(f, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let mut s = LinearSystem::new(f, 4);
        for r in m.row_vecs() {
            s.push(r);
        }
        assert_eq!(s.rank(), 2);
        assert_eq!(s.solutions(), m.null_vectors());
    }

    #[test]
    fn coordinates_in_given_basis() {
        let f = Field::Q;
        let v = vec![vec![f.from_i64(1), f.from_i64(1)], vec![f.from_i64(1), f.from_i64(-1)]];
        let c = Coordinatizer::new(f, 2, &v).unwrap();
        let x = vec![f.from_i64(3), f.from_i64(1)];
        assert_eq!(c.coords(&x).unwrap(), vec![f.from_i64(2), f.from_i64(1)]);
        assert!(Coordinatizer::new(f, 2, &[v[0].clone(), v[0].clone()]).is_none());
    }
}
