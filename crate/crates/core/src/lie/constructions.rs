use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinearSystem, Matrix, Subspace};

use super::algebra::{numbered, LieAlgebra};
use super::assoc::AssocAlgebra;

impl LieAlgebra {
    /// `L / I` on the coset representatives `b_k` with `k` a non-pivot column
    /// of the echelon basis of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let reps = ideal.complement_indices();
        let labels = reps.iter().map(|&k| self.labels()[k].clone()).collect();
        LieAlgebra::from_fn(self.field(), labels, |a, b| ideal.quotient_coords(self.bracket_basis(reps[a], reps[b])))
    }

    /// The class of `x` in `L / I` in the basis used by [`LieAlgebra::quotient`].
    pub fn quotient_element(ideal: &Subspace, x: &[Scalar]) -> Vec<Scalar> {
        ideal.quotient_coords(x)
    }

    /// `L1 ⊕ L2`; labels get `#1` / `#2` suffixes only when they collide.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let (n1, n2) = (self.dim(), other.dim());
        let clash = self.labels().iter().any(|l| other.labels().contains(l));
        let labels: Vec<String> = if clash {
            let a = self.labels().iter().map(|l| format!("{l}#1"));
            a.chain(other.labels().iter().map(|l| format!("{l}#2"))).collect()
        } else {
            self.labels().iter().chain(other.labels()).cloned().collect()
        };
        let zero = self.field().zero();
        LieAlgebra::from_fn(self.field(), labels, |i, j| {
            let mut v = vec![zero.clone(); n1 + n2];
            if j < n1 {
                v[..n1].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= n1 {
                v[n1..].clone_from_slice(other.bracket_basis(i - n1, j - n1));
            }
            v
        })
    }

    /// `L ⊗ A` with `[x⊗a, y⊗b] = [x,y]⊗ab`; basis `b_i⊗a_s` at index
    /// `i * dim A + s`.
    pub fn tensor_commutative(&self, a: &AssocAlgebra) -> Result<LieAlgebra> {
        if self.field() != a.field() {
            return Err(Error::FieldMismatch(self.field(), a.field()));
        }
        if !a.is_commutative() {
            return Err(Error::NotCommutative);
        }
        let (n, m) = (self.dim(), a.dim());
        let mut labels = Vec::with_capacity(n * m);
        for x in self.labels() {
            for y in a.labels() {
                labels.push(format!("{x}⊗{y}"));
            }
        }
        LieAlgebra::from_fn(self.field(), labels, |p, q| {
            let (i, s) = (p / m, p % m);
            let (j, t) = (q / m, q % m);
            let c = self.bracket_basis(i, j);
            let ab = a.product_basis(s, t);
            let mut v = vec![self.field().zero(); n * m];
            for (k, ck) in c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                for (u, au) in ab.iter().enumerate() {
                    if !au.is_zero() {
                        v[k * m + u] += &(ck * au);
                    }
                }
            }
            v
        })
    }
}

/// Derivations as matrices together with the Lie algebra they span.
#[derive(Clone, Debug)]
pub struct Derivations {
    pub maps: Vec<Matrix>,
    pub algebra: LieAlgebra,
}

/// Linear maps commuting with every `ad x`.
#[derive(Clone, Debug)]
pub struct Centroid {
    pub maps: Vec<Matrix>,
}

impl Centroid {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

// unknown D_{row, col} lives at index row * n + col; column b of D is D(b_b)
fn maps_from_solutions(l: &LieAlgebra, sols: Vec<Vec<Scalar>>) -> Vec<Matrix> {
    let n = l.dim();
    sols.into_iter()
        .map(|s| {
            let rows = s.chunks(n).map(|r| r.to_vec()).collect();
            if n == 0 {
                Matrix::zeros(l.field(), 0, 0)
            } else {
                Matrix::from_rows(l.field(), rows).unwrap()
            }
        })
        .collect()
}

impl LieAlgebra {
    /// Solves `D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j]`. Refuses over a
    /// finite field when `dim > max_dim_fp`.
    pub fn derivation_algebra_with(&self, max_dim_fp: usize) -> Result<Derivations> {
        let n = self.dim();
        if self.field().is_finite() && n > max_dim_fp {
            return Err(Error::Budget(format!(
                "derivation solve over {} needs dim <= {max_dim_fp}, got {n}",
                self.field()
            )));
        }
        let mut sys = LinearSystem::new(self.field(), n * n);
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.bracket_basis(i, j);
                for k in 0..n {
                    terms.clear();
                    for (m, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((k * n + m, c.clone()));
                        }
                    }
                    for m in 0..n {
                        let a = &self.bracket_basis(m, j)[k];
                        if !a.is_zero() {
                            terms.push((m * n + i, -a));
                        }
                        let b = &self.bracket_basis(i, m)[k];
                        if !b.is_zero() {
                            terms.push((m * n + j, -b));
                        }
                    }
                    sys.push_sparse(&terms);
                }
            }
        }
        let maps = maps_from_solutions(self, sys.solutions());
        let algebra = LieAlgebra::from_matrices(self.field(), numbered("d", maps.len()), &maps)?;
        Ok(Derivations { maps, algebra })
    }

    pub fn derivation_algebra(&self) -> Result<Derivations> {
        self.derivation_algebra_with(crate::config::Budget::default().derivation_dim_fp)
    }

    /// Solves `φ[b_i,b_j] = [φ b_i, b_j] = [b_i, φ b_j]` for `i <= j`.
    pub fn centroid(&self) -> Centroid {
        let n = self.dim();
        let mut sys = LinearSystem::new(self.field(), n * n);
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i..n {
                let cij = self.bracket_basis(i, j);
                for k in 0..n {
                    // φ[b_i,b_j] - [φ b_i, b_j]
                    terms.clear();
                    for (m, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((k * n + m, c.clone()));
                        }
                    }
                    let base = terms.clone();
                    for m in 0..n {
                        let a = &self.bracket_basis(m, j)[k];
                        if !a.is_zero() {
                            terms.push((m * n + i, -a));
                        }
                    }
                    sys.push_sparse(&terms);
                    // φ[b_i,b_j] - [b_i, φ b_j]
                    terms.clear();
                    terms.extend(base);
                    for m in 0..n {
                        let b = &self.bracket_basis(i, m)[k];
                        if !b.is_zero() {
                            terms.push((m * n + j, -b));
                        }
                    }
                    sys.push_sparse(&terms);
                }
            }
        }
        Centroid { maps: maps_from_solutions(self, sys.solutions()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::lie::algebra::labels;

    fn sl2(f: Field) -> LieAlgebra {
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        LieAlgebra::new(f, labels(&["e", "h", "f"]), vec![(0, 1, v(-2, 0, 0)), (0, 2, v(0, 1, 0)), (1, 2, v(0, 0, -2))])
            .unwrap()
    }

    fn h3() -> LieAlgebra {
        let f = Field::Q;
        LieAlgebra::new(f, labels(&["x", "y", "z"]), vec![(0, 1, vec![f.zero(), f.zero(), f.one()])]).unwrap()
    }

    #[test]
    fn derivations() {
        assert_eq!(sl2(Field::Q).derivation_algebra().unwrap().maps.len(), 3);
        let a = LieAlgebra::abelian(Field::Q, labels(&["a", "b", "c"]));
        assert_eq!(a.derivation_algebra().unwrap().maps.len(), 9);
        let d = sl2(Field::Q).derivation_algebra().unwrap();
        assert!(d.algebra.validate().is_empty());
    }

    #[test]
    fn centroids() {
        let s = sl2(Field::Q);
        assert_eq!(s.centroid().dim(), 1);
        assert_eq!(s.direct_sum(&s).unwrap().centroid().dim(), 2);
        assert_eq!(h3().centroid().dim(), 3);
    }

    #[test]
    fn quotient_and_sum() {
        let h = h3();
        let z = h.center();
        let q = h.quotient(&z).unwrap();
        assert!(q.is_abelian() && q.dim() == 2);
        let s = sl2(Field::Q);
        assert_eq!(s.quotient(&s.span(&[s.basis_vector(0)])), Err(Error::NotIdeal));
        let ss = s.direct_sum(&s).unwrap();
        assert_eq!(ss.dim(), 6);
        assert_eq!(ss.labels()[3], "e#2");
        assert!(ss.validate().is_empty());
    }
}
