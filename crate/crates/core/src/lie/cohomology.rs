use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{LinearSystem, Subspace};

use super::algebra::LieAlgebra;

/// Alternating bilinear form `ω` on `L`, stored by its values `ω(b_i, b_j)`
/// for `i < j` in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    n: usize,
    values: Vec<Scalar>,
}

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl Cocycle {
    pub fn from_values(n: usize, values: Vec<Scalar>) -> Result<Cocycle> {
        if values.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Dimension { expected: n * n.saturating_sub(1) / 2, got: values.len() });
        }
        Ok(Cocycle { n, values })
    }

    /// `ω` given by `f(i, j)` for `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Cocycle {
        let mut values = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                values.push(f(i, j));
            }
        }
        Cocycle { n, values }
    }

    pub fn zero(field: Field, n: usize) -> Cocycle {
        Cocycle::from_fn(n, |_, _| field.zero())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn basis_value(&self, i: usize, j: usize) -> Scalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.values[pair_index(self.n, i, j)].clone(),
            Greater => -&self.values[pair_index(self.n, j, i)],
            Equal => self.values.first().map_or_else(|| Field::Q.zero(), |v| v.field().zero()),
        }
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let field = x.first().map_or(Field::Q, |s| s.field());
        let mut acc = field.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i != j && !yj.is_zero() {
                    acc += &(&(xi * yj) * &self.basis_value(i, j));
                }
            }
        }
        acc
    }

    /// `ω([b_i,b_j],b_k) + ω([b_j,b_k],b_i) + ω([b_k,b_i],b_j) = 0` on all triples.
    pub fn is_cocycle_for(&self, l: &LieAlgebra) -> bool {
        if self.n != l.dim() {
            return false;
        }
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (bi, bj, bk) = (l.basis_vector(i), l.basis_vector(j), l.basis_vector(k));
                    let s = self.eval(l.bracket_basis(i, j), &bk)
                        + self.eval(l.bracket_basis(j, k), &bi)
                        + self.eval(l.bracket_basis(k, i), &bj);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `H^2(L, K)` with trivial coefficients.
#[derive(Clone, Debug)]
pub struct SecondCohomology {
    pub cocycles_dim: usize,
    pub coboundaries_dim: usize,
    /// Cocycles whose classes form a basis of `Z^2 / B^2`.
    pub representatives: Vec<Cocycle>,
}

impl SecondCohomology {
    pub fn dim(&self) -> usize {
        self.cocycles_dim - self.coboundaries_dim
    }
}

impl LieAlgebra {
    pub fn h2_trivial(&self) -> SecondCohomology {
        let n = self.dim();
        let field = self.field();
        let unknowns = n * n.saturating_sub(1) / 2;
        // ω(v, b_k) = sum_m v_m ω(m, k)
        let push_term = |terms: &mut Vec<(usize, Scalar)>, v: &[Scalar], k: usize| {
            for (m, c) in v.iter().enumerate() {
                if c.is_zero() || m == k {
                    continue;
                }
                if m < k {
                    terms.push((pair_index(n, m, k), c.clone()));
                } else {
                    terms.push((pair_index(n, k, m), -c));
                }
            }
        };
        let mut sys = LinearSystem::new(field, unknowns);
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    terms.clear();
                    push_term(&mut terms, self.bracket_basis(i, j), k);
                    push_term(&mut terms, self.bracket_basis(j, k), i);
                    push_term(&mut terms, self.bracket_basis(k, i), j);
                    sys.push_sparse(&terms);
                }
            }
        }
        let z = sys.solutions();
        // δf(b_i, b_j) = f([b_i, b_j]) for f = b_m^*
        let b: Vec<Vec<Scalar>> = (0..n)
            .map(|m| {
                let mut v = Vec::with_capacity(unknowns);
                for i in 0..n {
                    for j in i + 1..n {
                        v.push(self.bracket_basis(i, j)[m].clone());
                    }
                }
                v
            })
            .collect();
        let bspace = Subspace::span(field, unknowns, &b);
        let mut acc = bspace.clone();
        let mut reps = Vec::new();
        for v in z {
            if !acc.contains(&v) {
                acc = acc.sum(&Subspace::span(field, unknowns, std::slice::from_ref(&v))).expect("same ambient");
                reps.push(Cocycle { n, values: v });
            }
        }
        SecondCohomology { cocycles_dim: acc.dim(), coboundaries_dim: bspace.dim(), representatives: reps }
    }

    /// `L ⊕ Kc` with `[x, y]' = [x, y] + ω(x, y) c` and `c` central; `c` is the
    /// last basis vector.
    pub fn central_extension(&self, omega: &Cocycle) -> Result<LieAlgebra> {
        if omega.dim() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: omega.dim() });
        }
        if !omega.is_cocycle_for(self) {
            return Err(Error::NotCocycle);
        }
        let n = self.dim();
        let mut labels = self.labels().to_vec();
        let mut name = "c".to_string();
        let mut k = 0;
        while labels.contains(&name) {
            k += 1;
            name = format!("c{k}");
        }
        labels.push(name);
        LieAlgebra::from_fn(self.field(), labels, |i, j| {
            if j == n {
                return vec![self.field().zero(); n + 1];
            }
            let mut v = self.bracket_basis(i, j).to_vec();
            v.push(omega.basis_value(i, j));
            v
        })
    }

    /// For a one-dimensional central ideal `Z = Kz`, the quotient `L / Z` (in the
    /// basis of [`LieAlgebra::quotient`]) together with the cocycle describing
    /// `L` as its central extension: `[s a, s b] = s[a, b] + ω(a, b) z`.
    pub fn extension_cocycle(&self, z: &Subspace) -> Result<(LieAlgebra, Cocycle)> {
        if z.dim() != 1 || !self.center().contains_subspace(z) {
            return Err(Error::Precondition("expected a one-dimensional central subspace".into()));
        }
        let q = self.quotient(z)?;
        let reps = z.complement_indices();
        let p = z.pivots()[0];
        let omega = Cocycle::from_fn(reps.len(), |a, b| self.bracket_basis(reps[a], reps[b])[p].clone());
        Ok((q, omega))
    }
}
