use rayon::prelude::*;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::{index_vector, labels, AssocAlgebra, LieAlgebra};
use crate::regularity::{Mode, SearchPoints};
use crate::verdict::{CertificateKind, Evidence, Verdict, Witness};

/// `(a, b)` with basis `1, i, j, k`: `i² = a`, `j² = b`, `ij = k = -ji`,
/// `k² = -ab`.
#[derive(Clone, Debug)]
pub struct QuaternionAlgebra {
    a: Scalar,
    b: Scalar,
    algebra: AssocAlgebra,
}

impl QuaternionAlgebra {
    pub fn new(a: Scalar, b: Scalar) -> Result<QuaternionAlgebra> {
        let field = a.field();
        if b.field() != field {
            return Err(Error::FieldMismatch(field, b.field()));
        }
        if field.characteristic() == 2 {
            return Err(Error::InvalidParameters("quaternion algebras need characteristic != 2".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidParameters("quaternion parameters must be nonzero".into()));
        }
        let z = field.zero();
        let one = field.one();
        let ab = &a * &b;
        let vec4 = |c0: Scalar, c1: Scalar, c2: Scalar, c3: Scalar| vec![c0, c1, c2, c3];
        // rows: 1, i, j, k on the left
        let table = [
            [
                vec4(one.clone(), z.clone(), z.clone(), z.clone()),
                vec4(z.clone(), one.clone(), z.clone(), z.clone()),
                vec4(z.clone(), z.clone(), one.clone(), z.clone()),
                vec4(z.clone(), z.clone(), z.clone(), one.clone()),
            ],
            [
                vec4(z.clone(), one.clone(), z.clone(), z.clone()),
                vec4(a.clone(), z.clone(), z.clone(), z.clone()),
                vec4(z.clone(), z.clone(), z.clone(), one.clone()),
                vec4(z.clone(), z.clone(), a.clone(), z.clone()),
            ],
            [
                vec4(z.clone(), z.clone(), one.clone(), z.clone()),
                vec4(z.clone(), z.clone(), z.clone(), -&one),
                vec4(b.clone(), z.clone(), z.clone(), z.clone()),
                vec4(z.clone(), -&b, z.clone(), z.clone()),
            ],
            [
                vec4(z.clone(), z.clone(), z.clone(), one.clone()),
                vec4(z.clone(), z.clone(), -&a, z.clone()),
                vec4(z.clone(), b.clone(), z.clone(), z.clone()),
                vec4(-&ab, z.clone(), z.clone(), z.clone()),
            ],
        ];
        let unit = vec4(one.clone(), z.clone(), z.clone(), z.clone());
        let algebra = AssocAlgebra::from_fn(field, labels(&["1", "i", "j", "k"]), unit, |r, c| table[r][c].clone())?;
        Ok(QuaternionAlgebra { a, b, algebra })
    }

    /// `(a, b)` from integers.
    pub fn from_i64(field: Field, a: i64, b: i64) -> Result<QuaternionAlgebra> {
        QuaternionAlgebra::new(field.from_i64(a), field.from_i64(b))
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn params(&self) -> (&Scalar, &Scalar) {
        (&self.a, &self.b)
    }

    pub fn algebra(&self) -> &AssocAlgebra {
        &self.algebra
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    /// `tr(x0 + x1 i + x2 j + x3 k) = 2 x0`.
    pub fn reduced_trace(&self, x: &[Scalar]) -> Scalar {
        &self.field().from_i64(2) * &x[0]
    }

    /// `x0² - a x1² - b x2² + ab x3² = x · conj(x)`.
    pub fn norm(&self, x: &[Scalar]) -> Scalar {
        let ab = &self.a * &self.b;
        &(&(&x[0] * &x[0]) - &(&self.a * &(&x[1] * &x[1]))) - &(&self.b * &(&x[2] * &x[2])) + &ab * &(&x[3] * &x[3])
    }

    pub fn conj(&self, x: &[Scalar]) -> Vec<Scalar> {
        vec![x[0].clone(), -&x[1], -&x[2], -&x[3]]
    }

    /// The trace-zero part `span(i, j, k)` as a Lie algebra under the
    /// commutator: `[i,j] = 2k`, `[j,k] = -2b i`, `[k,i] = -2a j`.
    pub fn trace_zero_lie(&self) -> LieAlgebra {
        let minus = self.algebra.minus_algebra();
        let s = minus.span(&[minus.basis_vector(1), minus.basis_vector(2), minus.basis_vector(3)]);
        minus.subalgebra(&s).expect("trace-zero elements form a subalgebra")
    }

    /// Division algebra test. Over Q, `a < 0` and `b < 0` make the norm form
    /// positive definite, so every nonzero element is invertible. Otherwise a
    /// nonzero `x` of norm 0 gives the zero divisors `x · conj(x) = 0`; over a
    /// finite field the search is exhaustive.
    pub fn is_division(&self, mode: Mode, budget: &Budget) -> Result<Verdict> {
        let field = self.field();
        let neg = |s: &Scalar| s.signum() == Some(std::cmp::Ordering::Less);
        if !field.is_finite() && mode == Mode::Exhaustive {
            return Err(Error::Unsupported("exhaustive mode needs a finite field".into()));
        }
        if !field.is_finite() && mode == Mode::Certificate && neg(&self.a) && neg(&self.b) {
            return Ok(Verdict::certified(
                CertificateKind::DefiniteQuadraticForm,
                Evidence::note("a < 0 and b < 0: the norm form is positive definite"),
            ));
        }
        let isotropic = |x: &Vec<Scalar>| x.iter().any(|c| !c.is_zero()) && self.norm(x).is_zero();
        let (found, evidence, exhaustive) = match field.order() {
            Some(q) if q.checked_pow(4).is_some_and(|t| t <= budget.exhaustive_points) => {
                let total = q.pow(4);
                let found = (1..total).into_par_iter().map(|idx| index_vector(field, q, 4, idx)).find_first(isotropic);
                (found, Evidence { points_checked: total - 1, ..Evidence::default() }, true)
            }
            _ => {
                let mut pts = SearchPoints::new(field, 4, budget);
                let found = pts.by_ref().find(isotropic);
                let ev = Evidence {
                    points_checked: pts.visited_points,
                    random_trials: pts.visited_trials,
                    search_height: Some(budget.search_height),
                    seed: Some(budget.seed),
                    note: None,
                };
                (found, ev, false)
            }
        };
        match found {
            Some(x) => {
                let y = self.conj(&x);
                if self.mul(&x, &y).iter().any(|c| !c.is_zero()) {
                    return Err(Error::Internal("zero divisor witness failed the recheck".into()));
                }
                Ok(Verdict::refuted(Witness::Pair { x, y }, evidence))
            }
            None if exhaustive => Ok(Verdict::certified(CertificateKind::Exhaustive, evidence)),
            None => Ok(Verdict::inconclusive(evidence)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;

    #[test]
    fn quaternion_table() {
        let q = QuaternionAlgebra::from_i64(Field::Q, -1, -1).unwrap();
        let f = Field::Q;
        let e = |i: usize| q.algebra().basis_vector(i);
        assert_eq!(q.mul(&e(1), &e(2)), e(3));
        assert_eq!(q.mul(&e(3), &e(3)), vec![f.from_i64(-1), f.zero(), f.zero(), f.zero()]);
        assert_eq!(q.reduced_trace(&e(0)), f.from_i64(2));
        assert!(q.reduced_trace(&e(1)).is_zero());
        assert_eq!(q.trace_zero_lie().brackets(), crate::catalog::su2q().brackets());
        assert!(QuaternionAlgebra::from_i64(Field::fp(2).unwrap(), 1, 1).is_err());
    }

    #[test]
    fn division() {
        let b = Budget::default();
        let q = QuaternionAlgebra::from_i64(Field::Q, -1, -1).unwrap();
        assert_eq!(q.is_division(Mode::Certificate, &b).unwrap().status, Status::Certified);
        let split = QuaternionAlgebra::from_i64(Field::Q, 1, 1).unwrap();
        assert!(split.is_division(Mode::Certificate, &b).unwrap().is_refuted());
        let f5 = QuaternionAlgebra::from_i64(Field::fp(5).unwrap(), -1, -1).unwrap();
        let v = f5.is_division(Mode::Exhaustive, &b).unwrap();
        assert!(v.is_refuted());
        assert_eq!(v.evidence.points_checked, 624);
    }
}
