use serde::Serialize;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::LieAlgebra;
use crate::linalg::{berkowitz, char_poly, Matrix, Subspace};
use crate::mpoly::MultiPoly;

use super::points::SearchPoints;

/// Coefficients `a_0(x), ..., a_n(x)` of `det(t - ad x)`.
pub fn ad_char_coeffs(l: &LieAlgebra, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let chi = char_poly(&l.ad(x)?)?;
    Ok((0..=l.dim()).map(|i| chi.coeff(i)).collect())
}

/// Index of the first nonzero coefficient, i.e. the multiplicity of the root 0.
pub fn zero_multiplicity(coeffs: &[Scalar]) -> usize {
    coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len())
}

/// `χ(t) = Σ a_i(x) t^i` for a matrix depending linearly on `x`, with the
/// `a_i` as polynomials in the coordinates of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericCharPoly {
    nvars: usize,
    coeffs: Vec<MultiPoly>,
}

impl GenericCharPoly {
    /// `M(x) = Σ x_m mats[m]`, all square of the same size.
    pub fn of_linear_family(field: Field, nvars: usize, mats: &[Matrix]) -> GenericCharPoly {
        assert_eq!(mats.len(), nvars);
        let size = mats.first().map_or(0, |m| m.rows());
        let zero = MultiPoly::zero(field, nvars);
        let one = MultiPoly::one(field, nvars);
        let entries: Vec<Vec<MultiPoly>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let c: Vec<Scalar> = mats.iter().map(|m| m.get(i, j).clone()).collect();
                        MultiPoly::linear(&c, field)
                    })
                    .collect()
            })
            .collect();
        let coeffs = berkowitz(&entries, &zero, &one);
        GenericCharPoly { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `a_0, ..., a_n`.
    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &MultiPoly {
        &self.coeffs[i]
    }

    pub fn eval(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coeffs.iter().map(|a| a.eval(x)).collect()
    }

    /// Least `r` with `a_r` not the zero polynomial.
    pub fn first_nonzero(&self) -> usize {
        self.coeffs.iter().position(|a| !a.is_zero()).unwrap_or(self.coeffs.len())
    }
}

impl LieAlgebra {
    /// Symbolic `a_i(x)` for `χ_{ad x}`; refuses beyond `budget.symbolic_dim`.
    pub fn generic_char_poly(&self, budget: &Budget) -> Result<GenericCharPoly> {
        if self.dim() > budget.symbolic_dim {
            return Err(Error::Budget(format!(
                "symbolic characteristic polynomial limited to dim <= {}, got {}",
                budget.symbolic_dim,
                self.dim()
            )));
        }
        let mats: Vec<Matrix> = (0..self.dim()).map(|m| self.ad_basis(m).clone()).collect();
        Ok(GenericCharPoly::of_linear_family(self.field(), self.dim(), &mats))
    }

    /// `χ` of `ad x` restricted to the ideal `I`, as a polynomial in `x ∈ L`.
    pub fn generic_char_poly_on_ideal(&self, ideal: &Subspace, budget: &Budget) -> Result<GenericCharPoly> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        if self.dim() > budget.symbolic_dim {
            return Err(Error::Budget(format!("symbolic limit {} exceeded", budget.symbolic_dim)));
        }
        let mats = (0..self.dim()).map(|m| ideal.restrict(self.ad_basis(m))).collect::<Result<Vec<_>>>()?;
        Ok(GenericCharPoly::of_linear_family(self.field(), self.dim(), &mats))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Trivial,
    /// Nilpotent algebra: every `ad x` is nilpotent, so rank = dim.
    Nilpotent,
    Symbolic,
    /// Sampled upper bound; lower bound from `a_0 ≡ 0`.
    SampledA0,
    /// Sampled upper bound; lower bound from vanishing on a grid `S^n` with
    /// `|S|` above the degree.
    SampledGrid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub method: RankMethod,
}

impl LieAlgebra {
    /// Least `r` such that `a_r` is not identically zero.
    /// Under the default budget; cached.
    pub fn rank(&self) -> Result<usize> {
        if let Some(&r) = self.default_rank.get() {
            return Ok(r);
        }
        let r = self.rank_with(&Budget::default())?.rank;
        Ok(*self.default_rank.get_or_init(|| r))
    }

    pub fn rank_with(&self, budget: &Budget) -> Result<RankReport> {
        let n = self.dim();
        if n == 0 {
            return Ok(RankReport { rank: 0, method: RankMethod::Trivial });
        }
        if self.is_nilpotent() {
            return Ok(RankReport { rank: n, method: RankMethod::Nilpotent });
        }
        if n <= budget.symbolic_dim {
            let g = self.generic_char_poly(budget)?;
            return Ok(RankReport { rank: g.first_nonzero(), method: RankMethod::Symbolic });
        }
        // sampled upper bound
        let mut upper = n;
        for x in SearchPoints::new(self.field(), n, budget).take(200 + n) {
            upper = upper.min(zero_multiplicity(&ad_char_coeffs(self, &x)?));
            if upper == 1 {
                break;
            }
        }
        if upper == 1 {
            return Ok(RankReport { rank: 1, method: RankMethod::SampledA0 });
        }
        // need a_r ≡ 0 for 1 <= r < upper (a_0 ≡ 0 always); deg a_r = n - r <= n - 1
        let deg = (n - 1) as u64;
        let grid: Vec<Scalar> = match self.field().order() {
            None => (0..=deg as i64).map(|k| self.field().from_i64(k)).collect(),
            Some(p) if p > deg => (0..p).map(|k| self.field().element(k)).collect(),
            Some(_) => return Err(Error::Budget("finite field too small for a grid certificate of the rank".into())),
        };
        let s = grid.len() as u64;
        let total = s.checked_pow(n as u32).filter(|&t| t <= budget.exhaustive_points);
        let total = total.ok_or_else(|| Error::Budget(format!("rank certificate needs {s}^{n} evaluations")))?;
        use rayon::prelude::*;
        let point = |idx: u64| -> Vec<Scalar> {
            let mut k = idx;
            (0..n)
                .map(|_| {
                    let v = grid[(k % s) as usize].clone();
                    k /= s;
                    v
                })
                .collect()
        };
        let mult = |idx: u64| ad_char_coeffs(self, &point(idx)).map(|c| zero_multiplicity(&c)).unwrap_or(0);
        // a grid point below the sampled bound lowers it; rescan until none is left
        while let Some(idx) = (0..total).into_par_iter().find_first(|&idx| mult(idx) < upper) {
            upper = mult(idx);
            if upper <= 1 {
                return Ok(RankReport { rank: 1, method: RankMethod::SampledA0 });
            }
        }
        Ok(RankReport { rank: upper, method: RankMethod::SampledGrid })
    }

    /// `min_x` of the multiplicity of 0 in `χ(ad x |_I)` over `x ∈ L`: the rank
    /// of `I` as a module over `L`.
    pub fn relative_rank(&self, ideal: &Subspace, budget: &Budget) -> Result<usize> {
        Ok(self.generic_char_poly_on_ideal(ideal, budget)?.first_nonzero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::labels;

    fn sl2() -> LieAlgebra {
        let f = Field::Q;
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        LieAlgebra::new(f, labels(&["e", "h", "f"]), vec![(0, 1, v(-2, 0, 0)), (0, 2, v(0, 1, 0)), (1, 2, v(0, 0, -2))])
            .unwrap()
    }

    #[test]
    fn coefficients_at_points() {
        let l = sl2();
        let f = Field::Q;
        let c = ad_char_coeffs(&l, &l.basis_vector(1)).unwrap();
        assert_eq!(c, vec![f.zero(), f.from_i64(-4), f.zero(), f.one()]);
        let z = ad_char_coeffs(&l, &l.zero_vector()).unwrap();
        assert_eq!(z, vec![f.zero(), f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn symbolic_matches_pointwise() {
        let l = sl2();
        let g = l.generic_char_poly(&Budget::default()).unwrap();
        let f = Field::Q;
        let x = vec![f.from_i64(2), f.from_i64(-3), f.from_i64(5)];
        assert_eq!(g.eval(&x).unwrap(), ad_char_coeffs(&l, &x).unwrap());
        assert_eq!(l.rank().unwrap(), 1);
    }

    #[test]
    fn r2_generic_coefficient() {
        let f = Field::Q;
        let r2 = LieAlgebra::new(f, labels(&["x", "y"]), vec![(0, 1, vec![f.zero(), f.one()])]).unwrap();
        let g = r2.generic_char_poly(&Budget::default()).unwrap();
        // χ_{ad(ax + by)} = t^2 - a t
        assert_eq!(g.coeff(1), &MultiPoly::var(f, 2, 0).neg());
        assert!(g.coeff(0).is_zero());
    }

    #[test]
    fn sampled_rank_agrees_with_symbolic() {
        let l = sl2();
        let small = Budget { symbolic_dim: 0, ..Budget::default() };
        assert_eq!(l.rank_with(&small).unwrap(), RankReport { rank: 1, method: RankMethod::SampledA0 });
        let s = l.direct_sum(&l).unwrap();
        let r = s.rank_with(&Budget { symbolic_dim: 0, exhaustive_points: 1 << 22, ..Budget::default() }).unwrap();
        assert_eq!(r, RankReport { rank: 2, method: RankMethod::SampledGrid });
        assert_eq!(s.rank().unwrap(), 2);
    }
}
