use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::regularity::Mode;
use crate::verdict::{CertificateKind, Evidence, Status, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Abelian,
    Nilpotent,
    Regular,
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        match s {
            "abelian" => Ok(Property::Abelian),
            "nilpotent" => Ok(Property::Nilpotent),
            "regular" => Ok(Property::Regular),
            _ => Err(Error::InvalidParameters(format!("unknown property '{s}'"))),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Abelian => "abelian",
            Property::Nilpotent => "nilpotent",
            Property::Regular => "regular",
        })
    }
}

fn has_property(l: &LieAlgebra, p: Property, budget: &Budget) -> Result<bool> {
    Ok(match p {
        Property::Abelian => l.is_abelian(),
        Property::Nilpotent => l.is_nilpotent(),
        Property::Regular => match l.is_regular_algebra(Mode::Exhaustive, budget)?.status {
            Status::Certified => true,
            Status::Refuted => false,
            Status::Inconclusive => return Err(Error::Internal("exhaustive verdict was inconclusive".into())),
        },
    })
}

/// Number of `k`-dimensional subspaces of `F_q^n`, saturating.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul((q as u128).pow((n - i) as u32) - 1);
        den = den.saturating_mul((q as u128).pow((i + 1) as u32) - 1);
    }
    u64::try_from(num / den).unwrap_or(u64::MAX)
}

/// Echelon basis for pivot columns `pivots`, with the free entries (right of
/// each pivot, outside pivot columns) filled from the base-`q` digits of
/// `idx`, first free entry least significant.
fn echelon_subspace(field: Field, n: usize, pivots: &[usize], free: &[(usize, usize)], mut idx: u64) -> Subspace {
    let q = field.order().expect("finite field");
    let mut m = Matrix::zeros(field, pivots.len(), n);
    for (r, &c) in pivots.iter().enumerate() {
        m.set(r, c, field.one());
    }
    for &(r, c) in free {
        m.set(r, c, field.element(idx % q));
        idx /= q;
    }
    Subspace::from_row_matrix(&m)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in combinations(n, k - 1) {
            if rest.first().is_none_or(|&r| r > first) {
                out.push([vec![first], rest].concat());
            }
        }
    }
    out
}

/// Every proper nonzero subalgebra has the property and `L` does not. All
/// proper subspaces are enumerated once each through their reduced echelon
/// form, by dimension, then pivot pattern, then free entries.
pub fn is_minimal_non(l: &LieAlgebra, property: Property, budget: &Budget) -> Result<Verdict> {
    let field = l.field();
    let q = field.order().ok_or_else(|| Error::Unsupported("minimal-non checks need a finite field".into()))?;
    let n = l.dim();
    let total: u64 = (1..n).map(|k| gaussian_binomial(n, k, q)).fold(0, u64::saturating_add);
    if total > budget.subspaces {
        return Ok(Verdict::inconclusive(Evidence::note(format!(
            "{total} proper subspaces exceed the budget of {}",
            budget.subspaces
        ))));
    }
    if n == 0 || has_property(l, property, budget)? {
        return Ok(Verdict::refuted(
            Witness::Subspace { basis: l.whole().basis() },
            Evidence::note(format!("the algebra itself is {property}")),
        ));
    }
    let mut checked = 0u64;
    let mut subalgebras = 0u64;
    for k in 1..n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let count = q.pow(free.len() as u32);
            checked += count;
            let found = (0..count)
                .into_par_iter()
                .map(|idx| {
                    let s = echelon_subspace(field, n, &pivots, &free, idx);
                    if !l.is_subalgebra(&s)? {
                        return Ok((false, None));
                    }
                    let sub = l.subalgebra(&s)?;
                    Ok((true, (!has_property(&sub, property, budget)?).then_some(s)))
                })
                .collect::<Result<Vec<(bool, Option<Subspace>)>>>()?;
            subalgebras += found.iter().filter(|(is_sub, _)| *is_sub).count() as u64;
            if let Some(s) = found.into_iter().find_map(|(_, s)| s) {
                let evidence = Evidence {
                    points_checked: checked,
                    note: Some(format!("proper subalgebra of dim {k} that is not {property}")),
                    ..Evidence::default()
                };
                return Ok(Verdict::refuted(Witness::Subspace { basis: s.basis() }, evidence));
            }
        }
    }
    debug_assert_eq!(checked, total);
    Ok(Verdict::certified(
        CertificateKind::Exhaustive,
        Evidence {
            points_checked: checked,
            note: Some(format!("{subalgebras} proper subalgebras, all {property}")),
            ..Evidence::default()
        },
    ))
}

/// Rechecks a minimal-non witness subspace: a proper subalgebra lacking the
/// property, or the whole algebra having it.
pub fn recheck_minimal_witness(
    l: &LieAlgebra,
    property: Property,
    basis: &[Vec<Scalar>],
    budget: &Budget,
) -> Result<bool> {
    let s = l.span(basis);
    if s.dim() == l.dim() {
        return has_property(l, property, budget);
    }
    Ok(l.is_subalgebra(&s)? && !has_property(&l.subalgebra(&s)?, property, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{r2, sl};

    #[test]
    fn subspace_counts() {
        assert_eq!(gaussian_binomial(4, 2, 5), 806);
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(combinations(4, 2).len(), 6);
    }

    #[test]
    fn minimal_non_instances() {
        let b = Budget::default();
        let f3 = Field::fp(3).unwrap();
        let r = r2(f3);
        assert!(is_minimal_non(&r, Property::Abelian, &b).unwrap().is_certified());
        assert!(is_minimal_non(&r, Property::Regular, &b).unwrap().is_certified());
        assert!(is_minimal_non(&r, Property::Nilpotent, &b).unwrap().is_certified());
        let f5 = Field::fp(5).unwrap();
        let s = sl(f5, 2).unwrap();
        let v = is_minimal_non(&s, Property::Abelian, &b).unwrap();
        assert_eq!(v.witness_subspace().unwrap(), &[s.basis_vector(0), s.basis_vector(1)][..]);
        assert!(recheck_minimal_witness(&s, Property::Abelian, v.witness_subspace().unwrap(), &b).unwrap());
        assert!(is_minimal_non(&sl(Field::Q, 2).unwrap(), Property::Abelian, &b).is_err());
    }
}
