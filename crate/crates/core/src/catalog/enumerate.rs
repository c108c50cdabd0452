use rayon::prelude::*;
use serde::Serialize;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::{numbered, LieAlgebra};

/// Raw structure constants: for each pair `i < j` in lexicographic order, the
/// coordinates of `[b_i, b_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumTable {
    pub dim: usize,
    pub field: Field,
    pub coeffs: Vec<Scalar>,
    /// Set only after the Jacobi identity was checked on all triples.
    pub valid: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumStats {
    pub generated: u64,
    pub valid: u64,
}

impl EnumTable {
    pub fn algebra(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        let mut br = Vec::new();
        let mut chunks = self.coeffs.chunks(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = chunks.next().expect("table length").to_vec();
                if v.iter().any(|c| !c.is_zero()) {
                    br.push((i, j, v));
                }
            }
        }
        LieAlgebra::new_unchecked(self.field, numbered("b", n), br)
    }
}

/// Number of raw tables: `p^(dim · dim(dim-1)/2)`.
pub fn table_count(field: Field, dim: usize) -> Option<u64> {
    let p = field.order()?;
    let len = dim * dim.saturating_sub(1) / 2 * dim;
    p.checked_pow(len as u32)
}

/// Generates every coefficient assignment in lexicographic order (first
/// coefficient most significant) and hands the Jacobi-valid ones, in order, to
/// `consumer`.
pub fn enumerate_tables(
    field: Field,
    dim: usize,
    budget: &Budget,
    mut consumer: impl FnMut(&EnumTable, &LieAlgebra),
) -> Result<EnumStats> {
    let p = field.order().ok_or_else(|| Error::Unsupported("enumeration needs a finite field".into()))?;
    let total = table_count(field, dim)
        .filter(|&t| t <= budget.enum_tables)
        .ok_or_else(|| Error::Budget(format!("{field} tables of dim {dim} exceed the enumeration cap")))?;
    let len = dim * dim.saturating_sub(1) / 2 * dim;
    let tables: Vec<(EnumTable, LieAlgebra)> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let mut k = idx;
            let mut coeffs = vec![field.zero(); len];
            for c in coeffs.iter_mut().rev() {
                *c = field.element(k % p);
                k /= p;
            }
            let mut t = EnumTable { dim, field, coeffs, valid: false };
            let l = t.algebra().expect("well-formed table");
            if !l.validate().is_empty() {
                return None;
            }
            t.valid = true;
            Some((t, l))
        })
        .collect();
    for (t, l) in &tables {
        consumer(t, l);
    }
    Ok(EnumStats { generated: total, valid: tables.len() as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f2 = Field::fp(2).unwrap();
        let b = Budget::default();
        let mut seen = Vec::new();
        let stats = enumerate_tables(f2, 2, &b, |t, _| seen.push(t.coeffs.clone())).unwrap();
        assert_eq!(stats, EnumStats { generated: 4, valid: 4 });
        assert_eq!(seen[1], vec![f2.zero(), f2.one()]);
        let stats = enumerate_tables(Field::fp(5).unwrap(), 1, &b, |_, _| {}).unwrap();
        assert_eq!(stats, EnumStats { generated: 1, valid: 1 });
        assert!(enumerate_tables(Field::Q, 2, &b, |_, _| {}).is_err());
        assert!(enumerate_tables(Field::fp(7).unwrap(), 4, &b, |_, _| {}).is_err());
    }
}
