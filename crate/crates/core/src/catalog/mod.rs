//! Named algebras, quaternion algebras, and the small-table enumerator.

mod classical;
mod enumerate;
mod quaternion;

pub use classical::{
    abelian, gl, heisenberg, pgl, psl, psl_in_pgl, r2, reduced_polynomials, sl, sl_identity, sl_matrices, strict_upper,
    su2q, su2q_plus_center, tensor_block,
};
pub use enumerate::{enumerate_tables, table_count, EnumStats, EnumTable};
pub use quaternion::QuaternionAlgebra;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::{AssocAlgebra, LieAlgebra};

/// A catalog constructor result.
#[derive(Clone, Debug)]
pub enum Built {
    Lie(LieAlgebra),
    Assoc(AssocAlgebra),
}

impl Built {
    pub fn into_lie(self) -> Result<LieAlgebra> {
        match self {
            Built::Lie(l) => Ok(l),
            Built::Assoc(_) => Err(Error::InvalidParameters("expected a Lie algebra".into())),
        }
    }
}

/// Name, parameters, description.
pub const ENTRIES: &[(&str, &str, &str)] = &[
    ("abelian", "n", "abelian algebra of dimension n"),
    ("heisenberg", "m", "Heisenberg algebra of dimension 2m+1"),
    ("r2", "", "[x,y] = y"),
    ("sl", "n", "trace-zero n x n matrices"),
    ("gl", "n", "all n x n matrices"),
    ("psl", "n", "sl_n modulo the identity; characteristic must divide n"),
    ("pgl", "n", "gl_n modulo the identity; characteristic must divide n"),
    ("su2q", "", "trace-zero quaternions (-1,-1) over Q"),
    ("su2q+center", "", "su2q plus a one-dimensional center, over Q"),
    ("strict-upper", "n", "strictly upper triangular n x n matrices"),
    ("O", "n [e]", "K[x1..xn]/(x_i^e), e defaults to p (associative)"),
    ("sl2xO", "n [e]", "sl_2 tensor O(n, e) over F_p"),
    ("quaternion", "a b", "quaternion algebra (a,b) (associative)"),
    ("quaternion-trace-zero", "a b", "trace-zero part of (a,b) as a Lie algebra"),
];

fn param(params: &[i64], i: usize, name: &str) -> Result<i64> {
    params.get(i).copied().ok_or_else(|| Error::InvalidParameters(format!("{name}: missing parameter {}", i + 1)))
}

fn size(params: &[i64], i: usize, name: &str) -> Result<usize> {
    let v = param(params, i, name)?;
    usize::try_from(v).map_err(|_| Error::InvalidParameters(format!("{name}: parameter must be nonnegative")))
}

fn only_q(field: Field, name: &str) -> Result<()> {
    if field != Field::Q {
        return Err(Error::InvalidParameters(format!("{name} is defined over Q")));
    }
    Ok(())
}

/// Builds a catalog entry by name.
pub fn make(name: &str, params: &[i64], field: Field) -> Result<Built> {
    let lie = |r: Result<LieAlgebra>| r.map(Built::Lie);
    let exponent = |i: usize| -> Result<u32> {
        match params.get(i) {
            Some(&e) => u32::try_from(e).map_err(|_| Error::InvalidParameters("bad exponent".into())),
            None => Ok(field.characteristic() as u32),
        }
    };
    match name {
        "abelian" => Ok(Built::Lie(abelian(field, size(params, 0, name)?))),
        "heisenberg" => lie(heisenberg(field, size(params, 0, name)?)),
        "r2" => Ok(Built::Lie(r2(field))),
        "sl" => lie(sl(field, size(params, 0, name)?)),
        "gl" => lie(gl(field, size(params, 0, name)?)),
        "psl" => lie(psl(field, size(params, 0, name)?)),
        "pgl" => lie(pgl(field, size(params, 0, name)?)),
        "su2q" => only_q(field, name).map(|_| Built::Lie(su2q())),
        "su2q+center" => only_q(field, name).map(|_| Built::Lie(su2q_plus_center())),
        "strict-upper" => lie(strict_upper(field, size(params, 0, name)?)),
        "O" => Ok(Built::Assoc(reduced_polynomials(field, size(params, 0, name)?, exponent(1)?)?)),
        "sl2xO" => lie(tensor_block(&sl(field, 2)?, size(params, 0, name)?, exponent(1)?)),
        "quaternion" => {
            let q = QuaternionAlgebra::from_i64(field, param(params, 0, name)?, param(params, 1, name)?)?;
            Ok(Built::Assoc(q.algebra().clone()))
        }
        "quaternion-trace-zero" => {
            let q = QuaternionAlgebra::from_i64(field, param(params, 0, name)?, param(params, 1, name)?)?;
            Ok(Built::Lie(q.trace_zero_lie()))
        }
        _ => Err(Error::InvalidParameters(format!("unknown catalog entry '{name}'"))),
    }
}

/// `A⁻`: same space, `[a, b] = ab - ba`.
pub fn minus_algebra(a: &AssocAlgebra) -> LieAlgebra {
    a.minus_algebra()
}

/// `A⁻ / K·1`; the unit line must be central.
pub fn quotient_by_unit_line(a: &AssocAlgebra) -> Result<LieAlgebra> {
    let l = a.minus_algebra();
    let line = l.span(&[a.unit().to_vec()]);
    if !l.center().contains_subspace(&line) {
        return Err(Error::Precondition("unit line is not central".into()));
    }
    l.quotient(&line)
}

/// Every named Lie algebra at a small size, used by the invariant suites.
pub fn standard_instances() -> Vec<(String, LieAlgebra)> {
    let q = Field::Q;
    let f2 = Field::fp(2).expect("prime");
    let f3 = Field::fp(3).expect("prime");
    let f5 = Field::fp(5).expect("prime");
    let mut out: Vec<(String, Result<LieAlgebra>)> = vec![
        ("abelian(3)/Q".into(), Ok(abelian(q, 3))),
        ("h3/Q".into(), heisenberg(q, 1)),
        ("h5/Q".into(), heisenberg(q, 2)),
        ("h3/F5".into(), heisenberg(f5, 1)),
        ("r2/Q".into(), Ok(r2(q))),
        ("r2/F3".into(), Ok(r2(f3))),
        ("sl2/Q".into(), sl(q, 2)),
        ("sl2/F5".into(), sl(f5, 2)),
        ("sl2/F2".into(), sl(f2, 2)),
        ("gl2/Q".into(), gl(q, 2)),
        ("sl3/Q".into(), sl(q, 3)),
        ("psl3/F3".into(), psl(f3, 3)),
        ("pgl3/F3".into(), pgl(f3, 3)),
        ("su2q/Q".into(), Ok(su2q())),
        ("su2q+center/Q".into(), Ok(su2q_plus_center())),
        ("strict-upper(4)/Q".into(), strict_upper(q, 4)),
        ("strict-upper(4)/F5".into(), strict_upper(f5, 4)),
        ("sl2xO(1,3)/F5".into(), sl(f5, 2).and_then(|s| tensor_block(&s, 1, 3))),
    ];
    out.push((
        "quaternion(-1,3)-trace-zero/Q".into(),
        QuaternionAlgebra::from_i64(q, -1, 3).map(|h| h.trace_zero_lie()),
    ));
    out.into_iter().map(|(n, l)| (n, l.expect("catalog instance"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        for (name, _, _) in ENTRIES {
            let (params, field): (&[i64], Field) = match *name {
                "psl" | "pgl" => (&[3], Field::fp(3).unwrap()),
                "O" | "sl2xO" => (&[1], Field::fp(5).unwrap()),
                "quaternion" | "quaternion-trace-zero" => (&[-1, -1], Field::Q),
                _ => (&[2], Field::Q),
            };
            make(name, params, field).unwrap();
        }
        assert!(make("psl", &[3], Field::Q).is_err());
        assert!(make("nope", &[], Field::Q).is_err());
        assert!(make("sl", &[], Field::Q).is_err());
    }

    #[test]
    fn minus_and_unit_quotient() {
        let h = QuaternionAlgebra::from_i64(Field::Q, -1, -1).unwrap();
        let l = minus_algebra(h.algebra());
        assert_eq!(l.center(), l.span(&[l.basis_vector(0)]));
        let q = quotient_by_unit_line(h.algebra()).unwrap();
        assert_eq!(q.brackets(), su2q().brackets());
        let o = reduced_polynomials(Field::fp(3).unwrap(), 1, 3).unwrap();
        assert!(minus_algebra(&o).is_abelian());
        assert_eq!(standard_instances().len(), 19);
    }
}
