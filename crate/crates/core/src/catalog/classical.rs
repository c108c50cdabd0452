use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::{labels, numbered, AssocAlgebra, LieAlgebra};
use crate::linalg::{Matrix, Subspace};

fn unit_matrix(field: Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, field.one());
    m
}

fn e_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

pub fn abelian(field: Field, n: usize) -> LieAlgebra {
    LieAlgebra::abelian(field, numbered("x", n))
}

/// Basis `x1..xm, y1..ym, z` with `[x_i, y_i] = z`; dimension `2m + 1`.
pub fn heisenberg(field: Field, m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::InvalidParameters("heisenberg needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    let mut names = numbered("x", m);
    names.extend(numbered("y", m));
    names.push("z".into());
    LieAlgebra::from_fn(field, names, |i, j| {
        let mut v = vec![field.zero(); n];
        if i < m && j == i + m {
            v[n - 1] = field.one();
        }
        v
    })
}

/// The non-abelian two-dimensional algebra `[x, y] = y`.
pub fn r2(field: Field) -> LieAlgebra {
    LieAlgebra::new(field, labels(&["x", "y"]), vec![(0, 1, vec![field.zero(), field.one()])]).expect("valid table")
}

/// `gl_n` on the matrix units `E_ij` in row-major order.
pub fn gl(field: Field, n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameters("gl needs n >= 1".into()));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(unit_matrix(field, n, i, j));
            names.push(e_label(i, j, n));
        }
    }
    LieAlgebra::from_matrices(field, names, &mats)
}

/// Matrices of `sl_n` in basis order: `E_ij` (`i < j`), then
/// `h_i = E_ii - E_{i+1,i+1}`, then `E_ij` (`i > j`). For `n = 2` the labels
/// are `e, h, f`.
pub fn sl_matrices(field: Field, n: usize) -> (Vec<String>, Vec<Matrix>) {
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            mats.push(unit_matrix(field, n, i, j));
            names.push(e_label(i, j, n));
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut h = unit_matrix(field, n, i, i);
        h.set(i + 1, i + 1, -field.one());
        mats.push(h);
        names.push(format!("h{}", i + 1));
    }
    for i in 0..n {
        for j in 0..i {
            mats.push(unit_matrix(field, n, i, j));
            names.push(e_label(i, j, n));
        }
    }
    if n == 2 {
        names = labels(&["e", "h", "f"]);
    }
    (names, mats)
}

pub fn sl(field: Field, n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameters("sl needs n >= 2".into()));
    }
    let (names, mats) = sl_matrices(field, n);
    LieAlgebra::from_matrices(field, names, &mats)
}

fn check_char_divides(field: Field, n: usize, what: &str) -> Result<()> {
    let p = field.characteristic();
    if p == 0 || !(n as u64).is_multiple_of(p) {
        return Err(Error::InvalidParameters(format!(
            "{what}({n}) needs the characteristic to divide {n}, got {field}"
        )));
    }
    Ok(())
}

/// The identity matrix in the `sl_n` basis, `E = Σ k h_k`; lies in `sl_n`
/// exactly when `char K | n`.
pub fn sl_identity(field: Field, n: usize) -> Vec<Scalar> {
    let off = n * (n - 1) / 2;
    let mut v = vec![field.zero(); n * n - 1];
    for k in 1..n {
        v[off + k - 1] = field.from_i64(k as i64);
    }
    v
}

/// `sl_n / KE` for `char K | n`; the class of `h1` is dropped from the basis.
pub fn psl(field: Field, n: usize) -> Result<LieAlgebra> {
    check_char_divides(field, n, "psl")?;
    let s = sl(field, n)?;
    let e = s.span(&[sl_identity(field, n)]);
    s.quotient(&e)
}

/// `gl_n / KE` for `char K | n`; the class of `E11` is dropped from the basis.
pub fn pgl(field: Field, n: usize) -> Result<LieAlgebra> {
    check_char_divides(field, n, "pgl")?;
    let g = gl(field, n)?;
    let e = g.span(&[Matrix::identity(field, n).entries().to_vec()]);
    g.quotient(&e)
}

/// The image of `psl_n` inside `pgl_n`, in the basis of [`pgl`].
pub fn psl_in_pgl(field: Field, n: usize) -> Result<Subspace> {
    check_char_divides(field, n, "psl")?;
    let g = gl(field, n)?;
    let e = g.span(&[Matrix::identity(field, n).entries().to_vec()]);
    let (_, mats) = sl_matrices(field, n);
    let images: Vec<Vec<Scalar>> = mats.iter().map(|m| e.quotient_coords(m.entries())).collect();
    Ok(Subspace::span(field, n * n - 1, &images))
}

/// Trace-zero quaternions `(-1,-1)` over Q: `[i,j] = 2k, [j,k] = 2i, [k,i] = 2j`.
pub fn su2q() -> LieAlgebra {
    let f = Field::Q;
    let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
    LieAlgebra::new(f, labels(&["i", "j", "k"]), vec![(0, 1, v(0, 0, 2)), (0, 2, v(0, -2, 0)), (1, 2, v(2, 0, 0))])
        .expect("valid table")
}

/// `su2q ⊕ Kc`, a split one-dimensional central extension.
pub fn su2q_plus_center() -> LieAlgebra {
    su2q().direct_sum(&LieAlgebra::abelian(Field::Q, labels(&["c"]))).expect("same field")
}

/// Strictly upper triangular `n × n` matrices, basis `E_ij` (`i < j`) row-major.
pub fn strict_upper(field: Field, n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameters("strict-upper needs n >= 2".into()));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            mats.push(unit_matrix(field, n, i, j));
            names.push(e_label(i, j, n));
        }
    }
    LieAlgebra::from_matrices(field, names, &mats)
}

/// Exponent vectors in `[0, e)^n`, degree-lexicographic: by total degree, then
/// with higher powers of earlier variables first.
fn deglex_monomials(n: usize, e: u32) -> Vec<Vec<u32>> {
    let mut all: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        all = all.into_iter().flat_map(|m| (0..e).map(move |k| [m.clone(), vec![k]].concat())).collect();
    }
    all.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    all
}

fn monomial_label(m: &[u32]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `K[x1..xn] / (x_i^e)` over a prime field, on the monomial basis in
/// degree-lexicographic order. The reduced polynomial algebra is `e = p`.
pub fn reduced_polynomials(field: Field, n: usize, e: u32) -> Result<AssocAlgebra> {
    if !field.is_finite() {
        return Err(Error::InvalidParameters("O(n) is defined over a prime field".into()));
    }
    if e == 0 {
        return Err(Error::InvalidParameters("truncation exponent must be positive".into()));
    }
    let monos = deglex_monomials(n, e);
    let dim = monos.len();
    let index: std::collections::HashMap<Vec<u32>, usize> = monos.iter().cloned().zip(0..).collect();
    let names = monos.iter().map(|m| monomial_label(m)).collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    AssocAlgebra::from_fn(field, names, unit, |a, b| {
        let mut v = vec![field.zero(); dim];
        let prod: Vec<u32> = monos[a].iter().zip(&monos[b]).map(|(x, y)| x + y).collect();
        if prod.iter().all(|&k| k < e) {
            v[index[&prod]] = field.one();
        }
        v
    })
}

/// `S ⊗ O(n)` with the truncation exponent `e`.
pub fn tensor_block(s: &LieAlgebra, n: usize, e: u32) -> Result<LieAlgebra> {
    s.tensor_commutative(&reduced_polynomials(s.field(), n, e)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_table() {
        let f = Field::Q;
        let s = sl(f, 2).unwrap();
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h
        assert_eq!(s.bracket(&s.basis_vector(1), &s.basis_vector(0)).unwrap(), v(2, 0, 0));
        assert_eq!(s.bracket(&s.basis_vector(1), &s.basis_vector(2)).unwrap(), v(0, 0, -2));
        assert_eq!(s.bracket(&s.basis_vector(0), &s.basis_vector(2)).unwrap(), v(0, 1, 0));
    }

    #[test]
    fn dimensions() {
        let f3 = Field::fp(3).unwrap();
        assert_eq!(psl(f3, 3).unwrap().dim(), 7);
        assert_eq!(pgl(f3, 3).unwrap().dim(), 8);
        assert!(psl(Field::Q, 3).is_err());
        assert!(pgl(Field::fp(5).unwrap(), 3).is_err());
        assert_eq!(heisenberg(Field::Q, 2).unwrap().dim(), 5);
        assert_eq!(strict_upper(Field::Q, 4).unwrap().dim(), 6);
        let f5 = Field::fp(5).unwrap();
        assert_eq!(reduced_polynomials(f5, 1, 5).unwrap().dim(), 5);
        assert_eq!(reduced_polynomials(f5, 2, 3).unwrap().labels()[..4], labels(&["1", "x1", "x2", "x1^2"])[..]);
        assert_eq!(tensor_block(&sl(f5, 2).unwrap(), 1, 3).unwrap().dim(), 9);
        assert!(reduced_polynomials(Field::Q, 1, 2).is_err());
    }

    #[test]
    fn pgl_commutant_is_psl() {
        let f3 = Field::fp(3).unwrap();
        let g = pgl(f3, 3).unwrap();
        let s = psl_in_pgl(f3, 3).unwrap();
        assert_eq!(s.dim(), 7);
        assert!(s.contains_subspace(&g.commutant()));
        assert!(g.is_ideal(&s).unwrap());
    }
}
