use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::{poly_lcm, UniPoly};

/// Dense matrix over a single exact field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension { expected: c, got: row.len() });
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("rectangular")
    }

    pub fn diagonal(field: Field, d: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "inner dimension");
        let mut r = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * r.cols + j;
                        r.data[idx] += &(a * b);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let n = self.rows;
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let idx = i * n + i;
                acc.data[idx] += c;
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        // nilpotent iff every eigenvalue is 0 iff chi = t^n
        self.is_square() && char_poly(self).is_ok_and(|c| c == UniPoly::monomial(self.field, self.rows))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let prod = &f * m.get(r, j);
                    if !prod.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= &prod;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis vectors of the null space `{v : M v = 0}` (not canonicalised).
    pub fn null_vectors(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            out.push(v);
        }
        out
    }

    /// One solution of `M x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension { expected: self.rows, got: b.len() });
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Block-stack rows of `self` above rows of `o`.
    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix[{}; {}x{}]", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Minimal ring interface for division-free determinant expansions.
pub trait RingOps: Clone {
    fn r_add(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
}

impl RingOps for Scalar {
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
}

impl RingOps for crate::mpoly::MultiPoly {
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
}

/// Berkowitz' division-free characteristic polynomial. `a` is square;
/// returns `c_0..c_n` (ascending, `c_n = one`) of `det(t - A)`.
pub fn berkowitz<T: RingOps>(a: &[Vec<T>], zero: &T, one: &T) -> Vec<T> {
    let n = a.len();
    if n == 0 {
        return vec![one.clone()];
    }
    // descending coefficients
    let mut p = vec![one.clone(), a[0][0].r_neg()];
    for r in 1..n {
        let mut q = Vec::with_capacity(r + 2);
        q.push(one.clone());
        q.push(a[r][r].r_neg());
        // v = M^k C, starting with C = column r above the diagonal
        let mut v: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let mut dot = zero.clone();
            for (j, vj) in v.iter().enumerate() {
                dot = dot.r_add(&a[r][j].r_mul(vj));
            }
            q.push(dot.r_neg());
            let next: Vec<T> = (0..r)
                .map(|i| {
                    let mut acc = zero.clone();
                    for (j, vj) in v.iter().enumerate() {
                        acc = acc.r_add(&a[i][j].r_mul(vj));
                    }
                    acc
                })
                .collect();
            v = next;
        }
        let mut np = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for j in 0..=i.min(r) {
                acc = acc.r_add(&q[i - j].r_mul(&p[j]));
            }
            np.push(acc);
        }
        p = np;
    }
    p.reverse();
    p
}

/// `det(t - M)` via reduction to upper Hessenberg form.
pub fn char_poly(m: &Matrix) -> Result<UniPoly> {
    let n = m.require_square()?;
    let field = m.field;
    let mut h = m.clone();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !h.get(i, col - 1).is_zero()) else { continue };
        if i > col {
            h.swap_rows(i, col);
            h.swap_cols(i, col);
        }
        let t_inv = h.get(col, col - 1).inv().unwrap();
        for i in col + 1..n {
            let u = h.get(i, col - 1) * &t_inv;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h.get(i, j) - &(&u * h.get(col, j));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = h.get(j, col) + &(&u * h.get(j, i));
                h.set(j, col, v);
            }
        }
    }
    let mut ps: Vec<UniPoly> = vec![UniPoly::one(field)];
    for mm in 1..=n {
        let mut pm = UniPoly::linear_root(h.get(mm - 1, mm - 1)).mul(&ps[mm - 1]);
        let mut t = field.one();
        for i in 1..mm {
            t = &t * h.get(mm - i, mm - i - 1);
            if t.is_zero() {
                break;
            }
            let c = &t * h.get(mm - i - 1, mm - 1);
            pm = pm.sub(&ps[mm - i - 1].scale(&c));
        }
        ps.push(pm);
    }
    Ok(ps.pop().unwrap())
}

/// Minimal polynomial by Krylov spinning of the standard basis vectors.
pub fn min_poly(m: &Matrix) -> Result<UniPoly> {
    let n = m.require_square()?;
    let field = m.field;
    let mut mu = UniPoly::one(field);
    let mut mu_of_m = Matrix::identity(field, n);
    for i in 0..n {
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        if mu_of_m.mul_vec(&e).iter().all(|x| x.is_zero()) {
            continue;
        }
        let local = local_min_poly(m, e)?;
        mu = poly_lcm(&mu, &local)?;
        mu_of_m = m.eval_poly(&mu);
    }
    Ok(mu)
}

/// Monic generator of the annihilator of `v` under `m`.
fn local_min_poly(m: &Matrix, v: Vec<Scalar>) -> Result<UniPoly> {
    let field = m.field;
    let n = m.rows;
    let mut krylov: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = v;
    for k in 0..=n {
        if k == 0 {
            if cur.iter().all(|x| x.is_zero()) {
                return Ok(UniPoly::one(field));
            }
        } else {
            let basis = Matrix::from_cols(field, n, &krylov);
            if let Some(c) = basis.solve(&cur)? {
                let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
                coeffs.push(field.one());
                return Ok(UniPoly::new(field, coeffs));
            }
        }
        krylov.push(cur.clone());
        cur = m.mul_vec(&cur);
    }
    Err(Error::Internal("Krylov sequence did not terminate".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(Field::Q, rows)
    }

    #[test]
    fn char_poly_examples() {
        // ad h in sl2, basis (e, h, f)
        let adh = q(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
        assert_eq!(char_poly(&adh).unwrap(), UniPoly::from_i64(Field::Q, &[0, -4, 0, 1]));
        assert_eq!(char_poly(&Matrix::zeros(Field::Q, 4, 4)).unwrap(), UniPoly::monomial(Field::Q, 4));
        // ad i in su2: [i,j] = 2k, [i,k] = -2j
        let adi = q(&[&[0, 0, 0], &[0, 0, -2], &[0, 2, 0]]);
        assert_eq!(char_poly(&adi).unwrap(), UniPoly::from_i64(Field::Q, &[0, 4, 0, 1]));
        assert_eq!(char_poly(&Matrix::zeros(Field::Q, 0, 0)).unwrap(), UniPoly::one(Field::Q));
        assert!(char_poly(&Matrix::zeros(Field::Q, 2, 3)).is_err());
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&Matrix::identity(Field::Q, 3)).unwrap(), UniPoly::from_i64(Field::Q, &[-1, 1]));
        // ad e in sl2: [e,h] = -2e, [e,f] = h
        let ade = q(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(min_poly(&ade).unwrap(), UniPoly::monomial(Field::Q, 3));
        let adi = q(&[&[0, 0, 0], &[0, 0, -2], &[0, 2, 0]]);
        assert_eq!(min_poly(&adi).unwrap(), UniPoly::from_i64(Field::Q, &[0, 4, 0, 1]));
    }

    #[test]
    fn solve_and_inverse() {
        let m = q(&[&[1, 0], &[0, 0]]);
        let f = Field::Q;
        assert_eq!(m.solve(&[f.zero(), f.one()]).unwrap(), None);
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(f, 2));
        assert!(m.inverse().unwrap().is_none());
    }

    #[test]
    fn berkowitz_matches_hessenberg() {
        let f = Field::Q;
        let m = q(&[&[1, 2, 0, -1], &[3, 0, 1, 1], &[0, -2, 2, 5], &[1, 1, 1, 0]]);
        let rows = m.row_vecs();
        let b = berkowitz(&rows, &f.zero(), &f.one());
        assert_eq!(UniPoly::new(f, b), char_poly(&m).unwrap());
    }
}
