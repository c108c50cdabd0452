use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Coordinatizer, Matrix, Subspace};

/// A Lie algebra given by structure constants in a fixed ordered basis.
///
/// Only brackets `[b_i, b_j]` with `i < j` are ever supplied; the full table is
/// filled in by antisymmetry, so `[b_i, b_i] = 0` holds by construction.
#[derive(Clone)]
pub struct LieAlgebra {
    field: Field,
    labels: Vec<String>,
    // table[i * n + j] = [b_i, b_j]
    table: Vec<Vec<Scalar>>,
    ad_basis: Vec<Matrix>,
    // rank under the default budget, filled on first use
    pub(crate) default_rank: OnceLock<usize>,
}

// equality is on the table; caches are ignored
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.labels == other.labels && self.table == other.table
    }
}

impl Eq for LieAlgebra {}

/// A basis triple on which the Jacobi identity fails, with the nonzero value
/// of `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

impl LieAlgebra {
    /// Builds and validates. `brackets` lists `(i, j, [b_i, b_j])` with `i < j`;
    /// missing pairs bracket to zero.
    pub fn new(field: Field, labels: Vec<String>, brackets: Vec<(usize, usize, Vec<Scalar>)>) -> Result<LieAlgebra> {
        let l = LieAlgebra::new_unchecked(field, labels, brackets)?;
        if let Some(v) = l.validate().into_iter().next() {
            let (i, j, k) = v.triple;
            return Err(Error::Jacobi(i, j, k));
        }
        Ok(l)
    }

    /// Builds without the Jacobi check. Index and length errors are still
    /// reported.
    pub fn new_unchecked(
        field: Field,
        labels: Vec<String>,
        brackets: Vec<(usize, usize, Vec<Scalar>)>,
    ) -> Result<LieAlgebra> {
        let n = labels.len();
        let mut table = vec![vec![field.zero(); n]; n * n];
        let mut seen = vec![false; n * n];
        for (i, j, v) in brackets {
            if i >= j || j >= n {
                return Err(Error::InvalidParameters(format!("bracket entry ({i}, {j}) needs i < j < {n}")));
            }
            if v.len() != n {
                return Err(Error::Dimension { expected: n, got: v.len() });
            }
            if v.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field, v.iter().find(|x| x.field() != field).unwrap().field()));
            }
            if seen[i * n + j] {
                return Err(Error::InvalidParameters(format!("bracket entry ({i}, {j}) given twice")));
            }
            seen[i * n + j] = true;
            table[j * n + i] = v.iter().map(|x| -x).collect();
            table[i * n + j] = v;
        }
        Ok(LieAlgebra::from_table(field, labels, table))
    }

    /// Structure constants produced by `f(i, j)` for `i < j`.
    pub fn from_fn(
        field: Field,
        labels: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<LieAlgebra> {
        let n = labels.len();
        let mut br = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    br.push((i, j, v));
                }
            }
        }
        LieAlgebra::new(field, labels, br)
    }

    fn from_table(field: Field, labels: Vec<String>, table: Vec<Vec<Scalar>>) -> LieAlgebra {
        let n = labels.len();
        let ad_basis = (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(field, n, n);
                for j in 0..n {
                    m.set_col(j, &table[i * n + j]);
                }
                m
            })
            .collect();
        LieAlgebra { field, labels, table, ad_basis, default_rank: OnceLock::new() }
    }

    /// Lie algebra spanned by linearly independent square matrices closed under
    /// the commutator.
    pub fn from_matrices(field: Field, labels: Vec<String>, mats: &[Matrix]) -> Result<LieAlgebra> {
        if labels.len() != mats.len() {
            return Err(Error::Dimension { expected: mats.len(), got: labels.len() });
        }
        let size = mats.first().map_or(0, |m| m.rows() * m.cols());
        let flat: Vec<Vec<Scalar>> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let coord = Coordinatizer::new(field, size, &flat)
            .ok_or_else(|| Error::InvalidParameters("matrices are linearly dependent".into()))?;
        let mut err = None;
        let l = LieAlgebra::from_fn(field, labels, |i, j| {
            let c = mats[i].commutator(&mats[j]);
            match coord.coords(c.entries()) {
                Some(v) => v,
                None => {
                    err = Some(Error::NotSubalgebra);
                    vec![field.zero(); mats.len()]
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => l,
        }
    }

    pub fn abelian(field: Field, labels: Vec<String>) -> LieAlgebra {
        let n = labels.len();
        LieAlgebra::from_table(field, labels, vec![vec![field.zero(); n]; n * n])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    /// Nonzero brackets `[b_i, b_j]` with `i < j`, in lexicographic order.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i * n + j]) {
                    if !t.is_zero() {
                        *o += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`; column `j` is `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.ad_basis[i].scale(xi));
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    /// All Jacobi violations over basis triples `i < j < k` (antisymmetry makes
    /// the Jacobiator alternating, so these suffice).
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(i, j, k);
                    if r.iter().any(|x| !x.is_zero()) {
                        out.push(JacobiViolation { triple: (i, j, k), residual: r });
                    }
                }
            }
        }
        out
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let b = |p: usize, q: usize| &self.table[p * n + q];
        let mut r = self.ad_basis[i].mul_vec(b(j, k));
        for (x, y) in r.iter_mut().zip(self.ad_basis[j].mul_vec(b(k, i))) {
            *x += &y;
        }
        for (x, y) in r.iter_mut().zip(self.ad_basis[k].mul_vec(b(i, j))) {
            *x += &y;
        }
        r
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(|x| x.is_zero()))
    }

    /// Same algebra in the basis `b'_a = b_{perm[a]}`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<LieAlgebra> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        LieAlgebra::new_unchecked(self.field, labels, {
            let mut br = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    let v = self.bracket_basis(perm[a], perm[b]);
                    let mut w = self.zero_vector();
                    for (k, x) in v.iter().enumerate() {
                        w[inv[k]] = x.clone();
                    }
                    br.push((a, b, w));
                }
            }
            br
        })
    }

    /// Structure constants of a subalgebra in the echelon basis of `s`, with
    /// labels `s1, s2, ...` unless `s` is spanned by basis vectors.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        let basis = s.basis();
        let labels: Vec<String> = basis
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
                if nz.len() == 1 && v[nz[0]].is_one() {
                    self.labels[nz[0]].clone()
                } else {
                    format!("s{}", a + 1)
                }
            })
            .collect();
        let mut err = None;
        let l = LieAlgebra::from_fn(self.field, labels, |i, j| {
            let w = self.bracket_unchecked(&basis[i], &basis[j]);
            s.coords(&w).unwrap_or_else(|| {
                err = Some(Error::NotSubalgebra);
                vec![self.field.zero(); basis.len()]
            })
        });
        match err {
            Some(e) => Err(e),
            None => l,
        }
    }

    /// Parses either a comma separated coordinate vector or a combination of
    /// basis labels such as `2*e - h + 1/2*f`.
    pub fn parse_element(&self, text: &str) -> Result<Vec<Scalar>> {
        let text = text.trim();
        if text.contains(',') || self.index_of(text).is_none() && self.field.parse(text).is_ok() {
            let v = crate::field::parse_vector(self.field, text)?;
            self.check_len(&v)?;
            return Ok(v);
        }
        let bad = |why: &str| Error::InvalidParameters(format!("element '{text}': {why}"));
        let mut v = self.zero_vector();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        // split before every sign that starts a term
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, label) = match body.rsplit_once('*') {
                Some((c, l)) => (self.field.parse(c)?, l),
                None => (self.field.one(), body),
            };
            let i = self.index_of(label).ok_or_else(|| bad(&format!("unknown basis label '{label}'")))?;
            let coef = if neg { -coef } else { coef };
            v[i] += &coef;
        }
        Ok(v)
    }

    /// Human readable `2*e - h` style rendering.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let mut s = String::new();
        for (c, l) in x.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() == Some(std::cmp::Ordering::Less);
            let abs = if neg { -c } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(l);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra[{}; dim {}]", self.field, self.dim())?;
        for (i, j, v) in self.brackets() {
            writeln!(f, "  [{}, {}] = {}", self.labels[i], self.labels[j], self.format_element(&v))?;
        }
        Ok(())
    }
}

pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `prefix1, prefix2, ..., prefixN`.
pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra {
        let f = Field::Q;
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        // basis (e, h, f)
        LieAlgebra::new(f, labels(&["e", "h", "f"]), vec![(0, 1, v(-2, 0, 0)), (0, 2, v(0, 1, 0)), (1, 2, v(0, 0, -2))])
            .unwrap()
    }

    #[test]
    fn bracket_and_ad() {
        let l = sl2();
        let f = Field::Q;
        assert_eq!(l.bracket(&l.basis_vector(0), &l.basis_vector(2)).unwrap(), l.basis_vector(1));
        let adh = l.ad(&l.basis_vector(1)).unwrap();
        assert_eq!(adh, Matrix::from_i64(f, &[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        let x = vec![f.from_i64(3), f.from_i64(-1), f.from_i64(7)];
        assert!(l.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
        assert!(l.bracket(&x, &[f.one()]).is_err());
    }

    #[test]
    fn jacobi_checked() {
        let f = Field::Q;
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        // [x,y]=z, [x,z]=x, [y,z]=y
        let br = vec![(0, 1, v(0, 0, 1)), (0, 2, v(1, 0, 0)), (1, 2, v(0, 1, 0))];
        let bad = LieAlgebra::new_unchecked(f, labels(&["x", "y", "z"]), br.clone()).unwrap();
        // J = [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = [x,y] + [y,-x] + [z,z] = 2z
        let viol = bad.validate();
        assert_eq!(viol.len(), 1);
        assert_eq!(viol[0].residual, v(0, 0, 2));
        assert_eq!(LieAlgebra::new(f, labels(&["x", "y", "z"]), br), Err(Error::Jacobi(0, 1, 2)));
        let two = LieAlgebra::new(f, labels(&["x", "y"]), vec![(0, 1, vec![f.one(), f.one()])]).unwrap();
        assert!(two.validate().is_empty());
    }

    #[test]
    fn rejects_malformed_entries() {
        let f = Field::Q;
        let r = LieAlgebra::new(f, labels(&["x", "y"]), vec![(1, 0, vec![f.one(), f.zero()])]);
        assert!(matches!(r, Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn permutation_preserves_brackets() {
        let l = sl2();
        let p = l.permute_basis(&[1, 0, 2]).unwrap();
        assert!(p.validate().is_empty());
        // [h, e] = 2e in the new basis (h, e, f)
        assert_eq!(p.bracket_basis(0, 1), &[Field::Q.zero(), Field::Q.from_i64(2), Field::Q.zero()][..]);
        assert_eq!(l.format_element(&[Field::Q.from_i64(2), Field::Q.from_i64(-1), Field::Q.zero()]), "2*e - h");
    }
}
