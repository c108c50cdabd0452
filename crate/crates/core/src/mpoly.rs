//! Sparse multivariate polynomials in graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: Field, nvars: usize) -> MultiPoly {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(c.field(), nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(field: Field, nvars: usize) -> MultiPoly {
        MultiPoly::constant(field.one(), nvars)
    }

    /// The coordinate function `x_i`.
    pub fn var(field: Field, nvars: usize, i: usize) -> MultiPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::from_terms(field, nvars, [(e, field.one())])
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Scalar], field: Field) -> MultiPoly {
        let n = coeffs.len();
        MultiPoly::from_terms(
            field,
            n,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    pub fn from_terms(field: Field, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> MultiPoly {
        let mut p = MultiPoly::zero(field, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent arity");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when every term has degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check(&self, other: &MultiPoly) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.field, self.nvars);
        }
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.field, self.nvars);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: point.len() });
        }
        if let Some(x) = point.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        let mut total = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow(e as u64);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Symmetric Gram matrix `G` of a quadratic form with `f(x) = x^T G x`.
    /// Needs 2 invertible.
    pub fn quadratic_gram(&self) -> Result<Matrix> {
        if !self.is_homogeneous_of(2) {
            return Err(Error::Precondition("not a quadratic form".into()));
        }
        let half =
            self.field.ratio(1, 2).ok_or_else(|| Error::Unsupported("quadratic forms in characteristic 2".into()))?;
        let n = self.nvars;
        let mut g = Matrix::zeros(self.field, n, n);
        for (m, c) in &self.terms {
            let idx: Vec<usize> = m.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect();
            match idx.as_slice() {
                [i] => g.set(*i, *i, c.clone()),
                [i, j] => {
                    let h = c * &half;
                    g.set(*i, *j, h.clone());
                    g.set(*j, *i, h);
                }
                _ => unreachable!(),
            }
        }
        Ok(g)
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        self.terms.iter().rev().collect()
    }
}

/// Exact evaluation of `f` at `point`.
pub fn mv_eval(f: &MultiPoly, point: &[Scalar]) -> Result<Scalar> {
    f.eval(point)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}; {} vars]({})", self.field, self.nvars, self)
    }
}
