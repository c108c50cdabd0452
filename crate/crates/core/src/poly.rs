//! Dense univariate polynomials over an exact field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Coefficients indexed by degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> UniPoly {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> UniPoly {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> UniPoly {
        UniPoly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> UniPoly {
        UniPoly::new(c.field(), vec![c])
    }

    /// The monomial `t^k`.
    pub fn monomial(field: Field, k: usize) -> UniPoly {
        let mut c = vec![field.zero(); k + 1];
        c[k] = field.one();
        UniPoly { field, coeffs: c }
    }

    /// `t - a`.
    pub fn linear_root(a: &Scalar) -> UniPoly {
        let f = a.field();
        UniPoly::new(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a * self.field.from_i64(i as i64)).collect();
        UniPoly::new(self.field, c)
    }

    fn same_field(&self, other: &UniPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::new(self.field, c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        UniPoly::new(self.field, c)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UniPoly::new(self.field, c)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.same_field(d)?;
        let dd = d.degree().ok_or(Error::ZeroPolynomial("inverse"))?;
        let lc_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&c * b);
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(self.field, q), UniPoly::new(self.field, r)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Roots in the ground field; only for Q (rational root test) and F_p
    /// (exhaustive).
    pub fn rational_roots(&self) -> Vec<Scalar> {
        match self.field {
            Field::Fp { p } => (0..p).map(|r| self.field.element(r)).filter(|x| self.eval(x).is_zero()).collect(),
            Field::Q => {
                let Some((ints, _)) = self.integer_primitive() else { return Vec::new() };
                rational_roots_z(&ints).into_iter().filter(|x| self.eval(x).is_zero()).collect()
            }
        }
    }

    /// Over Q: an integer primitive associate (coefficients as BigInt, positive
    /// leading coefficient) together with the rational scale factor.
    fn integer_primitive(&self) -> Option<(Vec<BigInt>, Scalar)> {
        if self.is_zero() || self.field != Field::Q {
            return None;
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.as_rational().unwrap().denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let q = c.as_rational().unwrap();
                q.numer() * (&l / q.denom())
            })
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        Some((ints, self.field.from_bigint(&g) * self.field.from_bigint(&l).inv().unwrap()))
    }

    fn from_ints(ints: &[BigInt]) -> UniPoly {
        UniPoly::new(Field::Q, ints.iter().map(|c| Field::Q.from_bigint(c)).collect())
    }
}

/// Candidate rational roots p/q of an integer polynomial (p | a0, q | an).
fn rational_roots_z(c: &[BigInt]) -> Vec<Scalar> {
    let mut out = Vec::new();
    // strip the factor t^k
    let k = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    if k > 0 {
        out.push(Field::Q.zero());
    }
    let c = &c[k..];
    if c.len() < 2 {
        return out;
    }
    let (Some(a0), Some(an)) = (small_divisors(&c[0]), small_divisors(c.last().unwrap())) else {
        return out;
    };
    for p in &a0 {
        for q in &an {
            for s in [1i64, -1] {
                let x = Field::Q.from_bigint(&(BigInt::from(s) * p)) * Field::Q.from_bigint(q).inv().unwrap();
                if !out.contains(&x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Positive divisors of |n| if |n| is small enough to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let limit = BigInt::from(1u64 << 40);
    if n > limit {
        return None;
    }
    let n: u64 = n.try_into().ok()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` over Z.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut steps = (a.len() - b.len() + 1) as i64;
    while r.len() > db && !r.is_empty() {
        steps -= 1;
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c *= lb;
        }
    }
    r
}

/// Subresultant remainder sequence over Z; returns a primitive gcd.
fn subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let denom = &g * num_traits::pow(h.clone(), delta as usize);
        a = b;
        b = r.into_iter().map(|c| c / &denom).collect();
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta-1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h.clone(), delta as usize - 1)
        };
    }
    let mut cont = BigInt::zero();
    for c in &b {
        cont = cont.gcd(c);
    }
    b.into_iter().map(|c| c / &cont).collect()
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    p.same_field(q)?;
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    match p.field {
        Field::Q => {
            let (a, _) = p.integer_primitive().unwrap();
            let (b, _) = q.integer_primitive().unwrap();
            Ok(UniPoly::from_ints(&subresultant_gcd(&a, &b)).monic())
        }
        Field::Fp { .. } => {
            let (mut a, mut b) = (p.clone(), q.clone());
            while !b.is_zero() {
                let (_, r) = a.div_rem(&b)?;
                a = b;
                b = r;
            }
            Ok(a.monic())
        }
    }
}

pub fn poly_lcm(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() || q.is_zero() {
        return Ok(UniPoly::zero(p.field));
    }
    let g = poly_gcd(p, q)?;
    Ok(p.mul(q).exact_div(&g)?.monic())
}

/// Monic product of the distinct irreducible factors of `p`.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree part"));
    }
    let f = p.monic();
    if f.degree() == Some(0) {
        return Ok(f);
    }
    match f.field {
        Field::Q => {
            let g = poly_gcd(&f, &f.derivative())?;
            f.exact_div(&g)
        }
        Field::Fp { p: ch } => radical_fp(&f, ch),
    }
}

fn radical_fp(f: &UniPoly, ch: u64) -> Result<UniPoly> {
    let field = f.field;
    if f.degree().unwrap_or(0) == 0 {
        return Ok(UniPoly::one(field));
    }
    let df = f.derivative();
    if df.is_zero() {
        return radical_fp(&pth_root(f, ch), ch);
    }
    let c = poly_gcd(f, &df)?;
    let w = f.exact_div(&c)?;
    // strip from c every factor already present in w
    let mut rest = c;
    loop {
        let y = poly_gcd(&rest, &w)?;
        if y.degree() == Some(0) {
            break;
        }
        rest = rest.exact_div(&y)?;
    }
    if rest.degree() == Some(0) {
        return Ok(w);
    }
    // every remaining multiplicity is divisible by p, so rest = h(t^p)
    let r = radical_fp(&pth_root(&rest, ch), ch)?;
    Ok(w.mul(&r).monic())
}

/// For `f(t) = g(t^p)` over F_p returns `g` (the p-th root, since a^p = a).
fn pth_root(f: &UniPoly, ch: u64) -> UniPoly {
    let ch = ch as usize;
    let c = f.coeffs.iter().step_by(ch).cloned().collect();
    UniPoly::new(f.field, c)
}

pub fn is_squarefree(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree part"));
    }
    Ok(squarefree_part(p)?.degree() == p.degree())
}

/// Irreducibility over Q for degree <= 4, over F_p by trial division up to
/// degree 2 factors (enough for degree <= 4 as well, using the same bound).
/// `None` when the degree is out of reach.
pub fn is_irreducible_small(p: &UniPoly) -> Option<bool> {
    let d = p.degree()?;
    if d == 0 {
        return Some(false);
    }
    if d == 1 {
        return Some(true);
    }
    if d > 4 {
        return None;
    }
    if !p.rational_roots().is_empty() {
        return Some(false);
    }
    if d <= 3 {
        return Some(true);
    }
    match p.field {
        Field::Q => {
            let (ints, _) = p.integer_primitive()?;
            quartic_quadratic_factor(&ints).map(|f| f.is_none())
        }
        Field::Fp { p: ch } if ch <= 1000 => {
            // monic quadratics t^2 + a t + b
            for a in 0..ch {
                for b in 0..ch {
                    let q = UniPoly::new(p.field, vec![p.field.element(b), p.field.element(a), p.field.one()]);
                    if q.divides(p) {
                        return Some(false);
                    }
                }
            }
            Some(true)
        }
        Field::Fp { .. } => None,
    }
}

/// Search a factorisation of a primitive integer quartic into two integer
/// quadratics. `Some(None)` means none exists; `None` that the constant term
/// was too large to enumerate.
fn quartic_quadratic_factor(c: &[BigInt]) -> Option<Option<(UniPoly, UniPoly)>> {
    // make monic integer: substitute t = s / lc and multiply by lc^3
    let lc = c[4].clone();
    let mut m: Vec<BigInt> = (0..4).map(|i| &c[i] * num_traits::pow(lc.clone(), 3 - i)).collect();
    m.push(BigInt::one());
    let (c0, c1, c2, c3) = (&m[0], &m[1], &m[2], &m[3]);
    let divs = small_divisors(c0)?;
    for d0 in divs {
        for b in [d0.clone(), -d0.clone()] {
            if b.is_zero() {
                continue;
            }
            let d = c0 / &b;
            // (s^2 + a s + b)(s^2 + e s + d): a+e=c3, ae+b+d=c2, ad+be=c1
            let cands: Vec<BigInt> = if d != b {
                let num = c1 - &b * c3;
                let den = &d - &b;
                if (&num % &den).is_zero() {
                    vec![num / den]
                } else {
                    vec![]
                }
            } else {
                if c1 != &(&b * c3) {
                    continue;
                }
                // a, e roots of z^2 - c3 z + (c2 - 2b)
                let disc = c3 * c3 - BigInt::from(4) * (c2 - BigInt::from(2) * &b);
                if disc.is_negative() {
                    continue;
                }
                let r = disc.sqrt();
                if &r * &r != disc {
                    continue;
                }
                let two = BigInt::from(2);
                let mut v = Vec::new();
                for s in [&r, &(-&r)] {
                    let num = c3 + s;
                    if (&num % &two).is_zero() {
                        v.push(num / &two);
                    }
                }
                v
            };
            for a in cands {
                let e = c3 - &a;
                if &a * &e + &b + &d == *c2 && &a * &d + &b * &e == *c1 {
                    let q1 = UniPoly::from_ints(&[b.clone(), a.clone(), BigInt::one()]);
                    let q2 = UniPoly::from_ints(&[d.clone(), e, BigInt::one()]);
                    return Some(Some((q1, q2)));
                }
            }
        }
    }
    Some(None)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || mag != "1";
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.field, self)
    }
}
