use crate::error::{Error, Result};
use crate::poly::squarefree_part;

use super::matrix::{char_poly, min_poly, Matrix};

/// Additive Jordan–Chevalley decomposition `M = S + N` with `S` semisimple,
/// `N` nilpotent and `SN = NS`.
///
/// Newton iteration `S <- S - g(S) g'(S)^{-1}` where `g` is the squarefree
/// part of the characteristic polynomial. Over a perfect field `g` is
/// separable, so `g'(S)` stays invertible and the iteration converges
/// quadratically in the `g(M)`-adic sense.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix)> {
    let chi = char_poly(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok((m.clone(), m.clone()));
    }
    let g = squarefree_part(&chi)?;
    let dg = g.derivative();
    let mut s = m.clone();
    let steps = usize::BITS - n.leading_zeros() + 2;
    for _ in 0..steps {
        let gs = s.eval_poly(&g);
        if gs.is_zero() {
            let nil = m.sub(&s);
            #[cfg(debug_assertions)]
            check(m, &s, &nil);
            return Ok((s, nil));
        }
        let inv =
            s.eval_poly(&dg).inverse()?.ok_or_else(|| Error::Internal("g'(S) singular in Newton lifting".into()))?;
        s = s.sub(&gs.mul(&inv));
    }
    Err(Error::Internal("Newton lifting did not converge".into()))
}

#[cfg(debug_assertions)]
fn check(m: &Matrix, s: &Matrix, n: &Matrix) {
    assert_eq!(&s.add(n), m, "S + N = M");
    assert!(s.commutator(n).is_zero(), "SN = NS");
    assert!(n.is_nilpotent(), "N nilpotent");
    let mu = min_poly(s).expect("square");
    assert!(crate::poly::is_squarefree(&mu).expect("nonzero"), "min_poly(S) squarefree");
}
