use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::matrix::Matrix;

/// Diagonal of a form congruent to the symmetric matrix `g`.
///
/// Symmetric Gaussian elimination: a nonzero diagonal pivot is taken when one
/// exists; otherwise an off-diagonal entry `g_ij` is moved onto the diagonal by
/// adding row/column `j` to row/column `i` (needs characteristic != 2). Zero
/// entries in the output number exactly the corank.
pub fn diagonalize_quadratic(g: &Matrix) -> Result<Vec<Scalar>> {
    if !g.is_square() {
        return Err(Error::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let field = g.field();
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("quadratic forms in characteristic 2".into()));
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a.get(i, i).is_zero()) {
            swap_sym(&mut a, k, i);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a.get(i, j).is_zero())
        {
            add_sym(&mut a, i, j);
            swap_sym(&mut a, k, i);
        } else {
            out.extend((k..n).map(|_| field.zero()));
            break;
        }
        let p = a.get(k, k).clone();
        let pinv = p.inv().expect("nonzero pivot");
        for i in k + 1..n {
            let c = a.get(i, k) * &pinv;
            if c.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &(&c * a.get(k, j));
                a.set(i, j, v);
            }
            for j in k..n {
                let v = a.get(j, i) - &(&c * a.get(j, k));
                a.set(j, i, v);
            }
        }
        out.push(p);
    }
    Ok(out)
}

fn swap_sym(a: &mut Matrix, i: usize, j: usize) {
    if i != j {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
    }
}

// row_i += row_j, then col_i += col_j
fn add_sym(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c) + a.get(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i) + a.get(r, j);
        a.set(r, i, v);
    }
}

/// Signature `(positive, negative, zero)` of a rational symmetric matrix.
pub fn inertia(g: &Matrix) -> Result<(usize, usize, usize)> {
    let d = diagonalize_quadratic(g)?;
    let mut r = (0, 0, 0);
    for x in &d {
        match x.signum() {
            Some(Ordering::Greater) => r.0 += 1,
            Some(Ordering::Less) => r.1 += 1,
            Some(_) => r.2 += 1,
            None => return Err(Error::Unsupported("signature over a finite field".into())),
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Scalar {
        Field::Q.ratio(a, b).unwrap()
    }

    #[test]
    fn examples() {
        let f = Field::Q;
        let d = diagonalize_quadratic(&Matrix::identity(f, 3)).unwrap();
        assert_eq!(d, vec![q(1, 1), q(1, 1), q(1, 1)]);
        let g = Matrix::from_i64(f, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        assert_eq!(diagonalize_quadratic(&g).unwrap(), vec![q(4, 1); 3]);
        let h = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        assert_eq!(diagonalize_quadratic(&h).unwrap(), vec![q(2, 1), q(-1, 2)]);
        assert_eq!(inertia(&h).unwrap(), (1, 1, 0));
        assert_eq!(diagonalize_quadratic(&Matrix::from_i64(f, &[&[0, 1], &[2, 0]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn corank_is_number_of_zeros() {
        let f = Field::Q;
        let g = Matrix::from_i64(f, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
        let d = diagonalize_quadratic(&g).unwrap();
        assert_eq!(d.iter().filter(|x| x.is_zero()).count(), 3 - g.rank());
    }

    fn sym() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-3i64..4, 10)
    }

    fn build(v: &[i64], n: usize) -> Matrix {
        let f = Field::Q;
        let mut m = Matrix::zeros(f, n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f.from_i64(v[k]));
                m.set(j, i, f.from_i64(v[k]));
                k += 1;
            }
        }
        m
    }

    proptest! {
        #[test]
        fn sylvester_inertia_invariant(v in sym(), p in prop::collection::vec(-2i64..3, 16)) {
            let g = build(&v, 4);
            let rows: Vec<Vec<Scalar>> = p.chunks(4).map(|r| r.iter().map(|&x| Field::Q.from_i64(x)).collect()).collect();
            let pm = Matrix::from_rows(Field::Q, rows).unwrap();
            prop_assume!(pm.rank() == 4);
            let h = pm.transpose().mul(&g).mul(&pm);
            prop_assert_eq!(inertia(&g).unwrap(), inertia(&h).unwrap());
            let d = diagonalize_quadratic(&g).unwrap();
            prop_assert_eq!(d.iter().filter(|x| x.is_zero()).count(), 4 - g.rank());
        }
    }
}
