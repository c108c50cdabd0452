use lielab::field::Field;
use lielab::linalg::{char_poly, min_poly, Matrix};
use lielab::poly::UniPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// det(t - M) by Laplace expansion along the first row, entries in K[t].
fn cofactor_det(field: Field, m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut acc = UniPoly::zero(field);
    for j in 0..n {
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].mul(&cofactor_det(field, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn oracle(m: &Matrix) -> UniPoly {
    let f = m.field();
    let n = m.rows();
    let t = UniPoly::monomial(f, 1);
    let rows: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(-m.get(i, j));
                    if i == j {
                        c.add(&t)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det(f, &rows)
}

fn random_matrix(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    let rows = (0..n).map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect()).collect();
    Matrix::from_rows(field, rows).unwrap()
}

#[test]
fn char_poly_agrees_with_cofactor_expansion() {
    for field in [Field::Q, Field::fp(2).unwrap(), Field::fp(3).unwrap(), Field::fp(5).unwrap()] {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for n in 0..=4 {
            for _ in 0..150 {
                let m = random_matrix(&mut rng, field, n);
                assert_eq!(char_poly(&m).unwrap(), oracle(&m), "{field} {m:?}");
            }
        }
    }
}

#[test]
fn min_poly_divides_char_poly_and_annihilates() {
    for field in [Field::Q, Field::fp(3).unwrap()] {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            for _ in 0..60 {
                let m = random_matrix(&mut rng, field, n);
                let chi = char_poly(&m).unwrap();
                let mu = min_poly(&m).unwrap();
                assert!(m.eval_poly(&chi).is_zero());
                assert!(m.eval_poly(&mu).is_zero());
                assert!(mu.divides(&chi));
                // minimality: no proper monic divisor of lower degree annihilates
                let d = mu.degree().unwrap();
                if d > 0 {
                    let mut powers = vec![Matrix::identity(field, n)];
                    for k in 1..d {
                        powers.push(powers[k - 1].mul(&m));
                    }
                    let flat: Vec<Vec<_>> = powers.iter().map(|p| p.entries().to_vec()).collect();
                    let sys = Matrix::from_rows(field, flat).unwrap();
                    assert_eq!(sys.rank(), d, "powers below deg mu must be independent");
                }
            }
        }
    }
}

#[test]
fn zero_by_zero_is_legal() {
    let z = Matrix::zeros(Field::Q, 0, 0);
    assert_eq!(char_poly(&z).unwrap(), UniPoly::one(Field::Q));
    assert_eq!(min_poly(&z).unwrap(), UniPoly::one(Field::Q));
}
