use crate::arith::NumberField;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Determinant over `K[t]` by fraction-free elimination. Every division is
/// exact by Sylvester's identity. The empty matrix has determinant 1.
pub fn block_determinant(m: &[Vec<Polynomial>], field: &NumberField) -> Result<Polynomial> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Validation("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(Polynomial::one(field));
    }
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(field);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(field)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &NumberField::rationals(), "t").unwrap()
    }

    /// Laplace expansion along the first row.
    fn cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero(m[0][0].field());
        for j in 0..m.len() {
            let minor: Vec<Vec<Polynomial>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &cofactor(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn small_examples() {
        let m = vec![vec![p("t"), p("1")], vec![p("1"), p("t")]];
        assert_eq!(block_determinant(&m, &NumberField::rationals()).unwrap(), p("t^2 - 1"));
        let id = vec![vec![p("1"), p("0")], vec![p("0"), p("1")]];
        assert_eq!(block_determinant(&id, &NumberField::rationals()).unwrap(), p("1"));
        assert_eq!(block_determinant(&[], &NumberField::rationals()).unwrap(), p("1"));
    }

    #[test]
    fn needs_pivoting() {
        let m = vec![
            vec![p("0"), p("1"), p("t")],
            vec![p("t"), p("0"), p("1")],
            vec![p("1"), p("t"), p("0")],
        ];
        assert_eq!(block_determinant(&m, &NumberField::rationals()).unwrap(), cofactor(&m));
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let q = NumberField::rationals();
        for n in 1..=6 {
            for _ in 0..3 {
                let m: Vec<Vec<Polynomial>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..4)).collect();
                                Polynomial::from_ints(&q, &c)
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(block_determinant(&m, &NumberField::rationals()).unwrap(), cofactor(&m));
            }
        }
    }
}
