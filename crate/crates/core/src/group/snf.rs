use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{GroupKind, GroupPresentation};
use crate::error::{Error, Result};

/// `U A V = D` with `D` diagonal; only `V` (the column operations) is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    /// Unimodular column transform, `cols × cols`.
    pub v: Vec<Vec<BigInt>>,
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// col_j -= q * col_i
fn col_axpy(m: &mut [Vec<BigInt>], j: usize, i: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let t = &row[i] * q;
        row[j] -= t;
    }
}

fn row_axpy(m: &mut [Vec<BigInt>], j: usize, i: usize, q: &BigInt) {
    let src = m[i].clone();
    for (x, s) in m[j].iter_mut().zip(&src) {
        *x -= s * q;
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> SmithForm {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let rows = m.len();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(diagonal, v);
            };
            m.swap(t, pi);
            swap_cols(&mut m, t, pj);
            swap_cols(&mut v, t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, i, t, &q);
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    let neg_one = BigInt::from(-1);
                    row_axpy(&mut m, t, i, &neg_one);
                }
                None => break,
            }
        }
        diagonal.push(m[t][t].abs());
    }
    finish(diagonal, v)
}

fn finish(diagonal: Vec<BigInt>, v: Vec<Vec<BigInt>>) -> SmithForm {
    SmithForm { diagonal, v }
}

/// `H_1` together with a surjection onto `Z` when the free rank is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Value of α on each generator; α is the first free coordinate of
    /// `H_1`. Empty when `H_1` is finite.
    pub values: Vec<i64>,
    /// α mod 2.
    pub epsilon: Vec<u8>,
}

impl Abelianization {
    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn relation_matrix(g: &GroupPresentation) -> Vec<Vec<BigInt>> {
    let n = g.num_generators();
    g.relators
        .iter()
        .map(|r| (0..n).map(|j| BigInt::from(r.exponent_sum(j))).collect())
        .collect()
}

/// Computes `H_1` with no knot-kind checks.
pub fn homology(g: &GroupPresentation) -> Abelianization {
    let n = g.num_generators();
    let snf = smith_normal_form(&relation_matrix(g), n);
    let rank = snf.diagonal.len();
    let torsion: Vec<BigInt> = snf.diagonal.iter().filter(|d| **d > BigInt::from(1)).cloned().collect();
    let free_rank = n - rank;
    let mut values: Vec<i64> = if free_rank > 0 {
        snf.v
            .iter()
            .map(|row| row[rank].to_i64().expect("small abelianization"))
            .collect()
    } else {
        Vec::new()
    };
    let orient = if values.is_empty() {
        None
    } else {
        g.meridian
            .as_ref()
            .map(|m| m.weight(&values))
            .filter(|w| *w != 0)
            .or_else(|| values.iter().copied().find(|v| *v != 0))
    };
    if orient.is_some_and(|o| o < 0) {
        values.iter_mut().for_each(|v| *v = -*v);
    }
    let epsilon = values.iter().map(|v| v.rem_euclid(2) as u8).collect();
    Abelianization {
        free_rank,
        torsion,
        values,
        epsilon,
    }
}

/// `H_1` of the presentation; knot kinds additionally require `H_1 = Z`
/// and, for sphere knots, a meridian of homology class ±1.
pub fn abelianize(g: &GroupPresentation) -> Result<Abelianization> {
    let ab = homology(g);
    if g.kind != GroupKind::Generic && !ab.is_infinite_cyclic() {
        return Err(Error::Validation(format!(
            "{} group must have H_1 = Z, found {}",
            g.kind.as_str(),
            ab.describe()
        )));
    }
    if g.kind == GroupKind::SphereKnot {
        if let Some(m) = &g.meridian {
            if m.weight(&ab.values) != 1 {
                return Err(Error::Validation("sphere-knot meridian does not generate H_1".into()));
            }
        }
    }
    Ok(ab)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn invariant_factors() {
        let s = smith_normal_form(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3);
        let d: Vec<i64> = s.diagonal.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn column_transform_is_unimodular() {
        let a = mat(&[&[3, 5, 7], &[1, 1, 1]]);
        let s = smith_normal_form(&a, 3);
        let v: Vec<Vec<crate::arith::Rational>> =
            s.v.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| crate::arith::Rational::from_integer(x.clone()))
                        .collect()
                })
                .collect();
        let det = crate::arith::det_rational(&v);
        assert_eq!(det.abs(), crate::arith::rat(1));
    }
}
