//! Twisted Alexander (Wada) invariant: the Fox Jacobian under
//! `Φ(g) = t^{α(g)} ρ(g)`, one block column deleted, divided by
//! `det Φ(g_j - 1)`.

mod bareiss;

use std::collections::BTreeMap;
use std::fmt;

pub use bareiss::block_determinant;

use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::group::{fox_derivative, GroupPresentation};
use crate::poly::{Polynomial, UnitNormalForm};
use crate::rep::{Matrix2, Representation};

/// Fox Jacobian under `Φ`, already multiplied by `t^shift` so every entry
/// lies in `K[t]`. `blocks[i][j]` is the 2×2 image of `∂r_i/∂g_j`.
#[derive(Clone, Debug)]
pub struct BlockMatrix {
    pub blocks: Vec<Vec<[[Polynomial; 2]; 2]>>,
    pub columns: usize,
    pub shift: i64,
}

impl BlockMatrix {
    /// Scalar matrix of size `2(n-1)` with block column `j` removed.
    pub fn without_column(&self, j: usize) -> Vec<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(2 * self.blocks.len());
        for row in &self.blocks {
            for r in 0..2 {
                let mut line = Vec::with_capacity(2 * (self.columns - 1));
                for (k, block) in row.iter().enumerate() {
                    if k != j {
                        line.push(block[r][0].clone());
                        line.push(block[r][1].clone());
                    }
                }
                out.push(line);
            }
        }
        out
    }
}

pub fn wada_block_matrix(g: &GroupPresentation, alpha: &[i64], rho: &Representation) -> Result<BlockMatrix> {
    let n = g.num_generators();
    if g.deficiency() != 1 {
        return Err(Error::Validation(format!(
            "the torsion needs a deficiency-one presentation: {} generators require {} relators, found {}",
            n,
            n - 1,
            g.relators.len()
        )));
    }
    if alpha.len() != n || rho.images.len() != n {
        return Err(Error::Validation("α and ρ must cover every generator".into()));
    }
    let field = &rho.field;
    // Laurent entries: exponent -> accumulated matrix
    let mut laurent: Vec<Vec<BTreeMap<i64, Matrix2>>> = Vec::with_capacity(g.relators.len());
    let mut min_exp = i64::MAX;
    for r in &g.relators {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut entry: BTreeMap<i64, Matrix2> = BTreeMap::new();
            for (w, c) in fox_derivative(r, j) {
                let e = w.weight(alpha);
                let m = rho.evaluate_word(&w).scale(&field.from_int(c));
                let slot = entry
                    .entry(e)
                    .or_insert_with(|| Matrix2::from_ints(field, [[0, 0], [0, 0]]));
                *slot = add(slot, &m);
                min_exp = min_exp.min(e);
            }
            row.push(entry);
        }
        laurent.push(row);
    }
    let shift = if min_exp == i64::MAX { 0 } else { -min_exp };
    let blocks = laurent
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|entry| {
                    let mut coeffs: [[Vec<FieldElement>; 2]; 2] = Default::default();
                    for (e, m) in entry {
                        let k = (e + shift) as usize;
                        for (r, line) in m.entries().iter().enumerate() {
                            for (c, x) in line.iter().enumerate() {
                                let v = &mut coeffs[r][c];
                                if v.len() <= k {
                                    v.resize(k + 1, field.zero());
                                }
                                v[k] = &v[k] + *x;
                            }
                        }
                    }
                    coeffs.map(|line| line.map(|v| Polynomial::new(field, v)))
                })
                .collect()
        })
        .collect();
    Ok(BlockMatrix {
        blocks,
        columns: n,
        shift,
    })
}

fn add(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    Matrix2::new(&a.a + &b.a, &a.b + &b.b, &a.c + &b.c, &a.d + &b.d)
}

/// `det(Φ(g) - I)` up to a power of `t`: `t^{2|a|} - tr ρ(g) t^{|a|} + 1`.
pub fn column_denominator(alpha: i64, m: &Matrix2) -> Polynomial {
    let field = m.field();
    let k = alpha.unsigned_abs() as usize;
    let mut coeffs = vec![field.zero(); 2 * k + 1];
    coeffs[0] = field.one();
    coeffs[k] = &coeffs[k] - &m.trace();
    coeffs[2 * k] = &coeffs[2 * k] + &field.one();
    Polynomial::new(field, coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionValue {
    /// Determinant with the deleted column removed.
    pub numerator: Polynomial,
    /// `det Φ(g_j - 1)`.
    pub denominator: Polynomial,
    pub exact_division: bool,
    /// Unit normal form of the quotient, present when the division is
    /// exact and the value is nonzero.
    pub normalized: Option<UnitNormalForm>,
    /// Fraction in lowest terms with a monic denominator.
    pub reduced: (Polynomial, Polynomial),
    pub deleted_column: usize,
}

impl TorsionValue {
    fn from_fraction(numerator: Polynomial, denominator: Polynomial, deleted_column: usize) -> Result<Self> {
        let (q, r) = numerator.divrem(&denominator)?;
        let exact = r.is_zero();
        let reduced = if exact {
            (q.clone(), Polynomial::one(q.field()))
        } else {
            let g = numerator.gcd(&denominator)?;
            let num = numerator.exact_div(&g)?;
            let den = denominator.exact_div(&g)?;
            let lc = den.leading().unwrap().inverse()?;
            (num.scale(&lc), den.scale(&lc))
        };
        let normalized = if exact && !q.is_zero() {
            Some(q.unit_normalize()?)
        } else {
            None
        };
        Ok(TorsionValue {
            numerator,
            denominator,
            exact_division: exact,
            normalized,
            reduced,
            deleted_column,
        })
    }

    /// The torsion as a unit-normalized polynomial.
    pub fn polynomial(&self) -> Result<&Polynomial> {
        match &self.normalized {
            Some(n) => Ok(&n.poly),
            None if self.exact_division => Err(Error::Domain("the torsion vanishes".into())),
            None => Err(Error::Domain(format!("the torsion is not a polynomial: {self}"))),
        }
    }

    /// Equality of values up to the units `±t^k`.
    pub fn same_value(&self, other: &TorsionValue) -> Result<bool> {
        let a = &self.numerator * &other.denominator;
        let b = &other.numerator * &self.denominator;
        if a.is_zero() || b.is_zero() {
            return Ok(a.is_zero() && b.is_zero());
        }
        a.equal_up_to_unit(&b)
    }
}

impl fmt::Display for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.normalized {
            return write!(f, "{}", n.poly);
        }
        if self.exact_division {
            return f.write_str("0");
        }
        let num = self
            .reduced
            .0
            .unit_normalize()
            .map(|u| u.poly)
            .unwrap_or_else(|_| self.reduced.0.clone());
        write!(f, "({}) / ({})", num, self.reduced.1)
    }
}

fn admissible_columns(alpha: &[i64], rho: &Representation) -> Vec<(usize, Polynomial)> {
    alpha
        .iter()
        .zip(&rho.images)
        .enumerate()
        .map(|(j, (a, m))| (j, column_denominator(*a, m)))
        .filter(|(_, d)| !d.is_zero())
        .collect()
}

/// Wada invariant with block column `delete` removed; `None` picks the
/// admissible column of lowest denominator degree, first such generator.
pub fn twisted_alexander(
    g: &GroupPresentation,
    alpha: &[i64],
    rho: &Representation,
    delete: Option<usize>,
) -> Result<TorsionValue> {
    let m = wada_block_matrix(g, alpha, rho)?;
    let columns = admissible_columns(alpha, rho);
    let (j, den) = match delete {
        Some(j) => {
            if j >= g.num_generators() {
                return Err(Error::Validation(format!("no generator with index {j}")));
            }
            columns.into_iter().find(|(k, _)| *k == j).ok_or_else(|| {
                Error::Validation(format!(
                    "column `{}` is not admissible: det Φ(g - 1) = 0",
                    g.generators[j]
                ))
            })?
        }
        None => columns
            .into_iter()
            .min_by_key(|(k, d)| (d.degree(), *k))
            .ok_or_else(|| Error::Validation("no admissible column: det Φ(g - 1) = 0 for every generator".into()))?,
    };
    let num = block_determinant(&m.without_column(j), &rho.field)?;
    TorsionValue::from_fraction(num, den, j)
}

/// Every admissible deleted column, in generator order.
pub fn twisted_alexander_all_columns(
    g: &GroupPresentation,
    alpha: &[i64],
    rho: &Representation,
) -> Result<Vec<TorsionValue>> {
    let m = wada_block_matrix(g, alpha, rho)?;
    admissible_columns(alpha, rho)
        .into_iter()
        .map(|(j, den)| TorsionValue::from_fraction(block_determinant(&m.without_column(j), &rho.field)?, den, j))
        .collect()
}

/// Torsion of the lift `g ↦ (-1)^{α(g)} ρ(g)`, which is `T(-t)`.
pub fn torsion_of_other_lift(t: &TorsionValue) -> Result<TorsionValue> {
    if !t.exact_division {
        return Err(Error::Domain("the other lift needs a polynomial torsion".into()));
    }
    let numerator = t.numerator.substitute_neg_t();
    let denominator = t.denominator.substitute_neg_t();
    TorsionValue::from_fraction(numerator, denominator, t.deleted_column)
}

#[cfg(test)]
mod tests;
