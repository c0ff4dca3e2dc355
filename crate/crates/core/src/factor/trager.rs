//! Trager's algorithm: factor a squarefree polynomial over `K = Q(z)` by
//! shifting `t -> t - s z` until its norm is squarefree over `Q`, factoring
//! the norm, and taking gcds of the shifted polynomial with each rational
//! factor.

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{poly_resultant, Polynomial};

const MAX_SHIFT: i64 = 64;

/// Shifts tried in order: 0, 1, -1, 2, -2, ...
fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

/// Monic irreducible factors of a monic squarefree `g` over its field.
/// `norm0`, when given, is the already computed norm of `g` itself.
pub fn factor_squarefree(g: &Polynomial, norm0: Option<Polynomial>, rng: &mut ChaCha8Rng) -> Result<Vec<Polynomial>> {
    let field = g.field().clone();
    if g.degree().unwrap_or(0) <= 1 {
        return Ok(vec![g.clone()]);
    }
    let z = field.generator();
    let mut norm0 = norm0;
    for s in shifts().take_while(|s| s.abs() <= MAX_SHIFT) {
        let shift = z.scale(&crate::arith::rat(s));
        // g_s(t) = g(t - s z)
        let g_s = if s == 0 { g.clone() } else { g.shift(&-&shift) };
        let norm = match (s, norm0.take()) {
            (0, Some(n)) => n,
            _ => poly_resultant(&g_s),
        };
        let nq = norm.rational_coeffs().expect("norm is rational");
        if !super::has_squarefree_witness(&nq) {
            continue;
        }
        let rational_factors = super::factor_over_q_with_rng(&norm, rng)?;
        if rational_factors.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        let mut out = Vec::with_capacity(rational_factors.len());
        for n_i in rational_factors {
            let h = g_s.gcd(&n_i.embed(&field)?)?;
            out.push(if s == 0 { h } else { h.shift(&shift) });
        }
        debug_assert_eq!(
            out.iter().map(|h| h.degree().unwrap()).sum::<usize>(),
            g.degree().unwrap()
        );
        return Ok(out);
    }
    Err(Error::Domain(format!(
        "no shift |s| <= {MAX_SHIFT} gives a squarefree norm; is the input squarefree?"
    )))
}
