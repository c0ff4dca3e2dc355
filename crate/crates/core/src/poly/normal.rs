use num_traits::Signed;

use super::Polynomial;
use crate::error::{Error, Result};

/// Canonical representative of a polynomial modulo the units `±t^k`:
/// `original = sign * t^shift * poly`, where `poly` has nonzero constant
/// term and the first nonzero power-basis coordinate of that constant term
/// is positive. Number fields carry no ordering, so this coordinate rule is
/// an arbitrary but total convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalForm {
    pub poly: Polynomial,
    pub shift: usize,
    pub sign: i8,
}

impl UnitNormalForm {
    pub fn of(p: &Polynomial) -> Result<Self> {
        let shift = p
            .t_valuation()
            .ok_or_else(|| Error::Domain("unit normal form of the zero polynomial".into()))?;
        let core = p.shr(shift);
        let negative = core.coeffs()[0].leading_coordinate().is_some_and(|q| q.is_negative());
        Ok(if negative {
            UnitNormalForm {
                poly: -core,
                shift,
                sign: -1,
            }
        } else {
            UnitNormalForm {
                poly: core,
                shift,
                sign: 1,
            }
        })
    }

    /// Rebuilds `sign * t^shift * poly`.
    pub fn expand(&self) -> Polynomial {
        let p = self.poly.shl(self.shift);
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }
}
