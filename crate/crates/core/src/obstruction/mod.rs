//! The free 2-periodicity test: does `P(t) = T(-t^2)` split as
//! `f(t) f(-t)` over the coefficient field?
//!
//! Write `σ̂(g) = (-1)^{deg g} g(-t)`, an involution on monic irreducibles.
//! If `P = f(t) f(-t)` and `f = c ∏ g^{e_g}`, then
//! `P = (-1)^{deg f} c^2 ∏ g^{e_g} σ̂(g)^{e_g}`. Comparing with the unique
//! factorization `P = lc ∏ g^{m_g}` gives `m_g = e_g + e_{σ̂ g}`: a fixed
//! point of σ̂ has even multiplicity, a swapped pair has equal
//! multiplicities, and `(-1)^{deg P / 2} lc(P)` is the square `c^2`.
//! Torsion is only defined up to `±t^k`, so `-P` is tested as well.
//! Conversely those three conditions let us write `f` down directly, so
//! they are equivalent to the existence of `f`.

use std::fmt;

use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::factor::{factor_over_nf_with, sqrt_in_field_with, FactorOptions, Factorization};
use crate::group::{abelianize, reidemeister_schreier_index2, KernelPresentation};
use crate::poly::Polynomial;
use crate::rep::{meridian_trace_sign, restrict_representation, validate_representation, Representation, TraceSign};
use crate::torsion::{torsion_of_other_lift, twisted_alexander, TorsionValue};

/// Pair swaps beyond this many pairs are not searched for the least `f`.
const MAX_SWAP_SEARCH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Consistent,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Consistent => "CONSISTENT",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lift {
    Plus,
    Minus,
}

impl Lift {
    pub fn opposite(self) -> Lift {
        match self {
            Lift::Plus => Lift::Minus,
            Lift::Minus => Lift::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Lift::Plus => "plus",
            Lift::Minus => "minus",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LiftSelection {
    Plus,
    Minus,
    #[default]
    Both,
}

impl LiftSelection {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftSelection::Plus => "plus",
            LiftSelection::Minus => "minus",
            LiftSelection::Both => "both",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "plus" => Some(LiftSelection::Plus),
            "minus" => Some(LiftSelection::Minus),
            "both" => Some(LiftSelection::Both),
            _ => None,
        }
    }

    fn includes(self, lift: Lift) -> bool {
        matches!(
            (self, lift),
            (LiftSelection::Both, _) | (LiftSelection::Plus, Lift::Plus) | (LiftSelection::Minus, Lift::Minus)
        )
    }
}

/// Why a polynomial is not of the form `f(t) f(-t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingFailure {
    OddInvariantFactor {
        factor: Polynomial,
        multiplicity: usize,
    },
    UnequalPair {
        factor: Polynomial,
        multiplicity: usize,
        partner: Polynomial,
        partner_multiplicity: usize,
    },
    NonSquareLeading {
        value: FieldElement,
    },
}

impl fmt::Display for PairingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingFailure::OddInvariantFactor { factor, multiplicity } => write!(
                f,
                "factor {factor} is fixed by g(t) -> (-1)^deg g g(-t) but has odd multiplicity {multiplicity}"
            ),
            PairingFailure::UnequalPair {
                factor,
                multiplicity,
                partner,
                partner_multiplicity,
            } => write!(
                f,
                "factor {factor} has multiplicity {multiplicity} but its partner {partner} has multiplicity {partner_multiplicity}"
            ),
            PairingFailure::NonSquareLeading { value } => {
                write!(f, "neither {value} nor its negative is a square in the field")
            }
        }
    }
}

/// Result of the pairing test on one polynomial.
#[derive(Clone, Debug)]
pub struct PairingOutcome {
    pub polynomial: Polynomial,
    pub factorization: Factorization,
    pub verdict: Verdict,
    pub factor_f: Option<Polynomial>,
    pub failures: Vec<PairingFailure>,
    /// `f(t) f(-t) = unit * P`, `unit = ±1`.
    pub unit: i8,
}

#[derive(Clone, Debug)]
pub struct LiftOutcome {
    pub lift: Lift,
    pub outcome: PairingOutcome,
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    /// `f` from the first passing lift.
    pub factor_f: Option<Polynomial>,
    /// Factorization of the polynomial behind `factor_f`, or of the first
    /// tested polynomial when every lift fails.
    pub factorization: Factorization,
    pub lift_tested: LiftSelection,
    pub lifts: Vec<LiftOutcome>,
    pub notes: Vec<String>,
}

impl ObstructionReport {
    pub fn passing_lifts(&self) -> Vec<Lift> {
        self.lifts
            .iter()
            .filter(|l| l.outcome.verdict == Verdict::Consistent)
            .map(|l| l.lift)
            .collect()
    }
}

/// The pairing test on `P`; `P` must be a nonzero even polynomial.
pub fn check_pairing(p: &Polynomial) -> Result<PairingOutcome> {
    check_pairing_with(p, &FactorOptions::default())
}

pub fn check_pairing_with(p: &Polynomial, opts: &FactorOptions) -> Result<PairingOutcome> {
    if p.is_zero() {
        return Err(Error::Domain("the pairing test needs a nonzero polynomial".into()));
    }
    if !p.is_even() {
        return Err(Error::Domain(format!("{p} is not even in t; expected T(-t^2)")));
    }
    let field = p.field().clone();
    let factorization = factor_over_nf_with(p, opts)?;
    let mut failures = Vec::new();
    let mut invariant: Vec<(Polynomial, usize)> = Vec::new();
    let mut pairs: Vec<(Polynomial, Polynomial, usize)> = Vec::new();
    let mut used = vec![false; factorization.factors.len()];
    for (i, (g, m)) in factorization.factors.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let h = g.sigma_hat();
        if &h == g {
            if m % 2 == 1 {
                failures.push(PairingFailure::OddInvariantFactor {
                    factor: g.clone(),
                    multiplicity: *m,
                });
            }
            invariant.push((g.clone(), m / 2));
            continue;
        }
        let partner = factorization.factors.iter().position(|(x, _)| *x == h);
        let pm = partner.map(|j| factorization.factors[j].1).unwrap_or(0);
        if let Some(j) = partner {
            used[j] = true;
        }
        if pm != *m {
            failures.push(PairingFailure::UnequalPair {
                factor: g.clone(),
                multiplicity: *m,
                partner: h.clone(),
                partner_multiplicity: pm,
            });
        }
        pairs.push((g.clone(), h, *m));
    }
    // P is only meaningful up to sign, so either sign of the leading unit
    // may be the square c^2.
    let half = p.degree().unwrap() / 2;
    let lead = p.leading().unwrap();
    let target = if half % 2 == 1 { -lead } else { lead.clone() };
    let mut root = sqrt_in_field_with(&target, opts)?;
    let mut unit: i8 = 1;
    if root.is_none() {
        root = sqrt_in_field_with(&-&target, opts)?;
        unit = -1;
    }
    if root.is_none() {
        failures.push(PairingFailure::NonSquareLeading { value: target });
    }
    if !failures.is_empty() {
        return Ok(PairingOutcome {
            polynomial: p.clone(),
            factorization,
            verdict: Verdict::Obstructed,
            factor_f: None,
            failures,
            unit: 1,
        });
    }
    let c = root.unwrap();
    let fixed = invariant
        .iter()
        .fold(Polynomial::one(&field), |acc, (g, e)| &acc * &g.pow(*e as u32));
    let choose = |mask: u64| -> Polynomial {
        let mut f = fixed.clone();
        for (k, (g, h, m)) in pairs.iter().enumerate() {
            let pick = if k < 64 && mask >> k & 1 == 1 { h } else { g };
            f = &f * &pick.pow(*m as u32);
        }
        let f = f.scale(&c);
        let sign = f.unit_normalize().expect("nonzero").sign;
        if sign < 0 {
            -f
        } else {
            f
        }
    };
    let searched = pairs.len().min(MAX_SWAP_SEARCH);
    let f = (0..1u64 << searched).map(choose).min_by(|a, b| a.lex_cmp(b)).unwrap();
    let check = &f * &f.substitute_neg_t();
    if check != p.scale(&field.from_int(unit as i64)) {
        return Err(Error::Domain(format!(
            "internal error: assembled f does not satisfy f(t) f(-t) = P ({f})"
        )));
    }
    Ok(PairingOutcome {
        polynomial: p.clone(),
        factorization,
        verdict: Verdict::Consistent,
        factor_f: Some(f),
        failures: Vec::new(),
        unit,
    })
}

/// Runs the pairing test for the lifts selected. `t` is the torsion of
/// the representation whose meridian trace sign is `declared`;
/// `t(-t^2)` factoring as `f(t) f(-t)` is attributed to the opposite lift
/// and `t(t^2)` (the other lift's `T(-t^2)`) to the declared one.
pub fn free_two_periodicity_check(
    t: &Polynomial,
    declared: Lift,
    selection: LiftSelection,
    opts: &FactorOptions,
) -> Result<ObstructionReport> {
    if t.is_zero() {
        return Err(Error::Domain("the torsion vanishes".into()));
    }
    let mut lifts = Vec::new();
    let candidates = [
        (declared.opposite(), t.substitute_neg_t_squared()),
        (declared, t.substitute_t_squared()),
    ];
    for (lift, p) in candidates {
        if selection.includes(lift) {
            lifts.push(LiftOutcome {
                lift,
                outcome: check_pairing_with(&p, opts)?,
            });
        }
    }
    lifts.sort_by_key(|l| l.lift != Lift::Plus);
    let passing = lifts.iter().find(|l| l.outcome.verdict == Verdict::Consistent);
    let verdict = if passing.is_some() {
        Verdict::Consistent
    } else {
        Verdict::Obstructed
    };
    let factorization = passing.unwrap_or(&lifts[0]).outcome.factorization.clone();
    let factor_f = passing.and_then(|l| l.outcome.factor_f.clone());
    let mut notes = Vec::new();
    for l in &lifts {
        match l.outcome.verdict {
            Verdict::Consistent => notes.push(format!("{} lift: factors as f(t) f(-t)", l.lift.as_str())),
            Verdict::Obstructed => {
                for fail in &l.outcome.failures {
                    notes.push(format!("{} lift: {fail}", l.lift.as_str()));
                }
            }
        }
    }
    if verdict == Verdict::Obstructed {
        notes.push("not freely 2-periodic".into());
    }
    Ok(ObstructionReport {
        verdict,
        factor_f,
        factorization,
        lift_tested: selection,
        lifts,
        notes,
    })
}

/// Same test starting from a computed torsion value.
pub fn free_two_periodicity_check_torsion(
    t: &TorsionValue,
    declared: Lift,
    selection: LiftSelection,
    opts: &FactorOptions,
) -> Result<ObstructionReport> {
    let p = t.polynomial()?;
    free_two_periodicity_check(p, declared, selection, opts)
}

/// `T_K(-t^2) = T_Kbar(t) T_Kbar(-t)` up to units.
pub fn cross_check_quotient(t_k: &Polynomial, t_kbar: &Polynomial) -> Result<bool> {
    if t_k.field() != t_kbar.field() {
        return Err(Error::FieldMismatch);
    }
    let lhs = t_k.substitute_neg_t_squared();
    let rhs = t_kbar * &t_kbar.substitute_neg_t();
    if lhs.is_zero() || rhs.is_zero() {
        return Ok(lhs.is_zero() && rhs.is_zero());
    }
    lhs.equal_up_to_unit(&rhs)
}

/// Everything computed on the way from a quotient representation to the
/// cover identity.
#[derive(Clone, Debug)]
pub struct CoverCheck {
    pub kernel: KernelPresentation,
    pub restricted: Representation,
    /// Torsion of the quotient group.
    pub quotient_torsion: TorsionValue,
    /// Torsion of the restriction to the kernel, in the variable `t^2`.
    pub restricted_torsion: TorsionValue,
    /// `restricted_torsion(-t)`, the torsion of the other lift upstairs.
    pub cover_torsion: TorsionValue,
    pub restricted_meridian: Option<TraceSign>,
    pub identity_holds: bool,
}

/// Restricts `rho_bar` to the index-2 kernel of ε, computes both torsions
/// and checks `T_K(-t^2) = T_Kbar(t) T_Kbar(-t)`.
pub fn cover_pipeline(rho_bar: &Representation) -> Result<CoverCheck> {
    validate_representation(rho_bar).into_result(&rho_bar.group)?;
    let g = &rho_bar.group;
    let ab = abelianize(g)?;
    if ab.values.is_empty() {
        return Err(Error::Validation(format!("H_1 = {} has no map onto Z", ab.describe())));
    }
    let quotient_torsion = twisted_alexander(g, &ab.values, rho_bar, None)?;
    let kernel = reidemeister_schreier_index2(g)?;
    let restricted = restrict_representation(rho_bar, &kernel)?;
    let restricted_torsion = twisted_alexander(&kernel.group, &kernel.alpha, &restricted, None)?;
    let cover_torsion = torsion_of_other_lift(&restricted_torsion)?;
    let identity_holds = cross_check_quotient(cover_torsion.polynomial()?, quotient_torsion.polynomial()?)?;
    let restricted_meridian = meridian_trace_sign(&restricted).ok();
    Ok(CoverCheck {
        kernel,
        restricted,
        quotient_torsion,
        restricted_torsion,
        cover_torsion,
        restricted_meridian,
        identity_holds,
    })
}

#[cfg(test)]
mod tests;
