//! Index-2 kernel of ε: G → Z/2 with Schreier transversal {1, x0}.

use super::{abelianize, homology, GroupKind, GroupPresentation, Word};
use crate::error::{Error, Result};

/// Peripheral change of basis from (m, ℓ) of the cover to (α, ℓ̄) of the
/// quotient; columns are the images of m and ℓ.
pub const PERIPHERAL_CHANGE_OF_BASIS: [[i64; 2]; 2] = [[2, 0], [1, 1]];

pub fn peripheral_cover_map(p: i64, q: i64) -> (i64, i64) {
    let m = PERIPHERAL_CHANGE_OF_BASIS;
    (m[0][0] * p + m[0][1] * q, m[1][0] * p + m[1][1] * q)
}

#[derive(Clone, Debug)]
pub struct KernelPresentation {
    pub group: GroupPresentation,
    /// Each kernel generator as a word in the parent group.
    pub inclusion: Vec<Word>,
    /// Index of x0 in the parent.
    pub transversal: usize,
    /// Parent ε used to build the kernel.
    pub epsilon: Vec<u8>,
    /// Abelianization of the kernel induced from the parent: α(incl(s)) / 2.
    pub alpha: Vec<i64>,
    /// Schreier generator index for (coset, parent generator); `None` for
    /// the trivial generator x0 · x0^-1.
    table: Vec<[Option<usize>; 2]>,
}

impl KernelPresentation {
    /// Rewrites a parent word read from coset `coset` into kernel
    /// generators. The word must have even ε-weight.
    pub fn rewrite(&self, w: &Word, coset: usize) -> Result<Word> {
        let mut c = coset;
        let mut letters = Vec::with_capacity(w.len());
        for &(g, e) in w.letters() {
            let flip = self.epsilon[g] as usize;
            if e > 0 {
                if let Some(s) = self.table[g][c] {
                    letters.push((s, 1));
                }
                c ^= flip;
            } else {
                c ^= flip;
                if let Some(s) = self.table[g][c] {
                    letters.push((s, -1));
                }
            }
        }
        if c != coset {
            return Err(Error::Validation(
                "word has odd ε-weight and does not lie in the kernel".into(),
            ));
        }
        Ok(Word::from_letters(letters))
    }
}

/// Kernel of the ε of `abelianize(g)`.
pub fn reidemeister_schreier_index2(g: &GroupPresentation) -> Result<KernelPresentation> {
    let ab = abelianize(g)?;
    if ab.values.is_empty() {
        return Err(Error::Validation(format!("H_1 = {} has no map onto Z", ab.describe())));
    }
    let k = reidemeister_schreier_index2_with(g, &ab.epsilon, &ab.values)?;
    if g.kind == GroupKind::QuotientKnot {
        let kab = homology(&k.group);
        if !kab.is_infinite_cyclic() {
            return Err(Error::Validation(format!(
                "the 2-fold cover of a quotient knot must have H_1 = Z, found {}",
                kab.describe()
            )));
        }
    }
    Ok(k)
}

/// Kernel of an explicit ε. `alpha` is a homomorphism to `Z` reducing to
/// ε mod 2; it is halved on the kernel.
pub fn reidemeister_schreier_index2_with(
    g: &GroupPresentation,
    epsilon: &[u8],
    alpha: &[i64],
) -> Result<KernelPresentation> {
    let n = g.num_generators();
    if epsilon.len() != n || alpha.len() != n {
        return Err(Error::Validation("ε must have one value per generator".into()));
    }
    if alpha.iter().zip(epsilon).any(|(a, e)| a.rem_euclid(2) as u8 != *e) {
        return Err(Error::Validation("α does not reduce to ε mod 2".into()));
    }
    let x0 = epsilon
        .iter()
        .position(|e| *e == 1)
        .ok_or_else(|| Error::Validation("ε is trivial; there is no index-2 kernel".into()))?;
    let x0w = Word::generator(x0);
    let mut names = Vec::new();
    let mut inclusion = Vec::new();
    let mut table = vec![[None, None]; n];
    for coset in [0usize, 1] {
        for (j, name) in g.generators.iter().enumerate() {
            if coset == 0 && j == x0 {
                continue;
            }
            let rep = if coset == 0 { Word::identity() } else { x0w.clone() };
            let target = coset ^ epsilon[j] as usize;
            let back = if target == 0 { Word::identity() } else { x0w.inverse() };
            inclusion.push(rep.mul(&Word::generator(j)).mul(&back));
            table[j][coset] = Some(names.len());
            names.push(format!("{name}_{coset}"));
        }
    }
    let mut kernel = KernelPresentation {
        group: GroupPresentation::new(names, Vec::new())?,
        inclusion,
        transversal: x0,
        epsilon: epsilon.to_vec(),
        alpha: Vec::new(),
        table,
    };
    kernel.alpha = kernel.inclusion.iter().map(|w| w.weight(alpha) / 2).collect();
    let mut relators = Vec::new();
    for coset in [0usize, 1] {
        for r in &g.relators {
            relators.push(kernel.rewrite(r, coset)?);
        }
    }
    kernel.group.relators = relators;
    if let (Some(a), Some(l)) = (&g.meridian, &g.longitude) {
        // m = α^2 ℓ̄ and ℓ = ℓ̄ upstairs
        let m = a.pow(2).mul(l);
        kernel.group.meridian = Some(kernel.rewrite(&m, 0)?);
        kernel.group.longitude = Some(kernel.rewrite(l, 0)?);
    }
    kernel.group.kind = match g.kind {
        GroupKind::QuotientKnot => GroupKind::SphereKnot,
        _ => GroupKind::Generic,
    };
    Ok(kernel)
}
