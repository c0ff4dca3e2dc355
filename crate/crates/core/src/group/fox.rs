use std::collections::BTreeMap;

use super::Word;

/// Element of the integral group ring: word ↦ nonzero coefficient.
pub type FoxSum = BTreeMap<Word, i64>;

fn add_term(sum: &mut FoxSum, w: Word, c: i64) {
    let e = sum.entry(w.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        sum.remove(&w);
    }
}

/// ∂w/∂g. A letter `g` at position i contributes `+prefix_i`, a letter
/// `g^-1` contributes `-prefix_i g^-1`.
pub fn fox_derivative(w: &Word, g: usize) -> FoxSum {
    let mut out = FoxSum::new();
    for (i, &(h, e)) in w.letters().iter().enumerate() {
        if h != g {
            continue;
        }
        if e > 0 {
            add_term(&mut out, w.prefix(i), 1);
        } else {
            add_term(&mut out, w.prefix(i + 1), -1);
        }
    }
    out
}

/// `u · s` in the group ring.
pub fn fox_left_mul(u: &Word, s: &FoxSum) -> FoxSum {
    let mut out = FoxSum::new();
    for (w, c) in s {
        add_term(&mut out, u.mul(w), *c);
    }
    out
}

/// `a + b` in the group ring.
pub fn fox_add(a: &FoxSum, b: &FoxSum) -> FoxSum {
    let mut out = a.clone();
    for (w, c) in b {
        add_term(&mut out, w.clone(), *c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, i64)]) -> Word {
        Word::from_letters(letters.iter().copied())
    }

    #[test]
    fn basic_rules() {
        let xy = w(&[(0, 1), (1, 1)]);
        assert_eq!(fox_derivative(&xy, 0), FoxSum::from([(Word::identity(), 1)]));
        let xyx = w(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(
            fox_derivative(&xyx, 0),
            FoxSum::from([(Word::identity(), 1), (w(&[(0, 1), (1, 1)]), 1)])
        );
        let xinv = w(&[(0, -1)]);
        assert_eq!(fox_derivative(&xinv, 0), FoxSum::from([(xinv.clone(), -1)]));
        assert!(fox_derivative(&xy, 2).is_empty());
    }

    #[test]
    fn cancelling_terms_vanish() {
        // x x^-1 reduces to the identity before differentiation
        let e = w(&[(0, 1), (0, -1)]);
        assert!(fox_derivative(&e, 0).is_empty());
        let mut s = FoxSum::new();
        add_term(&mut s, Word::identity(), 2);
        add_term(&mut s, Word::identity(), -2);
        assert!(s.is_empty());
    }
}
