//! Randomized exact witness search.
//!
//! Moduli are rationals `j / 2^16`. Half the samples are log-uniform over
//! `[2^-8, 2^8)`, the other half cluster in `[7/8, 9/8]`. Signs are screened
//! on the integer polynomial `∏(y ∓ j)`, whose coefficients differ from the
//! rational ones by positive powers of `2^16`; hits are re-verified exactly.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Rational, SignedRootMultiset};
use crate::construct::verify_witness;
use crate::descartes::{Sign, SigmaShape};
use crate::ordering::{Letter, ModulusOrdering};

pub const SCALE_BITS: u32 = 16;

/// Deterministic per-cell seed derived from a base seed and the cell key.
pub fn cell_seed(seed: u64, shape: &SigmaShape, word: &ModulusOrdering) -> u64 {
    let key = alloc::format!("{shape}|{word}");
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in key.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn draw_modulus(rng: &mut ChaCha8Rng, cluster: bool) -> u64 {
    if cluster {
        rng.gen_range(7u64 << 13..=9u64 << 13)
    } else {
        let e: i32 = rng.gen_range(-8..8);
        let lo = 1u64 << (SCALE_BITS as i32 + e);
        rng.gen_range(lo..2 * lo)
    }
}

/// Coefficient signs of `∏(y - r)`, leading first; `None` if one vanishes.
fn integer_signs(roots: &[i64]) -> Option<Vec<Sign>> {
    let coeffs = expand_i128(roots).unwrap_or_else(|| expand_big(roots));
    coeffs
        .iter()
        .rev()
        .map(|c| match c.cmp(&Zero::zero()) {
            core::cmp::Ordering::Greater => Some(Sign::Plus),
            core::cmp::Ordering::Less => Some(Sign::Minus),
            core::cmp::Ordering::Equal => None,
        })
        .collect()
}

/// Low-to-high coefficients, or `None` on overflow.
fn expand_i128(roots: &[i64]) -> Option<Vec<BigInt>> {
    let mut c: Vec<i128> = alloc::vec![1];
    for &r in roots {
        let mut next = alloc::vec![0i128; c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] = next[k + 1].checked_add(*a)?;
            next[k] = next[k].checked_sub(a.checked_mul(i128::from(r))?)?;
        }
        c = next;
    }
    Some(c.into_iter().map(BigInt::from).collect())
}

fn expand_big(roots: &[i64]) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = alloc::vec![BigInt::from(1)];
    for &r in roots {
        let mut next = alloc::vec![BigInt::zero(); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        c = next;
    }
    c
}

/// Random search for a witness of `(shape, word)`; deterministic in `seed`.
///
/// Returns `None` for non-generic or mismatched words, and when the budget
/// runs out. A returned witness has been verified exactly.
pub fn search_witness(
    shape: &SigmaShape,
    word: &ModulusOrdering,
    budget: usize,
    seed: u64,
) -> Option<SignedRootMultiset> {
    let letters = word.letters()?;
    if letters.len() != shape.degree() || word.positive_count() != shape.changes() {
        return None;
    }
    let target = shape.pattern();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = letters.len();
    let mut moduli: Vec<u64> = Vec::with_capacity(d);
    for sample in 0..budget {
        let cluster = sample % 2 == 1;
        moduli.clear();
        moduli.extend((0..d).map(|_| draw_modulus(&mut rng, cluster)));
        moduli.sort_unstable();
        if moduli.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let roots: Vec<i64> = moduli
            .iter()
            .zip(&letters)
            .map(|(&j, l)| if *l == Letter::P { j as i64 } else { -(j as i64) })
            .collect();
        if integer_signs(&roots).as_deref() != Some(target.signs()) {
            continue;
        }
        let scale = Rational::from_integer(BigInt::from(1u64 << SCALE_BITS));
        let witness = SignedRootMultiset::new(
            roots.iter().map(|&r| Rational::from_integer(BigInt::from(r)) / &scale),
        )
        .ok()?;
        if verify_witness(&witness, &target, Some(word)) {
            return Some(witness);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{expand_from_roots, int};
    use crate::descartes::sign_pattern_of;
    use crate::ordering::ordering_of;

    fn shape(s: &str) -> SigmaShape {
        s.parse().unwrap()
    }

    #[test]
    fn integer_screen_matches_exact_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let roots: Vec<i64> = (0..5)
                .map(|_| {
                    let j = draw_modulus(&mut rng, false) as i64;
                    if rng.gen_bool(0.5) { j } else { -j }
                })
                .collect();
            let exact = SignedRootMultiset::new(roots.iter().map(|&r| int(r))).unwrap();
            let exact = sign_pattern_of(&expand_from_roots(&exact)).ok().map(|p| p.signs().to_vec());
            assert_eq!(integer_signs(&roots), exact);
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let roots = [1i64 << 40; 4];
        assert!(expand_i128(&roots).is_none());
        let c = expand_big(&roots);
        assert_eq!(c[0], BigInt::from(1) << 160);
    }

    #[test]
    fn finds_easy_cells() {
        let w = search_witness(&shape("1,1"), &"P".parse().unwrap(), 1, 0).unwrap();
        assert_eq!(w.counts(), (1, 0));
        let word: ModulusOrdering = "PNNP".parse().unwrap();
        let w = search_witness(&shape("2,2,1"), &word, 10_000, 1).unwrap();
        assert_eq!(ordering_of(&w), word);
    }

    #[test]
    fn deterministic_and_empty_on_forbidden_cell() {
        let word: ModulusOrdering = "PNPN".parse().unwrap();
        let a = search_witness(&shape("2,2,1"), &word, 2000, 9);
        let b = search_witness(&shape("2,2,1"), &word, 2000, 9);
        assert_eq!(a, b);
        assert!(search_witness(&shape("3,2,1"), &"PNNNP".parse().unwrap(), 20_000, 3).is_none());
        assert!(search_witness(&shape("2,2,1"), &"PN(NP)".parse().unwrap(), 10, 3).is_none());
    }

    #[test]
    fn cell_seeds_differ() {
        let s = shape("2,2,1");
        let a = cell_seed(1, &s, &"PNNP".parse().unwrap());
        let b = cell_seed(1, &s, &"PNPN".parse().unwrap());
        assert_ne!(a, b);
        assert_eq!(a, cell_seed(1, &s, &"PNNP".parse().unwrap()));
    }
}
