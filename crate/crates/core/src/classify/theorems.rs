//! Ordering-level exclusion rules.
//!
//! Each rule looks only at the shape and the modulus word, never at a witness.
//! A returned citation proves the cell empty; `None` proves nothing.

use core::fmt;

use crate::descartes::SigmaShape;
use crate::error::{Error, Result};
use crate::ordering::{reverse_ordering, stats_of, word_string, ModulusOrdering, OrderingStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremCitation {
    C1Bound,
    C1BoundReverted,
    OneNOne,
    MN1Part1,
    MN1Part2,
    MN1Bis,
    M1Q,
    P321,
    NoTieM1Q,
}

impl TheoremCitation {
    pub const ALL: [TheoremCitation; 9] = [
        TheoremCitation::C1Bound,
        TheoremCitation::C1BoundReverted,
        TheoremCitation::OneNOne,
        TheoremCitation::MN1Part1,
        TheoremCitation::MN1Part2,
        TheoremCitation::MN1Bis,
        TheoremCitation::M1Q,
        TheoremCitation::P321,
        TheoremCitation::NoTieM1Q,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremCitation::C1Bound => "T-c1-bound",
            TheoremCitation::C1BoundReverted => "C-c1-bound",
            TheoremCitation::OneNOne => "T-1n1",
            TheoremCitation::MN1Part1 => "T-mn1-part1",
            TheoremCitation::MN1Part2 => "T-mn1-part2",
            TheoremCitation::MN1Bis => "T-mn1bis",
            TheoremCitation::M1Q => "T-m1q",
            TheoremCitation::P321 => "P-321",
            TheoremCitation::NoTieM1Q => "L-no-tie-m1q",
        }
    }

    pub fn note(self) -> &'static str {
        match self {
            TheoremCitation::C1Bound => "Σ_{m,n} with n ≤ m is realizable only by polynomials with n* ≤ 2n-2",
            TheoremCitation::C1BoundReverted => "Σ_{m,n} with m ≤ n is realizable only by polynomials with m* ≤ 2m-2",
            TheoremCitation::OneNOne => "Σ_{1,d-1,1}, d ≥ 4, is realizable only with n* = d-2",
            TheoremCitation::MN1Part1 => {
                "for Σ_{m,n,1} the smallest modulus is positive, or γ₁ < β < α < γ₂ exactly"
            }
            TheoremCitation::MN1Part2 => "Σ_{m,n,1} with γ₁ < β < α < γ₂ forces n = 2 or n = 3",
            TheoremCitation::MN1Bis => {
                "Σ_{m,n,1} with β smallest has at most 2min(m,n)-1 moduli on the short side of α"
            }
            TheoremCitation::M1Q => "Σ_{m,1,q} is realizable only with m* = m-1, n* = 0, q* = q-1",
            TheoremCitation::P321 => "Σ_{3,2,1} is not realizable with β < γ₁ < γ₂ < γ₃ < α",
            TheoremCitation::NoTieM1Q => "no polynomial realizing Σ_{m,1,q} has a negative modulus equal to α or β",
        }
    }

    pub fn from_tag(tag: &str) -> Option<TheoremCitation> {
        TheoremCitation::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

impl fmt::Display for TheoremCitation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The encoded theorem excluding `(shape, word)`, if any.
///
/// Errors when the word's length or number of `P` letters disagrees with the shape.
pub fn forbidden_by_theorem(shape: &SigmaShape, word: &ModulusOrdering) -> Result<Option<TheoremCitation>> {
    if word.degree() != shape.degree() || word.positive_count() != shape.changes() {
        return Err(Error::Inconsistent(alloc::format!(
            "word {word} does not fit shape {shape} (degree {}, {} positive roots)",
            shape.degree(),
            shape.changes()
        )));
    }
    let d = shape.degree();
    match *shape {
        SigmaShape::AllPlus { .. } => Ok(None),
        SigmaShape::OneChange { m, n } => {
            if !word.is_generic() {
                return Ok(None);
            }
            let st = stats_of(word, 1)?;
            if n <= m && st.n_star + 2 > 2 * n {
                return Ok(Some(TheoremCitation::C1Bound));
            }
            if m <= n && st.m_star + 2 > 2 * m {
                return Ok(Some(TheoremCitation::C1BoundReverted));
            }
            Ok(None)
        }
        SigmaShape::TwoChanges { m, n, q } => {
            let st = stats_of(word, 2)?;
            if !word.is_generic() {
                let tied = n == 1 && (st.tied_alpha > 0 || st.tied_beta > 0);
                return Ok(tied.then_some(TheoremCitation::NoTieM1Q));
            }
            Ok(two_changes(m, n, q, d, &st, word))
        }
    }
}

fn two_changes(m: usize, n: usize, q: usize, d: usize, st: &OrderingStats, word: &ModulusOrdering) -> Option<TheoremCitation> {
    let q_star = st.q_star.unwrap_or(0);
    if n == 1 {
        let canonical = st.m_star + 1 == m && st.n_star == 0 && q_star + 1 == q;
        return (!canonical).then_some(TheoremCitation::M1Q);
    }
    if m == 1 && q == 1 {
        return (d >= 4 && st.n_star + 2 != d).then_some(TheoremCitation::OneNOne);
    }
    if q == 1 {
        if q_star >= 2 || (q_star == 1 && st.n_star > 0) {
            return Some(TheoremCitation::MN1Part1);
        }
        if q_star == 1 {
            return (n != 2 && n != 3).then_some(TheoremCitation::MN1Part2);
        }
        let too_many = if m <= n { st.m_star + 1 > 2 * m } else { st.n_star + 1 > 2 * n };
        if too_many {
            return Some(TheoremCitation::MN1Bis);
        }
        if (m, n) == (3, 2) && word.letters().map(|l| word_string(&l)).as_deref() == Some("PNNNP") {
            return Some(TheoremCitation::P321);
        }
        return None;
    }
    if m == 1 {
        let rev = reverse_ordering(word);
        let rst = stats_of(&rev, 2).ok()?;
        return two_changes(q, n, m, d, &rst, &rev);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::enumerate_generic;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn shape(s: &str) -> SigmaShape {
        s.parse().unwrap()
    }

    fn cite(s: &str, w: &str) -> Option<&'static str> {
        forbidden_by_theorem(&shape(s), &w.parse().unwrap()).unwrap().map(TheoremCitation::tag)
    }

    fn allowed(s: &str) -> Vec<alloc::string::String> {
        let sh = shape(s);
        enumerate_generic(sh.degree(), sh.changes())
            .into_iter()
            .filter(|w| forbidden_by_theorem(&sh, w).unwrap().is_none())
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(cite("4,1", "NPNN"), Some("T-c1-bound"));
        assert_eq!(cite("4,1", "PNNN"), None);
        assert_eq!(cite("2,2,1", "NNPP"), Some("T-mn1-part1"));
        assert_eq!(cite("3,2,1", "PNNNP"), Some("P-321"));
        assert_eq!(cite("1,2,3", "PNNNP"), Some("P-321"));
        assert_eq!(cite("2,1,2", "NPPN"), None);
        assert_eq!(cite("2,1,2", "PNPN"), Some("T-m1q"));
        assert_eq!(cite("1,3,1", "PNNP"), None);
        assert_eq!(cite("1,3,1", "PPNN"), Some("T-1n1"));
        assert_eq!(cite("2,4,1", "NPPNNN"), Some("T-mn1-part2"));
    }

    #[test]
    fn surviving_words_small_degree() {
        assert_eq!(allowed("2,2,1"), ["PPNN", "PNPN", "PNNP", "NPPN"]);
        assert_eq!(allowed("1,2,2"), ["PNNP", "NPPN", "NPNP", "NNPP"]);
        assert_eq!(allowed("2,3,1"), ["PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN"]);
        assert_eq!(allowed("3,2,1"), ["PPNNN", "PNPNN", "PNNPN", "NPPNN"]);
        assert_eq!(allowed("2,2,2").len(), 10);
        assert_eq!(allowed("1,4,1"), ["PNNNP"]);
        assert_eq!(allowed("3,1,1"), ["PPNN"]);
        assert_eq!(allowed("1,2,1").len(), 3);
    }

    #[test]
    fn tie_words() {
        assert_eq!(cite("2,1,2", "N(PN)P"), Some("L-no-tie-m1q"));
        assert_eq!(cite("2,1,2", "N(PP)N"), None);
        assert_eq!(cite("2,2,1", "(PN)PN"), None);
    }

    #[test]
    fn rejects_mismatched_word() {
        assert!(forbidden_by_theorem(&shape("2,2,1"), &"PNP".parse().unwrap()).is_err());
        assert!(forbidden_by_theorem(&shape("2,2,1"), &"PNNN".parse().unwrap()).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for c in TheoremCitation::ALL {
            assert_eq!(TheoremCitation::from_tag(c.tag()), Some(c));
        }
        assert_eq!(TheoremCitation::from_tag("T-unknown"), None);
    }
}
