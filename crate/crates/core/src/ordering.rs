//! How the moduli of positive and negative roots interleave on the half-line.
//!
//! An ordering is a sequence of groups in strictly increasing modulus; each
//! group records how many positive (`P`) and negative (`N`) roots share that
//! modulus. Without ties every group is a single letter and the ordering is a
//! plain word such as `PNNP`. Tied groups are written in parentheses with the
//! `P`s first, e.g. `(PN)N`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Signed;

use crate::algebra::{Rational, SignedRootMultiset};
use crate::descartes::SignPattern;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    P,
    N,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::P => 'P',
            Letter::N => 'N',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    pub pos: usize,
    pub neg: usize,
}

impl Group {
    pub fn total(&self) -> usize {
        self.pos + self.neg
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModulusOrdering {
    groups: Vec<Group>,
}

impl ModulusOrdering {
    pub fn new(groups: Vec<Group>) -> Result<Self> {
        if groups.iter().any(|g| g.total() == 0) {
            return Err(Error::Parse("ordering groups must be nonempty".into()));
        }
        Ok(ModulusOrdering { groups })
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let groups = letters
            .iter()
            .map(|l| match l {
                Letter::P => Group { pos: 1, neg: 0 },
                Letter::N => Group { pos: 0, neg: 1 },
            })
            .collect();
        ModulusOrdering { groups }
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn degree(&self) -> usize {
        self.groups.iter().map(Group::total).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.groups.iter().map(|g| g.pos).sum()
    }

    pub fn is_generic(&self) -> bool {
        self.groups.iter().all(|g| g.total() == 1)
    }

    /// The word when the ordering is generic.
    pub fn letters(&self) -> Option<Vec<Letter>> {
        self.is_generic().then(|| {
            self.groups
                .iter()
                .map(|g| if g.pos == 1 { Letter::P } else { Letter::N })
                .collect()
        })
    }

    /// Reciprocation reverses the increasing order of moduli.
    pub fn reverse(&self) -> ModulusOrdering {
        ModulusOrdering { groups: self.groups.iter().rev().copied().collect() }
    }

    /// Negating every root exchanges the letters.
    pub fn swap_letters(&self) -> ModulusOrdering {
        ModulusOrdering {
            groups: self.groups.iter().map(|g| Group { pos: g.neg, neg: g.pos }).collect(),
        }
    }
}

impl fmt::Display for ModulusOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            let tied = g.total() > 1;
            if tied {
                f.write_str("(")?;
            }
            for _ in 0..g.pos {
                f.write_str("P")?;
            }
            for _ in 0..g.neg {
                f.write_str("N")?;
            }
            if tied {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ModulusOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut groups = Vec::new();
        let mut open: Option<Group> = None;
        for ch in s.trim().chars() {
            match (ch, open.as_mut()) {
                ('(', None) => open = Some(Group { pos: 0, neg: 0 }),
                (')', Some(g)) => {
                    if g.total() == 0 {
                        return Err(Error::Parse(alloc::format!("empty group in {s:?}")));
                    }
                    groups.push(*g);
                    open = None;
                }
                ('P' | 'p', Some(g)) => g.pos += 1,
                ('N' | 'n', Some(g)) => g.neg += 1,
                ('P' | 'p', None) => groups.push(Group { pos: 1, neg: 0 }),
                ('N' | 'n', None) => groups.push(Group { pos: 0, neg: 1 }),
                (other, _) => {
                    return Err(Error::Parse(alloc::format!("unexpected {other:?} in ordering {s:?}")))
                }
            }
        }
        if open.is_some() {
            return Err(Error::Parse(alloc::format!("unclosed group in {s:?}")));
        }
        if groups.is_empty() {
            return Err(Error::Parse("empty ordering".into()));
        }
        Ok(ModulusOrdering { groups })
    }
}

/// Position statistics of the negative moduli relative to the positive ones.
///
/// `m_star`, `n_star`, `q_star` count negative moduli strictly above `α`,
/// strictly between `β` and `α`, and strictly below `β`. Moduli equal to `α`
/// or `β` are not counted there but in `tied_alpha` / `tied_beta`; the
/// classical identity `m* + n* + q* = d - c` holds only when those are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderingStats {
    pub m_star: usize,
    pub n_star: usize,
    /// Only meaningful for two positive roots.
    pub q_star: Option<usize>,
    pub tied_alpha: usize,
    pub tied_beta: usize,
    /// `β = α`.
    pub positive_tie: bool,
}

impl OrderingStats {
    pub fn has_ties(&self) -> bool {
        self.tied_alpha > 0 || self.tied_beta > 0 || self.positive_tie
    }
}

pub fn ordering_of(roots: &SignedRootMultiset) -> ModulusOrdering {
    let mut entries: Vec<(Rational, bool)> = roots
        .positive()
        .iter()
        .map(|r| (r.clone(), true))
        .chain(roots.negative().iter().map(|r| (r.abs(), false)))
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let mut groups: Vec<Group> = Vec::new();
    let mut last: Option<&Rational> = None;
    for (modulus, positive) in &entries {
        if last != Some(modulus) {
            groups.push(Group { pos: 0, neg: 0 });
        }
        let g = groups.last_mut().unwrap();
        if *positive {
            g.pos += 1;
        } else {
            g.neg += 1;
        }
        last = Some(modulus);
    }
    ModulusOrdering { groups }
}

pub fn stats_of(o: &ModulusOrdering, c: usize) -> Result<OrderingStats> {
    if !(1..=2).contains(&c) {
        return Err(Error::OutOfRange { what: "positive roots", value: c, max: 2 });
    }
    if o.positive_count() != c {
        return Err(Error::Inconsistent(alloc::format!(
            "ordering {o} has {} positive entries, expected {c}",
            o.positive_count()
        )));
    }
    let groups = o.groups();
    let neg_in = |range: core::ops::Range<usize>| groups[range].iter().map(|g| g.neg).sum::<usize>();
    let alpha = groups.iter().rposition(|g| g.pos > 0).unwrap();
    if c == 1 {
        return Ok(OrderingStats {
            m_star: neg_in(alpha + 1..groups.len()),
            n_star: neg_in(0..alpha),
            q_star: None,
            tied_alpha: groups[alpha].neg,
            tied_beta: 0,
            positive_tie: false,
        });
    }
    let beta = groups.iter().position(|g| g.pos > 0).unwrap();
    let between = if beta < alpha { neg_in(beta + 1..alpha) } else { 0 };
    Ok(OrderingStats {
        m_star: neg_in(alpha + 1..groups.len()),
        n_star: between,
        q_star: Some(neg_in(0..beta)),
        tied_alpha: groups[alpha].neg,
        tied_beta: groups[beta].neg,
        positive_tie: beta == alpha,
    })
}

/// Read the pattern's consecutive pairs left to right as decreasing moduli
/// (change → `P`, preservation → `N`), then reverse to increasing order.
pub fn canonical_ordering(sp: &SignPattern) -> ModulusOrdering {
    let mut letters: Vec<Letter> =
        sp.steps().map(|change| if change { Letter::P } else { Letter::N }).collect();
    letters.reverse();
    ModulusOrdering::from_letters(&letters)
}

/// All `C(d, c)` generic words with exactly `c` letters `P`, lexicographic with `P < N`.
pub fn enumerate_generic(d: usize, c: usize) -> Vec<ModulusOrdering> {
    fn go(d: usize, c: usize, prefix: &mut Vec<Letter>, out: &mut Vec<ModulusOrdering>) {
        if prefix.len() == d {
            out.push(ModulusOrdering::from_letters(prefix));
            return;
        }
        let placed = prefix.iter().filter(|l| **l == Letter::P).count();
        let remaining = d - prefix.len();
        if placed < c {
            prefix.push(Letter::P);
            go(d, c, prefix, out);
            prefix.pop();
        }
        if c - placed < remaining {
            prefix.push(Letter::N);
            go(d, c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if c <= d {
        go(d, c, &mut Vec::with_capacity(d), &mut out);
    }
    out
}

pub fn reverse_ordering(o: &ModulusOrdering) -> ModulusOrdering {
    o.reverse()
}

pub fn word_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}
