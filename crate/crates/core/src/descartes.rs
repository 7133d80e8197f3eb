//! Sign patterns, Descartes counts and the block shapes `Σ_{m,n}` / `Σ_{m,n,q}`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::algebra::{expand_from_roots, MonicPolynomial, Polynomial, SignedRootMultiset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs of `1, a_{d-1}, ..., a_0`; always begins with `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern {
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        match signs.first() {
            None => Err(Error::Parse("empty sign pattern".into())),
            Some(Sign::Minus) => Err(Error::Parse("sign pattern must begin with +".into())),
            Some(Sign::Plus) if signs.len() < 2 => {
                Err(Error::Parse("sign pattern needs degree at least 1".into()))
            }
            Some(Sign::Plus) => Ok(SignPattern { signs }),
        }
    }

    /// Sign sequence, leading coefficient first.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn degree(&self) -> usize {
        self.signs.len() - 1
    }

    /// `(c, p)`: sign changes and sign preservations; `c + p = d`.
    pub fn counts(&self) -> (usize, usize) {
        let c = self.signs.windows(2).filter(|w| w[0] != w[1]).count();
        (c, self.degree() - c)
    }

    pub fn changes(&self) -> usize {
        self.counts().0
    }

    /// Read backward, then flip globally if needed so the pattern starts with `+`.
    /// This is the pattern of the normalized reverted polynomial.
    pub fn reverse(&self) -> SignPattern {
        let mut signs: Vec<Sign> = self.signs.iter().rev().copied().collect();
        if signs[0] == Sign::Minus {
            signs.iter_mut().for_each(|s| *s = s.flip());
        }
        SignPattern { signs }
    }

    /// Pattern of `(-1)^d P(-x)`: entry `i` (from the leading one) is multiplied by `(-1)^i`.
    pub fn negate_var(&self) -> SignPattern {
        let signs = self
            .signs
            .iter()
            .enumerate()
            .map(|(i, s)| if i % 2 == 1 { s.flip() } else { *s })
            .collect();
        SignPattern { signs }
    }

    /// Pattern whose consecutive pairs are `steps` (true = change), starting from `+`.
    pub fn from_steps(steps: impl IntoIterator<Item = bool>) -> Result<SignPattern> {
        let mut signs = alloc::vec![Sign::Plus];
        for change in steps {
            let last = *signs.last().unwrap();
            signs.push(if change { last.flip() } else { last });
        }
        SignPattern::new(signs)
    }

    /// `true` at position `i` when signs `i` and `i + 1` differ.
    pub fn steps(&self) -> impl Iterator<Item = bool> + '_ {
        self.signs.windows(2).map(|w| w[0] != w[1])
    }

    /// Every pattern of degree `d`, in lexicographic order (`+` before `-`).
    pub fn all(d: usize) -> Vec<SignPattern> {
        (0..1u64 << d)
            .map(|bits| {
                let signs = core::iter::once(Sign::Plus)
                    .chain((0..d).rev().map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }))
                    .collect();
                SignPattern { signs }
            })
            .collect()
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            fmt::Write::write_char(f, s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|ch| match ch {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Parse(alloc::format!("unexpected {other:?} in sign pattern"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignPattern::new(signs)
    }
}

/// Block decomposition of a pattern with at most two sign changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaShape {
    /// `len` pluses (degree `len - 1`).
    AllPlus { len: usize },
    /// `Σ_{m,n}`.
    OneChange { m: usize, n: usize },
    /// `Σ_{m,n,q}`.
    TwoChanges { m: usize, n: usize, q: usize },
}

impl SigmaShape {
    pub fn degree(&self) -> usize {
        match *self {
            SigmaShape::AllPlus { len } => len - 1,
            SigmaShape::OneChange { m, n } => m + n - 1,
            SigmaShape::TwoChanges { m, n, q } => m + n + q - 1,
        }
    }

    pub fn changes(&self) -> usize {
        match self {
            SigmaShape::AllPlus { .. } => 0,
            SigmaShape::OneChange { .. } => 1,
            SigmaShape::TwoChanges { .. } => 2,
        }
    }

    pub fn blocks(&self) -> Vec<usize> {
        match *self {
            SigmaShape::AllPlus { len } => alloc::vec![len],
            SigmaShape::OneChange { m, n } => alloc::vec![m, n],
            SigmaShape::TwoChanges { m, n, q } => alloc::vec![m, n, q],
        }
    }

    /// Shape from its block lengths (1 to 3 positive blocks, total at least 2).
    pub fn from_blocks(blocks: &[usize]) -> Result<SigmaShape> {
        if blocks.iter().any(|&b| b == 0) {
            return Err(Error::Parse("block lengths must be positive".into()));
        }
        let shape = match *blocks {
            [len] => SigmaShape::AllPlus { len },
            [m, n] => SigmaShape::OneChange { m, n },
            [m, n, q] => SigmaShape::TwoChanges { m, n, q },
            _ => return Err(Error::UnsupportedShape { changes: blocks.len().saturating_sub(1) }),
        };
        if blocks.iter().sum::<usize>() < 2 {
            return Err(Error::Parse("shape needs degree at least 1".into()));
        }
        Ok(shape)
    }

    /// The sign pattern this shape denotes.
    pub fn pattern(&self) -> SignPattern {
        let mut signs = Vec::with_capacity(self.degree() + 1);
        let mut sign = Sign::Plus;
        for b in self.blocks() {
            signs.extend(core::iter::repeat(sign).take(b));
            sign = sign.flip();
        }
        SignPattern { signs }
    }

    /// Every shape of degree `d` with `c` sign changes, ordered by blocks.
    pub fn all(d: usize, c: usize) -> Vec<SigmaShape> {
        let total = d + 1;
        let mut out = Vec::new();
        match c {
            0 if d >= 1 => out.push(SigmaShape::AllPlus { len: total }),
            1 => {
                for m in (1..total).rev() {
                    out.push(SigmaShape::OneChange { m, n: total - m });
                }
            }
            2 => {
                for m in (1..total).rev() {
                    for n in (1..total - m).rev() {
                        let q = total - m - n;
                        if q >= 1 {
                            out.push(SigmaShape::TwoChanges { m, n, q });
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }

    pub fn reverse(&self) -> SigmaShape {
        match *self {
            SigmaShape::AllPlus { len } => SigmaShape::AllPlus { len },
            SigmaShape::OneChange { m, n } => SigmaShape::OneChange { m: n, n: m },
            SigmaShape::TwoChanges { m, n, q } => SigmaShape::TwoChanges { m: q, n, q: m },
        }
    }
}

impl fmt::Display for SigmaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        let mut first = true;
        for b in blocks {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for SigmaShape {
    type Err = Error;

    /// `"m,n,q"`, `"m,n"`, or a single block length for the all-plus pattern.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(',')
            .map(|b| {
                b.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad block length {b:?} in shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SigmaShape::from_blocks(&blocks)
    }
}

/// Signs of `1, a_{d-1}, ..., a_0`; a zero coefficient is an error.
pub fn sign_pattern_of(p: &MonicPolynomial) -> Result<SignPattern> {
    let d = p.degree();
    let mut signs = Vec::with_capacity(d + 1);
    signs.push(Sign::Plus);
    for power in (0..d).rev() {
        let c = &p.coeffs()[power];
        if c.is_zero() {
            return Err(Error::DegeneratePattern { power });
        }
        signs.push(if c.is_positive() { Sign::Plus } else { Sign::Minus });
    }
    Ok(SignPattern { signs })
}

/// Pattern of a general polynomial after normalization by its leading coefficient.
pub fn sign_pattern_of_polynomial(p: &Polynomial) -> Result<SignPattern> {
    sign_pattern_of(&p.normalize()?)
}

pub fn counts(sp: &SignPattern) -> (usize, usize) {
    sp.counts()
}

pub fn shape_of(sp: &SignPattern) -> Result<SigmaShape> {
    let mut blocks: Vec<usize> = Vec::new();
    let mut prev = None;
    for &s in sp.signs() {
        if prev == Some(s) {
            *blocks.last_mut().unwrap() += 1;
        } else {
            blocks.push(1);
        }
        prev = Some(s);
    }
    if blocks.len() > 3 {
        return Err(Error::UnsupportedShape { changes: blocks.len() - 1 });
    }
    SigmaShape::from_blocks(&blocks)
}

pub fn make_shape(shape: &SigmaShape) -> SignPattern {
    shape.pattern()
}

pub fn reverse_pattern(sp: &SignPattern) -> SignPattern {
    sp.reverse()
}

/// `true` iff the root counts of the multiset equal the pattern's `(c, p)`.
pub fn descartes_verify(roots: &SignedRootMultiset) -> Result<bool> {
    let sp = sign_pattern_of(&expand_from_roots(roots))?;
    Ok(sp.counts() == roots.counts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_rational, rat};

    fn sp(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    #[test]
    fn patterns_of_examples() {
        let p1 = MonicPolynomial::from_roots(&[int(-1), rat(3, 2), rat(8, 5)]).unwrap();
        assert_eq!(sign_pattern_of(&p1).unwrap(), sp("+--+"));
        let p = MonicPolynomial::new(alloc::vec![int(-2), int(1)]).unwrap();
        assert_eq!(sign_pattern_of(&p).unwrap(), sp("++-"));
        let p = MonicPolynomial::new(alloc::vec![int(-1), int(0)]).unwrap();
        assert_eq!(sign_pattern_of(&p), Err(Error::DegeneratePattern { power: 1 }));
    }

    #[test]
    fn counting() {
        assert_eq!(sp("+++--+").counts(), (2, 3));
        assert_eq!(sp("++++").counts(), (0, 3));
        assert_eq!(sp("+--+").counts(), (2, 1));
    }

    #[test]
    fn shapes() {
        assert_eq!(shape_of(&sp("++--+")).unwrap(), SigmaShape::TwoChanges { m: 2, n: 2, q: 1 });
        assert_eq!(shape_of(&sp("+----")).unwrap(), SigmaShape::OneChange { m: 1, n: 4 });
        assert_eq!(shape_of(&sp("+++")).unwrap(), SigmaShape::AllPlus { len: 3 });
        assert_eq!(shape_of(&sp("+-+-")), Err(Error::UnsupportedShape { changes: 3 }));
        assert_eq!("2,2,1".parse::<SigmaShape>().unwrap().pattern(), sp("++--+"));
        assert_eq!("3".parse::<SigmaShape>().unwrap(), SigmaShape::AllPlus { len: 3 });
        assert!("2,0,1".parse::<SigmaShape>().is_err());
        assert!("1,1,1,1".parse::<SigmaShape>().is_err());
        assert!("1".parse::<SigmaShape>().is_err());
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse_pattern(&sp("++--+")), sp("+--++"));
        assert_eq!(reverse_pattern(&sp("+---+")), sp("+---+"));
        assert_eq!(sp("++-").reverse(), sp("+--"));
    }

    #[test]
    fn parse_errors() {
        assert!("-+".parse::<SignPattern>().is_err());
        assert!("+x".parse::<SignPattern>().is_err());
        assert!("+".parse::<SignPattern>().is_err());
    }

    #[test]
    fn descartes_on_q2() {
        let roots = SignedRootMultiset::new(
            ["4", "1", "-2.1", "-3"].iter().map(|s| parse_rational(s).unwrap()),
        )
        .unwrap();
        assert!(descartes_verify(&roots).unwrap());
        let p = sign_pattern_of(&expand_from_roots(&roots)).unwrap();
        assert_eq!(p.counts(), (2, 2));
        let roots = SignedRootMultiset::new([int(-1), int(-2)]).unwrap();
        assert!(descartes_verify(&roots).unwrap());
    }

    #[test]
    fn all_patterns_enumerated() {
        let all = SignPattern::all(3);
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], sp("++++"));
        assert_eq!(all[7], sp("+---"));
        assert_eq!(SigmaShape::all(5, 2).len(), 10);
        assert_eq!(SigmaShape::all(5, 1).len(), 5);
    }
}
