//! Independent reference computations for integration tests. Nothing here
//! calls into the crate's algebra; it works on plain `BigRational` vectors.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients of `∏(x - r)`, leading first, by repeated multiplication.
pub fn expand(roots: &[Q]) -> Vec<Q> {
    let mut c = vec![Q::one()];
    for r in roots {
        let mut next = c.clone();
        next.push(Q::zero());
        for i in 1..next.len() {
            next[i] = &next[i] - r * &c[i - 1];
        }
        c = next;
    }
    c
}

/// `"+-..."` for nonvanishing coefficients, `None` otherwise.
pub fn signs(coeffs: &[Q]) -> Option<String> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_positive() {
                Some('+')
            } else if c.is_negative() {
                Some('-')
            } else {
                None
            }
        })
        .collect()
}

/// Modulus word in increasing order; ties as parenthesized blocks, `P`s first.
pub fn word(roots: &[Q]) -> String {
    let mut entries: Vec<(Q, bool)> = roots.iter().map(|r| (r.abs(), r.is_positive())).collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut out = String::new();
    let mut i = 0;
    while i < entries.len() {
        let mut j = i;
        while j < entries.len() && entries[j].0 == entries[i].0 {
            j += 1;
        }
        let block: String = entries[i..j].iter().map(|e| if e.1 { 'P' } else { 'N' }).collect();
        if j - i > 1 {
            out.push('(');
            out.push_str(&block);
            out.push(')');
        } else {
            out.push_str(&block);
        }
        i = j;
    }
    out
}

pub fn changes(pattern: &str) -> usize {
    let b = pattern.as_bytes();
    b.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Block lengths of a pattern, e.g. `"++--+"` gives `[2, 2, 1]`.
pub fn blocks(pattern: &str) -> Vec<usize> {
    let b = pattern.as_bytes();
    let mut out = vec![1];
    for w in b.windows(2) {
        if w[0] == w[1] {
            *out.last_mut().unwrap() += 1;
        } else {
            out.push(1);
        }
    }
    out
}

/// Canonical word: pairs read left to right give decreasing moduli.
pub fn canonical_word(pattern: &str) -> String {
    let b = pattern.as_bytes();
    let mut w: Vec<char> = b.windows(2).map(|p| if p[0] != p[1] { 'P' } else { 'N' }).collect();
    w.reverse();
    w.into_iter().collect()
}

/// Negative moduli counted strictly below `lo`, strictly between, and strictly above `hi`.
pub fn negatives_around(roots: &[Q], lo: &Q, hi: &Q) -> (usize, usize, usize) {
    let mut below = 0;
    let mut between = 0;
    let mut above = 0;
    for r in roots.iter().filter(|r| r.is_negative()) {
        let m = r.abs();
        if &m < lo {
            below += 1;
        } else if &m > hi {
            above += 1;
        } else if &m > lo && &m < hi {
            between += 1;
        }
    }
    (below, between, above)
}

pub fn parse_decimal(s: &str) -> Q {
    let (neg, s) = s.strip_prefix('-').map_or((false, s), |t| (true, t));
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let v = Q::new(digits, den);
    if neg {
        -v
    } else {
        v
    }
}
