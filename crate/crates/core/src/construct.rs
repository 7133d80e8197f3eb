//! Constructive realizations: concatenation, canonical realization, and the
//! witness families for one and two sign changes.
//!
//! Every "small enough" parameter is chosen by halving from `1/2` until an
//! exact predicate holds, with a hard floor of `2^-256`. Each constructor
//! re-verifies its output from scratch (expand, read signs, read the ordering)
//! before returning it.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::{expand_from_roots, half_pow, int, rat, MonicPolynomial, Rational, SignedRootMultiset};
use crate::descartes::{sign_pattern_of, Sign, SigmaShape, SignPattern};
use crate::error::{Error, Result};
use crate::ordering::{canonical_ordering, ordering_of, stats_of, Letter, ModulusOrdering};

/// Number of halvings before giving up (the parameter floor is `2^-MAX_HALVINGS`).
pub const MAX_HALVINGS: u32 = 256;

/// Try `attempt` at `start`, `start/2`, ... until it succeeds or the floor is reached.
pub fn halve_until<T>(
    what: &'static str,
    start: &Rational,
    mut attempt: impl FnMut(&Rational) -> Option<T>,
) -> Result<T> {
    let mut t = start.clone();
    let floor = half_pow(MAX_HALVINGS);
    let two = int(2);
    while t >= floor {
        if let Some(found) = attempt(&t) {
            return Ok(found);
        }
        t /= &two;
    }
    Err(Error::EpsilonSearchFailed { what })
}

fn pattern_of_roots(roots: &SignedRootMultiset) -> Option<SignPattern> {
    sign_pattern_of(&expand_from_roots(roots)).ok()
}

/// Exact check that `roots` realize `pattern`, and `ordering` when given.
pub fn verify_witness(
    roots: &SignedRootMultiset,
    pattern: &SignPattern,
    ordering: Option<&ModulusOrdering>,
) -> bool {
    pattern_of_roots(roots).as_ref() == Some(pattern)
        && ordering.map_or(true, |o| &ordering_of(roots) == o)
}

/// Halve `t` from `1/2` until `family(t)` realizes `pattern` (and `ordering`).
pub fn perturb_until_verified(
    what: &'static str,
    pattern: &SignPattern,
    ordering: Option<&ModulusOrdering>,
    family: impl Fn(&Rational) -> Vec<Rational>,
) -> Result<SignedRootMultiset> {
    halve_until(what, &rat(1, 2), |t| {
        let roots = SignedRootMultiset::new(family(t)).ok()?;
        verify_witness(&roots, pattern, ordering).then_some(roots)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatenationResult {
    /// `ε^{d₂} P₁(x) P₂(x/ε)`, which is monic.
    pub product: MonicPolynomial,
    pub epsilon: Rational,
    /// Roots of `P₂(x/ε)`, i.e. the second factor's roots times `ε`.
    pub scaled_roots: SignedRootMultiset,
    /// All roots of the product.
    pub roots: SignedRootMultiset,
}

/// Pattern produced by concatenating `first` with `second`: the tail of `second`
/// is appended as is when `first` ends in `+`, and sign-flipped when it ends in `-`.
pub fn concatenated_pattern(first: &SignPattern, second: &SignPattern) -> SignPattern {
    let flip = *first.signs().last().unwrap() == Sign::Minus;
    let signs = first
        .signs()
        .iter()
        .copied()
        .chain(second.signs()[1..].iter().map(|s| if flip { s.flip() } else { *s }))
        .collect();
    SignPattern::new(signs).expect("starts with +")
}

/// Splice two realizations: scale the second one's roots by a small `ε` so
/// that all of them sit strictly below every modulus of the first.
pub fn concatenate(first: &SignedRootMultiset, second: &SignedRootMultiset) -> Result<ConcatenationResult> {
    let p1 = sign_pattern_of(&expand_from_roots(first))?;
    let p2 = sign_pattern_of(&expand_from_roots(second))?;
    let target = concatenated_pattern(&p1, &p2);
    let min_first = first.min_modulus().expect("nonempty");
    let max_second = second.max_modulus().expect("nonempty");
    halve_until("concatenation", &rat(1, 2), |eps| {
        if eps * &max_second >= min_first {
            return None;
        }
        let scaled = second.scaled(eps);
        let roots = first.union(&scaled);
        let product = expand_from_roots(&roots);
        (sign_pattern_of(&product).ok()? == target).then(|| ConcatenationResult {
            product,
            epsilon: eps.clone(),
            scaled_roots: scaled,
            roots,
        })
    })
}

/// A witness for `sp` with distinct moduli in the canonical order, built by
/// repeatedly concatenating linear factors.
pub fn realize_canonical(sp: &SignPattern) -> Result<SignedRootMultiset> {
    let signs = sp.signs();
    let linear = |change: bool| {
        SignedRootMultiset::new([if change { int(1) } else { int(-1) }]).expect("nonzero")
    };
    let mut current = linear(signs[1] == Sign::Minus);
    for k in 1..sp.degree() {
        current = concatenate(&current, &linear(signs[k] != signs[k + 1]))?.roots;
    }
    if !verify_witness(&current, sp, Some(&canonical_ordering(sp))) {
        return Err(Error::Inconsistent(alloc::format!("canonical witness for {sp} failed to verify")));
    }
    Ok(current)
}

/// Grid for the proof's free parameters `u`, `w`, tried `u` descending then `w` ascending.
fn uw_grid() -> impl Iterator<Item = (i64, i64)> {
    (1..=16i64).rev().flat_map(|u| (1..=16i64).map(move |w| (u, w)))
}

/// `1 + i/(2d)` spreads, distinct for `i < d`.
fn spread(i: usize, d: usize) -> Rational {
    Rational::one() + rat(i as i64, 2 * d as i64)
}

/// Multiplicity blocks of the negative roots above `α`, listed from the largest
/// modulus down, split into the cluster near `-1/η` and the cluster near `-1-εu`.
struct AboveBlocks {
    far: Vec<usize>,
    near: Vec<usize>,
}

/// Witness for `Σ_{m,n}` (`n ≤ m`) with `α = 1`, exactly `s` negative moduli
/// equal to `α`, exactly `r` below it, and the remaining `d-1-s-r` above it,
/// pairwise distinct.
pub fn realize_c1_case(m: usize, n: usize, s: usize, r: usize) -> Result<SignedRootMultiset> {
    let d = check_c1(m, n, s, r)?;
    let above = d - 1 - s - r;
    let blocks = if d >= 2 * n {
        let far = vec![1; d - 2 * n];
        let near = vec![1; above - far.len()];
        AboveBlocks { far, near }
    } else {
        AboveBlocks { far: Vec::new(), near: vec![1; above] }
    };
    build_c1(m, n, s, r, &blocks)
}

/// As [`realize_c1_case`], but the `d-1-s-r` moduli above `α` follow the
/// multiplicity vector `mu` (listed from the largest modulus down). When
/// `d ≥ 2n`, vectors failing Condition A are refused.
pub fn realize_c1_with_multiplicities(
    m: usize,
    n: usize,
    s: usize,
    r: usize,
    mu: &[usize],
) -> Result<SignedRootMultiset> {
    let d = check_c1(m, n, s, r)?;
    let blocks = if d >= 2 * n {
        if !condition_a(mu, d, n, s, r)? {
            return Err(Error::ConditionA);
        }
        let mut acc = 0;
        let nu = mu
            .iter()
            .position(|&b| {
                acc += b;
                acc == d - 2 * n
            })
            .map_or(0, |i| i + 1);
        AboveBlocks { far: mu[..nu].to_vec(), near: mu[nu..].to_vec() }
    } else {
        if mu.iter().sum::<usize>() != d - 1 - s - r || mu.contains(&0) {
            return Err(Error::Inconsistent("multiplicities must be positive and sum to d-1-s-r".into()));
        }
        AboveBlocks { far: Vec::new(), near: mu.to_vec() }
    };
    build_c1(m, n, s, r, &blocks)
}

fn check_c1(m: usize, n: usize, s: usize, r: usize) -> Result<usize> {
    if m == 0 || n == 0 || n > m {
        return Err(Error::Inconsistent(alloc::format!(
            "realize_c1_case needs 1 <= n <= m, got m={m}, n={n}"
        )));
    }
    let d = m + n - 1;
    if s + r > 2 * n - 2 {
        return Err(Error::Excluded { citation: "T-c1-bound" });
    }
    Ok(d)
}

/// Condition A: some prefix of `mu` sums to `d - 2n`.
pub fn condition_a(mu: &[usize], d: usize, n: usize, s: usize, r: usize) -> Result<bool> {
    let expected = (d + 1)
        .checked_sub(2 + s + r)
        .ok_or_else(|| Error::Inconsistent("s + r exceeds d - 1".into()))?;
    if mu.iter().sum::<usize>() != expected || mu.contains(&0) {
        return Err(Error::Inconsistent(alloc::format!(
            "multiplicities must be positive and sum to d-1-s-r = {expected}"
        )));
    }
    let Some(target) = d.checked_sub(2 * n) else {
        return Ok(false);
    };
    if target == 0 {
        return Ok(true);
    }
    let mut acc = 0;
    Ok(mu.iter().any(|&b| {
        acc += b;
        acc == target
    }))
}

fn build_c1(m: usize, n: usize, s: usize, r: usize, blocks: &AboveBlocks) -> Result<SignedRootMultiset> {
    let d = m + n - 1;
    let target = SigmaShape::OneChange { m, n }.pattern();
    let one = Rational::one();
    let near_count: usize = blocks.near.len();
    // Roots near -1: the w-cluster below α, the ties, and the u-cluster above α.
    let core_roots = |eps: &Rational, u: i64, w: i64| {
        let mut roots = vec![one.clone()];
        roots.extend(core::iter::repeat(-&one).take(s));
        for j in 0..r {
            roots.push(-(&one - eps * int(w) * spread(j, d)));
        }
        for (b, &mult) in blocks.near.iter().enumerate() {
            let root = -(&one + eps * int(u) * spread(near_count - b, d));
            roots.extend(core::iter::repeat(root).take(mult));
        }
        roots
    };
    let check = |roots: &SignedRootMultiset| {
        let stats = stats_of(&ordering_of(roots), 1).ok()?;
        (stats.tied_alpha == s && stats.n_star == r && stats.m_star == d - 1 - s - r).then_some(())
    };

    if d < 2 * n {
        // m == n: (x-1)(x+1)^{2n-2} already has pattern Σ_{n,n} with no zero
        // coefficient, so any small enough perturbation keeps it.
        let witness = halve_until("c1 base perturbation", &rat(1, 2), |eps| {
            if eps * int(2) >= one {
                return None;
            }
            let roots = SignedRootMultiset::new(core_roots(eps, 1, 1)).ok()?;
            (pattern_of_roots(&roots)? == target).then_some(roots)
        })?;
        check(&witness).ok_or_else(|| Error::Inconsistent("c1 witness ordering mismatch".into()))?;
        return Ok(witness);
    }

    // (x+1+εu)^{2n-1-s-r} (x+1)^s (x+1-εw)^r (x-1) must realize Σ_{n+1,n}.
    let inner_target = SigmaShape::OneChange { m: n + 1, n }.pattern();
    let far_count = blocks.far.len();
    for (u, w) in uw_grid() {
        let inner = halve_until("c1 u/w perturbation", &rat(1, 2), |eps| {
            if eps * int(2 * w) >= one {
                return None;
            }
            let roots = SignedRootMultiset::new(core_roots(eps, u, w)).ok()?;
            (pattern_of_roots(&roots)? == inner_target).then_some(roots)
        });
        let Ok(inner) = inner else { continue };
        if far_count == 0 {
            check(&inner).ok_or_else(|| Error::Inconsistent("c1 witness ordering mismatch".into()))?;
            return Ok(inner);
        }
        let bound = inner.max_modulus().unwrap();
        // Multiply by (1+ηx)^{d-2n}, the large roots spread into the requested blocks.
        let witness = halve_until("c1 large roots", &rat(1, 2), |eta| {
            let big = eta.recip();
            if big <= bound {
                return None;
            }
            let mut roots = inner.to_vec();
            for (b, &mult) in blocks.far.iter().enumerate() {
                let root = -(&big * spread(far_count - b, d));
                roots.extend(core::iter::repeat(root).take(mult));
            }
            let roots = SignedRootMultiset::new(roots).ok()?;
            (pattern_of_roots(&roots)? == target).then_some(roots)
        });
        if let Ok(witness) = witness {
            check(&witness).ok_or_else(|| Error::Inconsistent("c1 witness ordering mismatch".into()))?;
            return Ok(witness);
        }
    }
    Err(Error::EpsilonSearchFailed { what: "c1 case" })
}

/// Witness for `Σ_{m,n}` whose single positive root has exactly `n_star`
/// negative moduli below it and none equal to it. Shapes with `m < n` are
/// realized through the reverted shape.
pub fn realize_c1_generic(m: usize, n: usize, n_star: usize) -> Result<SignedRootMultiset> {
    let d = m + n - 1;
    if n_star > d - 1 {
        return Err(Error::OutOfRange { what: "n*", value: n_star, max: d - 1 });
    }
    if n <= m {
        realize_c1_case(m, n, 0, n_star)
    } else {
        let m_star = d - 1 - n_star;
        realize_c1_case(n, m, 0, m_star)
            .map_err(|e| match e {
                Error::Excluded { .. } => Error::Excluded { citation: "C-c1-bound" },
                other => other,
            })
            .map(|w| w.reciprocal())
    }
}

/// `Y_s = (x+s)^s (x-1)^2 (x+1)`.
pub fn realize_y_family(s: usize) -> Result<MonicPolynomial> {
    if s < 2 {
        return Err(Error::OutOfRange { what: "s (must be >= 2)", value: s, max: usize::MAX });
    }
    MonicPolynomial::from_roots(&y_family_roots(s, &Rational::zero()))
}

fn y_family_roots(s: usize, shift: &Rational) -> Vec<Rational> {
    let mut roots = vec![-(int(s as i64) + shift); s];
    roots.extend([int(1), int(1), int(-1)]);
    roots
}

/// Closed forms of the trailing coefficients `W_{s,0} .. W_{s,4}` of `Y_s`.
pub fn y_family_trailing_closed_form(s: usize) -> [Rational; 5] {
    let sr = int(s as i64);
    let pow = |k: i64| -> Rational {
        let e = s as i64 - k;
        if e >= 0 {
            num_traits::pow(sr.clone(), e as usize)
        } else {
            num_traits::pow(sr.clone(), (-e) as usize).recip()
        }
    };
    [
        pow(0),
        Rational::zero(),
        -rat(1, 2) * (int(3) * &sr + int(1)) * pow(1),
        -rat(1, 3) * (&sr - int(1)) * (&sr + int(1)) * pow(2),
        rat(1, 8) * (&sr + int(1)) * (int(3) * &sr * &sr + int(3) * &sr - int(2)) * pow(3),
    ]
}

/// Roots of the cubic `(x+1)(x-1.5)(x-1.6)`.
pub fn p1_roots() -> SignedRootMultiset {
    SignedRootMultiset::new([int(-1), rat(3, 2), rat(8, 5)]).expect("nonzero")
}

/// Witness for `Σ_{d-n,n,1}` (`n ∈ {2, 3}`) in the strict form of the
/// "smallest modulus negative" configuration `γ₁ < β < α < γ₂ < ... < γ_{d-2}`.
pub fn realize_case_ii(d: usize, n: usize) -> Result<SignedRootMultiset> {
    let target = match (n, d) {
        (2, d) if d >= 4 => SigmaShape::TwoChanges { m: d - 2, n: 2, q: 1 }.pattern(),
        (3, d) if d >= 5 => SigmaShape::TwoChanges { m: d - 3, n: 3, q: 1 }.pattern(),
        _ => {
            return Err(Error::Inconsistent(alloc::format!(
                "case ii construction needs n = 2 with d >= 4 or n = 3 with d >= 5 (got d={d}, n={n})"
            )))
        }
    };
    let mut letters = vec![Letter::N, Letter::P, Letter::P];
    letters.extend(core::iter::repeat(Letter::N).take(d - 3));
    let word = ModulusOrdering::from_letters(&letters);

    let witness = if n == 2 {
        // (1+εx)^{d-3} P₁, then separate the repeated large root.
        let base = p1_roots();
        let extra = d - 3;
        let clustered = halve_until("case ii large root", &rat(1, 2), |eps| {
            let big = -eps.recip();
            if big.abs() <= int(2) {
                return None;
            }
            let mut roots = base.to_vec();
            roots.extend(core::iter::repeat(big).take(extra));
            let roots = SignedRootMultiset::new(roots).ok()?;
            (pattern_of_roots(&roots)? == target).then_some(roots)
        })?;
        if extra > 1 {
            let big = clustered.negative().last().unwrap().clone();
            let offsets: Vec<Rational> = (0..extra).map(|i| -int(i as i64)).collect();
            split_root(&clustered, &big, &offsets)?
        } else {
            clustered
        }
    } else {
        // Shift the s-fold root of Y_s to make the x coefficient negative,
        // then separate every tie.
        let s = d - 3;
        let shifted = halve_until("Y_s shift", &rat(1, 2), |eps| {
            let roots = SignedRootMultiset::new(y_family_roots(s, eps)).ok()?;
            (pattern_of_roots(&roots)? == target).then_some(roots)
        })?;
        let big = shifted.negative().last().unwrap().clone();
        let offsets: Vec<Rational> = (0..s).map(|i| -rat(i as i64, 4)).collect();
        let spread_out = split_root(&shifted, &big, &offsets)?;
        let separated = split_root(&spread_out, &int(1), &[Rational::zero(), rat(1, 4)])?;
        split_root(&separated, &int(-1), &[rat(1, 4)])?
    };
    if !verify_witness(&witness, &target, Some(&word)) {
        return Err(Error::Inconsistent(alloc::format!("case ii witness for d={d}, n={n} failed")));
    }
    Ok(witness)
}

/// Add the root `-1/η` of modulus above all others, halving `η` until the
/// pattern becomes `+` followed by the original pattern.
pub fn multiply_linear_large(roots: &SignedRootMultiset, eta: &Rational) -> Result<SignedRootMultiset> {
    if !eta.is_positive() {
        return Err(Error::Inconsistent("η must be positive".into()));
    }
    let original = sign_pattern_of(&expand_from_roots(roots))?;
    let mut signs = vec![Sign::Plus];
    signs.extend_from_slice(original.signs());
    let target = SignPattern::new(signs).expect("starts with +");
    let bound = roots.max_modulus().expect("nonempty");
    halve_until("linear factor with large root", eta, |eta| {
        let big = eta.recip();
        if big <= bound {
            return None;
        }
        let with = roots.union(&SignedRootMultiset::new([-big]).ok()?);
        (pattern_of_roots(&with)? == target).then_some(with)
    })
}

/// Replace `offsets.len()` copies of the root `target` by `target + t·offset_i`,
/// halving `t` from 1 until the sign pattern is unchanged, no new root changes
/// sign, and every new modulus stays strictly between the neighbouring moduli
/// of the other roots.
pub fn split_root(
    roots: &SignedRootMultiset,
    target: &Rational,
    offsets: &[Rational],
) -> Result<SignedRootMultiset> {
    let all = roots.to_vec();
    let present = all.iter().filter(|r| *r == target).count();
    if present < offsets.len() {
        return Err(Error::Inconsistent(alloc::format!(
            "root {target} has multiplicity {present}, cannot split into {} roots",
            offsets.len()
        )));
    }
    if offsets.iter().all(Zero::is_zero) {
        return Ok(roots.clone());
    }
    for (i, a) in offsets.iter().enumerate() {
        if offsets[i + 1..].contains(a) {
            return Err(Error::Inconsistent("split offsets must be pairwise distinct".into()));
        }
    }
    let original = sign_pattern_of(&expand_from_roots(roots))?;
    let modulus = target.abs();
    let lower = all.iter().map(Signed::abs).filter(|x| *x < modulus).max().unwrap_or_else(Rational::zero);
    let upper = all.iter().map(Signed::abs).filter(|x| *x > modulus).min();
    let mut kept: Vec<Rational> = Vec::with_capacity(all.len());
    let mut removed = 0;
    for r in all {
        if removed < offsets.len() && &r == target {
            removed += 1;
        } else {
            kept.push(r);
        }
    }
    halve_until("root split", &Rational::one(), |t| {
        let mut candidate = kept.clone();
        for off in offsets {
            let moved = target + t * off;
            let m = moved.abs();
            if moved.is_positive() != target.is_positive()
                || moved.is_zero()
                || m <= lower
                || upper.as_ref().is_some_and(|u| &m >= u)
            {
                return None;
            }
            candidate.push(moved);
        }
        let candidate = SignedRootMultiset::new(candidate).ok()?;
        (pattern_of_roots(&candidate)? == original).then_some(candidate)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;
    use crate::descartes::shape_of;
    use alloc::string::ToString;

    fn roots(values: &[&str]) -> SignedRootMultiset {
        SignedRootMultiset::new(values.iter().map(|s| parse_rational(s).unwrap())).unwrap()
    }

    fn sp(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    fn word(s: &str) -> ModulusOrdering {
        s.parse().unwrap()
    }

    #[test]
    fn concatenate_two_linear_factors() {
        let res = concatenate(&roots(&["1"]), &roots(&["-1"])).unwrap();
        assert_eq!(res.epsilon, rat(1, 2));
        assert_eq!(
            res.product,
            MonicPolynomial::new(vec![rat(-1, 2), rat(-1, 2)]).unwrap()
        );
        assert_eq!(sign_pattern_of(&res.product).unwrap(), sp("+--"));
        assert_eq!(res.roots.counts(), (1, 1));
    }

    #[test]
    fn concatenate_onto_p1() {
        let res = concatenate(&roots(&["-1"]), &p1_roots()).unwrap();
        let pattern = sign_pattern_of(&res.product).unwrap();
        assert_eq!(shape_of(&pattern).unwrap(), SigmaShape::TwoChanges { m: 2, n: 2, q: 1 });
        assert_eq!(res.roots.counts(), (2, 2));
        assert!(res.scaled_roots.max_modulus().unwrap() < int(1));
    }

    #[test]
    fn concatenation_flips_after_minus() {
        // x - 1 ends in '-', so appending x + 1 contributes '-' (a preservation).
        let res = concatenate(&roots(&["1"]), &roots(&["-1"])).unwrap();
        assert_eq!(concatenated_pattern(&sp("+-"), &sp("++")), sp("+--"));
        assert_eq!(sign_pattern_of(&res.product).unwrap(), sp("+--"));
    }

    #[test]
    fn concatenation_rejects_degenerate_input() {
        assert_eq!(
            concatenate(&roots(&["1", "-1"]), &roots(&["1"])),
            Err(Error::DegeneratePattern { power: 1 })
        );
    }

    #[test]
    fn canonical_examples() {
        let w = realize_canonical(&sp("+--")).unwrap();
        let (pos, neg) = (w.positive()[0].clone(), w.negative()[0].abs());
        assert!(pos > neg);
        let w = realize_canonical(&sp("++++")).unwrap();
        assert_eq!(w.counts(), (0, 3));
        assert!(ordering_of(&w).is_generic());
        let w = realize_canonical(&SigmaShape::TwoChanges { m: 1, n: 4, q: 1 }.pattern()).unwrap();
        assert_eq!(ordering_of(&w), word("PNNNP"));
    }

    #[test]
    fn c1_extreme_and_canonical_cases() {
        for n in 1..=4 {
            let w = realize_c1_case(n, n, 0, 2 * n - 2).unwrap();
            let stats = stats_of(&ordering_of(&w), 1).unwrap();
            assert_eq!(stats.n_star, 2 * n - 2);
        }
        let w = realize_c1_case(4, 1, 0, 0).unwrap();
        let stats = stats_of(&ordering_of(&w), 1).unwrap();
        assert_eq!((stats.m_star, stats.n_star), (3, 0));
    }

    #[test]
    fn c1_with_tie() {
        let w = realize_c1_case(3, 2, 1, 1).unwrap();
        assert_eq!(w.degree(), 4);
        let stats = stats_of(&ordering_of(&w), 1).unwrap();
        assert_eq!((stats.tied_alpha, stats.n_star, stats.m_star), (1, 1, 1));
        assert_eq!(
            shape_of(&sign_pattern_of(&expand_from_roots(&w)).unwrap()).unwrap(),
            SigmaShape::OneChange { m: 3, n: 2 }
        );
    }

    #[test]
    fn c1_bound_is_enforced() {
        assert_eq!(realize_c1_case(4, 2, 1, 2), Err(Error::Excluded { citation: "T-c1-bound" }));
        assert!(realize_c1_case(2, 3, 0, 0).is_err());
        assert_eq!(realize_c1_generic(2, 4, 0), Err(Error::Excluded { citation: "C-c1-bound" }));
    }

    #[test]
    fn c1_multiplicity_vectors() {
        // d = 6, n = 2, s = r = 0: five moduli above α, d-2n = 2 of them far.
        let w = realize_c1_with_multiplicities(5, 2, 0, 0, &[2, 3]).unwrap();
        let o = ordering_of(&w);
        assert_eq!(o.to_string(), "P(NNN)(NN)");
        assert_eq!(realize_c1_with_multiplicities(5, 2, 0, 0, &[1, 4]), Err(Error::ConditionA));
        let w = realize_c1_with_multiplicities(5, 2, 0, 0, &[1, 1, 1, 2]).unwrap();
        assert_eq!(ordering_of(&w).to_string(), "P(NN)NNN");
    }

    #[test]
    fn condition_a_predicate() {
        // d = 7, n = 2: d - 2n = 3, d-1-s-r = 6 with s = r = 0.
        assert!(condition_a(&[3, 3], 7, 2, 0, 0).unwrap());
        assert!(!condition_a(&[6], 7, 2, 0, 0).unwrap());
        assert!(condition_a(&[1; 6], 7, 2, 0, 0).unwrap());
        assert!(!condition_a(&[2, 2, 2], 7, 2, 0, 0).unwrap());
        assert!(condition_a(&[5], 7, 2, 0, 0).is_err());
    }

    #[test]
    fn y_family_s2() {
        let y = realize_y_family(2).unwrap();
        let expect: Vec<Rational> = [4, 0, -7, -1, 3].iter().map(|&v| int(v)).collect();
        assert_eq!(y.coeffs(), &expect[..]);
        assert_eq!(y_family_trailing_closed_form(2).to_vec(), expect);
        assert_eq!(realize_y_family(3).unwrap().coeffs()[2], int(-45));
        assert!(realize_y_family(1).is_err());
    }

    #[test]
    fn case_ii_witnesses() {
        let w = realize_case_ii(5, 2).unwrap();
        assert_eq!(ordering_of(&w), word("NPPNN"));
        let p = sign_pattern_of(&expand_from_roots(&w)).unwrap();
        assert_eq!(shape_of(&p).unwrap(), SigmaShape::TwoChanges { m: 3, n: 2, q: 1 });

        let w = realize_case_ii(5, 3).unwrap();
        assert_eq!(ordering_of(&w), word("NPPNN"));
        let p = sign_pattern_of(&expand_from_roots(&w)).unwrap();
        assert_eq!(shape_of(&p).unwrap(), SigmaShape::TwoChanges { m: 2, n: 3, q: 1 });

        let w = realize_case_ii(6, 3).unwrap();
        assert_eq!(ordering_of(&w), word("NPPNNN"));
        assert!(realize_case_ii(4, 3).is_err());
    }

    #[test]
    fn linear_factor_with_large_root() {
        let q3 = roots(&["0.995", "0.99", "-1", "-1.001"]);
        let w = multiply_linear_large(&q3, &rat(1, 2)).unwrap();
        assert_eq!(ordering_of(&w), word("PPNNN"));
        assert_eq!(sign_pattern_of(&expand_from_roots(&w)).unwrap(), sp("+++--+"));
        let q2 = roots(&["4", "1", "-2.1", "-3"]);
        let w = multiply_linear_large(&q2, &rat(1, 2)).unwrap();
        assert_eq!(ordering_of(&w), word("PNNPN"));
        assert!(multiply_linear_large(&q2, &int(0)).is_err());
    }

    #[test]
    fn split_eq8_triple_root() {
        let base = roots(&["0.1", "1", "-1", "-1", "-1"]);
        let pattern = SigmaShape::TwoChanges { m: 2, n: 3, q: 1 }.pattern();
        let cases: [(&[i64], &str); 4] = [
            (&[-1, -2, -3], "PPNNN"),
            (&[1, -1, -2], "PNPNN"),
            (&[1, 2, -1], "PNNPN"),
            (&[1, 2, 3], "PNNNP"),
        ];
        for (offsets, expected) in cases {
            let offsets: Vec<Rational> = offsets.iter().map(|&o| rat(o, 10)).collect();
            let w = split_root(&base, &int(-1), &offsets).unwrap();
            assert!(verify_witness(&w, &pattern, Some(&word(expected))), "{expected}");
        }
        let same = split_root(&base, &int(-1), &[Rational::zero(), Rational::zero()]).unwrap();
        assert_eq!(same, base);
        assert!(split_root(&base, &int(-1), &[int(1), int(1)]).is_err());
        assert!(split_root(&base, &int(-1), &vec![int(1); 4]).is_err());
    }

    #[test]
    fn split_degree7_example_every_n_star() {
        // (x^2-1)(x^2-0.81)(x+0.9)^3: β = 0.9, α = 1, negatives at 0.9 (x4) and 1.
        let base = roots(&["1", "-1", "0.9", "-0.9", "-0.9", "-0.9", "-0.9"]);
        let pattern = SigmaShape::TwoChanges { m: 3, n: 2, q: 3 }.pattern();
        for n_star in 0..=5usize {
            // -1 goes inside (β, α) when n_star >= 1; j of the 0.9 roots move up.
            let inside_cluster = n_star.saturating_sub(1);
            let offsets: Vec<Rational> = (0..4)
                .map(|i| if i < inside_cluster { rat(-(i as i64 + 1), 1000) } else { rat(i as i64 + 1, 1000) })
                .collect();
            let w = split_root(&base, &rat(-9, 10), &offsets).unwrap();
            let top = if n_star >= 1 { rat(1, 100) } else { rat(-1, 100) };
            let w = split_root(&w, &int(-1), &[top]).unwrap();
            let o = ordering_of(&w);
            assert!(o.is_generic());
            let stats = stats_of(&o, 2).unwrap();
            assert_eq!(stats.n_star, n_star);
            assert!(verify_witness(&w, &pattern, None));
        }
    }
}
