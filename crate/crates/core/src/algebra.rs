//! Exact rational scalars and dense polynomials.
//!
//! Coefficients are stored low-to-high. A [`MonicPolynomial`] keeps only
//! `a_0 .. a_{d-1}`; the leading `1` is implicit. Operations that can lose
//! monicity (derivative, reversion) return a general [`Polynomial`], which is
//! brought back with [`Polynomial::normalize`].

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction, always in canonical form.
pub type Rational = BigRational;

/// `n / d` as a canonical rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^-k`.
pub fn half_pow(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k as usize)
}

/// Parse `"-21/10"`, `"2.1"`, `"-0.0209803"`, `"2.4e5"` or `"7"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(alloc::format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..]
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad exponent in {s:?}")))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(Error::Parse(alloc::format!("not a number: {s:?}")));
    }
    let mut all = String::with_capacity(whole.len() + frac.len());
    all.push_str(whole);
    all.push_str(frac);
    let n: BigInt = all.parse().map_err(|_| Error::Parse(alloc::format!("not a number: {s:?}")))?;
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Exact `"num/den"` form, or `"num"` for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        alloc::format!("{}/{}", value.numer(), value.denom())
    }
}

/// Terminating decimal expansion if one exists, otherwise the fraction form.
pub fn format_decimal(value: &Rational) -> String {
    let mut den = value.denom().clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format_rational(value);
    }
    let places = twos.max(fives);
    if places == 0 {
        return value.numer().to_string();
    }
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let padded = if digits.len() <= places {
        let mut p = "0".repeat(places + 1 - digits.len());
        p.push_str(&digits);
        p
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    alloc::format!("{sign}{int_part}.{frac_part}")
}

/// A general dense polynomial (low-to-high), without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        horner(self.coeffs.iter().rev(), x)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Polynomial::new(coeffs)
    }

    /// `x^d P(1/x)`; roots become reciprocals.
    pub fn revert(&self) -> Result<Polynomial> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => {}
            _ => return Err(Error::ZeroConstantTerm),
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Polynomial::new(coeffs))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Divide by the leading coefficient.
    pub fn normalize(&self) -> Result<MonicPolynomial> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::OutOfRange { what: "degree", value: 0, max: 0 }),
        };
        let lead = &self.coeffs[d];
        Ok(MonicPolynomial { coeffs: self.coeffs[..d].iter().map(|c| c / lead).collect() })
    }
}

fn horner<'a>(high_to_low: impl Iterator<Item = &'a Rational>, x: &Rational) -> Rational {
    high_to_low.fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Degree-`d` monic polynomial `x^d + a_{d-1} x^{d-1} + ... + a_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicPolynomial {
    coeffs: Vec<Rational>,
}

impl MonicPolynomial {
    /// Build from `a_0 .. a_{d-1}`; `d` is the slice length and must be positive.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::OutOfRange { what: "degree", value: 0, max: 0 });
        }
        Ok(MonicPolynomial { coeffs })
    }

    /// `prod (x - r)`, rejecting zero roots.
    pub fn from_roots(roots: &[Rational]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::OutOfRange { what: "degree", value: 0, max: 0 });
        }
        if roots.iter().any(Zero::is_zero) {
            return Err(Error::ZeroRoot);
        }
        Ok(Self::from_roots_unchecked(roots))
    }

    pub(crate) fn from_roots_unchecked(roots: &[Rational]) -> Self {
        // Full coefficient vector with the leading 1 kept at the end.
        let mut full: Vec<Rational> = vec![Rational::one()];
        for r in roots {
            full.insert(0, Rational::zero());
            for k in 0..full.len() - 1 {
                let next = &full[k + 1] * r;
                full[k] -= next;
            }
        }
        full.pop();
        MonicPolynomial { coeffs: full }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0 .. a_{d-1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^power`, with `1` at `power == d` and `0` above.
    pub fn coefficient(&self, power: usize) -> Rational {
        match power.cmp(&self.degree()) {
            core::cmp::Ordering::Less => self.coeffs[power].clone(),
            core::cmp::Ordering::Equal => Rational::one(),
            core::cmp::Ordering::Greater => Rational::zero(),
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.push(Rational::one());
        Polynomial::new(c)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let one = Rational::one();
        horner(core::iter::once(&one).chain(self.coeffs.iter().rev()), x)
    }

    pub fn derivative(&self) -> Polynomial {
        self.to_polynomial().derivative()
    }

    pub fn revert(&self) -> Result<Polynomial> {
        self.to_polynomial().revert()
    }

    /// `(-1)^d P(-x)`: still monic, roots negated.
    pub fn negate_var(&self) -> MonicPolynomial {
        let d = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if (d - j) % 2 == 1 { -c } else { c.clone() })
            .collect();
        MonicPolynomial { coeffs }
    }

    /// Synthetic division by `(x - root)`: quotient and remainder.
    pub fn divide_linear(&self, root: &Rational) -> (Polynomial, Rational) {
        let full = self.to_polynomial();
        let c = full.coeffs();
        let mut quotient = vec![Rational::zero(); c.len() - 1];
        let mut carry = Rational::zero();
        for k in (0..c.len()).rev() {
            carry = carry * root + &c[k];
            if k > 0 {
                quotient[k - 1] = carry.clone();
            }
        }
        (Polynomial::new(quotient), carry)
    }

    /// Multiplicity of `root` found by repeated exact division.
    pub fn multiplicity(&self, root: &Rational) -> usize {
        let mut current = self.clone();
        let mut count = 0;
        loop {
            let (q, rem) = current.divide_linear(root);
            if !rem.is_zero() {
                return count;
            }
            count += 1;
            match q.normalize() {
                Ok(next) => current = next,
                // quotient is the constant 1
                Err(_) => return count,
            }
        }
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_polynomial(), f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                f.write_str(&format_rational(&magnitude))?;
            }
            match power {
                0 => {}
                1 => f.write_str(if show_coeff { "*x" } else { "x" })?,
                _ => {
                    if show_coeff {
                        f.write_str("*")?;
                    }
                    write!(f, "x^{power}")?
                }
            }
        }
        Ok(())
    }
}

/// Real roots split by sign, each list sorted by increasing modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRootMultiset {
    positive: Vec<Rational>,
    negative: Vec<Rational>,
}

impl SignedRootMultiset {
    pub fn new(roots: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for r in roots {
            if r.is_zero() {
                return Err(Error::ZeroRoot);
            }
            if r.is_positive() {
                positive.push(r);
            } else {
                negative.push(r);
            }
        }
        positive.sort();
        negative.sort_by(|a, b| b.cmp(a));
        Ok(SignedRootMultiset { positive, negative })
    }

    pub fn degree(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn positive(&self) -> &[Rational] {
        &self.positive
    }

    pub fn negative(&self) -> &[Rational] {
        &self.negative
    }

    /// `(#positive, #negative)` counted with multiplicity.
    pub fn counts(&self) -> (usize, usize) {
        (self.positive.len(), self.negative.len())
    }

    pub fn roots(&self) -> impl Iterator<Item = &Rational> {
        self.positive.iter().chain(self.negative.iter())
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.roots().cloned().collect()
    }

    pub fn reciprocal(&self) -> SignedRootMultiset {
        Self::new(self.roots().map(|r| r.recip())).expect("nonzero roots")
    }

    pub fn negated(&self) -> SignedRootMultiset {
        Self::new(self.roots().map(|r| -r)).expect("nonzero roots")
    }

    /// Multiply every root by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> SignedRootMultiset {
        Self::new(self.roots().map(|r| r * factor)).expect("nonzero roots")
    }

    pub fn union(&self, other: &SignedRootMultiset) -> SignedRootMultiset {
        Self::new(self.roots().chain(other.roots()).cloned()).expect("nonzero roots")
    }

    pub fn min_modulus(&self) -> Option<Rational> {
        self.roots().map(Signed::abs).min()
    }

    pub fn max_modulus(&self) -> Option<Rational> {
        self.roots().map(Signed::abs).max()
    }
}

/// `prod (x - r)` over the multiset, coefficients exact.
pub fn expand_from_roots(roots: &SignedRootMultiset) -> MonicPolynomial {
    MonicPolynomial::from_roots_unchecked(&roots.to_vec())
}

/// The `k`-th elementary symmetric function of `values`; `e_0 = 1`.
pub fn elementary_symmetric(values: &[Rational], k: usize) -> Result<Rational> {
    if k > values.len() {
        return Err(Error::OutOfRange { what: "k", value: k, max: values.len() });
    }
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for (seen, v) in values.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(k))
}
