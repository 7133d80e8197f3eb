//! Exact checks of the identities and inequalities satisfied by realizers
//! of `Σ_{1,d-1,1}`, `Σ_{m,n,1}` and `Σ_{m,1,q}`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::algebra::{elementary_symmetric, expand_from_roots, Rational, SignedRootMultiset};
use crate::descartes::{shape_of, sign_pattern_of, SigmaShape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Greater,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
}

impl Check {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Equal => self.lhs == self.rhs,
            Relation::Greater => self.lhs > self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub shape: SigmaShape,
    pub checks: Vec<Check>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn shape_of_roots(roots: &SignedRootMultiset) -> Result<SigmaShape> {
    shape_of(&sign_pattern_of(&expand_from_roots(roots))?)
}

/// `β`, `α` and the negative moduli `γ₁ ≤ … ≤ γ_{d-2}` of a root set with two positive roots.
fn moduli(roots: &SignedRootMultiset) -> (Rational, Rational, Vec<Rational>) {
    let pos = roots.positive();
    let gammas = roots.negative().iter().map(Signed::abs).collect();
    (pos[0].clone(), pos[1].clone(), gammas)
}

fn sum_recip(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, v| acc + v.recip())
}

/// Evaluate every applicable relation on the given realizer.
///
/// `Σ_{1,d-1,1}`: both sum inequalities. `Σ_{m,n,1}`: the reciprocal-sum
/// identity with `-a₁/a₀ > 0`, and, when `d ≥ 5`, the expansion of `a₄/a₀`,
/// which must be positive when `γ₁ < β < α < γ₂`. Other shapes are rejected.
pub fn validate_inequalities(roots: &SignedRootMultiset) -> Result<InequalityReport> {
    let shape = shape_of_roots(roots)?;
    let SigmaShape::TwoChanges { m, q: 1, .. } = shape else {
        return Err(Error::Inconsistent(alloc::format!(
            "inequalities apply to Σ_{{m,n,1}} realizers, got Σ_{{{shape}}}"
        )));
    };
    let d = shape.degree();
    let poly = expand_from_roots(roots);
    let (beta, alpha, gammas) = moduli(roots);
    let mut checks = Vec::new();

    if m == 1 {
        checks.push(Check {
            name: "sum",
            lhs: &alpha + &beta,
            rhs: gammas.iter().sum(),
            relation: Relation::Greater,
        });
        checks.push(Check {
            name: "reciprocal-sum",
            lhs: alpha.recip() + beta.recip(),
            rhs: sum_recip(&gammas),
            relation: Relation::Greater,
        });
    }

    let a0 = poly.coefficient(0);
    let a1 = poly.coefficient(1);
    let ratio = -(&a1 / &a0);
    checks.push(Check {
        name: "reciprocal-identity",
        lhs: alpha.recip() + beta.recip() - sum_recip(&gammas),
        rhs: ratio.clone(),
        relation: Relation::Equal,
    });
    checks.push(Check { name: "a1-ratio", lhs: ratio, rhs: Rational::zero(), relation: Relation::Greater });

    if d >= 5 {
        let (g1, rest) = gammas.split_first().expect("d >= 5");
        let inv: Vec<Rational> = rest.iter().map(Rational::recip).collect();
        let e = |k| elementary_symmetric(&inv, k).unwrap_or_else(|_| Rational::zero());
        let (ia, ib, ig) = (alpha.recip(), beta.recip(), g1.recip());
        let ab = &ia * &ib;
        let rhs = e(4) + &ab * e(2) + &ig * e(3) + &ab * &ig * e(1)
            - (&ia + &ib) * e(3)
            - (&ia + &ib) * &ig * e(2);
        let a4 = poly.coefficient(4) / &a0;
        checks.push(Check { name: "a4-expansion", lhs: a4.clone(), rhs, relation: Relation::Equal });
        let case_ii = *g1 < beta && gammas.get(1).map_or(true, |g2| *g2 > alpha);
        if case_ii {
            checks.push(Check { name: "a4-positive", lhs: a4, rhs: Rational::zero(), relation: Relation::Greater });
        }
    }
    Ok(InequalityReport { shape, checks })
}

/// True iff no negative modulus equals `α` or `β`, for a realizer of `Σ_{m,1,q}`.
pub fn no_tie_check_m1q(roots: &SignedRootMultiset) -> Result<bool> {
    let shape = shape_of_roots(roots)?;
    if !matches!(shape, SigmaShape::TwoChanges { n: 1, .. }) {
        return Err(Error::Inconsistent(alloc::format!("expected Σ_{{m,1,q}}, got Σ_{{{shape}}}")));
    }
    let (beta, alpha, gammas) = moduli(roots);
    Ok(!gammas.iter().any(|g| *g == alpha || *g == beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, rat};
    use crate::construct::{realize_canonical, realize_case_ii};

    fn roots(values: &[&str]) -> SignedRootMultiset {
        SignedRootMultiset::new(values.iter().map(|s| parse_rational(s).unwrap())).unwrap()
    }

    #[test]
    fn q2_reciprocal_identity() {
        // 1/4 + 1 - 10/21 - 1/3 = 37/84 and 11.1/25.2 = 37/84.
        let report = validate_inequalities(&roots(&["4", "1", "-2.1", "-3"])).unwrap();
        let check = report.get("reciprocal-identity").unwrap();
        assert_eq!(check.lhs, rat(37, 84));
        assert_eq!(check.rhs, rat(37, 84));
        assert!(report.all_hold());
        assert!(report.get("sum").is_none());
    }

    #[test]
    fn one_four_one_sum_inequalities() {
        let w = realize_canonical(&"+----+".parse().unwrap()).unwrap();
        let report = validate_inequalities(&w).unwrap();
        assert!(report.get("sum").unwrap().holds());
        assert!(report.get("reciprocal-sum").unwrap().holds());
        assert!(report.all_hold());
    }

    #[test]
    fn case_ii_a4_positive() {
        for (d, n) in [(5, 3), (6, 3), (5, 2), (7, 2)] {
            let report = validate_inequalities(&realize_case_ii(d, n).unwrap()).unwrap();
            assert!(report.get("a4-positive").unwrap().holds(), "d={d}, n={n}");
            assert!(report.all_hold());
        }
    }

    #[test]
    fn rejects_other_shapes() {
        assert!(validate_inequalities(&roots(&["1", "1.05", "-1.08", "-1.09", "-1.1"])).is_err());
        assert!(no_tie_check_m1q(&roots(&["4", "1", "-2.1", "-3"])).is_err());
    }

    #[test]
    fn no_ties_for_m1q() {
        assert!(no_tie_check_m1q(&roots(&["-1", "0.2", "0.1"])).unwrap());
        let w = realize_canonical(&"++-++".parse().unwrap()).unwrap();
        assert!(no_tie_check_m1q(&w).unwrap());
    }
}
