//! Regression corpus of explicit polynomials, stored as printed: factored
//! roots, decimal coefficients (leading first), sign pattern, modulus word.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{expand_from_roots, format_decimal, parse_rational, SignedRootMultiset};
use crate::descartes::sign_pattern_of;
use crate::error::Result;
use crate::ordering::{ordering_of, ModulusOrdering};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub roots: Vec<String>,
    /// Printed coefficients from `x^d` down to `x^0`.
    pub coefficients: Vec<String>,
    pub pattern: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub passed: bool,
    /// First mismatch, if any.
    pub detail: Option<String>,
}

const ENTRIES: &[(&str, &[&str], &[&str], &str, &str)] = &[
    ("d2-a", &["-1", "-2"], &["1", "3", "2"], "+++", "NN"),
    ("d2-b", &["-2", "1"], &["1", "1", "-2"], "++-", "PN"),
    ("d2-c", &["1", "2"], &["1", "-3", "2"], "+-+", "PP"),
    ("d2-d", &["-1", "2"], &["1", "-1", "-2"], "+--", "NP"),
    ("P1", &["-1", "1.5", "1.6"], &["1", "-2.1", "-0.7", "2.4"], "+--+", "NPP"),
    ("P2", &["-1", "1.5", "0.6"], &["1", "-1.1", "-1.2", "0.9"], "+--+", "PNP"),
    ("P3", &["-1", "0.5", "0.6"], &["1", "-0.1", "-0.8", "0.3"], "+--+", "PPN"),
    ("P4", &["-1", "0.2", "0.1"], &["1", "0.7", "-0.28", "0.02"], "++-+", "PPN"),
    ("P5", &["-1", "-2", "0.1"], &["1", "2.9", "1.7", "-0.2"], "+++-", "PNN"),
    ("P6", &["-1", "-2", "0.95"], &["1", "2.05", "-0.85", "-1.9"], "++--", "PNN"),
    ("P7", &["-1", "-2", "1.5"], &["1", "1.5", "-2.5", "-3"], "++--", "NPN"),
    ("P8", &["-1", "-2", "2.5"], &["1", "0.5", "-5.5", "-5"], "++--", "NNP"),
    ("Q1", &["1.2", "0.8", "-0.97", "-0.98"], &["1", "-0.05", "-1.9894", "-0.0292", "0.912576"], "+---+", "PNNP"),
    ("Q2", &["4", "1", "-2.1", "-3"], &["1", "0.1", "-15.2", "-11.1", "25.2"], "++--+", "PNNP"),
    ("Q3", &["0.995", "0.99", "-1", "-1.001"], &["1", "0.016", "-1.985935", "-0.01589995", "0.98603505"], "++--+", "PPNN"),
    ("Q4", &["1.6", "1.5", "-1", "-100"], &["1", "97.9", "-210.7", "-67.6", "240"], "++--+", "NPPN"),
    ("Q5", &["1", "0.97", "-0.99", "-1.001"], &["1", "0.021", "-1.96128", "-0.0209803", "0.9612603"], "++--+", "PNPN"),
    ("D5-a", &["1", "1.05", "-1.08", "-1.09", "-1.1"], &["1", "1.22", "-2.0893", "-2.57819", "1.087824", "1.359666"], "++--++", "PPNNN"),
    ("D5-b", &["1", "1.05", "-1.02", "-1.09", "-1.1"], &["1", "1.16", "-2.0977", "-2.44376", "1.097331", "1.284129"], "++--++", "PNPNN"),
    ("D5-c", &["1", "1.05", "-1.02", "-1.04", "-1.1"], &["1", "1.11", "-2.1012", "-2.33506", "1.101036", "1.225224"], "++--++", "PNNPN"),
    ("D5-d", &["1", "1.05", "-1.02", "-1.03", "-1.04"], &["1", "1.04", "-2.1019", "-2.187206", "1.1018508", "1.1472552"], "++--++", "PNNNP"),
    ("D5-e", &["1", "1.05", "-0.99", "-1.09", "-1.1"], &["1", "1.13", "-2.1019", "-2.376545", "1.1020845", "1.2463605"], "++--++", "NPPNN"),
    ("D5-f", &["1", "1.05", "-0.99", "-1.04", "-1.1"], &["1", "1.08", "-2.1039", "-2.26927", "1.103982", "1.189188"], "++--++", "NPNPN"),
    (
        "D7-a",
        &["1", "-0.99", "-0.94", "-0.93", "-0.92", "-0.91", "0.9"],
        &["1", "2.79", "0.7855", "-4.244835", "-3.88785176", "0.8027291316", "2.102352335", "0.6521052938"],
        "+++--+++",
        "PNNNNNP",
    ),
    (
        "D7-b",
        &["1", "-1", "0.9", "-0.9", "-0.9", "-0.9", "-0.9"],
        &["1", "2.7", "0.62", "-4.158", "-3.5883", "0.86751", "1.9683", "0.59049"],
        "+++--+++",
        "(PNNNN)(PN)",
    ),
    ("E8", &["0.1", "1", "-1", "-1", "-1"], &["1", "1.9", "-0.2", "-2", "-0.8", "0.1"], "++---+", "P(PNNN)"),
    ("S231", &["-1", "1", "1", "-2.1", "-2.1"], &["1", "3.2", "-0.79", "-7.61", "-0.21", "4.41"], "++---+", "(PPN)(NN)"),
    ("S321", &["-1", "1.5", "1.6", "-100", "-1000"], &["1", "1097.9", "97689.3", "-210767.6", "-67360", "240000"], "+++--+", "NPPNN"),
];

/// The built-in corpus.
pub fn corpus() -> Vec<CorpusEntry> {
    ENTRIES
        .iter()
        .map(|(name, roots, coefficients, pattern, word)| CorpusEntry {
            name: name.to_string(),
            roots: roots.iter().map(|s| s.to_string()).collect(),
            coefficients: coefficients.iter().map(|s| s.to_string()).collect(),
            pattern: pattern.to_string(),
            word: word.to_string(),
        })
        .collect()
}

impl CorpusEntry {
    pub fn root_set(&self) -> Result<SignedRootMultiset> {
        SignedRootMultiset::new(self.roots.iter().map(|r| parse_rational(r)).collect::<Result<Vec<_>>>()?)
    }

    pub fn ordering(&self) -> Result<ModulusOrdering> {
        self.word.parse()
    }

    fn check(&self) -> core::result::Result<(), String> {
        let roots = self.root_set().map_err(|e| e.to_string())?;
        let poly = expand_from_roots(&roots);
        let d = poly.degree();
        if self.coefficients.len() != d + 1 {
            return Err(alloc::format!("expected {} coefficients, got {}", d + 1, self.coefficients.len()));
        }
        for (i, printed) in self.coefficients.iter().enumerate() {
            let power = d - i;
            let expected = parse_rational(printed).map_err(|e| e.to_string())?;
            let got = poly.coefficient(power);
            if got != expected {
                return Err(alloc::format!(
                    "coefficient of x^{power}: printed {printed}, exact {}",
                    format_decimal(&got)
                ));
            }
        }
        let pattern = sign_pattern_of(&poly).map_err(|e| e.to_string())?;
        if pattern.to_string() != self.pattern {
            return Err(alloc::format!("sign pattern {pattern}, stated {}", self.pattern));
        }
        let word = ordering_of(&roots);
        let stated = self.ordering().map_err(|e| e.to_string())?;
        if word != stated {
            return Err(alloc::format!("ordering {word}, stated {stated}"));
        }
        Ok(())
    }

    pub fn verify(&self) -> EntryReport {
        let outcome = self.check();
        EntryReport { name: self.name.clone(), passed: outcome.is_ok(), detail: outcome.err() }
    }
}

pub fn verify_entries(entries: &[CorpusEntry]) -> Vec<EntryReport> {
    entries.iter().map(CorpusEntry::verify).collect()
}

pub fn verify_corpus() -> Vec<EntryReport> {
    verify_entries(&corpus())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_size_and_names_unique() {
        let c = corpus();
        assert!(c.len() >= 25);
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn tampered_entry_fails_with_coefficient() {
        let mut q3 = corpus().into_iter().find(|e| e.name == "Q3").unwrap();
        assert!(q3.verify().passed);
        q3.coefficients[2] = "-1.985936".into();
        let report = q3.verify();
        assert!(!report.passed);
        assert_eq!(
            report.detail.as_deref(),
            Some("coefficient of x^2: printed -1.985936, exact -1.985935")
        );
    }

    #[test]
    fn wrong_word_fails() {
        let mut p1 = corpus().into_iter().find(|e| e.name == "P1").unwrap();
        p1.word = "PNP".into();
        assert_eq!(p1.verify().detail.as_deref(), Some("ordering NPP, stated PNP"));
    }
}
