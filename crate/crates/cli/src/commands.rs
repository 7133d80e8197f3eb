//! Subcommand implementations. Each writes its report to `out` and returns
//! the process exit code; failures carry their own code.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use moduli_core::algebra::{expand_from_roots, format_rational, parse_rational, SignedRootMultiset};
use moduli_core::classify::atlas::{summarize, AtlasConfig, KnownWitnesses, DEFAULT_BUDGET};
use moduli_core::classify::{classify_cell, verify_entries, CellStatus, CorpusEntry};
use moduli_core::construct::realize_canonical;
use moduli_core::descartes::{shape_of, sign_pattern_of, SigmaShape, SignPattern};
use moduli_core::ordering::{ordering_of, stats_of, ModulusOrdering};
use moduli_core::Error;
use serde::{Deserialize, Serialize};

use crate::document::{cells_to_csv, AtlasDocument};
use crate::parallel::build_atlas_parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FORBIDDEN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_IO: i32 = 5;

pub const BUDGET_ENV: &str = "MODULI_ATLAS_BUDGET";

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::new(EXIT_IO, format!("{}: {e}", path.display()))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Inconsistent(_) | Error::OutOfRange { .. } | Error::UnsupportedShape { .. } => {
                EXIT_PARSE
            }
            Error::DegeneratePattern { .. } | Error::ZeroRoot => EXIT_DEGENERATE,
            _ => EXIT_FORBIDDEN,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_IO, e.to_string())
    }
}

pub type CmdResult = Result<i32, CliError>;

/// Flag, then environment, then the built-in default.
pub fn resolve_budget(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::new(EXIT_PARSE, format!("{BUDGET_ENV}={v:?} is not a sample count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[derive(Serialize)]
struct RealizeOutput {
    pattern: String,
    shape: Option<String>,
    ordering: String,
    roots: Vec<String>,
    coefficients: Vec<String>,
}

pub enum RealizeInput<'a> {
    Pattern(&'a str),
    Shape(&'a str),
    Roots(&'a str),
}

pub fn realize(input: RealizeInput<'_>, out: &mut dyn Write) -> CmdResult {
    let witness = match input {
        RealizeInput::Pattern(p) => realize_canonical(&p.parse::<SignPattern>()?)?,
        RealizeInput::Shape(s) => realize_canonical(&s.parse::<SigmaShape>()?.pattern())?,
        RealizeInput::Roots(list) => {
            let roots = list
                .split(',')
                .map(|r| parse_rational(r.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            SignedRootMultiset::new(roots)?
        }
    };
    let poly = expand_from_roots(&witness);
    let pattern = sign_pattern_of(&poly)?;
    let d = poly.degree();
    let doc = RealizeOutput {
        pattern: pattern.to_string(),
        shape: shape_of(&pattern).ok().map(|s| s.to_string()),
        ordering: ordering_of(&witness).to_string(),
        roots: witness.to_vec().iter().map(format_rational).collect(),
        coefficients: (0..=d).rev().map(|k| format_rational(&poly.coefficient(k))).collect(),
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data serializes"))?;
    Ok(EXIT_OK)
}

pub fn classify(shape: &str, word: &str, seed: u64, budget: Option<usize>, out: &mut dyn Write) -> CmdResult {
    let shape: SigmaShape = shape.parse()?;
    let word: ModulusOrdering = word.parse()?;
    let cfg = AtlasConfig { seed, budget: resolve_budget(budget)?, cross_check_budget: 0 };
    let known = KnownWitnesses::for_degree(shape.degree());
    let cell = classify_cell(&shape, &word, &known, &cfg)?;
    match &cell.status {
        CellStatus::Realizable { witness, source } => {
            let roots: Vec<String> = witness.to_vec().iter().map(format_rational).collect();
            writeln!(out, "{shape} {word}: realizable ({}) witness [{}]", source.as_str(), roots.join(", "))?;
            Ok(EXIT_OK)
        }
        CellStatus::Forbidden(c) => {
            writeln!(out, "{shape} {word}: forbidden {} ({})", c.tag(), c.note())?;
            Ok(EXIT_FORBIDDEN)
        }
        CellStatus::Unknown => {
            writeln!(out, "{shape} {word}: unknown (no citation, no witness within {} samples)", cfg.budget)?;
            Ok(EXIT_UNKNOWN)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub struct AtlasArgs<'a> {
    pub degree: usize,
    pub changes: &'a [usize],
    pub out: Option<&'a Path>,
    pub seed: u64,
    pub budget: Option<usize>,
    pub format: Format,
    pub degree_cap: usize,
    pub workers: Option<usize>,
}

fn check_degree(degree: usize, cap: usize, changes: &[usize]) -> Result<(), CliError> {
    if degree == 0 || degree > cap {
        return Err(CliError::new(EXIT_PARSE, format!("degree {degree} outside 1..={cap}")));
    }
    if let Some(c) = changes.iter().find(|&&c| c > 2) {
        return Err(CliError::new(EXIT_PARSE, format!("{c} sign changes: only 0, 1 and 2 are supported")));
    }
    Ok(())
}

pub fn atlas(args: &AtlasArgs<'_>, out: &mut dyn Write) -> CmdResult {
    check_degree(args.degree, args.degree_cap, args.changes)?;
    let budget = resolve_budget(args.budget)?;
    let cfg = AtlasConfig { seed: args.seed, budget, cross_check_budget: 0 };
    let workers = args.workers.unwrap_or_else(crate::parallel::default_workers);
    let cells = build_atlas_parallel(args.degree, args.changes, &cfg, workers)?;
    let doc = AtlasDocument::new(args.degree, args.changes, &cells, args.seed, budget);
    let text = match args.format {
        Format::Json => doc.to_json(),
        Format::Csv => cells_to_csv(&doc.cells),
    };
    match args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::io(path, e))?;
            write_summary(&cells, out)?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn write_summary(cells: &[moduli_core::classify::AtlasCell], out: &mut dyn Write) -> std::io::Result<()> {
    for (shape, s) in summarize(cells) {
        let total = s.realizable.len() + s.forbidden.len() + s.unknown.len();
        write!(
            out,
            "{shape}: {}/{total} realizable, {} forbidden, {} unknown",
            s.realizable.len(),
            s.forbidden.len(),
            s.unknown.len()
        )?;
        if shape.changes() == 1 {
            let ns: Vec<String> = s
                .realizable
                .iter()
                .filter_map(|w| stats_of(&w.parse().ok()?, 1).ok())
                .map(|st| st.n_star.to_string())
                .collect();
            write!(out, "; realizable n* = {{{}}}", ns.join(","))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn stats(
    degree: usize,
    changes: &[usize],
    seed: u64,
    budget: Option<usize>,
    workers: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    check_degree(degree, 8, changes)?;
    let cfg = AtlasConfig { seed, budget: resolve_budget(budget)?, cross_check_budget: 0 };
    let cells = build_atlas_parallel(degree, changes, &cfg, workers.unwrap_or_else(crate::parallel::default_workers))?;
    write_summary(&cells, out)?;
    // Largest observed n* per (m, q) among realizable two-change cells; nothing is claimed beyond it.
    let mut max_n_star: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for cell in &cells {
        if let (SigmaShape::TwoChanges { m, q, .. }, true) = (cell.shape, cell.status.is_realizable()) {
            let st = stats_of(&cell.ordering, 2)?;
            let e = max_n_star.entry((m, q)).or_insert(0);
            *e = (*e).max(st.n_star);
        }
    }
    for ((m, q), n) in max_n_star {
        writeln!(out, "m={m} q={q}: max realized n* = {n}")?;
    }
    let unknown = cells.iter().filter(|c| matches!(c.status, CellStatus::Unknown)).count();
    writeln!(out, "cells: {}, unknown: {unknown}", cells.len())?;
    Ok(EXIT_OK)
}

/// Corpus entry as stored in a fixture file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub name: String,
    pub roots: Vec<String>,
    pub coefficients: Vec<String>,
    pub pattern: String,
    pub word: String,
}

impl From<FixtureEntry> for CorpusEntry {
    fn from(f: FixtureEntry) -> Self {
        CorpusEntry { name: f.name, roots: f.roots, coefficients: f.coefficients, pattern: f.pattern, word: f.word }
    }
}

impl From<CorpusEntry> for FixtureEntry {
    fn from(c: CorpusEntry) -> Self {
        FixtureEntry { name: c.name, roots: c.roots, coefficients: c.coefficients, pattern: c.pattern, word: c.word }
    }
}

pub fn verify_corpus(fixture: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let entries: Vec<CorpusEntry> = match fixture {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            let parsed: Vec<FixtureEntry> = serde_json::from_str(&text)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            parsed.into_iter().map(CorpusEntry::from).collect()
        }
        None => moduli_core::classify::corpus(),
    };
    let reports = verify_entries(&entries);
    let mut passed = 0;
    for r in &reports {
        if r.passed {
            passed += 1;
            writeln!(out, "PASS {}", r.name)?;
        } else {
            writeln!(out, "FAIL {}: {}", r.name, r.detail.as_deref().unwrap_or("mismatch"))?;
        }
    }
    writeln!(out, "{passed}/{} entries pass", reports.len())?;
    Ok(if passed == reports.len() { EXIT_OK } else { EXIT_FORBIDDEN })
}
