//! The realizability atlas: one cell per (shape, generic word).
//!
//! Status resolution order is theorem citation, then a known construction,
//! then randomized search. A cited cell that also receives a witness aborts
//! the build with [`Error::SoundnessViolation`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{expand_from_roots, parse_rational, SignedRootMultiset};
use crate::construct::{
    concatenate, multiply_linear_large, realize_c1_case, realize_c1_generic, realize_canonical,
    realize_case_ii, split_root, verify_witness,
};
use crate::descartes::{shape_of, sign_pattern_of, SigmaShape};
use crate::error::{Error, Result};
use crate::ordering::{enumerate_generic, ordering_of, stats_of, ModulusOrdering};

use super::corpus::corpus;
use super::search::{cell_seed, search_witness};
use super::theorems::{forbidden_by_theorem, TheoremCitation};

pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSource {
    Constructed,
    Searched,
}

impl WitnessSource {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessSource::Constructed => "constructed",
            WitnessSource::Searched => "searched",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Realizable { witness: SignedRootMultiset, source: WitnessSource },
    Forbidden(TheoremCitation),
    Unknown,
}

impl CellStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CellStatus::Realizable { .. } => "realizable",
            CellStatus::Forbidden(_) => "forbidden",
            CellStatus::Unknown => "unknown",
        }
    }

    pub fn is_realizable(&self) -> bool {
        matches!(self, CellStatus::Realizable { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasCell {
    pub shape: SigmaShape,
    pub ordering: ModulusOrdering,
    pub status: CellStatus,
}

impl AtlasCell {
    pub fn key(&self) -> (SigmaShape, String) {
        (self.shape, self.ordering.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtlasConfig {
    pub seed: u64,
    /// Search samples per cell lacking a construction.
    pub budget: usize,
    /// Samples also spent on every cited cell, as a soundness probe.
    pub cross_check_budget: usize,
}

impl Default for AtlasConfig {
    fn default() -> Self {
        AtlasConfig { seed: 0, budget: DEFAULT_BUDGET, cross_check_budget: 0 }
    }
}

/// Witnesses obtained without search, indexed by (shape, generic word).
#[derive(Clone, Debug, Default)]
pub struct KnownWitnesses {
    map: BTreeMap<(SigmaShape, String), SignedRootMultiset>,
}

impl KnownWitnesses {
    /// Record `roots` and their reciprocals under whatever cell they realize.
    pub fn offer(&mut self, roots: &SignedRootMultiset) {
        for r in [roots.clone(), roots.reciprocal()] {
            let Ok(pattern) = sign_pattern_of(&expand_from_roots(&r)) else { continue };
            let Ok(shape) = shape_of(&pattern) else { continue };
            let word = ordering_of(&r);
            if word.is_generic() {
                self.map.entry((shape, word.to_string())).or_insert(r);
            }
        }
    }

    pub fn get(&self, shape: &SigmaShape, word: &ModulusOrdering) -> Option<&SignedRootMultiset> {
        self.map.get(&(*shape, word.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SigmaShape, &str, &SignedRootMultiset)> {
        self.map.iter().map(|((shape, word), w)| (shape, word.as_str(), w))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Every construction available in degree `d`.
    pub fn for_degree(d: usize) -> KnownWitnesses {
        let mut known = KnownWitnesses::default();
        for entry in corpus() {
            if let Ok(roots) = entry.root_set() {
                if roots.degree() == d {
                    known.offer(&roots);
                }
            }
        }
        for c in 0..=2 {
            for shape in SigmaShape::all(d, c) {
                if let Ok(w) = realize_canonical(&shape.pattern()) {
                    known.offer(&w);
                }
            }
        }
        let mut c1 = C1Families::default();
        for shape in SigmaShape::all(d, 1) {
            if let SigmaShape::OneChange { m, n } = shape {
                for w in c1.get(m, n) {
                    known.offer(w);
                }
            }
        }
        if d == 5 {
            for w in degree_five_witnesses() {
                known.offer(&w);
            }
        }
        for n in [2, 3] {
            if let Ok(w) = realize_case_ii(d, n) {
                known.offer(&w);
            }
        }
        // Splice two one-change realizations: Σ_{m,a} then Σ_{b,q} gives Σ_{m,a+b-1,q}.
        for shape in SigmaShape::all(d, 2) {
            let SigmaShape::TwoChanges { m, n, q } = shape else { continue };
            for a in 1..=n {
                let b = n + 1 - a;
                let left = c1.get(m, a).to_vec();
                let right = c1.get(b, q).to_vec();
                for l in &left {
                    for r in &right {
                        if let Ok(res) = concatenate(l, r) {
                            known.offer(&res.roots);
                        }
                    }
                }
            }
        }
        known
    }
}

/// One generic witness per realizable `n*` of each `Σ_{m,n}`, built on demand.
#[derive(Default)]
struct C1Families {
    cache: BTreeMap<(usize, usize), Vec<SignedRootMultiset>>,
}

impl C1Families {
    fn get(&mut self, m: usize, n: usize) -> &[SignedRootMultiset] {
        self.cache.entry((m, n)).or_insert_with(|| {
            let d = m + n - 1;
            if d == 0 {
                return Vec::new();
            }
            (0..d).filter_map(|n_star| realize_c1_generic(m, n, n_star).ok()).collect()
        })
    }
}

fn roots(values: &[&str]) -> SignedRootMultiset {
    SignedRootMultiset::new(values.iter().map(|s| parse_rational(s).expect("literal"))).expect("nonzero")
}

/// Explicit degree-5 constructions beyond the corpus: the four splittings of
/// the triple root of `(x-0.1)(x-1)(x+1)^3`, and `(1+εx)Q` for `Q ∈ {Q₂, Q₃, Q₅}`.
pub fn degree_five_witnesses() -> Vec<SignedRootMultiset> {
    let mut out = Vec::new();
    let base = roots(&["0.1", "1", "-1", "-1", "-1"]);
    let minus_one = crate::algebra::int(-1);
    for offsets in [[-1i64, -2, -3], [1, -1, -2], [1, 2, -1], [1, 2, 3]] {
        let offsets: Vec<_> = offsets.iter().map(|&o| crate::algebra::rat(o, 10)).collect();
        if let Ok(w) = split_root(&base, &minus_one, &offsets) {
            out.push(w);
        }
    }
    let eta = crate::algebra::rat(1, 2);
    for q in [
        &["4", "1", "-2.1", "-3"][..],
        &["0.995", "0.99", "-1", "-1.001"][..],
        &["1", "0.97", "-0.99", "-1.001"][..],
    ] {
        if let Ok(w) = multiply_linear_large(&roots(q), &eta) {
            out.push(w);
        }
    }
    out
}

/// Every (shape, generic word) pair of degree `d` for the given change counts.
pub fn atlas_keys(d: usize, changes: &[usize]) -> Vec<(SigmaShape, ModulusOrdering)> {
    let mut keys = Vec::new();
    for &c in changes {
        for shape in SigmaShape::all(d, c) {
            for word in enumerate_generic(d, c) {
                keys.push((shape, word));
            }
        }
    }
    keys
}

/// A constructed witness for a one-change word whose only ties sit at `α`.
fn tied_c1_witness(shape: &SigmaShape, word: &ModulusOrdering) -> Option<SignedRootMultiset> {
    let SigmaShape::OneChange { m, n } = *shape else { return None };
    let only_alpha_tied = word.groups().iter().all(|g| g.total() == 1 || g.pos == 1);
    if word.is_generic() || !only_alpha_tied {
        return None;
    }
    let st = stats_of(word, 1).ok()?;
    let w = if n <= m {
        realize_c1_case(m, n, st.tied_alpha, st.n_star).ok()?
    } else {
        realize_c1_case(n, m, st.tied_alpha, st.m_star).ok()?.reciprocal()
    };
    verify_witness(&w, &shape.pattern(), Some(word)).then_some(w)
}

/// Resolve one cell.
pub fn classify_cell(
    shape: &SigmaShape,
    word: &ModulusOrdering,
    known: &KnownWitnesses,
    cfg: &AtlasConfig,
) -> Result<AtlasCell> {
    let citation = forbidden_by_theorem(shape, word)?;
    let pattern = shape.pattern();
    let seed = cell_seed(cfg.seed, shape, word);
    let constructed = known.get(shape, word).cloned().or_else(|| tied_c1_witness(shape, word));
    let status = match citation {
        Some(cite) => {
            let probe = if cfg.cross_check_budget > 0 {
                search_witness(shape, word, cfg.cross_check_budget, seed)
            } else {
                None
            };
            if let Some(w) = constructed.or(probe) {
                return Err(Error::SoundnessViolation(alloc::format!(
                    "cell Σ_{{{shape}}} {word} is cited by {cite} but has witness {:?}",
                    w.to_vec().iter().map(crate::algebra::format_rational).collect::<Vec<_>>()
                )));
            }
            CellStatus::Forbidden(cite)
        }
        None => match constructed {
            Some(witness) => CellStatus::Realizable { witness, source: WitnessSource::Constructed },
            None => match search_witness(shape, word, cfg.budget, seed) {
                Some(witness) => CellStatus::Realizable { witness, source: WitnessSource::Searched },
                None => CellStatus::Unknown,
            },
        },
    };
    if let CellStatus::Realizable { witness, .. } = &status {
        if !verify_witness(witness, &pattern, Some(word)) {
            return Err(Error::Inconsistent(alloc::format!("witness for Σ_{{{shape}}} {word} failed to verify")));
        }
    }
    Ok(AtlasCell { shape: *shape, ordering: word.clone(), status })
}

/// Sequential atlas build; cells are listed shape by shape, words lexicographically.
pub fn build_atlas(d: usize, changes: &[usize], cfg: &AtlasConfig) -> Result<Vec<AtlasCell>> {
    let known = KnownWitnesses::for_degree(d);
    atlas_keys(d, changes)
        .iter()
        .map(|(shape, word)| classify_cell(shape, word, &known, cfg))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShapeSummary {
    pub realizable: Vec<String>,
    pub forbidden: Vec<String>,
    pub unknown: Vec<String>,
}

/// Group cell words by shape and status.
pub fn summarize(cells: &[AtlasCell]) -> BTreeMap<SigmaShape, ShapeSummary> {
    let mut out: BTreeMap<SigmaShape, ShapeSummary> = BTreeMap::new();
    for cell in cells {
        let entry = out.entry(cell.shape).or_default();
        let bucket = match cell.status {
            CellStatus::Realizable { .. } => &mut entry.realizable,
            CellStatus::Forbidden(_) => &mut entry.forbidden,
            CellStatus::Unknown => &mut entry.unknown,
        };
        bucket.push(cell.ordering.to_string());
    }
    out
}

/// Realizable `n*` values per one-change shape.
pub fn realizable_n_star(cells: &[AtlasCell]) -> BTreeMap<SigmaShape, Vec<usize>> {
    let mut out: BTreeMap<SigmaShape, Vec<usize>> = BTreeMap::new();
    for cell in cells {
        if cell.shape.changes() == 1 && cell.status.is_realizable() {
            if let Ok(st) = stats_of(&cell.ordering, 1) {
                out.entry(cell.shape).or_default().push(st.n_star);
            }
        }
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SigmaShape {
        s.parse().unwrap()
    }

    #[test]
    fn d4_two_changes_table() {
        let cells = build_atlas(4, &[2], &AtlasConfig::default()).unwrap();
        let summary = summarize(&cells);
        assert_eq!(summary[&shape("2,2,1")].realizable, ["PPNN", "PNPN", "PNNP", "NPPN"]);
        assert_eq!(summary[&shape("2,2,1")].forbidden, ["NPNP", "NNPP"]);
        assert_eq!(summary[&shape("1,3,1")].realizable, ["PNNP"]);
        assert!(summary.values().all(|s| s.unknown.is_empty()));
    }

    #[test]
    fn classify_single_cells() {
        let known = KnownWitnesses::for_degree(5);
        let cfg = AtlasConfig::default();
        let cell = classify_cell(&shape("3,2,1"), &"PNNNP".parse().unwrap(), &known, &cfg).unwrap();
        assert_eq!(cell.status, CellStatus::Forbidden(TheoremCitation::P321));
        let cell = classify_cell(&shape("2,2,2"), &"NNPPN".parse().unwrap(), &known, &cfg).unwrap();
        assert!(cell.status.is_realizable());
        assert!(classify_cell(&shape("2,2,2"), &"NNPP".parse().unwrap(), &known, &cfg).is_err());
    }

    #[test]
    fn tied_c1_cell_is_constructed() {
        let known = KnownWitnesses::default();
        let cfg = AtlasConfig { budget: 0, ..AtlasConfig::default() };
        let cell = classify_cell(&shape("3,2"), &"N(PN)N".parse().unwrap(), &known, &cfg).unwrap();
        assert!(matches!(cell.status, CellStatus::Realizable { source: WitnessSource::Constructed, .. }));
    }

    #[test]
    fn known_index_is_exact() {
        let known = KnownWitnesses::for_degree(5);
        for ((shape, word), w) in &known.map {
            assert!(verify_witness(w, &shape.pattern(), Some(&word.parse().unwrap())));
        }
    }

    #[test]
    fn one_change_intervals_d4() {
        let cells = build_atlas(4, &[1], &AtlasConfig::default()).unwrap();
        let ns = realizable_n_star(&cells);
        assert_eq!(ns[&shape("4,1")], [0]);
        assert_eq!(ns[&shape("3,2")], [0, 1, 2]);
        assert_eq!(ns[&shape("2,3")], [1, 2, 3]);
        assert_eq!(ns[&shape("1,4")], [3]);
    }
}
