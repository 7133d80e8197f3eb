//! Atlas files: JSON document and flat CSV table.

use moduli_core::algebra::{format_rational, parse_rational, SignedRootMultiset};
use moduli_core::classify::{AtlasCell, CellStatus, TheoremCitation, WitnessSource};
use moduli_core::construct::verify_witness;
use moduli_core::descartes::SigmaShape;
use moduli_core::ordering::ModulusOrdering;
use moduli_core::Error;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;
pub const CSV_HEADER: [&str; 5] = ["shape", "word", "status", "citation", "witness"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub budget: usize,
    pub engine_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocCell {
    pub shape: String,
    pub word: String,
    pub status: String,
    pub source: Option<String>,
    pub citation: Option<String>,
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasDocument {
    pub format_version: u32,
    pub degree: usize,
    pub changes: Vec<usize>,
    pub cells: Vec<DocCell>,
    pub provenance: Provenance,
}

impl DocCell {
    pub fn from_cell(cell: &AtlasCell) -> DocCell {
        let (source, citation, witness) = match &cell.status {
            CellStatus::Realizable { witness, source } => (
                Some(source.as_str().to_string()),
                None,
                Some(witness.to_vec().iter().map(format_rational).collect()),
            ),
            CellStatus::Forbidden(c) => (None, Some(c.tag().to_string()), None),
            CellStatus::Unknown => (None, None, None),
        };
        DocCell {
            shape: cell.shape.to_string(),
            word: cell.ordering.to_string(),
            status: cell.status.label().to_string(),
            source,
            citation,
            witness,
        }
    }

    /// Rebuild the cell; witnesses are re-parsed and re-verified exactly.
    pub fn to_cell(&self) -> Result<AtlasCell, Error> {
        let shape: SigmaShape = self.shape.parse()?;
        let ordering: ModulusOrdering = self.word.parse()?;
        let bad = |what: &str| Error::Parse(format!("cell {} {}: {what}", self.shape, self.word));
        let status = match self.status.as_str() {
            "realizable" => {
                let roots = self.witness.as_ref().ok_or_else(|| bad("missing witness"))?;
                let roots = roots.iter().map(|r| parse_rational(r)).collect::<Result<Vec<_>, _>>()?;
                let witness = SignedRootMultiset::new(roots)?;
                if !verify_witness(&witness, &shape.pattern(), Some(&ordering)) {
                    return Err(Error::Inconsistent(format!(
                        "witness for {} {} does not verify",
                        self.shape, self.word
                    )));
                }
                let source = match self.source.as_deref() {
                    Some("constructed") => WitnessSource::Constructed,
                    Some("searched") => WitnessSource::Searched,
                    _ => return Err(bad("unknown witness source")),
                };
                CellStatus::Realizable { witness, source }
            }
            "forbidden" => {
                let tag = self.citation.as_deref().ok_or_else(|| bad("missing citation"))?;
                CellStatus::Forbidden(TheoremCitation::from_tag(tag).ok_or_else(|| bad("unknown citation"))?)
            }
            "unknown" => CellStatus::Unknown,
            other => return Err(bad(&format!("unknown status {other}"))),
        };
        Ok(AtlasCell { shape, ordering, status })
    }
}

impl AtlasDocument {
    pub fn new(degree: usize, changes: &[usize], cells: &[AtlasCell], seed: u64, budget: usize) -> Self {
        AtlasDocument {
            format_version: FORMAT_VERSION,
            degree,
            changes: changes.to_vec(),
            cells: cells.iter().map(DocCell::from_cell).collect(),
            provenance: Provenance { seed, budget, engine_version: env!("CARGO_PKG_VERSION").to_string() },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<AtlasDocument, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_cells(&self) -> Result<Vec<AtlasCell>, Error> {
        self.cells.iter().map(DocCell::to_cell).collect()
    }
}

/// CSV status column: `realizable:constructed`, `realizable:searched`, `forbidden`, `unknown`.
fn csv_status(cell: &DocCell) -> String {
    match &cell.source {
        Some(source) => format!("{}:{source}", cell.status),
        None => cell.status.clone(),
    }
}

pub fn cells_to_csv(cells: &[DocCell]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in cells {
        let witness = c.witness.as_ref().map(|r| r.join(" ")).unwrap_or_default();
        w.write_record([
            c.shape.as_str(),
            c.word.as_str(),
            &csv_status(c),
            c.citation.as_deref().unwrap_or(""),
            &witness,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn cells_from_csv(text: &str) -> Result<Vec<DocCell>, Error> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
    }
    let mut out = Vec::new();
    for record in r.records() {
        let rec = record.map_err(|e| Error::Parse(e.to_string()))?;
        let field = |i: usize| rec.get(i).unwrap_or("").to_string();
        let optional = |s: String| (!s.is_empty()).then_some(s);
        let status = field(2);
        let (status, source) = match status.split_once(':') {
            Some((s, src)) => (s.to_string(), Some(src.to_string())),
            None => (status, None),
        };
        out.push(DocCell {
            shape: field(0),
            word: field(1),
            status,
            source,
            citation: optional(field(3)),
            witness: optional(field(4)).map(|w| w.split(' ').map(str::to_string).collect()),
        });
    }
    Ok(out)
}
