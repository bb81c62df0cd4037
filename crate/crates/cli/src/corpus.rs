//! The bundled example graphs and their expected regularity values.
//!
//! A corpus directory holds one graph document per entry (`<name>.json`) and
//! an `expected.json` table. Rows whose `value` is `null` are computed and
//! reported but not compared.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use woi_core::graph::GraphDocument;
use woi_core::{SymbolicMethod, WeightedOrientedGraph};

use crate::error::{CliError, Result};

const TABLE: &str = "expected.json";

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    RegPower,
    RegSymbolic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub entry: String,
    pub quantity: Quantity,
    pub k: u32,
    pub value: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<SymbolicMethod>,
}

impl ExpectedRow {
    pub fn label(&self) -> String {
        let q = match self.quantity {
            Quantity::RegPower => format!("reg I^{}", self.k),
            Quantity::RegSymbolic => format!("reg I^({})", self.k),
        };
        match self.method {
            Some(m) if self.quantity == Quantity::RegSymbolic => format!("{} {q} [{}]", self.entry, method_name(m)),
            _ => format!("{} {q}", self.entry),
        }
    }
}

pub fn method_name(m: SymbolicMethod) -> &'static str {
    match m {
        SymbolicMethod::Primes => "primes",
        SymbolicMethod::Associated => "associated",
        SymbolicMethod::SinkFormula => "sink-formula",
        SymbolicMethod::Auto => "auto",
    }
}

#[derive(Debug, Deserialize)]
struct Table {
    rows: Vec<ExpectedRow>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub document: GraphDocument,
    pub graph: WeightedOrientedGraph,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub rows: Vec<ExpectedRow>,
}

impl Corpus {
    pub fn load(dir: &Path) -> Result<Self> {
        let read = |path: &Path| fs::read_to_string(path).map_err(|e| CliError::io(path, e));
        let table_path = dir.join(TABLE);
        let table: Table = serde_json::from_str(&read(&table_path)?).map_err(|e| CliError::json(&table_path, e))?;
        let mut entries = Vec::new();
        for item in fs::read_dir(dir).map_err(|e| CliError::io(dir, e))? {
            let path = item.map_err(|e| CliError::io(dir, e))?.path();
            let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else { continue };
            if path.extension().is_none_or(|e| e != "json") || path.file_name() == Some(TABLE.as_ref()) {
                continue;
            }
            let document: GraphDocument = serde_json::from_str(&read(&path)?).map_err(|e| CliError::json(&path, e))?;
            let graph = WeightedOrientedGraph::from_document(&document)?;
            entries.push(CorpusEntry { name: stem.to_string(), document, graph });
        }
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        if let Some(row) = table.rows.iter().find(|r| !entries.iter().any(|e| e.name == r.entry)) {
            return Err(CliError::Usage(format!("{}: row refers to unknown entry `{}`", table_path.display(), row.entry)));
        }
        Ok(Corpus { entries, rows: table.rows })
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries selected by `--only`, all of them when `only` is empty.
    pub fn select(&self, only: &[String]) -> Result<Vec<&CorpusEntry>> {
        if only.is_empty() {
            return Ok(self.entries.iter().collect());
        }
        only.iter()
            .map(|name| self.get(name).ok_or_else(|| CliError::Usage(format!("no corpus entry named `{name}`"))))
            .collect()
    }

    pub fn rows_for<'a>(&'a self, entry: &'a str) -> impl Iterator<Item = &'a ExpectedRow> + 'a {
        self.rows.iter().filter(move |r| r.entry == entry)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_loads() {
        let corpus = Corpus::load(&default_dir()).unwrap();
        let names: Vec<&str> = corpus.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["fig1", "fig2", "fig3", "fig4", "fig4-prime"]);
        assert_eq!(corpus.rows_for("fig1").count(), 4);
        assert!(corpus.select(&["nope".into()]).is_err());
    }

    #[test]
    fn documents_round_trip() {
        let corpus = Corpus::load(&default_dir()).unwrap();
        for e in &corpus.entries {
            let text = serde_json::to_string(&e.graph.to_document()).unwrap();
            let again = woi_core::graph::parse_graph(&text).unwrap();
            assert_eq!(again.to_document(), e.graph.to_document(), "{}", e.name);
        }
    }
}
