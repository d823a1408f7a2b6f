//! Surgery-presentation corpus files.
//!
//! A corpus is a JSON document `{"entries": [...]}` whose entries are
//! `{name, strands, word, framings}` plus optional reference data:
//! `expected` lists complex values of `τ` (per level, or for every level
//! when `level` is absent) with a tolerance and a provenance tag, and
//! `equivalent` names another presentation of the same manifold, whose
//! invariant must agree exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, LinkPresentation, PresentationRecord};
use crate::error::{Error, Result};

/// The corpus shipped with the crate.
pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.json");

/// A reference value of `τ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedValue {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    /// `[re, im]`.
    pub value: [f64; 2],
    pub tolerance: f64,
    pub provenance: String,
}

/// Another presentation of the same 3-manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalent {
    pub strands: usize,
    pub word: Vec<i32>,
    pub framings: Vec<i64>,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub strands: usize,
    pub word: Vec<i32>,
    pub framings: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExpectedValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalent: Option<Equivalent>,
}

impl CorpusEntry {
    pub fn presentation(&self) -> Result<LinkPresentation> {
        BraidWord::new(self.strands, self.word.clone())
            .and_then(|b| LinkPresentation::new(b, self.framings.clone()))
            .map_err(|e| Error::Parse(format!("corpus entry {:?}: {e}", self.name)))
    }

    pub fn equivalent_presentation(&self) -> Result<Option<LinkPresentation>> {
        self.equivalent
            .as_ref()
            .map(|e| {
                BraidWord::new(e.strands, e.word.clone())
                    .and_then(|b| LinkPresentation::new(b, e.framings.clone()))
                    .map_err(|err| Error::Parse(format!("equivalent of {:?}: {err}", self.name)))
            })
            .transpose()
    }

    /// Reference values that apply at `level`.
    pub fn expected_at(&self, level: u32) -> impl Iterator<Item = &ExpectedValue> {
        self.expected
            .iter()
            .filter(move |e| e.level.is_none_or(|l| l == level))
    }

    pub fn record(&self) -> PresentationRecord {
        PresentationRecord {
            strands: self.strands,
            word: self.word.clone(),
            framings: self.framings.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let corpus: Corpus =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("corpus: {e}")))?;
        for entry in &corpus.entries {
            entry.presentation()?;
            entry.equivalent_presentation()?;
        }
        Ok(corpus)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_CORPUS).expect("bundled corpus is valid")
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
