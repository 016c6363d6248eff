//! JSON knot files: a name plus any of a crossing diagram, a presentation and
//! a Seifert matrix.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::diagram::CrossingDiagram;
use super::homology::SeifertMatrix;
use super::record::KnotRecord;
use crate::error::{Error, Result};
use crate::group::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationBlock {
    pub generators: usize,
    /// Words such as `"x1 X2 x3"`; capitals are inverses.
    pub relators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossings: Option<CrossingDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<Vec<Vec<i64>>>,
}

impl KnotFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("knot file: {e}")))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::Io(format!("file not found: {}", path.display())),
            _ => Error::Io(format!("cannot read {}: {e}", path.display())),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("knot files serialize") + "\n"
    }

    /// Parses every block and checks that their Alexander polynomials agree.
    pub fn to_record(&self) -> Result<KnotRecord> {
        let presentation = match &self.presentation {
            Some(p) => {
                let relators = p.relators.iter().map(|r| Word::parse(r)).collect::<Result<Vec<_>>>()?;
                Some(Presentation::knot_group(p.generators, relators)?)
            }
            None => None,
        };
        let seifert = self.seifert.as_deref().map(SeifertMatrix::from_i64).transpose()?;
        if let Some(d) = &self.crossings {
            d.validate()?;
        }
        KnotRecord::new(self.name.clone(), self.crossings.clone(), presentation, seifert)
    }

    pub fn from_record(rec: &KnotRecord, description: Option<String>) -> Self {
        KnotFile {
            name: rec.name.clone(),
            description,
            crossings: rec.diagram.clone(),
            presentation: rec.presentation.as_ref().map(|p| PresentationBlock {
                generators: p.generator_count(),
                relators: p.relators().iter().map(|w| w.to_string()).collect(),
            }),
            seifert: rec.seifert.as_ref().map(SeifertMatrix::to_i64_rows),
        }
    }

    /// Load, validate and re-emit; stable after one pass.
    pub fn normalized(&self) -> Result<Self> {
        Ok(Self::from_record(&self.to_record()?, self.description.clone()))
    }
}
