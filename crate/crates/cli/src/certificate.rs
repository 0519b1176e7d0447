//! The JSON documents emitted by the subcommands and read back by `verify`.

use std::collections::BTreeMap;

use ramsey_lab::arrows::{ArrowsResult, RamseyCertificate};
use ramsey_lab::bounds::BoundReport;
use ramsey_lab::colorings::{ExtremalReport, TwoColoring};
use ramsey_lab::trichotomy::{CoreBoundsReport, TrichotomyCertificate};
use ramsey_lab::SimpleGraph;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Trichotomy {
        graph: SimpleGraph,
        q: usize,
        ell: usize,
        certificate: TrichotomyCertificate,
        /// Intermediate inequalities on the contracted core, attached to
        /// star witnesses of graphs other than cycles.
        core_bounds: Option<CoreBoundsReport>,
    },
    Arrows {
        result: ArrowsResult,
    },
    Ramsey {
        result: RamseyCertificate,
    },
    Extremal {
        n: usize,
        m: usize,
        t: usize,
        coloring: TwoColoring,
        report: ExtremalReport,
    },
    Bounds {
        graph: SimpleGraph,
        m: u64,
        t: u64,
        epsilon: Option<String>,
        epsilon_note: Option<String>,
        rows: Vec<BoundReport>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Trichotomy { .. } => "trichotomy",
            Self::Arrows { .. } => "arrows",
            Self::Ramsey { .. } => "ramsey",
            Self::Extremal { .. } => "extremal",
            Self::Bounds { .. } => "bounds",
        }
    }
}

/// Provenance record attached to every emitted document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    /// SHA-256 of each input, keyed by parameter name.
    pub input_digests: BTreeMap<String, String>,
    pub tool_version: String,
    pub wall_time_secs: f64,
    pub result_summary: String,
}

impl RunManifest {
    pub fn new(subcommand: &str) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            parameters: BTreeMap::new(),
            input_digests: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_secs: 0.0,
            result_summary: String::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(
            key.to_string(),
            serde_json::to_value(value).expect("parameters are plain data"),
        );
        self
    }

    pub fn input(mut self, key: &str, text: &str) -> Self {
        self.input_digests.insert(key.to_string(), digest(text));
        self
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    #[serde(flatten)]
    pub certificate: Certificate,
    pub manifest: RunManifest,
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
