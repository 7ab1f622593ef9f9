//! Run manifests: the full resolved configuration next to every output, so
//! a run can be reproduced from the manifest alone. Wall-clock timings live
//! in their own section; determinism checks compare manifests with that
//! section stripped.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::CliResult;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Fully resolved configuration, defaults included.
    pub config: serde_json::Value,
    /// Seconds per phase; excluded from reproducibility comparisons.
    pub timing: BTreeMap<String, f64>,
}

impl RunManifest {
    pub fn new(command: &str, config: serde_json::Value) -> Self {
        RunManifest {
            tool: "netdist".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            config,
            timing: BTreeMap::new(),
        }
    }

    pub fn write(&self, dir: &Path) -> CliResult<()> {
        let path = dir.join("manifest.json");
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// Phase stopwatch feeding the manifest's timing section.
pub struct PhaseTimer {
    start: Instant,
}

impl PhaseTimer {
    pub fn start() -> Self {
        PhaseTimer {
            start: Instant::now(),
        }
    }

    pub fn record(self, manifest: &mut RunManifest, phase: &str) {
        manifest
            .timing
            .insert(phase.into(), self.start.elapsed().as_secs_f64());
    }
}
