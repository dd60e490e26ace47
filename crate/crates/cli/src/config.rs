//! Serialized run configuration, echoed into every artifact.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{Map, Value};

/// Everything needed to reproduce a run.
///
/// The worker count is deliberately absent: results do not depend on it, and
/// leaving it out keeps artifacts byte-identical across thread counts.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub params: Map<String, Value>,
    pub seed: u64,
    pub solver_limit: usize,
    pub out_dir: PathBuf,
}

impl RunConfig {
    pub fn new(command: impl Into<String>, seed: u64, solver_limit: usize, out_dir: PathBuf) -> Self {
        RunConfig { command: command.into(), params: Map::new(), seed, solver_limit, out_dir }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("parameters serialize");
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Comment lines for artifact headers, without the comment marker.
    pub fn header(&self) -> Vec<String> {
        vec![format!("twglue {}", env!("CARGO_PKG_VERSION")), format!("config {}", self.to_json())]
    }

    pub fn path(&self, name: impl AsRef<Path>) -> PathBuf {
        self.out_dir.join(name)
    }

    /// Creates the output directory and writes `run_config.json` into it.
    pub fn persist(&self) -> Result<()> {
        fs::create_dir_all(&self.out_dir)
            .with_context(|| format!("cannot create output directory {}", self.out_dir.display()))?;
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        write(&self.path("run_config.json"), &text)
    }
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_is_stable() {
        let mut c = RunConfig::new("lab badic", 7, 20, PathBuf::from("out"));
        c.param("j", 4).param("i", 3);
        let h = c.header();
        assert_eq!(h.len(), 2);
        assert_eq!(
            h[1],
            r#"config {"command":"lab badic","params":{"i":3,"j":4},"seed":7,"solver_limit":20,"out_dir":"out"}"#
        );
    }
}
