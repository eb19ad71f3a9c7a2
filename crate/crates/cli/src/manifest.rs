use std::path::{Path, PathBuf};

use serde::Serialize;

use plutus_core::{PlutusConfig, SynergyMode};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Generate,
    Solve,
    Verify,
    Oracle,
    Bench,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub k: usize,
    pub m: u8,
    pub max_augmentation_iterations: Option<usize>,
    pub strict: bool,
}

impl From<&PlutusConfig> for ConfigEcho {
    fn from(cfg: &PlutusConfig) -> Self {
        ConfigEcho {
            k: cfg.k,
            m: cfg.m,
            max_augmentation_iterations: cfg.max_augmentation_iterations,
            strict: cfg.synergy_mode == SynergyMode::Strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceParams {
    pub n: Vec<usize>,
    pub radius: f64,
    pub seeds: Vec<u64>,
}

/// Everything needed to rerun the command that produced `output`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub command: Command,
    pub seed: u64,
    pub inputs: Vec<PathBuf>,
    pub output: PathBuf,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<InstanceParams>,
}

impl RunManifest {
    pub fn new(command: Command, seed: u64, inputs: Vec<PathBuf>, output: PathBuf) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION,
            command,
            seed,
            inputs,
            output,
            config: None,
            instances: None,
        }
    }
}

/// `out/result.json` keeps its manifest in `out/result.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    output.with_extension("manifest.json")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_sits_next_to_output() {
        assert_eq!(
            manifest_path(Path::new("a/r.json")),
            PathBuf::from("a/r.manifest.json")
        );
        assert_eq!(
            manifest_path(Path::new("r")),
            PathBuf::from("r.manifest.json")
        );
    }

    #[test]
    fn serialized_shape() {
        let mut m = RunManifest::new(Command::Solve, 7, vec!["g.json".into()], "r.json".into());
        m.config = Some((&PlutusConfig::new(2, 3)).into());
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"schema_version":1,"command":"solve","seed":7,"inputs":["g.json"],"output":"r.json","config":{"k":2,"m":3,"max_augmentation_iterations":null,"strict":false}}"#
        );
    }
}
