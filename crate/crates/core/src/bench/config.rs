//! Sweep configuration files.
//!
//! A config is a TOML table:
//!
//! ```toml
//! family = "random-regular:3"   # family template, sized by each entry of `sizes`
//! sizes = [1024, 4096]
//! t = [2, 3, 5]
//! algo = "descent"              # cover2 | sep2 | sept | descent
//! seeds = 100                   # seeds master_seed .. master_seed + seeds
//! master_seed = 0
//! mode = "heuristic"            # separator mode: exact | heuristic
//! function = "random"           # random | staircase | staircase:V
//! s = 1                         # optional; defaults to the family's known value, else n
//! output = "sweep.csv"          # optional
//! ```
//!
//! Family templates take the size as their leading parameter: `path`,
//! `cycle`, `random-tree`, `star` and `complete` use it as the vertex count,
//! `random-regular:D` as the vertex count of a D-regular graph, `grid` and
//! `grid:D` as the side length of a 2-D (or D-dimensional) lattice,
//! `hypercube` as the dimension and `binary-tree` as the depth.

use std::path::PathBuf;

use serde::Deserialize;

use crate::algorithms::Algorithm;
use crate::bench::FunctionSpec;
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::separator::SeparatorMode;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub family: String,
    pub sizes: Vec<usize>,
    pub t: Vec<usize>,
    pub algo: Algorithm,
    pub seeds: u64,
    pub master_seed: u64,
    pub mode: SeparatorMode,
    pub function: String,
    pub s: Option<usize>,
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            family: "random-tree".into(),
            sizes: Vec::new(),
            t: vec![2],
            algo: Algorithm::Sept,
            seeds: 1,
            master_seed: 0,
            mode: SeparatorMode::Heuristic,
            function: "random".into(),
            s: None,
            output: None,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.function_spec()?;
        if let Some(&t) = self.t.iter().find(|&&t| t < 2) {
            return Err(Error::InvalidParameter(format!("round counts must be at least 2, got {t}")));
        }
        for &size in &self.sizes {
            family_for(&self.family, size)?;
        }
        Ok(())
    }

    pub fn function_spec(&self) -> Result<FunctionSpec> {
        self.function.parse()
    }

    pub fn families(&self) -> Result<Vec<Family>> {
        self.sizes.iter().map(|&size| family_for(&self.family, size)).collect()
    }
}

/// Instantiates a family template at `size`.
pub fn family_for(template: &str, size: usize) -> Result<Family> {
    let (name, param) = match template.split_once(':') {
        Some((name, param)) => (name, Some(param)),
        None => (template, None),
    };
    let spec = match (name, param) {
        ("grid", dims) => {
            let d: usize = dims.unwrap_or("2").parse().map_err(|_| Error::Parse(format!("bad grid template {template:?}")))?;
            format!("grid:{}", vec![size.to_string(); d].join("x"))
        }
        ("random-regular", Some(degree)) => format!("random-regular:{size}:{degree}"),
        (_, None) => format!("{name}:{size}"),
        _ => return Err(Error::Parse(format!("unsupported family template {template:?}"))),
    };
    spec.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_full_config() {
        let cfg = ExperimentConfig::from_toml(
            r#"
            family = "random-regular:3"
            sizes = [16, 32]
            t = [2, 3]
            algo = "descent"
            seeds = 4
            function = "staircase"
            output = "x.csv"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.algo, Algorithm::Descent);
        assert_eq!(cfg.families().unwrap()[1], Family::RandomRegular { n: 32, degree: 3 });
        assert_eq!(cfg.function_spec().unwrap(), FunctionSpec::Staircase(None));
        assert_eq!(cfg.output, Some(PathBuf::from("x.csv")));
    }

    #[test]
    fn defaults_and_errors() {
        let cfg = ExperimentConfig::from_toml("").unwrap();
        assert!(cfg.sizes.is_empty());
        assert!(ExperimentConfig::from_toml("bogus = 1").is_err());
        assert!(ExperimentConfig::from_toml("t = [1]").is_err());
        assert!(ExperimentConfig::from_toml("family = \"nope\"\nsizes = [3]").is_err());
    }

    #[test]
    fn templates() {
        assert_eq!(family_for("grid", 4).unwrap(), Family::Grid(vec![4, 4]));
        assert_eq!(family_for("grid:3", 2).unwrap(), Family::Grid(vec![2, 2, 2]));
        assert_eq!(family_for("cycle", 101).unwrap(), Family::Cycle(101));
        assert_eq!(family_for("binary-tree", 5).unwrap(), Family::CompleteBinaryTree(5));
        assert!(family_for("path:3", 4).is_err());
    }
}
