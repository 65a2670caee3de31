use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::search::{Method, SolverParams};

const DEFAULT_SEEDS: [u64; 3] = [1, 2, 3];

/// Benchmark plan, read from a flat TOML file:
///
/// ```toml
/// instances = ["DSJC125.1.col", "DSJC125.5.col"]
/// methods = ["hc", "sa", "ts", "ils"]
/// seeds = [1, 2, 3]          # default [1, 2, 3]
/// budget = 600               # seconds per cell, default 600
/// references = "best.txt"    # optional best-known overrides
/// sa_iterations = 20000      # any solver parameter by name
/// ```
///
/// Relative paths resolve against the manifest's directory.
#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub instances: Vec<PathBuf>,
    pub methods: Vec<Method>,
    pub seeds: Vec<u64>,
    pub references: Option<PathBuf>,
    /// Parameter overrides; `wall_budget_seconds` holds the per-cell budget.
    pub params: SolverParams,
}

fn take<T: serde::de::DeserializeOwned>(table: &mut toml::Table, key: &str) -> Result<Option<T>> {
    table
        .remove(key)
        .map(|value| {
            value
                .try_into()
                .map_err(|e| Error::Manifest(format!("`{key}`: {e}")))
        })
        .transpose()
}

impl Manifest {
    pub fn parse(text: &str, base_dir: &Path) -> Result<Self> {
        let mut table: toml::Table = text
            .parse()
            .map_err(|e: toml::de::Error| Error::Manifest(e.to_string()))?;
        let resolve = |p: PathBuf| if p.is_absolute() { p } else { base_dir.join(p) };

        let instances: Vec<PathBuf> = take(&mut table, "instances")?
            .ok_or_else(|| Error::Manifest("missing `instances`".into()))?;
        let methods: Vec<Method> = take(&mut table, "methods")?
            .ok_or_else(|| Error::Manifest("missing `methods`".into()))?;
        let seeds: Vec<u64> = take(&mut table, "seeds")?.unwrap_or_else(|| DEFAULT_SEEDS.to_vec());
        let budget: Option<f64> = take(&mut table, "budget")?;
        let references: Option<PathBuf> = take(&mut table, "references")?;
        if table.contains_key("method") {
            return Err(Error::Manifest("use `methods` to list methods".into()));
        }
        if table.contains_key("wall_budget_seconds") && budget.is_some() {
            return Err(Error::Manifest(
                "give either `budget` or `wall_budget_seconds`, not both".into(),
            ));
        }
        let mut params: SolverParams = toml::Value::Table(table)
            .try_into()
            .map_err(|e| Error::Manifest(e.to_string()))?;
        if let Some(budget) = budget {
            params.wall_budget_seconds = budget;
        }
        params.validate()?;

        if instances.is_empty() || methods.is_empty() || seeds.is_empty() {
            return Err(Error::Manifest(
                "need at least one instance, one method, and one seed".into(),
            ));
        }
        Ok(Self {
            instances: instances.into_iter().map(resolve).collect(),
            methods,
            seeds,
            references: references.map(resolve),
            params,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::parse(&text, base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_manifest() {
        let m = Manifest::parse(
            r#"
            instances = ["a.col", "/abs/b.col"]
            methods = ["hc", "SA", "ils"]
            seeds = [4, 5]
            budget = 30
            references = "refs.txt"
            sa_iterations = 20000
            ils_total_seconds = 5
            ils_inner_seconds = 0.5
            "#,
            Path::new("/data"),
        )
        .unwrap();
        assert_eq!(m.instances, vec![PathBuf::from("/data/a.col"), PathBuf::from("/abs/b.col")]);
        assert_eq!(m.methods, vec![Method::Hc, Method::Sa, Method::Ils]);
        assert_eq!(m.seeds, vec![4, 5]);
        assert_eq!(m.references, Some(PathBuf::from("/data/refs.txt")));
        assert_eq!(m.params.wall_budget_seconds, 30.0);
        assert_eq!(m.params.sa_iterations, 20000);
        assert_eq!(m.params.ils_total_seconds, 5.0);
        assert_eq!(m.params.hc_iterations, 5000);
    }

    #[test]
    fn defaults_and_errors() {
        let m = Manifest::parse("instances = ['x.col']\nmethods = ['ts']\n", Path::new(".")).unwrap();
        assert_eq!(m.seeds, vec![1, 2, 3]);
        assert_eq!(m.params.wall_budget_seconds, 600.0);

        for bad in [
            "methods = ['ts']",
            "instances = ['x.col']",
            "instances = ['x.col']\nmethods = ['ga']",
            "instances = ['x.col']\nmethods = ['ts']\nts_tabu_lenght = 3",
            "instances = ['x.col']\nmethods = ['ts']\nts_iterations = 0",
            "instances = []\nmethods = ['ts']",
            "instances = ['x.col']\nmethods = ['ts']\nmethod = 'hc'",
            "not toml at all [",
        ] {
            assert!(Manifest::parse(bad, Path::new(".")).is_err(), "{bad}");
        }
    }
}
