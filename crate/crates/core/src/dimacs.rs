//! DIMACS `.col` instance files and best-known reference values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Raw contents of a DIMACS file, endpoints already shifted to 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDimacs {
    pub vertex_count: usize,
    /// `M` from the `p edge N M` header.
    pub declared_edges: usize,
    /// One pair per `e` line, in file order, duplicates kept.
    pub edges: Vec<(usize, usize)>,
    pub warnings: Vec<String>,
}

impl ParsedDimacs {
    pub fn into_graph(self) -> Result<Graph> {
        Graph::new(self.vertex_count, &self.edges)
    }
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let raw = field.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    raw.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} {raw:?} is not a nonnegative integer"),
    })
}

/// Parses the text of a DIMACS `.col` file.
///
/// A mismatch between the header edge count and the number of `e` lines is
/// not an error; it is reported in `warnings`. So are unknown line types.
pub fn parse_dimacs(text: &str) -> Result<ParsedDimacs> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut warnings = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            _ if tag.starts_with('c') => {}
            "p" => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                match fields.next() {
                    Some("edge") | Some("edges") => {}
                    Some("col") => warnings.push(format!("line {line}: `p col` header read as `p edge`")),
                    other => {
                        return Err(Error::Parse {
                            line,
                            message: format!("expected `p edge N M`, found format {other:?}"),
                        })
                    }
                }
                let n = parse_field(fields.next(), line, "vertex count")?;
                let m = parse_field(fields.next(), line, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::Parse {
                        line,
                        message: "edge line before problem line".into(),
                    });
                };
                let u = parse_field(fields.next(), line, "edge endpoint")?;
                let v = parse_field(fields.next(), line, "edge endpoint")?;
                for endpoint in [u, v] {
                    if endpoint == 0 || endpoint > n {
                        return Err(Error::Parse {
                            line,
                            message: format!("endpoint {endpoint} outside [1, {n}]"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop on vertex {u}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            other => warnings.push(format!("line {line}: ignored line type {other:?}")),
        }
    }

    let (vertex_count, declared_edges) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `p edge N M` problem line".into(),
    })?;
    if edges.len() != declared_edges {
        warnings.push(format!(
            "header declares {declared_edges} edges but file has {} edge lines",
            edges.len()
        ));
    }
    Ok(ParsedDimacs {
        vertex_count,
        declared_edges,
        edges,
        warnings,
    })
}

/// Writes `graph` in DIMACS `.col` form, each edge once in lexicographic order.
pub fn render_dimacs(graph: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(comment) = comment {
        for line in comment.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Best-known color counts keyed by instance name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReferenceTable(BTreeMap<String, u32>);

impl ReferenceTable {
    /// Best-known colors for the six DSJC instances used in the experiments.
    pub fn dimacs() -> Self {
        let entries = [
            ("DSJC125.1", 5),
            ("DSJC125.5", 17),
            ("DSJC125.9", 44),
            ("DSJC250.1", 8),
            ("DSJC250.5", 28),
            ("DSJC250.9", 72),
        ];
        Self(entries.iter().map(|&(n, k)| (n.to_string(), k)).collect())
    }

    /// Parses `name colors` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut fields = content.split_whitespace();
            let Some(name) = fields.next() else { continue };
            let colors = parse_field(fields.next(), line, "color count")?;
            if colors == 0 {
                return Err(Error::Parse {
                    line,
                    message: "best-known color count must be at least 1".into(),
                });
            }
            table.insert(name.to_string(), colors as u32);
        }
        Ok(Self(table))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text).map_err(|e| Error::Instance {
            path: path.to_path_buf(),
            source: Box::new(e),
        })
    }

    /// Entries of `other` replace entries of `self` with the same name.
    pub fn overridden_by(mut self, other: ReferenceTable) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn get(&self, name: &str) -> Option<u32> {
        self.0.get(name).copied()
    }

    pub fn insert(&mut self, name: impl Into<String>, colors: u32) {
        self.0.insert(name.into(), colors);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A loaded benchmark instance.
#[derive(Debug, Clone)]
pub struct InstanceRecord {
    pub name: String,
    pub graph: Graph,
    pub best_known_colors: Option<u32>,
    /// Edge count from the file header, before duplicate collapse.
    pub declared_edges: usize,
    pub warnings: Vec<String>,
}

/// Name used for reference lookups: the file name without its last extension.
pub fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_instance(path: &Path, references: Option<&ReferenceTable>) -> Result<InstanceRecord> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let with_path = |e: Error| Error::Instance {
        path: path.to_path_buf(),
        source: Box::new(e),
    };
    let parsed = parse_dimacs(&text).map_err(with_path)?;
    let declared_edges = parsed.declared_edges;
    let mut warnings = parsed.warnings.clone();
    let graph = parsed.into_graph().map_err(with_path)?;
    if graph.edge_count() != declared_edges {
        warnings.push(format!(
            "{} distinct edges after collapsing duplicates, header declares {declared_edges}",
            graph.edge_count()
        ));
    }
    for w in &warnings {
        warn!("{}: {w}", path.display());
    }
    let name = instance_name(path);
    let best_known_colors = references.and_then(|t| t.get(&name));
    Ok(InstanceRecord {
        name,
        graph,
        best_known_colors,
        declared_edges,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn minimal_triangle() {
        let parsed = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(parsed.vertex_count, 3);
        assert_eq!(parsed.edges, vec![(0, 1), (1, 2), (0, 2)]);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn comments_blank_lines_and_spacing() {
        let text = "c header comment\np   edge 4  2  \n\nc middle\ne 1   2\n   \ne 3 4   \nc trailing\n";
        let parsed = parse_dimacs(text).unwrap();
        assert_eq!(parsed.vertex_count, 4);
        assert_eq!(parsed.edges, vec![(0, 1), (2, 3)]);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_dimacs("c nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_dimacs("e 1 2\np edge 2 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_dimacs("p edge 3 1\np edge 3 1\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 x\n").is_err());
    }

    #[test]
    fn count_mismatch_is_accepted_with_warning() {
        let parsed = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(parsed.edges.len(), 2);
        assert_eq!(parsed.warnings.len(), 1);
        let g = parsed.into_graph().unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn unknown_lines_are_ignored() {
        let parsed = parse_dimacs("p edge 2 1\nn 1 5\ne 1 2\n").unwrap();
        assert_eq!(parsed.edges, vec![(0, 1)]);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn reference_table() {
        let t = ReferenceTable::dimacs();
        assert_eq!(t.get("DSJC125.5"), Some(17));
        assert_eq!(t.get("DSJC250.1"), Some(8));
        assert_eq!(t.get("toy"), None);
        let user = ReferenceTable::parse("# mine\nDSJC125.5 16\ntoy 3 # comment\n").unwrap();
        let merged = t.overridden_by(user);
        assert_eq!(merged.get("DSJC125.5"), Some(16));
        assert_eq!(merged.get("toy"), Some(3));
        assert!(ReferenceTable::parse("x 0\n").is_err());
    }

    #[test]
    fn load_instance_looks_up_by_stem() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("DSJC125.5.col");
        std::fs::write(&path, "p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        let rec = load_instance(&path, Some(&ReferenceTable::dimacs())).unwrap();
        assert_eq!(rec.name, "DSJC125.5");
        assert_eq!(rec.best_known_colors, Some(17));

        let toy = dir.path().join("toy.col");
        std::fs::write(&toy, "p edge 2 1\ne 1 2\n").unwrap();
        let rec = load_instance(&toy, None).unwrap();
        assert_eq!(rec.best_known_colors, None);
        assert_eq!(rec.graph.edge_count(), 1);

        let missing = dir.path().join("absent.col");
        match load_instance(&missing, None) {
            Err(Error::Io { path, .. }) => assert_eq!(path, missing),
            other => panic!("unexpected {other:?}"),
        }
        let bad = dir.path().join("bad.col");
        std::fs::write(&bad, "e 1 2\n").unwrap();
        assert!(matches!(load_instance(&bad, None), Err(Error::Instance { .. })));
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(n in 1usize..40, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = generate::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            let parsed = parse_dimacs(&render_dimacs(&g, Some("generated"))).unwrap();
            prop_assert!(parsed.warnings.is_empty());
            prop_assert_eq!(parsed.vertex_count, n);
            prop_assert_eq!(parsed.into_graph().unwrap(), g);
        }
    }
}
