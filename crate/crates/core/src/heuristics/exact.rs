use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

pub const DEFAULT_EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactColoring {
    pub chromatic_number: u32,
    pub witness: Coloring,
}

/// Smallest `k` admitting a proper `k`-coloring, by backtracking over
/// `k = 1, 2, ...`. Refuses graphs with more than `limit` vertices.
pub fn chromatic_number_exact(graph: &Graph, limit: usize) -> Result<ExactColoring> {
    let n = graph.vertex_count();
    if n > limit {
        return Err(Error::TooLarge {
            vertex_count: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(ExactColoring {
            chromatic_number: 0,
            witness: Coloring::new(Vec::new()),
        });
    }
    for k in 1..=n as u32 {
        let mut colors: Vec<Option<Color>> = vec![None; n];
        if extend(graph, k, 0, 0, &mut colors) {
            let witness = Coloring::new(colors.into_iter().map(Option::unwrap).collect());
            return Ok(ExactColoring {
                chromatic_number: k,
                witness,
            });
        }
    }
    unreachable!("n colors always suffice")
}

// Colors vertex `v` onward; `used` is the number of colors opened so far.
// A vertex may only open the next unused color, which removes palette symmetry.
fn extend(graph: &Graph, k: u32, v: usize, used: u32, colors: &mut [Option<Color>]) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        let clash = graph.neighbors(v).iter().any(|&u| colors[u] == Some(c));
        if clash {
            continue;
        }
        colors[v] = Some(c);
        if extend(graph, k, v + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = None;
    false
}
