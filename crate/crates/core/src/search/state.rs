use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

use super::memory::{fingerprint, fingerprint_iter};

/// Recolor `vertex` from `from` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Move {
    pub vertex: usize,
    pub from: Color,
    pub to: Color,
}

const ABSENT: usize = usize::MAX;

/// Working coloring with incrementally maintained conflict bookkeeping.
#[derive(Debug, Clone)]
pub(crate) struct SearchState {
    colors: Vec<Color>,
    k: u32,
    /// Same-colored neighbors per vertex.
    vertex_conflicts: Vec<u32>,
    /// Vertices with at least one conflict, in arbitrary order.
    conflicted: Vec<usize>,
    /// Index of each vertex in `conflicted`, or `ABSENT`.
    position: Vec<usize>,
    conflicts: usize,
}

impl SearchState {
    pub fn new(graph: &Graph, coloring: &Coloring, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::Palette {
                k,
                reason: "local search needs at least two colors",
            });
        }
        if coloring.len() != graph.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: graph.vertex_count(),
                actual: coloring.len(),
            });
        }
        coloring.check_palette(k)?;
        let colors = coloring.as_slice().to_vec();
        let n = colors.len();
        let mut vertex_conflicts = vec![0u32; n];
        let mut conflicts = 0;
        for (u, v) in graph.edges() {
            if colors[u] == colors[v] {
                vertex_conflicts[u] += 1;
                vertex_conflicts[v] += 1;
                conflicts += 1;
            }
        }
        let mut conflicted = Vec::new();
        let mut position = vec![ABSENT; n];
        for v in 0..n {
            if vertex_conflicts[v] > 0 {
                position[v] = conflicted.len();
                conflicted.push(v);
            }
        }
        Ok(Self {
            colors,
            k,
            vertex_conflicts,
            conflicted,
            position,
            conflicts,
        })
    }

    pub fn conflicts(&self) -> usize {
        self.conflicts
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.colors.clone())
    }

    pub fn fingerprint(&self) -> u64 {
        fingerprint(&self.colors)
    }

    /// Fingerprint of the coloring `mv` would produce.
    pub fn fingerprint_after(&self, mv: Move) -> u64 {
        fingerprint_iter(
            self.colors
                .iter()
                .enumerate()
                .map(|(v, &c)| if v == mv.vertex { mv.to } else { c }),
        )
    }

    #[cfg(test)]
    pub fn conflicted(&self) -> &[usize] {
        &self.conflicted
    }

    /// The tweak move: a uniformly chosen conflicted vertex (any vertex when
    /// there are none) gets a uniformly chosen different color.
    pub fn propose<R: Rng + ?Sized>(&self, rng: &mut R) -> Move {
        let vertex = if self.conflicted.is_empty() {
            rng.gen_range(0..self.colors.len())
        } else {
            self.conflicted[rng.gen_range(0..self.conflicted.len())]
        };
        self.recolor_move(vertex, rng)
    }

    /// `vertex` gets a uniform color different from its current one.
    pub fn recolor_move<R: Rng + ?Sized>(&self, vertex: usize, rng: &mut R) -> Move {
        let from = self.colors[vertex];
        let draw = rng.gen_range(0..self.k - 1);
        let to = if draw >= from { draw + 1 } else { draw };
        Move { vertex, from, to }
    }

    /// Change in total conflicts if `mv` were applied.
    pub fn delta(&self, graph: &Graph, mv: Move) -> isize {
        let mut delta = 0isize;
        for &u in graph.neighbors(mv.vertex) {
            let c = self.colors[u];
            if c == mv.to {
                delta += 1;
            } else if c == mv.from {
                delta -= 1;
            }
        }
        delta
    }

    pub fn apply(&mut self, graph: &Graph, mv: Move) {
        debug_assert_eq!(self.colors[mv.vertex], mv.from);
        let v = mv.vertex;
        for &u in graph.neighbors(v) {
            let c = self.colors[u];
            if c == mv.from {
                self.vertex_conflicts[u] -= 1;
                self.vertex_conflicts[v] -= 1;
                self.conflicts -= 1;
                self.refresh(u);
            } else if c == mv.to {
                self.vertex_conflicts[u] += 1;
                self.vertex_conflicts[v] += 1;
                self.conflicts += 1;
                self.refresh(u);
            }
        }
        self.colors[v] = mv.to;
        self.refresh(v);
    }

    fn refresh(&mut self, v: usize) {
        let listed = self.position[v] != ABSENT;
        let conflicted = self.vertex_conflicts[v] > 0;
        if conflicted && !listed {
            self.position[v] = self.conflicted.len();
            self.conflicted.push(v);
        } else if !conflicted && listed {
            let slot = self.position[v];
            self.conflicted.swap_remove(slot);
            if let Some(&moved) = self.conflicted.get(slot) {
                self.position[moved] = slot;
            }
            self.position[v] = ABSENT;
        }
    }
}

/// One tweak of `coloring` within palette `0..k`: a copy differing at exactly
/// one vertex. The vertex is uniform over the conflicted vertices (over all
/// vertices if the coloring is proper) and its new color is uniform over the
/// other `k - 1` colors.
pub fn tweak<R: Rng + ?Sized>(
    graph: &Graph,
    coloring: &Coloring,
    k: u32,
    rng: &mut R,
) -> Result<Coloring> {
    if graph.is_empty() {
        return Err(Error::Params("cannot tweak a coloring of an empty graph".into()));
    }
    let state = SearchState::new(graph, coloring, k)?;
    let mv = state.propose(rng);
    let mut out = coloring.clone();
    out.set(mv.vertex, mv.to);
    Ok(out)
}
