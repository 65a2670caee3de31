//! Undirected simple graphs and vertex colorings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Color index. A palette of size `k` is exactly `0..k`.
pub type Color = u32;

/// Immutable undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from 0-indexed edge pairs.
    ///
    /// Duplicate edges (in either orientation) collapse to one. Out-of-range
    /// endpoints and self-loops are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::VertexOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    /// Graph with `vertex_count` vertices and no edges.
    pub fn edgeless(vertex_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Self::new(self.vertex_count(), &edges)
    }

    fn check_len(&self, coloring: &Coloring) -> Result<()> {
        if coloring.len() != self.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count(),
                actual: coloring.len(),
            });
        }
        Ok(())
    }

    /// True iff no edge has both endpoints in the same color.
    pub fn is_proper(&self, coloring: &Coloring) -> Result<bool> {
        Ok(self.conflict_count(coloring)? == 0)
    }

    /// Number of monochromatic edges.
    pub fn conflict_count(&self, coloring: &Coloring) -> Result<usize> {
        self.check_len(coloring)?;
        let c = coloring.as_slice();
        Ok(self.edges().filter(|&(u, v)| c[u] == c[v]).count())
    }

    /// Vertices incident to at least one monochromatic edge.
    pub fn conflicted_vertices(&self, coloring: &Coloring) -> Result<BTreeSet<usize>> {
        self.check_len(coloring)?;
        let c = coloring.as_slice();
        Ok((0..self.vertex_count())
            .filter(|&v| self.adjacency[v].iter().any(|&u| c[u] == c[v]))
            .collect())
    }
}

/// One color per vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self(colors)
    }

    pub fn uniform(vertex_count: usize, color: Color) -> Self {
        Self(vec![color; vertex_count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Color] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<Color> {
        self.0
    }

    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        self.0[v] = color;
    }

    /// Number of distinct color values present.
    pub fn color_count(&self) -> Result<usize> {
        if self.0.is_empty() {
            return Err(Error::EmptyColoring);
        }
        let mut seen: Vec<Color> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        Ok(seen.len())
    }

    /// Largest color index plus one, i.e. the smallest palette containing it.
    pub fn palette_size(&self) -> u32 {
        self.0.iter().max().map_or(0, |&c| c + 1)
    }

    /// Checks that every entry lies in `0..k`.
    pub fn check_palette(&self, k: u32) -> Result<()> {
        match self.0.iter().position(|&c| c >= k) {
            Some(vertex) => Err(Error::ColorOutOfPalette {
                vertex,
                color: self.0[vertex],
                k,
            }),
            None => Ok(()),
        }
    }
}

impl From<Vec<Color>> for Coloring {
    fn from(colors: Vec<Color>) -> Self {
        Self(colors)
    }
}

impl AsRef<[Color]> for Coloring {
    fn as_ref(&self) -> &[Color] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        let g = Graph::new(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn rejects_bad_edges() {
        match Graph::new(3, &[(0, 1), (1, 3)]) {
            Err(Error::VertexOutOfRange { u: 1, v: 3, vertex_count: 3 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2))));
    }

    #[test]
    fn properness_on_small_cases() {
        let g = triangle();
        assert!(g.is_proper(&vec![0, 1, 2].into()).unwrap());
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(!edge.is_proper(&vec![0, 0].into()).unwrap());
        assert!(matches!(
            g.is_proper(&vec![0, 1].into()),
            Err(Error::LengthMismatch { expected: 3, actual: 2 })
        ));
    }

    #[test]
    fn conflicts_on_triangle() {
        let g = triangle();
        assert_eq!(g.conflict_count(&vec![0, 0, 0].into()).unwrap(), 3);
        assert_eq!(g.conflict_count(&vec![0, 0, 1].into()).unwrap(), 1);
        let set = g.conflicted_vertices(&vec![0, 0, 1].into()).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(g.conflicted_vertices(&vec![2, 0, 1].into()).unwrap().is_empty());
        assert!(g.conflict_count(&vec![0; 4].into()).is_err());
        assert!(g.conflicted_vertices(&vec![0; 2].into()).is_err());
    }

    #[test]
    fn color_count_cases() {
        assert_eq!(Coloring::new(vec![0, 1, 2]).color_count().unwrap(), 3);
        assert_eq!(Coloring::new(vec![5, 5, 5]).color_count().unwrap(), 1);
        assert!(matches!(
            Coloring::new(vec![]).color_count(),
            Err(Error::EmptyColoring)
        ));
    }

    #[test]
    fn max_degree_cases() {
        assert_eq!(Graph::edgeless(7).max_degree(), 0);
        assert_eq!(Graph::edgeless(0).max_degree(), 0);
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
    }

    // Independent recount straight from an edge list, not from adjacency.
    fn recount(edges: &[(usize, usize)], colors: &[Color]) -> (usize, BTreeSet<usize>) {
        let mut seen = BTreeSet::new();
        let mut conflicted = BTreeSet::new();
        let mut count = 0;
        for &(u, v) in edges {
            let key = (u.min(v), u.max(v));
            if seen.insert(key) && colors[u] == colors[v] {
                count += 1;
                conflicted.insert(u);
                conflicted.insert(v);
            }
        }
        (count, conflicted)
    }

    #[test]
    fn conflicts_match_brute_force_recount() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..50 {
            let mut edges = Vec::new();
            for u in 0..20 {
                for v in 0..20 {
                    if u != v && rng.gen_bool(0.15) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(20, &edges).unwrap();
            let colors: Vec<Color> = (0..20).map(|_| rng.gen_range(0..3)).collect();
            let (count, conflicted) = recount(&edges, &colors);
            let c = Coloring::new(colors);
            assert_eq!(g.conflict_count(&c).unwrap(), count);
            assert_eq!(g.conflicted_vertices(&c).unwrap(), conflicted);
        }
    }

    fn graph_and_coloring() -> impl Strategy<Value = (Graph, Coloring, u64)> {
        (1usize..30, 0.0f64..1.0, 1u32..6, any::<u64>()).prop_map(|(n, p, k, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = generate::gnp(n, p, &mut rng);
            let c = (0..n).map(|_| rng.gen_range(0..k)).collect::<Vec<_>>();
            (g, Coloring::new(c), seed)
        })
    }

    proptest! {
        #[test]
        fn properness_conflicts_and_conflicted_set_agree((g, c, _) in graph_and_coloring()) {
            let proper = g.is_proper(&c).unwrap();
            let count = g.conflict_count(&c).unwrap();
            let set = g.conflicted_vertices(&c).unwrap();
            prop_assert_eq!(proper, count == 0);
            prop_assert_eq!(proper, set.is_empty());
            prop_assert!(count <= g.edge_count());
            prop_assert_eq!(g.conflict_count(&Coloring::uniform(g.vertex_count(), 0)).unwrap(), g.edge_count());
        }

        #[test]
        fn conflicts_invariant_under_color_renaming((g, c, seed) in graph_and_coloring()) {
            let mut perm: Vec<Color> = (0..8).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a);
            rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
            let renamed = Coloring::new(c.as_slice().iter().map(|&x| perm[x as usize] + 10).collect());
            prop_assert_eq!(g.conflict_count(&c).unwrap(), g.conflict_count(&renamed).unwrap());
        }

        #[test]
        fn construction_is_order_insensitive((g, _, seed) in graph_and_coloring()) {
            let mut edges: Vec<_> = g.edges().map(|(u, v)| if seed % 2 == 0 { (u, v) } else { (v, u) }).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rand::seq::SliceRandom::shuffle(edges.as_mut_slice(), &mut rng);
            let rebuilt = Graph::new(g.vertex_count(), &edges).unwrap();
            prop_assert_eq!(&rebuilt, &g);
            let degree_sum: usize = (0..g.vertex_count()).map(|v| rebuilt.degree(v)).sum();
            prop_assert_eq!(degree_sum, 2 * rebuilt.edge_count());
            for u in 0..rebuilt.vertex_count() {
                prop_assert!(!rebuilt.neighbors(u).contains(&u));
                for &v in rebuilt.neighbors(u) {
                    prop_assert!(rebuilt.has_edge(v, u));
                }
            }
        }
    }
}
