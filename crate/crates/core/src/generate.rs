//! Small graph families and random generators used by tests and benchmarks.

use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi G(n, p): each of the n(n-1)/2 pairs is an edge with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// Random bipartite graph: vertices `0..left` on one side, `left..left+right`
/// on the other, each cross pair an edge with probability `p`.
pub fn bipartite<R: Rng + ?Sized>(left: usize, right: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..(left + right) {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(left + right, &edges).expect("generated edges are in range")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("generated edges are in range")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).expect("generated edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(5).edge_count(), 5);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
