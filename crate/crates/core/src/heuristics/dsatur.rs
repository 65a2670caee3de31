use crate::graph::{Color, Coloring, Graph};

/// Brélaz's DSatur.
///
/// Picks the uncolored vertex with the most distinct neighbor colors, breaking
/// ties by degree in the uncolored subgraph and then by lowest index, and gives
/// it the smallest color no neighbor uses. The colors used always form a prefix
/// `0..k` of the palette.
pub fn dsatur(graph: &Graph) -> Coloring {
    let n = graph.vertex_count();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    // neighbor_colors[v][c]: number of colored neighbors of v with color c.
    let mut neighbor_colors: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    let mut uncolored_degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by(|&a, &b| {
                saturation[a]
                    .cmp(&saturation[b])
                    .then(uncolored_degree[a].cmp(&uncolored_degree[b]))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");

        let used = &neighbor_colors[v];
        let color = (0..)
            .find(|&c| used.get(c as usize).is_none_or(|&count| count == 0))
            .expect("some color is free");
        colors[v] = Some(color);

        for &u in graph.neighbors(v) {
            uncolored_degree[u] -= 1;
            if colors[u].is_some() {
                continue;
            }
            let counts = &mut neighbor_colors[u];
            if counts.len() <= color as usize {
                counts.resize(color as usize + 1, 0);
            }
            if counts[color as usize] == 0 {
                saturation[u] += 1;
            }
            counts[color as usize] += 1;
        }
    }

    Coloring::new(colors.into_iter().map(|c| c.expect("all colored")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::heuristics::chromatic_number_exact;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn clique_and_odd_cycle() {
        let k4 = generate::complete(4);
        let c = dsatur(&k4);
        assert!(k4.is_proper(&c).unwrap());
        assert_eq!(c.color_count().unwrap(), 4);

        let c5 = generate::cycle(5);
        let c = dsatur(&c5);
        assert!(c5.is_proper(&c).unwrap());
        assert_eq!(c.color_count().unwrap(), 3);
    }

    #[test]
    fn empty_and_edgeless() {
        assert!(dsatur(&Graph::edgeless(0)).is_empty());
        let c = dsatur(&Graph::edgeless(6));
        assert_eq!(c.as_slice(), &[0; 6]);
    }

    #[test]
    fn first_pick_is_max_degree_then_lowest_index() {
        // Star centered at 2 plus a pendant edge 3-4.
        let g = Graph::new(5, &[(2, 0), (2, 1), (2, 3), (3, 4)]).unwrap();
        let c = dsatur(&g);
        assert_eq!(c.get(2), 0);
        assert!(g.is_proper(&c).unwrap());
    }

    #[test]
    fn bipartite_uses_two_colors_and_matches_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = generate::bipartite(8, 8, 0.5, &mut rng);
            if g.edge_count() == 0 {
                continue;
            }
            let exact = chromatic_number_exact(&g, 16).unwrap();
            assert_eq!(exact.chromatic_number, 2);
            let c = dsatur(&g);
            assert!(g.is_proper(&c).unwrap());
            assert_eq!(c.color_count().unwrap(), 2);
        }
    }

    proptest! {
        #[test]
        fn proper_within_greedy_bound_and_deterministic(n in 0usize..60, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = generate::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            let c = dsatur(&g);
            prop_assert!(g.is_proper(&c).unwrap());
            if n > 0 {
                prop_assert!(c.color_count().unwrap() <= g.max_degree() + 1);
                prop_assert_eq!(c.palette_size() as usize, c.color_count().unwrap());
            }
            prop_assert_eq!(dsatur(&g), c);
        }

        #[test]
        fn never_beats_exact(n in 1usize..12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = generate::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            let exact = chromatic_number_exact(&g, 16).unwrap();
            prop_assert!(dsatur(&g).color_count().unwrap() >= exact.chromatic_number as usize);
        }
    }
}
