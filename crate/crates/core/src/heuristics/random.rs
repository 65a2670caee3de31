use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

use super::RngSeed;

/// Independent uniform colors from `0..k`, drawn in vertex index order.
pub fn random_coloring(graph: &Graph, k: u32, seed: RngSeed) -> Result<Coloring> {
    random_coloring_with(graph, k, &mut seed.rng())
}

pub(crate) fn random_coloring_with<R: Rng + ?Sized>(
    graph: &Graph,
    k: u32,
    rng: &mut R,
) -> Result<Coloring> {
    if k == 0 {
        return Err(Error::Palette {
            k,
            reason: "need at least one color",
        });
    }
    let colors: Vec<Color> = (0..graph.vertex_count()).map(|_| rng.gen_range(0..k)).collect();
    Ok(Coloring::new(colors))
}
