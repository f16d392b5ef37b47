//! Fixed inputs shared by the benchmarks.

use semiladder_core::generate::{gnp, unit_square_centers, unit_square_graph};
use semiladder_core::Graph;

pub fn random_graph(n: usize, p: f64) -> Graph {
    gnp(n, p, 0x5eed)
}

pub fn unit_squares(n: usize, side: f64) -> Graph {
    unit_square_graph(&unit_square_centers(n, side, 0x5eed))
}
