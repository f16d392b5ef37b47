//! Deterministic graph families.
//!
//! Random families draw from `ChaCha8Rng::seed_from_u64(seed)`:
//!
//! * `gnp n p`: one `f64` in `[0, 1)` per pair `(u, v)`, `u < v`, in
//!   lexicographic order; the edge is present iff the draw is `< p`.
//! * `unit-squares n side`: for each vertex in order, `x` then `y`, each a
//!   draw in `[0, 1)` scaled by `side`. Two unit squares intersect iff both
//!   centre coordinate distances are strictly below 1.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` expects parameters: {expected}")]
    BadParams {
        family: &'static str,
        expected: &'static str,
    },
    #[error("family `{family}`: size must be at least {min}, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("side length {0} must be positive and finite")]
    BadSide(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// a_i b_j adjacent iff i <= j.
    HalfGraph(usize),
    /// a_i b_j adjacent iff i = j.
    Matching(usize),
    /// a_i b_j adjacent iff i != j.
    CoMatching(usize),
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Empty(usize),
    Gnp {
        n: usize,
        p: f64,
    },
    UnitSquares {
        n: usize,
        side: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
        })
    }
}

/// Role of a vertex in a generated bipartite pattern (index is 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Role {
    pub vertex: usize,
    pub side: Side,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl Generated {
    /// `role <v> <a|b> <index>` comment bodies.
    pub fn role_comments(&self) -> Vec<String> {
        self.roles
            .iter()
            .map(|r| format!("role {} {} {}", r.vertex + 1, r.side, r.index))
            .collect()
    }

    /// Vertices on side `side`, ordered by index.
    pub fn side(&self, side: Side) -> Vec<usize> {
        let mut v: Vec<_> = self.roles.iter().filter(|r| r.side == side).collect();
        v.sort_by_key(|r| r.index);
        v.into_iter().map(|r| r.vertex).collect()
    }
}

fn one_size(family: &'static str, params: &[&str]) -> Result<usize, GenerateError> {
    match params {
        [x] => x.parse().map_err(|_| GenerateError::BadParams {
            family,
            expected: "<size>",
        }),
        _ => Err(GenerateError::BadParams {
            family,
            expected: "<size>",
        }),
    }
}

impl Family {
    /// Parses a family name and its textual parameters.
    pub fn parse(name: &str, params: &[&str]) -> Result<Family, GenerateError> {
        let fam = match name {
            "halfgraph" => Family::HalfGraph(one_size("halfgraph", params)?),
            "matching" => Family::Matching(one_size("matching", params)?),
            "comatching" => Family::CoMatching(one_size("comatching", params)?),
            "path" => Family::Path(one_size("path", params)?),
            "cycle" => Family::Cycle(one_size("cycle", params)?),
            "clique" => Family::Clique(one_size("clique", params)?),
            "empty" => Family::Empty(one_size("empty", params)?),
            "gnp" => {
                let bad = GenerateError::BadParams {
                    family: "gnp",
                    expected: "<n> <p>",
                };
                match params {
                    [n, p] => Family::Gnp {
                        n: n.parse().map_err(|_| bad.clone())?,
                        p: p.parse().map_err(|_| bad)?,
                    },
                    _ => return Err(bad),
                }
            }
            "unit-squares" => {
                let bad = GenerateError::BadParams {
                    family: "unit-squares",
                    expected: "<n> <side-length>",
                };
                match params {
                    [n, s] => Family::UnitSquares {
                        n: n.parse().map_err(|_| bad.clone())?,
                        side: s.parse().map_err(|_| bad)?,
                    },
                    _ => return Err(bad),
                }
            }
            other => return Err(GenerateError::UnknownFamily(other.to_string())),
        };
        Ok(fam)
    }

    fn check(&self) -> Result<(), GenerateError> {
        let (family, min, got) = match *self {
            Family::HalfGraph(t) => ("halfgraph", 1, t),
            Family::Matching(t) => ("matching", 1, t),
            Family::CoMatching(t) => ("comatching", 1, t),
            Family::Path(t) => ("path", 1, t),
            Family::Cycle(n) => ("cycle", 3, n),
            Family::Clique(n) => ("clique", 1, n),
            Family::Empty(n) => ("empty", 1, n),
            Family::Gnp { n, p } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(GenerateError::BadProbability(p));
                }
                ("gnp", 1, n)
            }
            Family::UnitSquares { n, side } => {
                if !(side.is_finite() && side > 0.0) {
                    return Err(GenerateError::BadSide(side));
                }
                ("unit-squares", 1, n)
            }
        };
        if got < min {
            return Err(GenerateError::SizeTooSmall { family, min, got });
        }
        Ok(())
    }
}

/// Generates a member of `family`. Deterministic in `(family, seed)`;
/// non-random families ignore the seed.
pub fn generate(family: Family, seed: u64) -> Result<Generated, GenerateError> {
    family.check()?;
    let plain = |graph| Generated {
        graph,
        roles: Vec::new(),
    };
    Ok(match family {
        Family::HalfGraph(t) => bipartite_pattern(t, |i, j| i <= j),
        Family::Matching(t) => bipartite_pattern(t, |i, j| i == j),
        Family::CoMatching(t) => bipartite_pattern(t, |i, j| i != j),
        Family::Path(t) => plain(Graph::from_edges(t, (1..t).map(|i| (i - 1, i)))),
        Family::Cycle(n) => plain(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))),
        Family::Clique(n) => plain(Graph::complete(n)),
        Family::Empty(n) => plain(Graph::new(n)),
        Family::Gnp { n, p } => plain(gnp(n, p, seed)),
        Family::UnitSquares { n, side } => {
            plain(unit_square_graph(&unit_square_centers(n, side, seed)))
        }
    })
}

/// a_1..a_t are vertices `0..t`, b_1..b_t are `t..2t`.
fn bipartite_pattern(t: usize, pred: impl Fn(usize, usize) -> bool) -> Generated {
    let mut g = Graph::new(2 * t);
    let mut roles = Vec::with_capacity(2 * t);
    for i in 0..t {
        roles.push(Role {
            vertex: i,
            side: Side::A,
            index: i + 1,
        });
    }
    for j in 0..t {
        roles.push(Role {
            vertex: t + j,
            side: Side::B,
            index: j + 1,
        });
    }
    for i in 0..t {
        for j in 0..t {
            if pred(i, j) {
                g.add_edge(i, t + j);
            }
        }
    }
    Generated { graph: g, roles }
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn unit_square_centers(n: usize, side: f64, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x = rng.gen::<f64>() * side;
            let y = rng.gen::<f64>() * side;
            (x, y)
        })
        .collect()
}

/// Intersection graph of axis-parallel unit squares with the given centres.
pub fn unit_square_graph(centers: &[(f64, f64)]) -> Graph {
    let mut g = Graph::new(centers.len());
    for (u, &(xu, yu)) in centers.iter().enumerate() {
        for (v, &(xv, yv)) in centers.iter().enumerate().skip(u + 1) {
            if (xu - xv).abs() < 1.0 && (yu - yv).abs() < 1.0 {
                g.add_edge(u, v);
            }
        }
    }
    g
}
