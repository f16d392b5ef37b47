//! Solver certificates, their text forms, and an independent referee.
//!
//! Text forms (1-based labels):
//!
//! ```text
//! is <s> : v1 .. vs
//! clique <s> : v1 .. vs
//! ds <s> : v1 .. vs
//! coloring <count> : c(1) .. c(n)
//! path <t> : v1 .. vt
//! pattern <matching|comatching|halfgraph> <h> : a = v1 .. vh ; b = u1 .. uh
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::pattern::{verify_pattern_witness, PatternKind, PatternViolation, PatternWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    IndependentSet,
    Clique,
    DominatingSet,
    Coloring,
    InducedPath,
    Pattern,
}

impl WitnessKind {
    pub fn tag(self) -> &'static str {
        match self {
            WitnessKind::IndependentSet => "is",
            WitnessKind::Clique => "clique",
            WitnessKind::DominatingSet => "ds",
            WitnessKind::Coloring => "coloring",
            WitnessKind::InducedPath => "path",
            WitnessKind::Pattern => "pattern",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WitnessKind {
    type Err = WitnessParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "is" => WitnessKind::IndependentSet,
            "clique" => WitnessKind::Clique,
            "ds" => WitnessKind::DominatingSet,
            "coloring" => WitnessKind::Coloring,
            "path" => WitnessKind::InducedPath,
            "pattern" => WitnessKind::Pattern,
            other => return Err(WitnessParseError::UnknownKind(other.to_string())),
        })
    }
}

/// A certificate. Vertices are 0-based; colours are arbitrary labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    IndependentSet(Vec<usize>),
    Clique(Vec<usize>),
    DominatingSet(Vec<usize>),
    /// `colors[v]` is the colour of vertex `v`.
    Coloring(Vec<u64>),
    InducedPath(Vec<usize>),
    Pattern(PatternWitness),
}

impl Witness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            Witness::IndependentSet(_) => WitnessKind::IndependentSet,
            Witness::Clique(_) => WitnessKind::Clique,
            Witness::DominatingSet(_) => WitnessKind::DominatingSet,
            Witness::Coloring(_) => WitnessKind::Coloring,
            Witness::InducedPath(_) => WitnessKind::InducedPath,
            Witness::Pattern(_) => WitnessKind::Pattern,
        }
    }
}

/// Number of distinct colours in an assignment.
pub fn distinct_colors(colors: &[u64]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

fn write_list(f: &mut fmt::Formatter<'_>, tag: &str, items: &[usize]) -> fmt::Result {
    write!(f, "{tag} {} :", items.len())?;
    for v in items {
        write!(f, " {}", v + 1)?;
    }
    Ok(())
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::IndependentSet(s) => write_list(f, "is", s),
            Witness::Clique(s) => write_list(f, "clique", s),
            Witness::DominatingSet(s) => write_list(f, "ds", s),
            Witness::InducedPath(p) => write_list(f, "path", p),
            Witness::Coloring(c) => {
                write!(f, "coloring {} :", distinct_colors(c))?;
                for col in c {
                    write!(f, " {}", col + 1)?;
                }
                Ok(())
            }
            Witness::Pattern(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessParseError {
    #[error("empty witness text")]
    Empty,
    #[error("unknown witness kind `{0}`")]
    UnknownKind(String),
    #[error("malformed {kind} witness: {message}")]
    Malformed { kind: WitnessKind, message: String },
    #[error("witness declares {declared} but lists {found}")]
    CountMismatch { declared: usize, found: usize },
}

fn malformed(kind: WitnessKind, message: impl Into<String>) -> WitnessParseError {
    WitnessParseError::Malformed {
        kind,
        message: message.into(),
    }
}

fn parse_labels(kind: WitnessKind, toks: &[&str]) -> Result<Vec<usize>, WitnessParseError> {
    toks.iter()
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(malformed(kind, format!("bad label `{t}`"))),
        })
        .collect()
}

impl FromStr for Witness {
    type Err = WitnessParseError;

    /// Parses the first non-comment line.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && *l != "c" && !l.starts_with("c "))
            .ok_or(WitnessParseError::Empty)?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let kind: WitnessKind = toks[0].parse()?;
        if kind == WitnessKind::Pattern {
            return parse_pattern(&toks);
        }
        if toks.len() < 3 || toks[2] != ":" {
            return Err(malformed(kind, "expected `<kind> <count> : ...`"));
        }
        let declared: usize = toks[1].parse().map_err(|_| malformed(kind, "bad count"))?;
        let body = &toks[3..];
        if kind == WitnessKind::Coloring {
            let colors = body
                .iter()
                .map(|t| match t.parse::<u64>() {
                    Ok(c) if c >= 1 => Ok(c - 1),
                    _ => Err(malformed(kind, format!("bad colour `{t}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let found = distinct_colors(&colors);
            if found != declared {
                return Err(WitnessParseError::CountMismatch { declared, found });
            }
            return Ok(Witness::Coloring(colors));
        }
        let items = parse_labels(kind, body)?;
        if items.len() != declared {
            return Err(WitnessParseError::CountMismatch {
                declared,
                found: items.len(),
            });
        }
        Ok(match kind {
            WitnessKind::IndependentSet => Witness::IndependentSet(items),
            WitnessKind::Clique => Witness::Clique(items),
            WitnessKind::DominatingSet => Witness::DominatingSet(items),
            WitnessKind::InducedPath => Witness::InducedPath(items),
            WitnessKind::Coloring | WitnessKind::Pattern => unreachable!("handled above"),
        })
    }
}

fn parse_pattern(toks: &[&str]) -> Result<Witness, WitnessParseError> {
    let kind = WitnessKind::Pattern;
    let bad = || malformed(kind, "expected `pattern <kind> <h> : a = .. ; b = ..`");
    if toks.len() < 6 || toks[3] != ":" || toks[4] != "a" || toks[5] != "=" {
        return Err(bad());
    }
    let pk: PatternKind = toks[1].parse().map_err(|e: String| malformed(kind, e))?;
    let h: usize = toks[2].parse().map_err(|_| bad())?;
    let rest = &toks[6..];
    let semi = rest.iter().position(|&t| t == ";").ok_or_else(bad)?;
    let a = parse_labels(kind, &rest[..semi])?;
    let tail = &rest[semi + 1..];
    if tail.len() < 2 || tail[0] != "b" || tail[1] != "=" {
        return Err(bad());
    }
    let b = parse_labels(kind, &tail[2..])?;
    for side in [&a, &b] {
        if side.len() != h {
            return Err(WitnessParseError::CountMismatch {
                declared: h,
                found: side.len(),
            });
        }
    }
    Ok(Witness::Pattern(PatternWitness { kind: pk, a, b }))
}

/// Why a witness was rejected. Labels in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("edge {0}-{1} inside the set")]
    Edge(usize, usize),
    #[error("non-edge {0}-{1} inside the clique")]
    NonEdge(usize, usize),
    #[error("vertex {0} is not dominated")]
    Undominated(usize),
    #[error("colouring assigns {got} vertices, graph has {n}")]
    PartialColoring { got: usize, n: usize },
    #[error("edge {0}-{1} is monochromatic")]
    Monochromatic(usize, usize),
    #[error("path vertices {0} and {1} are consecutive but not adjacent")]
    Broken(usize, usize),
    #[error("path vertices {0} and {1} are not consecutive but adjacent")]
    Chord(usize, usize),
    #[error("empty path")]
    EmptyPath,
    #[error("size {size} does not meet target {target}")]
    Target { size: usize, target: usize },
    #[error(transparent)]
    Pattern(#[from] PatternViolation),
}

fn check_members(g: &Graph, items: &[usize]) -> Result<(), Rejection> {
    let mut seen = vec![false; g.n()];
    for &v in items {
        if v >= g.n() {
            return Err(Rejection::OutOfRange(v + 1));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Rejection::Repeated(v + 1));
        }
    }
    Ok(())
}

/// Checks `w` against `g` from first principles.
///
/// `target` is a lower bound on the size for sets, paths and patterns, and an
/// upper bound for dominating sets and on the colour count of colourings.
pub fn verify_witness(g: &Graph, w: &Witness, target: Option<usize>) -> Result<(), Rejection> {
    let (size, upper) = match w {
        Witness::IndependentSet(s) => {
            check_members(g, s)?;
            for (i, &u) in s.iter().enumerate() {
                for &v in &s[i + 1..] {
                    if g.has_edge(u, v) {
                        return Err(Rejection::Edge(u.min(v) + 1, u.max(v) + 1));
                    }
                }
            }
            (s.len(), false)
        }
        Witness::Clique(s) => {
            check_members(g, s)?;
            for (i, &u) in s.iter().enumerate() {
                for &v in &s[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Err(Rejection::NonEdge(u.min(v) + 1, u.max(v) + 1));
                    }
                }
            }
            (s.len(), false)
        }
        Witness::DominatingSet(s) => {
            check_members(g, s)?;
            let mut covered = vec![false; g.n()];
            for &v in s {
                covered[v] = true;
                for u in g.neighbors(v).iter() {
                    covered[u] = true;
                }
            }
            if let Some(v) = covered.iter().position(|c| !c) {
                return Err(Rejection::Undominated(v + 1));
            }
            (s.len(), true)
        }
        Witness::Coloring(c) => {
            if c.len() != g.n() {
                return Err(Rejection::PartialColoring {
                    got: c.len(),
                    n: g.n(),
                });
            }
            if let Some((u, v)) = g.edges().find(|&(u, v)| c[u] == c[v]) {
                return Err(Rejection::Monochromatic(u + 1, v + 1));
            }
            (distinct_colors(c), true)
        }
        Witness::InducedPath(p) => {
            if p.is_empty() {
                return Err(Rejection::EmptyPath);
            }
            check_members(g, p)?;
            for (i, &u) in p.iter().enumerate() {
                for (j, &v) in p.iter().enumerate().skip(i + 1) {
                    let adjacent = g.has_edge(u, v);
                    if j == i + 1 && !adjacent {
                        return Err(Rejection::Broken(u + 1, v + 1));
                    }
                    if j > i + 1 && adjacent {
                        return Err(Rejection::Chord(u + 1, v + 1));
                    }
                }
            }
            (p.len(), false)
        }
        Witness::Pattern(p) => {
            verify_pattern_witness(g, p)?;
            (p.order(), false)
        }
    };
    if let Some(target) = target {
        let ok = if upper {
            size <= target
        } else {
            size >= target
        };
        if !ok {
            return Err(Rejection::Target { size, target });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)))
    }

    #[test]
    fn referee_examples() {
        let g = c5();
        assert_eq!(
            verify_witness(&g, &Witness::IndependentSet(vec![0, 2]), None),
            Ok(())
        );
        assert_eq!(
            verify_witness(&g, &Witness::IndependentSet(vec![0, 1]), None),
            Err(Rejection::Edge(1, 2))
        );
        assert_eq!(
            verify_witness(&g, &Witness::DominatingSet(vec![0, 2]), None),
            Ok(())
        );
        assert_eq!(
            verify_witness(&g, &Witness::DominatingSet(vec![0]), None),
            Err(Rejection::Undominated(3))
        );
        assert_eq!(
            verify_witness(&g, &Witness::IndependentSet(vec![0, 2]), Some(3)),
            Err(Rejection::Target { size: 2, target: 3 })
        );
        assert_eq!(
            verify_witness(&g, &Witness::Coloring(vec![0, 1, 0, 1, 2]), Some(3)),
            Ok(())
        );
        assert_eq!(
            verify_witness(&g, &Witness::Coloring(vec![0, 1, 0, 1, 0]), None),
            Err(Rejection::Monochromatic(1, 5))
        );
        assert_eq!(
            verify_witness(&g, &Witness::InducedPath(vec![0, 1, 2, 3]), None),
            Ok(())
        );
        assert_eq!(
            verify_witness(&g, &Witness::InducedPath(vec![0, 1, 2, 3, 4]), None),
            Err(Rejection::Chord(1, 5))
        );
        assert_eq!(
            verify_witness(&g, &Witness::Clique(vec![0, 2]), None),
            Err(Rejection::NonEdge(1, 3))
        );
        assert_eq!(
            verify_witness(&g, &Witness::IndependentSet(vec![0, 7]), None),
            Err(Rejection::OutOfRange(8))
        );
    }

    #[test]
    fn text_forms_round_trip() {
        let cases = [
            "is 2 : 1 3",
            "clique 2 : 1 2",
            "ds 2 : 1 3",
            "coloring 3 : 1 2 1 2 3",
            "path 4 : 1 2 3 4",
            "pattern halfgraph 2 : a = 1 4 ; b = 2 5",
        ];
        for text in cases {
            let w: Witness = text.parse().unwrap();
            assert_eq!(w.to_string(), text);
        }
    }

    #[test]
    fn malformed_text() {
        assert!(matches!(
            "is 3 : 1 2".parse::<Witness>(),
            Err(WitnessParseError::CountMismatch {
                declared: 3,
                found: 2
            })
        ));
        assert!(matches!(
            "tree 1 : 1".parse::<Witness>(),
            Err(WitnessParseError::UnknownKind(_))
        ));
        assert!(matches!(
            "is 1 : 0".parse::<Witness>(),
            Err(WitnessParseError::Malformed { .. })
        ));
        assert!(matches!(
            "pattern halfgraph 2 : a = 1 ; b = 2 5".parse::<Witness>(),
            Err(WitnessParseError::CountMismatch { .. })
        ));
    }
}
