//! Semi-induced matchings, co-matchings and half-graphs, and small
//! induced-subgraph containment.
//!
//! A bipartite pattern of order `h` appears semi-induced on disjoint tuples
//! `a = (a_1..a_h)`, `b = (b_1..b_h)` when `a_i b_j` is an edge exactly when
//! the kind's predicate holds. Edges inside `a` or inside `b` are free.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `a_i b_j` adjacent iff `i = j`.
    Matching,
    /// `a_i b_j` adjacent iff `i != j`.
    CoMatching,
    /// `a_i b_j` adjacent iff `i <= j`.
    HalfGraph,
}

impl PatternKind {
    pub const ALL: [PatternKind; 3] = [
        PatternKind::Matching,
        PatternKind::CoMatching,
        PatternKind::HalfGraph,
    ];

    /// Whether `a_i b_j` must be an edge (indices from either base).
    #[inline]
    pub fn predicate(self, i: usize, j: usize) -> bool {
        match self {
            PatternKind::Matching => i == j,
            PatternKind::CoMatching => i != j,
            PatternKind::HalfGraph => i <= j,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Matching => "matching",
            PatternKind::CoMatching => "comatching",
            PatternKind::HalfGraph => "halfgraph",
        }
    }

    // Adjacency of a later a-vertex to an earlier b-vertex, and of an earlier
    // a-vertex to a later b-vertex. Neither depends on the exact indices.
    fn later_a_to_earlier_b(self) -> bool {
        self.predicate(1, 0)
    }

    fn earlier_a_to_later_b(self) -> bool {
        self.predicate(0, 1)
    }

    fn diagonal(self) -> bool {
        self.predicate(0, 0)
    }

    /// Matchings and co-matchings are invariant under permuting the pairs.
    fn pairs_commute(self) -> bool {
        !matches!(self, PatternKind::HalfGraph)
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matching" => Ok(PatternKind::Matching),
            "comatching" => Ok(PatternKind::CoMatching),
            "halfgraph" => Ok(PatternKind::HalfGraph),
            other => Err(format!("unknown pattern kind `{other}`")),
        }
    }
}

/// Two disjoint vertex tuples witnessing a semi-induced pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl PatternWitness {
    pub fn order(&self) -> usize {
        self.a.len()
    }
}

impl fmt::Display for PatternWitness {
    /// `pattern <kind> <h> : a = v1 .. vh ; b = u1 .. uh` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pattern {} {} : a =", self.kind, self.order())?;
        for v in &self.a {
            write!(f, " {}", v + 1)?;
        }
        write!(f, " ; b =")?;
        for v in &self.b {
            write!(f, " {}", v + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternViolation {
    #[error("sides have different lengths {a} and {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("empty witness")]
    Empty,
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
    #[error("vertex {0} used twice")]
    Repeated(usize),
    #[error("pair a_{i} b_{j} should {} an edge", if *.expected { "be" } else { "not be" })]
    WrongAdjacency { i: usize, j: usize, expected: bool },
}

/// Checks every invariant of `w` against `g` directly, without search.
pub fn verify_pattern_witness(g: &Graph, w: &PatternWitness) -> Result<(), PatternViolation> {
    if w.a.len() != w.b.len() {
        return Err(PatternViolation::LengthMismatch {
            a: w.a.len(),
            b: w.b.len(),
        });
    }
    if w.a.is_empty() {
        return Err(PatternViolation::Empty);
    }
    let mut seen = vec![false; g.n()];
    for &v in w.a.iter().chain(&w.b) {
        if v >= g.n() {
            return Err(PatternViolation::OutOfRange(v + 1));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(PatternViolation::Repeated(v + 1));
        }
    }
    for (i, &a) in w.a.iter().enumerate() {
        for (j, &b) in w.b.iter().enumerate() {
            let expected = w.kind.predicate(i, j);
            if g.has_edge(a, b) != expected {
                return Err(PatternViolation::WrongAdjacency {
                    i: i + 1,
                    j: j + 1,
                    expected,
                });
            }
        }
    }
    Ok(())
}

struct Search<'g> {
    g: &'g Graph,
    non_adj: Vec<VertexSet>,
    kind: PatternKind,
    h: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl Search<'_> {
    fn mask(&self, v: usize, adjacent: bool) -> &VertexSet {
        if adjacent {
            self.g.neighbors(v)
        } else {
            &self.non_adj[v]
        }
    }

    /// `future_a`/`future_b`: vertices compatible with every chosen pair as a
    /// later a-vertex / b-vertex. `used` holds chosen vertices.
    fn extend(&mut self, future_a: &VertexSet, future_b: &VertexSet, used: &VertexSet) -> bool {
        let i = self.a.len();
        if i == self.h {
            return true;
        }
        let remaining = self.h - i;
        let mut cand_a = future_a.difference(used);
        if self.kind.pairs_commute() {
            if let Some(&last) = self.a.last() {
                for v in 0..=last {
                    cand_a.remove(v);
                }
            }
        }
        if cand_a.len() < remaining {
            return false;
        }
        for a in cand_a.iter() {
            let mut cand_b = future_b.difference(used);
            cand_b.intersect_with(self.mask(a, self.kind.diagonal()));
            cand_b.remove(a);
            if cand_b.is_empty() {
                continue;
            }
            let mut next_b = future_b.clone();
            next_b.intersect_with(self.mask(a, self.kind.earlier_a_to_later_b()));
            let mut used_a = used.clone();
            used_a.insert(a);
            for b in cand_b.iter() {
                let mut next_a = future_a.clone();
                next_a.intersect_with(self.mask(b, self.kind.later_a_to_earlier_b()));
                let mut next_used = used_a.clone();
                next_used.insert(b);
                let left = remaining - 1;
                if left > 0 {
                    let fa = next_a.difference(&next_used);
                    let fb = next_b.difference(&next_used);
                    if fa.len() < left || fb.len() < left || fa.union(&fb).len() < 2 * left {
                        continue;
                    }
                }
                self.a.push(a);
                self.b.push(b);
                if self.extend(&next_a, &next_b, &next_used) {
                    return true;
                }
                self.a.pop();
                self.b.pop();
            }
        }
        false
    }
}

/// Finds a semi-induced pattern of order exactly `h`, or proves there is none.
///
/// The search is complete, so `None` certifies absence. Candidates are tried
/// in ascending label order, making the returned witness deterministic.
pub fn find_semi_induced(g: &Graph, kind: PatternKind, h: usize) -> Option<PatternWitness> {
    assert!(h >= 1, "pattern order must be positive");
    if 2 * h > g.n() {
        return None;
    }
    let non_adj = (0..g.n())
        .map(|v| {
            let mut s = g.neighbors(v).complement();
            s.remove(v);
            s
        })
        .collect();
    let mut search = Search {
        g,
        non_adj,
        kind,
        h,
        a: Vec::with_capacity(h),
        b: Vec::with_capacity(h),
    };
    let all = g.vertices();
    if search.extend(&all, &all, &VertexSet::new(g.n())) {
        let w = PatternWitness {
            kind,
            a: search.a,
            b: search.b,
        };
        debug_assert_eq!(verify_pattern_witness(g, &w), Ok(()));
        Some(w)
    } else {
        None
    }
}

/// Result of an index computation bounded by a cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexValue {
    /// Exact value; the witness has that order (absent when the value is 0),
    /// and the search at `value + 1` came back empty.
    Exact {
        value: usize,
        witness: Option<PatternWitness>,
    },
    /// A witness of order `cap` exists; larger orders were not searched.
    AtLeast { cap: usize, witness: PatternWitness },
}

impl IndexValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            IndexValue::Exact { value, .. } => Some(*value),
            IndexValue::AtLeast { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> usize {
        match self {
            IndexValue::Exact { value, .. } => *value,
            IndexValue::AtLeast { cap, .. } => *cap,
        }
    }

    pub fn witness(&self) -> Option<&PatternWitness> {
        match self {
            IndexValue::Exact { witness, .. } => witness.as_ref(),
            IndexValue::AtLeast { witness, .. } => Some(witness),
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Exact { value, .. } => write!(f, "{value}"),
            IndexValue::AtLeast { cap, .. } => write!(f, ">={cap}"),
        }
    }
}

/// Largest order below `cap` with a witness (exact), or `>= cap`.
pub fn pattern_index(g: &Graph, kind: PatternKind, cap: usize) -> IndexValue {
    assert!(cap >= 1, "cap must be positive");
    let mut best = None;
    for h in 1..=cap {
        match find_semi_induced(g, kind, h) {
            Some(w) if h == cap => return IndexValue::AtLeast { cap, witness: w },
            Some(w) => best = Some(w),
            None => {
                return IndexValue::Exact {
                    value: h - 1,
                    witness: best,
                }
            }
        }
    }
    unreachable!("loop returns at h == cap")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub matching: IndexValue,
    pub comatching: IndexValue,
    pub halfgraph: IndexValue,
    pub neighborhood_diversity: usize,
}

impl IndexReport {
    pub fn get(&self, kind: PatternKind) -> &IndexValue {
        match kind {
            PatternKind::Matching => &self.matching,
            PatternKind::CoMatching => &self.comatching,
            PatternKind::HalfGraph => &self.halfgraph,
        }
    }
}

pub fn index_report(g: &Graph, cap: usize) -> IndexReport {
    IndexReport {
        matching: pattern_index(g, PatternKind::Matching, cap),
        comatching: pattern_index(g, PatternKind::CoMatching, cap),
        halfgraph: pattern_index(g, PatternKind::HalfGraph, cap),
        neighborhood_diversity: g.twin_classes().diversity(),
    }
}

/// Largest pattern accepted by [`contains_induced`].
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pattern has {0} vertices, at most {MAX_PATTERN_VERTICES} supported")]
pub struct PatternTooLarge(pub usize);

/// Finds an induced copy of `pattern` in `g`.
///
/// Returns `map` with `map[p]` the image of pattern vertex `p`; edges and
/// non-edges are both preserved. `None` certifies absence.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>, PatternTooLarge> {
    let k = pattern.n();
    if k > MAX_PATTERN_VERTICES {
        return Err(PatternTooLarge(k));
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > g.n() {
        return Ok(None);
    }

    // Order pattern vertices so each one is as constrained as possible.
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = order.iter().filter(|&&q| pattern.has_edge(p, q)).count();
                (links, pattern.degree(p), std::cmp::Reverse(p))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }

    let non_adj: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            let mut s = g.neighbors(v).complement();
            s.remove(v);
            s
        })
        .collect();
    let min_degree_ok: Vec<VertexSet> = order
        .iter()
        .map(|&p| {
            VertexSet::from_iter_in(
                g.n(),
                (0..g.n()).filter(|&v| g.degree(v) >= pattern.degree(p)),
            )
        })
        .collect();

    fn go(
        g: &Graph,
        pattern: &Graph,
        order: &[usize],
        non_adj: &[VertexSet],
        degree_ok: &[VertexSet],
        image: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        let i = image.len();
        if i == order.len() {
            return true;
        }
        let p = order[i];
        let mut cand = degree_ok[i].difference(used);
        for (j, &img) in image.iter().enumerate() {
            if pattern.has_edge(p, order[j]) {
                cand.intersect_with(g.neighbors(img));
            } else {
                cand.intersect_with(&non_adj[img]);
            }
        }
        for v in cand.iter() {
            image.push(v);
            used.insert(v);
            if go(g, pattern, order, non_adj, degree_ok, image, used) {
                return true;
            }
            used.remove(v);
            image.pop();
        }
        false
    }

    let mut image = Vec::with_capacity(k);
    let mut used = VertexSet::new(g.n());
    if go(
        g,
        pattern,
        &order,
        &non_adj,
        &min_degree_ok,
        &mut image,
        &mut used,
    ) {
        let mut map = vec![0; k];
        for (i, &p) in order.iter().enumerate() {
            map[p] = image[i];
        }
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// `K_{1,r}`: centre 0, leaves `1..=r`.
pub fn star(r: usize) -> Graph {
    Graph::from_edges(r + 1, (1..=r).map(|l| (0, l)))
}

/// Complement of three disjoint edges (the octahedron `K_{2,2,2}`).
pub fn co_three_k2() -> Graph {
    Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).complement()
}
