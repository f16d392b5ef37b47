//! Kernelization for Independent Set on graphs without large half-graphs and
//! co-matchings: the six-formula family used to describe indiscernible
//! sequences, homogeneous sets, the clique-vertex deletion rule and the
//! decision driver.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::oracles::{independent_set_of_size, Budget, BudgetExceeded, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaShape {
    /// `E(x1, x2)`.
    Eta,
    /// Some `y` sees exactly the first half of the tuple.
    Chi,
    /// Some `y` sees exactly the second half.
    ChiStar,
    /// Some `y` sees everything but the middle entry.
    Theta,
    /// Some `y` sees everything but the first entry.
    Delta,
    /// Some `y` sees everything but the last entry.
    DeltaStar,
}

impl GammaShape {
    pub const ALL: [GammaShape; 6] = [
        GammaShape::Eta,
        GammaShape::Chi,
        GammaShape::ChiStar,
        GammaShape::Theta,
        GammaShape::Delta,
        GammaShape::DeltaStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaShape::Eta => "eta",
            GammaShape::Chi => "chi",
            GammaShape::ChiStar => "chi_star",
            GammaShape::Theta => "theta",
            GammaShape::Delta => "delta",
            GammaShape::DeltaStar => "delta_star",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GammaFormula {
    pub shape: GammaShape,
    pub t: usize,
}

impl GammaFormula {
    pub fn new(shape: GammaShape, t: usize) -> Self {
        assert!(t >= 1, "t must be positive");
        Self { shape, t }
    }

    pub fn arity(&self) -> usize {
        match self.shape {
            GammaShape::Eta => 2,
            GammaShape::Chi | GammaShape::ChiStar => 2 * self.t,
            GammaShape::Theta | GammaShape::Delta | GammaShape::DeltaStar => 2 * self.t + 1,
        }
    }

    /// Required adjacency of the witness `y` to each tuple position, or
    /// `None` for `Eta`.
    fn pattern(&self) -> Option<Vec<bool>> {
        let t = self.t;
        let a = self.arity();
        Some(match self.shape {
            GammaShape::Eta => return None,
            GammaShape::Chi => (0..a).map(|i| i < t).collect(),
            GammaShape::ChiStar => (0..a).map(|i| i >= t).collect(),
            GammaShape::Theta => (0..a).map(|i| i != t).collect(),
            GammaShape::Delta => (0..a).map(|i| i != 0).collect(),
            GammaShape::DeltaStar => (0..a).map(|i| i != a - 1).collect(),
        })
    }
}

impl fmt::Display for GammaFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[t={}]", self.shape.name(), self.t)
    }
}

/// All six formulas for parameter `t`.
pub fn gamma_family(t: usize) -> Vec<GammaFormula> {
    GammaShape::ALL
        .iter()
        .map(|&s| GammaFormula::new(s, t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula} takes {expected} vertices, got {got}")]
    Arity {
        formula: GammaFormula,
        expected: usize,
        got: usize,
    },
    #[error("vertex {0} repeated in the tuple")]
    Repeated(usize),
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
}

/// Truth value of `phi` on `tuple`, with the witness `y` for the existential
/// shapes. `y` must differ from every tuple entry.
pub fn formula_witness(
    g: &Graph,
    phi: GammaFormula,
    tuple: &[usize],
) -> Result<(bool, Option<usize>), FormulaError> {
    if tuple.len() != phi.arity() {
        return Err(FormulaError::Arity {
            formula: phi,
            expected: phi.arity(),
            got: tuple.len(),
        });
    }
    let mut members = VertexSet::new(g.n());
    for &v in tuple {
        if v >= g.n() {
            return Err(FormulaError::OutOfRange(v + 1));
        }
        if !members.insert(v) {
            return Err(FormulaError::Repeated(v + 1));
        }
    }
    let Some(pattern) = phi.pattern() else {
        return Ok((g.has_edge(tuple[0], tuple[1]), None));
    };
    let y = (0..g.n()).find(|&y| {
        !members.contains(y)
            && tuple
                .iter()
                .zip(&pattern)
                .all(|(&x, &want)| g.has_edge(x, y) == want)
    });
    Ok((y.is_some(), y))
}

pub fn eval_formula(g: &Graph, phi: GammaFormula, tuple: &[usize]) -> Result<bool, FormulaError> {
    formula_witness(g, phi, tuple).map(|(b, _)| b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Indiscernibility {
    Indiscernible,
    /// The first increasing tuple and the first one disagreeing with it.
    Counterexample {
        formula: GammaFormula,
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndiscernibilityError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Checks that each formula takes one truth value over all increasing
/// tuples of `seq`. Each evaluated tuple costs one budget unit.
pub fn is_indiscernible(
    g: &Graph,
    seq: &[usize],
    formulas: &[GammaFormula],
    budget: u64,
) -> Result<Indiscernibility, IndiscernibilityError> {
    let mut seen = VertexSet::new(g.n());
    for &v in seq {
        if v >= g.n() {
            return Err(FormulaError::OutOfRange(v + 1).into());
        }
        if !seen.insert(v) {
            return Err(FormulaError::Repeated(v + 1).into());
        }
    }
    let mut budget = Budget::new(budget);
    for &phi in formulas {
        let a = phi.arity();
        if a > seq.len() {
            continue;
        }
        let mut idx: Vec<usize> = (0..a).collect();
        let mut reference: Option<(bool, Vec<usize>)> = None;
        loop {
            budget.tick()?;
            let tuple: Vec<usize> = idx.iter().map(|&i| seq[i]).collect();
            let value = eval_formula(g, phi, &tuple)?;
            match &reference {
                None => reference = Some((value, tuple)),
                Some((r, first)) if *r != value => {
                    return Ok(Indiscernibility::Counterexample {
                        formula: phi,
                        first: first.clone(),
                        second: tuple,
                    })
                }
                Some(_) => {}
            }
            // Next increasing index tuple in lexicographic order.
            let Some(p) = (0..a).rev().find(|&p| idx[p] < seq.len() - a + p) else {
                break;
            };
            idx[p] += 1;
            for q in p + 1..a {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    Ok(Indiscernibility::Indiscernible)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousKind {
    Clique,
    Independent,
}

impl fmt::Display for HomogeneousKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomogeneousKind::Clique => "clique",
            HomogeneousKind::Independent => "independent",
        })
    }
}

/// A clique or independent set such that every outside vertex has fewer
/// than `2t` neighbours in it or is complete to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSet {
    /// Ascending.
    pub members: Vec<usize>,
    pub kind: HomogeneousKind,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogeneityViolation {
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
    #[error("set is neither a clique nor independent: {0}-{1} is an edge, {2}-{3} is not")]
    Mixed(usize, usize, usize, usize),
    #[error("outside vertex {vertex} sees {seen} of {size} members")]
    Outside {
        vertex: usize,
        seen: usize,
        size: usize,
    },
}

/// Checks both conditions with one counter per outside vertex. Sets with at
/// most one member count as independent.
pub fn verify_homogeneous_set(
    g: &Graph,
    t: usize,
    s: &[usize],
) -> Result<HomogeneousKind, HomogeneityViolation> {
    let mut set = VertexSet::new(g.n());
    for &v in s {
        if v >= g.n() {
            return Err(HomogeneityViolation::OutOfRange(v + 1));
        }
        set.insert(v);
    }
    let mut edge = None;
    let mut non_edge = None;
    let members = set.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                edge.get_or_insert((u, v));
            } else {
                non_edge.get_or_insert((u, v));
            }
        }
    }
    let kind = match (edge, non_edge) {
        (Some((a, b)), Some((c, d))) => {
            return Err(HomogeneityViolation::Mixed(a + 1, b + 1, c + 1, d + 1))
        }
        (Some(_), None) => HomogeneousKind::Clique,
        (None, _) => HomogeneousKind::Independent,
    };
    let mut counter = vec![0usize; g.n()];
    for s in set.iter() {
        for w in g.neighbors(s).iter() {
            counter[w] += 1;
        }
    }
    let size = set.len();
    for (w, &seen) in counter.iter().enumerate() {
        if !set.contains(w) && seen >= 2 * t && seen < size {
            return Err(HomogeneityViolation::Outside {
                vertex: w + 1,
                seen,
                size,
            });
        }
    }
    Ok(kind)
}

fn accept(g: &Graph, t: usize, members: Vec<usize>) -> Option<HomogeneousSet> {
    let mut members = members;
    members.sort_unstable();
    let kind = verify_homogeneous_set(g, t, &members).ok()?;
    Some(HomogeneousSet { members, kind, t })
}

/// Searches for a homogeneous set of exactly `l` vertices.
///
/// Tries, in order: a twin class with at least `l` members; greedy growth
/// from each seed of a clique or independent set, adding vertices whose
/// neighbourhoods are closest to the seed's; backtracking over all cliques
/// and independent sets, pruning once a permanently outside vertex breaks
/// the neighbour condition. `None` means nothing was found within `budget`
/// backtracking nodes, not that no such set exists.
pub fn find_homogeneous_set(g: &Graph, t: usize, l: usize, budget: u64) -> Option<HomogeneousSet> {
    let n = g.n();
    if l == 0 || n < l {
        return None;
    }
    for class in &g.twin_classes().classes {
        if class.len() >= l {
            if let Some(h) = accept(g, t, class[..l].to_vec()) {
                return Some(h);
            }
        }
    }

    for seed in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&u| u != seed).collect();
        let seed_n = g.neighbors(seed);
        order.sort_by_key(|&u| {
            let nu = g.neighbors(u);
            (nu.len() + seed_n.len() - 2 * nu.intersection_len(seed_n), u)
        });
        for kind in [HomogeneousKind::Independent, HomogeneousKind::Clique] {
            let mut members = vec![seed];
            for &u in &order {
                if members.len() == l {
                    break;
                }
                let fits = members.iter().all(|&m| match kind {
                    HomogeneousKind::Clique => g.has_edge(u, m),
                    HomogeneousKind::Independent => !g.has_edge(u, m),
                });
                if fits {
                    members.push(u);
                }
            }
            if members.len() == l {
                if let Some(h) = accept(g, t, members) {
                    return Some(h);
                }
            }
        }
    }

    let mut b = Budget::new(budget);
    for kind in [HomogeneousKind::Independent, HomogeneousKind::Clique] {
        let mut chosen = Vec::with_capacity(l);
        let mut counter = vec![0usize; n];
        match exhaustive(g, t, l, kind, 0, &mut chosen, &mut counter, &mut b) {
            Ok(true) => return accept(g, t, chosen),
            Ok(false) => {}
            Err(_) => return None,
        }
    }
    None
}

/// Backtracking over ascending vertex lists. A vertex below `next` that is
/// not chosen stays outside forever; once it has `2t` chosen neighbours but
/// misses one, no extension can repair it.
#[allow(clippy::too_many_arguments)]
fn exhaustive(
    g: &Graph,
    t: usize,
    l: usize,
    kind: HomogeneousKind,
    next: usize,
    chosen: &mut Vec<usize>,
    counter: &mut [usize],
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    let size = chosen.len();
    for (w, &seen) in counter[..next].iter().enumerate() {
        if seen >= 2 * t && seen < size && !chosen.contains(&w) {
            return Ok(false);
        }
    }
    if size == l {
        return Ok(true);
    }
    for u in next..g.n() {
        if g.n() - u < l - size {
            break;
        }
        let fits = chosen.iter().all(|&m| match kind {
            HomogeneousKind::Clique => g.has_edge(u, m),
            HomogeneousKind::Independent => !g.has_edge(u, m),
        });
        if !fits {
            continue;
        }
        chosen.push(u);
        for w in g.neighbors(u).iter() {
            counter[w] += 1;
        }
        if exhaustive(g, t, l, kind, u + 1, chosen, counter, budget)? {
            return Ok(true);
        }
        for w in g.neighbors(u).iter() {
            counter[w] -= 1;
        }
        chosen.pop();
    }
    Ok(false)
}

/// Size of the homogeneous set the deletion rule asks for.
pub fn kernel_set_size(k: usize, t: usize) -> usize {
    (k - 1) * (2 * t - 1) + 2
}

pub const DEFAULT_KERNEL_THRESHOLD: usize = 64;
pub const DEFAULT_HOMOGENEOUS_BUDGET: u64 = 1_000_000;

/// Result of the reduction loop. Vertices are labels of the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelState {
    pub graph: Graph,
    /// `labels[v]` is the original label of residual vertex `v`.
    pub labels: Vec<usize>,
    pub k: usize,
    pub t: usize,
    pub deletions: Vec<usize>,
    /// `k` independent vertices of the original graph, if found early.
    pub early_answer: Option<Vec<usize>>,
}

impl fmt::Display for KernelState {
    /// `kernel n=<residual> deleted=<list> early=<yes|none>`, 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deleted = if self.deletions.is_empty() {
            "none".to_string()
        } else {
            self.deletions
                .iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let early = if self.early_answer.is_some() {
            "yes"
        } else {
            "none"
        };
        write!(
            f,
            "kernel n={} deleted={} early={}",
            self.graph.n(),
            deleted,
            early
        )
    }
}

/// While at least `threshold` vertices remain, finds a homogeneous set of
/// size `(k - 1)(2t - 1) + 2`: an independent one answers yes, a clique
/// loses its smallest member. Stops when the search comes back empty.
pub fn kernel_reduce(g: &Graph, k: usize, t: usize, threshold: usize, budget: u64) -> KernelState {
    assert!(k >= 1 && t >= 1, "k and t must be positive");
    let size = kernel_set_size(k, t);
    let mut state = KernelState {
        graph: g.clone(),
        labels: (0..g.n()).collect(),
        k,
        t,
        deletions: Vec::new(),
        early_answer: None,
    };
    while state.graph.n() >= threshold {
        let Some(h) = find_homogeneous_set(&state.graph, t, size, budget) else {
            break;
        };
        match h.kind {
            HomogeneousKind::Independent => {
                state.early_answer =
                    Some(h.members[..k].iter().map(|&v| state.labels[v]).collect());
                break;
            }
            HomogeneousKind::Clique => {
                let s = h.members[0];
                state.deletions.push(state.labels[s]);
                let mut keep = state.graph.vertices();
                keep.remove(s);
                let induced = state.graph.induced(&keep);
                state.labels = induced.labels.iter().map(|&v| state.labels[v]).collect();
                state.graph = induced.graph;
            }
        }
    }
    state
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FptOptions {
    pub threshold: usize,
    /// Backtracking nodes per homogeneous-set search.
    pub homogeneous_budget: u64,
    /// Search nodes for the exact solve on the residual graph.
    pub oracle_budget: u64,
}

impl Default for FptOptions {
    fn default() -> Self {
        Self {
            threshold: DEFAULT_KERNEL_THRESHOLD,
            homogeneous_budget: DEFAULT_HOMOGENEOUS_BUDGET,
            oracle_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptAnswer {
    /// An independent set of size `k` of the original graph, or `None`.
    pub witness: Option<Vec<usize>>,
    pub kernel: KernelState,
}

/// Decides whether `g` has an independent set of size `k`: kernelize, then
/// solve the residual graph exactly.
pub fn fpt_independent_set(
    g: &Graph,
    k: usize,
    t: usize,
    opts: FptOptions,
) -> Result<FptAnswer, BudgetExceeded> {
    let kernel = kernel_reduce(g, k, t, opts.threshold, opts.homogeneous_budget);
    let witness = match &kernel.early_answer {
        Some(w) => Some(w.clone()),
        None => independent_set_of_size(&kernel.graph, k, opts.oracle_budget)?.map(|s| {
            let mut w: Vec<usize> = s.iter().map(|&v| kernel.labels[v]).collect();
            w.sort_unstable();
            w
        }),
    };
    Ok(FptAnswer { witness, kernel })
}
