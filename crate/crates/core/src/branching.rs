//! Independent set approximation by branching on edges, with recursion depth
//! bounded by the half-graph index.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Inclusion-maximal independent set, scanning vertices in ascending order.
pub fn greedy_maximal_is(g: &Graph) -> Vec<usize> {
    greedy_within(g, &g.vertices()).to_vec()
}

fn greedy_within(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut free = within.clone();
    let mut out = VertexSet::new(g.n());
    while let Some(v) = free.first() {
        out.insert(v);
        free.remove(v);
        free.difference_with(g.neighbors(v));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchReport {
    /// Independent set, ascending.
    pub result: Vec<usize>,
    /// Deepest recursion level visited; the root is level 0.
    pub depth_reached: usize,
    pub nodes_explored: u64,
    /// The depth cap cut off some branch, so the size guarantee is void.
    pub cap_hit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchOptions {
    pub depth_cap: Option<usize>,
    /// Reuse results for repeated vertex sets. Never changes `result`.
    pub memoize: bool,
}

impl Default for BranchOptions {
    fn default() -> Self {
        Self {
            depth_cap: None,
            memoize: true,
        }
    }
}

/// Larger first, then lexicographically smaller.
fn better(a: &VertexSet, b: &VertexSet) -> bool {
    match a.len().cmp(&b.len()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.iter().lt(b.iter()),
    }
}

struct Search<'a> {
    g: &'a Graph,
    opts: BranchOptions,
    nodes: u64,
    cap_hit: bool,
    /// Keyed by vertex set and, under a depth cap, by depth.
    memo: HashMap<(VertexSet, usize), (VertexSet, usize)>,
}

impl Search<'_> {
    /// Returns the best set for `G[within]` and the height of its subtree.
    fn run(&mut self, within: &VertexSet, depth: usize) -> (VertexSet, usize) {
        let key_depth = if self.opts.depth_cap.is_some() {
            depth
        } else {
            0
        };
        if self.opts.memoize {
            if let Some(hit) = self.memo.get(&(within.clone(), key_depth)) {
                return hit.clone();
            }
        }
        self.nodes += 1;
        let g = self.g;
        let has_edge = within.iter().any(|v| !g.neighbors(v).is_disjoint(within));
        let answer = if !has_edge {
            (within.clone(), 0)
        } else if self.opts.depth_cap.is_some_and(|cap| depth >= cap) {
            self.cap_hit = true;
            (greedy_within(g, within), 0)
        } else {
            let mut best = greedy_within(g, within);
            let mut height = 0;
            for u in within.iter() {
                let closed_u = g.closed_neighbors(u);
                for v in g.neighbors(u).intersection(within).iter() {
                    let mut sub = within.intersection(g.neighbors(v));
                    sub.difference_with(&closed_u);
                    let (mut cand, h) = self.run(&sub, depth + 1);
                    height = height.max(h + 1);
                    cand.insert(u);
                    if better(&cand, &best) {
                        best = cand;
                    }
                }
            }
            (best, height)
        };
        if self.opts.memoize {
            self.memo
                .insert((within.clone(), key_depth), answer.clone());
        }
        answer
    }
}

/// Best of the greedy maximal independent set and `{u} ∪ recurse(G[N(v) \ N[u]])`
/// over all ordered adjacent pairs `(u, v)`; an edgeless graph returns all
/// its vertices. On a graph of half-graph index `h >= 1` the result has size
/// at least `α^(1/h)`.
pub fn approx_is_halfgraph(g: &Graph, depth_cap: Option<usize>) -> BranchReport {
    approx_is_halfgraph_with(
        g,
        BranchOptions {
            depth_cap,
            ..BranchOptions::default()
        },
    )
}

pub fn approx_is_halfgraph_with(g: &Graph, opts: BranchOptions) -> BranchReport {
    let mut search = Search {
        g,
        opts,
        nodes: 0,
        cap_hit: false,
        memo: HashMap::new(),
    };
    let (best, height) = search.run(&g.vertices(), 0);
    BranchReport {
        result: best.to_vec(),
        depth_reached: height,
        nodes_explored: search.nodes,
        cap_hit: search.cap_hit,
    }
}
