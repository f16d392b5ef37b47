//! Exact solvers used as ground truth: maximum independent set, maximum
//! clique, minimum dominating set and multicoloured independent set.
//!
//! Every solver returns the lexicographically smallest optimal solution and
//! counts search nodes against a budget, so a runaway instance yields
//! [`BudgetExceeded`] instead of a wrong answer or a hang.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {budget} nodes exceeded")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// Node counter shared by the searches of one top-level call.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Partition of the vertices into colour classes `V_1..V_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("vertex {0} is in more than one class")]
    Overlap(usize),
    #[error("vertex {0} is in no class")]
    Uncovered(usize),
    #[error("vertex {vertex} outside 1..{n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

impl ColorClassPartition {
    /// Classes of 0-based vertices covering `0..n` exactly once.
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut class_of = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(i + 1));
            }
            for &v in class {
                if v >= n {
                    return Err(PartitionError::OutOfRange { vertex: v + 1, n });
                }
                if class_of[v] != usize::MAX {
                    return Err(PartitionError::Overlap(v + 1));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Uncovered(v + 1));
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Self { classes, class_of })
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Parses `colors <k>` followed by `class <i> : v1 v2 ...` lines.
    pub fn parse(text: &str, n: usize) -> Result<Self, PartitionError> {
        let syntax = |line, message: &str| PartitionError::Syntax {
            line,
            message: message.to_string(),
        };
        let mut classes: Option<Vec<Option<Vec<usize>>>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            match toks.next() {
                Some("colors") => {
                    let k = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&k| k > 0)
                        .ok_or_else(|| syntax(line, "expected `colors <k>`"))?;
                    classes = Some(vec![None; k]);
                }
                Some("class") => {
                    let slots = classes
                        .as_mut()
                        .ok_or_else(|| syntax(line, "class before `colors` header"))?;
                    let i = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&i| i >= 1 && i <= slots.len())
                        .ok_or_else(|| syntax(line, "bad class index"))?;
                    if toks.next() != Some(":") {
                        return Err(syntax(line, "expected `:`"));
                    }
                    let mut members = Vec::new();
                    for t in toks {
                        let v: usize = t.parse().map_err(|_| syntax(line, "bad vertex"))?;
                        if v == 0 || v > n {
                            return Err(PartitionError::OutOfRange { vertex: v, n });
                        }
                        members.push(v - 1);
                    }
                    if slots[i - 1].is_some() {
                        return Err(syntax(line, "class listed twice"));
                    }
                    slots[i - 1] = Some(members);
                }
                _ => return Err(syntax(line, "unrecognised line")),
            }
        }
        let slots = classes.ok_or_else(|| syntax(0, "missing `colors` header"))?;
        let classes = slots
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or(PartitionError::EmptyClass(i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, classes)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("colors {}\n", self.k());
        for (i, class) in self.classes.iter().enumerate() {
            out.push_str(&format!("class {} :", i + 1));
            for v in class {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        out
    }
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of `G[cand]`.
fn clique_cover_bound(g: &Graph, cand: &VertexSet, stop_at: usize) -> usize {
    let mut left = cand.clone();
    let mut count = 0;
    while let Some(u) = left.first() {
        count += 1;
        if count > stop_at {
            return count;
        }
        left.remove(u);
        let mut p = left.intersection(g.neighbors(u));
        while let Some(w) = p.first() {
            left.remove(w);
            p.remove(w);
            p.intersect_with(g.neighbors(w));
        }
    }
    count
}

struct MisSearch<'a> {
    g: &'a Graph,
    budget: &'a mut Budget,
    /// Stop as soon as `best` reaches this size.
    goal: usize,
}

impl MisSearch<'_> {
    /// Maximise over independent sets of `G[cand]` extending `current`,
    /// improving on `best` strictly.
    fn maximize(
        &mut self,
        mut cand: VertexSet,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<(), BudgetExceeded> {
        if best.len() >= self.goal {
            return Ok(());
        }
        self.budget.tick()?;
        let base = current.len();
        // Vertices of degree <= 1 in G[cand] belong to some maximum set.
        loop {
            let forced = cand
                .iter()
                .find(|&v| self.g.neighbors(v).intersection_len(&cand) <= 1);
            match forced {
                Some(v) => {
                    current.push(v);
                    cand.remove(v);
                    cand.difference_with(self.g.neighbors(v));
                }
                None => break,
            }
        }
        let result = self.maximize_core(cand, current, best);
        current.truncate(base);
        result
    }

    fn maximize_core(
        &mut self,
        cand: VertexSet,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<(), BudgetExceeded> {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return Ok(());
        }
        let room = best.len().saturating_sub(current.len());
        if clique_cover_bound(self.g, &cand, room) <= room {
            return Ok(());
        }
        let v = cand
            .iter()
            .max_by_key(|&v| {
                (
                    self.g.neighbors(v).intersection_len(&cand),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty candidate set");

        let mut with_v = cand.clone();
        with_v.remove(v);
        with_v.difference_with(self.g.neighbors(v));
        current.push(v);
        self.maximize(with_v, current, best)?;
        current.pop();

        let mut without_v = cand;
        without_v.remove(v);
        self.maximize(without_v, current, best)
    }

    /// Is there an independent set of size `need` inside `G[cand]`?
    fn feasible(&mut self, cand: &VertexSet, need: usize) -> Result<bool, BudgetExceeded> {
        if need == 0 {
            return Ok(true);
        }
        if cand.len() < need {
            return Ok(false);
        }
        // Ask for a strict improvement over a placeholder of size need - 1.
        let mut best = vec![usize::MAX; need - 1];
        let mut current = Vec::new();
        let saved = std::mem::replace(&mut self.goal, need);
        let result = self.maximize(cand.clone(), &mut current, &mut best);
        self.goal = saved;
        result?;
        Ok(best.len() >= need)
    }
}

/// Largest independent set, lexicographically smallest among the maximum
/// ones, using the default node budget.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>, BudgetExceeded> {
    max_independent_set_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn max_independent_set_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<Vec<usize>, BudgetExceeded> {
    let mut budget = Budget::new(budget);
    let alpha = independence_number_inner(g, &mut budget)?;
    lex_smallest_independent_set(g, alpha, &mut budget)
}

/// Size of a maximum independent set.
pub fn independence_number(g: &Graph, budget: u64) -> Result<usize, BudgetExceeded> {
    independence_number_inner(g, &mut Budget::new(budget))
}

fn independence_number_inner(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let mut search = MisSearch {
        g,
        budget,
        goal: usize::MAX,
    };
    let mut best = Vec::new();
    search.maximize(g.vertices(), &mut Vec::new(), &mut best)?;
    debug_assert!(g.is_independent(&best));
    Ok(best.len())
}

/// Lexicographically smallest independent set of size `size`, if any.
fn lex_smallest_independent_set(
    g: &Graph,
    size: usize,
    budget: &mut Budget,
) -> Result<Vec<usize>, BudgetExceeded> {
    let mut search = MisSearch {
        g,
        budget,
        goal: usize::MAX,
    };
    let mut chosen = Vec::with_capacity(size);
    let mut cand = g.vertices();
    while chosen.len() < size {
        let v = cand.first().expect("a completion exists by feasibility");
        cand.remove(v);
        let mut rest = cand.clone();
        rest.difference_with(g.neighbors(v));
        if search.feasible(&rest, size - chosen.len() - 1)? {
            chosen.push(v);
            cand = rest;
        }
    }
    Ok(chosen)
}

/// Lexicographically smallest independent set of size exactly `k`, if one
/// exists.
pub fn independent_set_of_size(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let mut budget = Budget::new(budget);
    let feasible = MisSearch {
        g,
        budget: &mut budget,
        goal: usize::MAX,
    }
    .feasible(&g.vertices(), k)?;
    if !feasible {
        return Ok(None);
    }
    lex_smallest_independent_set(g, k, &mut budget).map(Some)
}

/// Maximum clique, computed as a maximum independent set of the complement.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>, BudgetExceeded> {
    max_independent_set(&g.complement())
}

pub fn max_clique_with_budget(g: &Graph, budget: u64) -> Result<Vec<usize>, BudgetExceeded> {
    max_independent_set_with_budget(&g.complement(), budget)
}

struct DsSearch<'a> {
    g: &'a Graph,
    closed: Vec<VertexSet>,
    budget: &'a mut Budget,
}

impl DsSearch<'_> {
    /// Can `undominated` be dominated by at most `room` more vertices chosen
    /// outside `excluded`? Fills `chosen` with the first solution found.
    fn search(
        &mut self,
        undominated: &VertexSet,
        excluded: &VertexSet,
        room: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        if undominated.is_empty() {
            return Ok(true);
        }
        if room == 0 {
            return Ok(false);
        }
        // Branch on the undominated vertex with the fewest dominators.
        let mut pick: Option<(usize, VertexSet)> = None;
        for u in undominated.iter() {
            let opts = self.closed[u].difference(excluded);
            if pick.as_ref().is_none_or(|(_, o)| opts.len() < o.len()) {
                let empty = opts.is_empty();
                pick = Some((u, opts));
                if empty {
                    return Ok(false);
                }
            }
        }
        let (_, options) = pick.expect("undominated is non-empty");
        let max_cover = (0..self.g.n())
            .filter(|&v| !excluded.contains(v))
            .map(|v| self.closed[v].intersection_len(undominated))
            .max()
            .unwrap_or(0);
        if max_cover == 0 || undominated.len().div_ceil(max_cover) > room {
            return Ok(false);
        }
        for v in options.iter() {
            let rest = undominated.difference(&self.closed[v]);
            chosen.push(v);
            if self.search(&rest, excluded, room - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

/// Minimum dominating set, lexicographically smallest among the minimum ones.
pub fn min_dominating_set(g: &Graph) -> Result<Vec<usize>, BudgetExceeded> {
    min_dominating_set_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn min_dominating_set_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<Vec<usize>, BudgetExceeded> {
    let mut budget = Budget::new(budget);
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    let mut search = DsSearch {
        g,
        closed,
        budget: &mut budget,
    };
    let n = g.n();
    let none = VertexSet::new(n);
    let mut size = 0;
    loop {
        let mut scratch = Vec::new();
        if search.search(&g.vertices(), &none, size, &mut scratch)? {
            break;
        }
        size += 1;
    }
    // Fix vertices in ascending order while a completion of the same size exists.
    let mut fixed: Vec<usize> = Vec::with_capacity(size);
    let mut excluded = VertexSet::new(n);
    for v in 0..n {
        if fixed.len() == size {
            break;
        }
        let mut undominated = g.vertices();
        for &f in fixed.iter().chain(std::iter::once(&v)) {
            undominated.difference_with(&search.closed[f]);
        }
        let mut scratch = Vec::new();
        if search.search(
            &undominated,
            &excluded,
            size - fixed.len() - 1,
            &mut scratch,
        )? {
            fixed.push(v);
        } else {
            excluded.insert(v);
        }
    }
    Ok(fixed)
}

/// Is there a dominating set of size at most `k`? Returns the minimum one.
pub fn dominating_set_within(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let mut b = Budget::new(budget);
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    let mut search = DsSearch {
        g,
        closed,
        budget: &mut b,
    };
    let mut scratch = Vec::new();
    if !search.search(&g.vertices(), &VertexSet::new(g.n()), k, &mut scratch)? {
        return Ok(None);
    }
    let remaining = budget.saturating_sub(b.used());
    min_dominating_set_with_budget(g, remaining).map(Some)
}

/// Independent set with exactly one vertex per class, choosing in class order
/// and ascending vertex order. `Ok(None)` certifies absence.
pub fn multicolored_independent_set(
    g: &Graph,
    partition: &ColorClassPartition,
    budget: u64,
) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let mut budget = Budget::new(budget);
    let k = partition.k();
    let domains: Vec<VertexSet> = partition
        .classes()
        .iter()
        .map(|c| VertexSet::from_iter_in(g.n(), c.iter().copied()))
        .collect();

    fn go(
        g: &Graph,
        domains: &[VertexSet],
        allowed: &VertexSet,
        picked: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool, BudgetExceeded> {
        budget.tick()?;
        let i = picked.len();
        if i == domains.len() {
            return Ok(true);
        }
        for v in domains[i].intersection(allowed).iter() {
            let mut next = allowed.clone();
            next.difference_with(g.neighbors(v));
            // Forward check: every later class keeps a candidate.
            if domains[i + 1..].iter().any(|d| d.is_disjoint(&next)) {
                continue;
            }
            picked.push(v);
            if go(g, domains, &next, picked, budget)? {
                return Ok(true);
            }
            picked.pop();
        }
        Ok(false)
    }

    let mut picked = Vec::with_capacity(k);
    if go(g, &domains, &g.vertices(), &mut picked, &mut budget)? {
        Ok(Some(picked))
    } else {
        Ok(None)
    }
}
