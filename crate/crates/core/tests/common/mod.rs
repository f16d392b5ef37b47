//! Brute-force ground truth and graph enumeration for the integration tests.
//! Nothing here calls the library's solvers.

#![allow(dead_code)]

use std::collections::HashSet;

use semiladder_core::{Graph, PatternKind};

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 24, "brute force is for small graphs");
    0u64..1 << n
}

fn is_independent_mask(adj: &[u64], s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & s != 0 {
            return false;
        }
    }
    true
}

pub fn brute_alpha(g: &Graph) -> usize {
    let adj = masks(g);
    subsets(g.n())
        .filter(|&s| is_independent_mask(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_omega(g: &Graph) -> usize {
    brute_alpha(&g.complement())
}

pub fn brute_min_ds(g: &Graph) -> usize {
    let adj = masks(g);
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    subsets(g.n())
        .filter(|&s| {
            let mut covered = s;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                covered |= adj[v];
            }
            covered == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Is there one vertex per class, pairwise non-adjacent?
pub fn brute_mcis(g: &Graph, classes: &[Vec<usize>]) -> bool {
    fn go(g: &Graph, classes: &[Vec<usize>], picked: &mut Vec<usize>) -> bool {
        let Some(class) = classes.get(picked.len()) else {
            return true;
        };
        for &v in class {
            if picked.iter().all(|&u| !g.has_edge(u, v)) {
                picked.push(v);
                if go(g, classes, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    go(g, classes, &mut Vec::new())
}

/// Does `g` contain disjoint `a_1..a_h`, `b_1..b_h` with
/// `a_i b_j ∈ E ⇔ pred(i, j)`? Plain enumeration of injective tuples.
pub fn brute_has_pattern(g: &Graph, kind: PatternKind, h: usize) -> bool {
    if h == 0 {
        return true;
    }
    if 2 * h > g.n() {
        return false;
    }
    let pred = |i: usize, j: usize| match kind {
        PatternKind::Matching => i == j,
        PatternKind::CoMatching => i != j,
        PatternKind::HalfGraph => i <= j,
    };
    fn go(
        g: &Graph,
        h: usize,
        pred: &dyn Fn(usize, usize) -> bool,
        a: &mut Vec<usize>,
        b: &mut Vec<usize>,
    ) -> bool {
        // Fill a_1, b_1, a_2, b_2, ... checking every decided pair.
        let step = a.len() + b.len();
        if step == 2 * h {
            return true;
        }
        for v in 0..g.n() {
            if a.contains(&v) || b.contains(&v) {
                continue;
            }
            let ok = if step.is_multiple_of(2) {
                let i = a.len();
                b.iter()
                    .enumerate()
                    .all(|(j, &bj)| g.has_edge(v, bj) == pred(i, j))
            } else {
                let j = b.len();
                a.iter()
                    .enumerate()
                    .all(|(i, &ai)| g.has_edge(ai, v) == pred(i, j))
            };
            if !ok {
                continue;
            }
            if step.is_multiple_of(2) {
                a.push(v);
            } else {
                b.push(v);
            }
            if go(g, h, pred, a, b) {
                return true;
            }
            if step.is_multiple_of(2) {
                a.pop();
            } else {
                b.pop();
            }
        }
        false
    }
    go(g, h, &pred, &mut Vec::new(), &mut Vec::new())
}

pub fn brute_pattern_index(g: &Graph, kind: PatternKind) -> usize {
    let mut h = 0;
    while brute_has_pattern(g, kind, h + 1) {
        h += 1;
    }
    h
}

/// Brute check that `pattern` occurs as an induced subgraph.
pub fn brute_contains_induced(g: &Graph, pattern: &Graph) -> bool {
    fn go(g: &Graph, p: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| p.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if go(g, p, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g, pattern, &mut Vec::new())
}

/// Canonical code of a graph on at most 9 vertices: the smallest upper
/// triangle bit string over all orderings that respect the stable colour
/// refinement.
pub fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    // Colour refinement starting from degrees.
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let classes_before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        color = next;
        if stable {
            break;
        }
    }
    // Position p must be filled by a vertex of the p-th smallest colour.
    let mut slot_colors = color.clone();
    slot_colors.sort_unstable();

    struct St<'a> {
        adj: &'a [u16],
        color: &'a [usize],
        slots: &'a [usize],
        order: Vec<usize>,
        code: u64,
        best: u64,
    }
    fn place(st: &mut St<'_>, used: u16) {
        let p = st.order.len();
        let n = st.adj.len();
        if p == n {
            st.best = st.best.min(st.code);
            return;
        }
        let shift_base = p * (p.saturating_sub(1)) / 2;
        for v in 0..n {
            if used >> v & 1 == 1 || st.color[v] != st.slots[p] {
                continue;
            }
            // Pair (q, p) with q < p sits at bit 62 - (p(p-1)/2 + q), so
            // earlier positions are more significant.
            let mut bits = 0u64;
            for (q, &u) in st.order.iter().enumerate() {
                if st.adj[v] >> u & 1 == 1 {
                    bits |= 1 << (62 - shift_base - q);
                }
            }
            let saved = st.code;
            st.code |= bits;
            let decided = shift_base + p;
            let mask = if decided == 0 {
                0
            } else {
                ((1u64 << decided) - 1) << (63 - decided)
            };
            if st.code & mask <= st.best & mask {
                st.order.push(v);
                place(st, used | 1 << v);
                st.order.pop();
            }
            st.code = saved;
        }
    }
    let mut st = St {
        adj,
        color: &color,
        slots: &slot_colors,
        order: Vec::with_capacity(n),
        code: 0,
        best: u64::MAX,
    };
    place(&mut st, 0);
    st.best | n as u64
}

/// One representative per isomorphism class, for every order `1..=max_n`.
/// `result[n]` holds the graphs on `n` vertices.
pub fn nonisomorphic_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 9, "enumeration is meant for tiny graphs");
    let mut levels: Vec<Vec<Vec<u16>>> = vec![vec![], vec![vec![0]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &levels[n - 1] {
            for nb in 0u16..1 << (n - 1) {
                let mut adj: Vec<u16> = base.clone();
                for (u, m) in adj.iter_mut().enumerate() {
                    if nb >> u & 1 == 1 {
                        *m |= 1 << (n - 1);
                    }
                }
                adj.push(nb);
                if seen.insert(canonical_code(&adj)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|adj| {
                    let n = adj.len();
                    Graph::from_edges(
                        n,
                        (0..n).flat_map(|u| {
                            (u + 1..n)
                                .filter(move |&v| adj[u] >> v & 1 == 1)
                                .map(move |v| (u, v))
                        }),
                    )
                })
                .collect()
        })
        .collect()
}
