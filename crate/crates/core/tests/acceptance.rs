//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Pass criterion numbers as arguments to run a subset:
//! `cargo test -p semiladder-core --test acceptance -- 2 5`.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use semiladder_core::branching::approx_is_halfgraph;
use semiladder_core::fpt::{
    fpt_independent_set, gamma_family, is_indiscernible, FptOptions, GammaFormula, GammaShape,
    Indiscernibility,
};
use semiladder_core::generate::{gnp, unit_square_centers, unit_square_graph};
use semiladder_core::gyarfas::{
    approx_clique, approx_is_comatching, f_colors, gyarfas, pow_at_least, GyarfasOutcome,
};
use semiladder_core::oracles::{
    dominating_set_within, independence_number, max_independent_set, multicolored_independent_set,
    ColorClassPartition, DEFAULT_NODE_BUDGET,
};
use semiladder_core::pattern::{co_three_k2, contains_induced, pattern_index, star};
use semiladder_core::reductions::{
    extract_ds_to_mcis, extract_tiling_solution, grid_tiling_to_is, lift_mcis_to_ds,
    lift_tiling_solution, multicolored_is_to_ds, DsReductionOutput, TilingReductionOutput,
};
use semiladder_core::tiling::{solve_grid_tiling, three_by_three_fixture, Tile};
use semiladder_core::witness::distinct_colors;
use semiladder_core::{verify_witness, Graph, GridTilingInstance, PatternKind, Selection, Witness};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn histogram(values: impl IntoIterator<Item = usize>) -> String {
    let mut h: BTreeMap<usize, usize> = BTreeMap::new();
    for v in values {
        *h.entry(v).or_default() += 1;
    }
    h.iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn exact_index(g: &Graph, kind: PatternKind, cap: usize) -> Option<usize> {
    pattern_index(g, kind, cap).exact()
}

// ---------------------------------------------------------------------------
// Grid Tiling instances

/// Tile sets of size 1..=3 over `[n]^2`, each as a sorted list.
fn small_tile_sets(n: usize) -> Vec<Vec<Tile>> {
    let all: Vec<Tile> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << all.len() {
        if mask.count_ones() <= 3 {
            out.push(
                (0..all.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| all[i])
                    .collect(),
            );
        }
    }
    out
}

fn tile_bit(t: Tile, n: usize) -> u32 {
    ((t.0 - 1) * n + (t.1 - 1)) as u32
}

/// Smallest code of a 2x2 instance under swapping values in either
/// component and transposing the grid.
fn canonical_2x2(cells: &[Vec<Tile>; 4], n: usize) -> u64 {
    let perms: Vec<Vec<usize>> = if n == 2 {
        vec![vec![1, 2], vec![2, 1]]
    } else {
        unreachable!("symmetry reduction only used for n = 2")
    };
    let mut best = u64::MAX;
    for p1 in &perms {
        for p2 in &perms {
            for transpose in [false, true] {
                let mut code = 0u64;
                for i in 0..2 {
                    for j in 0..2 {
                        let (si, sj) = if transpose { (j, i) } else { (i, j) };
                        let mut m = 0u64;
                        for &(a, b) in &cells[si * 2 + sj] {
                            let (a, b) = (p1[a - 1], p2[b - 1]);
                            let t = if transpose { (b, a) } else { (a, b) };
                            m |= 1 << tile_bit(t, n);
                        }
                        code = code << 16 | m;
                    }
                }
                best = best.min(code);
            }
        }
    }
    best
}

fn code_2x2(cells: &[Vec<Tile>; 4], n: usize) -> u64 {
    cells.iter().fold(0u64, |code, c| {
        code << 16 | c.iter().fold(0u64, |m, &t| m | 1 << tile_bit(t, n))
    })
}

fn random_tile_set(rng: &mut ChaCha8Rng, n: usize, must: Option<Tile>) -> Vec<Tile> {
    let size = rng.gen_range(1..=3);
    let mut set: Vec<Tile> = must.into_iter().collect();
    while set.len() < size {
        let t = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        if !set.contains(&t) {
            set.push(t);
        }
    }
    // Shuffle so a planted tile is not always first.
    for i in (1..set.len()).rev() {
        let j = rng.gen_range(0..=i);
        set.swap(i, j);
    }
    set
}

struct TilingCorpus {
    instances: Vec<GridTilingInstance>,
    summary: String,
}

fn tiling_corpus() -> TilingCorpus {
    let mut instances = Vec::new();
    let mut k1 = 0;
    for n in 1..=3 {
        for set in small_tile_sets(n) {
            instances.push(GridTilingInstance::new(1, n, vec![set]).unwrap());
            k1 += 1;
        }
    }
    // k = 2, n = 1 has a single instance.
    instances.push(GridTilingInstance::new(2, 1, vec![vec![(1, 1)]; 4]).unwrap());
    let sets = small_tile_sets(2);
    let mut k2n2 = 0;
    for a in &sets {
        for b in &sets {
            for c in &sets {
                for d in &sets {
                    let cells = [a.clone(), b.clone(), c.clone(), d.clone()];
                    if canonical_2x2(&cells, 2) == code_2x2(&cells, 2) {
                        instances.push(GridTilingInstance::new(2, 2, cells.to_vec()).unwrap());
                        k2n2 += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x711e);
    let sampled = 500;
    for s in 0..sampled {
        let planted = s % 2 == 0;
        let rows: Vec<usize> = (0..2).map(|_| rng.gen_range(1..=3)).collect();
        let cols: Vec<usize> = (0..2).map(|_| rng.gen_range(1..=3)).collect();
        let cells = (0..4)
            .map(|c| {
                let must = planted.then(|| (rows[c / 2], cols[c % 2]));
                random_tile_set(&mut rng, 3, must)
            })
            .collect();
        instances.push(GridTilingInstance::new(2, 3, cells).unwrap());
    }
    instances.push(three_by_three_fixture());
    TilingCorpus {
        summary: format!(
            "k=1 exhaustive {k1}, k=2 n=1 1, k=2 n=2 exhaustive up to symmetry {k2n2}, k=2 n=3 sampled {sampled}, 3x3 fixture 1"
        ),
        instances,
    }
}

fn c1_tiling_equivalence() -> Result<String, String> {
    let corpus = tiling_corpus();
    let (mut yes, mut no) = (0, 0);
    for (idx, inst) in corpus.instances.iter().enumerate() {
        let solved = solve_grid_tiling(inst, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let out = grid_tiling_to_is(inst);
        let mis = max_independent_set(&out.graph).map_err(|e| e.to_string())?;
        let reaches = mis.len() >= out.target;
        ensure(solved.is_some() == reaches, || {
            format!(
                "instance {idx}: tiling solvable = {}, MIS {} vs target {}",
                solved.is_some(),
                mis.len(),
                out.target
            )
        })?;
        if let Some(sel) = solved {
            yes += 1;
            let set = lift_tiling_solution(inst, &sel, &out).map_err(|e| e.to_string())?;
            ensure(out.graph.is_independent(&set), || {
                format!("instance {idx}: lifted set not independent")
            })?;
            let back = extract_tiling_solution(inst, &out, &mis)
                .map_err(|e| format!("instance {idx}: {e}"))?;
            inst.check_selection(&back)
                .map_err(|e| format!("instance {idx}: {e}"))?;
        } else {
            no += 1;
        }
    }
    ensure(corpus.instances.len() >= 500, || {
        "fewer than 500 instances".into()
    })?;
    Ok(format!(
        "{} instances ({}), {yes} solvable, {no} unsolvable",
        corpus.instances.len(),
        corpus.summary
    ))
}

fn c2_three_by_three_fixture() -> Result<String, String> {
    let inst = three_by_three_fixture();
    let out = grid_tiling_to_is(&inst);
    ensure(out.graph.n() == 96, || {
        format!("{} vertices, expected 96", out.graph.n())
    })?;
    ensure(out.target == 36, || {
        format!("target {}, expected 36", out.target)
    })?;
    let mis = max_independent_set(&out.graph).map_err(|e| e.to_string())?;
    ensure(mis.len() == 36, || {
        format!("oracle MIS {}, expected 36", mis.len())
    })?;
    let sel = extract_tiling_solution(&inst, &out, &mis).map_err(|e| e.to_string())?;
    inst.check_selection(&sel).map_err(|e| e.to_string())?;
    let relifted = lift_tiling_solution(&inst, &sel, &out).map_err(|e| e.to_string())?;
    ensure(relifted == mis, || {
        "lift(extract(MIS)) differs from the MIS".into()
    })?;
    let shifted = Selection::new(3, (0..9).map(|c| (c / 3 + 4, c % 3 + 4)).collect());
    let lifted = lift_tiling_solution(&inst, &shifted, &out).map_err(|e| e.to_string())?;
    let again = extract_tiling_solution(&inst, &out, &lifted).map_err(|e| e.to_string())?;
    ensure(again == shifted, || {
        "extract(lift(shifted selection)) differs".into()
    })?;
    Ok(format!(
        "96 vertices, {} edges, target 36, MIS 36, extracted selection valid, round trips exact",
        out.graph.edge_count()
    ))
}

fn part_structure(out: &TilingReductionOutput) -> Result<(), String> {
    let g = &out.graph;
    for v in 0..g.n() {
        let mut parts: Vec<usize> = g.neighbors(v).iter().map(|u| out.part_of(u)).collect();
        parts.sort_unstable();
        parts.dedup();
        ensure(parts.len() <= 4, || {
            format!("vertex {} has neighbours in {} parts", v + 1, parts.len())
        })?;
        let own = out.part_of(v);
        for other in (own / 4) * 4..(own / 4) * 4 + 4 {
            if other == own {
                continue;
            }
            let members: Vec<usize> = (0..g.n()).filter(|&u| out.part_of(u) == other).collect();
            let own_members: Vec<usize> = (0..g.n()).filter(|&u| out.part_of(u) == own).collect();
            let linked = own_members
                .iter()
                .any(|&a| members.iter().any(|&b| g.has_edge(a, b)));
            if linked {
                let misses = members.iter().filter(|&&u| !g.has_edge(v, u)).count();
                ensure(misses <= 1, || {
                    format!("vertex {} misses {misses} vertices of a linked part", v + 1)
                })?;
            }
        }
    }
    Ok(())
}

fn c3_tiling_structure() -> Result<String, String> {
    let corpus = tiling_corpus();
    let mut values = Vec::new();
    for (idx, inst) in corpus.instances.iter().enumerate() {
        let out = grid_tiling_to_is(inst);
        part_structure(&out).map_err(|e| format!("instance {idx}: {e}"))?;
        let h = exact_index(&out.graph, PatternKind::HalfGraph, 8)
            .ok_or_else(|| format!("instance {idx}: half-graph index not certified below 8"))?;
        ensure(h <= 256, || format!("instance {idx}: half-graph index {h}"))?;
        values.push(h);
    }
    Ok(format!(
        "{} instances, neighbour parts <= 4, linked parts miss <= 1; half-graph index histogram {}",
        corpus.instances.len(),
        histogram(values)
    ))
}

// ---------------------------------------------------------------------------
// Multicoloured independent set to dominating set

fn mcis_instance(rng: &mut ChaCha8Rng) -> (Graph, Vec<Vec<usize>>) {
    let n = rng.gen_range(3..=9);
    let mut classes = vec![vec![0], vec![1], vec![2]];
    for v in 3..n {
        classes[rng.gen_range(0..3)].push(v);
    }
    let p: f64 = rng.gen_range(0.1..0.9);
    let class_of: Vec<usize> = {
        let mut c = vec![0; n];
        for (i, cl) in classes.iter().enumerate() {
            for &v in cl {
                c[v] = i;
            }
        }
        c
    };
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u] != class_of[v] && rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    (g, classes)
}

fn ds_structure(out: &DsReductionOutput) -> Result<(), String> {
    let g = &out.graph;
    ensure(g.is_independent(&out.w), || "W is not independent".into())?;
    for v in 0..g.n() {
        let mut touched = 0;
        for star in &out.class_star {
            let seen = star.iter().filter(|&&u| g.has_edge(v, u)).count();
            if seen > 0 {
                touched += 1;
                let misses = star.len() - seen;
                ensure(misses <= 3, || {
                    format!("vertex {} misses {misses} of a class set", v + 1)
                })?;
            }
        }
        ensure(touched <= 2, || {
            format!("vertex {} touches {touched} class sets", v + 1)
        })?;
    }
    Ok(())
}

fn c4_ds_reduction() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd5);
    let count = 320;
    let (mut yes, mut no) = (0, 0);
    let mut values = Vec::new();
    for idx in 0..count {
        let (g, classes) = mcis_instance(&mut rng);
        let p = ColorClassPartition::new(g.n(), classes.clone()).unwrap();
        let out = multicolored_is_to_ds(&g, &p);
        ensure(out.graph.n() == g.n() + 6 + g.edge_count(), || {
            format!("instance {idx}: vertex count")
        })?;
        let mcis =
            multicolored_independent_set(&g, &p, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        ensure(mcis.is_some() == brute_mcis(&g, &classes), || {
            format!("instance {idx}: MCIS oracle disagrees with brute force")
        })?;
        let ds =
            dominating_set_within(&out.graph, 3, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        ensure(mcis.is_some() == ds.is_some(), || {
            format!(
                "instance {idx}: MCIS {} but DS<=3 {}",
                mcis.is_some(),
                ds.is_some()
            )
        })?;
        if let (Some(sol), Some(ds)) = (mcis, ds) {
            yes += 1;
            let lifted = lift_mcis_to_ds(&out, &sol).map_err(|e| format!("instance {idx}: {e}"))?;
            verify_witness(&out.graph, &Witness::DominatingSet(lifted), Some(3))
                .map_err(|e| format!("instance {idx}: {e}"))?;
            ensure(ds.len() == 3, || {
                format!("instance {idx}: DS smaller than k")
            })?;
            let back = extract_ds_to_mcis(&out, &ds).map_err(|e| format!("instance {idx}: {e}"))?;
            ensure(g.is_independent(&back), || {
                format!("instance {idx}: extracted set not independent")
            })?;
            for (i, &v) in back.iter().enumerate() {
                ensure(p.class_of(v) == i, || {
                    format!("instance {idx}: extracted set misses a class")
                })?;
            }
        } else {
            no += 1;
        }
        ds_structure(&out).map_err(|e| format!("instance {idx}: {e}"))?;
        let h = exact_index(&out.graph, PatternKind::HalfGraph, 8)
            .ok_or_else(|| format!("instance {idx}: half-graph index not certified below 8"))?;
        ensure(h <= 16, || format!("instance {idx}: half-graph index {h}"))?;
        values.push(h);
    }
    Ok(format!(
        "{count} instances ({yes} feasible, {no} infeasible), structure holds; half-graph index histogram {}",
        histogram(values)
    ))
}

// ---------------------------------------------------------------------------
// Branching approximation

fn c5_branching() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb3);
    let mut hs = Vec::new();
    let mut max_nodes = 0;
    let mut violations = Vec::new();
    for idx in 0..200 {
        let n = rng.gen_range(1..=18);
        let p: f64 = rng.gen_range(0.05..0.95);
        let g = gnp(n, p, rng.gen());
        let h = exact_index(&g, PatternKind::HalfGraph, n / 2 + 1).expect("cap above n/2 is exact");
        let alpha = independence_number(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let r = approx_is_halfgraph(&g, None);
        ensure(g.is_independent(&r.result), || {
            format!("graph {idx}: result not independent")
        })?;
        ensure(!r.cap_hit, || format!("graph {idx}: cap hit without a cap"))?;
        if h == 0 {
            ensure(r.result.len() == n, || {
                format!("graph {idx}: edgeless graph not returned whole")
            })?;
        } else {
            if !pow_at_least(r.result.len() as u64, h as u32, alpha as u64) {
                violations.push(format!(
                    "graph {idx} (n = {n}): |I| = {}, h = {h}, alpha = {alpha}",
                    r.result.len()
                ));
            }
        }
        let envelope = (n as u128)
            .checked_pow(2 * h as u32 + 2)
            .unwrap_or(u128::MAX);
        ensure((r.nodes_explored as u128) <= envelope, || {
            format!("graph {idx}: {} nodes > n^(2h+2)", r.nodes_explored)
        })?;
        max_nodes = max_nodes.max(r.nodes_explored);
        hs.push(h);
    }
    ensure(violations.is_empty(), || {
        format!(
            "|I|^h >= alpha fails on {} of 200 graphs: {}",
            violations.len(),
            violations.join("; ")
        )
    })?;
    Ok(format!(
        "200 graphs, |I|^h >= alpha and nodes <= n^(2h+2) everywhere; h histogram {}; max nodes {max_nodes}",
        histogram(hs)
    ))
}

// ---------------------------------------------------------------------------
// Kernel and deletion rule

/// Random base graph on 3..=5 vertices, each vertex blown up into a clique
/// or an independent set; at most 18 vertices.
fn blow_up(rng: &mut ChaCha8Rng) -> Graph {
    let b = rng.gen_range(3..=5);
    let base = gnp(b, 0.5, rng.gen());
    let mut sizes: Vec<usize> = (0..b).map(|_| rng.gen_range(1..=6)).collect();
    while sizes.iter().sum::<usize>() > 18 {
        let i = sizes.iter().position(|&s| s > 1).unwrap();
        sizes[i] -= 1;
    }
    let mut owner = Vec::new();
    let mut clique = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        owner.extend(std::iter::repeat_n(i, s));
        clique.push(rng.gen_bool(0.5));
    }
    let n = owner.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (a, c) = (owner[u], owner[v]);
            if (a == c && clique[a]) || (a != c && base.has_edge(a, c)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn c6_kernel() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf9);
    let (mut deletions, mut early, mut yes) = (0, 0, 0);
    for idx in 0..300 {
        let g = if idx % 2 == 0 {
            blow_up(&mut rng)
        } else {
            let n = rng.gen_range(1..=18);
            gnp(n, rng.gen_range(0.05..0.95), rng.gen())
        };
        let t = rng.gen_range(2..=3);
        let k = rng.gen_range(1..=6);
        let opts = FptOptions {
            threshold: rng.gen_range(2..=4),
            ..FptOptions::default()
        };
        let ans = fpt_independent_set(&g, k, t, opts).map_err(|e| e.to_string())?;
        let alpha = brute_alpha(&g);
        ensure(ans.witness.is_some() == (alpha >= k), || {
            format!(
                "instance {idx}: fpt says {}, alpha = {alpha}, k = {k}",
                ans.witness.is_some()
            )
        })?;
        if let Some(w) = &ans.witness {
            yes += 1;
            verify_witness(&g, &Witness::IndependentSet(w.clone()), Some(k))
                .map_err(|e| format!("instance {idx}: {e}"))?;
        }
        deletions += ans.kernel.deletions.len();
        early += usize::from(ans.kernel.early_answer.is_some());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x12);
    let mut checked = 0;
    for idx in 0..100 {
        let k = rng.gen_range(2..=3);
        let q = rng.gen_range(1..=3);
        let s = (k - 1) * q + 2 + rng.gen_range(0..=1);
        let outside = rng.gen_range(0..=16 - s);
        let n = s + outside;
        let mut g = Graph::new(n);
        for u in 0..s {
            for v in u + 1..s {
                g.add_edge(u, v);
            }
        }
        for w in s..n {
            if rng.gen_bool(0.3) {
                for u in 0..s {
                    g.add_edge(w, u);
                }
            } else {
                let d = rng.gen_range(0..=q);
                let mut picked = 0;
                while picked < d {
                    let u = rng.gen_range(0..s);
                    if g.add_edge(w, u) {
                        picked += 1;
                    }
                }
            }
            for x in s..w {
                if rng.gen_bool(0.3) {
                    g.add_edge(w, x);
                }
            }
        }
        for w in s..n {
            let seen = (0..s).filter(|&u| g.has_edge(w, u)).count();
            ensure(seen <= q || seen == s, || {
                format!("construction {idx}: precondition broken")
            })?;
        }
        let before = brute_alpha(&g) >= k;
        for del in 0..s {
            let keep: Vec<usize> = (0..n).filter(|&v| v != del).collect();
            let h = g.induced_by(&keep).graph;
            let after = brute_alpha(&h) >= k;
            ensure(before == after, || {
                format!(
                    "construction {idx}: deleting {} changes the answer",
                    del + 1
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "300 instances agree ({yes} yes; {deletions} deletions, {early} early answers); deletion rule: 100 constructions, {checked} deletions answer-preserving"
    ))
}

// ---------------------------------------------------------------------------
// Indiscernible sequences

struct Fixture {
    graph: Graph,
    seq: Vec<usize>,
}

/// Graphs whose half-graph and co-matching indices are both at most 1:
/// stars and cliques plus isolated vertices, with a twin class as the
/// sequence.
fn indiscernible_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for r in 17..=24 {
        for iso in 0..=3 {
            let g = star(r).disjoint_union(&Graph::new(iso));
            out.push(Fixture {
                seq: (1..=r).collect(),
                graph: g,
            });
        }
    }
    for m in 17..=22 {
        for iso in 0..=3 {
            let g = Graph::complete(m).disjoint_union(&Graph::new(iso));
            out.push(Fixture {
                seq: (0..m).collect(),
                graph: g,
            });
        }
    }
    for iso in 17..=20 {
        for m in 1..=3 {
            let g = Graph::complete(m).disjoint_union(&Graph::new(iso));
            out.push(Fixture {
                seq: (m..m + iso).collect(),
                graph: g,
            });
        }
    }
    out
}

fn c7_dichotomies() -> Result<String, String> {
    let t = 2;
    let fixtures = indiscernible_fixtures();
    let mut used = 0;
    for (idx, f) in fixtures.iter().enumerate() {
        let g = &f.graph;
        let h = exact_index(g, PatternKind::HalfGraph, t + 1);
        let c = exact_index(g, PatternKind::CoMatching, t + 1);
        ensure(h.is_some_and(|h| h < t) && c.is_some_and(|c| c < t), || {
            format!("fixture {idx}: indices {h:?}, {c:?} not below {t}")
        })?;
        ensure(f.seq.len() > 8 * t, || {
            format!("fixture {idx}: sequence too short")
        })?;
        let verdict =
            is_indiscernible(g, &f.seq, &gamma_family(t), 10_000_000).map_err(|e| e.to_string())?;
        ensure(verdict == Indiscernibility::Indiscernible, || {
            format!("fixture {idx}: {verdict:?}")
        })?;
        let chi = [
            GammaFormula::new(GammaShape::Chi, t),
            GammaFormula::new(GammaShape::ChiStar, t),
        ];
        ensure(
            is_indiscernible(g, &f.seq, &chi, 10_000_000).map_err(|e| e.to_string())?
                == Indiscernibility::Indiscernible,
            || format!("fixture {idx}: not chi-indiscernible"),
        )?;
        for w in 0..g.n() {
            if f.seq.contains(&w) {
                continue;
            }
            let seen = f.seq.iter().filter(|&&v| g.has_edge(w, v)).count();
            let missed = f.seq.len() - seen;
            ensure(seen < 2 * t || missed == 0, || {
                format!(
                    "fixture {idx}: vertex {} sees {seen} of {}",
                    w + 1,
                    f.seq.len()
                )
            })?;
            ensure(seen < 2 * t || missed < 2 * t, || {
                format!("fixture {idx}: weak dichotomy fails at {}", w + 1)
            })?;
        }
        used += 1;
    }
    ensure(used >= 50, || format!("only {used} fixtures"))?;
    Ok(format!(
        "{used} fixtures with t = {t}, sequences of length 17..24, both dichotomies hold"
    ))
}

// ---------------------------------------------------------------------------
// Trichotomy

fn check_outcome(g: &Graph, k: usize, t: usize) -> Result<(), String> {
    let out = gyarfas(g, k, t).map_err(|e| e.to_string())?;
    verify_witness(g, &out.to_witness(), None).map_err(|e| format!("k={k} t={t}: {e}"))?;
    match &out {
        GyarfasOutcome::Clique(c) => ensure(c.len() == k, || format!("clique of size {}", c.len())),
        GyarfasOutcome::Path(p) => ensure(p.len() == t, || format!("path of length {}", p.len())),
        GyarfasOutcome::Coloring(c) => {
            let f = f_colors(k, t).map_err(|e| e.to_string())?;
            ensure(
                distinct_colors(c) as u64 <= f && c.iter().all(|&x| x < f),
                || format!("k={k} t={t}: {} colours > f = {f}", distinct_colors(c)),
            )
        }
    }
}

fn c8_trichotomy() -> Result<String, String> {
    for k in 1..=8 {
        for t in 1..=8 {
            let f = f_colors(k, t).map_err(|e| e.to_string())?;
            ensure(f < (t as u64).pow(k as u32), || {
                format!("f({k},{t}) = {f} >= t^k")
            })?;
        }
    }
    let params: Vec<(usize, usize)> = [2, 3, 4]
        .iter()
        .flat_map(|&k| [3, 4, 5, 6].map(|t| (k, t)))
        .collect();
    let all = nonisomorphic_graphs(8);
    let mut connected = 0;
    for level in &all[1..] {
        for g in level.iter().filter(|g| g.is_connected()) {
            for &(k, t) in &params {
                check_outcome(g, k, t)?;
            }
            connected += 1;
        }
    }
    ensure(connected == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117, || {
        format!("{connected} connected graphs enumerated")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a);
    let mut kinds = [0usize; 3];
    for _ in 0..500 {
        let n = rng.gen_range(1..=60);
        let g = gnp(n, rng.gen_range(0.02..0.6), rng.gen());
        for &(k, t) in &params {
            check_outcome(&g, k, t)?;
            kinds[match gyarfas(&g, k, t).unwrap() {
                GyarfasOutcome::Clique(_) => 0,
                GyarfasOutcome::Path(_) => 1,
                GyarfasOutcome::Coloring(_) => 2,
            }] += 1;
        }
    }
    Ok(format!(
        "f(k,t) < t^k for k,t <= 8; {connected} connected graphs on <= 8 vertices and 500 random graphs on <= 60, (k,t) in {{2,3,4}}x{{3,4,5,6}}; random outcomes: {} cliques, {} paths, {} colourings",
        kinds[0], kinds[1], kinds[2]
    ))
}

// ---------------------------------------------------------------------------
// Clique / independent set approximation

fn c9_approximations() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc3);
    let mut ms = Vec::new();
    for idx in 0..100 {
        let n = rng.gen_range(1..=14);
        let g = gnp(n, rng.gen_range(0.05..0.95), rng.gen());
        let m = exact_index(&g, PatternKind::Matching, 8).expect("n <= 14 keeps the index below 8");
        let c =
            exact_index(&g, PatternKind::CoMatching, 8).expect("n <= 14 keeps the index below 8");
        let clique = approx_clique(&g, m).map_err(|e| format!("graph {idx}: {e}"))?;
        ensure(g.is_clique(&clique) && !clique.is_empty(), || {
            format!("graph {idx}: bad clique")
        })?;
        let omega = brute_omega(&g);
        ensure(
            pow_at_least(2 * m as u64 + 2, clique.len() as u32 + 2, omega as u64),
            || {
                format!(
                    "graph {idx}: |C| = {}, m = {m}, omega = {omega}",
                    clique.len()
                )
            },
        )?;
        let is = approx_is_comatching(&g, c).map_err(|e| format!("graph {idx}: {e}"))?;
        ensure(g.is_independent(&is) && !is.is_empty(), || {
            format!("graph {idx}: bad independent set")
        })?;
        let alpha = brute_alpha(&g);
        ensure(
            pow_at_least(2 * c as u64 + 2, is.len() as u32 + 2, alpha as u64),
            || format!("graph {idx}: |I| = {}, c = {c}, alpha = {alpha}", is.len()),
        )?;
        ms.push(m);
    }
    Ok(format!(
        "100 graphs, both guarantees hold; matching index histogram {}",
        histogram(ms)
    ))
}

// ---------------------------------------------------------------------------
// Dualities

fn c10_dualities() -> Result<String, String> {
    let all = nonisomorphic_graphs(7);
    let mut count = 0;
    for level in &all[1..] {
        for g in level {
            let c = g.complement();
            let m = exact_index(g, PatternKind::Matching, 8);
            let cm = exact_index(&c, PatternKind::CoMatching, 8);
            ensure(m.is_some() && m == cm, || {
                format!("{g:?}: matching {m:?} vs co-matching of complement {cm:?}")
            })?;
            let h = exact_index(g, PatternKind::HalfGraph, 8).unwrap();
            let hc = exact_index(&c, PatternKind::HalfGraph, 8).unwrap();
            ensure(h.abs_diff(hc) <= 1, || {
                format!("{g:?}: half-graph {h} vs {hc}")
            })?;
            count += 1;
        }
    }
    ensure(count == 1 + 2 + 4 + 11 + 34 + 156 + 1044, || {
        format!("{count} graphs enumerated")
    })?;
    Ok(format!("{count} non-isomorphic graphs on 1..7 vertices"))
}

// ---------------------------------------------------------------------------
// Unit squares

fn c11_unit_squares() -> Result<String, String> {
    let mut values = Vec::new();
    let claw5 = star(5);
    let co3k2 = co_three_k2();
    for seed in 0..100u64 {
        let n = 5 + (seed as usize * 7) % 26;
        let side = [2.0, 3.0, 4.0, 6.0][seed as usize % 4];
        let g = unit_square_graph(&unit_square_centers(n, side, seed));
        ensure(contains_induced(&g, &claw5).unwrap().is_none(), || {
            format!("seed {seed}: induced K1,5")
        })?;
        ensure(contains_induced(&g, &co3k2).unwrap().is_none(), || {
            format!("seed {seed}: induced co-3K2")
        })?;
        values.push(pattern_index(&g, PatternKind::CoMatching, 6));
    }
    let exact: Vec<usize> = values.iter().filter_map(|v| v.exact()).collect();
    ensure(exact.len() == values.len(), || {
        format!("{} graphs reach the cap of 6", values.len() - exact.len())
    })?;
    Ok(format!(
        "100 graphs on <= 30 vertices, no induced K1,5 or co-3K2; co-matching index histogram {}",
        histogram(exact)
    ))
}

/// Criteria that fail on faithful implementations. They still run and print
/// FAIL; only failures outside this list make the target exit non-zero.
/// Criterion 5: the branching bound does not hold at half-graph index 1,
/// e.g. a star with two leaves plus an isolated vertex gives 2 < alpha = 3.
const EXPECTED_FAILURES: &[usize] = &[5];

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("grid tiling equivalence", c1_tiling_equivalence),
        ("3x3 fixture", c2_three_by_three_fixture),
        ("tiling graph structure", c3_tiling_structure),
        ("dominating set reduction", c4_ds_reduction),
        ("branching guarantee", c5_branching),
        ("kernel and deletion rule", c6_kernel),
        ("indiscernible dichotomies", c7_dichotomies),
        ("trichotomy outcomes", c8_trichotomy),
        (
            "clique and independent set approximation",
            c9_approximations,
        ),
        ("index dualities", c10_dualities),
        ("unit square exclusions", c11_unit_squares),
    ];
    let wanted: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    panic::set_hook(Box::new(|_| {}));
    let (mut failed, mut expected) = (0, 0);
    for (i, (name, check)) in criteria.iter().enumerate() {
        let num = i + 1;
        if !wanted.is_empty() && !wanted.contains(&num) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {num:>2} {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                let note = if EXPECTED_FAILURES.contains(&num) {
                    expected += 1;
                    " [expected failure]"
                } else {
                    failed += 1;
                    ""
                };
                println!("FAIL criterion {num:>2} {name} ({secs:.1}s){note}: {detail}");
            }
        }
    }
    if expected > 0 {
        println!("{expected} expected failure(s)");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
