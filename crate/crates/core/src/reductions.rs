//! Two hardness constructions with solution transfer in both directions:
//! Grid Tiling to Independent Set, and Multicoloured Independent Set to
//! Dominating Set.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::io::serialize_graph_with_comments;
use crate::oracles::ColorClassPartition;
use crate::tiling::{GridTilingInstance, Selection, SelectionError, Tile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Up,
    Right,
    Down,
    Left,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Right,
        Direction::Down,
        Direction::Left,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "U",
            Direction::Right => "R",
            Direction::Down => "D",
            Direction::Left => "L",
        })
    }
}

/// What a vertex of the tiling graph stands for. `cell` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingLabel {
    pub direction: Direction,
    pub cell: (usize, usize),
    pub tile: Tile,
}

#[derive(Debug, Clone)]
pub struct TilingReductionOutput {
    pub graph: Graph,
    pub target: usize,
    pub labels: Vec<TilingLabel>,
    k: usize,
    /// First vertex of each cell's block, row-major.
    cell_start: Vec<usize>,
    cell_len: Vec<usize>,
}

impl TilingReductionOutput {
    /// Vertex for `direction` and the `tile_idx`-th tile of cell `(i, j)`.
    pub fn vertex(&self, direction: Direction, i: usize, j: usize, tile_idx: usize) -> usize {
        let c = i * self.k + j;
        self.cell_start[c] + direction.index() * self.cell_len[c] + tile_idx
    }

    /// The part (`direction`, cell) a vertex belongs to, as an index in
    /// `0..4k^2`.
    pub fn part_of(&self, v: usize) -> usize {
        let l = &self.labels[v];
        (l.cell.0 * self.k + l.cell.1) * 4 + l.direction.index()
    }

    pub fn label_comments(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                format!(
                    "label {} {} {} {} {} {}",
                    v + 1,
                    l.direction,
                    l.cell.0 + 1,
                    l.cell.1 + 1,
                    l.tile.0,
                    l.tile.1
                )
            })
            .collect();
        out.push(format!("target {}", self.target));
        out
    }

    pub fn to_text(&self) -> String {
        serialize_graph_with_comments(&self.graph, &self.label_comments())
    }
}

/// Builds the Independent Set instance with target `4k^2`.
///
/// Every cell contributes cliques `U, R, D, L`, one vertex per tile. Inside a
/// cell, the pairs `U-R`, `R-D`, `D-L`, `L-U` are joined by co-matchings on
/// the tiles. Across cells, `r(i, j, a)` meets `l(i, j + 1, a')` iff the first
/// components differ and `d(i, j, a)` meets `u(i + 1, j, a')` iff the second
/// components differ. Numbering: cells row-major, then directions
/// `U, R, D, L`, then tiles in input order.
pub fn grid_tiling_to_is(inst: &GridTilingInstance) -> TilingReductionOutput {
    let k = inst.k();
    let mut labels = Vec::with_capacity(4 * inst.tile_count());
    let mut cell_start = Vec::with_capacity(k * k);
    let mut cell_len = Vec::with_capacity(k * k);
    for ((i, j), tiles) in inst.cells() {
        cell_start.push(labels.len());
        cell_len.push(tiles.len());
        for direction in Direction::ALL {
            for &tile in tiles {
                labels.push(TilingLabel {
                    direction,
                    cell: (i, j),
                    tile,
                });
            }
        }
    }
    let mut out = TilingReductionOutput {
        graph: Graph::new(labels.len()),
        target: 4 * k * k,
        labels,
        k,
        cell_start,
        cell_len,
    };

    let mut edges = Vec::new();
    for ((i, j), tiles) in inst.cells() {
        let s = tiles.len();
        for d in Direction::ALL {
            for a in 0..s {
                for b in a + 1..s {
                    edges.push((out.vertex(d, i, j, a), out.vertex(d, i, j, b)));
                }
            }
        }
        for (d1, d2) in [
            (Direction::Up, Direction::Right),
            (Direction::Right, Direction::Down),
            (Direction::Down, Direction::Left),
            (Direction::Left, Direction::Up),
        ] {
            for a in 0..s {
                for b in 0..s {
                    if a != b {
                        edges.push((out.vertex(d1, i, j, a), out.vertex(d2, i, j, b)));
                    }
                }
            }
        }
        if j + 1 < k {
            for (a, ta) in tiles.iter().enumerate() {
                for (b, tb) in inst.cell(i, j + 1).iter().enumerate() {
                    if ta.0 != tb.0 {
                        edges.push((
                            out.vertex(Direction::Right, i, j, a),
                            out.vertex(Direction::Left, i, j + 1, b),
                        ));
                    }
                }
            }
        }
        if i + 1 < k {
            for (a, ta) in tiles.iter().enumerate() {
                for (b, tb) in inst.cell(i + 1, j).iter().enumerate() {
                    if ta.1 != tb.1 {
                        edges.push((
                            out.vertex(Direction::Down, i, j, a),
                            out.vertex(Direction::Up, i + 1, j, b),
                        ));
                    }
                }
            }
        }
    }
    for (u, v) in edges {
        out.graph.add_edge(u, v);
    }
    out
}

/// The four vertices of every cell's selected tile, sorted.
pub fn lift_tiling_solution(
    inst: &GridTilingInstance,
    sel: &Selection,
    out: &TilingReductionOutput,
) -> Result<Vec<usize>, SelectionError> {
    inst.check_selection(sel)?;
    let mut set = Vec::with_capacity(out.target);
    for ((i, j), tiles) in inst.cells() {
        let idx = tiles
            .iter()
            .position(|&t| t == sel.get(i, j))
            .expect("checked membership");
        for d in Direction::ALL {
            set.push(out.vertex(d, i, j, idx));
        }
    }
    set.sort_unstable();
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingExtractError {
    #[error("set has {got} vertices, need {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("vertex {0} outside the reduction graph")]
    OutOfRange(usize),
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("cell ({}, {}) does not hold one vertex per direction on a common tile", .0 .0, .0 .1)]
    CellNotUniform((usize, usize)),
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("extracted selection is invalid, construction bug: {0}")]
    Inconsistent(SelectionError),
}

/// Reads the selection off an independent set of size `4k^2`.
///
/// Labels in diagnostics are 1-based.
pub fn extract_tiling_solution(
    inst: &GridTilingInstance,
    out: &TilingReductionOutput,
    set: &[usize],
) -> Result<Selection, TilingExtractError> {
    if set.len() != out.target {
        return Err(TilingExtractError::WrongSize {
            expected: out.target,
            got: set.len(),
        });
    }
    let n = out.graph.n();
    let mut seen = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(TilingExtractError::OutOfRange(v + 1));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(TilingExtractError::Repeated(v + 1));
        }
    }

    let k = inst.k();
    let mut per_part: Vec<Vec<usize>> = vec![Vec::new(); 4 * k * k];
    for &v in set {
        per_part[out.part_of(v)].push(v);
    }
    let mut choice = Vec::with_capacity(k * k);
    for c in 0..k * k {
        let cell = (c / k, c % k);
        let parts = &per_part[4 * c..4 * c + 4];
        let uniform = parts.iter().all(|p| p.len() == 1)
            && parts
                .iter()
                .all(|p| out.labels[p[0]].tile == out.labels[parts[0][0]].tile);
        if !uniform {
            return Err(TilingExtractError::CellNotUniform((cell.0 + 1, cell.1 + 1)));
        }
        choice.push(out.labels[parts[0][0]].tile);
    }
    for (x, &u) in set.iter().enumerate() {
        for &v in &set[x + 1..] {
            if out.graph.has_edge(u, v) {
                return Err(TilingExtractError::NotIndependent(
                    u.min(v) + 1,
                    u.max(v) + 1,
                ));
            }
        }
    }
    let sel = Selection::new(k, choice);
    inst.check_selection(&sel)
        .map_err(TilingExtractError::Inconsistent)?;
    Ok(sel)
}

/// What a vertex of the dominating-set graph stands for. Indices are
/// 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsLabel {
    Original(usize),
    X(usize),
    Y(usize),
    /// Edge vertex for source edge `u < v`.
    W(usize, usize),
}

#[derive(Debug, Clone)]
pub struct DsReductionOutput {
    pub graph: Graph,
    pub target: usize,
    pub labels: Vec<DsLabel>,
    /// `class_star[i]` is `V_i` plus the guards `x_i, y_i`, sorted.
    pub class_star: Vec<Vec<usize>>,
    /// The edge vertices, in source edge order.
    pub w: Vec<usize>,
    source: Graph,
    partition: ColorClassPartition,
}

impl DsReductionOutput {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn partition(&self) -> &ColorClassPartition {
        &self.partition
    }

    pub fn x(&self, i: usize) -> usize {
        self.source.n() + 2 * i
    }

    pub fn y(&self, i: usize) -> usize {
        self.source.n() + 2 * i + 1
    }

    pub fn label_comments(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| match *l {
                DsLabel::Original(u) => format!("label {} orig {}", v + 1, u + 1),
                DsLabel::X(i) => format!("label {} x {}", v + 1, i + 1),
                DsLabel::Y(i) => format!("label {} y {}", v + 1, i + 1),
                DsLabel::W(a, b) => format!("label {} w {} {}", v + 1, a + 1, b + 1),
            })
            .collect();
        out.push(format!("target {}", self.target));
        out
    }

    pub fn to_text(&self) -> String {
        serialize_graph_with_comments(&self.graph, &self.label_comments())
    }
}

/// Builds the Dominating Set instance with target `k`.
///
/// Source vertices keep their numbers but lose their edges; each class
/// becomes a clique; guards `x_i, y_i` see exactly `V_i`; every source edge
/// `uv` between two different classes `V_i, V_j` gets a vertex `w_uv` seeing
/// `(V_i ∪ V_j) \ {u, v}`. Edges inside a class get no edge vertex: they
/// cannot occur in a multicoloured solution, and a `w` for them would wrongly
/// forbid picking their endpoints. Numbering: source vertices, then
/// `x_1, y_1, ..., x_k, y_k`, then edge vertices in lexicographic edge order.
pub fn multicolored_is_to_ds(g: &Graph, p: &ColorClassPartition) -> DsReductionOutput {
    assert_eq!(
        p.classes().iter().map(Vec::len).sum::<usize>(),
        g.n(),
        "partition must cover the graph"
    );
    let n = g.n();
    let k = p.k();
    let cross: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| p.class_of(u) != p.class_of(v))
        .collect();
    let total = n + 2 * k + cross.len();
    let mut labels: Vec<DsLabel> = (0..n).map(DsLabel::Original).collect();
    for i in 0..k {
        labels.push(DsLabel::X(i));
        labels.push(DsLabel::Y(i));
    }
    labels.extend(cross.iter().map(|&(u, v)| DsLabel::W(u, v)));

    let mut graph = Graph::new(total);
    let mut class_star = Vec::with_capacity(k);
    for (i, class) in p.classes().iter().enumerate() {
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                graph.add_edge(u, v);
            }
            graph.add_edge(u, n + 2 * i);
            graph.add_edge(u, n + 2 * i + 1);
        }
        let mut star = class.clone();
        star.extend([n + 2 * i, n + 2 * i + 1]);
        star.sort_unstable();
        class_star.push(star);
    }
    let mut w = Vec::with_capacity(cross.len());
    for (idx, &(u, v)) in cross.iter().enumerate() {
        let we = n + 2 * k + idx;
        w.push(we);
        for &c in &[p.class_of(u), p.class_of(v)] {
            for &x in p.class(c) {
                if x != u && x != v {
                    graph.add_edge(we, x);
                }
            }
        }
    }
    DsReductionOutput {
        graph,
        target: k,
        labels,
        class_star,
        w,
        source: g.clone(),
        partition: p.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DsTransferError {
    #[error("set has {got} vertices, need {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("class {0} has no chosen vertex")]
    MissingClass(usize),
    #[error("source vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {0} is not dominated")]
    NotDominated(usize),
    #[error("construction bug: {0}")]
    Inconsistent(String),
}

fn check_distinct(set: &[usize], n: usize) -> Result<(), DsTransferError> {
    let mut seen = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(DsTransferError::OutOfRange(v + 1));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(DsTransferError::Repeated(v + 1));
        }
    }
    Ok(())
}

fn first_undominated(g: &Graph, set: &[usize]) -> Option<usize> {
    let mut covered = vec![false; g.n()];
    for &v in set {
        covered[v] = true;
        for u in g.neighbors(v).iter() {
            covered[u] = true;
        }
    }
    covered.iter().position(|c| !c)
}

/// Maps a multicoloured independent set of the source to a dominating set of
/// size `k`: the same vertices, sorted.
pub fn lift_mcis_to_ds(
    out: &DsReductionOutput,
    sol: &[usize],
) -> Result<Vec<usize>, DsTransferError> {
    let k = out.target;
    check_distinct(sol, out.source.n())?;
    let mut hit = vec![false; k];
    for &v in sol {
        hit[out.partition.class_of(v)] = true;
    }
    if let Some(i) = hit.iter().position(|h| !h) {
        return Err(DsTransferError::MissingClass(i + 1));
    }
    if sol.len() != k {
        return Err(DsTransferError::WrongSize {
            expected: k,
            got: sol.len(),
        });
    }
    for (a, &u) in sol.iter().enumerate() {
        for &v in &sol[a + 1..] {
            if out.source.has_edge(u, v) {
                return Err(DsTransferError::NotIndependent(u.min(v) + 1, u.max(v) + 1));
            }
        }
    }
    let mut ds = sol.to_vec();
    ds.sort_unstable();
    if let Some(v) = first_undominated(&out.graph, &ds) {
        return Err(DsTransferError::Inconsistent(format!(
            "lifted set leaves vertex {} undominated",
            v + 1
        )));
    }
    Ok(ds)
}

/// Maps a dominating set of size `k` back to a multicoloured independent set,
/// listed in class order.
///
/// The guards force one pick per `V_i*`. Where the pick is a guard (or there
/// is none in `V_i`), the smallest vertex of `V_i` non-adjacent to the other
/// picks is substituted.
pub fn extract_ds_to_mcis(
    out: &DsReductionOutput,
    ds: &[usize],
) -> Result<Vec<usize>, DsTransferError> {
    let k = out.target;
    if ds.len() != k {
        return Err(DsTransferError::WrongSize {
            expected: k,
            got: ds.len(),
        });
    }
    check_distinct(ds, out.graph.n())?;
    if let Some(v) = first_undominated(&out.graph, ds) {
        return Err(DsTransferError::NotDominated(v + 1));
    }
    let mut picked: Vec<Option<usize>> = vec![None; k];
    for &v in ds {
        if let DsLabel::Original(u) = out.labels[v] {
            let c = out.partition.class_of(u);
            if picked[c].is_some() {
                return Err(DsTransferError::Inconsistent(format!(
                    "class {} holds two picks of a size-k dominating set",
                    c + 1
                )));
            }
            picked[c] = Some(u);
        }
    }
    for i in 0..k {
        if picked[i].is_some() {
            continue;
        }
        let sub = out
            .partition
            .class(i)
            .iter()
            .copied()
            .find(|&u| picked.iter().flatten().all(|&o| !out.source.has_edge(u, o)));
        match sub {
            Some(u) => picked[i] = Some(u),
            None => {
                return Err(DsTransferError::Inconsistent(format!(
                    "no substitute in class {}",
                    i + 1
                )))
            }
        }
    }
    let sol: Vec<usize> = picked.into_iter().map(|p| p.expect("filled")).collect();
    for (a, &u) in sol.iter().enumerate() {
        for &v in &sol[a + 1..] {
            if out.source.has_edge(u, v) {
                return Err(DsTransferError::Inconsistent(format!(
                    "extracted vertices {} and {} are adjacent",
                    u.min(v) + 1,
                    u.max(v) + 1
                )));
            }
        }
    }
    Ok(sol)
}
