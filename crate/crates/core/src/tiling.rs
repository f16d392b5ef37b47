//! Grid Tiling instances, selections and their text formats.
//!
//! Cells are `(i, j)` with `i` the row and `j` the column, both 1-based in
//! text and 0-based in memory. A selection is a solution when horizontally
//! adjacent cells `(i, j)`, `(i, j + 1)` pick tiles with equal first
//! components and vertically adjacent cells `(i, j)`, `(i + 1, j)` pick tiles
//! with equal second components.
//!
//! ```text
//! gridtiling <k> <n>
//! cell <i> <j> : <a>,<b> <a>,<b> ...
//! ```

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::oracles::{Budget, BudgetExceeded};

/// A tile `(a, b)` with `1 <= a, b <= n`.
pub type Tile = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTilingInstance {
    k: usize,
    n: usize,
    /// Row-major, `tiles[i * k + j]` is the tile set of cell `(i, j)`.
    tiles: Vec<Vec<Tile>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("grid size must be positive")]
    EmptyGrid,
    #[error("expected {expected} cells, got {got}")]
    CellCount { expected: usize, got: usize },
    #[error("cell ({i}, {j}) has no tiles")]
    EmptyCell { i: usize, j: usize },
    #[error("cell ({i}, {j}): tile ({a}, {b}) outside [{n}]^2")]
    TileOutOfRange {
        i: usize,
        j: usize,
        a: usize,
        b: usize,
        n: usize,
    },
    #[error("cell ({i}, {j}): tile ({a}, {b}) listed twice")]
    DuplicateTile {
        i: usize,
        j: usize,
        a: usize,
        b: usize,
    },
}

impl GridTilingInstance {
    /// `tiles` is row-major over the `k * k` cells.
    pub fn new(k: usize, n: usize, tiles: Vec<Vec<Tile>>) -> Result<Self, InstanceError> {
        if k == 0 {
            return Err(InstanceError::EmptyGrid);
        }
        if tiles.len() != k * k {
            return Err(InstanceError::CellCount {
                expected: k * k,
                got: tiles.len(),
            });
        }
        for (c, set) in tiles.iter().enumerate() {
            let (i, j) = (c / k + 1, c % k + 1);
            if set.is_empty() {
                return Err(InstanceError::EmptyCell { i, j });
            }
            for (idx, &(a, b)) in set.iter().enumerate() {
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(InstanceError::TileOutOfRange { i, j, a, b, n });
                }
                if set[..idx].contains(&(a, b)) {
                    return Err(InstanceError::DuplicateTile { i, j, a, b });
                }
            }
        }
        Ok(Self { k, n, tiles })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tiles of cell `(i, j)` (0-based), in input order.
    pub fn cell(&self, i: usize, j: usize) -> &[Tile] {
        &self.tiles[i * self.k + j]
    }

    /// All cells row-major with their tile sets.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &[Tile])> + '_ {
        self.tiles
            .iter()
            .enumerate()
            .map(|(c, t)| ((c / self.k, c % self.k), t.as_slice()))
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.iter().map(Vec::len).sum()
    }

    /// Checks membership and agreement of `sel`.
    pub fn check_selection(&self, sel: &Selection) -> Result<(), SelectionError> {
        if sel.k != self.k {
            return Err(SelectionError::WrongSize {
                expected: self.k,
                got: sel.k,
            });
        }
        for ((i, j), set) in self.cells() {
            let tile = sel.get(i, j);
            if !set.contains(&tile) {
                return Err(SelectionError::NotInCell {
                    i: i + 1,
                    j: j + 1,
                    tile,
                });
            }
        }
        for i in 0..self.k {
            for j in 0..self.k {
                let here = sel.get(i, j);
                if j + 1 < self.k && sel.get(i, j + 1).0 != here.0 {
                    return Err(SelectionError::Disagree {
                        cell: (i + 1, j + 1),
                        neighbor: (i + 1, j + 2),
                        component: Component::First,
                    });
                }
                if i + 1 < self.k && sel.get(i + 1, j).1 != here.1 {
                    return Err(SelectionError::Disagree {
                        cell: (i + 1, j + 1),
                        neighbor: (i + 2, j + 1),
                        component: Component::Second,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    First,
    Second,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::First => "first",
            Component::Second => "second",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("selection is for a {got}x{got} grid, instance is {expected}x{expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("cell ({i}, {j}): tile {tile:?} is not in the cell")]
    NotInCell { i: usize, j: usize, tile: Tile },
    #[error("cells {cell:?} and {neighbor:?} disagree on the {component} component")]
    Disagree {
        cell: (usize, usize),
        neighbor: (usize, usize),
        component: Component,
    },
}

/// One tile per cell, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    k: usize,
    choice: Vec<Tile>,
}

impl Selection {
    pub fn new(k: usize, choice: Vec<Tile>) -> Self {
        assert_eq!(choice.len(), k * k, "selection needs one tile per cell");
        Self { k, choice }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> Tile {
        self.choice[i * self.k + j]
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.choice
    }
}

impl fmt::Display for Selection {
    /// `selection <k>` then one `tile <i> <j> : <a>,<b>` line per cell.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selection {}", self.k)?;
        for (c, &(a, b)) in self.choice.iter().enumerate() {
            writeln!(f, "tile {} {} : {a},{b}", c / self.k + 1, c % self.k + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header")]
    MissingHeader,
    #[error("cell ({i}, {j}) missing")]
    MissingCell { i: usize, j: usize },
    #[error(transparent)]
    Invalid(#[from] InstanceError),
}

fn syntax(line: usize, message: impl Into<String>) -> TilingParseError {
    TilingParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_tile(tok: &str, line: usize) -> Result<Tile, TilingParseError> {
    let (a, b) = tok
        .split_once(',')
        .ok_or_else(|| syntax(line, format!("bad tile `{tok}`, expected <a>,<b>")))?;
    let a = a
        .parse()
        .map_err(|_| syntax(line, format!("bad tile `{tok}`")))?;
    let b = b
        .parse()
        .map_err(|_| syntax(line, format!("bad tile `{tok}`")))?;
    Ok((a, b))
}

fn parse_index(tok: Option<&str>, line: usize, k: usize) -> Result<usize, TilingParseError> {
    let v: usize = tok
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| syntax(line, "expected cell coordinates"))?;
    if v == 0 || v > k {
        return Err(syntax(line, format!("cell coordinate {v} outside 1..{k}")));
    }
    Ok(v - 1)
}

/// Parses the `gridtiling` text format. Lines starting with `c` are comments.
pub fn parse_grid_tiling(text: &str) -> Result<GridTilingInstance, TilingParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut cells: Vec<Option<Vec<Tile>>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("gridtiling") => {
                if header.is_some() {
                    return Err(syntax(line, "second header"));
                }
                let k = toks.next().and_then(|t| t.parse().ok());
                let n = toks.next().and_then(|t| t.parse().ok());
                match (k, n, toks.next()) {
                    (Some(k), Some(n), None) if k > 0 => {
                        header = Some((k, n));
                        cells = vec![None; k * k];
                    }
                    _ => return Err(syntax(line, "expected `gridtiling <k> <n>`")),
                }
            }
            Some("cell") => {
                let (k, _) = header.ok_or_else(|| syntax(line, "cell before header"))?;
                let i = parse_index(toks.next(), line, k)?;
                let j = parse_index(toks.next(), line, k)?;
                if toks.next() != Some(":") {
                    return Err(syntax(line, "expected `:` after cell coordinates"));
                }
                let tiles = toks
                    .map(|t| parse_tile(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                let slot = &mut cells[i * k + j];
                if slot.is_some() {
                    return Err(syntax(
                        line,
                        format!("cell ({}, {}) listed twice", i + 1, j + 1),
                    ));
                }
                *slot = Some(tiles);
            }
            _ => return Err(syntax(line, format!("unrecognised line `{trimmed}`"))),
        }
    }
    let (k, n) = header.ok_or(TilingParseError::MissingHeader)?;
    let mut tiles = Vec::with_capacity(k * k);
    for (c, cell) in cells.into_iter().enumerate() {
        tiles.push(cell.ok_or(TilingParseError::MissingCell {
            i: c / k + 1,
            j: c % k + 1,
        })?);
    }
    Ok(GridTilingInstance::new(k, n, tiles)?)
}

pub fn serialize_grid_tiling(inst: &GridTilingInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gridtiling {} {}", inst.k, inst.n);
    for ((i, j), set) in inst.cells() {
        let _ = write!(out, "cell {} {} :", i + 1, j + 1);
        for (a, b) in set {
            let _ = write!(out, " {a},{b}");
        }
        out.push('\n');
    }
    out
}

/// Parses the `selection` text written by `Selection`'s `Display`.
pub fn parse_selection(text: &str) -> Result<Selection, TilingParseError> {
    let mut k: Option<usize> = None;
    let mut choice: Vec<Option<Tile>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("selection") => {
                let size = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&s| s > 0)
                    .ok_or_else(|| syntax(line, "expected `selection <k>`"))?;
                k = Some(size);
                choice = vec![None; size * size];
            }
            Some("tile") => {
                let size = k.ok_or_else(|| syntax(line, "tile before header"))?;
                let i = parse_index(toks.next(), line, size)?;
                let j = parse_index(toks.next(), line, size)?;
                if toks.next() != Some(":") {
                    return Err(syntax(line, "expected `:`"));
                }
                let tile = parse_tile(
                    toks.next().ok_or_else(|| syntax(line, "missing tile"))?,
                    line,
                )?;
                choice[i * size + j] = Some(tile);
            }
            _ => return Err(syntax(line, format!("unrecognised line `{trimmed}`"))),
        }
    }
    let k = k.ok_or(TilingParseError::MissingHeader)?;
    let tiles = choice
        .into_iter()
        .enumerate()
        .map(|(c, t)| {
            t.ok_or(TilingParseError::MissingCell {
                i: c / k + 1,
                j: c % k + 1,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Selection::new(k, tiles))
}

/// Finds a Grid Tiling solution by row-major backtracking, trying tiles in
/// input order and checking agreement with the left and upper neighbours.
/// `Ok(None)` certifies that no solution exists.
pub fn solve_grid_tiling(
    inst: &GridTilingInstance,
    budget: u64,
) -> Result<Option<Selection>, BudgetExceeded> {
    let k = inst.k;
    let mut budget = Budget::new(budget);
    let mut chosen: Vec<Tile> = Vec::with_capacity(k * k);

    fn go(
        inst: &GridTilingInstance,
        chosen: &mut Vec<Tile>,
        budget: &mut Budget,
    ) -> Result<bool, BudgetExceeded> {
        budget.tick()?;
        let k = inst.k;
        let c = chosen.len();
        if c == k * k {
            return Ok(true);
        }
        let (i, j) = (c / k, c % k);
        for &tile in inst.cell(i, j) {
            if j > 0 && chosen[c - 1].0 != tile.0 {
                continue;
            }
            if i > 0 && chosen[c - k].1 != tile.1 {
                continue;
            }
            chosen.push(tile);
            if go(inst, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    if go(inst, &mut chosen, &mut budget)? {
        Ok(Some(Selection::new(k, chosen)))
    } else {
        Ok(None)
    }
}

/// The 3x3 instance with n = 6 whose solution is `s(i, j) = (i + 3, j + 3)`.
pub fn three_by_three_fixture() -> GridTilingInstance {
    let tiles = vec![
        vec![(4, 4), (5, 4)],
        vec![(4, 5), (4, 4), (5, 5)],
        vec![(4, 6), (5, 4)],
        vec![(5, 4), (6, 4), (5, 5)],
        vec![(5, 5), (4, 5), (5, 4), (6, 5)],
        vec![(5, 6), (4, 6), (6, 6)],
        vec![(6, 4), (6, 5)],
        vec![(6, 5), (5, 5), (6, 6)],
        vec![(6, 6), (5, 5)],
    ];
    GridTilingInstance::new(3, 6, tiles).expect("fixture is valid")
}
