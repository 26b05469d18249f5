//! The linear-time nice RCL-cover pipeline.
//!
//! 1. Scan the by-column list with a cursor, cutting the bounding box into
//!    vertical bands `(c1, c2]` whose right edge `c2` is an almost nice column.
//! 2. Distribute the by-row list over those bands in one pass, giving each
//!    band its own by-row list.
//! 3. Scan each band's by-row list, cutting it into rectangles `(r1, r2]`
//!    whose bottom edge is an almost nice row.
//!
//! All `sqrt(n)` comparisons go through [`SqrtGate`], which decides them
//! exactly in integer arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridGraph, VertexCoord};
use crate::sorting::{self, ScanCursor, SortOrder, SortedVertexList};

/// Exact comparisons against integer multiples of `sqrt(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SqrtGate {
    n: u64,
}

impl SqrtGate {
    pub fn new(n: usize) -> Self {
        Self { n: n as u64 }
    }

    pub fn n(self) -> u64 {
        self.n
    }

    /// Smallest `s` with `s * s >= n`.
    pub fn sqrt_ceil(self) -> usize {
        let mut s = (self.n as f64).sqrt() as u64;
        while s * s < self.n {
            s += 1;
        }
        while s > 0 && (s - 1) * (s - 1) >= self.n {
            s -= 1;
        }
        s as usize
    }

    /// `count <= multiple * sqrt(n)`.
    pub fn at_most(self, count: usize, multiple: u64) -> bool {
        let c = count as u128;
        c * c <= (multiple as u128).pow(2) * self.n as u128
    }

    /// `count >= sqrt(n)`.
    pub fn at_least_root(self, count: usize) -> bool {
        let c = count as u128;
        c * c >= self.n as u128
    }

    /// `count < sqrt(n)`.
    pub fn below_root(self, count: usize) -> bool {
        !self.at_least_root(count)
    }
}

/// Is column `j` nice with respect to column `i`?
///
/// `col_size = |Area^j|`, `between_size = |Area^{i,j}|`, `distance = j - i`.
pub fn nice_column_check(gate: SqrtGate, col_size: usize, between_size: usize, distance: usize) -> bool {
    gate.at_most(col_size, 1) && gate.at_least_root(between_size) && gate.at_most(distance, 2)
}

/// Counts for a candidate inner column `k` witnessing that `j` is almost nice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnWitness {
    /// `|Area^k|`
    pub col_size: usize,
    /// `|Area^{i,k}|`
    pub between_size: usize,
    /// `k - i`
    pub distance: usize,
    /// `|Area^{k,j}|`
    pub tail_size: usize,
}

/// Is column `j` almost nice with respect to column `i`, given a witness `k`?
pub fn almost_nice_column_check(
    gate: SqrtGate,
    col_size: usize,
    between_size: usize,
    witness: Option<ColumnWitness>,
) -> bool {
    let Some(w) = witness else {
        return false;
    };
    gate.at_most(col_size, 1)
        && gate.at_least_root(between_size)
        && nice_column_check(gate, w.col_size, w.between_size, w.distance)
        && gate.below_root(w.tail_size)
}

/// Is row `l` nice with respect to row `k` inside a band?
///
/// `row_size = |Area^{i,j}_l|`, `between_size = |Area^{i,j}_{k,l}|`.
pub fn nice_row_check(gate: SqrtGate, row_size: usize, between_size: usize) -> bool {
    gate.at_most(row_size, 3) && gate.at_least_root(between_size) && gate.at_most(between_size, 5)
}

pub fn almost_nice_row_check(gate: SqrtGate, row_size: usize, between_size: usize) -> bool {
    gate.at_most(row_size, 3) && gate.at_least_root(between_size) && gate.at_most(between_size, 6)
}

/// A snapshot of scanner-maintained counts, emitted at fixed program points.
///
/// Each variant states which region size the count must equal; the acceptance
/// tests recompute those regions by brute force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Checkpoint {
    /// The running count first reached `sqrt_ceil(n)` inside `column`:
    /// `area = |Area^{prev, column-1}| + in_column` and `1 <= in_column <= |Area^column|`.
    ColumnThreshold {
        prev: u32,
        column: u32,
        area: usize,
        in_column: usize,
    },
    /// `in_column = |Area^column|`.
    ColumnCompleted { prev: u32, column: u32, in_column: usize },
    /// `rest = min(|Area^{column, c_max+1}|, sqrt_ceil(n))`.
    ColumnSuffix { column: u32, rest: usize },
    /// The scanner returned `column` as the next cut after `prev`.
    ColumnChosen { prev: u32, column: u32 },
    /// Within band `(c1, c2]`: `area = |Area^{c1,c2}_{prev, row-1}| + in_row`.
    RowThreshold {
        c1: u32,
        c2: u32,
        prev: u32,
        row: u32,
        area: usize,
        in_row: usize,
    },
    /// `in_row = |Area^{c1,c2}_row|`.
    RowCompleted { c1: u32, c2: u32, row: u32, in_row: usize },
    /// `rest = min(|Area^{c1,c2}_{row, r_max+1}|, sqrt_ceil(n))`.
    RowSuffix { c1: u32, c2: u32, row: u32, rest: usize },
    /// `cells = |Area^{c1,c2}_{r1,r2}|`.
    RectangleEmitted {
        c1: u32,
        c2: u32,
        r1: u32,
        r2: u32,
        cells: usize,
    },
}

pub trait ScanObserver {
    fn checkpoint(&mut self, checkpoint: &Checkpoint);
}

impl ScanObserver for () {
    fn checkpoint(&mut self, _: &Checkpoint) {}
}

impl ScanObserver for Vec<Checkpoint> {
    fn checkpoint(&mut self, checkpoint: &Checkpoint) {
        self.push(checkpoint.clone());
    }
}

impl<T: ScanObserver + ?Sized> ScanObserver for &mut T {
    fn checkpoint(&mut self, checkpoint: &Checkpoint) {
        (**self).checkpoint(checkpoint)
    }
}

/// Cursor work done by a scanner.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanStats {
    /// Advances of the main column and row cursors.
    pub main_advances: usize,
    /// Advances of the temporary lookahead cursors.
    pub lookahead_advances: usize,
}

impl ScanStats {
    pub fn total(&self) -> usize {
        self.main_advances + self.lookahead_advances
    }
}

/// Runs the nice-column and nice-row searches over forward-only cursors.
pub struct Scanner<O = ()> {
    gate: SqrtGate,
    contract_checks: bool,
    observer: O,
    stats: ScanStats,
}

impl Scanner<()> {
    pub fn new(gate: SqrtGate) -> Self {
        Self::with_observer(gate, ())
    }
}

impl<O: ScanObserver> Scanner<O> {
    pub fn with_observer(gate: SqrtGate, observer: O) -> Self {
        Self {
            gate,
            contract_checks: cfg!(debug_assertions),
            observer,
            stats: ScanStats::default(),
        }
    }

    /// Turns the cursor-contract assertions on or off. They default to on in
    /// debug builds.
    pub fn contract_checks(mut self, on: bool) -> Self {
        self.contract_checks = on;
        self
    }

    pub fn gate(&self) -> SqrtGate {
        self.gate
    }

    pub fn stats(&self) -> ScanStats {
        self.stats
    }

    pub fn into_observer(self) -> O {
        self.observer
    }

    fn emit(&mut self, checkpoint: Checkpoint) {
        self.observer.checkpoint(&checkpoint);
    }

    /// Counts up to `sqrt_ceil(n)` entries after the cursor without moving it.
    fn lookahead(&mut self, cursor: &ScanCursor<'_>) -> usize {
        let target = self.gate.sqrt_ceil();
        let mut probe = cursor.clone();
        let mut rest = 0;
        while rest < target && probe.peek_next().is_some() {
            probe.advance();
            rest += 1;
        }
        self.stats.lookahead_advances += rest;
        rest
    }

    /// Finds the next cut column after `prev`.
    ///
    /// `cursor` must rest on the first vertex of column `prev + 1` of a
    /// by-column list, with at least `sqrt_ceil(n)` vertices from there on.
    /// Returns `j` with `prev < j <= sentinel` such that column `j` is almost
    /// nice with respect to `prev`. If `j != sentinel`, at least
    /// `sqrt_ceil(n)` vertices lie right of column `j` and the cursor rests on
    /// the first vertex of column `j + 1`.
    pub fn next_nice_column(&mut self, cursor: &mut ScanCursor<'_>, prev: u32, sentinel: u32) -> Result<u32> {
        debug_assert_eq!(cursor.list().order(), SortOrder::ByColumn);
        let target = self.gate.sqrt_ceil();
        let start = cursor.advances();

        let first = cursor.expect_current("searching for the next nice column")?;
        if self.contract_checks {
            assert_eq!(first.col, prev + 1, "column cursor must start at column prev+1");
        }
        let mut area = 1;
        let mut in_column = 1;
        let mut column = first.col;
        while area < target {
            let next = cursor
                .peek_next()
                .ok_or(Error::CursorExhausted("accumulating sqrt(n) vertices by column"))?;
            area += 1;
            if next.col == column {
                in_column += 1;
            } else {
                column = next.col;
                in_column = 1;
            }
            cursor.advance();
        }
        self.emit(Checkpoint::ColumnThreshold {
            prev,
            column,
            area,
            in_column,
        });

        while cursor.next_key() == Some(column) {
            cursor.advance();
            in_column += 1;
        }
        self.emit(Checkpoint::ColumnCompleted {
            prev,
            column,
            in_column,
        });

        while !self.gate.at_most(in_column, 1) {
            cursor.advance();
            let Some(v) = cursor.current() else {
                // Every remaining column is too heavy; the empty column right
                // of the graph is the first light one.
                self.stats.main_advances += cursor.advances() - start;
                self.emit(Checkpoint::ColumnChosen { prev, column: sentinel });
                return Ok(sentinel);
            };
            if self.contract_checks {
                assert_eq!(v.col, column + 1, "columns of a connected graph are contiguous");
            }
            column = v.col;
            in_column = 1;
            while cursor.next_key() == Some(column) {
                cursor.advance();
                in_column += 1;
            }
            self.emit(Checkpoint::ColumnCompleted {
                prev,
                column,
                in_column,
            });
        }

        let rest = self.lookahead(cursor);
        self.emit(Checkpoint::ColumnSuffix { column, rest });

        let chosen = if rest == target {
            cursor.advance();
            if self.contract_checks {
                assert_eq!(
                    cursor.current().map(|v| v.col),
                    Some(column + 1),
                    "column cursor must rest on column j+1"
                );
            }
            column
        } else {
            sentinel
        };
        self.stats.main_advances += cursor.advances() - start;
        self.emit(Checkpoint::ColumnChosen { prev, column: chosen });
        Ok(chosen)
    }

    /// Finds the next cut row after `prev` inside the band `(c1, c2]`.
    ///
    /// `cursor` must rest on the first vertex below row `prev` of the band's
    /// by-row list, with at least `sqrt_ceil(n)` vertices from there on. Every
    /// vertex consumed up to and including the returned row is appended to
    /// `cells`; when the bottom sentinel is returned the rest of the band is
    /// consumed as well. If the result is not `sentinel`, the cursor rests on
    /// the first vertex below the returned row.
    pub fn next_nice_row(
        &mut self,
        cursor: &mut ScanCursor<'_>,
        band: (u32, u32),
        prev: u32,
        sentinel: u32,
        cells: &mut Vec<VertexCoord>,
    ) -> Result<u32> {
        debug_assert_eq!(cursor.list().order(), SortOrder::ByRow);
        let (c1, c2) = band;
        let target = self.gate.sqrt_ceil();
        let start = cursor.advances();

        let first = cursor.expect_current("searching for the next nice row")?;
        if self.contract_checks {
            assert!(first.row > prev, "row cursor must start below row prev");
        }
        cells.push(first);
        let mut area = 1;
        let mut in_row = 1;
        let mut row = first.row;
        while area < target {
            let next = cursor
                .peek_next()
                .ok_or(Error::CursorExhausted("accumulating sqrt(n) vertices by row"))?;
            area += 1;
            if next.row == row {
                in_row += 1;
            } else {
                row = next.row;
                in_row = 1;
            }
            cursor.advance();
            cells.push(next);
        }
        self.emit(Checkpoint::RowThreshold {
            c1,
            c2,
            prev,
            row,
            area,
            in_row,
        });

        while let Some(next) = cursor.peek_next().filter(|v| v.row == row) {
            cursor.advance();
            cells.push(next);
            in_row += 1;
        }
        self.emit(Checkpoint::RowCompleted { c1, c2, row, in_row });
        if self.contract_checks {
            assert!(self.gate.at_most(in_row, 3), "cut row exceeds 3 sqrt(n) vertices");
        }

        let rest = self.lookahead(cursor);
        self.emit(Checkpoint::RowSuffix { c1, c2, row, rest });

        let chosen = if rest == target {
            cursor.advance();
            if self.contract_checks {
                let below = cursor.current().map(|v| v.row);
                assert!(below > Some(row), "row cursor must rest below the returned row");
            }
            row
        } else {
            while cursor.advance() {
                if let Some(v) = cursor.current() {
                    cells.push(v);
                }
            }
            sentinel
        };
        self.stats.main_advances += cursor.advances() - start;
        Ok(chosen)
    }
}

/// A vertical band `(c1, c2]` of the cover together with its by-row list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceColumnPair {
    pub c1: u32,
    pub c2: u32,
    pub area_by_row: SortedVertexList,
}

/// For every column `j` in `1..=c_max+1`, the index of the band containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnIndexMap {
    pair_of: Vec<u32>,
}

impl ColumnIndexMap {
    /// Zero-based band index of column `j`, or `None` for column 0 and
    /// out-of-range columns.
    pub fn get(&self, j: u32) -> Option<usize> {
        match self.pair_of.get(j as usize) {
            Some(&t) if t != u32::MAX => Some(t as usize),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.pair_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pair_of.is_empty()
    }
}

/// One rectangle `(c1, c2] x (r1, r2]` of a cover, with its vertices sorted by
/// `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RclRectangle {
    pub c1: u32,
    pub c2: u32,
    pub r1: u32,
    pub r2: u32,
    pub cells: Vec<VertexCoord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RclCover {
    pub n: usize,
    pub r_max: u32,
    pub c_max: u32,
    pub rectangles: Vec<RclRectangle>,
}

impl RclCover {
    pub fn k(&self) -> usize {
        self.rectangles.len()
    }

    /// The distinct `(c1, c2)` bands in cover order.
    pub fn column_pairs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for r in &self.rectangles {
            if out.last() != Some(&(r.c1, r.c2)) {
                out.push((r.c1, r.c2));
            }
        }
        out
    }

    pub fn cell_sets(&self) -> impl Iterator<Item = &[VertexCoord]> {
        self.rectangles.iter().map(|r| r.cells.as_slice())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Assert the cursor contracts even in release builds.
    pub contract_checks: bool,
}

impl PipelineOptions {
    /// Enables contract checks when `GRIDCARVE_DEBUG_ASSERTS=1`.
    pub fn from_env() -> Self {
        Self {
            contract_checks: std::env::var("GRIDCARVE_DEBUG_ASSERTS").is_ok_and(|v| v == "1"),
        }
    }
}

/// Cuts the graph into vertical bands with almost nice right edges.
pub fn compute_nice_columns(
    g: &GridGraph,
    sclv: &SortedVertexList,
) -> Result<(Vec<NiceColumnPair>, ColumnIndexMap)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut scanner = Scanner::new(SqrtGate::new(g.n()));
    nice_columns(&mut scanner, g.c_max(), sclv)
}

fn nice_columns<O: ScanObserver>(
    scanner: &mut Scanner<O>,
    c_max: u32,
    sclv: &SortedVertexList,
) -> Result<(Vec<NiceColumnPair>, ColumnIndexMap)> {
    let sentinel = c_max + 1;
    let mut cursor = sclv.cursor();
    let mut pairs = Vec::new();
    let mut pair_of = vec![u32::MAX; sentinel as usize + 1];
    let mut current = 0u32;
    let mut c1 = 0;
    loop {
        let c2 = scanner.next_nice_column(&mut cursor, c1, sentinel)?;
        let index = pairs.len() as u32;
        pairs.push(NiceColumnPair {
            c1,
            c2,
            area_by_row: SortedVertexList::empty(SortOrder::ByRow),
        });
        while current < c2 {
            current += 1;
            pair_of[current as usize] = index;
        }
        if c2 == sentinel {
            break;
        }
        c1 = c2;
    }
    Ok((pairs, ColumnIndexMap { pair_of }))
}

/// Fills every band's by-row list in one pass over the graph's by-row list.
pub fn attach_rows(srlv: &SortedVertexList, pairs: &mut [NiceColumnPair], map: &ColumnIndexMap) {
    debug_assert_eq!(srlv.order(), SortOrder::ByRow);
    for &v in srlv.entries() {
        let t = map.get(v.col).expect("every graph column belongs to a band");
        pairs[t].area_by_row.push_sorted(v);
    }
}

/// Cuts one band into rectangles with almost nice bottom rows.
pub fn rows_for_pair(gate: SqrtGate, pair: &NiceColumnPair, r_max: u32) -> Result<Vec<RclRectangle>> {
    rows_with(&mut Scanner::new(gate), pair, r_max)
}

fn rows_with<O: ScanObserver>(
    scanner: &mut Scanner<O>,
    pair: &NiceColumnPair,
    r_max: u32,
) -> Result<Vec<RclRectangle>> {
    let sentinel = r_max + 1;
    let mut cursor = pair.area_by_row.cursor();
    let mut out = Vec::new();
    let mut r1 = 0;
    loop {
        let mut cells = Vec::new();
        let r2 = scanner.next_nice_row(&mut cursor, (pair.c1, pair.c2), r1, sentinel, &mut cells)?;
        scanner.emit(Checkpoint::RectangleEmitted {
            c1: pair.c1,
            c2: pair.c2,
            r1,
            r2,
            cells: cells.len(),
        });
        out.push(RclRectangle {
            c1: pair.c1,
            c2: pair.c2,
            r1,
            r2,
            cells,
        });
        if r2 == sentinel {
            return Ok(out);
        }
        r1 = r2;
    }
}

/// Computes a nice RCL-cover of a connected grid graph in `O(n)` time.
pub fn compute_rcl_cover(g: &GridGraph) -> Result<RclCover> {
    compute_rcl_cover_with(g, PipelineOptions::default(), ()).map(|(cover, _)| cover)
}

/// [`compute_rcl_cover`] with explicit options and an observer that receives
/// every scanner checkpoint. Also returns the cursor work performed.
pub fn compute_rcl_cover_with<O: ScanObserver>(
    g: &GridGraph,
    options: PipelineOptions,
    observer: O,
) -> Result<(RclCover, ScanStats)> {
    // A connected graph spans at most n rows and n columns.
    if g.c_max() as usize > g.n() || g.r_max() as usize > g.n() {
        return Err(Error::NotConnected);
    }
    let (sclv, col_ids) = sorting::sort_with_ids(g, SortOrder::ByColumn);
    let (srlv, row_ids) = sorting::sort_with_ids(g, SortOrder::ByRow);
    if !lists_connected(g.n(), &sclv, &col_ids, &srlv, &row_ids) {
        return Err(Error::NotConnected);
    }

    let mut scanner = Scanner::with_observer(SqrtGate::new(g.n()), observer);
    if options.contract_checks {
        scanner = scanner.contract_checks(true);
    }
    let (mut pairs, map) = nice_columns(&mut scanner, g.c_max(), &sclv)?;
    attach_rows(&srlv, &mut pairs, &map);

    let mut rectangles = Vec::new();
    for pair in &pairs {
        rectangles.extend(rows_with(&mut scanner, pair, g.r_max())?);
    }
    let cover = RclCover {
        n: g.n(),
        r_max: g.r_max(),
        c_max: g.c_max(),
        rectangles,
    };
    Ok((cover, scanner.stats()))
}

/// Linear connectivity test: every edge joins two entries that are adjacent in
/// either the by-row or the by-column list.
fn lists_connected(
    n: usize,
    sclv: &SortedVertexList,
    col_ids: &[u32],
    srlv: &SortedVertexList,
    row_ids: &[u32],
) -> bool {
    let mut dsu = DisjointSets::new(n);
    let mut components = n;
    for (list, ids, along) in [(sclv, col_ids, true), (srlv, row_ids, false)] {
        for (w, pair) in list.entries().windows(2).enumerate() {
            let (a, b) = (pair[0], pair[1]);
            let adjacent = if along {
                a.col == b.col && a.row + 1 == b.row
            } else {
                a.row == b.row && a.col + 1 == b.col
            };
            if adjacent && dsu.union(ids[w], ids[w + 1]) {
                components -= 1;
            }
        }
    }
    components == 1
}

struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sorting::{build_sclv, build_srlv};

    fn v(r: u32, c: u32) -> VertexCoord {
        VertexCoord::new(r, c)
    }

    fn full(rows: u32, cols: u32) -> GridGraph {
        let raw: Vec<_> = (1..=rows)
            .flat_map(|r| (1..=cols).map(move |c| v(r, c)))
            .collect();
        GridGraph::normalize(&raw).unwrap()
    }

    fn isqrt(x: u128) -> u128 {
        let (mut lo, mut hi) = (0u128, 1u128 << 64);
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            if mid * mid <= x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn sqrt_ceil_values() {
        let cases = [(1, 1), (2, 2), (3, 2), (4, 2), (5, 3), (9, 3), (10, 4), (81, 9), (82, 10)];
        for (n, s) in cases {
            assert_eq!(SqrtGate::new(n).sqrt_ceil(), s, "n={n}");
        }
        for n in 1..5000usize {
            let s = SqrtGate::new(n).sqrt_ceil();
            assert!(s * s >= n && (s - 1) * (s - 1) < n);
        }
    }

    proptest::proptest! {
        #[test]
        fn gate_matches_integer_sqrt(c in 0usize..=1_000_000, n in 1usize..=1_000_000, m in proptest::sample::select(vec![1u64, 2, 3, 5, 6])) {
            let gate = SqrtGate::new(n);
            // c <= m*sqrt(n) iff c <= floor(sqrt(m^2 n)) for integer c.
            let bound = isqrt((m as u128).pow(2) * n as u128);
            proptest::prop_assert_eq!(gate.at_most(c, m), c as u128 <= bound);
            let root_ceil = isqrt(n as u128 - 1) + 1;
            proptest::prop_assert_eq!(gate.at_least_root(c), c as u128 >= root_ceil);
        }
    }

    #[test]
    fn nice_column_examples() {
        assert!(nice_column_check(SqrtGate::new(81), 3, 21, 6));
        assert!(nice_column_check(SqrtGate::new(9), 3, 3, 1));
        assert!(!nice_column_check(SqrtGate::new(4), 3, 4, 1));
        assert!(!nice_column_check(SqrtGate::new(81), 3, 21, 19));
    }

    #[test]
    fn almost_nice_column_examples() {
        let gate = SqrtGate::new(81);
        let itself = ColumnWitness {
            col_size: 3,
            between_size: 21,
            distance: 6,
            tail_size: 0,
        };
        assert!(almost_nice_column_check(gate, 3, 21, Some(itself)));
        let tail8 = ColumnWitness { tail_size: 8, ..itself };
        assert!(almost_nice_column_check(gate, 0, 29, Some(tail8)));
        let tail9 = ColumnWitness { tail_size: gate.sqrt_ceil(), ..itself };
        assert!(!almost_nice_column_check(gate, 0, 30, Some(tail9)));
        assert!(!almost_nice_column_check(gate, 0, 30, None));
    }

    #[test]
    fn row_predicates() {
        let gate = SqrtGate::new(81);
        assert!(nice_row_check(gate, 5, 11));
        assert!(!nice_row_check(gate, 5, 8));
        assert!(!nice_row_check(gate, 28, 11));
        assert!(almost_nice_row_check(gate, 5, 11));
        assert!(almost_nice_row_check(gate, 5, 50));
        assert!(!nice_row_check(gate, 5, 50));
        assert!(!almost_nice_row_check(gate, 5, 55));
    }

    #[test]
    fn next_nice_column_single_vertex() {
        let g = full(1, 1);
        let sclv = build_sclv(&g);
        let mut cursor = sclv.cursor();
        let j = Scanner::new(SqrtGate::new(1))
            .next_nice_column(&mut cursor, 0, 2)
            .unwrap();
        assert_eq!(j, 2);
    }

    #[test]
    fn next_nice_column_full_9x9() {
        let g = full(9, 9);
        let sclv = build_sclv(&g);
        let mut cursor = sclv.cursor();
        let mut scanner = Scanner::new(SqrtGate::new(81));
        assert_eq!(scanner.next_nice_column(&mut cursor, 0, 10).unwrap(), 1);
        assert_eq!(cursor.current(), Some(v(1, 2)));
        assert_eq!(scanner.next_nice_column(&mut cursor, 1, 10).unwrap(), 2);
    }

    #[test]
    fn next_nice_column_horizontal_path() {
        // Column counts are all 1, so the cut lands where the running count
        // reaches sqrt_ceil(n), unless fewer than that remain afterwards.
        for n in 1..=60u32 {
            let g = full(1, n);
            let s = SqrtGate::new(n as usize).sqrt_ceil() as u32;
            let sclv = build_sclv(&g);
            let mut cursor = sclv.cursor();
            let j = Scanner::new(SqrtGate::new(n as usize))
                .next_nice_column(&mut cursor, 0, n + 1)
                .unwrap();
            let expected = if n - s >= s { s } else { n + 1 };
            assert_eq!(j, expected, "n={n}");
        }
    }

    #[test]
    fn next_nice_column_walks_off_heavy_columns() {
        // A vertical pair: column 1 holds 2 > sqrt(2) vertices.
        let g = full(2, 1);
        let sclv = build_sclv(&g);
        let mut cursor = sclv.cursor();
        let j = Scanner::new(SqrtGate::new(2))
            .next_nice_column(&mut cursor, 0, 2)
            .unwrap();
        assert_eq!(j, 2);
    }

    #[test]
    fn next_nice_column_needs_a_vertex() {
        let list = SortedVertexList::empty(SortOrder::ByColumn);
        let mut cursor = list.cursor();
        let err = Scanner::new(SqrtGate::new(4)).next_nice_column(&mut cursor, 0, 3);
        assert!(matches!(err, Err(Error::CursorExhausted(_))));
    }

    fn pair_for(g: &GridGraph, c1: u32, c2: u32) -> NiceColumnPair {
        let band: Vec<_> = g
            .vertices()
            .iter()
            .copied()
            .filter(|u| u.col > c1 && u.col <= c2)
            .collect();
        NiceColumnPair {
            c1,
            c2,
            area_by_row: sorting::build_srlv_of_set(&band),
        }
    }

    #[test]
    fn next_nice_row_examples() {
        let single = full(1, 1);
        let pair = pair_for(&single, 0, 2);
        let mut cursor = pair.area_by_row.cursor();
        let mut cells = Vec::new();
        let p = Scanner::new(SqrtGate::new(1))
            .next_nice_row(&mut cursor, (0, 2), 0, 2, &mut cells)
            .unwrap();
        assert_eq!((p, cells), (2, vec![v(1, 1)]));

        let g = full(9, 9);
        let pair = pair_for(&g, 0, 1);
        let mut cursor = pair.area_by_row.cursor();
        let mut cells = Vec::new();
        let p = Scanner::new(SqrtGate::new(81))
            .next_nice_row(&mut cursor, (0, 1), 0, 10, &mut cells)
            .unwrap();
        assert_eq!(p, 10);
        assert_eq!(cells.len(), 9);

        let pair = pair_for(&g, 0, 10);
        let mut cursor = pair.area_by_row.cursor();
        let mut cells = Vec::new();
        let p = Scanner::new(SqrtGate::new(81))
            .next_nice_row(&mut cursor, (0, 10), 0, 10, &mut cells)
            .unwrap();
        assert_eq!(p, 1);
        assert_eq!(cursor.current(), Some(v(2, 1)));
        assert_eq!(cells.len(), 9);
    }

    #[test]
    fn nice_columns_single_vertex() {
        let g = full(1, 1);
        let (pairs, map) = compute_nice_columns(&g, &build_sclv(&g)).unwrap();
        let cuts: Vec<_> = pairs.iter().map(|p| (p.c1, p.c2)).collect();
        assert_eq!(cuts, vec![(0, 2)]);
        assert_eq!((map.get(0), map.get(1), map.get(2)), (None, Some(0), Some(0)));
    }

    #[test]
    fn nice_columns_full_9x9() {
        let g = full(9, 9);
        let (pairs, map) = compute_nice_columns(&g, &build_sclv(&g)).unwrap();
        let cuts: Vec<_> = pairs.iter().map(|p| (p.c1, p.c2)).collect();
        let mut expected: Vec<_> = (0..8).map(|c| (c, c + 1)).collect();
        expected.push((8, 10));
        assert_eq!(cuts, expected);
        for j in 1..=10 {
            let t = map.get(j).unwrap();
            assert!(pairs[t].c1 < j && j <= pairs[t].c2);
        }
    }

    #[test]
    fn nice_columns_reject_disconnected() {
        let g = GridGraph::normalize(&[v(1, 1), v(1, 3)]).unwrap();
        assert!(matches!(
            compute_nice_columns(&g, &build_sclv(&g)),
            Err(Error::NotConnected)
        ));
        assert!(matches!(compute_rcl_cover(&g), Err(Error::NotConnected)));
        let far = GridGraph::normalize(&[v(1, 1), v(1, 1000)]).unwrap();
        assert!(matches!(compute_rcl_cover(&far), Err(Error::NotConnected)));
    }

    #[test]
    fn attach_rows_fills_bands() {
        let g = full(2, 2);
        let mut pairs = vec![NiceColumnPair {
            c1: 0,
            c2: 3,
            area_by_row: SortedVertexList::empty(SortOrder::ByRow),
        }];
        let map = ColumnIndexMap { pair_of: vec![u32::MAX, 0, 0, 0] };
        attach_rows(&build_srlv(&g), &mut pairs, &map);
        assert_eq!(
            pairs[0].area_by_row.entries(),
            &[v(1, 1), v(1, 2), v(2, 1), v(2, 2)]
        );

        let g = full(9, 9);
        let (mut pairs, map) = compute_nice_columns(&g, &build_sclv(&g)).unwrap();
        attach_rows(&build_srlv(&g), &mut pairs, &map);
        for p in &pairs {
            assert_eq!(p.area_by_row, pair_for(&g, p.c1, p.c2).area_by_row);
        }
    }

    #[test]
    fn rows_for_pair_examples() {
        let single = full(1, 1);
        let rects = rows_for_pair(SqrtGate::new(1), &pair_for(&single, 0, 2), 1).unwrap();
        assert_eq!(
            rects,
            vec![RclRectangle {
                c1: 0,
                c2: 2,
                r1: 0,
                r2: 2,
                cells: vec![v(1, 1)]
            }]
        );

        let g = full(9, 9);
        let rects = rows_for_pair(SqrtGate::new(81), &pair_for(&g, 0, 1), 9).unwrap();
        assert_eq!(rects.len(), 1);
        assert_eq!((rects[0].r1, rects[0].r2, rects[0].cells.len()), (0, 10, 9));

        // A band holding exactly sqrt_ceil(n) vertices is a single rectangle.
        let path = full(1, 16);
        let rects = rows_for_pair(SqrtGate::new(16), &pair_for(&path, 0, 4), 1).unwrap();
        assert_eq!(rects.len(), 1);
        assert_eq!((rects[0].r1, rects[0].r2), (0, 2));
    }

    #[test]
    fn cover_of_single_vertex() {
        let cover = compute_rcl_cover(&full(1, 1)).unwrap();
        assert_eq!(cover.k(), 1);
        let r = &cover.rectangles[0];
        assert_eq!((r.c1, r.c2, r.r1, r.r2), (0, 2, 0, 2));
        assert_eq!(r.cells, vec![v(1, 1)]);
    }

    #[test]
    fn cover_checkpoints_and_stats() {
        let g = full(9, 9);
        let (cover, stats) =
            compute_rcl_cover_with(&g, PipelineOptions { contract_checks: true }, Vec::new()).unwrap();
        assert_eq!(cover.k(), 9);
        assert!(cover.rectangles.iter().all(|r| r.cells.len() == 9));
        let bound = 2 * g.n() + 2 * cover.k() * 9;
        assert!(stats.total() <= bound, "{stats:?}");
    }

    #[test]
    fn lists_connectivity_agrees_with_bfs() {
        let shapes: [&[(u32, u32)]; 4] = [
            &[(1, 1), (1, 2), (2, 2)],
            &[(1, 1), (2, 2)],
            &[(1, 1), (1, 3), (2, 1), (2, 2), (2, 3)],
            &[(1, 2), (2, 1), (2, 3), (3, 2)],
        ];
        for shape in shapes {
            let raw: Vec<_> = shape.iter().map(|&(r, c)| v(r, c)).collect();
            let g = GridGraph::normalize(&raw).unwrap();
            let (sclv, ci) = sorting::sort_with_ids(&g, SortOrder::ByColumn);
            let (srlv, ri) = sorting::sort_with_ids(&g, SortOrder::ByRow);
            assert_eq!(lists_connected(g.n(), &sclv, &ci, &srlv, &ri), g.is_connected());
        }
    }
}
