//! Grid graphs on the integer lattice with implicit unit-distance edges.
//!
//! Everything in this module is deliberately naive: it is the geometry the
//! verifiers use to re-derive region contents and boundaries straight from
//! coordinates. The linear-time pipeline in [`crate::cover`] never calls the
//! `area_*` queries.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A lattice point. Ordered by row, then column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCoord {
    pub row: u32,
    pub col: u32,
}

impl VertexCoord {
    pub const fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }

    /// The (up to four) lattice points at Manhattan distance one.
    pub fn lattice_neighbors(self) -> impl Iterator<Item = VertexCoord> {
        let Self { row, col } = self;
        [
            row.checked_sub(1).map(|r| Self::new(r, col)),
            row.checked_add(1).map(|r| Self::new(r, col)),
            col.checked_sub(1).map(|c| Self::new(row, c)),
            col.checked_add(1).map(|c| Self::new(row, c)),
        ]
        .into_iter()
        .flatten()
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Debug for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<(u32, u32)> for VertexCoord {
    fn from((row, col): (u32, u32)) -> Self {
        Self::new(row, col)
    }
}

// Serialized as a `[row, col]` pair.
impl Serialize for VertexCoord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexCoord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (row, col) = <(u32, u32)>::deserialize(d)?;
        Ok(Self::new(row, col))
    }
}

pub type VertexSet = BTreeSet<VertexCoord>;

/// A normalized grid graph: the smallest row and the smallest column are both 1.
///
/// Immutable after construction. The super rectangle enclosing the graph spans
/// rows `0..=r_max + 1` and columns `0..=c_max + 1`; rows/columns `0` and
/// `r_max + 1`/`c_max + 1` hold no vertices.
#[derive(Clone, Debug)]
pub struct GridGraph {
    vertices: Vec<VertexCoord>,
    members: HashSet<VertexCoord>,
    // (col, row)-sorted copy, for range queries.
    by_col: Vec<VertexCoord>,
    r_max: u32,
    c_max: u32,
}

impl GridGraph {
    /// Shifts `raw` so that its minimum row and column become 1 and drops
    /// duplicate coordinates. Vertex order is first occurrence in `raw`.
    pub fn normalize(raw: &[VertexCoord]) -> Result<Self> {
        let r_min = raw.iter().map(|v| v.row).min().ok_or(Error::EmptyInput)?;
        let c_min = raw.iter().map(|v| v.col).min().ok_or(Error::EmptyInput)?;

        let mut members = HashSet::with_capacity(raw.len());
        let mut vertices = Vec::with_capacity(raw.len());
        for v in raw {
            let shifted = VertexCoord::new(v.row - r_min + 1, v.col - c_min + 1);
            if members.insert(shifted) {
                vertices.push(shifted);
            }
        }

        let r_max = vertices.iter().map(|v| v.row).max().unwrap_or(1);
        let c_max = vertices.iter().map(|v| v.col).max().unwrap_or(1);

        let mut by_col = vertices.clone();
        by_col.sort_unstable_by_key(|v| (v.col, v.row));

        Ok(Self {
            vertices,
            members,
            by_col,
            r_max,
            c_max,
        })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn c_max(&self) -> u32 {
        self.c_max
    }

    pub fn vertices(&self) -> &[VertexCoord] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexCoord) -> bool {
        self.members.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Graph neighbors of `v`, i.e. vertices at Manhattan distance one.
    pub fn neighbors(&self, v: VertexCoord) -> Result<VertexSet> {
        if !self.contains(v) {
            return Err(Error::NotAVertex(v));
        }
        Ok(self.neighbor_iter(v).collect())
    }

    pub(crate) fn neighbor_iter(&self, v: VertexCoord) -> impl Iterator<Item = VertexCoord> + '_ {
        v.lattice_neighbors().filter(move |u| self.contains(*u))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each listed in BFS order from its first vertex
    /// (in vertex order).
    pub fn components(&self) -> Vec<Vec<VertexCoord>> {
        let mut seen: HashSet<VertexCoord> = HashSet::with_capacity(self.n());
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbor_iter(v) {
                    if seen.insert(u) {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `B(S)`: members of `S` with at least one neighbor outside `S`.
    pub fn boundary(&self, s: &VertexSet) -> Result<VertexSet> {
        if let Some(v) = s.iter().find(|v| !self.contains(**v)) {
            return Err(Error::NotASubset(*v));
        }
        Ok(s.iter()
            .copied()
            .filter(|&v| self.neighbor_iter(v).any(|u| !s.contains(&u)))
            .collect())
    }

    fn check_col(&self, what: &'static str, index: u32) -> Result<()> {
        let max = self.c_max + 1;
        if index > max {
            return Err(Error::IndexOutOfRange { what, index, max });
        }
        Ok(())
    }

    fn check_row(&self, what: &'static str, index: u32) -> Result<()> {
        let max = self.r_max + 1;
        if index > max {
            return Err(Error::IndexOutOfRange { what, index, max });
        }
        Ok(())
    }

    /// `Area^j`: the vertices of column `j`.
    pub fn area_column(&self, j: u32) -> Result<VertexSet> {
        self.check_col("column", j)?;
        match j {
            0 => Ok(VertexSet::new()),
            _ => self.area_between(j - 1, j),
        }
    }

    /// `Area^{i,j}`: vertices in columns `i < t <= j`.
    pub fn area_between(&self, i: u32, j: u32) -> Result<VertexSet> {
        self.area_rect(i, j, 0, self.r_max + 1)
    }

    /// `Area^{i,j}_k`: vertices of row `k` in columns `i < t <= j`.
    pub fn area_row(&self, i: u32, j: u32, k: u32) -> Result<VertexSet> {
        self.check_row("row", k)?;
        match k {
            0 => {
                self.check_col("left column", i)?;
                self.check_col("right column", j)?;
                Ok(VertexSet::new())
            }
            _ => self.area_rect(i, j, k - 1, k),
        }
    }

    /// `Area^i_{k,l}`: vertices of column `i` in rows `k < t <= l`.
    pub fn area_col_range(&self, i: u32, k: u32, l: u32) -> Result<VertexSet> {
        self.check_col("column", i)?;
        match i {
            0 => {
                self.check_row("top row", k)?;
                self.check_row("bottom row", l)?;
                Ok(VertexSet::new())
            }
            _ => self.area_rect(i - 1, i, k, l),
        }
    }

    /// `Area^{i,j}_{k,l}`: vertices in columns `i < t <= j` and rows `k < s <= l`.
    pub fn area_rect(&self, i: u32, j: u32, k: u32, l: u32) -> Result<VertexSet> {
        self.check_col("left column", i)?;
        self.check_col("right column", j)?;
        self.check_row("top row", k)?;
        self.check_row("bottom row", l)?;
        let mut out = VertexSet::new();
        if i >= j || k >= l {
            return Ok(out);
        }
        let cols = &self.by_col;
        let mut pos = cols.partition_point(|v| v.col <= i);
        let end = cols.partition_point(|v| v.col <= j);
        while pos < end {
            let col = cols[pos].col;
            let seg_end = pos + cols[pos..end].partition_point(|v| v.col == col);
            let seg = &cols[pos..seg_end];
            let lo = seg.partition_point(|v| v.row <= k);
            let hi = seg.partition_point(|v| v.row <= l);
            out.extend(seg[lo..hi].iter().copied());
            pos = seg_end;
        }
        Ok(out)
    }
}
