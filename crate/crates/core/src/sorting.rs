//! Bucket-sorted vertex lists (by column or by row) and forward-only cursors.
//!
//! A by-column list orders vertices by `(col, row)`, a by-row list by
//! `(row, col)`. Both are produced by two stable counting-sort passes, so
//! construction is linear in the number of vertices plus the key range.

use crate::error::{Error, Result};
use crate::grid::{GridGraph, VertexCoord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SortOrder {
    /// Sorted by column, ties broken by ascending row.
    ByColumn,
    /// Sorted by row, ties broken by ascending column.
    ByRow,
}

impl SortOrder {
    /// The sort key of `v`: its column for `ByColumn`, its row for `ByRow`.
    pub fn key(self, v: VertexCoord) -> u32 {
        match self {
            SortOrder::ByColumn => v.col,
            SortOrder::ByRow => v.row,
        }
    }

    fn tie_key(self, v: VertexCoord) -> u32 {
        match self {
            SortOrder::ByColumn => v.row,
            SortOrder::ByRow => v.col,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedVertexList {
    order: SortOrder,
    entries: Vec<VertexCoord>,
}

impl SortedVertexList {
    pub fn empty(order: SortOrder) -> Self {
        Self {
            order,
            entries: Vec::new(),
        }
    }

    pub fn order(&self) -> SortOrder {
        self.order
    }

    pub fn entries(&self) -> &[VertexCoord] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cursor(&self) -> ScanCursor<'_> {
        ScanCursor {
            list: self,
            pos: 0,
            advances: 0,
        }
    }

    /// Appends `v`; the caller guarantees it does not precede the last entry.
    pub(crate) fn push_sorted(&mut self, v: VertexCoord) {
        debug_assert!(self
            .entries
            .last()
            .is_none_or(|&last| (self.order.key(last), self.order.tie_key(last))
                < (self.order.key(v), self.order.tie_key(v))));
        self.entries.push(v);
    }
}

/// By-column list of all vertices of `g`.
pub fn build_sclv(g: &GridGraph) -> SortedVertexList {
    bucket_sort(g.vertices(), SortOrder::ByColumn)
}

/// By-row list of all vertices of `g`.
pub fn build_srlv(g: &GridGraph) -> SortedVertexList {
    bucket_sort(g.vertices(), SortOrder::ByRow)
}

/// By-row list of an arbitrary vertex subset.
pub fn build_srlv_of_set<'a, I>(set: I) -> SortedVertexList
where
    I: IntoIterator<Item = &'a VertexCoord>,
{
    let items: Vec<VertexCoord> = set.into_iter().copied().collect();
    bucket_sort(&items, SortOrder::ByRow)
}

/// The sorted list of `g`'s vertices together with, for each entry, the index
/// of that vertex in [`GridGraph::vertices`].
pub(crate) fn sort_with_ids(g: &GridGraph, order: SortOrder) -> (SortedVertexList, Vec<u32>) {
    let ids = sorted_ids(g.vertices(), order);
    let entries = ids.iter().map(|&i| g.vertices()[i as usize]).collect();
    (SortedVertexList { order, entries }, ids)
}

fn bucket_sort(items: &[VertexCoord], order: SortOrder) -> SortedVertexList {
    let entries = sorted_ids(items, order)
        .into_iter()
        .map(|i| items[i as usize])
        .collect();
    SortedVertexList { order, entries }
}

fn sorted_ids(items: &[VertexCoord], order: SortOrder) -> Vec<u32> {
    let ids: Vec<u32> = (0..items.len() as u32).collect();
    let by_tie = counting_sort(&ids, |i| order.tie_key(items[i as usize]));
    counting_sort(&by_tie, |i| order.key(items[i as usize]))
}

/// Stable counting sort on a `u32` key. Linear in `ids.len() + max key`.
fn counting_sort(ids: &[u32], key: impl Fn(u32) -> u32) -> Vec<u32> {
    let Some(max) = ids.iter().map(|&i| key(i)).max() else {
        return Vec::new();
    };
    let mut starts = vec![0usize; max as usize + 2];
    for &i in ids {
        starts[key(i) as usize + 1] += 1;
    }
    for b in 1..starts.len() {
        starts[b] += starts[b - 1];
    }
    let mut out = vec![0; ids.len()];
    for &i in ids {
        let slot = &mut starts[key(i) as usize];
        out[*slot] = i;
        *slot += 1;
    }
    out
}

/// A forward-only position in a [`SortedVertexList`].
///
/// Cloning yields an independent lookahead cursor; the original is untouched.
#[derive(Clone, Debug)]
pub struct ScanCursor<'a> {
    list: &'a SortedVertexList,
    pos: usize,
    advances: usize,
}

impl<'a> ScanCursor<'a> {
    pub fn list(&self) -> &'a SortedVertexList {
        self.list
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn is_at_end(&self) -> bool {
        self.pos >= self.list.entries.len()
    }

    pub fn current(&self) -> Option<VertexCoord> {
        self.list.entries.get(self.pos).copied()
    }

    /// Like [`current`](Self::current) but an error at the end of the list.
    pub fn expect_current(&self, context: &'static str) -> Result<VertexCoord> {
        self.current().ok_or(Error::CursorExhausted(context))
    }

    pub fn peek_next(&self) -> Option<VertexCoord> {
        self.list.entries.get(self.pos + 1).copied()
    }

    /// Sort key of the current entry.
    pub fn current_key(&self) -> Option<u32> {
        self.current().map(|v| self.list.order.key(v))
    }

    /// Sort key of the entry after the current one.
    pub fn next_key(&self) -> Option<u32> {
        self.peek_next().map(|v| self.list.order.key(v))
    }

    /// Moves one entry forward. Returns `false` (and does nothing) at the end.
    pub fn advance(&mut self) -> bool {
        if self.is_at_end() {
            return false;
        }
        self.pos += 1;
        self.advances += 1;
        true
    }

    /// Number of successful [`advance`](Self::advance) calls on this cursor.
    pub fn advances(&self) -> usize {
        self.advances
    }
}
