//! Path decompositions built from an RCL-cover.
//!
//! Bag `i` holds rectangle `i`'s vertices, both flanking columns of its band,
//! and the band's row just above the rectangle. The path is implicit: bags are
//! consecutive nodes in order.

use crate::cover::RclCover;
use crate::error::{Error, Result};
use crate::grid::{GridGraph, VertexCoord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    bags: Vec<Vec<VertexCoord>>,
}

impl PathDecomposition {
    /// Wraps explicit bags, sorting and deduplicating each one.
    pub fn new(bags: Vec<Vec<VertexCoord>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Self { bags }
    }

    /// Bags in path order, each sorted by `(row, col)`.
    pub fn bags(&self) -> &[Vec<VertexCoord>] {
        &self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one (0 for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn into_bags(self) -> Vec<Vec<VertexCoord>> {
        self.bags
    }
}

/// Builds one bag per rectangle of `cover` in `O(n)` time (plus sorting each
/// bag for output).
pub fn build_path_decomposition(g: &GridGraph, cover: &RclCover) -> Result<PathDecomposition> {
    let sentinel = g.c_max() + 1;
    if cover.rectangles.is_empty() {
        return Err(Error::InvalidCover("cover has no rectangles".into()));
    }
    if let Some(r) = cover.rectangles.iter().find(|r| r.c1 >= r.c2 || r.c2 > sentinel || r.r1 >= r.r2) {
        return Err(Error::InvalidCover(format!(
            "rectangle ({},{},{},{}) is degenerate or outside the super rectangle",
            r.c1, r.c2, r.r1, r.r2
        )));
    }

    let mut columns: Vec<Vec<VertexCoord>> = vec![Vec::new(); sentinel as usize + 1];
    for &v in g.vertices() {
        columns[v.col as usize].push(v);
    }

    let mut bags = Vec::with_capacity(cover.k());
    let mut prev_cells: &[VertexCoord] = &[];
    for rect in &cover.rectangles {
        let mut bag = Vec::new();
        bag.extend_from_slice(&columns[rect.c1 as usize]);
        bag.extend_from_slice(&columns[rect.c2 as usize]);
        bag.extend(rect.cells.iter().filter(|v| v.col != rect.c2));
        // The previous rectangle's bottom row, when it sits directly above.
        if rect.r1 > 0 {
            let top = prev_cells
                .iter()
                .rev()
                .take_while(|v| v.row == rect.r1)
                .filter(|v| v.col > rect.c1 && v.col < rect.c2);
            bag.extend(top);
        }
        bag.sort_unstable();
        bags.push(bag);
        prev_cells = &rect.cells;
    }
    Ok(PathDecomposition { bags })
}
