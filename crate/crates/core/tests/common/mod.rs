#![allow(dead_code)]

use gridcarve::{GridGraph, VertexCoord};

pub fn v(r: u32, c: u32) -> VertexCoord {
    VertexCoord::new(r, c)
}

pub fn full(rows: u32, cols: u32) -> GridGraph {
    let raw: Vec<_> = (1..=rows)
        .flat_map(|r| (1..=cols).map(move |c| v(r, c)))
        .collect();
    GridGraph::normalize(&raw).unwrap()
}

/// Every connected grid graph whose normalized form fits a `side x side` box,
/// each listed once.
pub fn connected_in_box(side: u32) -> Vec<GridGraph> {
    let cells = side * side;
    let mut out = Vec::new();
    for mask in 1u32..(1 << cells) {
        let raw: Vec<_> = (0..cells)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| v(b / side + 1, b % side + 1))
            .collect();
        // Only masks already touching the first row and column, so that each
        // shape appears exactly once up to translation.
        if !raw.iter().any(|u| u.row == 1) || !raw.iter().any(|u| u.col == 1) {
            continue;
        }
        let g = GridGraph::normalize(&raw).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
