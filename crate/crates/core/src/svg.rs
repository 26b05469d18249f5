//! Static SVG drawing of a cover: vertices, rectangle outlines, and the cut
//! columns and rows that bound each rectangle.

use std::fmt::Write;

use crate::cover::RclCover;
use crate::grid::GridGraph;

const CELL: u32 = 12;
const PALETTE: [&str; 6] = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4"];

pub fn render(g: &GridGraph, cover: &RclCover) -> String {
    let width = (g.c_max() + 2) * CELL;
    let height = (g.r_max() + 2) * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);

    // Cut columns first so everything else draws over them.
    for (_, c2) in cover.column_pairs() {
        let _ = writeln!(
            out,
            r##"<rect x="{}" y="0" width="{CELL}" height="{height}" fill="#eeeeee"/>"##,
            c2 * CELL
        );
    }
    for r in &cover.rectangles {
        let _ = writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{CELL}" fill="#f6f6d0"/>"##,
            (r.c1 + 1) * CELL,
            r.r2 * CELL,
            (r.c2 - r.c1).saturating_sub(1) * CELL
        );
    }

    for (i, r) in cover.rectangles.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for v in &r.cells {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{color}"/>"#,
                v.col * CELL + 2,
                v.row * CELL + 2,
                CELL - 4,
                CELL - 4
            );
        }
    }
    for r in &cover.rectangles {
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            (r.c1 + 1) * CELL,
            (r.r1 + 1) * CELL,
            (r.c2 - r.c1) * CELL,
            (r.r2 - r.r1) * CELL
        );
    }
    out.push_str("</svg>\n");
    out
}
