// Normalize raw coordinates and query regions of the resulting grid graph.

use gridcarve::{GridGraph, VertexCoord, VertexSet};

pub fn run() -> gridcarve::Result<()> {
    // An L-tromino far from the origin, with a duplicate.
    let raw = [(7, 4), (8, 4), (8, 5), (7, 4)].map(VertexCoord::from);
    let g = GridGraph::normalize(&raw)?;
    println!("n = {}, rows 1..={}, cols 1..={}", g.n(), g.r_max(), g.c_max());

    let corner = VertexCoord::new(2, 1);
    println!("neighbors of {corner}: {:?}", g.neighbors(corner)?);
    println!("connected: {}", g.is_connected());

    println!("column 1: {:?}", g.area_column(1)?);
    println!("row 2 across all columns: {:?}", g.area_row(0, g.c_max() + 1, 2)?);

    let top: VertexSet = [VertexCoord::new(1, 1)].into();
    println!("boundary of {{(1,1)}}: {:?}", g.boundary(&top)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
