// Compute a nice RCL-cover and inspect its bands and rectangles.

use gridcarve::cover::{compute_rcl_cover_with, PipelineOptions};
use gridcarve::gen::{generate, Shape};
use gridcarve::SqrtGate;

pub fn run() -> gridcarve::Result<()> {
    let g = generate(Shape::Blob, 400, 11)?;
    let (cover, stats) = compute_rcl_cover_with(&g, PipelineOptions::from_env(), ())?;
    let s = SqrtGate::new(g.n()).sqrt_ceil();
    println!("n = {}, ceil(sqrt n) = {s}, {} rectangles", g.n(), cover.k());
    println!("bands: {:?}", cover.column_pairs());
    for r in &cover.rectangles {
        println!(
            "  cols ({:>2},{:>2}] rows ({:>2},{:>2}] -> {:>3} vertices",
            r.c1,
            r.c2,
            r.r1,
            r.r2,
            r.cells.len()
        );
    }
    println!(
        "cursor work: {} main + {} lookahead advances",
        stats.main_advances, stats.lookahead_advances
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
