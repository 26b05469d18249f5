// Check a computed cover with the brute-force verifiers, then break it.

use gridcarve::gen::{generate, Shape};
use gridcarve::verify::{verify_all, verify_rcl_cover};
use gridcarve::{build_path_decomposition, compute_rcl_cover};

pub fn run() -> gridcarve::Result<()> {
    let g = generate(Shape::Full, 81, 0)?;
    let cover = compute_rcl_cover(&g)?;
    let pd = build_path_decomposition(&g, &cover)?;
    let report = verify_all(&g, &cover, Some(&pd));
    println!("pipeline output ok: {}, width {:?}", report.ok, report.width);

    let mut broken = cover.clone();
    broken.rectangles[0].r2 -= 1;
    let report = verify_rcl_cover(&g, &broken);
    for v in &report.violations {
        println!("{} at {:?}: {}", v.condition, v.index, v.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
