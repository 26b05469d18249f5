// Turn a cover into a path decomposition and compare its width to sqrt(n).

use gridcarve::gen::{generate, Shape};
use gridcarve::{build_path_decomposition, compute_rcl_cover};

pub fn run() -> gridcarve::Result<()> {
    for (shape, n) in [(Shape::Full, 10_000), (Shape::Blob, 10_000), (Shape::Walk, 10_000)] {
        let g = generate(shape, n, 5)?;
        let cover = compute_rcl_cover(&g)?;
        let pd = build_path_decomposition(&g, &cover)?;
        println!(
            "{shape:?}: {} bags, width {} = {:.2} sqrt(n)",
            pd.len(),
            pd.width(),
            pd.width() as f64 / (n as f64).sqrt()
        );
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
