// Draw a cover as SVG.
//
// `cargo run --example render_svg -- cover.svg`

use gridcarve::compute_rcl_cover;
use gridcarve::gen::{generate, Shape};

pub fn svg() -> gridcarve::Result<String> {
    let g = generate(Shape::Blob, 300, 8)?;
    let cover = compute_rcl_cover(&g)?;
    Ok(gridcarve::svg::render(&g, &cover))
}

pub fn run() -> gridcarve::Result<()> {
    println!("{} bytes of SVG", svg()?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let result = match std::env::args().nth(1) {
        Some(path) => svg().and_then(|s| Ok(std::fs::write(path, s)?)),
        None => run(),
    };
    if let Err(e) = result {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
