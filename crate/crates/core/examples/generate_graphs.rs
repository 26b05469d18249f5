// Seeded random connected grid graphs of each shape, printed as grid files.

use gridcarve::gen::{generate, Shape};
use gridcarve::io::grid_to_string;

pub fn run() -> gridcarve::Result<()> {
    for shape in [Shape::Walk, Shape::Blob, Shape::Full, Shape::Path] {
        let g = generate(shape, 9, 2024)?;
        println!("# {shape:?}: {} rows x {} cols", g.r_max(), g.c_max());
        print!("{}", grid_to_string(&g));
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
