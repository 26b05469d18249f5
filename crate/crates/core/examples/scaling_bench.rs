// Median running time of cover plus path decomposition as n doubles.
//
// `cargo run --release --example scaling_bench -- 100000,200000,400000`

use gridcarve::bench;

pub fn run_sizes(sizes: &[usize]) -> gridcarve::Result<()> {
    let rows = bench::run(sizes, 3, 1)?;
    print!("{}", bench::to_csv(&rows));
    Ok(())
}

pub fn run() -> gridcarve::Result<()> {
    run_sizes(&[25_000, 50_000, 100_000])
}

#[allow(dead_code)]
fn main() {
    let sizes: Option<Vec<usize>> = std::env::args()
        .nth(1)
        .map(|s| s.split(',').filter_map(|t| t.parse().ok()).collect());
    let result = match sizes {
        Some(sizes) => run_sizes(&sizes),
        None => run(),
    };
    if let Err(e) = result {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
