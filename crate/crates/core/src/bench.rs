//! Wall-clock scaling of the cover and path decomposition pipeline.

use std::time::{Duration, Instant};

use crate::cover::compute_rcl_cover;
use crate::error::{Error, Result};
use crate::gen::{generate, Shape};
use crate::pathdecomp::build_path_decomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub median: Duration,
    pub repeats: usize,
}

/// Times cover plus path decomposition on one seeded blob per size. Graph
/// generation is not timed.
pub fn run(sizes: &[usize], repeats: usize, seed: u64) -> Result<Vec<BenchRow>> {
    if repeats == 0 {
        return Err(Error::BadArgs("repeats must be at least 1".into()));
    }
    if sizes.is_empty() {
        return Err(Error::BadArgs("no sizes given".into()));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = generate(Shape::Blob, n, seed)?;
        let mut times = Vec::with_capacity(repeats);
        for _ in 0..repeats {
            let start = Instant::now();
            let cover = compute_rcl_cover(&g)?;
            let pd = build_path_decomposition(&g, &cover)?;
            times.push(start.elapsed());
            std::hint::black_box(pd);
        }
        times.sort_unstable();
        rows.push(BenchRow {
            n,
            median: times[times.len() / 2],
            repeats,
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,repeats,median_ms\n");
    for r in rows {
        out.push_str(&format!("{},{},{:.3}\n", r.n, r.repeats, r.median.as_secs_f64() * 1e3));
    }
    out
}
