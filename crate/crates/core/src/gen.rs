//! Seeded generators of connected grid graphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::{GridGraph, VertexCoord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Shape {
    /// Random lattice walk that prefers fresh cells and backtracks when stuck.
    Walk,
    /// Random frontier growth inside a square box of about twice the area.
    Blob,
    /// A near-square rectangle filled row by row.
    Full,
    /// A single row.
    Path,
}

/// A connected grid graph with exactly `n` vertices. Same seed, same graph.
pub fn generate(shape: Shape, n: usize, seed: u64) -> Result<GridGraph> {
    if n == 0 {
        return Err(Error::BadArgs("vertex count must be at least 1".into()));
    }
    if n > u32::MAX as usize / 4 {
        return Err(Error::BadArgs(format!("vertex count {n} is too large")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw = match shape {
        Shape::Walk => walk(n, &mut rng),
        Shape::Blob => blob(n, &mut rng),
        Shape::Full => full(n),
        Shape::Path => (1..=n as u32).map(|c| VertexCoord::new(1, c)).collect(),
    };
    GridGraph::normalize(&raw)
}

fn full(n: usize) -> Vec<VertexCoord> {
    let side = (1..).find(|s: &usize| s * s >= n).unwrap() as u32;
    (0..n as u32)
        .map(|i| VertexCoord::new(i / side + 1, i % side + 1))
        .collect()
}

fn steps(v: (i64, i64)) -> [(i64, i64); 4] {
    let (r, c) = v;
    [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)]
}

fn shift(cells: &[(i64, i64)]) -> Vec<VertexCoord> {
    let r0 = cells.iter().map(|v| v.0).min().unwrap_or(0);
    let c0 = cells.iter().map(|v| v.1).min().unwrap_or(0);
    cells
        .iter()
        .map(|&(r, c)| VertexCoord::new((r - r0 + 1) as u32, (c - c0 + 1) as u32))
        .collect()
}

fn walk(n: usize, rng: &mut ChaCha8Rng) -> Vec<VertexCoord> {
    let mut cells = vec![(0i64, 0i64)];
    let mut seen: HashSet<(i64, i64)> = cells.iter().copied().collect();
    let mut stack = vec![(0i64, 0i64)];
    while cells.len() < n {
        let Some(&top) = stack.last() else {
            // Everything on the trail is enclosed; restart from a random cell.
            stack.push(cells[rng.gen_range(0..cells.len())]);
            continue;
        };
        let fresh: Vec<_> = steps(top).into_iter().filter(|u| !seen.contains(u)).collect();
        match fresh.choose(rng) {
            Some(&next) => {
                seen.insert(next);
                cells.push(next);
                stack.push(next);
            }
            None => {
                stack.pop();
            }
        }
    }
    shift(&cells)
}

fn blob(n: usize, rng: &mut ChaCha8Rng) -> Vec<VertexCoord> {
    let side = (1..).find(|s: &i64| (s * s) as usize >= 2 * n).unwrap();
    let inside = |(r, c): (i64, i64)| (0..side).contains(&r) && (0..side).contains(&c);
    let start = (side / 2, side / 2);
    let mut cells = Vec::with_capacity(n);
    let mut seen: HashSet<(i64, i64)> = HashSet::with_capacity(2 * n);
    let mut frontier = vec![start];
    seen.insert(start);
    while cells.len() < n {
        let at = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(at);
        cells.push(v);
        for u in steps(v) {
            if inside(u) && seen.insert(u) {
                frontier.push(u);
            }
        }
    }
    shift(&cells)
}
