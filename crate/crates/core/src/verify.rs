//! Brute-force checkers for covers, decompositions and the cut predicates.
//!
//! Every quantity is re-derived from vertex coordinates through the naive
//! [`GridGraph`] queries. Nothing here reads scanner state, so these functions
//! serve as oracles for the linear-time pipeline. They are allowed to be slow.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cover::{nice_column_check, RclCover, RclRectangle, SqrtGate};
use crate::grid::{GridGraph, VertexCoord, VertexSet};
use crate::pathdecomp::PathDecomposition;

/// Identifier of the condition a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Rectangles have strictly positive extent inside the super rectangle.
    Rcl1,
    /// Equal left columns imply equal right columns and vertical stacking;
    /// otherwise later rectangles lie to the right.
    Rcl2,
    /// A chain of rectangles links column 0 to column `c_max + 1`.
    Rcl3,
    /// Each band's rectangles chain consecutively from row 0 to `r_max + 1`.
    Rcl4,
    /// A rectangle's cells differ from the vertices inside it.
    RclCells,
    /// Two rectangles share a vertex.
    RclDisjoint,
    /// Every vertex is in some set (and sets hold only vertices).
    Nice1,
    /// Sets are pairwise disjoint.
    Nice2,
    /// `sqrt(n) <= |U_i| <= 6 sqrt(n)`.
    Nice3,
    /// Every prefix union has at most `5 sqrt(n)` boundary vertices.
    Nice4,
    /// Every vertex occurs in a contiguous, nonempty run of bags.
    Pd1,
    /// Every edge lies inside some bag.
    Pd2,
    /// `|bag|^2 <= 121 n`.
    PdWidth,
    /// The right column of a band holds at most `sqrt(n)` vertices.
    ColSize,
    /// A band holds at least `sqrt(n)` vertices.
    ColBetween,
    /// No inner nice column leaves fewer than `sqrt(n)` vertices to its right.
    ColWitness,
    /// A cut row holds at most `3 sqrt(n)` vertices of its band.
    RowSize,
    /// A rectangle holds between `sqrt(n)` and `6 sqrt(n)` vertices.
    RowBetween,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::Rcl1 => "RCL.1",
            Condition::Rcl2 => "RCL.2",
            Condition::Rcl3 => "RCL.3",
            Condition::Rcl4 => "RCL.4",
            Condition::RclCells => "RCL.CELLS",
            Condition::RclDisjoint => "RCL.DISJOINT",
            Condition::Nice1 => "NICE.1",
            Condition::Nice2 => "NICE.2",
            Condition::Nice3 => "NICE.3",
            Condition::Nice4 => "NICE.4",
            Condition::Pd1 => "PD.1",
            Condition::Pd2 => "PD.2",
            Condition::PdWidth => "PD.WIDTH",
            Condition::ColSize => "COL.SIZE",
            Condition::ColBetween => "COL.BETWEEN",
            Condition::ColWitness => "COL.WITNESS",
            Condition::RowSize => "ROW.SIZE",
            Condition::RowBetween => "ROW.BETWEEN",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Condition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    /// Rectangle, set or bag index the violation refers to, if any.
    pub index: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
}

impl Default for VerificationReport {
    fn default() -> Self {
        Self {
            ok: true,
            violations: Vec::new(),
            width: None,
        }
    }
}

impl VerificationReport {
    fn flag(&mut self, condition: Condition, index: Option<usize>, detail: impl Into<String>) {
        self.ok = false;
        self.violations.push(Violation {
            condition,
            index,
            detail: detail.into(),
        });
    }

    /// Appends the violations of `other`.
    pub fn merge(&mut self, other: VerificationReport) {
        self.ok &= other.ok;
        self.violations.extend(other.violations);
        self.width = self.width.or(other.width);
    }

    /// Distinct condition ids that were violated, sorted.
    pub fn conditions(&self) -> Vec<Condition> {
        let mut out: Vec<_> = self.violations.iter().map(|v| v.condition).collect();
        out.sort();
        out.dedup();
        out
    }
}

fn quad(r: &RclRectangle) -> String {
    format!("({},{},{},{})", r.c1, r.c2, r.r1, r.r2)
}

/// Checks the four RCL-cover conditions, that each rectangle's cells are
/// exactly the vertices it encloses, and that cells are pairwise disjoint.
pub fn verify_rcl_cover(g: &GridGraph, cover: &RclCover) -> VerificationReport {
    let mut report = VerificationReport::default();
    let rects = &cover.rectangles;
    let (col_end, row_end) = (g.c_max() + 1, g.r_max() + 1);

    let mut in_range = vec![true; rects.len()];
    for (i, r) in rects.iter().enumerate() {
        if r.c2 <= r.c1 || r.r2 <= r.r1 {
            report.flag(Condition::Rcl1, Some(i), format!("{} has empty extent", quad(r)));
        }
        if r.c2 > col_end || r.r2 > row_end {
            in_range[i] = false;
            report.flag(Condition::Rcl1, Some(i), format!("{} leaves the super rectangle", quad(r)));
        }
    }

    for (i, a) in rects.iter().enumerate() {
        for (j, b) in rects.iter().enumerate().skip(i + 1) {
            let fine = if a.c1 == b.c1 {
                a.c2 == b.c2 && b.r1 >= a.r2
            } else {
                b.c1 >= a.c2
            };
            if !fine {
                report.flag(
                    Condition::Rcl2,
                    Some(j),
                    format!("{} #{j} is misplaced relative to {} #{i}", quad(b), quad(a)),
                );
            }
        }
    }

    // Right columns reachable by an increasing chain starting at column 0.
    let mut reached: HashSet<u32> = HashSet::new();
    for r in rects {
        if r.c1 == 0 || reached.contains(&r.c1) {
            reached.insert(r.c2);
        }
    }
    if !reached.contains(&col_end) {
        report.flag(
            Condition::Rcl3,
            None,
            format!("no chain of rectangles links column 0 to column {col_end}"),
        );
    }

    for (i, r) in rects.iter().enumerate() {
        let mut up = false;
        let mut m = i;
        loop {
            if rects[m].r1 == 0 && rects[m].c1 == r.c1 {
                up = true;
                break;
            }
            if m == 0 || rects[m - 1].r2 != rects[m].r1 {
                break;
            }
            m -= 1;
        }
        let mut down = false;
        let mut m = i;
        loop {
            if rects[m].r2 == row_end && rects[m].c1 == r.c1 {
                down = true;
                break;
            }
            if m + 1 == rects.len() || rects[m + 1].r1 != rects[m].r2 {
                break;
            }
            m += 1;
        }
        if !(up && down) {
            report.flag(
                Condition::Rcl4,
                Some(i),
                format!("{} is not on a row chain from 0 to {row_end}", quad(r)),
            );
        }
    }

    let mut owner: HashMap<VertexCoord, usize> = HashMap::new();
    for (i, r) in rects.iter().enumerate() {
        let cells: VertexSet = r.cells.iter().copied().collect();
        if in_range[i] {
            let expected = g.area_rect(r.c1, r.c2, r.r1, r.r2).unwrap_or_default();
            if cells != expected || cells.len() != r.cells.len() {
                report.flag(
                    Condition::RclCells,
                    Some(i),
                    format!(
                        "{} lists {} cells but encloses {} vertices",
                        quad(r),
                        r.cells.len(),
                        expected.len()
                    ),
                );
            }
        }
        for v in cells {
            if let Some(j) = owner.insert(v, i) {
                report.flag(
                    Condition::RclDisjoint,
                    Some(i),
                    format!("{v} belongs to rectangles {j} and {i}"),
                );
            }
        }
    }
    report
}

/// Checks the four nice-decomposition conditions for `sets` in order.
pub fn verify_nice_decomposition(g: &GridGraph, sets: &[VertexSet]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let gate = SqrtGate::new(g.n());

    let mut owner: HashMap<VertexCoord, usize> = HashMap::new();
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            if !g.contains(v) {
                report.flag(Condition::Nice1, Some(i), format!("{v} is not a vertex"));
            } else if let Some(j) = owner.insert(v, i) {
                report.flag(Condition::Nice2, Some(i), format!("{v} is in sets {j} and {i}"));
            }
        }
    }
    let missing = g.vertices().iter().filter(|v| !owner.contains_key(v)).count();
    if missing > 0 {
        let first = g.vertices().iter().find(|v| !owner.contains_key(v)).unwrap();
        report.flag(
            Condition::Nice1,
            None,
            format!("{missing} vertices are in no set, e.g. {first}"),
        );
    }

    for (i, set) in sets.iter().enumerate() {
        let size = set.len();
        if !gate.at_least_root(size) || !gate.at_most(size, 6) {
            report.flag(
                Condition::Nice3,
                Some(i),
                format!("|U| = {size} is outside [sqrt(n), 6 sqrt(n)] for n = {}", g.n()),
            );
        }
    }

    for (i, size) in prefix_boundary_sizes(g, sets).into_iter().enumerate() {
        if !gate.at_most(size, 5) {
            report.flag(
                Condition::Nice4,
                Some(i),
                format!("prefix boundary has {size} vertices, above 5 sqrt(n) for n = {}", g.n()),
            );
        }
    }
    report
}

/// `|B(U_1 ∪ ... ∪ U_i)|` for every `i`, maintained incrementally.
pub fn prefix_boundary_sizes(g: &GridGraph, sets: &[VertexSet]) -> Vec<usize> {
    let mut union: HashSet<VertexCoord> = HashSet::new();
    let mut boundary: HashSet<VertexCoord> = HashSet::new();
    let mut out = Vec::with_capacity(sets.len());
    for set in sets {
        union.extend(set.iter().copied().filter(|v| g.contains(*v)));
        for &v in set.iter().filter(|v| g.contains(**v)) {
            for u in std::iter::once(v).chain(g.neighbor_iter(v)) {
                if !union.contains(&u) {
                    continue;
                }
                if g.neighbor_iter(u).any(|w| !union.contains(&w)) {
                    boundary.insert(u);
                } else {
                    boundary.remove(&u);
                }
            }
        }
        out.push(boundary.len());
    }
    out
}

/// Checks bag-interval contiguity and edge coverage; reports the width.
pub fn verify_path_decomposition(g: &GridGraph, pd: &PathDecomposition) -> VerificationReport {
    let mut report = VerificationReport {
        width: Some(pd.width()),
        ..Default::default()
    };
    let mut seen: HashMap<VertexCoord, Vec<usize>> = HashMap::new();
    for (i, bag) in pd.bags().iter().enumerate() {
        let distinct: VertexSet = bag.iter().copied().collect();
        for v in distinct {
            if !g.contains(v) {
                report.flag(Condition::Pd1, Some(i), format!("{v} is not a vertex"));
            }
            seen.entry(v).or_default().push(i);
        }
    }
    for v in g.vertices() {
        match seen.get(v) {
            None => report.flag(Condition::Pd1, None, format!("{v} is in no bag")),
            Some(idx) => {
                if idx.last().unwrap() - idx[0] + 1 != idx.len() {
                    report.flag(
                        Condition::Pd1,
                        Some(idx[0]),
                        format!("bags holding {v} are not contiguous: {idx:?}"),
                    );
                }
            }
        }
    }
    for &v in g.vertices() {
        for u in g.neighbor_iter(v).filter(|u| *u > v) {
            let shared = match (seen.get(&v), seen.get(&u)) {
                (Some(a), Some(b)) => a.iter().any(|i| b.binary_search(i).is_ok()),
                _ => false,
            };
            if !shared {
                report.flag(Condition::Pd2, None, format!("edge {v}-{u} is in no bag"));
            }
        }
    }
    report
}

/// Checks `|bag|^2 <= 121 n` for every bag.
pub fn verify_width_bound(g: &GridGraph, pd: &PathDecomposition) -> VerificationReport {
    let mut report = VerificationReport::default();
    let gate = SqrtGate::new(g.n());
    for (i, bag) in pd.bags().iter().enumerate() {
        if !gate.at_most(bag.len(), 11) {
            report.flag(
                Condition::PdWidth,
                Some(i),
                format!("bag has {} vertices, above 11 sqrt(n) for n = {}", bag.len(), g.n()),
            );
        }
    }
    report
}

/// Checks that each band's right column is almost nice with respect to its
/// left column, searching every inner column for a witness.
pub fn verify_column_pairs(g: &GridGraph, pairs: &[(u32, u32)]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let gate = SqrtGate::new(g.n());
    let col_end = g.c_max() + 1;
    let counts: Vec<usize> = (0..=col_end)
        .map(|j| g.area_column(j).map(|s| s.len()).unwrap_or(0))
        .collect();
    // upto[j] = |Area^{0,j}|
    let upto: Vec<usize> = counts
        .iter()
        .scan(0, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    let between_of = |i: u32, j: u32| upto[j as usize] - upto[i as usize];

    for (t, &(c1, c2)) in pairs.iter().enumerate() {
        if c1 >= c2 || c2 > col_end {
            report.flag(Condition::ColBetween, Some(t), format!("({c1},{c2}) is not a band"));
            continue;
        }
        let right = counts[c2 as usize];
        if !gate.at_most(right, 1) {
            report.flag(
                Condition::ColSize,
                Some(t),
                format!("column {c2} holds {right} vertices"),
            );
        }
        let between = between_of(c1, c2);
        if !gate.at_least_root(between) {
            report.flag(
                Condition::ColBetween,
                Some(t),
                format!("band ({c1},{c2}] holds {between} vertices"),
            );
        }
        let witness = (c1 + 1..=c2).any(|k| {
            let head = between_of(c1, k);
            nice_column_check(gate, counts[k as usize], head, (k - c1) as usize)
                && gate.below_root(between_of(k, c2))
        });
        if !witness {
            report.flag(
                Condition::ColWitness,
                Some(t),
                format!("no nice column in ({c1},{c2}] leaves fewer than sqrt(n) vertices after it"),
            );
        }
    }
    report
}

/// Checks that each rectangle's bottom row is almost nice with respect to its
/// top row within the rectangle's band.
pub fn verify_row_cuts(g: &GridGraph, rects: &[RclRectangle]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let gate = SqrtGate::new(g.n());
    for (i, r) in rects.iter().enumerate() {
        let row = g.area_row(r.c1, r.c2, r.r2).map(|s| s.len()).unwrap_or(0);
        if !gate.at_most(row, 3) {
            report.flag(
                Condition::RowSize,
                Some(i),
                format!("row {} of band ({},{}] holds {row} vertices", r.r2, r.c1, r.c2),
            );
        }
        let between = g.area_rect(r.c1, r.c2, r.r1, r.r2).map(|s| s.len()).unwrap_or(0);
        if !gate.at_least_root(between) || !gate.at_most(between, 6) {
            report.flag(
                Condition::RowBetween,
                Some(i),
                format!("{} encloses {between} vertices", quad(r)),
            );
        }
    }
    report
}

/// [`verify_column_pairs`] on the cover's bands plus [`verify_row_cuts`] on
/// its rectangles.
pub fn verify_pair_predicates(g: &GridGraph, cover: &RclCover) -> VerificationReport {
    let mut report = verify_column_pairs(g, &cover.column_pairs());
    report.merge(verify_row_cuts(g, &cover.rectangles));
    report
}

/// Cell sets of a cover as vertex sets, for [`verify_nice_decomposition`].
pub fn cover_sets(cover: &RclCover) -> Vec<VertexSet> {
    cover.cell_sets().map(|c| c.iter().copied().collect()).collect()
}

/// All cover checks plus the path decomposition checks when `pd` is given.
pub fn verify_all(g: &GridGraph, cover: &RclCover, pd: Option<&PathDecomposition>) -> VerificationReport {
    let mut report = verify_rcl_cover(g, cover);
    report.merge(verify_nice_decomposition(g, &cover_sets(cover)));
    report.merge(verify_pair_predicates(g, cover));
    if let Some(pd) = pd {
        report.merge(verify_path_decomposition(g, pd));
        report.merge(verify_width_bound(g, pd));
    }
    report
}
