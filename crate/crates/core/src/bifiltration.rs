//! Bifiltrations of planar point clouds by congruent, co-oriented ellipses.
//!
//! Every point carries an ellipse with semi-axis `a` along a fixed direction
//! and `b` across it. A set of points spans a simplex at `(a, b)` when their
//! ellipses intersect pairwise. Two congruent centrally symmetric convex
//! bodies meet iff the difference of their centers lies in the body scaled
//! by two; for ellipses this is a closed-form test.

use std::io::Read;

use thiserror::Error;

use crate::algebra::Grade;
use crate::filtration::{Multifiltration, Simplex};

/// Default tolerance at the predicate boundary.
pub const EPSILON: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum BifiltrationError {
    #[error("direction must be a nonzero finite vector")]
    Direction,
    #[error("grid needs positive axis bounds and step counts")]
    Grid,
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Points together with the unit direction of the `a` semi-axis.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    pub points: Vec<[f64; 2]>,
    direction: [f64; 2],
}

impl PointCloud {
    pub fn new(points: Vec<[f64; 2]>, direction: [f64; 2]) -> Result<Self, BifiltrationError> {
        Ok(PointCloud {
            points,
            direction: normalize(direction)?,
        })
    }

    pub fn direction(&self) -> [f64; 2] {
        self.direction
    }
}

fn normalize(d: [f64; 2]) -> Result<[f64; 2], BifiltrationError> {
    let norm = d[0].hypot(d[1]);
    if !norm.is_finite() || norm == 0.0 {
        return Err(BifiltrationError::Direction);
    }
    Ok([d[0] / norm, d[1] / norm])
}

/// Quantization of the `(a, b)` quadrant: grade `(i, j)` stands for the
/// semi-axes `(i * a_max / steps_a, j * b_max / steps_b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub a_max: f64,
    pub b_max: f64,
    pub steps_a: u32,
    pub steps_b: u32,
}

impl GridSpec {
    pub fn new(a_max: f64, b_max: f64, steps_a: u32, steps_b: u32) -> Result<Self, BifiltrationError> {
        if !(a_max > 0.0 && b_max > 0.0 && a_max.is_finite() && b_max.is_finite()) || steps_a == 0 || steps_b == 0 {
            return Err(BifiltrationError::Grid);
        }
        Ok(GridSpec { a_max, b_max, steps_a, steps_b })
    }

    pub fn a(&self, i: u32) -> f64 {
        i as f64 * self.a_max / self.steps_a as f64
    }

    pub fn b(&self, j: u32) -> f64 {
        j as f64 * self.b_max / self.steps_b as f64
    }
}

/// `q - p` in the frame `(direction, direction rotated by +90°)`; the
/// direction must be a unit vector.
fn local_delta(p: [f64; 2], q: [f64; 2], dir: [f64; 2]) -> (f64, f64) {
    let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
    (dx * dir[0] + dy * dir[1], -dx * dir[1] + dy * dir[0])
}

/// `(d / 2s)^2`, with the limit for a degenerate semi-axis `s = 0`.
fn axis_term(d: f64, s: f64) -> f64 {
    if s > 0.0 {
        (d / (2.0 * s)).powi(2)
    } else if d.abs() <= EPSILON {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Whether the ellipses with semi-axes `a` along `direction` and `b` across
/// it, centered at `p` and `q`, intersect. Tangency counts.
pub fn ellipse_intersects(p: [f64; 2], q: [f64; 2], a: f64, b: f64, direction: [f64; 2]) -> bool {
    let Ok(dir) = normalize(direction) else { return false };
    let (u, w) = local_delta(p, q, dir);
    axis_term(u, a) + axis_term(w, b) <= 1.0 + EPSILON
}

/// The smallest `a` for which the ellipses at `p` and `q` meet at the given
/// `b`, or `None` if no `a` suffices.
pub fn edge_min_axis(p: [f64; 2], q: [f64; 2], direction: [f64; 2], b: f64) -> Option<f64> {
    let dir = normalize(direction).ok()?;
    let (u, w) = local_delta(p, q, dir);
    let rest = 1.0 - axis_term(w, b);
    if rest > EPSILON {
        Some(u.abs() / (2.0 * rest.sqrt()))
    } else if u.abs() <= EPSILON && rest >= -EPSILON {
        Some(0.0)
    } else {
        None
    }
}

/// For every `j` on the grid, the least `i` with the pair present at grade
/// `(i, j)`, or `None`.
fn pair_staircase(p: [f64; 2], q: [f64; 2], dir: [f64; 2], grid: &GridSpec) -> Vec<Option<u32>> {
    let mut out = Vec::with_capacity(grid.steps_b as usize + 1);
    // the least i is nonincreasing in j
    let mut hi = grid.steps_a;
    for j in 0..=grid.steps_b {
        let b = grid.b(j);
        let present = |i: u32| ellipse_intersects(p, q, grid.a(i), b, dir);
        if !present(hi) {
            out.push(None);
            continue;
        }
        let (mut lo, mut top) = (0u32, hi);
        while lo < top {
            let mid = (lo + top) / 2;
            if present(mid) {
                top = mid;
            } else {
                lo = mid + 1;
            }
        }
        out.push(Some(top));
        hi = top;
    }
    out
}

/// Minimal grades of the up-set `{(i, j) : i >= stair[j]}`.
fn staircase_antichain(stair: &[Option<u32>]) -> Vec<Grade> {
    let mut out = Vec::new();
    let mut best: Option<u32> = None;
    for (j, s) in stair.iter().enumerate() {
        if let Some(i) = *s {
            if best.is_none_or(|b| i < b) {
                out.push(Grade::from([i, j as u32]));
                best = Some(i);
            }
        }
    }
    out
}

/// The clique bifiltration on the grid: vertices at `(0, 0)`, a simplex of
/// dimension at most `max_dim` wherever all its pairs are present. Simplices
/// that never enter on the grid are omitted.
#[allow(clippy::needless_range_loop)]
pub fn generate_ellipse_bifiltration(cloud: &PointCloud, grid: &GridSpec, max_dim: usize) -> Multifiltration {
    let n = cloud.points.len();
    let dir = cloud.direction;
    let mut stairs: Vec<Vec<Option<Vec<Option<u32>>>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = pair_staircase(cloud.points[i], cloud.points[j], dir, grid);
            if s.iter().any(Option::is_some) {
                stairs[i][j] = Some(s);
            }
        }
    }
    let mut entries: Vec<(Simplex, Vec<Grade>)> = (0..n as u32)
        .map(|v| (Simplex::new(vec![v]).unwrap(), vec![Grade::zero(2)]))
        .collect();
    // grow cliques one vertex at a time, carrying the pointwise max staircase
    let mut frontier: Vec<(Vec<u32>, Vec<Option<u32>>)> = (0..n as u32)
        .map(|v| (vec![v], vec![Some(0); grid.steps_b as usize + 1]))
        .collect();
    for _ in 1..=max_dim {
        let mut next = Vec::new();
        for (verts, stair) in &frontier {
            let last = *verts.last().unwrap() as usize;
            for w in last + 1..n {
                let mut combined = stair.clone();
                let mut alive = true;
                for &v in verts {
                    let Some(pair) = &stairs[v as usize][w] else {
                        alive = false;
                        break;
                    };
                    for (c, p) in combined.iter_mut().zip(pair) {
                        *c = match (*c, *p) {
                            (Some(x), Some(y)) => Some(x.max(y)),
                            _ => None,
                        };
                    }
                }
                if !alive || combined.iter().all(Option::is_none) {
                    continue;
                }
                let mut vs = verts.clone();
                vs.push(w as u32);
                entries.push((Simplex::new(vs.clone()).unwrap(), staircase_antichain(&combined)));
                next.push((vs, combined));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Multifiltration::new(2, entries).expect("two parameters")
}

/// Reads `x,y` rows; a first row that does not parse as numbers is taken
/// as a header.
pub fn read_points_csv(reader: impl Read) -> Result<Vec<[f64; 2]>, BifiltrationError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut points = Vec::new();
    for (k, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| BifiltrationError::Csv {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(k as u64 + 1, |p| p.line());
        let parsed: Option<Vec<f64>> = record.iter().map(|f| f.parse::<f64>().ok().filter(|v| v.is_finite())).collect();
        match parsed {
            Some(v) if v.len() == 2 => points.push([v[0], v[1]]),
            None if k == 0 => continue,
            _ => {
                return Err(BifiltrationError::Csv {
                    line,
                    message: "expected two numeric columns `x,y`".to_string(),
                })
            }
        }
    }
    Ok(points)
}
