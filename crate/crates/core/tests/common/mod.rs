#![allow(dead_code)]

use mpgb::algebra::{Element, Field, Grade, PolyRing};
use mpgb::filtration::{Multifiltration, Simplex};

pub mod golden_checks;

pub const FOUR_VERTEX: &str = include_str!("../fixtures/four_vertex_bifiltration.mf");

pub fn fixture() -> Multifiltration {
    Multifiltration::parse(FOUR_VERTEX).expect("fixture parses")
}

pub fn simplex(v: &[u32]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

/// Rows of the reference vertex-level tables: v1, v2, v3, v4.
pub const VERTICES: [[u32; 1]; 4] = [[1], [2], [3], [4]];

/// Edges in the reference order, with the sign relating each reference
/// orientation to the sorted one: v2v1, v3v2, v4v2, v1v4, v3v4.
pub const EDGES: [([u32; 2], i64); 5] = [([1, 2], -1), ([2, 3], -1), ([2, 4], -1), ([1, 4], 1), ([3, 4], 1)];

/// Reference ∂1, rows v1..v4, columns in [`EDGES`] order.
pub const BOUNDARY_1: [[i64; 5]; 4] = [
    [1, 0, 0, -1, 0],
    [-1, 1, 1, 0, 0],
    [0, -1, 0, 0, -1],
    [0, 0, -1, 1, 1],
];

/// Reference ∂2 over [`EDGES`].
pub const BOUNDARY_2: [i64; 5] = [1, 0, 1, 1, 0];

/// Reference shifted ∂1 columns: (edge position in [`EDGES`], grade) and
/// entries over v1..v4.
pub const SHIFTED_1: [(usize, [u32; 2], [&str; 4]); 8] = [
    (0, [2, 0], ["x^2", "-x^2", "0", "0"]),
    (0, [0, 2], ["y^2", "-y^2", "0", "0"]),
    (1, [2, 0], ["0", "x^2", "-x^2", "0"]),
    (2, [0, 2], ["0", "y^2", "0", "-y^2"]),
    (2, [3, 0], ["0", "x^3", "0", "-x^3"]),
    (3, [0, 2], ["-y^2", "0", "0", "y^2"]),
    (3, [1, 1], ["-xy", "0", "0", "xy"]),
    (4, [3, 0], ["0", "0", "-x^3", "x^3"]),
];

/// Reference shifted ∂2, over [`EDGES`].
pub const SHIFTED_2: [&str; 5] = ["x^2y^2", "0", "x^2y^2", "x^2y^2", "0"];

/// Reference bases, verbatim; over v1..v4 or over [`EDGES`].
pub const Z0: [[&str; 4]; 7] = [
    ["1", "0", "0", "0"],
    ["0", "x", "0", "0"],
    ["0", "y", "0", "0"],
    ["0", "0", "x^2", "0"],
    ["0", "0", "xy^2", "0"],
    ["0", "0", "0", "x^3"],
    ["0", "0", "0", "y"],
];
pub const B0: [[&str; 4]; 7] = [
    ["0", "0", "x^2y", "x^2y"],
    ["0", "0", "x^3", "x^3"],
    ["0", "y^2", "0", "y^2"],
    ["0", "x^2", "x^2", "0"],
    ["y^2", "0", "0", "y^2"],
    ["xy", "0", "0", "xy"],
    ["x^2", "0", "x^2", "0"],
];
pub const Z1: [[&str; 5]; 3] = [
    ["x^3y", "0", "x^3y", "x^3y", "0"],
    ["y^2", "0", "y^2", "y^2", "0"],
    ["0", "x^3", "x^3", "0", "x^3"],
];
pub const B1: [[&str; 5]; 1] = [["x^2y^2", "0", "x^2y^2", "x^2y^2", "0"]];

/// Sign-corrected versions: over a field of characteristic other than two
/// the reference vectors need these signs to be boundaries and cycles.
pub const B0_SIGNS: [[i64; 4]; 7] = [
    [0, 0, 1, -1],
    [0, 0, 1, -1],
    [0, 1, 0, -1],
    [0, 1, -1, 0],
    [1, 0, 0, -1],
    [1, 0, 0, -1],
    [1, 0, -1, 0],
];
pub const Z1_SIGNS: [[i64; 5]; 3] = [[1, 0, 1, 1, 0], [1, 0, 1, 1, 0], [0, 1, -1, 0, -1]];

/// Parses `c`, `-x^2y`, `xy^2`, `0` into a coefficient and an exponent pair.
pub fn parse_entry(s: &str) -> (i64, [u32; 2]) {
    let (sign, mut rest) = match s.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, s),
    };
    if rest == "0" {
        return (0, [0, 0]);
    }
    if rest == "1" {
        return (sign, [0, 0]);
    }
    let mut exps = [0u32; 2];
    while !rest.is_empty() {
        let var = match rest.as_bytes()[0] {
            b'x' => 0,
            b'y' => 1,
            c => panic!("unexpected `{}` in entry {s}", c as char),
        };
        rest = &rest[1..];
        let mut e = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            e = digits.parse().unwrap();
            rest = &r[digits.len()..];
        }
        exps[var] += e;
    }
    (sign, exps)
}

/// Position of a simplex in the canonical basis of its dimension.
pub fn canonical_index(mf: &Multifiltration, s: &Simplex) -> usize {
    mf.of_dim(s.dim()).position(|f| &f.simplex == s).unwrap()
}

/// Converts a reference vertex vector into an element of `D_0`, with
/// optional signs.
pub fn vertex_element<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration, entries: &[&str], signs: Option<&[i64]>) -> Element<F::Elem> {
    let terms = entries.iter().enumerate().filter_map(|(k, e)| {
        let (c, m) = parse_entry(e);
        (c != 0).then(|| {
            let c = c * signs.map_or(1, |s| s[k]);
            (c, Grade::from(m), canonical_index(mf, &simplex(&VERTICES[k])))
        })
    });
    ring.element_i64(terms).unwrap()
}

/// Converts a reference edge vector into an element of `D_1`, applying the
/// orientation signs of [`EDGES`] and optional extra signs.
pub fn edge_element<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration, entries: &[&str], signs: Option<&[i64]>) -> Element<F::Elem> {
    let terms = entries.iter().enumerate().filter_map(|(k, e)| {
        let (c, m) = parse_entry(e);
        (c != 0).then(|| {
            let (edge, orient) = EDGES[k];
            let extra = signs.map_or(1, |s| s[k]);
            (c * orient * extra, Grade::from(m), canonical_index(mf, &simplex(&edge)))
        })
    });
    ring.element_i64(terms).unwrap()
}

pub fn vertex_elements<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration, rows: &[[&str; 4]], signs: Option<&[[i64; 4]]>) -> Vec<Element<F::Elem>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| vertex_element(ring, mf, r, signs.map(|s| &s[i][..])))
        .collect()
}

pub fn edge_elements<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration, rows: &[[&str; 5]], signs: Option<&[[i64; 5]]>) -> Vec<Element<F::Elem>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| edge_element(ring, mf, r, signs.map(|s| &s[i][..])))
        .collect()
}

/// Random validated multifiltrations on at most 8 vertices with up to 3
/// entry grades per simplex: `per_r` seeds for each of r = 2 and r = 3.
pub fn random_corpus(per_r: u64) -> Vec<(u64, Multifiltration)> {
    let mut out = Vec::new();
    for nvars in [2, 3] {
        let spec = mpgb::random::RandomSpec { nvars, ..Default::default() };
        for seed in 0..per_r {
            out.push((seed, mpgb::random::random_multifiltration(seed, &spec)));
        }
    }
    out
}

/// Applies a scalar boundary matrix to an element of its source, keeping
/// monomials.
pub fn apply_scalar<F: Field>(ring: &PolyRing<F>, m: &mpgb::presentation::ScalarMatrix, f: &Element<F::Elem>) -> Element<F::Elem> {
    let field = ring.field();
    ring.element(f.terms().iter().flat_map(|t| {
        m.columns[t.basis]
            .iter()
            .map(move |&(row, c)| (field.mul(&t.coeff, &field.from_i64(c)), t.mono.clone(), row))
    }))
    .unwrap()
}
