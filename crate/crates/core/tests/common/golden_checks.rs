//! Comparisons against the reference tables; they panic on mismatch.

use super::*;
use mpgb::algebra::{Field, FreeModule, Grade, PolyRing};
use mpgb::groebner::is_groebner;
use mpgb::homology::{boundaries_gb, cycles_gb, module_equal};
use mpgb::presentation::{build_shifted_boundary, top_boundary};

pub fn check_scalar_boundaries() {
    let mf = fixture();
    let d1 = top_boundary(&mf, 1).unwrap().to_dense();
    for (k, (edge, sign)) in EDGES.iter().enumerate() {
        let col = canonical_index(&mf, &simplex(edge));
        for (row, v) in VERTICES.iter().enumerate() {
            let r = canonical_index(&mf, &simplex(v));
            assert_eq!(sign * d1[r][col], BOUNDARY_1[row][k], "edge {edge:?} vertex {v:?}");
        }
    }
    let d2 = top_boundary(&mf, 2).unwrap().to_dense();
    // the triangle is oriented opposite to the reference column
    for (k, (edge, sign)) in EDGES.iter().enumerate() {
        let r = canonical_index(&mf, &simplex(edge));
        assert_eq!(-sign * d2[r][0], BOUNDARY_2[k]);
    }
}

pub fn check_shifted_boundaries() {
    let mf = fixture();
    let p1 = build_shifted_boundary(&mf, 1).unwrap();
    assert_eq!((p1.rows.len(), p1.columns.len()), (4, 8));
    let mut seen = [false; 8];
    for (edge_pos, grade, entries) in SHIFTED_1 {
        let (edge, sign) = EDGES[edge_pos];
        let j = p1
            .fundamentals
            .iter()
            .position(|f| f.simplex == simplex(&edge) && f.grade == Grade::from(grade))
            .expect("reference column exists");
        seen[j] = true;
        let col = &p1.columns[j];
        for (row, e) in entries.iter().enumerate() {
            let (c, m) = parse_entry(e);
            let r = canonical_index(&mf, &simplex(&VERTICES[row]));
            let ours = col.entries.iter().find(|&&(i, _)| i == r).map_or(0, |&(_, v)| v);
            assert_eq!(sign * ours, c);
            if c != 0 {
                assert_eq!(col.grade, Grade::from(m));
            }
        }
    }
    assert!(seen.iter().all(|&s| s));

    let p2 = build_shifted_boundary(&mf, 2).unwrap();
    assert_eq!((p2.rows.len(), p2.columns.len()), (5, 1));
    assert_eq!(p2.columns[0].grade, Grade::from([2, 2]));
    for (k, e) in SHIFTED_2.iter().enumerate() {
        let (c, _) = parse_entry(e);
        let (edge, sign) = EDGES[k];
        let r = canonical_index(&mf, &simplex(&edge));
        let ours = p2.columns[0].entries.iter().find(|&&(i, _)| i == r).map_or(0, |&(_, v)| v);
        assert_eq!(-sign * ours, c);
    }
}

pub fn check_golden_modules<F: Field>(ring: &PolyRing<F>, corrected: bool) {
    let mf = fixture();
    let d0 = FreeModule::zero_graded(4, 2);
    let d1 = FreeModule::zero_graded(5, 2);
    let b0_signs = corrected.then_some(&B0_SIGNS[..]);
    let z1_signs = corrected.then_some(&Z1_SIGNS[..]);
    let z0 = vertex_elements(ring, &mf, &Z0, None);
    let b0 = vertex_elements(ring, &mf, &B0, b0_signs);
    let z1 = edge_elements(ring, &mf, &Z1, z1_signs);
    let b1 = edge_elements(ring, &mf, &B1, None);
    let cases = [
        ("Z0", cycles_gb(ring, &mf, 0).unwrap(), &d0, z0),
        ("B0", boundaries_gb(ring, &mf, 0).unwrap(), &d0, b0),
        ("Z1", cycles_gb(ring, &mf, 1).unwrap(), &d1, z1),
        ("B1", boundaries_gb(ring, &mf, 1).unwrap(), &d1, b1),
    ];
    for (name, ours, ambient, reference) in cases {
        let cmp = module_equal(ring, ambient, ours.generators(), &reference).unwrap();
        assert!(cmp.is_equal(), "{name} over {:?}: {cmp:?}", ring.field().kind());
        assert!(is_groebner(ring, ours.generators()).is_ok());
    }
    assert!(cycles_gb(ring, &mf, 2).unwrap().is_empty());
    assert!(boundaries_gb(ring, &mf, 2).unwrap().is_empty());
}
