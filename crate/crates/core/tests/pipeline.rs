mod common;

use common::*;
use mpgb::algebra::{FreeModule, MonomialOrder, PolyRing, PrimeField, Rationals};
use mpgb::groebner::reduce;
use mpgb::homology::export::{export_modules, import_element, ExportedModules};
use mpgb::homology::oracle::{check_oracle_agreement, default_bound};
use mpgb::homology::{compute, module_equal, HomologyError, HomologyOptions};
use mpgb::presentation::d_basis;

fn options(dims: Option<Vec<usize>>) -> HomologyOptions {
    HomologyOptions {
        dims,
        ..HomologyOptions::default()
    }
}

#[test]
fn oracle_agrees_on_random_corpus_over_a_prime_field() {
    for (seed, mf) in random_corpus(15) {
        let ring = PolyRing::new(PrimeField::new(32003).unwrap(), mf.nvars(), MonomialOrder::default());
        let m = compute(&ring, &mf, &HomologyOptions::default()).unwrap();
        let report = check_oracle_agreement(&ring, &mf, &m, &default_bound(&m.v_prime));
        assert!(report.is_ok(), "seed {seed}, r = {}: {report:?}", mf.nvars());
    }
}

#[test]
fn boundaries_lie_in_cycles() {
    for (seed, mf) in random_corpus(20) {
        let ring = PolyRing::new(Rationals, mf.nvars(), MonomialOrder::default());
        let m = compute(&ring, &mf, &HomologyOptions::default()).unwrap();
        for d in &m.dimensions {
            for b in d.boundaries.generators() {
                assert!(reduce(&ring, b, d.cycles.generators()).is_zero(), "seed {seed}, n = {}", d.n);
            }
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = fixture();
    let one = compute(&ring, &mf, &HomologyOptions { threads: Some(1), ..HomologyOptions::default() }).unwrap();
    let four = compute(&ring, &mf, &HomologyOptions { threads: Some(4), ..HomologyOptions::default() }).unwrap();
    for (a, b) in one.dimensions.iter().zip(&four.dimensions) {
        assert_eq!(a.cycles.generators(), b.cycles.generators());
        assert_eq!(a.boundaries.generators(), b.boundaries.generators());
        assert_eq!(a.homology, b.homology);
    }
}

#[test]
fn dimension_selection_and_out_of_range_dimensions() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = fixture();
    let m = compute(&ring, &mf, &options(Some(vec![1, 1, 5]))).unwrap();
    let ns: Vec<usize> = m.dimensions.iter().map(|d| d.n).collect();
    assert_eq!(ns, vec![1, 5]);
    let top = m.dimension(5).unwrap();
    assert!(top.cycles.is_empty() && top.boundaries.is_empty() && top.homology.is_empty());
}

#[test]
fn invalid_filtrations_are_rejected() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = mpgb::filtration::Multifiltration::parse("dim 2\nsimplex 0 1 @ (0,0)\nsimplex 0 @ (0,0)\n").unwrap();
    assert!(matches!(compute(&ring, &mf, &HomologyOptions::default()), Err(HomologyError::InvalidFiltration(_))));
    let wrong = PolyRing::new(Rationals, 3, MonomialOrder::default());
    assert!(matches!(compute(&wrong, &fixture(), &HomologyOptions::default()), Err(HomologyError::ParameterMismatch { .. })));
}

#[test]
fn empty_complex_has_no_dimensions() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = mpgb::filtration::Multifiltration::parse("dim 2\n").unwrap();
    assert!(compute(&ring, &mf, &HomologyOptions::default()).unwrap().dimensions.is_empty());
}

#[test]
fn export_round_trips_through_json() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = fixture();
    let m = compute(&ring, &mf, &HomologyOptions::default()).unwrap();
    let json = serde_json::to_string(&export_modules(&m)).unwrap();
    let back: ExportedModules = serde_json::from_str(&json).unwrap();
    assert_eq!(back.v_prime, vec![3, 2]);
    assert_eq!(back.field, "q");
    for (d, e) in m.dimensions.iter().zip(&back.dimensions) {
        let basis = d_basis(&mf, d.n);
        let ambient = FreeModule::zero_graded(basis.len(), 2);
        let cycles: Vec<_> = e.cycles.iter().map(|x| import_element(&ring, &basis, x).unwrap()).collect();
        let boundaries: Vec<_> = e.boundaries.iter().map(|x| import_element(&ring, &basis, x).unwrap()).collect();
        assert_eq!(cycles, d.cycles.generators());
        assert!(module_equal(&ring, &ambient, &boundaries, d.boundaries.generators()).unwrap().is_equal());
        assert!(e.relations.is_none());
    }
}

#[test]
fn quotient_relations_map_into_boundaries() {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let mf = fixture();
    let m = compute(&ring, &mf, &HomologyOptions { quotient: true, ..HomologyOptions::default() }).unwrap();
    let field = ring.field();
    for d in &m.dimensions {
        let q = d.quotient.as_ref().unwrap();
        assert_eq!(q.generators, d.homology);
        for rel in &q.relations {
            let image = ring
                .element(rel.terms().iter().flat_map(|t| {
                    q.generators[t.basis]
                        .terms()
                        .iter()
                        .map(move |g| (mpgb::algebra::Field::mul(field, &t.coeff, &g.coeff), t.mono.add(&g.mono), g.basis))
                }))
                .unwrap();
            assert!(reduce(&ring, &image, d.boundaries.generators()).is_zero());
        }
    }
    // vertices get identified, so dimension zero has relations
    assert!(!m.dimension(0).unwrap().quotient.as_ref().unwrap().relations.is_empty());
}
