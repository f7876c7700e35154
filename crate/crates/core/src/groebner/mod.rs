//! Buchberger's algorithm for submodules of free modules, with optional
//! simultaneous syzygy tracking, multivariate division and reduced bases.
//!
//! The engine follows the classical pair-queue formulation: every pair of
//! basis elements whose leading monomials share a basis position produces an
//! S-vector, which is reduced against the current basis. A nonzero remainder
//! joins the basis; a zero remainder, when cofactors are tracked, yields a
//! syzygy of the input generators.

mod engine;
mod reduce;

pub use engine::{Engine, EngineStats, GroebnerOptions};
pub use reduce::{reduce, reduce_leading};

use crate::algebra::{AlgebraError, Element, Field, FieldKind, FreeModule, MonomialOrder, PolyRing};

/// A finite Gröbner basis together with the order and field it was computed
/// for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C> {
    generators: Vec<Element<C>>,
    order: MonomialOrder,
    field: FieldKind,
    reduced: bool,
}

impl<C> GroebnerBasis<C> {
    pub(crate) fn new(
        generators: Vec<Element<C>>,
        order: MonomialOrder,
        field: FieldKind,
        reduced: bool,
    ) -> Self {
        GroebnerBasis {
            generators,
            order,
            field,
            reduced,
        }
    }

    pub fn generators(&self) -> &[Element<C>] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Element<C>> {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

impl<C: Clone> GroebnerBasis<C> {
    /// Submodule membership by division.
    pub fn contains<F: Field<Elem = C>>(&self, ring: &PolyRing<F>, f: &Element<C>) -> bool {
        reduce(ring, f, &self.generators).is_zero()
    }
}

/// Generators of `Syz(f_1..f_m)` inside the source module `R^m`, whose basis
/// element `ε_i` sits in the degree of `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyBasis<C> {
    generators: Vec<Element<C>>,
    source: FreeModule,
    inputs: Vec<Element<C>>,
}

impl<C> SyzygyBasis<C> {
    pub fn generators(&self) -> &[Element<C>] {
        &self.generators
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn inputs(&self) -> &[Element<C>] {
        &self.inputs
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

impl<C: Clone> SyzygyBasis<C> {
    /// `Σ s_i f_i`, which is zero for every genuine syzygy.
    pub fn evaluate<F: Field<Elem = C>>(&self, ring: &PolyRing<F>, s: &Element<C>) -> Element<C> {
        evaluate_combination(ring, s, &self.inputs)
    }
}

/// Evaluates `Σ_i s_i f_i` for `s` in the free module on the `f_i`.
pub fn evaluate_combination<F: Field>(
    ring: &PolyRing<F>,
    s: &Element<F::Elem>,
    inputs: &[Element<F::Elem>],
) -> Element<F::Elem> {
    let mut acc = Element::zero();
    for t in s.terms() {
        acc = ring.add_scaled(&acc, &t.coeff, &t.mono, &inputs[t.basis]);
    }
    acc
}

/// `s_21 f_1 - c s_12 f_2` with `c = LC(f_1)/LC(f_2)` and
/// `s_ij = lcm(LM f_i, LM f_j) / LM f_j`.
///
/// Returns `Ok(None)` when the leading monomials sit in different basis
/// positions, where the pair is skipped.
pub fn s_vector<F: Field>(
    ring: &PolyRing<F>,
    f1: &Element<F::Elem>,
    f2: &Element<F::Elem>,
) -> Result<Option<Element<F::Elem>>, AlgebraError> {
    let (m1, b1, c1) = ring.leading_term(f1)?;
    let (m2, b2, c2) = ring.leading_term(f2)?;
    if b1 != b2 {
        return Ok(None);
    }
    let lcm = m1.lcm(m2)?;
    let field = ring.field();
    let c = field.div(c1, c2).expect("nonzero leading coefficient");
    let left = ring.scale_unchecked(f1, &field.one(), &lcm.checked_sub(m1).unwrap());
    let s = ring.add_scaled(&left, &field.neg(&c), &lcm.checked_sub(m2).unwrap(), f2);
    Ok(Some(s))
}

/// Gröbner basis of the submodule generated by `generators`, with default
/// options and no degree bookkeeping.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, generators: &[Element<F::Elem>]) -> GroebnerBasis<F::Elem> {
    Engine::new(ring).groebner(generators).0
}

/// Gröbner basis of `⟨generators⟩` and generators of their syzygy module.
/// The source basis degrees are inferred from the inputs where they are
/// homogeneous over a zero-graded target, and set to zero otherwise.
pub fn buchberger_with_syzygy<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Element<F::Elem>],
) -> (GroebnerBasis<F::Elem>, SyzygyBasis<F::Elem>) {
    let (gb, syz, _) = Engine::new(ring).groebner_with_syzygy(generators, None);
    (gb, syz)
}

/// The unique reduced Gröbner basis of `⟨basis⟩`: monic, minimal and
/// inter-reduced, sorted by ascending leading monomial.
pub fn reduce_basis<F: Field>(ring: &PolyRing<F>, basis: &GroebnerBasis<F::Elem>) -> GroebnerBasis<F::Elem> {
    let generators = reduce::autoreduce(ring, basis.generators());
    GroebnerBasis::new(generators, ring.order(), ring.field().kind(), true)
}

/// A failed Buchberger criterion: the S-vector of generators `i` and `j`
/// does not reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionWitness<C> {
    pub i: usize,
    pub j: usize,
    pub remainder: Element<C>,
}

/// Checks the Buchberger criterion directly: every same-position S-vector
/// must reduce to zero. Zero generators are ignored.
pub fn is_groebner<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Element<F::Elem>],
) -> Result<(), CriterionWitness<F::Elem>> {
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let (gi, gj) = (&generators[i], &generators[j]);
            if gi.is_zero() || gj.is_zero() {
                continue;
            }
            if let Some(s) = s_vector(ring, gi, gj).expect("nonzero generators") {
                let remainder = reduce_leading(ring, &s, generators);
                if !remainder.is_zero() {
                    return Err(CriterionWitness { i, j, remainder });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Grade, Rationals};
    use num_rational::BigRational;

    type E = Element<BigRational>;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, 2, MonomialOrder::default())
    }

    fn g(v: &[u32]) -> Grade {
        Grade::from(v)
    }

    fn el(r: &PolyRing<Rationals>, terms: &[(i64, [u32; 2], usize)]) -> E {
        r.element_i64(terms.iter().map(|&(c, m, b)| (c, Grade::from(m), b)))
            .unwrap()
    }

    #[test]
    fn s_vector_of_parallel_columns_vanishes() {
        // x^2 (e1 - e2) and y^2 (e1 - e2)
        let r = ring();
        let f1 = el(&r, &[(1, [2, 0], 0), (-1, [2, 0], 1)]);
        let f2 = el(&r, &[(1, [0, 2], 0), (-1, [0, 2], 1)]);
        assert!(s_vector(&r, &f1, &f2).unwrap().unwrap().is_zero());
        assert!(s_vector(&r, &f1, &f1).unwrap().unwrap().is_zero());
    }

    #[test]
    fn s_vector_skips_different_positions() {
        let r = ring();
        let f1 = el(&r, &[(1, [1, 0], 0)]);
        let f2 = el(&r, &[(1, [0, 1], 1)]);
        assert_eq!(s_vector(&r, &f1, &f2).unwrap(), None);
        assert_eq!(
            s_vector(&r, &f1, &E::zero()).unwrap_err(),
            AlgebraError::ZeroElement
        );
    }

    #[test]
    fn s_vector_matches_hand_expansion() {
        // f1 = x y e1 - y e2, f2 = 2 y^2 e1 + e2: lcm = x y^2
        // y f1 - (1/2) x f2 = -y^2 e2 - (1/2) x e2
        let r = ring();
        let f1 = el(&r, &[(1, [1, 1], 0), (-1, [0, 1], 1)]);
        let f2 = el(&r, &[(2, [0, 2], 0), (1, [0, 0], 1)]);
        let s = s_vector(&r, &f1, &f2).unwrap().unwrap();
        let half = r.field().parse("-1/2").unwrap();
        let want = r
            .element([
                (r.field().from_i64(-1), g(&[0, 2]), 1),
                (half, g(&[1, 0]), 1),
            ])
            .unwrap();
        assert_eq!(s, want);
    }

    #[test]
    fn single_generator_is_a_basis() {
        let r = ring();
        let f = el(&r, &[(1, [2, 2], 0), (1, [2, 2], 2), (1, [2, 2], 3)]);
        let gb = buchberger(&r, std::slice::from_ref(&f));
        assert_eq!(gb.generators(), &[f]);
    }

    #[test]
    fn coordinate_pair_is_already_a_basis() {
        let r = ring();
        let f = vec![el(&r, &[(1, [1, 0], 0)]), el(&r, &[(1, [0, 1], 0)])];
        let gb = buchberger(&r, &f);
        assert_eq!(gb.generators(), &f[..]);
        assert!(is_groebner(&r, gb.generators()).is_ok());
    }

    #[test]
    fn zero_inputs_are_dropped() {
        let r = ring();
        let gb = buchberger(&r, &[E::zero(), el(&r, &[(3, [1, 0], 0)])]);
        assert_eq!(gb.len(), 1);
        assert!(buchberger(&r, &[]).is_empty());
    }

    #[test]
    fn inter_reduction() {
        let r = ring();
        let x = el(&r, &[(1, [1, 0], 0)]);
        let xy = el(&r, &[(1, [1, 0], 0), (1, [0, 1], 0)]);
        let gb = GroebnerBasis::new(vec![x.clone(), xy], r.order(), r.field().kind(), false);
        let red = reduce_basis(&r, &gb);
        let y = el(&r, &[(1, [0, 1], 0)]);
        assert_eq!(red.generators(), &[y, x]);
        assert!(red.is_reduced());
        assert_eq!(reduce_basis(&r, &red), red);
    }

    #[test]
    fn monic_normalization() {
        let r = ring();
        let gb = GroebnerBasis::new(vec![el(&r, &[(2, [0, 0], 0)])], r.order(), r.field().kind(), false);
        assert_eq!(reduce_basis(&r, &gb).generators(), &[r.basis_vector(0)]);
    }

    #[test]
    fn syzygy_of_lone_generator_is_trivial() {
        let r = ring();
        let f = el(&r, &[(1, [1, 1], 0), (-1, [0, 1], 1)]);
        let (_, syz) = buchberger_with_syzygy(&r, &[f]);
        assert!(syz.is_empty());
    }

    #[test]
    fn duplicate_generators_give_their_difference() {
        let r = ring();
        let f = el(&r, &[(1, [1, 0], 0), (-1, [1, 0], 1)]);
        let (_, syz) = buchberger_with_syzygy(&r, &[f.clone(), f]);
        let diff = el(&r, &[(1, [0, 0], 0), (-1, [0, 0], 1)]);
        assert!(syz.generators().iter().any(|s| *s == diff || r.neg(s) == diff));
        for s in syz.generators() {
            assert!(syz.evaluate(&r, s).is_zero());
        }
    }

    #[test]
    fn zero_input_is_its_own_syzygy() {
        let r = ring();
        let (gb, syz) = buchberger_with_syzygy(&r, &[E::zero(), el(&r, &[(1, [1, 0], 0)])]);
        assert_eq!(gb.len(), 1);
        assert_eq!(syz.generators(), &[r.basis_vector(0)]);
    }

    #[test]
    fn criterion_check_on_small_sets() {
        let r = ring();
        let f = vec![
            el(&r, &[(1, [1, 1], 0), (-1, [0, 1], 1)]),
            el(&r, &[(1, [1, 0], 1)]),
        ];
        assert!(is_groebner(&r, &f).is_ok());
        assert!(is_groebner(&r, &[]).is_ok());
        // {x e1 + y e2, y e1}: S = y^2 e2, irreducible
        let bad = vec![
            el(&r, &[(1, [1, 0], 0), (1, [0, 1], 1)]),
            el(&r, &[(1, [0, 1], 0)]),
        ];
        let w = is_groebner(&r, &bad).unwrap_err();
        assert_eq!((w.i, w.j), (0, 1));
        assert_eq!(w.remainder, el(&r, &[(1, [0, 2], 1)]));
        let gb = buchberger(&r, &bad);
        assert!(is_groebner(&r, gb.generators()).is_ok());
    }
}
