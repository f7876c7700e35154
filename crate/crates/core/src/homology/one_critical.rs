//! The classical pipeline for one-critical filtrations, used as a cross-check.
//!
//! When every simplex has a single entry grade `v_σ`, each chain module is
//! free on the simplices with `e_σ` in degree `v_σ`, and the boundary is a
//! matrix with entries `± x^(v_σ - v_ρ)`. Boundaries and cycles are
//! computed in that free module and then mapped into `D_n` by
//! `e_σ ↦ x^(v_σ) ê_σ`.

use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Field, FreeModule, PolyRing};
use crate::filtration::Multifiltration;
use crate::groebner::{reduce_basis, Engine, GroebnerBasis};
use crate::presentation::{top_boundary, PresentationError};

#[derive(Debug, Error)]
pub enum OneCriticalError {
    #[error("the filtration is not one-critical")]
    NotOneCritical,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The graded boundary `C_n -> C_{n-1}` over the single entry grades.
pub struct GradedBoundary<C> {
    pub source: FreeModule,
    pub target: FreeModule,
    pub columns: Vec<Element<C>>,
}

fn entry_grades(mf: &Multifiltration, n: usize) -> FreeModule {
    FreeModule::new(mf.of_dim(n).map(|s| s.grades[0].clone()).collect())
}

pub fn graded_boundary<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    n: usize,
) -> Result<GradedBoundary<F::Elem>, OneCriticalError> {
    if !mf.is_one_critical() {
        return Err(OneCriticalError::NotOneCritical);
    }
    let source = entry_grades(mf, n);
    let target = if n == 0 { FreeModule::new(Vec::new()) } else { entry_grades(mf, n - 1) };
    let m = top_boundary(mf, n)?;
    let columns = m
        .columns
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let vj = source.degree(j);
            ring.element_i64(col.iter().map(|&(i, v)| {
                let shift = vj.checked_sub(target.degree(i)).expect("faces enter no later than cofaces");
                (v, shift, i)
            }))
        })
        .collect::<Result<_, _>>()?;
    Ok(GradedBoundary { source, target, columns })
}

/// `e_σ ↦ x^(v_σ) ê_σ`.
fn to_d<F: Field>(ring: &PolyRing<F>, chain: &FreeModule, f: &Element<F::Elem>) -> Element<F::Elem> {
    ring.element(
        f.terms()
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.add(chain.degree(t.basis)), t.basis)),
    )
    .expect("same ring")
}

/// Boundaries and cycles of dimension `n`, computed in the graded chain
/// modules and mapped into `D_n`.
pub struct OneCriticalModules<C> {
    pub boundaries: GroebnerBasis<C>,
    pub cycles: GroebnerBasis<C>,
    pub boundaries_in_d: Vec<Element<C>>,
    pub cycles_in_d: Vec<Element<C>>,
}

pub fn one_critical_modules<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    n: usize,
) -> Result<OneCriticalModules<F::Elem>, OneCriticalError> {
    let lower = graded_boundary(ring, mf, n)?;
    let upper = graded_boundary(ring, mf, n + 1)?;
    let chain = &lower.source;

    let (bgb, _) = Engine::new(ring).with_target(chain).groebner(&upper.columns);
    let boundaries = reduce_basis(ring, &bgb);

    let cycle_generators: Vec<Element<F::Elem>> = if n == 0 {
        (0..chain.rank()).map(|i| ring.basis_vector(i)).collect()
    } else {
        let (_, syz, _) = Engine::new(ring)
            .with_target(&lower.target)
            .groebner_with_syzygy(&lower.columns, Some(chain));
        syz.generators().to_vec()
    };
    let (cgb, _) = Engine::new(ring).with_target(chain).groebner(&cycle_generators);
    let cycles = reduce_basis(ring, &cgb);

    Ok(OneCriticalModules {
        boundaries_in_d: boundaries.generators().iter().map(|f| to_d(ring, chain, f)).collect(),
        cycles_in_d: cycles.generators().iter().map(|f| to_d(ring, chain, f)).collect(),
        boundaries,
        cycles,
    })
}
