//! Gröbner bases of boundary, cycle and homology modules inside `D_n`.
//!
//! Boundaries are the column span of the shifted boundary in dimension
//! `n + 1`. Cycles are the syzygies of the shifted boundary in dimension
//! `n`, pushed into `D_n` by the embedding of fundamental elements. Homology
//! classes are represented by the normal forms of the cycle generators
//! modulo the boundary basis.

mod compare;
pub mod export;
pub mod one_critical;
pub mod oracle;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

pub use compare::{module_equal, ModuleComparison};

use crate::algebra::{shares_one_monomial, AlgebraError, Element, Field, FieldKind, FreeModule, Grade, MonomialOrder, PolyRing};
use crate::filtration::{Multifiltration, Simplex, ValidationReport};
use crate::groebner::{reduce, reduce_basis, Engine, EngineStats, GroebnerBasis, GroebnerOptions, SyzygyBasis};
use crate::presentation::{build_shifted_boundary, d_basis, PresentationError, PresentationMatrix};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("the filtration is invalid ({} violations)", .0.violations.len())]
    InvalidFiltration(ValidationReport),
    #[error("the ring has {ring} variables but the filtration has {filtration} parameters")]
    ParameterMismatch { ring: usize, filtration: usize },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("could not build the worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug, Default)]
pub struct HomologyOptions {
    /// Dimensions to compute; all dimensions of the complex when `None`.
    pub dims: Option<Vec<usize>>,
    /// Worker threads for the per-dimension fan-out; rayon's default when
    /// `None`.
    pub threads: Option<usize>,
    pub groebner: GroebnerOptions,
    /// Also emit a quotient presentation of each homology module.
    pub quotient: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub presentation: Duration,
    pub boundaries: Duration,
    pub syzygies: Duration,
    pub cycles: Duration,
    pub homology: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.presentation + self.boundaries + self.syzygies + self.cycles + self.homology
    }
}

#[derive(Clone, Debug, Default)]
pub struct DimensionStats {
    pub boundaries: EngineStats,
    pub syzygies: EngineStats,
    pub cycles: EngineStats,
    pub timings: StageTimings,
}

impl DimensionStats {
    pub fn homogeneity_violations(&self) -> usize {
        self.boundaries.homogeneity_violations + self.syzygies.homogeneity_violations + self.cycles.homogeneity_violations
    }

    pub fn homogeneity_checks(&self) -> usize {
        self.boundaries.homogeneity_checks + self.syzygies.homogeneity_checks + self.cycles.homogeneity_checks
    }
}

/// Homology generators together with their relations, unprocessed: the
/// boundary basis and the syzygies among the generators modulo boundaries.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<C> {
    pub generators: Vec<Element<C>>,
    pub boundaries: Vec<Element<C>>,
    /// Elements of the free module on `generators`.
    pub relations: Vec<Element<C>>,
}

#[derive(Clone, Debug)]
pub struct DimensionResult<C> {
    pub n: usize,
    /// Number of fundamental elements of dimension `n`.
    pub fundamentals: usize,
    /// Rank of `D_n`.
    pub d_rank: usize,
    pub boundaries: GroebnerBasis<C>,
    pub cycles: GroebnerBasis<C>,
    pub homology: Vec<Element<C>>,
    /// Syzygies of the shifted boundary columns; absent for `n = 0`.
    pub cycle_syzygies: Option<SyzygyBasis<C>>,
    pub quotient: Option<QuotientPresentation<C>>,
    pub stats: DimensionStats,
}

#[derive(Clone, Debug)]
pub struct PersistenceModules<C> {
    pub v_prime: Grade,
    pub order: MonomialOrder,
    pub field: FieldKind,
    pub dimensions: Vec<DimensionResult<C>>,
    /// Canonical bases of `D_0, D_1, ...` up to the complex dimension.
    pub bases: Vec<Vec<Simplex>>,
}

impl<C> PersistenceModules<C> {
    pub fn dimension(&self, n: usize) -> Option<&DimensionResult<C>> {
        self.dimensions.iter().find(|d| d.n == n)
    }
}

fn check_ring<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration) -> Result<(), HomologyError> {
    if ring.nvars() != mf.nvars() {
        return Err(HomologyError::ParameterMismatch {
            ring: ring.nvars(),
            filtration: mf.nvars(),
        });
    }
    Ok(())
}

fn engine<'a, F: Field>(ring: &'a PolyRing<F>, target: &'a FreeModule, options: GroebnerOptions) -> Engine<'a, F> {
    Engine::new(ring).with_options(options).with_target(target)
}

/// Reduced Gröbner basis of the boundaries from the columns of the shifted
/// boundary in dimension `n + 1`.
pub fn boundaries_from<F: Field>(
    ring: &PolyRing<F>,
    upper: &PresentationMatrix,
    options: GroebnerOptions,
) -> Result<(GroebnerBasis<F::Elem>, EngineStats), HomologyError> {
    let target = upper.target_module();
    let columns = upper.column_elements(ring)?;
    let (gb, stats) = engine(ring, &target, options).groebner(&columns);
    Ok((reduce_basis(ring, &gb), stats))
}

/// Syzygies of the columns of the shifted boundary in dimension `n >= 1`,
/// over its graded source.
pub fn cycle_syzygies<F: Field>(
    ring: &PolyRing<F>,
    p: &PresentationMatrix,
    options: GroebnerOptions,
) -> Result<(SyzygyBasis<F::Elem>, EngineStats), HomologyError> {
    let target = p.target_module();
    let source = p.source_module();
    let columns = p.column_elements(ring)?;
    let (_, syz, stats) = engine(ring, &target, options).groebner_with_syzygy(&columns, Some(&source));
    Ok((syz, stats))
}

/// Reduced Gröbner basis of the cycles in `D_n`: the embedded syzygies, or
/// for `n = 0` the images of all fundamental elements.
pub fn cycles_from<F: Field>(
    ring: &PolyRing<F>,
    p: &PresentationMatrix,
    syzygies: Option<&SyzygyBasis<F::Elem>>,
    options: GroebnerOptions,
) -> Result<(GroebnerBasis<F::Elem>, EngineStats), HomologyError> {
    let generators = match syzygies {
        None => p.fundamental_images(ring)?,
        Some(syz) => syz
            .generators()
            .iter()
            .map(|s| p.embed_source(ring, s))
            .collect::<Result<_, _>>()?,
    };
    let target = p.d_module();
    let (gb, stats) = engine(ring, &target, options).groebner(&generators);
    Ok((reduce_basis(ring, &gb), stats))
}

pub fn boundaries_gb<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    n: usize,
) -> Result<GroebnerBasis<F::Elem>, HomologyError> {
    check_ring(ring, mf)?;
    let upper = build_shifted_boundary(mf, n + 1)?;
    Ok(boundaries_from(ring, &upper, GroebnerOptions::default())?.0)
}

pub fn cycles_gb<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    n: usize,
) -> Result<GroebnerBasis<F::Elem>, HomologyError> {
    check_ring(ring, mf)?;
    let p = build_shifted_boundary(mf, n)?;
    let options = GroebnerOptions::default();
    let syz = if n == 0 { None } else { Some(cycle_syzygies(ring, &p, options)?.0) };
    Ok(cycles_from(ring, &p, syz.as_ref(), options)?.0)
}

/// Nonzero normal forms of the cycle generators modulo the boundaries.
pub fn homology_generators<F: Field>(
    ring: &PolyRing<F>,
    cycles: &GroebnerBasis<F::Elem>,
    boundaries: &GroebnerBasis<F::Elem>,
) -> Vec<Element<F::Elem>> {
    cycles
        .generators()
        .iter()
        .map(|z| reduce(ring, z, boundaries.generators()))
        .filter(|h| !h.is_zero())
        .collect()
}

fn quotient_presentation<F: Field>(
    ring: &PolyRing<F>,
    d: &FreeModule,
    homology: &[Element<F::Elem>],
    boundaries: &GroebnerBasis<F::Elem>,
    options: GroebnerOptions,
) -> QuotientPresentation<F::Elem> {
    let k = homology.len();
    let mut all = homology.to_vec();
    all.extend(boundaries.generators().iter().cloned());
    let (_, syz, _) = engine(ring, d, options).groebner_with_syzygy(&all, None);
    let mut relations: Vec<Element<F::Elem>> = Vec::new();
    for s in syz.generators() {
        let projected = ring
            .element(s.terms().iter().filter(|t| t.basis < k).map(|t| (t.coeff.clone(), t.mono.clone(), t.basis)))
            .expect("same ring");
        if !projected.is_zero() && !relations.contains(&projected) {
            relations.push(projected);
        }
    }
    QuotientPresentation {
        generators: homology.to_vec(),
        boundaries: boundaries.generators().to_vec(),
        relations,
    }
}

fn compute_dimension<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    n: usize,
    options: &HomologyOptions,
) -> Result<DimensionResult<F::Elem>, HomologyError> {
    let gopts = options.groebner;
    let mut stats = DimensionStats::default();

    let t = Instant::now();
    let p = build_shifted_boundary(mf, n)?;
    let upper = build_shifted_boundary(mf, n + 1)?;
    stats.timings.presentation = t.elapsed();

    let t = Instant::now();
    let (boundaries, bstats) = boundaries_from(ring, &upper, gopts)?;
    stats.timings.boundaries = t.elapsed();
    stats.boundaries = bstats;

    let t = Instant::now();
    let syz = if n == 0 {
        None
    } else {
        let (syz, sstats) = cycle_syzygies(ring, &p, gopts)?;
        stats.syzygies = sstats;
        Some(syz)
    };
    stats.timings.syzygies = t.elapsed();

    let t = Instant::now();
    let (cycles, cstats) = cycles_from(ring, &p, syz.as_ref(), gopts)?;
    stats.timings.cycles = t.elapsed();
    stats.cycles = cstats;

    let t = Instant::now();
    let homology = homology_generators(ring, &cycles, &boundaries);
    let quotient = options
        .quotient
        .then(|| quotient_presentation(ring, &p.d_module(), &homology, &boundaries, gopts));
    stats.timings.homology = t.elapsed();

    debug_assert_eq!(stats.homogeneity_violations(), 0, "non-homogeneous element in dimension {n}");
    debug_assert!(
        boundaries.generators().iter().chain(cycles.generators()).chain(&homology).all(shares_one_monomial),
        "element of D_{n} with more than one monomial"
    );

    Ok(DimensionResult {
        n,
        fundamentals: p.fundamentals.len(),
        d_rank: p.d_rank,
        boundaries,
        cycles,
        homology,
        cycle_syzygies: syz,
        quotient,
        stats,
    })
}

/// Runs the whole pipeline on a validated multifiltration. Dimensions are
/// computed in parallel; the result does not depend on the thread count.
pub fn compute<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    options: &HomologyOptions,
) -> Result<PersistenceModules<F::Elem>, HomologyError> {
    check_ring(ring, mf)?;
    let report = mf.validate();
    if !report.ok() {
        return Err(HomologyError::InvalidFiltration(report));
    }
    let top = mf.dimension();
    let mut dims: Vec<usize> = match &options.dims {
        Some(d) => d.clone(),
        None => top.map_or(Vec::new(), |t| (0..=t).collect()),
    };
    dims.sort_unstable();
    dims.dedup();
    let run = || -> Result<Vec<_>, HomologyError> {
        dims.par_iter()
            .map(|&n| compute_dimension(ring, mf, n, options))
            .collect()
    };
    let dimensions = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| HomologyError::ThreadPool(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let bases = top.map_or(Vec::new(), |t| (0..=t).map(|n| d_basis(mf, n)).collect());
    Ok(PersistenceModules {
        v_prime: mf.stabilization_grade(),
        order: ring.order(),
        field: ring.field().kind(),
        dimensions,
        bases,
    })
}
