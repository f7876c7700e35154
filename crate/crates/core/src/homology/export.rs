//! Serializable view of pipeline results, with basis positions resolved to
//! simplices and coefficients kept as exact decimal strings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DimensionResult, PersistenceModules};
use crate::algebra::{AlgebraError, Element, Field, Grade, PolyRing};
use crate::filtration::Simplex;
use crate::groebner::EngineStats;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedTerm {
    pub coeff: String,
    pub monomial: Vec<u32>,
    pub basis: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedElement {
    pub terms: Vec<ExportedTerm>,
}

/// A term of a relation among homology generators; `generator` is the
/// position in the homology list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedRelationTerm {
    pub coeff: String,
    pub monomial: Vec<u32>,
    pub generator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedRelation {
    pub terms: Vec<ExportedRelationTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportedTimings {
    pub presentation_ms: f64,
    pub boundaries_ms: f64,
    pub syzygies_ms: f64,
    pub cycles_ms: f64,
    pub homology_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportedStats {
    pub fundamentals: usize,
    pub d_rank: usize,
    pub boundary_engine: EngineStats,
    pub syzygy_engine: EngineStats,
    pub cycle_engine: EngineStats,
    pub timings: ExportedTimings,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportedDimension {
    pub n: usize,
    pub boundaries: Vec<ExportedElement>,
    pub cycles: Vec<ExportedElement>,
    pub homology: Vec<ExportedElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<ExportedRelation>>,
    pub stats: ExportedStats,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportedModules {
    pub v_prime: Vec<u32>,
    pub field: String,
    pub order: String,
    pub dimensions: Vec<ExportedDimension>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ImportError {
    #[error("coefficient `{0}` is not an element of the field")]
    Coefficient(String),
    #[error("simplex {0:?} is not a basis element")]
    UnknownBasis(Vec<u32>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn export_element<C: std::fmt::Display>(f: &Element<C>, basis: &[Simplex]) -> ExportedElement {
    ExportedElement {
        terms: f
            .terms()
            .iter()
            .map(|t| ExportedTerm {
                coeff: t.coeff.to_string(),
                monomial: t.mono.as_slice().to_vec(),
                basis: basis[t.basis].vertices().to_vec(),
            })
            .collect(),
    }
}

/// Rebuilds an element of the free module on `basis`.
pub fn import_element<F: Field>(
    ring: &PolyRing<F>,
    basis: &[Simplex],
    e: &ExportedElement,
) -> Result<Element<F::Elem>, ImportError> {
    let terms = e
        .terms
        .iter()
        .map(|t| {
            let coeff = ring
                .field()
                .parse(&t.coeff)
                .ok_or_else(|| ImportError::Coefficient(t.coeff.clone()))?;
            let idx = basis
                .iter()
                .position(|s| s.vertices() == t.basis.as_slice())
                .ok_or_else(|| ImportError::UnknownBasis(t.basis.clone()))?;
            Ok((coeff, Grade::from(t.monomial.clone()), idx))
        })
        .collect::<Result<Vec<_>, ImportError>>()?;
    Ok(ring.element(terms)?)
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn export_dimension<C: std::fmt::Display>(d: &DimensionResult<C>, basis: &[Simplex]) -> ExportedDimension {
    let list = |gens: &[Element<C>]| gens.iter().map(|f| export_element(f, basis)).collect();
    let t = &d.stats.timings;
    ExportedDimension {
        n: d.n,
        boundaries: list(d.boundaries.generators()),
        cycles: list(d.cycles.generators()),
        homology: list(&d.homology),
        relations: d.quotient.as_ref().map(|q| {
            q.relations
                .iter()
                .map(|r| ExportedRelation {
                    terms: r
                        .terms()
                        .iter()
                        .map(|t| ExportedRelationTerm {
                            coeff: t.coeff.to_string(),
                            monomial: t.mono.as_slice().to_vec(),
                            generator: t.basis,
                        })
                        .collect(),
                })
                .collect()
        }),
        stats: ExportedStats {
            fundamentals: d.fundamentals,
            d_rank: d.d_rank,
            boundary_engine: d.stats.boundaries.clone(),
            syzygy_engine: d.stats.syzygies.clone(),
            cycle_engine: d.stats.cycles.clone(),
            timings: ExportedTimings {
                presentation_ms: ms(t.presentation),
                boundaries_ms: ms(t.boundaries),
                syzygies_ms: ms(t.syzygies),
                cycles_ms: ms(t.cycles),
                homology_ms: ms(t.homology),
            },
        },
    }
}

pub fn export_modules<C: std::fmt::Display>(m: &PersistenceModules<C>) -> ExportedModules {
    ExportedModules {
        v_prime: m.v_prime.as_slice().to_vec(),
        field: m.field.to_string(),
        order: m.order.to_string(),
        dimensions: m
            .dimensions
            .iter()
            .map(|d| export_dimension(d, m.bases.get(d.n).map_or(&[][..], Vec::as_slice)))
            .collect(),
    }
}
