//! Degreewise verification by exact linear algebra.
//!
//! Every module in the pipeline is multigraded, so each graded piece is a
//! finite-dimensional vector space. A homogeneous element of degree `d`
//! contributes `x^(u-d)` times itself to degree `u ⪰ d`, whose coordinates
//! over the basis `{x^(u - deg e_i) e_i}` are just its coefficients indexed
//! by basis position.

use thiserror::Error;

use super::PersistenceModules;
use crate::algebra::{Element, Field, FreeModule, Grade, PolyRing};
use crate::filtration::Multifiltration;
use crate::presentation::{build_shifted_boundary, top_boundary, PresentationError, PresentationMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("{what} disagree in dimension {n} at degree {degree}")]
    Mismatch { n: usize, degree: Grade, what: &'static str },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Reduced row echelon form; zero rows are dropped. Two row sets span the
/// same space iff their forms are equal.
pub fn row_echelon<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> Vec<Vec<F::Elem>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col]).expect("nonzero pivot");
        for v in rows[rank].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = field.sub(v, &field.mul(&factor, p));
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Null space of the matrix whose columns are `columns` (each of length
/// `height`), as a basis of row vectors of length `columns.len()`.
pub fn kernel<F: Field>(field: &F, columns: &[Vec<F::Elem>], height: usize) -> Vec<Vec<F::Elem>> {
    let width = columns.len();
    let rows: Vec<Vec<F::Elem>> = (0..height)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let rref = row_echelon(field, rows);
    let pivots: Vec<usize> = rref
        .iter()
        .map(|r| r.iter().position(|v| !field.is_zero(v)).unwrap())
        .collect();
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); width];
            v[free] = field.one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = field.neg(&row[free]);
            }
            v
        })
        .collect()
}

pub fn rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    row_echelon(field, rows).len()
}

fn coefficient_vector<F: Field>(field: &F, f: &Element<F::Elem>, rank: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); rank];
    for t in f.terms() {
        v[t.basis] = field.add(&v[t.basis], &t.coeff);
    }
    v
}

/// Echelon basis of the degree-`u` piece of the submodule of `module`
/// generated by the homogeneous elements `generators`.
pub fn degree_span<F: Field>(
    ring: &PolyRing<F>,
    module: &FreeModule,
    generators: &[Element<F::Elem>],
    u: &Grade,
) -> Result<Vec<Vec<F::Elem>>, OracleError> {
    let mut rows = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let d = module.homogeneous_degree(g).ok_or(OracleError::NotHomogeneous)?;
        if d.le(u) {
            rows.push(coefficient_vector(ring.field(), g, module.rank()));
        }
    }
    Ok(row_echelon(ring.field(), rows))
}

/// Kernel of the degree-`u` piece of `ε_j ↦ columns[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeKernel<C> {
    pub degree: Grade,
    /// Source generators living in degree `u`, i.e. with degree `⪯ u`.
    pub active: Vec<usize>,
    /// Echelon basis, vectors over the full source rank.
    pub basis: Vec<Vec<C>>,
}

/// All grades `u` with `0 ⪯ u ⪯ bound`, lexicographically.
pub fn grades_below(bound: &Grade) -> Vec<Grade> {
    let mut out = vec![Vec::<u32>::new()];
    for &b in bound.as_slice() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Grade::from).collect()
}

/// Degreewise kernels of the map defined by homogeneous `columns` over the
/// graded `source`, for every degree `⪯ bound`.
pub fn oracle_syzygy_degreewise<F: Field>(
    ring: &PolyRing<F>,
    source: &FreeModule,
    target: &FreeModule,
    columns: &[Element<F::Elem>],
    bound: &Grade,
) -> Result<Vec<DegreeKernel<F::Elem>>, OracleError> {
    let field = ring.field();
    for (j, c) in columns.iter().enumerate() {
        if !c.is_zero() && target.homogeneous_degree(c).as_ref() != Some(source.degree(j)) {
            return Err(OracleError::NotHomogeneous);
        }
    }
    let vectors: Vec<Vec<F::Elem>> = columns
        .iter()
        .map(|c| coefficient_vector(field, c, target.rank()))
        .collect();
    Ok(grades_below(bound)
        .into_iter()
        .map(|u| {
            let active: Vec<usize> = (0..source.rank()).filter(|&j| source.degree(j).le(&u)).collect();
            let local: Vec<Vec<F::Elem>> = active.iter().map(|&j| vectors[j].clone()).collect();
            let basis = kernel(field, &local, target.rank())
                .into_iter()
                .map(|k| {
                    let mut full = vec![field.zero(); source.rank()];
                    for (pos, &j) in active.iter().enumerate() {
                        full[j] = k[pos].clone();
                    }
                    full
                })
                .collect();
            DegreeKernel {
                degree: u,
                active,
                basis: row_echelon(field, basis),
            }
        })
        .collect())
}

/// `dim Z_n(X_u)` and `dim B_n(X_u)` from the simplicial boundary of the
/// subcomplex `X_u` alone.
pub fn simplicial_dimensions<F: Field>(field: &F, mf: &Multifiltration, n: usize, u: &Grade) -> Result<(usize, usize), OracleError> {
    let present = |k: usize| -> Vec<bool> {
        mf.of_dim(k).map(|s| s.grades.iter().any(|w| w.le(u))).collect()
    };
    let restricted_rank = |k: usize| -> Result<usize, OracleError> {
        let m = top_boundary(mf, k)?;
        let cols = present(k);
        let rows: Vec<Vec<F::Elem>> = m
            .columns
            .iter()
            .zip(&cols)
            .filter(|(_, &p)| p)
            .map(|(c, _)| {
                let mut v = vec![field.zero(); m.rows.len()];
                for &(i, x) in c {
                    v[i] = field.from_i64(x);
                }
                v
            })
            .collect();
        Ok(rank(field, rows))
    };
    let cells = present(n).iter().filter(|&&p| p).count();
    let z = cells - if n == 0 { 0 } else { restricted_rank(n)? };
    let b = restricted_rank(n + 1)?;
    Ok((z, b))
}

/// Degree-`u` piece of the embedded syzygies of `p` (or of the image of all
/// fundamental elements for `n = 0`) as vectors over `D_n`.
fn oracle_cycles<F: Field>(
    ring: &PolyRing<F>,
    p: &PresentationMatrix,
    kernel: &DegreeKernel<F::Elem>,
) -> Vec<Vec<F::Elem>> {
    let field = ring.field();
    let rows = kernel
        .basis
        .iter()
        .map(|k| {
            let mut v = vec![field.zero(); p.d_rank];
            for (j, c) in k.iter().enumerate() {
                let b = p.fundamentals[j].basis_index;
                v[b] = field.add(&v[b], c);
            }
            v
        })
        .collect();
    row_echelon(field, rows)
}

/// Summary of a successful degreewise check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub dimensions: usize,
    pub degrees: usize,
}

/// Default degree bound: `v' + (2, ..., 2)`.
pub fn default_bound(v_prime: &Grade) -> Grade {
    v_prime.add(&Grade::new(std::iter::repeat_n(2, v_prime.nvars())))
}

/// Compares every computed module against the oracles at every degree
/// `⪯ bound`: cycles against the kernel of the shifted boundary, boundaries
/// against its column span in the next dimension, syzygies against the
/// kernel in source coordinates, and both dimensions against the plain
/// simplicial chain complex of `X_u`.
pub fn check_oracle_agreement<F: Field>(
    ring: &PolyRing<F>,
    mf: &Multifiltration,
    modules: &PersistenceModules<F::Elem>,
    bound: &Grade,
) -> Result<OracleReport, OracleError> {
    let field = ring.field();
    let mut report = OracleReport::default();
    for d in &modules.dimensions {
        let n = d.n;
        let p = build_shifted_boundary(mf, n)?;
        let upper = build_shifted_boundary(mf, n + 1)?;
        let dn = p.d_module();
        let source = p.source_module();
        let columns = p.column_elements(ring).expect("same ring");
        let upper_columns = upper.column_elements(ring).expect("same ring");
        let kernels = oracle_syzygy_degreewise(ring, &source, &p.target_module(), &columns, bound)?;
        for k in &kernels {
            let u = &k.degree;
            let mismatch = |what| OracleError::Mismatch { n, degree: u.clone(), what };

            let cycles = degree_span(ring, &dn, d.cycles.generators(), u)?;
            if cycles != oracle_cycles(ring, &p, k) {
                return Err(mismatch("cycles and the kernel of the shifted boundary"));
            }
            let boundaries = degree_span(ring, &dn, d.boundaries.generators(), u)?;
            let expected = degree_span(ring, &dn, &upper_columns, u)?;
            if boundaries != expected {
                return Err(mismatch("boundaries and the column span"));
            }
            if let Some(syz) = &d.cycle_syzygies {
                if degree_span(ring, &source, syz.generators(), u)? != k.basis {
                    return Err(mismatch("syzygies and the degreewise kernel"));
                }
            }
            if simplicial_dimensions(field, mf, n, u)? != (cycles.len(), boundaries.len()) {
                return Err(mismatch("dimensions and the simplicial chain complex"));
            }
            let cycle_rank = cycles.len();
            if rank(field, cycles.into_iter().chain(boundaries).collect()) != cycle_rank {
                return Err(mismatch("boundaries and cycles (inclusion)"));
            }
            report.degrees += 1;
        }
        report.dimensions += 1;
    }
    Ok(report)
}
