//! Fundamental elements, scalar boundary matrices and the shifted boundary
//! presentation of a multifiltration.
//!
//! `D_n` is the free module on all `n`-simplices of the stabilized complex,
//! every generator in degree zero. The source of the shifted boundary in
//! dimension `n` is the free module on the fundamental elements of dimension
//! `n`, the generator of `(σ, v)` in degree `v`. The column of `(σ, v)` is
//! `x^v` times the simplicial boundary of `σ`, an element of `D_{n-1}`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Field, FreeModule, Grade, PolyRing};
use crate::filtration::{Multifiltration, Simplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("simplex {0} is not part of the filtration")]
    UnknownSimplex(Simplex),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A simplex together with one of its critical coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalElement {
    pub simplex: Simplex,
    pub grade: Grade,
    /// Position of `simplex` in the canonical basis of `D_n`.
    pub basis_index: usize,
}

/// The minimal entry grades of `simplex`, lexicographically sorted.
pub fn critical_coordinates(mf: &Multifiltration, simplex: &Simplex) -> Result<Vec<Grade>, PresentationError> {
    mf.grades_of(simplex)
        .map(<[Grade]>::to_vec)
        .ok_or_else(|| PresentationError::UnknownSimplex(simplex.clone()))
}

/// The canonical basis of `D_n`: all `n`-simplices in canonical order.
pub fn d_basis(mf: &Multifiltration, n: usize) -> Vec<Simplex> {
    mf.of_dim(n).map(|s| s.simplex.clone()).collect()
}

/// All fundamental elements of dimension `n`: simplices in canonical order,
/// grades of one simplex in lexicographic order.
pub fn fundamental_elements(mf: &Multifiltration, n: usize) -> Vec<FundamentalElement> {
    mf.of_dim(n)
        .enumerate()
        .flat_map(|(i, s)| {
            s.grades.iter().map(move |g| FundamentalElement {
                simplex: s.simplex.clone(),
                grade: g.clone(),
                basis_index: i,
            })
        })
        .collect()
}

/// Signed facet entries of `simplex` over the sorted row basis.
fn facet_column(
    rows: &[Simplex],
    simplex: &Simplex,
) -> Result<Vec<(usize, i64)>, PresentationError> {
    let mut entries: Vec<(usize, i64)> = simplex
        .facets()
        .map(|(sign, face)| {
            rows.binary_search(&face)
                .map(|r| (r, sign))
                .map_err(|_| PresentationError::UnknownSimplex(face))
        })
        .collect::<Result<_, _>>()?;
    entries.sort_unstable();
    Ok(entries)
}

/// A column-sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    pub rows: Vec<Simplex>,
    pub cols: Vec<Simplex>,
    /// Per column, the nonzero `(row, value)` entries by ascending row.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl ScalarMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows.len()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] = v;
            }
        }
        m
    }
}

/// The simplicial boundary `C_n(X) -> C_{n-1}(X)` of the stabilized complex
/// with alternating signs on sorted vertex lists. For `n = 0` this is the
/// zero map into the zero module.
pub fn top_boundary(mf: &Multifiltration, n: usize) -> Result<ScalarMatrix, PresentationError> {
    let cols = d_basis(mf, n);
    if n == 0 {
        return Ok(ScalarMatrix {
            rows: Vec::new(),
            columns: vec![Vec::new(); cols.len()],
            cols,
        });
    }
    let rows = d_basis(mf, n - 1);
    let columns = cols
        .iter()
        .map(|s| facet_column(&rows, s))
        .collect::<Result<_, _>>()?;
    Ok(ScalarMatrix { rows, cols, columns })
}

/// One column of a shifted boundary: `x^grade * Σ value * ê_row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedColumn {
    pub grade: Grade,
    pub entries: Vec<(usize, i64)>,
}

/// The shifted boundary in dimension `n`, from the free module on the
/// fundamental elements of dimension `n` to `D_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub n: usize,
    pub nvars: usize,
    /// Basis of `D_{n-1}`; empty for `n = 0`.
    pub rows: Vec<Simplex>,
    pub fundamentals: Vec<FundamentalElement>,
    pub columns: Vec<ShiftedColumn>,
    /// Rank of `D_n`, the codomain of [`PresentationMatrix::embed_source`].
    pub d_rank: usize,
}

impl PresentationMatrix {
    /// The graded source: generator `j` sits in the degree of fundamental
    /// element `j`.
    pub fn source_module(&self) -> FreeModule {
        FreeModule::new(self.fundamentals.iter().map(|f| f.grade.clone()).collect())
    }

    /// `D_{n-1}`, all generators in degree zero.
    pub fn target_module(&self) -> FreeModule {
        FreeModule::zero_graded(self.rows.len(), self.nvars)
    }

    /// `D_n`, all generators in degree zero.
    pub fn d_module(&self) -> FreeModule {
        FreeModule::zero_graded(self.d_rank, self.nvars)
    }

    /// Columns as elements of `D_{n-1}`.
    pub fn column_elements<F: Field>(&self, ring: &PolyRing<F>) -> Result<Vec<Element<F::Elem>>, AlgebraError> {
        self.columns
            .iter()
            .map(|c| ring.element_i64(c.entries.iter().map(|&(r, v)| (v, c.grade.clone(), r))))
            .collect()
    }

    /// The generators `x^v ê_σ` of the image of the embedding, one per
    /// fundamental element.
    pub fn fundamental_images<F: Field>(&self, ring: &PolyRing<F>) -> Result<Vec<Element<F::Elem>>, AlgebraError> {
        self.fundamentals
            .iter()
            .map(|f| ring.element_i64([(1, f.grade.clone(), f.basis_index)]))
            .collect()
    }

    /// Sends `c x^u ε_(σ,v)` to `c x^(u+v) ê_σ` in `D_n`.
    pub fn embed_source<F: Field>(
        &self,
        ring: &PolyRing<F>,
        s: &Element<F::Elem>,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.source_module().check(s)?;
        ring.check(s)?;
        ring.element(s.terms().iter().map(|t| {
            let f = &self.fundamentals[t.basis];
            (t.coeff.clone(), t.mono.add(&f.grade), f.basis_index)
        }))
    }

    /// Human-readable dump: one line per row, entries as signed monomials.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self
            .fundamentals
            .iter()
            .map(|f| format!("{}@{}", f.simplex, f.grade))
            .collect();
        let mut dense = vec![vec![String::from("0"); labels.len()]; self.rows.len()];
        for (j, c) in self.columns.iter().enumerate() {
            let mono = c.grade.monomial_string();
            for &(i, v) in &c.entries {
                dense[i][j] = match (v, mono.as_str()) {
                    (1, m) => m.to_string(),
                    (-1, m) => format!("-{m}"),
                    (v, "1") => v.to_string(),
                    (v, m) => format!("{v}*{m}"),
                };
            }
        }
        let row_labels: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let lw = row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..labels.len())
            .map(|j| dense.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        write!(out, "{:lw$}", "").unwrap();
        for (j, l) in labels.iter().enumerate() {
            write!(out, "  {:>w$}", l, w = widths[j]).unwrap();
        }
        out.push('\n');
        for (i, row) in dense.iter().enumerate() {
            write!(out, "{:lw$}", row_labels[i]).unwrap();
            for (j, e) in row.iter().enumerate() {
                write!(out, "  {:>w$}", e, w = widths[j]).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the shifted boundary in dimension `n`. For `n = 0` every column
/// is zero.
pub fn build_shifted_boundary(mf: &Multifiltration, n: usize) -> Result<PresentationMatrix, PresentationError> {
    let top = top_boundary(mf, n)?;
    let fundamentals = fundamental_elements(mf, n);
    let columns = fundamentals
        .iter()
        .map(|f| ShiftedColumn {
            grade: f.grade.clone(),
            entries: top.columns[f.basis_index].clone(),
        })
        .collect();
    Ok(PresentationMatrix {
        n,
        nvars: mf.nvars(),
        rows: top.rows,
        d_rank: top.cols.len(),
        fundamentals,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{shares_one_monomial, MonomialOrder, Rationals};

    const FOUR_VERTEX: &str = include_str!("../tests/fixtures/four_vertex_bifiltration.mf");

    fn fixture() -> Multifiltration {
        Multifiltration::parse(FOUR_VERTEX).unwrap()
    }

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn critical_coordinates_of_fixture() {
        let mf = fixture();
        assert_eq!(critical_coordinates(&mf, &s(&[1, 2])).unwrap(), vec![Grade::from([0, 2]), Grade::from([2, 0])]);
        assert_eq!(critical_coordinates(&mf, &s(&[3])).unwrap(), vec![Grade::from([1, 2]), Grade::from([2, 0])]);
        assert_eq!(critical_coordinates(&mf, &s(&[2, 3])).unwrap(), vec![Grade::from([2, 0])]);
        assert_eq!(
            critical_coordinates(&mf, &s(&[5])).unwrap_err(),
            PresentationError::UnknownSimplex(s(&[5]))
        );
    }

    #[test]
    fn fundamental_counts() {
        let mf = fixture();
        assert_eq!(fundamental_elements(&mf, 0).len(), 7);
        assert_eq!(fundamental_elements(&mf, 1).len(), 8);
        let top = fundamental_elements(&mf, 2);
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].grade, Grade::from([2, 2]));
        assert!(fundamental_elements(&mf, 3).is_empty());
    }

    #[test]
    fn zero_dimensional_boundary_is_zero() {
        let mf = fixture();
        let p = build_shifted_boundary(&mf, 0).unwrap();
        assert_eq!(p.columns.len(), 7);
        assert!(p.rows.is_empty());
        assert!(p.columns.iter().all(|c| c.entries.is_empty()));
        assert_eq!(top_boundary(&mf, 0).unwrap().to_dense().len(), 0);
    }

    #[test]
    fn embedding_shifts_by_critical_grade() {
        let mf = fixture();
        let r = PolyRing::new(Rationals, 2, MonomialOrder::default());
        let p = build_shifted_boundary(&mf, 0).unwrap();
        // fundamental 1 is vertex 2 at (0,1), fundamental 2 is vertex 2 at (1,0)
        let e = r.element_i64([(1, Grade::from([0, 0]), 2)]).unwrap();
        assert_eq!(p.embed_source(&r, &e).unwrap(), r.element_i64([(1, Grade::from([1, 0]), 1)]).unwrap());
        let e = r.element_i64([(1, Grade::from([0, 0]), 0)]).unwrap();
        assert_eq!(p.embed_source(&r, &e).unwrap(), r.basis_vector(0));
        let bad = r.element_i64([(1, Grade::from([0, 0]), 7)]).unwrap();
        assert!(p.embed_source(&r, &bad).is_err());
    }

    #[test]
    fn columns_are_homogeneous_and_chain_condition_holds() {
        let mf = fixture();
        let r = PolyRing::new(Rationals, 2, MonomialOrder::default());
        for n in 1..=2 {
            let p = build_shifted_boundary(&mf, n).unwrap();
            let lower = top_boundary(&mf, n - 1).unwrap();
            for (c, f) in p.columns.iter().zip(p.column_elements(&r).unwrap()) {
                assert!(shares_one_monomial(&f));
                assert!(c.entries.iter().all(|&(_, v)| v == 1 || v == -1));
                let mut acc = vec![0i64; lower.rows.len()];
                for &(i, v) in &c.entries {
                    for &(k, w) in &lower.columns[i] {
                        acc[k] += v * w;
                    }
                }
                assert!(acc.iter().all(|&a| a == 0));
            }
        }
    }

    #[test]
    fn render_labels_rows_and_columns() {
        let p = build_shifted_boundary(&fixture(), 2).unwrap();
        let text = p.render();
        assert!(text.contains("[1,2,4]@(2,2)"));
        assert!(text.contains("x1^2*x2^2"));
        assert_eq!(text.lines().count(), 6);
    }
}
