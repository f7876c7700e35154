//! Multifiltered finite simplicial complexes: data model, text format and
//! validation.
//!
//! A multifiltration lists every simplex with its own set of entry grades.
//! Faces are never inferred from cofaces; a file that omits a face is
//! reported by [`Multifiltration::validate`].
//!
//! Text format:
//!
//! ```text
//! # comment
//! dim 2
//! simplex 0 @ (0,0)
//! simplex 0 1 @ (1,0) (0,1)
//! ```

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{minimal_antichain, Grade};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: `dim` header must appear exactly once, before any simplex")]
    Header { line: usize },
    #[error("missing `dim` header")]
    MissingHeader,
    #[error("grade {grade} has {found} entries but the filtration has {expected} parameters")]
    InconsistentGrade {
        grade: Grade,
        expected: usize,
        found: usize,
    },
    #[error("simplex {0} has no entry grades")]
    EmptyGrades(Simplex),
    #[error("simplex has a repeated vertex: {0:?}")]
    RepeatedVertex(Vec<u32>),
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
}

/// A simplex as its strictly increasing vertex list.
///
/// Simplices order canonically by dimension first, then lexicographically by
/// vertices; this order fixes the rows and columns of every matrix built
/// downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn new(mut vertices: Vec<u32>) -> Result<Self, FiltrationError> {
        if vertices.is_empty() {
            return Err(FiltrationError::EmptySimplex);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(FiltrationError::RepeatedVertex(vertices));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one faces with their boundary signs: the `i`-th face
    /// drops vertex `i` and carries `(-1)^i`.
    pub fn facets(&self) -> impl Iterator<Item = (i64, Simplex)> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            (if i % 2 == 0 { 1 } else { -1 }, Simplex(v))
        })
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A simplex with its minimal entry grades, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredSimplex {
    pub simplex: Simplex,
    pub grades: Vec<Grade>,
}

/// A finite simplicial complex filtered by `N^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multifiltration {
    nvars: usize,
    simplices: Vec<FilteredSimplex>,
    index: HashMap<Simplex, usize>,
}

impl Multifiltration {
    /// Builds the canonical form: duplicate simplices merge their grade
    /// sets, grade sets shrink to their minimal elements, and simplices sort
    /// canonically.
    pub fn new(
        nvars: usize,
        entries: impl IntoIterator<Item = (Simplex, Vec<Grade>)>,
    ) -> Result<Self, FiltrationError> {
        let mut merged: HashMap<Simplex, Vec<Grade>> = HashMap::new();
        for (simplex, grades) in entries {
            if grades.is_empty() {
                return Err(FiltrationError::EmptyGrades(simplex));
            }
            if let Some(g) = grades.iter().find(|g| g.nvars() != nvars) {
                return Err(FiltrationError::InconsistentGrade {
                    grade: g.clone(),
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            merged.entry(simplex).or_default().extend(grades);
        }
        let mut simplices: Vec<FilteredSimplex> = merged
            .into_iter()
            .map(|(simplex, grades)| FilteredSimplex {
                simplex,
                grades: minimal_antichain(grades),
            })
            .collect();
        simplices.sort_by(|a, b| a.simplex.cmp(&b.simplex));
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.simplex.clone(), i))
            .collect();
        Ok(Multifiltration {
            nvars,
            simplices,
            index,
        })
    }

    pub fn parse(text: &str) -> Result<Self, FiltrationError> {
        let mut nvars: Option<usize> = None;
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: &str| FiltrationError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            let (keyword, rest) = line
                .split_once(char::is_whitespace)
                .unwrap_or((line, ""));
            match keyword {
                "dim" => {
                    if nvars.is_some() || !entries.is_empty() {
                        return Err(FiltrationError::Header { line: line_no });
                    }
                    let r = rest
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| syntax("`dim` expects a nonnegative integer"))?;
                    nvars = Some(r);
                }
                "simplex" => {
                    let r = nvars.ok_or(FiltrationError::MissingHeader)?;
                    let (verts, grades) = rest
                        .split_once('@')
                        .ok_or_else(|| syntax("expected `@` before the entry grades"))?;
                    let vertices = verts
                        .split_whitespace()
                        .map(|v| v.parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| syntax("vertex ids must be nonnegative integers"))?;
                    let simplex = Simplex::new(vertices).map_err(|e| syntax(&e.to_string()))?;
                    let grades = parse_grades(grades).map_err(|m| syntax(&m))?;
                    if grades.is_empty() {
                        return Err(syntax("a simplex needs at least one entry grade"));
                    }
                    if let Some(g) = grades.iter().find(|g| g.nvars() != r) {
                        return Err(syntax(&format!(
                            "grade {g} has {} entries, expected {r}",
                            g.nvars()
                        )));
                    }
                    entries.push((simplex, grades));
                }
                other => return Err(syntax(&format!("unknown keyword `{other}`"))),
            }
        }
        let nvars = nvars.ok_or(FiltrationError::MissingHeader)?;
        Multifiltration::new(nvars, entries)
    }

    /// Canonical text form; `parse(to_text())` is the identity.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.nvars);
        for s in &self.simplices {
            out.push_str("simplex");
            for v in s.simplex.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push_str(" @");
            for g in &s.grades {
                out.push_str(&format!(" {g}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn simplices(&self) -> &[FilteredSimplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.simplex.dim())
    }

    pub fn index_of(&self, simplex: &Simplex) -> Option<usize> {
        self.index.get(simplex).copied()
    }

    pub fn grades_of(&self, simplex: &Simplex) -> Option<&[Grade]> {
        self.index_of(simplex)
            .map(|i| self.simplices[i].grades.as_slice())
    }

    /// All `n`-simplices in canonical order.
    pub fn of_dim(&self, n: usize) -> impl Iterator<Item = &FilteredSimplex> {
        self.simplices.iter().filter(move |s| s.simplex.dim() == n)
    }

    /// Number of `n`-simplices of the whole complex.
    pub fn count(&self, n: usize) -> usize {
        self.of_dim(n).count()
    }

    /// Componentwise maximum of all entry grades, the grade from which on
    /// the filtration is constant.
    pub fn stabilization_grade(&self) -> Grade {
        self.simplices
            .iter()
            .flat_map(|s| &s.grades)
            .fold(Grade::zero(self.nvars), |acc, g| acc.join(g))
    }

    pub fn is_one_critical(&self) -> bool {
        self.simplices.iter().all(|s| s.grades.len() == 1)
    }

    /// The `n`-simplices present at grade `v`.
    pub fn chain_basis_at(&self, v: &Grade, n: usize) -> Vec<Simplex> {
        self.of_dim(n)
            .filter(|s| s.grades.iter().any(|w| w.le(v)))
            .map(|s| s.simplex.clone())
            .collect()
    }

    /// Checks closure (every facet is listed) and monotonicity (every facet
    /// is present whenever its coface is).
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for s in &self.simplices {
            for (_, face) in s.simplex.facets() {
                let face_grades = self.grades_of(&face);
                for v in &s.grades {
                    let kind = match face_grades {
                        None => Some(ViolationKind::MissingFace),
                        Some(fg) if !fg.iter().any(|w| w.le(v)) => Some(ViolationKind::FaceEntersLater),
                        Some(_) => None,
                    };
                    if let Some(kind) = kind {
                        violations.push(Violation {
                            simplex: s.simplex.clone(),
                            grade: v.clone(),
                            face: face.clone(),
                            kind,
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

fn parse_grades(text: &str) -> Result<Vec<Grade>, String> {
    let mut grades = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let (inside, after) = body
            .split_once(')')
            .ok_or_else(|| "unclosed `(` in grade".to_string())?;
        let coords = inside
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| format!("grade coordinates must be nonnegative integers: `({inside})`"))?;
        grades.push(Grade::from(coords));
        rest = after.trim_start();
    }
    Ok(grades)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The face is not listed at all.
    MissingFace,
    /// The face is listed but no entry grade of it lies below the coface's.
    FaceEntersLater,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub simplex: Simplex,
    pub grade: Grade,
    pub face: Simplex,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::MissingFace => write!(
                f,
                "simplex {} at {}: face {} is not listed",
                self.simplex, self.grade, self.face
            ),
            ViolationKind::FaceEntersLater => write!(
                f,
                "simplex {} at {}: face {} has no entry grade below it",
                self.simplex, self.grade, self.face
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}
