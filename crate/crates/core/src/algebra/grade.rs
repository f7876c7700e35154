use std::fmt;

use smallvec::SmallVec;

use super::AlgebraError;

/// A vector in `N^r`.
///
/// The same type serves as a multidegree, as an entry grade of a simplex and
/// as the exponent vector of a monomial `x^u`. The derived `Ord` is plain
/// lexicographic order and is only used for canonical sorting; the partial
/// order that matters mathematically is [`Grade::le`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Grade(SmallVec<[u32; 4]>);

impl Grade {
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        Grade(exponents.into_iter().collect())
    }

    pub fn zero(nvars: usize) -> Self {
        Grade(SmallVec::from_elem(0, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn check(&self, other: &Grade) -> Result<(), AlgebraError> {
        if self.nvars() != other.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Grade) -> Result<Grade, AlgebraError> {
        self.check(other)?;
        Ok(self.join(other))
    }

    /// `x^self` divides `x^other`, i.e. `self ⪯ other` componentwise.
    pub fn divides(&self, other: &Grade) -> Result<bool, AlgebraError> {
        self.check(other)?;
        Ok(self.le(other))
    }

    /// Product order. Lengths must agree.
    pub fn le(&self, other: &Grade) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &Grade) -> Grade {
        debug_assert_eq!(self.nvars(), other.nvars());
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Monomial product `x^self * x^other`.
    pub fn add(&self, other: &Grade) -> Grade {
        debug_assert_eq!(self.nvars(), other.nvars());
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Monomial quotient `x^self / x^other`, if `other` divides `self`.
    pub fn checked_sub(&self, other: &Grade) -> Option<Grade> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Grade)
    }

    /// `x1^a1*...*xr^ar` with zero exponents omitted; `1` for the unit.
    pub fn monomial_string(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { format!("x{}", v + 1) } else { format!("x{}^{}", v + 1, e) })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl From<Vec<u32>> for Grade {
    fn from(v: Vec<u32>) -> Self {
        Grade(SmallVec::from_vec(v))
    }
}

impl From<&[u32]> for Grade {
    fn from(v: &[u32]) -> Self {
        Grade(SmallVec::from_slice(v))
    }
}

impl<const N: usize> From<[u32; N]> for Grade {
    fn from(v: [u32; N]) -> Self {
        Grade(v.iter().copied().collect())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keeps only the minimal elements of `grades` under the product order,
/// deduplicated and sorted lexicographically.
pub fn minimal_antichain(mut grades: Vec<Grade>) -> Vec<Grade> {
    grades.sort();
    grades.dedup();
    let keep: Vec<bool> = grades
        .iter()
        .map(|g| !grades.iter().any(|h| h != g && h.le(g)))
        .collect();
    grades
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}
