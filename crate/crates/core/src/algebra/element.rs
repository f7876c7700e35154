use std::cmp::Ordering;
use std::fmt::Write as _;

use super::{AlgebraError, Field, Grade, MonomialOrder};

/// One term `c * x^u * e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Grade,
    pub basis: usize,
}

/// A finite sum of terms in a free module `R^N`.
///
/// Terms are kept strictly descending under the order of the [`PolyRing`]
/// that built the element, with no zero coefficients and no repeated
/// `(monomial, basis)` pairs. The zero element has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<C> {
    terms: Vec<Term<C>>,
}

impl<C> Element<C> {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    /// Leading term without the zero check; `None` for zero.
    pub fn leading(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub(crate) fn from_sorted(terms: Vec<Term<C>>) -> Self {
        Element { terms }
    }
}

/// The polynomial ring `k[x_1..x_r]` together with a monomial order on
/// module monomials. All element arithmetic goes through a ring value, so
/// the parameter count and order are never implicit.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize, order: MonomialOrder) -> Self {
        PolyRing { field, nvars, order }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn zero_grade(&self) -> Grade {
        Grade::zero(self.nvars)
    }

    fn check_grade(&self, g: &Grade) -> Result<(), AlgebraError> {
        if g.nvars() != self.nvars {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.nvars,
                found: g.nvars(),
            });
        }
        Ok(())
    }

    /// Verifies that every monomial of `f` lives in this ring.
    pub fn check(&self, f: &Element<F::Elem>) -> Result<(), AlgebraError> {
        f.terms.iter().try_for_each(|t| self.check_grade(&t.mono))
    }

    /// Canonicalizes an arbitrary list of `(coefficient, monomial, basis)`
    /// triples: sorts, merges duplicates and drops zeros.
    pub fn element(
        &self,
        terms: impl IntoIterator<Item = (F::Elem, Grade, usize)>,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        let mut raw: Vec<Term<F::Elem>> = Vec::new();
        for (coeff, mono, basis) in terms {
            self.check_grade(&mono)?;
            raw.push(Term { coeff, mono, basis });
        }
        let order = self.order;
        raw.sort_by(|a, b| order.compare(&b.mono, b.basis, &a.mono, a.basis));
        let mut out: Vec<Term<F::Elem>> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.basis == t.basis => {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.coeff));
        Ok(Element { terms: out })
    }

    /// Convenience constructor with small integer coefficients.
    pub fn element_i64(
        &self,
        terms: impl IntoIterator<Item = (i64, Grade, usize)>,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.element(
            terms
                .into_iter()
                .map(|(c, m, b)| (self.field.from_i64(c), m, b)),
        )
    }

    /// `c * x^u * e_i`.
    pub fn monomial(
        &self,
        coeff: F::Elem,
        mono: Grade,
        basis: usize,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.element([(coeff, mono, basis)])
    }

    pub fn basis_vector(&self, basis: usize) -> Element<F::Elem> {
        Element {
            terms: vec![Term {
                coeff: self.field.one(),
                mono: self.zero_grade(),
                basis,
            }],
        }
    }

    pub fn add(
        &self,
        f: &Element<F::Elem>,
        g: &Element<F::Elem>,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.add_scaled(f, &self.field.one(), &self.zero_grade(), g))
    }

    pub fn sub(
        &self,
        f: &Element<F::Elem>,
        g: &Element<F::Elem>,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        let minus_one = self.field.neg(&self.field.one());
        Ok(self.add_scaled(f, &minus_one, &self.zero_grade(), g))
    }

    pub fn neg(&self, f: &Element<F::Elem>) -> Element<F::Elem> {
        Element {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.neg(&t.coeff),
                    mono: t.mono.clone(),
                    basis: t.basis,
                })
                .collect(),
        }
    }

    /// `c * x^u * f`.
    pub fn scale(
        &self,
        f: &Element<F::Elem>,
        coeff: &F::Elem,
        shift: &Grade,
    ) -> Result<Element<F::Elem>, AlgebraError> {
        self.check_grade(shift)?;
        self.check(f)?;
        Ok(self.scale_unchecked(f, coeff, shift))
    }

    pub(crate) fn scale_unchecked(
        &self,
        f: &Element<F::Elem>,
        coeff: &F::Elem,
        shift: &Grade,
    ) -> Element<F::Elem> {
        if self.field.is_zero(coeff) {
            return Element::zero();
        }
        Element {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(&t.coeff, coeff),
                    mono: t.mono.add(shift),
                    basis: t.basis,
                })
                .collect(),
        }
    }

    /// Multiplies by the inverse of the leading coefficient.
    pub fn monic(&self, f: &Element<F::Elem>) -> Element<F::Elem> {
        match f.leading() {
            None => Element::zero(),
            Some(lt) if self.field.is_one(&lt.coeff) => f.clone(),
            Some(lt) => {
                let inv = self.field.inv(&lt.coeff).expect("nonzero leading coefficient");
                self.scale_unchecked(f, &inv, &self.zero_grade())
            }
        }
    }

    /// Returns `(LM(f) monomial, LM(f) basis index, LC(f))`.
    pub fn leading_term<'a>(
        &self,
        f: &'a Element<F::Elem>,
    ) -> Result<(&'a Grade, usize, &'a F::Elem), AlgebraError> {
        f.leading()
            .map(|t| (&t.mono, t.basis, &t.coeff))
            .ok_or(AlgebraError::ZeroElement)
    }

    pub fn compare_terms(&self, a: &Term<F::Elem>, b: &Term<F::Elem>) -> Ordering {
        self.order.compare(&a.mono, a.basis, &b.mono, b.basis)
    }

    /// `f + c * x^u * g`; the workhorse of every reduction step.
    pub(crate) fn add_scaled(
        &self,
        f: &Element<F::Elem>,
        coeff: &F::Elem,
        shift: &Grade,
        g: &Element<F::Elem>,
    ) -> Element<F::Elem> {
        if self.field.is_zero(coeff) || g.is_zero() {
            return f.clone();
        }
        let shift_is_zero = shift.is_zero();
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g
            .terms
            .iter()
            .map(|t| {
                let mono = if shift_is_zero {
                    t.mono.clone()
                } else {
                    t.mono.add(shift)
                };
                Term {
                    coeff: self.field.mul(&t.coeff, coeff),
                    mono,
                    basis: t.basis,
                }
            })
            .peekable();
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => self.compare_terms(a, b),
            };
            match ord {
                Ordering::Greater => out.push(fi.next().unwrap().clone()),
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let a = fi.next().unwrap();
                    let b = gi.next().unwrap();
                    let c = self.field.add(&a.coeff, &b.coeff);
                    if !self.field.is_zero(&c) {
                        out.push(Term {
                            coeff: c,
                            mono: b.mono,
                            basis: b.basis,
                        });
                    }
                }
            }
        }
        Element { terms: out }
    }

    /// Diagnostic rendering: `c*x1^a1*...*xr^ar*e_i` per term, descending,
    /// joined by ` + `. Zero exponents are omitted and basis indices are
    /// printed 1-based.
    pub fn render(&self, f: &Element<F::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, t) in f.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            write!(s, "{}", t.coeff).unwrap();
            if !t.mono.is_zero() {
                write!(s, "*{}", t.mono.monomial_string()).unwrap();
            }
            write!(s, "*e_{}", t.basis + 1).unwrap();
        }
        s
    }
}

/// A graded free module: the rank is the number of basis elements and each
/// basis element carries a multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    degrees: Vec<Grade>,
}

impl FreeModule {
    pub fn new(degrees: Vec<Grade>) -> Self {
        FreeModule { degrees }
    }

    /// All generators in degree zero, as for the modules `D_n`.
    pub fn zero_graded(rank: usize, nvars: usize) -> Self {
        FreeModule {
            degrees: vec![Grade::zero(nvars); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[Grade] {
        &self.degrees
    }

    pub fn degree(&self, basis: usize) -> &Grade {
        &self.degrees[basis]
    }

    pub fn check<C>(&self, f: &Element<C>) -> Result<(), AlgebraError> {
        match f.terms.iter().find(|t| t.basis >= self.rank()) {
            Some(t) => Err(AlgebraError::BasisMismatch {
                index: t.basis,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    pub fn term_degree<C>(&self, t: &Term<C>) -> Grade {
        t.mono.add(&self.degrees[t.basis])
    }

    /// The common multidegree of all terms, if `f` is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree<C>(&self, f: &Element<C>) -> Option<Grade> {
        let first = self.term_degree(f.leading()?);
        f.terms
            .iter()
            .all(|t| self.term_degree(t) == first)
            .then_some(first)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous<C>(&self, f: &Element<C>) -> bool {
        f.is_zero() || self.homogeneous_degree(f).is_some()
    }
}

/// True when all terms of `f` carry the same monomial: the shape of a
/// homogeneous element of a module whose generators all sit in degree zero.
pub fn shares_one_monomial<C>(f: &Element<C>) -> bool {
    match f.leading() {
        None => true,
        Some(lt) => f.terms().iter().all(|t| t.mono == lt.mono),
    }
}
