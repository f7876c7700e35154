//! Multivariate division in free modules.

use std::collections::HashMap;

use crate::algebra::{Element, Field, Grade, PolyRing, Term};

/// An element with its optional cofactor.
pub(crate) type Tracked<C> = (Element<C>, Option<Element<C>>);

/// Leading-monomial index of a divisor list, bucketed by basis position.
pub(crate) struct Divisors {
    by_position: HashMap<usize, Vec<usize>>,
    leads: Vec<Option<Grade>>,
}

impl Divisors {
    pub(crate) fn new() -> Self {
        Divisors {
            by_position: HashMap::new(),
            leads: Vec::new(),
        }
    }

    pub(crate) fn from_elements<C>(elements: &[Element<C>]) -> Self {
        let mut d = Divisors::new();
        for f in elements {
            d.push(f);
        }
        d
    }

    pub(crate) fn push<C>(&mut self, f: &Element<C>) {
        let idx = self.leads.len();
        match f.leading() {
            Some(lt) => {
                self.by_position.entry(lt.basis).or_default().push(idx);
                self.leads.push(Some(lt.mono.clone()));
            }
            None => self.leads.push(None),
        }
    }

    pub(crate) fn same_position(&self, basis: usize) -> &[usize] {
        self.by_position.get(&basis).map_or(&[], |v| v.as_slice())
    }

    pub(crate) fn lead(&self, idx: usize) -> Option<&Grade> {
        self.leads[idx].as_ref()
    }

    pub(crate) fn remove(&mut self, idx: usize) {
        if self.leads[idx].take().is_some() {
            for v in self.by_position.values_mut() {
                v.retain(|&k| k != idx);
            }
        }
    }

    /// First divisor, in insertion order, whose leading monomial divides
    /// `x^mono e_basis`.
    pub(crate) fn find(&self, mono: &Grade, basis: usize, skip: Option<usize>) -> Option<usize> {
        self.same_position(basis).iter().copied().find(|&k| {
            Some(k) != skip && self.leads[k].as_ref().is_some_and(|lm| lm.le(mono))
        })
    }
}

/// Reduction state shared by plain division and cofactor-tracking division.
pub(crate) struct Division<'a, F: Field> {
    pub ring: &'a PolyRing<F>,
    pub divisors: &'a Divisors,
    pub elements: &'a [Element<F::Elem>],
    pub cofactors: Option<&'a [Element<F::Elem>]>,
    pub tail: bool,
    pub skip: Option<usize>,
}

impl<F: Field> Division<'_, F> {
    /// Divides `f` (with cofactor `s` when tracking), calling `inspect` on
    /// every intermediate dividend. Returns the remainder, the updated
    /// cofactor and the number of division steps.
    #[allow(clippy::type_complexity)]
    pub(crate) fn run(
        &self,
        f: Element<F::Elem>,
        mut s: Option<Element<F::Elem>>,
        mut inspect: impl FnMut(&Element<F::Elem>, Option<&Element<F::Elem>>),
    ) -> (Element<F::Elem>, Option<Element<F::Elem>>, usize) {
        let field = self.ring.field();
        let mut f = f;
        let mut rem: Vec<Term<F::Elem>> = Vec::new();
        let mut steps = 0;
        while let Some(lt) = f.leading() {
            match self.divisors.find(&lt.mono, lt.basis, self.skip) {
                Some(k) => {
                    let g = &self.elements[k];
                    let glt = g.leading().expect("divisor is nonzero");
                    let q = field.neg(&field.div(&lt.coeff, &glt.coeff).expect("nonzero"));
                    let w = lt.mono.checked_sub(&glt.mono).expect("divisible");
                    f = self.ring.add_scaled(&f, &q, &w, g);
                    if let (Some(s), Some(cofactors)) = (s.as_mut(), self.cofactors) {
                        *s = self.ring.add_scaled(s, &q, &w, &cofactors[k]);
                    }
                    steps += 1;
                    inspect(&f, s.as_ref());
                }
                None if self.tail => {
                    let mut terms = f.into_terms();
                    rem.push(terms.remove(0));
                    f = Element::from_sorted(terms);
                }
                None => break,
            }
        }
        if !rem.is_empty() {
            rem.extend(f.into_terms());
            f = Element::from_sorted(rem);
        }
        (f, s, steps)
    }
}

/// Full division: the remainder has no term divisible by any leading
/// monomial of `divisors`.
pub fn reduce<F: Field>(
    ring: &PolyRing<F>,
    f: &Element<F::Elem>,
    divisors: &[Element<F::Elem>],
) -> Element<F::Elem> {
    divide(ring, f, divisors, true)
}

/// Reduces only while the leading monomial is divisible.
pub fn reduce_leading<F: Field>(
    ring: &PolyRing<F>,
    f: &Element<F::Elem>,
    divisors: &[Element<F::Elem>],
) -> Element<F::Elem> {
    divide(ring, f, divisors, false)
}

fn divide<F: Field>(
    ring: &PolyRing<F>,
    f: &Element<F::Elem>,
    divisors: &[Element<F::Elem>],
    tail: bool,
) -> Element<F::Elem> {
    let index = Divisors::from_elements(divisors);
    let division = Division {
        ring,
        divisors: &index,
        elements: divisors,
        cofactors: None,
        tail,
        skip: None,
    };
    division.run(f.clone(), None, |_, _| {}).0
}

/// Replaces every generator by its normal form modulo the others until
/// nothing changes, then normalizes to monic and sorts by ascending leading
/// monomial.
pub(crate) fn autoreduce<F: Field>(ring: &PolyRing<F>, generators: &[Element<F::Elem>]) -> Vec<Element<F::Elem>> {
    let mut elements: Vec<Element<F::Elem>> = generators
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| ring.monic(f))
        .collect();
    loop {
        let mut changed = false;
        let mut index = Divisors::from_elements(&elements);
        for i in 0..elements.len() {
            if elements[i].is_zero() {
                continue;
            }
            let division = Division {
                ring,
                divisors: &index,
                elements: &elements,
                cofactors: None,
                tail: true,
                skip: Some(i),
            };
            let (r, _, _) = division.run(elements[i].clone(), None, |_, _| {});
            if r != elements[i] {
                changed = true;
                index.remove(i);
                let r = ring.monic(&r);
                if !r.is_zero() {
                    // re-register under the new leading monomial
                    let lt = r.leading().unwrap();
                    index.by_position.entry(lt.basis).or_default().push(i);
                    index.leads[i] = Some(lt.mono.clone());
                }
                elements[i] = r;
            }
        }
        elements.retain(|f| !f.is_zero());
        if !changed {
            break;
        }
    }
    let order = ring.order();
    elements.sort_by(|a, b| {
        let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
        order.compare(&la.mono, la.basis, &lb.mono, lb.basis)
    });
    elements
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, Rationals};

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, 2, MonomialOrder::default())
    }

    fn el(r: &PolyRing<Rationals>, terms: &[(i64, [u32; 2], usize)]) -> Element<num_rational::BigRational> {
        r.element_i64(terms.iter().map(|&(c, m, b)| (c, Grade::from(m), b)))
            .unwrap()
    }

    fn cycle(r: &PolyRing<Rationals>, m: [u32; 2]) -> Element<num_rational::BigRational> {
        el(r, &[(1, m, 0), (1, m, 2), (1, m, 3)])
    }

    #[test]
    fn one_division_step_clears_a_multiple() {
        let r = ring();
        let gens = vec![cycle(&r, [3, 1]), cycle(&r, [0, 2]), el(&r, &[(1, [3, 0], 1), (1, [3, 0], 2), (1, [3, 0], 4)])];
        assert!(reduce(&r, &cycle(&r, [2, 2]), &gens).is_zero());
    }

    #[test]
    fn indivisible_dividend_is_unchanged() {
        let r = ring();
        let f = cycle(&r, [3, 1]);
        assert_eq!(reduce(&r, &f, &[cycle(&r, [2, 2])]), f);
        assert!(reduce(&r, &Element::zero(), &[cycle(&r, [2, 2])]).is_zero());
    }

    #[test]
    fn tail_reduction_reaches_lower_terms() {
        // f = x e1 + y e2, G = {e2}: leading term stays, tail vanishes
        let r = ring();
        let f = el(&r, &[(1, [1, 0], 0), (1, [0, 1], 1)]);
        let g = [el(&r, &[(1, [0, 0], 1)])];
        assert_eq!(reduce(&r, &f, &g), el(&r, &[(1, [1, 0], 0)]));
        assert_eq!(reduce_leading(&r, &f, &g), f);
    }

    #[test]
    fn remainder_plus_quotient_recovers_dividend() {
        let r = ring();
        let f = el(&r, &[(3, [2, 1], 0), (1, [1, 1], 1), (-2, [0, 3], 0)]);
        let gens = vec![el(&r, &[(1, [1, 0], 0), (1, [0, 0], 1)]), el(&r, &[(2, [0, 1], 1)])];
        let index = Divisors::from_elements(&gens);
        let cof: Vec<_> = (0..gens.len()).map(|i| r.basis_vector(i)).collect();
        let division = Division { ring: &r, divisors: &index, elements: &gens, cofactors: Some(&cof), tail: true, skip: None };
        let (rem, q, _) = division.run(f.clone(), Some(Element::zero()), |_, _| {});
        // f = rem - Σ q_i g_i
        let combo = crate::groebner::evaluate_combination(&r, &q.unwrap(), &gens);
        assert_eq!(r.sub(&rem, &combo).unwrap(), f);
    }
}
