use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::{AlgebraError, Grade};

/// How basis positions and monomials are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Compare basis positions first, monomials break ties.
    PositionOverTerm,
    /// Compare monomials first, positions break ties.
    TermOverPosition,
}

/// Monomial order on `k[x_1..x_r]` with `x_1 > x_2 > ... > x_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    GradedLex,
    Lex,
    GradedReverseLex,
}

/// A monomial order on the module monomials `x^u e_i` of a free module.
///
/// Positions rank by ascending index: `e_1 > e_2 > ... > e_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub scheme: Scheme,
    pub tiebreak: Tiebreak,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder {
            scheme: Scheme::PositionOverTerm,
            tiebreak: Tiebreak::GradedLex,
        }
    }
}

/// Sort key whose lexicographic order agrees with a [`MonomialOrder`].
pub(crate) type OrderKey = SmallVec<[i64; 8]>;

impl MonomialOrder {
    pub fn new(scheme: Scheme, tiebreak: Tiebreak) -> Self {
        MonomialOrder { scheme, tiebreak }
    }

    pub fn cmp_monomials(&self, a: &Grade, b: &Grade) -> Ordering {
        let (a, b) = (a.as_slice(), b.as_slice());
        match self.tiebreak {
            Tiebreak::Lex => a.cmp(b),
            Tiebreak::GradedLex => total(a).cmp(&total(b)).then_with(|| a.cmp(b)),
            Tiebreak::GradedReverseLex => total(a).cmp(&total(b)).then_with(|| {
                // the smaller exponent in the last differing variable wins
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Compares `x^a e_i` with `x^b e_j`.
    pub fn compare(&self, a: &Grade, i: usize, b: &Grade, j: usize) -> Ordering {
        let position = j.cmp(&i);
        match self.scheme {
            Scheme::PositionOverTerm => position.then_with(|| self.cmp_monomials(a, b)),
            Scheme::TermOverPosition => self.cmp_monomials(a, b).then(position),
        }
    }

    pub(crate) fn key(&self, mono: &Grade, basis: usize) -> OrderKey {
        let mut key = OrderKey::new();
        let position = -(basis as i64);
        if self.scheme == Scheme::PositionOverTerm {
            key.push(position);
        }
        let e = mono.as_slice();
        match self.tiebreak {
            Tiebreak::Lex => key.extend(e.iter().map(|&x| x as i64)),
            Tiebreak::GradedLex => {
                key.push(total(e) as i64);
                key.extend(e.iter().map(|&x| x as i64));
            }
            Tiebreak::GradedReverseLex => {
                key.push(total(e) as i64);
                key.extend(e.iter().rev().map(|&x| -(x as i64)));
            }
        }
        if self.scheme == Scheme::TermOverPosition {
            key.push(position);
        }
        key
    }
}

fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scheme = match self.scheme {
            Scheme::PositionOverTerm => "pot",
            Scheme::TermOverPosition => "top",
        };
        let tiebreak = match self.tiebreak {
            Tiebreak::GradedLex => "grlex",
            Tiebreak::Lex => "lex",
            Tiebreak::GradedReverseLex => "grevlex",
        };
        write!(f, "{scheme}-{tiebreak}")
    }
}

impl FromStr for MonomialOrder {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || AlgebraError::UnknownOrder(s.to_string());
        let (scheme, tiebreak) = s.trim().split_once('-').ok_or_else(unknown)?;
        let scheme = match scheme {
            "pot" => Scheme::PositionOverTerm,
            "top" => Scheme::TermOverPosition,
            _ => return Err(unknown()),
        };
        let tiebreak = match tiebreak {
            "grlex" => Tiebreak::GradedLex,
            "lex" => Tiebreak::Lex,
            "grevlex" => Tiebreak::GradedReverseLex,
            _ => return Err(unknown()),
        };
        Ok(MonomialOrder { scheme, tiebreak })
    }
}
