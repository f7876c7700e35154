use crate::algebra::{AlgebraError, Element, Field, FreeModule, PolyRing};
use crate::groebner::{buchberger, reduce};

/// Outcome of comparing two submodules of the same free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleComparison<C> {
    Equal,
    /// A generator of the second module outside the first.
    NotInFirst(Element<C>),
    /// A generator of the first module outside the second.
    NotInSecond(Element<C>),
}

impl<C> ModuleComparison<C> {
    pub fn is_equal(&self) -> bool {
        matches!(self, ModuleComparison::Equal)
    }
}

/// Decides `⟨a⟩ = ⟨b⟩` inside `ambient` by reducing each side's generators
/// modulo a Gröbner basis of the other.
pub fn module_equal<F: Field>(
    ring: &PolyRing<F>,
    ambient: &FreeModule,
    a: &[Element<F::Elem>],
    b: &[Element<F::Elem>],
) -> Result<ModuleComparison<F::Elem>, AlgebraError> {
    for f in a.iter().chain(b) {
        ring.check(f)?;
        ambient.check(f)?;
    }
    let ga = buchberger(ring, a);
    if let Some(w) = b.iter().find(|f| !reduce(ring, f, ga.generators()).is_zero()) {
        return Ok(ModuleComparison::NotInFirst(w.clone()));
    }
    let gb = buchberger(ring, b);
    if let Some(w) = a.iter().find(|f| !reduce(ring, f, gb.generators()).is_zero()) {
        return Ok(ModuleComparison::NotInSecond(w.clone()));
    }
    Ok(ModuleComparison::Equal)
}
