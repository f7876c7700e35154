use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::reduce::{Division, Divisors, Tracked};
use super::{GroebnerBasis, SyzygyBasis};
use crate::algebra::{Element, Field, FreeModule, Grade, OrderKey, PolyRing};

/// Knobs of the Buchberger engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Reduce below the leading term while processing S-vectors.
    pub tail_reduce: bool,
    /// Skip pairs covered by the chain criterion. Never applied while
    /// syzygies are tracked, since every zero reduction is a generator.
    pub chain_criterion: bool,
    /// Count non-homogeneous intermediate elements (needs a graded target).
    pub check_homogeneity: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            tail_reduce: true,
            chain_criterion: true,
            check_homogeneity: cfg!(debug_assertions),
        }
    }
}

/// Counters collected during one engine run.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EngineStats {
    pub pairs_enqueued: usize,
    pub pairs_processed: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub reduction_steps: usize,
    pub basis_size: usize,
    pub homogeneity_checks: usize,
    pub homogeneity_violations: usize,
}

impl EngineStats {
    pub fn absorb(&mut self, other: &EngineStats) {
        self.pairs_enqueued += other.pairs_enqueued;
        self.pairs_processed += other.pairs_processed;
        self.pairs_skipped += other.pairs_skipped;
        self.zero_reductions += other.zero_reductions;
        self.reduction_steps += other.reduction_steps;
        self.basis_size += other.basis_size;
        self.homogeneity_checks += other.homogeneity_checks;
        self.homogeneity_violations += other.homogeneity_violations;
    }
}

#[derive(PartialEq, Eq)]
struct Pair {
    key: OrderKey,
    i: usize,
    j: usize,
    lcm: Grade,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .cmp(&other.key)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Configured Buchberger engine over a ring, optionally aware of the
/// grading of the target module.
pub struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    options: GroebnerOptions,
    target: Option<&'a FreeModule>,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(ring: &'a PolyRing<F>) -> Self {
        Engine {
            ring,
            options: GroebnerOptions::default(),
            target: None,
        }
    }

    pub fn with_options(mut self, options: GroebnerOptions) -> Self {
        self.options = options;
        self
    }

    /// Declares the graded module the inputs live in; enables degree
    /// inference for syzygy sources and homogeneity accounting.
    pub fn with_target(mut self, target: &'a FreeModule) -> Self {
        self.target = Some(target);
        self
    }

    pub fn options(&self) -> GroebnerOptions {
        self.options
    }

    /// Buchberger's algorithm.
    pub fn groebner(&self, generators: &[Element<F::Elem>]) -> (GroebnerBasis<F::Elem>, EngineStats) {
        let mut run = Run::new(self, None);
        run.seed(generators);
        run.drain();
        let stats = run.finish_stats();
        let gb = GroebnerBasis::new(run.basis, self.ring.order(), self.ring.field().kind(), false);
        (gb, stats)
    }

    /// Buchberger's algorithm with cofactor tracking. `source` fixes the
    /// degrees of the source basis `ε_i`; when absent they are inferred from
    /// the inputs.
    pub fn groebner_with_syzygy(
        &self,
        generators: &[Element<F::Elem>],
        source: Option<&FreeModule>,
    ) -> (GroebnerBasis<F::Elem>, SyzygyBasis<F::Elem>, EngineStats) {
        let source = match source {
            Some(s) => s.clone(),
            None => FreeModule::new(
                generators
                    .iter()
                    .map(|f| {
                        self.target
                            .and_then(|t| t.homogeneous_degree(f))
                            .unwrap_or_else(|| self.ring.zero_grade())
                    })
                    .collect(),
            ),
        };
        let mut run = Run::new(self, Some(&source));
        run.seed(generators);
        run.drain();
        let stats = run.finish_stats();
        let syzygies = std::mem::take(&mut run.syzygies);
        let gb = GroebnerBasis::new(run.basis, self.ring.order(), self.ring.field().kind(), false);
        let syz = SyzygyBasis {
            generators: syzygies,
            source,
            inputs: generators.to_vec(),
        };
        (gb, syz, stats)
    }
}

struct Run<'e, 'a, F: Field> {
    engine: &'e Engine<'a, F>,
    source: Option<&'e FreeModule>,
    basis: Vec<Element<F::Elem>>,
    cofactors: Vec<Element<F::Elem>>,
    divisors: Divisors,
    queue: BinaryHeap<Reverse<Pair>>,
    pending: HashSet<(usize, usize)>,
    syzygies: Vec<Element<F::Elem>>,
    stats: EngineStats,
}

impl<'e, 'a, F: Field> Run<'e, 'a, F> {
    fn new(engine: &'e Engine<'a, F>, source: Option<&'e FreeModule>) -> Self {
        Run {
            engine,
            source,
            basis: Vec::new(),
            cofactors: Vec::new(),
            divisors: Divisors::new(),
            queue: BinaryHeap::new(),
            pending: HashSet::new(),
            syzygies: Vec::new(),
            stats: EngineStats::default(),
        }
    }

    fn tracking(&self) -> bool {
        self.source.is_some()
    }

    fn use_chain_criterion(&self) -> bool {
        self.engine.options.chain_criterion && !self.tracking()
    }

    fn inspect(&mut self, f: &Element<F::Elem>, s: Option<&Element<F::Elem>>) {
        if !self.engine.options.check_homogeneity {
            return;
        }
        if let Some(target) = self.engine.target {
            self.stats.homogeneity_checks += 1;
            if !target.is_homogeneous(f) {
                self.stats.homogeneity_violations += 1;
            }
        }
        if let (Some(source), Some(s)) = (self.source, s) {
            self.stats.homogeneity_checks += 1;
            if !source.is_homogeneous(s) {
                self.stats.homogeneity_violations += 1;
            }
        }
    }

    fn seed(&mut self, generators: &[Element<F::Elem>]) {
        let ring = self.engine.ring;
        for (i, f) in generators.iter().enumerate() {
            let s = self.tracking().then(|| ring.basis_vector(i));
            self.inspect(f, s.as_ref());
            if f.is_zero() {
                if let Some(s) = s {
                    self.syzygies.push(s);
                }
                continue;
            }
            self.insert(f.clone(), s.unwrap_or_else(Element::zero));
        }
    }

    fn insert(&mut self, f: Element<F::Elem>, s: Element<F::Elem>) {
        let ring = self.engine.ring;
        let order = ring.order();
        let new = self.basis.len();
        let lt = f.leading().expect("only nonzero elements enter the basis");
        for &k in self.divisors.same_position(lt.basis) {
            let lcm = self.divisors.lead(k).unwrap().join(&lt.mono);
            let key = order.key(&lcm, lt.basis);
            self.queue.push(Reverse(Pair { key, i: k, j: new, lcm }));
            if self.use_chain_criterion() {
                self.pending.insert((k, new));
            }
            self.stats.pairs_enqueued += 1;
        }
        self.divisors.push(&f);
        self.basis.push(f);
        if self.tracking() {
            self.cofactors.push(s);
        }
    }

    fn pair_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Some third element's leading monomial divides the pair's lcm and
    /// both of its pairs with `i` and `j` are already gone.
    fn chain_covers(&self, pair: &Pair) -> bool {
        let basis = self.basis[pair.i].leading().unwrap().basis;
        self.divisors.same_position(basis).iter().any(|&k| {
            k != pair.i
                && k != pair.j
                && self.divisors.lead(k).is_some_and(|lm| lm.le(&pair.lcm))
                && !self.pair_pending(pair.i, k)
                && !self.pair_pending(pair.j, k)
        })
    }

    fn drain(&mut self) {
        let ring = self.engine.ring;
        let field = ring.field();
        while let Some(Reverse(pair)) = self.queue.pop() {
            if self.use_chain_criterion() {
                self.pending.remove(&(pair.i, pair.j));
                if self.chain_covers(&pair) {
                    self.stats.pairs_skipped += 1;
                    continue;
                }
            }
            self.stats.pairs_processed += 1;
            let (fi, fj) = (&self.basis[pair.i], &self.basis[pair.j]);
            let (lti, ltj) = (fi.leading().unwrap(), fj.leading().unwrap());
            let c = field.div(&lti.coeff, &ltj.coeff).expect("nonzero");
            let minus_c = field.neg(&c);
            let wi = pair.lcm.checked_sub(&lti.mono).unwrap();
            let wj = pair.lcm.checked_sub(&ltj.mono).unwrap();
            let one = field.one();
            let s_vec = ring.add_scaled(&ring.scale_unchecked(fi, &one, &wi), &minus_c, &wj, fj);
            let cofactor = self.tracking().then(|| {
                let (si, sj) = (&self.cofactors[pair.i], &self.cofactors[pair.j]);
                ring.add_scaled(&ring.scale_unchecked(si, &one, &wi), &minus_c, &wj, sj)
            });
            self.inspect(&s_vec, cofactor.as_ref());

            let mut seen: Vec<Tracked<F::Elem>> = Vec::new();
            let check = self.engine.options.check_homogeneity;
            let division = Division {
                ring,
                divisors: &self.divisors,
                elements: &self.basis,
                cofactors: self.tracking().then_some(self.cofactors.as_slice()),
                tail: self.engine.options.tail_reduce,
                skip: None,
            };
            let (h, s, steps) = division.run(s_vec, cofactor, |f, s| {
                if check {
                    seen.push((f.clone(), s.cloned()));
                }
            });
            for (f, s) in &seen {
                self.inspect(f, s.as_ref());
            }
            self.stats.reduction_steps += steps;
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                if let Some(s) = s {
                    if !s.is_zero() {
                        self.syzygies.push(s);
                    }
                }
            } else {
                self.insert(h, s.unwrap_or_else(Element::zero));
            }
        }
    }

    fn finish_stats(&mut self) -> EngineStats {
        self.stats.basis_size = self.basis.len();
        self.stats.clone()
    }
}
