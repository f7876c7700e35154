//! Seeded generators of valid multifiltrations for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{minimal_antichain, Grade};
use crate::filtration::{Multifiltration, Simplex};

/// Shape of a random multifiltration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub max_vertices: usize,
    pub nvars: usize,
    pub max_grades: usize,
    pub max_dim: usize,
    /// Upper bound of every vertex grade coordinate.
    pub max_coordinate: u32,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            max_vertices: 8,
            nvars: 2,
            max_grades: 3,
            max_dim: 3,
            max_coordinate: 3,
        }
    }
}

fn random_grade(rng: &mut impl Rng, nvars: usize, max: u32) -> Grade {
    Grade::new((0..nvars).map(|_| rng.gen_range(0..=max)))
}

/// Entry grades for `simplex` that dominate some entry grade of every
/// facet, so the result stays a multifiltration.
fn grades_above(rng: &mut impl Rng, facets: &[&[Grade]], nvars: usize, count: usize) -> Vec<Grade> {
    let picks = (0..count).map(|_| {
        let base = facets
            .iter()
            .map(|gs| gs.choose(rng).unwrap().clone())
            .fold(Grade::zero(nvars), |acc, g| acc.join(&g));
        base.add(&random_grade(rng, nvars, 1))
    });
    minimal_antichain(picks.collect())
}

/// A random valid multifiltration: a random complex on at most
/// `spec.max_vertices` vertices, each simplex with up to `spec.max_grades`
/// entry grades.
pub fn random_multifiltration(seed: u64, spec: &RandomSpec) -> Multifiltration {
    generate(seed, spec, false)
}

/// Like [`random_multifiltration`] with a single grade per simplex.
pub fn random_one_critical(seed: u64, spec: &RandomSpec) -> Multifiltration {
    generate(seed, spec, true)
}

fn generate(seed: u64, spec: &RandomSpec, one_critical: bool) -> Multifiltration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = spec.nvars;
    let nv = rng.gen_range(1..=spec.max_vertices.max(1));
    let density: f64 = rng.gen_range(0.3..0.9);
    let count = |rng: &mut ChaCha8Rng| if one_critical { 1 } else { rng.gen_range(1..=spec.max_grades.max(1)) };

    let mut levels: Vec<Vec<(Simplex, Vec<Grade>)>> = vec![(0..nv as u32)
        .map(|v| {
            let k = count(&mut rng);
            let gs = minimal_antichain((0..k).map(|_| random_grade(&mut rng, r, spec.max_coordinate)).collect());
            (Simplex::new(vec![v]).unwrap(), gs)
        })
        .collect()];
    for _ in 1..=spec.max_dim {
        let prev = levels.last().unwrap();
        let index: std::collections::HashMap<&Simplex, &[Grade]> = prev.iter().map(|(s, g)| (s, g.as_slice())).collect();
        let mut next = Vec::new();
        for (s, _) in prev {
            let last = *s.vertices().last().unwrap();
            for w in last + 1..nv as u32 {
                let mut verts = s.vertices().to_vec();
                verts.push(w);
                let cand = Simplex::new(verts).unwrap();
                let facets: Option<Vec<&[Grade]>> = cand.facets().map(|(_, f)| index.get(&f).copied()).collect();
                let Some(facets) = facets else { continue };
                if !rng.gen_bool(density) {
                    continue;
                }
                let k = count(&mut rng);
                next.push((cand, grades_above(&mut rng, &facets, r, k)));
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let mf = Multifiltration::new(r, levels.into_iter().flatten()).expect("grades have the right length");
    debug_assert!(mf.validate().ok());
    mf
}

/// Complex used by the benchmark: the first `size` simplices, in canonical
/// order, of the strip on vertices `0..m` with edges `{i,i+1}`, `{i,i+2}` and
/// triangles `{i,i+1,i+2}`. Every simplex gets the two incomparable grades
/// `(a, b+K)` and `(a+K, b)` above a random monotone base grade.
pub fn bench_bifiltration(size: usize, seed: u64) -> Multifiltration {
    const K: u32 = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (size as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let total = |m: usize| m + (2 * m).saturating_sub(3) + m.saturating_sub(2);
    let mut m = 1;
    while total(m) < size {
        m += 1;
    }
    let mut simplices: Vec<Simplex> = (0..m as u32).map(|v| Simplex::new(vec![v]).unwrap()).collect();
    for i in 0..m as u32 {
        for d in 1..=2 {
            if i + d < m as u32 {
                simplices.push(Simplex::new(vec![i, i + d]).unwrap());
            }
        }
    }
    for i in 0..(m as u32).saturating_sub(2) {
        simplices.push(Simplex::new(vec![i, i + 1, i + 2]).unwrap());
    }
    simplices.sort();
    simplices.truncate(size);

    let mut base: std::collections::HashMap<Simplex, Grade> = std::collections::HashMap::new();
    let mut entries = Vec::with_capacity(simplices.len());
    for s in simplices {
        let b = s
            .facets()
            .map(|(_, f)| base[&f].clone())
            .fold(Grade::zero(2), |acc, g| acc.join(&g))
            .add(&random_grade(&mut rng, 2, 2));
        let [a, c] = [b.as_slice()[0], b.as_slice()[1]];
        entries.push((s.clone(), vec![Grade::from([a, c + K]), Grade::from([a + K, c])]));
        base.insert(s, b);
    }
    Multifiltration::new(2, entries).expect("two parameters")
}
