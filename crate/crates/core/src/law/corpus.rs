//! A deterministic family of smooth maps standing in for "all maps" in the
//! differential axioms.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{CheckConfig, Sampler};
use crate::smooth::{Point, Primitive, SmoothMap};

/// Number of maps in the corpus.
pub const CORPUS_SIZE: usize = 56;

/// Largest magnitude of `f`, `D[f]`, `D²[f]` or `D³[f]` tolerated at the
/// probe points. Random composites of `exp` and `cosh` can reach `10⁶` on
/// the default box, where cancellation swamps any meaningful residual.
pub const GROWTH_LIMIT: f64 = 100.0;

const MAX_DEPTH: u32 = 4;
const MAX_DIM: usize = 3;
const PROBES: usize = 96;

fn coord(n: usize, i: usize) -> SmoothMap {
    SmoothMap::slice(n, i, 1).unwrap()
}

fn unary(p: Primitive, f: &SmoothMap) -> SmoothMap {
    f.then(&SmoothMap::primitive(p)).unwrap()
}

fn times(f: &SmoothMap, g: &SmoothMap) -> SmoothMap {
    SmoothMap::pair(f, g).unwrap().then(&SmoothMap::mul()).unwrap()
}

/// Round to two decimals so printed terms stay readable.
fn coefficient(rng: &mut ChaCha8Rng) -> f64 {
    (rng.gen_range(-2.0f64..=2.0) * 100.0).round() / 100.0
}

fn scalar_term(rng: &mut ChaCha8Rng, n: usize, depth: u32) -> SmoothMap {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.8) {
            coord(n, rng.gen_range(0..n))
        } else {
            SmoothMap::constant(n, Point::new(vec![coefficient(rng)]).unwrap())
        };
    }
    let sub = |rng: &mut ChaCha8Rng| scalar_term(rng, n, depth - 1);
    match rng.gen_range(0..9) {
        0 => SmoothMap::add(&sub(rng), &sub(rng)).unwrap(),
        1 => unary(Primitive::Scale(-1.0), &sub(rng)),
        2 => times(&sub(rng), &sub(rng)),
        3 => unary(Primitive::Exp, &sub(rng)),
        4 => unary(Primitive::Sin, &sub(rng)),
        5 => unary(Primitive::Cos, &sub(rng)),
        6 => unary(Primitive::Sinh, &sub(rng)),
        7 => unary(Primitive::Cosh, &sub(rng)),
        _ => {
            let degree = rng.gen_range(1..=3);
            let coeffs = (0..=degree).map(|_| coefficient(rng)).collect();
            unary(Primitive::Polynomial(coeffs), &sub(rng))
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng) -> SmoothMap {
    let n = rng.gen_range(1..=MAX_DIM);
    let m = rng.gen_range(1..=MAX_DIM);
    let comps: Vec<SmoothMap> = (0..m).map(|_| scalar_term(rng, n, MAX_DEPTH)).collect();
    comps[1..].iter().fold(comps[0].clone(), |acc, c| SmoothMap::pair(&acc, c).unwrap())
}

/// Whether `f` and its first three differentials stay below
/// [`GROWTH_LIMIT`] at the corners of the sample box and at [`PROBES`]
/// points drawn from it.
pub fn tame(f: &SmoothMap, sampler: &Sampler) -> bool {
    let (lo, hi) = sampler.sample_box();
    let mut g = f.clone();
    for order in 0..=3 {
        let n = g.dom();
        let corners = (0..1usize << n.min(6))
            .map(|mask| Point::new((0..n).map(|k| if mask >> (k % 6) & 1 == 1 { hi } else { lo }).collect()).unwrap());
        let drawn = (0..PROBES).map(|i| sampler.point(i, n));
        for x in corners.chain(drawn) {
            match g.eval(&x) {
                Ok(p) if p.coords().iter().all(|c| c.abs() <= GROWTH_LIMIT) => {}
                _ => return false,
            }
        }
        if order < 3 {
            g = g.differential();
        }
    }
    true
}

/// The maps every corpus starts with, in a fixed order.
pub fn fixed_maps() -> Vec<SmoothMap> {
    let x = coord(2, 0);
    let y = coord(2, 1);
    let ex = unary(Primitive::Exp, &x);
    let twisted =
        |c: Primitive, s: Primitive| SmoothMap::pair(&times(&ex, &unary(c, &y)), &times(&ex, &unary(s, &y))).unwrap();
    let (a, b, c) = (coord(3, 0), coord(3, 1), coord(3, 2));
    let mixed = SmoothMap::pair(
        &SmoothMap::add(&times(&unary(Primitive::Sin, &a), &b), &unary(Primitive::Polynomial(vec![0.0, 0.0, 1.0]), &c))
            .unwrap(),
        &unary(Primitive::Cosh, &b),
    )
    .unwrap();
    vec![
        SmoothMap::exp().named("exp"),
        twisted(Primitive::Cos, Primitive::Sin).named("exp_C"),
        twisted(Primitive::Cosh, Primitive::Sinh).named("exp_split"),
        SmoothMap::exp().tangent().named("exp_dual"),
        SmoothMap::primitive(Primitive::Polynomial(vec![0.0, 0.0, 1.0])).named("square"),
        SmoothMap::primitive(Primitive::Sin).named("sin"),
        SmoothMap::primitive(Primitive::Cosh).named("cosh"),
        SmoothMap::mul().named("mul"),
        mixed.named("mixed"),
    ]
}

type CacheKey = (u64, u64, u64);
type PairCache = Mutex<HashMap<CacheKey, Vec<(SmoothMap, SmoothMap)>>>;

fn cache_key(cfg: &CheckConfig) -> CacheKey {
    (cfg.seed, cfg.sample_box.0.to_bits(), cfg.sample_box.1.to_bits())
}

/// Memoize `build` per configuration. Laws run in parallel and most of them
/// need the same corpus, so it is built once per seed and box.
fn cached<T: Clone>(cache: &Mutex<HashMap<CacheKey, T>>, cfg: &CheckConfig, build: impl FnOnce() -> T) -> T {
    let key = cache_key(cfg);
    if let Some(v) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return v.clone();
    }
    let v = build();
    cache.lock().unwrap_or_else(|e| e.into_inner()).entry(key).or_insert(v).clone()
}

/// [`CORPUS_SIZE`] maps: the fixed head followed by random terms over the
/// scalar alphabet with depth at most 4 and dimensions at most 3, each
/// filtered by [`tame`]. Determined by `cfg.seed` and `cfg.sample_box`.
pub fn corpus(cfg: &CheckConfig) -> Vec<SmoothMap> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Vec<SmoothMap>>>> = OnceLock::new();
    cached(CACHE.get_or_init(Default::default), cfg, || build_corpus(cfg))
}

/// Uncached [`corpus`].
pub fn build_corpus(cfg: &CheckConfig) -> Vec<SmoothMap> {
    let probes = Sampler::new(cfg.seed, "corpus/probes", cfg.sample_box);
    let terms = Sampler::new(cfg.seed, "corpus/terms", cfg.sample_box);
    let mut out = fixed_maps();
    let mut attempt = 0;
    while out.len() < CORPUS_SIZE {
        let f = random_map(&mut terms.rng(attempt));
        attempt += 1;
        if tame(&f, &probes) {
            out.push(f.named(format!("f{:02}", out.len())));
        }
    }
    out
}

/// For each map, the next map (cyclically) satisfying `fits`.
fn partners(maps: &[SmoothMap], fits: impl Fn(&SmoothMap, &SmoothMap) -> bool) -> Vec<(SmoothMap, SmoothMap)> {
    let n = maps.len();
    (0..n)
        .filter_map(|i| {
            (1..=n).map(|k| &maps[(i + k) % n]).find(|g| fits(&maps[i], g)).map(|g| (maps[i].clone(), g.clone()))
        })
        .collect()
}

/// Pairs of maps with equal domain and codomain.
pub fn parallel_pairs(maps: &[SmoothMap]) -> Vec<(SmoothMap, SmoothMap)> {
    partners(maps, |f, g| f.dom() == g.dom() && f.cod() == g.cod())
}

/// Pairs of maps with equal domain.
pub fn same_domain_pairs(maps: &[SmoothMap]) -> Vec<(SmoothMap, SmoothMap)> {
    partners(maps, |f, g| f.dom() == g.dom())
}

/// Pairs `(f, g)` of [`corpus`] maps with `cod f = dom g` whose composite
/// is again [`tame`]. Both factors being tame is not enough: `f` can push
/// `g` far outside the sample box, where a nested `sinh` overflows.
pub fn composable_pairs(cfg: &CheckConfig) -> Vec<(SmoothMap, SmoothMap)> {
    static CACHE: OnceLock<PairCache> = OnceLock::new();
    cached(CACHE.get_or_init(Default::default), cfg, || {
        let probes = Sampler::new(cfg.seed, "corpus/probes", cfg.sample_box);
        partners(&corpus(cfg), |f, g| f.cod() == g.dom() && f.then(g).is_ok_and(|fg| tame(&fg, &probes)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sized() {
        let cfg = CheckConfig::default().with_seed(1);
        let a = corpus(&cfg);
        let b = build_corpus(&cfg);
        assert_eq!(a.len(), CORPUS_SIZE);
        let show = |v: &[SmoothMap]| v.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>();
        assert_eq!(show(&a), show(&b));
        let other = corpus(&CheckConfig::default().with_seed(2));
        assert_ne!(show(&a[9..]), show(&other[9..]));
    }

    #[test]
    fn contains_exp_and_complex_exp() {
        let c = corpus(&CheckConfig::default());
        let e = c.iter().find(|f| f.to_string() == "exp").unwrap();
        assert!((e.eval_at(&[1.0]).unwrap()[0] - 1f64.exp()).abs() < 1e-15);
        let ec = c.iter().find(|f| f.to_string() == "exp_C").unwrap();
        let v = ec.eval_at(&[0.5, 1.0]).unwrap();
        assert!((v[0] - 0.5f64.exp() * 1f64.cos()).abs() < 1e-15);
        assert!((v[1] - 0.5f64.exp() * 1f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn dimensions_within_bounds() {
        for f in corpus(&CheckConfig::default()) {
            assert!((1..=MAX_DIM).contains(&f.dom()) && (1..=MAX_DIM).contains(&f.cod()), "{f}");
        }
    }

    #[test]
    fn every_map_has_partners() {
        let cfg = CheckConfig::default();
        let c = corpus(&cfg);
        assert_eq!(parallel_pairs(&c).len(), c.len());
        assert!(composable_pairs(&cfg).len() * 10 >= c.len() * 9);
    }
}
