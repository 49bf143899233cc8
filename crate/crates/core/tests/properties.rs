//! Randomized properties of the building blocks, generated by proptest.

use diffexp::dynamics::canonical_solution;
use diffexp::exponential::complex_exp;
use diffexp::exponential::real_exp;
use diffexp::law::corpus::corpus;
use diffexp::law::{scaled_residual, CheckConfig, Sampler};
use diffexp::rel::{multichoose, universe, Elem, RelMor, RelObj};
use diffexp::rig::{closed_forms, explicit, induced_mult, DiffExpRig};
use diffexp::smooth::{Point, Primitive, SmoothMap};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -2.0f64..2.0
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomial_derivative_matches_power_rule(coeffs in prop::collection::vec(-3.0f64..3.0, 1..6), x in coord(), v in coord()) {
        let p = SmoothMap::primitive(Primitive::Polynomial(coeffs.clone()));
        let got = p.differential().eval_at(&[x, v]).unwrap()[0];
        let want: f64 = coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c * x.powi(k as i32 - 1)).sum::<f64>() * v;
        prop_assert!(close(got, want, 1e-12), "{got} vs {want}");
    }

    #[test]
    fn second_derivative_of_sin_is_minus_sin(x in coord(), v in coord(), w in coord()) {
        // D²[sin] at ((x, v), (w, 0)) is −sin(x)·v·w.
        let d2 = SmoothMap::primitive(Primitive::Sin).differential_n(2);
        let got = d2.eval_at(&[x, v, w, 0.0]).unwrap()[0];
        prop_assert!(close(got, -x.sin() * v * w, 1e-12));
    }

    #[test]
    fn differential_is_linear_in_the_direction(idx in 0usize..56, a in coord(), b in coord(), seed in 0u64..4) {
        let maps = corpus(&CheckConfig::default().with_seed(seed));
        let f = &maps[idx % maps.len()];
        let n = f.dom();
        let s = Sampler::new(seed, "prop/linear", (-2.0, 2.0));
        let (x, v, w) = (s.point(0, n), s.point(1, n), s.point(2, n));
        let comb: Vec<f64> = v.coords().iter().zip(w.coords()).map(|(p, q)| a * p + b * q).collect();
        let df = f.differential();
        let at = |dir: &[f64]| df.eval(&x.concat(&Point::new(dir.to_vec()).unwrap())).unwrap().into_coords();
        let lhs = at(&comb);
        let (dv, dw) = (at(v.coords()), at(w.coords()));
        let rhs: Vec<f64> = dv.iter().zip(&dw).map(|(p, q)| a * p + b * q).collect();
        prop_assert!(scaled_residual(&lhs, &rhs) < 1e-10, "{f}: {lhs:?} vs {rhs:?}");
    }

    #[test]
    fn residual_is_symmetric_and_bounded(a in prop::collection::vec(-1e6f64..1e6, 1..4), shift in -1e3f64..1e3) {
        let b: Vec<f64> = a.iter().map(|x| x + shift).collect();
        let r = scaled_residual(&a, &b);
        prop_assert_eq!(r, scaled_residual(&b, &a));
        prop_assert!((0.0..1.0).contains(&r) || r == 0.0);
        prop_assert_eq!(scaled_residual(&a, &a), 0.0);
    }

    #[test]
    fn sampler_is_deterministic_and_inside_the_box(seed: u64, index in 0usize..1000, dim in 0usize..6) {
        let s = Sampler::new(seed, "prop/box", (-3.0, 3.0));
        let p = s.point(index, dim);
        prop_assert_eq!(&p, &s.point(index, dim));
        prop_assert!(p.coords().iter().all(|c| (-3.0..=3.0).contains(c)));
    }

    #[test]
    fn complex_exponential_multiplies_like_complex_numbers(z in prop::collection::vec(coord(), 4)) {
        let got = induced_mult(&complex_exp()).eval_at(&z).unwrap();
        let want = closed_forms::complex(&z);
        prop_assert!(scaled_residual(&got, &want) < 1e-12);
    }

    #[test]
    fn canonical_real_solution_is_scaled_exponential(a in -2.0f64..2.0, x in coord(), y in coord()) {
        let real = DiffExpRig::new(explicit::real(), real_exp());
        let f = canonical_solution(&real, &Point::new(vec![a]).unwrap(), &SmoothMap::identity(1)).unwrap();
        prop_assert!(close(f.eval_at(&[x, y]).unwrap()[0], (a * x).exp() * y, 1e-12));
    }

    #[test]
    fn multichoose_counts_multisets(n in 1usize..5, k in 0usize..5) {
        let items: Vec<Elem> = (0..n as u32).map(Elem::Atom).collect();
        let all = multichoose(&items, k);
        prop_assert_eq!(all.len(), binomial(n + k - 1, k));
        prop_assert!(all.iter().all(|m| m.len() == k && m.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn relational_composition_is_associative(mask_r in 0u32..16, mask_s in 0u32..16, mask_t in 0u32..16) {
        let x = RelObj::base(2);
        let elems = [Elem::Atom(0), Elem::Atom(1)];
        let rel = |mask: u32| {
            let pairs = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| (elems[i / 2].clone(), elems[i % 2].clone()));
            RelMor::graph(&x, &x, pairs).unwrap()
        };
        let (r, s, t) = (rel(mask_r), rel(mask_s), rel(mask_t));
        let left = r.then(&s).unwrap().then(&t).unwrap();
        let right = r.then(&s.then(&t).unwrap()).unwrap();
        for a in &elems {
            for b in &elems {
                prop_assert_eq!(left.contains(a, b).unwrap(), right.contains(a, b).unwrap());
            }
        }
    }

    #[test]
    fn bang_of_union_contains_each_bang(mask_r in 0u32..16, mask_s in 0u32..16) {
        let x = RelObj::base(2);
        let elems = [Elem::Atom(0), Elem::Atom(1)];
        let rel = |mask: u32| {
            let pairs = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| (elems[i / 2].clone(), elems[i % 2].clone()));
            RelMor::graph(&x, &x, pairs).unwrap()
        };
        let (r, s) = (rel(mask_r), rel(mask_s));
        let union = r.union(&s).unwrap().bang();
        let bang_x = universe(&RelObj::bang(&x), 2).unwrap();
        for a in bang_x.iter() {
            for b in bang_x.iter() {
                if r.bang().contains(a, b).unwrap() || s.bang().contains(a, b).unwrap() {
                    prop_assert!(union.contains(a, b).unwrap(), "({a}, {b})");
                }
            }
        }
    }
}
