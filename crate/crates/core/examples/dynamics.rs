//! Exponentials as solutions of dynamical systems: the decay equation, the
//! canonical solution e^{ax}·y, and uniqueness of solutions.
//!
//! Run with `cargo run --example dynamics`.

use diffexp::dynamics::{
    canonical_solution, check_param_solution, check_unique_construction_property, scalar_mult_map, ParamDynSystem,
};
use diffexp::exponential::{complex_exp, real_exp};
use diffexp::law::CheckConfig;
use diffexp::rig::{explicit, DiffExpRig};
use diffexp::smooth::{Point, SmoothMap};

fn main() {
    let cfg = CheckConfig::default();
    let real = DiffExpRig::new(explicit::real(), real_exp());
    for a in [-1.0, 0.5, 2.0] {
        let a_pt = Point::new(vec![a]).unwrap();
        let f = canonical_solution(&real, &a_pt, &SmoothMap::identity(1)).unwrap();
        let sys = ParamDynSystem::new(SmoothMap::identity(1), scalar_mult_map(&real.rig, &a_pt).unwrap()).unwrap();
        let r = check_param_solution(&f, &real.rig, &sys, &cfg).unwrap();
        let (x, y) = (0.7, -1.3);
        println!(
            "a = {a:>4}: f(0.7, −1.3) = {:+.12}, e^(ax)·y = {:+.12}, solves the system: {}",
            f.eval_at(&[x, y]).unwrap()[0],
            (a * x).exp() * y,
            r.pass
        );
    }
    for x in [real, DiffExpRig::new(explicit::complex(), complex_exp())] {
        let r = check_unique_construction_property(&x, &cfg);
        println!("{}: ⊕e and (e×e)⊙ solve the same system and agree: {}", x.rig.label, r.pass);
    }
}
