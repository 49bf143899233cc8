//! Exact derivatives of smooth maps and the seven differential axioms.
//!
//! Run with `cargo run --example smooth_axioms`.

use diffexp::law::corpus::corpus;
use diffexp::law::{find_law, CheckConfig};
use diffexp::smooth::{finite_difference_oracle, Point, Primitive, SmoothMap};

fn main() {
    // f(x, y) = sin(x)·y, built from the map algebra.
    let x = SmoothMap::proj0(1, 1);
    let y = SmoothMap::proj1(1, 1);
    let f = SmoothMap::pair(&x.then(&SmoothMap::primitive(Primitive::Sin)).unwrap(), &y)
        .unwrap()
        .then(&SmoothMap::mul())
        .unwrap();

    // D[f] takes a point and a direction and is linear in the direction.
    let df = f.differential();
    let at = [0.5, 2.0, 1.0, 0.0];
    println!("D[f]((0.5, 2), (1, 0)) = {:.12}", df.eval_at(&at).unwrap()[0]);
    println!("2·cos(0.5)           = {:.12}", 2.0 * 0.5f64.cos());

    // Higher differentials are exact too: D³[exp] at the origin is e⁰ = 1 in every slot.
    let d3 = SmoothMap::exp().differential_n(3);
    println!("D³[exp](0, 1, 1, 0, 1, 0, 0, 0) = {}", d3.eval_at(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap()[0]);

    // The tangent functor pairs a value with its derivative.
    println!("T(f)(0.5, 2, 1, 0) = {:?}", f.tangent().eval_at(&at).unwrap());

    let (p, v) = (Point::new(vec![0.5, 2.0]).unwrap(), Point::new(vec![1.0, 0.0]).unwrap());
    let fd = finite_difference_oracle(&f, &p, &v, 1e-5).unwrap();
    println!("central difference with h = 1e-5: {fd}");

    let cfg = CheckConfig::default();

    println!(
        "\ncorpus of {} maps, first few: {}",
        corpus(&cfg).len(),
        corpus(&cfg)[..5].iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
    );
    for id in ["smooth.cd1", "smooth.cd2", "smooth.cd3", "smooth.cd4", "smooth.cd5", "smooth.cd6", "smooth.cd7"] {
        let r = find_law(id).unwrap().execute(&cfg);
        println!("{id:<12} pass={} checked={:>6} max residual {:.2e}", r.pass, r.checked, r.max_residual);
    }
}
