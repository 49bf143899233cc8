//! Differential exponential maps: the two defining diagrams, the builtin
//! examples, their products and tangents, and two maps that are not
//! exponentials.
//!
//! Run with `cargo run --example exponentials`.

use diffexp::exponential::{builtin_exponentials, check_dem, dual_exp, product_exp, real_exp, tangent_exp, DiffExpMap};
use diffexp::law::CheckConfig;
use diffexp::smooth::SmoothMap;

fn main() {
    let cfg = CheckConfig::default().with_box(-3.0, 3.0);
    let mut all = builtin_exponentials();
    all.push(product_exp(&real_exp(), &dual_exp()));
    all.push(tangent_exp(&tangent_exp(&real_exp())));
    for e in &all {
        let r = check_dem(e, &cfg);
        println!("{:<28} dim {}  pass={}  max residual {:.2e}", e.label, e.dim, r.pass, r.max_residual);
    }

    println!("\nmaps that are not exponentials:");
    for (name, map) in [("identity", SmoothMap::identity(1)), ("zero", SmoothMap::zero(1, 1))] {
        let r = check_dem(&DiffExpMap::new(name, map).unwrap(), &cfg);
        println!(
            "{name:<9} pass={}  first witness: {}",
            r.pass,
            r.witnesses.first().map(String::as_str).unwrap_or("-")
        );
    }
}
