//! The rig an exponential induces, compared with the familiar multiplications,
//! and the round trip from a rig to its exponential and back.
//!
//! Run with `cargo run --example rigs`.

use diffexp::exponential::{complex_exp, split_complex_exp};
use diffexp::law::CheckConfig;
use diffexp::rig::{check_rig_laws, check_roundtrip, closed_forms, explicit, induced_mult, induced_unit, DiffExpRig};

fn main() {
    let z = [1.0, 2.0, 3.0, -1.0]; // (1 + 2i) and (3 − i)
    for (e, closed, name) in [
        (complex_exp(), closed_forms::complex as fn(&[f64]) -> Vec<f64>, "complex"),
        (split_complex_exp(), closed_forms::split, "split complex"),
    ] {
        let m = induced_mult(&e);
        println!(
            "{name}: induced ⊙ gives {:?}, by hand {:?}, unit {}",
            m.eval_at(&z).unwrap(),
            closed(&z),
            induced_unit(&e)
        );
    }

    let cfg = CheckConfig::default();
    for x in
        [DiffExpRig::new(explicit::complex(), complex_exp()), DiffExpRig::new(explicit::split(), split_complex_exp())]
    {
        let laws = check_rig_laws(&x.rig, &cfg);
        let back = check_roundtrip(&x, &cfg.clone().with_tol(1e-8));
        println!("{:<14} rig laws {}  round trip {} ({} parts)", x.rig.label, laws.pass, back.pass, back.parts.len());
    }
    let bad = check_rig_laws(&explicit::additive(), &cfg);
    println!(
        "(ℝ, +, 0) as a differential rig: {}, because {}",
        bad.pass,
        bad.witnesses.first().map(String::as_str).unwrap_or("")
    );
}
