//! The relational model: multisets, the exponential `!X`, exact checks of
//! the codereliction rules, and which algebras are differential exponential
//! algebras.
//!
//! Run with `cargo run --example rel_model`.

use diffexp::law::CheckConfig;
use diffexp::rel::{assert_rel_equal, check_bang_dea, universe, Elem, MSet, RelMonoid, RelMor, RelObj};

fn main() {
    let x = RelObj::base(2);
    let bx = RelObj::bang(&x);
    let window = universe(&bx, 2).unwrap();
    println!("elements of !{{x, y}} of rank ≤ 2: {}", window.len());
    println!("  {}", window.iter().take(8).map(|e| e.to_string()).collect::<Vec<_>>().join("  "));

    let xy = Elem::bag(MSet::from_elems([Elem::Atom(0), Elem::Atom(1)]));
    let img = RelMor::deriv(&x).image(&Elem::pair(xy.clone(), Elem::Atom(0)), 3).unwrap();
    println!("d relates ([x, y], x) to {}", img.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "));

    let linear_rule =
        assert_rel_equal("ηε = 1", &RelMor::eta(&x).then(&RelMor::epsilon(&x)).unwrap(), &RelMor::identity(&x), 3)
            .unwrap();
    println!("ηε = 1 exactly: {} ({} pairs checked)", linear_rule.pass, linear_rule.checked);

    let cfg = CheckConfig::default();
    let copy = RelMonoid::copy_dual(&x);
    for (name, m, e) in [
        ("copy-dual e", copy.clone(), RelMor::copy_dual_e(&x)),
        ("μ on !X", RelMonoid::bang(&x), RelMor::mu(&x)),
        ("ε", copy, RelMor::epsilon(&x)),
    ] {
        let r = check_bang_dea(name, &m, &e, &cfg).unwrap();
        println!(
            "{name:<12} differential exponential algebra: {:<5} {}",
            r.pass,
            r.witnesses.first().map(String::as_str).unwrap_or("")
        );
    }
}
