//! Run every suite twice with the same seed and confirm the JSON reports are
//! byte-identical, then print the markdown summary.
//!
//! Run with `cargo run --release --example reproducible_report`.

use diffexp::law::{run_registry, CheckConfig, RunReport, Suite};

fn main() {
    let cfg = CheckConfig::default().with_seed(7);
    let names = || Suite::ALL.iter().map(|s| s.name().to_string()).collect::<Vec<_>>();
    let first = RunReport::new(&cfg, names(), run_registry(&Suite::ALL, &cfg).unwrap());
    let second = RunReport::new(&cfg, names(), run_registry(&Suite::ALL, &cfg).unwrap());
    let identical = first.to_json() == second.to_json();
    print!("{}", first.to_markdown());
    println!("\nJSON identical across runs: {identical} ({} bytes)", first.to_json().len());
    let negatives: Vec<_> =
        first.laws.iter().filter(|l| !l.expect_pass).map(|l| format!("{} failed={}", l.id, !l.pass)).collect();
    println!("negative controls: {}", negatives.join(", "));
    std::process::exit(if identical && first.ok() { 0 } else { 1 });
}
