//! Runs the randomized property suites with a fixed seed.

use persistent_ideals::verify::{run_verify, VerifyConfig};

fn main() {
    let report = run_verify(&VerifyConfig { trials: 20, ..VerifyConfig::default() });
    for s in &report.suites {
        println!("{} {:<28} {:>5} cases  {}", if s.passed() { "PASS" } else { "FAIL" }, s.name, s.cases, s.statement);
    }
    std::process::exit(if report.passed { 0 } else { 1 });
}
