//! Rationality certificates: runs the descent on a mu-dropping deformation
//! of No.12, prints the coordinate changes and the final weight, then checks
//! the certificate by replay.
//!
//!     cargo run --release --example certify_deformation [FILE]

use std::path::PathBuf;

use k3cert::certifier::{canonical_json, descent, verify_text, DEFAULT_CAP};
use k3cert::io::load_polynomial;

fn main() -> k3cert::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/example_deformation.json")
        });
    let f = load_polynomial(&path)?;
    let c = descent(&f, DEFAULT_CAP)?;

    println!("outcome {:?}", c.outcome);
    if let Some(m) = &c.milnor {
        println!("mu {} < {} ({})", m.value, m.reference, m.reference_source);
    }
    for s in &c.states {
        println!(
            "state {}: weight ({}), sum {}",
            s.step,
            s.weight.join(", "),
            s.weight_sum
        );
        for sub in &c.chain[..s.chain_len] {
            println!("    after {} := {}", sub.var, sub.replacement);
        }
    }
    if let Some(f0) = &c.final_initial_part {
        println!("initial part {f0}");
    }

    let text = canonical_json(&c);
    let report = verify_text(&text)?;
    println!("replayed: ok = {}, {} bytes", report.ok, text.len());
    Ok(())
}
