//! Necessary conditions on every coordinate subspace, plus a custom span.
//!
//!     cargo run --example subspaces

use formcert::certify::{certify, necessary_report, CertifyOptions};
use formcert::{HomogPoly, Rational};

fn main() -> formcert::Result<()> {
    // -(x1^2 + x2^2) passes on the full space: χ = (t - 1)^2
    let f = HomogPoly::parse("-x1^2 - x2^2", 2)?;
    for c in &necessary_report(&f)?.checks {
        let chi = c.chi.as_ref().map_or("-".into(), |p| p.to_string());
        println!("{:<10} χ = {chi:<16} violated: {}", c.subspace.to_string(), c.violated());
    }

    // a form whose restriction to x1 = x2 is negative
    let g = HomogPoly::parse("x1^2 - 4 x1 x2 + x2^2 + x3^2", 3)?;
    let r = |k: i64| Rational::from_integer(k.into());
    let opts = CertifyOptions {
        subspaces: vec![vec![vec![r(1), r(1), r(0)]]],
        ..CertifyOptions::default()
    };
    let v = certify(&g, &opts)?;
    println!("{g}: {}", v.kind);
    for c in v.report.necessary.checks.iter().filter(|c| c.violated()) {
        println!("  violated on {}", c.subspace);
    }
    Ok(())
}
