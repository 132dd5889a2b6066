//! The full certify report as exact JSON, and a round trip through serde.
//!
//!     cargo run --example json_report

use formcert::certify::{certify, CertifyOptions, Verdict};
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    let f = HomogPoly::parse("x1^4 - x1 x2^3 + 2 x2^4", 2)?;
    let v = certify(&f, &CertifyOptions::default())?;
    let json = serde_json::to_string_pretty(&v).expect("serializable");
    println!("{json}");
    let back: Verdict = serde_json::from_str(&json).expect("round trip");
    assert_eq!(back.kind, v.kind);
    Ok(())
}
