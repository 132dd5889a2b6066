//! Certify a handful of forms and print the deciding certificate.
//!
//!     cargo run --example certify

use formcert::certify::{certify, CertifyOptions};
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    let forms = [
        ("x1^4 + x2^4", 2),
        ("x1^4 + x1^2 x2^2 + x2^4 + x3^4", 3),
        ("x1^2 - 2 x1 x2 + x2^2", 2),
        ("x1^4 - 3 x1^2 x2^2 + x2^4", 2),
        ("x1^2 x2^2", 2),
    ];
    for (text, n) in forms {
        let f = HomogPoly::parse(text, n)?;
        let v = certify(&f, &CertifyOptions::default())?;
        let by = v.certificates.first().map_or("nothing", |c| c.kind());
        println!("{text:<34} {:<16} by {by}", v.kind.as_str());
        for c in &v.certificates {
            assert!(c.verify(&f)?, "certificate {} does not re-verify", c.kind());
        }
    }
    Ok(())
}
