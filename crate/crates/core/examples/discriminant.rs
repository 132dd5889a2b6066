//! The normalized discriminant `Δ(F) = R(∇F) / R(∇J)` and its degree.
//!
//!     cargo run --example discriminant

use formcert::resultant::{discriminant, discriminant_degree, gradient_resultant};
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    let cases = [
        ("x1^2 + 2 x2^2", 2),
        ("x1^4 + x2^4", 2),
        ("x1^4 + 2 x1^2 x2^2 + x2^4", 2),
        ("x1^4 - x1 x2^3 + 2 x2^4", 2),
        ("x1^2 + x2^2 + x3^2 + x1 x2", 3),
        ("x1^4 + x2^4 + x3^4", 3),
    ];
    for (text, n) in cases {
        let f = HomogPoly::parse(text, n)?;
        let d = f.degree();
        println!(
            "{text:<30} D = {:<3} R(∇F) = {:<12} Δ = {}",
            discriminant_degree(n, d),
            gradient_resultant(&f)?.to_string(),
            discriminant(&f)?
        );
    }
    Ok(())
}
