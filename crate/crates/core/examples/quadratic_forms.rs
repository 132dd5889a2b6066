//! Degree two is decided exactly by Sylvester's criterion.
//!
//!     cargo run --example quadratic_forms

use formcert::certify::sylvester_quadratic;
use formcert::resultant::discriminant;
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    let forms = [
        ("2 x1^2 + 2 x1 x2 + 3 x2^2", 2),
        ("x1^2 - 2 x1 x2 + x2^2", 2),
        ("x1^2 + x2^2 - x3^2", 3),
        ("x1^2 + x2^2 + x3^2 + x1 x3", 3),
    ];
    for (text, n) in forms {
        let f = HomogPoly::parse(text, n)?;
        let s = sylvester_quadratic(&f)?;
        let minors: Vec<String> = s.leading.iter().map(|m| m.value.to_string()).collect();
        println!(
            "{text:<28} minors [{}] positive {} nonnegative {} Δ = det = {}",
            minors.join(", "),
            s.positive,
            s.nonnegative,
            discriminant(&f)?
        );
    }
    Ok(())
}
