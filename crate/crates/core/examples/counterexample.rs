//! The deterministic sampler behind NOT_NONNEGATIVE verdicts.
//!
//!     cargo run --example counterexample

use formcert::certify::{find_counterexample, DEFAULT_BUDGET};
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    let forms = [
        ("x1^4 - 3 x1^2 x2^2 + x2^4", 2),
        ("x1^4 - 5 x1^2 x2^2 + 6 x2^4", 2),
        ("x1^4 + x2^4 + x3^4 - 4 x1 x2 x3^2", 3),
        ("x1^4 + x2^4", 2),
    ];
    for (text, n) in forms {
        let f = HomogPoly::parse(text, n)?;
        match find_counterexample(&f, DEFAULT_BUDGET) {
            Some(w) => {
                let cells: Vec<String> = w.point.iter().map(|x| x.to_string()).collect();
                println!("{text}: F({}) = {}", cells.join(", "), w.value);
            }
            None => println!("{text}: no negative point found"),
        }
    }
    Ok(())
}
