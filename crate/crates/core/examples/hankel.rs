//! Catalecticant matrices: PSD for sums of even powers of linear forms,
//! indefinite for `x1^2 x2^2`.
//!
//!     cargo run --example hankel

use formcert::hankel::{definiteness, hankel_matrix, mu};
use formcert::{HomogPoly, Rational};

fn show(label: &str, f: &HomogPoly) -> formcert::Result<()> {
    let h = hankel_matrix(f)?;
    println!("{label}: {:?}", definiteness(&h));
    for row in h.matrix().rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    assert_eq!(&mu(&h), f);
    Ok(())
}

fn main() -> formcert::Result<()> {
    let r = |k: i64| Rational::from_integer(k.into());
    let l1 = HomogPoly::linear(&[r(1), r(1)]);
    let l2 = HomogPoly::linear(&[r(1), r(-2)]);
    let sum = l1.pow(4).add(&l2.pow(4).scale(&r(3)))?;
    show("(x1 + x2)^4 + 3 (x1 - 2 x2)^4", &sum)?;
    show("x1^4 + x2^4", &HomogPoly::parse("x1^4 + x2^4", 2)?)?;
    show("x1^2 x2^2", &HomogPoly::parse("x1^2 x2^2", 2)?)?;
    Ok(())
}
