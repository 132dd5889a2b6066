//! `χ(F)(t) = Δ(F + tJ)`, on the full space and on coordinate subspaces.
//!
//!     cargo run --example charpoly

use formcert::charpoly::{char_poly, char_poly_on_subspace};
use formcert::HomogPoly;

fn main() -> formcert::Result<()> {
    // for a quadratic form χ is det(A + tI)
    let q = HomogPoly::parse("x1^2 + 2 x2^2", 2)?;
    println!("χ({q}) = {}", char_poly(&q)?);

    let j = HomogPoly::reference_form(2, 4);
    println!("χ({j}) = {}", char_poly(&j)?);

    let f = HomogPoly::parse("x1^4 + x1^2 x2^2 + x2^4 + x3^4", 3)?;
    println!("χ({f}) = {}", char_poly(&f)?);
    for subset in [[0, 1], [0, 2], [1, 2]] {
        let chi = char_poly_on_subspace(&f, &subset)?;
        println!("  on x{}, x{}: {chi}", subset[0] + 1, subset[1] + 1);
    }
    Ok(())
}
