//! Counting real roots two ways: trace-form signatures and Sturm chains.
//!
//!     cargo run --example root_counting

use formcert::realroots::{
    is_nonneg_on_ray, is_positive_on_ray, isolate_real_roots, ray_violation, signature, squarefree_part,
    sturm_count, sylvester_root_counts, trace_form, Bound,
};
use formcert::{Rational, UniPoly};

fn main() -> formcert::Result<()> {
    let polys = ["t^2 - 5 t + 6", "t^2 + 3 t + 2", "t^3 - 2 t", "t^4 - 2 t^3 + t^2", "t^2 - 3 t + 3"];
    for text in polys {
        let p = UniPoly::parse(text)?;
        let sqf = squarefree_part(&p);
        println!("{p}");
        let q1 = signature(&trace_form(&sqf, &UniPoly::one())?);
        let qt = signature(&trace_form(&sqf, &UniPoly::t())?);
        println!("  sg(Q_1) = {}, sg(Q_t) = {}", q1.signature(), qt.signature());
        if let Ok(c) = sylvester_root_counts(&sqf) {
            println!("  trace forms: {} real, {} positive", c.real_roots, c.positive_real_roots);
        }
        let zero = Bound::Finite(Rational::from_integer(0.into()));
        println!(
            "  Sturm: {} real, {} positive",
            sturm_count(&p, &Bound::NegInfinity, &Bound::PosInfinity)?,
            sturm_count(&p, &zero, &Bound::PosInfinity)?
        );
        let roots: Vec<String> = isolate_real_roots(&p)?
            .iter()
            .map(|r| format!("[{}, {}]", r.lower(), r.upper()))
            .collect();
        println!("  isolated: {}", roots.join(" "));
        println!(
            "  on t >= 0: nonnegative {}, positive {}",
            is_nonneg_on_ray(&p)?,
            is_positive_on_ray(&p)?
        );
        if let Some(w) = ray_violation(&p)? {
            println!("  p({}) = {} < 0", w.t, w.value);
        }
    }
    Ok(())
}
