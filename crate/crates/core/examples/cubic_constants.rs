//! Closed-form constants for cubic surfaces in projective 3-space.

use hyperlines::exact::{abs_det3_closed_form, e3_closed_form, prefactor_complex, prefactor_real, zagier_cn, ExactRational};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    let spec = ProblemSpec::new(3)?;
    let e3 = e3_closed_form();
    let absdet = abs_det3_closed_form();
    println!("E_3          = {e3} = {:.10}", e3.to_f64());
    println!("E|det J_3|   = {absdet} = {:.10}", absdet.to_f64());
    println!("rho_3        = {}", prefactor_real(spec));

    // rho_3 * E|det J_3| reproduces E_3 exactly.
    assert_eq!(absdet.scale(3, 2), Some(e3));

    let c3 = zagier_cn(3)?;
    let second = ExactRational::from(c3.clone()) / prefactor_complex(spec);
    println!("C_3          = {c3}");
    println!("E|det J^C|^2 = {second}");
    Ok(())
}
