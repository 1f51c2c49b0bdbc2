//! The signed count of real lines, `(2n-3)!!`, from the prefactor and the
//! mean of the signed determinant.

use hyperlines::exact::{expected_det_closed_form, prefactor_real, rn_signed_count, ExactRational};
use hyperlines::poly::{expected_det_exact, DEFAULT_SYMBOLIC_CAP};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    for n in 3..=12 {
        let spec = ProblemSpec::new(n)?;
        let rho = prefactor_real(spec);
        let via_closed = &rho * ExactRational::from(expected_det_closed_form(spec));
        let symbolic = if n <= 5 {
            let v = &rho * expected_det_exact(spec, DEFAULT_SYMBOLIC_CAP)?;
            v.to_string()
        } else {
            "-".into()
        };
        println!("n = {n:>2}  R_n = {:>12}  closed form {:>12}  symbolic {symbolic}", rn_signed_count(n)?, via_closed);
    }
    Ok(())
}
