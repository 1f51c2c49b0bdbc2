//! Volumes of real and complex Grassmannians of 2-planes.

use std::f64::consts::PI;

use hyperlines::exact::{grassmannian_volume, Field};

fn main() -> hyperlines::Result<()> {
    println!("Gr(2,4) real    = {} (2 pi^2 = {})", grassmannian_volume(2, 4, Field::Real)?, 2.0 * PI * PI);
    println!("Gr(2,4) complex = {} (pi^4/12 = {})", grassmannian_volume(2, 4, Field::Complex)?, PI.powi(4) / 12.0);
    for m in 5..=8 {
        println!(
            "Gr(2,{m})  real {:.6}  complex {:.6}",
            grassmannian_volume(2, m, Field::Real)?,
            grassmannian_volume(2, m, Field::Complex)?
        );
    }
    Ok(())
}
