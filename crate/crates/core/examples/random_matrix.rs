//! Draw one banded random matrix and compare float and exact determinants.

use hyperlines::det::{det_exact_integer, logabsdet_real};
use hyperlines::matrix::{build_real, build_symbolic};
use hyperlines::sampler::{sample_real_vector, RngStream};
use hyperlines::ProblemSpec;
use num_bigint::BigInt;

fn main() -> hyperlines::Result<()> {
    let spec = ProblemSpec::new(4)?;
    let mut rng = RngStream::new(7, 0);
    let vectors: Vec<_> = (0..spec.blocks()).map(|_| sample_real_vector(spec, &mut rng)).collect();
    let j = build_real(spec, &vectors)?;
    for row in j.matrix.rows() {
        println!("{}", row.iter().map(|x| format!("{x:>8.3}")).collect::<String>());
    }
    let d = logabsdet_real(&j.matrix);
    println!("det = {} (sign {}, log|det| {:.6})", d.value(), d.sign, d.log_modulus);

    // Integer instantiation of the symbolic template.
    let template = build_symbolic(spec);
    let point: Vec<BigInt> = (0..template.var_count()).map(|k| BigInt::from((k * k + 3 * k) as i64 % 7 - 3)).collect();
    let m = template.instantiate(&point)?;
    println!("exact det at an integer point = {}", det_exact_integer(&m));
    Ok(())
}
