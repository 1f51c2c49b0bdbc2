//! The real block embedding of a complex matrix has determinant `|det|^2`.

use hyperlines::det::{logabsdet_complex, logabsdet_real};
use hyperlines::matrix::{build_complex, realify};
use hyperlines::mc::realify_check;
use hyperlines::sampler::{sample_complex_vector, RngStream};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    let spec = ProblemSpec::new(3)?;
    let mut rng = RngStream::new(1, 0);
    let vectors: Vec<_> = (0..spec.blocks()).map(|_| sample_complex_vector(spec, &mut rng)).collect();
    let j = build_complex(spec, &vectors)?;
    let direct = (2.0 * logabsdet_complex(&j.matrix).log_modulus).exp();
    let embedded = logabsdet_real(&realify(&j.matrix)).value();
    println!("|det J|^2 = {direct:.12}, det realify(J) = {embedded:.12}");

    let report = realify_check(1000, 0);
    println!("{} random matrices: max relative error {:.2e}, negative determinants {}", report.trials, report.max_rel_error, report.negative_dets);
    Ok(())
}
