//! Expand the symbolic determinant, check its support lemmas and write it
//! to a text file.
//!
//! Usage: `cargo run --release --example symbolic_poly [n] [path]`

use std::fs::File;
use std::io::BufWriter;

use hyperlines::poly::{verify_lemma_i1, verify_lemma_i2, SymbolicModel, DEFAULT_SYMBOLIC_CAP};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().map_or(4, |s| s.parse().expect("n"));
    let model = SymbolicModel::new(ProblemSpec::new(n)?, DEFAULT_SYMBOLIC_CAP)?;
    println!("Q_{n}: {} monomials in {} variables, degree {}", model.poly.len(), model.poly.var_count(), model.poly.degree());
    println!("Bombieri norm squared = {}", model.bombieri_norm_sq());
    println!("E det = {}, E det^2 = {}", model.expected_det(), model.expected_det_sq());
    println!("{:?}", verify_lemma_i1(&model)?);
    println!("{:?}", verify_lemma_i2(&model));
    if let Some(path) = args.next() {
        model.poly.write_text(BufWriter::new(File::create(&path)?))?;
        println!("written to {path}");
    }
    Ok(())
}
