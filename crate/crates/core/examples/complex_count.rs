//! C_n three ways: the univariate coefficient formula, the Bombieri norm of
//! the expanded determinant, and the large-n asymptotic.

use std::time::Instant;

use hyperlines::exact::{zagier_asymptotic, zagier_cn};
use hyperlines::poly::{cn_exact_symbolic, DEFAULT_SYMBOLIC_CAP};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    for n in 3..=10 {
        let exact = zagier_cn(n)?;
        let approx = zagier_asymptotic(n)?.to_f64();
        let ratio = approx / exact.to_string().parse::<f64>().unwrap();
        println!("n = {n:>2}  C_n = {exact}  asymptotic/exact = {ratio:.4}");
    }
    for n in 3..=5 {
        let t = Instant::now();
        let symbolic = cn_exact_symbolic(ProblemSpec::new(n)?, DEFAULT_SYMBOLIC_CAP)?;
        assert_eq!(symbolic, zagier_cn(n)?);
        println!("n = {n}  symbolic route agrees ({:.2?})", t.elapsed());
    }
    Ok(())
}
