//! Monte Carlo estimates of E_n and C_n.
//!
//! Usage: `cargo run --release --example monte_carlo_counts [samples] [threads]`

use hyperlines::exact::{e3_closed_form, zagier_cn};
use hyperlines::mc::{estimate_cn_mc, estimate_en, McConfig};
use hyperlines::ProblemSpec;

fn main() -> hyperlines::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().map_or(200_000, |s| s.parse().expect("samples"));
    let threads = args.next().map_or(4, |s| s.parse().expect("threads"));
    let cfg = McConfig::new(samples, 42, threads);

    let e3 = estimate_en(ProblemSpec::new(3)?, &cfg)?;
    println!("E_3 ~ {:.5} +/- {:.5}  (exact {:.5}, z = {:+.2})", e3.value, e3.std_error, e3_closed_form().to_f64(), e3.z_score(e3_closed_form().to_f64()));

    for n in 4..=8 {
        let e = estimate_en(ProblemSpec::new(n)?, &cfg)?;
        println!("E_{n} ~ {:.6e} +/- {:.2e}", e.value, e.std_error);
    }
    for n in 3..=5 {
        let c = estimate_cn_mc(ProblemSpec::new(n)?, &cfg)?;
        let exact: f64 = zagier_cn(n)?.to_string().parse().unwrap();
        println!("C_{n} ~ {:.2} +/- {:.2}  (exact {exact}, z = {:+.2})", c.value, c.std_error, c.z_score(exact));
    }
    Ok(())
}
