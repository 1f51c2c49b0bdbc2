//! Distribution of `(bf-ce, af-cd, ae-bd)` for standard normal `a..f`.

use hyperlines::mc::density_test_n3;

fn main() -> hyperlines::Result<()> {
    let r = density_test_n3(100_000, 42)?;
    println!("KS statistic {:.5}, p-value {:.4}", r.ks_statistic, r.p_value);
    println!("characteristic function, max deviation {:.5}", r.char_fn_max_abs_dev);
    for (t, emp, exact) in &r.char_fn {
        println!("  t = ({:+.3}, {:+.3}, {:+.3})  {emp:.5}  {exact:.5}", t[0], t[1], t[2]);
    }
    Ok(())
}
