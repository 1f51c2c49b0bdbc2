//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values come from independent computations in this file
//! (odd-number products, float evaluations of closed forms), from the
//! univariate formula for C_n checked against the symbolic route, or from
//! known constants (C_3 = 27, C_4 = 2875, E_3 = 6 sqrt 2 - 3,
//! E|det J_3| = 4 sqrt 2 - 2, E|det J_3^C|^2 = 36).

use std::f64::consts::SQRT_2;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyperlines::det::det_exact_integer;
use hyperlines::exact::{expected_det_closed_form, prefactor_real, zagier_cn, ExactRational};
use hyperlines::mc::{
    density_test_n3, estimate_abs_det_sq_complex, estimate_cn_mc, estimate_en, realify_check, sqrt_law_study, McConfig,
    McRecord,
};
use hyperlines::poly::{verify_lemma_i1, verify_lemma_i2, SymbolicModel, DEFAULT_SYMBOLIC_CAP};
use hyperlines::sampler::RngStream;
use hyperlines::ProblemSpec;
use num_bigint::BigInt;

const BIN: &str = env!("CARGO_BIN_EXE_hyperlines");

struct Outcome {
    pass: bool,
    detail: String,
    /// Failure that follows from the mathematics and cannot be fixed in code.
    unattainable: bool,
}

impl Outcome {
    fn check(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            detail,
            unattainable: false,
        }
    }
}

fn spec(n: u32) -> ProblemSpec {
    ProblemSpec::new(n).unwrap()
}

fn odd_product(n: u32) -> BigInt {
    (1..=(2 * n as i64 - 3)).step_by(2).map(BigInt::from).product()
}

fn mc_cfg() -> McConfig {
    McConfig::new(1_000_000, 42, 4)
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn c1() -> Outcome {
    let t = Instant::now();
    let out = Command::new(BIN)
        .args(["exact", "cn", "--n", "3", "--method", "both"])
        .output()
        .unwrap();
    let elapsed = t.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let pass = out.status.success() && stdout == "zagier 27\nsymbolic 27\n" && elapsed < Duration::from_secs(1);
    Outcome::check(pass, format!("exact cn --n 3 --method both -> {:?} in {}", stdout.trim(), secs(elapsed)))
}

fn c2(models: &[SymbolicModel]) -> Outcome {
    let t = Instant::now();
    let mut all = true;
    let mut shown = Vec::new();
    for m in models {
        let n = m.spec.n();
        let symbolic = m.cn().unwrap();
        all &= symbolic == zagier_cn(n).unwrap();
        shown.push(format!("C_{n} = {symbolic}"));
    }
    all &= models[1].cn().unwrap() == BigInt::from(2875);
    Outcome::check(all, format!("symbolic = univariate for n = 3..6 ({}), {}", shown.join(", "), secs(t.elapsed())))
}

fn c3(m3: &SymbolicModel) -> Outcome {
    let norm = m3.bombieri_norm_sq();
    let second = m3.complex_second_moment().unwrap();
    let pass = norm == ExactRational::new(3.into(), 2.into()) && second == ExactRational::from(BigInt::from(36));
    Outcome::check(pass, format!("Bombieri norm^2 of P_3 = {norm}, E|det J_3^C|^2 = {second}"))
}

fn c4(models: &[SymbolicModel]) -> Outcome {
    let mut pass = true;
    for m in models {
        let n = m.spec.n();
        pass &= prefactor_real(m.spec) * m.expected_det() == ExactRational::from(odd_product(n));
    }
    for n in 3..=12 {
        let s = spec(n);
        pass &= prefactor_real(s) * ExactRational::from(expected_det_closed_form(s)) == ExactRational::from(odd_product(n));
    }
    Outcome::check(pass, "rho_n E det J_n = (2n-3)!!: symbolic n = 3..6, closed form n = 3..12".into())
}

fn c5() -> Outcome {
    let t = Instant::now();
    let e = estimate_en(spec(3), &mc_cfg()).unwrap();
    let elapsed = t.elapsed();
    let e3 = 6.0 * SQRT_2 - 3.0;
    let absdet = 4.0 * SQRT_2 - 2.0;
    let z_value = e.z_score(e3);
    let z_raw = e.raw.z_score(absdet);
    let pass = z_value.abs() < 4.0 && z_raw.abs() < 4.0 && elapsed < Duration::from_secs(60);
    Outcome::check(
        pass,
        format!(
            "E_3 ~ {:.5} (z = {z_value:+.2}), E|det J_3| ~ {:.5} (z = {z_raw:+.2}), {}",
            e.value,
            e.raw.mean,
            secs(elapsed)
        ),
    )
}

fn c6() -> Outcome {
    let sq = estimate_abs_det_sq_complex(spec(3), &mc_cfg()).unwrap();
    let c4 = estimate_cn_mc(spec(4), &mc_cfg()).unwrap();
    let (za, zb) = (sq.z_score(36.0), c4.z_score(2875.0));
    Outcome::check(
        za.abs() < 4.0 && zb.abs() < 4.0,
        format!("E|det J_3^C|^2 ~ {:.4} (z = {za:+.2}), C_4 ~ {:.1} (z = {zb:+.2})", sq.mean, c4.value),
    )
}

fn c7() -> Outcome {
    let samples = 100_000;
    let r = density_test_n3(samples, 42).unwrap();
    let bound = 5.0 / (samples as f64).sqrt();
    Outcome::check(
        r.p_value > 1e-3 && r.char_fn_max_abs_dev < bound,
        format!(
            "KS D = {:.5}, p = {:.4}; char fn max dev {:.5} < {bound:.5}",
            r.ks_statistic, r.p_value, r.char_fn_max_abs_dev
        ),
    )
}

fn c8(models: &[SymbolicModel]) -> Outcome {
    let mut pass = true;
    let mut shown = Vec::new();
    for m in &models[..3] {
        let i1 = verify_lemma_i1(m).unwrap();
        let i2 = verify_lemma_i2(m);
        pass &= i1.mismatches == 0 && i1.permanent_count_match && i2.violations == 0;
        shown.push(format!("n={}: {} count mismatches, {} of {} midpoints missing", i1.n, i1.mismatches, i2.violations, i2.pairs_checked));
    }
    Outcome::check(pass, shown.join("; "))
}

fn c9() -> Outcome {
    let r = realify_check(1000, 42);
    Outcome::check(
        r.max_rel_error <= 1e-9 && r.negative_dets == 0,
        format!("{} matrices of sizes 1-8: max rel error {:.2e}, {} negative", r.trials, r.max_rel_error, r.negative_dets),
    )
}

fn c10() -> Outcome {
    let rows = sqrt_law_study(3, 10, &McConfig::new(200_000, 42, 4)).unwrap();
    let target = (6.0 * SQRT_2 - 3.0).ln() / 27f64.ln();
    let first = (rows[0].ratio - target).abs() < 0.01;
    let above = rows.iter().all(|r| r.ratio >= r.lower_bound_ratio - 3.0 * r.std_error);
    let decreasing = rows.windows(2).all(|w| w[1].lower_bound_ratio < w[0].lower_bound_ratio);
    let increasing = rows.windows(2).all(|w| w[1].lower_bound_ratio > w[0].lower_bound_ratio);
    let column: Vec<String> = rows.iter().map(|r| format!("{:.4}", r.lower_bound_ratio)).collect();
    let mut detail = format!(
        "(i) ratio_3 = {:.4} vs {target:.4}: {}; (ii) ratio >= bound - 3 se: {}; (iii) bound column strictly decreasing: {}",
        rows[0].ratio,
        ok(first),
        ok(above),
        ok(decreasing)
    );
    let unattainable = first && above && !decreasing && increasing;
    if unattainable {
        detail += &format!(
            ". The column log (2n-3)!! / log C_n = (n log n + O(n)) / (2n log n + O(n)) rises from 1/3 toward 1/2: [{}]",
            column.join(", ")
        );
    }
    Outcome {
        pass: first && above && decreasing,
        detail,
        unattainable,
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "no"
    }
}

fn c11() -> Outcome {
    let run = || {
        [
            McRecord::from_line_count("en", &estimate_en(spec(3), &mc_cfg()).unwrap()).to_json(),
            McRecord::from_raw("absdetsq", 3, &estimate_abs_det_sq_complex(spec(3), &mc_cfg()).unwrap()).to_json(),
            McRecord::from_line_count("cn", &estimate_cn_mc(spec(4), &mc_cfg()).unwrap()).to_json(),
        ]
    };
    let lib_same = run() == run();
    let cli = || {
        Command::new(BIN)
            .args(["mc", "en", "--n", "3", "--samples", "1000000", "--seed", "42", "--threads", "4", "--format", "json"])
            .output()
            .unwrap()
            .stdout
    };
    let (a, b) = (cli(), cli());
    let cli_same = !a.is_empty() && a == b;
    Outcome::check(lib_same && cli_same, format!("library records identical: {}; CLI JSON identical: {}", ok(lib_same), ok(cli_same)))
}

fn c12(models: &[SymbolicModel]) -> Outcome {
    let mut rng = RngStream::new(42, 12);
    let mut mismatches = 0;
    let mut checked = 0;
    for m in models {
        for _ in 0..100 {
            let point: Vec<BigInt> = (0..m.template.var_count())
                .map(|_| BigInt::from((rng.uniform() * 11.0).floor() as i64 - 5))
                .collect();
            let via_poly = m.poly.evaluate(&point).unwrap();
            let via_bareiss = det_exact_integer(&m.template.instantiate(&point).unwrap());
            mismatches += usize::from(via_poly != via_bareiss);
            checked += 1;
        }
    }
    Outcome::check(mismatches == 0, format!("{checked} integer points over n = 3..6: {mismatches} mismatches"))
}

fn main() -> ExitCode {
    let t = Instant::now();
    let models: Vec<SymbolicModel> = (3..=6).map(|n| SymbolicModel::new(spec(n), DEFAULT_SYMBOLIC_CAP).unwrap()).collect();
    eprintln!("symbolic models n = 3..6 built in {}", secs(t.elapsed()));

    let checks: Vec<(u32, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(c1)),
        (2, Box::new(|| c2(&models))),
        (3, Box::new(|| c3(&models[0]))),
        (4, Box::new(|| c4(&models))),
        (5, Box::new(c5)),
        (6, Box::new(c6)),
        (7, Box::new(c7)),
        (8, Box::new(|| c8(&models))),
        (9, Box::new(c9)),
        (10, Box::new(c10)),
        (11, Box::new(c11)),
        (12, Box::new(|| c12(&models))),
    ];
    let mut unexpected = 0;
    let mut unattainable = 0;
    for (id, check) in &checks {
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {status}  {}", o.detail);
        if !o.pass {
            if o.unattainable {
                unattainable += 1;
            } else {
                unexpected += 1;
            }
        }
    }
    let passed = checks.len() - unexpected - unattainable;
    println!(
        "acceptance: {passed}/{} pass, {unattainable} unattainable as stated, {unexpected} unexpected failures",
        checks.len()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
