//! Command-line front end: argument parsing and dispatch to the library.
//!
//! Results go to stdout (or `--output`), diagnostics to stderr. Exit codes:
//! 0 success, 1 validation error, 2 internal-consistency failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exact::{
    abs_det3_closed_form, e3_closed_form, expected_det_closed_form, grassmannian_volume, prefactor_complex, prefactor_real,
    rn_signed_count, zagier_cn, ExactRational, Field, ProblemSpec,
};
use crate::mc::{self, McConfig, McRecord, REALIFY_TOLERANCE};
use crate::poly::{cn_exact_symbolic, verify_lemma_i1, verify_lemma_i2, SymbolicModel, DEFAULT_SYMBOLIC_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "hyperlines", version, about = "Exact and Monte Carlo line counts on hypersurfaces of degree 2n-3")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Largest n handled by the symbolic expansion. Memory grows roughly
    /// fourfold per step; 7 needs well over 5 GB.
    #[arg(long, global = true, default_value_t = DEFAULT_SYMBOLIC_CAP)]
    pub symbolic_cap: u32,

    /// Accept Monte Carlo runs with n above 30.
    #[arg(long, global = true)]
    pub allow_large_n: bool,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact quantities.
    #[command(subcommand)]
    Exact(ExactCmd),
    /// Monte Carlo estimates.
    Mc(McArgs),
    /// Consistency checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Table of log E_n / log C_n.
    Sqrtlaw(SqrtLawArgs),
    /// Export artifacts.
    #[command(subcommand)]
    Dump(DumpCmd),
}

#[derive(Debug, Subcommand)]
pub enum ExactCmd {
    /// Number of complex lines C_n.
    Cn {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = CnMethod::Zagier)]
        method: CnMethod,
    },
    /// Signed count R_n = (2n-3)!!.
    Rn {
        #[arg(long)]
        n: u32,
    },
    /// Closed-form constants for cubic surfaces.
    En3,
    /// Volume of the Grassmannian of k-planes in m-space.
    Volume {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum)]
        field: FieldArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CnMethod {
    Zagier,
    Symbolic,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum McOp {
    En,
    Cn,
    Absdet,
    Signeddet,
    Absdetsq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(value_enum)]
    pub op: McOp,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    /// Number of RNG streams, run on as many worker threads.
    #[arg(long, default_value_t = 1)]
    pub threads: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Support lemmas for the symbolic determinant.
    Lemmas {
        #[arg(long)]
        n: u32,
    },
    /// prefactor * E det J_n = (2n-3)!!, symbolically when n fits the cap.
    Signed {
        #[arg(long)]
        n: u32,
    },
    /// Distribution tests for the cubic case.
    Density {
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
    /// det(realify(A)) = |det A|^2 on random complex matrices.
    Realify {
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct SqrtLawArgs {
    #[arg(long)]
    pub n_min: u32,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum DumpCmd {
    /// Write the symbolic determinant as `coeff e_1 ... e_N` lines.
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> i32 {
    if e.is_validation() {
        EXIT_VALIDATION
    } else {
        EXIT_CONSISTENCY
    }
}

/// Run one command and return the process exit code.
pub fn dispatch(config: &RunConfig) -> i32 {
    let result = match &config.output {
        Some(path) => File::create(path)
            .map_err(Error::from)
            .and_then(|f| run(config, &mut BufWriter::new(f))),
        None => run(config, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("hyperlines: {e}");
            exit_code(&e)
        }
    }
}

/// Run one command, writing its result to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    match &config.command {
        Command::Exact(cmd) => run_exact(config, cmd, out),
        Command::Mc(args) => run_mc(config, args, out),
        Command::Verify(cmd) => run_verify(config, cmd, out),
        Command::Sqrtlaw(args) => run_sqrtlaw(config, args, out),
        Command::Dump(DumpCmd::Poly { n, out: path }) => {
            let model = SymbolicModel::new(ProblemSpec::new(*n)?, config.symbolic_cap)?;
            model.poly.write_text(BufWriter::new(File::create(path)?))?;
            writeln!(out, "wrote {} terms in {} variables to {}", model.poly.len(), model.poly.var_count(), path.display())?;
            Ok(())
        }
    }
}

fn ratio_string(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn run_exact(config: &RunConfig, cmd: &ExactCmd, out: &mut dyn Write) -> Result<()> {
    match *cmd {
        ExactCmd::Cn { n, method } => {
            let spec = ProblemSpec::new(n)?;
            let zagier = matches!(method, CnMethod::Zagier | CnMethod::Both).then(|| zagier_cn(n)).transpose()?;
            let symbolic = matches!(method, CnMethod::Symbolic | CnMethod::Both)
                .then(|| cn_exact_symbolic(spec, config.symbolic_cap))
                .transpose()?;
            if let Some(z) = &zagier {
                writeln!(out, "zagier {z}")?;
            }
            if let Some(s) = &symbolic {
                writeln!(out, "symbolic {s}")?;
            }
            if let (Some(z), Some(s)) = (zagier, symbolic) {
                if z != s {
                    return Err(Error::Consistency(format!("C_{n} routes disagree: zagier {z}, symbolic {s}")));
                }
            }
        }
        ExactCmd::Rn { n } => writeln!(out, "{}", rn_signed_count(n)?)?,
        ExactCmd::En3 => {
            let spec = ProblemSpec::new(3)?;
            let e3 = e3_closed_form();
            let absdet = abs_det3_closed_form();
            writeln!(out, "E_3 = {e3} ~ {}", e3.to_f64())?;
            writeln!(out, "E|det J_3| = {absdet} ~ {}", absdet.to_f64())?;
            writeln!(out, "rho_3 = {}", ratio_string(&prefactor_real(spec)))?;
            writeln!(out, "E det J_3 = {}", expected_det_closed_form(spec))?;
            writeln!(out, "R_3 = {}", rn_signed_count(3)?)?;
            writeln!(out, "C_3 = {}", zagier_cn(3)?)?;
            writeln!(out, "rho_3^C = {}", ratio_string(&prefactor_complex(spec)))?;
            let second = ExactRational::from(zagier_cn(3)?) / prefactor_complex(spec);
            writeln!(out, "E|det J_3^C|^2 = {}", ratio_string(&second))?;
        }
        ExactCmd::Volume { k, m, field } => {
            let f = match field {
                FieldArg::Real => Field::Real,
                FieldArg::Complex => Field::Complex,
            };
            writeln!(out, "{}", grassmannian_volume(k, m, f)?)?;
        }
    }
    Ok(())
}

fn mc_config(samples: u64, seed: u64, threads: u32, config: &RunConfig) -> McConfig {
    McConfig {
        allow_large_n: config.allow_large_n,
        ..McConfig::new(samples, seed, threads)
    }
}

fn run_mc(config: &RunConfig, args: &McArgs, out: &mut dyn Write) -> Result<()> {
    let spec = ProblemSpec::new(args.n)?;
    let cfg = mc_config(args.samples, args.seed, args.threads, config);
    let record = match args.op {
        McOp::En => McRecord::from_line_count("en", &mc::estimate_en(spec, &cfg)?),
        McOp::Cn => McRecord::from_line_count("cn", &mc::estimate_cn_mc(spec, &cfg)?),
        McOp::Absdet => McRecord::from_raw("absdet", args.n, &mc::estimate_abs_det_real(spec, &cfg)?),
        McOp::Signeddet => McRecord::from_raw("signeddet", args.n, &mc::estimate_signed_det_real(spec, &cfg)?),
        McOp::Absdetsq => McRecord::from_raw("absdetsq", args.n, &mc::estimate_abs_det_sq_complex(spec, &cfg)?),
    };
    match args.format {
        Format::Json => writeln!(out, "{}", record.to_json())?,
        Format::Text => write!(out, "{}", record.to_text())?,
        Format::Csv => return Err(Error::Domain("mc supports --format json or text".into())),
    }
    Ok(())
}

fn run_verify(config: &RunConfig, cmd: &VerifyCmd, out: &mut dyn Write) -> Result<()> {
    match *cmd {
        VerifyCmd::Lemmas { n } => {
            let model = SymbolicModel::new(ProblemSpec::new(n)?, config.symbolic_cap)?;
            let i1 = verify_lemma_i1(&model)?;
            let i2 = verify_lemma_i2(&model);
            let report = serde_json::json!({ "lemma_i1": i1, "lemma_i2": i2 });
            writeln!(out, "{report}")?;
            if !i1.permanent_count_match || i2.violations > 0 {
                return Err(Error::Consistency(format!(
                    "support lemmas fail at n = {n}: {} count mismatches, {} midpoint violations",
                    i1.mismatches, i2.violations
                )));
            }
        }
        VerifyCmd::Signed { n } => {
            let spec = ProblemSpec::new(n)?;
            let rn = rn_signed_count(n)?;
            let rho = prefactor_real(spec);
            let closed = &rho * ExactRational::from(expected_det_closed_form(spec));
            let mut ok = closed == ExactRational::from(rn.clone());
            writeln!(out, "R_{n} = {rn}")?;
            writeln!(out, "closed form: {}", ratio_string(&closed))?;
            if n <= config.symbolic_cap {
                let model = SymbolicModel::new(spec, config.symbolic_cap)?;
                let symbolic = &rho * model.expected_det();
                ok &= symbolic == ExactRational::from(rn.clone());
                writeln!(out, "symbolic: {}", ratio_string(&symbolic))?;
            } else {
                eprintln!("symbolic route skipped: n = {n} exceeds the symbolic cap {}", config.symbolic_cap);
            }
            if !ok {
                return Err(Error::Consistency(format!("signed count mismatch at n = {n}")));
            }
        }
        VerifyCmd::Density { samples, seed } => {
            let report = mc::density_test_n3(samples, seed)?;
            writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            let bound = 5.0 / (samples as f64).sqrt();
            if report.p_value <= 1e-3 || report.char_fn_max_abs_dev >= bound {
                return Err(Error::Consistency(format!(
                    "density test rejected: p = {}, char fn deviation {} (bound {bound})",
                    report.p_value, report.char_fn_max_abs_dev
                )));
            }
        }
        VerifyCmd::Realify { trials, seed } => {
            let report = mc::realify_check(trials, seed);
            writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            if !report.passed() {
                return Err(Error::Consistency(format!(
                    "block embedding identity fails: max relative error {} (tolerance {REALIFY_TOLERANCE}), {} negative determinants",
                    report.max_rel_error, report.negative_dets
                )));
            }
        }
    }
    Ok(())
}

fn run_sqrtlaw(config: &RunConfig, args: &SqrtLawArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = mc_config(args.samples, args.seed, args.threads, config);
    let rows = mc::sqrt_law_study(args.n_min, args.n_max, &cfg)?;
    match args.format {
        Format::Csv => mc::write_sqrt_law_csv(&rows, out),
        Format::Json => {
            let doc = serde_json::json!({
                "schema_version": mc::SCHEMA_VERSION,
                "samples": args.samples,
                "seed": args.seed,
                "streams": args.threads,
                "rows": rows,
            });
            writeln!(out, "{doc}")?;
            Ok(())
        }
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "n={:>2}  ratio {:.5} +/- {:.5}  lower bound {:.5}",
                    r.n, r.ratio, r.std_error, r.lower_bound_ratio
                )?;
            }
            Ok(())
        }
    }
}
