use std::io::Write;

use serde::Serialize;

use super::{estimate_en, McConfig, SQRT_LAW_CSV_HEADER, MC_MAX_N};
use crate::error::{Error, Result};
use crate::exact::{double_factorial, ln_bigint, zagier_cn, ProblemSpec};

/// One row of the square-root-law table. `std_error` is the propagated
/// standard error of `ratio`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqrtLawRow {
    pub n: u32,
    pub log_en: f64,
    pub log_cn: f64,
    pub ratio: f64,
    pub lower_bound_ratio: f64,
    pub std_error: f64,
}

pub fn sqrt_law_study(n_min: u32, n_max: u32, cfg: &McConfig) -> Result<Vec<SqrtLawRow>> {
    let upper = if cfg.allow_large_n { u32::MAX } else { MC_MAX_N };
    if !(3 <= n_min && n_min <= n_max && n_max <= upper) {
        return Err(Error::Domain(format!(
            "need 3 <= n_min <= n_max <= {MC_MAX_N}, got n_min = {n_min}, n_max = {n_max}"
        )));
    }
    (n_min..=n_max)
        .map(|n| {
            let spec = ProblemSpec::new(n)?;
            let est = estimate_en(spec, cfg)?;
            let log_cn = ln_bigint(&zagier_cn(n)?);
            let log_rn = ln_bigint(&double_factorial(2 * n as i64 - 3)?);
            let log_en = est.value.ln();
            Ok(SqrtLawRow {
                n,
                log_en,
                log_cn,
                ratio: log_en / log_cn,
                lower_bound_ratio: log_rn / log_cn,
                std_error: est.std_error / est.value / log_cn,
            })
        })
        .collect()
}

pub fn write_sqrt_law_csv<W: Write>(rows: &[SqrtLawRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(SQRT_LAW_CSV_HEADER.split(','))
        .map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = sqrt_law_study(3, 5, &McConfig::new(20_000, 2, 2)).unwrap();
        assert_eq!(rows.len(), 3);
        assert!((rows[0].log_cn - 27f64.ln()).abs() < 1e-12);
        assert!((rows[0].lower_bound_ratio - 3f64.ln() / 27f64.ln()).abs() < 1e-12);
        assert!(rows.windows(2).all(|w| w[1].lower_bound_ratio > w[0].lower_bound_ratio));
        let mut buf = Vec::new();
        write_sqrt_law_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), SQRT_LAW_CSV_HEADER);
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(1).unwrap().starts_with("3,"));
    }

    #[test]
    fn range_checked() {
        let cfg = McConfig::new(1000, 1, 1);
        assert!(sqrt_law_study(2, 4, &cfg).is_err());
        assert!(sqrt_law_study(5, 4, &cfg).is_err());
        assert!(sqrt_law_study(3, 31, &cfg).is_err());
    }
}
