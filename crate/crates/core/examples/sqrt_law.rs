//! Table of `log E_n / log C_n` against the signed-count lower bound, as CSV.

use hyperlines::mc::{sqrt_law_study, write_sqrt_law_csv, McConfig};

fn main() -> hyperlines::Result<()> {
    let rows = sqrt_law_study(3, 10, &McConfig::new(50_000, 42, 4))?;
    write_sqrt_law_csv(&rows, std::io::stdout().lock())
}
