//! CSV tables and their number rendering.

use std::io;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use peano_core::goldbach::FrakNReport;
use peano_core::models::LimitRow;

/// `x` with 12 significant digits, as C's `%.12g` prints it.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Header `alpha,u,n,psi,deviation`.
pub fn write_limit_csv<W: io::Write>(out: W, alpha: u64, rows: &[LimitRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["alpha", "u", "n", "psi", "deviation"])?;
    for r in rows {
        w.write_record([
            alpha.to_string(),
            sig12(ratio_to_f64(r.u)),
            r.n.to_string(),
            sig12(r.psi.to_f64(r.u)),
            sig12(ratio_to_f64(r.deviation)),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Header `alpha,count`, one row per member.
pub fn write_scan_csv<W: io::Write>(out: W, report: &FrakNReport) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["alpha", "count"])?;
    for (alpha, count) in &report.partition_counts {
        w.write_record([alpha.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
