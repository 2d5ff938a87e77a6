//! Deterministic text output: floats at 15 significant digits and the CSV
//! form of sampled wavefunctions.

use crate::error::{Error, Result};
use crate::wavefunction::RadialTable;
use std::io::{self, Write};

/// Formats with 15 significant digits, plain decimal for moderate exponents
/// and `me{exp}` scientific otherwise, trailing zeros trimmed. Deterministic:
/// equal inputs produce equal bytes.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("{:e} always carries an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-4..15).contains(&exp) {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (14 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    }
}

/// Writes a sampled wavefunction as CSV with header `xi,rho,R`.
pub fn write_radial_table(table: &RadialTable, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "xi,rho,R")?;
    for i in 0..table.xi_values.len() {
        writeln!(
            out,
            "{},{},{}",
            format_float(table.xi_values[i]),
            format_float(table.rho_values[i]),
            format_float(table.r_values[i])
        )?;
    }
    Ok(())
}

/// Parses the CSV produced by [`write_radial_table`].
pub fn parse_radial_table(text: &str) -> Result<RadialTable> {
    let mut lines = text.lines();
    match lines.next() {
        Some("xi,rho,R") => {}
        other => {
            return Err(Error::InvalidInput(format!(
                "expected header 'xi,rho,R', got {other:?}"
            )))
        }
    }
    let mut table =
        RadialTable { xi_values: Vec::new(), r_values: Vec::new(), rho_values: Vec::new() };
    for (row, line) in lines.enumerate() {
        let mut fields = line.split(',');
        let mut next = |name: &str| -> Result<f64> {
            fields
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("row {row}: missing {name}")))?
                .parse()
                .map_err(|e| Error::InvalidInput(format!("row {row}: bad {name}: {e}")))
        };
        table.xi_values.push(next("xi")?);
        table.rho_values.push(next("rho")?);
        table.r_values.push(next("R")?);
    }
    Ok(table)
}
