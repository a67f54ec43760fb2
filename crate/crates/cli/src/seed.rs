use std::str::FromStr;

use bertini_core::{Scalar, SeedPoly};
use num_bigint::BigInt;

use crate::error::CliError;

fn parse_scalar(token: &str) -> Result<Scalar, CliError> {
    let bad = || CliError::InvalidInput(format!("malformed coefficient {token:?}"));
    let token = token.trim();
    match token.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(CliError::InvalidInput(format!(
                    "zero denominator in {token:?}"
                )));
            }
            Ok(Scalar::new(n, d))
        }
        None => BigInt::from_str(token)
            .map(Scalar::from_integer)
            .map_err(|_| bad()),
    }
}

/// Parses ascending coefficients `"c0,c1,…,c8"` and validates the seed.
pub fn parse_seed(text: &str) -> Result<SeedPoly, CliError> {
    let coeffs = text
        .split(',')
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    SeedPoly::new(coeffs).map_err(CliError::Seed)
}
