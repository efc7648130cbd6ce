//! Key-value grid configuration files.
//!
//! One `key = value` assignment per line; `#` starts a comment. Unset keys
//! keep their stock-grid values.
//!
//! ```text
//! params = fibonacci, custom(1,2,3,-1), g(3,7)
//! m = -6..8
//! n = -6..8
//! r = -3..5
//! k = 0..6
//! identities = kernel-eq-11, eq-ndpr9xm
//! quarantine = eq-xf5dcmx
//! witness_limit = 20
//! ```

use super::{default_grid, GridSpec, ParamSet, VerifyError};
use std::ops::RangeInclusive;

/// Split on top-level commas, leaving parenthesized argument lists intact.
fn split_list(text: &str) -> Vec<String> {
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                items.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        items.push(current.trim().to_string());
    }
    items
}

/// Parse `a..b` (inclusive) or a single integer.
fn parse_range(text: &str, line: usize) -> Result<RangeInclusive<i64>, VerifyError> {
    let bad = |msg: &str| VerifyError::Syntax {
        line,
        message: format!("{}: '{}'", msg, text),
    };
    if let Some(dots) = text.find("..") {
        let lo: i64 = text[..dots].trim().parse().map_err(|_| bad("bad range start"))?;
        let hi: i64 = text[dots + 2..].trim().parse().map_err(|_| bad("bad range end"))?;
        if lo > hi {
            return Err(bad("range start exceeds end"));
        }
        Ok(lo..=hi)
    } else {
        let v: i64 = text.trim().parse().map_err(|_| bad("bad integer"))?;
        Ok(v..=v)
    }
}

/// Parse a grid config, starting from [`default_grid`] and overriding the
/// keys the file sets.
pub fn parse_grid_config(text: &str) -> Result<GridSpec, VerifyError> {
    let mut spec = default_grid();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(hash) => &raw[..hash],
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        let eq = content.find('=').ok_or(VerifyError::Syntax {
            line,
            message: format!("expected 'key = value', got '{}'", content),
        })?;
        let key = content[..eq].trim();
        let value = content[eq + 1..].trim();
        match key {
            "params" => {
                let sets = split_list(value)
                    .iter()
                    .map(|token| ParamSet::from_preset_token(token))
                    .collect::<Result<Vec<_>, _>>()?;
                spec.param_sets = sets;
            }
            "m" => spec.m_range = parse_range(value, line)?,
            "n" => spec.n_range = parse_range(value, line)?,
            "r" => spec.r_range = parse_range(value, line)?,
            "k" => spec.k_range = parse_range(value, line)?,
            "identities" => spec.identity_filter = Some(split_list(value)),
            "quarantine" => spec.quarantine = split_list(value),
            "witness_limit" => {
                spec.witness_cap = value.parse().map_err(|_| VerifyError::Syntax {
                    line,
                    message: format!("bad witness_limit '{}'", value),
                })?;
            }
            other => {
                return Err(VerifyError::Syntax {
                    line,
                    message: format!("unknown key '{}'", other),
                })
            }
        }
    }
    Ok(spec)
}
