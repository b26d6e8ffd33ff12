//! Element expressions: sums of `INT '*'? LABEL` terms or raw coordinate
//! lists `[c1, …, ck]`, e.g. `e+g`, `a*e - a*g`, `2*x^2`, `[0, 3]`.

use rickart_core::{FiniteRing, RingElement};

use crate::error::{CliError, Result};

/// Splits on `+`/`-` outside brackets, keeping each term's sign.
fn terms(text: &str) -> Result<Vec<(bool, usize, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, c) in text.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(CliError::parse(1, i + 1, "unbalanced `]`"));
                }
            }
            '+' | '-' if depth == 0 => {
                let term = &text[start..i];
                if term.trim().is_empty() {
                    if !out.is_empty() || negative {
                        return Err(CliError::parse(1, i + 1, "empty term"));
                    }
                } else {
                    out.push((negative, start, term));
                }
                negative = c == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(CliError::parse(1, text.len() + 1, "unbalanced `[`"));
    }
    let term = &text[start..];
    if term.trim().is_empty() {
        return Err(CliError::parse(1, text.len() + 1, "expected a term"));
    }
    out.push((negative, start, term));
    Ok(out)
}

fn raw_coords(ring: &FiniteRing, body: &str, col: usize) -> Result<Vec<u64>> {
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| CliError::parse(1, col, "malformed coordinate list"))?;
    let values: Vec<i128> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|v| v.trim().parse::<i128>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| CliError::parse(1, col, "coordinates must be integers"))?
    };
    if values.len() != ring.rank() {
        return Err(CliError::parse(
            1,
            col,
            format!("expected {} coordinates, found {}", ring.rank(), values.len()),
        ));
    }
    Ok(values
        .iter()
        .zip(ring.orders())
        .map(|(&v, &d)| v.rem_euclid(d as i128) as u64)
        .collect())
}

/// A basis label or a named symbol.
fn resolve(ring: &FiniteRing, name: &str) -> Result<Vec<u64>> {
    if let Some(i) = ring.labels().iter().position(|l| l == name) {
        return Ok(ring.basis_coords(i));
    }
    match ring.symbol(name) {
        Some(sym) => match &sym.value {
            Some(v) => Ok(v.clone()),
            None if name == "1" => Err(CliError::IllegalIntegerCoefficient(format!(
                "bare integers mean multiples of 1, and {} has no unity; use XGR(..) or U(..) \
                 for a ring with an integer-scalar block",
                ring.provenance()
            ))),
            None => Err(CliError::IllegalIntegerCoefficient(format!(
                "`{name}` stands for 1*{name}, but {} has no unity to supply the integer \
                 coefficient; build the ring with XGR(..) or U(..) to work with it",
                ring.provenance()
            ))),
        },
        None => Err(CliError::UnknownLabel {
            label: name.to_string(),
            ring: ring.provenance().to_string(),
        }),
    }
}

fn term_value(ring: &FiniteRing, term: &str, col: usize) -> Result<Vec<u64>> {
    if term.starts_with('[') {
        return raw_coords(ring, term, col);
    }
    if ring.labels().iter().any(|l| l == term) || ring.symbol(term).is_some() {
        return resolve(ring, term);
    }
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return resolve(ring, term);
    }
    let coefficient: u128 = term[..digits]
        .parse()
        .map_err(|_| CliError::parse(1, col, "coefficient out of range"))?;
    let rest = term[digits..].trim_start();
    let rest = rest.strip_prefix('*').map(str::trim_start).unwrap_or(rest);
    let base = if rest.is_empty() {
        resolve(ring, "1")?
    } else if rest.starts_with('[') {
        raw_coords(ring, rest, col + (term.len() - rest.len()))?
    } else {
        resolve(ring, rest)?
    };
    let k = (coefficient % ring.additive_exponent().max(1) as u128) as i64;
    Ok(ring.group().scale(k, &base))
}

pub fn parse_element(ring: &FiniteRing, text: &str) -> Result<RingElement> {
    let mut acc = ring.group().zero();
    for (negative, start, raw) in terms(text)? {
        let lead = raw.len() - raw.trim_start().len();
        let col = start + lead + 1;
        let value = term_value(ring, raw.trim(), col)?;
        acc = if negative {
            ring.group().sub(&acc, &value)
        } else {
            ring.group().add(&acc, &value)
        };
    }
    Ok(ring.element(acc)?)
}
