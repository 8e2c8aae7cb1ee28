//! Text formats for maps, systems and weight functions.
//!
//! Every file starts with `snr <n> <r>`. Blank lines and lines starting with
//! `#` are ignored. Map lines are `<string> <P|N>`, system lines are
//! `>= <string>` or `< <string>`, and a weight file has one `tilde` and one
//! `bar` line of rationals listed from the highest symbol down.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use snr_core::{
    NrSystem, PartialMap, Rational, RowRelation, Sign, SnrParams, SnrString, WeightFunction,
};

use crate::error::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

/// Numbered content lines after the header.
type Body<'a> = Vec<(usize, &'a str)>;

/// Splits off and parses the `snr <n> <r>` header.
fn header(text: &str) -> Result<(SnrParams, Body<'_>), CliError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
    let fields: Vec<&str> = first.split_whitespace().collect();
    let [tag, n, r] = fields[..] else {
        return Err(parse_error(line, "expected `snr <n> <r>`"));
    };
    if tag != "snr" {
        return Err(parse_error(line, "expected `snr <n> <r>`"));
    }
    let n: usize = n
        .parse()
        .map_err(|_| parse_error(line, format!("bad n `{n}`")))?;
    let r: usize = r
        .parse()
        .map_err(|_| parse_error(line, format!("bad r `{r}`")))?;
    let params = SnrParams::new(n, r).map_err(|e| parse_error(line, e.to_string()))?;
    Ok((params, lines.collect()))
}

fn parse_string(line: usize, text: &str, params: SnrParams) -> Result<SnrString, CliError> {
    SnrString::parse(text, params).map_err(|e| parse_error(line, e.to_string()))
}

pub fn parse_map(text: &str) -> Result<(SnrParams, PartialMap), CliError> {
    let (params, lines) = header(text)?;
    let mut map = PartialMap::empty(params.element_count());
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [s, sign] = fields[..] else {
            return Err(parse_error(line, "expected `<string> <P|N>`"));
        };
        let w = parse_string(line, s, params)?;
        let sign = match sign {
            "P" => Sign::P,
            "N" => Sign::N,
            other => {
                return Err(parse_error(
                    line,
                    format!("sign must be P or N, found `{other}`"),
                ))
            }
        };
        if map.get(w.index()).is_some_and(|old| old != sign) {
            return Err(parse_error(line, format!("{w} is assigned both signs")));
        }
        map.set(w.index(), sign);
    }
    Ok((params, map))
}

/// Assignments in lexicographic order of their strings.
pub fn write_map(params: SnrParams, map: &PartialMap) -> String {
    let mut lines: Vec<(String, Sign)> = map
        .domain()
        .iter()
        .map(|x| {
            (
                SnrString::from_index(params, x).format(),
                map.get(x).unwrap(),
            )
        })
        .collect();
    lines.sort();
    let mut out = format!("snr {} {}\n", params.n(), params.r());
    for (s, sign) in lines {
        let _ = writeln!(out, "{s} {}", if sign == Sign::P { "P" } else { "N" });
    }
    out
}

pub fn parse_system(text: &str) -> Result<NrSystem, CliError> {
    let (params, lines) = header(text)?;
    let mut system = NrSystem::new(params);
    for (line, body) in lines {
        let (relation, rest) = if let Some(rest) = body.strip_prefix(">=") {
            (RowRelation::Geq0, rest)
        } else if let Some(rest) = body.strip_prefix('<') {
            (RowRelation::Lt0, rest)
        } else {
            return Err(parse_error(line, "expected `>= <string>` or `< <string>`"));
        };
        let w = parse_string(line, rest.trim(), params)?;
        system
            .insert(w, relation)
            .map_err(|e| parse_error(line, e.to_string()))?;
    }
    Ok(system)
}

pub fn write_system(system: &NrSystem) -> String {
    let params = system.params();
    let mut out = format!("snr {} {}\n", params.n(), params.r());
    for (w, relation) in system.sorted_rows() {
        let op = match relation {
            RowRelation::Geq0 => ">=",
            RowRelation::Lt0 => "<",
        };
        let _ = writeln!(out, "{op} {w}");
    }
    out
}

/// Exact value of `a/b`, an integer, or a decimal such as `-2.15`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        return (!d.is_zero()).then(|| Rational::new(n, d));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = (0..frac.len()).fold(BigInt::one(), |acc, _| acc * 10);
    let value = Rational::new(digits, scale);
    Some(if negative { -value } else { value })
}

pub fn parse_weights(text: &str) -> Result<WeightFunction, CliError> {
    let (params, lines) = header(text)?;
    let mut tilde = None;
    let mut bar = None;
    for (line, body) in lines {
        let mut fields = body.split_whitespace();
        let slot = match fields.next() {
            Some("tilde") => &mut tilde,
            Some("bar") => &mut bar,
            _ => return Err(parse_error(line, "expected a `tilde` or `bar` line")),
        };
        if slot.is_some() {
            return Err(parse_error(line, "repeated line"));
        }
        let values = fields
            .map(|f| {
                parse_rational(f).ok_or_else(|| parse_error(line, format!("bad rational `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        *slot = Some(values);
    }
    let tilde = tilde.ok_or_else(|| parse_error(0, "missing `tilde` line"))?;
    WeightFunction::new(params, tilde, bar.unwrap_or_default()).map_err(CliError::Core)
}

pub fn write_weights(f: &WeightFunction) -> String {
    let params = f.params();
    let join = |v: &[Rational]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("snr {} {}\n", params.n(), params.r());
    let _ = writeln!(out, "tilde {}", join(f.tilde_values()));
    let _ = writeln!(out, "bar {}", join(f.bar_values()));
    out
}
