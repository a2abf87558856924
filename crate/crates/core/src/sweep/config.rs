//! Sectioned key-value configuration documents.
//!
//! ```text
//! # comment
//! [base]
//! b1 = 2
//! T = 0.5
//! [sweep]
//! vary = Kz
//! from = 0
//! to = 10
//! steps = 200
//! quantities = s_ab, s_ba
//! output = out/fig
//! emit_svg = true
//! [series]
//! label = cold
//! T = 0.1
//! ```

use std::fmt::Write as _;

use super::{Param, Quantity, Series, SweepConfig, DEFAULT_STEPS};
use crate::error::{Error, Result};
use crate::model::ModelParams;

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Base,
    Sweep,
    Series,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, key: &str, value: &str) -> Result<f64> {
    let bad = || {
        parse_err(
            line,
            format!("`{key}` expects a decimal number, got `{value}`"),
        )
    };
    let ok = !value.is_empty()
        && value
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    if !ok {
        return Err(bad());
    }
    value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(bad)
}

fn parse_bool(line: usize, key: &str, value: &str) -> Result<bool> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(parse_err(
            line,
            format!("`{key}` expects true or false, got `{value}`"),
        )),
    }
}

fn param_key(key: &str) -> Option<Param> {
    key.parse().ok()
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let mut section = Section::None;
    let mut seen_base = false;
    let mut seen_sweep = false;
    let mut base = ModelParams::default();
    let mut temperature = None;
    let mut vary = None;
    let mut from = None;
    let mut to = None;
    let mut steps = None;
    let mut quantities = None;
    let mut output = None;
    let mut emit_svg = None;
    let mut series: Vec<Series> = Vec::new();
    let mut keys_in_section: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| parse_err(line, format!("malformed section header `{content}`")))?
                .trim();
            section = match name {
                "base" if !seen_base => Section::Base,
                "sweep" if !seen_sweep => Section::Sweep,
                "series" => {
                    series.push(Series::default());
                    Section::Series
                }
                "base" | "sweep" => {
                    return Err(parse_err(line, format!("section [{name}] repeated")))
                }
                _ => return Err(parse_err(line, format!("unknown section [{name}]"))),
            };
            seen_base |= section == Section::Base;
            seen_sweep |= section == Section::Sweep;
            keys_in_section.clear();
            continue;
        }

        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| parse_err(line, format!("expected `key = value`, got `{content}`")))?;
        if key.is_empty() {
            return Err(parse_err(line, "missing key"));
        }
        if keys_in_section.iter().any(|k| k == key) {
            return Err(parse_err(line, format!("key `{key}` repeated in section")));
        }
        keys_in_section.push(key.to_string());

        match section {
            Section::None => {
                return Err(parse_err(line, format!("key `{key}` outside any section")))
            }
            Section::Base => {
                let p = param_key(key)
                    .ok_or_else(|| parse_err(line, format!("unknown key `{key}` in [base]")))?;
                let v = parse_number(line, key, value)?;
                p.apply(v, &mut base, &mut temperature);
            }
            Section::Series => {
                let current = series.last_mut().expect("series section pushes an entry");
                if key == "label" {
                    current.label = Some(value.to_string());
                } else {
                    let p = param_key(key).ok_or_else(|| {
                        parse_err(line, format!("unknown key `{key}` in [series]"))
                    })?;
                    current.overrides.push((p, parse_number(line, key, value)?));
                }
            }
            Section::Sweep => match key {
                "vary" => {
                    vary = Some(value.parse::<Param>().map_err(|m| parse_err(line, m))?);
                }
                "from" => from = Some(parse_number(line, key, value)?),
                "to" => to = Some(parse_number(line, key, value)?),
                "steps" => {
                    let n = value.parse::<usize>().map_err(|_| {
                        parse_err(
                            line,
                            format!("`steps` expects a non-negative integer, got `{value}`"),
                        )
                    })?;
                    steps = Some(n);
                }
                "quantities" => {
                    let list = if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|q| q.trim().parse::<Quantity>().map_err(|m| parse_err(line, m)))
                            .collect::<Result<Vec<_>>>()?
                    };
                    quantities = Some(list);
                }
                "output" => output = Some(value.to_string()),
                "emit_svg" => emit_svg = Some(parse_bool(line, key, value)?),
                _ => return Err(parse_err(line, format!("unknown key `{key}` in [sweep]"))),
            },
        }
    }

    let missing = |what: &str| Error::Validation(format!("[sweep] is missing `{what}`"));
    if !seen_sweep {
        return Err(Error::Validation("document has no [sweep] section".into()));
    }
    let cfg = SweepConfig {
        base,
        temperature,
        vary: vary.ok_or_else(|| missing("vary"))?,
        from: from.ok_or_else(|| missing("from"))?,
        to: to.ok_or_else(|| missing("to"))?,
        steps: steps.unwrap_or(DEFAULT_STEPS),
        series,
        quantities: quantities.unwrap_or_else(|| Quantity::ALL.to_vec()),
        output,
        emit_svg: emit_svg.unwrap_or(false),
    };
    cfg.validate()?;
    Ok(cfg)
}

impl SweepConfig {
    /// Renders a document that [`parse_config`] maps back to `self`.
    pub fn to_document(&self) -> String {
        let mut out = String::from("[base]\n");
        for p in Param::ALL {
            if let Some(v) = p.read(&self.base, self.temperature) {
                let _ = writeln!(out, "{} = {:?}", p.name(), v);
            }
        }
        out.push_str("\n[sweep]\n");
        let _ = writeln!(out, "vary = {}", self.vary);
        let _ = writeln!(out, "from = {:?}", self.from);
        let _ = writeln!(out, "to = {:?}", self.to);
        let _ = writeln!(out, "steps = {}", self.steps);
        let names: Vec<&str> = self.quantities.iter().map(|q| q.name()).collect();
        let _ = writeln!(out, "quantities = {}", names.join(", "));
        if let Some(o) = &self.output {
            let _ = writeln!(out, "output = {o}");
        }
        let _ = writeln!(out, "emit_svg = {}", self.emit_svg);
        for s in &self.series {
            out.push_str("\n[series]\n");
            if let Some(l) = &s.label {
                let _ = writeln!(out, "label = {l}");
            }
            for (p, v) in &s.overrides {
                let _ = writeln!(out, "{} = {:?}", p.name(), v);
            }
        }
        out
    }
}
