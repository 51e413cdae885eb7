//! Line-delimited JSON resource files.
//!
//! One resource per line:
//! `{"codomain":2,"domain":2,"name":"PB4","support":[{"map":[1,0],"prob":"1/3"},{"map":[0,0],"prob":"2/3"}]}`.
//! Weights are exact fractions written as strings. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::function::FiniteFunction;
use crate::{Distribution, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawResource {
    codomain: usize,
    domain: usize,
    name: String,
    support: Vec<RawEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    map: Vec<usize>,
    prob: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("invalid syntax: {0}")]
    Syntax(String),

    #[error("malformed weight {0:?}")]
    MalformedWeight(String),

    #[error("weights sum to {0}, expected exactly 1")]
    NonNormalized(String),

    #[error("duplicate resource name")]
    DuplicateName,

    #[error("map entry {value} at position {position} is outside codomain of size {codomain}")]
    TableOutOfRange {
        position: usize,
        value: usize,
        codomain: usize,
    },

    #[error("{0}")]
    Invalid(Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}{}: {kind}", .name.as_ref().map(|n| format!(" (resource {n})")).unwrap_or_default())]
pub struct ParseError {
    pub line: usize,
    pub name: Option<String>,
    pub kind: ParseErrorKind,
}

fn parse_weight(text: &str) -> Result<Rational, ParseErrorKind> {
    let malformed = || ParseErrorKind::MalformedWeight(text.to_string());
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed != text {
        return Err(malformed());
    }
    Rational::from_str(trimmed).map_err(|_| malformed())
}

fn build(raw: RawResource) -> Result<Distribution, ParseErrorKind> {
    let mut entries = Vec::with_capacity(raw.support.len());
    for entry in raw.support {
        let weight = parse_weight(&entry.prob)?;
        if entry.map.len() != raw.domain {
            return Err(ParseErrorKind::Invalid(Error::SizeMismatch(format!(
                "map {:?} has {} entries, domain is {}",
                entry.map,
                entry.map.len(),
                raw.domain
            ))));
        }
        let f = FiniteFunction::new(raw.codomain, entry.map).map_err(classify)?;
        entries.push((f, weight));
    }
    Distribution::new(raw.domain, raw.codomain, entries).map_err(classify)
}

fn classify(e: Error) -> ParseErrorKind {
    match e {
        Error::TableOutOfRange {
            position,
            value,
            codomain,
        } => ParseErrorKind::TableOutOfRange {
            position,
            value,
            codomain,
        },
        Error::NonNormalized(total) => ParseErrorKind::NonNormalized(total),
        other => ParseErrorKind::Invalid(other),
    }
}

/// Parses a resource file, keeping file order.
pub fn parse_resource_file(text: &str) -> Result<Vec<(String, Distribution)>, ParseError> {
    let mut out = Vec::new();
    let mut names = BTreeSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let raw: RawResource = serde_json::from_str(trimmed).map_err(|e| ParseError {
            line: line_no,
            name: None,
            kind: ParseErrorKind::Syntax(e.to_string()),
        })?;
        let name = raw.name.clone();
        let fail = |kind| ParseError {
            line: line_no,
            name: Some(name.clone()),
            kind,
        };
        if !names.insert(name.clone()) {
            return Err(fail(ParseErrorKind::DuplicateName));
        }
        let dist = build(raw).map_err(fail)?;
        out.push((name, dist));
    }
    Ok(out)
}

/// One line per resource, support in canonical order.
pub fn serialize_resource_file(resources: &[(String, Distribution)]) -> String {
    let mut out = String::new();
    for (name, dist) in resources {
        let raw = RawResource {
            codomain: dist.codomain_size(),
            domain: dist.domain_size(),
            name: name.clone(),
            support: dist
                .support()
                .map(|(f, w)| RawEntry {
                    map: f.table().to_vec(),
                    prob: w.to_string(),
                })
                .collect(),
        };
        out.push_str(&serde_json::to_string(&raw).expect("resource serializes"));
        out.push('\n');
    }
    out
}
