//! Text format for labelings.
//!
//! ```text
//! group=2x4;kind=path
//! 00-12-10-01-02-03-11-13
//! ```
//!
//! Labels are joined by `-`. Each label is either a residue tuple such as
//! `(1,2)` or, when every factor is at most 10, the compact digit string
//! `12`. Single-factor groups also accept a bare integer (`15` in `Z_22`).
//! Emission uses the compact form whenever it is legal.
//!
//! Data files may hold several records; a header may carry a `name=` key
//! and lines starting with `#` are comments.

use crate::error::ParseError;
use crate::group::{GroupElement, GroupSpec};
use crate::labeling::{GraphKind, GraphLabeling};

pub fn format_element(g: &GroupSpec, a: &GroupElement) -> String {
    if g.compact_notation_allowed() {
        a.residues().iter().map(|r| r.to_string()).collect()
    } else {
        let parts: Vec<String> = a.residues().iter().map(|r| r.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

pub fn format_labels(g: &GroupSpec, elems: &[GroupElement]) -> String {
    elems
        .iter()
        .map(|a| format_element(g, a))
        .collect::<Vec<_>>()
        .join("-")
}

/// Header line plus label line.
pub fn format_labeling(l: &GraphLabeling) -> String {
    format!(
        "group={};kind={}\n{}\n",
        l.group(),
        l.kind(),
        format_labels(l.group(), l.labels())
    )
}

pub fn parse_element(g: &GroupSpec, token: &str) -> Result<GroupElement, ParseError> {
    parse_element_at(g, token, 1, 1)
}

fn parse_element_at(
    g: &GroupSpec,
    token: &str,
    line: usize,
    column: usize,
) -> Result<GroupElement, ParseError> {
    let err = |offset: usize, msg: String| ParseError::new(line, column + offset, msg);
    if token.is_empty() {
        return Err(err(0, "empty label".into()));
    }
    let residues: Vec<usize> = if let Some(inner) = token.strip_prefix('(') {
        let Some(inner) = inner.strip_suffix(')') else {
            return Err(err(token.len() - 1, "unterminated tuple label".into()));
        };
        let mut out = Vec::new();
        let mut offset = 1;
        for part in inner.split(',') {
            let r = parse_digits(part)
                .ok_or_else(|| err(offset, format!("invalid residue {part:?} in tuple label")))?;
            out.push(r);
            offset += part.len() + 1;
        }
        out
    } else if g.rank() == 1 && token.bytes().all(|b| b.is_ascii_digit()) {
        vec![parse_digits(token).ok_or_else(|| err(0, "residue too large".into()))?]
    } else {
        if !g.compact_notation_allowed() {
            return Err(err(
                0,
                format!("compact label {token:?} is ambiguous for group {g}; use tuple form"),
            ));
        }
        if let Some((pos, c)) = token.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(err(pos, format!("unexpected character {c:?} in label")));
        }
        token.bytes().map(|b| (b - b'0') as usize).collect()
    };
    if residues.len() != g.rank() {
        return Err(err(
            0,
            format!(
                "label {token:?} has {} residues, group {g} needs {}",
                residues.len(),
                g.rank()
            ),
        ));
    }
    g.element_exact(&residues)
        .map_err(|e| err(0, format!("label {token:?}: {e}")))
}

fn parse_digits(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a `-`-joined label line.
pub fn parse_labels(
    g: &GroupSpec,
    kind: GraphKind,
    text: &str,
) -> Result<GraphLabeling, ParseError> {
    parse_labels_at(g, kind, text, 1)
}

fn parse_labels_at(
    g: &GroupSpec,
    kind: GraphKind,
    text: &str,
    line: usize,
) -> Result<GraphLabeling, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(ParseError::new(line, 1, "no labels"));
    }
    let mut labels = Vec::new();
    let mut column = lead + 1;
    for token in body.split('-') {
        labels.push(parse_element_at(g, token, line, column)?);
        column += token.len() + 1;
    }
    GraphLabeling::new(g.clone(), kind, labels)
        .map_err(|e| ParseError::new(line, lead + 1, e.to_string()))
}

pub fn parse_kind(s: &str) -> Option<GraphKind> {
    match s {
        "path" => Some(GraphKind::Path),
        "cycle" => Some(GraphKind::Cycle),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Header {
    pub name: Option<String>,
    pub group: GroupSpec,
    pub kind: GraphKind,
}

fn parse_header(text: &str, line: usize) -> Result<Header, ParseError> {
    let mut name = None;
    let mut group = None;
    let mut kind = None;
    let mut column = 1;
    for field in text.trim_end().split(';') {
        let Some((key, value)) = field.split_once('=') else {
            return Err(ParseError::new(
                line,
                column,
                format!("expected key=value, got {field:?}"),
            ));
        };
        let vcol = column + key.len() + 1;
        match key {
            "name" => name = Some(value.to_string()),
            "group" => {
                let g: GroupSpec = value.parse().map_err(|e: ParseError| {
                    ParseError::new(line, vcol + e.column - 1, e.message)
                })?;
                group = Some(g);
            }
            "kind" => {
                kind = Some(parse_kind(value).ok_or_else(|| {
                    ParseError::new(line, vcol, format!("unknown kind {value:?}"))
                })?);
            }
            other => {
                return Err(ParseError::new(
                    line,
                    column,
                    format!("unknown header key {other:?}"),
                ))
            }
        }
        column += field.len() + 1;
    }
    Ok(Header {
        name,
        group: group.ok_or_else(|| ParseError::new(line, 1, "header lacks group="))?,
        kind: kind.ok_or_else(|| ParseError::new(line, 1, "header lacks kind="))?,
    })
}

/// A labeling together with its header name, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub name: Option<String>,
    pub labeling: GraphLabeling,
}

/// Parses every header/labels pair in `text`.
pub fn parse_records(text: &str) -> Result<Vec<Record>, ParseError> {
    let mut records = Vec::new();
    let mut pending: Option<Header> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match pending.take() {
            None => pending = Some(parse_header(trimmed, line)?),
            Some(h) => {
                let labeling = parse_labels_at(&h.group, h.kind, raw, line)?;
                records.push(Record {
                    name: h.name,
                    labeling,
                });
            }
        }
    }
    if pending.is_some() {
        let last = text.lines().count().max(1);
        return Err(ParseError::new(last, 1, "header without a label line"));
    }
    Ok(records)
}

/// Parses a document holding exactly one labeling.
pub fn parse_labeling(text: &str) -> Result<GraphLabeling, ParseError> {
    let mut records = parse_records(text)?;
    match records.len() {
        1 => Ok(records.remove(0).labeling),
        0 => Err(ParseError::new(1, 1, "no labeling found")),
        n => Err(ParseError::new(
            1,
            1,
            format!("expected one labeling, found {n}"),
        )),
    }
}
