//! The ideal-spec text format and result tables.
//!
//! ```text
//! # one_dim(d=2, c=[3,1])
//! ring x y
//! quot x^3 x*y^2
//! ideal y^2
//! ```
//!
//! `quot` is omitted when `Q = 0`. Everything after `#` on a line is ignored.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::functions::{DefectReport, PresentedIdeal};
use crate::monomial::{MonomialIdeal, RingSpec};

struct Token<'a> {
    text: &'a str,
    /// 1-based character column.
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((i, col + 1)),
            (true, Some((s, c))) => {
                out.push(Token { text: &line[s..i], column: c });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, c)) = start {
        out.push(Token { text: &line[s..], column: c });
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn parse_ideal(ring: &std::sync::Arc<RingSpec>, line: usize, items: &[Token<'_>]) -> Result<MonomialIdeal> {
    let monomials = items
        .iter()
        .map(|t| {
            ring.parse_monomial(t.text).map_err(|e| {
                let column = t.column + t.text[..e.offset].chars().count();
                parse_error(line, column, e.message)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(ring, monomials)
}

/// Parses a spec file. Syntax problems are [`Error::Parse`] with 1-based line and column;
/// a zero or unit ideal is [`Error::Hypothesis`].
pub fn parse_spec(text: &str) -> Result<PresentedIdeal> {
    let mut ring: Option<std::sync::Arc<RingSpec>> = None;
    let mut quot: Option<MonomialIdeal> = None;
    let mut ideal: Option<MonomialIdeal> = None;
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some((head, items)) = toks.split_first() else {
            continue;
        };
        if ideal.is_some() {
            return Err(parse_error(line, head.column, "unexpected line after the ideal line"));
        }
        match head.text {
            "ring" => {
                if ring.is_some() {
                    return Err(parse_error(line, head.column, "duplicate ring line"));
                }
                if items.is_empty() {
                    return Err(parse_error(line, head.column + 4, "ring line needs at least one variable"));
                }
                for (i, t) in items.iter().enumerate() {
                    if items[..i].iter().any(|u| u.text == t.text) {
                        return Err(parse_error(line, t.column, format!("duplicate variable {}", t.text)));
                    }
                }
                let r = RingSpec::new(items.iter().map(|t| t.text)).map_err(|e| {
                    let message = match e {
                        Error::Input(m) => m,
                        other => other.to_string(),
                    };
                    parse_error(line, items[0].column, message)
                })?;
                ring = Some(r);
            }
            "quot" | "ideal" => {
                let Some(r) = &ring else {
                    return Err(parse_error(line, head.column, "expected a ring line first"));
                };
                if items.is_empty() {
                    let msg = format!("empty {} line", head.text);
                    return Err(parse_error(line, head.column + head.text.len(), msg));
                }
                let parsed = parse_ideal(r, line, items)?;
                if head.text == "quot" {
                    if quot.is_some() {
                        return Err(parse_error(line, head.column, "duplicate quot line"));
                    }
                    quot = Some(parsed);
                } else {
                    ideal = Some(parsed);
                }
            }
            other => {
                return Err(parse_error(line, head.column, format!("unknown keyword {other:?}")));
            }
        }
    }
    let Some(ring) = ring else {
        return Err(parse_error(last_line.max(1), 1, "missing ring line"));
    };
    let Some(p) = ideal else {
        return Err(parse_error(last_line.max(1), 1, "missing ideal line"));
    };
    let q = quot.unwrap_or_else(|| MonomialIdeal::zero(&ring));
    PresentedIdeal::new(q, p)
}

pub fn read_spec(path: impl AsRef<Path>) -> Result<PresentedIdeal> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

/// Canonical text: generators by degree, then by descending exponents.
pub fn serialize_spec(x: &PresentedIdeal) -> String {
    let mut out = format!("ring {}\n", x.ring().variables().join(" "));
    if !x.q().is_zero() {
        writeln!(out, "quot {}", x.q().format_gens().join(" ")).unwrap();
    }
    writeln!(out, "ideal {}", x.p().format_gens().join(" ")).unwrap();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub value: Degree,
    pub defect: Option<i64>,
}

/// The emitted form of a [`DefectReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultTable {
    pub function: String,
    pub slope: Option<u64>,
    pub values: Vec<TableRow>,
    pub stable_suffix_length: usize,
}

impl From<&DefectReport> for ResultTable {
    fn from(r: &DefectReport) -> Self {
        ResultTable {
            function: r.function.name().to_string(),
            slope: r.slope,
            values: r.rows.iter().map(|row| TableRow { n: row.n, value: row.value, defect: row.defect }).collect(),
            stable_suffix_length: r.stable_suffix_length,
        }
    }
}

impl ResultTable {
    /// `n,value,defect` with an empty cell for a missing defect.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value,defect\n");
        for r in &self.values {
            let defect = r.defect.map(|d| d.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{}", r.n, r.value, defect).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_one_dim() {
        let x = parse_spec("ring x y\nquot x^3 x*y^2\nideal y^2\n").unwrap();
        assert_eq!(x.q().format_gens(), vec!["x^3", "x*y^2"]);
        assert_eq!(x.p().format_gens(), vec!["y^2"]);
        assert_eq!(x.slope(), Some(2));
    }

    #[test]
    fn minimal_file() {
        let x = parse_spec("ring x\nideal x\n").unwrap();
        assert!(x.q().is_zero());
        assert_eq!(serialize_spec(&x), "ring x\nideal x\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nring x y   # two variables\n  quot x^2\nideal y # done\n";
        let x = parse_spec(text).unwrap();
        assert_eq!(serialize_spec(&x), "ring x y\nquot x^2\nideal y\n");
    }

    #[test]
    fn unknown_variable() {
        let err = parse_spec("ring x y\nideal z\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, column: 7, message: "unknown variable z".into() });
        let err = parse_spec("ring x y\nideal x^2 x*z^3\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, column: 13, message: "unknown variable z".into() });
    }

    #[test]
    fn malformed_input() {
        let cases = [
            ("ring x\nideal x^\n", 2),
            ("ring x\nideal\n", 2),
            ("ideal x\n", 1),
            ("ring x\nquot x^2\n", 2),
            ("ring x x\nideal x\n", 1),
            ("ring x\nideal x\nquot x^2\n", 3),
            ("ring x\nfoo x\n", 2),
            ("ring x y\nideal x**y\n", 2),
        ];
        for (text, line) in cases {
            match parse_spec(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn hypothesis_is_not_a_parse_error() {
        assert!(matches!(parse_spec("ring x\nquot x\nideal x^2\n"), Err(Error::Hypothesis(_))));
        assert!(matches!(parse_spec("ring x\nideal 1\n"), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn canonical_order() {
        let x = parse_spec("ring x y u v\nquot y^7 u^6*v x^7 x^4*y^3 x*u^6 x^3*y^4 y*u^6\nideal u^3 x*y*v\n").unwrap();
        let text = serialize_spec(&x);
        assert_eq!(text, "ring x y u v\nquot x^7 x^4*y^3 x^3*y^4 x*u^6 y^7 y*u^6 u^6*v\nideal x*y*v u^3\n");
        assert_eq!(serialize_spec(&parse_spec(&text).unwrap()), text);
    }

    #[test]
    fn table_formats() {
        let table = ResultTable {
            function: "sdeg".into(),
            slope: None,
            values: vec![
                TableRow { n: 1, value: Degree::NegInfinity, defect: None },
                TableRow { n: 2, value: Degree::Finite(4), defect: None },
            ],
            stable_suffix_length: 1,
        };
        assert_eq!(table.to_csv(), "n,value,defect\n1,-inf,\n2,4,\n");
        let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "function": "sdeg",
                "slope": null,
                "values": [{"n": 1, "value": "-inf", "defect": null}, {"n": 2, "value": 4, "defect": null}],
                "stable_suffix_length": 1
            })
        );
    }
}
