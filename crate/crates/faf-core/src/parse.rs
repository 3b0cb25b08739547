//! Reading and writing frameworks.
//!
//! Two formats are supported. The `fapx` text format is line-oriented and
//! whitespace-insensitive, with `#` comments:
//!
//! ```text
//! arg(A,0.8).
//! att(A,B,0.8).
//! ```
//!
//! The structured format is a JSON object with `"arguments"` and `"attacks"`
//! arrays carrying the same fields, degrees as decimal strings. In both,
//! names match `[A-Za-z0-9_]+` and degrees are decimals in `(0, 1]` with at
//! most four fractional digits. Attacks may refer to arguments declared
//! later in the file, but every endpoint must be declared somewhere.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::degree::Degree;
use crate::framework::{Faf, FafError};
use crate::fuzzyset::FuzzySet;

/// Input format selector for [`parse_faf`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FafFormat {
    Fapx,
    Structured,
}

/// A parse failure, with a 1-based source position when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn at(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError { line, col, msg: msg.into() }
    }

    fn plain(msg: impl Into<String>) -> ParseError {
        ParseError { line: 0, col: 0, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
        } else {
            f.write_str(&self.msg)
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses a framework from text in the given format.
pub fn parse_faf(text: &str, format: FafFormat) -> Result<Faf, ParseError> {
    match format {
        FafFormat::Fapx => parse_fapx(text),
        FafFormat::Structured => parse_structured(text),
    }
}

/// One argument row of the structured format.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ArgEntry {
    pub id: String,
    pub degree: String,
}

/// One attack row of the structured format.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AttackEntry {
    pub from: String,
    pub to: String,
    pub degree: String,
}

/// The structured format's top-level object.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct StructuredFaf {
    pub arguments: Vec<ArgEntry>,
    #[serde(default)]
    pub attacks: Vec<AttackEntry>,
}

impl StructuredFaf {
    pub fn of(faf: &Faf) -> StructuredFaf {
        StructuredFaf {
            arguments: faf
                .args()
                .map(|(id, d)| ArgEntry { id: id.to_string(), degree: d.to_string() })
                .collect(),
            attacks: faf
                .attacks()
                .iter()
                .map(|a| AttackEntry {
                    from: faf.arg_id(a.from).to_string(),
                    to: faf.arg_id(a.to).to_string(),
                    degree: a.degree.to_string(),
                })
                .collect(),
        }
    }
}

/// Serializes a framework as fapx text, arguments first, one statement per
/// line. Parsing the output yields the framework back.
pub fn serialize_fapx(faf: &Faf) -> String {
    let mut out = String::new();
    for (id, d) in faf.args() {
        out.push_str(&format!("arg({id},{d}).\n"));
    }
    for a in faf.attacks() {
        out.push_str(&format!(
            "att({},{},{}).\n",
            faf.arg_id(a.from),
            faf.arg_id(a.to),
            a.degree
        ));
    }
    out
}

/// Serializes a framework as the structured JSON format.
pub fn serialize_structured(faf: &Faf) -> String {
    serde_json::to_string_pretty(&StructuredFaf::of(faf)).expect("framework serializes")
}

/// Parses a fuzzy set from a JSON object mapping argument id to degree
/// string, e.g. `{"A":"0.8","B":"0.2"}`. Zero degrees are accepted and
/// dropped; `p/q` forms are accepted for degrees off the decimal grid.
pub fn parse_fuzzy_set(text: &str) -> Result<FuzzySet, ParseError> {
    let raw: std::collections::BTreeMap<String, String> = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), e.column(), e.to_string()))?;
    let mut set = FuzzySet::new();
    for (id, text) in raw {
        check_name(&id).map_err(ParseError::plain)?;
        let d = Degree::from_str(&text)
            .map_err(|e| ParseError::plain(format!("argument `{id}`: {e}")))?;
        set.set(id, d);
    }
    Ok(set)
}

fn check_name(name: &str) -> Result<(), String> {
    if name.is_empty() || !name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
        Err(format!("invalid name `{name}`: expected [A-Za-z0-9_]+"))
    } else {
        Ok(())
    }
}

/// Strict degree syntax shared by both framework formats: a plain decimal
/// with at most four fractional digits.
fn parse_degree_strict(tok: &str) -> Result<Degree, String> {
    if tok.contains('/') {
        return Err(format!("`{tok}` is not a decimal degree"));
    }
    if let Some((_, frac)) = tok.split_once('.') {
        if frac.len() > 4 {
            return Err(format!("degree `{tok}` has more than 4 fractional digits"));
        }
    }
    Degree::from_str(tok).map_err(|e| e.to_string())
}

fn parse_structured(text: &str) -> Result<Faf, ParseError> {
    let doc: StructuredFaf = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), e.column(), e.to_string()))?;
    let mut args = Vec::new();
    for a in doc.arguments {
        check_name(&a.id).map_err(ParseError::plain)?;
        let d = parse_degree_strict(&a.degree)
            .map_err(|e| ParseError::plain(format!("argument `{}`: {e}", a.id)))?;
        args.push((a.id, d));
    }
    let mut attacks = Vec::new();
    for a in doc.attacks {
        check_name(&a.from).map_err(ParseError::plain)?;
        check_name(&a.to).map_err(ParseError::plain)?;
        let d = parse_degree_strict(&a.degree)
            .map_err(|e| ParseError::plain(format!("attack `{}`->`{}`: {e}", a.from, a.to)))?;
        attacks.push((a.from, a.to, d));
    }
    Faf::new(args, attacks).map_err(|e| ParseError::plain(e.to_string()))
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `#` comments (which run to end of line).
    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.line, self.col, msg)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_trivia();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        self.skip_trivia();
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            return Err(self.err("expected a name ([A-Za-z0-9_]+)"));
        }
        Ok(out)
    }

    fn degree(&mut self) -> Result<Degree, ParseError> {
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        let mut tok = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == '.' {
                // a trailing `.` is the statement terminator, not part of
                // the number, unless a digit follows it
                if c == '.' {
                    let mut ahead = self.chars.clone();
                    ahead.next();
                    match ahead.peek() {
                        Some(d) if d.is_ascii_digit() && !tok.contains('.') => {}
                        _ => break,
                    }
                }
                tok.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if tok.is_empty() {
            return Err(self.err("expected a degree"));
        }
        let d = parse_degree_strict(&tok).map_err(|e| ParseError::at(line, col, e))?;
        if d.is_zero() {
            return Err(ParseError::at(line, col, format!("degree `{tok}` is outside (0, 1]")));
        }
        Ok(d)
    }
}

fn parse_fapx(text: &str) -> Result<Faf, ParseError> {
    let mut sc = Scanner::new(text);
    let mut args: Vec<(String, Degree)> = Vec::new();
    let mut attacks: Vec<(String, String, Degree)> = Vec::new();
    // statement positions, for errors only detectable once everything is read
    let mut arg_pos: Vec<(usize, usize)> = Vec::new();
    let mut att_pos: Vec<(usize, usize)> = Vec::new();

    loop {
        sc.skip_trivia();
        if sc.peek().is_none() {
            break;
        }
        let (line, col) = (sc.line, sc.col);
        let keyword = sc.name()?;
        match keyword.as_str() {
            "arg" => {
                sc.expect('(')?;
                let id = sc.name()?;
                sc.expect(',')?;
                let d = sc.degree()?;
                sc.expect(')')?;
                sc.expect('.')?;
                if args.iter().any(|(a, _)| *a == id) {
                    return Err(ParseError::at(line, col, format!("duplicate argument `{id}`")));
                }
                args.push((id, d));
                arg_pos.push((line, col));
            }
            "att" => {
                sc.expect('(')?;
                let from = sc.name()?;
                sc.expect(',')?;
                let to = sc.name()?;
                sc.expect(',')?;
                let d = sc.degree()?;
                sc.expect(')')?;
                sc.expect('.')?;
                attacks.push((from, to, d));
                att_pos.push((line, col));
            }
            other => {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("expected `arg` or `att`, found `{other}`"),
                ));
            }
        }
    }

    for (i, (from, to, _)) in attacks.iter().enumerate() {
        for end in [from, to] {
            if !args.iter().any(|(a, _)| a == end) {
                let (line, col) = att_pos[i];
                return Err(ParseError::at(
                    line,
                    col,
                    format!("attack endpoint `{end}` is not a declared argument"),
                ));
            }
        }
        if attacks[..i].iter().any(|(f, t, _)| f == from && t == to) {
            let (line, col) = att_pos[i];
            return Err(ParseError::at(line, col, format!("duplicate attack `{from}` -> `{to}`")));
        }
    }

    // the scans above reported anything position-worthy already
    Ok(Faf::new(args, attacks)?)
}

impl From<FafError> for ParseError {
    fn from(e: FafError) -> ParseError {
        ParseError::plain(e.to_string())
    }
}
