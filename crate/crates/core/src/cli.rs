//! Command-line front end.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict or domain failure, 2 for usage and parse errors. With
//! `--format json` each invocation prints one JSON document on stdout.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::construct::{construct, construct_word, is_exceptional, EXCEPTIONAL_LENGTHS};
use crate::enumerate::{
    count_circular, enumerate_circular, growth_report, minimal_square_codewords, uniqueness_lengths, Dedup,
    MAX_ENUMERATION_LENGTH,
};
use crate::k33::{
    codeword_to_walk, satisfies_sufficient_condition, simple_cycles, walk_label_forbidden_factor, walk_to_codeword,
    ClosedWalk, WalkLabel,
};
use crate::pansiot::{decode_linear, encode_circular, encode_linear, CircularCodeword, LinearCodeword};
use crate::words::{strip_parens, CircularWord, Letter, LetterMap, LinearWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Lengths with exactly one square-free circular word up to isomorphism.
pub const UNIQUENESS_LIST: [usize; 12] = [1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sqfree", version, about = "Square-free circular words over {a, b, c}")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a square-free circular word of the given length
    Construct {
        length: usize,
        /// Also print the binary codeword
        #[arg(long)]
        codeword: bool,
    },
    /// Check a word, circular word "(...)" or codeword for squares
    Verify {
        input: String,
        /// Read a bare string as circular
        #[arg(long)]
        circular: bool,
    },
    /// Encode a ternary word as its binary codeword
    Encode {
        input: String,
        #[arg(long)]
        circular: bool,
    },
    /// Decode a binary codeword
    Decode {
        input: String,
        /// First two letters of a linear decoding, or the images of a and b
        /// for a circular one
        #[arg(long, default_value = "ab")]
        seed: String,
    },
    /// List or count square-free circular words of a length
    Enumerate {
        length: usize,
        /// Count up to isomorphism instead of up to rotation
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        count_only: bool,
        /// List at most this many words
        #[arg(long)]
        max: Option<usize>,
    },
    /// Walks in the jump graph
    Walks {
        #[command(subcommand)]
        action: WalkAction,
    },
    /// Recompute the known tables by brute force and compare
    Selftest {
        /// Largest length for the exhaustive enumeration checks
        #[arg(long, default_value_t = 30)]
        max_length: usize,
        /// Largest length for the construction checks
        #[arg(long, default_value_t = 500)]
        construct_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WalkAction {
    /// Report whether a label is closed, and its weight
    Check { label: String },
    /// Codeword of a closed walk
    ToCodeword { label: String },
    /// Walk label of a circular codeword
    FromCodeword { codeword: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    NotRepresentable,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The result of one command, before rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    pub fields: Vec<(&'static str, Value)>,
    pub checks: Vec<Check>,
    pub message: Option<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Ok,
            exit_code: EXIT_OK,
            fields: vec![],
            checks: vec![],
            message: None,
        }
    }

    fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    fn negative(mut self) -> Self {
        self.exit_code = EXIT_NEGATIVE;
        self
    }

    fn fail(mut self, status: Status, code: i32, message: impl Into<String>) -> Self {
        self.status = status;
        self.exit_code = code;
        self.message = Some(message.into());
        self
    }

    fn usage(command: &str, message: impl Into<String>) -> Self {
        Report::new(command).fail(Status::Error, EXIT_USAGE, message)
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let payload: Map<String, Value> = self.fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let mut doc = json!({
            "command": self.command,
            "status": self.status,
            "exit_code": self.exit_code,
            "payload": payload,
        });
        if !self.checks.is_empty() {
            doc["checks"] = json!(self.checks);
        }
        if let Some(m) = &self.message {
            doc["message"] = json!(m);
        }
        doc
    }

    fn render_text(&self, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> std::io::Result<()> {
        for (k, v) in &self.fields {
            writeln!(out, "{k}: {}", text_value(v))?;
        }
        for c in &self.checks {
            let tag = match (c.passed, color) {
                (true, true) => "\x1b[32mPASS\x1b[0m",
                (false, true) => "\x1b[31mFAIL\x1b[0m",
                (true, false) => "PASS",
                (false, false) => "FAIL",
            };
            writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
        }
        if let Some(m) = &self.message {
            let label = match self.status {
                Status::NotRepresentable => "not representable",
                _ => "error",
            };
            writeln!(err, "{label}: {m}")?;
        }
        Ok(())
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn is_binary(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c == '0' || c == '1')
}

// Splits off optional parentheses; true when they were present.
fn split_circular(s: &str) -> Result<(&str, bool), String> {
    match strip_parens(s).map_err(|e| e.to_string())? {
        Some(inner) => Ok((inner, true)),
        None => Ok((s, false)),
    }
}

fn square_fields(mut r: Report, square: Option<crate::words::Square>) -> Report {
    r = r.field("square_free", square.is_none());
    if let Some(sq) = square {
        r = r
            .field("square_position", sq.position())
            .field("square_period", sq.period)
            .negative();
    }
    r
}

pub fn cmd_construct(length: usize, with_codeword: bool) -> Report {
    let r = Report::new("construct").field("length", length);
    if length == 0 {
        return Report::usage("construct", "length must be at least 1");
    }
    match construct(length) {
        Ok(c) => {
            let r = r.field("word", c.word.to_string());
            match c.codeword {
                Some(code) if with_codeword => r.field("codeword", code.to_string()),
                _ => r,
            }
        }
        Err(crate::construct::ConstructError::NotRepresentable(_)) => r.fail(
            Status::NotRepresentable,
            EXIT_NEGATIVE,
            format!("no square-free circular word of length {length} exists"),
        ),
        Err(e) => r.fail(Status::Error, EXIT_NEGATIVE, e.to_string()),
    }
}

pub fn cmd_verify(input: &str, circular: bool) -> Report {
    const CMD: &str = "verify";
    let (body, parens) = match split_circular(input) {
        Ok(x) => x,
        Err(e) => return Report::usage(CMD, e),
    };
    let circular = circular || parens;
    let r = Report::new(CMD).field("input", input);
    match (is_binary(body), circular) {
        (true, true) => match CircularCodeword::new(body.bytes().map(|b| b - b'0').collect()) {
            Err(e) => Report::usage(CMD, e.to_string()),
            Ok(c) => match c.decode() {
                None => r.field("kind", "circular codeword").fail(
                    Status::Error,
                    EXIT_NEGATIVE,
                    "not a valid circular codeword",
                ),
                Some(w) => {
                    let r = r.field("kind", "circular codeword").field("decoded", w.to_string());
                    square_fields(r, w.find_square())
                }
            },
        },
        (true, false) => match body.parse::<LinearCodeword>() {
            Err(e) => Report::usage(CMD, e.to_string()),
            Ok(c) => match decode_linear(&c, (Letter::A, Letter::B)) {
                Err(e) => Report::usage(CMD, e.to_string()),
                Ok(w) => {
                    let r = r.field("kind", "codeword").field("decoded", w.to_string());
                    square_fields(r, w.find_square())
                }
            },
        },
        (false, true) => match body.parse::<CircularWord>() {
            Err(e) => Report::usage(CMD, e.to_string()),
            Ok(w) => {
                let r = r.field("kind", "circular word").field("representative", w.to_string());
                square_fields(r, w.find_square())
            }
        },
        (false, false) => match body.parse::<LinearWord>() {
            Err(e) => Report::usage(CMD, e.to_string()),
            Ok(w) if w.is_empty() => Report::usage(CMD, "empty input"),
            Ok(w) => square_fields(r.field("kind", "word"), w.find_square()),
        },
    }
}

pub fn cmd_encode(input: &str, circular: bool) -> Report {
    const CMD: &str = "encode";
    let (body, parens) = match split_circular(input) {
        Ok(x) => x,
        Err(e) => return Report::usage(CMD, e),
    };
    let r = Report::new(CMD).field("input", input);
    let result = if circular || parens {
        body.parse::<CircularWord>()
            .map_err(|e| e.to_string())
            .and_then(|w| encode_circular(&w).map_err(|e| e.to_string()))
            .map(|c| c.to_string())
    } else {
        body.parse::<LinearWord>()
            .map_err(|e| e.to_string())
            .and_then(|w| encode_linear(&w).map_err(|e| e.to_string()))
            .map(|c| c.to_string())
    };
    match result {
        Ok(c) => r.field("codeword", c),
        Err(e) => Report::usage(CMD, e),
    }
}

fn parse_seed(seed: &str) -> Result<(Letter, Letter), String> {
    let letters = seed
        .chars()
        .map(|c| Letter::from_char(c).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    match letters[..] {
        [x, y] if x != y => Ok((x, y)),
        [_, _] => Err("seed letters must differ".into()),
        _ => Err(format!("seed must be two letters, got {seed:?}")),
    }
}

pub fn cmd_decode(input: &str, seed: &str) -> Report {
    const CMD: &str = "decode";
    let (body, parens) = match split_circular(input) {
        Ok(x) => x,
        Err(e) => return Report::usage(CMD, e),
    };
    let (x, y) = match parse_seed(seed) {
        Ok(s) => s,
        Err(e) => return Report::usage(CMD, e),
    };
    let r = Report::new(CMD).field("input", input);
    if parens {
        let c = match body.parse::<CircularCodeword>() {
            Ok(c) => c,
            Err(e) => return Report::usage(CMD, e.to_string()),
        };
        let sigma = LetterMap::ALL
            .iter()
            .find(|m| m.apply(Letter::A) == x && m.apply(Letter::B) == y)
            .expect("some bijection sends a, b to any two distinct letters");
        match c.decode() {
            Some(w) => r.field("word", w.map_letters(sigma).to_string()),
            None => r.fail(Status::Error, EXIT_NEGATIVE, "not a valid circular codeword"),
        }
    } else {
        match body.parse::<LinearCodeword>().and_then(|c| decode_linear(&c, (x, y))) {
            Ok(w) => r.field("word", w.to_string()),
            Err(e) => Report::usage(CMD, e.to_string()),
        }
    }
}

pub fn cmd_enumerate(length: usize, iso: bool, count_only: bool, max: Option<usize>) -> Report {
    const CMD: &str = "enumerate";
    if !(1..=MAX_ENUMERATION_LENGTH).contains(&length) {
        return Report::usage(CMD, format!("length must be in 1..={MAX_ENUMERATION_LENGTH}"));
    }
    let dedup = if iso { Dedup::Isomorphism } else { Dedup::Rotation };
    let r = Report::new(CMD)
        .field("length", length)
        .field("dedup", if iso { "isomorphism" } else { "rotation" });
    if count_only {
        let rep = count_circular(length).expect("length checked");
        return r.field("count", if iso { rep.iso_count } else { rep.raw_count });
    }
    let words = enumerate_circular(length, dedup).expect("length checked");
    let shown: Vec<String> = words
        .iter()
        .take(max.unwrap_or(usize::MAX))
        .map(|w| w.to_string())
        .collect();
    r.field("count", words.len()).field("words", shown)
}

pub fn cmd_walks(action: &WalkAction) -> Report {
    const CMD: &str = "walks";
    match action {
        WalkAction::Check { label } => {
            let label: WalkLabel = match label.parse() {
                Ok(l) => l,
                Err(e) => return Report::usage(CMD, e.to_string()),
            };
            let r = Report::new(CMD)
                .field("label", label.to_string())
                .field("closed", label.is_closed());
            match ClosedWalk::new(label) {
                Ok(walk) => {
                    let mut r = r
                        .field("weight", walk.total_weight())
                        .field("codeword", walk.codeword().to_string());
                    if let Some(f) = walk_label_forbidden_factor(walk.label()) {
                        r = r.field("forbidden_factor", f);
                    }
                    r.field("sufficient_condition", satisfies_sufficient_condition(&walk))
                }
                Err(_) => r.negative(),
            }
        }
        WalkAction::ToCodeword { label } => {
            let label: WalkLabel = match label.parse() {
                Ok(l) => l,
                Err(e) => return Report::usage(CMD, e.to_string()),
            };
            let r = Report::new(CMD).field("label", label.to_string());
            match ClosedWalk::new(label) {
                Ok(walk) => r
                    .field("weight", walk.total_weight())
                    .field("codeword", walk_to_codeword(&walk).to_string()),
                Err(e) => r.fail(Status::Error, EXIT_NEGATIVE, e.to_string()),
            }
        }
        WalkAction::FromCodeword { codeword } => {
            let c: CircularCodeword = match codeword.parse() {
                Ok(c) => c,
                Err(e) => return Report::usage(CMD, e.to_string()),
            };
            let r = Report::new(CMD).field("codeword", c.to_string());
            match codeword_to_walk(&c) {
                Some(label) if label.is_closed() => {
                    let weight = label.total_weight();
                    r.field("label", label.to_string()).field("weight", weight)
                }
                Some(label) => r.field("label", label.to_string()).fail(
                    Status::Error,
                    EXIT_NEGATIVE,
                    "codeword does not come from a closed walk",
                ),
                None => r.fail(Status::Error, EXIT_NEGATIVE, "codeword does not come from a walk"),
            }
        }
    }
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn codeword_set(l: usize) -> BTreeSet<String> {
    enumerate_circular(l, Dedup::Rotation)
        .expect("small length")
        .iter()
        .map(|w| {
            encode_circular(w)
                .expect("square-free words of length >= 3 encode")
                .to_string()
        })
        .collect()
}

/// Recomputes the published tables by brute force and compares them with
/// the construction.
pub fn selftest(max_length: usize, construct_max: usize) -> Vec<Check> {
    let mut checks = vec![];

    let mut failed = vec![];
    let mut bad = None;
    for l in 1..=construct_max {
        match construct_word(l) {
            Ok(w) if w.len() == l && w.is_square_free() && !is_exceptional(l) => {}
            Ok(w) => {
                bad.get_or_insert(format!("length {l} gave {w}"));
            }
            Err(_) => failed.push(l),
        }
    }
    let expected: Vec<usize> = EXCEPTIONAL_LENGTHS
        .iter()
        .copied()
        .filter(|&l| l <= construct_max)
        .collect();
    let ok = bad.is_none() && failed == expected;
    let detail = bad.unwrap_or_else(|| {
        format!(
            "constructs fail exactly on {{{}}} for l <= {construct_max}",
            join(&failed)
        )
    });
    checks.push(check("exceptional lengths", ok, detail));

    let enum_max = max_length.min(MAX_ENUMERATION_LENGTH);
    let mut mismatch = None;
    let mut counts = vec![];
    for l in 1..=enum_max {
        let raw = count_circular(l).expect("in range").raw_count;
        counts.push(raw);
        if (raw > 0) != construct_word(l).is_ok() && mismatch.is_none() {
            mismatch = Some(format!("length {l}: {raw} words, construction disagrees"));
        }
    }
    checks.push(check(
        "oracle agreement",
        mismatch.is_none(),
        mismatch.unwrap_or_else(|| format!("brute force and construction agree for l <= {enum_max}")),
    ));

    if enum_max >= 8 {
        let expected: [&[&str]; 5] = [&["(0101)"], &[], &["(011011)"], &[], &["(01110111)"]];
        let found: Vec<BTreeSet<String>> = (4..=8).map(codeword_set).collect();
        let ok = found
            .iter()
            .zip(expected)
            .all(|(f, e)| f.iter().map(String::as_str).eq(e.iter().copied()));
        let detail = found
            .iter()
            .zip(4..)
            .map(|(f, l)| format!("{l}:{{{}}}", join(f)))
            .collect::<Vec<_>>()
            .join(" ");
        checks.push(check("codewords of lengths 4-8", ok, detail));
    }

    let cycles = simple_cycles();
    let ok = cycles.len() == 11
        && cycles.iter().all(|c| {
            c.walk.total_weight() == c.weight && walk_to_codeword(&c.walk) == c.codeword && c.codeword.is_square_free()
        });
    checks.push(check(
        "simple cycles",
        ok,
        format!(
            "{} cycles, weights {}",
            cycles.len(),
            join(cycles.iter().map(|c| c.weight))
        ),
    ));

    let witnesses = ["122122", "123313", "133133"];
    let mut ok = witnesses.iter().all(|w| {
        w.parse::<ClosedWalk>()
            .map(|walk| walk.codeword().is_square_free())
            .unwrap_or(false)
    });
    let mut detail = String::from("walks 122122, 123313, 133133 give square-free codewords");
    if enum_max >= 17 {
        let none = counts[13] == 0 && counts[16] == 0;
        ok &= none;
        detail.push_str(&format!(
            "; lengths 14 and 17 have {} and {} words",
            counts[13], counts[16]
        ));
    }
    checks.push(check("lengths 14 to 20", ok, detail));

    let expected: [(usize, &[&str]); 8] = [
        (2, &["00"]),
        (3, &["1111"]),
        (4, &["010101", "101010"]),
        (5, &[]),
        (6, &["0110110110", "1011011011", "1101101101"]),
        (7, &[]),
        (9, &[]),
        (10, &[]),
    ];
    let mut ok = true;
    let mut parts = vec![];
    for (p, want) in expected.iter().filter(|(p, _)| *p <= enum_max) {
        let got: Vec<String> = minimal_square_codewords(*p)
            .expect("in range")
            .iter()
            .map(|c| c.to_string())
            .collect();
        ok &= got.iter().map(String::as_str).eq(want.iter().copied());
        parts.push(format!("{p}:{{{}}}", join(&got)));
    }
    checks.push(check("minimal-square codewords", ok, parts.join(" ")));

    if enum_max >= 1 {
        let list = uniqueness_lengths(enum_max).expect("in range");
        let want: Vec<usize> = UNIQUENESS_LIST.iter().copied().filter(|&l| l <= enum_max).collect();
        checks.push(check(
            "uniqueness list",
            list == want,
            format!("uniqueness list = {}", join(&list)),
        ));
    }

    if enum_max >= 28 {
        let g = growth_report(18, 28).expect("in range");
        let mean = g.raw_geometric_mean.unwrap_or(0.0);
        let ok = g.raw_counts.iter().all(|&c| c > 0) && (1.15..=1.45).contains(&mean);
        checks.push(check(
            "growth",
            ok,
            format!(
                "raw geometric mean over 18..28 = {mean:.4}, isomorphism classes {:.4}",
                g.iso_geometric_mean.unwrap_or(0.0)
            ),
        ));
    }
    checks
}

pub fn cmd_selftest(max_length: usize, construct_max: usize) -> Report {
    let checks = selftest(max_length, construct_max);
    let passed = checks.iter().filter(|c| c.passed).count();
    let total = checks.len();
    let mut r = Report::new("selftest").field("passed", passed).field("total", total);
    r.checks = checks;
    if passed < total {
        let first = r.checks.iter().find(|c| !c.passed).expect("some check failed");
        let msg = format!("{}: {}", first.name, first.detail);
        r = r.fail(Status::Error, EXIT_NEGATIVE, msg);
    }
    r
}

pub fn execute(command: &Command) -> Report {
    match command {
        Command::Construct { length, codeword } => cmd_construct(*length, *codeword),
        Command::Verify { input, circular } => cmd_verify(input, *circular),
        Command::Encode { input, circular } => cmd_encode(input, *circular),
        Command::Decode { input, seed } => cmd_decode(input, seed),
        Command::Enumerate {
            length,
            iso,
            count_only,
            max,
        } => cmd_enumerate(*length, *iso, *count_only, *max),
        Command::Walks { action } => cmd_walks(action),
        Command::Selftest {
            max_length,
            construct_max,
        } => cmd_selftest(*max_length, *construct_max),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = if color {
                e.render().ansi().to_string()
            } else {
                e.render().to_string()
            };
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let report = execute(&cli.command);
    let written = match cli.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable")
        )
        .and_then(|_| match &report.message {
            Some(m) => writeln!(err, "{m}"),
            None => Ok(()),
        }),
        Format::Text => report.render_text(out, err, color),
    };
    if written.is_err() {
        return EXIT_NEGATIVE;
    }
    report.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = vec![];
        let mut err = vec![];
        let mut full = vec!["sqfree"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err, false);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn construct_command() {
        let (code, out, _) = run_str(&["construct", "4"]);
        assert_eq!(code, 0);
        let w: CircularWord = out
            .lines()
            .find_map(|l| l.strip_prefix("word: "))
            .unwrap()
            .parse()
            .unwrap();
        assert!(w.is_isomorphic(&"(abac)".parse().unwrap()));
        let (code, _, err) = run_str(&["construct", "17"]);
        assert_eq!(code, 1);
        assert!(err.contains("not representable"));
        assert_eq!(run_str(&["construct", "0"]).0, 2);
        assert_eq!(run_str(&["construct", "x"]).0, 2);
        let r = cmd_construct(100, true);
        assert_eq!(r.get("codeword").unwrap().as_str().unwrap().len(), 102);
        assert_eq!(r.get("word").unwrap().as_str().unwrap().len(), 102);
        assert_eq!(cmd_construct(17, false).status, Status::NotRepresentable);
    }

    #[test]
    fn verify_command() {
        let r = cmd_verify("(abab)", false);
        assert_eq!((r.exit_code, r.get("square_period")), (1, Some(&json!(2))));
        assert_eq!(cmd_verify("(abacabcbabc)", false).exit_code, 0);
        let r = cmd_verify("(01110111)", false);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.get("kind"), Some(&json!("circular codeword")));
        let r = cmd_verify("abcabc", false);
        assert_eq!(
            (r.get("square_position"), r.get("square_period")),
            (Some(&json!(1)), Some(&json!(3)))
        );
        assert_eq!(cmd_verify("abab", true).exit_code, 1);
        assert_eq!(cmd_verify("abca", false).exit_code, 0);
        assert_eq!(cmd_verify("abca", true).exit_code, 1);
        assert_eq!(cmd_verify("(abx)", false).exit_code, 2);
        assert_eq!(cmd_verify("(ab", false).exit_code, 2);
        assert_eq!(cmd_verify("(011)", false).exit_code, 1);
    }

    #[test]
    fn codec_commands() {
        assert_eq!(cmd_encode("abcbacbc", false).get("codeword"), Some(&json!("101110")));
        assert_eq!(cmd_encode("(abac)", false).get("codeword"), Some(&json!("(0101)")));
        assert_eq!(cmd_encode("abba", false).exit_code, 2);
        assert_eq!(
            cmd_decode("(01011010111)", "ab").get("word"),
            Some(&json!("(abacabcbabc)"))
        );
        let r = cmd_decode("(011)", "ab");
        assert_eq!(
            (r.exit_code, r.message.as_deref()),
            (1, Some("not a valid circular codeword"))
        );
        assert_eq!(cmd_decode("101110", "ab").get("word"), Some(&json!("abcbacbc")));
        assert_eq!(cmd_decode("101110", "ca").get("word"), Some(&json!("cabacbab")));
        assert_eq!(cmd_decode("101110", "aa").exit_code, 2);
        assert_eq!(cmd_decode("102", "ab").exit_code, 2);
        let r = cmd_decode("(0101)", "ba");
        assert_eq!(r.get("word"), Some(&json!("(abcb)")));
    }

    #[test]
    fn enumerate_command() {
        assert_eq!(cmd_enumerate(5, false, true, None).get("count"), Some(&json!(0)));
        assert_eq!(cmd_enumerate(21, true, true, None).get("count"), Some(&json!(1)));
        let r = cmd_enumerate(18, true, true, None);
        assert!(r.get("count").unwrap().as_u64().unwrap() >= 2);
        let r = cmd_enumerate(8, false, false, Some(1));
        assert_eq!(r.get("words").unwrap().as_array().unwrap().len(), 1);
        assert_eq!(cmd_enumerate(0, false, true, None).exit_code, 2);
        assert_eq!(cmd_enumerate(41, false, true, None).exit_code, 2);
    }

    #[test]
    fn walks_command() {
        let r = cmd_walks(&WalkAction::Check { label: "1213".into() });
        assert_eq!(
            (r.exit_code, r.get("closed"), r.get("weight")),
            (0, Some(&json!(true)), Some(&json!(11)))
        );
        assert_eq!(cmd_walks(&WalkAction::Check { label: "12".into() }).exit_code, 1);
        let r = cmd_walks(&WalkAction::ToCodeword { label: "232323".into() });
        assert_eq!(r.get("codeword"), Some(&json!("(011011101101110110111)")));
        assert_eq!(cmd_walks(&WalkAction::ToCodeword { label: "12".into() }).exit_code, 1);
        let r = cmd_walks(&WalkAction::FromCodeword {
            codeword: "(01011010111)".into(),
        });
        assert_eq!(r.get("label"), Some(&json!("1213")));
        assert_eq!(cmd_walks(&WalkAction::Check { label: "14".into() }).exit_code, 2);
    }

    #[test]
    fn json_and_text_agree() {
        let r = cmd_construct(40, true);
        let doc = r.to_json();
        assert_eq!(doc["status"], "ok");
        for (k, v) in &r.fields {
            assert_eq!(&doc["payload"][*k], v);
        }
        let (code, out, _) = run_str(&["--format", "json", "construct", "5"]);
        assert_eq!(code, 1);
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["status"], "not-representable");
    }

    #[test]
    fn short_selftest() {
        let checks = selftest(21, 60);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        let u = checks.iter().find(|c| c.name == "uniqueness list").unwrap();
        assert_eq!(u.detail, "uniqueness list = 1,2,3,4,6,8,11,12,13,15,16,21");
    }
}
