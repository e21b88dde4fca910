//! Text forms: `[-1,6,7,8,-5,2,3,4]` and `s~1 s2 s3`.

use super::graph::{CoxeterGraph, Gen};
use crate::error::{usage, Result};

pub fn format_one_line(v: &[i8]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", body.join(","))
}

/// Parses bracketed signed integers separated by commas or spaces.
pub fn parse_one_line(text: &str) -> Result<Vec<i8>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| usage(format!("1-line notation must be bracketed: {text:?}")))?;
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i8>().map_err(|_| usage(format!("bad 1-line entry {x:?}"))))
        .collect()
}

pub fn format_word(graph: &CoxeterGraph, word: &[Gen]) -> String {
    let parts: Vec<String> = word.iter().map(|&s| format!("s{}", graph.label(s))).collect();
    parts.join(" ")
}

/// Parses `s~1 s2 s3`, `s~1s2s3` or `s~1,s2`. The empty string is the
/// empty word.
pub fn parse_word(graph: &CoxeterGraph, text: &str) -> Result<Vec<Gen>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == ',' || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        if c != 's' {
            return Err(usage(format!("unexpected {c:?} in word {text:?}")));
        }
        i += 1;
        let mut label = String::new();
        if i < chars.len() && chars[i] == '~' {
            label.push('~');
            i += 1;
        }
        let start = label.len();
        while i < chars.len() && chars[i].is_ascii_digit() {
            label.push(chars[i]);
            i += 1;
        }
        if label.len() == start {
            return Err(usage(format!("missing generator number in {text:?}")));
        }
        let s = graph
            .gen_by_label(&label)
            .ok_or_else(|| usage(format!("s{label} is not a generator of {}", graph.kind())))?;
        out.push(s);
    }
    Ok(out)
}
