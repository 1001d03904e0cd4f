//! The line-oriented presentation format.
//!
//! ```text
//! # comment
//! field Q                 (or: field GF 5)
//! algebra Sym2
//! gens x y
//! rel x*y - y*x
//! rel 2*x*x + 1/3*y*y
//! ```
//!
//! Words are indexed row-major: `gens a b` gives `a*a, a*b, b*a, b*b`
//! the indices `0, 1, 2, 3`. A term is `[coeff*]gen*gen`; generator names
//! may themselves contain `*` (duals such as `x*`), so the split between
//! the two letters is found by matching against the declared generators.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::linalg::{axpy_into, Field, Scalar, SparseVec, Subspace};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Characters allowed in a generator name after the first one.
fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '⊗' | '(' | ')' | '*' | '\'' | '.')
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' || c == '(' => chars.all(ident_char),
        _ => false,
    }
}

fn column_of(line: &str, offset: usize) -> usize {
    line[..offset].chars().count() + 1
}

struct Header {
    field: Option<Field>,
    name: Option<String>,
    labels: Option<Vec<String>>,
}

pub fn parse(text: &str) -> Result<QuadraticPresentation> {
    let mut header = Header {
        field: None,
        name: None,
        labels: None,
    };
    let mut rel_lines: Vec<(usize, &str, usize)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let start = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_offset = start + keyword.len() + (trimmed.len() - keyword.len() - rest.len());
        let duplicate = |what: &str| parse_error(line_no, column_of(raw, start), format!("duplicate {what} line"));
        match keyword {
            "field" => {
                if header.field.is_some() {
                    return Err(duplicate("field"));
                }
                header.field = Some(parse_field(rest, line_no, column_of(raw, rest_offset))?);
            }
            "algebra" => {
                if header.name.is_some() {
                    return Err(duplicate("algebra"));
                }
                let name = rest.trim();
                if name.is_empty() || name.chars().any(char::is_whitespace) {
                    return Err(parse_error(line_no, column_of(raw, rest_offset), "algebra name must be one word"));
                }
                header.name = Some(name.to_string());
            }
            "gens" => {
                if header.labels.is_some() {
                    return Err(duplicate("gens"));
                }
                let mut labels = Vec::new();
                let mut offset = rest_offset;
                for piece in rest.split_inclusive(char::is_whitespace) {
                    let id = piece.trim();
                    if !id.is_empty() {
                        if !valid_ident(id) {
                            return Err(parse_error(line_no, column_of(raw, offset), format!("invalid generator name '{id}'")));
                        }
                        if labels.iter().any(|l| l == id) {
                            return Err(parse_error(line_no, column_of(raw, offset), format!("generator '{id}' declared twice")));
                        }
                        labels.push(id.to_string());
                    }
                    offset += piece.len();
                }
                if labels.is_empty() {
                    return Err(parse_error(line_no, column_of(raw, start), "empty generator list"));
                }
                header.labels = Some(labels);
            }
            "rel" => rel_lines.push((line_no, raw, rest_offset)),
            other => {
                return Err(parse_error(line_no, column_of(raw, start), format!("unknown keyword '{other}'")));
            }
        }
    }
    let field = header.field.ok_or_else(|| parse_error(1, 1, "missing field line"))?;
    let labels = header.labels.ok_or_else(|| parse_error(1, 1, "missing gens line"))?;
    let name = header.name.unwrap_or_else(|| "A".to_string());
    let n = labels.len();
    let mut rows = Vec::with_capacity(rel_lines.len());
    for (line_no, raw, offset) in rel_lines {
        rows.push(parse_relation(raw, offset, line_no, field, &labels)?);
    }
    QuadraticPresentation::new(name, labels, Subspace::span(field, n * n, rows.iter()))
}

fn parse_field(rest: &str, line: usize, column: usize) -> Result<Field> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words.as_slice() {
        ["Q"] => Ok(Field::Rationals),
        ["GF", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| parse_error(line, column, format!("'{p}' is not a modulus")))?;
            Field::gf(p).map_err(|_| parse_error(line, column, format!("{p} is not a prime modulus")))
        }
        _ => Err(parse_error(line, column, "expected 'Q' or 'GF <p>'")),
    }
}

/// Splits a relation body into signed terms, tracking byte offsets.
fn signed_terms(body: &str) -> Vec<(bool, usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                out.push((negative, start, &body[start..i]));
                negative = c == '-';
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((negative, start, &body[start..]));
    out
}

fn parse_relation(raw: &str, offset: usize, line: usize, field: Field, labels: &[String]) -> Result<SparseVec> {
    let body = &raw[offset..];
    let body = body.split('#').next().unwrap_or("");
    let n = labels.len();
    let mut acc = BTreeMap::new();
    let terms = signed_terms(body);
    for (k, (negative, start, text)) in terms.iter().enumerate() {
        let trimmed = text.trim();
        let lead = text.len() - text.trim_start().len();
        let column = column_of(raw, offset + start + lead);
        if trimmed.is_empty() {
            // a leading sign leaves an empty first piece
            if k == 0 && terms.len() > 1 {
                continue;
            }
            return Err(parse_error(line, column, "empty term"));
        }
        let (coeff, word) = split_coefficient(trimmed, field, line, column)?;
        let (a, b) = split_word(word, labels, line, column)?;
        let coeff = if *negative { -&coeff } else { coeff };
        axpy_into(&mut acc, &coeff, &[(a * n + b, Scalar::one(field))]);
    }
    Ok(acc.into_iter().collect())
}

fn split_coefficient(term: &str, field: Field, line: usize, column: usize) -> Result<(Scalar, &str)> {
    if !term.starts_with(|c: char| c.is_ascii_digit()) {
        return Ok((Scalar::one(field), term));
    }
    let (coeff, word) = term
        .split_once('*')
        .ok_or_else(|| parse_error(line, column, "coefficient must be followed by '*'"))?;
    let coeff = coeff.trim();
    let (num, den) = coeff.split_once('/').unwrap_or((coeff, "1"));
    let bad = || parse_error(line, column, format!("invalid coefficient '{coeff}'"));
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    let value = Scalar::from_fraction(field, &num, &den)
        .map_err(|_| parse_error(line, column, format!("coefficient '{coeff}' has a vanishing denominator")))?;
    Ok((value, word.trim()))
}

/// Ways to cut `word` at `*` into a sequence of known generators.
fn segmentations(word: &str, labels: &[String], limit: usize) -> Vec<Vec<usize>> {
    if let Some(i) = labels.iter().position(|l| l == word) {
        return vec![vec![i]];
    }
    if limit <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (pos, _) in word.match_indices('*') {
        let (head, tail) = (&word[..pos], &word[pos + 1..]);
        if let Some(i) = labels.iter().position(|l| l == head) {
            for mut rest in segmentations(tail, labels, limit - 1) {
                rest.insert(0, i);
                out.push(rest);
            }
        }
    }
    out
}

fn split_word(word: &str, labels: &[String], line: usize, column: usize) -> Result<(usize, usize)> {
    let word: String = word.chars().filter(|c| !c.is_whitespace()).collect();
    let quadratic: Vec<_> = segmentations(&word, labels, 2).into_iter().filter(|s| s.len() == 2).collect();
    match quadratic.as_slice() {
        [s] => Ok((s[0], s[1])),
        [] => {
            let longer = segmentations(&word, labels, word.matches('*').count() + 1);
            if !longer.is_empty() {
                Err(parse_error(line, column, format!("'{word}' is not a quadratic word")))
            } else {
                Err(parse_error(line, column, format!("'{word}' uses an unknown generator")))
            }
        }
        _ => Err(parse_error(line, column, format!("'{word}' splits into generators in more than one way"))),
    }
}

fn field_line(field: Field) -> String {
    match field {
        Field::Rationals => "field Q".to_string(),
        Field::Prime(p) => format!("field GF {}", p.get()),
    }
}

/// Canonical text: one `rel` line per row of the reduced relation basis,
/// terms in increasing word order.
pub fn unparse(a: &QuadraticPresentation) -> String {
    let n = a.n();
    let labels = a.labels();
    let mut out = String::new();
    out.push_str(&field_line(a.field()));
    out.push('\n');
    out.push_str(&format!("algebra {}\n", a.name()));
    out.push_str(&format!("gens {}\n", labels.join(" ")));
    for row in a.relations().basis_sparse() {
        let mut line = String::from("rel");
        for (k, (w, x)) in row.iter().enumerate() {
            let word = format!("{}*{}", labels[w / n], labels[w % n]);
            let negative = x.is_negative();
            let magnitude = if negative { -x } else { x.clone() };
            let sign = match (k, negative) {
                (0, false) => " ",
                (0, true) => " -",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            line.push_str(sign);
            if !magnitude.is_one() {
                line.push_str(&format!("{magnitude}*"));
            }
            line.push_str(&word);
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn parses_sym2() {
        let a = parse("field Q\nalgebra Sym2\ngens x y\nrel x*y - y*x\n").unwrap();
        assert_eq!(a.relations().dim(), 1);
        assert_eq!(a.relations(), QuadraticPresentation::symmetric(Q, 2).relations());
        assert_eq!(a.name(), "Sym2");
    }

    #[test]
    fn free_over_gf5() {
        let a = parse("field GF 5\nalgebra Free1\ngens t\n").unwrap();
        let w = QuadraticPresentation::unit_white(Field::gf(5).unwrap());
        assert!(a.same_object(&w));
    }

    #[test]
    fn rejects_cubic_word_with_position() {
        let err = parse("field Q\ngens x y z\nrel x*y*z\n").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (3, 5));
                assert!(message.contains("quadratic"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn other_errors() {
        let cases = [
            ("field Q\ngens x\nrel x*q\n", "unknown generator"),
            ("field GF 6\ngens x\n", "prime"),
            ("field Q\ngens x\ngens y\n", "duplicate"),
            ("field Q\ngens\n", "empty generator list"),
            ("field Q\ngens x x\n", "twice"),
            ("gens x\n", "missing field"),
            ("field Q\ngens x\nrel 1/0*x*x\n", "denominator"),
            ("field Q\ngens x\nfoo\n", "unknown keyword"),
        ];
        for (text, needle) in cases {
            let err = parse(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} gave {err}");
        }
    }

    #[test]
    fn coefficients_and_signs() {
        let a = parse("field Q\ngens x y\nrel -2*x*x + 1/2*y*y # comment\nrel x*y+y*x\n").unwrap();
        let b = parse(&unparse(&a)).unwrap();
        assert_eq!(a, b);
        let text = unparse(&a);
        assert!(text.contains("rel x*x - 1/4*y*y"), "{text}");
    }

    #[test]
    fn starred_generators_split_by_lookup() {
        let s = QuadraticPresentation::symmetric(Q, 2);
        let d = s.dual();
        assert_eq!(d.labels(), &["x*".to_string(), "y*".to_string()]);
        let text = unparse(&d);
        assert!(text.contains("rel x**x*"), "{text}");
        assert_eq!(parse(&text).unwrap(), d);
        let p = s.black(&d).unwrap();
        assert_eq!(parse(&unparse(&p)).unwrap(), p);
    }

    #[test]
    fn gf_residues_round_trip() {
        let f = Field::gf(7).unwrap();
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for c in 0..=4 {
            let a = QuadraticPresentation::random(f, 2, c, &mut rng).unwrap();
            assert_eq!(parse(&unparse(&a)).unwrap(), a);
        }
    }
}
