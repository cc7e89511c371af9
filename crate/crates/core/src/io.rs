//! Plain-text formats for latin hypercubes, codes, BBDs and SQSs.
//!
//! ```text
//! LATIN <dim> <q>            then q^dim symbols, last coordinate fastest,
//!                            q per line
//! CODE <d> <q> <rho>         optionally LINEAR <p> <k> [modulus coefficients]
//!                            and m generator rows, then one word per line
//! BBD <n>                    G1 <ids>, G2 <ids>, then one block per line
//! SQS <v> <blockcount>       then one sorted block per line
//! ```
//!
//! Writers emit canonical text: reading and writing it back is byte-exact.
//! Parse errors carry 1-based line numbers.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::designs::{verify_bbd, Bbd};
use crate::error::{Error, Result};
use crate::gf::{default_modulus, Field};
use crate::latin::{verify_latin, LatinHypercube};
use crate::mds::{check_linear_form, verify_mds, Code, LinearForm};
use crate::report::Verdict;
use crate::sqs::{verify_sqs, Sqs};

#[derive(Debug, Clone, PartialEq)]
pub enum Artifact {
    Latin(LatinHypercube),
    Code(Code),
    Bbd(Bbd),
    Sqs(Sqs),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Latin(_) => "latin",
            Artifact::Code(_) => "code",
            Artifact::Bbd(_) => "bbd",
            Artifact::Sqs(_) => "sqs",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Artifact::Latin(c) => write_latin(c),
            Artifact::Code(c) => write_code(c),
            Artifact::Bbd(b) => write_bbd(b),
            Artifact::Sqs(s) => write_sqs(s),
        }
    }

    /// Runs the verifier of the artifact's kind.
    pub fn verify(&self) -> Verdict {
        match self {
            Artifact::Latin(c) => verify_latin(c),
            Artifact::Code(c) => {
                verify_mds(c)?;
                check_linear_form(c)
            }
            Artifact::Bbd(b) => verify_bbd(b),
            Artifact::Sqs(s) => verify_sqs(s),
        }
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_latin(cube: &LatinHypercube) -> String {
    let mut out = format!("LATIN {} {}\n", cube.dim(), cube.order());
    for row in cube.cells().chunks(cube.order().max(1)) {
        out.push_str(&join(row));
        out.push('\n');
    }
    out
}

pub fn write_code(code: &Code) -> String {
    let mut out = format!("CODE {} {} {}\n", code.len(), code.order(), code.distance());
    if let Some(form) = code.linear_form() {
        let f = &form.field;
        let _ = write!(out, "LINEAR {} {}", f.characteristic(), f.degree());
        if f.modulus() != default_modulus(f.characteristic(), f.degree()).as_slice() {
            let _ = write!(out, " {}", join(f.modulus()));
        }
        out.push('\n');
        for row in &form.generator {
            out.push_str(&join(row));
            out.push('\n');
        }
    }
    for w in code.words() {
        out.push_str(&join(w));
        out.push('\n');
    }
    out
}

pub fn write_bbd(bbd: &Bbd) -> String {
    let mut out = format!(
        "BBD {}\nG1 {}\nG2 {}\n",
        bbd.n,
        join(&bbd.g1),
        join(&bbd.g2)
    );
    for b in &bbd.blocks {
        out.push_str(&join(b));
        out.push('\n');
    }
    out
}

pub fn write_sqs(s: &Sqs) -> String {
    let mut out = format!("SQS {} {}\n", s.v, s.blocks.len());
    for b in &s.blocks {
        out.push_str(&join(b));
        out.push('\n');
    }
    out
}

/// Non-empty lines with their 1-based numbers.
struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.inner.next();
        if let Some((n, _)) = item {
            self.last = n;
        }
        item
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner
            .peek()
            .and_then(|(_, l)| l.split_whitespace().next())
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| {
            malformed(
                self.last + 1,
                format!("expected {what}, found end of input"),
            )
        })
    }
}

fn malformed(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("line {line}: {msg}"))
}

fn numbers<T: std::str::FromStr>(line: usize, fields: &str) -> Result<Vec<T>> {
    fields
        .split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| malformed(line, format!("bad integer {tok:?}")))
        })
        .collect()
}

/// Parses `KEYWORD a b c` with exactly `count` integers.
fn header(line: usize, text: &str, keyword: &str, count: usize) -> Result<Vec<usize>> {
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| malformed(line, format!("expected {keyword} header")))?;
    let nums: Vec<usize> = numbers(line, rest)?;
    if nums.len() != count {
        return Err(malformed(line, format!("{keyword} takes {count} integers")));
    }
    Ok(nums)
}

fn row<T: std::str::FromStr>(line: usize, text: &str, len: usize) -> Result<Vec<T>> {
    let nums = numbers(line, text)?;
    if nums.len() != len {
        return Err(malformed(
            line,
            format!("expected {len} integers, found {}", nums.len()),
        ));
    }
    Ok(nums)
}

fn with_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Malformed(m) if m.starts_with("line ") => Error::Malformed(m),
        other => malformed(line, other),
    })
}

pub fn read(text: &str) -> Result<Artifact> {
    let mut lines = Lines::new(text);
    match lines.peek_keyword() {
        Some("LATIN") => read_latin(&mut lines).map(Artifact::Latin),
        Some("CODE") => read_code(&mut lines).map(Artifact::Code),
        Some("BBD") => read_bbd(&mut lines).map(Artifact::Bbd),
        Some("SQS") => read_sqs(&mut lines).map(Artifact::Sqs),
        Some(other) => Err(malformed(
            lines.inner.peek().map_or(1, |(n, _)| *n),
            format!("unknown header {other:?}"),
        )),
        None => Err(malformed(1, "empty input")),
    }
}

pub fn read_file(path: &std::path::Path) -> Result<Artifact> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    read(&text)
}

fn no_trailing(lines: &mut Lines<'_>) -> Result<()> {
    match lines.next() {
        Some((n, _)) => Err(malformed(n, "unexpected trailing data")),
        None => Ok(()),
    }
}

fn read_latin(lines: &mut Lines<'_>) -> Result<LatinHypercube> {
    let (n, h) = lines.expect("LATIN header")?;
    let hd = header(n, h, "LATIN", 2)?;
    let (dim, q) = (hd[0], hd[1]);
    let total = (q as u64)
        .checked_pow(dim as u32)
        .filter(|&t| t <= 1 << 26)
        .ok_or_else(|| malformed(n, "hypercube too large"))? as usize;
    let mut cells = Vec::with_capacity(total);
    while cells.len() < total {
        let (n, l) = lines.expect("more symbols")?;
        let nums: Vec<u32> = numbers(n, l)?;
        if cells.len() + nums.len() > total {
            return Err(malformed(n, format!("more than {total} symbols")));
        }
        cells.extend(nums);
    }
    no_trailing(lines)?;
    with_line(n, LatinHypercube::new(dim, q, cells))
}

fn read_code(lines: &mut Lines<'_>) -> Result<Code> {
    let (n, h) = lines.expect("CODE header")?;
    let hd = header(n, h, "CODE", 3)?;
    let (d, q, rho) = (hd[0], hd[1], hd[2]);
    if q == 0 || q > u32::MAX as usize {
        return Err(malformed(n, "alphabet size out of range"));
    }
    let mut form = None;
    if lines.peek_keyword() == Some("LINEAR") {
        let (ln, l) = lines.expect("LINEAR line")?;
        let nums: Vec<u32> = numbers(ln, &l["LINEAR".len()..])?;
        if nums.len() < 2 {
            return Err(malformed(ln, "LINEAR takes p, k and optional modulus"));
        }
        let (p, k) = (nums[0], nums[1]);
        let modulus = (nums.len() > 2).then(|| nums[2..].to_vec());
        let field = Arc::new(with_line(ln, Field::with_modulus(p, k, modulus))?);
        if field.order() as usize != q {
            return Err(malformed(
                ln,
                format!("GF({p}^{k}) does not have {q} elements"),
            ));
        }
        let m = d
            .checked_sub(rho)
            .map(|x| x + 1)
            .ok_or_else(|| malformed(n, "distance exceeds length"))?;
        let mut generator = Vec::with_capacity(m);
        for _ in 0..m {
            let (gn, g) = lines.expect("generator row")?;
            generator.push(row(gn, g, d)?);
        }
        form = Some(LinearForm { field, generator });
    }
    let mut words = Vec::new();
    let mut first_seen = HashMap::new();
    while let Some((wn, w)) = lines.next() {
        let word: Vec<u32> = row(wn, w, d)?;
        if let Some(&s) = word.iter().find(|&&s| s as usize >= q) {
            return Err(malformed(wn, format!("symbol {s} >= {q}")));
        }
        if let Some(first) = first_seen.insert(word.clone(), wn) {
            return Err(malformed(wn, format!("repeats the word on line {first}")));
        }
        words.push(word);
    }
    let code = with_line(n, Code::new(d, q as u32, rho, &words))?;
    if code.size() != words.len() {
        return Err(malformed(n, "repeated word"));
    }
    Ok(match form {
        Some(f) => code.with_linear_form(f),
        None => code,
    })
}

fn read_bbd(lines: &mut Lines<'_>) -> Result<Bbd> {
    let (n, h) = lines.expect("BBD header")?;
    let points = header(n, h, "BBD", 1)?[0];
    let mut group = |tag: &str| -> Result<Vec<u32>> {
        let (gn, g) = lines.expect(tag)?;
        let rest = g
            .strip_prefix(tag)
            .ok_or_else(|| malformed(gn, format!("expected {tag} line")))?;
        let ids: Vec<u32> = numbers(gn, rest)?;
        if let Some(&p) = ids.iter().find(|&&p| p as usize >= points) {
            return Err(malformed(gn, format!("point {p} >= {points}")));
        }
        Ok(ids)
    };
    let g1 = group("G1")?;
    let g2 = group("G2")?;
    let mut blocks = Vec::new();
    while let Some((bn, b)) = lines.next() {
        blocks.push(block(bn, b, points)?);
    }
    Ok(Bbd::new(points, g1, g2, blocks))
}

fn block(line: usize, text: &str, v: usize) -> Result<[u32; 4]> {
    let b: Vec<u32> = row(line, text, 4)?;
    if let Some(&p) = b.iter().find(|&&p| p as usize >= v) {
        return Err(malformed(line, format!("point {p} >= {v}")));
    }
    Ok([b[0], b[1], b[2], b[3]])
}

fn read_sqs(lines: &mut Lines<'_>) -> Result<Sqs> {
    let (n, h) = lines.expect("SQS header")?;
    let hd = header(n, h, "SQS", 2)?;
    let (v, count) = (hd[0], hd[1]);
    let mut blocks = Vec::with_capacity(count);
    while let Some((bn, b)) = lines.next() {
        blocks.push(block(bn, b, v)?);
    }
    if blocks.len() != count {
        return Err(malformed(
            n,
            format!("header announces {count} blocks, found {}", blocks.len()),
        ));
    }
    Ok(Sqs::new(v, blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::bbd_build;
    use crate::latin::cube_with_subcube;
    use crate::mds::linear_mds;
    use crate::sqs::boolean_sqs;

    fn round_trip(a: Artifact) {
        let text = a.to_text();
        let back = read(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(back.verify(), Ok(()));
    }

    #[test]
    fn all_formats_round_trip() {
        round_trip(Artifact::Latin(cube_with_subcube(6, 2, 3).unwrap()));
        round_trip(Artifact::Code(
            linear_mds(&Arc::new(Field::new(3, 2).unwrap()), 4, 3).unwrap(),
        ));
        round_trip(Artifact::Code(
            linear_mds(&Arc::new(Field::new(2, 4).unwrap()), 8, 7).unwrap(),
        ));
        round_trip(Artifact::Bbd(bbd_build(8, 2).unwrap().bbd));
        round_trip(Artifact::Sqs(boolean_sqs(4).unwrap()));
    }

    #[test]
    fn custom_modulus_survives() {
        let field = Arc::new(Field::with_modulus(3, 2, Some(vec![2, 2, 1])).unwrap());
        let code = linear_mds(&field, 3, 2).unwrap();
        let text = write_code(&code);
        assert!(text.lines().nth(1).unwrap().starts_with("LINEAR 3 2 2 2 1"));
        let back = read(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(back.verify(), Ok(()));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let cases = [
            ("", "line 1"),
            ("FOO 1 2\n", "line 1"),
            ("SQS 4 1\n0 1 2\n", "line 2"),
            ("SQS 4 2\n0 1 2 3\n", "line 1"),
            ("CODE 3 3 2\n0 0 0\n1 1 x\n", "line 3"),
            ("CODE 3 3 2\n0 0 0\n\n1 1 5\n", "line 4"),
            ("LATIN 2 2\n0 1\n1\n", "line 4"),
            ("BBD 8\nG1 0 1 2 3\nG3 4 5 6 7\n", "line 3"),
        ];
        for (text, line) in cases {
            match read(text) {
                Err(Error::Malformed(m)) => assert!(m.starts_with(line), "{text:?}: {m}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn corrupted_code_fails_verification() {
        let code = linear_mds(&Arc::new(Field::new(3, 2).unwrap()), 3, 2).unwrap();
        let text = write_code(&code).replacen("\n0 0 0\n", "\n0 0 1\n", 1);
        let back = read(&text).unwrap();
        assert!(back.verify().is_err());
    }
}
