//! AlgebraFile: a line-oriented text format for structure tables.
//!
//! ```text
//! # comment
//! format 1
//! kind leibniz
//! basis e:0 h:0 f:0
//! bracket h e = 2 e
//! bracket e f = 1 h
//! form h h = 2
//! ```
//!
//! Dialgebras use `kind dialgebra`, `left a b = …` for `a ⊣ b`,
//! `right a b = …` for `a ⊢ b` and an optional `bar_unit …`. A right-hand
//! side is a list of `coefficient name` pairs; coefficients are integers or
//! `p/q`. Missing entries are zero.

use std::fmt::Write as _;

use crate::catalog::Structure;
use crate::error::{Error, Result};
use crate::graded::{
    BilinearForm, GradedBasis, LeibnizSuperalgebra, Parity, SuperDialgebra, Table,
};
use crate::linalg::{format_scalar, parse_scalar, Scalar, SparseVec};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Leibniz,
    Dialgebra,
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (i, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((i, k + 1)),
            (true, Some((s, col))) => {
                out.push(Token {
                    text: &line[s..i],
                    col,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, col)) = start {
        out.push(Token {
            text: &line[s..],
            col,
        });
    }
    out
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// `(line, keyword, (token, column) list)`
type Entry = (usize, String, Vec<(String, usize)>);

struct Parser {
    kind: Option<Kind>,
    version_seen: bool,
    basis: Vec<(String, Parity)>,
    entries: Vec<Entry>,
}

fn resolve(basis: &GradedBasis, t: &(String, usize), line: usize) -> Result<usize> {
    basis
        .index_of(&t.0)
        .ok_or_else(|| err(line, t.1, format!("unknown basis name `{}`", t.0)))
}

/// `c1 name1 c2 name2 …`
fn combination(basis: &GradedBasis, toks: &[(String, usize)], line: usize) -> Result<SparseVec> {
    if toks.len() == 1 && parse_scalar(&toks[0].0).is_some_and(|c| c == crate::linalg::zero()) {
        return Ok(SparseVec::zero());
    }
    if toks.len() % 2 == 1 {
        let last = &toks[toks.len() - 1];
        return Err(err(line, last.1, "expected `coefficient name` pairs"));
    }
    let mut v = SparseVec::zero();
    for pair in toks.chunks(2) {
        let c = parse_scalar(&pair[0].0).ok_or_else(|| {
            err(
                line,
                pair[0].1,
                format!("`{}` is not a rational literal", pair[0].0),
            )
        })?;
        let i = resolve(basis, &pair[1], line)?;
        v.add_scaled(&c, &SparseVec::unit(i));
    }
    Ok(v)
}

/// Parses an AlgebraFile.
pub fn parse(text: &str) -> Result<Structure> {
    let mut p = Parser {
        kind: None,
        version_seen: false,
        basis: Vec::new(),
        entries: Vec::new(),
    };
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(first) = toks.first() else { continue };
        match first.text {
            "format" => {
                let v = toks
                    .get(1)
                    .ok_or_else(|| err(line, first.col, "missing format version"))?;
                if v.text.parse::<u32>().ok() != Some(FORMAT_VERSION) {
                    return Err(err(
                        line,
                        v.col,
                        format!("unsupported format version `{}`", v.text),
                    ));
                }
                p.version_seen = true;
            }
            "kind" => {
                let v = toks
                    .get(1)
                    .ok_or_else(|| err(line, first.col, "missing kind"))?;
                p.kind = Some(match v.text {
                    "leibniz" => Kind::Leibniz,
                    "dialgebra" => Kind::Dialgebra,
                    other => return Err(err(line, v.col, format!("unknown kind `{other}`"))),
                });
            }
            "basis" => {
                for t in &toks[1..] {
                    let (name, par) = t
                        .text
                        .rsplit_once(':')
                        .ok_or_else(|| err(line, t.col, "basis entries are `name:parity`"))?;
                    let parity = match par {
                        "0" => Parity::Even,
                        "1" => Parity::Odd,
                        _ => {
                            return Err(err(
                                line,
                                t.col + name.chars().count() + 1,
                                "parity must be 0 or 1",
                            ))
                        }
                    };
                    if name.is_empty() {
                        return Err(err(line, t.col, "empty basis name"));
                    }
                    if p.basis.iter().any(|(b, _)| b == name) {
                        return Err(err(line, t.col, format!("duplicate basis name `{name}`")));
                    }
                    p.basis.push((name.to_string(), parity));
                }
            }
            kw @ ("bracket" | "left" | "right" | "form" | "bar_unit") => {
                let rest = toks[1..]
                    .iter()
                    .map(|t| (t.text.to_string(), t.col))
                    .collect();
                p.entries.push((line, kw.to_string(), rest));
            }
            other => return Err(err(line, first.col, format!("unknown keyword `{other}`"))),
        }
    }
    if !p.version_seen {
        return Err(err(1, 1, "missing `format 1` line"));
    }
    let kind = p.kind.ok_or_else(|| err(1, 1, "missing `kind` line"))?;
    let basis = GradedBasis::new(p.basis.clone())?;
    let d = basis.dim();
    let mut first = Table::zero(d, d, d);
    let mut second = Table::zero(d, d, d);
    let mut form: Option<BilinearForm> = None;
    let mut bar_unit = None;
    for (line, kw, toks) in &p.entries {
        let line = *line;
        let allowed = match kind {
            Kind::Leibniz => matches!(kw.as_str(), "bracket" | "form"),
            Kind::Dialgebra => matches!(kw.as_str(), "left" | "right" | "bar_unit"),
        };
        if !allowed {
            return Err(err(
                line,
                1,
                format!("`{kw}` is not allowed in this kind of file"),
            ));
        }
        if kw == "bar_unit" {
            bar_unit = Some(combination(&basis, toks, line)?);
            continue;
        }
        if toks.len() < 3 || toks[2].0 != "=" {
            let col = toks.get(2).or(toks.last()).map_or(1, |t| t.1);
            return Err(err(line, col, format!("expected `{kw} a b = …`")));
        }
        let a = resolve(&basis, &toks[0], line)?;
        let b = resolve(&basis, &toks[1], line)?;
        if kw == "form" {
            let t = toks
                .get(3)
                .ok_or_else(|| err(line, toks[2].1, "missing form value"))?;
            let c: Scalar = parse_scalar(&t.0)
                .ok_or_else(|| err(line, t.1, format!("`{}` is not a rational literal", t.0)))?;
            form.get_or_insert_with(|| BilinearForm::zero(d))
                .set(a, b, c);
            continue;
        }
        let v = combination(&basis, &toks[3..], line)?;
        let table = if kw == "right" {
            &mut second
        } else {
            &mut first
        };
        table.set(a, b, v)?;
    }
    Ok(match kind {
        Kind::Leibniz => Structure::Leibniz {
            algebra: LeibnizSuperalgebra::new(basis, first)?,
            form,
            coefficients: None,
        },
        Kind::Dialgebra => {
            let dia = SuperDialgebra::new(basis, first, second)?;
            Structure::Dialgebra(match bar_unit {
                Some(u) => dia.with_bar_unit(u)?,
                None => dia,
            })
        }
    })
}

fn write_basis(out: &mut String, basis: &GradedBasis) {
    out.push_str("basis");
    for i in 0..basis.dim() {
        let _ = write!(
            out,
            " {}:{}",
            basis.name(i),
            u8::from(basis.parity(i).is_odd())
        );
    }
    out.push('\n');
}

fn write_combination(out: &mut String, basis: &GradedBasis, v: &SparseVec) {
    for (i, c) in v.iter() {
        let _ = write!(out, " {} {}", format_scalar(c), basis.name(i));
    }
}

fn write_table(out: &mut String, kw: &str, basis: &GradedBasis, t: &Table) {
    for (i, j, v) in t.iter() {
        if v.is_zero() {
            continue;
        }
        let _ = write!(out, "{kw} {} {} =", basis.name(i), basis.name(j));
        write_combination(out, basis, v);
        out.push('\n');
    }
}

pub fn serialize_leibniz(l: &LeibnizSuperalgebra, form: Option<&BilinearForm>) -> String {
    let mut out = format!("format {FORMAT_VERSION}\nkind leibniz\n");
    write_basis(&mut out, l.basis());
    write_table(&mut out, "bracket", l.basis(), l.table());
    if let Some(f) = form {
        for (i, j, c) in f.iter() {
            if *c != crate::linalg::zero() {
                let _ = writeln!(
                    out,
                    "form {} {} = {}",
                    l.basis().name(i),
                    l.basis().name(j),
                    format_scalar(c)
                );
            }
        }
    }
    out
}

pub fn serialize_dialgebra(d: &SuperDialgebra) -> String {
    let mut out = format!("format {FORMAT_VERSION}\nkind dialgebra\n");
    write_basis(&mut out, d.basis());
    write_table(&mut out, "left", d.basis(), d.left_table());
    write_table(&mut out, "right", d.basis(), d.right_table());
    if let Some(u) = d.bar_unit() {
        out.push_str("bar_unit");
        write_combination(&mut out, d.basis(), u);
        out.push('\n');
    }
    out
}

/// Serializes the underlying table of any catalog structure.
pub fn serialize(s: &Structure) -> String {
    match s {
        Structure::Leibniz { algebra, form, .. } => serialize_leibniz(algebra, form.as_ref()),
        Structure::Dialgebra(d) => serialize_dialgebra(d),
        Structure::FreeLeibniz(f) => serialize_leibniz(&f.algebra, None),
        Structure::FreeDialgebra(f) => serialize_dialgebra(&f.dialgebra),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lookup, osp12};

    #[test]
    fn osp12_round_trip() {
        let (l, f) = osp12();
        let text = serialize_leibniz(&l, Some(&f));
        assert!(text.contains("bracket X+ X- = 1/2 H"));
        match parse(&text).unwrap() {
            Structure::Leibniz { algebra, form, .. } => {
                assert_eq!(algebra, l);
                assert_eq!(form.unwrap(), f);
            }
            _ => panic!("expected a Leibniz file"),
        }
    }

    #[test]
    fn dialgebra_round_trip() {
        let s = lookup("trunc_poly:3").unwrap();
        let text = serialize(&s);
        let Structure::Dialgebra(d) = parse(&text).unwrap() else {
            panic!()
        };
        let Structure::Dialgebra(orig) = s else {
            panic!()
        };
        assert_eq!(d, orig);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("format 1\nkind leibniz\nbasis a:0 b:0\nbracket a c = 1 a\n").unwrap_err();
        assert_eq!(e, err(4, 11, "unknown basis name `c`"));
        let e = parse("format 1\nkind leibniz\nbasis a:0\nbracket a a = 0.5 a\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 4,
                col: 15,
                ..
            }
        ));
        let e = parse("format 1\nkind leibniz\nbasis a:2\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 3,
                col: 9,
                ..
            }
        ));
        assert!(matches!(
            parse("kind leibniz\n").unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn comments_and_zero_rhs() {
        let text =
            "format 1 # v1\nkind leibniz\nbasis a:0 b:1\n\nbracket a b = 0\nbracket b b = -2/4 a\n";
        let Structure::Leibniz { algebra, .. } = parse(text).unwrap() else {
            panic!()
        };
        assert!(algebra.bracket(0, 1).is_zero());
        assert_eq!(
            *algebra.bracket(1, 1),
            SparseVec::single(0, crate::linalg::rat(-1, 2))
        );
    }
}
