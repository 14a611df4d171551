//! Text format for restricted Lie algebras.
//!
//! ```text
//! p = 3
//! basis = x y z
//! [brackets]
//! x y = z        # [x, y] = z
//! [pmap]
//! z = 0
//! ```

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gfp::Field;
use crate::rla::RestrictedLieAlgebra;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Brackets,
    Pmap,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

struct Ctx<'a> {
    names: &'a [String],
    line: usize,
}

impl Ctx<'_> {
    fn index(&self, name: &str) -> Result<usize> {
        if !is_name(name) {
            return Err(syntax(self.line, format!("expected a basis name, found `{name}`")));
        }
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName { line: self.line, name: name.into() })
    }

    fn lincomb(&self, text: &str) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.names.len()];
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        if text.is_empty() {
            return Err(syntax(self.line, "empty right-hand side"));
        }
        for term in text.split('+') {
            let term = term.trim();
            let (coeff, name) = match term.split_once('*') {
                Some((c, n)) => {
                    let c = c.trim();
                    let c: i64 =
                        c.parse().map_err(|_| syntax(self.line, format!("bad coefficient `{c}`")))?;
                    (c, n.trim())
                }
                None => (1, term),
            };
            if name.is_empty() {
                return Err(syntax(self.line, "empty term"));
            }
            out[self.index(name)?] += coeff;
        }
        Ok(out)
    }
}

/// Parses and validates; axiom violations are errors.
pub fn parse(text: &str) -> Result<RestrictedLieAlgebra> {
    let l = parse_unvalidated(text)?;
    let v = l.validate();
    if v.is_empty() {
        Ok(l)
    } else {
        Err(Error::Axiom(v))
    }
}

/// Parses the grammar only.
pub fn parse_unvalidated(text: &str) -> Result<RestrictedLieAlgebra> {
    let mut field: Option<Field> = None;
    let mut names: Option<Vec<String>> = None;
    let mut section = Section::Header;
    let mut seen_sections = HashSet::new();
    let mut brackets: Vec<(usize, usize, Vec<i64>)> = Vec::new();
    let mut pmaps: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut defined_brackets = HashSet::new();
    let mut defined_pmaps = HashSet::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('[') {
            let s = match content {
                "[brackets]" => Section::Brackets,
                "[pmap]" => Section::Pmap,
                other => return Err(syntax(line, format!("unknown section `{other}`"))),
            };
            if names.is_none() || field.is_none() {
                return Err(syntax(line, "sections must follow `p =` and `basis =`"));
            }
            if !seen_sections.insert(content.to_string()) {
                return Err(syntax(line, format!("repeated section `{content}`")));
            }
            section = s;
            continue;
        }
        let (lhs, rhs) = content.split_once('=').ok_or_else(|| syntax(line, "expected `=`"))?;
        let lhs = lhs.trim();
        match section {
            Section::Header => match lhs {
                "p" => {
                    if field.is_some() {
                        return Err(syntax(line, "repeated `p =`"));
                    }
                    let p: u32 = rhs
                        .trim()
                        .parse()
                        .map_err(|_| syntax(line, format!("bad prime `{}`", rhs.trim())))?;
                    field = Some(Field::new(p).map_err(|e| syntax(line, e.to_string()))?);
                }
                "basis" => {
                    if names.is_some() {
                        return Err(syntax(line, "repeated `basis =`"));
                    }
                    let list: Vec<String> = rhs.split_whitespace().map(String::from).collect();
                    let mut uniq = HashSet::new();
                    for n in &list {
                        if !is_name(n) {
                            return Err(syntax(line, format!("bad basis name `{n}`")));
                        }
                        if !uniq.insert(n.clone()) {
                            return Err(syntax(line, format!("duplicate basis name `{n}`")));
                        }
                    }
                    names = Some(list);
                }
                other => return Err(syntax(line, format!("unknown key `{other}`"))),
            },
            Section::Brackets => {
                let ctx = Ctx { names: names.as_deref().unwrap(), line };
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(syntax(line, "bracket line needs two basis names before `=`"));
                }
                let (a, b) = (ctx.index(parts[0])?, ctx.index(parts[1])?);
                if a == b {
                    return Err(syntax(
                        line,
                        format!("diagonal bracket `{} {}` is not allowed", parts[0], parts[1]),
                    ));
                }
                if a > b {
                    return Err(syntax(
                        line,
                        format!("`{}` must be declared before `{}`", parts[0], parts[1]),
                    ));
                }
                if !defined_brackets.insert((a, b)) {
                    return Err(syntax(line, "bracket defined twice"));
                }
                brackets.push((a, b, ctx.lincomb(rhs)?));
            }
            Section::Pmap => {
                let ctx = Ctx { names: names.as_deref().unwrap(), line };
                let a = ctx.index(lhs)?;
                if !defined_pmaps.insert(a) {
                    return Err(syntax(line, "p-map defined twice"));
                }
                pmaps.push((a, ctx.lincomb(rhs)?));
            }
        }
    }
    let last = text.lines().count().max(1);
    let field = field.ok_or_else(|| syntax(last, "missing `p =`"))?;
    let names = names.ok_or_else(|| syntax(last, "missing `basis =`"))?;
    let mut b = RestrictedLieAlgebra::builder(field, names);
    for (i, j, v) in brackets {
        b.bracket(i, j, &v)?;
    }
    for (i, v) in pmaps {
        b.pmap(i, &v)?;
    }
    Ok(b.build_unchecked())
}

fn lincomb_text(l: &RestrictedLieAlgebra, v: &[u8]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| if c == 1 { l.names()[k].clone() } else { format!("{c}*{}", l.names()[k]) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Canonical text; only nonzero entries are written.
pub fn serialize(l: &RestrictedLieAlgebra) -> String {
    let mut s = format!("p = {}\nbasis = {}\n", l.p(), l.names().join(" "));
    let n = l.dim();
    s.push_str("[brackets]\n");
    for i in 0..n {
        for j in (i + 1)..n {
            let v = l.basis_bracket(i, j);
            if v.iter().any(|&c| c != 0) {
                s.push_str(&format!("{} {} = {}\n", l.names()[i], l.names()[j], lincomb_text(l, v)));
            }
        }
    }
    s.push_str("[pmap]\n");
    for i in 0..n {
        let v = l.basis_pmap(i);
        if v.iter().any(|&c| c != 0) {
            s.push_str(&format!("{} = {}\n", l.names()[i], lincomb_text(l, v)));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEIS: &str = "p = 3\nbasis = x y z\n[brackets]\nx y = z  # central\n[pmap]\nz = 0\n";

    #[test]
    fn heisenberg_file() {
        let l = parse(HEIS).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.validate().is_empty());
        assert_eq!(l.basis_bracket(1, 0), &[0, 0, 2]);
    }

    #[test]
    fn coefficients_mod_p() {
        let l = parse_unvalidated("p = 5\nbasis = a b\n[brackets]\na b = 7*a + -1*b + b\n").unwrap();
        assert_eq!(l.basis_bracket(0, 1), &[2, 0]);
    }

    #[test]
    fn syntax_errors() {
        let e = parse("p = 2\nbasis = x z\n[brackets]\nx x = z\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e:?}");
        let e = parse("p = 2\nbasis = x z\n[brackets]\nz x = z\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        let e = parse("p = 2\nbasis = x y\n[brackets]\nx y = q\n").unwrap_err();
        assert_eq!(e, Error::UnknownName { line: 4, name: "q".into() });
        assert!(matches!(parse("p = 4\nbasis = x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("basis = x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("p = 2\nbasis = x\n[pmap]\nx = 2*\n"), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn axiom_violation_surfaces() {
        // [x,y] = x with x^[2] = x breaks ad(x^[2]) = (ad x)^2
        let e = parse("p = 2\nbasis = x y\n[brackets]\nx y = x\n[pmap]\nx = x\n").unwrap_err();
        assert!(matches!(e, Error::Axiom(_)));
    }

    #[test]
    fn round_trip() {
        let l = parse(HEIS).unwrap();
        assert_eq!(parse(&serialize(&l)).unwrap(), l);
    }
}
