//! Plain-text element, vector and code-file syntax.
//!
//! Element tokens, read at a given tower level:
//!
//! * a decimal integer is an element code (prime-field elements are
//!   `0..p`);
//! * `w`, `w^i` are powers of the least primitive element of the top field,
//!   `u`, `u^i` of the middle field; negative exponents are allowed;
//! * `[c0,c1,...]` lists coordinates over the next-lower level, low degree
//!   first.
//!
//! A code file is a header line, optional modulus lines, then one row per
//! line:
//!
//! ```text
//! # comment
//! additive 2 1 2 6          # p k m n
//! linear 2 3 2 7 top        # p k m n [mid|top]
//! modulus mid 1 0 1 1       # coefficient codes, low degree first
//! 1 0 0 0 0 1
//! ```

use crate::error::{Error, Result};
use crate::gf::{FieldTower, Level};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    Additive,
    Linear(Level),
}

#[derive(Debug, Clone)]
pub struct CodeFile {
    pub kind: CodeKind,
    pub tower: FieldTower,
    pub n: usize,
    /// Rows as written, as element codes at the file's level.
    pub rows: Vec<Vec<u32>>,
}

impl CodeFile {
    pub fn level(&self) -> Level {
        match self.kind {
            CodeKind::Additive => Level::Top,
            CodeKind::Linear(l) => l,
        }
    }
}

fn bad(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, col, msg)
}

/// Split at whitespace and commas outside brackets, keeping 1-based
/// columns.
pub fn tokenize(s: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    let mut depth = 0usize;
    for (i, ch) in s.chars().enumerate() {
        let sep = depth == 0 && (ch.is_whitespace() || ch == ',');
        if sep {
            if !cur.is_empty() {
                out.push((start + 1, std::mem::take(&mut cur)));
            }
            continue;
        }
        if cur.is_empty() {
            start = i;
        }
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        out.push((start + 1, cur));
    }
    out
}

fn parse_power(tower: &FieldTower, sym: char, exp: &str) -> std::result::Result<u32, String> {
    let field = if sym == 'w' { tower.top() } else { tower.mid() };
    let e: i64 = if exp.is_empty() {
        1
    } else {
        exp.parse().map_err(|_| format!("bad exponent {exp:?}"))?
    };
    let group = field.order() as i64 - 1;
    Ok(field.pow(field.primitive(), e.rem_euclid(group) as u64))
}

/// Parse one element token at `level`.
pub fn parse_elem(tower: &FieldTower, level: Level, tok: &str) -> std::result::Result<u32, String> {
    let field = tower.field(level);
    let code = if let Some(inner) = tok.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| format!("unclosed bracket in {tok:?}"))?;
        let base = match level {
            Level::Top => Level::Mid,
            Level::Mid => Level::Prime,
            Level::Prime => return Err("prime-field elements have no coordinate form".into()),
        };
        let digits = tokenize(inner)
            .into_iter()
            .map(|(_, t)| parse_elem(tower, base, &t))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if digits.len() > field.degree() {
            return Err(format!(
                "{} coordinates for a degree-{} extension",
                digits.len(),
                field.degree()
            ));
        }
        let mut digits = digits;
        digits.resize(field.degree(), 0);
        field.from_digits(&digits)
    } else if let Some(rest) = tok.strip_prefix(['w', 'u']) {
        let sym = tok.chars().next().unwrap();
        let exp = match rest.strip_prefix('^') {
            Some(e) => e,
            None if rest.is_empty() => "",
            None => return Err(format!("unknown element {tok:?}")),
        };
        parse_power(tower, sym, exp)?
    } else {
        tok.parse::<u32>().map_err(|_| format!("unknown element {tok:?}"))?
    };
    if !field.contains(code) {
        return Err(format!("{tok:?} is not in {field}"));
    }
    Ok(code)
}

/// Parse a comma or space separated list of elements.
pub fn parse_vector(tower: &FieldTower, level: Level, s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(s);
    tokenize(s)
        .into_iter()
        .map(|(col, t)| parse_elem(tower, level, &t).map_err(|m| bad(1, col, m)))
        .collect()
}

fn parse_usize(line: usize, col: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| bad(line, col, format!("{what} must be a nonnegative integer, got {tok:?}")))
}

/// Parse a code file.
pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut header: Option<(CodeKind, u32, usize, usize, usize)> = None;
    let mut mid_mod = None;
    let mut top_mod = None;
    let mut body: Vec<(usize, Vec<(usize, String)>)> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        let toks = tokenize(content);
        if toks.is_empty() {
            continue;
        }
        if header.is_none() {
            let (col, word) = &toks[0];
            let kind = match word.as_str() {
                "additive" if toks.len() == 5 => CodeKind::Additive,
                "linear" if toks.len() == 5 || toks.len() == 6 => {
                    let level = match toks.get(5).map(|t| t.1.as_str()) {
                        None | Some("top") => Level::Top,
                        Some("mid") => Level::Mid,
                        Some(other) => {
                            return Err(bad(line_no, toks[5].0, format!("unknown level {other:?}")))
                        }
                    };
                    CodeKind::Linear(level)
                }
                _ => {
                    return Err(bad(
                        line_no,
                        *col,
                        "expected header \"additive p k m n\" or \"linear p k m n [mid|top]\"",
                    ))
                }
            };
            let p = parse_usize(line_no, toks[1].0, &toks[1].1, "p")? as u32;
            let k = parse_usize(line_no, toks[2].0, &toks[2].1, "k")?;
            let m = parse_usize(line_no, toks[3].0, &toks[3].1, "m")?;
            let n = parse_usize(line_no, toks[4].0, &toks[4].1, "n")?;
            header = Some((kind, p, k, m, n));
            continue;
        }
        if toks[0].1 == "modulus" {
            if !body.is_empty() {
                return Err(bad(line_no, toks[0].0, "modulus lines must precede the rows"));
            }
            let which = toks.get(1).map(|t| t.1.as_str());
            let coeffs = toks
                .iter()
                .skip(2)
                .map(|(c, t)| parse_usize(line_no, *c, t, "coefficient").map(|x| x as u32))
                .collect::<Result<Vec<_>>>()?;
            match which {
                Some("mid") => mid_mod = Some(coeffs),
                Some("top") => top_mod = Some(coeffs),
                _ => return Err(bad(line_no, toks[0].0, "expected \"modulus mid ...\" or \"modulus top ...\"")),
            }
            continue;
        }
        body.push((line_no, toks));
    }
    let (kind, p, k, m, n) = header.ok_or_else(|| bad(1, 1, "missing header line"))?;
    let tower = FieldTower::with_moduli(p, k, m, mid_mod, top_mod)?;
    let level = match kind {
        CodeKind::Additive => Level::Top,
        CodeKind::Linear(l) => l,
    };
    let mut rows = Vec::with_capacity(body.len());
    for (idx, (line_no, toks)) in body.into_iter().enumerate() {
        if toks.len() != n {
            return Err(bad(
                line_no,
                1,
                format!("row {} has {} entries, expected {n}", idx + 1, toks.len()),
            ));
        }
        let row = toks
            .iter()
            .map(|(col, t)| parse_elem(&tower, level, t).map_err(|m| bad(line_no, *col, m)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(CodeFile {
        kind,
        tower,
        n,
        rows,
    })
}

/// Render a code file that [`parse_code_file`] reads back.
pub fn render_code_file(kind: CodeKind, tower: &FieldTower, n: usize, rows: &[Vec<u32>]) -> String {
    let (p, k, m) = (tower.p(), tower.k(), tower.m());
    let mut s = match kind {
        CodeKind::Additive => format!("additive {p} {k} {m} {n}\n"),
        CodeKind::Linear(l) => format!("linear {p} {k} {m} {n} {l}\n"),
    };
    let join = |c: &[u32]| c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    s.push_str(&format!("modulus mid {}\n", join(tower.mid_modulus())));
    s.push_str(&format!("modulus top {}\n", join(tower.top_modulus())));
    for r in rows {
        let toks: Vec<String> = r.iter().map(|&x| fmt_elem(tower, x)).collect();
        s.push_str(&toks.join(" "));
        s.push('\n');
    }
    s
}

/// Display form of an element: prime-field elements as integers, otherwise
/// a power of `u` when it lies in the middle field and of `w` if not.
pub fn fmt_elem(tower: &FieldTower, code: u32) -> String {
    if code < tower.p() {
        return code.to_string();
    }
    let mid = tower.mid();
    let (sym, field) = if code < mid.order() { ("u", mid) } else { ("w", tower.top()) };
    match field.log_primitive(code) {
        Some(1) => sym.to_string(),
        Some(i) => format!("{sym}^{i}"),
        None => code.to_string(),
    }
}

pub fn fmt_vector(tower: &FieldTower, v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| fmt_elem(tower, x)).collect();
    format!("({})", parts.join(","))
}

pub fn fmt_rows(tower: &FieldTower, rows: &[Vec<u32>]) -> Vec<String> {
    rows.iter()
        .map(|r| r.iter().map(|&x| fmt_elem(tower, x)).collect::<Vec<_>>().join(" "))
        .collect()
}
