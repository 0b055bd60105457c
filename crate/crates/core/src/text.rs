//! Text formats: the `PLR r s n` grid file, cycle notation and group listings.
//!
//! A grid file looks like
//!
//! ```text
//! PLR 2 3 3
//! 1 2 3
//! . 1 .
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use thiserror::Error;

use crate::error::PlrError;
use crate::group::AutotopismGroup;
use crate::perm::Permutation;
use crate::plr::PartialLatinRectangle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid rectangle: {0}")]
    Validation(#[from] PlrError),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> TextError {
    TextError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into `(column, token)` pairs with one-based char columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((s, &line[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_plr(text: &str) -> Result<PartialLatinRectangle, TextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let Some((hline, header)) = lines.next() else {
        return Err(parse_err(1, 1, "missing `PLR r s n` header"));
    };
    let htoks = tokens(header);
    if htoks.len() != 4 || htoks[0].1 != "PLR" {
        return Err(parse_err(hline, 1, "expected header `PLR r s n`"));
    }
    let mut dims = [0usize; 3];
    for (slot, &(column, tok)) in dims.iter_mut().zip(&htoks[1..]) {
        *slot = tok
            .parse()
            .map_err(|_| parse_err(hline, column, format!("bad dimension `{tok}`")))?;
    }
    let [rows, cols, symbols] = dims;

    let mut cells = Vec::with_capacity(rows * cols);
    let mut last_line = hline;
    for row in 0..rows {
        let Some((lno, line)) = lines.next() else {
            return Err(parse_err(
                last_line + 1,
                1,
                format!("expected {rows} rows, found {row}"),
            ));
        };
        last_line = lno;
        let toks = tokens(line);
        if toks.len() != cols {
            return Err(parse_err(
                lno,
                1,
                format!("expected {cols} cells, found {}", toks.len()),
            ));
        }
        for (column, tok) in toks {
            if tok == "." {
                cells.push(None);
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(lno, column, format!("bad cell `{tok}`")))?;
            if v == 0 {
                return Err(PlrError::SymbolOutOfRange {
                    symbol: 0,
                    n: symbols,
                }
                .into());
            }
            cells.push(Some(v - 1));
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, 1, "unexpected trailing line"));
    }
    Ok(PartialLatinRectangle::from_cells(
        rows, cols, symbols, cells,
    )?)
}

pub fn write_plr(l: &PartialLatinRectangle) -> String {
    format!("PLR {} {} {}\n{}", l.rows(), l.cols(), l.symbols(), l)
}

/// Parses one-based cycle notation such as `(1 6)(3 4)` or `()`, or a
/// one-line image list such as `2 1 3`.
pub fn parse_permutation(degree: usize, text: &str) -> Result<Permutation, PlrError> {
    let t = text.trim();
    if !t.starts_with('(') {
        let image = t
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| PlrError::BadCycle(t.to_string()))?;
        if image.len() != degree {
            return Err(PlrError::BadCycle(t.to_string()));
        }
        return Permutation::from_images(image);
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let inner_end = rest
            .find(')')
            .filter(|_| rest.starts_with('('))
            .ok_or_else(|| PlrError::BadCycle(t.to_string()))?;
        let inner = &rest[1..inner_end];
        let cycle = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PlrError::BadCycle(t.to_string()))?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[inner_end + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs)
}

/// `order N`, the factor line, then one reduced autotopism per line in
/// sorted order.
pub fn format_group(g: &AutotopismGroup) -> String {
    let mut lines: Vec<String> = g
        .reduced_autotopisms
        .iter()
        .map(|t| t.to_string())
        .collect();
    lines.sort();
    let mut out = format!(
        "order {}\nfactors {}! {}! {}!\n",
        g.total_order, g.empty_rows, g.empty_cols, g.unused_symbols
    );
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::plr::Isotopism;

    #[test]
    fn parses_fixtures() {
        let l = parse_plr(fixtures::EQ1_TEXT).unwrap();
        assert_eq!(l.entry_count(), 25);
        let l = parse_plr("PLR 1 1 1\n1\n").unwrap();
        assert_eq!(l.get(0, 0), Some(0));
    }

    #[test]
    fn symbol_out_of_range() {
        let e = parse_plr("PLR 2 2 7\n8 .\n. .\n").unwrap_err();
        assert_eq!(
            e,
            TextError::Validation(PlrError::SymbolOutOfRange { symbol: 8, n: 7 })
        );
    }

    #[test]
    fn diagnostics_point_at_token() {
        let e = parse_plr("PLR 2 2 3\n1 .\n.  x\n").unwrap_err();
        assert_eq!(
            e,
            TextError::Parse {
                line: 3,
                column: 4,
                message: "bad cell `x`".into()
            }
        );
        assert!(matches!(
            parse_plr("PLR 2 2 3\n1 .\n"),
            Err(TextError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_plr("PL 2 2 3\n"),
            Err(TextError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_plr("PLR 1 2 3\n1\n"),
            Err(TextError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn write_round_trip() {
        let l = fixtures::eq1();
        assert_eq!(parse_plr(&write_plr(&l)).unwrap(), l);
        let messy = "# comment\nPLR 2 2 2\n\n1   .\n  . 2\n";
        assert_eq!(
            write_plr(&parse_plr(messy).unwrap()),
            "PLR 2 2 2\n1 .\n. 2\n"
        );
        let empty = PartialLatinRectangle::empty(0, 0, 0);
        assert_eq!(parse_plr(&write_plr(&empty)).unwrap(), empty);
    }

    #[test]
    fn permutation_notation() {
        let p = parse_permutation(9, "(1 5)(3 8)(4 6)(7 9)").unwrap();
        assert_eq!(p.to_string(), "(1 5)(3 8)(4 6)(7 9)");
        assert!(parse_permutation(3, "()").unwrap().is_identity());
        assert_eq!(parse_permutation(3, "2 1 3").unwrap().images(), &[1, 0, 2]);
        assert!(parse_permutation(3, "2 1").is_err());
        assert!(parse_permutation(3, "(1 2").is_err());
    }

    #[test]
    fn group_listing() {
        let eq1 = fixtures::eq1();
        let g = AutotopismGroup::new(
            vec![fixtures::eq1_autotopism(), Isotopism::identity(6, 9, 7)],
            0,
            0,
            0,
        );
        assert_eq!(
            format_group(&g),
            "order 2\nfactors 0! 0! 0!\n() | () | ()\n(1 6)(3 4) | (1 5)(3 8)(4 6)(7 9) | (1 2)(4 5)(6 7)\n"
        );
        let red = eq1.reduce();
        assert_eq!(
            format_group(&AutotopismGroup::trivial(&red)).lines().next(),
            Some("order 1")
        );
        let empty = PartialLatinRectangle::empty(2, 3, 4).reduce();
        let text = format_group(&AutotopismGroup::trivial(&empty));
        assert!(text.starts_with("order 288\nfactors 2! 3! 4!\n"));
    }
}
