//! The line-oriented hypermap file format.
//!
//! ```text
//! # comment
//! darts: 8
//! alpha: (4 3 2 1)(5 7 8 6)
//! sigma: (7 1 6 3)(5 2 8 4)
//! special: 2 5
//! ```
//!
//! Labels are 1-based. The `special` line is optional. Blank lines and lines
//! starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::hypermap::Hypermap;
use crate::perm::parse_cycle_notation;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypermapFile {
    pub hypermap: Hypermap,
    /// 0-based special darts from the `special` line, not yet validated
    /// against any orbit structure.
    pub special: Option<Vec<usize>>,
}

struct Line<'a> {
    number: usize,
    /// 1-based column where `value` starts.
    value_column: usize,
    value: &'a str,
}

fn expect_key<'a>(line: Option<(usize, &'a str)>, key: &str) -> Result<Line<'a>> {
    let Some((number, text)) = line else {
        return Err(Error::parse(0, 0, format!("missing '{key}:' line")));
    };
    let leading = text.len() - text.trim_start().len();
    let rest = &text[leading..];
    let Some(after) = rest.strip_prefix(key).and_then(|r| r.strip_prefix(':')) else {
        return Err(Error::parse(
            number,
            leading + 1,
            format!("expected '{key}:'"),
        ));
    };
    let value_offset = leading + key.len() + 1;
    let trimmed = after.trim_start();
    let value_column = value_offset + (after.len() - trimmed.len()) + 1;
    Ok(Line {
        number,
        value_column,
        value: trimmed.trim_end(),
    })
}

fn parse_labels(line: &Line<'_>, n: usize) -> Result<Vec<usize>> {
    let mut labels = Vec::new();
    let mut offset = 0;
    for token in line.value.split(|c: char| c.is_whitespace() || c == ',') {
        let column = line.value_column + offset;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let label: usize = token.parse().map_err(|_| {
            Error::parse(line.number, column, format!("invalid dart label {token:?}"))
        })?;
        if label == 0 || label > n {
            return Err(Error::parse(
                line.number,
                column,
                format!("dart {label} out of range 1..={n}"),
            ));
        }
        if labels.contains(&(label - 1)) {
            return Err(Error::parse(
                line.number,
                column,
                format!("dart {label} listed twice"),
            ));
        }
        labels.push(label - 1);
    }
    Ok(labels)
}

/// Parses a hypermap file. Syntax errors carry line and column; a
/// non-transitive pair is reported as [`Error::NotTransitive`].
pub fn parse_hypermap_file(text: &str) -> Result<HypermapFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let last_line = text.lines().count();
    let eof = |key: &str| Error::parse(last_line + 1, 1, format!("missing '{key}:' line"));

    let darts = expect_key(lines.next(), "darts").map_err(|e| match e {
        Error::Parse { line: 0, .. } => eof("darts"),
        e => e,
    })?;
    let n: usize = darts
        .value
        .parse()
        .map_err(|_| Error::parse(darts.number, darts.value_column, "expected a dart count"))?;
    if n == 0 {
        return Err(Error::parse(
            darts.number,
            darts.value_column,
            "a hypermap needs at least one dart",
        ));
    }

    let mut perms = Vec::with_capacity(2);
    for key in ["alpha", "sigma"] {
        let line = expect_key(lines.next(), key).map_err(|e| match e {
            Error::Parse { line: 0, .. } => eof(key),
            e => e,
        })?;
        perms.push(parse_cycle_notation(
            line.value,
            n,
            line.number,
            line.value_column,
        )?);
    }

    let special = match lines.next() {
        None => None,
        Some(next) => {
            let line = expect_key(Some(next), "special")?;
            Some(parse_labels(&line, n)?)
        }
    };
    if let Some((number, _)) = lines.next() {
        return Err(Error::parse(number, 1, "unexpected trailing content"));
    }

    let sigma = perms.pop().expect("two permutations");
    let alpha = perms.pop().expect("two permutations");
    Ok(HypermapFile {
        hypermap: Hypermap::new(alpha, sigma)?,
        special,
    })
}

/// Renders a hypermap (and optionally 0-based special darts) in file format.
pub fn render_hypermap_file(h: &Hypermap, special: Option<&[usize]>) -> String {
    let mut out = format!(
        "darts: {}\nalpha: {}\nsigma: {}\n",
        h.degree(),
        h.alpha(),
        h.sigma()
    );
    if let Some(special) = special {
        let labels: Vec<String> = special.iter().map(|d| (d + 1).to_string()).collect();
        out.push_str(&format!("special: {}\n", labels.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = "# worked example\n\
        darts: 8\n\
        alpha: (4 3 2 1)(5 7 8 6)\n\
        sigma: (7 1 6 3)(5 2 8 4)\n\
        special: 2 5\n";

    #[test]
    fn parses_worked_example() {
        let file = parse_hypermap_file(WORKED).unwrap();
        assert_eq!(file.hypermap.degree(), 8);
        assert_eq!(file.special, Some(vec![1, 4]));
        assert_eq!(file.hypermap.faces().len(), 4);
    }

    #[test]
    fn render_round_trips() {
        let file = parse_hypermap_file(WORKED).unwrap();
        let text = render_hypermap_file(&file.hypermap, file.special.as_deref());
        assert_eq!(parse_hypermap_file(&text).unwrap(), file);
        let h = Hypermap::random(1, 0);
        assert_eq!(
            render_hypermap_file(&h, None),
            "darts: 1\nalpha: ()\nsigma: ()\n"
        );
        assert_eq!(
            parse_hypermap_file(&render_hypermap_file(&h, None))
                .unwrap()
                .hypermap,
            h
        );
    }

    #[test]
    fn error_positions() {
        let cases = [
            ("darts: 8\nalpha: (4 3 2 1)(5 7 9 6)\n", 2, 22),
            ("darts: x\n", 1, 8),
            ("dart: 3\n", 1, 1),
            ("darts: 3\nsigma: (1 2 3)\n", 2, 1),
            ("darts: 3\nalpha: (1 2 3)\n", 3, 1),
            ("darts: 3\nalpha: (1 2 3)\nsigma: ()\nspecial: 1 4\n", 4, 12),
            ("darts: 3\nalpha: (1 2 3)\nsigma: ()\nspecial: 1 1\n", 4, 12),
            (
                "darts: 3\nalpha: (1 2 3)\nsigma: ()\nspecial: 1\nextra\n",
                5,
                1,
            ),
            ("  darts:   3\n  alpha: (1 2 3)(1)\n", 2, 18),
        ];
        for (text, line, column) in cases {
            match parse_hypermap_file(text) {
                Err(Error::Parse {
                    line: l, column: c, ..
                }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn non_transitive_is_a_validation_error() {
        let text = "darts: 2\nalpha: ()\nsigma: ()\n";
        assert!(matches!(
            parse_hypermap_file(text),
            Err(Error::NotTransitive { .. })
        ));
    }
}
