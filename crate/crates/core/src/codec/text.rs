//! Line-oriented text files for star packings and cycle factors.
//!
//! ```text
//! starpack-packing v1
//! vertices 80
//! star 1 2 5 21
//! ```
//!
//! ```text
//! starpack-cycles v1
//! vertices 180
//! cycle 1 2 3 4 5
//! ```
//!
//! Vertex numbers are 1-based. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::packing::{CycleFactor, Star, StarPacking};

pub const PACKING_HEADER: &str = "starpack-packing v1";
pub const CYCLES_HEADER: &str = "starpack-cycles v1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

pub fn write_star_packing(vertices: usize, p: &StarPacking) -> String {
    let mut out = format!("{PACKING_HEADER}\nvertices {vertices}\n");
    for s in &p.stars {
        let [c, a, b, d] = s.vertices().map(|v| v + 1);
        writeln!(out, "star {c} {a} {b} {d}").unwrap();
    }
    out
}

pub fn write_cycle_factor(vertices: usize, f: &CycleFactor) -> String {
    let mut out = format!("{CYCLES_HEADER}\nvertices {vertices}\n");
    for c in &f.cycles {
        out.push_str("cycle");
        for v in c {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Returns the declared vertex count and the packing.
pub fn parse_star_packing(text: &str) -> Result<(usize, StarPacking), TextError> {
    let (n, rows) = parse(text, PACKING_HEADER, "star")?;
    let mut stars = Vec::with_capacity(rows.len());
    for (line, v) in rows {
        let [center, a, b, c] = v[..] else {
            return Err(TextError::Malformed {
                line,
                message: "a star has a center and three leaves".into(),
            });
        };
        stars.push(Star {
            center,
            leaves: [a, b, c],
        });
    }
    Ok((n, StarPacking::new(stars)))
}

pub fn parse_cycle_factor(text: &str) -> Result<(usize, CycleFactor), TextError> {
    let (n, rows) = parse(text, CYCLES_HEADER, "cycle")?;
    Ok((
        n,
        CycleFactor {
            cycles: rows.into_iter().map(|(_, v)| v).collect(),
        },
    ))
}

type Rows = Vec<(usize, Vec<usize>)>;

fn parse(text: &str, header: &'static str, tag: &str) -> Result<(usize, Rows), TextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, l)) if l == header => {}
        _ => return Err(TextError::MissingHeader(header)),
    }
    let bad = |line: usize, message: String| TextError::Malformed { line, message };
    let mut n = None;
    let mut rows = Vec::new();
    for (line, l) in lines {
        let mut words = l.split_whitespace();
        let word = words.next().unwrap();
        let nums = words
            .map(|w| w.parse::<usize>().map_err(|_| bad(line, format!("`{w}` is not a number"))))
            .collect::<Result<Vec<_>, _>>()?;
        match word {
            "vertices" if n.is_none() && nums.len() == 1 => n = Some(nums[0]),
            w if w == tag => {
                let Some(n) = n else {
                    return Err(bad(line, "`vertices` must come first".into()));
                };
                if let Some(&v) = nums.iter().find(|&&v| v == 0 || v > n) {
                    return Err(bad(line, format!("vertex {v} is outside 1..={n}")));
                }
                rows.push((line, nums.iter().map(|v| v - 1).collect()));
            }
            other => return Err(bad(line, format!("unexpected `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| bad(0, "missing `vertices` line".into()))?;
    Ok((n, rows))
}
