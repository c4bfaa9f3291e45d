//! Text specs naming groups: family shorthands (`C12`, `D8`, `S4`, `Q8`,
//! `E2^3`), direct products (`C3 x C4`), explicit permutation generators
//! (`perm:(1 2 3),(1 2)`), and external Cayley-table files (`file:g.json`).

use std::fmt;
use std::path::PathBuf;

use autonil_core::GroupTable;

use crate::cayley;

/// A parsed group description. `realize` turns it into a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
    /// Generators given as permutations of 1-based points; each generator
    /// is a list of cycles.
    Permutation(Vec<Vec<Vec<usize>>>),
    File(PathBuf),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

/// Parse failure, pointing at the byte where scanning gave up.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

/// Split `text` at the first top-level ` x ` separator, ignoring any
/// inside parentheses. Returns byte positions relative to `text`.
fn split_product(text: &str) -> Option<(usize, usize)> {
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'x' if depth == 0 => {
                let spaced_left = i > 0 && bytes[i - 1] == b' ';
                let spaced_right = i + 1 == bytes.len() || bytes[i + 1] == b' ';
                if spaced_left && spaced_right {
                    return Some((i - 1, (i + 2).min(bytes.len())));
                }
            }
            _ => {}
        }
    }
    None
}

/// Parse a full spec string.
pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    parse_at(text, 0)
}

fn parse_at(text: &str, base: usize) -> Result<GroupSpec, ParseError> {
    let trimmed = text.trim();
    let offset = base + (text.len() - text.trim_start().len());
    if trimmed.is_empty() {
        return err(offset, "empty group spec");
    }
    if let Some((sep_start, sep_end)) = split_product(trimmed) {
        let left = &trimmed[..sep_start];
        let right = &trimmed[sep_end..];
        if left.trim().is_empty() {
            return err(offset, "product is missing its left factor");
        }
        if right.trim().is_empty() {
            return err(offset + sep_end, "product is missing its right factor");
        }
        let l = parse_at(left, offset)?;
        let r = parse_at(right, offset + sep_end)?;
        return Ok(GroupSpec::Product(Box::new(l), Box::new(r)));
    }
    if let Some(rest) = trimmed.strip_prefix("perm:") {
        return parse_permutation(rest, offset + 5);
    }
    if let Some(rest) = trimmed.strip_prefix("file:") {
        if rest.is_empty() {
            return err(offset + 5, "file spec is missing a path");
        }
        return Ok(GroupSpec::File(PathBuf::from(rest)));
    }
    parse_family(trimmed, offset)
}

fn parse_number(digits: &str, offset: usize, what: &str) -> Result<usize, ParseError> {
    if digits.is_empty() {
        return err(offset, format!("missing {what}"));
    }
    if let Some(pos) = digits.find(|c: char| !c.is_ascii_digit()) {
        return err(
            offset + pos,
            format!("unexpected character {:?} in {what}", &digits[pos..pos + 1]),
        );
    }
    digits.parse().map_err(|_| ParseError {
        offset,
        message: format!("{what} is out of range"),
    })
}

fn parse_family(text: &str, offset: usize) -> Result<GroupSpec, ParseError> {
    if text == "Q8" {
        return Ok(GroupSpec::Quaternion8);
    }
    let mut chars = text.chars();
    let head = chars.next().expect("text is non-empty");
    let rest = chars.as_str();
    match head {
        'C' => Ok(GroupSpec::Cyclic(parse_number(
            rest,
            offset + 1,
            "cyclic group order",
        )?)),
        'D' => Ok(GroupSpec::Dihedral(parse_number(
            rest,
            offset + 1,
            "dihedral group order",
        )?)),
        'S' => Ok(GroupSpec::Symmetric(parse_number(
            rest,
            offset + 1,
            "symmetric group degree",
        )?)),
        'E' => {
            let Some(caret) = rest.find('^') else {
                return err(
                    offset + 1 + rest.len(),
                    "elementary abelian spec needs the form E<p>^<k>",
                );
            };
            let p = parse_number(&rest[..caret], offset + 1, "prime")?;
            let k = parse_number(&rest[caret + 1..], offset + 2 + caret, "exponent")?;
            Ok(GroupSpec::ElementaryAbelian { p, k })
        }
        'Q' => err(offset, format!("unknown family {text:?} (only Q8 exists)")),
        _ => err(offset, format!("unknown family {text:?}")),
    }
}

/// Cycle notation: generators separated by commas, each generator a
/// sequence of parenthesized cycles over 1-based points.
fn parse_permutation(text: &str, base: usize) -> Result<GroupSpec, ParseError> {
    if text.is_empty() {
        return err(base, "permutation spec has no generators");
    }
    let mut generators = Vec::new();
    let mut gen_start = 0usize;
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut pieces: Vec<(usize, &str)> = Vec::new();
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return err(base + i, "unmatched closing parenthesis");
                }
                depth -= 1;
            }
            b',' if depth == 0 => {
                pieces.push((gen_start, &text[gen_start..i]));
                gen_start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(base + text.len(), "unclosed cycle");
    }
    pieces.push((gen_start, &text[gen_start..]));
    for (piece_offset, piece) in pieces {
        generators.push(parse_cycles(piece, base + piece_offset)?);
    }
    Ok(GroupSpec::Permutation(generators))
}

fn parse_cycles(text: &str, base: usize) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut cycles = Vec::new();
    let mut i = 0usize;
    let bytes = text.as_bytes();
    while i < bytes.len() {
        match bytes[i] {
            b' ' => i += 1,
            b'(' => {
                let close = text[i..]
                    .find(')')
                    .map(|d| i + d)
                    .expect("cycle balance already checked");
                let inner = &text[i + 1..close];
                let mut cycle = Vec::new();
                for token in inner.split_whitespace() {
                    let token_offset =
                        base + i + 1 + (token.as_ptr() as usize - inner.as_ptr() as usize);
                    let point = parse_number(token, token_offset, "cycle point")?;
                    if point == 0 {
                        return err(token_offset, "cycle points are 1-based");
                    }
                    if cycle.contains(&point) {
                        return err(token_offset, format!("point {point} repeats in a cycle"));
                    }
                    cycle.push(point);
                }
                if cycle.is_empty() {
                    return err(base + i, "empty cycle");
                }
                cycles.push(cycle);
                i = close + 1;
            }
            other => {
                return err(
                    base + i,
                    format!("expected a cycle, found {:?}", other as char),
                )
            }
        }
    }
    if cycles.is_empty() {
        return err(base, "generator has no cycles");
    }
    Ok(cycles)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(k) => write!(f, "S{k}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
            GroupSpec::Permutation(gens) => {
                write!(f, "perm:")?;
                for (i, gen) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    for cycle in gen {
                        write!(f, "(")?;
                        for (j, point) in cycle.iter().enumerate() {
                            if j > 0 {
                                write!(f, " ")?;
                            }
                            write!(f, "{point}")?;
                        }
                        write!(f, ")")?;
                    }
                }
                Ok(())
            }
            GroupSpec::File(path) => write!(f, "file:{}", path.display()),
            GroupSpec::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

/// Everything that can go wrong turning a spec into a table.
#[derive(Debug, thiserror::Error)]
pub enum RealizeError {
    #[error("{0}")]
    Core(#[from] autonil_core::Error),
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    BadFile { path: PathBuf, message: String },
}

/// Build the table a spec describes.
pub fn realize(spec: &GroupSpec) -> Result<GroupTable, RealizeError> {
    match spec {
        GroupSpec::Cyclic(n) => Ok(GroupTable::cyclic(*n)?),
        GroupSpec::Dihedral(n) => Ok(GroupTable::dihedral(*n)?),
        GroupSpec::Symmetric(k) => Ok(GroupTable::symmetric(*k)?),
        GroupSpec::Quaternion8 => Ok(GroupTable::quaternion8()),
        GroupSpec::ElementaryAbelian { p, k } => Ok(GroupTable::elementary_abelian(*p, *k)?),
        GroupSpec::Permutation(gens) => {
            let points = gens.iter().flatten().flatten().copied().max().unwrap_or(1);
            let images: Vec<Vec<usize>> = gens
                .iter()
                .map(|cycles| {
                    let mut image: Vec<usize> = (0..points).collect();
                    for cycle in cycles {
                        for w in 0..cycle.len() {
                            let from = cycle[w] - 1;
                            let to = cycle[(w + 1) % cycle.len()] - 1;
                            image[from] = to;
                        }
                    }
                    image
                })
                .collect();
            let name = spec.to_string();
            Ok(GroupTable::from_permutations(&name, points, &images)?)
        }
        GroupSpec::File(path) => cayley::load_file(path),
        GroupSpec::Product(l, r) => {
            let left = realize(l)?;
            let right = realize(r)?;
            Ok(GroupTable::direct_product(&left, &right)?)
        }
    }
}
