//! Plain-text formats for graphs, complexes, Morse matchings and schedules.
//!
//! All readers skip blank lines and lines starting with `#` (except the
//! `# critical` separator of the matching format) and report 1-based line
//! numbers. All writers are deterministic.

use std::fmt::Write as _;

use rustc_hash::FxHashSet;

use crate::complex::{Complex, MAX_FACES};
use crate::error::{parse_err, Error, Result};
use crate::face::{Face, MAX_GROUND};
use crate::graph::{Graph, MAX_VERTICES};
use crate::morse::{MorseMatching, Schedule};

pub const COMPLEX_MAGIC: &str = "matchex-complex";
pub const COMPLEX_VERSION: u32 = 1;
const CRITICAL_MARKER: &str = "# critical";

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts
        .try_into()
        .or_else(|p: Vec<&str>| parse_err(line, format!("expected {N} fields, found {}", p.len())))
}

fn number(line: usize, s: &str) -> Result<usize> {
    s.parse()
        .or_else(|_| parse_err(line, format!("expected a non-negative integer, found {s:?}")))
}

fn hex_face(line: usize, s: &str) -> Result<Face> {
    Face::from_hex(s).or_else(|_| parse_err(line, format!("malformed hex face {s:?}")))
}

fn reword(line: usize, e: Error) -> Error {
    match e {
        Error::InvalidArgument(msg) | Error::Capacity(msg) => Error::Parse { line, msg },
        e @ Error::Parse { .. } => e,
    }
}

/// Reads `n m` followed by `m` lines `u v` with 1-based vertices.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing \"n m\" header");
    };
    let [n, m] = fields::<2>(hl, header)?;
    let (n, m) = (number(hl, n)?, number(hl, m)?);
    if n == 0 || n > MAX_VERTICES {
        return parse_err(hl, format!("vertex count {n} is outside 1..={MAX_VERTICES}"));
    }
    let mut pairs = Vec::new();
    let mut seen = FxHashSet::default();
    let mut last = hl;
    for (ln, l) in lines {
        last = ln;
        if pairs.len() == m {
            return parse_err(ln, format!("more than the declared {m} edges"));
        }
        let [u, v] = fields::<2>(ln, l)?;
        let (u, v) = (number(ln, u)?, number(ln, v)?);
        if u == 0 || v == 0 || u > n || v > n {
            return parse_err(ln, format!("edge ({u},{v}) has an endpoint outside 1..={n}"));
        }
        if u == v {
            return parse_err(ln, format!("loop at vertex {u}"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return parse_err(ln, format!("edge ({u},{v}) repeats"));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return parse_err(last, format!("declared {m} edges, found {}", pairs.len()));
    }
    Graph::from_edge_list(n, &pairs).map_err(|e| reword(hl, e))
}

/// Edges in index order, 1-based.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n_vertices(), graph.n_edges());
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Serializes a complex as a header, the face counts by size (starting with
/// the empty face), then every face in hex, by size and then value.
pub fn write_complex(complex: &Complex) -> String {
    let counts: Vec<usize> = (0..=complex.ground())
        .map(|k| complex.faces_of_size(k).len())
        .collect();
    let top = counts.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
    let mut out = format!("{COMPLEX_MAGIC} {COMPLEX_VERSION}\nground {}\nsizes", complex.ground());
    for c in &counts[..top] {
        let _ = write!(out, " {c}");
    }
    out.push('\n');
    for f in complex.faces() {
        out.push_str(&f.to_hex());
        out.push('\n');
    }
    out
}

/// Inverse of [`write_complex`]; checks counts, sizes, order and downward closure.
pub fn read_complex(text: &str) -> Result<Complex> {
    let mut lines = content_lines(text);
    let mut expect = |what: &str| match lines.next() {
        Some(l) => Ok(l),
        None => parse_err(text.lines().count().max(1), format!("missing {what} line")),
    };
    let (ml, magic) = expect("header")?;
    let [word, version] = fields::<2>(ml, magic)?;
    if word != COMPLEX_MAGIC {
        return parse_err(ml, format!("expected {COMPLEX_MAGIC:?}, found {word:?}"));
    }
    if number(ml, version)? != COMPLEX_VERSION as usize {
        return parse_err(ml, format!("unsupported version {version}"));
    }
    let (gl, ground_line) = expect("ground")?;
    let [word, ground] = fields::<2>(gl, ground_line)?;
    if word != "ground" {
        return parse_err(gl, format!("expected \"ground\", found {word:?}"));
    }
    let ground = number(gl, ground)?;
    if ground > MAX_GROUND {
        return parse_err(gl, format!("ground set of {ground} exceeds {MAX_GROUND}"));
    }
    let (sl, sizes_line) = expect("sizes")?;
    let mut words = sizes_line.split_whitespace();
    if words.next() != Some("sizes") {
        return parse_err(sl, "expected \"sizes\"");
    }
    let counts = words.map(|w| number(sl, w)).collect::<Result<Vec<_>>>()?;
    if counts.len() > ground + 1 {
        return parse_err(sl, format!("{} sizes listed for a ground set of {ground}", counts.len()));
    }
    let total = counts.iter().try_fold(0usize, |a, &c| a.checked_add(c).filter(|&t| t <= MAX_FACES));
    if total.is_none() {
        return parse_err(sl, format!("more than {MAX_FACES} faces"));
    }
    let mut faces = Vec::new();
    let mut size = 0;
    let mut left = counts.first().copied().unwrap_or(0);
    let mut prev: Option<Face> = None;
    let mut last = sl;
    for (ln, l) in lines {
        last = ln;
        while left == 0 && size < counts.len() {
            size += 1;
            left = counts.get(size).copied().unwrap_or(0);
        }
        if size >= counts.len() {
            return parse_err(ln, "more faces than the declared sizes");
        }
        let f = hex_face(ln, l)?;
        if f.len() != size {
            return parse_err(ln, format!("face {l} has {} elements, expected {size}", f.len()));
        }
        if prev.is_some_and(|p| p.len() == size && p >= f) {
            return parse_err(ln, format!("face {l} is out of order"));
        }
        prev = Some(f);
        faces.push(f);
        left -= 1;
    }
    let declared: usize = counts.iter().sum();
    if faces.len() != declared {
        return parse_err(last, format!("declared {declared} faces, found {}", faces.len()));
    }
    Complex::from_faces(ground, faces).map_err(|e| reword(last, e))
}

/// One `lower upper` hex pair per line, then `# critical` and one hex face per line.
pub fn write_matching(matching: &MorseMatching) -> String {
    let mut out = String::new();
    for (lo, hi) in matching.pairs() {
        let _ = writeln!(out, "{} {}", lo.to_hex(), hi.to_hex());
    }
    out.push_str(CRITICAL_MARKER);
    out.push('\n');
    for f in matching.critical() {
        out.push_str(&f.to_hex());
        out.push('\n');
    }
    out
}

/// Inverse of [`write_matching`]. Each pair must be a cover relation inside `0..ground`.
pub fn read_matching(text: &str, ground: usize) -> Result<MorseMatching> {
    let limit = Face::full(ground.min(MAX_GROUND));
    let mut pairs = Vec::new();
    let mut critical = Vec::new();
    let mut in_critical = false;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let l = raw.trim();
        if l == CRITICAL_MARKER {
            if in_critical {
                return parse_err(ln, "repeated \"# critical\" separator");
            }
            in_critical = true;
            continue;
        }
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if in_critical {
            let f = hex_face(ln, l)?;
            if !f.is_subset(limit) {
                return parse_err(ln, format!("face {l} uses elements outside 0..{ground}"));
            }
            critical.push(f);
        } else {
            let [lo, hi] = fields::<2>(ln, l)?;
            let (lo, hi) = (hex_face(ln, lo)?, hex_face(ln, hi)?);
            if !hi.is_subset(limit) {
                return parse_err(ln, format!("face {hi} uses elements outside 0..{ground}"));
            }
            if !lo.is_subset(hi) || hi.len() != lo.len() + 1 {
                return parse_err(ln, format!("{lo} and {hi} do not differ by one element"));
            }
            pairs.push((lo, hi));
        }
    }
    if !in_critical {
        return parse_err(text.lines().count().max(1), "missing \"# critical\" separator");
    }
    Ok(MorseMatching::from_parts(ground, pairs, critical))
}

/// One edge `u v` (1-based vertices of `graph`) per line, in schedule order.
pub fn read_schedule(text: &str, graph: &Graph) -> Result<Schedule> {
    let mut steps = Vec::new();
    let mut seen = FxHashSet::default();
    for (ln, l) in content_lines(text) {
        let [u, v] = fields::<2>(ln, l)?;
        let (u, v) = (number(ln, u)?, number(ln, v)?);
        let idx = (u >= 1 && v >= 1)
            .then(|| graph.edge_index(u - 1, v - 1))
            .flatten()
            .filter(|_| u != v);
        let Some(idx) = idx else {
            return parse_err(ln, format!("({u},{v}) is not an edge of the graph"));
        };
        if !seen.insert(idx) {
            return parse_err(ln, format!("edge ({u},{v}) repeats"));
        }
        steps.push(idx);
    }
    Schedule::new(steps, graph.n_edges())
}

/// Writes a schedule in the format read by [`read_schedule`].
pub fn write_schedule(schedule: &Schedule, graph: &Graph) -> String {
    let mut out = String::new();
    for &x in schedule.steps() {
        let (u, v) = graph.edge(x);
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}
