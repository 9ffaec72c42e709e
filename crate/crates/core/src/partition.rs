//! Integer partitions, majorization, and single-box Ferrers moves.
//!
//! A [`Partition`] is a nonincreasing list of positive integers. The same
//! value serves as a degree sequence and as the row profile of a Ferrers
//! diagram (row `i` holds `terms[i]` boxes).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Nonincreasing list of positive integers with its sum cached.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    terms: Vec<u32>,
    sum: u32,
}

impl Partition {
    /// Builds a partition from arbitrary positive terms, sorting them.
    pub fn new(mut terms: Vec<u32>) -> Result<Self> {
        if terms.contains(&0) {
            return Err(Error::domain("partition terms must be positive"));
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        let sum = terms.iter().sum();
        Ok(Partition { terms, sum })
    }

    /// Builds a partition from terms already known to be positive and
    /// nonincreasing.
    pub(crate) fn from_sorted(terms: Vec<u32>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(terms.iter().all(|&t| t > 0));
        let sum = terms.iter().sum();
        Partition { terms, sum }
    }

    /// `base^mult` blocks, e.g. `[(5, 6), (2, 1)]` for `5^6 2^1`.
    pub fn from_blocks(blocks: &[(u32, usize)]) -> Result<Self> {
        let terms = blocks.iter().flat_map(|&(b, m)| std::iter::repeat_n(b, m)).collect();
        Partition::new(terms)
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn sum(&self) -> u32 {
        self.sum
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_term(&self) -> u32 {
        self.terms.first().copied().unwrap_or(0)
    }

    /// Runs of equal terms as `(value, multiplicity)`, largest value first.
    pub fn blocks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &t in &self.terms {
            match out.last_mut() {
                Some((v, m)) if *v == t => *m += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    /// Exponent form with `^1` omitted, e.g. `3 2^3 1`.
    pub fn to_exponent_string(&self) -> String {
        self.blocks()
            .iter()
            .map(|&(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Digit-compact form such as `32221`; `None` when a term exceeds 9.
    pub fn to_compact_string(&self) -> Option<String> {
        if self.terms.iter().any(|&t| t > 9) {
            return None;
        }
        Some(self.terms.iter().map(|t| t.to_string()).collect())
    }

    fn prefix_sums(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().scan(0u32, |acc, &t| {
            *acc += t;
            Some(*acc)
        })
    }
}

impl Ord for Partition {
    /// Lexicographic order on the term lists. Majorization refines the
    /// reverse of this order, so sorting descending gives a linear extension
    /// with the top of the dominance order first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exponent_string())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.to_exponent_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_exponent_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_partition(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses either the digit-compact form (`3221`) or the exponent form
/// (`5^6 2^1`, `^1` optional). Comma-separated lists (`3,2,2,1`, optionally
/// parenthesised) are accepted as well.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse("empty partition"));
    }
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);

    let mut terms = Vec::new();
    if inner.contains(',') {
        for tok in inner.split(',') {
            terms.push(parse_term(tok.trim())?);
        }
    } else if !inner.contains('^') && !inner.contains(char::is_whitespace) {
        for c in inner.chars() {
            let v = c
                .to_digit(10)
                .ok_or_else(|| Error::parse(format!("unexpected character {c:?} in {text:?}")))?;
            if v == 0 {
                return Err(Error::parse(format!("zero term in {text:?}")));
            }
            terms.push(v);
        }
    } else {
        for tok in inner.split_whitespace() {
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => {
                    let m = m.trim_start_matches('{').trim_end_matches('}');
                    let mult: usize = m
                        .parse()
                        .map_err(|_| Error::parse(format!("malformed exponent in {tok:?}")))?;
                    (parse_term(b)?, mult)
                }
                None => (parse_term(tok)?, 1),
            };
            if mult == 0 {
                return Err(Error::parse(format!("zero multiplicity in {tok:?}")));
            }
            terms.extend(std::iter::repeat_n(base, mult));
        }
    }
    Partition::new(terms).map_err(|e| Error::parse(e.to_string()))
}

fn parse_term(tok: &str) -> Result<u32> {
    let v: i64 = tok
        .parse()
        .map_err(|_| Error::parse(format!("malformed term {tok:?}")))?;
    if v <= 0 {
        return Err(Error::parse(format!("nonpositive term {v}")));
    }
    u32::try_from(v).map_err(|_| Error::parse(format!("term {v} too large")))
}

/// `d ⪰ e`: equal sums and every prefix sum of `d` at least that of `e`.
pub fn majorizes(d: &Partition, e: &Partition) -> bool {
    d.sum == e.sum && d.prefix_sums().zip(e.prefix_sums()).all(|(pd, pe)| pe <= pd)
}

/// Strict majorization.
pub fn strictly_majorizes(d: &Partition, e: &Partition) -> bool {
    d != e && majorizes(d, e)
}

fn sorted_desc_dedup(mut out: Vec<Partition>) -> Vec<Partition> {
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Every partition reachable from `d` by moving one Ferrers box to a lower
/// row (possibly a new row) while keeping the rows nonincreasing.
/// Returned in lexicographically decreasing order.
pub fn down_neighbors(d: &Partition) -> Vec<Partition> {
    let n = d.len();
    let mut out = Vec::new();
    let mut rows = d.terms.clone();
    rows.push(0);
    for i in 0..n {
        for j in (i + 1)..=n {
            rows[i] -= 1;
            rows[j] += 1;
            if is_valid_rows(&rows) {
                out.push(Partition::from_sorted(strip_zeros(&rows)));
            }
            rows[i] += 1;
            rows[j] -= 1;
        }
    }
    sorted_desc_dedup(out)
}

/// Inverse of [`down_neighbors`]: partitions obtained by moving one box to
/// an earlier row. Returned in lexicographically decreasing order.
pub fn up_neighbors(d: &Partition) -> Vec<Partition> {
    let n = d.len();
    let mut out = Vec::new();
    let mut rows = d.terms.clone();
    for j in 1..n {
        for i in 0..j {
            rows[j] -= 1;
            rows[i] += 1;
            if is_valid_rows(&rows) {
                out.push(Partition::from_sorted(strip_zeros(&rows)));
            }
            rows[j] += 1;
            rows[i] -= 1;
        }
    }
    sorted_desc_dedup(out)
}

// Nonincreasing, with zeros allowed only as a trailing run.
fn is_valid_rows(rows: &[u32]) -> bool {
    rows.windows(2).all(|w| w[0] >= w[1])
}

fn strip_zeros(rows: &[u32]) -> Vec<u32> {
    rows.iter().copied().filter(|&t| t > 0).collect()
}

/// A degree list that may contain zero terms: the positive part as a
/// [`Partition`] plus the number of zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Degrees {
    pub positive: Partition,
    pub zeros: usize,
}

impl Degrees {
    /// Full nonincreasing list, zeros last.
    pub fn terms(&self) -> Vec<u32> {
        let mut t = self.positive.terms.clone();
        t.extend(std::iter::repeat_n(0, self.zeros));
        t
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.zeros
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drops the zero terms.
    pub fn strip(self) -> Partition {
        self.positive
    }

    pub(crate) fn from_unsorted(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        let zeros = terms.iter().rev().take_while(|&&t| t == 0).count();
        terms.truncate(terms.len() - zeros);
        Degrees {
            positive: Partition::from_sorted(terms),
            zeros,
        }
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive.is_empty() {
            write!(f, "0^{}", self.zeros)
        } else if self.zeros == 0 {
            write!(f, "{}", self.positive)
        } else {
            write!(f, "{} 0^{}", self.positive, self.zeros)
        }
    }
}

/// Degree list of the complement of a realization of `e` padded with
/// `on_vertices - len(e)` isolated vertices. Zero terms are kept.
pub fn complement_sequence(e: &Partition, on_vertices: usize) -> Result<Degrees> {
    if on_vertices < e.len() {
        return Err(Error::domain(format!(
            "cannot complement {} terms on {on_vertices} vertices",
            e.len()
        )));
    }
    let top = on_vertices as u32 - 1;
    if on_vertices == 0 {
        return Ok(Degrees::from_unsorted(Vec::new()));
    }
    if e.max_term() > top {
        return Err(Error::domain(format!(
            "term {} exceeds {top} on {on_vertices} vertices",
            e.max_term()
        )));
    }
    let terms = e
        .terms
        .iter()
        .map(|&t| top - t)
        .chain(std::iter::repeat_n(top, on_vertices - e.len()))
        .collect();
    Ok(Degrees::from_unsorted(terms))
}

/// All partitions of `total`, lexicographically decreasing.
pub fn partitions_of(total: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    if total > 0 {
        rec(total, total, &mut cur, &mut out);
    }
    out
}
