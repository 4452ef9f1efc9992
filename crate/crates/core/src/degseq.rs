//! Validation, enumeration and construction of tree-generating degree
//! sequences, including the `d(a,b)` and starlike families.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// A validated degree sequence that generates a tree.
///
/// Stored in ascending order. A non-decreasing sequence of positive
/// integers of length `N` generates a tree iff its entries sum to
/// `2(N - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Validates `raw` (any order) and returns the ascending sequence.
    pub fn new(mut raw: Vec<usize>) -> Result<Self> {
        let n = raw.len();
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        if let Some(&d) = raw.iter().find(|&&d| d == 0) {
            return Err(Error::NotGraphicTree(format!("entry {d} < 1")));
        }
        let sum: usize = raw.iter().sum();
        if sum != 2 * (n - 1) {
            return Err(Error::NotGraphicTree(format!(
                "sum {sum} != 2(N-1) = {}",
                2 * (n - 1)
            )));
        }
        raw.sort_unstable();
        Ok(Self { degrees: raw })
    }

    /// Parses comma-separated entries with optional run-length shorthand,
    /// e.g. `"1^10,2,3,4,4,5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty entry in {text:?}")));
            }
            let (value, count) = match part.split_once('^') {
                Some((v, c)) => {
                    let count: usize = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad repeat count {c:?}")))?;
                    (v.trim(), count)
                }
                None => (part, 1),
            };
            let value: usize = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {value:?}")))?;
            raw.extend(std::iter::repeat(value).take(count));
        }
        Self::new(raw)
    }

    /// Tree order `N`.
    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    /// Number of pendent vertices `n` (entries equal to 1).
    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Ascending degrees.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        *self.degrees.last().unwrap()
    }

    /// True when the maximum degree is 2, i.e. the sequence generates a path.
    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Returns `(a, b)` when this sequence equals `d(a,b) = (1^{a+b}, 2^a, a+b)`.
    pub fn ab_parameters(&self) -> Option<(usize, usize)> {
        let n_total = self.order();
        for a in 1.. {
            if 2 * a + 2 > n_total {
                return None;
            }
            let b = n_total - 1 - 2 * a;
            if b < 1 {
                return None;
            }
            if *self == family_ab(a, b) {
                return Some((a, b));
            }
        }
        None
    }

    /// Returns `(d, k)` when this sequence equals `(1^d, 2^k, d)` with `d >= 3`.
    pub fn starlike_parameters(&self) -> Option<(usize, usize)> {
        let n_total = self.order();
        for d in 3..n_total {
            let k = match (n_total - 1).checked_sub(d) {
                Some(k) => k,
                None => break,
            };
            if *self == family_starlike(d, k) {
                return Some((d, k));
            }
        }
        None
    }

    /// Compact run-length text, e.g. `(1,1,1,2,2,3)` prints as `1^3,2^2,3`.
    pub fn to_compact_string(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.degrees.len() {
            let v = self.degrees[i];
            let mut j = i;
            while j < self.degrees.len() && self.degrees[j] == v {
                j += 1;
            }
            let run = j - i;
            if run > 1 {
                parts.push(format!("{v}^{run}"));
            } else {
                parts.push(format!("{v}"));
            }
            i = j;
        }
        parts.join(",")
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// Validates a raw list as a tree-generating degree sequence.
pub fn validate_tree_sequence(raw: Vec<usize>) -> Result<DegreeSequence> {
    DegreeSequence::new(raw)
}

/// All tree-generating degree sequences of order `n_total`, in
/// lexicographic order of the ascending sequences.
///
/// Each sequence is the all-ones vector plus an integer partition of
/// `n_total - 2` added to the trailing entries, so the count is the
/// partition number `p(n_total - 2)`.
pub fn enumerate_tree_sequences(n_total: usize) -> Result<Vec<DegreeSequence>> {
    if n_total < 2 {
        return Err(Error::TooSmall(n_total));
    }
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    // Partitions of n_total - 2 with non-increasing parts.
    fn rec(remaining: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, n_total: usize) {
        if remaining == 0 {
            let mut seq = vec![1usize; n_total];
            for (i, &p) in parts.iter().enumerate() {
                seq[n_total - 1 - i] += p;
            }
            seq.sort_unstable();
            out.push(seq);
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            parts.push(p);
            rec(remaining - p, p, parts, out, n_total);
            parts.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n_total - 2, n_total - 2, &mut parts, &mut raw, n_total);
    raw.sort_unstable();
    raw.dedup();
    for seq in raw {
        out.push(DegreeSequence { degrees: seq });
    }
    Ok(out)
}

/// The sequence `d(a,b) = (1^{a+b}, 2^a, a+b)` of order `2a + b + 1`.
pub fn family_ab(a: usize, b: usize) -> DegreeSequence {
    assert!(a >= 1 && b >= 1, "family_ab requires a, b >= 1");
    let mut degrees = vec![1; a + b];
    degrees.extend(std::iter::repeat(2).take(a));
    degrees.push(a + b);
    degrees.sort_unstable();
    DegreeSequence { degrees }
}

/// The starlike sequence `(1^d, 2^k, d)` of order `d + k + 1`, `d >= 3`.
pub fn family_starlike(d: usize, k: usize) -> DegreeSequence {
    assert!(d >= 3, "family_starlike requires d >= 3");
    let mut degrees = vec![1; d];
    degrees.extend(std::iter::repeat(2).take(k));
    degrees.push(d);
    degrees.sort_unstable();
    DegreeSequence { degrees }
}
