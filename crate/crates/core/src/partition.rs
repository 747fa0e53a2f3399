//! Young diagrams, hooks and horizontal strips.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A Young diagram: weakly decreasing positive parts. The empty diagram has
/// no parts.
///
/// The total order is the canonical table order: larger diagrams first, and
/// lexicographically descending among diagrams of the same size.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from parts, dropping zeros. Returns `None` unless the nonzero
    /// parts are weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    /// The one-row diagram `(m)`; empty for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// The one-column diagram `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        Partition {
            parts: (1..=cols)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Prepend a first row of length `row`, which must be `>= λ_1`.
    pub fn with_first_row(&self, row: usize) -> Option<Partition> {
        if row < self.first_row() || row == 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(row);
        parts.extend_from_slice(&self.parts);
        Some(Partition { parts })
    }

    /// The diagram with the first row removed.
    pub fn without_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent notation, e.g. `(3^2,1)`, `(1^7)`, `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{v}^{run}")?;
            } else {
                write!(f, "{v}")?;
            }
            i += run;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Partitions of `m`, lexicographically descending.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Every partition of size `0..=n`, in canonical order.
pub fn all_partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).rev().flat_map(partitions_of).collect()
}

/// One hook length per box, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.size());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            // arm + leg + 1
            hooks.push((row - j - 1) + (conj.parts()[j] - i - 1) + 1);
        }
    }
    hooks
}

/// `n(λ) = Σ (i - 1) λ_i`.
pub fn n_stat(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// All `μ ⊆ λ` such that `λ / μ` is a horizontal strip of `m` boxes.
pub fn hstrip_minus(lambda: &Partition, m: usize) -> Vec<Partition> {
    if m > lambda.first_row() {
        return Vec::new();
    }
    let parts = lambda.parts();
    // Interlacing: λ_{i+1} <= μ_i <= λ_i.
    fn rec(parts: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        let hi = parts[i];
        let take_max = (hi - lo).min(left);
        // Remaining rows can remove at most their own slack.
        let slack_after: usize = (i + 1..parts.len())
            .map(|t| parts[t] - parts.get(t + 1).copied().unwrap_or(0))
            .sum();
        for take in 0..=take_max {
            if left - take > slack_after {
                continue;
            }
            cur.push(hi - take);
            rec(parts, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, 0, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `λ` such that `λ / μ` is a horizontal strip of `m` boxes. `cap`
/// bounds the size of the result diagrams; nothing is returned when
/// `|μ| + m > cap`.
pub fn hstrip_plus(mu: &Partition, m: usize, cap: usize) -> Vec<Partition> {
    if mu.size() + m > cap {
        return Vec::new();
    }
    let parts = mu.parts();
    let rows = parts.len() + 1;
    // Interlacing: μ_i <= λ_i <= μ_{i-1} (no upper bound on the first row).
    fn rec(parts: &[usize], rows: usize, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let base = parts.get(i).copied().unwrap_or(0);
        let room = if i == 0 { left } else { (parts[i - 1] - base).min(left) };
        for add in 0..=room {
            cur.push(base + add);
            rec(parts, rows, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, rows, 0, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}
