use alloc::vec::Vec;

use crate::algebra::{bareiss_rank, IntPoly, RatFunc};
use crate::characters::{BlockVector, CoeffTable};
use crate::partition::{all_partitions_up_to, Partition};

/// For each vector, every support diagram that no other vector uses.
pub fn eigendiagram_sets(basis: &[BlockVector]) -> Vec<Vec<Partition>> {
    basis
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.support()
                .into_iter()
                .filter(|l| basis.iter().enumerate().all(|(j, g)| j == i || !g.in_support(l)))
                .cloned()
                .collect()
        })
        .collect()
}

/// The first eigendiagram (canonical order) of each vector, if any.
pub fn eigendiagrams(basis: &[BlockVector]) -> Vec<Option<Partition>> {
    eigendiagram_sets(basis)
        .into_iter()
        .map(|s| s.into_iter().next())
        .collect()
}

/// Clear denominators row by row; rank is unchanged.
pub(crate) fn integral_rows(rows: &[Vec<RatFunc>]) -> Vec<Vec<IntPoly>> {
    rows.iter()
        .map(|row| {
            let mut den = IntPoly::one();
            for x in row {
                let g = den.gcd(x.den());
                den = &den * &x.den().div_exact(&g).expect("gcd divides");
            }
            row.iter()
                .map(|x| x.num() * &den.div_exact(x.den()).expect("lcm is a multiple"))
                .collect()
        })
        .collect()
}

/// Rank over `ℚ(q)` of the basis restricted to the diagrams outside
/// `support(f)`; `f` spans an extreme ray exactly when this is `n`.
pub fn zero_set_rank(f: &BlockVector, basis: &[BlockVector]) -> usize {
    let rows: Vec<Vec<RatFunc>> = all_partitions_up_to(f.n())
        .iter()
        .filter(|l| !f.in_support(l))
        .map(|l| basis.iter().map(|g| g.get(l)).collect())
        .collect();
    bareiss_rank(&integral_rows(&rows))
}

/// Extremality of a nonzero character `f` in the cone spanned inside the
/// `n + 1`-dimensional space of `basis`.
pub fn is_extreme(f: &BlockVector, basis: &[BlockVector]) -> bool {
    !f.is_zero() && zero_set_rank(f, basis) == f.n()
}

/// [`is_extreme`] against the `ψ` basis of the table's level.
pub fn is_extreme_in_table(f: &BlockVector, table: &CoeffTable) -> bool {
    if f.is_zero() {
        return false;
    }
    let rows: Vec<Vec<IntPoly>> = table
        .partitions()
        .iter()
        .zip(table.rows())
        .filter(|(l, _)| !f.in_support(l))
        .map(|(_, r)| r.clone())
        .collect();
    bareiss_rank(&rows) == table.n()
}

/// Rank of `c_k^(n)(λ)` over `|λ| = n - j`, `k = 0..n`.
pub fn rank_blocks(table: &CoeffTable, j: usize) -> usize {
    let n = table.n();
    assert!(j <= n);
    let rows: Vec<Vec<IntPoly>> = table
        .partitions()
        .iter()
        .zip(table.rows())
        .filter(|(l, _)| l.size() == n - j)
        .map(|(_, r)| r.clone())
        .collect();
    bareiss_rank(&rows)
}
