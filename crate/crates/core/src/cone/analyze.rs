use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dd::{extreme_rays, to_primitive_integer, Ray};
use super::eliminate::{eliminate_with_budget, ConeBasis};
use super::extreme::{eigendiagrams, is_extreme_in_table};
use super::lp::{cone_membership, Certificate};
use crate::algebra::linalg::{nullspace, rank};
use crate::algebra::{ratfunc_sign_on_q_gt_1, RatFunc, SignVerdict};
use crate::budget::Budget;
use crate::characters::{hat_tau_blocks, BlockVector, CoeffTable, PsiCoeffs};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Sample points for the extra-ray search; 2 is avoided because
/// `dim ρ_1 = q - 2` vanishes there.
pub const SAMPLE_POINTS: [i64; 3] = [3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub n: usize,
    pub simplicial: bool,
    /// `τ_0, ..., τ_n` followed by any additional extreme rays.
    pub extremes: Vec<BlockVector>,
    /// Each extreme in `τ`-coordinates.
    pub tau_coords: Vec<Vec<RatFunc>>,
    /// Eigendiagram of each `τ_k` within the `τ` list; `None` for the
    /// additional rays.
    pub eigendiagram_of: Vec<Option<Partition>>,
    /// Extreme-ray counts of the sampled cone, when it was enumerated.
    pub sample_ray_counts: Vec<(i64, usize)>,
    /// Whether the character with no unipotent part coincides with `τ_n`.
    pub hat_tau_is_tau_n: Option<bool>,
    pub sample_disagreement: bool,
    pub notes: Vec<String>,
}

impl ConeReport {
    pub fn extra_count(&self) -> usize {
        self.extremes.len() - (self.n + 1)
    }
}

/// Table rows at `q = x`, as primitive integer vectors.
pub fn sampled_rows(table: &CoeffTable, x: &BigRational) -> Vec<Vec<BigInt>> {
    table
        .rows()
        .iter()
        .map(|r| to_primitive_integer(&r.iter().map(|c| c.eval(x)).collect::<Vec<_>>()))
        .collect()
}

/// Extreme rays, in `ψ`-coordinates, of the cone cut out by the table at
/// `q = x`.
pub fn sampled_extreme_rays<B: Budget + ?Sized>(table: &CoeffTable, x: &BigRational, budget: &B) -> Result<Vec<Ray>> {
    extreme_rays(&sampled_rows(table, x), budget)
}

/// Rescale `τ`-coordinates: to `-1` at the single coordinate that is
/// negative on all of `q > 1` if there is exactly one, else to `1` at the
/// first nonzero coordinate.
pub fn normalize_tau_coords(y: &[RatFunc]) -> Vec<RatFunc> {
    let negative: Vec<usize> = (0..y.len())
        .filter(|&j| !y[j].is_zero() && ratfunc_sign_on_q_gt_1(&-&y[j]) == SignVerdict::PositiveOnQgt1)
        .collect();
    let pivot = match negative.as_slice() {
        [j] => -&y[*j],
        _ => match y.iter().find(|c| !c.is_zero()) {
            Some(c) => c.clone(),
            None => return y.to_vec(),
        },
    };
    let inv = pivot.recip().expect("nonzero pivot");
    y.iter().map(|c| c * &inv).collect()
}

/// Symbolic ray of `D_n` vanishing on the given diagrams, if they cut out
/// a single line. Uses `n` rows that are independent at `x` to keep the
/// symbolic system small, then checks every listed diagram.
fn lift(table: &CoeffTable, zero_rows: &[usize], x: &BigRational) -> Option<PsiCoeffs> {
    let n = table.n();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut sampled: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for &i in zero_rows {
        if chosen.len() == n {
            break;
        }
        sampled.push(table.row(i).iter().map(|c| c.eval(x)).collect());
        if rank(&sampled) == sampled.len() {
            chosen.push(i);
        } else {
            sampled.pop();
        }
    }
    if chosen.len() < n {
        return None;
    }
    let m: Vec<Vec<RatFunc>> = chosen
        .iter()
        .map(|&i| table.row(i).iter().cloned().map(RatFunc::from_poly).collect())
        .collect();
    let ns = nullspace(&m, n + 1);
    let [v] = ns.as_slice() else {
        return None;
    };
    let coords = PsiCoeffs::new(n, v.clone());
    let vanishes = zero_rows.iter().all(|&i| {
        table
            .row(i)
            .iter()
            .zip(coords.coeffs())
            .map(|(c, x)| x * &RatFunc::from_poly(c.clone()))
            .sum::<RatFunc>()
            .is_zero()
    });
    vanishes.then_some(coords)
}

struct Candidate {
    key: Vec<RatFunc>,
    found_at: Vec<i64>,
    verified: bool,
}

/// Eliminate, look for eigendiagrams, and when some `τ_k` has none, search
/// for the remaining extreme rays by sampling and lifting.
pub fn analyze<B: Budget + ?Sized>(table: &CoeffTable, budget: &B) -> Result<ConeReport> {
    let basis = eliminate_with_budget(table, budget)?;
    analyze_basis(table, &basis, budget)
}

pub fn analyze_basis<B: Budget + ?Sized>(table: &CoeffTable, basis: &ConeBasis, budget: &B) -> Result<ConeReport> {
    let n = table.n();
    let mut notes = Vec::new();
    let tau_eig = eigendiagrams(basis.taus());
    let simplicial = tau_eig.iter().all(Option::is_some);
    for (k, t) in basis.taus().iter().enumerate() {
        if budget.exhausted() {
            return Err(Error::BudgetExceeded);
        }
        if !is_extreme_in_table(t, table) {
            notes.push(format!("τ_{k} fails the zero-set rank test"));
        }
    }
    for (k, e) in tau_eig.iter().enumerate() {
        if e.is_none() {
            notes.push(format!("τ_{k} has no eigendiagram"));
        }
    }

    let mut extremes: Vec<BlockVector> = basis.taus().to_vec();
    let mut tau_coords: Vec<Vec<RatFunc>> = (0..=n)
        .map(|k| {
            let mut e = alloc::vec![RatFunc::zero(); n + 1];
            e[k] = RatFunc::one();
            e
        })
        .collect();
    let mut sample_ray_counts = Vec::new();
    let mut sample_disagreement = false;

    if !simplicial {
        let mut candidates: Vec<Candidate> = Vec::new();
        for &s in &SAMPLE_POINTS {
            let x = BigRational::from_integer(s.into());
            let rays = sampled_extreme_rays(table, &x, budget)?;
            sample_ray_counts.push((s, rays.len()));
            for ray in rays {
                if budget.exhausted() {
                    return Err(Error::BudgetExceeded);
                }
                let Some(mut coords) = lift(table, &ray.tight, &x) else {
                    notes.push(format!(
                        "ray at q = {s} with {} tight diagrams does not lift to ℚ(q)",
                        ray.tight.len()
                    ));
                    sample_disagreement = true;
                    continue;
                };
                let at_x: Option<Vec<BigRational>> = coords.coeffs().iter().map(|c| c.eval(&x)).collect();
                let Some(at_x) = at_x else {
                    notes.push(format!("lifted ray has a pole at q = {s}"));
                    sample_disagreement = true;
                    continue;
                };
                let d: BigRational = at_x
                    .iter()
                    .zip(&ray.vector)
                    .map(|(a, b)| a * BigRational::from_integer(b.clone()))
                    .sum();
                if d.is_negative() {
                    coords = coords.scale(&-RatFunc::one());
                } else if d.is_zero() {
                    notes.push(format!("lifted ray vanishes at q = {s}"));
                    sample_disagreement = true;
                    continue;
                }
                let key = normalize_tau_coords(&basis.psi_to_tau(&coords));
                if let Some(c) = candidates.iter_mut().find(|c| c.key == key) {
                    c.found_at.push(s);
                    continue;
                }
                let blocks = coords.to_blocks(table);
                let verified = blocks.is_character() && is_extreme_in_table(&blocks, table);
                candidates.push(Candidate {
                    key,
                    found_at: alloc::vec![s],
                    verified,
                });
            }
        }
        for c in candidates {
            let unit = c.key.iter().filter(|x| !x.is_zero()).count() == 1;
            if c.found_at.len() != SAMPLE_POINTS.len() {
                sample_disagreement = true;
                notes.push(format!(
                    "ray with τ-coordinates [{}] found only at q = {:?}",
                    render_coords(&c.key),
                    c.found_at
                ));
                continue;
            }
            if !c.verified {
                notes.push(format!(
                    "ray with τ-coordinates [{}] fails symbolic verification",
                    render_coords(&c.key)
                ));
                sample_disagreement = true;
                continue;
            }
            if unit {
                continue;
            }
            let scaled = basis.tau_to_psi(&c.key).to_blocks(table);
            debug_assert!(scaled.is_character());
            extremes.push(scaled);
            tau_coords.push(c.key);
        }
        if extremes.len() == n + 1 {
            notes.push(String::from(
                "no additional extreme ray found despite a missing eigendiagram",
            ));
        }
    }

    let mut eigendiagram_of = tau_eig;
    eigendiagram_of.resize(extremes.len(), None);
    let hat_tau_is_tau_n = (n >= 1).then(|| hat_tau_blocks(table) == *basis.tau(n));
    for (i, e) in extremes.iter().enumerate() {
        let zeros = table.partitions().len() - e.support().len();
        if zeros < n {
            notes.push(format!("extreme {i} has only {zeros} zero coefficients"));
        }
    }
    Ok(ConeReport {
        n,
        simplicial,
        extremes,
        tau_coords,
        eigendiagram_of,
        sample_ray_counts,
        hat_tau_is_tau_n,
        sample_disagreement,
        notes,
    })
}

fn render_coords(y: &[RatFunc]) -> String {
    y.iter().map(|c| c.render("q")).collect::<Vec<_>>().join(", ")
}

/// Outcome of expressing one lower-degree row as a nonnegative combination
/// of the full-degree rows and the `∅` row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRow {
    pub lambda: Partition,
    pub certificate: Certificate,
}

/// For every `λ` with `|λ| < n`, decide at `q = x` whether the row
/// `(c_k^(n)(λ))_k` lies in the cone of the full-degree rows and the `∅`
/// row.
pub fn unipotent_conjecture_probe(table: &CoeffTable, x: &BigRational) -> Result<Vec<ProbeRow>> {
    if *x <= BigRational::from_integer(2.into()) {
        return Err(Error::PreconditionViolation(format!("sample q = {x} must exceed 2")));
    }
    let n = table.n();
    let eval = |i: usize| -> Vec<BigRational> { table.row(i).iter().map(|c| c.eval(x)).collect() };
    let gens: Vec<Vec<BigRational>> = table
        .partitions()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.size() == n || l.is_empty())
        .map(|(i, _)| eval(i))
        .collect();
    Ok(table
        .partitions()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.size() < n)
        .map(|(i, l)| ProbeRow {
            lambda: l.clone(),
            certificate: cone_membership(&gens, &eval(i)),
        })
        .collect())
}
