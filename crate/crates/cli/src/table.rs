use std::fmt;
use std::str::FromStr;

use derangement_core::characters::sigma_in_psi;
use derangement_core::cone::eliminate_with_budget;
use derangement_core::{Budget, CoeffTable, Partition, RatFunc};
use num_rational::BigRational;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Psi,
    Sigma,
    Tau,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Psi => "psi",
            Basis::Sigma => "sigma",
            Basis::Tau => "tau",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => Ok(Basis::Psi),
            "sigma" => Ok(Basis::Sigma),
            "tau" => Ok(Basis::Tau),
            _ => Err(CliError::Format(format!("unknown basis {s:?}"))),
        }
    }
}

/// Block coefficients of the basis characters of level `n`:
/// `entries[i][k]` is the coefficient of `[partitions[i]]_n` in the `k`-th
/// character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTable {
    pub n: usize,
    pub basis: Basis,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<RatFunc>>,
}

impl BasisTable {
    pub fn build<B: Budget + ?Sized>(table: &CoeffTable, basis: Basis, budget: &B) -> Result<Self> {
        let n = table.n();
        let partitions = table.partitions().to_vec();
        let entries = match basis {
            Basis::Psi => table
                .rows()
                .iter()
                .map(|r| r.iter().cloned().map(RatFunc::from_poly).collect())
                .collect(),
            Basis::Sigma => {
                let cols: Vec<_> = (0..=n).map(|k| sigma_in_psi(n, k).to_blocks(table)).collect();
                by_rows(&partitions, &cols)
            }
            Basis::Tau => {
                let b = eliminate_with_budget(table, budget)?;
                by_rows(&partitions, b.taus())
            }
        };
        Ok(BasisTable {
            n,
            basis,
            partitions,
            entries,
        })
    }

    pub fn columns(&self) -> usize {
        self.n + 1
    }

    /// Keep only column `k`.
    pub fn select_column(&mut self, k: usize) -> Result<()> {
        if k > self.n {
            return Err(CliError::Usage(format!("column {k} out of range 0..={}", self.n)));
        }
        for row in &mut self.entries {
            let c = row[k].clone();
            *row = vec![c];
        }
        Ok(())
    }

    /// Specialize every entry at `q = x`.
    pub fn evaluate(&mut self, x: &BigRational) -> Result<()> {
        for row in &mut self.entries {
            for c in row.iter_mut() {
                let v = c
                    .eval(x)
                    .ok_or_else(|| CliError::Usage(format!("entry {} has a pole at q = {x}", c.render("q"))))?;
                *c = RatFunc::from_rational(&v);
            }
        }
        Ok(())
    }

    pub fn header(&self, first: usize) -> Vec<String> {
        (0..self.entries.first().map_or(self.columns(), Vec::len))
            .map(|k| format!("{}_{}", self.basis, k + first))
            .collect()
    }
}

fn by_rows(partitions: &[Partition], cols: &[derangement_core::BlockVector]) -> Vec<Vec<RatFunc>> {
    partitions
        .iter()
        .map(|l| cols.iter().map(|c| c.get(l)).collect())
        .collect()
}
