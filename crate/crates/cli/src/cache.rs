use std::fs;
use std::path::{Path, PathBuf};

use derangement_core::characters::dims::unipotent_dim;
use derangement_core::partition::all_partitions_up_to;
use derangement_core::{Budget, CoeffTable};

use crate::error::{CliError, Result};
use crate::json;
use crate::table::{Basis, BasisTable};

pub const CACHE_ENV: &str = "DERANGEMENT_CACHE_DIR";
pub const FORMAT_VERSION: u32 = 1;

/// On-disk store of ψ coefficient tables, one file per level.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Explicit directory, else `$DERANGEMENT_CACHE_DIR`, else the platform
    /// data directory.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        if let Some(d) = flag {
            return Some(Cache::new(d));
        }
        if let Some(d) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return Some(Cache::new(d));
        }
        dirs::data_dir().map(|d| Cache::new(d.join("derangement")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("psi-v{FORMAT_VERSION}-n{n}.json"))
    }

    /// The cached table, if present and well formed.
    pub fn load(&self, n: usize) -> Option<CoeffTable> {
        let text = fs::read_to_string(self.path_for(n)).ok()?;
        let v = json::parse(&text).ok()?;
        let t = json::table_from_json(&v).ok()?;
        coeff_table_from_basis(&t).ok()
    }

    pub fn store(&self, table: &CoeffTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let t = BasisTable::build(table, Basis::Psi, &derangement_core::Unlimited)?;
        let text = json::to_string(&json::table_to_json(&t, 0));
        let path = self.path_for(table.n());
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }

    pub fn load_or_build<B: Budget + ?Sized>(&self, n: usize, budget: &B) -> Result<CoeffTable> {
        if let Some(t) = self.load(n) {
            return Ok(t);
        }
        let t = CoeffTable::with_budget(n, budget)?;
        // A read-only cache directory is not an error.
        let _ = self.store(&t);
        Ok(t)
    }

    /// Cached levels, ascending.
    pub fn entries(&self) -> Result<Vec<(usize, PathBuf)>> {
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(CliError::io(&self.dir, e)),
        };
        let prefix = format!("psi-v{FORMAT_VERSION}-n");
        let mut out: Vec<(usize, PathBuf)> = rd
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                let n = name.strip_prefix(&prefix)?.strip_suffix(".json")?.parse().ok()?;
                Some((n, e.path()))
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Remove every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for (_, p) in &entries {
            fs::remove_file(p).map_err(|e| CliError::io(p, e))?;
        }
        Ok(entries.len())
    }
}

/// Rebuild a [`CoeffTable`] from a ψ-basis table, checking its shape.
pub fn coeff_table_from_basis(t: &BasisTable) -> Result<CoeffTable> {
    let bad = |m: &str| CliError::Format(format!("level {} table: {m}", t.n));
    if t.basis != Basis::Psi {
        return Err(bad("not in the psi basis"));
    }
    if t.partitions != all_partitions_up_to(t.n) {
        return Err(bad("diagrams are not in canonical order"));
    }
    let rows = t
        .entries
        .iter()
        .map(|row| {
            if row.len() != t.n + 1 {
                return Err(bad("wrong number of columns"));
            }
            row.iter()
                .map(|c| c.as_poly().cloned().ok_or_else(|| bad("non-polynomial entry")))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = t
        .partitions
        .iter()
        .map(unipotent_dim)
        .collect::<derangement_core::Result<Vec<_>>>()?;
    Ok(CoeffTable::from_parts(t.n, t.partitions.clone(), dims, rows))
}
