use lielab::lie::StructureReport;
use lielab::regularity::{Mode, RankReport};
use lielab::{Budget, Error, LieAlgebra, Result, Verdict};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::commands::default_mode;

#[derive(Serialize)]
pub struct Identity {
    /// SHA-256 of the canonical JSON of the table.
    pub sha256: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

/// Everything `analyze` computes. Parts that exceed a budget are `null` and
/// explained in `notes`.
#[derive(Serialize)]
pub struct AnalysisReport {
    pub algebra: Identity,
    pub structure: StructureReport,
    pub rank: Option<RankReport>,
    pub mode: Mode,
    pub regular: Option<Verdict>,
    pub anisotropic: Option<Verdict>,
    pub nilpotent_free: Option<Verdict>,
    pub centroid_dim: usize,
    pub h2_dim: usize,
    pub derivations_dim: Option<usize>,
    pub killing_rank: usize,
    pub notes: Vec<String>,
}

fn keep<T>(r: Result<T>, what: &str, notes: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::Budget(_) | Error::Unsupported(_))) => {
            notes.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn analyze(l: &LieAlgebra, budget: &Budget) -> Result<AnalysisReport> {
    let canonical = lielab::format::emit_lie(l);
    let algebra = Identity {
        sha256: hex::encode(Sha256::digest(canonical.as_bytes())),
        field: l.field().to_string(),
        dim: l.dim(),
        basis: l.labels().to_vec(),
    };
    let mut notes = Vec::new();
    let structure = l.structure_report();
    let mode = default_mode(l, budget);
    let rank = keep(l.rank_with(budget), "rank", &mut notes)?;
    let regular = keep(l.is_regular_algebra(mode, budget), "regular", &mut notes)?;
    let anisotropic = keep(l.is_anisotropic(mode, budget), "anisotropic", &mut notes)?;
    let nilpotent_free = keep(l.is_nilpotent_free(mode, budget), "nilpotent-free", &mut notes)?;
    let derivations = keep(l.derivation_algebra_with(budget.derivation_dim_fp), "derivations", &mut notes)?;
    Ok(AnalysisReport {
        killing_rank: structure.killing_rank,
        algebra,
        structure,
        rank,
        mode,
        regular,
        anisotropic,
        nilpotent_free,
        centroid_dim: l.centroid().dim(),
        h2_dim: l.h2_trivial().dim(),
        derivations_dim: derivations.map(|d| d.maps.len()),
        notes,
    })
}

/// `key: value` lines for the top level of a report; nested values compact.
pub fn human(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let text = match val {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k}: {text}\n"));
            }
        }
        Value::Array(items) => {
            for item in items {
                out.push_str(&format!("{item}\n"));
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    out
}
