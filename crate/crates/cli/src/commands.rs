use std::path::Path;

use lielab::catalog::{self, Built};
use lielab::commutator::{self, Property};
use lielab::format::{self, AlgebraFile};
use lielab::regularity::Mode;
use lielab::verdict::Status;
use lielab::{Budget, Error, Field, LieAlgebra, Result, Scalar, Verdict};
use serde_json::{json, Value};

use crate::{report, verify, CatalogAction, Command, Outcome};

pub fn read_algebra(path: &Path) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    format::parse_algebra(&text)
}

fn read_lie(path: &Path) -> Result<LieAlgebra> {
    match read_algebra(path)? {
        AlgebraFile::Lie(l) => Ok(l),
        AlgebraFile::Assoc(_) => Err(Error::Format("expected a Lie algebra, found an associative one".into())),
    }
}

/// Comma-separated coordinates, or a combination of basis labels.
pub fn parse_element(l: &LieAlgebra, text: &str) -> Result<Vec<Scalar>> {
    l.parse_element(text)
}

pub fn code_for(v: &Verdict) -> u8 {
    match v.status {
        Status::Certified => 0,
        Status::Refuted => 1,
        Status::Inconclusive => 2,
    }
}

/// Exhaustive when the whole space fits the budget, otherwise certificate.
pub fn default_mode(l: &LieAlgebra, budget: &Budget) -> Mode {
    match l.field().order() {
        Some(q) if q.checked_pow(l.dim() as u32).is_some_and(|t| t <= budget.exhaustive_points) => Mode::Exhaustive,
        _ => Mode::Certificate,
    }
}

fn verdict_outcome(property: &str, mode: Mode, v: Verdict) -> Outcome {
    let code = code_for(&v);
    Outcome { report: json!({ "property": property, "mode": mode, "verdict": v }), code }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn basis_strings(b: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    b.iter().map(|v| strings(v)).collect()
}

pub fn run(command: Command, budget: &Budget) -> Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let report = match read_algebra(&file)? {
                AlgebraFile::Lie(l) => json!({
                    "kind": "lie", "dim": l.dim(), "field": l.field().to_string(),
                    "basis": l.labels(), "valid": l.validate().is_empty(),
                }),
                AlgebraFile::Assoc(a) => json!({
                    "kind": "associative", "dim": a.dim(), "field": a.field().to_string(),
                    "basis": a.labels(), "valid": true, "commutative": a.is_commutative(),
                }),
            };
            Ok(Outcome::ok(report))
        }
        Command::Analyze { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", file.display())))?;
            let l = format::parse_lie(&text)?;
            let r = report::analyze(&l, budget)?;
            Ok(Outcome::ok(serde_json::to_value(r).expect("serializable")))
        }
        Command::Rank { file } => {
            let l = read_lie(&file)?;
            let r = l.rank_with(budget)?;
            Ok(Outcome::ok(json!({ "dim": l.dim(), "rank": r.rank, "method": r.method })))
        }
        Command::Regular { file, mode } => {
            let l = read_lie(&file)?;
            let mode = mode.unwrap_or_else(|| default_mode(&l, budget));
            Ok(verdict_outcome("regular", mode, l.is_regular_algebra(mode, budget)?))
        }
        Command::Anisotropic { file, mode } => {
            let l = read_lie(&file)?;
            let mode = mode.unwrap_or_else(|| default_mode(&l, budget));
            Ok(verdict_outcome("anisotropic", mode, l.is_anisotropic(mode, budget)?))
        }
        Command::NilpotentFree { file, mode } => {
            let l = read_lie(&file)?;
            let mode = mode.unwrap_or_else(|| default_mode(&l, budget));
            Ok(verdict_outcome("nilpotent-free", mode, l.is_nilpotent_free(mode, budget)?))
        }
        Command::Fitting { file, elements } => {
            let l = read_lie(&file)?;
            let xs = elements.iter().map(|e| parse_element(&l, e)).collect::<Result<Vec<_>>>()?;
            let d = if xs.len() == 1 { l.fitting(&xs[0])? } else { l.fitting_set(&xs)? };
            Ok(Outcome::ok(json!({
                "elements": xs.iter().map(|x| strings(x)).collect::<Vec<_>>(),
                "l0": basis_strings(&d.l0.basis()),
                "l1": basis_strings(&d.l1.basis()),
                "dim_l0": d.l0.dim(),
                "dim_l1": d.l1.dim(),
            })))
        }
        Command::Commutator { file, target, form } => {
            let l = read_lie(&file)?;
            let x = parse_element(&l, &target)?;
            let w = match form.as_deref() {
                Some(_) => Some(commutator::rank1_commutator(&l, &l.killing_form(), &x)?),
                None => commutator::commutator_search(&l, &x, budget)?,
            };
            let code = if w.is_some() { 0 } else { 2 };
            Ok(Outcome { report: json!({ "target": strings(&x), "witness": w }), code })
        }
        Command::Derivations { file } => {
            let l = read_lie(&file)?;
            let d = l.derivation_algebra_with(budget.derivation_dim_fp)?;
            let maps: Vec<Vec<Vec<String>>> =
                d.maps.iter().map(|m| m.row_vecs().iter().map(|r| strings(r)).collect()).collect();
            Ok(Outcome::ok(json!({ "dim": d.maps.len(), "maps": maps, "inner_dim": l.dim() - l.center().dim() })))
        }
        Command::Centroid { file } => {
            let l = read_lie(&file)?;
            Ok(Outcome::ok(json!({ "dim": l.centroid().dim() })))
        }
        Command::H2 { file } => {
            let l = read_lie(&file)?;
            let h = l.h2_trivial();
            Ok(Outcome::ok(json!({
                "cocycles_dim": h.cocycles_dim, "coboundaries_dim": h.coboundaries_dim, "dim": h.dim(),
            })))
        }
        Command::MinimalNon { file, property } => {
            let l = read_lie(&file)?;
            let p: Property = property.parse()?;
            let v = commutator::is_minimal_non(&l, p, budget)?;
            let code = code_for(&v);
            Ok(Outcome { report: json!({ "property": p, "verdict": v }), code })
        }
        Command::Catalog { action: CatalogAction::List } => {
            let entries: Vec<Value> = catalog::ENTRIES
                .iter()
                .map(|(name, params, about)| json!({ "name": name, "params": params, "description": about }))
                .collect();
            Ok(Outcome::ok(Value::Array(entries)))
        }
        Command::Catalog { action: CatalogAction::Emit { name, params, field } } => {
            let field: Field = field.parse()?;
            let value = match catalog::make(&name, &params, field)? {
                Built::Lie(l) => format::lie_to_value(&l),
                Built::Assoc(a) => format::assoc_to_value(&a),
            };
            Ok(Outcome::ok(value))
        }
        Command::Enumerate { dim, field } => {
            let field: Field = field.parse()?;
            Ok(Outcome::ok(enumerate(field, dim, budget)?))
        }
        Command::Verify { timings } => {
            let suite = verify::run_suite(budget, timings);
            let code = if suite.failed > 0 { 1 } else { 0 };
            Ok(Outcome { report: serde_json::to_value(suite).expect("serializable"), code })
        }
    }
}

fn enumerate(field: Field, dim: usize, budget: &Budget) -> Result<Value> {
    let mut regular = 0u64;
    let mut nilpotent = 0u64;
    let mut engel_mismatch = Vec::new();
    let mut failure = None;
    let stats = catalog::enumerate_tables(field, dim, budget, |t, l| {
        if failure.is_some() {
            return;
        }
        let mut step = || -> Result<()> {
            let nil = l.is_nilpotent();
            nilpotent += nil as u64;
            if (l.rank_with(budget)?.rank == dim) != nil {
                engel_mismatch.push(strings(&t.coeffs));
            }
            if l.is_regular_algebra(Mode::Exhaustive, budget)?.is_certified() {
                regular += 1;
            }
            Ok(())
        };
        if let Err(e) = step() {
            failure = Some(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(json!({
        "dim": dim,
        "field": field.to_string(),
        "generated": stats.generated,
        "valid": stats.valid,
        "regular": regular,
        "nilpotent": nilpotent,
        "rank_eq_dim_iff_nilpotent": engel_mismatch.is_empty(),
        "mismatches": engel_mismatch,
    }))
}
