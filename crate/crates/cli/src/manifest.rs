//! Claim manifests and the `reproduce` runner.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context as _, Result};
use clap::ValueEnum;
use hitcore::dual::{is_annihilated, pairing, psi, AnnihilatedSpace, DualElement, DualMonomial};
use hitcore::group::Group;
use hitcore::kameko::kameko_pair;
use hitcore::lambda::{ext_group, LambdaAlgebra, LambdaElement};
use hitcore::poly::{Polynomial, WeightVector};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::commands::{invariant_count, load_element, space, Context};
use crate::output::{aligned, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Slow,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Published,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Dimension,
    InvariantDim,
    ExtDim,
    PsiIdentity,
    Annihilation,
    Pairing,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub kind: String,
    #[serde(default)]
    pub params: Map<String, Value>,
    pub expected: Value,
    pub source: Source,
    pub tier: Tier,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Claim {
    pub fn kind(&self) -> Result<Kind> {
        serde_json::from_value(Value::String(self.kind.clone())).map_err(|_| anyhow::anyhow!("unknown claim kind {:?} in {}", self.kind, self.id))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub claims: Vec<Claim>,
    #[serde(skip)]
    pub base: PathBuf,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut m: Manifest = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        m.base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        for c in &m.claims {
            c.kind()?;
            if c.tier == Tier::All {
                bail!("claim {} must be tier fast or slow", c.id);
            }
        }
        Ok(m)
    }
}

fn int(p: &Map<String, Value>, key: &str) -> Result<u64> {
    p.get(key).and_then(Value::as_u64).with_context(|| format!("missing integer parameter {key:?}"))
}

fn text<'a>(p: &'a Map<String, Value>, key: &str) -> Option<&'a str> {
    p.get(key).and_then(Value::as_str)
}

fn element(base: &Path, p: &Map<String, Value>) -> Result<DualElement> {
    if let Some(file) = text(p, "element") {
        return load_element(&base.join(file).to_string_lossy(), None, None);
    }
    let e: Vec<u32> = serde_json::from_value(p.get("exponents").cloned().context("claim needs \"element\" or \"exponents\"")?)?;
    Ok(DualElement::from_monomial(DualMonomial::new(&e)?))
}

fn lambda(s: &str) -> Result<LambdaElement> {
    Ok(s.parse()?)
}

/// Runs one claim and returns the value found.
fn evaluate(ctx: &Context, alg: &LambdaAlgebra, base: &Path, claim: &Claim) -> Result<Value> {
    let p = &claim.params;
    match claim.kind()? {
        Kind::Dimension => {
            let (h, n) = (int(p, "h")? as usize, int(p, "n")? as u32);
            if p.get("kernel").and_then(Value::as_bool).unwrap_or(false) {
                let m = (n.checked_sub(h as u32).context("degree below variable count")?) / 2;
                return Ok(json!(kameko_pair(&space(ctx, h, n)?, &space(ctx, h, m)?)?.kernel_dim()));
            }
            let (basis, _) = ctx.cache.cohit_basis(h, n, &ctx.limits)?;
            let (dim, zero, positive) = match text(p, "weight") {
                Some(w) => {
                    let c = basis.weight_component(&w.parse::<WeightVector>()?);
                    (c.dim, c.dim_zero, c.dim_positive)
                }
                None => (basis.dim(), basis.dim() - basis.dim_positive(), basis.dim_positive()),
            };
            Ok(json!(match text(p, "part") {
                None => dim,
                Some("zero") => zero,
                Some("positive") => positive,
                Some(other) => bail!("unknown part {other:?}"),
            }))
        }
        Kind::InvariantDim => {
            let group: Group = text(p, "group").unwrap_or("gl").parse()?;
            let c = invariant_count(ctx, int(p, "h")? as usize, int(p, "n")? as u32, group)?;
            Ok(json!(c.invariants.len()))
        }
        Kind::ExtDim => {
            let g = ext_group(alg, int(p, "s")? as usize, int(p, "t")? as u32, &ctx.limits)?;
            Ok(json!(g.dim))
        }
        Kind::PsiIdentity => {
            let xi = element(base, p)?;
            let z = alg.normalize(&psi(alg, &xi));
            let ext = ext_group(alg, xi.h(), xi.degree(), &ctx.limits)?;
            let class = ext.classify(alg, &z)?;
            let mut found = json!({
                "annihilated": is_annihilated(&xi),
                "cycle": class.is_cycle,
                "nonzero_class": class.is_nonzero_class(),
            });
            if let Some(expr) = claim.expected.as_str().filter(|s| *s != "nonzero") {
                let mut want = lambda(expr)?;
                if let Some(b) = text(p, "boundary_of") {
                    want = want.add(&alg.differential(&lambda(b)?));
                }
                found["matches"] = json!(z == alg.normalize(&want));
            }
            Ok(found)
        }
        Kind::Annihilation => Ok(json!(is_annihilated(&element(base, p)?))),
        Kind::Pairing => {
            let (h, n) = (int(p, "h")? as usize, int(p, "n")? as u32);
            let adm = space(ctx, h, n)?.cohit_basis().admissibles;
            let ann = AnnihilatedSpace::compute(h, n, &ctx.limits)?.elements();
            let mut ok = ann.len() == adm.len();
            for (i, m) in adm.iter().enumerate() {
                for (j, xi) in ann.iter().enumerate() {
                    ok &= pairing(&Polynomial::from_monomial(*m), xi)? == (i == j);
                }
            }
            Ok(json!(ok))
        }
    }
}

fn passes(claim: &Claim, found: &Value) -> bool {
    match claim.kind() {
        Ok(Kind::PsiIdentity) => {
            let flag = |k: &str| found.get(k).and_then(Value::as_bool).unwrap_or(false);
            flag("annihilated") && flag("nonzero_class") && found.get("matches").map_or(true, |m| m == &json!(true))
        }
        _ => &claim.expected == found,
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs the claims of the selected tier; the caller exits non-zero unless `failed == 0`.
pub struct Report {
    pub passed: usize,
    pub failed: usize,
    pub output: Output,
}

pub fn reproduce(ctx: &Context, manifest: &Manifest, tier: Tier) -> Result<Report> {
    let alg = LambdaAlgebra::new();
    let (mut passed, mut failed) = (0, 0);
    let mut entries = Vec::new();
    let mut notes = Vec::new();
    let mut rows = vec![["id", "kind", "status", "expected", "found"].map(String::from).to_vec()];
    let mut table = vec![["status", "id", "kind", "expected", "found", "seconds"].map(String::from).to_vec()];
    for claim in manifest.claims.iter().filter(|c| tier == Tier::All || c.tier == tier) {
        let start = Instant::now();
        let (status, found) = match evaluate(ctx, &alg, &manifest.base, claim) {
            Ok(v) if passes(claim, &v) => ("pass", v),
            Ok(v) => ("fail", v),
            Err(e) => ("error", json!(e.to_string())),
        };
        let secs = start.elapsed().as_secs_f64();
        if status == "pass" {
            passed += 1;
        } else {
            failed += 1;
        }
        let mut entry = json!({"id": claim.id, "kind": claim.kind, "status": status, "expected": claim.expected, "found": found});
        if let Some(note) = &claim.note {
            entry["note"] = json!(note);
            if status != "pass" {
                notes.push(format!("  {}: {note}", claim.id));
            }
        }
        entries.push(entry);
        rows.push(vec![claim.id.clone(), claim.kind.clone(), status.into(), compact(&claim.expected), compact(&found)]);
        table.push(vec![
            status.to_uppercase(),
            claim.id.clone(),
            claim.kind.clone(),
            compact(&claim.expected),
            compact(&found),
            format!("{secs:.2}"),
        ]);
    }
    let mut text = aligned(&table);
    if !notes.is_empty() {
        let _ = write!(text, "\nnotes:\n{}\n", notes.join("\n"));
    }
    let _ = writeln!(text, "\n{passed} passed, {failed} failed");
    let json = json!({"passed": passed, "failed": failed, "claims": entries});
    Ok(Report { passed, failed, output: Output { json, rows, text: Some(text) } })
}
