use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context as _, Result};
use hitcore::dual::{coinvariants, transfer_image, AnnihilatedSpace, CoinvariantSpace, DualElement};
use hitcore::gf2::BitVector;
use hitcore::group::{invariants, Group};
use hitcore::hit::{CohitBasis, HitSpace, Limits};
use hitcore::kameko::kameko_pair;
use hitcore::lambda::{ext_group, LambdaAlgebra};
use hitcore::poly::{Monomial, WeightVector};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::output::{degree_table, Output};

pub struct Context {
    pub cache: Cache,
    pub limits: Limits,
}

/// "10", "1..13" (inclusive) or "8,18,38".
pub fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
        let b: u32 = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in {s:?}"))?;
        ensure!(a <= b, "empty range {s:?}");
        return Ok((a..=b).collect());
    }
    s.split(',').map(|p| p.trim().parse::<u32>().with_context(|| format!("bad degree {p:?}"))).collect()
}

pub fn capacity(e: hitcore::Error, what: String) -> anyhow::Error {
    match e {
        hitcore::Error::Capacity { columns, limit } => {
            anyhow!("refusing {what}: {columns} basis elements exceed the capacity limit of {limit} (use --force)")
        }
        e => e.into(),
    }
}

pub fn space(ctx: &Context, h: usize, n: u32) -> Result<HitSpace> {
    HitSpace::compute(h, n, &ctx.limits).map_err(|e| capacity(e, format!("QP_{n} in {h} variables")))
}

fn monomials_json(ms: impl IntoIterator<Item = Monomial>) -> Value {
    Value::Array(ms.into_iter().map(|m| json!(m)).collect())
}

/// A coordinate vector over an admissible basis, as the list of its monomials.
fn class_json(basis: &[Monomial], v: &BitVector) -> Value {
    monomials_json(v.ones().map(|i| basis[i]))
}

fn weight_row(basis: &CohitBasis, w: &WeightVector) -> (Value, Vec<String>) {
    let c = basis.weight_component(w);
    (
        json!({"weight": w, "dim": c.dim, "dim_zero": c.dim_zero, "dim_positive": c.dim_positive}),
        vec![w.to_string(), c.dim.to_string(), c.dim_zero.to_string(), c.dim_positive.to_string()],
    )
}

pub fn cohit(ctx: &Context, h: usize, degrees: &[u32], weight: Option<&WeightVector>, with_basis: bool) -> Result<Output> {
    if let Some(w) = weight {
        ensure!(degrees.len() == 1, "--weight needs a single degree");
        let n = degrees[0];
        ensure!(w.degree() == n, "weight {w} has degree {}, not {n}", w.degree());
        let (basis, _) = ctx.cache.cohit_basis(h, n, &ctx.limits)?;
        let c = basis.weight_component(w);
        let mut json = json!({"h": h, "n": n, "weight": w, "dim": c.dim, "dim_zero": c.dim_zero, "dim_positive": c.dim_positive});
        if with_basis {
            json["admissibles"] = monomials_json(c.members.iter().map(|&i| basis.admissibles[i]));
        }
        let rows = vec![
            vec!["h".into(), "n".into(), "weight".into(), "dim".into(), "dim_zero".into(), "dim_positive".into()],
            vec![h.to_string(), n.to_string(), w.to_string(), c.dim.to_string(), c.dim_zero.to_string(), c.dim_positive.to_string()],
        ];
        return Ok(Output::new(json, rows));
    }
    if let [n] = degrees {
        let (basis, _) = ctx.cache.cohit_basis(h, *n, &ctx.limits)?;
        let mut rows = vec![vec!["weight".into(), "dim".into(), "dim_zero".into(), "dim_positive".into()]];
        let mut weights = Vec::new();
        for w in basis.by_weight.keys() {
            let (j, r) = weight_row(&basis, w);
            weights.push(j);
            rows.push(r);
        }
        let pos = basis.dim_positive();
        rows.push(vec!["total".into(), basis.dim().to_string(), (basis.dim() - pos).to_string(), pos.to_string()]);
        let mut json = json!({
            "h": h, "n": n, "dim": basis.dim(), "dim_zero": basis.dim() - pos, "dim_positive": pos, "weights": weights,
        });
        if with_basis {
            json["admissibles"] = monomials_json(basis.admissibles.iter().copied());
        }
        return Ok(Output::new(json, rows));
    }
    let mut entries = Vec::new();
    let (mut dim, mut zero, mut positive) = (Vec::new(), Vec::new(), Vec::new());
    for &n in degrees {
        let (basis, _) = ctx.cache.cohit_basis(h, n, &ctx.limits)?;
        let pos = basis.dim_positive();
        entries.push(json!({"n": n, "dim": basis.dim(), "dim_zero": basis.dim() - pos, "dim_positive": pos}));
        dim.push(basis.dim());
        zero.push(basis.dim() - pos);
        positive.push(pos);
    }
    let rows = degree_table("n", degrees, &[("dim", dim), ("dim_zero", zero), ("dim_positive", positive)]);
    Ok(Output::new(json!({"h": h, "degrees": entries}), rows))
}

fn group_name(g: Group) -> &'static str {
    match g {
        Group::Symmetric => "s",
        Group::General => "gl",
    }
}

pub struct InvariantCount {
    pub cohit: usize,
    pub invariants: Vec<BitVector>,
    pub coinvariants: Option<usize>,
    pub basis: Vec<Monomial>,
}

/// Invariants of QP_n and, for GL_h, the independently computed coinvariant dimension.
pub fn invariant_count(ctx: &Context, h: usize, n: u32, group: Group) -> Result<InvariantCount> {
    let hs = space(ctx, h, n)?;
    let inv = invariants(&hs, group)?;
    let co = match group {
        Group::General if h > 0 => {
            let c = CoinvariantSpace::compute(h, n, &ctx.limits)?.dim();
            ensure!(c == inv.len(), "cross-check failed at ({h},{n}): {} invariants but {c} coinvariants", inv.len());
            Some(c)
        }
        _ => None,
    };
    Ok(InvariantCount { cohit: hs.dim_cohit(), invariants: inv, coinvariants: co, basis: hs.cohit_basis().admissibles })
}

pub fn invariants_cmd(ctx: &Context, h: usize, degrees: &[u32], group: Group) -> Result<Output> {
    let g = group_name(group);
    if let [n] = degrees {
        let c = invariant_count(ctx, h, *n, group)?;
        let json = json!({
            "h": h, "n": n, "group": g, "dim": c.invariants.len(), "cohit_dim": c.cohit,
            "coinvariant_dim": c.coinvariants,
            "invariants": c.invariants.iter().map(|v| class_json(&c.basis, v)).collect::<Vec<_>>(),
        });
        let rows = vec![
            vec!["h".into(), "n".into(), "group".into(), "dim".into(), "cohit_dim".into(), "coinvariant_dim".into()],
            vec![
                h.to_string(),
                n.to_string(),
                g.into(),
                c.invariants.len().to_string(),
                c.cohit.to_string(),
                c.coinvariants.map(|x| x.to_string()).unwrap_or_default(),
            ],
        ];
        return Ok(Output::new(json, rows));
    }
    let mut entries = Vec::new();
    let (mut cohit, mut inv, mut co) = (Vec::new(), Vec::new(), Vec::new());
    for &n in degrees {
        let c = invariant_count(ctx, h, n, group)?;
        entries.push(json!({"n": n, "dim": c.invariants.len(), "cohit_dim": c.cohit, "coinvariant_dim": c.coinvariants}));
        cohit.push(c.cohit);
        inv.push(c.invariants.len());
        co.extend(c.coinvariants);
    }
    let mut table = vec![("cohit", cohit), ("invariants", inv)];
    if !co.is_empty() {
        table.push(("coinvariants", co));
    }
    Ok(Output::new(json!({"h": h, "group": g, "degrees": entries}), degree_table("n", degrees, &table)))
}

pub fn kameko_cmd(ctx: &Context, h: usize, n: u32, with_kernel: bool) -> Result<Output> {
    ensure!(n as usize >= h && (n as usize - h) % 2 == 0, "degree {n} and {h} variables have different parity");
    let m = (n - h as u32) / 2;
    let src = space(ctx, h, n)?;
    let dst = space(ctx, h, m)?;
    let p = kameko_pair(&src, &dst)?;
    let rank = p.down.rank();
    let mut json = json!({
        "h": h, "n": n, "target_n": m, "source_dim": p.down.source_dim(), "target_dim": p.down.target_dim,
        "rank": rank, "kernel_dim": p.kernel_dim(), "onto": rank == p.down.target_dim,
    });
    if with_kernel {
        let basis = src.cohit_basis().admissibles;
        json["kernel"] = Value::Array(p.kernel.iter().map(|v| class_json(&basis, v)).collect());
    }
    let rows = vec![
        ["h", "n", "target_n", "source_dim", "target_dim", "rank", "kernel_dim"].map(String::from).to_vec(),
        [h, n as usize, m as usize, p.down.source_dim(), p.down.target_dim, rank, p.kernel_dim()].map(|x| x.to_string()).to_vec(),
    ];
    Ok(Output::new(json, rows))
}

pub fn ext_cmd(ctx: &Context, alg: &LambdaAlgebra, s: usize, stems: &[u32]) -> Result<Output> {
    let mut entries = Vec::new();
    let mut dims = Vec::new();
    for &t in stems {
        let g = ext_group(alg, s, t, &ctx.limits).map_err(|e| capacity(e, format!("Ext^({s},{t})")))?;
        entries.push(json!({
            "s": s, "t": t, "dim": g.dim, "lambda_dim": g.basis().len(),
            "representatives": g.cycles.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        }));
        dims.push(g.dim);
    }
    let json = if entries.len() == 1 { entries.pop().unwrap() } else { json!({"s": s, "stems": entries}) };
    Ok(Output::new(json, degree_table("t", stems, &[("dim", dims)])))
}

pub fn annihilated_cmd(ctx: &Context, h: usize, n: u32, with_coinvariants: bool) -> Result<Output> {
    let ann = AnnihilatedSpace::compute(h, n, &ctx.limits).map_err(|e| capacity(e, format!("degree {n} in {h} variables")))?;
    let mut json = json!({"h": h, "n": n, "dim": ann.dim(), "basis": ann.elements()});
    let mut header = vec!["h".to_string(), "n".into(), "dim".into()];
    let mut row = vec![h.to_string(), n.to_string(), ann.dim().to_string()];
    if with_coinvariants {
        let co = coinvariants(h, n, &ctx.limits)?;
        json["coinvariant_dim"] = json!(co.dim);
        json["coinvariant_representatives"] = json!(co.representatives);
        header.push("coinvariant_dim".into());
        row.push(co.dim.to_string());
    }
    Ok(Output::new(json, vec![header, row]))
}

/// A JSON file, or inline text such as "d(1,1,1,15)+d(1,1,15,1)" when h and n are given.
pub fn load_element(arg: &str, h: Option<usize>, n: Option<u32>) -> Result<DualElement> {
    let xi: DualElement = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {arg}"))?
    } else {
        let (Some(h), Some(n)) = (h, n) else {
            bail!("{arg:?} is not a file; inline elements need --h and --n");
        };
        DualElement::parse_with(h, n, arg)?
    };
    if let Some(h) = h {
        ensure!(xi.h() == h, "element has {} variables, not {h}", xi.h());
    }
    if let Some(n) = n {
        ensure!(xi.degree() == n, "element has degree {}, not {n}", xi.degree());
    }
    Ok(xi)
}

pub fn transfer_cmd(ctx: &Context, alg: &LambdaAlgebra, xi: &DualElement) -> Result<Output> {
    let t = transfer_image(alg, xi, &ctx.limits)?;
    let c = &t.classification;
    let class = if !c.is_cycle {
        "not a cycle"
    } else if c.is_boundary {
        "zero"
    } else {
        "nonzero"
    };
    let psi = alg.normalize(&t.psi);
    let json = json!({
        "h": xi.h(), "n": xi.degree(), "annihilated": true, "psi": psi.to_string(),
        "cycle": c.is_cycle, "class": class, "coords": c.coordinates.to_string(),
    });
    let rows = vec![
        ["h", "n", "cycle", "class", "coords"].map(String::from).to_vec(),
        vec![xi.h().to_string(), xi.degree().to_string(), c.is_cycle.to_string(), class.into(), c.coordinates.to_string()],
    ];
    Ok(Output::new(json, rows))
}
