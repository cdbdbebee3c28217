//! Acceptance run: one PASS/FAIL line per criterion item.
//!
//! `cargo test --test acceptance` runs the fast tier; add `-- --ignored`
//! (or `--include-ignored`) for the slow tier as well. Items marked as known
//! discrepancies are still reported as FAIL; they only count against the exit
//! status if they unexpectedly pass or fail for another reason.

use std::time::Instant;

use hitcore::dual::{
    check_annihilated, coinvariants, dual_sq, is_annihilated, pairing, psi, transfer_image, AnnihilatedSpace,
    CoinvariantSpace, DualElement, DualMonomial,
};
use hitcore::gf2::{rank, BitVector};
use hitcore::group::{invariants, Group};
use hitcore::hit::{HitSpace, Limits};
use hitcore::kameko::{kameko_pair, KamekoPair};
use hitcore::lambda::{ext_dim, ext_group, lambda_basis, LambdaAlgebra, LambdaElement};
use hitcore::poly::{binom2, minimal_spike, monomials, mu, sq, Monomial, Polynomial};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// All comparisons are exact over GF(2): the tolerance is equality.
const TOLERANCE: usize = 0;
const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tier {
    Fast,
    Slow,
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn eq_usize(found: usize, expected: usize) -> bool {
    found.abs_diff(expected) <= TOLERANCE
}

fn dims_match(found: &[usize], expected: &[usize]) -> Outcome {
    let ok = found.len() == expected.len() && found.iter().zip(expected).all(|(&a, &b)| eq_usize(a, b));
    outcome(ok, format!("found {found:?}, expected {expected:?}"))
}

struct Runner {
    slow: bool,
    passed: usize,
    failed: usize,
    known_red: usize,
    skipped: usize,
    unexpected: Vec<String>,
}

impl Runner {
    fn item(&mut self, id: &str, tier: Tier, known: Option<&str>, label: &str, run: impl FnOnce() -> hitcore::Result<Outcome>) {
        if tier == Tier::Slow && !self.slow {
            self.skipped += 1;
            println!("SKIP  {id:<5} {label} [slow tier]");
            return;
        }
        let start = Instant::now();
        let res = run();
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = match res {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status}  {id:<5} {label}: {detail} ({secs:.2}s)");
        match (ok, known) {
            (true, None) => self.passed += 1,
            (false, None) => {
                self.failed += 1;
                self.unexpected.push(id.to_string());
            }
            (false, Some(why)) => {
                self.known_red += 1;
                println!("      {id:<5} known discrepancy: {why}");
            }
            (true, Some(_)) => {
                self.failed += 1;
                self.unexpected.push(format!("{id} (expected to fail, passed)"));
            }
        }
    }
}

fn space(h: usize, n: u32) -> hitcore::Result<HitSpace> {
    HitSpace::compute(h, n, &Limits::forced())
}

fn dims(h: usize, range: std::ops::RangeInclusive<u32>) -> hitcore::Result<Vec<usize>> {
    range.map(|n| space(h, n).map(|s| s.dim_cohit())).collect()
}

fn kameko(h: usize, n: u32) -> hitcore::Result<KamekoPair> {
    kameko_pair(&space(h, n)?, &space(h, (n - h as u32) / 2)?)
}

/// Kernel dimension together with the epimorphism and rank-nullity checks.
fn kernel_item(h: usize, n: u32, expected: usize) -> hitcore::Result<Outcome> {
    let p = kameko(h, n)?;
    let r = p.down.rank();
    let epi = r == p.down.target_dim;
    let nullity = p.kernel_dim() + r == p.down.source_dim();
    Ok(outcome(
        eq_usize(p.kernel_dim(), expected) && epi && nullity,
        format!("kernel {} (expected {expected}), rank {r} onto {}, source {}", p.kernel_dim(), p.down.target_dim, p.down.source_dim()),
    ))
}

/// GL-invariants of QP and GL-coinvariants of the annihilated dual, computed independently.
fn inv_coinv(h: usize, n: u32) -> hitcore::Result<(usize, usize)> {
    let hs = space(h, n)?;
    let inv = invariants(&hs, Group::General)?.len();
    let co = CoinvariantSpace::compute(h, n, &Limits::forced())?.dim();
    Ok((inv, co))
}

fn inv_item(pairs: &[(usize, u32, usize)]) -> hitcore::Result<Outcome> {
    let mut bad = Vec::new();
    for &(h, n, expected) in pairs {
        let (inv, co) = inv_coinv(h, n)?;
        if !eq_usize(inv, expected) || !eq_usize(co, expected) {
            bad.push(format!("({h},{n}): invariants {inv}, coinvariants {co}, expected {expected}"));
        }
    }
    let ok = bad.is_empty();
    let detail = if ok { format!("{} pairs agree", pairs.len()) } else { bad.join("; ") };
    Ok(outcome(ok, detail))
}

fn word_sum(s: &str) -> LambdaElement {
    s.parse().expect("lambda expression")
}

fn dual_file(name: &str) -> DualElement {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn dual_mono(e: &[u32]) -> DualElement {
    DualElement::from_monomial(DualMonomial::new(e).expect("exponents"))
}

fn annihilation_item(xi: &DualElement) -> hitcore::Result<Outcome> {
    let mut leftovers = Vec::new();
    let mut k = 1;
    while 2 * k <= xi.degree() {
        leftovers.push((k, dual_sq(k, xi).len()));
        k *= 2;
    }
    let ok = check_annihilated(xi).is_ok();
    Ok(outcome(ok, format!("terms left by Sq^k: {leftovers:?}")))
}

/// ψ_h(ξ) equals the given lambda expression after normalization, and it is a nonzero class.
fn psi_item(alg: &LambdaAlgebra, xi: &DualElement, expected: &LambdaElement) -> hitcore::Result<Outcome> {
    let z = alg.normalize(&psi(alg, xi));
    let want = alg.normalize(expected);
    let same = z == want;
    let ext = ext_group(alg, xi.h(), xi.degree(), &Limits::forced())?;
    let class = ext.classify(alg, &z)?;
    Ok(outcome(
        same && class.is_nonzero_class() && is_annihilated(xi),
        format!(
            "matches: {same}, annihilated: {}, cycle: {}, nonzero class: {}, {} terms vs {}",
            is_annihilated(xi),
            class.is_cycle,
            class.is_nonzero_class(),
            z.len(),
            want.len()
        ),
    ))
}

/// The transfer images of a coinvariant basis span Ext^{h, h+n}.
fn transfer_onto(alg: &LambdaAlgebra, h: usize, n: u32, expected_dim: usize) -> hitcore::Result<Outcome> {
    let co = coinvariants(h, n, &Limits::forced())?;
    let ext = ext_group(alg, h, n, &Limits::forced())?;
    let images: Vec<BitVector> = co
        .representatives
        .iter()
        .map(|xi| transfer_image(alg, xi, &Limits::forced()).map(|t| t.classification.coordinates))
        .collect::<hitcore::Result<_>>()?;
    let r = rank(&images, ext.dim)?;
    Ok(outcome(
        co.dim == expected_dim && ext.dim == expected_dim && r == expected_dim,
        format!("coinvariants {}, Ext {}, image rank {r}", co.dim, ext.dim),
    ))
}

fn random_monomial(rng: &mut StdRng, h: usize, n: u32) -> Monomial {
    let all = monomials(h, n);
    all[rng.gen_range(0..all.len())]
}

fn random_poly(rng: &mut StdRng, h: usize, n: u32) -> Polynomial {
    let k = rng.gen_range(1..4);
    Polynomial::from_terms(h, (0..k).map(|_| random_monomial(rng, h, n))).expect("same shape")
}

fn random_dual(rng: &mut StdRng, h: usize, n: u32) -> DualElement {
    let k = rng.gen_range(1..4);
    DualElement::from_terms(h, n, (0..k).map(|_| DualMonomial::dual_of(random_monomial(rng, h, n)))).expect("same shape")
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        return;
    }
    let slow = args.iter().any(|a| a == "--ignored" || a == "--include-ignored");
    let mut r = Runner { slow, passed: 0, failed: 0, known_red: 0, skipped: 0, unexpected: Vec::new() };
    let alg = LambdaAlgebra::new();

    // 1. h = 6 cohit dimensions.
    r.item("1", Tier::Fast, None, "dim QP_n in 6 variables, n = 1..13", || {
        Ok(dims_match(&dims(6, 1..=13)?, &[6, 15, 41, 85, 111, 190, 301, 489, 630, 945, 1205, 1001, 1294]))
    });

    // 2. h = 7, 8 cohit dimensions.
    r.item("2.a", Tier::Fast, None, "dim QP_n in 7 variables, n = 1..13", || {
        Ok(dims_match(&dims(7, 1..=13)?, &[7, 21, 63, 147, 231, 427, 729, 1238, 1785, 2792, 3900, 3983, 5334]))
    });
    r.item("2.b", Tier::Fast, None, "dim QP_n in 8 variables, n = 1..13", || {
        Ok(dims_match(&dims(8, 1..=13)?, &[8, 28, 92, 238, 434, 868, 1598, 2863, 4515, 7412, 11151, 13209, 18592]))
    });
    r.item("2.c", Tier::Slow, None, "dim QP_n in 8 variables, n = 14, 15", || Ok(dims_match(&dims(8, 14..=15)?, &[25872, 35723])));

    // 3. Weight components and Kameko kernels.
    r.item("3.a", Tier::Fast, None, "QP_8 in 6 variables by weight (2,1,1), (2,3), (4,2)", || {
        let hs = space(6, 8)?;
        let found = ["2,1,1", "2,3", "4,2"]
            .iter()
            .map(|w| hs.weight_component(&w.parse()?).map(|c| c.dim))
            .collect::<hitcore::Result<Vec<_>>>()?;
        Ok(dims_match(&found, &[210, 84, 189]))
    });
    r.item("3.b", Tier::Fast, None, "Kameko kernel in 6 variables, degree 8", || {
        let mut o = kernel_item(6, 8, 483)?;
        let hs = space(6, 8)?;
        let cb = hs.cohit_basis();
        let p = kameko(6, 8)?;
        // The kernel is exactly the sum of the three weight components above.
        let layers: usize = ["2,1,1", "2,3", "4,2"].iter().map(|w| cb.weight_component(&w.parse().unwrap()).dim).sum();
        o.ok &= layers == p.kernel_dim();
        o.detail.push_str(&format!(", weight components sum to {layers}"));
        Ok(o)
    });
    r.item("3.c", Tier::Fast, None, "Kameko kernel in 6 variables, degree 12", || kernel_item(6, 12, 960));
    r.item("3.d", Tier::Fast, None, "Kameko kernel in 5 variables, degree 33", || kernel_item(5, 33, 1002));
    r.item("3.e", Tier::Slow, None, "Kameko kernel in 8 variables, degree 12", || kernel_item(8, 12, 13181));

    // 4. Five variables.
    r.item("4.a", Tier::Fast, None, "dim QP_14 in 5 variables", || Ok(dims_match(&[space(5, 14)?.dim_cohit()], &[320])));
    r.item("4.b", Tier::Fast, None, "dim QP_30 in 5 variables and its weight layers", || {
        let cb = space(5, 30)?.cohit_basis();
        let ws = ["2,2,2,2", "2,2,4,1", "2,4,3,1", "4,3,3,1"];
        let comps: Vec<_> = ws.iter().map(|w| cb.weight_component(&w.parse().unwrap())).collect();
        let layer: Vec<usize> = comps.iter().map(|c| c.dim).collect();
        let mut o = dims_match(&[vec![cb.dim()], layer.clone()].concat(), &[840, 154, 0, 1, 685]);
        let covered: usize = layer.iter().sum();
        o.ok &= covered == cb.dim() && cb.by_weight.len() == comps.iter().filter(|c| c.dim > 0).count();
        o.detail = format!("dim {}, layers {layer:?} (expected 840, [154, 0, 1, 685])", cb.dim());
        Ok(o)
    });
    r.item("4.c", Tier::Fast, None, "zero/positive split of the degree-30 layers in 5 variables", || {
        let cb = space(5, 30)?.cohit_basis();
        let found: Vec<usize> = ["2,2,2,2", "2,2,4,1", "2,4,3,1", "4,3,3,1"]
            .iter()
            .flat_map(|w| {
                let c = cb.weight_component(&w.parse().unwrap());
                [c.dim_zero, c.dim_positive]
            })
            .collect();
        Ok(dims_match(&found, &[115, 39, 0, 0, 0, 1, 175, 510]))
    });
    let table5: [(u32, usize); 11] =
        [(33, 1322), (34, 1554), (36, 1189), (38, 2015), (39, 2130), (40, 2047), (42, 2520), (45, 1731), (46, 2349), (47, 1894), (48, 2374)];
    for (n, expected) in table5 {
        let known = (n == 48).then_some(
            "the hit-space elimination gives 2302; the tabulated 2374 is not reproduced",
        );
        r.item(&format!("4.{n}"), Tier::Slow, known, &format!("dim QP_{n} in 5 variables"), || {
            Ok(dims_match(&[space(5, n)?.dim_cohit()], &[expected]))
        });
    }

    // 5. Invariants with the coinvariant cross-check.
    r.item("5.a", Tier::Fast, None, "GL_6-invariants and coinvariants, n = 1..13", || {
        inv_item(&(1..=13).map(|n| (6, n, 0)).collect::<Vec<_>>())
    });
    r.item("5.b", Tier::Fast, None, "GL_4 in degrees 8 and 18", || inv_item(&[(4, 8, 0), (4, 18, 2)]));
    r.item("5.c", Tier::Fast, None, "GL_7, n = 1..15", || {
        inv_item(&(1..=15).map(|n| (7, n, usize::from(n == 15))).collect::<Vec<_>>())
    });
    r.item("5.d", Tier::Fast, None, "GL_8, n = 1..13", || inv_item(&(1..=13).map(|n| (8, n, 0)).collect::<Vec<_>>()));
    r.item("5.e", Tier::Slow, None, "GL_8, n = 14, 15", || inv_item(&[(8, 14, 0), (8, 15, 1)]));
    r.item("5.f", Tier::Fast, None, "GL_5 in degrees 30 and 34", || inv_item(&[(5, 30, 1), (5, 34, 0)]));

    // 6. Ext through lambda homology.
    r.item("6.a", Tier::Fast, None, "Ext^{4,4+n}, n = 8, 18, 38, 78", || {
        Ok(dims_match(&[8, 18, 38, 78].map(|t| ext_dim(&alg, 4, t)), &[0, 2, 2, 1]))
    });
    r.item("6.b", Tier::Fast, None, "Ext^{5,5+n}, n = 30, 34, 36", || {
        Ok(dims_match(&[30, 34, 36].map(|t| ext_dim(&alg, 5, t)), &[1, 0, 0]))
    });
    r.item("6.c", Tier::Fast, None, "Ext^{1,1+n} nonzero exactly at n = 2^i - 1, n <= 63", || {
        let nonzero: Vec<u32> = (0..=63).filter(|&t| ext_dim(&alg, 1, t) > 0).collect();
        let expected: Vec<u32> = (0..=6).map(|i| (1 << i) - 1).collect();
        Ok(outcome(nonzero == expected, format!("nonzero at {nonzero:?}")))
    });
    r.item("6.d", Tier::Fast, None, "Ext^{6,6+n}, n = 1..12, nonzero exactly at 10 and 11", || {
        let found: Vec<usize> = (1..=12).map(|t| ext_dim(&alg, 6, t)).collect();
        let nonzero: Vec<u32> = (1..=12).filter(|&t| found[t as usize - 1] > 0).collect();
        Ok(outcome(nonzero == [10, 11], format!("dims {found:?}")))
    });

    // 7. Transfer identities.
    let x11115 = dual_mono(&[1, 1, 1, 15]);
    let x00731 = dual_mono(&[0, 0, 7, 31]);
    let zeta = dual_file("zeta.json");
    let zeta_tilde = dual_file("zeta_tilde.json");
    let zeta_bar = dual_file("zeta_bar.json");
    let f0 = word_sum("l4 l6 l5 l3 + l5 l7 l3 l3 + l3 l3 l5 l7 + l2 l4 l5 l7");
    r.item("7.a", Tier::Fast, None, "psi_4 of x(1,1,1,15) is l1 l1 l1 l15", || psi_item(&alg, &x11115, &word_sum("l1 l1 l1 l15")));
    r.item("7.b", Tier::Fast, None, "psi_4 of x(0,0,7,31) is l0 l0 l7 l31", || psi_item(&alg, &x00731, &word_sum("l0 l0 l7 l31")));
    r.item(
        "7.c",
        Tier::Fast,
        Some("the listed degree-18 generator is not annihilated (Sq^1, Sq^2, Sq^4 leave terms), and its psi_4 differs from f0"),
        "psi_4 of the degree-18 generator is f0 + d(l3 l5 l11)",
        || {
            let d = alg.differential(&word_sum("l3 l5 l11"));
            psi_item(&alg, &zeta, &f0.add(&d))
        },
    );
    r.item(
        "7.d",
        Tier::Fast,
        Some("the listed degree-32 generator is not annihilated (Sq^2, Sq^4, Sq^8 leave terms) and the listed lambda element is not a cycle"),
        "psi_4 of the degree-32 generator is the listed nonzero class",
        || {
            let d = alg.differential(&word_sum("l7 l7 l19 + l7 l19 l7"));
            psi_item(&alg, &zeta_bar, &word_sum("l7 l7 l5 l13 + l7 l7 l9 l9 + l7 l11 l9 l5 + l15 l3 l11 l3").add(&d))
        },
    );
    r.item("7.e", Tier::Fast, None, "x(1,1,1,15) is annihilated", || annihilation_item(&x11115));
    r.item(
        "7.f",
        Tier::Fast,
        Some("the listed degree-18 generator is not annihilated"),
        "the degree-18 generator is annihilated",
        || annihilation_item(&zeta),
    );
    r.item("7.g", Tier::Fast, None, "x(0,0,7,31) is annihilated", || annihilation_item(&x00731));
    r.item("7.h", Tier::Fast, None, "the degree-38 generator is annihilated", || annihilation_item(&zeta_tilde));
    r.item("7.i", Tier::Fast, None, "psi_4 of the degree-38 generator is a nonzero class", || {
        let t = transfer_image(&alg, &zeta_tilde, &Limits::forced())?;
        Ok(outcome(t.classification.is_nonzero_class(), format!("coordinates {}", t.classification.coordinates)))
    });
    r.item("7.j", Tier::Fast, None, "f0 is a nonzero class and d(l3 l5 l11) vanishes", || {
        let ext = ext_group(&alg, 4, 18, &Limits::forced())?;
        let c = ext.classify(&alg, &f0)?;
        let d = alg.normalize(&alg.differential(&word_sum("l3 l5 l11")));
        Ok(outcome(c.is_nonzero_class() && d.is_zero(), format!("f0 coordinates {}, d(l3 l5 l11) = {d}", c.coordinates)))
    });
    for (h, n, dim) in [(4usize, 18u32, 2usize), (4, 32, 1), (4, 38, 2)] {
        r.item(&format!("7.t{n}"), Tier::Fast, None, &format!("transfer of coinvariants onto Ext^{{{h},{}}}", h as u32 + n), || {
            transfer_onto(&alg, h, n, dim)
        });
    }

    // 8. Property suites, seeded.
    let mut rng = StdRng::seed_from_u64(SEED);
    r.item("8.a", Tier::Fast, None, "left/right Steenrod adjointness, 500 cases", || {
        let mut bad = 0;
        for _ in 0..500 {
            let h = rng.gen_range(1..=4);
            let n = rng.gen_range(0..=14);
            let k = rng.gen_range(0..=n);
            let xi = random_dual(&mut rng, h, n);
            let f = random_poly(&mut rng, h, n - k);
            if pairing(&f, &dual_sq(k, &xi))? != pairing(&sq(k, &f), &xi)? {
                bad += 1;
            }
        }
        Ok(outcome(bad == 0, format!("{bad} failures")))
    });
    r.item("8.b", Tier::Fast, None, "Adem relations as operators, 200 cases", || {
        let mut bad = 0;
        for _ in 0..200 {
            let h = rng.gen_range(1..=3);
            let n = rng.gen_range(0..=10);
            let j = rng.gen_range(1..=7u32);
            let i = rng.gen_range(1..2 * j);
            let f = random_poly(&mut rng, h, n);
            let mut rhs = Polynomial::zero(h);
            for t in 0..=i / 2 {
                if binom2(j as i64 - t as i64 - 1, i as i64 - 2 * t as i64) {
                    rhs = rhs.add(&sq(i + j - t, &sq(t, &f)))?;
                }
            }
            if sq(i, &sq(j, &f)) != rhs {
                bad += 1;
            }
        }
        Ok(outcome(bad == 0, format!("{bad} failures")))
    });
    r.item("8.c", Tier::Fast, None, "d^2 = 0 on Lambda^{s,t}, s <= 5, t <= 40", || {
        let mut words = 0;
        let mut bad = 0;
        for s in 1..=5 {
            for t in 0..=40 {
                for w in lambda_basis(s, t) {
                    words += 1;
                    let d = alg.differential(&LambdaElement::from_word(w));
                    if !alg.differential(&d).is_zero() {
                        bad += 1;
                    }
                }
            }
        }
        Ok(outcome(bad == 0, format!("{words} basis words, {bad} failures")))
    });
    r.item("8.d", Tier::Fast, None, "Cartan formula, 200 cases", || {
        let mut bad = 0;
        for _ in 0..200 {
            let h = rng.gen_range(1..=3);
            let (df, dg) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
            let f = random_poly(&mut rng, h, df);
            let g = random_poly(&mut rng, h, dg);
            let k = rng.gen_range(0..=8);
            let mut rhs = Polynomial::zero(h);
            for i in 0..=k {
                rhs = rhs.add(&sq(i, &f).mul(&sq(k - i, &g))?)?;
            }
            if sq(k, &f.mul(&g)?) != rhs {
                bad += 1;
            }
        }
        Ok(outcome(bad == 0, format!("{bad} failures")))
    });
    r.item("8.e", Tier::Fast, None, "monomials below the minimal spike are hit, h <= 4, n <= 10", || {
        let mut checked = 0;
        let mut bad = 0;
        for h in 1..=4 {
            for n in 1..=10 {
                if mu(n) as usize > h {
                    continue;
                }
                let spike = minimal_spike(h, n)?.weight();
                let hs = space(h, n)?;
                for t in monomials(h, n).into_iter().filter(|t| t.weight() < spike) {
                    checked += 1;
                    if !hs.is_hit(&Polynomial::from_monomial(t))? {
                        bad += 1;
                    }
                }
            }
        }
        Ok(outcome(bad == 0 && checked > 0, format!("{checked} monomials, {bad} not hit")))
    });
    r.item("8.f", Tier::Fast, None, "Kameko map is onto with rank-nullity at every parity-compatible pair", || {
        let mut pairs = Vec::new();
        for (h, top) in [(3usize, 17u32), (4, 18), (5, 33), (6, 13), (7, 13), (8, 13)] {
            for n in (h as u32..=top).step_by(2) {
                pairs.push((h, n));
            }
        }
        let mut bad = Vec::new();
        for &(h, n) in &pairs {
            let p = kameko(h, n)?;
            let rk = p.down.rank();
            if rk != p.down.target_dim || rk + p.kernel_dim() != p.down.source_dim() {
                bad.push((h, n));
            }
        }
        Ok(outcome(bad.is_empty(), format!("{} pairs, failures {bad:?}", pairs.len())))
    });
    r.item("8.g", Tier::Fast, None, "annihilated basis is dual to the admissible basis", || {
        let mut bad = Vec::new();
        let cases = [(2usize, 6u32), (3, 8), (3, 11), (4, 9), (4, 13), (5, 10)];
        for (h, n) in cases {
            let adm = space(h, n)?.cohit_basis().admissibles;
            let ann = AnnihilatedSpace::compute(h, n, &Limits::forced())?.elements();
            let mut ok = ann.len() == adm.len();
            for (i, m) in adm.iter().enumerate() {
                for (j, xi) in ann.iter().enumerate() {
                    ok &= pairing(&Polynomial::from_monomial(*m), xi)? == (i == j);
                }
            }
            if !ok {
                bad.push((h, n));
            }
        }
        Ok(outcome(bad.is_empty(), format!("{} degrees, failures {bad:?}", cases.len())))
    });

    println!(
        "\n{} passed, {} failed, {} known discrepancies, {} skipped",
        r.passed, r.failed, r.known_red, r.skipped
    );
    if !r.unexpected.is_empty() {
        println!("unexpected: {}", r.unexpected.join(", "));
        std::process::exit(1);
    }
}
