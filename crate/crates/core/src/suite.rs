//! The verification suite: one exact check per claim, shared by the
//! `acceptance` test target and the `suite` subcommand.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_structure, Centrals};
use crate::diagram::{classify_criterion, Criterion};
use crate::fock::{sl2_closure_violations, verify_decomposition, FreeField, Theorem};
use crate::module::{relaxed_extremal_norm, Bigrade, HwConditions, Module, ModuleSpec, State};
use crate::scalar::RatFun;
use crate::singular::{
    construct_charged, detect_singular, mff_position, singular_at, topological_h, topological_position, Sign,
};
use crate::string::{closure_violations, dress, dressing_dimension, kac_dimension, key_identity, StringRep};
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms){}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.millis,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", self.detail)
            }
        )
    }
}

pub const NAMES: [&str; 11] = [
    "structure of the five algebras and spectral flow",
    "relaxed extremal norms",
    "charged singular vectors",
    "topological singular vectors",
    "topological modules against twisted sl(2) Verma modules",
    "massive modules against twisted relaxed modules",
    "singular vectors on both sides",
    "string realization closes on N=2",
    "dressing and the topological effect",
    "termination criteria",
    "key identity",
];

fn rng(seed: u64, id: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (u64::from(id) << 32))
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> RatFun {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        if n != 0 || !nonzero {
            return RatFun::from_ratio(n, d);
        }
    }
}

/// Runs one criterion by number (1 to 11).
pub fn run(id: u32, seed: u64) -> Outcome {
    let start = Instant::now();
    let mut rng = rng(seed, id);
    let res = match id {
        1 => structure(seed),
        2 => norms(&mut rng),
        3 => charged(),
        4 => topological(&mut rng),
        5 => theorem(Theorem::Verma),
        6 => theorem(Theorem::Relaxed),
        7 => correspondence(&mut rng),
        8 => string_closure(),
        9 => dressing(&mut rng),
        10 => criteria(&mut rng),
        11 => keys(&mut rng),
        _ => Err(Error::Parse(format!("no criterion {id}"))),
    };
    let (pass, detail) = match res {
        Ok(failures) if failures.is_empty() => (true, String::new()),
        Ok(failures) => (false, format!("{} failure(s), first: {}", failures.len(), failures[0])),
        Err(e) => (false, e.to_string()),
    };
    Outcome {
        id,
        name: NAMES.get(id as usize - 1).copied().unwrap_or("unknown"),
        pass,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=11).map(|id| run(id, seed)).collect()
}

type Failures = Result<Vec<String>, Error>;

fn structure(seed: u64) -> Failures {
    let report = check_structure(500, seed, &Centrals::generic())?;
    Ok(report
        .algebras
        .iter()
        .flat_map(|a| a.violations.iter().map(move |v| format!("{:?}: {v}", a.algebra)))
        .collect())
}

fn norms(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let mut cases: Vec<(RatFun, RatFun, RatFun)> = (0..20)
        .map(|_| {
            let k = loop {
                let k = random_rational(rng, true);
                if k != RatFun::from_int(-2) {
                    break k;
                }
            };
            (random_rational(rng, false), random_rational(rng, false), k)
        })
        .collect();
    // one parameter at a time kept symbolic
    cases.push((RatFun::t(), RatFun::from_ratio(7, 3), RatFun::from_ratio(1, 2)));
    cases.push((RatFun::from_ratio(-2, 5), RatFun::t(), RatFun::from_int(3)));
    for (j, lambda, k) in cases {
        let v = Module::new(ModuleSpec::Relaxed {
            j: j.clone(),
            lambda: lambda.clone(),
            k,
            theta: 0,
        })?;
        for n in -6..=6 {
            let g = v.gram_matrix(Bigrade::new(n, 0))?;
            if g.entries != vec![vec![relaxed_extremal_norm(&j, &lambda, n)]] {
                out.push(format!("j = {j}, Lambda = {lambda}, n = {n}"));
            }
        }
    }
    Ok(out)
}

fn charged() -> Failures {
    let mut out = Vec::new();
    let (j, k) = (RatFun::t(), RatFun::from_ratio(5, 3));
    for p in -4..=4 {
        let rep = construct_charged(p, &j, &k)?;
        // p = 0 is only recorded
        if p != 0 && !rep.verified {
            out.push(format!("p = {p} fails {}", rep.conditions));
        }
    }
    Ok(out)
}

const RS4: [(i64, i64); 8] = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 2), (4, 1)];

fn topo_module(h: RatFun, t: RatFun) -> Result<Module, Error> {
    Module::new(ModuleSpec::Topological { h, t, theta: 0 })
}

fn topological(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let t = RatFun::t();
    for (r, s) in RS4 {
        for sign in [Sign::Minus, Sign::Plus] {
            let v = topo_module(topological_h(sign, r, s, &t), t.clone())?;
            let (charge, level, theta) = topological_position(sign, r, s);
            let ker = singular_at(&v, Bigrade::new(charge, level), HwConditions::Topological(theta))?;
            if ker.len() != 1 {
                out.push(format!("{sign:?}({r},{s}): kernel dimension {}", ker.len()));
            }
        }
    }
    for _ in 0..10 {
        let (h, t) = off_locus(rng);
        let v = topo_module(h.clone(), t.clone())?;
        let found = detect_singular(&v, 4, (-3, 3))?;
        if !found.is_empty() {
            out.push(format!("h = {h}, t = {t}: {} vector(s)", found.len()));
        }
    }
    Ok(out)
}

/// Rational `(h, t)` away from every topological locus with `r, s <= 6`.
fn off_locus(rng: &mut ChaCha8Rng) -> (RatFun, RatFun) {
    loop {
        let h = RatFun::from_ratio(rng.gen_range(-40..=40), rng.gen_range(7..=19));
        let t = RatFun::from_ratio(rng.gen_range(1..=40), rng.gen_range(7..=19));
        let on = (1..=6).any(|r| {
            (0..=6).any(|s| topological_h(Sign::Minus, r, s, &t) == h || topological_h(Sign::Plus, r, s, &t) == h)
        });
        if !on && t != RatFun::from_int(2) {
            return (h, t);
        }
    }
}

fn theorem(which: Theorem) -> Failures {
    let (h, t) = (RatFun::from_ratio(2, 7), RatFun::from_ratio(5, 3));
    let l = RatFun::from_ratio(3, 11);
    let l_opt = matches!(which, Theorem::Relaxed).then_some(&l);
    let report = verify_decomposition(which, &h, l_opt, &t, (-2, 2), 3, 3)?;
    let mut out = report.failures.clone();
    let spec = match which {
        Theorem::Verma => ModuleSpec::Topological {
            h: h.clone(),
            t: t.clone(),
            theta: 0,
        },
        Theorem::Relaxed => ModuleSpec::Massive {
            h: h.clone(),
            l: l.clone(),
            t: t.clone(),
        },
    };
    let ff = FreeField::new(Module::new(spec)?)?;
    let states = ff.states_up_to(2, (-1, 1), (-1, 1));
    out.extend(sl2_closure_violations(&ff, &states, 2)?);
    Ok(out)
}

/// sl(2) bigrade of `v (x) |n>` for an N=2 state `v` of the given bigrade,
/// inside the untwisted summand `n = -charge`.
pub fn sl2_image(g: Bigrade) -> Bigrade {
    let n = -g.charge;
    Bigrade::new(-g.charge, g.level - n * (n - 1) / 2)
}

fn correspondence(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let t = RatFun::t();
    let k = &t - RatFun::from_int(2);
    let sl2_of = |h: &RatFun| -> Result<Module, Error> {
        Module::new(ModuleSpec::Sl2Verma {
            j: -(&t * h) / RatFun::from_int(2),
            k: k.clone(),
            theta: 0,
        })
    };
    for (r, s) in [(1, 1), (1, 2), (2, 1)] {
        for sign in [Sign::Minus, Sign::Plus] {
            let h = topological_h(sign, r, s, &t);
            let (charge, level, theta) = topological_position(sign, r, s);
            let n2 = singular_at(&topo_module(h.clone(), t.clone())?, Bigrade::new(charge, level), HwConditions::Topological(theta))?;
            let target = sl2_image(Bigrade::new(charge, level));
            if target != mff_position(sign, r, s) {
                out.push(format!("{sign:?}({r},{s}): image {target} is not the sl(2) position"));
            }
            let sl2 = singular_at(&sl2_of(&h)?, target, HwConditions::Sl2Verma(0))?;
            if n2.len() != 1 || sl2.len() != 1 {
                out.push(format!("{sign:?}({r},{s}): kernels {} and {}", n2.len(), sl2.len()));
            }
        }
    }
    for _ in 0..5 {
        let (h, t0) = off_locus(rng);
        let n2 = topo_module(h.clone(), t0.clone())?;
        let sl2 = Module::new(ModuleSpec::Sl2Verma {
            j: -(&t0 * &h) / RatFun::from_int(2),
            k: &t0 - RatFun::from_int(2),
            theta: 0,
        })?;
        let a = detect_singular(&n2, 3, (-2, 2))?.len();
        let b = detect_singular(&sl2, 2, (-2, 2))?.len();
        if a + b != 0 {
            out.push(format!("h = {h}, t = {t0}: {a} and {b} vector(s) off the loci"));
        }
    }
    Ok(out)
}

fn string_closure() -> Failures {
    let rep = StringRep::new(&RatFun::t(), &RatFun::from_ratio(-3, 4), &RatFun::from_ratio(5, 7))?;
    let states = rep.states_up_to(2, (-2, 2));
    closure_violations(&rep, &states, 2)
}

fn dressing(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let mut params: Vec<(RatFun, RatFun, RatFun)> = (0..5)
        .map(|_| {
            let t = RatFun::from_ratio(rng.gen_range(1..=30), rng.gen_range(1..=7));
            (random_rational(rng, false), random_rational(rng, false), t)
        })
        .collect();
    params.push((RatFun::from_ratio(2, 3), RatFun::from_ratio(1, 5), RatFun::t()));
    for (h, delta, t) in &params {
        for theta in -2..=2 {
            let d = dress(delta, h, t, theta)?;
            let generic = *delta != dressing_dimension(h, t);
            if !d.massive || !d.eigenvalues_match || (generic && d.topological) {
                out.push(format!("generic dressing h = {h}, Delta = {delta}, t = {t}, theta = {theta}"));
            }
            let d = dress(&dressing_dimension(h, t), h, t, theta)?;
            if !d.topological || !d.label.l.is_zero() {
                out.push(format!("topological dressing h = {h}, t = {t}, theta = {theta}"));
            }
        }
        if dressing_dimension(h, t) != dressing_dimension(&(RatFun::from_int(2) / t - h), t) {
            out.push(format!("alternate dressing h = {h}, t = {t}"));
        }
    }
    let t = RatFun::t();
    for r in 1..=3 {
        for s in 1..=3 {
            let kac = kac_dimension(r, s, &t);
            if dressing_dimension(&topological_h(Sign::Minus, r, s, &t), &t) != kac {
                out.push(format!("h-({r},{s})"));
            }
            if dressing_dimension(&topological_h(Sign::Plus, r, s + 1, &t), &t) != kac {
                out.push(format!("h+({r},{})", s + 1));
            }
        }
    }
    Ok(out)
}

fn random_state(v: &Module, rng: &mut ChaCha8Rng, window: i64, max_level: i64) -> Result<Option<State>, Error> {
    let g = Bigrade::new(rng.gen_range(-window..=window), rng.gen_range(0..=max_level));
    let basis = v.build_basis(g);
    if basis.is_empty() {
        return Ok(None);
    }
    let mut s = State::zero();
    for mono in basis {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            s.add_scaled(&v.state(mono)?, &RatFun::from_int(c));
        }
    }
    Ok((!s.is_zero()).then_some(s))
}

fn criteria(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let t = RatFun::from_ratio(7, 5);
    let x = RatFun::from_ratio(3, 8);
    let cases = [
        (ModuleSpec::Sl2Verma { j: x.clone(), k: t.clone(), theta: 0 }, Criterion::RelaxedSl2, true),
        (
            ModuleSpec::Relaxed {
                j: x.clone(),
                lambda: RatFun::from_ratio(9, 4),
                k: t.clone(),
                theta: 0,
            },
            Criterion::RelaxedSl2,
            false,
        ),
        (ModuleSpec::Topological { h: x.clone(), t: t.clone(), theta: 0 }, Criterion::TopologicalParabola, true),
        (
            ModuleSpec::Massive {
                h: x.clone(),
                l: RatFun::from_ratio(2, 9),
                t: t.clone(),
            },
            Criterion::TopologicalParabola,
            false,
        ),
        (
            ModuleSpec::Massive {
                h: x.clone(),
                l: RatFun::from_ratio(2, 9),
                t: t.clone(),
            },
            Criterion::MassiveLine,
            true,
        ),
    ];
    for (spec, which, expect) in cases {
        let v = Module::new(spec)?;
        let mut sampled = 0;
        while sampled < 6 {
            let Some(s) = random_state(&v, rng, 2, 2)? else {
                continue;
            };
            sampled += 1;
            let res = classify_criterion(&v, &s, which, 8)?;
            if res.holds != expect {
                out.push(format!("{} under {which:?}: got {}", v.spec().name(), res.holds));
            }
        }
    }
    Ok(out)
}

fn keys(rng: &mut ChaCha8Rng) -> Failures {
    let mut out = Vec::new();
    let mut hits = [0; 2];
    for i in 0..50 {
        let r = rng.gen_range(1..=5);
        let th1 = rng.gen_range(-3..=3);
        // a quarter of the draws sit on the s = 0 branch
        let (s, th2) = if i % 4 == 0 {
            (0, r + th1)
        } else {
            (rng.gen_range(0..=4), rng.gen_range(-3..=3))
        };
        let num = r + th1 - th2;
        // and half the rational draws on the other branch
        let t = if s != 0 && num != 0 && i % 2 == 1 {
            RatFun::from_ratio(num, s)
        } else {
            random_rational(rng, true)
        };
        for (which, t) in [RatFun::t(), t].into_iter().enumerate() {
            let k = key_identity(r, s, th1, th2, &t);
            hits[which] += usize::from(k.criterion);
            if k.criterion != k.labels_equal {
                out.push(format!("r = {r}, s = {s}, theta1 = {th1}, theta2 = {th2}, t = {t}"));
            }
        }
    }
    if hits.iter().any(|&h| h < 5) {
        out.push(format!("too few identities hold in the sample: {hits:?}"));
    }
    Ok(out)
}
