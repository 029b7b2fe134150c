//! Singular vectors: closed-form loci and positions, and exact detection as
//! the common kernel of annihilation operators on a bigrade component.

use serde::Serialize;

use crate::algebra::{Algebra, Gen, Mode};
use crate::linalg::kernel;
use crate::module::{
    check_hw, format_monomial, Bigrade, HwConditions, Module, ModuleSpec, State,
};
use crate::scalar::RatFun;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `Lambda_ch(p, j) = p(p+1) + 2pj`.
pub fn charged_lambda(p: i64, j: &RatFun) -> RatFun {
    RatFun::from_int(p * (p + 1)) + RatFun::from_int(2 * p) * j
}

/// `h-(r,s,t) = (r+1)/t - s`, `h+(r,s,t) = -(r-1)/t + s - 1`.
pub fn topological_h(sign: Sign, r: i64, s: i64, t: &RatFun) -> RatFun {
    let ri = RatFun::from_int;
    match sign {
        Sign::Minus => ri(r + 1) / t - ri(s),
        Sign::Plus => -(ri(r - 1) / t) + ri(s - 1),
    }
}

/// Charge, level and twist of the topological singular vector
/// `E(r,s)` relative to the defining vector.
pub fn topological_position(sign: Sign, r: i64, s: i64) -> (i64, i64, i64) {
    let twice = r * (r + 2 * s - 1);
    debug_assert!(twice % 2 == 0, "r(r+2s-1) is always even");
    (sign.value() * r, twice / 2, -sign.value() * r)
}

/// Bigrade of the sl(2) Verma singular vector `MFF(r,s)`.
pub fn mff_position(sign: Sign, r: i64, s: i64) -> Bigrade {
    match sign {
        Sign::Plus => Bigrade::new(-r, r * (s - 1)),
        Sign::Minus => Bigrade::new(r, r * s),
    }
}

/// `l_ch(p) = p(p+1)/t - p h`: the massive N=2 image of `Lambda_ch`.
pub fn massive_charged_l(p: i64, h: &RatFun, t: &RatFun) -> RatFun {
    RatFun::from_int(p * (p + 1)) / t - RatFun::from_int(p) * h
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularKind {
    Charged,
    Topological,
    Sl2Verma,
    Massive,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    pub kind: SingularKind,
    pub sign: Option<Sign>,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub p: Option<i64>,
    pub charge: i64,
    pub level: i64,
    pub theta: i64,
    pub conditions: HwConditions,
    /// Dimension of the kernel this vector came from; above 1 marks a
    /// degenerate point.
    pub kernel_dim: usize,
    #[serde(skip)]
    pub state: State,
    pub verified: bool,
}

impl SingularReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["state"] = serde_json::Value::Array(
            self.state
                .terms()
                .map(|(m, c)| serde_json::json!({"monomial": format_monomial(m), "coeff": c.to_json()}))
                .collect(),
        );
        v
    }
}

pub fn reports_json(reports: &[SingularReport]) -> serde_json::Value {
    serde_json::json!({
        "schema": "n2sl2.singular/1",
        "vectors": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    })
}

/// Kernel of the condition modes on one bigrade component, as states.
pub fn singular_at(v: &Module, g: Bigrade, cond: HwConditions) -> Result<Vec<State>, Error> {
    let basis = v.build_basis(g);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let horizon = g.level + v.theta().abs();
    let mut rows: Vec<Vec<RatFun>> = Vec::new();
    for m in cond.modes(horizon) {
        let images: Vec<State> = basis
            .iter()
            .map(|b| v.act(m, &State::basis(b.clone())))
            .collect::<Result<_, _>>()?;
        let mut keys: Vec<_> = images.iter().flat_map(|s| s.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            rows.push(images.iter().map(|s| s.coeff(&k)).collect());
        }
    }
    Ok(kernel(&rows, basis.len())
        .into_iter()
        .map(|x| basis.iter().cloned().zip(x).collect())
        .collect())
}

/// Condition sets tried at a bigrade, strongest first.
fn candidates(v: &Module, g: Bigrade, extremal: bool) -> Vec<HwConditions> {
    let th = v.theta();
    match v.spec() {
        ModuleSpec::Topological { .. } => vec![HwConditions::Topological(th - g.charge)],
        ModuleSpec::Massive { .. } => {
            let mut c = vec![
                HwConditions::Topological(-g.charge),
                HwConditions::Topological(-g.charge - 1),
            ];
            if !extremal {
                c.push(HwConditions::Massive(-g.charge));
            }
            c
        }
        ModuleSpec::Sl2Verma { .. } => vec![HwConditions::Sl2Verma(th)],
        ModuleSpec::Relaxed { .. } => vec![HwConditions::Sl2Verma(th), HwConditions::Sl2Verma(th + 1)],
        _ => Vec::new(),
    }
}

fn classify(v: &Module, g: Bigrade, cond: HwConditions) -> (SingularKind, Option<Sign>, Option<i64>, Option<i64>, Option<i64>) {
    let th = v.theta();
    match (v.spec(), cond) {
        (ModuleSpec::Topological { .. }, _) => {
            let r = g.charge.abs();
            let sign = if g.charge > 0 { Sign::Plus } else { Sign::Minus };
            // level = r(r+2s-1)/2
            let s = (r > 0 && (2 * g.level) % r == 0)
                .then(|| 2 * g.level / r - r + 1)
                .filter(|x| x % 2 == 0 && *x >= 2)
                .map(|x| x / 2);
            (SingularKind::Topological, Some(sign), Some(r).filter(|r| *r > 0), s, None)
        }
        (ModuleSpec::Massive { .. }, HwConditions::Topological(_)) => {
            let p = if g.charge < 0 { -g.charge - 1 } else { -g.charge };
            (SingularKind::Charged, None, None, None, Some(p))
        }
        (ModuleSpec::Massive { .. }, _) => (SingularKind::Massive, None, None, None, None),
        (ModuleSpec::Relaxed { .. }, HwConditions::Sl2Verma(t)) => {
            let p = if t == th { g.charge } else { g.charge - 1 };
            (SingularKind::Charged, None, None, None, Some(p))
        }
        _ => {
            let (sign, r) = if g.charge <= 0 {
                (Sign::Plus, -g.charge)
            } else {
                (Sign::Minus, g.charge)
            };
            let s = (r > 0 && g.level % r == 0).then(|| match sign {
                Sign::Plus => g.level / r + 1,
                Sign::Minus => g.level / r,
            });
            (SingularKind::Sl2Verma, Some(sign), Some(r).filter(|r| *r > 0), s, None)
        }
    }
}

/// All singular vectors up to `max_level` with charges in `window`,
/// excluding the defining vector.
pub fn detect_singular(v: &Module, max_level: i64, window: (i64, i64)) -> Result<Vec<SingularReport>, Error> {
    if !matches!(v.spec().algebra(), Algebra::N2 | Algebra::Sl2) {
        return Err(Error::InvalidModule(
            "singular vectors are searched in N=2 and sl(2) modules".into(),
        ));
    }
    let mut out = Vec::new();
    for charge in window.0..=window.1 {
        let mut extremal_found = false;
        for level in 0..=max_level {
            let g = Bigrade::new(charge, level);
            if v.dim(g) == 0 {
                continue;
            }
            let extremal = !extremal_found;
            extremal_found = true;
            if charge == 0 && level == 0 {
                continue;
            }
            out.extend(detect_at(v, g, extremal)?);
        }
    }
    Ok(out)
}

/// Singular vectors on one bigrade, trying each candidate condition set
/// and keeping the strongest that has a kernel.
pub fn detect_at(v: &Module, g: Bigrade, extremal: bool) -> Result<Vec<SingularReport>, Error> {
    for cond in candidates(v, g, extremal) {
        let ker = singular_at(v, g, cond)?;
        if ker.is_empty() {
            continue;
        }
        let dim = ker.len();
        let (kind, sign, r, s, p) = classify(v, g, cond);
        let theta = match cond {
            HwConditions::Sl2Verma(t)
            | HwConditions::Relaxed(t)
            | HwConditions::Topological(t)
            | HwConditions::Massive(t) => t,
            _ => 0,
        };
        let mut out = Vec::new();
        for state in ker {
            let verified = check_hw(v, &state, cond)?.holds && v.bigrade(&state) == Some(g);
            out.push(SingularReport {
                kind: kind.clone(),
                sign,
                r,
                s,
                p,
                charge: g.charge,
                level: g.level,
                theta,
                conditions: cond,
                kernel_dim: dim,
                state,
                verified,
            });
        }
        return Ok(out);
    }
    Ok(Vec::new())
}

/// The charged singular vector of the relaxed module at
/// `Lambda = Lambda_ch(p, j)`.
pub fn construct_charged(p: i64, j: &RatFun, k: &RatFun) -> Result<ChargedReport, Error> {
    let v = Module::new(ModuleSpec::Relaxed {
        j: j.clone(),
        lambda: charged_lambda(p, j),
        k: k.clone(),
        theta: 0,
    })?;
    let (letter, power, cond) = if p <= -1 {
        (Mode::new(Gen::Jm, 0), -p, HwConditions::Sl2Verma(0))
    } else {
        (Mode::new(Gen::Jp, 0), p + 1, HwConditions::Sl2Verma(1))
    };
    let state = v.state(vec![letter; power as usize])?;
    let checked = [HwConditions::Sl2Verma(0), HwConditions::Sl2Verma(1)]
        .into_iter()
        .map(|c| Ok((c, check_hw(&v, &state, c)?.holds)))
        .collect::<Result<Vec<_>, Error>>()?;
    let verified = checked.iter().any(|(c, ok)| *c == cond && *ok);
    let bigrade = v.bigrade(&state).expect("homogeneous");
    Ok(ChargedReport {
        p,
        bigrade,
        conditions: cond,
        checked,
        state,
        verified,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChargedReport {
    pub p: i64,
    pub bigrade: Bigrade,
    /// The condition set the construction is expected to pass.
    pub conditions: HwConditions,
    /// Outcome of each candidate condition set, as found by the checker.
    pub checked: Vec<(HwConditions, bool)>,
    #[serde(skip)]
    pub state: State,
    pub verified: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topo(h: RatFun) -> Module {
        Module::new(ModuleSpec::Topological {
            h,
            t: RatFun::t(),
            theta: 0,
        })
        .unwrap()
    }

    #[test]
    fn loci() {
        let t = RatFun::t();
        assert_eq!(topological_h(Sign::Minus, 1, 1, &t), RatFun::from_int(2) / &t - RatFun::one());
        assert!(topological_h(Sign::Plus, 1, 1, &t).is_zero());
        for r in 1..4 {
            for s in 1..4 {
                let sum = topological_h(Sign::Minus, r, s, &t) + topological_h(Sign::Plus, r, s, &t);
                assert_eq!(sum, RatFun::from_int(2) / &t - RatFun::one());
            }
        }
        assert_eq!(topological_position(Sign::Plus, 1, 1), (1, 1, -1));
        assert_eq!(topological_position(Sign::Minus, 1, 1), (-1, 1, 1));
        assert_eq!(topological_position(Sign::Plus, 2, 1), (2, 3, -2));
        let j = RatFun::t();
        assert!(charged_lambda(0, &j).is_zero());
        assert_eq!(charged_lambda(1, &j), RatFun::from_int(2) + RatFun::from_int(2) * &j);
        assert_eq!(charged_lambda(-1, &j), RatFun::from_int(-2) * &j);
    }

    #[test]
    fn e_plus_and_minus_one_one() {
        let v = topo(RatFun::zero());
        let found = detect_singular(&v, 1, (-2, 2)).unwrap();
        assert_eq!(found.len(), 1);
        let e = &found[0];
        assert_eq!((e.charge, e.level, e.theta), (1, 1, -1));
        assert_eq!(e.state, State::basis(vec![Mode::parse("G-1").unwrap()]));
        assert!(e.verified);

        let h = topological_h(Sign::Minus, 1, 1, &RatFun::t());
        let found = detect_singular(&topo(h), 1, (-2, 2)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].charge, found[0].level, found[0].theta), (-1, 1, 1));
    }

    #[test]
    fn off_locus_is_empty() {
        let v = topo(RatFun::from_ratio(1, 7));
        assert!(detect_singular(&v, 2, (-3, 3)).unwrap().is_empty());
    }

    #[test]
    fn sl2_verma_level_zero() {
        let v = Module::new(ModuleSpec::Sl2Verma {
            j: RatFun::zero(),
            k: RatFun::t(),
            theta: 0,
        })
        .unwrap();
        let found = detect_singular(&v, 0, (-3, 0)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].charge, found[0].level), (-1, 0));
        assert_eq!(found[0].state, State::basis(vec![Mode::parse("J-0").unwrap()]));
    }

    #[test]
    fn charged_vectors() {
        let (j, k) = (RatFun::from_ratio(2, 5), RatFun::t());
        for p in -3..=3 {
            let rep = construct_charged(p, &j, &k).unwrap();
            assert!(rep.verified, "p = {p}: {:?}", rep.checked);
            let n = if p >= 0 { p + 1 } else { p };
            assert_eq!(rep.bigrade, Bigrade::new(n, 0));
        }
    }

    #[test]
    fn massive_charged_p1() {
        let t = RatFun::t();
        let h = RatFun::from_ratio(1, 3);
        let v = Module::new(ModuleSpec::Massive {
            l: massive_charged_l(1, &h, &t),
            h,
            t,
        })
        .unwrap();
        let found = detect_singular(&v, 1, (-2, 1)).unwrap();
        assert_eq!(found.len(), 1, "{found:?}");
        assert_eq!((found[0].charge, found[0].level, found[0].p), (-2, 1, Some(1)));
    }
}
