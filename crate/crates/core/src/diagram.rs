//! Extremal diagrams and the termination criteria that single out the
//! module categories.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Algebra, Gen, Mode};
use crate::module::{check_hw, Bigrade, HwConditions, Module, State};
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct DiagramNode {
    pub charge: i64,
    pub level: i64,
    pub dim: usize,
    /// Highest-weight-type conditions satisfied by the extremal state.
    pub conditions: Vec<String>,
    pub cusp: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub mode: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramGraph {
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
}

impl DiagramGraph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "n2sl2.diagram/1",
            "nodes": self.nodes,
            "edges": self.edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph extremal {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let mut label = format!("{},{}", n.charge, n.level);
            if n.cusp {
                let strongest = n
                    .conditions
                    .iter()
                    .find(|c| c.starts_with("Topological") || c.starts_with("Verma"));
                if let Some(c) = strongest {
                    label.push(',');
                    label.push_str(c);
                }
            }
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.mode);
        }
        s.push_str("}\n");
        s
    }

    pub fn cusps(&self) -> impl Iterator<Item = &DiagramNode> {
        self.nodes.iter().filter(|n| n.cusp)
    }
}

fn candidate_conditions(alg: Algebra, reach: i64) -> Vec<HwConditions> {
    let mut out = Vec::new();
    for th in -reach..=reach {
        match alg {
            Algebra::N2 => {
                out.push(HwConditions::Topological(th));
                out.push(HwConditions::Massive(th));
            }
            Algebra::Sl2 => {
                out.push(HwConditions::Sl2Verma(th));
                out.push(HwConditions::Relaxed(th));
            }
            _ => {}
        }
    }
    out
}

/// Minimal-level state of each charge in `window`, searched up to
/// `max_level`, with the conditions each one satisfies.
pub fn extremal_diagram(v: &Module, window: (i64, i64), max_level: i64) -> Result<DiagramGraph, Error> {
    let alg = v.spec().algebra();
    if !matches!(alg, Algebra::N2 | Algebra::Sl2) {
        return Err(Error::InvalidModule("extremal diagrams are drawn for N=2 and sl(2) modules".into()));
    }
    let reach = window.0.abs().max(window.1.abs()) + v.theta().abs() + 2;
    let conds = candidate_conditions(alg, reach);
    let mut nodes = Vec::new();
    for charge in window.0..=window.1 {
        let Some((level, basis)) = (0..=max_level)
            .map(|l| (l, v.build_basis(Bigrade::new(charge, l))))
            .find(|(_, b)| !b.is_empty())
        else {
            continue;
        };
        let mut conditions = Vec::new();
        if basis.len() == 1 {
            let s = v.state(basis[0].clone())?;
            for &c in &conds {
                if check_hw(v, &s, c)?.holds {
                    conditions.push(c.to_string());
                }
            }
        }
        let cusp = conditions
            .iter()
            .any(|c| c.starts_with("Topological") || c.starts_with("Verma"));
        nodes.push(DiagramNode {
            charge,
            level,
            dim: basis.len(),
            conditions,
            cusp,
        });
    }
    let th = v.theta();
    let (raise, lower) = match alg {
        Algebra::N2 => (Gen::G, Gen::Q),
        _ => (Gen::Jp, Gen::Jm),
    };
    let mut edges = Vec::new();
    for i in 0..nodes.len().saturating_sub(1) {
        let (a, b) = (&nodes[i], &nodes[i + 1]);
        if b.charge != a.charge + 1 {
            continue;
        }
        let d = b.level - a.level;
        if d >= 0 {
            edges.push(DiagramEdge {
                from: i,
                to: i + 1,
                mode: Mode::new(raise, th - d).to_string(),
            });
        } else {
            edges.push(DiagramEdge {
                from: i + 1,
                to: i,
                mode: Mode::new(lower, -th + d).to_string(),
            });
        }
    }
    Ok(DiagramGraph { nodes, edges })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// Every line through the state meets the boundary: `J+_n` or
    /// `J-_{-n}` terminates.
    RelaxedSl2,
    /// Every massive parabola through the state meets the boundary.
    TopologicalParabola,
    /// The massive-category line criterion.
    MassiveLine,
}

impl std::str::FromStr for Criterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "relaxed-sl2" => Ok(Criterion::RelaxedSl2),
            "topological-parabola" => Ok(Criterion::TopologicalParabola),
            "massive-line" => Ok(Criterion::MassiveLine),
            _ => Err(Error::Parse(format!("unknown criterion `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub holds: bool,
    /// True when some branch was still nonzero at the power bound, so a
    /// negative answer is only certain up to that bound.
    pub hit_bound: bool,
    /// The `n` for which neither branch terminated.
    pub failing_n: Option<i64>,
}

/// Length of the shortest chain that kills `s`, if any up to `bound`.
fn chain_terminates(
    v: &Module,
    s: &State,
    modes: impl Iterator<Item = Mode>,
    bound: usize,
) -> Result<bool, Error> {
    let mut x = s.clone();
    for m in modes.take(bound) {
        x = v.act(m, &x)?;
        if x.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn classify_criterion(
    v: &Module,
    s: &State,
    which: Criterion,
    bound: usize,
) -> Result<CriterionResult, Error> {
    use crate::module::Representation;
    let reach = v.horizon(s) + 1;
    for n in -reach..=reach {
        let ok = match which {
            Criterion::RelaxedSl2 => {
                chain_terminates(v, s, std::iter::repeat(Mode::new(Gen::Jp, n)), bound)?
                    || chain_terminates(v, s, std::iter::repeat(Mode::new(Gen::Jm, -n)), bound)?
            }
            Criterion::TopologicalParabola => {
                chain_terminates(v, s, (0..).map(|i| Mode::new(Gen::Q, n - i)), bound)?
                    || chain_terminates(v, s, (1..).map(|i| Mode::new(Gen::G, -n - i)), bound)?
            }
            Criterion::MassiveLine => {
                chain_terminates(v, s, (0..).map(|i| Mode::new(Gen::Q, n - i)), bound)?
                    || chain_terminates(v, s, (0..).map(|i| Mode::new(Gen::G, -n - i)), bound)?
            }
        };
        if !ok {
            return Ok(CriterionResult {
                holds: false,
                hit_bound: true,
                failing_n: Some(n),
            });
        }
    }
    Ok(CriterionResult {
        holds: true,
        hit_bound: false,
        failing_n: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::ModuleSpec;
    use crate::scalar::RatFun;

    fn topo() -> Module {
        Module::new(ModuleSpec::Topological {
            h: RatFun::from_ratio(1, 5),
            t: RatFun::t(),
            theta: 0,
        })
        .unwrap()
    }

    fn massive() -> Module {
        Module::new(ModuleSpec::Massive {
            h: RatFun::from_ratio(1, 5),
            l: RatFun::from_ratio(2, 3),
            t: RatFun::t(),
        })
        .unwrap()
    }

    fn relaxed() -> Module {
        Module::new(ModuleSpec::Relaxed {
            j: RatFun::from_ratio(1, 3),
            lambda: RatFun::from_ratio(7, 2),
            k: RatFun::t(),
            theta: 0,
        })
        .unwrap()
    }

    #[test]
    fn topological_diagram_has_one_cusp() {
        let d = extremal_diagram(&topo(), (-3, 3), 8).unwrap();
        let levels: Vec<i64> = d.nodes.iter().map(|n| n.level).collect();
        assert_eq!(levels, vec![6, 3, 1, 0, 1, 3, 6]);
        let cusps: Vec<_> = d.cusps().collect();
        assert_eq!(cusps.len(), 1);
        assert_eq!(cusps[0].charge, 0);
        assert!(d.to_dot().contains("\"0,0,Topological(0)\""));
    }

    #[test]
    fn relaxed_diagram_is_flat() {
        let d = extremal_diagram(&relaxed(), (-3, 3), 4).unwrap();
        assert!(d.nodes.iter().all(|n| n.level == 0 && n.dim == 1));
        assert_eq!(d.cusps().count(), 0);
    }

    #[test]
    fn massive_diagram_twists() {
        let d = extremal_diagram(&massive(), (-2, 2), 6).unwrap();
        let levels: Vec<i64> = d.nodes.iter().map(|n| n.level).collect();
        assert_eq!(levels, vec![1, 0, 0, 1, 3]);
        for n in &d.nodes {
            let want = HwConditions::Massive(-n.charge).to_string();
            assert!(n.conditions.contains(&want), "{n:?}");
        }
        assert_eq!(d.cusps().count(), 0);
    }

    #[test]
    fn criteria_on_defining_vectors() {
        let t = topo();
        let r = classify_criterion(&t, &t.vacuum(), Criterion::TopologicalParabola, 6).unwrap();
        assert!(r.holds);
        let m = massive();
        let r = classify_criterion(&m, &m.vacuum(), Criterion::TopologicalParabola, 5).unwrap();
        assert!(!r.holds && r.hit_bound);
        assert!(classify_criterion(&m, &m.vacuum(), Criterion::MassiveLine, 5).unwrap().holds);
        let x = relaxed();
        assert!(!classify_criterion(&x, &x.vacuum(), Criterion::RelaxedSl2, 8).unwrap().holds);
        let verma = Module::new(ModuleSpec::Sl2Verma {
            j: RatFun::t(),
            k: RatFun::from_int(3),
            theta: 0,
        })
        .unwrap();
        let s = verma.state(vec![Mode::parse("J--1").unwrap(), Mode::parse("J-0").unwrap()]).unwrap();
        assert!(classify_criterion(&verma, &s, Criterion::RelaxedSl2, 8).unwrap().holds);
    }
}
