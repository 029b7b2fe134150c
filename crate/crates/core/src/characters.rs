//! Truncated multigraded characters, counted from the free generation of
//! each module rather than by enumerating bases.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Gen;
use crate::fock::{partition_count, DimRow, Theorem};
use crate::module::ModuleSpec;
use crate::scalar::RatFun;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterSeries {
    pub gradings: Vec<String>,
    /// Inclusive range per grading inside which the table is complete.
    pub bounds: Vec<(i64, i64)>,
    pub table: BTreeMap<Vec<i64>, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Product,
    Sum,
}

impl CharacterSeries {
    pub fn new(gradings: &[&str], bounds: Vec<(i64, i64)>) -> Self {
        CharacterSeries {
            gradings: gradings.iter().map(|s| s.to_string()).collect(),
            bounds,
            table: BTreeMap::new(),
        }
    }

    fn inside(&self, key: &[i64]) -> bool {
        key.iter().zip(&self.bounds).all(|(k, (lo, hi))| lo <= k && k <= hi)
    }

    /// Adds `n` at `key` if it lies inside the bounds.
    pub fn add(&mut self, key: Vec<i64>, n: u64) {
        if n > 0 && self.inside(&key) {
            *self.table.entry(key).or_insert(0) += n;
        }
    }

    pub fn get(&self, key: &[i64]) -> u64 {
        self.table.get(key).copied().unwrap_or(0)
    }

    /// Re-grades every entry through `f`; entries mapped outside `bounds`
    /// are dropped.
    pub fn regrade(&self, gradings: &[&str], bounds: Vec<(i64, i64)>, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = CharacterSeries::new(gradings, bounds);
        for (k, n) in &self.table {
            out.add(f(k), *n);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let bounds: serde_json::Map<String, serde_json::Value> = self
            .gradings
            .iter()
            .zip(&self.bounds)
            .map(|(g, (lo, hi))| (g.clone(), serde_json::json!([lo, hi])))
            .collect();
        let entries: Vec<_> = self
            .table
            .iter()
            .map(|(k, n)| serde_json::json!({"key": k, "dim": n}))
            .collect();
        serde_json::json!({
            "schema": "n2sl2.character/1",
            "gradings": self.gradings,
            "bounds": bounds,
            "entries": entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.gradings.join(",");
        s.push_str(",dim\n");
        for (k, n) in &self.table {
            let key: Vec<String> = k.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{},{n}", key.join(","));
        }
        s
    }
}

/// Product (convolution of gradings) or sum of two series.
pub fn combine(a: &CharacterSeries, b: &CharacterSeries, op: Combine) -> Result<CharacterSeries, Error> {
    if a.gradings != b.gradings {
        return Err(Error::GradingMismatch(format!(
            "({}) vs ({})",
            a.gradings.join(", "),
            b.gradings.join(", ")
        )));
    }
    let names: Vec<&str> = a.gradings.iter().map(String::as_str).collect();
    match op {
        Combine::Sum => {
            let bounds = a
                .bounds
                .iter()
                .zip(&b.bounds)
                .map(|(x, y)| (x.0.max(y.0), x.1.min(y.1)))
                .collect();
            let mut out = CharacterSeries::new(&names, bounds);
            for (k, n) in a.table.iter().chain(&b.table) {
                out.add(k.clone(), *n);
            }
            Ok(out)
        }
        Combine::Product => {
            // complete only where neither factor is cut off
            let bounds = a
                .bounds
                .iter()
                .zip(&b.bounds)
                .map(|(x, y)| (x.0 + y.0, (x.1 + y.0).min(x.0 + y.1)))
                .collect();
            product_within(a, b, bounds)
        }
    }
}

/// Product kept inside caller-chosen bounds, for when the caller knows
/// more about completeness than the factor bounds say.
pub fn product_within(a: &CharacterSeries, b: &CharacterSeries, bounds: Vec<(i64, i64)>) -> Result<CharacterSeries, Error> {
    if a.gradings != b.gradings {
        return Err(Error::GradingMismatch(format!(
            "({}) vs ({})",
            a.gradings.join(", "),
            b.gradings.join(", ")
        )));
    }
    let names: Vec<&str> = a.gradings.iter().map(String::as_str).collect();
    let mut out = CharacterSeries::new(&names, bounds);
    for (ka, na) in &a.table {
        for (kb, nb) in &b.table {
            let k = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            out.add(k, na * nb);
        }
    }
    Ok(out)
}

/// What sits at level 0 besides the defining vector.
enum LevelZero {
    Nothing,
    Fermion(i64),
    /// Powers of one bosonic letter of the given charge.
    OneSided(i64),
    /// The relaxed row: one state at every charge.
    TwoSided,
}

fn level_zero(spec: &ModuleSpec) -> LevelZero {
    match spec {
        ModuleSpec::Sl2Verma { .. } => LevelZero::OneSided(Gen::Jm.charge()),
        ModuleSpec::Relaxed { .. } => LevelZero::TwoSided,
        ModuleSpec::Massive { .. } => LevelZero::Fermion(Gen::Q.charge()),
        ModuleSpec::GhostFock { .. } => LevelZero::Fermion(Gen::C.charge()),
        _ => LevelZero::Nothing,
    }
}

/// Bigraded (charge, level) character, complete for charges in `window`
/// and levels up to `max_level`.
pub fn character(spec: &ModuleSpec, window: (i64, i64), max_level: i64) -> CharacterSeries {
    let gens = spec.algebra().generators();
    let margin = max_level + 1;
    let (lo, hi) = (window.0 - margin, window.1 + margin);
    let width = (hi - lo + 1) as usize;
    let levels = (max_level.max(0) + 1) as usize;
    let mut arr = vec![vec![0u64; width]; levels];
    let idx = |c: i64| (c - lo) as usize;
    match level_zero(spec) {
        LevelZero::Nothing => arr[0][idx(0)] = 1,
        LevelZero::Fermion(q) => {
            arr[0][idx(0)] = 1;
            arr[0][idx(q)] = 1;
        }
        LevelZero::OneSided(q) => {
            let mut c = 0;
            while (lo..=hi).contains(&c) {
                arr[0][idx(c)] = 1;
                c += q;
            }
        }
        LevelZero::TwoSided => arr[0].iter_mut().for_each(|x| *x = 1),
    }
    // every generator contributes one letter at each positive level
    for lv in 1..levels {
        for g in gens {
            let q = g.charge();
            let step = |arr: &mut Vec<Vec<u64>>, l: usize| {
                for c in lo..=hi {
                    let src = c - q;
                    if (lo..=hi).contains(&src) {
                        arr[l][idx(c)] += arr[l - lv][idx(src)];
                    }
                }
            };
            if g.is_fermionic() {
                for l in (lv..levels).rev() {
                    step(&mut arr, l);
                }
            } else {
                for l in lv..levels {
                    step(&mut arr, l);
                }
            }
        }
    }
    let mut out = CharacterSeries::new(&["charge", "level"], vec![window, (0, max_level)]);
    for (l, row) in arr.iter().enumerate() {
        for c in window.0..=window.1 {
            out.add(vec![c, l as i64], row[idx(c)]);
        }
    }
    out
}

/// Scalar Fock space: one column of partition numbers.
pub fn heisenberg_character(max_level: i64) -> CharacterSeries {
    let mut out = CharacterSeries::new(&["level"], vec![(0, max_level)]);
    for l in 0..=max_level {
        out.add(vec![l], partition_count(l) as u64);
    }
    out
}

/// `(charge, sector, energy)` character of the sum of Fock modules
/// `F_n`, `n` in `sectors`, whose vacua sit at energy `-n(n-1)/2`.
pub fn fock_window_character(sectors: (i64, i64), max_energy: i64) -> CharacterSeries {
    let lo_e = -(sectors.0 * (sectors.0 - 1) / 2).max(sectors.1 * (sectors.1 - 1) / 2);
    let mut out = CharacterSeries::new(
        &["charge", "sector", "energy"],
        vec![(0, 0), sectors, (lo_e, max_energy)],
    );
    for n in sectors.0..=sectors.1 {
        let e0 = -n * (n - 1) / 2;
        for m in 0..=(max_energy - e0) {
            out.add(vec![0, n, e0 + m], partition_count(m) as u64);
        }
    }
    out
}

/// Both sides of the decomposition theorems as characters graded by
/// (sl(2) charge, sector, energy), compared row by row in the frame of
/// each summand.
pub fn theorem_character_rows(
    theorem: Theorem,
    h: &RatFun,
    l: Option<&RatFun>,
    t: &RatFun,
    thetas: (i64, i64),
    max_level: i64,
    charge_window: i64,
) -> Result<Vec<DimRow>, Error> {
    let n2 = match theorem {
        Theorem::Verma => ModuleSpec::Topological {
            h: h.clone(),
            t: t.clone(),
            theta: 0,
        },
        Theorem::Relaxed => ModuleSpec::Massive {
            h: h.clone(),
            l: l.cloned().ok_or_else(|| Error::InvalidModule("the relaxed case needs l".into()))?,
            t: t.clone(),
        },
    };
    let k = t - RatFun::from_int(2);
    let j = -(t * h) / RatFun::from_int(2);
    let w = charge_window;
    let sectors = (thetas.0 - w, thetas.1 + w);
    let reach = thetas.0.abs().max(thetas.1.abs());
    let deepest = sectors.0.abs().max(sectors.1.abs());
    let top_energy = max_level + reach * reach + 1;
    let span = (-(deepest * deepest) - 1, top_energy);
    let names = ["charge", "sector", "energy"];

    let v_levels = top_energy + deepest * deepest;
    let v = character(&n2, (-w, w), v_levels).regrade(&names, vec![(-w, w), (0, 0), (0, v_levels)], |key| {
        vec![-key[0], 0, key[1]]
    });
    let lhs = product_within(&v, &fock_window_character(sectors, top_energy), vec![(-w, w), sectors, span])?;

    let heis = heisenberg_character(v_levels + deepest * deepest).regrade(
        &names,
        vec![(0, 0), (0, 0), (0, v_levels + deepest * deepest)],
        |key| vec![0, 0, key[0]],
    );
    let mut rhs = CharacterSeries::new(&names, vec![(-w, w), sectors, span]);
    for theta in thetas.0..=thetas.1 {
        let summand = match theorem {
            Theorem::Verma => ModuleSpec::Sl2Verma {
                j: j.clone(),
                k: k.clone(),
                theta,
            },
            Theorem::Relaxed => ModuleSpec::Relaxed {
                j: j.clone(),
                lambda: t * l.expect("checked above"),
                k: k.clone(),
                theta,
            },
        };
        let frame_max = max_level + reach * w;
        let m = character(&summand, (-w, w), frame_max).regrade(&names, vec![(-w, w), sectors, span], |key| {
            let (q, f) = (key[0], key[1]);
            vec![q, theta + q, f - theta * q - theta * (theta - 1) / 2]
        });
        let heis = CharacterSeries {
            bounds: vec![(0, 0), (0, 0), (0, frame_max + reach * w)],
            ..heis.clone()
        };
        let prod = product_within(&m, &heis, rhs.bounds.clone())?;
        rhs = combine(&rhs, &prod, Combine::Sum)?;
    }

    let mut rows = Vec::new();
    for theta in thetas.0..=thetas.1 {
        for q in -w..=w {
            for level in 0..=max_level {
                let key = [q, theta + q, level - theta * (theta - 1) / 2];
                rows.push(DimRow {
                    theta,
                    charge: q,
                    level,
                    lhs: lhs.get(&key) as usize,
                    rhs: rhs.get(&key) as usize,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{Bigrade, Module};

    fn specs() -> Vec<ModuleSpec> {
        let t = RatFun::t();
        let x = RatFun::from_ratio(2, 7);
        let mut out = Vec::new();
        for theta in -1..=1 {
            out.push(ModuleSpec::Sl2Verma {
                j: x.clone(),
                k: t.clone(),
                theta,
            });
            out.push(ModuleSpec::Relaxed {
                j: x.clone(),
                lambda: RatFun::from_int(3),
                k: t.clone(),
                theta,
            });
            out.push(ModuleSpec::Topological {
                h: x.clone(),
                t: t.clone(),
                theta,
            });
            out.push(ModuleSpec::GhostFock { theta });
        }
        out.push(ModuleSpec::Massive {
            h: x.clone(),
            l: RatFun::from_int(1),
            t: t.clone(),
        });
        out.push(ModuleSpec::FockScalar {
            metric: RatFun::from_int(-1),
            momentum: x.clone(),
        });
        out.push(ModuleSpec::VirasoroVerma {
            delta: x,
            c_vir: t,
        });
        out
    }

    #[test]
    fn agrees_with_pbw_bases() {
        for spec in specs() {
            let ch = character(&spec, (-3, 3), 3);
            let m = Module::new(spec.clone()).unwrap();
            for c in -3..=3 {
                for l in 0..=3 {
                    assert_eq!(ch.get(&[c, l]), m.dim(Bigrade::new(c, l)) as u64, "{spec:?} at ({c}, {l})");
                }
            }
        }
    }

    #[test]
    fn topological_level_one_row() {
        let spec = ModuleSpec::Topological {
            h: RatFun::zero(),
            t: RatFun::t(),
            theta: 0,
        };
        let ch = character(&spec, (-2, 2), 1);
        let row: Vec<u64> = (-2..=2).map(|c| ch.get(&[c, 1])).collect();
        assert_eq!(row, vec![0, 1, 2, 1, 0]);
    }

    #[test]
    fn relaxed_row_and_partitions() {
        let spec = ModuleSpec::Relaxed {
            j: RatFun::zero(),
            lambda: RatFun::one(),
            k: RatFun::t(),
            theta: 0,
        };
        let ch = character(&spec, (-4, 4), 0);
        assert!((-4..=4).all(|c| ch.get(&[c, 0]) == 1));
        let f = character(
            &ModuleSpec::FockScalar {
                metric: RatFun::one(),
                momentum: RatFun::zero(),
            },
            (0, 0),
            6,
        );
        let col: Vec<u64> = (0..=6).map(|l| f.get(&[0, l])).collect();
        assert_eq!(col, vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn combine_rules() {
        let mut a = CharacterSeries::new(&["level"], vec![(0, 4)]);
        a.add(vec![0], 1);
        a.add(vec![2], 3);
        let zero = CharacterSeries::new(&["level"], vec![(0, 4)]);
        assert!(combine(&a, &zero, Combine::Product).unwrap().table.is_empty());
        let h = heisenberg_character(4);
        let ab = combine(&a, &h, Combine::Sum).unwrap();
        assert_eq!(ab, combine(&h, &a, Combine::Sum).unwrap());
        let p = combine(&a, &h, Combine::Product).unwrap();
        assert_eq!(p.get(&[3]), 3 + 3);
        let other = CharacterSeries::new(&["charge"], vec![(0, 0)]);
        assert!(matches!(combine(&a, &other, Combine::Sum), Err(Error::GradingMismatch(_))));
    }

    #[test]
    fn export_formats() {
        let h = heisenberg_character(2);
        assert_eq!(h.to_csv(), "level,dim\n0,1\n1,1\n2,2\n");
        assert_eq!(h.to_json()["schema"], "n2sl2.character/1");
    }
}
