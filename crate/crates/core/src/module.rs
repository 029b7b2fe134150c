//! Verma-type modules as free actions of creation modes on a defining
//! vector, with the highest-weight rules applied on contact.
//!
//! States are sparse combinations of PBW monomials. A monomial
//! `[y1, y2, ..., yk]` stands for `y1 y2 ... yk v`, sorted so that every
//! letter is no larger than the next one in the module's PBW key.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{commutator, Algebra, Centrals, Gen, Mode, ModePoly};
use crate::linalg::Vector;
use crate::scalar::RatFun;
use crate::Error;

pub type Monomial = Vec<Mode>;
pub type State = Vector<Monomial>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// sl(2) Verma module twisted by `theta`; `j` is the untwisted spin.
    Sl2Verma { j: RatFun, k: RatFun, theta: i64 },
    /// Relaxed sl(2) Verma module with the level-0 constraint parameter
    /// `lambda`.
    Relaxed {
        j: RatFun,
        lambda: RatFun,
        k: RatFun,
        theta: i64,
    },
    /// Topological N=2 Verma module twisted by `theta`, central charge
    /// `3(t-2)/t`.
    Topological { h: RatFun, t: RatFun, theta: i64 },
    /// Massive N=2 Verma module with `H_0 = h`, `L_0 = l`.
    Massive { h: RatFun, l: RatFun, t: RatFun },
    /// Fock module of the scalar oscillator; `momentum` is the `a_0`
    /// eigenvalue.
    FockScalar { metric: RatFun, momentum: RatFun },
    /// bc ghost vacuum in picture `theta`: `b_{>=theta}` and
    /// `c_{>=1-theta}` annihilate it. Picture -1 is the sl(2)-invariant
    /// vacuum.
    GhostFock { theta: i64 },
    VirasoroVerma { delta: RatFun, c_vir: RatFun },
}

impl ModuleSpec {
    pub fn algebra(&self) -> Algebra {
        match self {
            ModuleSpec::Sl2Verma { .. } | ModuleSpec::Relaxed { .. } => Algebra::Sl2,
            ModuleSpec::Topological { .. } | ModuleSpec::Massive { .. } => Algebra::N2,
            ModuleSpec::FockScalar { .. } => Algebra::Scalar,
            ModuleSpec::GhostFock { .. } => Algebra::Ghost,
            ModuleSpec::VirasoroVerma { .. } => Algebra::Virasoro,
        }
    }

    /// Twist of the defining vector; levels are counted in this frame.
    pub fn theta(&self) -> i64 {
        match self {
            ModuleSpec::Sl2Verma { theta, .. }
            | ModuleSpec::Relaxed { theta, .. }
            | ModuleSpec::Topological { theta, .. }
            | ModuleSpec::GhostFock { theta } => *theta,
            _ => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModuleSpec::Sl2Verma { .. } => "sl2-verma",
            ModuleSpec::Relaxed { .. } => "relaxed",
            ModuleSpec::Topological { .. } => "topological",
            ModuleSpec::Massive { .. } => "massive",
            ModuleSpec::FockScalar { .. } => "fock",
            ModuleSpec::GhostFock { .. } => "ghost",
            ModuleSpec::VirasoroVerma { .. } => "virasoro",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bigrade {
    pub charge: i64,
    pub level: i64,
}

impl Bigrade {
    pub const fn new(charge: i64, level: i64) -> Self {
        Bigrade { charge, level }
    }
}

impl fmt::Display for Bigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.charge, self.level)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Role {
    Annihilate,
    Cartan(RatFun),
    Create,
    /// Relaxed level-0 letters `J+_theta`, `J-_{-theta}`.
    Bottom,
}

/// Sign of the twist shift for a generator: raising generators see
/// `+theta`, lowering ones `-theta`.
fn twist_sign(g: Gen) -> i64 {
    match g {
        Gen::G | Gen::Jp | Gen::B => 1,
        Gen::Q | Gen::Jm | Gen::C => -1,
        _ => 0,
    }
}

/// Anything that modes act on: modules, tensor products, string states.
pub trait Representation {
    type Key: Ord + Clone + fmt::Debug;

    fn apply(&self, m: Mode, v: &Vector<Self::Key>) -> Result<Vector<Self::Key>, Error>;

    /// Every mode with index above this bound acts on `v` as zero.
    fn horizon(&self, v: &Vector<Self::Key>) -> i64;

    fn apply_poly(&self, p: &ModePoly, v: &Vector<Self::Key>) -> Result<Vector<Self::Key>, Error> {
        let mut out = Vector::zero();
        for (w, c) in p.terms() {
            let mut x = v.clone();
            for m in w.iter().rev() {
                x = self.apply(*m, &x)?;
            }
            out.add_scaled(&x, c);
        }
        Ok(out)
    }
}

pub struct Module {
    spec: ModuleSpec,
    cen: Centrals,
    cache: RefCell<HashMap<(Mode, Monomial), State>>,
}

impl Module {
    pub fn new(spec: ModuleSpec) -> Result<Self, Error> {
        let two = RatFun::from_int(2);
        let cen = match &spec {
            ModuleSpec::Sl2Verma { k, .. } | ModuleSpec::Relaxed { k, .. } => {
                if *k == -&two {
                    return Err(Error::InvalidModule("level k = -2 is excluded".into()));
                }
                Centrals::for_t(&(k + &two))
            }
            ModuleSpec::Topological { t, .. } | ModuleSpec::Massive { t, .. } => {
                if t.is_zero() {
                    return Err(Error::InvalidModule("t = 0 is excluded".into()));
                }
                Centrals::for_t(t)
            }
            ModuleSpec::FockScalar { metric, .. } => Centrals {
                metric: metric.clone(),
                ..Centrals::generic()
            },
            ModuleSpec::GhostFock { .. } => Centrals::generic(),
            ModuleSpec::VirasoroVerma { c_vir, .. } => Centrals {
                c_vir: c_vir.clone(),
                ..Centrals::generic()
            },
        };
        Ok(Module {
            spec,
            cen,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn centrals(&self) -> &Centrals {
        &self.cen
    }

    pub fn theta(&self) -> i64 {
        self.spec.theta()
    }

    /// `H_0` eigenvalue of the defining vector of a topological module.
    fn top_h0(&self) -> RatFun {
        match &self.spec {
            ModuleSpec::Topological { h, theta, .. } => h - &self.cen.c * RatFun::from_int(*theta) / RatFun::from_int(3),
            _ => unreachable!(),
        }
    }

    fn role(&self, m: Mode) -> Result<Role, Error> {
        use Role::*;
        let n = m.index;
        let th = self.theta();
        let cartan_or = |zero_val: RatFun| {
            if n >= 1 {
                Annihilate
            } else if n == 0 {
                Cartan(zero_val)
            } else {
                Create
            }
        };
        let threshold = |start: i64| if n >= start { Annihilate } else { Create };
        let wrong = || {
            Err(Error::UnsupportedPair(format!(
                "mode {m} does not act on a {} module",
                self.spec.name()
            )))
        };
        Ok(match (&self.spec, m.gen) {
            (ModuleSpec::Sl2Verma { j, k, .. }, g) => match g {
                Gen::Jp => threshold(th),
                Gen::Jm => threshold(1 - th),
                Gen::J0 => cartan_or(j - k * RatFun::from_ratio(th, 2)),
                _ => return wrong(),
            },
            (ModuleSpec::Relaxed { j, k, .. }, g) => match g {
                Gen::Jp if n == th => Bottom,
                Gen::Jm if n == -th => Bottom,
                Gen::Jp => threshold(th + 1),
                Gen::Jm => threshold(1 - th),
                Gen::J0 => cartan_or(j - k * RatFun::from_ratio(th, 2)),
                _ => return wrong(),
            },
            (ModuleSpec::Topological { .. }, g) => match g {
                Gen::Q => threshold(-th),
                Gen::G => threshold(th),
                Gen::H => cartan_or(self.top_h0()),
                Gen::L => {
                    let h0 = self.top_h0();
                    let tq = RatFun::from_int(th);
                    let l0 = -(&tq * &h0) - &self.cen.c * RatFun::from_int(th * th + th) / RatFun::from_int(6);
                    cartan_or(l0)
                }
                _ => return wrong(),
            },
            (ModuleSpec::Massive { h, l, .. }, g) => match g {
                Gen::Q => threshold(1),
                Gen::G => threshold(0),
                Gen::H => cartan_or(h.clone()),
                Gen::L => cartan_or(l.clone()),
                _ => return wrong(),
            },
            (ModuleSpec::FockScalar { momentum, .. }, Gen::A) => cartan_or(momentum.clone()),
            (ModuleSpec::GhostFock { .. }, Gen::B) => threshold(th),
            (ModuleSpec::GhostFock { .. }, Gen::C) => threshold(1 - th),
            (ModuleSpec::VirasoroVerma { delta, .. }, Gen::T) => cartan_or(delta.clone()),
            _ => return wrong(),
        })
    }

    fn is_bottom(&self, m: Mode) -> bool {
        matches!(self.role(m), Ok(Role::Bottom))
    }

    /// Sort key of a letter inside a monomial; bottom letters sit next to
    /// the defining vector.
    fn key(&self, m: Mode) -> (bool, Mode) {
        (self.is_bottom(m), m)
    }

    /// Level raised by a mode, in the frame of the defining vector.
    pub fn mode_level(&self, m: Mode) -> i64 {
        -m.index + self.theta() * twist_sign(m.gen)
    }

    pub fn monomial_bigrade(&self, mono: &[Mode]) -> Bigrade {
        Bigrade {
            charge: mono.iter().map(|m| m.gen.charge()).sum(),
            level: mono.iter().map(|m| self.mode_level(*m)).sum(),
        }
    }

    /// Bigrade of a homogeneous state; `None` for zero or mixed states.
    pub fn bigrade(&self, s: &State) -> Option<Bigrade> {
        let mut it = s.keys().map(|k| self.monomial_bigrade(k));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn vacuum(&self) -> State {
        State::basis(Vec::new())
    }

    pub fn state(&self, mono: Monomial) -> Result<State, Error> {
        let mut s = self.vacuum();
        for m in mono.iter().rev() {
            s = self.act(*m, &s)?;
        }
        Ok(s)
    }

    pub fn act(&self, m: Mode, s: &State) -> Result<State, Error> {
        let mut out = State::zero();
        for (mono, c) in s.terms() {
            out.add_scaled(&self.act_mono(m, mono)?, c);
        }
        Ok(out)
    }

    pub fn act_poly(&self, p: &ModePoly, s: &State) -> Result<State, Error> {
        self.apply_poly(p, s)
    }

    fn act_poly_mono(&self, p: &ModePoly, mono: &[Mode]) -> Result<State, Error> {
        self.apply_poly(p, &State::basis(mono.to_vec()))
    }

    fn act_mono(&self, m: Mode, mono: &[Mode]) -> Result<State, Error> {
        let cache_key = (m, mono.to_vec());
        if let Some(v) = self.cache.borrow().get(&cache_key) {
            return Ok(v.clone());
        }
        let res = self.act_mono_uncached(m, mono)?;
        self.cache.borrow_mut().insert(cache_key, res.clone());
        Ok(res)
    }

    fn act_mono_uncached(&self, m: Mode, mono: &[Mode]) -> Result<State, Error> {
        let role = self.role(m)?;
        let creating = matches!(role, Role::Create | Role::Bottom);
        let Some((&y, rest)) = mono.split_first() else {
            return Ok(match role {
                Role::Annihilate => State::zero(),
                Role::Cartan(e) => State::term(Vec::new(), e),
                Role::Create | Role::Bottom => State::basis(vec![m]),
            });
        };
        let opposite_bottoms = role == Role::Bottom && self.is_bottom(y) && y != m;
        if creating && m == y && m.is_fermionic() {
            let sq = commutator(m, m, &self.cen)?;
            return Ok(self.act_poly_mono(&sq, rest)?.scaled(&RatFun::from_ratio(1, 2)));
        }
        if creating && !opposite_bottoms && self.key(m) <= self.key(y) {
            let mut w = Vec::with_capacity(mono.len() + 1);
            w.push(m);
            w.extend_from_slice(mono);
            return Ok(State::basis(w));
        }
        if opposite_bottoms && rest.is_empty() {
            return self.relaxed_bottom(m, y);
        }
        // m y rest = (+-) y (m rest) + [m, y] rest
        let sign = if m.is_fermionic() && y.is_fermionic() { -1 } else { 1 };
        let inner = self.act_mono(m, rest)?;
        let mut out = self.act(y, &inner)?.scaled(&RatFun::from_int(sign));
        out.add_scaled(&self.act_poly_mono(&commutator(m, y, &self.cen)?, rest)?, &RatFun::one());
        Ok(out)
    }

    /// `m y v` for the two opposite relaxed bottom letters, using
    /// `J-_{-theta} J+_theta v = Lambda v`.
    fn relaxed_bottom(&self, m: Mode, y: Mode) -> Result<State, Error> {
        let ModuleSpec::Relaxed { lambda, .. } = &self.spec else {
            unreachable!()
        };
        let mut out = State::term(Vec::new(), lambda.clone());
        if m.gen == Gen::Jp {
            // J+ J- v = J- J+ v + [J+, J-] v
            out.add_scaled(&self.act_poly_mono(&commutator(m, y, &self.cen)?, &[])?, &RatFun::one());
        }
        Ok(out)
    }

    fn creation_letters(&self, level: i64) -> Vec<Mode> {
        let th = self.theta();
        let mut out = Vec::new();
        for &g in self.spec.algebra().generators() {
            let m = Mode::new(g, th * twist_sign(g) - level);
            if matches!(self.role(m), Ok(Role::Create | Role::Bottom)) {
                out.push(m);
            }
        }
        out
    }

    /// PBW basis of a bigrade component, in deterministic order.
    pub fn build_basis(&self, g: Bigrade) -> Vec<Monomial> {
        if g.level < 0 {
            return Vec::new();
        }
        let positive: Vec<Mode> = (1..=g.level).flat_map(|l| self.creation_letters(l)).collect();
        let zero_letters = self.creation_letters(0);
        let zero_fermions: Vec<Mode> = zero_letters.iter().copied().filter(|m| m.is_fermionic()).collect();
        let zero_bosons: Vec<Mode> = zero_letters.iter().copied().filter(|m| !m.is_fermionic()).collect();

        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.enumerate_positive(&positive, 0, g.level, &mut chosen, &mut |word: &[Mode]| {
            let charge: i64 = word.iter().map(|m| m.gen.charge()).sum();
            for mask in 0..(1u32 << zero_fermions.len()) {
                let mut w = word.to_vec();
                let mut c = charge;
                for (i, f) in zero_fermions.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        w.push(*f);
                        c += f.gen.charge();
                    }
                }
                let rem = g.charge - c;
                if rem == 0 {
                    out.push(w);
                    continue;
                }
                for b in &zero_bosons {
                    let q = b.gen.charge();
                    if q != 0 && rem % q == 0 && rem / q > 0 {
                        let mut w2 = w.clone();
                        w2.extend(std::iter::repeat(*b).take((rem / q) as usize));
                        out.push(w2);
                    }
                }
            }
        });
        for w in out.iter_mut() {
            w.sort_by_key(|m| self.key(*m));
        }
        out.sort();
        out.dedup();
        out
    }

    fn enumerate_positive(
        &self,
        letters: &[Mode],
        start: usize,
        budget: i64,
        chosen: &mut Vec<Mode>,
        emit: &mut dyn FnMut(&[Mode]),
    ) {
        if budget == 0 {
            emit(chosen);
            return;
        }
        for i in start..letters.len() {
            let m = letters[i];
            let l = self.mode_level(m);
            if l > budget {
                continue;
            }
            chosen.push(m);
            // fermions may not repeat
            let next = if m.is_fermionic() { i + 1 } else { i };
            self.enumerate_positive(letters, next, budget - l, chosen, emit);
            chosen.pop();
        }
    }

    pub fn dim(&self, g: Bigrade) -> usize {
        self.build_basis(g).len()
    }

    /// Contravariant form on an sl(2) bigrade component.
    pub fn gram_matrix(&self, g: Bigrade) -> Result<GramMatrix, Error> {
        if self.spec.algebra() != Algebra::Sl2 {
            return Err(Error::InvalidModule(format!(
                "no contravariant form on a {} module",
                self.spec.name()
            )));
        }
        let basis = self.build_basis(g);
        let states: Vec<State> = basis.iter().map(|b| self.state(b.clone())).collect::<Result<_, _>>()?;
        let mut entries = Vec::with_capacity(basis.len());
        for bi in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for sj in &states {
                let mut x = sj.clone();
                for y in bi {
                    x = self.act(sl2_adjoint(*y), &x)?;
                }
                row.push(x.coeff(&Vec::new()));
            }
            entries.push(row);
        }
        Ok(GramMatrix {
            bigrade: g,
            basis,
            entries,
        })
    }
}

impl Representation for Module {
    type Key = Monomial;

    fn apply(&self, m: Mode, v: &State) -> Result<State, Error> {
        self.act(m, v)
    }

    fn horizon(&self, v: &State) -> i64 {
        let top = v.keys().map(|k| self.monomial_bigrade(k).level).max().unwrap_or(0);
        top + self.theta().abs()
    }
}

/// `(J+_n)^dagger = J-_{-n}`, `(J0_n)^dagger = J0_{-n}`.
pub fn sl2_adjoint(m: Mode) -> Mode {
    let gen = match m.gen {
        Gen::Jp => Gen::Jm,
        Gen::Jm => Gen::Jp,
        g => g,
    };
    Mode::new(gen, -m.index)
}

#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub bigrade: Bigrade,
    pub basis: Vec<Monomial>,
    pub entries: Vec<Vec<RatFun>>,
}

impl GramMatrix {
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "n2sl2.gram/1",
            "bigrade": self.bigrade,
            "basis": self.basis.iter().map(|b| format_monomial(b)).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(|e| e.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Closed-form norm of the level-0 extremal state of charge `n` in a
/// relaxed module.
pub fn relaxed_extremal_norm(j: &RatFun, lambda: &RatFun, n: i64) -> RatFun {
    let r = RatFun::from_int;
    let mut out = RatFun::one();
    if n > 0 {
        for i in 0..n {
            out *= &(lambda - &(j * r(2 * i)) - r(i * (i + 1)));
        }
    } else {
        for i in 1..=-n {
            out *= &(lambda + &(j * r(2 * i)) - r(i * (i - 1)));
        }
    }
    out
}

pub fn format_monomial(mono: &[Mode]) -> String {
    let mut s: Vec<String> = mono.iter().map(|m| m.to_string()).collect();
    s.push("v".into());
    s.join(" ")
}

/// Annihilation conditions of the various highest-weight-type vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HwConditions {
    Sl2Verma(i64),
    Relaxed(i64),
    Topological(i64),
    Massive(i64),
    Virasoro,
    Fock,
}

impl HwConditions {
    /// (generator, first annihilating index) pairs.
    pub fn starts(self) -> Vec<(Gen, i64)> {
        match self {
            HwConditions::Sl2Verma(th) => vec![(Gen::Jp, th), (Gen::J0, 1), (Gen::Jm, 1 - th)],
            HwConditions::Relaxed(th) => vec![(Gen::Jp, th + 1), (Gen::J0, 1), (Gen::Jm, 1 - th)],
            HwConditions::Topological(th) => {
                vec![(Gen::Q, -th), (Gen::G, th), (Gen::L, 1), (Gen::H, 1)]
            }
            HwConditions::Massive(th) => {
                vec![(Gen::Q, 1 - th), (Gen::G, th), (Gen::L, 1), (Gen::H, 1)]
            }
            HwConditions::Virasoro => vec![(Gen::T, 1)],
            HwConditions::Fock => vec![(Gen::A, 1)],
        }
    }

    /// Finite list of condition modes that can act nontrivially below the
    /// given index horizon.
    pub fn modes(self, horizon: i64) -> Vec<Mode> {
        let mut out = Vec::new();
        for (g, start) in self.starts() {
            for n in start..=start.max(horizon) {
                out.push(Mode::new(g, n));
            }
        }
        out
    }
}

impl fmt::Display for HwConditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HwConditions::Sl2Verma(t) => write!(f, "Verma({t})"),
            HwConditions::Relaxed(t) => write!(f, "Relaxed({t})"),
            HwConditions::Topological(t) => write!(f, "Topological({t})"),
            HwConditions::Massive(t) => write!(f, "Massive({t})"),
            HwConditions::Virasoro => write!(f, "Virasoro"),
            HwConditions::Fock => write!(f, "Fock"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HwCheck {
    pub holds: bool,
    /// First condition mode that does not annihilate the state.
    pub witness: Option<String>,
}

pub fn check_hw<R: Representation>(
    rep: &R,
    s: &Vector<R::Key>,
    cond: HwConditions,
) -> Result<HwCheck, Error> {
    for m in cond.modes(rep.horizon(s)) {
        if !rep.apply(m, s)?.is_zero() {
            return Ok(HwCheck {
                holds: false,
                witness: Some(m.to_string()),
            });
        }
    }
    Ok(HwCheck {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> RatFun {
        RatFun::from_int(n)
    }

    fn m(s: &str) -> Mode {
        Mode::parse(s).unwrap()
    }

    fn topo(h: RatFun, theta: i64) -> Module {
        Module::new(ModuleSpec::Topological {
            h,
            t: RatFun::t(),
            theta,
        })
        .unwrap()
    }

    fn relaxed() -> Module {
        Module::new(ModuleSpec::Relaxed {
            j: RatFun::from_ratio(1, 3),
            lambda: RatFun::t(),
            k: RatFun::from_ratio(5, 2),
            theta: 0,
        })
        .unwrap()
    }

    #[test]
    fn topological_level_one() {
        let v = topo(r(1), 0);
        let b = v.build_basis(Bigrade::new(0, 1));
        assert_eq!(b, vec![vec![m("L-1")], vec![m("H-1")]]);
    }

    #[test]
    fn relaxed_level_zero_is_one_dimensional() {
        let v = relaxed();
        for n in -4..=4 {
            assert_eq!(v.dim(Bigrade::new(n, 0)), 1, "charge {n}");
        }
    }

    #[test]
    fn massive_charge_minus_two_is_empty() {
        let v = Module::new(ModuleSpec::Massive {
            h: r(1),
            l: r(2),
            t: RatFun::t(),
        })
        .unwrap();
        assert!(v.build_basis(Bigrade::new(-2, 0)).is_empty());
        assert_eq!(v.dim(Bigrade::new(-1, 0)), 1);
    }

    #[test]
    fn q1_on_g_minus_one() {
        let h = RatFun::from_ratio(2, 7);
        let v = topo(h.clone(), 0);
        let s = v.state(vec![m("G-1")]).unwrap();
        let out = v.act(m("Q1"), &s).unwrap();
        assert_eq!(out, State::term(vec![], -(r(2) * h)));
    }

    #[test]
    fn relaxed_constraint() {
        let v = relaxed();
        let s = v.state(vec![m("J+0")]).unwrap();
        assert_eq!(v.act(m("J-0"), &s).unwrap(), State::term(vec![], RatFun::t()));
    }

    #[test]
    fn e_plus_one_one() {
        let v = topo(r(0), 0);
        let s = v.state(vec![m("G-1")]).unwrap();
        assert!(check_hw(&v, &s, HwConditions::Topological(-1)).unwrap().holds);
        let w = topo(r(3), 0);
        let s = w.state(vec![m("G-1")]).unwrap();
        let c = check_hw(&w, &s, HwConditions::Topological(-1)).unwrap();
        assert_eq!(c.witness.as_deref(), Some("Q1"));
        assert!(check_hw(&w, &w.vacuum(), HwConditions::Topological(0)).unwrap().holds);
    }

    #[test]
    fn relaxed_norms() {
        let v = relaxed();
        let (j, lam) = (RatFun::from_ratio(1, 3), RatFun::t());
        for n in -4..=4 {
            let g = v.gram_matrix(Bigrade::new(n, 0)).unwrap();
            assert_eq!(g.entries, vec![vec![relaxed_extremal_norm(&j, &lam, n)]], "n = {n}");
        }
        assert_eq!(relaxed_extremal_norm(&j, &lam, 0), r(1));
        assert_eq!(relaxed_extremal_norm(&j, &lam, -1), &lam + &(r(2) * &j));
        let two = &lam * &(&lam - r(2) * &j - r(2));
        assert_eq!(relaxed_extremal_norm(&j, &lam, 2), two);
    }

    #[test]
    fn gram_is_symmetric() {
        let v = Module::new(ModuleSpec::Sl2Verma {
            j: RatFun::t(),
            k: RatFun::from_ratio(3, 4),
            theta: 0,
        })
        .unwrap();
        for g in [Bigrade::new(0, 2), Bigrade::new(-1, 2), Bigrade::new(1, 1)] {
            assert!(v.gram_matrix(g).unwrap().is_symmetric(), "{g}");
        }
    }

    #[test]
    fn action_respects_bigrade() {
        let v = topo(RatFun::t(), 1);
        for mono in v.build_basis(Bigrade::new(1, 2)) {
            let s = v.state(mono.clone()).unwrap();
            assert_eq!(v.bigrade(&s), Some(Bigrade::new(1, 2)));
            for md in ["L-1", "G0", "Q-2", "H1", "L1", "Q1"] {
                let md = m(md);
                let out = v.act(md, &s).unwrap();
                if !out.is_zero() {
                    let e = v.monomial_bigrade(&[md]);
                    assert_eq!(v.bigrade(&out), Some(Bigrade::new(1 + e.charge, 2 + e.level)));
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(Module::new(ModuleSpec::Sl2Verma {
            j: r(0),
            k: r(-2),
            theta: 0
        })
        .is_err());
        assert!(Module::new(ModuleSpec::Massive {
            h: r(0),
            l: r(0),
            t: r(0)
        })
        .is_err());
    }
}
