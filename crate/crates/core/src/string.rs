//! N=2 generators realized in the noncritical bosonic string: matter
//! Virasoro of central charge `13 - 6/t - 6t`, a Liouville scalar with
//! `[a_m, a_n] = -m/(2t) delta`, and bc ghosts normal ordered with respect to
//! the sl(2)-invariant vacuum `|0>`.
//!
//! Field modes: `T(z) = sum T_n z^{-n-2}`, `dphi(z) = sum a_n z^{-n-1}`,
//! `b(z) = sum b_n z^{-n-2}`, `c(z) = sum c_n z^{-n+1}`.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{commutator, Centrals, Gen, Mode};
use crate::diagram::{DiagramEdge, DiagramGraph, DiagramNode};
use crate::linalg::Vector;
use crate::module::{check_hw, Bigrade, HwConditions, Module, ModuleSpec, Monomial, Representation, State};
use crate::scalar::RatFun;
use crate::singular::{topological_h, Sign};
use crate::Error;

/// (ghost word over `|0>`, Liouville word, matter word).
pub type StringKey = (Monomial, Monomial, Monomial);
pub type StringState = Vector<StringKey>;

fn r(n: i64) -> RatFun {
    RatFun::from_int(n)
}

/// `Delta(h, t) = (2 - 2h - t + h^2 t)/4`.
pub fn dressing_dimension(h: &RatFun, t: &RatFun) -> RatFun {
    (r(2) - r(2) * h - t + h * h * t) / r(4)
}

/// Virasoro Kac dimension `((r - s t)^2 - (1 - t)^2)/(4t)`.
pub fn kac_dimension(rr: i64, s: i64, t: &RatFun) -> RatFun {
    let a = r(rr) - r(s) * t;
    let b = r(1) - t;
    (&a * &a - &b * &b) / (r(4) * t)
}

/// Liouville exponent `p` of `e^{p phi}` in a dressed state:
/// `2t(-1/2 - h/2 - theta/t)`.
pub fn liouville_exponent(h: &RatFun, t: &RatFun, theta: i64) -> RatFun {
    -t.clone() - t * h - r(2 * theta)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomassiveLabel {
    pub h: RatFun,
    pub l: RatFun,
    pub t: RatFun,
    pub theta: i64,
}

impl PseudomassiveLabel {
    /// `H_0` and `L_0` eigenvalues of the state this label names.
    pub fn eigenvalues(&self) -> (RatFun, RatFun) {
        let c = Centrals::for_t(&self.t).c;
        let th = r(self.theta);
        let h0 = &self.h - &c * &th / r(3);
        let l0 = &self.l - &th * &h0 - &c * r(self.theta * self.theta + self.theta) / r(6);
        (h0, l0)
    }

    pub fn to_json(&self, alpha: Option<i64>) -> serde_json::Value {
        serde_json::json!({
            "schema": "n2sl2.label/1",
            "h": self.h.to_json(),
            "l": self.l.to_json(),
            "t": self.t.to_json(),
            "theta": self.theta,
            "alpha": alpha,
        })
    }
}

/// Label of `|D(h,t,theta,alpha)>`.
pub fn d_state(h: &RatFun, t: &RatFun, theta: i64, alpha: i64) -> PseudomassiveLabel {
    let d = theta - alpha;
    PseudomassiveLabel {
        h: h + r(2 * d) / t,
        l: r(d) * (r(alpha - theta + 1) - h * t) / t,
        t: t.clone(),
        theta: alpha,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyIdentity {
    /// The closed criterion: `s = 0, r + theta1 = theta2`, or
    /// `t = (r + theta1 - theta2)/s`.
    pub criterion: bool,
    /// Direct comparison of the two D-state labels.
    pub labels_equal: bool,
}

/// Whether `D(h-(r,s,t),t,theta1,alpha) = D(h+(r,s+1,t),t,theta2,alpha)`.
pub fn key_identity(rr: i64, s: i64, theta1: i64, theta2: i64, t: &RatFun) -> KeyIdentity {
    let num = rr + theta1 - theta2;
    let criterion = if s == 0 {
        num == 0
    } else {
        match t.as_rational() {
            Some(t0) => t0 * crate::scalar::rat(s, 1) == crate::scalar::rat(num, 1),
            None => false,
        }
    };
    let hm = topological_h(Sign::Minus, rr, s, t);
    let hp = topological_h(Sign::Plus, rr, s + 1, t);
    let labels_equal = (-2..=2).all(|alpha| d_state(&hm, t, theta1, alpha) == d_state(&hp, t, theta2, alpha));
    KeyIdentity {
        criterion,
        labels_equal,
    }
}

/// Matter (x) Liouville (x) ghosts with the N=2 generators acting.
pub struct StringRep {
    t: RatFun,
    ghost: Module,
    liouville: Module,
    matter: Module,
    n2: Centrals,
    cache: RefCell<HashMap<(Mode, StringKey), StringState>>,
}

/// Whether a mode kills the reference vacuum of its factor.
fn annihilates_vacuum(m: &Mode) -> bool {
    match m.gen {
        Gen::B => m.index >= -1,
        Gen::C => m.index >= 2,
        Gen::A | Gen::T => m.index >= 1,
        _ => false,
    }
}

/// Free-field normal ordering: annihilators moved to the right, with the
/// fermionic sign of the permutation.
fn normal_order(word: &[Mode]) -> (i64, Vec<Mode>) {
    let mut w = word.to_vec();
    let mut sign = 1;
    // insertion sort on the annihilator flag keeps the order otherwise
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && annihilates_vacuum(&w[j - 1]) && !annihilates_vacuum(&w[j]) {
            if w[j - 1].is_fermionic() && w[j].is_fermionic() {
                sign = -sign;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    (sign, w)
}

impl StringRep {
    /// `momentum` is the exponent `p` of `e^{p phi}`; the matter module is
    /// the Virasoro Verma module of dimension `delta`.
    pub fn new(t: &RatFun, momentum: &RatFun, delta: &RatFun) -> Result<Self, Error> {
        if t.is_zero() {
            return Err(Error::InvalidModule("t = 0 is excluded".into()));
        }
        let metric = -(r(1) / (r(2) * t));
        let ghost = Module::new(ModuleSpec::GhostFock { theta: -1 })?;
        let liouville = Module::new(ModuleSpec::FockScalar {
            momentum: momentum * &metric,
            metric,
        })?;
        let c_vir = r(13) - r(6) / t - r(6) * t;
        let matter = Module::new(ModuleSpec::VirasoroVerma {
            delta: delta.clone(),
            c_vir,
        })?;
        Ok(StringRep {
            t: t.clone(),
            ghost,
            liouville,
            matter,
            n2: Centrals::for_t(t),
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn n2_centrals(&self) -> &Centrals {
        &self.n2
    }

    /// Ghost vacuum in picture `theta`, as a state over `|0>`.
    pub fn ghost_vacuum(&self, theta: i64) -> Result<State, Error> {
        let word: Vec<Mode> = if theta >= 0 {
            (0..=theta).map(|i| Mode::new(Gen::C, 1 - i)).collect()
        } else if theta == -1 {
            Vec::new()
        } else {
            (0..=(-theta - 2)).map(|i| Mode::new(Gen::B, -2 - i)).collect()
        };
        self.ghost.state(word)
    }

    /// `|theta>_gh (x) e^{p phi} (x) |Delta>`.
    pub fn product_state(&self, theta: i64) -> Result<StringState, Error> {
        let g = self.ghost_vacuum(theta)?;
        Ok(g.terms().map(|(k, c)| ((k.clone(), Vec::new(), Vec::new()), c.clone())).collect())
    }

    fn horizon_key(&self, key: &StringKey) -> i64 {
        let (g, l, m) = key;
        let hg = self.ghost.monomial_bigrade(g).level + 1;
        let hl = self.liouville.monomial_bigrade(l).level;
        let hm = self.matter.monomial_bigrade(m).level;
        hg.max(hl).max(hm).max(0) + 2
    }

    /// Applies a word of factor modes (rightmost first) to a basis key.
    fn apply_word(&self, word: &[Mode], key: &StringKey) -> Result<StringState, Error> {
        let mut cur: StringState = StringState::basis(key.clone());
        for m in word.iter().rev() {
            let mut next = StringState::zero();
            for ((g, l, mt), c) in cur.terms() {
                let part = match m.gen {
                    Gen::B | Gen::C => self
                        .ghost
                        .act(*m, &State::basis(g.clone()))?
                        .terms()
                        .map(|(k, x)| ((k.clone(), l.clone(), mt.clone()), x * c))
                        .collect::<StringState>(),
                    Gen::A => self
                        .liouville
                        .act(*m, &State::basis(l.clone()))?
                        .terms()
                        .map(|(k, x)| ((g.clone(), k.clone(), mt.clone()), x * c))
                        .collect(),
                    Gen::T => self
                        .matter
                        .act(*m, &State::basis(mt.clone()))?
                        .terms()
                        .map(|(k, x)| ((g.clone(), l.clone(), k.clone()), x * c))
                        .collect(),
                    _ => return Err(Error::UnsupportedPair(format!("{m} is not a string field mode"))),
                };
                next.add_scaled(&part, &RatFun::one());
            }
            if next.is_zero() {
                return Ok(next);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Terms `(coefficient, word)` of the N=2 mode `m`, restricted to the
    /// index range that can act nontrivially below the horizon `u`.
    fn n2_terms(&self, m: Mode, u: i64) -> Vec<(RatFun, Vec<Mode>)> {
        let n = m.index;
        let t = &self.t;
        let b = |i| Mode::new(Gen::B, i);
        let c = |i| Mode::new(Gen::C, i);
        let a = |i| Mode::new(Gen::A, i);
        let tt = |i| Mode::new(Gen::T, i);
        let lo2 = n - u;
        let lo3 = n - 2 * u;
        let mut out: Vec<(RatFun, Vec<Mode>)> = Vec::new();
        match m.gen {
            Gen::G => out.push((r(1), vec![b(n)])),
            Gen::H => {
                out.push((r(2), vec![a(n)]));
                for p in lo2..=u {
                    out.push((r(1), vec![b(p), c(n - p)]));
                }
            }
            Gen::L => {
                out.push((r(1), vec![tt(n)]));
                for p in lo2..=u {
                    out.push((-t.clone(), vec![a(p), a(n - p)]));
                }
                out.push((-(r(1) + t) * r(-n - 1), vec![a(n)]));
                for p in lo2..=u {
                    let q = n - p;
                    out.push((r(p + 2) - r(2 * (1 - q)), vec![b(p), c(q)]));
                }
            }
            Gen::Q => {
                for p in lo3..=u {
                    for q in lo3..=u {
                        let rr = n - p - q;
                        if rr < lo3 || rr > u {
                            continue;
                        }
                        out.push((r(-2 * (1 - q)), vec![b(p), c(q), c(rr)]));
                    }
                }
                for p in lo3..=u {
                    for q in lo3..=u {
                        let rr = n - p - q;
                        if rr < lo3 || rr > u {
                            continue;
                        }
                        out.push((r(-2) * t, vec![a(p), a(q), c(rr)]));
                    }
                }
                for p in lo2..=u {
                    let q = n - p;
                    out.push((r(4 * (1 - q)), vec![a(p), c(q)]));
                    out.push((r(2), vec![tt(p), c(q)]));
                    out.push(((r(2) - r(2) * t) * r(-p - 1), vec![a(p), c(q)]));
                }
                out.push(((r(1) - r(2) / t) * r(n * (n - 1)), vec![c(n)]));
            }
            _ => {}
        }
        out
    }

    fn apply_key(&self, m: Mode, key: &StringKey) -> Result<StringState, Error> {
        let ck = (m, key.clone());
        if let Some(v) = self.cache.borrow().get(&ck) {
            return Ok(v.clone());
        }
        let res = match m.gen {
            Gen::L | Gen::H | Gen::G | Gen::Q => {
                let u = self.horizon_key(key);
                let mut out = StringState::zero();
                for (coef, word) in self.n2_terms(m, u) {
                    if coef.is_zero() {
                        continue;
                    }
                    let (sign, w) = normal_order(&word);
                    let img = self.apply_word(&w, key)?;
                    out.add_scaled(&img, &(coef * r(sign)));
                }
                out
            }
            _ => self.apply_word(&[m], key)?,
        };
        self.cache.borrow_mut().insert(ck, res.clone());
        Ok(res)
    }

    /// Basis states with ghost number in `charges` and total level at most
    /// `max_level` (ghost levels counted from `|0>`).
    pub fn states_up_to(&self, max_level: i64, charges: (i64, i64)) -> Vec<StringKey> {
        let mut out = Vec::new();
        for ch in charges.0..=charges.1 {
            for lg in 0..=max_level {
                let gb = self.ghost.build_basis(Bigrade::new(ch, lg));
                for ll in 0..=(max_level - lg) {
                    let lb = self.liouville.build_basis(Bigrade::new(0, ll));
                    for lm in 0..=(max_level - lg - ll) {
                        let mb = self.matter.build_basis(Bigrade::new(0, lm));
                        for g in &gb {
                            for l in &lb {
                                for m in &mb {
                                    out.push((g.clone(), l.clone(), m.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Representation for StringRep {
    type Key = StringKey;

    fn apply(&self, m: Mode, v: &StringState) -> Result<StringState, Error> {
        let mut out = StringState::zero();
        for (k, c) in v.terms() {
            out.add_scaled(&self.apply_key(m, k)?, c);
        }
        Ok(out)
    }

    fn horizon(&self, v: &StringState) -> i64 {
        v.keys().map(|k| self.horizon_key(k)).max().unwrap_or(0)
    }
}

/// N=2 brackets among the realized generators on the given states.
pub fn closure_violations(rep: &StringRep, states: &[StringKey], max_index: i64) -> Result<Vec<String>, Error> {
    let modes: Vec<Mode> = [Gen::L, Gen::H, Gen::G, Gen::Q]
        .iter()
        .flat_map(|&g| (-max_index..=max_index).map(move |n| Mode::new(g, n)))
        .collect();
    let mut out = Vec::new();
    for key in states {
        let s = StringState::basis(key.clone());
        let images: HashMap<Mode, StringState> = modes
            .iter()
            .map(|&m| Ok((m, rep.apply(m, &s)?)))
            .collect::<Result<_, Error>>()?;
        for (i, &a) in modes.iter().enumerate() {
            for &b in &modes[i..] {
                let sign = if a.is_fermionic() && b.is_fermionic() { 1 } else { -1 };
                let mut lhs = rep.apply(a, &images[&b])?;
                lhs.add_scaled(&rep.apply(b, &images[&a])?, &r(sign));
                let rhs = rep.apply_poly(&commutator(a, b, rep.n2_centrals())?, &s)?;
                if lhs != rhs {
                    out.push(format!("[{a}, {b}] on {}", describe(key)));
                }
            }
        }
    }
    Ok(out)
}

pub fn describe(key: &StringKey) -> String {
    let (g, l, m) = key;
    let part = |w: &Monomial, vac: &str| {
        let mut s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        s.push(vac.to_string());
        s.join(" ")
    };
    format!("{} (x) {} (x) {}", part(g, "|0>"), part(l, "|p>"), part(m, "|D>"))
}

/// Walks the extremal diagram from the picture-`theta` state to picture
/// `alpha` with `G_{theta-1}, G_{theta-2}, ...` or `Q_{-theta-1}, ...`.
pub fn extremal_walk(rep: &StringRep, s: &StringState, theta: i64, alpha: i64) -> Result<StringState, Error> {
    let mut x = s.clone();
    if alpha < theta {
        for i in 1..=(theta - alpha) {
            x = rep.apply(Mode::new(Gen::G, theta - i), &x)?;
        }
    } else {
        for i in 1..=(alpha - theta) {
            x = rep.apply(Mode::new(Gen::Q, -theta - i), &x)?;
        }
    }
    Ok(x)
}

/// Whether `a` is a nonzero multiple of `b`.
pub fn proportional(a: &StringState, b: &StringState) -> bool {
    let Some((k, c)) = b.terms().next() else {
        return false;
    };
    let ca = a.coeff(k);
    !ca.is_zero() && *a == b.scaled(&(ca / c.clone()))
}

/// Pictures `alpha` in `alphas` around the dressed topological state, as an
/// extremal diagram: node charge and level are those of `|D(h,t,theta,alpha)>`
/// relative to the picture-`theta` state, and `G_{alpha-1} = b_{alpha-1}`
/// steps down one picture.
pub fn d_diagram(h: &RatFun, t: &RatFun, theta: i64, alphas: (i64, i64)) -> Result<DiagramGraph, Error> {
    let (h_top, l_top) = d_state(h, t, theta, theta).eigenvalues();
    let mut nodes = Vec::new();
    for alpha in alphas.0..=alphas.1 {
        let label = d_state(h, t, theta, alpha);
        let (h0, l0) = label.eigenvalues();
        let int = |x: RatFun| -> Result<i64, Error> {
            x.as_rational()
                .filter(|q| q.is_integer())
                .and_then(|q| q.to_integer().try_into().ok())
                .ok_or_else(|| Error::InvalidModule(format!("non-integral shift {x}")))
        };
        let mut conditions = vec![HwConditions::Massive(alpha).to_string()];
        if alpha == theta {
            conditions.push(HwConditions::Topological(theta).to_string());
        }
        nodes.push(DiagramNode {
            charge: int(h0 - &h_top)?,
            level: int(l0 - &l_top)?,
            dim: 1,
            cusp: alpha == theta,
            conditions,
        });
    }
    let edges = (1..nodes.len())
        .map(|i| DiagramEdge {
            from: i,
            to: i - 1,
            mode: Mode::new(Gen::G, alphas.0 + i as i64 - 1).to_string(),
        })
        .collect();
    Ok(DiagramGraph { nodes, edges })
}

#[derive(Clone, Debug, Serialize)]
pub struct Dressed {
    pub label: PseudomassiveLabel,
    pub momentum: RatFun,
    pub massive: bool,
    pub topological: bool,
    /// `H_0` and `L_0` on the state agree with the label.
    pub eigenvalues_match: bool,
    pub witness: Option<String>,
}

impl Dressed {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializes");
        v["schema"] = "n2sl2.dress/1".into();
        v
    }
}

/// Dresses the matter primary `|Delta>` with Liouville momentum
/// `2t(-1/2 - h/2 - theta/t)` and ghost picture `alpha`, and checks the
/// result against the label it should carry.
pub fn dress_in_picture(delta: &RatFun, h: &RatFun, t: &RatFun, theta: i64, alpha: i64) -> Result<(StringRep, StringState, Dressed), Error> {
    let p = liouville_exponent(h, t, theta);
    let rep = StringRep::new(t, &p, delta)?;
    let s = rep.product_state(alpha)?;
    let label = if alpha == theta {
        PseudomassiveLabel {
            h: h.clone(),
            l: delta - dressing_dimension(h, t),
            t: t.clone(),
            theta,
        }
    } else {
        let mut lab = d_state(h, t, theta, alpha);
        lab.l = &lab.l + &(delta - dressing_dimension(h, t));
        lab
    };
    let mass = check_hw(&rep, &s, HwConditions::Massive(alpha))?;
    let top = check_hw(&rep, &s, HwConditions::Topological(alpha))?;
    let (h0, l0) = label.eigenvalues();
    let eigen = rep.apply(Mode::new(Gen::H, 0), &s)? == s.scaled(&h0) && rep.apply(Mode::new(Gen::L, 0), &s)? == s.scaled(&l0);
    let dressed = Dressed {
        label,
        momentum: p,
        massive: mass.holds,
        topological: top.holds,
        eigenvalues_match: eigen,
        witness: top.witness,
    };
    Ok((rep, s, dressed))
}

pub fn dress(delta: &RatFun, h: &RatFun, t: &RatFun, theta: i64) -> Result<Dressed, Error> {
    Ok(dress_in_picture(delta, h, t, theta, theta)?.2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let t = RatFun::t();
        assert_eq!(dressing_dimension(&RatFun::zero(), &t), (r(2) - &t) / r(4));
        let h = RatFun::from_ratio(3, 7);
        assert_eq!(dressing_dimension(&h, &t), dressing_dimension(&(r(2) / &t - &h), &t));
        for rr in 1..=3 {
            for s in 1..=3 {
                let hm = topological_h(Sign::Minus, rr, s, &t);
                assert_eq!(dressing_dimension(&hm, &t), kac_dimension(rr, s, &t));
                let hp = topological_h(Sign::Plus, rr, s + 1, &t);
                assert_eq!(dressing_dimension(&hp, &t), kac_dimension(rr, s, &t));
            }
        }
    }

    #[test]
    fn d_state_labels() {
        let (h, t) = (RatFun::from_ratio(1, 3), RatFun::t());
        let l = d_state(&h, &t, 2, 2);
        assert_eq!((l.h.clone(), l.l.clone(), l.theta), (h.clone(), RatFun::zero(), 2));
        let l = d_state(&h, &t, 2, 1);
        assert_eq!((l.h, l.l), (&h + r(2) / &t, -h.clone()));
    }

    #[test]
    fn key_identity_examples() {
        let t = RatFun::t();
        for rr in 1..4 {
            let k = key_identity(rr, 0, 1, rr + 1, &t);
            assert!(k.criterion && k.labels_equal);
        }
        let k = key_identity(1, 1, 0, 0, &RatFun::one());
        assert!(k.criterion && k.labels_equal);
        let k = key_identity(1, 1, 0, 0, &t);
        assert!(!k.criterion && !k.labels_equal);
    }

    #[test]
    fn ghost_vacua() {
        let rep = StringRep::new(&RatFun::t(), &r(1), &r(0)).unwrap();
        assert_eq!(rep.ghost_vacuum(-1).unwrap(), State::basis(vec![]));
        assert_eq!(rep.ghost_vacuum(0).unwrap(), State::basis(vec![Mode::new(Gen::C, 1)]));
        let v1 = rep.ghost_vacuum(1).unwrap();
        assert_eq!(v1.len(), 1);
        let v2 = rep.ghost_vacuum(-3).unwrap();
        assert_eq!(v2.len(), 1);
    }

    #[test]
    fn h0_on_dressed_state() {
        let t = RatFun::t();
        for theta in -2..=2 {
            let d = dress(&RatFun::from_ratio(1, 5), &RatFun::from_ratio(2, 3), &t, theta).unwrap();
            assert!(d.eigenvalues_match, "theta = {theta}");
        }
    }

    #[test]
    fn dressing_conditions() {
        let t = RatFun::t();
        let h = RatFun::from_ratio(2, 3);
        for theta in -2..=2 {
            let d = dress(&RatFun::from_ratio(1, 5), &h, &t, theta).unwrap();
            assert!(d.massive && !d.topological, "theta = {theta}: {d:?}");
            let d = dress(&dressing_dimension(&h, &t), &h, &t, theta).unwrap();
            assert!(d.topological, "theta = {theta}: {d:?}");
        }
    }

    #[test]
    fn closure_level_one() {
        let t = RatFun::t();
        let rep = StringRep::new(&t, &RatFun::from_ratio(1, 3), &RatFun::from_ratio(2, 5)).unwrap();
        let states = rep.states_up_to(1, (-1, 1));
        let bad = closure_violations(&rep, &states, 1).unwrap();
        assert!(bad.is_empty(), "{} failures, first {:?}", bad.len(), bad.first());
    }

    #[test]
    fn normal_ordering_sign() {
        let (s, w) = normal_order(&[Mode::new(Gen::B, 0), Mode::new(Gen::C, -1)]);
        assert_eq!(s, -1);
        assert_eq!(w, vec![Mode::new(Gen::C, -1), Mode::new(Gen::B, 0)]);
    }

    #[test]
    fn extremal_walk_reaches_d_states() {
        let t = RatFun::t();
        let h = RatFun::from_ratio(2, 3);
        let delta = dressing_dimension(&h, &t);
        for theta in -1..=1 {
            let (rep, s, _) = dress_in_picture(&delta, &h, &t, theta, theta).unwrap();
            for alpha in -2..=2 {
                if alpha <= theta {
                    let w = extremal_walk(&rep, &s, theta, alpha).unwrap();
                    assert!(proportional(&w, &rep.product_state(alpha).unwrap()), "{theta} -> {alpha}");
                }
                let (_, _, d) = dress_in_picture(&delta, &h, &t, theta, alpha).unwrap();
                assert!(d.eigenvalues_match && d.massive, "{theta} -> {alpha}: {d:?}");
                assert_eq!(d.label, d_state(&h, &t, theta, alpha));
            }
        }
    }

    #[test]
    fn picture_diagram() {
        let d = d_diagram(&RatFun::from_ratio(1, 3), &RatFun::t(), 0, (-2, 2)).unwrap();
        let cusps: Vec<_> = d.cusps().collect();
        assert_eq!(cusps.len(), 1);
        assert_eq!((cusps[0].charge, cusps[0].level), (0, 0));
        let charges: Vec<i64> = d.nodes.iter().map(|n| n.charge).collect();
        assert_eq!(charges, vec![2, 1, 0, -1, -2]);
        assert!(d.to_dot().contains("G-1"));
    }
}
