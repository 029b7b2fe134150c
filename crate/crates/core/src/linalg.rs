//! Sparse vectors over ℚ(t) and a fraction-free nullspace routine.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{Poly, RatFun};

/// Finite linear combination of basis keys with ℚ(t) coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<K: Ord> {
    terms: BTreeMap<K, RatFun>,
}

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Vector {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Vector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, RatFun::one())
    }

    pub fn term(k: K, c: RatFun) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn add_term(&mut self, k: K, c: RatFun) {
        if c.is_zero() {
            return;
        }
        if let Some(x) = self.terms.get_mut(&k) {
            *x += &c;
            if x.is_zero() {
                self.terms.remove(&k);
            }
        } else {
            self.terms.insert(k, c);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &o.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &RatFun) -> Self {
        let mut v = Self::zero();
        v.add_scaled(self, c);
        v
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut v = self.clone();
        v.add_scaled(o, &RatFun::from_int(-1));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> RatFun {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &RatFun)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs<E>(
        &self,
        mut f: impl FnMut(&RatFun) -> Result<RatFun, E>,
    ) -> Result<Self, E> {
        let mut v = Self::zero();
        for (k, c) in &self.terms {
            v.add_term(k.clone(), f(c)?);
        }
        Ok(v)
    }
}

impl<K: Ord + Clone> FromIterator<(K, RatFun)> for Vector<K> {
    fn from_iter<I: IntoIterator<Item = (K, RatFun)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Debug> fmt::Display for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {k:?}")?;
        }
        Ok(())
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b);
    (a * b).exact_div(&g)
}

/// Divides a row by the polynomial gcd of its entries.
fn make_primitive(row: &mut [Poly]) {
    let mut g = Poly::zero();
    for e in row.iter().filter(|e| !e.is_zero()) {
        g = if g.is_zero() { e.clone() } else { Poly::gcd(&g, e) };
    }
    if g.is_zero() {
        return;
    }
    for e in row.iter_mut() {
        if !e.is_zero() {
            *e = e.exact_div(&g);
        }
    }
    // then to coprime integer coefficients
    let coeffs: Vec<&crate::Rational> = row.iter().flat_map(|e| e.coeffs().iter()).collect();
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
    if !num.is_zero() {
        let s = crate::Rational::new(den, num);
        for e in row.iter_mut() {
            *e = e.scale(&s);
        }
    }
}

/// Polynomial rows equivalent to the given ℚ(t) rows, by clearing
/// denominators.
fn clear_denominators(rows: &[Vec<RatFun>]) -> Vec<Vec<Poly>> {
    rows.iter()
        .map(|row| {
            let mut l = Poly::one();
            for e in row.iter().filter(|e| !e.is_zero()) {
                l = lcm(&l, e.denom());
            }
            let mut out: Vec<Poly> = row
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        Poly::zero()
                    } else {
                        e.numer() * &l.exact_div(e.denom())
                    }
                })
                .collect();
            make_primitive(&mut out);
            out
        })
        .collect()
}

/// Reduced echelon form over ℚ[t] by cross-multiplication. Returns the
/// reduced rows and the pivot column of each.
fn echelon(rows: &[Vec<RatFun>], ncols: usize) -> (Vec<Vec<Poly>>, Vec<usize>) {
    let mut m = clear_denominators(rows);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let best = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| (m[r][col].degree(), m[r].iter().filter(|e| !e.is_zero()).count()));
        let Some(p) = best else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let a = m[r][col].clone();
            let pv = m[rank][col].clone();
            let g = Poly::gcd(&a, &pv);
            let (fa, fp) = (a.exact_div(&g), pv.exact_div(&g));
            let new: Vec<Poly> = (0..ncols)
                .map(|c| &(&m[r][c] * &fp) - &(&m[rank][c] * &fa))
                .collect();
            m[r] = new;
            make_primitive(&mut m[r]);
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn rank(rows: &[Vec<RatFun>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// Basis of the right nullspace of `rows` (each of length `ncols`). Every
/// vector is scaled so its first nonzero entry is 1.
pub fn kernel(rows: &[Vec<RatFun>], ncols: usize) -> Vec<Vec<RatFun>> {
    let (m, pivots) = echelon(rows, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![RatFun::zero(); ncols];
        x[free] = RatFun::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            if !row[free].is_zero() {
                let num = RatFun::from_poly(-&row[free]);
                x[pc] = num / RatFun::from_poly(row[pc].clone());
            }
        }
        let lead = x.iter().find(|e| !e.is_zero()).cloned().expect("nonzero kernel vector");
        out.push(x.into_iter().map(|e| e / &lead).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> RatFun {
        RatFun::from_int(n)
    }

    fn mat_vec(rows: &[Vec<RatFun>], x: &[RatFun]) -> Vec<RatFun> {
        rows.iter()
            .map(|row| row.iter().zip(x).fold(RatFun::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let t = RatFun::t();
        let rows = vec![vec![t.clone(), r(1), t.clone() * &t]];
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(mat_vec(&rows, x).iter().all(|e| e.is_zero()));
        }
        assert!(k[0][0].is_one());
    }

    #[test]
    fn kernel_depends_on_t() {
        // [[t-1, 1], [1, 1/(t-1)]] has rank one
        let t = RatFun::t();
        let a = &t - r(1);
        let rows = vec![vec![a.clone(), r(1)], vec![r(1), r(1) / &a]];
        let k = kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][1], -a);
        assert_eq!(rank(&rows, 2), 1);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let t = RatFun::t();
        let rows = vec![vec![t.clone(), r(2)], vec![r(3), t.clone()]];
        assert!(kernel(&rows, 2).is_empty());
    }

    #[test]
    fn vector_cancellation() {
        let mut v: Vector<u8> = Vector::basis(1);
        v.add_term(2, r(3));
        v.add_term(1, r(-1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&2), r(3));
    }
}
