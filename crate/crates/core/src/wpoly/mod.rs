//! Weighted-graded multivariate polynomials and homogeneous derivations.
//!
//! A [`WPolyRing`] fixes an ordered variable list, strictly positive integer
//! weights, and optionally a homogeneous modulus `f` (the hypersurface
//! equation). Polynomials are not reduced modulo `f`: they live in the
//! ambient polynomial ring, and the modulus is used for validation and for
//! exact membership tests in the principal ideal `(f)`.

pub mod template;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::scalar::{Rational, Scalar};

/// Homogeneity status of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    /// All terms share this weighted degree.
    Degree(i64),
    /// Terms of different weighted degrees are present.
    Inhomogeneous,
}

impl Homogeneity {
    /// True when the polynomial is homogeneous of degree `d` (zero counts).
    pub fn admits(self, d: i64) -> bool {
        matches!(self, Homogeneity::Any) || self == Homogeneity::Degree(d)
    }
}

#[derive(PartialEq, Eq, Debug)]
struct RingInner<K> {
    var_names: Vec<String>,
    weights: Vec<i64>,
    /// Terms of the modulus, if any. Stored raw (not as a `WPoly`) so the
    /// ring is self-contained.
    modulus_terms: Option<BTreeMap<Vec<u32>, K>>,
}

/// A weighted polynomial ring, cheap to clone and structurally comparable.
#[derive(Clone, Debug)]
pub struct WPolyRing<K>(Arc<RingInner<K>>);

impl<K: Scalar> PartialEq for WPolyRing<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl<K: Scalar> Eq for WPolyRing<K> {}

/// Weighted degree `Σ eᵢ·wᵢ` with overflow as a hard error.
pub fn weighted_degree(exps: &[u32], weights: &[i64]) -> Result<i64> {
    let mut acc: i64 = 0;
    for (&e, &w) in exps.iter().zip(weights) {
        let term = w.checked_mul(e as i64).ok_or(Error::Overflow)?;
        acc = acc.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

impl<K: Scalar> WPolyRing<K> {
    /// A ring without modulus.
    pub fn new<S: Into<String>>(var_names: Vec<S>, weights: Vec<i64>) -> Result<Self> {
        if var_names.len() != weights.len() {
            return Err(Error::Dimension(
                "variable and weight counts differ".into(),
            ));
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::Invalid("weights must be strictly positive".into()));
        }
        let names: Vec<String> = var_names.into_iter().map(Into::into).collect();
        {
            let mut seen = names.clone();
            seen.sort();
            seen.dedup();
            if seen.len() != names.len() {
                return Err(Error::Invalid("duplicate variable name".into()));
            }
        }
        Ok(WPolyRing(Arc::new(RingInner {
            var_names: names,
            weights,
            modulus_terms: None,
        })))
    }

    /// The same ring with `f` installed as the hypersurface modulus.
    ///
    /// `f` must be a nonzero homogeneous polynomial of this ring (with or
    /// without a previously installed modulus).
    pub fn with_modulus(&self, f: &WPoly<K>) -> Result<Self> {
        if f.ring.0.var_names != self.0.var_names || f.ring.0.weights != self.0.weights {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::Invalid("modulus must be nonzero".into()));
        }
        match f.homogeneity()? {
            Homogeneity::Degree(_) => {}
            _ => return Err(Error::Invalid("modulus must be homogeneous".into())),
        }
        Ok(WPolyRing(Arc::new(RingInner {
            var_names: self.0.var_names.clone(),
            weights: self.0.weights.clone(),
            modulus_terms: Some(f.terms.clone()),
        })))
    }

    pub fn num_vars(&self) -> usize {
        self.0.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.var_names.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0.weights
    }

    pub fn has_modulus(&self) -> bool {
        self.0.modulus_terms.is_some()
    }

    /// The modulus as a polynomial of this ring.
    pub fn modulus(&self) -> Option<WPoly<K>> {
        self.0.modulus_terms.as_ref().map(|t| WPoly {
            ring: self.clone(),
            terms: t.clone(),
        })
    }

    /// Degree of the modulus, if present.
    pub fn modulus_degree(&self) -> Option<i64> {
        let t = self.0.modulus_terms.as_ref()?;
        let e = t.keys().next()?;
        weighted_degree(e, &self.0.weights).ok()
    }

    pub fn zero(&self) -> WPoly<K> {
        WPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> WPoly<K> {
        self.constant(K::one())
    }

    pub fn constant(&self, c: K) -> WPoly<K> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u32; self.num_vars()], c);
        }
        WPoly {
            ring: self.clone(),
            terms,
        }
    }

    pub fn var(&self, idx: usize) -> WPoly<K> {
        assert!(idx < self.num_vars(), "variable index out of range");
        let mut e = vec![0u32; self.num_vars()];
        e[idx] = 1;
        self.monomial(e, K::one())
    }

    pub fn monomial(&self, exps: Vec<u32>, c: K) -> WPoly<K> {
        assert_eq!(exps.len(), self.num_vars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        WPoly {
            ring: self.clone(),
            terms,
        }
    }
}

/// All exponent vectors of weighted degree exactly `d`, in ascending
/// lexicographic order. Empty for `d < 0` (weights are positive).
pub fn monomials_of_degree<K: Scalar>(ring: &WPolyRing<K>, d: i64) -> Vec<Vec<u32>> {
    let weights = ring.weights();
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    fn rec(weights: &[i64], pos: usize, remaining: i64, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining < 0 {
            return;
        }
        if pos == weights.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        if pos + 1 == weights.len() {
            // Last variable: exact division or nothing.
            if remaining % weights[pos] == 0 {
                current[pos] = (remaining / weights[pos]) as u32;
                out.push(current.clone());
                current[pos] = 0;
            }
            return;
        }
        let max = remaining / weights[pos];
        for e in 0..=max {
            current[pos] = e as u32;
            rec(weights, pos + 1, remaining - e * weights[pos], current, out);
        }
        current[pos] = 0;
    }
    rec(weights, 0, d, &mut current, &mut out);
    out
}

/// A polynomial with exact coefficients in a weighted ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WPoly<K: Scalar> {
    ring: WPolyRing<K>,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: Scalar> WPoly<K> {
    pub fn ring(&self) -> &WPolyRing<K> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, K> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms(ring: &WPolyRing<K>, terms: Vec<(Vec<u32>, K)>) -> Result<Self> {
        let mut p = ring.zero();
        for (e, c) in terms {
            if e.len() != ring.num_vars() {
                return Err(Error::Dimension("exponent vector length".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        WPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k.clone() * c.clone()))
            .collect();
        WPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.ring.zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1
                    .iter()
                    .zip(e2)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = self.ring.one();
        for _ in 0..n {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    pub fn homogeneity(&self) -> Result<Homogeneity> {
        let weights = self.ring.weights();
        let mut degree: Option<i64> = None;
        for e in self.terms.keys() {
            let d = weighted_degree(e, weights)?;
            match degree {
                None => degree = Some(d),
                Some(prev) if prev == d => {}
                Some(_) => return Ok(Homogeneity::Inhomogeneous),
            }
        }
        Ok(match degree {
            None => Homogeneity::Any,
            Some(d) => Homogeneity::Degree(d),
        })
    }

    /// Leading term under ascending lex on exponent vectors (largest key).
    fn lead(&self) -> Option<(&Vec<u32>, &K)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when `self ∉ (divisor)`.
    ///
    /// Single-divisor polynomial division under the lex term order: for a
    /// principal ideal this decides membership exactly — if any reduction
    /// step fails, the element is not a multiple of the divisor.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.same_ring(divisor)?;
        let (dlead_e, dlead_c) = divisor
            .lead()
            .ok_or_else(|| Error::Invalid("division by zero polynomial".into()))?;
        let dlead_inv = dlead_c.inv().expect("nonzero lead coefficient");
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((rlead_e, rlead_c)) = rem.lead() {
            if rlead_e.iter().zip(dlead_e).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let qe: Vec<u32> = rlead_e.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            let qc = rlead_c.clone() * dlead_inv.clone();
            let qterm = self.ring.monomial(qe, qc);
            rem = rem.sub(&qterm.mul(divisor)?)?;
            quot = quot.add(&qterm)?;
        }
        Ok(Some(quot))
    }

    /// Membership in the principal ideal generated by the ring's modulus.
    pub fn in_modulus_ideal(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let f = self
            .ring
            .modulus()
            .ok_or_else(|| Error::Invalid("ring has no modulus".into()))?;
        Ok(self.div_exact(&f)?.is_some())
    }

    /// Render with explicit coefficients, deterministic term order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = self.ring.var_names();
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut mono: Vec<String> = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => mono.push(names[i].clone()),
                    _ => mono.push(format!("{}^{}", names[i], p)),
                }
            }
            let coeff = c.render_coeff();
            let body = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono.join("*")
            } else if (-c.clone()).is_one() {
                format!("-{}", mono.join("*"))
            } else {
                format!("({})*{}", coeff, mono.join("*"))
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl<K: Scalar> fmt::Display for WPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A homogeneous derivation, stored as the images of the variables.
///
/// The degree `ω` is explicit and validated: the image of a variable of
/// weight `w` must be homogeneous of degree `w + ω` (or zero). When the ring
/// carries a modulus `f`, the construction additionally checks `D(f) ∈ (f)`,
/// so the operator descends to the quotient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation<K: Scalar> {
    ring: WPolyRing<K>,
    images: Vec<WPoly<K>>,
    omega: i64,
}

impl<K: Scalar> Derivation<K> {
    pub fn new(ring: &WPolyRing<K>, images: Vec<WPoly<K>>, omega: i64) -> Result<Self> {
        if images.len() != ring.num_vars() {
            return Err(Error::Dimension(
                "one image per variable is required".into(),
            ));
        }
        for (i, img) in images.iter().enumerate() {
            if img.ring() != ring {
                return Err(Error::RingMismatch);
            }
            let expected = ring.weights()[i]
                .checked_add(omega)
                .ok_or(Error::Overflow)?;
            if !img.homogeneity()?.admits(expected) {
                return Err(Error::DegreePattern(format!(
                    "image of {} must be homogeneous of degree {}",
                    ring.var_names()[i],
                    expected
                )));
            }
        }
        let d = Derivation {
            ring: ring.clone(),
            images,
            omega,
        };
        if let Some(f) = ring.modulus() {
            if !d.apply(&f)?.in_modulus_ideal()? {
                return Err(Error::Invalid(
                    "derivation does not preserve the modulus ideal".into(),
                ));
            }
        }
        Ok(d)
    }

    pub fn ring(&self) -> &WPolyRing<K> {
        &self.ring
    }

    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn images(&self) -> &[WPoly<K>] {
        &self.images
    }

    /// Leibniz expansion of `D(p)`, term by term.
    pub fn apply(&self, p: &WPoly<K>) -> Result<WPoly<K>> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.ring.zero();
        for (e, c) in p.terms() {
            for (i, img) in self.images.iter().enumerate() {
                if e[i] == 0 || img.is_zero() {
                    continue;
                }
                let mut de = e.clone();
                de[i] -= 1;
                let partial = self.ring.monomial(de, c.clone() * K::from_int(e[i] as i64));
                out = out.add(&partial.mul(img)?)?;
            }
        }
        Ok(out)
    }

    /// Pointwise linear combination `Σ cᵢ·Dᵢ` (degrees must agree).
    pub fn linear_combination(terms: &[(K, &Derivation<K>)]) -> Result<Derivation<K>> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::Invalid("empty combination".into()))?;
        let ring = first.ring.clone();
        let omega = first.omega;
        let mut images = vec![ring.zero(); ring.num_vars()];
        for (c, d) in terms {
            if d.ring != ring || d.omega != omega {
                return Err(Error::Invalid(
                    "combination of derivations with different rings or degrees".into(),
                ));
            }
            for (acc, img) in images.iter_mut().zip(&d.images) {
                *acc = acc.add(&img.scale(c))?;
            }
        }
        Derivation::new(&ring, images, omega)
    }

    /// The commutator `[self, other]`, a derivation of degree `ω₁ + ω₂`.
    pub fn bracket(&self, other: &Derivation<K>) -> Result<Derivation<K>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut images = Vec::with_capacity(self.ring.num_vars());
        for i in 0..self.ring.num_vars() {
            let a = self.apply(&other.images[i])?;
            let b = other.apply(&self.images[i])?;
            images.push(a.sub(&b)?);
        }
        let omega = self
            .omega
            .checked_add(other.omega)
            .ok_or(Error::Overflow)?;
        Derivation::new(&self.ring, images, omega)
    }
}

/// Parse a polynomial over the rationals from `c1 e11 e12 ... ; c2 ...`
/// style term lists used in tests.
pub fn qpoly_from_list(ring: &WPolyRing<Rational>, terms: &[(&str, &[u32])]) -> WPoly<Rational> {
    let mut p = ring.zero();
    for (c, e) in terms {
        let coeff = Rational::parse(c).expect("rational literal");
        p = p
            .add(&ring.monomial(e.to_vec(), coeff))
            .expect("same ring");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn a2_ring() -> WPolyRing<Rational> {
        // x^2 + y^{n+1} + zw with n = 2: weights (3,2,3,3).
        let ring = WPolyRing::new(vec!["x", "y", "z", "w"], vec![3, 2, 3, 3]).unwrap();
        let f = qpoly_from_list(
            &ring,
            &[
                ("1", &[2, 0, 0, 0]),
                ("1", &[0, 3, 0, 0]),
                ("1", &[0, 0, 1, 1]),
            ],
        );
        ring.with_modulus(&f).unwrap()
    }

    #[test]
    fn monomials_of_degree_examples() {
        let ring = a2_ring();
        assert_eq!(monomials_of_degree(&ring, 0), vec![vec![0, 0, 0, 0]]);
        // d = 2 has the single solution y.
        assert_eq!(monomials_of_degree(&ring, 2), vec![vec![0, 1, 0, 0]]);
        // d = 1 has no solution: 3a + 2b + 3c + 3d = 1.
        assert!(monomials_of_degree(&ring, 1).is_empty());
        assert!(monomials_of_degree(&ring, -4).is_empty());
    }

    #[test]
    fn monomials_distinct_and_exact() {
        let ring = WPolyRing::<Rational>::new(vec!["a", "b", "c"], vec![1, 2, 3]).unwrap();
        for d in 0..12 {
            let ms = monomials_of_degree(&ring, d);
            let mut sorted = ms.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), ms.len(), "duplicates at degree {d}");
            for e in &ms {
                assert_eq!(weighted_degree(e, ring.weights()).unwrap(), d);
            }
        }
    }

    #[test]
    fn product_degree_additivity() {
        let ring = WPolyRing::<Rational>::new(vec!["x", "y"], vec![2, 3]).unwrap();
        let p = ring.var(0);
        let q_ = ring.var(1);
        let prod = p.mul(&q_).unwrap();
        assert_eq!(prod.homogeneity().unwrap(), Homogeneity::Degree(5));
        assert_eq!(p.mul(&ring.one()).unwrap(), p);
        let x2 = ring.var(0).mul(&ring.var(0)).unwrap();
        assert_eq!(x2, ring.monomial(vec![2, 0], q(1)));
    }

    #[test]
    fn homogeneity_of_modulus() {
        let ring = a2_ring();
        let f = ring.modulus().unwrap();
        // 2n + 2 with n = 2.
        assert_eq!(f.homogeneity().unwrap(), Homogeneity::Degree(6));
        let mixed = WPolyRing::<Rational>::new(vec!["x", "y"], vec![1, 2]).unwrap();
        let p = mixed.var(0).add(&mixed.var(1)).unwrap();
        assert_eq!(p.homogeneity().unwrap(), Homogeneity::Inhomogeneous);
        assert_eq!(mixed.zero().homogeneity().unwrap(), Homogeneity::Any);
    }

    #[test]
    fn derivation_examples() {
        let ring = a2_ring();
        // D1 = z ∂z − w ∂w, degree 0.
        let d1 = Derivation::new(
            &ring,
            vec![ring.zero(), ring.zero(), ring.var(2), ring.var(3).neg()],
            0,
        )
        .unwrap();
        let zw = ring.var(2).mul(&ring.var(3)).unwrap();
        assert!(d1.apply(&zw).unwrap().is_zero());
        assert!(d1.apply(&ring.one()).unwrap().is_zero());

        // Euler field on one variable: E(x^i) = i x^i.
        let e_ring = WPolyRing::<Rational>::new(vec!["x"], vec![1]).unwrap();
        let euler = Derivation::new(&e_ring, vec![e_ring.var(0)], 0).unwrap();
        for i in 1..6u32 {
            let xi = e_ring.var(0).pow(i);
            assert_eq!(euler.apply(&xi).unwrap(), xi.scale(&q(i as i64)));
        }
    }

    #[test]
    fn derivation_must_preserve_modulus() {
        let ring = a2_ring();
        // ∂x alone does not preserve (f): D(f) = 2x ∉ (f).
        let err = Derivation::new(
            &ring,
            vec![ring.one(), ring.zero(), ring.zero(), ring.zero()],
            -3,
        );
        assert!(err.is_err());
    }

    #[test]
    fn derivation_degree_validation() {
        let ring = WPolyRing::<Rational>::new(vec!["x", "y"], vec![1, 2]).unwrap();
        // Image of x has degree 2, so omega must be 1; claiming 0 is invalid.
        let bad = Derivation::new(&ring, vec![ring.var(1), ring.zero()], 0);
        assert!(bad.is_err());
        let good = Derivation::new(&ring, vec![ring.var(1), ring.zero()], 1);
        assert!(good.is_ok());
    }

    #[test]
    fn exact_division_membership() {
        let ring = a2_ring();
        let f = ring.modulus().unwrap();
        let y = ring.var(1);
        let yf = y.mul(&f).unwrap();
        let quot = yf.div_exact(&f).unwrap().unwrap();
        assert_eq!(quot, y);
        assert!(yf.in_modulus_ideal().unwrap());
        assert!(!y.in_modulus_ideal().unwrap());
        assert!(ring.zero().in_modulus_ideal().unwrap());
    }
}
