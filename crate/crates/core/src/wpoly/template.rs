//! Template polynomials: polynomials whose coefficients are affine-linear
//! forms in a registry of scalar unknowns.
//!
//! The connection solvers build equations of the shape "concrete polynomial
//! matrix times unknown-coefficient matrix"; every product is between one
//! concrete and one template factor, so coefficients stay affine-linear and
//! the whole problem reduces to one exact linear system.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::linalg::Matrix;
use crate::exact::scalar::Scalar;
use crate::wpoly::{monomials_of_degree, WPoly, WPolyRing};

/// Allocator of scalar unknowns. Indices are dense and creation-ordered, so
/// solver output is deterministic.
#[derive(Clone, Debug, Default)]
pub struct UnknownRegistry {
    names: Vec<String>,
}

impl UnknownRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Affine-linear form `constant + Σ coeff·u` over registry unknowns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinForm<K> {
    pub constant: K,
    pub coeffs: BTreeMap<usize, K>,
}

impl<K: Scalar> LinForm<K> {
    pub fn zero() -> Self {
        LinForm {
            constant: K::zero(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        LinForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unknown(idx: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(idx, K::one());
        LinForm {
            constant: K::zero(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.constant = self.constant.clone() + other.constant.clone();
        for (&u, c) in &other.coeffs {
            self.add_unknown(u, c.clone());
        }
    }

    fn add_unknown(&mut self, u: usize, c: K) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(u) {
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

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return LinForm::zero();
        }
        LinForm {
            constant: self.constant.clone() * c.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&u, k)| (u, k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LinForm {
            constant: -self.constant.clone(),
            coeffs: self.coeffs.iter().map(|(&u, k)| (u, -k.clone())).collect(),
        }
    }

    /// Evaluate at an assignment vector indexed by unknown.
    pub fn eval(&self, assignment: &[K]) -> K {
        let mut acc = self.constant.clone();
        for (&u, c) in &self.coeffs {
            acc = acc + c.clone() * assignment[u].clone();
        }
        acc
    }
}

/// Polynomial with [`LinForm`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TPoly<K: Scalar> {
    ring: WPolyRing<K>,
    terms: BTreeMap<Vec<u32>, LinForm<K>>,
}

impl<K: Scalar> TPoly<K> {
    pub fn zero(ring: &WPolyRing<K>) -> Self {
        TPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_wpoly(p: &WPoly<K>) -> Self {
        TPoly {
            ring: p.ring().clone(),
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| (e.clone(), LinForm::constant(c.clone())))
                .collect(),
        }
    }

    pub fn ring(&self) -> &WPolyRing<K> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, LinForm<K>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, form: LinForm<K>) {
        if form.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(form);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&form);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (e, f) in &other.terms {
            out.add_term(e.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, f)| (e.clone(), f.neg()))
                .collect(),
        }
    }

    /// Product by a concrete polynomial (template stays affine-linear).
    pub fn mul_wpoly(&self, p: &WPoly<K>) -> Result<Self> {
        if self.ring != *p.ring() {
            return Err(Error::RingMismatch);
        }
        let mut out = TPoly::zero(&self.ring);
        for (e1, f) in &self.terms {
            for (e2, c) in p.terms() {
                let e: Vec<u32> = e1
                    .iter()
                    .zip(e2)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, f.scale(c));
            }
        }
        Ok(out)
    }

    /// Evaluate all unknowns, producing a concrete polynomial.
    pub fn eval(&self, assignment: &[K]) -> Result<WPoly<K>> {
        let mut terms = Vec::new();
        for (e, f) in &self.terms {
            terms.push((e.clone(), f.eval(assignment)));
        }
        WPoly::from_terms(&self.ring, terms)
    }
}

/// The general homogeneous polynomial of weighted degree `d`: one fresh
/// unknown per monomial of that degree. Empty when no monomial exists.
pub fn generic_homogeneous<K: Scalar>(
    ring: &WPolyRing<K>,
    d: i64,
    tag: &str,
    registry: &mut UnknownRegistry,
) -> TPoly<K> {
    let mut out = TPoly::zero(ring);
    for e in monomials_of_degree(ring, d) {
        let u = registry.fresh(format!("{tag}[{e:?}]"));
        out.add_term(e, LinForm::unknown(u));
    }
    out
}

/// Rectangular matrix of template polynomials.
#[derive(Clone, Debug)]
pub struct TPolyMat<K: Scalar> {
    ring: WPolyRing<K>,
    rows: usize,
    cols: usize,
    entries: Vec<TPoly<K>>,
}

impl<K: Scalar> TPolyMat<K> {
    pub fn zero(ring: &WPolyRing<K>, rows: usize, cols: usize) -> Self {
        TPolyMat {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![TPoly::zero(ring); rows * cols],
        }
    }

    pub fn from_entries(
        ring: &WPolyRing<K>,
        rows: usize,
        cols: usize,
        entries: Vec<TPoly<K>>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension("entry count".into()));
        }
        Ok(TPolyMat {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &TPoly<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut TPoly<K> {
        &mut self.entries[i * self.cols + j]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix shapes differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        TPolyMat::from_entries(&self.ring, self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TPolyMat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(TPoly::neg).collect(),
        }
    }

    /// Left multiplication by a concrete polynomial matrix (row-major).
    pub fn lmul_concrete(&self, a: &[Vec<WPoly<K>>]) -> Result<Self> {
        let arows = a.len();
        if a.iter().any(|r| r.len() != self.rows) {
            return Err(Error::Dimension("inner dimensions differ".into()));
        }
        let mut out = TPolyMat::zero(&self.ring, arows, self.cols);
        for i in 0..arows {
            for j in 0..self.cols {
                let mut acc = TPoly::zero(&self.ring);
                for k in 0..self.rows {
                    acc = acc.add(&self.entry(k, j).mul_wpoly(&a[i][k])?)?;
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Right multiplication by a concrete polynomial matrix (row-major).
    pub fn rmul_concrete(&self, a: &[Vec<WPoly<K>>]) -> Result<Self> {
        let arows = a.len();
        let acols = a.first().map_or(0, |r| r.len());
        if arows != self.cols || a.iter().any(|r| r.len() != acols) {
            return Err(Error::Dimension("inner dimensions differ".into()));
        }
        let mut out = TPolyMat::zero(&self.ring, self.rows, acols);
        for i in 0..self.rows {
            for j in 0..acols {
                let mut acc = TPoly::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul_wpoly(&a[k][j])?)?;
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Scale every entry by a concrete polynomial.
    pub fn scale_wpoly(&self, p: &WPoly<K>) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|t| t.mul_wpoly(p))
            .collect::<Result<Vec<_>>>()?;
        TPolyMat::from_entries(&self.ring, self.rows, self.cols, entries)
    }

    pub fn eval(&self, assignment: &[K]) -> Result<Vec<Vec<WPoly<K>>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self.entry(i, j).eval(assignment)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// Collect the linear system "every template entry is identically zero".
///
/// Each (entry, monomial) pair contributes one equation
/// `Σ coeff·u = −constant`. Returns the coefficient matrix and right-hand
/// side over `num_unknowns` columns, rows in deterministic order.
pub fn equations_for_zero<K: Scalar>(
    mats: &[&TPolyMat<K>],
    num_unknowns: usize,
) -> (Matrix<K>, Vec<K>) {
    let mut rows: Vec<Vec<K>> = Vec::new();
    let mut rhs: Vec<K> = Vec::new();
    for mat in mats {
        for entry in &mat.entries {
            for form in entry.terms.values() {
                let mut row = vec![K::zero(); num_unknowns];
                for (&u, c) in &form.coeffs {
                    row[u] = c.clone();
                }
                rows.push(row);
                rhs.push(-form.constant.clone());
            }
        }
    }
    let matrix = if rows.is_empty() {
        Matrix::zero(0, num_unknowns)
    } else {
        Matrix::from_rows(rows).expect("uniform row width")
    };
    (matrix, rhs)
}
