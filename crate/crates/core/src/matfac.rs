//! Matrix factorizations of hypersurface equations and graded module
//! presentations.
//!
//! A matrix factorization of `f` is a pair of square matrices `(φ, ψ)` over
//! the ambient polynomial ring with `φψ = ψφ = f·I`. Cokernels are never
//! materialized: the maximal Cohen-Macaulay module `coker(φ)` is always
//! handled at presentation level through [`GradedPresentation`].

use crate::error::{Error, Result};
use crate::exact::scalar::Scalar;
use crate::wpoly::{Homogeneity, WPoly, WPolyRing};

/// Square polynomial matrix, row-major.
pub type PolyMat<K> = Vec<Vec<WPoly<K>>>;

/// Exact product of two rectangular polynomial matrices.
pub fn mat_mul<K: Scalar>(a: &PolyMat<K>, b: &PolyMat<K>) -> Result<PolyMat<K>> {
    let (ar, ac) = mat_shape(a)?;
    let (br, bc) = mat_shape(b)?;
    if ac != br {
        return Err(Error::Dimension(format!(
            "cannot multiply {ar}x{ac} by {br}x{bc}"
        )));
    }
    let ring = a
        .first()
        .and_then(|r| r.first())
        .or_else(|| b.first().and_then(|r| r.first()))
        .ok_or_else(|| Error::Dimension("empty matrix product".into()))?
        .ring()
        .clone();
    let mut out = vec![vec![ring.zero(); bc]; ar];
    for i in 0..ar {
        for j in 0..bc {
            let mut acc = ring.zero();
            for k in 0..ac {
                acc = acc.add(&a[i][k].mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

fn mat_shape<K: Scalar>(m: &PolyMat<K>) -> Result<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged polynomial matrix".into()));
    }
    Ok((rows, cols))
}

pub fn mat_transpose<K: Scalar>(m: &PolyMat<K>) -> PolyMat<K> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// A pair `(φ, ψ)` with `φψ = ψφ = f·I` over a ring without modulus.
#[derive(Clone, Debug)]
pub struct MatrixFactorization<K: Scalar> {
    pub ring: WPolyRing<K>,
    pub f: WPoly<K>,
    pub phi: PolyMat<K>,
    pub psi: PolyMat<K>,
}

impl<K: Scalar> MatrixFactorization<K> {
    pub fn new(
        ring: WPolyRing<K>,
        f: WPoly<K>,
        phi: PolyMat<K>,
        psi: PolyMat<K>,
    ) -> Result<Self> {
        let (pr, pc) = mat_shape(&phi)?;
        let (qr, qc) = mat_shape(&psi)?;
        if pr != pc || qr != qc || pr != qr {
            return Err(Error::Dimension(
                "factors must be square and of equal size".into(),
            ));
        }
        if ring.has_modulus() {
            return Err(Error::Invalid(
                "factorization lives over the ambient ring, without modulus".into(),
            ));
        }
        if f.ring() != &ring
            || phi.iter().flatten().any(|p| p.ring() != &ring)
            || psi.iter().flatten().any(|p| p.ring() != &ring)
        {
            return Err(Error::RingMismatch);
        }
        Ok(MatrixFactorization { ring, f, phi, psi })
    }

    pub fn size(&self) -> usize {
        self.phi.len()
    }

    /// True iff `φψ = ψφ = f·I` holds exactly.
    pub fn verify(&self) -> Result<bool> {
        let n = self.size();
        for prod in [
            mat_mul(&self.phi, &self.psi)?,
            mat_mul(&self.psi, &self.phi)?,
        ] {
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j {
                        self.f.clone()
                    } else {
                        self.ring.zero()
                    };
                    if prod[i][j] != expected {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// True iff no entry of either factor has a nonzero constant term.
    pub fn is_reduced(&self) -> bool {
        let n_vars = self.ring.num_vars();
        let zero_exp = vec![0u32; n_vars];
        self.phi
            .iter()
            .chain(&self.psi)
            .flatten()
            .all(|p| !p.terms().contains_key(&zero_exp))
    }

    /// The transposed pair `(φᵗ, ψᵗ)`, presenting the dual module.
    pub fn dual(&self) -> Self {
        MatrixFactorization {
            ring: self.ring.clone(),
            f: self.f.clone(),
            phi: mat_transpose(&self.phi),
            psi: mat_transpose(&self.psi),
        }
    }

    /// The swapped pair `(ψ, φ)`, presenting the first reduced syzygy.
    pub fn syzygy(&self) -> Self {
        MatrixFactorization {
            ring: self.ring.clone(),
            f: self.f.clone(),
            phi: self.psi.clone(),
            psi: self.phi.clone(),
        }
    }

    /// Knörrer block construction: a factorization of `f + uv` over the
    /// ring extended by fresh variables `u`, `v` with the given weights:
    ///
    /// ```text
    /// φ' = | u·I  −ψ |      ψ' = | v·I   ψ |
    ///      | φ    v·I|           | −φ   u·I|
    /// ```
    pub fn knoerrer(
        &self,
        u_name: &str,
        v_name: &str,
        u_weight: i64,
        v_weight: i64,
    ) -> Result<Self> {
        if self.ring.var_names().iter().any(|n| n == u_name || n == v_name)
            || u_name == v_name
        {
            return Err(Error::Invalid("variable name collision".into()));
        }
        let mut names: Vec<String> = self.ring.var_names().to_vec();
        names.push(u_name.to_string());
        names.push(v_name.to_string());
        let mut weights = self.ring.weights().to_vec();
        weights.push(u_weight);
        weights.push(v_weight);
        let big = WPolyRing::new(names, weights)?;
        let lift = |p: &WPoly<K>| -> WPoly<K> {
            let terms = p
                .terms()
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.push(0);
                    e2.push(0);
                    (e2, c.clone())
                })
                .collect();
            WPoly::from_terms(&big, terms).expect("lifted terms")
        };
        let n = self.size();
        let ui = big.var(big.num_vars() - 2);
        let vi = big.var(big.num_vars() - 1);
        let f2 = lift(&self.f).add(&ui.mul(&vi)?)?;
        let mut phi2 = vec![vec![big.zero(); 2 * n]; 2 * n];
        let mut psi2 = vec![vec![big.zero(); 2 * n]; 2 * n];
        for i in 0..n {
            phi2[i][i] = ui.clone();
            phi2[n + i][n + i] = vi.clone();
            psi2[i][i] = vi.clone();
            psi2[n + i][n + i] = ui.clone();
            for j in 0..n {
                phi2[i][n + j] = lift(&self.psi[i][j]).neg();
                phi2[n + i][j] = lift(&self.phi[i][j]);
                psi2[i][n + j] = lift(&self.psi[i][j]);
                psi2[n + i][j] = lift(&self.phi[i][j]).neg();
            }
        }
        MatrixFactorization::new(big, f2, phi2, psi2)
    }
}

/// A graded presentation `0 ← M ← L₀ ← L₁` of a module over the quotient
/// ring: `d₀` maps the source free module (columns) to the target (rows).
///
/// Degree convention: entry `(i, j)` is homogeneous of degree
/// `deg_source[j] − deg_target[i]` (or zero).
#[derive(Clone, Debug)]
pub struct GradedPresentation<K: Scalar> {
    pub ring: WPolyRing<K>,
    pub d0: PolyMat<K>,
    pub deg_target: Vec<i64>,
    pub deg_source: Vec<i64>,
}

impl<K: Scalar> GradedPresentation<K> {
    pub fn new(
        ring: WPolyRing<K>,
        d0: PolyMat<K>,
        deg_target: Vec<i64>,
        deg_source: Vec<i64>,
    ) -> Result<Self> {
        let (rows, cols) = mat_shape(&d0)?;
        if rows != deg_target.len() || cols != deg_source.len() {
            return Err(Error::Dimension(format!(
                "d0 is {rows}x{cols} but degree vectors have lengths {} and {}",
                deg_target.len(),
                deg_source.len()
            )));
        }
        for (i, row) in d0.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.ring() != &ring {
                    return Err(Error::RingMismatch);
                }
                let expected = deg_source[j]
                    .checked_sub(deg_target[i])
                    .ok_or(Error::Overflow)?;
                if !entry.homogeneity()?.admits(expected) {
                    return Err(Error::DegreePattern(format!(
                        "entry ({i},{j}) must be homogeneous of degree {expected}, got {}",
                        entry.render()
                    )));
                }
            }
        }
        Ok(GradedPresentation {
            ring,
            d0,
            deg_target,
            deg_source,
        })
    }

    pub fn nrows(&self) -> usize {
        self.deg_target.len()
    }

    pub fn ncols(&self) -> usize {
        self.deg_source.len()
    }

    /// A presentation of the free module `A(−d₁) ⊕ … ⊕ A(−dₖ)` (zero map
    /// from an empty source).
    pub fn free(ring: WPolyRing<K>, degrees: Vec<i64>) -> Result<Self> {
        let rows = degrees.len();
        GradedPresentation::new(ring, vec![vec![]; rows], degrees, vec![])
    }

    /// The dual presentation: transpose `d₀` and negate-swap the degree
    /// vectors, so entry `(j, i)` keeps degree `(−τᵢ) − (−σⱼ) = σⱼ − τᵢ`.
    pub fn dual(&self) -> Result<Self> {
        GradedPresentation::new(
            self.ring.clone(),
            mat_transpose(&self.d0),
            self.deg_source.iter().map(|d| -d).collect(),
            self.deg_target.iter().map(|d| -d).collect(),
        )
    }

    /// Substitute zero for the listed variables in `d₀` and the modulus.
    /// The ambient variables and degree vectors are unchanged.
    pub fn restrict(&self, vars_to_zero: &[&str]) -> Result<Self> {
        let mut idxs = Vec::new();
        for name in vars_to_zero {
            idxs.push(
                self.ring
                    .var_index(name)
                    .ok_or_else(|| Error::Invalid(format!("unknown variable {name}")))?,
            );
        }
        let ambient = WPolyRing::new(
            self.ring.var_names().to_vec(),
            self.ring.weights().to_vec(),
        )?;
        let kill = |p: &WPoly<K>, target: &WPolyRing<K>| -> WPoly<K> {
            let terms = p
                .terms()
                .iter()
                .filter(|(e, _)| idxs.iter().all(|&i| e[i] == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            WPoly::from_terms(target, terms).expect("filtered terms")
        };
        let f = self
            .ring
            .modulus()
            .ok_or_else(|| Error::Invalid("restriction requires a modulus".into()))?;
        let f0 = kill(&f, &ambient);
        if f0.is_zero() {
            return Err(Error::Invalid(
                "modulus collapses to zero under restriction".into(),
            ));
        }
        let restricted = ambient.with_modulus(&f0)?;
        let d0 = self
            .d0
            .iter()
            .map(|row| row.iter().map(|p| kill(p, &restricted)).collect())
            .collect();
        GradedPresentation::new(
            restricted,
            d0,
            self.deg_target.clone(),
            self.deg_source.clone(),
        )
    }
}

/// Reconstruct the partner factor `ψ` of a presentation matrix `φ`, solving
/// `φψ = ψφ = f·I` entry by entry with the graded ansatz
/// `deg ψ(j,k) = deg f − deg_source[j] + deg_target[k]`.
///
/// Returns `None` when no partner with those degrees exists (e.g. when `φ`
/// does not present a maximal Cohen-Macaulay module).
pub fn complete_partner<K: Scalar>(
    p: &GradedPresentation<K>,
) -> Result<Option<MatrixFactorization<K>>> {
    use crate::exact::linalg::solve_affine;
    use crate::wpoly::template::{
        equations_for_zero, generic_homogeneous, TPolyMat, UnknownRegistry,
    };

    if p.nrows() != p.ncols() {
        return Err(Error::Dimension("partner requires a square d0".into()));
    }
    let n = p.nrows();
    let ambient = WPolyRing::new(p.ring.var_names().to_vec(), p.ring.weights().to_vec())?;
    let to_ambient = |q: &WPoly<K>| -> WPoly<K> {
        WPoly::from_terms(
            &ambient,
            q.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect(),
        )
        .expect("same variables")
    };
    let f = to_ambient(
        &p.ring
            .modulus()
            .ok_or_else(|| Error::Invalid("partner completion requires a modulus".into()))?,
    );
    let deg_f = match f.homogeneity()? {
        Homogeneity::Degree(d) => d,
        _ => return Err(Error::Invalid("modulus must be homogeneous".into())),
    };
    let phi: PolyMat<K> = p
        .d0
        .iter()
        .map(|row| row.iter().map(to_ambient).collect())
        .collect();

    let mut registry = UnknownRegistry::new();
    let mut psi_t = TPolyMat::zero(&ambient, n, n);
    for j in 0..n {
        for k in 0..n {
            let d = deg_f - p.deg_source[j] + p.deg_target[k];
            *psi_t.entry_mut(j, k) = generic_homogeneous(&ambient, d, &format!("psi{j}{k}"), &mut registry);
        }
    }
    // φψ − f·I = 0 and ψφ − f·I = 0.
    let mut fi = TPolyMat::zero(&ambient, n, n);
    for i in 0..n {
        *fi.entry_mut(i, i) = crate::wpoly::template::TPoly::from_wpoly(&f);
    }
    let lhs1 = psi_t.lmul_concrete(&phi)?.sub(&fi)?;
    let lhs2 = psi_t.rmul_concrete(&phi)?.sub(&fi)?;
    let (a, b) = equations_for_zero(&[&lhs1, &lhs2], registry.len());
    let sol = solve_affine(&a, &b)?;
    let Some(assignment) = sol.particular else {
        return Ok(None);
    };
    let psi = psi_t.eval(&assignment)?;
    let mf = MatrixFactorization::new(ambient, f, phi, psi)?;
    debug_assert!(mf.verify()?);
    Ok(Some(mf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Rational;
    use crate::wpoly::qpoly_from_list;

    /// The one-variable family: f = x^{n+1}, φ = x^i, ψ = x^{n+1-i}.
    fn power_family(n: u32, i: u32) -> MatrixFactorization<Rational> {
        let ring = WPolyRing::<Rational>::new(vec!["x"], vec![1]).unwrap();
        let f = ring.var(0).pow(n + 1);
        let phi = vec![vec![ring.var(0).pow(i)]];
        let psi = vec![vec![ring.var(0).pow(n + 1 - i)]];
        MatrixFactorization::new(ring, f, phi, psi).unwrap()
    }

    #[test]
    fn verify_power_family() {
        for n in 1..6 {
            for i in 1..=n {
                let mf = power_family(n, i);
                assert!(mf.verify().unwrap());
                assert!(mf.is_reduced());
            }
        }
    }

    #[test]
    fn verify_detects_bad_product() {
        let ring = WPolyRing::<Rational>::new(vec!["x", "y"], vec![1, 1]).unwrap();
        let f = qpoly_from_list(&ring, &[("1", &[2, 0]), ("1", &[0, 2])]);
        let mf = MatrixFactorization::new(
            ring.clone(),
            f,
            vec![vec![ring.var(0)]],
            vec![vec![ring.var(0)]],
        )
        .unwrap();
        assert!(!mf.verify().unwrap());
    }

    #[test]
    fn unit_factorization_not_reduced() {
        let ring = WPolyRing::<Rational>::new(vec!["x"], vec![1]).unwrap();
        let f = ring.var(0).pow(2);
        let mf = MatrixFactorization::new(
            ring.clone(),
            f.clone(),
            vec![vec![ring.one()]],
            vec![vec![f]],
        )
        .unwrap();
        assert!(mf.verify().unwrap());
        assert!(!mf.is_reduced());
    }

    #[test]
    fn dual_and_syzygy_involutions() {
        let mf = power_family(4, 2).knoerrer("u", "v", 1, 4).unwrap();
        assert!(mf.verify().unwrap());
        let dd = mf.dual().dual();
        assert_eq!(dd.phi, mf.phi);
        assert_eq!(dd.psi, mf.psi);
        let ss = mf.syzygy().syzygy();
        assert_eq!(ss.phi, mf.phi);
        let s = mf.syzygy();
        assert!(s.verify().unwrap());
        assert!(s.is_reduced());
        assert!(mf.dual().verify().unwrap());
        assert!(mf.dual().is_reduced());
    }

    #[test]
    fn syzygy_of_power_family_swaps_exponents() {
        let mf = power_family(4, 1);
        let s = mf.syzygy();
        assert_eq!(s.phi, mf.psi);
        assert_eq!(s.psi, mf.phi);
    }

    #[test]
    fn knoerrer_verifies_and_iterates() {
        let mf = power_family(3, 2);
        let k1 = mf.knoerrer("u", "v", 1, 3).unwrap();
        assert!(k1.verify().unwrap());
        assert!(k1.is_reduced());
        let k2 = k1.knoerrer("s", "t", 2, 2).unwrap();
        assert_eq!(k2.size(), 4);
        assert!(k2.verify().unwrap());
        assert!(k2.is_reduced());
        // Name collision is rejected.
        assert!(k1.knoerrer("u", "t", 1, 1).is_err());
    }

    #[test]
    fn determinant_product_small_sizes() {
        // 1x1: det(phi)·det(psi) = f.
        let mf = power_family(5, 2);
        let prod = mf.phi[0][0].mul(&mf.psi[0][0]).unwrap();
        assert_eq!(prod, mf.f);
        // 2x2 via the Knörrer lift: det(phi')·det(psi') = (f + uv)^2.
        let k = power_family(2, 1).knoerrer("u", "v", 1, 2).unwrap();
        let det = |m: &PolyMat<Rational>| {
            m[0][0]
                .mul(&m[1][1])
                .unwrap()
                .sub(&m[0][1].mul(&m[1][0]).unwrap())
                .unwrap()
        };
        let lhs = det(&k.phi).mul(&det(&k.psi)).unwrap();
        assert_eq!(lhs, k.f.mul(&k.f).unwrap());
    }

    fn power_presentation(n: u32, i: u32) -> GradedPresentation<Rational> {
        let ambient = WPolyRing::<Rational>::new(vec!["x"], vec![1]).unwrap();
        let f = ambient.var(0).pow(n + 1);
        let ring = ambient.with_modulus(&f).unwrap();
        GradedPresentation::new(
            ring.clone(),
            vec![vec![ring.var(0).pow(i)]],
            vec![0],
            vec![i as i64],
        )
        .unwrap()
    }

    #[test]
    fn presentation_degree_validation() {
        let p = power_presentation(4, 2);
        assert_eq!(p.nrows(), 1);
        // Wrong degree vector is rejected.
        let bad = GradedPresentation::new(
            p.ring.clone(),
            p.d0.clone(),
            vec![0],
            vec![1],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn dual_presentation_valid_and_involutive() {
        let p = power_presentation(4, 2);
        let d = p.dual().unwrap();
        assert_eq!(d.deg_target, vec![-2]);
        assert_eq!(d.deg_source, vec![0]);
        let dd = d.dual().unwrap();
        assert_eq!(dd.deg_target, p.deg_target);
        assert_eq!(dd.deg_source, p.deg_source);
    }

    #[test]
    fn restrict_identity_cases() {
        let p = power_presentation(3, 1);
        let same = p.restrict(&[]).unwrap();
        assert_eq!(same.d0, p.d0);
        assert_eq!(
            same.ring.modulus().unwrap().terms(),
            p.ring.modulus().unwrap().terms()
        );
    }

    #[test]
    fn restrict_knoerrer_recovers_pattern() {
        // Lift the x^4 = x·x^3 curve factorization, then kill u, v.
        let mf = power_family(3, 1);
        let k = mf.knoerrer("u", "v", 2, 2).unwrap();
        let ring = k.ring.with_modulus(&k.f).unwrap();
        let phi = k
            .phi
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        WPoly::from_terms(
                            &ring,
                            p.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect(),
                        )
                        .unwrap()
                    })
                    .collect()
            })
            .collect();
        // deg e = (0, 2), deg f = (2, 3): entries u (2-0=2... u has weight 2),
        // −ψ = −x^3 (3-0=3), φ = x (3-2... no: entry(1,0) deg = deg_source[0]-deg_target[1] = 2-2)
        // Choose vectors consistent with entries: (i,j) degree σ_j − τ_i.
        let p = GradedPresentation::new(ring, phi, vec![0, 1], vec![2, 3]).unwrap();
        let r = p.restrict(&["u", "v"]).unwrap();
        // Off-diagonal blocks survive, diagonal u/v entries vanish.
        assert!(r.d0[0][0].is_zero());
        assert!(r.d0[1][1].is_zero());
        assert!(!r.d0[0][1].is_zero());
        assert!(!r.d0[1][0].is_zero());
        assert_eq!(
            r.ring.modulus().unwrap().render(),
            "x^4"
        );
        // Restricting a presentation not involving the variables at all.
        let q = power_presentation(3, 1);
        let modulus_zero = q.restrict(&["x"]);
        assert!(modulus_zero.is_err());
    }

    #[test]
    fn complete_partner_power_family() {
        let p = power_presentation(4, 2);
        let mf = complete_partner(&p).unwrap().unwrap();
        assert!(mf.verify().unwrap());
        assert_eq!(mf.psi[0][0].render(), "x^3");
    }
}
