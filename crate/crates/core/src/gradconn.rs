//! The graded connection solver.
//!
//! For a graded presentation `0 ← M ← L₀ ← L₁` with `M = coker(d₀)` and a
//! family of homogeneous derivations `g`, decide by exact linear feasibility
//! whether `M` admits a graded `g`-connection, a merely k-linear one, or
//! none, and whether a found connection is integrable.
//!
//! The key encoding: equality in the quotient ring `A = S/(f)` is expressed
//! with fresh homogeneous multiplier unknowns (`… + f·Q`), so every decision
//! reduces to the feasibility of one linear system over the scalar field —
//! no normal forms or term-order reasoning anywhere.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::linalg::solve_affine;
use crate::exact::scalar::Scalar;
use crate::matfac::{GradedPresentation, PolyMat};
use crate::wpoly::template::{
    equations_for_zero, generic_homogeneous, TPoly, TPolyMat, UnknownRegistry,
};
use crate::wpoly::{Derivation, Homogeneity, WPoly, WPolyRing};

/// A family of derivations with its A-linear relations and (optionally) a
/// bracket table: the data of a graded Lie–Rinehart algebra presented by
/// generators.
#[derive(Clone, Debug)]
pub struct LieRinehartSpec<K: Scalar> {
    ring: WPolyRing<K>,
    generators: Vec<Derivation<K>>,
    /// Each relation is one homogeneous coefficient `aᵢ` per generator with
    /// `Σ aᵢ·Dᵢ = 0` as an operator on `A`.
    relations: Vec<Vec<WPoly<K>>>,
    /// `brackets[(s,t)]` (s < t) expresses `[Dₛ, D_t] = Σ b_u·D_u`.
    brackets: Option<BTreeMap<(usize, usize), Vec<WPoly<K>>>>,
}

/// True when `p` vanishes in `A`: identically zero, or in `(f)` when the
/// ring has a modulus.
fn vanishes_in_quotient<K: Scalar>(p: &WPoly<K>) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if p.ring().has_modulus() {
        p.in_modulus_ideal()
    } else {
        Ok(false)
    }
}

impl<K: Scalar> LieRinehartSpec<K> {
    pub fn new(
        generators: Vec<Derivation<K>>,
        relations: Vec<Vec<WPoly<K>>>,
        brackets: Option<BTreeMap<(usize, usize), Vec<WPoly<K>>>>,
    ) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Invalid("at least one generator is required".into()))?;
        let ring = first.ring().clone();
        if generators.iter().any(|d| d.ring() != &ring) {
            return Err(Error::RingMismatch);
        }
        for (r, coeffs) in relations.iter().enumerate() {
            Self::check_combination_vanishes(&ring, &generators, coeffs, None)
                .map_err(|e| Error::Invalid(format!("relation {r}: {e}")))?;
            relation_degree(&generators, coeffs)
                .map_err(|e| Error::Invalid(format!("relation {r}: {e}")))?;
        }
        if let Some(table) = &brackets {
            for (&(s, t), coeffs) in table {
                if s >= t || t >= generators.len() {
                    return Err(Error::Invalid(format!(
                        "bracket pair ({s},{t}) out of order or range"
                    )));
                }
                let lie = generators[s].bracket(&generators[t])?;
                Self::check_combination_vanishes(&ring, &generators, coeffs, Some(&lie))
                    .map_err(|e| Error::Invalid(format!("bracket ({s},{t}): {e}")))?;
            }
        }
        Ok(LieRinehartSpec {
            ring,
            generators,
            relations,
            brackets,
        })
    }

    /// Check `Σ aᵢDᵢ − target = 0` as an operator on `A`: applied to every
    /// variable, the result must vanish modulo the modulus.
    fn check_combination_vanishes(
        ring: &WPolyRing<K>,
        generators: &[Derivation<K>],
        coeffs: &[WPoly<K>],
        target: Option<&Derivation<K>>,
    ) -> Result<()> {
        if coeffs.len() != generators.len() {
            return Err(Error::Dimension(
                "one coefficient per generator is required".into(),
            ));
        }
        for v in 0..ring.num_vars() {
            let mut acc = ring.zero();
            for (a, d) in coeffs.iter().zip(generators) {
                acc = acc.add(&a.mul(&d.images()[v])?)?;
            }
            if let Some(t) = target {
                acc = acc.sub(&t.images()[v])?;
            }
            if !vanishes_in_quotient(&acc)? {
                return Err(Error::Invalid(format!(
                    "combination does not annihilate {}",
                    ring.var_names()[v]
                )));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &WPolyRing<K> {
        &self.ring
    }

    pub fn generators(&self) -> &[Derivation<K>] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<WPoly<K>>] {
        &self.relations
    }

    pub fn brackets(&self) -> Option<&BTreeMap<(usize, usize), Vec<WPoly<K>>>> {
        self.brackets.as_ref()
    }

    /// The same spec restricted to a prefix of the relation list.
    fn with_relations(&self, count: usize) -> Self {
        LieRinehartSpec {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            relations: self.relations[..count].to_vec(),
            brackets: self.brackets.clone(),
        }
    }
}

/// The common degree `deg aᵢ + ωᵢ` of a graded relation.
fn relation_degree<K: Scalar>(
    generators: &[Derivation<K>],
    coeffs: &[WPoly<K>],
) -> Result<i64> {
    let mut rho: Option<i64> = None;
    for (a, d) in coeffs.iter().zip(generators) {
        match a.homogeneity()? {
            Homogeneity::Any => {}
            Homogeneity::Degree(da) => {
                let r = da.checked_add(d.omega()).ok_or(Error::Overflow)?;
                match rho {
                    None => rho = Some(r),
                    Some(prev) if prev == r => {}
                    Some(prev) => {
                        return Err(Error::DegreePattern(format!(
                            "mixed relation degrees {prev} and {r}"
                        )))
                    }
                }
            }
            Homogeneity::Inhomogeneous => {
                return Err(Error::DegreePattern(
                    "relation coefficient is not homogeneous".into(),
                ))
            }
        }
    }
    rho.ok_or_else(|| Error::Invalid("relation with all-zero coefficients".into()))
}

/// Templates for one generator equation `D(d₀) = d₀C − Pd₀ + fQ`.
struct GeneratorTemplates<K: Scalar> {
    p: TPolyMat<K>,
    c: TPolyMat<K>,
    /// The residual `D(d₀) − d₀C + Pd₀ − fQ`, which must vanish.
    residual: TPolyMat<K>,
}

/// Template matrix with entry `(i,j)` the generic homogeneous polynomial of
/// degree `right[j] − left[i] + shift`.
fn degree_pattern_template<K: Scalar>(
    ring: &WPolyRing<K>,
    left: &[i64],
    right: &[i64],
    shift: i64,
    tag: &str,
    registry: &mut UnknownRegistry,
) -> Result<TPolyMat<K>> {
    let mut out = TPolyMat::zero(ring, left.len(), right.len());
    for i in 0..left.len() {
        for j in 0..right.len() {
            let d = right[j]
                .checked_sub(left[i])
                .and_then(|x| x.checked_add(shift))
                .ok_or(Error::Overflow)?;
            *out.entry_mut(i, j) =
                generic_homogeneous(ring, d, &format!("{tag}[{i},{j}]"), registry);
        }
    }
    Ok(out)
}

fn build_generator_templates<K: Scalar>(
    p: &GradedPresentation<K>,
    d: &Derivation<K>,
    registry: &mut UnknownRegistry,
    tag: &str,
) -> Result<GeneratorTemplates<K>> {
    if d.ring() != &p.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &p.ring;
    let omega = d.omega();
    let pt = degree_pattern_template(
        ring,
        &p.deg_target,
        &p.deg_target,
        omega,
        &format!("P{tag}"),
        registry,
    )?;
    let ct = degree_pattern_template(
        ring,
        &p.deg_source,
        &p.deg_source,
        omega,
        &format!("C{tag}"),
        registry,
    )?;
    let residual = generator_residual(p, d, &pt, &ct, registry, tag)?;
    Ok(GeneratorTemplates {
        p: pt,
        c: ct,
        residual,
    })
}

/// The residual `D(d₀) − d₀C + Pd₀ − fQ` with a fresh multiplier `Q`.
fn generator_residual<K: Scalar>(
    p: &GradedPresentation<K>,
    d: &Derivation<K>,
    pt: &TPolyMat<K>,
    ct: &TPolyMat<K>,
    registry: &mut UnknownRegistry,
    tag: &str,
) -> Result<TPolyMat<K>> {
    let ring = &p.ring;
    let omega = d.omega();
    let mut residual = TPolyMat::zero(ring, p.nrows(), p.ncols());
    for i in 0..p.nrows() {
        for j in 0..p.ncols() {
            *residual.entry_mut(i, j) = TPoly::from_wpoly(&d.apply(&p.d0[i][j])?);
        }
    }
    residual = residual
        .sub(&ct.lmul_concrete(&p.d0)?)?
        .add(&pt.rmul_concrete(&p.d0)?)?;
    if let Some(f) = ring.modulus() {
        let deg_f = ring.modulus_degree().expect("homogeneous modulus");
        let qt = degree_pattern_template(
            ring,
            &p.deg_target,
            &p.deg_source,
            omega - deg_f,
            &format!("Q{tag}"),
            registry,
        )?;
        residual = residual.sub(&qt.scale_wpoly(&f)?)?;
    }
    Ok(residual)
}

/// Solution data for a single generator equation.
#[derive(Clone, Debug)]
pub struct GeneratorSolution<K: Scalar> {
    pub generator: usize,
    pub feasible: bool,
    /// The operator `P` on `L₀` (canonical particular solution).
    pub p_value: Option<PolyMat<K>>,
    /// The operator `C` on `L₁`.
    pub c_value: Option<PolyMat<K>>,
    /// Dimension of the solution family (including multiplier slack).
    pub nullspace_dim: usize,
}

/// Solve `D(d₀) = d₀C − Pd₀ + fQ` for one generator.
pub fn solve_generator<K: Scalar>(
    p: &GradedPresentation<K>,
    d: &Derivation<K>,
    generator_index: usize,
) -> Result<GeneratorSolution<K>> {
    let mut registry = UnknownRegistry::new();
    let t = build_generator_templates(p, d, &mut registry, "")?;
    let (a, b) = equations_for_zero(&[&t.residual], registry.len());
    let sol = solve_affine(&a, &b)?;
    let (p_value, c_value) = match &sol.particular {
        Some(x) => (Some(t.p.eval(x)?), Some(t.c.eval(x)?)),
        None => (None, None),
    };
    Ok(GeneratorSolution {
        generator: generator_index,
        feasible: sol.feasible,
        p_value,
        c_value,
        nullspace_dim: sol.nullspace_basis.len(),
    })
}

/// Is the generator equation solvable with `P` pinned to an exact value?
///
/// `p_fixed` must respect the degree pattern: entry `(i,j)` homogeneous of
/// degree `deg_target[j] − deg_target[i] + ω` (zero entries exempt).
pub fn fix_p_check<K: Scalar>(
    p: &GradedPresentation<K>,
    d: &Derivation<K>,
    p_fixed: &PolyMat<K>,
) -> Result<bool> {
    let n = p.nrows();
    if p_fixed.len() != n || p_fixed.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("P must be square on L0".into()));
    }
    for (i, row) in p_fixed.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = p.deg_target[j] - p.deg_target[i] + d.omega();
            if !entry.homogeneity()?.admits(expected) {
                return Err(Error::DegreePattern(format!(
                    "P({i},{j}) must be homogeneous of degree {expected}"
                )));
            }
        }
    }
    let ring = &p.ring;
    let mut registry = UnknownRegistry::new();
    let ct = degree_pattern_template(
        ring,
        &p.deg_source,
        &p.deg_source,
        d.omega(),
        "C",
        &mut registry,
    )?;
    // Residual with the concrete P: D(d0) − d0C + P·d0 − fQ.
    let mut fixed_part = TPolyMat::zero(ring, p.nrows(), p.ncols());
    for i in 0..p.nrows() {
        for j in 0..p.ncols() {
            let mut acc = d.apply(&p.d0[i][j])?;
            for k in 0..n {
                acc = acc.add(&p_fixed[i][k].mul(&p.d0[k][j])?)?;
            }
            *fixed_part.entry_mut(i, j) = TPoly::from_wpoly(&acc);
        }
    }
    let mut residual = fixed_part.sub(&ct.lmul_concrete(&p.d0)?)?;
    if let Some(f) = ring.modulus() {
        let deg_f = ring.modulus_degree().expect("homogeneous modulus");
        let qt = degree_pattern_template(
            ring,
            &p.deg_target,
            &p.deg_source,
            d.omega() - deg_f,
            "Q",
            &mut registry,
        )?;
        residual = residual.sub(&qt.scale_wpoly(&f)?)?;
    }
    let (a, b) = equations_for_zero(&[&residual], registry.len());
    Ok(solve_affine(&a, &b)?.feasible)
}

/// Does the homogeneous matrix `q_end` on `L₀` induce the zero endomorphism
/// of `M = coker(d₀)`? Decided as membership: `q_end = d₀H + fQ′` for some
/// homogeneous `H`, `Q′`.
pub fn zero_in_end<K: Scalar>(
    p: &GradedPresentation<K>,
    q_end: &PolyMat<K>,
    degree: i64,
) -> Result<bool> {
    let n = p.nrows();
    if q_end.len() != n || q_end.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("endomorphism matrix must act on L0".into()));
    }
    for (i, row) in q_end.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = p.deg_target[j] - p.deg_target[i] + degree;
            if !entry.homogeneity()?.admits(expected) {
                return Err(Error::DegreePattern(format!(
                    "entry ({i},{j}) must be homogeneous of degree {expected}"
                )));
            }
        }
    }
    let mut registry = UnknownRegistry::new();
    let residual = endo_membership_residual(p, q_end, degree, &mut registry, "")?;
    let (a, b) = equations_for_zero(&[&residual], registry.len());
    Ok(solve_affine(&a, &b)?.feasible)
}

/// Residual `concrete − d₀H − fQ′` with fresh `H`, `Q′` templates; the
/// concrete part is given as a template matrix of constants.
fn endo_membership_residual<K: Scalar>(
    p: &GradedPresentation<K>,
    q_end: &PolyMat<K>,
    degree: i64,
    registry: &mut UnknownRegistry,
    tag: &str,
) -> Result<TPolyMat<K>> {
    let ring = &p.ring;
    let mut concrete = TPolyMat::zero(ring, p.nrows(), p.nrows());
    for i in 0..p.nrows() {
        for j in 0..p.nrows() {
            *concrete.entry_mut(i, j) = TPoly::from_wpoly(&q_end[i][j]);
        }
    }
    template_membership_residual(p, &concrete, degree, registry, tag)
}

/// Residual `mat − d₀H − fQ′` for a template matrix on `L₀` of the given
/// degree shift.
fn template_membership_residual<K: Scalar>(
    p: &GradedPresentation<K>,
    mat: &TPolyMat<K>,
    degree: i64,
    registry: &mut UnknownRegistry,
    tag: &str,
) -> Result<TPolyMat<K>> {
    let ring = &p.ring;
    let ht = degree_pattern_template(
        ring,
        &p.deg_source,
        &p.deg_target,
        degree,
        &format!("H{tag}"),
        registry,
    )?;
    let mut residual = mat.sub(&ht.lmul_concrete(&p.d0)?)?;
    if let Some(f) = ring.modulus() {
        let deg_f = ring.modulus_degree().expect("homogeneous modulus");
        let qt = degree_pattern_template(
            ring,
            &p.deg_target,
            &p.deg_target,
            degree - deg_f,
            &format!("Q'{tag}"),
            registry,
        )?;
        residual = residual.sub(&qt.scale_wpoly(&f)?)?;
    }
    Ok(residual)
}

/// Outcome kind of the connection decision.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictKind {
    /// The joint system (generators + relations) is feasible.
    Connection,
    /// Every generator equation is solvable alone, but the joint system is
    /// not: only a k-linear connection exists.
    KlinearOnly,
    /// Some generator equation is already infeasible.
    None,
}

/// The full decision, with certificates or an obstruction witness.
#[derive(Clone, Debug)]
pub struct ConnectionVerdict<K: Scalar> {
    pub kind: VerdictKind,
    /// Per-generator `(P, C)` values when a connection was found.
    pub certificates: Option<Vec<(PolyMat<K>, PolyMat<K>)>>,
    /// Name of the first infeasible subsystem when no connection exists.
    pub obstruction_witness: Option<String>,
    /// A positive verdict assumes the supplied relation list generates all
    /// A-linear relations among the generators; negative verdicts are
    /// unconditional.
    pub caveat_relation_completeness: bool,
}

/// Decide existence of a graded `g`-connection on `coker(d₀)`.
///
/// Builds one joint linear system: every generator equation
/// `Dₛ(d₀) = d₀Cₛ − Pₛd₀ + fQₛ`, plus for each relation `Σ aᵢDᵢ = 0` the
/// compatibility condition `Σ aᵢPᵢ = 0` in `End_A(M)`, encoded as
/// `Σ aᵢPᵢ = d₀H + fQ′` with fresh `H`, `Q′`.
pub fn exists_connection<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
) -> Result<ConnectionVerdict<K>> {
    if g.ring() != &p.ring {
        return Err(Error::RingMismatch);
    }
    let mut registry = UnknownRegistry::new();
    let mut templates = Vec::with_capacity(g.generators.len());
    for (s, d) in g.generators.iter().enumerate() {
        templates.push(build_generator_templates(p, d, &mut registry, &s.to_string())?);
    }
    let mut residuals: Vec<TPolyMat<K>> =
        templates.iter().map(|t| t.residual.clone()).collect();
    for (r, coeffs) in g.relations.iter().enumerate() {
        residuals.push(relation_residual(p, g, &templates, coeffs, &mut registry, r)?);
    }
    let refs: Vec<&TPolyMat<K>> = residuals.iter().collect();
    let (a, b) = equations_for_zero(&refs, registry.len());
    let sol = solve_affine(&a, &b)?;
    if sol.feasible {
        let x = sol.particular.expect("feasible system");
        let mut certificates = Vec::with_capacity(templates.len());
        for t in &templates {
            certificates.push((t.p.eval(&x)?, t.c.eval(&x)?));
        }
        return Ok(ConnectionVerdict {
            kind: VerdictKind::Connection,
            certificates: Some(certificates),
            obstruction_witness: None,
            caveat_relation_completeness: true,
        });
    }
    // Infeasible: classify and locate the first failing subsystem.
    for (s, d) in g.generators.iter().enumerate() {
        if !solve_generator(p, d, s)?.feasible {
            return Ok(ConnectionVerdict {
                kind: VerdictKind::None,
                certificates: None,
                obstruction_witness: Some(format!("generator {s}")),
                caveat_relation_completeness: false,
            });
        }
    }
    let mut witness = format!("relation {}", g.relations.len().saturating_sub(1));
    for count in 1..=g.relations.len() {
        let partial = g.with_relations(count);
        let verdict = joint_feasible(p, &partial)?;
        if !verdict {
            witness = format!("relation {}", count - 1);
            break;
        }
    }
    Ok(ConnectionVerdict {
        kind: VerdictKind::KlinearOnly,
        certificates: None,
        obstruction_witness: Some(witness),
        caveat_relation_completeness: false,
    })
}

/// Residual of one relation constraint `Σ aᵢPᵢ − d₀H − fQ′`.
fn relation_residual<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
    templates: &[GeneratorTemplates<K>],
    coeffs: &[WPoly<K>],
    registry: &mut UnknownRegistry,
    index: usize,
) -> Result<TPolyMat<K>> {
    let rho = relation_degree(&g.generators, coeffs)?;
    let mut acc = TPolyMat::zero(&p.ring, p.nrows(), p.nrows());
    for (a, t) in coeffs.iter().zip(templates) {
        if a.is_zero() {
            continue;
        }
        acc = acc.add(&t.p.scale_wpoly(a)?)?;
    }
    template_membership_residual(p, &acc, rho, registry, &format!("r{index}"))
}

/// Feasibility of the joint system alone (no certificates).
fn joint_feasible<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
) -> Result<bool> {
    let mut registry = UnknownRegistry::new();
    let mut templates = Vec::with_capacity(g.generators.len());
    for (s, d) in g.generators.iter().enumerate() {
        templates.push(build_generator_templates(p, d, &mut registry, &s.to_string())?);
    }
    let mut residuals: Vec<TPolyMat<K>> =
        templates.iter().map(|t| t.residual.clone()).collect();
    for (r, coeffs) in g.relations.iter().enumerate() {
        residuals.push(relation_residual(p, g, &templates, coeffs, &mut registry, r)?);
    }
    let refs: Vec<&TPolyMat<K>> = residuals.iter().collect();
    let (a, b) = equations_for_zero(&refs, registry.len());
    Ok(solve_affine(&a, &b)?.feasible)
}

/// True iff every generator equation is solvable on its own, i.e. `M`
/// admits a k-linear `g`-connection.
pub fn exists_klinear<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
) -> Result<bool> {
    for (s, d) in g.generators.iter().enumerate() {
        if !solve_generator(p, d, s)?.feasible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integrability report for a connection certificate.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    /// Per generator pair `(s, t)`: does the curvature vanish in `End(M)`?
    pub pairs: Vec<(usize, usize, bool)>,
    pub integrable: bool,
}

/// Check integrability of the connection given by per-generator `P`
/// matrices: for each pair, the curvature
/// `K = Dₛ(P_t) − D_t(Pₛ) + [Pₛ, P_t] − Σ b_u P_u`
/// (with `[Dₛ,D_t] = Σ b_u D_u` from the bracket table) must vanish in
/// `End_A(M)`.
pub fn curvature<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
    p_values: &[PolyMat<K>],
) -> Result<CurvatureReport> {
    let table = g
        .brackets()
        .ok_or_else(|| Error::Invalid("bracket table is required".into()))?;
    if p_values.len() != g.generators.len() {
        return Err(Error::Dimension(
            "one P matrix per generator is required".into(),
        ));
    }
    let n = p.nrows();
    let ring = &p.ring;
    let mut pairs = Vec::new();
    let mut integrable = true;
    for s in 0..g.generators.len() {
        for t in (s + 1)..g.generators.len() {
            let b_coeffs = table.get(&(s, t)).ok_or_else(|| {
                Error::Invalid(format!("bracket table misses the pair ({s},{t})"))
            })?;
            let ds = &g.generators[s];
            let dt = &g.generators[t];
            let mut k_mat = vec![vec![ring.zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = ds.apply(&p_values[t][i][j])?;
                    acc = acc.sub(&dt.apply(&p_values[s][i][j])?)?;
                    for l in 0..n {
                        acc = acc.add(&p_values[s][i][l].mul(&p_values[t][l][j])?)?;
                        acc = acc.sub(&p_values[t][i][l].mul(&p_values[s][l][j])?)?;
                    }
                    for (b, pu) in b_coeffs.iter().zip(p_values) {
                        if !b.is_zero() {
                            acc = acc.sub(&b.mul(&pu[i][j])?)?;
                        }
                    }
                    k_mat[i][j] = acc;
                }
            }
            let degree = ds
                .omega()
                .checked_add(dt.omega())
                .ok_or(Error::Overflow)?;
            let ok = zero_in_end(p, &k_mat, degree)?;
            integrable &= ok;
            pairs.push((s, t, ok));
        }
    }
    Ok(CurvatureReport { pairs, integrable })
}
