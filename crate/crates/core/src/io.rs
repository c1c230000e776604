//! JSON serialization of rings, polynomials, presentations, derivations,
//! Lie–Rinehart data, and matrix factorizations.
//!
//! The format is the one consumed and produced by the command-line driver:
//!
//! * a polynomial is an array of terms `[coefficient-string, exponents]`,
//!   listed in ascending lexicographic order of the exponent vectors;
//! * a coefficient string is `"p"`, `"p/q"`, or (over the Gaussian
//!   rationals) the extended form `"a+bi/q"` — see the README for the EBNF;
//! * a ring is `{"vars": [..], "weights": [..], "modulus"?: poly}`;
//! * a presentation is `{"ring", "matrix", "deg_target", "deg_source"}`;
//! * a derivation is `{"images": [poly per variable], "degree": ω}`;
//! * Lie–Rinehart data is `{"generators", "relations", "brackets"?}`;
//! * a matrix factorization is `{"ring", "phi", "psi"}` where the ring's
//!   `modulus` carries the factored polynomial `f`.
//!
//! Serialization is canonical: `from_*` followed by `to_*` reproduces the
//! value byte-for-byte (coefficients re-render in canonical form, term
//! order is fixed by the internal ordered maps). All parse errors carry the
//! offending field path.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::scalar::Scalar;
use crate::gradconn::LieRinehartSpec;
use crate::matfac::{GradedPresentation, MatrixFactorization, PolyMat};
use crate::wpoly::{Derivation, WPoly, WPolyRing};

/// One term: coefficient string plus exponent vector.
pub type TermIo = (String, Vec<u32>);
/// A polynomial as a list of terms in ascending lexicographic order.
pub type PolyIo = Vec<TermIo>;

/// Wire form of a weighted polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingIo {
    pub vars: Vec<String>,
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<PolyIo>,
}

/// Wire form of a graded presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationIo {
    pub ring: RingIo,
    pub matrix: Vec<Vec<PolyIo>>,
    pub deg_target: Vec<i64>,
    pub deg_source: Vec<i64>,
}

/// Wire form of a derivation: one image polynomial per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationIo {
    pub images: Vec<PolyIo>,
    pub degree: i64,
}

/// One bracket table entry: `[D_s, D_t] = Σ coeffs[u] · D_u` with `s < t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketIo {
    pub s: usize,
    pub t: usize,
    pub coeffs: Vec<PolyIo>,
}

/// Wire form of Lie–Rinehart generator/relation/bracket data. The ring is
/// not repeated here; it is taken from the enclosing problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieIo {
    pub generators: Vec<DerivationIo>,
    pub relations: Vec<Vec<PolyIo>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<BracketIo>>,
}

/// Wire form of a connection problem: a presentation plus Lie–Rinehart
/// data over the presentation's ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnProblemIo {
    pub presentation: PresentationIo,
    pub lie: LieIo,
}

/// Wire form of a matrix factorization; the ring's `modulus` is the
/// factored polynomial `f`, while `phi`/`psi` live over the ambient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfIo {
    pub ring: RingIo,
    pub phi: Vec<Vec<PolyIo>>,
    pub psi: Vec<Vec<PolyIo>>,
}

fn at(path: &str, e: Error) -> Error {
    Error::Parse(format!("{path}: {e}"))
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Serialize a polynomial (terms in ascending lexicographic order).
pub fn poly_to_io<K: Scalar>(p: &WPoly<K>) -> PolyIo {
    p.terms()
        .iter()
        .map(|(e, c)| (c.render_coeff(), e.clone()))
        .collect()
}

/// Parse a polynomial over `ring`; `path` names the field in diagnostics.
pub fn poly_from_io<K: Scalar>(ring: &WPolyRing<K>, io: &PolyIo, path: &str) -> Result<WPoly<K>> {
    let mut terms = Vec::with_capacity(io.len());
    for (idx, (coeff, exps)) in io.iter().enumerate() {
        let c = K::parse_coeff(coeff).map_err(|e| at(&format!("{path}[{idx}]"), e))?;
        if exps.len() != ring.num_vars() {
            return Err(Error::Parse(format!(
                "{path}[{idx}]: exponent vector has length {} but the ring has {} variables",
                exps.len(),
                ring.num_vars()
            )));
        }
        terms.push((exps.clone(), c));
    }
    WPoly::from_terms(ring, terms).map_err(|e| at(path, e))
}

/// Serialize a matrix of polynomials row by row.
pub fn mat_to_io<K: Scalar>(m: &PolyMat<K>) -> Vec<Vec<PolyIo>> {
    m.iter().map(|row| row.iter().map(poly_to_io).collect()).collect()
}

/// Parse a matrix of polynomials over `ring`.
pub fn mat_from_io<K: Scalar>(
    ring: &WPolyRing<K>,
    io: &[Vec<PolyIo>],
    path: &str,
) -> Result<PolyMat<K>> {
    io.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, p)| poly_from_io(ring, p, &format!("{path}[{i}][{j}]")))
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

/// Serialize a ring, including its modulus when present.
pub fn ring_to_io<K: Scalar>(ring: &WPolyRing<K>) -> RingIo {
    RingIo {
        vars: ring.var_names().to_vec(),
        weights: ring.weights().to_vec(),
        modulus: ring.modulus().as_ref().map(poly_to_io),
    }
}

/// Build a ring from its wire form.
pub fn ring_from_io<K: Scalar>(io: &RingIo, path: &str) -> Result<WPolyRing<K>> {
    if io.vars.len() != io.weights.len() {
        return Err(Error::Parse(format!(
            "{path}: {} variables but {} weights",
            io.vars.len(),
            io.weights.len()
        )));
    }
    for (i, w) in io.weights.iter().enumerate() {
        if *w <= 0 {
            return Err(Error::Parse(format!(
                "{path}.weights[{i}]: weight must be positive, got {w}"
            )));
        }
    }
    let ambient = WPolyRing::new(io.vars.clone(), io.weights.clone()).map_err(|e| at(path, e))?;
    match &io.modulus {
        None => Ok(ambient),
        Some(f) => {
            let f = poly_from_io(&ambient, f, &format!("{path}.modulus"))?;
            ambient
                .with_modulus(&f)
                .map_err(|e| at(&format!("{path}.modulus"), e))
        }
    }
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

/// Serialize a graded presentation.
pub fn presentation_to_io<K: Scalar>(p: &GradedPresentation<K>) -> PresentationIo {
    PresentationIo {
        ring: ring_to_io(&p.ring),
        matrix: mat_to_io(&p.d0),
        deg_target: p.deg_target.clone(),
        deg_source: p.deg_source.clone(),
    }
}

/// Build a graded presentation from its wire form (re-validating the
/// homogeneity pattern).
pub fn presentation_from_io<K: Scalar>(
    io: &PresentationIo,
    path: &str,
) -> Result<GradedPresentation<K>> {
    let ring = ring_from_io(&io.ring, &format!("{path}.ring"))?;
    let d0 = mat_from_io(&ring, &io.matrix, &format!("{path}.matrix"))?;
    GradedPresentation::new(ring, d0, io.deg_target.clone(), io.deg_source.clone())
        .map_err(|e| at(path, e))
}

// ---------------------------------------------------------------------------
// Derivations and Lie–Rinehart data
// ---------------------------------------------------------------------------

/// Serialize a derivation.
pub fn derivation_to_io<K: Scalar>(d: &Derivation<K>) -> DerivationIo {
    DerivationIo {
        images: d.images().iter().map(poly_to_io).collect(),
        degree: d.omega(),
    }
}

/// Build a derivation over `ring` from its wire form.
pub fn derivation_from_io<K: Scalar>(
    ring: &WPolyRing<K>,
    io: &DerivationIo,
    path: &str,
) -> Result<Derivation<K>> {
    if io.images.len() != ring.num_vars() {
        return Err(Error::Parse(format!(
            "{path}.images: {} images but the ring has {} variables",
            io.images.len(),
            ring.num_vars()
        )));
    }
    let images = io
        .images
        .iter()
        .enumerate()
        .map(|(i, p)| poly_from_io(ring, p, &format!("{path}.images[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Derivation::new(ring, images, io.degree).map_err(|e| at(path, e))
}

/// Serialize Lie–Rinehart data (the ring is carried by the enclosing
/// problem).
pub fn lie_to_io<K: Scalar>(g: &LieRinehartSpec<K>) -> LieIo {
    LieIo {
        generators: g.generators().iter().map(derivation_to_io).collect(),
        relations: g
            .relations()
            .iter()
            .map(|rel| rel.iter().map(poly_to_io).collect())
            .collect(),
        brackets: g.brackets().map(|table| {
            table
                .iter()
                .map(|(&(s, t), coeffs)| BracketIo {
                    s,
                    t,
                    coeffs: coeffs.iter().map(poly_to_io).collect(),
                })
                .collect()
        }),
    }
}

/// Build Lie–Rinehart data over `ring` from its wire form (re-validating
/// relations and the bracket table).
pub fn lie_from_io<K: Scalar>(
    ring: &WPolyRing<K>,
    io: &LieIo,
    path: &str,
) -> Result<LieRinehartSpec<K>> {
    let generators = io
        .generators
        .iter()
        .enumerate()
        .map(|(i, d)| derivation_from_io(ring, d, &format!("{path}.generators[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let relations = io
        .relations
        .iter()
        .enumerate()
        .map(|(i, rel)| {
            rel.iter()
                .enumerate()
                .map(|(j, p)| poly_from_io(ring, p, &format!("{path}.relations[{i}][{j}]")))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    let brackets = match &io.brackets {
        None => None,
        Some(entries) => {
            let mut table = BTreeMap::new();
            for (i, e) in entries.iter().enumerate() {
                let epath = format!("{path}.brackets[{i}]");
                if e.s >= e.t {
                    return Err(Error::Parse(format!(
                        "{epath}: bracket pairs must satisfy s < t, got ({}, {})",
                        e.s, e.t
                    )));
                }
                let coeffs = e
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, p)| poly_from_io(ring, p, &format!("{epath}.coeffs[{j}]")))
                    .collect::<Result<Vec<_>>>()?;
                if table.insert((e.s, e.t), coeffs).is_some() {
                    return Err(Error::Parse(format!(
                        "{epath}: duplicate bracket pair ({}, {})",
                        e.s, e.t
                    )));
                }
            }
            Some(table)
        }
    };
    LieRinehartSpec::new(generators, relations, brackets).map_err(|e| at(path, e))
}

// ---------------------------------------------------------------------------
// Connection problems and matrix factorizations
// ---------------------------------------------------------------------------

/// Serialize a connection problem (presentation plus Lie–Rinehart data over
/// the same ring).
pub fn conn_problem_to_io<K: Scalar>(
    p: &GradedPresentation<K>,
    g: &LieRinehartSpec<K>,
) -> ConnProblemIo {
    ConnProblemIo {
        presentation: presentation_to_io(p),
        lie: lie_to_io(g),
    }
}

/// Build a connection problem; the Lie–Rinehart data is interpreted over
/// the presentation's ring.
pub fn conn_problem_from_io<K: Scalar>(
    io: &ConnProblemIo,
) -> Result<(GradedPresentation<K>, LieRinehartSpec<K>)> {
    let p = presentation_from_io(&io.presentation, "presentation")?;
    let g = lie_from_io(&p.ring, &io.lie, "lie")?;
    Ok((p, g))
}

/// Serialize a matrix factorization; `f` travels as the ring's modulus.
pub fn mf_to_io<K: Scalar>(mf: &MatrixFactorization<K>) -> MfIo {
    MfIo {
        ring: RingIo {
            vars: mf.ring.var_names().to_vec(),
            weights: mf.ring.weights().to_vec(),
            modulus: Some(poly_to_io(&mf.f)),
        },
        phi: mat_to_io(&mf.phi),
        psi: mat_to_io(&mf.psi),
    }
}

/// Build a matrix factorization from its wire form. The ring's `modulus`
/// field is required (it is the factored polynomial); the factors live over
/// the ambient ring.
pub fn mf_from_io<K: Scalar>(io: &MfIo) -> Result<MatrixFactorization<K>> {
    let ambient = ring_from_io::<K>(
        &RingIo {
            vars: io.ring.vars.clone(),
            weights: io.ring.weights.clone(),
            modulus: None,
        },
        "ring",
    )?;
    let f_io = io
        .ring
        .modulus
        .as_ref()
        .ok_or_else(|| Error::Parse("ring.modulus: required for a matrix factorization".into()))?;
    let f = poly_from_io(&ambient, f_io, "ring.modulus")?;
    let phi = mat_from_io(&ambient, &io.phi, "phi")?;
    let psi = mat_from_io(&ambient, &io.psi, "psi")?;
    MatrixFactorization::new(ambient, f, phi, psi).map_err(|e| at("factorization", e))
}
