//! Shared helpers for the integration and acceptance suites.
#![allow(dead_code)]

use mcmconn::catalog::{threefold_lie, AdeClass, CatalogFixture, LieVariant};
use mcmconn::exact::Scalar;
use mcmconn::gradconn::{exists_connection, exists_klinear, LieRinehartSpec, VerdictKind};
use mcmconn::matfac::{GradedPresentation, MatrixFactorization, PolyMat};
use mcmconn::wpoly::{Derivation, WPoly, WPolyRing};
use mcmconn::Qi;
use num_traits::One;

/// Decide one catalog fixture the way the driver does: standard generators
/// first, exceptional (type D) generators when the standard family does not
/// already rule a connection out.
pub fn decide_fixture(fix: &CatalogFixture<Qi>) -> (VerdictKind, LieVariant, bool) {
    let standard = threefold_lie::<Qi>(fix.class, fix.n, LieVariant::Standard).unwrap();
    let v = exists_connection(&fix.presentation, &standard).unwrap();
    let (kind, variant, spec) = if fix.class == AdeClass::D && v.kind == VerdictKind::Connection {
        let exceptional = threefold_lie::<Qi>(fix.class, fix.n, LieVariant::Exceptional).unwrap();
        let v2 = exists_connection(&fix.presentation, &exceptional).unwrap();
        (v2.kind, LieVariant::Exceptional, exceptional)
    } else {
        (v.kind, LieVariant::Standard, standard)
    };
    let klinear = exists_klinear(&fix.presentation, &spec).unwrap();
    (kind, variant, klinear)
}

/// Block-diagonal direct sum of two presentations over the same ring.
pub fn direct_sum<K: Scalar>(
    a: &GradedPresentation<K>,
    b: &GradedPresentation<K>,
) -> GradedPresentation<K> {
    assert_eq!(a.ring, b.ring, "summands must share the ring");
    let zero = a.ring.zero();
    let mut d0: PolyMat<K> = Vec::new();
    for row in &a.d0 {
        let mut r = row.clone();
        r.extend(vec![zero.clone(); b.ncols()]);
        d0.push(r);
    }
    for row in &b.d0 {
        let mut r = vec![zero.clone(); a.ncols()];
        r.extend(row.clone());
        d0.push(r);
    }
    let mut deg_target = a.deg_target.clone();
    deg_target.extend(b.deg_target.iter().copied());
    let mut deg_source = a.deg_source.clone();
    deg_source.extend(b.deg_source.iter().copied());
    GradedPresentation::new(a.ring.clone(), d0, deg_target, deg_source).unwrap()
}

/// The zero-dimensional control: `A = k[x]/(x^{n+1})`, module
/// `coker(x^i)`, Lie data generated by the Euler derivation `x·d/dx`.
pub fn dimension_zero_problem(
    n: u32,
    i: u32,
) -> (GradedPresentation<Qi>, LieRinehartSpec<Qi>) {
    assert!(i >= 1 && i <= n);
    let ambient = WPolyRing::<Qi>::new(vec!["x"], vec![1]).unwrap();
    let f = ambient.monomial(vec![n + 1], Qi::one());
    let ring = ambient.with_modulus(&f).unwrap();
    let xi = ring.monomial(vec![i], Qi::one());
    let p = GradedPresentation::new(ring.clone(), vec![vec![xi]], vec![0], vec![i as i64])
        .unwrap();
    let euler = Derivation::new(&ring, vec![ring.var(0)], 0).unwrap();
    let g = LieRinehartSpec::new(vec![euler], vec![], Some(Default::default())).unwrap();
    (p, g)
}

/// A reduced 2x2 factorization of the A_n curve equation
/// `x^2 + y^{n+1}` over `k[x, y]` with weights `(n+1, 2)`.
pub fn an_curve_mf(n: u32, l: u32) -> MatrixFactorization<Qi> {
    assert!(l >= 1 && l <= n);
    let r = WPolyRing::<Qi>::new(vec!["x", "y"], vec![(n as i64) + 1, 2]).unwrap();
    let x = r.var(0);
    let y = r.var(1);
    let m1 = Qi::from_int(-1);
    let f = x.mul(&x).unwrap().add(&y.pow(n + 1)).unwrap();
    let phi = vec![
        vec![x.clone(), y.pow(l)],
        vec![y.pow(n + 1 - l).scale(&m1), x.clone()],
    ];
    let psi = vec![
        vec![x.clone(), y.pow(l).scale(&m1)],
        vec![y.pow(n + 1 - l), x.clone()],
    ];
    MatrixFactorization::new(r, f, phi, psi).unwrap()
}

/// A 1x1 factorization `x^l · x^{n+1-l}` of the dimension-zero A_n
/// equation `x^{n+1}` over `k[x]`.
pub fn point_mf(n: u32, l: u32) -> MatrixFactorization<Qi> {
    assert!(l >= 1 && l <= n);
    let r = WPolyRing::<Qi>::new(vec!["x"], vec![1]).unwrap();
    let x = r.var(0);
    MatrixFactorization::new(
        r,
        x.pow(n + 1),
        vec![vec![x.pow(l)]],
        vec![vec![x.pow(n + 1 - l)]],
    )
    .unwrap()
}

/// Canonical JSON for a factorization, for byte-level comparisons.
pub fn mf_bytes<K: Scalar>(mf: &MatrixFactorization<K>) -> String {
    serde_json::to_string(&mcmconn::io::mf_to_io(mf)).unwrap()
}

/// Canonical JSON rendering of a polynomial matrix.
pub fn mat_bytes<K: Scalar>(m: &[Vec<WPoly<K>>]) -> String {
    serde_json::to_string(&mcmconn::io::mat_to_io(&m.to_vec())).unwrap()
}
