//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them).

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mcmconn::catalog::{threefold_lie, threefold_modules, AdeClass, LieVariant};
use mcmconn::gradconn::{
    exists_connection, exists_klinear, fix_p_check, solve_generator, VerdictKind,
};
use mcmconn::matfac::complete_partner;
use mcmconn::semigroup::{
    canonical_connection_theorem, decide_connection, decide_connection_oracle, enumerate_lambda,
    enumerate_semigroups, CurveVerdict, LambdaSet, NumSemigroup,
};
use mcmconn::wpoly::WPolyRing;
use mcmconn::{Q, Qi};

fn report(criterion: u32, desc: &str, body: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    match body() {
        Ok(()) => println!(
            "criterion {criterion}: pass - {desc} ({:.1}s)",
            started.elapsed().as_secs_f64()
        ),
        Err(e) => {
            println!("criterion {criterion}: FAIL - {desc}: {e}");
            panic!("criterion {criterion} failed: {e}");
        }
    }
}

#[test]
fn criterion_1_an_threefolds_have_no_connections() {
    report(
        1,
        "A_n threefolds n=1..10: no module admits a connection, every one a k-linear one",
        || {
            for n in 1..=10 {
                for fix in threefold_modules::<Qi>(AdeClass::A, n).map_err(|e| e.to_string())? {
                    let (kind, _, klinear) = common::decide_fixture(&fix);
                    if kind == VerdictKind::Connection {
                        return Err(format!("A{n} {} reported a connection", fix.id));
                    }
                    if !klinear {
                        return Err(format!("A{n} {} lacks a k-linear connection", fix.id));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_dn_threefolds_have_no_connections() {
    report(
        2,
        "D_n threefolds n=4..10: no module admits a connection (variant recorded per case)",
        || {
            let mut by_variant = (0u32, 0u32);
            for n in 4..=10 {
                for fix in threefold_modules::<Qi>(AdeClass::D, n).map_err(|e| e.to_string())? {
                    let (kind, variant, klinear) = common::decide_fixture(&fix);
                    if kind == VerdictKind::Connection {
                        return Err(format!("D{n} {} reported a connection", fix.id));
                    }
                    if !klinear {
                        return Err(format!("D{n} {} lacks a k-linear connection", fix.id));
                    }
                    match variant {
                        LieVariant::Standard => by_variant.0 += 1,
                        LieVariant::Exceptional => by_variant.1 += 1,
                    }
                }
            }
            println!(
                "  (closed by standard generators: {}, by exceptional generators: {})",
                by_variant.0, by_variant.1
            );
            if by_variant.1 == 0 {
                return Err("expected at least one case to need the exceptional variant".into());
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_3_recorded_special_solutions_are_members() {
    report(
        3,
        "every recorded P_s^0 solves its generator equation exactly (n = 4..7)",
        || {
            let mut checked = 0;
            for (class, ns) in [(AdeClass::A, 4u32..=7), (AdeClass::D, 4..=7)] {
                for n in ns {
                    for fix in threefold_modules::<Qi>(class, n).map_err(|e| e.to_string())? {
                        let Some(recorded) = &fix.recorded else { continue };
                        let spec = threefold_lie::<Qi>(class, n, recorded.variant)
                            .map_err(|e| e.to_string())?;
                        for (s, p0) in recorded.p0.iter().enumerate() {
                            let ok = fix_p_check(&fix.presentation, &spec.generators()[s], p0)
                                .map_err(|e| format!("{class:?}{n} {}: {e}", fix.id))?;
                            if !ok {
                                return Err(format!(
                                    "{class:?}{n} {} generator {s}: recorded solution rejected",
                                    fix.id
                                ));
                            }
                            checked += 1;
                        }
                    }
                }
            }
            println!("  ({checked} recorded matrices verified)");
            if checked == 0 {
                return Err("no recorded solutions found".into());
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_monomial_tables() {
    report(4, "monomial-curve classification tables <3,4,5>, <3,5,7>, <4,5,6,7>", || {
        let verdict = |gens: &[u64], extra: &[u64]| -> Result<CurveVerdict, String> {
            let s = NumSemigroup::new(gens).map_err(|e| e.to_string())?;
            let l = LambdaSet::new(&s, extra).map_err(|e| e.to_string())?;
            Ok(decide_connection(&l).map_err(|e| e.to_string())?.verdict)
        };
        // <3,4,5>: M2 and M12 admit connections, M1 does not.
        for (extra, want_conn) in [
            (vec![2u64], true),
            (vec![1, 2], true),
            (vec![1], false),
            (vec![], true),
        ] {
            let v = verdict(&[3, 4, 5], &extra)?;
            if (v == CurveVerdict::Connection) != want_conn {
                return Err(format!("<3,4,5> extra {extra:?}: got {v:?}"));
            }
        }
        // <3,5,7>: the canonical module (extra {2}) is the unique rank-one
        // module without a connection.
        let s = NumSemigroup::new(&[3, 5, 7]).map_err(|e| e.to_string())?;
        let canonical = mcmconn::semigroup::canonical_lambda(&s).map_err(|e| e.to_string())?;
        if canonical.extra() != [2] {
            return Err(format!("<3,5,7> canonical extra: {:?}", canonical.extra()));
        }
        for lambda in enumerate_lambda(&s) {
            let v = decide_connection(&lambda).map_err(|e| e.to_string())?.verdict;
            let is_canonical = lambda.extra() == canonical.extra();
            if (v != CurveVerdict::Connection) != is_canonical {
                return Err(format!("<3,5,7> extra {:?}: got {v:?}", lambda.extra()));
            }
        }
        // <4,5,6,7>: the full three-way table.
        for (extra, want) in [
            (vec![3u64], CurveVerdict::Connection),
            (vec![2, 3], CurveVerdict::Connection),
            (vec![1, 2, 3], CurveVerdict::Connection),
            (vec![1, 2], CurveVerdict::KlinearOnly),
            (vec![1, 3], CurveVerdict::KlinearOnly),
            (vec![1], CurveVerdict::None),
            (vec![2], CurveVerdict::None),
        ] {
            let v = verdict(&[4, 5, 6, 7], &extra)?;
            if v != want {
                return Err(format!("<4,5,6,7> extra {extra:?}: got {v:?}, want {want:?}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_canonical_module_iff_symmetric() {
    report(
        5,
        "canonical module admits a connection iff the semigroup is symmetric (g <= 20)",
        || {
            let all = enumerate_semigroups(20);
            for s in &all {
                let (admits, symmetric) =
                    canonical_connection_theorem(s).map_err(|e| e.to_string())?;
                if admits != symmetric {
                    return Err(format!(
                        "generators {:?}: admits = {admits}, symmetric = {symmetric}",
                        s.generators()
                    ));
                }
            }
            println!("  ({} semigroups checked)", all.len());
            Ok(())
        },
    );
}

#[test]
fn criterion_6_gorenstein_sufficiency_random_sample() {
    report(
        6,
        "50 random symmetric semigroups with g <= 30: every rank-one module admits a connection",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(20260823);
            let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
            let mut attempts = 0u32;
            while seen.len() < 50 {
                attempts += 1;
                if attempts > 200_000 {
                    return Err("sampling budget exhausted".into());
                }
                let count = rng.gen_range(2..=4usize);
                let gens: Vec<u64> = (0..count).map(|_| rng.gen_range(2..=20u64)).collect();
                let Ok(s) = NumSemigroup::new(&gens) else { continue };
                let g = s.frobenius();
                if g < 1 || g > 30 || !s.is_symmetric() {
                    continue;
                }
                if !seen.insert(s.gaps()) {
                    continue;
                }
                for lambda in enumerate_lambda(&s) {
                    let w = decide_connection(&lambda).map_err(|e| e.to_string())?;
                    if w.verdict != CurveVerdict::Connection {
                        return Err(format!(
                            "symmetric {:?}, extra {:?}: verdict {:?}",
                            s.generators(),
                            lambda.extra(),
                            w.verdict
                        ));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_property_suites() {
    report(7, "property suites (involutions, lifts, invariance, determinism, oracle)", || {
        // Knörrer: every curve factorization lifts to a verified threefold
        // factorization.
        for n in 1..=6u32 {
            for l in 1..=n {
                let lift = common::an_curve_mf(n, l)
                    .knoerrer("z", "w", (n as i64) + 1, (n as i64) + 1)
                    .map_err(|e| e.to_string())?;
                if !lift.verify().map_err(|e| e.to_string())? {
                    return Err(format!("A{n} l={l} lift failed to verify"));
                }
            }
        }
        // Dual and syzygy are involutions on the catalog partners.
        for (class, n, id) in [
            (AdeClass::A, 2u32, "M1"),
            (AdeClass::A, 3, "N-"),
            (AdeClass::D, 4, "X1"),
            (AdeClass::D, 5, "B1"),
        ] {
            let fix = threefold_modules::<Qi>(class, n)
                .map_err(|e| e.to_string())?
                .into_iter()
                .find(|f| f.id == id)
                .ok_or_else(|| format!("missing {class:?}{n} {id}"))?;
            let mf = complete_partner(&fix.presentation)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{class:?}{n} {id} has no partner"))?;
            if common::mf_bytes(&mf.dual().dual()) != common::mf_bytes(&mf)
                || common::mf_bytes(&mf.syzygy().syzygy()) != common::mf_bytes(&mf)
            {
                return Err(format!("{class:?}{n} {id}: involution broken"));
            }
        }
        // Direct-sum and dual verdict invariance on fixture pairs.
        for (class, n, id1, id2) in
            [(AdeClass::A, 3u32, "M1", "N-"), (AdeClass::D, 5, "M1", "B1")]
        {
            let all = threefold_modules::<Qi>(class, n).map_err(|e| e.to_string())?;
            let f1 = all.iter().find(|f| f.id == id1).unwrap();
            let f2 = all.iter().find(|f| f.id == id2).unwrap();
            let spec = threefold_lie::<Qi>(class, n, LieVariant::Standard)
                .map_err(|e| e.to_string())?;
            let v1 = exists_connection(&f1.presentation, &spec).map_err(|e| e.to_string())?;
            let v2 = exists_connection(&f2.presentation, &spec).map_err(|e| e.to_string())?;
            let sum = common::direct_sum(&f1.presentation, &f2.presentation);
            let vs = exists_connection(&sum, &spec).map_err(|e| e.to_string())?;
            let both_connect =
                v1.kind == VerdictKind::Connection && v2.kind == VerdictKind::Connection;
            if (vs.kind == VerdictKind::Connection) != both_connect {
                return Err(format!("{class:?}{n} {id1}+{id2}: direct-sum verdict changed"));
            }
            let sum_klinear = exists_klinear(&sum, &spec).map_err(|e| e.to_string())?;
            let parts_klinear = exists_klinear(&f1.presentation, &spec)
                .map_err(|e| e.to_string())?
                && exists_klinear(&f2.presentation, &spec).map_err(|e| e.to_string())?;
            if sum_klinear != parts_klinear {
                return Err(format!("{class:?}{n} {id1}+{id2}: direct-sum klinear changed"));
            }
            for f in [f1, f2] {
                let dual = f.presentation.dual().map_err(|e| e.to_string())?;
                let vd = exists_connection(&dual, &spec).map_err(|e| e.to_string())?;
                let v = exists_connection(&f.presentation, &spec).map_err(|e| e.to_string())?;
                if vd.kind != v.kind {
                    return Err(format!(
                        "{class:?}{n} {}: dual verdict {:?} vs {:?}",
                        f.id, vd.kind, v.kind
                    ));
                }
            }
        }
        // Seeded Leibniz fuzzing over a weighted ring (the proptest suite
        // covers the unweighted case).
        let ring = WPolyRing::<Q>::new(vec!["x", "y"], vec![3, 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let mut p = ring.zero();
                for _ in 0..4 {
                    let e = vec![rng.gen_range(0..4u32), rng.gen_range(0..4u32)];
                    let c = Q::new(rng.gen_range(-5..=5i64), rng.gen_range(1..=4i64));
                    p = p.add(&ring.monomial(e, c)).unwrap();
                }
                p
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            // The Euler derivation of the weighted ring.
            let euler = mcmconn::wpoly::Derivation::new(
                &ring,
                vec![ring.var(0).scale(&Q::new(3, 1)), ring.var(1).scale(&Q::new(2, 1))],
                0,
            )
            .unwrap();
            let lhs = euler.apply(&p.mul(&q).unwrap()).unwrap();
            let rhs = euler
                .apply(&p)
                .unwrap()
                .mul(&q)
                .unwrap()
                .add(&p.mul(&euler.apply(&q).unwrap()).unwrap())
                .unwrap();
            if lhs != rhs {
                return Err("Leibniz identity failed on a seeded sample".into());
            }
        }
        // Solver determinism: byte-identical serialized outcomes.
        let fix = threefold_modules::<Qi>(AdeClass::D, 4)
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|f| f.id == "B1")
            .unwrap();
        let spec = threefold_lie::<Qi>(AdeClass::D, 4, LieVariant::Exceptional)
            .map_err(|e| e.to_string())?;
        let snapshot = || -> Result<String, String> {
            let v = exists_connection(&fix.presentation, &spec).map_err(|e| e.to_string())?;
            let sols: Vec<String> = spec
                .generators()
                .iter()
                .enumerate()
                .map(|(s, d)| {
                    let sol = solve_generator(&fix.presentation, d, s).unwrap();
                    format!(
                        "{s}:{}:{}:{}",
                        sol.feasible,
                        sol.nullspace_dim,
                        sol.p_value.map(|m| common::mat_bytes(&m)).unwrap_or_default()
                    )
                })
                .collect();
            Ok(format!("{:?}|{:?}|{}", v.kind, v.obstruction_witness, sols.join(";")))
        };
        if snapshot()? != snapshot()? {
            return Err("solver output differs between identical runs".into());
        }
        // Truncation-bound oracle agreement at bounds g and 3g for every
        // semigroup with g <= 15 (up to 64 rank-one modules per semigroup).
        for s in enumerate_semigroups(15) {
            let g = s.frobenius();
            if g < 1 {
                continue;
            }
            for lambda in enumerate_lambda(&s).into_iter().take(64) {
                let exact = decide_connection(&lambda).map_err(|e| e.to_string())?.verdict
                    == CurveVerdict::Connection;
                let at_g =
                    decide_connection_oracle(&lambda, g as u64).map_err(|e| e.to_string())?;
                let at_3g =
                    decide_connection_oracle(&lambda, 3 * g as u64).map_err(|e| e.to_string())?;
                if exact != at_g || exact != at_3g {
                    return Err(format!(
                        "oracle disagreement on {:?}, extra {:?}: exact {exact}, g {at_g}, 3g {at_3g}",
                        s.generators(),
                        lambda.extra()
                    ));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_positive_controls() {
    report(8, "positive controls: dimension-zero modules and free modules", || {
        // (x^i) over k[x]/(x^{n+1}): connection exists and is integrable.
        for n in 1..=10u32 {
            for i in 1..=n {
                let (p, g) = common::dimension_zero_problem(n, i);
                let v = exists_connection(&p, &g).map_err(|e| e.to_string())?;
                if v.kind != VerdictKind::Connection {
                    return Err(format!("(x^{i}) over k[x]/(x^{})): {:?}", n + 1, v.kind));
                }
                let certs = v.certificates.ok_or("missing certificates")?;
                let p_values: Vec<_> = certs.iter().map(|(pm, _)| pm.clone()).collect();
                let curv = mcmconn::gradconn::curvature(&p, &g, &p_values)
                    .map_err(|e| e.to_string())?;
                if !curv.integrable {
                    return Err(format!("(x^{i}) over k[x]/(x^{}): not integrable", n + 1));
                }
            }
        }
        // Free modules admit connections under every catalog Lie spec.
        let mut cases = vec![];
        for n in 1..=5u32 {
            cases.push((AdeClass::A, n, LieVariant::Standard));
        }
        for n in 4..=7u32 {
            cases.push((AdeClass::D, n, LieVariant::Standard));
            cases.push((AdeClass::D, n, LieVariant::Exceptional));
        }
        for (class, n, variant) in cases {
            let spec = threefold_lie::<Qi>(class, n, variant).map_err(|e| e.to_string())?;
            let free = mcmconn::matfac::GradedPresentation::free(
                spec.ring().clone(),
                vec![0, 2],
            )
            .map_err(|e| e.to_string())?;
            let v = exists_connection(&free, &spec).map_err(|e| e.to_string())?;
            if v.kind != VerdictKind::Connection {
                return Err(format!(
                    "free module over {class:?}{n} ({variant:?}): {:?}",
                    v.kind
                ));
            }
        }
        Ok(())
    });
}
