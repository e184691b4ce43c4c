//! Acceptance suite: every criterion is an exact integer check (no
//! tolerances anywhere) plus a wall-clock budget, and prints one PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use girth_core::corpus::report_json_string;
use girth_core::{
    buchberger, build_w, evaluate_case, forster_swan_bound, free_resolution_of_quotient,
    generate_cases, global_bound, invariant_chain, minimal_generator_count, mu_in_quotient,
    noether_position, normal_form, parse_case, profile_algebra, run_corpus, CaseKind, CaseStatus,
    CheckName, CorpusSource, Field, GeneratorSpec, Ideal, Monomial, MonomialIdeal, MonomialOrder,
    PolyRing, Polynomial, QuotientPresentation, ResolveConfig, RingRc, RunConfig, SchemeVariant,
};

fn ring(field: Field, vars: &[&str]) -> RingRc {
    PolyRing::named(field, vars, MonomialOrder::DegRevLex).unwrap()
}

fn polys(r: &RingRc, ss: &[&str]) -> Vec<Polynomial> {
    ss.iter().map(|s| girth_core::parse_polynomial(r, s).unwrap()).collect()
}

fn budget(start: Instant, secs: u64, label: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(secs),
        "{label} exceeded its {secs} s budget: {elapsed:?}"
    );
}

fn run_cfg(seed: u64) -> RunConfig {
    RunConfig { seed, trials: 16, max_rank: 200, strict: false }
}

#[test]
fn criterion_01_canonical_embedded_point_line() {
    let start = Instant::now();
    for field in [Field::prime(32003).unwrap(), Field::Rationals] {
        let case = parse_case(
            &format!("field {} / ring x y / ideal I: x^2, x*y / ideal a: x, y", field.describe()),
            "canonical",
        )
        .unwrap();
        let rec = evaluate_case(&case, &run_cfg(0)).unwrap();
        assert_eq!(rec.profile.e, 1, "multiplicity");
        assert_eq!(rec.profile.n_gens, 2, "normalization degree");
        assert!(!rec.profile.cm, "not Cohen-Macaulay");
        assert_eq!(rec.mu, Some(2), "mu of the variable ideal");
        assert_eq!(rec.height, Some(1), "height");
        let c = rec.checks.iter().find(|c| c.name == CheckName::Cm1Local).unwrap();
        assert!(c.pass && c.lhs == 2 && c.rhs == 2, "height-one bound tight");
        assert_eq!(rec.status, CaseStatus::Pass);
    }
    budget(start, 1, "criterion 1");
    eprintln!("ACCEPTANCE 01: PASS (e=1, N=2, cm=false, mu=2, height=1, bound tight, both fields)");
}

#[test]
fn criterion_02_twisted_cubic() {
    let start = Instant::now();
    let case = parse_case(
        "field F 32003 / ring x y z w / ideal a: x*z - y^2, x*w - y*z, y*w - z^2",
        "twisted-cubic",
    )
    .unwrap();
    let rec = evaluate_case(&case, &run_cfg(0)).unwrap();
    assert_eq!(rec.mu, Some(3));
    assert_eq!(rec.tau, Some(2));
    assert_eq!(rec.profile.n_gens, 1);
    assert_eq!(rec.height, Some(2));
    assert_eq!(rec.quotient_cm, Some(true));
    let c = rec.checks.iter().find(|c| c.name == CheckName::Cm2TauLocal).unwrap();
    assert!(c.pass && c.lhs == 3 && c.rhs == 3, "mu = (tau+1) N with equality");
    budget(start, 2, "criterion 2");
    eprintln!("ACCEPTANCE 02: PASS (twisted cubic: mu=3, tau=2, N=1, height=2, bound tight)");
}

#[test]
fn criterion_03_chain_suite() {
    let start = Instant::now();
    let cfg = run_cfg(11);
    let spec = GeneratorSpec {
        entries: vec![
            (CaseKind::Hypersurface, 15),
            (CaseKind::CompleteIntersection, 15),
            (CaseKind::NonCm, 15),
            (CaseKind::MonomialCm, 10),
        ],
    };
    let cases = generate_cases(&spec, &cfg).unwrap();
    assert!(cases.len() >= 50);
    let mut cm_count = 0;
    let mut noncm_count = 0;
    for case in &cases {
        let q = case.quotient().unwrap();
        let chain = invariant_chain(&q, cfg.trials, cfg.seed, &cfg.resolve_config()).unwrap();
        assert!(chain.chain_holds, "chain e <= paramdeg <= N on {}", case.id);
        if chain.cm {
            assert!(chain.cm_equality, "CM case {} must have e = paramdeg", case.id);
            cm_count += 1;
        } else {
            assert!(
                chain.e < chain.paramdeg_upper,
                "non-CM case {} must have e < paramdeg",
                case.id
            );
            noncm_count += 1;
        }
    }
    assert!(cm_count > 0 && noncm_count > 0, "both sides of the dichotomy exercised");
    budget(start, 60, "criterion 3");
    eprintln!(
        "ACCEPTANCE 03: PASS (chain holds on {} algebras: {} CM with equality, {} non-CM strict)",
        cases.len(),
        cm_count,
        noncm_count
    );
}

#[test]
fn criterion_04_normalization_degree_equals_multiplicity_for_cm() {
    let start = Instant::now();
    let cfg = run_cfg(23);
    let spec = GeneratorSpec {
        entries: vec![
            (CaseKind::Hypersurface, 10),
            (CaseKind::CompleteIntersection, 10),
        ],
    };
    let cases = generate_cases(&spec, &cfg).unwrap();
    assert!(cases.len() >= 20);
    for case in &cases {
        let q = case.quotient().unwrap();
        let profile = profile_algebra(&q, &cfg).unwrap();
        assert!(profile.cm, "{} must be Cohen-Macaulay", case.id);
        assert_eq!(
            profile.n_gens, profile.e,
            "N = e must hold exactly on CM case {}",
            case.id
        );
    }
    budget(start, 60, "criterion 4");
    eprintln!("ACCEPTANCE 04: PASS (N = e exactly on {} generated CM algebras)", cases.len());
}

#[test]
fn criterion_05_preimage_module_mechanism() {
    let start = Instant::now();
    let rcfg = ResolveConfig::default();
    let f = Field::prime(32003).unwrap();

    // (i) Koszul: A = k[x,y], a = (x, y): (p, q) = (1, 2)
    let r2 = ring(f.clone(), &["x", "y"]);
    let q2 = QuotientPresentation::new(&r2, vec![]).unwrap();
    let nd2 = noether_position(&q2.ideal, 0).unwrap();
    let w = build_w(&q2, &polys(&r2, &["x", "y"]), &nd2, &rcfg).unwrap();
    assert_eq!((w.p, w.q), (1, 2));
    assert_eq!(w.tau, Some(1));
    assert_eq!(w.p_le_tau_n, Some(true));
    assert!(w.q_le_p_plus_n && w.composition_zero && w.euler_identity);

    // (ii) twisted cubic: (p, q) = (2, 3), tau = 2, both bounds tight
    let r4 = ring(f.clone(), &["x", "y", "z", "w"]);
    let q4 = QuotientPresentation::new(&r4, vec![]).unwrap();
    let nd4 = noether_position(&q4.ideal, 0).unwrap();
    let cubic = polys(&r4, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]);
    let w = build_w(&q4, &cubic, &nd4, &rcfg).unwrap();
    assert_eq!((w.p, w.q), (2, 3));
    assert_eq!(w.tau, Some(2));
    assert_eq!(w.p_le_tau_n, Some(true));
    assert!(w.q_le_p_plus_n && w.composition_zero && w.euler_identity);

    // (iii) an N = 2 case: A = k[x,y,z]/(x^2 - y z), a = (x, y) A
    let r3 = ring(f, &["x", "y", "z"]);
    let q3 = QuotientPresentation::new(&r3, polys(&r3, &["x^2 - y*z"])).unwrap();
    let nd3 = noether_position(&q3.ideal, 0).unwrap();
    assert_eq!(nd3.n_gens(), 2);
    let w = build_w(&q3, &polys(&r3, &["x", "y"]), &nd3, &rcfg).unwrap();
    assert_eq!(w.n_gens, 2);
    if let Some(ok) = w.p_le_tau_n {
        assert!(ok);
    }
    assert!(w.q_le_p_plus_n && w.composition_zero && w.euler_identity);
    assert!(w.mu_a <= w.q, "mu_A(a) <= q = mu_S(W)");

    budget(start, 10, "criterion 5");
    eprintln!("ACCEPTANCE 05: PASS (W mechanism: Koszul (1,2), cubic (2,3), cone N=2 case)");
}

#[test]
fn criterion_06_bound_calculators() {
    let start = Instant::now();
    // exception branch: N = tau = 1 gives d + 1
    for d in 1..=8 {
        assert_eq!(global_bound(d, 1, 2, Some(1)).unwrap(), d + 1);
    }
    // closed forms
    assert_eq!(global_bound(3, 4, 1, None).unwrap(), 6);
    assert_eq!(global_bound(3, 4, 2, Some(2)).unwrap(), 13);
    assert_eq!(forster_swan_bound(4, 3, 1), 5);
    assert_eq!(forster_swan_bound(1, 3, 0), 4);
    for f in 1..=10 {
        for d in 1..=6 {
            let general = girth_core::scheme_intersection_bound(f, d, SchemeVariant::General).unwrap();
            let cm = girth_core::scheme_intersection_bound(f, d, SchemeVariant::Cm).unwrap();
            let check = girth_core::BoundCheck::le(
                CheckName::Thm1_1,
                general as i64,
                (2 * f + 3 * d - 2) as i64,
            );
            assert!(check.pass && check.lhs == check.rhs);
            let check_cm =
                girth_core::BoundCheck::le(CheckName::Thm1_1Cm, cm as i64, (2 * f + d - 2) as i64);
            assert!(check_cm.pass && check_cm.lhs == check_cm.rhs);
        }
        // d = 3 specializations: 2f + 5 and 2f + 1
        let ee = girth_core::scheme_intersection_bound(f, 3, SchemeVariant::Ee).unwrap();
        let check_ee = girth_core::BoundCheck::le(CheckName::Ex5_4, ee as i64, (2 * f + 5) as i64);
        assert!(check_ee.pass && check_ee.lhs == check_ee.rhs);
        assert_eq!(
            girth_core::scheme_intersection_bound(f, 3, SchemeVariant::Cm).unwrap(),
            2 * f + 1
        );
    }
    budget(start, 1, "criterion 6");
    eprintln!("ACCEPTANCE 06: PASS (bound calculators reproduce all closed forms)");
}

#[test]
fn criterion_07_series_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let vars = ["x", "y", "z", "w", "v"];
    for trial in 0..100 {
        let n = rng.gen_range(1..=5usize);
        let r = PolyRing::named(Field::Rationals, &vars[..n], MonomialOrder::DegRevLex).unwrap();
        let ngens = rng.gen_range(1..=6usize);
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1..=5u32);
                let all = girth_core::monomials_of_degree(n, d);
                all[rng.gen_range(0..all.len())].clone()
            })
            .collect();
        let mi = MonomialIdeal::new(&r, gens);
        let series = mi.hilbert_series();
        let expanded = series.coefficients_up_to(12);
        let counted = girth_core::standard_monomial_counts(&mi, 12);
        for d in 0..=12usize {
            assert_eq!(
                expanded[d], counted[d] as i64,
                "trial {trial}: degree {d} disagreement for {:?}",
                mi.generators()
            );
        }
    }
    budget(start, 30, "criterion 7");
    eprintln!("ACCEPTANCE 07: PASS (pivot series = brute-force staircase counts, 100 ideals, degree <= 12)");
}

#[test]
fn criterion_08_resolution_certificates_and_hilbert_burch() {
    let start = Instant::now();
    let cfg = run_cfg(31);
    let rcfg = cfg.resolve_config();
    let f = Field::prime(32003).unwrap();

    // named resolutions: certificates on each
    let named: Vec<(RingRc, Vec<&str>)> = vec![
        (ring(f.clone(), &["x", "y"]), vec!["x^2", "x*y"]),
        (ring(f.clone(), &["x", "y"]), vec!["x", "y"]),
        (ring(f.clone(), &["x", "y"]), vec!["x^2"]),
        (
            ring(f.clone(), &["x", "y", "z", "w"]),
            vec!["x*z - y^2", "x*w - y*z", "y*w - z^2"],
        ),
    ];
    let mut resolutions = 0;
    for (r, gens) in &named {
        let q = QuotientPresentation::new(r, polys(r, gens)).unwrap();
        let res = free_resolution_of_quotient(&q, &rcfg).unwrap();
        assert!(res.compositions_are_zero(), "composition zero");
        assert!(res.minimality_certified(), "no scalar entries");
        assert_eq!(
            res.alternating_numerator(),
            q.hilbert_series().numerator,
            "Euler characteristic identity"
        );
        resolutions += 1;
    }

    // >= 20 generated determinantal height-2 CM ideals: mu = tau + 1 exactly
    let spec = GeneratorSpec { entries: vec![(CaseKind::Determinantal, 20)] };
    let cases = generate_cases(&spec, &cfg).unwrap();
    assert!(cases.len() >= 20);
    for case in &cases {
        let r = &case.ring;
        let a = case.test_ideal.as_ref().unwrap();
        let q = QuotientPresentation::new(r, vec![]).unwrap();
        assert_eq!(q.operational_height(a).unwrap(), 2);
        let qa = q.quotient_by_extra(a).unwrap();
        let res = free_resolution_of_quotient(&qa, &rcfg).unwrap();
        assert!(res.compositions_are_zero());
        assert!(res.minimality_certified());
        assert_eq!(res.alternating_numerator(), qa.hilbert_series().numerator);
        let tau = girth_core::cm_type(&qa, &rcfg).unwrap();
        let mu = minimal_generator_count(r, a).unwrap();
        assert_eq!(mu, tau + 1, "Hilbert-Burch tightness on {}", case.id);
        assert_eq!(mu_in_quotient(&q, a).unwrap(), mu);
        resolutions += 1;
    }
    budget(start, 60, "criterion 8");
    eprintln!(
        "ACCEPTANCE 08: PASS (certificates on {resolutions} resolutions; mu = tau+1 on {} determinantal ideals)",
        cases.len()
    );
}

#[test]
fn criterion_09_groebner_certificates_randomized() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let vars = ["x", "y", "z"];
    let mut checked = 0;
    for trial in 0..40 {
        let field = if trial % 2 == 0 { Field::prime(32003).unwrap() } else { Field::Rationals };
        let n = rng.gen_range(2..=3usize);
        let r = PolyRing::named(field, &vars[..n], MonomialOrder::DegRevLex).unwrap();
        let ngens = rng.gen_range(1..=3usize);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1..=3u32);
                let mut raw = Vec::new();
                for m in girth_core::monomials_of_degree(n, d) {
                    if rng.gen_bool(0.5) {
                        raw.push((r.field.from_i64(rng.gen_range(-9i64..=9)), m));
                    }
                }
                Polynomial::from_terms(&r, raw).unwrap()
            })
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        // post-hoc certificate: S-pairs to zero, originals to zero, cofactors exact
        let gb = buchberger(&r, &gens);
        gb.verify_certificates().unwrap();
        // reduced-basis uniqueness under a shuffle
        let mut shuffled = gens.clone();
        shuffled.reverse();
        assert_eq!(buchberger(&r, &shuffled).elements(), gb.elements());
        // normal-form idempotence on a random polynomial
        let probe = {
            let mut raw = Vec::new();
            for d in 0..=3u32 {
                for m in girth_core::monomials_of_degree(n, d) {
                    if rng.gen_bool(0.3) {
                        raw.push((r.field.from_i64(rng.gen_range(-9i64..=9)), m));
                    }
                }
            }
            Polynomial::from_terms(&r, raw).unwrap()
        };
        let ideal = Ideal::new(&r, gens).unwrap();
        let nf1 = normal_form(&probe, ideal.gb()).unwrap();
        let nf2 = normal_form(&nf1, ideal.gb()).unwrap();
        assert_eq!(nf1, nf2);
        checked += 1;
    }
    assert!(checked >= 30);
    budget(start, 30, "criterion 9");
    eprintln!("ACCEPTANCE 09: PASS (certificates, uniqueness, idempotence on {checked} random ideals)");
}

#[test]
fn criterion_10_deterministic_reports() {
    let start = Instant::now();
    let cfg = run_cfg(7);
    let spec = GeneratorSpec {
        entries: vec![
            (CaseKind::Hypersurface, 3),
            (CaseKind::Determinantal, 3),
            (CaseKind::NonCm, 2),
            (CaseKind::OutOfHyp, 2),
        ],
    };
    let r1 = run_corpus(&CorpusSource::Generated(spec.clone()), &cfg).unwrap();
    let r2 = run_corpus(&CorpusSource::Generated(spec), &cfg).unwrap();
    let s1 = report_json_string(&r1);
    let s2 = report_json_string(&r2);
    assert_eq!(s1, s2, "byte-identical reports for a fixed seed");
    assert_eq!(r1.fail, 0);
    budget(start, 60, "criterion 10");
    eprintln!("ACCEPTANCE 10: PASS (corpus --seed 7 twice: byte-identical JSON)");
}
