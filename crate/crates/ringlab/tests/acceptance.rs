//! End-to-end acceptance gate: eleven criteria, one printed pass/fail line
//! each. Algebraic assertions are exact; the timed criteria use wall-clock
//! limits. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use ringlab::cayley;
use ringlab::classify::{self, DecompKind, DecomposeResult, RingProperty};
use ringlab::construct::{self, BuildConfig, MatrixShape, Ring};
use ringlab::expr;
use ringlab::harness::{self, Catalog};
use ringlab::iso;
use ringlab::ring::{ElementSets, DEFAULT_VALIDATE_BOUND};

fn cfg() -> BuildConfig {
    BuildConfig::default()
}

fn build(text: &str) -> Ring {
    expr::build_from_text(text, &cfg()).unwrap()
}

fn gnc(ring: &Ring) -> bool {
    classify::is_gnc(ring).holds
}

fn prop(ring: &Ring, p: RingProperty) -> bool {
    classify::ring_predicate(ring, p).holds
}

/// Independent prime-power oracle: trial-division factorization.
fn prime_power_oracle(n: usize) -> bool {
    if n == 1 {
        return true; // degenerate: the zero ring is vacuously GNC
    }
    let mut m = n;
    for d in 2..=n {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            return m == 1;
        }
    }
    unreachable!()
}

fn criterion_1() {
    let start = Instant::now();
    for n in 1..=64 {
        let zn = construct::build_zn(n, &cfg()).unwrap();
        assert_eq!(gnc(&zn), prime_power_oracle(n), "Zn({n})");
    }
    assert!(start.elapsed() < Duration::from_secs(1), "Zn scan exceeded 1s");
}

fn criterion_2() {
    let z3 = build("Zn(3)");
    assert!(gnc(&z3) && !prop(&z3, RingProperty::NilClean));
    let z6 = build("Zn(6)");
    assert!(prop(&z6, RingProperty::Clean));
    let v = classify::is_gnc(&z6);
    assert!(!v.holds);
    match v.certificate {
        Some(classify::Certificate::FailingElement { element, .. }) => {
            assert_eq!(element.index, 2, "failing element of Zn(6)")
        }
        other => panic!("expected a failing-element certificate, got {other:?}"),
    }
}

fn criterion_3() {
    assert!(gnc(&build("M(2,Zn(2))")));

    let start = Instant::now();
    let m2f3 = build("M(2,Zn(3))");
    assert!(!gnc(&m2f3));
    // diag(2,0): coordinates (2,0,0,0) in the row-major layout
    let diag20 = 2 * 27;
    let n_idems = m2f3.element_sets().idempotent_list().len();
    match classify::decompose(&m2f3, diag20, DecompKind::NilClean).unwrap() {
        DecomposeResult::Refutation { rows, .. } => assert_eq!(rows.len(), n_idems),
        DecomposeResult::Witness(w) => panic!("diag(2,0) unexpectedly decomposed: {w:?}"),
    }
    assert!(start.elapsed() < Duration::from_secs(1), "M2(F3) exceeded 1s");

    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/f4.json");
    let f4 = cayley::load(&fixture, DEFAULT_VALIDATE_BOUND, 0).unwrap();
    assert_eq!(f4.size(), 4);
    assert!(prop(&f4, RingProperty::Field));
    let m2f4 = construct::build_matrix(f4, 2, MatrixShape::Full, &cfg()).unwrap();
    assert!(!gnc(&m2f4));
}

fn criterion_4() {
    let rg = build("RG(Zn(3),C(2))");
    let sets = rg.element_sets();
    assert_eq!(ElementSets::members(&sets.idempotents), vec![0, 3, 7, 8]);
    assert_eq!(ElementSets::members(&sets.nilpotents), vec![0]);
    let one_plus_g = 4;
    assert!(!sets.units[one_plus_g]);
    assert!(!classify::decompose(&rg, one_plus_g, DecompKind::NilClean)
        .unwrap()
        .is_witness());
}

fn criterion_5() {
    assert!(gnc(&build("T(2,Zn(2))")));
    assert!(gnc(&build("T(3,Zn(2))")));
    assert!(!gnc(&build("T(2,Zn(3))")));
    for n in [2, 3] {
        for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
            let t = build(&format!("T({n},{b})"));
            assert_eq!(gnc(&t), prop(&build(b), RingProperty::NilClean), "T({n},{b})");
        }
    }
}

fn criterion_6() {
    assert!(gnc(&build("Prod(Zn(2),Zn(4))")));
    assert!(!gnc(&build("Prod(Zn(2),Zn(3))")));
    let small = ["Zn(2)", "Zn(3)", "Zn(4)", "Zn(8)", "Zn(9)"];
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            let p = build(&format!("Prod({a},{b})"));
            let expected = prop(&build(a), RingProperty::NilClean)
                && prop(&build(b), RingProperty::NilClean);
            assert_eq!(gnc(&p), expected, "Prod({a},{b})");
        }
    }
}

fn criterion_7() {
    assert!(gnc(&build("Ks(Zn(2),0)")));
    assert!(!gnc(&build("Ks(Zn(3),0)")));
    let ms = build("Ms(2,Zn(4),2)");
    assert!(iso::tables_equal(&ms, &build("Ks(Zn(4),0)")));
    assert!(gnc(&ms));
}

fn criterion_8() {
    let start = Instant::now();
    let catalog = Catalog::default_catalog(&cfg()).unwrap();
    let report = harness::run_all(&catalog, &cfg(), None).unwrap();
    assert_eq!(report.results.len(), 25);
    for r in &report.results {
        assert_eq!(
            r.status,
            harness::CheckStatus::Pass,
            "{}: {:?}",
            r.id,
            r.counterexample
        );
    }
    assert!(start.elapsed() < Duration::from_secs(60), "suite exceeded 60s");
}

fn criterion_9() {
    let m2z4 = build("M(2,Zn(4))");
    assert!(gnc(&m2z4));
    let start = Instant::now();
    let m2z9 = build("M(2,Zn(9))");
    assert_eq!(m2z9.size(), 6561);
    assert!(!m2z9.is_materialized());
    assert!(!gnc(&m2z9));
    assert!(start.elapsed() < Duration::from_secs(30), "M2(Z9) exceeded 30s");
}

fn criterion_10() {
    for text in [
        "RG(Zn(2),C(2))",
        "RG(Zn(4),C(2))",
        "RG(Zn(2),C(4))",
        "RG(Zn(2),C(2)xC(2))",
    ] {
        assert!(gnc(&build(text)), "{text}");
    }
    let z2c3 = build("RG(Zn(2),C(3))");
    assert!(!gnc(&z2c3));
    let z2 = build("Zn(2)");
    assert!(z2.element_sets().units[z2.int_image(3)], "3·1 must be a unit in Z2");

    for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
        for g in ["C(2)", "C(3)", "C(4)", "C(2)xC(2)"] {
            let rg = build(&format!("RG({b},{g})"));
            let mut mask = vec![false; rg.size()];
            for x in construct::augmentation_ideal(&rg).unwrap() {
                mask[x] = true;
            }
            let (quot, _) = iso::quotient(&rg, &mask).unwrap();
            assert!(iso::tables_equal(&quot, &build(b)), "RG({b},{g})/Δ");
        }
    }
}

fn criterion_11() {
    for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
        let s2 = build(&format!("S(2,{b})"));
        let triv = build(&format!("Triv({b})"));
        let rn = build(&format!("Rn({b},2)"));
        assert!(iso::tables_equal(&s2, &triv), "S2 vs Triv over {b}");
        assert!(iso::tables_equal(&triv, &rn), "Triv vs Rn over {b}");
        let ks1 = build(&format!("Ks({b},1)"));
        let m2 = build(&format!("M(2,{b})"));
        assert!(iso::tables_equal(&ks1, &m2), "Ks({b},1) vs M2({b})");
    }
    let catalog = Catalog::default_catalog(&cfg()).unwrap();
    for ring in catalog.rings() {
        let report = ring.validate(DEFAULT_VALIDATE_BOUND, 0);
        assert!(report.is_valid(), "{} failed validation", ring.label());
        if ring.size() <= DEFAULT_VALIDATE_BOUND {
            assert!(report.is_exhaustive(), "{} should validate exhaustively", ring.label());
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 11] = [
        ("criterion 1 (Zn scan, < 1s)", criterion_1),
        ("criterion 2 (Z3 / Z6 separating examples)", criterion_2),
        ("criterion 3 (matrix rings over fields, < 1s)", criterion_3),
        ("criterion 4 (Z3C2 fixture)", criterion_4),
        ("criterion 5 (triangular matrices)", criterion_5),
        ("criterion 6 (products)", criterion_6),
        ("criterion 7 (Ks / Ms twists)", criterion_7),
        ("criterion 8 (full suite, < 60s)", criterion_8),
        ("criterion 9 (M2(Z9) lazy, < 30s)", criterion_9),
        ("criterion 10 (group rings)", criterion_10),
        ("criterion 11 (cross-validation)", criterion_11),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(()) => println!("{name}: pass"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("{name}: FAIL — {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
