//! Acceptance suite: one test per criterion, each ending in a single
//! PASS line (shown with `--nocapture`; the harness line itself doubles as
//! the per-criterion verdict).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use curvebounds::audit::{
    acm_certificate, acm_sweep, make_grid, verify_cases, verify_extremality, verify_table1,
    Reference, SpecialCase,
};
use curvebounds::bounds::{self, DegreePair};
use curvebounds::hvectors::{genus_of_hvector, genus_with_defect, integrate, HVector};
use curvebounds::liaison::{even_case_margin, residual, CIType};
use curvebounds::surfaces::{
    dp_construction, dp_degree, dp_genus, dp_intersect, scroll_bruteforce, scroll_maximize,
};

fn pair(d1: i64, d2: i64) -> DegreePair {
    DegreePair::new(d1, d2).unwrap()
}

fn hv(entries: &[i64]) -> HVector {
    HVector::new(entries.to_vec()).unwrap()
}

#[test]
fn criterion_1_reference_table_reproduction() {
    let start = Instant::now();
    let summary = verify_table1();
    let elapsed = start.elapsed();
    assert_eq!(summary.cells.len(), 49);
    assert_eq!(summary.matching_cells, 48);
    assert!(
        summary.only_known_misprint(),
        "expected exactly the (100,100) plain mismatch, got {:?}",
        summary.mismatches
    );
    let m = &summary.mismatches[0];
    assert_eq!((m.printed, m.computed), (9700, 9606));
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 PASS: 49/49 bold and 48/49 plain cells reproduce; (100,100) flagged 9606 vs 9700 in {elapsed:?}");
}

#[test]
fn criterion_2_case_identity_and_threshold() {
    let start = Instant::now();
    let summary = verify_cases(200).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(summary.pairs_checked, 195 * 196 / 2);
    assert!(
        summary.all_passed(),
        "identity {:?}, implication {:?}",
        summary.identity_failures,
        summary.implication_failures
    );
    assert!(summary.converse_counterexamples.is_empty());
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "criterion 2 PASS: case polynomial identity and threshold implication hold on {} pairs in {elapsed:?}",
        summary.pairs_checked
    );
}

#[test]
fn criterion_3_extremal_genus_bruteforce() {
    let start = Instant::now();
    let summary = verify_extremality(80).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(summary.checked, 72);
    assert!(summary.all_passed(), "failures: {:?}", summary.failures);
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 3 PASS: brute-force max genus equals the closed form for 9 <= d <= 80 in {elapsed:?}"
    );
}

#[test]
fn criterion_4_genus_fixtures() {
    assert_eq!(genus_of_hvector(&hv(&[1, 3, 5, 4, 3])), 22);
    assert_eq!(genus_of_hvector(&hv(&[1, 3, 4, 4, 4])), 24);
    assert_eq!(genus_of_hvector(&hv(&[1, 3, 4, 4, 3, 1])), 25);
    assert_eq!(genus_of_hvector(&hv(&[1, 3, 4, 4, 2])), 18);
    let harris = genus_with_defect(&hv(&[1, 2, 3, 3, 1]), 1).unwrap();
    assert_eq!(genus_of_hvector(&hv(&[1, 2, 3, 3, 1])), 12);
    assert_eq!(harris.genus, 11);
    println!("criterion 4 PASS: all five genus fixtures reproduce exactly");
}

#[test]
fn criterion_5_scroll_corner_optimum() {
    let start = Instant::now();
    for d1 in 2..=60 {
        for d2 in 2..=60 {
            let p = pair(d1, d2);
            let opt = scroll_maximize(p).unwrap();
            let scan = scroll_bruteforce(p).unwrap();
            assert_eq!(opt.maximum, scan, "({d1},{d2}): corner vs full box");
            assert_eq!(opt.maximum, bounds::b(p), "({d1},{d2}): optimum vs closed form");
        }
    }
    let opt = scroll_maximize(pair(6, 8)).unwrap();
    assert_eq!(opt.maximizers, vec![(3, 1)]);
    let (c1, c2) = opt.classes[0];
    assert_eq!((c1.to_string(), c2.to_string()), ("3h".into(), "7h-6e".into()));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "criterion 5 PASS: corner maximum equals full-box brute force and the sharp bound on 2..=60 in {elapsed:?}"
    );
}

#[test]
fn criterion_6_del_pezzo_sharpness() {
    for k in 1..=50 {
        for l in 1..=50 {
            let (c1, c2) = dp_construction(k, l).unwrap();
            assert_eq!((dp_degree(&c1), dp_degree(&c2)), (2 * k + 1, 2 * l + 1));
            assert_eq!(dp_genus(&c1), 0, "k={k}");
            assert_eq!(dp_genus(&c2), 0, "l={l}");
            let meet = dp_intersect(&c1, &c2);
            assert_eq!(meet, 2 * k * l + 1);
            assert_eq!(meet, bounds::b(pair(2 * k + 1, 2 * l + 1)));
        }
    }
    println!(
        "criterion 6 PASS: construction attains 2kl+1, the sharp odd bound, with genus 0 for all k, l <= 50"
    );
}

#[test]
fn criterion_7_liaison_fixtures() {
    let ci = CIType::new(2, 2, 4).unwrap();
    let linked = residual(ci, 14, 17).unwrap();
    assert_eq!((linked.d_res, linked.g_res), (2, -1));

    // Linking a degree-6 curve through the same complete intersection
    // shifts the genus up by 6 on the degree-10 side.
    let g1 = 3;
    let partner = residual(ci, 6, g1).unwrap();
    assert_eq!(partner.d_res, 10);
    assert_eq!(partner.g_res - g1, 6);

    let cert = even_case_margin(pair(6, 10)).unwrap();
    assert_eq!((cert.m, cert.n_max, cert.margin_lb), (2, 19, 8));

    let mut checked = 0;
    for d1 in (2..200).step_by(2) {
        for d2 in ((d1 + 2)..=200).step_by(2) {
            let sum = d1 + d2;
            if sum % 4 != 0 || !(16..=200).contains(&sum) {
                continue;
            }
            let cert = even_case_margin(pair(d1, d2)).unwrap();
            assert!(cert.margin_lb > 0, "({d1},{d2})");
            checked += 1;
        }
    }
    println!(
        "criterion 7 PASS: residual fixtures and the (6,10) margin reproduce; margin positive on {checked} admissible pairs"
    );
}

#[test]
fn criterion_8_audit_flags_stable() {
    assert!(verify_table1().only_known_misprint());

    let sweep = acm_sweep(60).unwrap();
    assert!(sweep.expected_profile, "flagged: {:?}", sweep.flagged);
    assert!(sweep.flagged.iter().all(|p| p.d2() == 8 && p.d1() >= 10));
    assert_eq!(sweep.flagged.len(), 51);

    let mut genus_tagged = Vec::new();
    for (d1, d2) in [(7, 7), (7, 9), (9, 7), (9, 9)] {
        let cert = acm_certificate(pair(d1, d2)).unwrap();
        assert_eq!(cert.special_case, Some(SpecialCase::GenusObstruction));
        assert!(cert.claim_holds);
        genus_tagged.push((d1, d2));
        let report = curvebounds::audit::conjecture_status(pair(d1, d2)).unwrap();
        let acm_entry = report
            .provenance
            .iter()
            .find(|p| p.result == curvebounds::audit::ResultId::AcmRegularity)
            .unwrap();
        assert!(acm_entry.strict, "({d1},{d2}) concludes strictly");
    }
    assert_eq!(sweep.genus_tagged.len(), genus_tagged.len());
    println!(
        "criterion 8 PASS: table misprint, the d2=8 claim failures, and the four strict special cases are all stable"
    );
}

#[test]
fn criterion_9_property_suites() {
    // Compact re-runs of the randomized suites; the full generative
    // versions live in the properties test target.
    for d1 in 1..=500 {
        for d2 in d1..=500 {
            let fwd = pair(d1, d2);
            let rev = pair(d2, d1);
            assert_eq!(bounds::b_dg(fwd), bounds::b_dg(rev));
            assert_eq!(bounds::b(fwd), bounds::b(rev));
            if d1 + d2 >= 5 {
                assert_eq!(bounds::b_g(fwd).unwrap(), bounds::b_g(rev).unwrap());
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let len = rng.gen_range(1..=8);
        let mut entries = vec![1i64];
        for _ in 1..len {
            entries.push(rng.gen_range(1..=30));
        }
        let h = HVector::new(entries).unwrap();
        assert_eq!(integrate(&h).difference(), h);
    }

    let mut checked = 0;
    while checked < 10_000 {
        let len = rng.gen_range(3..=8);
        let mut entries = vec![1i64];
        for _ in 1..len {
            entries.push(rng.gen_range(1..=9));
        }
        let from = rng.gen_range(2..len);
        let to = rng.gen_range(1..from);
        if entries[from] < 2 {
            continue;
        }
        let low = HVector::new(entries.clone()).unwrap();
        entries[from] -= 1;
        entries[to] += 1;
        let high = HVector::new(entries).unwrap();
        assert!(genus_of_hvector(&high) <= genus_of_hvector(&low));
        checked += 1;
    }

    for _ in 0..2000 {
        let ci = CIType::new(
            rng.gen_range(1..=7),
            rng.gen_range(1..=7),
            rng.gen_range(1..=7),
        )
        .unwrap();
        let total = ci.ci_degree();
        if total < 2 {
            continue;
        }
        let d_in = rng.gen_range(1..total);
        let g_in = rng.gen_range(-100..=100);
        let linked = residual(ci, d_in, g_in).unwrap();
        let back = residual(ci, linked.d_res, linked.g_res).unwrap();
        assert_eq!((back.d_res, back.g_res), (d_in, g_in));
    }

    for reference in [Reference::BDg, Reference::B] {
        let first = make_grid(reference, 4, 80).unwrap();
        let second = make_grid(reference, 4, 80).unwrap();
        assert_eq!(first, second);
    }
    println!(
        "criterion 9 PASS: symmetry, round-trip, monotonicity, involution, and grid determinism all hold"
    );
}
