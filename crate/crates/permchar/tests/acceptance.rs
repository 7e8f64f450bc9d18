//! Acceptance gate: one test per acceptance criterion, each printing a
//! single PASS line (run with `--nocapture` to see them).  Every check is
//! exact — integer and rational arithmetic throughout, zero tolerance.

use std::time::{Duration, Instant};

use permchar::catalog::{catalog_entries, group_by_name, universe_by_max_order};
use permchar::{
    check_fgs, check_lemma_avg, check_lemma_via_fgs, check_theorem, falsify_klingen_step,
    gassmann_pairs, perm_character, sweep, CosetSpace, PermGroup, Permutation, StabilizerChain,
    SubgroupHandle, SweepCaps,
};

fn universe24() -> Vec<PermGroup> {
    universe_by_max_order(24).expect("catalog groups of order ≤ 24 are always constructible")
}

fn pass(criterion: usize, name: &str, detail: &str) {
    println!("acceptance criterion {criterion} ({name}): PASS — {detail}");
}

#[test]
fn criterion_1_counterexample_reproduction() {
    // warm-up so the timed run measures the computation, not first-touch
    // allocation effects
    let run = || {
        let group = group_by_name("C4")?;
        let x = group.generators()[0].clone();
        let u = group.trivial_subgroup();
        let n = group.subgroup(&[x.compose(&x)?])?;
        falsify_klingen_step(&group, &u, &n)
    };
    run().unwrap();

    let start = Instant::now();
    let witness = run().unwrap().expect("C4 yields a witness");
    let elapsed = start.elapsed();

    assert_eq!(witness.element, "(1 3)(2 4)");
    assert_eq!(witness.char_u, 0);
    assert_eq!(witness.char_un, 2);
    assert!(
        elapsed < Duration::from_millis(1),
        "counterexample took {elapsed:?}, budget is 1 ms"
    );
    pass(
        1,
        "counterexample reproduction",
        &format!(
            "σ = {} with χ_U(σ) = {}, χ_UN(σ) = {} in {elapsed:?}",
            witness.element, witness.char_u, witness.char_un
        ),
    );
}

#[test]
fn criterion_2_averaging_identity_sweep() {
    let start = Instant::now();
    let mut checks = 0usize;
    for group in &universe24() {
        let subgroups = group.subgroups().unwrap();
        let normals = group.normal_subgroups().unwrap();
        for u in &subgroups {
            for n in &normals {
                for g in group.class_reps() {
                    let c = check_lemma_avg(group, u, n, g).unwrap();
                    assert!(c.holds, "averaging identity failed: {c:?}");
                    assert_eq!(
                        c.rhs_numerator % c.rhs.den,
                        0,
                        "sum over N not divisible by |N|: {c:?}"
                    );
                    checks += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "sweep took {elapsed:?}, budget is 60 s"
    );
    pass(
        2,
        "averaging identity sweep",
        &format!("{checks} checks, zero violations, {elapsed:?}"),
    );
}

#[test]
fn criterion_3_orbit_counting_sweep() {
    let start = Instant::now();
    let mut checks = 0usize;
    for group in &universe24() {
        let subgroups = group.subgroups().unwrap();
        let normals = group.normal_subgroups().unwrap();
        for u in &subgroups {
            let space = CosetSpace::right_cosets(group, u).unwrap();
            for n in &normals {
                for g in group.class_reps() {
                    let c = check_fgs(&space, n, g).unwrap();
                    assert!(c.holds, "orbit-counting average failed: {c:?}");
                    checks += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "sweep took {elapsed:?}, budget is 120 s"
    );
    pass(
        3,
        "orbit counting sweep",
        &format!("{checks} checks, zero violations, {elapsed:?}"),
    );
}

#[test]
fn criterion_4_route_consistency() {
    let mut checks = 0usize;
    for group in &universe24() {
        let subgroups = group.subgroups().unwrap();
        let normals = group.normal_subgroups().unwrap();
        for u in &subgroups {
            for n in &normals {
                for g in group.class_reps() {
                    let c = check_lemma_via_fgs(group, u, n, g).unwrap();
                    assert!(c.holds, "route disagreement: {c:?}");
                    assert_eq!(c.direct, c.fixed_orbit_count, "{c:?}");
                    assert_eq!(c.direct, c.nonsplit_orbits, "{c:?}");
                    assert_eq!(c.direct * c.rhs.den, c.rhs_numerator, "{c:?}");
                    checks += 1;
                }
            }
        }
    }
    pass(
        4,
        "route consistency",
        &format!("{checks} checks agree on all routes"),
    );
}

#[test]
fn criterion_5_character_transfer_sweep() {
    let start = Instant::now();
    let mut checked = 0usize;

    // the full universe, plus the order-168 group on seven points
    let mut universe = universe24();
    universe.push(group_by_name("PSL(3,2)").unwrap());
    for group in &universe {
        let subgroups = group.subgroups_capped(400).unwrap();
        let characters: Vec<_> = subgroups
            .iter()
            .map(|u| perm_character(group, u).unwrap())
            .collect();
        let normals: Vec<_> = subgroups
            .iter()
            .filter(|s| group.is_normal(s).unwrap())
            .cloned()
            .collect();
        for i in 0..subgroups.len() {
            for j in (i + 1)..subgroups.len() {
                if !characters[i].equal(&characters[j]).unwrap() {
                    continue;
                }
                for n in &normals {
                    let c = check_theorem(group, &subgroups[i], &subgroups[j], n).unwrap();
                    assert!(c.hypothesis_holds);
                    assert!(
                        c.conclusion_holds,
                        "transfer failed in {}: {c:?}",
                        group.label()
                    );
                    checked += 1;
                }
            }
        }
    }

    // the order-168 group supplies non-conjugate equal-character pairs,
    // so the hypothesis above was exercised non-vacuously
    let psl = group_by_name("PSL(3,2)").unwrap();
    let pairs = gassmann_pairs(&psl, 400).unwrap();
    assert!(!pairs.is_empty(), "no non-conjugate equal-character pairs");
    assert!(pairs.iter().any(|p| p.index == 7));

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "sweep took {elapsed:?}, budget is 10 min"
    );
    pass(
        5,
        "character transfer sweep",
        &format!(
            "{checked} transfer checks hold; {} non-conjugate equal-character pairs at order 168, {elapsed:?}",
            pairs.len()
        ),
    );
}

/// The defining count: `|{x ∈ G : x·g·x⁻¹ ∈ U}| / |U|`.
fn frobenius_value(group: &PermGroup, u: &SubgroupHandle, g: &Permutation) -> i64 {
    let count = group
        .elements()
        .iter()
        .filter(|x| {
            let conj = x.compose(g).unwrap().compose(&x.inverse()).unwrap();
            u.contains(&conj)
        })
        .count() as i64;
    assert_eq!(count % u.order() as i64, 0);
    count / u.order() as i64
}

#[test]
fn criterion_6_oracle_equivalence() {
    // the sweep universe, extended by product groups that sit right at
    // the order-48 boundary
    let mut universe = universe24();
    for name in ["C2xC16", "S3xS3", "C2xS4"] {
        universe.push(group_by_name(name).unwrap());
    }

    let mut value_checks = 0usize;
    let mut pair_checks = 0usize;
    for group in &universe {
        assert!(group.order() <= 48);
        let subgroups = group.subgroups().unwrap();
        let characters: Vec<_> = subgroups
            .iter()
            .map(|u| perm_character(group, u).unwrap())
            .collect();

        // fixed-point counting agrees with the conjugation-counting formula
        for (u, chi) in subgroups.iter().zip(&characters) {
            for g in group.elements() {
                assert_eq!(
                    chi.value(g).unwrap(),
                    frobenius_value(group, u, g),
                    "oracle mismatch in {} at {} for U = {}",
                    group.label(),
                    g,
                    u.label()
                );
                value_checks += 1;
            }
        }

        // classwise equality of characters is pointwise equality
        for i in 0..characters.len() {
            for j in (i + 1)..characters.len() {
                let classwise = characters[i].equal(&characters[j]).unwrap();
                let pointwise = group
                    .elements()
                    .iter()
                    .all(|g| characters[i].value(g).unwrap() == characters[j].value(g).unwrap());
                assert_eq!(classwise, pointwise);
                pair_checks += 1;
            }
        }
    }
    pass(
        6,
        "oracle equivalence",
        &format!("{value_checks} value comparisons, {pair_checks} pair comparisons"),
    );
}

#[test]
fn criterion_7_dual_order_computation() {
    let entries = catalog_entries();
    for entry in &entries {
        let group = group_by_name(&entry.name).unwrap();
        let chain = StabilizerChain::from_generators(group.degree(), group.generators());
        assert_eq!(
            group.order() as u128,
            chain.order(),
            "order mismatch for {}",
            entry.name
        );
    }
    pass(
        7,
        "dual order computation",
        &format!(
            "element enumeration and stabilizer chain agree on all {} catalog groups",
            entries.len()
        ),
    );
}

#[test]
fn criterion_8_deterministic_reports() {
    let render = || {
        let report = sweep(&universe24(), &SweepCaps::default()).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        serde_json::to_string_pretty(&value).unwrap()
    };
    let first = render();
    let second = render();
    assert_eq!(first, second, "sweep reports differ between runs");
    assert!(first.len() > 2, "report should not be empty");
    pass(
        8,
        "deterministic reports",
        &format!("two sweeps serialized to identical {} bytes", first.len()),
    );
}
