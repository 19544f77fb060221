//! End-to-end acceptance suite. Each criterion prints a single
//! `criterion N (...): PASS` line on success; a failure panics with context.

use std::collections::BTreeSet;
use std::process::Command;

use sameorder::catalog::builtin_catalog;
use sameorder::group::Bounds;
use sameorder::structure;
use sameorder::verify::{self, CheckId};
use sameorder::{named, spectra, FiniteGroup};

fn report(n: usize, what: &str, ok: bool) {
    println!(
        "criterion {n} ({what}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} ({what}) failed");
}

fn bounds() -> Bounds {
    Bounds::default()
}

#[test]
fn criterion_1_quaternion_alpha() {
    let q8 = named::quaternion(8).unwrap();
    let alpha = spectra::same_order_type(&q8);
    let expected: BTreeSet<u64> = [1, 6].into_iter().collect();
    report(1, "alpha(Q8) = {1, 6}", alpha.sizes() == &expected);
}

#[test]
fn criterion_2_alpha_singleton_groups() {
    let bounds = bounds();
    let mut singleton_ids = Vec::new();
    for entry in builtin_catalog() {
        if entry.expected_order > 16 {
            continue;
        }
        let g = entry.spec.build(&bounds).unwrap();
        let alpha = spectra::same_order_type(&g);
        if alpha.sizes().iter().copied().collect::<Vec<_>>() == [1] {
            singleton_ids.push(entry.id.clone());
        }
    }
    singleton_ids.sort();
    singleton_ids.dedup();
    report(
        2,
        "only 1 and Z2 have alpha = {1} among orders <= 16",
        singleton_ids == ["Z1", "Z2"],
    );
}

#[test]
fn criterion_3_multiplicativity_sweep() {
    let entries = builtin_catalog();
    let report_ = verify::sweep(
        &entries,
        &[CheckId::Lemma21, CheckId::Cor22],
        &bounds(),
        512,
    );
    let summary = &report_.summary;
    let lemma = &summary.tallies["lemma21"];
    let cor = &summary.tallies["cor22"];
    let ok = summary.findings.is_empty()
        && summary.construction_errors.is_empty()
        && lemma.failed == 0
        && cor.failed == 0
        && lemma.passed > 0;
    report(
        3,
        "coprime multiplicativity on nilpotent groups <= 512, zero failures",
        ok,
    );
}

#[test]
fn criterion_4_pi_bounded_by_alpha_in_nilpotent() {
    let entries = builtin_catalog();
    let sweep = verify::sweep(&entries, &[CheckId::Thm23], &bounds(), 512);
    let tally = &sweep.summary.tallies["thm23"];
    let sweep_ok = sweep.summary.findings.is_empty() && tally.failed == 0 && tally.passed > 0;

    let z6 = named::cyclic(6).unwrap();
    let z30 = named::cyclic(30).unwrap();
    let z6_ok = structure::prime_divisors(&z6).len() == 2
        && spectra::same_order_type(&z6).len() == 2;
    let z30_ok = structure::prime_divisors(&z30).len() == 3
        && spectra::same_order_type(&z30).len() == 4;

    report(
        4,
        "|pi| <= |alpha| on nilpotent groups, incl. Z6 and Z30",
        sweep_ok && z6_ok && z30_ok,
    );
}

#[test]
fn criterion_5_shen_sweep_full_catalog() {
    let entries = builtin_catalog();
    let sweep = verify::sweep(&entries, &[CheckId::Shen], &bounds(), 200);
    let tally = &sweep.summary.tallies["shen"];
    let lib_ok = sweep.summary.findings.is_empty()
        && sweep.summary.construction_errors.is_empty()
        && tally.failed == 0
        && tally.skipped == 0
        && tally.passed == sweep.summary.groups_examined;

    let status = Command::new(env!("CARGO_BIN_EXE_sameorder"))
        .args(["sweep", "--check", "shen", "--max-order", "200"])
        .status()
        .expect("spawn sameorder");
    report(
        5,
        "zero |pi| > |alpha| violations, order <= 200, exit 0",
        lib_ok && status.code() == Some(0),
    );
}

#[test]
fn criterion_6_minimal_non_y2_witnesses() {
    let entries = builtin_catalog();
    let sweep = verify::sweep(&entries, &[CheckId::Thm31], &bounds(), 100);
    let tally = &sweep.summary.tallies["thm31"];
    let witnesses: BTreeSet<&str> = sweep
        .summary
        .minimal_non_y2_witnesses
        .iter()
        .map(|s| s.as_str())
        .collect();
    // every witness passed the full conclusion + invariant battery iff there
    // are no thm31 findings
    for finding in &sweep.summary.findings {
        println!(
            "criterion 6 counterexample: {} (Frobenius-or-2-Frobenius conclusion fails): {}",
            finding.group_id, finding.detail
        );
    }
    let ok = witnesses.contains("S3")
        && witnesses.contains("A4")
        && tally.failed == 0
        && sweep.summary.findings.is_empty();
    report(
        6,
        "minimal non-Y2 search finds S3 and A4, all witnesses verified",
        ok,
    );
}

#[test]
fn criterion_7_divisibility_everywhere() {
    let entries = builtin_catalog();
    let sweep = verify::sweep(
        &entries,
        &[CheckId::TotientDivides, CheckId::FrobeniusDivisibility],
        &bounds(),
        200,
    );
    let tot = &sweep.summary.tallies["totient_divides"];
    let frob = &sweep.summary.tallies["frobenius_divisibility"];
    let ok = sweep.summary.findings.is_empty()
        && tot.failed == 0
        && frob.failed == 0
        && tot.passed == sweep.summary.groups_examined
        && frob.passed == sweep.summary.groups_examined;
    report(
        7,
        "totient(n) | S_n and n | #nth-roots on all groups <= 200",
        ok,
    );
}

/// Order of element `i` computed without the power-iteration helper: walk the
/// right-multiplication orbit of the identity.
fn order_by_orbit(g: &FiniteGroup, i: usize) -> u64 {
    let mut x = i;
    let mut steps = 1u64;
    while x != 0 {
        x = g.mul(x, i);
        steps += 1;
    }
    steps
}

fn oracle_order_class_map(g: &FiniteGroup) -> std::collections::BTreeMap<u64, u64> {
    let mut map = std::collections::BTreeMap::new();
    for i in 0..g.size() {
        *map.entry(order_by_orbit(g, i)).or_insert(0) += 1;
    }
    map
}

/// Close an element set under multiplication using only the raw table.
fn closure_of(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; g.size()];
    in_set[0] = true;
    let mut members = vec![0];
    let mut queue: Vec<usize> = Vec::new();
    for &s in seed {
        if !in_set[s] {
            in_set[s] = true;
            members.push(s);
            queue.push(s);
        }
    }
    // repeatedly multiply every known pair until stable
    loop {
        let mut added = false;
        let snapshot = members.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = g.mul(a, b);
                if !in_set[c] {
                    in_set[c] = true;
                    members.push(c);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    members.sort_unstable();
    members
}

/// Every subgroup of a group of order <= 24 is generated by at most 4
/// elements (the worst case here is the elementary abelian group of order
/// 16), so subset closures of size <= 4 enumerate the whole lattice.
fn oracle_all_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.size();
    let mut found = BTreeSet::new();
    found.insert(closure_of(g, &[]));
    for a in 1..n {
        found.insert(closure_of(g, &[a]));
        for b in (a + 1)..n {
            found.insert(closure_of(g, &[a, b]));
            for c in (b + 1)..n {
                found.insert(closure_of(g, &[a, b, c]));
                for d in (c + 1)..n {
                    found.insert(closure_of(g, &[a, b, c, d]));
                }
            }
        }
    }
    found
}

#[test]
fn criterion_8_oracle_equivalence() {
    let bounds = bounds();
    let entries = builtin_catalog();

    let mut order_checked = 0;
    // stride through the catalog so the sample spans every family
    for entry in entries
        .iter()
        .filter(|e| e.expected_order <= 500)
        .step_by(11)
    {
        let g = entry.spec.build(&bounds).unwrap();
        let ours = spectra::order_class_map(&g);
        assert_eq!(
            ours.entries(),
            &oracle_order_class_map(&g),
            "order class mismatch on {}",
            entry.id
        );
        order_checked += 1;
    }

    let mut lattice_checked = 0;
    for entry in entries.iter().filter(|e| e.expected_order <= 24) {
        let g = entry.spec.build(&bounds).unwrap();
        let lattice = structure::all_subgroups(&g, &bounds).unwrap();
        let ours: BTreeSet<Vec<usize>> = lattice
            .subgroups()
            .iter()
            .map(|h| h.members().to_vec())
            .collect();
        assert_eq!(
            ours,
            oracle_all_subgroups(&g),
            "subgroup lattice mismatch on {}",
            entry.id
        );
        lattice_checked += 1;
    }

    report(
        8,
        "order-class and subgroup-lattice oracles agree",
        order_checked >= 20 && lattice_checked > 0,
    );
}

#[test]
fn criterion_9_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "8"] {
        let path = dir.path().join(format!("report-{jobs}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_sameorder"))
            .args([
                "sweep",
                "--check",
                "shen,thm23,totient_divides",
                "--max-order",
                "120",
                "--jobs",
                jobs,
                "--out",
            ])
            .arg(&path)
            .status()
            .expect("spawn sameorder");
        assert_eq!(status.code(), Some(0), "sweep with --jobs {jobs}");
        outputs.push(std::fs::read(&path).unwrap());
    }
    report(
        9,
        "sweep reports byte-identical across --jobs 1 and --jobs 8",
        outputs[0] == outputs[1],
    );
}
