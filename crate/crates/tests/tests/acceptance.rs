use std::process::ExitCode;
use std::time::Instant;

use cube_census::census::Census;
use cube_census::cycle_index::{hypercube_cycle_index, substitute_two_colors, CycleIndex};
use cube_census::group::{GroupAction, SignedPermutation};
use cube_census::hyperplane::{
    canonicalize, cycle_index_burnside, cycle_index_symbolic, describe_stabilizer,
    enumerate_spanned, stabilizer_elements, GeneralHyperplane,
};
use cube_census::oracle::{
    brute_census, brute_subset_orbits, verify_dimension_witness, verify_intersection_bound,
    DEFAULT_BUDGET,
};
use cube_census::reference;
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn mismatches(pairs: impl IntoIterator<Item = (String, BigInt, BigInt)>) -> Vec<String> {
    pairs
        .into_iter()
        .filter(|(_, want, got)| want != got)
        .map(|(what, want, got)| format!("{what} expected {want}, computed {got}"))
        .collect()
}

fn verdict(ok: String, bad: Vec<String>) -> Outcome {
    if bad.is_empty() {
        Ok(ok)
    } else {
        Err(bad.join("; "))
    }
}

fn c1() -> Outcome {
    let bad: Vec<String> = (2..=6)
        .filter(|&n| hypercube_cycle_index(n) != reference::hypercube_listing(n).unwrap())
        .map(|n| format!("Z_{n} differs from its listing"))
        .collect();
    verdict("Z_2..Z_6 equal the listings".into(), bad)
}

fn c2() -> Outcome {
    let table = Census::new(4, false)
        .and_then(|c| c.assemble_table(None))
        .map_err(|e| e.to_string())?;
    let want = [17u64, 40, 54, 72, 56, 50, 27, 19, 6, 4, 1, 1];
    let bad = mismatches((5..=16).map(|k| {
        let got = table.f(k).cloned().unwrap_or_default();
        (format!("F_4({k})"), BigInt::from(want[k - 5]), got)
    }));
    verdict("F_4(5..16) exact".into(), bad)
}

fn c3() -> Outcome {
    let brute = brute_census(4).map_err(|e| e.to_string())?;
    let table = Census::new(4, false)
        .and_then(|c| c.assemble_table(None))
        .map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    for row in &table.rows {
        pairs.push((
            format!("A_4({})", row.k),
            BigInt::from(brute.classes[row.k]),
            row.a.clone(),
        ));
        pairs.push((
            format!("F_4({})", row.k),
            BigInt::from(brute.full_dimensional[row.k]),
            row.f.clone().unwrap_or_default(),
        ));
    }
    let rows = table.rows.len();
    verdict(
        format!("brute force agrees on all {rows} rows"),
        mismatches(pairs),
    )
}

fn c4() -> Outcome {
    let census = Census::new(5, false).map_err(|e| e.to_string())?;
    let table = census
        .assemble_range(9, 32, None)
        .map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    for (k, v) in reference::published_f(5).into_iter().filter(|r| r.0 >= 9) {
        pairs.push((
            format!("F_5({k})"),
            v,
            table.f(k).cloned().unwrap_or_default(),
        ));
    }
    for (k, v) in [(9, 8781u64), (16, 159110), (17, 158658), (32, 1)] {
        pairs.push((
            format!("spot F_5({k})"),
            BigInt::from(v),
            table.f(k).cloned().unwrap_or_default(),
        ));
    }
    for &(h, rows) in reference::published_breakdown(5) {
        let i = GeneralHyperplane::parse(5, h)
            .and_then(|g| census.index_of(&g))
            .map_err(|e| e.to_string())?;
        for &(k, v) in rows {
            let got = census.n_partial_mid(i, k).map_err(|e| e.to_string())?;
            pairs.push((format!("N_{h}({k})"), BigInt::from(v), got));
        }
    }
    let mut bad = mismatches(pairs);
    if !bad.is_empty() {
        for e in reference::ERRATA.iter().filter(|e| e.n == 5) {
            bad.push(format!(
                "printed listings give F_5({}) = {}",
                e.k,
                reference::erratum_evidence(e)
            ));
        }
    }
    verdict("F_5(9..32) and N columns exact".into(), bad)
}

fn c5() -> Outcome {
    let census = Census::new(6, false).map_err(|e| e.to_string())?;
    let table = census
        .assemble_range(17, 64, None)
        .map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    for (k, v) in reference::published_f(6).into_iter().filter(|r| r.0 >= 17) {
        pairs.push((
            format!("F_6({k})"),
            v,
            table.f(k).cloned().unwrap_or_default(),
        ));
    }
    for (k, v) in [
        (17, 30063520396u64),
        (32, 39785643746724),
        (33, 38580161986426),
        (64, 1),
    ] {
        pairs.push((
            format!("spot F_6({k})"),
            BigInt::from(v),
            table.f(k).cloned().unwrap_or_default(),
        ));
    }
    verdict("F_6(17..64) exact".into(), mismatches(pairs))
}

fn c6() -> Outcome {
    let census = Census::new(6, false).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let want = [290159817u64, 1051410747, 3491461629, 10665920350];
    for k in 13..=16 {
        let got = census.f_low(k).map_err(|e| e.to_string())?;
        if got != BigInt::from(want[k - 13]) {
            bad.push(format!(
                "F_6({k}) expected {}, computed {got}",
                want[k - 13]
            ));
            if let Some(e) = reference::erratum(6, k) {
                bad.push(format!(
                    "printed F_6(48) and listings give {}",
                    reference::erratum_evidence(e)
                ));
            }
        }
    }
    let labels: Vec<(&str, &str)> = reference::HYPERPLANE_LISTINGS
        .iter()
        .filter(|l| l.n == 6)
        .map(|l| (l.label, l.hyperplane))
        .collect();
    let mut nonempty = Vec::new();
    for (i, h) in census.representatives().iter().enumerate() {
        let (e1, _) = census.e_sets(i, 13).map_err(|e| e.to_string())?;
        if e1.is_empty() {
            continue;
        }
        let label = labels
            .iter()
            .find(|(_, t)| {
                GeneralHyperplane::parse(6, t)
                    .and_then(|g| canonicalize(&g))
                    .is_ok_and(|c| &c == h)
            })
            .map_or(h.to_string(), |l| l.0.to_string());
        nonempty.push(label);
    }
    if nonempty != ["H6^1", "H6^2"] {
        bad.push(format!(
            "E nonempty for {} instead of H6^1, H6^2",
            nonempty.join(", ")
        ));
    }

    let h2 = GeneralHyperplane::parse(6, "1,1=1")
        .and_then(|g| census.index_of(&g))
        .map_err(|e| e.to_string())?;
    let (e1, e2) = census.e_sets(h2, 13).map_err(|e| e.to_string())?;
    let action = GroupAction::hyperoctahedral(6);
    let v = census.representatives()[h2].vertices();
    let mut sections = Vec::new();
    for w in [reference::W1_H62, reference::W2_H62] {
        let w = SignedPermutation::from_cycles(6, w).map_err(|e| e.to_string())?;
        let image = w.act_on_set(&v).map_err(|e| e.to_string())?;
        sections.push(action.canonical(&v.intersection(&image)));
    }
    let mut reps: Vec<_> = e2.iter().map(|ic| ic.representative).collect();
    reps.sort();
    sections.sort();
    if reps != sections {
        bad.push("listed witnesses do not give the E_2 classes of H6^2".into());
    }
    let (den, text) = reference::LOCAL_H62_W2;
    let listed = CycleIndex::from_scaled(den, text).map_err(|e| e.to_string())?;
    let mut found = false;
    for ic in &e1 {
        let (local, _) = census
            .intersection_cycle_indices(ic)
            .map_err(|e| e.to_string())?;
        found |= local == listed;
    }
    if !found {
        bad.push("no section of H6^2 has the listed local index".into());
    }
    verdict(
        "F_6(13..16), E-set structure and local index exact".into(),
        bad,
    )
}

fn all_representatives(
) -> Result<Vec<(usize, Vec<cube_census::hyperplane::SpannedHyperplane>)>, String> {
    let mut out = Vec::new();
    for n in 4..=6 {
        let census = Census::new(n, false).map_err(|e| e.to_string())?;
        out.push((n, census.representatives().to_vec()));
    }
    Ok(out)
}

fn c7() -> Outcome {
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for (n, reps) in all_representatives()? {
        counts.push(reps.len().to_string());
        for h in &reps {
            let s = cycle_index_symbolic(h).map_err(|e| e.to_string())?;
            let b = cycle_index_burnside(h).map_err(|e| e.to_string())?;
            if s != b {
                bad.push(format!("{h} (n = {n})"));
            }
        }
    }
    verdict(
        format!(
            "symbolic = Burnside on {} representatives",
            counts.join("+")
        ),
        bad,
    )
}

fn c8() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for (n, reps) in all_representatives()? {
        for h in &reps {
            total += 1;
            let want = describe_stabilizer(h).order();
            let got = stabilizer_elements(h).len() as u64;
            if want != got {
                bad.push(format!("{h} (n = {n}) expected {want}, computed {got}"));
            }
        }
    }
    verdict(format!("{total} stabilizer orders exact"), bad)
}

fn c9() -> Outcome {
    let mut bad = Vec::new();
    for (n, count, coeff) in [(4, 6usize, 2u32), (5, 17, 3)] {
        let reps = enumerate_spanned(n, false).map_err(|e| e.to_string())?;
        let max = reps.iter().map(|h| h.max_coeff()).max().unwrap_or(0);
        if reps.len() != count {
            bad.push(format!(
                "Q_{n} classes expected {count}, computed {}",
                reps.len()
            ));
        }
        if max != coeff {
            bad.push(format!("Q_{n} coeff expected {coeff}, computed {max}"));
        }
    }
    if !bad.is_empty() {
        for (t, d) in reference::q5_unspanned() {
            bad.push(format!("printed {t} has affine dimension {d}"));
        }
    }
    verdict("6 classes (coeff 2) and 17 classes (coeff 3)".into(), bad)
}

fn c10() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=6 {
        for s in 1..=n {
            let r = verify_intersection_bound(n, s, 10_000, 0).map_err(|e| e.to_string())?;
            if !r.passed() {
                bad.push(format!("bound fails for n = {n}, s = {s}"));
            }
        }
        let a = substitute_two_colors(&hypercube_cycle_index(n))
            .integer_coefficients()
            .map_err(|e| e.to_string())?;
        let m = a.len() - 1;
        if (0..=m).any(|k| a[k] != a[m - k]) {
            bad.push(format!("A_{n} not symmetric"));
        }
    }
    let w = verify_dimension_witness(4).map_err(|e| e.to_string())?;
    if w.violations != 0 {
        bad.push(format!("{} dimension witness violations", w.violations));
    }
    verdict(
        "bound on 10000 samples per (n, s), symmetry, witness".into(),
        bad,
    )
}

fn c11() -> Outcome {
    let census = Census::new(5, false).map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    for (i, h) in census.representatives().iter().enumerate() {
        let group = stabilizer_elements(h);
        for k in 9..=16 {
            let brute = brute_subset_orbits(&h.vertices(), &group, k, DEFAULT_BUDGET)
                .map_err(|e| e.to_string())?;
            let got = census.n_partial_mid(i, k).map_err(|e| e.to_string())?;
            pairs.push((format!("{h} at k = {k}"), BigInt::from(brute), got));
        }
    }
    let checked = pairs.len();
    verdict(format!("{checked} local counts agree"), mismatches(pairs))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("cycle indices", c1),
        ("F_4 complete", c2),
        ("oracle equivalence n = 4", c3),
        ("F_5 above 8", c4),
        ("F_6 high and mid", c5),
        ("F_6 low regime", c6),
        ("symbolic vs Burnside", c7),
        ("stabilizer orders", c8),
        ("spanned-hyperplane enumeration", c9),
        ("property suite", c10),
        ("per-hyperplane oracle", c11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
