//! Verification report: each check records what was expected, what was
//! computed and whether they agree.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::census::Census;
use crate::cycle_index::{hypercube_cycle_index, substitute_two_colors};
use crate::error::Result;
use crate::group::MAX_DIM;
use crate::hyperplane::{
    canonicalize, cycle_index_burnside, cycle_index_symbolic, describe_stabilizer,
    stabilizer_elements, GeneralHyperplane,
};
use crate::oracle::{
    brute_census, brute_subset_orbits, verify_dimension_witness, verify_intersection_bound,
};
use crate::reference;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded disagreement with a published value that does not count
    /// as a failure.
    Note,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    fn check(
        &mut self,
        name: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            name: name.into(),
            expected,
            computed,
            status,
        });
    }

    fn note(
        &mut self,
        name: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: Status::Note,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (n <= {}, seed {}, {} samples)",
            self.suite, self.n_max, self.seed, self.samples
        )?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Note => "NOTE",
            };
            if c.status == Status::Pass {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(
                    f,
                    "{tag} {}: expected {}, computed {}",
                    c.name, c.expected, c.computed
                )?;
            }
        }
        let total = self.checks.len();
        write!(f, "{} of {total} checks failed", self.failures())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    CycleIndex,
    Hyperplanes,
    Oracle,
    Bounds,
    Census,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "cycle-index",
        "hyperplanes",
        "oracle",
        "bounds",
        "census",
        "all",
    ];

    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "cycle-index" => Suite::CycleIndex,
            "hyperplanes" => Suite::Hyperplanes,
            "oracle" => Suite::Oracle,
            "bounds" => Suite::Bounds,
            "census" => Suite::Census,
            "all" => Suite::All,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Suite::CycleIndex => "cycle-index",
            Suite::Hyperplanes => "hyperplanes",
            Suite::Oracle => "oracle",
            Suite::Bounds => "bounds",
            Suite::Census => "census",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

pub fn run(suite: Suite, n_max: usize, seed: u64, samples: usize) -> Result<Report> {
    let n_max = n_max.min(MAX_DIM);
    let mut report = Report {
        suite: suite.name().into(),
        n_max,
        seed,
        samples,
        checks: Vec::new(),
    };
    if suite.includes(Suite::CycleIndex) {
        cycle_indices(&mut report, n_max)?;
    }
    if suite.includes(Suite::Hyperplanes) {
        hyperplanes(&mut report, n_max)?;
    }
    if suite.includes(Suite::Oracle) {
        oracle(&mut report, n_max)?;
    }
    if suite.includes(Suite::Bounds) {
        bounds(&mut report, n_max, seed, samples)?;
    }
    if suite.includes(Suite::Census) {
        census(&mut report, n_max)?;
    }
    Ok(report)
}

fn cycle_indices(report: &mut Report, n_max: usize) -> Result<()> {
    if n_max >= 1 {
        let listed = reference::hypercube_listing(1).expect("Z_1 is listed");
        report.note(
            "Z_1 as listed",
            listed.to_scaled_string(),
            hypercube_cycle_index(1).to_scaled_string(),
        );
    }
    for n in 2..=n_max.min(6) {
        let listed = reference::hypercube_listing(n).expect("listed for n <= 6");
        report.check(
            format!("Z_{n}"),
            listed.to_scaled_string(),
            hypercube_cycle_index(n).to_scaled_string(),
        );
    }
    for listing in reference::HYPERPLANE_LISTINGS
        .iter()
        .filter(|l| l.n <= n_max)
    {
        let h = canonicalize(&GeneralHyperplane::parse(listing.n, listing.hyperplane)?)?;
        report.check(
            format!("Z of {} ({h}, n = {})", listing.label, listing.n),
            listing.cycle_index().to_scaled_string(),
            cycle_index_symbolic(&h)?.to_scaled_string(),
        );
    }
    Ok(())
}

fn hyperplanes(report: &mut Report, n_max: usize) -> Result<()> {
    for (n, count, coeff) in [(4, 6, 2), (5, 17, 3)] {
        if n > n_max {
            continue;
        }
        let reps = Census::new(n, false)?.representatives().to_vec();
        let max = reps.iter().map(|h| h.max_coeff()).max().unwrap_or(0);
        if n == 5 {
            report.note("spanned classes of Q_5 as printed", count, reps.len());
            let unspanned = reference::q5_unspanned();
            report.check(
                "printed Q_5 equations with affine dimension below 4",
                2,
                unspanned.len(),
            );
            let mut printed = Vec::new();
            for t in reference::Q5_PUBLISHED {
                if unspanned.iter().all(|u| u.0 != *t) {
                    printed.push(canonicalize(&GeneralHyperplane::parse(5, t)?)?);
                }
            }
            printed.sort();
            let mut ours = reps.clone();
            ours.sort();
            report.check(
                "spanned classes of Q_5 = printed list less unspanned",
                printed.len(),
                if printed == ours { reps.len() } else { 0 },
            );
        } else {
            report.check(format!("spanned classes of Q_{n}"), count, reps.len());
        }
        report.check(format!("largest coefficient in Q_{n}"), coeff, max);
    }
    for n in 2..=n_max.min(6) {
        let census = Census::new(n, false)?;
        for h in census.representatives() {
            let symbolic = cycle_index_symbolic(h)?;
            let burnside = cycle_index_burnside(h)?;
            report.check(
                format!("symbolic Z = Burnside Z for {h} (n = {n})"),
                burnside.to_scaled_string(),
                symbolic.to_scaled_string(),
            );
            report.check(
                format!("|F(H)| for {h} (n = {n})"),
                describe_stabilizer(h).order(),
                stabilizer_elements(h).len(),
            );
        }
    }
    Ok(())
}

fn oracle(report: &mut Report, n_max: usize) -> Result<()> {
    for n in 1..=n_max.min(4) {
        let brute = brute_census(n)?;
        let table = Census::new(n, false)?.assemble_table(None)?;
        for row in &table.rows {
            report.check(
                format!("brute A_{n}({})", row.k),
                brute.classes[row.k],
                &row.a,
            );
            let f = row.f.as_ref().map_or("?".into(), BigInt::to_string);
            report.check(
                format!("brute F_{n}({})", row.k),
                brute.full_dimensional[row.k],
                f,
            );
        }
    }
    if n_max >= 4 {
        let w = verify_dimension_witness(4)?;
        report.check(
            "dimension witness on Q_4",
            "0 violations",
            format!("{} violations", w.violations),
        );
    }
    if n_max >= 5 {
        let census = Census::new(5, false)?;
        for (i, h) in census.representatives().iter().enumerate() {
            let group = stabilizer_elements(h);
            for k in 9..=16 {
                let brute =
                    brute_subset_orbits(&h.vertices(), &group, k, crate::oracle::DEFAULT_BUDGET)?;
                report.check(
                    format!("local classes of {h} at k = {k}"),
                    brute,
                    census.n_partial_mid(i, k)?,
                );
            }
        }
    }
    Ok(())
}

fn bounds(report: &mut Report, n_max: usize, seed: u64, samples: usize) -> Result<()> {
    for n in 1..=n_max.min(6) {
        for s in 1..=n {
            let b = verify_intersection_bound(n, s, samples, seed)?;
            report.check(
                format!(
                    "at most 2^{} vertices on {s} independent hyperplanes of Q_{n}",
                    n - s
                ),
                format!("<= {} with a witness attaining it", b.bound),
                if b.passed() {
                    format!("<= {} with a witness attaining it", b.bound)
                } else {
                    format!("max {}, sharp witness {}", b.max_vertices, b.sharp_witness)
                },
            );
        }
        let a = substitute_two_colors(&hypercube_cycle_index(n)).integer_coefficients()?;
        let symmetric = (0..a.len()).all(|k| a[k] == a[a.len() - 1 - k]);
        report.check(format!("A_{n}(k) = A_{n}(2^{n} - k)"), true, symmetric);
    }
    Ok(())
}

fn census(report: &mut Report, n_max: usize) -> Result<()> {
    for n in 4..=n_max.min(6) {
        let census = Census::new(n, false)?;
        let published = reference::published_f(n);
        let lo = published.iter().map(|r| r.0).min().unwrap_or(0);
        let table = census.assemble_range(lo, 1 << n, None)?;
        for (k, value) in published {
            let computed = table.f(k).map_or("?".into(), BigInt::to_string);
            match reference::erratum(n, k) {
                Some(e) => {
                    report.note(format!("F_{n}({k}) as printed"), value, &computed);
                    report.check(
                        format!("F_{n}({k}) from listed data"),
                        reference::erratum_evidence(e),
                        &computed,
                    );
                }
                None => report.check(format!("F_{n}({k})"), value, computed),
            }
        }
        for &(h, rows) in reference::published_breakdown(n) {
            let i = census.index_of(&GeneralHyperplane::parse(n, h)?)?;
            let label = &census.representatives()[i];
            for &(k, v) in rows {
                let computed = if census.regime(k) == crate::census::Regime::Low {
                    census.n_partial_low(i, k)?
                } else {
                    census.n_partial_mid(i, k)?
                };
                let name = format!("N({k}) for {label} in Q_{n}");
                match reference::cell_erratum(n, h, k) {
                    Some(e) => {
                        report.note(format!("{name} as printed"), v, &computed);
                        let (from_index, from_row) = reference::cell_erratum_evidence(e);
                        report.check(format!("{name} from listed index"), from_index, &computed);
                        report.check(format!("{name} from printed row"), from_row, &computed);
                    }
                    None => report.check(name, v, computed),
                }
            }
        }
        if n == 6 {
            for h in reference::N6_SMALL {
                let i = census.index_of(&GeneralHyperplane::parse(6, h)?)?;
                let label = &census.representatives()[i];
                report.check(
                    format!("N(13) for {label} in Q_6"),
                    2,
                    census.n_partial_low(i, 13)?,
                );
                report.check(
                    format!("N(14) for {label} in Q_6"),
                    1,
                    census.n_partial_low(i, 14)?,
                );
            }
            for k in 13..=16 {
                report.check(
                    format!("H_6({k}) closed form"),
                    census.h_low_closed_form(k)?,
                    census.h_low(k)?,
                );
            }
        }
    }
    Ok(())
}
