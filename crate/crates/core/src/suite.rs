//! Seeded verification suite over random `(h, phi)` pairs.
//!
//! Every case draws its inputs from its own seed, derived from the suite seed
//! and the case index, so cases can be evaluated in any order and the CSV
//! summary is byte-identical across runs.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::case::{CheckInputs, Precision, Prepared};
use crate::error::Result;
use crate::function::FunctionSpec;
use crate::schwarz::{sample_bounded_spec, sample_schwarz_spec};
use crate::theorems::{InequalityReport, Theorem, Verdict, DEFAULT_TOL};

pub const DEFAULT_CASES: usize = 500;
/// Largest degree of the random outer polynomial `h`.
pub const MAX_H_DEGREE: usize = 16;
pub const MAX_SECTION: usize = 16;
pub const CSV_HEADER: &str = "theorem,r,holds,fails,inconclusive";

/// Theorems run by the suite with the radii at which they are checked.
pub fn suite_radii() -> Vec<(Theorem, Vec<f64>)> {
    let third = 1.0 / 3.0;
    vec![
        (Theorem::Subordination, vec![0.05, 0.15, 0.25, third]),
        (Theorem::QuasiSubordination, vec![0.05, 0.15, 0.25, third]),
        (Theorem::SectionMajorant, vec![0.05, 0.15, 0.25, third]),
        (Theorem::SectionSup, vec![0.1, 0.3, 0.5]),
        (Theorem::Rogosinski, vec![0.1, 0.3, 0.5]),
        (Theorem::Bohr, vec![third]),
        (Theorem::SchwarzMajorant, vec![third]),
        (Theorem::VonNeumannType, vec![0.1, third]),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    /// Extra radius added to every theorem's list.
    pub r_extra: Option<f64>,
    pub precision: Precision,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            cases: DEFAULT_CASES,
            r_extra: None,
            precision: Precision::default(),
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Tally {
    pub holds: usize,
    pub fails: usize,
    pub inconclusive: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.inconclusive
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub theorem: Theorem,
    pub r: f64,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    /// Sorted by theorem name, then radius.
    pub rows: Vec<SuiteRow>,
    /// Failing reports, sorted by theorem name, radius, then case index.
    pub failures: Vec<InequalityReport>,
}

impl SuiteResult {
    pub fn total_fails(&self) -> usize {
        self.rows.iter().map(|r| r.tally.fails).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let t = row.tally;
            writeln!(out, "{},{},{},{},{}", row.theorem, row.r, t.holds, t.fails, t.inconclusive).unwrap();
        }
        out
    }
}

/// Per-case seed; a fixed mixing of the suite seed and the index.
pub fn case_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.gen()
}

/// Polynomial of degree drawn from `0..=max_degree` with coefficients uniform in the unit square.
pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> FunctionSpec {
    let degree = rng.gen_range(0..=max_degree);
    FunctionSpec::Poly(
        (0..=degree)
            .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
            .collect(),
    )
}

/// Inputs of suite case `index`: random `h`, Schwarz `phi`, unit-bounded `f`
/// and `psi`, and a section index `k`.
pub fn case_inputs(seed: u64, index: usize, degree: usize) -> CheckInputs {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, index));
    let h = random_poly(&mut rng, MAX_H_DEGREE);
    let phi = sample_schwarz_spec(rng.gen(), degree);
    let f = sample_bounded_spec(rng.gen(), degree);
    let psi = sample_bounded_spec(rng.gen(), degree);
    CheckInputs {
        h: Some(h),
        phi: Some(phi.into()),
        f: Some(f.into()),
        psi: Some(psi.into()),
        k: Some(rng.gen_range(0..=MAX_SECTION)),
        ..Default::default()
    }
}

fn radii_with_extra(config: &SuiteConfig) -> Vec<(Theorem, Vec<f64>)> {
    let mut plan = suite_radii();
    for (_, rs) in &mut plan {
        if let Some(extra) = config.r_extra {
            if !rs.contains(&extra) {
                rs.push(extra);
            }
        }
        rs.sort_by(f64::total_cmp);
    }
    plan.sort_by_key(|(t, _)| t.name());
    plan
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteResult> {
    let plan = radii_with_extra(config);
    let per_case: Vec<Vec<InequalityReport>> = (0..config.cases)
        .into_par_iter()
        .map(|i| {
            let prepared = Prepared::new(&case_inputs(config.seed, i, config.precision.degree), config.precision)?;
            let mut reports = Vec::new();
            for (theorem, rs) in &plan {
                for &r in rs {
                    reports.push(prepared.evaluate(*theorem, r, config.tol)?);
                }
            }
            Ok(reports)
        })
        .collect::<Result<_>>()?;

    let mut rows: Vec<SuiteRow> = plan
        .iter()
        .flat_map(|(t, rs)| rs.iter().map(|&r| SuiteRow { theorem: *t, r, tally: Tally::default() }))
        .collect();
    let mut failures = vec![Vec::new(); rows.len()];
    for reports in per_case {
        for (slot, rep) in reports.into_iter().enumerate() {
            rows[slot].tally.add(rep.verdict);
            if rep.verdict == Verdict::Fails {
                failures[slot].push(rep);
            }
        }
    }
    Ok(SuiteResult { rows, failures: failures.into_iter().flatten().collect() })
}
