//! Self-verification suites: each suite re-derives a family of identities
//! two ways (enumeration against closed form, symmetric-function route
//! against direct orbit counting) and reports one line per check.
//!
//! Independent checks run on a small worker pool; the report order is fixed
//! by construction, not by completion.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use parkhedron_core::arith::binomial;
use parkhedron_core::parking::CmnSpec;
use parkhedron_core::partition::{
    dominates, fixed_rearrangement_count, partitions_of, CycleType, Partition,
};
use parkhedron_core::permutahedron::{
    delta, fixed_point_count, fixed_point_formula, frobenius_gamma, standard_vertex,
    trimmed_to_delta, PermutahedronSpec,
};
use parkhedron_core::{classical, LatticePoint, SymFunc};
use serde_json::{json, Value};

/// One verified identity: what was checked, for which parameters, and the
/// two sides that had to coincide.
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// A suite's outcome; overall pass iff every check passes.
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "[{tag}] {} ({}): expected {}, got {}",
                c.name, c.params, c.expected, c.actual
            );
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            out,
            "verify {}: {} ({} checks, {} failed)",
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        );
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "pass": self.pass(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "params": c.params,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })).collect::<Vec<_>>(),
        })
    }
}

struct Outcome {
    expected: String,
    actual: String,
    pass: bool,
}

impl Outcome {
    fn eq<T: PartialEq + std::fmt::Display>(expected: T, actual: T) -> Outcome {
        Outcome {
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn property(statement: &str, violation: Option<String>) -> Outcome {
        Outcome {
            expected: statement.to_string(),
            actual: violation.clone().unwrap_or_else(|| statement.to_string()),
            pass: violation.is_none(),
        }
    }

    fn skipped(reason: &str) -> Outcome {
        Outcome {
            expected: "skipped".to_string(),
            actual: format!("skipped: {reason}"),
            pass: true,
        }
    }
}

struct Check {
    name: String,
    params: String,
    run: Box<dyn FnOnce() -> Outcome + Send>,
}

fn check(
    name: &str,
    params: String,
    run: impl FnOnce() -> Outcome + Send + 'static,
) -> Check {
    Check {
        name: name.to_string(),
        params,
        run: Box::new(run),
    }
}

/// Worker count: `PARKHEDRON_THREADS` if set to a positive integer, the
/// available parallelism otherwise (0 or unset or unparsable mean auto).
pub fn thread_count() -> usize {
    let auto = || {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    };
    match std::env::var("PARKHEDRON_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
    {
        Some(0) | None => auto(),
        Some(k) => k,
    }
}

fn run_parallel(checks: Vec<Check>, workers: usize) -> Vec<CheckResult> {
    let n = checks.len();
    let tasks: Vec<Mutex<Option<Check>>> = checks.into_iter().map(|c| Mutex::new(Some(c))).collect();
    let results: Vec<Mutex<Option<CheckResult>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers.max(1).min(n.max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let task = tasks[i].lock().unwrap().take().expect("each task runs once");
                let outcome = (task.run)();
                *results[i].lock().unwrap() = Some(CheckResult {
                    name: task.name,
                    params: task.params,
                    expected: outcome.expected,
                    actual: outcome.actual,
                    pass: outcome.pass,
                });
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("all tasks completed"))
        .collect()
}

/// The verification suites exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Words,
    Orbits,
    Permutahedron,
    Restriction,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Orbits => "orbits",
            Suite::Permutahedron => "permutahedron",
            Suite::Restriction => "restriction",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite, max_n: u32, max_m: u32) -> VerifyReport {
    let mut checks = Vec::new();
    match suite {
        Suite::Words => words_checks(&mut checks, max_n, max_m),
        Suite::Orbits => orbits_checks(&mut checks, max_n, max_m),
        Suite::Permutahedron => permutahedron_checks(&mut checks, max_n),
        Suite::Restriction => restriction_checks(&mut checks, max_n),
        Suite::All => {
            words_checks(&mut checks, max_n, max_m);
            orbits_checks(&mut checks, max_n, max_m);
            permutahedron_checks(&mut checks, max_n);
            restriction_checks(&mut checks, max_n);
        }
    }
    let results = run_parallel(checks, thread_count());
    VerifyReport {
        suite: suite.name().to_string(),
        checks: results,
    }
}

/// Words of the balanced set that would have to be enumerated for (m, n);
/// used to skip parameter pairs that would not finish interactively.
fn word_space(m: u32, n: u32) -> BigUint {
    binomial(((m + 1) * n - 1) as u64, (m * n) as u64)
}

const WORD_SPACE_BOUND: u64 = 4_000_000;

fn params(m: u32, n: u32) -> String {
    format!("m={m}, n={n}")
}

fn words_checks(checks: &mut Vec<Check>, max_n: u32, max_m: u32) {
    for m in 1..=max_m {
        for n in 2..=max_n {
            let too_big = word_space(m, n) > BigUint::from(WORD_SPACE_BOUND);

            checks.push(check("words/primitivity", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let violation = spec
                    .enumerate_b()
                    .unwrap()
                    .find(|w| !w.is_primitive().unwrap())
                    .map(|w| format!("non-primitive word {w}"));
                Outcome::property("every balanced word is primitive", violation)
            }));

            checks.push(check("words/bijection", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let y = spec.enumerate_y();
                let mut images = BTreeSet::new();
                for lambda in &y {
                    let w = spec.partition_to_word(lambda).unwrap();
                    match spec.word_to_partition(&w) {
                        Ok(back) if back == *lambda => {
                            images.insert(w);
                        }
                        Ok(back) => {
                            return Outcome::property(
                                "roundtrip identity and image = B",
                                Some(format!("{lambda} -> {w} -> {back}")),
                            )
                        }
                        Err(e) => {
                            return Outcome::property(
                                "roundtrip identity and image = B",
                                Some(format!("{lambda} -> {w} not in B: {e}")),
                            )
                        }
                    }
                }
                let b: BTreeSet<_> = spec.enumerate_b().unwrap().collect();
                let violation = (images != b).then(|| {
                    format!(
                        "image has {} words, B has {} words",
                        images.len(),
                        b.len()
                    )
                });
                Outcome::property("roundtrip identity and image = B", violation)
            }));

            checks.push(check("words/shift-orbit-size", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let violation = spec
                    .enumerate_y()
                    .iter()
                    .find(|lambda| spec.shift_orbit_sorted(lambda).len() != n as usize)
                    .map(|lambda| format!("orbit of {lambda} has the wrong size"));
                Outcome::property("every sorted shift orbit has n elements", violation)
            }));

            checks.push(check("words/orbit-count-formula", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                Outcome::eq(
                    spec.count_y_formula().unwrap(),
                    BigUint::from(spec.enumerate_y().len()),
                )
            }));

            checks.push(check("words/tuple-count", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let orbit_sum: BigUint =
                    spec.enumerate_y().iter().map(|l| l.orbit_size()).sum();
                if spec.count_c() <= BigUint::from(2_000_000u64) {
                    let streamed = BigUint::from(spec.enumerate_c().count());
                    if streamed != spec.count_c() {
                        return Outcome::eq(spec.count_c(), streamed);
                    }
                }
                Outcome::eq(spec.count_c(), orbit_sum)
            }));

            checks.push(check("words/lyndon-count", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let generated = spec.enumerate_b_lyndon().unwrap();
                let filtered: Vec<_> = spec
                    .enumerate_b()
                    .unwrap()
                    .filter(|w| w.is_lyndon())
                    .collect();
                if generated != filtered {
                    return Outcome::property(
                        "fixed-content generation equals filtering",
                        Some(format!(
                            "generator yields {} words, filter {}",
                            generated.len(),
                            filtered.len()
                        )),
                    );
                }
                Outcome::eq(
                    spec.count_lyndon_formula().unwrap(),
                    BigUint::from(generated.len()),
                )
            }));
        }
    }
}

const DIRECT_ACTION_BOUND: u64 = 5_000;

fn orbits_checks(checks: &mut Vec<Check>, max_n: u32, max_m: u32) {
    for m in 1..=max_m {
        for n in 2..=max_n {
            let too_big = word_space(m, n) > BigUint::from(WORD_SPACE_BOUND);

            checks.push(check("orbits/tiling", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let y: BTreeSet<_> = spec.enumerate_y().into_iter().collect();
                let mut covered = BTreeSet::new();
                for w in spec.enumerate_b_lyndon().unwrap() {
                    let lambda = spec.word_to_partition(&w).unwrap();
                    for member in spec.shift_orbit_sorted(&lambda) {
                        if !covered.insert(member.clone()) {
                            return Outcome::property(
                                "Lyndon shift orbits tile the orbit index set",
                                Some(format!("{member} covered twice")),
                            );
                        }
                    }
                }
                let violation = (covered != y).then(|| {
                    format!("covered {} of {} orbit labels", covered.len(), y.len())
                });
                Outcome::property("Lyndon shift orbits tile the orbit index set", violation)
            }));

            checks.push(check("orbits/class-count", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let total: BigUint = spec
                    .enumerate_b_lyndon()
                    .unwrap()
                    .iter()
                    .map(|w| spec.word_to_partition(w).unwrap().orbit_size())
                    .sum();
                Outcome::eq(spec.count_classes(), total)
            }));

            checks.push(check("orbits/dimension", params(m, n), move || {
                if too_big {
                    return Outcome::skipped("word space too large");
                }
                let spec = CmnSpec::new(m, n).unwrap();
                let frob = spec.frobenius_tau_hat().unwrap();
                let big_n = spec.tuple_len();
                let ones = CycleType::new(Partition::new(vec![1; big_n]));
                let dim = frob.character(&ones).unwrap();
                Outcome::eq(
                    BigInt::from(spec.count_classes()),
                    dim.to_integer(),
                )
            }));

            checks.push(check(
                "orbits/character-consistency",
                params(m, n),
                move || {
                    if too_big {
                        return Outcome::skipped("word space too large");
                    }
                    let spec = CmnSpec::new(m, n).unwrap();
                    let lambdas: Vec<_> = spec
                        .enumerate_b_lyndon()
                        .unwrap()
                        .iter()
                        .map(|w| spec.word_to_partition(w).unwrap())
                        .collect();
                    let p_form = spec.frobenius_tau_hat().unwrap().to_p_basis();
                    let big_n = spec.tuple_len() as u32;
                    let small = spec.count_classes() <= BigUint::from(DIRECT_ACTION_BOUND);
                    let points: Vec<LatticePoint> = if small {
                        spec.class_representatives().unwrap().collect()
                    } else {
                        Vec::new()
                    };
                    for mu in partitions_of(big_n) {
                        let mu = CycleType::new(mu);
                        let character = p_form.character(&mu).unwrap();
                        let bookkeeping: BigUint = lambdas
                            .iter()
                            .map(|l| fixed_rearrangement_count(l, &mu))
                            .sum();
                        if character.to_integer() != BigInt::from(bookkeeping.clone()) {
                            return Outcome::property(
                                "character equals orbit fixed-point count",
                                Some(format!(
                                    "mu = {mu}: character {character}, orbit count {bookkeeping}"
                                )),
                            );
                        }
                        if small {
                            let perm = mu.canonical_permutation();
                            let direct =
                                points.iter().filter(|p| p.permuted(&perm) == **p).count();
                            if BigUint::from(direct) != bookkeeping {
                                return Outcome::property(
                                    "character equals orbit fixed-point count",
                                    Some(format!(
                                        "mu = {mu}: direct action {direct}, orbit count {bookkeeping}"
                                    )),
                                );
                            }
                        }
                    }
                    Outcome::property("character equals orbit fixed-point count", None)
                },
            ));
        }
    }
}

fn permutahedron_checks(checks: &mut Vec<Check>, max_n: u32) {
    for n in 2..=max_n {
        let p = format!("n={n}");

        checks.push(check("permutahedron/lattice-count", p.clone(), move || {
            let spec = PermutahedronSpec::new(delta(n).unwrap());
            Outcome::eq(
                BigUint::from(n).pow(n - 2),
                spec.lattice_point_count(),
            )
        }));

        checks.push(check("permutahedron/h-expansion", p.clone(), move || {
            let spec = PermutahedronSpec::new(delta(n).unwrap());
            let mut mults: Vec<Partition> = spec
                .orbit_reps()
                .iter()
                .map(|rep| rep.multiplicity_partition())
                .collect();
            let parking = CmnSpec::new(1, n).unwrap();
            let mut runs: Vec<Partition> = parking
                .enumerate_b_lyndon()
                .unwrap()
                .iter()
                .map(|w| w.runs_of_ones().unwrap())
                .collect();
            mults.sort();
            runs.sort();
            let violation = (mults != runs).then(|| {
                format!(
                    "multiplicity multiset ({} items) differs from run multiset ({} items)",
                    mults.len(),
                    runs.len()
                )
            });
            Outcome::property(
                "multiplicity partitions match run-length partitions",
                violation,
            )
        }));

        checks.push(check("permutahedron/fixed-points", p.clone(), move || {
            let p_form = frobenius_gamma(n).unwrap().to_p_basis();
            for mu in partitions_of(n) {
                let mu = CycleType::new(mu);
                let count = fixed_point_count(n, &mu).unwrap();
                let formula = fixed_point_formula(n, &mu).unwrap();
                let character = p_form.character(&mu).unwrap();
                if count != formula || character.to_integer() != BigInt::from(count.clone()) {
                    return Outcome::property(
                        "fixed point count = closed formula = character",
                        Some(format!(
                            "mu = {mu}: count {count}, formula {formula}, character {character}"
                        )),
                    );
                }
            }
            Outcome::property("fixed point count = closed formula = character", None)
        }));

        checks.push(check("permutahedron/unique-rep", p.clone(), move || {
            let delta_n = delta(n).unwrap();
            let target_size = delta_n.size();
            let spec = CmnSpec::new(1, n).unwrap();
            for w in spec.enumerate_b_lyndon().unwrap() {
                let lambda = spec.word_to_partition(&w).unwrap();
                let dominated = spec
                    .shift_orbit_sorted(&lambda)
                    .into_iter()
                    .filter(|member| {
                        member.size() == target_size
                            && dominates(&delta_n, member).unwrap()
                    })
                    .count();
                if dominated != 1 {
                    return Outcome::property(
                        "each shift class has exactly one dominated member",
                        Some(format!(
                            "class of {lambda} has {dominated} dominated members"
                        )),
                    );
                }
            }
            Outcome::property("each shift class has exactly one dominated member", None)
        }));

        if n == 3 {
            checks.push(check("permutahedron/dilate-counts", p.clone(), move || {
                let spec = PermutahedronSpec::new(standard_vertex(3));
                let counts: Vec<String> = spec
                    .ehrhart_counts(2)
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                Outcome::eq("1, 7, 19".to_string(), counts.join(", "))
            }));
        }

        if n <= 5 {
            checks.push(check("permutahedron/volume", p.clone(), move || {
                let spec = PermutahedronSpec::new(standard_vertex(n));
                Outcome::eq(
                    BigUint::from(n).pow(n.saturating_sub(2)),
                    spec.normalized_volume().unwrap(),
                )
            }));
        }

        if n <= 7 {
            checks.push(check("permutahedron/trimmed-map", p.clone(), move || {
                let mut parts: Vec<u32> = (0..=n - 2).rev().collect();
                parts.insert(0, n - 2);
                let trimmed = PermutahedronSpec::new(
                    parkhedron_core::PaddedPartition::new(parts),
                );
                let target = PermutahedronSpec::new(delta(n).unwrap());
                let image: BTreeSet<LatticePoint> = trimmed
                    .lattice_points()
                    .map(|pt| trimmed_to_delta(&pt, n))
                    .collect();
                let expected: BTreeSet<LatticePoint> = target.lattice_points().collect();
                if image != expected {
                    return Outcome::property(
                        "reflection is an equivariant lattice bijection",
                        Some(format!(
                            "image has {} points, target {}",
                            image.len(),
                            expected.len()
                        )),
                    );
                }
                let mu = CycleType::new(Partition::new(vec![n]));
                let perm = mu.canonical_permutation();
                let violation = trimmed
                    .lattice_points()
                    .find(|pt| {
                        trimmed_to_delta(&pt.permuted(&perm), n)
                            != trimmed_to_delta(pt, n).permuted(&perm)
                    })
                    .map(|pt| format!("equivariance fails at {pt}"));
                Outcome::property("reflection is an equivariant lattice bijection", violation)
            }));
        }
    }
}

fn restriction_checks(checks: &mut Vec<Check>, max_n: u32) {
    for n in 2..=max_n {
        let p = format!("n={n}");

        checks.push(check("restriction/theorem", p.clone(), move || {
            let restricted = frobenius_gamma(n).unwrap().restrict().unwrap();
            let parking = classical::frobenius_pf(n - 1);
            let violation = (restricted.to_p_basis() != parking.to_p_basis()).then(|| {
                format!("restriction gives {restricted}, parking module is {parking}")
            });
            Outcome::property(
                "restricted lattice module is the parking module",
                violation,
            )
        }));

        checks.push(check("restriction/dimension", p.clone(), move || {
            let k = n - 1;
            let frob = classical::frobenius_pf(k);
            let ones = CycleType::new(Partition::new(vec![1; k as usize]));
            let dim = frob.character(&ones).unwrap();
            Outcome::eq(
                BigInt::from(classical::count_parking_functions(k)),
                dim.to_integer(),
            )
        }));
    }
}
