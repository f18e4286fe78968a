//! The batch commands behind the CLI surface: each returns both a plain-text
//! rendering and a JSON value, or a typed error that maps to an exit code.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use parkhedron_core::parking::CmnSpec;
use parkhedron_core::partition::fixed_rearrangement_count;
use parkhedron_core::permutahedron::{
    delta, fixed_point_count, fixed_point_formula, frobenius_gamma, PermutahedronSpec,
};
use parkhedron_core::{classical, CycleType, Partition, SymFunc};
use serde_json::{json, Value};

use crate::jsonio::symfunc_to_json;

/// Command failure, tagged with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Invalid parameters: exit code 2.
    Usage(String),
    /// Two computation routes disagreed (or a verification failed): exit 1.
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Mismatch(m) => m,
        }
    }
}

/// A command result in both output forms.
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

/// Which module a `frobenius` or `character` invocation talks about.
#[derive(Debug, Clone, Copy)]
pub enum Target {
    TauHat { m: u32, n: u32 },
    Gamma { n: u32 },
    Pf { k: u32 },
}

impl Target {
    fn frobenius(&self) -> Result<SymFunc, CliError> {
        match *self {
            Target::TauHat { m, n } => {
                let spec = spec_for(m, n)?;
                spec.frobenius_tau_hat()
                    .map_err(|e| CliError::Usage(e.to_string()))
            }
            Target::Gamma { n } => {
                frobenius_gamma(n).map_err(|e| CliError::Usage(e.to_string()))
            }
            Target::Pf { k } => {
                if k < 1 {
                    return Err(CliError::Usage("need k >= 1".into()));
                }
                Ok(classical::frobenius_pf(k))
            }
        }
    }

    fn describe(&self) -> String {
        match *self {
            Target::TauHat { m, n } => format!("tau-hat (m={m}, n={n})"),
            Target::Gamma { n } => format!("gamma (n={n})"),
            Target::Pf { k } => format!("pf (k={k})"),
        }
    }
}

fn spec_for(m: u32, n: u32) -> Result<CmnSpec, CliError> {
    CmnSpec::new(m, n).map_err(|e| CliError::Usage(e.to_string()))
}

/// `lyndon -m M -n N`: the Lyndon words with their partitions, run lengths,
/// and orbit sizes.
pub fn lyndon(m: u32, n: u32) -> Result<Rendered, CliError> {
    let spec = spec_for(m, n)?;
    let words = spec
        .enumerate_b_lyndon()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    struct Row {
        word: String,
        lambda: parkhedron_core::PaddedPartition,
        runs: Partition,
        orbit: BigUint,
    }
    let rows: Vec<Row> = words
        .iter()
        .map(|w| {
            let lambda = spec
                .word_to_partition(w)
                .expect("Lyndon words are in the balanced set");
            Row {
                word: w.to_string(),
                runs: w.runs_of_ones().expect("Lyndon words start with 0"),
                orbit: lambda.orbit_size(),
                lambda,
            }
        })
        .collect();

    let mut text = format!("B^L (m={m}, n={n}): {} words\n", rows.len());
    let cell = |r: &Row| (r.word.clone(), r.lambda.to_string(), r.runs.to_string());
    let cells: Vec<(String, String, String)> = rows.iter().map(cell).collect();
    let word_w = cells.iter().map(|c| c.0.len()).max().unwrap_or(0).max(4);
    let part_w = cells.iter().map(|c| c.1.len()).max().unwrap_or(0).max(9);
    let runs_w = cells.iter().map(|c| c.2.len()).max().unwrap_or(0).max(4);
    let _ = writeln!(
        text,
        "{:word_w$}  {:part_w$}  {:runs_w$}  orbit",
        "word", "partition", "runs"
    );
    for (row, (word, part, runs)) in rows.iter().zip(&cells) {
        let _ = writeln!(
            text,
            "{word:word_w$}  {part:part_w$}  {runs:runs_w$}  {}",
            row.orbit
        );
    }

    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "word": row.word,
                "partition": row.lambda.parts(),
                "runs": row.runs.parts(),
                "orbit_size": row.orbit.to_string(),
            })
        })
        .collect();
    Ok(Rendered {
        text,
        json: json!({"m": m, "n": n, "words": json_rows}),
    })
}

/// `frobenius <target> [--restrict]`: the Frobenius characteristic in the
/// text grammar, optionally restricted once.
pub fn frobenius(target: &Target, restrict: bool) -> Result<Rendered, CliError> {
    let mut f = target.frobenius()?;
    if restrict {
        f = f
            .restrict()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(Rendered {
        text: format!("{f}\n"),
        json: symfunc_to_json(&f),
    })
}

/// `character <target> --mu ...`: the character value at a cycle type,
/// computed by every route available for the target; the routes must agree.
pub fn character(target: &Target, mu_parts: &[u32]) -> Result<Rendered, CliError> {
    let mu = parse_cycle_type(mu_parts)?;
    let frob = target.frobenius()?;
    if mu.degree() != frob.degree() {
        return Err(CliError::Usage(format!(
            "cycle type of {} does not match the degree {} of {}",
            mu.degree(),
            frob.degree(),
            target.describe()
        )));
    }
    let value = frob
        .character(&mu)
        .expect("degree checked above");
    if !value.is_integer() {
        return Err(CliError::Mismatch(format!(
            "character of a permutation module came out non-integral: {value}"
        )));
    }
    let value: BigInt = value.to_integer();

    let mut routes: Vec<(&'static str, BigInt)> = vec![("character", value.clone())];
    match *target {
        Target::Gamma { n } => {
            let count = fixed_point_count(n, &mu).expect("degree checked above");
            let formula = fixed_point_formula(n, &mu).expect("degree checked above");
            routes.push(("lattice-fixed-points", BigInt::from(count)));
            routes.push(("closed-formula", BigInt::from(formula)));
        }
        Target::TauHat { m, n } => {
            let spec = spec_for(m, n)?;
            let mut total = BigUint::ZERO;
            for w in spec.enumerate_b_lyndon().expect("validated by frobenius") {
                let lambda = spec.word_to_partition(&w).expect("Lyndon word");
                total += fixed_rearrangement_count(&lambda, &mu);
            }
            routes.push(("orbit-fixed-points", BigInt::from(total)));
        }
        Target::Pf { k } => {
            let mut total = BigUint::ZERO;
            for rep in classical::enumerate_nondecreasing_pf(k) {
                total += fixed_rearrangement_count(&rep, &mu);
            }
            routes.push(("orbit-fixed-points", BigInt::from(total)));
        }
    }

    let agree = routes.iter().all(|(_, v)| *v == value);
    if !agree {
        let mut diff = format!(
            "character routes disagree for {} at mu={mu}:\n",
            target.describe()
        );
        for (name, v) in &routes {
            let _ = writeln!(diff, "  {name}: {v}");
        }
        return Err(CliError::Mismatch(diff));
    }

    let routes_json: Value = routes
        .iter()
        .map(|(name, v)| (name.to_string(), Value::String(v.to_string())))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    Ok(Rendered {
        text: format!("{value}\n"),
        json: json!({
            "target": target.describe(),
            "mu": mu.parts(),
            "value": value.to_string(),
            "routes": routes_json,
            "agree": true,
        }),
    })
}

fn parse_cycle_type(parts: &[u32]) -> Result<CycleType, CliError> {
    if parts.is_empty() {
        return Err(CliError::Usage("cycle type must not be empty".into()));
    }
    if parts.iter().any(|&p| p == 0) {
        return Err(CliError::Usage("cycle lengths must be positive".into()));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CycleType::new(Partition::new(sorted)))
}

/// What `count` counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountWhat {
    C,
    Y,
    Lyndon,
    Lattice,
    Pf,
}

/// `count <what>`: closed formula and exhaustive enumeration side by side
/// (the enumeration is skipped above a size bound); they must agree.
pub fn count(
    what: CountWhat,
    m: Option<u32>,
    n: Option<u32>,
    k: Option<u32>,
) -> Result<Rendered, CliError> {
    let need = |opt: Option<u32>, flag: &str| {
        opt.ok_or_else(|| CliError::Usage(format!("count requires {flag} here")))
    };
    let (label, formula, enumeration): (String, BigUint, Option<BigUint>) = match what {
        CountWhat::C => {
            let (m, n) = (need(m, "-m")?, need(n, "-n")?);
            let spec = spec_for(m, n)?;
            let formula = spec.count_c();
            let enumeration = (formula <= BigUint::from(2_000_000u64))
                .then(|| BigUint::from(spec.enumerate_c().count()));
            (format!("C (m={m}, n={n})"), formula, enumeration)
        }
        CountWhat::Y => {
            let (m, n) = (need(m, "-m")?, need(n, "-n")?);
            let spec = spec_for(m, n)?;
            let formula = spec
                .count_y_formula()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let enumeration = (formula <= BigUint::from(2_000_000u64))
                .then(|| BigUint::from(spec.enumerate_y().len()));
            (format!("Y (m={m}, n={n})"), formula, enumeration)
        }
        CountWhat::Lyndon => {
            let (m, n) = (need(m, "-m")?, need(n, "-n")?);
            let spec = spec_for(m, n)?;
            let formula = spec
                .count_lyndon_formula()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let enumeration = (formula <= BigUint::from(1_000_000u64))
                .then(|| BigUint::from(spec.enumerate_b_lyndon().expect("default residue").len()));
            (format!("B^L (m={m}, n={n})"), formula, enumeration)
        }
        CountWhat::Lattice => {
            let n = need(n, "-n")?;
            let d = delta(n).map_err(|e| CliError::Usage(e.to_string()))?;
            let formula = BigUint::from(n).pow(n - 2);
            let enumeration =
                (n <= 12).then(|| PermutahedronSpec::new(d).lattice_point_count());
            (format!("Lat(P_delta) (n={n})"), formula, enumeration)
        }
        CountWhat::Pf => {
            let k = need(k, "-k")?;
            if k < 1 {
                return Err(CliError::Usage("need k >= 1".into()));
            }
            let formula = classical::count_parking_functions(k);
            let enumeration = (k <= 12).then(|| {
                classical::enumerate_nondecreasing_pf(k)
                    .iter()
                    .map(|rep| rep.orbit_size())
                    .sum()
            });
            (format!("parking functions (k={k})"), formula, enumeration)
        }
    };

    if let Some(e) = &enumeration {
        if *e != formula {
            return Err(CliError::Mismatch(format!(
                "{label}: formula {formula} != enumeration {e}"
            )));
        }
    }

    let mut text = format!("{label}\n  formula:     {formula}\n");
    match &enumeration {
        Some(e) => {
            let _ = writeln!(text, "  enumeration: {e}");
        }
        None => {
            let _ = writeln!(text, "  enumeration: skipped (too large)");
        }
    }
    Ok(Rendered {
        text,
        json: json!({
            "what": label,
            "formula": formula.to_string(),
            "enumeration": enumeration.map(|e| e.to_string()),
            "agree": true,
        }),
    })
}
