//! JSON encodings of the core value types: partitions as arrays, words as
//! strings, symmetric functions as `{basis, terms: [{partition, num, den}]}`,
//! big counts as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use parkhedron_core::{Basis, Partition, SymFunc};
use serde_json::{json, Value};

pub fn symfunc_to_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .rev() // reverse lexicographic, matching the text format
        .map(|(lambda, coeff)| {
            json!({
                "partition": lambda.parts(),
                "num": coeff.numer().to_string(),
                "den": coeff.denom().to_string(),
            })
        })
        .collect();
    json!({
        "basis": f.basis().to_string(),
        "terms": terms,
    })
}

/// Inverse of `symfunc_to_json`; `None` on any shape violation.
pub fn symfunc_from_json(value: &Value) -> Option<SymFunc> {
    let basis = match value.get("basis")?.as_str()? {
        "h" => Basis::H,
        "p" => Basis::P,
        _ => return None,
    };
    let terms = value.get("terms")?.as_array()?;
    let mut result: Option<SymFunc> = None;
    for term in terms {
        let parts: Vec<u32> = term
            .get("partition")?
            .as_array()?
            .iter()
            .map(|p| p.as_u64().and_then(|v| u32::try_from(v).ok()))
            .collect::<Option<Vec<u32>>>()?;
        let num: BigInt = term.get("num")?.as_str()?.parse().ok()?;
        let den: BigInt = term.get("den")?.as_str()?.parse().ok()?;
        if den == BigInt::ZERO {
            return None;
        }
        let coeff = BigRational::new(num, den);
        let monomial = SymFunc::monomial(basis, Partition::new(parts));
        let scaled = monomial.scale(&coeff);
        result = Some(match result {
            None => scaled,
            Some(acc) => acc.add(&scaled).ok()?,
        });
    }
    result.or_else(|| Some(SymFunc::zero(basis, 0)))
}

/// Rational rendered as an integer string when possible, `num/den` otherwise.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
