//! JSON schemas.
//!
//! * polynomial: ascending coefficients as decimal strings, `[]` for zero.
//! * rational function: a polynomial when the denominator is 1, otherwise
//!   `{"num": poly, "den": poly}` in lowest terms, denominator with positive
//!   leading coefficient.
//! * partition: array of parts, `[]` for the empty diagram.
//! * table: `{"schema": "derangement-table/v1", "n", "basis", "first_column",
//!   "rows": [{"lambda", "coeffs": [ratfunc, ...]}]}`.
//! * cone report: `{"schema": "derangement-cone/v1", "n", "simplicial",
//!   "extremes": [{"label", "eigendiagram", "tau_coords", "blocks"}],
//!   "sample_ray_counts": [{"q", "rays"}], "hat_tau_is_tau_n",
//!   "sample_disagreement", "notes"}`.

use std::str::FromStr;

use derangement_core::cone::ConeReport;
use derangement_core::{BlockVector, IntPoly, Partition, RatFunc};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};
use crate::table::{Basis, BasisTable};

pub const TABLE_SCHEMA: &str = "derangement-table/v1";
pub const CONE_SCHEMA: &str = "derangement-cone/v1";

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

pub fn poly_to_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn poly_from_json(v: &Value) -> Result<IntPoly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let coeffs = arr
        .iter()
        .map(|c| {
            let s = c.as_str().ok_or_else(|| bad("coefficient must be a string"))?;
            BigInt::from_str(s).map_err(|_| bad(format!("bad integer {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

pub fn ratfunc_to_json(r: &RatFunc) -> Value {
    match r.as_poly() {
        Some(p) => poly_to_json(p),
        None => json!({ "num": poly_to_json(r.num()), "den": poly_to_json(r.den()) }),
    }
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    if v.is_array() {
        return Ok(RatFunc::from_poly(poly_from_json(v)?));
    }
    let num = poly_from_json(field(v, "num")?)?;
    let den = poly_from_json(field(v, "den")?)?;
    Ok(RatFunc::new(num, den)?)
}

pub fn partition_to_json(l: &Partition) -> Value {
    json!(l.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| bad("partition must be an array"))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| bad("part must be a nonnegative integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts.clone()).ok_or_else(|| bad(format!("{parts:?} is not a partition")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("{key:?} must be a nonnegative integer")))
}

fn array_field<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| bad(format!("{key:?} must be an array")))
}

fn check_schema(v: &Value, want: &str) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(s) if s == want => Ok(()),
        other => Err(bad(format!("expected schema {want:?}, found {other:?}"))),
    }
}

pub fn table_to_json(t: &BasisTable, first_column: usize) -> Value {
    let rows: Vec<Value> = t
        .partitions
        .iter()
        .zip(&t.entries)
        .map(|(l, row)| {
            json!({
                "lambda": partition_to_json(l),
                "coeffs": row.iter().map(ratfunc_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema": TABLE_SCHEMA,
        "n": t.n,
        "basis": t.basis.name(),
        "first_column": first_column,
        "rows": rows,
    })
}

pub fn table_from_json(v: &Value) -> Result<BasisTable> {
    check_schema(v, TABLE_SCHEMA)?;
    let n = usize_field(v, "n")?;
    let basis: Basis = field(v, "basis")?
        .as_str()
        .ok_or_else(|| bad("\"basis\" must be a string"))?
        .parse()?;
    let mut partitions = Vec::new();
    let mut entries = Vec::new();
    for row in array_field(v, "rows")? {
        let l = partition_from_json(field(row, "lambda")?)?;
        if l.size() > n {
            return Err(bad(format!("diagram {l} exceeds level {n}")));
        }
        partitions.push(l);
        entries.push(
            array_field(row, "coeffs")?
                .iter()
                .map(ratfunc_from_json)
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(BasisTable {
        n,
        basis,
        partitions,
        entries,
    })
}

fn blocks_to_json(b: &BlockVector) -> Value {
    Value::Array(
        b.iter()
            .map(|(l, c)| json!({ "lambda": partition_to_json(l), "coeff": ratfunc_to_json(c) }))
            .collect(),
    )
}

fn blocks_from_json(n: usize, v: &Value) -> Result<BlockVector> {
    let mut b = BlockVector::new(n);
    for e in v.as_array().ok_or_else(|| bad("blocks must be an array"))? {
        let l = partition_from_json(field(e, "lambda")?)?;
        if l.size() > n {
            return Err(bad(format!("diagram {l} exceeds level {n}")));
        }
        b.set(l, ratfunc_from_json(field(e, "coeff")?)?);
    }
    Ok(b)
}

pub fn extreme_label(r: &ConeReport, i: usize) -> String {
    if i <= r.n {
        format!("tau_{i}")
    } else if r.extra_count() == 1 {
        String::from("tau_*")
    } else {
        format!("tau_*{}", i - r.n)
    }
}

pub fn cone_to_json(r: &ConeReport) -> Value {
    let extremes: Vec<Value> = r
        .extremes
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "label": extreme_label(r, i),
                "eigendiagram": r.eigendiagram_of[i].as_ref().map(partition_to_json),
                "tau_coords": r.tau_coords[i].iter().map(ratfunc_to_json).collect::<Vec<_>>(),
                "blocks": blocks_to_json(e),
            })
        })
        .collect();
    let samples: Vec<Value> = r
        .sample_ray_counts
        .iter()
        .map(|(q, c)| json!({ "q": q, "rays": c }))
        .collect();
    let mut m = Map::new();
    m.insert("schema".into(), json!(CONE_SCHEMA));
    m.insert("n".into(), json!(r.n));
    m.insert("simplicial".into(), json!(r.simplicial));
    m.insert("extremes".into(), Value::Array(extremes));
    m.insert("sample_ray_counts".into(), Value::Array(samples));
    m.insert("hat_tau_is_tau_n".into(), json!(r.hat_tau_is_tau_n));
    m.insert("sample_disagreement".into(), json!(r.sample_disagreement));
    m.insert("notes".into(), json!(r.notes));
    Value::Object(m)
}

pub fn cone_from_json(v: &Value) -> Result<ConeReport> {
    check_schema(v, CONE_SCHEMA)?;
    let n = usize_field(v, "n")?;
    let mut extremes = Vec::new();
    let mut tau_coords = Vec::new();
    let mut eigendiagram_of = Vec::new();
    for e in array_field(v, "extremes")? {
        extremes.push(blocks_from_json(n, field(e, "blocks")?)?);
        tau_coords.push(
            array_field(e, "tau_coords")?
                .iter()
                .map(ratfunc_from_json)
                .collect::<Result<Vec<_>>>()?,
        );
        let eig = field(e, "eigendiagram")?;
        eigendiagram_of.push(if eig.is_null() {
            None
        } else {
            Some(partition_from_json(eig)?)
        });
    }
    let sample_ray_counts = array_field(v, "sample_ray_counts")?
        .iter()
        .map(|s| {
            let q = field(s, "q")?.as_i64().ok_or_else(|| bad("\"q\" must be an integer"))?;
            Ok((q, usize_field(s, "rays")?))
        })
        .collect::<Result<Vec<_>>>()?;
    let hat = field(v, "hat_tau_is_tau_n")?;
    let hat_tau_is_tau_n = if hat.is_null() {
        None
    } else {
        Some(
            hat.as_bool()
                .ok_or_else(|| bad("\"hat_tau_is_tau_n\" must be a boolean"))?,
        )
    };
    let notes = array_field(v, "notes")?
        .iter()
        .map(|s| s.as_str().map(String::from).ok_or_else(|| bad("notes must be strings")))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConeReport {
        n,
        simplicial: field(v, "simplicial")?
            .as_bool()
            .ok_or_else(|| bad("\"simplicial\" must be a boolean"))?,
        extremes,
        tau_coords,
        eigendiagram_of,
        sample_ray_counts,
        hat_tau_is_tau_n,
        sample_disagreement: field(v, "sample_disagreement")?
            .as_bool()
            .ok_or_else(|| bad("\"sample_disagreement\" must be a boolean"))?,
        notes,
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| bad(e.to_string()))
}
