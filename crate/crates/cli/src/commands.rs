use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use unitring_core::abgroup::AbelianGroup;
use unitring_core::gf2poly::{factor_seeded, PolyGF2};
use unitring_core::oracle::{r2m_unit_survey, verify_witness, Expected};
use unitring_core::realize::{
    self, mersenne_power_check, realize_group_odd, realize_p_group, s_ring_subset_search,
};
use unitring_core::{Cardinal, Error, Result, WitnessRing};

use crate::Outcome;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("core types serialize to JSON")
}

pub fn realize_cardinal(arg: &str) -> Result<Outcome> {
    let cardinal: Cardinal = arg.parse()?;
    let answer = realize::realize_cardinal(&cardinal);
    let mut out = to_value(&answer);
    out["query"] = to_value(&Expected::Cardinal(cardinal));
    Ok(out.into())
}

pub fn realize_group(arg: &str) -> Result<Outcome> {
    let g: AbelianGroup = arg.parse()?;
    let query = to_value(&Expected::Group(g.clone()));
    if !g.has_odd_order() {
        return Ok(json!({
            "query": query,
            "group": g.to_string(),
            "in_scope": false,
            "realizable": null,
            "reason": "only odd-order groups are decided; even-order groups are out of scope",
        })
        .into());
    }
    let witness = realize_group_odd(&g)?;
    let cross_check = match s_ring_subset_search(&g) {
        Ok(found) => json!({
            "agrees": found.is_some() == witness.is_some(),
            "degrees": found,
        }),
        Err(Error::Resource(msg)) => json!({ "skipped": msg }),
        Err(e) => return Err(e),
    };
    let reason = witness.is_none().then_some(
        "the order has no factorization into 2^n - 1 factors whose cyclic groups combine to this group",
    );
    Ok(json!({
        "query": query,
        "group": g.to_string(),
        "in_scope": true,
        "realizable": witness.is_some(),
        "witness": witness,
        "reason": reason,
        "s_ring_cross_check": cross_check,
    })
    .into())
}

fn parse_exponents(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| Error::Usage(format!("bad exponent {t:?}")))
        })
        .collect()
}

pub fn pgroup(p: u64, exponents: &str) -> Result<Outcome> {
    let exps = parse_exponents(exponents)?;
    if p == 2 {
        let reason = match realize_p_group(2, &AbelianGroup::trivial()) {
            Err(Error::Domain(msg)) => msg,
            _ => unreachable!("p = 2 is always refused"),
        };
        return Ok(json!({ "p": 2, "exponents": exps, "in_scope": false, "reason": reason }).into());
    }
    let g = AbelianGroup::p_group(p, &exps)?;
    let witness = realize_p_group(p, &g)?;
    Ok(json!({
        "query": to_value(&Expected::Group(g.clone())),
        "p": p,
        "exponents": exps,
        "group": g.to_string(),
        "in_scope": true,
        "realizable": witness.is_some(),
        "witness": witness,
    })
    .into())
}

pub fn factor_poly(hex: &str, seed: u64) -> Result<Outcome> {
    let f = PolyGF2::from_hex(hex)?;
    let fact = factor_seeded(&f, seed)?;
    let factors: Vec<Value> = fact
        .factors()
        .iter()
        .map(|(p, e)| {
            json!({
                "hex": p.to_hex(),
                "poly": p.to_string(),
                "degree": p.degree(),
                "multiplicity": e,
            })
        })
        .collect();
    Ok(json!({ "input": f.to_hex(), "factors": factors, "degrees": fact.degrees() }).into())
}

pub fn tensor_split(a: u32, b: u32) -> Result<Outcome> {
    Ok(json!({ "degrees": unitring_core::gf2ext::tensor_split(a, b)? }).into())
}

#[derive(Deserialize)]
struct WitnessFile {
    witness: Option<WitnessRing>,
    query: Expected,
}

pub fn verify(path: &Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: WitnessFile = serde_json::from_str(&text)
        .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    let witness = file
        .witness
        .ok_or_else(|| Error::Usage("the file has no witness to verify".into()))?;
    let report = verify_witness(&witness, &file.query)?;
    Ok(Outcome { guard_limited: report.guard_exceeded(), json: to_value(&report) })
}

pub fn survey_r2m(m: u64) -> Result<Outcome> {
    let s = r2m_unit_survey(m)?;
    Ok(json!({ "count": s.count, "orders": s.orders }).into())
}

pub fn mersenne_check(n_max: u32) -> Result<Outcome> {
    Ok(json!({ "n_max": n_max, "holds": mersenne_power_check(n_max)? }).into())
}
