//! JSON encoding of rings, modules and functors.
//!
//! Matrices are lists of columns. Integers are JSON numbers of arbitrary
//! size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::fpmod::{FpModule, InvariantFactors, ModMorphism};
use crate::freyd::{ext1_functor, rep_functor, tensor_functor, FpFunctor};
use crate::ring::{Mat, Ring};

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn ring_to_json(ring: Ring) -> Value {
    match ring {
        Ring::Integers => json!({"kind": "Z"}),
        Ring::IntegersMod(n) => json!({"kind": "Zmod", "n": n}),
        Ring::PrimeField(p) => json!({"kind": "GFp", "p": p}),
    }
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing field `{key}`")))
}

fn small_uint(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(format!("`{what}` must be a non-negative integer")))
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| schema("ring `kind` must be a string"))?;
    match kind {
        "Z" => Ok(Ring::Integers),
        "Zmod" => Ring::integers_mod(small_uint(field(v, "n")?, "n")?),
        "GFp" => Ring::prime_field(small_uint(field(v, "p")?, "p")?),
        other => Err(schema(format!("unknown ring kind `{other}`"))),
    }
}

/// Parses `Z`, `Zmod:8` or `GFp:5`.
pub fn parse_ring(s: &str) -> Result<Ring> {
    let (kind, arg) = match s.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (s, None),
    };
    let num = || -> Result<u64> {
        arg.ok_or_else(|| schema(format!("ring `{s}` needs a modulus")))?
            .parse()
            .map_err(|_| schema(format!("bad modulus in `{s}`")))
    };
    match kind {
        "Z" if arg.is_none() => Ok(Ring::Integers),
        "Zmod" => Ring::integers_mod(num()?),
        "GFp" => Ring::prime_field(num()?),
        _ => Err(schema(format!("unknown ring `{s}`"))),
    }
}

fn int_to_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers"))
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| schema(format!("`{n}` is not an integer"))),
        other => Err(schema(format!("expected an integer, found {other}"))),
    }
}

fn matrix_to_json(m: &Mat) -> Value {
    Value::Array(
        m.columns()
            .iter()
            .map(|c| Value::Array(c.iter().map(int_to_json).collect()))
            .collect(),
    )
}

fn matrix_from_json(ring: Ring, rows: usize, v: &Value, what: &str) -> Result<Mat> {
    let cols = v.as_array().ok_or_else(|| schema(format!("`{what}` must be a list of columns")))?;
    let mut out = Vec::with_capacity(cols.len());
    for (j, c) in cols.iter().enumerate() {
        let c = c.as_array().ok_or_else(|| schema(format!("`{what}` column {j} is not a list")))?;
        if c.len() != rows {
            return Err(schema(format!("`{what}` column {j} has length {}, expected {rows}", c.len())));
        }
        out.push(c.iter().map(int_from_json).collect::<Result<Vec<_>>>()?);
    }
    Ok(Mat::from_big_cols(ring, rows, &out))
}

pub fn module_to_json(m: &FpModule) -> Value {
    json!({"gens": m.gens(), "rel": matrix_to_json(m.rel())})
}

pub fn module_from_json(ring: Ring, v: &Value) -> Result<FpModule> {
    let gens = small_uint(field(v, "gens")?, "gens")? as usize;
    let rel = matrix_from_json(ring, gens, field(v, "rel")?, "rel")?;
    FpModule::new(gens, rel)
}

/// Always the explicit arrow form.
pub fn functor_to_json(f: &FpFunctor) -> Value {
    json!({"arrow": {
        "X": module_to_json(f.x()),
        "Y": module_to_json(f.y()),
        "phi": matrix_to_json(f.arrow().phi()),
    }})
}

pub fn functor_from_json(ring: Ring, v: &Value) -> Result<FpFunctor> {
    let obj: &Map<String, Value> = v.as_object().ok_or_else(|| schema("functor must be an object"))?;
    if obj.len() != 1 {
        return Err(schema("functor must have exactly one of `arrow`, `ext1`, `tensor`, `rep`"));
    }
    let (key, body) = obj.iter().next().expect("one entry");
    match key.as_str() {
        "arrow" => {
            let x = module_from_json(ring, field(body, "X")?)?;
            let y = module_from_json(ring, field(body, "Y")?)?;
            let phi = matrix_from_json(ring, y.gens(), field(body, "phi")?, "phi")?;
            if phi.cols() != x.gens() {
                return Err(schema(format!("`phi` has {} columns, expected {}", phi.cols(), x.gens())));
            }
            Ok(FpFunctor::from_arrow(ModMorphism::new(x, y, phi)?))
        }
        "ext1" => Ok(ext1_functor(&module_from_json(ring, body)?)),
        "tensor" => Ok(tensor_functor(&module_from_json(ring, body)?)),
        "rep" => Ok(rep_functor(&module_from_json(ring, body)?)),
        other => Err(schema(format!("unknown functor form `{other}`"))),
    }
}

/// Invariant factors as a list of integers, free summands as `0` over `Z`
/// and `n` over `Z/n`; the zero module is `[]`.
pub fn invariant_factors_to_json(f: &InvariantFactors) -> Value {
    Value::Array(f.ideal_generators().iter().map(int_to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{random_functor, random_module};

    #[test]
    fn rings_round_trip() {
        for r in [Ring::Integers, Ring::IntegersMod(8), Ring::PrimeField(5)] {
            assert_eq!(ring_from_json(&ring_to_json(r)).unwrap(), r);
        }
        assert_eq!(parse_ring("Zmod:8").unwrap(), Ring::IntegersMod(8));
        assert!(parse_ring("GFp:6").is_err());
        assert_eq!(ring_to_json(Ring::IntegersMod(8)).to_string(), r#"{"kind":"Zmod","n":8}"#);
    }

    #[test]
    fn modules_and_functors_round_trip() {
        for ring in [Ring::Integers, Ring::IntegersMod(12)] {
            for seed in 0..10 {
                let m = random_module(ring, seed, 3, 3, 9);
                let text = module_to_json(&m).to_string();
                let back = module_from_json(ring, &serde_json::from_str(&text).unwrap()).unwrap();
                assert_eq!(back, m);
                let f = random_functor(ring, seed);
                let back = functor_from_json(ring, &functor_to_json(&f)).unwrap();
                assert!(back.same_arrow(&f));
            }
        }
    }

    #[test]
    fn big_entries_survive() {
        let v: Value = serde_json::from_str(r#"{"gens":1,"rel":[[123456789012345678901234567890]]}"#).unwrap();
        let m = module_from_json(Ring::Integers, &v).unwrap();
        assert_eq!(module_to_json(&m), v);
    }

    #[test]
    fn schema_errors() {
        let bad = [
            r#"{"gens":2,"rel":[[1]]}"#,
            r#"{"gens":1}"#,
            r#"{"gens":1,"rel":[[1.5]]}"#,
        ];
        for b in bad {
            let v: Value = serde_json::from_str(b).unwrap();
            assert!(matches!(module_from_json(Ring::Integers, &v), Err(Error::Schema(_))), "{b}");
        }
        let v = json!({"arrow": {"X": {"gens":1,"rel":[[2]]}, "Y": {"gens":1,"rel":[[4]]}, "phi": [[1]]}});
        assert!(matches!(functor_from_json(Ring::Integers, &v), Err(Error::IllDefined(_))));
    }
}
