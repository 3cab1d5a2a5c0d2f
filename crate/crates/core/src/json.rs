//! JSON encodings.
//!
//! A field element is an array of six `"num/den"` strings (power-basis
//! coefficients). A point of the line is `{"inf": true}` or `{"val": elem}`.
//! On input, a `mu` entry may also be a bare integer or a `"p/q"` string.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{embed::embed, format_rat, parse_rat, Field};
use crate::gfc::MuPoint;
use crate::{moduli, sample, CycloElem, ModuliPoint, P1Point};

pub fn elem(a: &CycloElem) -> Value {
    Value::Array(a.coeffs().iter().map(|c| Value::String(format_rat(c))).collect())
}

pub fn point(p: &P1Point) -> Value {
    match p {
        P1Point::Infinity => json!({ "inf": true }),
        P1Point::Finite(v) => json!({ "val": elem(v) }),
    }
}

pub fn mu(m: &ModuliPoint) -> Value {
    Value::Array(m.values().iter().map(elem).collect())
}

/// Midpoint and rigorous radius of the complex embedding.
pub fn approx(a: &CycloElem, precision: u32) -> Value {
    let b = embed(a, precision);
    let mid = b.midpoint();
    json!({ "re": mid.re, "im": mid.im, "radius": b.radius_f64() })
}

fn parse_elem(v: &Value) -> Result<CycloElem> {
    match v {
        Value::Number(n) => {
            let n = n.as_i64().ok_or_else(|| Error::Parse(format!("not an integer: {n}")))?;
            Ok(CycloElem::from_i64(n))
        }
        Value::String(s) => Ok(CycloElem::from_scalar(parse_rat(s)?)),
        Value::Array(items) => {
            if items.len() != 6 {
                return Err(Error::Parse(format!("expected 6 coefficients, got {}", items.len())));
            }
            let mut c = Vec::with_capacity(6);
            for item in items {
                match item {
                    Value::String(s) => c.push(parse_rat(s)?),
                    Value::Number(n) => c.push(crate::Rat::from_i64(n.as_i64().ok_or_else(|| Error::Parse(format!("not an integer: {n}")))?)),
                    other => return Err(Error::Parse(format!("bad coefficient: {other}"))),
                }
            }
            Ok(CycloElem::from_coeffs(c.try_into().expect("six entries")))
        }
        other => Err(Error::Parse(format!("bad field element: {other}"))),
    }
}

/// Parses `--mu`: `"mu0"`, `"random"`, `"random:SEED"` or a JSON array of
/// four entries. Malformed input is `Error::Parse`; a point outside `Omega`
/// is `Error::OmegaViolation`.
pub fn parse_mu(s: &str) -> Result<ModuliPoint> {
    let s = s.trim();
    if s == "mu0" {
        return Ok(moduli::mu0());
    }
    if let Some(rest) = s.strip_prefix("random") {
        let seed = match rest.strip_prefix(':') {
            Some(n) => n.parse().map_err(|_| Error::Parse(format!("bad seed: {n:?}")))?,
            None if rest.is_empty() => 0,
            None => return Err(Error::Parse(format!("unrecognized mu: {s:?}"))),
        };
        return Ok(sample::mu_cyclo(&mut sample::rng(seed)));
    }
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let items = v.as_array().ok_or_else(|| Error::Parse("mu must be a JSON array".into()))?;
    if items.len() != 4 {
        return Err(Error::Parse(format!("mu needs 4 entries, got {}", items.len())));
    }
    let vals: Vec<CycloElem> = items.iter().map(parse_elem).collect::<Result<_>>()?;
    MuPoint::new(vals.try_into().expect("four entries"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = moduli::mu0();
        let text = mu(&m).to_string();
        assert_eq!(parse_mu(&text).unwrap(), m);
        assert_eq!(parse_mu("mu0").unwrap(), m);
    }

    #[test]
    fn entry_forms() {
        let m = parse_mu(r#"[2, "3", "-1/2", ["5","0","0","0","0","0"]]"#).unwrap();
        assert_eq!(*m.mu(6), CycloElem::from_scalar(parse_rat("-1/2").unwrap()));
        assert_eq!(*m.mu(7), CycloElem::from_i64(5));
        assert_eq!(point(&P1Point::Infinity), json!({"inf": true}));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_mu("[2,3,4]"), Err(Error::Parse(_))));
        assert!(matches!(parse_mu("[2,3,4"), Err(Error::Parse(_))));
        assert!(matches!(parse_mu("[2,3,4,1]"), Err(Error::OmegaViolation(_))));
        assert!(matches!(parse_mu("[2,3,4,4]"), Err(Error::OmegaViolation(_))));
        assert_eq!(parse_mu("random:5").unwrap(), parse_mu("random:5").unwrap());
    }
}
