//! Browser bindings: JSON in, JSON out.
//!
//! A problem is `{"rays": [[..]], "a": [[..]], "j": [[..]]}`; `j` may be
//! omitted for the maximal ideal.

use std::sync::Arc;

use fthresh_core::rational::{format_rational, parse_rational, Rational};
use fthresh_core::thresholds::{
    f_threshold, fpt, jumping_coefficients, lambda_value, test_ideal_generators, TestIdealOptions,
};
use fthresh_core::{DualPair, IVec, MonomialIdeal, QVector, ThresholdValue};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

struct Problem {
    dp: Arc<DualPair>,
    a: MonomialIdeal,
    j: MonomialIdeal,
}

fn vectors(v: &Value, field: &str) -> Result<Vec<IVec>, String> {
    serde_json::from_value(v[field].clone()).map_err(|e| format!("{field}: {e}"))
}

fn parse(problem: &str) -> Result<Problem, String> {
    let v: Value = serde_json::from_str(problem).map_err(|e| e.to_string())?;
    let dp = Arc::new(DualPair::new(&vectors(&v, "rays")?).map_err(|e| e.to_string())?);
    let a = MonomialIdeal::new(&dp, vectors(&v, "a")?).map_err(|e| format!("a: {e}"))?;
    let j = match v.get("j") {
        None | Some(Value::Null) => MonomialIdeal::maximal(&dp),
        Some(_) => MonomialIdeal::new(&dp, vectors(&v, "j")?).map_err(|e| format!("j: {e}"))?,
    };
    Ok(Problem { dp, a, j })
}

fn threshold(t: &ThresholdValue) -> Value {
    json!({
        "value": format_rational(&t.value),
        "approx": to_f64(&t.value),
        "witness": t.witness.to_strings(),
        "witness_approx": t.witness.entries().iter().map(to_f64).collect::<Vec<_>>(),
    })
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Cone data, Newton facets, `c(a)`, `c^J(a)` and the first jumping coefficients.
pub fn analyze_json(problem: &str, jumps: usize) -> Result<String, String> {
    let p = parse(problem)?;
    let facets: Vec<Value> = p
        .a
        .newton_polyhedron()
        .facets()
        .iter()
        .map(|f| json!({ "normal": f.normal, "offset": format_rational(&f.offset) }))
        .collect();
    let fpt = fpt(&p.a).map_err(|e| e.to_string())?;
    let cj = f_threshold(&p.a, &p.j).map_err(|e| e.to_string())?;
    let chain = jumping_coefficients(&p.a, jumps.max(1), &TestIdealOptions::default())
        .map_err(|e| e.to_string())?;
    let steps: Vec<Value> = chain
        .steps
        .iter()
        .map(|s| {
            let mut v = threshold(&s.value);
            v["test_ideal"] = json!(s.ideal.generators());
            v
        })
        .collect();
    Ok(json!({
        "sigma_rays": p.dp.sigma_rays(),
        "dual_rays": p.dp.sigma_dual().rays(),
        "hilbert_basis": p.dp.hilbert_basis(),
        "a": p.a.generators(),
        "j": p.j.generators(),
        "newton_facets": facets,
        "fpt": threshold(&fpt),
        "f_threshold": threshold(&cj),
        "jumping": steps,
    })
    .to_string())
}

/// `λ_a` on an `n × n` grid over `[x0, x1] × [y0, y1]` (2-D cones only).
///
/// Each cell is `null` outside `σ^∨`, otherwise `[λ, in Q(J)]`.
pub fn lambda_field_json(problem: &str, x0: f64, x1: f64, y0: f64, y1: f64, n: usize) -> Result<String, String> {
    let p = parse(problem)?;
    if p.dp.dim() != 2 {
        return Err("the field view needs a 2-dimensional cone".into());
    }
    let n = n.clamp(2, 256);
    // Grid points are snapped to multiples of 1/64 so that everything stays exact.
    let snap = |x: f64| Rational::new(((x * 64.0).round() as i64).into(), 64.into());
    let mut rows = Vec::with_capacity(n);
    for iy in 0..n {
        let y = y1 - (y1 - y0) * iy as f64 / (n - 1) as f64;
        let mut row = Vec::with_capacity(n);
        for ix in 0..n {
            let x = x0 + (x1 - x0) * ix as f64 / (n - 1) as f64;
            let u = QVector::new(vec![snap(x), snap(y)]);
            row.push(match lambda_value(&p.a, &u) {
                Ok(l) => json!([to_f64(&l), p.j.q_region_contains(&u)]),
                Err(_) => Value::Null,
            });
        }
        rows.push(Value::Array(row));
    }
    Ok(Value::Array(rows).to_string())
}

/// Minimal generators of `τ(a^c)` for `c` given as `"num/den"`.
pub fn test_ideal_json(problem: &str, exponent: &str) -> Result<String, String> {
    let p = parse(problem)?;
    let c = parse_rational(exponent).map_err(|e| e.to_string())?;
    let tau = test_ideal_generators(&p.a, &c, &TestIdealOptions::default()).map_err(|e| e.to_string())?;
    Ok(json!({ "exponent": format_rational(&c), "generators": tau.generators() }).to_string())
}

#[wasm_bindgen]
pub fn analyze(problem: &str, jumps: usize) -> Result<String, JsValue> {
    analyze_json(problem, jumps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lambda_field(problem: &str, x0: f64, x1: f64, y0: f64, y1: f64, n: usize) -> Result<String, JsValue> {
    lambda_field_json(problem, x0, x1, y0, y1, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn test_ideal(problem: &str, exponent: &str) -> Result<String, JsValue> {
    test_ideal_json(problem, exponent).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const X2_Y3: &str = r#"{"rays": [[1,0],[0,1]], "a": [[2,0],[0,3]]}"#;

    #[test]
    fn analyze_x2_y3() {
        let v: Value = serde_json::from_str(&analyze_json(X2_Y3, 3).unwrap()).unwrap();
        assert_eq!(v["fpt"]["value"], "5/6");
        assert_eq!(v["f_threshold"]["value"], "5/6");
        let cs: Vec<&str> = v["jumping"].as_array().unwrap().iter().map(|s| s["value"].as_str().unwrap()).collect();
        assert_eq!(cs, ["5/6", "7/6", "4/3"]);
        assert_eq!(v["j"], json!([[0, 1], [1, 0]]));
    }

    #[test]
    fn field_marks_points_outside_the_cone() {
        let a1 = r#"{"rays": [[1,0],[1,2]], "a": [[1,0],[0,1],[2,-1]]}"#;
        let v: Value = serde_json::from_str(&lambda_field_json(a1, 0.0, 2.0, -1.0, 1.0, 3).unwrap()).unwrap();
        // Top row is y = 1, bottom row y = -1.
        assert_eq!(v[0][0], json!([1.0, true]));
        assert_eq!(v[2][0], Value::Null);
        assert_eq!(v[2][2], json!([1.0, true]));
        assert_eq!(v[1][0], json!([0.0, false]));
    }

    #[test]
    fn test_ideal_and_errors() {
        let v: Value = serde_json::from_str(&test_ideal_json(X2_Y3, "7/6").unwrap()).unwrap();
        assert_eq!(v["generators"], json!([[0, 2], [1, 0]]));
        assert!(test_ideal_json(X2_Y3, "seven").is_err());
        assert!(analyze_json(r#"{"rays": [[1,0],[0,1]], "a": [[-1,0]]}"#, 1).is_err());
        let hmtw = r#"{"rays": [[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]], "a": [[1,1,1]]}"#;
        assert!(lambda_field_json(hmtw, 0.0, 1.0, 0.0, 1.0, 4).is_err());
    }
}
