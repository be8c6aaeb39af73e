//! Deterministic JSON encodings of scalars, elements, tableaux, modules and reports.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use sergeev_core::algebra::Word;
use sergeev_core::linalg::Matrix;
use sergeev_core::repmodules::{BasisIndex, Representation};
use sergeev_core::{
    AlgebraElement, Gaussian, Permutation, Rational, Report, Scalar, ShiftedTableau,
};

/// `[{"d": 2, "re": "1/2", "im": "0/1"}, ...]`, sorted by `d`.
pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(d, g)| json!({"d": d, "re": g.re.to_string(), "im": g.im.to_string()}))
            .collect(),
    )
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let terms = v
        .as_array()
        .ok_or_else(|| anyhow!("scalar must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let d = t["d"]
            .as_u64()
            .ok_or_else(|| anyhow!("scalar term needs integer \"d\""))?;
        let part = |key: &str| -> Result<Rational> {
            let text = t[key]
                .as_str()
                .ok_or_else(|| anyhow!("scalar term needs string {:?}", key))?;
            Ok(text.parse::<Rational>()?)
        };
        out.push((d, Gaussian::new(part("re")?, part("im")?)));
    }
    Ok(Scalar::from_terms(out)?)
}

fn term_key(n: usize, w: &Word) -> (Vec<usize>, u32) {
    ((1..=n).map(|a| w.image(a)).collect(), w.mask())
}

/// `{"n": n, "terms": [{"perm": [images], "mask": m, "coeff": scalar}]}`, sorted by `(perm, mask)`.
pub fn element_to_json(e: &AlgebraElement) -> Value {
    let n = e.n();
    let mut terms: Vec<_> = e.terms().iter().map(|(w, c)| (term_key(n, w), c)).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|((perm, mask), c)| json!({"perm": perm, "mask": mask, "coeff": scalar_to_json(c)}))
        .collect();
    json!({"n": n, "terms": terms})
}

pub fn element_from_json(v: &Value) -> Result<AlgebraElement> {
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| anyhow!("element needs integer \"n\""))? as usize;
    let terms = v["terms"]
        .as_array()
        .ok_or_else(|| anyhow!("element needs \"terms\""))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let images = t["perm"]
            .as_array()
            .ok_or_else(|| anyhow!("term needs \"perm\""))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| anyhow!("perm entries are integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            bail!(
                "perm of length {} in an element with n = {}",
                images.len(),
                n
            );
        }
        let mask = t["mask"]
            .as_u64()
            .ok_or_else(|| anyhow!("term needs \"mask\""))?;
        let mask = u32::try_from(mask)
            .ok()
            .filter(|m| n >= 32 || m >> n == 0)
            .context("mask out of range")?;
        let w = Word::new(&Permutation::from_images(images)?, mask);
        out.push((w, scalar_from_json(&t["coeff"])?));
    }
    Ok(AlgebraElement::from_terms(n, out)?)
}

/// `{"shape": [..], "rows": [[{"e": 1, "bar": false}, ...], ...]}`.
pub fn tableau_to_json(t: &ShiftedTableau) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|&a| json!({"e": a, "bar": t.is_barred(a)}))
                    .collect(),
            )
        })
        .collect();
    json!({"shape": t.shape().parts(), "rows": rows})
}

pub fn tableau_from_json(v: &Value) -> Result<ShiftedTableau> {
    let rows = v["rows"]
        .as_array()
        .ok_or_else(|| anyhow!("tableau needs \"rows\""))?;
    let mut entries = Vec::new();
    let mut barred = Vec::new();
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("tableau rows are arrays"))?;
        let mut r = Vec::new();
        for b in row {
            let e = b["e"].as_u64().ok_or_else(|| anyhow!("box needs \"e\""))? as usize;
            if b["bar"].as_bool().unwrap_or(false) {
                barred.push(e);
            }
            r.push(e);
        }
        entries.push(r);
    }
    let t = ShiftedTableau::new(entries, &barred)?;
    if let Some(shape) = v.get("shape") {
        let parts: Vec<u64> = t.shape().parts().iter().map(|&p| p as u64).collect();
        if shape
            .as_array()
            .map(|s| s.iter().map(Value::as_u64).collect::<Vec<_>>())
            != Some(parts.iter().copied().map(Some).collect())
        {
            bail!("\"shape\" does not match the rows");
        }
    }
    Ok(t)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| anyhow!("matrix must be an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| anyhow!("matrix rows are arrays"))?
                .iter()
                .map(scalar_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?)
}

fn basis_to_json(b: &BasisIndex) -> Value {
    let mut m = Map::new();
    m.insert("tableau".into(), Value::String(b.tableau.to_string()));
    match &b.spin {
        Some(label) => {
            m.insert("spin".into(), Value::String(label.to_string()));
        }
        None => {
            m.insert("clifford".into(), json!(b.clifford));
        }
    }
    Value::Object(m)
}

/// `{"flavor", "lambda", "dim", "basis", "generators": {label: matrix}}`.
pub fn rep_to_json(rep: &Representation) -> Value {
    let generators: Map<String, Value> = rep
        .generators
        .iter()
        .map(|g| (g.label.clone(), matrix_to_json(&g.matrix)))
        .collect();
    json!({
        "flavor": rep.flavor.name(),
        "lambda": rep.shape.parts(),
        "dim": rep.dim(),
        "basis": rep.basis.iter().map(basis_to_json).collect::<Vec<_>>(),
        "generators": generators,
    })
}

pub fn report_to_json(r: &Report) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": if c.passed { "pass" } else { "fail" },
                    "detail": c.detail,
                })
            })
            .collect(),
    )
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use sergeev_core::Sergeev;

    #[test]
    fn scalar_round_trip() {
        let s = &(&Scalar::sqrt_int(6) * &Scalar::ratio(-2, 3).unwrap()) + &Scalar::i();
        let v = scalar_to_json(&s);
        assert_eq!(
            v,
            json!([{"d": 1, "re": "0/1", "im": "1/1"}, {"d": 6, "re": "-2/3", "im": "0/1"}])
        );
        assert_eq!(scalar_from_json(&v).unwrap(), s);
    }

    #[test]
    fn element_round_trip() {
        let g = Sergeev::new(3).unwrap();
        let e = &g.jm_x(3).unwrap() + &g.gen_c(2).unwrap();
        let v = element_to_json(&e);
        assert_eq!(element_from_json(&v).unwrap(), e);
        assert!(element_from_json(
            &json!({"n": 2, "terms": [{"perm": [1], "mask": 0, "coeff": []}]})
        )
        .is_err());
    }

    #[test]
    fn tableau_round_trip() {
        let t: ShiftedTableau = "1,2,4b/3".parse().unwrap();
        let v = tableau_to_json(&t);
        assert_eq!(v["shape"], json!([3, 1]));
        assert_eq!(v["rows"][0][2], json!({"e": 4, "bar": true}));
        assert_eq!(tableau_from_json(&v).unwrap(), t);
    }
}
