//! Cocycle descriptions as they appear in scenario files.
//!
//! * `"trivial"`
//! * `"cyclic:<α>"` or `{"cyclic": [α_1, ...]}`: on `∏ C_{n_i}` in exponent
//!   coordinates, `f(x, y) = ∏ α_i^[x_i + y_i ≥ n_i]`, so that `U_{a_i}^{n_i} = α_i`.
//! * `"bimult:[[e_ij]]"` or `{"bimult": [[e_ij]]}`: `f(x, y) = ∏ ζ_ij^(e_ij x_i y_j)`
//!   with `ζ_ij` the chosen root of unity of order `gcd(n_i, n_j)`.
//! * `{"table": [[...]]}`: explicit values, rows and columns in element order.
//! * `{"product": [spec, ...]}`: pointwise product.

use serde_json::{json, Value};

use super::{TwoCocycle, UnitModule};
use crate::error::{Error, Result};
use crate::exactfields::finite::gcd;

#[derive(Clone, Debug, PartialEq)]
pub enum CocycleSpec {
    Trivial,
    Cyclic(Vec<Value>),
    Bimult(Vec<Vec<i64>>),
    Table(Vec<Vec<Value>>),
    Product(Vec<CocycleSpec>),
}

fn parse_err(m: impl Into<String>) -> Error {
    Error::Parse(m.into())
}

fn int_matrix(v: &Value) -> Result<Vec<Vec<i64>>> {
    let rows = v.as_array().ok_or_else(|| parse_err("bimult exponents must be a matrix"))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("bimult exponents must be a matrix"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| parse_err("bimult exponents must be integers")))
                .collect()
        })
        .collect()
}

impl CocycleSpec {
    pub fn parse(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) if s == "trivial" => Ok(CocycleSpec::Trivial),
            Value::String(s) => {
                let (head, rest) = s.split_once(':').ok_or_else(|| parse_err(format!("unknown cocycle {s:?}")))?;
                let inner: Value =
                    serde_json::from_str(rest).map_err(|e| parse_err(format!("cocycle {s:?}: {e}")))?;
                match head {
                    "cyclic" => Ok(CocycleSpec::Cyclic(vec![inner])),
                    "bimult" => Ok(CocycleSpec::Bimult(int_matrix(&inner)?)),
                    _ => Err(parse_err(format!("unknown cocycle {s:?}"))),
                }
            }
            Value::Object(map) if map.len() == 1 => {
                let (k, inner) = map.iter().next().unwrap();
                match k.as_str() {
                    "cyclic" => match inner {
                        Value::Array(items) => Ok(CocycleSpec::Cyclic(items.clone())),
                        _ => Err(parse_err("\"cyclic\" takes one value per cyclic factor")),
                    },
                    "bimult" => Ok(CocycleSpec::Bimult(int_matrix(inner)?)),
                    "table" => {
                        let rows = inner.as_array().ok_or_else(|| parse_err("table must be an array of rows"))?;
                        let rows = rows
                            .iter()
                            .map(|r| r.as_array().cloned().ok_or_else(|| parse_err("table rows must be arrays")))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(CocycleSpec::Table(rows))
                    }
                    "product" => {
                        let parts = inner.as_array().ok_or_else(|| parse_err("product takes a list"))?;
                        Ok(CocycleSpec::Product(parts.iter().map(CocycleSpec::parse).collect::<Result<_>>()?))
                    }
                    other => Err(parse_err(format!("unknown cocycle kind {other:?}"))),
                }
            }
            _ => Err(parse_err(format!("unrecognized cocycle description {v}"))),
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            CocycleSpec::Trivial => json!("trivial"),
            CocycleSpec::Cyclic(a) => json!({ "cyclic": a }),
            CocycleSpec::Bimult(e) => json!({ "bimult": e }),
            CocycleSpec::Table(t) => json!({ "table": t }),
            CocycleSpec::Product(p) => json!({ "product": p.iter().map(CocycleSpec::to_value).collect::<Vec<_>>() }),
        }
    }

    /// Expands and validates the cocycle.
    pub fn build(&self, module: &UnitModule) -> Result<TwoCocycle> {
        let values = self.expand(module)?;
        TwoCocycle::from_table(module, values)
    }

    /// The value table, without checking the cocycle identity.
    pub fn expand(&self, module: &UnitModule) -> Result<Vec<Vec<crate::exactfields::FieldElement>>> {
        let (field, g) = (module.field(), module.group());
        let n = g.order();
        let coords = || {
            g.abelian_coords()
                .ok_or_else(|| Error::InvalidCocycle("shorthand cocycles need an abelian group".into()))
        };
        Ok(match self {
            CocycleSpec::Trivial => TwoCocycle::trivial(module).table().to_vec(),
            CocycleSpec::Cyclic(alphas) => {
                let c = coords()?;
                if alphas.len() != c.orders.len() {
                    return Err(Error::InvalidCocycle(format!(
                        "cyclic cocycle needs {} values, one per cyclic factor",
                        c.orders.len()
                    )));
                }
                let alphas = alphas.iter().map(|a| field.decode(a)).collect::<Result<Vec<_>>>()?;
                g.elements()
                    .map(|x| {
                        g.elements()
                            .map(|y| {
                                let carries = (0..alphas.len())
                                    .filter(|&i| c.vectors[x][i] + c.vectors[y][i] >= c.orders[i])
                                    .map(|i| &alphas[i]);
                                field.product(carries)
                            })
                            .collect()
                    })
                    .collect()
            }
            CocycleSpec::Bimult(e) => {
                let c = coords()?;
                let r = c.orders.len();
                if e.len() != r || e.iter().any(|row| row.len() != r) {
                    return Err(Error::InvalidCocycle(format!("bimult exponents must be {r}×{r}")));
                }
                let mut zetas = vec![vec![field.one(); r]; r];
                for i in 0..r {
                    for j in 0..r {
                        zetas[i][j] = field.primitive_root_of_unity(gcd(c.orders[i], c.orders[j]))?;
                    }
                }
                g.elements()
                    .map(|x| {
                        g.elements()
                            .map(|y| {
                                let mut v = field.one();
                                for i in 0..r {
                                    for j in 0..r {
                                        let m = gcd(c.orders[i], c.orders[j]) as i64;
                                        let k = (e[i][j] * (c.vectors[x][i] * c.vectors[y][j]) as i64).rem_euclid(m);
                                        v = field.mul(&v, &field.pow(&zetas[i][j], k).unwrap());
                                    }
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            }
            CocycleSpec::Table(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidCocycle(format!("table must be {n}×{n}")));
                }
                rows.iter().map(|r| r.iter().map(|v| field.decode(v)).collect()).collect::<Result<_>>()?
            }
            CocycleSpec::Product(parts) => {
                let mut acc = TwoCocycle::trivial(module).table().to_vec();
                for p in parts {
                    let v = p.expand(module)?;
                    for (ra, rv) in acc.iter_mut().zip(&v) {
                        for (a, b) in ra.iter_mut().zip(rv) {
                            *a = field.mul(a, b);
                        }
                    }
                }
                acc
            }
        })
    }
}
