use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::{Coefficient, Monomial, SparsePoly, VarTable};

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

impl<C: Coefficient> SparsePoly<C> {
    /// `{"vars":[...],"terms":[{"e":[...],"c":"..."}]}` with terms in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let k = self.table().len();
        let terms = self
            .terms()
            .map(|(m, c)| {
                let mut e = vec![0u32; k];
                for (i, x) in m.exponents().enumerate() {
                    e[i] = x;
                }
                JsonTerm {
                    e,
                    c: c.to_string(),
                }
            })
            .collect();
        serde_json::to_value(JsonPoly {
            vars: self.table().names().to_vec(),
            terms,
        })
        .expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let jp: JsonPoly =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let table: Arc<VarTable> = VarTable::new(&jp.vars)?;
        let mut p = SparsePoly::zero(&table);
        for t in jp.terms {
            if t.e.len() != table.len() {
                return Err(Error::Parse(
                    "exponent vector length does not match vars".into(),
                ));
            }
            let c = C::parse_decimal(&t.c)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {}", t.c)))?;
            p.add_term(Monomial::from_exponents(&t.e), &c);
        }
        Ok(p)
    }
}
