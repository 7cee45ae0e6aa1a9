//! The Seifert input document and its evaluated form.
//!
//! ```json
//! {
//!   "pairs": [[2, -1], [3, 1], [5, 1]],
//!   "N": 18,
//!   "center": "trivial",
//!   "profiles": [{"fiber": 1, "s_values": ["0", "1"]}, {"fiber": 2, "exponents": [0, 18]}]
//! }
//! ```
//!
//! `center` is either `"trivial"` or `{"scalar_exponent": r}`. Each profile
//! carries exactly one of `s_values` (rational strings) or `exponents`
//! (integers `t` with eigenvalue `zeta_{N a_j}^t`). Unknown fields are ignored,
//! so an evaluated document can be read back as input.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use surfinv_core::exact_arith::BigRational;
use surfinv_core::seifert::{
    e_general, e_simple, icosahedral_example, order_in_pi3, pi3_orders_with, s_from_exponents, CentralBehavior,
    EigenvalueProfile, RepSpec, SeifertData,
};

use crate::error::CliError;
use crate::json::{modz_human, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertDoc {
    pub pairs: Vec<(i64, i64)>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profiles: Option<Vec<ProfileDoc>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterDoc {
    Trivial,
    ScalarExponent(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub fiber: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
}

impl SeifertDoc {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }

    pub fn data(&self) -> Result<SeifertData, CliError> {
        Ok(SeifertData::new(self.pairs.clone())?)
    }

    pub fn rep_spec(&self) -> Result<RepSpec, CliError> {
        let missing = |field: &str| CliError::Document(format!("missing field '{field}'"));
        let n = self.dimension.ok_or_else(|| missing("N"))?;
        let central = match self.center.ok_or_else(|| missing("center"))? {
            CenterDoc::Trivial => CentralBehavior::Trivial,
            CenterDoc::ScalarExponent(r) => CentralBehavior::Scalar { exponent: r },
        };
        let docs = self.profiles.as_ref().ok_or_else(|| missing("profiles"))?;
        let mut profiles = Vec::with_capacity(docs.len());
        for p in docs {
            let (aj, bj) = *self
                .pairs
                .get(p.fiber.wrapping_sub(1))
                .ok_or_else(|| CliError::Document(format!("profile for nonexistent fiber {}", p.fiber)))?;
            let s_values = match (&p.s_values, &p.exponents) {
                (Some(s), None) => s.iter().map(|v| parse_rational(v)).collect::<Result<Vec<_>, _>>()?,
                (None, Some(e)) => s_from_exponents(aj, bj, n, central.exponent(), e)?,
                _ => {
                    return Err(CliError::Document(format!(
                        "profile for fiber {} needs exactly one of 's_values' and 'exponents'",
                        p.fiber
                    )))
                }
            };
            profiles.push(EigenvalueProfile { fiber: p.fiber, s_values });
        }
        Ok(RepSpec { dimension: n, central, profiles })
    }

    /// The document for a canned icosahedral example, with explicit s-values.
    pub fn from_spec(data: &SeifertData, spec: &RepSpec) -> Self {
        SeifertDoc {
            pairs: data.pairs().to_vec(),
            dimension: Some(spec.dimension),
            center: Some(match spec.central {
                CentralBehavior::Trivial => CenterDoc::Trivial,
                CentralBehavior::Scalar { exponent } => CenterDoc::ScalarExponent(exponent),
            }),
            profiles: Some(
                spec.profiles
                    .iter()
                    .map(|p| ProfileDoc {
                        fiber: p.fiber,
                        s_values: Some(p.s_values.iter().map(BigRational::to_string).collect()),
                        exponents: None,
                    })
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderDoc {
    Exact(u64),
    ConstraintSet(Vec<u64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    /// `e` itself, for `h` acting trivially.
    Simple,
    /// `2 Re(N e)`, for `h` acting by a scalar.
    General,
}

/// Canned data behind an icosahedral example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleInfo {
    pub index: u32,
    pub genus: u64,
    pub fixed_points: [u64; 3],
    pub element_orders: Vec<u64>,
    pub allowed_exponents: Vec<Vec<u64>>,
    pub multiplicities: Vec<Vec<u64>>,
}

/// Input document plus the evaluated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    #[serde(flatten)]
    pub input: SeifertDoc,
    pub formula: Formula,
    /// `e` for the simple formula, `2 Re(N e)` for the general one, in `[0, 1)`.
    pub e_invariant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
    pub order: OrderDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<ExampleInfo>,
}

impl Evaluation {
    pub fn human(&self) -> String {
        let value = self.alias.clone().unwrap_or_else(|| self.e_invariant.clone());
        match (&self.formula, &self.order) {
            (Formula::Simple, OrderDoc::Exact(k)) => format!("{value} (order {k})"),
            (_, order) => {
                let n = self.input.dimension.unwrap_or(0);
                let orders = match order {
                    OrderDoc::Exact(k) => vec![*k],
                    OrderDoc::ConstraintSet(s) => s.clone(),
                };
                let list: Vec<String> = orders.iter().map(u64::to_string).collect();
                format!("2Re({n}e) = {value} (order in {{{}}})", list.join(", "))
            }
        }
    }
}

pub fn evaluate(doc: &SeifertDoc) -> Result<Evaluation, CliError> {
    let data = doc.data()?;
    let spec = doc.rep_spec()?;
    let (formula, value, order) = match spec.central {
        CentralBehavior::Trivial => {
            let e = e_simple(&data, &spec)?;
            let order = order_in_pi3(&e)?;
            (Formula::Simple, e, OrderDoc::Exact(order))
        }
        CentralBehavior::Scalar { .. } => {
            let v = e_general(&data, &spec)?;
            let set = pi3_orders_with(&(2 * spec.dimension).into(), &v);
            (Formula::General, v, OrderDoc::ConstraintSet(set))
        }
    };
    let alias = value.alias().map(|_| modz_human(&value));
    Ok(Evaluation { input: doc.clone(), formula, e_invariant: value.residue().to_string(), alias, order, example: None })
}

pub fn evaluate_example(k: u32) -> Result<Evaluation, CliError> {
    let ex = icosahedral_example(k)?;
    let mut eval = evaluate(&SeifertDoc::from_spec(&ex.data, &ex.spec))?;
    eval.example = Some(ExampleInfo {
        index: ex.index,
        genus: ex.genus,
        fixed_points: ex.fixed_points,
        element_orders: ex.element_orders,
        allowed_exponents: ex.allowed_exponents,
        multiplicities: ex.multiplicities,
    });
    Ok(eval)
}
