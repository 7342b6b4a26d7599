use crate::error::{Error, Result};
use crate::rat::{qser, qvec_opt, Q};
use crate::root_datum::{builtin_datum, RootDatum, RootDatumSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GroupRef {
    Builtin(String),
    Datum(RootDatumSpec),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<RootDatum> {
        match self {
            GroupRef::Builtin(name) => builtin_datum(name),
            GroupRef::Datum(spec) => RootDatum::try_from(spec.clone()),
        }
    }

    pub fn display_name(&self) -> String {
        match self {
            GroupRef::Builtin(name) => name.clone(),
            GroupRef::Datum(spec) => spec.name.clone().unwrap_or_else(|| "custom datum".into()),
        }
    }
}

/// Hypotheses under which the formal degree identity is proved; echoed in
/// every report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Assumptions {
    /// `w_0 sigma ≅ sigma`.
    pub self_associate: bool,
    pub generic_supercuspidal: bool,
    /// The parameter of `sigma` is trivial on `SL_2`.
    pub sl2_trivial_sigma: bool,
    /// Langlands-Shahidi gamma factors agree with those from the local
    /// Langlands correspondence.
    #[serde(default)]
    pub shahidi_matches_llc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SemisimpleExpectation {
    /// Coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    #[serde(with = "qser")]
    pub q_exponent: Q,
}

/// Optional regression values; every field present becomes a check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Expected {
    #[serde(default, with = "qvec_opt", skip_serializing_if = "Option::is_none")]
    pub rho_p: Option<Vec<Q>>,
    #[serde(default, with = "qvec_opt", skip_serializing_if = "Option::is_none")]
    pub alpha_tilde: Option<Vec<Q>>,
    /// Level to the coroots (simple-coroot basis) in it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_coroots: Option<BTreeMap<u32, Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_idx: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_pairing: Option<i64>,
    /// `|pi_0(S_phi_pi)| = j`, for groups where the component group of `pi`
    /// is the whole of `S^natural`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub pi0_order_is_j: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub semisimple: Vec<SemisimpleExpectation>,
}

fn one_one() -> [u64; 2] {
    [1, 1]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseRecord {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub group: GroupRef,
    /// Index of the deleted simple root.
    pub removed_root: usize,
    pub j: u32,
    /// `[|S_phi_pi|, |S_phi_sigma|]`, imported data.
    pub component_orders: [u64; 2],
    /// `[dim rho_pi, dim rho_sigma]`.
    #[serde(default = "one_one")]
    pub dim_rho: [u64; 2],
    pub assumptions: Assumptions,
    #[serde(default)]
    pub expected: Expected,
    /// Where the imported data comes from.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub source: String,
}

impl CaseRecord {
    pub fn from_json(text: &str) -> Result<Self> {
        let case: CaseRecord = serde_json::from_str(text)?;
        case.validate()?;
        Ok(case)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("case records serialize")
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::input(format!(
                "case {}: unsupported schemaVersion {}",
                self.name, self.schema_version
            )));
        }
        if !(1..=2).contains(&self.j) {
            return Err(Error::input(format!("case {}: j must be 1 or 2, got {}", self.name, self.j)));
        }
        if self.component_orders.contains(&0) || self.dim_rho.contains(&0) {
            return Err(Error::input(format!("case {}: orders and dimensions must be positive", self.name)));
        }
        Ok(())
    }
}

const BUNDLED: &[&str] = &[
    include_str!("../../cases/g2_pi_alpha_half.json"),
    include_str!("../../cases/g2_pi_beta_half.json"),
    include_str!("../../cases/g2_pi_beta_one.json"),
    include_str!("../../cases/gl2.json"),
    include_str!("../../cases/gl4.json"),
    include_str!("../../cases/gl6.json"),
    include_str!("../../cases/gl8.json"),
    include_str!("../../cases/gl10.json"),
    include_str!("../../cases/gl12.json"),
];

/// The bundled case database, sorted by name.
pub fn bundled_cases() -> Vec<CaseRecord> {
    let mut cases: Vec<CaseRecord> = BUNDLED
        .iter()
        .map(|text| CaseRecord::from_json(text).expect("bundled case files are valid"))
        .collect();
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    cases
}

pub fn find_case(name: &str) -> Result<CaseRecord> {
    bundled_cases()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::input(format!("unknown case '{name}'")))
}
