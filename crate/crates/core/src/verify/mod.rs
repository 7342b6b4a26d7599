//! Bundled cases and the end-to-end check that the formal degree quotient is
//! compatible with the component group orders recorded for each case.

mod case;
mod semisimple;

pub use case::{bundled_cases, find_case, Assumptions, CaseRecord, Expected, GroupRef, SemisimpleExpectation, SCHEMA_VERSION};
pub use semisimple::{semisimple_evaluation, QPower};

use crate::error::Result;
use crate::lattice_constants::structure_constants_for_root;
use crate::mero::{derive_main_theorem, standard_axioms, DerivationReport};
use crate::motive::measure_quotient_factor;
use crate::parabolic::{adjoint_dimension_check, levi_data, relative_weyl, shahidi_levels, LeviData, ShahidiLevels};
use crate::rat::{fmt_q, q_json, qvec_json, Q};
use crate::root_datum::{Coroot, RootDatum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub check_name: String,
    pub paper_ref: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub case: String,
    pub group: String,
    pub removed_root: usize,
    pub j: u32,
    pub assumptions: Assumptions,
    pub per_check: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.per_check.iter().find(|c| c.check_name == name)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, name: &str, paper_ref: &str, computed: Value, expected: Value, pass: bool) {
        self.0.push(CheckResult {
            check_name: name.into(),
            paper_ref: paper_ref.into(),
            computed,
            expected,
            pass,
        });
    }

    fn compare(&mut self, name: &str, paper_ref: &str, computed: Value, expected: Value) {
        let pass = computed == expected;
        self.push(name, paper_ref, computed, expected, pass);
    }
}

/// Everything the checks need, computed once per case.
pub struct CaseData {
    pub datum: RootDatum,
    pub levi: LeviData,
    pub levels: ShahidiLevels,
}

pub fn case_data(case: &CaseRecord) -> Result<CaseData> {
    case.validate()?;
    let datum = case.group.resolve().map_err(|e| e.in_check("datum"))?;
    let rs = datum.root_system();
    let levi = levi_data(rs, case.removed_root).map_err(|e| e.in_check("levi-data"))?;
    let levels = shahidi_levels(rs, &levi).map_err(|e| e.in_check("levels"))?;
    Ok(CaseData { datum, levi, levels })
}

/// The residue derivation for the case's level count, `j` and structure
/// constants.
pub fn derive_case(case: &CaseRecord) -> Result<DerivationReport> {
    let data = case_data(case)?;
    let sc = structure_constants_for_root(&data.datum, case.removed_root).map_err(|e| e.in_check("structure-constants"))?;
    let axioms = standard_axioms(data.levels.m_ls, case.j).map_err(|e| e.in_check("derivation"))?;
    derive_main_theorem(data.levels.m_ls, case.j, &sc, &axioms).map_err(|e| e.in_check("derivation"))
}

fn sorted_levels(levels: &BTreeMap<u32, Vec<Vec<i64>>>) -> Value {
    let sorted: BTreeMap<u32, Vec<Vec<i64>>> = levels
        .iter()
        .map(|(&i, cs)| {
            let mut cs = cs.clone();
            cs.sort();
            (i, cs)
        })
        .collect();
    json!(sorted)
}

pub fn verify_case(case: &CaseRecord) -> Result<VerificationReport> {
    let data = case_data(case)?;
    let rs = data.datum.root_system();
    let exp = &case.expected;
    let mut checks = Checks(Vec::new());

    if let Some(rho) = &exp.rho_p {
        checks.compare("rho-P", "G2 tables", qvec_json(&data.levi.rho_p), qvec_json(rho));
    }
    if let Some(at) = &exp.alpha_tilde {
        checks.compare("alpha-tilde", "G2 tables", qvec_json(&data.levi.alpha_tilde), qvec_json(at));
    }
    if let Some(lv) = &exp.level_coroots {
        let computed: BTreeMap<u32, Vec<Vec<i64>>> = data
            .levels
            .levels
            .iter()
            .map(|(&i, cs)| (i, cs.iter().map(|c| c.coords.clone()).collect()))
            .collect();
        checks.compare("levels", "G2 tables", sorted_levels(&computed), sorted_levels(lv));
    }

    let adj = adjoint_dimension_check(rs, &data.levi);
    checks.push(
        "adjoint-dimension",
        "Cor 5.6",
        json!({ "dimGAd": adj.dim_g_ad, "dimMAd": adj.dim_m_ad, "dimN": adj.dim_n }),
        json!("dim g_ad = 1 + dim m_ad + 2 dim n"),
        adj.pass,
    );

    let rw = relative_weyl(rs, &data.levi).map_err(|e| e.in_check("weyl-bound"))?;
    checks.push("weyl-bound", "Lemma W(M) order", json!(rw.wm_order), json!("<= 2"), rw.wm_order <= 2);
    if case.assumptions.self_associate {
        checks.compare("self-associate", "Thm 6.1", json!(rw.nontrivial_rep.is_some()), json!(true));
    }

    let sc = structure_constants_for_root(&data.datum, case.removed_root).map_err(|e| e.in_check("structure-constants"))?;
    if let Some(m) = exp.m_idx {
        checks.compare("m-idx", "Thm 4.8", json!(sc.m_idx), json!(m));
    }
    if let Some(p) = exp.chi_pairing {
        checks.compare("chi-pairing", "Thm 4.8", json!(sc.chi_pairing), json!(p));
    }

    let theta = data.levi.theta.clone();
    let mq = measure_quotient_factor(&data.datum, &theta).map_err(|e| e.in_check("measure-quotient"))?;
    let exponent = mq.dim_a_m as i64 - mq.dim_a_g as i64;
    checks.push(
        "measure-quotient",
        "Prop 3.1",
        json!({ "gammaGM": mq.gamma_gm.to_string(), "factor": mq.factor.to_string(), "exponent": exponent }),
        json!({ "exponent": 1 }),
        exponent == 1,
    );

    let axioms = standard_axioms(data.levels.m_ls, case.j).map_err(|e| e.in_check("derivation"))?;
    let derivation =
        derive_main_theorem(data.levels.m_ls, case.j, &sc, &axioms).map_err(|e| e.in_check("derivation"))?;
    checks.push(
        "derivation",
        "Thm 6.1",
        derivation.constant.as_ref().map_or(Value::Null, q_json),
        q_json(&derivation.expected_constant),
        derivation.pass,
    );

    let [s_pi, s_sigma] = case.component_orders.map(|x| x as i64);
    let [d_pi, d_sigma] = case.dim_rho.map(|x| x as i64);
    let ratio = Q::new(s_pi, s_sigma) * Q::new(d_sigma, d_pi);
    let compat = sc.compat_constant(i64::from(case.j));
    checks.push(
        "compatibility",
        "Thm 6.1",
        json!({
            "componentOrders": case.component_orders,
            "dimRho": case.dim_rho,
            "ratio": fmt_q(&ratio),
        }),
        json!({ "jPairingOverM": fmt_q(&compat) }),
        ratio == compat,
    );

    if exp.pi0_order_is_j {
        checks.compare("pi0-order", "G2 tables", json!(case.component_orders[0]), json!(case.j));
    }

    for s in &exp.semisimple {
        let name = format!("semisimple {:?}", s.coroot);
        let value = semisimple_evaluation(rs, &data.levi, case.j, &Coroot { coords: s.coroot.clone() })
            .map_err(|e| e.in_check(&name))?;
        checks.compare(&name, "s_lambda eigenvalues", q_json(&value.exponent), q_json(&s.q_exponent));
    }

    let per_check = checks.0;
    let overall = per_check.iter().all(|c| c.pass);
    Ok(VerificationReport {
        case: case.name.clone(),
        group: case.group.display_name(),
        removed_root: case.removed_root,
        j: case.j,
        assumptions: case.assumptions,
        per_check,
        overall,
    })
}

/// Verifies cases concurrently; results come back in input order.
pub fn verify_all(cases: &[CaseRecord]) -> Vec<Result<VerificationReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = cases.iter().map(|c| scope.spawn(move || verify_case(c))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_cases_pass() {
        let cases = bundled_cases();
        assert_eq!(cases.len(), 9);
        for r in verify_all(&cases) {
            let r = r.unwrap();
            assert!(r.overall, "{r:#?}");
        }
    }

    #[test]
    fn corrupted_expectation_fails() {
        let mut case = find_case("g2-pi-alpha-half").unwrap();
        case.expected.m_idx = Some(3);
        let r = verify_case(&case).unwrap();
        assert!(!r.overall);
        assert!(!r.check("m-idx").unwrap().pass);
    }

    #[test]
    fn bad_root_names_check() {
        let mut case = find_case("gl2n-n1").unwrap();
        case.removed_root = 5;
        let err = verify_case(&case).unwrap_err();
        assert!(err.to_string().contains("levi-data"));
        assert!(err.is_input());
    }
}
