use fdq_core::verify::{bundled_cases, find_case, verify_all, verify_case, CaseRecord, VerificationReport};
use proptest::prelude::*;

#[test]
fn case_files_round_trip() {
    for case in bundled_cases() {
        let back = CaseRecord::from_json(&case.to_json()).unwrap();
        assert_eq!(back, case);
    }
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let cases = bundled_cases();
    let first: Vec<String> = verify_all(&cases).into_iter().map(|r| serde_json::to_string(&r.unwrap()).unwrap()).collect();
    let second: Vec<String> = verify_all(&cases).into_iter().map(|r| serde_json::to_string(&r.unwrap()).unwrap()).collect();
    assert_eq!(first, second);
    for text in &first {
        let report: VerificationReport = serde_json::from_str(text).unwrap();
        assert_eq!(&serde_json::to_string(&report).unwrap(), text);
    }
}

#[test]
fn g2_compatibility_reduces_to_pi0_equals_j() {
    for (name, pi0, j) in [("g2-pi-alpha-half", 2, 2), ("g2-pi-beta-half", 2, 2), ("g2-pi-beta-one", 1, 1)] {
        let r = verify_case(&find_case(name).unwrap()).unwrap();
        let c = r.check("pi0-order").unwrap();
        assert_eq!((c.computed.as_u64(), c.expected.as_u64()), (Some(pi0), Some(j)));
        assert!(r.overall);
    }
}

#[test]
fn schema_violations_are_rejected() {
    let mut case = find_case("gl2n-n2").unwrap();
    case.j = 3;
    assert!(verify_case(&case).unwrap_err().is_input());
    case.j = 1;
    case.schema_version = 2;
    assert!(CaseRecord::from_json(&case.to_json()).is_err());
}

/// Applies one of several corruptions to the expected data.
fn corrupt(case: &mut CaseRecord, which: usize, delta: i64) {
    let e = &mut case.expected;
    match which {
        0 => e.m_idx = Some(e.m_idx.unwrap() + delta),
        1 => e.chi_pairing = Some(e.chi_pairing.unwrap() + delta),
        2 => {
            if let Some(v) = e.alpha_tilde.as_mut() {
                v[0] += delta;
            } else {
                e.m_idx = Some(e.m_idx.unwrap() + delta);
            }
        }
        3 => {
            if let Some(v) = e.rho_p.as_mut() {
                v[1] += delta;
            } else {
                e.chi_pairing = Some(e.chi_pairing.unwrap() + delta);
            }
        }
        4 => case.component_orders[0] += delta as u64,
        _ => {
            if let Some(s) = e.semisimple.first_mut() {
                s.q_exponent += delta;
            } else {
                case.dim_rho[1] += delta as u64;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn corrupting_any_expectation_fails(idx in 0usize..9, which in 0usize..6, delta in 1i64..4) {
        let mut case = bundled_cases()[idx].clone();
        corrupt(&mut case, which, delta);
        let report = verify_case(&case).unwrap();
        prop_assert!(!report.overall);
        prop_assert_eq!(report.overall, report.per_check.iter().all(|c| c.pass));
    }
}
