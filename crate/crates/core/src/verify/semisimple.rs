use crate::error::{Error, Result};
use crate::parabolic::LeviData;
use crate::rat::{fmt_q, qser, Q};
use crate::root_datum::{Coroot, RootSystem};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `q^exponent` with a rational exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QPower {
    #[serde(with = "qser")]
    pub exponent: Q,
}

impl fmt::Display for QPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponent;
        if e.is_zero() {
            write!(f, "1")
        } else if e.is_one() {
            write!(f, "q")
        } else if e.is_integer() {
            write!(f, "q^{}", e)
        } else {
            write!(f, "q^({})", fmt_q(&e))
        }
    }
}

/// Value `q^{<alpha~, gamma^vee>/j}` of the dual root `gamma^vee` on the
/// semisimple element `s_lambda`, `lambda = alpha~/j`.
pub fn semisimple_evaluation(rs: &RootSystem, levi: &LeviData, j: u32, gamma: &Coroot) -> Result<QPower> {
    if j == 0 {
        return Err(Error::input("j must be positive"));
    }
    if gamma.coords.len() != rs.rank() {
        return Err(Error::input(format!(
            "coroot {:?} has {} coordinates; rank is {}",
            gamma.coords,
            gamma.coords.len(),
            rs.rank()
        )));
    }
    let pairing = rs.pair_with_coroot(&levi.alpha_tilde, gamma)?;
    Ok(QPower { exponent: pairing / Q::from_integer(i64::from(j)) })
}
