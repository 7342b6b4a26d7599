use super::coeff::{root_of_unity, Coeff, GammaLabel};
use crate::error::{Error, Result};
use crate::rat::{fmt_q, fmt_term, qser, Q};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A factor `1 - e(phase) q^{-(a s + b)}` or `γ(a s + b, label)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum FactorKind {
    Cyclotomic {
        #[serde(with = "qser")]
        a: Q,
        #[serde(with = "qser")]
        b: Q,
        #[serde(with = "qser")]
        phase: Q,
    },
    Gamma {
        label: GammaLabel,
        #[serde(with = "qser")]
        a: Q,
        #[serde(with = "qser")]
        b: Q,
    },
}

impl FactorKind {
    fn rescaled(&self, lambda: Q) -> FactorKind {
        match self {
            FactorKind::Cyclotomic { a, b, phase } => FactorKind::Cyclotomic { a: a * lambda, b: *b, phase: *phase },
            FactorKind::Gamma { label, a, b } => FactorKind::Gamma { label: label.clone(), a: a * lambda, b: *b },
        }
    }
}

/// `a s + b` rendered as `2s - 1`, `s`, `1/2`.
pub(crate) fn fmt_linear(a: &Q, b: &Q) -> String {
    let mut out = fmt_term(a, "s");
    if out.is_empty() || a.is_zero() {
        return fmt_q(b);
    }
    if !b.is_zero() {
        out.push_str(if b.is_negative() { " - " } else { " + " });
        out.push_str(&fmt_q(&b.abs()));
    }
    out
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Cyclotomic { a, b, phase } => {
                let c = if phase.is_zero() { String::new() } else { format!("e({})·", fmt_q(phase)) };
                write!(f, "(1 - {c}q^({}))", fmt_linear(&-a, &-b))
            }
            FactorKind::Gamma { label, a, b } => write!(f, "γ({}, {label})", fmt_linear(a, b)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPower {
    pub factor: FactorKind,
    pub exp: i32,
}

#[derive(Serialize, Deserialize)]
struct MeroExprRepr {
    prefactor: Coeff,
    factors: Vec<FactorPower>,
}

/// A formal product `prefactor · prod factor^exp` of functions of `s`.
/// Identical factors are merged and cancelled factors dropped, so equality
/// is structural.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MeroExprRepr", try_from = "MeroExprRepr")]
pub struct MeroExpr {
    prefactor: Coeff,
    factors: BTreeMap<FactorKind, i32>,
}

impl From<MeroExpr> for MeroExprRepr {
    fn from(e: MeroExpr) -> Self {
        MeroExprRepr {
            prefactor: e.prefactor,
            factors: e.factors.into_iter().map(|(factor, exp)| FactorPower { factor, exp }).collect(),
        }
    }
}

impl TryFrom<MeroExprRepr> for MeroExpr {
    type Error = Error;

    fn try_from(r: MeroExprRepr) -> Result<Self> {
        let mut e = MeroExpr::constant(r.prefactor);
        for fp in r.factors {
            if let FactorKind::Cyclotomic { a, b, phase } = &fp.factor {
                check_cyclotomic(a, b, phase)?;
            }
            e.push(fp.factor, fp.exp);
        }
        Ok(e)
    }
}

fn check_cyclotomic(a: &Q, b: &Q, phase: &Q) -> Result<()> {
    if a.is_zero() && b.is_zero() && phase.is_zero() {
        return Err(Error::ZeroFactor("1 - q^0 vanishes identically".into()));
    }
    Ok(())
}

impl MeroExpr {
    pub fn one() -> Self {
        MeroExpr::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        MeroExpr { prefactor: c, factors: BTreeMap::new() }
    }

    /// `1 - e(phase) q^{-(a s + b)}`.
    pub fn cyclotomic(a: Q, b: Q, phase: Q) -> Result<Self> {
        check_cyclotomic(&a, &b, &phase)?;
        let phase = phase - phase.floor();
        Ok(MeroExpr::one().times(FactorKind::Cyclotomic { a, b, phase }, 1))
    }

    /// `γ(a s + b, label)`.
    pub fn gamma(label: GammaLabel, a: Q, b: Q) -> Self {
        MeroExpr::one().times(FactorKind::Gamma { label, a, b }, 1)
    }

    fn times(mut self, f: FactorKind, exp: i32) -> Self {
        self.push(f, exp);
        self
    }

    fn push(&mut self, f: FactorKind, exp: i32) {
        if exp == 0 {
            return;
        }
        let e = self.factors.entry(f.clone()).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.factors.remove(&f);
        }
    }

    pub fn prefactor(&self) -> &Coeff {
        &self.prefactor
    }

    pub fn factors(&self) -> impl Iterator<Item = (&FactorKind, i32)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &MeroExpr) -> MeroExpr {
        let mut out = self.clone();
        out.prefactor = out.prefactor.mul(&other.prefactor);
        for (f, &e) in &other.factors {
            out.push(f.clone(), e);
        }
        out
    }

    pub fn pow(&self, e: i32) -> MeroExpr {
        MeroExpr {
            prefactor: self.prefactor.pow(e),
            factors: if e == 0 {
                BTreeMap::new()
            } else {
                self.factors.iter().map(|(f, &x)| (f.clone(), x * e)).collect()
            },
        }
    }

    pub fn inv(&self) -> MeroExpr {
        self.pow(-1)
    }

    pub fn div(&self, other: &MeroExpr) -> MeroExpr {
        self.mul(&other.inv())
    }

    /// `s -> lambda s` in every factor.
    pub fn rescale(&self, lambda: Q) -> Result<MeroExpr> {
        if lambda.is_zero() {
            return Err(Error::input("rescaling by zero"));
        }
        let mut out = MeroExpr::constant(self.prefactor.clone());
        for (f, &e) in &self.factors {
            out.push(f.rescaled(lambda), e);
        }
        Ok(out)
    }

    pub fn has_gamma(&self) -> bool {
        self.factors.keys().any(|f| matches!(f, FactorKind::Gamma { .. }))
    }

    /// Numerical value at real `s` and `q`, for expressions without gamma
    /// symbols. Factors vanishing at `s` use `expm1` to keep full relative
    /// precision nearby.
    pub fn eval(&self, s: f64, q: f64) -> Option<Complex64> {
        let mut v = self.prefactor.eval(q)?;
        for (f, &e) in &self.factors {
            let FactorKind::Cyclotomic { a, b, phase } = f else {
                return None;
            };
            let x = a.to_f64()? * s + b.to_f64()?;
            let value = if phase.is_zero() {
                Complex64::new(-(-x * q.ln()).exp_m1(), 0.0)
            } else {
                Complex64::one() - root_of_unity(phase) * q.powf(-x)
            };
            v *= value.powi(e);
        }
        Some(v)
    }
}

impl fmt::Display for MeroExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.prefactor != Coeff::one() || self.factors.is_empty() {
            parts.push(self.prefactor.to_string());
        }
        for (k, &e) in &self.factors {
            parts.push(if e == 1 { k.to_string() } else { format!("{k}^{e}") });
        }
        write!(f, "{}", parts.join(" · "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qi;

    #[test]
    fn zero_factor_rejected() {
        assert!(matches!(MeroExpr::cyclotomic(qi(0), qi(0), qi(0)), Err(Error::ZeroFactor(_))));
        assert!(MeroExpr::cyclotomic(qi(0), qi(0), Q::new(1, 2)).is_ok());
    }

    #[test]
    fn cancellation_is_structural() {
        let g = MeroExpr::gamma(GammaLabel::psi("σ,Ad"), qi(1), qi(0));
        let c = MeroExpr::cyclotomic(qi(1), qi(0), qi(0)).unwrap();
        assert_eq!(g.mul(&c).div(&g), c);
        assert_eq!(c.rescale(qi(1)).unwrap(), c);
        assert!(c.rescale(qi(0)).is_err());
    }

    #[test]
    fn display() {
        let e = MeroExpr::cyclotomic(qi(1), qi(0), qi(0))
            .unwrap()
            .div(&MeroExpr::cyclotomic(qi(-1), qi(1), qi(0)).unwrap());
        assert_eq!(e.to_string(), "(1 - q^(s - 1))^-1 · (1 - q^(-s))");
    }

    #[test]
    fn json_round_trip() {
        let e = MeroExpr::gamma(GammaLabel::psi_bar("σ,r_2"), qi(2), qi(0))
            .mul(&MeroExpr::cyclotomic(qi(1), qi(0), qi(0)).unwrap().inv());
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<MeroExpr>(&text).unwrap(), e);
    }
}
