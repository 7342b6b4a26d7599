use super::coeff::{Coeff, Sym};
use super::expr::{FactorKind, MeroExpr};
use crate::error::{Error, Result};
use crate::rat::{fmt_q, qser, Q};
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleDeclaration {
    #[serde(with = "qser")]
    pub point: Q,
    /// Positive for a pole, negative for a zero.
    pub order: i32,
}

/// Declared analytic behaviour of each gamma symbol. A registered label is
/// regular and nonzero everywhere except at its declared points. The `ψ`
/// and `ψ̄` variants of a label share declarations, since they agree up to
/// a unimodular constant.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaAxioms {
    labels: BTreeMap<String, Vec<PoleDeclaration>>,
}

impl GammaAxioms {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, rep: impl Into<String>) {
        self.labels.entry(rep.into()).or_default();
    }

    pub fn declare(&mut self, rep: impl Into<String>, point: Q, order: i32) -> Result<()> {
        let rep = rep.into();
        let decls = self.labels.entry(rep.clone()).or_default();
        match decls.iter().find(|d| d.point == point) {
            Some(d) if d.order != order => Err(Error::input(format!(
                "conflicting declarations for {rep} at {}: orders {} and {order}",
                fmt_q(&point),
                d.order
            ))),
            Some(_) => Ok(()),
            None => {
                decls.push(PoleDeclaration { point, order });
                decls.sort_by(|x, y| x.point.cmp(&y.point));
                Ok(())
            }
        }
    }

    pub fn is_registered(&self, rep: &str) -> bool {
        self.labels.contains_key(rep)
    }

    /// Pole order of `rep` at `point` (0 when regular and nonzero).
    pub fn pole_order(&self, rep: &str, point: Q) -> Result<i32> {
        let decls = self.labels.get(rep).ok_or_else(|| Error::MissingDeclaration {
            label: rep.to_string(),
            point: fmt_q(&point),
        })?;
        Ok(decls.iter().find(|d| d.point == point).map_or(0, |d| d.order))
    }

    /// Labels declared to have a pole at `point`.
    pub fn poles_at(&self, point: Q) -> Vec<String> {
        self.labels
            .iter()
            .filter(|(_, ds)| ds.iter().any(|d| d.point == point && d.order > 0))
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.keys().map(String::as_str)
    }
}

/// Leading term `coeff · (s - s0)^order` of a Laurent expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentLeading {
    pub order: i32,
    pub coeff: Coeff,
}

impl LaurentLeading {
    pub fn mul(&self, other: &LaurentLeading) -> LaurentLeading {
        LaurentLeading { order: self.order + other.order, coeff: self.coeff.mul(&other.coeff) }
    }

    fn pow(&self, e: i32) -> LaurentLeading {
        LaurentLeading { order: self.order * e, coeff: self.coeff.pow(e) }
    }

    /// The residue, when the leading term is a simple pole.
    pub fn residue(&self) -> Option<&Coeff> {
        (self.order == -1).then_some(&self.coeff)
    }
}

/// Value of `1 - e(phase) q^{-x}` at a point where it does not vanish,
/// written with a nonnegative `q`-exponent inside the symbol.
fn cyclotomic_value(x: Q, phase: Q) -> Coeff {
    if x.is_negative() {
        // 1 - c q^{|x|} = -c q^{|x|} (1 - c^{-1} q^{-|x|})
        Coeff::scalar(-Q::from_integer(1))
            .mul(&Coeff::phase(phase))
            .mul(&Coeff::q_power(-x))
            .with_sym(Sym::OneMinusQPow { k: -x, phase: super::coeff::reduce_phase(-phase) }, 1)
    } else {
        Coeff::sym(Sym::OneMinusQPow { k: x, phase })
    }
}

fn factor_leading(f: &FactorKind, s0: Q, axioms: &GammaAxioms) -> Result<LaurentLeading> {
    match f {
        FactorKind::Cyclotomic { a, b, phase } => {
            let x = a * s0 + b;
            if phase.is_zero() && x.is_zero() {
                if a.is_zero() {
                    return Err(Error::ZeroFactor(f.to_string()));
                }
                // d/ds (1 - q^{-(a s + b)}) = a log q at the zero
                Ok(LaurentLeading { order: 1, coeff: Coeff::scalar(*a).with_sym(Sym::LogQ, 1) })
            } else {
                Ok(LaurentLeading { order: 0, coeff: cyclotomic_value(x, *phase) })
            }
        }
        FactorKind::Gamma { label, a, b } => {
            let z0 = a * s0 + b;
            let k = -axioms.pole_order(&label.rep, z0)?;
            if k == 0 {
                return Ok(LaurentLeading { order: 0, coeff: Coeff::sym(Sym::GammaValue { label: label.clone(), at: z0 }) });
            }
            if a.is_zero() {
                return Err(Error::input(format!("{f} is a constant taken at a declared pole or zero")));
            }
            // γ(a s + b) ~ L (a (s - s0))^k
            let lead = Coeff::sym(Sym::GammaLead { label: label.clone(), at: z0, order: k });
            Ok(LaurentLeading { order: k, coeff: Coeff::scalar(*a).pow(k).mul(&lead) })
        }
    }
}

/// Order and leading coefficient of `expr` at `s = s0`: the product of the
/// factors' leading terms.
pub fn laurent_leading(expr: &MeroExpr, s0: Q, axioms: &GammaAxioms) -> Result<LaurentLeading> {
    let mut acc = LaurentLeading { order: 0, coeff: expr.prefactor().clone() };
    for (f, e) in expr.factors() {
        acc = acc.mul(&factor_leading(f, s0, axioms)?.pow(e));
    }
    Ok(acc)
}

/// Numerical estimate of `lim_{h -> 0} f(s0 + h) / h^order` by symmetric
/// averaging (which leaves only even powers of `h`) and two Richardson
/// steps. Only for expressions whose factors are all numeric.
pub fn numeric_leading(expr: &MeroExpr, s0: f64, order: i32, q: f64) -> Option<Complex64> {
    let g = |h: f64| -> Option<Complex64> {
        let plus = expr.eval(s0 + h, q)? / h.powi(order);
        let minus = expr.eval(s0 - h, q)? / (-h).powi(order);
        Some((plus + minus) / 2.0)
    };
    let h = 1e-3;
    let (g1, g2, g4) = (g(h)?, g(h / 2.0)?, g(h / 4.0)?);
    let r1 = (g2 * 4.0 - g1) / 3.0;
    let r2 = (g4 * 4.0 - g2) / 3.0;
    Some((r2 * 16.0 - r1) / 15.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mero::coeff::GammaLabel;
    use crate::rat::{q, qi};

    fn cyc(a: i64, b: i64) -> MeroExpr {
        MeroExpr::cyclotomic(qi(a), qi(b), qi(0)).unwrap()
    }

    #[test]
    fn adjoint_prefactor_at_zero() {
        let e = cyc(1, 0).div(&cyc(-1, 1));
        let ll = laurent_leading(&e, qi(0), &GammaAxioms::new()).unwrap();
        assert_eq!(ll.order, 1);
        let expected = Coeff::sym(Sym::LogQ).with_sym(Sym::OneMinusQPow { k: qi(1), phase: qi(0) }, -1);
        assert_eq!(ll.coeff, expected);
    }

    #[test]
    fn empty_product() {
        let ll = laurent_leading(&MeroExpr::one(), q(3, 7), &GammaAxioms::new()).unwrap();
        assert_eq!((ll.order, ll.coeff), (0, Coeff::one()));
    }

    #[test]
    fn negative_exponent_value() {
        // 1 - q^{s-1} at s = 2 is 1 - q = -q (1 - q^{-1})
        let ll = laurent_leading(&cyc(-1, 1), qi(2), &GammaAxioms::new()).unwrap();
        let v = ll.coeff.eval(3.0).unwrap();
        assert!((v.re - (1.0 - 3.0)).abs() < 1e-12);
    }

    #[test]
    fn gamma_pole_and_missing_label() {
        let mut ax = GammaAxioms::new();
        ax.declare("σ,r_2", qi(1), 1).unwrap();
        let e = MeroExpr::gamma(GammaLabel::psi_bar("σ,r_2"), qi(2), qi(0));
        let ll = laurent_leading(&e, q(1, 2), &ax).unwrap();
        assert_eq!(ll.order, -1);
        assert_eq!(ll.coeff.scalar_part(), q(1, 2));
        let other = MeroExpr::gamma(GammaLabel::psi("σ,r_9"), qi(1), qi(0));
        assert!(matches!(laurent_leading(&other, qi(0), &ax), Err(Error::MissingDeclaration { .. })));
        assert!(ax.declare("σ,r_2", qi(1), 2).is_err());
    }

    #[test]
    fn numeric_agrees() {
        let e = cyc(1, 0).div(&cyc(-1, 1));
        let ll = laurent_leading(&e, qi(0), &GammaAxioms::new()).unwrap();
        for qv in [2.0, 3.0] {
            let exact = ll.coeff.eval(qv).unwrap();
            let approx = numeric_leading(&e, 0.0, ll.order, qv).unwrap();
            assert!(((exact - approx) / exact).norm() < 1e-9);
        }
    }
}
