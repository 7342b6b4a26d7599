use crate::rat::{fmt_q, qser, Q};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

/// Which additive character a gamma symbol is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Conj {
    Psi,
    PsiBar,
}

/// `gamma(z, rep, psi)` or `gamma(z, rep, psi-bar)`; `rep` names the pair
/// (representation, L-group representation), e.g. `σ,r_1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaLabel {
    pub rep: String,
    pub conj: Conj,
}

impl GammaLabel {
    pub fn psi(rep: impl Into<String>) -> Self {
        GammaLabel { rep: rep.into(), conj: Conj::Psi }
    }

    pub fn psi_bar(rep: impl Into<String>) -> Self {
        GammaLabel { rep: rep.into(), conj: Conj::PsiBar }
    }
}

impl fmt::Display for GammaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.conj {
            Conj::Psi => "ψ",
            Conj::PsiBar => "ψ̄",
        };
        write!(f, "{}, {c}", self.rep)
    }
}

/// Atoms of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Sym {
    LogQ,
    TwoPi,
    /// `1 - e(phase) q^{-k}` with `k >= 0`, where `e(t) = exp(2 pi i t)`.
    OneMinusQPow {
        #[serde(with = "qser")]
        k: Q,
        #[serde(with = "qser")]
        phase: Q,
    },
    /// The (finite, nonzero) value `gamma(at, label)`.
    GammaValue {
        label: GammaLabel,
        #[serde(with = "qser")]
        at: Q,
    },
    /// Leading Laurent coefficient of `gamma(z, label)` at `z = at`, where
    /// the vanishing order is `order` (`-1` is the residue at a simple pole).
    GammaLead {
        label: GammaLabel,
        #[serde(with = "qser")]
        at: Q,
        order: i32,
    },
    /// An opaque nonzero quantity, e.g. `γ(G/M)`.
    Named { name: String },
    /// An opaque constant of absolute value one.
    Unit { name: String },
}

impl Sym {
    fn is_unit(&self) -> bool {
        matches!(self, Sym::Unit { .. })
    }

    fn eval(&self, q: f64) -> Option<Complex64> {
        match self {
            Sym::LogQ => Some(Complex64::new(q.ln(), 0.0)),
            Sym::TwoPi => Some(Complex64::new(2.0 * PI, 0.0)),
            Sym::OneMinusQPow { k, phase } => {
                let k = k.to_f64()?;
                Some(Complex64::new(1.0, 0.0) - root_of_unity(phase) * q.powf(-k))
            }
            _ => None,
        }
    }
}

pub(crate) fn root_of_unity(phase: &Q) -> Complex64 {
    let t = phase.to_f64().unwrap_or(0.0);
    Complex64::from_polar(1.0, 2.0 * PI * t)
}

pub(crate) fn fmt_exponent_power(base: &str, e: &Q) -> String {
    if e.is_one() {
        base.to_string()
    } else if e.is_integer() && !e.is_negative() {
        format!("{base}^{}", fmt_q(e))
    } else {
        format!("{base}^({})", fmt_q(e))
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::LogQ => write!(f, "log q"),
            Sym::TwoPi => write!(f, "2π"),
            Sym::OneMinusQPow { k, phase } => {
                let c = if phase.is_zero() { String::new() } else { format!("e({})·", fmt_q(phase)) };
                if k.is_zero() {
                    write!(f, "(1 - e({}))", fmt_q(phase))
                } else {
                    write!(f, "(1 - {c}{})", fmt_exponent_power("q", &-k))
                }
            }
            Sym::GammaValue { label, at } => write!(f, "γ({}, {label})", fmt_q(at)),
            Sym::GammaLead { label, at, order } => {
                if *order == -1 {
                    write!(f, "Res[z={}] γ(z, {label})", fmt_q(at))
                } else {
                    write!(f, "Lead{order}[z={}] γ(z, {label})", fmt_q(at))
                }
            }
            Sym::Named { name } => write!(f, "{name}"),
            Sym::Unit { name } => write!(f, "ε[{name}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPower {
    pub sym: Sym,
    pub exp: i32,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CoeffRepr {
    #[serde(with = "qser")]
    scalar: Q,
    #[serde(with = "qser")]
    q_exp: Q,
    #[serde(with = "qser")]
    phase: Q,
    symbols: Vec<SymPower>,
}

/// A nonzero monomial `scalar · q^{q_exp} · e(phase) · prod sym^exp`, kept
/// normalized (phase in `[0, 1)`, no zero exponents) so that equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CoeffRepr", try_from = "CoeffRepr")]
pub struct Coeff {
    scalar: Q,
    q_exp: Q,
    phase: Q,
    syms: BTreeMap<Sym, i32>,
}

impl From<Coeff> for CoeffRepr {
    fn from(c: Coeff) -> Self {
        CoeffRepr {
            scalar: c.scalar,
            q_exp: c.q_exp,
            phase: c.phase,
            symbols: c.syms.into_iter().map(|(sym, exp)| SymPower { sym, exp }).collect(),
        }
    }
}

impl TryFrom<CoeffRepr> for Coeff {
    type Error = String;

    fn try_from(r: CoeffRepr) -> Result<Self, String> {
        if r.scalar.is_zero() {
            return Err("coefficient scalar must be nonzero".into());
        }
        let mut c = Coeff::scalar(r.scalar);
        c.q_exp = r.q_exp;
        c.phase = reduce_phase(r.phase);
        for sp in r.symbols {
            c.mul_sym(sp.sym, sp.exp);
        }
        Ok(c)
    }
}

pub(crate) fn reduce_phase(p: Q) -> Q {
    p - p.floor()
}

impl Coeff {
    pub fn one() -> Self {
        Coeff::scalar(Q::one())
    }

    pub fn scalar(s: Q) -> Self {
        assert!(!s.is_zero(), "coefficients are nonzero");
        Coeff { scalar: s, q_exp: Q::zero(), phase: Q::zero(), syms: BTreeMap::new() }
    }

    pub fn sym(s: Sym) -> Self {
        Coeff::one().with_sym(s, 1)
    }

    pub fn q_power(e: Q) -> Self {
        let mut c = Coeff::one();
        c.q_exp = e;
        c
    }

    pub fn phase(p: Q) -> Self {
        let mut c = Coeff::one();
        c.phase = reduce_phase(p);
        c
    }

    pub fn with_sym(mut self, s: Sym, exp: i32) -> Self {
        self.mul_sym(s, exp);
        self
    }

    fn mul_sym(&mut self, s: Sym, exp: i32) {
        if exp == 0 {
            return;
        }
        let e = self.syms.entry(s.clone()).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.syms.remove(&s);
        }
    }

    pub fn scalar_part(&self) -> Q {
        self.scalar
    }

    pub fn q_exponent(&self) -> Q {
        self.q_exp
    }

    pub fn phase_part(&self) -> Q {
        self.phase
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Sym, i32)> {
        self.syms.iter().map(|(s, &e)| (s, e))
    }

    pub fn sym_exponent(&self, s: &Sym) -> i32 {
        self.syms.get(s).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        let mut out = self.clone();
        out.scalar *= other.scalar;
        out.q_exp += other.q_exp;
        out.phase = reduce_phase(out.phase + other.phase);
        for (s, &e) in &other.syms {
            out.mul_sym(s.clone(), e);
        }
        out
    }

    pub fn pow(&self, e: i32) -> Coeff {
        let ez = Q::from_integer(i64::from(e));
        Coeff {
            scalar: pow_q(self.scalar, e),
            q_exp: self.q_exp * ez,
            phase: reduce_phase(self.phase * ez),
            syms: if e == 0 {
                BTreeMap::new()
            } else {
                self.syms.iter().map(|(s, &x)| (s.clone(), x * e)).collect()
            },
        }
    }

    pub fn inv(&self) -> Coeff {
        self.pow(-1)
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Absolute value: drops the phase and every unimodular unit symbol.
    pub fn abs(&self) -> Coeff {
        Coeff {
            scalar: self.scalar.abs(),
            q_exp: self.q_exp,
            phase: Q::zero(),
            syms: self.syms.iter().filter(|(s, _)| !s.is_unit()).map(|(s, &e)| (s.clone(), e)).collect(),
        }
    }

    /// Rewrites every `ψ̄`-symbol as the matching `ψ`-symbol times an opaque
    /// unit, using `γ(z, ρ, ψ̄) = ± γ(z, ρ, ψ)` (and likewise for leading
    /// coefficients).
    pub fn identify_conjugates(&self) -> Coeff {
        let mut out = Coeff { syms: BTreeMap::new(), ..self.clone() };
        for (s, &e) in &self.syms {
            let (sym, unit) = match s {
                Sym::GammaValue { label, at } if label.conj == Conj::PsiBar => (
                    Sym::GammaValue { label: GammaLabel::psi(label.rep.clone()), at: *at },
                    Some(label.rep.clone()),
                ),
                Sym::GammaLead { label, at, order } if label.conj == Conj::PsiBar => (
                    Sym::GammaLead { label: GammaLabel::psi(label.rep.clone()), at: *at, order: *order },
                    Some(label.rep.clone()),
                ),
                other => (other.clone(), None),
            };
            out.mul_sym(sym, e);
            if let Some(rep) = unit {
                out.mul_sym(Sym::Unit { name: format!("±({rep})") }, e);
            }
        }
        out
    }

    /// The value as a plain rational, when no symbols, `q`-powers or phases
    /// survive.
    pub fn as_rational(&self) -> Option<Q> {
        (self.syms.is_empty() && self.q_exp.is_zero() && self.phase.is_zero()).then_some(self.scalar)
    }

    /// Numerical value at a concrete `q`, when every symbol is numeric.
    pub fn eval(&self, q: f64) -> Option<Complex64> {
        let mut v = Complex64::new(self.scalar.to_f64()?, 0.0) * q.powf(self.q_exp.to_f64()?) * root_of_unity(&self.phase);
        for (s, &e) in &self.syms {
            v *= s.eval(q)?.powi(e);
        }
        Some(v)
    }
}

fn pow_q(x: Q, e: i32) -> Q {
    let base = if e < 0 { x.recip() } else { x };
    (0..e.unsigned_abs()).fold(Q::one(), |acc, _| acc * base)
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let bare = self.q_exp.is_zero() && self.phase.is_zero() && self.syms.is_empty();
        if !self.scalar.is_one() || bare {
            if self.scalar == -Q::one() && !bare {
                parts.push("-1".into());
            } else {
                parts.push(fmt_q(&self.scalar));
            }
        }
        if !self.q_exp.is_zero() {
            parts.push(fmt_exponent_power("q", &self.q_exp));
        }
        if !self.phase.is_zero() {
            parts.push(format!("e({})", fmt_q(&self.phase)));
        }
        for (s, &e) in &self.syms {
            let base = s.to_string();
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        write!(f, "{}", parts.join(" · "))
    }
}
