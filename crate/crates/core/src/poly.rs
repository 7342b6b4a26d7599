//! Exact rational functions in a formal variable `q`, with integer
//! coefficients, kept in lowest terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Div, Mul};

/// Integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub fn monomial(deg: usize) -> Self {
        let mut c = vec![BigInt::zero(); deg + 1];
        c[deg] = BigInt::one();
        Poly(c)
    }

    /// `q^d - 1`.
    pub fn q_pow_minus_one(d: usize) -> Self {
        let mut p = Poly::monomial(d);
        p.0[0] -= 1;
        Poly::new(p.0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale_div(&self, k: &BigInt) -> Poly {
        Poly(self.0.iter().map(|c| c / k).collect())
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Primitive part with positive leading coefficient.
    fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.scale_div(&self.content());
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_default();
        Poly::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^k self = Q d + R`.
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading();
            let mut next: Vec<BigInt> = r.0.iter().map(|c| c * &lc).collect();
            for (i, c) in d.0.iter().enumerate() {
                next[i + rd - dd] -= &lr * c;
            }
            r = Poly::new(next);
        }
        r
    }

    /// Exact division; panics if `d` does not divide `self` over Z.
    fn div_exact(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading();
        let mut r = self.0.clone();
        let Some(sd) = self.degree() else {
            return Poly::zero();
        };
        assert!(sd >= dd, "exact division by a polynomial of larger degree");
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let (c, rem) = r[k + dd].div_rem(&lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, x) in d.0.iter().enumerate() {
                r[k + i] -= &c * x;
            }
            quot[k] = c;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly::new(quot)
    }

    /// Greatest common divisor over Z, with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_part().scale_mul(&other.content().abs());
        }
        if other.is_zero() {
            return self.primitive_part().scale_mul(&self.content().abs());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale_mul(&c)
    }

    fn scale_mul(&self, k: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if abs.is_one() && i > 0 { String::new() } else { abs.to_string() };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}q")?,
                _ => write!(f, "{coeff}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` in lowest terms; the denominator has positive leading
/// coefficient and is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: Poly,
    den: Poly,
}

impl QRational {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QRational { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g), den.div_exact(&g));
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QRational { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        QRational { num: p, den: Poly::one() }
    }

    pub fn one() -> Self {
        QRational::from_poly(Poly::one())
    }

    pub fn integer(n: i64) -> Self {
        QRational::from_poly(Poly::from_i64(&[n]))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(k.unsigned_abs() as usize);
        if k >= 0 {
            QRational::from_poly(m)
        } else {
            QRational { num: Poly::one(), den: m }
        }
    }

    /// `1 - q^{-1} = (q - 1)/q`.
    pub fn one_minus_q_inv() -> Self {
        QRational::new(Poly::from_i64(&[-1, 1]), Poly::monomial(1))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    pub fn inv(&self) -> Self {
        QRational::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        QRational { num: base.num.pow(e), den: base.den.pow(e) }
    }

    pub fn add(&self, other: &Self) -> Self {
        QRational::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&QRational { num: other.num.neg(), den: other.den.clone() })
    }

    pub fn eval(&self, q: i64) -> Option<BigRational> {
        let x = BigRational::from_integer(BigInt::from(q));
        let d = self.den.eval(&x);
        (!d.is_zero()).then(|| self.num.eval(&x) / d)
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.num.eval_f64(q) / self.den.eval_f64(q)
    }

    /// Limit as `q -> infinity`, if finite.
    pub fn limit_at_infinity(&self) -> Option<BigRational> {
        let (nd, dd) = (self.num.degree(), self.den.degree()?);
        match nd {
            None => Some(BigRational::zero()),
            Some(n) if n < dd => Some(BigRational::zero()),
            Some(n) if n == dd => Some(BigRational::new(self.num.leading(), self.den.leading())),
            Some(_) => None,
        }
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        QRational::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &QRational {
    type Output = QRational;
    fn div(self, rhs: &QRational) -> QRational {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        QRational::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct QRationalRepr {
    num: Vec<CoeffRepr>,
    den: Vec<CoeffRepr>,
}

fn to_repr(p: &Poly) -> Vec<CoeffRepr> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().map_or_else(|| CoeffRepr::Big(c.to_string()), CoeffRepr::Small))
        .collect()
}

fn from_repr<E: serde::de::Error>(v: Vec<CoeffRepr>) -> Result<Poly, E> {
    v.into_iter()
        .map(|c| match c {
            CoeffRepr::Small(x) => Ok(BigInt::from(x)),
            CoeffRepr::Big(s) => s.parse().map_err(|_| E::custom(format!("bad coefficient '{s}'"))),
        })
        .collect::<Result<Vec<_>, E>>()
        .map(Poly::new)
}

impl Serialize for QRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QRationalRepr { num: to_repr(&self.num), den: to_repr(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = QRationalRepr::deserialize(d)?;
        let num = from_repr(r.num)?;
        let den = from_repr(r.den)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(QRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (q^2 - 1)/(q - 1) = q + 1
        let r = QRational::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(r, QRational::from_poly(p(&[1, 1])));
        // sign moves to the numerator
        let r = QRational::new(p(&[1]), p(&[0, -2]));
        assert_eq!(r.num(), &p(&[-1]));
        assert_eq!(r.den(), &p(&[0, 2]));
    }

    #[test]
    fn json_shape() {
        let r = QRational::new(p(&[1, 1]), p(&[0, 1]));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"num":[1,1],"den":[0,1]}"#);
        assert_eq!(serde_json::from_str::<QRational>(&text).unwrap(), r);
        assert!(serde_json::from_str::<QRational>(r#"{"num":[1],"den":[]}"#).is_err());
    }

    #[test]
    fn display() {
        let r = QRational::new(p(&[-1, 0, 0, 0, 0, 0, 1]), p(&[0, 0, 0, 0, 0, -1, 1]));
        assert_eq!(r.to_string(), "(q^5 + q^4 + q^3 + q^2 + q + 1)/q^5");
        assert_eq!(QRational::q_pow(-2).to_string(), "1/q^2");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| Poly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.pseudo_rem(&g).is_zero());
            prop_assert!(b.pseudo_rem(&g).is_zero());
        }

        #[test]
        fn arithmetic_matches_evaluation(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let x = QRational::new(a.clone(), b.clone());
            let y = QRational::new(c.clone(), b.clone());
            for q in [5i64, 7, 11] {
                let (Some(ex), Some(ey)) = (x.eval(q), y.eval(q)) else { continue };
                if let Some(v) = (&x * &y).eval(q) {
                    prop_assert_eq!(v, &ex * &ey);
                }
                if let Some(v) = x.add(&y).eval(q) {
                    prop_assert_eq!(v, &ex + &ey);
                }
            }
        }
    }
}
