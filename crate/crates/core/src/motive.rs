//! Invariant degrees, Iwahori volumes, point counts over `F_q`, `gamma(G/M)`
//! and the measure-quotient factor, for split data.

use crate::error::{Error, Result};
use crate::poly::{Poly, QRational};
use crate::rat::{qser, Q};
use crate::root_datum::{RootDatum, RootSystem, SimpleType};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Invariant degrees of the Weyl group of a simple type.
pub fn degrees_of(t: SimpleType, n: usize) -> Result<Vec<u32>> {
    if !t.valid_rank(n) {
        return Err(Error::Unsupported(format!("{}{n}", t.letter())));
    }
    let n32 = n as u32;
    Ok(match t {
        SimpleType::A => (2..=n32 + 1).collect(),
        SimpleType::B | SimpleType::C => (1..=n32).map(|k| 2 * k).collect(),
        SimpleType::D => {
            let mut d: Vec<u32> = (1..n32).map(|k| 2 * k).collect();
            d.push(n32);
            d.sort_unstable();
            d
        }
        SimpleType::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        SimpleType::F => vec![2, 6, 8, 12],
        SimpleType::G => vec![2, 6],
    })
}

/// Identify a connected Dynkin diagram from its rank, number of positive
/// roots and whether it is simply laced. `B_n` and `C_n` share degrees and
/// are reported as `B`.
pub fn classify_component(rank: usize, positives: usize, simply_laced: bool) -> Option<(SimpleType, usize)> {
    let n = rank;
    let t = if simply_laced {
        match (n, positives) {
            (6, 36) => SimpleType::E,
            (7, 63) => SimpleType::E,
            (8, 120) => SimpleType::E,
            _ if positives == n * (n + 1) / 2 => SimpleType::A,
            _ if n >= 4 && positives == n * (n - 1) => SimpleType::D,
            _ => return None,
        }
    } else {
        match (n, positives) {
            (2, 6) => SimpleType::G,
            (4, 24) => SimpleType::F,
            _ if n >= 2 && positives == n * n => SimpleType::B,
            _ => return None,
        }
    };
    Some((t, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SimpleFactor {
    pub kind: String,
    pub rank: usize,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MotiveData {
    /// `d -> dim V_d`.
    pub degrees_with_mult: BTreeMap<u32, u32>,
    pub dim_g: u32,
    pub dim_t: u32,
    pub factors: Vec<SimpleFactor>,
    pub num_positive_roots: u32,
}

impl MotiveData {
    /// `sum_d (2d - 1) dim V_d`.
    pub fn motive_dimension(&self) -> u32 {
        self.degrees_with_mult.iter().map(|(&d, &m)| (2 * d - 1) * m).sum()
    }
}

fn require_split(rs: &RootSystem) -> Result<()> {
    if rs.cartan().root_dims().is_some_and(|d| d.iter().any(|&x| x != 1)) {
        return Err(Error::Unsupported(
            "non-split data: point counts and motives are only computed for split groups".into(),
        ));
    }
    Ok(())
}

/// Motive of the reductive group with root system spanned by `subset` and a
/// torus of rank `torus_rank`.
pub fn motive_for_subsystem(rs: &RootSystem, subset: &[usize], torus_rank: usize) -> Result<MotiveData> {
    require_split(rs)?;
    let sub = rs.cartan().submatrix(subset);
    let mut degrees: BTreeMap<u32, u32> = BTreeMap::new();
    let mut factors = Vec::new();
    for comp in sub.components() {
        let global: Vec<usize> = comp.iter().map(|&i| subset[i]).collect();
        let positives = rs.levi_positive(&global).len();
        let simply_laced = sub.submatrix(&comp).is_simply_laced();
        let (t, n) = classify_component(comp.len(), positives, simply_laced).ok_or_else(|| {
            Error::Unsupported(format!(
                "component of rank {} with {positives} positive roots is not a recognized simple type",
                comp.len()
            ))
        })?;
        let ds = degrees_of(t, n)?;
        for &d in &ds {
            *degrees.entry(d).or_default() += 1;
        }
        factors.push(SimpleFactor { kind: format!("{}{n}", t.letter()), rank: n, degrees: ds });
    }
    if torus_rank < subset.len() {
        return Err(Error::input("torus rank below the semisimple rank"));
    }
    let central = (torus_rank - subset.len()) as u32;
    if central > 0 {
        *degrees.entry(1).or_default() += central;
    }
    let num_positive = rs.levi_positive(subset).len() as u32;
    let md = MotiveData {
        degrees_with_mult: degrees,
        dim_g: 2 * num_positive + torus_rank as u32,
        dim_t: torus_rank as u32,
        factors,
        num_positive_roots: num_positive,
    };
    if md.motive_dimension() != md.dim_g {
        return Err(Error::Internal(format!(
            "motive dimension {} differs from dim G = {}",
            md.motive_dimension(),
            md.dim_g
        )));
    }
    if md.degrees_with_mult.values().sum::<u32>() != md.dim_t {
        return Err(Error::Internal("number of degrees differs from the torus rank".into()));
    }
    Ok(md)
}

pub fn motive_degrees(datum: &RootDatum) -> Result<MotiveData> {
    let all: Vec<usize> = (0..datum.semisimple_rank()).collect();
    motive_for_subsystem(datum.root_system(), &all, datum.lattice_rank())
}

/// `v = (dim G + dim T) / 2`; the Iwahori subgroup `I^+` has volume `q^{-v}`.
pub fn iwahori_volume_exponent(md: &MotiveData) -> Q {
    Q::new(i64::from(md.dim_g + md.dim_t), 2)
}

/// `|G(F_q)| = q^{#Sigma+} prod_d (q^d - 1)^{dim V_d}`.
pub fn point_count_from_motive(md: &MotiveData) -> QRational {
    let mut p = Poly::monomial(md.num_positive_roots as usize);
    for (&d, &m) in &md.degrees_with_mult {
        p = p.mul(&Poly::q_pow_minus_one(d as usize).pow(m));
    }
    QRational::from_poly(p)
}

pub fn point_count(datum: &RootDatum) -> Result<QRational> {
    Ok(point_count_from_motive(&motive_degrees(datum)?))
}

fn levi_motive(datum: &RootDatum, theta: &[usize]) -> Result<MotiveData> {
    if let Some(&i) = theta.iter().find(|&&i| i >= datum.semisimple_rank()) {
        return Err(Error::NotSimpleRoot(i));
    }
    let mut sorted = theta.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    motive_for_subsystem(datum.root_system(), &sorted, datum.lattice_rank())
}

/// `gamma(G/M) = |G(F_q)| / (|M(F_q)| q^{2 dim N})`.
pub fn gamma_gm(datum: &RootDatum, theta: &[usize]) -> Result<QRational> {
    let g = motive_degrees(datum)?;
    let m = levi_motive(datum, theta)?;
    let dim_n = i64::from(g.num_positive_roots - m.num_positive_roots);
    let ratio = &point_count_from_motive(&g) / &point_count_from_motive(&m);
    Ok(&ratio * &QRational::q_pow(-2 * dim_n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MeasureQuotient {
    pub gamma_gm: QRational,
    pub dim_a_m: usize,
    pub dim_a_g: usize,
    /// `gamma(G/M) (1 - q^{-1})^{dim A_M - dim A_G}`.
    pub factor: QRational,
}

pub fn measure_quotient_factor(datum: &RootDatum, theta: &[usize]) -> Result<MeasureQuotient> {
    let gamma = gamma_gm(datum, theta)?;
    let mut sorted = theta.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let n = datum.lattice_rank();
    let dim_a_m = n - sorted.len();
    let dim_a_g = n - datum.semisimple_rank();
    let factor = &gamma * &QRational::one_minus_q_inv().pow((dim_a_m - dim_a_g) as i64);
    Ok(MeasureQuotient { gamma_gm: gamma, dim_a_m, dim_a_g, factor })
}

/// `[U_alpha(o) : U_alpha(p)] = q^{dim U_alpha}`.
pub fn root_subgroup_index(dim: u32) -> QRational {
    QRational::q_pow(i64::from(dim))
}

/// Index for the `k`-th positive root, using the datum's root dimensions.
pub fn root_subgroup_index_of(rs: &RootSystem, k: usize) -> QRational {
    root_subgroup_index(rs.root_dim(k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MotiveSummary {
    pub motive: MotiveData,
    #[serde(with = "qser")]
    pub iwahori_exponent: Q,
    pub point_count: QRational,
}

pub fn motive_summary(datum: &RootDatum) -> Result<MotiveSummary> {
    let motive = motive_degrees(datum)?;
    Ok(MotiveSummary {
        iwahori_exponent: iwahori_volume_exponent(&motive),
        point_count: point_count_from_motive(&motive),
        motive,
    })
}
