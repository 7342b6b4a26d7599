//! Standard maximal parabolics: `Sigma(P)`, `rho_P`, the fundamental weight
//! `alpha~`, the level decomposition of the nilradical and `W(M)`.

use crate::error::{Error, Result};
use crate::rat::{qvec, Q};
use crate::root_datum::{
    count_levi_normalizer, enumerate_weyl_group, longest_element, preserves_subset, Coroot, RootSystem,
    WeylElement,
};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LeviData {
    pub theta: Vec<usize>,
    pub removed_root: usize,
    /// Positive roots of the nilradical, in enumeration order.
    pub sigma_p: Vec<Vec<i64>>,
    pub dim_n: u32,
    #[serde(with = "qvec")]
    pub rho_p: Vec<Q>,
    #[serde(with = "qvec")]
    pub alpha_tilde: Vec<Q>,
    /// Positive roots of the Levi.
    pub levi_roots: Vec<Vec<i64>>,
    /// Some root of `Sigma(P)` has its double also a root.
    pub non_reduced: bool,
    #[serde(skip)]
    sigma_p_index: Vec<usize>,
}

impl LeviData {
    pub fn sigma_p_indices(&self) -> &[usize] {
        &self.sigma_p_index
    }
}

pub fn levi_data(rs: &RootSystem, alpha: usize) -> Result<LeviData> {
    if alpha >= rs.rank() {
        return Err(Error::NotSimpleRoot(alpha));
    }
    let theta: Vec<usize> = (0..rs.rank()).filter(|&i| i != alpha).collect();
    let levi_index = rs.levi_positive(&theta);
    let sigma_p_index: Vec<usize> = (0..rs.num_positive()).filter(|k| !levi_index.contains(k)).collect();

    let r = rs.rank();
    let mut rho = vec![Q::zero(); r];
    let mut dim_n = 0;
    for &k in &sigma_p_index {
        let d = rs.root_dim(k);
        dim_n += d;
        for (acc, &c) in rho.iter_mut().zip(&rs.positive_roots()[k].coords) {
            *acc += Q::new(i64::from(d) * c, 2);
        }
    }
    let scale = rs.pairing(&rho, &unit_q(r, alpha))?;
    if scale <= Q::zero() {
        return Err(Error::Internal(format!("<rho_P, alpha^vee> = {scale} is not positive")));
    }
    let alpha_tilde: Vec<Q> = rho.iter().map(|x| x / scale).collect();

    let non_reduced = sigma_p_index.iter().any(|&k| {
        let doubled: Vec<i64> = rs.positive_roots()[k].coords.iter().map(|c| 2 * c).collect();
        rs.positive_index(&doubled).is_some()
    });

    let coords = |idx: &[usize]| idx.iter().map(|&k| rs.positive_roots()[k].coords.clone()).collect();
    Ok(LeviData {
        sigma_p: coords(&sigma_p_index),
        levi_roots: coords(&levi_index),
        theta,
        removed_root: alpha,
        dim_n,
        rho_p: rho,
        alpha_tilde,
        non_reduced,
        sigma_p_index,
    })
}

fn unit_q(r: usize, i: usize) -> Vec<Q> {
    (0..r).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShahidiLevels {
    /// Level `i` to the coroots `beta^vee` with `<alpha~, beta^vee> = i`.
    pub levels: BTreeMap<u32, Vec<Coroot>>,
    /// The same partition, listing the roots `beta`.
    pub roots: BTreeMap<u32, Vec<Vec<i64>>>,
    /// `sum dim U_beta` over each level.
    pub weighted_dims: BTreeMap<u32, u32>,
    pub m_ls: u32,
}

impl ShahidiLevels {
    pub fn level_sizes(&self) -> BTreeMap<u32, usize> {
        self.levels.iter().map(|(&i, v)| (i, v.len())).collect()
    }
}

/// Partition the reduced roots of `Sigma(P)` by `<alpha~, beta^vee>`.
pub fn shahidi_levels(rs: &RootSystem, levi: &LeviData) -> Result<ShahidiLevels> {
    let mut levels: BTreeMap<u32, Vec<Coroot>> = BTreeMap::new();
    let mut roots: BTreeMap<u32, Vec<Vec<i64>>> = BTreeMap::new();
    let mut weighted: BTreeMap<u32, u32> = BTreeMap::new();
    for &k in levi.sigma_p_indices() {
        let root = &rs.positive_roots()[k];
        let halved_is_root = root.coords.iter().all(|c| c % 2 == 0)
            && rs
                .positive_index(&root.coords.iter().map(|c| c / 2).collect::<Vec<_>>())
                .is_some();
        let level = rs.pair_with_coroot(&levi.alpha_tilde, rs.coroot(k))?;
        if !level.is_integer() || level < Q::one() {
            return Err(Error::Internal(format!(
                "level <alpha~, beta^vee> = {level} for beta = {:?} is not a positive integer",
                root.coords
            )));
        }
        let i = u32::try_from(level.to_integer()).map_err(|_| Error::Internal("level overflow".into()))?;
        // a non-reduced 2beta shares its level space with beta
        *weighted.entry(i).or_default() += rs.root_dim(k);
        if halved_is_root {
            continue;
        }
        levels.entry(i).or_default().push(rs.coroot(k).clone());
        roots.entry(i).or_default().push(root.coords.clone());
    }
    let m_ls = levels.keys().next_back().copied().unwrap_or(0);
    Ok(ShahidiLevels { levels, roots, weighted_dims: weighted, m_ls })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RelativeWeylData {
    #[serde(rename = "WMOrder")]
    pub wm_order: u32,
    /// `w_0^G w_0^theta` when it preserves `theta`.
    pub nontrivial_rep: Option<WeylElement>,
    pub stab_a_order: u32,
}

/// `|W(M)|` via the longest element modulo `W_theta`: the nontrivial class
/// exists exactly when `w_0^G w_0^theta` maps `theta` onto itself.
pub fn relative_weyl(rs: &RootSystem, levi: &LeviData) -> Result<RelativeWeylData> {
    let w = longest_element(rs, &levi.theta)?;
    let self_associate = preserves_subset(rs, &w, &levi.theta);
    Ok(RelativeWeylData {
        wm_order: if self_associate { 2 } else { 1 },
        nontrivial_rep: self_associate.then_some(w),
        stab_a_order: 1,
    })
}

/// `|W(M)|` by exhaustive search over `W`.
pub fn relative_weyl_order_exhaustive(rs: &RootSystem, theta: &[usize]) -> usize {
    count_levi_normalizer(rs, &enumerate_weyl_group(rs), theta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AdjointDimensionCheck {
    pub dim_g_ad: u32,
    pub dim_m_ad: u32,
    pub dim_n: u32,
    pub pass: bool,
}

/// `dim g_ad = 1 + dim m_ad + 2 dim N`.
pub fn adjoint_dimension_check(rs: &RootSystem, levi: &LeviData) -> AdjointDimensionCheck {
    let weighted = |idx: &[usize]| -> u32 { idx.iter().map(|&k| rs.root_dim(k)).sum() };
    let all: Vec<usize> = (0..rs.num_positive()).collect();
    let dim_g_ad = 2 * weighted(&all) + rs.rank() as u32;
    let dim_m_ad = 2 * weighted(&rs.levi_positive(&levi.theta)) + levi.theta.len() as u32;
    AdjointDimensionCheck {
        dim_g_ad,
        dim_m_ad,
        dim_n: levi.dim_n,
        pass: dim_g_ad == 1 + dim_m_ad + 2 * levi.dim_n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qi};
    use crate::root_datum::{build_root_system, cartan_matrix, SimpleType};

    fn rs(t: SimpleType, n: usize) -> RootSystem {
        build_root_system(&cartan_matrix(t, n).unwrap()).unwrap()
    }

    #[test]
    fn a1_borel() {
        let a1 = rs(SimpleType::A, 1);
        let l = levi_data(&a1, 0).unwrap();
        assert_eq!(l.rho_p, vec![q(1, 2)]);
        assert_eq!(l.alpha_tilde, vec![q(1, 2)]);
        assert_eq!(l.dim_n, 1);
        let w = relative_weyl(&a1, &l).unwrap();
        assert_eq!(w.wm_order, 2);
        let check = adjoint_dimension_check(&a1, &l);
        assert_eq!((check.dim_g_ad, check.dim_m_ad, check.dim_n, check.pass), (3, 0, 1, true));
    }

    #[test]
    fn g2_remove_beta() {
        let g2 = rs(SimpleType::G, 2);
        let l = levi_data(&g2, 1).unwrap();
        assert_eq!(l.rho_p, vec![q(9, 2), qi(3)]);
        assert_eq!(l.alpha_tilde, vec![qi(3), qi(2)]);
        let lv = shahidi_levels(&g2, &l).unwrap();
        assert_eq!(lv.m_ls, 3);
        assert_eq!(lv.roots[&1], vec![vec![0, 1], vec![3, 1]]);
        assert_eq!(lv.roots[&2], vec![vec![3, 2]]);
        assert_eq!(lv.roots[&3], vec![vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn a2_levi_not_self_associate() {
        let a2 = rs(SimpleType::A, 2);
        let l = levi_data(&a2, 1).unwrap();
        assert_eq!(relative_weyl(&a2, &l).unwrap().wm_order, 1);
        assert_eq!(relative_weyl_order_exhaustive(&a2, &l.theta), 1);
    }

    #[test]
    fn rejects_non_simple() {
        assert!(matches!(levi_data(&rs(SimpleType::G, 2), 2), Err(Error::NotSimpleRoot(2))));
    }
}
