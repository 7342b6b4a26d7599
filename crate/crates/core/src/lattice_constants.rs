//! The generator `chi` of `X^*(M)^G`, the pairing `<chi, alpha^vee>`, the
//! index `m_idx = [X^*(A_M)^G : res X^*(M)^G]`, and the orbit volume.

use crate::error::{Error, Result};
use crate::lattice::{self, IMat};
use crate::rat::{qser, Q};
use crate::root_datum::RootDatum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureConstants {
    pub removed_root: usize,
    pub theta: Vec<usize>,
    /// Primitive generator of `X^*(M)^G`, in the coordinates of `X`.
    pub chi: Vec<i64>,
    pub chi_pairing: i64,
    pub m_idx: i64,
    pub dim_a_m: usize,
    pub dim_a_g: usize,
    /// `m_idx / <chi, alpha^vee>`.
    #[serde(with = "qser")]
    pub heiermann_constant: Q,
}

impl StructureConstants {
    /// `j <chi, alpha^vee> / m_idx`.
    pub fn compat_constant(&self, j: i64) -> Q {
        Q::new(j * self.chi_pairing, self.m_idx)
    }
}

/// Structure constants for the maximal Levi obtained by deleting `alpha`.
pub fn structure_constants_for_root(datum: &RootDatum, alpha: usize) -> Result<StructureConstants> {
    let theta: Vec<usize> = (0..datum.semisimple_rank()).filter(|&i| i != alpha).collect();
    structure_constants(datum, &theta, alpha)
}

pub fn structure_constants(datum: &RootDatum, theta: &[usize], alpha: usize) -> Result<StructureConstants> {
    let r = datum.semisimple_rank();
    let n = datum.lattice_rank();
    if alpha >= r {
        return Err(Error::NotSimpleRoot(alpha));
    }
    let mut sorted = theta.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let expected: Vec<usize> = (0..r).filter(|&i| i != alpha).collect();
    if sorted != expected {
        return Err(Error::Structural(format!(
            "theta = {theta:?} is not the maximal subset obtained by deleting simple root {alpha}"
        )));
    }

    let coroot_rows = |idx: &[usize]| -> IMat { idx.iter().map(|&i| datum.coroot_embed()[i].clone()).collect() };
    let root_rows = |idx: &[usize]| -> IMat { idx.iter().map(|&i| datum.root_embed()[i].clone()).collect() };
    let all: Vec<usize> = (0..r).collect();

    // X_*(A_G) and X_*(A_M): cocharacters killed by the relevant roots
    let a_g = lattice::integer_kernel(&root_rows(&all), n);
    let a_m = lattice::integer_kernel(&root_rows(&sorted), n);

    // X^*(M)^G: characters killed by the Levi coroots and by X_*(A_G)
    let mut constraints = coroot_rows(&sorted);
    constraints.extend(a_g.iter().cloned());
    let kernel = lattice::integer_kernel(&constraints, n);
    if kernel.len() != 1 {
        return Err(Error::Structural(format!("X^*(M)^G has rank {} (expected 1)", kernel.len())));
    }
    let mut chi = lattice::primitive(&kernel[0]);
    let alpha_vee = &datum.coroot_embed()[alpha];
    let mut chi_pairing = lattice::dot(&chi, alpha_vee);
    if chi_pairing == 0 {
        return Err(Error::Structural("the generator of X^*(M)^G pairs trivially with alpha^vee".into()));
    }
    if chi_pairing < 0 {
        chi.iter_mut().for_each(|x| *x = -*x);
        chi_pairing = -chi_pairing;
    }

    // Hom(X_*(A_M)/X_*(A_G), Z) inside Hom(X_*(A_M), Z) = Z^{dim A_M}: the
    // functionals vanishing on X_*(A_G)
    let dim_a_m = a_m.len();
    let mut a_g_coords: IMat = Vec::with_capacity(a_g.len());
    for g in &a_g {
        let c = lattice::rational_coordinates(&a_m, g)
            .filter(|c| c.iter().all(|x| x.is_integer()))
            .ok_or_else(|| Error::Internal("X_*(A_G) is not contained in X_*(A_M)".into()))?;
        a_g_coords.push(c.iter().map(|x| x.to_integer()).collect());
    }
    let target = lattice::integer_kernel(&a_g_coords, dim_a_m);
    let restricted: Vec<i64> = a_m.iter().map(|b| lattice::dot(&chi, b)).collect();
    let m_idx = lattice::sublattice_index(&vec![restricted], &target)? as i64;

    Ok(StructureConstants {
        removed_root: alpha,
        theta: sorted,
        chi,
        chi_pairing,
        m_idx,
        dim_a_m,
        dim_a_g: a_g.len(),
        heiermann_constant: Q::new(m_idx, chi_pairing),
    })
}

/// A rational multiple of a formal unit such as `2pi/log q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalMultiple {
    #[serde(with = "qser")]
    pub coeff: Q,
    pub unit: String,
}

pub const UNIT_TWO_PI_OVER_LOG_Q: &str = "2pi/log q";
pub const UNIT_LOG_Q_OVER_TWO_PI: &str = "log q/2pi";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitVolumeData {
    pub l: i64,
    pub torsion_t: i64,
    pub y1: FormalMultiple,
    #[serde(with = "qser")]
    pub vol_o: Q,
    pub ratio: FormalMultiple,
}

/// `y_1 = <chi, alpha^vee> (2pi/log q) / (l t)`, `vol = m_idx / (l t)`.
pub fn orbit_volume(sc: &StructureConstants, l: i64, torsion_t: i64) -> Result<OrbitVolumeData> {
    if l < 1 || torsion_t < 1 {
        return Err(Error::input(format!("l = {l} and t = {torsion_t} must be positive")));
    }
    let lt = l * torsion_t;
    let y1 = Q::new(sc.chi_pairing, lt);
    let vol_o = Q::new(sc.m_idx, lt);
    Ok(OrbitVolumeData {
        l,
        torsion_t,
        y1: FormalMultiple { coeff: y1, unit: UNIT_TWO_PI_OVER_LOG_Q.into() },
        vol_o,
        ratio: FormalMultiple { coeff: vol_o / y1, unit: UNIT_LOG_Q_OVER_TWO_PI.into() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qi};
    use crate::root_datum::builtin_datum;

    #[test]
    fn g2_rows() {
        let g2 = builtin_datum("G2").unwrap();
        let sc = structure_constants_for_root(&g2, 0).unwrap();
        assert_eq!((sc.chi.clone(), sc.chi_pairing, sc.m_idx), (vec![2, 1], 1, 2));
        let sc = structure_constants_for_root(&g2, 1).unwrap();
        assert_eq!((sc.chi.clone(), sc.chi_pairing, sc.m_idx), (vec![3, 2], 1, 2));
        assert_eq!(sc.heiermann_constant, qi(2));
    }

    #[test]
    fn gl4_middle() {
        let gl4 = builtin_datum("GL4").unwrap();
        let sc = structure_constants_for_root(&gl4, 1).unwrap();
        assert_eq!(sc.chi, vec![1, 1, -1, -1]);
        assert_eq!((sc.chi_pairing, sc.m_idx, sc.dim_a_m, sc.dim_a_g), (2, 2, 2, 1));
        assert_eq!(sc.compat_constant(1), qi(1));
    }

    #[test]
    fn sl2_guard() {
        let sl2 = builtin_datum("SL2").unwrap();
        assert!(matches!(structure_constants(&sl2, &[0], 0), Err(Error::Structural(_))));
        let sc = structure_constants(&sl2, &[], 0).unwrap();
        assert_eq!((sc.chi_pairing, sc.m_idx), (1, 1));
    }

    #[test]
    fn orbit_volume_g2() {
        let g2 = builtin_datum("G2").unwrap();
        let sc = structure_constants_for_root(&g2, 0).unwrap();
        let ov = orbit_volume(&sc, 1, 1).unwrap();
        assert_eq!(ov.y1.coeff, qi(1));
        assert_eq!(ov.vol_o, qi(2));
        assert_eq!(ov.ratio.coeff, qi(2));
        assert_eq!(orbit_volume(&sc, 3, 5).unwrap().ratio, ov.ratio);
        assert_eq!(orbit_volume(&sc, 2, 1).unwrap().y1.coeff, q(1, 2));
        assert!(orbit_volume(&sc, 0, 1).is_err());
    }
}
