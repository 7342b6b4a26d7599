use super::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::rat::Q;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

pub const DEFAULT_ROOT_BOUND: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Intermediate,
    Long,
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
    pub positive: bool,
    pub length_class: LengthClass,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|x| -x).collect(),
            positive: !self.positive,
            length_class: self.length_class,
        }
    }
}

/// A coroot in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coroot {
    pub coords: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Root>,
    coroots: Vec<Coroot>,
    index: HashMap<Vec<i64>, usize>,
    symmetrizer: Vec<Q>,
}

pub fn build_root_system(cartan: &CartanMatrix) -> Result<RootSystem> {
    build_root_system_bounded(cartan, DEFAULT_ROOT_BOUND)
}

/// Reflection closure of the simple roots. Coroots are carried along by the
/// dual action: `(s_i beta)^vee = s_i(beta^vee)`.
pub fn build_root_system_bounded(cartan: &CartanMatrix, bound: usize) -> Result<RootSystem> {
    let r = cartan.rank();
    let symmetrizer = cartan.symmetrizer()?;
    let unit = |i: usize| -> Vec<i64> { (0..r).map(|k| i64::from(k == i)).collect() };

    let mut found: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        seen.insert(unit(i), found.len());
        found.push((unit(i), unit(i)));
        queue.push_back(i);
    }
    while let Some(k) = queue.pop_front() {
        let (root, coroot) = found[k].clone();
        for i in 0..r {
            if root == unit(i) {
                continue;
            }
            let image = reflect_in(cartan, i, &root);
            if image.iter().any(|&x| x < 0) {
                return Err(Error::input("reflection left the positive roots; not a Cartan matrix of a root system"));
            }
            if seen.contains_key(&image) {
                continue;
            }
            if found.len() >= bound {
                return Err(Error::NotFiniteType { bound });
            }
            let image_coroot = reflect_coroot_in(cartan, i, &coroot);
            seen.insert(image.clone(), found.len());
            found.push((image, image_coroot));
            queue.push_back(found.len() - 1);
        }
    }

    // height, then earlier simple roots first
    found.sort_by(|(a, _), (b, _)| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    if let Some(dims) = cartan.root_dims() {
        if dims.len() != found.len() {
            return Err(Error::input(format!(
                "rootDims has {} entries but there are {} positive roots",
                dims.len(),
                found.len()
            )));
        }
    }

    let mut rs = RootSystem {
        cartan: cartan.clone(),
        positive: Vec::with_capacity(found.len()),
        coroots: Vec::with_capacity(found.len()),
        index: HashMap::new(),
        symmetrizer,
    };
    let classes: Vec<LengthClass> = found.iter().map(|(c, _)| rs.length_class_of(c)).collect();
    for ((coords, coroot), class) in found.into_iter().zip(classes) {
        rs.index.insert(coords.clone(), rs.positive.len());
        rs.positive.push(Root { coords, positive: true, length_class: class });
        rs.coroots.push(Coroot { coords: coroot });
    }
    Ok(rs)
}

fn reflect_in(cartan: &CartanMatrix, i: usize, x: &[i64]) -> Vec<i64> {
    let p: i64 = x.iter().enumerate().map(|(j, &xj)| xj * cartan.get(i, j)).sum();
    let mut out = x.to_vec();
    out[i] -= p;
    out
}

fn reflect_coroot_in(cartan: &CartanMatrix, i: usize, c: &[i64]) -> Vec<i64> {
    let p: i64 = c.iter().enumerate().map(|(j, &cj)| cj * cartan.get(j, i)).sum();
    let mut out = c.to_vec();
    out[i] -= p;
    out
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn coroots(&self) -> &[Coroot] {
        &self.coroots
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn coroot(&self, k: usize) -> &Coroot {
        &self.coroots[k]
    }

    /// `dim U_beta` of the k-th positive root.
    pub fn root_dim(&self, k: usize) -> u32 {
        self.cartan.root_dims().map_or(1, |d| d[k])
    }

    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index into the signed list `[positives..., negatives...]`.
    pub fn signed_index(&self, coords: &[i64]) -> Option<usize> {
        if let Some(k) = self.positive_index(coords) {
            return Some(k);
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.positive_index(&neg).map(|k| k + self.positive.len())
    }

    /// All roots: positives in enumeration order, then their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(Root::negated))
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|k| i64::from(k == i)).collect()
    }

    /// The coroot of any (positive or negative) root.
    pub fn coroot_of(&self, coords: &[i64]) -> Option<Coroot> {
        if let Some(k) = self.positive_index(coords) {
            return Some(self.coroots[k].clone());
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.positive_index(&neg).map(|k| Coroot {
            coords: self.coroots[k].coords.iter().map(|x| -x).collect(),
        })
    }

    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        reflect_in(&self.cartan, i, x)
    }

    pub fn reflect_coroot(&self, i: usize, c: &[i64]) -> Vec<i64> {
        reflect_coroot_in(&self.cartan, i, c)
    }

    /// `<x, c>` for `x` in the simple-root basis (rational coefficients) and
    /// `c` in the simple-coroot basis.
    pub fn pairing(&self, x: &[Q], c: &[Q]) -> Result<Q> {
        let r = self.rank();
        if x.len() != r || c.len() != r {
            return Err(Error::input(format!(
                "pairing rank mismatch: {} and {} against rank {r}",
                x.len(),
                c.len()
            )));
        }
        let mut acc = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, cj) in c.iter().enumerate() {
                acc += xi * cj * Q::from_integer(self.cartan.get(j, i));
            }
        }
        Ok(acc)
    }

    pub fn pairing_int(&self, x: &[i64], c: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                acc += xi * cj * self.cartan.get(j, i);
            }
        }
        acc
    }

    pub fn pair_with_coroot(&self, x: &[Q], c: &Coroot) -> Result<Q> {
        let cq: Vec<Q> = c.coords.iter().map(|&v| Q::from_integer(v)).collect();
        self.pairing(x, &cq)
    }

    /// Invariant form normalized so the shortest simple root of each
    /// component has squared length 2.
    pub fn inner_product(&self, x: &[i64], y: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc += self.symmetrizer[i] * Q::from_integer(xi * yj * self.cartan.get(i, j));
            }
        }
        acc
    }

    fn length_class_of(&self, coords: &[i64]) -> LengthClass {
        let len = self.inner_product(coords, coords);
        let support: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] != 0).collect();
        let comp = self
            .cartan
            .components()
            .into_iter()
            .find(|c| c.contains(&support[0]))
            .expect("every index lies in a component");
        let lens: Vec<Q> = comp
            .iter()
            .map(|&i| Q::from_integer(2) * self.symmetrizer[i])
            .collect();
        let min = *lens.iter().min().unwrap();
        let max = *lens.iter().max().unwrap();
        if len == max {
            LengthClass::Long
        } else if len == min {
            LengthClass::Short
        } else {
            LengthClass::Intermediate
        }
    }

    /// Positive roots lying in the span of the given simple roots.
    pub fn levi_positive(&self, theta: &[usize]) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&k| {
                self.positive[k]
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || theta.contains(&i))
            })
            .collect()
    }

    /// Default labels for the simple roots: `alpha, beta` in rank two,
    /// `alpha1..alphaN` otherwise.
    pub fn simple_root_names(&self) -> Vec<String> {
        simple_root_names(self.rank())
    }
}

pub fn simple_root_names(rank: usize) -> Vec<String> {
    match rank {
        1 => vec!["alpha".into()],
        2 => vec!["alpha".into(), "beta".into()],
        _ => (1..=rank).map(|i| format!("alpha{i}")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qi;

    fn g2() -> RootSystem {
        build_root_system(&CartanMatrix::new(vec![vec![2, -3], vec![-1, 2]]).unwrap()).unwrap()
    }

    #[test]
    fn g2_positive_roots_in_order() {
        let rs = g2();
        let coords: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(
            coords,
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]
        );
    }

    #[test]
    fn g2_coroot_correspondence() {
        let rs = g2();
        let coroots: Vec<Vec<i64>> = rs.coroots().iter().map(|c| c.coords.clone()).collect();
        assert_eq!(
            coroots,
            vec![vec![1, 0], vec![0, 1], vec![1, 3], vec![2, 3], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn g2_length_classes() {
        let rs = g2();
        let long: Vec<bool> = rs
            .positive_roots()
            .iter()
            .map(|r| r.length_class == LengthClass::Long)
            .collect();
        assert_eq!(long, vec![false, true, false, false, true, true]);
    }

    #[test]
    fn g2_pairings() {
        let rs = g2();
        let beta_v = [qi(0), qi(1)];
        let alpha_v = [qi(1), qi(0)];
        assert_eq!(rs.pairing(&[qi(3), qi(2)], &beta_v).unwrap(), qi(1));
        assert_eq!(rs.pairing(&[qi(2), qi(1)], &alpha_v).unwrap(), qi(1));
        assert_eq!(rs.pairing(&[qi(1), qi(0)], &beta_v).unwrap(), qi(-1));
        assert_eq!(rs.pairing(&[qi(0), qi(1)], &alpha_v).unwrap(), qi(-3));
        assert!(rs.pairing(&[qi(1)], &alpha_v).is_err());
    }

    #[test]
    fn a1_and_a2() {
        let a1 = build_root_system(&CartanMatrix::new(vec![vec![2]]).unwrap()).unwrap();
        assert_eq!(a1.num_positive(), 1);
        assert_eq!(a1.pairing_int(&[1], &a1.coroot(0).coords), 2);

        let a2 = build_root_system(&CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()).unwrap();
        let coords: Vec<Vec<i64>> = a2.positive_roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn affine_matrix_is_not_finite_type() {
        let affine_a1 = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        match build_root_system_bounded(&affine_a1, 50) {
            Err(Error::NotFiniteType { bound: 50 }) => {}
            other => panic!("expected not-finite-type, got {other:?}"),
        }
    }

    #[test]
    fn root_dims_length_checked() {
        let c = CartanMatrix::new(vec![vec![2]]).unwrap().with_root_dims(vec![2, 1]).unwrap();
        assert!(build_root_system(&c).is_err());
    }
}
