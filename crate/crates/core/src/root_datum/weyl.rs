use super::system::RootSystem;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

/// A Weyl group element as a reduced word together with the permutation it
/// induces on the signed root list (`[positives..., negatives...]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub permutation: Vec<usize>,
    /// Images of the simple roots, in the simple-root basis.
    #[serde(skip)]
    images: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let r = rs.rank();
        let images = (0..r).map(|i| rs.simple_root(i)).collect();
        WeylElement::from_images(rs, Vec::new(), images)
    }

    /// `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut images: Vec<Vec<i64>> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::NotSimpleRoot(i));
            }
            images = right_multiply(rs, &images, i);
        }
        Ok(WeylElement::from_images(rs, word.to_vec(), images))
    }

    fn from_images(rs: &RootSystem, word: Vec<usize>, images: Vec<Vec<i64>>) -> Self {
        let permutation = rs
            .all_roots()
            .iter()
            .map(|root| {
                let image = apply_images(&images, &root.coords);
                rs.signed_index(&image).expect("Weyl group permutes the roots")
            })
            .collect();
        WeylElement { word, permutation, images }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `w(x)` for `x` in the simple-root basis.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        apply_images(&self.images, x)
    }

    pub fn simple_root_images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let images: Vec<Vec<i64>> = other.images.iter().map(|v| self.apply(v)).collect();
        from_images_reduced(rs, images)
    }

    /// `w` acts as `-1` on the roots.
    pub fn is_minus_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, img)| {
            img.iter().enumerate().all(|(k, &c)| c == if k == i { -1 } else { 0 })
        })
    }
}

fn apply_images(images: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    let r = images.len();
    let mut out = vec![0; r];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for k in 0..r {
            out[k] += xi * images[i][k];
        }
    }
    out
}

/// Images of `w s_i` from those of `w`: `w s_i(alpha_k) = w(alpha_k) - a[i][k] w(alpha_i)`.
fn right_multiply(rs: &RootSystem, images: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let wi = images[i].clone();
    images
        .iter()
        .enumerate()
        .map(|(k, img)| {
            let a = rs.cartan().get(i, k);
            img.iter().zip(&wi).map(|(x, y)| x - a * y).collect()
        })
        .collect()
}

fn is_negative(x: &[i64]) -> bool {
    x.iter().all(|&c| c <= 0)
}

/// Recover a reduced word by peeling off right descents.
fn from_images_reduced(rs: &RootSystem, images: Vec<Vec<i64>>) -> WeylElement {
    let mut cur = images.clone();
    let mut rev = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| is_negative(&cur[i])) {
        cur = right_multiply(rs, &cur, i);
        rev.push(i);
    }
    rev.reverse();
    WeylElement::from_images(rs, rev, images)
}

fn longest_of_parabolic(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    let mut images: Vec<Vec<i64>> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
    let mut word = Vec::new();
    while let Some(&i) = subset.iter().find(|&&i| !is_negative(&images[i])) {
        images = right_multiply(rs, &images, i);
        word.push(i);
    }
    WeylElement::from_images(rs, word, images)
}

fn check_subset(rs: &RootSystem, theta: &[usize]) -> Result<()> {
    match theta.iter().find(|&&i| i >= rs.rank()) {
        Some(&i) => Err(Error::NotSimpleRoot(i)),
        None => Ok(()),
    }
}

/// `w_0^G w_0^theta`: the longest element of `W` for `theta` empty, and the
/// minimal-length representative of `w_0 W_theta` in general. For
/// `theta = Delta - {alpha}` it maps `theta` into `Delta` and `alpha` to a
/// negative root.
pub fn longest_element(rs: &RootSystem, theta: &[usize]) -> Result<WeylElement> {
    check_subset(rs, theta)?;
    let all: Vec<usize> = (0..rs.rank()).collect();
    let w0 = longest_of_parabolic(rs, &all);
    if theta.is_empty() {
        return Ok(w0);
    }
    let w0_theta = longest_of_parabolic(rs, theta);
    Ok(w0.compose(rs, &w0_theta))
}

/// Longest element of the parabolic subgroup `W_theta`.
pub fn longest_in_levi(rs: &RootSystem, theta: &[usize]) -> Result<WeylElement> {
    check_subset(rs, theta)?;
    Ok(longest_of_parabolic(rs, theta))
}

/// Whether `w` maps the simple roots in `theta` onto `theta`.
pub fn preserves_subset(rs: &RootSystem, w: &WeylElement, theta: &[usize]) -> bool {
    theta.iter().all(|&i| {
        let img = w.apply(&rs.simple_root(i));
        theta.iter().any(|&k| img == rs.simple_root(k))
    })
}

/// Every element of `W`, each encoded by the signed-root indices of the
/// images of the simple roots, generated by breadth-first left
/// multiplication with simple reflections.
pub fn enumerate_weyl_group(rs: &RootSystem) -> Vec<Vec<u32>> {
    let roots = rs.all_roots();
    let reflection_table: Vec<Vec<u32>> = (0..rs.rank())
        .map(|i| {
            roots
                .iter()
                .map(|root| rs.signed_index(&rs.reflect(i, &root.coords)).expect("closed under reflections") as u32)
                .collect()
        })
        .collect();
    let identity: Vec<u32> = (0..rs.rank())
        .map(|i| rs.positive_index(&rs.simple_root(i)).expect("simple roots are positive") as u32)
        .collect();
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(w) = queue.pop_front() {
        for table in &reflection_table {
            let next: Vec<u32> = w.iter().map(|&k| table[k as usize]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        order.push(w);
    }
    order
}

/// `#{w in W : w(theta) = theta}` by exhaustive search; this is `|W(M)|`
/// for the standard Levi with simple roots `theta`.
pub fn count_levi_normalizer(rs: &RootSystem, elements: &[Vec<u32>], theta: &[usize]) -> usize {
    let theta_idx: Vec<u32> = theta
        .iter()
        .map(|&i| rs.positive_index(&rs.simple_root(i)).expect("simple roots are positive") as u32)
        .collect();
    elements
        .iter()
        .filter(|w| theta.iter().all(|&i| theta_idx.contains(&w[i])))
        .count()
}

/// `|W|` by orbit-stabilizer: `|W_J| = |W_J . omega_k| * |W_{J - k}|` for a
/// leaf `k` of the Dynkin subdiagram on `J`.
pub fn weyl_group_order(rs: &RootSystem) -> u128 {
    let all: Vec<usize> = (0..rs.rank()).collect();
    parabolic_order(rs, &all)
}

fn parabolic_order(rs: &RootSystem, subset: &[usize]) -> u128 {
    if subset.is_empty() {
        return 1;
    }
    let a = |i: usize, j: usize| rs.cartan().get(i, j);
    let k = *subset
        .iter()
        .min_by_key(|&&i| subset.iter().filter(|&&j| j != i && a(i, j) != 0).count())
        .expect("non-empty");
    // weights in fundamental-weight coordinates restricted to the subset
    let n = subset.len();
    let pos_k = subset.iter().position(|&i| i == k).unwrap();
    let start: Vec<i64> = (0..n).map(|p| i64::from(p == pos_k)).collect();
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(lambda) = queue.pop_front() {
        for (p, &i) in subset.iter().enumerate() {
            let c = lambda[p];
            if c == 0 {
                continue;
            }
            // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, with
            // alpha_i = sum_q a[q][i] omega_q
            let next: Vec<i64> = subset
                .iter()
                .enumerate()
                .map(|(q, &iq)| lambda[q] - c * a(iq, i))
                .collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let rest: Vec<usize> = subset.iter().copied().filter(|&i| i != k).collect();
    seen.len() as u128 * parabolic_order(rs, &rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::cartan::CartanMatrix;
    use crate::root_datum::system::build_root_system;

    fn rs(entries: Vec<Vec<i64>>) -> RootSystem {
        build_root_system(&CartanMatrix::new(entries).unwrap()).unwrap()
    }

    #[test]
    fn g2_longest_is_minus_one() {
        let g2 = rs(vec![vec![2, -3], vec![-1, 2]]);
        let w0 = longest_element(&g2, &[]).unwrap();
        assert!(w0.is_minus_identity());
        assert_eq!(w0.length(), 6);
        let again = WeylElement::from_word(&g2, &w0.word).unwrap();
        assert_eq!(again.permutation, w0.permutation);
    }

    #[test]
    fn a1_longest() {
        let a1 = rs(vec![vec![2]]);
        let w0 = longest_element(&a1, &[]).unwrap();
        assert_eq!(w0.word, vec![0]);
        assert_eq!(w0.apply(&[1]), vec![-1]);
    }

    #[test]
    fn g2_longest_modulo_levi() {
        let g2 = rs(vec![vec![2, -3], vec![-1, 2]]);
        for (theta, removed) in [(0usize, 1usize), (1, 0)] {
            let w = longest_element(&g2, &[theta]).unwrap();
            assert_eq!(w.apply(&g2.simple_root(theta)), g2.simple_root(theta));
            assert!(is_negative(&w.apply(&g2.simple_root(removed))));
        }
    }

    #[test]
    fn orders_by_orbit_stabilizer() {
        assert_eq!(weyl_group_order(&rs(vec![vec![2, -3], vec![-1, 2]])), 12);
        assert_eq!(weyl_group_order(&rs(vec![vec![2, -1], vec![-1, 2]])), 6);
        assert_eq!(weyl_group_order(&rs(vec![vec![2, 0], vec![0, 2]])), 4);
    }

    #[test]
    fn enumeration_matches_order() {
        let g2 = rs(vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(enumerate_weyl_group(&g2).len(), 12);
    }

    #[test]
    fn out_of_range_index() {
        let a1 = rs(vec![vec![2]]);
        assert!(matches!(longest_element(&a1, &[3]), Err(Error::NotSimpleRoot(3))));
        assert!(WeylElement::from_word(&a1, &[1]).is_err());
    }
}
