//! Integer matrices, Smith normal form and the lattice operations built on it.
//!
//! Matrices are dense row-major `Vec<Vec<i64>>`. Lattices are given by a list
//! of basis vectors (rows).

use crate::error::{Error, Result};
use crate::rat::Q;
use num_traits::Zero;

pub type IMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &IMat, ncols: usize) -> IMat {
    (0..ncols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

pub fn mat_vec(a: &IMat, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IMat,
    pub v: IMat,
    pub d: IMat,
    /// Nonzero invariant factors, all positive.
    pub invariants: Vec<i64>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

fn swap_cols(m: &mut IMat, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i -= f * row_t
fn row_axpy(m: &mut IMat, i: usize, t: usize, f: i64) {
    let src = m[t].clone();
    for (x, s) in m[i].iter_mut().zip(src) {
        *x -= f * s;
    }
}

/// col_j -= f * col_t
fn col_axpy(m: &mut IMat, j: usize, t: usize, f: i64) {
    for row in m.iter_mut() {
        row[j] -= f * row[t];
    }
}

/// Smith normal form of an `nrows x ncols` matrix.
pub fn smith_normal_form(a: &IMat, ncols: usize) -> Snf {
    let m = a.len();
    let n = ncols;
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);

    for t in 0..m.min(n) {
        // pivot: smallest nonzero |entry| in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..m {
                while d[i][t] != 0 {
                    let f = d[i][t] / d[t][t];
                    row_axpy(&mut d, i, t, f);
                    row_axpy(&mut u, i, t, f);
                    if d[i][t] != 0 {
                        d.swap(i, t);
                        u.swap(i, t);
                        changed = true;
                    }
                }
            }
            for j in t + 1..n {
                while d[t][j] != 0 {
                    let f = d[t][j] / d[t][t];
                    col_axpy(&mut d, j, t, f);
                    col_axpy(&mut v, j, t, f);
                    if d[t][j] != 0 {
                        swap_cols(&mut d, j, t);
                        swap_cols(&mut v, j, t);
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            let p = d[t][t];
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % p != 0));
            match bad_row {
                Some(i) => {
                    // row_t += row_i, then the block is reduced again
                    row_axpy(&mut d, t, i, -1);
                    row_axpy(&mut u, t, i, -1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }

    let invariants = (0..m.min(n))
        .map(|i| d[i][i])
        .take_while(|&x| x != 0)
        .collect();
    Snf { u, v, d, invariants }
}

/// Saturated basis (rows) of `{x in Z^ncols : A x = 0}`.
pub fn integer_kernel(a: &IMat, ncols: usize) -> IMat {
    if a.is_empty() {
        return identity(ncols);
    }
    let snf = smith_normal_form(a, ncols);
    let r = snf.rank();
    (r..ncols)
        .map(|j| snf.v.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn rank(a: &IMat, ncols: usize) -> usize {
    if a.is_empty() {
        return 0;
    }
    smith_normal_form(a, ncols).rank()
}

/// Content (gcd of entries) of an integer vector.
pub fn content(x: &[i64]) -> i64 {
    x.iter().fold(0i64, |g, &a| num_integer::gcd(g, a))
}

/// Divide out the content; the zero vector is returned unchanged.
pub fn primitive(x: &[i64]) -> Vec<i64> {
    let g = content(x);
    if g == 0 {
        return x.to_vec();
    }
    x.iter().map(|a| a / g).collect()
}

/// Solve `c * basis = target` over Q (basis rows linearly independent).
/// Returns `None` when the target is outside the rational span.
pub fn rational_coordinates(basis: &IMat, target: &[i64]) -> Option<Vec<Q>> {
    let k = basis.len();
    let n = target.len();
    // augmented system: columns are basis vectors, unknowns c_0..c_k
    let mut rows: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            let mut r: Vec<Q> = basis.iter().map(|b| Q::from_integer(b[j])).collect();
            r.push(Q::from_integer(target[j]));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = Q::from_integer(1) / rows[row][col];
        for x in rows[row].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != row && !rows[i][col].is_zero() {
                let f = rows[i][col];
                let src = rows[row].clone();
                for (x, s) in rows[i].iter_mut().zip(src) {
                    *x -= f * s;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut c = vec![Q::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = rows[i][k];
    }
    Some(c)
}

/// Index `[ambient : sub]` of a full-rank sublattice. Both lattices are given
/// by row bases inside a common `Z^n`; every `sub` vector must lie in `ambient`.
pub fn sublattice_index(sub: &IMat, ambient: &IMat) -> Result<u64> {
    let k = ambient.len();
    if sub.len() != k {
        return Err(Error::Structural(format!(
            "sublattice rank {} differs from ambient rank {k}",
            sub.len()
        )));
    }
    if k == 0 {
        return Ok(1);
    }
    let mut coords: IMat = Vec::with_capacity(k);
    for s in sub {
        let c = rational_coordinates(ambient, s)
            .ok_or_else(|| Error::Structural("vector outside the ambient span".into()))?;
        if c.iter().any(|x| !x.is_integer()) {
            return Err(Error::Structural("vector outside the ambient lattice".into()));
        }
        coords.push(c.iter().map(|x| x.to_integer()).collect());
    }
    let snf = smith_normal_form(&coords, k);
    if snf.rank() < k {
        return Err(Error::Structural("sublattice is not of full rank".into()));
    }
    Ok(snf.invariants.iter().map(|x| x.unsigned_abs()).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mul(a: &IMat, b: &IMat, inner: usize, ncols: usize) -> IMat {
        a.iter()
            .map(|row| {
                (0..ncols)
                    .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn snf_of_known_matrix() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let snf = smith_normal_form(&a, 3);
        assert_eq!(snf.invariants, vec![2, 6, 12]);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + y + z = 0 together with 2x = 2y
        let a = vec![vec![1, 1, 1], vec![2, -2, 0]];
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive(&k[0]).iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert_eq!(content(&k[0]), 1);
    }

    #[test]
    fn index_of_scaled_lattice() {
        let amb = identity(2);
        let sub = vec![vec![2, 0], vec![1, 3]];
        assert_eq!(sublattice_index(&sub, &amb).unwrap(), 6);
        assert!(sublattice_index(&vec![vec![1, 1]], &amb).is_err());
        assert!(sublattice_index(&vec![vec![1, 1], vec![2, 2]], &amb).is_err());
    }

    fn leibniz_det(m: &IMat) -> i64 {
        match m.len() {
            1 => m[0][0],
            2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            3 => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            _ => unreachable!(),
        }
    }

    /// Count lattice points of `span_Z(rows)` in the box `[0, n)^k`.
    fn brute_force_index(rows: &IMat, k: usize) -> u64 {
        let n = leibniz_det(rows).unsigned_abs();
        let total = n.pow(k as u32);
        let mut hits = 0u64;
        for idx in 0..total {
            let mut x = Vec::with_capacity(k);
            let mut r = idx;
            for _ in 0..k {
                x.push((r % n) as i64);
                r /= n;
            }
            if let Some(c) = rational_coordinates(rows, &x) {
                if c.iter().all(|v| v.is_integer()) {
                    hits += 1;
                }
            }
        }
        total / hits
    }

    proptest! {
        #[test]
        fn snf_factorization_holds(a in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 1..4)) {
            let snf = smith_normal_form(&a, 3);
            let uav = mul(&mul(&snf.u, &a, a.len(), 3), &snf.v, 3, 3);
            prop_assert_eq!(&uav, &snf.d);
            for w in snf.invariants.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            for (i, row) in snf.d.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if i != j { prop_assert_eq!(*x, 0); }
                }
            }
        }

        #[test]
        fn kernel_vectors_are_annihilated(a in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 1..3)) {
            let k = integer_kernel(&a, 4);
            prop_assert_eq!(k.len() + rank(&a, 4), 4);
            for v in &k {
                prop_assert!(mat_vec(&a, v).iter().all(|x| *x == 0));
            }
        }

        #[test]
        fn index_matches_coset_count(
            k in 1usize..4,
            entries in prop::collection::vec(-4i64..5, 9),
        ) {
            let rows: IMat = (0..k).map(|i| entries[i * 3..i * 3 + k].to_vec()).collect();
            let det = leibniz_det(&rows).unsigned_abs();
            prop_assume!(det != 0 && det.pow(k as u32) <= 10_000);
            let idx = sublattice_index(&rows, &identity(k)).unwrap();
            prop_assert_eq!(idx, brute_force_index(&rows, k));
        }
    }
}
