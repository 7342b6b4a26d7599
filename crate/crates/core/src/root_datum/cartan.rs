use crate::error::{Error, Result};
use crate::rat::Q;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Cartan matrix with `entries[i][j] = <alpha_j, alpha_i^vee>`: rows are
/// indexed by simple coroots, columns by simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    /// `dim U_beta` per positive root in enumeration order; `None` means split
    /// (every root subgroup one-dimensional).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root_dims: Option<Vec<u32>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!("Cartan matrix row {i} has length {} (expected {n})", row.len())));
            }
            if row[i] != 2 {
                return Err(Error::input(format!("diagonal entry a[{i}][{i}] = {} (expected 2)", row[i])));
            }
            for (j, &x) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if x > 0 {
                    return Err(Error::input(format!("off-diagonal entry a[{i}][{j}] = {x} is positive")));
                }
                if (x == 0) != (entries[j][i] == 0) {
                    return Err(Error::input(format!("a[{i}][{j}] and a[{j}][{i}] must vanish together")));
                }
            }
        }
        Ok(CartanMatrix { entries, root_dims: None })
    }

    pub fn with_root_dims(mut self, dims: Vec<u32>) -> Result<Self> {
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::input("root dimensions must be positive"));
        }
        self.root_dims = Some(dims);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn root_dims(&self) -> Option<&[u32]> {
        self.root_dims.as_deref()
    }

    /// The principal submatrix on the given simple-root indices.
    pub fn submatrix(&self, idx: &[usize]) -> CartanMatrix {
        CartanMatrix {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
            root_dims: None,
        }
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..n {
                    if !seen[j] && self.entries[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `d_i` with `d_i a[i][j] = d_j a[j][i]`, so that `(alpha_i, alpha_j) =
    /// d_i a[i][j]` is a symmetric form; `d_i` is half the squared length of
    /// `alpha_i`. The shortest root of each component gets 1.
    pub fn symmetrizer(&self) -> Result<Vec<Q>> {
        let n = self.rank();
        let mut d: Vec<Option<Q>> = vec![None; n];
        for comp in self.components() {
            d[comp[0]] = Some(Q::one());
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                let di = d[i].expect("assigned before push");
                for j in 0..n {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    let dj = di * Q::from_integer(self.entries[i][j]) / Q::from_integer(self.entries[j][i]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(prev) if prev != dj => {
                            return Err(Error::input("Cartan matrix is not symmetrizable"));
                        }
                        Some(_) => {}
                    }
                }
            }
            let min = comp.iter().map(|&i| d[i].unwrap()).min().unwrap();
            for &i in &comp {
                d[i] = Some(d[i].unwrap() / min);
            }
        }
        Ok(d.into_iter().map(|x| x.unwrap_or_else(Q::zero)).collect())
    }

    pub fn is_simply_laced(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| i == j || x == 0 || x == -1))
    }
}
