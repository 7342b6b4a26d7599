use super::cartan::CartanMatrix;
use super::system::{build_root_system, RootSystem};
use crate::error::{Error, Result};
use crate::lattice::{self, IMat};
use serde::{Deserialize, Serialize};

/// JSON shape of a root datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RootDatumSpec {
    pub cartan: Vec<Vec<i64>>,
    pub lattice_rank: usize,
    pub root_embed: IMat,
    pub coroot_embed: IMat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_dims: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// A root system embedded in a character lattice `X = Z^n`, with coroots in
/// the dual lattice. Row `i` of `root_embed` is `alpha_i` in `X`; row `j` of
/// `coroot_embed` is `alpha_j^vee` in `X^vee`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RootDatumSpec", into = "RootDatumSpec")]
pub struct RootDatum {
    name: Option<String>,
    lattice_rank: usize,
    root_embed: IMat,
    coroot_embed: IMat,
    system: RootSystem,
}

impl RootDatum {
    pub fn new(cartan: CartanMatrix, lattice_rank: usize, root_embed: IMat, coroot_embed: IMat) -> Result<Self> {
        let r = cartan.rank();
        for (what, m) in [("rootEmbed", &root_embed), ("corootEmbed", &coroot_embed)] {
            if m.len() != r {
                return Err(Error::input(format!("{what} has {} rows; the Cartan matrix has rank {r}", m.len())));
            }
            if let Some(row) = m.iter().find(|row| row.len() != lattice_rank) {
                return Err(Error::input(format!(
                    "{what} row has length {}; latticeRank is {lattice_rank}",
                    row.len()
                )));
            }
        }
        if lattice_rank < r {
            return Err(Error::input(format!("latticeRank {lattice_rank} is below the semisimple rank {r}")));
        }
        for i in 0..r {
            for j in 0..r {
                let p = lattice::dot(&root_embed[i], &coroot_embed[j]);
                if p != cartan.get(j, i) {
                    return Err(Error::input(format!(
                        "<rootEmbed[{i}], corootEmbed[{j}]> = {p} but the Cartan matrix requires {}",
                        cartan.get(j, i)
                    )));
                }
            }
        }
        let system = build_root_system(&cartan)?;
        Ok(RootDatum { name: None, lattice_rank, root_embed, coroot_embed, system })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: RootDatumSpec = serde_json::from_str(text)?;
        RootDatum::try_from(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("root datum serializes")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    pub fn cartan(&self) -> &CartanMatrix {
        self.system.cartan()
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.system.rank()
    }

    pub fn root_embed(&self) -> &IMat {
        &self.root_embed
    }

    pub fn coroot_embed(&self) -> &IMat {
        &self.coroot_embed
    }

    /// Every root subgroup is one-dimensional.
    pub fn is_split(&self) -> bool {
        self.cartan().root_dims().is_none_or(|d| d.iter().all(|&x| x == 1))
    }

    /// A root given in the simple-root basis, as a vector of `X`.
    pub fn root_in_lattice(&self, coords: &[i64]) -> Vec<i64> {
        combine(&self.root_embed, coords, self.lattice_rank)
    }

    /// A coroot given in the simple-coroot basis, as a vector of `X^vee`.
    pub fn coroot_in_lattice(&self, coords: &[i64]) -> Vec<i64> {
        combine(&self.coroot_embed, coords, self.lattice_rank)
    }

    /// The canonical pairing `X x X^vee -> Z`.
    pub fn pairing(&self, x: &[i64], lambda: &[i64]) -> Result<i64> {
        if x.len() != self.lattice_rank || lambda.len() != self.lattice_rank {
            return Err(Error::input(format!(
                "pairing expects vectors of length {}, got {} and {}",
                self.lattice_rank,
                x.len(),
                lambda.len()
            )));
        }
        Ok(lattice::dot(x, lambda))
    }
}

fn combine(rows: &IMat, coords: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n];
    for (row, &c) in rows.iter().zip(coords) {
        for (o, &x) in out.iter_mut().zip(row) {
            *o += c * x;
        }
    }
    out
}

impl TryFrom<RootDatumSpec> for RootDatum {
    type Error = Error;

    fn try_from(spec: RootDatumSpec) -> Result<Self> {
        let mut cartan = CartanMatrix::new(spec.cartan)?;
        if let Some(dims) = spec.root_dims {
            cartan = cartan.with_root_dims(dims)?;
        }
        let mut datum = RootDatum::new(cartan, spec.lattice_rank, spec.root_embed, spec.coroot_embed)?;
        datum.name = spec.name;
        Ok(datum)
    }
}

impl From<RootDatum> for RootDatumSpec {
    fn from(d: RootDatum) -> Self {
        RootDatumSpec {
            cartan: d.cartan().entries().to_vec(),
            lattice_rank: d.lattice_rank,
            root_dims: d.cartan().root_dims().map(<[u32]>::to_vec),
            root_embed: d.root_embed,
            coroot_embed: d.coroot_embed,
            name: d.name,
        }
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        RootDatumSpec::from(self.clone()) == RootDatumSpec::from(other.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"cartan":[[2]],"latticeRank":2,"rootEmbed":[[1,-1]],"corootEmbed":[[1,-1]]}"#;
        let d = RootDatum::from_json(text).unwrap();
        assert_eq!(d.lattice_rank(), 2);
        assert_eq!(RootDatum::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn rejects_inconsistent_pairing() {
        let text = r#"{"cartan":[[2]],"latticeRank":2,"rootEmbed":[[1,0]],"corootEmbed":[[1,0]]}"#;
        assert!(matches!(RootDatum::from_json(text), Err(Error::Input(_))));
    }

    #[test]
    fn rejects_small_lattice() {
        let c = CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(RootDatum::new(c, 1, vec![vec![1], vec![1]], vec![vec![1], vec![1]]).is_err());
    }
}
