//! Cartan matrices of the simple types (Bourbaki numbering) and the root
//! data of `GL_n`, `SL_n`, `PGL_n` and of the adjoint and simply connected
//! groups of each type.

use super::cartan::CartanMatrix;
use super::datum::RootDatum;
use crate::error::{Error, Result};
use crate::lattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => SimpleType::A,
            'B' => SimpleType::B,
            'C' => SimpleType::C,
            'D' => SimpleType::D,
            'E' => SimpleType::E,
            'F' => SimpleType::F,
            'G' => SimpleType::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            SimpleType::A => n >= 1,
            SimpleType::B | SimpleType::C => n >= 2,
            SimpleType::D => n >= 3,
            SimpleType::E => (6..=8).contains(&n),
            SimpleType::F => n == 4,
            SimpleType::G => n == 2,
        }
    }
}

/// Every simple type of rank at most `max_rank`, each once (so `C2` is
/// skipped as a duplicate of `B2`, and `D3` of `A3`).
pub fn simple_types_up_to(max_rank: usize) -> Vec<(SimpleType, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push((SimpleType::A, n));
        if n >= 2 {
            out.push((SimpleType::B, n));
        }
        if n >= 3 {
            out.push((SimpleType::C, n));
        }
        if n >= 4 {
            out.push((SimpleType::D, n));
        }
    }
    for (t, n) in [(SimpleType::E, 6), (SimpleType::E, 7), (SimpleType::E, 8), (SimpleType::F, 4), (SimpleType::G, 2)] {
        if n <= max_rank {
            out.push((t, n));
        }
    }
    out
}

pub fn cartan_matrix(t: SimpleType, n: usize) -> Result<CartanMatrix> {
    if !t.valid_rank(n) {
        return Err(Error::Unsupported(format!("{}{n}", t.letter())));
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t {
        SimpleType::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        SimpleType::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        SimpleType::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        SimpleType::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        SimpleType::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        SimpleType::F => {
            link(0, 1, -1, -1);
            // alpha_3, alpha_4 short
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        SimpleType::G => {
            // alpha short, beta long: <beta, alpha^vee> = -3, <alpha, beta^vee> = -1
            link(0, 1, -3, -1);
        }
    }
    CartanMatrix::new(a)
}

/// Parses names like `G2`, `E8`, `B3sc`, `A2ad` into a type, rank and
/// whether the simply connected form was requested.
pub fn parse_type_name(name: &str) -> Option<(SimpleType, usize, bool)> {
    let name = name.trim();
    let (body, sc) = if let Some(b) = name.strip_suffix("sc") {
        (b, true)
    } else if let Some(b) = name.strip_suffix("ad") {
        (b, false)
    } else {
        (name, false)
    };
    let mut chars = body.chars();
    let t = SimpleType::from_letter(chars.next()?)?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = rest.parse().ok()?;
    t.valid_rank(n).then_some((t, n, sc))
}

/// The adjoint datum: `X` is the root lattice.
pub fn adjoint_datum(t: SimpleType, n: usize) -> Result<RootDatum> {
    let c = cartan_matrix(t, n)?;
    let coroots = c.entries().to_vec();
    Ok(RootDatum::new(c, n, lattice::identity(n), coroots)?.with_name(format!("{}{n}", t.letter())))
}

/// The simply connected datum: `X^vee` is the coroot lattice.
pub fn simply_connected_datum(t: SimpleType, n: usize) -> Result<RootDatum> {
    let c = cartan_matrix(t, n)?;
    let roots = lattice::transpose(&c.entries().to_vec(), n);
    Ok(RootDatum::new(c, n, roots, lattice::identity(n))?.with_name(format!("{}{n}sc", t.letter())))
}

/// `GL_n` with `X = Z^n` and `alpha_i = e_i - e_{i+1} = alpha_i^vee`.
pub fn gl_datum(n: usize) -> Result<RootDatum> {
    if n == 0 {
        return Err(Error::input("GL_n needs n >= 1"));
    }
    let c = if n == 1 { CartanMatrix::new(Vec::new())? } else { cartan_matrix(SimpleType::A, n - 1)? };
    let embed: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| (0..n).map(|k| i64::from(k == i) - i64::from(k == i + 1)).collect())
        .collect();
    Ok(RootDatum::new(c, n, embed.clone(), embed)?.with_name(format!("GL{n}")))
}

/// Resolves a built-in name: `GL<n>`, `SL<n>`, `PGL<n>`, or a type name with
/// optional `sc`/`ad` suffix (adjoint by default).
pub fn builtin_datum(name: &str) -> Result<RootDatum> {
    let unknown = || Error::input(format!("unknown group or type '{name}'"));
    let trimmed = name.trim();
    let upper = trimmed.to_ascii_uppercase();
    for (prefix, kind) in [("PGL", 0), ("GL", 1), ("SL", 2)] {
        if let Some(num) = upper.strip_prefix(prefix) {
            let n: usize = num.parse().map_err(|_| unknown())?;
            return match kind {
                1 => gl_datum(n),
                _ if n < 2 => Err(unknown()),
                0 => Ok(adjoint_datum(SimpleType::A, n - 1)?.with_name(format!("PGL{n}"))),
                _ => Ok(simply_connected_datum(SimpleType::A, n - 1)?.with_name(format!("SL{n}"))),
            };
        }
    }
    let (t, n, sc) = parse_type_name(trimmed).ok_or_else(unknown)?;
    if sc {
        simply_connected_datum(t, n)
    } else {
        adjoint_datum(t, n)
    }
}
