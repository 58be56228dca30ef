//! Irreducible finite Coxeter types and their diagrams.
//!
//! Generator numbering (0-based here, 1-based in every serialized form):
//!
//! * `A_n`: `s_1, ..., s_n` with `s_i = (i, i+1)`.
//! * `B_n`: `t, s_1, ..., s_{n-1}` with `t = (1)-`.
//! * `D_n`: `u, s_1, ..., s_{n-1}` with `u = (1,-2)`.
//! * `E_6..E_8`, `F_4`, `H_3`, `H_4`: Bourbaki labels.
//! * `I_2(m)`: `s_1, s_2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CoxeterError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    I2,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterType {
    family: Family,
    rank: usize,
    /// Only meaningful for `I2`.
    m: u32,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize, m: Option<u32>) -> Result<Self> {
        let bad = |why: String| Err(CoxeterError::InvalidType(why));
        match family {
            Family::A if rank < 1 => return bad(format!("A_{rank}: rank must be at least 1")),
            Family::B if rank < 2 => return bad(format!("B_{rank}: rank must be at least 2")),
            Family::D if rank < 4 => return bad(format!("D_{rank}: rank must be at least 4")),
            Family::I2 if rank != 2 => return bad(format!("I2 must have rank 2, got {rank}")),
            Family::E6 if rank != 6 => return bad("E6 has rank 6".into()),
            Family::E7 if rank != 7 => return bad("E7 has rank 7".into()),
            Family::E8 if rank != 8 => return bad("E8 has rank 8".into()),
            Family::F4 if rank != 4 => return bad("F4 has rank 4".into()),
            Family::H3 if rank != 3 => return bad("H3 has rank 3".into()),
            Family::H4 if rank != 4 => return bad("H4 has rank 4".into()),
            _ => {}
        }
        let m = match (family, m) {
            (Family::I2, Some(m)) if m >= 3 => m,
            (Family::I2, Some(m)) => return bad(format!("I2({m}): m must be at least 3")),
            (Family::I2, None) => return bad("I2 requires a parameter m".into()),
            (_, Some(_)) => return bad(format!("{family:?} takes no parameter m")),
            (_, None) => 0,
        };
        Ok(CoxeterType { family, rank, m })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n, None)
    }
    pub fn b(n: usize) -> Result<Self> {
        Self::new(Family::B, n, None)
    }
    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n, None)
    }
    pub fn i2(m: u32) -> Result<Self> {
        Self::new(Family::I2, 2, Some(m))
    }
    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = match family {
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 | Family::H4 => 4,
            Family::H3 => 3,
            _ => return Err(CoxeterError::InvalidType(format!("{family:?} needs an explicit rank"))),
        };
        Self::new(family, rank, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn dihedral_m(&self) -> Option<u32> {
        (self.family == Family::I2).then_some(self.m)
    }

    /// Types A, B, D: elements have a signed-permutation model.
    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::D)
    }

    /// Number of points the signed-permutation model acts on.
    pub fn classical_degree(&self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B | Family::D => Some(self.rank),
            _ => None,
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match self.family {
            Family::H3 | Family::H4 => false,
            Family::I2 => matches!(self.m, 3 | 4 | 6),
            _ => true,
        }
    }

    /// Edges of the Coxeter diagram as `(i, j, m)` with `i < j`, `m >= 3`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.rank;
        let chain = |start: usize, end: usize| (start..end).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
        match self.family {
            Family::A => chain(0, n - 1),
            Family::B => {
                let mut e = vec![(0, 1, 4)];
                e.extend(chain(1, n - 1));
                e
            }
            Family::D => {
                let mut e = vec![(0, 2, 3)];
                e.extend(chain(1, n - 1));
                e
            }
            Family::I2 => vec![(0, 1, self.m)],
            Family::E6 | Family::E7 | Family::E8 => {
                // Bourbaki: 1-3-4-5-6(-7(-8)), 2 attached to 4
                let mut e = vec![(0, 2, 3), (1, 3, 3)];
                e.extend(chain(2, n - 1));
                e
            }
            Family::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            Family::H3 => vec![(0, 1, 5), (1, 2, 3)],
            Family::H4 => vec![(0, 1, 5), (1, 2, 3), (2, 3, 3)],
        }
    }

    /// Full Coxeter matrix: `m(s,s) = 1`, `m(s,t) = 2` for commuting pairs.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank;
        let mut mat = vec![vec![2u32; n]; n];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, m) in self.edges() {
            mat[i][j] = m;
            mat[j][i] = m;
        }
        mat
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2 => write!(f, "I2:{}", self.m),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = CoxeterError;

    /// Family letter followed by the rank (`A3`, `D5`, `E6`), or `I2:m`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || CoxeterError::Parse(format!("unrecognized group '{s}'"));
        if let Some(rest) = s.strip_prefix("I2:").or_else(|| s.strip_prefix("i2:")) {
            let m: u32 = rest.trim().parse().map_err(|_| bad())?;
            return Self::i2(m);
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (letter, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('D', _) => Family::D,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('H', 3) => Family::H3,
            ('H', 4) => Family::H4,
            ('E' | 'F' | 'H', _) => {
                return Err(CoxeterError::InvalidType(format!("no finite type {letter}{rank}")))
            }
            _ => return Err(bad()),
        };
        Self::new(family, rank, None)
    }
}
