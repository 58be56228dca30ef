//! Root systems in simple-root coordinates.
//!
//! The reflection `s_i` acts by `s_i(a_j) = a_j - A[i][j] a_i`. For the
//! crystallographic types `A` is a Cartan matrix and everything is integral;
//! otherwise `A[i][j] = -2cos(pi/m_ij)` in the field `Q(2cos(pi/m))`.

use rustc_hash::FxHashMap;

use crate::ctype::{CoxeterType, Family};
use crate::error::{CoxeterError, Result};
use crate::numfield::{AlgebraicNumber, NumberField};
use crate::scalar::Scalar;

/// Upper bound on positive roots before construction is declared runaway.
const MAX_POSITIVE_ROOTS: usize = 30_000;

#[derive(Clone, Debug)]
pub struct RootSystem<T: Scalar> {
    field: NumberField<T>,
    rank: usize,
    cartan: Vec<Vec<AlgebraicNumber<T>>>,
    /// Positive roots first (simple roots at `0..rank`), then their negatives.
    roots: Vec<Vec<AlgebraicNumber<T>>>,
    positive: usize,
    /// `actions[i][j]` is the index of `s_i(root_j)`.
    actions: Vec<Vec<u16>>,
    /// Simple roots occurring in each positive root, as a bitmask.
    supports: Vec<u32>,
}

/// `A[i][j]` for a crystallographic edge; `short` says whether `a_i` is the
/// shorter root of the pair.
fn cartan_entry(m: u32, short: bool) -> i64 {
    match m {
        2 => 0,
        3 => -1,
        4 if short => -2,
        4 => -1,
        6 if short => -3,
        6 => -1,
        _ => unreachable!("non-crystallographic label {m}"),
    }
}

impl<T: Scalar> RootSystem<T> {
    pub fn new(ctype: CoxeterType) -> Result<Self> {
        let rank = ctype.rank();
        if rank > 31 {
            return Err(CoxeterError::Unsupported(format!("rank {rank} exceeds 31")));
        }
        let mat = ctype.coxeter_matrix();
        let crystallographic = ctype.is_crystallographic();
        let field_m = mat.iter().flatten().copied().max().unwrap_or(1);
        let field = if crystallographic { NumberField::rationals() } else { NumberField::two_cos_pi_over(field_m) };

        let mut cartan = vec![vec![field.zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                cartan[i][j] = if i == j {
                    field.from_int(2)
                } else if crystallographic {
                    // B_n: a_1 short; F4 (Bourbaki): a_3, a_4 short; G2: a_2 short
                    let short = match ctype.family() {
                        Family::B => i < j,
                        _ => i > j,
                    };
                    field.from_int(cartan_entry(mat[i][j], short))
                } else {
                    let c = field.two_cos_pi_over_elem(mat[i][j]).ok_or_else(|| {
                        CoxeterError::Unsupported(format!("label {} in field of 2cos(pi/{field_m})", mat[i][j]))
                    })?;
                    field.neg(&c)
                };
            }
        }

        let mut sys = RootSystem { field, rank, cartan, roots: Vec::new(), positive: 0, actions: Vec::new(), supports: Vec::new() };
        sys.close_positive_roots()?;
        sys.build_actions()?;
        Ok(sys)
    }

    fn reflect(&self, i: usize, v: &[AlgebraicNumber<T>]) -> Vec<AlgebraicNumber<T>> {
        let f = &self.field;
        let mut pairing = f.zero();
        for (a, x) in self.cartan[i].iter().zip(v) {
            if !a.is_zero() && !x.is_zero() {
                pairing = f.add(&pairing, &f.mul(a, x));
            }
        }
        let mut out = v.to_vec();
        out[i] = f.sub(&v[i], &pairing);
        out
    }

    /// Positive roots by closure: `s_i` maps every positive root other than
    /// `a_i` to a positive root, and every positive root is reached this way
    /// from a simple root.
    fn close_positive_roots(&mut self) -> Result<()> {
        let f = self.field.clone();
        let mut positive: Vec<Vec<AlgebraicNumber<T>>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        let mut seen: FxHashMap<Vec<AlgebraicNumber<T>>, usize> =
            positive.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut head = 0;
        while head < positive.len() {
            for i in 0..self.rank {
                if head == i {
                    continue;
                }
                let img = self.reflect(i, &positive[head]);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), positive.len());
                    positive.push(img);
                    if positive.len() > MAX_POSITIVE_ROOTS {
                        return Err(CoxeterError::Invariant("root closure does not terminate".into()));
                    }
                }
            }
            head += 1;
        }
        self.positive = positive.len();
        self.supports = positive
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0u32, |m, (k, _)| m | (1 << k)))
            .collect();
        let negatives: Vec<_> = positive.iter().map(|v| v.iter().map(|x| f.neg(x)).collect()).collect();
        self.roots = positive;
        self.roots.extend(negatives);
        if self.roots.len() > u16::MAX as usize {
            return Err(CoxeterError::Unsupported("too many roots for 16-bit indices".into()));
        }
        Ok(())
    }

    fn build_actions(&mut self) -> Result<()> {
        let index: FxHashMap<&Vec<AlgebraicNumber<T>>, u16> =
            self.roots.iter().enumerate().map(|(k, v)| (v, k as u16)).collect();
        let mut actions = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let perm = self
                .roots
                .iter()
                .map(|r| {
                    let img = self.reflect(i, r);
                    index.get(&img).copied().ok_or_else(|| CoxeterError::Invariant("reflection left the root set".into()))
                })
                .collect::<Result<Vec<u16>>>()?;
            actions.push(perm);
        }
        self.actions = actions;
        Ok(())
    }

    pub fn field(&self) -> &NumberField<T> {
        &self.field
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn positive_count(&self) -> usize {
        self.positive
    }
    pub fn roots(&self) -> &[Vec<AlgebraicNumber<T>>] {
        &self.roots
    }
    pub fn actions(&self) -> &[Vec<u16>] {
        &self.actions
    }
    pub fn supports(&self) -> &[u32] {
        &self.supports
    }
    pub fn cartan(&self) -> &[Vec<AlgebraicNumber<T>>] {
        &self.cartan
    }
}
