//! Sparse multivariate polynomials over an exact ring, and the symbolic
//! matrix `X = (x_ij)` used for the MacMahon master theorem.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::scalar::Scalar;

/// Sparse exponent vector: `(variable, exponent)` pairs sorted by variable,
/// exponents positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut m: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in exps {
            *m.entry(v).or_default() += e;
        }
        Monomial(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut k) = (0, 0);
        while i < a.len() && k < b.len() {
            match a[i].0.cmp(&b[k].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[k]);
                    k += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[k].1));
                    i += 1;
                    k += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[k..]);
        Monomial(out)
    }
}

/// `terms` never stores a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial<T: Scalar> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for SparsePolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> SparsePolynomial<T> {
    pub fn zero() -> Self {
        SparsePolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: u32) -> Self {
        Self::term(Monomial::var(v), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only monomials accepted by `keep`. With a `keep` that
    /// is closed under taking divisors, this is the truncation of the full
    /// product.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let mut acc: FxHashMap<Monomial, T> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !keep(&m) {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                let slot = acc.entry(m).or_insert_with(T::zero);
                *slot = slot.clone() + c;
            }
        }
        SparsePolynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn retain(&mut self, keep: impl Fn(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }
}

/// Variable index of `x_ij` (0-based) in an `n × n` symbolic matrix.
pub fn matrix_var(n: usize, i: usize, j: usize) -> u32 {
    (i * n + j) as u32
}

/// The monomial `x_{1 w(1)} ⋯ x_{n w(n)}` for a 0-based one-line permutation.
pub fn permutation_monomial(w: &[usize]) -> Monomial {
    let n = w.len();
    Monomial::from_exponents(w.iter().enumerate().map(|(i, &j)| (matrix_var(n, i, j), 1)))
}

/// Whether every exponent is 1 and no row or column index repeats: the
/// divisors of permutation monomials.
pub fn is_partial_permutation(n: usize, m: &Monomial) -> bool {
    let mut rows = 0u64;
    let mut cols = 0u64;
    for &(v, e) in m.exponents() {
        let (i, j) = (v as usize / n, v as usize % n);
        if e != 1 || rows & (1 << i) != 0 || cols & (1 << j) != 0 {
            return false;
        }
        rows |= 1 << i;
        cols |= 1 << j;
    }
    true
}

/// Minors `det X[R, C]` of the symbolic `n × n` matrix, by Laplace expansion
/// along the first row, memoized over `(rows, columns)` bitmasks.
pub struct SymbolicMinors<T: Scalar> {
    n: usize,
    memo: FxHashMap<(u32, u32), SparsePolynomial<T>>,
}

impl<T: Scalar> SymbolicMinors<T> {
    pub fn new(n: usize) -> Self {
        assert!(n <= 8, "symbolic matrices are limited to 8 × 8");
        SymbolicMinors { n, memo: FxHashMap::default() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minor(&mut self, rows: u32, cols: u32) -> SparsePolynomial<T> {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        if rows == 0 {
            return SparsePolynomial::one();
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let mut out = SparsePolynomial::zero();
        let mut sign = T::one();
        for c in (0..self.n).filter(|&c| cols & (1 << c) != 0) {
            let sub = self.minor(rows & !(1 << r), cols & !(1 << c));
            let x = SparsePolynomial::var(matrix_var(self.n, r, c));
            out = out.add(&x.mul(&sub).scale(&sign));
            sign = -sign;
        }
        self.memo.insert((rows, cols), out.clone());
        out
    }

    /// Principal minor `det X_I`.
    pub fn principal(&mut self, set: u32) -> SparsePolynomial<T> {
        self.minor(set, set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type P = SparsePolynomial<BigRational>;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = P::var(0);
        let y = P::var(1);
        let s = x.add(&y).sub(&x);
        assert_eq!(s, y);
        assert!(x.sub(&x).is_zero());
        assert!(P::constant(BigRational::zero()).is_zero());
    }

    #[test]
    fn square_of_binomial() {
        let x = P::var(0);
        let y = P::var(1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient(&Monomial::from_exponents([(0, 1), (1, 1)])), r(2));
        assert_eq!(sq.coefficient(&Monomial::from_exponents([(0, 2)])), r(1));
        let ml = s.mul_filtered(&s, Monomial::is_multilinear);
        assert_eq!(ml.len(), 1);
    }

    #[test]
    fn two_by_two_determinant() {
        let mut m = SymbolicMinors::<BigRational>::new(2);
        let d = m.principal(0b11);
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&permutation_monomial(&[0, 1])), r(1));
        assert_eq!(d.coefficient(&permutation_monomial(&[1, 0])), r(-1));
    }

    #[test]
    fn determinant_coefficients_are_signs() {
        let mut m = SymbolicMinors::<BigRational>::new(4);
        let d = m.principal(0b1111);
        assert_eq!(d.len(), 24);
        for (mono, c) in d.terms() {
            assert!(is_partial_permutation(4, mono));
            assert!(c.is_one() || *c == -BigRational::one());
        }
        // sign of the 4-cycle (0 1 2 3) is -1
        assert_eq!(d.coefficient(&permutation_monomial(&[1, 2, 3, 0])), r(-1));
    }

    #[test]
    fn partial_permutations() {
        assert!(is_partial_permutation(3, &permutation_monomial(&[2, 0, 1])));
        assert!(!is_partial_permutation(3, &Monomial::from_exponents([(0, 1), (1, 1)])));
        assert!(!is_partial_permutation(3, &Monomial::from_exponents([(0, 2)])));
    }

    fn poly() -> impl Strategy<Value = P> {
        prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5).prop_map(|ts| {
            let mut p = P::zero();
            for (a, b, c) in ts {
                p.add_term(Monomial::from_exponents([(a, 1), (b, 1)]), r(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            prop_assert!(a.mul(&b).terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
