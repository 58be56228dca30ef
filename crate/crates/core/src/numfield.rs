//! Exact arithmetic in the real cyclotomic fields `Q(2cos(pi/m))`.
//!
//! Root coordinates of the non-crystallographic groups (H3, H4, I2(m)) live in
//! these fields. Numbers are stored as residues modulo the minimal polynomial
//! of `2cos(pi/m)`, which is derived exactly from the cyclotomic polynomial
//! `Phi_{2m}` by rewriting its palindromic halves as Chebyshev polynomials.

use std::sync::Arc;

use crate::scalar::Scalar;

/// Dense univariate polynomial, coefficients in increasing degree.
type Dense<T> = Vec<T>;

fn trim<T: Scalar>(p: &mut Dense<T>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul<T: Scalar>(a: &[T], b: &[T]) -> Dense<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Exact quotient by a monic divisor; panics if the division leaves a remainder.
fn div_exact_monic<T: Scalar>(num: &[T], den: &[T]) -> Dense<T> {
    assert!(den.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let dd = den.len() - 1;
    let mut rem: Dense<T> = num.to_vec();
    if rem.len() < den.len() {
        return vec![T::zero()];
    }
    let mut quo = vec![T::zero(); rem.len() - dd];
    for k in (0..quo.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - lead.clone() * c.clone();
        }
        quo[k] = lead;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut quo);
    quo
}

/// The n-th cyclotomic polynomial, by exact division of `z^n - 1`.
pub fn cyclotomic<T: Scalar>(n: u32) -> Vec<T> {
    assert!(n >= 1);
    let mut num = vec![T::zero(); n as usize + 1];
    num[0] = -T::one();
    num[n as usize] = T::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_exact_monic(&num, &cyclotomic::<T>(d));
        }
    }
    num
}

/// Chebyshev polynomials `C_k` with `C_k(z + 1/z) = z^k + z^-k` (`C_0 = 2`).
fn chebyshev_sequence<T: Scalar>(upto: usize) -> Vec<Dense<T>> {
    let mut seq: Vec<Dense<T>> = vec![vec![T::from_int(2)], vec![T::zero(), T::one()]];
    while seq.len() <= upto {
        let k = seq.len();
        let mut next = vec![T::zero(); k + 1];
        for (i, c) in seq[k - 1].iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
        }
        for (i, c) in seq[k - 2].iter().enumerate() {
            next[i] = next[i].clone() - c.clone();
        }
        seq.push(next);
    }
    seq
}

/// Minimal polynomial of `2cos(2*pi/n)` over the rationals (monic, integer coefficients).
pub fn real_cyclotomic<T: Scalar>(n: u32) -> Vec<T> {
    match n {
        1 => return vec![T::from_int(-2), T::one()],
        2 => return vec![T::from_int(2), T::one()],
        _ => {}
    }
    let phi = cyclotomic::<T>(n);
    let d = (phi.len() - 1) / 2;
    let cheb = chebyshev_sequence::<T>(d);
    let mut out: Dense<T> = vec![T::zero(); d + 1];
    // Phi_n(z) / z^d = c_d + sum_k c_{d+k} (z^k + z^-k)
    out[0] = phi[d].clone();
    for k in 1..=d {
        let a = phi[d + k].clone();
        for (i, c) in cheb[k].iter().enumerate() {
            out[i] = out[i].clone() + a.clone() * c.clone();
        }
    }
    trim(&mut out);
    out
}

/// Minimal polynomial of `2cos(pi/m)`.
pub fn min_poly_two_cos_pi_over<T: Scalar>(m: u32) -> Vec<T> {
    real_cyclotomic(2 * m)
}

/// The field `Q(2cos(pi/m))` (or its ring of integers, for integral scalar
/// types) presented as residues modulo a monic minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField<T: Scalar> {
    modulus: Arc<Vec<T>>,
    m: u32,
}

/// A residue class modulo the field's minimal polynomial; coefficients in
/// increasing powers of the generator `c = 2cos(pi/m)`, always fully reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> AlgebraicNumber<T> {
    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> NumberField<T> {
    /// `Q` itself (degree one).
    pub fn rationals() -> Self {
        NumberField { modulus: Arc::new(vec![T::zero(), T::one()]), m: 1 }
    }

    /// `Q(2cos(pi/m))`. For `m <= 3` this is `Q`.
    pub fn two_cos_pi_over(m: u32) -> Self {
        assert!(m >= 1);
        if m <= 3 {
            return Self::rationals();
        }
        NumberField { modulus: Arc::new(min_poly_two_cos_pi_over(m)), m }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[T] {
        &self.modulus
    }

    pub fn from_int(&self, v: i64) -> AlgebraicNumber<T> {
        let mut coeffs = vec![T::zero(); self.degree()];
        coeffs[0] = T::from_int(v);
        AlgebraicNumber { coeffs }
    }

    pub fn zero(&self) -> AlgebraicNumber<T> {
        self.from_int(0)
    }

    pub fn one(&self) -> AlgebraicNumber<T> {
        self.from_int(1)
    }

    /// `2cos(pi/k)` as an element of this field. Only `k` in {1, 2, 3} and the
    /// field's own `m` are representable.
    pub fn two_cos_pi_over_elem(&self, k: u32) -> Option<AlgebraicNumber<T>> {
        match k {
            1 => Some(self.from_int(-2)),
            2 => Some(self.zero()),
            3 => Some(self.one()),
            _ if k == self.m && self.degree() >= 2 => {
                let mut coeffs = vec![T::zero(); self.degree()];
                coeffs[1] = T::one();
                Some(AlgebraicNumber { coeffs })
            }
            _ => None,
        }
    }

    /// Reduce an arbitrary dense polynomial in the generator.
    pub fn reduce(&self, mut p: Vec<T>) -> AlgebraicNumber<T> {
        let d = self.degree();
        while p.len() > d {
            let lead = p.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (j, c) in self.modulus[..d].iter().enumerate() {
                p[shift + j] = p[shift + j].clone() - lead.clone() * c.clone();
            }
        }
        p.resize(d, T::zero());
        AlgebraicNumber { coeffs: p }
    }

    pub fn add(&self, a: &AlgebraicNumber<T>, b: &AlgebraicNumber<T>) -> AlgebraicNumber<T> {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() + y.clone()).collect();
        AlgebraicNumber { coeffs }
    }

    pub fn sub(&self, a: &AlgebraicNumber<T>, b: &AlgebraicNumber<T>) -> AlgebraicNumber<T> {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() - y.clone()).collect();
        AlgebraicNumber { coeffs }
    }

    pub fn neg(&self, a: &AlgebraicNumber<T>) -> AlgebraicNumber<T> {
        AlgebraicNumber { coeffs: a.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul(&self, a: &AlgebraicNumber<T>, b: &AlgebraicNumber<T>) -> AlgebraicNumber<T> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        self.reduce(poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Approximate real value under the embedding `c -> 2cos(pi/m)`.
    pub fn to_f64(&self, a: &AlgebraicNumber<T>) -> f64
    where
        T: num_traits::ToPrimitive,
    {
        let c = if self.degree() >= 2 { 2.0 * (std::f64::consts::PI / self.m as f64).cos() } else { 0.0 };
        a.coeffs.iter().rev().fold(0.0, |acc, x| acc * c + x.to_f64().unwrap_or(f64::NAN))
    }
}
