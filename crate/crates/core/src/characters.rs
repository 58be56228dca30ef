//! Permutation characters `π_J = Ind_{W_J}^W 1`, the sign character, and the
//! identities relating them: Solomon's alternating sum, the descent/ascent
//! characterization of `w_{J(w)}`, and the MacMahon master theorem for the
//! symmetric group.

use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::ctype::CoxeterType;
use crate::error::{CoxeterError, Result};
use crate::group::Group;
use crate::poly::{is_partial_permutation, permutation_monomial, SparsePolynomial, SymbolicMinors};
use crate::signed::{self, SignedPermutation};
use crate::store::ElemId;
use crate::subset::SubsetJ;
use crate::{BigRational, DEFAULT_BUDGET};

/// Values of `π_J` for every `J ⊆ S` (columns in binary order of the
/// bitmask) and of `ε`, one row per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterValueTable {
    pub ctype: CoxeterType,
    pub subsets: Vec<SubsetJ>,
    pub rows: Vec<CharacterRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterRow {
    pub class: usize,
    pub rep: Vec<usize>,
    pub values: Vec<u64>,
    pub epsilon: i8,
}

impl CharacterValueTable {
    pub fn value(&self, class: usize, j: SubsetJ) -> u64 {
        self.rows[class].values[j.bits() as usize]
    }

    /// CSV with one row per class: class index, representative word, `π_J`
    /// for each `J` in binary order, then `ε`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,rep");
        for j in &self.subsets {
            let labels: Vec<String> = j.labels().iter().map(ToString::to_string).collect();
            out.push_str(&format!(",J{{{}}}", labels.join(" ")));
        }
        out.push_str(",eps\n");
        for r in &self.rows {
            let rep: Vec<String> = r.rep.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{},{}", r.class, rep.join(" ")));
            for v in &r.values {
                out.push_str(&format!(",{v}"));
            }
            out.push_str(&format!(",{}\n", r.epsilon));
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolomonReport {
    pub classes_checked: usize,
    pub random_checked: usize,
    /// Elements (as reduced words) where the alternating sum differs from `ε`
    /// or the values differ from those of the class representative.
    pub violations: Vec<Vec<usize>>,
}

impl SolomonReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub n: usize,
    pub permutations_checked: usize,
    /// Permutations where the signed sum of Merris–Watkins coefficients, or
    /// the master-theorem coefficient, is not 1.
    pub failures: Vec<Vec<usize>>,
}

impl BridgeReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Group {
    /// `ε(w) = (-1)^ℓ(w)`.
    pub fn epsilon(&self, w: ElemId) -> i8 {
        if self.store().length(w).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `π_J(w) = #{x ∈ X_J : x w x^-1 ∈ W_J}`.
    pub fn pi_j(&self, w: ElemId, j: SubsetJ) -> u64 {
        let st = self.store();
        st.ids()
            .filter(|&x| j.is_subset(st.ascents(x)) && st.support(st.conj(w, st.inverse(x))).is_subset(j))
            .count() as u64
    }

    /// `π_J(w)` as the number of cosets `W_J x` fixed by right multiplication.
    pub fn pi_j_by_cosets(&self, w: ElemId, j: SubsetJ) -> u64 {
        let st = self.store();
        self.min_coset_reps(j).into_iter().filter(|&x| self.decompose(st.mul(x, w), j).x == x).count() as u64
    }

    /// `π_J(w)` for all `J`, indexed by the bitmask of `J`. Uses one pass
    /// over `W`: `x` counts for `J` iff `J(x w x^-1) ⊆ J ⊆ 𝒜(x)`.
    pub fn pi_all(&self, w: ElemId) -> Vec<u64> {
        let st = self.store();
        let mut hist: FxHashMap<(u32, u32), u64> = FxHashMap::default();
        for x in st.ids() {
            let key = (st.support(st.conj(w, st.inverse(x))).bits(), st.ascents(x).bits());
            *hist.entry(key).or_default() += 1;
        }
        let hist: Vec<((u32, u32), u64)> = hist.into_iter().collect();
        (0u32..1 << self.rank())
            .map(|j| hist.iter().filter(|((lo, hi), _)| lo & !j == 0 && j & !hi == 0).map(|(_, c)| c).sum())
            .collect()
    }

    pub fn character_table(&self) -> CharacterValueTable {
        let records = &self.classes().records;
        let rows = records
            .par_iter()
            .map(|r| CharacterRow {
                class: r.index,
                rep: r.rep_min.clone(),
                values: self.pi_all(r.rep_id),
                epsilon: self.epsilon(r.rep_id),
            })
            .collect();
        CharacterValueTable {
            ctype: self.ctype(),
            subsets: (0u32..1 << self.rank()).map(SubsetJ).collect(),
            rows,
        }
    }

    /// Checks `Σ_J (-1)^|J| π_J = ε` on every class representative and on
    /// `samples` random elements, whose values must also agree with those of
    /// their class representative.
    pub fn solomon_check(&self, samples: usize, seed: u64) -> SolomonReport {
        let table = self.character_table();
        let alternating = |values: &[u64]| -> i64 {
            values
                .iter()
                .enumerate()
                .map(|(j, &v)| if (j as u32).count_ones().is_multiple_of(2) { v as i64 } else { -(v as i64) })
                .sum()
        };
        let mut report = SolomonReport::default();
        for r in &table.rows {
            report.classes_checked += 1;
            if alternating(&r.values) != r.epsilon as i64 {
                report.violations.push(r.rep.clone());
            }
        }
        let mut rng = StdRng::seed_from_u64(seed);
        let classes = self.classes();
        for _ in 0..samples {
            let x: ElemId = rng.gen_range(0..self.order()) as ElemId;
            report.random_checked += 1;
            let values = self.pi_all(x);
            let row = &table.rows[classes.class_index_of(x)];
            if values != row.values || alternating(&values) != self.epsilon(x) as i64 {
                report.violations.push(self.word(x));
            }
        }
        report
    }

    /// For `w` of minimal length in its class, scans `W` for the solutions
    /// of `J(w^v) = 𝒟(v^-1)` and `J(w^v) = 𝒜(v^-1)`; each must be unique,
    /// equal to `w_{J(w)}` and `w_{J(w)} w_0` respectively.
    pub fn longest_parabolic_witnesses(&self, w: ElemId) -> Result<(ElemId, ElemId)> {
        let st = self.store();
        if !self.is_min_length_in_class(w) {
            return Err(CoxeterError::Invariant(format!("{:?} is not of minimal length", self.word(w))));
        }
        let mut by_descent = Vec::new();
        let mut by_ascent = Vec::new();
        for v in st.ids() {
            let jv = st.support(st.conj(w, v));
            let vi = st.inverse(v);
            if jv == st.descents(vi) {
                by_descent.push(v);
            }
            if jv == st.ascents(vi) {
                by_ascent.push(v);
            }
        }
        let wj = self.longest_element(self.j_of(w));
        let expected = (wj, st.mul(wj, self.longest()));
        match (by_descent.as_slice(), by_ascent.as_slice()) {
            (&[d], &[a]) if (d, a) == expected => Ok((d, a)),
            _ => Err(CoxeterError::Invariant(format!(
                "solutions for {:?}: descent {:?}, ascent {:?}",
                self.word(w),
                by_descent.iter().map(|&v| self.word(v)).collect::<Vec<_>>(),
                by_ascent.iter().map(|&v| self.word(v)).collect::<Vec<_>>()
            ))),
        }
    }
}

/// `Σ_{A ⊆ J ⊆ B} (-1)^|J|`, which is `(-1)^|A|` if `A = B` and 0 otherwise.
pub fn binomial_collapse(a: SubsetJ, b: SubsetJ) -> i64 {
    if !a.is_subset(b) {
        return 0;
    }
    let free: Vec<usize> = b.difference(a).iter().collect();
    (0u32..1 << free.len())
        .map(|m| {
            let size = a.len() + m.count_ones() as usize;
            if size.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum()
}

fn check_permutation(n: usize, w: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if w.len() != n || w.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return Err(CoxeterError::Parse(format!("{w:?} is not a permutation of 0..{n}")));
    }
    Ok(())
}

fn check_composition(n: usize, lambda: &[usize]) -> Result<()> {
    if lambda.contains(&0) || lambda.iter().sum::<usize>() != n {
        return Err(CoxeterError::MalformedPartition(format!("{lambda:?} is not a composition of {n}")));
    }
    Ok(())
}

/// Number of inversions of a 0-based one-line permutation.
pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&k| w[i] > w[k]).count()).sum()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `J = S ∖ {s_{λ1}, s_{λ1+λ2}, …}` in `A_{n-1}` for a composition `λ` of `n`.
pub fn composition_subset(lambda: &[usize]) -> Result<SubsetJ> {
    let n = lambda.iter().sum();
    check_composition(n, lambda)?;
    let mut j = SubsetJ::full(n.saturating_sub(1));
    let mut cut = 0;
    for &p in &lambda[..lambda.len() - 1] {
        cut += p;
        j = j.without(cut - 1);
    }
    Ok(j)
}

/// Inverse of [`composition_subset`] for `J ⊆ S` of `A_{n-1}`.
pub fn subset_composition(n: usize, j: SubsetJ) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut last = 0;
    for c in (1..n).filter(|&c| !j.contains(c - 1)) {
        parts.push(c - last);
        last = c;
    }
    parts.push(n - last);
    parts
}

/// `1/det(Id - X) = Σ_k P^k` with `P = Σ_{∅≠I} (-1)^{|I|-1} det X_I`,
/// truncated at `P^order`. Only monomials dividing some permutation monomial
/// are kept, so the result is exact on permutation monomials.
pub fn macmahon_series(n: usize, order: usize) -> Result<SparsePolynomial<BigRational>> {
    if order < n {
        return Err(CoxeterError::TruncationTooLow { order, n });
    }
    let mut minors = SymbolicMinors::<BigRational>::new(n);
    let mut p = SparsePolynomial::zero();
    for set in 1u32..1 << n {
        let sign = if set.count_ones() % 2 == 1 { BigRational::one() } else { -BigRational::one() };
        p = p.add(&minors.principal(set).scale(&sign));
    }
    let keep = |m: &crate::poly::Monomial| is_partial_permutation(n, m);
    let mut power = SparsePolynomial::one();
    let mut sum = SparsePolynomial::one();
    for _ in 0..order {
        power = power.mul_filtered(&p, keep);
        if power.is_zero() {
            break;
        }
        sum = sum.add(&power);
    }
    Ok(sum)
}

/// Coefficient of `x_{1w(1)} ⋯ x_{nw(n)}` in `1/det(Id - X)`.
pub fn macmahon_series_coefficient(n: usize, w: &[usize], order: usize) -> Result<BigRational> {
    check_permutation(n, w)?;
    Ok(macmahon_series(n, order)?.coefficient(&permutation_monomial(w)))
}

/// `Σ det X_{I_1} ⋯ det X_{I_k}` over ordered set partitions of `{1..n}` with
/// `|I_j| = λ_j`.
pub fn merris_watkins_polynomial(n: usize, lambda: &[usize]) -> Result<SparsePolynomial<BigRational>> {
    check_composition(n, lambda)?;
    let mut minors = SymbolicMinors::<BigRational>::new(n);
    let keep = |m: &crate::poly::Monomial| is_partial_permutation(n, m);
    fn rec(
        rest: u32,
        parts: &[usize],
        minors: &mut SymbolicMinors<BigRational>,
        keep: &dyn Fn(&crate::poly::Monomial) -> bool,
    ) -> SparsePolynomial<BigRational> {
        let Some((&k, tail)) = parts.split_first() else {
            return SparsePolynomial::one();
        };
        let mut out = SparsePolynomial::zero();
        for set in subsets_of_size(rest, k) {
            let head = minors.principal(set);
            out = out.add(&head.mul_filtered(&rec(rest & !set, tail, minors, keep), keep));
        }
        out
    }
    Ok(rec((1u32 << n) - 1, lambda, &mut minors, &keep))
}

fn subsets_of_size(of: u32, k: usize) -> Vec<u32> {
    let bits: Vec<u32> = (0..32).filter(|&b| of & (1 << b) != 0).collect();
    (0u32..1 << bits.len())
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| bits.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).fold(0, |acc, (_, &b)| acc | 1 << b))
        .collect()
}

/// Coefficient of `x_{1w(1)} ⋯ x_{nw(n)}` in the `λ`-restricted sum of
/// products of principal minors.
pub fn merris_watkins_coefficient(n: usize, lambda: &[usize], w: &[usize]) -> Result<i64> {
    check_permutation(n, w)?;
    let c = merris_watkins_polynomial(n, lambda)?.coefficient(&permutation_monomial(w));
    rational_to_i64(&c)
}

fn rational_to_i64(c: &BigRational) -> Result<i64> {
    if !c.is_integer() {
        return Err(CoxeterError::Invariant(format!("coefficient {c} is not an integer")));
    }
    c.to_integer().to_i64().ok_or_else(|| CoxeterError::Invariant(format!("coefficient {c} overflows")))
}

/// The element of `W(A_{n-1})` acting as the 0-based permutation `w`.
pub fn permutation_element(g: &Group, w: &[usize]) -> Result<ElemId> {
    let images = w.iter().map(|&i| i as i32 + 1).collect();
    g.id_of(&signed::to_element(&SignedPermutation::from_images(images)?, g.sys())?)
}

/// `(-1)^ℓ(w) π_J(w)` in `W(A_{n-1})` with `J` the subset for `λ`; for
/// `n = 1` the trivial group gives 1.
pub fn signed_pi_for_composition(g: Option<&Group>, lambda: &[usize], w: &[usize]) -> Result<i64> {
    let Some(g) = g else { return Ok(1) };
    let j = composition_subset(lambda)?;
    let x = permutation_element(g, w)?;
    Ok(g.epsilon(x) as i64 * g.pi_j(x, j) as i64)
}

/// The symmetric group `W(A_{n-1})` for `n ≥ 2`.
pub fn symmetric_group(n: usize) -> Result<Option<Group>> {
    if n < 2 {
        return Ok(None);
    }
    Ok(Some(Group::new(CoxeterType::a(n - 1)?, DEFAULT_BUDGET)?))
}

/// For each permutation (all of `S_n` when `perms` is `None`), checks that
/// `Σ_λ (-1)^{n-k(λ)}` times the Merris–Watkins coefficient equals 1, and
/// that the master-theorem coefficient is 1.
pub fn macmahon_solomon_bridge(n: usize, perms: Option<&[Vec<usize>]>) -> Result<BridgeReport> {
    let all;
    let perms = match perms {
        Some(p) => p,
        None => {
            all = permutations(n);
            &all
        }
    };
    let series = macmahon_series(n, n)?;
    let compositions: Vec<(Vec<usize>, SparsePolynomial<BigRational>)> = (0u32..1 << n.saturating_sub(1))
        .map(|j| {
            let lambda = subset_composition(n, SubsetJ(j));
            merris_watkins_polynomial(n, &lambda).map(|p| (lambda, p))
        })
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    for w in perms {
        check_permutation(n, w)?;
        let mono = permutation_monomial(w);
        let mut sum = BigRational::zero();
        for (lambda, p) in &compositions {
            let c = p.coefficient(&mono);
            sum = if (n - lambda.len()).is_multiple_of(2) { sum + c } else { sum - c };
        }
        if !sum.is_one() || !series.coefficient(&mono).is_one() {
            failures.push(w.clone());
        }
    }
    Ok(BridgeReport { n, permutations_checked: perms.len(), failures })
}

/// Random permutations of `0..n` from a seeded generator.
pub fn sample_permutations(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    use rand::seq::SliceRandom;
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut w: Vec<usize> = (0..n).collect();
            w.shuffle(&mut rng);
            w
        })
        .collect()
}
