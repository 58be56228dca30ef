//! Standard parabolic subgroups and their distinguished coset representatives.
//!
//! Cosets are right cosets `W_J x`; `X_J = {x : J ⊆ A(x)}` is the set of
//! minimal-length representatives, where `A(x)` is the left ascent set.

use serde::{Deserialize, Serialize};

use crate::error::{CoxeterError, Result};
use crate::group::Group;
use crate::store::ElemId;
use crate::subset::SubsetJ;
use crate::system::ReductionOrder;

/// `w = u · x` with `u ∈ W_J`, `x ∈ X_J` and `ℓ(w) = ℓ(u) + ℓ(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetDecomposition {
    pub u: ElemId,
    pub x: ElemId,
}

impl Group {
    /// `W_J`, sorted by id.
    pub fn parabolic_elements(&self, j: SubsetJ) -> Vec<ElemId> {
        let st = self.store();
        st.ids().filter(|&x| st.in_parabolic(x, j)).collect()
    }

    pub fn is_min_coset_rep(&self, x: ElemId, j: SubsetJ) -> bool {
        j.is_subset(self.store().ascents(x))
    }

    /// `X_J`, sorted by id.
    pub fn min_coset_reps(&self, j: SubsetJ) -> Vec<ElemId> {
        self.store().ids().filter(|&x| self.is_min_coset_rep(x, j)).collect()
    }

    /// Strips left descents lying in `J`, smallest index first.
    pub fn decompose(&self, w: ElemId, j: SubsetJ) -> CosetDecomposition {
        let st = self.store();
        let mut x = w;
        let mut word = Vec::new();
        while let Some(s) = st.descents(x).intersection(j).iter().next() {
            word.push(s);
            x = st.left_gen(s, x);
        }
        CosetDecomposition { u: st.from_word(&word), x }
    }

    pub fn is_double_coset_rep(&self, x: ElemId, j: SubsetJ, k: SubsetJ) -> bool {
        self.is_min_coset_rep(x, j) && self.is_min_coset_rep(self.store().inverse(x), k)
    }

    /// `X_JK = X_J ∩ X_K^{-1}`, sorted by id.
    pub fn double_coset_reps(&self, j: SubsetJ, k: SubsetJ) -> Vec<ElemId> {
        self.store().ids().filter(|&x| self.is_double_coset_rep(x, j, k)).collect()
    }

    /// `J^x = {x^-1 s x : s ∈ J}` when it consists of simple reflections.
    pub fn conjugate_subset(&self, j: SubsetJ, x: ElemId) -> Option<SubsetJ> {
        let st = self.store();
        let mut out = SubsetJ::EMPTY;
        for s in j.iter() {
            let c = st.conj(st.generator(s), x);
            if st.length(c) != 1 {
                return None;
            }
            out = out.with(st.descents(c).iter().next()?);
        }
        Some(out)
    }

    /// `L = J^x ∩ K` for `x ∈ X_JK`, so that `W_J^x ∩ W_K = W_L`.
    pub fn parabolic_intersection(&self, j: SubsetJ, x: ElemId, k: SubsetJ) -> Result<SubsetJ> {
        if !self.is_double_coset_rep(x, j, k) {
            return Err(CoxeterError::NotDoubleCosetRep(format!("{:?}", self.word(x))));
        }
        let st = self.store();
        let xi = st.inverse(x);
        // t ∈ K lies in J^x iff x t x^-1 ∈ J
        Ok(SubsetJ::from_indices(k.iter().filter(|&t| {
            let c = st.conj(st.generator(t), xi);
            st.length(c) == 1 && j.is_superset_of_single(st.descents(c))
        })))
    }

    /// `J(w)`, the set of generators in any reduced word of `w`.
    pub fn j_of(&self, w: ElemId) -> SubsetJ {
        self.store().support(w)
    }

    /// `J(w)` read off a reduced word produced with the given strategy.
    pub fn j_of_by_word(&self, w: ElemId, order: ReductionOrder) -> SubsetJ {
        let word = match order {
            ReductionOrder::SmallestDescent => self.store().reduce_word(w),
            ReductionOrder::LargestDescent => self.sys().reduce_word_with(&self.element(w), order),
        };
        SubsetJ::from_indices(word)
    }

    pub fn longest_element(&self, j: SubsetJ) -> ElemId {
        self.store().longest_element(j)
    }

    pub fn longest(&self) -> ElemId {
        self.longest_element(SubsetJ::full(self.rank()))
    }

    /// `(w_J, x)` with `J = D(w)` and `w = w_J · x`.
    pub fn descent_decompose(&self, w: ElemId) -> (ElemId, ElemId) {
        let st = self.store();
        let wj = self.longest_element(st.descents(w));
        (wj, st.mul(wj, w))
    }

    /// Conjugacy class of `w` under `W_J`, sorted by id.
    pub fn parabolic_class(&self, w: ElemId, j: SubsetJ) -> Vec<ElemId> {
        let st = self.store();
        let mut seen = rustc_hash::FxHashSet::default();
        seen.insert(w);
        let mut out = vec![w];
        let mut head = 0;
        while head < out.len() {
            let y = out[head];
            head += 1;
            for s in j.iter() {
                let z = st.left_gen(s, st.right_gen(y, s));
                if seen.insert(z) {
                    out.push(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `ℓ(w^x) ≥ ℓ(w)` for all `J`, `w ∈ W_J`, `x ∈ X_J`.
    pub fn check_coset_rep_conjugation_length(&self) -> bool {
        let st = self.store();
        SubsetJ::full(self.rank()).subsets_by_size().into_iter().all(|j| {
            let wj = self.parabolic_elements(j);
            self.min_coset_reps(j).iter().all(|&x| wj.iter().all(|&w| st.length(st.conj(w, x)) >= st.length(w)))
        })
    }

    /// Every `w` factors as `w_J · x` with `J = D(w)` and `x ∈ X_J`.
    pub fn check_descent_factorization(&self) -> bool {
        let st = self.store();
        st.ids().all(|w| {
            let (wj, x) = self.descent_decompose(w);
            let j = st.descents(w);
            st.mul(wj, x) == w && st.length(wj) + st.length(x) == st.length(w) && self.is_min_coset_rep(x, j)
        })
    }

    /// `W_J^x ∩ W_K = W_{J^x ∩ K}` for all `J, K` and `x ∈ X_JK`, by comparing
    /// element sets.
    pub fn check_parabolic_intersections(&self) -> bool {
        let st = self.store();
        let subsets = SubsetJ::full(self.rank()).subsets_by_size();
        for &j in &subsets {
            let wj = self.parabolic_elements(j);
            for &k in &subsets {
                for x in self.double_coset_reps(j, k) {
                    let l = self.parabolic_intersection(j, x, k).expect("x is a double coset rep");
                    let mut lhs: Vec<ElemId> =
                        wj.iter().map(|&w| st.conj(w, x)).filter(|&y| st.in_parabolic(y, k)).collect();
                    lhs.sort_unstable();
                    if lhs != self.parabolic_elements(l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For `x ∈ X_J` with `J^x = K` and `s ∈ D(x)`: `x = d · y` with
    /// `d = w_J w_L`, `L = J ∪ {s}` and `y ∈ X_L`.
    pub fn check_conjugating_factorization(&self) -> bool {
        let st = self.store();
        for j in SubsetJ::full(self.rank()).subsets_by_size() {
            let wj = self.longest_element(j);
            for x in self.min_coset_reps(j) {
                if self.conjugate_subset(j, x).is_none() {
                    continue;
                }
                for s in st.descents(x).iter() {
                    let l = j.with(s);
                    let d = st.mul(wj, self.longest_element(l));
                    let y = st.mul(st.inverse(d), x);
                    if st.length(d) + st.length(y) != st.length(x) || !self.is_min_coset_rep(y, l) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl SubsetJ {
    fn is_superset_of_single(self, single: SubsetJ) -> bool {
        single.len() == 1 && single.is_subset(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn group(s: &str) -> Group {
        Group::new(s.parse().unwrap(), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn parabolic_orders() {
        let g = group("A3");
        assert_eq!(g.parabolic_elements(SubsetJ::EMPTY), vec![0]);
        assert_eq!(g.parabolic_elements(SubsetJ::full(3)).len(), 24);
        let j = SubsetJ::from_labels([1, 2]);
        assert_eq!(g.parabolic_elements(j).len(), 6);
        let gens: Vec<ElemId> = j.iter().map(|s| g.store().generator(s)).collect();
        assert_eq!(g.store().closure(&gens), g.parabolic_elements(j));
    }

    #[test]
    fn coset_representatives() {
        let g = group("A3");
        assert_eq!(g.min_coset_reps(SubsetJ::full(3)), vec![0]);
        assert_eq!(g.min_coset_reps(SubsetJ::EMPTY).len(), 24);
        let j = SubsetJ::from_labels([1, 2]);
        let reps = g.min_coset_reps(j);
        let lens: Vec<usize> = reps.iter().map(|&x| g.store().length(x)).collect();
        assert_eq!(lens, vec![0, 1, 2, 3]);
        // the cosets W_J x partition W
        let wj = g.parabolic_elements(j);
        let mut all: Vec<ElemId> = reps.iter().flat_map(|&x| wj.iter().map(move |&u| (u, x))).map(|(u, x)| g.store().mul(u, x)).collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn decompositions() {
        let g = group("A3");
        let st = g.store();
        let j = SubsetJ::from_labels([1, 2]);
        let w0 = g.longest();
        let d = g.decompose(w0, j);
        assert_eq!(d.u, g.longest_element(j));
        assert_eq!(st.length(d.x), 3);
        for w in g.parabolic_elements(j) {
            assert_eq!(g.decompose(w, j), CosetDecomposition { u: w, x: 0 });
        }
        for x in g.min_coset_reps(j) {
            assert_eq!(g.decompose(x, j), CosetDecomposition { u: 0, x });
        }
    }

    #[test]
    fn decomposition_is_a_length_additive_bijection() {
        let g = group("B3");
        let st = g.store();
        for j in SubsetJ::full(3).subsets_by_size() {
            let mut seen = std::collections::HashSet::new();
            for w in st.ids() {
                let d = g.decompose(w, j);
                assert!(st.in_parabolic(d.u, j) && g.is_min_coset_rep(d.x, j));
                assert_eq!(st.mul(d.u, d.x), w);
                assert_eq!(st.length(d.u) + st.length(d.x), st.length(w));
                assert!(seen.insert((d.u, d.x)));
            }
        }
    }

    #[test]
    fn double_cosets() {
        let g = group("A3");
        let full = SubsetJ::full(3);
        assert_eq!(g.double_coset_reps(full, full), vec![0]);
        assert_eq!(g.double_coset_reps(SubsetJ::EMPTY, SubsetJ::EMPTY).len(), 24);
        let j = SubsetJ::from_labels([1, 3]);
        let reps = g.double_coset_reps(j, j);
        assert_eq!(reps.len(), 3);
        // each element lies in exactly one double coset
        let st = g.store();
        let wj = g.parabolic_elements(j);
        let mut owner = [None; 24];
        for &x in &reps {
            for &a in &wj {
                for &b in &wj {
                    let y = st.mul(st.mul(a, x), b) as usize;
                    assert!(owner[y].is_none() || owner[y] == Some(x));
                    owner[y] = Some(x);
                }
            }
        }
        assert!(owner.iter().all(Option::is_some));
    }

    #[test]
    fn intersections() {
        let g = group("A3");
        let j = SubsetJ::from_labels([1, 2]);
        let k = SubsetJ::from_labels([2, 3]);
        assert_eq!(g.parabolic_intersection(j, 0, k).unwrap(), SubsetJ::from_labels([2]));
        let full = SubsetJ::full(3);
        assert_eq!(g.parabolic_intersection(full, 0, full).unwrap(), full);
        let reps = g.double_coset_reps(j, k);
        let x = *reps.iter().find(|&&x| x != 0).unwrap();
        let l = g.parabolic_intersection(j, x, k).unwrap();
        let st = g.store();
        let lhs: Vec<ElemId> = {
            let mut v: Vec<_> = g.parabolic_elements(j).iter().map(|&w| st.conj(w, x)).filter(|&y| st.in_parabolic(y, k)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(lhs, g.parabolic_elements(l));
        let s1 = st.generator(0);
        assert!(matches!(g.parabolic_intersection(j, s1, k), Err(CoxeterError::NotDoubleCosetRep(_))));
    }

    #[test]
    fn supports() {
        let g = group("A7");
        assert_eq!(g.j_of(0), SubsetJ::EMPTY);
        assert_eq!(g.j_of(g.store().generator(1)), SubsetJ::from_labels([2]));
        let w = g.from_labels(&[7, 6, 5, 3]).unwrap();
        assert_eq!(g.j_of(w), SubsetJ::from_labels([3, 5, 6, 7]));
    }

    #[test]
    fn supports_agree_with_both_reduction_strategies() {
        for s in ["B4", "H3", "D4"] {
            let g = group(s);
            for w in g.store().ids() {
                let j = g.j_of(w);
                assert_eq!(j, g.j_of_by_word(w, ReductionOrder::SmallestDescent));
                assert_eq!(j, g.j_of_by_word(w, ReductionOrder::LargestDescent));
            }
        }
    }

    #[test]
    fn descent_decomposition_examples() {
        let g = group("B3");
        assert_eq!(g.descent_decompose(0), (0, 0));
        for j in SubsetJ::full(3).subsets_by_size() {
            let wj = g.longest_element(j);
            assert_eq!(g.descent_decompose(wj), (wj, 0));
        }
        assert!(g.check_descent_factorization());
    }

    #[test]
    fn toolkit_on_small_groups() {
        for s in ["A3", "B3", "I2:5"] {
            let g = group(s);
            assert!(g.check_coset_rep_conjugation_length(), "{s}");
            assert!(g.check_parabolic_intersections(), "{s}");
            assert!(g.check_conjugating_factorization(), "{s}");
        }
    }
}
