//! Centralizer complements.
//!
//! For `w` of minimal length in its class and `J = J(w)`, a complement of
//! `C_{W_J}(w)` in `C_W(w)` is searched for by the `CentralizerComplement`
//! procedure: replace involution generators `x_i` of `N_J` by products
//! `w_L x_i` that centralize a `W_J`-conjugate of `w`. Failures are backed by
//! independent non-existence certificates. For the classical types explicit
//! complements are built from block generators.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::ctype::{CoxeterType, Family};
use crate::error::{CoxeterError, Result};
use crate::group::Group;
use crate::signed::{self, block_negate, block_swap, DoublePartition, SignedPermutation};
use crate::store::ElemId;
use crate::subset::SubsetJ;

/// Default number of subgroups visited by [`Group::exhaustive_complement_search`].
pub const DEFAULT_SEARCH_BUDGET: usize = 100_000;
/// Maximal number of candidate tuples tried by the complement algorithm.
const TUPLE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementStatus {
    /// A complement was found and certified.
    Found,
    /// The algorithm failed and non-existence is proven.
    NoComplement,
    /// The algorithm failed without a proof of non-existence.
    AlgorithmFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `M ⊆ C_W(w)`, `M ∩ W_J = 1` and `|C_{W_J}(w)| |M| = |C_W(w)|`.
    Complement { order: u64 },
    /// Index 2 and the nontrivial coset holds no involution.
    NoInvolutionInCoset { coset_size: u64 },
    /// Exhaustive search over subgroups meeting `C_{W_J}(w)` trivially.
    SubgroupSearch { subgroups_visited: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Minimal-length `W_J`-conjugates of `w` examined.
    pub conjugates_tried: usize,
    /// Candidate generating tuples (including partial ones) closed.
    pub tuples_tried: u64,
    /// Whether `N_J` was generated by involutions.
    pub involution_generators: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementResult {
    pub status: ComplementStatus,
    /// Minimal-length representative the result refers to, as a reduced word.
    pub rep: Vec<usize>,
    #[serde(skip)]
    pub rep_id: ElemId,
    #[serde(rename = "J")]
    pub j: SubsetJ,
    pub centralizer_order: u64,
    pub parabolic_centralizer_order: u64,
    /// Reduced words of generators of the complement.
    pub generators: Vec<Vec<usize>>,
    #[serde(skip)]
    pub generator_ids: Vec<ElemId>,
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
}

impl ComplementResult {
    pub fn quotient_order(&self) -> u64 {
        self.centralizer_order / self.parabolic_centralizer_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Exists { generators: Vec<ElemId> },
    NotExists { subgroups_visited: usize },
    Unknown { subgroups_visited: usize },
}

/// Outcome of certifying an explicit complement of `C_{W_J}(w_λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructiveCheck {
    pub label: DoublePartition,
    pub order: u64,
    /// `|N_W(W_J)| / |W_J|`.
    pub expected_order: u64,
    pub centralizes: bool,
    pub trivial_intersection: bool,
}

impl ConstructiveCheck {
    pub fn holds(&self) -> bool {
        self.centralizes && self.trivial_intersection && self.order == self.expected_order
    }
}

struct Context {
    w: ElemId,
    j: SubsetJ,
    centralizer: Vec<ElemId>,
    parabolic_centralizer: Vec<ElemId>,
}

impl Group {
    fn complement_context(&self, w: ElemId, j: SubsetJ, within: SubsetJ) -> Context {
        let st = self.store();
        let centralizer: Vec<ElemId> = self.centralizer(w).into_iter().filter(|&x| st.in_parabolic(x, within)).collect();
        let parabolic_centralizer = centralizer.iter().copied().filter(|&x| st.in_parabolic(x, j)).collect();
        Context { w, j, centralizer, parabolic_centralizer }
    }

    /// Involutions generating `N_J`: all involutions of `N_J` in id order,
    /// greedily kept when they enlarge the generated group, then pruned to a
    /// minimal generating set. If the involutions do not generate `N_J`,
    /// further elements are added and the flag is `false`.
    pub fn involution_generators_of_nj(&self, j: SubsetJ) -> (Vec<ElemId>, bool) {
        let st = self.store();
        let nj = self.normalizer_complement(j);
        let mut gens = Vec::new();
        let mut generated: FxHashSet<ElemId> = [0].into_iter().collect();
        let add = |x: ElemId, gens: &mut Vec<ElemId>, generated: &mut FxHashSet<ElemId>| {
            if !generated.contains(&x) {
                gens.push(x);
                *generated = st.closure(gens).into_iter().collect();
            }
        };
        for &x in nj.iter().filter(|&&x| st.is_involution(x)) {
            add(x, &mut gens, &mut generated);
        }
        let involutions_suffice = generated.len() == nj.len();
        for &x in &nj {
            add(x, &mut gens, &mut generated);
        }
        let mut k = 0;
        while k < gens.len() {
            let mut rest = gens.clone();
            rest.remove(k);
            if st.closure(&rest).len() == nj.len() {
                gens = rest;
            } else {
                k += 1;
            }
        }
        (gens, involutions_suffice)
    }

    /// Checks that `⟨gens⟩` is a complement of `C_{W_J}(w)` in `C_W(w)`.
    pub fn certify_complement(&self, w: ElemId, j: SubsetJ, gens: &[ElemId]) -> Option<u64> {
        let st = self.store();
        let m = st.closure(gens);
        let centralizes = gens.iter().all(|&g| st.commute(g, w));
        let trivial = m.iter().all(|&x| x == 0 || !st.in_parabolic(x, j));
        let c = self.centralizer(w).len();
        let cj = self.centralizer_in_parabolic(w, j).len();
        (centralizes && trivial && cj * m.len() == c).then_some(m.len() as u64)
    }

    /// Runs the complement algorithm on the minimal representative of the
    /// class of `w`, falling back to non-existence certificates on failure.
    pub fn centralizer_complement(&self, w: ElemId) -> ComplementResult {
        let w = if self.is_min_length_in_class(w) { w } else { self.min_length_class_element(w).0 };
        let j = self.j_of(w);
        let ctx = self.complement_context(w, j, SubsetJ::full(self.rank()));
        let (xs, involution_generators) = self.involution_generators_of_nj(j);
        let mut stats = SearchStats { involution_generators, ..Default::default() };
        let found = self.complement_algorithm(&ctx, &xs, &mut stats);
        let mut result = ComplementResult {
            status: ComplementStatus::AlgorithmFailed,
            rep: self.word(w),
            rep_id: w,
            j,
            centralizer_order: ctx.centralizer.len() as u64,
            parabolic_centralizer_order: ctx.parabolic_centralizer.len() as u64,
            generators: Vec::new(),
            generator_ids: Vec::new(),
            certificate: None,
            stats,
        };
        if let Some(gens) = found {
            if let Some(order) = self.certify_complement(w, j, &gens) {
                result.status = ComplementStatus::Found;
                result.generators = gens.iter().map(|&g| self.word(g)).collect();
                result.generator_ids = gens;
                result.certificate = Some(Certificate::Complement { order });
            }
            return result;
        }
        if result.quotient_order() == 2 {
            if self.coset_has_no_involution(&ctx) {
                result.status = ComplementStatus::NoComplement;
                result.certificate = Some(Certificate::NoInvolutionInCoset { coset_size: result.parabolic_centralizer_order });
            }
            return result;
        }
        match self.subgroup_search(&ctx, DEFAULT_SEARCH_BUDGET) {
            SearchOutcome::NotExists { subgroups_visited } => {
                result.status = ComplementStatus::NoComplement;
                result.certificate = Some(Certificate::SubgroupSearch { subgroups_visited });
            }
            SearchOutcome::Exists { .. } | SearchOutcome::Unknown { .. } => {}
        }
        result
    }

    fn complement_algorithm(&self, ctx: &Context, xs: &[ElemId], stats: &mut SearchStats) -> Option<Vec<ElemId>> {
        let st = self.store();
        let j = ctx.j;
        let target = ctx.centralizer.len() / ctx.parabolic_centralizer.len();
        let len = st.length(ctx.w);
        let longest: Vec<ElemId> = j.subsets_by_size().into_iter().map(|l| self.longest_element(l)).collect();
        for (v, conj) in self.parabolic_class_with_conjugators(ctx.w, j) {
            if st.length(v) != len {
                continue;
            }
            stats.conjugates_tried += 1;
            // v = conj^-1 w conj, so v^u = w for u = conj^-1
            let u = st.inverse(conj);
            let ys: Vec<Vec<ElemId>> = xs
                .iter()
                .map(|&x| {
                    let vx = st.conj(v, x);
                    if vx == v {
                        return vec![x];
                    }
                    let mut y: Vec<ElemId> = longest
                        .iter()
                        .filter(|&&wl| st.commute(wl, x) && st.conj(v, wl) == vx)
                        .map(|&wl| st.mul(wl, x))
                        .filter(|&y| st.commute(y, v))
                        .collect();
                    y.dedup();
                    y
                })
                .collect();
            if ys.iter().any(|y| y.is_empty()) {
                continue;
            }
            let mut chosen = Vec::with_capacity(xs.len());
            if let Some(gens) = self.search_tuples(&ys, &mut chosen, j, target, stats) {
                return Some(gens.into_iter().map(|y| st.conj(y, u)).collect());
            }
            if stats.tuples_tried > TUPLE_BUDGET {
                return None;
            }
        }
        None
    }

    fn search_tuples(
        &self,
        ys: &[Vec<ElemId>],
        chosen: &mut Vec<ElemId>,
        j: SubsetJ,
        target: usize,
        stats: &mut SearchStats,
    ) -> Option<Vec<ElemId>> {
        let st = self.store();
        stats.tuples_tried += 1;
        let closure = st.closure_bounded(chosen, target, |y| !st.in_parabolic(y, j))?;
        if chosen.len() == ys.len() {
            return (closure.len() == target).then(|| chosen.clone());
        }
        for &y in &ys[chosen.len()] {
            chosen.push(y);
            let found = self.search_tuples(ys, chosen, j, target, stats);
            chosen.pop();
            if found.is_some() {
                return found;
            }
            if stats.tuples_tried > TUPLE_BUDGET {
                return None;
            }
        }
        None
    }

    /// The `W_J`-class of `w` as pairs `(v, x)` with `v = x^-1 w x`, sorted by `v`.
    pub fn parabolic_class_with_conjugators(&self, w: ElemId, j: SubsetJ) -> Vec<(ElemId, ElemId)> {
        let st = self.store();
        let mut conj: FxHashMap<ElemId, ElemId> = FxHashMap::default();
        conj.insert(w, 0);
        let mut queue = vec![w];
        let mut head = 0;
        while head < queue.len() {
            let y = queue[head];
            head += 1;
            for s in j.iter() {
                let z = st.left_gen(s, st.right_gen(y, s));
                if !conj.contains_key(&z) {
                    conj.insert(z, st.right_gen(conj[&y], s));
                    queue.push(z);
                }
            }
        }
        let mut out: Vec<(ElemId, ElemId)> = conj.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn coset_has_no_involution(&self, ctx: &Context) -> bool {
        let st = self.store();
        let inner = self.mask(&ctx.parabolic_centralizer);
        !ctx.centralizer.iter().any(|&x| !inner[x as usize] && st.is_involution(x))
    }

    /// For `|C_W(w) : C_{W_J}(w)| = 2`: true iff the nontrivial coset holds no
    /// involution, which rules out a complement.
    pub fn certify_no_complement_order2(&self, w: ElemId, j: SubsetJ) -> Result<bool> {
        let ctx = self.complement_context(w, j, SubsetJ::full(self.rank()));
        let q = (ctx.centralizer.len() / ctx.parabolic_centralizer.len()) as u64;
        if q != 2 {
            return Err(CoxeterError::IndexNotTwo(q));
        }
        Ok(self.coset_has_no_involution(&ctx))
    }

    /// Searches the subgroups of `C_W(w)` meeting `C_{W_J}(w)` trivially for
    /// one of order `|C_W(w) : C_{W_J}(w)|`.
    pub fn exhaustive_complement_search(&self, w: ElemId, j: SubsetJ, budget: usize) -> SearchOutcome {
        self.exhaustive_complement_search_within(w, j, SubsetJ::full(self.rank()), budget)
    }

    /// As [`Group::exhaustive_complement_search`] with every centralizer
    /// replaced by its intersection with `W_within`.
    pub fn exhaustive_complement_search_within(
        &self,
        w: ElemId,
        j: SubsetJ,
        within: SubsetJ,
        budget: usize,
    ) -> SearchOutcome {
        self.subgroup_search(&self.complement_context(w, j, within), budget)
    }

    /// Depth-first search: at each step take the first coset of `K` in `C`
    /// not yet met and try each of its elements `g` whose first power inside
    /// `K` is trivial. Every complement containing the current subgroup
    /// contains one of them, so the search is complete.
    fn subgroup_search(&self, ctx: &Context, budget: usize) -> SearchOutcome {
        let st = self.store();
        let q = ctx.centralizer.len() / ctx.parabolic_centralizer.len();
        if q == 1 {
            return SearchOutcome::Exists { generators: Vec::new() };
        }
        let inner = self.mask(&ctx.parabolic_centralizer);
        let coset: FxHashMap<ElemId, ElemId> = ctx
            .centralizer
            .iter()
            .map(|&x| (x, ctx.parabolic_centralizer.iter().map(|&k| st.mul(k, x)).min().unwrap()))
            .collect();
        let mut labels: Vec<ElemId> = coset.values().copied().filter(|&c| c != 0).collect();
        labels.sort_unstable();
        labels.dedup();
        let mut candidates: FxHashMap<ElemId, Vec<ElemId>> = FxHashMap::default();
        for &g in &ctx.centralizer {
            if inner[g as usize] {
                continue;
            }
            let mut p = g;
            while !inner[p as usize] {
                p = st.mul(p, g);
            }
            if p == 0 {
                candidates.entry(coset[&g]).or_default().push(g);
            }
        }

        struct Search<'a> {
            g: &'a Group,
            inner: Vec<bool>,
            coset: FxHashMap<ElemId, ElemId>,
            labels: Vec<ElemId>,
            candidates: FxHashMap<ElemId, Vec<ElemId>>,
            q: usize,
            visited: FxHashSet<Vec<ElemId>>,
            budget: usize,
        }
        impl Search<'_> {
            fn run(&mut self, gens: &mut Vec<ElemId>, h: &[ElemId]) -> Option<Option<Vec<ElemId>>> {
                let met: FxHashSet<ElemId> = h.iter().map(|x| self.coset[x]).collect();
                let Some(&next) = self.labels.iter().find(|c| !met.contains(c)) else {
                    return Some(Some(gens.clone()));
                };
                let st = self.g.store();
                let options = self.candidates.get(&next).cloned().unwrap_or_default();
                for c in options {
                    gens.push(c);
                    let inner = &self.inner;
                    let sub = st.closure_bounded(gens, self.q, |y| !inner[y as usize]);
                    if let Some(sub) = sub {
                        if sub.len() == self.q {
                            return Some(Some(gens.clone()));
                        }
                        if self.visited.insert(sub.clone()) {
                            if self.visited.len() > self.budget {
                                return None;
                            }
                            match self.run(gens, &sub) {
                                Some(None) => {}
                                other => return other,
                            }
                        }
                    }
                    gens.pop();
                }
                Some(None)
            }
        }
        let mut search =
            Search { g: self, inner, coset, labels, candidates, q, visited: FxHashSet::default(), budget };
        match search.run(&mut Vec::new(), &[0]) {
            Some(Some(generators)) => SearchOutcome::Exists { generators },
            Some(None) => SearchOutcome::NotExists { subgroups_visited: search.visited.len() },
            None => SearchOutcome::Unknown { subgroups_visited: search.visited.len() },
        }
    }

    /// Whether the class with the given index is non-compliant.
    pub fn class_is_non_compliant(&self, class: usize) -> bool {
        self.classes().records[class].non_compliant
    }
}

/// Non-compliance flag per class. In type `D_n` the cycle type decides:
/// `λ⁺` not even and `λ⁻` nonempty and even. Otherwise standard parabolic
/// subgroups are scanned for a component of type `D_k` (`k > 4` odd) on which
/// an element of the class projects to a non-compliant double partition.
pub(crate) fn non_compliant_flags(g: &Group, members: &[Vec<ElemId>], class_of: &[u32]) -> Vec<bool> {
    if g.ctype().family() == Family::D {
        return members
            .iter()
            .map(|m| {
                let l = g.classical_label(m[0]).expect("type D labels");
                !l.plus_is_even() && !l.minus.is_empty() && l.minus_is_even()
            })
            .collect();
    }
    non_compliant_by_scan(g, members.len(), class_of)
}

/// Non-compliance by the parabolic-subgroup scan, for any type.
pub fn non_compliant_by_scan(g: &Group, class_count: usize, class_of: &[u32]) -> Vec<bool> {
    let st = g.store();
    let matrix = g.sys().coxeter_matrix();
    let rank = g.rank();
    let neighbours: Vec<SubsetJ> =
        (0..rank).map(|i| SubsetJ::from_indices((0..rank).filter(|&k| k != i && matrix[i][k] > 2))).collect();
    let components = d_type_subsets(matrix);
    let mut flags = vec![false; class_count];
    for x in st.ids() {
        let class = class_of[x as usize] as usize;
        if flags[class] {
            continue;
        }
        let j = st.support(x);
        for (k, map) in &components {
            if j.intersection(*k).is_empty() {
                continue;
            }
            // x lies in W_M with K a component of M iff no generator of x
            // outside K is adjacent to K
            if j.difference(*k).iter().any(|s| !neighbours[s].intersection(*k).is_empty()) {
                continue;
            }
            let d = CoxeterType::d(k.len()).expect("rank at least 5");
            let proj = st
                .reduce_word(x)
                .into_iter()
                .filter(|&s| k.contains(s))
                .try_fold(SignedPermutation::identity(k.len()), |acc, s| {
                    signed::generator(d, map[&s]).map(|g| acc.compose(&g))
                })
                .expect("valid D generators");
            if proj.cycle_type().is_non_compliant() {
                flags[class] = true;
                break;
            }
        }
    }
    flags
}

/// Connected subsets of the diagram of type `D_k`, `k > 4` odd, each with a
/// map from its generators to the `D_k` generator indices (`u = 0`, `s_i = i`).
fn d_type_subsets(matrix: &[Vec<u32>]) -> Vec<(SubsetJ, FxHashMap<usize, usize>)> {
    let rank = matrix.len();
    let mut out = Vec::new();
    for bits in 0u32..(1 << rank) {
        let k = SubsetJ(bits);
        if k.len() < 5 || k.len().is_multiple_of(2) {
            continue;
        }
        if let Some(map) = d_type_labelling(matrix, k) {
            out.push((k, map));
        }
    }
    out
}

fn d_type_labelling(matrix: &[Vec<u32>], k: SubsetJ) -> Option<FxHashMap<usize, usize>> {
    let nodes: Vec<usize> = k.iter().collect();
    let adj = |a: usize| nodes.iter().copied().filter(move |&b| b != a && matrix[a][b] > 2);
    let mut edges = 0;
    for &a in &nodes {
        for b in adj(a) {
            if matrix[a][b] != 3 {
                return None;
            }
            edges += 1;
        }
    }
    if edges / 2 != nodes.len() - 1 {
        return None;
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&a| adj(a).count() == 3).collect();
    if branch.len() != 1 || nodes.iter().any(|&a| adj(a).count() > 3) {
        return None;
    }
    let b = branch[0];
    // walk each arm away from the branch node
    let mut arms: Vec<Vec<usize>> = adj(b)
        .map(|start| {
            let mut arm = vec![start];
            let mut prev = b;
            let mut cur = start;
            while let Some(next) = adj(cur).find(|&n| n != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect();
    arms.sort_by_key(|a| (a.len(), a[0]));
    if arms[0].len() != 1 || arms[1].len() != 1 {
        return None;
    }
    // connectedness follows from the edge count and the arms covering all nodes
    if 1 + arms.iter().map(Vec::len).sum::<usize>() != nodes.len() {
        return None;
    }
    let mut map = FxHashMap::default();
    map.insert(arms[0][0], 0);
    map.insert(arms[1][0], 1);
    map.insert(b, 2);
    for (i, &a) in arms[2].iter().enumerate() {
        map.insert(a, 3 + i);
    }
    Some(map)
}

fn closure_signed(gens: &[SignedPermutation], n: usize) -> Vec<SignedPermutation> {
    let id = SignedPermutation::identity(n);
    let mut seen: FxHashSet<SignedPermutation> = [id.clone()].into_iter().collect();
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
    }
    out
}

/// Block-swap generators `s(o_m + k m, m)`, `k = 0..a_m-2`.
fn block_swaps(lambda: &DoublePartition, n: usize) -> Result<Vec<SignedPermutation>> {
    let offsets = lambda.block_offsets();
    let mut gens = Vec::new();
    for (m, a) in lambda.plus_multiplicities() {
        for k in 0..a.saturating_sub(1) {
            gens.push(block_swap(n, offsets[&m] + k * m, m)?);
        }
    }
    Ok(gens)
}

/// Generators of the complement `N_J` for `w_λ` in type `A_{n-1}`.
pub fn complement_type_a(lambda: &DoublePartition) -> Result<Vec<SignedPermutation>> {
    if !lambda.minus.is_empty() {
        return Err(CoxeterError::MalformedPartition(format!("{lambda} is not a plain partition")));
    }
    block_swaps(lambda, lambda.size())
}

/// Generators `t(o_m, m)`, `s(o_m + k m, m)` of `N_λ` in type `B_n`.
pub fn complement_type_b(lambda: &DoublePartition) -> Result<Vec<SignedPermutation>> {
    let n = lambda.size();
    let offsets = lambda.block_offsets();
    let mut gens = Vec::new();
    for (m, a) in lambda.plus_multiplicities() {
        gens.push(block_negate(n, offsets[&m], m)?);
        for k in 0..a - 1 {
            gens.push(block_swap(n, offsets[&m] + k * m, m)?);
        }
    }
    Ok(gens)
}

/// Generators of a complement for `w_λ` (or `w_λ'`) in type `D_n`:
/// `N_λ` when `λ⁺` is even, `N_λ ∩ W(D_n)` when `λ⁻ = ∅`, and the twisted
/// group `⟨t(0,k)^m t(o_m, m), s(o_m + i m, m)⟩` when `λ⁻` is not even, with
/// `k` the first odd partial sum of `λ⁻`. The remaining labels are
/// non-compliant and have no complement.
pub fn complement_type_d(lambda: &DoublePartition) -> Result<Vec<SignedPermutation>> {
    let n = lambda.size();
    let gens = if lambda.plus_is_even() {
        complement_type_b(lambda)?
    } else if lambda.minus.is_empty() {
        let all = closure_signed(&complement_type_b(lambda)?, n);
        let even: Vec<SignedPermutation> = all.into_iter().filter(SignedPermutation::is_even).collect();
        signed_generators(&even, n)
    } else if !lambda.minus_is_even() {
        let k = lambda
            .minus
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .find(|s| s % 2 == 1)
            .expect("an odd part gives an odd partial sum");
        let twist = block_negate(n, 0, k)?;
        let offsets = lambda.block_offsets();
        let mut gens = Vec::new();
        for (m, a) in lambda.plus_multiplicities() {
            let t = block_negate(n, offsets[&m], m)?;
            gens.push(if m % 2 == 1 { twist.compose(&t) } else { t });
            for i in 0..a - 1 {
                gens.push(block_swap(n, offsets[&m] + i * m, m)?);
            }
        }
        gens
    } else {
        return Err(CoxeterError::NonCompliant(lambda.to_string()));
    };
    if lambda.primed {
        // w_λ' = t w_λ t with t = t(0, 1)
        let t = block_negate(n, 0, 1)?;
        return Ok(gens.iter().map(|g| g.conjugate_by(&t)).collect());
    }
    Ok(gens)
}

/// Greedy generating set of a group given by its elements.
fn signed_generators(elements: &[SignedPermutation], n: usize) -> Vec<SignedPermutation> {
    let mut gens = Vec::new();
    let mut generated: FxHashSet<SignedPermutation> = [SignedPermutation::identity(n)].into_iter().collect();
    let mut sorted = elements.to_vec();
    sorted.sort();
    for x in sorted {
        if !generated.contains(&x) {
            gens.push(x);
            generated = closure_signed(&gens, n).into_iter().collect();
        }
    }
    gens
}

/// Explicit complement generators for `w_λ` in a classical type.
pub fn constructive_complement(ctype: CoxeterType, lambda: &DoublePartition) -> Result<Vec<SignedPermutation>> {
    lambda.validate_for(ctype)?;
    match ctype.family() {
        Family::A => complement_type_a(lambda),
        Family::B => complement_type_b(lambda),
        Family::D => complement_type_d(lambda),
        _ => Err(CoxeterError::Unsupported(format!("{ctype} is not classical"))),
    }
}

impl Group {
    /// Certifies the explicit complement for `w_λ`: it centralizes `w_λ`,
    /// meets `W_J` trivially and has order `|N_W(W_J)| / |W_J|`.
    pub fn certify_constructive_complement(&self, lambda: &DoublePartition) -> Result<ConstructiveCheck> {
        let st = self.store();
        let gens = constructive_complement(self.ctype(), lambda)?;
        let w = self.id_of(&signed::to_element(&signed::w_lambda(self.ctype(), lambda)?, self.sys())?)?;
        let j = self.j_of(w);
        let ids = gens
            .iter()
            .map(|g| self.id_of(&signed::to_element(g, self.sys())?))
            .collect::<Result<Vec<ElemId>>>()?;
        let m = st.closure(&ids);
        let expected = self.normalizer_of_parabolic(j).len() / self.parabolic_elements(j).len();
        Ok(ConstructiveCheck {
            label: lambda.clone(),
            order: m.len() as u64,
            expected_order: expected as u64,
            centralizes: ids.iter().all(|&g| st.commute(g, w)),
            trivial_intersection: m.iter().all(|&x| x == 0 || !st.in_parabolic(x, j)),
        })
    }
}

/// `|N_λ|` in signed-permutation space, and the product formula
/// `∏ 2^{a_m} a_m!` it should equal.
pub fn signed_complement_order(gens: &[SignedPermutation], n: usize) -> usize {
    closure_signed(gens, n).len()
}
