//! Conjugacy classes, centralizers, normalizers of parabolic subgroups and
//! the normalizer complement `N_J`.

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::ctype::CoxeterType;
use crate::group::Group;
use crate::signed::{self, DoublePartition};
use crate::store::ElemId;
use crate::subset::SubsetJ;

/// One conjugacy class. Classes are numbered by their minimal representative,
/// which is the shortlex-smallest element of the class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClassRecord {
    pub index: usize,
    /// Reduced word of the minimal representative, 1-based labels.
    pub rep_min: Vec<usize>,
    pub rep_id: ElemId,
    pub length: usize,
    pub class_size: u64,
    pub centralizer_order: u64,
    #[serde(rename = "J")]
    pub j: SubsetJ,
    pub cuspidal: bool,
    pub label: Option<DoublePartition>,
    pub non_compliant: bool,
}

pub struct ClassTable {
    pub ctype: CoxeterType,
    pub records: Vec<ConjClassRecord>,
    /// Members of each class, sorted by id.
    pub members: Vec<Vec<ElemId>>,
    /// Class index of each element.
    pub class_of: Vec<u32>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.records.len()
    }
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
    pub fn reps(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.records.iter().map(|r| r.rep_id)
    }
    pub fn class_index_of(&self, x: ElemId) -> usize {
        self.class_of[x as usize] as usize
    }
    pub fn find_label(&self, label: &DoublePartition) -> Option<&ConjClassRecord> {
        self.records.iter().find(|r| r.label.as_ref() == Some(label))
    }
}

/// Result of comparing `C_W(w)/C_{W_J}(w)` with `N_W(W_J)/W_J` through the
/// map `c ↦ W_J c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub centralizer_order: u64,
    pub parabolic_centralizer_order: u64,
    pub normalizer_order: u64,
    pub parabolic_order: u64,
    pub orders_match: bool,
    pub kernel_is_parabolic_centralizer: bool,
    pub surjective: bool,
    pub homomorphism: bool,
}

impl QuotientCheck {
    pub fn holds(&self) -> bool {
        self.orders_match && self.kernel_is_parabolic_centralizer && self.surjective && self.homomorphism
    }
}

impl Group {
    /// The class table, computed once and cached.
    pub fn classes(&self) -> &ClassTable {
        self.class_cache().get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ClassTable {
        let st = self.store();
        let n = st.len();
        let mut class_of = vec![u32::MAX; n];
        let mut members = Vec::new();
        for x in st.ids() {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let idx = members.len() as u32;
            let mut orbit = vec![x];
            class_of[x as usize] = idx;
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                head += 1;
                for s in 0..self.rank() {
                    let z = st.left_gen(s, st.right_gen(y, s));
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = idx;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let full = SubsetJ::full(self.rank());
        let non_compliant = crate::complement::non_compliant_flags(self, &members, &class_of);
        let records = members
            .iter()
            .enumerate()
            .map(|(index, m)| {
                let rep = m[0];
                let size = m.len() as u64;
                ConjClassRecord {
                    index,
                    rep_min: self.word(rep),
                    rep_id: rep,
                    length: st.length(rep),
                    class_size: size,
                    centralizer_order: self.order() / size,
                    j: st.support(rep),
                    cuspidal: m.iter().all(|&y| st.support(y) == full),
                    label: self.classical_label(rep),
                    non_compliant: non_compliant[index],
                }
            })
            .collect();
        ClassTable { ctype: self.ctype(), records, members, class_of }
    }

    /// Cycle-type label for the classical types.
    pub fn classical_label(&self, x: ElemId) -> Option<DoublePartition> {
        if !self.ctype().is_classical() {
            return None;
        }
        let w = signed::from_element(&self.element(x), self.sys()).ok()?;
        Some(w.class_label(self.ctype()))
    }

    /// The class whose minimal representative is `w_λ` (or `w_λ'`).
    pub fn class_of_label(&self, label: &DoublePartition) -> crate::Result<usize> {
        let w = signed::w_lambda(self.ctype(), label)?;
        let x = self.id_of(&signed::to_element(&w, self.sys())?)?;
        Ok(self.classes().class_index_of(x))
    }

    pub fn conjugacy_class(&self, w: ElemId) -> &[ElemId] {
        let t = self.classes();
        &t.members[t.class_index_of(w)]
    }

    /// `C_W(w)`, sorted by id.
    pub fn centralizer(&self, w: ElemId) -> Vec<ElemId> {
        let st = self.store();
        (0..st.len() as ElemId).into_par_iter().filter(|&x| st.commute(w, x)).collect()
    }

    /// `C_W(w) ∩ W_J`.
    pub fn centralizer_in_parabolic(&self, w: ElemId, j: SubsetJ) -> Vec<ElemId> {
        let st = self.store();
        self.centralizer(w).into_iter().filter(|&x| st.in_parabolic(x, j)).collect()
    }

    pub fn normalizes_parabolic(&self, x: ElemId, j: SubsetJ) -> bool {
        let st = self.store();
        j.iter().all(|s| st.in_parabolic(st.conj(st.generator(s), x), j))
    }

    /// `N_W(W_J)`, sorted by id.
    pub fn normalizer_of_parabolic(&self, j: SubsetJ) -> Vec<ElemId> {
        let st = self.store();
        (0..st.len() as ElemId).into_par_iter().filter(|&x| self.normalizes_parabolic(x, j)).collect()
    }

    /// `N_J = {x ∈ X_J : J^x = J}`, sorted by id.
    pub fn normalizer_complement(&self, j: SubsetJ) -> Vec<ElemId> {
        let st = self.store();
        (0..st.len() as ElemId)
            .into_par_iter()
            .filter(|&x| self.is_min_coset_rep(x, j) && self.conjugate_subset(j, x) == Some(j))
            .collect()
    }

    /// A minimal-length element `v` of the class of `w` together with `x`
    /// such that `v = x^-1 w x`. The chosen `v` is the class's minimal
    /// representative.
    pub fn min_length_class_element(&self, w: ElemId) -> (ElemId, ElemId) {
        let st = self.store();
        let mut conjugator = rustc_hash::FxHashMap::default();
        conjugator.insert(w, 0 as ElemId);
        let mut queue = vec![w];
        let mut head = 0;
        let mut best = w;
        while head < queue.len() {
            let y = queue[head];
            head += 1;
            best = best.min(y);
            let cy = conjugator[&y];
            for s in 0..self.rank() {
                let z = st.left_gen(s, st.right_gen(y, s));
                if let std::collections::hash_map::Entry::Vacant(e) = conjugator.entry(z) {
                    e.insert(st.right_gen(cy, s));
                    queue.push(z);
                }
            }
        }
        (best, conjugator[&best])
    }

    pub fn is_min_length_in_class(&self, w: ElemId) -> bool {
        let st = self.store();
        st.length(w) == st.length(self.conjugacy_class(w)[0])
    }

    /// `C_W(w) W_J = N_W(W_J)` for `J = J(w)`, as element sets: `C_W(w)` lies
    /// in the normalizer and meets exactly the cosets `W_J x`, `x ∈ N_J`.
    pub fn verify_centralizer_normalizer_product(&self, w: ElemId) -> bool {
        let j = self.j_of(w);
        let c = self.centralizer(w);
        let normalizer = self.mask(&self.normalizer_of_parabolic(j));
        if !c.iter().all(|&x| normalizer[x as usize]) {
            return false;
        }
        let mut reps: Vec<ElemId> = c.iter().map(|&x| self.decompose(x, j).x).collect();
        reps.sort_unstable();
        reps.dedup();
        reps == self.normalizer_complement(j)
    }

    /// Checks the isomorphism `C_W(w)/C_{W_J}(w) ≅ N_W(W_J)/W_J`, `J = J(w)`,
    /// induced by `c ↦ W_J c`.
    pub fn verify_quotient_isomorphism(&self, w: ElemId) -> QuotientCheck {
        let st = self.store();
        let j = self.j_of(w);
        let c = self.centralizer(w);
        let cj: Vec<ElemId> = c.iter().copied().filter(|&x| st.in_parabolic(x, j)).collect();
        let n_order = self.normalizer_of_parabolic(j).len() as u64;
        let wj_order = self.parabolic_elements(j).len() as u64;
        let nj = self.normalizer_complement(j);
        let phi = |x: ElemId| self.decompose(x, j).x;

        let mut kernel: Vec<ElemId> = c.iter().copied().filter(|&x| phi(x) == 0).collect();
        kernel.sort_unstable();
        let mut image: Vec<ElemId> = c.iter().map(|&x| phi(x)).collect();
        image.sort_unstable();
        image.dedup();
        let gens = self.subgroup_generators(&c);
        let homomorphism = gens.iter().all(|&g| {
            let pg = phi(g);
            c.iter().all(|&x| phi(st.mul(g, x)) == phi(st.mul(pg, phi(x))))
        });
        QuotientCheck {
            centralizer_order: c.len() as u64,
            parabolic_centralizer_order: cj.len() as u64,
            normalizer_order: n_order,
            parabolic_order: wj_order,
            orders_match: c.len() as u64 * wj_order == n_order * cj.len() as u64,
            kernel_is_parabolic_centralizer: kernel == cj,
            surjective: image == nj,
            homomorphism,
        }
    }

    /// A small generating set of the subgroup `h` (sorted ids): greedily adds
    /// the first element not yet generated.
    pub fn subgroup_generators(&self, h: &[ElemId]) -> Vec<ElemId> {
        let st = self.store();
        let mut gens = Vec::new();
        let mut generated: FxHashSet<ElemId> = [0].into_iter().collect();
        for &x in h {
            if !generated.contains(&x) {
                gens.push(x);
                generated = st.closure(&gens).into_iter().collect();
                if generated.len() == h.len() {
                    break;
                }
            }
        }
        gens
    }

    /// For each `J` and each class of `W_J` that is cuspidal in `W_J`, the
    /// `W`-class meets `W_J` exactly in that `W_J`-class.
    pub fn check_cuspidal_non_fusion(&self) -> bool {
        let st = self.store();
        let table = self.classes();
        for j in SubsetJ::full(self.rank()).subsets_by_size() {
            let wj = self.parabolic_elements(j);
            let mut done = FxHashSet::default();
            for &w in &wj {
                if done.contains(&w) {
                    continue;
                }
                let cj = self.parabolic_class(w, j);
                done.extend(cj.iter().copied());
                if !cj.iter().all(|&y| st.support(y) == j) {
                    continue;
                }
                let fused: Vec<ElemId> =
                    table.members[table.class_index_of(w)].iter().copied().filter(|&y| st.in_parabolic(y, j)).collect();
                if fused != cj {
                    return false;
                }
            }
        }
        true
    }

    /// Any two minimal-length elements `w, w'` of a class satisfy
    /// `J(w') = J(w)^x` for some `x ∈ X_{J(w), J(w')}`.
    pub fn check_min_length_supports_conjugate(&self) -> bool {
        let st = self.store();
        let table = self.classes();
        table.members.iter().all(|m| {
            let w = m[0];
            let j = st.support(w);
            let len = st.length(w);
            m.iter().take_while(|&&y| st.length(y) == len).all(|&y| {
                let k = st.support(y);
                self.double_coset_reps(j, k).into_iter().any(|x| self.conjugate_subset(j, x) == Some(k))
            })
        })
    }

    /// For minimal `w` with `J = J(w)`: if `x ∈ X_J` and `ℓ(w^x) = ℓ(w)` then
    /// `J(w^x) = J^x`; and for arbitrary `v = u · x` with `ℓ(w^v) = ℓ(w)`,
    /// `J(w^v) = J^x`.
    pub fn check_min_length_conjugate_supports(&self) -> bool {
        let st = self.store();
        self.classes().reps().collect::<Vec<_>>().into_par_iter().all(|w| {
            let j = st.support(w);
            let len = st.length(w);
            st.ids().all(|v| {
                let wv = st.conj(w, v);
                if st.length(wv) != len {
                    return true;
                }
                let x = self.decompose(v, j).x;
                let jx = self.conjugate_subset(j, x);
                let direct = !self.is_min_coset_rep(v, j) || jx == Some(st.support(wv));
                direct && jx == Some(st.support(wv))
            })
        })
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
    fn class_counts() {
        assert_eq!(group("A1").classes().len(), 2);
        assert_eq!(group("A3").classes().len(), 5);
        assert_eq!(group("D4").classes().len(), 13);
        assert_eq!(group("B3").classes().len(), 10);
        assert_eq!(group("H3").classes().len(), 10);
        assert_eq!(group("F4").classes().len(), 25);
    }

    #[test]
    fn records_are_consistent() {
        for s in ["A4", "B3", "D4", "H3", "I2:6"] {
            let g = group(s);
            let t = g.classes();
            let total: u64 = t.records.iter().map(|r| r.class_size).sum();
            assert_eq!(total, g.order());
            for r in &t.records {
                assert_eq!(r.class_size * r.centralizer_order, g.order());
                assert_eq!(g.centralizer(r.rep_id).len() as u64, r.centralizer_order);
                let m = &t.members[r.index];
                assert_eq!(m[0], r.rep_id);
                assert!(m.iter().all(|&y| g.store().length(y) >= r.length));
                let cusp = SubsetJ::full(g.rank()).subsets_by_size().into_iter().filter(|k| k.len() < g.rank()).all(|k| {
                    m.iter().all(|&y| !g.store().in_parabolic(y, k))
                });
                assert_eq!(cusp, r.cuspidal);
            }
        }
    }

    #[test]
    fn labels_match_cycle_types() {
        for s in ["A4", "B4", "D4", "D5"] {
            let g = group(s);
            let t = g.classes();
            let mut labels: Vec<DoublePartition> = t.records.iter().map(|r| r.label.clone().unwrap()).collect();
            labels.sort();
            assert_eq!(labels, signed::class_labels(g.ctype()), "{s}");
            for r in &t.records {
                let l = r.label.as_ref().unwrap();
                assert_eq!(g.class_of_label(l).unwrap(), r.index);
                // w_λ has minimal length in its class
                let w = signed::w_lambda(g.ctype(), l).unwrap();
                let x = g.id_of(&signed::to_element(&w, g.sys()).unwrap()).unwrap();
                assert_eq!(g.store().length(x), r.length, "{s} {l}");
            }
        }
    }

    #[test]
    fn split_d_classes_are_not_fused() {
        let g = group("D4");
        for l in signed::class_labels(g.ctype()).into_iter().filter(|l| l.primed) {
            let mut unprimed = l.clone();
            unprimed.primed = false;
            assert_ne!(g.class_of_label(&l).unwrap(), g.class_of_label(&unprimed).unwrap());
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = group("A2");
        assert_eq!(g.centralizer(0).len(), 6);
        assert_eq!(g.centralizer(g.longest()).len(), 2);
        let d5 = group("D5");
        let l: DoublePartition = "(1),(2,2)".parse().unwrap();
        let w = d5.classes().records[d5.class_of_label(&l).unwrap()].rep_id;
        assert_eq!(d5.centralizer(w).len(), 32);
        assert_eq!(d5.centralizer_in_parabolic(w, d5.j_of(w)).len(), 16);
        assert_eq!(d5.centralizer_in_parabolic(w, SubsetJ::full(5)).len(), 32);
        assert_eq!(d5.centralizer_in_parabolic(0, SubsetJ::from_labels([1, 2])).len(), 4);
    }

    #[test]
    fn normalizer_examples() {
        let g = group("A3");
        assert_eq!(g.normalizer_of_parabolic(SubsetJ::full(3)).len(), 24);
        assert_eq!(g.normalizer_of_parabolic(SubsetJ::EMPTY).len(), 24);
        let j = SubsetJ::from_labels([1]);
        assert_eq!(g.normalizer_of_parabolic(j).len(), 4);
        let nj = g.normalizer_complement(j);
        assert_eq!(nj, vec![0, g.store().generator(2)]);
        assert_eq!(g.normalizer_complement(SubsetJ::full(3)), vec![0]);
        assert_eq!(g.normalizer_complement(SubsetJ::EMPTY).len(), 24);
    }

    #[test]
    fn howlett_splitting() {
        for s in ["A4", "B3", "D4", "H3"] {
            let g = group(s);
            let st = g.store();
            for j in SubsetJ::full(g.rank()).subsets_by_size() {
                let nj = g.normalizer_complement(j);
                let wj = g.parabolic_elements(j);
                let mut prod: Vec<ElemId> = wj.iter().flat_map(|&u| nj.iter().map(move |&x| (u, x))).map(|(u, x)| st.mul(u, x)).collect();
                prod.sort_unstable();
                prod.dedup();
                assert_eq!(prod, g.normalizer_of_parabolic(j));
                assert_eq!(prod.len(), wj.len() * nj.len());
                assert_eq!(st.closure(&nj), nj);
            }
        }
    }

    #[test]
    fn min_length_representatives() {
        let g = group("B3");
        let st = g.store();
        let t1 = st.generator(0);
        assert_eq!(g.min_length_class_element(t1), (t1, 0));
        assert_eq!(g.min_length_class_element(0), (0, 0));
        let w0 = g.longest();
        let conj = st.conj(t1, w0);
        let (v, x) = g.min_length_class_element(st.conj(conj, st.generator(1)));
        assert_eq!(v, t1);
        assert_eq!(st.conj(st.conj(conj, st.generator(1)), x), v);
    }

    #[test]
    fn product_decomposition_and_quotient_on_small_groups() {
        for s in ["A3", "B3", "D4", "I2:5", "H3"] {
            let g = group(s);
            for w in g.classes().reps().collect::<Vec<_>>() {
                assert!(g.verify_centralizer_normalizer_product(w), "{s}");
                assert!(g.verify_quotient_isomorphism(w).holds(), "{s}");
            }
        }
    }

    #[test]
    fn toolkit_on_small_groups() {
        for s in ["A3", "B3", "D4", "I2:6"] {
            let g = group(s);
            assert!(g.check_cuspidal_non_fusion(), "{s}");
            assert!(g.check_min_length_supports_conjugate(), "{s}");
            assert!(g.check_min_length_conjugate_supports(), "{s}");
        }
    }

    #[test]
    fn records_serialize_with_words() {
        let g = group("A2");
        let r = &g.classes().records[1];
        let js = serde_json::to_value(r).unwrap();
        assert_eq!(js["rep_min"], serde_json::json!([1]));
        assert_eq!(js["J"], serde_json::json!([1]));
        let back: ConjClassRecord = serde_json::from_value(js).unwrap();
        assert_eq!(&back, r);
    }
}
