use std::collections::BTreeMap;

use coxeter_core::signed::{class_labels, from_element, to_element, w_lambda};
use coxeter_core::{DoublePartition, ElemId, Family, Group, SignedPermutation, SubsetJ, DEFAULT_BUDGET};

fn group(s: &str) -> Group {
    Group::new(s.parse().unwrap(), DEFAULT_BUDGET).unwrap()
}

fn signed(g: &Group, x: ElemId) -> SignedPermutation {
    from_element(&g.element(x), g.sys()).unwrap()
}

#[test]
fn cycle_types_parametrize_classes_in_types_a_and_b() {
    for t in ["A1", "A2", "A3", "B2", "B3", "B4"] {
        let g = group(t);
        let classes = g.classes();
        let mut seen: BTreeMap<DoublePartition, usize> = BTreeMap::new();
        for (i, members) in classes.members.iter().enumerate() {
            let types: Vec<DoublePartition> = members.iter().map(|&x| signed(&g, x).cycle_type()).collect();
            assert!(types.windows(2).all(|p| p[0] == p[1]), "{t}: class {i} mixes cycle types");
            assert!(seen.insert(types[0].clone(), i).is_none(), "{t}: two classes share {}", types[0]);
        }
    }
}

#[test]
fn split_classes_in_d4() {
    let g = group("D4");
    let classes = g.classes();
    let mut by_type: BTreeMap<DoublePartition, Vec<usize>> = BTreeMap::new();
    for (i, members) in classes.members.iter().enumerate() {
        by_type.entry(signed(&g, members[0]).cycle_type()).or_default().push(i);
    }
    for (lambda, idx) in &by_type {
        assert_eq!(idx.len(), if lambda.is_split_in_d() { 2 } else { 1 }, "{lambda}");
        if lambda.is_split_in_d() {
            // the two classes differ in the parity of negative entries in positive cycles
            let parity = |i: usize| signed(&g, classes.members[i][0]).cycle_sign_parity();
            assert_ne!(parity(idx[0]), parity(idx[1]));
            let w = w_lambda(g.ctype(), lambda).unwrap();
            let wp = w_lambda(g.ctype(), &lambda.clone().primed()).unwrap();
            assert_eq!(w.cycle_type(), wp.cycle_type());
            let id = |p: &SignedPermutation| g.id_of(&to_element(p, g.sys()).unwrap()).unwrap();
            assert_ne!(classes.class_index_of(id(&w)), classes.class_index_of(id(&wp)));
        }
    }
}

fn expected_support(family: Family, lambda: &DoublePartition) -> SubsetJ {
    let mut j = SubsetJ::EMPTY;
    let k: usize = lambda.minus.iter().sum();
    let shift = usize::from(family != Family::A);
    match family {
        Family::B if k >= 1 => j = SubsetJ::from_indices(0..k),
        Family::D if k >= 2 => j = SubsetJ::from_indices(0..k),
        _ => {}
    }
    let mut o = k;
    for &m in &lambda.plus {
        for i in o..o + m - 1 {
            j = j.with(i + shift);
        }
        o += m;
    }
    j
}

#[test]
fn representatives_lie_in_block_parabolics() {
    for t in ["A4", "B4", "B5", "D4", "D5"] {
        let g = group(t);
        for l in class_labels(g.ctype()) {
            let w = g.id_of(&to_element(&w_lambda(g.ctype(), &l).unwrap(), g.sys()).unwrap()).unwrap();
            let j = g.j_of(w);
            if l.primed {
                // w_λ' = t w_λ t has the same support size, with u and s_1 exchanged
                assert_eq!(j.len(), expected_support(g.ctype().family(), &l).len(), "{t} {l}");
            } else {
                assert_eq!(j, expected_support(g.ctype().family(), &l), "{t} {l}");
            }
        }
    }
}

#[test]
fn representatives_have_minimal_length() {
    for t in ["A4", "B4", "B5", "D4", "D5"] {
        let g = group(t);
        let st = g.store();
        for l in class_labels(g.ctype()) {
            let w = g.id_of(&to_element(&w_lambda(g.ctype(), &l).unwrap(), g.sys()).unwrap()).unwrap();
            let min = g.conjugacy_class(w).iter().map(|&x| st.length(x)).min().unwrap();
            assert_eq!(st.length(w), min, "{t} {l}");
        }
    }
}

/// Index-2 relations between `W = W(B_n)` and `W⁺ = W(D_n)` for classes
/// whose negative part has an even number of cycles.
#[test]
fn type_b_and_type_d_index_two_relations() {
    for n in [4usize, 5] {
        let b = group(&format!("B{n}"));
        let d = group(&format!("D{n}"));
        let (sb, sd) = (b.store(), d.store());
        let to_d = |x: ElemId| d.id_of(&to_element(&signed(&b, x), d.sys()).unwrap()).unwrap();
        let d_gens: Vec<ElemId> = (0..n).map(|s| b.id_of(&to_element(&signed(&d, sd.generator(s)), b.sys()).unwrap()).unwrap()).collect();
        for r in &b.classes().records {
            let l = r.label.clone().unwrap();
            if l.minus.len() % 2 == 1 {
                continue;
            }
            let w = r.rep_id;
            let wd = to_d(w);
            let j = r.j;
            let no_minus = l.minus.is_empty();
            let index = |big: usize, small: usize| big / small;
            // (i) w is also of minimal length in its W⁺-class
            assert!(d.is_min_length_in_class(wd), "B{n} {l}");
            // (ii) C_{W⁺}(w) = C_W(w) iff λ⁻ = ∅ and λ⁺ is even
            let cb = b.centralizer(w).len();
            let cd = d.centralizer(wd).len();
            assert_eq!(index(cb, cd), if no_minus && l.plus_is_even() { 1 } else { 2 }, "B{n} {l}");
            // (iii) J⁺ = S⁺ ∩ W_J names the smallest parabolic of W⁺ containing w
            let j_plus = SubsetJ::from_indices((0..n).filter(|&s| sb.in_parabolic(d_gens[s], j)));
            assert_eq!(d.j_of(wd), j_plus, "B{n} {l}");
            // (iv) W⁺_{J⁺} = W_J ∩ W⁺, of index 2 in W_J unless λ⁻ = ∅
            let wj = b.parabolic_elements(j).len();
            let wj_plus = d.parabolic_elements(j_plus).len();
            assert_eq!(index(wj, wj_plus), if no_minus { 1 } else { 2 }, "B{n} {l}");
            // (v) C_{W⁺_{J⁺}}(w) has index 2 in C_{W_J}(w) unless λ⁻ = ∅
            let cj = b.centralizer_in_parabolic(w, j).len();
            let cj_plus = d.centralizer_in_parabolic(wd, j_plus).len();
            assert_eq!(index(cj, cj_plus), if no_minus { 1 } else { 2 }, "B{n} {l}");
            // (vi) N⁺_{J⁺} has index 2 in N_J iff λ⁺ is not even and λ⁻ = ∅
            let nj = b.normalizer_complement(j).len();
            let nj_plus = d.normalizer_complement(j_plus).len();
            assert_eq!(index(nj, nj_plus), if no_minus && !l.plus_is_even() { 2 } else { 1 }, "B{n} {l}");
        }
    }
}
