use coxeter_core::complement::{non_compliant_by_scan, DEFAULT_SEARCH_BUDGET};
use coxeter_core::{ComplementStatus, DoublePartition, ElemId, Group, SearchOutcome, SubsetJ, DEFAULT_BUDGET};

fn group(s: &str) -> Group {
    Group::new(s.parse().unwrap(), DEFAULT_BUDGET).unwrap()
}

fn dp(s: &str) -> DoublePartition {
    s.parse().unwrap()
}

#[test]
fn dihedral_classes_are_cuspidal_or_involutions() {
    for m in 3..=12 {
        let g = group(&format!("I2:{m}"));
        for r in &g.classes().records {
            assert!(r.cuspidal || g.store().mul(r.rep_id, r.rep_id) == 0, "I2({m}) {:?}", r.rep_min);
            let c = g.centralizer_complement(r.rep_id);
            assert_eq!(c.status, ComplementStatus::Found);
            assert_eq!(c.quotient_order() as usize, g.normalizer_complement(r.j).len());
        }
    }
}

#[test]
fn d7_non_compliant_classes() {
    let g = group("D7");
    let classes = g.classes();
    let flagged: Vec<String> =
        classes.records.iter().filter(|r| r.non_compliant).map(|r| r.label.as_ref().unwrap().to_string()).collect();
    assert_eq!(flagged.len(), 4);
    assert!(flagged.contains(&"((1,2),(2,2))".to_string()));
    // the label rule agrees with the parabolic scan
    let scan = non_compliant_by_scan(&g, classes.len(), &classes.class_of);
    assert_eq!(scan, classes.records.iter().map(|r| r.non_compliant).collect::<Vec<_>>());
    let w = classes.records[g.class_of_label(&dp("(1,2),(2,2)")).unwrap()].rep_id;
    let res = g.centralizer_complement(w);
    assert_eq!(res.status, ComplementStatus::NoComplement);
    assert!(matches!(
        g.exhaustive_complement_search(res.rep_id, res.j, DEFAULT_SEARCH_BUDGET),
        SearchOutcome::NotExists { .. }
    ));
}

#[test]
fn d7_algorithm_fails_exactly_on_non_compliant_classes() {
    let g = group("D7");
    for r in &g.classes().records {
        let res = g.centralizer_complement(r.rep_id);
        let expected = if r.non_compliant { ComplementStatus::NoComplement } else { ComplementStatus::Found };
        assert_eq!(res.status, expected, "{:?}", r.label);
    }
}

#[test]
fn e6_table_row() {
    let g = group("E6");
    let flagged: Vec<_> = g.classes().records.iter().filter(|r| r.non_compliant).collect();
    assert_eq!(flagged.len(), 1);
    let r = flagged[0];
    assert_eq!(r.class_size, 540);
    assert_eq!(r.centralizer_order, 96);
    // J(w) spans the D4 subdiagram 2-4-{3,5}
    assert_eq!(r.j, SubsetJ::from_labels([2, 3, 4, 5]));
    assert_eq!(g.centralizer_in_parabolic(r.rep_id, r.j).len(), 16);
    let res = g.centralizer_complement(r.rep_id);
    assert_eq!(res.status, ComplementStatus::NoComplement);
}

/// For `L ⊇ J(w)`: the index of `C_{W_J}(w)` in `C_{W_L}(w) = C_W(w) ∩ W_L`,
/// the order of `(N_W(W_J) ∩ W_L) / W_J`, and the complement search in `W_L`.
fn restricted(g: &Group, w: ElemId, l: SubsetJ) -> (usize, usize, SearchOutcome) {
    let st = g.store();
    let j = g.j_of(w);
    let cl = g.centralizer(w).into_iter().filter(|&x| st.in_parabolic(x, l)).count();
    let nl = g.normalizer_of_parabolic(j).into_iter().filter(|&x| st.in_parabolic(x, l)).count();
    let quotient = nl / g.parabolic_elements(j).len();
    let cj = g.centralizer_in_parabolic(w, j).len();
    (cl / cj, quotient, g.exhaustive_complement_search_within(w, j, l, DEFAULT_SEARCH_BUDGET))
}

#[test]
fn non_existence_restricts_to_d5_parabolics() {
    // D6 class ((1,1),(2,2)) and the E6 class, each inside parabolics of type D5
    let d6 = group("D6");
    let w = d6.classes().records[d6.class_of_label(&dp("(1,1),(2,2)")).unwrap()].rep_id;
    let (q, nq, outcome) = restricted(&d6, w, SubsetJ::from_labels([1, 2, 3, 4, 5]));
    assert_eq!(q, nq);
    assert!(matches!(outcome, SearchOutcome::NotExists { .. }));

    let e6 = group("E6");
    let r = e6.classes().records.iter().find(|r| r.non_compliant).unwrap();
    for l in [SubsetJ::from_labels([2, 3, 4, 5, 1]), SubsetJ::from_labels([2, 3, 4, 5, 6])] {
        let (q, nq, outcome) = restricted(&e6, r.rep_id, l);
        assert_eq!(q, nq);
        assert!(matches!(outcome, SearchOutcome::NotExists { .. }), "{l:?}");
    }
}
