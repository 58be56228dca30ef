use coxeter_core::characters::{macmahon_solomon_bridge, sample_permutations};
use coxeter_core::{Group, SubsetJ, DEFAULT_BUDGET};

#[test]
fn character_table_invariants() {
    for t in ["B4", "D5", "F4", "E6"] {
        let g = Group::new(t.parse().unwrap(), DEFAULT_BUDGET).unwrap();
        let table = g.character_table();
        let full = SubsetJ::full(g.rank());
        assert_eq!(table.subsets.len(), 1 << g.rank());
        let identity = table.rows.iter().find(|r| r.rep.is_empty()).unwrap();
        for &j in &table.subsets {
            assert_eq!(identity.values[j.bits() as usize], g.order() / g.parabolic_elements(j).len() as u64);
        }
        for (row, rec) in table.rows.iter().zip(&g.classes().records) {
            assert_eq!(row.values[full.bits() as usize], 1);
            assert_eq!(row.epsilon as i64, if rec.length % 2 == 0 { 1 } else { -1 });
            // the trivial subgroup gives the regular character
            assert_eq!(row.values[0], if rec.length == 0 { g.order() } else { 0 });
        }
        let csv = table.to_csv();
        assert_eq!(csv.lines().count(), table.rows.len() + 1);
        assert!(csv.lines().all(|l| l.split(',').count() == (1 << g.rank()) + 3));
    }
}

#[test]
fn bridge_for_four_and_five_points() {
    assert!(macmahon_solomon_bridge(4, None).unwrap().holds());
    let sample = sample_permutations(5, 20, 11);
    let r = macmahon_solomon_bridge(5, Some(&sample)).unwrap();
    assert!(r.holds());
    assert_eq!(r.permutations_checked, 20);
}
