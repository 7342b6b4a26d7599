use fdq_core::parabolic::{levi_data, relative_weyl, relative_weyl_order_exhaustive};
use fdq_core::root_datum::{build_root_system, cartan_matrix, simple_types_up_to, weyl_group_order};

#[test]
fn relative_weyl_group_has_order_at_most_two() {
    for (t, n) in simple_types_up_to(5) {
        let rs = build_root_system(&cartan_matrix(t, n).unwrap()).unwrap();
        for alpha in 0..n {
            let theta: Vec<usize> = (0..n).filter(|&i| i != alpha).collect();
            let exhaustive = relative_weyl_order_exhaustive(&rs, &theta);
            let fast = relative_weyl(&rs, &levi_data(&rs, alpha).unwrap()).unwrap().wm_order as usize;
            assert!(exhaustive <= 2, "{t:?}{n} without {alpha}: {exhaustive}");
            assert_eq!(exhaustive, fast, "{t:?}{n} without {alpha}");
        }
    }
}

#[test]
fn orbit_stabilizer_order_matches_known_values() {
    let known = [("E6", 51_840u128), ("E7", 2_903_040), ("E8", 696_729_600), ("F4", 1_152), ("G2", 12)];
    for (name, order) in known {
        let (t, n, _) = fdq_core::root_datum::parse_type_name(name).unwrap();
        let rs = build_root_system(&cartan_matrix(t, n).unwrap()).unwrap();
        assert_eq!(weyl_group_order(&rs), order, "{name}");
    }
}
