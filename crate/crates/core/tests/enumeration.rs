//! Pinned counts and enumeration regressions beyond the acceptance suite.

use snakes::enumerate::{brute_force_binary, count_table, count_total, generate_ab, CountTable};
use snakes::names::parameters;

#[test]
fn pinned_totals() {
    let expected = [1u128, 1, 2, 7, 37, 262, 2327, 24871, 310918, 4452991];
    for (m, &c) in (1..).zip(&expected) {
        assert_eq!(count_total(m).unwrap(), c, "m = {m}");
    }
}

#[test]
fn pinned_table_m5() {
    let t = count_table(5).unwrap();
    let cells: Vec<(usize, usize, u128)> = t.cells.iter().map(|(p, &c)| (p.j, p.k, c)).collect();
    assert_eq!(
        cells,
        [
            (3, 5, 2),
            (3, 6, 3),
            (3, 7, 2),
            (4, 5, 2),
            (4, 6, 6),
            (4, 7, 4),
            (5, 6, 6),
            (5, 7, 6),
            (6, 7, 6)
        ]
    );
}

#[test]
fn parameters_stay_in_range() {
    for m in 2..=7 {
        for w in generate_ab(m) {
            let p = parameters(&w).unwrap();
            assert!(3 <= p.j && p.j < p.k && p.k <= m + 2, "{w}: {p}");
        }
    }
}

#[test]
fn table_serializes_as_list() {
    let t = count_table(4).unwrap();
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(
        json["cells"][0],
        serde_json::json!({"j": 3, "k": 5, "count": 1})
    );
    let back: CountTable = serde_json::from_value(json).unwrap();
    assert_eq!(back, t);
}

#[test]
fn brute_force_bound_is_enforced() {
    assert!(brute_force_binary(9, 8).is_err());
    assert_eq!(brute_force_binary(3, 3).unwrap().len(), 2);
}
