use n2sl2::characters::theorem_character_rows;
use n2sl2::fock::{verify_decomposition, Theorem};
use n2sl2::RatFun;

#[test]
fn verma_theorem_characters_match_dimension_table() {
    let (h, t) = (RatFun::from_ratio(2, 7), RatFun::from_ratio(5, 3));
    let rows = theorem_character_rows(Theorem::Verma, &h, None, &t, (-2, 2), 3, 2).unwrap();
    assert!(rows.iter().all(|r| r.lhs == r.rhs), "{:?}", rows.iter().find(|r| r.lhs != r.rhs));
    assert!(rows.iter().filter(|r| r.lhs > 0).count() * 2 > rows.len());
    let report = verify_decomposition(Theorem::Verma, &h, None, &t, (-1, 1), 2, 1).unwrap();
    for d in &report.dims {
        let c = rows
            .iter()
            .find(|r| (r.theta, r.charge, r.level) == (d.theta, d.charge, d.level))
            .unwrap();
        assert_eq!((c.lhs, c.rhs), (d.lhs, d.rhs));
    }
}

#[test]
fn relaxed_theorem_characters_match_dimension_table() {
    let (h, l, t) = (RatFun::from_ratio(2, 7), RatFun::from_ratio(3, 11), RatFun::from_ratio(5, 3));
    let rows = theorem_character_rows(Theorem::Relaxed, &h, Some(&l), &t, (-2, 2), 3, 2).unwrap();
    assert!(rows.iter().all(|r| r.lhs == r.rhs), "{:?}", rows.iter().find(|r| r.lhs != r.rhs));
    assert!(rows.iter().filter(|r| r.lhs > 0).count() * 2 > rows.len());
    let report = verify_decomposition(Theorem::Relaxed, &h, Some(&l), &t, (-1, 1), 2, 1).unwrap();
    for d in &report.dims {
        let c = rows
            .iter()
            .find(|r| (r.theta, r.charge, r.level) == (d.theta, d.charge, d.level))
            .unwrap();
        assert_eq!((c.lhs, c.rhs), (d.lhs, d.rhs));
    }
}

#[test]
fn topological_submodules_fit_inside() {
    use n2sl2::characters::character;
    use n2sl2::module::ModuleSpec;
    use n2sl2::singular::{topological_h, topological_position, Sign};
    let t = RatFun::t();
    let (window, top) = ((-4, 4), 5);
    for (r, s) in [(1, 1), (1, 2), (2, 1)] {
        for sign in [Sign::Minus, Sign::Plus] {
            let h = topological_h(sign, r, s, &t);
            let parent = character(&ModuleSpec::Topological { h: h.clone(), t: t.clone(), theta: 0 }, window, top);
            let (charge, level, theta) = topological_position(sign, r, s);
            let sub = character(&ModuleSpec::Topological { h, t: t.clone(), theta }, (-12, 12), top + 12)
                .regrade(&["charge", "level"], vec![window, (0, top)], |k| {
                    vec![charge + k[0], level + k[1] - theta * k[0]]
                });
            assert!(sub.get(&[charge, level]) == 1);
            for (k, n) in &sub.table {
                assert!(parent.get(k) >= *n, "({r},{s}) at {k:?}: {} < {n}", parent.get(k));
            }
        }
    }
}
