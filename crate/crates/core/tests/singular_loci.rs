use n2sl2::module::{check_hw, Bigrade, HwConditions, Module, ModuleSpec};
use n2sl2::singular::{singular_at, topological_h, topological_position, Sign};
use n2sl2::RatFun;

#[test]
fn topological_vectors_sit_at_predicted_bigrades() {
    let t = RatFun::t();
    for (r, s) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 2), (4, 1)] {
        for sign in [Sign::Plus, Sign::Minus] {
            let h = topological_h(sign, r, s, &t);
            let v = Module::new(ModuleSpec::Topological { h, t: t.clone(), theta: 0 }).unwrap();
            let (c, l, th) = topological_position(sign, r, s);
            let ker = singular_at(&v, Bigrade::new(c, l), HwConditions::Topological(th)).unwrap();
            assert_eq!(ker.len(), 1, "{sign:?} ({r},{s})");
            assert!(check_hw(&v, &ker[0], HwConditions::Topological(th)).unwrap().holds);
        }
    }
}
