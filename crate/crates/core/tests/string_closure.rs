use n2sl2::string::{closure_violations, StringRep};
use n2sl2::RatFun;

#[test]
fn n2_closes_on_string_states_up_to_level_two() {
    let t = RatFun::t();
    let rep = StringRep::new(&t, &RatFun::from_ratio(-3, 4), &RatFun::from_ratio(5, 7)).unwrap();
    let states = rep.states_up_to(2, (-2, 2));
    let bad = closure_violations(&rep, &states, 2).unwrap();
    assert!(bad.is_empty(), "{} failures, first {:?}", bad.len(), bad.first());
}

#[test]
fn n2_closes_at_rational_t() {
    let t = RatFun::from_ratio(7, 3);
    let rep = StringRep::new(&t, &RatFun::from_int(2), &RatFun::from_ratio(1, 2)).unwrap();
    let states = rep.states_up_to(2, (-2, 2));
    assert!(closure_violations(&rep, &states, 2).unwrap().is_empty());
}
