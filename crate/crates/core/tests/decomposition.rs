use n2sl2::fock::{verify_decomposition, Theorem};
use n2sl2::RatFun;

#[test]
fn verma_decomposition() {
    let (h, t) = (RatFun::from_ratio(2, 7), RatFun::from_ratio(5, 3));
    let rep = verify_decomposition(Theorem::Verma, &h, None, &t, (-2, 2), 3, 3).unwrap();
    assert!(rep.pass, "{:?}", rep.failures);
}

#[test]
fn relaxed_decomposition() {
    let (h, l, t) = (RatFun::from_ratio(2, 7), RatFun::from_ratio(3, 11), RatFun::from_ratio(5, 3));
    let rep = verify_decomposition(Theorem::Relaxed, &h, Some(&l), &t, (-2, 2), 3, 3).unwrap();
    assert!(rep.pass, "{:?}", rep.failures);
}
