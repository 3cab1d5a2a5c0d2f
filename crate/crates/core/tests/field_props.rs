use fmcheck::field::embed::embed;
use fmcheck::field::Field;
use fmcheck::{sample, CycloElem, Rat};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn elem() -> impl Strategy<Value = CycloElem> {
    prop::array::uniform6((-20i64..=20, 1i64..=9))
        .prop_map(|c| CycloElem::from_coeffs(c.map(|(n, d)| Rat::new(n.into(), d.into()))))
}

proptest! {
    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), CycloElem::zero());
    }

    #[test]
    fn inverse(a in elem()) {
        prop_assume!(!a.is_zero());
        let inv = a.try_inv().unwrap();
        prop_assert_eq!(a.clone() * inv.clone(), CycloElem::one());
        prop_assert_eq!(inv.try_inv().unwrap(), a);
    }

    #[test]
    fn norm_is_multiplicative(a in elem(), b in elem()) {
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
    }

    #[test]
    fn galois_is_a_ring_map(a in elem(), b in elem(), k in 1i64..7) {
        prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
    }
}

#[test]
fn zero_has_no_inverse() {
    assert!(CycloElem::zero().try_inv().is_err());
    assert_eq!(CycloElem::zeta().pow(7), CycloElem::one());
    let s: CycloElem = (0..7).map(CycloElem::zeta_pow).fold(CycloElem::zero(), |a, b| a + b);
    assert!(s.is_zero());
}

#[test]
fn embedded_identities_at_128_bits() {
    let mut rng = sample::rng(11);
    let one = embed(&CycloElem::one(), 128);
    for i in 0..1000 {
        let a = sample::nonzero_cyclo(&mut rng, 50);
        let b = sample::cyclo(&mut rng, 50);
        let (ea, eb) = (embed(&a, 128), embed(&b, 128));
        assert!(embed(&(a.clone() * b.clone()), 128).overlaps(&ea.mul(&eb)), "product {i}");
        assert!(embed(&(a.clone() + b.clone()), 128).overlaps(&ea.add(&eb)), "sum {i}");
        assert!(embed(&(a.clone() - b.clone()), 128).overlaps(&ea.sub(&eb)), "difference {i}");
        let inv = a.try_inv().unwrap();
        assert_eq!(a.clone() * inv.clone(), CycloElem::one());
        assert!(embed(&inv, 128).mul(&ea).overlaps(&one), "inverse {i}");
        assert!(ea.radius_f64() <= ea.abs_upper_f64() * 2f64.powi(-100) + 2f64.powi(-100), "radius {i}");
    }
}

#[test]
fn disjoint_values_do_not_overlap() {
    let a = embed(&CycloElem::zeta(), 128);
    let b = embed(&CycloElem::zeta_pow(6), 128);
    assert!(!a.overlaps(&b));
}
