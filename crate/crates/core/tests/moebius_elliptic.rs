use fmcheck::elliptic::{j_of_lambda, DoubleCover};
use fmcheck::field::Field;
use fmcheck::moebius::{cross_ratio, map_triple, three_point_map, Moebius, ProjPoint};
use fmcheck::Rat;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = ProjPoint<Rat>> {
    prop_oneof![1 => Just(ProjPoint::Infinity), 9 => rat().prop_map(ProjPoint::Finite)]
}

fn moebius() -> impl Strategy<Value = Moebius<Rat>> {
    (rat(), rat(), rat(), rat()).prop_filter_map("degenerate", |(a, b, c, d)| Moebius::new(a, b, c, d).ok())
}

fn distinct(p: &[ProjPoint<Rat>]) -> bool {
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i] != p[j]))
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn cross_ratio_is_invariant(m in moebius(), p in prop::array::uniform4(point())) {
        prop_assume!(distinct(&p));
        let q: Vec<ProjPoint<Rat>> = p.iter().map(|x| m.apply(x)).collect();
        prop_assert_eq!(cross_ratio(&p[0], &p[1], &p[2], &p[3]).unwrap(), cross_ratio(&q[0], &q[1], &q[2], &q[3]).unwrap());
    }

    #[test]
    fn j_ignores_ordering(p in prop::array::uniform4(point())) {
        prop_assume!(distinct(&p));
        let perms = permutations4();
        prop_assert_eq!(perms.len(), 24);
        let j0 = DoubleCover::from_branch(p.to_vec()).unwrap().j_invariant().unwrap();
        for s in perms {
            let e = DoubleCover::from_branch(s.iter().map(|&i| p[i].clone()).collect()).unwrap();
            prop_assert_eq!(e.j_invariant().unwrap(), j0.clone());
        }
    }

    #[test]
    fn three_points_go_to_normal_form(p in prop::array::uniform3(point())) {
        prop_assume!(distinct(&p));
        let m = three_point_map(&p[0], &p[1], &p[2]).unwrap();
        prop_assert_eq!(m.apply(&p[0]), ProjPoint::Infinity);
        prop_assert_eq!(m.apply(&p[1]), ProjPoint::Finite(Rat::from_i64(0)));
        prop_assert_eq!(m.apply(&p[2]), ProjPoint::Finite(Rat::from_i64(1)));
    }

    #[test]
    fn triple_maps_compose(p in prop::array::uniform3(point()), q in prop::array::uniform3(point())) {
        prop_assume!(distinct(&p) && distinct(&q));
        let m = map_triple([&p[0], &p[1], &p[2]], [&q[0], &q[1], &q[2]]).unwrap();
        for i in 0..3 {
            prop_assert_eq!(m.apply(&p[i]), q[i].clone());
        }
        prop_assert_eq!(m.compose(&m.inverse()), Moebius::identity());
    }

    #[test]
    fn j_of_lambda_symmetries(l in rat()) {
        prop_assume!(l != Rat::from_i64(0) && l != Rat::from_i64(1));
        let one = Rat::from_i64(1);
        let j = j_of_lambda(&l).unwrap();
        prop_assert_eq!(j_of_lambda(&(one.clone() - l.clone())).unwrap(), j.clone());
        prop_assert_eq!(j_of_lambda(&l.try_inv().unwrap()).unwrap(), j);
    }
}

#[test]
fn repeated_points_are_rejected() {
    let p = ProjPoint::Finite(Rat::from_i64(2));
    assert!(three_point_map(&p, &p, &ProjPoint::Infinity).is_err());
    assert!(DoubleCover::from_branch(vec![p.clone(), p, ProjPoint::Infinity, ProjPoint::Finite(Rat::from_i64(0))]).is_err());
    assert!(Moebius::new(Rat::from_i64(1), Rat::from_i64(2), Rat::from_i64(2), Rat::from_i64(4)).is_err());
}
