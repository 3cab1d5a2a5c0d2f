use fmcheck::moduli::{act_perm, apply_word, dual_mu, equivalent, group_closure, mu0, perm_of_word};
use fmcheck::moebius::branch_sets_equivalent;
use fmcheck::sample;
use rand::Rng;

#[test]
fn word_action_is_a_homomorphism() {
    let mut rng = sample::rng(3);
    for _ in 0..200 {
        let mu = sample::mu_rat(&mut rng);
        let len = rng.gen_range(1..=12);
        let w = sample::word(&mut rng, len);
        let by_steps = apply_word(&mu, &w).unwrap();
        let by_perm = act_perm(&mu, &perm_of_word(&w).unwrap()).unwrap();
        assert_eq!(by_steps, by_perm, "word {w}");
    }
}

#[test]
fn equivalence_agrees_with_branch_set_search() {
    let mut rng = sample::rng(5);
    let mut hits = 0;
    for i in 0..100 {
        let mu = sample::mu_rat(&mut rng);
        // half the targets are images of mu, half are unrelated
        let target = if i % 2 == 0 {
            apply_word(&mu, &sample::word(&mut rng, 9)).unwrap()
        } else {
            sample::mu_rat(&mut rng)
        };
        let by_group = equivalent(&mu, &target);
        let by_points = branch_sets_equivalent(&mu.branch_set(), &target.branch_set());
        assert_eq!(by_group.is_some(), by_points.is_some(), "case {i}");
        if let Some(a) = by_group {
            assert_eq!(act_perm(&mu, &a.perm).unwrap(), target);
            hits += 1;
        }
    }
    assert!(hits >= 50);
}

#[test]
fn mu0_is_self_dual_up_to_relabeling() {
    let mu = mu0();
    let dual = dual_mu(&mu).unwrap();
    let a = equivalent(&mu, &dual).expect("equivalent");
    assert_eq!(apply_word(&mu, &a.word).unwrap(), dual);
    assert_eq!(group_closure().len(), 5040);
}
