//! Cross-module properties of the deciders and the Birman map.

use proptest::prelude::*;
use sb3::band::normal_form;
use sb3::birman::{check_diagram, eta, modified_burau_matrix, rho_matrix, GroupRingElt, ModifiedBurauOrbit};
use sb3::presentation::{relation_set, RelationSetName};
use sb3::solver::{decide, equal_sb3, equal_sg3, is_trivial_sg3, perturb, Method};
use sb3::rng::SplitMix64;
use sb3::words::{Letter, Mode, Word};

fn letter(i: usize) -> Letter {
    [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV, Letter::T, Letter::T_INV][i]
}

fn monoid_word(max_len: usize, max_sing: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..5, 0..=max_len).prop_map(move |ix| {
        let mut sing = 0;
        let letters = ix
            .into_iter()
            .map(|i| {
                let l = letter(if i == 4 && sing >= max_sing { 0 } else { i });
                sing += l.is_tau() as usize;
                l
            })
            .collect();
        Word::from_letters(letters, Mode::Monoid).unwrap()
    })
}

/// Product in `Z[B3]`, computed through normal forms of concatenated words.
fn group_ring_mul(a: &GroupRingElt, b: &GroupRingElt) -> GroupRingElt {
    let mut out = GroupRingElt::new();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term(normal_form(&x.to_word().concat(&y.to_word())).unwrap(), c * d);
        }
    }
    out
}

/// A relator `lhs rhs^{-1}` of either presentation, as a group word.
fn relator(index: usize, inverted: bool) -> Word {
    let rels: Vec<_> = [RelationSetName::Classical, RelationSetName::Reduced]
        .into_iter()
        .flat_map(|s| relation_set(s).relations)
        .collect();
    let r = &rels[index % rels.len()];
    let word = r.lhs.to_group().concat(&r.rhs.to_group().invert().unwrap());
    if inverted {
        word.invert().unwrap()
    } else {
        word
    }
}

fn group_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..6, 0..=max_len)
        .prop_map(|ix| Word::from_letters(ix.into_iter().map(letter).collect(), Mode::Group).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn deciders_are_reflexive_and_symmetric(u in monoid_word(12, 4), v in monoid_word(12, 4)) {
        for m in Method::ALL {
            prop_assert!(decide(m, &u, &u).unwrap().equal);
            prop_assert_eq!(decide(m, &u, &v).unwrap().equal, decide(m, &v, &u).unwrap().equal);
        }
    }

    #[test]
    fn perturbation_preserves_equality(u in monoid_word(12, 4), seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let p = perturb(&u, &mut rng);
        for m in Method::ALL {
            prop_assert!(decide(m, &u, &p).unwrap().equal, "{} vs {} ({:?})", u, p, m);
        }
    }

    #[test]
    fn monoid_embeds_in_group(u in monoid_word(10, 3), v in monoid_word(10, 3)) {
        prop_assert_eq!(equal_sb3(&u, &v).unwrap().equal, equal_sg3(&u, &v).unwrap().equal);
    }

    #[test]
    fn relator_consequences_are_trivial(
        parts in prop::collection::vec((any::<usize>(), any::<bool>(), group_word(4)), 1..4)
    ) {
        let mut w = Word::empty(Mode::Group);
        for (i, inv, c) in &parts {
            let conj = c.concat(&relator(*i, *inv)).concat(&c.invert().unwrap());
            w = w.concat(&conj);
        }
        prop_assert!(is_trivial_sg3(&w).unwrap().equal, "{}", w);
    }

    #[test]
    fn eta_is_multiplicative(u in monoid_word(6, 2), v in monoid_word(6, 2)) {
        let lhs = eta(&u.concat(&v)).unwrap();
        prop_assert_eq!(lhs, group_ring_mul(&eta(&u).unwrap(), &eta(&v).unwrap()));
    }

    #[test]
    fn diagram_commutes(u in monoid_word(12, 3)) {
        prop_assert!(check_diagram(&u).unwrap());
    }

    #[test]
    fn orbit_and_rho_ignore_numbering(u in monoid_word(10, 3), rot in 0usize..3) {
        let m = u.tau_letters();
        let rep = modified_burau_matrix(&u).unwrap();
        let perm: Vec<usize> = (0..m).map(|i| (i + rot) % m.max(1) + 1).collect();
        let renamed = rep.map(|e| e.permute_indexed(&perm));
        prop_assert_eq!(
            ModifiedBurauOrbit::from_representative(&rep, m),
            ModifiedBurauOrbit::from_representative(&renamed, m)
        );
        prop_assert_eq!(rho_matrix(&rep, m), rho_matrix(&renamed, m));
    }
}
