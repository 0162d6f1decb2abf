use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use regmeasure::automata::Dfa;
use regmeasure::census::Language;
use regmeasure::density::{density, natural_density};
use regmeasure::languages::{goldstine_word_prefix, predicates, LanguageOracle};
use regmeasure::monoid::{idempotent_power, nonprimitive_witness, transition_monoid, GreenClasses};
use regmeasure::{Alphabet, Letter};

fn ab() -> Alphabet {
    Alphabet::parse("ab").unwrap()
}

prop_compose! {
    fn dfa(max_states: usize)(n in 1..=max_states)(
        table in prop::collection::vec(prop::collection::vec(0..n, 2), n),
        accepting in prop::collection::vec(any::<bool>(), n),
        initial in 0..n,
    ) -> Dfa {
        let acc: Vec<usize> = (0..accepting.len()).filter(|&q| accepting[q]).collect();
        Dfa::new(ab(), table, initial, acc).unwrap()
    }
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..2u8, 0..=max_len)
}

fn is_power(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).any(|p| n.is_multiple_of(p) && w.chunks(p).all(|c| c == &w[..p]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_law(x in dfa(6)) {
        prop_assert_eq!(density(&x).unwrap() + density(&x.complement()).unwrap(), BigRational::one());
    }

    #[test]
    fn monotone_and_additive(x in dfa(5), y in dfa(5)) {
        let dx = density(&x).unwrap();
        let meet = density(&x.intersection(&y).unwrap()).unwrap();
        let rest = density(&x.difference(&y).unwrap()).unwrap();
        prop_assert!(meet <= dx);
        prop_assert_eq!(meet + rest, dx);
    }

    #[test]
    fn null_iff_not_dense(x in dfa(6)) {
        prop_assert_eq!(density(&x).unwrap().is_zero(), x.shortest_forbidden_word().unwrap().is_some());
    }

    #[test]
    fn minimization_preserves_language(x in dfa(7), w in word(12)) {
        let m = x.minimize();
        prop_assert!(m.num_states() <= x.num_states());
        prop_assert!(m.equivalent(&x).unwrap());
        prop_assert_eq!(m.accepts(&w), x.accepts(&w));
    }

    #[test]
    fn word_counts_match_enumeration(x in dfa(5)) {
        let census = x.count_words(8);
        for n in 0..=8usize {
            let brute = (0..1u32 << n)
                .filter(|i| {
                    let w: Vec<Letter> = (0..n).rev().map(|b| ((i >> b) & 1) as Letter).collect();
                    x.accepts(&w)
                })
                .count();
            prop_assert_eq!(census.counts()[n].clone(), brute.into());
        }
    }

    #[test]
    fn natural_density_is_consistent(x in dfa(6)) {
        let report = natural_density(&x).unwrap();
        let c = report.modulus;
        let mean = report.accumulation_points.iter().map(|(_, v)| v.clone()).sum::<BigRational>()
            / BigRational::from_integer(c.into());
        prop_assert_eq!(report.accumulation_points.len(), c);
        prop_assert_eq!(&mean, &report.density);
        if let Some(nd) = report.natural_density {
            prop_assert_eq!(nd, report.density);
        }
    }

    #[test]
    fn monoid_evaluation_is_a_homomorphism(x in dfa(5), u in word(8), v in word(8)) {
        let (m, accept) = transition_monoid(&x).unwrap();
        let uv: Vec<Letter> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(m.evaluate(&uv), m.compose(m.evaluate(&u), m.evaluate(&v)));
        prop_assert_eq!(accept.contains(m.evaluate(&uv)), x.accepts(&uv));
        for e in 0..m.len() {
            prop_assert_eq!(m.evaluate(m.witness(e).letters()), e);
        }
    }

    #[test]
    fn element_densities_sum_to_one(x in dfa(4)) {
        let (m, _) = transition_monoid(&x).unwrap();
        let total: BigRational = (0..m.len())
            .map(|e| density(&m.element_automaton(&[e]).unwrap()).unwrap())
            .sum();
        prop_assert_eq!(total, BigRational::one());
    }

    #[test]
    fn idempotent_h_classes_are_groups(x in dfa(4)) {
        let (m, _) = transition_monoid(&x).unwrap();
        let green = GreenClasses::new(&m);
        for t in 0..m.len() {
            let n = idempotent_power(&m, t);
            let e = (1..n).fold(t, |acc, _| m.compose(acc, t));
            prop_assert!(m.is_idempotent(e));
            let h = &green.h_classes[green.h_class_of(e)];
            for &f in h {
                for &g in h {
                    prop_assert_eq!(green.h_class_of(m.compose(f, g)), green.h_class_of(e));
                }
            }
        }
    }

    #[test]
    fn nonprimitive_witnesses_are_sound(x in dfa(5)) {
        match nonprimitive_witness(&x) {
            Ok((w, n)) => {
                prop_assert!(!w.is_empty());
                for j in 1..=4 {
                    let p = w.power(j * n + 1);
                    prop_assert!(x.accepts(p.letters()));
                    prop_assert!(is_power(p.letters()));
                }
            }
            Err(e) => {
                prop_assert_eq!(e, regmeasure::Error::NullLanguage);
                prop_assert!(density(&x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn goldstine_is_coprefix_ending_in_b(w in word(16)) {
        let fixed = goldstine_word_prefix(w.len() + 1);
        let expected = !fixed.starts_with(&w) && w.last() == Some(&1);
        prop_assert_eq!(predicates::goldstine(&w, 0, 1), expected);
    }

    #[test]
    fn two_primitive_factors(w in word(14)) {
        let split = (1..w.len()).any(|i| predicates::primitive(&w[..i]) && predicates::primitive(&w[i..]));
        let unary = w.iter().all(|&x| w.first() == Some(&x));
        prop_assert_eq!(split, !w.is_empty() && (!unary || w.len() == 2));
    }

    #[test]
    fn majority_is_monotone_in_m(w in word(20), m in 1usize..5) {
        let wide = LanguageOracle::majority(m).unwrap();
        let narrow = LanguageOracle::majority(m + 1).unwrap();
        prop_assert!(!narrow.member(&w).unwrap() || wide.member(&w).unwrap());
    }

    #[test]
    fn majority_counts_decrease_in_m(n in 0usize..30, m in 1usize..5) {
        let wide = LanguageOracle::majority(m).unwrap().closed_count(n).unwrap();
        let narrow = LanguageOracle::majority(m + 1).unwrap().closed_count(n).unwrap();
        prop_assert!(narrow <= wide);
    }

    #[test]
    fn suffix_extension_definition(w in prop::collection::vec(0..3u8, 0..14)) {
        let base = LanguageOracle::majority(1).unwrap();
        let ext = LanguageOracle::suffix_extension(base.clone(), 'c').unwrap();
        let c: Letter = 2;
        // L c (A ∪ {c})*: the part before the first c is in L
        let expected = match w.iter().position(|&x| x == c) {
            Some(i) => base.member(&w[..i]).unwrap(),
            None => false,
        };
        prop_assert_eq!(ext.member(&w).unwrap(), expected);
    }
}
