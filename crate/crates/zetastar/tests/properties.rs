//! Property tests for the exact algebra layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use zetastar::maps::{dmap, dmap_via_key_identity, gamma};
use zetastar::poly::WeightClass;
use zetastar::products::{harmonic, reg_shuffle, shuffle, tilde};
use zetastar::words::{composition_from_word, word_from_composition, Composition, Letter, Word};
use zetastar::NcPoly;

fn arb_letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::X), Just(Letter::Y)]
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(arb_letter(), 0..=max_len).prop_map(Word::from_letters)
}

/// Nonempty H1 words: anything ending in y.
fn arb_h1_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(arb_letter(), 0..max_len).prop_map(|mut letters| {
        letters.push(Letter::Y);
        Word::from_letters(letters)
    })
}

fn arb_composition(max_parts: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=4, 0..=max_parts)
        .prop_map(|parts| Composition::new(parts).expect("parts >= 1"))
}

fn arb_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((arb_word(max_len), -4i64..=4), 0..=max_terms).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

fn arb_h1_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((arb_h1_word(max_len), -4i64..=4), 1..=max_terms).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_word_round_trip(k in arb_composition(6)) {
        let w = word_from_composition(&k);
        prop_assert!(w.in_h1());
        prop_assert_eq!(composition_from_word(&w).unwrap(), k);
    }

    #[test]
    fn poly_display_parse_round_trip(p in arb_poly(5, 5)) {
        let printed = p.to_string();
        let reparsed: NcPoly = printed.parse().unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn gamma_is_multiplicative(u in arb_word(5), v in arb_word(5)) {
        let lhs = gamma(&NcPoly::from_word(u.concat(&v)));
        let rhs = gamma(&NcPoly::from_word(u)).concat(&gamma(&NcPoly::from_word(v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dmap_routes_agree_and_preserve_weight(w in arb_h1_word(7)) {
        let p = NcPoly::from_word(w.clone());
        let via_gamma = dmap(&p).unwrap();
        let via_key = dmap_via_key_identity(&p).unwrap();
        prop_assert_eq!(&via_gamma, &via_key);
        prop_assert!(via_gamma.in_h1());
        prop_assert_eq!(
            via_gamma.weight().unwrap(),
            WeightClass::Homogeneous(w.weight())
        );
    }
}

proptest! {
    // Product laws multiply three polynomials; keep the sizes small.
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shuffle_is_commutative_and_associative(
        a in arb_word(5),
        b in arb_word(4),
        c in arb_word(3),
    ) {
        let (pa, pb, pc) =
            (NcPoly::from_word(a), NcPoly::from_word(b), NcPoly::from_word(c));
        prop_assert_eq!(shuffle(&pa, &pb), shuffle(&pb, &pa));
        prop_assert_eq!(
            shuffle(&shuffle(&pa, &pb), &pc),
            shuffle(&pa, &shuffle(&pb, &pc))
        );
    }

    #[test]
    fn block_products_are_commutative_and_associative(
        a in arb_composition(3),
        b in arb_composition(3),
        c in arb_composition(2),
    ) {
        let pa = NcPoly::from_word(word_from_composition(&a));
        let pb = NcPoly::from_word(word_from_composition(&b));
        let pc = NcPoly::from_word(word_from_composition(&c));
        for f in [harmonic, tilde] {
            prop_assert_eq!(f(&pa, &pb).unwrap(), f(&pb, &pa).unwrap());
            prop_assert_eq!(
                f(&f(&pa, &pb).unwrap(), &pc).unwrap(),
                f(&pa, &f(&pb, &pc).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn products_respect_subalgebras(u in arb_h1_word(5), v in arb_h1_word(5)) {
        let pu = NcPoly::from_word(u.clone());
        let pv = NcPoly::from_word(v.clone());
        prop_assert!(harmonic(&pu, &pv).unwrap().in_h1());
        prop_assert!(tilde(&pu, &pv).unwrap().in_h1());
        prop_assert!(shuffle(&pu, &pv).in_h1());
        if u.in_h0() && v.in_h0() {
            prop_assert!(harmonic(&pu, &pv).unwrap().in_h0());
            prop_assert!(shuffle(&pu, &pv).in_h0());
        }
    }

    #[test]
    fn reg_is_an_idempotent_shuffle_homomorphism(
        u in arb_h1_poly(3, 5),
        v in arb_h1_poly(3, 5),
    ) {
        let ru = reg_shuffle(&u).unwrap();
        let rv = reg_shuffle(&v).unwrap();
        prop_assert!(ru.in_h0());
        prop_assert_eq!(reg_shuffle(&ru).unwrap(), ru.clone());
        prop_assert_eq!(reg_shuffle(&shuffle(&u, &v)).unwrap(), shuffle(&ru, &rv));
    }

    #[test]
    fn unit_laws(w in arb_h1_word(6)) {
        let p = NcPoly::from_word(w);
        let one = NcPoly::one();
        prop_assert_eq!(harmonic(&one, &p).unwrap(), p.clone());
        prop_assert_eq!(harmonic(&p, &one).unwrap(), p.clone());
        prop_assert_eq!(tilde(&one, &p).unwrap(), p.clone());
        prop_assert_eq!(shuffle(&p, &one), p.clone());
    }
}
