use cyclic_flats::enumeration::{
    canonical_word, glue_pieces, is_thick, thick_decompose, word_to_diagram, Letter, Word,
};
use cyclic_flats::lpm::mixed_pairs;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec![Letter::C, Letter::R, Letter::S, Letter::T]), 0..max)
        .prop_map(Word)
}

proptest! {
    #[test]
    fn rc_and_cr_build_the_same_diagram(w in word(12), at in 0usize..12) {
        let mut l = w.0.clone();
        if l.len() >= 2 {
            let i = at % (l.len() - 1);
            l[i] = Letter::R;
            l[i + 1] = Letter::C;
            let mut swapped = l.clone();
            swapped.swap(i, i + 1);
            prop_assert_eq!(word_to_diagram(&Word(l)), word_to_diagram(&Word(swapped)));
        }
    }

    #[test]
    fn size_and_rank_from_letters(w in word(14)) {
        let d = word_to_diagram(&w);
        let count = |x| w.0.iter().filter(|&&l| l == x).count();
        prop_assert_eq!(d.size(), w.len() + 1);
        prop_assert_eq!(d.rank(), 1 + count(Letter::R) + count(Letter::T));
        prop_assert!(mixed_pairs(&d).unwrap().is_empty());
    }

    #[test]
    fn canonical_words_rebuild_their_diagram(w in word(14)) {
        let d = word_to_diagram(&w);
        let c = canonical_word(&d).unwrap();
        prop_assert_eq!(word_to_diagram(&c), d);
        prop_assert!(!c.0.windows(2).any(|p| p == [Letter::R, Letter::C]));
    }

    #[test]
    fn decomposition_glues_back(w in word(11)) {
        let d = word_to_diagram(&w);
        let pieces = thick_decompose(&d).unwrap();
        prop_assert_eq!(glue_pieces(&pieces).unwrap(), d.clone());
        prop_assert!(pieces[0].glue.is_none());
        for p in &pieces {
            let size = p.diagram.size();
            prop_assert!(size <= 2 || is_thick(&p.diagram).unwrap(), "{}", p.diagram);
        }
    }
}
