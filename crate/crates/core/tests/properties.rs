use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repvol::fingroup::{catalog_group, ConjugacyData, FiniteGroup};
use repvol::homcount::DEFAULT_BUDGET;
use repvol::mobius::{classify_surface, evaluate_graph_direct, random_graph};
use repvol::words::{apply_ac_move, evaluate_word, inverse_moves_from, substitute, AcMove, Letter, Presentation, Word};

const GROUPS: [&str; 4] = ["S3", "D4", "Q8", "Z5"];

fn group(i: usize) -> FiniteGroup {
    catalog_group(GROUPS[i % GROUPS.len()], 1 << 16).unwrap()
}

fn word(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..k, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::reduce(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
}

fn nonempty_word(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    word(k, max_len).prop_filter("nonempty", |w| !w.is_empty())
}

fn presentation() -> impl Strategy<Value = Presentation> {
    prop::collection::vec(nonempty_word(2, 6), 2..=3).prop_map(|rs| Presentation::with_default_names(2, rs).unwrap())
}

fn ac_move() -> impl Strategy<Value = AcMove> {
    prop_oneof![
        Just(AcMove::Swap(1)),
        word(2, 4).prop_map(AcMove::Conjugate),
        Just(AcMove::Invert),
        Just(AcMove::Multiply),
        Just(AcMove::AddGenerator(None)),
    ]
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in word(3, 12)) {
        let again = Word::reduce(w.letters().iter().copied());
        prop_assert_eq!(&again, &w);
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0].inverse(), pair[1]);
        }
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        gi in 0usize..4,
        a in word(2, 8),
        b in word(2, 8),
        x in 0usize..64,
        y in 0usize..64,
    ) {
        let g = group(gi);
        let assignment = [x % g.order(), y % g.order()];
        let ab = evaluate_word(&g, &a.concat(&b), &assignment);
        prop_assert_eq!(ab, g.mul(evaluate_word(&g, &a, &assignment), evaluate_word(&g, &b, &assignment)));
        prop_assert_eq!(evaluate_word(&g, &a.inverse(), &assignment), g.inv(evaluate_word(&g, &a, &assignment)));
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        gi in 0usize..4,
        w in word(2, 8),
        images in prop::collection::vec(word(3, 5), 2),
        xs in prop::collection::vec(0usize..64, 3),
    ) {
        let g = group(gi);
        let assignment: Vec<usize> = xs.iter().map(|x| x % g.order()).collect();
        let direct = evaluate_word(&g, &substitute(&w, &images), &assignment);
        let pushed: Vec<usize> = images.iter().map(|v| evaluate_word(&g, v, &assignment)).collect();
        prop_assert_eq!(direct, evaluate_word(&g, &w, &pushed));
    }

    #[test]
    fn inverse_moves_restore(p in presentation(), m in ac_move()) {
        // q1 q2 may reduce to the empty word, which move 4 refuses
        let after = apply_ac_move(&p, &m);
        prop_assume!(after.is_ok());
        let mut back = after.unwrap();
        for inv in inverse_moves_from(&p, &m).unwrap() {
            back = apply_ac_move(&back, &inv).unwrap();
        }
        prop_assert_eq!(back.relators(), p.relators());
        prop_assert_eq!(back.num_generators(), p.num_generators());
    }

    #[test]
    fn fibers_are_class_constant(gi in 0usize..4, w in word(2, 8)) {
        let g = group(gi);
        let classes = ConjugacyData::compute(&g);
        let n = g.order();
        let mut fiber = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                fiber[evaluate_word(&g, &w, &[x, y])] += 1;
            }
        }
        for x in 0..n {
            let rep = classes.representative(classes.class_of(x));
            prop_assert_eq!(fiber[x], fiber[rep]);
        }
    }

    #[test]
    fn graph_moves_preserve_surface(seed in any::<u64>(), v in 1usize..4, extra in 0usize..3, flip in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = (v - 1 + extra).max(1);
        let graph = random_graph(&mut rng, v, e);
        let before = classify_surface(&graph);
        let flipped = graph.vertex_flip(flip % v).unwrap();
        prop_assert_eq!(classify_surface(&flipped), before);
        for edge in graph.contractible_edges() {
            let contracted = graph.contract_edge(edge).unwrap();
            prop_assert_eq!(classify_surface(&contracted).kind, before.kind);
        }
        let g = group(0);
        let count = evaluate_graph_direct(&g, &graph, DEFAULT_BUDGET).unwrap().count;
        prop_assert_eq!(evaluate_graph_direct(&g, &flipped, DEFAULT_BUDGET).unwrap().count, count);
    }
}
