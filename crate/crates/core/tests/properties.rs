use arithmetree::cli::format::{format_value, Style};
use arithmetree::cli::parse::parse_expression;
use arithmetree::factor::{divide, shape_factor_tree};
use arithmetree::{
    add, catalan, evaluate_word, left_sum, multiply, right_sum, universal_expression, Grove,
    Limits, Side, SumTerm, Tree, TreeRank, Word,
};
use proptest::prelude::*;

fn tree_of_degree(n: u32) -> impl Strategy<Value = Tree> {
    (0..catalan::<u64>(n))
        .prop_map(move |index| Tree::unrank(TreeRank { degree: n, index }).unwrap())
}

fn tree(max: u32) -> impl Strategy<Value = Tree> {
    (0..=max).prop_flat_map(tree_of_degree)
}

fn nonzero_tree(max: u32) -> impl Strategy<Value = Tree> {
    (1..=max).prop_flat_map(tree_of_degree)
}

fn grove_of_degree(n: u32) -> impl Strategy<Value = Grove> {
    let len = catalan::<u64>(n) as usize;
    proptest::collection::vec(any::<bool>(), len)
        .prop_filter("nonempty", |bits| bits.iter().any(|&b| b))
        .prop_map(move |bits| {
            let members = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| {
                Tree::unrank(TreeRank {
                    degree: n,
                    index: i as u64,
                })
                .unwrap()
            });
            Grove::new(members).unwrap()
        })
}

fn grove(min: u32, max: u32) -> impl Strategy<Value = Grove> {
    (min..=max).prop_flat_map(grove_of_degree)
}

fn g(t: &Tree) -> Grove {
    Grove::from_tree(t.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_unrank_round_trip(t in tree(9)) {
        prop_assert_eq!(Tree::unrank(t.rank()).unwrap(), t);
    }

    #[test]
    fn addition_is_associative(a in grove(0, 3), b in grove(0, 3), c in grove(0, 3)) {
        let left = add(&add(&a, &b).unwrap(), &c).unwrap();
        let right = add(&a, &add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn degree_is_a_homomorphism(a in grove(0, 3), b in grove(0, 3)) {
        prop_assert_eq!(add(&a, &b).unwrap().degree(), a.degree() + b.degree());
        prop_assert_eq!(multiply(&a, &b).unwrap().degree(), a.degree() * b.degree());
    }

    #[test]
    fn reflection_reverses_sums(a in grove(0, 3), b in grove(0, 3)) {
        prop_assert_eq!(add(&a, &b).unwrap().reflect(), add(&b.reflect(), &a.reflect()).unwrap());
        prop_assert_eq!(
            multiply(&a, &b).unwrap().reflect(),
            multiply(&a.reflect(), &b.reflect()).unwrap()
        );
    }

    #[test]
    fn multiplication_distributes_over_unions_on_the_left(
        (a, a2) in (1u32..=3).prop_flat_map(|n| (grove_of_degree(n), grove_of_degree(n))),
        b in grove(1, 2),
    ) {
        let lhs = multiply(&a.union(&a2).unwrap(), &b).unwrap();
        let rhs = multiply(&a, &b).unwrap().union(&multiply(&a2, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_is_neutral(a in grove(0, 4)) {
        prop_assert_eq!(multiply(&a, &Grove::unit()).unwrap(), a.clone());
        prop_assert_eq!(multiply(&Grove::unit(), &a).unwrap(), a.clone());
        prop_assert_eq!(add(&a, &Grove::zero()).unwrap(), a.clone());
        prop_assert_eq!(add(&Grove::zero(), &a).unwrap(), a);
    }

    #[test]
    fn word_relations_hold_semantically(x in grove(1, 2), y in grove(1, 2), z in grove(1, 2)) {
        let (x, y, z) = (SumTerm::from(x), SumTerm::from(y), SumTerm::from(z));
        let plus = |a: &SumTerm, b: &SumTerm| left_sum(a, b).union(right_sum(a, b)).unwrap();
        prop_assert_eq!(left_sum(&left_sum(&x, &y), &z), left_sum(&x, &plus(&y, &z)));
        prop_assert_eq!(left_sum(&right_sum(&x, &y), &z), right_sum(&x, &left_sum(&y, &z)));
        prop_assert_eq!(right_sum(&plus(&x, &y), &z), right_sum(&x, &right_sum(&y, &z)));
    }

    #[test]
    fn normal_form_does_not_change_the_value(t in nonzero_tree(5), y in grove(1, 2)) {
        let w = universal_expression(&t).unwrap();
        let raw = match t.parts() {
            Some((l, r)) if !l.is_leaf() && !r.is_leaf() => Word::left(
                Word::right(universal_expression(l).unwrap(), Word::Letter),
                universal_expression(r).unwrap(),
            ),
            _ => w.clone(),
        };
        prop_assert_eq!(evaluate_word(&raw, &y).unwrap(), evaluate_word(&w, &y).unwrap());
    }

    #[test]
    fn right_sum_keeps_left_inheritance(x in nonzero_tree(4), y in nonzero_tree(4)) {
        let (sx, sy) = (SumTerm::from(g(&x)), SumTerm::from(g(&y)));
        if y.is_left_inherited() {
            prop_assert!(right_sum(&sx, &sy).as_grove().unwrap().is_left_inherited());
        }
        if x.is_right_inherited() {
            prop_assert!(left_sum(&sx, &sy).as_grove().unwrap().is_right_inherited());
        }
    }

    #[test]
    fn sums_are_tamari_intervals(x in tree(4), y in tree(4)) {
        let sum = add(&g(&x), &g(&y)).unwrap();
        let lo = arithmetree::tree::over(&x, &y);
        let hi = arithmetree::tree::under(&x, &y);
        let interval = arithmetree::tree::tamari_interval(&lo, &hi).unwrap();
        prop_assert_eq!(sum.members().to_vec(), interval.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn shape_factorizations_recompute(t in nonzero_tree(10)) {
        if let Some(f) = shape_factor_tree(&t) {
            prop_assert_eq!(multiply(&g(&f.left_factor), &g(&f.right_factor)).unwrap(), g(&t));
            prop_assert_eq!(f.k * f.d, t.degree());
            prop_assert!(f.k >= 2 && f.d >= 2);
        }
    }

    #[test]
    fn division_is_sound(x in grove(2, 2), y in grove(1, 3)) {
        let product = multiply(&x, &y).unwrap();
        let limits = Limits::default();
        let right = divide(&x, &product, Side::Right, &limits).unwrap();
        prop_assert!(right.solutions.contains(&y));
        for s in &right.solutions {
            prop_assert_eq!(&multiply(&x, s).unwrap(), &product);
        }
        if y.degree() >= 2 {
            let left = divide(&y, &product, Side::Left, &limits).unwrap();
            prop_assert!(left.solutions.contains(&x));
        }
    }

    #[test]
    fn formatting_round_trips(a in grove(0, 5)) {
        for style in [Style::Canonical, Style::Shorthand] {
            let text = format_value(&a, style);
            let back = parse_expression(&text).unwrap().evaluate(&Limits::default()).unwrap();
            prop_assert_eq!(&back, &a);
        }
    }
}
