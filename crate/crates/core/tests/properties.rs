use proptest::prelude::*;
use specht::garnir::garnir_element;
use specht::partition::syt_count_bruteforce;
use specht::tableau::ShapeIndex;
use specht::twocol::{g_closed_form, SubsetIndex};
use specht::{Partition, Permutation, Tableau, TabloidVector};

fn shape() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=3, 1..=4)
        .prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
        .prop_filter("at most 8 cells", |p| p.size() <= 8)
}

fn word(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

/// A shape, a filling of it, and two permutations of its entries.
fn filled() -> impl Strategy<Value = (Tableau, Permutation, Permutation)> {
    shape().prop_flat_map(|p| {
        let n = p.size();
        (Just(p), word(n), word(n), word(n)).prop_map(|(p, w, a, b)| {
            (
                Tableau::fill_column_major(&p, &w).unwrap(),
                Permutation::from_one_line(&a).unwrap(),
                Permutation::from_one_line(&b).unwrap(),
            )
        })
    })
}

fn two_column() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), 1..=n))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in shape()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn hook_formula_counts_standard_tableaux(p in shape()) {
        prop_assert_eq!(p.hook_dim(), syt_count_bruteforce(&p).unwrap());
    }

    #[test]
    fn basis_rank_round_trips((t, _, _) in filled()) {
        let st = t.straighten();
        let index = ShapeIndex::new(t.shape());
        let r = st.tableau.rank().unwrap();
        prop_assert!(r < index.dim());
        prop_assert_eq!(index.unrank(r).unwrap(), st.tableau.clone());
        prop_assert_eq!(st.tableau.straighten().sign, 1);
    }

    #[test]
    fn straightening_sign_is_multiplicative((t, sigma, _) in filled()) {
        // sorting after relabelling = sorting the relabelled sorted tableau
        let direct = t.apply_permutation(&sigma).unwrap().straighten();
        let first = t.straighten();
        let second = first.tableau.apply_permutation(&sigma).unwrap().straighten();
        prop_assert_eq!(direct.tableau, second.tableau);
        prop_assert_eq!(direct.sign, first.sign * second.sign);
    }

    #[test]
    fn action_is_a_homomorphism((t, sigma, tau) in filled()) {
        let v = TabloidVector::basis_vector(&t.straighten().tableau);
        let composed = v.act(&sigma.compose(&tau).unwrap()).unwrap();
        let stepwise = v.act(&tau).unwrap().act(&sigma).unwrap();
        prop_assert_eq!(composed, stepwise);
        let back = v.act(&sigma).unwrap().act(&sigma.inverse()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn garnir_elements_are_equivariant((t, sigma, _) in filled(), k in 1usize..=3) {
        let lengths = t.shape().column_lengths();
        for c in 1..lengths.len() {
            if k > lengths[c] {
                continue;
            }
            let g = garnir_element(&t, c, k).unwrap();
            let moved = garnir_element(&t.apply_permutation(&sigma).unwrap(), c, k).unwrap();
            prop_assert_eq!(g.act(&sigma).unwrap(), moved);
        }
    }

    #[test]
    fn subset_rank_round_trips((n, m) in two_column(), r in any::<prop::sample::Index>()) {
        let idx = SubsetIndex::new(n, m).unwrap();
        let rank = r.index(idx.dim());
        let s = idx.unrank(rank).unwrap();
        prop_assert_eq!(idx.rank(&s).unwrap(), rank);
        let t = idx.tableau(&s).unwrap();
        prop_assert_eq!(t.column(0), s.as_slice());
    }

    #[test]
    fn closed_form_matches_garnir((n, m) in two_column(), r in any::<prop::sample::Index>()) {
        let idx = SubsetIndex::new(n, m).unwrap();
        let s = idx.unrank(r.index(idx.dim())).unwrap();
        let g = garnir_element(&idx.tableau(&s).unwrap(), 1, m).unwrap();
        prop_assert_eq!(g_closed_form(&s, n, m).unwrap(), g);
    }
}
