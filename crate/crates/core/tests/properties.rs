mod common;

use proptest::prelude::*;

use radiolb::compose::{compose_wk, predicted_rn};
use radiolb::families::prufer_edges;
use radiolb::labeling::{check_order, find_lb_order, labels_from_order};
use radiolb::oracle::{certify, exact_rn_with, is_radio_labeling, Pruning, SolveOptions};
use radiolb::{BranchRelation, Certificate, LinearOrder, RadioLabeling, Tree};

fn tree(max_n: usize) -> impl Strategy<Value = Tree> {
    sized_tree(1, max_n)
}

fn sized_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Tree> {
    (min_n..=max_n).prop_flat_map(|n| {
        let len = n.saturating_sub(2);
        prop::collection::vec(0..n, len).prop_map(move |code| {
            let edges = if n == 1 {
                Vec::new()
            } else {
                prufer_edges(n, &code)
            };
            Tree::new(n, edges).unwrap()
        })
    })
}

fn tree_and_order(max_n: usize) -> impl Strategy<Value = (Tree, Vec<usize>)> {
    tree(max_n).prop_flat_map(|t| {
        let seq: Vec<usize> = t.vertices().collect();
        (Just(t), Just(seq).prop_shuffle())
    })
}

fn single_center(max_n: usize) -> impl Strategy<Value = Tree> {
    sized_tree(2, max_n).prop_filter("one weight center", |t| t.root_view().epsilon() == 1)
}

proptest! {
    #[test]
    fn distances_form_a_tree_metric(t in tree(14)) {
        for u in t.vertices() {
            prop_assert_eq!(t.dist(u, u), 0);
            for v in t.vertices() {
                prop_assert_eq!(t.dist(u, v), t.dist(v, u));
                prop_assert!(t.dist(u, v) <= t.diam());
                if t.neighbors(u).contains(&v) {
                    prop_assert_eq!(t.dist(u, v), 1);
                }
            }
        }
        let far = t.vertices().flat_map(|u| t.vertices().map(move |v| (u, v)));
        prop_assert_eq!(far.map(|(u, v)| t.dist(u, v)).max().unwrap(), t.diam());
    }

    #[test]
    fn centers_and_levels(t in tree(14)) {
        let view = t.root_view();
        let centers = view.centers();
        prop_assert!(matches!(centers.len(), 1 | 2));
        if let [a, b] = *centers {
            prop_assert_eq!(t.dist(a, b), 1);
        }
        let weights: Vec<u64> = t.vertices().map(|v| t.vertex_weight(v).unwrap()).collect();
        let min = *weights.iter().min().unwrap();
        for v in t.vertices() {
            prop_assert_eq!(view.is_center(v), weights[v] == min);
            let nearest = centers.iter().map(|&c| t.dist(v, c)).min().unwrap();
            prop_assert_eq!(view.level(v), nearest);
        }
        let total: u64 = t.vertices().map(|v| u64::from(view.level(v))).sum();
        prop_assert_eq!(view.total_level(), total);
        prop_assert_eq!(view.weight_min(), min);
    }

    #[test]
    fn distance_through_the_centers(t in tree(14)) {
        let view = t.root_view();
        let slack = 1 - view.epsilon();
        for u in t.vertices() {
            for v in t.vertices() {
                if u == v {
                    continue;
                }
                let through = view.level(u) + view.level(v);
                let d = t.dist(u, v);
                prop_assert!(d <= through + slack);
                match view.branch_relation(u, v).unwrap() {
                    BranchRelation::Same => prop_assert!(d < through + slack),
                    BranchRelation::Different | BranchRelation::InvolvesCenter => {
                        prop_assert_eq!(d, through + slack * u32::from(view.home_center(u) != view.home_center(v)));
                    }
                    BranchRelation::Opposite => prop_assert_eq!(d, through + 1),
                }
            }
        }
    }

    #[test]
    fn fast_check_matches_double_sum((t, seq) in tree_and_order(10)) {
        let order = LinearOrder::new(seq.clone()).unwrap();
        let report = check_order(&t, &t.root_view(), &order).unwrap();
        prop_assert_eq!(report.violation.map(|v| (v.i, v.j)), common::naive_first_violation(&t, &seq));
        prop_assert_eq!(report.endpoints_ok, common::naive_endpoints_ok(&t, &seq));
    }

    #[test]
    fn found_orders_certify(t in tree(9)) {
        let view = t.root_view();
        if let Some(order) = find_lb_order(&t, &view, false, 200_000).unwrap() {
            prop_assert!(check_order(&t, &view, &order).unwrap().passes());
            let labeling = labels_from_order(&t, &view, &order).unwrap();
            prop_assert!(labeling.certified_optimal());
            let seq = order.as_slice();
            for w in seq.windows(2) {
                prop_assert!(labeling.label(w[0]) < labeling.label(w[1]));
            }
            prop_assert_eq!(certify(&t, &labeling).unwrap(), Certificate::ProvesRn);
        }
    }

    #[test]
    fn solver_matches_unpruned_search(t in tree(7)) {
        let reference = common::reference_rn(&t);
        for pruning in [Pruning::Basic, Pruning::Level] {
            for workers in [1, 3] {
                let options = SolveOptions { pruning, workers, stop_at_lower_bound: false, ..SolveOptions::default() };
                let result = exact_rn_with(&t, &options);
                prop_assert_eq!(result.rn, reference);
                prop_assert!(is_radio_labeling(&t, &result.witness).unwrap());
                prop_assert_eq!(result.witness.span(), reference);
            }
        }
        if t.n() >= 2 {
            prop_assert!(reference as i64 >= t.lower_bound().unwrap());
        }
    }

    #[test]
    fn wk_bound_is_additive(parts in prop::collection::vec(single_center(9), 2..=4)) {
        let (composite, spec) = compose_wk(&parts).unwrap();
        prop_assert_eq!(composite.n(), 1 + parts.iter().map(|p| p.n() - 1).sum::<usize>());
        let view = composite.root_view();
        prop_assert_eq!(view.centers(), &[0][..]);
        let total: u64 = parts.iter().map(|p| p.root_view().total_level()).sum();
        prop_assert_eq!(view.total_level(), total);
        let bounds: Vec<i64> = parts.iter().map(|p| p.root_view().bound_expression(p)).collect();
        prop_assert_eq!(predicted_rn(&spec, &composite, &bounds).unwrap(), composite.lower_bound().unwrap());
    }

    #[test]
    fn json_round_trips(t in tree(12)) {
        let back: Tree = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(&back, &t);
        let order = LinearOrder::new(t.vertices().rev().collect()).unwrap();
        let back: LinearOrder = serde_json::from_str(&serde_json::to_string(&order).unwrap()).unwrap();
        prop_assert_eq!(back, order);
        let labeling = RadioLabeling::new(t.vertices().map(|v| 3 * v as u64).collect()).unwrap();
        let back: RadioLabeling = serde_json::from_str(&serde_json::to_string(&labeling).unwrap()).unwrap();
        prop_assert_eq!(back, labeling);
    }
}
