//! Property and oracle tests: independent counting oracles, invariants
//! of the constructions, and the majorization toolbox.

use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treebound::degseq::{
    enumerate_tree_sequences, family_ab, family_starlike, validate_tree_sequence, DegreeSequence,
};
use treebound::experiments::random_unit_positive;
use treebound::metrics::{
    distance_matrix, terminal_distance_matrix, terminal_wiener, tvwwi, vwwi, vwwi_directed,
    weak_majorizes, weak_majorizes_tol, wiener, Majorization,
};
use treebound::spectral::{dsr, spectral_radius, tdsr, tdsr_ab_closed};
use treebound::tree::{
    build_bfs_tree, build_huffman, canonical_form, enumerate_trees, labeled_tree_count, root_at,
    EnumerationMode, GeneratingTuple, Tree, WeightedTree,
};

const TOL: f64 = 1e-10;
const MAX_ITER: usize = 100_000;
const BUDGET: u128 = 1_000_000;

/// Partition numbers by the Euler pentagonal recurrence; independent of
/// the enumeration code.
fn partition_numbers(up_to: usize) -> Vec<i64> {
    let mut p = vec![0i64; up_to + 1];
    p[0] = 1;
    for n in 1..=up_to {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            acc += sign * p[n - g1 as usize];
            if g2 as usize <= n {
                acc += sign * p[n - g2 as usize];
            }
            k += 1;
        }
        p[n] = acc;
    }
    p
}

#[test]
fn enumeration_count_matches_partition_oracle() {
    let p = partition_numbers(28);
    for n in 2..=30 {
        let seqs = enumerate_tree_sequences(n).unwrap();
        assert_eq!(seqs.len() as i64, p[n - 2], "order {n}");
    }
    // Spot values of the oracle itself.
    assert_eq!(p[3], 3);
    assert_eq!(p[20], 627);
}

#[test]
fn enumerated_sequences_validate_and_are_sorted() {
    for n in 2..=12 {
        let seqs = enumerate_tree_sequences(n).unwrap();
        for s in &seqs {
            validate_tree_sequence(s.degrees().to_vec()).unwrap();
        }
        for w in seqs.windows(2) {
            assert!(w[0].degrees() < w[1].degrees(), "lexicographic order");
        }
    }
}

#[test]
fn cross_family_coincidence() {
    // family_starlike(d,k) equals family_ab(a,b) exactly when the
    // multisets coincide, i.e. d = a+b and k = a.
    for d in 3..8 {
        for k in 0..6 {
            let star = family_starlike(d, k);
            for a in 1..8 {
                for b in 1..8 {
                    let ab = family_ab(a, b);
                    let multisets_equal = ab.degrees() == star.degrees();
                    assert_eq!(ab == star, multisets_equal);
                    if multisets_equal {
                        assert_eq!((a + b, a), (d, k));
                    }
                }
            }
        }
    }
}

#[test]
fn bfs_is_huffman_for_unit_and_leaf_unit_weights() {
    // Greedy tree is isomorphic to the Huffman tree both for unit weights
    // everywhere and for unit pendent / zero internal weights.
    for n in 3..=12 {
        for seq in enumerate_tree_sequences(n).unwrap() {
            let bfs_code = canonical_form(&build_bfs_tree(&seq));

            let unit = GeneratingTuple::new(seq.clone(), vec![1.0; n]).unwrap();
            let h1 = build_huffman(&unit).unwrap();
            assert_eq!(canonical_form(&h1.tree.tree), bfs_code, "unit weights, seq {seq}");

            let leaf_unit =
                GeneratingTuple::with_leaf_weights(seq.clone(), &vec![1.0; seq.leaf_count()])
                    .unwrap();
            let h2 = build_huffman(&leaf_unit).unwrap();
            assert_eq!(canonical_form(&h2.tree.tree), bfs_code, "leaf weights, seq {seq}");
        }
    }
}

#[test]
fn labeled_count_matches_multinomial() {
    for n in 2..=9 {
        for seq in enumerate_tree_sequences(n).unwrap() {
            let trees = enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap();
            assert_eq!(trees.len() as u128, labeled_tree_count(&seq), "seq {seq}");
            for t in &trees {
                assert_eq!(t.degree_sequence(), seq);
            }
        }
    }
}

fn random_degree_monotone_tuple(seq: &DegreeSequence, rng: &mut ChaCha8Rng) -> GeneratingTuple {
    let degs = seq.degrees();
    let n_leaves = seq.leaf_count();
    let mut weights = vec![0.0; seq.order()];
    for w in weights.iter_mut().take(n_leaves) {
        *w = rng.gen_range(0.1..1.0);
    }
    // Ascending degrees make sorted internal weights degree-monotone.
    let mut internal: Vec<f64> = (n_leaves..degs.len()).map(|_| rng.gen_range(0.0..1.0)).collect();
    internal.sort_by(|a, b| a.partial_cmp(b).unwrap());
    weights[n_leaves..].copy_from_slice(&internal);
    let tuple = GeneratingTuple::new(seq.clone(), weights).unwrap();
    assert!(tuple.is_degree_monotone());
    tuple
}

#[test]
fn huffman_subordinate_weight_monotonicity() {
    // In the directed Huffman tree, children with smaller subtree weight
    // hang below parents with smaller subtree weight.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 4..=10 {
        for seq in enumerate_tree_sequences(n).unwrap() {
            for _ in 0..10 {
                let tuple = random_degree_monotone_tuple(&seq, &mut rng);
                let h = build_huffman(&tuple).unwrap();
                let rt = h.rooted();
                let f = rt.subtree_weights();
                let verts: Vec<usize> = (0..n).filter(|&v| v != rt.root()).collect();
                for &v in &verts {
                    for &v2 in &verts {
                        let m = rt.parent(v).unwrap();
                        let m2 = rt.parent(v2).unwrap();
                        if m != m2 && f[v] < f[v2] - 1e-12 {
                            assert!(
                                f[m] < f[m2] + 1e-9,
                                "seq {seq}: f({v})={} < f({v2})={} but f({m})={} >= f({m2})={}",
                                f[v], f[v2], f[m], f[m2]
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn subordinate_weights_sum_to_total() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 3..=12 {
        for seq in enumerate_tree_sequences(n).unwrap().into_iter().take(3) {
            let t = build_bfs_tree(&seq);
            let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
            let wt = WeightedTree::new(t, weights).unwrap();
            let total = wt.total_weight();
            let rt = root_at(wt, 0).unwrap();
            let f = rt.subtree_weights();
            let children_sum: f64 = (0..n)
                .filter(|&v| rt.parent(v) == Some(0))
                .map(|v| f[v])
                .sum();
            let root_weight = rt.tree.weight(0);
            assert!((children_sum + root_weight - total).abs() < 1e-9);
        }
    }
}

#[test]
fn eq1_and_rayleigh_lower_bounds_for_all_trees() {
    for n in 4..=8 {
        for seq in enumerate_tree_sequences(n).unwrap() {
            for t in enumerate_trees(&seq, EnumerationMode::Unlabeled, BUDGET).unwrap() {
                let d = dsr(&t, TOL, MAX_ITER).unwrap().radius;
                let avg_row = 2.0 * wiener(&t) as f64 / n as f64;
                assert!(d >= avg_row - 1e-9, "seq {seq}");
                let dm = distance_matrix(&t);
                let regular = (0..n).all(|u| dm.row_sum(u) == dm.row_sum(0));
                if regular {
                    assert!((d - avg_row).abs() < 1e-8);
                } else {
                    assert!(d > avg_row + 1e-9);
                }

                let leaves = seq.leaf_count();
                let r = tdsr(&t, TOL, MAX_ITER).unwrap().radius;
                assert!(r >= 2.0 * terminal_wiener(&t) as f64 / leaves as f64 - 1e-9);
            }
        }
    }
}

#[test]
fn perron_vector_has_two_levels_on_ab_family() {
    for a in 1..=8 {
        for b in 1..=8 {
            let t = build_bfs_tree(&family_ab(a, b));
            let rd = terminal_distance_matrix(&t);
            let r = spectral_radius(rd.leaf_count(), &rd.to_dense(), 1e-12, MAX_ITER).unwrap();
            assert!((r.radius - tdsr_ab_closed(a, b)).abs() < 1e-8);
            let depth = t.bfs_distances(0);
            let mut shallow = Vec::new();
            let mut deep = Vec::new();
            for (i, &v) in rd.leaf_ids().iter().enumerate() {
                if depth[v] == 1 {
                    shallow.push(r.perron[i]);
                } else {
                    deep.push(r.perron[i]);
                }
            }
            for x in &shallow {
                assert!((x - shallow[0]).abs() < 1e-8);
            }
            for x in &deep {
                assert!((x - deep[0]).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn majorization_transfer_lemma_randomized() {
    // Transfers of b from l entries to k <= l dominating entries produce
    // strict weak majorization.
    // Dyadic rationals keep the arithmetic exact, so the strictness of
    // the (tolerance-free) comparison is meaningful.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let dyadic = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| {
        rng.gen_range((lo * 64.0) as i64..=(hi * 64.0) as i64) as f64 / 64.0
    };
    for _ in 0..500 {
        let l = rng.gen_range(1..6usize);
        let k = rng.gen_range(0..=l);
        let b = dyadic(&mut rng, 1.0 / 64.0, 2.0);
        let ys: Vec<f64> = (0..l).map(|_| dyadic(&mut rng, b, 5.0)).collect();
        let xs: Vec<f64> = (0..k).map(|i| ys[i] + dyadic(&mut rng, 0.0, 3.0)).collect();
        let mut original: Vec<f64> = xs.clone();
        original.extend(&ys);
        let mut transferred: Vec<f64> = xs.iter().map(|x| x + b).collect();
        transferred.extend(ys.iter().map(|y| y - b));
        assert_eq!(
            weak_majorizes(&transferred, &original).unwrap(),
            Majorization::Strict
        );
    }
}

#[test]
fn majorization_concatenation_preserved() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut tested = 0;
    while tested < 200 {
        let p = rng.gen_range(1..5usize);
        let x: Vec<f64> = (0..p).map(|_| rng.gen_range(0.0..3.0)).collect();
        let y: Vec<f64> = (0..p).map(|_| rng.gen_range(0.0..3.0)).collect();
        if !weak_majorizes(&x, &y).unwrap().holds() {
            continue;
        }
        let q = rng.gen_range(1..5usize);
        let x2: Vec<f64> = (0..q).map(|_| rng.gen_range(0.0..3.0)).collect();
        let y2: Vec<f64> = (0..q).map(|_| rng.gen_range(0.0..3.0)).collect();
        if !weak_majorizes(&x2, &y2).unwrap().holds() {
            continue;
        }
        let cat_x: Vec<f64> = x.iter().chain(&x2).copied().collect();
        let cat_y: Vec<f64> = y.iter().chain(&y2).copied().collect();
        assert!(weak_majorizes(&cat_x, &cat_y).unwrap().holds());
        tested += 1;
    }
}

#[test]
fn majorization_concave_sum_ordering() {
    // chi(x) = x (s - x) is increasing and concave on [0, s/2]; a vector
    // whose ascending prefix sums are dominated has the smaller chi-sum.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let s = 10.0;
    let chi = |x: f64| x * (s - x);
    let mut tested = 0;
    while tested < 300 {
        let p = rng.gen_range(1..6usize);
        let x: Vec<f64> = (0..p).map(|_| rng.gen_range(0.0..s / 2.0)).collect();
        let y: Vec<f64> = (0..p).map(|_| rng.gen_range(0.0..s / 2.0)).collect();
        if !weak_majorizes(&x, &y).unwrap().holds() {
            continue;
        }
        let sx: f64 = x.iter().map(|&v| chi(v)).sum();
        let sy: f64 = y.iter().map(|&v| chi(v)).sum();
        assert!(sx <= sy + 1e-9, "{x:?} {y:?}: {sx} vs {sy}");
        tested += 1;
    }
}

#[test]
fn huffman_majorizes_all_directed_trees_small() {
    // Quick instance here; the full N <= 9 sweep runs in the acceptance
    // suite.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for seq in enumerate_tree_sequences(7).unwrap() {
        for _ in 0..5 {
            let tuple = random_degree_monotone_tuple(&seq, &mut rng);
            let h = build_huffman(&tuple).unwrap();
            let f_h = h.rooted().subordinate_vector();
            for t in enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap() {
                let wt = WeightedTree::new(t, tuple.weights.clone()).unwrap();
                for r in wt.tree.internal_vertices() {
                    let f_t = root_at(wt.clone(), r).unwrap().subordinate_vector();
                    assert!(
                        weak_majorizes_tol(&f_h, &f_t, 1e-9).unwrap(),
                        "seq {seq}, root {r}: {f_h:?} vs {f_t:?}"
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn unit_weight_indices_reduce_to_integer_ones(code in prop::collection::vec(0usize..7, 5)) {
        let n = 7;
        let seq = pruefer_degree_sequence(n, &code);
        let trees = enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap();
        let t = &trees[0];
        let unit = WeightedTree::unit(t.clone());
        prop_assert_eq!(vwwi(&unit).round() as u64, wiener(t));
        let leaf_unit =
            WeightedTree::with_leaf_weights(t.clone(), &vec![1.0; seq.leaf_count()]).unwrap();
        prop_assert_eq!(tvwwi(&leaf_unit).round() as u64, terminal_wiener(t));
    }

    #[test]
    fn directed_index_is_root_independent(
        code in prop::collection::vec(0usize..9, 7),
        seed in 0u64..1000,
    ) {
        let n = 9;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq = pruefer_degree_sequence(n, &code);
        let trees = enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap();
        let t = trees.into_iter().next().unwrap();
        let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
        let wt = WeightedTree::new(t, weights).unwrap();
        let reference = vwwi(&wt);
        for r in wt.tree.internal_vertices() {
            let val = vwwi_directed(&root_at(wt.clone(), r).unwrap());
            prop_assert!((val - reference).abs() <= 1e-9 * reference.abs().max(1.0));
        }
    }

    #[test]
    fn spectral_radius_is_permutation_invariant(
        code in prop::collection::vec(0usize..8, 6),
        shift in 0usize..8,
    ) {
        let n = 8;
        let seq = pruefer_degree_sequence(n, &code);
        let trees = enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap();
        let t = &trees[0];
        let d = distance_matrix(t);
        let base = spectral_radius(n, &d.to_dense(), TOL, MAX_ITER).unwrap().radius;
        // Cyclic relabeling of the matrix.
        let mut permuted = vec![0.0; n * n];
        for u in 0..n {
            for v in 0..n {
                permuted[((u + shift) % n) * n + (v + shift) % n] = d.get(u, v) as f64;
            }
        }
        let rotated = spectral_radius(n, &permuted, TOL, MAX_ITER).unwrap().radius;
        prop_assert!((base - rotated).abs() <= 1e-10 * base.max(1.0));
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        code in prop::collection::vec(0usize..8, 6),
        shift in 1usize..8,
    ) {
        let n = 8;
        let seq = pruefer_degree_sequence(n, &code);
        let trees = enumerate_trees(&seq, EnumerationMode::Labeled, BUDGET).unwrap();
        let t = &trees[0];
        let relabeled: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .map(|&(u, v)| ((u + shift) % n, (v + shift) % n))
            .collect();
        let t2 = Tree::from_edges(n, relabeled).unwrap();
        prop_assert_eq!(canonical_form(t), canonical_form(&t2));
    }
}

/// Degree sequence realized by an arbitrary Prüfer code over `0..n`.
fn pruefer_degree_sequence(n: usize, code: &[usize]) -> DegreeSequence {
    let mut deg = vec![1usize; n];
    for &v in code {
        deg[v] += 1;
    }
    DegreeSequence::new(deg).unwrap()
}

#[test]
fn random_direction_is_positive_and_normalized() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..20 {
        let v = random_unit_positive(n, &mut rng);
        assert!(v.iter().all(|&x| x >= 0.0));
        let norm: f64 = v.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
