use std::collections::BTreeSet;

use proptest::prelude::*;

use demazure_core::charring::{demazure_word_char, shift_grade, weyl_character_finite};
use demazure_core::demazure::{demazure_character, demazure_dim};
use demazure_core::flags::{
    graded_weyl_character, greedy_decompose, greedy_decompose_with, level_flag, reconstruct,
    weyl_dim_product_check, LeadingOrder,
};
use demazure_core::lspath::{
    concat_paths, crystal_character, eps_phi, generate_demazure_set, joseph_highest, root_op_e,
    root_op_f, straight_path,
};
use demazure_core::{
    AffineDatum, Datum, DemazureLabel, RootDatum, TieBreak, Weight, WeylWord,
};

fn c(h: &[i64]) -> Weight {
    Weight::classical(h.to_vec())
}

fn affine_weight(rank: usize) -> impl Strategy<Value = Weight> {
    (prop::collection::vec(-5i64..=5, rank + 1), -3i64..=3).prop_map(|(h, d)| Weight::new(h, d))
}

/// Affine weight of the given level over `A_rank^(1)` (all dual marks are 1).
fn leveled_weight(rank: usize) -> impl Strategy<Value = Weight> {
    (1i64..=3, prop::collection::vec(-4i64..=4, rank), -2i64..=2).prop_map(|(level, rest, d)| {
        let h0 = level - rest.iter().sum::<i64>();
        let mut h = vec![h0];
        h.extend(rest);
        Weight::new(h, d)
    })
}

proptest! {
    #[test]
    fn reflections_are_involutions(mu in affine_weight(2), i in 0usize..3) {
        for label in ["A2", "C2", "G2"] {
            let ad = AffineDatum::from_label(label).unwrap();
            let once = ad.reflect_weight(i, &mu).unwrap();
            prop_assert_eq!(ad.reflect_weight(i, &once).unwrap(), mu.clone());
            prop_assert_eq!(ad.level(&once), ad.level(&mu));
        }
    }

    #[test]
    fn finite_reflections_are_involutions(h in prop::collection::vec(-5i64..=5, 4), i in 1usize..=4) {
        for label in ["A4", "B4", "C4", "D4", "F4"] {
            let rd = RootDatum::from_label(label).unwrap();
            let mu = Weight::classical(h.clone());
            let once = rd.reflect_weight(i, &mu).unwrap();
            prop_assert_eq!(rd.reflect_weight(i, &once).unwrap(), mu);
        }
    }

    #[test]
    fn words_preserve_level(mu in affine_weight(2), letters in prop::collection::vec(0usize..3, 0..8)) {
        let ad = AffineDatum::from_label("C2").unwrap();
        let w = WeylWord(letters);
        let image = ad.apply_word(&w, &mu).unwrap();
        prop_assert_eq!(ad.level(&image), ad.level(&mu));
        prop_assert_eq!(ad.apply_word(&w.reversed(), &image).unwrap(), mu);
    }

    #[test]
    fn make_dominant_sl2(mu in leveled_weight(1)) {
        check_make_dominant(&AffineDatum::from_label("A1").unwrap(), &mu)?;
    }

    #[test]
    fn make_dominant_sl3(mu in leveled_weight(2)) {
        check_make_dominant(&AffineDatum::from_label("A2").unwrap(), &mu)?;
    }

    #[test]
    fn w0_is_an_involution(h in prop::collection::vec(-6i64..=6, 2)) {
        for label in ["A2", "C2"] {
            let rd = RootDatum::from_label(label).unwrap();
            let mu = Weight::classical(h.clone());
            let twice = rd.w0_apply(&rd.w0_apply(&mu).unwrap()).unwrap();
            prop_assert_eq!(twice, mu);
        }
    }

    #[test]
    fn grade_shift_equivariance(a in 0i64..=2, b in 0i64..=2, level in 1i64..=3, m in -4i64..=4) {
        for label in ["A2", "C2"] {
            let ad = AffineDatum::from_label(label).unwrap();
            let lam = c(&[a, b]);
            let shifted = demazure_character(&ad, &DemazureLabel::new(level, lam.clone(), m)).unwrap();
            let base = demazure_character(&ad, &DemazureLabel::new(level, lam, 0)).unwrap();
            prop_assert_eq!(shifted, shift_grade(&base, m));
        }
    }

    #[test]
    fn dimension_is_dual_invariant(a in 0i64..=3, b in 0i64..=2, level in 1i64..=3) {
        let ad = AffineDatum::from_label("A2").unwrap();
        let lam = c(&[a, b]);
        let dual = -&ad.finite().w0_apply(&lam).unwrap();
        prop_assert_eq!(
            demazure_dim(&ad, &DemazureLabel::new(level, lam, 0)).unwrap(),
            demazure_dim(&ad, &DemazureLabel::new(level, dual, 0)).unwrap()
        );
    }
}

fn check_make_dominant(ad: &AffineDatum, mu: &Weight) -> Result<(), TestCaseError> {
    let (lam, w) = ad.make_dominant_with(mu, TieBreak::SmallestFirst).unwrap();
    let (lam2, w2) = ad.make_dominant_with(mu, TieBreak::LargestFirst).unwrap();
    prop_assert!(lam.is_dominant());
    prop_assert_eq!(&lam, &lam2);
    prop_assert_eq!(w.len(), w2.len());
    prop_assert_eq!(ad.apply_word(&w, &lam).unwrap(), mu.clone());
    prop_assert_eq!(ad.apply_word(&w2, &lam).unwrap(), mu.clone());
    // reducedness: the suffixes of w move a regular dominant weight to distinct places
    let rho = Weight::new(vec![1; ad.num_nodes()], 0);
    let mut seen = BTreeSet::from([rho.clone()]);
    let mut cur = rho;
    for &i in w.letters().iter().rev() {
        cur = ad.reflect_weight(i, &cur).unwrap();
        prop_assert!(seen.insert(cur.clone()), "word {} is not reduced", w);
    }
    Ok(())
}

#[test]
fn eta_lifts_are_dominant_and_restrict_back() {
    for label in ["C2", "C3", "B3", "G2", "F4"] {
        let rd = RootDatum::from_label(label).unwrap();
        let se = rd.short_subdatum().unwrap();
        let n = rd.rank();
        let lams: Vec<Weight> = (0..n)
            .flat_map(|i| {
                (0..=2).map(move |k| {
                    let mut h = vec![1; n];
                    h[i] = k;
                    Weight::classical(h)
                })
            })
            .collect();
        for lam in lams {
            let bar = se.restrict(&lam).unwrap();
            let below = weyl_character_finite(se.sub(), &bar).unwrap();
            for mu in below.support().filter(|w| w.is_dominant()) {
                let eta = se.eta_lambda(&lam, mu).unwrap();
                assert!(eta.is_dominant(), "{label} λ={lam} μ={mu}");
                assert_eq!(&se.restrict(&eta).unwrap(), mu);
                assert!(rd.dominance_leq(&eta, &lam));
            }
        }
    }
}

#[test]
fn demazure_dim_grows_along_dominance() {
    for label in ["A2", "C2"] {
        let ad = AffineDatum::from_label(label).unwrap();
        let rd = ad.finite();
        let weights: Vec<Weight> = (0..=3)
            .flat_map(|a| (0..=2).map(move |b| c(&[a, b])))
            .collect();
        for level in 1..=2 {
            for lo in &weights {
                for hi in &weights {
                    if lo != hi && rd.dominance_leq(lo, hi) {
                        let d_lo = demazure_dim(&ad, &DemazureLabel::new(level, lo.clone(), 0)).unwrap();
                        let d_hi = demazure_dim(&ad, &DemazureLabel::new(level, hi.clone(), 0)).unwrap();
                        assert!(d_lo <= d_hi, "{label} ℓ={level}: {lo} ≤ {hi} but {d_lo} > {d_hi}");
                    }
                }
            }
        }
    }
}

fn all_reduced_sl2_words(max_len: usize) -> Vec<WeylWord> {
    let mut out = vec![WeylWord::empty()];
    for len in 1..=max_len {
        for start in [0, 1] {
            out.push(WeylWord((0..len).map(|k| (start + k) % 2).collect()));
        }
    }
    out
}

#[test]
fn path_model_matches_operators_sl2_level_two() {
    let ad = AffineDatum::from_label("A1").unwrap();
    for lam in [[1, 0], [0, 1], [2, 0], [1, 1], [0, 2]] {
        for d in [0, 1] {
            let lam = Weight::new(lam.to_vec(), d);
            for w in all_reduced_sl2_words(6) {
                let ps = generate_demazure_set(&ad, &lam, &w).unwrap();
                let op = demazure_word_char(&ad, &w, &lam).unwrap();
                assert_eq!(crystal_character(&ad, &ps), op, "Λ={lam} σ={w}");
                assert_eq!(ps.len() as i64, op.mass());
            }
        }
    }
}

fn reduced_words(ad: &AffineDatum, max_len: usize) -> Vec<WeylWord> {
    // minimal coset words of the orbit of a regular weight are all reduced
    let rho = Weight::new(vec![1; ad.num_nodes()], 0);
    let mut out = Vec::new();
    let mut frontier = vec![rho.clone()];
    let mut seen = BTreeSet::from([rho]);
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for mu in &frontier {
            let (_, w) = ad.make_dominant(mu).unwrap();
            if w.len() > max_len {
                continue;
            }
            out.push(w);
            for i in ad.indices() {
                let s = ad.reflect_weight(i, mu).unwrap();
                if seen.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn path_model_matches_operators_sl3_level_one() {
    let ad = AffineDatum::from_label("A2").unwrap();
    let words = reduced_words(&ad, 4);
    assert!(words.len() > 20);
    for i in 0..3 {
        let lam = ad.fundamental(i).unwrap();
        for w in &words {
            let ps = generate_demazure_set(&ad, &lam, w).unwrap();
            let op = demazure_word_char(&ad, w, &lam).unwrap();
            assert_eq!(crystal_character(&ad, &ps), op, "Λ={lam} σ={w}");
            assert_eq!(ps.len() as i64, op.mass());
        }
    }
}

#[test]
fn demazure_sets_are_e_stable_and_satisfy_crystal_axioms() {
    let ad = AffineDatum::from_label("A1").unwrap();
    for lam in [[2, 0], [1, 1], [0, 2]] {
        let lam = Weight::new(lam.to_vec(), 0);
        for w in all_reduced_sl2_words(5) {
            let ps = generate_demazure_set(&ad, &lam, &w).unwrap();
            for p in ps.paths() {
                let wt = p.weight(&ad);
                for i in ad.indices() {
                    let (eps, phi) = eps_phi(&ad, i, p).unwrap();
                    assert_eq!(phi - eps, wt.h[i]);
                    match root_op_e(&ad, i, p).unwrap() {
                        Some(e) => {
                            assert!(ps.contains(&e), "not E-stable");
                            assert_eq!(e.weight(&ad), &wt + ad.simple_root(i).unwrap());
                            assert_eq!(root_op_f(&ad, i, &e).unwrap().as_ref(), Some(p));
                        }
                        None => assert_eq!(eps, 0),
                    }
                    if root_op_f(&ad, i, p).unwrap().is_none() {
                        assert_eq!(phi, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn joseph_selection_matches_epsilon_criterion() {
    let ad = AffineDatum::from_label("A1").unwrap();
    for mu in [[1, 0], [0, 1], [2, 0], [1, 1]] {
        let mu = Weight::new(mu.to_vec(), 0);
        for lam in [[1, 0], [0, 1], [1, 1]] {
            let lam = Weight::new(lam.to_vec(), 0);
            for w in all_reduced_sl2_words(5) {
                let selected: Vec<_> = joseph_highest(&ad, &mu, &lam, &w)
                    .unwrap()
                    .into_iter()
                    .map(|(b, _)| b)
                    .collect();
                let ps = generate_demazure_set(&ad, &lam, &w).unwrap();
                let oracle: Vec<_> = ps
                    .paths()
                    .iter()
                    .filter(|b| {
                        ad.indices()
                            .all(|i| eps_phi(&ad, i, b).unwrap().0 <= mu.h[i])
                    })
                    .cloned()
                    .collect();
                assert_eq!(selected, oracle, "μ={mu} Λ={lam} σ={w}");
                // each selected element is E-highest after concatenation
                let head = straight_path(&mu).unwrap();
                for b in &selected {
                    let joined = concat_paths(&head, b);
                    for i in ad.indices() {
                        assert_eq!(root_op_e(&ad, i, &joined).unwrap(), None);
                    }
                }
            }
        }
    }
}

#[test]
fn flags_reconstruct_and_ignore_tie_breaks() {
    for label in ["A1", "A2"] {
        let ad = AffineDatum::from_label(label).unwrap();
        let rank = ad.rank();
        let lams: Vec<Weight> = if rank == 1 {
            (0..=5).map(|m| c(&[m])).collect()
        } else {
            (0..=3).flat_map(|a| (0..=3 - a).map(move |b| c(&[a, b]))).collect()
        };
        for lam in lams {
            for (from, to) in [(1, 2), (1, 3), (2, 3)] {
                let ch = demazure_character(&ad, &DemazureLabel::new(from, lam.clone(), 0)).unwrap();
                let fd = level_flag(&ad, from, to, &lam).unwrap();
                assert!(fd.pieces.iter().all(|p| p.mult > 0));
                assert!(fd.pieces.iter().all(|p| p.grade >= 0));
                assert_eq!(reconstruct(&ad, &fd).unwrap(), ch, "{label} {lam} {from}→{to}");
                let rev = greedy_decompose_with(&ad, &ch, to, LeadingOrder::Last).unwrap();
                assert_eq!(rev.sorted_pieces(), fd.sorted_pieces());
            }
        }
    }
}

#[test]
fn simply_laced_flags_have_length_one() {
    for (label, lams) in [
        ("A1", vec![c(&[3])]),
        ("A3", vec![c(&[1, 0, 1]), c(&[0, 2, 0])]),
        ("D4", vec![c(&[0, 1, 0, 0]), c(&[1, 0, 0, 1])]),
    ] {
        let rd = RootDatum::from_label(label).unwrap();
        for lam in lams {
            let (_, fd) = graded_weyl_character(&rd, &lam).unwrap();
            assert_eq!(fd.pieces.len(), 1, "{label} {lam}");
        }
    }
}

#[test]
fn fundamental_consistency_non_simply_laced() {
    for (label, lams) in [
        ("C2", vec![c(&[2, 0]), c(&[1, 1]), c(&[3, 0]), c(&[2, 1])]),
        ("B2", vec![c(&[0, 2]), c(&[1, 1])]),
        ("C3", vec![c(&[1, 1, 0]), c(&[2, 0, 0])]),
        ("B3", vec![c(&[0, 0, 2]), c(&[1, 0, 1])]),
        ("G2", vec![c(&[1, 1]), c(&[3, 0])]),
    ] {
        let rd = RootDatum::from_label(label).unwrap();
        for lam in lams {
            let dc = weyl_dim_product_check(&rd, &lam).unwrap();
            assert!(dc.holds, "{label} {lam}: {} vs {} ({:?})", dc.dim, dc.product, dc.fundamentals);
            // the short-root flag decomposes with positive multiplicities
            let (ch, fd) = graded_weyl_character(&rd, &lam).unwrap();
            assert!(fd.pieces.iter().all(|p| p.mult > 0));
            assert_eq!(ch.coefficient(&lam, 0), 1);
        }
    }
}

#[test]
fn greedy_is_exact_on_short_subdatum_characters() {
    let ad = AffineDatum::from_label("A2").unwrap();
    for lam in [c(&[2, 0]), c(&[1, 1]), c(&[2, 1])] {
        let ch = demazure_character(&ad, &DemazureLabel::new(1, lam.clone(), 0)).unwrap();
        for to in [2, 3] {
            let fd = greedy_decompose(&ad, &ch, to).unwrap();
            assert_eq!(reconstruct(&ad, &fd).unwrap(), ch);
        }
    }
}
