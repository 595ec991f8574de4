use std::collections::{BTreeSet, HashMap};

use maxrep::oracle::{
    oracle_by_all_extensions, oracle_maximal_repeats, oracle_supermaximal_repeats, Maximality,
    OracleRepeat,
};
use maxrep::{
    build_lcp_without_rank, find_maximal_repeats, find_maximal_repeats_lean,
    find_supermaximal_repeats, BitTreeSet, RepeatReport, SuffixIndex, Text,
};
use proptest::prelude::*;

fn text_over(alphabets: &'static [usize], max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::sample::select(alphabets).prop_flat_map(move |k| {
        prop::collection::vec(0..k, 0..=max_len).prop_map(move |v| {
            v.into_iter()
                .map(|s| if k <= 26 { b'a' + s as u8 } else { s as u8 })
                .collect()
        })
    })
}

fn any_text(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    text_over(&[1, 2, 4, 26, 256], max_len)
}

fn naive_lcp(a: &[u8], b: &[u8]) -> u32 {
    a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32
}

fn expand_all(text: &[u8], sa: &[u32], reports: &[RepeatReport]) -> BTreeSet<OracleRepeat> {
    reports
        .iter()
        .map(|r| {
            let e = maxrep::expand_report(r, text, sa);
            OracleRepeat {
                bytes: e.bytes,
                positions: e.positions,
            }
        })
        .collect()
}

fn occurrences(text: &[u8], pat: &[u8]) -> usize {
    if pat.len() > text.len() {
        return 0;
    }
    text.windows(pat.len()).filter(|w| *w == pat).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn suffix_index_matches_naive(bytes in any_text(512)) {
        let text = Text::new(bytes.clone()).unwrap();
        let idx = SuffixIndex::build(&text);
        let mut naive: Vec<u32> = (0..bytes.len() as u32).collect();
        naive.sort_by(|&a, &b| bytes[a as usize..].cmp(&bytes[b as usize..]));
        prop_assert_eq!(&*idx.sa, &naive[..]);
        for (i, &pos) in idx.sa.iter().enumerate() {
            prop_assert_eq!(idx.rank[pos as usize] as usize, i);
        }
        for (j, &rank) in idx.rank.iter().enumerate() {
            prop_assert_eq!(idx.sa[rank as usize] as usize, j);
        }
        prop_assert_eq!(idx.lcp.len(), bytes.len().saturating_sub(1));
        for (i, w) in idx.sa.windows(2).enumerate() {
            let want = naive_lcp(&bytes[w[0] as usize..], &bytes[w[1] as usize..]);
            prop_assert_eq!(idx.lcp[i], want);
        }
        prop_assert_eq!(build_lcp_without_rank(&bytes, &idx.sa), idx.lcp);
    }

    #[test]
    fn maximal_repeats_match_oracle(bytes in any_text(512)) {
        let text = Text::new(bytes.clone()).unwrap();
        let standard: Vec<_> = find_maximal_repeats(&text, 1).collect();
        let lean: Vec<_> = find_maximal_repeats_lean(&text, 1).collect();
        prop_assert_eq!(&standard, &lean);
        prop_assert!(standard.len() <= bytes.len());
        prop_assert!(standard.windows(2).all(|w| w[0].length <= w[1].length));
        let idx = SuffixIndex::build(&text);
        let got = expand_all(&bytes, &idx.sa, &standard);
        prop_assert_eq!(got.len(), standard.len(), "duplicate report");
        prop_assert_eq!(got, oracle_maximal_repeats(&bytes).unwrap());
    }

    #[test]
    fn supermaximal_repeats_match_oracle(bytes in any_text(512)) {
        let text = Text::new(bytes.clone()).unwrap();
        let reports: Vec<_> = find_supermaximal_repeats(&text, 1).collect();
        let idx = SuffixIndex::build(&text);
        let got = expand_all(&bytes, &idx.sa, &reports);
        prop_assert_eq!(&got, &oracle_supermaximal_repeats(&bytes).unwrap());
        let maximal = expand_all(
            &bytes,
            &idx.sa,
            &find_maximal_repeats(&text, 1).collect::<Vec<_>>(),
        );
        prop_assert!(got.is_subset(&maximal));
        let alphabet = text.alphabet_size();
        for r in &reports {
            prop_assert!(r.count <= alphabet + 1);
        }
    }

    #[test]
    fn min_length_only_filters(bytes in any_text(200), k in 2usize..12) {
        let text = Text::new(bytes).unwrap();
        let all: Vec<_> = find_maximal_repeats(&text, 1).collect();
        let keep = |v: &[RepeatReport]| -> Vec<RepeatReport> {
            v.iter().copied().filter(|r| r.length >= k).collect()
        };
        prop_assert_eq!(find_maximal_repeats(&text, k).collect::<Vec<_>>(), keep(&all));
        prop_assert_eq!(find_maximal_repeats_lean(&text, k).collect::<Vec<_>>(), keep(&all));
        let sup: Vec<_> = find_supermaximal_repeats(&text, 1).collect();
        prop_assert_eq!(find_supermaximal_repeats(&text, k).collect::<Vec<_>>(), keep(&sup));
    }

    #[test]
    fn reported_repeats_are_maximal_by_counting(bytes in text_over(&[2, 3, 4], 120)) {
        let text = Text::new(bytes.clone()).unwrap();
        let mut it = find_maximal_repeats(&text, 1);
        while let Some(rep) = it.next() {
            let e = it.expand(&rep);
            let occ = occurrences(&bytes, &e.bytes);
            prop_assert_eq!(occ, rep.count);
            prop_assert!(occ >= 2);
            for c in 0..=255u8 {
                let mut left = vec![c];
                left.extend_from_slice(&e.bytes);
                let mut right = e.bytes.clone();
                right.push(c);
                prop_assert!(occurrences(&bytes, &left) < occ);
                prop_assert!(occurrences(&bytes, &right) < occ);
            }
        }
    }

    #[test]
    fn one_symbol_extensions_suffice(bytes in text_over(&[1, 2, 3], 64)) {
        prop_assert_eq!(
            oracle_by_all_extensions(&bytes, Maximality::Maximal).unwrap(),
            oracle_maximal_repeats(&bytes).unwrap()
        );
        prop_assert_eq!(
            oracle_by_all_extensions(&bytes, Maximality::Supermaximal).unwrap(),
            oracle_supermaximal_repeats(&bytes).unwrap()
        );
    }

    #[test]
    fn bit_tree_tracks_ordered_set(
        universe in 1usize..300,
        ops in prop::collection::vec((any::<bool>(), any::<prop::sample::Index>()), 0..400),
    ) {
        let mut tree = BitTreeSet::new(universe);
        let mut reference = BTreeSet::new();
        let bound = 4 * universe.next_power_of_two().trailing_zeros();
        for (insert, at) in ops {
            let x = at.index(universe);
            if insert {
                tree.insert(x);
                reference.insert(x);
            } else {
                let lo = tree.max_less_than_traced(x);
                let hi = tree.min_greater_than_traced(x);
                prop_assert_eq!(lo.value, reference.range(..x).next_back().copied());
                prop_assert_eq!(hi.value, reference.range(x + 1..).next().copied());
                prop_assert!(lo.visits <= bound && hi.visits <= bound);
            }
        }
        prop_assert!(tree.is_consistent());
    }
}

#[test]
fn degenerate_families_match_oracle() {
    let mut cases: Vec<Vec<u8>> = vec![
        vec![],
        b"a".to_vec(),
        vec![b'a'; 300],
        (0..=255u8).collect(),
        b"abcab".repeat(60),
        b"ab".repeat(150),
    ];
    let (mut f0, mut f1) = (b"a".to_vec(), b"ab".to_vec());
    while f1.len() < 400 {
        let next = [f1.clone(), f0].concat();
        f0 = f1;
        f1 = next;
    }
    cases.push(f1);
    for bytes in cases {
        let text = Text::new(bytes.clone()).unwrap();
        let idx = SuffixIndex::build(&text);
        let standard: Vec<_> = find_maximal_repeats(&text, 1).collect();
        let lean: Vec<_> = find_maximal_repeats_lean(&text, 1).collect();
        assert_eq!(standard, lean);
        assert_eq!(
            expand_all(&bytes, &idx.sa, &standard),
            oracle_maximal_repeats(&bytes).unwrap()
        );
        let sup: Vec<_> = find_supermaximal_repeats(&text, 1).collect();
        assert_eq!(
            expand_all(&bytes, &idx.sa, &sup),
            oracle_supermaximal_repeats(&bytes).unwrap()
        );
    }
}

#[test]
fn unary_family() {
    let text = Text::new(vec![b'a'; 5000]).unwrap();
    let reports: Vec<_> = find_maximal_repeats_lean(&text, 1).collect();
    assert_eq!(reports.len(), 4999);
    for (k, r) in reports.iter().enumerate() {
        assert_eq!(r.length, k + 1);
        assert_eq!(r.count, 5000 - k);
    }
    let sup: Vec<_> = find_supermaximal_repeats(&text, 1).collect();
    assert_eq!(
        sup,
        vec![RepeatReport {
            sa_start: 4998,
            length: 4999,
            count: 2
        }]
    );
}

#[test]
fn supermaximal_work_is_linear() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut per_symbol = HashMap::new();
    for n in [10_000usize, 20_000, 40_000, 80_000] {
        let bytes: Vec<u8> = (0..n).map(|_| b"acgt"[rng.random_range(0..4)]).collect();
        let text = Text::new(bytes).unwrap();
        let mut it = find_supermaximal_repeats(&text, 1);
        it.by_ref().for_each(drop);
        per_symbol.insert(n, it.operations() as f64 / n as f64);
    }
    for (_, ops) in per_symbol {
        assert!(ops <= 3.0, "{ops} operations per symbol");
    }
}

#[test]
fn lean_comparisons_stay_within_twice_n() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let bytes: Vec<u8> = (0..10_240)
        .map(|_| b"acgt"[rng.random_range(0..4)])
        .collect();
    let n = bytes.len() as u64;
    let text = Text::new(bytes).unwrap();
    let mut it = find_maximal_repeats_lean(&text, 1);
    it.by_ref().for_each(drop);
    assert!(it.symbol_comparisons() <= 2 * n);
    assert!(it.symbol_comparisons() > 0);
}
