use std::collections::BTreeMap;

use qgollnitz_core::keyid::{lhs_g, KeyParams, Sextuple};
use qgollnitz_core::partcomb::{
    count_g, count_p, for_each_type1, is_type1, Color, ColoredPart, ColoredPartition,
};
use qgollnitz_core::sweep::{golden_corpus, golden_diff};

/// Type-1 rule written out independently: sort by value descending, then
/// check each neighbouring pair against the gap table.
fn oracle_type1(parts: &[(u32, Color)]) -> bool {
    let mut v = parts.to_vec();
    v.sort_by_key(|p| std::cmp::Reverse(p.0));
    let primary = |c: Color| matches!(c, Color::A | Color::B | Color::C);
    let rank = |c: Color| Color::ALL.iter().position(|&x| x == c).unwrap();
    if v.iter().any(|&(n, c)| n == 0 || (n == 1 && !primary(c))) {
        return false;
    }
    for w in v.windows(2) {
        let ((big, cb), (small, cs)) = (w[0], w[1]);
        let ok = match big - small {
            0 => false,
            1 => (cb == cs && primary(cb)) || rank(cb) > rank(cs),
            _ => true,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// All Type-1 partitions with parts <= 3, from the 2^18 subsets of colored parts.
fn brute_force_small() -> Vec<ColoredPartition> {
    let items: Vec<(u32, Color)> = (1..=3).flat_map(|v| Color::ALL.map(|c| (v, c))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << items.len()) {
        let chosen: Vec<_> = (0..items.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| items[b])
            .collect();
        if oracle_type1(&chosen) {
            out.push(ColoredPartition::from_pairs(&chosen));
        }
    }
    out.sort();
    out
}

#[test]
fn enumerator_matches_brute_force() {
    let expected = brute_force_small();
    let mut got = Vec::new();
    for_each_type1(
        3,
        |_| false,
        |parts| got.push(ColoredPartition::new(parts.to_vec())),
    );
    got.sort();
    assert_eq!(got, expected);
    assert!(got.iter().all(is_type1));
}

#[test]
fn count_g_matches_brute_force() {
    let mut table: BTreeMap<(Sextuple, u64), u64> = BTreeMap::new();
    for p in brute_force_small() {
        *table.entry((p.frequencies(), p.weight())).or_default() += 1;
    }
    for ((freq, n), count) in &table {
        assert_eq!(
            count_g(3, *n as i64, freq),
            *count,
            "freq {freq:?} weight {n}"
        );
    }
}

#[test]
fn diagonal_lhs_counts_type1_partitions() {
    // coefficient of q^n in g(L, L) is the number of Type-1 partitions of n
    // with parts <= L and color totals (i, j, k), once L >= max(i+j, j+k, k+i)
    for (i, j, k) in [(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 2, 1)] {
        let l = 3i64;
        let mut by_weight: BTreeMap<u64, i64> = BTreeMap::new();
        for p in brute_force_small() {
            let f = p.frequencies();
            if f.totals() == (i, j, k) {
                *by_weight.entry(p.weight()).or_default() += 1;
            }
        }
        let g = lhs_g(&KeyParams::new(i, j, k, l, l));
        let expected = qgollnitz_core::LaurentPoly::from_terms(
            by_weight.into_iter().map(|(n, c)| (n as i64, c)),
        );
        assert_eq!(g, expected, "(i, j, k) = ({i}, {j}, {k})");
    }
}

#[test]
fn count_p_by_direct_enumeration() {
    // three-color partitions: distinct parts in each color with the shifted bounds
    let (l, i, j, k) = (4i64, 1i64, 2i64, 1i64);
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    for a in 1..=(l - k) {
        for b1 in 1..=(l - i) {
            for b2 in 1..b1 {
                for c in 1..=(l - j) {
                    *tally.entry(a + b1 + b2 + c).or_default() += 1;
                }
            }
        }
    }
    for n in 0..=20 {
        assert_eq!(
            count_p(l, n, i, j, k),
            tally.get(&n).copied().unwrap_or(0),
            "n = {n}"
        );
    }
}

#[test]
fn type1_colored_part_order() {
    let p = ColoredPartition::new(vec![
        ColoredPart::new(2, Color::A),
        ColoredPart::new(2, Color::BC),
    ]);
    assert_eq!(p.parts()[0].color, Color::BC);
}

#[test]
fn golden_file_is_current() {
    let stored = include_str!("../golden/key_sides.txt");
    assert_eq!(golden_diff(stored), Vec::<String>::new());
    assert_eq!(golden_corpus(), stored);
}
