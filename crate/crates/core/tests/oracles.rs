//! Brute-force oracles written without the library's own helpers, and the
//! values they produce, frozen.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use planar_rook::enumeration::{
    ballot_encode, catalan, count_echelon, enumerate_bn, order_prn, order_recursive, OrderTable,
};
use planar_rook::poset::{branch_compute, branch_predict, dim_cyclic, dim_mixed, dim_single, mixed_subset, ModuleVector};
use planar_rook::presentation::{eval_word, expand_std, StandardWord};
use planar_rook::{PartialMap, Subset};

/// All injective partial maps of `{1..n}` as sorted pair lists.
fn all_partial_maps(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(x: usize, n: usize, used: u32, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if x > n {
            out.push(acc.clone());
            return;
        }
        go(x + 1, n, used, acc, out);
        for y in 1..=n {
            if used & 1 << y == 0 {
                acc.push((x, y));
                go(x + 1, n, used | 1 << y, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, 0, &mut Vec::new(), &mut out);
    out
}

fn planar(pairs: &[(usize, usize)]) -> bool {
    pairs.windows(2).all(|w| w[0].1 < w[1].1)
}

fn decreasing(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(s, t)| t <= s)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// Number of k-subsets below `s` in the componentwise order.
fn count_below(n: usize, s: &[usize]) -> usize {
    k_subsets(n, s.len()).iter().filter(|t| t.iter().zip(s).all(|(a, b)| a <= b)).count()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn orders_by_brute_force() {
    let mut counts = Vec::new();
    let mut pr = Vec::new();
    for n in 0..=5 {
        let maps = all_partial_maps(n);
        let bn: BTreeSet<Vec<(usize, usize)>> =
            maps.iter().filter(|p| planar(p) && decreasing(p)).cloned().collect();
        let listed: BTreeSet<Vec<(usize, usize)>> = enumerate_bn(n).unwrap().map(|f| f.pairs().to_vec()).collect();
        assert_eq!(bn, listed, "n = {n}");
        counts.push(bn.len());
        pr.push(maps.iter().filter(|p| planar(p)).count());
    }
    assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    assert_eq!(pr, vec![1, 2, 6, 20, 70, 252]);
    for n in 0..=5 {
        assert_eq!(BigUint::from(pr[n]), order_prn(n));
        assert_eq!(BigUint::from(counts[n]), order_recursive(n));
        assert_eq!(BigUint::from(counts[n]), count_echelon(n).unwrap());
    }
}

#[test]
fn frozen_catalan_numbers() {
    let values: Vec<u64> = vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (m, v) in values.into_iter().enumerate() {
        assert_eq!(catalan(m), big(v));
    }
    assert_eq!(catalan(30).to_string(), "3814986502092304");
}

#[test]
fn frozen_order_table() {
    // unrolled by hand: b_{1,0} = 3, b_{1,1} = b_2 = 5, b_{2,1} = 1 + 3 + 5
    let t = OrderTable::new(5).unwrap();
    assert_eq!(t.bpq(1, 0), Some(&big(3)));
    assert_eq!(t.bpq(1, 1), Some(&big(5)));
    assert_eq!(t.bpq(2, 0), Some(&big(4)));
    assert_eq!(t.bpq(2, 1), Some(&big(9)));
    assert_eq!(t.bpq(2, 2), Some(&big(14)));
    assert_eq!(t.order(), &big(132));
    assert_eq!(order_recursive(2), big(5));
}

#[test]
fn frozen_ballot_sequences() {
    let id = PartialMap::identity(1).unwrap();
    let zero = PartialMap::zero(1).unwrap();
    assert_eq!(ballot_encode(&id).unwrap().to_string(), "1010");
    assert_eq!(ballot_encode(&zero).unwrap().to_string(), "1100");
}

#[test]
fn dimensions_by_brute_force() {
    for n in 1..=9 {
        for k in 1..=n {
            for s in k_subsets(n, k) {
                let subset = Subset::new(n, s.iter().copied()).unwrap();
                assert_eq!(dim_single(&subset), BigUint::from(count_below(n, &s)), "{s:?}");
            }
        }
    }
    assert_eq!(count_below(4, &[2, 4]), 5);
    assert_eq!(count_below(4, &[2, 3, 4]), 4);
    assert_eq!(count_below(8, &[2, 4, 6, 8]), 42);
}

#[test]
fn mixed_dimensions_by_brute_force() {
    let mut frozen = Vec::new();
    for k in 2..=7 {
        for m in 0..=k {
            let s = mixed_subset(k, m).unwrap().to_vec();
            let want = count_below(k + m, &s);
            assert_eq!(dim_mixed(k, m).unwrap(), BigUint::from(want), "k={k} m={m}");
            if k == 4 {
                frozen.push(want);
            }
        }
    }
    assert_eq!(frozen, vec![1, 5, 14, 28, 42]);
    assert_eq!(dim_mixed(2, 0).unwrap(), big(1));
    assert_eq!(dim_mixed(3, 1).unwrap(), big(4));
}

#[test]
fn cyclic_dimension_examples() {
    let two = Subset::new(3, [2]).unwrap();
    let three = Subset::new(3, [3]).unwrap();
    let v = ModuleVector::sum_of(3, [two, three]).unwrap();
    assert_eq!(dim_cyclic(&v), big(3));
    let u = ModuleVector::sum_of(5, [Subset::new(5, [2, 5]).unwrap(), Subset::new(5, [3, 4]).unwrap()]).unwrap();
    // below {2,5}: 7 sets; below {3,4}: 6; below the meet {2,4}: 5
    assert_eq!(count_below(5, &[2, 5]), 7);
    assert_eq!(count_below(5, &[3, 4]), 6);
    assert_eq!(dim_cyclic(&u), big(8));
}

#[test]
fn smallest_branching_by_hand() {
    // basis of W^1_2: {1,2}, {1,3}, {2,3}; restricted to B_2, {1,3} and {2,3}
    // form a copy of W^1_1 and {1,2} a copy of W^0_2
    let p = branch_predict(1, 2, 1).unwrap();
    assert_eq!(p, branch_compute(1, 2, 1).unwrap());
    let dims: Vec<u64> = p.iter().map(|s| s.dimension.to_string().parse().unwrap()).collect();
    assert_eq!(dims.iter().sum::<u64>(), 3);
}

#[test]
fn small_standard_word() {
    let w = StandardWord::new(Subset::new(2, [2]).unwrap(), Subset::new(2, [1]).unwrap()).unwrap();
    let word = expand_std(&w);
    assert_eq!(word.to_string(), "e2 l1 e1");
    assert_eq!(eval_word(&word).unwrap(), PartialMap::new(2, [(2, 1)]).unwrap());
}
