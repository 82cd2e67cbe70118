//! Dimensions of cyclic submodules.
//!
//! `dim B_n v_S` is the number of k-subsets `T <= S`. Writing
//! `λ_i = s_{k-i+1} - (k-i+1)`, this is the number of sequences
//! `μ_1 >= ... >= μ_k >= 0` with `μ_i <= λ_i`, i.e. the Young diagrams
//! obtained from `λ` by removing boxes. [`dim_single`] evaluates the closed
//! recursion in the elements of `S`; [`dim_oracle`] counts the sequences
//! directly. The two share no code.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::{reduced_support, ModuleVector};
use crate::arith::{binomial, binomial_signed};
use crate::enumeration::catalan;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// The closed dimension recursion for one k-subset `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRecursion {
    pub subset: Subset,
    /// `λ_1 >= ... >= λ_k >= 0`.
    pub lambda: Vec<usize>,
    /// `γ_1, ..., γ_{k-1}` (empty for `k <= 1`).
    pub gamma: Vec<BigInt>,
    pub dimension: BigUint,
}

impl DimRecursion {
    /// With `s_1 < ... < s_k` the elements of `S`: `d_1 = s_1`, and for
    /// `k >= 2`
    ///
    /// ```text
    /// d_k = sum_{i=1}^{k-1} C(s_{k-i+1}, k+1-i) γ_i
    ///     - sum_{i=1}^{k-1} C(s_{k-i+1} - s_1, k+1-i) γ_i
    ///     - sum_{i=1}^{k-2} s_1 C(s_{k-i+1} - s_2, k-i) γ_i
    /// ```
    ///
    /// where `γ_1 = 1` and `γ_j = -sum_{i=1}^{j-2} C(s_{k+1-i} - s_{k+2-j}, j-i) γ_i`.
    /// The empty set has dimension 1.
    pub fn new(subset: Subset) -> Self {
        let elems: Vec<i64> = subset.iter().map(|e| e as i64).collect();
        let k = elems.len();
        let lambda = (1..=k).map(|i| elems[k - i] as usize - (k - i + 1)).collect();
        // 1-based access to the sorted elements
        let s = |i: usize| elems[i - 1];

        let mut gamma: Vec<BigInt> = Vec::new();
        let dimension = match k {
            0 => BigUint::one(),
            1 => BigUint::from(s(1) as u64),
            _ => {
                gamma.push(BigInt::one());
                for j in 2..k {
                    let sum: BigInt = (1..j - 1)
                        .map(|i| binomial_signed(s(k + 1 - i) - s(k + 2 - j), (j - i) as i64) * &gamma[i - 1])
                        .sum();
                    gamma.push(-sum);
                }
                let g = |i: usize| &gamma[i - 1];
                let kk = k as i64;
                let mut d = BigInt::zero();
                for i in 1..k {
                    let ii = i as i64;
                    d += binomial_signed(s(k - i + 1), kk + 1 - ii) * g(i);
                    d -= binomial_signed(s(k - i + 1) - s(1), kk + 1 - ii) * g(i);
                }
                for i in 1..k - 1 {
                    let ii = i as i64;
                    d -= BigInt::from(s(1)) * binomial_signed(s(k - i + 1) - s(2), kk - ii) * g(i);
                }
                to_unsigned(d)
            }
        };
        DimRecursion { subset, lambda, gamma, dimension }
    }
}

fn to_unsigned(d: BigInt) -> BigUint {
    assert!(d.sign() != Sign::Minus, "dimension evaluated to a negative number: {d}");
    d.magnitude().clone()
}

/// `dim B_n v_S` from the closed recursion.
pub fn dim_single(s: &Subset) -> BigUint {
    DimRecursion::new(*s).dimension
}

/// `dim B_n v_S` by counting bounded partitions `μ <= λ` with a prefix-sum
/// dynamic program.
pub fn dim_oracle(s: &Subset) -> BigUint {
    let elems = s.to_vec();
    let k = elems.len();
    if k == 0 {
        return BigUint::one();
    }
    // λ_i = s_{k-i+1} - (k-i+1) for i = 1..k
    let lambda: Vec<usize> = (1..=k).map(|i| elems[k - i] - (k - i + 1)).collect();
    // ways[v] = number of admissible μ_1..μ_i with μ_i = v
    let mut ways: Vec<BigUint> = vec![BigUint::one(); lambda[0] + 1];
    for &bound in &lambda[1..] {
        let mut next = vec![BigUint::zero(); bound + 1];
        let mut suffix = BigUint::zero();
        for v in (0..ways.len()).rev() {
            suffix += &ways[v];
            if v <= bound {
                next[v] = suffix.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// `dim B_n v` by inclusion–exclusion over the reduced support:
///
/// `dim B_n v = sum_{∅ ≠ J} (-1)^{|J|-1} dim B_n v_{S_J}`, `S_J` the meet of
/// `{S_j : j ∈ J}`.
///
/// Meets only exist inside one cardinality, so the sum runs separately over
/// each cardinality class of `Red(v)` (the spans of different classes are in
/// direct sum). Within a class the alternating sum is evaluated by the
/// recurrence `F(i, M) = F(i+1, M) - F(i+1, M ∧ S_i)` memoized on the running
/// meet `M`, which is the same sum grouped by common prefixes.
pub fn dim_cyclic(v: &ModuleVector) -> BigUint {
    let red = reduced_support(v);
    let mut total = BigUint::zero();
    for (k, class) in red.by_cardinality() {
        let top = Subset::terminal(k, v.n()).expect("k <= n");
        let mut memo: HashMap<(usize, Subset), BigInt> = HashMap::new();
        let signed = alternating(&class, 0, top, &mut memo);
        // signed = dim(top) + sum_{J ≠ ∅} (-1)^{|J|} dim(S_J)
        let d = BigInt::from(dim_single(&top)) - signed;
        total += to_unsigned(d);
    }
    total
}

fn alternating(
    class: &[Subset],
    i: usize,
    running: Subset,
    memo: &mut HashMap<(usize, Subset), BigInt>,
) -> BigInt {
    if i == class.len() {
        return BigInt::from(dim_single(&running));
    }
    if let Some(hit) = memo.get(&(i, running)) {
        return hit.clone();
    }
    let without = alternating(class, i + 1, running, memo);
    let with = alternating(class, i + 1, running.meet_unchecked(&class[i]), memo);
    let value = without - with;
    memo.insert((i, running), value.clone());
    value
}

/// `S_{k,m} = {2, 4, ..., 2m, 2m+1, 2m+2, ..., m+k}` as a subset of `{1..m+k}`.
pub fn mixed_subset(k: usize, m: usize) -> Result<Subset> {
    if m > k {
        return Err(Error::InvalidRange(format!("S_{{k,m}} needs m <= k, got k = {k}, m = {m}")));
    }
    let elems = (1..=m).map(|j| 2 * j).chain(2 * m + 1..=m + k);
    Subset::new(m + k, elems)
}

/// `d_{k,m} = dim B_n v_{S_{k,m}}`.
///
/// For `k >= m >= 2` this evaluates
///
/// ```text
/// d_{k,m} = C(m+k, k) - C(m+k-2, k) - 2 C(m+k-4, k-1)
///         + sum_{i=k-m+3}^{k-1} C(2(k-i+1), k+1-i) γ_i
///         - sum_{i=k-m+3}^{k-1} C(2(k-i), k+1-i) γ_i
///         - sum_{i=k-m+3}^{k-2} 2 C(2(k-i-1), k-i) γ_i
/// ```
///
/// with `γ_{k-m+3} = -1` and
/// `γ_i = -C(m-k+2i-4, i-1) - sum_{j=k-m+3}^{i-2} C(2(i-j-1), i-j) γ_j` beyond.
/// `m = 0` gives the interval `{1..k}` (dimension `C(k, k) = 1`) and `m = 1`
/// goes through [`dim_single`].
pub fn dim_mixed(k: usize, m: usize) -> Result<BigUint> {
    if m > k {
        return Err(Error::InvalidRange(format!("d_{{k,m}} needs m <= k, got k = {k}, m = {m}")));
    }
    match m {
        0 => return Ok(binomial(k as i64, k as i64)),
        1 => return Ok(dim_single(&mixed_subset(k, 1)?)),
        _ => {}
    }
    let (k, m) = (k as i64, m as i64);
    let first = k - m + 3;
    // γ_i for first <= i <= k - 1; earlier γ (γ_1 = 1, then zeros) never
    // enter the sums below
    let mut gamma: HashMap<i64, BigInt> = HashMap::new();
    if first <= k {
        gamma.insert(first, -BigInt::one());
    }
    for i in first + 1..=k {
        let mut g = -binomial_signed(m - k + 2 * i - 4, i - 1);
        for j in first..=i - 2 {
            g -= binomial_signed(2 * (i - j - 1), i - j) * &gamma[&j];
        }
        gamma.insert(i, g);
    }
    let mut d = binomial_signed(m + k, k) - binomial_signed(m + k - 2, k) - 2 * binomial_signed(m + k - 4, k - 1);
    for i in first..k {
        d += binomial_signed(2 * (k - i + 1), k + 1 - i) * &gamma[&i];
        d -= binomial_signed(2 * (k - i), k + 1 - i) * &gamma[&i];
    }
    for i in first..k - 1 {
        d -= 2 * binomial_signed(2 * (k - i - 1), k - i) * &gamma[&i];
    }
    Ok(to_unsigned(d))
}

/// The alternating-sum expression for `c_{k+1}` obtained by specializing the
/// dimension recursion to `S = {2, 4, ..., 2k}`:
///
/// ```text
/// sum_{i=1}^{k-1} C(2(k-i+1), k+1-i) γ_i - sum_{i=1}^{k-1} C(2(k-i), k+1-i) γ_i
///   - sum_{i=1}^{k-2} 2 C(2(k-i-1), k-i) γ_i
/// ```
///
/// with `γ_1 = 1`, `γ_i = -sum_{j=1}^{i-2} C(2(i-j-1), i-j) γ_j`. Requires `k >= 2`.
pub fn catalan_identity(k: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidRange(format!("the identity needs k >= 2, got {k}")));
    }
    let k = k as i64;
    let mut gamma = vec![BigInt::zero(), BigInt::one()];
    for i in 2..=k {
        let g: BigInt = (1..=i - 2)
            .map(|j| binomial_signed(2 * (i - j - 1), i - j) * &gamma[j as usize])
            .sum();
        gamma.push(-g);
    }
    let mut d = BigInt::zero();
    for i in 1..k {
        let g = &gamma[i as usize];
        d += binomial_signed(2 * (k - i + 1), k + 1 - i) * g;
        d -= binomial_signed(2 * (k - i), k + 1 - i) * g;
    }
    for i in 1..k - 1 {
        d -= 2 * binomial_signed(2 * (k - i - 1), k - i) * &gamma[i as usize];
    }
    Ok(d)
}

/// `c_{k+1} - 2 c_k - d_{k,k-2}`, zero when the branching identity for
/// `S_k = {2, 4, ..., 2k}` holds. Requires `k >= 2`.
pub fn even_branching_defect(k: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidRange(format!("needs k >= 2, got {k}")));
    }
    let lhs = BigInt::from(catalan(k + 1));
    let rhs = BigInt::from(catalan(k)) * 2 + BigInt::from(dim_mixed(k, k - 2)?);
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::cyclic_span;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e.iter().copied()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn single_examples() {
        assert_eq!(dim_single(&s(9, &[7])), big(7));
        assert_eq!(dim_single(&s(9, &[])), big(1));
        // {m+1..m+k} -> C(m+k, k)
        assert_eq!(dim_single(&s(9, &[4, 5, 6])), big(20));
        // {2,4,6,8} -> c_5
        assert_eq!(dim_single(&s(8, &[2, 4, 6, 8])), big(42));
        assert_eq!(dim_single(&s(4, &[2, 4])), big(5));
    }

    #[test]
    fn recursion_fields() {
        let r = DimRecursion::new(s(10, &[2, 4, 6, 8]));
        assert_eq!(r.lambda, vec![4, 3, 2, 1]);
        assert_eq!(r.gamma[0], BigInt::one());
        assert_eq!(r.gamma.len(), 3);
        assert!(r.lambda.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(dim_oracle(&s(6, &[1, 2, 3])), big(1));
        assert_eq!(dim_oracle(&s(4, &[2, 4])), big(5));
        assert_eq!(dim_oracle(&s(3, &[])), big(1));
    }

    #[test]
    fn single_matches_oracle_and_down_sets_n8() {
        for t in Subset::all(8).unwrap() {
            let want = BigUint::from(t.down_set().len());
            assert_eq!(dim_oracle(&t), want, "{t}");
            assert_eq!(dim_single(&t), want, "{t}");
        }
    }

    #[test]
    fn cyclic_examples() {
        let v = ModuleVector::basis(s(6, &[2, 5, 6]));
        assert_eq!(dim_cyclic(&v), dim_single(&s(6, &[2, 5, 6])));
        let w = ModuleVector::sum_of(4, [s(4, &[2]), s(4, &[3])]).unwrap();
        assert_eq!(dim_cyclic(&w), big(3));
        assert_eq!(dim_cyclic(&ModuleVector::zero(3).unwrap()), big(0));
        let mixed = ModuleVector::sum_of(5, [s(5, &[]), s(5, &[2, 5]), s(5, &[3, 4]), s(5, &[4])]).unwrap();
        assert_eq!(dim_cyclic(&mixed), BigUint::from(cyclic_span(&mixed).len()));
    }

    /// Literal `2^m`-term expansion, for checking the memoized evaluation.
    fn literal(class: &[Subset]) -> BigInt {
        let m = class.len();
        let mut total = BigInt::zero();
        for bits in 1u32..1 << m {
            let mut it = (0..m).filter(|j| bits >> j & 1 == 1).map(|j| class[j]);
            let first = it.next().unwrap();
            let meet = it.fold(first, |acc, x| acc.meet(&x).unwrap());
            let term = BigInt::from(dim_single(&meet));
            if bits.count_ones() % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn memoized_sum_equals_literal_sum() {
        let layer = Subset::with_len(7, 3).unwrap();
        // a few antichains of 3-subsets of {1..7}
        let picks: [&[usize]; 4] = [&[5, 9, 14], &[3, 10, 17, 25], &[1, 4, 8, 20, 30], &[6, 12, 18, 24, 28, 33]];
        for pick in picks {
            let sets: Vec<Subset> = pick.iter().map(|&i| layer[i]).collect();
            let v = ModuleVector::sum_of(7, sets).unwrap();
            let red: Vec<Subset> = reduced_support(&v).sets().iter().copied().collect();
            assert_eq!(BigInt::from(dim_cyclic(&v)), literal(&red));
            assert_eq!(dim_cyclic(&v), BigUint::from(cyclic_span(&v).len()));
        }
    }

    #[test]
    fn mixed_examples() {
        assert_eq!(mixed_subset(3, 1).unwrap(), s(4, &[2, 3, 4]));
        assert_eq!(mixed_subset(4, 2).unwrap(), s(6, &[2, 4, 5, 6]));
        assert_eq!(dim_mixed(2, 0).unwrap(), big(1));
        assert_eq!(dim_mixed(3, 1).unwrap(), big(4));
        for k in 2..=8 {
            assert_eq!(dim_mixed(k, k).unwrap(), catalan(k + 1));
        }
        for k in 0..=8 {
            for m in 0..=k {
                assert_eq!(dim_mixed(k, m).unwrap(), dim_oracle(&mixed_subset(k, m).unwrap()), "k={k} m={m}");
            }
        }
        assert!(matches!(dim_mixed(2, 3), Err(Error::InvalidRange(_))));
    }

    #[test]
    fn catalan_identity_values() {
        for k in 2..=15 {
            assert_eq!(catalan_identity(k).unwrap(), BigInt::from(catalan(k + 1)));
        }
        assert!(catalan_identity(1).is_err());
    }

    #[test]
    fn even_branching_values() {
        // k = 2: 5 = 2·2 + 1, k = 3: 14 = 2·5 + 4
        assert_eq!(dim_mixed(2, 0).unwrap(), big(1));
        assert_eq!(dim_mixed(3, 1).unwrap(), big(4));
        for k in 2..=10 {
            assert!(even_branching_defect(k).unwrap().is_zero());
        }
    }
}
