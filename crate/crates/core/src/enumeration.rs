//! Orders of `B_n` and `PR_n`, exhaustive enumeration of `B_n`, the
//! recursive order table and the ballot-sequence bijection.
//!
//! `|B_n|` is the Catalan number `c_{n+1}`. Three independent routes are
//! provided so they can be checked against one another: the Catalan
//! recurrence ([`order_bn`]), the `b_{p,q}` recursion ([`order_recursive`])
//! and plain enumeration ([`enumerate_bn`]).

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::rook::{PartialMap, RookMatrix};
use crate::subset::{check_n, Subset};

/// Largest `n` accepted by [`enumerate_bn`]; `|B_14| = c_15 = 9_694_845`.
pub const MAX_ENUMERATION_N: usize = 14;

static CATALAN: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `c_m` from `c_0 = c_1 = 1`, `c_m = sum_{i<m} c_i c_{m-1-i}`, memoized.
pub fn catalan(m: usize) -> BigUint {
    let mut cache = CATALAN.lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(BigUint::one());
        cache.push(BigUint::one());
    }
    while cache.len() <= m {
        let j = cache.len();
        let next = (0..j).map(|i| &cache[i] * &cache[j - 1 - i]).sum();
        cache.push(next);
    }
    cache[m].clone()
}

/// `|B_n| = c_{n+1}`.
pub fn order_bn(n: usize) -> BigUint {
    catalan(n + 1)
}

/// `|PR_n| = C(2n, n)`.
pub fn order_prn(n: usize) -> BigUint {
    binomial(2 * n as i64, n as i64)
}

/// Every element of `B_n` exactly once, ordered by `(domain mask, range mask)`.
///
/// Elements correspond to pairs `T <= S` of equal-size subsets via
/// `S = D(f)`, `T = R(f)`.
pub fn enumerate_bn(n: usize) -> Result<impl Iterator<Item = PartialMap>> {
    check_n(n)?;
    if n > MAX_ENUMERATION_N {
        return Err(Error::BoundExceeded { n, max: MAX_ENUMERATION_N });
    }
    Ok((0..1u64 << n).flat_map(move |mask| {
        let s = Subset::from_mask_unchecked(n, mask);
        s.down_set()
            .into_iter()
            .map(move |t| PartialMap::from_sets(&s, &t).expect("equal sizes"))
    }))
}

/// Brute-force count of upper triangular generalized reduced echelon rook
/// matrices of size `n`, scanning every rook matrix.
pub fn count_echelon(n: usize) -> Result<BigUint> {
    let all = RookMatrix::all(n)?;
    Ok(BigUint::from(
        all.iter()
            .filter(|m| m.is_upper_triangular() && m.is_generalized_reduced_echelon())
            .count(),
    ))
}

/// Brute-force count of generalized reduced echelon rook matrices (the
/// planar rook monoid) of size `n`.
pub fn count_planar(n: usize) -> Result<BigUint> {
    let all = RookMatrix::all(n)?;
    Ok(BigUint::from(all.iter().filter(|m| m.is_generalized_reduced_echelon()).count()))
}

/// The table `b_m` (`0 <= m <= n`) and `b_{p,q}` (`0 <= q <= p <= n-1`)
/// where `b_{p,q}` counts elements with domain in `{n-q..n}` and range in
/// `{n-p..n}`. Those counts do not depend on `n` once `p, q < n`.
#[derive(Clone, Debug)]
pub struct OrderTable {
    n: usize,
    b: Vec<BigUint>,
    bpq: Vec<Vec<BigUint>>,
}

impl OrderTable {
    /// Builds the table bottom-up:
    ///
    /// - `b_0 = 1`, `b_1 = 2`;
    /// - `b_{p,0} = p + 2`;
    /// - `b_{p,q} = 1 + sum_{r=0}^{q} b_{p-1,r}` for `1 <= q < p`;
    /// - `b_{p,p} = b_{p+1}`;
    /// - `b_m = 2 b_{m-1} + 1 + sum_{q=0}^{m-3} b_{m-2,q}` for `m >= 2`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRange("the b_{p,q} table needs n >= 1".into()));
        }
        let mut b = vec![BigUint::one(), BigUint::from(2u32)];
        let mut bpq: Vec<Vec<BigUint>> = Vec::with_capacity(n);
        for m in 2..=n {
            // row m-2; its diagonal entry b_{m-2,m-2} = b_{m-1} is already known
            Self::push_row(&mut bpq, &b);
            let p = m - 2;
            let tail: BigUint = bpq[p][..p].iter().sum();
            b.push(&b[m - 1] * 2u32 + 1u32 + tail);
        }
        b.truncate(n + 1);
        while bpq.len() < n {
            Self::push_row(&mut bpq, &b);
        }
        Ok(OrderTable { n, b, bpq })
    }

    fn push_row(bpq: &mut Vec<Vec<BigUint>>, b: &[BigUint]) {
        let p = bpq.len();
        let mut row = Vec::with_capacity(p + 1);
        row.push(BigUint::from(p + 2));
        for q in 1..p {
            let s: BigUint = bpq[p - 1][..=q].iter().sum();
            row.push(s + 1u32);
        }
        if p > 0 {
            row.push(b[p + 1].clone());
        }
        bpq.push(row);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_n = |B_n|`.
    pub fn order(&self) -> &BigUint {
        &self.b[self.n]
    }

    /// `b_m` for `m <= n`.
    pub fn b(&self, m: usize) -> Option<&BigUint> {
        self.b.get(m)
    }

    /// `b_{p,q}` for `q <= p <= n - 1`.
    pub fn bpq(&self, p: usize, q: usize) -> Option<&BigUint> {
        self.bpq.get(p).and_then(|row| row.get(q))
    }

    /// Evaluates `1 + sum_{r=0}^{q} b_{p-1,r}` for `1 <= p`, `q <= p`,
    /// reading `b_{p-1,r}` with `r > p-1` as `b_{p-1,p-1}` (a domain point
    /// below every admissible range point can never be used). With `q = p`
    /// this gives `b_{p,p}` from the sum rule alone.
    pub fn bpq_by_sum(&self, p: usize, q: usize) -> Option<BigUint> {
        if p == 0 || q > p || p >= self.n {
            return None;
        }
        let row = &self.bpq[p - 1];
        let s: BigUint = (0..=q).map(|r| &row[r.min(p - 1)]).sum();
        Some(s + 1u32)
    }
}

/// `|B_n|` through the `b_{p,q}` recursion.
pub fn order_recursive(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    OrderTable::new(n).expect("n >= 1").order().clone()
}

/// A sequence of `n + 1` steps `+1` and `n + 1` steps `-1` whose partial
/// sums never go negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BallotSequence {
    n: usize,
    steps: Vec<i8>,
}

impl BallotSequence {
    pub fn new(n: usize, steps: Vec<i8>) -> Result<Self> {
        if steps.len() != 2 * n + 2 {
            return Err(Error::InvalidBallot(format!(
                "length {} but n = {n} needs {}",
                steps.len(),
                2 * n + 2
            )));
        }
        let mut sum = 0i64;
        for (i, &a) in steps.iter().enumerate() {
            if a != 1 && a != -1 {
                return Err(Error::InvalidBallot(format!("entry {} is {a}", i + 1)));
            }
            sum += a as i64;
            if sum < 0 {
                return Err(Error::InvalidBallot(format!("prefix sum negative at position {}", i + 1)));
            }
        }
        if sum != 0 {
            return Err(Error::InvalidBallot(format!("total is {sum}, expected 0")));
        }
        Ok(BallotSequence { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }
}

impl FromStr for BallotSequence {
    type Err = Error;

    /// `'1'` is `+1` and `'0'` is `-1`, e.g. `"1010"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut steps = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            steps.push(match c {
                '1' => 1,
                '0' => -1,
                _ => {
                    return Err(Error::Syntax { position: i, message: format!("unexpected {c:?}") })
                }
            });
        }
        if steps.len() < 2 || steps.len() % 2 != 0 {
            return Err(Error::InvalidBallot(format!("length {} is not 2n + 2", steps.len())));
        }
        BallotSequence::new(steps.len() / 2 - 1, steps)
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.steps {
            f.write_str(if a > 0 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Encodes `f ∈ B_n` as blocks `+^{s'_1} -^{t'_1} ... +^{s'_{k+1}} -^{t'_{k+1}}`
/// with `s'_i = s_i - s_{i-1}`, using `s_0 = 0` and `s_{k+1} = n + 1`
/// (likewise for `t`). The zero map becomes `n+1` pluses then `n+1` minuses.
pub fn ballot_encode(f: &PartialMap) -> Result<BallotSequence> {
    if !f.in_bn() {
        return Err(Error::NotInBn(f.to_string()));
    }
    let n = f.n();
    let mut steps = Vec::with_capacity(2 * n + 2);
    let (mut ps, mut pt) = (0, 0);
    let ends = f.pairs().iter().copied().chain(std::iter::once((n + 1, n + 1)));
    for (s, t) in ends {
        steps.extend(std::iter::repeat_n(1, s - ps));
        steps.extend(std::iter::repeat_n(-1, t - pt));
        ps = s;
        pt = t;
    }
    BallotSequence::new(n, steps)
}

/// Inverse of [`ballot_encode`]: runs of `+1` give domain gaps, the runs of
/// `-1` that follow give range gaps; the final pair of runs is dropped.
pub fn ballot_decode(b: &BallotSequence) -> Result<PartialMap> {
    let steps = &b.steps;
    let mut runs: Vec<(i8, usize)> = Vec::new();
    for &a in steps {
        match runs.last_mut() {
            Some((sign, len)) if *sign == a => *len += 1,
            _ => runs.push((a, 1)),
        }
    }
    // prefix sums force a leading +1 run and a trailing -1 run
    if runs.first().map(|r| r.0) != Some(1) || runs.last().map(|r| r.0) != Some(-1) {
        return Err(Error::InvalidBallot("must start with +1 and end with -1".into()));
    }
    let mut pairs = Vec::with_capacity(runs.len() / 2);
    let (mut s, mut t) = (0, 0);
    for chunk in runs.chunks(2).take(runs.len() / 2 - 1) {
        s += chunk[0].1;
        t += chunk[1].1;
        pairs.push((s, t));
    }
    let f = PartialMap::new(b.n, pairs)?;
    debug_assert!(f.in_bn());
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::one());
        assert_eq!(catalan(1), BigUint::one());
        // c_3 = c_0 c_2 + c_1 c_1 + c_2 c_0 = 2 + 1 + 2
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(6), BigUint::from(132u32));
        assert_eq!(catalan(12), BigUint::from(208_012u32));
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_bn(0), BigUint::one());
        assert_eq!(order_bn(1), BigUint::from(2u32));
        assert_eq!(order_bn(11), catalan(12));
        assert_eq!(order_recursive(1), BigUint::from(2u32));
        assert_eq!(order_recursive(2), BigUint::from(5u32));
        assert_eq!(order_prn(3), BigUint::from(20u32));
    }

    #[test]
    fn enumeration_small() {
        let b1: Vec<_> = enumerate_bn(1).unwrap().collect();
        assert_eq!(b1, vec![PartialMap::zero(1).unwrap(), PartialMap::identity(1).unwrap()]);
        assert_eq!(enumerate_bn(2).unwrap().count(), 5);
        assert_eq!(enumerate_bn(3).unwrap().count(), 14);
        assert_eq!(enumerate_bn(0).unwrap().count(), 1);
        assert!(matches!(enumerate_bn(15), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all: Vec<_> = enumerate_bn(5).unwrap().collect();
        let keys: Vec<_> = all.iter().map(|f| (f.domain().mask(), f.range().mask())).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(PartialMap::in_bn));
    }

    #[test]
    fn table_invariants() {
        let t = OrderTable::new(12).unwrap();
        for p in 0..12 {
            assert_eq!(t.bpq(p, 0).unwrap(), &BigUint::from(p + 2));
            assert_eq!(t.bpq(p, p).unwrap(), t.b(p + 1).unwrap());
        }
        for p in 1..11 {
            assert_eq!(t.bpq_by_sum(p, p).unwrap(), *t.b(p + 1).unwrap());
        }
        assert!(OrderTable::new(0).is_err());
    }

    #[test]
    fn ballot_examples() {
        let id = PartialMap::identity(1).unwrap();
        assert_eq!(ballot_encode(&id).unwrap().steps(), &[1, -1, 1, -1]);
        let z = PartialMap::zero(1).unwrap();
        assert_eq!(ballot_encode(&z).unwrap().steps(), &[1, 1, -1, -1]);
        assert_eq!(ballot_encode(&z).unwrap().to_string(), "1100");
        let not_bn = PartialMap::new(2, [(1, 2)]).unwrap();
        assert!(matches!(ballot_encode(&not_bn), Err(Error::NotInBn(_))));
    }

    #[test]
    fn ballot_parse_rejects() {
        assert!(matches!("1001".parse::<BallotSequence>(), Err(Error::InvalidBallot(_))));
        assert!(matches!("0110".parse::<BallotSequence>(), Err(Error::InvalidBallot(_))));
        assert!(matches!("111".parse::<BallotSequence>(), Err(Error::InvalidBallot(_))));
        assert!(matches!("1x10".parse::<BallotSequence>(), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(BallotSequence::new(1, vec![1, 1, 1, -1]), Err(Error::InvalidBallot(_))));
        let b: BallotSequence = "110100".parse().unwrap();
        assert_eq!(b.n(), 2);
        assert_eq!(ballot_decode(&b).unwrap(), PartialMap::new(2, [(2, 1)]).unwrap());
    }

    #[test]
    fn ballot_round_trip_b5() {
        let mut n = 0;
        for f in enumerate_bn(5).unwrap() {
            let b = ballot_encode(&f).unwrap();
            assert_eq!(ballot_decode(&b).unwrap(), f);
            n += 1;
        }
        assert_eq!(n, 132);
    }

    #[test]
    fn echelon_counts() {
        assert_eq!(count_echelon(0).unwrap(), BigUint::one());
        assert_eq!(count_echelon(4).unwrap(), BigUint::from(42u32));
        assert_eq!(count_planar(3).unwrap(), BigUint::from(20u32));
        assert!(count_echelon(9).is_err());
        assert!(BigUint::from(0u32) < count_planar(1).unwrap());
    }
}
