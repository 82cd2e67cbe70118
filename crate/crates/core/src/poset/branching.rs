//! Restricting cyclic modules to a smaller monoid `B_t ⊂ B_n` (maps fixing
//! `t+1..n` pointwise) and splitting them into indecomposable summands.
//!
//! `predict` functions return the decomposition from the closed formulas;
//! `compute` functions group the basis directly and check each group is a
//! `B_t`-submodule isomorphic to the claimed summand.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{dim_mixed, dim_single, mixed_subset};
use crate::arith::binomial;
use crate::enumeration::catalan;
use crate::error::{Error, Result};
use crate::presentation::{concrete_generator, Generator};
use crate::subset::{full_mask, Subset};
use crate::MAX_N;

/// Identifies a summand up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandLabel {
    /// `W^m_k`, the span below `{m+1, ..., m+k}`.
    Interval { m: usize, k: usize },
    /// The span below an arbitrary subset, e.g. `{2, 4, ..., 2k}`.
    Below(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchSummand {
    pub label: SummandLabel,
    pub multiplicity: BigUint,
    pub dimension: BigUint,
}

fn check_interval_params(m: usize, k: usize, l: usize) -> Result<()> {
    if !(1 <= l && l < k) || m < 1 || m + k > MAX_N {
        return Err(Error::InvalidRange(format!(
            "need 1 <= l < k, m >= 1 and m + k <= {MAX_N}; got m = {m}, k = {k}, l = {l}"
        )));
    }
    Ok(())
}

/// Decomposition of `W^m_k` restricted to `B_{m+l}`:
/// `⊕_{a=0}^{k-l} C(k-l, a) W^{m+l-k+a}_{k-a}`.
///
/// Terms with `m + l - k + a < 0` are zero modules and are omitted.
pub fn branch_predict(m: usize, k: usize, l: usize) -> Result<Vec<BranchSummand>> {
    check_interval_params(m, k, l)?;
    let mut out = Vec::new();
    for a in 0..=k - l {
        let Some(mm) = (m + l + a).checked_sub(k) else { continue };
        let kk = k - a;
        out.push(BranchSummand {
            label: SummandLabel::Interval { m: mm, k: kk },
            multiplicity: binomial((k - l) as i64, a as i64),
            dimension: binomial((mm + kk) as i64, kk as i64),
        });
    }
    out.sort();
    Ok(out)
}

/// Groups the basis `{v_T : T a k-subset of {1..m+k}}` of `W^m_k` by
/// `T ∩ {m+l+1..m+k}` and identifies each group as a `B_{m+l}`-module.
pub fn branch_compute(m: usize, k: usize, l: usize) -> Result<Vec<BranchSummand>> {
    check_interval_params(m, k, l)?;
    let n = m + k;
    let t = m + l;
    let tail = full_mask(n) & !full_mask(t);
    let basis = Subset::interval(m, k, n)?.down_set();
    let mut groups: BTreeMap<u64, Vec<Subset>> = BTreeMap::new();
    for s in basis {
        groups.entry(s.mask() & tail).or_default().push(s);
    }
    let mut counts: BTreeMap<SummandLabel, (BigUint, BigUint)> = BTreeMap::new();
    for (fixed, group) in groups {
        let head = identify_group(&group, fixed, n, t)?;
        let kk = head.len();
        let mm = t - kk;
        if head.mask() != Subset::interval(mm, kk, t)?.mask() {
            return Err(Error::Decomposition(format!("group generated by {head} is not an interval")));
        }
        let entry = counts
            .entry(SummandLabel::Interval { m: mm, k: kk })
            .or_insert_with(|| (BigUint::from(0u32), BigUint::from(group.len())));
        entry.0 += 1u32;
    }
    Ok(collect(counts))
}

/// Decomposition of `W_k = span below {2, 4, ..., 2k}` restricted to
/// `B_{2(k-1)}`: two copies of `W_{k-1}` plus the span below `S_{k,k-2}`.
pub fn branch_even(k: usize) -> Result<Vec<BranchSummand>> {
    check_even(k)?;
    let mut out = vec![
        BranchSummand {
            label: SummandLabel::Below((1..k).map(|j| 2 * j).collect()),
            multiplicity: BigUint::from(2u32),
            dimension: catalan(k),
        },
        BranchSummand {
            label: SummandLabel::Below(mixed_subset(k, k - 2)?.to_vec()),
            multiplicity: BigUint::from(1u32),
            dimension: dim_mixed(k, k - 2)?,
        },
    ];
    out.sort();
    Ok(out)
}

/// Groups the basis of `W_k` by membership of `2k` and `2k - 1` and
/// identifies each group as a `B_{2(k-1)}`-module.
pub fn branch_even_compute(k: usize) -> Result<Vec<BranchSummand>> {
    check_even(k)?;
    let n = 2 * k;
    let t = 2 * (k - 1);
    let top = Subset::new(n, (1..=k).map(|j| 2 * j))?;
    let mut groups: BTreeMap<u64, Vec<Subset>> = BTreeMap::new();
    for s in top.down_set() {
        let key = if s.contains(2 * k) {
            1 << (2 * k - 1)
        } else if s.contains(2 * k - 1) {
            1 << (2 * k - 2)
        } else {
            0
        };
        groups.entry(key).or_default().push(s);
    }
    let mut counts: BTreeMap<SummandLabel, (BigUint, BigUint)> = BTreeMap::new();
    for (fixed, group) in groups {
        let head = identify_group(&group, fixed, n, t)?;
        let entry = counts
            .entry(SummandLabel::Below(head.to_vec()))
            .or_insert_with(|| (BigUint::from(0u32), BigUint::from(group.len())));
        entry.0 += 1u32;
    }
    Ok(collect(counts))
}

fn check_even(k: usize) -> Result<()> {
    if k < 2 || 2 * k > MAX_N {
        return Err(Error::InvalidRange(format!("need 2 <= k and 2k <= {MAX_N}, got k = {k}")));
    }
    Ok(())
}

fn collect(counts: BTreeMap<SummandLabel, (BigUint, BigUint)>) -> Vec<BranchSummand> {
    counts
        .into_iter()
        .map(|(label, (multiplicity, dimension))| BranchSummand { label, multiplicity, dimension })
        .collect()
}

/// Checks that `group` (subsets of `{1..n}` all containing exactly the
/// points `fixed` above `t`) is a `B_t`-submodule whose projection to
/// `{1..t}` is the down-set of a single subset, and returns that subset.
///
/// Since `B_t` is generated by `l_i` (`i < t`) and `e_j` (`j <= t`), closure
/// and equivariance are checked on those generators only.
fn identify_group(group: &[Subset], fixed: u64, n: usize, t: usize) -> Result<Subset> {
    let low = full_mask(t);
    let project = |s: &Subset| Subset::from_mask_unchecked(n, s.mask() & low);
    if group.iter().any(|s| s.mask() & !low != fixed) {
        return Err(Error::Decomposition("group members disagree above t".into()));
    }
    let mut projected: Vec<Subset> = group.iter().map(project).collect();
    projected.sort();
    let maximal: Vec<&Subset> = projected
        .iter()
        .filter(|s| !projected.iter().any(|u| u != *s && s.leq_unchecked(u)))
        .collect();
    let [&head] = maximal.as_slice() else {
        return Err(Error::Decomposition(format!(
            "group is not cyclic: {} maximal elements",
            maximal.len()
        )));
    };
    if head.down_set() != projected {
        return Err(Error::Decomposition(format!("group is not the down-set of {head}")));
    }

    let generators = (1..t).map(Generator::L).chain((1..=t).map(Generator::E));
    for g in generators {
        let big = concrete_generator(g, n)?;
        let small = concrete_generator(g, t)?;
        for s in group {
            match big.image(s) {
                None => {
                    if small.image(&Subset::from_mask_unchecked(t, s.mask() & low)).is_some() {
                        return Err(Error::Decomposition(format!("{g} is not equivariant at {s}")));
                    }
                }
                Some(img) => {
                    if !group.contains(&img) {
                        return Err(Error::Decomposition(format!("{g} moves {s} out of its group")));
                    }
                    let expected = small
                        .image(&Subset::from_mask_unchecked(t, s.mask() & low))
                        .map(|x| x.mask());
                    if expected != Some(img.mask() & low) {
                        return Err(Error::Decomposition(format!("{g} is not equivariant at {s}")));
                    }
                }
            }
        }
    }
    Ok(Subset::from_mask_unchecked(t, head.mask()))
}

/// Both sides of `C(m+k, k) = sum_{a=0}^{k-l} C(k-l, a) C(m+l, k-a)`.
pub fn interval_identity(m: usize, k: usize, l: usize) -> (BigUint, BigUint) {
    let lhs = binomial((m + k) as i64, k as i64);
    let rhs = (0..=k.saturating_sub(l))
        .map(|a| binomial((k - l) as i64, a as i64) * binomial((m + l) as i64, (k - a) as i64))
        .sum();
    (lhs, rhs)
}

#[allow(dead_code)]
fn summand_dimension(label: &SummandLabel) -> BigUint {
    match label {
        SummandLabel::Interval { m, k } => binomial((m + k) as i64, *k as i64),
        SummandLabel::Below(elems) => {
            let n = elems.last().copied().unwrap_or(0);
            dim_single(&Subset::new(n, elems.iter().copied()).expect("valid subset"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(m: usize, k: usize) -> SummandLabel {
        SummandLabel::Interval { m, k }
    }

    #[test]
    fn smallest_interval_case() {
        let want = vec![
            BranchSummand { label: label(0, 2), multiplicity: 1u32.into(), dimension: 1u32.into() },
            BranchSummand { label: label(1, 1), multiplicity: 1u32.into(), dimension: 2u32.into() },
        ];
        assert_eq!(branch_predict(1, 2, 1).unwrap(), want);
        assert_eq!(branch_compute(1, 2, 1).unwrap(), want);
    }

    #[test]
    fn predict_equals_compute() {
        for k in 2..=6 {
            for l in 1..k {
                for m in 1..=4 {
                    assert_eq!(branch_predict(m, k, l).unwrap(), branch_compute(m, k, l).unwrap(), "m={m} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn dimensions_add_up() {
        for k in 2..=6 {
            for l in 1..k {
                for m in 1..=4 {
                    let total: BigUint = branch_predict(m, k, l)
                        .unwrap()
                        .iter()
                        .map(|s| &s.multiplicity * &s.dimension)
                        .sum();
                    assert_eq!(total, binomial((m + k) as i64, k as i64));
                    let (lhs, rhs) = interval_identity(m, k, l);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn dimension_helper_agrees() {
        for s in branch_predict(2, 5, 2).unwrap().iter().chain(branch_even(4).unwrap().iter()) {
            assert_eq!(summand_dimension(&s.label), s.dimension);
        }
    }

    #[test]
    fn even_cases() {
        let k2 = branch_even(2).unwrap();
        assert_eq!(k2.iter().map(|s| &s.multiplicity * &s.dimension).sum::<BigUint>(), BigUint::from(5u32));
        let k3 = branch_even(3).unwrap();
        assert_eq!(k3.iter().map(|s| &s.multiplicity * &s.dimension).sum::<BigUint>(), BigUint::from(14u32));
        for k in 2..=6 {
            assert_eq!(branch_even(k).unwrap(), branch_even_compute(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(branch_predict(1, 2, 2).is_err());
        assert!(branch_predict(0, 2, 1).is_err());
        assert!(branch_compute(1, 2, 0).is_err());
        assert!(branch_even(1).is_err());
        assert!(branch_even_compute(40).is_err());
    }
}
