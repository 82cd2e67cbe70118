//! Subsets of `{1, ..., n}` stored as a single machine word.
//!
//! Element `i` lives in bit `i - 1`. Ordering of `Subset` values is by
//! `(n, mask)`, so sorting a collection of subsets of the same `n` sorts them
//! by bitmask. Enumeration helpers in the crate rely on that.

use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_N;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    n: u8,
    mask: u64,
}

pub fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        Err(Error::UnsupportedDimension(n))
    } else {
        Ok(())
    }
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

impl Subset {
    /// Builds a subset from arbitrary (possibly repeated, unordered) elements.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_n(n)?;
        let mut mask = 0u64;
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::IndexOutOfRange { index: e, n });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset { n: n as u8, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_n(n)?;
        if mask & !full_mask(n) != 0 {
            let bad = 64 - (mask & !full_mask(n)).leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Ok(Subset { n: n as u8, mask })
    }

    #[inline]
    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        debug_assert!(n <= MAX_N && mask & !full_mask(n) == 0);
        Subset { n: n as u8, mask }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_mask(n, 0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Subset::from_mask_unchecked(n, full_mask(n)))
    }

    /// `{1, ..., k}`, the least k-subset.
    pub fn initial(k: usize, n: usize) -> Result<Self> {
        check_n(n)?;
        if k > n {
            return Err(Error::InvalidRange(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Subset::from_mask_unchecked(n, full_mask(k)))
    }

    /// `{n - k + 1, ..., n}`, the greatest k-subset.
    pub fn terminal(k: usize, n: usize) -> Result<Self> {
        Self::interval(n - k.min(n), k, n)
    }

    /// `{m + 1, ..., m + k}`.
    pub fn interval(m: usize, k: usize, n: usize) -> Result<Self> {
        check_n(n)?;
        if m + k > n {
            return Err(Error::InvalidRange(format!(
                "{{{}..{}}} does not fit in n = {n}",
                m + 1,
                m + k
            )));
        }
        Ok(Subset::from_mask_unchecked(n, full_mask(k) << m))
    }

    /// Parses `"2,4,6"`; the empty string (or only whitespace) is the empty set.
    /// Elements must be strictly increasing.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let elements = parse_increasing(text, 0)?;
        Self::new(n, elements)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n() && self.mask & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.mask & !other.mask == 0
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter { mask: self.mask }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Index (0-based) of `e` in the sorted element list, if present.
    pub fn position(&self, e: usize) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        let below = self.mask & ((1u64 << (e - 1)) - 1);
        Some(below.count_ones() as usize)
    }

    pub fn with(&self, e: usize) -> Subset {
        debug_assert!(e >= 1 && e <= self.n());
        Subset { n: self.n, mask: self.mask | (1 << (e - 1)) }
    }

    pub fn without(&self, e: usize) -> Subset {
        debug_assert!(e >= 1 && e <= self.n());
        Subset { n: self.n, mask: self.mask & !(1 << (e - 1)) }
    }

    pub fn complement(&self) -> Subset {
        Subset { n: self.n, mask: full_mask(self.n()) & !self.mask }
    }

    /// Componentwise order: `self <= other` iff both are k-subsets and
    /// `t_i <= s_i` for every i. Subsets of different sizes are incomparable.
    pub fn leq(&self, other: &Subset) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Subset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        self.iter().zip(other.iter()).all(|(t, s)| t <= s)
    }

    /// Greatest lower bound of two k-subsets: the elementwise minimum.
    pub fn meet(&self, other: &Subset) -> Result<Subset> {
        self.same_n(other)?;
        if self.len() != other.len() {
            return Err(Error::CardinalityMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Subset) -> Subset {
        let mask = self
            .iter()
            .zip(other.iter())
            .fold(0u64, |m, (a, b)| m | 1 << (a.min(b) - 1));
        Subset { n: self.n, mask }
    }

    /// Every subset `T <= self`, sorted by bitmask.
    pub fn down_set(&self) -> Vec<Subset> {
        let bounds = self.to_vec();
        let mut out = Vec::new();
        fill_below(&bounds, 0, 0, 0, self.n, &mut out);
        out.sort_unstable();
        out
    }

    /// All subsets of `{1..n}` in bitmask order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Subset>> {
        check_n(n)?;
        if n > 30 {
            return Err(Error::BoundExceeded { n, max: 30 });
        }
        Ok((0..1u64 << n).map(move |mask| Subset { n: n as u8, mask }))
    }

    /// All k-subsets of `{1..n}` in bitmask order.
    pub fn with_len(n: usize, k: usize) -> Result<Vec<Subset>> {
        check_n(n)?;
        if k > n {
            return Ok(Vec::new());
        }
        Ok(Subset::terminal(k, n)?.down_set())
    }

    fn same_n(&self, other: &Subset) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
        }
        Ok(())
    }
}

fn fill_below(bounds: &[usize], idx: usize, prev: usize, mask: u64, n: u8, out: &mut Vec<Subset>) {
    if idx == bounds.len() {
        out.push(Subset { n, mask });
        return;
    }
    for t in prev + 1..=bounds[idx] {
        fill_below(bounds, idx + 1, t, mask | 1 << (t - 1), n, out);
    }
}

pub struct SubsetIter {
    mask: u64,
}

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.mask == 0 {
            return None;
        }
        let e = self.mask.trailing_zeros() as usize + 1;
        self.mask &= self.mask - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.mask.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for SubsetIter {}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Parses a comma-separated list of strictly increasing positive integers.
/// `offset` is added to reported error positions.
pub(crate) fn parse_increasing(text: &str, offset: usize) -> Result<Vec<usize>> {
    let values = parse_list(text, offset)?;
    for w in values.windows(2) {
        if w[1].1 <= w[0].1 {
            return Err(Error::Syntax {
                position: w[1].0,
                message: format!("{} does not exceed {}", w[1].1, w[0].1),
            });
        }
    }
    Ok(values.into_iter().map(|(_, v)| v).collect())
}

/// Parses a comma-separated list of positive integers, keeping the position
/// of each one.
pub(crate) fn parse_list(text: &str, offset: usize) -> Result<Vec<(usize, usize)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let token = piece.trim();
        let value: usize = token.parse().map_err(|_| Error::Syntax {
            position: pos + lead,
            message: format!("expected a positive integer, found {token:?}"),
        })?;
        if value == 0 {
            return Err(Error::Syntax {
                position: pos + lead,
                message: "indices start at 1".into(),
            });
        }
        out.push((pos + lead, value));
        pos += piece.len() + 1;
    }
    Ok(out)
}
