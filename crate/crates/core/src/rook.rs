//! Injective partial maps of `{1..n}` and their rook-matrix form.
//!
//! A [`PartialMap`] stores its graph as `(s, f(s))` pairs sorted by `s`.
//! Products follow matrix order: `compose(g, f)` is `g ∘ f`, i.e. `f` is
//! applied first, and `to_matrix(g ∘ f) = to_matrix(g) · to_matrix(f)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::{check_n, parse_increasing, parse_list, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialMap {
    /// Validates and normalizes `pairs` into a map of `{1..n}`.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_n(n)?;
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        let mut seen_dom = 0u64;
        let mut seen_rng = 0u64;
        for &(s, t) in &pairs {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if seen_dom & 1 << (s - 1) != 0 {
                return Err(Error::DuplicateDomain(s));
            }
            if seen_rng & 1 << (t - 1) != 0 {
                return Err(Error::DuplicateRange(t));
            }
            seen_dom |= 1 << (s - 1);
            seen_rng |= 1 << (t - 1);
        }
        pairs.sort_unstable();
        Ok(PartialMap { n, pairs })
    }

    /// The order-preserving map sending the i-th element of `domain` to the
    /// i-th element of `range`.
    pub fn from_sets(domain: &Subset, range: &Subset) -> Result<Self> {
        if domain.n() != range.n() {
            return Err(Error::DimensionMismatch { left: domain.n(), right: range.n() });
        }
        if domain.len() != range.len() {
            return Err(Error::CardinalityMismatch { left: domain.len(), right: range.len() });
        }
        Ok(PartialMap {
            n: domain.n(),
            pairs: domain.iter().zip(range.iter()).collect(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(PartialMap { n, pairs: (1..=n).map(|i| (i, i)).collect() })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(PartialMap { n, pairs: Vec::new() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(s, f(s))` sorted by `s`.
    #[inline]
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of points in the domain (the rank of the matrix).
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn domain(&self) -> Subset {
        Subset::from_mask_unchecked(self.n, self.pairs.iter().fold(0, |m, &(s, _)| m | 1 << (s - 1)))
    }

    pub fn range(&self) -> Subset {
        Subset::from_mask_unchecked(self.n, self.pairs.iter().fold(0, |m, &(_, t)| m | 1 << (t - 1)))
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |&(s, _)| s)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// Image of a set of points, or `None` if some point is outside the domain.
    pub fn image(&self, set: &Subset) -> Option<Subset> {
        let mut mask = 0u64;
        for x in set.iter() {
            mask |= 1 << (self.apply(x)? - 1);
        }
        Some(Subset::from_mask_unchecked(self.n, mask))
    }

    /// `self ∘ f`: apply `f` first, then `self`.
    pub fn compose(&self, f: &PartialMap) -> Result<PartialMap> {
        compose(self, f)
    }

    pub fn is_order_preserving(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 < w[1].1)
    }

    pub fn is_order_decreasing(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| t <= s)
    }

    /// Membership in the planar upper triangular rook monoid.
    pub fn in_bn(&self) -> bool {
        self.is_order_preserving() && self.is_order_decreasing()
    }

    pub fn to_matrix(&self) -> RookMatrix {
        let mut rows = vec![0u64; self.n];
        for &(s, t) in &self.pairs {
            rows[t - 1] |= 1 << (s - 1);
        }
        RookMatrix { n: self.n, rows }
    }

    pub fn from_matrix(m: &RookMatrix) -> PartialMap {
        let mut pairs = Vec::new();
        for (i, &row) in m.rows.iter().enumerate() {
            if row != 0 {
                pairs.push((row.trailing_zeros() as usize + 1, i + 1));
            }
        }
        pairs.sort_unstable();
        PartialMap { n: m.n, pairs }
    }

    /// Parses the bracket form `[{s1,...}->{t1,...}]`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        parse_element(n, text)
    }

    pub fn print(&self, style: PrintStyle) -> String {
        print_element(self, style)
    }
}

/// `g ∘ f`, defined at `x` exactly when `x ∈ D(f)` and `f(x) ∈ D(g)`.
pub fn compose(g: &PartialMap, f: &PartialMap) -> Result<PartialMap> {
    if g.n != f.n {
        return Err(Error::DimensionMismatch { left: g.n, right: f.n });
    }
    let pairs = f
        .pairs
        .iter()
        .filter_map(|&(x, y)| g.apply(y).map(|z| (x, z)))
        .collect();
    Ok(PartialMap { n: f.n, pairs })
}

/// An `n × n` 0/1 matrix with at most one 1 in each row and column.
/// Row `i` is stored as a bitmask whose bit `j - 1` is entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl RookMatrix {
    pub fn new(entries: &[Vec<u8>]) -> Result<Self> {
        let n = entries.len();
        check_n(n)?;
        let mut rows = Vec::with_capacity(n);
        let mut cols = 0u64;
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotARookMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            let mut bits = 0u64;
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => bits |= 1 << j,
                    other => {
                        return Err(Error::NotARookMatrix(format!(
                            "entry ({}, {}) is {other}",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
            if bits.count_ones() > 1 {
                return Err(Error::NotARookMatrix(format!("row {} has several 1s", i + 1)));
            }
            if bits & cols != 0 {
                return Err(Error::NotARookMatrix(format!(
                    "column {} has several 1s",
                    bits.trailing_zeros() + 1
                )));
            }
            cols |= bits;
            rows.push(bits);
        }
        Ok(RookMatrix { n, rows })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(RookMatrix { n, rows: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i - 1] >> (j - 1)) & 1) as u8
    }

    pub fn entries(&self) -> Vec<Vec<u8>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Ordinary matrix product; rook matrices are closed under it.
    pub fn mul(&self, other: &RookMatrix) -> Result<RookMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                if row == 0 {
                    0
                } else {
                    other.rows[row.trailing_zeros() as usize]
                }
            })
            .collect();
        Ok(RookMatrix { n: self.n, rows })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &row)| row & ((1u64 << i) - 1) == 0)
    }

    /// Generalized (row and column) reduced echelon test.
    ///
    /// Leading entries of nonzero rows move strictly right going down, leading
    /// entries of nonzero columns move strictly down going right, and every
    /// leading 1 is alone in its row and column. Zero rows and columns may sit
    /// anywhere.
    pub fn is_generalized_reduced_echelon(&self) -> bool {
        let col_mask = |j: usize| -> Vec<usize> {
            (0..self.n).filter(|&i| self.rows[i] >> j & 1 == 1).collect()
        };
        // row condition
        let mut last_col: Option<u32> = None;
        for &row in &self.rows {
            if row == 0 {
                continue;
            }
            let lead = row.trailing_zeros();
            if last_col.is_some_and(|c| lead <= c) {
                return false;
            }
            if row.count_ones() != 1 || col_mask(lead as usize).len() != 1 {
                return false;
            }
            last_col = Some(lead);
        }
        // column condition
        let mut last_row: Option<usize> = None;
        for j in 0..self.n {
            let hits = col_mask(j);
            let Some(&lead) = hits.first() else { continue };
            if last_row.is_some_and(|r| lead <= r) {
                return false;
            }
            if hits.len() != 1 || self.rows[lead].count_ones() != 1 {
                return false;
            }
            last_row = Some(lead);
        }
        true
    }

    /// Every rook matrix of size `n`, i.e. the matrix forms of the full rook
    /// monoid. There are `sum_k k! C(n,k)^2` of them.
    pub fn all(n: usize) -> Result<Vec<RookMatrix>> {
        const MAX: usize = 8;
        if n > MAX {
            return Err(Error::BoundExceeded { n, max: MAX });
        }
        let mut out = Vec::new();
        let mut rows = vec![0u64; n];
        fill_rows(n, 0, 0, &mut rows, &mut out);
        Ok(out)
    }
}

fn fill_rows(n: usize, i: usize, used: u64, rows: &mut Vec<u64>, out: &mut Vec<RookMatrix>) {
    if i == n {
        out.push(RookMatrix { n, rows: rows.clone() });
        return;
    }
    rows[i] = 0;
    fill_rows(n, i + 1, used, rows, out);
    for j in 0..n {
        if used >> j & 1 == 0 {
            rows[i] = 1 << j;
            fill_rows(n, i + 1, used | 1 << j, rows, out);
        }
    }
    rows[i] = 0;
}

impl fmt::Display for RookMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let line: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintStyle {
    /// `[{s1,...}->{t1,...}]`, the parseable form.
    Pairs,
    /// Two lines: domain on top, images below.
    TwoLine,
    /// `n` lines of space-separated 0/1.
    Matrix,
}

impl FromStr for PrintStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairs" => Ok(PrintStyle::Pairs),
            "twoline" => Ok(PrintStyle::TwoLine),
            "matrix" => Ok(PrintStyle::Matrix),
            other => Err(Error::Syntax { position: 0, message: format!("unknown style {other:?}") }),
        }
    }
}

pub fn print_element(f: &PartialMap, style: PrintStyle) -> String {
    let join = |v: Vec<usize>, sep: &str| {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
    };
    let dom: Vec<usize> = f.pairs.iter().map(|p| p.0).collect();
    let img: Vec<usize> = f.pairs.iter().map(|p| p.1).collect();
    match style {
        PrintStyle::Pairs => format!("[{{{}}}->{{{}}}]", join(dom, ","), join(img, ",")),
        PrintStyle::TwoLine => format!("{}\n{}", join(dom, " "), join(img, " ")),
        PrintStyle::Matrix => {
            let s = f.to_matrix().to_string();
            s.trim_end_matches('\n').to_string()
        }
    }
}

/// Parses `[{s1,...,sk}->{t1,...,tk}]`. The top line must be strictly
/// increasing; the bottom line lists images positionally.
pub fn parse_element(n: usize, text: &str) -> Result<PartialMap> {
    let syntax = |position: usize, message: &str| Error::Syntax { position, message: message.into() };
    let mut cursor = Cursor { text, pos: 0 };
    cursor.skip_ws();
    cursor.expect("[")?;
    cursor.skip_ws();
    let (dom_start, dom_text) = cursor.braced()?;
    let domain = parse_increasing(dom_text, dom_start)?;
    cursor.skip_ws();
    cursor.expect("->")?;
    cursor.skip_ws();
    let (img_start, img_text) = cursor.braced()?;
    let images = parse_list(img_text, img_start)?;
    cursor.skip_ws();
    cursor.expect("]")?;
    cursor.skip_ws();
    if cursor.pos != text.len() {
        return Err(syntax(cursor.pos, "trailing input"));
    }
    if domain.len() != images.len() {
        return Err(syntax(
            img_start,
            &format!("{} domain points but {} images", domain.len(), images.len()),
        ));
    }
    PartialMap::new(n, domain.into_iter().zip(images.into_iter().map(|(_, v)| v)))
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(Error::Syntax { position: self.pos, message: format!("expected {token:?}") })
        }
    }

    /// Consumes `{...}` and returns the inner text with its offset.
    fn braced(&mut self) -> Result<(usize, &'a str)> {
        self.expect("{")?;
        let start = self.pos;
        let Some(len) = self.text[start..].find('}') else {
            return Err(Error::Syntax { position: start, message: "unclosed '{'".into() });
        };
        self.pos = start + len + 1;
        Ok((start, &self.text[start..start + len]))
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_element(self, PrintStyle::Pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(n: usize, pairs: &[(usize, usize)]) -> PartialMap {
        PartialMap::new(n, pairs.iter().copied()).unwrap()
    }

    fn sigma() -> PartialMap {
        pm(5, &[(1, 1), (2, 2), (3, 4), (5, 5)])
    }

    fn g_example() -> PartialMap {
        pm(5, &[(2, 1), (3, 5), (4, 2)])
    }

    fn f_example() -> PartialMap {
        pm(5, &[(1, 1), (3, 2), (4, 3), (5, 4)])
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PartialMap::new(2, [(1, 1), (2, 1)]), Err(Error::DuplicateRange(1)));
        assert_eq!(PartialMap::new(2, [(1, 1), (1, 2)]), Err(Error::DuplicateDomain(1)));
        assert_eq!(PartialMap::new(3, [(4, 1)]), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
        assert_eq!(PartialMap::new(3, [(1, 0)]), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        let z = PartialMap::new(3, []).unwrap();
        assert!(z.is_zero());
        assert_eq!(pm(3, &[(3, 1), (1, 2)]).pairs(), &[(1, 2), (3, 1)]);
    }

    #[test]
    fn worked_composition() {
        assert_eq!(compose(&g_example(), &f_example()).unwrap(), pm(5, &[(3, 1), (4, 5), (5, 2)]));
        let f = f_example();
        assert_eq!(compose(&PartialMap::identity(5).unwrap(), &f).unwrap(), f);
        assert_eq!(compose(&f, &PartialMap::identity(5).unwrap()).unwrap(), f);
        let z = PartialMap::zero(5).unwrap();
        assert_eq!(compose(&z, &f).unwrap(), z);
        assert_eq!(
            compose(&z, &PartialMap::zero(4).unwrap()),
            Err(Error::DimensionMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn worked_matrix_product() {
        let g = g_example();
        let f = f_example();
        let gf = compose(&g, &f).unwrap();
        assert_eq!(g.to_matrix().mul(&f.to_matrix()).unwrap(), gf.to_matrix());
        assert_eq!(
            gf.to_matrix().entries(),
            vec![
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0],
            ]
        );
    }

    #[test]
    fn predicates() {
        assert!(sigma().is_order_preserving());
        assert!(PartialMap::zero(4).unwrap().is_order_preserving());
        assert!(!pm(2, &[(1, 2), (2, 1)]).is_order_preserving());
        assert!(f_example().is_order_decreasing());
        assert!(!g_example().is_order_decreasing());
        assert!(PartialMap::identity(6).unwrap().is_order_decreasing());
        assert!(f_example().in_bn());
        assert!(!g_example().in_bn());
        assert!(PartialMap::identity(6).unwrap().in_bn());
        // sigma sends 3 to 4, so it is planar but not order decreasing
        assert!(!sigma().in_bn());
    }

    #[test]
    fn sigma_matrix() {
        assert_eq!(
            sigma().to_matrix().entries(),
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1],
            ]
        );
        assert_eq!(PartialMap::from_matrix(&sigma().to_matrix()), sigma());
        assert_eq!(PartialMap::zero(3).unwrap().to_matrix(), RookMatrix::zero(3).unwrap());
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(RookMatrix::new(&[vec![1, 1], vec![0, 0]]), Err(Error::NotARookMatrix(_))));
        assert!(matches!(RookMatrix::new(&[vec![1, 0], vec![1, 0]]), Err(Error::NotARookMatrix(_))));
        assert!(matches!(RookMatrix::new(&[vec![2, 0], vec![0, 0]]), Err(Error::NotARookMatrix(_))));
        assert!(matches!(RookMatrix::new(&[vec![1], vec![0, 0]]), Err(Error::NotARookMatrix(_))));
    }

    #[test]
    fn echelon_examples() {
        let id = PartialMap::identity(4).unwrap().to_matrix();
        assert!(id.is_generalized_reduced_echelon());
        assert!(!g_example().to_matrix().is_generalized_reduced_echelon());
        assert!(sigma().to_matrix().is_generalized_reduced_echelon());
    }

    #[test]
    fn echelon_count_n3() {
        let all = RookMatrix::all(3).unwrap();
        assert_eq!(all.len(), 34);
        assert_eq!(all.iter().filter(|m| m.is_generalized_reduced_echelon()).count(), 20);
    }

    #[test]
    fn parse_print() {
        assert_eq!(parse_element(5, "[{1,3,4,5}->{1,2,3,4}]").unwrap(), f_example());
        assert_eq!(parse_element(5, "[{}->{}]").unwrap(), PartialMap::zero(5).unwrap());
        assert_eq!(PartialMap::zero(5).unwrap().to_string(), "[{}->{}]");
        assert_eq!(g_example().to_string(), "[{2,3,4}->{1,5,2}]");
        assert_eq!(parse_element(5, " [ {2, 3,4} -> {1,5,2} ] ").unwrap(), g_example());
        assert_eq!(sigma().print(PrintStyle::TwoLine), "1 2 3 5\n1 2 4 5");
        assert_eq!(
            PartialMap::identity(2).unwrap().print(PrintStyle::Matrix),
            "1 0\n0 1"
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let pos = |t: &str| match parse_element(5, t) {
            Err(Error::Syntax { position, .. }) => position,
            other => panic!("expected syntax error, got {other:?}"),
        };
        assert_eq!(pos("{1}->{1}]"), 0);
        assert_eq!(pos("[{1,2}->{1}]"), 9);
        assert_eq!(pos("[{2,1}->{1,2}]"), 4);
        assert_eq!(pos("[{1}=>{1}]"), 4);
        assert_eq!(pos("[{1}->{1}]x"), 10);
        assert_eq!(pos("[{1}->{a}]"), 7);
        assert_eq!(parse_element(5, "[{1,2}->{1,1}]"), Err(Error::DuplicateRange(1)));
    }
}
