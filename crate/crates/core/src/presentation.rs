//! Generators `l_i`, `e_j`, words over them, and standard words.
//!
//! A word `g_1 g_2 ... g_k` stands for the product `g_1 g_2 ... g_k` in the
//! monoid, where products are composites of partial maps in matrix order:
//! `g_k` acts first. Multiplying a standard word by a generator on either
//! side is done with the case tables in [`mul_std_right`] and
//! [`mul_std_left`], and [`rewrite`] folds a whole word through them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rook::PartialMap;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `l_i`: sends `i+1` to `i`, drops `i`, fixes the rest.
    L(usize),
    /// `e_j`: the identity with `j` removed from the domain.
    E(usize),
    One,
}

impl Generator {
    /// Checks the index against `n`: `1 <= i <= n-1` for `l_i`, `1 <= j <= n` for `e_j`.
    pub fn check(self, n: usize) -> Result<()> {
        let (index, max) = match self {
            Generator::L(i) => (i, n.saturating_sub(1)),
            Generator::E(j) => (j, n),
            Generator::One => return Ok(()),
        };
        if index == 0 || index > max {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(i) => write!(f, "l{i}"),
            Generator::E(j) => write!(f, "e{j}"),
            Generator::One => f.write_str("1"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let syntax = |message: String| Error::Syntax { position: 0, message };
        if token == "1" {
            return Ok(Generator::One);
        }
        let (kind, digits) = token.split_at(token.chars().next().map_or(0, char::len_utf8));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(format!("expected l<i>, e<j> or 1, found {token:?}")));
        }
        let index: usize = digits.parse().map_err(|_| syntax(format!("index too large in {token:?}")))?;
        match kind {
            "l" => Ok(Generator::L(index)),
            "e" => Ok(Generator::E(index)),
            _ => Err(syntax(format!("expected l<i>, e<j> or 1, found {token:?}"))),
        }
    }
}

/// The partial map a generator stands for in `B_n`.
pub fn concrete_generator(g: Generator, n: usize) -> Result<PartialMap> {
    g.check(n)?;
    let pairs: Vec<(usize, usize)> = match g {
        Generator::L(i) => (1..=n).filter(|&x| x != i).map(|x| (x, if x == i + 1 { i } else { x })).collect(),
        Generator::E(j) => (1..=n).filter(|&x| x != j).map(|x| (x, x)).collect(),
        Generator::One => (1..=n).map(|x| (x, x)).collect(),
    };
    PartialMap::new(n, pairs)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    symbols: Vec<Generator>,
}

impl Word {
    pub fn new(n: usize, symbols: Vec<Generator>) -> Result<Self> {
        crate::subset::check_n(n)?;
        for g in &symbols {
            g.check(n)?;
        }
        Ok(Word { n, symbols })
    }

    /// Parses whitespace-separated tokens such as `"e2 l1 e1"`. Positions in
    /// syntax errors are byte offsets into `text`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        crate::subset::check_n(n)?;
        let mut symbols = Vec::new();
        let mut rest = text;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let offset = text.len() - rest.len() + start;
            let token_len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            let token = &rest[start..start + token_len];
            let g: Generator = token.parse().map_err(|e| match e {
                Error::Syntax { message, .. } => Error::Syntax { position: offset, message },
                other => other,
            })?;
            g.check(n)?;
            symbols.push(g);
            rest = &rest[start + token_len..];
        }
        Ok(Word { n, symbols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[Generator] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word { n: self.n, symbols })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Product of the word's generators as a partial map.
pub fn eval_word(w: &Word) -> Result<PartialMap> {
    let mut acc = PartialMap::identity(w.n)?;
    for &g in &w.symbols {
        acc = acc.compose(&concrete_generator(g, w.n)?)?;
    }
    Ok(acc)
}

/// The normal form `E_T L^{S,T} E_S`, recorded by the pair `(S, T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardWord {
    s: Subset,
    t: Subset,
}

impl StandardWord {
    /// Requires `T <= S` (equal sizes, `t_j <= s_j`).
    pub fn new(s: Subset, t: Subset) -> Result<Self> {
        if s.n() != t.n() {
            return Err(Error::DimensionMismatch { left: s.n(), right: t.n() });
        }
        if !t.leq_unchecked(&s) {
            return Err(Error::InvalidStandardWord(format!("{t} is not below {s}")));
        }
        Ok(StandardWord { s, t })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let full = Subset::full(n)?;
        Ok(StandardWord { s: full, t: full })
    }

    pub fn zero(n: usize) -> Result<Self> {
        let empty = Subset::empty(n)?;
        Ok(StandardWord { s: empty, t: empty })
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn s(&self) -> Subset {
        self.s
    }

    pub fn t(&self) -> Subset {
        self.t
    }

    /// Image of `x` under the element, if `x` is in `S`.
    fn image_of(&self, x: usize) -> Option<usize> {
        self.s.position(x).map(|c| self.t.iter().nth(c).expect("equal sizes"))
    }

    /// Preimage of `y`, if `y` is in `T`.
    fn preimage_of(&self, y: usize) -> Option<usize> {
        self.t.position(y).map(|c| self.s.iter().nth(c).expect("equal sizes"))
    }
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W^{}_{}", self.s, self.t)
    }
}

/// The partial map with domain `S`, range `T`, `s_j -> t_j`.
pub fn std_to_element(w: &StandardWord) -> PartialMap {
    PartialMap::from_sets(&w.s, &w.t).expect("standard words have equal-size S and T")
}

pub fn element_to_std(f: &PartialMap) -> Result<StandardWord> {
    if !f.in_bn() {
        return Err(Error::NotInBn(f.to_string()));
    }
    StandardWord::new(f.domain(), f.range())
}

/// The generator word `E_T L^{S,T} E_S`, with `E_X` the product of `e_u`
/// over `u` outside `X`, `L^{S,T} = L^{s_k,t_k} ... L^{s_1,t_1}` and
/// `L^{a,b} = l_b l_{b+1} ... l_{a-1}`.
pub fn expand_std(w: &StandardWord) -> Word {
    let n = w.n();
    let mut symbols: Vec<Generator> = w.t.complement().iter().map(Generator::E).collect();
    let pairs: Vec<(usize, usize)> = w.s.iter().zip(w.t.iter()).collect();
    for &(a, b) in pairs.iter().rev() {
        symbols.extend((b..a).map(Generator::L));
    }
    symbols.extend(w.s.complement().iter().map(Generator::E));
    Word { n, symbols }
}

fn remove(x: Subset, e: usize) -> Subset {
    x.without(e)
}

fn insert(x: Subset, e: usize) -> Subset {
    x.with(e)
}

/// `W g`, multiplication by a generator on the right.
pub fn mul_std_right(w: &StandardWord, g: Generator) -> Result<StandardWord> {
    g.check(w.n())?;
    let (s, t) = (w.s, w.t);
    let (s2, t2) = match g {
        Generator::One => (s, t),
        Generator::L(i) => match (s.contains(i), s.contains(i + 1)) {
            (false, false) => (s, t),
            // i + 1 is mapped to t_{c+1}
            (true, true) => (remove(s, i), remove(t, w.image_of(i + 1).expect("i+1 in S"))),
            (true, false) => (insert(remove(s, i), i + 1), t),
            (false, true) => (remove(s, i + 1), remove(t, w.image_of(i + 1).expect("i+1 in S"))),
        },
        Generator::E(i) => match w.image_of(i) {
            None => (s, t),
            Some(tc) => (remove(s, i), remove(t, tc)),
        },
    };
    Ok(StandardWord { s: s2, t: t2 })
}

/// `g W`, multiplication by a generator on the left.
pub fn mul_std_left(g: Generator, w: &StandardWord) -> Result<StandardWord> {
    g.check(w.n())?;
    let (s, t) = (w.s, w.t);
    let (s2, t2) = match g {
        Generator::One => (s, t),
        Generator::L(i) => match (t.contains(i), t.contains(i + 1)) {
            (false, false) => (s, t),
            // s_c is mapped to i
            (true, true) => (remove(s, w.preimage_of(i).expect("i in T")), remove(t, i + 1)),
            (true, false) => (remove(s, w.preimage_of(i).expect("i in T")), remove(t, i)),
            (false, true) => (s, insert(remove(t, i + 1), i)),
        },
        Generator::E(i) => match w.preimage_of(i) {
            None => (s, t),
            Some(sc) => (remove(s, sc), remove(t, i)),
        },
    };
    Ok(StandardWord { s: s2, t: t2 })
}

/// Normal form of a word: folds its symbols through [`mul_std_right`],
/// starting from the identity.
pub fn rewrite(w: &Word) -> Result<StandardWord> {
    rewrite_from(StandardWord::identity(w.n)?, w)
}

/// Continues a fold from `start`; `rewrite(a ++ b) = rewrite_from(rewrite(a), b)`.
pub fn rewrite_from(start: StandardWord, w: &Word) -> Result<StandardWord> {
    if start.n() != w.n {
        return Err(Error::DimensionMismatch { left: start.n(), right: w.n });
    }
    w.symbols.iter().try_fold(start, |acc, &g| mul_std_right(&acc, g))
}

/// Every pair `(S, T)` with `T <= S`, ordered by `S` then `T`.
pub fn all_standard_words(n: usize) -> Result<impl Iterator<Item = StandardWord>> {
    crate::enumeration::enumerate_bn(n).map(|it| it.map(|f| element_to_std(&f).expect("enumeration stays in B_n")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFamily {
    /// 1 to 7, in the order of the defining relations.
    pub index: usize,
    pub name: &'static str,
    pub instances: usize,
    /// Each failing instance, as its chain of words.
    pub failures: Vec<Vec<Word>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub families: Vec<RelationFamily>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures.is_empty())
    }

    pub fn instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }
}

/// Evaluates every instance of the seven defining relations at `n` and
/// records those whose sides disagree as partial maps.
pub fn check_relations(n: usize) -> Result<RelationReport> {
    crate::subset::check_n(n)?;
    use Generator::{E, L};
    let ls = || 1..n;
    let es = || 1..=n;
    let mut chains: [Vec<Vec<Vec<Generator>>>; 7] = Default::default();
    for i in es() {
        chains[0].push(vec![vec![E(i), E(i)], vec![E(i)]]);
    }
    for i in ls().filter(|&i| i + 1 < n) {
        chains[1].push(vec![
            vec![L(i), L(i + 1), L(i)],
            vec![L(i), L(i + 1)],
            vec![L(i + 1), L(i), L(i + 1)],
        ]);
    }
    for i in ls() {
        chains[2].push(vec![vec![L(i), E(i)], vec![L(i)], vec![E(i + 1), L(i)]]);
        chains[3].push(vec![
            vec![L(i), E(i + 1)],
            vec![E(i), E(i + 1)],
            vec![E(i), L(i)],
            vec![L(i), L(i), L(i)],
            vec![L(i), L(i)],
        ]);
    }
    for j in ls() {
        for i in es().filter(|&i| i != j && i != j + 1) {
            chains[4].push(vec![vec![E(i), L(j)], vec![L(j), E(i)]]);
        }
        for i in ls().filter(|&i| i.abs_diff(j) >= 2) {
            chains[5].push(vec![vec![L(i), L(j)], vec![L(j), L(i)]]);
        }
    }
    for i in es() {
        for j in es() {
            chains[6].push(vec![vec![E(i), E(j)], vec![E(j), E(i)]]);
        }
    }
    const NAMES: [&str; 7] = [
        "e_i^2 = e_i",
        "l_i l_{i+1} l_i = l_i l_{i+1} = l_{i+1} l_i l_{i+1}",
        "l_i e_i = l_i = e_{i+1} l_i",
        "l_i e_{i+1} = e_i e_{i+1} = e_i l_i = l_i^3 = l_i^2",
        "e_i l_j = l_j e_i (i != j, j+1)",
        "l_i l_j = l_j l_i (|i-j| >= 2)",
        "e_i e_j = e_j e_i",
    ];
    let mut families = Vec::with_capacity(7);
    for (idx, family) in chains.into_iter().enumerate() {
        let instances = family.len();
        let mut failures = Vec::new();
        for chain in family {
            let words = chain.into_iter().map(|s| Word::new(n, s)).collect::<Result<Vec<_>>>()?;
            let first = eval_word(&words[0])?;
            let mut ok = true;
            for w in &words[1..] {
                ok &= eval_word(w)? == first;
            }
            if !ok {
                failures.push(words);
            }
        }
        families.push(RelationFamily { index: idx + 1, name: NAMES[idx], instances, failures });
    }
    Ok(RelationReport { n, families })
}
