//! End-to-end sweeps. Each check compares a formula with an independent
//! computation and counts disagreements. Randomized checks draw from a
//! seeded ChaCha stream so failures can be replayed.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::binomial;
use crate::enumeration::{
    ballot_decode, ballot_encode, catalan, count_echelon, count_planar, enumerate_bn, order_bn, order_prn,
    order_recursive, OrderTable,
};
use crate::error::{Error, Result};
use crate::poset::{
    branch_compute, branch_even, branch_even_compute, branch_predict, catalan_identity, cyclic_span, dim_cyclic,
    dim_mixed, dim_oracle, dim_single, interval_identity, mixed_subset, ModuleVector,
};
use crate::presentation::{check_relations, element_to_std, eval_word, rewrite, Generator, Word};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Orders,
    Dims,
    Identities,
    Branching,
    Relations,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "orders" => Suite::Orders,
            "dims" => Suite::Dims,
            "identities" => Suite::Identities,
            "branching" => Suite::Branching,
            "relations" => Suite::Relations,
            _ => return Err(Error::Syntax { position: 0, message: format!("unknown suite {s:?}") }),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Reduced bounds for a quick run.
    pub small: bool,
    /// Overrides the largest `k` in the identity sweeps.
    pub kmax: Option<usize>,
    /// Overrides the largest `n` in the order and relation sweeps.
    pub nmax: Option<usize>,
}

impl Options {
    fn pick(&self, full: usize, small: usize) -> usize {
        if self.small {
            small
        } else {
            full
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<44} cases={:<8} failures={}", self.name, self.cases, self.failures)
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
}

impl Tally {
    fn check(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self, name: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), cases: self.cases, failures: self.failures }
    }
}

pub fn run(suite: Suite, opts: &Options) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Orders, Suite::Dims, Suite::Identities, Suite::Branching, Suite::Relations] {
                out.extend(run(s, opts)?);
            }
            Ok(out)
        }
        Suite::Orders => orders(opts),
        Suite::Dims => dims(opts),
        Suite::Identities => identities(opts),
        Suite::Branching => branching(opts),
        Suite::Relations => relations(opts),
    }
}

fn orders(opts: &Options) -> Result<Vec<CheckResult>> {
    let nmax = opts.nmax.unwrap_or(opts.pick(11, 8));
    let mut out = Vec::new();

    let mut t = Tally::default();
    for n in 0..=nmax {
        let counted = BigUint::from(enumerate_bn(n)?.count());
        t.check(counted == catalan(n + 1) && order_recursive(n) == counted && order_bn(n) == counted);
    }
    out.push(t.finish(format!("order of B_n, three ways, n <= {nmax}")));

    let bmax = nmax.min(opts.pick(8, 5));
    let mut t = Tally::default();
    for n in 0..=bmax {
        for f in enumerate_bn(n)? {
            let seq = ballot_encode(&f)?;
            t.check(ballot_decode(&seq)? == f);
        }
    }
    out.push(t.finish(format!("ballot encode/decode, n <= {bmax}")));

    let emax = nmax.min(opts.pick(6, 4));
    let mut t = Tally::default();
    for n in 0..=emax {
        t.check(count_echelon(n)? == catalan(n + 1));
        t.check(count_planar(n)? == order_prn(n));
    }
    out.push(t.finish(format!("echelon and planar counts, n <= {emax}")));

    let table = OrderTable::new(12)?;
    let mut t = Tally::default();
    for p in 1..=10 {
        t.check(table.bpq_by_sum(p, p).as_ref() == table.b(p + 1));
    }
    out.push(t.finish("b_{p,p} = b_{p+1}, p <= 10"));
    Ok(out)
}

fn dims(opts: &Options) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let nmax = opts.pick(10, 7);
    let mut t = Tally::default();
    for s in Subset::all(nmax)?.filter(|s| !s.is_empty()) {
        let oracle = dim_oracle(&s);
        t.check(dim_single(&s) == oracle && BigUint::from(s.down_set().len()) == oracle);
    }
    out.push(t.finish(format!("dimension formula vs oracle, n <= {nmax}")));

    let mut t = Tally::default();
    for total in 1..=16usize {
        for k in 1..=total {
            let s = Subset::interval(total - k, k, total)?;
            t.check(dim_single(&s) == binomial(total as i64, k as i64));
        }
    }
    for k in 1..=8 {
        let s = Subset::new(2 * k, (1..=k).map(|j| 2 * j))?;
        t.check(dim_single(&s) == catalan(k + 1));
    }
    for k in 2..=8 {
        for m in 2..=k {
            t.check(dim_mixed(k, m)? == dim_oracle(&mixed_subset(k, m)?));
        }
    }
    out.push(t.finish("interval, even and mixed dimensions"));

    let samples = opts.pick(1000, 100);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut t = Tally::default();
    for _ in 0..samples {
        let n = rng.gen_range(1..=7);
        let v = random_vector(&mut rng, n, 6);
        t.check(dim_cyclic(&v) == BigUint::from(cyclic_span(&v).len()));
    }
    out.push(t.finish(format!("inclusion-exclusion, {samples} random vectors")));
    Ok(out)
}

fn identities(opts: &Options) -> Result<Vec<CheckResult>> {
    let kmax = opts.kmax.unwrap_or(15);
    let mut out = Vec::new();

    let mut t = Tally::default();
    for k in 2..=kmax {
        t.check(catalan_identity(k)? == BigInt::from(catalan(k + 1)));
    }
    out.push(t.finish(format!("Catalan alternating sum, 2 <= k <= {kmax}")));

    let bound = kmax.min(12);
    let mut t = Tally::default();
    for m in 0..=bound {
        for k in 1..=bound {
            for l in 0..=k.min(bound) {
                let (lhs, rhs) = interval_identity(m, k, l);
                t.check(lhs == rhs);
            }
        }
    }
    out.push(t.finish(format!("binomial branching identity, m,k,l <= {bound}")));

    let emax = kmax.min(10);
    let mut t = Tally::default();
    for k in 2..=emax {
        t.check(crate::poset::even_branching_defect(k)?.is_zero());
    }
    out.push(t.finish(format!("c_(k+1) = 2c_k + d_(k,k-2), k <= {emax}")));
    Ok(out)
}

fn branching(opts: &Options) -> Result<Vec<CheckResult>> {
    let kmax = opts.pick(5, 4);
    let mut out = Vec::new();
    let mut t = Tally::default();
    for k in 2..=kmax {
        for l in 1..k {
            for m in 1..=3 {
                let ok = matches!(
                    (branch_predict(m, k, l), branch_compute(m, k, l)),
                    (Ok(a), Ok(b)) if a == b
                );
                t.check(ok);
            }
        }
    }
    out.push(t.finish(format!("interval branching, k <= {kmax}, m <= 3")));

    let mut t = Tally::default();
    for k in 2..=kmax {
        let ok = matches!((branch_even(k), branch_even_compute(k)), (Ok(a), Ok(b)) if a == b);
        t.check(ok);
    }
    out.push(t.finish(format!("even branching, k <= {kmax}")));
    Ok(out)
}

fn relations(opts: &Options) -> Result<Vec<CheckResult>> {
    let nmax = opts.nmax.unwrap_or(opts.pick(8, 5));
    let mut out = Vec::new();
    let mut t = Tally::default();
    for n in 0..=nmax {
        let report = check_relations(n)?;
        for family in &report.families {
            for _ in 0..family.instances - family.failures.len() {
                t.check(true);
            }
            for _ in &family.failures {
                t.check(false);
            }
        }
    }
    out.push(t.finish(format!("defining relations, n <= {nmax}")));

    let samples = opts.pick(10_000, 1000);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut t = Tally::default();
    for _ in 0..samples {
        let n = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=25);
        let w = random_word(&mut rng, n, len);
        t.check(rewrite(&w)? == element_to_std(&eval_word(&w)?)?);
    }
    out.push(t.finish(format!("rewrite vs evaluation, {samples} random words")));
    Ok(out)
}

/// A vector with up to `max_terms` terms over random subsets of `{1..n}`
/// and nonzero coefficients in `[-5, 5] / [1, 3]`.
pub fn random_vector<R: Rng>(rng: &mut R, n: usize, max_terms: usize) -> ModuleVector {
    let terms = rng.gen_range(1..=max_terms);
    let full = crate::subset::full_mask(n);
    let pairs = (0..terms).map(|_| {
        let s = Subset::from_mask(n, rng.gen::<u64>() & full).expect("masked to n");
        let mut num: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den: i64 = rng.gen_range(1..=3);
        (s, BigRational::new(num.into(), den.into()))
    });
    let pairs: Vec<_> = pairs.collect();
    ModuleVector::from_terms(n, pairs).expect("subsets share n")
}

/// A word of length `len` with each symbol drawn uniformly from `l_i`,
/// `e_j` and `1`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> Word {
    let count = 2 * n;
    let symbols = (0..len)
        .map(|_| {
            let r = rng.gen_range(0..count);
            if r < n - 1 {
                Generator::L(r + 1)
            } else if r < 2 * n - 1 {
                Generator::E(r - (n - 1) + 1)
            } else {
                Generator::One
            }
        })
        .collect();
    Word::new(n, symbols).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let opts = Options { small: true, ..Options::default() };
        let results = run(Suite::All, &opts).unwrap();
        assert!(results.len() >= 10);
        for r in &results {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn random_words_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            let w = random_word(&mut rng, n, 30);
            assert_eq!(w.len(), 30);
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("dims".parse::<Suite>().unwrap(), Suite::Dims);
        assert!("nope".parse::<Suite>().is_err());
    }
}
