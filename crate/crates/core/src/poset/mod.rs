//! The `B_n`-module `V` with basis `v_S`, `S ⊆ {1..n}`.
//!
//! `f · v_S = v_{f(S)}` when `S ⊆ D(f)` and `0` otherwise. Every submodule is
//! spanned by the basis vectors it contains, and that set of subsets is
//! down-closed for the componentwise order ([`Subset::leq`]). Spans are
//! therefore represented as sets of subsets ([`SpanBasis`]).

mod branching;
mod dimension;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rook::PartialMap;
use crate::subset::{check_n, Subset};

pub use branching::{
    branch_compute, branch_even, branch_even_compute, branch_predict, interval_identity,
    BranchSummand, SummandLabel,
};
pub use dimension::{
    catalan_identity, dim_cyclic, dim_mixed, dim_oracle, dim_single, mixed_subset, even_branching_defect, DimRecursion,
};

/// Basis of a submodule: the subsets `S` with `v_S` in it.
pub type SpanBasis = BTreeSet<Subset>;

/// A finitely supported combination `sum λ_S v_S` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    n: usize,
    coeffs: BTreeMap<Subset, BigRational>,
}

impl ModuleVector {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(ModuleVector { n, coeffs: BTreeMap::new() })
    }

    /// The basis vector `v_S`.
    pub fn basis(s: Subset) -> Self {
        ModuleVector { n: s.n(), coeffs: BTreeMap::from([(s, BigRational::one())]) }
    }

    /// Sums the given terms; repeated subsets accumulate and zero totals are
    /// dropped.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Subset, BigRational)>) -> Result<Self> {
        let mut v = ModuleVector::zero(n)?;
        for (s, c) in terms {
            if s.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: s.n() });
            }
            v.add_term(s, c);
        }
        Ok(v)
    }

    /// `sum v_S` over the given subsets, every coefficient 1.
    pub fn sum_of(n: usize, sets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        Self::from_terms(n, sets.into_iter().map(|s| (s, BigRational::one())))
    }

    fn add_term(&mut self, s: Subset, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(s).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: &Subset) -> BigRational {
        self.coeffs.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &BigRational)> {
        self.coeffs.iter()
    }

    /// `supp(v)`: subsets with a nonzero coefficient.
    pub fn support(&self) -> SpanBasis {
        self.coeffs.keys().copied().collect()
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector { n: self.n, coeffs: BTreeMap::new() };
        }
        ModuleVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(s, x)| (*s, x * c)).collect(),
        }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "v{s}")?;
            } else {
                write!(f, "({c})v{s}")?;
            }
        }
        Ok(())
    }
}

/// `T <= S` in the componentwise order; false across different sizes.
pub fn subset_leq(t: &Subset, s: &Subset) -> Result<bool> {
    t.leq(s)
}

/// Elementwise minimum of two k-subsets.
pub fn meet(s: &Subset, t: &Subset) -> Result<Subset> {
    s.meet(t)
}

/// `f · v`, extended linearly from `f · v_S`.
pub fn act(f: &PartialMap, v: &ModuleVector) -> Result<ModuleVector> {
    if f.n() != v.n {
        return Err(Error::DimensionMismatch { left: f.n(), right: v.n });
    }
    let mut out = ModuleVector { n: v.n, coeffs: BTreeMap::new() };
    for (s, c) in &v.coeffs {
        if let Some(image) = f.image(s) {
            out.add_term(image, c.clone());
        }
    }
    Ok(out)
}

/// Basis of `B_n v_S`: every `T <= S`, sorted by bitmask.
pub fn down_set(s: &Subset) -> Vec<Subset> {
    s.down_set()
}

/// Basis of the cyclic submodule `B_n v`: the union of the down-sets of the
/// support.
pub fn cyclic_span(v: &ModuleVector) -> SpanBasis {
    let mut out = SpanBasis::new();
    for s in v.coeffs.keys() {
        out.extend(s.down_set());
    }
    out
}

/// The maximal elements of a support, an antichain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedSupport {
    n: usize,
    sets: SpanBasis,
}

impl ReducedSupport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &SpanBasis {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `sum v_S` over the antichain.
    pub fn to_vector(&self) -> ModuleVector {
        ModuleVector {
            n: self.n,
            coeffs: self.sets.iter().map(|s| (*s, BigRational::one())).collect(),
        }
    }

    /// Splits the antichain by cardinality, smallest first.
    pub fn by_cardinality(&self) -> BTreeMap<usize, Vec<Subset>> {
        let mut classes: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
        for s in &self.sets {
            classes.entry(s.len()).or_default().push(*s);
        }
        classes
    }
}

fn maximal_elements(sets: &SpanBasis) -> SpanBasis {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.leq_unchecked(t)))
        .copied()
        .collect()
}

/// `Red(v)`: the maximal elements of `supp(v)`.
pub fn reduced_support(v: &ModuleVector) -> ReducedSupport {
    ReducedSupport { n: v.n, sets: maximal_elements(&v.support()) }
}

/// `v_red = sum_{S ∈ Red(v)} v_S`; the reduced form of 0 is 0.
pub fn reduced_form(v: &ModuleVector) -> ModuleVector {
    reduced_support(v).to_vector()
}

/// Checks that `basis` is down-closed, i.e. spans a submodule.
pub fn check_down_closed(basis: &SpanBasis) -> Result<()> {
    for s in basis {
        if let Some(missing) = s.down_set().into_iter().find(|t| !basis.contains(t)) {
            return Err(Error::NotDownClosed(format!("{missing} <= {s} is missing")));
        }
    }
    Ok(())
}

/// The unique reduced generator of the submodule with the given basis.
pub fn reduced_generator_of_span(n: usize, basis: &SpanBasis) -> Result<ModuleVector> {
    check_n(n)?;
    if let Some(s) = basis.iter().find(|s| s.n() != n) {
        return Err(Error::DimensionMismatch { left: n, right: s.n() });
    }
    check_down_closed(basis)?;
    Ok(ModuleVector {
        n,
        coeffs: maximal_elements(basis).into_iter().map(|s| (s, BigRational::one())).collect(),
    })
}

/// A nonzero submodule is indecomposable exactly when it lies inside a
/// single `V_k`, i.e. its reduced support has one cardinality.
pub fn is_indecomposable(v: &ModuleVector) -> bool {
    let red = reduced_support(v);
    let mut sizes = red.sets.iter().map(Subset::len);
    match sizes.next() {
        None => false,
        Some(k) => sizes.all(|l| l == k),
    }
}

/// Splits the reduced generator of `B_n v` into one reduced vector per
/// cardinality; their spans form a direct sum equal to `B_n v`.
/// The zero vector has no summands.
pub fn decompose(v: &ModuleVector) -> Vec<ModuleVector> {
    let red = reduced_support(v);
    red.by_cardinality()
        .into_values()
        .map(|sets| ModuleVector {
            n: v.n,
            coeffs: sets.into_iter().map(|s| (s, BigRational::one())).collect(),
        })
        .collect()
}

/// `v_{{1..k}}`, spanning the unique irreducible submodule of `V_k`.
pub fn minimal_irreducible(k: usize, n: usize) -> Result<ModuleVector> {
    Ok(ModuleVector::basis(Subset::initial(k, n)?))
}
