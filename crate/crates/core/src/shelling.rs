//! Facet orderings, shelling verification, restriction sets, h-vectors.
//!
//! The shelling condition is used in its standard form: an ordering
//! F_1 < ... < F_e of equal-size facets is a shelling when for every
//! j > 1 and every i < j there are k < j and a vertex v with
//! F_j - F_k = {v} and v in F_j - F_i. Verification precomputes the
//! restriction sets c(F_j) = {v : F_j - F_k = {v} for some k < j} and
//! checks (F_j - F_i) meets c(F_j).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::complex::{enumerate_facets_families, Family, TaggedFacet, VertexSet};

/// Total order on tagged facets: family rank first (Fbar < Ebar < Dbar
/// < Cbar < Abar), then membership at the highest-priority vertex where
/// the two facets differ (the facet containing it is the larger).
pub fn star_compare(p: &TaggedFacet, q: &TaggedFacet) -> Ordering {
    match p.family.cmp(&q.family) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let diff = p.verts.0 ^ q.verts.0;
    if diff == 0 {
        return Ordering::Equal;
    }
    let highest = diff.trailing_zeros() as usize;
    if p.verts.contains(highest) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Facets listed ascending (the first entry opens the shelling).
#[derive(Clone, Debug)]
pub struct ShellingOrder {
    facets: Vec<TaggedFacet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingInvalid {
    /// Two facets of different cardinality (positions into the order).
    Impure { i: usize, j: usize },
    /// The pair witnessing failure: no earlier facet leaves a singleton
    /// difference inside `F_j - F_i`.
    ConditionFails { i: usize, j: usize },
    /// The same facet appears twice.
    Duplicate { i: usize, j: usize },
}

impl fmt::Display for ShellingInvalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellingInvalid::Impure { i, j } => {
                write!(f, "not pure: facets {i} and {j} have different sizes")
            }
            ShellingInvalid::ConditionFails { i, j } => {
                write!(f, "shelling condition fails at pair (i={i}, j={j})")
            }
            ShellingInvalid::Duplicate { i, j } => {
                write!(f, "duplicate facet at positions {i} and {j}")
            }
        }
    }
}

/// Core verification over bare vertex sets; returns the restriction set
/// of every facet on success.
pub fn verify_shelling_sets(facets: &[VertexSet]) -> Result<Vec<VertexSet>, ShellingInvalid> {
    if facets.is_empty() {
        return Ok(Vec::new());
    }
    let size = facets[0].len();
    for (j, f) in facets.iter().enumerate().skip(1) {
        if f.len() != size {
            return Err(ShellingInvalid::Impure { i: 0, j });
        }
    }
    for (j, f) in facets.iter().enumerate() {
        for (i, g) in facets.iter().enumerate().take(j) {
            if f == g {
                return Err(ShellingInvalid::Duplicate { i, j });
            }
        }
    }
    let restrictions = restriction_sets(facets);
    for j in 1..facets.len() {
        for i in 0..j {
            let gap = facets[j].difference(&facets[i]);
            if gap.intersection(&restrictions[j]).is_empty() {
                return Err(ShellingInvalid::ConditionFails { i, j });
            }
        }
    }
    Ok(restrictions)
}

/// `c(F_t)`: vertices v of `F_t` with `F_t - F_s = {v}` for some s < t.
pub fn restriction_sets(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY; facets.len()];
    for t in 1..facets.len() {
        let mut c = VertexSet::EMPTY;
        for s in 0..t {
            let diff = facets[t].difference(&facets[s]);
            if diff.len() == 1 {
                c = c.union(&diff);
            }
        }
        out[t] = c;
    }
    out
}

impl ShellingOrder {
    /// Sort the given facets ascending under the star comparator.
    pub fn star_sorted(mut facets: Vec<TaggedFacet>) -> Self {
        facets.sort_by(star_compare);
        ShellingOrder { facets }
    }

    /// The star-ordered facets of the second-order 2 x n complex.
    pub fn second_order(n: u32) -> Self {
        ShellingOrder {
            facets: enumerate_facets_families(n),
        }
    }

    pub fn facets(&self) -> &[TaggedFacet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Check the shelling condition; on success the restriction sets are
    /// kept so h-vector extraction cannot run on an unverified order.
    pub fn verify(self) -> Result<VerifiedShelling, ShellingInvalid> {
        let sets: Vec<VertexSet> = self.facets.iter().map(|t| t.verts).collect();
        let restrictions = verify_shelling_sets(&sets)?;
        Ok(VerifiedShelling {
            facets: self.facets,
            restrictions,
        })
    }
}

/// A shelling that passed verification, with its restriction sets.
#[derive(Clone, Debug)]
pub struct VerifiedShelling {
    facets: Vec<TaggedFacet>,
    restrictions: Vec<VertexSet>,
}

/// `h[j]` counts facets whose restriction set has j elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<u64>);

impl HVector {
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn get(&self, j: usize) -> u64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl VerifiedShelling {
    pub fn facets(&self) -> &[TaggedFacet] {
        &self.facets
    }

    pub fn restrictions(&self) -> &[VertexSet] {
        &self.restrictions
    }

    /// Facet cardinality = 1 + dimension of the complex (purity held).
    pub fn facet_size(&self) -> u32 {
        self.facets.first().map(|f| f.verts.len()).unwrap_or(0)
    }

    fn bucket_len(&self) -> usize {
        self.restrictions
            .iter()
            .map(|c| c.len() as usize)
            .max()
            .map(|m| m + 1)
            .unwrap_or(0)
    }

    pub fn h_vector(&self) -> HVector {
        let mut h = vec![0u64; self.bucket_len()];
        for c in &self.restrictions {
            h[c.len() as usize] += 1;
        }
        HVector(h)
    }

    /// Per-family h-vectors, all padded to the total h-vector's length;
    /// empty families contribute all-zero rows.
    pub fn h_by_family(&self) -> [(Family, HVector); 5] {
        let len = self.bucket_len().max(1);
        let mut table = Family::ALL.map(|f| (f, HVector(vec![0u64; len])));
        for (facet, c) in self.facets.iter().zip(&self.restrictions) {
            let row = table
                .iter_mut()
                .find(|(f, _)| *f == facet.family)
                .expect("family row");
            row.1 .0[c.len() as usize] += 1;
        }
        table
    }
}
