//! Stanley-Reisner combinatorics of a square-free monomial ideal.
//!
//! Faces are vertex sets containing no generator support. Facets are
//! enumerated two ways: generically, as complements of the minimal
//! transversals of the forbidden-set hypergraph (incremental
//! dualization), and for the 2 x n second-order leading ideal through
//! the five closed facet families. The two enumerations are checked
//! against each other in tests; the brute-force route is authoritative.
//!
//! Vertex sets are bit vectors over at most 128 vertices; bit `i` is the
//! vertex at priority position `i` of the chosen vertex order (position
//! 0 is the largest vertex).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groebner::MonomialIdeal;
use crate::jets::gamma_basis;
use crate::vars::VariableTable;

pub const MAX_VERTICES: usize = 128;

/// A set of vertices as a 128-bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(pos: usize) -> Self {
        VertexSet(1u128 << pos)
    }

    pub fn full(len: usize) -> Self {
        if len == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << len) - 1)
        }
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    pub fn insert(&mut self, pos: usize) {
        self.0 |= 1u128 << pos;
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Positions of the members, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let pos = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(pos)
            }
        })
    }
}

/// A facet complex: the vertex universe (as table indices in priority
/// order), the forbidden supports, and, once enumerated, the facet list.
#[derive(Clone, Debug)]
pub struct SimplicialComplexFacets {
    /// `vertex_vars[pos]` is the variable-table index shown at bit `pos`.
    pub vertex_vars: Vec<usize>,
    /// Supports of the minimal square-free generators.
    pub forbidden: Vec<VertexSet>,
    /// Facets; empty until an enumeration fills it.
    pub facets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    /// A generator with a squared variable; carries its display form.
    NonSquareFree(String),
    UniverseTooLarge {
        vertices: usize,
        cap: usize,
    },
    CapExceeded {
        resource: &'static str,
        limit: u64,
    },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::NonSquareFree(m) => {
                write!(f, "generator is not square-free: {m}")
            }
            ComplexError::UniverseTooLarge { vertices, cap } => {
                write!(f, "universe of {vertices} vertices exceeds cap {cap}")
            }
            ComplexError::CapExceeded { resource, limit } => {
                write!(f, "facet enumeration cap exceeded: {resource} > {limit}")
            }
        }
    }
}

/// Caps for the brute-force enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationCaps {
    pub max_universe: usize,
    /// Bound on the intermediate minimal-transversal family size.
    pub max_family: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_universe: 64,
            max_family: 2_000_000,
        }
    }
}

/// Build the complex of an ideal: universe = all variables (in the given
/// priority order over table indices), forbidden = generator supports.
/// Facets are left unpopulated.
pub fn sr_complex_from_ideal(
    ideal: &MonomialIdeal,
    table: &VariableTable,
    vertex_order: Vec<usize>,
) -> Result<SimplicialComplexFacets, ComplexError> {
    assert_eq!(
        vertex_order.len(),
        table.len(),
        "vertex order must cover the whole table"
    );
    if table.len() > MAX_VERTICES {
        return Err(ComplexError::UniverseTooLarge {
            vertices: table.len(),
            cap: MAX_VERTICES,
        });
    }
    let mut pos_of_var = vec![usize::MAX; table.len()];
    for (pos, var) in vertex_order.iter().enumerate() {
        pos_of_var[*var] = pos;
    }
    let mut forbidden = Vec::with_capacity(ideal.len());
    for g in ideal.gens() {
        if !g.is_squarefree() {
            use alloc::string::ToString;
            return Err(ComplexError::NonSquareFree(
                crate::poly::Polynomial::monomial(g.clone())
                    .display(table)
                    .to_string(),
            ));
        }
        let mut s = VertexSet::EMPTY;
        for v in g.support() {
            s.insert(pos_of_var[v]);
        }
        forbidden.push(s);
    }
    Ok(SimplicialComplexFacets {
        vertex_vars: vertex_order,
        forbidden,
        facets: Vec::new(),
    })
}

impl SimplicialComplexFacets {
    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.vertex_vars.len())
    }

    /// True iff the set contains no forbidden subset.
    pub fn is_face(&self, s: &VertexSet) -> bool {
        self.forbidden.iter().all(|f| !f.is_subset(s))
    }

    /// A face no vertex can be added to.
    pub fn is_facet(&self, s: &VertexSet) -> bool {
        if !self.is_face(s) {
            return false;
        }
        for v in self.universe().difference(s).iter() {
            let mut bigger = *s;
            bigger.insert(v);
            if self.is_face(&bigger) {
                return false;
            }
        }
        true
    }

    /// Exact facet list: complements of the minimal transversals of the
    /// forbidden hypergraph, grown one forbidden set at a time. Output
    /// sorted ascending as bit patterns.
    pub fn enumerate_facets_bruteforce(
        &self,
        caps: &EnumerationCaps,
    ) -> Result<Vec<VertexSet>, ComplexError> {
        let nverts = self.vertex_vars.len();
        if nverts > caps.max_universe {
            return Err(ComplexError::UniverseTooLarge {
                vertices: nverts,
                cap: caps.max_universe,
            });
        }
        let mut transversals: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for edge in &self.forbidden {
            let mut next: Vec<VertexSet> = Vec::with_capacity(transversals.len());
            let mut grown: Vec<VertexSet> = Vec::new();
            for t in &transversals {
                if !t.intersection(edge).is_empty() {
                    next.push(*t);
                } else {
                    for v in edge.iter() {
                        let mut t2 = *t;
                        t2.insert(v);
                        grown.push(t2);
                    }
                }
            }
            // sets that already hit the edge stay pairwise incomparable
            // and are never dominated by a grown set, so only the grown
            // sets need the minimality filter
            grown.sort_unstable_by_key(|s| (s.len(), s.0));
            grown.dedup();
            for g in grown {
                if !next.iter().any(|m| m.is_subset(&g)) {
                    next.push(g);
                }
            }
            if next.len() > caps.max_family {
                return Err(ComplexError::CapExceeded {
                    resource: "transversal family size",
                    limit: caps.max_family as u64,
                });
            }
            transversals = next;
        }
        let universe = self.universe();
        let mut facets: Vec<VertexSet> = transversals
            .iter()
            .map(|t| universe.difference(t))
            .collect();
        facets.sort_unstable();
        facets.dedup();
        Ok(facets)
    }
}

/// The five facet families of the second-order 2 x n complex, listed
/// smallest first in the shelling's family order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    FBar,
    EBar,
    DBar,
    CBar,
    ABar,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::FBar,
        Family::EBar,
        Family::DBar,
        Family::CBar,
        Family::ABar,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Family::FBar => "Fbar",
            Family::EBar => "Ebar",
            Family::DBar => "Dbar",
            Family::CBar => "Cbar",
            Family::ABar => "Abar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// One family member: tag, its three parameters, and the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedFacet {
    pub family: Family,
    pub params: [u32; 3],
    pub verts: VertexSet,
}

/// Vertex priority order for shellings: x row 1, x row 2, y rows, z
/// rows, as table indices of the `jet(2, n, 2)` table.
pub fn shelling_vertex_order(n: u32) -> Vec<usize> {
    let n = n as usize;
    let mut order = Vec::with_capacity(6 * n);
    order.extend(4 * n..6 * n); // x block (layer 0)
    order.extend(2 * n..4 * n); // y block (layer 1)
    order.extend(0..2 * n); // z block (layer 2)
    order
}

/// The complex of the second-order 2 x n leading ideal over the shelling
/// vertex order, facets not yet populated.
pub fn second_order_complex(n: u32) -> SimplicialComplexFacets {
    let gamma = gamma_basis(n).expect("n >= 2");
    let set = gamma.generator_set();
    let ideal = crate::groebner::leading_ideal(&set);
    sr_complex_from_ideal(&ideal, gamma.order().table(), shelling_vertex_order(n))
        .expect("leading monomials are square-free")
}

/// Block/row layout of vertex positions: x1 = 0.., x2 = n.., y1 = 2n..,
/// y2 = 3n.., z1 = 4n.., z2 = 5n...
fn row_base(n: u32, block: u32, row: u32) -> usize {
    ((block * 2 + (row - 1)) * n) as usize
}

fn row_interval(n: u32, block: u32, row: u32, from: u32, to: u32) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    if from > to {
        return s;
    }
    let base = row_base(n, block, row);
    for j in from..=to {
        s.insert(base + (j - 1) as usize);
    }
    s
}

/// Emit every family facet for the given `n`, ascending in the shelling
/// order (family first, then membership).
pub fn enumerate_facets_families(n: u32) -> Vec<TaggedFacet> {
    assert!(n >= 2, "facet families need n >= 2");
    const X: u32 = 0;
    const Y: u32 = 1;
    const Z: u32 = 2;
    let mut out = Vec::new();

    // Abar(a1, a2, ar): 1 <= a1 < a2 <= n, a1 <= ar <= n
    for a1 in 1..=n {
        for a2 in a1 + 1..=n {
            for ar in a1..=n {
                let verts = row_interval(n, X, 1, a1, ar)
                    .union(&row_interval(n, X, 2, ar, n))
                    .union(&row_interval(n, Y, 1, 1, a1))
                    .union(&row_interval(n, Y, 1, a2, n))
                    .union(&row_interval(n, Z, 1, 1, n))
                    .union(&row_interval(n, Z, 2, 1, a2));
                out.push(TaggedFacet {
                    family: Family::ABar,
                    params: [a1, a2, ar],
                    verts,
                });
            }
        }
    }

    // Cbar(c1, c2, c3): 1 <= c1 <= c2 <= c3 <= n
    for c1 in 1..=n {
        for c2 in c1..=n {
            for c3 in c2..=n {
                let verts = row_interval(n, X, 1, c2, c3)
                    .union(&row_interval(n, X, 2, c3, n))
                    .union(&row_interval(n, Y, 1, 1, c1))
                    .union(&row_interval(n, Y, 2, c1, c2))
                    .union(&row_interval(n, Z, 1, 1, n))
                    .union(&row_interval(n, Z, 2, 1, n));
                out.push(TaggedFacet {
                    family: Family::CBar,
                    params: [c1, c2, c3],
                    verts,
                });
            }
        }
    }

    // Dbar(d1, d2, d3): 1 <= d1 < d2 <= d3 <= n
    for d1 in 1..=n {
        for d2 in d1 + 1..=n {
            for d3 in d2..=n {
                let verts = row_interval(n, X, 2, d1, n)
                    .union(&row_interval(n, Y, 1, 1, d1))
                    .union(&row_interval(n, Y, 1, d2, d3))
                    .union(&row_interval(n, Y, 2, d3, n))
                    .union(&row_interval(n, Z, 1, 1, n))
                    .union(&row_interval(n, Z, 2, 1, d2));
                out.push(TaggedFacet {
                    family: Family::DBar,
                    params: [d1, d2, d3],
                    verts,
                });
            }
        }
    }

    // Ebar(e1, e2, e3): 1 <= e1 <= e2 < e3 <= n
    for e1 in 1..=n {
        for e2 in e1..=n {
            for e3 in e2 + 1..=n {
                let verts = row_interval(n, X, 2, e2, n)
                    .union(&row_interval(n, Y, 1, 1, e1))
                    .union(&row_interval(n, Y, 2, e1, e2))
                    .union(&row_interval(n, Y, 2, e3, n))
                    .union(&row_interval(n, Z, 1, 1, n))
                    .union(&row_interval(n, Z, 2, 1, e3));
                out.push(TaggedFacet {
                    family: Family::EBar,
                    params: [e1, e2, e3],
                    verts,
                });
            }
        }
    }

    // Fbar(f1, f2, f3): 1 <= f1 < f2 < f3 <= n
    for f1 in 1..=n {
        for f2 in f1 + 1..=n {
            for f3 in f2 + 1..=n {
                let verts = row_interval(n, X, 2, f1, n)
                    .union(&row_interval(n, Y, 2, 1, f1))
                    .union(&row_interval(n, Y, 2, f2, n))
                    .union(&row_interval(n, Z, 1, 1, f3))
                    .union(&row_interval(n, Z, 2, f3, n))
                    .union(&row_interval(n, Z, 2, 1, f2));
                out.push(TaggedFacet {
                    family: Family::FBar,
                    params: [f1, f2, f3],
                    verts,
                });
            }
        }
    }

    out.sort_by(crate::shelling::star_compare);
    out
}

/// Names of the members of a vertex set, ascending by priority.
pub fn vertex_names(
    set: &VertexSet,
    complex: &SimplicialComplexFacets,
    table: &VariableTable,
) -> Vec<String> {
    set.iter()
        .map(|pos| String::from(table.name(complex.vertex_vars[pos])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::MonomialIdeal;
    use crate::monomial::Monomial;
    use crate::vars::VariableTable;

    fn squarefree_ideal(supports: &[&[usize]], nvars: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            supports
                .iter()
                .map(|s| {
                    let mut exps = alloc::vec![0u32; nvars];
                    for v in *s {
                        exps[*v] = 1;
                    }
                    Monomial::from_exps(exps)
                })
                .collect(),
        )
    }

    #[test]
    fn one_edge_ideal() {
        let table = VariableTable::named(&["x", "y"]);
        let ideal = squarefree_ideal(&[&[0, 1]], 2);
        let c = sr_complex_from_ideal(&ideal, &table, alloc::vec![0, 1]).unwrap();
        assert_eq!(c.forbidden, alloc::vec![VertexSet(0b11)]);
        let facets = c
            .enumerate_facets_bruteforce(&EnumerationCaps::default())
            .unwrap();
        assert_eq!(facets, alloc::vec![VertexSet(0b01), VertexSet(0b10)]);
        assert!(c.is_face(&VertexSet::EMPTY));
        assert!(c.is_face(&VertexSet(0b01)));
        assert!(!c.is_face(&VertexSet(0b11)));
    }

    #[test]
    fn non_squarefree_rejected_with_name() {
        let table = VariableTable::named(&["x", "y"]);
        let ideal = MonomialIdeal::new(alloc::vec![Monomial::from_exps(alloc::vec![2, 0])]);
        let err = sr_complex_from_ideal(&ideal, &table, alloc::vec![0, 1]).unwrap_err();
        assert_eq!(err, ComplexError::NonSquareFree(String::from("x^2")));
    }

    #[test]
    fn second_order_bruteforce_counts() {
        for n in [2u32, 3] {
            let c = second_order_complex(n);
            assert_eq!(c.vertex_vars.len() as u32, 6 * n);
            let facets = c
                .enumerate_facets_bruteforce(&EnumerationCaps::default())
                .unwrap();
            assert_eq!(facets.len() as u32, n * n * n, "count at n={n}");
            for f in &facets {
                assert_eq!(f.len(), 3 * n + 3, "cardinality at n={n}");
                assert!(c.is_facet(f));
            }
        }
    }

    #[test]
    fn families_match_bruteforce_small_n() {
        for n in [2u32, 3, 4] {
            let c = second_order_complex(n);
            let brute = c
                .enumerate_facets_bruteforce(&EnumerationCaps::default())
                .unwrap();
            let fams = enumerate_facets_families(n);
            assert_eq!(fams.len(), brute.len(), "counts at n={n}");
            let mut from_fams: Vec<VertexSet> = fams.iter().map(|t| t.verts).collect();
            from_fams.sort_unstable();
            from_fams.dedup();
            assert_eq!(from_fams.len(), fams.len(), "families overlap at n={n}");
            assert_eq!(from_fams, brute, "facet sets differ at n={n}");
        }
    }

    #[test]
    fn family_counts_at_n2() {
        let fams = enumerate_facets_families(2);
        let count = |f: Family| fams.iter().filter(|t| t.family == f).count();
        assert_eq!(count(Family::ABar), 2);
        assert_eq!(count(Family::CBar), 4);
        assert_eq!(count(Family::DBar), 1);
        assert_eq!(count(Family::EBar), 1);
        assert_eq!(count(Family::FBar), 0);
        assert_eq!(fams.len(), 8);
    }

    #[test]
    fn abar_121_at_n2_explicit() {
        let fams = enumerate_facets_families(2);
        let t = fams
            .iter()
            .find(|t| t.family == Family::ABar && t.params == [1, 2, 1])
            .expect("Abar(1,2,1)");
        let c = second_order_complex(2);
        let table = VariableTable::jet(2, 2, 2);
        let names = vertex_names(&t.verts, &c, &table);
        assert_eq!(
            names,
            alloc::vec![
                String::from("x[1,1]"),
                String::from("x[2,1]"),
                String::from("x[2,2]"),
                String::from("y[1,1]"),
                String::from("y[1,2]"),
                String::from("z[1,1]"),
                String::from("z[1,2]"),
                String::from("z[2,1]"),
                String::from("z[2,2]"),
            ]
        );
        assert!(c.is_facet(&t.verts));
    }

    #[test]
    fn eight_vertex_face_in_n3() {
        // {x11, x12, x22, x23, y13, z21, z22, z23}: a face but not a
        // facet (8 < 3n+3 = 12)
        let c = second_order_complex(3);
        let table = VariableTable::jet(2, 3, 2);
        let pos_of = |name: &str| {
            let var = table.index_of_name(name).unwrap();
            c.vertex_vars.iter().position(|v| *v == var).unwrap()
        };
        let mut s = VertexSet::EMPTY;
        for name in [
            "x[1,1]", "x[1,2]", "x[2,2]", "x[2,3]", "y[1,3]", "z[2,1]", "z[2,2]", "z[2,3]",
        ] {
            s.insert(pos_of(name));
        }
        assert!(c.is_face(&s));
        assert!(!c.is_facet(&s));
        // the support of lm(a[1,2]) = x[1,2]*x[2,1] is not a face
        let mut bad = VertexSet::EMPTY;
        bad.insert(pos_of("x[1,2]"));
        bad.insert(pos_of("x[2,1]"));
        assert!(!c.is_face(&bad));
    }

    #[test]
    fn every_family_facet_has_3n_plus_3_vertices() {
        for n in 2..=6 {
            for t in enumerate_facets_families(n) {
                assert_eq!(t.verts.len(), 3 * n + 3, "{t:?} at n={n}");
            }
        }
    }

    #[test]
    fn universe_cap_respected() {
        let c = second_order_complex(2);
        let caps = EnumerationCaps {
            max_universe: 4,
            ..EnumerationCaps::default()
        };
        assert!(matches!(
            c.enumerate_facets_bruteforce(&caps),
            Err(ComplexError::UniverseTooLarge { .. })
        ));
    }
}
