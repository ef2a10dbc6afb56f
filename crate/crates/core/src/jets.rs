//! Generators of jet ideals of determinantal varieties, and the explicit
//! candidate basis for the 2 x n, second-order case.
//!
//! The matrix `X(t)` has entry `(i, j)` equal to
//! `sum_{s=0..k} v_s[i,j] t^s`; the ideal is generated by the
//! coefficients of `t^0 .. t^k` in every r x r minor of `X(t)`. Minors
//! are expanded over truncated power series in `t` (degree cap `k`),
//! never with `t` as a ring variable.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groebner::GeneratorSet;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{determinant, Polynomial};
use crate::vars::VariableTable;

/// Shape parameters for `I^{m,n}_{r,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JetIdealSpec {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidSpec(pub &'static str);

impl fmt::Display for InvalidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid jet ideal shape: {}", self.0)
    }
}

impl JetIdealSpec {
    pub fn new(m: u32, n: u32, r: u32, k: u32) -> Result<Self, InvalidSpec> {
        if m < 1 || n < m {
            return Err(InvalidSpec("need 1 <= m <= n"));
        }
        if r < 1 || r > m {
            return Err(InvalidSpec("need 1 <= r <= m"));
        }
        Ok(JetIdealSpec { m, n, r, k })
    }

    pub fn table(&self) -> Arc<VariableTable> {
        VariableTable::jet(self.m, self.n, self.k)
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.table())
    }

    /// `C(m,r) * C(n,r) * (k+1)`.
    pub fn generator_count(&self) -> usize {
        (binom(self.m, self.r) * binom(self.n, self.r)) as usize * (self.k as usize + 1)
    }
}

fn binom(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// A polynomial truncated power series in `t`: coefficient of `t^s` at
/// position `s`, length `k + 1`.
#[derive(Clone, Debug)]
pub struct TruncatedSeries(Vec<Polynomial>);

impl TruncatedSeries {
    fn zero(k: u32) -> Self {
        TruncatedSeries(vec![Polynomial::zero(); k as usize + 1])
    }

    pub fn coeff(&self, s: u32) -> &Polynomial {
        &self.0[s as usize]
    }

    fn add(&self, other: &Self) -> Self {
        TruncatedSeries(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        TruncatedSeries(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        let k = self.0.len() - 1;
        let mut out = vec![Polynomial::zero(); k + 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(k + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries(out)
    }
}

/// The truncated matrix `X(t)`.
#[derive(Clone, Debug)]
pub struct JetMatrix {
    pub spec: JetIdealSpec,
    entries: Vec<Vec<TruncatedSeries>>,
}

impl JetMatrix {
    pub fn new(spec: &JetIdealSpec) -> Self {
        let table = spec.table();
        let nvars = table.len();
        let entries = (1..=spec.m)
            .map(|i| {
                (1..=spec.n)
                    .map(|j| {
                        TruncatedSeries(
                            (0..=spec.k)
                                .map(|s| {
                                    Polynomial::var(
                                        table.index_of(s, i, j).expect("jet variable"),
                                        nvars,
                                    )
                                })
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        JetMatrix {
            spec: *spec,
            entries,
        }
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: u32, col: u32) -> &TruncatedSeries {
        &self.entries[row as usize - 1][col as usize - 1]
    }

    /// Determinant of the submatrix on 1-based `rows` x `cols`, expanded
    /// modulo `t^{k+1}` by cofactors along the first row.
    pub fn minor(&self, rows: &[u32], cols: &[u32]) -> TruncatedSeries {
        assert_eq!(rows.len(), cols.len());
        self.minor_rec(rows, cols)
    }

    fn minor_rec(&self, rows: &[u32], cols: &[u32]) -> TruncatedSeries {
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let mut acc = TruncatedSeries::zero(self.spec.k);
        for (pos, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<u32> = cols
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != pos)
                .map(|(_, &v)| v)
                .collect();
            let cof = self
                .entry(rows[0], c)
                .mul(&self.minor_rec(&rows[1..], &sub_cols));
            acc = if pos % 2 == 0 {
                acc.add(&cof)
            } else {
                acc.sub(&cof)
            };
        }
        acc
    }
}

/// Identifies one generator: which minor and which t-coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorLabel {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
    pub t_degree: u32,
}

/// All generators of `I^{m,n}_{r,k}`, ordered by minor row set, then
/// column set (both ascending lexicographic), then t-degree.
pub fn jet_generators_labeled(spec: &JetIdealSpec) -> Vec<(MinorLabel, Polynomial)> {
    let matrix = JetMatrix::new(spec);
    let mut out = Vec::with_capacity(spec.generator_count());
    for rows in combinations(spec.m, spec.r) {
        for cols in combinations(spec.n, spec.r) {
            let minor = matrix.minor(&rows, &cols);
            for s in 0..=spec.k {
                out.push((
                    MinorLabel {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        t_degree: s,
                    },
                    minor.coeff(s).clone(),
                ));
            }
        }
    }
    out
}

/// As [`jet_generators_labeled`], dropping labels and any identically
/// zero coefficients (none arise for valid shapes, but the contract of
/// `GeneratorSet` forbids zeros).
pub fn jet_generators(spec: &JetIdealSpec) -> GeneratorSet {
    let order = spec.order();
    GeneratorSet::new(
        jet_generators_labeled(spec)
            .into_iter()
            .map(|(_, p)| p)
            .filter(|p| !p.is_zero())
            .collect(),
        order,
    )
}

/// All r-subsets of `1..=n`, ascending lexicographic.
fn combinations(n: u32, r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=r).collect();
    if r == 0 || r > n {
        return if r == 0 { vec![vec![]] } else { out };
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = r as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (r - 1 - i as u32) {
                cur[i] += 1;
                for j in i + 1..r as usize {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Family tag for the explicit basis of the (2, n, 2, 2) jet ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GammaFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for GammaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GammaFamily::A => "a",
            GammaFamily::B => "b",
            GammaFamily::C => "c",
            GammaFamily::D => "d",
            GammaFamily::E => "e",
            GammaFamily::F => "f",
            GammaFamily::G => "g",
        };
        write!(f, "{s}")
    }
}

/// The explicit candidate basis for `I^{2,n}_{2,2}`.
///
/// * `a`, `b`, `c` are the t^0, t^1, t^2 coefficients of the 2x2 minors
///   on columns `p < q`;
/// * `d`, `e` are 3x3 determinant combinations on columns `p < q < r`;
/// * `f` is a 4x4 determinant for `l <= p < q < r`;
/// * `g` is a 4x4 determinant for `l < p < q < r`.
pub struct GammaBasis {
    pub n: u32,
    pub a: Vec<((u32, u32), Polynomial)>,
    pub b: Vec<((u32, u32), Polynomial)>,
    pub c: Vec<((u32, u32), Polynomial)>,
    pub d: Vec<((u32, u32, u32), Polynomial)>,
    pub e: Vec<((u32, u32, u32), Polynomial)>,
    pub f: Vec<((u32, u32, u32, u32), Polynomial)>,
    pub g: Vec<((u32, u32, u32, u32), Polynomial)>,
    order: MonomialOrder,
}

struct GammaRing {
    table: Arc<VariableTable>,
    nvars: usize,
}

impl GammaRing {
    fn new(n: u32) -> Self {
        let table = VariableTable::jet(2, n, 2);
        let nvars = table.len();
        GammaRing { table, nvars }
    }

    fn v(&self, layer: u32, i: u32, j: u32) -> Polynomial {
        Polynomial::var(
            self.table.index_of(layer, i, j).expect("jet var"),
            self.nvars,
        )
    }

    fn x(&self, i: u32, j: u32) -> Polynomial {
        self.v(0, i, j)
    }

    fn y(&self, i: u32, j: u32) -> Polynomial {
        self.v(1, i, j)
    }

    fn z(&self, i: u32, j: u32) -> Polynomial {
        self.v(2, i, j)
    }

    fn mono(&self, vars: &[(u32, u32, u32)]) -> Monomial {
        let mut exps = vec![0u32; self.nvars];
        for (layer, i, j) in vars {
            exps[self.table.index_of(*layer, *i, *j).expect("jet var")] += 1;
        }
        Monomial::from_exps(exps)
    }
}

fn det(rows: &[Vec<Polynomial>]) -> Polynomial {
    determinant(rows).expect("square by construction")
}

impl GammaBasis {
    pub fn new(n: u32) -> Result<Self, InvalidSpec> {
        if n < 2 {
            return Err(InvalidSpec("explicit basis needs n >= 2"));
        }
        let ring = GammaRing::new(n);
        let (x, y, z) = (
            |i, j| ring.x(i, j),
            |i, j| ring.y(i, j),
            |i, j| ring.z(i, j),
        );

        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut c = Vec::new();
        for p in 1..=n {
            for q in p + 1..=n {
                a.push((
                    (p, q),
                    det(&[vec![x(1, p), x(1, q)], vec![x(2, p), x(2, q)]]),
                ));
                b.push((
                    (p, q),
                    det(&[vec![x(1, p), x(1, q)], vec![y(2, p), y(2, q)]])
                        .add(&det(&[vec![y(1, p), y(1, q)], vec![x(2, p), x(2, q)]])),
                ));
                c.push((
                    (p, q),
                    det(&[vec![x(1, p), x(1, q)], vec![z(2, p), z(2, q)]])
                        .add(&det(&[vec![z(1, p), z(1, q)], vec![x(2, p), x(2, q)]]))
                        .add(&det(&[vec![y(1, p), y(1, q)], vec![y(2, p), y(2, q)]])),
                ));
            }
        }

        let mut d = Vec::new();
        let mut e = Vec::new();
        for t in combinations(n, 3) {
            let (p, q, r) = (t[0], t[1], t[2]);
            d.push((
                (p, q, r),
                det(&[
                    vec![x(2, p), x(2, q), x(2, r)],
                    vec![y(1, p), y(1, q), y(1, r)],
                    vec![z(2, p), z(2, q), z(2, r)],
                ])
                .add(&det(&[
                    vec![x(2, p), x(2, q), x(2, r)],
                    vec![z(1, p), z(1, q), z(1, r)],
                    vec![y(2, p), y(2, q), y(2, r)],
                ])),
            ));
            e.push((
                (p, q, r),
                det(&[
                    vec![x(1, p), x(1, q), x(1, r)],
                    vec![y(1, p), y(1, q), y(1, r)],
                    vec![z(2, p), z(2, q), z(2, r)],
                ])
                .add(&det(&[
                    vec![z(1, p), z(1, q), z(1, r)],
                    vec![y(1, p), y(1, q), y(1, r)],
                    vec![x(2, p), x(2, q), x(2, r)],
                ])),
            ));
        }

        let mut f = Vec::new();
        for t in combinations(n, 3) {
            let (p, q, r) = (t[0], t[1], t[2]);
            for l in 1..=p {
                f.push((
                    (l, p, q, r),
                    det(&[
                        vec![Polynomial::zero(), x(2, p), x(2, q), x(2, r)],
                        vec![x(2, l), y(2, p), y(2, q), y(2, r)],
                        vec![y(1, l), z(1, p), z(1, q), z(1, r)],
                        vec![y(2, l), z(2, p), z(2, q), z(2, r)],
                    ]),
                ));
            }
        }

        let mut g = Vec::new();
        for t in combinations(n, 4) {
            let (l, p, q, r) = (t[0], t[1], t[2], t[3]);
            g.push((
                (l, p, q, r),
                det(&[
                    vec![x(2, l), x(2, p), x(2, q), x(2, r)],
                    vec![y(2, l), y(2, p), y(2, q), y(2, r)],
                    vec![z(2, l), z(2, p), z(2, q), z(2, r)],
                    vec![z(1, l), z(1, p), z(1, q), z(1, r)],
                ]),
            ));
        }

        let basis = GammaBasis {
            n,
            a,
            b,
            c,
            d,
            e,
            f,
            g,
            order: MonomialOrder::grevlex(ring.table.clone()),
        };
        basis.assert_leading_monomials(&ring);
        Ok(basis)
    }

    /// Postcondition: the leading monomials are exactly the closed
    /// per-family table.
    fn assert_leading_monomials(&self, ring: &GammaRing) {
        for ((p, q), poly) in &self.a {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 1, *q), (0, 2, *p)])),
                "lm(a[{p},{q}])"
            );
        }
        for ((p, q), poly) in &self.b {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 1, *p), (1, 2, *q)])),
                "lm(b[{p},{q}])"
            );
        }
        for ((p, q), poly) in &self.c {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(1, 1, *q), (1, 2, *p)])),
                "lm(c[{p},{q}])"
            );
        }
        for ((p, q, r), poly) in &self.d {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 2, *p), (1, 1, *q), (2, 2, *r)])),
                "lm(d[{p},{q},{r}])"
            );
        }
        for ((p, q, r), poly) in &self.e {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 1, *p), (1, 1, *q), (2, 2, *r)])),
                "lm(e[{p},{q},{r}])"
            );
        }
        for ((l, p, q, r), poly) in &self.f {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 2, *p), (1, 1, *l), (1, 2, *q), (2, 2, *r)])),
                "lm(f[{l},{p},{q},{r}])"
            );
        }
        for ((l, p, q, r), poly) in &self.g {
            assert_eq!(
                poly.leading_monomial(),
                Some(&ring.mono(&[(0, 2, *l), (1, 2, *p), (2, 1, *r), (2, 2, *q)])),
                "lm(g[{l},{p},{q},{r}])"
            );
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
            + self.b.len()
            + self.c.len()
            + self.d.len()
            + self.e.len()
            + self.f.len()
            + self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Every member with its family tag and index tuple, in the fixed
    /// emission order a, b, c, d, e, f, g, tuples ascending.
    pub fn members(&self) -> Vec<(GammaFamily, Vec<u32>, &Polynomial)> {
        let mut out = Vec::with_capacity(self.len());
        for ((p, q), poly) in &self.a {
            out.push((GammaFamily::A, vec![*p, *q], poly));
        }
        for ((p, q), poly) in &self.b {
            out.push((GammaFamily::B, vec![*p, *q], poly));
        }
        for ((p, q), poly) in &self.c {
            out.push((GammaFamily::C, vec![*p, *q], poly));
        }
        for ((p, q, r), poly) in &self.d {
            out.push((GammaFamily::D, vec![*p, *q, *r], poly));
        }
        for ((p, q, r), poly) in &self.e {
            out.push((GammaFamily::E, vec![*p, *q, *r], poly));
        }
        for ((l, p, q, r), poly) in &self.f {
            out.push((GammaFamily::F, vec![*l, *p, *q, *r], poly));
        }
        for ((l, p, q, r), poly) in &self.g {
            out.push((GammaFamily::G, vec![*l, *p, *q, *r], poly));
        }
        out
    }

    pub fn generator_set(&self) -> GeneratorSet {
        GeneratorSet::new(
            self.members()
                .into_iter()
                .map(|(_, _, p)| p.clone())
                .collect(),
            self.order.clone(),
        )
    }

    fn pair(list: &[((u32, u32), Polynomial)], p: u32, q: u32) -> Option<&Polynomial> {
        list.iter()
            .find(|((a, b), _)| (*a, *b) == (p, q))
            .map(|(_, f)| f)
    }

    pub fn a_at(&self, p: u32, q: u32) -> Option<&Polynomial> {
        Self::pair(&self.a, p, q)
    }

    pub fn b_at(&self, p: u32, q: u32) -> Option<&Polynomial> {
        Self::pair(&self.b, p, q)
    }

    /// `c` with the equal-index convention `c(j, j) = 0` (a determinant
    /// with equal columns), which the expansion identities rely on.
    pub fn c_at(&self, p: u32, q: u32) -> Option<Polynomial> {
        if p == q {
            return Some(Polynomial::zero());
        }
        Self::pair(&self.c, p, q).cloned()
    }

    pub fn d_at(&self, p: u32, q: u32, r: u32) -> Option<&Polynomial> {
        self.d
            .iter()
            .find(|((a, b, c), _)| (*a, *b, *c) == (p, q, r))
            .map(|(_, f)| f)
    }
}

/// Construct the explicit basis for column count `n >= 2`.
pub fn gamma_basis(n: u32) -> Result<GammaBasis, InvalidSpec> {
    GammaBasis::new(n)
}

/// Outcome of checking one expansion identity family.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Vec<u32>>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Results for the four expansion identities expressing d, e, f, g over
/// a, b, c (and d itself, for f).
#[derive(Clone, Debug)]
pub struct ExpansionIdentityReport {
    pub d: IdentityReport,
    pub e: IdentityReport,
    pub f: IdentityReport,
    pub g: IdentityReport,
}

impl ExpansionIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.d.holds() && self.e.holds() && self.f.holds() && self.g.holds()
    }
}

/// Symbolically verify the expansion identities for every admissible
/// index tuple at the given `n`.
///
/// The `d`, `e`, `g` expansions are checked in the form
///
/// ```text
/// d(p,q,r) = -z2p b(q,r) + z2q b(p,r) - z2r b(p,q)
///            - y2p c(q,r) + y2q c(p,r) - y2r c(p,q)
/// e(p,q,r) = -y1p c(q,r) + y1q c(p,r) - y1r c(p,q)
/// g(l,p,q,r) = (z2q y2r - y2q z2r) c(l,p) - (z2p y2r - y2p z2r) c(l,q)
///            + (z2l y2r - y2l z2r) c(p,q) + (z2p y2q - y2p z2q) c(l,r)
///            - (z2l y2q - y2l z2q) c(p,r) + (z2l y2p - y2l z2p) c(q,r)
/// ```
///
/// For `f` the balanced form below is the one that actually closes for
/// every tuple (each c-coefficient is a full 2x2 z/x determinant and the
/// a-block enters with the opposite sign):
///
/// ```text
/// f(l,p,q,r) = -z2l z2p a(q,r) + z2l z2q a(p,r) - z2l z2r a(p,q)
///            + (z2p x2q - z2q x2p) c(l,r)
///            + (z2r x2p - z2p x2r) c(l,q)
///            + (z2q x2r - z2r x2q) c(l,p)
///            + y2l d(p,q,r)
/// ```
pub fn verify_expansion_identities(n: u32) -> Result<ExpansionIdentityReport, InvalidSpec> {
    let basis = GammaBasis::new(n)?;
    let ring = GammaRing::new(n);
    let (x, y, z) = (
        |i, j| ring.x(i, j),
        |i, j| ring.y(i, j),
        |i, j| ring.z(i, j),
    );
    let a = |p, q| basis.a_at(p, q).expect("a index").clone();
    let b = |p, q| basis.b_at(p, q).expect("b index").clone();
    let c = |p, q| basis.c_at(p, q).expect("c index");

    let mut d_rep = IdentityReport {
        name: "d",
        checked: 0,
        failures: Vec::new(),
    };
    let mut e_rep = IdentityReport {
        name: "e",
        checked: 0,
        failures: Vec::new(),
    };
    for ((p, q, r), dp) in &basis.d {
        let (p, q, r) = (*p, *q, *r);
        let rhs = z(2, p)
            .neg()
            .mul(&b(q, r))
            .add(&z(2, q).mul(&b(p, r)))
            .sub(&z(2, r).mul(&b(p, q)))
            .sub(&y(2, p).mul(&c(q, r)))
            .add(&y(2, q).mul(&c(p, r)))
            .sub(&y(2, r).mul(&c(p, q)));
        d_rep.checked += 1;
        if *dp != rhs {
            d_rep.failures.push(vec![p, q, r]);
        }
    }
    for ((p, q, r), ep) in &basis.e {
        let (p, q, r) = (*p, *q, *r);
        let rhs = y(1, p)
            .neg()
            .mul(&c(q, r))
            .add(&y(1, q).mul(&c(p, r)))
            .sub(&y(1, r).mul(&c(p, q)));
        e_rep.checked += 1;
        if *ep != rhs {
            e_rep.failures.push(vec![p, q, r]);
        }
    }

    let mut f_rep = IdentityReport {
        name: "f",
        checked: 0,
        failures: Vec::new(),
    };
    for ((l, p, q, r), fp) in &basis.f {
        let (l, p, q, r) = (*l, *p, *q, *r);
        let d_pqr = basis.d_at(p, q, r).expect("d index");
        let rhs = z(2, l)
            .mul(&z(2, p))
            .neg()
            .mul(&a(q, r))
            .add(&z(2, l).mul(&z(2, q)).mul(&a(p, r)))
            .sub(&z(2, l).mul(&z(2, r)).mul(&a(p, q)))
            .add(
                &z(2, p)
                    .mul(&x(2, q))
                    .sub(&z(2, q).mul(&x(2, p)))
                    .mul(&c(l, r)),
            )
            .add(
                &z(2, r)
                    .mul(&x(2, p))
                    .sub(&z(2, p).mul(&x(2, r)))
                    .mul(&c(l, q)),
            )
            .add(
                &z(2, q)
                    .mul(&x(2, r))
                    .sub(&z(2, r).mul(&x(2, q)))
                    .mul(&c(l, p)),
            )
            .add(&y(2, l).mul(d_pqr));
        f_rep.checked += 1;
        if *fp != rhs {
            f_rep.failures.push(vec![l, p, q, r]);
        }
    }

    let mut g_rep = IdentityReport {
        name: "g",
        checked: 0,
        failures: Vec::new(),
    };
    for ((l, p, q, r), gp) in &basis.g {
        let (l, p, q, r) = (*l, *p, *q, *r);
        let bracket = |i: u32, j: u32| z(2, i).mul(&y(2, j)).sub(&y(2, i).mul(&z(2, j)));
        let rhs = bracket(q, r)
            .mul(&c(l, p))
            .sub(&bracket(p, r).mul(&c(l, q)))
            .add(&bracket(l, r).mul(&c(p, q)))
            .add(&bracket(p, q).mul(&c(l, r)))
            .sub(&bracket(l, q).mul(&c(p, r)))
            .add(&bracket(l, p).mul(&c(q, r)));
        g_rep.checked += 1;
        if *gp != rhs {
            g_rep.failures.push(vec![l, p, q, r]);
        }
    }

    Ok(ExpansionIdentityReport {
        d: d_rep,
        e: e_rep,
        f: f_rep,
        g: g_rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{is_groebner_basis, normal_form};
    use alloc::string::ToString;

    #[test]
    fn second_order_2xn_generators_are_the_three_families() {
        let spec = JetIdealSpec::new(2, 4, 2, 2).unwrap();
        let gens = jet_generators_labeled(&spec);
        assert_eq!(gens.len(), 18);
        let gamma = gamma_basis(4).unwrap();
        // per column pair: t^0 = a, t^1 = b, t^2 = c, exactly as written
        let mut idx = 0;
        for ((pq, ap), ((_, bp), (_, cp))) in gamma.a.iter().zip(gamma.b.iter().zip(gamma.c.iter()))
        {
            assert_eq!(gens[idx].0.cols, alloc::vec![pq.0, pq.1]);
            assert_eq!(gens[idx].0.t_degree, 0);
            assert_eq!(&gens[idx].1, ap);
            assert_eq!(&gens[idx + 1].1, bp);
            assert_eq!(&gens[idx + 2].1, cp);
            idx += 3;
        }
    }

    #[test]
    fn zeroth_order_jets_are_classical_minors() {
        let spec = JetIdealSpec::new(2, 3, 2, 0).unwrap();
        let gens = jet_generators_labeled(&spec);
        assert_eq!(gens.len(), 3);
        let table = spec.table();
        assert_eq!(
            gens[0].1.display(&table).to_string(),
            "-x[1,2]*x[2,1] + x[1,1]*x[2,2]"
        );
    }

    #[test]
    fn generator_count_formula() {
        let spec = JetIdealSpec::new(3, 4, 2, 1).unwrap();
        assert_eq!(spec.generator_count(), 3 * 6 * 2);
        assert_eq!(jet_generators(&spec).len(), 36);
    }

    #[test]
    fn gamma_counts_at_n4() {
        let gamma = gamma_basis(4).unwrap();
        assert_eq!(gamma.a.len(), 6);
        assert_eq!(gamma.b.len(), 6);
        assert_eq!(gamma.c.len(), 6);
        assert_eq!(gamma.d.len(), 4);
        assert_eq!(gamma.e.len(), 4);
        assert_eq!(gamma.f.len(), 5);
        assert_eq!(gamma.g.len(), 1);
        assert_eq!(gamma.len(), 32);
    }

    #[test]
    fn gamma_has_no_g_family_below_n4() {
        let gamma = gamma_basis(3).unwrap();
        assert_eq!(gamma.g.len(), 0);
        assert_eq!(gamma.f.len(), 1);
        assert!(gamma_basis(1).is_err());
    }

    #[test]
    fn expansion_identities_hold_small_n() {
        for n in 3..=5 {
            let rep = verify_expansion_identities(n).unwrap();
            assert!(rep.all_hold(), "n={n}: {rep:?}");
            assert!(rep.d.checked > 0 && rep.e.checked > 0 && rep.f.checked > 0);
            if n >= 4 {
                assert!(rep.g.checked > 0);
            }
        }
    }

    #[test]
    fn flipped_sign_is_detected() {
        // same shape as the d expansion but with the middle sign flipped;
        // a correct detector must see the difference
        let basis = gamma_basis(3).unwrap();
        let ring = GammaRing::new(3);
        let (p, q, r) = (1, 2, 3);
        let b = |p, q| basis.b_at(p, q).unwrap().clone();
        let c = |p, q| basis.c_at(p, q).unwrap();
        let wrong = ring
            .z(2, p)
            .neg()
            .mul(&b(q, r))
            .sub(&ring.z(2, q).mul(&b(p, r))) // sign flipped here
            .sub(&ring.z(2, r).mul(&b(p, q)))
            .sub(&ring.y(2, p).mul(&c(q, r)))
            .add(&ring.y(2, q).mul(&c(p, r)))
            .sub(&ring.y(2, r).mul(&c(p, q)));
        assert_ne!(basis.d_at(p, q, r).unwrap(), &wrong);
    }

    #[test]
    fn gamma_members_reduce_to_zero_against_completed_jet_ideal() {
        // containment: completion of the t-expansion generators is a
        // basis of the ideal, so every explicit-family member must
        // reduce to zero against it
        let spec = JetIdealSpec::new(2, 3, 2, 2).unwrap();
        let completed = crate::groebner::buchberger_completion(
            &jet_generators(&spec),
            &crate::groebner::CompletionCaps::default(),
        )
        .unwrap();
        let gamma = gamma_basis(3).unwrap();
        for (fam, tuple, poly) in gamma.members() {
            let t = normal_form(poly, &completed);
            assert!(t.remainder.is_zero(), "{fam}{tuple:?} left a remainder");
            assert_eq!(t.reconstruct(&completed), *poly);
        }
    }

    #[test]
    fn gamma_is_groebner_basis_at_n4() {
        let gamma = gamma_basis(4).unwrap();
        let set = gamma.generator_set();
        assert!(is_groebner_basis(&set, true).is_basis());
    }

    #[test]
    fn adjacent_minor_s_pair_reduces_to_zero() {
        let gamma = gamma_basis(3).unwrap();
        let set = gamma.generator_set();
        let a12 = gamma.a_at(1, 2).unwrap();
        let a23 = gamma.a_at(2, 3).unwrap();
        let s = crate::groebner::s_polynomial(a12, a23).unwrap();
        assert!(normal_form(&s, &set).remainder.is_zero());
    }

    #[test]
    fn gamma_leading_monomials_are_squarefree() {
        for n in 2..=7 {
            let gamma = gamma_basis(n).unwrap();
            for (fam, t, poly) in gamma.members() {
                assert!(
                    poly.leading_monomial().unwrap().is_squarefree(),
                    "lm({fam}{t:?}) at n={n}"
                );
            }
        }
    }
}
