//! Division with remainder, S-polynomials, Buchberger's criterion and
//! completion, and leading-ideal extraction.
//!
//! Reduction always cancels the largest reducible monomial of the
//! current partial remainder; ties between divisors go to the smallest
//! index, so every result here is deterministic for a fixed input.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};

/// A list of nonzero polynomials with the order they were built under.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub polys: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GeneratorSet {
    /// Panics on zero polynomials: the zero polynomial has no leading
    /// monomial and cannot divide anything.
    pub fn new(polys: Vec<Polynomial>, order: MonomialOrder) -> Self {
        assert!(
            polys.iter().all(|p| !p.is_zero()),
            "generator sets cannot contain the zero polynomial"
        );
        GeneratorSet { polys, order }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Which divisor wins when several leading monomials divide the same
/// monomial. `SmallestIndex` is the contract everywhere; the alternative
/// exists so tests can exercise normal-form uniqueness on verified bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorStrategy {
    SmallestIndex,
    LargestIndex,
}

/// Result of dividing `f` by a generator set: `f = sum multiplier_i * g_i
/// + remainder`, with `lm(multiplier_i * g_i) <= lm(f)` and no remainder
/// monomial divisible by any `lm(g_i)`.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    /// `(generator index, multiplier)` pairs, ascending by index, only
    /// for generators actually used.
    pub quotients: Vec<(usize, Polynomial)>,
    pub remainder: Polynomial,
}

impl ReductionTrace {
    /// Recombine the trace; equals the dividend exactly.
    pub fn reconstruct(&self, generators: &GeneratorSet) -> Polynomial {
        let mut acc = self.remainder.clone();
        for (i, h) in &self.quotients {
            acc = acc.add(&h.mul(&generators.polys[*i]));
        }
        acc
    }
}

/// Normal form of `f` with respect to the set, with the division trace.
pub fn normal_form(f: &Polynomial, generators: &GeneratorSet) -> ReductionTrace {
    normal_form_with_strategy(f, generators, DivisorStrategy::SmallestIndex)
}

pub fn normal_form_with_strategy(
    f: &Polynomial,
    generators: &GeneratorSet,
    strategy: DivisorStrategy,
) -> ReductionTrace {
    let lms: Vec<&Monomial> = generators
        .polys
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero generator"))
        .collect();
    let mut quotients: Vec<Polynomial> = vec![Polynomial::zero(); generators.len()];
    let mut remainder: Vec<Term> = Vec::new();
    let mut pending = f.clone();

    while let Some(lead) = pending.leading_term().cloned() {
        let pick = match strategy {
            DivisorStrategy::SmallestIndex => {
                lms.iter().position(|lm| lead.monomial.divisible_by(lm))
            }
            DivisorStrategy::LargestIndex => {
                lms.iter().rposition(|lm| lead.monomial.divisible_by(lm))
            }
        };
        match pick {
            Some(i) => {
                let g = &generators.polys[i];
                let q_mono = lead
                    .monomial
                    .checked_div(lms[i])
                    .expect("division by chosen lm");
                let q_coeff = &lead.coeff / g.leading_coeff().expect("nonzero generator");
                let step = g.mul_term(&q_coeff, &q_mono);
                pending = pending.sub(&step);
                quotients[i] = quotients[i].add(&Polynomial::from_terms(vec![Term {
                    coeff: q_coeff,
                    monomial: q_mono,
                }]));
            }
            None => {
                // leading monomial irreducible: it joins the remainder,
                // the terms below stay pending
                remainder.push(lead.clone());
                pending = pending.sub(&Polynomial::from_terms(vec![lead]));
            }
        }
    }

    ReductionTrace {
        quotients: quotients
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect(),
        remainder: Polynomial::from_terms(remainder),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOperand;

impl fmt::Display for ZeroOperand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s-polynomial of a zero polynomial")
    }
}

/// `S(f, g) = (lt(g)/t) f - (lt(f)/t) g` with `t = gcd(lm f, lm g)`;
/// the leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, ZeroOperand> {
    let (Some(ltf), Some(ltg)) = (f.leading_term(), g.leading_term()) else {
        return Err(ZeroOperand);
    };
    let t = ltf.monomial.gcd(&ltg.monomial);
    let uf = ltg.monomial.checked_div(&t).expect("gcd divides");
    let ug = ltf.monomial.checked_div(&t).expect("gcd divides");
    Ok(f.mul_term(&ltg.coeff, &uf)
        .sub(&g.mul_term(&ltf.coeff, &ug)))
}

/// Outcome of Buchberger's criterion.
#[derive(Clone, Debug)]
pub enum GroebnerCheck {
    IsBasis,
    /// First S-pair (in `(i, j)` scan order, `i < j`) whose normal form
    /// is nonzero, with that remainder.
    NotBasis {
        i: usize,
        j: usize,
        remainder: Polynomial,
    },
}

impl GroebnerCheck {
    pub fn is_basis(&self) -> bool {
        matches!(self, GroebnerCheck::IsBasis)
    }
}

/// The deterministic pair scan order used by `is_groebner_basis`.
pub fn s_pairs(len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).flat_map(move |i| (i + 1..len).map(move |j| (i, j)))
}

/// Top-reduction remainder without the trace bookkeeping; same monomial
/// and divisor choices as `normal_form`, so the remainders coincide.
fn reduce_remainder(f: &Polynomial, polys: &[Polynomial]) -> Polynomial {
    let lms: Vec<&Monomial> = polys
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero generator"))
        .collect();
    let mut remainder: Vec<Term> = Vec::new();
    let mut pending = f.clone();
    while let Some(lead) = pending.leading_term().cloned() {
        match lms.iter().position(|lm| lead.monomial.divisible_by(lm)) {
            Some(i) => {
                let g = &polys[i];
                let q_mono = lead
                    .monomial
                    .checked_div(lms[i])
                    .expect("division by chosen lm");
                let q_coeff = &lead.coeff / g.leading_coeff().expect("nonzero generator");
                pending = pending.sub(&g.mul_term(&q_coeff, &q_mono));
            }
            None => {
                remainder.push(lead.clone());
                pending = pending.sub(&Polynomial::from_terms(vec![lead]));
            }
        }
    }
    Polynomial::from_terms(remainder)
}

/// Reduce one S-pair; `None` means it reduces to zero (or was skipped
/// as coprime). Pure, so callers may fan pairs out across threads.
pub fn check_pair(
    generators: &GeneratorSet,
    i: usize,
    j: usize,
    skip_coprime: bool,
) -> Option<Polynomial> {
    let f = &generators.polys[i];
    let g = &generators.polys[j];
    if skip_coprime {
        let (lf, lg) = (f.leading_monomial()?, g.leading_monomial()?);
        if lf.is_coprime(lg) {
            return None;
        }
    }
    let s = s_polynomial(f, g).expect("nonzero generators");
    let r = reduce_remainder(&s, &generators.polys);
    if r.is_zero() {
        None
    } else {
        Some(r)
    }
}

/// Buchberger's criterion: every S-pair reduces to zero. With
/// `skip_coprime` set, pairs with coprime leading monomials are skipped.
pub fn is_groebner_basis(generators: &GeneratorSet, skip_coprime: bool) -> GroebnerCheck {
    assert!(!generators.is_empty(), "criterion needs a nonempty set");
    for (i, j) in s_pairs(generators.len()) {
        if let Some(remainder) = check_pair(generators, i, j, skip_coprime) {
            return GroebnerCheck::NotBasis { i, j, remainder };
        }
    }
    GroebnerCheck::IsBasis
}

/// Resource limits for completion; hard errors, never silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct CompletionCaps {
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_pairs: u64,
}

impl Default for CompletionCaps {
    fn default() -> Self {
        CompletionCaps {
            max_basis: 10_000,
            max_degree: 128,
            max_pairs: 5_000_000,
        }
    }
}

/// A completion run that hit one of its caps; carries the partial state.
#[derive(Clone, Debug)]
pub struct CapExceeded {
    pub resource: &'static str,
    pub limit: u64,
    pub basis_size: usize,
    pub pairs_processed: u64,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "completion cap exceeded: {} > {} (basis size {}, {} pairs processed)",
            self.resource, self.limit, self.basis_size, self.pairs_processed
        )
    }
}

/// Buchberger completion. New elements are the sign-normalized nonzero
/// remainders of S-pairs; the pair queue is processed smallest lcm
/// degree first, ties by creation index, so output is deterministic.
/// Coprime-lead pairs are never enqueued.
pub fn buchberger_completion(
    generators: &GeneratorSet,
    caps: &CompletionCaps,
) -> Result<GeneratorSet, CapExceeded> {
    assert!(!generators.is_empty(), "completion needs a nonempty set");
    let mut basis: Vec<Polynomial> = generators
        .polys
        .iter()
        .map(|p| p.normalize_sign())
        .collect();
    // queue entries: (lcm degree, creation index, i, j)
    let mut queue: BTreeSet<(u32, u64, usize, usize)> = BTreeSet::new();
    let mut created: u64 = 0;

    fn push_pairs(
        basis: &[Polynomial],
        queue: &mut BTreeSet<(u32, u64, usize, usize)>,
        created: &mut u64,
        k: usize,
    ) {
        let lmk = basis[k].leading_monomial().expect("nonzero");
        for (i, other) in basis.iter().enumerate().take(k) {
            let lmi = other.leading_monomial().expect("nonzero");
            if lmi.is_coprime(lmk) {
                continue;
            }
            queue.insert((lmi.lcm(lmk).degree(), *created, i, k));
            *created += 1;
        }
    }

    for k in 0..basis.len() {
        push_pairs(&basis, &mut queue, &mut created, k);
    }

    let mut pairs_processed: u64 = 0;
    while let Some(entry) = queue.iter().next().copied() {
        queue.remove(&entry);
        let (_, _, i, j) = entry;
        if pairs_processed >= caps.max_pairs {
            return Err(CapExceeded {
                resource: "pair count",
                limit: caps.max_pairs,
                basis_size: basis.len(),
                pairs_processed,
            });
        }
        pairs_processed += 1;
        let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis");
        let r = reduce_remainder(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.normalize_sign();
        if let Some(d) = r.total_degree() {
            if d > caps.max_degree {
                return Err(CapExceeded {
                    resource: "element degree",
                    limit: caps.max_degree as u64,
                    basis_size: basis.len(),
                    pairs_processed,
                });
            }
        }
        basis.push(r);
        if basis.len() > caps.max_basis {
            return Err(CapExceeded {
                resource: "basis size",
                limit: caps.max_basis as u64,
                basis_size: basis.len(),
                pairs_processed,
            });
        }
        let k = basis.len() - 1;
        push_pairs(&basis, &mut queue, &mut created, k);
    }

    Ok(GeneratorSet {
        polys: basis,
        order: generators.order.clone(),
    })
}

/// A minimally generated monomial ideal, generators sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize: drop any generator divisible by another, dedupe,
    /// sort descending.
    pub fn new(gens: Vec<Monomial>) -> Self {
        let mut by_degree = gens;
        by_degree.sort_by_key(Monomial::degree);
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in by_degree {
            if !minimal.iter().any(|g| m.divisible_by(g)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { gens: minimal }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| m.divisible_by(g))
    }
}

/// Minimal generating set of the ideal of leading monomials. Only for a
/// Groebner basis is this the leading ideal of the ideal itself; the
/// caller is responsible for that interpretation.
pub fn leading_ideal(generators: &GeneratorSet) -> MonomialIdeal {
    MonomialIdeal::new(
        generators
            .polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero generator").clone())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::named_order;
    use crate::poly::Polynomial;

    fn gs(strs: &[&str], order: &MonomialOrder) -> GeneratorSet {
        GeneratorSet::new(
            strs.iter()
                .map(|s| Polynomial::parse(s, order.table()).unwrap())
                .collect(),
            order.clone(),
        )
    }

    fn p(s: &str, order: &MonomialOrder) -> Polynomial {
        Polynomial::parse(s, order.table()).unwrap()
    }

    #[test]
    fn reduce_generator_by_itself() {
        let ord = named_order(&["x", "y"]);
        let g = gs(&["x^2 - y"], &ord);
        let t = normal_form(&p("x^2 - y", &ord), &g);
        assert!(t.remainder.is_zero());
        assert_eq!(t.reconstruct(&g), p("x^2 - y", &ord));
    }

    #[test]
    fn forced_single_division_step() {
        let ord = named_order(&["x", "y"]);
        let g = gs(&["x^2 - y"], &ord);
        let t = normal_form(&p("x^2", &ord), &g);
        assert_eq!(t.remainder, p("y", &ord));
        assert_eq!(t.quotients.len(), 1);
        assert_eq!(t.quotients[0].0, 0);
        assert_eq!(t.quotients[0].1, p("1", &ord));
    }

    #[test]
    fn trace_reconstructs_and_bounds_lm() {
        let ord = named_order(&["x", "y", "z"]);
        let g = gs(&["x*y - z", "y^2 - 1", "x*z - y"], &ord);
        let f = p("x^2*y^2 - 3*x*y*z + y^3 - 2", &ord);
        let t = normal_form(&f, &g);
        assert_eq!(t.reconstruct(&g), f);
        let lmf = f.leading_monomial().unwrap();
        for (i, h) in &t.quotients {
            let prod = h.mul(&g.polys[*i]);
            assert!(prod.leading_monomial().unwrap() <= lmf);
        }
        for term in t.remainder.terms() {
            for gp in &g.polys {
                assert!(!term.monomial.divisible_by(gp.leading_monomial().unwrap()));
            }
        }
    }

    #[test]
    fn s_polynomial_of_self_is_zero() {
        let ord = named_order(&["x", "y"]);
        let f = p("x^2 - y", &ord);
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_zero_operand_errors() {
        let ord = named_order(&["x"]);
        let f = p("x", &ord);
        assert!(s_polynomial(&f, &Polynomial::zero()).is_err());
    }

    #[test]
    fn coprime_lead_pair_reduces_to_zero() {
        // f = x^2 - 1, g = y^2 - 1: S = y^2 f - x^2 g = x^2 - y^2
        let ord = named_order(&["x", "y"]);
        let f = p("x^2 - 1", &ord);
        let g = p("y^2 - 1", &ord);
        let s = s_polynomial(&f, &g).unwrap();
        assert_eq!(s, p("x^2 - y^2", &ord));
        let set = gs(&["x^2 - 1", "y^2 - 1"], &ord);
        assert!(normal_form(&s, &set).remainder.is_zero());
    }

    #[test]
    fn non_basis_witness() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 - y", "x*y - 1"], &ord);
        match is_groebner_basis(&set, true) {
            GroebnerCheck::NotBasis { i, j, remainder } => {
                assert_eq!((i, j), (0, 1));
                // S = y(x^2 - y) - x(xy - 1) = x - y^2
                assert_eq!(remainder.normalize_sign(), p("y^2 - x", &ord));
            }
            GroebnerCheck::IsBasis => panic!("expected a witness"),
        }
    }

    #[test]
    fn singleton_is_basis() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2*y - x"], &ord);
        assert!(is_groebner_basis(&set, false).is_basis());
    }

    #[test]
    fn completion_of_two_element_example() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 - y", "x*y - 1"], &ord);
        let done = buchberger_completion(&set, &CompletionCaps::default()).unwrap();
        assert_eq!(done.len(), 3);
        assert_eq!(done.polys[2], p("y^2 - x", &ord));
        assert!(is_groebner_basis(&done, true).is_basis());
        assert!(is_groebner_basis(&done, false).is_basis());
        let li = leading_ideal(&done);
        let want = MonomialIdeal::new(
            ["x^2", "x*y", "y^2"]
                .iter()
                .map(|s| p(s, &ord).leading_monomial().unwrap().clone())
                .collect(),
        );
        assert_eq!(li, want);
    }

    #[test]
    fn completion_fixed_point_on_basis() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 - y", "x*y - 1", "y^2 - x"], &ord);
        assert!(is_groebner_basis(&set, true).is_basis());
        let done = buchberger_completion(&set, &CompletionCaps::default()).unwrap();
        assert_eq!(done.len(), 3);
        assert_eq!(done.polys, set.polys);
    }

    #[test]
    fn leading_ideal_minimalizes() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 + y", "x^2*y - x"], &ord);
        let li = leading_ideal(&set);
        assert_eq!(li.len(), 1);
        assert_eq!(li.gens()[0], *p("x^2", &ord).leading_monomial().unwrap());
        assert!(li.contains(p("x^3*y", &ord).leading_monomial().unwrap()));
        assert!(!li.contains(p("x*y^5", &ord).leading_monomial().unwrap()));
    }

    #[test]
    fn single_polynomial_leading_ideal() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x*y - 1"], &ord);
        assert_eq!(leading_ideal(&set).len(), 1);
    }

    #[test]
    fn cap_on_basis_size_reports_partial_state() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 - y", "x*y - 1"], &ord);
        let caps = CompletionCaps {
            max_basis: 2,
            ..CompletionCaps::default()
        };
        let err = buchberger_completion(&set, &caps).unwrap_err();
        assert_eq!(err.resource, "basis size");
        assert!(err.basis_size >= 3);
        assert!(err.pairs_processed >= 1);
    }

    #[test]
    fn strategies_agree_on_verified_basis() {
        let ord = named_order(&["x", "y"]);
        let set = gs(&["x^2 - y", "x*y - 1", "y^2 - x"], &ord);
        let f = p("x^3*y^2 + 2*x^2 - y + 5", &ord);
        let a = normal_form_with_strategy(&f, &set, DivisorStrategy::SmallestIndex);
        let b = normal_form_with_strategy(&f, &set, DivisorStrategy::LargestIndex);
        assert_eq!(a.remainder, b.remainder);
        assert_eq!(a.reconstruct(&set), f);
        assert_eq!(b.reconstruct(&set), f);
    }
}
