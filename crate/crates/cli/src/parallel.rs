//! Fan the S-pair scan of the basis criterion across threads. Each pair
//! reduction is pure, so the only coordination is collecting results;
//! the verdict is the first failing pair in scan order, independent of
//! the thread count.

use detjets_core::groebner::{check_pair, s_pairs, GeneratorSet, GroebnerCheck};

pub fn is_groebner_basis_jobs(
    generators: &GeneratorSet,
    skip_coprime: bool,
    jobs: usize,
) -> GroebnerCheck {
    if jobs <= 1 {
        return detjets_core::groebner::is_groebner_basis(generators, skip_coprime);
    }
    let pairs: Vec<(usize, usize)> = s_pairs(generators.len()).collect();
    let chunk = pairs.len().div_ceil(jobs);
    if chunk == 0 {
        return GroebnerCheck::IsBasis;
    }
    // (position in scan order, i, j, remainder)
    let mut failures = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (c, slice) in pairs.chunks(chunk).enumerate() {
            handles.push(scope.spawn(move || {
                let mut local = Vec::new();
                for (off, (i, j)) in slice.iter().enumerate() {
                    if let Some(rem) = check_pair(generators, *i, *j, skip_coprime) {
                        local.push((c * chunk + off, *i, *j, rem));
                        break; // later pairs in this chunk cannot be first
                    }
                }
                local
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("pair worker"))
            .collect::<Vec<_>>()
    });
    failures.sort_by_key(|(pos, _, _, _)| *pos);
    match failures.into_iter().next() {
        None => GroebnerCheck::IsBasis,
        Some((_, i, j, remainder)) => GroebnerCheck::NotBasis { i, j, remainder },
    }
}
