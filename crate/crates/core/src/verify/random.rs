//! Seeded generators for random specs, pair-polynomials and ring elements.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pair_poly::{PairPoly, PairTerm};
use crate::scalar::int;
use crate::spec::DerivationSpec;
use crate::symbol::{CommutationHypotheses, OpSymbol, OpWord};

const ALPHABET: [&str; 4] = ["p", "q", "r", "s"];

/// Independent stream per `(seed, tag, case)`, so parallel cases draw the
/// same values as sequential ones.
pub fn case_rng(seed: u64, tag: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((tag << 40) ^ case as u64);
    rng
}

pub fn alphabet(size: usize) -> Vec<OpSymbol> {
    ALPHABET[..size.clamp(1, ALPHABET.len())]
        .iter()
        .map(|n| OpSymbol::new(n).unwrap())
        .collect()
}

/// A spec `f(ab) = g1(a)h1(b) + g2(a)h2(b)` whose four summand symbols are
/// drawn from an alphabet of 2–4 symbols plus `I`.
pub fn random_spec(rng: &mut ChaCha8Rng) -> DerivationSpec {
    let size = rng.gen_range(2..=4);
    let mut pool = alphabet(size);
    pool.push(OpSymbol::identity());
    let mut pick = || pool.choose(rng).unwrap().clone();
    let (g1, h1, g2, h2) = (pick(), pick(), pick(), pick());
    DerivationSpec::new(
        OpSymbol::new("f").unwrap(),
        (g1, h1),
        (g2, h2),
        CommutationHypotheses::new(),
    )
}

/// [`random_spec`] with `[g1, g2] = [h1, h2] = 0` declared.
pub fn random_commuting_spec(rng: &mut ChaCha8Rng) -> DerivationSpec {
    let mut spec = random_spec(rng);
    spec.hyp.declare(spec.g1().clone(), spec.g2().clone());
    spec.hyp.declare(spec.h1().clone(), spec.h2().clone());
    spec
}

pub fn random_word(rng: &mut ChaCha8Rng, symbols: &[OpSymbol], max_len: usize) -> OpWord {
    let len = rng.gen_range(0..=max_len);
    OpWord::new((0..len).map(|_| symbols.choose(rng).unwrap().clone()))
}

/// Up to `max_terms` terms with coefficients in `[-3, 3] \ {0}` and words of
/// length at most `max_len` over the first `alphabet_size` symbols.
pub fn random_pairpoly(
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    max_len: usize,
    alphabet_size: usize,
) -> PairPoly {
    let symbols = alphabet(alphabet_size);
    let count = rng.gen_range(0..=max_terms);
    PairPoly::from_terms((0..count).map(|_| {
        let mut c = rng.gen_range(-3..=2);
        if c >= 0 {
            c += 1;
        }
        PairTerm::new(
            int(c),
            random_word(rng, &symbols, max_len),
            random_word(rng, &symbols, max_len),
        )
    }))
}

/// Hypotheses declaring every pair of the alphabet commuting.
pub fn full_hypotheses(alphabet_size: usize) -> CommutationHypotheses {
    let symbols = alphabet(alphabet_size);
    let mut hyp = CommutationHypotheses::new();
    for s in &symbols {
        for t in &symbols {
            hyp.declare(s.clone(), t.clone());
        }
    }
    hyp
}
