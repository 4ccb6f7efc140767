//! Ready-made concrete realizations of each derivation family.
//!
//! Entries are stored as spec and model file text, so the catalog doubles as
//! a set of worked examples of both formats.

use super::env::MapEnv;
use super::model_file::ModelFile;
use crate::spec::DerivationSpec;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec_text: &'static str,
    pub model_text: &'static str,
    pub spec: DerivationSpec,
    pub model: ModelFile,
    pub env: MapEnv,
}

const INNER_SPEC: &str = "\
# ordinary derivation: d(ab) = d(a)b + a d(b)
derivation d
summand d I
summand I d
";

const INNER_MODEL: &str = "\
# inner derivation x -> cx - xc on 3x3 matrices
ring matrix 3
elem c = [[1,2,0],[0,-1,1],[3,0,2]]
map d = inner c
";

const SIGMA_SPEC: &str = "\
# sigma-derivation: d(ab) = d(a)s(b) + s(a)d(b)
derivation d
summand d s
summand s d
commute d s
";

const SIGMA_MODEL: &str = "\
# s = conjugation by u, d = [c, s(.)] with uc = cu, so [s, d] = 0
ring matrix 3
elem c = [[0,1,2],[0,0,1],[0,0,0]]
elem u = [[1,1,0],[0,1,1],[0,0,1]]
map s = conj u
map dc = inner c
map d = compose dc s
commute d s
";

const GENERALIZED_SPEC: &str = "\
# generalized inner derivation: delta(ab) = delta(a)b + a db2(b)
derivation delta
summand delta I
summand I db2
";

const GENERALIZED_MODEL: &str = "\
ring matrix 3
elem b1 = [[1,2,0],[0,1,0],[1,0,-1]]
elem b2 = [[0,1,0],[1,0,1],[0,2,1]]
map delta = innergen b1 b2
map db2 = inner b2
";

const TERNARY_SPEC: &str = "\
# ternary derivation: delta(ab) = db1(a)b + a delta(b)
derivation delta
summand db1 I
summand I delta
";

const TERNARY_MODEL: &str = "\
ring matrix 3
elem b1 = [[1,2,0],[0,1,0],[1,0,-1]]
elem b2 = [[0,1,0],[1,0,1],[0,2,1]]
map delta = innergen b1 b2
map db1 = inner b1
";

const DIFF_SPEC: &str = "\
# classical Leibniz rule for d/dx
derivation D
summand D I
summand I D
";

const DIFF_MODEL: &str = "\
ring polytrunc 6
map D = diff
";

/// Spec/model pair where `f` is left multiplication by a non-central
/// element, which is not a derivation.
pub const BAD_SPEC: &str = INNER_SPEC;
pub const BAD_MODEL: &str = "\
ring matrix 3
elem c = [[1,2,0],[0,-1,1],[3,0,2]]
map d = left c
";

const ENTRIES: [(&str, &str, &str); 5] = [
    ("inner-derivation", INNER_SPEC, INNER_MODEL),
    ("sigma-derivation", SIGMA_SPEC, SIGMA_MODEL),
    ("generalized-inner-derivation", GENERALIZED_SPEC, GENERALIZED_MODEL),
    ("ternary-inner", TERNARY_SPEC, TERNARY_MODEL),
    ("formal-d-dx", DIFF_SPEC, DIFF_MODEL),
];

fn build(name: &'static str, spec_text: &'static str, model_text: &'static str) -> CatalogEntry {
    let spec = DerivationSpec::parse(spec_text).expect("catalog spec parses");
    let model = ModelFile::parse(model_text).expect("catalog model parses");
    let env = model.env_for(&spec).expect("catalog model binds");
    CatalogEntry {
        name,
        spec_text,
        model_text,
        spec,
        model,
        env,
    }
}

pub fn builtin_model_catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(name, spec, model)| build(name, spec, model))
        .collect()
}

pub fn known_bad_model() -> CatalogEntry {
    build("left-multiplication", BAD_SPEC, BAD_MODEL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::element::{ConcreteRing, Sampler};
    use crate::models::poly::TruncPoly;
    use crate::models::validate::{validate_commutation, validate_spec, Trials};
    use crate::models::Element;
    use crate::par::Execution;
    use crate::scalar::int;

    #[test]
    fn every_entry_validates() {
        for entry in builtin_model_catalog() {
            for trials in [Trials::Random(100), Trials::ExhaustiveBasis] {
                let report = validate_spec(
                    &entry.spec,
                    &entry.env,
                    trials,
                    7,
                    &Sampler::default(),
                    Execution::Parallel,
                );
                assert!(report.passed(), "{}: {report:?}", entry.name);
            }
        }
    }

    #[test]
    fn sigma_entry_commutes() {
        let entry = &builtin_model_catalog()[1];
        let hyp = entry.spec.hyp.union(&entry.env.hyp);
        assert_eq!(hyp.pairs().count(), 1);
        for trials in [Trials::Random(100), Trials::ExhaustiveBasis] {
            let reports =
                validate_commutation(&hyp, &entry.env, trials, 3, &Sampler::default(), Execution::Sequential);
            assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
        }
    }

    #[test]
    fn left_multiplication_is_rejected() {
        let bad = known_bad_model();
        let report = validate_spec(
            &bad.spec,
            &bad.env,
            Trials::Random(25),
            1,
            &Sampler::default(),
            Execution::Sequential,
        );
        assert!(!report.passed());
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn second_derivative_of_fifth_power() {
        let entry = &builtin_model_catalog()[4];
        assert_eq!(entry.env.ring, ConcreteRing::PolyTrunc(6));
        let x2 = Element::Poly(TruncPoly::monomial(6, 2));
        let x3 = Element::Poly(TruncPoly::monomial(6, 3));
        let expected = Element::Poly(TruncPoly::from_coeffs(6, vec![int(0), int(0), int(0), int(20)]));
        assert_eq!(entry.env.brute_force_power(2, &x2, &x3), expected);
    }
}
