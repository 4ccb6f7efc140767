use leibniz_core::expansions::{general_leibniz_noncommutative, iterate_expand, leibniz_commutative};
use leibniz_core::models::{
    builtin_model_catalog, validate_commutation, ConcreteMap, ConcreteRing, Element, MapEnv, ModelFile,
    RationalMatrix, Sampler, Trials,
};
use leibniz_core::scalar::int;
use leibniz_core::verify::{verify_model, VerifyConfig};
use leibniz_core::{CommutationHypotheses, Execution, OpSymbol, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m(rows: &[&[i64]]) -> Element {
    Element::Matrix(RationalMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
    ))
}

fn sym(n: &str) -> OpSymbol {
    OpSymbol::new(n).unwrap()
}

#[test]
fn inner_derivations_with_non_central_commutator_do_not_commute() {
    // [ad c1, ad c2] = ad [c1, c2]; with c1 = E12, c2 = E21 the commutator is
    // E11 − E22, which is not central.
    let c1 = m(&[&[0, 1], &[0, 0]]);
    let c2 = m(&[&[0, 0], &[1, 0]]);
    let env = MapEnv::new(ConcreteRing::Matrix(2), ConcreteMap::InnerDer(c1.clone()))
        .unwrap()
        .with("d", ConcreteMap::InnerDer(c1.clone()))
        .unwrap()
        .with("g", ConcreteMap::InnerDer(c2.clone()))
        .unwrap();
    let hyp = CommutationHypotheses::from_pairs([(&sym("d"), &sym("g"))]);
    let reports = validate_commutation(&hyp, &env, Trials::Random(20), 1, &Sampler::default(), Execution::Sequential);
    assert!(!reports[0].passed());
    // E12 is a witness: ad c1 ad c2 (E12) differs from ad c2 ad c1 (E12).
    let x = m(&[&[0, 1], &[0, 0]]);
    let dg = env.eval_word(&leibniz_core::OpWord::from_names(&["d", "g"]).unwrap(), &x).unwrap();
    let gd = env.eval_word(&leibniz_core::OpWord::from_names(&["g", "d"]).unwrap(), &x).unwrap();
    assert_ne!(dg, gd);

    let with_identity = CommutationHypotheses::from_pairs([(&OpSymbol::identity(), &sym("g"))]);
    assert!(with_identity.is_empty());
}

#[test]
fn sigma_commutes_with_d_when_u_commutes_with_c() {
    // σ(d(x)) = u(cσ(x) − σ(x)c)u⁻¹ = c σ²(x) − σ²(x) c = d(σ(x)) when uc = cu.
    let entry = &builtin_model_catalog()[1];
    let model = &entry.model;
    let u = model.element("u").unwrap();
    let c = model.element("c").unwrap();
    assert_eq!(u.mul(c), c.mul(u));
    let reports = validate_commutation(
        &entry.spec.hyp,
        &entry.env,
        Trials::ExhaustiveBasis,
        0,
        &Sampler::default(),
        Execution::Sequential,
    );
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn catalog_expansions_match_brute_force() {
    for entry in builtin_model_catalog() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let (a, b) = entry.env.ring.random_pair(&mut rng, &Sampler::default());
            for n in 0..=5 {
                let brute = entry.env.brute_force_power(n, &a, &b);
                let iterated = entry.env.eval_pairpoly(&iterate_expand(&entry.spec, n).poly, &a, &b).unwrap();
                let closed = entry
                    .env
                    .eval_pairpoly(&general_leibniz_noncommutative(&entry.spec, n), &a, &b)
                    .unwrap();
                assert_eq!(iterated, brute, "{} n={n}", entry.name);
                assert_eq!(closed, brute, "{} n={n}", entry.name);
                if entry.spec.has_commutative_hypotheses() {
                    let comm = leibniz_commutative(&entry.spec, n).unwrap();
                    assert_eq!(entry.env.eval_pairpoly(&comm, &a, &b).unwrap(), brute, "{}", entry.name);
                }
            }
        }
    }
}

#[test]
fn generalized_inner_derivation_validates_by_role() {
    let model = ModelFile::parse(
        "ring matrix 2\n\
         elem b1 = [[1,2],[0,1]]\n\
         elem b2 = [[0,1],[1,3]]\n\
         map f = innergen b1 b2\n\
         map db2 = inner b2\n\
         assign f f I I db2\n",
    )
    .unwrap();
    let spec = "derivation delta\nsummand delta I\nsummand I d\n".parse().unwrap();
    let report = verify_model(&spec, &model, &VerifyConfig { n_max: 4, trials: 10, ..Default::default() }).unwrap();
    assert!(report.passed(), "{}", report.render());
}

#[test]
fn verify_reports_are_reproducible() {
    let entry = &builtin_model_catalog()[2];
    let cfg = VerifyConfig { n_max: 3, trials: 8, seed: 9, exec: Execution::Parallel };
    let seq = VerifyConfig { exec: Execution::Sequential, ..cfg.clone() };
    let a = verify_model(&entry.spec, &entry.model, &cfg).unwrap().render();
    let b = verify_model(&entry.spec, &entry.model, &seq).unwrap().render();
    assert_eq!(a, b);
    assert!(a.contains("ALL PASS"));
}
