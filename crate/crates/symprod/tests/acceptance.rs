//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Everything is exact rational
//! arithmetic; there are no tolerances anywhere.
//!
//! Random corpora are drawn from fixed-seed RNGs so every run checks the
//! same inputs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symprod::genera::{
    configuration_series, invariant_of_symmetric_product, signature_series, specialization_bridge,
    symmetric_series,
};
use symprod::parse::parse_poly;
use symprod::prelambda::{adams_from_sigma, lambda_series, sigma_from_adams, sigma_series,
    PreLambdaElement};
use symprod::symgrp::{
    centralizer_order, character_table, class_size, factorial, functional, mn_character,
    partitions, FunctionalKind, Partition,
};
use symprod::{
    rat, GenusData, GenusKind, GenusProfile, GradedDims, LaurentPoly, Monomial, VarSet,
};

fn random_dims(rng: &mut StdRng, max_total: u64) -> GradedDims {
    let total = rng.gen_range(0..=max_total);
    let mut g = GradedDims::new();
    for _ in 0..total {
        let p = rng.gen_range(-2..=2);
        let q = rng.gen_range(-2..=2);
        let k = rng.gen_range(-3..=3);
        g.add_dim((p, q, k), 1);
    }
    g
}

fn random_int_poly(rng: &mut StdRng, max_terms: usize) -> LaurentPoly {
    let n_terms = rng.gen_range(0..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let exps = vec![
            rng.gen_range(-2i64..=2),
            rng.gen_range(-2i64..=2),
            rng.gen_range(-2i64..=2),
        ];
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        terms.push((Monomial::from_exps(exps), rat(c)));
    }
    LaurentPoly::from_terms(VarSet::yxz(), terms)
}

fn hodge_profile(name: &str, poly: LaurentPoly) -> GenusProfile {
    GenusProfile::from_poly(name, GenusKind::Hodge, poly, false).unwrap()
}

fn yxz(text: &str) -> LaurentPoly {
    parse_poly(text, &VarSet::yxz()).unwrap()
}

/// Criterion 1: on random graded spaces, the t^n coefficients of the
/// sigma and lambda series equal the brute-force Koszul-signed projector
/// ranks, exactly.
#[test]
fn criterion_01_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(101);
    let mut checked = 0usize;
    for _ in 0..200 {
        let dims = random_dims(&mut rng, 4);
        let element = PreLambdaElement::Poly(dims.hodge_poly());
        let sigma = sigma_series(&element, 4).unwrap();
        let lambda = lambda_series(&element, 4).unwrap();
        for n in 0..=4usize {
            let sym = dims.sym_power_brute(n).unwrap().hodge_poly();
            assert_eq!(
                &sym,
                sigma.coefficient(n),
                "criterion 1: sym power vs sigma coefficient, dims {dims:?}, n={n}"
            );
            let alt = dims.alt_power_brute(n).unwrap().hodge_poly();
            assert_eq!(
                &alt,
                lambda.coefficient(n),
                "criterion 1: alt power vs lambda coefficient, dims {dims:?}, n={n}"
            );
            checked += 2;
        }
    }
    println!("acceptance criterion 1: PASS - oracle equivalence on {checked} coefficients");
}

fn exp_corpus() -> Vec<LaurentPoly> {
    let mut rng = StdRng::seed_from_u64(202);
    (0..100).map(|_| random_int_poly(&mut rng, 5)).collect()
}

/// Criterion 2: product-form sigma series equals the exp form of the
/// Adams substitutions, to order 10.
#[test]
fn criterion_02_exp_identity() {
    for p in exp_corpus() {
        let product = sigma_series(&PreLambdaElement::Poly(p.clone()), 10).unwrap();
        let psi: Vec<LaurentPoly> = (1..=10).map(|r| p.adams(r).unwrap()).collect();
        let exp_form = sigma_from_adams(&psi, 10).unwrap();
        assert_eq!(product, exp_form, "criterion 2: exp identity for {p}");
    }
    println!("acceptance criterion 2: PASS - exp identity on 100 random polynomials");
}

/// Criterion 3: lambda_t(a) * sigma_(-t)(a) = 1 mod t^11.
#[test]
fn criterion_03_opposite_structure() {
    for p in exp_corpus() {
        let el = PreLambdaElement::Poly(p.clone());
        let lambda = lambda_series(&el, 10).unwrap();
        let sigma_neg = sigma_series(&el, 10).unwrap().substitute_neg_t();
        assert!(
            lambda.mul(&sigma_neg).unwrap().is_one(),
            "criterion 3: opposite structure for {p}"
        );
    }
    println!("acceptance criterion 3: PASS - lambda * sigma(-t) = 1 on 100 random polynomials");
}

/// Criterion 4: the Adams operations extracted from sigma_t are the
/// exponent substitutions, for r <= 10.
#[test]
fn criterion_04_adams_substitution() {
    for p in exp_corpus() {
        let sigma = sigma_series(&PreLambdaElement::Poly(p.clone()), 10).unwrap();
        let extracted = adams_from_sigma(&sigma).unwrap();
        for (i, psi) in extracted.iter().enumerate() {
            assert_eq!(
                psi,
                &p.adams(i as u32 + 1).unwrap(),
                "criterion 4: Adams extraction for {p} at r={}",
                i + 1
            );
        }
    }
    println!("acceptance criterion 4: PASS - extracted Adams = substitution, r <= 10");
}

/// Criterion 5: classical geometry identities.
#[test]
fn criterion_05_classical_identities() {
    // Sym^n of the projective line is n-dimensional projective space.
    let p1 = hodge_profile("p1", yxz("1 + y*x*z^2"));
    for n in 0..=6usize {
        let expected = LaurentPoly::from_terms(
            VarSet::yxz(),
            (0..=n as i64)
                .map(|i| (Monomial::from_exps(vec![i, i, 2 * i]), rat(1)))
                .collect(),
        );
        assert_eq!(
            invariant_of_symmetric_product(&p1, n).unwrap(),
            expected,
            "criterion 5: Sym^{n} P^1"
        );
    }

    // Sym^2 of an elliptic curve: the stated Hodge polynomial and Betti
    // numbers (1, 2, 2, 2, 1).
    let elliptic = hodge_profile("elliptic", yxz("1 - y*z - x*z + y*x*z^2"));
    let sym2 = invariant_of_symmetric_product(&elliptic, 2).unwrap();
    assert_eq!(
        sym2,
        yxz("1 - y*z - x*z + 2*y*x*z^2 - y^2*x*z^3 - y*x^2*z^3 + y^2*x^2*z^4"),
        "criterion 5: Sym^2 elliptic Hodge polynomial"
    );
    let betti_poly = sym2
        .specialize(&[
            ("y", symprod::laurent::SpecValue::Rat(rat(1))),
            ("x", symprod::laurent::SpecValue::Rat(rat(1))),
        ])
        .unwrap();
    let betti: Vec<i64> = (0..=4)
        .map(|k| {
            let m = betti_poly.vars().monomial(&[("z", k)]).unwrap();
            let c = betti_poly.coefficient(&m);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * i64::try_from(c.to_integer()).unwrap()
        })
        .collect();
    assert_eq!(betti, vec![1, 2, 2, 2, 1], "criterion 5: Sym^2 elliptic Betti numbers");

    // Euler series for chi = 2 has coefficients n + 1.
    let chi2 = GenusProfile::new("chi2", GenusKind::Euler, GenusData::Euler(2), false).unwrap();
    let series = symmetric_series(&chi2, 10).unwrap();
    for n in 0..=10usize {
        assert_eq!(
            series.coefficient(n).as_constant().unwrap(),
            rat(n as i64 + 1),
            "criterion 5: euler series coefficient {n}"
        );
    }
    println!("acceptance criterion 5: PASS - Sym^n P^1, Sym^2 elliptic, euler series");
}

/// Criterion 6: the closed-form signature series agrees with the chi_y
/// series specialized at y = -1, and the (1,3) series starts 1,1,2,2,3.
#[test]
fn criterion_06_signature_cross_check() {
    let mut corpus: Vec<GenusProfile> = vec![
        hodge_profile("p1", yxz("1 + y*x*z^2")),
        hodge_profile("p2", yxz("1 + y*x*z^2 + y^2*x^2*z^4")),
        hodge_profile("elliptic", yxz("1 - y*z - x*z + y*x*z^2")),
        hodge_profile("odd-line", yxz("-x*z")),
    ];
    let mut rng = StdRng::seed_from_u64(606);
    for i in 0..30 {
        let dims = random_dims(&mut rng, 4);
        corpus.push(hodge_profile(&format!("random-{i}"), dims.hodge_poly()));
    }
    let mut used = 0usize;
    for profile in &corpus {
        let report = specialization_bridge(profile).unwrap();
        let Some(sig_profile) = report.signature else {
            continue;
        };
        let GenusData::Signature { sigma, chi } = sig_profile.data else {
            unreachable!()
        };
        let closed = signature_series(sigma, chi, 10).unwrap();
        let via_chi_y = symmetric_series(&report.chi_y, 10)
            .unwrap()
            .map_coefficients(|c| c.eval_var("y", rat(-1)))
            .unwrap();
        assert_eq!(
            closed, via_chi_y,
            "criterion 6: signature cross-check for {}",
            profile.name
        );
        used += 1;
    }
    assert!(used >= 30, "criterion 6: expected a parity-matching corpus, used {used}");

    let s = signature_series(1, 3, 4).unwrap();
    let coeffs: Vec<String> = s.coefficients().iter().map(|c| c.to_string()).collect();
    assert_eq!(
        coeffs,
        vec!["1", "1", "2", "2", "3"],
        "criterion 6: signature series of (1, 3)"
    );
    println!("acceptance criterion 6: PASS - signature cross-check on {used} profiles");
}

/// Criterion 7: character tables for n <= 7 pass both orthogonality
/// relations and the dimension-square identity, exactly.
#[test]
fn criterion_07_character_suite() {
    for n in 0..=7u64 {
        let (parts, table) = character_table(n);
        let sizes: Vec<i64> = parts.iter().map(|mu| class_size(mu) as i64).collect();
        let nf = factorial(n) as i64;

        // First (row) orthogonality.
        for (i, row_i) in table.iter().enumerate() {
            for (j, row_j) in table.iter().enumerate() {
                let dot: i64 = row_i
                    .iter()
                    .zip(row_j)
                    .zip(&sizes)
                    .map(|((a, b), s)| a * b * s)
                    .sum();
                assert_eq!(
                    dot,
                    if i == j { nf } else { 0 },
                    "criterion 7: row orthogonality n={n} ({i},{j})"
                );
            }
        }

        // Second (column) orthogonality.
        for (a, mu) in parts.iter().enumerate() {
            for (b, _nu) in parts.iter().enumerate() {
                let dot: i64 = table.iter().map(|row| row[a] * row[b]).sum();
                let expected = if a == b {
                    centralizer_order(mu) as i64
                } else {
                    0
                };
                assert_eq!(dot, expected, "criterion 7: column orthogonality n={n} ({a},{b})");
            }
        }

        // Sum of squared dimensions.
        let identity = Partition::new(vec![1; n as usize]);
        let dim_sq: i64 = parts
            .iter()
            .map(|lambda| {
                let d = mn_character(lambda, &identity).unwrap();
                assert!(d > 0, "criterion 7: dimension positive for {lambda}");
                d * d
            })
            .sum();
        assert_eq!(dim_sq, nf, "criterion 7: sum of dim^2 for n={n}");
    }
    println!("acceptance criterion 7: PASS - character tables n <= 7");
}

/// Criterion 8: power operations from functionals match the named
/// constructions, and isotypic multiplicities decompose the tensor power.
#[test]
fn criterion_08_power_operations() {
    let mut spaces = vec![
        GradedDims::from_entries(&[(0, 1, 1, 1)]),
        GradedDims::from_entries(&[(1, 1, 2, 1)]),
        GradedDims::from_entries(&[(0, 0, 0, 1), (1, 1, 2, 1)]),
        GradedDims::from_entries(&[(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 2, 1)]),
    ];
    let mut rng = StdRng::seed_from_u64(808);
    for _ in 0..26 {
        spaces.push(random_dims(&mut rng, 3));
    }
    for v in &spaces {
        let h = v.hodge_poly();
        // cycle_supertrace computes the brute trace and hard-asserts it
        // against the product of Adams substitutions; sweep every class.
        for n in 1..=4u64 {
            for mu in partitions(n) {
                let trace = v.cycle_supertrace(&mu).unwrap();
                let mut expected = LaurentPoly::one(VarSet::yxz());
                for &part in mu.parts() {
                    expected = expected.mul(&h.adams(part as u32).unwrap()).unwrap();
                }
                assert_eq!(trace, expected, "criterion 8: supertrace of {mu} on {v:?}");
            }
        }
        for n in 1..=5u64 {
            let sym = v.phi_power(&functional(FunctionalKind::Sym, n)).unwrap();
            assert_eq!(
                sym.to_dims().expect("sym power is effective"),
                v.sym_power_brute(n as usize).unwrap(),
                "criterion 8: sym functional vs brute force, dims {v:?}, n={n}"
            );
            let alt = v.phi_power(&functional(FunctionalKind::Alt, n)).unwrap();
            assert_eq!(
                alt.to_dims().expect("alt power is effective"),
                v.alt_power_brute(n as usize).unwrap(),
                "criterion 8: alt functional vs brute force, dims {v:?}, n={n}"
            );
            let adams = v.phi_power(&functional(FunctionalKind::Adams, n)).unwrap();
            assert_eq!(
                adams.hodge_poly(),
                h.adams(n as u32).unwrap(),
                "criterion 8: Adams functional vs substitution, dims {v:?}, n={n}"
            );

            // Isotypic completeness: sum over lambda of dim(V_lambda) * m_lambda
            // recovers the tensor power, with every multiplicity a
            // nonnegative integer (enforced by schur_multiplicity itself).
            let identity = Partition::new(vec![1; n as usize]);
            let mut recovered = GradedDims::new();
            for lambda in partitions(n) {
                let dim = mn_character(&lambda, &identity).unwrap() as u64;
                let m = v.schur_multiplicity(&lambda).unwrap();
                for (&d, &val) in m.entries() {
                    recovered.add_dim(d, val * dim);
                }
            }
            assert_eq!(
                recovered,
                v.tensor_power(n as usize),
                "criterion 8: isotypic completeness, dims {v:?}, n={n}"
            );
        }
    }
    println!(
        "acceptance criterion 8: PASS - power operations on {} spaces, n <= 5",
        spaces.len()
    );
}

/// Criterion 9: the series of a disjoint union is the product of the
/// series, order 8, on 50 random pairs.
#[test]
fn criterion_09_multiplicativity() {
    let mut rng = StdRng::seed_from_u64(909);
    for i in 0..50 {
        let v = random_dims(&mut rng, 4);
        let w = random_dims(&mut rng, 4);
        let pv = hodge_profile(&format!("v{i}"), v.hodge_poly());
        let pw = hodge_profile(&format!("w{i}"), w.hodge_poly());
        let union = hodge_profile(&format!("u{i}"), v.direct_sum(&w).hodge_poly());
        let lhs = symmetric_series(&union, 8).unwrap();
        let rhs = symmetric_series(&pv, 8)
            .unwrap()
            .mul(&symmetric_series(&pw, 8).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "criterion 9: multiplicativity, pair {i}");

        // Same for the configuration series.
        let clhs = configuration_series(&union, 8).unwrap();
        let crhs = configuration_series(&pv, 8)
            .unwrap()
            .mul(&configuration_series(&pw, 8).unwrap())
            .unwrap();
        assert_eq!(clhs, crhs, "criterion 9: configuration multiplicativity, pair {i}");
    }
    println!("acceptance criterion 9: PASS - multiplicativity on 50 random pairs");
}
