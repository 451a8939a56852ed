mod common;

use proptest::prelude::*;

use common::{circulant_digraph, real, square_int_matrix, strong_digraph};
use digraph_spectra::eigen::{eigenvalues, spectrum_match, Spectrum, Tolerances};
use digraph_spectra::formulas::{
    spec_box_i, spec_box_j, spec_cartesian, spec_direct, spec_lexp_construction, spec_lexp_digraph, spec_strong,
    FactorSpectralData, LexpKind,
};
use digraph_spectra::matrix::{construction, digraph_matrix, Construction, IntegerMatrix, MatrixKind};
use digraph_spectra::verify::{theorem_arity, theorem_names, verify, Arity, Status, VerifyInput, VerifyOptions};
use digraph_spectra::{Digraph, Error, Hypothesis, Operand};

fn same(a: &Spectrum, b: &Spectrum) -> bool {
    spectrum_match(a, b, 1e-12).map(|r| r.passed).unwrap_or(false)
}

fn adjacency_spectrum(m: &IntegerMatrix) -> Spectrum {
    eigenvalues(&real(m), 1e-8).unwrap()
}

proptest! {
    #[test]
    fn pairwise_formulas_commute(m in square_int_matrix(1, 5, 3), m2 in square_int_matrix(1, 5, 3)) {
        let (s, s2) = (adjacency_spectrum(&m), adjacency_spectrum(&m2));
        let n = s.order() * s2.order();
        for f in [spec_box_i, spec_direct, spec_strong] {
            let (ab, ba) = (f(&s, &s2), f(&s2, &s));
            prop_assert!(same(&ab, &ba));
            prop_assert_eq!(ab.order(), n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_i_matches_oracle(m in square_int_matrix(1, 4, 3), m2 in square_int_matrix(1, 4, 3)) {
        let predicted = spec_box_i(&adjacency_spectrum(&m), &adjacency_spectrum(&m2));
        let c = construction(Construction::BoxI, &real(&m), &real(&m2)).unwrap();
        let r = spectrum_match(&predicted, &eigenvalues(&c, 1e-8).unwrap(), 1e-7).unwrap();
        prop_assert!(r.passed, "{:e}", r.worst_deviation);
    }

    #[test]
    fn predicted_orders(g in circulant_digraph(1, 6), h in circulant_digraph(1, 6)) {
        let tol = Tolerances::default();
        let n = g.n() * h.n();
        for kind in [MatrixKind::A, MatrixKind::D, MatrixKind::DL, MatrixKind::DQ] {
            prop_assert_eq!(spec_cartesian(&g, &h, kind, &tol).unwrap().order(), n);
        }
        let d = |x: &Digraph| digraph_matrix(x, MatrixKind::D).unwrap();
        let f = FactorSpectralData::from_matrix(&d(&g), Operand::First, &tol).unwrap();
        let f2 = FactorSpectralData::from_matrix(&d(&h), Operand::Second, &tol).unwrap();
        prop_assert_eq!(spec_box_j(&f, &f2).unwrap().order(), n);
        let a = digraph_matrix(&g, MatrixKind::A).unwrap();
        let a2 = digraph_matrix(&h, MatrixKind::A).unwrap();
        let fa2 = FactorSpectralData::from_matrix(&a2, Operand::Second, &tol).unwrap();
        prop_assert_eq!(spec_lexp_construction(&eigenvalues(&a, 1e-8).unwrap(), &fa2).unwrap().order(), n);
    }

    #[test]
    fn girth_condition_is_enforced(g in strong_digraph(2, 5), h in circulant_digraph(2, 6)) {
        let diam = h.metrics().diameter;
        let girth = g.metrics().girth;
        let out = spec_lexp_digraph(&g, &h, LexpKind::DGirth, &Tolerances::default());
        if diam > girth {
            prop_assert!(matches!(out, Err(Error::HypothesisViolated(Hypothesis::DiameterWithinGirth))));
        } else if g.metrics().is_transmission_regular() {
            prop_assert!(out.is_ok());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Every theorem either passes or is skipped with a named hypothesis; none fails.
    #[test]
    fn no_theorem_fails(g in strong_digraph(1, 4), h in circulant_digraph(1, 5), k in circulant_digraph(1, 6)) {
        let opts = VerifyOptions::default();
        for name in theorem_names() {
            let runs: Vec<Vec<Digraph>> = match theorem_arity(name).unwrap() {
                Arity::Digraphs(1) => vec![vec![k.clone()], vec![g.clone()]],
                _ => vec![vec![g.clone(), h.clone()], vec![k.clone(), h.clone()], vec![h.clone(), g.clone()]],
            };
            for run in runs {
                let inputs: Vec<_> = run.into_iter().map(VerifyInput::Digraph).collect();
                let v = verify(name, &inputs, &opts).unwrap();
                prop_assert!(v.status != Status::Fail, "{}: {}", name, serde_json::to_string(&v).unwrap());
                if v.status == Status::Skip {
                    prop_assert!(v.hypothesis.is_some());
                }
            }
        }
    }
}
