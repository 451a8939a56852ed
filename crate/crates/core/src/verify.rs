//! Closed-form predictions checked against brute-force oracles, one named theorem at a time.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::cartesian_power;
use crate::digraph::Digraph;
use crate::dsrg::{
    cartesian_power_spectrum, diam2_distance_spectrum, dsrg_derived_spectra, duval_spectrum, infer_dsrg_params,
    nonreal_classification, power_shape, DsrgParams, SpectrumClass,
};
use crate::eigen::{
    cluster_radius, eigenpairs, eigenvalues, geometric_multiplicity, jordan_structure_numeric, linearly_independent,
    relative_residual, spectrum_match, Eigenpair, GmultMode, JordanStructure, Spectrum, Tolerances,
};
use crate::error::{Error, Hypothesis, Operand, Result};
use crate::exact::{exact_geometric_multiplicity, jordan_structure_exact};
use crate::formulas::{
    complement_matrix, complement_shift, distance_regime, eigvecs_box_j, eigvecs_lexp, eigvecs_lexp_digraph,
    jordan_box_j, lexp_kernel, spec_box_i, spec_box_j, spec_cartesian, spec_direct, spec_lexp_construction,
    spec_strong, FactorSpectralData, LexpKernel, LexpKind,
};
use crate::matrix::{construction, digraph_matrix, Construction, MatrixKind, RealMatrix};
use crate::products::{product, ProductKind};

#[derive(Clone, Debug)]
pub enum VerifyInput {
    Digraph(Digraph),
    Matrix(RealMatrix),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub theorem: String,
    pub status: Status,
    /// The failed hypothesis when skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub tol: Tolerances,
    /// Exponent for the Cartesian power family.
    pub power: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol: Tolerances::default(),
            power: 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    /// That many digraphs.
    Digraphs(usize),
    /// That many digraphs or matrices; digraphs enter through their default matrix.
    Operands(usize),
}

impl Arity {
    pub fn count(self) -> usize {
        match self {
            Arity::Digraphs(k) | Arity::Operands(k) => k,
        }
    }

    fn describe(self) -> String {
        match self {
            Arity::Digraphs(1) => "one digraph".into(),
            Arity::Digraphs(k) => format!("{k} digraphs"),
            Arity::Operands(k) => format!("{k} digraphs or matrices"),
        }
    }
}

type Runner = fn(&[VerifyInput], &VerifyOptions) -> Result<Vec<Check>>;

struct Theorem {
    name: &'static str,
    arity: Arity,
    run: Runner,
}

const THEOREMS: &[Theorem] = &[
    Theorem {
        name: "box-i",
        arity: Arity::Operands(2),
        run: box_i,
    },
    Theorem {
        name: "box-j-spectrum",
        arity: Arity::Operands(2),
        run: box_j_spectrum,
    },
    Theorem {
        name: "box-j-jordan",
        arity: Arity::Operands(2),
        run: box_j_jordan,
    },
    Theorem {
        name: "cartesian-D",
        arity: Arity::Digraphs(2),
        run: |i, o| cartesian(i, o, MatrixKind::D),
    },
    Theorem {
        name: "cartesian-DL",
        arity: Arity::Digraphs(2),
        run: |i, o| cartesian(i, o, MatrixKind::DL),
    },
    Theorem {
        name: "cartesian-DQ",
        arity: Arity::Digraphs(2),
        run: |i, o| cartesian(i, o, MatrixKind::DQ),
    },
    Theorem {
        name: "lexp-spectrum",
        arity: Arity::Operands(2),
        run: lexp_spectrum,
    },
    Theorem {
        name: "lexp-gmult",
        arity: Arity::Operands(2),
        run: lexp_gmult,
    },
    Theorem {
        name: "lexp-A",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::A),
    },
    Theorem {
        name: "lexp-L",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::L),
    },
    Theorem {
        name: "lexp-Q",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::Q),
    },
    Theorem {
        name: "lexp-D",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_regime(i, o, MatrixKind::D),
    },
    Theorem {
        name: "lexp-D-girth",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DGirth),
    },
    Theorem {
        name: "lexp-D-doubly",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DDoubly),
    },
    Theorem {
        name: "lexp-DL",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_regime(i, o, MatrixKind::DL),
    },
    Theorem {
        name: "lexp-DL-girth",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DLGirth),
    },
    Theorem {
        name: "lexp-DL-doubly",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DLDoubly),
    },
    Theorem {
        name: "lexp-DQ",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_regime(i, o, MatrixKind::DQ),
    },
    Theorem {
        name: "lexp-DQ-girth",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DQGirth),
    },
    Theorem {
        name: "lexp-DQ-doubly",
        arity: Arity::Digraphs(2),
        run: |i, o| lexp_digraph(i, o, LexpKind::DQDoubly),
    },
    Theorem {
        name: "complement-shift",
        arity: Arity::Digraphs(1),
        run: complement,
    },
    Theorem {
        name: "eigvecs-box-j",
        arity: Arity::Operands(2),
        run: eigvecs_box_j_check,
    },
    Theorem {
        name: "eigvecs-lexp",
        arity: Arity::Operands(2),
        run: eigvecs_lexp_check,
    },
    Theorem {
        name: "direct",
        arity: Arity::Digraphs(2),
        run: |i, o| tensor(i, o, ProductKind::Direct),
    },
    Theorem {
        name: "strong",
        arity: Arity::Digraphs(2),
        run: |i, o| tensor(i, o, ProductKind::Strong),
    },
    Theorem {
        name: "diam2",
        arity: Arity::Digraphs(1),
        run: diam2,
    },
    Theorem {
        name: "duval",
        arity: Arity::Digraphs(1),
        run: duval,
    },
    Theorem {
        name: "dsrg-D",
        arity: Arity::Digraphs(1),
        run: |i, o| dsrg(i, o, MatrixKind::D),
    },
    Theorem {
        name: "dsrg-DL",
        arity: Arity::Digraphs(1),
        run: |i, o| dsrg(i, o, MatrixKind::DL),
    },
    Theorem {
        name: "dsrg-DQ",
        arity: Arity::Digraphs(1),
        run: |i, o| dsrg(i, o, MatrixKind::DQ),
    },
    Theorem {
        name: "cartesian-power",
        arity: Arity::Digraphs(1),
        run: power,
    },
    Theorem {
        name: "nonreal",
        arity: Arity::Digraphs(1),
        run: nonreal,
    },
];

pub fn theorem_names() -> Vec<&'static str> {
    THEOREMS.iter().map(|t| t.name).collect()
}

pub fn theorem_arity(name: &str) -> Option<Arity> {
    THEOREMS.iter().find(|t| t.name == name).map(|t| t.arity)
}

fn skip_reason(e: &Error) -> Option<String> {
    match e {
        Error::HypothesisViolated(h) => Some(h.to_string()),
        Error::NotTransmissionRegular(o) => Some(Hypothesis::TransmissionRegular(*o).to_string()),
        Error::NotStronglyConnected => Some("strongly connected".into()),
        Error::PerronNotSimple => Some("simple Perron value".into()),
        Error::ShapeViolated => Some("distance spectrum of the form {t, p^(m), 0^(n-1-m)}".into()),
        Error::DegenerateDiscriminant | Error::InadmissibleParameters => Some("admissible DSRG parameters".into()),
        _ => None,
    }
}

/// Runs one theorem; hypothesis failures become `Skip`, numerical failures are errors.
pub fn verify(name: &str, inputs: &[VerifyInput], opts: &VerifyOptions) -> Result<Verdict> {
    let theorem = THEOREMS
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Error::UnknownTheorem(name.to_string()))?;
    let digraphs_only = matches!(theorem.arity, Arity::Digraphs(_));
    if inputs.len() != theorem.arity.count()
        || (digraphs_only && inputs.iter().any(|i| matches!(i, VerifyInput::Matrix(_))))
    {
        return Err(Error::BadArity {
            theorem: name.to_string(),
            expected: theorem.arity.describe(),
        });
    }
    let (status, hypothesis, checks) = match (theorem.run)(inputs, opts) {
        Ok(checks) => {
            let ok = checks.iter().all(|c| c.passed);
            (if ok { Status::Pass } else { Status::Fail }, None, checks)
        }
        Err(e) => match skip_reason(&e) {
            Some(reason) => (Status::Skip, Some(reason), Vec::new()),
            None => return Err(e),
        },
    };
    Ok(Verdict {
        theorem: name.to_string(),
        status,
        hypothesis,
        checks,
    })
}

fn digraph(inputs: &[VerifyInput], i: usize) -> &Digraph {
    match &inputs[i] {
        VerifyInput::Digraph(g) => g,
        VerifyInput::Matrix(_) => unreachable!("arity checked"),
    }
}

fn matrix(inputs: &[VerifyInput], i: usize, kind: MatrixKind) -> Result<RealMatrix> {
    match &inputs[i] {
        VerifyInput::Digraph(g) => digraph_matrix(g, kind),
        VerifyInput::Matrix(m) => {
            m.order()?;
            Ok(m.clone())
        }
    }
}

fn which(i: usize) -> Operand {
    if i == 0 {
        Operand::First
    } else {
        Operand::Second
    }
}

fn require(cond: bool, h: Hypothesis) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(h))
    }
}

/// Nonnegative, irreducible and with constant row sums.
fn perron_factor(m: &RealMatrix, op: Operand, tol: &Tolerances) -> Result<FactorSpectralData> {
    require(m.is_nonnegative(), Hypothesis::Nonnegative(op))?;
    require(m.is_irreducible(), Hypothesis::Irreducible(op))?;
    FactorSpectralData::from_matrix(m, op, tol)
}

fn oracle(m: &RealMatrix, tol: &Tolerances) -> Result<Spectrum> {
    eigenvalues(m, tol.cluster)
}

fn spectrum_json(s: &Spectrum) -> Value {
    Value::Array(
        s.items()
            .iter()
            .map(|it| json!({"re": it.value.re, "im": it.value.im, "mult": it.mult}))
            .collect(),
    )
}

fn spectrum_check(name: &str, predicted: &Spectrum, computed: &Spectrum, tol: &Tolerances) -> Check {
    match spectrum_match(predicted, computed, tol.matching) {
        Ok(r) => Check {
            name: name.into(),
            passed: r.passed,
            detail: json!({
                "worst_deviation": r.worst_deviation,
                "tolerance": r.tolerance,
                "predicted": spectrum_json(predicted),
                "computed": spectrum_json(computed),
            }),
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: json!({ "error": e.to_string() }),
        },
    }
}

fn residual_check(name: &str, m: &RealMatrix, pairs: &[Eigenpair], tol: &Tolerances) -> Check {
    let worst = pairs
        .iter()
        .map(|(mu, w)| relative_residual(m, *mu, w))
        .fold(0.0, f64::max);
    Check {
        name: name.into(),
        passed: worst <= tol.residual && pairs.iter().all(|(_, w)| w.iter().any(|x| x.norm() > 0.0)),
        detail: json!({ "vectors": pairs.len(), "worst_residual": worst, "tolerance": tol.residual }),
    }
}

fn independence_check(name: &str, pairs: &[Eigenpair], tol: &Tolerances) -> Check {
    let vectors: Vec<_> = pairs.iter().map(|p| p.1.clone()).collect();
    Check {
        name: name.into(),
        passed: linearly_independent(&vectors, tol.rank),
        detail: json!({ "vectors": vectors.len() }),
    }
}

fn near_integer(z: Complex64, radius: f64) -> Option<i64> {
    let r = z.re.round();
    (z.im.abs() <= radius && (z.re - r).abs() <= radius).then_some(r as i64)
}

/// Numerical multiplicity, cross-checked in exact arithmetic when possible.
fn oracle_gmult(m: &RealMatrix, z: Complex64, tol: &Tolerances) -> Result<(usize, Option<usize>)> {
    let numeric = geometric_multiplicity(m, z, GmultMode::Numeric(tol.rank))?;
    let exact = match (m.to_integer(), near_integer(z, 1e-9 * (1.0 + z.norm()))) {
        (Some(im), Some(k)) => Some(exact_geometric_multiplicity(
            &im,
            &num_rational::BigRational::from_integer(k.into()),
        )),
        _ => None,
    };
    Ok((numeric, exact))
}

/// Values separated from every other value by at least `gap`.
fn isolated(s: &Spectrum, gap: f64) -> Vec<Complex64> {
    let vals = s.values();
    vals.iter()
        .copied()
        .filter(|&v| vals.iter().all(|&w| w == v || (w - v).norm() >= gap))
        .collect()
}

fn gmult_check(kernel: &LexpKernel, product_matrix: &RealMatrix, tol: &Tolerances) -> Result<Check> {
    let mut rows = Vec::new();
    let mut passed = true;
    for z in isolated(&kernel.spectrum(), 1e-3) {
        let q = kernel.gmult(z, tol)?;
        let (numeric, exact) = oracle_gmult(product_matrix, z, tol)?;
        let ok = q.value == numeric && exact.is_none_or(|e| e == q.value);
        passed &= ok;
        rows.push(json!({
            "z": {"re": z.re, "im": z.im},
            "predicted": q.value,
            "case": q.case,
            "numeric": numeric,
            "exact": exact,
        }));
    }
    Ok(Check {
        name: "gmult".into(),
        passed,
        detail: Value::Array(rows),
    })
}

fn box_i(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2) = (matrix(inputs, 0, MatrixKind::A)?, matrix(inputs, 1, MatrixKind::A)?);
    let predicted = spec_box_i(&oracle(&m, &o.tol)?, &oracle(&m2, &o.tol)?);
    let computed = oracle(&construction(Construction::BoxI, &m, &m2)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn box_j_factors(
    inputs: &[VerifyInput],
    o: &VerifyOptions,
) -> Result<(RealMatrix, RealMatrix, FactorSpectralData, FactorSpectralData)> {
    let m = matrix(inputs, 0, MatrixKind::D)?;
    let m2 = matrix(inputs, 1, MatrixKind::D)?;
    let f = perron_factor(&m, which(0), &o.tol)?;
    let f2 = perron_factor(&m2, which(1), &o.tol)?;
    Ok((m, m2, f, f2))
}

fn box_j_spectrum(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2, f, f2) = box_j_factors(inputs, o)?;
    let predicted = spec_box_j(&f, &f2)?;
    let computed = oracle(&construction(Construction::BoxJ, &m, &m2)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn box_j_jordan(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2, f, f2) = box_j_factors(inputs, o)?;
    let jm = JordanStructure::numeric(&m, &o.tol)?;
    let jm2 = JordanStructure::numeric(&m2, &o.tol)?;
    let predicted = jordan_box_j(&jm, f.rho(), &jm2, f2.rho())?;
    let c = construction(Construction::BoxJ, &m, &m2)?;
    let computed = oracle(&c, &o.tol)?;
    let mut checks = vec![spectrum_check("spectrum", &predicted.spectrum(), &computed, &o.tol)];
    let integer = c.to_integer();
    let mut rows = Vec::new();
    let mut passed = true;
    for b in predicted.blocks() {
        let radius = 1e-9 * (1.0 + b.value.norm());
        let (sizes, mode) = match (&integer, near_integer(b.value, radius)) {
            (Some(im), Some(k)) => (
                jordan_structure_exact(im, &num_rational::BigRational::from_integer(k.into())),
                "exact",
            ),
            _ => (jordan_structure_numeric(&c, b.value, o.tol.rank)?, "numeric"),
        };
        passed &= sizes == b.sizes;
        rows.push(json!({
            "value": {"re": b.value.re, "im": b.value.im},
            "predicted": b.sizes,
            "computed": sizes,
            "mode": mode,
        }));
    }
    checks.push(Check {
        name: "blocks".into(),
        passed,
        detail: Value::Array(rows),
    });
    Ok(checks)
}

fn cartesian(inputs: &[VerifyInput], o: &VerifyOptions, kind: MatrixKind) -> Result<Vec<Check>> {
    let (g, h) = (digraph(inputs, 0), digraph(inputs, 1));
    let predicted = spec_cartesian(g, h, kind, &o.tol)?;
    let computed = oracle(&digraph_matrix(&product(g, h, ProductKind::Cartesian), kind)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn lexp_spectrum(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2) = (matrix(inputs, 0, MatrixKind::A)?, matrix(inputs, 1, MatrixKind::A)?);
    LexpKernel::from_matrices(&m, &m2, &o.tol)?;
    let f2 = FactorSpectralData::from_matrix(&m2, Operand::Second, &o.tol)?;
    let predicted = spec_lexp_construction(&oracle(&m, &o.tol)?, &f2)?;
    let computed = oracle(&construction(Construction::Lexp, &m, &m2)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn lexp_gmult(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2) = (matrix(inputs, 0, MatrixKind::A)?, matrix(inputs, 1, MatrixKind::A)?);
    let kernel = LexpKernel::from_matrices(&m, &m2, &o.tol)?;
    let c = construction(Construction::Lexp, &m, &m2)?;
    let computed = oracle(&c, &o.tol)?;
    Ok(vec![
        spectrum_check("spectrum", &kernel.spectrum(), &computed, &o.tol),
        gmult_check(&kernel, &c, &o.tol)?,
    ])
}

fn lexp_digraph(inputs: &[VerifyInput], o: &VerifyOptions, kind: LexpKind) -> Result<Vec<Check>> {
    let (g, h) = (digraph(inputs, 0), digraph(inputs, 1));
    let kernel = lexp_kernel(g, h, kind, &o.tol)?;
    let x = digraph_matrix(&product(g, h, ProductKind::Lexicographic), kind.matrix_kind())?;
    let computed = oracle(&x, &o.tol)?;
    let mut checks = vec![
        spectrum_check("spectrum", &kernel.spectrum(), &computed, &o.tol),
        gmult_check(&kernel, &x, &o.tol)?,
    ];
    if matches!(kind, LexpKind::A | LexpKind::DGirth | LexpKind::DDoubly) {
        let vecs = eigvecs_lexp_digraph(g, h, kind, &o.tol)?;
        checks.push(residual_check("eigenvector residuals", &x, &vecs.pairs, &o.tol));
        checks.push(Check {
            name: "eigenvector independence".into(),
            passed: vecs.independent,
            detail: json!({ "vectors": vecs.pairs.len(), "skipped": vecs.skipped }),
        });
    }
    Ok(checks)
}

fn lexp_regime(inputs: &[VerifyInput], o: &VerifyOptions, kind: MatrixKind) -> Result<Vec<Check>> {
    let regime = distance_regime(digraph(inputs, 0), digraph(inputs, 1), kind)?;
    let mut checks = vec![Check {
        name: "regime".into(),
        passed: true,
        detail: json!({ "case": regime.name() }),
    }];
    checks.extend(lexp_digraph(inputs, o, regime)?);
    Ok(checks)
}

fn complement(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    require(g.is_strongly_connected(), Hypothesis::StronglyConnected(Operand::First))?;
    require(g.metrics().is_out_regular(), Hypothesis::OutRegular(Operand::First))?;
    let a = digraph_matrix(g, MatrixKind::A)?;
    let f = FactorSpectralData::from_matrix(&a, Operand::First, &o.tol)?.with_eigvecs(&a, &o.tol)?;
    let cs = complement_shift(&f)?;
    let b = complement_matrix(&a);
    let computed = oracle(&b, &o.tol)?;
    let mut rows = Vec::new();
    let mut passed = true;
    for z in computed.values() {
        let predicted = cs.transferred_gmult(&a, z, &o.tol)?;
        let numeric = geometric_multiplicity(&b, z, GmultMode::Numeric(o.tol.rank))?;
        passed &= predicted == numeric;
        rows.push(json!({"z": {"re": z.re, "im": z.im}, "predicted": predicted, "numeric": numeric}));
    }
    Ok(vec![
        spectrum_check("spectrum", &cs.data.full_spectrum(), &computed, &o.tol),
        residual_check("eigenvector residuals", &b, cs.data.eigvecs(), &o.tol),
        Check {
            name: "gmult transfer".into(),
            passed,
            detail: Value::Array(rows),
        },
    ])
}

fn eigvecs_box_j_check(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2, f, f2) = box_j_factors(inputs, o)?;
    let f = f.with_eigvecs(&m, &o.tol)?;
    let f2 = f2.with_eigvecs(&m2, &o.tol)?;
    let pairs = eigvecs_box_j(&f, &f2)?;
    let c = construction(Construction::BoxJ, &m, &m2)?;
    let expected = f.eigvecs().len() + f2.eigvecs().len() - 1 + (f.n() - 1) * (f2.n() - 1);
    Ok(vec![
        residual_check("residuals", &c, &pairs, &o.tol),
        independence_check("independence", &pairs, &o.tol),
        Check {
            name: "count".into(),
            passed: pairs.len() == expected,
            detail: json!({ "vectors": pairs.len(), "expected": expected }),
        },
    ])
}

fn eigvecs_lexp_check(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let (m, m2) = (matrix(inputs, 0, MatrixKind::A)?, matrix(inputs, 1, MatrixKind::A)?);
    LexpKernel::from_matrices(&m, &m2, &o.tol)?;
    let f2 = FactorSpectralData::from_matrix(&m2, Operand::Second, &o.tol)?.with_eigvecs(&m2, &o.tol)?;
    let out = eigvecs_lexp(&eigenpairs(&m, &o.tol)?, &f2, &o.tol);
    let c = construction(Construction::Lexp, &m, &m2)?;
    Ok(vec![
        residual_check("residuals", &c, &out.pairs, &o.tol),
        Check {
            name: "independence".into(),
            passed: out.independent,
            detail: json!({ "vectors": out.pairs.len(), "skipped": out.skipped }),
        },
    ])
}

fn tensor(inputs: &[VerifyInput], o: &VerifyOptions, kind: ProductKind) -> Result<Vec<Check>> {
    let (g, h) = (digraph(inputs, 0), digraph(inputs, 1));
    let s = oracle(&digraph_matrix(g, MatrixKind::A)?, &o.tol)?;
    let s2 = oracle(&digraph_matrix(h, MatrixKind::A)?, &o.tol)?;
    let predicted = if kind == ProductKind::Direct {
        spec_direct(&s, &s2)
    } else {
        spec_strong(&s, &s2)
    };
    let computed = oracle(&digraph_matrix(&product(g, h, kind), MatrixKind::A)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn diam2(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    let d2 = diam2_distance_spectrum(g, &o.tol)?;
    let d = digraph_matrix(g, MatrixKind::D)?;
    Ok(vec![
        spectrum_check("spectrum", &d2.spectrum, &oracle(&d, &o.tol)?, &o.tol),
        residual_check("eigenvector residuals", &d, &d2.eigvecs, &o.tol),
    ])
}

fn dsrg_params(g: &Digraph) -> Result<DsrgParams> {
    infer_dsrg_params(g).ok_or(Error::HypothesisViolated(Hypothesis::Dsrg))
}

fn duval(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    let p = dsrg_params(g)?;
    let ds = duval_spectrum(&p)?;
    let computed = oracle(&digraph_matrix(g, MatrixKind::A)?, &o.tol)?;
    let mut check = spectrum_check("spectrum", &ds.spectrum()?, &computed, &o.tol);
    check.detail["params"] = json!(p);
    Ok(vec![check])
}

fn dsrg(inputs: &[VerifyInput], o: &VerifyOptions, kind: MatrixKind) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    let p = dsrg_params(g)?;
    let predicted = dsrg_derived_spectra(&p, kind)?;
    let computed = oracle(&digraph_matrix(g, kind)?, &o.tol)?;
    Ok(vec![spectrum_check("spectrum", &predicted, &computed, &o.tol)])
}

fn power(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    let t = g
        .metrics()
        .transmission_regularity
        .ok_or(Error::NotTransmissionRegular(Operand::First))?;
    let d = digraph_matrix(g, MatrixKind::D)?;
    let (p, m) = power_shape(&oracle(&d, &o.tol)?, t as f64, cluster_radius(&d, o.tol.cluster))?;
    let predicted = cartesian_power_spectrum(t as f64, p, m, g.n(), o.power)?;
    let big = digraph_matrix(&cartesian_power(g, o.power as usize), MatrixKind::D)?;
    let mut check = spectrum_check("spectrum", &predicted, &oracle(&big, &o.tol)?, &o.tol);
    check.detail["power"] = json!(o.power);
    Ok(vec![check])
}

fn nonreal(inputs: &[VerifyInput], o: &VerifyOptions) -> Result<Vec<Check>> {
    let g = digraph(inputs, 0);
    let p = dsrg_params(g)?;
    let class = nonreal_classification(&p);
    let mut checks = Vec::new();
    for kind in MatrixKind::ALL {
        let m = match digraph_matrix(g, kind) {
            Ok(m) => m,
            Err(Error::NotStronglyConnected) => continue,
            Err(e) => return Err(e),
        };
        let s = oracle(&m, &o.tol)?;
        let radius = cluster_radius(&m, o.tol.cluster);
        let has_nonreal = s.has_nonreal(radius);
        let all_integer = s.values().iter().all(|&z| near_integer(z, radius).is_some());
        let passed = match class {
            SpectrumClass::Nonreal => has_nonreal,
            SpectrumClass::AllRational => !has_nonreal && all_integer,
            SpectrumClass::RealIrrational => !has_nonreal,
        };
        checks.push(Check {
            name: kind.name().into(),
            passed,
            detail: json!({ "class": class, "nonreal": has_nonreal, "integral": all_integer }),
        });
    }
    Ok(checks)
}
