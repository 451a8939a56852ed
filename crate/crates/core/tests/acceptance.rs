use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use digraph_spectra::catalog::{cartesian_power, catalog, figure1, figure2_dsrg, random_strongly_connected};
use digraph_spectra::dsrg::{
    cartesian_power_spectrum, dsrg_derived_spectra, duval_spectrum, validate_dsrg, DsrgParams,
};
use digraph_spectra::eigen::{
    eigenvalues, eigenvalues_raw, eigenvectors, geometric_multiplicity, spectrum_match, GmultMode, Spectrum, Tolerances,
};
use digraph_spectra::exact::{exact_determinant, exact_rank};
use digraph_spectra::formulas::{gmult_lexp, GmultCase};
use digraph_spectra::matrix::{
    construction, digraph_integer_matrix, digraph_matrix, kronecker, Construction, IntegerMatrix, MatrixKind,
    RealMatrix,
};
use digraph_spectra::products::{product, ProductKind};
use digraph_spectra::verify::{theorem_arity, theorem_names, verify, Status, VerifyInput, VerifyOptions};
use digraph_spectra::Digraph;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn matches(want: &Spectrum, got: &Spectrum, tol: f64) -> Outcome {
    let r = spectrum_match(want, got, tol).map_err(|e| e.to_string())?;
    ensure(r.passed, || {
        format!("worst deviation {:.3e} > {tol:e}", r.worst_deviation)
    })
}

fn example_pair() -> (RealMatrix, RealMatrix) {
    let a = (28.0 - 7f64.sqrt()) / 3.0;
    let m = RealMatrix::from_rows(&[vec![0.0, a], vec![a, 0.0]]).unwrap();
    let m2 = RealMatrix::from_rows(&[vec![12.0, 6.0, 12.0], vec![7.0, 13.0, 10.0], vec![6.0, 15.0, 9.0]]).unwrap();
    (m, m2)
}

fn figure1_distance() -> Outcome {
    let start = Instant::now();
    let tol = Tolerances::default();
    let g = figure1();
    let d = digraph_integer_matrix(&g, MatrixKind::D).map_err(|e| e.to_string())?;
    let shown =
        IntegerMatrix::from_rows(&[vec![0, 1, 2, 1], vec![1, 0, 1, 2], vec![1, 1, 0, 2], vec![1, 2, 1, 0]]).unwrap();
    ensure(d == shown, || format!("distance matrix {d:?}"))?;
    let dr = d.to_real();
    let spec = eigenvalues(&dr, tol.cluster).map_err(|e| e.to_string())?;
    matches(&Spectrum::from_reals(&[4.0, -1.0, -1.0, -2.0]), &spec, 1e-8)?;
    let g1 = geometric_multiplicity(&dr, c(-1.0, 0.0), GmultMode::Numeric(tol.rank)).map_err(|e| e.to_string())?;
    ensure(g1 == 1, || format!("gmult(-1) = {g1}"))?;
    let v = eigenvectors(&dr, c(-1.0, 0.0), tol.rank).map_err(|e| e.to_string())?;
    ensure(v.len() == 1, || format!("{} kernel vectors", v.len()))?;
    let u = [4.0, -1.0, -1.0, -1.0];
    let uu: f64 = u.iter().map(|x| x * x).sum();
    let proj: Complex64 = v[0].iter().zip(u).map(|(a, b)| a * b).sum::<Complex64>() / uu;
    let off: f64 = v[0]
        .iter()
        .zip(u)
        .map(|(a, b)| (a - proj * b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let norm: f64 = v[0].iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    let angle = (off / norm).asin();
    ensure(angle <= 1e-8, || format!("kernel off by angle {angle:e}"))?;
    within(start.elapsed(), Duration::from_millis(100))
}

fn box_i_counterexample() -> Outcome {
    let m = IntegerMatrix::from_rows(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
    let m1 =
        IntegerMatrix::from_rows(&[vec![0, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 0]]).unwrap();
    let m2 =
        IntegerMatrix::from_rows(&[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0]]).unwrap();
    let ranks: Vec<usize> = [&m1, &m2]
        .iter()
        .map(|f| {
            let b = construction(Construction::BoxI, &m.to_real(), &f.to_real()).unwrap();
            exact_rank(&b.to_integer().expect("integer entries"))
        })
        .collect();
    ensure(ranks == [6, 7], || format!("ranks {ranks:?}"))
}

fn lexp_worked_example() -> Outcome {
    let start = Instant::now();
    let tol = Tolerances::default();
    let (m, m2) = example_pair();
    let prod = construction(Construction::Lexp, &m, &m2).map_err(|e| e.to_string())?;
    let s7 = 7f64.sqrt();
    let want = Spectrum::from_weighted(&[(c(58.0 - s7, 0.0), 1), (c(2.0 + s7, 0.0), 3), (c(2.0 - s7, 0.0), 2)]);
    matches(
        &want,
        &eigenvalues(&prod, tol.cluster).map_err(|e| e.to_string())?,
        1e-7,
    )?;
    let expected = [
        (58.0 - s7, 1, GmultCase::FirstOnly),
        (2.0 + s7, 2, GmultCase::BothNotPerp),
        (2.0 - s7, 2, GmultCase::SecondOnly),
    ];
    for (z, g, case) in expected {
        let q = gmult_lexp(&m, &m2, c(z, 0.0), &tol).map_err(|e| e.to_string())?;
        ensure(q.value == g && q.case == case, || {
            format!("gmult({z}) = {} ({:?})", q.value, q.case)
        })?;
        let numeric =
            geometric_multiplicity(&prod, c(z, 0.0), GmultMode::Numeric(tol.rank)).map_err(|e| e.to_string())?;
        ensure(numeric == g, || format!("numeric gmult({z}) = {numeric}"))?;
    }
    within(start.elapsed(), Duration::from_millis(100))
}

fn figure2_dsrg_spectra() -> Outcome {
    let g = figure2_dsrg();
    let p = DsrgParams::new(8, 4, 3, 1, 3);
    ensure(validate_dsrg(&g, &p), || "not a DSRG with (8,4,3,1,3)".into())?;
    let duval = duval_spectrum(&p).map_err(|e| e.to_string())?;
    let r = Ratio::from_integer;
    ensure(duval.exact_theta == Some([r(4), r(0), r(-2)]), || {
        format!("{:?}", duval.exact_theta)
    })?;
    ensure(duval.mult == [r(1), r(5), r(2)], || format!("{:?}", duval.mult))?;
    let shown = Spectrum::from_weighted(&[(c(10.0, 0.0), 1), (c(-2.0, 0.0), 5), (c(0.0, 0.0), 2)]);
    let formula = dsrg_derived_spectra(&p, MatrixKind::D).map_err(|e| e.to_string())?;
    matches(&shown, &formula, 1e-8)?;
    let d = digraph_matrix(&g, MatrixKind::D).map_err(|e| e.to_string())?;
    matches(&shown, &eigenvalues(&d, 1e-8).map_err(|e| e.to_string())?, 1e-8)
}

fn figure2_power() -> Outcome {
    let start = Instant::now();
    let g = cartesian_power(&figure2_dsrg(), 2);
    let d = digraph_matrix(&g, MatrixKind::D).map_err(|e| e.to_string())?;
    ensure(d.rows() == 64, || format!("order {}", d.rows()))?;
    let formula = cartesian_power_spectrum(10.0, c(-2.0, 0.0), 5, 8, 2).map_err(|e| e.to_string())?;
    let shown = Spectrum::from_weighted(&[(c(160.0, 0.0), 1), (c(-16.0, 0.0), 10), (c(0.0, 0.0), 53)]);
    matches(&shown, &formula, 1e-12)?;
    let oracle = eigenvalues(&d, 1e-8).map_err(|e| e.to_string())?;
    let report = spectrum_match(&formula, &oracle, 1.0).map_err(|e| e.to_string())?;
    let bound = 1e-6 * d.norm_inf();
    let worst = report
        .pairs
        .iter()
        .map(|p| (p.predicted - p.computed).norm())
        .fold(0.0, f64::max);
    ensure(worst <= bound, || format!("worst error {worst:e} > {bound:e}"))?;
    within(start.elapsed(), Duration::from_secs(5))
}

fn strong_construction(a: &RealMatrix, b: &RealMatrix) -> RealMatrix {
    kronecker(a, b)
        .unwrap()
        .add(&construction(Construction::BoxI, a, b).unwrap())
}

fn construction_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut pairs = 0;
    while pairs < 120 {
        let (n, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let p = rng.gen_range(0.1..0.6);
        let g = random_strongly_connected(n, p, &mut rng);
        let h = random_strongly_connected(n2, p, &mut rng);
        let (a, a2) = (
            digraph_matrix(&g, MatrixKind::A).unwrap(),
            digraph_matrix(&h, MatrixKind::A).unwrap(),
        );
        let adj = |kind| digraph_matrix(&product(&g, &h, kind), MatrixKind::A).unwrap();
        let expected = [
            (
                ProductKind::Cartesian,
                construction(Construction::BoxI, &a, &a2).unwrap(),
            ),
            (
                ProductKind::Lexicographic,
                construction(Construction::Lexp, &a, &a2).unwrap(),
            ),
            (ProductKind::Direct, kronecker(&a, &a2).unwrap()),
            (ProductKind::Strong, strong_construction(&a, &a2)),
        ];
        for (kind, want) in expected {
            ensure(adj(kind) == want, || {
                format!("{kind:?} adjacency differs for {g:?} and {h:?}")
            })?;
        }
        let d = digraph_matrix(&g, MatrixKind::D).unwrap();
        let d2 = digraph_matrix(&h, MatrixKind::D).unwrap();
        let dp = digraph_matrix(&product(&g, &h, ProductKind::Cartesian), MatrixKind::D).unwrap();
        ensure(dp == construction(Construction::BoxJ, &d, &d2).unwrap(), || {
            format!("Cartesian distance matrix differs for {g:?} and {h:?}")
        })?;
        pairs += 1;
    }
    Ok(())
}

fn sweep() -> Outcome {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let fixtures: Vec<Digraph> = catalog().into_iter().map(|f| f.digraph).collect();
    let (m, m2) = example_pair();
    let worked = [VerifyInput::Matrix(m), VerifyInput::Matrix(m2)];
    let mut failures = Vec::new();
    let mut unexercised = Vec::new();
    for name in theorem_names() {
        let arity = theorem_arity(name).expect("registered");
        let mut runs: Vec<Vec<VerifyInput>> = Vec::new();
        for g in &fixtures {
            if arity.count() == 1 {
                runs.push(vec![VerifyInput::Digraph(g.clone())]);
            } else {
                for h in &fixtures {
                    runs.push(vec![VerifyInput::Digraph(g.clone()), VerifyInput::Digraph(h.clone())]);
                }
            }
        }
        if matches!(arity, digraph_spectra::verify::Arity::Operands(2)) {
            runs.push(worked.to_vec());
        }
        let mut passes = 0;
        for inputs in runs {
            match verify(name, &inputs, &opts) {
                Ok(v) if v.status == Status::Pass => passes += 1,
                Ok(v) if v.status == Status::Skip => {}
                Ok(v) => failures.push(format!("{name}: {}", serde_json::to_string(&v.checks).unwrap())),
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
        if passes == 0 {
            unexercised.push(name);
        }
    }
    ensure(failures.is_empty(), || {
        format!("{} failures, first: {}", failures.len(), failures[0])
    })?;
    ensure(unexercised.is_empty(), || format!("never applicable: {unexercised:?}"))?;
    within(start.elapsed(), Duration::from_secs(60))
}

fn poly_from_roots(roots: &[Complex64]) -> Vec<f64> {
    let mut coef = vec![c(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![c(0.0, 0.0); coef.len() + 1];
        for (i, &a) in coef.iter().enumerate() {
            next[i] += a;
            next[i + 1] -= a * r;
        }
        coef = next;
    }
    coef.iter().map(|z| z.re).collect()
}

fn companion(coef: &[f64]) -> RealMatrix {
    let k = coef.len() - 1;
    RealMatrix::from_fn(k, k, |i, j| {
        if i == 0 {
            -coef[j + 1]
        } else if j + 1 == i {
            1.0
        } else {
            0.0
        }
    })
}

fn eigensolver_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..200 {
        let n = rng.gen_range(1..=9);
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
        let im = IntegerMatrix::new(n, n, entries).unwrap();
        let m = im.to_real();
        let raw = eigenvalues_raw(&m).map_err(|e| e.to_string())?;
        let scale = 1.0 + m.norm_inf();
        let trace: Complex64 = raw.iter().sum();
        ensure(
            (trace.re - m.trace()).abs() <= 1e-9 * scale * n as f64 && trace.im.abs() <= 1e-9 * scale,
            || format!("trial {trial}: trace {trace} vs {}", m.trace()),
        )?;
        let det: Complex64 = raw.iter().product();
        let exact = exact_determinant(&im).map_err(|e| e.to_string())?;
        let exact: f64 = exact.to_string().parse().unwrap();
        ensure((det.re - exact).abs() <= 1e-7 * scale.powi(n as i32), || {
            format!("trial {trial}: det {det} vs {exact}")
        })?;
        let mut conj: Vec<Complex64> = raw.iter().map(|z| z.conj()).collect();
        let mut orig = raw.clone();
        let key = |a: &Complex64, b: &Complex64| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im));
        orig.sort_by(key);
        conj.sort_by(key);
        let spread = orig.iter().zip(&conj).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        ensure(spread <= 1e-9 * scale, || {
            format!("trial {trial}: conjugates off by {spread:e}")
        })?;
    }
    for k in 1..=8usize {
        for _ in 0..10 {
            let mut roots = Vec::new();
            while roots.len() < k {
                let re = rng.gen_range(-8..=8) as f64 / 2.0;
                let cand = if k - roots.len() >= 2 && rng.gen_bool(0.4) {
                    let im = rng.gen_range(1..=4) as f64 / 2.0;
                    vec![c(re, im), c(re, -im)]
                } else {
                    vec![c(re, 0.0)]
                };
                if cand
                    .iter()
                    .all(|z| roots.iter().all(|r: &Complex64| (r - z).norm() > 0.4))
                {
                    roots.extend(cand);
                }
            }
            let m = companion(&poly_from_roots(&roots));
            let got = eigenvalues(&m, 1e-8).map_err(|e| e.to_string())?;
            matches(&Spectrum::from_values(&roots), &got, 1e-6).map_err(|e| format!("roots {roots:?}: {e}"))?;
        }
    }
    box_i_counterexample()
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("figure 1 distance spectrum and kernel", figure1_distance),
        ("box-I counterexample ranks", box_i_counterexample),
        ("lexicographic worked example", lexp_worked_example),
        ("figure 2 DSRG spectra", figure2_dsrg_spectra),
        ("64-vertex Cartesian power", figure2_power),
        ("product construction identities", construction_identities),
        ("closed form vs oracle sweep", sweep),
        ("eigensolver property suite", eigensolver_properties),
    ];
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let line = match &outcome {
            Ok(()) => format!("PASS {} {label} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => format!("FAIL {} {label}: {why}", i + 1),
        };
        writeln!(out, "{line}").unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
