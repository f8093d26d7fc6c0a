//! End-to-end acceptance checks. Run with
//! `cargo test --release --test acceptance -- --nocapture` to see one line
//! per criterion.

mod common;

use std::time::Instant;

use common::{p, random_homogeneous, random_jet_poly, rng};
use jetlct_core::fporacle::{oracle_dimension, OracleDimension, DEFAULT_EVALUATION_CAP};
use jetlct_core::groebner::krull_dimension;
use jetlct_core::jets::{derivation_d, jet_generators, taylor_jet_generators, GeneratorSet};
use jetlct_core::lctlab::{
    check_fiber_bound, check_isom_fiber, detect_ruling, equality_characterization, lct_estimate,
    lower_bound_value, singular_locus_dim, threshold_value,
};
use jetlct_core::polyring::{int, rat};
use jetlct_core::{Budget, Polynomial};
use rand::Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn direct_dim(f: &Polynomial, m: usize) -> Result<i64, String> {
    krull_dimension(&taylor_jet_generators(f, m).map_err(|e| e.to_string())?, &budget()).map_err(|e| e.to_string())
}

fn dimension_law() -> Check {
    let t = p("x1^3 + x2^3", 2);
    let mut dims = Vec::new();
    for k in 1..=2usize {
        let dim = direct_dim(&t, 3 * k - 1)?;
        ensure(dim == 4 * k as i64, format!("dim T_{} = {dim}, expected {}", 3 * k - 1, 4 * k))?;
        dims.push(dim);
    }
    let rep = lct_estimate(&t, 2, &budget()).map_err(|e| e.to_string())?;
    ensure(rep.upper_bound == Some(rat(2, 3)) && rep.exact, format!("report {:?}, exact {}", rep.upper_bound, rep.exact))?;
    Ok(format!("dim T_2, T_5 = {dims:?}; lct 2/3 exact"))
}

fn round_trip() -> Check {
    let f = p("x1^3 + x2^3", 3);
    let r = singular_locus_dim(&f, &budget()).map_err(|e| e.to_string())?;
    ensure(r == 1, format!("r = {r}"))?;
    let rep = lct_estimate(&f, 2, &budget()).map_err(|e| e.to_string())?;
    ensure(rep.upper_bound == Some(rat(2, 3)) && rep.exact, "lct not exactly 2/3")?;
    let ruling = detect_ruling(&f).map_err(|e| e.to_string())?;
    ensure(ruling.r_prime == 1, format!("r' = {}", ruling.r_prime))?;
    ensure(ruling.basis == vec![vec![int(0), int(0), int(1)]], "basis is not e3")?;
    ensure(ruling.reduced_poly == p("x1^3 + x2^3", 2), "T not recovered")?;
    let v = equality_characterization(&f, 2, &budget()).map_err(|e| e.to_string())?;
    ensure(v.passed(), v.detail.clone())?;
    Ok("r = 1, lct 2/3 exact, ruling e3, both directions pass".into())
}

fn isom() -> Check {
    let cases = [("x1*x2", 2, 1), ("x1*x2", 2, 3), ("x1*x2*x3", 3, 2), ("x1^2+x2^2", 2, 1), ("x1^2+x2^2", 2, 3)];
    for (f, n, m) in cases {
        let v = check_isom_fiber(&p(f, n), m, &budget()).map_err(|e| e.to_string())?;
        ensure(v.passed(), format!("{f}: {}", v.detail))?;
    }
    Ok(format!("{} cases exact", cases.len()))
}

fn fiber_bound() -> Check {
    let f = p("x1^2 + x2^3", 2);
    let mut details = Vec::new();
    for m in [2, 4, 6] {
        let v = check_fiber_bound(&f, &[int(0), int(0)], m, &budget()).map_err(|e| e.to_string())?;
        ensure(v.passed(), v.detail.clone())?;
        details.push(v.detail);
    }
    Ok(details.join("; "))
}

fn lower_bound_corpus() -> Check {
    let mut g = rng(11);
    let mut checked = 0;
    for i in 0..50 {
        let n = g.gen_range(2..=3);
        let d = g.gen_range(2..=4);
        let f = random_homogeneous(&mut g, n, d, 3);
        let rep = lct_estimate(&f, 2, &budget()).map_err(|e| format!("#{i} {f}: {e}"))?;
        let bound = lower_bound_value(n, rep.r, rep.d);
        for row in &rep.dim_table {
            let dim = row.jet_dim.ok_or_else(|| format!("#{i} {f}: m = {} not computed", row.m))?;
            let value = threshold_value(n, row.m, dim);
            ensure(value >= bound, format!("#{i} {f}: m = {} gives {value} < {bound}", row.m))?;
            checked += 1;
        }
    }
    Ok(format!("50 polynomials, {checked} sampled values, 0 violations"))
}

/// Jet ideals whose point counts over F_5 and F_7 round to their dimension.
pub fn oracle_corpus() -> Vec<(String, usize, usize)> {
    [
        ("x1", 2, 2),
        ("x1^2", 1, 1),
        ("x1^2", 1, 3),
        ("x1*x2 - 1", 2, 1),
        ("x1*x2 - 1", 2, 3),
        ("x1^2 - x2^3", 2, 1),
        ("x1^2 - x2^3", 2, 3),
        ("x1^2 - x2*x3", 3, 1),
        ("x1^2 - x2*x3", 3, 2),
        ("x1*x2*x3 - 1", 3, 2),
        ("x1^3 + x2^3 + x3^3", 3, 1),
        ("x1^2 + x2^2 + x3^2 - 1", 3, 2),
    ]
    .iter()
    .map(|&(f, n, m)| (f.to_string(), n, m))
    .collect()
}

fn oracle() -> Check {
    let corpus = oracle_corpus();
    for (f, n, m) in &corpus {
        let ideal = taylor_jet_generators(&p(f, *n), *m).map_err(|e| e.to_string())?;
        ensure(ideal.num_vars() <= 12, format!("{f}: too many variables"))?;
        let gb = krull_dimension(&ideal, &budget()).map_err(|e| e.to_string())?;
        let (verdict, records) = oracle_dimension(&ideal, DEFAULT_EVALUATION_CAP).map_err(|e| e.to_string())?;
        ensure(records.iter().take(2).all(|r| r.prime == 5 || r.prime == 7), "unexpected primes")?;
        ensure(
            verdict == OracleDimension::Agreed(gb) && records.len() == 2,
            format!("{f} at m = {m}: Gröbner {gb}, oracle {verdict:?} {records:?}"),
        )?;
    }
    Ok(format!("{} ideals agree over F_5 and F_7", corpus.len()))
}

fn derivation() -> Check {
    let mut g = rng(7);
    for i in 0..200 {
        let n = g.gen_range(1..=3);
        let a = random_jet_poly(&mut g, n, 2, 4, 3);
        let b = random_jet_poly(&mut g, n, 2, 4, 3);
        let lhs = derivation_d(&(&a * &b));
        let rhs = &(&derivation_d(&a) * &b) + &(&a * &derivation_d(&b));
        ensure(lhs == rhs, format!("Leibniz instance {i}: {a} / {b}"))?;
    }
    for (n, d) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let f = random_homogeneous(&mut g, n, d, 3);
        let gens = jet_generators(&f, 5, GeneratorSet::Derivation).map_err(|e| e.to_string())?;
        for (q, h) in gens.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            for (m, _) in h.terms() {
                ensure(
                    m.jet_weight() == q as u32 && m.total_degree() == d,
                    format!("D^{q}({f}) has monomial {m}"),
                )?;
            }
        }
    }
    Ok("200 Leibniz instances; weights and degrees exact up to p = 5".into())
}

fn degenerate() -> Check {
    for d in [2u32, 3] {
        let f = p(&format!("x1^{d}"), 2);
        let rep = lct_estimate(&f, 2, &budget()).map_err(|e| e.to_string())?;
        ensure(
            rep.upper_bound == Some(rat(1, d as i64)) && rep.exact,
            format!("x1^{d}: lct {:?} exact {}", rep.upper_bound, rep.exact),
        )?;
        let r = detect_ruling(&f).map_err(|e| e.to_string())?;
        ensure(r.r_prime == 1, format!("x1^{d}: ruling dim {}", r.r_prime))?;
    }
    let f = p("x1", 2);
    let rep = lct_estimate(&f, 2, &budget()).map_err(|e| e.to_string())?;
    ensure(rep.upper_bound == Some(int(1)) && rep.exact, "x1: lct not exactly 1")?;
    for m in 0..=4 {
        let dim = direct_dim(&f, m)?;
        ensure(dim == m as i64 + 1, format!("x1: dim Z_{m} = {dim}"))?;
    }
    Ok("x1^2, x1^3: lct 1/2, 1/3 exact, ruling 1; x1: lct 1, dim Z_m = m+1".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("dimension law dim T_{3k-1} = 4k", dimension_law),
        ("product round trip for x1^3+x2^3 in n=3", round_trip),
        ("fiber over the origin vs shifted jets", isom),
        ("multiplicity fiber bound", fiber_bound),
        ("lower bound on random homogeneous corpus", lower_bound_corpus),
        ("Gröbner vs point-count oracle", oracle),
        ("derivation properties", derivation),
        ("degenerate and product cases", degenerate),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match &result {
            Ok(detail) => println!("criterion {}: PASS ({name}; {detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL ({name}; {detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
