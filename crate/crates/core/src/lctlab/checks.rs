//! Pass/fail checks. Dimensions here come straight from Gröbner bases of
//! the jet and fiber ideals rather than from [`super::JetDimensions`].

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, Budget};
use crate::jets::{fiber_ideal_at, taylor_jet_generators};
use crate::polyring::{int, rat, render_rational, Polynomial, Rational};

use super::{
    check_input, detect_ruling, gradient, lct_estimate, lower_bound_value, multiplicity_at,
    singular_locus_dim, threshold_value, LctReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Hypotheses of the check are not met; nothing was tested.
    NotApplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "not_applicable",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Verdict {
    fn new(check: &str, outcome: Outcome, detail: String) -> Self {
        Verdict { check: check.to_string(), outcome, detail }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn homogeneous_degree(f: &Polynomial) -> Result<usize> {
    check_input(f)?;
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(f.total_degree().unwrap_or(0) as usize)
}

fn require_level(m: usize, d: usize) -> Result<()> {
    if m + 1 < d {
        return Err(Error::LevelTooSmall { m: m as i64, min: d as i64 - 1 });
    }
    Ok(())
}

/// `dim Z_m` from the Taylor jet ideal; `dim Z_{−1} = 0`.
pub fn direct_jet_dim(f: &Polynomial, m: i64, budget: &Budget) -> Result<i64> {
    if m < 0 {
        return Ok(0);
    }
    krull_dimension(&taylor_jet_generators(f, m as usize)?, budget)
}

/// `dim ρ_m⁻¹(x)` from the fiber ideal.
pub fn direct_fiber_dim(f: &Polynomial, m: usize, x: &[Rational], budget: &Budget) -> Result<i64> {
    krull_dimension(&fiber_ideal_at(f, m, x)?, budget)
}

/// Every table entry lies in `[(m+1)(n−1), (m+1)n]`.
pub(crate) fn table_range(report: &LctReport) -> Verdict {
    let n = report.n as i64;
    let bad: Vec<usize> = report
        .dim_table
        .iter()
        .filter(|row| match row.jet_dim {
            Some(v) => {
                let m1 = row.m as i64 + 1;
                v < m1 * (n - 1) || v > m1 * n
            }
            None => false,
        })
        .map(|row| row.m)
        .collect();
    let detail = if bad.is_empty() {
        "all computed rows within range".to_string()
    } else {
        format!("rows out of range at m = {bad:?}")
    };
    Verdict::new("dim_table_range", Outcome::from_bool(bad.is_empty()), detail)
}

/// Every sampled `n − dim Z_m/(m+1)` is at least `min{(n−r)/d, 1}`.
pub fn verify_lower_bound(f: &Polynomial, report: &LctReport) -> Result<Verdict> {
    let d = homogeneous_degree(f)?;
    let bound = lower_bound_value(report.n, report.r, d as u32);
    let mut worst: Option<(usize, Rational)> = None;
    for row in &report.dim_table {
        if let Some(v) = row.jet_dim {
            let value = threshold_value(report.n, row.m, v);
            if value < bound && worst.as_ref().is_none_or(|(_, w)| value < *w) {
                worst = Some((row.m, value));
            }
        }
    }
    Ok(match worst {
        None => Verdict::new(
            "lower_bound",
            Outcome::Pass,
            format!("all sampled values >= {}", render_rational(&bound)),
        ),
        Some((m, v)) => Verdict::new(
            "lower_bound",
            Outcome::Fail,
            format!("m = {m}: {} < {}", render_rational(&v), render_rational(&bound)),
        ),
    })
}

/// `dim ρ_m⁻¹(0) = dim Z_{m−d} + n(d−1)` for homogeneous `F`, `m ≥ d−1`.
pub fn check_isom_fiber(f: &Polynomial, m: usize, budget: &Budget) -> Result<Verdict> {
    let d = homogeneous_degree(f)?;
    require_level(m, d)?;
    let n = f.n();
    let fiber = direct_fiber_dim(f, m, &vec![int(0); n], budget)?;
    let lower = direct_jet_dim(f, m as i64 - d as i64, budget)?;
    let rhs = lower + (n * (d - 1)) as i64;
    Ok(Verdict::new(
        "isom",
        Outcome::from_bool(fiber == rhs),
        format!("m = {m}: dim fiber = {fiber}, dim Z_{} + {} = {rhs}", m as i64 - d as i64, n * (d - 1)),
    ))
}

/// `dim Z_m ≤ max{(m+1)(n−1), dim Z_{m−d} + n(d−1) + r}`.
pub fn check_recursion(f: &Polynomial, m: usize, budget: &Budget) -> Result<Verdict> {
    let d = homogeneous_degree(f)?;
    require_level(m, d)?;
    let r = singular_locus_dim(f, budget)?;
    if r < 0 {
        return Err(Error::SmoothHypersurface);
    }
    let n = f.n() as i64;
    let lhs = direct_jet_dim(f, m as i64, budget)?;
    let lower = direct_jet_dim(f, m as i64 - d as i64, budget)?;
    let rhs = ((m as i64 + 1) * (n - 1)).max(lower + n * (d as i64 - 1) + r);
    Ok(Verdict::new(
        "recursion",
        Outcome::from_bool(lhs <= rhs),
        format!("m = {m}: dim Z_m = {lhs} <= {rhs}"),
    ))
}

/// `dim ρ_m⁻¹(x) ≤ mn − ⌊m/q⌋` with `q` the multiplicity at `x`.
pub fn check_fiber_bound(f: &Polynomial, x: &[Rational], m: usize, budget: &Budget) -> Result<Verdict> {
    let q = multiplicity_at(f, x)? as usize;
    let n = f.n();
    let dim = direct_fiber_dim(f, m, x, budget)?;
    let bound = (m * n - m / q) as i64;
    Ok(Verdict::new(
        "fiber",
        Outcome::from_bool(dim <= bound),
        format!("m = {m}, q = {q}: dim fiber = {dim} <= {bound}"),
    ))
}

/// `dim ρ_m⁻¹(x) ≤ dim ρ_m⁻¹(0)` for the supplied singular points.
pub fn check_semicontinuity(f: &Polynomial, m: usize, xs: &[Vec<Rational>], budget: &Budget) -> Result<Verdict> {
    homogeneous_degree(f)?;
    let n = f.n();
    for x in xs {
        if !f.eval(x)?.is_zero() {
            return Err(Error::NotOnHypersurface);
        }
        for g in gradient(f) {
            if !g.eval(x)?.is_zero() {
                return Err(Error::NotSingularPoint);
            }
        }
    }
    let origin = direct_fiber_dim(f, m, &vec![int(0); n], budget)?;
    let mut dims = Vec::with_capacity(xs.len());
    for x in xs {
        dims.push(direct_fiber_dim(f, m, x, budget)?);
    }
    let ok = dims.iter().all(|&v| v <= origin);
    Ok(Verdict::new(
        "semicont",
        Outcome::from_bool(ok),
        format!("m = {m}: fiber dims {dims:?} against {origin} at the origin"),
    ))
}

/// Both directions of the equality case `lct = (n−r)/d` when `d ≥ n − r + 1`:
/// equality forces a splitting `Z = T × A^r` with `Sing(T) = {0}`, and such a
/// splitting forces equality.
pub fn equality_characterization(f: &Polynomial, max_k: usize, budget: &Budget) -> Result<Verdict> {
    let d = homogeneous_degree(f)? as i64;
    let n = f.n() as i64;
    let r = singular_locus_dim(f, budget)?;
    if r < 0 || d < n - r + 1 {
        return Ok(Verdict::new(
            "main2",
            Outcome::NotApplicable,
            format!("requires r >= 0 and d >= n - r + 1 (n = {n}, r = {r}, d = {d})"),
        ));
    }
    let target = rat(n - r, d);
    let report = lct_estimate(f, max_k, budget)?;
    let ruling = detect_ruling(f)?;
    let t_sing = singular_locus_dim(&ruling.reduced_poly, budget)?;
    let equal = report.exact && report.upper_bound.as_ref() == Some(&target);
    let split = t_sing == 0 && ruling.r_prime as i64 == r;

    let forward = !equal || (ruling.r_prime as i64 >= r && t_sing == 0);
    let backward = !split || equal;
    Ok(Verdict::new(
        "main2",
        Outcome::from_bool(forward && backward),
        format!(
            "lct {} (exact: {}), target {}, ruling dim {}, dim Sing(T) = {}",
            report.upper_bound.as_ref().map_or("-".to_string(), render_rational),
            report.exact,
            render_rational(&target),
            ruling.r_prime,
            t_sing
        ),
    ))
}
