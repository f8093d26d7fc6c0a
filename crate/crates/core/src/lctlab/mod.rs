//! Log canonical threshold bounds of `(A^n, Z)` read off from jet-scheme
//! dimensions, plus the checks relating those dimensions to the singular
//! locus and to product decompositions of `Z`.
//!
//! Jet dimensions are computed by splitting `Z_m` over its base `Z`. The top
//! Taylor generator `G_m` is linear in the level-`m` coordinates with
//! coefficient vector `∇F`, so over the smooth part of `Z` the projection
//! `Z_m → Z` is an affine bundle of rank `m(n−1)`, while over `V(F, ∇F)` the
//! level-`m` coordinates are unconstrained and the remaining equations drop
//! their top-level terms. When `F` is homogeneous with an isolated singular
//! point, the jets over the origin are again jets of `Z` (shifted by `d`
//! levels) because `F(t·γ) = t^d·F(γ)`. A cone with a larger singular locus
//! is split into the origin and the charts `x_i ≠ 0`, and a ruled `F` is
//! first reduced to fewer variables. Everything else goes through Gröbner
//! bases. The checks in [`checks`] recompute their dimensions directly from
//! the jet and fiber ideals, which keeps them independent of this shortcut.

mod checks;
mod ruling;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, krull_dimension, Budget, MonomialOrder};
use crate::jets::{fiber_ideal_at, jet_generators, jet_variables, GeneratorSet, Ideal};
use crate::polyring::{int, rat, JetVariable, Polynomial, Rational};

pub use checks::{
    check_fiber_bound, check_isom_fiber, check_recursion, check_semicontinuity,
    equality_characterization, verify_lower_bound, Outcome, Verdict,
};
pub use ruling::{detect_ruling, RulingResult};

pub(crate) fn check_input(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_base_level() {
        return Err(Error::NotBaseLevel);
    }
    if f.total_degree() == Some(0) {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

fn gradient(f: &Polynomial) -> Vec<Polynomial> {
    (1..=f.n()).map(|i| f.partial_derivative(JetVariable::new(i, 0))).collect()
}

/// Dimension of `V(F, ∂F/∂x_1, …, ∂F/∂x_n)`, or −1 when `Z` is smooth.
pub fn singular_locus_dim(f: &Polynomial, budget: &Budget) -> Result<i64> {
    check_input(f)?;
    let mut gens = vec![f.clone()];
    gens.extend(gradient(f));
    krull_dimension(&Ideal::in_jet_ring(f.n(), 0, gens)?, budget)
}

/// Order of vanishing of `F` at `x`.
pub fn multiplicity_at(f: &Polynomial, x: &[Rational]) -> Result<u32> {
    check_input(f)?;
    if !f.eval(x)?.is_zero() {
        return Err(Error::NotOnHypersurface);
    }
    Ok(f.translate(x)?.min_degree().unwrap_or(0))
}

/// Whether some point of `Z` has a nonvanishing gradient, i.e. some partial
/// lies outside the radical of `(F)`. Tested with an extra variable `y`
/// via `1 ∈ (F, y·∂F/∂x_i − 1)`.
fn has_regular_points(f: &Polynomial, budget: &Budget) -> Result<bool> {
    let n = f.n();
    let y = Polynomial::x(n + 1, n + 1);
    let lifted = f.with_ambient(n + 1)?;
    for g in gradient(f) {
        if g.is_zero() {
            continue;
        }
        let h = &(&y * &g.with_ambient(n + 1)?) - &Polynomial::one(n + 1);
        let ideal = Ideal::in_jet_ring(n + 1, 0, vec![lifted.clone(), h])?;
        if !groebner_basis(&ideal, &MonomialOrder::default(), budget)?.is_unit() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Memoized jet dimensions of one hypersurface.
#[derive(Debug)]
pub struct JetDimensions {
    f: Polynomial,
    budget: Budget,
    degree: Option<u32>,
    singular: Option<i64>,
    regular: Option<bool>,
    /// `F` with `x_i = 1`, for the charts covering `Z \ {0}` of a cone.
    charts: Option<Vec<JetDimensions>>,
    /// `F` in fewer variables when `Z` is ruled, and the ruling dimension.
    ruled: Option<(Box<JetDimensions>, usize)>,
    jets: BTreeMap<usize, i64>,
}

/// `F(x_1, …, 1, …, x_n)` renumbered to `n − 1` variables, `None` if constant.
fn chart(f: &Polynomial, i: usize) -> Option<Polynomial> {
    let n = f.n() - 1;
    let g = f.substitute(n, |v| {
        Some(match v.base().cmp(&i) {
            std::cmp::Ordering::Less => Polynomial::x(n, v.base()),
            std::cmp::Ordering::Equal => Polynomial::one(n),
            std::cmp::Ordering::Greater => Polynomial::x(n, v.base() - 1),
        })
    });
    (g.total_degree().unwrap_or(0) > 0).then_some(g)
}

impl JetDimensions {
    pub fn new(f: &Polynomial, budget: &Budget) -> Result<Self> {
        check_input(f)?;
        let degree = if f.is_homogeneous() { f.total_degree() } else { None };
        let ruling = detect_ruling(f)?;
        let ruled = if ruling.r_prime > 0 {
            Some((Box::new(JetDimensions::new(&ruling.reduced_poly, budget)?), ruling.r_prime))
        } else {
            None
        };
        Ok(JetDimensions {
            f: f.clone(),
            budget: *budget,
            degree,
            singular: None,
            regular: None,
            charts: None,
            ruled,
            jets: BTreeMap::new(),
        })
    }

    pub fn singular_dim(&mut self) -> Result<i64> {
        if let Some(r) = self.singular {
            return Ok(r);
        }
        let r = singular_locus_dim(&self.f, &self.budget)?;
        self.singular = Some(r);
        Ok(r)
    }

    fn regular(&mut self) -> Result<bool> {
        if let Some(b) = self.regular {
            return Ok(b);
        }
        let b = has_regular_points(&self.f, &self.budget)?;
        self.regular = Some(b);
        Ok(b)
    }

    /// Jets over the punctured cone: `Z ∩ {x_i ≠ 0} ≅ V(F|_{x_i=1}) × G_m`,
    /// and jets of `G_m` add `m + 1` dimensions.
    fn punctured_cone_dim(&mut self, m: usize) -> Result<i64> {
        if self.charts.is_none() {
            let charts = (1..=self.f.n())
                .filter_map(|i| chart(&self.f, i))
                .map(|g| JetDimensions::new(&g, &self.budget))
                .collect::<Result<Vec<_>>>()?;
            self.charts = Some(charts);
        }
        let mut best = -1;
        for c in self.charts.as_mut().expect("charts built") {
            best = best.max(c.jet_dim(m)? + m as i64 + 1);
        }
        Ok(best)
    }

    /// `dim Z_m`.
    pub fn jet_dim(&mut self, m: usize) -> Result<i64> {
        if let Some(&v) = self.jets.get(&m) {
            return Ok(v);
        }
        // Z = Z(T) × A^r' after a linear change of coordinates
        if let Some((t, r)) = self.ruled.as_mut() {
            let v = t.jet_dim(m)? + ((m + 1) * *r) as i64;
            self.jets.insert(m, v);
            return Ok(v);
        }
        let n = self.f.n() as i64;
        let s = self.singular_dim()?;
        let v = match self.degree {
            // a zero-dimensional cone is the origin alone
            Some(d) if d >= 2 && s == 0 => {
                let smooth = if self.regular()? { (m as i64 + 1) * (n - 1) } else { -1 };
                smooth.max(self.origin_fiber_dim(m)?.expect("origin lies on a cone"))
            }
            Some(d) if d >= 2 && n >= 2 => {
                let origin = self.origin_fiber_dim(m)?.expect("origin lies on a cone");
                origin.max(self.punctured_cone_dim(m)?)
            }
            _ => {
                let smooth = if self.regular()? { (m as i64 + 1) * (n - 1) } else { -1 };
                let singular = if s < 0 {
                    -1
                } else if m == 0 {
                    s
                } else {
                    krull_dimension(&singular_jet_ideal(&self.f, m)?, &self.budget)? + n
                };
                smooth.max(singular)
            }
        };
        self.jets.insert(m, v);
        Ok(v)
    }

    /// `dim ρ_m⁻¹(0)`, or `None` when the origin is not on `Z`.
    pub fn origin_fiber_dim(&mut self, m: usize) -> Result<Option<i64>> {
        if let Some((t, r)) = self.ruled.as_mut() {
            return Ok(t.origin_fiber_dim(m)?.map(|v| v + (m * *r) as i64));
        }
        let n = self.f.n();
        let zero = vec![int(0); n];
        if !self.f.eval(&zero)?.is_zero() {
            return Ok(None);
        }
        match self.degree {
            Some(d) => {
                let d = d as usize;
                if m < d {
                    Ok(Some((m * n) as i64))
                } else {
                    Ok(Some(self.jet_dim(m - d)? + (n * (d - 1)) as i64))
                }
            }
            None => Ok(Some(krull_dimension(&fiber_ideal_at(&self.f, m, &zero)?, &self.budget)?)),
        }
    }
}

/// Jets over `V(F, ∇F)` with the free top level dropped: `F`, `∇F`, and
/// each `G_p` (`1 ≤ p ≤ m`) with its level-`p` part removed, over levels `< m`.
fn singular_jet_ideal(f: &Polynomial, m: usize) -> Result<Ideal> {
    let n = f.n();
    let taylor = jet_generators(f, m, GeneratorSet::Taylor)?;
    let mut gens = vec![f.clone()];
    gens.extend(gradient(f));
    for (p, g) in taylor.iter().enumerate().skip(1) {
        gens.push(g.substitute(n, |v| (v.level() == p).then(|| Polynomial::zero(n))));
    }
    Ideal::new(n, jet_variables(n, 0..m), gens)
}

/// One row of a dimension table; `None` marks a value that was not computed
/// (budget exhausted, or the origin is not on `Z`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimRow {
    pub m: usize,
    pub jet_dim: Option<i64>,
    pub fiber_dim: Option<i64>,
    pub budget_exceeded: bool,
}

fn budget_tolerant<T>(r: Result<T>) -> Result<(Option<T>, bool)> {
    match r {
        Ok(v) => Ok((Some(v), false)),
        Err(Error::BudgetExceeded(_)) => Ok((None, true)),
        Err(e) => Err(e),
    }
}

fn row(dims: &mut JetDimensions, m: usize) -> Result<DimRow> {
    let (jet_dim, a) = budget_tolerant(dims.jet_dim(m))?;
    let (fiber_dim, b) = budget_tolerant(dims.origin_fiber_dim(m))?;
    Ok(DimRow { m, jet_dim, fiber_dim: fiber_dim.flatten(), budget_exceeded: a || b })
}

/// `(m, dim Z_m, dim ρ_m⁻¹(0))` for each requested level.
pub fn jet_dims(f: &Polynomial, levels: &[usize], budget: &Budget) -> Result<Vec<DimRow>> {
    let mut dims = JetDimensions::new(f, budget)?;
    levels.iter().map(|&m| row(&mut dims, m)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctReport {
    pub n: usize,
    pub d: u32,
    pub homogeneous: bool,
    pub r: i64,
    pub dim_table: Vec<DimRow>,
    pub upper_bound: Option<Rational>,
    pub lower_bound: Option<Rational>,
    pub exact: bool,
    pub ruling: RulingResult,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
    /// Wall time per table row; not part of the deterministic output.
    pub timings: Vec<(usize, Duration)>,
}

/// Levels sampled for `max_k`: `m = kd − 1` for homogeneous `F`, else `m = 0..max_k`.
pub fn sample_levels(f: &Polynomial, max_k: usize) -> Vec<usize> {
    match (f.is_homogeneous(), f.total_degree()) {
        (true, Some(d)) if d > 0 => (1..=max_k).map(|k| k * d as usize - 1).collect(),
        _ => (0..max_k).collect(),
    }
}

/// `n − dim Z_m/(m+1)`.
pub fn threshold_value(n: usize, m: usize, dim: i64) -> Rational {
    rat((n * (m + 1)) as i64 - dim, (m + 1) as i64)
}

/// `min{(n−r)/d, 1}`, or 1 when `r = −1`.
pub fn lower_bound_value(n: usize, r: i64, d: u32) -> Rational {
    if r < 0 {
        return int(1);
    }
    rat(n as i64 - r, d as i64).min(int(1))
}

pub fn lct_estimate(f: &Polynomial, max_k: usize, budget: &Budget) -> Result<LctReport> {
    check_input(f)?;
    let n = f.n();
    let d = f.total_degree().unwrap_or(0);
    let homogeneous = f.is_homogeneous();
    let mut dims = JetDimensions::new(f, budget)?;
    let r = dims.singular_dim()?;

    let mut dim_table = Vec::new();
    let mut timings = Vec::new();
    for m in sample_levels(f, max_k) {
        let start = Instant::now();
        dim_table.push(row(&mut dims, m)?);
        timings.push((m, start.elapsed()));
    }
    let upper_bound = dim_table
        .iter()
        .filter_map(|row| row.jet_dim.map(|v| threshold_value(n, row.m, v)))
        .min();
    let lower_bound = homogeneous.then(|| lower_bound_value(n, r, d));
    let exact = matches!((&upper_bound, &lower_bound), (Some(u), Some(l)) if u == l);

    let mut notes = Vec::new();
    if !homogeneous {
        notes.push("lower bound requires homogeneous input".to_string());
    }
    if dim_table.iter().any(|row| row.budget_exceeded) {
        notes.push("budget exceeded on some rows; bounds use completed rows only".to_string());
    }

    let mut report = LctReport {
        n,
        d,
        homogeneous,
        r,
        dim_table,
        upper_bound,
        lower_bound,
        exact,
        ruling: detect_ruling(f)?,
        verdicts: Vec::new(),
        notes,
        timings,
    };
    report.verdicts.push(checks::table_range(&report));
    if homogeneous {
        report.verdicts.push(verify_lower_bound(f, &report)?);
    }
    Ok(report)
}
