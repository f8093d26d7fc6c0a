//! Defining ideals of jet schemes of a hypersurface `Z = V(F) ⊂ A^n`.
//!
//! Two generating sets are available for `Z_m`: the iterated derivations
//! `F, D(F), …, D^m(F)` and the Taylor coefficients `G_0, …, G_m` of
//! `F(Σ_j X^(j) t^j)`. They differ by the unit rescaling
//! `X^(j) ↦ j!·X^(j)` followed by division by `p!`, so they cut out
//! isomorphic schemes; dimension computations use the Taylor form since its
//! coefficients do not grow factorially.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{JetVariable, Monomial, Polynomial, Rational};

/// Generators over an explicitly declared set of jet variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    n: usize,
    ambient: Vec<JetVariable>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; every remaining generator must live in `ambient`.
    pub fn new(n: usize, mut ambient: Vec<JetVariable>, generators: Vec<Polynomial>) -> Result<Self> {
        ambient.sort();
        ambient.dedup();
        if let Some(v) = ambient.iter().find(|v| v.base() > n) {
            return Err(Error::VariableOutOfRange { index: v.base(), n });
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                continue;
            }
            if let Some(v) = g.variables().into_iter().find(|v| ambient.binary_search(v).is_err()) {
                return Err(Error::NotInAmbient(v.to_string()));
            }
            gens.push(g.with_ambient(n)?);
        }
        Ok(Ideal { n, ambient, generators: gens })
    }

    /// Ideal in the ring of all `X_i^(j)` with `1 ≤ i ≤ n`, `j ≤ m`.
    pub fn in_jet_ring(n: usize, m: usize, generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(n, jet_variables(n, 0..=m), generators)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> &[JetVariable] {
        &self.ambient
    }

    pub fn num_vars(&self) -> usize {
        self.ambient.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// All jet variables over `n` base coordinates with the given levels.
pub fn jet_variables(n: usize, levels: impl IntoIterator<Item = usize>) -> Vec<JetVariable> {
    levels
        .into_iter()
        .flat_map(|j| (1..=n).map(move |i| JetVariable::new(i, j)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneratorSet {
    #[default]
    Taylor,
    Derivation,
}

/// The derivation with `D(X_i^(j)) = X_i^(j+1)`.
pub fn derivation_d(g: &Polynomial) -> Polynomial {
    let n = g.n();
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    for (m, c) in g.terms() {
        for &(v, e) in m.factors() {
            let rest = Monomial::from_pairs(
                m.factors()
                    .iter()
                    .map(|&(x, f)| if x == v { (x, f - 1) } else { (x, f) })
                    .chain(std::iter::once((v.raised(), 1))),
            );
            terms.push((rest, c * Rational::from_integer(BigInt::from(e))));
        }
    }
    Polynomial::from_terms(n, terms)
}

fn check_hypersurface(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_base_level() {
        return Err(Error::NotBaseLevel);
    }
    Ok(())
}

/// `(F, D(F), …, D^m(F))` in the ring of `(m+1)·n` variables.
pub fn jet_ideal(f: &Polynomial, m: usize) -> Result<Ideal> {
    check_hypersurface(f)?;
    Ideal::in_jet_ring(f.n(), m, derivation_generators(f, m))
}

fn derivation_generators(f: &Polynomial, m: usize) -> Vec<Polynomial> {
    let mut gens = Vec::with_capacity(m + 1);
    let mut g = f.clone();
    for p in 0..=m {
        if p > 0 {
            g = derivation_d(&g);
        }
        gens.push(g.clone());
    }
    gens
}

/// Coefficients `G_0..G_m` of `t^p` in `F(Σ_j X_i^(j) t^j)`.
pub fn taylor_jet_generators(f: &Polynomial, m: usize) -> Result<Ideal> {
    check_hypersurface(f)?;
    Ideal::in_jet_ring(f.n(), m, taylor_generators(f, m))
}

/// Truncated power series in `t` with polynomial coefficients.
type Series = Vec<Polynomial>;

fn series_mul(a: &Series, b: &Series, m: usize, n: usize) -> Series {
    let mut out: Series = (0..=m).map(|_| Polynomial::zero(n)).collect();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(m + 1 - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn taylor_generators(f: &Polynomial, m: usize) -> Vec<Polynomial> {
    let n = f.n();
    let arc = |i: usize| -> Series { (0..=m).map(|j| Polynomial::var(n, JetVariable::new(i, j))).collect() };
    let mut powers: Vec<Vec<Series>> = (1..=n).map(|i| vec![arc(i)]).collect();
    let mut total: Series = (0..=m).map(|_| Polynomial::zero(n)).collect();
    for (mono, c) in f.terms() {
        let mut acc: Series = (0..=m)
            .map(|p| if p == 0 { Polynomial::constant(n, c.clone()) } else { Polynomial::zero(n) })
            .collect();
        for &(v, e) in mono.factors() {
            let pw = &mut powers[v.base() - 1];
            while pw.len() < e as usize {
                let next = series_mul(pw.last().unwrap(), &pw[0], m, n);
                pw.push(next);
            }
            acc = series_mul(&acc, &pw[e as usize - 1], m, n);
        }
        for (p, a) in acc.into_iter().enumerate() {
            total[p] = &total[p] + &a;
        }
    }
    total
}

/// Generators of `Z_m` in the requested form.
pub fn jet_generators(f: &Polynomial, m: usize, set: GeneratorSet) -> Result<Vec<Polynomial>> {
    check_hypersurface(f)?;
    Ok(match set {
        GeneratorSet::Taylor => taylor_generators(f, m),
        GeneratorSet::Derivation => derivation_generators(f, m),
    })
}

/// Ideal of `ρ_m⁻¹(x)`: the jet equations with the level-0 coordinates
/// fixed to `x`, in the `m·n` variables of levels `1..=m`.
pub fn fiber_ideal_at(f: &Polynomial, m: usize, x: &[Rational]) -> Result<Ideal> {
    fiber_ideal_with(f, m, x, GeneratorSet::Taylor)
}

pub fn fiber_ideal_with(f: &Polynomial, m: usize, x: &[Rational], set: GeneratorSet) -> Result<Ideal> {
    check_hypersurface(f)?;
    if !f.eval(x)?.is_zero() {
        return Err(Error::NotOnHypersurface);
    }
    let n = f.n();
    let gens = jet_generators(f, m, set)?
        .iter()
        .map(|g| {
            g.substitute(n, |v| {
                (v.level() == 0).then(|| Polynomial::constant(n, x[v.base() - 1].clone()))
            })
        })
        .collect();
    Ideal::new(n, jet_variables(n, 1..=m), gens)
}
