//! Buchberger's algorithm over the rationals, and Krull dimension from the
//! resulting leading-term ideal.
//!
//! Internally polynomials are stored with primitive integer coefficients and
//! dense exponent vectors; reduction is fraction-free. The emitted basis is
//! converted back to monic rational polynomials.

mod dimension;
mod order;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Progress, Result};
use crate::jets::Ideal;
use crate::polyring::{JetVariable, Monomial, Polynomial, Rational};

pub use dimension::{max_independent_set, min_hitting_set};
pub use order::{MonomialOrder, OrderKind, VariableSequence};

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;
pub const DEFAULT_VARIABLE_CAP: usize = 40;

/// Resource limits for one basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
    pub timeout: Option<Duration>,
    pub max_vars: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: DEFAULT_MAX_STEPS, timeout: None, max_vars: DEFAULT_VARIABLE_CAP }
    }
}

impl Budget {
    pub fn with_steps(max_steps: u64) -> Self {
        Budget { max_steps, ..Budget::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    basis: Vec<Polynomial>,
    ambient: Vec<JetVariable>,
    order: MonomialOrder,
    n: usize,
}

impl GroebnerBasis {
    /// Monic, interreduced basis elements sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Variables of the ring, smallest first under the order.
    pub fn ambient(&self) -> &[JetVariable] {
        &self.ambient
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| leading_monomial(g, &self.order)).collect()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.total_degree() == Some(0))
    }

    /// Remainder of `f` under full reduction by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = DenseRing::new(&self.ambient, self.order);
        let g: Vec<Poly> = self.basis.iter().map(|p| ring.to_dense(p)).collect::<Result<_>>()?;
        let refs: Vec<&Poly> = g.iter().collect();
        let mut steps = Steps::unlimited();
        let r = reduce(ring.to_dense(f)?, &refs, true, &mut steps, &ring)?;
        Ok(ring.to_rational(&r, self.n))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of a pair
    /// of basis elements reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let ring = DenseRing::new(&self.ambient, self.order);
        let g: Vec<Poly> = self.basis.iter().map(|p| ring.to_dense(p)).collect::<Result<_>>()?;
        let refs: Vec<&Poly> = g.iter().collect();
        let mut steps = Steps::unlimited();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let s = s_polynomial(&g[i], &g[j], &ring);
                if !reduce(s, &refs, true, &mut steps, &ring)?.terms.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dimension of the variety of the ideal; −1 when it is empty.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let index: HashMap<JetVariable, usize> =
            self.ambient.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let supports: Vec<u128> = self
            .leading_monomials()
            .iter()
            .map(|m| m.factors().iter().fold(0u128, |s, (v, _)| s | 1u128 << index[v]))
            .collect();
        max_independent_set(self.ambient.len(), &supports) as i64
    }
}

fn leading_monomial(p: &Polynomial, order: &MonomialOrder) -> Monomial {
    p.terms()
        .map(|(m, _)| m)
        .max_by(|a, b| order.cmp(a, b))
        .cloned()
        .unwrap_or_default()
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    let mut ambient = ideal.ambient().to_vec();
    order.sort_variables(&mut ambient);
    if ambient.len() > budget.max_vars.min(128) {
        return Err(Error::VariableCap { vars: ambient.len(), cap: budget.max_vars.min(128) });
    }
    let ring = DenseRing::new(&ambient, *order);
    let mut gens: Vec<Poly> = ideal
        .generators()
        .iter()
        .map(|g| ring.to_dense(g))
        .collect::<Result<_>>()?;
    gens.sort_by(|a, b| ring.cmp(&a.terms[0].0, &b.terms[0].0).then(a.terms.len().cmp(&b.terms.len())));

    let mut engine = Engine::new(&ring, budget);
    for g in gens {
        engine.insert_generator(g)?;
    }
    engine.run()?;
    let basis = engine.finish()?;
    let mut out: Vec<Polynomial> = basis.iter().map(|p| ring.to_rational(p, ideal.n())).collect();
    out = out.into_iter().map(|p| p.monic(order)).collect();
    Ok(GroebnerBasis { basis: out, ambient, order: *order, n: ideal.n() })
}

/// Krull dimension of the quotient by `ideal`, via a grevlex basis.
pub fn krull_dimension(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    krull_dimension_with(ideal, &MonomialOrder::default(), budget)
}

pub fn krull_dimension_with(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<i64> {
    if ideal.generators().is_empty() {
        return Ok(ideal.ambient().len() as i64);
    }
    Ok(groebner_basis(ideal, order, budget)?.dimension())
}

pub fn ideal_membership(g: &Polynomial, basis: &GroebnerBasis) -> Result<bool> {
    basis.contains(g)
}

// ---------------------------------------------------------------------------
// dense internals

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mono {
    exps: Box<[u16]>,
    deg: u32,
    mask: u64,
}

impl Mono {
    fn new(exps: Box<[u16]>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let mask = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1 << (i % 64));
        Mono { exps, deg, mask }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    /// `self / other`, assuming divisibility.
    fn div(&self, other: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect())
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Terms in decreasing order, primitive integer coefficients.
#[derive(Debug, Clone)]
struct Poly {
    terms: Vec<(Mono, BigInt)>,
    sugar: u32,
}

impl Poly {
    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
    }
}

struct DenseRing<'a> {
    vars: &'a [JetVariable],
    index: HashMap<JetVariable, usize>,
    order: MonomialOrder,
}

impl<'a> DenseRing<'a> {
    fn new(vars: &'a [JetVariable], order: MonomialOrder) -> Self {
        let index = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        DenseRing { vars, index, order }
    }

    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp_dense(&a.exps, &b.exps, a.deg, b.deg)
    }

    fn to_dense(&self, p: &Polynomial) -> Result<Poly> {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let mut exps = vec![0u16; self.vars.len()];
            for &(v, e) in m.factors() {
                let i = *self.index.get(&v).ok_or_else(|| Error::NotInAmbient(v.to_string()))?;
                exps[i] = u16::try_from(e).expect("exponent fits in u16");
            }
            terms.push((Mono::new(exps.into()), c.numer() * (&den / c.denom())));
        }
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let sugar = terms.iter().map(|t| t.0.deg).max().unwrap_or(0);
        let mut out = Poly { terms, sugar };
        out.make_primitive();
        Ok(out)
    }

    fn to_rational(&self, p: &Poly, n: usize) -> Polynomial {
        Polynomial::from_terms(
            n,
            p.terms.iter().map(|(m, c)| {
                let mono = Monomial::from_pairs(
                    m.exps.iter().enumerate().map(|(i, &e)| (self.vars[i], e as u32)),
                );
                (mono, Rational::from_integer(c.clone()))
            }),
        )
    }
}

struct Steps {
    used: u64,
    limit: u64,
    deadline: Option<Instant>,
}

impl Steps {
    fn unlimited() -> Self {
        Steps { used: 0, limit: u64::MAX, deadline: None }
    }

    fn tick(&mut self) -> std::result::Result<(), ()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(());
        }
        if let Some(d) = self.deadline {
            if self.used % 64 == 0 && Instant::now() > d {
                return Err(());
            }
        }
        Ok(())
    }
}

/// `a·p − b·t·q` with the leading terms assumed to cancel; `p` starts at `from`.
fn combine(
    p: &[(Mono, BigInt)],
    a: &BigInt,
    t: &Mono,
    b: &BigInt,
    q: &[(Mono, BigInt)],
    ring: &DenseRing,
) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let (mut i, mut j) = (0, 0);
    let q_shift: Vec<Mono> = q.iter().map(|(m, _)| m.mul(t)).collect();
    let a_one = a.is_one();
    while i < p.len() || j < q.len() {
        let ord = match (p.get(i), q_shift.get(j)) {
            (Some(x), Some(y)) => ring.cmp(&x.0, y),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                out.push((q_shift[j].clone(), -(&q[j].1 * b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a } - &q[j].1 * b;
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn find_reducer<'b>(m: &Mono, basis: &[&'b Poly]) -> Option<&'b Poly> {
    basis.iter().copied().find(|g| g.lm().divides(m))
}

/// Fraction-free reduction of `f` modulo `basis`. With `full` the tail is
/// reduced as well; otherwise only until the leading term is irreducible.
fn reduce(f: Poly, basis: &[&Poly], full: bool, steps: &mut Steps, ring: &DenseRing) -> Result<Poly> {
    reduce_from(Vec::new(), f.terms, f.sugar, basis, full, steps, ring)
}

/// Reduces the tail of `f` while keeping its leading term in place.
fn reduce_tail(f: &Poly, basis: &[&Poly], steps: &mut Steps, ring: &DenseRing) -> Result<Poly> {
    reduce_from(f.terms[..1].to_vec(), f.terms[1..].to_vec(), f.sugar, basis, true, steps, ring)
}

/// `done` holds terms already known to be irreducible; they get rescaled
/// along with `rest` so the result stays a multiple of the input.
fn reduce_from(
    mut done: Vec<(Mono, BigInt)>,
    mut rest: Vec<(Mono, BigInt)>,
    sugar: u32,
    basis: &[&Poly],
    full: bool,
    steps: &mut Steps,
    ring: &DenseRing,
) -> Result<Poly> {
    let mut since_content = 0u32;
    while !rest.is_empty() {
        let Some(g) = find_reducer(&rest[0].0, basis) else {
            if !full {
                break;
            }
            let mut k = 1;
            while k < rest.len() && find_reducer(&rest[k].0, basis).is_none() {
                k += 1;
            }
            done.extend(rest.drain(..k));
            continue;
        };
        steps.tick().map_err(|_| {
            Error::BudgetExceeded(Progress { steps: steps.used, basis_len: basis.len(), pairs_left: 0 })
        })?;
        let t = rest[0].0.div(g.lm());
        let gg = rest[0].1.gcd(g.lc());
        let a = g.lc() / &gg;
        let b = &rest[0].1 / &gg;
        let (a, b) = if a.is_negative() { (-a, -b) } else { (a, b) };
        rest = combine(&rest[1..], &a, &t, &b, &g.terms[1..], ring);
        if !a.is_one() {
            for (_, c) in &mut done {
                *c *= &a;
            }
        }
        since_content += 1;
        if since_content >= 8 {
            since_content = 0;
            let mut g = BigInt::zero();
            for (_, c) in done.iter().chain(rest.iter()) {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_zero() && !g.is_one() {
                for (_, c) in done.iter_mut().chain(rest.iter_mut()) {
                    *c /= &g;
                }
            }
        }
    }
    done.extend(rest);
    let mut out = Poly { terms: done, sugar };
    out.make_primitive();
    Ok(out)
}

fn s_polynomial(f: &Poly, g: &Poly, ring: &DenseRing) -> Poly {
    let l = f.lm().lcm(g.lm());
    let tf = l.div(f.lm());
    let tg = l.div(g.lm());
    let gg = f.lc().gcd(g.lc());
    let a = g.lc() / &gg;
    let b = f.lc() / &gg;
    let fp: Vec<(Mono, BigInt)> = f.terms[1..].iter().map(|(m, c)| (m.mul(&tf), c.clone())).collect();
    let terms = combine(&fp, &a, &tg, &b, &g.terms[1..], ring);
    let sugar = (f.sugar + tf.deg).max(g.sugar + tg.deg);
    let mut p = Poly { terms, sugar };
    p.make_primitive();
    p
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

struct Engine<'r, 'a> {
    ring: &'r DenseRing<'a>,
    polys: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    steps: Steps,
}

impl<'r, 'a> Engine<'r, 'a> {
    fn new(ring: &'r DenseRing<'a>, budget: &Budget) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            steps: Steps {
                used: 0,
                limit: budget.max_steps,
                deadline: budget.timeout.map(|t| Instant::now() + t),
            },
        }
    }

    fn budget_error(&self) -> Error {
        Error::BudgetExceeded(Progress {
            steps: self.steps.used,
            basis_len: self.active.iter().filter(|&&a| a).count(),
            pairs_left: self.pairs.len(),
        })
    }

    fn reduce(&mut self, f: Poly, full: bool) -> Result<Poly> {
        let refs: Vec<&Poly> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, &a)| a.then_some(p))
            .collect();
        let r = reduce(f, &refs, full, &mut self.steps, self.ring);
        match r {
            Err(Error::BudgetExceeded(_)) => Err(self.budget_error()),
            other => other,
        }
    }

    fn insert_generator(&mut self, g: Poly) -> Result<()> {
        let h = self.reduce(g, false)?;
        if !h.terms.is_empty() {
            self.update(h);
        }
        Ok(())
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, h: Poly) {
        let hk = self.polys.len();
        let hlm = h.lm().clone();
        let mut candidates: Vec<Pair> = (0..hk)
            .filter(|&g| self.active[g])
            .map(|g| {
                let p = &self.polys[g];
                let lcm = hlm.lcm(p.lm());
                let sugar = (h.sugar + lcm.deg - hlm.deg).max(p.sugar + lcm.deg - p.lm().deg);
                Pair { i: g, j: hk, lcm, sugar }
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(c) = candidates.pop() {
            let coprime = hlm.coprime(self.polys[c.i].lm());
            let dominated = candidates.iter().chain(kept.iter()).any(|o| o.lcm.divides(&c.lcm));
            if coprime || !dominated {
                kept.push(c);
            }
        }
        // product criterion
        kept.retain(|c| !hlm.coprime(self.polys[c.i].lm()));

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && hlm.lcm(polys[p.i].lm()) != p.lcm
                && hlm.lcm(polys[p.j].lm()) != p.lcm)
        });
        self.pairs.extend(kept);

        for g in 0..hk {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.select_pair() {
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j], self.ring);
            if s.terms.is_empty() {
                continue;
            }
            let h = self.reduce(s, true)?;
            if h.terms.is_empty() {
                continue;
            }
            if h.lm().deg == 0 {
                // unit ideal
                self.polys.push(h);
                self.active = vec![false; self.polys.len()];
                *self.active.last_mut().unwrap() = true;
                self.pairs.clear();
                return Ok(());
            }
            self.update(h);
        }
        Ok(())
    }

    /// Interreduces the active elements into the reduced basis.
    fn finish(mut self) -> Result<Vec<Poly>> {
        let mut basis: Vec<Poly> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, &a)| a.then(|| p.clone()))
            .collect();
        if basis.iter().any(|p| p.lm().deg == 0) {
            let one = Mono::new(vec![0u16; self.ring.vars.len()].into());
            return Ok(vec![Poly { terms: vec![(one, BigInt::one())], sugar: 0 }]);
        }
        let ring = self.ring;
        basis.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
        for k in 0..basis.len() {
            let others: Vec<&Poly> =
                basis.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p).collect();
            let r = reduce_tail(&basis[k], &others, &mut self.steps, ring);
            basis[k] = match r {
                Err(Error::BudgetExceeded(_)) => return Err(self.budget_error()),
                other => other?,
            };
        }
        Ok(basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ideal(n: usize, levels: usize, gens: &[&str]) -> Ideal {
        Ideal::in_jet_ring(
            n,
            levels,
            gens.iter().map(|g| parse_poly(g, n).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn principal_variable() {
        let b = groebner_basis(&ideal(2, 0, &["x1"]), &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert_eq!(b.basis(), &[parse_poly("x1", 2).unwrap()]);
        assert_eq!(b.dimension(), 1);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let b = groebner_basis(&ideal(3, 0, &[]), &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert!(b.basis().is_empty());
        assert_eq!(b.dimension(), 3);
        assert_eq!(krull_dimension(&ideal(3, 0, &["0"]), &Budget::default()).unwrap(), 3);
    }

    #[test]
    fn unit_ideal() {
        let i = ideal(2, 0, &["x1", "x1 + 1"]);
        let b = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert_eq!(b.basis(), &[Polynomial::one(2)]);
        assert_eq!(b.dimension(), -1);
        assert_eq!(krull_dimension(&ideal(1, 0, &["1"]), &Budget::default()).unwrap(), -1);
    }

    #[test]
    fn sum_of_squares_and_product() {
        let i = ideal(2, 0, &["x1^2 + x2^2", "x1*x2"]);
        let b = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert_eq!(b.basis().len(), 3);
        assert!(b.satisfies_buchberger_criterion().unwrap());
        for g in i.generators() {
            assert!(b.contains(g).unwrap());
        }
        assert_eq!(b.dimension(), 0);
        // leading coefficients are 1 and leading monomials are mutually non-divisible
        let lms = b.leading_monomials();
        for (k, g) in b.basis().iter().enumerate() {
            assert_eq!(g.coefficient(&lms[k]), Rational::one());
        }
    }

    #[test]
    fn membership() {
        let b = groebner_basis(&ideal(2, 0, &["x1"]), &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert!(ideal_membership(&parse_poly("x1", 2).unwrap(), &b).unwrap());
        assert!(!ideal_membership(&parse_poly("x2", 2).unwrap(), &b).unwrap());
        assert!(ideal_membership(&parse_poly("x1^3*x2 - 7*x1", 2).unwrap(), &b).unwrap());
    }

    #[test]
    fn lex_elimination_example() {
        // twisted cubic: lex basis contains a polynomial in the smallest variable alone
        let i = ideal(3, 0, &["x2 - x1^2", "x3 - x1^3"]);
        let b = groebner_basis(&i, &MonomialOrder::LEX, &Budget::default()).unwrap();
        assert!(b.satisfies_buchberger_criterion().unwrap());
        assert_eq!(b.dimension(), 1);
        let g = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert_eq!(g.dimension(), 1);
        assert!(g.satisfies_buchberger_criterion().unwrap());
    }

    #[test]
    fn budget_is_reported() {
        let i = ideal(3, 0, &["x1^2 - x2*x3", "x2^2 - x1*x3 + x3", "x1*x2*x3 - 1"]);
        let e = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::with_steps(3)).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded(p) if p.steps > 3));
    }

    #[test]
    fn variable_cap() {
        let i = ideal(3, 2, &["x1"]);
        let budget = Budget { max_vars: 8, ..Budget::default() };
        assert_eq!(
            groebner_basis(&i, &MonomialOrder::GREVLEX, &budget).unwrap_err(),
            Error::VariableCap { vars: 9, cap: 8 }
        );
    }

    #[test]
    fn deterministic_output() {
        let i = ideal(3, 0, &["x1^2 - x2*x3", "x2^2 - x1*x3 + x3", "x1*x2*x3 - 1"]);
        let a = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        let b = groebner_basis(&i, &MonomialOrder::GREVLEX, &Budget::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.satisfies_buchberger_criterion().unwrap());
        let rendered: Vec<String> = a.basis().iter().map(|p| p.to_string()).collect();
        let again: Vec<String> = b.basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, again);
    }
}
