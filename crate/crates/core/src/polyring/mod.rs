//! Exact sparse multivariate polynomials over the rationals in jet variables.
//!
//! A jet variable `X_i^(j)` is written `x<i>_<j>` (`x<i>` at level 0). The
//! variable sequence is level-major: `x1 < x2 < … < xn < x1_1 < … < xn_1 < …`.

mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;

pub use parse::parse_poly;

pub type Rational = num_rational::BigRational;

/// The jet coordinate `X_base^(level)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JetVariable {
    base: usize,
    level: usize,
}

impl JetVariable {
    pub fn new(base: usize, level: usize) -> Self {
        assert!(base >= 1, "jet variable base index starts at 1");
        JetVariable { base, level }
    }

    pub fn base(self) -> usize {
        self.base
    }

    pub fn level(self) -> usize {
        self.level
    }

    /// The variable one level up, i.e. the image under the jet derivation.
    pub fn raised(self) -> Self {
        JetVariable { base: self.base, level: self.level + 1 }
    }

    /// Position in the level-major sequence of a ring with `n` base variables.
    pub fn index(self, n: usize) -> usize {
        self.level * n + self.base - 1
    }
}

impl Ord for JetVariable {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.base).cmp(&(other.level, other.base))
    }
}

impl PartialOrd for JetVariable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JetVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "x{}", self.base)
        } else {
            write!(f, "x{}_{}", self.base, self.level)
        }
    }
}

/// A power product of jet variables, stored sparsely in sequence order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(JetVariable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: JetVariable) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; zero
    /// exponents are dropped and repeated variables merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (JetVariable, u32)>) -> Self {
        let mut v: Vec<(JetVariable, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(x, _)| x);
        let mut out: Vec<(JetVariable, u32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some((y, f)) if *y == x => *f += e,
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(JetVariable, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: JetVariable) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(x, _)| x)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Σ level·exponent.
    pub fn jet_weight(&self) -> u32 {
        self.0.iter().map(|&(v, e)| v.level as u32 * e).sum()
    }

    pub fn max_level(&self) -> Option<usize> {
        self.0.iter().map(|(v, _)| v.level).max()
    }

    pub fn max_base(&self) -> Option<usize> {
        self.0.iter().map(|(v, _)| v.base).max()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes one power of `v`; `None` if `v` does not occur.
    fn lowered(&self, v: JetVariable) -> Option<(Monomial, u32)> {
        let i = self.0.binary_search_by_key(&v, |&(x, _)| x).ok()?;
        let e = self.0[i].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((Monomial(out), e))
    }

    fn without(&self, v: JetVariable) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(x, _)| x != v).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut factors = self.0.clone();
        factors.sort_by_key(|&(v, _)| (v.base, v.level));
        for (k, (v, e)) in factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the jet variables over `n` base coordinates.
///
/// Terms live in an unordered map with no zero coefficients; ordering only
/// happens when rendering or when handing off to the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: HashMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: HashMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn var(n: usize, v: JetVariable) -> Self {
        assert!(v.base <= n, "variable {v} outside ambient of {n} base variables");
        Self::from_terms(n, [(Monomial::var(v), Rational::one())])
    }

    /// Level-0 coordinate `x_base`.
    pub fn x(n: usize, base: usize) -> Self {
        Self::var(n, JetVariable::new(base, 0))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert!(m.max_base().unwrap_or(0) <= n, "monomial {m} outside ambient");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Same polynomial viewed in a ring with `n` base variables.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        if let Some(b) = self.terms.keys().filter_map(Monomial::max_base).max() {
            if b > n {
                return Err(Error::VariableOutOfRange { index: b, n });
            }
        }
        Ok(Polynomial { n, terms: self.terms.clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted in decreasing order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Lowest total degree of a nonzero term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    /// True when all monomials share one total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::total_degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Highest jet level present; `None` if only constants (or zero).
    pub fn max_level(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_level).max()
    }

    pub fn is_base_level(&self) -> bool {
        self.max_level().unwrap_or(0) == 0
    }

    pub fn variables(&self) -> Vec<JetVariable> {
        let mut v: Vec<JetVariable> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(x, _)| x))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: JetVariable) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if let Some((rest, e)) = m.lowered(v) {
                out.add_term(rest, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Replaces variables by polynomials; variables mapped to `None` stay put.
    pub fn substitute<F>(&self, n: usize, mut image: F) -> Self
    where
        F: FnMut(JetVariable) -> Option<Polynomial>,
    {
        let mut cache: HashMap<JetVariable, Option<Vec<Polynomial>>> = HashMap::new();
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(n, c.clone());
            for &(v, e) in m.factors() {
                let powers = cache.entry(v).or_insert_with(|| image(v).map(|p| vec![Self::one(n), p]));
                match powers {
                    None => kept.push((v, e)),
                    Some(pw) => {
                        while pw.len() <= e as usize {
                            let next = &pw[pw.len() - 1] * &pw[1];
                            pw.push(next);
                        }
                        acc = &acc * &pw[e as usize];
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let km = Monomial::from_pairs(kept);
            for (t, a) in acc.terms {
                out.add_term(t.mul(&km), a);
            }
        }
        out
    }

    /// Evaluates a level-0 polynomial at a rational point of length `n`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: point.len() });
        }
        if !self.is_base_level() {
            return Err(Error::NotBaseLevel);
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                t *= num_traits::pow(point[v.base - 1].clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// `F(X + a)` for a level-0 polynomial.
    pub fn translate(&self, a: &[Rational]) -> Result<Self> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: a.len() });
        }
        if !self.is_base_level() {
            return Err(Error::NotBaseLevel);
        }
        let n = self.n;
        Ok(self.substitute(n, |v| {
            let shift = &a[v.base - 1];
            if shift.is_zero() {
                None
            } else {
                Some(&Self::var(n, v) + &Self::constant(n, shift.clone()))
            }
        }))
    }

    /// Decomposes a homogeneous `F` of degree `d` as `Σ_{i=0}^{d} f_i · x_axis^{d−i}`.
    ///
    /// Entry `i` of the result is `(f_i, d − i)`; every `f_i` is homogeneous
    /// of degree `i` and free of `x_axis`. Zero pieces are included.
    pub fn graded_pieces(&self, axis: usize) -> Result<Vec<(Polynomial, u32)>> {
        if !self.is_homogeneous() || self.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        if !self.is_base_level() {
            return Err(Error::NotBaseLevel);
        }
        if axis == 0 || axis > self.n {
            return Err(Error::VariableOutOfRange { index: axis, n: self.n });
        }
        let d = self.total_degree().unwrap_or(0);
        let v = JetVariable::new(axis, 0);
        let mut pieces: Vec<Polynomial> = (0..=d).map(|_| Self::zero(self.n)).collect();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            pieces[(d - e) as usize].add_term(m.without(v), c.clone());
        }
        Ok(pieces.into_iter().enumerate().map(|(i, f)| (f, d - i as u32)).collect())
    }

    /// Leading coefficient under `order`.
    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&Rational> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(_, c)| c)
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_coefficient(order) {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Renders with terms in decreasing order under `order`.
    pub fn render(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                s.push_str(&render_rational(&a));
            } else if a.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&render_rational(&a));
                s.push('*');
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

pub fn render_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&MonomialOrder::default()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.n = out.n.max(rhs.n);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.n = out.n.max(rhs.n);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n.max(rhs.n));
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}
