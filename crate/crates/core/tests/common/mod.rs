#![allow(dead_code)]

use jetlct_core::polyring::{int, parse_poly};
use jetlct_core::{JetVariable, Monomial, Polynomial};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str, n: usize) -> Polynomial {
    parse_poly(s, n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|e| {
            monomials_of_degree(n - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

/// Homogeneous polynomial of degree `d` with coefficients in `[-c, c]`, never zero.
pub fn random_homogeneous(rng: &mut impl Rng, n: usize, d: u32, c: i64) -> Polynomial {
    let monos = monomials_of_degree(n, d);
    loop {
        let terms: Vec<(Monomial, _)> = monos
            .iter()
            .map(|e| {
                let m = Monomial::from_pairs(e.iter().enumerate().map(|(i, &k)| (JetVariable::new(i + 1, 0), k)));
                (m, int(rng.gen_range(-c..=c)))
            })
            .collect();
        let f = Polynomial::from_terms(n, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random polynomial in jet variables of levels `0..=levels`, up to `terms` terms.
pub fn random_jet_poly(rng: &mut impl Rng, n: usize, levels: usize, terms: usize, max_exp: u32) -> Polynomial {
    let t = rng.gen_range(0..=terms);
    let mut out = Vec::new();
    for _ in 0..t {
        let k = rng.gen_range(0..=3);
        let m = Monomial::from_pairs((0..k).map(|_| {
            (JetVariable::new(rng.gen_range(1..=n), rng.gen_range(0..=levels)), rng.gen_range(1..=max_exp))
        }));
        out.push((m, int(rng.gen_range(-5..=5))));
    }
    Polynomial::from_terms(n, out)
}

/// Unimodular integer matrix: product of a few elementary row operations
/// and a signed permutation.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        for k in 0..n {
            a[i][k] += c * a[j][k];
        }
    }
    a.swap(0, n - 1);
    a
}

/// `F(A·x)`.
pub fn change_coordinates(f: &Polynomial, a: &[Vec<i64>]) -> Polynomial {
    let n = f.n();
    f.substitute(n, |v| {
        let row = &a[v.base() - 1];
        Some(Polynomial::from_terms(
            n,
            row.iter()
                .enumerate()
                .map(|(j, &c)| (Monomial::var(JetVariable::new(j + 1, 0)), int(c))),
        ))
    })
}
