//! Translation directions of `F` and the induced splitting `Z = T × A^{r′}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::polyring::{JetVariable, Monomial, Polynomial, Rational};

use super::check_input;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RulingResult {
    pub r_prime: usize,
    /// Reduced row-echelon basis of `{v : Σ v_i ∂F/∂x_i = 0}`.
    pub basis: Vec<Vec<Rational>>,
    /// 1-based coordinates kept for `T`, in increasing order.
    pub complement: Vec<usize>,
    /// `F` restricted to the complement coordinates, renumbered `x1..x(n−r′)`.
    pub reduced_poly: Polynomial,
}

impl RulingResult {
    /// Coordinate `y_j` on the complement, as a linear form in the original
    /// variables: `y_j = x_{c_j} − Σ_k x_{p_k}·(v_k)_{c_j}` where `p_k` is the
    /// pivot of basis vector `v_k`.
    pub fn complement_coordinates(&self, n: usize) -> Vec<Vec<Rational>> {
        let pivots: Vec<usize> = self.basis.iter().map(|v| pivot(v).expect("nonzero basis vector")).collect();
        self.complement
            .iter()
            .map(|&c| {
                let mut row = vec![Rational::zero(); n];
                row[c - 1] = Rational::one();
                for (v, &p) in self.basis.iter().zip(&pivots) {
                    row[p] -= &v[c - 1];
                }
                row
            })
            .collect()
    }

    /// `T(y(x))`: equals `F` exactly when the ruling is correct.
    pub fn reconstruct(&self, n: usize) -> Polynomial {
        let coords = self.complement_coordinates(n);
        self.reduced_poly.substitute(n, |v| {
            let row = &coords[v.base() - 1];
            Some(Polynomial::from_terms(
                n,
                row.iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::var(JetVariable::new(i + 1, 0)), c.clone())),
            ))
        })
    }
}

fn pivot(v: &[Rational]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Reduced row-echelon form; returns the nonzero rows.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut lead = 0;
    for c in 0..cols {
        let Some(k) = (lead..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(lead, k);
        let inv = rows[lead][c].recip();
        for x in rows[lead].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows.len() {
            if k != lead && !rows[k][c].is_zero() {
                let factor = rows[k][c].clone();
                for j in 0..cols {
                    let t = &rows[lead][j] * &factor;
                    rows[k][j] -= t;
                }
            }
        }
        lead += 1;
    }
    rows.truncate(lead);
    rows
}

/// Null space of the matrix whose columns are the coefficient vectors of the partials.
fn null_space(columns: &[Polynomial], n: usize) -> Vec<Vec<Rational>> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for g in columns {
        for (m, _) in g.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::zero(); n]; index.len()];
    for (i, g) in columns.iter().enumerate() {
        for (m, c) in g.terms() {
            rows[index[m]][i] = c.clone();
        }
    }
    let reduced = rref(rows, n);
    let pivots: Vec<usize> = reduced.iter().map(|r| pivot(r).unwrap()).collect();
    let basis = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &p) in reduced.iter().zip(&pivots) {
                v[p] = -r[free].clone();
            }
            v
        })
        .collect();
    rref(basis, n)
}

/// Maximal space of directions `v` with `Σ v_i ∂F/∂x_i = 0`.
pub fn detect_ruling(f: &Polynomial) -> Result<RulingResult> {
    check_input(f)?;
    let n = f.n();
    let partials: Vec<Polynomial> = (1..=n).map(|i| f.partial_derivative(JetVariable::new(i, 0))).collect();
    let basis = null_space(&partials, n);
    let pivots: Vec<usize> = basis.iter().map(|v| pivot(v).unwrap()).collect();
    let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).map(|c| c + 1).collect();
    let target = complement.len();
    let renumber: BTreeMap<usize, usize> = complement.iter().enumerate().map(|(k, &c)| (c, k + 1)).collect();
    let reduced_poly = f.substitute(target, |v| {
        Some(match renumber.get(&v.base()) {
            Some(&k) => Polynomial::x(target, k),
            None => Polynomial::zero(target),
        })
    });
    Ok(RulingResult { r_prime: basis.len(), basis, complement, reduced_poly })
}
