use std::cmp::Ordering;

use crate::polyring::{JetVariable, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    #[default]
    Grevlex,
    Lex,
}

/// Total order on the jet variables, from smallest to largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum VariableSequence {
    /// `x1 < x2 < … < xn < x1_1 < … < xn_1 < …`
    #[default]
    LevelMajor,
    /// `x1 < x1_1 < x1_2 < … < x2 < x2_1 < …`
    BaseMajor,
    /// `xn_m < … < x1_m < … < xn < … < x1`
    LevelMajorReversed,
}

impl VariableSequence {
    pub fn rank(self, v: JetVariable) -> (usize, usize) {
        match self {
            VariableSequence::LevelMajor => (v.level(), v.base()),
            VariableSequence::BaseMajor => (v.base(), v.level()),
            VariableSequence::LevelMajorReversed => (usize::MAX - v.level(), usize::MAX - v.base()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub sequence: VariableSequence,
}

impl MonomialOrder {
    pub const GREVLEX: MonomialOrder =
        MonomialOrder { kind: OrderKind::Grevlex, sequence: VariableSequence::LevelMajor };
    pub const LEX: MonomialOrder =
        MonomialOrder { kind: OrderKind::Lex, sequence: VariableSequence::LevelMajor };

    pub fn new(kind: OrderKind, sequence: VariableSequence) -> Self {
        MonomialOrder { kind, sequence }
    }

    /// Sorts variables from smallest to largest.
    pub fn sort_variables(&self, vars: &mut [JetVariable]) {
        vars.sort_by_key(|&v| self.sequence.rank(v));
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let OrderKind::Grevlex = self.kind {
            let c = a.total_degree().cmp(&b.total_degree());
            if c != Ordering::Equal {
                return c;
            }
        }
        let ranked = |m: &Monomial| {
            let mut v: Vec<((usize, usize), u32)> =
                m.factors().iter().map(|&(x, e)| (self.sequence.rank(x), e)).collect();
            v.sort();
            v
        };
        let (ra, rb) = (ranked(a), ranked(b));
        match self.kind {
            // smallest variable first; the smaller exponent wins
            OrderKind::Grevlex => {
                let (mut i, mut j) = (0, 0);
                loop {
                    match (ra.get(i), rb.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                            Ordering::Less => return Ordering::Less,
                            Ordering::Greater => return Ordering::Greater,
                            Ordering::Equal => {
                                if ea != eb {
                                    return eb.cmp(&ea);
                                }
                                i += 1;
                                j += 1;
                            }
                        },
                    }
                }
            }
            // largest variable first; the larger exponent wins
            OrderKind::Lex => {
                let (mut i, mut j) = (ra.len(), rb.len());
                loop {
                    match (i.checked_sub(1).map(|k| ra[k]), j.checked_sub(1).map(|k| rb[k])) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some((va, ea)), Some((vb, eb))) => match va.cmp(&vb) {
                            Ordering::Greater => return Ordering::Greater,
                            Ordering::Less => return Ordering::Less,
                            Ordering::Equal => {
                                if ea != eb {
                                    return ea.cmp(&eb);
                                }
                                i -= 1;
                                j -= 1;
                            }
                        },
                    }
                }
            }
        }
    }

    /// Comparison of dense exponent vectors indexed from smallest to largest variable.
    pub(crate) fn cmp_dense(&self, a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
        match self.kind {
            OrderKind::Grevlex => deg_a.cmp(&deg_b).then_with(|| {
                for (x, y) in a.iter().zip(b) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            OrderKind::Lex => {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
