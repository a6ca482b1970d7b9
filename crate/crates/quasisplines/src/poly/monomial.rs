//! Exponent vectors with a cached total degree.

use std::cmp::Ordering;

/// A power product of the ring variables, stored as one exponent per variable.
///
/// The ambient ring fixes the length of the exponent vector; monomials do not
/// carry a ring reference themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial 1 in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// A single variable raised to a power.
    pub fn var_pow(nvars: usize, var: usize, pow: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = pow;
        Monomial { exps, degree: pow }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Sum of the exponents of the first `split` variables.
    pub fn degree_of_block(&self, split: usize) -> u32 {
        self.exps[..split].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when the division is not exact.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    /// True when no variable appears in both monomials.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total orders on monomials. All three are multiplicative well-orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Plain lexicographic on the variable list.
    Lex,
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Degrevlex on the leading block of `split` variables, ties broken by
    /// degrevlex on the trailing block. An elimination order for the leading
    /// block.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex_cmp(a.exps(), b.exps()),
            MonomialOrder::DegRevLex => degrevlex_cmp(a.exps(), b.exps()),
            MonomialOrder::Block(split) => degrevlex_cmp(&a.exps()[..split], &b.exps()[..split])
                .then_with(|| degrevlex_cmp(&a.exps()[split..], &b.exps()[split..])),
        }
    }
}

/// All exponent vectors over `nvars` variables summing to exactly `d`.
pub fn monomials_of_exact_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill_monomials(&mut out, &mut current, 0, d, true);
    out
}

/// All exponent vectors over `nvars` variables summing to at most `d`.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill_monomials(&mut out, &mut current, 0, d, false);
    out
}

fn fill_monomials(
    out: &mut Vec<Monomial>,
    current: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    exact: bool,
) {
    if var == current.len() {
        if !exact || remaining == 0 {
            out.push(Monomial::new(current.clone()));
        }
        return;
    }
    if var + 1 == current.len() && exact {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill_monomials(out, current, var + 1, remaining - e, exact);
    }
    current[var] = 0;
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Ties: the last variable where exponents differ decides; the monomial
    // with the smaller exponent there is the larger one.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degree_is_cached_sum() {
        assert_eq!(m(&[2, 0, 3]).degree(), 5);
        assert_eq!(m(&[0, 0]).degree(), 0);
    }

    #[test]
    fn divide_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.divide_into(&a), Some(m(&[1, 1])));
        assert_eq!(a.divide_into(&b), None);
        assert_eq!(a.lcm(&m(&[0, 3])), m(&[2, 3]));
    }

    #[test]
    fn degrevlex_standard_comparisons() {
        let ord = MonomialOrder::DegRevLex;
        // In Q[x, y]: x > y, x^2 > x*y > y^2.
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // Degree dominates.
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        // Vars [x | z]: any monomial containing x beats any pure-z monomial.
        let ord = MonomialOrder::Block(1);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let ords = [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::Block(1),
        ];
        let samples = [m(&[1, 0]), m(&[0, 2]), m(&[2, 1]), m(&[0, 0]), m(&[1, 3])];
        for ord in ords {
            for a in &samples {
                for b in &samples {
                    let c = ord.cmp(a, b);
                    for w in &samples {
                        assert_eq!(ord.cmp(&a.mul(w), &b.mul(w)), c);
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_enumeration_counts() {
        // C(d + n - 1, n - 1) monomials of exact degree d.
        assert_eq!(monomials_of_exact_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_exact_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_exact_degree(1, 5).len(), 1);
        // C(d + n, n) of degree at most d.
        assert_eq!(monomials_up_to_degree(2, 3).len(), 10);
        assert_eq!(monomials_up_to_degree(3, 0).len(), 1);
        for m in monomials_of_exact_degree(3, 4) {
            assert_eq!(m.degree(), 4);
        }
    }

    #[test]
    fn one_is_minimal() {
        let ords = [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::Block(1),
        ];
        let one = Monomial::one(2);
        for ord in ords {
            for mm in [m(&[1, 0]), m(&[0, 1]), m(&[3, 2])] {
                assert_eq!(ord.cmp(&mm, &one), Ordering::Greater);
            }
        }
    }
}
