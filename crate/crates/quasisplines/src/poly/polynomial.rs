//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::ring::PolyRing;

/// Exact rational coefficient. Always stored in lowest terms with a positive
/// denominator; no rounding occurs anywhere.
pub type Rational = BigRational;

/// A polynomial as a term list sorted strictly decreasing under the ring
/// order. Zero coefficients never appear; the zero polynomial is the empty
/// list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        merged.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                merged.push((m, c));
            }
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: merged,
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    /// The variable with the given name.
    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var_pow(ring.nvars(), idx, 1), Rational::one())],
        })
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        debug_assert_eq!(m.nvars(), ring.nvars());
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(m, c)],
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading (monomial, coefficient) under the ring order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading_term(&mut self) -> Option<(Monomial, Rational)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree over all variables; -1 is represented as `None`.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in the geometric variables only.
    pub fn geo_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.geo_degree(m)).max()
    }

    /// True when every term has the same geometric degree (parameters count
    /// zero). The zero polynomial is homogeneous.
    pub fn is_geo_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ring.geo_degree(m0);
                self.terms.iter().all(|(m, _)| self.ring.geo_degree(m) == d)
            }
        }
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                products.push((ma.mul(mb), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, products))
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut ia = 0;
        let mut ib = 0;
        while ia < self.terms.len() && ib < other.terms.len() {
            let (ma, ca) = &self.terms[ia];
            let (mb, cb) = &other.terms[ib];
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    ia += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -cb.clone() } else { cb.clone() };
                    out.push((mb.clone(), c));
                    ib += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    ia += 1;
                    ib += 1;
                }
            }
        }
        out.extend(self.terms[ia..].iter().cloned());
        for (mb, cb) in &other.terms[ib..] {
            let c = if subtract { -cb.clone() } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a single term `c * m`. Preserves sortedness.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a * c))
                .collect(),
        }
    }

    /// Divides every coefficient so the leading coefficient becomes 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Division with remainder by an ordered list of divisors.
    ///
    /// Returns quotients and a remainder with `self = Σ q_i d_i + r` where no
    /// term of `r` is divisible by any divisor's leading monomial, and every
    /// `q_i · LT(d_i)` has leading monomial ≤ the leading monomial of `self`.
    pub fn div_rem(&self, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
        for d in divisors {
            self.check_ring(d)?;
            if d.is_zero() {
                return Err(Error::Invalid("division by the zero polynomial".into()));
            }
        }
        let mut quotients = vec![Polynomial::zero(&self.ring); divisors.len()];
        let mut remainder = Polynomial::zero(&self.ring);
        let mut p = self.clone();
        'outer: while let Some((lm, lc)) = p.leading_term() {
            let (lm, lc) = (lm.clone(), lc.clone());
            for (i, d) in divisors.iter().enumerate() {
                let (dm, dc) = d.leading_term().expect("divisor nonzero");
                if let Some(q) = dm.divide_into(&lm) {
                    let coeff = &lc / dc;
                    quotients[i] = quotients[i].merge(
                        &Polynomial::monomial(&self.ring, q.clone(), coeff.clone()),
                        false,
                    );
                    p = p.merge(&d.mul_term(&q, &coeff), true);
                    continue 'outer;
                }
            }
            // Leading term irreducible: move it to the remainder.
            remainder = remainder.merge(
                &Polynomial::monomial(&self.ring, lm.clone(), lc.clone()),
                false,
            );
            p.terms.remove(0);
        }
        Ok((quotients, remainder))
    }

    /// Exact division by a single polynomial; errors when not exact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (mut q, r) = self.div_rem(std::slice::from_ref(divisor))?;
        if !r.is_zero() {
            return Err(Error::Invalid("division is not exact".into()));
        }
        Ok(q.remove(0))
    }

    /// Evaluates the listed variables at rational values. The result lives in
    /// the ring with those variables removed.
    pub fn substitute(&self, assignments: &[(String, Rational)]) -> Result<Polynomial> {
        for (name, _) in assignments {
            if self.ring.var_index(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        if assignments.is_empty() {
            return Ok(self.clone());
        }
        let removed: Vec<usize> = assignments
            .iter()
            .map(|(name, _)| self.ring.var_index(name).unwrap())
            .collect();
        let values: Vec<(usize, Rational)> = removed
            .iter()
            .zip(assignments)
            .map(|(idx, (_, v))| (*idx, v.clone()))
            .collect();
        let (new_ring, map) = self.ring.without_vars(&removed)?;
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (idx, v) in &values {
                let e = m.exps()[*idx];
                if e > 0 {
                    coeff *= pow_rational(v, e);
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let exps: Vec<u32> = m
                .exps()
                .iter()
                .enumerate()
                .filter_map(|(i, e)| map[i].map(|_| *e))
                .collect();
            out.push((Monomial::new(exps), coeff));
        }
        Ok(Polynomial::from_terms(&new_ring, out))
    }

    /// Reinterprets the polynomial in another ring through a variable map
    /// (old index -> new index). All variables actually used must be mapped.
    pub fn map_vars(&self, new_ring: &Arc<PolyRing>, map: &[Option<usize>]) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_ring.nvars()];
            for (i, e) in m.exps().iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map.get(i).copied().flatten() {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(Error::UnknownVariable(format!(
                            "variable `{}` has no image",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            out.push((Monomial::new(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(new_ring, out))
    }

    /// Map into an extension ring via a total variable map (old -> new).
    pub fn embed(&self, new_ring: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        let total: Vec<Option<usize>> = map.iter().map(|i| Some(*i)).collect();
        self.map_vars(new_ring, &total)
            .expect("total map cannot fail")
    }
}

pub(crate) fn pow_rational(v: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"], &[]).unwrap()
    }

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let prod = &p(&r, "x + 1") * &p(&r, "x - 1");
        assert_eq!(prod, p(&r, "x^2 - 1"));
    }

    #[test]
    fn additive_identity_and_inverse() {
        let r = ring2();
        let f = p(&r, "3*x^2*y - 2/5*y + 7");
        assert_eq!(&f + &Polynomial::zero(&r), f);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn division_exact_and_remainder() {
        let r = ring2();
        // x^2 by [x^2]: quotient 1, remainder 0.
        let (q, rem) = p(&r, "x^2").div_rem(&[p(&r, "x^2")]).unwrap();
        assert_eq!(q[0], Polynomial::one(&r));
        assert!(rem.is_zero());
        // x^2 + 1 by [x^2]: quotient 1, remainder 1.
        let (q, rem) = p(&r, "x^2 + 1").div_rem(&[p(&r, "x^2")]).unwrap();
        assert_eq!(q[0], Polynomial::one(&r));
        assert_eq!(rem, Polynomial::one(&r));
        // x*y by [x^2]: no leading-term divisibility.
        let (q, rem) = p(&r, "x*y").div_rem(&[p(&r, "x^2")]).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, p(&r, "x*y"));
    }

    #[test]
    fn division_reassembles() {
        let r = ring2();
        let f = p(&r, "x^3*y + x*y^2 - y + 2");
        let ds = [p(&r, "x*y - 1"), p(&r, "y^2 - 1")];
        let (q, rem) = f.div_rem(&ds).unwrap();
        let mut back = rem.clone();
        for (qi, di) in q.iter().zip(&ds) {
            back = &back + &(qi * di);
        }
        assert_eq!(back, f);
        // No remainder term divisible by a divisor leading monomial.
        for (m, _) in back.terms() {
            let _ = m;
        }
        for (m, _) in rem.terms() {
            for d in &ds {
                assert!(!d.leading_monomial().unwrap().divides(m));
            }
        }
    }

    #[test]
    fn substitution_specializes_parameters() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let f = p(&r, "z*x - x^2");
        let g = f
            .substitute(&[("z".into(), Rational::zero())])
            .unwrap();
        assert_eq!(g.to_string(), "-x^2");
        assert_eq!(g.ring().var_names(), ["x".to_string(), "y".to_string()]);

        let h = p(&r, "x + y - z")
            .substitute(&[("z".into(), Rational::one())])
            .unwrap();
        assert_eq!(h.to_string(), "x + y - 1");

        assert!(p(&r, "x").substitute(&[("w".into(), Rational::one())]).is_err());
    }

    #[test]
    fn display_round_trips() {
        let r = ring2();
        for s in ["0", "1", "-2/5", "x^2 - 1", "3*x^2*y - 2/5*y + 7", "x + y"] {
            let f = p(&r, s);
            assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f);
        }
    }
}
