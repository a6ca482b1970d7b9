//! Ideals as rank-1 submodules: Gröbner bases, normal forms, membership,
//! elimination, and saturation.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::module::{FreeModuleElement, Submodule};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;

/// An ideal of a polynomial ring with a cached reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    inner: Submodule,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        let elems = gens
            .into_iter()
            .map(|g| FreeModuleElement::new(ring, vec![g]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal {
            inner: Submodule::new(ring, 1, elems)?,
        })
    }

    pub fn from_strings(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| crate::poly::parse::parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, Vec::new()).expect("zero ideal")
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.inner.ring()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.entry(0).clone())
            .collect()
    }

    /// The reduced Gröbner basis: monic, mutually reduced, canonically
    /// sorted, unique for the ring and order. Empty exactly for the zero
    /// ideal.
    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        self.inner
            .groebner_basis()
            .iter()
            .map(|g| g.entry(0).clone())
            .collect()
    }

    /// Unique remainder modulo the reduced basis; zero iff `f` is a member.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let elem = FreeModuleElement::new(self.ring(), vec![f.clone()])?;
        Ok(self.inner.normal_form(&elem)?.entry(0).clone())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.inner.is_zero_module()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        let gb = self.inner.groebner_basis();
        gb.len() == 1 && {
            let p = gb[0].entry(0);
            p.is_constant() && !p.is_zero()
        }
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.inner.same_module(&other.inner)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            inner: self.inner.sum(&other.inner)?,
        })
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal {
            inner: self.inner.intersect(&other.inner)?,
        })
    }

    /// The colon ideal (I : f).
    pub fn colon_by(&self, f: &Polynomial) -> Result<Ideal> {
        Ok(Ideal {
            inner: self.inner.colon_by(f)?,
        })
    }

    /// The saturation (I : f^∞) via the stabilizing colon chain.
    pub fn saturate_by(&self, f: &Polynomial) -> Result<Ideal> {
        Ok(Ideal {
            inner: self.inner.saturate_by(f)?,
        })
    }

    /// Generators of I ∩ Q[remaining vars], eliminating a leading block.
    ///
    /// `vars` must be exactly the first variables of the ring (any order
    /// within the block). The result lives in the ring without them.
    pub fn eliminate(&self, vars: &[&str]) -> Result<Ideal> {
        let ring = self.ring();
        let k = vars.len();
        if k > ring.nvars() {
            return Err(Error::Invalid("too many variables to eliminate".into()));
        }
        for v in vars {
            match ring.var_index(v) {
                None => return Err(Error::UnknownVariable(v.to_string())),
                Some(i) if i >= k => {
                    return Err(Error::Invalid(format!(
                        "`{v}` is not in the leading block of the elimination order"
                    )))
                }
                Some(_) => {}
            }
        }
        // Recompute the basis under the block order that eliminates the
        // leading k variables, then keep the elements free of them.
        let elim_ring = ring.with_block_order(k)?;
        let id_map: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
        let gens = self
            .generators()
            .iter()
            .map(|g| g.map_vars(&elim_ring, &id_map))
            .collect::<Result<Vec<_>>>()?;
        let elim_ideal = Ideal::new(&elim_ring, gens)?;
        let (small_ring, small_map) = ring.without_vars(&(0..k).collect::<Vec<_>>())?;
        let mut kept = Vec::new();
        for g in elim_ideal.groebner_basis() {
            let free = g
                .terms()
                .iter()
                .all(|(m, _)| m.exps()[..k].iter().all(|e| *e == 0));
            if free {
                kept.push(g.map_vars(&small_ring, &small_map)?);
            }
        }
        Ideal::new(&small_ring, kept)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let gens = self.generators();
        if gens.is_empty() {
            write!(f, "0")?;
        }
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Leading monomials of the reduced basis, used by Hilbert computations.
pub fn leading_monomials(gb: &[Polynomial]) -> Vec<Monomial> {
    gb.iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect()
}

/// Checks that a coefficient is 1; reduced bases are monic by construction.
pub fn is_monic(p: &Polynomial) -> bool {
    p.leading_term()
        .map(|(_, c)| *c == Rational::one())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let i = Ideal::from_strings(&r, &["x^2"]).unwrap();
        let gb = i.groebner_basis();
        assert_eq!(gb, vec![p(&r, "x^2")]);
    }

    #[test]
    fn hand_reduction_to_variables() {
        // (x, x+y-z, y) in Q[z][x, y] reduces to {x, y, z}.
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let i = Ideal::from_strings(&r, &["x", "x + y - z", "y"]).unwrap();
        let gb = i.groebner_basis();
        assert_eq!(gb, vec![p(&r, "x"), p(&r, "y"), p(&r, "z")]);
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let i = Ideal::from_strings(&r, &["1"]).unwrap();
        assert_eq!(i.groebner_basis(), vec![Polynomial::one(&r)]);
        assert!(i.is_unit());
        let z = Ideal::zero(&r);
        assert!(z.groebner_basis().is_empty());
        assert!(!z.is_unit());
    }

    #[test]
    fn normal_form_membership() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let i = Ideal::from_strings(&r, &["x + y - z"]).unwrap();
        let f = &p(&r, "x") * &p(&r, "x + y - z");
        assert!(i.contains(&f).unwrap());

        let i2 = Ideal::from_strings(&r, &["x^2"]).unwrap();
        assert_eq!(i2.normal_form(&p(&r, "x*y")).unwrap(), p(&r, "x*y"));

        let ix = Ideal::from_strings(&r, &["x"]).unwrap();
        assert!(ix.contains(&p(&r, "z*x - x^2")).unwrap());
    }

    #[test]
    fn buchberger_is_idempotent_on_reduced_bases() {
        let r = PolyRing::new(&["x", "y"], &[]).unwrap();
        let i = Ideal::from_strings(&r, &["x^2 + y", "x*y - 1"]).unwrap();
        let gb = i.groebner_basis();
        let again = Ideal::new(&r, gb.clone()).unwrap();
        assert_eq!(again.groebner_basis(), gb);
    }

    #[test]
    fn elimination_examples() {
        // x free over z: nothing survives.
        let r = PolyRing::new(&["x"], &["z"]).unwrap();
        let i = Ideal::from_strings(&r, &["x - z"]).unwrap();
        let e = i.eliminate(&["x"]).unwrap();
        assert!(e.is_zero_ideal());

        // (x - z, x) forces z.
        let i = Ideal::from_strings(&r, &["x - z", "x"]).unwrap();
        let e = i.eliminate(&["x"]).unwrap();
        let rz = e.ring().clone();
        assert_eq!(e.groebner_basis(), vec![p(&rz, "z")]);

        // x^2 = z gives no relation on z alone.
        let i = Ideal::from_strings(&r, &["x^2 - z"]).unwrap();
        assert!(i.eliminate(&["x"]).unwrap().is_zero_ideal());

        // Not a leading block: rejected.
        assert!(i.eliminate(&["z"]).is_err());
    }

    #[test]
    fn saturation_of_ideals() {
        let r = PolyRing::new(&["x"], &["z"]).unwrap();
        let i = Ideal::from_strings(&r, &["z*x"]).unwrap();
        let z = p(&r, "z");
        let s = i.saturate_by(&z).unwrap();
        assert!(s
            .same_ideal(&Ideal::from_strings(&r, &["x"]).unwrap())
            .unwrap());
        assert!(i.saturate_by(&Polynomial::zero(&r)).is_err());
    }
}
