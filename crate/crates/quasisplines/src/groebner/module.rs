//! Submodules of free modules R^s: module Gröbner bases, normal forms,
//! syzygies, intersections, colon modules, and saturation.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;

/// Order on module terms (component, monomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModuleOrder {
    /// Compare components first (lower index is greater), then monomials.
    /// Keeps the diagonal generator prominent and reduced bases stable.
    #[default]
    PositionOverTerm,
    /// Compare monomials first, ties broken by component.
    TermOverPosition,
}

impl ModuleOrder {
    fn cmp_terms(
        &self,
        ring: &PolyRing,
        a: (usize, &Monomial),
        b: (usize, &Monomial),
    ) -> Ordering {
        // Lower component index counts as the greater position.
        let pos = match a.0.cmp(&b.0) {
            Ordering::Less => Ordering::Greater,
            Ordering::Greater => Ordering::Less,
            Ordering::Equal => Ordering::Equal,
        };
        match self {
            ModuleOrder::PositionOverTerm => pos.then_with(|| ring.cmp_monomials(a.1, b.1)),
            ModuleOrder::TermOverPosition => ring.cmp_monomials(a.1, b.1).then(pos),
        }
    }
}

/// An element of the free module R^s, stored as one polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    ring: Arc<PolyRing>,
    entries: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(ring: &Arc<PolyRing>, entries: Vec<Polynomial>) -> Result<Self> {
        for e in &entries {
            if !(Arc::ptr_eq(e.ring(), ring) || **e.ring() == **ring) {
                return Err(Error::RingMismatch("module entry from another ring".into()));
            }
        }
        Ok(FreeModuleElement {
            ring: Arc::clone(ring),
            entries,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeModuleElement {
            ring: Arc::clone(ring),
            entries: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The standard basis vector e_i.
    pub fn unit(ring: &Arc<PolyRing>, rank: usize, i: usize) -> Self {
        let mut entries = vec![Polynomial::zero(ring); rank];
        entries[i] = Polynomial::one(ring);
        FreeModuleElement {
            ring: Arc::clone(ring),
            entries,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(f))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries,
        })
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| e.mul_term(m, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Entrywise (Hadamard) product; the algebra multiplication of R^s.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement {
            ring: Arc::clone(&self.ring),
            entries,
        })
    }

    /// Componentwise maximum of total degrees; `None` for the zero element.
    pub fn total_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(|e| e.total_degree()).max()
    }

    /// Componentwise maximum of geometric degrees.
    pub fn geo_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(|e| e.geo_degree()).max()
    }

    /// True when every nonzero entry is homogeneous of one common geometric
    /// degree.
    pub fn is_geo_homogeneous(&self) -> bool {
        let mut common: Option<u32> = None;
        for e in &self.entries {
            if e.is_zero() {
                continue;
            }
            if !e.is_geo_homogeneous() {
                return false;
            }
            let d = e.geo_degree().unwrap();
            match common {
                None => common = Some(d),
                Some(c) if c == d => {}
                Some(_) => return false,
            }
        }
        true
    }

    pub fn substitute(&self, assignments: &[(String, Rational)]) -> Result<Self> {
        let entries: Vec<Polynomial> = self
            .entries
            .iter()
            .map(|e| e.substitute(assignments))
            .collect::<Result<_>>()?;
        let ring = entries
            .first()
            .map(|e| Arc::clone(e.ring()))
            .ok_or_else(|| Error::ShapeMismatch("empty module element".into()))?;
        Ok(FreeModuleElement { ring, entries })
    }

    pub fn map_vars(&self, new_ring: &Arc<PolyRing>, map: &[Option<usize>]) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.map_vars(new_ring, map))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement {
            ring: Arc::clone(new_ring),
            entries,
        })
    }

    /// Leading module term (component, monomial, coefficient).
    pub fn leading(&self, order: ModuleOrder) -> Option<(usize, &Monomial, &Rational)> {
        match order {
            ModuleOrder::PositionOverTerm => self.entries.iter().enumerate().find_map(|(i, e)| {
                e.leading_term().map(|(m, c)| (i, m, c))
            }),
            ModuleOrder::TermOverPosition => {
                let mut best: Option<(usize, &Monomial, &Rational)> = None;
                for (i, e) in self.entries.iter().enumerate() {
                    if let Some((m, c)) = e.leading_term() {
                        best = match best {
                            None => Some((i, m, c)),
                            Some((bi, bm, bc)) => {
                                if order.cmp_terms(&self.ring, (i, m), (bi, bm))
                                    == Ordering::Greater
                                {
                                    Some((i, m, c))
                                } else {
                                    Some((bi, bm, bc))
                                }
                            }
                        };
                    }
                }
                best
            }
        }
    }

    fn monic(&self, order: ModuleOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, _, c)) => self.scale(&c.recip()),
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::ShapeMismatch(format!(
                "rank {} vs {}",
                self.rank(),
                other.rank()
            )));
        }
        if !(Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring) {
            return Err(Error::RingMismatch("module elements".into()));
        }
        Ok(())
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A finitely generated submodule of R^s with a cached reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<FreeModuleElement>,
    order: ModuleOrder,
    gb: OnceLock<Vec<FreeModuleElement>>,
}

impl Submodule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: Vec<FreeModuleElement>) -> Result<Self> {
        Self::with_order(ring, rank, gens, ModuleOrder::default())
    }

    pub fn with_order(
        ring: &Arc<PolyRing>,
        rank: usize,
        gens: Vec<FreeModuleElement>,
        order: ModuleOrder,
    ) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.rank() != rank {
                return Err(Error::ShapeMismatch(format!(
                    "generator rank {} in a rank-{} module",
                    g.rank(),
                    rank
                )));
            }
            if !(Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring) {
                return Err(Error::RingMismatch("module generator".into()));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Submodule {
            ring: Arc::clone(ring),
            rank,
            gens: kept,
            order,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        Submodule::new(ring, rank, Vec::new()).expect("zero module")
    }

    /// The whole free module R^rank.
    pub fn full(ring: &Arc<PolyRing>, rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| FreeModuleElement::unit(ring, rank, i))
            .collect();
        Submodule::new(ring, rank, gens).expect("full module")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.gens
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    /// The reduced module Gröbner basis: monic, no element's term divisible
    /// by another's leading term, canonically sorted. Computed once and
    /// cached; unique for a fixed ring and order.
    pub fn groebner_basis(&self) -> &[FreeModuleElement] {
        self.gb
            .get_or_init(|| buchberger(&self.ring, &self.gens, self.order))
    }

    /// Remainder of `elem` on division by the reduced basis. Zero exactly
    /// when `elem` lies in the submodule.
    pub fn normal_form(&self, elem: &FreeModuleElement) -> Result<FreeModuleElement> {
        if elem.rank() != self.rank {
            return Err(Error::ShapeMismatch("normal form rank".into()));
        }
        if !(Arc::ptr_eq(elem.ring(), &self.ring) || **elem.ring() == *self.ring) {
            return Err(Error::RingMismatch("normal form".into()));
        }
        Ok(reduce_full(elem, self.groebner_basis(), self.order))
    }

    pub fn contains(&self, elem: &FreeModuleElement) -> Result<bool> {
        Ok(self.normal_form(elem)?.is_zero())
    }

    pub fn is_zero_module(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    /// Module equality through the uniqueness of reduced Gröbner bases.
    pub fn same_module(&self, other: &Submodule) -> Result<bool> {
        if self.rank != other.rank {
            return Err(Error::ShapeMismatch("module comparison".into()));
        }
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    /// The submodule generated by both generator sets.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.rank != other.rank {
            return Err(Error::ShapeMismatch("module sum".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::with_order(&self.ring, self.rank, gens, self.order)
    }

    /// M ∩ N through the syzygy construction on the combined generators.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        if self.rank != other.rank {
            return Err(Error::ShapeMismatch("module intersection".into()));
        }
        let columns: Vec<FreeModuleElement> = self
            .gens
            .iter()
            .chain(other.gens.iter())
            .cloned()
            .collect();
        let a = self.gens.len();
        if a == 0 || other.gens.is_empty() {
            return Ok(Submodule::zero(&self.ring, self.rank));
        }
        let syz = syzygy_generators(&self.ring, &columns)?;
        let mut gens = Vec::new();
        for q in syz {
            // Σ_{i<a} q_i · m_i lands in M ∩ N.
            let mut elem = FreeModuleElement::zero(&self.ring, self.rank);
            for i in 0..a {
                elem = elem.add(&self.gens[i].mul_poly(q.entry(i))?)?;
            }
            if !elem.is_zero() {
                gens.push(elem);
            }
        }
        Submodule::with_order(&self.ring, self.rank, gens, self.order)
    }

    /// The colon module (M : f) = { u : f·u ∈ M }.
    pub fn colon_by(&self, f: &Polynomial) -> Result<Submodule> {
        if f.is_zero() {
            return Err(Error::Invalid("colon by the zero polynomial".into()));
        }
        // (M : f) = (M ∩ f·R^s) / f, entrywise exact division.
        let f_module = Submodule::with_order(
            &self.ring,
            self.rank,
            (0..self.rank)
                .map(|i| FreeModuleElement::unit(&self.ring, self.rank, i).mul_poly(f))
                .collect::<Result<_>>()?,
            self.order,
        )?;
        let inter = self.intersect(&f_module)?;
        let mut gens = Vec::new();
        for g in inter.generators() {
            let entries = g
                .entries()
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        Ok(Polynomial::zero(&self.ring))
                    } else {
                        e.div_exact(f)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            gens.push(FreeModuleElement::new(&self.ring, entries)?);
        }
        Submodule::with_order(&self.ring, self.rank, gens, self.order)
    }

    /// Saturation (M : f^∞), detected by the colon chain becoming stationary.
    /// Monotone (M ⊆ result) and idempotent.
    pub fn saturate_by(&self, f: &Polynomial) -> Result<Submodule> {
        if f.is_zero() {
            return Err(Error::Invalid("saturation by the zero polynomial".into()));
        }
        let mut current = self.clone();
        loop {
            let next = current.colon_by(f)?;
            if next.same_module(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }
}

/// Generators of the syzygy module { q in R^m : Σ q_i v_i = 0 } of the given
/// columns (all of one rank t). Uses the elimination order on R^t ⊕ R^m that
/// makes any tag-block term dominate the tracking block.
pub fn syzygy_generators(
    ring: &Arc<PolyRing>,
    columns: &[FreeModuleElement],
) -> Result<Vec<FreeModuleElement>> {
    let m = columns.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let t = columns[0].rank();
    for c in columns {
        if c.rank() != t {
            return Err(Error::ShapeMismatch("syzygy columns".into()));
        }
    }
    let mut augmented = Vec::with_capacity(m);
    for (i, col) in columns.iter().enumerate() {
        let mut entries = Vec::with_capacity(t + m);
        entries.extend(col.entries().iter().cloned());
        for j in 0..m {
            entries.push(if j == i {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            });
        }
        augmented.push(FreeModuleElement::new(ring, entries)?);
    }
    let gb = buchberger(ring, &augmented, ModuleOrder::PositionOverTerm);
    let mut syzygies = Vec::new();
    for g in gb {
        if g.entries()[..t].iter().all(Polynomial::is_zero) {
            let tail = g.entries()[t..].to_vec();
            syzygies.push(FreeModuleElement::new(ring, tail)?);
        }
    }
    Ok(syzygies)
}

/// Full tail-reducing normal form of `elem` against `basis`.
fn reduce_full(
    elem: &FreeModuleElement,
    basis: &[FreeModuleElement],
    order: ModuleOrder,
) -> FreeModuleElement {
    let ring = Arc::clone(elem.ring());
    let rank = elem.rank();
    let mut p = elem.clone();
    let mut remainder = FreeModuleElement::zero(&ring, rank);
    'outer: while let Some((comp, lm, lc)) = p.leading(order) {
        let (comp, lm, lc) = (comp, lm.clone(), lc.clone());
        for b in basis {
            let Some((bc, bm, bcoef)) = b.leading(order) else {
                continue;
            };
            if bc == comp {
                if let Some(q) = bm.divide_into(&lm) {
                    let coeff = &lc / bcoef;
                    p = p
                        .sub(&b.mul_term(&q, &coeff))
                        .expect("shapes agree during reduction");
                    continue 'outer;
                }
            }
        }
        // Irreducible leading term: move it into the remainder.
        let mut entries = remainder.entries().to_vec();
        entries[comp] = entries[comp]
            .checked_add(&Polynomial::monomial(&ring, lm.clone(), lc.clone()))
            .expect("same ring");
        remainder = FreeModuleElement::new(&ring, entries).expect("same ring");
        let mut pe = p.entries().to_vec();
        pe[comp].pop_leading_term();
        p = FreeModuleElement::new(&ring, pe).expect("same ring");
    }
    remainder
}

/// Buchberger's algorithm returning the reduced module Gröbner basis.
///
/// Pair selection is the normal strategy (smallest lcm degree, ties broken by
/// the order, then indices). Pairs are discarded by the coprimality criterion
/// (rank 1 only, where it is sound) and the standard lcm-chain criterion.
fn buchberger(
    ring: &Arc<PolyRing>,
    gens: &[FreeModuleElement],
    order: ModuleOrder,
) -> Vec<FreeModuleElement> {
    let mut basis: Vec<FreeModuleElement> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(order));
        }
    }
    let rank1 = basis.first().map(|g| g.rank() == 1).unwrap_or(false);

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if pair_component(&basis, i, j, order).is_some() {
                pending.push((i, j));
            }
        }
    }

    while !pending.is_empty() {
        // Normal strategy: smallest lcm first.
        let mut best = 0usize;
        for idx in 1..pending.len() {
            if pair_key_less(ring, order, &basis, pending[idx], pending[best]) {
                best = idx;
            }
        }
        let (i, j) = pending.swap_remove(best);

        let (lm_i, lm_j) = (lead_mono(&basis, i, order), lead_mono(&basis, j, order));
        let lcm = lm_i.lcm(&lm_j);
        // Coprimality criterion, sound for ideals.
        if rank1 && lm_i.coprime(&lm_j) {
            continue;
        }
        // Chain criterion: some k with LT in the same component whose leading
        // monomial divides the lcm properly on both sides.
        let comp = pair_component(&basis, i, j, order).expect("paired components match");
        let mut discard = false;
        for (k, b) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let Some((kc, km, _)) = b.leading(order) else {
                continue;
            };
            if kc != comp || !km.divides(&lcm) {
                continue;
            }
            if lm_i.lcm(km) != lcm && lm_j.lcm(km) != lcm {
                discard = true;
                break;
            }
        }
        if discard {
            continue;
        }

        let s = s_pair(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(r.monic(order));
            for k in 0..new_idx {
                if pair_component(&basis, k, new_idx, order).is_some() {
                    pending.push((k, new_idx));
                }
            }
        }
    }

    reduce_basis(basis, order)
}

fn lead_mono(basis: &[FreeModuleElement], i: usize, order: ModuleOrder) -> Monomial {
    basis[i]
        .leading(order)
        .map(|(_, m, _)| m.clone())
        .expect("basis elements are nonzero")
}

/// The shared leading component of a candidate pair, if any.
fn pair_component(
    basis: &[FreeModuleElement],
    i: usize,
    j: usize,
    order: ModuleOrder,
) -> Option<usize> {
    let (ci, _, _) = basis[i].leading(order)?;
    let (cj, _, _) = basis[j].leading(order)?;
    (ci == cj).then_some(ci)
}

fn pair_key_less(
    ring: &Arc<PolyRing>,
    order: ModuleOrder,
    basis: &[FreeModuleElement],
    a: (usize, usize),
    b: (usize, usize),
) -> bool {
    let la = lead_mono(basis, a.0, order).lcm(&lead_mono(basis, a.1, order));
    let lb = lead_mono(basis, b.0, order).lcm(&lead_mono(basis, b.1, order));
    match la.degree().cmp(&lb.degree()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match ring.cmp_monomials(&la, &lb) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => a < b,
        },
    }
}

fn s_pair(
    f: &FreeModuleElement,
    g: &FreeModuleElement,
    order: ModuleOrder,
) -> FreeModuleElement {
    let (_, fm, fc) = f.leading(order).expect("nonzero");
    let (_, gm, gc) = g.leading(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let uf = fm.divide_into(&lcm).expect("lcm divisible");
    let ug = gm.divide_into(&lcm).expect("lcm divisible");
    let a = f.mul_term(&uf, &fc.recip());
    let b = g.mul_term(&ug, &gc.recip());
    a.sub(&b).expect("shapes agree")
}

/// Minimalize, tail-reduce, normalize, and canonically sort a basis.
fn reduce_basis(basis: Vec<FreeModuleElement>, order: ModuleOrder) -> Vec<FreeModuleElement> {
    // Minimal: drop any element whose leading term is divisible by another
    // kept element's leading term.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ci, mi, _) = basis[i].leading(order).expect("nonzero");
        let (ci, mi) = (ci, mi.clone());
        for (j, other) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let (cj, mj, _) = other.leading(order).expect("nonzero");
            if ci == cj && mj.divides(&mi) && (mj != &mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<FreeModuleElement> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Tail-reduce each element against all the others.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<FreeModuleElement> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = reduce_full(&minimal[i], &others, order);
        debug_assert!(!r.is_zero());
        reduced.push(r.monic(order));
    }

    // Canonical order: descending leading terms.
    let ring = reduced
        .first()
        .map(|g| Arc::clone(g.ring()));
    if let Some(ring) = ring {
        reduced.sort_by(|a, b| {
            let (ca, ma, _) = a.leading(order).expect("nonzero");
            let (cb, mb, _) = b.leading(order).expect("nonzero");
            order.cmp_terms(&ring, (cb, mb), (ca, ma))
        });
    }
    reduced
}

/// Convenience: parse a vector of polynomial strings into a module element.
pub fn element_from_strings(
    ring: &Arc<PolyRing>,
    entries: &[&str],
) -> Result<FreeModuleElement> {
    let entries = entries
        .iter()
        .map(|s| crate::poly::parse::parse_polynomial(ring, s))
        .collect::<Result<Vec<_>>>()?;
    FreeModuleElement::new(ring, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;

    fn ring_x() -> Arc<PolyRing> {
        PolyRing::new(&["x"], &[]).unwrap()
    }

    fn elem(ring: &Arc<PolyRing>, entries: &[&str]) -> FreeModuleElement {
        element_from_strings(ring, entries).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring_x();
        let m = Submodule::new(&r, 2, vec![elem(&r, &["1", "1"])]).unwrap();
        assert_eq!(m.groebner_basis(), &[elem(&r, &["1", "1"])]);
    }

    #[test]
    fn full_module_basis_is_units() {
        let r = ring_x();
        let m = Submodule::new(&r, 2, vec![elem(&r, &["1", "0"]), elem(&r, &["0", "1"])]).unwrap();
        assert_eq!(
            m.groebner_basis(),
            &[elem(&r, &["1", "0"]), elem(&r, &["0", "1"])]
        );
    }

    #[test]
    fn diagonal_plus_shifted_is_reduced() {
        let r = ring_x();
        let m = Submodule::new(&r, 2, vec![elem(&r, &["1", "1"]), elem(&r, &["0", "x^2"])]).unwrap();
        assert_eq!(
            m.groebner_basis(),
            &[elem(&r, &["1", "1"]), elem(&r, &["0", "x^2"])]
        );
        // Membership of combinations.
        assert!(m.contains(&elem(&r, &["x^2", "0"])).unwrap());
        assert!(!m.contains(&elem(&r, &["x", "0"])).unwrap());
    }

    #[test]
    fn syzygy_of_scalar_columns() {
        let r = ring_x();
        // Columns x and y... in one variable: x and x^2: syzygy (x, -1).
        let cols = vec![elem(&r, &["x"]), elem(&r, &["x^2"])];
        let syz = syzygy_generators(&r, &cols).unwrap();
        assert_eq!(syz.len(), 1);
        let q = &syz[0];
        let combo = &(q.entry(0) * &parse_polynomial(&r, "x").unwrap())
            + &(q.entry(1) * &parse_polynomial(&r, "x^2").unwrap());
        assert!(combo.is_zero());
    }

    #[test]
    fn principal_intersection_is_lcm() {
        let r = PolyRing::new(&["x", "y"], &[]).unwrap();
        let mx = Submodule::new(&r, 1, vec![elem(&r, &["x"])]).unwrap();
        let my = Submodule::new(&r, 1, vec![elem(&r, &["y"])]).unwrap();
        let inter = mx.intersect(&my).unwrap();
        let expected = Submodule::new(&r, 1, vec![elem(&r, &["x*y"])]).unwrap();
        assert!(inter.same_module(&expected).unwrap());
        // Idempotence.
        assert!(mx.intersect(&mx).unwrap().same_module(&mx).unwrap());
    }

    #[test]
    fn diagonal_meets_axis_trivially() {
        let r = ring_x();
        let diag = Submodule::new(&r, 2, vec![elem(&r, &["1", "1"])]).unwrap();
        let axis = Submodule::new(&r, 2, vec![elem(&r, &["1", "0"])]).unwrap();
        let inter = diag.intersect(&axis).unwrap();
        assert!(inter.is_zero_module());
    }

    #[test]
    fn saturation_chain() {
        let r = PolyRing::new(&["x"], &["z"]).unwrap();
        let zx = Submodule::new(&r, 1, vec![elem(&r, &["z*x"])]).unwrap();
        let z = parse_polynomial(&r, "z").unwrap();
        let sat = zx.saturate_by(&z).unwrap();
        let expected = Submodule::new(&r, 1, vec![elem(&r, &["x"])]).unwrap();
        assert!(sat.same_module(&expected).unwrap());
        // Coprime: saturation leaves the module unchanged.
        let x2 = Submodule::new(&r, 1, vec![elem(&r, &["x^2"])]).unwrap();
        assert!(x2.saturate_by(&z).unwrap().same_module(&x2).unwrap());
        // Zero module.
        let zero = Submodule::zero(&r, 1);
        assert!(zero.saturate_by(&z).unwrap().is_zero_module());
        // Monotone + idempotent.
        for g in zx.generators() {
            assert!(sat.contains(g).unwrap());
        }
        assert!(sat.saturate_by(&z).unwrap().same_module(&sat).unwrap());
    }
}
