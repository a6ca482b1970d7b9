//! Ideal difference-conditions and their quasi-spline kernels.
//!
//! A tuple of ideals I_jk (1 ≤ j < k ≤ s) cuts out the submodule
//! S = { (g_1, …, g_s) : g_j − g_k ∈ I_jk } of R^s. S always contains the
//! diagonal (1, …, 1) and is closed under entrywise multiplication, so it is
//! a subalgebra of R^s; the classical case is piecewise polynomials glued
//! along subdivision walls. This module computes S, verifies the subalgebra
//! laws, specializes base parameters, and compares the restriction of a
//! parametric kernel with the kernel of the specialized conditions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::module::{FreeModuleElement, Submodule};
use crate::groebner::Ideal;
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;

/// The data (s, {I_jk}) defining a quasi-spline module. Missing pairs are
/// treated as the unit ideal, i.e. no condition.
#[derive(Debug, Clone)]
pub struct DifferenceConditions {
    ring: Arc<PolyRing>,
    strands: usize,
    ideals: BTreeMap<(usize, usize), Ideal>,
    /// Extra relations identifying base parameters with ring elements
    /// (e.g. `z - x` when the base acts through x). They take part in the
    /// cokernel torsion test but not in the kernel itself.
    base_action: Vec<Polynomial>,
}

impl DifferenceConditions {
    /// `ideals` maps 1-based pairs (j, k) with j < k ≤ s to ideals of `ring`.
    pub fn new(
        ring: &Arc<PolyRing>,
        strands: usize,
        ideals: BTreeMap<(usize, usize), Ideal>,
    ) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("at least one strand is required".into()));
        }
        for ((j, k), ideal) in &ideals {
            if !(1 <= *j && j < k && *k <= strands) {
                return Err(Error::Invalid(format!(
                    "pair ({j}, {k}) out of range for s = {strands}"
                )));
            }
            if **ideal.ring() != **ring {
                return Err(Error::RingMismatch(format!("ideal for pair ({j}, {k})")));
            }
        }
        Ok(DifferenceConditions {
            ring: Arc::clone(ring),
            strands,
            ideals,
            base_action: Vec::new(),
        })
    }

    /// Convenience constructor from generator strings.
    pub fn from_strings(
        ring: &Arc<PolyRing>,
        strands: usize,
        pairs: &[(usize, usize, &[&str])],
    ) -> Result<Self> {
        let mut ideals = BTreeMap::new();
        for (j, k, gens) in pairs {
            ideals.insert((*j, *k), Ideal::from_strings(ring, gens)?);
        }
        DifferenceConditions::new(ring, strands, ideals)
    }

    /// Adds base-action relations used by the flatness test.
    pub fn with_base_action(mut self, relations: Vec<Polynomial>) -> Result<Self> {
        for r in &relations {
            if **r.ring() != *self.ring {
                return Err(Error::RingMismatch("base action relation".into()));
            }
        }
        self.base_action = relations;
        Ok(self)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn ideals(&self) -> &BTreeMap<(usize, usize), Ideal> {
        &self.ideals
    }

    pub fn base_action(&self) -> &[Polynomial] {
        &self.base_action
    }

    /// The ideal for a pair; the unit ideal when the pair is absent.
    pub fn ideal_for(&self, j: usize, k: usize) -> Ideal {
        self.ideals
            .get(&(j, k))
            .cloned()
            .unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// Ordered pairs whose condition is not vacuous (unit ideals dropped).
    pub fn active_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for j in 1..=self.strands {
            for k in j + 1..=self.strands {
                if let Some(ideal) = self.ideals.get(&(j, k)) {
                    if !ideal.is_unit() {
                        pairs.push((j, k));
                    }
                }
            }
        }
        pairs
    }

    /// True when every ideal generator is homogeneous in the geometric
    /// variables.
    pub fn is_geo_homogeneous(&self) -> bool {
        self.ideals
            .values()
            .all(|i| i.generators().iter().all(|g| g.is_geo_homogeneous()))
    }

    /// Substitutes base parameters in every ideal (and base-action relation);
    /// the ring shrinks accordingly.
    pub fn specialize(&self, assignments: &[(String, Rational)]) -> Result<DifferenceConditions> {
        for (name, _) in assignments {
            match self.ring.var_index(name) {
                None => return Err(Error::UnknownVariable(name.clone())),
                Some(i) if !self.ring.is_param(i) => {
                    return Err(Error::Invalid(format!("`{name}` is not a parameter")))
                }
                Some(_) => {}
            }
        }
        if assignments.is_empty() {
            return Ok(self.clone());
        }
        let mut ideals = BTreeMap::new();
        let mut new_ring: Option<Arc<PolyRing>> = None;
        for ((j, k), ideal) in &self.ideals {
            let gens: Vec<Polynomial> = ideal
                .generators()
                .iter()
                .map(|g| g.substitute(assignments))
                .collect::<Result<_>>()?;
            let ring = match gens.first() {
                Some(g) => Arc::clone(g.ring()),
                None => {
                    // Zero ideal: substitute in a throwaway to find the ring.
                    let probe = Polynomial::zero(&self.ring).substitute(assignments)?;
                    Arc::clone(probe.ring())
                }
            };
            new_ring.get_or_insert_with(|| Arc::clone(&ring));
            ideals.insert((*j, *k), Ideal::new(&ring, gens)?);
        }
        let ring = match new_ring {
            Some(r) => r,
            None => Arc::clone(Polynomial::zero(&self.ring).substitute(assignments)?.ring()),
        };
        let base_action = self
            .base_action
            .iter()
            .map(|g| g.substitute(assignments))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        let mut out = DifferenceConditions::new(&ring, self.strands, ideals)?;
        out.base_action = base_action;
        Ok(out)
    }
}

/// A quasi-spline module together with the conditions that produced it.
#[derive(Debug, Clone)]
pub struct QuasiSplineModule {
    conditions: DifferenceConditions,
    module: Submodule,
}

impl QuasiSplineModule {
    pub fn conditions(&self) -> &DifferenceConditions {
        &self.conditions
    }

    pub fn module(&self) -> &Submodule {
        &self.module
    }

    pub fn into_module(self) -> Submodule {
        self.module
    }
}

/// Computes the kernel S = { g : g_j − g_k ∈ I_jk } of the difference map
/// R^s → ⊕_jk R/I_jk as a submodule of R^s.
///
/// The kernel is the projection to the first s coordinates of the syzygy
/// module of the augmented presentation whose columns are the images of the
/// free-module basis followed by the ideal generators placed in their target
/// components.
pub fn spline_kernel(conditions: &DifferenceConditions) -> Result<QuasiSplineModule> {
    let ring = conditions.ring();
    let s = conditions.strands();
    let pairs = conditions.active_pairs();
    let t = pairs.len();

    let module = if t == 0 {
        Submodule::full(ring, s)
    } else {
        // Column for e_i: its image (δ_{i=j} − δ_{i=k})_{jk} in ⊕_jk R.
        let mut columns: Vec<FreeModuleElement> = Vec::new();
        for i in 1..=s {
            let entries: Vec<Polynomial> = pairs
                .iter()
                .map(|(j, k)| {
                    if i == *j {
                        Polynomial::one(ring)
                    } else if i == *k {
                        -&Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect();
            columns.push(FreeModuleElement::new(ring, entries)?);
        }
        // Columns for the ideal generators, each in its own target component.
        for (row, (j, k)) in pairs.iter().enumerate() {
            for gen in conditions.ideal_for(*j, *k).generators() {
                let mut entries = vec![Polynomial::zero(ring); t];
                entries[row] = gen.clone();
                columns.push(FreeModuleElement::new(ring, entries)?);
            }
        }
        let syzygies = crate::groebner::module::syzygy_generators(ring, &columns)?;
        let mut gens = Vec::new();
        for q in syzygies {
            let head = FreeModuleElement::new(ring, q.entries()[..s].to_vec())?;
            if !head.is_zero() {
                gens.push(head);
            }
        }
        Submodule::new(ring, s, gens)?
    };

    let result = QuasiSplineModule {
        conditions: conditions.clone(),
        module,
    };
    debug_assert!(check_subalgebra(result.module()).is_closed());
    debug_assert!(satisfies_conditions(result.module(), conditions).unwrap_or(false));
    Ok(result)
}

/// Outcome of the subalgebra check, with a witness on failure.
#[derive(Debug, Clone)]
pub enum AlgebraCheck {
    /// Contains the diagonal and is closed under entrywise products.
    Closed,
    /// The diagonal (1, …, 1) is missing.
    MissingDiagonal,
    /// Two generators whose entrywise product escapes the module.
    NotClosed {
        left: FreeModuleElement,
        right: FreeModuleElement,
        product: FreeModuleElement,
    },
}

impl AlgebraCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, AlgebraCheck::Closed)
    }
}

/// Checks that a submodule of R^s contains the diagonal and is closed under
/// entrywise multiplication of generators.
pub fn check_subalgebra(module: &Submodule) -> AlgebraCheck {
    let ring = module.ring();
    let rank = module.rank();
    let diagonal = FreeModuleElement::new(
        ring,
        vec![Polynomial::one(ring); rank],
    )
    .expect("diagonal construction");
    match module.contains(&diagonal) {
        Ok(true) => {}
        _ => return AlgebraCheck::MissingDiagonal,
    }
    let gens = module.generators();
    for (a, u) in gens.iter().enumerate() {
        for v in &gens[a..] {
            let product = match u.hadamard(v) {
                Ok(p) => p,
                Err(_) => continue,
            };
            match module.contains(&product) {
                Ok(true) => {}
                _ => {
                    return AlgebraCheck::NotClosed {
                        left: u.clone(),
                        right: v.clone(),
                        product,
                    }
                }
            }
        }
    }
    AlgebraCheck::Closed
}

/// The compatibility test: every generator's pairwise differences lie in the
/// corresponding ideals, i.e. the composition S → ⊕ R/I_jk vanishes.
pub fn satisfies_conditions(
    module: &Submodule,
    conditions: &DifferenceConditions,
) -> Result<bool> {
    if module.rank() != conditions.strands() {
        return Err(Error::ShapeMismatch(
            "module rank differs from strand count".into(),
        ));
    }
    for g in module.generators() {
        for (j, k) in conditions.active_pairs() {
            let diff = g.entry(j - 1).checked_sub(g.entry(k - 1))?;
            if !conditions.ideal_for(j, k).contains(&diff)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Report of the restriction-versus-specialization comparison at one value
/// of the parameter.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    /// The cokernel of S → R^s has no (z − value)-torsion.
    pub flat: bool,
    /// The restriction of the parametric kernel is strictly smaller than the
    /// kernel of the specialized conditions.
    pub inclusion_proper: bool,
    /// An element of the specialized kernel missing from the restriction.
    pub witness: Option<FreeModuleElement>,
    /// Kernel of the specialized conditions.
    pub specialized: Submodule,
    /// Image of the parametric kernel under the substitution, as a module.
    pub restricted: Submodule,
}

/// Compares the specialized kernel with the restriction of the parametric
/// kernel at `value`, and tests flatness of the cokernel of S → R^s there.
///
/// The ring must carry exactly one parameter. Flatness is decided by
/// saturating the cokernel presentation (the kernel plus any base-action
/// relations times R^s) by z − value: torsion exists exactly when the
/// saturation grows.
pub fn restriction_compare(
    conditions: &DifferenceConditions,
    value: &Rational,
) -> Result<FamilyReport> {
    let ring = conditions.ring();
    if ring.n_params() != 1 {
        return Err(Error::Unsupported(
            "restriction comparison needs exactly one parameter".into(),
        ));
    }
    let param = ring.param_names()[0].clone();
    let s = conditions.strands();

    let generic = spline_kernel(conditions)?;

    // Torsion test on N = S + (base action)·R^s.
    let mut presentation = generic.module().clone();
    for rel in conditions.base_action() {
        let extra = Submodule::new(
            ring,
            s,
            (0..s)
                .map(|i| FreeModuleElement::unit(ring, s, i).mul_poly(rel))
                .collect::<Result<_>>()?,
        )?;
        presentation = presentation.sum(&extra)?;
    }
    let shifted = Polynomial::var(ring, &param)?
        .checked_sub(&Polynomial::constant(ring, value.clone()))?;
    let saturated = presentation.saturate_by(&shifted)?;
    let flat = saturated.same_module(&presentation)?;

    // Kernel of the specialized conditions.
    let assignments = [(param.clone(), value.clone())];
    let special_conditions = conditions.specialize(&assignments)?;
    let special = spline_kernel(&special_conditions)?;
    let small_ring = special_conditions.ring();

    // Restriction: substitute in the generic basis, re-close into a module.
    let restricted_gens: Vec<FreeModuleElement> = generic
        .module()
        .groebner_basis()
        .iter()
        .map(|g| g.substitute(&assignments))
        .collect::<Result<_>>()?;
    let restricted = Submodule::new(small_ring, s, restricted_gens)?;

    // First specialized basis element escaping the restriction, if any.
    let mut witness = None;
    for g in special.module().groebner_basis() {
        if !restricted.contains(g)? {
            witness = Some(g.clone());
            break;
        }
    }
    let inclusion_proper = witness.is_some();

    Ok(FamilyReport {
        flat,
        inclusion_proper,
        witness,
        specialized: special.into_module(),
        restricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::module::element_from_strings;
    use num_traits::{One, Zero};

    fn elem(ring: &Arc<PolyRing>, entries: &[&str]) -> FreeModuleElement {
        element_from_strings(ring, entries).unwrap()
    }

    /// Two strands over Q[x] glued along (x^2): first-derivative splines on
    /// a one-wall subdivision of the line.
    fn parabola_pair() -> DifferenceConditions {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x^2"])]).unwrap()
    }

    /// Three strands over Q[z][x, y]: the planar family whose middle wall
    /// x + y − z moves with the parameter.
    fn three_region_family() -> DifferenceConditions {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        DifferenceConditions::from_strings(
            &r,
            3,
            &[(1, 2, &["x"]), (2, 3, &["y"]), (1, 3, &["x + y - z"])],
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_parabola_pair() {
        let c = parabola_pair();
        let s = spline_kernel(&c).unwrap();
        let r = c.ring();
        let expected = Submodule::new(
            r,
            2,
            vec![elem(r, &["1", "1"]), elem(r, &["0", "x^2"])],
        )
        .unwrap();
        assert!(s.module().same_module(&expected).unwrap());
    }

    #[test]
    fn kernel_with_unit_ideal_is_everything() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["1"])]).unwrap();
        let s = spline_kernel(&c).unwrap();
        assert!(s.module().same_module(&Submodule::full(&r, 2)).unwrap());
        // Missing pair behaves the same way.
        let c2 = DifferenceConditions::from_strings(&r, 2, &[]).unwrap();
        let s2 = spline_kernel(&c2).unwrap();
        assert!(s2.module().same_module(&Submodule::full(&r, 2)).unwrap());
    }

    #[test]
    fn kernel_with_zero_ideal_is_diagonal() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let c = DifferenceConditions::new(
            &r,
            2,
            BTreeMap::from([((1, 2), Ideal::zero(&r))]),
        )
        .unwrap();
        let s = spline_kernel(&c).unwrap();
        let diag = Submodule::new(&r, 2, vec![elem(&r, &["1", "1"])]).unwrap();
        assert!(s.module().same_module(&diag).unwrap());
    }

    #[test]
    fn irreducible_wall_kernel_membership() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x^2 + 1"])]).unwrap();
        let s = spline_kernel(&c).unwrap();
        assert!(s.module().contains(&elem(&r, &["0", "x^2 + 1"])).unwrap());
        assert!(s.module().contains(&elem(&r, &["1", "1"])).unwrap());
        assert!(!s.module().contains(&elem(&r, &["0", "x"])).unwrap());
    }

    #[test]
    fn three_region_family_contains_printed_basis() {
        let c = three_region_family();
        let s = spline_kernel(&c).unwrap();
        let r = c.ring();
        let v = [
            elem(r, &["1", "1", "1"]),
            elem(r, &["0", "z*x - x^2", "z*x - x^2 - x*y"]),
            elem(r, &["0", "0", "z*y - x*y - y^2"]),
            elem(r, &["0", "x*y", "0"]),
        ];
        for vi in &v {
            assert!(s.module().contains(vi).unwrap(), "missing {vi}");
        }
    }

    #[test]
    fn subalgebra_check_examples() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        let good = Submodule::new(
            &r,
            2,
            vec![elem(&r, &["1", "1"]), elem(&r, &["0", "x^2"])],
        )
        .unwrap();
        assert!(check_subalgebra(&good).is_closed());

        let no_diag = Submodule::new(&r, 2, vec![elem(&r, &["0", "x"])]).unwrap();
        assert!(matches!(
            check_subalgebra(&no_diag),
            AlgebraCheck::MissingDiagonal
        ));

        // Abstractly a subalgebra, but violates the (x^2) conditions.
        let bigger = Submodule::new(
            &r,
            2,
            vec![elem(&r, &["1", "1"]), elem(&r, &["0", "x"])],
        )
        .unwrap();
        assert!(check_subalgebra(&bigger).is_closed());
        let c = parabola_pair();
        assert!(!satisfies_conditions(&bigger, &c).unwrap());
    }

    #[test]
    fn specialization_shrinks_ring() {
        let c = three_region_family();
        let sp = c
            .specialize(&[("z".to_string(), Rational::zero())])
            .unwrap();
        assert_eq!(sp.ring().var_names(), ["x".to_string(), "y".to_string()]);
        let i13 = sp.ideal_for(1, 3);
        let expected = Ideal::from_strings(sp.ring(), &["x + y"]).unwrap();
        assert!(i13.same_ideal(&expected).unwrap());
        // Empty assignment is the identity.
        let same = c.specialize(&[]).unwrap();
        assert_eq!(same.ring().var_names(), c.ring().var_names());
        // Non-parameters are rejected.
        assert!(c.specialize(&[("x".to_string(), Rational::one())]).is_err());
    }

    #[test]
    fn specialization_value_substitutes() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let c =
            DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x + y - z"])]).unwrap();
        let sp = c.specialize(&[("z".to_string(), Rational::one())]).unwrap();
        let expected = Ideal::from_strings(sp.ring(), &["x + y - 1"]).unwrap();
        assert!(sp.ideal_for(1, 2).same_ideal(&expected).unwrap());
    }

    #[test]
    fn three_region_family_witness_at_origin() {
        let c = three_region_family();
        let report = restriction_compare(&c, &Rational::zero()).unwrap();
        assert!(report.flat);
        assert!(report.inclusion_proper);
        let small = report.specialized.ring().clone();
        let printed = elem(&small, &["y", "y - x", "-x"]);
        assert!(report.specialized.contains(&printed).unwrap());
        assert!(!report.restricted.contains(&printed).unwrap());
        let w = report.witness.expect("witness exists");
        assert!(report.specialized.contains(&w).unwrap());
        assert!(!report.restricted.contains(&w).unwrap());
    }

    #[test]
    fn pinched_pair_fails_flatness() {
        // Two strands over Q[z][x] with the base acting through z = x:
        // the cokernel acquires z-torsion at the origin.
        let r = PolyRing::new(&["x"], &["z"]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x^2"])])
            .unwrap()
            .with_base_action(vec![crate::poly::parse::parse_polynomial(&r, "z - x").unwrap()])
            .unwrap();
        let report = restriction_compare(&c, &Rational::zero()).unwrap();
        assert!(!report.flat);
    }

    #[test]
    fn moving_wall_is_an_isomorphism() {
        // A single wall x − z: restriction equals specialization at 0.
        let r = PolyRing::new(&["x"], &["z"]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x - z"])]).unwrap();
        let report = restriction_compare(&c, &Rational::zero()).unwrap();
        assert!(report.flat);
        assert!(!report.inclusion_proper);
        assert!(report.witness.is_none());
    }

    #[test]
    fn multi_parameter_families_are_rejected() {
        let r = PolyRing::new(&["x"], &["z", "w"]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x"])]).unwrap();
        assert!(restriction_compare(&c, &Rational::zero()).is_err());
    }
}
