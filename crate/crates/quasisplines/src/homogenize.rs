//! Homogenization by the total-degree filtration.
//!
//! A module M over a z_h-free ring is filtered by its degree-bounded slices
//! M_{≤d} (componentwise maximum of geometric degree for module elements).
//! Its homogenization lives over the ring extended by the dummy variable
//! `z_h` and collects the slices as graded pieces. Dehomogenization sets
//! z_h = 1. The two functors are adjoint: dehomogenizing a homogenization
//! gives back the module on the nose, while homogenizing a dehomogenization
//! recovers exactly the z_h-saturation of the input.
//!
//! Generator-wise homogenization can miss elements of the filtered module,
//! so `homogenize_*` saturates by z_h after homogenizing the generators;
//! that correction is exactly what makes the round-trip laws hold.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::module::{FreeModuleElement, Submodule};
use crate::groebner::Ideal;
use crate::linalg;
use crate::poly::monomial::{monomials_up_to_degree, Monomial};
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;
use crate::quasispline::DifferenceConditions;

/// Internal name of the homogenizing variable; chosen to stay clear of user
/// parameters. Front ends may print it under a different name.
pub const HOMOGENIZING_VAR: &str = "z_h";

fn check_zh_free(ring: &PolyRing) -> Result<()> {
    if ring.var_index(HOMOGENIZING_VAR).is_some() {
        return Err(Error::Invalid(format!(
            "ring already contains `{HOMOGENIZING_VAR}`"
        )));
    }
    Ok(())
}

fn zh_index(ring: &PolyRing) -> Result<usize> {
    ring.var_index(HOMOGENIZING_VAR)
        .ok_or_else(|| Error::Invalid(format!("ring lacks `{HOMOGENIZING_VAR}`")))
}

/// The extension of a z_h-free ring by the homogenizing variable.
pub fn homogenized_ring(ring: &Arc<PolyRing>) -> Result<(Arc<PolyRing>, usize, Vec<usize>)> {
    check_zh_free(ring)?;
    ring.with_extra_geometric_var(HOMOGENIZING_VAR)
}

/// Homogenizes one polynomial to its own geometric degree: each term is
/// padded with the power of z_h that lifts it to the degree of the whole
/// polynomial.
pub fn homogenize_polynomial(
    f: &Polynomial,
    big: &Arc<PolyRing>,
    zh: usize,
    map: &[usize],
) -> Polynomial {
    homogenize_polynomial_to(f, big, zh, map, f.geo_degree().unwrap_or(0))
}

/// Homogenizes one polynomial to a prescribed target degree ≥ its own.
fn homogenize_polynomial_to(
    f: &Polynomial,
    big: &Arc<PolyRing>,
    zh: usize,
    map: &[usize],
    target: u32,
) -> Polynomial {
    let embedded = f.embed(big, map);
    let terms = embedded
        .terms()
        .iter()
        .map(|(m, c)| {
            let pad = target - big.geo_degree(m);
            (m.mul(&Monomial::var_pow(big.nvars(), zh, pad)), c.clone())
        })
        .collect();
    Polynomial::from_terms(big, terms)
}

/// Homogenization of an ideal: generators are homogenized and the result is
/// saturated by z_h, so it equals the full filtered homogenization.
pub fn homogenize_ideal(ideal: &Ideal) -> Result<Ideal> {
    let (big, zh, map) = homogenized_ring(ideal.ring())?;
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| homogenize_polynomial(g, &big, zh, &map))
        .collect();
    let raw = Ideal::new(&big, gens)?;
    raw.saturate_by(&Polynomial::var(&big, HOMOGENIZING_VAR)?)
}

/// Homogenization of a submodule of R^s. The degree of a module element is
/// the maximum geometric degree over its components; every entry is padded
/// to that common degree.
pub fn homogenize_module(module: &Submodule) -> Result<Submodule> {
    let (big, zh, map) = homogenized_ring(module.ring())?;
    let mut gens = Vec::new();
    for g in module.generators() {
        let target = g.geo_degree().unwrap_or(0);
        let entries: Vec<Polynomial> = g
            .entries()
            .iter()
            .map(|e| homogenize_polynomial_to(e, &big, zh, &map, target))
            .collect();
        gens.push(FreeModuleElement::new(&big, entries)?);
    }
    let raw = Submodule::with_order(&big, module.rank(), gens, module.order())?;
    raw.saturate_by(&Polynomial::var(&big, HOMOGENIZING_VAR)?)
}

/// Homogenizes every ideal of a set of difference-conditions.
pub fn homogenize_conditions(c: &DifferenceConditions) -> Result<DifferenceConditions> {
    check_zh_free(c.ring())?;
    let (big, _, _) = homogenized_ring(c.ring())?;
    let mut ideals = BTreeMap::new();
    for ((j, k), ideal) in c.ideals() {
        ideals.insert((*j, *k), homogenize_ideal(ideal)?);
    }
    DifferenceConditions::new(&big, c.strands(), ideals)
}

/// Sets z_h = 1; the ring shrinks back to the filtered side.
pub fn dehomogenize_ideal(ideal: &Ideal) -> Result<Ideal> {
    zh_index(ideal.ring())?;
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&[(HOMOGENIZING_VAR.to_string(), Rational::one())]))
        .collect::<Result<_>>()?;
    let ring = match gens.first() {
        Some(g) => Arc::clone(g.ring()),
        None => {
            let probe = Polynomial::zero(ideal.ring())
                .substitute(&[(HOMOGENIZING_VAR.to_string(), Rational::one())])?;
            Arc::clone(probe.ring())
        }
    };
    Ideal::new(&ring, gens)
}

/// Sets z_h = 1 in every generator of a graded submodule.
pub fn dehomogenize_module(module: &Submodule) -> Result<Submodule> {
    zh_index(module.ring())?;
    let assignment = [(HOMOGENIZING_VAR.to_string(), Rational::one())];
    let gens: Vec<FreeModuleElement> = module
        .generators()
        .iter()
        .map(|g| g.substitute(&assignment))
        .collect::<Result<_>>()?;
    let ring = match gens.first() {
        Some(g) => Arc::clone(g.ring()),
        None => {
            let probe =
                Polynomial::zero(module.ring()).substitute(&assignment)?;
            Arc::clone(probe.ring())
        }
    };
    Submodule::with_order(&ring, module.rank(), gens, module.order())
}

/// Saturation by the homogenizing variable.
pub fn z_saturate_ideal(ideal: &Ideal) -> Result<Ideal> {
    zh_index(ideal.ring())?;
    ideal.saturate_by(&Polynomial::var(ideal.ring(), HOMOGENIZING_VAR)?)
}

/// Saturation of a graded module by the homogenizing variable.
pub fn z_saturate_module(module: &Submodule) -> Result<Submodule> {
    zh_index(module.ring())?;
    module.saturate_by(&Polynomial::var(module.ring(), HOMOGENIZING_VAR)?)
}

/// The counit law: dehomogenizing the homogenization returns the input.
pub fn round_trip_check_ideal(ideal: &Ideal) -> Result<bool> {
    let back = dehomogenize_ideal(&homogenize_ideal(ideal)?)?;
    back.same_ideal(ideal)
}

/// The counit law for modules.
pub fn round_trip_check_module(module: &Submodule) -> Result<bool> {
    let back = dehomogenize_module(&homogenize_module(module)?)?;
    back.same_module(module)
}

/// The unit side of the adjunction on a graded ideal: reports whether the
/// input is already z_h-saturated and returns the saturation (the defect
/// closure). Homogenizing the dehomogenization lands exactly on the
/// saturation.
pub fn unit_defect_check_ideal(ideal: &Ideal) -> Result<(bool, Ideal)> {
    let saturated = z_saturate_ideal(ideal)?;
    let unchanged = saturated.same_ideal(ideal)?;
    Ok((unchanged, saturated))
}

/// The unit side of the adjunction on a graded module.
pub fn unit_defect_check_module(module: &Submodule) -> Result<(bool, Submodule)> {
    let saturated = z_saturate_module(module)?;
    let unchanged = saturated.same_module(module)?;
    Ok((unchanged, saturated))
}

/// Dimension of the degree-d graded piece of a graded module, from its
/// Hilbert series.
pub fn graded_slice_dim(module: &Submodule, d: i64) -> Result<usize> {
    let shifts = vec![0i64; module.rank()];
    let series = crate::hilbert::series_of_module(module, &shifts)?;
    Ok(crate::hilbert::hilbert_function(&series, d))
}

/// Dimension of the degree-d graded piece of a graded ideal.
pub fn graded_slice_dim_ideal(ideal: &Ideal) -> Result<Box<dyn Fn(i64) -> usize>> {
    let series = crate::hilbert::series_of_ideal(ideal)?;
    Ok(Box::new(move |d| {
        crate::hilbert::hilbert_function(&series, d)
    }))
}

/// Dimension of the degree-≤d slice of the kernel of difference-conditions,
/// computed by the explicit linear system (independent of the Gröbner path):
/// unknown coefficients for the g_i of degree ≤ d and, per ideal generator
/// f, a multiplier of degree ≤ d − deg f.
pub fn bounded_slice_dim_conditions(c: &DifferenceConditions, d: u32) -> Result<usize> {
    let ring = c.ring();
    if ring.n_params() != 0 {
        return Err(Error::Unsupported(
            "bounded slices need a parameter-free ring".into(),
        ));
    }
    let s = c.strands();
    let nvars = ring.nvars();
    let basis = monomials_up_to_degree(nvars, d);
    let index: BTreeMap<&[u32], usize> =
        basis.iter().enumerate().map(|(i, m)| (m.exps(), i)).collect();
    let nmono = basis.len();

    // Column layout: g-block (component-major), then multiplier blocks.
    let g_cols = s * nmono;
    struct HBlock {
        pair: (usize, usize),
        gen: Polynomial,
        monos: Vec<Monomial>,
        offset: usize,
    }
    let mut h_blocks: Vec<HBlock> = Vec::new();
    let mut offset = g_cols;
    for (j, k) in c.active_pairs() {
        for gen in c.ideal_for(j, k).generators() {
            let deg = gen.total_degree().unwrap_or(0);
            if deg > d {
                // Multiplier forced to zero at this slice.
                continue;
            }
            let monos = monomials_up_to_degree(nvars, d - deg);
            let len = monos.len();
            h_blocks.push(HBlock {
                pair: (j, k),
                gen: gen.clone(),
                monos,
                offset,
            });
            offset += len;
        }
    }
    let total_cols = offset;

    // One equation per (active pair, monomial of degree ≤ d):
    // coefficient of g_j − g_k − Σ h·f must vanish.
    let pairs = c.active_pairs();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (j, k) in &pairs {
        for m_idx in 0..basis.len() {
            let mut row = vec![Rational::zero(); total_cols];
            row[(j - 1) * nmono + m_idx] = Rational::one();
            row[(k - 1) * nmono + m_idx] -= Rational::one();
            rows.push(row);
        }
        for block in h_blocks.iter().filter(|b| b.pair == (*j, *k)) {
            for (u_idx, u) in block.monos.iter().enumerate() {
                for (gm, gc) in block.gen.terms() {
                    let prod = u.mul(gm);
                    let m_idx = index[prod.exps()];
                    let row = rows.len() - basis.len() + m_idx;
                    rows[row][block.offset + u_idx] -= gc;
                }
            }
        }
    }

    // Null space, projected onto the g-block.
    let kernel = linalg::null_space(&rows);
    if kernel.is_empty() {
        return Ok(0);
    }
    let projected: Vec<Vec<Rational>> = kernel
        .iter()
        .map(|v| v[..g_cols].to_vec())
        .collect();
    Ok(linalg::rank(&projected))
}

/// Dimension of the span of bounded-degree multiples of the given module
/// generators: Σ u·g with deg(u·g) ≤ d, by exact Gaussian elimination.
pub fn bounded_slice_dim_span(module: &Submodule, d: u32) -> Result<usize> {
    let ring = module.ring();
    if ring.n_params() != 0 {
        return Err(Error::Unsupported(
            "bounded slices need a parameter-free ring".into(),
        ));
    }
    let nvars = ring.nvars();
    let basis = monomials_up_to_degree(nvars, d);
    let index: BTreeMap<&[u32], usize> =
        basis.iter().enumerate().map(|(i, m)| (m.exps(), i)).collect();
    let nmono = basis.len();
    let rank = module.rank();
    let mut vectors: Vec<Vec<Rational>> = Vec::new();
    for g in module.generators() {
        let gdeg = g.total_degree().unwrap_or(0);
        if gdeg > d {
            continue;
        }
        for u in monomials_up_to_degree(nvars, d - gdeg) {
            let mut vec = vec![Rational::zero(); rank * nmono];
            for (comp, entry) in g.entries().iter().enumerate() {
                for (m, c) in entry.terms() {
                    let prod = u.mul(m);
                    vec[comp * nmono + index[prod.exps()]] = c.clone();
                }
            }
            vectors.push(vec);
        }
    }
    Ok(linalg::rank(&vectors))
}

/// Whether kernels commute with homogenization: the kernel of the
/// homogenized conditions must equal the z_h-saturated homogenization of the
/// kernel, as graded modules.
pub fn homogenized_conditions_commute(c: &DifferenceConditions) -> Result<bool> {
    let lhs = crate::quasispline::spline_kernel(&homogenize_conditions(c)?)?;
    let affine = crate::quasispline::spline_kernel(c)?;
    let rhs = homogenize_module(affine.module())?;
    lhs.module().same_module(&rhs)
}
