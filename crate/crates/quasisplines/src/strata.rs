//! Degeneracy-locus rank analysis of the degree-d difference map.
//!
//! For homogeneous conditions over a polynomial ring, the degree-d slice of
//! the difference map R^s → ⊕_jk R/I_jk is a finite matrix over the base
//! (constants, or polynomials in the single family parameter). Its exact
//! rank at a parameter value determines the spline-space dimension there by
//! rank-nullity, and rank jumps across a grid expose the strata on which
//! the Hilbert function changes.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::UniPoly;
use crate::poly::monomial::{monomials_of_exact_degree, Monomial};
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;
use crate::quasispline::DifferenceConditions;

/// The degree-d matrix of the difference map. Rows are labeled by standard
/// monomials of the degree-d slices of the quotients R/I_jk, columns by
/// (component, monomial) pairs of R^s; entries are polynomials in the family
/// parameter (constants when there is none).
#[derive(Debug, Clone)]
pub struct DeltaMatrix {
    degree: u32,
    /// Active pairs (j, k), 1-based, ascending.
    pairs: Vec<(usize, usize)>,
    /// (pair index, standard monomial) per row.
    row_labels: Vec<(usize, Monomial)>,
    /// (component 0-based, monomial) per column.
    col_labels: Vec<(usize, Monomial)>,
    entries: Vec<Vec<UniPoly>>,
    param: Option<String>,
}

impl DeltaMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[(usize, Monomial)] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[(usize, Monomial)] {
        &self.col_labels
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn entries(&self) -> &[Vec<UniPoly>] {
        &self.entries
    }

    pub fn param(&self) -> Option<&str> {
        self.param.as_deref()
    }

    /// True when no entry involves the parameter.
    pub fn is_constant(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(|e| e.degree().unwrap_or(0) == 0))
    }

    /// The matrix with the parameter fixed to a rational value.
    pub fn evaluate(&self, value: &Rational) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.evaluate(value)).collect())
            .collect()
    }
}

/// Geometric monomials of exact degree d, padded with zero parameter
/// exponents, listed in descending ring order.
fn geo_monomials(ring: &Arc<PolyRing>, d: u32) -> Vec<Monomial> {
    let n_geo = ring.n_geometric();
    let n = ring.nvars();
    let mut monos: Vec<Monomial> = monomials_of_exact_degree(n_geo, d)
        .into_iter()
        .map(|m| {
            let mut exps = m.exps().to_vec();
            exps.resize(n, 0);
            Monomial::new(exps)
        })
        .collect();
    monos.sort_by(|a, b| ring.cmp_monomials(b, a));
    monos
}

fn is_param_free(ring: &PolyRing, m: &Monomial) -> bool {
    let n_geo = ring.n_geometric();
    m.exps()[n_geo..].iter().all(|e| *e == 0)
}

/// Builds the degree-d matrix of the difference map for homogeneous
/// conditions. At most one base parameter is supported, and every reduced
/// basis must have parameter-free leading monomials (normal forms are then
/// linear over the base, so the matrix is well defined over it).
pub fn delta_matrix(conditions: &DifferenceConditions, d: u32) -> Result<DeltaMatrix> {
    let ring = conditions.ring();
    if ring.n_params() > 1 {
        return Err(Error::Unsupported(
            "delta matrices support at most one parameter".into(),
        ));
    }
    if !conditions.is_geo_homogeneous() {
        return Err(Error::NonHomogeneous(
            "delta matrices need homogeneous conditions".into(),
        ));
    }
    let param = ring.param_names().first().cloned();
    let param_idx = ring.nvars().checked_sub(ring.n_params()).filter(|_| param.is_some());
    let s = conditions.strands();
    let pairs = conditions.active_pairs();
    let col_monos = geo_monomials(ring, d);

    let col_labels: Vec<(usize, Monomial)> = (0..s)
        .flat_map(|i| col_monos.iter().map(move |m| (i, m.clone())))
        .collect();

    let mut row_labels: Vec<(usize, Monomial)> = Vec::new();
    let mut row_index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    for (p_idx, (j, k)) in pairs.iter().enumerate() {
        let ideal = conditions.ideal_for(*j, *k);
        let gb = ideal.groebner_basis();
        for g in &gb {
            let lm = g.leading_monomial().expect("reduced basis is nonzero");
            if !is_param_free(ring, lm) {
                return Err(Error::Unsupported(format!(
                    "leading monomial of {g} involves the parameter; \
                     the quotient is not free over the base"
                )));
            }
        }
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        for m in &col_monos {
            if !leads.iter().any(|l| l.divides(m)) {
                row_index.insert((p_idx, m.exps().to_vec()), row_labels.len());
                row_labels.push((p_idx, m.clone()));
            }
        }
    }

    let mut entries = vec![vec![UniPoly::zero(); col_labels.len()]; row_labels.len()];
    // Normal forms of the column monomials, one ideal at a time.
    for (p_idx, (j, k)) in pairs.iter().enumerate() {
        let ideal = conditions.ideal_for(*j, *k);
        for (u_pos, u) in col_monos.iter().enumerate() {
            let nf = ideal.normal_form(&Polynomial::monomial(
                ring,
                u.clone(),
                Rational::from_integer(1.into()),
            ))?;
            if nf.is_zero() {
                continue;
            }
            for (m, c) in nf.terms() {
                // Split the term into its geometric part and parameter power.
                let mut geo = m.exps().to_vec();
                let mut ppow = 0u32;
                if let Some(pi) = param_idx {
                    ppow = geo[pi];
                    geo[pi] = 0;
                }
                let row = *row_index
                    .get(&(p_idx, geo))
                    .expect("normal form terms are standard");
                let contribution = UniPoly::term(c.clone(), ppow as usize);
                for (i, sign) in [(j - 1, 1i32), (k - 1, -1i32)] {
                    let col = i * col_monos.len() + u_pos;
                    let signed = if sign > 0 {
                        contribution.clone()
                    } else {
                        contribution.neg()
                    };
                    entries[row][col] = entries[row][col].add(&signed);
                }
            }
        }
    }

    Ok(DeltaMatrix {
        degree: d,
        pairs,
        row_labels,
        col_labels,
        entries,
        param,
    })
}

/// Fraction-free Gaussian elimination (Bareiss) over univariate rational
/// polynomials; constants behave as plain rationals. Returns the rank.
fn bareiss_rank(mut mat: Vec<Vec<UniPoly>>) -> usize {
    let rows = mat.len();
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut prev = UniPoly::constant(Rational::from_integer(1.into()));
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pr) = (row..rows).find(|r| !mat[*r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        for r2 in row + 1..rows {
            for c2 in col + 1..cols {
                let num = mat[row][col]
                    .mul(&mat[r2][c2])
                    .sub(&mat[r2][col].mul(&mat[row][c2]));
                mat[r2][c2] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            mat[r2][col] = UniPoly::zero();
        }
        prev = mat[row][col].clone();
        row += 1;
    }
    row
}

/// Exact rank of a parameter-free matrix.
pub fn rank_exact(matrix: &DeltaMatrix) -> Result<usize> {
    if !matrix.is_constant() {
        return Err(Error::Invalid(
            "matrix entries involve the parameter; use the generic rank".into(),
        ));
    }
    Ok(bareiss_rank(matrix.entries.clone()))
}

/// Rank of a rational matrix by fraction-free elimination.
pub fn rank_rational(mat: &[Vec<Rational>]) -> usize {
    let lifted: Vec<Vec<UniPoly>> = mat
        .iter()
        .map(|row| row.iter().map(|c| UniPoly::constant(c.clone())).collect())
        .collect();
    bareiss_rank(lifted)
}

/// Rank over the fraction field of the parameter, treating it symbolically.
pub fn generic_rank(matrix: &DeltaMatrix) -> usize {
    bareiss_rank(matrix.entries.clone())
}

/// Rank of the matrix at one parameter value.
pub fn rank_at(matrix: &DeltaMatrix, value: &Rational) -> usize {
    rank_rational(&matrix.evaluate(value))
}

/// The degree-d spline-space dimension s·dim R_d − rank Δ(d); the generic
/// rank is used when the family has a parameter.
pub fn spline_dimension(conditions: &DifferenceConditions, d: u32) -> Result<usize> {
    let matrix = delta_matrix(conditions, d)?;
    let rank = if conditions.ring().n_params() == 0 {
        rank_exact(&matrix)?
    } else {
        generic_rank(&matrix)
    };
    Ok(matrix.cols() - rank)
}

/// Ranks and dimensions of one grid point across the degree range.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PointResult {
    pub value: String,
    pub per_degree: Vec<DegreeResult>,
    pub stratum: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct DegreeResult {
    pub degree: u32,
    pub rank: usize,
    pub spline_dim: usize,
}

/// Grid points grouped by equal dimension vectors.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Stratum {
    pub id: usize,
    pub values: Vec<String>,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SweepResult {
    pub degrees: Vec<u32>,
    pub points: Vec<PointResult>,
    pub strata: Vec<Stratum>,
    pub generic: Vec<DegreeResult>,
}

/// Evaluates ranks and spline dimensions over a parameter grid and a degree
/// range, and partitions the grid by equal dimension vectors. Grid points
/// are independent work units evaluated in parallel; results are merged in
/// grid order.
pub fn sweep(
    conditions: &DifferenceConditions,
    grid: &[Rational],
    degrees: std::ops::RangeInclusive<u32>,
) -> Result<SweepResult> {
    if conditions.ring().n_params() != 1 {
        return Err(Error::Unsupported("sweeps need exactly one parameter".into()));
    }
    let degree_list: Vec<u32> = degrees.clone().collect();
    let matrices = degree_list
        .iter()
        .map(|d| delta_matrix(conditions, *d))
        .collect::<Result<Vec<_>>>()?;

    let generic: Vec<DegreeResult> = matrices
        .iter()
        .map(|m| {
            let rank = generic_rank(m);
            DegreeResult {
                degree: m.degree(),
                rank,
                spline_dim: m.cols() - rank,
            }
        })
        .collect();

    let raw: Vec<Vec<DegreeResult>> = grid
        .par_iter()
        .map(|value| {
            matrices
                .iter()
                .map(|m| {
                    let rank = rank_at(m, value);
                    DegreeResult {
                        degree: m.degree(),
                        rank,
                        spline_dim: m.cols() - rank,
                    }
                })
                .collect()
        })
        .collect();

    // Partition by equal dimension vectors, ids in grid order.
    let mut strata: Vec<Stratum> = Vec::new();
    let mut points = Vec::new();
    for (value, per_degree) in grid.iter().zip(raw) {
        let dims: Vec<usize> = per_degree.iter().map(|r| r.spline_dim).collect();
        let stratum = match strata.iter().position(|s| s.dims == dims) {
            Some(id) => {
                strata[id].values.push(value.to_string());
                id
            }
            None => {
                strata.push(Stratum {
                    id: strata.len(),
                    values: vec![value.to_string()],
                    dims: dims.clone(),
                });
                strata.len() - 1
            }
        };
        points.push(PointResult {
            value: value.to_string(),
            per_degree,
            stratum,
        });
    }

    Ok(SweepResult {
        degrees: degree_list,
        points,
        strata,
        generic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogenize::homogenize_conditions;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn pair_x2_on_p1() -> DifferenceConditions {
        let r = PolyRing::new(&["x", "z"], &[]).unwrap();
        DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x^2"])]).unwrap()
    }

    #[test]
    fn matrix_shape_for_hypersurface_pair() {
        let c = pair_x2_on_p1();
        let m = delta_matrix(&c, 1).unwrap();
        // Columns: 2 components × dim R_1 = 4; rows: standard monomials x, z.
        assert_eq!(m.cols(), 4);
        assert_eq!(m.rows(), 2);
        assert_eq!(rank_exact(&m).unwrap(), 2);
        assert_eq!(spline_dimension(&c, 1).unwrap(), 2);
    }

    #[test]
    fn no_conditions_mean_full_dimension() {
        let r = PolyRing::new(&["x", "z"], &[]).unwrap();
        let c = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["1"])]).unwrap();
        let m = delta_matrix(&c, 2).unwrap();
        assert_eq!(m.rows(), 0);
        assert_eq!(spline_dimension(&c, 2).unwrap(), 6);
    }

    #[test]
    fn degree_zero_connected_graph() {
        let c = pair_x2_on_p1();
        assert_eq!(spline_dimension(&c, 0).unwrap(), 1);
    }

    #[test]
    fn dimension_matches_hand_count() {
        // s = 2, wall x^2 on the projective line: dimension 2d for d ≥ 1.
        let c = pair_x2_on_p1();
        for d in 1..=5u32 {
            assert_eq!(spline_dimension(&c, d).unwrap(), 2 * d as usize);
        }
    }

    #[test]
    fn bareiss_matches_field_elimination() {
        let mats: Vec<Vec<Vec<Rational>>> = vec![
            vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]],
            vec![vec![q(0), q(0)], vec![q(0), q(0)]],
            vec![vec![q(2), q(4)], vec![q(1), q(2)]],
            vec![vec![q(1), q(2), q(3)], vec![q(4), q(5), q(6)], vec![q(7), q(8), q(9)]],
        ];
        for m in mats {
            assert_eq!(rank_rational(&m), crate::linalg::rank(&m));
        }
    }

    #[test]
    fn generic_rank_of_symbolic_matrices() {
        // [[z]] has generic rank 1; [[z, 1], [z, 1]] has rank 1.
        let z = UniPoly::parse("t", "t").unwrap();
        let one = UniPoly::parse("1", "t").unwrap();
        assert_eq!(bareiss_rank(vec![vec![z.clone()]]), 1);
        assert_eq!(
            bareiss_rank(vec![vec![z.clone(), one.clone()], vec![z, one]]),
            1
        );
    }

    #[test]
    fn rank_jump_in_the_moving_wall_family() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let c = DifferenceConditions::from_strings(
            &r,
            3,
            &[(1, 2, &["x"]), (2, 3, &["y"]), (1, 3, &["x + y - z"])],
        )
        .unwrap();
        let h = homogenize_conditions(&c).unwrap();
        let m = delta_matrix(&h, 2).unwrap();
        let generic = generic_rank(&m);
        let at_zero = rank_at(&m, &q(0));
        assert!(at_zero < generic, "{at_zero} vs {generic}");
        assert_eq!(rank_at(&m, &q(1)), generic);
    }

    #[test]
    fn sweep_stratifies_the_moving_wall_family() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let c = DifferenceConditions::from_strings(
            &r,
            3,
            &[(1, 2, &["x"]), (2, 3, &["y"]), (1, 3, &["x + y - z"])],
        )
        .unwrap();
        let h = homogenize_conditions(&c).unwrap();
        let grid = [q(-1), q(0), q(1)];
        let result = sweep(&h, &grid, 0..=3).unwrap();
        assert_eq!(result.points.len(), 3);
        // Ends share a stratum; the origin sits in a strictly larger one.
        assert_eq!(result.points[0].stratum, result.points[2].stratum);
        assert_ne!(result.points[0].stratum, result.points[1].stratum);
        let origin = &result.points[1];
        let ends = &result.points[0];
        assert!(origin
            .per_degree
            .iter()
            .zip(&ends.per_degree)
            .any(|(o, e)| o.spline_dim > e.spline_dim));
        // Specialization only drops rank.
        for p in &result.points {
            for (pd, g) in p.per_degree.iter().zip(&result.generic) {
                assert!(pd.rank <= g.rank);
            }
        }
        // Constant-parameter sweeps collapse to one stratum.
        let single = DifferenceConditions::from_strings(&r, 2, &[(1, 2, &["x - z*y"])]).unwrap();
        let hs = homogenize_conditions(&single).unwrap();
        let res = sweep(&hs, &[q(0), q(1)], 0..=2).unwrap();
        assert_eq!(res.strata.len(), 1);
    }
}
