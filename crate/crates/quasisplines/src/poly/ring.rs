//! Polynomial rings: named variables, a distinguished trailing block of
//! base parameters, and a monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, MonomialOrder};

/// A multivariate polynomial ring over the rationals.
///
/// Variables are listed geometric-first; the last `n_params` of them are the
/// base parameters (e.g. the `z` of a one-parameter family). The grading used
/// by homogeneous computations counts geometric variables only: parameters
/// have degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    n_params: usize,
    order: MonomialOrder,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// A ring with the given geometric variables and trailing parameters.
    ///
    /// The default order is degrevlex when there are no parameters and the
    /// block elimination order (geometric block first) otherwise, so that
    /// specialization and generic-fiber computations share one representation.
    pub fn new(geometric: &[&str], params: &[&str]) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = geometric
            .iter()
            .chain(params.iter())
            .map(|s| s.to_string())
            .collect();
        let order = if params.is_empty() {
            MonomialOrder::DegRevLex
        } else {
            MonomialOrder::Block(geometric.len())
        };
        Self::with_order(&vars, params.len(), order)
    }

    /// A ring with an explicit variable list, parameter-suffix length, and order.
    pub fn with_order(vars: &[String], n_params: usize, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if n_params > vars.len() {
            return Err(Error::Invalid("more parameters than variables".into()));
        }
        for v in vars {
            if !valid_identifier(v) {
                return Err(Error::Parse(format!("invalid variable name `{v}`")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[i + 1..].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block(split) = order {
            if split > vars.len() {
                return Err(Error::Invalid("block split beyond variable count".into()));
            }
        }
        Ok(Arc::new(PolyRing {
            vars: vars.to_vec(),
            n_params,
            order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn n_params(&self) -> usize {
        self.n_params
    }

    pub fn param_names(&self) -> &[String] {
        &self.vars[self.vars.len() - self.n_params..]
    }

    /// Number of geometric (graded) variables.
    pub fn n_geometric(&self) -> usize {
        self.vars.len() - self.n_params
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Degree in the geometric variables; parameters count zero.
    pub fn geo_degree(&self, m: &Monomial) -> u32 {
        m.degree_of_block(self.n_geometric())
    }

    pub fn is_param(&self, var: usize) -> bool {
        var >= self.n_geometric()
    }

    /// The same variables under a block elimination order whose leading block
    /// has the given length.
    pub fn with_block_order(&self, split: usize) -> Result<Arc<PolyRing>> {
        PolyRing::with_order(&self.vars, self.n_params, MonomialOrder::Block(split))
    }

    /// The ring with the listed variables removed. Relative order of the
    /// remaining variables is preserved, as is their parameter status.
    /// Returns the new ring and, for each old index, its new index.
    pub fn without_vars(&self, remove: &[usize]) -> Result<(Arc<PolyRing>, Vec<Option<usize>>)> {
        let mut map = Vec::with_capacity(self.vars.len());
        let mut kept = Vec::new();
        let mut kept_params = 0usize;
        for (i, v) in self.vars.iter().enumerate() {
            if remove.contains(&i) {
                map.push(None);
            } else {
                map.push(Some(kept.len()));
                if self.is_param(i) {
                    kept_params += 1;
                }
                kept.push(v.clone());
            }
        }
        let n_geo = kept.len() - kept_params;
        let order = match self.order {
            MonomialOrder::Lex => MonomialOrder::Lex,
            MonomialOrder::DegRevLex => MonomialOrder::DegRevLex,
            MonomialOrder::Block(_) => {
                if kept_params == 0 {
                    MonomialOrder::DegRevLex
                } else {
                    MonomialOrder::Block(n_geo)
                }
            }
        };
        let ring = PolyRing::with_order(&kept, kept_params, order)?;
        Ok((ring, map))
    }

    /// The ring extended by one geometric variable placed at the end of the
    /// geometric block (just before the parameters).
    /// Returns the new ring, the index of the new variable, and the map from
    /// old variable indices to new ones.
    pub fn with_extra_geometric_var(&self, name: &str) -> Result<(Arc<PolyRing>, usize, Vec<usize>)> {
        if self.var_index(name).is_some() {
            return Err(Error::Invalid(format!("variable `{name}` already present")));
        }
        let n_geo = self.n_geometric();
        let mut vars: Vec<String> = self.vars[..n_geo].to_vec();
        vars.push(name.to_string());
        vars.extend_from_slice(&self.vars[n_geo..]);
        let order = if self.n_params == 0 {
            MonomialOrder::DegRevLex
        } else {
            MonomialOrder::Block(n_geo + 1)
        };
        let ring = PolyRing::with_order(&vars, self.n_params, order)?;
        let map = (0..self.vars.len())
            .map(|i| if i < n_geo { i } else { i + 1 })
            .collect();
        Ok((ring, n_geo, map))
    }

    /// Same ring with one variable renamed (used when printing the
    /// homogenizing variable under a friendlier name).
    pub fn with_renamed_var(&self, old: &str, new: &str) -> Result<Arc<PolyRing>> {
        let idx = self
            .var_index(old)
            .ok_or_else(|| Error::UnknownVariable(old.to_string()))?;
        if self.var_index(new).is_some() {
            return Err(Error::Invalid(format!("variable `{new}` already present")));
        }
        let mut vars = self.vars.clone();
        vars[idx] = new.to_string();
        PolyRing::with_order(&vars, self.n_params, self.order)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let geo = self.vars[..self.n_geometric()].join(", ");
        if self.n_params == 0 {
            write!(f, "Q[{geo}]")
        } else {
            write!(f, "Q[{}][{geo}]", self.param_names().join(", "))
        }
    }
}
