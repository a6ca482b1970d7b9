//! Hilbert series, functions, and polynomials of graded quotients and
//! submodules; Gotzmann numbers by the greedy binomial expansion; and the
//! regularity bound derived from them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::module::{ModuleOrder, Submodule};
use crate::groebner::Ideal;
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Rational;
use crate::poly::ring::PolyRing;

/// A univariate polynomial with exact rational coefficients, indexed by
/// ascending power. Used for Hilbert polynomials and for matrix entries in
/// one symbolic parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_integer(n: i64) -> Self {
        UniPoly::constant(Rational::from_integer(n.into()))
    }

    /// The monomial c·t^k.
    pub fn term(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial mapped to `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        if divisor.is_zero() {
            return Err(Error::Invalid("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        if rem.len() < divisor.coeffs.len() {
            return Err(Error::Invalid("inexact polynomial division".into()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = &rem[i] / lead;
            if !c.is_zero() {
                quot[i - d] = c.clone();
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let idx = i - d + j;
                    let delta = &c * b;
                    rem[idx] -= delta;
                }
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Invalid("inexact polynomial division".into()));
        }
        Ok(UniPoly::new(quot))
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn evaluate_int(&self, t: i64) -> Rational {
        self.evaluate(&Rational::from_integer(t.into()))
    }

    /// The composition p(t + shift).
    pub fn shift_argument(&self, shift: i64) -> UniPoly {
        let mut acc = UniPoly::zero();
        // Horner in (t + shift).
        let base = UniPoly::new(vec![
            Rational::from_integer(shift.into()),
            Rational::one(),
        ]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&base).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Parses expressions like `3*t + 1` or `1/2*t^2 + 3/2*t` in the given
    /// variable name.
    pub fn parse(input: &str, var: &str) -> Result<UniPoly> {
        let ring = PolyRing::new(&[var], &[])?;
        let p = crate::poly::parse::parse_polynomial(&ring, input)?;
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            let k = m.exps()[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    fn format_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (k, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let neg = c.is_negative();
            let abs = c.abs();
            if pos == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let body = match k {
                0 => format!("{abs}"),
                1 if abs.is_one() => var.to_string(),
                1 => format!("{abs}*{var}"),
                _ if abs.is_one() => format!("{var}^{k}"),
                _ => format!("{abs}*{var}^{k}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("t"))
    }
}

/// The binomial coefficient C(t + a - c, a) as a polynomial in t.
pub fn binomial_poly(a: usize, c: i64) -> UniPoly {
    // Product over i = 1..a of (t - c + i), divided by a!.
    let mut acc = UniPoly::constant(Rational::one());
    for i in 1..=a as i64 {
        let factor = UniPoly::new(vec![
            Rational::from_integer((i - c).into()),
            Rational::one(),
        ]);
        acc = acc.mul(&factor);
    }
    let mut fact = BigInt::one();
    for i in 2..=a {
        fact *= BigInt::from(i);
    }
    acc.scale(&Rational::new(BigInt::one(), fact))
}

/// Exact binomial C(n, k) for integer n (polynomial convention: zero when
/// the falling factorial vanishes, signed for negative n).
fn binomial_int(n: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(n - i);
    }
    let mut den = BigInt::one();
    for i in 2..=k {
        den *= BigInt::from(i);
    }
    num / den
}

/// A Hilbert series numerator/(1 - t)^n with integer numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denom_power: usize,
}

impl HilbertSeries {
    pub fn new(mut numerator: Vec<BigInt>, denom_power: usize) -> Self {
        while numerator.last().map(|c| c.is_zero()).unwrap_or(false) {
            numerator.pop();
        }
        HilbertSeries {
            numerator,
            denom_power,
        }
    }

    pub fn zero(denom_power: usize) -> Self {
        HilbertSeries::new(Vec::new(), denom_power)
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denom_power(&self) -> usize {
        self.denom_power
    }

    pub fn add(&self, other: &HilbertSeries) -> Result<HilbertSeries> {
        if self.denom_power != other.denom_power {
            return Err(Error::ShapeMismatch("series denominators differ".into()));
        }
        let n = self.numerator.len().max(other.numerator.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.numerator.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.numerator.iter().enumerate() {
            out[i] += c;
        }
        Ok(HilbertSeries::new(out, self.denom_power))
    }

    pub fn sub(&self, other: &HilbertSeries) -> Result<HilbertSeries> {
        if self.denom_power != other.denom_power {
            return Err(Error::ShapeMismatch("series denominators differ".into()));
        }
        let n = self.numerator.len().max(other.numerator.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.numerator.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.numerator.iter().enumerate() {
            out[i] -= c;
        }
        Ok(HilbertSeries::new(out, self.denom_power))
    }

    /// Multiplies by t^k (a degree shift).
    pub fn shift(&self, k: usize) -> HilbertSeries {
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.numerator.iter().cloned());
        HilbertSeries::new(out, self.denom_power)
    }

    /// Rewrites with a larger denominator power (multiplying the numerator by
    /// (1 - t)^(target - current)).
    pub fn raise_denominator(&self, target: usize) -> Result<HilbertSeries> {
        if target < self.denom_power {
            return Err(Error::ShapeMismatch("cannot lower denominator".into()));
        }
        let mut num = self.numerator.clone();
        for _ in self.denom_power..target {
            // Multiply by (1 - t).
            let mut out = vec![BigInt::zero(); num.len() + 1];
            for (i, c) in num.iter().enumerate() {
                out[i] += c;
                out[i + 1] -= c;
            }
            while out.last().map(|c| c.is_zero()).unwrap_or(false) {
                out.pop();
            }
            num = out;
        }
        Ok(HilbertSeries::new(num, target))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = UniPoly::new(
            self.numerator
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        if self.denom_power == 0 {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/(1 - t)^{}", self.denom_power)
        }
    }
}

/// Coefficient of t^d in the series: the dimension of the degree-d piece.
pub fn hilbert_function(series: &HilbertSeries, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let n = series.denom_power;
    let mut acc = BigInt::zero();
    for (j, c) in series.numerator.iter().enumerate() {
        let j = j as i64;
        if n == 0 {
            if j == d {
                acc += c;
            }
        } else if d - j >= 0 {
            acc += c * binomial_int(d - j + n as i64 - 1, n - 1);
        }
    }
    usize::try_from(acc).expect("Hilbert function values are non-negative")
}

/// The Hilbert polynomial of the series together with its regularity index:
/// the first degree from which the series coefficients agree with the
/// polynomial.
pub fn hilbert_polynomial(series: &HilbertSeries) -> (UniPoly, i64) {
    let n = series.denom_power;
    let mut p = UniPoly::zero();
    if n > 0 {
        for (j, c) in series.numerator.iter().enumerate() {
            // Coefficient of t^d contributed by c·t^j/(1-t)^n is
            // c·C(d - j + n - 1, n - 1).
            let term = binomial_poly(n - 1, j as i64);
            p = p.add(&term.scale(&Rational::from_integer(c.clone())));
        }
    }
    // Scan downward from a degree where agreement is guaranteed.
    let top = series.numerator.len() as i64 + 1;
    let mut index = top;
    let mut d = top;
    loop {
        let hf = Rational::from_integer(BigInt::from(hilbert_function(series, d)));
        if p.evaluate_int(d) == hf {
            index = d;
            if d < -(series.numerator.len() as i64) - 1 {
                // Series and polynomial agree on all sampled degrees below
                // the numerator range; they agree everywhere below as well.
                break;
            }
            d -= 1;
        } else {
            break;
        }
    }
    (p, index)
}

/// Where the Hilbert data comes from: a quotient by a monomial ideal per
/// component, described by the leading monomials of a reduced basis.
fn monomial_quotient_series(ring: &PolyRing, lead: &[Monomial]) -> HilbertSeries {
    let n = ring.nvars();
    let minimal = minimalize(lead.to_vec());
    let num = numerator_of_quotient(n, &minimal);
    HilbertSeries::new(num, n)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of HS(R/I) · (1 - t)^n for a monomial ideal given by minimal
/// generators, via the splitting 0 → R/(I:x)(−1) → R/I → R/(I+(x)) → 0 on
/// the lowest-index pivot variable.
fn numerator_of_quotient(nvars: usize, gens: &[Monomial]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    // Base case: generators in pairwise disjoint variables (in particular
    // pure powers) give a product of (1 - t^deg).
    if gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime(h)))
    {
        let mut num = vec![BigInt::one()];
        for g in gens {
            let d = g.degree() as usize;
            let mut out = vec![BigInt::zero(); num.len() + d];
            for (i, c) in num.iter().enumerate() {
                out[i] += c;
                out[i + d] -= c;
            }
            num = out;
        }
        while num.last().map(|c| c.is_zero()).unwrap_or(false) {
            num.pop();
        }
        return num;
    }
    // Pivot: lowest-index variable appearing in a minimal generator.
    let pivot = (0..nvars)
        .find(|v| gens.iter().any(|g| g.exps()[*v] > 0))
        .expect("nonempty generators use some variable");

    // I : x_pivot.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exps()[pivot] > 0 {
                let mut e = g.exps().to_vec();
                e[pivot] -= 1;
                Monomial::new(e)
            } else {
                g.clone()
            }
        })
        .collect();
    let colon = minimalize(colon);

    // I + (x_pivot): the pivot variable plus the pivot-free generators.
    let mut plus: Vec<Monomial> = vec![Monomial::var_pow(nvars, pivot, 1)];
    plus.extend(gens.iter().filter(|g| g.exps()[pivot] == 0).cloned());
    let plus = minimalize(plus);

    let colon_num = numerator_of_quotient(nvars, &colon);
    let plus_num = numerator_of_quotient(nvars, &plus);

    // numerator(I) = t · numerator(I:x) + numerator(I + (x)).
    let mut out = vec![BigInt::zero(); (colon_num.len() + 1).max(plus_num.len())];
    for (i, c) in colon_num.iter().enumerate() {
        out[i + 1] += c;
    }
    for (i, c) in plus_num.iter().enumerate() {
        out[i] += c;
    }
    while out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

fn require_graded_ring(ring: &PolyRing) -> Result<()> {
    if ring.n_params() != 0 {
        return Err(Error::Unsupported(
            "Hilbert data requires a parameter-free graded ring".into(),
        ));
    }
    Ok(())
}

/// Hilbert series of the quotient R/I. Requires homogeneous generators.
pub fn series_of_quotient_ideal(ideal: &Ideal) -> Result<HilbertSeries> {
    require_graded_ring(ideal.ring())?;
    for g in ideal.generators() {
        if !g.is_geo_homogeneous() {
            return Err(Error::NonHomogeneous(format!("generator {g}")));
        }
    }
    let lead: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    Ok(monomial_quotient_series(ideal.ring(), &lead))
}

/// Hilbert series of the ideal I itself as a graded module.
pub fn series_of_ideal(ideal: &Ideal) -> Result<HilbertSeries> {
    let ring_series = series_of_quotient_ideal(&Ideal::zero(ideal.ring()))?;
    let quot = series_of_quotient_ideal(ideal)?;
    ring_series.sub(&quot)
}

/// Validates homogeneity of a module's generators under componentwise shifts.
fn require_shifted_homogeneous(module: &Submodule, shifts: &[i64]) -> Result<()> {
    if shifts.len() != module.rank() {
        return Err(Error::ShapeMismatch(
            "one shift per module component is required".into(),
        ));
    }
    for g in module.generators() {
        let mut common: Option<i64> = None;
        for (i, e) in g.entries().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !e.is_geo_homogeneous() {
                return Err(Error::NonHomogeneous(format!("module entry {e}")));
            }
            let d = e.geo_degree().unwrap() as i64 + shifts[i];
            match common {
                None => common = Some(d),
                Some(c) if c == d => {}
                Some(_) => {
                    return Err(Error::NonHomogeneous(format!("module generator {g}")))
                }
            }
        }
    }
    Ok(())
}

/// Hilbert series of the quotient (⊕_i R(−shift_i)) / M.
pub fn series_of_quotient_module(module: &Submodule, shifts: &[i64]) -> Result<HilbertSeries> {
    require_graded_ring(module.ring())?;
    require_shifted_homogeneous(module, shifts)?;
    let ring = module.ring();
    let n = ring.nvars();
    // Split the leading-term module per component.
    let mut acc = HilbertSeries::zero(n);
    for (i, shift) in shifts.iter().enumerate() {
        let lead: Vec<Monomial> = module
            .groebner_basis()
            .iter()
            .filter_map(|g| {
                let (c, m, _) = g.leading(module.order())?;
                (c == i).then(|| m.clone())
            })
            .collect();
        let comp = monomial_quotient_series(ring, &lead);
        let shifted = if *shift >= 0 {
            comp.shift(*shift as usize)
        } else {
            return Err(Error::Unsupported("negative shifts".into()));
        };
        acc = acc.add(&shifted)?;
    }
    Ok(acc)
}

/// Hilbert series of the submodule M ⊆ ⊕_i R(−shift_i) itself.
pub fn series_of_module(module: &Submodule, shifts: &[i64]) -> Result<HilbertSeries> {
    let free = series_of_free(module.ring(), shifts)?;
    let quot = series_of_quotient_module(module, shifts)?;
    free.sub(&quot)
}

/// Hilbert series of the free module ⊕_i R(−shift_i).
pub fn series_of_free(ring: &Arc<PolyRing>, shifts: &[i64]) -> Result<HilbertSeries> {
    require_graded_ring(ring)?;
    let n = ring.nvars();
    let mut acc = HilbertSeries::zero(n);
    let one = HilbertSeries::new(vec![BigInt::one()], n);
    for shift in shifts {
        if *shift < 0 {
            return Err(Error::Unsupported("negative shifts".into()));
        }
        acc = acc.add(&one.shift(*shift as usize))?;
    }
    Ok(acc)
}

/// The greedy binomial expansion of a Hilbert polynomial:
/// p(t) = C(t+a_1, a_1) + C(t+a_2-1, a_2) + … + C(t+a_m-(m-1), a_m) with
/// weakly decreasing a_i. Returns (m, a). Errors when no such expansion
/// exists, i.e. the input is not the Hilbert polynomial of a subscheme.
pub fn gotzmann_expansion(p: &UniPoly) -> Result<(usize, Vec<usize>)> {
    let mut rem = p.clone();
    let mut exponents: Vec<usize> = Vec::new();
    let mut step: i64 = 0;
    const CAP: i64 = 1_000_000;
    while !rem.is_zero() {
        if step > CAP {
            return Err(Error::NotHilbertPolynomial(
                "expansion does not terminate".into(),
            ));
        }
        let a = rem.degree().unwrap_or(0);
        let lc = rem.leading_coeff().unwrap();
        if lc.is_negative() {
            return Err(Error::NotHilbertPolynomial(format!(
                "negative remainder {rem}"
            )));
        }
        if let Some(prev) = exponents.last() {
            if a > *prev {
                return Err(Error::NotHilbertPolynomial(
                    "exponents fail to decrease".into(),
                ));
            }
        }
        let term = binomial_poly(a, step);
        let next = rem.sub(&term);
        if next.degree().unwrap_or(0) > a && !next.is_zero() {
            return Err(Error::NotHilbertPolynomial("degree grew".into()));
        }
        rem = next;
        exponents.push(a);
        step += 1;
    }
    Ok((exponents.len(), exponents))
}

/// The Gotzmann number: the term count of the greedy expansion.
pub fn gotzmann_number(p: &UniPoly) -> Result<usize> {
    Ok(gotzmann_expansion(p)?.0)
}

/// Rebuilds the polynomial from an expansion; inverse of
/// `gotzmann_expansion` on valid inputs.
pub fn sum_of_expansion(exponents: &[usize]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, a) in exponents.iter().enumerate() {
        acc = acc.add(&binomial_poly(*a, i as i64));
    }
    acc
}

/// The Hilbert polynomials of the thickened ambient N and its subscheme L:
/// p_N(t) = p_B(t) + s·p_B(t−1) and p_L(t) = p_B(t) + p_G(t−1).
pub fn nl_polynomials_from_g(p_b: &UniPoly, p_g: &UniPoly, s: usize) -> (UniPoly, UniPoly) {
    let pb_prev = p_b.shift_argument(-1);
    let p_n = p_b.add(&pb_prev.scale(&Rational::from_integer(BigInt::from(s))));
    let p_l = p_b.add(&p_g.shift_argument(-1));
    (p_n, p_l)
}

/// Same, with the kernel polynomial instead: p_G = s·p_B − p_S.
pub fn nl_polynomials_from_s(p_b: &UniPoly, p_s: &UniPoly, s: usize) -> (UniPoly, UniPoly) {
    let p_g = p_b.scale(&Rational::from_integer(BigInt::from(s))).sub(p_s);
    nl_polynomials_from_g(p_b, &p_g, s)
}

/// Twist degrees at or beyond this bound have flat direct images with rank
/// equal to the Hilbert polynomial: the maximum of the Gotzmann numbers of
/// p_N and p_L.
pub fn regularity_bound(p_b: &UniPoly, p_g: &UniPoly, s: usize) -> Result<usize> {
    let (p_n, p_l) = nl_polynomials_from_g(p_b, p_g, s);
    Ok(gotzmann_number(&p_n)?.max(gotzmann_number(&p_l)?))
}

/// Exact check of the cokernel Hilbert-polynomial identity
/// p_G = C(s,2)·p_Y − Σ p_{I_jk} − p_H.
pub fn cokernel_identity_check(
    p_y: &UniPoly,
    p_ideals: &[UniPoly],
    p_h: &UniPoly,
    p_g: &UniPoly,
    s: usize,
) -> bool {
    let pairs = (s * s.saturating_sub(1)) / 2;
    let mut rhs = p_y.scale(&Rational::from_integer(BigInt::from(pairs)));
    for p in p_ideals {
        rhs = rhs.sub(p);
    }
    rhs = rhs.sub(p_h);
    rhs == *p_g
}

/// Presentation of the cokernel H of the difference map's image inside
/// ⊕_jk R/I_jk, as a quotient of the free module on the active pairs.
pub fn delta_cokernel_presentation(
    conditions: &crate::quasispline::DifferenceConditions,
) -> Result<(usize, Submodule)> {
    let ring = conditions.ring();
    let pairs = conditions.active_pairs();
    let t = pairs.len();
    let s = conditions.strands();
    let mut gens = Vec::new();
    // Relations from the ideals, one block per pair...
    for (row, (j, k)) in pairs.iter().enumerate() {
        for g in conditions.ideal_for(*j, *k).generators() {
            let mut entries = vec![crate::poly::polynomial::Polynomial::zero(ring); t];
            entries[row] = g.clone();
            gens.push(crate::groebner::module::FreeModuleElement::new(ring, entries)?);
        }
    }
    // ...and the images of the standard basis vectors under the difference map.
    for i in 1..=s {
        let entries: Vec<crate::poly::polynomial::Polynomial> = pairs
            .iter()
            .map(|(j, k)| {
                if i == *j {
                    crate::poly::polynomial::Polynomial::one(ring)
                } else if i == *k {
                    -&crate::poly::polynomial::Polynomial::one(ring)
                } else {
                    crate::poly::polynomial::Polynomial::zero(ring)
                }
            })
            .collect();
        gens.push(crate::groebner::module::FreeModuleElement::new(ring, entries)?);
    }
    Ok((
        t,
        Submodule::with_order(ring, t, gens, ModuleOrder::PositionOverTerm)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::PolyRing;

    fn up(s: &str) -> UniPoly {
        UniPoly::parse(s, "t").unwrap()
    }

    #[test]
    fn series_of_double_point_quotient() {
        // Q[x, y]/(x^2): numerator 1 - t^2, function 1, 2, 2, 2, ...
        let r = PolyRing::new(&["x", "y"], &[]).unwrap();
        let i = Ideal::from_strings(&r, &["x^2"]).unwrap();
        let s = series_of_quotient_ideal(&i).unwrap();
        assert_eq!(s.numerator(), &[BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
        assert_eq!(s.denom_power(), 2);
        let values: Vec<usize> = (0..6).map(|d| hilbert_function(&s, d)).collect();
        assert_eq!(values, vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(hilbert_function(&s, -1), 0);
    }

    #[test]
    fn series_of_polynomial_ring_and_free_module() {
        let r = PolyRing::new(&["x", "z"], &[]).unwrap();
        let i = Ideal::zero(&r);
        let s = series_of_quotient_ideal(&i).unwrap();
        assert_eq!(s.numerator(), &[BigInt::from(1)]);
        assert_eq!(hilbert_function(&s, 5), 6);

        let f = series_of_free(&r, &[1, 1]).unwrap();
        assert_eq!(f.numerator(), &[BigInt::from(0), BigInt::from(2)]);
        assert_eq!(hilbert_function(&f, 1), 2);
        assert_eq!(hilbert_function(&f, 0), 0);
    }

    #[test]
    fn polynomials_and_regularity_indices() {
        let r = PolyRing::new(&["x", "z"], &[]).unwrap();
        let (p, idx) = hilbert_polynomial(&series_of_quotient_ideal(&Ideal::zero(&r)).unwrap());
        assert_eq!(p, up("t + 1"));
        assert!(idx <= 0);

        let i = Ideal::from_strings(&r, &["x^2"]).unwrap();
        let (p, idx) = hilbert_polynomial(&series_of_quotient_ideal(&i).unwrap());
        assert_eq!(p, up("2"));
        assert_eq!(idx, 1);

        let r3 = PolyRing::new(&["x", "y", "z"], &[]).unwrap();
        let (p, _) = hilbert_polynomial(&series_of_quotient_ideal(&Ideal::zero(&r3)).unwrap());
        assert_eq!(p, up("1/2*t^2 + 3/2*t + 1"));
    }

    #[test]
    fn module_series_with_diagonal() {
        // ⟨(1,1),(0,x^2)⟩ in Q[x, z]^2: quotient has dimensions 0 in high
        // degrees... the module itself has dim 2d in degree d ≥ 1 over P^1.
        let r = PolyRing::new(&["x", "z"], &[]).unwrap();
        let m = Submodule::new(
            &r,
            2,
            vec![
                crate::groebner::module::element_from_strings(&r, &["1", "1"]).unwrap(),
                crate::groebner::module::element_from_strings(&r, &["0", "x^2"]).unwrap(),
            ],
        )
        .unwrap();
        let s = series_of_module(&m, &[0, 0]).unwrap();
        assert_eq!(hilbert_function(&s, 0), 1);
        for d in 1..6 {
            assert_eq!(hilbert_function(&s, d), 2 * d as usize);
        }
    }

    #[test]
    fn gotzmann_worked_expansions() {
        assert_eq!(gotzmann_number(&up("1")).unwrap(), 1);
        let (m, a) = gotzmann_expansion(&up("3*t + 1")).unwrap();
        assert_eq!(m, 4);
        assert_eq!(a, vec![1, 1, 1, 0]);
        let (m, a) = gotzmann_expansion(&up("t + 3")).unwrap();
        assert_eq!(m, 3);
        assert_eq!(a, vec![1, 0, 0]);
        assert_eq!(gotzmann_number(&up("2*t + 1")).unwrap(), 2);
        // Re-summing reproduces the input.
        assert_eq!(sum_of_expansion(&[1, 1, 1, 0]), up("3*t + 1"));
        // Not Hilbert polynomials of subschemes.
        assert!(gotzmann_number(&up("t - 5")).is_err());
        assert!(gotzmann_number(&UniPoly::parse("-1", "t").unwrap()).is_err());
    }

    #[test]
    fn nl_identities() {
        let (pn, pl) = nl_polynomials_from_g(&up("t + 1"), &up("2"), 2);
        assert_eq!(pn, up("3*t + 1"));
        assert_eq!(pl, up("t + 3"));
        // p_S route: p_S = s·p_B − p_G = 2t.
        let (pn2, pl2) = nl_polynomials_from_s(&up("t + 1"), &up("2*t"), 2);
        assert_eq!(pn2, pn);
        assert_eq!(pl2, pl);
        // Vanishing p_G leaves p_L = p_B.
        let (_, pl3) = nl_polynomials_from_g(&up("t + 1"), &UniPoly::zero(), 2);
        assert_eq!(pl3, up("t + 1"));
    }

    #[test]
    fn regularity_bound_examples() {
        assert_eq!(regularity_bound(&up("t + 1"), &up("2"), 2).unwrap(), 4);
        assert_eq!(regularity_bound(&up("1"), &UniPoly::zero(), 2).unwrap(), 3);
        assert_eq!(regularity_bound(&up("t + 1"), &UniPoly::zero(), 1).unwrap(), 2);
    }

    #[test]
    fn cokernel_identity_is_strict() {
        let zero = UniPoly::zero();
        assert!(cokernel_identity_check(&zero, &[], &zero, &zero, 2));
        let p_y = up("t + 1");
        let p_i = up("t - 1");
        let p_g = up("2");
        assert!(cokernel_identity_check(&p_y, &[p_i.clone()], &zero, &p_g, 2));
        let off = up("3");
        assert!(!cokernel_identity_check(&p_y, &[p_i], &zero, &off, 2));
    }

    #[test]
    fn unipoly_parse_print_round_trip() {
        for s in ["0", "3*t + 1", "1/2*t^2 + 3/2*t + 1", "t^3 - t"] {
            let p = up(s);
            assert_eq!(UniPoly::parse(&p.to_string(), "t").unwrap(), p);
        }
    }

    #[test]
    fn shift_argument_is_composition() {
        let p = up("t^2 + t + 1");
        let q = p.shift_argument(-1);
        for t in -3..4 {
            assert_eq!(q.evaluate_int(t), p.evaluate_int(t - 1));
        }
    }
}
