//! Weighted Hilbert series of quotients by monomial and binomial ideals,
//! together with the invariants read off them.

mod poly;

pub use poly::UniPoly;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gb::{buchberger, initial_ideal, BinomialIdeal};
use crate::ring::{weighted_degree_unchecked, ExponentVector, Grading, MonomialOrder};

/// `numerator / ∏ (1 - t^{d_i})`.
#[derive(Clone)]
pub struct HilbertSeries {
    numerator: UniPoly,
    weights: Grading,
}

impl HilbertSeries {
    pub fn new(numerator: UniPoly, weights: Grading) -> Self {
        HilbertSeries { numerator, weights }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn weights(&self) -> &Grading {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator(&self) -> UniPoly {
        self.weights.weights().iter().fold(UniPoly::one(), |acc, &d| acc * UniPoly::one_minus_power(d as usize))
    }

    /// Coefficients of the power series up to `t^n`.
    pub fn expand(&self, n: usize) -> Result<Vec<BigInt>> {
        let mut c: Vec<BigInt> = (0..=n).map(|i| self.numerator.coeff(i)).collect();
        for &d in self.weights.weights() {
            let d = d as usize;
            for k in d..=n {
                let prev = c[k - d].clone();
                c[k] += prev;
            }
        }
        if let Some(k) = c.iter().position(Signed::is_negative) {
            return Err(Error::Precondition(format!("series has a negative coefficient at t^{k}")));
        }
        Ok(c)
    }

    /// Degree as a rational function: `deg f - Σ d_i`.
    pub fn a_invariant(&self) -> Result<i64> {
        let deg = self.numerator.degree().ok_or_else(|| Error::invalid("the zero series has no a-invariant"))?;
        Ok(deg as i64 - self.weights.sum() as i64)
    }

    /// Order of the pole at `t = 1`, i.e. the Krull dimension.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::invalid("the zero series has no dimension"));
        }
        Ok(self.weights.len() - self.numerator.root_multiplicity_at_one())
    }

    /// Numerator and denominator with their primitive gcd cancelled.
    pub fn reduced(&self) -> (UniPoly, UniPoly) {
        let den = self.denominator();
        if self.numerator.is_zero() {
            return (UniPoly::zero(), UniPoly::one());
        }
        let g = self.numerator.gcd(&den);
        let mut num = self.numerator.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        (num, den)
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &HilbertSeries) -> bool {
        &self.numerator * &other.denominator() == &other.numerator * &self.denominator()
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/", self.numerator)?;
        let parts: Vec<String> = self
            .weights
            .weights()
            .iter()
            .map(|&d| if d == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{d})") })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSeries({self})")
    }
}

/// Minimal generators, sorted.
fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| (g.total_degree(), g.clone()));
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

struct Numerators<'a> {
    weights: &'a [u32],
    memo: HashMap<Vec<ExponentVector>, UniPoly>,
}

impl Numerators<'_> {
    fn degree(&self, m: &ExponentVector) -> usize {
        weighted_degree_unchecked(m.entries(), self.weights) as usize
    }

    /// Numerator of `S/M` for a minimal generating set `M`.
    fn get(&mut self, gens: Vec<ExponentVector>) -> UniPoly {
        if gens.is_empty() {
            return UniPoly::one();
        }
        if gens.iter().any(ExponentVector::is_zero) {
            return UniPoly::zero();
        }
        let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        if coprime {
            return gens.iter().fold(UniPoly::one(), |acc, m| acc * UniPoly::one_minus_power(self.degree(m)));
        }
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let pivot_ix = (0..gens.len()).min_by_key(|&i| (self.degree(&gens[i]), i)).expect("nonempty");
        let pivot = gens[pivot_ix].clone();
        let mut rest = gens.clone();
        rest.remove(pivot_ix);
        let colon = minimalize(rest.iter().map(|g| g.quotient(&g.gcd(&pivot))).collect());
        let left = self.get(rest);
        let right = self.get(colon).shift(self.degree(&pivot));
        let out = &left - &right;
        self.memo.insert(gens, out.clone());
        out
    }
}

/// Hilbert series of `S/M` for the monomial ideal generated by `gens`.
pub fn monomial_hilbert(gens: &[ExponentVector], d: &Grading) -> Result<HilbertSeries> {
    for g in gens {
        Error::check_len(d.len(), g.len())?;
    }
    let mut ctx = Numerators { weights: d.weights(), memo: HashMap::new() };
    let numerator = ctx.get(minimalize(gens.to_vec()));
    Ok(HilbertSeries::new(numerator, d.clone()))
}

/// Hilbert series of `S/I` through the initial ideal under `order`.
pub fn ideal_hilbert(i: &BinomialIdeal, order: &MonomialOrder, d: &Grading) -> Result<HilbertSeries> {
    Error::check_len(i.num_vars(), d.len())?;
    for b in i.generators() {
        if !b.is_homogeneous(d)? {
            return Err(Error::invalid(format!("{b} is not homogeneous for the grading")));
        }
    }
    let g = buchberger(i, order)?;
    monomial_hilbert(&initial_ideal(&g), d)
}

/// `λ_1(t)⋯λ_s(t) · F(t)` with `λ_i = 1 + t + ⋯ + t^{d_i - 1}`. Since
/// `1 - t^{d_i} = (1 - t) λ_i(t)`, the numerator is unchanged over `(1 - t)^s`.
pub fn lambda_product(f: &HilbertSeries) -> HilbertSeries {
    HilbertSeries::new(f.numerator.clone(), Grading::standard(f.weights.len()))
}

/// `f(t) ↦ f(t^r)` with the denominator unchanged.
pub fn substitute_power(f: &HilbertSeries, r: u32) -> Result<HilbertSeries> {
    if r == 0 {
        return Err(Error::invalid("substitution exponent must be positive"));
    }
    Ok(HilbertSeries::new(f.numerator.substitute_power(r as usize), f.weights.clone()))
}

/// Castelnuovo–Mumford regularity of a Cohen–Macaulay quotient of height `h`.
pub fn reg_cm(f: &HilbertSeries, height: usize) -> Result<i64> {
    Ok(f.a_invariant()? - height as i64 + f.weights.sum() as i64)
}

/// `H(0), …, H(N)`; `stable_from` is a degree from which `H` is known to
/// agree with its Hilbert polynomial, when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    pub values: Vec<u64>,
    pub stable_from: Option<usize>,
}

impl HilbertFunctionTable {
    pub fn from_values(values: Vec<u64>) -> Self {
        HilbertFunctionTable { values, stable_from: None }
    }

    /// Expansion to degree `n`. Under the standard grading `H` is polynomial
    /// from `a + 1` on.
    pub fn from_series(f: &HilbertSeries, n: usize) -> Result<Self> {
        let values = f.expand(n)?.iter().map(|c| c.to_u64().ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
        let stable_from = if f.weights.is_standard() {
            Some(match f.a_invariant() {
                Ok(a) => (a + 1).max(0) as usize,
                Err(_) => 0,
            })
        } else {
            None
        };
        Ok(HilbertFunctionTable { values, stable_from })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `h(d)` from `h(d+1), …, h(d+k)` for a polynomial of degree below `k`.
fn step_back(next: &[BigInt], k: usize) -> BigInt {
    let mut out = BigInt::zero();
    for j in 1..=k {
        let term = binomial(k, j) * &next[j - 1];
        if j % 2 == 1 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

/// Least `ℓ ≥ 0` with `H(d) = h(d)` for all `d ≥ ℓ`, where `h` is the Hilbert
/// polynomial of a quotient of dimension `dim`.
///
/// Without a known stabilization degree the table tail must already show
/// polynomial behaviour over `dim + 1` consecutive values.
pub fn index_of_regularity(t: &HilbertFunctionTable, dim: usize) -> Result<usize> {
    let vals: Vec<BigInt> = t.values.iter().map(|&v| BigInt::from(v)).collect();
    let n = vals.len();
    let start = match t.stable_from {
        Some(s) => {
            if n < s + dim.max(1) {
                return Err(Error::NeedsLongerTable { needed: s + dim.max(1), have: n });
            }
            s
        }
        None => {
            let window = dim + 1;
            if n < window + 1 {
                return Err(Error::NeedsLongerTable { needed: window + 1, have: n });
            }
            let base = n - window;
            if step_back(&vals[base + 1..], dim) != vals[base] {
                return Err(Error::NeedsLongerTable { needed: n + 1, have: n });
            }
            base
        }
    };
    // h on [start, start + dim) determines h everywhere
    let mut poly: Vec<BigInt> = vals[start..(start + dim).min(n)].to_vec();
    let mut ell = start;
    let mut d = start;
    while d > 0 {
        d -= 1;
        let h = if dim == 0 { BigInt::zero() } else { step_back(&poly[..dim], dim) };
        if h != vals[d] {
            break;
        }
        poly.insert(0, h);
        ell = d;
    }
    Ok(ell)
}

/// Eventual constant value of `H` for a one-dimensional standard-graded
/// quotient, i.e. its degree.
pub fn degree_dim1_standard(t: &HilbertFunctionTable) -> Result<u64> {
    let n = t.values.len();
    match t.stable_from {
        Some(s) => t.values.get(s).copied().ok_or(Error::NeedsLongerTable { needed: s + 1, have: n }),
        None => {
            if n >= 2 && t.values[n - 1] == t.values[n - 2] {
                Ok(t.values[n - 1])
            } else {
                Err(Error::NeedsLongerTable { needed: n + 1, have: n })
            }
        }
    }
}
