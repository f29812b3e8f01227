//! Weighted polynomial-ring bookkeeping: exponent vectors, gradings,
//! pure-difference binomials and monomial orders.
//!
//! Binomials render as `t1^3 t2 - t3^2`: variables are `t1..ts`, factors
//! are separated by whitespace, and the empty monomial is written `1`. The
//! parser also accepts `*` between factors.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Positive variable weights `deg(t_i) = d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading(Vec<u32>);

impl Grading {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("a grading needs at least one variable"));
        }
        if weights.contains(&0) {
            return Err(Error::invalid("grading weights must be positive"));
        }
        Ok(Grading(weights))
    }

    /// All weights equal to one.
    pub fn standard(num_vars: usize) -> Self {
        Grading(vec![1; num_vars.max(1)])
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }

    /// `r = gcd(d_1, ..., d_s)`.
    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0u64, |g, &w| g.gcd(&(w as u64)))
    }

    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1u64, |l, &w| l.lcm(&(w as u64)))
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(1) as u64
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }

    pub fn product(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).product()
    }

    /// Moves weight `i` to the last position, shifting the ones after it.
    pub(crate) fn moved_to_end(&self, i: usize) -> Grading {
        let mut w = self.0.clone();
        let x = w.remove(i);
        w.push(x);
        Grading(w)
    }
}

/// Exponent vector `a` of the monomial `t^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(num_vars: usize) -> Self {
        ExponentVector(vec![0; num_vars])
    }

    /// `e_i` scaled by `power`.
    pub fn var_power(num_vars: usize, i: usize, power: u32) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = power;
        ExponentVector(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `self - other`; requires `other | self`.
    pub fn quotient(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    /// `self - divisor + replacement`, the exponent of `t^self / t^divisor * t^replacement`.
    pub(crate) fn rewrite(&self, divisor: &Self, replacement: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(&divisor.0)
            .zip(&replacement.0)
            .map(|((&a, &c), &e)| (a - c).checked_add(e).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn scaled(&self, weights: &[u32]) -> Result<Self> {
        Error::check_len(weights.len(), self.len())?;
        self.0
            .iter()
            .zip(weights)
            .map(|(&a, &w)| a.checked_mul(w).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub(crate) fn set(&mut self, i: usize, value: u32) {
        self.0[i] = value;
    }

    pub(crate) fn moved_to_end(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        let x = v.remove(i);
        v.push(x);
        ExponentVector(v)
    }

    pub(crate) fn moved_from_end(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        let x = v.pop().expect("nonempty exponent vector");
        v.insert(i, x);
        ExponentVector(v)
    }

    fn fmt_monomial(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_monomial(f)
    }
}

/// `Σ a_i d_i`.
pub fn weighted_degree(a: &ExponentVector, d: &Grading) -> Result<u64> {
    Error::check_len(d.len(), a.len())?;
    Ok(weighted_degree_unchecked(a.entries(), d.weights()))
}

pub(crate) fn weighted_degree_unchecked(a: &[u32], w: &[u32]) -> u64 {
    a.iter().zip(w).map(|(&x, &y)| x as u64 * y as u64).sum()
}

/// Integer vector `c`, split as `c = c⁺ - c⁻`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// Splits `c` into nonnegative parts with disjoint support.
pub fn split_parts(c: &IntVector) -> (ExponentVector, ExponentVector) {
    let plus = c.0.iter().map(|&x| x.max(0) as u32).collect();
    let minus = c.0.iter().map(|&x| (-x).max(0) as u32).collect();
    (ExponentVector(plus), ExponentVector(minus))
}

/// Pure-difference binomial `t^plus - t^minus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Result<Self> {
        Error::check_len(plus.len(), minus.len())?;
        Ok(Binomial { plus, minus })
    }

    /// `t^{c⁺} - t^{c⁻}`.
    pub fn from_int_vector(c: &IntVector) -> Self {
        let (plus, minus) = split_parts(c);
        Binomial { plus, minus }
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn has_disjoint_support(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    /// Exponent difference `plus - minus`.
    pub fn difference(&self) -> IntVector {
        IntVector(self.plus.entries().iter().zip(self.minus.entries()).map(|(&a, &b)| a as i64 - b as i64).collect())
    }

    pub fn is_homogeneous(&self, d: &Grading) -> Result<bool> {
        Ok(weighted_degree(&self.plus, d)? == weighted_degree(&self.minus, d)?)
    }

    /// Same binomial up to sign, with the larger term first under `order`.
    pub fn oriented(&self, order: &MonomialOrder) -> Binomial {
        if order.cmp_exp(&self.plus, &self.minus) == Ordering::Less {
            Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
        } else {
            self.clone()
        }
    }

    /// Equality as polynomials up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        (self.plus == other.plus && self.minus == other.minus)
            || (self.plus == other.minus && self.minus == other.plus)
            || (self.is_zero() && other.is_zero())
    }

    /// Applies `t_i ↦ t_i^{d_i}` to both terms.
    pub fn scaled(&self, weights: &[u32]) -> Result<Binomial> {
        Ok(Binomial { plus: self.plus.scaled(weights)?, minus: self.minus.scaled(weights)? })
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.plus.fmt_monomial(f)?;
        f.write_str(" - ")?;
        self.minus.fmt_monomial(f)
    }
}

/// Sparse monomial as parsed, before the variable count is known.
type SparseMonomial = Vec<(usize, u32)>;

fn parse_monomial(text: &str) -> std::result::Result<SparseMonomial, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty term".into());
    }
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    for tok in text.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        if tok == "1" {
            continue;
        }
        let (var, exp) = match tok.split_once('^') {
            Some((v, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| format!("bad exponent in '{tok}'"))?;
                (v, e)
            }
            None => (tok, 1),
        };
        let idx = var
            .strip_prefix('t')
            .and_then(|i| i.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| format!("unknown variable '{var}' (expected t1, t2, ...)"))?;
        factors.push((idx - 1, exp));
    }
    Ok(factors)
}

fn densify(m: &SparseMonomial, num_vars: usize) -> ExponentVector {
    let mut e = vec![0u32; num_vars];
    for &(i, x) in m {
        e[i] += x;
    }
    ExponentVector(e)
}

fn parse_sparse(text: &str) -> std::result::Result<(SparseMonomial, SparseMonomial), String> {
    if text.contains('+') {
        return Err("only pure differences 'm1 - m2' are supported".into());
    }
    let parts: Vec<&str> = text.split('-').collect();
    if parts.len() != 2 {
        return Err("expected exactly one '-' separating two monomials".into());
    }
    Ok((parse_monomial(parts[0])?, parse_monomial(parts[1])?))
}

fn max_index(m: &SparseMonomial) -> usize {
    m.iter().map(|&(i, _)| i + 1).max().unwrap_or(0)
}

/// Parses a single binomial. With `num_vars = None` the count is the
/// largest variable index that occurs.
pub fn parse_binomial(text: &str, num_vars: Option<usize>) -> Result<Binomial> {
    let (p, m) = parse_sparse(text).map_err(|message| Error::Parse { line: 1, message })?;
    let needed = max_index(&p).max(max_index(&m)).max(1);
    let n = match num_vars {
        Some(n) if n < needed => {
            return Err(Error::Parse { line: 1, message: format!("variable t{needed} out of range for {n} variables") })
        }
        Some(n) => n,
        None => needed,
    };
    Ok(Binomial { plus: densify(&p, n), minus: densify(&m, n) })
}

/// Parses one binomial per line; blank lines and `#` comments are ignored.
/// Returns the binomials and the variable count (the largest index seen,
/// or `num_vars` when given).
pub fn parse_binomial_lines(text: &str, num_vars: Option<usize>) -> Result<(Vec<Binomial>, usize)> {
    let mut sparse = Vec::new();
    let mut needed = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (p, m) = parse_sparse(line).map_err(|message| Error::Parse { line: lineno + 1, message })?;
        needed = needed.max(max_index(&p)).max(max_index(&m));
        sparse.push((lineno + 1, p, m));
    }
    let n = match num_vars {
        Some(n) => {
            if let Some((line, ..)) = sparse.iter().find(|(_, p, m)| max_index(p).max(max_index(m)) > n) {
                return Err(Error::Parse { line: *line, message: format!("variable index exceeds {n} variables") });
            }
            n
        }
        None => needed.max(1),
    };
    let bins = sparse.iter().map(|(_, p, m)| Binomial { plus: densify(p, n), minus: densify(m, n) }).collect();
    Ok((bins, n))
}

/// Monomial orders on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken reverse-lexicographically: `b ≻ a`
    /// iff the last nonzero entry of `b - a` is negative.
    WeightedGrevlex(Grading),
    Lex,
    /// The first `block` variables form an eliminated block. Compares
    /// weighted-grevlex on the block first, then weighted-grevlex on the rest.
    Elimination {
        block: usize,
        grading: Grading,
    },
}

impl MonomialOrder {
    pub fn grevlex(num_vars: usize) -> Self {
        MonomialOrder::WeightedGrevlex(Grading::standard(num_vars))
    }

    pub fn num_vars(&self) -> Option<usize> {
        match self {
            MonomialOrder::WeightedGrevlex(g) | MonomialOrder::Elimination { grading: g, .. } => Some(g.len()),
            MonomialOrder::Lex => None,
        }
    }

    /// Weight used for pair selection (the "sugar-free" normal strategy).
    pub(crate) fn selection_degree(&self, a: &ExponentVector) -> u64 {
        match self {
            MonomialOrder::WeightedGrevlex(g) | MonomialOrder::Elimination { grading: g, .. } => {
                weighted_degree_unchecked(a.entries(), g.weights())
            }
            MonomialOrder::Lex => a.total_degree(),
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        Error::check_len(a.len(), b.len())?;
        if let Some(n) = self.num_vars() {
            Error::check_len(n, a.len())?;
        }
        Ok(self.cmp_exp(a, b))
    }

    pub(crate) fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let (a, b) = (a.entries(), b.entries());
        match self {
            MonomialOrder::WeightedGrevlex(g) => grevlex_cmp(a, b, g.weights()),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination { block, grading } => {
                let k = *block;
                let w = grading.weights();
                grevlex_cmp(&a[..k], &b[..k], &w[..k]).then_with(|| grevlex_cmp(&a[k..], &b[k..], &w[k..]))
            }
        }
    }
}

fn grevlex_cmp(a: &[u32], b: &[u32], w: &[u32]) -> Ordering {
    let da = weighted_degree_unchecked(a, w);
    let db = weighted_degree_unchecked(b, w);
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                // smaller exponent in the last differing variable wins
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}
