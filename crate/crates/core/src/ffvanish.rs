//! Point sets over prime fields: parameterized toric sets, degenerate tori,
//! their Hilbert functions and the vanishing test for binomial ideals.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gb::BinomialIdeal;
use crate::ring::ExponentVector;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut k = 3u64;
    while k.saturating_mul(k) <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            while n.is_multiple_of(k) {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The field `F_p`, with a fixed generator of its multiplicative group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
    generator: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::UnsupportedField(p));
        }
        let factors = prime_factors(p - 1);
        let mut f = PrimeField { p, generator: 1 };
        let generator = (1..p)
            .find(|&g| factors.iter().all(|&r| f.pow(g, (p - 1) / r) != 1))
            .expect("the multiplicative group is cyclic");
        f.generator = generator;
        Ok(f)
    }

    /// Fields for point sets must have more than two elements.
    fn for_points(self) -> Result<Self> {
        if self.p < 3 {
            return Err(Error::UnsupportedField(self.p));
        }
        Ok(self)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// `k` in `0..p-1` with `generator^k = a`.
    pub fn log(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let mut x = 1;
        for k in 0..self.p - 1 {
            if x == a {
                return Some(k);
            }
            x = self.mul(x, self.generator);
        }
        None
    }
}

/// A point of projective space with its last nonzero coordinate equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<u64>,
}

impl ProjectivePoint {
    pub fn new(field: &PrimeField, coords: &[u64]) -> Result<Self> {
        let coords: Vec<u64> = coords.iter().map(|&c| c % field.p).collect();
        let last = coords
            .iter()
            .rposition(|&c| c != 0)
            .ok_or_else(|| Error::invalid("the zero vector is not a projective point"))?;
        let scale = field.inv(coords[last]);
        Ok(ProjectivePoint { coords: coords.iter().map(|&c| field.mul(c, scale)).collect() })
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    fn in_torus(&self) -> bool {
        self.coords.iter().all(|&c| c != 0)
    }

    fn times(&self, other: &ProjectivePoint, field: &PrimeField) -> ProjectivePoint {
        let c: Vec<u64> = self.coords.iter().zip(&other.coords).map(|(&a, &b)| field.mul(a, b)).collect();
        ProjectivePoint::new(field, &c).expect("torus points have nonzero products")
    }

    fn inverse(&self, field: &PrimeField) -> ProjectivePoint {
        let c: Vec<u64> = self.coords.iter().map(|&a| field.inv(a)).collect();
        ProjectivePoint::new(field, &c).expect("inverse of a torus point")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: PrimeField,
    num_coords: usize,
    points: BTreeSet<ProjectivePoint>,
}

impl PointSet {
    pub fn new(
        field: PrimeField,
        num_coords: usize,
        points: impl IntoIterator<Item = ProjectivePoint>,
    ) -> Result<Self> {
        let points: BTreeSet<ProjectivePoint> = points.into_iter().collect();
        for pt in &points {
            Error::check_len(num_coords, pt.len())?;
        }
        Ok(PointSet { field, num_coords, points })
    }

    /// Builds a set from raw coordinate tuples, normalizing each.
    pub fn from_coords(field: PrimeField, num_coords: usize, tuples: &[Vec<u64>]) -> Result<Self> {
        let pts = tuples.iter().map(|c| ProjectivePoint::new(&field, c)).collect::<Result<Vec<_>>>()?;
        Self::new(field, num_coords, pts)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn num_coords(&self) -> usize {
        self.num_coords
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, pt: &ProjectivePoint) -> bool {
        self.points.contains(pt)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.points.iter()
    }
}

fn check_parameters(vs: &[Vec<u32>]) -> Result<usize> {
    let first = vs.first().ok_or_else(|| Error::invalid("need at least one monomial"))?;
    let n = first.len();
    for v in vs {
        Error::check_len(n, v.len())?;
        if v.iter().all(|&x| x == 0) {
            return Err(Error::invalid("exponent vectors must be nonzero"));
        }
    }
    Ok(n)
}

/// Subgroup of the torus generated by `gens`.
fn closure(field: &PrimeField, s: usize, gens: &[ProjectivePoint]) -> BTreeSet<ProjectivePoint> {
    let one = ProjectivePoint { coords: vec![1; s] };
    let mut seen = BTreeSet::from([one.clone()]);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.times(g, field);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// `{[x^{v_1} : ⋯ : x^{v_s}] : x ∈ (F_p^*)^n}`.
///
/// The image of `(F_p^*)^n` is the subgroup generated by the images of the
/// parameter `β e_j` for a generator `β`, which is what gets enumerated.
pub fn enumerate_parameterized(field: &PrimeField, vs: &[Vec<u32>]) -> Result<PointSet> {
    let field = field.for_points()?;
    let n = check_parameters(vs)?;
    let s = vs.len();
    let gens = (0..n)
        .map(|j| {
            let c: Vec<u64> = vs.iter().map(|v| field.pow(field.generator, v[j] as u64)).collect();
            ProjectivePoint::new(&field, &c)
        })
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(field, s, closure(&field, s, &gens))
}

/// `{[x_1^{v_1} : ⋯ : x_s^{v_s}] : x_i ∈ F_p^*}`.
pub fn enumerate_degenerate_torus(field: &PrimeField, v: &[u32]) -> Result<PointSet> {
    if v.contains(&0) {
        return Err(Error::invalid("torus exponents must be positive"));
    }
    let s = v.len();
    let vs: Vec<Vec<u32>> = (0..s).map(|i| ExponentVector::var_power(s, i, v[i]).entries().to_vec()).collect();
    enumerate_parameterized(field, &vs)
}

/// Echelon basis over `F_p`, reduced in insertion order.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if independent; returns whether it was added.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                let f = p - c;
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = (*x + f * r) % p;
                    }
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(pivot) => {
                let inv = pow_mod(v[pivot], p - 2, p);
                for x in v.iter_mut() {
                    *x = *x * inv % p;
                }
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Evaluation images of the forms of degree `0, 1, 2, …` on a point set.
struct ImageTower<'a> {
    pts: Vec<&'a ProjectivePoint>,
    num_coords: usize,
    basis: Echelon,
    /// Rows added in the latest degree.
    fresh: usize,
    /// Every point has last coordinate 1, so multiplying by the last
    /// variable is the identity and the images increase with the degree.
    nested: bool,
}

impl<'a> ImageTower<'a> {
    fn new(x: &'a PointSet) -> Self {
        let pts: Vec<&ProjectivePoint> = x.points.iter().collect();
        let nested = x.num_coords > 0 && pts.iter().all(|pt| pt.coords[x.num_coords - 1] == 1);
        let mut basis = Echelon::new(x.field.p);
        basis.insert(vec![1; pts.len()]);
        ImageTower { pts, num_coords: x.num_coords, basis, fresh: 0, nested }
    }

    fn rank(&self) -> usize {
        self.basis.rank()
    }

    fn times_var(&self, row: &[u64], i: usize) -> Vec<u64> {
        let p = self.basis.p;
        row.iter().zip(&self.pts).map(|(&r, pt)| r * pt.coords[i] % p).collect()
    }

    fn step(&mut self) {
        let m = self.pts.len();
        if self.nested {
            let start = self.rank();
            for k in self.fresh..start {
                for i in 0..self.num_coords - 1 {
                    if self.rank() == m {
                        break;
                    }
                    let v = self.times_var(&self.basis.rows[k].1, i);
                    self.basis.insert(v);
                }
            }
            self.fresh = start;
            return;
        }
        let mut next = Echelon::new(self.basis.p);
        'fill: for (_, row) in &self.basis.rows {
            for i in 0..self.num_coords {
                if next.rank() == m {
                    break 'fill;
                }
                next.insert(self.times_var(row, i));
            }
        }
        self.basis = next;
    }
}

/// `H_X(0), …, H_X(up_to)`. The evaluation image of degree `d` forms is
/// spanned by `x_i ·` (a basis of the degree `d - 1` image).
pub fn hilbert_function_points_table(x: &PointSet, up_to: usize) -> Vec<u64> {
    if x.is_empty() {
        return vec![0; up_to + 1];
    }
    let mut tower = ImageTower::new(x);
    let mut out = vec![1];
    for _ in 1..=up_to {
        tower.step();
        out.push(tower.rank() as u64);
    }
    out
}

/// `H_X(d)`, the rank of the evaluation map on forms of degree `d`.
pub fn hilbert_function_points(x: &PointSet, d: usize) -> u64 {
    hilbert_function_points_table(x, d)[d]
}

/// Least `d` with `H_X(d) = |X|`.
pub fn regularity_points(x: &PointSet) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::invalid("empty point set"));
    }
    let mut tower = ImageTower::new(x);
    let mut d = 0;
    while tower.rank() < x.len() {
        tower.step();
        d += 1;
    }
    Ok(d)
}

/// True iff `X` lies in the torus and is closed under products and inverses.
pub fn is_subgroup_of_torus(x: &PointSet) -> bool {
    if x.is_empty() || !x.points.iter().all(ProjectivePoint::in_torus) {
        return false;
    }
    let f = &x.field;
    x.points.iter().all(|a| x.contains(&a.inverse(f)) && x.points.iter().all(|b| x.contains(&a.times(b, f))))
}

/// Exponent vectors `v_1, …, v_s` (one per coordinate) whose parameterized
/// set is `X`, for a subgroup `X` of the torus.
pub fn subgroup_to_monomials(x: &PointSet) -> Result<Vec<Vec<u32>>> {
    if !is_subgroup_of_torus(x) {
        return Err(Error::invalid("point set is not a subgroup of the torus"));
    }
    let f = x.field;
    let s = x.num_coords;
    let mut gens: Vec<ProjectivePoint> = Vec::new();
    let mut span = closure(&f, s, &gens);
    for pt in &x.points {
        if !span.contains(pt) {
            gens.push(pt.clone());
            span = closure(&f, s, &gens);
        }
    }
    let order = (f.p - 1) as u32;
    if gens.is_empty() {
        return Ok(vec![vec![order]; s]);
    }
    let vs = (0..s)
        .map(|i| {
            gens.iter()
                .map(|g| {
                    let k = f.log(g.coords[i]).expect("torus coordinates are nonzero") as u32;
                    if k == 0 {
                        order
                    } else {
                        k
                    }
                })
                .collect()
        })
        .collect();
    Ok(vs)
}

fn eval_monomial(field: &PrimeField, e: &ExponentVector, pt: &ProjectivePoint) -> u64 {
    e.entries().iter().zip(&pt.coords).fold(1, |acc, (&k, &c)| field.mul(acc, field.pow(c, k as u64)))
}

/// True iff every generator of `I` vanishes at every point of `X`.
pub fn check_vanishing(i: &BinomialIdeal, x: &PointSet) -> Result<bool> {
    Error::check_len(x.num_coords, i.num_vars())?;
    for b in i.generators() {
        if b.plus().total_degree() != b.minus().total_degree() {
            return Err(Error::invalid(format!("{b} is not homogeneous")));
        }
    }
    let f = &x.field;
    for pt in &x.points {
        for b in i.generators() {
            if eval_monomial(f, b.plus(), pt) != eval_monomial(f, b.minus(), pt) {
                return Ok(false);
            }
        }
        for m in i.monomials() {
            if eval_monomial(f, m, pt) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
