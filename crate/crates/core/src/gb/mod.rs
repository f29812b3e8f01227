//! Buchberger's algorithm specialized to pure-difference binomials.
//!
//! Every polynomial handled here is `0`, a monomial `t^a`, or a pure
//! difference `t^a - t^b`. S-polynomials and reduction steps of such
//! polynomials stay in that class, so no coefficient arithmetic is ever
//! performed and the result is valid over every field at once. Monomial
//! generators are supported because colon and m-primary computations need
//! ideals of the form `I + (t^a)`.

mod lattice;
mod saturation;

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Binomial, ExponentVector, Grading, MonomialOrder};

pub use lattice::{
    eliminate, homogenize_binomials, is_complete_intersection, lattice_ideal_generators, toric_ideal_monomial_map,
    vanishing_ideal_finite_field,
};
pub use saturation::{colon_by_monomial, is_lattice_ideal, saturate_all, saturate_variable};

/// A polynomial that is zero, a monomial, or a pure difference with its
/// leading term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PurePoly {
    Zero,
    Monomial(ExponentVector),
    Binomial { lead: ExponentVector, tail: ExponentVector },
}

impl PurePoly {
    /// `t^x - t^y` oriented by `order`.
    fn difference(x: ExponentVector, y: ExponentVector, order: &MonomialOrder) -> PurePoly {
        match order.cmp_exp(&x, &y) {
            Ordering::Equal => PurePoly::Zero,
            Ordering::Greater => PurePoly::Binomial { lead: x, tail: y },
            Ordering::Less => PurePoly::Binomial { lead: y, tail: x },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PurePoly::Zero)
    }

    pub fn lead(&self) -> Option<&ExponentVector> {
        match self {
            PurePoly::Zero => None,
            PurePoly::Monomial(m) => Some(m),
            PurePoly::Binomial { lead, .. } => Some(lead),
        }
    }

    pub fn as_binomial(&self) -> Option<Binomial> {
        match self {
            PurePoly::Binomial { lead, tail } => Binomial::new(lead.clone(), tail.clone()).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for PurePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PurePoly::Zero => f.write_str("0"),
            PurePoly::Monomial(m) => write!(f, "{m}"),
            PurePoly::Binomial { lead, tail } => write!(f, "{lead} - {tail}"),
        }
    }
}

/// Generators of an ideal: pure-difference binomials plus optional
/// monomials, with an optional grading under which every generator must be
/// homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdeal {
    num_vars: usize,
    gens: Vec<Binomial>,
    monomials: Vec<ExponentVector>,
    grading: Option<Grading>,
}

impl BinomialIdeal {
    /// Zero binomials are dropped. With a grading attached, every generator
    /// must be homogeneous.
    pub fn new(num_vars: usize, gens: Vec<Binomial>, grading: Option<Grading>) -> Result<Self> {
        if let Some(g) = &grading {
            Error::check_len(num_vars, g.len())?;
        }
        let mut kept = Vec::with_capacity(gens.len());
        for b in gens {
            Error::check_len(num_vars, b.num_vars())?;
            if b.is_zero() {
                continue;
            }
            if let Some(g) = &grading {
                if !b.is_homogeneous(g)? {
                    return Err(Error::invalid(format!("generator {b} is not homogeneous")));
                }
            }
            kept.push(b);
        }
        Ok(BinomialIdeal { num_vars, gens: kept, monomials: Vec::new(), grading })
    }

    pub fn zero(num_vars: usize, grading: Option<Grading>) -> Self {
        BinomialIdeal { num_vars, gens: Vec::new(), monomials: Vec::new(), grading }
    }

    /// Adds monomial generators, e.g. to form `I + (t^a)`.
    pub fn with_monomials(mut self, monomials: Vec<ExponentVector>) -> Result<Self> {
        for m in &monomials {
            Error::check_len(self.num_vars, m.len())?;
        }
        self.monomials.extend(monomials);
        Ok(self)
    }

    pub fn with_grading(mut self, grading: Grading) -> Result<Self> {
        Error::check_len(self.num_vars, grading.len())?;
        for b in &self.gens {
            if !b.is_homogeneous(&grading)? {
                return Err(Error::invalid(format!("generator {b} is not homogeneous")));
            }
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.gens
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    /// Weighted grevlex for the attached grading (standard if none).
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::WeightedGrevlex(self.grading.clone().unwrap_or_else(|| Grading::standard(self.num_vars)))
    }

    pub fn sum(&self, other: &BinomialIdeal) -> Result<BinomialIdeal> {
        Error::check_len(self.num_vars, other.num_vars)?;
        let mut out = self.clone();
        out.gens.extend(other.gens.iter().cloned());
        out.monomials.extend(other.monomials.iter().cloned());
        if let (Some(g), None) = (&self.grading, &other.grading) {
            out = out.with_grading(g.clone())?;
        }
        Ok(out)
    }

    fn polys(&self, order: &MonomialOrder) -> Vec<PurePoly> {
        self.gens
            .iter()
            .map(|b| PurePoly::difference(b.plus().clone(), b.minus().clone(), order))
            .chain(self.monomials.iter().map(|m| PurePoly::Monomial(m.clone())))
            .filter(|p| !p.is_zero())
            .collect()
    }
}

/// Reduced Gröbner basis, sorted by increasing leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    num_vars: usize,
    elements: Vec<PurePoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn elements(&self) -> &[PurePoly] {
        &self.elements
    }

    /// Binomial elements; monomial elements are skipped.
    pub fn binomials(&self) -> Vec<Binomial> {
        self.elements.iter().filter_map(PurePoly::as_binomial).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|p| matches!(p, PurePoly::Monomial(m) if m.is_zero()))
    }

    /// True iff the quotient has finite length, i.e. some power of every
    /// variable is a leading term.
    pub fn has_finite_colength(&self) -> bool {
        (0..self.num_vars)
            .all(|i| self.elements.iter().filter_map(PurePoly::lead).any(|l| l.support().iter().all(|&j| j == i)))
    }

    /// The ideal generated by the basis elements.
    pub fn to_ideal(&self, grading: Option<Grading>) -> Result<BinomialIdeal> {
        let ideal = BinomialIdeal::new(self.num_vars, self.binomials(), grading)?;
        let monos = self
            .elements
            .iter()
            .filter_map(|p| match p {
                PurePoly::Monomial(m) => Some(m.clone()),
                _ => None,
            })
            .collect();
        ideal.with_monomials(monos)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn find_divisor<'a>(basis: &'a [PurePoly], m: &ExponentVector) -> Option<&'a PurePoly> {
    basis.iter().find(|g| g.lead().is_some_and(|l| l.divides(m)))
}

/// Full reduction of `f` by `basis` (leading term first, then the tail).
fn reduce(mut f: PurePoly, basis: &[PurePoly], order: &MonomialOrder) -> Result<PurePoly> {
    // leading term
    loop {
        let Some(lead) = f.lead() else { return Ok(PurePoly::Zero) };
        let Some(g) = find_divisor(basis, lead) else { break };
        f = match (&f, g) {
            (PurePoly::Binomial { lead, tail }, PurePoly::Binomial { lead: c, tail: e }) => {
                PurePoly::difference(lead.rewrite(c, e)?, tail.clone(), order)
            }
            (PurePoly::Binomial { tail, .. }, PurePoly::Monomial(_)) => PurePoly::Monomial(tail.clone()),
            (PurePoly::Monomial(a), PurePoly::Binomial { lead: c, tail: e }) => PurePoly::Monomial(a.rewrite(c, e)?),
            (PurePoly::Monomial(_), PurePoly::Monomial(_)) => PurePoly::Zero,
            (_, PurePoly::Zero) | (PurePoly::Zero, _) => unreachable!("zero never has a lead"),
        };
    }
    // tail
    if let PurePoly::Binomial { lead, mut tail } = f {
        while let Some(g) = find_divisor(basis, &tail) {
            match g {
                PurePoly::Binomial { lead: c, tail: e } => tail = tail.rewrite(c, e)?,
                _ => return Ok(PurePoly::Monomial(lead)),
            }
        }
        debug_assert_eq!(order.cmp_exp(&lead, &tail), Ordering::Greater);
        return Ok(PurePoly::Binomial { lead, tail });
    }
    Ok(f)
}

fn s_poly(f: &PurePoly, g: &PurePoly, order: &MonomialOrder) -> Result<PurePoly> {
    let (a, c) = (f.lead().expect("nonzero"), g.lead().expect("nonzero"));
    let l = a.lcm(c);
    let other = |p: &PurePoly, lead: &ExponentVector| -> Result<Option<ExponentVector>> {
        match p {
            PurePoly::Binomial { tail, .. } => Ok(Some(l.rewrite(lead, tail)?)),
            _ => Ok(None),
        }
    };
    Ok(match (other(f, a)?, other(g, c)?) {
        (Some(x), Some(y)) => PurePoly::difference(x, y, order),
        (Some(x), None) | (None, Some(x)) => PurePoly::Monomial(x),
        (None, None) => PurePoly::Zero,
    })
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Pairs are selected by the normal strategy (smallest weighted degree of
/// the lcm first). Buchberger's coprime and chain criteria discard pairs.
pub fn buchberger(ideal: &BinomialIdeal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    if let Some(n) = order.num_vars() {
        Error::check_len(n, ideal.num_vars)?;
    }
    let mut basis: Vec<PurePoly> = Vec::new();
    let mut heap = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<PurePoly>,
                heap: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                pending: &mut HashSet<(usize, usize)>,
                p: PurePoly| {
        let j = basis.len();
        let lj = p.lead().expect("nonzero").clone();
        basis.push(p);
        for (i, bi) in basis[..j].iter().enumerate() {
            let li = bi.lead().expect("nonzero");
            let deg = order.selection_degree(&li.lcm(&lj));
            heap.push(Reverse((deg, i, j)));
            pending.insert((i, j));
        }
    };

    for p in ideal.polys(order) {
        let r = reduce(p, &basis, order)?;
        if !r.is_zero() {
            push(&mut basis, &mut heap, &mut pending, r);
        }
    }

    while let Some(Reverse((_, i, j))) = heap.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lead().expect("nonzero"), basis[j].lead().expect("nonzero"));
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().expect("nonzero").divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order)?;
        let r = reduce(s, &basis, order)?;
        if !r.is_zero() {
            push(&mut basis, &mut heap, &mut pending, r);
        }
    }

    Ok(GroebnerBasis { order: order.clone(), num_vars: ideal.num_vars, elements: interreduce(basis, order)? })
}

fn interreduce(basis: Vec<PurePoly>, order: &MonomialOrder) -> Result<Vec<PurePoly>> {
    let mut sorted = basis;
    sorted.sort_by(|p, q| order.cmp_exp(p.lead().expect("nonzero"), q.lead().expect("nonzero")));
    let mut minimal: Vec<PurePoly> = Vec::new();
    for p in sorted {
        let l = p.lead().expect("nonzero");
        if !minimal.iter().any(|q| q.lead().expect("nonzero").divides(l)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<PurePoly> =
            minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p.clone()).collect();
        let r = match &minimal[k] {
            PurePoly::Binomial { lead, tail } => {
                // leading terms are minimal, so only the tail can change
                let reduced_tail = reduce(PurePoly::Monomial(tail.clone()), &others, order)?;
                match reduced_tail {
                    PurePoly::Monomial(t) => PurePoly::difference(lead.clone(), t, order),
                    PurePoly::Zero => PurePoly::Monomial(lead.clone()),
                    PurePoly::Binomial { .. } => unreachable!("monomials reduce to monomials"),
                }
            }
            other => other.clone(),
        };
        out.push(r);
    }
    // a tail can only shrink, so leads and their ordering are unchanged
    Ok(out)
}

/// Remainder of `f` on division by `g`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Binomial, g: &GroebnerBasis) -> Result<PurePoly> {
    Error::check_len(g.num_vars, f.num_vars())?;
    let p = PurePoly::difference(f.plus().clone(), f.minus().clone(), &g.order);
    reduce(p, &g.elements, &g.order)
}

/// Remainder of a monomial.
pub fn normal_form_monomial(m: &ExponentVector, g: &GroebnerBasis) -> Result<PurePoly> {
    Error::check_len(g.num_vars, m.len())?;
    reduce(PurePoly::Monomial(m.clone()), &g.elements, &g.order)
}

/// Minimal generators of the initial ideal: the leading exponents.
pub fn initial_ideal(g: &GroebnerBasis) -> Vec<ExponentVector> {
    g.elements.iter().filter_map(|p| p.lead().cloned()).collect()
}

/// Equality of ideals via equality of reduced Gröbner bases.
pub fn ideal_equal(i: &BinomialIdeal, j: &BinomialIdeal, order: &MonomialOrder) -> Result<bool> {
    Error::check_len(i.num_vars, j.num_vars)?;
    Ok(buchberger(i, order)?.elements == buchberger(j, order)?.elements)
}
