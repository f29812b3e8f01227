//! Lattice ideals, toric ideals, elimination and the finite-field
//! vanishing-ideal construction.

use super::{buchberger, ideal_equal, saturate_all, BinomialIdeal, GroebnerBasis, PurePoly};
use crate::error::{Error, Result};
use crate::ffvanish::is_prime;
use crate::intlat::{is_homogeneous, kernel_lattice, IntMatrix, Lattice};
use crate::ring::{Binomial, ExponentVector, Grading, MonomialOrder};

/// Generators of `I(L)`: the basis binomials `t^{g⁺} - t^{g⁻}` saturated by
/// the product of all variables. `L` must be homogeneous for `d`.
pub fn lattice_ideal_generators(l: &Lattice, d: &Grading) -> Result<BinomialIdeal> {
    if !is_homogeneous(l, d)? {
        return Err(Error::Unsupported("lattice is not homogeneous for the grading".into()));
    }
    let gens = l.basis_vectors()?.iter().map(Binomial::from_int_vector).collect();
    let basis_ideal = BinomialIdeal::new(l.ambient_dim(), gens, Some(d.clone()))?;
    saturate_all(&basis_ideal)
}

/// `t^a - t^b ↦ t^{D(a)} - t^{D(b)}` with `D = diag(d)`.
pub fn homogenize_binomials(bins: &[Binomial], d: &Grading) -> Result<Vec<Binomial>> {
    bins.iter()
        .map(|b| {
            if !b.is_homogeneous(d)? {
                return Err(Error::invalid(format!("{b} is not homogeneous for the grading")));
            }
            b.scaled(d.weights())
        })
        .collect()
}

/// True iff `|B| = rank(L)` and `(B) = I(L)`.
pub fn is_complete_intersection(l: &Lattice, d: &Grading, bins: &[Binomial]) -> Result<bool> {
    let ideal = BinomialIdeal::new(l.ambient_dim(), bins.to_vec(), Some(d.clone()))?;
    if ideal.generators().len() != l.rank() || bins.len() != l.rank() {
        return Ok(false);
    }
    let il = lattice_ideal_generators(l, d)?;
    ideal_equal(&ideal, &il, &MonomialOrder::WeightedGrevlex(d.clone()))
}

/// Elements of an elimination-order basis supported on `keep`, re-indexed
/// to `0..keep.len()`. `keep` must be exactly the variables after the
/// eliminated block.
pub fn eliminate(g: &GroebnerBasis, keep: &[usize]) -> Result<BinomialIdeal> {
    let MonomialOrder::Elimination { block, grading } = g.order() else {
        return Err(Error::invalid("elimination needs a basis for an elimination order"));
    };
    let n = g.num_vars();
    let expected: Vec<usize> = (*block..n).collect();
    if keep != expected.as_slice() {
        return Err(Error::invalid(format!(
            "keep {keep:?} is not the complement {expected:?} of the eliminated block"
        )));
    }
    let project = |e: &ExponentVector| -> Option<ExponentVector> {
        if e.entries()[..*block].iter().any(|&x| x != 0) {
            None
        } else {
            Some(ExponentVector::new(e.entries()[*block..].to_vec()))
        }
    };
    let mut gens = Vec::new();
    let mut monos = Vec::new();
    for el in g.elements() {
        match el {
            PurePoly::Binomial { lead, tail } => {
                if let (Some(a), Some(b)) = (project(lead), project(tail)) {
                    gens.push(Binomial::new(a, b)?);
                }
            }
            PurePoly::Monomial(m) => {
                if let Some(a) = project(m) {
                    monos.push(a);
                }
            }
            PurePoly::Zero => {}
        }
    }
    let sub = Grading::new(grading.weights()[*block..].to_vec())?;
    let ideal = BinomialIdeal::new(keep.len(), gens, None)?.with_monomials(monos)?;
    // graded when every surviving element is homogeneous
    Ok(ideal.clone().with_grading(sub).unwrap_or(ideal))
}

/// `I(X)` for `X = {[x^{v_1} : ⋯ : x^{v_s}] : x ∈ (F_q^*)^n}`, obtained by
/// eliminating `y, z` from `(t_i - y^{v_i} z, y_j^{q-1} - 1)`.
///
/// Variables of the auxiliary ring are ordered `y_1..y_n, z, t_1..t_s`.
pub fn vanishing_ideal_finite_field(vs: &[Vec<u32>], q: u64) -> Result<BinomialIdeal> {
    if !is_prime(q) {
        return Err(Error::UnsupportedField(q));
    }
    let (n, s) = parameter_shape(vs)?;
    let total = n + 1 + s;
    let mut gens = Vec::with_capacity(s + n);
    for (i, v) in vs.iter().enumerate() {
        let t = ExponentVector::var_power(total, n + 1 + i, 1);
        let mut m = v.clone();
        m.push(1);
        m.resize(total, 0);
        gens.push(Binomial::new(t, ExponentVector::new(m))?);
    }
    let qm1 = u32::try_from(q - 1).map_err(|_| Error::Overflow)?;
    for j in 0..n {
        gens.push(Binomial::new(ExponentVector::var_power(total, j, qm1), ExponentVector::zero(total))?);
    }
    let ideal = BinomialIdeal::new(total, gens, None)?;
    let order = MonomialOrder::Elimination { block: n + 1, grading: Grading::standard(total) };
    let g = buchberger(&ideal, &order)?;
    let keep: Vec<usize> = (n + 1..total).collect();
    let out = eliminate(&g, &keep)?;
    out.with_grading(Grading::standard(s))
}

fn parameter_shape(vs: &[Vec<u32>]) -> Result<(usize, usize)> {
    let s = vs.len();
    if s == 0 {
        return Err(Error::invalid("need at least one monomial"));
    }
    let n = vs[0].len();
    for v in vs {
        Error::check_len(n, v.len())?;
        if v.iter().all(|&x| x == 0) {
            return Err(Error::invalid("exponent vectors must be nonzero"));
        }
    }
    Ok((n, s))
}

/// Toric ideal of `K[y^{v_1}, ..., y^{v_s}]` (or of `K[y^{v_1} z, ...]` when
/// `homogenize_with_z`), i.e. the lattice ideal of `ker_Z(A)` for the matrix
/// with columns `v_i` (resp. `(v_i, 1)`).
pub fn toric_ideal_monomial_map(vs: &[Vec<u32>], homogenize_with_z: bool) -> Result<BinomialIdeal> {
    let (n, s) = parameter_shape(vs)?;
    let mut rows: Vec<Vec<i64>> = (0..n).map(|r| vs.iter().map(|v| v[r] as i64).collect()).collect();
    let grading = if homogenize_with_z {
        rows.push(vec![1; s]);
        Grading::standard(s)
    } else {
        // the column sums are a positive vector in the row space
        Grading::new(vs.iter().map(|v| v.iter().sum()).collect())?
    };
    let a = IntMatrix::from_rows(s, &rows)?;
    let l = kernel_lattice(&a);
    lattice_ideal_generators(&l, &grading)
}
