//! Colon ideals by variables for graded binomial ideals.
//!
//! For an ideal homogeneous under positive weights and a weighted grevlex
//! order with `t_i` last, `t_i^k` divides an element of the reduced basis
//! exactly when it divides its leading term, and dividing every element by
//! `gcd(element, t_i^k)` gives a Gröbner basis of `(I : t_i^k)`.

use super::{buchberger, ideal_equal, BinomialIdeal, PurePoly};
use crate::error::{Error, Result};
use crate::ring::{Binomial, ExponentVector, Grading, MonomialOrder};

fn require_grading(i: &BinomialIdeal) -> Result<Grading> {
    i.grading().cloned().ok_or_else(|| Error::Unsupported("colon computations need a graded ideal".into()))
}

fn permuted(i: &BinomialIdeal, var: usize, grading: &Grading) -> Result<BinomialIdeal> {
    let gens = i
        .generators()
        .iter()
        .map(|b| Binomial::new(b.plus().moved_to_end(var), b.minus().moved_to_end(var)))
        .collect::<Result<Vec<_>>>()?;
    BinomialIdeal::new(i.num_vars(), gens, Some(grading.moved_to_end(var)))?
        .with_monomials(i.monomials().iter().map(|m| m.moved_to_end(var)).collect())
}

/// One colon step `(I : t_var^power)`; `None` for `power` means `t_var^∞`.
/// Returns the generators (a Gröbner basis in the permuted order, mapped
/// back) and whether anything was divided.
fn colon_step(i: &BinomialIdeal, var: usize, power: Option<u32>) -> Result<(BinomialIdeal, bool)> {
    let grading = require_grading(i)?;
    let s = i.num_vars();
    let p = permuted(i, var, &grading)?;
    let order = MonomialOrder::WeightedGrevlex(grading.moved_to_end(var));
    let g = buchberger(&p, &order)?;
    let last = s - 1;
    let mut changed = false;
    let mut gens = Vec::new();
    let mut monos = Vec::new();
    for el in g.elements() {
        match el {
            PurePoly::Binomial { lead, tail } => {
                let k = lead.entries()[last].min(tail.entries()[last]);
                let k = power.map_or(k, |p| k.min(p));
                let (mut a, mut b) = (lead.clone(), tail.clone());
                if k > 0 {
                    changed = true;
                    a.set(last, a.entries()[last] - k);
                    b.set(last, b.entries()[last] - k);
                }
                gens.push(Binomial::new(a.moved_from_end(var), b.moved_from_end(var))?);
            }
            PurePoly::Monomial(m) => {
                let k = power.map_or(m.entries()[last], |p| m.entries()[last].min(p));
                let mut a = m.clone();
                if k > 0 {
                    changed = true;
                    a.set(last, a.entries()[last] - k);
                }
                monos.push(a.moved_from_end(var));
            }
            PurePoly::Zero => {}
        }
    }
    let out = BinomialIdeal::new(s, gens, Some(grading))?.with_monomials(monos)?;
    Ok((out, changed))
}

fn saturate_variable_tracked(i: &BinomialIdeal, var: usize) -> Result<(BinomialIdeal, bool)> {
    if var >= i.num_vars() {
        return Err(Error::invalid(format!("variable index {var} out of range")));
    }
    let mut current = i.clone();
    let mut any = false;
    loop {
        let (next, changed) = colon_step(&current, var, None)?;
        current = next;
        if !changed {
            return Ok((current, any));
        }
        any = true;
    }
}

/// `(I : t_var^∞)` for a graded ideal; `var` is 0-based.
pub fn saturate_variable(i: &BinomialIdeal, var: usize) -> Result<BinomialIdeal> {
    Ok(saturate_variable_tracked(i, var)?.0)
}

/// `(I : (t_1 ⋯ t_s)^∞)`, by saturating one variable at a time until a
/// full pass changes nothing.
pub fn saturate_all(i: &BinomialIdeal) -> Result<BinomialIdeal> {
    require_grading(i)?;
    let mut current = i.clone();
    loop {
        let mut changed = false;
        for var in 0..current.num_vars() {
            let (next, c) = saturate_variable_tracked(&current, var)?;
            current = next;
            changed |= c;
        }
        if !changed {
            return Ok(current);
        }
    }
}

/// `(I : t^a)` for a graded ideal, one variable power at a time.
pub fn colon_by_monomial(i: &BinomialIdeal, a: &ExponentVector) -> Result<BinomialIdeal> {
    Error::check_len(i.num_vars(), a.len())?;
    let mut current = i.clone();
    for (var, &k) in a.entries().iter().enumerate() {
        if k > 0 {
            current = colon_step(&current, var, Some(k))?.0;
        }
    }
    Ok(current)
}

/// True iff `I = (I : (t_1 ⋯ t_s)^∞)`, i.e. every variable is a non-zero
/// divisor modulo `I`; for binomial ideals this characterizes lattice ideals.
pub fn is_lattice_ideal(i: &BinomialIdeal) -> Result<bool> {
    let sat = saturate_all(i)?;
    ideal_equal(i, &sat, &i.default_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{buchberger, normal_form};
    use crate::ring::parse_binomial;

    fn ideal(n: usize, gens: &[&str], d: Option<&[u32]>) -> BinomialIdeal {
        let g = d.map(|d| Grading::new(d.to_vec()).unwrap());
        BinomialIdeal::new(n, gens.iter().map(|s| parse_binomial(s, Some(n)).unwrap()).collect(), g).unwrap()
    }

    fn gens_of(i: &BinomialIdeal) -> Vec<String> {
        let g = buchberger(i, &i.default_order()).unwrap();
        g.elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn saturate_variable_examples() {
        let i = ideal(2, &["t1 t2 - t2^2"], Some(&[1, 1]));
        assert_eq!(gens_of(&saturate_variable(&i, 1).unwrap()), vec!["t1 - t2"]);
        let j = ideal(2, &["t1 - t2"], Some(&[1, 1]));
        for v in 0..2 {
            assert_eq!(gens_of(&saturate_variable(&j, v).unwrap()), vec!["t1 - t2"]);
        }
        let k = ideal(3, &["t1 t2^2 - t3^3"], Some(&[1, 1, 1]));
        assert_eq!(gens_of(&saturate_variable(&k, 0).unwrap()), gens_of(&k));
    }

    #[test]
    fn saturate_all_examples() {
        let i = ideal(2, &["t1 t2 - t2^2"], Some(&[1, 1]));
        assert_eq!(gens_of(&saturate_all(&i).unwrap()), vec!["t1 - t2"]);
        let l = ideal(2, &["t1^6 - t2^6"], Some(&[1, 1]));
        assert_eq!(gens_of(&saturate_all(&l).unwrap()), vec!["t1^6 - t2^6"]);
    }

    #[test]
    fn needs_grading() {
        let i = ideal(2, &["t1 t2 - t2^2"], None);
        assert!(matches!(saturate_all(&i), Err(Error::Unsupported(_))));
    }

    #[test]
    fn lattice_ideal_detection() {
        assert!(is_lattice_ideal(&ideal(2, &["t1 - t2"], Some(&[1, 1]))).unwrap());
        assert!(!is_lattice_ideal(&ideal(2, &["t1 t2 - t2^2"], Some(&[1, 1]))).unwrap());
    }

    #[test]
    fn colon_by_monomial_matches_definition() {
        // (t1^2 t2 - t2^3) : t2 = (t1^2 - t2^2)
        let i = ideal(2, &["t1^2 t2 - t2^3"], Some(&[1, 1]));
        let c = colon_by_monomial(&i, &ExponentVector::new(vec![0, 1])).unwrap();
        assert_eq!(gens_of(&c), vec!["t1^2 - t2^2"]);
        // colon by 1 is the identity
        let same = colon_by_monomial(&i, &ExponentVector::zero(2)).unwrap();
        assert_eq!(gens_of(&same), gens_of(&i));
        // every f with t2 f in I lies in the colon
        let g = buchberger(&c, &c.default_order()).unwrap();
        let f = parse_binomial("t1^2 - t2^2", Some(2)).unwrap();
        assert!(normal_form(&f, &g).unwrap().is_zero());
    }
}
