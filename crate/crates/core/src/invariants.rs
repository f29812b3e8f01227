//! Closed formulas for regularity and degree of monomial curves, degenerate
//! tori and their gluings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ffvanish::is_prime;
use crate::intlat::{is_homogeneous, torsion_order, Lattice};
use crate::numsgp::{frobenius_number, NumericalSemigroup};
use crate::ring::Grading;

/// Exponents `d_1, …, d_s` of the curve `(y^{d_1}, …, y^{d_s})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    d: Grading,
    r: u64,
    reduced: NumericalSemigroup,
}

impl CurveSpec {
    pub fn new(d: Grading) -> Result<Self> {
        let (reduced, r) = NumericalSemigroup::reduced(&d.weights().iter().map(|&x| x as u64).collect::<Vec<_>>())?;
        Ok(CurveSpec { d, r, reduced })
    }

    pub fn from_exponents(d: &[u32]) -> Result<Self> {
        Self::new(Grading::new(d.to_vec())?)
    }

    pub fn grading(&self) -> &Grading {
        &self.d
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn reduced_semigroup(&self) -> &NumericalSemigroup {
        &self.reduced
    }
}

/// A degenerate torus `{[x_1^{v_1} : ⋯ : x_s^{v_s}]}` over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSpec {
    q: u64,
    v: Vec<u64>,
}

impl TorusSpec {
    pub fn new(q: u64, v: Vec<u64>) -> Result<Self> {
        if !is_prime(q) || q < 3 {
            return Err(Error::UnsupportedField(q));
        }
        if v.is_empty() || v.contains(&0) {
            return Err(Error::invalid("torus exponents must be positive"));
        }
        Ok(TorusSpec { q, v })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn v(&self) -> &[u64] {
        &self.v
    }

    /// `d_i = (q - 1) / gcd(v_i, q - 1)`.
    pub fn d(&self) -> Grading {
        let m = self.q - 1;
        let w = self.v.iter().map(|&vi| (m / vi.gcd(&m)) as u32).collect();
        Grading::new(w).expect("positive weights")
    }
}

fn require_two(d: &Grading) -> Result<()> {
    if d.len() < 2 {
        return Err(Error::invalid("need at least two exponents"));
    }
    Ok(())
}

/// `r·g(S) + 1 + Σ (d_i - 1)`.
pub fn mcurve_regularity(spec: &CurveSpec) -> Result<i64> {
    require_two(&spec.d)?;
    let g = frobenius_number(&spec.reduced);
    let extra: i64 = spec.d.weights().iter().map(|&x| x as i64 - 1).sum();
    Ok(spec.r as i64 * g + 1 + extra)
}

/// `d_1 ⋯ d_s / r`.
pub fn mcurve_degree(spec: &CurveSpec) -> Result<u64> {
    require_two(&spec.d)?;
    Ok(spec.d.product() / spec.r)
}

/// `(d_1 ⋯ d_s / max d_i) · deg_I`.
pub fn degree_transfer(d: &Grading, deg_i: u64) -> u64 {
    d.product() / d.max() * deg_i
}

/// `(max d_i / r) · |T(Z^s / L)|` for a homogeneous lattice of rank `s - 1`.
pub fn lattice_degree_dim1(l: &Lattice, d: &Grading) -> Result<BigInt> {
    Error::check_len(l.ambient_dim(), d.len())?;
    if l.rank() + 1 != d.len() {
        return Err(Error::invalid(format!("lattice has rank {}, expected {}", l.rank(), d.len() - 1)));
    }
    if !is_homogeneous(l, d)? {
        return Err(Error::invalid("lattice is not homogeneous for the grading"));
    }
    Ok(BigInt::from(d.max() / d.gcd()) * torsion_order(l))
}

/// `(reg, deg)` of the vanishing ideal of a degenerate torus.
pub fn degenerate_torus_invariants(spec: &TorusSpec) -> Result<(i64, u64)> {
    let d = spec.d();
    let (reduced, r) = NumericalSemigroup::reduced(&d.weights().iter().map(|&x| x as u64).collect::<Vec<_>>())?;
    let g = frobenius_number(&reduced);
    let extra: i64 = d.weights().iter().map(|&x| x as i64 - 1).sum();
    Ok((r as i64 * g + 1 + extra, d.product() / r))
}

const PRIME_SCAN_CAP: u64 = 1_000_000;

/// Smallest prime `q ≥ 3` with every `d_i` dividing `q - 1`, and
/// `v_i = (q - 1) / d_i`, so that the torus has type `d`.
pub fn prescribe_regularity(d: &Grading) -> Result<TorusSpec> {
    let l = d.lcm();
    let mut q = l + 1;
    while q <= PRIME_SCAN_CAP {
        if q >= 3 && is_prime(q) {
            let v = d.weights().iter().map(|&x| (q - 1) / x as u64).collect();
            return TorusSpec::new(q, v);
        }
        q += l;
    }
    Err(Error::NotFound(format!("no prime q ≡ 1 mod {l} below {PRIME_SCAN_CAP}")))
}

/// `Σ reg_k + (c - 1)(ℓ - 1)` for `c` glued pieces.
pub fn additive_regularity(parts: &[i64], ell: u64) -> Result<i64> {
    if parts.is_empty() {
        return Err(Error::invalid("need at least one part"));
    }
    let c = parts.len() as i64;
    let ell = ell.to_i64().ok_or(Error::Overflow)?;
    Ok(parts.iter().sum::<i64>() + (c - 1) * (ell - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{lattice_ideal_generators, BinomialIdeal};
    use crate::hilbert::{degree_dim1_standard, ideal_hilbert, reg_cm, HilbertFunctionTable};
    use crate::intlat::{homogenize_lattice, kernel_lattice, IntMatrix};

    fn curve(d: &[u32]) -> CurveSpec {
        CurveSpec::from_exponents(d).unwrap()
    }

    fn g(d: &[u32]) -> Grading {
        Grading::new(d.to_vec()).unwrap()
    }

    /// Regularity and degree of `I(D(L))` for `L = ker(d)` via Hilbert series.
    fn curve_by_series(d: &[u32]) -> (i64, u64) {
        let a = IntMatrix::from_rows(d.len(), &[d.iter().map(|&x| x as i64).collect()]).unwrap();
        let l = homogenize_lattice(&kernel_lattice(&a), &g(d)).unwrap();
        let std = Grading::standard(d.len());
        let i: BinomialIdeal = lattice_ideal_generators(&l, &std).unwrap();
        let f = ideal_hilbert(&i, &i.default_order(), &std).unwrap();
        let reg = reg_cm(&f, d.len() - 1).unwrap();
        let t = HilbertFunctionTable::from_series(&f, (reg.max(0) as usize) + 4).unwrap();
        (reg, degree_dim1_standard(&t).unwrap())
    }

    #[test]
    fn curve_examples() {
        assert_eq!(mcurve_regularity(&curve(&[2, 3])).unwrap(), 5);
        assert_eq!(mcurve_regularity(&curve(&[1, 1])).unwrap(), 0);
        assert_eq!(mcurve_regularity(&curve(&[4, 6])).unwrap(), 11);
        assert_eq!(mcurve_degree(&curve(&[2, 3])).unwrap(), 6);
        assert_eq!(mcurve_degree(&curve(&[1, 1])).unwrap(), 1);
        assert_eq!(mcurve_degree(&curve(&[4, 6])).unwrap(), 12);
        assert_eq!(curve_by_series(&[2, 3]), (5, 6));
        assert_eq!(curve_by_series(&[4, 6]), (11, 12));
        assert!(mcurve_regularity(&curve(&[3])).is_err());
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(degree_transfer(&g(&[2, 3]), 3), 6);
        assert_eq!(degree_transfer(&g(&[1, 1, 1]), 7), 7);
        assert_eq!(degree_transfer(&g(&[2, 2]), 1), 2);
        let l = Lattice::from_rows(2, &[vec![3, -2]]).unwrap();
        assert_eq!(lattice_degree_dim1(&l, &g(&[2, 3])).unwrap(), BigInt::from(3));
        let l = Lattice::from_rows(2, &[vec![1, -1]]).unwrap();
        assert_eq!(lattice_degree_dim1(&l, &g(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(lattice_degree_dim1(&l, &g(&[2, 2])).unwrap(), BigInt::from(1));
        let l = Lattice::from_rows(2, &[vec![2, -2]]).unwrap();
        assert_eq!(lattice_degree_dim1(&l, &g(&[1, 1])).unwrap(), BigInt::from(2));
        let z = Lattice::zero(2);
        assert!(lattice_degree_dim1(&z, &g(&[1, 1])).is_err());
    }

    #[test]
    fn torus_examples() {
        let t = TorusSpec::new(5, vec![1, 2]).unwrap();
        assert_eq!(t.d(), g(&[4, 2]));
        assert_eq!(degenerate_torus_invariants(&t).unwrap(), (3, 4));
        let t = TorusSpec::new(3, vec![1, 1]).unwrap();
        assert_eq!(degenerate_torus_invariants(&t).unwrap(), (1, 2));
        let t = TorusSpec::new(7, vec![1, 1, 1]).unwrap();
        assert_eq!(degenerate_torus_invariants(&t).unwrap(), (10, 36));
        assert!(TorusSpec::new(6, vec![1]).is_err());
    }

    #[test]
    fn prescribe_examples() {
        for (d, q, v) in [(vec![2, 3], 7, vec![3, 2]), (vec![1, 1], 3, vec![2, 2]), (vec![4, 6], 13, vec![3, 2])] {
            let t = prescribe_regularity(&g(&d)).unwrap();
            assert_eq!((t.q(), t.v()), (q, &v[..]));
            assert_eq!(t.d(), g(&d));
            let c = curve(&d);
            assert_eq!(
                degenerate_torus_invariants(&t).unwrap(),
                (mcurve_regularity(&c).unwrap(), mcurve_degree(&c).unwrap())
            );
        }
    }

    #[test]
    fn additive_examples() {
        assert_eq!(additive_regularity(&[1, 1], 2).unwrap(), 3);
        assert_eq!(additive_regularity(&[7], 9).unwrap(), 7);
        assert_eq!(additive_regularity(&[0, 0, 0], 3).unwrap(), 4);
        assert!(additive_regularity(&[], 3).is_err());
    }
}
