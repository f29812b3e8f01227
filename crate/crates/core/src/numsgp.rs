//! Numerical semigroups: membership, Apéry sets and Frobenius numbers.
//!
//! Apéry sets are computed by the round-robin shortest-path method over the
//! residues modulo the smallest generator.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// Apéry set with respect to the smallest generator.
    apery: Vec<u64>,
}

impl NumericalSemigroup {
    /// Requires positive generators with gcd 1.
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidSemigroup(generators.to_vec()));
        }
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(generators.to_vec()));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let apery = round_robin(&gens);
        Ok(NumericalSemigroup { generators: gens, apery })
    }

    /// Divides out `r = gcd(generators)` and returns the semigroup on the
    /// quotients together with `r`.
    pub fn reduced(generators: &[u64]) -> Result<(Self, u64)> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidSemigroup(generators.to_vec()));
        }
        let r = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        let reduced: Vec<u64> = generators.iter().map(|&g| g / r).collect();
        Ok((Self::new(&reduced)?, r))
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }
}

/// Least element of `S` in each residue class modulo the smallest generator.
fn round_robin(gens: &[u64]) -> Vec<u64> {
    let m = gens[0] as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    for &a in &gens[1..] {
        let d = (a as usize).gcd(&m);
        let step = a % m as u64;
        for start in 0..d {
            // the minimum over this cycle is a valid starting point
            let cycle_len = m / d;
            let mut best = start;
            let mut r = start;
            for _ in 0..cycle_len {
                if dist[r] < dist[best] {
                    best = r;
                }
                r = (r + step as usize) % m;
            }
            if dist[best] == u64::MAX {
                continue;
            }
            let mut r = best;
            for _ in 0..cycle_len {
                let next = (r + step as usize) % m;
                let cand = dist[r].saturating_add(a);
                if cand < dist[next] {
                    dist[next] = cand;
                }
                r = next;
            }
        }
    }
    dist
}

/// `g(S)`, the largest integer not in `S`; −1 when `S = N`.
pub fn frobenius_number(s: &NumericalSemigroup) -> i64 {
    let max = *s.apery.iter().max().expect("nonempty Apéry set");
    max as i64 - s.multiplicity() as i64
}

/// For each residue `r mod m`, the least element of `S` congruent to `r`.
pub fn apery_set(s: &NumericalSemigroup, m: u64) -> Result<Vec<u64>> {
    if m == 0 || !membership(s, m as i64) {
        return Err(Error::invalid(format!("{m} is not a positive element of the semigroup")));
    }
    if m == s.multiplicity() {
        return Ok(s.apery.clone());
    }
    // w ∈ Ap(S, m) iff w ∈ S and w - m ∉ S; scan upward per residue
    let mut out = vec![None; m as usize];
    let mut found = 0;
    let mut n = 0u64;
    while found < m as usize {
        let r = (n % m) as usize;
        if out[r].is_none() && membership(s, n as i64) {
            out[r] = Some(n);
            found += 1;
        }
        n += 1;
    }
    Ok(out.into_iter().map(|x| x.expect("every residue is hit")).collect())
}

pub fn membership(s: &NumericalSemigroup, n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as u64;
    let m = s.multiplicity();
    n >= s.apery[(n % m) as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dynamic-programming membership up to `bound`, independent of the
    /// Apéry machinery.
    fn brute_members(gens: &[u64], bound: usize) -> Vec<bool> {
        let mut ok = vec![false; bound + 1];
        ok[0] = true;
        for n in 1..=bound {
            ok[n] = gens.iter().any(|&g| g as usize <= n && ok[n - g as usize]);
        }
        ok
    }

    fn brute_frobenius(gens: &[u64]) -> i64 {
        // Schur: g(S) <= (min - 1)(max - 1) - 1
        let lo = *gens.iter().min().unwrap() as usize;
        let hi = *gens.iter().max().unwrap() as usize;
        let bound = lo * hi + 1;
        let ok = brute_members(gens, bound);
        (0..=bound).rev().find(|&n| !ok[n]).map(|n| n as i64).unwrap_or(-1)
    }

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_number(&sg(&[2, 3])), 1);
        assert_eq!(frobenius_number(&sg(&[1])), -1);
        assert_eq!(frobenius_number(&sg(&[6, 9, 20])), 43);
        assert_eq!(brute_frobenius(&[6, 9, 20]), 43);
        assert_eq!(frobenius_number(&sg(&[3, 5])), 7);
    }

    #[test]
    fn gcd_must_be_one() {
        assert!(matches!(NumericalSemigroup::new(&[2, 4]), Err(Error::InvalidSemigroup(_))));
        assert!(NumericalSemigroup::new(&[]).is_err());
        let (s, r) = NumericalSemigroup::reduced(&[4, 6]).unwrap();
        assert_eq!((s.generators(), r), (&[2u64, 3][..], 2));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(apery_set(&sg(&[2, 3]), 2).unwrap(), vec![0, 3]);
        assert_eq!(apery_set(&sg(&[1]), 1).unwrap(), vec![0]);
        assert_eq!(apery_set(&sg(&[3, 5]), 3).unwrap(), vec![0, 10, 5]);
        assert_eq!(apery_set(&sg(&[3, 5]), 5).unwrap(), vec![0, 6, 12, 3, 9]);
        assert!(apery_set(&sg(&[3, 5]), 7).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[3, 5]);
        assert!(!membership(&s, 7));
        assert!(membership(&s, 8));
        assert!(membership(&s, 0));
        assert!(!membership(&s, -1));
    }

    #[test]
    fn sylvester_exhaustive() {
        for a in 1..=30u64 {
            for b in 1..=30u64 {
                if a.gcd(&b) == 1 {
                    let g = frobenius_number(&sg(&[a, b]));
                    assert_eq!(g, (a * b) as i64 - a as i64 - b as i64, "a={a} b={b}");
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn matches_brute_force(gens in proptest::collection::vec(1u64..=50, 1..=4)) {
                let g = gens.iter().fold(0u64, |a, &x| a.gcd(&x));
                prop_assume!(g == 1);
                let s = sg(&gens);
                let f = frobenius_number(&s);
                let mut sorted = gens.clone();
                sorted.sort();
                prop_assert_eq!(f, brute_frobenius(&sorted));
                let ok = brute_members(&gens, (f + 60).max(0) as usize);
                for (n, &member) in ok.iter().enumerate() {
                    prop_assert_eq!(membership(&s, n as i64), member);
                }
                if f >= 0 {
                    prop_assert!(!membership(&s, f));
                }
                let m = s.multiplicity();
                let ap = apery_set(&s, m).unwrap();
                prop_assert_eq!(*ap.iter().max().unwrap() as i64 - m as i64, f);
            }
        }
    }
}
