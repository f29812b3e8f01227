mod common;

use common::*;
use latreg_core::gb::{buchberger, ideal_equal, normal_form, saturate_all};
use latreg_core::graph::{blocks, reg_bipartite_blocks, reg_bounds_bipartite};
use latreg_core::hilbert::{ideal_hilbert, lambda_product, reg_cm};
use latreg_core::intlat::{homogenize_lattice, saturate_lattice, torsion_order};
use latreg_core::invariants::{
    degenerate_torus_invariants, mcurve_degree, mcurve_regularity, prescribe_regularity, CurveSpec,
};
use latreg_core::{Binomial, BinomialIdeal, Grading, IntVector, Lattice, PrimeField};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn weights_and_seed() -> impl Strategy<Value = (Vec<u32>, u64)> {
    (2usize..=4).prop_flat_map(|s| (proptest::collection::vec(1u32..=4, s), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn homogenized_lattice_contains_exactly_the_scaled_vectors((d, seed) in weights_and_seed()) {
        let g = grading(&d);
        let l = random_homogeneous_lattice(&mut rng(seed), &d, 3);
        let dl = homogenize_lattice(&l, &g).unwrap();
        for b in l.basis_vectors().unwrap() {
            let scaled: Vec<i64> = b.entries().iter().zip(&d).map(|(&x, &w)| x * w as i64).collect();
            prop_assert!(dl.contains(&scaled).unwrap());
        }
        for b in dl.basis_vectors().unwrap() {
            prop_assert_eq!(b.entries().iter().sum::<i64>(), 0);
            let ok = b.entries().iter().zip(&d).all(|(&x, &w)| x % w as i64 == 0);
            prop_assert!(ok);
            let back: Vec<i64> = b.entries().iter().zip(&d).map(|(&x, &w)| x / w as i64).collect();
            prop_assert!(l.contains(&back).unwrap());
        }
    }

    #[test]
    fn differences_of_variables_lie_in_saturated_homogenization((d, seed) in weights_and_seed()) {
        let s = d.len();
        let l = random_homogeneous_lattice(&mut rng(seed), &d, 3);
        let sat = saturate_lattice(&homogenize_lattice(&l, &grading(&d)).unwrap());
        for a in 0..s {
            for b in a + 1..s {
                let mut v = vec![0i64; s];
                v[a] = 1;
                v[b] = -1;
                prop_assert!(sat.contains(&v).unwrap(), "e_{} - e_{} missing", a, b);
            }
        }
    }

    #[test]
    fn torsion_scales_by_product_of_weights((d, seed) in weights_and_seed()) {
        let g = grading(&d);
        prop_assume!(d.iter().fold(0u32, |a, &x| a.gcd(&x)) == 1);
        let l = random_homogeneous_lattice(&mut rng(seed), &d, 5);
        let dl = homogenize_lattice(&l, &g).unwrap();
        prop_assert_eq!(torsion_order(&dl), BigInt::from(g.product()) * torsion_order(&l));
    }

    #[test]
    fn lattice_vectors_reduce_to_zero((d, seed) in weights_and_seed()) {
        let g = grading(&d);
        let mut r = rng(seed);
        let l = random_homogeneous_lattice(&mut r, &d, 3);
        let i = lattice_ideal(&l, &g);
        let gb = buchberger(&i, &i.default_order()).unwrap();
        let basis = l.basis_vectors().unwrap();
        let mut v = vec![0i64; d.len()];
        for b in &basis {
            let c = rand::Rng::gen_range(&mut r, -2i64..=2);
            for (x, y) in v.iter_mut().zip(b.entries()) {
                *x += c * y;
            }
        }
        let nf = normal_form(&Binomial::from_int_vector(&IntVector(v)), &gb).unwrap();
        prop_assert!(nf.is_zero());
    }

    #[test]
    fn generated_ideal_is_saturation_of_basis_ideal((d, seed) in weights_and_seed()) {
        let g = grading(&d);
        let l = random_homogeneous_lattice(&mut rng(seed), &d, 3);
        let bins: Vec<Binomial> = l.basis_vectors().unwrap().iter().map(Binomial::from_int_vector).collect();
        let basis_ideal = BinomialIdeal::new(d.len(), bins, Some(g.clone())).unwrap();
        let sat = saturate_all(&basis_ideal).unwrap();
        let i = lattice_ideal(&l, &g);
        prop_assert!(ideal_equal(&sat, &i, &i.default_order()).unwrap());
    }

    #[test]
    fn expansions_are_nonnegative_and_lambda_preserves_regularity((d, seed) in weights_and_seed()) {
        let g = grading(&d);
        let l = random_homogeneous_lattice(&mut rng(seed), &d, 3);
        let i = lattice_ideal(&l, &g);
        let f = ideal_hilbert(&i, &i.default_order(), &g).unwrap();
        prop_assert!(f.expand(50).is_ok());
        let lam = lambda_product(&f);
        prop_assert!(lam.expand(50).is_ok());
        prop_assert_eq!(reg_cm(&f, d.len() - 1).unwrap(), reg_cm(&lam, d.len() - 1).unwrap());
    }

    #[test]
    fn prescribed_torus_matches_curve(d in proptest::collection::vec(1u32..=6, 2..=3)) {
        let g = Grading::new(d.clone()).unwrap();
        let t = prescribe_regularity(&g).unwrap();
        prop_assert_eq!(t.d(), g.clone());
        let c = CurveSpec::new(g).unwrap();
        prop_assert_eq!(
            degenerate_torus_invariants(&t).unwrap(),
            (mcurve_regularity(&c).unwrap(), mcurve_degree(&c).unwrap())
        );
    }

    #[test]
    fn blocks_partition_edges_and_bounds_bracket(seed in any::<u64>(), connected in any::<bool>()) {
        let g = random_bipartite_graph(&mut rng(seed), 3, 7, connected);
        let dec = blocks(&g);
        let mut seen: Vec<(usize, usize)> = dec.blocks.iter().flatten().copied().collect();
        seen.sort();
        let mut all = g.edges().to_vec();
        all.sort();
        prop_assert_eq!(seen, all);
        let f = PrimeField::new(3).unwrap();
        let reg = reg_bipartite_blocks(&g, &f).unwrap();
        if g.is_connected() {
            let (lo, hi) = reg_bounds_bipartite(&g, &f).unwrap();
            prop_assert!(lo <= reg && reg <= hi);
        }
    }
}

#[test]
fn saturation_leaves_lattice_ideals_alone() {
    let l = Lattice::from_rows(3, &[vec![1, -2, 1], vec![2, -1, -1]]).unwrap();
    let i = lattice_ideal(&l, &Grading::standard(3));
    let sat = saturate_all(&i).unwrap();
    assert!(ideal_equal(&i, &sat, &i.default_order()).unwrap());
}
