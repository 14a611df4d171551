use proptest::prelude::*;

use renvlie::cli::{catalog, parse_unvalidated, serialize};
use renvlie::env::{AssocAlgebra, EnvAlgebra};
use renvlie::gfp::{Field, Subspace};
use renvlie::rla::RestrictedLieAlgebra;

fn vectors(p: u8, n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0..p, n), 0..=count)
}

fn span(f: Field, n: usize, rows: &[Vec<u8>]) -> Subspace {
    Subspace::from_coords(f, n, rows.iter().map(|r| r.as_slice()))
}

fn entry(name: &str) -> RestrictedLieAlgebra {
    catalog().into_iter().find(|e| e.name == name).unwrap().algebra().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_law(a in vectors(3, 5, 3), b in vectors(3, 5, 3), c in vectors(3, 5, 3)) {
        let f = Field::new(3).unwrap();
        let a = span(f, 5, &a);
        let b = span(f, 5, &b);
        let c = a.sum(&span(f, 5, &c)).unwrap();
        // A <= C implies A + (B ∩ C) = (A + B) ∩ C
        let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let rhs = a.sum(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rref_reduction_is_a_projection(rows in vectors(5, 6, 4), v in prop::collection::vec(0u8..5, 6)) {
        let f = Field::new(5).unwrap();
        let s = span(f, 6, &rows);
        let mut once = v.clone();
        s.reduce_coords(&mut once);
        let mut twice = once.clone();
        s.reduce_coords(&mut twice);
        prop_assert_eq!(&once, &twice);
        for &piv in s.pivots() {
            prop_assert_eq!(once[piv], 0);
        }
        let mut diff = v.clone();
        renvlie::gfp::add_scaled(f, &mut diff, 4, &once);
        prop_assert!(s.contains_coords(&diff));
        prop_assert!(s.rank() <= rows.len());
    }

    #[test]
    fn rank_is_invariant_under_padding(rows in vectors(2, 70, 6)) {
        let f = Field::new(2).unwrap();
        let s = span(f, 70, &rows);
        let widened: Vec<Vec<u8>> = rows.iter().map(|r| { let mut w = r.clone(); w.extend([0, 0]); w }).collect();
        prop_assert_eq!(span(f, 72, &widened).rank(), s.rank());
    }

    #[test]
    fn jacobi_and_pmap_homogeneity(
        x in prop::collection::vec(0u8..2, 5),
        y in prop::collection::vec(0u8..2, 5),
        z in prop::collection::vec(0u8..2, 5),
    ) {
        let l = entry("example-6-1");
        let f = l.field();
        let mut sum = l.bracket_coords(&x, &l.bracket_coords(&y, &z));
        renvlie::gfp::add_scaled(f, &mut sum, 1, &l.bracket_coords(&y, &l.bracket_coords(&z, &x)));
        renvlie::gfp::add_scaled(f, &mut sum, 1, &l.bracket_coords(&z, &l.bracket_coords(&x, &y)));
        prop_assert!(sum.iter().all(|&c| c == 0));
        let lhs = l.ad_matrix_coords(&l.pmap_coords(&x));
        prop_assert_eq!(lhs, l.ad_matrix_coords(&x).pow(2).unwrap());
    }

    #[test]
    fn pmap_is_p_homogeneous(x in prop::collection::vec(0u8..3, 3), c in 0u8..3) {
        let l = entry("torus-nonsolvable");
        let f = l.field();
        let cx: Vec<u8> = x.iter().map(|&a| f.mul(c, a)).collect();
        let expect: Vec<u8> = l.pmap_coords(&x).iter().map(|&a| f.mul(f.pow(c, 3), a)).collect();
        prop_assert_eq!(l.pmap_coords(&cx), expect);
    }

    #[test]
    fn pmap_matches_power_in_env(x in prop::collection::vec(0u8..5, 3)) {
        let l = entry("heisenberg-p5");
        let env = EnvAlgebra::build(&l).unwrap();
        prop_assert_eq!(env.embed_coords(&l.pmap_coords(&x)), env.power(&env.embed_coords(&x), 5));
    }

    #[test]
    fn involution_is_an_anti_homomorphism(
        a in prop::collection::vec(0u8..3, 27),
        b in prop::collection::vec(0u8..3, 27),
    ) {
        let l = entry("heisenberg-p3-central");
        let env = EnvAlgebra::build(&l).unwrap();
        let lhs = env.involution_coords(&env.multiply(&a, &b));
        let rhs = env.multiply(&env.involution_coords(&b), &env.involution_coords(&a));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(env.involution_coords(&env.involution_coords(&a)), a);
    }

    #[test]
    fn format_round_trip(
        p in prop::sample::select(vec![2u32, 3, 5, 7]),
        n in 1usize..5,
        seed in prop::collection::vec(any::<u8>(), 40),
    ) {
        let f = Field::new(p).unwrap();
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut it = seed.iter().cycle().map(|&s| s as i64);
        let mut b = RestrictedLieAlgebra::builder(f, names);
        for i in 0..n {
            for j in (i + 1)..n {
                let v: Vec<i64> = (0..n).map(|_| it.next().unwrap()).collect();
                b.bracket(i, j, &v).unwrap();
            }
            let v: Vec<i64> = (0..n).map(|_| it.next().unwrap()).collect();
            b.pmap(i, &v).unwrap();
        }
        let l = b.build_unchecked();
        prop_assert_eq!(parse_unvalidated(&serialize(&l)).unwrap(), l);
    }
}
