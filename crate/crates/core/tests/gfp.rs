use proptest::prelude::*;

use scb_core::ccm::int_det;
use scb_core::gfp::{inverse, BitMatrix, FieldMatrix};
use scb_core::Error;

const PRIMES: [u32; 6] = [2, 3, 5, 7, 13, 31];

fn matrix() -> impl Strategy<Value = (u32, usize, usize, Vec<i64>)> {
    (0..PRIMES.len(), 1usize..7, 1usize..7).prop_flat_map(|(pi, r, c)| {
        let p = PRIMES[pi];
        (
            Just(p),
            Just(r),
            Just(c),
            prop::collection::vec(0..p as i64, r * c),
        )
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_cols((p, r, c, e) in matrix()) {
        let m = FieldMatrix::from_flat(r, c, &e, p).unwrap();
        let basis = m.null_space();
        prop_assert_eq!(m.rank() + basis.dimension(), c);
        for v in &basis.vectors {
            prop_assert!(v.iter().any(|&x| x != 0));
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn det_zero_iff_rank_deficient((p, n, _, e) in (0..PRIMES.len(), 1usize..6).prop_flat_map(|(pi, n)| {
        let p = PRIMES[pi];
        (Just(p), Just(n), Just(n), prop::collection::vec(0..p as i64, n * n))
    })) {
        let m = FieldMatrix::from_flat(n, n, &e, p).unwrap();
        prop_assert_eq!(m.det().unwrap() == 0, m.rank() < n);
    }

    #[test]
    fn det_matches_integer_det(e in prop::collection::vec(-9i64..10, 16)) {
        let rows: Vec<Vec<i64>> = e.chunks(4).map(<[i64]>::to_vec).collect();
        let exact = int_det(&rows);
        for p in [13u32, 31, 67] {
            let m = FieldMatrix::from_rows(&rows, p).unwrap();
            prop_assert_eq!(m.det().unwrap() as i128, exact.rem_euclid(p as i128));
        }
    }

    #[test]
    fn solve_affine_consistent((p, r, c, e) in matrix(), seed in prop::collection::vec(0u32..1000, 6)) {
        let m = FieldMatrix::from_flat(r, c, &e, p).unwrap();
        let x: Vec<u32> = (0..c).map(|i| seed[i] % p).collect();
        let target = m.mul_vec(&x).unwrap();
        let y = m.solve_affine(&target).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), target);
    }

    #[test]
    fn gf2_rank_matches_field_kernel(r in 1usize..12, c in 1usize..12, bits in prop::collection::vec(any::<bool>(), 144)) {
        let mut b = BitMatrix::zeros(r, c);
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = bits[i * 12 + j];
                b.set(i, j, v);
                e.push(v as i64);
            }
        }
        let f = FieldMatrix::from_flat(r, c, &e, 2).unwrap();
        prop_assert_eq!(b.rank(), f.rank());
    }

    #[test]
    fn inverse_is_inverse(pi in 0..PRIMES.len(), a in 1u32..10_000) {
        let p = PRIMES[pi];
        let a = a % p;
        prop_assume!(a != 0);
        prop_assert_eq!(a as u64 * inverse(a, p) as u64 % p as u64, 1);
    }
}

#[test]
fn rejects_composite_modulus() {
    assert!(matches!(FieldMatrix::zeros(2, 2, 4), Err(Error::NotPrime(4))));
}

#[test]
fn inconsistent_system_has_no_solution() {
    let m = FieldMatrix::zeros(2, 2, 7).unwrap();
    assert_eq!(m.solve_affine(&[1, 0]).unwrap(), None);
}

#[test]
fn identity_solves_to_target() {
    let m = FieldMatrix::identity(3, 13).unwrap();
    assert_eq!(m.solve_affine(&[4, 0, 12]).unwrap(), Some(vec![4, 0, 12]));
}
