mod common;

use ckforms::linalg::{self, dot, orthogonal_project, q, qi, Rational, RationalMatrix};
use num_traits::Zero;
use proptest::prelude::*;

use common::{matrix, minor_rank, rational};

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

proptest! {
    #[test]
    fn rank_agrees_with_minors(m in matrix(5)) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn rank_plus_nullity(m in matrix(6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_killed_and_independent(m in matrix(6)) {
        let k = m.kernel_basis();
        for v in &k {
            prop_assert!(is_zero_vec(&m.mul_vec(v).unwrap()));
        }
        if !k.is_empty() {
            prop_assert_eq!(RationalMatrix::from_rows(k.clone()).unwrap().rank(), k.len());
        }
    }

    #[test]
    fn solve_finds_preimages(m in matrix(5), x in proptest::collection::vec(rational(), 5)) {
        let x = &x[..m.cols()];
        let b = m.mul_vec(x).unwrap();
        let y = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn projection_is_idempotent_and_orthogonal(
        basis in proptest::collection::vec(proptest::collection::vec(rational(), 4), 1..=3),
        v in proptest::collection::vec(rational(), 4),
    ) {
        let independent = RationalMatrix::from_rows(basis.clone()).unwrap().rank() == basis.len();
        match orthogonal_project(&v, &basis, dot) {
            Ok(p) => {
                prop_assert!(independent);
                let twice = orthogonal_project(&p, &basis, dot).unwrap();
                prop_assert_eq!(&twice, &p);
                let r: Vec<Rational> = v.iter().zip(&p).map(|(a, b)| a - b).collect();
                for b in &basis {
                    prop_assert!(dot(&r, b).is_zero());
                }
            }
            Err(_) => prop_assert!(!independent),
        }
    }
}

#[test]
fn small_cases() {
    assert_eq!(RationalMatrix::identity(2).rank(), 2);
    assert!(RationalMatrix::identity(2).kernel_basis().is_empty());
    assert_eq!(RationalMatrix::zeros(3, 3).rank(), 0);
    let m = RationalMatrix::from_rows(vec![vec![qi(1), qi(-1)]]).unwrap();
    let k = m.kernel_basis();
    assert_eq!(k.len(), 1);
    assert_eq!(linalg::normalize_leading(&k[0]), vec![qi(1), qi(1)]);
    let p = orthogonal_project(&[qi(1), qi(1)], &[vec![qi(1), qi(0)]], dot).unwrap();
    assert_eq!(p, vec![qi(1), qi(0)]);
    let v = vec![q(1, 2), q(3, 2)];
    assert_eq!(orthogonal_project(&v, &[v.clone()], dot).unwrap(), v);
}
