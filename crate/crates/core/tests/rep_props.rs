//! Property tests for the matrix representations: the left-regular matrix
//! is a faithful homomorphism whose action reproduces the product, the two
//! vectorization orders agree up to the index swap, and the eigenbasis
//! projection round-trips.

use proptest::prelude::*;

use sedeon::algebra::{Complex64, Sedeon};
use sedeon::matrix_rep::{
    dirac_project, dirac_reassemble, left_regular_matrix, left_regular_matrix_amajor,
    swap_ordering, vec_components, vec_components_amajor,
};

fn sedeon_from(xs: [f64; 32]) -> Sedeon {
    let mut comps = [Complex64::new(0.0, 0.0); 16];
    for (i, slot) in comps.iter_mut().enumerate() {
        *slot = Complex64::new(xs[2 * i], xs[2 * i + 1]);
    }
    Sedeon::from_components(comps)
}

prop_compose! {
    fn any_sedeon()(xs in prop::array::uniform32(-1.0f64..1.0)) -> Sedeon {
        sedeon_from(xs)
    }
}

proptest! {
    #[test]
    fn matrix_action_is_the_product(a in any_sedeon(), b in any_sedeon()) {
        let acted = left_regular_matrix(&a).apply(&vec_components(&b));
        let direct = vec_components(&a.product(&b));
        let scale = (a.max_norm() * b.max_norm()).max(f64::MIN_POSITIVE);
        for i in 0..16 {
            prop_assert!((acted[i] - direct[i]).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn matrix_map_is_a_homomorphism(a in any_sedeon(), b in any_sedeon()) {
        let lhs = left_regular_matrix(&a.product(&b));
        let rhs = left_regular_matrix(&a).matmul(&left_regular_matrix(&b));
        let scale = (a.max_norm() * b.max_norm()).max(f64::MIN_POSITIVE);
        prop_assert!(lhs.sub(&rhs).max_abs() <= 1e-12 * scale);
    }

    #[test]
    fn vector_major_ordering_is_the_swapped_matrix(a in any_sedeon(), b in any_sedeon()) {
        let n_major = left_regular_matrix(&a);
        let a_major = left_regular_matrix_amajor(&a);
        prop_assert_eq!(swap_ordering(&n_major), a_major.clone());

        let acted = a_major.apply(&vec_components_amajor(&b));
        let direct = vec_components_amajor(&a.product(&b));
        let scale = (a.max_norm() * b.max_norm()).max(f64::MIN_POSITIVE);
        for i in 0..16 {
            prop_assert!((acted[i] - direct[i]).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn eigenbasis_projection_round_trips(a in any_sedeon()) {
        let back = dirac_reassemble(&dirac_project(&a));
        prop_assert!((back - a).max_norm() <= 1e-15 * a.max_norm().max(1.0));
    }
}

#[test]
fn matrix_of_zero_is_zero_and_faithful_on_basis() {
    assert_eq!(left_regular_matrix(&Sedeon::zero()).max_abs(), 0.0);
    // Faithfulness on the basis: all sixteen matrices are nonzero and
    // mutually orthogonal under the Frobenius inner product.
    let matrices: Vec<_> = (0..16)
        .map(|i| left_regular_matrix(&Sedeon::basis(i / 4, i % 4).unwrap()))
        .collect();
    for (i, mi) in matrices.iter().enumerate() {
        for (j, mj) in matrices.iter().enumerate() {
            let inner = mi.frobenius_inner(mj);
            let expected = if i == j { 16.0 } else { 0.0 };
            assert_eq!(inner, Complex64::new(expected, 0.0), "({i}, {j})");
        }
    }
}
