use genpoly::oracle::{
    census_decomposition_check, enumerate_subspaces, generates_full_algebra, CensusOptions, FFMatrix, FFSubspace,
    PrimeField,
};
use genpoly::Error;

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

#[test]
fn e11_e12_e21_generate_m2() {
    let u = FFSubspace::from_matrices(f2(), 2, &[FFMatrix::unit(2, 0, 0), FFMatrix::unit(2, 0, 1), FFMatrix::unit(2, 1, 0)]);
    assert!(generates_full_algebra(&u));
}

#[test]
fn scalars_do_not_generate() {
    for d in 2..=4 {
        let u = FFSubspace::from_matrices(f2(), d, &[FFMatrix::identity(d)]);
        assert!(!generates_full_algebra(&u));
    }
}

#[test]
fn upper_triangular_is_closed() {
    let u = FFSubspace::from_matrices(f2(), 2, &[FFMatrix::unit(2, 0, 0), FFMatrix::unit(2, 0, 1), FFMatrix::unit(2, 1, 1)]);
    assert_eq!(u.dim(), 3);
    assert!(!generates_full_algebra(&u));
}

#[test]
fn grassmannian_count_d3_m2() {
    assert_eq!(enumerate_subspaces(3, 2, 2, 1_000_000, |_| {}).unwrap(), 43435);
}

#[test]
fn decomposition_for_d1() {
    let r = census_decomposition_check(1, 3, 1, CensusOptions::default()).unwrap();
    assert_eq!(r.lhs, 3.into());
    assert_eq!(r.subspace_counts, vec![1, 1]);
}

#[test]
fn oversized_census_is_refused() {
    let err = enumerate_subspaces(3, 3, 5, 10_000_000, |_| {}).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }));
}
