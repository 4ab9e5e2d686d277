use genpoly::algebra::{falling_q_product, gaussian_binomial, zpoly::ZPoly};
use genpoly::oracle::{closure, closure_rounds, generates_full_algebra, FFMatrix, FFSubspace, PrimeField, Vector, MAX_N};
use genpoly::series::{QSeries, Twist};
use genpoly::{QPoly, QRatFunc, Rational, UPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|cs| QPoly::from_i64s(&cs))
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = QRatFunc> {
    (small_poly(), nonzero_poly(), 1i64..=3).prop_map(|(n, d, c)| {
        QRatFunc::ratio(&n, &d).unwrap().scale(&Rational::new(1.into(), c.into()))
    })
}

const N: usize = 6;

/// A series with zero constant term and coefficients in `Q(q)`.
fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(ratfunc(), N).prop_map(|cs| {
        let mut all = vec![QRatFunc::zero()];
        all.extend(cs);
        QSeries::new(N, all)
    })
}

fn unit_series() -> impl Strategy<Value = QSeries> {
    series().prop_map(|s| s.add(&QSeries::one(N)).unwrap())
}

/// `Exp` by solving `Log(f) = g` one degree at a time: the `t^d`
/// coefficient of `Log(f)` is `f_d` plus terms of lower degree.
fn exp_by_iteration(g: &QSeries) -> QSeries {
    let mut f = QSeries::one(N);
    for d in 1..=N {
        let l = f.plethystic_log().unwrap();
        let delta = g.coeff(d).unwrap().sub(l.coeff(d).unwrap());
        f = f.add(&QSeries::monomial(N, delta, d)).unwrap();
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfunc_canonical_form(n in small_poly(), d in nonzero_poly(), r in nonzero_poly()) {
        let a = QRatFunc::ratio(&n, &d).unwrap();
        let b = QRatFunc::ratio(&n.mul(&r), &d.mul(&r)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string(), b.to_string());
        if !a.is_zero() {
            prop_assert!(a.den().leading() == Some(Rational::from_integer(1.into())));
        }
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn qpoly_division_with_remainder(a in small_poly(), b in nonzero_poly()) {
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(quot.mul(&b).add(&rem), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn zpoly_gcd_divides(a in prop::collection::vec(-5i64..=5, 0..5), b in prop::collection::vec(-5i64..=5, 0..5),
                         c in prop::collection::vec(-3i64..=3, 1..4)) {
        let (a, b, c) = (ZPoly::from_i64s(&a), ZPoly::from_i64s(&b), ZPoly::from_i64s(&c));
        prop_assume!(!c.is_zero());
        let (ac, bc) = (a.mul(&c), b.mul(&c));
        let g = ac.gcd(&bc);
        if ac.is_zero() && bc.is_zero() {
            prop_assert!(g.is_zero());
        } else {
            prop_assert!(ac.div_exact(&g).is_some());
            prop_assert!(bc.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.primitive()).is_some());
        }
    }

    #[test]
    fn gaussian_binomial_pascal(a in 1i64..=9, b in 1u32..=9) {
        let lhs = gaussian_binomial(a, b);
        let rhs = gaussian_binomial(a - 1, b - 1).add(&QRatFunc::q_pow(b as i64).mul(&gaussian_binomial(a - 1, b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gaussian_binomial_at_one(a in 0i64..=12, b in 0u32..=12) {
        let expect = if (b as i64) > a {
            BigInt::from(0)
        } else {
            (0..b as i64).fold(BigInt::from(1), |acc, k| acc * (a - k) / (k + 1))
        };
        prop_assert_eq!(gaussian_binomial(a, b).eval_int(1).unwrap(), Rational::from_integer(expect));
    }

    #[test]
    fn exp_log_round_trip(g in series()) {
        let f = g.plethystic_exp().unwrap();
        prop_assert_eq!(f.constant_term(), &QRatFunc::one());
        prop_assert_eq!(f.plethystic_log().unwrap(), g.clone());
        prop_assert_eq!(f.clone(), exp_by_iteration(&g));
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn exp_is_a_homomorphism(f in series(), g in series()) {
        let lhs = f.add(&g).unwrap().plethystic_exp().unwrap();
        let rhs = f.plethystic_exp().unwrap().mul(&g.plethystic_exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_is_a_homomorphism(f in series(), g in series(), i in 1usize..=4) {
        prop_assert_eq!(f.mul(&g).unwrap().adams(i), f.adams(i).mul(&g.adams(i)).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().adams(i), f.adams(i).add(&g.adams(i)).unwrap());
        prop_assert_eq!(f.adams(i).adams(2), f.adams(2 * i));
    }

    #[test]
    fn twist_turns_twisted_product_into_product(f in unit_series(), g in unit_series(), m in 0u32..=3) {
        let lhs = f.twisted_product(&g, m).unwrap().twist_fixed(m);
        let rhs = f.twist_fixed(m).mul(&g.twist_fixed(m)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.twist_fixed(m).twist_fixed_inverse(m), f.clone());
        prop_assert_eq!(f.twist_fixed_inverse(m).twist_fixed(m), f);
    }

    #[test]
    fn two_variable_twist_specializes(f in series(), m in 0u32..=4) {
        let fu = f.to_useries().map(|d, c| c.mul(&UPoly::u().pow(d as u32)));
        let lhs = Twist::TwoVariable.apply(&fu).at_u_q_pow(m as i64);
        prop_assert_eq!(lhs, fu.at_u_q_pow(m as i64).twist_fixed(m));
        prop_assert_eq!(Twist::TwoVariable.apply_inverse(&Twist::TwoVariable.apply(&fu)), fu);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn falling_product_roots(a in 0u32..=8, k in 0i64..=10) {
        let p = falling_q_product(&UPoly::u(), a);
        let v = p.at_u_q_pow(k);
        prop_assert_eq!(v.is_zero(), k < a as i64);
    }
}

fn field_and_size() -> impl Strategy<Value = (PrimeField, usize)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=3).prop_map(|(p, d)| (PrimeField::new(p).unwrap(), d))
}

fn vectors(p: u32, d: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(0..p as u8, d * d), 0..=k).prop_map(|vs| {
        vs.into_iter()
            .map(|v| {
                let mut out = [0u8; MAX_N];
                out[..v.len()].copy_from_slice(&v);
                out
            })
            .collect()
    })
}

fn subspace_with_conjugator() -> impl Strategy<Value = (FFSubspace, FFSubspace, FFMatrix)> {
    field_and_size().prop_flat_map(|(f, d)| {
        (vectors(f.p(), d, 4), vectors(f.p(), d, 1), vectors(f.p(), d, 1).prop_filter("nonempty", |v| !v.is_empty()))
            .prop_map(move |(u, v, g)| {
                let g = FFMatrix::from_vector(d, g[0]);
                (FFSubspace::span(f, d, &u), FFSubspace::span(f, d, &v), g)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_properties((u, v, g) in subspace_with_conjugator()) {
        let c = closure(&u);
        prop_assert!(u.is_subspace_of(&c));
        prop_assert_eq!(closure(&c), c.clone());
        let (c2, dims) = closure_rounds(&u);
        prop_assert_eq!(&c2, &c);
        prop_assert!(dims.len() <= u.d() * u.d() + 1);
        prop_assert!(dims[..dims.len() - 1].windows(2).all(|w| w[0] < w[1]));
        let uv: Vec<Vector> = u.basis().iter().chain(v.basis()).copied().collect();
        let uv = FFSubspace::span(u.field(), u.d(), &uv);
        prop_assert!(c.is_subspace_of(&closure(&uv)));
        prop_assert_eq!(generates_full_algebra(&u), c.dim() == u.d() * u.d());
        if g.inverse(u.field()).is_some() {
            let uc = u.conjugate(&g);
            prop_assert_eq!(generates_full_algebra(&uc), generates_full_algebra(&u));
            prop_assert_eq!(closure(&uc), c.conjugate(&g));
        }
    }
}
