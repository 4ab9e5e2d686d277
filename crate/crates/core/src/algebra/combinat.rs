use super::{CoeffRing, QPoly, QRatFunc, UPoly};

/// `q^k - 1` for any integer `k`.
fn q_pow_minus_one(k: i64) -> QRatFunc {
    QRatFunc::q_pow(k).sub(&QRatFunc::one())
}

/// `(q^r - 1)(q^(r-1) - 1) ... (q - 1)`, the empty product for `r = 0`.
pub fn q_power_product(r: u32) -> QPoly {
    (1..=r as usize).fold(QPoly::one(), |acc, i| acc.mul(&QPoly::q_pow(i).sub(&QPoly::one())))
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> QPoly {
    QPoly::from_i64s(&vec![1; n as usize])
}

/// Gaussian binomial `[a choose b]_q` for any integer `a`, as the reduced
/// quotient of `(q^a - 1)...(q^(a-b+1) - 1)` by `(q^b - 1)...(q - 1)`.
pub fn gaussian_binomial(a: i64, b: u32) -> QRatFunc {
    let b = b as i64;
    let num = (0..b).fold(QRatFunc::one(), |acc, i| acc.mul(&q_pow_minus_one(a - i)));
    if num.is_zero() {
        return num;
    }
    let den = QRatFunc::from_poly(&q_power_product(b as u32));
    num.div(&den).expect("q-power product is nonzero")
}

/// `(x - 1)(x - q)...(x - q^(r-1))`.
pub fn falling_q_product<R: CoeffRing>(x: &R, r: u32) -> R {
    (0..r as i64).fold(R::one(), |acc, i| {
        acc.mul(&x.sub(&R::from_ratfunc(QRatFunc::q_pow(i))))
    })
}

/// Möbius function by trial division.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1, "moebius is defined for positive integers");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `|PGL_d(F_q)| = (q^d - 1)(q^d - q)...(q^d - q^(d-1)) / (q - 1)`.
pub fn pgl_order(d: u32) -> QPoly {
    assert!(d >= 1);
    let gl = falling_q_product(&QRatFunc::q_pow(d as i64), d);
    gl.div(&QRatFunc::from_poly(&QPoly::from_i64s(&[-1, 1])))
        .ok()
        .and_then(|f| f.to_poly())
        .expect("q - 1 divides |GL_d|")
}

/// Mahler-type basis element `prod_{i=1}^{l} (q^(1-i) u - 1) / (q^i - 1)`.
pub fn mahler_basis_element(l: u32) -> UPoly {
    (1..=l as i64).fold(UPoly::one(), |acc, i| {
        let lin = UPoly::u().scale(&QRatFunc::q_pow(1 - i)).sub(&UPoly::one());
        let den = q_pow_minus_one(i).inverse().expect("q^i - 1 is nonzero");
        acc.mul(&lin.scale(&den))
    })
}
