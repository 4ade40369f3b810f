use num_bigint::BigInt;

use super::Rational;

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    Rational::from(acc)
}

/// Rising factorial `(m)_k = m (m+1) ... (m+k-1)`, with `(m)_0 = 1`.
pub fn pochhammer(m: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = m.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `pochhammer` for integer arguments.
pub fn poch(m: i64, k: usize) -> Rational {
    pochhammer(&Rational::integer(m), k)
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from(acc)
}
