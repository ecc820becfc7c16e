use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

/// `n + C(n,2)·2^{n−2}`: the number of elemental inequalities (= |Δ1| + |Δ2|).
pub fn count_elemental(n: usize) -> BigInt {
    if n < 2 {
        return BigInt::from(n);
    }
    let pairs = BigInt::from(n * (n - 1) / 2);
    BigInt::from(n) + pairs * (BigInt::from(1) << (n - 2))
}

/// `|Δ0| = (6^n − 4·5^n + 6·4^n − 4·3^n + 2^n) / 4`.
///
/// The numerator counts assignments of the ground set to `{δ1, δ2, δ3, δ4, β,
/// unused}` with every `δ` nonempty (inclusion–exclusion); the two pair swaps
/// act freely on those, hence the division by four.
pub fn count_delta0(n: usize) -> BigInt {
    let p = |b: u32| -> BigInt { BigInt::from(b).pow(n as u32) };
    let numer: BigInt = p(6) - 4 * p(5) + 6 * p(4) - 4 * p(3) + p(2);
    let (q, r) = numer.div_rem(&BigInt::from(4));
    debug_assert!(r.is_zero(), "Δ0 count numerator not divisible by 4");
    q
}

/// `|Δ| = n + C(n,2)·2^{n−2} + ¼6^n − 5^n + (3/2)4^n − 3^n + ¼2^n`.
pub fn count_delta(n: usize) -> BigInt {
    count_elemental(n) + count_delta0(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The closed form evaluated term by term over the rationals.
    fn closed_form(n: u32) -> BigInt {
        use num_rational::BigRational;
        let r = |v: i64| BigRational::from_integer(v.into());
        let pw = |b: i64| BigRational::from_integer(BigInt::from(b).pow(n));
        let n_i = n as i64;
        let total = r(n_i)
            + r(n_i * (n_i - 1) / 2) * BigRational::from_integer(BigInt::from(1) << (n - 2))
            + pw(6) / r(4)
            - pw(5)
            + pw(4) * BigRational::new(3.into(), 2.into())
            - pw(3)
            + pw(2) / r(4);
        assert!(total.is_integer());
        total.to_integer()
    }

    #[test]
    fn known_values() {
        assert_eq!(count_delta(2), BigInt::from(3));
        assert_eq!(count_delta(3), BigInt::from(9));
        assert_eq!(count_delta(4), BigInt::from(34));
        assert_eq!(count_delta(5), BigInt::from(205));
        assert_eq!(count_delta0(4), BigInt::from(6));
        assert_eq!(count_delta0(3), BigInt::from(0));
        assert_eq!(count_elemental(4), BigInt::from(28));
    }

    #[test]
    fn matches_rational_closed_form() {
        for n in 2..=20 {
            assert_eq!(count_delta(n as usize), closed_form(n), "n={n}");
        }
    }
}
