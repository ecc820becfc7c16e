use num_bigint::BigInt;
use num_rational::BigRational;

use super::EntropyVector;
use crate::Result;

/// `h*(α) = 2^n (1 − 2^{−|α|})`, which is strictly positive on every
/// nontrivial Ingleton term. All values are integers.
pub fn witness_fulldim(n: usize) -> Result<EntropyVector> {
    EntropyVector::from_fn(n, |a| {
        let v = (BigInt::from(1) << n) - (BigInt::from(1) << (n - a.len()));
        BigRational::from_integer(v)
    })
}

/// The modular function `h(α) = |α|` (entropy of independent uniform bits).
pub fn witness_modular(n: usize) -> Result<EntropyVector> {
    EntropyVector::from_fn(n, |a| BigRational::from_integer(BigInt::from(a.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entspace::{ingleton_expr, IngletonQuad, LinExpr, SubsetMask};
    use crate::Error;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn m(xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(xs.iter().copied())
    }

    #[test]
    fn fulldim_values() {
        let h = witness_fulldim(4).unwrap();
        assert_eq!(h.get(m(&[1])), &int(8));
        assert_eq!(h.get(SubsetMask::full(4)), &int(15));
        assert_eq!(witness_fulldim(2).unwrap().get(m(&[1, 2])), &int(3));
        assert_eq!(witness_fulldim(1).unwrap_err(), Error::GroundSetSize(1));
        assert_eq!(witness_fulldim(21).unwrap_err(), Error::GroundSetSize(21));
    }

    #[test]
    fn modular_values() {
        let h = witness_modular(4).unwrap();
        assert_eq!(h.get(m(&[1, 3])), &int(2));
        assert_eq!(witness_modular(2).unwrap().get(SubsetMask::EMPTY), &int(0));
        assert!(witness_modular(0).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let j = ingleton_expr(4, &IngletonQuad::new(m(&[1]), m(&[2]), m(&[3]), m(&[4]))).unwrap();
        // 5·12 − 2·8 − 12 − 2·14
        assert_eq!(j.evaluate(&witness_fulldim(4).unwrap()).unwrap(), int(4));
        assert_eq!(j.evaluate(&witness_modular(4).unwrap()).unwrap(), int(0));
        let h12 = LinExpr::from_terms(2, [(m(&[1, 2]), 1)]).unwrap();
        assert_eq!(h12.evaluate(&witness_modular(2).unwrap()).unwrap(), int(2));
        let zero = LinExpr::zero(3).unwrap();
        assert_eq!(zero.evaluate(&witness_fulldim(3).unwrap()).unwrap(), int(0));
        assert!(j.evaluate(&witness_modular(3).unwrap()).is_err());
    }
}
