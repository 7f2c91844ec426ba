//! Arithmetic modulo the Mersenne prime `2^61 - 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Rational;

pub const P: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn reduce_int(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits")
}

/// The image of `x` in `F_p`, or `None` when `p` divides the denominator.
pub fn from_rational(x: &Rational) -> Option<u64> {
    let d = reduce_int(x.denom());
    if d.is_zero() {
        return None;
    }
    Some(mul(reduce_int(x.numer()), inv(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn field_basics() {
        assert_eq!(mul(inv(3), 3), 1);
        assert_eq!(from_rational(&rat(-1, 1)), Some(P - 1));
        assert_eq!(from_rational(&rat(3, 2)).map(|x| mul(x, 2)), Some(3));
        assert_eq!(sub(1, 2), P - 1);
        assert_eq!(add(P - 1, 1), 0);
    }
}
