//! Exact coefficient arithmetic: arbitrary-precision rationals and prime
//! fields with a machine-word modulus. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, exact arbitrary precision.
    Rationals,
    /// The prime field F_p for a machine-word prime p.
    Prime(u64),
}

/// An element of a [`Field`]. Prime-field values are kept reduced into `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime_u64(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Input(format!("modulus {p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// True when the field has at least `n` elements.
    pub fn has_at_least(&self, n: u64) -> bool {
        match self {
            Field::Rationals => true,
            Field::Prime(p) => *p >= n,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F {p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64);
                Scalar::Mod(r as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                Scalar::Mod(r.to_u64().expect("reduced residue fits u64"))
            }
        }
    }

    /// True when `a` is a value of this field's representation.
    pub fn owns(&self, a: &Scalar) -> bool {
        matches!(
            (self, a),
            (Field::Rationals, Scalar::Rat(_)) | (Field::Prime(_), Scalar::Mod(_))
        )
    }

    fn rat<'a>(&self, a: &'a Scalar) -> &'a BigRational {
        match a {
            Scalar::Rat(r) => r,
            Scalar::Mod(_) => panic!("prime-field scalar used in a rational field"),
        }
    }

    fn modv(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Mod(v) => *v,
            Scalar::Rat(_) => panic!("rational scalar used in a prime field"),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match self {
            Field::Rationals => self.rat(a).is_zero(),
            Field::Prime(_) => self.modv(a) == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match self {
            Field::Rationals => self.rat(a).is_one(),
            Field::Prime(_) => self.modv(a) == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(self.rat(a) + self.rat(b)),
            Field::Prime(p) => Scalar::Mod(addmod(self.modv(a), self.modv(b), *p)),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(self.rat(a) - self.rat(b)),
            Field::Prime(p) => {
                let bv = self.modv(b);
                Scalar::Mod(addmod(self.modv(a), (*p - bv) % *p, *p))
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(self.rat(a) * self.rat(b)),
            Field::Prime(p) => Scalar::Mod(mulmod(self.modv(a), self.modv(b), *p)),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(-self.rat(a)),
            Field::Prime(p) => {
                let v = self.modv(a);
                Scalar::Mod(if v == 0 { 0 } else { *p - v })
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::Input("division by zero".to_string()));
        }
        Ok(match self {
            Field::Rationals => Scalar::Rat(self.rat(a).recip()),
            Field::Prime(p) => Scalar::Mod(powmod(self.modv(a), *p - 2, *p)),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Uniform random element. Over the rationals this samples small
    /// integers, which is all the random substitutions need.
    pub fn random(&self, rng: &mut impl Rng) -> Scalar {
        match self {
            Field::Rationals => self.from_i64(rng.gen_range(-50..=50)),
            Field::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
        }
    }

    pub fn random_nonzero(&self, rng: &mut impl Rng) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match self {
            Field::Rationals => {
                let r = self.rat(a);
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Field::Prime(_) => self.modv(a).to_string(),
        }
    }

    /// Split into (is-negative-for-display, magnitude string). Prime-field
    /// values are never displayed with a sign.
    pub fn sign_split(&self, a: &Scalar) -> (bool, String) {
        match self {
            Field::Rationals => {
                let r = self.rat(a);
                if r.is_negative() {
                    (true, self.format(&Scalar::Rat(-r)))
                } else {
                    (false, self.format(a))
                }
            }
            Field::Prime(_) => (false, self.format(a)),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(32003));
        assert!(!is_prime_u64(4));
        assert!(!is_prime_u64(32001));
        assert!(Field::prime(4).is_err());
    }

    #[test]
    fn prime_field_arithmetic_is_exact_mod_p() {
        let f = Field::prime(32003).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Mod(32002));
        let b = f.inv(&f.from_i64(7)).unwrap();
        assert!(f.is_one(&f.mul(&b, &f.from_i64(7))));
        assert!(f.is_zero(&f.add(&a, &f.one())));
    }

    #[test]
    fn rational_arithmetic() {
        let f = Field::Rationals;
        let half = f.div(&f.one(), &f.from_i64(2)).unwrap();
        let sum = f.add(&half, &half);
        assert!(f.is_one(&sum));
        assert_eq!(f.format(&half), "1/2");
    }
}
