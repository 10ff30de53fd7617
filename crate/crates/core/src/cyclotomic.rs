//! Exact arithmetic in the 12th cyclotomic field.
//!
//! Elements are stored as residues `c0 + c1 z + c2 z^2 + c3 z^3` modulo the
//! 12th cyclotomic polynomial `z^4 - z^2 + 1`, where `z = exp(2 pi i / 12)`.
//! Every stabilizer group that occurs for a wallpaper group has exponent
//! dividing 12, so all of their character values live here.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Q(z)`, `z` a primitive 12th root of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    coeffs: [BigRational; 4],
}

// z^k for k = 0..12 as integer residues modulo z^4 - z^2 + 1.
const POWERS: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl Cyclotomic {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        Cyclotomic { coeffs }
    }

    pub fn from_integers(coeffs: [i64; 4]) -> Self {
        Cyclotomic { coeffs: coeffs.map(|c| BigRational::from_integer(BigInt::from(c))) }
    }

    pub fn zero() -> Self {
        Self::from_integers([0; 4])
    }

    pub fn one() -> Self {
        Self::from_integers([1, 0, 0, 0])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_integers([n, 0, 0, 0])
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = q;
        c
    }

    /// `z^k`, with the exponent taken modulo 12.
    pub fn zeta12(k: i64) -> Self {
        Self::from_integers(POWERS[k.rem_euclid(12) as usize])
    }

    /// `exp(2 pi i k / n)` for `n` dividing 12.
    ///
    /// Panics if `n` does not divide 12.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0 && 12 % n == 0, "order {n} does not divide 12");
        Self::zeta12(k * i64::from(12 / n))
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, when the element lies in `Z`.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Complex conjugation: the substitution `z -> z^11`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &POWERS[(11 * k) % 12];
            for (slot, &p) in out.coeffs.iter_mut().zip(image.iter()) {
                if p != 0 {
                    *slot += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { coeffs: [0, 1, 2, 3].map(|i| &self.coeffs[i] * q) }
    }
}

fn reduce(mut poly: [BigRational; 7]) -> [BigRational; 4] {
    // z^k = z^(k-2) - z^(k-4)
    for k in (4..7).rev() {
        let top = core::mem::replace(&mut poly[k], BigRational::zero());
        if top.is_zero() {
            continue;
        }
        poly[k - 2] += &top;
        poly[k - 4] -= &top;
    }
    let [a, b, c, d, ..] = poly;
    [a, b, c, d]
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: [0, 1, 2, 3].map(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: [0, 1, 2, 3].map(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut poly: [BigRational; 7] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Cyclotomic { coeffs: reduce(poly) }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { coeffs: [0, 1, 2, 3].map(|i| -&self.coeffs[i]) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let monomial = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => alloc::format!("z^{k}"),
            };
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            f.write_str(&monomial)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// JSON form: four coefficients, integers as numbers and other rationals as
// "p/q" strings.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for c in &self.coeffs {
            match c.is_integer().then(|| i64::try_from(c.to_integer())) {
                Some(Ok(n)) => seq.serialize_element(&n)?,
                _ => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl CoeffRepr {
    fn into_rational(self) -> Result<BigRational, String> {
        match self {
            CoeffRepr::Int(n) => Ok(BigRational::from_integer(BigInt::from(n))),
            CoeffRepr::Text(s) => parse_rational(&s).ok_or_else(|| alloc::format!("bad rational {s:?}")),
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;
        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = Cyclotomic;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of four rational coefficients")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Cyclotomic, A::Error> {
                let mut coeffs: Vec<BigRational> = Vec::with_capacity(4);
                while let Some(c) = seq.next_element::<CoeffRepr>()? {
                    coeffs.push(c.into_rational().map_err(de::Error::custom)?);
                }
                let coeffs: [BigRational; 4] =
                    coeffs.try_into().map_err(|v: Vec<_>| de::Error::invalid_length(v.len(), &self))?;
                Ok(Cyclotomic::new(coeffs))
            }
        }
        deserializer.deserialize_seq(CoeffVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_cycle_with_period_twelve() {
        let z = Cyclotomic::zeta12(1);
        let mut acc = Cyclotomic::one();
        for k in 0..12 {
            assert_eq!(acc, Cyclotomic::zeta12(k), "z^{k}");
            acc = &acc * &z;
        }
        assert_eq!(acc, Cyclotomic::one());
    }

    #[test]
    fn minus_one_is_z_to_the_six() {
        assert_eq!(Cyclotomic::zeta12(6), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::zeta12(6).to_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn conjugate_is_inverse_on_roots_of_unity() {
        for k in 0..12 {
            let w = Cyclotomic::zeta12(k);
            assert_eq!(&w * &w.conj(), Cyclotomic::one());
            assert_eq!(w.conj(), Cyclotomic::zeta12(-k));
        }
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s =
            &(&Cyclotomic::root_of_unity(3, 0) + &Cyclotomic::root_of_unity(3, 1)) + &Cyclotomic::root_of_unity(3, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn i_squared() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
        assert_eq!(i.to_rational(), None);
    }

    #[test]
    fn display_reduces_before_printing() {
        let w = &Cyclotomic::zeta12(5) + &Cyclotomic::from_rational(BigRational::new(1.into(), 3.into()));
        assert_eq!(alloc::format!("{w}"), "1/3 - z + z^3");
        assert_eq!(alloc::format!("{}", Cyclotomic::zero()), "0");
    }
}
