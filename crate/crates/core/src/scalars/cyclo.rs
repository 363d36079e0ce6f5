//! Exact arithmetic in the degree-8 cyclotomic field Q(zeta), zeta = e^{i pi/4}.
//!
//! Elements are stored on the basis {1, zeta, zeta^2, zeta^3} with the
//! reduction rule zeta^4 = -1 always applied, so the coordinate vector is
//! the canonical representative.  The field contains i = zeta^2 and
//! sqrt(2) = zeta - zeta^3, which is everything the Cayley matrix and the
//! real-form conjugations need.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// An element of Q(zeta_8), coordinates over {1, zeta, zeta^2, zeta^3}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloScalar {
    c: [Rat; 4],
}

impl CycloScalar {
    pub fn new(c: [Rat; 4]) -> Self {
        CycloScalar { c }
    }

    pub fn zero() -> Self {
        CycloScalar {
            c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycloScalar {
            c: [r, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The imaginary unit i = zeta^2.
    pub fn i() -> Self {
        let mut c = Self::zero();
        c.c[2] = Rat::one();
        c
    }

    /// zeta itself, the paper's sqrt(2i) = e^{i pi/4}.
    pub fn zeta() -> Self {
        let mut c = Self::zero();
        c.c[1] = Rat::one();
        c
    }

    /// sqrt(2) = zeta - zeta^3.
    pub fn sqrt2() -> Self {
        let mut c = Self::zero();
        c.c[1] = Rat::one();
        c.c[3] = -Rat::one();
        c
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Rational part if the element lies in Q, else None.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Galois automorphism zeta -> zeta^k for odd k.
    pub fn galois(&self, k: u32) -> Self {
        debug_assert!(k % 2 == 1);
        let mut out = Self::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let e = (j as u32 * k) % 8;
            if e < 4 {
                out.c[e as usize] += cj.clone();
            } else {
                out.c[(e - 4) as usize] -= cj.clone();
            }
        }
        out
    }

    /// Complex conjugation, the automorphism zeta -> zeta^{-1} = -zeta^3.
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// Field inverse via the Galois norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero cyclotomic scalar".into()));
        }
        let cof = self.galois(3) * self.galois(5) * self.galois(7);
        let norm = self.clone() * cof.clone();
        let n = norm
            .as_rat()
            .expect("Galois norm must be rational");
        debug_assert!(!n.is_zero());
        Ok(cof.scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycloScalar {
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    /// True when the element is fixed by conjugation, i.e. lies in Q(sqrt(2)).
    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && self.c[1] == -self.c[3].clone()
    }

    /// Exact sign of a real element a + b*sqrt(2); errors on non-real input.
    pub fn real_sign(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::ConstraintViolation(
                "sign requested for a non-real cyclotomic scalar".into(),
            ));
        }
        let a = &self.c[0];
        let b = &self.c[1];
        if b.is_zero() {
            return Ok(sign_of(a));
        }
        if a.is_zero() {
            return Ok(sign_of(b));
        }
        if a.is_positive() && b.is_positive() {
            return Ok(1);
        }
        if a.is_negative() && b.is_negative() {
            return Ok(-1);
        }
        // Mixed signs: compare a^2 with 2 b^2; equality is impossible for
        // nonzero rationals since sqrt(2) is irrational.
        let a2 = a * a;
        let b2 = (b * b) * rat_int(2);
        if a2 > b2 {
            Ok(sign_of(a))
        } else {
            Ok(sign_of(b))
        }
    }

    /// Real part (x + conj x)/2.
    pub fn real_part(&self) -> Self {
        (self.clone() + self.conj()).scale(&rat(1, 2))
    }

    /// Imaginary part (x - conj x)/(2i), a real element.
    pub fn imag_part(&self) -> Self {
        let diff = self.clone() - self.conj();
        let half_over_i = CycloScalar::i().scale(&rat(-1, 2)); // 1/(2i) = -i/2
        diff * half_over_i
    }
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: CycloScalar) -> CycloScalar {
        CycloScalar {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl AddAssign for CycloScalar {
    fn add_assign(&mut self, rhs: CycloScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.into_iter()) {
            *a += b;
        }
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: CycloScalar) -> CycloScalar {
        self + (-rhs)
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            c: [-self.c[0].clone(), -self.c[1].clone(), -self.c[2].clone(), -self.c[3].clone()],
        }
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: CycloScalar) -> CycloScalar {
        let mut out = CycloScalar::zero();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let prod = &self.c[i] * &rhs.c[j];
                let e = i + j;
                if e < 4 {
                    out.c[e] += prod;
                } else {
                    out.c[e - 4] -= prod;
                }
            }
        }
        out
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if cj.is_negative() { "-" } else { "+" })?;
            } else if cj.is_negative() {
                write!(f, "-")?;
            }
            let a = cj.abs();
            if j == 0 || !a.is_one() {
                write!(f, "{}", a)?;
                if j > 0 {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", names[j])?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(v: [i64; 4]) -> CycloScalar {
        CycloScalar::new([rat_int(v[0]), rat_int(v[1]), rat_int(v[2]), rat_int(v[3])])
    }

    #[test]
    fn zeta_powers_reduce() {
        let z = CycloScalar::zeta();
        let z2 = z.clone() * z.clone();
        assert_eq!(z2, CycloScalar::i());
        let z4 = z2.clone() * z2.clone();
        assert_eq!(z4, -CycloScalar::one());
        let z8 = z4.clone() * z4;
        assert_eq!(z8, CycloScalar::one());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = CycloScalar::sqrt2();
        assert_eq!(s.clone() * s, CycloScalar::from_int(2));
    }

    #[test]
    fn zeta_squared_is_i_and_zeta_is_sqrt_2i() {
        // zeta^2 = i means zeta = sqrt(2i)/... more precisely zeta^2 = i and
        // (sqrt2 * zeta^... ) sanity: zeta * zeta = i, and zeta = (1+i)/sqrt2.
        let z = CycloScalar::zeta();
        let lhs = z.scale(&rat_int(1)) * CycloScalar::sqrt2();
        let rhs = CycloScalar::one() + CycloScalar::i();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_fixes_reals_and_flips_i() {
        assert_eq!(CycloScalar::sqrt2().conj(), CycloScalar::sqrt2());
        assert_eq!(CycloScalar::i().conj(), -CycloScalar::i());
        assert!(CycloScalar::sqrt2().is_real());
        assert!(!CycloScalar::i().is_real());
    }

    #[test]
    fn real_sign_compares_against_sqrt2() {
        // 3 - 2*sqrt(2) > 0 because 9 > 8.
        let x = CycloScalar::from_int(3) - CycloScalar::sqrt2().scale(&rat_int(2));
        assert_eq!(x.real_sign().unwrap(), 1);
        // 2 - 2*sqrt(2) < 0 because 4 < 8.
        let y = CycloScalar::from_int(2) - CycloScalar::sqrt2().scale(&rat_int(2));
        assert_eq!(y.real_sign().unwrap(), -1);
        assert_eq!(CycloScalar::zero().real_sign().unwrap(), 0);
    }

    proptest! {
        #[test]
        fn conj_is_involutive(v in proptest::array::uniform4(-6i64..=6)) {
            let x = c(v);
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn conj_is_multiplicative(v in proptest::array::uniform4(-6i64..=6),
                                  w in proptest::array::uniform4(-6i64..=6)) {
            let x = c(v);
            let y = c(w);
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        }

        #[test]
        fn inverse_is_two_sided(v in proptest::array::uniform4(-6i64..=6)) {
            let x = c(v);
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.clone() * inv.clone(), CycloScalar::one());
            prop_assert_eq!(inv * x, CycloScalar::one());
        }

        #[test]
        fn mul_is_associative(u in proptest::array::uniform4(-4i64..=4),
                              v in proptest::array::uniform4(-4i64..=4),
                              w in proptest::array::uniform4(-4i64..=4)) {
            let (a, b, d) = (c(u), c(v), c(w));
            prop_assert_eq!((a.clone() * b.clone()) * d.clone(), a * (b * d));
        }
    }
}
