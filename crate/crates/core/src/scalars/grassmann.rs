//! Finite Grassmann algebras over the degree-8 cyclotomic field.
//!
//! An element is a linear combination of products of anticommuting
//! generators theta_1 .. theta_N.  Terms are indexed by strictly increasing
//! subsets of {1..N}; the canonical term order is lexicographic on the
//! sorted index lists, which fixes the serialization.

use super::cyclo::{rat, CycloScalar, Rat};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A subset of {1..N} stored as a bitmask (bit b = generator b+1).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet(pub u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_indices(idx: &[usize]) -> Self {
        let mut m = 0u64;
        for &i in idx {
            assert!(i >= 1 && i <= 64);
            m |= 1 << (i - 1);
        }
        IndexSet(m)
    }

    pub fn indices(&self) -> Vec<usize> {
        let mut v = Vec::new();
        let mut m = self.0;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            v.push(b + 1);
            m &= m - 1;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn parity(&self) -> Parity {
        if self.len() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Ord for IndexSet {
    // Lexicographic on ascending index lists: [1] < [1,2] < [1,3] < [2].
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
            match ta.cmp(&tb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// Z/2 parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    /// (-1)^{|a||b|}
    pub fn bracket_sign(a: Parity, b: Parity) -> i8 {
        if a.is_odd() && b.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// Element of the Grassmann algebra on `num_generators` odd generators.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannElement {
    gens: usize,
    terms: BTreeMap<IndexSet, CycloScalar>,
}

impl GrassmannElement {
    pub fn zero(gens: usize) -> Self {
        GrassmannElement {
            gens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gens: usize) -> Self {
        Self::scalar(gens, CycloScalar::one())
    }

    pub fn scalar(gens: usize, c: CycloScalar) -> Self {
        let mut e = Self::zero(gens);
        e.add_term(IndexSet::EMPTY, c);
        e
    }

    pub fn from_rat(gens: usize, r: Rat) -> Self {
        Self::scalar(gens, CycloScalar::from_rat(r))
    }

    /// The generator theta_i (1-based).
    pub fn generator(gens: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= gens, "generator index out of range");
        let mut e = Self::zero(gens);
        e.add_term(IndexSet::from_indices(&[i]), CycloScalar::one());
        e
    }

    /// A single monomial c * theta_{i1}...theta_{ik} with ascending indices.
    pub fn monomial(gens: usize, idx: &[usize], c: CycloScalar) -> Self {
        let mut e = Self::zero(gens);
        e.add_term(IndexSet::from_indices(idx), c);
        e
    }

    pub fn num_generators(&self) -> usize {
        self.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, s: IndexSet, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    /// Coefficient of the empty subset.
    pub fn body(&self) -> CycloScalar {
        self.terms
            .get(&IndexSet::EMPTY)
            .cloned()
            .unwrap_or_else(CycloScalar::zero)
    }

    /// The nilpotent complement of the body.
    pub fn soul(&self) -> Self {
        let mut e = self.clone();
        e.terms.remove(&IndexSet::EMPTY);
        e
    }

    /// Parity of a homogeneous element; `None` for heterogeneous or zero-
    /// treated-as-any input (zero reports Even).
    pub fn parity(&self) -> Option<Parity> {
        if self.terms.is_empty() {
            return Some(Parity::Even);
        }
        let mut it = self.terms.keys();
        let p = it.next().unwrap().parity();
        for s in it {
            if s.parity() != p {
                return None;
            }
        }
        Some(p)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    /// Even/odd graded components.
    pub fn graded_part(&self, p: Parity) -> Self {
        let mut e = Self::zero(self.gens);
        for (s, c) in &self.terms {
            if s.parity() == p {
                e.add_term(*s, c.clone());
            }
        }
        e
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let mut e = Self::zero(self.gens);
        for (s, x) in &self.terms {
            e.add_term(*s, x.clone() * c.clone());
        }
        e
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&CycloScalar::from_rat(r.clone()))
    }

    /// Conjugation: CycloScalar coefficients are conjugated, the odd
    /// generators are left fixed.
    pub fn conj(&self) -> Self {
        let mut e = Self::zero(self.gens);
        for (s, c) in &self.terms {
            e.add_term(*s, c.conj());
        }
        e
    }

    fn check_gens(&self, other: &Self) -> Result<()> {
        if self.gens != other.gens {
            return Err(Error::GeneratorMismatch(self.gens, other.gens));
        }
        Ok(())
    }

    /// Exterior product; errors on generator-count mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_gens(other)?;
        let mut out = Self::zero(self.gens);
        for (sa, ca) in &self.terms {
            for (sb, cb) in &other.terms {
                if sa.0 & sb.0 != 0 {
                    continue; // repeated generator
                }
                let sign = merge_sign(sa.0, sb.0);
                let mut c = ca.clone() * cb.clone();
                if sign < 0 {
                    c = -c;
                }
                out.add_term(IndexSet(sa.0 | sb.0), c);
            }
        }
        Ok(out)
    }

    /// Inverse; defined exactly when the body is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let b = self.body();
        if b.is_zero() {
            return Err(Error::NotInvertible("Grassmann element has zero body".into()));
        }
        let binv = b.inverse()?;
        // x = b(1 + n) with n nilpotent; x^{-1} = (sum (-n)^k) / b.
        let n = self.soul().scale(&binv.clone());
        let mut acc = Self::one(self.gens);
        let mut pw = Self::one(self.gens);
        for _ in 0..self.gens {
            pw = pw.try_mul(&n).unwrap();
            if pw.is_zero() {
                break;
            }
            pw = -pw;
            acc = acc + pw.clone();
        }
        Ok(acc.scale(&binv))
    }
}

/// Sign of interleaving sorted disjoint index sets a and b into one sorted
/// list: (-1)^{#{(x,y) in a x b : x > y}}.
fn merge_sign(a: u64, b: u64) -> i8 {
    let mut inversions = 0u32;
    let mut m = b;
    while m != 0 {
        let bit = m.trailing_zeros();
        // generators in a strictly above this one
        inversions += (a >> (bit + 1)).count_ones();
        m &= m - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Add for GrassmannElement {
    type Output = GrassmannElement;
    fn add(self, rhs: GrassmannElement) -> GrassmannElement {
        assert_eq!(self.gens, rhs.gens, "generator count mismatch");
        let mut out = self;
        for (s, c) in rhs.terms {
            out.add_term(s, c);
        }
        out
    }
}

impl Sub for GrassmannElement {
    type Output = GrassmannElement;
    fn sub(self, rhs: GrassmannElement) -> GrassmannElement {
        self + (-rhs)
    }
}

impl Neg for GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        let mut out = GrassmannElement::zero(self.gens);
        for (s, c) in self.terms {
            out.add_term(s, -c);
        }
        out
    }
}

impl Mul for GrassmannElement {
    type Output = GrassmannElement;
    fn mul(self, rhs: GrassmannElement) -> GrassmannElement {
        self.try_mul(&rhs).expect("generator count mismatch")
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if s.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})", c)?;
                for i in s.indices() {
                    write!(f, "t{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Convenience: half of an element (used by chart constraints).
pub fn half(x: &GrassmannElement) -> GrassmannElement {
    x.scale_rat(&rat(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn th(i: usize) -> GrassmannElement {
        GrassmannElement::generator(4, i)
    }

    #[test]
    fn generators_anticommute() {
        let t12 = th(1) * th(2);
        let t21 = th(2) * th(1);
        assert_eq!(t21, -t12.clone());
        assert!(!t12.is_zero());
    }

    #[test]
    fn exterior_square_vanishes() {
        assert!((th(1) * th(1)).is_zero());
    }

    #[test]
    fn one_plus_t12_times_one_minus_t12() {
        let one = GrassmannElement::one(4);
        let t12 = th(1) * th(2);
        let prod = (one.clone() + t12.clone()) * (one.clone() - t12);
        assert_eq!(prod, one);
    }

    #[test]
    fn term_order_is_lex_on_index_lists() {
        let a = IndexSet::from_indices(&[1]);
        let b = IndexSet::from_indices(&[1, 2]);
        let c = IndexSet::from_indices(&[1, 3]);
        let d = IndexSet::from_indices(&[2]);
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn invertible_iff_nonzero_body() {
        let x = GrassmannElement::one(4) + th(1) * th(2);
        let inv = x.inverse().unwrap();
        assert_eq!(x * inv, GrassmannElement::one(4));
        let y = th(1) + th(1) * th(2) * th(3);
        assert!(y.inverse().is_err());
    }

    #[test]
    fn generator_count_mismatch_is_rejected() {
        let a = GrassmannElement::generator(2, 1);
        let b = GrassmannElement::generator(3, 1);
        assert!(a.try_mul(&b).is_err());
    }

    fn arb_elem(max_deg: usize) -> impl Strategy<Value = GrassmannElement> {
        // random subsets of {1..4} up to max_deg with small coefficients
        proptest::collection::vec((proptest::bits::u8::between(0, 4), -3i64..=3), 0..5).prop_map(
            move |entries| {
                let mut e = GrassmannElement::zero(4);
                for (bits, c) in entries {
                    let set = IndexSet(bits as u64 & 0xF);
                    if set.len() > max_deg {
                        continue;
                    }
                    e = e + GrassmannElement::monomial(
                        4,
                        &set.indices(),
                        CycloScalar::from_int(c),
                    );
                }
                e
            },
        )
    }

    proptest! {
        #[test]
        fn supercommutative_on_homogeneous(a in arb_elem(4), b in arb_elem(4)) {
            for pa in [Parity::Even, Parity::Odd] {
                for pb in [Parity::Even, Parity::Odd] {
                    let x = a.graded_part(pa);
                    let y = b.graded_part(pb);
                    let xy = x.try_mul(&y).unwrap();
                    let yx = y.try_mul(&x).unwrap();
                    let expected = if Parity::bracket_sign(pa, pb) < 0 { -yx } else { yx };
                    prop_assert_eq!(xy, expected);
                }
            }
        }

        #[test]
        fn associative(a in arb_elem(4), b in arb_elem(4), c in arb_elem(4)) {
            let l = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
            let r = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
