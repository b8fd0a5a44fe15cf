//! Arithmetic in binary extension fields GF(2^m), the absolute trace, and
//! dual / self-dual bases.
//!
//! Elements are stored as their coordinate vector in the polynomial basis
//! `{1, x, ..., x^(m-1)}`, packed into a `u32` with bit `i` holding the
//! coefficient of `x^i`. The same packing is used for hex serialization.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 24;

/// Lexicographically least irreducible polynomial of each degree 1..=24,
/// including the leading `x^m` term.
const DEFAULT_MODULI: [u32; MAX_DEGREE as usize] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b, 0x20009, 0x40009, 0x80027, 0x100009, 0x200005, 0x400003, 0x800021, 0x100001b,
];

/// Default modulus for GF(2^m), `None` when `m` is outside `1..=24`.
pub fn default_modulus(m: u32) -> Option<u32> {
    (1..=MAX_DEGREE)
        .contains(&m)
        .then(|| DEFAULT_MODULI[m as usize - 1])
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn bits(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl FromStr for FieldElement {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim_start_matches("0x");
        u32::from_str_radix(s, 16).map(FieldElement)
    }
}

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: u32) -> bool {
    let d = poly_degree(poly as u64);
    if d < 1 {
        return false;
    }
    let half = d / 2;
    for f in 2u64..(1u64 << (half + 1)) {
        if poly_rem(poly as u64, f) == 0 {
            return false;
        }
    }
    true
}

/// A binary extension field GF(2^m) given by an irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    // Tr(x^i) for each i, packed; Tr(a) = parity(a & trace_mask).
    trace_mask: u32,
}

impl FieldSpec {
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = match modulus {
            Some(p) => {
                if poly_degree(p as u64) != m as i32 {
                    return Err(Error::ModulusDegree { modulus: p, m });
                }
                if !is_irreducible(p) {
                    return Err(Error::ReducibleModulus(p));
                }
                p
            }
            None => DEFAULT_MODULI[m as usize - 1],
        };
        let mut spec = FieldSpec {
            m,
            modulus,
            trace_mask: 0,
        };
        let mut mask = 0;
        for i in 0..m {
            if spec.trace_by_frobenius(FieldElement(1 << i)) {
                mask |= 1 << i;
            }
        }
        spec.trace_mask = mask;
        Ok(spec)
    }

    /// GF(2^m) with the default modulus.
    pub fn with_degree(m: u32) -> Result<Self> {
        Self::new(m, None)
    }

    pub fn gf2() -> Self {
        Self::new(1, None).expect("GF(2) is always constructible")
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn q(&self) -> usize {
        1usize << self.m
    }

    pub fn is_binary(&self) -> bool {
        self.m == 1
    }

    /// `t` with `m = 2t`, when `m` is even.
    pub fn half_degree(&self) -> Option<u32> {
        self.m.is_multiple_of(2).then_some(self.m / 2)
    }

    fn mask(&self) -> u32 {
        if self.m == 32 {
            u32::MAX
        } else {
            (1u32 << self.m) - 1
        }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value & !self.mask() != 0 {
            return Err(Error::ElementOutOfRange { value, m: self.m });
        }
        Ok(FieldElement(value))
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 & !self.mask() == 0
    }

    /// All `q` elements in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q() as u32).map(FieldElement)
    }

    /// The class of `x`.
    pub fn generator_x(&self) -> FieldElement {
        if self.m == 1 {
            FieldElement::ONE
        } else {
            FieldElement(2)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut prod = 0u64;
        while y != 0 {
            if y & 1 != 0 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let m = self.m as i32;
        let modulus = self.modulus as u64;
        let mut deg = poly_degree(prod);
        while deg >= m {
            prod ^= modulus << (deg - m);
            deg = poly_degree(prod);
        }
        FieldElement(prod as u32)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Square-and-multiply.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q() as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root; squaring is a bijection in characteristic 2.
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        let mut r = a;
        for _ in 0..self.m - 1 {
            r = self.square(r);
        }
        r
    }

    /// Absolute trace Tr: GF(2^m) -> GF(2).
    pub fn trace(&self, a: FieldElement) -> bool {
        (a.0 & self.trace_mask).count_ones() & 1 == 1
    }

    /// Trace evaluated as `a + a^2 + ... + a^(2^(m-1))` in the field.
    pub fn trace_by_frobenius(&self, a: FieldElement) -> bool {
        let mut acc = FieldElement::ZERO;
        let mut power = a;
        for _ in 0..self.m {
            acc = self.add(acc, power);
            power = self.square(power);
        }
        debug_assert!(acc.0 <= 1, "trace must land in GF(2)");
        acc.0 == 1
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.m, self.modulus)
    }
}

/// Inverse of an `m x m` GF(2) matrix with rows packed into `u32`s.
pub(crate) fn invert_bit_rows(rows: &[u32], m: usize) -> Option<Vec<u32>> {
    let mut a = rows.to_vec();
    let mut inv: Vec<u32> = (0..m).map(|i| 1u32 << i).collect();
    for col in 0..m {
        let pivot = (col..m).find(|&r| a[r] >> col & 1 == 1)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..m {
            if r != col && a[r] >> col & 1 == 1 {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

/// An ordered GF(2)-basis of GF(2^m) together with its trace Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    spec: FieldSpec,
    elements: Vec<FieldElement>,
    // gram[i] bit j = Tr(e_i e_j)
    gram: Vec<u32>,
    // rows of the inverse coordinate matrix: coords(a) = XOR of rows for set bits of a
    to_coords: Vec<u32>,
}

impl Basis {
    pub fn new(spec: &FieldSpec, elements: Vec<FieldElement>) -> Result<Self> {
        let m = spec.m() as usize;
        if elements.len() != m {
            return Err(Error::InvalidBasis(format!(
                "expected {m} elements, got {}",
                elements.len()
            )));
        }
        if let Some(bad) = elements.iter().find(|e| !spec.contains(**e)) {
            return Err(Error::ElementOutOfRange {
                value: bad.0,
                m: spec.m(),
            });
        }
        let rows: Vec<u32> = elements.iter().map(|e| e.0).collect();
        let to_coords = invert_bit_rows(&rows, m)
            .ok_or_else(|| Error::InvalidBasis("elements are linearly dependent".into()))?;
        let gram = (0..m)
            .map(|i| {
                (0..m).fold(0u32, |acc, j| {
                    acc | (spec.trace(spec.mul(elements[i], elements[j])) as u32) << j
                })
            })
            .collect();
        Ok(Basis {
            spec: spec.clone(),
            elements,
            gram,
            to_coords,
        })
    }

    /// `{1, x, ..., x^(m-1)}`.
    pub fn polynomial(spec: &FieldSpec) -> Self {
        let elements = (0..spec.m()).map(|i| FieldElement(1 << i)).collect();
        Basis::new(spec, elements).expect("monomials form a basis")
    }

    /// Self-dual basis by symmetric elimination of the trace form.
    ///
    /// Starting from the polynomial basis, anisotropic vectors (`Tr(v^2) = 1`)
    /// are split off one at a time. If only isotropic vectors remain, a
    /// hyperbolic pair `x, y` is taken together with a previously emitted `u`
    /// and replaced by `u+x, u+y, u+x+y`, which are orthonormal.
    pub fn self_dual(spec: &FieldSpec) -> Self {
        let tr = |a: FieldElement, b: FieldElement| spec.trace(spec.mul(a, b));
        let mut rest: Vec<FieldElement> = (0..spec.m()).map(|i| FieldElement(1 << i)).collect();
        let mut out: Vec<FieldElement> = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            if let Some(pos) = rest.iter().position(|&v| tr(v, v)) {
                let v = rest.remove(pos);
                for w in rest.iter_mut() {
                    if tr(*w, v) {
                        *w = spec.add(*w, v);
                    }
                }
                out.push(v);
            } else {
                let x = rest.remove(0);
                let pos = rest
                    .iter()
                    .position(|&y| tr(x, y))
                    .expect("trace form is nondegenerate");
                let y = rest.remove(pos);
                for w in rest.iter_mut() {
                    let (wx, wy) = (tr(*w, x), tr(*w, y));
                    if wy {
                        *w = spec.add(*w, x);
                    }
                    if wx {
                        *w = spec.add(*w, y);
                    }
                }
                // Tr is not identically zero, so the first pass emitted something.
                let u = out.pop().expect("an anisotropic vector was emitted first");
                out.push(spec.add(u, x));
                out.push(spec.add(u, y));
                out.push(spec.add(spec.add(u, x), y));
            }
        }
        let basis = Basis::new(spec, out).expect("congruence preserves independence");
        assert!(basis.is_self_dual(), "self-dual basis postcondition failed");
        basis
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> bool {
        self.gram[i] >> j & 1 == 1
    }

    /// Gram rows packed as bits.
    pub fn gram_rows(&self) -> &[u32] {
        &self.gram
    }

    pub fn is_self_dual(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, &row)| row == 1 << i)
    }

    /// Coordinates of `a`: bit `i` is the coefficient of `e_i`.
    pub fn coords(&self, a: FieldElement) -> u32 {
        let mut v = 0;
        let mut bits = a.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            v ^= self.to_coords[i];
            bits &= bits - 1;
        }
        v
    }

    pub fn from_coords(&self, v: u32) -> FieldElement {
        let mut acc = 0;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= self.elements[i].0;
            bits &= bits - 1;
        }
        FieldElement(acc)
    }

    /// The basis `e'` with `Tr(e_i e'_j) = [i == j]`, from the inverse Gram matrix.
    pub fn dual(&self) -> Basis {
        let m = self.len();
        let ginv = invert_bit_rows(&self.gram, m).expect("trace Gram of a basis is invertible");
        let elements = ginv.iter().map(|&row| self.from_coords(row)).collect();
        Basis::new(&self.spec, elements).expect("dual of a basis is a basis")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, Some(0b111)).unwrap()
    }

    #[test]
    fn default_moduli_are_least_irreducible() {
        for m in 1..=MAX_DEGREE {
            let p = DEFAULT_MODULI[m as usize - 1];
            assert!(is_irreducible(p), "m={m}");
            assert_eq!(poly_degree(p as u64), m as i32);
            for smaller in (1u32 << m)..p {
                assert!(!is_irreducible(smaller), "m={m}: {smaller:#x} is smaller");
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(0, None), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(FieldSpec::new(25, None), Err(Error::DegreeOutOfRange(25)));
        // x^4 + 1 = (x+1)^4
        assert_eq!(
            FieldSpec::new(4, Some(0x11)),
            Err(Error::ReducibleModulus(0x11))
        );
        // x^4 + x^2 + 1 = (x^2+x+1)^2, no roots
        assert_eq!(
            FieldSpec::new(4, Some(0x15)),
            Err(Error::ReducibleModulus(0x15))
        );
        assert!(matches!(
            FieldSpec::new(4, Some(0b111)),
            Err(Error::ModulusDegree { .. })
        ));
    }

    #[test]
    fn small_fields() {
        let gf2 = FieldSpec::gf2();
        assert_eq!(gf2.q(), 2);
        let gf16 = FieldSpec::new(4, Some(0x13)).unwrap();
        assert_eq!(gf16.q(), 16);
        let w = FieldElement(2);
        assert_eq!(gf4().mul(w, w), FieldElement(3));
        for a in gf16.elements() {
            assert!(gf16.add(a, a).is_zero());
        }
    }

    #[test]
    fn inverses_in_gf16() {
        let f = FieldSpec::with_degree(4).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(f.inv(a).unwrap(), a), FieldElement::ONE);
        }
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn sqrt_inverts_square() {
        let f = FieldSpec::with_degree(6).unwrap();
        for a in f.elements() {
            assert_eq!(f.sqrt(f.square(a)), a);
        }
    }

    #[test]
    fn trace_values() {
        let f = gf4();
        assert!(!f.trace(FieldElement::ZERO));
        assert!(f.trace(FieldElement(2)));
        let g = FieldSpec::with_degree(4).unwrap();
        assert!(!g.trace(FieldElement::ONE));
    }

    #[test]
    fn trace_mask_matches_frobenius_sum() {
        for m in 1..=10 {
            let f = FieldSpec::with_degree(m).unwrap();
            for a in f.elements() {
                assert_eq!(f.trace(a), f.trace_by_frobenius(a), "m={m} a={a}");
            }
        }
    }

    #[test]
    fn trace_is_linear_and_frobenius_invariant() {
        let f = FieldSpec::with_degree(4).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.trace(f.add(a, b)), f.trace(a) ^ f.trace(b));
            }
        }
        for m in 1..=8 {
            let f = FieldSpec::with_degree(m).unwrap();
            for a in f.elements() {
                assert_eq!(f.trace(f.square(a)), f.trace(a));
            }
        }
    }

    #[test]
    fn coords_gf4() {
        let f = gf4();
        let b = Basis::new(&f, vec![FieldElement(2), FieldElement(3)]).unwrap();
        assert_eq!(b.coords(FieldElement::ZERO), 0);
        assert_eq!(b.coords(FieldElement::ONE), 0b11);
    }

    #[test]
    fn coords_round_trip_gf16() {
        let f = FieldSpec::with_degree(4).unwrap();
        for b in [Basis::polynomial(&f), Basis::self_dual(&f)] {
            for a in f.elements() {
                assert_eq!(b.from_coords(b.coords(a)), a);
            }
        }
    }

    #[test]
    fn dependent_elements_rejected() {
        let f = gf4();
        let err = Basis::new(&f, vec![FieldElement(1), FieldElement(1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidBasis(_)));
    }

    #[test]
    fn dual_of_one_omega() {
        let f = gf4();
        let b = Basis::new(&f, vec![FieldElement(1), FieldElement(2)]).unwrap();
        let d = b.dual();
        assert_eq!(d.elements(), &[FieldElement(3), FieldElement(1)]);
        assert_eq!(d.dual(), b);
    }

    #[test]
    fn self_dual_bases() {
        let f = gf4();
        let b = Basis::self_dual(&f);
        assert_eq!(b.elements(), &[FieldElement(2), FieldElement(3)]);
        assert_eq!(b.dual(), b);
        let g = FieldSpec::gf2();
        assert_eq!(Basis::self_dual(&g).elements(), &[FieldElement::ONE]);
        for m in 1..=16 {
            let f = FieldSpec::with_degree(m).unwrap();
            let b = Basis::self_dual(&f);
            assert!(b.is_self_dual(), "m={m}");
            assert_eq!(Basis::self_dual(&f), b, "deterministic");
        }
    }

    #[test]
    fn dual_basis_is_kronecker() {
        for m in 1..=8 {
            let f = FieldSpec::with_degree(m).unwrap();
            let b = Basis::polynomial(&f);
            let d = b.dual();
            for (i, &e) in b.elements().iter().enumerate() {
                for (j, &e2) in d.elements().iter().enumerate() {
                    assert_eq!(f.trace(f.mul(e, e2)), i == j);
                }
            }
        }
    }

    #[test]
    fn self_dual_coords_carry_trace_form() {
        for m in 1..=8 {
            let f = FieldSpec::with_degree(m).unwrap();
            let e = Basis::self_dual(&f);
            for a in f.elements() {
                for b in f.elements() {
                    let dot = (e.coords(a) & e.coords(b)).count_ones() & 1 == 1;
                    assert_eq!(f.trace(f.mul(a, b)), dot);
                }
            }
        }
    }

    #[test]
    fn hex_round_trip() {
        let a: FieldElement = "1f".parse().unwrap();
        assert_eq!(a, FieldElement(0x1f));
        assert_eq!(a.to_string(), "1f");
    }
}
