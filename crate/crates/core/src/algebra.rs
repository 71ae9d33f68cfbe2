//! The sixteen-component space-time algebra.
//!
//! A sedeon carries complex components `V[n][k]` indexed by a space-time
//! unit `e_n` (n = 0..3, with `e_1 = e_t`, `e_2 = e_r`, `e_3 = e_tr`) and a
//! vector unit `a_k` (k = 0..3). Both unit triples anticommute among
//! themselves, square to +1 and generate `u_m u_n = i eps_mnl u_l`, while
//! every `e_n` commutes with every `a_k`. Structure constants are applied
//! symbolically (sign flips and re/im swaps), so products of basis elements
//! incur no rounding at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SedeonError;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A unit structure constant: one of `1`, `i`, `-1`, `-i`.
///
/// Applied to a complex value by swapping and negating parts instead of a
/// general complex multiply, so the result is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitCoeff {
    One,
    I,
    NegOne,
    NegI,
}

impl UnitCoeff {
    /// Group product inside `{1, i, -1, -i}` (cyclic of order four).
    pub fn mul(self, other: UnitCoeff) -> UnitCoeff {
        const ORDER: [UnitCoeff; 4] = [
            UnitCoeff::One,
            UnitCoeff::I,
            UnitCoeff::NegOne,
            UnitCoeff::NegI,
        ];
        ORDER[(self.power() + other.power()) % 4]
    }

    fn power(self) -> usize {
        match self {
            UnitCoeff::One => 0,
            UnitCoeff::I => 1,
            UnitCoeff::NegOne => 2,
            UnitCoeff::NegI => 3,
        }
    }

    /// Exact application to a complex value.
    pub fn apply(self, z: Complex64) -> Complex64 {
        match self {
            UnitCoeff::One => z,
            UnitCoeff::I => Complex64::new(-z.im, z.re),
            UnitCoeff::NegOne => Complex64::new(-z.re, -z.im),
            UnitCoeff::NegI => Complex64::new(z.im, -z.re),
        }
    }

    /// The coefficient as a complex number.
    pub fn value(self) -> Complex64 {
        self.apply(C_ONE)
    }
}

/// Product rule shared by the space-time units `e_n` and the vector units
/// `a_k`: `u_0` is the scalar unit, `u_j u_j = 1`, and for distinct j, l the
/// product is `+/- i` times the remaining unit, antisymmetric under swap.
///
/// Returns the coefficient and the index of the resulting unit.
pub fn unit_product(m: usize, n: usize) -> (UnitCoeff, usize) {
    debug_assert!(m < 4 && n < 4);
    match (m, n) {
        (0, n) => (UnitCoeff::One, n),
        (m, 0) => (UnitCoeff::One, m),
        (m, n) if m == n => (UnitCoeff::One, 0),
        (1, 2) | (2, 3) | (3, 1) => (UnitCoeff::I, 6 - m - n),
        _ => (UnitCoeff::NegI, 6 - m - n),
    }
}

/// Which unit triple a structure-table query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitBasis {
    /// Space-time units `e_1, e_2, e_3`.
    SpaceTime,
    /// Vector units `a_1, a_2, a_3`.
    Vector,
}

impl UnitBasis {
    pub fn symbol(self) -> char {
        match self {
            UnitBasis::SpaceTime => 'e',
            UnitBasis::Vector => 'a',
        }
    }
}

/// Queryable form of the two multiplication tables. Both triples follow the
/// identical rule; the basis tag only affects labeling.
#[derive(Debug, Clone, Copy)]
pub struct StructureTable {
    pub basis: UnitBasis,
}

impl StructureTable {
    pub const E: StructureTable = StructureTable {
        basis: UnitBasis::SpaceTime,
    };
    pub const A: StructureTable = StructureTable {
        basis: UnitBasis::Vector,
    };

    /// Product `u_m u_n` as (coefficient, resulting unit index).
    pub fn product(&self, m: usize, n: usize) -> Result<(UnitCoeff, usize), SedeonError> {
        if m > 3 || n > 3 {
            return Err(SedeonError::IndexOutOfRange { n: m, k: n });
        }
        Ok(unit_product(m, n))
    }
}

/// Validated component address: space-time index `n`, vector index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SedeonIndex {
    n: usize,
    k: usize,
}

impl SedeonIndex {
    pub fn new(n: usize, k: usize) -> Result<Self, SedeonError> {
        if n > 3 || k > 3 {
            return Err(SedeonError::IndexOutOfRange { n, k });
        }
        Ok(SedeonIndex { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Position in the n-major component layout.
    pub fn flat(&self) -> usize {
        4 * self.n + self.k
    }
}

/// A sixteen-component space-time value, stored n-major (space-time unit
/// first, vector unit second).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sedeon {
    components: [Complex64; 16],
}

impl Sedeon {
    pub fn zero() -> Sedeon {
        Sedeon {
            components: [C_ZERO; 16],
        }
    }

    pub fn one() -> Sedeon {
        Sedeon::scalar(C_ONE)
    }

    /// Sedeon with the given value at the absolute-scalar slot.
    pub fn scalar(value: Complex64) -> Sedeon {
        let mut components = [C_ZERO; 16];
        components[0] = value;
        Sedeon { components }
    }

    /// Basis element `e_n a_k`.
    pub fn basis(n: usize, k: usize) -> Result<Sedeon, SedeonError> {
        let idx = SedeonIndex::new(n, k)?;
        let mut components = [C_ZERO; 16];
        components[idx.flat()] = C_ONE;
        Ok(Sedeon { components })
    }

    pub(crate) fn unit(n: usize, k: usize) -> Sedeon {
        Sedeon::basis(n, k).expect("unit index in range")
    }

    pub fn from_components(components: [Complex64; 16]) -> Sedeon {
        Sedeon { components }
    }

    pub fn components(&self) -> &[Complex64; 16] {
        &self.components
    }

    pub fn get(&self, n: usize, k: usize) -> Result<Complex64, SedeonError> {
        Ok(self.components[SedeonIndex::new(n, k)?.flat()])
    }

    pub(crate) fn at(&self, n: usize, k: usize) -> Complex64 {
        self.components[4 * n + k]
    }

    pub(crate) fn at_mut(&mut self, n: usize, k: usize) -> &mut Complex64 {
        &mut self.components[4 * n + k]
    }

    pub fn set(&mut self, index: SedeonIndex, value: Complex64) {
        self.components[index.flat()] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Max component magnitude. Used as the test metric throughout; the
    /// algebra itself defines no norm.
    pub fn max_norm(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Componentwise complex conjugation; the basis is untouched.
    pub fn conj(&self) -> Sedeon {
        let mut components = self.components;
        for c in &mut components {
            *c = c.conj();
        }
        Sedeon { components }
    }

    /// Split into the sedeon-scalar part (k = 0 slots) and the
    /// sedeon-vector part (k = 1..3 slots). The two parts sum back to the
    /// original value exactly.
    pub fn decompose(&self) -> (Sedeon, Sedeon) {
        let mut scalar = Sedeon::zero();
        let mut vector = Sedeon::zero();
        for n in 0..4 {
            *scalar.at_mut(n, 0) = self.at(n, 0);
            for k in 1..4 {
                *vector.at_mut(n, k) = self.at(n, k);
            }
        }
        (scalar, vector)
    }

    pub fn scalar_part(&self) -> Sedeon {
        self.decompose().0
    }

    pub fn vector_part(&self) -> Sedeon {
        self.decompose().1
    }

    /// True when only k = 0 components are populated.
    pub fn is_pure_scalar(&self) -> bool {
        self.vector_part().is_zero()
    }

    /// True when every k = 0 component vanishes.
    pub fn is_pure_vector(&self) -> bool {
        self.scalar_part().is_zero()
    }

    /// Full noncommutative product. Basis monomials combine as
    /// `(e_m a_k)(e_n a_l) = (e_m e_n)(a_k a_l)` with both factors resolved
    /// through the shared structure table; the e- and a-units commute with
    /// each other.
    pub fn product(&self, rhs: &Sedeon) -> Sedeon {
        let mut out = [C_ZERO; 16];
        for (ia, &x) in self.components.iter().enumerate() {
            if x.re == 0.0 && x.im == 0.0 {
                continue;
            }
            let (na, ka) = (ia / 4, ia % 4);
            for (ib, &y) in rhs.components.iter().enumerate() {
                if y.re == 0.0 && y.im == 0.0 {
                    continue;
                }
                let (nb, kb) = (ib / 4, ib % 4);
                let (ce, ne) = unit_product(na, nb);
                let (ca, kc) = unit_product(ka, kb);
                out[4 * ne + kc] += ce.mul(ca).apply(x * y);
            }
        }
        Sedeon { components: out }
    }

    /// Scale by a complex factor.
    pub fn scale(&self, factor: Complex64) -> Sedeon {
        let mut components = self.components;
        for c in &mut components {
            *c = factor * *c;
        }
        Sedeon { components }
    }
}

fn ensure_pure_vector(v: &Sedeon) -> Result<(), SedeonError> {
    let magnitude = v.scalar_part().max_norm();
    if magnitude != 0.0 {
        return Err(SedeonError::NotPureVector { magnitude });
    }
    Ok(())
}

/// Internal (dot) product of two sedeon-vectors:
/// `(A . B) = A_1 B_1 + A_2 B_2 + A_3 B_3`, where each `A_j B_j` multiplies
/// the space-time content through the e-unit table. The result is a pure
/// sedeon-scalar. Inputs with scalar content are rejected.
pub fn scalar_product(a: &Sedeon, b: &Sedeon) -> Result<Sedeon, SedeonError> {
    ensure_pure_vector(a)?;
    ensure_pure_vector(b)?;
    let mut out = Sedeon::zero();
    for j in 1..4 {
        accumulate_escalar_product(&mut out, a, j, b, j, 0, UnitCoeff::One);
    }
    Ok(out)
}

/// External (cross) product of two sedeon-vectors, carrying the explicit
/// factor i:
/// `[A x B] = i(A_2 B_3 - A_3 B_2) a_1 + i(A_3 B_1 - A_1 B_3) a_2
///          + i(A_1 B_2 - A_2 B_1) a_3`.
pub fn vector_product(a: &Sedeon, b: &Sedeon) -> Result<Sedeon, SedeonError> {
    ensure_pure_vector(a)?;
    ensure_pure_vector(b)?;
    let mut out = Sedeon::zero();
    for &(ja, jb, kout) in &[(2usize, 3usize, 1usize), (3, 1, 2), (1, 2, 3)] {
        accumulate_escalar_product(&mut out, a, ja, b, jb, kout, UnitCoeff::I);
        accumulate_escalar_product(&mut out, a, jb, b, ja, kout, UnitCoeff::NegI);
    }
    Ok(out)
}

/// Accumulate `coeff * A_ja B_jb` into the `a_kout` column, multiplying the
/// space-time content through the e-unit table.
fn accumulate_escalar_product(
    out: &mut Sedeon,
    a: &Sedeon,
    ja: usize,
    b: &Sedeon,
    jb: usize,
    kout: usize,
    coeff: UnitCoeff,
) {
    for m in 0..4 {
        let x = a.at(m, ja);
        if x.re == 0.0 && x.im == 0.0 {
            continue;
        }
        for n in 0..4 {
            let y = b.at(n, jb);
            if y.re == 0.0 && y.im == 0.0 {
                continue;
            }
            let (ce, ne) = unit_product(m, n);
            *out.at_mut(ne, kout) += coeff.mul(ce).apply(x * y);
        }
    }
}

/// `c1 * A + c2 * B`, componentwise.
pub fn linear_combine(c1: Complex64, a: &Sedeon, c2: Complex64, b: &Sedeon) -> Sedeon {
    let mut components = [C_ZERO; 16];
    for (i, slot) in components.iter_mut().enumerate() {
        *slot = c1 * a.components[i] + c2 * b.components[i];
    }
    Sedeon { components }
}

impl Add for Sedeon {
    type Output = Sedeon;
    fn add(self, rhs: Sedeon) -> Sedeon {
        let mut components = self.components;
        for (c, r) in components.iter_mut().zip(rhs.components.iter()) {
            *c += r;
        }
        Sedeon { components }
    }
}

impl Sub for Sedeon {
    type Output = Sedeon;
    fn sub(self, rhs: Sedeon) -> Sedeon {
        let mut components = self.components;
        for (c, r) in components.iter_mut().zip(rhs.components.iter()) {
            *c -= r;
        }
        Sedeon { components }
    }
}

impl Neg for Sedeon {
    type Output = Sedeon;
    fn neg(self) -> Sedeon {
        let mut components = self.components;
        for c in &mut components {
            *c = -*c;
        }
        Sedeon { components }
    }
}

impl Mul for Sedeon {
    type Output = Sedeon;
    fn mul(self, rhs: Sedeon) -> Sedeon {
        self.product(&rhs)
    }
}

impl Mul<&Sedeon> for &Sedeon {
    type Output = Sedeon;
    fn mul(self, rhs: &Sedeon) -> Sedeon {
        self.product(rhs)
    }
}

impl Mul<Complex64> for Sedeon {
    type Output = Sedeon;
    fn mul(self, rhs: Complex64) -> Sedeon {
        self.scale(rhs)
    }
}

impl Mul<f64> for Sedeon {
    type Output = Sedeon;
    fn mul(self, rhs: f64) -> Sedeon {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl fmt::Display for Sedeon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in 0..4 {
            for k in 0..4 {
                let c = self.at(n, k);
                if c.re == 0.0 && c.im == 0.0 {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match (n, k) {
                    (0, 0) => write!(f, "({} + {}i)", c.re, c.im)?,
                    (0, k) => write!(f, "({} + {}i)*a{}", c.re, c.im, k)?,
                    (n, 0) => write!(f, "({} + {}i)*e{}", c.re, c.im, n)?,
                    (n, k) => write!(f, "({} + {}i)*e{}a{}", c.re, c.im, n, k)?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON encoding shared by the CLI: an array of 16 [re, im] pairs in n-major
// order. Decoding rejects non-finite values.
impl Serialize for Sedeon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(16))?;
        for c in &self.components {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Sedeon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SedeonVisitor;

        impl<'de> Visitor<'de> for SedeonVisitor {
            type Value = Sedeon;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of 16 [re, im] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Sedeon, A::Error> {
                let mut components = [C_ZERO; 16];
                for (i, slot) in components.iter_mut().enumerate() {
                    let pair: [f64; 2] = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::invalid_length(i, &"16 pairs"))?;
                    if !pair[0].is_finite() || !pair[1].is_finite() {
                        return Err(de::Error::custom("non-finite component"));
                    }
                    *slot = Complex64::new(pair[0], pair[1]);
                }
                if seq.next_element::<[f64; 2]>()?.is_some() {
                    return Err(de::Error::custom("expected exactly 16 pairs"));
                }
                Ok(Sedeon { components })
            }
        }

        deserializer.deserialize_seq(SedeonVisitor)
    }
}
