//! Binary expansion of codes over GF(2^(2t)) through a self-dual basis.
//!
//! With a self-dual basis `e`, `Tr(a b)` equals the GF(2) dot product of the
//! coordinate vectors of `a` and `b`. Expanding every symbol of a codeword
//! into its `2t` coordinates therefore maps self-orthogonal codes to binary
//! self-orthogonal codes, multiplying length and dimension by `2t`.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::bounds::{rational, BoundLine};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{Basis, FieldElement, FieldSpec};
use crate::gf2la::BitMatrix;

/// A field of even degree `2t` together with a self-dual basis.
#[derive(Clone, Debug)]
pub struct ExpansionScheme {
    basis: Basis,
}

impl ExpansionScheme {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        Self::with_basis(Basis::self_dual(spec))
    }

    pub fn with_basis(basis: Basis) -> Result<Self> {
        if basis.spec().half_degree().is_none() {
            return Err(Error::InvalidParameters(format!(
                "{} does not have even degree",
                basis.spec()
            )));
        }
        if !basis.is_self_dual() {
            return Err(Error::InvalidBasis(
                "expansion requires a self-dual basis".into(),
            ));
        }
        Ok(ExpansionScheme { basis })
    }

    pub fn spec(&self) -> &FieldSpec {
        self.basis.spec()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// Symbol `j` occupies bits `[m j, m (j+1))`, in basis order.
    pub fn expand_vector(&self, a: &[FieldElement]) -> Vec<u64> {
        let m = self.spec().m() as usize;
        let cols = m * a.len();
        let mut out = vec![0u64; cols.div_ceil(64)];
        for (j, &x) in a.iter().enumerate() {
            let c = self.basis.coords(x);
            for i in 0..m {
                if c >> i & 1 == 1 {
                    let pos = m * j + i;
                    out[pos / 64] |= 1 << (pos % 64);
                }
            }
        }
        out
    }
}

/// Binary `[2t n, 2t k]` image of `code`. The claimed distance carries over as
/// a lower bound.
pub fn expand(code: &LinearCode, scheme: &ExpansionScheme) -> Result<LinearCode> {
    if code.field() != scheme.spec() {
        return Err(Error::FieldMismatch(format!(
            "code over {} but scheme over {}",
            code.field(),
            scheme.spec()
        )));
    }
    let f = scheme.spec();
    let m = f.m() as usize;
    let n = code.len();
    let mut gens = BitMatrix::zeros(0, m * n);
    let mut scaled = vec![FieldElement::ZERO; n];
    for r in 0..code.dim() {
        for &e in scheme.basis().elements() {
            for (j, s) in scaled.iter_mut().enumerate() {
                *s = f.mul(e, FieldElement(code.symbol(r, j)));
            }
            gens.push_row(&scheme.expand_vector(&scaled));
        }
    }
    Ok(LinearCode::binary_spanned(&gens).with_claimed_distance(code.claimed_distance()))
}

/// `R + 2t delta = 1 - 1/(2^t - 1)`.
pub fn line_eq7(t: u32) -> Result<BoundLine> {
    if t < 2 {
        return Err(Error::InvalidParameters(format!(
            "t = {t} must be at least 2"
        )));
    }
    let intercept =
        BigRational::one() - BigRational::new(BigInt::one(), (BigInt::one() << t as usize) - 1);
    BoundLine::new(rational(2 * t as i64, 1), intercept, format!("eq7-t{t}"))
}

/// `delta = (intercept - R) / (2t)` on the line for `t`.
pub fn delta_at_rate(t: u32, rate: &BigRational) -> Result<BigRational> {
    let line = line_eq7(t)?;
    if rate.is_negative() || rate > line.intercept() {
        return Err(Error::InvalidParameters(format!(
            "rate {rate} outside [0, {}]",
            line.intercept()
        )));
    }
    Ok(line.delta_at(rate))
}

#[derive(Clone, Debug)]
pub struct Table2Row {
    pub t: u32,
    pub line: BoundLine,
    pub delta_at_half: BigRational,
}

pub fn table2(t_range: RangeInclusive<u32>) -> Result<Vec<Table2Row>> {
    let half = rational(1, 2);
    t_range
        .map(|t| {
            Ok(Table2Row {
                t,
                line: line_eq7(t)?,
                delta_at_half: delta_at_rate(t, &half)?,
            })
        })
        .collect()
}

/// The `t` maximizing `delta` at `R = 1/2` (smallest `t` on ties).
pub fn best_t_at_half(rows: &[Table2Row]) -> Option<u32> {
    rows.iter()
        .fold(None::<&Table2Row>, |best, r| match best {
            Some(b) if b.delta_at_half >= r.delta_at_half => Some(b),
            _ => Some(r),
        })
        .map(|r| r.t)
}

/// CSV with header
/// `t,slope,intercept_num,intercept_den,delta_at_half_num,delta_at_half_den`.
pub fn write_table2_csv<W: Write>(mut w: W, rows: &[Table2Row]) -> io::Result<()> {
    writeln!(
        w,
        "t,slope,intercept_num,intercept_den,delta_at_half_num,delta_at_half_den"
    )?;
    for r in rows {
        let i = r.line.intercept();
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.t,
            r.line.slope(),
            i.numer(),
            i.denom(),
            r.delta_at_half.numer(),
            r.delta_at_half.denom()
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::self_orthogonal_outer;
    use crate::gf2la::FqMatrix;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, Some(0b111)).unwrap()
    }

    #[test]
    fn gf4_hand_example() {
        let f = gf4();
        let scheme = ExpansionScheme::new(&f).unwrap();
        assert_eq!(
            scheme.basis().elements(),
            &[FieldElement(2), FieldElement(3)]
        );
        let g = FqMatrix::from_rows(&f, 2, vec![vec![FieldElement::ONE; 2]]).unwrap();
        let c = LinearCode::over_field(g).unwrap();
        let b = expand(&c, &scheme).unwrap();
        let expected =
            LinearCode::binary(BitMatrix::from_strs(&["1111", "1010", "0101"]).row_basis())
                .unwrap();
        assert!(b.same_code(&expected));
        assert_eq!(b.dim(), 2);
        assert!(b.is_self_orthogonal());
        assert!(b.dual().same_code(&b));
    }

    #[test]
    fn zero_code_expands_to_zero_code() {
        let f = gf4();
        let c = LinearCode::over_field(FqMatrix::zeros(&f, 0, 3)).unwrap();
        let b = expand(&c, &ExpansionScheme::new(&f).unwrap()).unwrap();
        assert_eq!((b.len(), b.dim()), (6, 0));
    }

    #[test]
    fn gf16_outer_expands_self_orthogonally() {
        let f = FieldSpec::with_degree(4).unwrap();
        let c = self_orthogonal_outer(&f, 16, 4, 0).unwrap();
        let b = expand(&c, &ExpansionScheme::new(&f).unwrap()).unwrap();
        assert_eq!((b.len(), b.dim()), (64, 16));
        assert!(b.is_self_orthogonal());
        assert!(b.is_even());
    }

    #[test]
    fn scheme_validation() {
        let f = gf4();
        assert!(ExpansionScheme::with_basis(Basis::polynomial(&f)).is_err());
        assert!(ExpansionScheme::new(&FieldSpec::with_degree(3).unwrap()).is_err());
        let c = self_orthogonal_outer(&f, 4, 2, 0).unwrap();
        let other = ExpansionScheme::new(&FieldSpec::with_degree(4).unwrap()).unwrap();
        assert!(matches!(expand(&c, &other), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn table2_values() {
        let rows = table2(2..=5).unwrap();
        let expected = [
            ((2, 3), (1, 24)),
            ((6, 7), (5, 84)),
            ((14, 15), (13, 240)),
            ((30, 31), (29, 620)),
        ];
        for (row, ((a, b), (c, d))) in rows.iter().zip(expected) {
            assert_eq!(row.line.slope(), &rational(2 * row.t as i64, 1));
            assert_eq!(row.line.intercept(), &rational(a, b));
            assert_eq!(row.delta_at_half, rational(c, d));
        }
        assert_eq!(best_t_at_half(&rows), Some(3));
    }

    #[test]
    fn delta_edges() {
        let top = line_eq7(4).unwrap().intercept().clone();
        assert_eq!(delta_at_rate(4, &top), Ok(rational(0, 1)));
        assert!(delta_at_rate(4, &rational(1, 1)).is_err());
        assert!(line_eq7(1).is_err());
    }
}
