//! Concatenation of an outer code over GF(2^(2t)) with a binary inner code of
//! dimension `2t`.
//!
//! Each outer symbol is written in coordinates under a fixed GF(2)-basis of
//! the outer field and encoded with the inner generator; the binary codeword is
//! the concatenation of the per-symbol blocks. When the inner code is
//! self-orthogonal the concatenated code is self-orthogonal too, and its
//! minimum distance is at least the product of the two distances.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::bounds::{rational, BoundLine};
use crate::codefile;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{Basis, FieldElement};
use crate::gf2la::BitMatrix;

/// Outer code, inner code, and the basis that turns outer symbols into inner
/// messages.
#[derive(Clone, Debug)]
pub struct ConcatenationScheme {
    outer: LinearCode,
    inner: LinearCode,
    symbol_map: Basis,
}

impl ConcatenationScheme {
    pub fn new(outer: LinearCode, inner: LinearCode, symbol_map: Basis) -> Result<Self> {
        let m = outer.field().m() as usize;
        if !inner.field().is_binary() {
            return Err(Error::FieldMismatch("inner code must be binary".into()));
        }
        if inner.dim() != m {
            return Err(Error::DimensionMismatch(format!(
                "inner dimension {} differs from outer extension degree {m}",
                inner.dim()
            )));
        }
        if symbol_map.spec() != outer.field() {
            return Err(Error::FieldMismatch(
                "symbol map basis is over another field".into(),
            ));
        }
        Ok(ConcatenationScheme {
            outer,
            inner,
            symbol_map,
        })
    }

    /// Scheme with the self-dual basis of the outer field as symbol map.
    pub fn with_self_dual_basis(outer: LinearCode, inner: LinearCode) -> Result<Self> {
        let basis = Basis::self_dual(outer.field());
        Self::new(outer, inner, basis)
    }

    pub fn outer(&self) -> &LinearCode {
        &self.outer
    }

    pub fn inner(&self) -> &LinearCode {
        &self.inner
    }

    pub fn symbol_map(&self) -> &Basis {
        &self.symbol_map
    }
}

/// Binary `[n N, 2t K]` image of the outer code; generator rows are the images
/// of `e_l * g_i` for every outer row `g_i` and basis element `e_l`.
pub fn concatenate(scheme: &ConcatenationScheme) -> Result<LinearCode> {
    let outer = &scheme.outer;
    let inner_gen = scheme
        .inner
        .binary_generator()
        .expect("inner code is binary by construction");
    let field = outer.field();
    let basis = &scheme.symbol_map;
    let (big_n, n) = (outer.len(), scheme.inner.len());
    let cols = big_n * n;
    let mut out = BitMatrix::zeros(0, cols);
    let mut row = vec![0u64; cols.div_ceil(64)];
    for i in 0..outer.dim() {
        for &e in basis.elements() {
            row.iter_mut().for_each(|w| *w = 0);
            for j in 0..big_n {
                let sym = field.mul(e, FieldElement(outer.symbol(i, j)));
                let block = inner_gen.combine(basis.coords(sym) as u64);
                for c in 0..n {
                    if block[c / 64] >> (c % 64) & 1 == 1 {
                        let pos = j * n + c;
                        row[pos / 64] |= 1 << (pos % 64);
                    }
                }
            }
            out.push_row(&row);
        }
    }
    let claimed = match (outer.claimed_distance(), scheme.inner.claimed_distance()) {
        (Some(a), Some(b)) => Some(a * b),
        _ => None,
    };
    Ok(LinearCode::binary(out)?.with_claimed_distance(claimed))
}

/// `[length, dimension, distance]` of a code.
pub type Params = (usize, usize, usize);

/// Outer `[s, v, w]` over GF(2^k) and inner `[n, k, d]` give
/// `[n s, v k, >= w d]`.
pub fn predict_params(outer: Params, outer_degree: usize, inner: Params) -> Result<Params> {
    let (s, v, w) = outer;
    let (n, k, d) = inner;
    if k != outer_degree {
        return Err(Error::DimensionMismatch(format!(
            "inner dimension {k} differs from outer extension degree {outer_degree}"
        )));
    }
    Ok((n * s, v * k, w * d))
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// `1 - 1/(2^t - 1)`.
fn tvz_factor(t: u32) -> BigRational {
    BigRational::one() - BigRational::new(BigInt::one(), pow2(t) - 1)
}

/// `R + (2t/d) delta = (2t/n)(1 - 1/(2^t - 1))` for an `[n, 2t, d]` inner code.
pub fn line_eq5(t: u32, inner_n: usize, inner_d: usize) -> Result<BoundLine> {
    if t < 2 || inner_n < 2 * t as usize || inner_d == 0 {
        return Err(Error::InvalidParameters(format!(
            "need t >= 2, n >= 2t, d >= 1 (t={t}, n={inner_n}, d={inner_d})"
        )));
    }
    let two_t = 2 * t as i64;
    let slope = rational(two_t, inner_d as i64);
    let intercept = rational(two_t, inner_n as i64) * tvz_factor(t);
    BoundLine::new(
        slope,
        intercept,
        format!("eq5-n{inner_n}-k{two_t}-d{inner_d}"),
    )
}

/// Reed-Muller instance: inner `RM((m-1)/2, m)` = `[2^m, 2^(m-1), 2^((m+1)/2)]`,
/// as `R + 2^((m-1)/2) delta = (1/2)(1 - 1/(2^(2^(m-2)) - 1))`. The slope is
/// kept as printed; it is twice the `2t/d` that [`line_eq5`] gives for the
/// same inner code, so this line is the more conservative of the two.
pub fn line_eq6(m: u32) -> Result<BoundLine> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "m = {m} must be odd and >= 3"
        )));
    }
    let slope = BigRational::from_integer(pow2((m - 1) / 2));
    let inner_term = BigRational::new(BigInt::one(), pow2(1 << (m - 2)) - 1);
    let intercept = rational(1, 2) * (BigRational::one() - inner_term);
    BoundLine::new(slope, intercept, format!("eq6-m{m}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table1Flag {
    Match,
    Mismatch,
    /// Extra row recomputed with the distance implied by the printed slope.
    RereadMatch,
    RereadMismatch,
}

impl Table1Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Table1Flag::Match => "match",
            Table1Flag::Mismatch => "mismatch",
            Table1Flag::RereadMatch => "reread-match",
            Table1Flag::RereadMismatch => "reread-mismatch",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub inner: Params,
    pub t: u32,
    pub computed: BoundLine,
    pub printed_slope: BigRational,
    pub printed_intercept: BigRational,
    pub flag: Table1Flag,
}

impl Table1Row {
    pub fn slope_matches(&self) -> bool {
        self.computed.slope() == &self.printed_slope
    }

    pub fn intercept_matches(&self) -> bool {
        self.computed.intercept() == &self.printed_intercept
    }
}

/// `(n, k, d, t, slope, intercept)` with fractions as `(numerator, denominator)`.
type PublishedRow = (usize, usize, usize, u32, (i64, i64), (i64, i64));

/// Published inner codes with their printed bound lines.
const PUBLISHED_ROWS: [PublishedRow; 6] = [
    (22, 10, 8, 5, (5, 4), (150, 341)),
    (24, 12, 8, 6, (3, 2), (31, 63)),
    (28, 14, 6, 7, (7, 4), (63, 127)),
    (40, 20, 8, 10, (5, 2), (511, 1023)),
    (44, 22, 8, 11, (11, 4), (1023, 2047)),
    (64, 32, 12, 16, (8, 3), (32767, 65535)),
];

/// Recomputes each published row from its `[n, 2t, d]` parameters and flags
/// disagreement. A row whose slope disagrees is followed by a re-reading with
/// the inner distance `2t / printed_slope` when that is an integer.
pub fn table1() -> Result<Vec<Table1Row>> {
    let mut rows = Vec::new();
    for &(n, k, d, t, (sn, sd), (inum, iden)) in &PUBLISHED_ROWS {
        let printed_slope = rational(sn, sd);
        let printed_intercept = rational(inum, iden);
        let computed = line_eq5(t, n, d)?;
        let matches =
            computed.slope() == &printed_slope && computed.intercept() == &printed_intercept;
        let row = Table1Row {
            inner: (n, k, d),
            t,
            computed,
            printed_slope: printed_slope.clone(),
            printed_intercept: printed_intercept.clone(),
            flag: if matches {
                Table1Flag::Match
            } else {
                Table1Flag::Mismatch
            },
        };
        let reread_d = (row.computed.slope() != &printed_slope)
            .then(|| rational(2 * t as i64, 1) / &printed_slope)
            .filter(|d| d.is_integer())
            .and_then(|d| d.to_integer().to_usize());
        rows.push(row);
        if let Some(d2) = reread_d {
            let computed = line_eq5(t, n, d2)?;
            let ok =
                computed.slope() == &printed_slope && computed.intercept() == &printed_intercept;
            rows.push(Table1Row {
                inner: (n, k, d2),
                t,
                computed,
                printed_slope,
                printed_intercept,
                flag: if ok {
                    Table1Flag::RereadMatch
                } else {
                    Table1Flag::RereadMismatch
                },
            });
        }
    }
    Ok(rows)
}

/// CSV with header
/// `inner_n,inner_k,inner_d,t,slope_num,slope_den,intercept_num,intercept_den,flag`.
pub fn write_table1_csv<W: Write>(mut w: W, rows: &[Table1Row]) -> io::Result<()> {
    writeln!(
        w,
        "inner_n,inner_k,inner_d,t,slope_num,slope_den,intercept_num,intercept_den,flag"
    )?;
    for r in rows {
        let (n, k, d) = r.inner;
        let s = r.computed.slope();
        let i = r.computed.intercept();
        writeln!(
            w,
            "{n},{k},{d},{},{},{},{},{},{}",
            r.t,
            s.numer(),
            s.denom(),
            i.numer(),
            i.denom(),
            r.flag.as_str()
        )?;
    }
    Ok(())
}

const GOLAY24: &str = include_str!("../data/golay24.code");
const SHORTENED_GOLAY22: &str = include_str!("../data/golay22.code");

/// Bundled inner codes for published rows, when available.
pub fn bundled_inner_code(n: usize, k: usize, d: usize) -> Option<LinearCode> {
    let text = match (n, k, d) {
        (24, 12, 8) => GOLAY24,
        (22, 10, 8) => SHORTENED_GOLAY22,
        _ => return None,
    };
    Some(codefile::parse(text).expect("bundled code files are well formed"))
}
