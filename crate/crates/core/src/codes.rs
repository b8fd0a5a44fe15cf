//! Linear codes and the concrete families used as building blocks:
//! Reed-Muller codes, genus-0 evaluation (generalized Reed-Solomon) codes, and
//! a verified self-orthogonal GRS constructor.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};
use crate::gf2la::{self, BitMatrix, FqMatrix};

/// Generator matrix storage; binary codes are bit-packed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Binary(BitMatrix),
    Field(FqMatrix),
}

/// A linear `[n, k]` code held as a full-rank generator matrix.
///
/// `claimed_d` is a design distance. It is advisory: it is a lower bound
/// that consumers able to enumerate the code should re-verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    gen: Generator,
    claimed_d: Option<usize>,
}

impl LinearCode {
    pub fn binary(gen: BitMatrix) -> Result<Self> {
        let rank = gen.rank();
        if rank != gen.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: gen.rows(),
            });
        }
        Ok(LinearCode {
            field: FieldSpec::gf2(),
            gen: Generator::Binary(gen),
            claimed_d: None,
        })
    }

    /// Binary code spanned by the rows of `gen`, which may be dependent.
    pub fn binary_spanned(gen: &BitMatrix) -> Self {
        Self::binary(gen.row_basis()).expect("row basis has full rank")
    }

    /// Code over the field of `gen`. GF(2) generators are repacked as bits.
    pub fn over_field(gen: FqMatrix) -> Result<Self> {
        if gen.spec().is_binary() {
            let bits = BitMatrix::from_fn(gen.rows(), gen.cols(), |r, c| !gen.get(r, c).is_zero());
            return Self::binary(bits);
        }
        let rank = gen.rank();
        if rank != gen.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: gen.rows(),
            });
        }
        Ok(LinearCode {
            field: gen.spec().clone(),
            gen: Generator::Field(gen),
            claimed_d: None,
        })
    }

    pub fn field_spanned(gen: &FqMatrix) -> Self {
        Self::over_field(gen.row_basis()).expect("row basis has full rank")
    }

    pub fn with_claimed_distance(mut self, d: Option<usize>) -> Self {
        self.claimed_d = d;
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn generator(&self) -> &Generator {
        &self.gen
    }

    pub fn binary_generator(&self) -> Option<&BitMatrix> {
        match &self.gen {
            Generator::Binary(g) => Some(g),
            Generator::Field(_) => None,
        }
    }

    pub fn field_generator(&self) -> Option<&FqMatrix> {
        match &self.gen {
            Generator::Field(g) => Some(g),
            Generator::Binary(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match &self.gen {
            Generator::Binary(g) => g.cols(),
            Generator::Field(g) => g.cols(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        match &self.gen {
            Generator::Binary(g) => g.rows(),
            Generator::Field(g) => g.rows(),
        }
    }

    pub fn claimed_distance(&self) -> Option<usize> {
        self.claimed_d
    }

    /// Generator entry as a packed field symbol.
    pub fn symbol(&self, r: usize, c: usize) -> u32 {
        match &self.gen {
            Generator::Binary(g) => g.get(r, c) as u32,
            Generator::Field(g) => g.get(r, c).0,
        }
    }

    /// Exact minimum distance within the enumeration caps.
    pub fn min_distance(&self, jobs: usize) -> Result<usize> {
        match &self.gen {
            Generator::Binary(g) => gf2la::min_distance_binary(g, jobs),
            Generator::Field(g) => gf2la::min_distance_field(g, jobs),
        }
    }

    pub fn weight_distribution(&self, jobs: usize) -> Result<BTreeMap<usize, u64>> {
        match &self.gen {
            Generator::Binary(g) => gf2la::weight_distribution_binary(g, jobs),
            Generator::Field(g) => gf2la::weight_distribution_field(g, jobs),
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        match &self.gen {
            Generator::Binary(g) => g.is_self_orthogonal(),
            Generator::Field(g) => g.is_self_orthogonal(),
        }
    }

    /// Binary code whose every codeword has even weight (weight parity is
    /// linear, so checking generator rows suffices). `false` for non-binary codes.
    pub fn is_even(&self) -> bool {
        match &self.gen {
            Generator::Binary(g) => g.row_iter().all(|r| gf2la::weight(r).is_multiple_of(2)),
            Generator::Field(_) => false,
        }
    }

    /// `[n, n-k]` dual under the ordinary scalar product.
    pub fn dual(&self) -> LinearCode {
        match &self.gen {
            Generator::Binary(g) => LinearCode::binary(g.null_space()).expect("null space basis"),
            Generator::Field(g) => LinearCode {
                field: self.field.clone(),
                gen: Generator::Field(g.null_space()),
                claimed_d: None,
            },
        }
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    /// Whether `other` is a subcode of `self`.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(match (&self.gen, &other.gen) {
            (Generator::Binary(a), Generator::Binary(b)) => a.row_space_contains(b),
            (Generator::Field(a), Generator::Field(b)) => a.row_space_contains(b),
            _ => unreachable!("same field implies same storage"),
        })
    }

    /// Same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.check_compatible(other).is_ok()
            && self.dim() == other.dim()
            && self.contains(other).unwrap_or(false)
    }
}

/// Parameters of a binary Reed-Muller code `RM(r, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RMSpec {
    pub r: u32,
    pub m: u32,
}

pub const MAX_RM_VARIABLES: u32 = 10;

fn binomial(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

/// `sum_{i <= r} C(m, i)`.
pub fn rm_dimension(r: u32, m: u32) -> usize {
    (0..=r.min(m)).map(|i| binomial(m, i)).sum()
}

/// Subsets of `0..m` of size `d` in lexicographic order.
fn combinations(m: u32, d: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, m: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=m - left {
            cur.push(i);
            go(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, d, &mut Vec::new(), &mut out);
    out
}

/// `RM(r, m)`: evaluations of all Boolean monomials of degree `<= r`.
///
/// Points are the integers `0..2^m` with `v_1` as the most significant bit;
/// monomials are ordered by degree, then lexicographically by variable set.
pub fn rm_code(r: u32, m: u32) -> Result<LinearCode> {
    if r > m {
        return Err(Error::InvalidParameters(format!(
            "RM order r={r} exceeds m={m}"
        )));
    }
    if m > MAX_RM_VARIABLES {
        return Err(Error::InvalidParameters(format!(
            "RM codes limited to m <= {MAX_RM_VARIABLES}"
        )));
    }
    let n = 1usize << m;
    let mut g = BitMatrix::zeros(0, n);
    let mut row = vec![0u64; n.div_ceil(64)];
    for d in 0..=r {
        for vars in combinations(m, d) {
            row.iter_mut().for_each(|w| *w = 0);
            for p in 0..n {
                if vars.iter().all(|&v| p >> (m - 1 - v) & 1 == 1) {
                    row[p / 64] |= 1 << (p % 64);
                }
            }
            g.push_row(&row);
        }
    }
    debug_assert_eq!(g.rows(), rm_dimension(r, m));
    Ok(LinearCode::binary(g)?.with_claimed_distance(Some(1 << (m - r))))
}

/// A genus-0 evaluation code: polynomials of degree `<= degree` evaluated at
/// distinct points, optionally scaled by nonzero column multipliers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationCodeSpec {
    field: FieldSpec,
    points: Vec<FieldElement>,
    degree: usize,
    multipliers: Option<Vec<FieldElement>>,
}

impl EvaluationCodeSpec {
    pub fn new(
        field: &FieldSpec,
        points: Vec<FieldElement>,
        degree: usize,
        multipliers: Option<Vec<FieldElement>>,
    ) -> Result<Self> {
        if let Some(bad) = points.iter().find(|p| !field.contains(**p)) {
            return Err(Error::ElementOutOfRange {
                value: bad.0,
                m: field.m(),
            });
        }
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::InvalidParameters(
                "evaluation points are not distinct".into(),
            ));
        }
        if degree >= points.len() {
            return Err(Error::InvalidParameters(format!(
                "degree {degree} must be below the number of points {}",
                points.len()
            )));
        }
        if let Some(v) = &multipliers {
            if v.len() != points.len() {
                return Err(Error::DimensionMismatch(format!(
                    "{} multipliers for {} points",
                    v.len(),
                    points.len()
                )));
            }
            if v.iter().any(|x| x.is_zero() || !field.contains(*x)) {
                return Err(Error::InvalidParameters(
                    "multipliers must be nonzero".into(),
                ));
            }
        }
        Ok(EvaluationCodeSpec {
            field: field.clone(),
            points,
            degree,
            multipliers,
        })
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn multipliers(&self) -> Option<&[FieldElement]> {
        self.multipliers.as_deref()
    }
}

/// `[n, degree+1]` code with generator rows `(v_j x_j^i)`, `i = 0..=degree`,
/// and design distance `n - degree`.
pub fn evaluation_code(spec: &EvaluationCodeSpec) -> LinearCode {
    let f = &spec.field;
    let n = spec.points.len();
    let mut g = FqMatrix::zeros(f, 0, n);
    let mut powers: Vec<FieldElement> = match &spec.multipliers {
        Some(v) => v.clone(),
        None => vec![FieldElement::ONE; n],
    };
    for _ in 0..=spec.degree {
        g.push_row(&powers);
        for (p, &x) in powers.iter_mut().zip(&spec.points) {
            *p = f.mul(*p, x);
        }
    }
    LinearCode::over_field(g)
        .expect("distinct points give a full-rank Vandermonde")
        .with_claimed_distance(Some(n - spec.degree))
}

/// Reed-Solomon code on the first `n` field elements (in integer order).
pub fn rs_code(field: &FieldSpec, n: usize, k: usize) -> Result<LinearCode> {
    if n > field.q() || k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "RS code needs 1 <= k <= n <= q, got n={n} k={k} q={}",
            field.q()
        )));
    }
    let points = field.elements().take(n).collect();
    Ok(evaluation_code(&EvaluationCodeSpec::new(
        field,
        points,
        k - 1,
        None,
    )?))
}

pub fn dual_code(code: &LinearCode) -> LinearCode {
    code.dual()
}

const OUTER_SEARCH_BUDGET: usize = 64;

/// A verified self-orthogonal `[n, k]` GRS code over GF(2^(2t)).
///
/// Self-orthogonality of `GRS_k(x, v)` is the linear system
/// `sum_j u_j x_j^l = 0` for `l = 0..=2k-2` in `u_j = v_j^2`. Points are a
/// seeded random subset of the field; the multiplier vector is drawn from the
/// null space of that system, falling back to `u_j = 1 / prod_{i != j}(x_j - x_i)`.
pub fn self_orthogonal_outer(
    field: &FieldSpec,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<LinearCode> {
    if field.half_degree().is_none() {
        return Err(Error::InvalidParameters(format!(
            "{field} does not have even degree"
        )));
    }
    if k == 0 || 2 * k > n || n > field.q() {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n/2 and n <= q, got n={n} k={k} q={}",
            field.q()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<FieldElement> = field.elements().collect();
    all.shuffle(&mut rng);
    let points: Vec<FieldElement> = all[..n].to_vec();

    let mut system = FqMatrix::zeros(field, 0, n);
    let mut row = vec![FieldElement::ONE; n];
    for _ in 0..(2 * k - 1) {
        system.push_row(&row);
        for (r, &x) in row.iter_mut().zip(&points) {
            *r = field.mul(*r, x);
        }
    }
    let kernel = system.null_space();

    let mut squares = None;
    if kernel.rows() == 1 {
        squares = Some(kernel.row(0).to_vec());
    } else {
        for _ in 0..OUTER_SEARCH_BUDGET {
            let mut u = vec![FieldElement::ZERO; n];
            for r in 0..kernel.rows() {
                let c = FieldElement(rng.gen_range(0..field.q() as u32));
                for (x, &y) in u.iter_mut().zip(kernel.row(r)) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
            if u.iter().all(|x| !x.is_zero()) {
                squares = Some(u);
                break;
            }
        }
    }
    let squares = match squares.filter(|u| u.iter().all(|x| !x.is_zero())) {
        Some(u) => u,
        None => points
            .iter()
            .enumerate()
            .map(|(j, &xj)| {
                let prod = points
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .fold(FieldElement::ONE, |acc, (_, &xi)| {
                        field.mul(acc, field.add(xj, xi))
                    });
                field.inv(prod).expect("points are distinct")
            })
            .collect(),
    };
    let mut mult: Vec<FieldElement> = squares.iter().map(|&u| field.sqrt(u)).collect();
    let norm = field.inv(mult[0])?;
    for v in mult.iter_mut() {
        *v = field.mul(*v, norm);
    }

    let espec = EvaluationCodeSpec::new(field, points, k - 1, Some(mult))?;
    let code = evaluation_code(&espec);
    if !code.is_self_orthogonal() {
        return Err(Error::SearchExhausted(format!(
            "[{n},{k}] over {field} with seed {seed} failed verification"
        )));
    }
    Ok(code)
}
