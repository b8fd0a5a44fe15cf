//! Linear algebra over GF(2) (bit-packed) and over GF(2^m) (dense), plus
//! exhaustive minimum-distance and weight-distribution enumeration.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};

const WORD: usize = 64;

/// Largest binary dimension accepted by exhaustive enumeration.
pub const MAX_BINARY_ENUM_DIM: usize = 28;
/// Largest `k*m` accepted when enumerating a code over GF(2^m).
pub const MAX_FIELD_ENUM_BITS: usize = 24;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

/// Dot product over GF(2) of two packed rows.
pub fn dot(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub fn weight(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Row-major bit-packed matrix over GF(2).
///
/// Bits beyond `cols` in the last word of each row are always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced row-echelon form with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<M> {
    pub matrix: M,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Parses rows written as strings of `0`/`1` characters.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| rows[r].as_bytes()[c] == b'1')
    }

    /// Builds a matrix from already-packed rows; stray high bits are masked off.
    pub fn from_packed_rows<'a>(cols: usize, rows: impl IntoIterator<Item = &'a [u64]>) -> Self {
        let mut m = Self::zeros(0, cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of `u64` words per row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let w = &mut self.data[r * self.stride + c / WORD];
        if v {
            *w |= 1 << (c % WORD);
        } else {
            *w &= !(1 << (c % WORD));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u64]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    fn tail_mask(&self) -> u64 {
        match self.cols % WORD {
            0 => u64::MAX,
            r => (1u64 << r) - 1,
        }
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert!(row.len() >= self.stride, "row too short");
        let start = self.data.len();
        self.data.extend_from_slice(&row[..self.stride]);
        if self.stride > 0 {
            let mask = self.tail_mask();
            self.data[start + self.stride - 1] &= mask;
        }
        self.rows += 1;
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        xor_into(a, b);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.data.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    /// Reduced row-echelon form (leftmost pivot, topmost row). Zero rows stay
    /// at the bottom.
    pub fn rref(&self) -> Echelon<BitMatrix> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the row space (the nonzero rows of the RREF).
    pub fn row_basis(&self) -> BitMatrix {
        let e = self.rref();
        let mut m = e.matrix;
        m.rows = e.rank;
        m.data.truncate(e.rank * m.stride);
        m
    }

    /// Generator of `{y : G y^T = 0}`, one row per free column.
    pub fn null_space(&self) -> BitMatrix {
        let e = self.rref();
        let mut out = BitMatrix::zeros(0, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut v = vec![0u64; self.stride];
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            v.iter_mut().for_each(|w| *w = 0);
            v[f / WORD] |= 1 << (f % WORD);
            for (i, &p) in e.pivots.iter().enumerate() {
                if e.matrix.get(i, f) {
                    v[p / WORD] |= 1 << (p % WORD);
                }
            }
            out.push_row(&v);
        }
        out
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        BitMatrix::from_fn(self.rows, other.rows, |i, j| dot(self.row(i), other.row(j)))
    }

    /// `G G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        (0..self.rows).all(|i| (i..self.rows).all(|j| !dot(self.row(i), self.row(j))))
    }

    /// Whether `v` lies in the row space of an RREF with the given pivots.
    pub fn reduces_to_zero(rref: &Echelon<BitMatrix>, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        for (i, &p) in rref.pivots.iter().enumerate() {
            if v[p / WORD] >> (p % WORD) & 1 == 1 {
                xor_into(&mut v, rref.matrix.row(i));
            }
        }
        v.iter().all(|&w| w == 0)
    }

    /// Row space of `other` is contained in the row space of `self`.
    pub fn row_space_contains(&self, other: &BitMatrix) -> bool {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let e = self.rref();
        other.row_iter().all(|r| Self::reduces_to_zero(&e, r))
    }

    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut m = self.clone();
        m.rows += other.rows;
        m.data.extend_from_slice(&other.data);
        m
    }

    /// Sum of the rows selected by the bits of `mask`.
    pub fn combine(&self, mask: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.stride];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            xor_into(&mut v, self.row(i));
            bits &= bits - 1;
        }
        v
    }

    /// Row `r` as a `0`/`1` string.
    pub fn row_string(&self, r: usize) -> String {
        (0..self.cols)
            .map(|c| if self.get(r, c) { '1' } else { '0' })
            .collect()
    }
}

/// Dense matrix over GF(2^m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FqMatrix {
    pub fn zeros(spec: &FieldSpec, rows: usize, cols: usize) -> Self {
        FqMatrix {
            spec: spec.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_rows(spec: &FieldSpec, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|e| !spec.contains(**e)) {
                return Err(Error::ElementOutOfRange {
                    value: bad.0,
                    m: spec.m(),
                });
            }
            data.extend(row);
        }
        Ok(FqMatrix {
            spec: spec.clone(),
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        assert!(self.spec.contains(v), "entry outside the field");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[FieldElement]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| {
            self.spec.add(acc, self.spec.mul(x, y))
        })
    }

    pub fn rref(&self) -> Echelon<FqMatrix> {
        let f = &self.spec;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(r * cols + j, p * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..cols {
                let v = f.mul(m.get(r, j), inv);
                m.data[r * cols + j] = v;
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && !factor.is_zero() {
                    for j in 0..cols {
                        let v = f.add(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.data[i * cols + j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn row_basis(&self) -> FqMatrix {
        let e = self.rref();
        let mut m = e.matrix;
        m.rows = e.rank;
        m.data.truncate(e.rank * m.cols);
        m
    }

    /// Null space under the ordinary (non-Hermitian) scalar product.
    pub fn null_space(&self) -> FqMatrix {
        let e = self.rref();
        let mut out = FqMatrix::zeros(&self.spec, 0, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[f] = FieldElement::ONE;
            // characteristic 2: -a = a
            for (i, &p) in e.pivots.iter().enumerate() {
                v[p] = e.matrix.get(i, f);
            }
            out.push_row(&v);
        }
        out
    }

    pub fn mul_transpose(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut out = FqMatrix::zeros(&self.spec, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.data[i * other.rows + j] = self.dot(self.row(i), other.row(j));
            }
        }
        out
    }

    pub fn is_self_orthogonal(&self) -> bool {
        (0..self.rows).all(|i| (i..self.rows).all(|j| self.dot(self.row(i), self.row(j)).is_zero()))
    }

    pub fn reduces_to_zero(rref: &Echelon<FqMatrix>, v: &[FieldElement]) -> bool {
        let f = rref.matrix.spec();
        let mut v = v.to_vec();
        for (i, &p) in rref.pivots.iter().enumerate() {
            let factor = v[p];
            if !factor.is_zero() {
                for (x, &y) in v.iter_mut().zip(rref.matrix.row(i)) {
                    *x = f.add(*x, f.mul(factor, y));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn row_space_contains(&self, other: &FqMatrix) -> bool {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let e = self.rref();
        (0..other.rows).all(|r| Self::reduces_to_zero(&e, other.row(r)))
    }

    pub fn same_row_space(&self, other: &FqMatrix) -> bool {
        self.spec == other.spec && self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// The GF(2)-generating set `{x^j g_i}` of the row space, `j < m`, with
    /// each entry kept as a packed symbol.
    fn binary_image_rows(&self) -> Vec<Vec<u32>> {
        let f = &self.spec;
        let mut out = Vec::with_capacity(self.rows * f.m() as usize);
        for r in 0..self.rows {
            for j in 0..f.m() {
                let scale = FieldElement(1 << j);
                out.push(self.row(r).iter().map(|&x| f.mul(scale, x).0).collect());
            }
        }
        out
    }
}

/// Splits `1..2^k` into at most `jobs` contiguous ranges.
fn partitions(k: usize, jobs: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << k;
    let jobs = (jobs.max(1) as u64).min(total.saturating_sub(1).max(1));
    let span = (total - 1).div_ceil(jobs);
    (0..jobs)
        .map(|j| (1 + j * span, (1 + (j + 1) * span).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Visits the weights of codewords `gray(i)` for `i` in `[start, end)`,
/// updating one generator row per step.
fn walk_binary(g: &BitMatrix, start: u64, end: u64, mut visit: impl FnMut(usize)) {
    let mut cw = g.combine(gray(start));
    visit(weight(&cw));
    for i in start + 1..end {
        let bit = i.trailing_zeros() as usize;
        xor_into(&mut cw, g.row(bit));
        visit(weight(&cw));
    }
}

fn walk_symbols(rows: &[Vec<u32>], start: u64, end: u64, mut visit: impl FnMut(usize)) {
    let n = rows.first().map_or(0, |r| r.len());
    let mut cw = vec![0u32; n];
    let mut bits = gray(start);
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        cw.iter_mut().zip(&rows[i]).for_each(|(c, r)| *c ^= r);
        bits &= bits - 1;
    }
    let wt = |cw: &[u32]| cw.iter().filter(|&&s| s != 0).count();
    visit(wt(&cw));
    for i in start + 1..end {
        let bit = i.trailing_zeros() as usize;
        cw.iter_mut().zip(&rows[bit]).for_each(|(c, r)| *c ^= r);
        visit(wt(&cw));
    }
}

fn run_sharded<T: Send>(k: usize, jobs: usize, work: impl Fn(u64, u64) -> T + Sync) -> Vec<T> {
    let parts = partitions(k, jobs);
    if parts.len() <= 1 {
        return parts.into_iter().map(|(a, b)| work(a, b)).collect();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = parts
            .iter()
            .map(|&(a, b)| {
                s.spawn({
                    let work = &work;
                    move || work(a, b)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    })
}

/// Enumeration source: a binary generator, or the GF(2) image of a field one.
enum Source<'a> {
    Binary(&'a BitMatrix),
    Symbols(Vec<Vec<u32>>),
}

impl Source<'_> {
    fn dim(&self) -> usize {
        match self {
            Source::Binary(g) => g.rows(),
            Source::Symbols(rows) => rows.len(),
        }
    }

    fn walk(&self, start: u64, end: u64, visit: impl FnMut(usize)) {
        match self {
            Source::Binary(g) => walk_binary(g, start, end, visit),
            Source::Symbols(rows) => walk_symbols(rows, start, end, visit),
        }
    }
}

fn binary_source(g: &BitMatrix) -> Result<Source<'_>> {
    if g.rows() > MAX_BINARY_ENUM_DIM {
        return Err(Error::CapExceeded(format!(
            "binary dimension {} exceeds {MAX_BINARY_ENUM_DIM}",
            g.rows()
        )));
    }
    if g.rank() != g.rows() {
        return Err(Error::RankDeficient {
            rank: g.rank(),
            rows: g.rows(),
        });
    }
    Ok(Source::Binary(g))
}

fn field_source(g: &FqMatrix) -> Result<Source<'static>> {
    let bits = g.rows() * g.spec().m() as usize;
    if bits > MAX_FIELD_ENUM_BITS {
        return Err(Error::CapExceeded(format!(
            "k*m = {bits} exceeds {MAX_FIELD_ENUM_BITS}"
        )));
    }
    let rank = g.rank();
    if rank != g.rows() {
        return Err(Error::RankDeficient {
            rank,
            rows: g.rows(),
        });
    }
    Ok(Source::Symbols(g.binary_image_rows()))
}

fn min_distance_of(src: &Source<'_>, jobs: usize) -> Result<usize> {
    if src.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let mins = run_sharded(src.dim(), jobs, |a, b| {
        let mut best = usize::MAX;
        src.walk(a, b, |w| best = best.min(w));
        best
    });
    Ok(mins.into_iter().min().expect("at least one partition"))
}

fn distribution_of(src: &Source<'_>, jobs: usize) -> BTreeMap<usize, u64> {
    let mut dist = BTreeMap::from([(0, 1u64)]);
    if src.dim() == 0 {
        return dist;
    }
    let parts = run_sharded(src.dim(), jobs, |a, b| {
        let mut local = BTreeMap::new();
        src.walk(a, b, |w| *local.entry(w).or_insert(0u64) += 1);
        local
    });
    for part in parts {
        for (w, c) in part {
            *dist.entry(w).or_insert(0) += c;
        }
    }
    dist
}

/// Exact minimum Hamming weight of the nonzero codewords of a full-rank
/// binary generator, enumerated over `jobs` contiguous Gray-code ranges.
pub fn min_distance_binary(g: &BitMatrix, jobs: usize) -> Result<usize> {
    min_distance_of(&binary_source(g)?, jobs)
}

pub fn weight_distribution_binary(g: &BitMatrix, jobs: usize) -> Result<BTreeMap<usize, u64>> {
    Ok(distribution_of(&binary_source(g)?, jobs))
}

/// Minimum symbol weight of a code over GF(2^m), enumerated through its
/// binary image (`q^k <= 2^24`).
pub fn min_distance_field(g: &FqMatrix, jobs: usize) -> Result<usize> {
    min_distance_of(&field_source(g)?, jobs)
}

pub fn weight_distribution_field(g: &FqMatrix, jobs: usize) -> Result<BTreeMap<usize, u64>> {
    Ok(distribution_of(&field_source(g)?, jobs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rm13() -> BitMatrix {
        BitMatrix::from_strs(&["11111111", "00001111", "00110011", "01010101"])
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
    }

    #[test]
    fn rref_identity_and_repeats() {
        let id = BitMatrix::identity(4);
        let e = id.rref();
        assert_eq!(e.matrix, id);
        assert_eq!(e.rank, 4);
        let rep = BitMatrix::from_strs(&["1010", "1010", "0110"]);
        assert_eq!(rep.rank(), 2);
        assert_eq!(rm13().rank(), 4);
    }

    #[test]
    fn rref_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 6, 70);
            let once = m.rref();
            let twice = once.matrix.rref();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn dual_space_rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let rows = rng.gen_range(1..10);
            let cols = rng.gen_range(1..80);
            let g = random_matrix(&mut rng, rows, cols);
            let h = g.null_space();
            assert_eq!(g.rank() + h.rank(), cols);
            let prod = g.mul_transpose(&h);
            assert_eq!(prod.rank(), 0);
        }
        assert_eq!(BitMatrix::identity(5).null_space().rows(), 0);
    }

    #[test]
    fn double_dual_restores_row_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let k = rng.gen_range(1..=12);
            let g = random_matrix(&mut rng, k, 20);
            assert!(g.null_space().null_space().same_row_space(&g));
        }
    }

    #[test]
    fn rm13_is_self_dual() {
        let g = rm13();
        assert!(g.is_self_orthogonal());
        assert!(g.null_space().same_row_space(&g));
    }

    #[test]
    fn self_orthogonality_matches_subcode_test() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let rows = rng.gen_range(1..4);
            let g = random_matrix(&mut rng, rows, 6);
            let so = g.is_self_orthogonal();
            assert_eq!(so, g.null_space().row_space_contains(&g));
        }
        assert!(!BitMatrix::from_strs(&["111"]).is_self_orthogonal());
    }

    #[test]
    fn min_distances() {
        assert_eq!(
            min_distance_binary(&BitMatrix::from_strs(&["11111"]), 1),
            Ok(5)
        );
        assert_eq!(min_distance_binary(&rm13(), 1), Ok(4));
        let d = weight_distribution_binary(&rm13(), 1).unwrap();
        assert_eq!(d, BTreeMap::from([(0, 1), (4, 14), (8, 1)]));
        let d = weight_distribution_binary(&BitMatrix::from_strs(&["11"]), 3).unwrap();
        assert_eq!(d, BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(
            min_distance_binary(&BitMatrix::zeros(0, 4), 1),
            Err(Error::ZeroCode)
        );
        assert!(matches!(
            min_distance_binary(&BitMatrix::from_strs(&["11", "11"]), 1),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let g = BitMatrix::identity(29);
        assert!(matches!(
            min_distance_binary(&g, 1),
            Err(Error::CapExceeded(_))
        ));
    }

    /// Brute force over all 2^k messages, independent of the Gray walk.
    fn brute_min(g: &BitMatrix) -> usize {
        (1u64..1 << g.rows())
            .map(|m| weight(&g.combine(m)))
            .min()
            .unwrap()
    }

    #[test]
    fn partitioned_enumeration_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let k = rng.gen_range(1..=10);
            let cols = rng.gen_range(k..100);
            let g = random_matrix(&mut rng, k, cols);
            if g.rank() < k {
                continue;
            }
            let expected = brute_min(&g);
            let dist1 = weight_distribution_binary(&g, 1).unwrap();
            for jobs in [1, 2, 3, 7, 64] {
                assert_eq!(min_distance_binary(&g, jobs), Ok(expected));
                assert_eq!(weight_distribution_binary(&g, jobs).unwrap(), dist1);
            }
            assert_eq!(dist1.values().sum::<u64>(), 1 << k);
            assert_eq!(*dist1.keys().nth(1).unwrap(), expected);
        }
    }

    #[test]
    fn fq_linear_algebra() {
        let f = FieldSpec::new(2, Some(0b111)).unwrap();
        let one = FieldElement::ONE;
        let g = FqMatrix::from_rows(&f, 2, vec![vec![one, one]]).unwrap();
        assert!(g.is_self_orthogonal());
        let h = g.null_space();
        assert_eq!(h.rows(), 1);
        assert!(h.same_row_space(&g));
        assert_eq!(min_distance_field(&g, 1), Ok(2));
        let dist = weight_distribution_field(&g, 2).unwrap();
        assert_eq!(dist, BTreeMap::from([(0, 1), (2, 3)]));
    }

    #[test]
    fn fq_rank_nullity() {
        let f = FieldSpec::with_degree(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..10);
            let data = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| FieldElement(rng.gen_range(0..16)))
                        .collect()
                })
                .collect();
            let g = FqMatrix::from_rows(&f, cols, data).unwrap();
            let h = g.null_space();
            assert_eq!(g.rank() + h.rank(), cols);
            assert!(g.mul_transpose(&h).rank() == 0);
            assert!(h.null_space().same_row_space(&g));
            let e = g.rref();
            assert_eq!(e.matrix.rref(), e);
        }
    }
}
