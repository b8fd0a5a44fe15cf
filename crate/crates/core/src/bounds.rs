//! Entropy function, Gilbert-Varshamov curve, Tsfasman-Vladut-Zink line, and
//! the curve family of the combined constructive bound.
//!
//! Bound lines are kept as exact rationals `R + slope * delta = intercept`;
//! floating point only appears when sampling curves for output.

use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::concat;
use crate::error::{Error, Result};
use crate::expansion;

/// The line `R + slope * delta = intercept` in the `(delta, R)` plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundLine {
    slope: BigRational,
    intercept: BigRational,
    label: String,
}

impl BoundLine {
    pub fn new(
        slope: BigRational,
        intercept: BigRational,
        label: impl Into<String>,
    ) -> Result<Self> {
        if !slope.is_positive() {
            return Err(Error::InvalidParameters(format!(
                "slope {slope} must be positive"
            )));
        }
        if !intercept.is_positive() || intercept >= BigRational::one() {
            return Err(Error::InvalidParameters(format!(
                "intercept {intercept} must lie in (0, 1)"
            )));
        }
        Ok(BoundLine {
            slope,
            intercept,
            label: label.into(),
        })
    }

    pub fn slope(&self) -> &BigRational {
        &self.slope
    }

    pub fn intercept(&self) -> &BigRational {
        &self.intercept
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `R` on the line at `delta` (may be negative).
    pub fn rate_at(&self, delta: &BigRational) -> BigRational {
        &self.intercept - &self.slope * delta
    }

    /// `delta` on the line at rate `R` (may be negative).
    pub fn delta_at(&self, rate: &BigRational) -> BigRational {
        (&self.intercept - rate) / &self.slope
    }

    /// Where the line meets `R = 0`.
    pub fn delta_max(&self) -> BigRational {
        &self.intercept / &self.slope
    }

    /// Same slope and intercept, ignoring labels.
    pub fn same_line(&self, other: &BoundLine) -> bool {
        self.slope == other.slope && self.intercept == other.intercept
    }
}

impl fmt::Display for BoundLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R + ({})δ = {}", self.slope, self.intercept)
    }
}

/// A sampled point of a curve.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundPoint {
    pub delta: f64,
    pub rate: f64,
    pub label: String,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `q`-ary entropy `H_q(x)` on `0 <= x <= (q-1)/q`, with `H_q(0) = 0`.
pub fn entropy_h(q: u32, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::InvalidParameters(format!("alphabet size {q} < 2")));
    }
    let qf = q as f64;
    let upper = (qf - 1.0) / qf;
    if !(0.0..=upper).contains(&x) {
        return Err(Error::InvalidParameters(format!(
            "x = {x} outside [0, {upper}]"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln_q = qf.ln();
    let xlogx = |v: f64| if v == 0.0 { 0.0 } else { v * v.ln() };
    Ok((x * (qf - 1.0).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q)
}

pub const BISECTION_TOLERANCE: f64 = 1e-6;

/// The `delta` in `[0, (q-1)/q]` with `1 - H_q(delta) = rate`, by bisection.
pub fn gv_delta_for_rate(q: u32, rate: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::InvalidParameters(format!(
            "rate {rate} outside [0, 1]"
        )));
    }
    let qf = q as f64;
    let (mut lo, mut hi) = (0.0, (qf - 1.0) / qf);
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if 1.0 - entropy_h(q, mid)? > rate {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Samples of `(delta, 1 - H_q(delta))` labelled `gv`; for `q = 2` the part
/// with `R <= 1/2` is repeated as `gv-so`, closed off at the exact `R = 1/2`
/// crossing.
pub fn gv_curve(q: u32, num_samples: usize) -> Result<Vec<BoundPoint>> {
    let n = num_samples.max(2);
    let qf = q as f64;
    let upper = (qf - 1.0) / qf;
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let delta = if i == n - 1 {
            upper
        } else {
            upper * i as f64 / (n - 1) as f64
        };
        let rate = (1.0 - entropy_h(q, delta)?).max(0.0);
        out.push(BoundPoint {
            delta,
            rate,
            label: "gv".into(),
        });
    }
    if q == 2 {
        let cross = gv_delta_for_rate(2, 0.5)?;
        let mut so = vec![BoundPoint {
            delta: cross,
            rate: 0.5,
            label: "gv-so".into(),
        }];
        so.extend(
            out.iter()
                .filter(|p| p.rate <= 0.5 && p.delta > cross)
                .map(|p| BoundPoint {
                    label: "gv-so".into(),
                    ..p.clone()
                }),
        );
        out.extend(so);
    }
    Ok(out)
}

/// `R + delta = 1 - 1/(l-1)` for AG codes over GF(l^2), `l` a power of two.
pub fn tvz_line(l: u64) -> Result<BoundLine> {
    if l < 3 || !l.is_power_of_two() {
        return Err(Error::InvalidParameters(format!(
            "l = {l} must be a power of two >= 4"
        )));
    }
    let l = BigInt::from(l);
    let intercept = BigRational::one() - BigRational::new(BigInt::one(), l.clone() - 1);
    BoundLine::new(BigRational::one(), intercept, format!("tvz-l{l}"))
}

/// Pointwise upper envelope of a set of bound lines, clipped to `R, delta >= 0`.
#[derive(Clone, Debug)]
pub struct Envelope {
    lines: Vec<BoundLine>,
    vertices: Vec<(BigRational, BigRational)>,
}

impl Envelope {
    pub fn new(lines: Vec<BoundLine>) -> Self {
        assert!(!lines.is_empty(), "envelope of no lines");
        // Start at delta = 0 on the highest intercept, flattest on ties.
        let mut cur = (0..lines.len())
            .max_by(|&a, &b| {
                lines[a]
                    .intercept
                    .cmp(&lines[b].intercept)
                    .then(lines[b].slope.cmp(&lines[a].slope))
            })
            .expect("nonempty");
        let mut delta = BigRational::zero();
        let mut vertices = vec![(delta.clone(), lines[cur].intercept.clone())];
        loop {
            let end = lines[cur].delta_max();
            let next = (0..lines.len())
                .filter(|&j| lines[j].slope < lines[cur].slope)
                .map(|j| {
                    let x = (&lines[cur].intercept - &lines[j].intercept)
                        / (&lines[cur].slope - &lines[j].slope);
                    (x, j)
                })
                .filter(|(x, _)| *x >= delta && *x < end)
                .min_by(|a, b| a.0.cmp(&b.0).then(lines[a.1].slope.cmp(&lines[b.1].slope)));
            match next {
                Some((x, j)) => {
                    let r = lines[cur].rate_at(&x);
                    if x > delta {
                        vertices.push((x.clone(), r));
                    }
                    delta = x;
                    cur = j;
                }
                None => {
                    vertices.push((end, BigRational::zero()));
                    break;
                }
            }
        }
        Envelope { lines, vertices }
    }

    pub fn lines(&self) -> &[BoundLine] {
        &self.lines
    }

    /// Corners of the envelope from `(0, R_max)` to `(delta_max, 0)`.
    pub fn vertices(&self) -> &[(BigRational, BigRational)] {
        &self.vertices
    }

    /// `max(0, max_i(intercept_i - slope_i * delta))`.
    pub fn rate_at(&self, delta: &BigRational) -> BigRational {
        self.lines
            .iter()
            .map(|l| l.rate_at(delta))
            .max()
            .expect("nonempty")
            .max(BigRational::zero())
    }

    /// Best relative distance at rate `R` and the line attaining it.
    pub fn delta_at(&self, rate: &BigRational) -> (BigRational, &BoundLine) {
        let (d, line) = self
            .lines
            .iter()
            .map(|l| (l.delta_at(rate), l))
            .max_by(|a, b| a.0.cmp(&b.0))
            .expect("nonempty");
        (d.max(BigRational::zero()), line)
    }
}

/// Curve selection for [`figure1_data`].
#[derive(Clone, Debug)]
pub struct Figure1Config {
    pub samples: usize,
    pub eq6_m: Vec<u32>,
    pub eq7_t: RangeInclusive<u32>,
}

impl Default for Figure1Config {
    fn default() -> Self {
        Figure1Config {
            samples: 101,
            eq6_m: vec![3, 5, 7],
            eq7_t: 2..=8,
        }
    }
}

/// Concatenation lines: recomputed table rows plus the Reed-Muller family.
pub fn concatenation_lines(config: &Figure1Config) -> Result<Vec<BoundLine>> {
    let mut lines: Vec<BoundLine> = concat::table1()?
        .into_iter()
        .filter(|row| row.flag != concat::Table1Flag::RereadMatch)
        .map(|row| row.computed)
        .collect();
    for &m in &config.eq6_m {
        lines.push(concat::line_eq6(m)?);
    }
    Ok(lines)
}

pub fn expansion_lines(config: &Figure1Config) -> Result<Vec<BoundLine>> {
    config.eq7_t.clone().map(expansion::line_eq7).collect()
}

/// The constructive envelope over both families.
pub fn constructive_envelope(config: &Figure1Config) -> Result<Envelope> {
    let mut lines = concatenation_lines(config)?;
    lines.extend(expansion_lines(config)?);
    Ok(Envelope::new(lines))
}

fn sample_line(line: &BoundLine, samples: usize, out: &mut Vec<BoundPoint>) {
    let n = samples.max(2);
    let end = line.delta_max();
    for i in 0..n {
        let delta = &end * rational(i as i64, (n - 1) as i64);
        let rate = line.rate_at(&delta);
        out.push(BoundPoint {
            delta: to_f64(&delta),
            rate: to_f64(&rate),
            label: line.label().to_string(),
        });
    }
}

/// All curves of the combined bound figure: `gv`, `gv-so`, every
/// construction line sampled on `[0, delta_max]`, and the envelope vertices.
pub fn figure1_data(config: &Figure1Config) -> Result<Vec<BoundPoint>> {
    let mut out = gv_curve(2, config.samples)?;
    let conc = concatenation_lines(config)?;
    let exp = expansion_lines(config)?;
    for line in conc.iter().chain(&exp) {
        sample_line(line, config.samples, &mut out);
    }
    let env = constructive_envelope(config)?;
    out.extend(env.vertices().iter().map(|(d, r)| BoundPoint {
        delta: to_f64(d),
        rate: to_f64(r),
        label: "envelope".into(),
    }));
    Ok(out)
}

/// CSV with header `label,delta,rate`.
pub fn write_points_csv<W: Write>(mut w: W, points: &[BoundPoint]) -> io::Result<()> {
    writeln!(w, "label,delta,rate")?;
    for p in points {
        writeln!(w, "{},{:.8},{:.8}", p.label, p.delta, p.rate)?;
    }
    Ok(())
}
