//! Harmonic (zonal) analysis of support designs.
//!
//! `Harm_k` is the kernel of the down operator that sends a function on
//! k-subsets to its marginal on (k-1)-subsets. Pairing a harmonic function
//! with the supports of a fixed weight class yields one coefficient per
//! weight; a weight class is a t-design exactly when every coefficient
//! attached to degrees 1..=t vanishes. The pairing for a whole code is
//! collected into a two-variable enumerator that transforms to the dual
//! code's enumerator the same way the plain weight enumerator does.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::kernel::{integer_kernel_basis, integer_kernel_basis_bigint};
use crate::subsets::{binomial, colex_masks, colex_rank, indices_of, LexSubsets};

/// Caps on the exhaustive parts of harmonic analysis.
///
/// `max_degree` bounds the harmonic degree k; `max_subsets` bounds the
/// number of k-subsets a basis or moment vector may be indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_subsets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 4, max_subsets: 20_000 }
    }
}

/// A rational-valued function on the k-subsets of {0..n-1}, stored in
/// colexicographic order, lying in the kernel of the down operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicFunction {
    n: usize,
    k: usize,
    values: Vec<BigRational>,
}

impl HarmonicFunction {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value on the subset encoded by `mask` (must have exactly k bits).
    pub fn value_on(&self, mask: u64) -> &BigRational {
        assert_eq!(mask.count_ones() as usize, self.k);
        &self.values[colex_rank(mask)]
    }

    /// Sum of the values over all k-subsets of `support`.
    pub fn lift(&self, support: u64) -> BigRational {
        let mut total = BigRational::zero();
        for_each_k_subset_rank(support, self.k, |rank| total += &self.values[rank]);
        total
    }
}

/// Invokes `visit` with the colex rank of every k-subset of `mask`.
fn for_each_k_subset_rank(mask: u64, k: usize, mut visit: impl FnMut(usize)) {
    let positions = indices_of(mask);
    if k > positions.len() {
        return;
    }
    let mut subsets = LexSubsets::new(positions.len(), k);
    while let Some(choice) = subsets.next_subset() {
        let mut sub = 0u64;
        for &i in choice {
            sub |= 1 << positions[i];
        }
        visit(colex_rank(sub));
    }
}

fn check_degree(n: usize, k: usize, limits: &Limits) -> Result<u64> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidParameter {
            detail: format!("harmonic degree must satisfy 1 <= k <= n/2, got k={k} n={n}"),
        });
    }
    if k > limits.max_degree {
        return Err(Error::SizeCapExceeded {
            what: "harmonic degree",
            needed: k,
            cap: limits.max_degree,
        });
    }
    let subsets = binomial(n as u64, k as u64)?;
    if subsets > limits.max_subsets {
        return Err(Error::SizeCapExceeded {
            what: "indexing subsets",
            needed: subsets as usize,
            cap: limits.max_subsets as usize,
        });
    }
    Ok(subsets)
}

/// Basis of the degree-k harmonic space on n points: the kernel of the
/// marginalization matrix from k-subsets to (k-1)-subsets. The basis has
/// C(n,k) - C(n,k-1) elements, each a primitive integer vector.
pub fn harm_basis(n: usize, k: usize, limits: &Limits) -> Result<Vec<HarmonicFunction>> {
    let n_cols = check_degree(n, k, limits)? as usize;
    let n_rows = binomial(n as u64, k as u64 - 1)? as usize;

    let masks = colex_masks(n, k);
    debug_assert_eq!(masks.len(), n_cols);
    let mut down = vec![0i64; n_rows * n_cols];
    for (col, &mask) in masks.iter().enumerate() {
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            down[colex_rank(mask ^ bit) * n_cols + col] = 1;
            rest ^= bit;
        }
    }

    let kernel = integer_kernel_basis(n_rows, n_cols, &down);
    // The down operator is surjective for k <= n/2, so the kernel dimension
    // is forced by rank-nullity.
    assert_eq!(kernel.len(), n_cols - n_rows, "down operator was not surjective");

    Ok(kernel
        .into_iter()
        .map(|v| HarmonicFunction {
            n,
            k,
            values: v.into_iter().map(BigRational::from_integer).collect(),
        })
        .collect())
}

/// Two-variable enumerator attached to a code and a harmonic function of
/// degree k: the weight-w coefficient multiplies x^(n-k-w') y^(w'-k) after
/// the common factor (xy)^k is stripped, where w' runs over k..=n-k.
/// Stored densely so enumerators of a code and its dual share an index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicEnumerator {
    n: usize,
    k: usize,
    coeffs: Vec<BigRational>,
}

impl HarmonicEnumerator {
    pub fn new(n: usize, k: usize, coeffs: Vec<BigRational>) -> Self {
        assert!(k >= 1 && 2 * k <= n);
        assert_eq!(coeffs.len(), n - 2 * k + 1);
        HarmonicEnumerator { n, k, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Coefficient attached to weight w, for k <= w <= n-k.
    pub fn coefficient(&self, w: u32) -> &BigRational {
        let w = w as usize;
        assert!(self.k <= w && w <= self.n - self.k);
        &self.coeffs[w - self.k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Weights with a nonzero coefficient.
    pub fn support(&self) -> Vec<u32> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .map(|i| (i + self.k) as u32)
            .collect()
    }

    /// Renders the nonzero terms, e.g. `-2 x^7 y^3 + x^2 y^8`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = i + self.k;
            let xe = self.n - self.k - w;
            let ye = w - self.k;
            if out.is_empty() {
                if c.is_negative() {
                    out.push_str("-");
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (xe == 0 && ye == 0) {
                factors.push(mag.to_string());
            }
            for (sym, e) in [("x", xe), ("y", ye)] {
                match e {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{e}")),
                }
            }
            out.push_str(&factors.join(" "));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Per-weight pairing vectors for one code and one degree k: entry T of the
/// weight-w vector counts the weight-w codewords whose support contains T.
pub struct HarmonicContext {
    n: usize,
    k: usize,
    moments: BTreeMap<u32, Vec<u64>>,
}

impl HarmonicContext {
    pub fn new(code: &LinearCode, k: usize, limits: &Limits) -> Result<Self> {
        let n = code.length();
        let n_subsets = check_degree(n, k, limits)? as usize;
        let mut moments: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        code.for_each_codeword(|word, weight| {
            if (weight as usize) < k {
                return;
            }
            let mut support = 0u64;
            for (i, &d) in word.iter().enumerate() {
                if d != 0 {
                    support |= 1 << i;
                }
            }
            let vec = moments
                .entry(weight)
                .or_insert_with(|| vec![0u64; n_subsets]);
            for_each_k_subset_rank(support, k, |rank| vec[rank] += 1);
        })?;
        moments.remove(&0);
        Ok(HarmonicContext { n, k, moments })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Pairing of `f` with the weight-w class alone.
    pub fn coefficient_at(&self, w: u32, f: &HarmonicFunction) -> Result<BigRational> {
        self.check_function(f)?;
        Ok(match self.moments.get(&w) {
            Some(m) => dot(m, &f.values),
            None => BigRational::zero(),
        })
    }

    /// True when the weight-w class pairs to zero with every function in `fs`.
    pub fn weight_vanishes(&self, w: u32, fs: &[HarmonicFunction]) -> Result<bool> {
        for f in fs {
            if !self.coefficient_at(w, f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Full enumerator of the code against `f`. Coefficients at weights
    /// outside k..=n-k vanish identically and are not stored.
    pub fn enumerator(&self, f: &HarmonicFunction) -> Result<HarmonicEnumerator> {
        self.check_function(f)?;
        let mut coeffs = vec![BigRational::zero(); self.n - 2 * self.k + 1];
        for (&w, m) in &self.moments {
            let c = dot(m, &f.values);
            let w = w as usize;
            if w <= self.n - self.k {
                coeffs[w - self.k] = c;
            } else {
                // Supports this large pair to zero with any harmonic function.
                debug_assert!(c.is_zero(), "nonzero coefficient at weight {w}");
            }
        }
        Ok(HarmonicEnumerator::new(self.n, self.k, coeffs))
    }

    fn check_function(&self, f: &HarmonicFunction) -> Result<()> {
        if f.n != self.n || f.k != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.moments.values().next().map_or(0, Vec::len),
                got: f.values.len(),
            });
        }
        Ok(())
    }
}

fn dot(counts: &[u64], values: &[BigRational]) -> BigRational {
    debug_assert_eq!(counts.len(), values.len());
    let mut acc = BigRational::zero();
    for (c, v) in counts.iter().zip(values) {
        if *c != 0 {
            acc += v * BigRational::from_integer(BigInt::from(*c));
        }
    }
    acc
}

/// Enumerator of `code` against the harmonic function `f`.
pub fn harmonic_enumerator(
    code: &LinearCode,
    f: &HarmonicFunction,
    limits: &Limits,
) -> Result<HarmonicEnumerator> {
    HarmonicContext::new(code, f.degree(), limits)?.enumerator(f)
}

/// Image of a degree-k enumerator under the dual substitution
/// x -> x + (p-1) y, y -> x - y (the normalizing scalar is not applied;
/// compare shapes with `proportional_with_scalar`).
pub fn dual_transform(z: &HarmonicEnumerator, p: u8) -> HarmonicEnumerator {
    let n = z.n;
    let k = z.k;
    let width = n - 2 * k + 1;
    let q1 = BigInt::from(p - 1);
    let mut out = vec![BigRational::zero(); width];
    for (i, c) in z.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // Source term x^a y^b with a = n-k-w, b = w-k.
        let a = (width - 1 - i) as u64;
        let b = i as u64;
        for (m, slot) in out.iter_mut().enumerate() {
            let mut t = BigInt::zero();
            for i2 in 0..=(m as u64).min(a) {
                let j = m as u64 - i2;
                if j > b {
                    continue;
                }
                let mut term = big_binomial(a, i2) * big_binomial(b, j) * q1.pow(i2 as u32);
                if j % 2 == 1 {
                    term = -term;
                }
                t += term;
            }
            if !t.is_zero() {
                *slot += c * BigRational::from_integer(t);
            }
        }
    }
    HarmonicEnumerator::new(n, k, out)
}

fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Whether `b` equals `scale * a` for a single rational `scale`. Returns the
/// scale when `a` is not identically zero and the shapes match.
pub fn proportional_with_scalar(
    a: &HarmonicEnumerator,
    b: &HarmonicEnumerator,
) -> (bool, Option<BigRational>) {
    assert_eq!((a.n, a.k), (b.n, b.k));
    for i in 0..a.coeffs.len() {
        for j in (i + 1)..a.coeffs.len() {
            if &a.coeffs[i] * &b.coeffs[j] != &a.coeffs[j] * &b.coeffs[i] {
                return (false, None);
            }
        }
    }
    let scale = a
        .coeffs
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| &b.coeffs[i] / &a.coeffs[i]);
    if let Some(s) = &scale {
        // Cross products only see pairs; pin b = s*a exactly.
        if a.coeffs.iter().zip(&b.coeffs).any(|(x, y)| y != &(s * x)) {
            return (false, None);
        }
    } else if b.coeffs.iter().any(|c| !c.is_zero()) {
        return (false, None);
    }
    (true, scale)
}

/// Batch analyzer caching harmonic bases and pairing vectors per degree for
/// one code.
pub struct HarmonicAnalyzer<'a> {
    code: &'a LinearCode,
    limits: Limits,
    bases: BTreeMap<usize, Vec<HarmonicFunction>>,
    contexts: BTreeMap<usize, HarmonicContext>,
}

impl<'a> HarmonicAnalyzer<'a> {
    pub fn new(code: &'a LinearCode, limits: Limits) -> Self {
        HarmonicAnalyzer { code, limits, bases: BTreeMap::new(), contexts: BTreeMap::new() }
    }

    pub fn basis(&mut self, k: usize) -> Result<&[HarmonicFunction]> {
        if !self.bases.contains_key(&k) {
            let basis = harm_basis(self.code.length(), k, &self.limits)?;
            self.bases.insert(k, basis);
        }
        Ok(self.bases.get(&k).unwrap())
    }

    pub fn context(&mut self, k: usize) -> Result<&HarmonicContext> {
        if !self.contexts.contains_key(&k) {
            let ctx = HarmonicContext::new(self.code, k, &self.limits)?;
            self.contexts.insert(k, ctx);
        }
        Ok(self.contexts.get(&k).unwrap())
    }

    /// Degrees 1..=t whose harmonic space is nonzero (degrees above n/2 are
    /// zero spaces and impose nothing).
    fn active_degrees(&self, t: u32) -> impl Iterator<Item = usize> {
        let n = self.code.length();
        (1..=t as usize).filter(move |j| 2 * j <= n)
    }

    /// Design test through harmonic vanishing alone: the weight-w supports
    /// form a t-design iff every degree-j coefficient at w vanishes for
    /// 1 <= j <= t.
    pub fn design_check(&mut self, w: u32, t: u32) -> Result<bool> {
        let n = self.code.length() as u32;
        if w == 0 || w > n || self.code.weight_distribution()?.count(w) == 0 {
            return Err(Error::EmptyWeight { weight: w });
        }
        if t > w {
            return Err(Error::InvalidParameter {
                detail: format!("strength t={t} exceeds block size w={w}"),
            });
        }
        let degrees: Vec<usize> = self.active_degrees(t).collect();
        for j in degrees {
            self.basis(j)?;
            self.context(j)?;
            let basis = self.bases.get(&j).unwrap();
            let ctx = self.contexts.get(&j).unwrap();
            if !ctx.weight_vanishes(w, basis)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Per-degree vanishing table for one weight: (degree, vanishes) pairs
    /// for each active degree 1..=t.
    pub fn vanishing_profile(&mut self, w: u32, t: u32) -> Result<Vec<(usize, bool)>> {
        let n = self.code.length() as u32;
        if w == 0 || w > n || self.code.weight_distribution()?.count(w) == 0 {
            return Err(Error::EmptyWeight { weight: w });
        }
        let degrees: Vec<usize> = self.active_degrees(t).collect();
        let mut profile = Vec::new();
        for j in degrees {
            self.basis(j)?;
            self.context(j)?;
            let basis = self.bases.get(&j).unwrap();
            let ctx = self.contexts.get(&j).unwrap();
            profile.push((j, ctx.weight_vanishes(w, basis)?));
        }
        Ok(profile)
    }
}

/// Design test through harmonic vanishing alone (no subset counting).
pub fn harmonic_design_check(
    code: &LinearCode,
    w: u32,
    t: u32,
    limits: &Limits,
) -> Result<bool> {
    HarmonicAnalyzer::new(code, *limits).design_check(w, t)
}

/// Solves for enumerator coefficients at `source_weights` (degree-k space on
/// n points) that force the transformed coefficients at `forced_zero` to
/// vanish. Returns a basis of the solution space, one coefficient per source
/// weight.
pub fn solve_dual_vanishing(
    n: usize,
    k: usize,
    p: u8,
    source_weights: &[u32],
    forced_zero: &[u32],
) -> Result<Vec<Vec<BigRational>>> {
    for &w in source_weights.iter().chain(forced_zero) {
        let w = w as usize;
        if w < k || w > n - k {
            return Err(Error::InvalidParameter {
                detail: format!("weight {w} outside the degree-{k} range on {n} points"),
            });
        }
    }
    let q1 = BigInt::from(p - 1);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for &wz in forced_zero {
        let m = wz as usize - k;
        let mut row = Vec::with_capacity(source_weights.len());
        for &ws in source_weights {
            let a = (n - k - ws as usize) as u64;
            let b = (ws as usize - k) as u64;
            let mut t = BigInt::zero();
            for i in 0..=(m as u64).min(a) {
                let j = m as u64 - i;
                if j > b {
                    continue;
                }
                let mut term = big_binomial(a, i) * big_binomial(b, j) * q1.pow(i as u32);
                if j % 2 == 1 {
                    term = -term;
                }
                t += term;
            }
            row.push(t);
        }
        rows.push(row);
    }
    let kernel = integer_kernel_basis_bigint(rows, source_weights.len());
    Ok(kernel
        .into_iter()
        .map(|v| v.into_iter().map(BigRational::from_integer).collect())
        .collect())
}
