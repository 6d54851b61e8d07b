//! Linear codes over GF(p): codeword enumeration, weight data, duals, the
//! MacWilliams transform, and the built-in quadratic-residue Golay codes.

use crate::error::{Error, Result};
use crate::field::{is_supported_prime, Matrix};
use crate::subsets::binomial;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Default enumeration budget: 3^16 codewords.
pub const DEFAULT_BUDGET: u64 = 43_046_721;

/// A k-dimensional linear code of length n over GF(p), carried by a full-rank
/// generator matrix. k = 0 (the zero code, e.g. the dual of the full space)
/// is permitted and enumerates to the single zero word.
pub struct LinearCode {
    generator: Matrix,
    name: Option<String>,
    budget: u64,
    wd: OnceLock<WeightDistribution>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode {
            generator: self.generator.clone(),
            name: self.name.clone(),
            budget: self.budget,
            wd: OnceLock::new(),
        }
    }
}

impl LinearCode {
    /// Wrap a generator matrix. The rows must be independent; a dependent set
    /// is rejected with its actual rank rather than silently reduced.
    pub fn new(generator: Matrix) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        if generator.cols() == 0 {
            return Err(Error::InvalidParameter { detail: "code length must be >= 1".into() });
        }
        if generator.cols() > 63 {
            return Err(Error::InvalidParameter {
                detail: format!("length {} exceeds the 63-coordinate limit", generator.cols()),
            });
        }
        Ok(LinearCode { generator, name: None, budget: DEFAULT_BUDGET, wd: OnceLock::new() })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Replace the enumeration budget (number of codewords allowed). Drops
    /// any cached weight distribution so the new budget gates every
    /// subsequent computation, even on pre-analyzed fixtures.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self.wd = OnceLock::new();
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn modulus(&self) -> u8 {
        self.generator.modulus()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// |C| = p^k, exact.
    pub fn codeword_count(&self) -> u128 {
        (self.modulus() as u128).pow(self.dimension() as u32)
    }

    fn check_budget(&self) -> Result<()> {
        let needed = self.codeword_count();
        if needed > self.budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget: self.budget as u128 });
        }
        Ok(())
    }

    /// Visit every codeword exactly once, in lexicographic message order,
    /// with its Hamming weight. The word buffer is reused between calls.
    ///
    /// The walk is an odometer over the message digits: stepping digit i adds
    /// generator row i once; wrapping a digit from p-1 to 0 adds the row once
    /// more (p * row = 0), so each step is O(n).
    pub fn for_each_codeword<F: FnMut(&[u8], u32)>(&self, mut visit: F) -> Result<()> {
        self.check_budget()?;
        let n = self.length();
        let k = self.dimension();
        let p = self.modulus();
        let mut word = vec![0u8; n];
        let mut digits = vec![0u8; k];
        visit(&word, 0);
        if k == 0 {
            return Ok(());
        }
        let add_row = |word: &mut [u8], row: &[u8]| {
            for (w, &g) in word.iter_mut().zip(row) {
                *w = (*w + g) % p;
            }
        };
        'outer: loop {
            // increment the least significant digit; ripple carries
            let mut i = k - 1;
            loop {
                add_row(&mut word, self.generator.row(i));
                if digits[i] + 1 < p {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 0;
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
            }
            let weight = word.iter().filter(|&&x| x != 0).count() as u32;
            visit(&word, weight);
        }
        Ok(())
    }

    /// All codewords with weights, materialized in enumeration order.
    pub fn enumerate_codewords(&self) -> Result<Vec<(Vec<u8>, u32)>> {
        let mut out = Vec::new();
        self.for_each_codeword(|w, wt| out.push((w.to_vec(), wt)))?;
        Ok(out)
    }

    /// Exact weight distribution; cached after the first enumeration.
    pub fn weight_distribution(&self) -> Result<&WeightDistribution> {
        if let Some(wd) = self.wd.get() {
            return Ok(wd);
        }
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        self.for_each_codeword(|_, wt| *counts.entry(wt).or_insert(0) += 1)?;
        let wd = WeightDistribution { n: self.length(), counts };
        debug_assert_eq!(wd.total() as u128, self.codeword_count());
        Ok(self.wd.get_or_init(|| wd))
    }

    /// Minimum nonzero weight; None for the zero code.
    pub fn minimum_distance(&self) -> Result<Option<u32>> {
        Ok(self.weight_distribution()?.min_nonzero_weight())
    }

    /// The dual code: generated by the nullspace of the generator.
    pub fn dual(&self) -> LinearCode {
        let ns = self.generator.nullspace_basis();
        let dual = LinearCode {
            generator: ns,
            name: self.name.as_ref().map(|n| format!("{n}-dual")),
            budget: self.budget,
            wd: OnceLock::new(),
        };
        debug_assert_eq!(dual.generator.rank(), dual.generator.rows());
        dual
    }

    /// Supports of all weight-w codewords as bitmasks, in enumeration order.
    pub fn supports_of_weight(&self, w: u32) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        self.for_each_codeword(|word, wt| {
            if wt == w {
                let mask = word
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &x)| if x != 0 { m | (1 << i) } else { m });
                out.push(mask);
            }
        })?;
        Ok(out)
    }

    /// Canonical generator (RREF); two codes are equal as sets iff these match.
    pub fn canonical_generator(&self) -> Matrix {
        self.generator.rref().0
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}] code over GF({})",
            self.length(),
            self.dimension(),
            self.modulus()
        )?;
        if let Some(n) = &self.name {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Exact weight profile: weight -> number of codewords of that weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    counts: BTreeMap<u32, u64>,
}

impl WeightDistribution {
    pub fn from_counts(n: usize, counts: BTreeMap<u32, u64>) -> Self {
        WeightDistribution { n, counts }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn count(&self, w: u32) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Distinct nonzero weights, ascending: d_1 < d_2 < ...
    pub fn nonzero_weights(&self) -> Vec<u32> {
        self.counts
            .iter()
            .filter(|(&w, &c)| w > 0 && c > 0)
            .map(|(&w, _)| w)
            .collect()
    }

    pub fn min_nonzero_weight(&self) -> Option<u32> {
        self.nonzero_weights().first().copied()
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, c)) in self.counts.iter().filter(|(_, &c)| c > 0).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// The same data presented as the homogeneous polynomial
/// W(x, y) = sum_u A_u x^(n-u) y^u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: BTreeMap<u32, u64>,
}

impl From<&WeightDistribution> for WeightEnumerator {
    fn from(wd: &WeightDistribution) -> Self {
        WeightEnumerator { n: wd.n, counts: wd.counts.clone() }
    }
}

impl WeightEnumerator {
    pub fn from_counts(n: usize, counts: BTreeMap<u32, u64>) -> Self {
        WeightEnumerator { n, counts }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, w: u32) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn to_distribution(&self) -> WeightDistribution {
        WeightDistribution { n: self.n, counts: self.counts.clone() }
    }

    /// Polynomial rendering, e.g. "x^11 + 132 x^5 y^6 + 110 x^2 y^9".
    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (&w, &a) in self.counts.iter().filter(|(_, &a)| a > 0) {
            let mut t = String::new();
            if a != 1 {
                t.push_str(&format!("{a} "));
            }
            let xe = self.n as u32 - w;
            match xe {
                0 => {}
                1 => t.push_str("x "),
                _ => t.push_str(&format!("x^{xe} ")),
            }
            match w {
                0 => {}
                1 => t.push_str("y "),
                _ => t.push_str(&format!("y^{w} ")),
            }
            if xe == 0 && w == 0 {
                t.push_str(&a.to_string());
            }
            terms.push(t.trim_end().to_string());
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// MacWilliams transform: W_{C-dual}(x, y) = |C|^-1 W_C(x + (p-1)y, x - y).
///
/// Computed coefficient-wise through Krawtchouk sums in checked 128-bit
/// arithmetic. A non-integer or negative coefficient means the input was not
/// the weight enumerator of a k-dimensional code over GF(p).
pub fn macwilliams_dual_enumerator(
    w: &WeightEnumerator,
    k: u32,
    p: u8,
) -> Result<WeightEnumerator> {
    if !is_supported_prime(p) {
        return Err(Error::InvalidParameter {
            detail: format!("modulus {p} is not a supported prime (2..13)"),
        });
    }
    let n = w.n as u64;
    let order = (p as i128).checked_pow(k).ok_or(Error::Overflow { context: "macwilliams" })?;
    let q1 = (p - 1) as i128;
    let mut out: BTreeMap<u32, u64> = BTreeMap::new();
    for wt in 0..=n {
        // Krawtchouk: K_wt(u) = sum_j (-1)^j (p-1)^(wt-j) C(u, j) C(n-u, wt-j)
        let mut acc: i128 = 0;
        for (&u, &a) in w.counts.iter() {
            let u = u as u64;
            let mut kraw: i128 = 0;
            for j in 0..=wt.min(u) {
                if wt - j > n - u {
                    continue;
                }
                let term = binomial(u, j)? as i128
                    * binomial(n - u, wt - j)? as i128
                    * q1.pow((wt - j) as u32)
                    * if j % 2 == 0 { 1 } else { -1 };
                kraw = kraw.checked_add(term).ok_or(Error::Overflow { context: "macwilliams" })?;
            }
            acc = acc
                .checked_add(
                    (a as i128)
                        .checked_mul(kraw)
                        .ok_or(Error::Overflow { context: "macwilliams" })?,
                )
                .ok_or(Error::Overflow { context: "macwilliams" })?;
        }
        if acc % order != 0 || acc / order < 0 {
            return Err(Error::NonIntegerCoefficient { weight: wt as u32 });
        }
        let coeff = acc / order;
        if coeff > u64::MAX as i128 {
            return Err(Error::Overflow { context: "macwilliams" });
        }
        if coeff > 0 {
            out.insert(wt as u32, coeff as u64);
        }
    }
    Ok(WeightEnumerator { n: w.n, counts: out })
}

/// The ternary [11,6,5] Golay code via the quadratic-residue construction:
/// rows are the cyclic shifts of g(x) = gcd(x^11 - 1, sum_{r in QR(11)} x^r)
/// over GF(3). Parameters are re-verified on every construction.
pub fn construct_golay() -> LinearCode {
    let p = 3u8;
    // QR(11) = squares of 1..10 mod 11
    let mut qr = [false; 11];
    for a in 1..11u32 {
        qr[(a * a % 11) as usize] = true;
    }
    let mut q_poly = vec![0i64; 12];
    for (r, &is_qr) in qr.iter().enumerate() {
        if is_qr {
            q_poly[r] = 1;
        }
    }
    let mut x11_minus_1 = vec![0i64; 12];
    x11_minus_1[0] = -1;
    x11_minus_1[11] = 1;
    let g = poly_gcd_mod(&x11_minus_1, &q_poly, p);
    assert_eq!(g.len() - 1, 5, "QR generator polynomial must have degree 5");
    let k = 11 - (g.len() - 1);
    let rows: Vec<Vec<u8>> = (0..k)
        .map(|shift| {
            let mut row = vec![0u8; 11];
            for (j, &c) in g.iter().enumerate() {
                row[shift + j] = c;
            }
            row
        })
        .collect();
    let code = LinearCode::new(Matrix::from_rows(p, &rows).expect("valid rows"))
        .expect("QR shifts are independent")
        .with_name("golay11");
    let wd = code.weight_distribution().expect("within budget");
    assert_eq!(wd.min_nonzero_weight(), Some(5), "self-check: golay11 has d = 5");
    assert_eq!(wd.total(), 729);
    code
}

/// The [11,5,6] dual of the QR Golay code — the two-weight code with
/// weights {6, 9}.
pub fn construct_golay_dual() -> LinearCode {
    let code = construct_golay().dual().with_name("golay11dual");
    let wd = code.weight_distribution().expect("within budget");
    assert_eq!(wd.nonzero_weights(), vec![6, 9], "self-check: dual weights {{6, 9}}");
    code
}

/// The extended ternary [12,6,6] Golay code: the [11,6] code plus a zero-sum
/// check coordinate.
pub fn construct_extended_golay() -> LinearCode {
    let base = construct_golay();
    let rows: Vec<Vec<u8>> = base
        .generator()
        .row_vecs()
        .into_iter()
        .map(|mut r| {
            let sum: u32 = r.iter().map(|&x| x as u32).sum();
            r.push(((3 - sum % 3) % 3) as u8);
            r
        })
        .collect();
    let code = LinearCode::new(Matrix::from_rows(3, &rows).expect("valid rows"))
        .expect("extension preserves independence")
        .with_name("golay12");
    let wd = code.weight_distribution().expect("within budget");
    assert_eq!(wd.min_nonzero_weight(), Some(6), "self-check: golay12 has d = 6");
    assert_eq!(wd.nonzero_weights(), vec![6, 9, 12]);
    code
}

/// Monic gcd of two polynomials over GF(p); coefficient vectors are
/// constant-first, inputs given over the integers.
fn poly_gcd_mod(a: &[i64], b: &[i64], p: u8) -> Vec<u8> {
    let reduce = |v: &[i64]| -> Vec<u8> {
        let mut r: Vec<u8> = v.iter().map(|&x| x.rem_euclid(p as i64) as u8).collect();
        while r.len() > 1 && *r.last().unwrap() == 0 {
            r.pop();
        }
        r
    };
    let mut x = reduce(a);
    let mut y = reduce(b);
    let inv = |v: u8| -> u8 { (1..p).find(|&c| c as u16 * v as u16 % p as u16 == 1).unwrap() };
    while !(y.len() == 1 && y[0] == 0) {
        // x mod y
        let mut rem = x.clone();
        let lead_inv = inv(*y.last().unwrap());
        while rem.len() >= y.len() && !(rem.len() == 1 && rem[0] == 0) {
            let shift = rem.len() - y.len();
            let factor = (rem.last().unwrap() * lead_inv) % p;
            if factor != 0 {
                for (i, &c) in y.iter().enumerate() {
                    let idx = shift + i;
                    rem[idx] = (rem[idx] + p - (factor * c) % p) % p;
                }
            }
            while rem.len() > 1 && *rem.last().unwrap() == 0 {
                rem.pop();
            }
            if rem.len() < y.len() {
                break;
            }
        }
        x = y;
        y = rem;
    }
    // normalize monic
    let lead = *x.last().unwrap();
    if lead > 1 {
        let f = inv(lead);
        for c in &mut x {
            *c = (*c * f) % p;
        }
    }
    x
}
