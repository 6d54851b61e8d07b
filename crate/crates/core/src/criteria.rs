//! Binomial-sum root scanners, sphere-counting identities, and the
//! perfect-code Diophantine scan, all for ternary codes.
//!
//! The scanners take a code whose largest admissible design strength t
//! leaves a gap d-dual minus t of 1, 2, or 3. For each gap ("case") there is
//! an alternating binomial sum in one variable w; its integer roots mark
//! dual weights w + t + 1 whose support designs are candidates for one more
//! level of strength. The candidate verdicts are always re-checked against
//! the exhaustive counting oracle and reported — never presumed.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::am::am_condition;
use crate::code::LinearCode;
use crate::design::{is_t_design, support_design};
use crate::error::{Error, Result};
use crate::subsets::generalized_binomial_big;

/// Parameters of the root-scan sums: code length n, design strength t, and
/// the low weights d_1 < d_2 < ... of the code (one per case level). Each
/// weight yields the exponent pair alpha = n - d - (t+1), beta = d - (t+1);
/// both may be negative, in which case the binomials follow the generalized
/// falling-factorial rule and the scan flags the report as degenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionParams {
    pub n: u32,
    pub t: u32,
    pub weights: Vec<u32>,
}

impl CriterionParams {
    pub fn new(n: u32, t: u32, weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() || weights.len() > 3 {
            return Err(Error::InvalidParameter {
                detail: format!("need 1 to 3 weights, got {}", weights.len()),
            });
        }
        if weights.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidParameter {
                detail: "weights must be strictly increasing".into(),
            });
        }
        Ok(CriterionParams { n, t, weights })
    }

    pub fn alpha(&self, ell: usize) -> i64 {
        self.n as i64 - self.weights[ell] as i64 - (self.t as i64 + 1)
    }

    pub fn beta(&self, ell: usize) -> i64 {
        self.weights[ell] as i64 - (self.t as i64 + 1)
    }

    /// True when any exponent is negative, putting the sum outside the
    /// range the underlying argument covers.
    pub fn degenerate(&self) -> bool {
        (0..self.weights.len()).any(|l| self.alpha(l) < 0 || self.beta(l) < 0)
    }
}

/// Core alternating sum: sum over i + j = w of 2^i C(alpha, i) (-1)^j
/// C(beta, j) — the z^w coefficient of (1+2z)^alpha (1-z)^beta. The 2 is
/// the number of nonzero scalars of the ternary field.
fn pair_sum(alpha: i64, beta: i64, w: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut pow2 = BigInt::one();
    for i in 0..=w as u64 {
        let j = w as u64 - i;
        let mut term =
            generalized_binomial_big(alpha, i) * generalized_binomial_big(beta, j) * &pow2;
        if j % 2 == 1 {
            term = -term;
        }
        acc += term;
        pow2 *= 2;
    }
    acc
}

/// Case-level sum at w. Case 1 is the pair sum for (alpha_1, beta_1); case 2
/// subtracts the second pair; case 3 combines three pairs with the exact
/// rational factors (d3-d1)/(d3-d2) and (d2-d1)/(d3-d2).
pub fn criterion_sum(case: u8, params: &CriterionParams, w: u32) -> Result<BigRational> {
    if !(1..=3).contains(&case) {
        return Err(Error::WrongCase { detail: format!("case {case} is not 1, 2, or 3") });
    }
    if params.weights.len() < case as usize {
        return Err(Error::InvalidParameter {
            detail: format!("case {case} needs {case} weights, got {}", params.weights.len()),
        });
    }
    let s = |l: usize| BigRational::from_integer(pair_sum(params.alpha(l), params.beta(l), w));
    Ok(match case {
        1 => s(0),
        2 => s(0) - s(1),
        3 => {
            let d = |l: usize| BigInt::from(params.weights[l]);
            let den = d(2) - d(1);
            if den.is_zero() {
                return Err(Error::DegenerateDenominator);
            }
            let f2 = BigRational::new(d(2) - d(0), den.clone());
            let f3 = BigRational::new(d(1) - d(0), den);
            s(0) - f2 * s(1) + f3 * s(2)
        }
        _ => unreachable!(),
    })
}

/// Counting-oracle verdict for one candidate dual weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub weight: u32,
    pub strength: u32,
    pub is_design: bool,
    pub lambda: Option<u64>,
}

/// Full root scan of the case sum attached to a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub case: u8,
    pub params: CriterionParams,
    /// Negative exponents occurred; the sum is evaluated by the generalized
    /// rule but lies outside the scope of the argument behind it.
    pub degenerate: bool,
    /// Exact sum value for every w in [0, n].
    pub values: BTreeMap<u32, BigRational>,
    /// All w with value exactly zero.
    pub roots: Vec<u32>,
    /// w + t + 1 for each root: dual weights whose designs are candidates
    /// for strength t + 1.
    pub candidates: Vec<u32>,
    /// Candidates at which the dual actually has codewords.
    pub actionable: Vec<u32>,
    /// Counting-oracle verdict at strength t + 1 for each actionable weight.
    pub outcomes: Vec<CandidateOutcome>,
}

/// Runs the root scan appropriate to the code's strength gap. The code must
/// be ternary and admit some design strength t from the weight-window
/// condition with d-dual - t at most 3; the scan uses the largest such t.
pub fn scan_criterion(c: &LinearCode) -> Result<CriterionReport> {
    if c.modulus() != 3 {
        return Err(Error::NotApplicable {
            reason: format!("root scan is ternary-only; modulus is {}", c.modulus()),
        });
    }
    let am = am_condition(c)?;
    let t = am.t_max.ok_or_else(|| Error::WrongCase {
        detail: "no admissible design strength; the scan needs the weight-window condition".into(),
    })?;
    let gap = am.d_dual - t;
    if !(1..=3).contains(&gap) {
        return Err(Error::WrongCase {
            detail: format!("strength gap {gap} (d-dual {} minus t {t}) is not 1, 2, or 3", am.d_dual),
        });
    }
    let case = gap as u8;

    let n = c.length() as u32;
    // The low weights of the window u <= n - t; the window condition makes
    // exactly `gap` of them nonempty.
    let low: Vec<u32> = c
        .weight_distribution()?
        .nonzero_weights()
        .into_iter()
        .filter(|&u| u <= n - t)
        .collect();
    debug_assert_eq!(low.len(), gap as usize);
    let params = CriterionParams::new(n, t, low)?;
    let degenerate = params.degenerate();

    let mut values = BTreeMap::new();
    let mut roots = Vec::new();
    for w in 0..=n {
        let v = criterion_sum(case, &params, w)?;
        if v.is_zero() {
            roots.push(w);
        }
        values.insert(w, v);
    }
    let candidates: Vec<u32> = roots.iter().map(|&w| w + t + 1).collect();

    let dual = c.dual();
    let dual_wd = dual.weight_distribution()?;
    let actionable: Vec<u32> =
        candidates.iter().copied().filter(|&w| w <= n && dual_wd.count(w) > 0).collect();

    let mut outcomes = Vec::new();
    for &w in &actionable {
        let verdict = is_t_design(&support_design(&dual, w)?, t + 1);
        outcomes.push(CandidateOutcome {
            weight: w,
            strength: t + 1,
            is_design: verdict.is_design,
            lambda: verdict.lambda,
        });
    }

    Ok(CriterionReport { case, params, degenerate, values, roots, candidates, actionable, outcomes })
}

/// Which sphere-counting identity applies to a code's weight-class shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityVariant {
    /// Two nonzero weights; identity needs d-dual >= 5.
    TwoWeight,
    /// Three nonzero weights, largest below n; identity needs d-dual >= 7.
    ThreeWeight,
    /// Three nonzero weights with the largest equal to n; d-dual >= 6.
    ThreeWeightFull,
}

/// Both sides of the sphere-counting identity and the hypothesis verdict.
/// The identity equates 1 + (sum of the nonzero class sizes) with the size
/// of a Hamming ball, so codes realizing it sit on the perfect-code line
/// probed by `diophantine_scan`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub variant: IdentityVariant,
    pub d_dual: u32,
    /// The dual-distance hypothesis under which the identity is proved.
    /// Both sides are still computed when it fails.
    pub hypothesis_met: bool,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

/// Evaluates the sphere-counting identity for a ternary code with two or
/// three nonzero weights.
pub fn check_sphere_identity(c: &LinearCode) -> Result<IdentityReport> {
    if c.modulus() != 3 {
        return Err(Error::NotApplicable {
            reason: format!("sphere identity is ternary-only; modulus is {}", c.modulus()),
        });
    }
    let wd = c.weight_distribution()?;
    let weights = wd.nonzero_weights();
    let n = c.length() as u32;
    let variant = match weights.len() {
        2 => IdentityVariant::TwoWeight,
        3 if *weights.last().unwrap() == n => IdentityVariant::ThreeWeightFull,
        3 => IdentityVariant::ThreeWeight,
        m => {
            return Err(Error::NotApplicable {
                reason: format!("identity needs 2 or 3 nonzero weights, found {m}"),
            })
        }
    };
    let d_dual = c
        .dual()
        .weight_distribution()?
        .min_nonzero_weight()
        .ok_or_else(|| Error::NotApplicable { reason: "dual is the zero code".into() })?;
    let hypothesis_met = match variant {
        IdentityVariant::TwoWeight => d_dual >= 5,
        IdentityVariant::ThreeWeight => d_dual >= 7,
        IdentityVariant::ThreeWeightFull => d_dual >= 6,
    };

    let lhs = weights
        .iter()
        .fold(BigUint::one(), |acc, &w| acc + BigUint::from(wd.count(w)));
    let rhs = match variant {
        IdentityVariant::TwoWeight => ball_size(n as u64, 2, 2),
        IdentityVariant::ThreeWeight => ball_size(n as u64, 3, 2),
        IdentityVariant::ThreeWeightFull => BigUint::from(3u32) * ball_size(n as u64 - 1, 2, 2),
    };
    let holds = lhs == rhs;
    Ok(IdentityReport { variant, d_dual, hypothesis_met, lhs, rhs, holds })
}

/// |B(n, r)| over an alphabet with `scalars` nonzero symbols:
/// sum over i <= r of C(n, i) scalars^i.
fn ball_size(n: u64, r: u64, scalars: u32) -> BigUint {
    let mut acc = BigUint::zero();
    let mut pow = BigUint::one();
    for i in 0..=r {
        acc += generalized_binomial_big(n as i64, i).to_biguint().unwrap() * &pow;
        pow *= scalars;
    }
    acc
}

/// All n <= n_max for which the radius-ell Hamming ball size over an
/// alphabet of size q is an exact power q^k; returns (n, k) pairs in
/// ascending n. This is the sphere-packing equality satisfied by perfect
/// codes.
pub fn diophantine_scan(q: u64, ell: u32, n_max: u64) -> Result<Vec<(u64, u32)>> {
    if q < 2 {
        return Err(Error::InvalidParameter { detail: format!("alphabet size {q} < 2") });
    }
    if ell < 1 || n_max < 1 {
        return Err(Error::InvalidParameter {
            detail: format!("need ell >= 1 and n_max >= 1, got ell={ell} n_max={n_max}"),
        });
    }
    let big_q = BigUint::from(q);
    let qm1 = BigUint::from(q - 1);
    let mut hits = Vec::new();
    for n in 1..=n_max {
        // Incremental ball size: C(n, i) (q-1)^i summed for i <= ell.
        let mut ball = BigUint::one();
        let mut term = BigUint::one();
        for i in 0..ell.min(n as u32) {
            term = term * BigUint::from(n - i as u64) / BigUint::from(i as u64 + 1) * &qm1;
            ball += &term;
        }
        if let Some(k) = exact_log(&ball, &big_q) {
            hits.push((n, k));
        }
    }
    Ok(hits)
}

/// k with value = base^k, if one exists.
fn exact_log(value: &BigUint, base: &BigUint) -> Option<u32> {
    let mut v = value.clone();
    let mut k = 0u32;
    while &v > &BigUint::one() {
        if (&v % base) != BigUint::zero() {
            return None;
        }
        v /= base;
        k += 1;
    }
    (v == BigUint::one()).then_some(k)
}
