//! The Assmus–Mattson strength condition and the instance-level verdicts for
//! the two- and three-weight ternary classification statements.

use crate::code::LinearCode;
use crate::design::{is_t_design, support_design, DesignVerdict};
use crate::error::{Error, Result};
use std::fmt;

/// Result of scanning t = 1 .. d_dual - 1 for the strength condition
///
///   d_dual - t = #{ u : A_u > 0, 0 < u <= n - t }.
///
/// When some t satisfies it, the Assmus–Mattson theorem makes every nonempty
/// support design of C and of its dual a t-design; this report records the
/// claim, and `check_am_guarantee` verifies it by counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMReport {
    pub d_dual: u32,
    /// Every t in [1, d_dual) satisfying the condition, ascending.
    pub admissible_t: Vec<u32>,
    /// The largest admissible t — "the" t, since larger t is a stronger
    /// design conclusion. None when no t qualifies.
    pub t_max: Option<u32>,
    /// (t, window count) for every probed t; the count is non-increasing
    /// in t.
    pub window: Vec<(u32, usize)>,
}

/// Scan the strength condition for a code. Needs the weight distributions of
/// both the code and its dual, so both must be within budget.
pub fn am_condition(c: &LinearCode) -> Result<AMReport> {
    let n = c.length() as u32;
    let weights = c.weight_distribution()?.nonzero_weights();
    let dual = c.dual();
    let d_dual = dual
        .weight_distribution()?
        .min_nonzero_weight()
        .ok_or_else(|| Error::NotApplicable {
            reason: "the dual is the zero code; no dual distance".into(),
        })?;
    let mut admissible = Vec::new();
    let mut window = Vec::new();
    for t in 1..d_dual {
        let count = weights.iter().filter(|&&u| u <= n - t).count();
        window.push((t, count));
        if d_dual - t == count as u32 {
            admissible.push(t);
        }
    }
    Ok(AMReport {
        d_dual,
        t_max: admissible.last().copied(),
        admissible_t: admissible,
        window,
    })
}

/// One counted verdict from the guarantee check: which side of the dual pair,
/// which weight, and the full design verdict at strength t.
#[derive(Clone, Debug)]
pub struct GuaranteeEntry {
    pub dual_side: bool,
    pub weight: u32,
    pub verdict: DesignVerdict,
}

/// Verify by exhaustive counting that every nonempty weight class of C and of
/// its dual carries a t-design — the conclusion the strength condition buys.
pub fn check_am_guarantee(c: &LinearCode, t: u32) -> Result<Vec<GuaranteeEntry>> {
    let mut entries = Vec::new();
    for (dual_side, side) in [(false, c.clone()), (true, c.dual())] {
        for w in side.weight_distribution()?.nonzero_weights() {
            let d = support_design(&side, w)?;
            let verdict = is_t_design(&d, t.min(w));
            entries.push(GuaranteeEntry { dual_side, weight: w, verdict });
        }
    }
    Ok(entries)
}

/// The classification statements this crate can check on an instance.
/// The numeric identifiers are the CLI-facing names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// "1.1": two-weight ternary codes under the strength condition.
    TwoWeight,
    /// "1.2": three-weight ternary codes under the strength condition.
    ThreeWeight,
    /// "1.3": three-weight ternary codes containing a full-weight vector.
    ThreeWeightFull,
}

impl TheoremId {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "1.1" => Some(TheoremId::TwoWeight),
            "1.2" => Some(TheoremId::ThreeWeight),
            "1.3" => Some(TheoremId::ThreeWeightFull),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::TwoWeight => "1.1",
            TheoremId::ThreeWeight => "1.2",
            TheoremId::ThreeWeightFull => "1.3",
        })
    }
}

/// Per-admissible-t outcome of a conclusion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchOutcome {
    pub t: u32,
    /// Which disjunct of the conclusion held (1-based); None if none did.
    pub branch: Option<u8>,
}

/// Instance-level verdict: whether the statement's hypotheses hold for this
/// code, and whether its conclusion checks out for every admissible t.
///
/// `consistent` is expected to be true always — these statements are proved.
/// A false value is a loud anomaly: either an implementation bug or a
/// genuine counterexample, and the full parameter dump travels with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub d_dual: u32,
    pub weight_class_count: usize,
    pub outcomes: Vec<BranchOutcome>,
    pub consistent: bool,
}

/// Check a classification statement against one code.
///
/// Hypotheses that fail (wrong field, wrong weight-class count, no admissible
/// t) are a `NotApplicable` error, not a falsified conclusion.
pub fn verify_theorem_instance(c: &LinearCode, id: TheoremId) -> Result<TheoremVerdict> {
    if c.modulus() != 3 {
        return Err(Error::NotApplicable {
            reason: format!("statement {id} is about ternary codes; this code is over GF({})", c.modulus()),
        });
    }
    let n = c.length();
    let k = c.dimension();
    let wd = c.weight_distribution()?;
    let weights = wd.nonzero_weights();
    let needed_classes = match id {
        TheoremId::TwoWeight => 2,
        TheoremId::ThreeWeight | TheoremId::ThreeWeightFull => 3,
    };
    if weights.len() != needed_classes {
        return Err(Error::NotApplicable {
            reason: format!(
                "statement {id} needs exactly {needed_classes} nonzero weights; this code has {}",
                weights.len()
            ),
        });
    }
    if id == TheoremId::ThreeWeightFull && wd.count(n as u32) == 0 {
        return Err(Error::NotApplicable {
            reason: format!("statement {id} needs a full-weight vector (A_n > 0)"),
        });
    }
    let am = am_condition(c)?;
    if am.admissible_t.is_empty() {
        return Err(Error::NotApplicable {
            reason: "the strength condition has no admissible t for this code".into(),
        });
    }
    let d = weights[0];
    let d_dual = am.d_dual;
    let mut outcomes = Vec::new();
    for &t in &am.admissible_t {
        let branch = match id {
            TheoremId::TwoWeight => {
                if d_dual == 5 && (n, k, d) == (11, 5, 6) && t == 4 {
                    Some(1)
                } else if d_dual <= 4 && t <= 3 {
                    Some(2)
                } else {
                    None
                }
            }
            TheoremId::ThreeWeight => {
                if d_dual <= 6 && t <= 5 {
                    Some(1)
                } else {
                    None
                }
            }
            TheoremId::ThreeWeightFull => {
                if d_dual == 6 && (n, k, d) == (12, 6, 6) && t == 5 {
                    Some(1)
                } else if d_dual <= 5 && t <= 4 {
                    Some(2)
                } else {
                    None
                }
            }
        };
        outcomes.push(BranchOutcome { t, branch });
    }
    let consistent = outcomes.iter().all(|o| o.branch.is_some());
    Ok(TheoremVerdict {
        id,
        n,
        k,
        d,
        d_dual,
        weight_class_count: weights.len(),
        outcomes,
        consistent,
    })
}
