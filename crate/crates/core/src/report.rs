//! Serializable analysis reports and their human-readable rendering.
//!
//! Every numeric value is carried as an exact decimal (or `p/q` rational)
//! string so JSON consumers never coerce through floats. The same strings
//! feed the text renderer, keeping both formats numerically identical.
//! Point labels in subsets are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::am::{self, TheoremId};
use crate::code::{self, LinearCode};
use crate::criteria::{self, IdentityVariant};
use crate::design::{self, Witness};
use crate::error::Result;
use crate::harmonic::{self, HarmonicAnalyzer, Limits};
use crate::io::render_code_file;

pub const SCHEMA: &str = "am-designs/1";

/// Top-level wrapper: schema version plus one command's report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: String,
    #[serde(flatten)]
    pub report: Report,
}

impl Envelope {
    pub fn new(report: Report) -> Self {
        Envelope { schema: SCHEMA.into(), report }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Analyze(AnalyzeReport),
    Design(DesignReport),
    Am(AmConditionReport),
    Theorem(TheoremReport),
    Harmonic(HarmonicReport),
    Criterion(CriterionScanReport),
    Identity(IdentitySummary),
    Diophantine(DiophantineReport),
    Fixtures(FixturesReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub modulus: String,
    pub length: String,
    pub dimension: String,
    pub codewords: String,
    /// Minimum nonzero weight; absent only for the zero code.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_distance: Option<String>,
}

impl CodeSummary {
    pub fn of(c: &LinearCode) -> Result<Self> {
        Ok(CodeSummary {
            name: c.name().map(str::to_owned),
            modulus: c.modulus().to_string(),
            length: c.length().to_string(),
            dimension: c.dimension().to_string(),
            codewords: c.codeword_count().to_string(),
            min_distance: c.minimum_distance()?.map(|d| d.to_string()),
        })
    }

    fn params(&self) -> String {
        let d = self.min_distance.as_deref().unwrap_or("-");
        let name = self.name.as_deref().unwrap_or("code");
        format!(
            "{name} [{},{},{d}] over GF({}), {} codewords",
            self.length, self.dimension, self.modulus, self.codewords
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCount {
    pub weight: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrengthRow {
    pub weight: String,
    pub blocks: String,
    pub strength: String,
    /// True when probing stopped at the limit with the design still passing.
    pub capped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub code: CodeSummary,
    pub dual_min_distance: String,
    pub weights: Vec<WeightCount>,
    pub probe_limit: String,
    pub strengths: Vec<StrengthRow>,
    pub delta: String,
    pub delta_capped: bool,
    pub s: String,
    pub s_capped: bool,
}

pub fn analyze_report(c: &LinearCode, probe: u32) -> Result<Report> {
    let wd = c.weight_distribution()?;
    let weights = wd
        .nonzero_weights()
        .iter()
        .map(|&w| WeightCount { weight: w.to_string(), count: wd.count(w).to_string() })
        .collect();
    let dual_d = c
        .dual()
        .weight_distribution()?
        .min_nonzero_weight()
        .map_or_else(|| "-".into(), |d| d.to_string());
    let st = design::delta_and_s(c, probe)?;
    Ok(Report::Analyze(AnalyzeReport {
        code: CodeSummary::of(c)?,
        dual_min_distance: dual_d,
        weights,
        probe_limit: st.t_max_probe.to_string(),
        strengths: st
            .per_weight
            .iter()
            .map(|w| StrengthRow {
                weight: w.weight.to_string(),
                blocks: w.block_count.to_string(),
                strength: w.strength.to_string(),
                capped: w.capped,
            })
            .collect(),
        delta: st.delta.to_string(),
        delta_capped: st.delta_capped,
        s: st.s.to_string(),
        s_capped: st.s_capped,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// 1-based point labels of the lexicographically first t-subset.
    pub first: Vec<String>,
    pub first_count: String,
    /// The first t-subset covered a different number of times.
    pub second: Vec<String>,
    pub second_count: String,
}

impl WitnessReport {
    fn of(w: &Witness) -> Self {
        let pts = |s: &[usize]| s.iter().map(|p| (p + 1).to_string()).collect();
        WitnessReport {
            first: pts(&w.first),
            first_count: w.first_count.to_string(),
            second: pts(&w.second),
            second_count: w.second_count.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub code: CodeSummary,
    pub weight: String,
    pub t: String,
    pub blocks: String,
    pub is_design: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessReport>,
}

pub fn design_report(c: &LinearCode, weight: u32, t: u32) -> Result<Report> {
    let d = design::support_design(c, weight)?;
    if t > weight {
        return Err(crate::Error::InvalidParameter {
            detail: format!("strength t={t} exceeds block size w={weight}"),
        });
    }
    let v = design::is_t_design(&d, t);
    Ok(Report::Design(DesignReport {
        code: CodeSummary::of(c)?,
        weight: weight.to_string(),
        t: t.to_string(),
        blocks: d.block_count().to_string(),
        is_design: v.is_design,
        lambda: v.lambda.map(|l| l.to_string()),
        witness: v.witness.as_ref().map(WitnessReport::of),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowRow {
    pub t: String,
    /// Number of nonempty weights u with 0 < u <= n - t.
    pub low_weight_classes: String,
    /// d_dual - t, the value the count must equal.
    pub required: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmConditionReport {
    pub code: CodeSummary,
    pub dual_min_distance: String,
    pub window: Vec<WindowRow>,
    pub admissible_t: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t_max: Option<String>,
}

pub fn am_report(c: &LinearCode) -> Result<Report> {
    let r = am::am_condition(c)?;
    Ok(Report::Am(AmConditionReport {
        code: CodeSummary::of(c)?,
        dual_min_distance: r.d_dual.to_string(),
        window: r
            .window
            .iter()
            .map(|&(t, count)| WindowRow {
                t: t.to_string(),
                low_weight_classes: count.to_string(),
                required: (r.d_dual - t).to_string(),
            })
            .collect(),
        admissible_t: r.admissible_t.iter().map(u32::to_string).collect(),
        t_max: r.t_max.map(|t| t.to_string()),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremOutcomeRow {
    pub t: String,
    /// 1-based branch of the conclusion that held; absent if none did.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branch: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub code: CodeSummary,
    pub id: String,
    pub dual_min_distance: String,
    pub weight_classes: String,
    pub outcomes: Vec<TheoremOutcomeRow>,
    /// Every admissible strength matched some branch. False is an anomaly
    /// and makes the process exit nonzero.
    pub consistent: bool,
}

pub fn theorem_report(c: &LinearCode, id: TheoremId) -> Result<Report> {
    let v = am::verify_theorem_instance(c, id)?;
    Ok(Report::Theorem(TheoremReport {
        code: CodeSummary::of(c)?,
        id: id.to_string(),
        dual_min_distance: v.d_dual.to_string(),
        weight_classes: v.weight_class_count.to_string(),
        outcomes: v
            .outcomes
            .iter()
            .map(|o| TheoremOutcomeRow {
                t: o.t.to_string(),
                branch: o.branch.map(|b| b.to_string()),
            })
            .collect(),
        consistent: v.consistent,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicWeightRow {
    pub weight: String,
    pub codewords: String,
    /// All degree-k coefficients at this weight are zero.
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: String,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicCheckReport {
    pub weight: String,
    pub t: String,
    pub is_design: bool,
    pub profile: Vec<DegreeRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicReport {
    pub code: CodeSummary,
    pub degree: String,
    pub space_dimension: String,
    pub weights: Vec<HarmonicWeightRow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub check: Option<HarmonicCheckReport>,
}

pub fn harmonic_report(
    c: &LinearCode,
    k: usize,
    check: Option<(u32, u32)>,
    limits: Limits,
) -> Result<Report> {
    let mut analyzer = HarmonicAnalyzer::new(c, limits);
    let wd = c.weight_distribution()?.clone();
    let mut weights = Vec::new();
    {
        let basis = harmonic::harm_basis(c.length(), k, &limits)?;
        let ctx = harmonic::HarmonicContext::new(c, k, &limits)?;
        for w in wd.nonzero_weights() {
            weights.push(HarmonicWeightRow {
                weight: w.to_string(),
                codewords: wd.count(w).to_string(),
                vanishes: ctx.weight_vanishes(w, &basis)?,
            });
        }
        // space dimension = basis size
        let dim = basis.len();
        let check_report = match check {
            None => None,
            Some((w, t)) => {
                let profile = analyzer.vanishing_profile(w, t)?;
                Some(HarmonicCheckReport {
                    weight: w.to_string(),
                    t: t.to_string(),
                    is_design: profile.iter().all(|&(_, v)| v),
                    profile: profile
                        .iter()
                        .map(|&(j, v)| DegreeRow { degree: j.to_string(), vanishes: v })
                        .collect(),
                })
            }
        };
        return Ok(Report::Harmonic(HarmonicReport {
            code: CodeSummary::of(c)?,
            degree: k.to_string(),
            space_dimension: dim.to_string(),
            weights,
            check: check_report,
        }));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOutcomeRow {
    pub weight: String,
    pub strength: String,
    pub is_design: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionScanReport {
    pub code: CodeSummary,
    pub case: String,
    pub t: String,
    pub low_weights: Vec<String>,
    pub alphas: Vec<String>,
    pub betas: Vec<String>,
    /// Some exponent went negative; values follow the generalized binomial
    /// rule but sit outside the scope of the underlying argument.
    pub degenerate: bool,
    pub roots: Vec<String>,
    pub candidates: Vec<String>,
    pub actionable: Vec<String>,
    pub outcomes: Vec<CandidateOutcomeRow>,
}

pub fn criterion_report(c: &LinearCode) -> Result<Report> {
    let r = criteria::scan_criterion(c)?;
    let ell_range = 0..r.params.weights.len();
    Ok(Report::Criterion(CriterionScanReport {
        code: CodeSummary::of(c)?,
        case: r.case.to_string(),
        t: r.params.t.to_string(),
        low_weights: r.params.weights.iter().map(u32::to_string).collect(),
        alphas: ell_range.clone().map(|l| r.params.alpha(l).to_string()).collect(),
        betas: ell_range.map(|l| r.params.beta(l).to_string()).collect(),
        degenerate: r.degenerate,
        roots: r.roots.iter().map(u32::to_string).collect(),
        candidates: r.candidates.iter().map(u32::to_string).collect(),
        actionable: r.actionable.iter().map(u32::to_string).collect(),
        outcomes: r
            .outcomes
            .iter()
            .map(|o| CandidateOutcomeRow {
                weight: o.weight.to_string(),
                strength: o.strength.to_string(),
                is_design: o.is_design,
                lambda: o.lambda.map(|l| l.to_string()),
            })
            .collect(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub code: CodeSummary,
    pub variant: String,
    pub dual_min_distance: String,
    pub hypothesis_met: bool,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

pub fn identity_report(c: &LinearCode) -> Result<Report> {
    let r = criteria::check_sphere_identity(c)?;
    Ok(Report::Identity(IdentitySummary {
        code: CodeSummary::of(c)?,
        variant: match r.variant {
            IdentityVariant::TwoWeight => "two-weight".into(),
            IdentityVariant::ThreeWeight => "three-weight".into(),
            IdentityVariant::ThreeWeightFull => "three-weight-full".into(),
        },
        dual_min_distance: r.d_dual.to_string(),
        hypothesis_met: r.hypothesis_met,
        lhs: r.lhs.to_string(),
        rhs: r.rhs.to_string(),
        holds: r.holds,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub n: String,
    pub k: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophantineReport {
    pub q: String,
    pub ell: String,
    pub n_max: String,
    pub solutions: Vec<SolutionRow>,
}

pub fn diophantine_report(q: u64, ell: u32, n_max: u64) -> Result<Report> {
    let sols = criteria::diophantine_scan(q, ell, n_max)?;
    Ok(Report::Diophantine(DiophantineReport {
        q: q.to_string(),
        ell: ell.to_string(),
        n_max: n_max.to_string(),
        solutions: sols
            .iter()
            .map(|&(n, k)| SolutionRow { n: n.to_string(), k: k.to_string() })
            .collect(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub name: String,
    pub content: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixturesReport {
    pub files: Vec<FixtureFile>,
}

pub fn fixtures_report() -> Report {
    let files = [
        code::construct_golay(),
        code::construct_golay_dual(),
        code::construct_extended_golay(),
    ]
    .iter()
    .map(|c| FixtureFile {
        name: c.name().unwrap_or("fixture").to_owned(),
        content: render_code_file(c),
    })
    .collect();
    Report::Fixtures(FixturesReport { files })
}

/// True when the report should make the process exit with the anomaly code.
pub fn is_anomalous(report: &Report) -> bool {
    matches!(report, Report::Theorem(t) if !t.consistent)
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn strength_str(strength: &str, capped: bool) -> String {
    if capped {
        format!("{strength}+")
    } else {
        strength.to_string()
    }
}

impl fmt::Display for Envelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.report {
            Report::Analyze(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(f, "dual minimum distance: {}", r.dual_min_distance)?;
                writeln!(f, "weight distribution (nonzero):")?;
                for w in &r.weights {
                    writeln!(f, "  w={:>3}  {:>12} words", w.weight, w.count)?;
                }
                writeln!(f, "support-design strengths (probed to t={}):", r.probe_limit)?;
                for s in &r.strengths {
                    writeln!(
                        f,
                        "  w={:>3}  {:>12} blocks  strength {}",
                        s.weight,
                        s.blocks,
                        strength_str(&s.strength, s.capped)
                    )?;
                }
                writeln!(
                    f,
                    "delta = {}, s = {}",
                    strength_str(&r.delta, r.delta_capped),
                    strength_str(&r.s, r.s_capped)
                )
            }
            Report::Design(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(f, "weight {} supports: {} blocks", r.weight, r.blocks)?;
                match (&r.lambda, &r.witness) {
                    (Some(l), _) => {
                        writeln!(f, "{}-design: yes (lambda = {l})", r.t)
                    }
                    (None, Some(w)) => {
                        writeln!(f, "{}-design: no", r.t)?;
                        writeln!(
                            f,
                            "  {{{}}} covered {} times, {{{}}} covered {} times",
                            w.first.join(","),
                            w.first_count,
                            w.second.join(","),
                            w.second_count
                        )
                    }
                    (None, None) => writeln!(f, "{}-design: no", r.t),
                }
            }
            Report::Am(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(f, "dual minimum distance: {}", r.dual_min_distance)?;
                writeln!(f, "window counts (need = d_dual - t):")?;
                for w in &r.window {
                    let mark = if w.low_weight_classes == w.required { "  <- admissible" } else { "" };
                    writeln!(
                        f,
                        "  t={}  classes={} need={}{}",
                        w.t, w.low_weight_classes, w.required, mark
                    )?;
                }
                match &r.t_max {
                    Some(t) => writeln!(f, "largest admissible t = {t}"),
                    None => writeln!(f, "no admissible t"),
                }
            }
            Report::Theorem(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(
                    f,
                    "statement {}: weight classes = {}, dual distance = {}",
                    r.id, r.weight_classes, r.dual_min_distance
                )?;
                for o in &r.outcomes {
                    match &o.branch {
                        Some(b) => writeln!(f, "  t={}: branch {b} holds", o.t)?,
                        None => writeln!(f, "  t={}: NO BRANCH HOLDS", o.t)?,
                    }
                }
                writeln!(f, "consistent: {}", yn(r.consistent))
            }
            Report::Harmonic(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(
                    f,
                    "degree {} space dimension: {}",
                    r.degree, r.space_dimension
                )?;
                writeln!(f, "per-weight vanishing of all degree-{} coefficients:", r.degree)?;
                for w in &r.weights {
                    writeln!(
                        f,
                        "  w={:>3}  {:>12} words  vanishes: {}",
                        w.weight,
                        w.codewords,
                        yn(w.vanishes)
                    )?;
                }
                if let Some(c) = &r.check {
                    writeln!(f, "design check at w={} t={}:", c.weight, c.t)?;
                    for d in &c.profile {
                        writeln!(f, "  degree {}: vanishes {}", d.degree, yn(d.vanishes))?;
                    }
                    writeln!(f, "  {}-design: {}", c.t, yn(c.is_design))?;
                }
                Ok(())
            }
            Report::Criterion(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(
                    f,
                    "case {} scan at t={}; low weights {:?}, alpha {:?}, beta {:?}",
                    r.case, r.t, r.low_weights, r.alphas, r.betas
                )?;
                if r.degenerate {
                    writeln!(f, "WARNING: negative exponents; outside the argument's scope")?;
                }
                writeln!(f, "roots: {}", r.roots.join(", "))?;
                writeln!(f, "candidate dual weights (root + t + 1): {}", r.candidates.join(", "))?;
                writeln!(f, "actionable (dual class nonempty): {}", r.actionable.join(", "))?;
                for o in &r.outcomes {
                    let verdict = match (&o.is_design, &o.lambda) {
                        (true, Some(l)) => format!("{}-design with lambda = {l}", o.strength),
                        _ => format!("not a {}-design", o.strength),
                    };
                    writeln!(f, "  dual weight {}: {verdict} (by counting)", o.weight)?;
                }
                Ok(())
            }
            Report::Identity(r) => {
                writeln!(f, "{}", r.code.params())?;
                writeln!(
                    f,
                    "variant: {} (dual distance {}, hypothesis met: {})",
                    r.variant, r.dual_min_distance, yn(r.hypothesis_met)
                )?;
                writeln!(f, "lhs = {}, rhs = {}: {}", r.lhs, r.rhs, if r.holds { "EQUAL" } else { "NOT EQUAL" })
            }
            Report::Diophantine(r) => {
                writeln!(
                    f,
                    "ball-size power scan: q={}, radius {}, n <= {}",
                    r.q, r.ell, r.n_max
                )?;
                if r.solutions.is_empty() {
                    writeln!(f, "no solutions")
                } else {
                    for s in &r.solutions {
                        writeln!(f, "  n={:>6}  k={}", s.n, s.k)?;
                    }
                    Ok(())
                }
            }
            Report::Fixtures(r) => {
                for file in &r.files {
                    f.write_str(&file.content)?;
                    writeln!(f)?;
                }
                Ok(())
            }
        }
    }
}
