//! Support designs of fixed-weight codeword sets and exact t-design
//! verification with repeated blocks, plus the design strengths delta(C)
//! and s(C).

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::subsets::{binomial, mask_of, LexSubsets};

/// The multiset of supports of all weight-w codewords, as blocks of a design
/// on the coordinate set. One block per codeword, so over GF(3) every support
/// appears at least twice (c and 2c agree).
#[derive(Clone, Debug)]
pub struct SupportDesign {
    points: usize,
    block_size: u32,
    blocks: Vec<u64>, // bitmasks, repeats kept, enumeration order
}

impl SupportDesign {
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn block_size(&self) -> u32 {
        self.block_size
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_count(&self) -> u64 {
        self.blocks.len() as u64
    }

    /// Distinct supports with multiplicities, ascending by mask.
    pub fn multiplicities(&self) -> Vec<(u64, u64)> {
        let mut sorted = self.blocks.clone();
        sorted.sort_unstable();
        let mut out: Vec<(u64, u64)> = Vec::new();
        for b in sorted {
            match out.last_mut() {
                Some((m, c)) if *m == b => *c += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }
}

/// Build D_w for a code. The weight class must be nonempty.
pub fn support_design(c: &LinearCode, w: u32) -> Result<SupportDesign> {
    let wd = c.weight_distribution()?;
    if wd.count(w) == 0 {
        return Err(Error::EmptyWeight { weight: w });
    }
    let blocks = c.supports_of_weight(w)?;
    debug_assert_eq!(blocks.len() as u64, wd.count(w));
    debug_assert!(blocks.iter().all(|b| b.count_ones() == w));
    Ok(SupportDesign { points: c.length(), block_size: w, blocks })
}

/// A failing pair of t-subsets: the lexicographically first subset and the
/// first subset (in the same order) covered by a different number of blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first: Vec<usize>,
    pub first_count: u64,
    pub second: Vec<usize>,
    pub second_count: u64,
}

/// Outcome of a t-design test on one support design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignVerdict {
    pub t: u32,
    pub is_design: bool,
    /// Common covering count when is_design; always an integer, and equals
    /// block_count * C(w, t) / C(n, t).
    pub lambda: Option<u64>,
    pub witness: Option<Witness>,
}

/// Exhaustively count, for every t-subset of points, the blocks containing
/// it; a t-design is exactly "all counts equal".
///
/// t = 0 is vacuously a design with lambda = block count.
pub fn is_t_design(d: &SupportDesign, t: u32) -> DesignVerdict {
    assert!(
        t <= d.block_size,
        "t = {t} exceeds block size {}; such a test is vacuous",
        d.block_size
    );
    if t == 0 {
        return DesignVerdict { t, is_design: true, lambda: Some(d.block_count()), witness: None };
    }
    let mut subsets = LexSubsets::new(d.points, t as usize);
    let mut reference: Option<(Vec<usize>, u64)> = None;
    while let Some(s) = subsets.next_subset() {
        let mask = mask_of(s);
        let count = d.blocks.iter().filter(|&&b| b & mask == mask).count() as u64;
        match &reference {
            None => reference = Some((s.to_vec(), count)),
            Some((first, first_count)) => {
                if count != *first_count {
                    return DesignVerdict {
                        t,
                        is_design: false,
                        lambda: None,
                        witness: Some(Witness {
                            first: first.clone(),
                            first_count: *first_count,
                            second: s.to_vec(),
                            second_count: count,
                        }),
                    };
                }
            }
        }
    }
    let lambda = reference.map(|(_, c)| c).unwrap_or(d.block_count());
    // lambda * C(n,t) = b * C(w,t): double count (block, t-subset) incidences
    debug_assert_eq!(
        lambda as u128 * binomial(d.points as u64, t as u64).unwrap() as u128,
        d.block_count() as u128 * binomial(d.block_size as u64, t as u64).unwrap() as u128
    );
    DesignVerdict { t, is_design: true, lambda: Some(lambda), witness: None }
}

/// Strength data for one weight class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightStrength {
    pub weight: u32,
    pub block_count: u64,
    /// Largest t (up to the probe limit and the block size) at which D_w is
    /// a t-design.
    pub strength: u32,
    /// True when probing stopped at t_max_probe with the design still
    /// passing, so the true strength may be higher.
    pub capped: bool,
}

/// delta(C), s(C), and the per-weight strength table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthReport {
    pub delta: u32,
    pub s: u32,
    /// delta (resp. s) is a min (resp. max) over the table; the flag is set
    /// when every weight attaining it is capped, i.e. the true value may be
    /// larger.
    pub delta_capped: bool,
    pub s_capped: bool,
    pub t_max_probe: u32,
    pub per_weight: Vec<WeightStrength>,
}

/// Probe every nonzero nonempty weight class for its design strength.
///
/// Strength is downward closed (a t-design is an s-design for s < t, by
/// double counting), so the per-weight scan stops at the first failing t.
pub fn delta_and_s(c: &LinearCode, t_max_probe: u32) -> Result<StrengthReport> {
    if t_max_probe < 1 {
        return Err(Error::InvalidParameter { detail: "t_max_probe must be >= 1".into() });
    }
    let weights = c.weight_distribution()?.nonzero_weights();
    if weights.is_empty() {
        return Err(Error::NotApplicable {
            reason: "the zero code has no nonzero weight classes".into(),
        });
    }
    let mut per_weight = Vec::with_capacity(weights.len());
    for w in weights {
        let d = support_design(c, w)?;
        let probe_limit = t_max_probe.min(w);
        let mut strength = 0u32;
        for t in 1..=probe_limit {
            if is_t_design(&d, t).is_design {
                strength = t;
            } else {
                break;
            }
        }
        per_weight.push(WeightStrength {
            weight: w,
            block_count: d.block_count(),
            strength,
            capped: strength == t_max_probe && w > t_max_probe,
        });
    }
    let delta = per_weight.iter().map(|ws| ws.strength).min().unwrap();
    let s = per_weight.iter().map(|ws| ws.strength).max().unwrap();
    let delta_capped = per_weight
        .iter()
        .filter(|ws| ws.strength == delta)
        .all(|ws| ws.capped);
    let s_capped = per_weight
        .iter()
        .filter(|ws| ws.strength == s)
        .any(|ws| ws.capped);
    Ok(StrengthReport { delta, s, delta_capped, s_capped, t_max_probe, per_weight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{construct_extended_golay, construct_golay, construct_golay_dual};
    use crate::field::Matrix;
    use proptest::prelude::*;

    fn code(p: u8, rows: &[Vec<u8>]) -> LinearCode {
        LinearCode::new(Matrix::from_rows(p, rows).unwrap()).unwrap()
    }

    #[test]
    fn empty_weight_guard() {
        let c = code(3, &[vec![1, 1, 1, 1, 1]]);
        match support_design(&c, 3) {
            Err(Error::EmptyWeight { weight: 3 }) => {}
            other => panic!("expected EmptyWeight, got {other:?}"),
        }
    }

    #[test]
    fn extended_golay_top_weight_is_complete() {
        let c = construct_extended_golay();
        let d = support_design(&c, 12).unwrap();
        assert_eq!(d.block_count(), 24);
        assert!(d.blocks().iter().all(|&b| b == (1 << 12) - 1));
        // complete blocks contain every t-subset: design at any t <= n
        for t in [1, 5, 7, 12] {
            let v = is_t_design(&d, t);
            assert!(v.is_design);
            assert_eq!(v.lambda, Some(24));
        }
    }

    #[test]
    fn extended_golay_design_verdicts() {
        let c = construct_extended_golay();
        let d6 = support_design(&c, 6).unwrap();
        assert_eq!(d6.block_count(), 264);
        let v5 = is_t_design(&d6, 5);
        assert!(v5.is_design);
        assert_eq!(v5.lambda, Some(2)); // 264 * C(6,5) / C(12,5)
        let v6 = is_t_design(&d6, 6);
        assert!(!v6.is_design);
        assert!(v6.witness.is_some());

        let d9 = support_design(&c, 9).unwrap();
        let v = is_t_design(&d9, 5);
        assert!(v.is_design);
        assert_eq!(v.lambda, Some(70));
        let v6 = is_t_design(&d9, 6);
        assert!(v6.is_design);
        assert_eq!(v6.lambda, Some(40));
    }

    #[test]
    fn golay_dual_d6_fails_t5_with_lex_first_witness() {
        let c = construct_golay_dual();
        let d6 = support_design(&c, 6).unwrap();
        let v4 = is_t_design(&d6, 4);
        assert!(v4.is_design);
        assert_eq!(v4.lambda, Some(6));
        let v5 = is_t_design(&d6, 5);
        assert!(!v5.is_design);
        let w = v5.witness.unwrap();
        assert_eq!(w.first, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.first_count, 2);
        assert_eq!(w.second, vec![0, 1, 2, 3, 5]);
        assert_eq!(w.second_count, 0);
    }

    #[test]
    fn golay_dual_strengths() {
        let c = construct_golay_dual();
        let r = delta_and_s(&c, 7).unwrap();
        assert_eq!(r.delta, 4);
        assert!(!r.delta_capped);
        // weight 9 blocks are all 110 = 2 * C(11,9) supports: the complete
        // 9-uniform design, which passes every probed t
        assert_eq!(r.s, 7);
        assert!(r.s_capped);
        let table: Vec<(u32, u32, bool)> =
            r.per_weight.iter().map(|ws| (ws.weight, ws.strength, ws.capped)).collect();
        assert_eq!(table, vec![(6, 4, false), (9, 7, true)]);
    }

    #[test]
    fn extended_golay_strengths() {
        let c = construct_extended_golay();
        let r = delta_and_s(&c, 7).unwrap();
        assert_eq!(r.delta, 5);
        assert!(!r.delta_capped);
        assert_eq!(r.s, 7);
        assert!(r.s_capped);
        let table: Vec<(u32, u32, bool)> =
            r.per_weight.iter().map(|ws| (ws.weight, ws.strength, ws.capped)).collect();
        // D_9 is the complete 9-design (440 = 2 * C(12,9) blocks); D_12 is 24
        // copies of the full set
        assert_eq!(table, vec![(6, 5, false), (9, 7, true), (12, 7, true)]);
    }

    #[test]
    fn golay11_strength_table() {
        let c = construct_golay();
        let r = delta_and_s(&c, 5).unwrap();
        let table: Vec<(u32, u32, bool)> =
            r.per_weight.iter().map(|ws| (ws.weight, ws.strength, ws.capped)).collect();
        assert_eq!(
            table,
            vec![(5, 4, false), (6, 4, false), (8, 5, true), (9, 5, true), (11, 5, true)]
        );
        assert_eq!((r.delta, r.s), (4, 5));
        assert!(!r.delta_capped);
        assert!(r.s_capped);
    }

    #[test]
    fn repetition_code_is_capped_at_probe_limit() {
        let c = code(3, &[vec![1; 8]]);
        let r = delta_and_s(&c, 7).unwrap();
        assert_eq!(r.per_weight.len(), 1);
        assert_eq!(r.per_weight[0].strength, 7);
        assert!(r.per_weight[0].capped);
        assert!(r.delta_capped && r.s_capped);

        // block size 5 < probe 7: strength exhausts the block size instead,
        // and that is exact, not a cap
        let c5 = code(3, &[vec![1; 5]]);
        let r5 = delta_and_s(&c5, 7).unwrap();
        assert_eq!(r5.per_weight[0].strength, 5);
        assert!(!r5.per_weight[0].capped);
    }

    #[test]
    fn gf3_support_multiplicities_are_even() {
        for c in [construct_golay(), construct_golay_dual(), construct_extended_golay()] {
            for w in c.weight_distribution().unwrap().nonzero_weights() {
                let d = support_design(&c, w).unwrap();
                for (mask, mult) in d.multiplicities() {
                    assert!(
                        mult >= 2 && mult % 2 == 0,
                        "weight {w} support {mask:b} has odd multiplicity {mult}"
                    );
                }
            }
        }
    }

    fn arb_code() -> impl Strategy<Value = LinearCode> {
        (prop::sample::select(vec![2u8, 3]), 1usize..3, 2usize..7)
            .prop_flat_map(|(p, k, extra)| {
                let n = k + extra;
                prop::collection::vec(prop::collection::vec(0u8..p, n), k)
                    .prop_map(move |rows| (p, rows))
            })
            .prop_filter_map("full rank", |(p, rows)| {
                LinearCode::new(Matrix::from_rows(p, &rows).ok()?).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn strength_is_downward_closed(c in arb_code()) {
            for w in c.weight_distribution().unwrap().nonzero_weights() {
                let d = support_design(&c, w).unwrap();
                let probe = 3u32.min(w);
                let mut verdicts = Vec::new();
                for t in 1..=probe {
                    verdicts.push(is_t_design(&d, t).is_design);
                }
                // once false, stays false
                for pair in verdicts.windows(2) {
                    prop_assert!(!(pair[1] && !pair[0]));
                }
            }
        }

        #[test]
        fn lambda_identity(c in arb_code()) {
            for w in c.weight_distribution().unwrap().nonzero_weights() {
                let d = support_design(&c, w).unwrap();
                for t in 1..=2u32.min(w) {
                    let v = is_t_design(&d, t);
                    if let Some(lambda) = v.lambda {
                        let lhs = lambda as u128 * binomial(d.points() as u64, t as u64).unwrap() as u128;
                        let rhs = d.block_count() as u128
                            * binomial(w as u64, t as u64).unwrap() as u128;
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }

        #[test]
        fn delta_le_s(c in arb_code()) {
            let r = delta_and_s(&c, 4).unwrap();
            prop_assert!(r.delta <= r.s);
        }
    }
}
