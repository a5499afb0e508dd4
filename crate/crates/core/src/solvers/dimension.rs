//! Order dimension of quasi orders, two ways.
//!
//! `ViaDicr` solves the dichromatic number of the associated digraph and
//! converts the optimal cover into an extension family. `Realizer` is the
//! classical route: the fewest linear extensions of the quotient whose
//! intersection is the quotient order, found by exhaustive set cover.
//!
//! Quotients with at most one class have dimension 0: the empty family
//! decides every pair because `x ≤ y` always holds there.

use std::collections::HashSet;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::limits::{Limits, Meter};
use crate::order::QuasiOrder;
use crate::reduction::{build_ap, cover_to_extensions, ExtensionFamily};
use crate::solvers::dicr::dichromatic_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DimMethod {
    #[default]
    ViaDicr,
    Realizer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult {
    pub d: usize,
    pub witness: ExtensionFamily,
    /// Set when the quotient has at most one class and `d = 0` by convention.
    pub trivial_quotient: bool,
}

pub fn order_dimension(q: &QuasiOrder, method: DimMethod, limits: &Limits) -> Result<DimResult> {
    let quot = q.quotient();
    if quot.len() <= 1 {
        return Ok(DimResult {
            d: 0,
            witness: ExtensionFamily { base: q.clone(), exts: Vec::new() },
            trivial_quotient: true,
        });
    }
    let witness = match method {
        DimMethod::ViaDicr => {
            let (ap, _) = build_ap(q, false);
            let r = dichromatic_number(&ap, limits)?;
            cover_to_extensions(q, &r.cover)?
        }
        DimMethod::Realizer => {
            let RealizerOutcome::Dimension { linear_extensions, .. } =
                realizer_search(q, quot.len(), limits)?
            else {
                unreachable!("dimension never exceeds the number of classes")
            };
            let exts = linear_extensions
                .iter()
                .map(|seq| {
                    let mut pos = vec![0usize; seq.len()];
                    for (i, &c) in seq.iter().enumerate() {
                        pos[c] = i;
                    }
                    let lt = BitMatrix::from_fn(seq.len(), |a, b| pos[a] < pos[b]);
                    q.lift_class_order(&quot, &lt)
                })
                .collect::<Result<Vec<_>>>()?;
            ExtensionFamily { base: q.clone(), exts }
        }
    };
    debug_assert_eq!(witness.verify(), Ok(()));
    Ok(DimResult { d: witness.len(), witness, trivial_quotient: false })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizerOutcome {
    /// Minimal realizer size and one realizer (class-id sequences).
    Dimension { d: usize, linear_extensions: Vec<Vec<usize>> },
    /// No realizer with at most this many linear extensions.
    Exceeds(usize),
}

/// Minimal number of linear extensions of the quotient whose intersection is
/// its strict order, searched up to `max_d`.
pub fn realizer_oracle(q: &QuasiOrder, max_d: usize, limits: &Limits) -> Result<RealizerOutcome> {
    realizer_search(q, max_d, limits)
}

fn realizer_search(q: &QuasiOrder, max_d: usize, limits: &Limits) -> Result<RealizerOutcome> {
    let quot = q.quotient();
    let m = quot.len();
    if m > limits.realizer_max_classes {
        return Err(Error::TooLarge { what: "quotient", size: m, limit: limits.realizer_max_classes });
    }
    if m <= 1 {
        return Ok(RealizerOutcome::Dimension { d: 0, linear_extensions: Vec::new() });
    }
    // Ordered incomparable class pairs (a, b); a linear extension covers
    // (a, b) when it places b before a.
    let mut pair_id = vec![usize::MAX; m * m];
    let mut npairs = 0usize;
    for a in 0..m {
        for b in 0..m {
            if a != b && !quot.lt.get(a, b) && !quot.lt.get(b, a) {
                pair_id[a * m + b] = npairs;
                npairs += 1;
            }
        }
    }
    // m ≤ 12 keeps m(m-1) within 128 bits; the class guard is far below that.
    assert!(npairs <= 128, "too many incomparable pairs for a u128 mask");
    let mut masks: Vec<u128> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut seen = HashSet::new();
    for seq in quot.linear_extensions() {
        let mut mask = 0u128;
        for (i, &b) in seq.iter().enumerate() {
            for &a in &seq[i + 1..] {
                let id = pair_id[a * m + b];
                if id != usize::MAX {
                    mask |= 1u128 << id;
                }
            }
        }
        if seen.insert(mask) {
            masks.push(mask);
            reps.push(seq);
        }
    }
    if npairs == 0 && max_d >= 1 {
        // A chain of classes: its one linear extension realizes it.
        return Ok(RealizerOutcome::Dimension { d: 1, linear_extensions: vec![reps[0].clone()] });
    }
    let full: u128 = if npairs == 128 { u128::MAX } else { (1u128 << npairs) - 1 };
    let mut meter = Meter::new("realizer search", limits.realizer_nodes);
    for d in 1..=max_d {
        let mut chosen = Vec::with_capacity(d);
        if cover_rec(&masks, full, 0, d, &mut chosen, &mut meter)? {
            return Ok(RealizerOutcome::Dimension {
                d,
                linear_extensions: chosen.iter().map(|&i| reps[i].clone()).collect(),
            });
        }
    }
    Ok(RealizerOutcome::Exceeds(max_d))
}

/// Branches on the lowest uncovered pair over every extension covering it.
fn cover_rec(
    masks: &[u128],
    full: u128,
    covered: u128,
    left: usize,
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool> {
    if covered == full {
        return Ok(true);
    }
    if left == 0 {
        return Ok(false);
    }
    let bit = (!covered & full).trailing_zeros();
    for (i, &mask) in masks.iter().enumerate() {
        if mask >> bit & 1 == 0 {
            continue;
        }
        meter.tick()?;
        chosen.push(i);
        if cover_rec(masks, full, covered | mask, left - 1, chosen, meter)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crown(n: usize) -> QuasiOrder {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    pairs.push((i, n + j));
                }
            }
        }
        QuasiOrder::make(2 * n, &pairs, false).unwrap()
    }

    fn dim(q: &QuasiOrder, m: DimMethod) -> usize {
        order_dimension(q, m, &Limits::default()).unwrap().d
    }

    fn oracle(q: &QuasiOrder) -> usize {
        match realizer_oracle(q, 10, &Limits::default()).unwrap() {
            RealizerOutcome::Dimension { d, .. } => d,
            RealizerOutcome::Exceeds(_) => panic!("exceeds"),
        }
    }

    #[test]
    fn trivial_quotients() {
        for q in [QuasiOrder::equality(0), QuasiOrder::equality(1), QuasiOrder::full(3)] {
            let r = order_dimension(&q, DimMethod::ViaDicr, &Limits::default()).unwrap();
            assert_eq!(r.d, 0);
            assert!(r.trivial_quotient);
            assert_eq!(oracle(&q), 0);
        }
    }

    #[test]
    fn landmarks_agree() {
        let cases = [
            (QuasiOrder::chain(4), 1),
            (QuasiOrder::equality(2), 2),
            (crown(3), 3),
        ];
        for (q, expected) in cases {
            assert_eq!(oracle(&q), expected);
            assert_eq!(dim(&q, DimMethod::Realizer), expected);
            assert_eq!(dim(&q, DimMethod::ViaDicr), expected);
        }
    }

    #[test]
    fn boolean_lattice_two_atoms() {
        let q = QuasiOrder::make(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)], false).unwrap();
        assert_eq!(oracle(&q), 2);
    }

    #[test]
    fn exceeds_and_guard() {
        assert_eq!(
            realizer_oracle(&crown(3), 2, &Limits::default()).unwrap(),
            RealizerOutcome::Exceeds(2)
        );
        let big = QuasiOrder::equality(11);
        assert!(matches!(
            realizer_oracle(&big, 3, &Limits::default()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn quasi_order_with_merged_classes() {
        // Two 2-element classes, incomparable: same dimension as a 2-antichain.
        let q = QuasiOrder::make(4, &[(0, 1), (1, 0), (2, 3), (3, 2)], false).unwrap();
        assert_eq!(dim(&q, DimMethod::ViaDicr), 2);
        assert_eq!(dim(&q, DimMethod::Realizer), 2);
    }
}
