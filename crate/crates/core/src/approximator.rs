//! Iterative elimination of the least significant dominant point.
//!
//! Starting from the break points of the curve, the point with minimal
//! significance is removed and only its two surviving neighbours are
//! re-evaluated, until the requested vertex count (or error budget) is
//! reached.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::curve::{DigitalCurve, DominantPointSet};
use crate::error::{Error, Result};
use crate::metrics::{metrics_report, MetricsReport};
use crate::segmentation::segment;
use crate::significance::{arc_significance, SignificanceTable};

/// Smallest polygon the engine will produce.
pub const MIN_POLYGON: usize = 3;

/// Relative tolerance under which two significance values are treated as
/// equal; equal values are broken by smallest curve index.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Whether `sig` ties with the current minimum `min`.
pub fn ties_with_min(sig: f64, min: f64) -> bool {
    sig - min <= TIE_TOLERANCE * min.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EliminationStep {
    pub removed_index: usize,
    pub sig_at_removal: f64,
    pub metrics_after: MetricsReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Approximation {
    pub initial: DominantPointSet,
    pub final_set: DominantPointSet,
    pub trace: Vec<EliminationStep>,
}

#[derive(Debug, Clone, Copy)]
struct SigKey {
    sig: f64,
    index: usize,
    slot: usize,
}

impl PartialEq for SigKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SigKey {}

impl PartialOrd for SigKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SigKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sig
            .total_cmp(&other.sig)
            .then(self.index.cmp(&other.index))
    }
}

/// Step-by-step elimination state over one curve.
///
/// Slots refer to positions in the initial dominant point list; removed
/// slots are unlinked from a circular doubly linked list.
#[derive(Debug, Clone)]
pub struct Eliminator<'c> {
    curve: &'c DigitalCurve,
    initial: Vec<usize>,
    prev: Vec<usize>,
    next: Vec<usize>,
    alive: Vec<bool>,
    sig: Vec<f64>,
    queue: BTreeSet<SigKey>,
    remaining: usize,
}

impl<'c> Eliminator<'c> {
    /// Seed the engine with the curve's break points.
    pub fn new(curve: &'c DigitalCurve) -> Result<Self> {
        let seg = segment(curve)?;
        Self::with_initial(curve, seg.dp_indices)
    }

    pub fn with_initial(curve: &'c DigitalCurve, initial: Vec<usize>) -> Result<Self> {
        // validates ordering, range, and size
        DominantPointSet::new(curve, initial.clone())?;
        let m = initial.len();
        let prev = (0..m).map(|k| (k + m - 1) % m).collect::<Vec<_>>();
        let next = (0..m).map(|k| (k + 1) % m).collect::<Vec<_>>();
        let sig = (0..m)
            .map(|k| arc_significance(curve, initial[prev[k]], initial[next[k]]))
            .collect::<Vec<_>>();
        let queue = (0..m)
            .map(|k| SigKey {
                sig: sig[k],
                index: initial[k],
                slot: k,
            })
            .collect();
        Ok(Self {
            curve,
            initial,
            prev,
            next,
            alive: vec![true; m],
            sig,
            queue,
            remaining: m,
        })
    }

    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn initial(&self) -> DominantPointSet {
        DominantPointSet::new(self.curve, self.initial.clone()).expect("validated at construction")
    }

    pub fn current(&self) -> DominantPointSet {
        let indices = self
            .initial
            .iter()
            .zip(&self.alive)
            .filter_map(|(&i, &a)| a.then_some(i))
            .collect();
        DominantPointSet::new(self.curve, indices).expect("engine never drops below 3 points")
    }

    pub fn table(&self) -> SignificanceTable {
        let mut t = SignificanceTable::default();
        for (k, &a) in self.alive.iter().enumerate() {
            if a {
                t.insert(self.initial[k], self.sig[k]);
            }
        }
        t
    }

    /// The slot that would be removed next: minimal significance, ties
    /// (within [`TIE_TOLERANCE`]) going to the smallest curve index.
    fn select(&self) -> Option<usize> {
        let first = self.queue.first()?;
        let best = self
            .queue
            .iter()
            .take_while(|k| ties_with_min(k.sig, first.sig))
            .min_by_key(|k| k.index)?;
        Some(best.slot)
    }

    fn reevaluate(&mut self, slot: usize) {
        let old = SigKey {
            sig: self.sig[slot],
            index: self.initial[slot],
            slot,
        };
        self.queue.remove(&old);
        let from = self.initial[self.prev[slot]];
        let to = self.initial[self.next[slot]];
        let sig = arc_significance(self.curve, from, to);
        self.sig[slot] = sig;
        self.queue.insert(SigKey { sig, ..old });
    }

    /// Remove the least significant point. Returns the removed curve index
    /// and its significance, or `None` once only three points remain.
    pub fn remove_least_significant(&mut self) -> Option<(usize, f64)> {
        if self.remaining <= MIN_POLYGON {
            return None;
        }
        let slot = self.select()?;
        let sig = self.sig[slot];
        self.queue.remove(&SigKey {
            sig,
            index: self.initial[slot],
            slot,
        });
        self.alive[slot] = false;
        self.remaining -= 1;
        let (p, q) = (self.prev[slot], self.next[slot]);
        self.next[p] = q;
        self.prev[q] = p;
        self.reevaluate(p);
        self.reevaluate(q);
        Some((self.initial[slot], sig))
    }

    /// Remove one point and record the metrics of the resulting polygon.
    pub fn step(&mut self) -> Option<EliminationStep> {
        let (removed_index, sig_at_removal) = self.remove_least_significant()?;
        Some(EliminationStep {
            removed_index,
            sig_at_removal,
            metrics_after: metrics_report(self.curve, &self.current()),
        })
    }
}

fn check_target(m: usize, available: usize) -> Result<()> {
    if m < MIN_POLYGON {
        return Err(Error::TargetTooSmall { m });
    }
    if m > available {
        return Err(Error::TargetTooLarge { m, available });
    }
    Ok(())
}

/// Eliminate down to exactly `m` dominant points.
pub fn eliminate_to_count(curve: &DigitalCurve, m: usize) -> Result<Approximation> {
    let seg = segment(curve)?;
    check_target(m, seg.dp_indices.len())?;
    let mut engine = Eliminator::with_initial(curve, seg.dp_indices)?;
    let initial = engine.initial();
    let mut trace = Vec::with_capacity(engine.remaining() - m);
    while engine.remaining() > m {
        trace.push(engine.step().expect("remaining above minimum"));
    }
    Ok(Approximation {
        initial,
        final_set: engine.current(),
        trace,
    })
}

/// Eliminate while the integral square error stays within `max_ise`.
///
/// Stops before the first removal whose resulting ISE would exceed the
/// budget, or at three points.
pub fn eliminate_to_error(curve: &DigitalCurve, max_ise: f64) -> Result<Approximation> {
    let seg = segment(curve)?;
    let available = seg.dp_indices.len();
    if available < MIN_POLYGON {
        return Err(Error::TargetTooLarge {
            m: MIN_POLYGON,
            available,
        });
    }
    let mut engine = Eliminator::with_initial(curve, seg.dp_indices)?;
    let initial = engine.initial();
    let mut accepted = engine.current();
    let mut trace = Vec::new();
    while let Some(step) = engine.step() {
        if !(step.metrics_after.ise <= max_ise) {
            break;
        }
        trace.push(step);
        accepted = engine.current();
    }
    Ok(Approximation {
        initial,
        final_set: accepted,
        trace,
    })
}
