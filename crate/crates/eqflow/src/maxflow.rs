//! Exact maximum flow and minimum cuts.
//!
//! The solver is push-relabel with highest-label selection, the gap
//! heuristic and periodic global relabeling. Capacities are rationals;
//! internally one solve scales them to a common denominator and runs on
//! machine integers (arbitrary-precision integers when the scaled values
//! would overflow). Unbounded arcs run with a finite surrogate capacity,
//! the sum of all finite capacities plus one, which exceeds every finite
//! cut; the surrogate never appears in reported capacities.

use crate::flow::{Capacity, Cut, Flow, FlowNetwork, Vertex};
use crate::rational::{format_rational, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::VecDeque;

/// A maximum flow together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub flow: Flow,
    pub value: Rational,
}

/// Outcome of feasibility and optimality checking for a candidate flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub feasible: bool,
    /// Vertices (other than s, t) whose inflow and outflow differ, with the
    /// imbalance inflow - outflow.
    pub conservation_violations: Vec<(Vertex, Rational)>,
    /// Arcs whose amount is negative or exceeds the capacity.
    pub capacity_violations: Vec<CapacityViolation>,
    /// Claimed value vs the actual net outflow of s, when they differ.
    pub value_error: Option<(Rational, Rational)>,
    /// Capacity of the minimum cut minus the flow value; zero certifies
    /// optimality of a feasible flow.
    pub duality_gap: Rational,
}

impl CertificateReport {
    pub fn first_violation(&self) -> Option<String> {
        if let Some(v) = self.capacity_violations.first() {
            return Some(format!(
                "amount {} exceeds capacity {} on arc {} -> {}",
                format_rational(&v.amount),
                v.capacity,
                v.from,
                v.to
            ));
        }
        if let Some((v, imbalance)) = self.conservation_violations.first() {
            return Some(format!(
                "conservation violated at {} (imbalance {})",
                v,
                format_rational(imbalance)
            ));
        }
        if let Some((claimed, actual)) = &self.value_error {
            return Some(format!(
                "claimed value {} but net source outflow is {}",
                format_rational(claimed),
                format_rational(actual)
            ));
        }
        None
    }
}

/// One capacity violation in a [`CertificateReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityViolation {
    pub from: Vertex,
    pub to: Vertex,
    pub amount: Rational,
    pub capacity: Capacity,
}

/// Errors from minimum-cut extraction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinCutError {
    #[error("flow is not maximal: the sink is reachable in the residual graph")]
    SinkReachable,
    #[error("duality check failed: cut capacity {cut_capacity} != flow value {value}")]
    DualityCheckFailed { cut_capacity: String, value: String },
}

/// Error from the exhaustive cut oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("instance too large for exhaustive cut enumeration: {vertices} vertices excluding s,t (max {max})")]
pub struct OracleTooLarge {
    pub vertices: usize,
    pub max: usize,
}

/// Computes a maximum flow. Deterministic for a fixed canonical arc order.
pub fn max_flow(net: &FlowNetwork) -> FlowResult {
    let scaled = ScaledNetwork::build(net);
    let state = scaled.solve();
    let value = scaled.unscale(&state.value_big());
    let amounts = (0..net.arcs().len())
        .map(|k| scaled.unscale(&state.flow_big(k)))
        .collect();
    FlowResult {
        flow: Flow::new(amounts, value.clone()),
        value,
    }
}

/// Fast path used by the parametric sweep: maximum-flow value and the
/// minimum cut with smallest source side, skipping per-arc flow extraction.
pub(crate) fn max_flow_value_and_cut(net: &FlowNetwork) -> (Rational, Cut) {
    let scaled = ScaledNetwork::build(net);
    let state = scaled.solve();
    let value = scaled.unscale(&state.value_big());
    let cut = Cut::from_source_side(net, state.reachable_from_source());
    debug_assert_eq!(cut.capacity().finite(), Some(&value));
    (value, cut)
}

/// Extracts the unique minimum cut with inclusion-minimal source side: the
/// set of vertices reachable from `s` in the residual graph of `f`.
///
/// Rejects `f` when the sink is still reachable or when the cut capacity
/// does not equal the claimed flow value.
pub fn min_source_side_cut(net: &FlowNetwork, f: &FlowResult) -> Result<Cut, MinCutError> {
    let reachable = residual_reachable_from_source(net, &f.flow);
    if reachable[net.sink()] {
        return Err(MinCutError::SinkReachable);
    }
    let cut = Cut::from_source_side(net, reachable);
    if cut.capacity().finite() != Some(&f.value) {
        return Err(MinCutError::DualityCheckFailed {
            cut_capacity: cut.capacity().to_string(),
            value: format_rational(&f.value),
        });
    }
    Ok(cut)
}

/// Checks feasibility of `f` exactly and reports the duality gap against
/// an independently computed minimum cut.
pub fn check_flow(net: &FlowNetwork, f: &Flow) -> CertificateReport {
    let mut capacity_violations = Vec::new();
    let mut balance = vec![Rational::zero(); net.vertex_count()];
    for (idx, arc) in net.arcs().iter().enumerate() {
        let amount = f.amount(idx);
        let over = match &arc.capacity {
            Capacity::Finite(c) => amount > c,
            Capacity::Infinite => false,
        };
        if amount.is_negative() || over {
            capacity_violations.push(CapacityViolation {
                from: net.role(arc.from),
                to: net.role(arc.to),
                amount: amount.clone(),
                capacity: arc.capacity.clone(),
            });
        }
        balance[arc.to] += amount;
        balance[arc.from] -= amount;
    }
    let mut conservation_violations = Vec::new();
    for v in 0..net.vertex_count() {
        if v == net.source() || v == net.sink() {
            continue;
        }
        if !balance[v].is_zero() {
            conservation_violations.push((net.role(v), balance[v].clone()));
        }
    }
    let actual_value = -balance[net.source()].clone();
    let value_error = if &actual_value != f.value() {
        Some((f.value().clone(), actual_value))
    } else {
        None
    };
    let feasible =
        capacity_violations.is_empty() && conservation_violations.is_empty() && value_error.is_none();

    let best = max_flow(net);
    let min_cut = min_source_side_cut(net, &best).expect("fresh maximum flow certifies itself");
    let duality_gap = min_cut.capacity().expect_finite("minimum cut") - f.value();

    CertificateReport {
        feasible,
        conservation_violations,
        capacity_violations,
        value_error,
        duality_gap,
    }
}

const ENUMERATION_LIMIT: usize = 16;

/// Test oracle: enumerates every source-side candidate over the vertices
/// other than s and t and returns all cuts of minimum capacity.
pub fn enumerate_min_cuts(net: &FlowNetwork) -> Result<Vec<Cut>, OracleTooLarge> {
    let free: Vec<usize> = (0..net.vertex_count())
        .filter(|v| *v != net.source() && *v != net.sink())
        .collect();
    if free.len() > ENUMERATION_LIMIT {
        return Err(OracleTooLarge {
            vertices: free.len(),
            max: ENUMERATION_LIMIT,
        });
    }
    let mut best: Option<Rational> = None;
    let mut cuts: Vec<Cut> = Vec::new();
    for mask in 0u32..(1u32 << free.len()) {
        let mut in_source = vec![false; net.vertex_count()];
        in_source[net.source()] = true;
        for (bit, &v) in free.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                in_source[v] = true;
            }
        }
        // Infinite arcs never cross a finite cut; skip candidates where one
        // would.
        let mut capacity = Rational::zero();
        let mut infinite = false;
        for arc in net.arcs() {
            if in_source[arc.from] && !in_source[arc.to] {
                match &arc.capacity {
                    Capacity::Finite(c) => capacity += c,
                    Capacity::Infinite => {
                        infinite = true;
                        break;
                    }
                }
            }
        }
        if infinite {
            continue;
        }
        match &best {
            Some(b) if capacity > *b => {}
            Some(b) if capacity == *b => cuts.push(Cut::from_source_side(net, in_source)),
            _ => {
                best = Some(capacity);
                cuts.clear();
                cuts.push(Cut::from_source_side(net, in_source));
            }
        }
    }
    Ok(cuts)
}

/// Residual reachability from the source under exact rational arithmetic.
fn residual_reachable_from_source(net: &FlowNetwork, f: &Flow) -> Vec<bool> {
    let n = net.vertex_count();
    let mut fwd: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut bwd: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, arc) in net.arcs().iter().enumerate() {
        fwd[arc.from].push(idx);
        bwd[arc.to].push(idx);
    }
    let mut seen = vec![false; n];
    seen[net.source()] = true;
    let mut queue = VecDeque::from([net.source()]);
    while let Some(u) = queue.pop_front() {
        for &idx in &fwd[u] {
            let arc = &net.arcs()[idx];
            let has_residual = match &arc.capacity {
                Capacity::Finite(c) => f.amount(idx) < c,
                Capacity::Infinite => true,
            };
            if has_residual && !seen[arc.to] {
                seen[arc.to] = true;
                queue.push_back(arc.to);
            }
        }
        for &idx in &bwd[u] {
            let arc = &net.arcs()[idx];
            if f.amount(idx).is_positive() && !seen[arc.from] {
                seen[arc.from] = true;
                queue.push_back(arc.from);
            }
        }
    }
    seen
}

// ---------------------------------------------------------------------------
// Scaled integer solver
// ---------------------------------------------------------------------------

/// Integer type the solver runs on. `i128` covers every workload whose
/// scaled capacities fit with headroom; `BigInt` is the fallback.
trait SolverInt: Clone + Ord + Zero {
    fn from_big(b: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
}

impl SolverInt for i128 {
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("scaled capacity fits i128")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

impl SolverInt for BigInt {
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

/// Network with capacities scaled to integers by the least common multiple
/// of their denominators.
struct ScaledNetwork {
    n: usize,
    source: usize,
    sink: usize,
    ends: Vec<(usize, usize)>,
    caps: Vec<BigInt>,
    scale: BigInt,
    fits_i128: bool,
}

impl ScaledNetwork {
    fn build(net: &FlowNetwork) -> Self {
        let mut scale = BigInt::one();
        for arc in net.arcs() {
            if let Capacity::Finite(c) = &arc.capacity {
                let d = c.denom();
                if !d.is_one() && !(&scale % d).is_zero() {
                    scale = scale.lcm(d);
                }
            }
        }
        let mut caps = Vec::with_capacity(net.arcs().len());
        let mut finite_sum = BigInt::zero();
        let mut infinite_slots = Vec::new();
        for (idx, arc) in net.arcs().iter().enumerate() {
            match &arc.capacity {
                Capacity::Finite(c) => {
                    let v = c.numer() * (&scale / c.denom());
                    finite_sum += &v;
                    caps.push(v);
                }
                Capacity::Infinite => {
                    infinite_slots.push(idx);
                    caps.push(BigInt::zero());
                }
            }
        }
        let surrogate: BigInt = &finite_sum + 1;
        for idx in infinite_slots {
            caps[idx] = surrogate.clone();
        }
        // Excess magnitudes stay below the total capacity mass.
        let bound: BigInt = caps.iter().sum();
        let fits_i128 = bound < (BigInt::from(i128::MAX) >> 2);
        ScaledNetwork {
            n: net.vertex_count(),
            source: net.source(),
            sink: net.sink(),
            ends: net.arcs().iter().map(|a| (a.from, a.to)).collect(),
            caps,
            scale,
            fits_i128,
        }
    }

    fn solve(&self) -> SolvedState {
        if self.fits_i128 {
            let caps: Vec<i128> = self.caps.iter().map(SolverInt::from_big).collect();
            SolvedState::Small(PushRelabel::run(self.n, self.source, self.sink, &self.ends, caps))
        } else {
            SolvedState::Big(PushRelabel::run(
                self.n,
                self.source,
                self.sink,
                &self.ends,
                self.caps.clone(),
            ))
        }
    }

    fn unscale(&self, v: &BigInt) -> Rational {
        Rational::new(v.clone(), self.scale.clone())
    }
}

enum SolvedState {
    Small(PushRelabel<i128>),
    Big(PushRelabel<BigInt>),
}

impl SolvedState {
    fn value_big(&self) -> BigInt {
        match self {
            SolvedState::Small(s) => s.excess[s.sink].to_big(),
            SolvedState::Big(s) => s.excess[s.sink].clone(),
        }
    }

    /// Flow on arc `k`: slot `2k + 1` accumulates exactly what was pushed
    /// forward.
    fn flow_big(&self, k: usize) -> BigInt {
        match self {
            SolvedState::Small(s) => s.residual[2 * k + 1].to_big(),
            SolvedState::Big(s) => s.residual[2 * k + 1].clone(),
        }
    }

    fn reachable_from_source(&self) -> Vec<bool> {
        match self {
            SolvedState::Small(s) => s.reachable_from_source(),
            SolvedState::Big(s) => s.reachable_from_source(),
        }
    }
}

/// Push-relabel state. Heights run up to `2n`; excess left at inner
/// vertices is routed back to the source so the result is a genuine flow.
struct PushRelabel<I> {
    n: usize,
    source: usize,
    sink: usize,
    // Slot pairs: slot 2k is the forward direction of arc k, slot 2k+1 the
    // reverse; `slot ^ 1` is the partner.
    slot_to: Vec<u32>,
    residual: Vec<I>,
    adj_start: Vec<usize>,
    adj: Vec<u32>,
    excess: Vec<I>,
    height: Vec<u32>,
    cur: Vec<usize>,
    buckets: Vec<Vec<u32>>,
    in_bucket: Vec<bool>,
    highest: usize,
    label_count: Vec<u32>,
    relabels_since_global: usize,
}

impl<I: SolverInt> PushRelabel<I> {
    fn run(n: usize, source: usize, sink: usize, ends: &[(usize, usize)], caps: Vec<I>) -> Self {
        let mut slot_to = Vec::with_capacity(2 * ends.len());
        let mut residual = Vec::with_capacity(2 * ends.len());
        let mut degree = vec![0usize; n];
        for (&(u, v), cap) in ends.iter().zip(caps) {
            slot_to.push(v as u32);
            residual.push(cap);
            slot_to.push(u as u32);
            residual.push(I::zero());
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut adj_start = vec![0usize; n + 1];
        for v in 0..n {
            adj_start[v + 1] = adj_start[v] + degree[v];
        }
        let mut fill = adj_start.clone();
        let mut adj = vec![0u32; 2 * ends.len()];
        for (k, &(u, v)) in ends.iter().enumerate() {
            adj[fill[u]] = (2 * k) as u32;
            fill[u] += 1;
            adj[fill[v]] = (2 * k + 1) as u32;
            fill[v] += 1;
        }

        let mut state = PushRelabel {
            n,
            source,
            sink,
            slot_to,
            residual,
            adj_start,
            adj,
            excess: vec![I::zero(); n],
            height: vec![0u32; n],
            cur: vec![0usize; n],
            buckets: vec![Vec::new(); 2 * n + 1],
            in_bucket: vec![false; n],
            highest: 0,
            label_count: vec![0u32; 2 * n + 1],
            relabels_since_global: 0,
        };
        state.saturate_source();
        state.global_relabel();
        state.main_loop();
        state
    }

    fn saturate_source(&mut self) {
        for idx in self.adj_start[self.source]..self.adj_start[self.source + 1] {
            let slot = self.adj[idx] as usize;
            if slot & 1 == 1 {
                continue;
            }
            let to = self.slot_to[slot] as usize;
            let amount = self.residual[slot].clone();
            if amount.is_zero() || to == self.source {
                continue;
            }
            self.residual[slot] = I::zero();
            self.residual[slot ^ 1].add_assign_ref(&amount);
            self.excess[to].add_assign_ref(&amount);
            self.excess[self.source].sub_assign_ref(&amount);
        }
    }

    /// Exact distance labels: distance to `t` where `t` is residually
    /// reachable, `n` plus distance to `s` otherwise. Rebuilds buckets.
    fn global_relabel(&mut self) {
        self.relabels_since_global = 0;
        let n = self.n;
        let unset = u32::MAX;
        let mut dist_t = vec![unset; n];
        dist_t[self.sink] = 0;
        let mut queue = VecDeque::from([self.sink]);
        while let Some(v) = queue.pop_front() {
            for idx in self.adj_start[v]..self.adj_start[v + 1] {
                let slot = self.adj[idx] as usize;
                let w = self.slot_to[slot] as usize;
                // w steps to v along the partner slot.
                if dist_t[w] == unset && self.residual[slot ^ 1] > I::zero() {
                    dist_t[w] = dist_t[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut dist_s = vec![unset; n];
        dist_s[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(v) = queue.pop_front() {
            for idx in self.adj_start[v]..self.adj_start[v + 1] {
                let slot = self.adj[idx] as usize;
                let w = self.slot_to[slot] as usize;
                if dist_s[w] == unset && self.residual[slot ^ 1] > I::zero() {
                    dist_s[w] = dist_s[v] + 1;
                    queue.push_back(w);
                }
            }
        }

        for bucket in &mut self.buckets {
            bucket.clear();
        }
        self.label_count.fill(0);
        self.in_bucket.fill(false);
        self.highest = 0;
        for v in 0..n {
            self.height[v] = if v == self.source {
                n as u32
            } else if dist_t[v] != unset {
                dist_t[v]
            } else if dist_s[v] != unset {
                n as u32 + dist_s[v]
            } else {
                2 * n as u32
            };
            self.cur[v] = self.adj_start[v];
            self.label_count[self.height[v] as usize] += 1;
            if v != self.source && v != self.sink && !self.excess[v].is_zero() {
                self.enqueue(v);
            }
        }
    }

    fn enqueue(&mut self, v: usize) {
        let h = self.height[v] as usize;
        if self.in_bucket[v] || h >= 2 * self.n {
            return;
        }
        self.in_bucket[v] = true;
        self.buckets[h].push(v as u32);
        if h > self.highest {
            self.highest = h;
        }
    }

    fn main_loop(&mut self) {
        loop {
            while self.highest > 0 && self.buckets[self.highest].is_empty() {
                self.highest -= 1;
            }
            if self.buckets[self.highest].is_empty() {
                break;
            }
            let v = self.buckets[self.highest].pop().unwrap() as usize;
            self.in_bucket[v] = false;
            if self.excess[v].is_zero() || self.height[v] as usize != self.highest {
                self.enqueue_if_active(v);
                continue;
            }
            self.discharge(v);
            if self.relabels_since_global > self.n {
                self.global_relabel();
            }
        }
    }

    fn enqueue_if_active(&mut self, v: usize) {
        if v != self.source && v != self.sink && !self.excess[v].is_zero() {
            self.enqueue(v);
        }
    }

    fn discharge(&mut self, v: usize) {
        loop {
            let mut idx = self.cur[v];
            let end = self.adj_start[v + 1];
            while idx < end {
                let slot = self.adj[idx] as usize;
                let to = self.slot_to[slot] as usize;
                if self.residual[slot] > I::zero() && self.height[v] == self.height[to] + 1 {
                    let delta = if self.excess[v] <= self.residual[slot] {
                        self.excess[v].clone()
                    } else {
                        self.residual[slot].clone()
                    };
                    self.residual[slot].sub_assign_ref(&delta);
                    self.residual[slot ^ 1].add_assign_ref(&delta);
                    self.excess[v].sub_assign_ref(&delta);
                    self.excess[to].add_assign_ref(&delta);
                    if to != self.source && to != self.sink {
                        self.enqueue(to);
                    }
                    if self.excess[v].is_zero() {
                        self.cur[v] = idx;
                        return;
                    }
                }
                idx += 1;
            }
            // Arc list exhausted with excess remaining: relabel.
            if !self.relabel(v) {
                return;
            }
        }
    }

    /// Residual reachability from the source on the solved state.
    fn reachable_from_source(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for idx in self.adj_start[u]..self.adj_start[u + 1] {
                let slot = self.adj[idx] as usize;
                let to = self.slot_to[slot] as usize;
                if !seen[to] && self.residual[slot] > I::zero() {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// Returns false when the vertex became inactive (lifted out of range).
    fn relabel(&mut self, v: usize) -> bool {
        let old = self.height[v];
        let mut min_h: Option<u32> = None;
        for idx in self.adj_start[v]..self.adj_start[v + 1] {
            let slot = self.adj[idx] as usize;
            if self.residual[slot] > I::zero() {
                let h = self.height[self.slot_to[slot] as usize];
                min_h = Some(min_h.map_or(h, |m| m.min(h)));
            }
        }
        let new_h = match min_h {
            Some(h) => h + 1,
            None => 2 * self.n as u32,
        };
        self.label_count[old as usize] -= 1;
        self.height[v] = new_h;
        if (new_h as usize) < self.label_count.len() {
            self.label_count[new_h as usize] += 1;
        }
        self.cur[v] = self.adj_start[v];
        self.relabels_since_global += 1;

        // Gap heuristic below the sink level: once no vertex sits at `old`,
        // everything strictly between `old` and `n` can never reach t.
        if (old as usize) < self.n && self.label_count[old as usize] == 0 {
            for u in 0..self.n {
                let h = self.height[u];
                if h > old && (h as usize) < self.n && u != self.source {
                    self.label_count[h as usize] -= 1;
                    self.height[u] = self.n as u32 + 1;
                    self.label_count[self.n + 1] += 1;
                    self.cur[u] = self.adj_start[u];
                }
            }
        }
        if (self.height[v] as usize) >= 2 * self.n {
            return false;
        }
        true
    }
}
