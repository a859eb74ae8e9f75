//! The parametric network and the vertex-move breakpoint sweep.
//!
//! Source-arc capacities become `max(0, e_i - lambda)`. As `lambda`
//! decreases from `max_i e_i` to zero, the source side of the canonical
//! minimum cut (the one with the smallest source side; see
//! [`crate::maxflow::min_source_side_cut`]) grows monotonically. For every
//! vertex `v` the set of parameters placing `v` on the source side is an
//! interval `[0, move_lambda(v))`, and for buyers that threshold equals
//! their surplus under a balanced flow of the base network.
//!
//! The sweep computes all thresholds with a divide-and-conquer over nested
//! cuts: the axis is first split at the distinct budget values, which makes
//! every cut-capacity function linear within a regime, and each regime is
//! resolved by intersecting the capacity lines of its endpoint cuts.

use crate::flow::{Capacity, Cut, FlowNetwork, Vertex};
use crate::maxflow::max_flow_value_and_cut;
use crate::net::EqualityNetwork;
use crate::rational::{is_integer, simplest_in_interval, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from parametric operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParametricError {
    #[error("negative parameter value {0}")]
    NegativeLambda(String),
    #[error("an unbounded arc crosses the cut; its capacity is not a function of lambda")]
    InfiniteArcCrossesCut,
    #[error("intersect precondition violated: {0}")]
    IntersectPrecondition(String),
    #[error("breakpoint oracle requires integer budgets and prices")]
    OracleNeedsIntegers,
    #[error("breakpoint oracle bisection depth {0} exceeds the supported cap")]
    OracleTooDeep(usize),
}

/// The equality network with source capacities `max(0, e_i - lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricNetwork {
    base: EqualityNetwork,
    lambda_max: Rational,
}

/// Builds the parametric network; `lambda_max` is the largest budget, at
/// and above which every source arc has capacity zero.
pub fn make_parametric(net: EqualityNetwork) -> ParametricNetwork {
    let lambda_max = net.max_budget();
    ParametricNetwork { base: net, lambda_max }
}

impl ParametricNetwork {
    pub fn base(&self) -> &EqualityNetwork {
        &self.base
    }

    pub fn lambda_max(&self) -> &Rational {
        &self.lambda_max
    }

    /// The network at a fixed parameter value.
    pub fn instantiate(&self, lambda: &Rational) -> Result<FlowNetwork, ParametricError> {
        if lambda.is_negative() {
            return Err(ParametricError::NegativeLambda(lambda.to_string()));
        }
        Ok(self.base.flow_network_with_source_caps(|i| {
            let cap = &self.base.budgets()[i] - lambda;
            if cap.is_negative() {
                Capacity::Finite(Rational::zero())
            } else {
                Capacity::Finite(cap)
            }
        }))
    }

    /// Min-cut capacity at `lambda`.
    pub fn kappa(&self, lambda: &Rational) -> Result<Rational, ParametricError> {
        Ok(max_flow_value_and_cut(&self.instantiate(lambda)?).0)
    }

    /// The canonical minimum cut (smallest source side) at `lambda`.
    pub fn min_cut_at(&self, lambda: &Rational) -> Result<Cut, ParametricError> {
        Ok(max_flow_value_and_cut(&self.instantiate(lambda)?).1)
    }
}

/// Capacity of a fixed cut as a piecewise-linear function of `lambda`:
/// a constant part (crossing sink arcs) plus one `max(0, e - lambda)` term
/// per crossing source arc, stored as sorted kink positions with
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCapacityFn {
    constant: Rational,
    terms: Vec<(Rational, usize)>,
}

impl CutCapacityFn {
    pub fn eval(&self, lambda: &Rational) -> Rational {
        let mut total = self.constant.clone();
        for (kink, multiplicity) in &self.terms {
            if kink > lambda {
                total += (kink - lambda) * Rational::from_integer(BigInt::from(*multiplicity));
            }
        }
        total
    }

    /// Kink positions (the budgets of crossing source arcs), ascending.
    pub fn kinks(&self) -> impl Iterator<Item = &Rational> {
        self.terms.iter().map(|(k, _)| k)
    }
}

/// Builds the capacity function of `cut` in `pn`. Fails if an unbounded
/// arc crosses.
pub fn cut_capacity_function(
    pn: &ParametricNetwork,
    cut: &Cut,
) -> Result<CutCapacityFn, ParametricError> {
    let net = pn.base();
    let fnet = net.to_flow_network();
    let mut constant = Rational::zero();
    let mut budgets: Vec<Rational> = Vec::new();
    for arc in fnet.arcs() {
        if cut.contains(arc.from) && !cut.contains(arc.to) {
            match (fnet.role(arc.from), fnet.role(arc.to)) {
                (Vertex::Source, Vertex::Buyer(i)) => budgets.push(net.budgets()[i].clone()),
                (Vertex::Good(j), Vertex::Sink) => constant += &net.prices()[j],
                _ => return Err(ParametricError::InfiniteArcCrossesCut),
            }
        }
    }
    budgets.sort();
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    for b in budgets {
        match terms.last_mut() {
            Some((kink, m)) if *kink == b => *m += 1,
            _ => terms.push((b, 1)),
        }
    }
    Ok(CutCapacityFn { constant, terms })
}

/// The largest `lambda` in `[lo, hi]` where `f` and `g` agree, by exact
/// segment scan over the merged kink lists. `None` when the functions are
/// identical on the whole interval. Requires `lo < hi` and that the sign
/// of `f - g` weakly changes over the interval.
pub fn intersect(
    f: &CutCapacityFn,
    g: &CutCapacityFn,
    lo: &Rational,
    hi: &Rational,
) -> Result<Option<Rational>, ParametricError> {
    if lo >= hi {
        return Err(ParametricError::IntersectPrecondition(format!(
            "need lo < hi, got [{lo}, {hi}]"
        )));
    }
    let d_lo = f.eval(lo) - g.eval(lo);
    let d_hi = f.eval(hi) - g.eval(hi);
    let crossing_down = !d_lo.is_negative() && !d_hi.is_positive();
    let crossing_up = !d_lo.is_positive() && !d_hi.is_negative();
    if !crossing_down && !crossing_up {
        return Err(ParametricError::IntersectPrecondition(
            "difference keeps a strict sign on both ends".into(),
        ));
    }

    let mut points: Vec<Rational> = vec![lo.clone(), hi.clone()];
    points.extend(f.kinks().chain(g.kinks()).filter(|k| *k > lo && *k < hi).cloned());
    points.sort();
    points.dedup();

    let diffs: Vec<Rational> = points.iter().map(|p| f.eval(p) - g.eval(p)).collect();
    if diffs.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    // Scan segments from the top; the difference is linear on each.
    for seg in (0..points.len() - 1).rev() {
        let (a, b) = (&points[seg], &points[seg + 1]);
        let (da, db) = (&diffs[seg], &diffs[seg + 1]);
        if db.is_zero() {
            return Ok(Some(b.clone()));
        }
        if da.is_zero() {
            return Ok(Some(a.clone()));
        }
        if da.is_positive() != db.is_positive() {
            // Solve da + (db - da) * (x - a)/(b - a) = 0 exactly.
            let x = a + (b - a) * da / (da - db);
            return Ok(Some(x));
        }
    }
    Err(ParametricError::IntersectPrecondition(
        "no sign change found on any segment".into(),
    ))
}

/// Per-vertex move thresholds, the distinct positive breakpoints, and the
/// canonical cut on each interval between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakpointProfile {
    /// Threshold per buyer: `b_i` is on the source side exactly for
    /// `lambda < buyer_moves[i]` (zero means never).
    pub buyer_moves: Vec<Rational>,
    /// Same for goods.
    pub good_moves: Vec<Rational>,
    /// Sorted distinct positive move values, ascending.
    pub breakpoints: Vec<Rational>,
    /// `intervals[k]` is the canonical cut on `[lo_k, lo_{k+1})` where the
    /// lower bounds are `0, breakpoints[0], ..`; the last entry extends to
    /// infinity.
    pub intervals: Vec<CutInterval>,
    /// Max-flow computations spent producing this profile.
    pub maxflow_calls: usize,
}

/// One constant piece of the cut evolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutInterval {
    pub lo: Rational,
    pub cut: Cut,
}

impl BreakpointProfile {
    /// Move threshold of an arbitrary network vertex (zero for s and t).
    pub fn move_of(&self, role: Vertex) -> Rational {
        match role {
            Vertex::Buyer(i) => self.buyer_moves[i].clone(),
            Vertex::Good(j) => self.good_moves[j].clone(),
            Vertex::Source | Vertex::Sink => Rational::zero(),
        }
    }

    /// The interval cut in effect at `lambda`.
    pub fn cut_at(&self, lambda: &Rational) -> &Cut {
        let mut current = &self.intervals[0];
        for interval in &self.intervals[1..] {
            if &interval.lo <= lambda {
                current = interval;
            } else {
                break;
            }
        }
        &current.cut
    }

    /// Equality on the data the sweep contract fixes: moves, breakpoints,
    /// and cut partitions per interval.
    pub fn same_outcome(&self, other: &BreakpointProfile) -> bool {
        self.buyer_moves == other.buyer_moves
            && self.good_moves == other.good_moves
            && self.breakpoints == other.breakpoints
            && self.intervals.len() == other.intervals.len()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| a.lo == b.lo && a.cut.same_partition(&b.cut))
    }
}

/// Computes every vertex-move threshold with a single divide-and-conquer
/// sweep over nested minimum cuts.
pub fn vertex_move_breakpoints(pn: &ParametricNetwork) -> BreakpointProfile {
    let net = pn.base();
    let mut calls = 0usize;

    // Regime boundaries: zero plus the distinct budget values. Within a
    // regime every clamp max(0, e - lambda) is linear.
    let mut splits: Vec<Rational> = vec![Rational::zero()];
    let mut budgets: Vec<Rational> = net.budgets().to_vec();
    budgets.sort();
    budgets.dedup();
    splits.extend(budgets);

    let cuts: Vec<Cut> = splits
        .iter()
        .map(|v| {
            calls += 1;
            pn.min_cut_at(v).expect("nonnegative split point")
        })
        .collect();

    let mut moves = vec![Rational::zero(); net.buyer_count() + net.good_count() + 2];
    let mut pieces: Vec<(Rational, Cut)> = Vec::new();
    for k in 0..splits.len() - 1 {
        solve_regime(
            pn,
            &splits[k],
            &splits[k + 1],
            &cuts[k],
            &cuts[k + 1],
            &mut moves,
            &mut pieces,
            &mut calls,
        );
    }
    // At and above lambda_max the cut is the last endpoint cut ({s}).
    pieces.push((splits.last().unwrap().clone(), cuts.last().unwrap().clone()));

    assemble_profile(net, moves, pieces, calls)
}

/// Resolves one regime `[lo, hi]` whose endpoint cuts are known. All cut
/// capacities are linear here, so if the endpoint partitions differ, the
/// canonical cut takes exactly the two endpoint values, switching where
/// their capacity lines cross, or a strictly intermediate cut exists and
/// both halves recurse.
#[allow(clippy::too_many_arguments)]
fn solve_regime(
    pn: &ParametricNetwork,
    lo: &Rational,
    hi: &Rational,
    cut_lo: &Cut,
    cut_hi: &Cut,
    moves: &mut [Rational],
    pieces: &mut Vec<(Rational, Cut)>,
    calls: &mut usize,
) {
    if cut_lo.same_partition(cut_hi) {
        pieces.push((lo.clone(), cut_lo.clone()));
        return;
    }
    let f_lo = cut_capacity_function(pn, cut_lo).expect("endpoint cut is finite");
    let f_hi = cut_capacity_function(pn, cut_hi).expect("endpoint cut is finite");
    let star = intersect(&f_lo, &f_hi, lo, hi)
        .expect("endpoint capacity lines cross inside the regime")
        .expect("distinct cuts have distinct capacity lines");
    debug_assert!(&star > lo && &star <= hi);
    *calls += 1;
    let cut_star = pn.min_cut_at(&star).expect("nonnegative crossing");
    if cut_star.same_partition(cut_hi) {
        // The cut switches exactly at the crossing: everything in the gap
        // leaves the source side there.
        for v in 0..moves.len() {
            if cut_lo.contains(v) && !cut_hi.contains(v) {
                moves[v] = star.clone();
            }
        }
        pieces.push((lo.clone(), cut_lo.clone()));
        pieces.push((star, cut_hi.clone()));
    } else {
        // A strictly intermediate cut: both halves shrink.
        debug_assert!(&star < hi);
        debug_assert!(!cut_star.same_partition(cut_lo));
        solve_regime(pn, lo, &star, cut_lo, &cut_star, moves, pieces, calls);
        solve_regime(pn, &star, hi, &cut_star, cut_hi, moves, pieces, calls);
    }
}

fn assemble_profile(
    net: &EqualityNetwork,
    moves: Vec<Rational>,
    mut pieces: Vec<(Rational, Cut)>,
    calls: usize,
) -> BreakpointProfile {
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    let mut intervals: Vec<CutInterval> = Vec::new();
    for (lo, cut) in pieces {
        match intervals.last() {
            Some(last) if last.cut.same_partition(&cut) => {}
            _ => intervals.push(CutInterval { lo, cut }),
        }
    }

    let buyer_moves: Vec<Rational> =
        (0..net.buyer_count()).map(|i| moves[net.buyer_id(i)].clone()).collect();
    let good_moves: Vec<Rational> =
        (0..net.good_count()).map(|j| moves[net.good_id(j)].clone()).collect();
    let mut breakpoints: Vec<Rational> = buyer_moves
        .iter()
        .chain(good_moves.iter())
        .filter(|m| m.is_positive())
        .cloned()
        .collect();
    breakpoints.sort();
    breakpoints.dedup();

    debug_assert_eq!(intervals.len(), breakpoints.len() + 1);
    BreakpointProfile {
        buyer_moves,
        good_moves,
        breakpoints,
        intervals,
        maxflow_calls: calls,
    }
}

/// Test oracle: recovers every move threshold by per-vertex bisection over
/// the membership predicate, then snaps each bracket to the unique
/// rational with bounded denominator inside it. Requires integer budgets
/// and prices; the denominator bound is then the buyer count.
pub fn breakpoints_oracle(pn: &ParametricNetwork) -> Result<BreakpointProfile, ParametricError> {
    let net = pn.base();
    let vertex_count = net.buyer_count() + net.good_count() + 2;
    let vertices: Vec<usize> = (1..vertex_count - 1).collect();
    let mut calls = 0usize;
    let moves = bisect_moves(pn, &vertices, &mut calls)?;

    let buyer_moves: Vec<Rational> =
        (0..net.buyer_count()).map(|i| moves[net.buyer_id(i)].clone()).collect();
    let good_moves: Vec<Rational> =
        (0..net.good_count()).map(|j| moves[net.good_id(j)].clone()).collect();
    let mut breakpoints: Vec<Rational> = buyer_moves
        .iter()
        .chain(good_moves.iter())
        .filter(|m| m.is_positive())
        .cloned()
        .collect();
    breakpoints.sort();
    breakpoints.dedup();

    // One evaluation per interval rebuilds the cut evolution: at each
    // interval's lower bound the cut has just switched.
    let mut intervals = Vec::with_capacity(breakpoints.len() + 1);
    let mut lows = vec![Rational::zero()];
    lows.extend(breakpoints.iter().cloned());
    for lo in lows {
        calls += 1;
        let cut = pn.min_cut_at(&lo)?;
        intervals.push(CutInterval { lo, cut });
    }

    Ok(BreakpointProfile {
        buyer_moves,
        good_moves,
        breakpoints,
        intervals,
        maxflow_calls: calls,
    })
}

const ORACLE_DEPTH_CAP: usize = 512;

/// Per-vertex bisection used by the oracle and the benchmark baseline.
/// Returns thresholds indexed by dense vertex id.
pub(crate) fn bisect_moves(
    pn: &ParametricNetwork,
    vertices: &[usize],
    calls: &mut usize,
) -> Result<Vec<Rational>, ParametricError> {
    let net = pn.base();
    if !net.budgets().iter().chain(net.prices().iter()).all(is_integer) {
        return Err(ParametricError::OracleNeedsIntegers);
    }
    // Breakpoints are block surpluses (sums of integers divided by a block
    // size), so denominators are bounded by the buyer count.
    let denom_bound = Rational::from_integer(BigInt::from(net.buyer_count()));
    let width = (Rational::one() + Rational::one()) * &denom_bound * &denom_bound;
    let width = width.recip();

    let vertex_count = net.buyer_count() + net.good_count() + 2;
    let mut moves = vec![Rational::zero(); vertex_count];
    for &v in vertices {
        let mut lo = Rational::zero();
        let mut hi = pn.lambda_max().clone();
        let mut depth = 0usize;
        while &hi - &lo >= width {
            depth += 1;
            if depth > ORACLE_DEPTH_CAP {
                return Err(ParametricError::OracleTooDeep(depth));
            }
            let mid = (&lo + &hi) / (Rational::one() + Rational::one());
            *calls += 1;
            if pn.min_cut_at(&mid)?.contains(v) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The membership interval is [0, move), so the threshold stays in
        // [lo, hi] throughout (move > lo whenever lo was raised, move = 0
        // when it never was), and the bracket is narrow enough to contain
        // exactly one rational with denominator below the bound.
        let snapped = simplest_in_interval(&lo, &hi);
        debug_assert!(snapped.denom() <= denom_bound.numer());
        moves[v] = snapped;
    }
    Ok(moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::fixtures::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn lambda_max_is_the_largest_budget() {
        assert_eq!(make_parametric(fix_b()).lambda_max(), &rat(3));
        assert_eq!(make_parametric(fix_c()).lambda_max(), &rat(5));
        assert_eq!(make_parametric(fix_a()).lambda_max(), &rat(2));
    }

    #[test]
    fn instantiate_examples() {
        let pn = make_parametric(fix_c());
        let fnet = pn.instantiate(&rat(2)).unwrap();
        let net = pn.base();
        let caps: Vec<_> = (0..2)
            .map(|i| {
                fnet.arcs()[fnet.arc_index(net.source_id(), net.buyer_id(i)).unwrap()]
                    .capacity
                    .clone()
            })
            .collect();
        assert_eq!(caps, vec![Capacity::Finite(rat(3)), Capacity::Finite(rat(0))]);

        let pn = make_parametric(fix_b());
        assert_eq!(pn.instantiate(&rat(0)).unwrap(), pn.base().to_flow_network());

        let pn = make_parametric(fix_a());
        let fnet = pn.instantiate(&rat(5)).unwrap();
        assert_eq!(fnet.arcs()[0].capacity, Capacity::Finite(rat(0)));

        assert!(pn.instantiate(&rat(-1)).is_err());
    }

    #[test]
    fn kappa_examples() {
        let pn = make_parametric(fix_c());
        assert_eq!(pn.kappa(&rat(4)).unwrap(), rat(1));
        assert_eq!(pn.kappa(&rat(2)).unwrap(), rat(2));
        assert_eq!(pn.kappa(&ratio(1, 2)).unwrap(), ratio(5, 2));

        let pn = make_parametric(fix_b());
        assert_eq!(pn.kappa(&rat(2)).unwrap(), rat(2));
        assert_eq!(pn.kappa(&ratio(1, 2)).unwrap(), rat(4));
        assert_eq!(pn.kappa(&rat(1)).unwrap(), rat(4));
    }

    fn cut_from_roles(pn: &ParametricNetwork, roles: &[&str]) -> Cut {
        let fnet = pn.base().to_flow_network();
        let in_source: Vec<bool> = (0..fnet.vertex_count())
            .map(|v| roles.contains(&fnet.role(v).to_string().as_str()))
            .collect();
        Cut::from_source_side(&fnet, in_source)
    }

    #[test]
    fn cut_capacity_function_examples() {
        let pn = make_parametric(fix_c());
        let cut = cut_from_roles(&pn, &["s", "b1", "c1"]);
        let f = cut_capacity_function(&pn, &cut).unwrap();
        assert_eq!(f.eval(&rat(2)), rat(2));
        assert_eq!(f.eval(&ratio(1, 2)), ratio(5, 2));

        let pn = make_parametric(fix_b());
        let cut = cut_from_roles(&pn, &["s"]);
        let f = cut_capacity_function(&pn, &cut).unwrap();
        assert_eq!(f.eval(&rat(2)), rat(2));
        assert_eq!(f.eval(&rat(0)), rat(6));

        // All-source cut: constant at the price sum.
        let cut = cut_from_roles(&pn, &["s", "b1", "b2", "c1", "c2"]);
        let f = cut_capacity_function(&pn, &cut).unwrap();
        for lambda in [rat(0), rat(1), rat(7)] {
            assert_eq!(f.eval(&lambda), rat(4));
        }

        // A crossing unbounded arc is rejected.
        let cut = cut_from_roles(&pn, &["s", "b1"]);
        assert_eq!(
            cut_capacity_function(&pn, &cut).unwrap_err(),
            ParametricError::InfiniteArcCrossesCut
        );
    }

    #[test]
    fn intersect_examples() {
        let pn = make_parametric(fix_c());
        let f = cut_capacity_function(&pn, &cut_from_roles(&pn, &["s"])).unwrap();
        let g = cut_capacity_function(&pn, &cut_from_roles(&pn, &["s", "b1", "c1"])).unwrap();
        assert_eq!(intersect(&f, &g, &rat(0), &rat(5)).unwrap(), Some(rat(3)));

        let pn = make_parametric(fix_b());
        let f = cut_capacity_function(&pn, &cut_from_roles(&pn, &["s"])).unwrap();
        let g =
            cut_capacity_function(&pn, &cut_from_roles(&pn, &["s", "b1", "b2", "c1", "c2"])).unwrap();
        assert_eq!(intersect(&f, &g, &rat(0), &rat(3)).unwrap(), Some(rat(1)));

        // Identical constants: no isolated intersection.
        let h = cut_capacity_function(&pn, &cut_from_roles(&pn, &["s", "b1", "b2", "c1", "c2"])).unwrap();
        assert_eq!(intersect(&g, &h, &rat(0), &rat(3)).unwrap(), None);

        assert!(intersect(&f, &g, &rat(3), &rat(1)).is_err());
        // Strict sign on both ends: the crossing precondition fails.
        assert!(matches!(
            intersect(&f, &g, &rat(0), &ratio(1, 2)),
            Err(ParametricError::IntersectPrecondition(_))
        ));
    }

    #[test]
    fn min_cut_at_breaks_ties_toward_the_source() {
        let pn = make_parametric(fix_c());
        let cut = pn.min_cut_at(&rat(3)).unwrap();
        let fnet = pn.base().to_flow_network();
        let roles: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
        assert_eq!(roles, vec!["s"]);

        let pn = make_parametric(fix_b());
        let cut = pn.min_cut_at(&rat(1)).unwrap();
        let fnet = pn.base().to_flow_network();
        let roles: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
        assert_eq!(roles, vec!["s"]);

        let cut = pn.min_cut_at(&rat(2)).unwrap();
        let fnet = pn.base().to_flow_network();
        let roles: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
        assert_eq!(roles, vec!["s"]);
    }

    #[test]
    fn sweep_matches_fixture_expectations() {
        let pn = make_parametric(fix_b());
        let profile = vertex_move_breakpoints(&pn);
        assert_eq!(profile.buyer_moves, vec![rat(1), rat(1)]);
        assert_eq!(profile.good_moves, vec![rat(1), rat(1)]);
        assert_eq!(profile.breakpoints, vec![rat(1)]);

        let pn = make_parametric(fix_c());
        let profile = vertex_move_breakpoints(&pn);
        assert_eq!(profile.buyer_moves, vec![rat(3), rat(0)]);
        assert_eq!(profile.good_moves, vec![rat(3), rat(0)]);
        assert_eq!(profile.breakpoints, vec![rat(3)]);
        // kappa changes slope at lambda = 1 but no vertex moves there.
        assert_eq!(profile.intervals.len(), 2);

        let pn = make_parametric(fix_a());
        let profile = vertex_move_breakpoints(&pn);
        assert_eq!(profile.buyer_moves, vec![rat(0)]);
        assert_eq!(profile.good_moves, vec![rat(0)]);
        assert!(profile.breakpoints.is_empty());
    }

    #[test]
    fn oracle_agrees_with_the_sweep_on_fixtures() {
        for net in [fix_a(), fix_b(), fix_c()] {
            let pn = make_parametric(net);
            let sweep = vertex_move_breakpoints(&pn);
            let oracle = breakpoints_oracle(&pn).unwrap();
            assert!(sweep.same_outcome(&oracle), "sweep {sweep:?} oracle {oracle:?}");
        }
    }

    #[test]
    fn call_accounting_within_budget_on_fixtures() {
        for net in [fix_a(), fix_b(), fix_c()] {
            let buyer_count = net.buyer_count();
            let mut budgets = net.budgets().to_vec();
            budgets.sort();
            budgets.dedup();
            let bound = 2 * (buyer_count + budgets.len()) + 2;
            let pn = make_parametric(net);
            let profile = vertex_move_breakpoints(&pn);
            assert!(profile.maxflow_calls <= bound, "{} > {bound}", profile.maxflow_calls);
        }
    }

    #[test]
    fn membership_is_a_half_open_interval() {
        for net in [fix_b(), fix_c()] {
            let pn = make_parametric(net);
            let profile = vertex_move_breakpoints(&pn);
            let fnet = pn.base().to_flow_network();
            for lambda in [rat(0), ratio(1, 2), rat(1), rat(2), rat(3), ratio(7, 2), rat(5)] {
                let cut = pn.min_cut_at(&lambda).unwrap();
                for v in 1..fnet.vertex_count() - 1 {
                    let threshold = profile.move_of(fnet.role(v));
                    assert_eq!(cut.contains(v), lambda < threshold, "{} at {lambda}", fnet.role(v));
                }
            }
        }
    }

    #[test]
    fn interval_cuts_are_nested_and_track_kappa() {
        let pn = make_parametric(fix_c());
        let profile = vertex_move_breakpoints(&pn);
        for pair in profile.intervals.windows(2) {
            assert!(pair[1].cut.source_subset_of(&pair[0].cut));
        }
        for lambda in [rat(0), ratio(1, 3), rat(1), rat(2), ratio(7, 2), rat(4), rat(6)] {
            let cut = profile.cut_at(&lambda);
            let f = cut_capacity_function(&pn, cut).unwrap();
            assert_eq!(f.eval(&lambda), pn.kappa(&lambda).unwrap(), "at {lambda}");
        }
    }

    #[test]
    fn kappa_is_concave_within_budget_regimes() {
        for seed in 0..20u64 {
            let net = crate::gen::gen_random(4, 4, 8, 900 + seed, (1, 12), (1, 12)).unwrap();
            let mut splits: Vec<Rational> = net.budgets().to_vec();
            splits.push(Rational::zero());
            splits.sort();
            splits.dedup();
            let pn = make_parametric(net);
            let half = ratio(1, 2);
            let quarter = ratio(1, 4);
            for pair in splits.windows(2) {
                let (lo, hi) = (&pair[0], &pair[1]);
                let width = hi - lo;
                let a = lo + &width * &quarter;
                let m = lo + &width * &half;
                let b = lo + &width * (&half + &quarter);
                let ka = pn.kappa(&a).unwrap();
                let km = pn.kappa(&m).unwrap();
                let kb = pn.kappa(&b).unwrap();
                // m is the midpoint of [a, b]: concavity means kappa(m)
                // is at least the chord value.
                assert!(&km + &km >= &ka + &kb, "concavity fails on [{a}, {b}]");
            }
        }
    }

    #[test]
    fn kappa_matches_the_interval_cut_at_random_samples() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(77);
        for seed in 0..10u64 {
            let net = crate::gen::gen_random(5, 5, 10, 300 + seed, (1, 12), (1, 12)).unwrap();
            let pn = make_parametric(net);
            let profile = vertex_move_breakpoints(&pn);
            for _ in 0..20 {
                let denom = rand::Rng::gen_range(&mut rng, 1u64..=9);
                let numer = rand::Rng::gen_range(&mut rng, 0u64..=13 * 9);
                let lambda = Rational::new(numer.into(), denom.into());
                let cut = profile.cut_at(&lambda);
                let f = cut_capacity_function(&pn, cut).unwrap();
                assert_eq!(f.eval(&lambda), pn.kappa(&lambda).unwrap(), "at {lambda}");
            }
        }
    }

    #[test]
    fn each_vertex_moves_at_most_once_and_breakpoints_fit_buyers() {
        for seed in 0..20u64 {
            let net = crate::gen::gen_random(6, 6, 12, 40 + seed, (1, 12), (1, 12)).unwrap();
            let buyer_count = net.buyer_count();
            let budgets = net.budgets().to_vec();
            let pn = make_parametric(net);
            let profile = vertex_move_breakpoints(&pn);
            assert!(profile.breakpoints.len() <= buyer_count);
            for (m, e) in profile.buyer_moves.iter().zip(&budgets) {
                assert!(m <= e, "move {m} above budget {e}");
            }
            for pair in profile.intervals.windows(2) {
                assert!(pair[1].cut.source_subset_of(&pair[0].cut));
                assert!(!pair[1].cut.same_partition(&pair[0].cut));
            }
        }
    }

    #[test]
    fn oracle_rejects_non_integer_inputs() {
        let net = crate::net::EqualityNetwork::new(
            vec![ratio(3, 2)],
            vec![rat(1)],
            vec![(0, 0)],
        )
        .unwrap();
        let pn = make_parametric(net);
        assert_eq!(
            breakpoints_oracle(&pn).unwrap_err(),
            ParametricError::OracleNeedsIntegers
        );
    }
}
