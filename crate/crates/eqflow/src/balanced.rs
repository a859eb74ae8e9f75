//! Balanced flows: the end-to-end algorithm, block decomposition, a
//! balancedness verifier, and an independent squared-norm oracle.
//!
//! The algorithm computes every buyer's move threshold with the parametric
//! sweep, builds the reduced network whose source capacities are
//! `e_i - lambda_i`, and solves one final max-flow there. Every source arc
//! of the reduced network saturates, so the thresholds are exactly the
//! buyer surpluses, and the resulting flow is a balanced flow of the
//! original network.

use crate::flow::{Capacity, Flow, FlowNetwork};
use crate::maxflow::{check_flow, max_flow};
use crate::net::EqualityNetwork;
use crate::parametric::{make_parametric, vertex_move_breakpoints, BreakpointProfile};
use crate::rational::{format_rational, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::collections::VecDeque;

/// Errors from the balanced-flow pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BalancedError {
    #[error("move value {value} for buyer {buyer} outside [0, {budget}]")]
    MoveOutOfRange {
        buyer: usize,
        value: String,
        budget: String,
    },
    #[error(
        "internal consistency failure: source arc to buyer {buyer} carries {amount} of capacity {capacity} in the reduced network"
    )]
    UnsaturatedSourceArc {
        buyer: usize,
        amount: String,
        capacity: String,
    },
    #[error("internal consistency failure: good {good} receives flow from blocks with surpluses {a} and {b}")]
    CrossBlockFlow { good: usize, a: String, b: String },
}

/// A good fed by buyers of two different surplus groups; evidence that the
/// flow is not balanced.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("good {good} receives flow from blocks with surpluses {a} and {b}")]
pub struct CrossBlockFlow {
    pub good: usize,
    pub a: Rational,
    pub b: Rational,
}

/// The block partition of a flow: buyers grouped by equal surplus in
/// strictly decreasing order, each with the goods its money reaches. The
/// final block always has surplus zero, possibly with no buyers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    pub blocks: Vec<Block>,
}

/// One surplus class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// 0-based buyer indices, ascending.
    pub buyers: Vec<usize>,
    /// 0-based good indices, ascending.
    pub goods: Vec<usize>,
    pub surplus: Rational,
}

/// Everything the balanced-flow computation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedFlowResult {
    /// A balanced flow on the original network.
    pub flow: Flow,
    /// Its value, the max-flow value of the original network.
    pub value: Rational,
    /// Per-buyer surpluses, equal to the profile's buyer move thresholds.
    pub surpluses: Vec<Rational>,
    pub blocks: Blocks,
    pub profile: BreakpointProfile,
    /// Source capacities `e_i - lambda_i` of the reduced network.
    pub reduced_caps: Vec<Rational>,
    /// Total max-flow computations (sweep plus the final solve).
    pub maxflow_calls: usize,
}

/// Result of the balancedness verifier: named checks in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancednessCertificate {
    pub is_balanced: bool,
    pub checks: Vec<CertificateCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl BalancednessCertificate {
    pub fn failing_check(&self) -> Option<&CertificateCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Copy of the base network with source capacities `e_i - move_lambda[i]`.
/// Rejects thresholds outside `[0, e_i]`.
pub fn reduced_network(
    net: &EqualityNetwork,
    move_lambda: &[Rational],
) -> Result<FlowNetwork, BalancedError> {
    assert_eq!(move_lambda.len(), net.buyer_count());
    for (i, (lambda, budget)) in move_lambda.iter().zip(net.budgets()).enumerate() {
        if lambda.is_negative() || lambda > budget {
            return Err(BalancedError::MoveOutOfRange {
                buyer: i + 1,
                value: format_rational(lambda),
                budget: format_rational(budget),
            });
        }
    }
    Ok(net.flow_network_with_source_caps(|i| {
        Capacity::Finite(&net.budgets()[i] - &move_lambda[i])
    }))
}

/// Computes a balanced flow of `net`.
pub fn balanced_flow(net: &EqualityNetwork) -> Result<BalancedFlowResult, BalancedError> {
    let pn = make_parametric(net.clone());
    let profile = vertex_move_breakpoints(&pn);
    let reduced = reduced_network(net, &profile.buyer_moves)?;
    let solved = max_flow(&reduced);
    let maxflow_calls = profile.maxflow_calls + 1;

    // Every source arc of the reduced network must saturate; anything else
    // is an implementation bug, reported with full diagnostics.
    let mut reduced_caps = Vec::with_capacity(net.buyer_count());
    for i in 0..net.buyer_count() {
        let arc = reduced
            .arc_index(net.source_id(), net.buyer_id(i))
            .expect("source arc exists");
        let capacity = reduced.arcs()[arc].capacity.expect_finite("reduced source arc");
        let amount = solved.flow.amount(arc);
        if amount != capacity {
            return Err(BalancedError::UnsaturatedSourceArc {
                buyer: i + 1,
                amount: format_rational(amount),
                capacity: format_rational(capacity),
            });
        }
        reduced_caps.push(capacity.clone());
    }

    // The reduced network's arcs coincide with the original's, with weakly
    // smaller capacities, so the flow is feasible on the original network.
    let flow = Flow::new(solved.flow.amounts().to_vec(), solved.value.clone());
    let surpluses = profile.buyer_moves.clone();
    let blocks = blocks_from_surpluses(net, &flow).map_err(|e| BalancedError::CrossBlockFlow {
        good: e.good,
        a: format_rational(&e.a),
        b: format_rational(&e.b),
    })?;

    Ok(BalancedFlowResult {
        flow,
        value: solved.value,
        surpluses,
        blocks,
        profile,
        reduced_caps,
        maxflow_calls,
    })
}

/// Groups buyers by surplus (descending) and attaches to each group the
/// goods receiving its flow. Goods with zero inflow join the block of
/// their lowest-surplus adjacent buyer group. Errors when one good is fed
/// from two groups.
pub fn blocks_from_surpluses(net: &EqualityNetwork, flow: &Flow) -> Result<Blocks, CrossBlockFlow> {
    let fnet = net.to_flow_network();
    let surpluses: Vec<Rational> = (0..net.buyer_count())
        .map(|i| {
            let arc = fnet.arc_index(net.source_id(), net.buyer_id(i)).unwrap();
            &net.budgets()[i] - flow.amount(arc)
        })
        .collect();

    let mut values: Vec<Rational> = surpluses.clone();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    if values.last().map(|v| !v.is_zero()).unwrap_or(true) {
        values.push(Rational::zero());
    }
    let group_of = |r: &Rational| values.iter().position(|v| v == r).unwrap();

    let mut buyers_per_group: Vec<Vec<usize>> = vec![Vec::new(); values.len()];
    for (i, r) in surpluses.iter().enumerate() {
        buyers_per_group[group_of(r)].push(i);
    }

    let mut goods_per_group: Vec<Vec<usize>> = vec![Vec::new(); values.len()];
    for j in 0..net.good_count() {
        let mut feeder: Option<usize> = None;
        for &(i, g) in net.edges() {
            if g != j {
                continue;
            }
            let arc = fnet.arc_index(net.buyer_id(i), net.good_id(g)).unwrap();
            if flow.amount(arc).is_positive() {
                let group = group_of(&surpluses[i]);
                match feeder {
                    None => feeder = Some(group),
                    Some(prev) if prev != group => {
                        return Err(CrossBlockFlow {
                            good: j + 1,
                            a: values[prev.min(group)].clone(),
                            b: values[prev.max(group)].clone(),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        let group = match feeder {
            Some(g) => g,
            None => {
                // Zero inflow: lowest-surplus adjacent buyer group.
                net.edges()
                    .iter()
                    .filter(|(_, g)| *g == j)
                    .map(|(i, _)| group_of(&surpluses[*i]))
                    .max()
                    .expect("every good has an adjacent buyer")
            }
        };
        goods_per_group[group].push(j);
    }

    let blocks = values
        .into_iter()
        .enumerate()
        .map(|(k, surplus)| Block {
            buyers: buyers_per_group[k].clone(),
            goods: goods_per_group[k].clone(),
            surplus,
        })
        .collect();
    Ok(Blocks { blocks })
}

/// Checks the balanced-flow characterization: maximality, block ordering,
/// saturation of positive blocks' goods, flow locality (each good fed by
/// one block) and edge locality (no edge from a block to a lower block's
/// goods, nor from a positive-surplus buyer to an unsaturated good).
pub fn verify_balanced(net: &EqualityNetwork, flow: &Flow) -> BalancednessCertificate {
    let fnet = net.to_flow_network();
    let mut checks = Vec::new();

    let report = check_flow(&fnet, flow);
    let maximal = report.feasible && report.duality_gap.is_zero();
    checks.push(CertificateCheck {
        name: "maximality",
        passed: maximal,
        detail: if maximal {
            "flow is feasible and has the maximum value".into()
        } else if !report.feasible {
            report.first_violation().unwrap_or_else(|| "infeasible".into())
        } else {
            format!(
                "flow value falls short of the maximum by {}",
                format_rational(&report.duality_gap)
            )
        },
    });

    let surpluses: Vec<Rational> = (0..net.buyer_count())
        .map(|i| {
            let arc = fnet.arc_index(net.source_id(), net.buyer_id(i)).unwrap();
            &net.budgets()[i] - flow.amount(arc)
        })
        .collect();
    let mut values: Vec<Rational> = surpluses.clone();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    let group_of = |r: &Rational| values.iter().position(|v| v == r).unwrap();
    let strictly_ordered = values.windows(2).all(|w| w[0] > w[1]);
    checks.push(CertificateCheck {
        name: "block-ordering",
        passed: strictly_ordered,
        detail: format!(
            "{} surplus classes: {}",
            values.len(),
            values.iter().map(format_rational).collect::<Vec<_>>().join(" > ")
        ),
    });

    // Inflow per good and feeding groups.
    let mut inflow: Vec<Rational> = vec![Rational::zero(); net.good_count()];
    let mut feeders: Vec<Vec<usize>> = vec![Vec::new(); net.good_count()];
    for &(i, j) in net.edges() {
        let arc = fnet.arc_index(net.buyer_id(i), net.good_id(j)).unwrap();
        let amount = flow.amount(arc);
        if amount.is_positive() {
            inflow[j] += amount;
            let group = group_of(&surpluses[i]);
            if !feeders[j].contains(&group) {
                feeders[j].push(group);
            }
        }
    }
    let saturated: Vec<bool> = (0..net.good_count()).map(|j| inflow[j] == net.prices()[j]).collect();

    let mut locality_failures = Vec::new();
    for j in 0..net.good_count() {
        if feeders[j].len() > 1 {
            locality_failures.push(format!(
                "good {} fed by {} blocks",
                j + 1,
                feeders[j].len()
            ));
        }
    }
    checks.push(CertificateCheck {
        name: "flow-locality",
        passed: locality_failures.is_empty(),
        detail: if locality_failures.is_empty() {
            "each good receives flow from at most one block".into()
        } else {
            locality_failures.join("; ")
        },
    });

    // Saturation: goods fed by a positive-surplus block are completely sold.
    let mut saturation_failures = Vec::new();
    for j in 0..net.good_count() {
        let positive_feeder = feeders[j]
            .iter()
            .any(|&g| values[g].is_positive());
        if positive_feeder && !saturated[j] {
            saturation_failures.push(format!(
                "good {} unsaturated ({} of {})",
                j + 1,
                format_rational(&inflow[j]),
                format_rational(&net.prices()[j])
            ));
        }
    }
    checks.push(CertificateCheck {
        name: "saturation",
        passed: saturation_failures.is_empty(),
        detail: if saturation_failures.is_empty() {
            "every good of a positive-surplus block is completely sold".into()
        } else {
            saturation_failures.join("; ")
        },
    });

    // Edge locality: edges never point from a block to a strictly lower
    // block's goods, and a positive-surplus buyer never sees an
    // unsaturated good.
    let mut edge_failures = Vec::new();
    for &(i, j) in net.edges() {
        let buyer_group = group_of(&surpluses[i]);
        if let Some(&good_group) = feeders[j].iter().min() {
            if good_group > buyer_group {
                edge_failures.push(format!(
                    "edge ({}, {}) points to a lower block's good",
                    i + 1,
                    j + 1
                ));
            }
        }
        if surpluses[i].is_positive() && !saturated[j] {
            edge_failures.push(format!(
                "buyer {} has positive surplus but good {} is unsaturated",
                i + 1,
                j + 1
            ));
        }
    }
    checks.push(CertificateCheck {
        name: "edge-locality",
        passed: edge_failures.is_empty(),
        detail: if edge_failures.is_empty() {
            "no edge escapes its block structure".into()
        } else {
            edge_failures.join("; ")
        },
    });

    BalancednessCertificate {
        is_balanced: checks.iter().all(|c| c.passed),
        checks,
    }
}

// ---------------------------------------------------------------------------
// Squared-norm oracle
// ---------------------------------------------------------------------------

/// Errors from the squared-norm oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance too large for the oracle: {vertices} inner vertices (max {max})")]
    TooLarge { vertices: usize, max: usize },
    #[error("minimum-norm iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
}

const ORACLE_VERTEX_LIMIT: usize = 28;
const ORACLE_ITERATION_CAP: usize = 10_000;

/// Minimizes the squared surplus norm over the maximum flows of `net` by a
/// conditional-gradient (minimum-norm-point) iteration over the polytope of
/// achievable surplus vectors, run in exact arithmetic until the duality
/// gap drops below `tolerance`. For integer inputs the result is snapped to
/// the exact rational optimum.
///
/// Independent of the parametric sweep: the only flow primitive used is a
/// breadth-first augmenting-path max-flow on buyer subsets.
pub fn squared_norm_oracle(
    net: &EqualityNetwork,
    tolerance: &Rational,
) -> Result<Vec<Rational>, OracleError> {
    let inner = net.buyer_count() + net.good_count();
    if inner > ORACLE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge { vertices: inner, max: ORACLE_VERTEX_LIMIT });
    }
    let mut rho = SubnetworkFlowValue::new(net);
    let n = net.buyer_count();
    let budgets = net.budgets().to_vec();

    // Atoms are vertices of the surplus polytope; the point is tracked as
    // a convex combination.
    let mut atoms: Vec<Vec<Rational>> = vec![lmo(&mut rho, &budgets, &vec![Rational::zero(); n])];
    let mut coeffs: Vec<Rational> = vec![Rational::from_integer(BigInt::from(1))];
    let mut point = atoms[0].clone();

    for _ in 0..ORACLE_ITERATION_CAP {
        let candidate = lmo(&mut rho, &budgets, &point);
        let self_dot = dot(&point, &point);
        let cross = dot(&point, &candidate);
        let gap = (&self_dot - &cross) * Rational::from_integer(BigInt::from(2));
        if !gap.is_positive() || &gap <= tolerance {
            return Ok(finish_oracle(net, point, &gap));
        }
        atoms.push(candidate);
        coeffs.push(Rational::zero());

        // Minor cycles: move to the affine minimum-norm point of the
        // corral, dropping atoms that hit the boundary.
        loop {
            let target = affine_min_norm_coefficients(&atoms);
            if !target.iter().any(Signed::is_negative) {
                // Inside the simplex, possibly on a face: adopt it and
                // drop the atoms whose coefficient vanished.
                point = combination(&atoms, &target);
                let keep: Vec<bool> = target.iter().map(|c| c.is_positive()).collect();
                atoms = atoms
                    .into_iter()
                    .zip(&keep)
                    .filter_map(|(a, k)| k.then_some(a))
                    .collect();
                coeffs = target.into_iter().filter(|c| c.is_positive()).collect();
                break;
            }
            // Step from the current point toward the target until the first
            // coordinate reaches zero, then drop it and re-solve.
            let mut theta: Option<Rational> = None;
            for (alpha, beta) in coeffs.iter().zip(&target) {
                if beta.is_negative() {
                    let candidate = alpha / (alpha - beta);
                    theta = Some(match theta {
                        None => candidate,
                        Some(s) => s.min(candidate),
                    });
                }
            }
            let theta = theta.expect("a negative coefficient exists here");
            assert!(theta.is_positive(), "minimum-norm minor cycle stalled");
            let one = Rational::from_integer(BigInt::from(1));
            coeffs = coeffs
                .iter()
                .zip(&target)
                .map(|(a, b)| a * (&one - &theta) + b * &theta)
                .collect();
            let keep: Vec<bool> = coeffs.iter().map(|c| c.is_positive()).collect();
            atoms = atoms
                .into_iter()
                .zip(&keep)
                .filter_map(|(a, k)| k.then_some(a))
                .collect();
            coeffs = coeffs.into_iter().filter(|c| c.is_positive()).collect();
        }
    }
    Err(OracleError::NonConvergence { iterations: ORACLE_ITERATION_CAP })
}

/// Snap to the exact optimum when integer inputs make the result's
/// denominators bounded by the buyer count and the gap is tight enough to
/// isolate a unique candidate.
fn finish_oracle(net: &EqualityNetwork, point: Vec<Rational>, gap: &Rational) -> Vec<Rational> {
    if !gap.is_positive() {
        return point;
    }
    let integral = net
        .budgets()
        .iter()
        .chain(net.prices())
        .all(crate::rational::is_integer);
    if !integral {
        return point;
    }
    let denom_bound = BigInt::from(net.buyer_count());
    // Component error is at most sqrt(gap); use a dyadic upper bound.
    let mut eps = Rational::from_integer(BigInt::from(1));
    let four = Rational::from_integer(BigInt::from(4));
    let two = Rational::from_integer(BigInt::from(2));
    while &(&eps * &eps) / &four >= *gap {
        eps /= &two;
    }
    let spacing = Rational::new(BigInt::from(1), &denom_bound * &denom_bound);
    if (&eps * &two) >= spacing {
        return point;
    }
    point
        .into_iter()
        .map(|r| {
            let snapped = crate::rational::simplest_in_interval(&(&r - &eps), &(&r + &eps));
            if snapped.denom() <= &denom_bound {
                snapped
            } else {
                r
            }
        })
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combination(atoms: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let n = atoms[0].len();
    let mut out = vec![Rational::zero(); n];
    for (atom, c) in atoms.iter().zip(coeffs) {
        for (slot, value) in out.iter_mut().zip(atom) {
            *slot += value * c;
        }
    }
    out
}

/// Linear minimization over the surplus polytope: minimize `<direction, r>`
/// over surplus vectors of maximum flows. The achievable buyer-inflow
/// vectors form the base polytope of the subnetwork max-flow value
/// function, so a greedy pass in decreasing direction order is exact.
fn lmo(
    rho: &mut SubnetworkFlowValue<'_>,
    budgets: &[Rational],
    direction: &[Rational],
) -> Vec<Rational> {
    let n = budgets.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| direction[b].cmp(&direction[a]).then(a.cmp(&b)));
    let mut mask = 0u32;
    let mut previous = Rational::zero();
    let mut surplus = vec![Rational::zero(); n];
    for i in order {
        mask |= 1 << i;
        let value = rho.value(mask);
        surplus[i] = &budgets[i] - (&value - &previous);
        previous = value;
    }
    surplus
}

/// Barycentric coordinates of the minimum-norm point of the affine hull of
/// `atoms`: solve `2 G beta + mu 1 = 0`, `sum beta = 1` exactly.
fn affine_min_norm_coefficients(atoms: &[Vec<Rational>]) -> Vec<Rational> {
    let k = atoms.len();
    let mut matrix: Vec<Vec<Rational>> = vec![vec![Rational::zero(); k + 2]; k + 1];
    let two = Rational::from_integer(BigInt::from(2));
    let one = Rational::from_integer(BigInt::from(1));
    for i in 0..k {
        for j in 0..k {
            matrix[i][j] = dot(&atoms[i], &atoms[j]) * &two;
        }
        matrix[i][k] = one.clone();
        matrix[i][k + 1] = Rational::zero();
    }
    for j in 0..k {
        matrix[k][j] = one.clone();
    }
    matrix[k][k] = Rational::zero();
    matrix[k][k + 1] = one.clone();

    // Gaussian elimination with nonzero pivoting; the corral is affinely
    // independent, so the system is regular.
    let dim = k + 1;
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|&r| !matrix[r][col].is_zero())
            .expect("corral became affinely dependent");
        matrix.swap(col, pivot);
        let scale = matrix[col][col].clone();
        for entry in matrix[col][col..].iter_mut() {
            *entry /= &scale;
        }
        for row in 0..dim {
            if row != col && !matrix[row][col].is_zero() {
                let factor = matrix[row][col].clone();
                for c in col..dim + 1 {
                    let sub = &matrix[col][c] * &factor;
                    matrix[row][c] -= sub;
                }
            }
        }
    }
    (0..k).map(|i| matrix[i][dim].clone()).collect()
}

/// Memoized max-flow value of the subnetwork where only a subset of buyers
/// keeps its source arc, computed by breadth-first augmenting paths.
struct SubnetworkFlowValue<'a> {
    net: &'a EqualityNetwork,
    surrogate: Rational,
    memo: HashMap<u32, Rational>,
}

impl<'a> SubnetworkFlowValue<'a> {
    fn new(net: &'a EqualityNetwork) -> Self {
        let surrogate = net.budgets().iter().chain(net.prices()).sum::<Rational>()
            + Rational::from_integer(BigInt::from(1));
        SubnetworkFlowValue { net, surrogate, memo: HashMap::new() }
    }

    fn value(&mut self, mask: u32) -> Rational {
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let value = self.compute(mask);
        self.memo.insert(mask, value.clone());
        value
    }

    fn compute(&self, mask: u32) -> Rational {
        let net = self.net;
        let n = net.buyer_count() + net.good_count() + 2;
        let (s, t) = (net.source_id(), net.sink_id());
        let mut residual: Vec<HashMap<usize, Rational>> = vec![HashMap::new(); n];
        let add = |residual: &mut Vec<HashMap<usize, Rational>>, u: usize, v: usize, c: Rational| {
            *residual[u].entry(v).or_insert_with(Rational::zero) += c;
            residual[v].entry(u).or_insert_with(Rational::zero);
        };
        for i in 0..net.buyer_count() {
            if mask & (1 << i) != 0 {
                add(&mut residual, s, net.buyer_id(i), net.budgets()[i].clone());
            }
        }
        for &(i, j) in net.edges() {
            add(&mut residual, net.buyer_id(i), net.good_id(j), self.surrogate.clone());
        }
        for j in 0..net.good_count() {
            add(&mut residual, net.good_id(j), t, net.prices()[j].clone());
        }

        let mut total = Rational::zero();
        loop {
            // BFS for an augmenting path.
            let mut parent: Vec<Option<usize>> = vec![None; n];
            parent[s] = Some(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                let mut next: Vec<usize> = residual[u]
                    .iter()
                    .filter(|(_, c)| c.is_positive())
                    .map(|(v, _)| *v)
                    .collect();
                next.sort_unstable();
                for v in next {
                    if parent[v].is_none() {
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                }
            }
            if parent[t].is_none() {
                return total;
            }
            let mut bottleneck: Option<Rational> = None;
            let mut v = t;
            while v != s {
                let u = parent[v].unwrap();
                let c = residual[u][&v].clone();
                bottleneck = Some(match bottleneck {
                    None => c,
                    Some(b) => b.min(c),
                });
                v = u;
            }
            let push = bottleneck.unwrap();
            let mut v = t;
            while v != s {
                let u = parent[v].unwrap();
                *residual[u].get_mut(&v).unwrap() -= &push;
                *residual[v].get_mut(&u).unwrap() += &push;
                v = u;
            }
            total += push;
        }
    }
}
