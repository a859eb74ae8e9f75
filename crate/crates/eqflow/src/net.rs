//! Equality networks and the `eqnet` text format.
//!
//! An equality network has buyers with budgets on the source side, goods
//! with prices on the sink side, and unbounded buyer-to-good edges. Budgets
//! and prices are exact rationals; buyer and good counts may differ.

use crate::flow::{Arc, Capacity, Flow, FlowNetwork, Vertex};
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Errors raised while parsing or validating an equality network.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EqnetError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("non-positive budget for buyer {buyer}")]
    NonPositiveBudget { buyer: usize },
    #[error("non-positive price for good {good}")]
    NonPositivePrice { good: usize },
    #[error("isolated buyer {buyer}")]
    IsolatedBuyer { buyer: usize },
    #[error("isolated good {good}")]
    IsolatedGood { good: usize },
    #[error("duplicate edge ({buyer}, {good})")]
    DuplicateEdge { buyer: usize, good: usize },
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
}

/// A validated equality network. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityNetwork {
    budgets: Vec<Rational>,
    prices: Vec<Rational>,
    edges: Vec<(usize, usize)>,
}

impl EqualityNetwork {
    /// Validates and builds a network. Edges are 0-based `(buyer, good)`
    /// pairs and end up sorted and duplicate-free.
    pub fn new(
        budgets: Vec<Rational>,
        prices: Vec<Rational>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self, EqnetError> {
        if budgets.is_empty() || prices.is_empty() {
            return Err(EqnetError::Syntax {
                line: 0,
                column: 0,
                message: "at least one buyer and one good required".into(),
            });
        }
        for (i, b) in budgets.iter().enumerate() {
            if !b.is_positive() {
                return Err(EqnetError::NonPositiveBudget { buyer: i + 1 });
            }
        }
        for (j, p) in prices.iter().enumerate() {
            if !p.is_positive() {
                return Err(EqnetError::NonPositivePrice { good: j + 1 });
            }
        }
        for &(i, j) in &edges {
            if i >= budgets.len() {
                return Err(EqnetError::IndexOutOfRange {
                    what: "buyer",
                    index: i + 1,
                    max: budgets.len(),
                });
            }
            if j >= prices.len() {
                return Err(EqnetError::IndexOutOfRange {
                    what: "good",
                    index: j + 1,
                    max: prices.len(),
                });
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(EqnetError::DuplicateEdge {
                    buyer: w[0].0 + 1,
                    good: w[0].1 + 1,
                });
            }
        }
        let mut buyer_seen = vec![false; budgets.len()];
        let mut good_seen = vec![false; prices.len()];
        for &(i, j) in &edges {
            buyer_seen[i] = true;
            good_seen[j] = true;
        }
        if let Some(i) = buyer_seen.iter().position(|s| !s) {
            return Err(EqnetError::IsolatedBuyer { buyer: i + 1 });
        }
        if let Some(j) = good_seen.iter().position(|s| !s) {
            return Err(EqnetError::IsolatedGood { good: j + 1 });
        }
        Ok(EqualityNetwork { budgets, prices, edges })
    }

    pub fn buyer_count(&self) -> usize {
        self.budgets.len()
    }

    pub fn good_count(&self) -> usize {
        self.prices.len()
    }

    pub fn budgets(&self) -> &[Rational] {
        &self.budgets
    }

    pub fn prices(&self) -> &[Rational] {
        &self.prices
    }

    /// Sorted, 0-based `(buyer, good)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn max_budget(&self) -> Rational {
        self.budgets.iter().max().cloned().expect("nonempty")
    }

    /// Dense vertex layout shared by every network derived from this one:
    /// `s`, then buyers, then goods, then `t`.
    pub fn vertex_roles(&self) -> Vec<Vertex> {
        let mut roles = Vec::with_capacity(self.buyer_count() + self.good_count() + 2);
        roles.push(Vertex::Source);
        roles.extend((0..self.buyer_count()).map(Vertex::Buyer));
        roles.extend((0..self.good_count()).map(Vertex::Good));
        roles.push(Vertex::Sink);
        roles
    }

    pub fn source_id(&self) -> usize {
        0
    }

    pub fn buyer_id(&self, i: usize) -> usize {
        1 + i
    }

    pub fn good_id(&self, j: usize) -> usize {
        1 + self.buyer_count() + j
    }

    pub fn sink_id(&self) -> usize {
        1 + self.buyer_count() + self.good_count()
    }

    /// The plain flow network: `s -> b_i` with capacity `e_i`, `c_j -> t`
    /// with capacity `p_j`, and an unbounded arc per equality edge.
    pub fn to_flow_network(&self) -> FlowNetwork {
        self.flow_network_with_source_caps(|i| Capacity::Finite(self.budgets[i].clone()))
    }

    /// Same layout with substituted source-arc capacities; used by the
    /// parametric instantiation and the reduced network.
    pub fn flow_network_with_source_caps<F>(&self, cap: F) -> FlowNetwork
    where
        F: Fn(usize) -> Capacity,
    {
        let mut arcs = Vec::with_capacity(self.buyer_count() + self.good_count() + self.edges.len());
        for i in 0..self.buyer_count() {
            arcs.push(Arc {
                from: self.source_id(),
                to: self.buyer_id(i),
                capacity: cap(i),
            });
        }
        for &(i, j) in &self.edges {
            arcs.push(Arc {
                from: self.buyer_id(i),
                to: self.good_id(j),
                capacity: Capacity::Infinite,
            });
        }
        for j in 0..self.good_count() {
            arcs.push(Arc {
                from: self.good_id(j),
                to: self.sink_id(),
                capacity: Capacity::Finite(self.prices[j].clone()),
            });
        }
        FlowNetwork::new(self.vertex_roles(), self.source_id(), self.sink_id(), arcs)
    }
}

/// Parses the line-oriented `eqnet 1` format. `#` starts a comment, tokens
/// are whitespace-separated, indices are 1-based.
pub fn parse_eqnet(text: &str) -> Result<EqualityNetwork, EqnetError> {
    let syntax = |line: usize, column: usize, message: &str| EqnetError::Syntax {
        line,
        column,
        message: message.to_string(),
    };

    let mut buyer_count: Option<usize> = None;
    let mut good_count: Option<usize> = None;
    let mut budgets: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut prices: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut header_seen = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = content
            .split_whitespace()
            .map(|tok| {
                let col = tok.as_ptr() as usize - content.as_ptr() as usize + 1;
                (col, tok)
            })
            .collect();
        if tokens.is_empty() {
            continue;
        }
        let (col0, keyword) = tokens[0];
        let args = &tokens[1..];

        let want = |n: usize| -> Result<(), EqnetError> {
            if args.len() != n {
                Err(syntax(line_no, col0, &format!("`{keyword}` expects {n} argument(s)")))
            } else {
                Ok(())
            }
        };
        let parse_count = |&(col, tok): &(usize, &str)| -> Result<usize, EqnetError> {
            tok.parse::<usize>()
                .ok()
                .filter(|n| *n >= 1)
                .ok_or_else(|| syntax(line_no, col, "expected a positive integer"))
        };
        let parse_rat = |&(col, tok): &(usize, &str)| -> Result<Rational, EqnetError> {
            parse_rational(tok).map_err(|e| syntax(line_no, col, &e.to_string()))
        };

        if !header_seen {
            if keyword != "eqnet" {
                return Err(syntax(line_no, col0, "expected `eqnet 1` header"));
            }
            want(1)?;
            if args[0].1 != "1" {
                return Err(syntax(line_no, args[0].0, "unsupported eqnet version"));
            }
            header_seen = true;
            continue;
        }

        match keyword {
            "buyers" => {
                want(1)?;
                if buyer_count.is_some() {
                    return Err(syntax(line_no, col0, "duplicate `buyers` line"));
                }
                buyer_count = Some(parse_count(&args[0])?);
            }
            "goods" => {
                want(1)?;
                if good_count.is_some() {
                    return Err(syntax(line_no, col0, "duplicate `goods` line"));
                }
                good_count = Some(parse_count(&args[0])?);
            }
            "budget" => {
                want(2)?;
                let n = buyer_count
                    .ok_or_else(|| syntax(line_no, col0, "`budget` before `buyers`"))?;
                let i = parse_count(&args[0])?;
                if i > n {
                    return Err(EqnetError::IndexOutOfRange { what: "buyer", index: i, max: n });
                }
                let value = parse_rat(&args[1])?;
                if budgets.insert(i - 1, value).is_some() {
                    return Err(syntax(line_no, col0, &format!("duplicate budget for buyer {i}")));
                }
            }
            "price" => {
                want(2)?;
                let k = good_count
                    .ok_or_else(|| syntax(line_no, col0, "`price` before `goods`"))?;
                let j = parse_count(&args[0])?;
                if j > k {
                    return Err(EqnetError::IndexOutOfRange { what: "good", index: j, max: k });
                }
                let value = parse_rat(&args[1])?;
                if prices.insert(j - 1, value).is_some() {
                    return Err(syntax(line_no, col0, &format!("duplicate price for good {j}")));
                }
            }
            "edge" => {
                want(2)?;
                let n = buyer_count
                    .ok_or_else(|| syntax(line_no, col0, "`edge` before `buyers`"))?;
                let k = good_count
                    .ok_or_else(|| syntax(line_no, col0, "`edge` before `goods`"))?;
                let i = parse_count(&args[0])?;
                let j = parse_count(&args[1])?;
                if i > n {
                    return Err(EqnetError::IndexOutOfRange { what: "buyer", index: i, max: n });
                }
                if j > k {
                    return Err(EqnetError::IndexOutOfRange { what: "good", index: j, max: k });
                }
                edges.push((i - 1, j - 1));
            }
            _ => return Err(syntax(line_no, col0, &format!("unknown directive `{keyword}`"))),
        }
    }

    if !header_seen {
        return Err(syntax(1, 1, "missing `eqnet 1` header"));
    }
    let n = buyer_count.ok_or_else(|| syntax(1, 1, "missing `buyers` line"))?;
    let k = good_count.ok_or_else(|| syntax(1, 1, "missing `goods` line"))?;
    let mut budget_vec = Vec::with_capacity(n);
    for i in 0..n {
        match budgets.remove(&i) {
            Some(b) => budget_vec.push(b),
            None => return Err(syntax(1, 1, &format!("missing budget for buyer {}", i + 1))),
        }
    }
    let mut price_vec = Vec::with_capacity(k);
    for j in 0..k {
        match prices.remove(&j) {
            Some(p) => price_vec.push(p),
            None => return Err(syntax(1, 1, &format!("missing price for good {}", j + 1))),
        }
    }
    EqualityNetwork::new(budget_vec, price_vec, edges)
}

/// Canonical text form; `parse_eqnet(serialize_eqnet(n))` reproduces `n`
/// exactly.
pub fn serialize_eqnet(net: &EqualityNetwork) -> String {
    let mut out = String::new();
    out.push_str("eqnet 1\n");
    out.push_str(&format!("buyers {}\n", net.buyer_count()));
    out.push_str(&format!("goods {}\n", net.good_count()));
    for (i, b) in net.budgets().iter().enumerate() {
        out.push_str(&format!("budget {} {}\n", i + 1, format_rational(b)));
    }
    for (j, p) in net.prices().iter().enumerate() {
        out.push_str(&format!("price {} {}\n", j + 1, format_rational(p)));
    }
    for &(i, j) in net.edges() {
        out.push_str(&format!("edge {} {}\n", i + 1, j + 1));
    }
    out
}

/// Parses a flow file (`flow <buyer> <good> <rational>` lines, omitted
/// pairs zero) into a flow on `net.to_flow_network()`. Source- and
/// sink-arc amounts are filled in by conservation.
pub fn parse_flow_file(net: &EqualityNetwork, text: &str) -> Result<Flow, EqnetError> {
    let syntax = |line: usize, column: usize, message: &str| EqnetError::Syntax {
        line,
        column,
        message: message.to_string(),
    };
    let fnet = net.to_flow_network();
    let mut amounts = vec![Rational::zero(); fnet.arcs().len()];
    let mut seen: Vec<(usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens[0] != "flow" || tokens.len() != 4 {
            return Err(syntax(line_no, 1, "expected `flow <buyer> <good> <rational>`"));
        }
        let i: usize = tokens[1]
            .parse()
            .ok()
            .filter(|n: &usize| *n >= 1)
            .ok_or_else(|| syntax(line_no, 1, "bad buyer index"))?;
        let j: usize = tokens[2]
            .parse()
            .ok()
            .filter(|n: &usize| *n >= 1)
            .ok_or_else(|| syntax(line_no, 1, "bad good index"))?;
        if i > net.buyer_count() {
            return Err(EqnetError::IndexOutOfRange { what: "buyer", index: i, max: net.buyer_count() });
        }
        if j > net.good_count() {
            return Err(EqnetError::IndexOutOfRange { what: "good", index: j, max: net.good_count() });
        }
        let amount = parse_rational(tokens[3]).map_err(|e| syntax(line_no, 1, &e.to_string()))?;
        let arc = fnet
            .arc_index(net.buyer_id(i - 1), net.good_id(j - 1))
            .ok_or_else(|| syntax(line_no, 1, &format!("no edge ({i}, {j}) in the network")))?;
        if seen.contains(&(i, j)) {
            return Err(syntax(line_no, 1, &format!("duplicate flow line for ({i}, {j})")));
        }
        seen.push((i, j));
        amounts[arc] = amount;
    }

    // Source and sink arcs by conservation.
    for b in 0..net.buyer_count() {
        let mut total = Rational::zero();
        for &(i, j) in net.edges() {
            if i == b {
                let arc = fnet.arc_index(net.buyer_id(i), net.good_id(j)).unwrap();
                total += &amounts[arc];
            }
        }
        let arc = fnet.arc_index(net.source_id(), net.buyer_id(b)).unwrap();
        amounts[arc] = total;
    }
    let mut value = Rational::zero();
    for g in 0..net.good_count() {
        let mut total = Rational::zero();
        for &(i, j) in net.edges() {
            if j == g {
                let arc = fnet.arc_index(net.buyer_id(i), net.good_id(j)).unwrap();
                total += &amounts[arc];
            }
        }
        let arc = fnet.arc_index(net.good_id(g), net.sink_id()).unwrap();
        amounts[arc] = total.clone();
        value += total;
    }
    Ok(Flow::new(amounts, value))
}

/// Writes the buyer-to-good amounts of `flow` in flow-file form, skipping
/// zero entries.
pub fn format_flow_file(net: &EqualityNetwork, flow: &Flow) -> String {
    let fnet = net.to_flow_network();
    let mut out = String::new();
    for &(i, j) in net.edges() {
        let arc = fnet.arc_index(net.buyer_id(i), net.good_id(j)).unwrap();
        let amount = flow.amount(arc);
        if !amount.is_zero() {
            out.push_str(&format!("flow {} {} {}\n", i + 1, j + 1, format_rational(amount)));
        }
    }
    out
}

/// Per-buyer surpluses `e_i - flow(s -> b_i)` under a feasible flow.
pub fn surpluses(net: &EqualityNetwork, flow: &Flow) -> Result<Vec<Rational>, FlowRejected> {
    let fnet = net.to_flow_network();
    let report = crate::maxflow::check_flow(&fnet, flow);
    if !report.feasible {
        return Err(FlowRejected {
            detail: report.first_violation().unwrap_or_else(|| "infeasible flow".into()),
        });
    }
    Ok((0..net.buyer_count())
        .map(|i| {
            let arc = fnet.arc_index(net.source_id(), net.buyer_id(i)).unwrap();
            &net.budgets()[i] - flow.amount(arc)
        })
        .collect())
}

/// Error for flows rejected by feasibility checking.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("infeasible flow: {detail}")]
pub struct FlowRejected {
    pub detail: String,
}

/// Squared two-norm of a surplus vector (kept squared to stay rational).
pub fn squared_surplus_norm(surpluses: &[Rational]) -> Rational {
    surpluses.iter().map(|r| r * r).sum()
}

/// Small hand-checkable networks shared across tests, examples and docs.
pub mod fixtures {
    use super::EqualityNetwork;
    use crate::rational::rat;

    /// 1 buyer, 1 good, e=(2), p=(2), edge (1,1).
    pub fn fix_a() -> EqualityNetwork {
        EqualityNetwork::new(vec![rat(2)], vec![rat(2)], vec![(0, 0)]).unwrap()
    }

    /// 2 buyers, 2 goods, e=(3,3), p=(2,2), edges (1,1),(2,1),(2,2).
    pub fn fix_b() -> EqualityNetwork {
        EqualityNetwork::new(
            vec![rat(3), rat(3)],
            vec![rat(2), rat(2)],
            vec![(0, 0), (1, 0), (1, 1)],
        )
        .unwrap()
    }

    /// 2 buyers, 2 goods, e=(5,1), p=(2,2), edges (1,1),(2,2).
    pub fn fix_c() -> EqualityNetwork {
        EqualityNetwork::new(
            vec![rat(5), rat(1)],
            vec![rat(2), rat(2)],
            vec![(0, 0), (1, 1)],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::flow::Capacity;
    use crate::rational::{rat, ratio};

    #[test]
    fn parse_fix_b_text() {
        let text = "eqnet 1\nbuyers 2\ngoods 2\nbudget 1 3\nbudget 2 3\nprice 1 2\nprice 2 2\nedge 1 1\nedge 2 1\nedge 2 2\n";
        let net = parse_eqnet(text).unwrap();
        assert_eq!(net, fix_b());
        assert_eq!(net.buyer_count(), 2);
        assert_eq!(net.good_count(), 2);
        assert_eq!(net.edges().len(), 3);
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let text = "# header comment\neqnet 1\n\nbuyers 1 # one buyer\ngoods 1\nbudget 1 2\nprice 1 2\nedge 1 1\n";
        assert_eq!(parse_eqnet(text).unwrap(), fix_a());
    }

    #[test]
    fn parse_rejects_non_positive_price() {
        let text = "eqnet 1\nbuyers 2\ngoods 2\nbudget 1 3\nbudget 2 3\nprice 1 2\nprice 2 0\nedge 1 1\nedge 2 1\nedge 2 2\n";
        assert_eq!(parse_eqnet(text).unwrap_err(), EqnetError::NonPositivePrice { good: 2 });
    }

    #[test]
    fn parse_rejects_isolated_buyer() {
        let text = "eqnet 1\nbuyers 2\ngoods 2\nbudget 1 3\nbudget 2 3\nprice 1 2\nprice 2 2\nedge 1 1\n";
        assert_eq!(parse_eqnet(text).unwrap_err(), EqnetError::IsolatedBuyer { buyer: 2 });
    }

    #[test]
    fn parse_reports_remaining_error_kinds() {
        let dup = "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 2\nprice 1 2\nedge 1 1\nedge 1 1\n";
        assert_eq!(parse_eqnet(dup).unwrap_err(), EqnetError::DuplicateEdge { buyer: 1, good: 1 });
        let oob = "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 2\nprice 1 2\nedge 1 2\n";
        assert!(matches!(parse_eqnet(oob).unwrap_err(), EqnetError::IndexOutOfRange { .. }));
        let bad = "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 two\nprice 1 2\nedge 1 1\n";
        match parse_eqnet(bad).unwrap_err() {
            EqnetError::Syntax { line, column, .. } => {
                assert_eq!(line, 4);
                assert_eq!(column, 10);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn serialize_fix_a_is_six_lines() {
        let text = serialize_eqnet(&fix_a());
        assert_eq!(text.lines().count(), 6);
        assert_eq!(text, "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 2\nprice 1 2\nedge 1 1\n");
    }

    #[test]
    fn round_trips_reproduce_the_network() {
        for net in [fix_a(), fix_b(), fix_c()] {
            assert_eq!(parse_eqnet(&serialize_eqnet(&net)).unwrap(), net);
        }
        // Integer budgets written as plain integers.
        let text = serialize_eqnet(&fix_c());
        assert!(text.contains("budget 1 5"));
        assert!(text.contains("budget 2 1"));
    }

    #[test]
    fn to_flow_network_matches_fixture_layouts() {
        let a = fix_a().to_flow_network();
        assert_eq!(a.vertex_count(), 4);
        assert_eq!(a.arcs().len(), 3);
        assert_eq!(a.arcs()[0].capacity, Capacity::Finite(rat(2)));
        assert_eq!(a.arcs()[1].capacity, Capacity::Infinite);
        assert_eq!(a.arcs()[2].capacity, Capacity::Finite(rat(2)));

        let b = fix_b().to_flow_network();
        assert_eq!(b.vertex_count(), 6);
        assert_eq!(b.arcs().len(), 7);
        assert_eq!(b.arcs().iter().filter(|a| a.capacity.is_infinite()).count(), 3);

        let c = fix_c().to_flow_network();
        let net = fix_c();
        let src_caps: Vec<_> = (0..2)
            .map(|i| c.arcs()[c.arc_index(net.source_id(), net.buyer_id(i)).unwrap()].capacity.clone())
            .collect();
        assert_eq!(src_caps, vec![Capacity::Finite(rat(5)), Capacity::Finite(rat(1))]);
        assert_eq!(c.arcs().iter().filter(|a| a.capacity.is_infinite()).count(), 2);
    }

    #[test]
    fn arc_count_is_buyers_plus_goods_plus_edges() {
        for net in [fix_a(), fix_b(), fix_c()] {
            assert_eq!(
                net.to_flow_network().arcs().len(),
                net.buyer_count() + net.good_count() + net.edges().len()
            );
        }
    }

    #[test]
    fn surpluses_of_fixture_flows() {
        let net = fix_b();
        let text = "flow 1 1 2\nflow 2 2 2\n";
        let flow = parse_flow_file(&net, text).unwrap();
        assert_eq!(surpluses(&net, &flow).unwrap(), vec![rat(1), rat(1)]);

        let net = fix_c();
        let flow = parse_flow_file(&net, "flow 1 1 2\nflow 2 2 1\n").unwrap();
        assert_eq!(surpluses(&net, &flow).unwrap(), vec![rat(3), rat(0)]);

        // Zero flow leaves surpluses equal to budgets.
        let net = fix_b();
        let zero = Flow::zero(&net.to_flow_network());
        assert_eq!(surpluses(&net, &zero).unwrap(), net.budgets().to_vec());
    }

    #[test]
    fn surpluses_reject_infeasible_flows() {
        let net = fix_a();
        let flow = parse_flow_file(&net, "flow 1 1 3\n").unwrap();
        assert!(surpluses(&net, &flow).is_err());
    }

    #[test]
    fn squared_norm_examples() {
        assert_eq!(squared_surplus_norm(&[rat(1), rat(1)]), rat(2));
        assert_eq!(squared_surplus_norm(&[rat(3), rat(0)]), rat(9));
        // Even split beats a lopsided one with the same total.
        assert!(squared_surplus_norm(&[rat(2), rat(2)]) < squared_surplus_norm(&[rat(3), rat(1)]));
        assert_eq!(squared_surplus_norm(&[ratio(1, 2)]), ratio(1, 4));
    }

    #[test]
    fn flow_file_round_trip() {
        let net = fix_b();
        let flow = parse_flow_file(&net, "flow 1 1 2\nflow 2 2 2\n").unwrap();
        let text = format_flow_file(&net, &flow);
        assert_eq!(parse_flow_file(&net, &text).unwrap(), flow);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn round_trip_holds_on_random_networks(
            seed in 0u64..100_000,
            buyers in 1usize..7,
            goods in 1usize..7,
            extra in 0usize..8,
        ) {
            let most = buyers.max(goods);
            let edges = (most + extra).min(buyers * goods);
            let net = crate::gen::gen_random(buyers, goods, edges, seed, (1, 12), (1, 12)).unwrap();
            proptest::prop_assert_eq!(parse_eqnet(&serialize_eqnet(&net)).unwrap(), net.clone());
            proptest::prop_assert_eq!(
                net.to_flow_network().arcs().len(),
                net.buyer_count() + net.good_count() + net.edges().len()
            );
        }
    }
}
