//! JSON run reports. Every rational is serialized as the string `a` or
//! `a/b`, never as floating point.

use crate::balanced::{BalancedFlowResult, BalancednessCertificate, Blocks};
use crate::flow::{Flow, Vertex};
use crate::net::EqualityNetwork;
use crate::parametric::BreakpointProfile;
use crate::rational::{format_rational, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunReport {
    pub instance: InstanceInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surpluses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakpoints: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub move_lambda: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flow: Option<Vec<FlowEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut_source_side: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub calls: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceInfo {
    pub buyers: usize,
    pub goods: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BlockReport {
    pub surplus: String,
    /// 1-based buyer indices.
    pub buyers: Vec<usize>,
    /// 1-based good indices.
    pub goods: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FlowEntry {
    pub buyer: usize,
    pub good: usize,
    pub amount: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub balanced: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl RunReport {
    pub fn new(net: &EqualityNetwork) -> Self {
        RunReport {
            instance: InstanceInfo {
                buyers: net.buyer_count(),
                goods: net.good_count(),
                edges: net.edges().len(),
                seed: None,
            },
            value: None,
            surpluses: None,
            blocks: None,
            breakpoints: None,
            move_lambda: None,
            flow: None,
            cut_source_side: None,
            calls: None,
            millis: None,
            verification: None,
        }
    }

    pub fn with_balanced_result(mut self, net: &EqualityNetwork, result: &BalancedFlowResult) -> Self {
        self.value = Some(format_rational(&result.value));
        self.surpluses = Some(rationals(&result.surpluses));
        self.blocks = Some(blocks_report(&result.blocks));
        self.breakpoints = Some(rationals(&result.profile.breakpoints));
        self.move_lambda = Some(move_map(&result.profile));
        self.flow = Some(flow_entries(net, &result.flow));
        self.calls = Some(result.maxflow_calls);
        self
    }

    pub fn with_profile(mut self, profile: &BreakpointProfile) -> Self {
        self.breakpoints = Some(rationals(&profile.breakpoints));
        self.move_lambda = Some(move_map(profile));
        self.calls = Some(profile.maxflow_calls);
        self
    }

    pub fn with_verification(mut self, certificate: &BalancednessCertificate) -> Self {
        self.verification = Some(VerificationReport {
            balanced: certificate.is_balanced,
            checks: certificate
                .checks
                .iter()
                .map(|c| CheckReport {
                    name: c.name.to_string(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn move_map(profile: &BreakpointProfile) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for (i, m) in profile.buyer_moves.iter().enumerate() {
        map.insert(Vertex::Buyer(i).to_string(), format_rational(m));
    }
    for (j, m) in profile.good_moves.iter().enumerate() {
        map.insert(Vertex::Good(j).to_string(), format_rational(m));
    }
    map
}

fn blocks_report(blocks: &Blocks) -> Vec<BlockReport> {
    blocks
        .blocks
        .iter()
        .map(|b| BlockReport {
            surplus: format_rational(&b.surplus),
            buyers: b.buyers.iter().map(|i| i + 1).collect(),
            goods: b.goods.iter().map(|j| j + 1).collect(),
        })
        .collect()
}

pub fn flow_entries(net: &EqualityNetwork, flow: &Flow) -> Vec<FlowEntry> {
    let fnet = net.to_flow_network();
    net.edges()
        .iter()
        .filter_map(|&(i, j)| {
            let arc = fnet.arc_index(net.buyer_id(i), net.good_id(j)).unwrap();
            let amount = flow.amount(arc);
            if amount == &Rational::from_integer(0.into()) {
                None
            } else {
                Some(FlowEntry {
                    buyer: i + 1,
                    good: j + 1,
                    amount: format_rational(amount),
                })
            }
        })
        .collect()
}
