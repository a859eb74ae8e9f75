//! Flow-network primitives: capacities, vertices, arcs, flows and cuts.

use crate::rational::{format_rational, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Arc capacity: a nonnegative rational or unbounded.
///
/// `Infinite` compares greater than every finite value. Arithmetic with
/// `Infinite` is restricted to comparisons and sums whose result is again
/// `Infinite`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Capacity {
    Finite(Rational),
    Infinite,
}

impl Capacity {
    pub fn zero() -> Self {
        Capacity::Finite(Rational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Capacity::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Capacity::Finite(r) => Some(r),
            Capacity::Infinite => None,
        }
    }

    /// Finite value or panic; callers use this only where infinity has been
    /// ruled out structurally.
    pub fn expect_finite(&self, what: &str) -> &Rational {
        self.finite().unwrap_or_else(|| panic!("infinite capacity in {what}"))
    }
}

impl PartialOrd for Capacity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Capacity {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Capacity::Infinite, Capacity::Infinite) => Ordering::Equal,
            (Capacity::Infinite, Capacity::Finite(_)) => Ordering::Greater,
            (Capacity::Finite(_), Capacity::Infinite) => Ordering::Less,
            (Capacity::Finite(a), Capacity::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Capacity {
    type Output = Capacity;
    fn add(self, rhs: Capacity) -> Capacity {
        match (self, rhs) {
            (Capacity::Finite(a), Capacity::Finite(b)) => Capacity::Finite(a + b),
            _ => Capacity::Infinite,
        }
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Finite(r) => write!(f, "{}", format_rational(r)),
            Capacity::Infinite => write!(f, "inf"),
        }
    }
}

/// Role of a vertex in an equality-style network, kept for reporting.
/// Buyer and good indices are 0-based internally, 1-based in all text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Source,
    Buyer(usize),
    Good(usize),
    Sink,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Source => write!(f, "s"),
            Vertex::Sink => write!(f, "t"),
            Vertex::Buyer(i) => write!(f, "b{}", i + 1),
            Vertex::Good(j) => write!(f, "c{}", j + 1),
        }
    }
}

/// A directed capacitated arc between dense vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: Capacity,
}

/// An s-t network with a canonical (sorted) arc order so that runs are
/// deterministic regardless of input edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    roles: Vec<Vertex>,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    /// Builds a network from vertex roles and arcs. Arcs are sorted into
    /// canonical order; the source must have no incoming arcs and the sink
    /// no outgoing ones.
    pub fn new(roles: Vec<Vertex>, source: usize, sink: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_by_key(|a| (a.from, a.to));
        for arc in &arcs {
            debug_assert!(arc.from < roles.len() && arc.to < roles.len());
            debug_assert!(arc.to != source, "source has an incoming arc");
            debug_assert!(arc.from != sink, "sink has an outgoing arc");
            if let Capacity::Finite(c) = &arc.capacity {
                debug_assert!(!c.is_negative(), "negative arc capacity");
            }
        }
        FlowNetwork { roles, source, sink, arcs }
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn role(&self, v: usize) -> Vertex {
        self.roles[v]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Index of the arc `from -> to` in canonical order, if present.
    pub fn arc_index(&self, from: usize, to: usize) -> Option<usize> {
        self.arcs
            .binary_search_by_key(&(from, to), |a| (a.from, a.to))
            .ok()
    }

    /// Dense id of the vertex with the given role, if present.
    pub fn vertex_id(&self, role: Vertex) -> Option<usize> {
        self.roles.iter().position(|r| *r == role)
    }
}

/// A feasible-candidate flow: one amount per canonical arc plus the value
/// (net outflow of the source) it claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    amounts: Vec<Rational>,
    value: Rational,
}

impl Flow {
    pub fn new(amounts: Vec<Rational>, value: Rational) -> Self {
        Flow { amounts, value }
    }

    /// The all-zero flow on `net`.
    pub fn zero(net: &FlowNetwork) -> Self {
        Flow {
            amounts: vec![Rational::zero(); net.arcs().len()],
            value: Rational::zero(),
        }
    }

    pub fn amounts(&self) -> &[Rational] {
        &self.amounts
    }

    pub fn amount(&self, arc: usize) -> &Rational {
        &self.amounts[arc]
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Flow on the arc `from -> to`, or zero when the arc is absent.
    pub fn amount_on(&self, net: &FlowNetwork, from: usize, to: usize) -> Rational {
        net.arc_index(from, to)
            .map(|i| self.amounts[i].clone())
            .unwrap_or_else(Rational::zero)
    }
}

/// An s-t cut described by its source side, together with its capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    in_source: Vec<bool>,
    capacity: Capacity,
}

impl Cut {
    /// Builds a cut from a source-side membership vector, computing the
    /// crossing capacity. The source must be inside and the sink outside.
    pub fn from_source_side(net: &FlowNetwork, in_source: Vec<bool>) -> Self {
        assert_eq!(in_source.len(), net.vertex_count());
        assert!(in_source[net.source()], "source not on the source side");
        assert!(!in_source[net.sink()], "sink on the source side");
        let mut capacity = Capacity::zero();
        for arc in net.arcs() {
            if in_source[arc.from] && !in_source[arc.to] {
                capacity = capacity + arc.capacity.clone();
            }
        }
        Cut { in_source, capacity }
    }

    pub fn capacity(&self) -> &Capacity {
        &self.capacity
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_source[v]
    }

    /// The source-side membership vector; equality of two cuts as
    /// partitions is equality of these vectors.
    pub fn source_side(&self) -> &[bool] {
        &self.in_source
    }

    pub fn same_partition(&self, other: &Cut) -> bool {
        self.in_source == other.in_source
    }

    /// True when every source-side vertex of `self` is also on the source
    /// side of `other`.
    pub fn source_subset_of(&self, other: &Cut) -> bool {
        self.in_source
            .iter()
            .zip(other.in_source.iter())
            .all(|(a, b)| !*a || *b)
    }

    /// Source-side vertices in role form, in id order.
    pub fn source_vertices(&self, net: &FlowNetwork) -> Vec<Vertex> {
        (0..net.vertex_count())
            .filter(|v| self.in_source[*v])
            .map(|v| net.role(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn capacity_ordering_puts_infinite_on_top() {
        assert!(Capacity::Infinite > Capacity::Finite(rat(1_000_000)));
        assert!(Capacity::Finite(rat(2)) > Capacity::Finite(rat(1)));
        assert_eq!(Capacity::Infinite.cmp(&Capacity::Infinite), Ordering::Equal);
    }

    #[test]
    fn capacity_addition_saturates() {
        let sum = Capacity::Finite(rat(1)) + Capacity::Infinite;
        assert!(sum.is_infinite());
        let sum = Capacity::Finite(rat(1)) + Capacity::Finite(rat(2));
        assert_eq!(sum, Capacity::Finite(rat(3)));
    }

    #[test]
    fn vertex_display_is_one_based() {
        assert_eq!(Vertex::Buyer(0).to_string(), "b1");
        assert_eq!(Vertex::Good(2).to_string(), "c3");
        assert_eq!(Vertex::Source.to_string(), "s");
        assert_eq!(Vertex::Sink.to_string(), "t");
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn check<T: Send + Sync>() {}
        check::<Capacity>();
        check::<FlowNetwork>();
        check::<Flow>();
        check::<Cut>();
        check::<crate::net::EqualityNetwork>();
        check::<crate::parametric::BreakpointProfile>();
        check::<crate::balanced::BalancedFlowResult>();
    }
}
