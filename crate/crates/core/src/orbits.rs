//! Bounded orbit exploration under the extended group and enumeration of
//! orbit representatives for a fixed Markov constant.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::classify::{descend, Verdict};
use crate::triple::{decimal, GroupWord, Letter, Triple, Vertex};

/// Limits for a breadth-first orbit walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBounds {
    /// Nodes with an entry of larger absolute value are not visited.
    pub max_abs: Option<BigInt>,
    pub max_nodes: usize,
    /// Layers beyond this depth are not expanded.
    pub max_depth: Option<usize>,
}

impl OrbitBounds {
    pub fn nodes(max_nodes: usize) -> OrbitBounds {
        OrbitBounds {
            max_abs: None,
            max_nodes,
            max_depth: None,
        }
    }

    pub fn boxed(max_abs: impl Into<BigInt>, max_nodes: usize) -> OrbitBounds {
        OrbitBounds {
            max_abs: Some(max_abs.into()),
            max_nodes,
            max_depth: None,
        }
    }

    pub fn with_depth(mut self, depth: usize) -> OrbitBounds {
        self.max_depth = Some(depth);
        self
    }

    fn admits(&self, t: &Triple) -> bool {
        match &self.max_abs {
            Some(bound) => &t.max_abs() <= bound,
            None => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub letter: Letter,
}

/// The part of an orbit reached by a bounded breadth-first walk.
///
/// Nodes are stored layer by layer, each layer sorted, so the node order is
/// a function of the seed and the bounds alone. Edges are undirected (every
/// generator is an involution) and stored once with `from < to`; generators
/// fixing a node contribute no edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGraph {
    pub nodes: Vec<Triple>,
    pub edges: Vec<OrbitEdge>,
    /// Set when some bound cut the walk short, so the orbit may be larger.
    pub truncated: bool,
}

impl OrbitGraph {
    pub fn seed(&self) -> &Triple {
        &self.nodes[0]
    }

    /// True when the walk ended because no unvisited neighbours were left.
    pub fn is_closed(&self) -> bool {
        !self.truncated
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.nodes.contains(t)
    }
}

pub fn enumerate_orbit(seed: &Triple, bounds: &OrbitBounds) -> OrbitGraph {
    let mut index: HashMap<Triple, usize> = HashMap::new();
    let mut nodes = vec![seed.clone()];
    index.insert(seed.clone(), 0);
    let mut edges: BTreeSet<OrbitEdge> = BTreeSet::new();
    let mut truncated = false;
    let mut layer = vec![0usize];
    let mut depth = 0usize;

    while !layer.is_empty() {
        if bounds.max_depth.is_some_and(|d| depth >= d) {
            truncated = true;
            break;
        }
        let mut discovered: BTreeMap<Triple, Vec<(usize, Letter)>> = BTreeMap::new();
        for &i in &layer {
            let here = nodes[i].clone();
            for letter in Letter::ALL {
                let there = letter.apply(&here);
                if there == here {
                    continue;
                }
                if let Some(&j) = index.get(&there) {
                    edges.insert(edge(i, j, letter));
                } else if bounds.admits(&there) {
                    discovered.entry(there).or_default().push((i, letter));
                } else {
                    truncated = true;
                }
            }
        }

        let mut next = Vec::with_capacity(discovered.len());
        for (t, parents) in discovered {
            if nodes.len() >= bounds.max_nodes {
                truncated = true;
                break;
            }
            let j = nodes.len();
            index.insert(t.clone(), j);
            nodes.push(t);
            for (i, letter) in parents {
                edges.insert(edge(i, j, letter));
            }
            next.push(j);
        }
        layer = next;
        depth += 1;
    }

    OrbitGraph {
        nodes,
        edges: edges.into_iter().collect(),
        truncated,
    }
}

fn edge(a: usize, b: usize, letter: Letter) -> OrbitEdge {
    OrbitEdge {
        from: a.min(b),
        to: a.max(b),
        letter,
    }
}

/// Whether an orbit is finite, as far as a bounded search can tell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "finite", content = "bound")]
pub enum Finiteness {
    Yes,
    No,
    /// Neither closed nor certified infinite within this many nodes.
    Unknown(usize),
}

/// Looks for a mutation path on which the largest entry grows strictly three
/// times in a row while all entries stay `>= 2`. Each step mutates the
/// smallest entry other than the one just changed.
///
/// Once a step produces a new strict maximum `v` over entries `p >= m >= 2`,
/// mutating `m` gives `vp - m >= 2v - m > v`, so the walk keeps producing new
/// triples forever and the orbit is infinite.
pub fn increasing_ray(start: &Triple) -> Option<GroupWord> {
    let two = BigInt::from(2);
    let mut t = start.clone();
    let mut word = GroupWord::new();
    let mut last: Option<Vertex> = None;
    for _ in 0..3 {
        if t.min_entry() < &two {
            return None;
        }
        let v = Vertex::ALL
            .into_iter()
            .filter(|&v| Some(v) != last)
            .min_by(|&a, &b| t.get(a).cmp(t.get(b)))
            .expect("at least two candidates");
        let previous_max = t.max_entry().clone();
        t = t.mutate(v);
        if t.get(v) <= &previous_max {
            return None;
        }
        word.push(Letter::mutation(v));
        last = Some(v);
    }
    Some(word)
}

/// Finite if a walk of at most `safety_bound` nodes exhausts the orbit,
/// infinite if some visited node starts an [`increasing_ray`].
pub fn is_finite_orbit(seed: &Triple, safety_bound: usize) -> Finiteness {
    let graph = enumerate_orbit(seed, &OrbitBounds::nodes(safety_bound));
    if graph.is_closed() {
        return Finiteness::Yes;
    }
    if graph.nodes.iter().any(|t| increasing_ray(t).is_some()) {
        return Finiteness::No;
    }
    Finiteness::Unknown(safety_bound)
}

/// Points of `F` with a given Markov constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicRepresentatives {
    Finite(Vec<Triple>),
    /// `C = 4`: the infinite family `(u, u, 2)`, `u >= 2`.
    UUTwoFamily,
}

/// Enumerates the lattice points of `F` on `V(C)`.
///
/// On the slice `F_z` the constant is largest at `(z, z, z)`, where it equals
/// `z^2 (3 - z)`, decreasing in `z`; the scan over `z >= 3` stops once that
/// maximum drops below `C`. For fixed `y, z` the constant is decreasing in
/// `x` on `[y, yz/2]`, so `C(y, y, z) >= C` bounds `y`, and `x` is then the
/// smaller root of `x^2 - yz x + (y^2 + z^2 - C) = 0`. The slice `z = 2` is
/// the line `x = y` with constant 4.
pub fn cyclic_representatives(c: &BigInt) -> CyclicRepresentatives {
    if *c == BigInt::from(4) {
        return CyclicRepresentatives::UUTwoFamily;
    }
    let mut found = Vec::new();
    let mut z = BigInt::from(3);
    loop {
        let z2 = &z * &z;
        if &z2 * (BigInt::from(3) - &z) < *c {
            break;
        }
        // (2 - z) y^2 + z^2 >= C  <=>  y^2 <= (z^2 - C) / (z - 2)
        let y_sq: BigInt = (&z2 - c) / (&z - 2);
        let y_max = y_sq.sqrt();
        let mut y = z.clone();
        while y <= y_max {
            let b = &y * &z;
            let disc: BigInt = &b * &b - 4 * (&y * &y + &z2 - c);
            if !disc.is_negative() {
                let root = disc.sqrt();
                if &root * &root == disc && (&b - &root).is_even() {
                    let x: BigInt = (&b - &root) / 2;
                    if x >= y {
                        found.push(Triple::new(x, y.clone(), z.clone()));
                    }
                }
            }
            y += 1;
        }
        z += 1;
    }
    found.sort();
    CyclicRepresentatives::Finite(found)
}

/// One Γ̄-orbit class among the acyclic solutions of `C(t) = C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcyclicClass {
    /// Preferred candidate: largest `z`, then smallest `x`.
    pub representative: Triple,
    /// Solutions with `x >= y >= 0 >= z` found in this class, sorted.
    pub candidates: Vec<Triple>,
    /// Orbit elements with all entries `>= 0`, sorted descending in each
    /// triple, found by the bounded walks.
    pub nonnegative_members: Vec<Triple>,
    /// True when some walk in this class closed, so the class is the whole
    /// orbit. Otherwise distinct classes may still belong to one orbit.
    pub merge_verified: bool,
}

/// All solutions of `x^2 + y^2 + z^2 - xyz = C` with `x >= y >= 0 >= z`.
///
/// Every term is non-negative there, so each entry is at most `sqrt(C)`;
/// for each `(x, y)` the only admissible `z` is the smaller root of
/// `z^2 - xy z + (x^2 + y^2 - C) = 0`.
pub fn acyclic_candidates(c: &BigInt) -> Vec<Triple> {
    if c.is_negative() {
        return Vec::new();
    }
    let bound = c.sqrt();
    let mut out = Vec::new();
    let mut x = BigInt::zero();
    while x <= bound {
        let mut y = BigInt::zero();
        while y <= x {
            let b = &x * &y;
            let disc: BigInt = &b * &b - 4 * (&x * &x + &y * &y - c);
            if !disc.is_negative() {
                let root = disc.sqrt();
                if &root * &root == disc && (&b - &root).is_even() {
                    let z: BigInt = (&b - &root) / 2;
                    if !z.is_positive() {
                        out.push(Triple::new(x.clone(), y.clone(), z));
                    }
                }
            }
            y += 1;
        }
        x += 1;
    }
    out.sort();
    out
}

/// Groups [`acyclic_candidates`] into orbit classes by bounded walks from
/// each candidate. Classes are sorted by representative.
pub fn acyclic_representatives(c: &BigInt, bounds: &OrbitBounds) -> Vec<AcyclicClass> {
    let candidates = acyclic_candidates(c);
    let n = candidates.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut graphs = Vec::with_capacity(n);

    for (i, cand) in candidates.iter().enumerate() {
        let graph = enumerate_orbit(cand, bounds);
        let members: BTreeSet<&Triple> = graph.nodes.iter().collect();
        for (j, other) in candidates.iter().enumerate() {
            if j != i && members.contains(other) {
                union(&mut parent, i, j);
            }
        }
        graphs.push(graph);
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        classes.entry(root).or_default().push(i);
    }

    let mut out: Vec<AcyclicClass> = classes
        .into_values()
        .map(|members| {
            let cands: Vec<Triple> = members.iter().map(|&i| candidates[i].clone()).collect();
            let nonneg: BTreeSet<Triple> = members
                .iter()
                .flat_map(|&i| graphs[i].nodes.iter())
                .filter(|t| t.is_nonnegative())
                .map(Triple::sorted_descending)
                .collect();
            let representative = cands
                .iter()
                .max_by(|a, b| a.z.cmp(&b.z).then_with(|| b.x.cmp(&a.x)))
                .expect("non-empty class")
                .clone();
            AcyclicClass {
                representative,
                candidates: cands,
                nonnegative_members: nonneg.into_iter().collect(),
                merge_verified: members.iter().any(|&i| graphs[i].is_closed()),
            }
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut root = i;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = i;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// One line of the JSON-lines orbit stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub seed: Triple,
    /// For cyclic orbits the element of `F`; for acyclic ones the triple with
    /// a non-positive entry reached by descent (or the seed itself if it
    /// already has one).
    pub representative: Triple,
    pub elements_found: usize,
    pub is_finite: Finiteness,
    #[serde(with = "decimal")]
    pub constant: BigInt,
    pub verdict: Verdict,
}

pub fn summarize_orbit(seed: &Triple, bounds: &OrbitBounds) -> OrbitSummary {
    let graph = enumerate_orbit(seed, bounds);
    let is_finite = if graph.is_closed() {
        Finiteness::Yes
    } else if graph.nodes.iter().any(|t| increasing_ray(t).is_some()) {
        Finiteness::No
    } else {
        Finiteness::Unknown(bounds.max_nodes)
    };
    let (verdict, representative) = if seed.has_nonpositive_entry() {
        (Verdict::Acyclic, seed.clone())
    } else {
        let c = descend(seed).expect("positive entries");
        (c.verdict, c.representative)
    };
    OrbitSummary {
        seed: seed.clone(),
        representative,
        elements_found: graph.nodes.len(),
        is_finite,
        constant: seed.markov_constant(),
        verdict,
    }
}

/// Graphviz text for an orbit graph. Output depends only on the graph.
pub fn export_dot(graph: &OrbitGraph) -> String {
    let mut out = String::from("graph orbit {\n");
    for (i, t) in graph.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{},{},{}\"];", t.x, t.y, t.z);
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.from, e.to, e.letter);
    }
    out.push_str("}\n");
    out
}
