//! Deligne-Lusztig reduction as a rewriting system on `W̃`.
//!
//! For `s ∈ S̃`, conjugation `w ↦ sws` either preserves length (the varieties
//! `X_w(b)` and `X_{sws}(b)` are isomorphic), lowers it by two (`X_w(b)`
//! splits into an `A¹`-bundle over `X_{sws}(b)` and a `G_m`-bundle over
//! `X_{sw}(b)`), or raises it by two. Conjugation by `Ω` is always an
//! isomorphism.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::alcove::BasicClass;
use crate::emptiness::nonempty_basic;
use crate::weyl::{AffWeylElt, Permutation, SimpleAffineReflection};
use crate::{Error, Result};

/// Cap on the number of elements visited by a single same-length search.
pub const MAX_SEARCH_NODES: usize = 200_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MoveClass {
    Equal,
    Split,
    Raise,
}

pub fn classify_move(w: &AffWeylElt, s: SimpleAffineReflection) -> MoveClass {
    let len = w.length() as i64;
    let conj = conj_by(w, &s.element(w.n())).length() as i64;
    match conj - len {
        0 => MoveClass::Equal,
        -2 => MoveClass::Split,
        _ => MoveClass::Raise,
    }
}

/// `g·w·g⁻¹`. Frobenius acts trivially on `W̃` for split `GL_n`, so
/// σ-conjugation is ordinary conjugation.
pub fn conj_by(w: &AffWeylElt, g: &AffWeylElt) -> AffWeylElt {
    w.conjugate_by(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ReductionMove {
    /// `w ↦ η^k w η^{−k}`
    OmegaConj(i64),
    SimpleConjEqual(SimpleAffineReflection),
    /// `w ↦ sws` with `ℓ(sws) = ℓ(w) − 2`; `A¹`-fibres.
    SplitClosed(SimpleAffineReflection),
    /// `w ↦ sw` with `ℓ(sws) = ℓ(w) − 2`; `G_m`-fibres.
    SplitOpen(SimpleAffineReflection),
}

impl ReductionMove {
    pub fn apply(&self, w: &AffWeylElt) -> AffWeylElt {
        let n = w.n();
        match *self {
            ReductionMove::OmegaConj(k) => conj_by(w, &AffWeylElt::eta_pow(n, k)),
            ReductionMove::SimpleConjEqual(s) | ReductionMove::SplitClosed(s) => conj_by(w, &s.element(n)),
            ReductionMove::SplitOpen(s) => &s.element(n) * w,
        }
    }
}

impl Serialize for ReductionMove {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for ReductionMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionMove::OmegaConj(k) => write!(f, "OmegaConj({k})"),
            ReductionMove::SimpleConjEqual(s) => write!(f, "SimpleConjEqual({s})"),
            ReductionMove::SplitClosed(s) => write!(f, "SplitClosed({s})"),
            ReductionMove::SplitOpen(s) => write!(f, "SplitOpen({s})"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EquivOptions {
    pub max_depth: usize,
    /// Also allow `η^{±1}` conjugation steps.
    pub allow_omega: bool,
}

/// Length-preserving conjugation moves out of `w`.
fn equal_moves(w: &AffWeylElt, affine: bool, omega: bool) -> Vec<(ReductionMove, AffWeylElt)> {
    let n = w.n();
    let len = w.length();
    let mut out = Vec::new();
    let first = if affine { 0 } else { 1 };
    for s in (first..n).map(SimpleAffineReflection) {
        let next = conj_by(w, &s.element(n));
        if next.length() == len {
            out.push((ReductionMove::SimpleConjEqual(s), next));
        }
    }
    if omega && n > 1 {
        for k in [1, -1] {
            let mv = ReductionMove::OmegaConj(k);
            out.push((mv, mv.apply(w)));
        }
    }
    out
}

/// Breadth-first search over the moves produced by `neighbours`, stopping at
/// the first element satisfying `goal`. Returns the move path, `None` if the
/// reachable set is exhausted, or [`Error::DepthExceeded`] if the search was
/// cut off at `max_depth` with unexplored elements left.
fn bfs<N, G>(start: &AffWeylElt, max_depth: usize, neighbours: N, goal: G) -> Result<Option<(Vec<ReductionMove>, AffWeylElt)>>
where
    N: Fn(&AffWeylElt) -> Vec<(ReductionMove, AffWeylElt)>,
    G: Fn(&AffWeylElt) -> bool,
{
    if goal(start) {
        return Ok(Some((Vec::new(), start.clone())));
    }
    let mut parent: HashMap<AffWeylElt, Option<(AffWeylElt, ReductionMove)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut frontier = vec![start.clone()];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for x in &frontier {
            for (mv, y) in neighbours(x) {
                if parent.contains_key(&y) {
                    continue;
                }
                parent.insert(y.clone(), Some((x.clone(), mv)));
                if goal(&y) {
                    let mut path = Vec::new();
                    let mut cur = y.clone();
                    while let Some(Some((prev, mv))) = parent.get(&cur) {
                        path.push(*mv);
                        cur = prev.clone();
                    }
                    path.reverse();
                    return Ok(Some((path, y)));
                }
                next.push(y);
            }
        }
        if parent.len() > MAX_SEARCH_NODES {
            return Err(Error::guard("elements visited by conjugation search", parent.len(), MAX_SEARCH_NODES));
        }
        if next.is_empty() {
            return Ok(None);
        }
        frontier = next;
    }
    let unexplored = frontier.iter().any(|x| neighbours(x).iter().any(|(_, y)| !parent.contains_key(y)));
    if unexplored {
        Err(Error::DepthExceeded(max_depth))
    } else {
        Ok(None)
    }
}

/// `w ≈ w′`: a chain of conjugations by `S` that never increases length in
/// either direction. With equal endpoint lengths every step preserves length.
pub fn approx_equiv(w: &AffWeylElt, target: &AffWeylElt, max_depth: usize) -> Result<Option<Vec<ReductionMove>>> {
    approx_equiv_with(w, target, EquivOptions { max_depth, allow_omega: false })
}

pub fn approx_equiv_with(w: &AffWeylElt, target: &AffWeylElt, opts: EquivOptions) -> Result<Option<Vec<ReductionMove>>> {
    if w.n() != target.n() {
        return Err(Error::DimensionMismatch(w.n(), target.n()));
    }
    if w.length() != target.length() {
        return Ok(None);
    }
    let found = bfs(w, opts.max_depth, |x| equal_moves(x, false, opts.allow_omega), |x| x == target)?;
    Ok(found.map(|(path, _)| path))
}

/// Default search depth `2·ℓ(w)`.
pub fn default_depth(w: &AffWeylElt) -> usize {
    2 * w.length()
}

/// Replays a move path.
pub fn replay(w: &AffWeylElt, path: &[ReductionMove]) -> AffWeylElt {
    path.iter().fold(w.clone(), |acc, mv| mv.apply(&acc))
}

/// `S_w = max{S′ ⊆ S : w S′ w⁻¹ = S′}`, as indices.
pub fn stable_simple_set(w: &AffWeylElt) -> BTreeSet<usize> {
    let n = w.n();
    let simple: Vec<AffWeylElt> = (1..n).map(|i| AffWeylElt::finite(Permutation::simple(n, i))).collect();
    let mut set: BTreeSet<usize> = (1..n).collect();
    loop {
        let keep: BTreeSet<usize> = set
            .iter()
            .copied()
            .filter(|&i| {
                let image = conj_by(&simple[i - 1], w);
                set.iter().any(|&j| simple[j - 1] == image)
            })
            .collect();
        if keep == set {
            return set;
        }
        set = keep;
    }
}

/// Splits `x = v·w′` with `w′` the minimal length element of `W₀x`.
pub fn min_coset_factor(x: &AffWeylElt) -> (Permutation, AffWeylElt) {
    let n = x.n();
    let mut w = x.clone();
    loop {
        let len = w.length();
        let descent = (1..n)
            .map(|i| &AffWeylElt::finite(Permutation::simple(n, i)) * &w)
            .find(|y| y.length() < len);
        match descent {
            Some(y) => w = y,
            None => break,
        }
    }
    let v = (x * &w.inverse()).finite_part().clone();
    (v, w)
}

/// A witness `w → v·w′` with `w′ ∈ ˢW̃` and `v ∈ W_{S_{w′}}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalForm {
    pub path: Vec<ReductionMove>,
    pub reached: AffWeylElt,
    pub v: Permutation,
    pub coset_rep: AffWeylElt,
}

fn is_minimal_form(x: &AffWeylElt) -> bool {
    let (v, w) = min_coset_factor(x);
    v.support().is_subset(&stable_simple_set(&w))
}

/// Searches conjugations by `S` that never increase length for an element of
/// the form `v·w′`, `w′ ∈ ˢW̃`, `v ∈ W_{S_{w′}}`.
pub fn find_minimal_form(w: &AffWeylElt, max_depth: usize) -> Result<Option<MinimalForm>> {
    let neighbours = |x: &AffWeylElt| {
        let n = x.n();
        let len = x.length();
        (1..n)
            .map(SimpleAffineReflection)
            .filter_map(|s| {
                let y = conj_by(x, &s.element(n));
                let ly = y.length();
                if ly < len {
                    Some((ReductionMove::SplitClosed(s), y))
                } else if ly == len {
                    Some((ReductionMove::SimpleConjEqual(s), y))
                } else {
                    None
                }
            })
            .collect()
    };
    let found = bfs(w, max_depth, neighbours, is_minimal_form)?;
    Ok(found.map(|(path, reached)| {
        let (v, coset_rep) = min_coset_factor(&reached);
        MinimalForm { path, reached, v, coset_rep }
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeStatus {
    Empty,
    Resolved,
    Unresolved,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphNode {
    pub id: usize,
    pub element: AffWeylElt,
    pub length: usize,
    pub nonempty: bool,
    pub status: NodeStatus,
    pub dimension: Option<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    #[serde(rename = "move")]
    pub kind: ReductionMove,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ReductionGraph {
    pub root: Option<usize>,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl ReductionGraph {
    pub fn root_node(&self) -> Option<&GraphNode> {
        self.root.map(|id| &self.nodes[id])
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = &GraphEdge> {
        self.edges.iter().filter(move |e| e.from == id)
    }
}

struct Builder<'a> {
    b: &'a BasicClass,
    graph: ReductionGraph,
    index: HashMap<AffWeylElt, usize>,
    max_depth: usize,
}

/// Dimension of a stratum given its fibration children.
fn combine(children: &[&GraphNode]) -> (NodeStatus, Option<i64>) {
    let mut best = None;
    for c in children.iter().filter(|c| c.nonempty) {
        match c.status {
            NodeStatus::Unresolved => return (NodeStatus::Unresolved, None),
            NodeStatus::Resolved => best = best.max(c.dimension.map(|d| d + 1)),
            NodeStatus::Empty => {}
        }
    }
    match best {
        Some(d) => (NodeStatus::Resolved, Some(d)),
        None => (NodeStatus::Empty, None),
    }
}

fn split_reflection(w: &AffWeylElt) -> Option<SimpleAffineReflection> {
    SimpleAffineReflection::all(w.n()).find(|&s| classify_move(w, s) == MoveClass::Split)
}

impl Builder<'_> {
    fn push(&mut self, element: AffWeylElt, nonempty: bool, status: NodeStatus, dimension: Option<i64>) -> usize {
        let id = self.graph.nodes.len();
        let length = element.length();
        self.index.insert(element.clone(), id);
        self.graph.nodes.push(GraphNode { id, element, length, nonempty, status, dimension });
        id
    }

    fn edge(&mut self, from: usize, to: usize, kind: ReductionMove) -> Result<()> {
        let (a, b) = (&self.graph.nodes[from], &self.graph.nodes[to]);
        let ok = match kind {
            ReductionMove::OmegaConj(_) | ReductionMove::SimpleConjEqual(_) => {
                a.length == b.length && a.dimension == b.dimension
            }
            ReductionMove::SplitClosed(_) => b.length + 2 == a.length,
            ReductionMove::SplitOpen(_) => b.length + 1 == a.length,
        };
        if !ok {
            return Err(Error::Internal(format!("edge {kind} from {} to {} breaks length bookkeeping", a.element, b.element)));
        }
        self.graph.edges.push(GraphEdge { from, to, kind });
        Ok(())
    }

    fn build(&mut self, w: &AffWeylElt, depth: usize) -> Result<usize> {
        if let Some(&id) = self.index.get(w) {
            return Ok(id);
        }
        if depth > self.max_depth {
            return Err(Error::DepthExceeded(self.max_depth));
        }
        let nonempty = nonempty_basic(w, self.b)?;
        if !nonempty {
            return Ok(self.push(w.clone(), false, NodeStatus::Empty, None));
        }
        if w.length() == 0 {
            return Ok(self.push(w.clone(), true, NodeStatus::Resolved, Some(0)));
        }
        if let Some(s) = split_reflection(w) {
            return self.split(w, s, depth);
        }
        // No split here: look for one along length-preserving conjugations.
        let found = bfs(
            w,
            usize::MAX,
            |x| equal_moves(x, true, true),
            |x| self.index.contains_key(x) || split_reflection(x).is_some(),
        )?;
        let Some((path, _)) = found else {
            // Minimal length in its conjugacy class.
            return Ok(self.push(w.clone(), true, NodeStatus::Unresolved, None));
        };
        let mut chain = vec![w.clone()];
        for mv in &path {
            let next = mv.apply(chain.last().unwrap());
            chain.push(next);
        }
        let last = chain.last().unwrap();
        let mut next_id = match self.index.get(last) {
            Some(&id) => id,
            None => {
                let s = split_reflection(last).expect("search goal");
                self.split(last, s, depth)?
            }
        };
        for (k, x) in chain.iter().enumerate().rev().skip(1) {
            let next = &self.graph.nodes[next_id];
            if next.nonempty != nonempty_basic(x, self.b)? {
                return Err(Error::Internal(format!("{x} and its conjugate {} disagree on emptiness", next.element)));
            }
            let (status, dimension) = (next.status, next.dimension);
            let id = self.push(x.clone(), next.nonempty, status, dimension);
            self.edge(id, next_id, path[k])?;
            next_id = id;
        }
        Ok(next_id)
    }

    fn split(&mut self, w: &AffWeylElt, s: SimpleAffineReflection, depth: usize) -> Result<usize> {
        let closed_mv = ReductionMove::SplitClosed(s);
        let open_mv = ReductionMove::SplitOpen(s);
        let closed = self.build(&closed_mv.apply(w), depth + 1)?;
        let open = self.build(&open_mv.apply(w), depth + 1)?;
        let (c, o) = (&self.graph.nodes[closed], &self.graph.nodes[open]);
        let (status, dimension) = combine(&[c, o]);
        if status == NodeStatus::Empty {
            return Err(Error::Internal(format!("{w} is nonempty but both reduction children are empty")));
        }
        let id = self.push(w.clone(), true, status, dimension);
        self.edge(id, closed, closed_mv)?;
        self.edge(id, open, open_mv)?;
        Ok(id)
    }
}

/// Builds the reduction graph of `X_w(b)` for basic `b`.
///
/// Terminals are empty strata, length-zero strata (dimension 0) and
/// nonempty elements of minimal length in their conjugacy class, whose
/// dimension is reported as unresolved.
pub fn reduction_graph(w: &AffWeylElt, b: &BasicClass, max_depth: usize) -> Result<ReductionGraph> {
    if w.n() != b.n {
        return Err(Error::DimensionMismatch(w.n(), b.n));
    }
    if w.kappa() != b.kappa {
        return Ok(ReductionGraph::default());
    }
    let mut builder = Builder { b, graph: ReductionGraph::default(), index: HashMap::new(), max_depth };
    let root = builder.build(w, 0)?;
    builder.graph.root = Some(root);
    Ok(builder.graph)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(g: &ReductionGraph) -> String {
    let mut out = String::from("digraph reduction {\n");
    for node in &g.nodes {
        let verdict = if node.nonempty { "nonempty" } else { "empty" };
        let dim = match (node.status, node.dimension) {
            (NodeStatus::Resolved, Some(d)) => d.to_string(),
            (NodeStatus::Unresolved, _) => "unresolved".to_string(),
            _ => "-".to_string(),
        };
        let label = format!("{}\\nlen={}\\n{}\\ndim={}", escape(&node.element.to_string()), node.length, verdict, dim);
        let _ = writeln!(out, "  n{} [label=\"{}\"];", node.id, label);
    }
    for e in &g.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.kind);
    }
    out.push_str("}\n");
    out
}
