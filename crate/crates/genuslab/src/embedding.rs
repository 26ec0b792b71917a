//! Embedding schemes (rotation systems with edge signatures), face tracing,
//! orientability, exhaustive Euler-genus search, and the surgeries that turn
//! an arbitrary scheme into a unicellular and then precubic one.

use crate::graph::{Dart, EdgeId, Graph, Vertex};
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashMap;

/// A combinatorial embedding: a cyclic order of darts at every vertex plus a
/// sign for every edge. Signature -1 on an edge means the local orientations
/// of its endpoints disagree across it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingScheme {
    graph: Graph,
    /// rotations[v-1]: the darts with tail v, in cyclic order.
    rotations: Vec<Vec<Dart>>,
    /// signature[e-1] in {+1, -1}.
    signature: Vec<i8>,
}

/// The orbits of the face-tracing rule. There are two orbits per face (one
/// per traversal sense), so every dart appears in exactly two (dart, side)
/// incidences across all walks.
#[derive(Debug, Clone)]
pub struct FaceTrace {
    /// All orbits; each records the darts visited in traversal order.
    pub walks: Vec<Vec<Dart>>,
    /// Number of faces: half the number of orbits, plus one face per
    /// isolated (degree-zero) vertex.
    pub faces: usize,
}

/// Result of an exhaustive scheme search on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusProfile {
    /// Minimum Euler genus over all schemes.
    pub min_h: usize,
    /// Maximum Euler genus over all schemes.
    pub max_h: usize,
    /// Minimum Euler genus over orientable schemes (these always exist).
    pub min_orientable_h: usize,
    /// Minimum Euler genus over nonorientable schemes; None when the graph
    /// has no cycle, hence no nonorientable scheme at all.
    pub min_nonorientable_h: Option<usize>,
}

impl EmbeddingScheme {
    pub fn new(graph: Graph, rotations: Vec<Vec<Dart>>, signature: Vec<i8>) -> Result<Self> {
        if rotations.len() != graph.v() {
            return Err(Error::Precondition(format!(
                "expected {} rotation lists, got {}",
                graph.v(),
                rotations.len()
            )));
        }
        if signature.len() != graph.e() {
            return Err(Error::Precondition(format!(
                "expected {} signature entries, got {}",
                graph.e(),
                signature.len()
            )));
        }
        for (i, &s) in signature.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::Precondition(format!(
                    "signature of edge {} must be +1 or -1, got {s}",
                    i + 1
                )));
            }
        }
        for v in 1..=graph.v() {
            let mut expect = graph.darts_at(v);
            let mut got = rotations[v - 1].clone();
            expect.sort_unstable();
            got.sort_unstable();
            if expect != got {
                return Err(Error::Precondition(format!(
                    "rotation at vertex {v} is not a permutation of its darts"
                )));
            }
        }
        Ok(EmbeddingScheme { graph, rotations, signature })
    }

    /// The scheme whose rotations list darts in edge order, all signs +1.
    pub fn default_scheme(graph: Graph) -> Self {
        let rotations = (1..=graph.v()).map(|v| graph.darts_at(v)).collect();
        let signature = vec![1; graph.e()];
        EmbeddingScheme { graph, rotations, signature }
    }

    /// Build a scheme on a simple graph from per-vertex neighbour orders
    /// (all signs +1). Each neighbour identifies a unique edge.
    pub fn from_neighbor_rotations(graph: Graph, orders: &[Vec<Vertex>]) -> Result<Self> {
        if !graph.is_simple_flag() {
            return Err(Error::Precondition(
                "neighbour rotations require a simple graph".into(),
            ));
        }
        let mut dart_of: HashMap<(Vertex, Vertex), Dart> = HashMap::new();
        for (i, &(u, v)) in graph.edges().iter().enumerate() {
            dart_of.insert((u, v), 2 * i + 1);
            dart_of.insert((v, u), 2 * i + 2);
        }
        let mut rotations = Vec::with_capacity(graph.v());
        for (v, order) in orders.iter().enumerate() {
            let v = v + 1;
            let mut rot = Vec::with_capacity(order.len());
            for &u in order {
                let d = dart_of.get(&(v, u)).copied().ok_or_else(|| {
                    Error::Precondition(format!("no edge {v}-{u} for rotation at {v}"))
                })?;
                rot.push(d);
            }
            rotations.push(rot);
        }
        let e = graph.e();
        EmbeddingScheme::new(graph, rotations, vec![1; e])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    fn next_prev(&self) -> (Vec<Dart>, Vec<Dart>) {
        let d = 2 * self.graph.e();
        let mut next = vec![0; d + 1];
        let mut prev = vec![0; d + 1];
        for rot in &self.rotations {
            let k = rot.len();
            for (i, &x) in rot.iter().enumerate() {
                next[x] = rot[(i + 1) % k];
                prev[x] = rot[(i + k - 1) % k];
            }
        }
        (next, prev)
    }

    /// Trace all face walks. State space: (dart, side) with side in {+1,-1}.
    /// From (d, s): cross to the twin dart t of d flipping the side by the
    /// edge sign, then continue with the rotation successor of t if the new
    /// side is +1 and the predecessor if it is -1.
    pub fn face_trace(&self) -> FaceTrace {
        let e = self.graph.e();
        let (next, prev) = self.next_prev();
        let mut visited = vec![false; 4 * e];
        let mut walks = Vec::new();
        for start in 0..(4 * e) {
            if visited[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut state = start;
            while !visited[state] {
                visited[state] = true;
                let d = state / 2 + 1;
                let s_neg = state % 2 == 1;
                walk.push(d);
                let t = Graph::twin(d);
                let s2_neg = s_neg != (self.signature[Graph::dart_edge(d) - 1] < 0);
                let d2 = if s2_neg { prev[t] } else { next[t] };
                state = (d2 - 1) * 2 + s2_neg as usize;
            }
            walks.push(walk);
        }
        debug_assert!(walks.len() % 2 == 0);
        let isolated = (1..=self.graph.v())
            .filter(|&v| self.graph.degree(v) == 0)
            .count();
        let faces = walks.len() / 2 + isolated;
        FaceTrace { walks, faces }
    }

    pub fn faces(&self) -> usize {
        self.face_trace().faces
    }

    /// Euler genus of the scheme; for disconnected graphs the faces of the
    /// components are merged along a shared outer face, so
    /// h = e + 2*kappa - v - f_raw with f_raw the component face total.
    pub fn euler_genus(&self) -> usize {
        let g = &self.graph;
        let kappa = g.components().kappa;
        let f = self.faces();
        (g.e() + 2 * kappa).saturating_sub(g.v() + f)
    }

    /// Faces after merging one face per component into a shared outer face.
    pub fn merged_faces(&self) -> usize {
        let kappa = self.graph.components().kappa;
        self.faces() + 1 - kappa.max(1)
    }

    /// Flip a set of vertices: reverse their rotations and negate the sign
    /// of every non-loop edge with exactly one flipped endpoint. This does
    /// not change the embedded surface.
    pub fn flip_vertices(&self, flip: &[bool]) -> EmbeddingScheme {
        let mut rotations = self.rotations.clone();
        for v in 1..=self.graph.v() {
            if flip[v - 1] {
                rotations[v - 1].reverse();
            }
        }
        let mut signature = self.signature.clone();
        for (i, &(u, v)) in self.graph.edges().iter().enumerate() {
            if u != v && flip[u - 1] != flip[v - 1] {
                signature[i] = -signature[i];
            }
        }
        EmbeddingScheme { graph: self.graph.clone(), rotations, signature }
    }

    /// Gauge-normalize: flip vertices so every spanning-forest edge has sign
    /// +1. The scheme is orientable iff all signs are +1 afterwards.
    pub fn gauge_normalized(&self) -> EmbeddingScheme {
        let g = &self.graph;
        let forest = spanning_forest(g);
        // BFS across forest edges, assigning flips so forest signs become +1.
        let mut flip_sign = vec![0i8; g.v()]; // 0 = unassigned
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); g.v()];
        for &e in &forest {
            let (u, v) = g.edges()[e - 1];
            adj[u - 1].push((v, e));
            adj[v - 1].push((u, e));
        }
        for root in 1..=g.v() {
            if flip_sign[root - 1] != 0 {
                continue;
            }
            flip_sign[root - 1] = 1;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(w, e) in &adj[u - 1] {
                    if flip_sign[w - 1] == 0 {
                        flip_sign[w - 1] = flip_sign[u - 1] * self.signature[e - 1];
                        stack.push(w);
                    }
                }
            }
        }
        let flip: Vec<bool> = flip_sign.iter().map(|&s| s < 0).collect();
        let out = self.flip_vertices(&flip);
        debug_assert!(forest.iter().all(|&e| out.signature[e - 1] == 1));
        out
    }

    /// A scheme is orientable iff after gauge normalization every edge
    /// (including loops, which flips never touch) has sign +1.
    pub fn is_orientable(&self) -> bool {
        self.gauge_normalized().signature.iter().all(|&s| s == 1)
    }

    /// Remove an edge, renumbering later edges and darts down.
    pub fn delete_edge(&self, edge: EdgeId) -> Result<EmbeddingScheme> {
        let graph = self.graph.delete_edge(edge)?;
        let gone = [2 * edge - 1, 2 * edge];
        let map = |d: Dart| if d > 2 * edge { d - 2 } else { d };
        let rotations = self
            .rotations
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|d| !gone.contains(d))
                    .map(|&d| map(d))
                    .collect()
            })
            .collect();
        let mut signature = self.signature.clone();
        signature.remove(edge - 1);
        Ok(EmbeddingScheme { graph, rotations, signature })
    }

    /// Scheme on the induced subgraph on `w`: edges with an endpoint outside
    /// `w` disappear, surviving rotations keep their relative order.
    pub fn induced(&self, w: &[Vertex]) -> Result<EmbeddingScheme> {
        let sub = self.graph.induced_subgraph(w)?;
        let mut sorted = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // Kept edges in original order map to 1..e' in the subgraph.
        let keep: Vec<EdgeId> = (1..=self.graph.e())
            .filter(|&e| {
                let (a, b) = self.graph.edges()[e - 1];
                sorted.binary_search(&a).is_ok() && sorted.binary_search(&b).is_ok()
            })
            .collect();
        let mut new_edge = vec![0usize; self.graph.e() + 1];
        for (i, &e) in keep.iter().enumerate() {
            new_edge[e] = i + 1;
        }
        let map_dart = |d: Dart| -> Option<Dart> {
            let e = Graph::dart_edge(d);
            if new_edge[e] == 0 {
                None
            } else {
                Some(2 * new_edge[e] - 2 + (d - (2 * e - 1)) + 1)
            }
        };
        let rotations = sorted
            .iter()
            .map(|&v| {
                self.rotations[v - 1]
                    .iter()
                    .filter_map(|&d| map_dart(d))
                    .collect()
            })
            .collect();
        let signature = keep.iter().map(|&e| self.signature[e - 1]).collect();
        EmbeddingScheme::new(sub, rotations, signature)
    }

    /// Replace edge `edge = (x, y)` by a path x - u - y through a new vertex
    /// u = n+1. The first half keeps the edge's index, darts and sign; the
    /// second half is a fresh +1 edge. Faces are unchanged.
    pub fn subdivide_edge(&self, edge: EdgeId) -> Result<EmbeddingScheme> {
        let (x, y) = self.graph.endpoints(edge)?;
        if x == y {
            return Err(Error::Precondition("cannot subdivide a loop this way".into()));
        }
        let n = self.graph.v();
        let e = self.graph.e();
        let mut edges = self.graph.edges().to_vec();
        edges[edge - 1] = (x, n + 1);
        edges.push((n + 1, y));
        let graph = Graph::new(n + 1, edges, false)?;
        let mut rotations = self.rotations.clone();
        // Dart 2*edge moves from y to u; y now holds the second dart of the
        // new edge, 2e+2; u's rotation is [2*edge, 2e+1].
        for d in rotations[y - 1].iter_mut() {
            if *d == 2 * edge {
                *d = 2 * e + 2;
            }
        }
        rotations.push(vec![2 * edge, 2 * e + 1]);
        let mut signature = self.signature.clone();
        signature.push(1);
        Ok(EmbeddingScheme { graph, rotations, signature })
    }

    /// Attach a pendant vertex n+1 to `v` with a +1 edge, its dart appended
    /// at the end of v's rotation. Faces are unchanged.
    pub fn attach_leaf(&self, v: Vertex) -> Result<EmbeddingScheme> {
        if v == 0 || v > self.graph.v() {
            return Err(Error::InvalidVertex { vertex: v, n: self.graph.v() });
        }
        let n = self.graph.v();
        let e = self.graph.e();
        let mut edges = self.graph.edges().to_vec();
        edges.push((v, n + 1));
        let graph = Graph::new(n + 1, edges, false)?;
        let mut rotations = self.rotations.clone();
        rotations[v - 1].push(2 * e + 1);
        rotations.push(vec![2 * e + 2]);
        let mut signature = self.signature.clone();
        signature.push(1);
        Ok(EmbeddingScheme { graph, rotations, signature })
    }

    /// Delete edges until a single face remains, keeping the graph connected
    /// and the Euler genus fixed. At each step the lowest-indexed edge whose
    /// deletion keeps the graph connected and drops the face count by
    /// exactly one is removed; exactly f-1 edges go in total.
    pub fn chordify_to_unicellular(&self) -> Result<EmbeddingScheme> {
        if !self.graph.is_connected() {
            return Err(Error::Precondition(
                "unicellular reduction needs a connected graph".into(),
            ));
        }
        let mut cur = self.clone();
        let mut f = cur.faces();
        let h = cur.euler_genus();
        while f > 1 {
            let mut progressed = false;
            for e in 1..=cur.graph.e() {
                if !cur.graph.delete_edge(e)?.is_connected() {
                    continue;
                }
                let cand = cur.delete_edge(e)?;
                if cand.faces() == f - 1 {
                    cur = cand;
                    f -= 1;
                    progressed = true;
                    break;
                }
            }
            if !progressed {
                return Err(Error::Precondition(
                    "no edge deletion reduces the face count".into(),
                ));
            }
        }
        debug_assert_eq!(cur.euler_genus(), h);
        Ok(cur)
    }

    /// Split vertices of a unicellular scheme until every degree is 1 or 3,
    /// preserving the single face and the Euler genus. The lowest-labelled
    /// offending vertex is processed first: its first two rotation darts are
    /// split off onto a new degree-3 vertex joined back by a +1 edge.
    pub fn split_to_precubic(&self) -> Result<EmbeddingScheme> {
        if self.graph.e() == 0 {
            return Err(Error::Precondition("splitting needs at least one edge".into()));
        }
        if self.faces() != 1 {
            return Err(Error::Precondition("splitting needs a unicellular scheme".into()));
        }
        let h = self.euler_genus();
        let mut cur = self.clone();
        loop {
            let v = match (1..=cur.graph.v()).find(|&v| {
                let d = cur.graph.degree(v);
                d != 1 && d != 3
            }) {
                Some(v) => v,
                None => break,
            };
            let n = cur.graph.v();
            let e = cur.graph.e();
            let w = n + 1;
            let rot = cur.rotations[v - 1].clone();
            let (d1, d2) = (rot[0], rot[1]);
            let mut edges = cur.graph.edges().to_vec();
            for &d in &[d1, d2] {
                let j = Graph::dart_edge(d);
                if d % 2 == 1 {
                    edges[j - 1].0 = w;
                } else {
                    edges[j - 1].1 = w;
                }
            }
            edges.push((v, w)); // darts 2e+1 at v, 2e+2 at w
            let graph = Graph::new(w, edges, false)?;
            let mut rotations = cur.rotations.clone();
            let mut at_v = vec![2 * e + 1];
            at_v.extend_from_slice(&rot[2..]);
            rotations[v - 1] = at_v;
            rotations.push(vec![d1, d2, 2 * e + 2]);
            let mut signature = cur.signature.clone();
            signature.push(1);
            cur = EmbeddingScheme { graph, rotations, signature };
            debug_assert_eq!(cur.faces(), 1);
        }
        debug_assert_eq!(cur.euler_genus(), h);
        Ok(cur)
    }

    /// Rooting gadget: subdivide the lowest-indexed edge, creating vertex u,
    /// then hang a leaf off u. Adds two edges and keeps faces and genus.
    pub fn attach_root_gadget(&self) -> Result<EmbeddingScheme> {
        if self.graph.e() == 0 {
            return Err(Error::Precondition("rooting needs at least one edge".into()));
        }
        let sub = self.subdivide_edge(1)?;
        let out = sub.attach_leaf(sub.graph.v())?;
        debug_assert_eq!(out.faces(), self.faces());
        Ok(out)
    }
}

/// Edges of a spanning forest (greedy over edge indices).
pub fn spanning_forest(g: &Graph) -> Vec<EdgeId> {
    let mut parent: Vec<usize> = (0..g.v()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    let mut forest = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let (ru, rv) = (find(&mut parent, u - 1), find(&mut parent, v - 1));
        if ru != rv {
            parent[ru] = rv;
            forest.push(i + 1);
        }
    }
    forest
}

// ---------------------------------------------------------------------------
// Scheme text format
// ---------------------------------------------------------------------------

impl EmbeddingScheme {
    /// Parse the textual format: one line "v: d1 d2 ... dk" per vertex with
    /// darts, then an optional "sig: e1=-1,e7=-1" line naming the -1 edges.
    pub fn parse(graph: Graph, text: &str) -> Result<EmbeddingScheme> {
        let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); graph.v()];
        let mut signature = vec![1i8; graph.e()];
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected ':' in line: {line}")))?;
            if head.trim() == "sig" {
                for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (e, val) = item
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("bad signature item: {item}")))?;
                    let e: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad edge index: {item}")))?;
                    if e == 0 || e > graph.e() {
                        return Err(Error::InvalidEdge { edge: e, e: graph.e() });
                    }
                    match val.trim() {
                        "-1" => signature[e - 1] = -1,
                        "1" | "+1" => signature[e - 1] = 1,
                        other => {
                            return Err(Error::Parse(format!("bad signature value: {other}")))
                        }
                    }
                }
            } else {
                let v: usize = head
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex label: {head}")))?;
                if v == 0 || v > graph.v() {
                    return Err(Error::InvalidVertex { vertex: v, n: graph.v() });
                }
                let darts: std::result::Result<Vec<Dart>, _> =
                    rest.split_whitespace().map(str::parse).collect();
                rotations[v - 1] =
                    darts.map_err(|_| Error::Parse(format!("bad dart list: {rest}")))?;
            }
        }
        EmbeddingScheme::new(graph, rotations, signature)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for v in 1..=self.graph.v() {
            s.push_str(&format!("{v}:"));
            for d in &self.rotations[v - 1] {
                s.push_str(&format!(" {d}"));
            }
            s.push('\n');
        }
        let negs: Vec<String> = self
            .signature
            .iter()
            .enumerate()
            .filter(|(_, &x)| x < 0)
            .map(|(i, _)| format!("{}=-1", i + 1))
            .collect();
        if !negs.is_empty() {
            s.push_str(&format!("sig: {}\n", negs.join(",")));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Exhaustive genus search
// ---------------------------------------------------------------------------

fn factorial_u64(k: usize) -> u64 {
    (1..=k as u64).product::<u64>().max(1)
}

/// Unrank permutation `idx` (Lehmer code) of `items`, keeping items[0] fixed
/// would be handled by the caller; this permutes the whole slice.
fn unrank_permutation(mut idx: u64, items: &[Dart]) -> Vec<Dart> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    for i in (1..=pool.len()).rev() {
        let f = factorial_u64(i - 1);
        let j = (idx / f) as usize;
        idx %= f;
        out.push(pool.remove(j));
    }
    out
}

struct SearchSpace {
    /// darts at each vertex, in edge order; rotation fixes the first dart.
    darts_at: Vec<Vec<Dart>>,
    /// (deg-1)! per vertex.
    radices: Vec<u64>,
    total_rotations: u64,
    nonforest: Vec<EdgeId>,
}

fn search_space(g: &Graph) -> Result<SearchSpace> {
    let darts_at: Vec<Vec<Dart>> = (1..=g.v()).map(|v| g.darts_at(v)).collect();
    let mut total: u128 = 1;
    let mut radices = Vec::with_capacity(g.v());
    for d in &darts_at {
        let r = factorial_u64(d.len().saturating_sub(1));
        radices.push(r);
        total = total.saturating_mul(r as u128);
    }
    if total > u64::MAX as u128 {
        return Err(Error::BudgetExceeded { estimated: total, budget: u64::MAX as u128 });
    }
    let forest = spanning_forest(g);
    let in_forest: Vec<bool> = {
        let mut f = vec![false; g.e() + 1];
        for &e in &forest {
            f[e] = true;
        }
        f
    };
    let nonforest = (1..=g.e()).filter(|&e| !in_forest[e]).collect();
    Ok(SearchSpace {
        darts_at,
        radices,
        total_rotations: total as u64,
        nonforest,
    })
}

/// Fill next/prev rotation-successor tables for rotation index `idx`.
fn fill_rotation(sp: &SearchSpace, mut idx: u64, next: &mut [Dart], prev: &mut [Dart]) {
    for (v, darts) in sp.darts_at.iter().enumerate() {
        let local = idx % sp.radices[v];
        idx /= sp.radices[v];
        if darts.is_empty() {
            continue;
        }
        let rot: Vec<Dart> = if darts.len() <= 1 || local == 0 {
            darts.clone()
        } else {
            let mut r = vec![darts[0]];
            r.extend(unrank_permutation(local, &darts[1..]));
            r
        };
        let k = rot.len();
        for (i, &d) in rot.iter().enumerate() {
            next[d] = rot[(i + 1) % k];
            prev[d] = rot[(i + k - 1) % k];
        }
    }
}

/// Face count for an all-plus scheme: orbits of d -> next(twin(d)).
fn count_faces_all_plus(e: usize, next: &[Dart]) -> usize {
    let mut visited = vec![false; 2 * e + 1];
    let mut orbits = 0;
    for start in 1..=2 * e {
        if visited[start] {
            continue;
        }
        orbits += 1;
        let mut d = start;
        while !visited[d] {
            visited[d] = true;
            d = next[Graph::twin(d)];
        }
    }
    orbits
}

/// Face count for a signed scheme: half the orbit count on (dart, side).
fn count_faces_signed(e: usize, next: &[Dart], prev: &[Dart], lambda: &[i8]) -> usize {
    let mut visited = vec![false; 4 * e];
    let mut orbits = 0;
    for start in 0..4 * e {
        if visited[start] {
            continue;
        }
        orbits += 1;
        let mut state = start;
        while !visited[state] {
            visited[state] = true;
            let d = state / 2 + 1;
            let s_neg = state % 2 == 1;
            let t = Graph::twin(d);
            let s2_neg = s_neg != (lambda[Graph::dart_edge(d) - 1] < 0);
            let d2 = if s2_neg { prev[t] } else { next[t] };
            state = (d2 - 1) * 2 + s2_neg as usize;
        }
    }
    orbits / 2
}

/// Exhaustive Euler-genus profile of a connected graph: every rotation
/// system times one signature per gauge class (spanning-forest edges pinned
/// to +1). The all-plus class is the orientable one.
pub fn connected_profile(g: &Graph, budget: u128) -> Result<GenusProfile> {
    if !g.is_connected() {
        return Err(Error::Precondition("profile search needs a connected graph".into()));
    }
    let e = g.e();
    if e == 0 {
        return Ok(GenusProfile {
            min_h: 0,
            max_h: 0,
            min_orientable_h: 0,
            min_nonorientable_h: None,
        });
    }
    let sp = search_space(g)?;
    let rank = sp.nonforest.len();
    if rank > 60 {
        return Err(Error::BudgetExceeded { estimated: u128::MAX, budget });
    }
    let estimated = (sp.total_rotations as u128)
        .saturating_mul(1u128 << rank)
        .saturating_mul(4 * e as u128);
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let v = g.v();
    let combine = |a: (usize, usize, usize, Option<usize>),
                   b: (usize, usize, usize, Option<usize>)| {
        (
            a.0.min(b.0),
            a.1.max(b.1),
            a.2.min(b.2),
            match (a.3, b.3) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
        )
    };
    let id = (usize::MAX, 0usize, usize::MAX, None);
    let acc = (0..sp.total_rotations)
        .into_par_iter()
        .fold(
            || id,
            |mut acc, idx| {
                let mut next = vec![0; 2 * e + 1];
                let mut prev = vec![0; 2 * e + 1];
                fill_rotation(&sp, idx, &mut next, &mut prev);
                // Orientable class: all-plus fast trace.
                let f = count_faces_all_plus(e, &next);
                let h = e + 2 - v - f;
                acc = combine(acc, (h, h, h, None));
                // Nonorientable gauge classes.
                let mut lambda = vec![1i8; e];
                for mask in 1u64..(1 << sp.nonforest.len()) {
                    for (b, &ne) in sp.nonforest.iter().enumerate() {
                        lambda[ne - 1] = if mask >> b & 1 == 1 { -1 } else { 1 };
                    }
                    let f = count_faces_signed(e, &next, &prev, &lambda);
                    let h = e + 2 - v - f;
                    acc = combine(acc, (h, h, usize::MAX, Some(h)));
                }
                acc
            },
        )
        .reduce(|| id, combine);
    Ok(GenusProfile {
        min_h: acc.0,
        max_h: acc.1,
        min_orientable_h: acc.2,
        min_nonorientable_h: acc.3,
    })
}

/// Genus profile of an arbitrary graph, combining components: Euler genera
/// add (faces merge along a shared outer face); the surface is orientable
/// iff every component is, so the nonorientable minimum pays the
/// nonorientable premium in exactly one component.
pub fn genus_profile(g: &Graph, budget: u128) -> Result<GenusProfile> {
    if g.v() == 0 {
        return Ok(GenusProfile {
            min_h: 0,
            max_h: 0,
            min_orientable_h: 0,
            min_nonorientable_h: None,
        });
    }
    let comps = g.components();
    let mut profiles = Vec::with_capacity(comps.kappa);
    for c in 1..=comps.kappa {
        let verts: Vec<Vertex> = (1..=g.v())
            .filter(|&v| comps.assignment[v - 1] == c)
            .collect();
        let sub = g.induced_subgraph(&verts)?;
        profiles.push(connected_profile(&sub, budget)?);
    }
    let min_h: usize = profiles.iter().map(|p| p.min_h).sum();
    let max_h: usize = profiles.iter().map(|p| p.max_h).sum();
    let min_orientable_h: usize = profiles.iter().map(|p| p.min_orientable_h).sum();
    let mut min_nonorientable_h = None;
    for (j, p) in profiles.iter().enumerate() {
        if let Some(nj) = p.min_nonorientable_h {
            let total = nj
                + profiles
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, q)| q.min_h)
                    .sum::<usize>();
            min_nonorientable_h = Some(match min_nonorientable_h {
                Some(cur) if cur <= total => cur,
                _ => total,
            });
        }
    }
    Ok(GenusProfile { min_h, max_h, min_orientable_h, min_nonorientable_h })
}

pub fn min_euler_genus(g: &Graph, budget: u128) -> Result<usize> {
    Ok(genus_profile(g, budget)?.min_h)
}

pub fn max_euler_genus(g: &Graph, budget: u128) -> Result<usize> {
    Ok(genus_profile(g, budget)?.max_h)
}

/// Does some all-plus rotation system of this connected graph achieve `f`
/// faces? Early-exits across rotation indices in parallel.
fn component_has_rotation_with_faces(g: &Graph, f: usize, budget: u128) -> Result<bool> {
    let e = g.e();
    if e == 0 {
        return Ok(f == 1);
    }
    let sp = search_space(g)?;
    let estimated = (sp.total_rotations as u128).saturating_mul(2 * e as u128);
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let found = (0..sp.total_rotations).into_par_iter().any(|idx| {
        let mut next = vec![0; 2 * e + 1];
        let mut prev = vec![0; 2 * e + 1];
        fill_rotation(&sp, idx, &mut next, &mut prev);
        count_faces_all_plus(e, &next) == f
    });
    Ok(found)
}

/// Planarity by exhaustive rotation search with an edge-count precheck.
/// Loops and parallel edges are irrelevant and dropped first.
pub fn is_planar(g: &Graph, budget: u128) -> Result<bool> {
    let s = g.simplify();
    let comps = s.components();
    for c in 1..=comps.kappa {
        let verts: Vec<Vertex> = (1..=s.v())
            .filter(|&v| comps.assignment[v - 1] == c)
            .collect();
        let sub = s.induced_subgraph(&verts)?;
        let (n, e) = (sub.v(), sub.e());
        if n < 3 {
            continue;
        }
        if e > 3 * n - 6 {
            return Ok(false);
        }
        // Planar iff some rotation system reaches the Euler-maximal face
        // count e - n + 2.
        if !component_has_rotation_with_faces(&sub, e + 2 - n, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Planarity with memoization keyed by canonical form (falling back to an
/// uncached check when the graph is too large to canonicalize).
#[derive(Default)]
pub struct PlanarityCache {
    map: HashMap<(usize, u64), bool>,
}

impl PlanarityCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_planar(&mut self, g: &Graph, budget: u128) -> Result<bool> {
        let s = g.simplify();
        match s.canonical_form(crate::graph::CANON_HARD_LIMIT) {
            Ok(key) => {
                if let Some(&ans) = self.map.get(&(s.v(), key)) {
                    return Ok(ans);
                }
                let ans = is_planar(&s, budget)?;
                self.map.insert((s.v(), key), ans);
                Ok(ans)
            }
            Err(_) => is_planar(&s, budget),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn loop_graph() -> Graph {
        Graph::new(1, vec![(1, 1)], false).unwrap()
    }

    #[test]
    fn face_trace_planar_loop() {
        let s = EmbeddingScheme::default_scheme(loop_graph());
        let t = s.face_trace();
        assert_eq!(t.walks.len(), 4);
        assert_eq!(t.faces, 2);
        assert_eq!(s.euler_genus(), 0);
        assert!(s.is_orientable());
    }

    #[test]
    fn face_trace_crosscap_loop() {
        let g = loop_graph();
        let s = EmbeddingScheme::new(g, vec![vec![1, 2]], vec![-1]).unwrap();
        let t = s.face_trace();
        assert_eq!(t.walks.len(), 2);
        assert_eq!(t.faces, 1);
        assert_eq!(s.euler_genus(), 1);
        assert!(!s.is_orientable());
    }

    #[test]
    fn face_trace_single_edge() {
        let s = EmbeddingScheme::default_scheme(Graph::path(2));
        assert_eq!(s.faces(), 1);
        assert_eq!(s.euler_genus(), 0);
    }

    #[test]
    fn k4_sphere_rotation() {
        // The unique (up to reflection) plane rotation system of K4.
        let g = Graph::complete(4);
        let orders = vec![
            vec![2, 3, 4],
            vec![1, 4, 3],
            vec![1, 2, 4],
            vec![1, 3, 2],
        ];
        let s = EmbeddingScheme::from_neighbor_rotations(g, &orders).unwrap();
        assert_eq!(s.faces(), 4);
        assert_eq!(s.euler_genus(), 0);
        assert!(s.is_orientable());
        // Every dart appears in exactly two (dart, side) incidences.
        let t = s.face_trace();
        let mut count = vec![0usize; 2 * 6 + 1];
        for w in &t.walks {
            for &d in w {
                count[d] += 1;
            }
        }
        assert!(count[1..].iter().all(|&c| c == 2));
    }

    #[test]
    fn k5_and_k33_profiles() {
        let p = connected_profile(&Graph::complete(5), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.min_orientable_h, 2);
        assert_eq!(p.min_nonorientable_h, Some(1));
        assert_eq!(p.max_h, 6); // cycle rank of K5
        let p = connected_profile(&Graph::complete_bipartite(3, 3), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.min_orientable_h, 2);
        assert_eq!(p.min_nonorientable_h, Some(1));
        assert_eq!(p.max_h, 4);
    }

    #[test]
    fn tree_profile_has_no_nonorientable_scheme() {
        let p = connected_profile(&Graph::path(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.min_h, 0);
        assert_eq!(p.max_h, 0);
        assert_eq!(p.min_nonorientable_h, None);
    }

    #[test]
    fn planarity_basics() {
        assert!(is_planar(&Graph::complete(4), DEFAULT_BUDGET).unwrap());
        assert!(!is_planar(&Graph::complete(5), DEFAULT_BUDGET).unwrap());
        assert!(!is_planar(&Graph::complete_bipartite(3, 3), DEFAULT_BUDGET).unwrap());
        assert!(!is_planar(&Graph::complete(6), DEFAULT_BUDGET).unwrap());
        // Petersen minus a vertex still contains a K3,3 subdivision.
        assert!(!is_planar(&Graph::petersen().delete_vertex(1), DEFAULT_BUDGET).unwrap());
        assert!(!is_planar(&Graph::petersen(), DEFAULT_BUDGET).unwrap());
        assert!(is_planar(&Graph::cycle(6), DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn gauge_flip_preserves_faces() {
        let g = Graph::complete(4);
        let mut s = EmbeddingScheme::default_scheme(g);
        // Plant some -1 signs, then check flips keep the face count.
        s.signature[1] = -1;
        s.signature[4] = -1;
        let f = s.faces();
        let n = s.graph.v();
        for mask in 0u32..(1 << n) {
            let flip: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            assert_eq!(s.flip_vertices(&flip).faces(), f);
        }
        assert_eq!(s.gauge_normalized().faces(), f);
    }

    #[test]
    fn chordify_and_split_pipeline() {
        let g = Graph::complete(4);
        let orders = vec![
            vec![2, 3, 4],
            vec![1, 4, 3],
            vec![1, 2, 4],
            vec![1, 3, 2],
        ];
        let s = EmbeddingScheme::from_neighbor_rotations(g, &orders).unwrap();
        let h = s.euler_genus();
        let uni = s.chordify_to_unicellular().unwrap();
        assert_eq!(uni.faces(), 1);
        assert_eq!(uni.euler_genus(), h);
        assert_eq!(uni.graph().e(), s.graph().e() - (s.faces() - 1));
        assert!(uni.graph().is_connected());
        let pre = uni.split_to_precubic().unwrap();
        assert_eq!(pre.faces(), 1);
        assert_eq!(pre.euler_genus(), h);
        assert!(pre
            .graph()
            .degrees()
            .iter()
            .all(|&d| d == 1 || d == 3));
        let rooted = pre.attach_root_gadget().unwrap();
        assert_eq!(rooted.faces(), 1);
        assert_eq!(rooted.euler_genus(), h);
        assert_eq!(rooted.graph().e(), pre.graph().e() + 2);
    }

    #[test]
    fn scheme_text_roundtrip() {
        let g = Graph::complete(4);
        let mut s = EmbeddingScheme::default_scheme(g);
        s.signature[2] = -1;
        let text = s.render();
        let back = EmbeddingScheme::parse(s.graph.clone(), &text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn disconnected_profile_merges_components() {
        let g = Graph::complete(5).disjoint_union(&Graph::complete(5));
        let p = genus_profile(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.min_orientable_h, 4);
        assert_eq!(p.min_h, 2);
        assert_eq!(p.min_nonorientable_h, Some(2));
        assert_eq!(p.max_h, 12);
    }
}
