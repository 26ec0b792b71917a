//! Labelled pseudographs with stable edge identities and darts, plus the
//! cheap structural invariants: components, cycle rank, core, kernel,
//! excess, minors, enumeration and canonical forms.

use crate::{Error, Result};
use std::collections::{BTreeMap, VecDeque};

/// Vertices are labelled 1..n.
pub type Vertex = usize;
/// Edge indices are 1-based; edge `i` owns darts `2i-1` and `2i`.
pub type EdgeId = usize;
/// Darts (half-edges) are 1-based; `2i-1` sits at the first endpoint of edge
/// `i`, `2i` at the second. A loop contributes both darts at one vertex.
pub type Dart = usize;

pub const DEFAULT_ENUM_CEILING: usize = 7;
pub const DEFAULT_CANON_CEILING: usize = 8;
pub const DEFAULT_MINOR_CEILING: usize = 6;
/// Canonical keys are bit strings over vertex pairs packed into a u64, so
/// C(n,2) must fit in 64 bits.
pub const CANON_HARD_LIMIT: usize = 11;

/// A labelled pseudograph. Loops (`u == v`) and parallel edges are allowed
/// unless `simple` is set, in which case the constructors reject them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    simple: bool,
}

/// Connected-component partition: contiguous ids 1..kappa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub kappa: usize,
    /// assignment[v-1] is the component id of vertex v.
    pub assignment: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>, simple: bool) -> Result<Graph> {
        for &(u, v) in &edges {
            if u == 0 || u > n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v == 0 || v > n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
        }
        if simple {
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in &edges {
                if u == v {
                    return Err(Error::SimplicityViolation(format!("loop at {u}")));
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(Error::SimplicityViolation(format!(
                        "parallel edge {}-{}",
                        key.0, key.1
                    )));
                }
            }
        }
        Ok(Graph { n, edges, simple })
    }

    pub fn empty() -> Graph {
        Graph { n: 0, edges: Vec::new(), simple: true }
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), simple: true }
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.push((u, v));
            }
        }
        Graph { n, edges, simple: true }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((n, 1));
        Graph { n, edges, simple: true }
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Graph { n, edges, simple: true }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=a {
            for v in (a + 1)..=(a + b) {
                edges.push((u, v));
            }
        }
        Graph { n: a + b, edges, simple: true }
    }

    pub fn petersen() -> Graph {
        // Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -> i+5.
        let mut edges = Vec::new();
        for i in 1..=5 {
            edges.push((i, i % 5 + 1));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 1) % 5 + 6));
        }
        Graph { n: 10, edges, simple: true }
    }

    pub fn v(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple_flag(&self) -> bool {
        self.simple
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: EdgeId) -> Result<(Vertex, Vertex)> {
        self.edges
            .get(edge - 1)
            .copied()
            .ok_or(Error::InvalidEdge { edge, e: self.e() })
    }

    /// Edge owning a dart.
    pub fn dart_edge(dart: Dart) -> EdgeId {
        (dart + 1) / 2
    }

    /// The other dart of the same edge.
    pub fn twin(dart: Dart) -> Dart {
        if dart % 2 == 1 {
            dart + 1
        } else {
            dart - 1
        }
    }

    /// Vertex at which a dart sits (the "tail").
    pub fn dart_tail(&self, dart: Dart) -> Vertex {
        let (u, v) = self.edges[Graph::dart_edge(dart) - 1];
        if dart % 2 == 1 {
            u
        } else {
            v
        }
    }

    /// Darts with tail `v`, in edge order; both darts of a loop appear.
    pub fn darts_at(&self, v: Vertex) -> Vec<Dart> {
        let mut darts = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                darts.push(2 * i + 1);
            }
            if b == v {
                darts.push(2 * i + 2);
            }
        }
        darts
    }

    /// Degree of a vertex; a loop counts twice.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    pub fn components(&self) -> ComponentPartition {
        let mut parent: Vec<usize> = (0..self.n).collect();
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
        for &(a, b) in &self.edges {
            let ra = find(&mut parent, a - 1);
            let rb = find(&mut parent, b - 1);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut id_of_root = BTreeMap::new();
        let mut assignment = vec![0usize; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            let r = find(&mut parent, v);
            let id = *id_of_root.entry(r).or_insert_with(|| {
                next += 1;
                next
            });
            assignment[v] = id;
        }
        ComponentPartition { kappa: next, assignment }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().kappa == 1
    }

    /// Cycle rank e - v + kappa.
    pub fn cycle_rank(&self) -> usize {
        self.e() + self.components().kappa - self.n
    }

    /// Repeatedly delete vertices of degree at most 1. The core of a forest
    /// is the empty graph; the result has minimum degree >= 2 or is empty.
    pub fn core(&self) -> Graph {
        let mut g = self.clone();
        loop {
            let victim = (1..=g.n).find(|&v| g.degree(v) <= 1);
            match victim {
                Some(v) => g = g.delete_vertex(v),
                None => return g,
            }
        }
    }

    /// Delete vertex v (and incident edges), relabelling v+1..n down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Graph {
        let relabel = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph { n: self.n - 1, edges, simple: self.simple }
    }

    pub fn delete_edge(&self, edge: EdgeId) -> Result<Graph> {
        self.endpoints(edge)?;
        let mut edges = self.edges.clone();
        edges.remove(edge - 1);
        Ok(Graph { n: self.n, edges, simple: self.simple })
    }

    /// The kernel: suppress all degree-2 vertices of the core, except that a
    /// component of the core which is a cycle becomes a single vertex with a
    /// loop. Isolated vertices are dropped; the kernel of an acyclic graph
    /// is empty. The result is a pseudograph with the same cycle rank.
    pub fn kernel(&self) -> Graph {
        let core = self.core();
        if core.n == 0 {
            return Graph::empty();
        }
        let comps = core.components();
        let deg = core.degrees();
        // Classify components: a cycle component has every vertex of degree 2.
        let mut comp_is_cycle = vec![true; comps.kappa];
        for v in 1..=core.n {
            if deg[v - 1] != 2 {
                comp_is_cycle[comps.assignment[v - 1] - 1] = false;
            }
        }
        // New vertices: one per cycle component, plus every core vertex of
        // degree >= 3 (core has min degree 2, so that covers everything).
        let mut new_id: Vec<usize> = vec![0; core.n + 1];
        let mut next = 0usize;
        for c in 0..comps.kappa {
            if comp_is_cycle[c] {
                next += 1;
                for v in 1..=core.n {
                    if comps.assignment[v - 1] == c + 1 {
                        new_id[v] = next;
                    }
                }
            }
        }
        for v in 1..=core.n {
            if deg[v - 1] >= 3 {
                next += 1;
                new_id[v] = next;
            }
        }
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        // One loop per cycle component.
        for c in 0..comps.kappa {
            if comp_is_cycle[c] {
                let v = (1..=core.n)
                    .find(|&v| comps.assignment[v - 1] == c + 1)
                    .expect("nonempty component");
                edges.push((new_id[v], new_id[v]));
            }
        }
        // For non-cycle components: walk maximal threads of degree-2 vertices
        // between branch (degree >= 3) vertices. Each thread becomes one
        // kernel edge. Work over darts so parallel edges and loops survive.
        let mut dart_seen = vec![false; 2 * core.e() + 1];
        for v in 1..=core.n {
            if deg[v - 1] < 3 {
                continue;
            }
            for d0 in core.darts_at(v) {
                if dart_seen[d0] {
                    continue;
                }
                // Follow the thread starting with dart d0 out of branch vertex v.
                let mut d = d0;
                dart_seen[d] = true;
                loop {
                    let t = Graph::twin(d);
                    dart_seen[t] = true;
                    let w = core.dart_tail(t);
                    if deg[w - 1] >= 3 {
                        edges.push((new_id[v], new_id[w]));
                        break;
                    }
                    // w has degree 2: continue along its other dart.
                    let next_d = core
                        .darts_at(w)
                        .into_iter()
                        .find(|&x| x != t)
                        .expect("degree-2 vertex has another dart");
                    d = next_d;
                    dart_seen[d] = true;
                }
            }
        }
        // Each thread is walked exactly once: the walk marks both darts of
        // every traversed edge, so starting from the far end is skipped.
        let kernel = Graph { n: next, edges, simple: false };
        debug_assert_eq!(kernel.cycle_rank(), self.cycle_rank());
        kernel
    }

    /// Excess: sum over components containing a cycle of e(C) - v(C).
    pub fn excess(&self) -> usize {
        let comps = self.components();
        let mut e_of = vec![0usize; comps.kappa];
        let mut v_of = vec![0usize; comps.kappa];
        for &(a, _) in &self.edges {
            e_of[comps.assignment[a - 1] - 1] += 1;
        }
        for v in 1..=self.n {
            v_of[comps.assignment[v - 1] - 1] += 1;
        }
        let mut xs = 0usize;
        let mut nontree = 0usize;
        for c in 0..comps.kappa {
            if e_of[c] >= v_of[c] {
                xs += e_of[c] - v_of[c];
                nontree += 1;
            }
        }
        debug_assert_eq!(self.cycle_rank(), xs + nontree);
        xs
    }

    pub fn induced_subgraph(&self, w: &[Vertex]) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::Precondition("induced subgraph of empty set".into()));
        }
        let mut sorted = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut new_id = vec![0usize; self.n + 1];
        for (i, &v) in sorted.iter().enumerate() {
            if v == 0 || v > self.n {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
            new_id[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != 0 && new_id[b] != 0)
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        Ok(Graph { n: sorted.len(), edges, simple: self.simple })
    }

    /// Replace edge `e = (u,v)` by a u-v path through `k` new vertices
    /// labelled n+1..n+k (in path order from u). k = 0 is the identity.
    pub fn subdivide_edge(&self, edge: EdgeId, k: usize) -> Result<Graph> {
        let (u, v) = self.endpoints(edge)?;
        if k == 0 {
            return Ok(self.clone());
        }
        let mut edges = self.edges.clone();
        edges.remove(edge - 1);
        let mut prev = u;
        for i in 0..k {
            edges.push((prev, self.n + i + 1));
            prev = self.n + i + 1;
        }
        edges.push((prev, v));
        // Subdividing never creates loops or parallels out of simple input.
        Graph::new(self.n + k, edges, self.simple)
    }

    /// Contract edge `e = (u,v)`: merge v into u (loops from u==v are kept
    /// in pseudograph mode and dropped in simple mode; simple mode also
    /// drops resulting parallel edges). Labels above max(u,v) shift down.
    pub fn contract_edge(&self, edge: EdgeId) -> Result<Graph> {
        let (u, v) = self.endpoints(edge)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i + 1 == edge {
                continue;
            }
            let map = |x: Vertex| {
                let x = if x == gone { keep } else { x };
                if x > gone {
                    x - 1
                } else {
                    x
                }
            };
            edges.push((map(a), map(b)));
        }
        let n = if u == v { self.n } else { self.n - 1 };
        if self.simple {
            edges.retain(|&(a, b)| a != b);
            let mut seen = std::collections::HashSet::new();
            edges.retain(|&(a, b)| seen.insert((a.min(b), a.max(b))));
        }
        Ok(Graph { n, edges, simple: self.simple })
    }

    /// Drop loops and parallel edges (result is flagged simple).
    pub fn simplify(&self) -> Graph {
        let mut seen = std::collections::HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
            .copied()
            .collect();
        Graph { n: self.n, edges, simple: true }
    }

    /// Append vertex n+1 adjacent to the listed vertices.
    pub fn extend_with_vertex(&self, neighbors: &[Vertex]) -> Result<Graph> {
        let mut edges = self.edges.clone();
        for &u in neighbors {
            if u == 0 || u > self.n {
                return Err(Error::InvalidVertex { vertex: u, n: self.n });
            }
            edges.push((u, self.n + 1));
        }
        Graph::new(self.n + 1, edges, self.simple)
    }

    /// Length of a shortest cycle; None for forests. A loop is a 1-cycle
    /// and a parallel pair a 2-cycle; otherwise breadth-first search from
    /// every root on the simplified graph.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(|&(a, b)| a == b) {
            return Some(1);
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.edges {
            if !seen.insert((a.min(b), a.max(b))) {
                return Some(2);
            }
        }
        let s = self.simplify();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); s.n];
        for &(a, b) in &s.edges {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        let mut best: Option<usize> = None;
        for root in 0..s.n {
            let mut dist = vec![usize::MAX; s.n];
            let mut parent = vec![usize::MAX; s.n];
            let mut queue = VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        Graph { n: self.n + other.n, edges, simple: self.simple && other.simple }
    }
}

/// Lexicographic order of the C(n,2) vertex-pair slots: (1,2), (1,3), ...,
/// (1,n), (2,3), ... Slot k corresponds to bit k (least significant first)
/// of the enumeration index.
pub fn pair_slots(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut slots = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 1..=n {
        for v in (u + 1)..=n {
            slots.push((u, v));
        }
    }
    slots
}

/// The simple graph on [n] whose edge set is the binary expansion of `index`
/// over the lexicographic pair slots.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let slots = pair_slots(n);
    let edges = slots
        .iter()
        .enumerate()
        .filter(|(k, _)| index >> k & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph { n, edges, simple: true }
}

/// Deterministic stream of all simple graphs on [n] (binary counter over the
/// lexicographic pair slots), optionally filtered.
pub fn enumerate_graphs(
    n: usize,
    ceiling: usize,
    filter: Option<&dyn Fn(&Graph) -> bool>,
) -> Result<Vec<Graph>> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { what: "enumeration", requested: n, limit: ceiling });
    }
    let m = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for index in 0..(1u64 << m) {
        let g = graph_from_index(n, index);
        if filter.map_or(true, |f| f(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Number of simple graphs on [n].
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

impl Graph {
    /// Adjacency bitmask over the lexicographic pair slots (simple graphs).
    pub fn edge_bitmask(&self) -> u64 {
        debug_assert!(self.simple);
        let mut mask = 0u64;
        let n = self.n;
        for &(a, b) in &self.edges {
            let (u, v) = (a.min(b), a.max(b));
            // Slot index of (u,v) in lexicographic pair order.
            let k = (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
            mask |= 1 << k;
        }
        mask
    }

    /// Canonical key: the minimum, over all vertex permutations, of the
    /// adjacency bit string read in colex pair order ((1,2), (1,3), (2,3),
    /// (1,4), ...) under the permuted labels. Equal keys iff isomorphic.
    /// Simple graphs only (pseudographs are simplified by callers first).
    pub fn canonical_form(&self, ceiling: usize) -> Result<u64> {
        let g = if self.simple { self.clone() } else { self.simplify() };
        let n = g.n;
        if n > ceiling || n > CANON_HARD_LIMIT {
            return Err(Error::CeilingExceeded {
                what: "canonicalization",
                requested: n,
                limit: ceiling.min(CANON_HARD_LIMIT),
            });
        }
        if n <= 1 {
            return Ok(0);
        }
        // adj[v] = bitmask of neighbours of vertex v (0-based).
        let mut adj = vec![0u32; n];
        for &(a, b) in &g.edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        // Branch and bound over which original vertex takes each position.
        // Placing position j appends the j-1 adjacency bits to the already
        // placed positions (in placement order); the canonical form is the
        // lexicographically smallest such bit string, so a candidate column
        // can be pruned as soon as it exceeds the incumbent's segment while
        // every earlier bit is tied.
        struct Ctx<'a> {
            adj: &'a [u32],
            n: usize,
            best: Vec<bool>,
            have_best: bool,
        }
        fn rec(ctx: &mut Ctx, placed: &mut Vec<usize>, used: u32, prefix: &mut Vec<bool>, tied: bool) {
            let n = ctx.n;
            if placed.len() == n {
                if !ctx.have_best || (!tied && prefix[..] < ctx.best[..]) {
                    ctx.best = prefix.clone();
                    ctx.have_best = true;
                }
                return;
            }
            for cand in 0..n {
                if used >> cand & 1 == 1 {
                    continue;
                }
                let col: Vec<bool> = placed
                    .iter()
                    .map(|&p| ctx.adj[cand] >> p & 1 == 1)
                    .collect();
                let mut new_tied = tied;
                if ctx.have_best && tied {
                    let seg = &ctx.best[prefix.len()..prefix.len() + col.len()];
                    match col.as_slice().cmp(seg) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Less => new_tied = false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                let mark = prefix.len();
                prefix.extend_from_slice(&col);
                placed.push(cand);
                rec(ctx, placed, used | 1 << cand, prefix, new_tied);
                placed.pop();
                prefix.truncate(mark);
            }
        }
        let mut ctx = Ctx { adj: &adj, n, best: Vec::new(), have_best: false };
        let mut placed = Vec::with_capacity(n);
        let mut prefix = Vec::with_capacity(n * (n - 1) / 2);
        rec(&mut ctx, &mut placed, 0, &mut prefix, true);
        let mut key = 0u64;
        for (k, &b) in ctx.best.iter().enumerate() {
            key |= (b as u64) << k;
        }
        Ok(key)
    }

    /// All minors of a simple graph up to isomorphism, as canonical key ->
    /// representative. Minors are generated by edge deletion, edge
    /// contraction (simplifying afterwards) and vertex deletion; the empty
    /// graph is not emitted, single vertices are. Includes the graph itself.
    pub fn enumerate_minors(&self, ceiling: usize) -> Result<BTreeMap<u64, Graph>> {
        let g = if self.simple { self.clone() } else { self.simplify() };
        if g.n > ceiling {
            return Err(Error::CeilingExceeded {
                what: "minor enumeration",
                requested: g.n,
                limit: ceiling,
            });
        }
        let canon_ceiling = ceiling.max(DEFAULT_CANON_CEILING);
        let mut out = BTreeMap::new();
        let mut queue = VecDeque::new();
        let key = g.canonical_form(canon_ceiling)?;
        out.insert(key, g.clone());
        queue.push_back(g);
        while let Some(cur) = queue.pop_front() {
            let push = |h: Graph, out: &mut BTreeMap<u64, Graph>, queue: &mut VecDeque<Graph>| -> Result<()> {
                if h.n == 0 {
                    return Ok(());
                }
                let key = h.canonical_form(canon_ceiling)?;
                // Distinct graphs of different orders may share a packed key
                // (e.g. K1 vs 2K1 are both all-zero); disambiguate by order.
                let full_key = (h.n as u64) << 56 | key;
                if !out.contains_key(&full_key) {
                    out.insert(full_key, h.clone());
                    queue.push_back(h);
                }
                Ok(())
            };
            for e in 1..=cur.e() {
                push(cur.delete_edge(e)?, &mut out, &mut queue)?;
                push(cur.contract_edge(e)?, &mut out, &mut queue)?;
            }
            if cur.n >= 2 {
                for v in 1..=cur.n {
                    push(cur.delete_vertex(v), &mut out, &mut queue)?;
                }
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

impl Graph {
    /// Parse the edge-list text format: first line "n m", then m lines "u v"
    /// (1-based labels).
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected \"n m\"".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected \"n m\"".into()))?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        Graph::new(n, edges, false)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.e());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Import the standard graph6 format (simple graphs, n <= 62 suffices).
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let bytes: Vec<u8> = s.trim().bytes().collect();
        if bytes.is_empty() {
            return Err(Error::Parse("empty graph6 string".into()));
        }
        let (n, rest) = if bytes[0] == 126 {
            return Err(Error::Parse("graph6 strings with n > 62 are not supported".into()));
        } else {
            ((bytes[0] as i16 - 63) as usize, &bytes[1..])
        };
        if bytes[0] < 63 {
            return Err(Error::Parse("invalid graph6 header byte".into()));
        }
        let mut bits = Vec::with_capacity(rest.len() * 6);
        for &b in rest {
            if !(63..=126).contains(&b) {
                return Err(Error::Parse("invalid graph6 body byte".into()));
            }
            let x = b - 63;
            for k in (0..6).rev() {
                bits.push(x >> k & 1 == 1);
            }
        }
        let need = n * n.saturating_sub(1) / 2;
        if bits.len() < need {
            return Err(Error::Parse("graph6 string too short".into()));
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        // graph6 bit order: column-major upper triangle (colex).
        for v in 2..=n {
            for u in 1..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::new(n, edges, true)
    }
}
