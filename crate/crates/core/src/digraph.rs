//! Strict-digraph representation and the structural primitives every
//! other module consumes.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted, so all
//! iteration orders (and hence all certificates built from them) are
//! deterministic. Subdigraphs keep the vertex ids of their host: deleting
//! vertices or arcs yields a digraph of the same order with the affected
//! arcs removed, which lets recursive procedures pass masks around without
//! renaming anything.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Vertex id inside a [`Digraph`].
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(Vertex, Vertex),
    #[error("vertex {v} out of range for order {n}")]
    OutOfRange { v: Vertex, n: usize },
}

/// A strict digraph: no loops, no parallel arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n(), self.arcs().collect::<Vec<_>>())
    }
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph { out: vec![Vec::new(); n], inn: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a digraph from an arc list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.try_insert(u, v)?;
        }
        d.sort_adj();
        Ok(d)
    }

    fn try_insert(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        if u as usize >= n {
            return Err(GraphError::OutOfRange { v: u, n });
        }
        if v as usize >= n {
            return Err(GraphError::OutOfRange { v, n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.out[u as usize].contains(&v) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        self.out[u as usize].push(v);
        self.inn[v as usize].push(u);
        self.m += 1;
        Ok(())
    }

    fn sort_adj(&mut self) {
        for l in &mut self.out {
            l.sort_unstable();
        }
        for l in &mut self.inn {
            l.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n() as Vertex
    }

    pub fn out(&self, v: Vertex) -> &[Vertex] {
        &self.out[v as usize]
    }

    pub fn inn(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v as usize]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v as usize].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v as usize].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u as usize].binary_search(&v).is_ok()
    }

    /// All arcs in ascending lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u as Vertex, v)))
    }

    /// Same order, one arc removed (if present).
    pub fn without_arc(&self, u: Vertex, v: Vertex) -> Digraph {
        let arcs: Vec<_> = self.arcs().filter(|&a| a != (u, v)).collect();
        Digraph::from_arcs(self.n(), &arcs).expect("subset of a valid arc set")
    }

    /// Same order, every arc incident to a deleted vertex removed. The
    /// deleted vertices remain as isolated ids, so no renaming happens.
    pub fn without_vertices(&self, del: &[Vertex]) -> Digraph {
        let mut gone = vec![false; self.n()];
        for &v in del {
            gone[v as usize] = true;
        }
        let arcs: Vec<_> = self
            .arcs()
            .filter(|&(u, v)| !gone[u as usize] && !gone[v as usize])
            .collect();
        Digraph::from_arcs(self.n(), &arcs).expect("subset of a valid arc set")
    }

    /// Restriction to `keep`: all other vertices become isolated.
    pub fn masked_to(&self, keep: &[Vertex]) -> Digraph {
        let mut stay = vec![false; self.n()];
        for &v in keep {
            stay[v as usize] = true;
        }
        let arcs: Vec<_> = self
            .arcs()
            .filter(|&(u, v)| stay[u as usize] && stay[v as usize])
            .collect();
        Digraph::from_arcs(self.n(), &arcs).expect("subset of a valid arc set")
    }

    /// Compacts the subdigraph induced by `keep` onto ids `0..keep.len()`.
    /// Returns the compacted digraph and the map from new id to old id.
    pub fn compact(&self, keep: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut keep: Vec<Vertex> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut to_new = vec![u32::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            to_new[v as usize] = i as Vertex;
        }
        let arcs: Vec<_> = self
            .arcs()
            .filter(|&(u, v)| to_new[u as usize] != u32::MAX && to_new[v as usize] != u32::MAX)
            .map(|(u, v)| (to_new[u as usize], to_new[v as usize]))
            .collect();
        let d = Digraph::from_arcs(keep.len(), &arcs).expect("relabeling of a valid arc set");
        (d, keep)
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph { out: self.inn.clone(), inn: self.out.clone(), m: self.m }
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Digraph {
        let arcs: Vec<_> = self
            .arcs()
            .map(|(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Digraph::from_arcs(self.n(), &arcs).expect("permutation of a valid arc set")
    }

    /// Disjoint union: `other`'s vertices are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.n() as Vertex;
        let mut arcs: Vec<_> = self.arcs().collect();
        arcs.extend(other.arcs().map(|(u, v)| (u + shift, v + shift)));
        Digraph::from_arcs(self.n() + other.n(), &arcs).expect("disjoint arc sets")
    }

    /// True iff `v` has out-degree >= 3, or in-degree >= 3, or in-degree
    /// and out-degree both equal to 2.
    pub fn is_big(&self, v: Vertex) -> bool {
        let dp = self.out_degree(v);
        let dm = self.in_degree(v);
        dp >= 3 || dm >= 3 || (dp == 2 && dm == 2)
    }

    /// All big vertices, ascending.
    pub fn big_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_big(v)).collect()
    }

    /// Vertices reachable from `xs` by dipaths (including `xs` itself).
    pub fn outsection(&self, xs: &[Vertex]) -> Vec<Vertex> {
        self.reach_sorted(xs, &self.out)
    }

    /// Vertices from which `xs` is reachable: the outsection in the converse.
    pub fn insection(&self, xs: &[Vertex]) -> Vec<Vertex> {
        self.reach_sorted(xs, &self.inn)
    }

    fn reach_sorted(&self, xs: &[Vertex], adj: &[Vec<Vertex>]) -> Vec<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut queue: Vec<Vertex> = Vec::new();
        for &x in xs {
            if !seen[x as usize] {
                seen[x as usize] = true;
                queue.push(x);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// True iff a dipath from `x` to `y` avoids every vertex in `avoid`
    /// (the endpoints themselves must not be in `avoid`).
    pub fn reaches(&self, x: Vertex, y: Vertex, avoid: &[Vertex]) -> bool {
        self.dipath(x, y, avoid).is_some()
    }

    /// Shortest dipath from `x` to `y` avoiding `avoid`, by breadth-first
    /// search over sorted adjacency (deterministic). `x == y` yields the
    /// single-vertex path.
    pub fn dipath(&self, x: Vertex, y: Vertex, avoid: &[Vertex]) -> Option<DiPath> {
        self.dipath_sets(&[x], &[y], avoid)
    }

    /// Shortest dipath from any vertex of `xs` to any vertex of `ys`
    /// avoiding `avoid`. Sources already in `ys` give a length-0 path.
    pub fn dipath_sets(&self, xs: &[Vertex], ys: &[Vertex], avoid: &[Vertex]) -> Option<DiPath> {
        let mut blocked = vec![false; self.n()];
        for &v in avoid {
            blocked[v as usize] = true;
        }
        let mut is_target = vec![false; self.n()];
        for &y in ys {
            is_target[y as usize] = true;
        }
        let mut parent: Vec<Vertex> = vec![u32::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue: Vec<Vertex> = Vec::new();
        let mut sources: Vec<Vertex> = xs.to_vec();
        sources.sort_unstable();
        for &x in &sources {
            if blocked[x as usize] || seen[x as usize] {
                continue;
            }
            seen[x as usize] = true;
            queue.push(x);
        }
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if is_target[u as usize] {
                let mut path = vec![u];
                let mut cur = u;
                while parent[cur as usize] != u32::MAX {
                    cur = parent[cur as usize];
                    path.push(cur);
                }
                path.reverse();
                return Some(DiPath::new(path));
            }
            for &w in &self.out[u as usize] {
                if !blocked[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = u;
                    queue.push(w);
                }
            }
        }
        None
    }

    /// Strongly connected components in topological order of the
    /// contraction (components with arcs into later components first).
    /// Vertices within each component ascend.
    pub fn strong_components(&self) -> Vec<Vec<Vertex>> {
        // Iterative Tarjan; components complete in reverse topological
        // order, so the list is reversed before returning.
        let n = self.n();
        let mut index = vec![u32::MAX; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<Vertex> = Vec::new();
        let mut next_index = 0u32;
        let mut comps: Vec<Vec<Vertex>> = Vec::new();
        // Explicit DFS stack of (vertex, next out-neighbor position).
        let mut call: Vec<(Vertex, usize)> = Vec::new();
        for root in 0..n as Vertex {
            if index[root as usize] != u32::MAX {
                continue;
            }
            call.push((root, 0));
            index[root as usize] = next_index;
            low[root as usize] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root as usize] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < self.out[v as usize].len() {
                    let w = self.out[v as usize][*pos];
                    *pos += 1;
                    if index[w as usize] == u32::MAX {
                        index[w as usize] = next_index;
                        low[w as usize] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w as usize] = true;
                        call.push((w, 0));
                    } else if on_stack[w as usize] {
                        low[v as usize] = low[v as usize].min(index[w as usize]);
                    }
                } else {
                    call.pop();
                    if let Some(&(p, _)) = call.last() {
                        low[p as usize] = low[p as usize].min(low[v as usize]);
                    }
                    if low[v as usize] == index[v as usize] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w as usize] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps.reverse();
        comps
    }

    /// True iff the digraph is strongly connected (vacuously for n <= 1).
    pub fn is_strong(&self) -> bool {
        self.n() <= 1 || self.strong_components().len() == 1
    }

    /// The strong component containing `v`, sorted.
    pub fn strong_component_of(&self, v: Vertex) -> Vec<Vertex> {
        self.strong_components()
            .into_iter()
            .find(|c| c.binary_search(&v).is_ok())
            .expect("every vertex lies in a component")
    }

    /// The undirected graph joining two vertices iff they lie on a common
    /// directed 2-cycle. Returned as a sorted edge list with u < v.
    pub fn two_cycle_graph(&self) -> Vec<(Vertex, Vertex)> {
        self.arcs()
            .filter(|&(u, v)| u < v && self.has_arc(v, u))
            .collect()
    }

    /// The big-paths multidigraph: one arc per directed path between two
    /// big vertices whose interior vertices all have in-degree =
    /// out-degree = 1 (and are not big). Closed walks returning to their
    /// start contribute nothing, since a dipath has distinct endpoints.
    pub fn big_paths_digraph(&self) -> MultiDigraph {
        let big = self.big_vertices();
        let is_big_v: Vec<bool> = (0..self.n()).map(|v| self.is_big(v as Vertex)).collect();
        let mut arcs: BTreeMap<(Vertex, Vertex), u32> = BTreeMap::new();
        for &u in &big {
            // Each big path is determined by its first arc: interiors have
            // a unique out-neighbor.
            for &first in self.out(u) {
                let mut cur = first;
                let mut steps = 0usize;
                let end = loop {
                    if is_big_v[cur as usize] {
                        break Some(cur);
                    }
                    if self.out_degree(cur) != 1 || self.in_degree(cur) != 1 {
                        break None;
                    }
                    steps += 1;
                    if steps > self.n() {
                        // Walk trapped in a cycle of (1,1)-vertices.
                        break None;
                    }
                    cur = self.out(cur)[0];
                };
                if let Some(v) = end {
                    if v != u {
                        *arcs.entry((u, v)).or_insert(0) += 1;
                    }
                }
            }
        }
        MultiDigraph { verts: big, arcs }
    }
}

/// A multidigraph given by arc multiplicities over an explicit vertex set.
/// Loops are representable: arc-swap experiments on big-paths digraphs can
/// create them even though `big_paths_digraph` itself never does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDigraph {
    /// Host vertex ids, ascending.
    pub verts: Vec<Vertex>,
    /// Multiplicity per ordered pair; absent means zero.
    pub arcs: BTreeMap<(Vertex, Vertex), u32>,
}

impl MultiDigraph {
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        self.arcs.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Removes one copy of the arc; false if none was present.
    pub fn remove_one(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.arcs.get_mut(&(u, v)) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.arcs.remove(&(u, v));
                true
            }
            None => false,
        }
    }

    pub fn add_one(&mut self, u: Vertex, v: Vertex) {
        *self.arcs.entry((u, v)).or_insert(0) += 1;
    }

    /// Brute-force isomorphism over vertex bijections. Errors out above 8
    /// vertices rather than attempt a factorial search that large.
    pub fn is_isomorphic(&self, other: &MultiDigraph) -> Result<bool, &'static str> {
        if self.verts.len() != other.verts.len() {
            return Ok(false);
        }
        let k = self.verts.len();
        if k > 8 {
            return Err("isomorphism search capped at 8 vertices");
        }
        let total: u32 = self.arcs.values().sum();
        let total_o: u32 = other.arcs.values().sum();
        if total != total_o {
            return Ok(false);
        }
        // Positions into self.verts / other.verts.
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            let ok = self.arcs.iter().all(|(&(u, v), &c)| {
                let iu = self.verts.binary_search(&u).expect("arc endpoint listed");
                let iv = self.verts.binary_search(&v).expect("arc endpoint listed");
                other.multiplicity(other.verts[perm[iu]], other.verts[perm[iv]]) == c
            });
            if ok {
                return Ok(true);
            }
            if !next_permutation(&mut perm) {
                return Ok(false);
            }
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A directed path, stored as its vertex sequence. Length 0 (a single
/// vertex) is permitted where a caller's contract allows it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiPath(Vec<Vertex>);

impl fmt::Debug for DiPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiPath{:?}", self.0)
    }
}

impl DiPath {
    /// Wraps a vertex sequence; it must be nonempty.
    pub fn new(verts: Vec<Vertex>) -> Self {
        assert!(!verts.is_empty(), "a dipath has at least one vertex");
        DiPath(verts)
    }

    pub fn single(v: Vertex) -> Self {
        DiPath(vec![v])
    }

    pub fn verts(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_verts(self) -> Vec<Vertex> {
        self.0
    }

    /// First vertex.
    pub fn source(&self) -> Vertex {
        self.0[0]
    }

    /// Last vertex.
    pub fn target(&self) -> Vertex {
        *self.0.last().expect("nonempty")
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices strictly between source and target.
    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// The subpath from `x` to `y`; both must occur, `x` not after `y`.
    pub fn subpath(&self, x: Vertex, y: Vertex) -> DiPath {
        let i = self.0.iter().position(|&v| v == x).expect("x on path");
        let j = self.0.iter().position(|&v| v == y).expect("y on path");
        assert!(i <= j, "x occurs after y on the path");
        DiPath(self.0[i..=j].to_vec())
    }

    /// Position of `v` on the path, if present.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    /// Vertex-distinctness plus every consecutive pair an arc of `d`.
    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &self.0 {
            if (v as usize) >= d.n() || !seen.insert(v) {
                return false;
            }
        }
        self.0.windows(2).all(|w| d.has_arc(w[0], w[1]))
    }
}

/// Which disjoint-path question a [`Separation`] certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SepAnchor {
    /// Internally disjoint (x,y)-dipaths. When `reduced_arc` is set the
    /// arc xy was present and removed before separating, so it is the one
    /// arc allowed to cross from W to Z.
    Pair { x: Vertex, y: Vertex, reduced_arc: bool },
    /// Pairwise disjoint (X,Y)-dipaths.
    SetToSet { xs: Vec<Vertex>, ys: Vec<Vertex> },
    /// Independent (x,Y)-dipaths: paths share only x.
    FromVertex { x: Vertex, ys: Vec<Vertex> },
    /// Independent (X,y)-dipaths: paths share only y.
    ToVertex { xs: Vec<Vertex>, y: Vertex },
}

/// A certificate that fewer than k+1 disjoint paths exist: a partition
/// (W,S,Z) of the vertex set with |S| <= k and no arc from W to Z, with W
/// reachable from the variant's source side inside D[W].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub w: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub z: Vec<Vertex>,
    /// The certified bound on |S|.
    pub k: usize,
    pub anchor: SepAnchor,
}

impl Separation {
    /// Checks every invariant against the host digraph.
    pub fn validate(&self, d: &Digraph) -> Result<(), String> {
        let n = d.n();
        let mut tag = vec![0u8; n];
        for (&v, code) in
            self.w.iter().zip(std::iter::repeat(1)).chain(self.s.iter().zip(std::iter::repeat(2))).chain(self.z.iter().zip(std::iter::repeat(3)))
        {
            if v as usize >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if tag[v as usize] != 0 {
                return Err(format!("vertex {v} appears twice in the partition"));
            }
            tag[v as usize] = code;
        }
        if tag.iter().any(|&t| t == 0) {
            return Err("partition does not cover the vertex set".into());
        }
        if self.s.len() > self.k {
            return Err(format!("|S| = {} exceeds the bound {}", self.s.len(), self.k));
        }
        let exempt = match &self.anchor {
            SepAnchor::Pair { x, y, reduced_arc: true } => Some((*x, *y)),
            _ => None,
        };
        for (u, v) in d.arcs() {
            if tag[u as usize] == 1 && tag[v as usize] == 3 && Some((u, v)) != exempt {
                return Err(format!("arc {u} -> {v} crosses from W to Z"));
            }
        }
        // Variant membership conditions and the source side of W.
        let sources: Vec<Vertex> = match &self.anchor {
            SepAnchor::Pair { x, y, .. } => {
                if tag[*x as usize] != 1 {
                    return Err("x must lie in W".into());
                }
                if tag[*y as usize] != 3 {
                    return Err("y must lie in Z".into());
                }
                vec![*x]
            }
            SepAnchor::SetToSet { xs, ys } => {
                if xs.iter().any(|&v| tag[v as usize] == 3) {
                    return Err("X must avoid Z".into());
                }
                if ys.iter().any(|&v| tag[v as usize] == 1) {
                    return Err("Y must avoid W".into());
                }
                xs.iter().copied().filter(|&v| tag[v as usize] == 1).collect()
            }
            SepAnchor::FromVertex { x, ys } => {
                if tag[*x as usize] != 1 {
                    return Err("x must lie in W".into());
                }
                if ys.iter().any(|&v| tag[v as usize] == 1) {
                    return Err("Y must avoid W".into());
                }
                vec![*x]
            }
            SepAnchor::ToVertex { xs, y } => {
                if tag[*y as usize] != 3 {
                    return Err("y must lie in Z".into());
                }
                if xs.iter().any(|&v| tag[v as usize] == 3) {
                    return Err("X must avoid Z".into());
                }
                xs.iter().copied().filter(|&v| tag[v as usize] == 1).collect()
            }
        };
        let inside = d.masked_to(&self.w);
        let reach = inside.outsection(&sources);
        let mut w_sorted = self.w.clone();
        w_sorted.sort_unstable();
        if reach != w_sorted {
            return Err("W is not fully reachable from the source side within D[W]".into());
        }
        Ok(())
    }
}

/// A subdivision of a pattern F inside a host D: an injective branch map
/// on the vertices of F plus one internally disjoint dipath per arc of F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionWitness {
    /// F-vertex to D-vertex, total and injective.
    pub branch: BTreeMap<Vertex, Vertex>,
    /// F-arc to the dipath realizing it in D.
    pub paths: BTreeMap<(Vertex, Vertex), DiPath>,
}

/// Checks a witness against the subdivision definition: the path for arc
/// (a,b) runs from branch(a) to branch(b) with length >= 1, paths are
/// internally disjoint, and no internal vertex is a branch vertex.
pub fn validate_witness(f: &Digraph, d: &Digraph, w: &SubdivisionWitness) -> bool {
    // Branch map: total on V(F), injective, into V(D).
    if w.branch.len() != f.n() {
        return false;
    }
    let mut images = std::collections::BTreeSet::new();
    for (&fv, &dv) in &w.branch {
        if fv as usize >= f.n() || dv as usize >= d.n() || !images.insert(dv) {
            return false;
        }
    }
    // Path map: total on A(F), no extras.
    if w.paths.len() != f.m() {
        return false;
    }
    let mut used_internal = std::collections::BTreeSet::new();
    for (&(a, b), path) in &w.paths {
        if !f.has_arc(a, b) {
            return false;
        }
        if !path.is_valid_in(d) || path.len() < 1 {
            return false;
        }
        if path.source() != w.branch[&a] || path.target() != w.branch[&b] {
            return false;
        }
        for &v in path.interior() {
            if images.contains(&v) || !used_internal.insert(v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, arcs: &[(Vertex, Vertex)]) -> Digraph {
        Digraph::from_arcs(n, arcs).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_range() {
        assert_eq!(Digraph::from_arcs(2, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Digraph::from_arcs(2, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc(0, 1))
        );
        assert_eq!(
            Digraph::from_arcs(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { v: 2, n: 2 })
        );
    }

    #[test]
    fn strong_components_cycle_is_one_part() {
        let g = d(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.strong_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn strong_components_path_in_order() {
        let g = d(3, &[(0, 1), (1, 2)]);
        assert_eq!(g.strong_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn strong_components_two_cycles_source_first() {
        // Two 2-cycles {0,1} and {2,3} joined by 1 -> 2.
        let g = d(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]);
        assert_eq!(g.strong_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn outsection_examples() {
        let g = d(3, &[(0, 1), (1, 2)]);
        assert_eq!(g.outsection(&[1]), vec![1, 2]);
        assert_eq!(g.outsection(&[]), Vec::<Vertex>::new());
        let strong = d(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(strong.outsection(&[2]), vec![0, 1, 2]);
        assert_eq!(g.insection(&[1]), vec![0, 1]);
    }

    #[test]
    fn converse_involution() {
        let g = d(4, &[(0, 1), (1, 0), (2, 3), (1, 3)]);
        assert_eq!(g.converse().converse(), g);
        assert!(g.converse().has_arc(3, 1));
        assert!(!g.converse().has_arc(1, 3));
    }

    #[test]
    fn big_vertex_predicate() {
        // Wheel on a 3-cycle: centre 3 dominates {0,1,2}.
        let w3 = d(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]);
        assert_eq!(w3.big_vertices(), vec![3]);
        let path = d(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.big_vertices(), Vec::<Vertex>::new());
        // In-degree 2 and out-degree 2 is big.
        let g = d(5, &[(1, 0), (2, 0), (0, 3), (0, 4)]);
        assert!(g.is_big(0));
    }

    #[test]
    fn two_cycle_graph_examples() {
        let oriented = d(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(oriented.two_cycle_graph().is_empty());
        // Symmetric star with centre 0 and leaves 1..3.
        let ss3 = d(4, &[(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)]);
        assert_eq!(ss3.two_cycle_graph(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn big_paths_digraph_examples() {
        // No big vertices: empty multidigraph.
        let p = d(3, &[(0, 1), (1, 2)]);
        assert!(p.big_paths_digraph().verts.is_empty());

        // Two big vertices joined by two internally disjoint paths through
        // (1,1)-vertices, plus side arcs making 0 and 1 big.
        let g = d(
            8,
            &[
                (0, 2),
                (2, 1),
                (0, 3),
                (3, 1),
                (4, 0),
                (0, 5),
                (6, 1),
                (1, 7),
            ],
        );
        assert!(g.is_big(0) && g.is_big(1));
        let bp = g.big_paths_digraph();
        assert_eq!(bp.verts, vec![0, 1]);
        assert_eq!(bp.multiplicity(0, 1), 2);
    }

    #[test]
    fn big_paths_wheel_w4() {
        // 4-cycle rim 0..3, centre 4 dominating all. Rim vertices have
        // degree (1,2), so the centre is the only big vertex, and no rim
        // vertex is a (1,1)-interior: BP is a single vertex with no arcs.
        let mut arcs = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        arcs.extend([(4, 0), (4, 1), (4, 2), (4, 3)]);
        let w4 = d(5, &arcs);
        assert_eq!(w4.big_vertices(), vec![4]);
        let bp = w4.big_paths_digraph();
        assert_eq!(bp.verts, vec![4]);
        assert!(bp.arcs.is_empty());

        // A bidirected triangle: every vertex big, every arc a big path.
        let k3 = d(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        assert_eq!(k3.big_vertices(), vec![0, 1, 2]);
        let bp = k3.big_paths_digraph();
        assert_eq!(bp.arcs.values().sum::<u32>(), 6);
        assert_eq!(bp.multiplicity(0, 1), 1);
    }

    #[test]
    fn multidigraph_isomorphism() {
        let a = MultiDigraph {
            verts: vec![0, 1],
            arcs: BTreeMap::from([((0, 1), 2), ((1, 0), 1)]),
        };
        let b = MultiDigraph {
            verts: vec![5, 9],
            arcs: BTreeMap::from([((9, 5), 2), ((5, 9), 1)]),
        };
        assert!(a.is_isomorphic(&b).unwrap());
        let c = MultiDigraph {
            verts: vec![0, 1],
            arcs: BTreeMap::from([((0, 1), 3)]),
        };
        assert!(!a.is_isomorphic(&c).unwrap());
    }

    #[test]
    fn dipath_queries() {
        let g = d(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let p = g.dipath(0, 3, &[]).unwrap();
        assert_eq!(p.verts(), &[0, 3]);
        let p = g.dipath(0, 3, &[3]);
        assert!(p.is_none());
        let p = g.dipath_sets(&[1], &[3], &[]).unwrap();
        assert_eq!(p.verts(), &[1, 2, 3]);
        assert_eq!(g.dipath(2, 2, &[]).unwrap().len(), 0);
    }

    #[test]
    fn witness_validation() {
        let c3 = d(3, &[(0, 1), (1, 2), (2, 0)]);
        // Identity witness of a digraph inside itself is valid only if all
        // paths have length >= 1 (they do here).
        let w = SubdivisionWitness {
            branch: BTreeMap::from([(0, 0), (1, 1), (2, 2)]),
            paths: BTreeMap::from([
                ((0, 1), DiPath::new(vec![0, 1])),
                ((1, 2), DiPath::new(vec![1, 2])),
                ((2, 0), DiPath::new(vec![2, 0])),
            ]),
        };
        assert!(validate_witness(&c3, &c3, &w));

        // A length-0 path is rejected.
        let mut bad = w.clone();
        bad.paths.insert((0, 1), DiPath::single(0));
        assert!(!validate_witness(&c3, &c3, &bad));

        // Sharing an internal vertex is rejected.
        let c2 = d(2, &[(0, 1), (1, 0)]);
        let host = d(4, &[(0, 2), (2, 1), (1, 3), (3, 0), (2, 3)]);
        let shared = SubdivisionWitness {
            branch: BTreeMap::from([(0, 0), (1, 1)]),
            paths: BTreeMap::from([
                ((0, 1), DiPath::new(vec![0, 2, 1])),
                ((1, 0), DiPath::new(vec![1, 3, 0])),
            ]),
        };
        assert!(validate_witness(&c2, &host, &shared));
        let clash = SubdivisionWitness {
            branch: BTreeMap::from([(0, 0), (1, 1)]),
            paths: BTreeMap::from([
                ((0, 1), DiPath::new(vec![0, 2, 1])),
                ((1, 0), DiPath::new(vec![1, 2, 0])),
            ]),
        };
        assert!(!validate_witness(&c2, &host, &clash));
    }

    #[test]
    fn separation_validator() {
        let g = d(3, &[(0, 1), (1, 2)]);
        let sep = Separation {
            w: vec![0],
            s: vec![1],
            z: vec![2],
            k: 1,
            anchor: SepAnchor::Pair { x: 0, y: 2, reduced_arc: false },
        };
        assert!(sep.validate(&g).is_ok());
        let bad = Separation { z: vec![1, 2], s: vec![], ..sep.clone() };
        assert!(bad.validate(&g).is_err());
    }
}
