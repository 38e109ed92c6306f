//! Exponential-time ground truth.
//!
//! [`brute_force_subdivision`] decides pattern containment by exhaustive
//! search and is what every polynomial detector is validated against at
//! small scale. [`brute_force_2_linkage`] plays the same role for the
//! hardness gadgets. Both are budgeted: blowing the step budget is a
//! reported outcome, never a silent "no".

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::digraph::{DiPath, Digraph, SubdivisionWitness, Vertex};

/// Caps for the brute-force searches.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    /// Largest host order accepted.
    pub max_n: usize,
    /// Backtracking-node cap across the whole call.
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n: 10, max_steps: 10_000_000 }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget { max_n, ..Default::default() }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("host has {n} vertices, above the budget cap {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error("step budget exhausted after {0} steps")]
    Budget(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

struct Search<'a> {
    f: &'a Digraph,
    d: &'a Digraph,
    steps: u64,
    max_steps: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), OracleError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            Err(OracleError::Budget(self.steps))
        } else {
            Ok(())
        }
    }
}

/// Decides whether `d` contains a subdivision of `f` by complete search:
/// injective branch maps first (ascending, degree-pruned, honoring any
/// `pinned` role assignments), then depth-first assignment of internally
/// disjoint paths to the arcs of `f`, hardest arcs first.
///
/// Returns the first witness in enumeration order, `None` if there is no
/// subdivision, or an error when the budget is exceeded.
pub fn brute_force_subdivision(
    f: &Digraph,
    d: &Digraph,
    budget: OracleBudget,
    pinned: Option<&BTreeMap<Vertex, Vertex>>,
) -> Result<Option<SubdivisionWitness>, OracleError> {
    if d.n() > budget.max_n {
        return Err(OracleError::TooLarge { n: d.n(), max_n: budget.max_n });
    }
    if let Some(p) = pinned {
        let mut seen = std::collections::BTreeSet::new();
        for (&fv, &dv) in p {
            if fv as usize >= f.n() || dv as usize >= d.n() {
                return Err(OracleError::InvalidArgument("pinned vertex out of range"));
            }
            if !seen.insert(dv) {
                return Err(OracleError::InvalidArgument("pinned map not injective"));
            }
        }
    }
    if f.n() > d.n() || f.m() > d.m() {
        return Ok(None);
    }
    let mut search = Search { f, d, steps: 0, max_steps: budget.max_steps };
    let mut branch = vec![u32::MAX; f.n()];
    let mut taken = vec![false; d.n()];
    match assign_branch(&mut search, pinned, &mut branch, &mut taken, 0)? {
        Some(w) => Ok(Some(w)),
        None => Ok(None),
    }
}

fn assign_branch(
    s: &mut Search,
    pinned: Option<&BTreeMap<Vertex, Vertex>>,
    branch: &mut Vec<Vertex>,
    taken: &mut Vec<bool>,
    fv: usize,
) -> Result<Option<SubdivisionWitness>, OracleError> {
    if fv == s.f.n() {
        return assign_paths(s, branch);
    }
    s.tick()?;
    let fixed = pinned.and_then(|p| p.get(&(fv as Vertex))).copied();
    let candidates: Vec<Vertex> = match fixed {
        Some(dv) => vec![dv],
        None => s.d.vertices().collect(),
    };
    for dv in candidates {
        if taken[dv as usize] {
            continue;
        }
        // A branch vertex needs at least the pattern vertex's degrees.
        if s.d.out_degree(dv) < s.f.out_degree(fv as Vertex)
            || s.d.in_degree(dv) < s.f.in_degree(fv as Vertex)
        {
            continue;
        }
        branch[fv] = dv;
        taken[dv as usize] = true;
        let r = assign_branch(s, pinned, branch, taken, fv + 1)?;
        taken[dv as usize] = false;
        branch[fv] = u32::MAX;
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// Counts candidate realizing paths for one pattern arc under the given
/// branch map, up to `cap`; used to order arcs by difficulty.
fn count_paths_capped(
    s: &mut Search,
    branch: &[Vertex],
    src: Vertex,
    dst: Vertex,
    cap: u32,
) -> Result<u32, OracleError> {
    let mut blocked = vec![false; s.d.n()];
    for &b in branch {
        blocked[b as usize] = true;
    }
    let mut count = 0u32;
    let mut on_path = vec![false; s.d.n()];
    on_path[src as usize] = true;
    fn go(
        s: &mut Search,
        u: Vertex,
        dst: Vertex,
        blocked: &[bool],
        on_path: &mut Vec<bool>,
        count: &mut u32,
        cap: u32,
    ) -> Result<(), OracleError> {
        if *count >= cap {
            return Ok(());
        }
        s.tick()?;
        for &w in s.d.out(u) {
            if w == dst {
                *count += 1;
                if *count >= cap {
                    return Ok(());
                }
                continue;
            }
            if blocked[w as usize] || on_path[w as usize] {
                continue;
            }
            on_path[w as usize] = true;
            go(s, w, dst, blocked, on_path, count, cap)?;
            on_path[w as usize] = false;
        }
        Ok(())
    }
    go(s, src, dst, &blocked, &mut on_path, &mut count, cap)?;
    Ok(count)
}

fn assign_paths(
    s: &mut Search,
    branch: &[Vertex],
) -> Result<Option<SubdivisionWitness>, OracleError> {
    // Order pattern arcs by (capped) number of candidate paths, fewest
    // first, ties in lexicographic arc order.
    let mut order: Vec<((Vertex, Vertex), u32)> = Vec::with_capacity(s.f.m());
    for (a, b) in s.f.arcs() {
        let c = count_paths_capped(s, branch, branch[a as usize], branch[b as usize], 64)?;
        if c == 0 {
            return Ok(None);
        }
        order.push(((a, b), c));
    }
    order.sort_by_key(|&((a, b), c)| (c, a, b));
    let arcs: Vec<(Vertex, Vertex)> = order.into_iter().map(|(ab, _)| ab).collect();

    let mut used = vec![false; s.d.n()];
    for &b in branch {
        used[b as usize] = true;
    }
    let mut paths: Vec<Vec<Vertex>> = vec![Vec::new(); arcs.len()];
    if extend_arc(s, branch, &arcs, 0, &mut used, &mut paths)? {
        let mut w = SubdivisionWitness { branch: BTreeMap::new(), paths: BTreeMap::new() };
        for (fv, &dv) in branch.iter().enumerate() {
            w.branch.insert(fv as Vertex, dv);
        }
        for (i, &(a, b)) in arcs.iter().enumerate() {
            w.paths.insert((a, b), DiPath::new(paths[i].clone()));
        }
        return Ok(Some(w));
    }
    Ok(None)
}

fn extend_arc(
    s: &mut Search,
    branch: &[Vertex],
    arcs: &[(Vertex, Vertex)],
    i: usize,
    used: &mut Vec<bool>,
    paths: &mut Vec<Vec<Vertex>>,
) -> Result<bool, OracleError> {
    if i == arcs.len() {
        return Ok(true);
    }
    let (a, b) = arcs[i];
    let (src, dst) = (branch[a as usize], branch[b as usize]);
    paths[i] = vec![src];
    let ok = grow(s, branch, arcs, i, dst, used, paths)?;
    if !ok {
        paths[i].clear();
    }
    Ok(ok)
}

fn grow(
    s: &mut Search,
    branch: &[Vertex],
    arcs: &[(Vertex, Vertex)],
    i: usize,
    dst: Vertex,
    used: &mut Vec<bool>,
    paths: &mut Vec<Vec<Vertex>>,
) -> Result<bool, OracleError> {
    s.tick()?;
    let u = *paths[i].last().expect("path under construction nonempty");
    for w in s.d.out(u).to_vec() {
        if w == dst {
            paths[i].push(w);
            if extend_arc(s, branch, arcs, i + 1, used, paths)? {
                return Ok(true);
            }
            paths[i].pop();
            continue;
        }
        if used[w as usize] {
            continue;
        }
        used[w as usize] = true;
        paths[i].push(w);
        if grow(s, branch, arcs, i, dst, used, paths)? {
            return Ok(true);
        }
        paths[i].pop();
        used[w as usize] = false;
    }
    Ok(false)
}

/// Finds two vertex-disjoint dipaths, one from `x1` to `y1` and one from
/// `x2` to `y2`, by exhaustive backtracking over both paths.
pub fn brute_force_2_linkage(
    d: &Digraph,
    x1: Vertex,
    x2: Vertex,
    y1: Vertex,
    y2: Vertex,
) -> Result<Option<(DiPath, DiPath)>, OracleError> {
    let four = [x1, x2, y1, y2];
    if four.iter().any(|&v| v as usize >= d.n()) {
        return Err(OracleError::InvalidArgument("terminal out of range"));
    }
    if four.iter().tuple_combinations().any(|(a, b)| a == b) {
        return Err(OracleError::InvalidArgument("terminals not distinct"));
    }
    // Enumerate the first path depth first; for each complete first path,
    // backtrack over the second among the remaining vertices.
    let mut used = vec![false; d.n()];
    used[x1 as usize] = true;
    let mut p1 = vec![x1];
    fn grow1(
        d: &Digraph,
        p1: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        y1: Vertex,
        x2: Vertex,
        y2: Vertex,
    ) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let u = *p1.last().unwrap();
        if u == y1 {
            // Second path over the untouched vertices.
            let mut p2 = vec![x2];
            let mut used2 = used.clone();
            used2[x2 as usize] = true;
            if grow2(d, &mut p2, &mut used2, y2) {
                return Some((p1.clone(), p2));
            }
            return None;
        }
        for &w in d.out(u) {
            if used[w as usize] || w == x2 || w == y2 {
                continue;
            }
            used[w as usize] = true;
            p1.push(w);
            if let Some(r) = grow1(d, p1, used, y1, x2, y2) {
                return Some(r);
            }
            p1.pop();
            used[w as usize] = false;
        }
        None
    }
    fn grow2(d: &Digraph, p2: &mut Vec<Vertex>, used: &mut Vec<bool>, y2: Vertex) -> bool {
        let u = *p2.last().unwrap();
        if u == y2 {
            return true;
        }
        for &w in d.out(u) {
            if used[w as usize] {
                continue;
            }
            used[w as usize] = true;
            p2.push(w);
            if grow2(d, p2, used, y2) {
                return true;
            }
            p2.pop();
            used[w as usize] = false;
        }
        false
    }
    Ok(grow1(d, &mut p1, &mut used, y1, x2, y2)
        .map(|(a, b)| (DiPath::new(a), DiPath::new(b))))
}

/// Brute-force isomorphism for small digraphs (at most 8 vertices).
pub fn are_isomorphic_small(a: &Digraph, b: &Digraph) -> Result<bool, &'static str> {
    if a.n() != b.n() {
        return Ok(false);
    }
    if a.m() != b.m() {
        return Ok(false);
    }
    if a.n() > 8 {
        return Err("isomorphism search capped at 8 vertices");
    }
    let n = a.n();
    let mut deg_a: Vec<(usize, usize)> = (0..n)
        .map(|v| (a.out_degree(v as Vertex), a.in_degree(v as Vertex)))
        .collect();
    let mut deg_b: Vec<(usize, usize)> = (0..n)
        .map(|v| (b.out_degree(v as Vertex), b.in_degree(v as Vertex)))
        .collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }
    let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
    loop {
        if a.arcs().all(|(u, v)| b.has_arc(perm[u as usize], perm[v as usize])) {
            return Ok(true);
        }
        let mut idx: Vec<usize> = perm.iter().map(|&v| v as usize).collect();
        if !crate::digraph::next_permutation(&mut idx) {
            return Ok(false);
        }
        perm = idx.into_iter().map(|v| v as Vertex).collect();
    }
}

/// True iff `h` is exactly a subdivision of `f`: every vertex of `h` is
/// either a branch image or an interior of exactly one realizing path.
/// Independent of the backtracking oracle: works by choosing the branch
/// set, contracting all (1,1)-chains between branch vertices, and testing
/// isomorphism with `f`. Intended for small patterns (|V(f)| <= 8).
pub fn is_exact_subdivision(f: &Digraph, h: &Digraph) -> bool {
    let iso_f: Vec<Vertex> = f
        .vertices()
        .filter(|&v| f.out_degree(v) == 0 && f.in_degree(v) == 0)
        .collect();
    let iso_h: Vec<Vertex> = h
        .vertices()
        .filter(|&v| h.out_degree(v) == 0 && h.in_degree(v) == 0)
        .collect();
    // Isolated pattern vertices subdivide to themselves.
    if iso_f.len() != iso_h.len() {
        return false;
    }
    let keep_f: Vec<Vertex> = f.vertices().filter(|v| !iso_f.contains(v)).collect();
    let keep_h: Vec<Vertex> = h.vertices().filter(|v| !iso_h.contains(v)).collect();
    let (fc, _) = f.compact(&keep_f);
    let (hc, _) = h.compact(&keep_h);
    if fc.n() == 0 {
        return hc.n() == 0;
    }
    // Vertices whose degree profile differs from (1,1) must be branch
    // images; pattern vertices with profile (1,1) consume that many extra
    // (1,1)-vertices of the host as branch images.
    let forced: Vec<Vertex> = hc
        .vertices()
        .filter(|&v| !(hc.out_degree(v) == 1 && hc.in_degree(v) == 1))
        .collect();
    let flexible: Vec<Vertex> = hc
        .vertices()
        .filter(|&v| hc.out_degree(v) == 1 && hc.in_degree(v) == 1)
        .collect();
    if forced.len() > fc.n() {
        return false;
    }
    let extra = fc.n() - forced.len();
    if extra > flexible.len() {
        return false;
    }
    for choice in flexible.iter().copied().combinations(extra) {
        let mut branch: Vec<Vertex> = forced.iter().copied().chain(choice).collect();
        branch.sort_unstable();
        if contracts_to(&hc, &branch, &fc) {
            return true;
        }
    }
    false
}

/// Contracts every maximal chain of non-branch (1,1)-vertices of `h` and
/// compares the result with `f` up to isomorphism. Fails when a chain
/// closes on itself, duplicates an arc, misses a vertex, or the contracted
/// digraph is not isomorphic to `f`.
fn contracts_to(h: &Digraph, branch: &[Vertex], f: &Digraph) -> bool {
    let is_branch = |v: Vertex| branch.binary_search(&v).is_ok();
    let mut covered_arcs = 0usize;
    let mut interior_seen = vec![false; h.n()];
    let mut contracted: Vec<(Vertex, Vertex)> = Vec::new();
    for &u in branch {
        for &first in h.out(u) {
            let mut cur = first;
            let mut hops = 0usize;
            covered_arcs += 1;
            while !is_branch(cur) {
                // Non-branch vertices are (1,1) by construction of the
                // branch set; each may serve a single chain.
                if interior_seen[cur as usize] {
                    return false;
                }
                interior_seen[cur as usize] = true;
                cur = h.out(cur)[0];
                covered_arcs += 1;
                hops += 1;
                if hops > h.n() {
                    return false;
                }
            }
            if cur == u {
                // A chain returning to its start would contract to a loop.
                return false;
            }
            contracted.push((u, cur));
        }
    }
    if covered_arcs != h.m() {
        return false;
    }
    if h.vertices().any(|v| !is_branch(v) && !interior_seen[v as usize]) {
        return false;
    }
    contracted.sort_unstable();
    if contracted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // Relabel the contracted digraph onto 0..branch.len().
    let pos = |v: Vertex| branch.binary_search(&v).unwrap() as Vertex;
    let arcs: Vec<(Vertex, Vertex)> = contracted.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
    let fc = match Digraph::from_arcs(branch.len(), &arcs) {
        Ok(g) => g,
        Err(_) => return false,
    };
    are_isomorphic_small(&fc, f).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::validate_witness;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn g(n: usize, arcs: &[(Vertex, Vertex)]) -> Digraph {
        Digraph::from_arcs(n, arcs).unwrap()
    }

    fn decide(f: &Digraph, d: &Digraph) -> bool {
        brute_force_subdivision(f, d, OracleBudget::default(), None)
            .unwrap()
            .is_some()
    }

    #[test]
    fn c3_in_c5() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let w = brute_force_subdivision(&c3, &c5, OracleBudget::default(), None)
            .unwrap()
            .expect("a 5-cycle subdivides a 3-cycle");
        assert!(validate_witness(&c3, &c5, &w));
    }

    #[test]
    fn c2_not_in_dag() {
        let c2 = g(2, &[(0, 1), (1, 0)]);
        let dag = g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!decide(&c2, &dag));
    }

    #[test]
    fn w3_not_in_grid3() {
        let w3 = g(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]);
        let grid3 = crate::patterns::cylindrical_grid(3);
        let r = brute_force_subdivision(&w3, &grid3, OracleBudget::with_max_n(20), None).unwrap();
        assert!(r.is_none(), "grid has maximum out-degree 2, the centre needs 3");
    }

    #[test]
    fn budget_is_reported() {
        // Dense host, tiny step cap: must error, not answer.
        let mut arcs = Vec::new();
        for u in 0..8 {
            for v in 0..8 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let host = g(8, &arcs);
        let w3 = g(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]);
        let r = brute_force_subdivision(
            &w3,
            &host,
            OracleBudget { max_n: 10, max_steps: 5 },
            None,
        );
        assert!(matches!(r, Err(OracleError::Budget(_))));
    }

    #[test]
    fn pinning_restricts_the_search() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        // Two disjoint 3-cycles; pin branch 0 to vertex 3 (second cycle).
        let d = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let pin = BTreeMap::from([(0u32, 3u32)]);
        let w = brute_force_subdivision(&c3, &d, OracleBudget::default(), Some(&pin))
            .unwrap()
            .unwrap();
        assert_eq!(w.branch[&0], 3);
        // Pinned success implies unpinned success.
        assert!(decide(&c3, &d));
    }

    #[test]
    fn two_linkage_examples() {
        let d = g(4, &[(0, 2), (1, 3)]);
        let (p1, p2) = brute_force_2_linkage(&d, 0, 1, 2, 3).unwrap().unwrap();
        assert_eq!(p1.verts(), &[0, 2]);
        assert_eq!(p2.verts(), &[1, 3]);

        let crossed = g(4, &[(0, 3), (1, 2)]);
        assert!(brute_force_2_linkage(&crossed, 0, 1, 2, 3).unwrap().is_none());

        assert!(matches!(
            brute_force_2_linkage(&d, 0, 0, 2, 3),
            Err(OracleError::InvalidArgument(_))
        ));
    }

    /// Independent recheck: enumerate every simple (x1,y1)-path, then test
    /// plain reachability for the second pair in what remains.
    fn linkage_recheck(d: &Digraph, x1: Vertex, x2: Vertex, y1: Vertex, y2: Vertex) -> bool {
        fn all_paths(
            d: &Digraph,
            cur: &mut Vec<Vertex>,
            used: &mut Vec<bool>,
            y: Vertex,
            out: &mut Vec<Vec<Vertex>>,
        ) {
            let u = *cur.last().unwrap();
            if u == y {
                out.push(cur.clone());
                return;
            }
            for &w in d.out(u) {
                if used[w as usize] {
                    continue;
                }
                used[w as usize] = true;
                cur.push(w);
                all_paths(d, cur, used, y, out);
                cur.pop();
                used[w as usize] = false;
            }
        }
        let mut out = Vec::new();
        let mut used = vec![false; d.n()];
        used[x1 as usize] = true;
        all_paths(d, &mut vec![x1], &mut used, y1, &mut out);
        out.iter().any(|p1| {
            if p1.contains(&x2) || p1.contains(&y2) {
                return false;
            }
            d.without_vertices(p1).reaches(x2, y2, &[])
        })
    }

    #[test]
    fn two_linkage_matches_recheck_on_random_hosts() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(4..=8);
            let mut arcs = Vec::new();
            for u in 0..n as Vertex {
                for v in 0..n as Vertex {
                    if u != v && rng.gen_bool(0.25) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = g(n, &arcs);
            let got = brute_force_2_linkage(&d, 0, 1, 2, 3).unwrap();
            let want = linkage_recheck(&d, 0, 1, 2, 3);
            assert_eq!(got.is_some(), want, "host {:?}", d);
            if let Some((p1, p2)) = got {
                assert!(p1.is_valid_in(&d) && p2.is_valid_in(&d));
                assert!(p1.verts().iter().all(|v| !p2.contains(*v)));
            }
        }
    }

    #[test]
    fn exact_subdivision_checker() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(is_exact_subdivision(&c3, &c5));
        assert!(is_exact_subdivision(&c3, &c3));
        // C5 plus a chord is not exactly a C3-subdivision.
        let chord = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        assert!(!is_exact_subdivision(&c3, &chord));
        // C2 subdivides to any bidirectional-free cycle of length >= 2.
        let c2 = g(2, &[(0, 1), (1, 0)]);
        assert!(is_exact_subdivision(&c2, &c5));
        assert!(!is_exact_subdivision(&c2, &chord));
        // Isolated pattern vertices need isolated host vertices.
        let c2_plus_iso = g(3, &[(0, 1), (1, 0)]);
        let host = g(4, &[(0, 1), (1, 2), (2, 0)]);
        assert!(is_exact_subdivision(&c2_plus_iso, &host));
        assert!(!is_exact_subdivision(&c2_plus_iso, &c5));
    }

    /// Exhaustive independent completeness check on tiny hosts: the oracle
    /// agrees with "some sub-digraph is exactly an F-subdivision".
    #[test]
    fn oracle_matches_exhaustive_subdigraph_enumeration() {
        let pats = [
            g(2, &[(0, 1), (1, 0)]),
            g(3, &[(0, 1), (1, 2), (2, 0)]),
            g(3, &[(0, 1), (1, 2)]),
            g(3, &[(0, 1), (0, 2)]),
            g(4, &[(0, 1), (1, 0), (2, 3)]),
        ];
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..120 {
            let mut arcs = Vec::new();
            for u in 0..4u32 {
                for v in 0..4u32 {
                    if u != v && rng.gen_bool(0.4) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = g(4, &arcs);
            for f in &pats {
                let direct = decide(f, &d);
                let exhaustive = contains_exact_sub(f, &d);
                assert_eq!(direct, exhaustive, "pattern {:?} host {:?}", f, d);
            }
        }
    }

    fn contains_exact_sub(f: &Digraph, d: &Digraph) -> bool {
        let all_arcs: Vec<(Vertex, Vertex)> = d.arcs().collect();
        let m = all_arcs.len();
        for mask in 0..(1u32 << m) {
            let chosen: Vec<(Vertex, Vertex)> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| all_arcs[i]).collect();
            let sub = Digraph::from_arcs(d.n(), &chosen).unwrap();
            // Try every vertex subset as the subdigraph's support.
            for vmask in 0..(1u32 << d.n()) {
                let keep: Vec<Vertex> =
                    (0..d.n() as Vertex).filter(|v| vmask >> v & 1 == 1).collect();
                if chosen
                    .iter()
                    .any(|&(u, v)| !keep.contains(&u) || !keep.contains(&v))
                {
                    continue;
                }
                let (hc, _) = sub.compact(&keep);
                if is_exact_subdivision(f, &hc) {
                    return true;
                }
            }
        }
        false
    }
}
