use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use udg_graph::{for_each_chordless_cycle, pendant_twin_reduce, two_connected_components, BipartiteGraph, Graph};

use crate::decomp::{ComponentDecomp, Decomposition, HexStrip, Leg, Lobster, Piece, StripBlock};
use crate::hexagon::{hexagon_intersection_type, Intersection, IntersectionError};
use crate::twins::twin_edge_classes;
use crate::witness::{find_witness, Witness};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recognition {
    Member(Decomposition),
    Forbidden(Witness),
}

/// Raised only when a graph passes every forbidden-subgraph test yet does
/// not fit the caterpillar shape; that would be a bug here, not in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("decomposition failed: {0}")]
    Undecomposable(String),
    #[error(transparent)]
    Intersection(#[from] IntersectionError),
}

type Res<T> = Result<T, StructureError>;

fn fail<T>(msg: impl Into<String>) -> Res<T> {
    Err(StructureError::Undecomposable(msg.into()))
}

/// Decides membership and returns a decomposition or a forbidden witness.
pub fn recognize_class_x(g: &Graph) -> Res<Recognition> {
    if let Some(w) = find_witness(g) {
        return Ok(Recognition::Forbidden(w));
    }
    let b = BipartiteGraph::from_bipartite(g.clone())
        .map_err(|e| StructureError::Undecomposable(format!("no odd cycle found yet {e}")))?;
    decompose(&b).map(Recognition::Member)
}

/// Decomposes a bipartite graph already known to be free of the forbidden
/// subgraphs.
pub fn decompose(b: &BipartiteGraph) -> Res<Decomposition> {
    let (reduced, expansion) = pendant_twin_reduce(b);
    let r = reduced.graph();
    let kept = &expansion.kept;
    let hexagons = hexagons(r)?;
    let mut components = Vec::new();
    for comp in udg_graph::connected_components(r) {
        let mut c = decompose_component(r, &comp, &hexagons)?;
        relabel(&mut c, kept);
        components.push(c);
    }
    let twin_classes = twin_edge_classes(b).into_iter().filter(|c| c.len() > 1).collect();
    Ok(Decomposition {
        n: b.n(),
        parts: b.parts().to_vec(),
        components,
        reduced: !expansion.is_trivial(),
        collapsed: expansion.collapsed,
        twin_classes,
    })
}

fn relabel(c: &mut ComponentDecomp, kept: &[usize]) {
    let m = |v: &mut usize| *v = kept[*v];
    for p in &mut c.pieces {
        match p {
            Piece::Strip(s) => {
                let mut blocks = s.blocks.clone();
                for bl in &mut blocks {
                    m(&mut bl.a);
                    m(&mut bl.b);
                    for (x, y) in &mut bl.paths {
                        m(x);
                        m(y);
                    }
                }
                *s = HexStrip::from_blocks(blocks);
            }
            Piece::Lobster(l) => {
                l.spine.iter_mut().for_each(m);
                for leg in l.legs.iter_mut().flatten() {
                    m(&mut leg.leg);
                    leg.foot.iter_mut().for_each(m);
                }
            }
        }
    }
    c.gluing.iter_mut().for_each(m);
    for (a, b) in &mut c.pendants {
        m(a);
        m(b);
    }
}

fn hexagons(g: &Graph) -> Res<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut bad = None;
    for_each_chordless_cycle(g, g.n(), |c| {
        if c.len() != 6 {
            bad = Some(c.len());
            return ControlFlow::Break(());
        }
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    match bad {
        Some(k) => fail(format!("chordless {k}-cycle")),
        None => Ok(out),
    }
}

fn bfs(g: &Graph, src: usize, allowed: impl Fn(usize) -> bool) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    dist[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(v) = q.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX && allowed(u) {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                q.push_back(u);
            }
        }
    }
    (dist, parent)
}

fn path_to(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut p = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        p.push(v);
    }
    p.reverse();
    p
}

/// Farthest vertex from `src` inside `set`; ties go to the smaller id.
fn farthest(g: &Graph, src: usize, set: &BTreeSet<usize>) -> (usize, Vec<usize>) {
    let (dist, parent) = bfs(g, src, |u| set.contains(&u));
    let z = set
        .iter()
        .copied()
        .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
        .expect("non-empty");
    (z, path_to(&parent, z))
}

/// Every vertex of `set` lies within distance two of `spine`.
fn dominated(g: &Graph, spine: &[usize], set: &BTreeSet<usize>) -> bool {
    let mut dist: Vec<usize> = vec![usize::MAX; g.n()];
    let mut q = VecDeque::new();
    for &s in spine {
        dist[s] = 0;
        q.push_back(s);
    }
    while let Some(v) = q.pop_front() {
        if dist[v] == 2 {
            continue;
        }
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX && set.contains(&u) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
        }
    }
    set.iter().all(|&v| dist[v] <= 2)
}

fn trim_back(g: &Graph, spine: &mut Vec<usize>, set: &BTreeSet<usize>) {
    while spine.len() > 1 && dominated(g, &spine[..spine.len() - 1], set) {
        spine.pop();
    }
}

/// Vertices reachable from `v` without entering the rest of `strip`.
fn hanging(g: &Graph, v: usize, strip: &BTreeSet<usize>) -> BTreeSet<usize> {
    let (dist, _) = bfs(g, v, |u| !strip.contains(&u));
    (0..g.n()).filter(|&u| dist[u] != usize::MAX).collect()
}

struct StripInfo {
    verts: BTreeSet<usize>,
    /// `(vertex, hanging set)` for every vertex carrying more than a leaf.
    heavy: Vec<(usize, BTreeSet<usize>)>,
}

fn decompose_component(g: &Graph, comp: &[usize], hexagons: &[Vec<usize>]) -> Res<ComponentDecomp> {
    let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
    let strip_sets: Vec<BTreeSet<usize>> = two_connected_components(&g.induced_subgraph(comp))
        .into_iter()
        .filter(|b| b.len() >= 3)
        .map(|b| b.into_iter().map(|i| comp[i]).collect())
        .collect();
    if strip_sets.is_empty() {
        return tree_component(g, &comp_set);
    }
    let infos: Vec<StripInfo> = strip_sets
        .iter()
        .map(|s| StripInfo {
            verts: s.clone(),
            heavy: s
                .iter()
                .map(|&v| (v, hanging(g, v, s)))
                .filter(|(_, h)| h.len() >= 3)
                .collect(),
        })
        .collect();
    let t = infos.len();
    // neighbours in the chain: strip j is on the side of heavy vertex v of i
    // when it is the nearest other strip inside v's hanging set
    let mut links: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t];
    for (i, info) in infos.iter().enumerate() {
        for (v, set) in &info.heavy {
            let (dist, _) = bfs(g, *v, |u| set.contains(&u));
            let near = (0..t)
                .filter(|&j| j != i)
                .filter_map(|j| infos[j].verts.iter().map(|&u| dist[u]).min().map(|d| (d, j)))
                .filter(|&(d, _)| d != usize::MAX)
                .min();
            if let Some((_, j)) = near {
                links[i].push((*v, j));
            }
        }
    }
    for (i, l) in links.iter().enumerate() {
        if l.len() > 2 {
            return fail(format!("strip {i} has {} strip neighbours", l.len()));
        }
        for &(_, j) in l {
            if !links[j].iter().any(|&(_, k)| k == i) {
                return fail("asymmetric strip adjacency");
            }
        }
    }
    let ends: Vec<usize> = (0..t).filter(|&i| links[i].len() <= 1).collect();
    if ends.is_empty() {
        return fail("strips form a cycle");
    }
    let mut order = vec![ends[0]];
    while order.len() < t {
        let cur = *order.last().unwrap();
        let prev = order.len().checked_sub(2).map(|i| order[i]);
        match links[cur].iter().find(|&&(_, j)| Some(j) != prev) {
            Some(&(_, j)) => order.push(j),
            None => return fail("strips are not connected in a path"),
        }
    }
    let mut best: Option<ComponentDecomp> = None;
    let mut last_err = None;
    for flip in [false, true] {
        let mut o = order.clone();
        if flip {
            o.reverse();
        }
        match assemble_chain(g, &comp_set, &infos, &links, &o, hexagons, flip) {
            Ok(c) => {
                let better = match &best {
                    None => true,
                    Some(b) => chain_key(&c) < chain_key(b),
                };
                if better {
                    best = Some(c);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    best.ok_or_else(|| last_err.unwrap())
}

fn chain_key(c: &ComponentDecomp) -> (usize, usize) {
    let s = c.strips().next().expect("has strips");
    let first = &s.blocks[0];
    (*first.vertices().iter().min().unwrap(), first.a)
}

fn tree_component(g: &Graph, set: &BTreeSet<usize>) -> Res<ComponentDecomp> {
    let start = *set.iter().next().unwrap();
    let (a, _) = farthest(g, start, set);
    let (_, mut spine) = farthest(g, a, set);
    trim_back(g, &mut spine, set);
    spine.reverse();
    trim_back(g, &mut spine, set);
    if spine.first() > spine.last() {
        spine.reverse();
    }
    let lob = lobster_from_spine(g, spine, set, &BTreeSet::new())?;
    Ok(ComponentDecomp {
        pieces: vec![Piece::Lobster(lob)],
        gluing: vec![],
        pendants: vec![],
    })
}

/// Collects legs for a spine; vertices in `strips` are not legs.
fn lobster_from_spine(g: &Graph, spine: Vec<usize>, piece: &BTreeSet<usize>, strips: &BTreeSet<usize>) -> Res<Lobster> {
    let on_spine: BTreeSet<usize> = spine.iter().copied().collect();
    let mut legs = Vec::with_capacity(spine.len());
    for &s in &spine {
        let mut here = Vec::new();
        for &l in g.neighbors(s) {
            if on_spine.contains(&l) || strips.contains(&l) || !piece.contains(&l) {
                continue;
            }
            let rest: Vec<usize> = g.neighbors(l).iter().copied().filter(|&x| x != s).collect();
            let foot = match rest[..] {
                [] => None,
                [f] if g.degree(f) == 1 => Some(f),
                _ => return fail(format!("vertex {l} is more than a leg of spine vertex {s}")),
            };
            here.push(Leg { leg: l, foot });
        }
        legs.push(here);
    }
    Ok(Lobster { spine, legs })
}

fn assemble_chain(
    g: &Graph,
    comp: &BTreeSet<usize>,
    infos: &[StripInfo],
    links: &[Vec<(usize, usize)>],
    order: &[usize],
    hexagons: &[Vec<usize>],
    flip: bool,
) -> Res<ComponentDecomp> {
    let t = order.len();
    let all_strip: BTreeSet<usize> = infos.iter().flat_map(|i| i.verts.iter().copied()).collect();
    let toward = |i: usize, j: usize| links[i].iter().find(|&&(_, k)| k == j).map(|&(v, _)| v);
    // spare heavy vertices become end lobsters
    let spare = |i: usize| -> Vec<usize> {
        infos[i]
            .heavy
            .iter()
            .map(|(v, _)| *v)
            .filter(|v| !links[i].iter().any(|(w, _)| w == v))
            .collect()
    };
    for (pos, &i) in order.iter().enumerate() {
        let s = spare(i);
        let allowed = match (t, pos) {
            (1, _) => 2,
            (_, p) if p == 0 || p == t - 1 => 1,
            _ => 0,
        };
        if s.len() > allowed {
            return fail(format!("strip {i} has {} extra heavy attachments", s.len()));
        }
    }
    let (left_end, right_end) = if t == 1 {
        let s = spare(order[0]);
        let (x, y) = (s.first().copied(), s.get(1).copied());
        if flip {
            (y, x)
        } else {
            (x, y)
        }
    } else {
        (spare(order[0]).first().copied(), spare(order[t - 1]).first().copied())
    };
    let mut pieces: Vec<Piece> = Vec::new();
    let mut gluing = Vec::new();
    let mut spine_vertices = BTreeSet::new();
    let end_lobster = |v: usize, strip: usize| -> Res<Lobster> {
        let set = hanging(g, v, &infos[strip].verts);
        let (_, mut spine) = farthest(g, v, &set);
        trim_back(g, &mut spine, &set);
        lobster_from_spine(g, spine, &set, &all_strip)
    };
    let mut glue_left: Vec<Option<usize>> = vec![None; t];
    let mut glue_right: Vec<Option<usize>> = vec![None; t];
    let mut mids: Vec<Lobster> = Vec::new();
    for p in 0..t.saturating_sub(1) {
        let (i, j) = (order[p], order[p + 1]);
        let v = toward(i, j).ok_or_else(|| StructureError::Undecomposable("missing link".into()))?;
        let w = toward(j, i).ok_or_else(|| StructureError::Undecomposable("missing link".into()))?;
        let (_, parent) = bfs(g, v, |u| u == w || !all_strip.contains(&u));
        let spine = path_to(&parent, w);
        if spine[0] != v {
            return fail("no tree path between consecutive strips");
        }
        glue_right[p] = Some(v);
        glue_left[p + 1] = Some(w);
        let set = comp.clone();
        mids.push(lobster_from_spine(g, spine, &set, &all_strip)?);
    }
    let mut left_lob = None;
    if let Some(v) = left_end {
        let mut l = end_lobster(v, order[0])?;
        l.spine.reverse();
        l.legs.reverse();
        glue_left[0] = Some(v);
        left_lob = Some(l);
    }
    let mut right_lob = None;
    if let Some(v) = right_end {
        right_lob = Some(end_lobster(v, order[t - 1])?);
        glue_right[t - 1] = Some(v);
    }
    if let Some(l) = left_lob {
        gluing.push(*l.spine.last().unwrap());
        spine_vertices.extend(l.spine.iter().copied());
        pieces.push(Piece::Lobster(l));
    }
    let mut strips = Vec::with_capacity(t);
    for (p, &i) in order.iter().enumerate() {
        let hexes: Vec<&Vec<usize>> = hexagons
            .iter()
            .filter(|h| h.iter().all(|v| infos[i].verts.contains(v)))
            .collect();
        let mut attached: BTreeSet<usize> = infos[i]
            .verts
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|u| !infos[i].verts.contains(u)))
            .collect();
        attached.extend(glue_left[p]);
        attached.extend(glue_right[p]);
        strips.push(build_strip(
            g,
            &infos[i].verts,
            &hexes,
            glue_left[p],
            glue_right[p],
            &attached,
        )?);
    }
    for (p, s) in strips.into_iter().enumerate() {
        pieces.push(Piece::Strip(s));
        if p + 1 < t {
            let l = mids.remove(0);
            gluing.push(l.spine[0]);
            gluing.push(*l.spine.last().unwrap());
            spine_vertices.extend(l.spine.iter().copied());
            pieces.push(Piece::Lobster(l));
        }
    }
    if let Some(l) = right_lob {
        gluing.push(l.spine[0]);
        spine_vertices.extend(l.spine.iter().copied());
        pieces.push(Piece::Lobster(l));
    }
    // leaves on strip vertices that are not spine vertices
    let mut pendants = Vec::new();
    for &v in &all_strip {
        if spine_vertices.contains(&v) {
            continue;
        }
        for &u in g.neighbors(v) {
            if all_strip.contains(&u) {
                continue;
            }
            if g.degree(u) != 1 {
                return fail(format!("strip vertex {v} carries a non-leaf attachment {u}"));
            }
            pendants.push((u, v));
        }
    }
    let c = ComponentDecomp {
        pieces,
        gluing,
        pendants,
    };
    let mut covered: Vec<usize> = c
        .pieces
        .iter()
        .flat_map(|p| match p {
            Piece::Strip(s) => s.blocks.iter().flat_map(StripBlock::vertices).collect::<Vec<_>>(),
            Piece::Lobster(l) => l.vertices(),
        })
        .chain(c.pendants.iter().map(|&(l, _)| l))
        .collect();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != comp.len() {
        return fail(format!("pieces cover {} of {} vertices", covered.len(), comp.len()));
    }
    Ok(c)
}

/// Orders the blocks of one strip and fixes every role.
fn build_strip(
    g: &Graph,
    verts: &BTreeSet<usize>,
    hexes: &[&Vec<usize>],
    gl: Option<usize>,
    gr: Option<usize>,
    attached: &BTreeSet<usize>,
) -> Res<HexStrip> {
    let h = hexes.len();
    if h == 0 {
        return fail("2-connected block without hexagons");
    }
    let mut parent: Vec<usize> = (0..h).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut shared: Vec<(usize, usize, (usize, usize))> = Vec::new();
    for i in 0..h {
        for j in i + 1..h {
            match hexagon_intersection_type(hexes[i], hexes[j], g)? {
                Intersection::DiagonalPair | Intersection::P4Share => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                Intersection::SharedEdge => {
                    let c: Vec<usize> = hexes[i].iter().copied().filter(|v| hexes[j].contains(v)).collect();
                    shared.push((i, j, (c[0].min(c[1]), c[0].max(c[1]))));
                }
                Intersection::Disjoint | Intersection::OneVertex => {}
            }
        }
    }
    let roots: Vec<usize> = {
        let mut r: Vec<usize> = (0..h).map(|i| find(&mut parent, i)).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let nb = roots.len();
    let idx = |r: usize| roots.iter().position(|&x| x == r).unwrap();
    let mut block_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nb];
    for (i, hx) in hexes.iter().enumerate() {
        let b = idx(find(&mut parent, i));
        block_sets[b].extend(hx.iter().copied());
    }
    let covered: BTreeSet<usize> = block_sets.iter().flatten().copied().collect();
    if covered != *verts {
        return fail("hexagons do not cover their 2-connected block");
    }
    let mut adj: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new(); nb];
    for &(i, j, e) in &shared {
        let (a, b) = (idx(find(&mut parent, i)), idx(find(&mut parent, j)));
        if a == b {
            return fail("hexagons of one block share only an edge");
        }
        match adj[a].iter().find(|&&(x, _)| x == b) {
            Some(&(_, e2)) if e2 != e => return fail("two blocks share more than one edge"),
            Some(_) => {}
            None => {
                adj[a].push((b, e));
                adj[b].push((a, e));
            }
        }
    }
    for a in 0..nb {
        for b in a + 1..nb {
            let common: Vec<usize> = block_sets[a].intersection(&block_sets[b]).copied().collect();
            let expect = adj[a].iter().find(|&&(x, _)| x == b).map(|&(_, e)| vec![e.0, e.1]);
            if common != expect.unwrap_or_default() {
                return fail("blocks overlap outside a shared edge");
            }
        }
    }
    if adj.iter().any(|l| l.len() > 2) {
        return fail("block adjacency is not a path");
    }
    let ends: Vec<usize> = (0..nb).filter(|&b| adj[b].len() <= 1).collect();
    if ends.is_empty() || (nb > 1 && ends.len() != 2) {
        return fail("block adjacency is not a path");
    }
    let free_side =
        |b: usize, v: usize| block_sets[b].contains(&v) && !adj[b].iter().any(|&(_, e)| e.0 == v || e.1 == v);
    let start = if nb == 1 {
        0
    } else {
        let (e0, e1) = (ends[0], ends[1]);
        match (gl, gr) {
            (Some(v), _) if free_side(e0, v) => e0,
            (Some(v), _) if free_side(e1, v) => e1,
            (_, Some(v)) if free_side(e1, v) => e0,
            (_, Some(v)) if free_side(e0, v) => e1,
            _ => {
                let m = |b: usize| *block_sets[b].iter().next().unwrap();
                if m(e0) <= m(e1) {
                    e0
                } else {
                    e1
                }
            }
        }
    };
    let mut order = vec![start];
    while order.len() < nb {
        let cur = *order.last().unwrap();
        let prev = order.len().checked_sub(2).map(|i| order[i]);
        let next = adj[cur].iter().find(|&&(x, _)| Some(x) != prev).map(|&(x, _)| x);
        match next {
            Some(x) => order.push(x),
            None => return fail("block path broken"),
        }
    }
    let edge_between = |a: usize, b: usize| adj[a].iter().find(|&&(x, _)| x == b).map(|&(_, e)| e);
    let mut blocks: Vec<StripBlock> = Vec::with_capacity(nb);
    for (p, &bi) in order.iter().enumerate() {
        let lfix = (p > 0).then(|| edge_between(order[p - 1], bi).unwrap());
        let rfix = (p + 1 < nb).then(|| edge_between(bi, order[p + 1]).unwrap());
        let prefer_a = blocks.last().map(|b: &StripBlock| b.paths[1].1);
        let req_l = if p == 0 { gl } else { None };
        let req_r = if p + 1 == nb { gr } else { None };
        let block =
            orient_block(g, &block_sets[bi], lfix, rfix, req_l, req_r, attached, prefer_a).ok_or_else(|| {
                StructureError::Undecomposable(format!(
                    "no orientation of block {:?} fits its attachments",
                    block_sets[bi]
                ))
            })?;
        blocks.push(block);
    }
    let s = HexStrip::from_blocks(blocks);
    debug_assert!(s.is_consistent());
    Ok(s)
}

fn same_edge(e: (usize, usize), x: usize, y: usize) -> bool {
    (e.0 == x && e.1 == y) || (e.0 == y && e.1 == x)
}

#[allow(clippy::too_many_arguments)]
fn orient_block(
    g: &Graph,
    set: &BTreeSet<usize>,
    lfix: Option<(usize, usize)>,
    rfix: Option<(usize, usize)>,
    req_l: Option<usize>,
    req_r: Option<usize>,
    attached: &BTreeSet<usize>,
    prefer_a: Option<usize>,
) -> Option<StripBlock> {
    let inner = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|u| set.contains(u)).collect() };
    let poles: Vec<usize> = set.iter().copied().filter(|&v| inner(v).len() >= 3).collect();
    let candidates: Vec<usize> = match poles.len() {
        0 if set.len() == 6 => set.iter().copied().collect(),
        2 => poles,
        _ => return None,
    };
    let mut best: Option<((bool, usize, usize, usize), StripBlock)> = None;
    for &a in &candidates {
        let paths: Vec<(usize, usize)> = inner(a)
            .into_iter()
            .filter_map(|x| {
                let y = inner(x).into_iter().find(|&y| y != a)?;
                Some((x, y))
            })
            .collect();
        let bs: BTreeSet<usize> = paths
            .iter()
            .filter_map(|&(_, y)| inner(y).into_iter().find(|&z| paths.iter().all(|p| p.0 != z) && z != a))
            .collect();
        if bs.len() != 1 || paths.len() < 2 {
            continue;
        }
        let b = *bs.iter().next().unwrap();
        if paths.len() * 2 + 2 != set.len() {
            continue;
        }
        for (i1, &p1) in paths.iter().enumerate() {
            for (i2, &p2) in paths.iter().enumerate() {
                if i1 == i2 {
                    continue;
                }
                if lfix.is_some_and(|e| !same_edge(e, a, p1.0)) {
                    continue;
                }
                if rfix.is_some_and(|e| !same_edge(e, p2.1, b)) {
                    continue;
                }
                let in_l = |v: usize| v == a || v == p1.0;
                let in_r = |v: usize| v == b || v == p2.1;
                if req_l.is_some_and(|v| !in_l(v)) || req_r.is_some_and(|v| !in_r(v)) {
                    continue;
                }
                if set.iter().any(|&v| attached.contains(&v) && !in_l(v) && !in_r(v)) {
                    continue;
                }
                let key = (prefer_a.is_some_and(|pa| pa != a), a, p1.0, p2.1);
                if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                let mut rest: Vec<(usize, usize)> = paths.iter().copied().filter(|&p| p != p1 && p != p2).collect();
                rest.sort_unstable();
                let mut all = vec![p1, p2];
                all.extend(rest);
                best = Some((key, StripBlock { a, b, paths: all }));
            }
        }
    }
    best.map(|(_, b)| b)
}
