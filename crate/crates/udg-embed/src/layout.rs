//! Placement of decomposed components before twin copies are added.

use std::collections::HashMap;

use udg_graph::Part;
use udg_structure::{ComponentDecomp, Leg, Lobster, Piece, StripBlock};

use crate::block::{BlockGeometry, BlockPoints, Lines};
use crate::twins::CopyClass;
use crate::vec2::{v2, V2};
use crate::EmbedError;

/// Points under construction plus the copy classes still to place.
pub struct Layout {
    pub pts: Vec<Option<V2>>,
    pub parts: Vec<Part>,
    pub classes: Vec<CopyClass>,
}

impl Layout {
    pub fn new(parts: Vec<Part>) -> Layout {
        Layout {
            pts: vec![None; parts.len()],
            parts,
            classes: Vec::new(),
        }
    }

    fn top(&self, v: usize) -> bool {
        self.parts[v] == Part::W
    }

    fn set(&mut self, v: usize, p: V2) {
        if self.pts[v].is_none() {
            self.pts[v] = Some(p);
        }
    }

    fn force(&mut self, v: usize, p: V2) {
        self.pts[v] = Some(p);
    }

    fn at(&self, v: usize) -> Result<V2, EmbedError> {
        self.pts[v].ok_or_else(|| EmbedError::Precondition(format!("vertex {v} placed before use")))
    }

    /// Legs of one spine vertex: the first leg with a foot goes to
    /// `base`/`foot`, the others and any bare leaf become copies along `dir`.
    fn legs(&mut self, legs: &[Leg], base: V2, foot: V2, dir: V2, scale: f64) {
        let (full, bare): (Vec<&Leg>, Vec<&Leg>) = legs.iter().partition(|l| l.foot.is_some());
        let Some(first) = full.first().or(bare.first()) else {
            return;
        };
        self.set(first.leg, base);
        if let Some(f) = first.foot {
            self.set(f, foot);
        }
        let mut copies = Vec::new();
        for l in full.iter().chain(bare.iter()).skip(1) {
            let mut c = vec![(first.leg, l.leg)];
            if let (Some(f0), Some(f)) = (first.foot, l.foot) {
                c.push((f0, f));
            }
            copies.push(c);
        }
        if !copies.is_empty() {
            self.classes.push(CopyClass {
                axis: dir,
                copies,
                scale,
            });
        }
    }

    /// Leaves of the end edge `{p, q}` on the line through it, at unit
    /// distance from their host.
    fn pend_edge(&mut self, e: (usize, usize), pend: &HashMap<usize, usize>) -> Result<(), EmbedError> {
        let (pe, qe) = (self.at(e.0)?, self.at(e.1)?);
        for (host, other) in [(e.0, pe.sub_to(qe)), (e.1, qe.sub_to(pe))] {
            if let Some(&leaf) = pend.get(&host) {
                let h = self.at(host)?;
                self.set(leaf, h + other.unit());
            }
        }
        Ok(())
    }
}

trait SubTo {
    fn sub_to(self, o: V2) -> V2;
}

impl SubTo for V2 {
    /// Vector from `self` to `o`.
    fn sub_to(self, o: V2) -> V2 {
        o - self
    }
}

fn other(e: (usize, usize), v: usize) -> usize {
    if e.0 == v {
        e.1
    } else {
        e.0
    }
}

/// Places one block. `a` on top means poles `b1`/`g3`, else `g1`/`b3`.
fn place_block(lay: &mut Layout, bl: &StripBlock, p: &BlockPoints, scale: f64) {
    let top = lay.top(bl.a);
    let (p1, p2) = (bl.paths[0], bl.paths[1]);
    let (extra_x, extra_y);
    if top {
        lay.set(bl.a, p.b1);
        lay.set(p1.0, p.g1);
        lay.set(p1.1, p.g2);
        lay.set(bl.b, p.g3);
        lay.set(p2.0, p.b2);
        lay.set(p2.1, p.b3);
        (extra_x, extra_y) = (p.r1, p.r2);
    } else {
        lay.set(bl.a, p.g1);
        lay.set(p1.0, p.b1);
        lay.set(p1.1, p.b2);
        lay.set(bl.b, p.b3);
        lay.set(p2.0, p.g2);
        lay.set(p2.1, p.g3);
        (extra_x, extra_y) = (p.s2, p.s1);
    }
    if let Some(&(x, y)) = bl.paths.get(2) {
        lay.set(x, extra_x);
        lay.set(y, extra_y);
        let d = (extra_y - extra_x).unit();
        let mut axis = v2(d.y, -d.x);
        if axis.x < 0.0 {
            axis = -axis;
        }
        let copies: Vec<Vec<(usize, usize)>> = bl.paths[3..].iter().map(|&(cx, cy)| vec![(x, cx), (y, cy)]).collect();
        if !copies.is_empty() {
            lay.classes.push(CopyClass { axis, copies, scale });
        }
    }
}

/// Spine vertices away from any block: alternate inner lines, legs on the
/// opposite outer line with feet on their own side.
fn plain_spine_legs(lay: &mut Layout, s: usize, legs: &[Leg], lines: &Lines, scale: f64) -> Result<(), EmbedError> {
    let ps = lay.at(s)?;
    let top = lay.top(s);
    let base = v2(ps.x, lines.outer(!top));
    let foot = v2(ps.x, lines.outer(top));
    lay.legs(legs, base, foot, v2(1.0, 0.0), scale);
    Ok(())
}

/// Standalone lobster on four lines with spine step `mu`.
pub fn layout_lobster(lay: &mut Layout, l: &Lobster, mu: f64) -> Result<Lines, EmbedError> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(EmbedError::Parameter(format!("mu = {mu} outside (0, 1)")));
    }
    let h = (1.0 - mu * mu).sqrt();
    let lines = Lines::from_inner((1.0 - h) / 2.0, h);
    for (i, &s) in l.spine.iter().enumerate() {
        let y = lines.inner(lay.top(s));
        lay.set(s, v2(i as f64 * mu, y));
    }
    for (i, &s) in l.spine.iter().enumerate() {
        plain_spine_legs(lay, s, &l.legs[i], &lines, mu)?;
    }
    Ok(lines)
}

fn lobster_of(p: &Piece) -> Option<&Lobster> {
    match p {
        Piece::Lobster(l) => Some(l),
        Piece::Strip(_) => None,
    }
}

/// Lays out a component with at least one strip, left to right.
pub fn layout_chain(lay: &mut Layout, c: &ComponentDecomp, geo: &BlockGeometry) -> Result<(), EmbedError> {
    let pend: HashMap<usize, usize> = c.pendants.iter().map(|&(leaf, host)| (host, leaf)).collect();
    let eps = geo.eps;
    let lines = geo.lines;
    let mut x_next = 0.0;
    let n = c.pieces.len();
    for (pi, piece) in c.pieces.iter().enumerate() {
        let Piece::Strip(s) = piece else { continue };
        let left = if pi > 0 { lobster_of(&c.pieces[pi - 1]) } else { None };
        let left_end = left.is_some() && pi == 1;
        let right = c.pieces.get(pi + 1).and_then(lobster_of);
        let x0 = if left.is_some() && !left_end { x_next } else { 0.0 };
        let mut x = x0;
        for bl in &s.blocks {
            place_block(lay, bl, &geo.at(x), eps);
            x += geo.period;
        }
        x -= geo.period;
        if left.is_none() {
            lay.pend_edge(s.first_edge(), &pend)?;
        }
        for e in s.shared_edges() {
            lay.pend_edge(e, &pend)?;
        }
        if let (true, Some(l)) = (left_end, left) {
            let v = *l.spine.last().unwrap();
            let m = l.spine.len();
            let top = lay.top(v);
            let a = geo.attach(x0, false, top);
            let u = other(s.first_edge(), v);
            lay.force(u, a.u1);
            if let Some(&leaf) = pend.get(&u) {
                lay.set(leaf, a.h1);
            }
            lay.legs(&l.legs[m - 1], a.a3, a.a4, a.dx, eps);
            let pv = lay.at(v)?;
            for i in 0..m - 1 {
                let sv = l.spine[i];
                let y = lines.inner(lay.top(sv));
                lay.set(sv, v2(pv.x - (m - 1 - i) as f64 * lines.mu, y));
            }
            for i in 0..m - 1 {
                plain_spine_legs(lay, l.spine[i], &l.legs[i], &lines, eps)?;
            }
        }
        let Some(l) = right else {
            lay.pend_edge(s.last_edge(), &pend)?;
            continue;
        };
        let v = l.spine[0];
        let top = lay.top(v);
        let a = geo.attach(x, true, top);
        let u = other(s.last_edge(), v);
        lay.force(u, a.u1);
        if let Some(&leaf) = pend.get(&u) {
            lay.set(leaf, a.h1);
        }
        lay.legs(&l.legs[0], a.a3, a.a4, a.dx, eps);
        let m = l.spine.len();
        let next = match c.pieces.get(pi + 2) {
            Some(Piece::Strip(t)) => Some(t),
            _ => None,
        };
        if m == 1 {
            if let Some(t) = next {
                let u2 = other(t.first_edge(), v);
                lay.set(u2, a.u2);
                if let Some(&leaf) = pend.get(&u2) {
                    lay.set(leaf, a.h2);
                }
                x_next = x + geo.period;
            }
            continue;
        }
        let pv = lay.at(v)?;
        for i in 1..m {
            let sv = l.spine[i];
            let y = lines.inner(lay.top(sv));
            lay.set(sv, v2(pv.x + i as f64 * lines.mu, y));
        }
        let plain_end = if next.is_some() { m - 1 } else { m };
        for i in 1..plain_end {
            plain_spine_legs(lay, l.spine[i], &l.legs[i], &lines, eps)?;
        }
        if let Some(t) = next {
            let sv = l.spine[m - 1];
            let top_s = lay.top(sv);
            let ps = lay.at(sv)?;
            let xb = ps.x - if top_s { geo.base.b1.x } else { geo.base.g1.x };
            let a2 = geo.attach(xb, false, top_s);
            let u2 = other(t.first_edge(), sv);
            lay.set(u2, a2.u1);
            if let Some(&leaf) = pend.get(&u2) {
                lay.set(leaf, a2.h1);
            }
            lay.legs(&l.legs[m - 1], a2.a3, a2.a4, a2.dx, eps);
            x_next = xb;
        }
    }
    debug_assert!(n > 0);
    Ok(())
}
