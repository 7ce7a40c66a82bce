//! Oriented link diagrams, annular markings and complete resolutions.

mod annular;
pub mod families;
mod pd;
mod tangle;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

pub use annular::{mark_axis, AnnularDiagram, RayStep};
pub use pd::{parse_annular_pd, parse_braid, parse_pd};
pub use tangle::{Slice, Tangle};

pub type ArcId = u32;

/// (crossing index, slot) with slots numbered counterclockwise from the incoming under-strand.
pub type Slot = (usize, u8);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arc {arc} appears {count} times, expected 2 (byte {pos})")]
    ArcMultiplicity { arc: ArcId, count: usize, pos: usize },
    #[error("inconsistent orientation at crossing {crossing} (byte {pos})")]
    Orientation { crossing: usize, pos: usize },
    #[error("diagram is not planar: {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("braid generator {index} out of range for {strands} strands")]
    BraidIndex { index: i32, strands: usize },
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("unknown arc {0}")]
    UnknownArc(ArcId),
    #[error("state has {got} bits but the diagram has {expected} crossings")]
    StateLength { got: usize, expected: usize },
    #[error("face {0} cannot reach the outer face")]
    DisconnectedAxis(usize),
    #[error("invalid tangle: {0}")]
    Tangle(String),
    #[error("too many crossings ({0}); at most 63 are supported")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub id: usize,
    pub half_edges: [ArcId; 4],
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResolutionState {
    pub bits: u64,
    pub len: usize,
}

impl ResolutionState {
    pub fn new(bits: u64, len: usize) -> Self {
        ResolutionState { bits, len }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut b = 0u64;
        for (i, &x) in bits.iter().enumerate() {
            if x != 0 {
                b |= 1 << i;
            }
        }
        ResolutionState { bits: b, len: bits.len() }
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circle {
    pub id: usize,
    pub winding: i32,
    pub arcs: Vec<ArcId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateCircles {
    pub state: ResolutionState,
    pub circles: Vec<Circle>,
    /// For each crossing, the circles on either side of its smoothing (equal when one circle passes twice).
    pub incidence: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Faces {
    /// Each face as its list of corners; corner (c, s) is the sector between slots s and s+1.
    pub faces: Vec<Vec<Slot>>,
    corner_face: Vec<[usize; 4]>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, corner: Slot) -> usize {
        self.corner_face[corner.0][corner.1 as usize]
    }
}

/// Crossings before orientation: four arcs counterclockwise, under-strand on slots 0 and 2.
#[derive(Debug, Clone)]
pub(crate) struct Raw {
    pub crossings: Vec<[ArcId; 4]>,
    pub loops: Vec<ArcId>,
    pub positions: Vec<usize>,
}

/// One traversal of a component in the raw diagram: (arc, tail, head) in order.
pub(crate) type Trace = Vec<(ArcId, Slot, Slot)>;

#[derive(Debug, Clone)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    loops: Vec<ArcId>,
    labels: Vec<ArcId>,
    index: BTreeMap<ArcId, usize>,
    components: Vec<Vec<ArcId>>,
    arc_component: Vec<usize>,
    slot_arc: Vec<[u32; 4]>,
    tail: Vec<Option<Slot>>,
    head: Vec<Option<Slot>>,
    n_plus: usize,
    n_minus: usize,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.loops == other.loops
            && self.components == other.components
    }
}

impl Eq for LinkDiagram {}

fn occurrences(raw: &Raw) -> Result<BTreeMap<ArcId, Vec<Slot>>, DiagramError> {
    let mut occ: BTreeMap<ArcId, Vec<Slot>> = BTreeMap::new();
    for (c, x) in raw.crossings.iter().enumerate() {
        for (s, &a) in x.iter().enumerate() {
            occ.entry(a).or_default().push((c, s as u8));
        }
    }
    for (&a, v) in &occ {
        if v.len() != 2 {
            let pos = raw.positions.get(v[0].0).copied().unwrap_or(0);
            return Err(DiagramError::ArcMultiplicity { arc: a, count: v.len(), pos });
        }
    }
    let mut seen = BTreeSet::new();
    for &l in &raw.loops {
        if occ.contains_key(&l) || !seen.insert(l) {
            return Err(DiagramError::ArcMultiplicity {
                arc: l,
                count: occ.get(&l).map_or(0, |v| v.len()) + 2,
                pos: 0,
            });
        }
    }
    Ok(occ)
}

pub(crate) fn traces(raw: &Raw) -> Result<Vec<Trace>, DiagramError> {
    let occ = occurrences(raw)?;
    let other = |a: ArcId, s: Slot| -> Slot {
        let v = &occ[&a];
        if v[0] == s {
            v[1]
        } else {
            v[0]
        }
    };
    let mut visited = BTreeSet::new();
    let mut out = Vec::new();
    for (&a, v) in &occ {
        if visited.contains(&a) {
            continue;
        }
        let mut trace = Vec::new();
        let (mut arc, mut tail) = (a, v[0]);
        loop {
            let head = other(arc, tail);
            visited.insert(arc);
            trace.push((arc, tail, head));
            let next_slot = (head.0, (head.1 + 2) % 4);
            let next = raw.crossings[next_slot.0][next_slot.1 as usize];
            if next == a && next_slot == v[0] {
                break;
            }
            arc = next;
            tail = next_slot;
        }
        out.push(trace);
    }
    Ok(out)
}

pub(crate) fn reversed(trace: &Trace) -> Trace {
    let mut t: Trace = trace.iter().rev().map(|&(a, t, h)| (a, h, t)).collect();
    let k = t.iter().enumerate().min_by_key(|(_, x)| x.0).map(|(i, _)| i).unwrap_or(0);
    t.rotate_left(k);
    t
}

/// Keep the traversal that leaves the lowest arc toward its lower-labelled neighbour.
pub(crate) fn lowest_arc_rule(trace: &Trace) -> bool {
    trace.len() < 2 || trace[1].0 <= trace[trace.len() - 1].0
}

impl LinkDiagram {
    /// Orient a raw diagram; `keep(trace)` says whether the given traversal is the orientation.
    pub(crate) fn assemble(
        raw: &Raw,
        keep: &mut dyn FnMut(&Trace) -> Result<bool, DiagramError>,
    ) -> Result<LinkDiagram, DiagramError> {
        if raw.crossings.len() > 63 {
            return Err(DiagramError::TooLarge(raw.crossings.len()));
        }
        let mut oriented = Vec::new();
        for t in traces(raw)? {
            if keep(&t)? {
                oriented.push(t);
            } else {
                oriented.push(reversed(&t));
            }
        }
        let mut head_of: BTreeMap<ArcId, Slot> = BTreeMap::new();
        for t in &oriented {
            for &(a, _, h) in t {
                head_of.insert(a, h);
            }
        }
        let n = raw.crossings.len();
        let mut crossings = Vec::with_capacity(n);
        let mut rot = Vec::with_capacity(n);
        for (c, x) in raw.crossings.iter().enumerate() {
            let r = if head_of[&x[0]] == (c, 0) {
                0
            } else if head_of[&x[2]] == (c, 2) {
                2
            } else {
                let pos = raw.positions.get(c).copied().unwrap_or(0);
                return Err(DiagramError::Orientation { crossing: c, pos });
            };
            let pd = [x[r], x[(r + 1) % 4], x[(r + 2) % 4], x[(r + 3) % 4]];
            let over_in = (c, ((r + 3) % 4) as u8);
            let sign = if head_of[&pd[3]] == over_in { 1 } else { -1 };
            crossings.push(Crossing { id: c, half_edges: pd, sign });
            rot.push(r);
        }
        let to_pd = |s: Slot| -> Slot { (s.0, ((s.1 as usize + 4 - rot[s.0]) % 4) as u8) };

        let mut labels: Vec<ArcId> = head_of.keys().copied().chain(raw.loops.iter().copied()).collect();
        labels.sort_unstable();
        let index: BTreeMap<ArcId, usize> = labels.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut tail = vec![None; labels.len()];
        let mut head = vec![None; labels.len()];
        let mut comps: Vec<Vec<ArcId>> = Vec::new();
        for t in &oriented {
            for &(a, tl, hd) in t {
                tail[index[&a]] = Some(to_pd(tl));
                head[index[&a]] = Some(to_pd(hd));
            }
            comps.push(t.iter().map(|x| x.0).collect());
        }
        for &l in &raw.loops {
            comps.push(vec![l]);
        }
        comps.sort_by_key(|c| *c.iter().min().unwrap());
        let mut arc_component = vec![0; labels.len()];
        for (ci, c) in comps.iter().enumerate() {
            for a in c {
                arc_component[index[a]] = ci;
            }
        }
        let slot_arc = crossings
            .iter()
            .map(|x| x.half_edges.map(|a| index[&a] as u32))
            .collect();
        let n_plus = crossings.iter().filter(|x| x.sign > 0).count();
        let d = LinkDiagram {
            n_minus: n - n_plus,
            n_plus,
            crossings,
            loops: raw.loops.clone(),
            labels,
            index,
            components: comps,
            arc_component,
            slot_arc,
            tail,
            head,
        };
        d.check_planar()?;
        Ok(d)
    }

    /// Orientation forced by the PD convention (slot 0 is the incoming under-strand).
    pub(crate) fn from_raw_pd(raw: &Raw) -> Result<LinkDiagram, DiagramError> {
        let mut keep = |t: &Trace| -> Result<bool, DiagramError> {
            let mut vote: Option<(bool, usize)> = None;
            for &(_, tl, hd) in t {
                for (s, forward) in [(hd, hd.1 == 0), (tl, tl.1 == 2)] {
                    if s.1 % 2 == 1 {
                        continue;
                    }
                    match vote {
                        None => vote = Some((forward, s.0)),
                        Some((v, _)) if v != forward => {
                            let pos = raw.positions.get(s.0).copied().unwrap_or(0);
                            return Err(DiagramError::Orientation { crossing: s.0, pos });
                        }
                        _ => {}
                    }
                }
            }
            Ok(vote.map_or_else(|| lowest_arc_rule(t), |v| v.0))
        };
        LinkDiagram::assemble(raw, &mut keep)
    }

    pub(crate) fn raw(&self) -> Raw {
        Raw {
            crossings: self.crossings.iter().map(|c| c.half_edges).collect(),
            loops: self.loops.clone(),
            positions: vec![],
        }
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let f = self.faces();
        let n = self.crossings.len();
        // components of the crossing graph
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (i, t) in self.tail.iter().enumerate() {
            if let (Some(t), Some(h)) = (t, self.head[i]) {
                let (a, b) = (find(&mut parent, t.0), find(&mut parent, h.0));
                parent[a] = b;
            }
        }
        let graph_components = (0..n).filter(|&x| find(&mut parent, x) == x).count();
        let expected = n + 2 * graph_components;
        let got = if n == 0 { expected } else { f.len() };
        if got != expected {
            return Err(DiagramError::NonPlanar { faces: got, expected });
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn loops(&self) -> &[ArcId] {
        &self.loops
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.labels
    }

    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn component_of(&self, arc: ArcId) -> Result<usize, DiagramError> {
        self.index
            .get(&arc)
            .map(|&i| self.arc_component[i])
            .ok_or(DiagramError::UnknownArc(arc))
    }

    pub(crate) fn arc_index(&self, arc: ArcId) -> Option<usize> {
        self.index.get(&arc).copied()
    }

    pub(crate) fn label(&self, i: usize) -> ArcId {
        self.labels[i]
    }

    pub(crate) fn slot_arcs(&self) -> &[[u32; 4]] {
        &self.slot_arc
    }

    fn partner(&self, s: Slot) -> Slot {
        let a = self.slot_arc[s.0][s.1 as usize] as usize;
        let (t, h) = (self.tail[a].unwrap(), self.head[a].unwrap());
        if t == s {
            h
        } else {
            t
        }
    }

    /// Faces of the crossing graph from the rotation system. Crossingless diagrams use nested
    /// loops: face 0 is outside every loop and face f lies inside loops 0..f.
    pub fn faces(&self) -> Faces {
        let n = self.crossings.len();
        if n == 0 {
            let faces = (0..=self.loops.len()).map(|_| Vec::new()).collect();
            return Faces { faces, corner_face: vec![] };
        }
        let mut corner_face = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                if corner_face[c][s as usize] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut face = Vec::new();
                let mut cur = (c, s);
                while corner_face[cur.0][cur.1 as usize] == usize::MAX {
                    corner_face[cur.0][cur.1 as usize] = id;
                    face.push(cur);
                    cur = self.partner((cur.0, (cur.1 + 1) % 4));
                }
                faces.push(face);
            }
        }
        Faces { faces, corner_face }
    }

    /// Faces to the left and right of an arc, following its orientation.
    pub(crate) fn arc_sides(&self, faces: &Faces, i: usize) -> Option<(usize, usize)> {
        let t = self.tail[i]?;
        Some((faces.face_of(t), faces.face_of((t.0, (t.1 + 3) % 4))))
    }

    pub fn to_pd(&self) -> String {
        let mut items: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let e = c.half_edges;
                format!("X[{},{},{},{}]", e[0], e[1], e[2], e[3])
            })
            .collect();
        items.extend(self.loops.iter().map(|l| format!("Loop[{l}]")));
        format!("PD[{}]", items.join(","))
    }

    /// Over and under strands exchanged at every crossing; orientation kept.
    pub fn mirror(&self) -> LinkDiagram {
        let raw = Raw {
            crossings: self
                .crossings
                .iter()
                .map(|c| {
                    let e = c.half_edges;
                    [e[1], e[2], e[3], e[0]]
                })
                .collect(),
            loops: self.loops.clone(),
            positions: vec![],
        };
        // slot s of the new raw crossing is slot s+1 of the old one
        let heads: BTreeMap<ArcId, Slot> = (0..self.labels.len())
            .filter_map(|i| self.head[i].map(|h| (self.labels[i], (h.0, (h.1 + 3) % 4))))
            .collect();
        LinkDiagram::assemble(&raw, &mut |t| Ok(heads[&t[0].0] == t[0].2)).expect("mirror of a valid diagram")
    }

    pub fn reverse_components(&self, which: &[usize]) -> Result<LinkDiagram, DiagramError> {
        for &w in which {
            if w >= self.components.len() {
                return Err(DiagramError::UnknownComponent(w));
            }
        }
        let heads: BTreeMap<ArcId, Slot> = (0..self.labels.len())
            .filter_map(|i| self.head[i].map(|h| (self.labels[i], h)))
            .collect();
        let flip: BTreeSet<ArcId> = which.iter().flat_map(|&w| self.components[w].iter().copied()).collect();
        LinkDiagram::assemble(&self.raw(), &mut |t| {
            let a = t[0].0;
            Ok((heads[&a] == t[0].2) != flip.contains(&a))
        })
    }

    pub fn linking_number(&self, c1: usize, c2: usize) -> Result<i64, DiagramError> {
        let k = self.components.len();
        for c in [c1, c2] {
            if c >= k {
                return Err(DiagramError::UnknownComponent(c));
            }
        }
        if c1 == c2 {
            return Err(DiagramError::UnknownComponent(c2));
        }
        let mut total = 0i64;
        for (x, sa) in self.crossings.iter().zip(&self.slot_arc) {
            let under = self.arc_component[sa[0] as usize];
            let over = self.arc_component[sa[1] as usize];
            if (under == c1 && over == c2) || (under == c2 && over == c1) {
                total += x.sign as i64;
            }
        }
        Ok(total / 2)
    }

    /// Circle of each arc for a state, and the number of circles. Circles are numbered by
    /// their lowest arc.
    pub(crate) fn circles_of(&self, bits: u64) -> (Vec<u32>, usize) {
        let m = self.labels.len();
        let mut circle = vec![u32::MAX; m];
        let mut count = 0u32;
        for start in 0..m {
            if circle[start] != u32::MAX {
                continue;
            }
            let (mut a, mut forward) = (start, true);
            loop {
                circle[a] = count;
                let end = if forward { self.head[a] } else { self.tail[a] };
                let Some((c, s)) = end else { break };
                let s2 = smoothing_partner(bits >> c & 1 == 1, s);
                let next = self.slot_arc[c][s2 as usize] as usize;
                if next == start {
                    break;
                }
                forward = self.tail[next] == Some((c, s2));
                a = next;
            }
            count += 1;
        }
        (circle, count as usize)
    }

    /// Arcs of each circle, each with its traversal direction relative to the link orientation.
    pub(crate) fn circle_paths(&self, bits: u64) -> Vec<Vec<(usize, bool)>> {
        let m = self.labels.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut path = Vec::new();
            let (mut a, mut forward) = (start, true);
            loop {
                seen[a] = true;
                path.push((a, forward));
                let end = if forward { self.head[a] } else { self.tail[a] };
                let Some((c, s)) = end else { break };
                let s2 = smoothing_partner(bits >> c & 1 == 1, s);
                let next = self.slot_arc[c][s2 as usize] as usize;
                if next == start {
                    break;
                }
                forward = self.tail[next] == Some((c, s2));
                a = next;
            }
            out.push(path);
        }
        out
    }

    pub fn resolve(&self, state: &ResolutionState) -> Result<StateCircles, DiagramError> {
        self.resolve_with(state, &vec![0; self.labels.len()])
    }

    pub(crate) fn resolve_with(&self, state: &ResolutionState, ray_sign: &[i32]) -> Result<StateCircles, DiagramError> {
        if state.len != self.crossings.len() {
            return Err(DiagramError::StateLength { got: state.len, expected: self.crossings.len() });
        }
        let paths = self.circle_paths(state.bits);
        let mut arc_circle = vec![0usize; self.labels.len()];
        let circles = paths
            .iter()
            .enumerate()
            .map(|(id, p)| {
                let mut w = 0;
                for &(a, f) in p {
                    arc_circle[a] = id;
                    w += if f { ray_sign[a] } else { -ray_sign[a] };
                }
                assert!(w.abs() <= 1, "circle winding {w} outside [-1, 1]");
                let mut arcs: Vec<ArcId> = p.iter().map(|&(a, _)| self.labels[a]).collect();
                arcs.sort_unstable();
                Circle { id, winding: w, arcs }
            })
            .collect();
        let incidence = self
            .slot_arc
            .iter()
            .enumerate()
            .map(|(c, sa)| {
                let other = if state.bit(c) { 1 } else { 2 };
                [arc_circle[sa[0] as usize], arc_circle[sa[other] as usize]]
            })
            .collect();
        Ok(StateCircles { state: *state, circles, incidence })
    }

    /// The braid closure of a word in the generators 1..strands-1 (negative for inverses).
    pub fn from_braid_word(word: &[i32], strands: usize) -> Result<LinkDiagram, DiagramError> {
        Ok(Tangle::braid(word, strands)?.closure()?.base().clone())
    }

    /// Diagram with crossing `c` smoothed (0 or 1) and the chosen orientation per component.
    /// Returns the raw diagram together with, for every old arc, its new label and whether
    /// its direction is preserved under the traversal used to build the new labels.
    pub(crate) fn smooth(&self, c: usize, one: bool) -> (Raw, BTreeMap<ArcId, (ArcId, bool)>) {
        let n = self.crossings.len();
        let m = self.labels.len();
        // walk old arcs joined through the smoothing at c
        let mut piece: Vec<Option<(ArcId, bool)>> = vec![None; m];
        let step = |a: usize, forward: bool| -> Option<(usize, bool)> {
            let (cc, s) = if forward { self.head[a]? } else { self.tail[a]? };
            if cc != c {
                return None;
            }
            let s2 = smoothing_partner(one, s);
            let next = self.slot_arc[c][s2 as usize] as usize;
            Some((next, self.tail[next] == Some((c, s2))))
        };
        let mut new_loops = Vec::new();
        for start in 0..m {
            if piece[start].is_some() {
                continue;
            }
            if self.tail[start].is_none() {
                piece[start] = Some((self.labels[start], true));
                new_loops.push(self.labels[start]);
                continue;
            }
            // back up to a beginning outside c, or detect a closed chain
            let (mut a, mut f) = (start, true);
            let mut closed = false;
            let mut guard = 0;
            loop {
                // move backwards: reverse direction, step, reverse again
                match step(a, !f) {
                    Some((b, g)) => {
                        a = b;
                        f = !g;
                    }
                    None => break,
                }
                guard += 1;
                if a == start || guard > 4 {
                    closed = a == start;
                    break;
                }
            }
            let mut chain = vec![(a, f)];
            loop {
                let (x, g) = *chain.last().unwrap();
                match step(x, g) {
                    Some((b, h)) if !(closed && b == chain[0].0) => chain.push((b, h)),
                    _ => break,
                }
            }
            let label = chain.iter().map(|&(x, _)| self.labels[x]).min().unwrap();
            for &(x, g) in &chain {
                piece[x] = Some((label, g));
            }
            if closed {
                new_loops.push(label);
            }
        }
        let pieces: BTreeMap<ArcId, (ArcId, bool)> =
            (0..m).map(|i| (self.labels[i], piece[i].unwrap())).collect();
        let mut crossings = Vec::with_capacity(n - 1);
        for (k, x) in self.crossings.iter().enumerate() {
            if k != c {
                crossings.push(x.half_edges.map(|a| pieces[&a].0));
            }
        }
        new_loops.sort_unstable();
        new_loops.dedup();
        (Raw { crossings, loops: new_loops, positions: vec![] }, pieces)
    }

    /// Heads (in raw slot numbering of `smooth`) implied by the old orientation.
    pub(crate) fn inherited_heads(&self, c: usize, pieces: &BTreeMap<ArcId, (ArcId, bool)>) -> BTreeMap<ArcId, Slot> {
        let mut heads = BTreeMap::new();
        for i in 0..self.labels.len() {
            let (new, same) = pieces[&self.labels[i]];
            let end = if same { self.head[i] } else { self.tail[i] };
            if let Some((cc, s)) = end {
                if cc != c {
                    let idx = if cc > c { cc - 1 } else { cc };
                    heads.entry(new).or_insert((idx, s));
                }
            }
        }
        heads
    }
}

pub(crate) fn smoothing_partner(one: bool, s: u8) -> u8 {
    if one {
        3 - s
    } else {
        s ^ 1
    }
}

impl std::fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_pd())
    }
}

#[cfg(test)]
mod tests;
