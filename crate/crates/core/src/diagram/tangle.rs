use std::collections::BTreeMap;

use super::{traces, AnnularDiagram, ArcId, DiagramError, LinkDiagram, Raw, RayStep, Slot};

/// One horizontal slice of a tangle read bottom to top. Positions are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slice {
    /// New minimum inserting two strands at positions p, p+1.
    Cup(usize),
    /// Maximum joining the strands at p and p+1.
    Cap(usize),
    /// Strands at p and p+1 cross; `left_over` when the strand moving from p to p+1 is on top.
    Cross(usize, bool),
}

/// A tangle in a horizontal strip; its annular closure joins top and bottom around an axis
/// lying to the right of the strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    bottom: usize,
    slices: Vec<Slice>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum End {
    // geometric slots counterclockwise: 0 SW, 1 SE, 2 NE, 3 NW
    Slot(usize, u8),
    Open(usize),
}

impl Tangle {
    pub fn new(bottom: usize) -> Tangle {
        Tangle { bottom, slices: Vec::new() }
    }

    pub fn then(mut self, s: Slice) -> Tangle {
        self.slices.push(s);
        self
    }

    pub fn extend(mut self, s: impl IntoIterator<Item = Slice>) -> Tangle {
        self.slices.extend(s);
        self
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn braid(word: &[i32], strands: usize) -> Result<Tangle, DiagramError> {
        let mut t = Tangle::new(strands);
        for &g in word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BraidIndex { index: g, strands });
            }
            t.slices.push(Slice::Cross(g.unsigned_abs() as usize - 1, g > 0));
        }
        Ok(t)
    }

    /// Annular closure. Strands are oriented upward at the lowest bottom position they pass;
    /// components without bottom strands leave their first cup toward its left end.
    pub fn closure(&self) -> Result<AnnularDiagram, DiagramError> {
        let m = self.bottom;
        let mut edges: Vec<(End, End)> = Vec::new();
        let mut pending: Vec<End> = (0..m).map(End::Open).collect();
        let mut opens = m;
        let mut crossings = 0usize;
        let mut over_left = Vec::new();
        let mut cups = Vec::new();
        let bad = |msg: String| Err(DiagramError::Tangle(msg));
        for (k, s) in self.slices.iter().enumerate() {
            match *s {
                Slice::Cup(p) => {
                    if p > pending.len() {
                        return bad(format!("slice {k}: cup at {p} outside 0..={}", pending.len()));
                    }
                    let (u, v) = (End::Open(opens), End::Open(opens + 1));
                    cups.push(opens);
                    opens += 2;
                    edges.push((u, v));
                    pending.splice(p..p, [u, v]);
                }
                Slice::Cap(p) => {
                    if p + 1 >= pending.len() {
                        return bad(format!("slice {k}: cap at {p} needs two strands"));
                    }
                    edges.push((pending[p], pending[p + 1]));
                    pending.drain(p..p + 2);
                }
                Slice::Cross(p, lo) => {
                    if p + 1 >= pending.len() {
                        return bad(format!("slice {k}: crossing at {p} needs two strands"));
                    }
                    let c = crossings;
                    crossings += 1;
                    over_left.push(lo);
                    edges.push((pending[p], End::Slot(c, 0)));
                    edges.push((pending[p + 1], End::Slot(c, 1)));
                    pending[p] = End::Slot(c, 3);
                    pending[p + 1] = End::Slot(c, 2);
                }
            }
        }
        if pending.len() != m {
            return bad(format!("{} strands at the top, {m} at the bottom", pending.len()));
        }
        // the first edge at a bottom point leads upward
        let mut up_edge = vec![usize::MAX; m];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for e in [a, b] {
                if let End::Open(o) = e {
                    if o < m && up_edge[o] == usize::MAX {
                        up_edge[o] = i;
                    }
                }
            }
        }
        for (p, &e) in pending.iter().enumerate() {
            edges.push((e, End::Open(p)));
            if up_edge[p] == usize::MAX {
                up_edge[p] = edges.len() - 1;
            }
        }
        let mut adj: BTreeMap<End, Vec<usize>> = BTreeMap::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            adj.entry(a).or_default().push(i);
            adj.entry(b).or_default().push(i);
        }
        let far = |i: usize, from: End| if edges[i].0 == from { edges[i].1 } else { edges[i].0 };
        // raw slot for a geometric slot: under-strand on raw slots 0 and 2
        let raw_slot = |c: usize, g: u8| -> Slot {
            let off = if over_left[c] { 1 } else { 0 };
            (c, (g + 4 - off) % 4)
        };

        let mut walks: Vec<Walk> = Vec::new();
        let mut used_slot = BTreeMap::new();
        let mut used_edge = vec![false; edges.len()];
        let follow = |start: End, first: usize, used_edge: &mut Vec<bool>| -> Walk {
            let mut w = Walk { start, end: None, bottoms: vec![], cups: vec![] };
            let (mut cur, mut e) = (start, first);
            loop {
                used_edge[e] = true;
                let nxt = far(e, cur);
                let End::Open(o) = nxt else {
                    w.end = Some(nxt);
                    return w;
                };
                let ends = &adj[&nxt];
                let out = if ends[0] == e { ends[1] } else { ends[0] };
                if o < m {
                    w.bottoms.push((o, out == up_edge[o]));
                }
                if cups.contains(&o) {
                    w.cups.push(o);
                }
                if used_edge[out] {
                    return w;
                }
                cur = nxt;
                e = out;
            }
        };
        for c in 0..crossings {
            for g in 0..4u8 {
                let s = End::Slot(c, g);
                if used_slot.contains_key(&s) {
                    continue;
                }
                let w = follow(s, adj[&s][0], &mut used_edge);
                used_slot.insert(s, walks.len());
                used_slot.insert(w.end.unwrap(), walks.len());
                walks.push(w);
            }
        }
        for i in 0..edges.len() {
            if !used_edge[i] {
                walks.push(follow(edges[i].0, i, &mut used_edge));
            }
        }
        let label = |w: usize| (w + 1) as ArcId;
        let mut raw = Raw { crossings: vec![[0; 4]; crossings], loops: vec![], positions: vec![] };
        for (i, w) in walks.iter().enumerate() {
            match (w.start, w.end) {
                (End::Slot(c1, g1), Some(End::Slot(c2, g2))) => {
                    let (a, b) = (raw_slot(c1, g1), raw_slot(c2, g2));
                    raw.crossings[a.0][a.1 as usize] = label(i);
                    raw.crossings[b.0][b.1 as usize] = label(i);
                }
                _ => raw.loops.push(label(i)),
            }
        }
        // desired heads: upward at the lowest bottom point, else away from the first cup
        let mut prefer: BTreeMap<ArcId, (usize, Slot)> = BTreeMap::new();
        for (i, w) in walks.iter().enumerate() {
            let (End::Slot(c1, g1), Some(End::Slot(c2, g2))) = (w.start, w.end) else { continue };
            let (a, b) = (raw_slot(c1, g1), raw_slot(c2, g2));
            if let Some(&(p, up)) = w.bottoms.iter().min() {
                prefer.insert(label(i), (p, if up { b } else { a }));
            } else if let Some(&cup) = w.cups.iter().min() {
                prefer.insert(label(i), (m + cup, b));
            }
        }
        let mut heads: BTreeMap<ArcId, Slot> = BTreeMap::new();
        for t in traces(&raw)? {
            let best = t.iter().filter_map(|x| prefer.get(&x.0).map(|p| (p.0, x))).min_by_key(|x| x.0);
            let keep = match best {
                Some((_, &(a, _, h))) => prefer[&a].1 == h,
                None => super::lowest_arc_rule(&t),
            };
            for &(a, tl, hd) in &t {
                heads.insert(a, if keep { hd } else { tl });
            }
        }
        // consecutive labels along components
        let first = LinkDiagram::assemble(&raw, &mut |t| Ok(heads[&t[0].0] == t[0].2))?;
        let lowest = |a: &ArcId| walks[*a as usize - 1].bottoms.iter().map(|b| b.0).min();
        let mut order: Vec<(usize, usize)> = first
            .components()
            .iter()
            .enumerate()
            .map(|(ci, comp)| (comp.iter().filter_map(lowest).min().unwrap_or(usize::MAX), ci))
            .collect();
        order.sort();
        let mut rename: BTreeMap<ArcId, ArcId> = BTreeMap::new();
        let mut next = 1;
        for &(low, ci) in &order {
            let comp = &first.components()[ci];
            let k = comp.iter().position(|a| lowest(a) == Some(low)).unwrap_or(0);
            for j in 0..comp.len() {
                rename.insert(comp[(k + j) % comp.len()], next);
                next += 1;
            }
        }
        let raw2 = Raw {
            crossings: raw.crossings.iter().map(|x| x.map(|a| rename[&a])).collect(),
            loops: raw.loops.iter().map(|a| rename[a]).collect(),
            positions: vec![],
        };
        let heads2: BTreeMap<ArcId, Slot> = heads.iter().map(|(a, h)| (rename[a], *h)).collect();
        let base = LinkDiagram::assemble(&raw2, &mut |t| Ok(heads2[&t[0].0] == t[0].2))?;

        // ray from the axis (right of the strands) leftward along the bottom
        let mut ray = Vec::new();
        for p in (0..m).rev() {
            let (wi, up) = walks
                .iter()
                .enumerate()
                .find_map(|(i, w)| w.bottoms.iter().find(|b| b.0 == p).map(|b| (i, b.1)))
                .expect("bottom point on a walk");
            let old = label(wi);
            let forward = match (walks[wi].start, walks[wi].end) {
                (End::Slot(c1, g1), Some(End::Slot(c2, g2))) => {
                    let (_, b) = (raw_slot(c1, g1), raw_slot(c2, g2));
                    // walk direction agrees with the arc orientation when its end is the head
                    heads[&old] == b
                }
                _ => true,
            };
            let upward = up == forward;
            ray.push(RayStep { arc: rename[&old], left_to_right: !upward });
        }
        Ok(AnnularDiagram::from_ray(base, ray))
    }
}

struct Walk {
    start: End,
    end: Option<End>,
    // bottom points crossed, with whether the walk moves upward there
    bottoms: Vec<(usize, bool)>,
    cups: Vec<usize>,
}
