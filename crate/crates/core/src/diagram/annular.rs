use std::collections::VecDeque;

use serde::Serialize;

use super::{ArcId, DiagramError, LinkDiagram, ResolutionState, StateCircles};

/// A crossing of the axis ray with an arc; `left_to_right` is relative to the arc's orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RayStep {
    pub arc: ArcId,
    pub left_to_right: bool,
}

/// A diagram in the annulus: the axis is a marked face, and circle windings are measured
/// along a ray from the axis face to the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularDiagram {
    base: LinkDiagram,
    axis: usize,
    outer: usize,
    ray: Vec<RayStep>,
}

pub fn default_outer(d: &LinkDiagram) -> usize {
    let f = d.faces();
    if d.crossing_count() == 0 {
        return 0;
    }
    let mut best = 0;
    for (i, face) in f.faces.iter().enumerate() {
        if face.len() > f.faces[best].len() {
            best = i;
        }
    }
    best
}

impl AnnularDiagram {
    pub fn mark_axis(base: &LinkDiagram, face: usize) -> Result<AnnularDiagram, DiagramError> {
        Self::mark_axis_with_outer(base, face, default_outer(base))
    }

    pub fn mark_axis_with_outer(base: &LinkDiagram, axis: usize, outer: usize) -> Result<AnnularDiagram, DiagramError> {
        let faces = base.faces();
        for f in [axis, outer] {
            if f >= faces.len() {
                return Err(DiagramError::UnknownFace(f));
            }
        }
        if base.crossing_count() == 0 {
            let mut loops: Vec<ArcId> = base.loops().to_vec();
            loops.sort_unstable();
            let (lo, hi) = (axis.min(outer), axis.max(outer));
            let outward = axis > outer;
            let mut ray: Vec<RayStep> =
                loops[lo..hi].iter().map(|&arc| RayStep { arc, left_to_right: outward }).collect();
            if outward {
                ray.reverse();
            }
            return Ok(AnnularDiagram { base: base.clone(), axis, outer, ray });
        }
        // breadth-first search in the dual graph
        let n_arcs = base.arcs().len();
        let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); faces.len()];
        for i in 0..n_arcs {
            if let Some((l, r)) = base.arc_sides(&faces, i) {
                if l != r {
                    adj[l].push((r, i, true));
                    adj[r].push((l, i, false));
                }
            }
        }
        let mut prev: Vec<Option<(usize, usize, bool)>> = vec![None; faces.len()];
        let mut seen = vec![false; faces.len()];
        let mut queue = VecDeque::from([axis]);
        seen[axis] = true;
        while let Some(f) = queue.pop_front() {
            for &(g, arc, ltr) in &adj[f] {
                if !seen[g] {
                    seen[g] = true;
                    prev[g] = Some((f, arc, ltr));
                    queue.push_back(g);
                }
            }
        }
        if !seen[outer] {
            return Err(DiagramError::DisconnectedAxis(axis));
        }
        let mut ray = Vec::new();
        let mut f = outer;
        while let Some((p, arc, ltr)) = prev[f] {
            ray.push(RayStep { arc: base.label(arc), left_to_right: ltr });
            f = p;
        }
        ray.reverse();
        Ok(AnnularDiagram { base: base.clone(), axis, outer, ray })
    }

    /// Annular diagram from an explicit ray; the face ids are read off the ray's first and last
    /// crossings with arcs of the crossing graph.
    pub(crate) fn from_ray(base: LinkDiagram, ray: Vec<RayStep>) -> AnnularDiagram {
        let faces = base.faces();
        let sides = |s: &RayStep| {
            let i = base.arc_index(s.arc)?;
            base.arc_sides(&faces, i).map(|(l, r)| if s.left_to_right { (l, r) } else { (r, l) })
        };
        let (axis, outer) = if base.crossing_count() == 0 {
            (ray.len(), 0)
        } else {
            let first = ray.iter().find_map(|s| sides(s)).map(|x| x.0);
            let last = ray.iter().rev().find_map(|s| sides(s)).map(|x| x.1);
            let o = last.unwrap_or_else(|| default_outer(&base));
            (first.unwrap_or(o), o)
        };
        AnnularDiagram { base, axis, outer, ray }
    }

    pub fn base(&self) -> &LinkDiagram {
        &self.base
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn ray(&self) -> &[RayStep] {
        &self.ray
    }

    /// Signed number of ray crossings on each arc (dense arc order).
    pub(crate) fn ray_signs(&self) -> Vec<i32> {
        let mut v = vec![0; self.base.arcs().len()];
        for s in &self.ray {
            let i = self.base.arc_index(s.arc).expect("ray arc on diagram");
            v[i] += if s.left_to_right { 1 } else { -1 };
        }
        v
    }

    pub fn resolve(&self, state: &ResolutionState) -> Result<StateCircles, DiagramError> {
        self.base.resolve_with(state, &self.ray_signs())
    }

    pub fn mirror(&self) -> AnnularDiagram {
        AnnularDiagram::from_ray(self.base.mirror(), self.ray.clone())
    }

    pub fn reverse_components(&self, which: &[usize]) -> Result<AnnularDiagram, DiagramError> {
        let base = self.base.reverse_components(which)?;
        let ray = self
            .ray
            .iter()
            .map(|s| {
                let c = self.base.component_of(s.arc).unwrap();
                RayStep { arc: s.arc, left_to_right: s.left_to_right != which.contains(&c) }
            })
            .collect();
        Ok(AnnularDiagram::from_ray(base, ray))
    }
}

pub fn mark_axis(diagram: &LinkDiagram, face: usize) -> Result<AnnularDiagram, DiagramError> {
    AnnularDiagram::mark_axis(diagram, face)
}
