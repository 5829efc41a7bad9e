//! Resolved graphs of a layered diagram and their relation ideals.
//!
//! A resolution never permutes strands: each layer either joins two
//! adjacent columns at a 4-valent vertex (singularization) or carries
//! bivalent vertices straight up each strand (smoothing). The planar
//! complement is therefore a stack of vertical channels between
//! adjacent columns, wrapping around through the closure arcs, and all
//! region combinatorics reduce to runs between 4-valent blockers in
//! each channel.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::braid::LayeredBraidDiagram;
use crate::error::CubeError;
use crate::poly::{FieldElem, Monomial, MultiPoly};

/// Vertex of a resolved graph. Edge labels are global; `ins`/`outs` run
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vertex {
    Four {
        layer: usize,
        pos: usize,
        ins: [usize; 2],
        outs: [usize; 2],
    },
    Biv {
        layer: usize,
        col: usize,
        input: usize,
        output: usize,
    },
}

impl Vertex {
    pub fn layer(&self) -> usize {
        match self {
            Vertex::Four { layer, .. } | Vertex::Biv { layer, .. } => *layer,
        }
    }

    /// Columns the vertex occupies.
    pub fn columns(&self) -> (usize, Option<usize>) {
        match self {
            Vertex::Four { pos, .. } => (*pos, Some(pos + 1)),
            Vertex::Biv { col, .. } => (*col, None),
        }
    }

    pub fn min_col(&self) -> usize {
        self.columns().0
    }

    /// Contribution to a region weight: two per singular point, one per
    /// bivalent vertex.
    pub fn weight(&self) -> u32 {
        match self {
            Vertex::Four { .. } => 2,
            Vertex::Biv { .. } => 1,
        }
    }

    pub fn ins(&self) -> &[usize] {
        match self {
            Vertex::Four { ins, .. } => ins,
            Vertex::Biv { input, .. } => std::slice::from_ref(input),
        }
    }

    pub fn outs(&self) -> &[usize] {
        match self {
            Vertex::Four { outs, .. } => outs,
            Vertex::Biv { output, .. } => std::slice::from_ref(output),
        }
    }

    pub fn is_four(&self) -> bool {
        matches!(self, Vertex::Four { .. })
    }
}

/// Binomial relation `t^weight * w_out - w_in`, stored canonically with
/// unit coefficient on the `w_in` monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub weight: u32,
    pub w_out: Monomial,
    pub w_in: Monomial,
}

impl Relation {
    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::from_term(FieldElem::t_pow(self.weight as usize), self.w_out.clone());
        p.add_term(FieldElem::one(), self.w_in.clone());
        p
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.weight {
            0 => {}
            1 => write!(f, "t")?,
            w => write!(f, "t^{}", w)?,
        }
        if self.w_out.is_one() {
            if self.weight == 0 {
                write!(f, "1")?;
            }
        } else {
            if self.weight > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.w_out)?;
        }
        write!(f, " - {}", self.w_in)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    Elementary,
    Coherent,
}

/// Planar region of a resolution. Gaps index the channels between
/// adjacent strand columns: gap `b` is the innermost channel containing
/// the braid axis, gap 1 lies along the basepoint strand. Regions in
/// larger gaps are smaller in the partial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub gap: usize,
    /// Indices of the member elementary regions.
    pub members: Vec<usize>,
    /// Vertices in the closure of the region.
    pub closure: BTreeSet<usize>,
    pub weight: u32,
}

/// One vertex of the cube of resolutions: a planar singular diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedGraph {
    strands: usize,
    num_layers: usize,
    /// Per crossing, the resolution bit in the sign-dependent convention
    /// (0 singularizes a positive crossing and smooths a negative one).
    eps: Vec<bool>,
    /// Per layer, whether it carries a 4-valent vertex, and where.
    singular_at: Vec<Option<usize>>,
    vertices: Vec<Vertex>,
    /// vertex index occupying (layer, col), laid out layer-major.
    occupant: Vec<usize>,
    /// tail[e] / head[e]: vertex emitting / receiving edge e; None is
    /// the basepoint.
    tail: Vec<Option<usize>>,
    head: Vec<Option<usize>>,
    num_negative: usize,
}

/// Resolve a layered diagram at a cube index. `eps` has one bit per
/// crossing, in layer order.
pub fn resolve(d: &LayeredBraidDiagram, eps: &[bool]) -> ResolvedGraph {
    let crossings = d.crossings();
    assert_eq!(
        eps.len(),
        crossings.len(),
        "resolution index must have one bit per crossing"
    );
    let b = d.strands();
    let l = d.num_layers();
    let mut vertices = Vec::new();
    let mut occupant = vec![usize::MAX; l * b];
    let mut singular_at = vec![None; l];
    let mut cross_idx = 0;
    for (layer_i, layer) in d.layers().iter().enumerate() {
        let singular_pos = match layer.crossing {
            Some((pos, positive)) => {
                let e = eps[cross_idx];
                cross_idx += 1;
                // 0-resolution singularizes a positive crossing
                if positive != e {
                    Some(pos)
                } else {
                    None
                }
            }
            None => None,
        };
        singular_at[layer_i] = singular_pos;
        let mut col = 1;
        while col <= b {
            if singular_pos == Some(col) {
                let v = Vertex::Four {
                    layer: layer_i,
                    pos: col,
                    ins: [d.edge_at(layer_i, col), d.edge_at(layer_i, col + 1)],
                    outs: [d.edge_at(layer_i + 1, col), d.edge_at(layer_i + 1, col + 1)],
                };
                let idx = vertices.len();
                vertices.push(v);
                occupant[layer_i * b + (col - 1)] = idx;
                occupant[layer_i * b + col] = idx;
                col += 2;
            } else {
                let v = Vertex::Biv {
                    layer: layer_i,
                    col,
                    input: d.edge_at(layer_i, col),
                    output: d.edge_at(layer_i + 1, col),
                };
                let idx = vertices.len();
                vertices.push(v);
                occupant[layer_i * b + (col - 1)] = idx;
                col += 1;
            }
        }
    }
    let ne = d.num_edges();
    let mut tail = vec![None; ne];
    let mut head = vec![None; ne];
    for (i, v) in vertices.iter().enumerate() {
        for &e in v.outs() {
            tail[e] = Some(i);
        }
        for &e in v.ins() {
            head[e] = Some(i);
        }
    }
    ResolvedGraph {
        strands: b,
        num_layers: l,
        eps: eps.to_vec(),
        singular_at,
        vertices,
        occupant,
        tail,
        head,
        num_negative: d.negative_count(),
    }
}

impl ResolvedGraph {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn num_layers(&self) -> usize {
        self.num_layers
    }

    pub fn eps(&self) -> &[bool] {
        &self.eps
    }

    pub fn eps_sum(&self) -> usize {
        self.eps.iter().filter(|&&e| e).count()
    }

    pub fn num_negative(&self) -> usize {
        self.num_negative
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.tail.len()
    }

    pub fn last_edge(&self) -> usize {
        self.num_edges() - 1
    }

    /// Number of singular points.
    pub fn sigma(&self) -> usize {
        self.singular_at.iter().filter(|s| s.is_some()).count()
    }

    fn occupant_at(&self, layer: usize, col: usize) -> usize {
        self.occupant[layer * self.strands + (col - 1)]
    }

    /// Local relations: one linear relation per vertex and one quadratic
    /// per 4-valent vertex.
    pub fn local_relations(&self) -> Vec<MultiPoly> {
        let n = self.num_edges();
        let t = FieldElem::t();
        let t2 = FieldElem::t_pow(2);
        let mut rels = Vec::new();
        for v in &self.vertices {
            match v {
                Vertex::Biv { input, output, .. } => {
                    // t*x_out - x_in
                    let mut p = MultiPoly::from_term(t.clone(), Monomial::var(n, *output));
                    p.add_term(FieldElem::one(), Monomial::var(n, *input));
                    rels.push(p);
                }
                Vertex::Four { ins, outs, .. } => {
                    // t*(x_a + x_b) - (x_c + x_d)
                    let mut lin = MultiPoly::zero(n);
                    for &o in outs {
                        lin.add_term(t.clone(), Monomial::var(n, o));
                    }
                    for &i in ins {
                        lin.add_term(FieldElem::one(), Monomial::var(n, i));
                    }
                    rels.push(lin);
                    // t^2*x_a*x_b - x_c*x_d
                    let mut quad = MultiPoly::from_term(
                        t2.clone(),
                        MultiPoly::var_product(n, outs.iter().copied()),
                    );
                    quad.add_term(FieldElem::one(), MultiPoly::var_product(n, ins.iter().copied()));
                    rels.push(quad);
                }
            }
        }
        rels
    }

    /// Non-local relation attached to a vertex subset: `t^w(V) w_out - w_in`
    /// with `w_out`/`w_in` the products of edges leaving/entering `V`.
    pub fn subset_relation(&self, set: &BTreeSet<usize>) -> Relation {
        let n = self.num_edges();
        let weight: u32 = set.iter().map(|&v| self.vertices[v].weight()).sum();
        let mut out_vars = Vec::new();
        let mut in_vars = Vec::new();
        for &vi in set {
            for &e in self.vertices[vi].outs() {
                if self.head[e].map_or(true, |h| !set.contains(&h)) {
                    out_vars.push(e);
                }
            }
            for &e in self.vertices[vi].ins() {
                if self.tail[e].map_or(true, |t| !set.contains(&t)) {
                    in_vars.push(e);
                }
            }
        }
        Relation {
            weight,
            w_out: MultiPoly::var_product(n, out_vars),
            w_in: MultiPoly::var_product(n, in_vars),
        }
    }

    /// Layers blocked in a channel: singular crossings sitting at `gap`.
    fn blockers(&self, gap: usize) -> Vec<usize> {
        (0..self.num_layers)
            .filter(|&l| self.singular_at[l] == Some(gap))
            .collect()
    }

    fn flank_closure(&self, gap: usize, run_layers: &[usize], ends: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for &k in ends {
            set.insert(self.occupant_at(k, gap));
        }
        for &l in run_layers {
            set.insert(self.occupant_at(l, gap));
            if gap < self.strands {
                set.insert(self.occupant_at(l, gap + 1));
            }
        }
        set
    }

    /// Elementary regions of the planar complement, innermost first.
    /// The two basepoint-adjacent complementary components are omitted.
    pub fn elementary_regions(&self) -> Vec<Region> {
        let mut regions = Vec::new();
        for gap in (1..=self.strands).rev() {
            let blockers = if gap < self.strands {
                self.blockers(gap)
            } else {
                Vec::new()
            };
            if blockers.is_empty() {
                if gap == 1 {
                    continue; // the open channel along the basepoint strand
                }
                let run: Vec<usize> = (0..self.num_layers).collect();
                let closure = self.flank_closure(gap, &run, &[]);
                let weight = closure.iter().map(|&v| self.vertices[v].weight()).sum();
                regions.push(Region {
                    kind: RegionKind::Elementary,
                    gap,
                    members: vec![regions.len()],
                    closure,
                    weight,
                });
                continue;
            }
            // circular runs between consecutive blockers
            let mut runs: Vec<(usize, Vec<usize>, bool, [usize; 2])> = Vec::new();
            for (i, &k1) in blockers.iter().enumerate() {
                let k2 = blockers[(i + 1) % blockers.len()];
                let mut layers = Vec::new();
                let mut wraps = false;
                let mut l = k1 + 1;
                loop {
                    if l == self.num_layers {
                        wraps = true;
                        l = 0;
                    }
                    if l == k2 && (wraps || l > k1) {
                        break;
                    }
                    layers.push(l);
                    l += 1;
                }
                runs.push((k1, layers, wraps, [k1, k2]));
            }
            runs.sort_by_key(|r| r.1.first().copied().unwrap_or(r.0));
            for (_, layers, wraps, ends) in runs {
                if gap == 1 && wraps {
                    continue; // contains the basepoint annulus
                }
                let closure = self.flank_closure(gap, &layers, &ends);
                let weight = closure.iter().map(|&v| self.vertices[v].weight()).sum();
                regions.push(Region {
                    kind: RegionKind::Elementary,
                    gap,
                    members: vec![regions.len()],
                    closure,
                    weight,
                });
            }
        }
        regions
    }

    /// Coherent regions: for each antichain of elementary regions (a
    /// nonempty subset of one gap), its downward closure under the
    /// braid-axis partial order.
    pub fn coherent_regions(&self) -> Vec<Region> {
        let elems = self.elementary_regions();
        let mut out = Vec::new();
        let mut below_members: Vec<usize> = Vec::new();
        let mut below_closure: BTreeSet<usize> = BTreeSet::new();
        let mut gap = self.strands + 1;
        let mut i = 0;
        while i < elems.len() {
            // group the elementary list by gap, which is descending
            let g = elems[i].gap;
            debug_assert!(g < gap);
            gap = g;
            let mut group = Vec::new();
            while i < elems.len() && elems[i].gap == g {
                group.push(i);
                i += 1;
            }
            for mask in 1u64..(1 << group.len()) {
                let mut members = below_members.clone();
                let mut closure = below_closure.clone();
                for (j, &e) in group.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        members.push(e);
                        closure.extend(elems[e].closure.iter().copied());
                    }
                }
                members.sort_unstable();
                let weight = closure.iter().map(|&v| self.vertices[v].weight()).sum();
                out.push(Region {
                    kind: RegionKind::Coherent,
                    gap: g,
                    members,
                    closure,
                    weight,
                });
            }
            for &e in &group {
                below_members.push(e);
                below_closure.extend(elems[e].closure.iter().copied());
            }
        }
        out
    }

    /// Non-local relations from coherent regions; the canonical
    /// generating set for the ideal.
    pub fn nonlocal_from_regions(&self) -> Vec<Relation> {
        self.coherent_regions()
            .iter()
            .map(|r| {
                let rel = self.subset_relation(&r.closure);
                debug_assert_eq!(rel.weight, r.weight);
                rel
            })
            .collect()
    }

    /// Non-local relations from consistently oriented basepoint-avoiding
    /// simple cycles. An independent route to the same ideal.
    pub fn nonlocal_from_cycles(&self) -> Vec<Relation> {
        self.enumerate_cycles()
            .iter()
            .map(|cycle| self.cycle_relation(cycle))
            .collect()
    }

    /// All vertex-simple directed cycles avoiding the basepoint, each as
    /// an edge list in traversal order.
    fn enumerate_cycles(&self) -> Vec<Vec<usize>> {
        let nv = self.vertices.len();
        let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for e in 0..self.num_edges() {
            if let (Some(t), Some(h)) = (self.tail[e], self.head[e]) {
                let _ = h;
                out_arcs[t].push(e);
            }
        }
        let mut cycles = Vec::new();
        // enumerate cycles whose minimal vertex is the start, so each
        // cycle appears exactly once
        for start in 0..nv {
            let mut path: Vec<usize> = Vec::new();
            let mut on_path = vec![false; nv];
            self.cycle_dfs(start, start, &out_arcs, &mut path, &mut on_path, &mut cycles);
        }
        cycles
    }

    fn cycle_dfs(
        &self,
        start: usize,
        at: usize,
        out_arcs: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        on_path[at] = true;
        for &e in &out_arcs[at] {
            let h = self.head[e].unwrap();
            if h == start && !path.is_empty() || h == start && self.tail[e] == self.head[e] {
                let mut c = path.clone();
                c.push(e);
                cycles.push(c);
            } else if h > start && !on_path[h] {
                path.push(e);
                self.cycle_dfs(start, h, out_arcs, path, on_path, cycles);
                path.pop();
            }
        }
        on_path[at] = false;
    }

    /// Boundary-level slots occupied by an edge: (level, col) pairs.
    /// Edges re-identified through a closure arc occupy two slots.
    fn edge_slots(&self, e: usize) -> Vec<(usize, usize)> {
        let b = self.strands;
        let l = self.num_layers;
        let n = self.last_edge();
        if e == 0 {
            vec![(0, 1)]
        } else if e == n {
            vec![(l, 1)]
        } else if e < b {
            // bottom boundary of columns 2..=b, re-identified with the top
            vec![(0, e + 1), (l, e + 1)]
        } else {
            vec![(e / b, e % b + 1)]
        }
    }

    fn cycle_relation(&self, cycle_edges: &[usize]) -> Relation {
        let levels = self.num_layers + 1;
        let mut col_at = vec![0usize; levels];
        let mut on_cycle_vertex = vec![false; self.vertices.len()];
        let mut on_cycle_edge = vec![false; self.num_edges()];
        for &e in cycle_edges {
            on_cycle_edge[e] = true;
            if let Some(h) = self.head[e] {
                on_cycle_vertex[h] = true;
            }
            for (level, col) in self.edge_slots(e) {
                debug_assert_eq!(col_at[level], 0, "cycle crosses a level twice");
                col_at[level] = col;
            }
        }
        debug_assert!(
            col_at.iter().all(|&c| c > 0),
            "consistently oriented cycle must cross every level"
        );

        // closure: traversed vertices plus everything strictly between
        // the cycle and the braid axis
        let mut closure = BTreeSet::new();
        let mut weight = 0u32;
        for (vi, v) in self.vertices.iter().enumerate() {
            let inside = {
                let i = v.layer();
                let bound = col_at[i].max(col_at[i + 1]);
                v.min_col() > bound
            };
            if on_cycle_vertex[vi] || inside {
                closure.insert(vi);
                weight += v.weight();
            }
        }

        // edges incident to exactly one cycle vertex, lying outside
        let n = self.num_edges();
        let mut out_vars = Vec::new();
        let mut in_vars = Vec::new();
        for (vi, v) in self.vertices.iter().enumerate() {
            if !on_cycle_vertex[vi] {
                continue;
            }
            for &e in v.outs() {
                if on_cycle_edge[e] {
                    continue;
                }
                if self.head[e].map_or(false, |h| on_cycle_vertex[h]) {
                    continue; // chord between two cycle vertices
                }
                let (level, col) = self.slot_at_vertex(e, vi, false);
                if col < col_at[level] {
                    out_vars.push(e);
                }
            }
            for &e in v.ins() {
                if on_cycle_edge[e] {
                    continue;
                }
                if self.tail[e].map_or(false, |t| on_cycle_vertex[t]) {
                    continue;
                }
                let (level, col) = self.slot_at_vertex(e, vi, true);
                if col < col_at[level] {
                    in_vars.push(e);
                }
            }
        }
        Relation {
            weight,
            w_out: MultiPoly::var_product(n, out_vars),
            w_in: MultiPoly::var_product(n, in_vars),
        }
    }

    /// The slot of edge `e` adjacent to vertex `vi`; `incoming` selects
    /// the head end.
    fn slot_at_vertex(&self, e: usize, vi: usize, incoming: bool) -> (usize, usize) {
        let slots = self.edge_slots(e);
        if slots.len() == 1 {
            return slots[0];
        }
        let layer = self.vertices[vi].layer();
        let level = if incoming { layer } else { layer + 1 };
        slots
            .into_iter()
            .find(|&(l, _)| l == level)
            .expect("edge slot adjacent to vertex")
    }

    /// Non-local relations from vertex subsets. With `minimal` set, only
    /// connected subsets containing an oriented cycle are kept.
    pub fn nonlocal_from_subsets(&self, minimal: bool, cap: usize) -> Result<Vec<Relation>, CubeError> {
        let nv = self.vertices.len();
        if nv >= 64 || (1u64 << nv) > cap as u64 {
            return Err(CubeError::SubsetCapExceeded { count: nv, cap });
        }
        let mut rels = Vec::new();
        for mask in 1u64..(1u64 << nv) {
            let set: BTreeSet<usize> = (0..nv).filter(|&v| mask >> v & 1 == 1).collect();
            if minimal && !(self.subset_connected(&set) && self.subset_has_cycle(&set)) {
                continue;
            }
            rels.push(self.subset_relation(&set));
        }
        Ok(rels)
    }

    fn subset_connected(&self, set: &BTreeSet<usize>) -> bool {
        let Some(&first) = set.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &e in self.vertices[v].outs().iter().chain(self.vertices[v].ins()) {
                for nb in [self.tail[e], self.head[e]].into_iter().flatten() {
                    if set.contains(&nb) && !seen.contains(&nb) {
                        stack.push(nb);
                    }
                }
            }
        }
        seen.len() == set.len()
    }

    fn subset_has_cycle(&self, set: &BTreeSet<usize>) -> bool {
        // DFS for a directed cycle in the induced subgraph
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let nv = self.vertices.len();
        let mut mark = vec![Mark::White; nv];
        fn visit(
            g: &ResolvedGraph,
            set: &BTreeSet<usize>,
            v: usize,
            mark: &mut Vec<Mark>,
        ) -> bool {
            mark[v] = Mark::Grey;
            for &e in g.vertices[v].outs() {
                if let Some(h) = g.head[e] {
                    if !set.contains(&h) {
                        continue;
                    }
                    match mark[h] {
                        Mark::Grey => return true,
                        Mark::White => {
                            if visit(g, set, h, mark) {
                                return true;
                            }
                        }
                        Mark::Black => {}
                    }
                }
            }
            mark[v] = Mark::Black;
            false
        }
        for &v in set {
            if mark[v] == Mark::White && visit(self, set, v, &mut mark) {
                return true;
            }
        }
        false
    }

    /// Relations `t^k - 1` from closed components that avoid the
    /// basepoint; nonempty exactly when the resolution is disconnected.
    pub fn detect_closed_components(&self) -> Vec<Relation> {
        let nv = self.vertices.len();
        let mut comp = vec![usize::MAX; nv];
        let mut touches_basepoint = Vec::new();
        let mut ncomp = 0;
        for start in 0..nv {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = ncomp;
            ncomp += 1;
            touches_basepoint.push(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp[v] != usize::MAX {
                    continue;
                }
                comp[v] = c;
                for &e in self.vertices[v].ins().iter().chain(self.vertices[v].outs()) {
                    for nb in [self.tail[e], self.head[e]] {
                        match nb {
                            None => touches_basepoint[c] = true,
                            Some(u) => {
                                if comp[u] == usize::MAX {
                                    stack.push(u);
                                }
                            }
                        }
                    }
                }
            }
        }
        let n = self.num_edges();
        (0..ncomp)
            .filter(|&c| !touches_basepoint[c])
            .map(|c| {
                let set: BTreeSet<usize> = (0..nv).filter(|&v| comp[v] == c).collect();
                let rel = self.subset_relation(&set);
                debug_assert!(rel.w_out.is_one() && rel.w_in.is_one());
                Relation {
                    weight: rel.weight,
                    w_out: Monomial::one(n),
                    w_in: Monomial::one(n),
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.detect_closed_components().is_empty()
    }

    /// Stable text dump: vertex table and edge adjacency.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let bits: String = self.eps.iter().map(|&e| if e { '1' } else { '0' }).collect();
        let _ = writeln!(
            s,
            "resolution {} of b={}, layers={}",
            if bits.is_empty() { "-" } else { &bits },
            self.strands,
            self.num_layers
        );
        let _ = writeln!(s, "vertices:");
        for (i, v) in self.vertices.iter().enumerate() {
            match v {
                Vertex::Four { layer, pos, ins, outs } => {
                    let _ = writeln!(
                        s,
                        "  v{}: 4-valent layer {} cols {}-{} in [x{}, x{}] out [x{}, x{}]",
                        i, layer, pos, pos + 1, ins[0], ins[1], outs[0], outs[1]
                    );
                }
                Vertex::Biv { layer, col, input, output } => {
                    let _ = writeln!(
                        s,
                        "  v{}: bivalent layer {} col {} in x{} out x{}",
                        i, layer, col, input, output
                    );
                }
            }
        }
        let _ = writeln!(s, "edges:");
        for e in 0..self.num_edges() {
            let fmt_end = |v: Option<usize>| match v {
                Some(i) => format!("v{}", i),
                None => "*".to_string(),
            };
            let _ = writeln!(
                s,
                "  x{}: {} -> {}",
                e,
                fmt_end(self.tail[e]),
                fmt_end(self.head[e])
            );
        }
        s
    }
}

/// The index singularizing every crossing of the diagram.
pub fn all_singular_index(d: &LayeredBraidDiagram) -> Vec<bool> {
    d.crossings().iter().map(|&(_, _, positive)| !positive).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn fig8_graph() -> ResolvedGraph {
        let w = BraidWord::parse("b=3; 1 -2 1 -2").unwrap();
        let d = LayeredBraidDiagram::from_word(&w);
        resolve(&d, &all_singular_index(&d))
    }

    fn unknot_graph(eps: bool) -> ResolvedGraph {
        let w = BraidWord::parse("b=2; 1").unwrap();
        let d = LayeredBraidDiagram::from_word(&w);
        resolve(&d, &[eps])
    }

    #[test]
    fn fig8_singularization_structure() {
        let g = fig8_graph();
        assert_eq!(g.sigma(), 4);
        assert_eq!(g.vertices().len(), 8);
        assert_eq!(g.num_edges(), 13);
        // one 4-valent and one bivalent vertex per layer
        for layer in 0..4 {
            let in_layer: Vec<_> = g.vertices().iter().filter(|v| v.layer() == layer).collect();
            assert_eq!(in_layer.len(), 2);
            assert_eq!(in_layer.iter().filter(|v| v.is_four()).count(), 1);
        }
    }

    #[test]
    fn resolution_is_local() {
        let w = BraidWord::parse("b=3; 1 -2 1 -2").unwrap();
        let d = LayeredBraidDiagram::from_word(&w);
        let base = resolve(&d, &[false, true, false, true]);
        let flipped = resolve(&d, &[false, true, true, true]);
        for (a, b) in base.vertices().iter().zip(flipped.vertices()) {
            if a.layer() != 2 {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn smoothing_a_two_braid_disconnects() {
        let g = unknot_graph(true);
        assert_eq!(g.sigma(), 0);
        assert!(!g.is_connected());
        let comps = g.detect_closed_components();
        assert_eq!(comps.len(), 1);
        // the split circle carries the single smoothing vertex on column 2
        assert_eq!(comps[0].weight, 1);
        assert!(comps[0].w_out.is_one() && comps[0].w_in.is_one());
    }

    #[test]
    fn singularized_unknot_is_connected() {
        let g = unknot_graph(false);
        assert!(g.is_connected());
        assert_eq!(g.sigma(), 1);
    }

    #[test]
    fn local_relations_of_fig8() {
        let g = fig8_graph();
        // 4 linear + 4 quadratic from the 4-valent vertices, 4 linear
        // from the bivalent ones
        let rels = g.local_relations();
        assert_eq!(rels.len(), 12);
        for r in &rels {
            assert!(r.is_homogeneous());
        }
    }

    #[test]
    fn quadratic_rewrites_via_linear() {
        // t^2 x_a x_b - x_c x_d differs from (t x_a - x_c)(x_d - t x_a)
        // by t*x_a times the linear relation at the same vertex
        let g = unknot_graph(false);
        let rels = g.local_relations();
        let n = g.num_edges();
        // vertex: ins (c, d) = (x0, x1); outs (a, b) = (x2, x1)
        let lin = &rels[0];
        let quad = &rels[1];
        let x = |i| MultiPoly::var(n, i);
        let t = FieldElem::t();
        let f1 = x(2).scale(&t).add(&x(0)); // t*x_a - x_c
        let f2 = x(1).add(&x(2).scale(&t)); // x_d - t*x_a
        let lhs = quad.sub(&f1.mul(&f2));
        let rhs = lin.mul(&x(2).scale(&t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fig8_elementary_regions() {
        let g = fig8_graph();
        let regions = g.elementary_regions();
        assert_eq!(regions.len(), 4);
        // innermost region first, in the channel at gap b=3
        assert_eq!(regions[0].gap, 3);
        assert_eq!(regions[0].weight, 6);
        // two regions between columns 2 and 3, one between 1 and 2
        assert_eq!(regions.iter().filter(|r| r.gap == 2).count(), 2);
        assert_eq!(regions.iter().filter(|r| r.gap == 1).count(), 1);
        // partial order: every gap-2 region is below the gap-1 region
        let e4 = regions.iter().position(|r| r.gap == 1).unwrap();
        for (i, r) in regions.iter().enumerate() {
            if r.gap == 2 {
                assert!(r.gap > regions[e4].gap, "E{} < E{}", i + 1, e4 + 1);
            }
        }
    }

    #[test]
    fn unknot_singularization_has_one_region() {
        let g = unknot_graph(false);
        let regions = g.elementary_regions();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].gap, 2);
        assert_eq!(regions[0].weight, 2);
    }

    #[test]
    fn fig8_coherent_region_table() {
        let g = fig8_graph();
        let coherent = g.coherent_regions();
        assert_eq!(coherent.len(), 5);
        let rels: Vec<String> = g
            .nonlocal_from_regions()
            .iter()
            .map(|r| r.to_string())
            .collect();
        let expected = [
            "t^6*x1*x7 - x4*x10",
            "t^8*x1*x9 - x4*x6",
            "t^8*x3*x7 - x0*x10",
            "t^10*x3*x9 - x0*x6",
            "t^11*x9 - x0",
        ];
        for e in expected {
            assert!(rels.contains(&e.to_string()), "missing {} in {:?}", e, rels);
        }
        assert_eq!(rels.len(), 5);
    }

    #[test]
    fn unknot_outermost_relation() {
        let g = unknot_graph(false);
        let rels = g.nonlocal_from_regions();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].to_string(), "t^2*x2 - x0");
    }

    #[test]
    fn cycles_match_regions_on_fig8() {
        let g = fig8_graph();
        let mut from_cycles = g.nonlocal_from_cycles();
        let mut from_regions = g.nonlocal_from_regions();
        from_cycles.sort();
        from_regions.sort();
        assert_eq!(from_cycles, from_regions);
    }

    #[test]
    fn fig8_bold_cycle_from_subset() {
        // the subset: bivalent in s0, 4-valent in s1, all of s2,
        // 4-valent in s3
        let g = fig8_graph();
        let mut set = BTreeSet::new();
        for (i, v) in g.vertices().iter().enumerate() {
            let keep = match v {
                Vertex::Biv { layer: 0, .. } => true,
                Vertex::Four { layer: 1, .. } => true,
                _ if v.layer() == 2 => true,
                Vertex::Four { layer: 3, .. } => true,
                _ => false,
            };
            if keep {
                set.insert(i);
            }
        }
        let rel = g.subset_relation(&set);
        assert_eq!(rel.to_string(), "t^8*x1*x9 - x4*x6");
    }

    #[test]
    fn acyclic_subset_relation() {
        // both vertices of s0 plus the 4-valent vertex of s1
        let g = fig8_graph();
        let set: BTreeSet<usize> = g
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.layer() == 0 || matches!(v, Vertex::Four { layer: 1, .. }))
            .map(|(i, _)| i)
            .collect();
        let rel = g.subset_relation(&set);
        assert_eq!(rel.to_string(), "t^5*x3*x7*x8 - x0*x1*x2");
        // connected but has no oriented cycle: filtered by the minimal
        // enumeration
        assert!(g.subset_connected(&set));
        assert!(!g.subset_has_cycle(&set));
    }

    #[test]
    fn weight_additivity_for_disjoint_subsets() {
        let g = fig8_graph();
        let a: BTreeSet<usize> = [0usize, 1].into_iter().collect();
        let b: BTreeSet<usize> = [4usize, 5].into_iter().collect();
        assert!(a.is_disjoint(&b));
        let ab: BTreeSet<usize> = a.union(&b).copied().collect();
        let (ra, rb, rab) = (
            g.subset_relation(&a),
            g.subset_relation(&b),
            g.subset_relation(&ab),
        );
        assert_eq!(ra.weight + rb.weight, rab.weight);
    }

    #[test]
    fn subset_cap_guard() {
        let g = fig8_graph();
        assert!(matches!(
            g.nonlocal_from_subsets(false, 16),
            Err(CubeError::SubsetCapExceeded { .. })
        ));
        assert!(g.nonlocal_from_subsets(false, 1 << 18).is_ok());
    }

    #[test]
    fn dump_is_stable() {
        let g = unknot_graph(false);
        let d = g.dump();
        assert!(d.contains("v0: 4-valent layer 0 cols 1-2 in [x0, x1] out [x2, x1]"));
        assert!(d.contains("x0: * -> v0"));
        assert!(d.contains("x2: v0 -> *"));
    }
}
