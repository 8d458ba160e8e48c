//! Half-open convex cells: intersections of finitely many rational
//! half-planes, each strict or non-strict, clipped to a bounded frame.
//!
//! A cell caches the vertices of its closure together with which open edges
//! and which vertices belong to it. That triple determines the point set, so
//! cell equality compares it instead of the constraint lists.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::exact::{format_rational, rat_int, QComplex, Rational};

/// `{(x, y) : a·x + b·y + c ≥ 0}`, or `> 0` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPlane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub strict: bool,
}

/// A linear constraint after normalisation. `(a, b) = (0, 0)` leaves a
/// constant which is either always or never satisfied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Linear {
    Constant(bool),
    Plane(HalfPlane),
}

impl HalfPlane {
    /// Normalised half-plane. Panics when `a` and `b` are both zero; use
    /// [`HalfPlane::classify`] for input that may be constant.
    pub fn new(a: Rational, b: Rational, c: Rational, strict: bool) -> HalfPlane {
        match HalfPlane::classify(a, b, c, strict) {
            Linear::Plane(h) => h,
            Linear::Constant(_) => panic!("half-plane with zero normal"),
        }
    }

    pub fn classify(a: Rational, b: Rational, c: Rational, strict: bool) -> Linear {
        let lead = if !a.is_zero() { a.abs() } else { b.abs() };
        if lead.is_zero() {
            let ok = if strict { c.is_positive() } else { !c.is_negative() };
            return Linear::Constant(ok);
        }
        Linear::Plane(HalfPlane { a: a / &lead, b: b / &lead, c: c / &lead, strict })
    }

    /// Points on or to the left of the directed line `p → q`.
    pub fn left_of(p: &QComplex, q: &QComplex, strict: bool) -> HalfPlane {
        let a = -(&q.im - &p.im);
        let b = &q.re - &p.re;
        let c = -(&a * &p.re + &b * &p.im);
        HalfPlane::new(a, b, c, strict)
    }

    pub fn eval(&self, p: &QComplex) -> Rational {
        &self.a * &p.re + &self.b * &p.im + &self.c
    }

    pub fn contains(&self, p: &QComplex) -> bool {
        let v = self.eval(p);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    /// The set-theoretic complement: `{−f > 0}` for `f ≥ 0` and vice versa.
    pub fn complement(&self) -> HalfPlane {
        HalfPlane { a: -&self.a, b: -&self.b, c: -&self.c, strict: !self.strict }
    }

    pub fn closed(&self) -> HalfPlane {
        HalfPlane { strict: false, ..self.clone() }
    }

    fn same_direction(&self, o: &HalfPlane) -> bool {
        self.a == o.a && self.b == o.b
    }

    /// Of two half-planes with the same normal, whether `self` is contained
    /// in `o`.
    fn at_least_as_tight(&self, o: &HalfPlane) -> bool {
        match self.c.cmp(&o.c) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self.strict || !o.strict,
        }
    }
}

impl Serialize for HalfPlane {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HalfPlane", 4)?;
        st.serialize_field("a", &format_rational(&self.a))?;
        st.serialize_field("b", &format_rational(&self.b))?;
        st.serialize_field("c", &format_rational(&self.c))?;
        st.serialize_field("strict", &self.strict)?;
        st.end()
    }
}

/// The closed box `[−half, half]²` every cell is clipped to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub half: Rational,
}

impl Default for Frame {
    fn default() -> Self {
        Frame { half: rat_int(2) }
    }
}

impl Frame {
    pub fn new(half: Rational) -> Frame {
        assert!(half.is_positive(), "frame half-width must be positive");
        Frame { half }
    }

    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        let h = &self.half;
        let one = Rational::one();
        let zero = Rational::zero();
        vec![
            HalfPlane::new(one.clone(), zero.clone(), h.clone(), false),
            HalfPlane::new(-one.clone(), zero.clone(), h.clone(), false),
            HalfPlane::new(zero.clone(), one.clone(), h.clone(), false),
            HalfPlane::new(zero, -one, h.clone(), false),
        ]
    }

    /// A box twice as large, used as the starting polygon for clipping.
    fn start_polygon(&self) -> Vec<QComplex> {
        let h = &self.half * rat_int(2);
        let n = -&h;
        vec![
            QComplex::new(n.clone(), n.clone()),
            QComplex::new(h.clone(), n.clone()),
            QComplex::new(h.clone(), h.clone()),
            QComplex::new(n, h),
        ]
    }
}

/// Where a cell sits relative to the closed unit disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiskSeparation {
    Inside,
    Outside,
    Meets,
}

/// A bounded convex set cut out by strict and non-strict half-planes.
#[derive(Clone, Debug)]
pub struct Cell {
    constraints: Vec<HalfPlane>,
    vertices: Vec<QComplex>,
    edge_solid: Vec<bool>,
    vertex_member: Vec<bool>,
    frame: Frame,
}

impl PartialEq for Cell {
    fn eq(&self, o: &Cell) -> bool {
        self.vertices == o.vertices && self.edge_solid == o.edge_solid && self.vertex_member == o.vertex_member
    }
}

impl Eq for Cell {}

impl Cell {
    /// `frame ∩ ⋂hs`.
    pub fn from_halfplanes(hs: impl IntoIterator<Item = HalfPlane>, frame: &Frame) -> Cell {
        let mut all = frame.halfplanes();
        all.extend(hs);
        Cell::build(all, frame)
    }

    /// Like [`Cell::from_halfplanes`] but accepting constant constraints.
    pub fn from_linear(ls: impl IntoIterator<Item = Linear>, frame: &Frame) -> Cell {
        let mut hs = Vec::new();
        for l in ls {
            match l {
                Linear::Constant(true) => {}
                Linear::Constant(false) => return Cell::empty(frame),
                Linear::Plane(h) => hs.push(h),
            }
        }
        Cell::from_halfplanes(hs, frame)
    }

    pub fn full(frame: &Frame) -> Cell {
        Cell::from_halfplanes([], frame)
    }

    pub fn empty(frame: &Frame) -> Cell {
        Cell {
            constraints: Vec::new(),
            vertices: Vec::new(),
            edge_solid: Vec::new(),
            vertex_member: Vec::new(),
            frame: frame.clone(),
        }
    }

    /// Closed axis-parallel rectangle.
    pub fn rect(x0: Rational, y0: Rational, x1: Rational, y1: Rational, frame: &Frame) -> Cell {
        let one = Rational::one();
        let zero = Rational::zero();
        Cell::from_halfplanes(
            [
                HalfPlane::new(one.clone(), zero.clone(), -x0, false),
                HalfPlane::new(-one.clone(), zero.clone(), x1, false),
                HalfPlane::new(zero.clone(), one.clone(), -y0, false),
                HalfPlane::new(zero, -one, y1, false),
            ],
            frame,
        )
    }

    /// The single closed point `p`.
    pub fn point(p: &QComplex, frame: &Frame) -> Cell {
        Cell::rect(p.re.clone(), p.im.clone(), p.re.clone(), p.im.clone(), frame)
    }

    fn build(constraints: Vec<HalfPlane>, frame: &Frame) -> Cell {
        Cell::build_from(constraints, frame.start_polygon(), frame)
    }

    fn build_from(constraints: Vec<HalfPlane>, start: Vec<QComplex>, frame: &Frame) -> Cell {
        let merged = merge_parallel(constraints);
        let mut cell = Cell::evaluate(merged, start.clone(), frame);
        if cell.is_empty() {
            return Cell::empty(frame);
        }
        // Drop constraints that hold strictly on the whole closure.
        let touching: Vec<HalfPlane> = cell
            .constraints
            .iter()
            .filter(|h| cell.vertices.iter().any(|v| !h.eval(v).is_positive()))
            .cloned()
            .collect();
        // Then the ones whose removal leaves the point set unchanged. Lines
        // carrying an edge of a two-dimensional cell are always needed.
        let (mut fixed, mut kept): (Vec<HalfPlane>, Vec<HalfPlane>) = if cell.vertices.len() >= 3 {
            touching.into_iter().partition(|h| cell.vertices.iter().filter(|v| h.eval(v).is_zero()).count() >= 2)
        } else {
            (Vec::new(), touching)
        };
        let mut i = 0;
        while i < kept.len() {
            let mut trial = kept.clone();
            trial.remove(i);
            let other = Cell::evaluate(fixed.iter().cloned().chain(trial.iter().cloned()).collect(), start.clone(), frame);
            if other == cell {
                kept = trial;
            } else {
                i += 1;
            }
        }
        kept.append(&mut fixed);
        kept.sort();
        cell.constraints = kept;
        cell
    }

    /// Computes closure vertices and flags without pruning constraints.
    fn evaluate(constraints: Vec<HalfPlane>, start: Vec<QComplex>, frame: &Frame) -> Cell {
        let mut poly = start;
        for h in &constraints {
            poly = clip(&poly, &h.closed());
            if poly.is_empty() {
                break;
            }
        }
        let vertices = convex_hull(poly);
        let mut cell = Cell {
            constraints,
            vertices,
            edge_solid: Vec::new(),
            vertex_member: Vec::new(),
            frame: frame.clone(),
        };
        if cell.vertices.is_empty() {
            return cell;
        }
        let centroid = centroid(&cell.vertices);
        if !cell.constraints.iter().all(|h| h.contains(&centroid)) {
            cell.vertices.clear();
            return cell;
        }
        let n = cell.vertices.len();
        let n_edges = match n {
            1 => 0,
            2 => 1,
            _ => n,
        };
        cell.edge_solid = (0..n_edges)
            .map(|i| {
                let m = midpoint(&cell.vertices[i], &cell.vertices[(i + 1) % n]);
                cell.raw_contains(&m)
            })
            .collect();
        cell.vertex_member = cell.vertices.iter().map(|v| cell.raw_contains(v)).collect();
        cell
    }

    fn raw_contains(&self, p: &QComplex) -> bool {
        self.constraints.iter().all(|h| h.contains(p))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Irredundant constraints, sorted.
    pub fn constraints(&self) -> &[HalfPlane] {
        &self.constraints
    }

    /// Closure vertices, counter-clockwise from the lexicographically
    /// smallest. A segment has two vertices, a point one.
    pub fn vertices(&self) -> &[QComplex] {
        &self.vertices
    }

    /// `edge_solid()[i]` covers the open edge from vertex `i` to `i + 1`.
    pub fn edge_solid(&self) -> &[bool] {
        &self.edge_solid
    }

    pub fn vertex_member(&self) -> &[bool] {
        &self.vertex_member
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// 0 for empty, 1 for points, 2 for segments, 3 for everything else.
    pub fn dimension_class(&self) -> usize {
        self.vertices.len().min(3)
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn contains(&self, p: &QComplex) -> bool {
        !self.is_empty() && self.raw_contains(p)
    }

    /// Re-runs canonicalisation on the stored constraints.
    pub fn recanonicalize(&self) -> Cell {
        if self.is_empty() {
            return Cell::empty(&self.frame);
        }
        let mut all = self.constraints.clone();
        all.extend(self.frame.halfplanes());
        Cell::build(all, &self.frame)
    }

    pub fn intersect(&self, o: &Cell) -> Cell {
        if self.is_empty() || o.is_empty() {
            return Cell::empty(&self.frame);
        }
        if !bbox_overlap(&self.bbox(), &o.bbox()) {
            return Cell::empty(&self.frame);
        }
        let mut all = self.constraints.clone();
        all.extend(o.constraints.iter().cloned());
        Cell::build_from(all, self.frame.start_polygon(), &self.frame)
    }

    pub fn intersect_halfplanes(&self, hs: impl IntoIterator<Item = HalfPlane>) -> Cell {
        if self.is_empty() {
            return self.clone();
        }
        let mut all = self.constraints.clone();
        all.extend(hs);
        Cell::build_from(all, self.frame.start_polygon(), &self.frame)
    }

    /// `[xmin, ymin, xmax, ymax]` of the closure. Panics on an empty cell.
    pub fn bbox(&self) -> [Rational; 4] {
        let mut xs = self.vertices.iter().map(|v| &v.re);
        let first = xs.next().expect("bbox of empty cell").clone();
        let (mut x0, mut x1) = (first.clone(), first);
        for x in xs {
            if *x < x0 {
                x0 = x.clone();
            }
            if *x > x1 {
                x1 = x.clone();
            }
        }
        let mut y0 = self.vertices[0].im.clone();
        let mut y1 = y0.clone();
        for v in &self.vertices[1..] {
            if v.im < y0 {
                y0 = v.im.clone();
            }
            if v.im > y1 {
                y1 = v.im.clone();
            }
        }
        [x0, y0, x1, y1]
    }

    /// A point of the cell: the closure centroid, which lies in the relative
    /// interior and therefore in the cell whenever the cell is nonempty.
    pub fn sample_point(&self) -> Option<QComplex> {
        if self.is_empty() {
            None
        } else {
            Some(centroid(&self.vertices))
        }
    }

    /// Whether every point of `self` satisfies `h`.
    pub fn inside_halfplane(&self, h: &HalfPlane) -> bool {
        if self.is_empty() {
            return true;
        }
        if self.vertices.iter().all(|v| h.contains(v)) {
            return true;
        }
        // A strict h vanishing at closure points is still fine if those
        // points are missing from the cell.
        if !h.strict || !self.vertices.iter().all(|v| !h.eval(v).is_negative()) {
            return false;
        }
        let n = self.vertices.len();
        let zero_vertices_ok = (0..n).all(|i| !h.eval(&self.vertices[i]).is_zero() || !self.vertex_member[i]);
        let zero_edges_ok = (0..self.edge_solid.len()).all(|i| {
            let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            !(h.eval(p).is_zero() && h.eval(q).is_zero()) || !self.edge_solid[i]
        });
        zero_vertices_ok && zero_edges_ok && n > 1 || (n == 1 && !self.vertex_member[0])
    }

    /// Whether the closures of the two cells might meet (bounding boxes).
    pub fn may_meet(&self, o: &Cell) -> bool {
        !self.is_empty() && !o.is_empty() && bbox_overlap(&self.bbox(), &o.bbox())
    }

    /// The unique closure point nearest to the origin, with its squared norm.
    pub fn nearest_to_origin(&self) -> Option<(QComplex, Rational)> {
        let n = self.vertices.len();
        match n {
            0 => None,
            1 => Some((self.vertices[0].clone(), self.vertices[0].norm_sqr())),
            _ => {
                let origin = QComplex::zero();
                if n > 2 && self.closure_contains(&origin) {
                    return Some((origin, Rational::zero()));
                }
                let edges = if n == 2 { 1 } else { n };
                let mut best: Option<(QComplex, Rational)> = None;
                for i in 0..edges {
                    let p = nearest_on_segment(&self.vertices[i], &self.vertices[(i + 1) % n]);
                    let d = p.norm_sqr();
                    if best.as_ref().map_or(true, |(_, bd)| d < *bd) {
                        best = Some((p, d));
                    }
                }
                best
            }
        }
    }

    fn closure_contains(&self, p: &QComplex) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0] == *p,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                (b - a).cross(&(p - a)).is_zero() && {
                    let t = (p - a).dot(&(b - a));
                    !t.is_negative() && t <= (b - a).norm_sqr()
                }
            }
            _ => (0..n).all(|i| {
                let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                !(b - a).cross(&(p - a)).is_negative()
            }),
        }
    }

    /// Relative position to the closed unit disk, decided exactly.
    ///
    /// `Outside` when the cell misses the closed disk: either its closure is
    /// farther than 1 from the origin, or the only closure point at distance
    /// exactly 1 is not part of the cell.
    pub fn disk_separation(&self) -> DiskSeparation {
        let one = Rational::one();
        let Some((p, d)) = self.nearest_to_origin() else {
            return DiskSeparation::Outside;
        };
        if d > one || (d == one && !self.contains(&p)) {
            return DiskSeparation::Outside;
        }
        if self.vertices.iter().all(|v| v.norm_sqr() < one) {
            DiskSeparation::Inside
        } else {
            DiskSeparation::Meets
        }
    }

    /// Same as [`Cell::disk_separation`] for the closed disk of radius
    /// `sqrt(r2)`.
    pub fn disk_separation_r2(&self, r2: &Rational) -> DiskSeparation {
        let Some((p, d)) = self.nearest_to_origin() else {
            return DiskSeparation::Outside;
        };
        if d > *r2 || (d == *r2 && !self.contains(&p)) {
            return DiskSeparation::Outside;
        }
        if self.vertices.iter().all(|v| v.norm_sqr() < *r2) {
            DiskSeparation::Inside
        } else {
            DiskSeparation::Meets
        }
    }

    /// The convex cell whose closure has the given vertices (either
    /// orientation), where `member[i]` says whether vertex `i` belongs and
    /// `solid[i]` whether the open edge from vertex `i` to `i + 1` does.
    ///
    /// Errors when the markup cannot come from half-planes (a belonging
    /// vertex next to a missing edge, a missing single point) or when the
    /// vertices are not in strictly convex position.
    pub fn from_marked_polygon(vertices: &[QComplex], member: &[bool], solid: &[bool], frame: &Frame) -> crate::Result<Cell> {
        let n = vertices.len();
        let bad = |what: &str| Error::Domain(format!("marked polygon: {what}"));
        if n == 0 || member.len() != n || (solid.len() != n && !(n == 1 && solid.is_empty())) {
            return Err(bad("flag counts do not match the vertices"));
        }
        if (0..n).any(|i| (i + 1..n).any(|j| vertices[i] == vertices[j])) {
            return Err(bad("repeated vertex"));
        }
        let mut hs = Vec::new();
        match n {
            1 => {
                if !member[0] {
                    return Err(bad("a single point that does not belong is empty"));
                }
                return Ok(Cell::point(&vertices[0], frame));
            }
            2 => {
                if solid.iter().any(|s| !s) {
                    return Err(bad("a segment without its interior is empty"));
                }
                let (p, q) = (&vertices[0], &vertices[1]);
                hs.push(HalfPlane::left_of(p, q, false));
                hs.push(HalfPlane::left_of(q, p, false));
                for (v, w, inside) in [(p, q, member[0]), (q, p, member[1])] {
                    let d = w - v;
                    let c = -d.dot(v);
                    hs.push(HalfPlane::new(d.re, d.im, c, !inside));
                }
            }
            _ => {
                let area: Rational = (0..n).map(|i| vertices[i].cross(&vertices[(i + 1) % n])).sum();
                if area.is_zero() {
                    return Err(bad("collinear vertices"));
                }
                let ccw = area.is_positive();
                let edges: Vec<HalfPlane> = (0..n)
                    .map(|i| {
                        let (p, q) = (&vertices[i], &vertices[(i + 1) % n]);
                        if ccw {
                            HalfPlane::left_of(p, q, !solid[i])
                        } else {
                            HalfPlane::left_of(q, p, !solid[i])
                        }
                    })
                    .collect();
                for i in 0..n {
                    let (before, after) = (&edges[(i + n - 1) % n], &edges[i]);
                    let both = solid[(i + n - 1) % n] && solid[i];
                    if member[i] && !both {
                        return Err(bad("a belonging vertex on a missing edge"));
                    }
                    if !member[i] && both {
                        // Cut off the vertex alone with a supporting line.
                        let (a, b) = (&before.a + &after.a, &before.b + &after.b);
                        let c = -(&a * &vertices[i].re + &b * &vertices[i].im);
                        hs.push(HalfPlane::new(a, b, c, true));
                    }
                }
                hs.extend(edges);
            }
        }
        let cell = Cell::from_halfplanes(hs, frame);
        let mut want: Vec<(QComplex, bool)> = vertices.iter().cloned().zip(member.iter().copied()).collect();
        let mut got: Vec<(QComplex, bool)> =
            cell.vertices.iter().cloned().zip(cell.vertex_member.iter().copied()).collect();
        want.sort();
        got.sort();
        if want != got {
            return Err(bad("vertices are not in strictly convex position"));
        }
        Ok(cell)
    }

    /// The cell reflected in the real axis.
    pub fn conjugate(&self) -> Cell {
        if self.is_empty() {
            return self.clone();
        }
        let hs = self
            .constraints
            .iter()
            .map(|h| HalfPlane::new(h.a.clone(), -&h.b, h.c.clone(), h.strict));
        Cell::from_halfplanes(hs, &self.frame)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cell", 4)?;
        st.serialize_field("constraints", &self.constraints)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edge_solid", &self.edge_solid)?;
        st.serialize_field("vertex_member", &self.vertex_member)?;
        st.end()
    }
}

/// `frame ∩ ⋂hs`; see [`Cell::from_halfplanes`].
pub fn intersect_halfplanes(hs: Vec<HalfPlane>, frame: &Frame) -> Cell {
    Cell::from_halfplanes(hs, frame)
}

pub fn cell_contains(c: &Cell, p: &QComplex) -> bool {
    c.contains(p)
}

pub fn disk_separation(c: &Cell) -> DiskSeparation {
    c.disk_separation()
}

/// `target ∖ ⋃covers` as pairwise disjoint nonempty cells.
///
/// Each residual is split along the constraints of each cover in turn: the
/// part violating constraint `i` while satisfying constraints `1..i` is kept,
/// and whatever satisfies all of them lies in the cover and is dropped.
pub fn subtract_cover(target: &Cell, covers: &[Cell]) -> Vec<Cell> {
    subtract_cover_pruned(target, covers, |_| false)
}

/// [`subtract_cover`] that also discards residual pieces for which `prune`
/// returns true, as soon as they appear.
pub fn subtract_cover_pruned(target: &Cell, covers: &[Cell], prune: impl Fn(&Cell) -> bool) -> Vec<Cell> {
    if target.is_empty() || prune(target) {
        return Vec::new();
    }
    let mut residuals = vec![target.clone()];
    for cover in covers {
        if cover.is_empty() {
            continue;
        }
        let cover_box = cover.bbox();
        let mut next = Vec::with_capacity(residuals.len());
        for r in residuals {
            if !bbox_overlap(&r.bbox(), &cover_box) {
                next.push(r);
                continue;
            }
            let mut current = r.clone();
            let mut pieces = Vec::new();
            for h in cover.constraints() {
                if current.inside_halfplane(h) {
                    continue;
                }
                let piece = current.intersect_halfplanes([h.complement()]);
                if !piece.is_empty() {
                    pieces.push(piece);
                }
                current = current.intersect_halfplanes([h.clone()]);
                if current.is_empty() {
                    break;
                }
            }
            if current.is_empty() {
                // The cover missed r entirely.
                next.push(r);
            } else {
                next.extend(pieces.into_iter().filter(|p| !prune(p)));
            }
        }
        residuals = next;
        if residuals.is_empty() {
            break;
        }
    }
    residuals
}

fn bbox_overlap(a: &[Rational; 4], b: &[Rational; 4]) -> bool {
    a[0] <= b[2] && b[0] <= a[2] && a[1] <= b[3] && b[1] <= a[3]
}

/// Keeps only the tightest of each family of parallel, same-facing
/// half-planes.
fn merge_parallel(mut hs: Vec<HalfPlane>) -> Vec<HalfPlane> {
    hs.sort();
    let mut out: Vec<HalfPlane> = Vec::with_capacity(hs.len());
    for h in hs {
        match out.last_mut() {
            Some(last) if last.same_direction(&h) => {
                if h.at_least_as_tight(last) {
                    *last = h;
                }
            }
            _ => out.push(h),
        }
    }
    out
}

/// Sutherland–Hodgman step against the closed half-plane `h`.
fn clip(poly: &[QComplex], h: &HalfPlane) -> Vec<QComplex> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let cur = &poly[i];
        let prev = &poly[(i + n - 1) % n];
        let fc = h.eval(cur);
        let fp = h.eval(prev);
        if !fc.is_negative() {
            if fp.is_negative() {
                out.push(crossing(prev, cur, &fp, &fc));
            }
            out.push(cur.clone());
        } else if fp.is_positive() {
            out.push(crossing(prev, cur, &fp, &fc));
        }
    }
    out
}

fn crossing(p: &QComplex, q: &QComplex, fp: &Rational, fq: &Rational) -> QComplex {
    let t = fp / (fp - fq);
    p + &(q - p).scale(&t)
}

/// Monotone-chain hull without collinear points, counter-clockwise from the
/// lexicographic minimum.
pub(crate) fn convex_hull(mut pts: Vec<QComplex>) -> Vec<QComplex> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: &QComplex, a: &QComplex, b: &QComplex| (a - o).cross(&(b - o));
    let mut lower: Vec<QComplex> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<QComplex> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

fn centroid(vs: &[QComplex]) -> QComplex {
    let n = Rational::from_integer(vs.len().into());
    let mut s = QComplex::zero();
    for v in vs {
        s = &s + v;
    }
    QComplex::new(s.re / &n, s.im / &n)
}

fn midpoint(p: &QComplex, q: &QComplex) -> QComplex {
    (p + q).scale(&Rational::new(1.into(), 2.into()))
}

fn nearest_on_segment(p: &QComplex, q: &QComplex) -> QComplex {
    let d = q - p;
    let len2 = d.norm_sqr();
    if len2.is_zero() {
        return p.clone();
    }
    let t = -p.dot(&d) / &len2;
    if !t.is_positive() {
        p.clone()
    } else if t >= Rational::one() {
        q.clone()
    } else {
        p + &d.scale(&t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hp(a: i64, b: i64, c: i64, strict: bool) -> HalfPlane {
        HalfPlane::new(rat_int(a), rat_int(b), rat_int(c), strict)
    }

    fn unit_square(frame: &Frame) -> Cell {
        Cell::rect(rat_int(0), rat_int(0), rat_int(1), rat_int(1), frame)
    }

    #[test]
    fn normalisation() {
        let h = HalfPlane::new(rat_int(-4), rat_int(2), rat_int(6), false);
        assert_eq!((h.a, h.b, h.c), (rat_int(-1), ratio(1, 2), ratio(3, 2)));
        assert_eq!(HalfPlane::classify(rat_int(0), rat_int(0), rat_int(0), false), Linear::Constant(true));
        assert_eq!(HalfPlane::classify(rat_int(0), rat_int(0), rat_int(0), true), Linear::Constant(false));
    }

    #[test]
    fn intersect_examples() {
        let f = Frame::default();
        let pt = Cell::from_halfplanes([hp(1, 0, 0, false), hp(-1, 0, 0, false), hp(0, 1, 0, false), hp(0, -1, 0, false)], &f);
        assert_eq!(pt.vertices(), &[QComplex::zero()]);
        assert_eq!(pt.vertex_member(), &[true]);
        let e = Cell::from_halfplanes([hp(1, 0, 0, true), hp(-1, 0, 0, false)], &f);
        assert!(e.is_empty());
        assert_eq!(Cell::full(&f).vertices().len(), 4);
    }

    #[test]
    fn contains_examples() {
        let f = Frame::default();
        assert!(unit_square(&f).contains(&QComplex::zero()));
        let half_open = Cell::from_halfplanes(
            [hp(1, 0, 0, false), hp(-1, 0, 1, true), hp(0, 1, 0, false), hp(0, -1, 1, true)],
            &f,
        );
        assert!(!half_open.contains(&QComplex::ints(1, 0)));
        assert!(half_open.contains(&QComplex::zero()));
        assert_eq!(half_open.vertex_member(), &[true, false, false, false]);
        assert_eq!(half_open.edge_solid(), &[true, false, false, true]);
    }

    #[test]
    fn subtract_examples() {
        let f = Frame::default();
        let sq = unit_square(&f);
        assert!(subtract_cover(&sq, &[sq.clone()]).is_empty());
        let left = Cell::from_halfplanes([HalfPlane::new(rat_int(-1), rat_int(0), ratio(1, 2), true)], &f);
        let res = subtract_cover(&sq, &[left]);
        assert_eq!(res.len(), 1);
        let expect = Cell::rect(ratio(1, 2), rat_int(0), rat_int(1), rat_int(1), &f);
        assert_eq!(res[0], expect);
    }

    #[test]
    fn disk_examples() {
        let f = Frame::default();
        assert_eq!(Cell::point(&QComplex::ints(2, 0), &f).disk_separation(), DiskSeparation::Outside);
        assert_eq!(Cell::point(&QComplex::frac(1, 2, 1, 2), &f).disk_separation(), DiskSeparation::Inside);
        assert_eq!(unit_square(&f).disk_separation(), DiskSeparation::Meets);
        // Touching the circle only at an excluded point.
        let open_corner = Cell::from_halfplanes(
            [hp(1, 0, -1, true), hp(-1, 0, 2, false), hp(0, 1, 0, false), hp(0, -1, 1, false)],
            &f,
        );
        assert_eq!(open_corner.disk_separation(), DiskSeparation::Outside);
        let closed_corner = Cell::rect(rat_int(1), rat_int(0), rat_int(2), rat_int(1), &f);
        assert_eq!(closed_corner.disk_separation(), DiskSeparation::Meets);
    }

    #[test]
    fn vertex_excluded_between_solid_edges() {
        let f = Frame::default();
        // Closed triangle minus its apex (0,0), via a strict line through it.
        let c = Cell::from_halfplanes(
            [hp(0, 1, 0, false), hp(1, -1, 0, false), hp(-1, 0, 1, false), hp(1, 1, 0, true)],
            &f,
        );
        assert_eq!(c.vertices().len(), 3);
        assert_eq!(c.vertex_member(), &[false, true, true]);
        assert_eq!(c.edge_solid(), &[true, true, true]);
        assert_eq!(c.constraints().len(), 4);
    }

    #[test]
    fn degenerate_cells() {
        let f = Frame::default();
        let seg = Cell::from_halfplanes(
            [hp(0, 1, 0, false), hp(0, -1, 0, false), hp(1, 0, 0, true), hp(-1, 0, 1, false)],
            &f,
        );
        assert!(seg.is_segment());
        assert_eq!(seg.vertex_member(), &[false, true]);
        assert_eq!(seg.edge_solid(), &[true]);
        assert_eq!(seg.recanonicalize(), seg);
    }

    fn random_cell(rng: &mut ChaCha8Rng, frame: &Frame) -> Cell {
        let k = rng.gen_range(2..6);
        let hs = (0..k).map(|_| {
            let a = rng.gen_range(-4..=4);
            let b = if a == 0 { rng.gen_range(1..=4) } else { rng.gen_range(-4..=4) };
            let c = rng.gen_range(-4..=4);
            HalfPlane::new(rat_int(a), rat_int(b), ratio(c, rng.gen_range(1..=4)), rng.gen_bool(0.5))
        });
        Cell::from_halfplanes(hs, frame)
    }

    fn random_probe(rng: &mut ChaCha8Rng) -> QComplex {
        // Coarse grid so boundaries are hit often.
        QComplex::frac(rng.gen_range(-24..=24), 8, rng.gen_range(-24..=24), 8)
    }

    #[test]
    fn subtract_probe_consistency() {
        let f = Frame::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut probes = 0;
        for _ in 0..40 {
            let target = random_cell(&mut rng, &f);
            let covers: Vec<Cell> = (0..rng.gen_range(1..4)).map(|_| random_cell(&mut rng, &f)).collect();
            let res = subtract_cover(&target, &covers);
            assert!(res.iter().all(|c| !c.is_empty()));
            for _ in 0..250 {
                let p = random_probe(&mut rng);
                let expect = target.contains(&p) && covers.iter().all(|c| !c.contains(&p));
                let hits = res.iter().filter(|c| c.contains(&p)).count();
                assert!(hits <= 1, "residuals overlap at {p}");
                assert_eq!(hits == 1, expect, "probe {p}");
                probes += 1;
            }
        }
        assert_eq!(probes, 10_000);
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(12), failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn canonicalisation_idempotent(seed in 0u64..10_000) {
            let f = Frame::default();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_cell(&mut rng, &f);
            let again = c.recanonicalize();
            prop_assert_eq!(&again, &c);
            prop_assert_eq!(again.constraints(), c.constraints());
        }

        #[test]
        fn complement_partitions(a in -5i64..5, b in -5i64..5, c in -5i64..5, strict: bool, x in -20i64..20, y in -20i64..20) {
            prop_assume!(a != 0 || b != 0);
            let h = hp(a, b, c, strict);
            let p = QComplex::frac(x, 4, y, 4);
            prop_assert!(h.contains(&p) ^ h.complement().contains(&p));
        }

        #[test]
        fn cell_membership_matches_constraints(seed in 0u64..10_000) {
            let f = Frame::default();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let hs: Vec<HalfPlane> = (0..3).map(|_| {
                let a = rng.gen_range(1..=3);
                HalfPlane::new(rat_int(a), rat_int(rng.gen_range(-3..=3)), rat_int(rng.gen_range(-3..=3)), rng.gen_bool(0.5))
            }).collect();
            let c = Cell::from_halfplanes(hs.clone(), &f);
            for _ in 0..50 {
                let p = random_probe(&mut rng);
                let in_frame = f.halfplanes().iter().all(|h| h.contains(&p));
                prop_assert_eq!(c.contains(&p), in_frame && hs.iter().all(|h| h.contains(&p)));
            }
        }
    }
}
