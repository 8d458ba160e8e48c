//! The region 𝒢_C: the vertex formulas, the boundary chain with its
//! membership markup, exact point membership and sector windows.
//!
//! The chain runs from `(1,0)` through the origin and up the imaginary axis,
//! then clockwise through the pikes towards `(1,0)` again. The region is the
//! part enclosed by the chain, together with its mirror image. It is
//! star-shaped about the origin, so membership decomposes into a fan: one
//! open triangle per non-radial edge, the open rays to the vertices, the
//! solid radial edges and the overlined vertices.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{floor_rational, ratio, rat_int, QComplex, Rational};
use crate::geometry::{Cell, Frame, HalfPlane};

pub mod measure;
pub mod series;

pub use measure::{area_estimate, perimeter_estimate, Bracket};

/// `(c, D, E)` with `P_i(n) = (1 − c/D(n), E(n)/D(n))`; `D` and `E` are
/// coefficient lists from the constant term up.
const FORMULAS: [(i64, [i64; 3], [i64; 2]); 10] = [
    (2, [-2, 0, 1], [0, 1]),
    (1, [-1, -1, 1], [-1, 1]),
    (1, [0, -1, 1], [-1, 1]),
    (1, [0, 0, 1], [0, 1]),
    (1, [1, 0, 1], [0, 1]),
    (1, [1, 1, 1], [1, 1]),
    (1, [2, 1, 1], [1, 1]),
    (1, [2, 0, 1], [0, 1]),
    (1, [3, 0, 1], [0, 1]),
    (2, [6, 1, 1], [1, 1]),
];

/// `P_i(n)` as integers `(a, b, d)` with the point `(a/d, b/d)`, `d > 0`.
pub(crate) fn vertex_int(i: u8, n: i64) -> Result<(i128, i128, i128)> {
    let out_of_domain = || Error::Precondition(format!("P_{i}({n}) is not defined"));
    if i == 0 {
        return match n {
            1 => Ok((1, 0, 1)),
            2 => Ok((22, 4, 23)),
            3 => Ok((26, 4, 27)),
            _ => Err(out_of_domain()),
        };
    }
    let (c, d, e) = FORMULAS.get(i as usize - 1).ok_or_else(|| Error::Precondition(format!("no vertex P_{i}")))?;
    let n = n as i128;
    let den = d[0] as i128 + d[1] as i128 * n + d[2] as i128 * n * n;
    if den == 0 {
        return Err(out_of_domain());
    }
    let (a, b) = (den - *c as i128, e[0] as i128 + e[1] as i128 * n);
    Ok(if den < 0 { (-a, -b, -den) } else { (a, b, den) })
}

/// The vertex `P_i(n)`.
///
/// ```
/// use loudspeaker::region::vertex;
/// use loudspeaker::exact::QComplex;
/// assert_eq!(vertex(5, 7).unwrap(), QComplex::frac(49, 50, 7, 50));
/// assert!(vertex(3, 1).is_err());
/// ```
pub fn vertex(i: u8, n: i64) -> Result<QComplex> {
    let (a, b, d) = vertex_int(i, n)?;
    let q = |v: i128| Rational::new(v.into(), d.into());
    Ok(QComplex::new(q(a), q(b)))
}

/// One chain row: `(i, n, overlined, edge to the next vertex is solid)`.
type RowEntry = (u8, i64, bool, bool);

/// The irregular start of the chain, rows 0 to 7.
const PREFIX: [&[RowEntry]; 8] = [
    &[(0, 1, false, true), (5, 0, true, true), (6, 0, false, false)],
    &[(5, 1, true, true), (6, 1, false, true), (7, 0, true, false), (7, 1, false, false)],
    &[(5, 2, true, true), (6, 2, true, false), (7, 2, false, false), (8, 2, true, false)],
    &[(4, 3, false, false), (5, 3, true, true), (6, 3, false, false), (7, 3, false, false), (8, 3, true, true)],
    &[(3, 4, true, false), (4, 4, false, false), (5, 4, true, true), (6, 4, false, false), (7, 4, false, false), (8, 4, true, true)],
    &[
        (3, 5, true, false),
        (4, 5, false, false),
        (5, 5, true, true),
        (6, 5, false, false),
        (7, 5, false, false),
        (8, 5, true, true),
        (9, 5, true, true),
    ],
    &[
        (0, 2, true, true),
        (2, 6, true, true),
        (3, 6, true, false),
        (4, 6, false, false),
        (5, 6, true, true),
        (6, 6, false, false),
        (7, 6, false, false),
        (8, 6, true, true),
        (9, 6, true, true),
    ],
    &[
        (0, 3, true, true),
        (2, 7, true, true),
        (3, 7, true, false),
        (4, 7, false, false),
        (5, 7, true, true),
        (6, 7, false, false),
        (7, 7, false, false),
        (8, 7, true, true),
        (9, 7, true, true),
    ],
];

/// Every pike from 8 on has this shape.
const REGULAR: [(u8, bool, bool); 10] = [
    (1, true, true),
    (2, true, true),
    (3, true, false),
    (4, false, false),
    (5, true, true),
    (6, false, false),
    (7, false, false),
    (8, true, true),
    (9, true, true),
    (10, true, false),
];

pub(crate) fn row(m: i64) -> Vec<RowEntry> {
    match usize::try_from(m) {
        Ok(k) if k < PREFIX.len() => PREFIX[k].to_vec(),
        _ => REGULAR.iter().map(|&(i, o, s)| (i, m, o, s)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainVertex {
    pub point: QComplex,
    pub overline: bool,
    /// Which formula produced the vertex: `P_index(n)`.
    pub index: u8,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryChain {
    pub vertices: Vec<ChainVertex>,
    /// `solid[k]` belongs to the open edge `vertices[k] → vertices[k+1]`.
    pub solid: Vec<bool>,
    /// The pike (row) each vertex belongs to.
    pub pike_index: Vec<i64>,
}

impl BoundaryChain {
    /// Rows `lo..=hi` followed by the first vertex of row `hi + 1`.
    fn rows(lo: i64, hi: i64) -> BoundaryChain {
        let mut c = BoundaryChain { vertices: Vec::new(), solid: Vec::new(), pike_index: Vec::new() };
        let mut push = |(i, n, overline, _): RowEntry, pike: i64| {
            let point = vertex(i, n).expect("chain vertices are in range");
            c.vertices.push(ChainVertex { point, overline, index: i, n });
            c.pike_index.push(pike);
        };
        let mut solid = Vec::new();
        for m in lo..=hi {
            for e in row(m) {
                push(e, m);
                solid.push(e.3);
            }
        }
        push(row(hi + 1)[0], hi + 1);
        c.solid = solid;
        c
    }

    /// Line pieces, triangles and points whose union is the region enclosed by
    /// this stretch of chain (upper half only).
    fn fan(&self) -> Vec<Piece> {
        let o = QComplex::zero();
        let vs = &self.vertices;
        let mut pieces = Vec::new();
        let mut segments: Vec<(QComplex, QComplex)> = Vec::new();
        for (k, solid) in self.solid.iter().enumerate() {
            let (u, v) = (&vs[k].point, &vs[k + 1].point);
            if u == v {
                continue;
            }
            let turn = u.cross(v);
            if turn.is_zero() {
                if *solid {
                    segments.push((u.clone(), v.clone()));
                }
                continue;
            }
            let s = if turn.is_positive() { rat_int(1) } else { rat_int(-1) };
            let mut edge = HalfPlane::left_of(u, v, !solid);
            if !edge.eval(&o).is_positive() {
                edge = HalfPlane::left_of(v, u, !solid);
            }
            pieces.push(Piece::Set(vec![
                HalfPlane::new(-&s * &u.im, &s * &u.re, Rational::zero(), true),
                HalfPlane::new(&s * &v.im, -&s * &v.re, Rational::zero(), true),
                edge,
            ]));
        }
        for v in vs {
            if v.overline {
                pieces.push(Piece::Point(v.point.clone()));
            }
            if v.point.is_zero() {
                continue;
            }
            let nearest = vs
                .iter()
                .map(|w| &w.point)
                .filter(|w| !w.is_zero() && v.point.cross(w).is_zero() && v.point.dot(w).is_positive())
                .min_by(|a, b| a.norm_sqr().cmp(&b.norm_sqr()))
                .expect("a vertex lies on its own ray");
            segments.push((o.clone(), nearest.clone()));
        }
        segments.sort_by(|a, b| (a.0.re.clone(), a.0.im.clone(), a.1.re.clone(), a.1.im.clone()).cmp(&(b.0.re.clone(), b.0.im.clone(), b.1.re.clone(), b.1.im.clone())));
        segments.dedup();
        pieces.extend(segments.iter().map(|(p, q)| Piece::Set(open_segment(p, q))));
        pieces.dedup();
        pieces
    }
}

/// The chain from `P_0(1)` through pike `n_pikes`, closed by `P_1(n_pikes + 1)`.
///
/// ```
/// use loudspeaker::region::boundary_chain;
/// let c = boundary_chain(8);
/// assert!(c.vertices[1].point.is_zero() && c.vertices[1].overline);
/// assert_eq!(c.pike_index.iter().filter(|&&p| p == 8).count(), 10);
/// ```
pub fn boundary_chain(n_pikes: u64) -> BoundaryChain {
    BoundaryChain::rows(0, n_pikes.max(1) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Piece {
    Point(QComplex),
    Set(Vec<HalfPlane>),
}

impl Piece {
    fn contains(&self, p: &QComplex) -> bool {
        match self {
            Piece::Point(q) => p == q,
            Piece::Set(hs) => hs.iter().all(|h| h.contains(p)),
        }
    }

    fn cell(&self, clip: &[HalfPlane], frame: &Frame) -> Cell {
        match self {
            Piece::Point(q) if clip.iter().all(|h| h.contains(q)) => Cell::point(q, frame),
            Piece::Point(_) => Cell::empty(frame),
            Piece::Set(hs) => Cell::from_halfplanes(hs.iter().chain(clip).cloned(), frame),
        }
    }
}

/// The open segment between two distinct points.
fn open_segment(p: &QComplex, q: &QComplex) -> Vec<HalfPlane> {
    let d = q - p;
    vec![
        HalfPlane::left_of(p, q, false),
        HalfPlane::left_of(q, p, false),
        HalfPlane::new(d.re.clone(), d.im.clone(), -d.dot(p), true),
        HalfPlane::new(-&d.re, -&d.im, d.dot(q), true),
    ]
}

const PREFIX_ROWS: i64 = 9;

fn prefix_fan() -> &'static [Piece] {
    static FAN: OnceLock<Vec<Piece>> = OnceLock::new();
    FAN.get_or_init(|| BoundaryChain::rows(0, PREFIX_ROWS).fan())
}

/// The fan of rows `n0 − 2 ..= n0 + 2`, memoised for repeated probes.
fn local_fan(n0: i64) -> Arc<Vec<Piece>> {
    static FANS: OnceLock<Mutex<HashMap<i64, Arc<Vec<Piece>>>>> = OnceLock::new();
    let cache = FANS.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&n0) {
        return f.clone();
    }
    let fan = Arc::new(BoundaryChain::rows(n0 - 2, n0 + 2).fan());
    let mut map = cache.lock().unwrap();
    if map.len() >= 512 {
        map.clear();
    }
    map.insert(n0, fan.clone());
    fan
}

/// Exact membership in 𝒢_C.
///
/// ```
/// use loudspeaker::region::region_contains;
/// use loudspeaker::exact::QComplex;
/// assert!(region_contains(&QComplex::zero()));
/// assert!(!region_contains(&QComplex::ints(1, 0)));
/// assert!(region_contains(&QComplex::frac(5, 6, 1, 3)));
/// assert!(!region_contains(&QComplex::frac(2, 3, 2, 3)));
/// ```
pub fn region_contains(p: &QComplex) -> bool {
    let q = QComplex::new(p.re.clone(), p.im.abs());
    if !q.re.is_positive() || q.im.is_zero() || q.im.clone() * rat_int(8) > q.re {
        return prefix_fan().iter().any(|piece| piece.contains(&q));
    }
    let n0: i64 = floor_rational(&(&q.re / &q.im)).try_into().unwrap_or(i64::MAX / 4);
    local_fan(n0).iter().any(|piece| piece.contains(&q))
}

/// The half-planes `y > x/n`, `y ≤ x/(n−1)`, `x ≥ 0`.
pub fn sector_halfplanes(n: i64) -> Vec<HalfPlane> {
    let z = Rational::zero;
    vec![
        HalfPlane::new(-ratio(1, n), rat_int(1), z(), true),
        HalfPlane::new(ratio(1, n - 1), rat_int(-1), z(), false),
        HalfPlane::new(rat_int(1), z(), z(), false),
    ]
}

/// The sector `1/n < y/x ≤ 1/(n−1)` within the default frame.
///
/// ```
/// use loudspeaker::region::{sector_window, vertex};
/// assert!(sector_window(7).unwrap().contains(&vertex(4, 7).unwrap()));
/// ```
pub fn sector_window(n: i64) -> Result<Cell> {
    if n < 7 {
        return Err(Error::Precondition(format!("sector windows start at n = 7, got {n}")));
    }
    Ok(Cell::from_halfplanes(sector_halfplanes(n), &Frame::default()))
}

/// Cells whose union is 𝒢_C ∩ `clip`, using the fan of chain rows `lo..=hi`.
/// The caller must choose rows whose fan spans every slope allowed by `clip`.
pub fn gc_cells(lo: i64, hi: i64, clip: &[HalfPlane], frame: &Frame) -> Vec<Cell> {
    BoundaryChain::rows(lo.max(0), hi)
        .fan()
        .iter()
        .map(|piece| piece.cell(clip, frame))
        .filter(|c| !c.is_empty())
        .collect()
}

/// Cells whose union is exactly 𝒢_C ∩ `sector_window(n)`.
pub fn local_gc_cells(n: i64) -> Result<Vec<Cell>> {
    if n < 7 {
        return Err(Error::Precondition(format!("sector windows start at n = 7, got {n}")));
    }
    Ok(gc_cells(n - 2, n + 1, &sector_halfplanes(n), &Frame::default()))
}

/// Cells whose union is 𝒢_C ∩ {y ≥ 0} ∩ {slope > 1/(n−1) or x ≤ 0}: the part of
/// the upper half not covered by the sector windows from `n` on.
pub fn prefix_gc_cells(n: i64, frame: &Frame) -> Vec<Cell> {
    let clip = vec![
        HalfPlane::new(Rational::zero(), rat_int(1), Rational::zero(), false),
        HalfPlane::new(rat_int(-1), rat_int(n - 1), Rational::zero(), true),
    ];
    gc_cells(0, (n + 1).max(PREFIX_ROWS), &clip, frame)
}
