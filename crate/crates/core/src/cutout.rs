//! Parameter cells cut out by floor conditions: the cutout polygon of a
//! cycle and the polyhedron on which a witness graph is realised.

use num_traits::One;
use serde::Serialize;

use crate::dynamics::WitnessGraph;
use crate::exact::{GaussianInt, Rational};
use crate::geometry::{Cell, Frame, HalfPlane, Linear};

pub use crate::dynamics::Cycle;

/// The four half-planes in `s = (x, y)` expressing `⌊s·w⌋ = k`, i.e.
/// `k ≤ Re(s·w) < k + 1` and the same for the imaginary part.
pub fn floor_constraints(w: &GaussianInt, k: &GaussianInt) -> [Linear; 4] {
    let (a, c) = (Rational::from_integer(w.re.clone()), Rational::from_integer(w.im.clone()));
    let (kx, ky) = (Rational::from_integer(k.re.clone()), Rational::from_integer(k.im.clone()));
    let one = Rational::one();
    // Re(s·w) = a·x − c·y, Im(s·w) = c·x + a·y.
    [
        HalfPlane::classify(a.clone(), -c.clone(), -kx.clone(), false),
        HalfPlane::classify(-a.clone(), c.clone(), &kx + &one, true),
        HalfPlane::classify(c.clone(), a.clone(), -ky.clone(), false),
        HalfPlane::classify(-c, -a, &ky + &one, true),
    ]
}

/// `{ r : ⌊r·a_i⌋ = −a_{i+1} for every step }`, clipped to `frame`.
pub fn cycle_polygon(pi: &Cycle, frame: &Frame) -> Cell {
    let ls = pi.steps().flat_map(|(a, b)| floor_constraints(a, &-b));
    Cell::from_linear(ls, frame)
}

/// The cell of parameters `s` that reproduce every recorded edge of `g`.
/// Witness `0` contributes nothing.
pub fn witness_polyhedron(g: &WitnessGraph, frame: &Frame) -> Cell {
    let mut ls = Vec::with_capacity(16 * g.len());
    for (a, [b1, b2, b3, b4]) in g.iter() {
        if a.is_zero() {
            continue;
        }
        ls.extend(witness_constraints(a, [b1, b2, b3, b4]));
    }
    Cell::from_linear(ls, frame)
}

/// The 16 constraints tying the four variant images of one witness.
pub fn witness_constraints(a: &GaussianInt, images: [&GaussianInt; 4]) -> Vec<Linear> {
    let [b1, b2, b3, b4] = images;
    let na = -a;
    let ca = a.conj();
    let nca = -&ca;
    let mut out = Vec::with_capacity(16);
    // γ_s(a) = b1
    out.extend(floor_constraints(a, &-b1));
    // −γ_s(−a) = b2
    out.extend(floor_constraints(&na, b2));
    // conj γ_s(conj a) = b3
    out.extend(floor_constraints(&ca, &-b3.conj()));
    // −conj γ_s(−conj a) = b4
    out.extend(floor_constraints(&nca, &b4.conj()));
    out
}

/// A cycle together with its cutout polygon, for JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct CutoutRecord {
    pub cycle: Cycle,
    pub polygon: Cell,
}

impl CutoutRecord {
    pub fn new(cycle: Cycle, frame: &Frame) -> CutoutRecord {
        let polygon = cycle_polygon(&cycle, frame);
        CutoutRecord { cycle, polygon }
    }
}
