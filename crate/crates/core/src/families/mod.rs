//! The cycle families: fourteen explicit cycles `C_0(1..14)` and nineteen
//! parametric families `C_1 … C_19` built from generator terms, together
//! with their closed-form cutout polygons and the selection of instances
//! used to cover each sector.
//!
//! The data lives as text tables in [`data`](self) and is parsed once.
//!
//! ```
//! use loudspeaker::cutout::cycle_polygon;
//! use loudspeaker::families::{expand_generators, expected_cutout, FamilyInstance};
//! use loudspeaker::geometry::Frame;
//!
//! let frame = Frame::default();
//! let inst = FamilyInstance::new(17, 10, 1);
//! let cycle = expand_generators(&inst).unwrap();
//! assert_eq!(cycle_polygon(&cycle, &frame), expected_cutout(&inst, &frame).unwrap());
//! ```

mod data;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cutout::{cycle_polygon, Cycle};
use crate::error::{Error, Result};
use crate::exact::{rat_int, GaussianInt, QComplex, Rational};
use crate::expr::{tokenize, Env, Expr, Parser};
use crate::geometry::{Cell, Frame};

/// One member of a family: `C_family(n, m)`, or `C_0(n)` with `m = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: u8,
    pub n: i64,
    pub m: i64,
}

impl FamilyInstance {
    pub fn new(family: u8, n: i64, m: i64) -> FamilyInstance {
        FamilyInstance { family, n, m }
    }

    /// `C_0(n)`.
    pub fn explicit(n: i64) -> FamilyInstance {
        FamilyInstance { family: 0, n, m: 0 }
    }

    /// Whether `(n, m)` lies in the family's range of definition.
    pub fn is_valid(&self) -> bool {
        if self.family == 0 {
            return (1..=14).contains(&self.n) && self.m == 0;
        }
        definition(self).is_some()
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == 0 {
            write!(f, "C_0({})", self.n)
        } else {
            write!(f, "C_{}({},{})", self.family, self.n, self.m)
        }
    }
}

struct Term {
    negate: bool,
    generator: String,
    a: Expr,
    b: Expr,
}

struct Group {
    terms: Vec<Term>,
    index: Option<(usize, Expr)>,
    when: Option<Expr>,
}

struct Definition {
    family: u8,
    valid: Expr,
    groups: Vec<Group>,
}

struct CatalogVertex {
    x: Expr,
    y: Expr,
    member: bool,
}

struct CutoutCase {
    family: u8,
    guard: Expr,
    vertices: Vec<CatalogVertex>,
    solid: Vec<bool>,
}

struct Tables {
    generators: BTreeMap<String, (Expr, Expr)>,
    index_sets: Vec<(String, Expr)>,
    definitions: Vec<Definition>,
    cutouts: Vec<CutoutCase>,
    selection: Vec<(u8, Expr)>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables::parse().expect("family tables are well formed"))
}

impl Tables {
    fn parse() -> Result<Tables> {
        let index_sets = data::INDEX_SETS
            .iter()
            .map(|(name, e)| Ok((name.to_string(), Expr::parse(e)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tables {
            generators: parse_generators(data::GENERATORS)?,
            index_sets,
            definitions: parse_definitions(data::DEFINITIONS)?,
            cutouts: parse_cutouts(data::CUTOUTS)?,
            selection: parse_selection(data::SELECTION)?,
        })
    }
}

fn family_number(p: &mut Parser) -> Result<u8> {
    let f = p.integer()?;
    u8::try_from(f).ok().filter(|f| *f <= 19).ok_or_else(|| p.error("family number out of range"))
}

fn when_clause(p: &mut Parser) -> Result<Expr> {
    match p.next() {
        Some(crate::expr::Token::Word(w)) if w == "when" => {}
        _ => return Err(p.error("expected `when(...)`")),
    }
    p.expect("(")?;
    let e = p.expr()?;
    p.expect(")")?;
    Ok(e)
}

fn pair(p: &mut Parser) -> Result<(Expr, Expr)> {
    p.expect("(")?;
    let x = p.expr()?;
    p.expect(",")?;
    let y = p.expr()?;
    p.expect(")")?;
    Ok((x, y))
}

fn parse_generators(src: &str) -> Result<BTreeMap<String, (Expr, Expr)>> {
    let toks = tokenize(src)?;
    let mut p = Parser::new(&toks);
    let mut out = BTreeMap::new();
    while !p.done() {
        let name = p.word()?.to_string();
        p.expect("=")?;
        let xy = pair(&mut p)?;
        p.expect(";")?;
        out.insert(name, xy);
    }
    Ok(out)
}

fn parse_definitions(src: &str) -> Result<Vec<Definition>> {
    let toks = tokenize(src)?;
    let mut p = Parser::new(&toks);
    let mut out = Vec::new();
    while !p.done() {
        let family = family_number(&mut p)?;
        let valid = when_clause(&mut p)?;
        p.expect(":")?;
        let mut groups = Vec::new();
        while !p.eat(";") {
            p.expect("(")?;
            let mut terms = Vec::new();
            loop {
                let negate = p.eat("-");
                let generator = p.word()?.to_string();
                let (a, b) = pair(&mut p)?;
                terms.push(Term { negate, generator, a, b });
                if p.eat(")") {
                    break;
                }
                p.expect(",")?;
            }
            let mut index = None;
            if let Some(crate::expr::Token::Word(w)) = p.peek() {
                if let Some(i) = data::INDEX_SETS.iter().position(|(name, _)| name == w) {
                    p.next();
                    p.expect("(")?;
                    let e = p.expr()?;
                    p.expect(")")?;
                    index = Some((i, e));
                }
            }
            let when = match p.peek() {
                Some(crate::expr::Token::Word(w)) if w == "when" => Some(when_clause(&mut p)?),
                _ => None,
            };
            groups.push(Group { terms, index, when });
        }
        out.push(Definition { family, valid, groups });
    }
    Ok(out)
}

fn parse_cutouts(src: &str) -> Result<Vec<CutoutCase>> {
    let toks = tokenize(src)?;
    let mut p = Parser::new(&toks);
    let mut out = Vec::new();
    while !p.done() {
        let family = family_number(&mut p)?;
        let guard = when_clause(&mut p)?;
        p.expect(":")?;
        let mut vertices = Vec::new();
        let mut solid = Vec::new();
        loop {
            let member = p.eat("#");
            let (x, y) = pair(&mut p)?;
            vertices.push(CatalogVertex { x, y, member });
            if p.eat("--") {
                solid.push(true);
            } else if p.eat("..") {
                solid.push(false);
            }
            if p.eat(";") {
                break;
            }
        }
        out.push(CutoutCase { family, guard, vertices, solid });
    }
    Ok(out)
}

fn parse_selection(src: &str) -> Result<Vec<(u8, Expr)>> {
    let toks = tokenize(src)?;
    let mut p = Parser::new(&toks);
    let mut out = Vec::new();
    while !p.done() {
        let family = family_number(&mut p)?;
        let range = when_clause(&mut p)?;
        p.expect(";")?;
        out.push((family, range));
    }
    Ok(out)
}

fn env(inst: &FamilyInstance) -> Env {
    Env::new().with('n', rat_int(inst.n)).with('m', rat_int(inst.m))
}

fn definition(inst: &FamilyInstance) -> Option<&'static Definition> {
    let e = env(inst);
    tables()
        .definitions
        .iter()
        .filter(|d| d.family == inst.family)
        .find(|d| d.valid.truth(&e).unwrap_or(false))
}

fn integral(q: Rational, inst: &FamilyInstance) -> Result<num_bigint::BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::Family(format!("{inst}: generator produced the non-integer {q}")))
    }
}

/// The cycle of a family instance: `C_0(n)` is looked up, the others are
/// expanded group by group, each indexed group for `k = 1, 2, …` in turn.
pub fn expand_generators(inst: &FamilyInstance) -> Result<Cycle> {
    if inst.family == 0 {
        if !inst.is_valid() {
            return Err(Error::Family(format!("{inst} is not one of the explicit cycles")));
        }
        return Cycle::from_pairs(data::EXPLICIT[(inst.n - 1) as usize]);
    }
    let def = definition(inst).ok_or_else(|| Error::Family(format!("{inst} is outside the family's range")))?;
    let t = tables();
    let base = env(inst);
    let mut seq = Vec::new();
    for g in &def.groups {
        if let Some(c) = &g.when {
            if !c.truth(&base)? {
                continue;
            }
        }
        let ks: Vec<Option<i64>> = match &g.index {
            None => vec![None],
            Some((i, arg)) => {
                let a = arg.num(&base)?;
                let upper = t.index_sets[*i].1.num(&base.clone().with('a', a))?;
                let upper = integral(upper, inst)?.to_i64().ok_or_else(|| Error::Family("index set too large".into()))?;
                (1..=upper).map(Some).collect()
            }
        };
        for k in ks {
            for term in &g.terms {
                let (gx, gy) = t
                    .generators
                    .get(&term.generator)
                    .ok_or_else(|| Error::Family(format!("unknown generator {}", term.generator)))?;
                // The sign applies to the generator, the offset comes after:
                // `-g(a,b)` is `-g(0,0) + (a,b)`.
                let mut e = base.clone().with('a', rat_int(0)).with('b', rat_int(0));
                if let Some(k) = k {
                    e.set('k', rat_int(k));
                }
                let (mut x, mut y) = (gx.num(&e)?, gy.num(&e)?);
                if term.negate {
                    x = -x;
                    y = -y;
                }
                x += term.a.num(&base)?;
                y += term.b.num(&base)?;
                seq.push(GaussianInt::from_big(integral(x, inst)?, integral(y, inst)?));
            }
        }
    }
    Cycle::new(seq)
}

/// The printed cutout cases whose guard holds for `inst`, in table order.
fn cutout_cases(inst: &FamilyInstance) -> Vec<&'static CutoutCase> {
    let e = env(inst);
    tables()
        .cutouts
        .iter()
        .filter(|c| c.family == inst.family && c.guard.truth(&e).unwrap_or(false))
        .collect()
}

impl CutoutCase {
    fn cell(&self, inst: &FamilyInstance, frame: &Frame) -> Result<Cell> {
        let e = env(inst);
        let mut pts = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            pts.push(QComplex::new(v.x.num(&e)?, v.y.num(&e)?));
        }
        let mut member: Vec<bool> = self.vertices.iter().map(|v| v.member).collect();
        let mut solid = self.solid.clone();
        // At the ends of a parameter range neighbouring vertices can meet;
        // the zero-length edge between them disappears.
        let mut i = 0;
        while pts.len() > 1 && i < pts.len() {
            let j = (i + 1) % pts.len();
            if pts[i] != pts[j] {
                i += 1;
                continue;
            }
            // Drop vertex i and the edge i -> j.
            member[j] |= member[i];
            pts.remove(i);
            member.remove(i);
            if !solid.is_empty() {
                solid.remove(i);
            }
        }
        if pts.len() == 1 {
            solid.clear();
        }
        Cell::from_marked_polygon(&pts, &member, &solid, frame)
            .map_err(|err| Error::Family(format!("{inst}: printed cutout: {err}")))
    }
}

/// The closed-form cutout polygon of `inst`, from the first printed case
/// whose guard holds.
pub fn expected_cutout(inst: &FamilyInstance, frame: &Frame) -> Result<Cell> {
    match cutout_cases(inst).first() {
        Some(case) => case.cell(inst, frame),
        None => Err(Error::Family(format!("no printed cutout case covers {inst}"))),
    }
}

/// Every printed case that applies to `inst`, as cells. Overlapping guards
/// must describe the same polygon.
pub fn expected_cutouts_all(inst: &FamilyInstance, frame: &Frame) -> Result<Vec<Cell>> {
    cutout_cases(inst).iter().map(|c| c.cell(inst, frame)).collect()
}

/// All valid instances with `n ≤ n_max` (and `C_0(n)` for `n ≤ min(n_max, 14)`).
pub fn valid_instances(n_max: i64) -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = (1..=n_max.min(14)).map(FamilyInstance::explicit).collect();
    for family in 1..=19u8 {
        for n in 1..=n_max {
            for m in -1..=n {
                let inst = FamilyInstance::new(family, n, m);
                if inst.is_valid() {
                    out.push(inst);
                }
            }
        }
    }
    out
}

/// Whether `inst` lies in the range the selection table uses for
/// verification (which can differ from the range of definition).
pub fn in_selection_range(inst: &FamilyInstance) -> bool {
    if inst.family == 0 {
        return inst.is_valid();
    }
    let e = env(inst);
    tables().selection.iter().any(|(f, r)| *f == inst.family && r.truth(&e).unwrap_or(false))
}

/// Selection-table instances with `n` in `lo..=hi`, every family.
pub fn selection_range(lo: i64, hi: i64) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for family in 1..=19u8 {
        for n in lo.max(1)..=hi {
            for m in -1..=n {
                let inst = FamilyInstance::new(family, n, m);
                if in_selection_range(&inst) && inst.is_valid() {
                    out.push(inst);
                }
            }
        }
    }
    out
}

/// The selection-table instances of pike `n`, together with those of nearby
/// pikes and the fixed instances whose cutout polygons meet the sector window
/// of `n`. A cutout of an
/// instance with parameter `k` only reaches the windows `k − 1` and `k`.
pub fn selection(n: i64) -> Result<Vec<FamilyInstance>> {
    Ok(selection_cells(n)?.into_iter().map(|(inst, _)| inst).collect())
}

/// [`selection`] together with each instance's cutout polygon in the frame
/// of the sector window.
pub fn selection_cells(n: i64) -> Result<Vec<(FamilyInstance, Cell)>> {
    let window = crate::region::sector_window(n)?;
    let frame = window.frame().clone();
    let fixed = data::SELECTION_FIXED.iter().map(|&(f, n, m)| FamilyInstance::new(f, n, m));
    let mut out = Vec::new();
    for inst in selection_range(n - 2, n + 2).into_iter().chain(fixed) {
        let cell = cycle_polygon(&expand_generators(&inst)?, &frame);
        if inst.n == n || !cell.intersect(&window).is_empty() {
            out.push((inst, cell));
        }
    }
    Ok(out)
}

/// The fixed instances used below the regular sectors: `C_0(1..14)`, the
/// four special instances, and the selection table up to pike `n_hi`.
pub fn prefix_instances(n_hi: i64) -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = (1..=14).map(FamilyInstance::explicit).collect();
    out.extend(data::SELECTION_FIXED.iter().map(|&(f, n, m)| FamilyInstance::new(f, n, m)));
    for inst in selection_range(1, n_hi) {
        if !out.contains(&inst) {
            out.push(inst);
        }
    }
    out
}

/// One row of the catalog comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub instance: FamilyInstance,
    pub cycle: Cycle,
    pub computed_cutout: Cell,
    pub expected_cutout: Option<Cell>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Compares the computed and printed cutout of one instance. Every
/// applicable printed case must agree with the computation.
pub fn catalog_entry(inst: &FamilyInstance, frame: &Frame) -> Result<CatalogEntry> {
    let cycle = expand_generators(inst)?;
    let computed = cycle_polygon(&cycle, frame);
    let (expected, matches, note) = match expected_cutouts_all(inst, frame) {
        Ok(cells) if cells.is_empty() => (None, false, Some("no printed case applies".to_string())),
        Ok(cells) => {
            let ok = cells.iter().all(|c| *c == computed);
            (cells.into_iter().next(), ok, None)
        }
        Err(e) => (None, false, Some(e.to_string())),
    };
    Ok(CatalogEntry { instance: *inst, cycle, computed_cutout: computed, expected_cutout: expected, matches, note })
}

/// [`catalog_entry`] for every valid instance with `n ≤ n_max`, in parallel.
pub fn catalog_check(n_max: i64, frame: &Frame) -> Result<Vec<CatalogEntry>> {
    valid_instances(n_max).par_iter().map(|inst| catalog_entry(inst, frame)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn frame() -> Frame {
        Frame::default()
    }

    #[test]
    fn tables_parse() {
        let t = tables();
        assert_eq!(t.generators.len(), 17);
        assert_eq!(t.definitions.len(), 21);
        assert_eq!(t.selection.len(), 19);
        assert!(t.cutouts.len() > 60);
    }

    #[test]
    fn validity_ranges() {
        assert!(FamilyInstance::new(1, 2, -1).is_valid());
        assert!(!FamilyInstance::new(1, 7, 1).is_valid());
        assert!(FamilyInstance::new(1, 8, 1).is_valid());
        assert!(FamilyInstance::new(8, 1, -1).is_valid());
        assert!(FamilyInstance::new(8, 7, 1).is_valid());
        assert!(!FamilyInstance::new(8, 8, 1).is_valid());
        assert!(FamilyInstance::new(19, 1, 0).is_valid());
        assert!(!FamilyInstance::new(19, 2, 0).is_valid());
        assert!(FamilyInstance::new(19, 6, 1).is_valid());
        assert!(!FamilyInstance::explicit(15).is_valid());
    }

    #[test]
    fn explicit_cycle_lookup() {
        let c = expand_generators(&FamilyInstance::explicit(1)).unwrap();
        assert_eq!(c, Cycle::from_pairs(data::EXPLICIT[0]).unwrap());
        assert!(c.is_cycle_of(&QComplex::frac(2, 3, 2, 3)));
    }

    #[test]
    fn c19_smallest_triangle() {
        let inst = FamilyInstance::new(19, 1, 0);
        let got = cycle_polygon(&expand_generators(&inst).unwrap(), &frame());
        let want = Cell::from_marked_polygon(
            &[QComplex::frac(1, 2, 3, 4), QComplex::frac(1, 2, 1, 1), QComplex::frac(2, 5, 4, 5)],
            &[true, false, true],
            &[true, true, true],
            &frame(),
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn c5_small_case() {
        let inst = FamilyInstance::new(5, 2, 0);
        let got = cycle_polygon(&expand_generators(&inst).unwrap(), &frame());
        // (1, 1/n), (1 − 1/(n²+n−1), (n+1)/(n²+n−1)), (1 − 1/n², n/n²) at n = 2.
        let vs = [QComplex::frac(1, 1, 1, 2), QComplex::frac(4, 5, 3, 5), QComplex::frac(3, 4, 1, 2)];
        let want = Cell::from_marked_polygon(&vs, &[false, true, false], &[true, true, false], &frame()).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn printed_examples() {
        let f = frame();
        let c17 = expected_cutout(&FamilyInstance::new(17, 10, 1), &f).unwrap();
        let d = 6 * 10 + 6 * 10 - 3 - 2;
        assert_eq!(c17, Cell::point(&QComplex::new(rat_int(1) - ratio(1, d), ratio(12, d)), &f));
        let c8 = expected_cutout(&FamilyInstance::new(8, 2, -1), &f).unwrap();
        assert_eq!(c8.vertices().len(), 3);
        assert!(c8.contains(&QComplex::frac(5, 8, 1, 2)));
        assert!(!c8.contains(&QComplex::frac(2, 3, 2, 3)));
        assert!(expected_cutout(&FamilyInstance::new(0, 13, 0), &f).unwrap().contains(&QComplex::frac(60, 61, 11, 61)));
    }

    #[test]
    fn selection_examples() {
        let s = selection_range(20, 20);
        let c1: Vec<i64> = s.iter().filter(|i| i.family == 1).map(|i| i.m).collect();
        assert_eq!(c1, (-1..=5).collect::<Vec<_>>());
        let c19: Vec<i64> = s.iter().filter(|i| i.family == 19).map(|i| i.m).collect();
        assert_eq!(c19, vec![0, 1, 2, 3]);
        let c16: Vec<i64> = selection_range(7, 7).iter().filter(|i| i.family == 16).map(|i| i.m).collect();
        assert_eq!(c16, vec![1]);
        let s = selection(20).unwrap();
        for m in -1..=5 {
            assert!(s.contains(&FamilyInstance::new(1, 20, m)), "C_1(20,{m})");
        }
        assert!(selection(6).is_err());
    }

    #[test]
    fn uncovered_instance_is_an_error() {
        assert!(expected_cutout(&FamilyInstance::new(1, 4, 0), &frame()).is_err());
        assert!(expand_generators(&FamilyInstance::new(1, 4, 0)).is_err());
    }
}
