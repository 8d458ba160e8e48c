use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use loudspeaker::cutout::{CutoutRecord, Cycle};
use loudspeaker::dynamics::{decide_finiteness, orbit, witness_graph};
use loudspeaker::exact::{parse_rational, GaussianInt, QComplex, Rational};
use loudspeaker::families::{catalog_check, expand_generators, selection_cells, FamilyInstance};
use loudspeaker::geometry::{Cell, Frame};
use loudspeaker::region::{area_estimate, boundary_chain, perimeter_estimate, region_contains};
use loudspeaker::verify::{
    critical_orbit_check, flood_fill_tiles, rotation_cycle_check, step_rule_check, verify_prefix, verify_sector_without,
    Verdict,
};

#[derive(Parser)]
#[command(name = "loudspeaker", version, about = "Gaussian shift radix systems and the Loudspeaker region")]
struct Cli {
    /// Worker threads for the parallel campaigns (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output here instead of standard output.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Iterate γ_r from a starting point.
    Orbit {
        #[arg(long, value_parser = qcomplex)]
        r: QComplex,
        #[arg(long, value_parser = gaussian, allow_hyphen_values = true)]
        a: GaussianInt,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Decide whether every orbit of γ_r reaches zero.
    Decide {
        #[arg(long, value_parser = qcomplex)]
        r: QComplex,
        #[arg(long, default_value_t = 1 << 16)]
        budget: usize,
    },
    /// The witness graph of r: every witness with its four variant images.
    Witnesses {
        #[arg(long, value_parser = qcomplex)]
        r: QComplex,
        #[arg(long, default_value_t = 1 << 16)]
        budget: usize,
    },
    /// The cutout polygon of a family instance or of an explicit cycle.
    Cutout {
        #[arg(long, requires = "n", conflicts_with = "cycle")]
        family: Option<u8>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
        /// Cycle elements as "a,b;c,d;...".
        #[arg(long, value_parser = cycle, allow_hyphen_values = true)]
        cycle: Option<Cycle>,
    },
    /// Compare computed and printed cutouts of every valid instance.
    FamilyCheck {
        #[arg(long, default_value_t = 30)]
        n_max: i64,
        /// Emit every entry, not only the mismatches.
        #[arg(long)]
        full: bool,
    },
    /// Membership of r in the conjectured region.
    RegionContains {
        #[arg(long, value_parser = qcomplex)]
        r: QComplex,
    },
    /// SVG drawing of the boundary chain, optionally with sector covers.
    BoundarySvg {
        #[arg(long, default_value_t = 12)]
        pikes: u64,
        /// Viewport "x0,y0,x1,y1"; defaults to the first-quadrant unit box.
        #[arg(long, value_parser = window)]
        zoom: Option<[Rational; 4]>,
        /// Overlay the cutout polygons used for this sector.
        #[arg(long)]
        sector: Option<i64>,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
    /// Certified brackets for perimeter and area.
    Measure {
        #[arg(long, default_value_t = 10_000)]
        pikes: u64,
        #[arg(long, default_value_t = 256)]
        bits: u32,
    },
    /// Coverage of sector windows by the selected cutouts.
    VerifySector {
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 7)]
        from: i64,
        #[arg(long, default_value_t = 30)]
        to: i64,
        /// Families to leave out of the covers, comma separated.
        #[arg(long, value_delimiter = ',')]
        omit: Vec<u8>,
    },
    /// Coverage of the region above the sector windows.
    VerifyPrefix,
    /// Tile the region within a disk by witness polyhedra.
    VerifyTiles {
        #[arg(long, value_parser = rational, default_value = "1/4")]
        radius: Rational,
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    /// The critical-point computations.
    CriticalCheck {
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_parser = qcomplex)]
        r: Option<QComplex>,
        /// With --n and --r: check the step rule at this point.
        #[arg(long, value_parser = gaussian, allow_hyphen_values = true)]
        z: Option<GaussianInt>,
        /// Check the rotation cycles of ±i through this point.
        #[arg(long, value_parser = gaussian, allow_hyphen_values = true)]
        rotation: Option<GaussianInt>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn qcomplex(s: &str) -> Result<QComplex, String> {
    QComplex::parse(s).map_err(|e| e.to_string())
}

fn gaussian(s: &str) -> Result<GaussianInt, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(GaussianInt::new(p(a)?, p(b)?))
}

fn cycle(s: &str) -> Result<Cycle, String> {
    let elems = s.split(';').map(gaussian).collect::<Result<Vec<_>, _>>()?;
    Cycle::new(elems).map_err(|e| e.to_string())
}

fn window(s: &str) -> Result<[Rational; 4], String> {
    let v = s.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    let w: [Rational; 4] = v.try_into().map_err(|_| "expected four numbers x0,y0,x1,y1".to_string())?;
    if w[0] >= w[2] || w[1] >= w[3] {
        return Err("empty viewport".into());
    }
    Ok(w)
}

/// What a subcommand produced: the text to emit and whether it counts as a
/// failed verification.
struct Output {
    text: String,
    failed: bool,
}

fn json_out<T: Serialize>(v: &T, failed: bool) -> Output {
    let mut text = serde_json::to_string_pretty(v).expect("reports serialize");
    text.push('\n');
    Output { text, failed }
}

fn run(cmd: Cmd) -> loudspeaker::Result<Output> {
    Ok(match cmd {
        Cmd::Orbit { r, a, budget } => json_out(&orbit(&r, &a, budget), false),
        Cmd::Decide { r, budget } => {
            let f = decide_finiteness(&r, budget);
            let mut v = serde_json::to_value(&f).expect("verdicts serialize");
            v["finite"] = json!(f.is_finite());
            json_out(&v, false)
        }
        Cmd::Witnesses { r, budget } => {
            let g = witness_graph(&r, budget)?;
            json_out(&json!({ "count": g.len(), "graph": g }), false)
        }
        Cmd::Cutout { family, n, m, cycle } => {
            let frame = Frame::default();
            let (instance, cycle) = match (family, cycle) {
                (_, Some(c)) => (None, c),
                (Some(f), None) => {
                    let n = n.expect("clap requires --n with --family");
                    let inst = if f == 0 { FamilyInstance::explicit(n) } else { FamilyInstance::new(f, n, m) };
                    (Some(inst), expand_generators(&inst)?)
                }
                (None, None) => return Err(loudspeaker::Error::Precondition("give --family and --n, or --cycle".into())),
            };
            let rec = CutoutRecord::new(cycle, &frame);
            json_out(&json!({ "instance": instance.map(|i| i.to_string()), "cycle": rec.cycle, "polygon": rec.polygon }), false)
        }
        Cmd::FamilyCheck { n_max, full } => {
            let entries = catalog_check(n_max, &Frame::default())?;
            let bad: Vec<_> = entries.iter().filter(|e| !e.matches).collect();
            let failed = !bad.is_empty();
            if full {
                json_out(&json!({ "checked": entries.len(), "mismatches": bad.len(), "entries": entries }), failed)
            } else {
                json_out(&json!({ "checked": entries.len(), "mismatches": bad.len(), "entries": bad }), failed)
            }
        }
        Cmd::RegionContains { r } => json_out(&json!({ "contains": region_contains(&r) }), false),
        Cmd::BoundarySvg { pikes, zoom, sector, width } => {
            let covers = match sector {
                Some(n) => selection_cells(n)?.into_iter().map(|(_, c)| c).collect(),
                None => Vec::new(),
            };
            let zoom = zoom.unwrap_or_else(|| [0, 0, 1, 1].map(|v: i64| Rational::from_integer(v.into())));
            Output { text: svg(pikes, &zoom, &covers, width), failed: false }
        }
        Cmd::Measure { pikes, bits } => {
            let perimeter = perimeter_estimate(pikes, bits)?;
            let area = area_estimate(pikes, bits)?;
            json_out(&json!({ "pikes": pikes, "bits": bits, "perimeter": perimeter, "area": area }), false)
        }
        Cmd::VerifySector { n, from, to, omit } => {
            let (lo, hi) = n.map_or((from, to), |n| (n, n));
            if lo < 7 || hi < lo {
                return Err(loudspeaker::Error::Precondition(format!("sector range {lo}..={hi} must lie in [7, ∞)")));
            }
            use rayon::prelude::*;
            let reports = (lo..=hi).into_par_iter().map(|k| verify_sector_without(k, &omit)).collect::<Result<Vec<_>, _>>()?;
            let failed = reports.iter().any(|r| r.verdict != Verdict::Covered);
            if n.is_some() {
                json_out(&reports[0], failed)
            } else {
                json_out(&reports, failed)
            }
        }
        Cmd::VerifyPrefix => {
            let r = verify_prefix()?;
            let failed = r.verdict != Verdict::Covered;
            json_out(&r, failed)
        }
        Cmd::VerifyTiles { radius, budget } => {
            let r = flood_fill_tiles(&radius, budget)?;
            let failed = r.verdict != Verdict::Covered;
            json_out(&r, failed)
        }
        Cmd::CriticalCheck { n, r, z, rotation } => {
            let mut v = serde_json::Map::new();
            match (n, r) {
                (Some(n), Some(r)) => {
                    v.insert("orbit".into(), json!(critical_orbit_check(n, &r)?));
                    if let Some(z) = &z {
                        v.insert("step_rule".into(), json!(step_rule_check(n, &r, z)?));
                    }
                }
                (None, None) => {}
                _ => return Err(loudspeaker::Error::Precondition("--n and --r go together".into())),
            }
            if let Some(z) = &rotation {
                v.insert("rotation".into(), json!(rotation_cycle_check(z)));
            }
            if v.is_empty() {
                return Err(loudspeaker::Error::Precondition("nothing to check: give --n and --r, or --rotation".into()));
            }
            let failed = v.values().any(|b| b == &json!(false));
            json_out(&v, failed)
        }
    })
}

/// The chain through `pikes` pikes (and its mirror image), drawn in the
/// viewport `zoom` with `y` pointing up.
fn svg(pikes: u64, zoom: &[Rational; 4], covers: &[Cell], width: u32) -> String {
    let [x0, y0, x1, y1] = zoom.clone().map(|q| rational_to_f64(&q));
    let w = width as f64;
    let h = w * (y1 - y0) / (x1 - x0);
    let sx = |x: f64| (x - x0) / (x1 - x0) * w;
    let sy = |y: f64| (y1 - y) / (y1 - y0) * h;
    let pt = |p: &QComplex| {
        let (x, y) = p.to_f64();
        (sx(x), sy(y))
    };
    let stroke = w / 800.0;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for c in covers {
        if c.vertices().len() < 3 {
            continue;
        }
        let pts: Vec<String> = c.vertices().iter().map(|v| {
            let (x, y) = pt(v);
            format!("{x:.3},{y:.3}")
        }).collect();
        let _ = writeln!(s, r##"<polygon points="{}" fill="#3070c0" fill-opacity="0.25" stroke="#3070c0" stroke-width="{:.3}"/>"##, pts.join(" "), stroke * 0.5);
    }
    let chain = boundary_chain(pikes);
    for mirror in [false, true] {
        let p = |v: &QComplex| if mirror { pt(&v.conj()) } else { pt(v) };
        for (k, solid) in chain.solid.iter().enumerate() {
            let (a, b) = (p(&chain.vertices[k].point), p(&chain.vertices[k + 1].point));
            let dash = if *solid { String::new() } else { format!(r#" stroke-dasharray="{:.3},{:.3}""#, 4.0 * stroke, 3.0 * stroke) };
            let _ = writeln!(
                s,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="{stroke:.3}"{dash}/>"#,
                a.0, a.1, b.0, b.1
            );
        }
        for v in &chain.vertices {
            let (x, y) = p(&v.point);
            let fill = if v.overline { "black" } else { "white" };
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="{fill}" stroke="black" stroke-width="{:.3}"/>"#, 2.0 * stroke, 0.5 * stroke);
        }
    }
    s.push_str("</svg>\n");
    s
}

fn rational_to_f64(q: &Rational) -> f64 {
    QComplex::new(q.clone(), Rational::from_integer(0.into())).to_f64().0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.cmd) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
