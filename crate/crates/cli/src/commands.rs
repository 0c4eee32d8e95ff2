use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use qtk_core::construction::*;
use qtk_core::field::{Field, FieldElem, KVector};
use qtk_core::io::*;
use qtk_core::tiling::*;
use qtk_core::{catalog, polytope};
use serde_json::json;

use crate::outcome::Failure;
use crate::{Command, Format, SeedKind, Source, TilingType};

type Outcome = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        None => bail!("no input given (pass a file, `-`, or --example)"),
        Some(p) if p == Path::new("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
    }
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The triple and a name for it.
fn load(source: &Source) -> Result<(Triple, String), Failure> {
    if let Some(name) = &source.example {
        let t = catalog::example(name).map_err(|_| anyhow!("unknown example {name:?}; see `qtk example --list`"))?;
        return Ok((t, name.clone()));
    }
    let text = read_input(source.input.as_deref())?;
    let t = triple_from_json(&text)?;
    let name = name_of(&text)
        .or_else(|| source.input.as_ref().and_then(|p| p.file_stem()).map(|s| s.to_string_lossy().into_owned()))
        .filter(|s| s != "-")
        .unwrap_or_else(|| "triple".into());
    Ok((t, name))
}

fn parse_elem(field: Field, text: &str) -> anyhow::Result<FieldElem> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    if field.d() == 5 && (body == "phi" || body == "φ") {
        let p = field.phi();
        return Ok(if neg { -p } else { p });
    }
    field.parse(t).map_err(|e| anyhow!("cannot read {t:?} as an element of the field: {e}"))
}

fn parse_vector(field: Field, text: &str) -> anyhow::Result<KVector> {
    text.split(',').map(|s| parse_elem(field, s)).collect::<anyhow::Result<Vec<_>>>().map(KVector::new)
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { source } => validate(&source),
        Command::Present { source, format, output } => present(&source, format, output.as_deref()),
        Command::Charts { source, output } => {
            let (t, _) = load(&source)?;
            let charts = build_charts(&t)?;
            emit(output.as_deref(), &to_text(&charts_to_json(&charts, t.field())))?;
            Ok(())
        }
        Command::Classify { source, output } => {
            let (t, _) = load(&source)?;
            let c = classify(&t);
            emit(output.as_deref(), &to_text(&c.to_json()))?;
            if !c.simple {
                return Err(Failure::from(qtk_core::Error::Refused(Box::new(c))));
            }
            Ok(())
        }
        Command::Cut { source, normal, lambda, axis_of, out_dir, format } => {
            cut(&source, normal, lambda, axis_of, &out_dir, format)
        }
        Command::Tile { kind, steps, seed: s, whole, output } => {
            let system = match kind {
                TilingType::P2 => System::P2,
                TilingType::P3 => System::P3,
            };
            let kind = match s {
                SeedKind::Acute => Kind::Acute,
                SeedKind::Obtuse => Kind::Obtuse,
            };
            let half = seed(system, kind);
            let seeds = if whole { mirror_double(&half, system).to_vec() } else { vec![half] };
            let p = deflate(&Patch::new(system, seeds), steps);
            emit(output.as_deref(), &to_text(&patch_to_json(&p)))?;
            Ok(())
        }
        Command::Render { input, pair, inflate: levels, star, output } => {
            let style = Style::default();
            if star {
                emit(output.as_deref(), &render_star(&style))?;
                return Ok(());
            }
            let path = input.unwrap_or_else(|| PathBuf::from("-"));
            let p = patch_from_json(&read_input(Some(&path))?)?;
            let p = inflate(&p, levels)?;
            let svg = if pair {
                let pr = pair_tiles(&p, PairMode::of(p.system));
                let left: Vec<&HalfTile> = pr.leftovers.iter().collect();
                render_svg(&left, &pr.tiles, &style)
            } else {
                render_svg(&p.leaves(), &[], &style)
            };
            emit(output.as_deref(), &svg)?;
            Ok(())
        }
        Command::Report { source, format, output } => {
            let (t, _) = load(&source)?;
            let p = build_presentation(&t)?;
            let charts = build_charts(&t)?;
            let text = match format {
                Format::Text => emit_report(&p, &charts, t.field(), ReportFormat::Text),
                Format::Json => to_text(&report_to_json(&p, &charts, t.field())),
            };
            emit(output.as_deref(), &text)?;
            Ok(())
        }
        Command::Example { name, list, output } => {
            if list || name.is_none() {
                let mut s = String::new();
                for n in catalog::EXAMPLES.iter().chain(catalog::QUASILATTICES) {
                    s.push_str(n);
                    s.push('\n');
                }
                emit(output.as_deref(), &s)?;
                return Ok(());
            }
            let name = name.unwrap_or_default();
            let text = catalog::shipped_json(&name).ok_or_else(|| anyhow!("unknown example {name:?}"))?;
            emit(output.as_deref(), text)?;
            Ok(())
        }
    }
}

fn validate(source: &Source) -> Outcome {
    let (t, name) = load(source)?;
    let r = t.report();
    let c = classify(&t);
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "validation",
        "name": name,
        "valid": true,
        "field": { "D": t.field().d() },
        "d": t.d(),
        "n": t.n(),
        "bounded": r.bounded,
        "full_dim": r.full_dim,
        "simple": r.simple,
        "rational": c.rational,
        "vertex_count": r.vertex_count,
    });
    emit(None, &to_text(&v))?;
    Ok(())
}

fn present(source: &Source, format: Format, output: Option<&Path>) -> Outcome {
    let (t, _) = load(source)?;
    let p = build_presentation(&t)?;
    let doc = to_text(&presentation_to_json(&p, t.field()));
    if let Some(path) = output {
        emit(Some(path), &doc)?;
    }
    match format {
        Format::Text => emit(None, &emit_report(&p, &[], t.field(), ReportFormat::Text))?,
        Format::Json => emit(None, &doc)?,
    }
    Ok(())
}

fn cut(
    source: &Source,
    normal: Option<String>,
    lambda: Option<String>,
    axis_of: Option<String>,
    out_dir: &Path,
    format: Format,
) -> Outcome {
    let source = match &axis_of {
        Some(name) => Source { input: None, example: Some(name.clone()) },
        None => source.clone(),
    };
    let (t, name) = load(&source)?;
    let field = t.field();
    let (x, level) = match (normal, lambda) {
        (Some(n), Some(l)) => {
            let x = parse_vector(field, &n)?;
            if x.dim() != t.n() {
                return Err(anyhow!("normal has {} entries, the polytope dimension is {}", x.dim(), t.n()).into());
            }
            (x, parse_elem(field, &l)?)
        }
        (None, None) => catalog::axis_of(&name).map_err(|_| anyhow!("give --normal and --lambda, or --axis-of"))?,
        _ => return Err(anyhow!("--normal and --lambda go together").into()),
    };
    // refuse hyperplanes that miss the interior before touching the disk
    polytope::cut(t.polytope(), &x, &level)?;
    let r = cut_and_present(&t, &x, None, &level)?;
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let mut written = Vec::new();
    for (side, triple, p) in [("plus", &r.plus, &r.plus_presentation), ("minus", &r.minus, &r.minus_presentation)] {
        let stem = format!("{name}_{side}");
        let tp = out_dir.join(format!("{stem}.json"));
        let pp = out_dir.join(format!("{stem}_presentation.json"));
        emit(Some(&tp), &to_text(&triple_to_json(triple, Some(&stem))))?;
        emit(Some(&pp), &to_text(&presentation_to_json(p, field)))?;
        written.push((side, tp, pp, p));
    }
    match format {
        Format::Text => {
            for (side, tp, _, p) in &written {
                println!("# {side} side ({})", tp.display());
                print!("{}", emit_report(p, &[], field, ReportFormat::Text));
            }
        }
        Format::Json => {
            let sides: Vec<_> = written
                .iter()
                .map(|(side, tp, pp, p)| {
                    json!({
                        "side": side,
                        "triple": tp.display().to_string(),
                        "presentation_file": pp.display().to_string(),
                        "presentation": presentation_to_json(p, field),
                    })
                })
                .collect();
            print!("{}", to_text(&json!({ "schema_version": SCHEMA_VERSION, "kind": "cut", "sides": sides })));
        }
    }
    Ok(())
}
