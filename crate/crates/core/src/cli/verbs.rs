use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use super::docs::{self, emit_chain, emit_complex, emit_dims, emit_matrix, emit_rational};
use super::{Command, Report};
use crate::complex::{cone, link, suspension, validate, Perversity, StratifiedComplex};
use crate::conecalc::{
    chern_mather_lift, cone_formula, gysin_link, hard_lefschetz_from_links, link_map_chase,
    projective_cone_table, ChaseStep, HlVerdict,
};
use crate::error::{Error, Result};
use crate::exactla::{GradedDims, Rational, RationalMatrix};
use crate::ichains::{
    flag_classes, fundamental_class, ih_betti, lift_class_between, link_map, verify_cone_formula,
    FlagInput,
};
use crate::surgery::{extract_link_cycle, repair_cycle, SurgeryProblem};

pub(super) fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Validate { complex } => validate_verb(&read_complex(complex)?),
        Command::Betti {
            complex,
            perversity,
            relative,
        } => {
            let rel = relative.as_deref().map(read_complex).transpose()?;
            betti(
                &read_complex(complex)?,
                &perversity.perversity,
                rel.as_ref(),
            )
        }
        Command::Cone { complex, apex } => {
            let x = read_complex(complex)?;
            let c = cone(&x, apex)?;
            Ok(complex_report(&format!("cone with apex '{apex}'"), &c))
        }
        Command::Suspend {
            complex,
            north,
            south,
        } => {
            let s = suspension(&read_complex(complex)?, north, south)?;
            Ok(complex_report(
                &format!("suspension with apexes '{north}', '{south}'"),
                &s,
            ))
        }
        Command::Link { complex, vertex } => {
            let l = link(&read_complex(complex)?, vertex)?;
            Ok(complex_report(&format!("link of '{vertex}'"), &l))
        }
        Command::Linkmap {
            x,
            y,
            vertex,
            degree,
            perversity,
        } => linkmap(
            &read_complex(x)?,
            &read_complex(y)?,
            vertex,
            *degree,
            &perversity.perversity,
        ),
        Command::Surgery {
            x,
            y,
            apex,
            chain,
            subdivide,
            perversity,
        } => {
            let (x, y) = (read_complex(x)?, read_complex(y)?);
            let xi = match chain {
                Some(path) => docs::parse_chain(&read(path)?, x.complex())?,
                None => fundamental_class(&x)?,
            };
            let mut p = SurgeryProblem::new(x, y, apex, &xi)?
                .with_perversity(perversity.perversity.clone());
            if *subdivide {
                p = p.subdivided()?;
            }
            surgery(&p)
        }
        Command::Lift {
            complex,
            chain,
            from,
            to,
        } => {
            let y = read_complex(complex)?;
            let z = docs::parse_chain(&read(chain)?, y.complex())?;
            lift(&y, &z, from, to)
        }
        Command::Flag { complexes } => {
            let xs = complexes
                .iter()
                .map(|p| read_complex(p))
                .collect::<Result<Vec<_>>>()?;
            flag(&FlagInput::new(xs)?)
        }
        Command::ConeFormula {
            complex,
            dims,
            cone_dim,
        } => match (complex, dims) {
            (Some(path), _) => cone_formula_engine(&read_complex(path)?),
            (None, Some(dims)) => {
                let d =
                    cone_dim.ok_or_else(|| Error::parse("--cone-dim", "required with --dims"))?;
                Ok(cone_formula_only(&GradedDims(dims.clone()), d))
            }
            (None, None) => Err(Error::parse("cone-formula", "give a complex or --dims")),
        },
        Command::Table { pair } => {
            let (n, d) = docs::parse_pair(&read(pair)?)?;
            table(&d, n)
        }
        Command::Gysin { base } => Ok(gysin(&docs::parse_lefschetz(&read(base)?)?)),
        Command::Chase { pair, degree } => {
            let (n, d) = docs::parse_pair(&read(pair)?)?;
            chase(&d, degree.unwrap_or(n))
        }
        Command::Hl { input } => hl(&docs::parse_hl(&read(input)?)?),
        Command::Chern { polar } => chern(&docs::parse_polar(&read(polar)?)?),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

fn read_complex(path: &Path) -> Result<StratifiedComplex> {
    docs::parse_complex(&read(path)?)
}

fn fmt_dims(d: &GradedDims) -> String {
    d.to_string()
}

fn fmt_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn fmt_matrix(m: &RationalMatrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("{}x{} (empty)", m.rows(), m.cols());
    }
    let rows: Vec<String> = m.to_dense().iter().map(|r| fmt_vector(r)).collect();
    format!("{}x{} [{}]", m.rows(), m.cols(), rows.join(" "))
}

fn emit_vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(emit_rational).collect())
}

/// Header lines and data for the perversity actually used.
fn perversity_echo(p: &Perversity, x: &StratifiedComplex, out: &mut String) -> Result<Value> {
    let table = p.table(&x.stratification().codims())?;
    writeln!(out, "perversity {p}").unwrap();
    if table.is_empty() {
        writeln!(out, "  (no singular strata)").unwrap();
    }
    for (c, v) in &table {
        writeln!(out, "  codim {c}: {v}").unwrap();
    }
    Ok(json!({
        "name": p.to_string(),
        "table": table.iter().map(|(c, v)| json!({"codim": c, "value": v})).collect::<Vec<_>>(),
    }))
}

fn validate_verb(x: &StratifiedComplex) -> Result<Report> {
    let r = validate(x);
    let mut human = String::new();
    writeln!(
        human,
        "{}",
        if r.is_clean() {
            "clean"
        } else {
            "faults found"
        }
    )
    .unwrap();
    for v in &r.violations {
        writeln!(human, "  fault: {v}").unwrap();
    }
    if !r.boundary_faces.is_empty() {
        writeln!(human, "  boundary faces: {}", r.boundary_faces.join(" ")).unwrap();
    }
    for h in &r.hints {
        writeln!(human, "  hint: {h}").unwrap();
    }
    let data = json!({
        "clean": r.is_clean(),
        "violations": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "boundary_faces": r.boundary_faces,
        "hints": r.hints,
    });
    Ok(Report { human, data })
}

fn betti(x: &StratifiedComplex, p: &Perversity, rel: Option<&StratifiedComplex>) -> Result<Report> {
    let t = ih_betti(x, p, rel.map(StratifiedComplex::complex))?;
    let mut human = String::new();
    let perversity = perversity_echo(p, x, &mut human)?;
    if rel.is_some() {
        writeln!(human, "relative to the given subcomplex").unwrap();
    }
    writeln!(human, "degree  dim").unwrap();
    for (d, v) in t.dims.as_slice().iter().enumerate() {
        writeln!(human, "{d:>6}  {v:>3}").unwrap();
    }
    writeln!(human, "IH = {}", fmt_dims(&t.dims)).unwrap();
    let data = json!({
        "perversity": perversity,
        "relative": rel.is_some(),
        "dims": emit_dims(&t.dims),
    });
    Ok(Report { human, data })
}

fn complex_report(what: &str, x: &StratifiedComplex) -> Report {
    let k = x.complex();
    let counts: Vec<String> = (0..=k.dim().unwrap_or(0))
        .map(|d| k.count(d).to_string())
        .collect();
    let mut human = String::new();
    writeln!(human, "{what}").unwrap();
    writeln!(human, "  vertices: {}", k.names().join(" ")).unwrap();
    writeln!(human, "  simplices by dimension: ({})", counts.join(",")).unwrap();
    for m in x.members() {
        let gens: Vec<String> = m
            .maximal_simplices()
            .iter()
            .map(|s| k.display_simplex(s))
            .collect();
        writeln!(human, "  codim {}: {}", m.codim(), gens.join(" ")).unwrap();
    }
    Report {
        human,
        data: emit_complex(x),
    }
}

fn linkmap(
    x: &StratifiedComplex,
    y: &StratifiedComplex,
    vertex: &str,
    d: usize,
    p: &Perversity,
) -> Result<Report> {
    let lm = link_map(x, y, vertex, d, p)?;
    let mut human = String::new();
    let perversity = perversity_echo(p, y, &mut human)?;
    let verdict = if lm.is_zero() {
        "zero, extension possible"
    } else {
        "nonzero, extension obstructed"
    };
    writeln!(
        human,
        "link map at '{vertex}' in degree {d}: {}",
        fmt_matrix(&lm.matrix)
    )
    .unwrap();
    writeln!(human, "rank {}", lm.rank).unwrap();
    writeln!(human, "{verdict}").unwrap();
    let data = json!({
        "perversity": perversity,
        "vertex": vertex,
        "degree": d,
        "matrix": emit_matrix(&lm.matrix),
        "rank": lm.rank,
        "verdict": verdict,
    });
    Ok(Report { human, data })
}

fn surgery(p: &SurgeryProblem) -> Result<Report> {
    let ky = p.y().complex();
    let ly = link(p.y(), p.apex())?;
    let eta = extract_link_cycle(p)?;
    let mut human = String::new();
    let perversity = perversity_echo(p.perversity(), p.y(), &mut human)?;
    writeln!(
        human,
        "apex '{}': η = {}",
        p.apex(),
        eta.display(ly.complex())
    )
    .unwrap();
    let data = match repair_cycle(p)? {
        Some(r) => {
            writeln!(human, "repaired: ξ' avoids '{}'", p.apex()).unwrap();
            writeln!(human, "ζ = {}", r.zeta.display(ly.complex())).unwrap();
            writeln!(human, "ξ' = {}", r.cycle.display(ky)).unwrap();
            writeln!(
                human,
                "intersection chain of Y: {}",
                if r.allowable_in_y { "yes" } else { "no" }
            )
            .unwrap();
            json!({
                "perversity": perversity,
                "apex": p.apex(),
                "outcome": "repaired",
                "eta": emit_chain(&r.eta, ly.complex()),
                "zeta": emit_chain(&r.zeta, ly.complex()),
                "cycle": emit_chain(&r.cycle, ky),
                "filler": emit_chain(&r.filler, ky),
                "allowable_in_y": r.allowable_in_y,
            })
        }
        None => {
            writeln!(
                human,
                "obstructed: η does not bound in the link of '{}'",
                p.apex()
            )
            .unwrap();
            json!({
                "perversity": perversity,
                "apex": p.apex(),
                "outcome": "obstructed",
                "eta": emit_chain(&eta, ly.complex()),
            })
        }
    };
    Ok(Report { human, data })
}

fn lift(
    y: &StratifiedComplex,
    z: &crate::complex::Chain,
    from: &Perversity,
    to: &Perversity,
) -> Result<Report> {
    let k = y.complex();
    let mut human = String::new();
    writeln!(human, "from {from} to {to}").unwrap();
    let codims = y.stratification().codims();
    let table = |p: &Perversity| -> Result<Value> {
        Ok(Value::Array(
            p.table(&codims)?
                .iter()
                .map(|(c, v)| json!({"codim": c, "value": v}))
                .collect(),
        ))
    };
    let (from_table, to_table) = (table(from)?, table(to)?);
    for (c, _) in from.table(&codims)? {
        writeln!(human, "  codim {c}: {} -> {}", from.value(c)?, to.value(c)?).unwrap();
    }
    let data = match lift_class_between(y, z, from, to)? {
        Some(l) => {
            writeln!(human, "lifted: {}", l.cycle.display(k)).unwrap();
            writeln!(human, "witness: {}", l.witness.display(k)).unwrap();
            json!({
                "from": {"name": from.to_string(), "table": from_table},
                "to": {"name": to.to_string(), "table": to_table},
                "lifted": true,
                "cycle": emit_chain(&l.cycle, k),
                "witness": emit_chain(&l.witness, k),
            })
        }
        None => {
            writeln!(human, "no lift: the class is not in the image of IH^{to}").unwrap();
            json!({
                "from": {"name": from.to_string(), "table": from_table},
                "to": {"name": to.to_string(), "table": to_table},
                "lifted": false,
            })
        }
    };
    Ok(Report { human, data })
}

fn flag(f: &FlagInput) -> Result<Report> {
    let classes = flag_classes(f)?;
    let mut human = String::new();
    let x0 = &f.complexes()[0];
    let perversity = perversity_echo(&Perversity::Middle, x0, &mut human)?;
    let mut items = Vec::new();
    for c in &classes {
        writeln!(
            human,
            "step {}: degree {}, coordinates {}",
            c.step,
            c.degree,
            fmt_vector(&c.coordinates)
        )
        .unwrap();
        items.push(json!({
            "step": c.step,
            "degree": c.degree,
            "coordinates": emit_vector(&c.coordinates),
            "representative": emit_chain(&c.representative, x0.complex()),
        }));
    }
    Ok(Report {
        human,
        data: json!({ "perversity": perversity, "classes": items }),
    })
}

fn cone_formula_engine(l: &StratifiedComplex) -> Result<Report> {
    let r = verify_cone_formula(l)?;
    let mut human = String::new();
    writeln!(human, "perversity {}", Perversity::UpperMiddle).unwrap();
    writeln!(
        human,
        "  codim {}: {}",
        r.cone_dim,
        Perversity::UpperMiddle.value(r.cone_dim)?
    )
    .unwrap();
    writeln!(human, "IH(L) = {}", fmt_dims(&r.link_dims)).unwrap();
    writeln!(human, "engine  IH(cL, L) = {}", fmt_dims(&r.engine)).unwrap();
    writeln!(human, "formula IH(cL)    = {}", fmt_dims(&r.formula)).unwrap();
    writeln!(human, "{}", if r.holds() { "agree" } else { "DIFFER" }).unwrap();
    let data = json!({
        "perversity": Perversity::UpperMiddle.to_string(),
        "link_dims": emit_dims(&r.link_dims),
        "cone_dim": r.cone_dim,
        "engine": emit_dims(&r.engine),
        "formula": emit_dims(&r.formula),
        "holds": r.holds(),
        "diff": r.diff.iter().map(|(d, e, f)| json!({"degree": d, "engine": e, "formula": f})).collect::<Vec<_>>(),
    });
    Ok(Report { human, data })
}

fn cone_formula_only(dims: &GradedDims, cone_dim: usize) -> Report {
    let out = cone_formula(dims, cone_dim);
    Report {
        human: format!("IH(L) = {}\nIH(cL) = {}\n", fmt_dims(dims), fmt_dims(&out)),
        data: json!({ "link_dims": emit_dims(dims), "cone_dim": cone_dim, "formula": emit_dims(&out) }),
    }
}

fn table(d: &crate::conecalc::PairMorphismData, n: usize) -> Result<Report> {
    let t = projective_cone_table(d, n)?;
    let ranks = t.ranks();
    let mut human = String::new();
    writeln!(human, "degree  IH(KX)  IH(KY)  rank").unwrap();
    for (i, r) in ranks.iter().enumerate() {
        let ii = i as isize;
        writeln!(
            human,
            "{i:>6}  {:>6}  {:>6}  {r:>4}",
            t.kx.get(ii),
            t.ky.get(ii)
        )
        .unwrap();
    }
    writeln!(human, "IH(KX) = {}", fmt_dims(&t.kx)).unwrap();
    writeln!(human, "IH(KY) = {}", fmt_dims(&t.ky)).unwrap();
    let data = json!({
        "n": n,
        "kx": emit_dims(&t.kx),
        "ky": emit_dims(&t.ky),
        "maps": t.maps.iter().map(emit_matrix).collect::<Vec<_>>(),
        "ranks": ranks,
    });
    Ok(Report { human, data })
}

fn gysin(base: &crate::conecalc::LefschetzData) -> Report {
    let g = gysin_link(base);
    let mut human = String::new();
    writeln!(human, "base  = {}", fmt_dims(base.dims())).unwrap();
    writeln!(human, "link  = {}", fmt_dims(&g.dims)).unwrap();
    writeln!(human, "χ(link) = {}", g.dims.euler_characteristic()).unwrap();
    for k in 0..g.dims.len() {
        writeln!(human, "  p* into degree {k}: {}", fmt_matrix(&g.p_star[k])).unwrap();
        writeln!(
            human,
            "  p_* out of degree {k}: {}",
            fmt_matrix(&g.p_lower[k])
        )
        .unwrap();
    }
    Report {
        human,
        data: json!({
            "base": docs::emit_lefschetz(base),
            "dims": emit_dims(&g.dims),
            "euler_characteristic": g.dims.euler_characteristic(),
            "p_star": g.p_star.iter().map(emit_matrix).collect::<Vec<_>>(),
            "p_lower": g.p_lower.iter().map(emit_matrix).collect::<Vec<_>>(),
        }),
    }
}

fn steps_human(steps: &[ChaseStep], out: &mut String) {
    for (i, s) in steps.iter().enumerate() {
        let mark = if s.holds { "ok" } else { "FAILS" };
        writeln!(out, "  {}. [{mark}] {} ({})", i + 1, s.claim, s.evidence).unwrap();
    }
}

fn steps_data(steps: &[ChaseStep]) -> Value {
    Value::Array(
        steps
            .iter()
            .map(|s| json!({"claim": s.claim, "holds": s.holds, "evidence": s.evidence}))
            .collect(),
    )
}

fn chase(d: &crate::conecalc::PairMorphismData, k: usize) -> Result<Report> {
    let r = link_map_chase(d, k)?;
    let mut human = String::new();
    writeln!(human, "link map in degree {k}").unwrap();
    steps_human(&r.steps, &mut human);
    writeln!(human, "λ = {}", fmt_matrix(&r.matrix)).unwrap();
    writeln!(
        human,
        "{}",
        if r.certified() {
            "zero, certified"
        } else {
            "not certified"
        }
    )
    .unwrap();
    let data = json!({
        "degree": k,
        "matrix": emit_matrix(&r.matrix),
        "zero": r.is_zero(),
        "certified": r.certified(),
        "steps": steps_data(&r.steps),
    });
    Ok(Report { human, data })
}

fn hl(input: &docs::HlInput) -> Result<Report> {
    let r = hard_lefschetz_from_links(
        &input.x,
        &input.y,
        &input.i_star,
        input.link_middle_map_is_zero,
        input.n,
    )?;
    let (verdict, reason) = match &r.verdict {
        HlVerdict::Certified => ("certified", String::new()),
        HlVerdict::Inconsistent(m) => ("inconsistent", m.clone()),
        HlVerdict::NoConclusion(m) => ("no conclusion", m.clone()),
    };
    let mut human = String::new();
    writeln!(human, "Λ: y_{} → y_{}", input.n + 1, input.n as isize - 1).unwrap();
    steps_human(&r.steps, &mut human);
    for s in &r.standard_steps {
        writeln!(human, "  standard: {s}").unwrap();
    }
    if reason.is_empty() {
        writeln!(human, "{verdict}").unwrap();
    } else {
        writeln!(human, "{verdict}: {reason}").unwrap();
    }
    let data = json!({
        "n": input.n,
        "verdict": verdict,
        "reason": reason,
        "steps": steps_data(&r.steps),
        "standard_steps": r.standard_steps,
    });
    Ok(Report { human, data })
}

fn chern(p: &crate::conecalc::PolarData) -> Result<Report> {
    let classes = chern_mather_lift(p)?;
    let mut human = String::new();
    let mut items = Vec::new();
    for c in &classes {
        writeln!(
            human,
            "c_{} in degree {}: {}",
            c.index,
            c.degree,
            fmt_vector(&c.coordinates)
        )
        .unwrap();
        items.push(json!({"index": c.index, "degree": c.degree, "coordinates": emit_vector(&c.coordinates)}));
    }
    Ok(Report {
        human,
        data: json!({ "n": p.n(), "classes": items }),
    })
}
