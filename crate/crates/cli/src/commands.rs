use anyhow::{bail, Context};
use serde_json::{json, Value};

use toupie::ainf::{check_algebra, check_coalgebra, ext_table, tor_table, tor_table_transfer, TableJson};
use toupie::duality::{
    double_dual, gr_algebra, hypotheses_check, ideal_equal, quotient_dimension, yoneda_presentation,
    AlgebraPresentation, Hypotheses,
};
use toupie::morse::{compare_sdr, verify_sdr, ClosedSdr, OracleSdr, Resolution, HOMOTOPY};
use toupie::random::{random_presentation, RandomConfig};
use toupie::schema::{parse_presentation, presentation_to_json, PresentationJson};
use toupie::{Error, ToupieAlgebra};

use crate::report::{digest, Report, Status};
use crate::{Cli, Command, MAX_ARITY, MAX_DEGREE};

fn name(c: Command) -> String {
    use clap::ValueEnum;
    c.to_possible_value().expect("named").get_name().to_string()
}

/// Input text and its digest.
fn load(cli: &Cli) -> anyhow::Result<(String, String)> {
    match (&cli.input, cli.seed) {
        (Some(path), _) => {
            let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let text = String::from_utf8(bytes.clone()).context("input is not UTF-8")?;
            Ok((text, digest(&bytes)))
        }
        (None, Some(seed)) => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = random_presentation(&mut rng, RandomConfig::default());
            Ok((presentation_to_json(&p), format!("seed:{seed}")))
        }
        (None, None) => bail!("no input file and no --seed"),
    }
}

fn check_bounds(cli: &Cli) -> anyhow::Result<()> {
    if !(1..=MAX_DEGREE).contains(&cli.degree) {
        bail!("bound exceeded: --degree must lie in 1..={MAX_DEGREE}, got {}", cli.degree);
    }
    if !(2..=MAX_ARITY).contains(&cli.arity) {
        bail!("bound exceeded: --arity must lie in 2..={MAX_ARITY}, got {}", cli.arity);
    }
    Ok(())
}

pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    check_bounds(cli)?;
    let (text, input_digest) = load(cli)?;
    let mut r = Report::new(&name(cli.command), input_digest);
    let alg = match parse_presentation(&text).and_then(ToupieAlgebra::new) {
        Ok(a) => a,
        Err(e) if cli.command == Command::Validate => {
            r.status = Status::Failed;
            r.result = json!({"valid": false, "reason": e.to_string()});
            r.lines.push(format!("invalid: {e}"));
            return Ok(r);
        }
        Err(e) => bail!("invalid input: {e}"),
    };
    match cli.command {
        Command::Validate => validate(&alg, &mut r),
        Command::Branches => branches(&alg, &mut r),
        Command::Tips => tips(&alg, &mut r),
        Command::Chains => chains(&alg, cli.degree, &mut r),
        Command::Betti => betti(&alg, cli.degree, &mut r),
        Command::ResolutionCheck => resolution(&alg, cli.degree, &mut r)?,
        Command::SdrCheck => sdr(&alg, cli.degree, &mut r)?,
        Command::TorCoalgebra => table(&alg, tor_table(&alg, cli.arity).to_json(&alg), "Delta", &mut r),
        Command::ExtProducts => table(&alg, ext_table(&alg, cli.arity).to_json(&alg), "m", &mut r),
        Command::Stasheff => stasheff(&alg, cli.arity, &mut r),
        Command::Yoneda => dual(&alg, yoneda_presentation(&alg), cli, &mut r)?,
        Command::Gr => gr(&alg, cli, &mut r)?,
        Command::DoubleDual => {
            let dd = double_dual(&alg);
            dual(&alg, dd.clone(), cli, &mut r)?;
            if let Ok(dd) = dd {
                let equal = ideal_equal(&dd.presentation, &gr_algebra(&alg).presentation)?;
                r.result["equals_gr"] = Value::from(equal);
                r.lines.push(format!("ideal equal to gr: {equal}"));
                if !equal {
                    r.status = Status::Failed;
                }
            }
        }
        Command::OracleDiff => oracle_diff(&alg, cli.degree, cli.arity, &mut r)?,
    }
    Ok(r)
}

fn validate(alg: &ToupieAlgebra, r: &mut Report) {
    let q = alg.quiver();
    r.result = json!({
        "valid": true,
        "vertices": q.vertex_count(),
        "arrows": q.arrow_count(),
        "branches": alg.shape().branches.len(),
        "relations": alg.presentation().relations().len(),
        "dimension": alg.dimension(),
    });
    r.lines.push(format!(
        "valid toupie presentation: {} vertices, {} arrows, {} branches, dim {}",
        q.vertex_count(),
        q.arrow_count(),
        alg.shape().branches.len(),
        alg.dimension()
    ));
}

fn branches(alg: &ToupieAlgebra, r: &mut Report) {
    let classes = alg.classes();
    let rows: Vec<Value> = alg
        .shape()
        .branches
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let class = format!("{:?}", classes.class_of(i));
            r.lines.push(format!("{class} {}", alg.fmt_path(b)));
            json!({"branch": alg.fmt_path(b), "length": b.len(), "class": class})
        })
        .collect();
    let b4: Vec<String> = classes.b4.iter().map(|&i| alg.fmt_path(&alg.shape().branches[i])).collect();
    r.lines.push(format!("order: {}", b4.join(" > ")));
    r.result = json!({"branches": rows, "b4_order": b4});
}

fn tips(alg: &ToupieAlgebra, r: &mut Report) {
    let g = alg.groebner();
    let tips: Vec<String> = g.tips().iter().map(|t| alg.fmt_path(t)).collect();
    let rewrites: Vec<Value> = g
        .nonmonomials()
        .iter()
        .map(|nm| {
            let rel = alg.presentation().fmt_relation(&nm.relation);
            r.lines.push(format!("tip {} of {rel}", alg.fmt_path(&nm.tip)));
            json!({"tip": alg.fmt_path(&nm.tip), "relation": rel})
        })
        .collect();
    for m in g.monomials() {
        r.lines.push(format!("tip {} (monomial)", alg.fmt_path(m)));
    }
    let counts = g.nontip_counts();
    r.lines.push(format!("nontips by length: {counts:?}, dimension {}", alg.dimension()));
    r.result = json!({"tips": tips, "nonmonomial": rewrites, "nontips_by_length": counts, "dimension": alg.dimension()});
}

fn chains(alg: &ToupieAlgebra, degree: usize, r: &mut Report) {
    let mut by_index = serde_json::Map::new();
    for n in -1..degree as isize {
        let cs: Vec<String> = alg.chains().of_index(n).iter().map(|c| alg.fmt_word(c)).collect();
        r.lines.push(format!("W({n}): {}", cs.join(" ")));
        by_index.insert(n.to_string(), Value::from(cs));
    }
    r.result = json!({"chains": by_index});
}

fn betti(alg: &ToupieAlgebra, degree: usize, r: &mut Report) {
    let b = alg.betti(degree);
    r.lines.push(format!("{b:?}"));
    r.result = json!({"betti": b});
}

fn resolution(alg: &ToupieAlgebra, degree: usize, r: &mut Report) -> anyhow::Result<()> {
    let rep = Resolution::new(alg).verify(degree)?;
    if !rep.passed() {
        r.status = Status::Failed;
    }
    r.lines.push(format!(
        "betti {:?}; d^2 = 0: {}; minimal: {}; d1 formula: {}; d2 formula: {}",
        rep.betti, rep.d_squared_zero, rep.minimal, rep.d1_formula, rep.d2_formula
    ));
    r.lines.extend(rep.failures.iter().map(|f| format!("  {f}")));
    r.result = serde_json::to_value(&rep)?;
    Ok(())
}

fn sdr(alg: &ToupieAlgebra, degree: usize, r: &mut Report) -> anyhow::Result<()> {
    let closed = ClosedSdr::new(alg);
    let oracle = OracleSdr::build(alg)?;
    let rep = verify_sdr(alg, &closed, degree);
    let mismatches = compare_sdr(alg, &closed, &oracle, degree);
    if !rep.passed() || !mismatches.is_empty() {
        r.status = Status::Failed;
    }
    r.lines.push(format!(
        "{} cells, {} chains checked; homotopy form {HOMOTOPY}; {} identity failures; {} mismatches against zigzag sums",
        rep.cells_checked,
        rep.chains_checked,
        rep.failures.len(),
        mismatches.len()
    ));
    r.lines.extend(rep.failures.iter().map(|(what, cell)| format!("  {what} fails at {cell}")));
    r.lines.extend(mismatches.iter().map(|(map, cell)| format!("  {map} differs at {cell}")));
    r.result = json!({"homotopy": HOMOTOPY, "report": rep, "mismatches": mismatches});
    Ok(())
}

fn table(_alg: &ToupieAlgebra, t: TableJson, op: &str, r: &mut Report) {
    for (n, rows) in &t.arities {
        for e in rows {
            let terms: Vec<String> = e.output.iter().map(|t| format!("{} {}", t.coeff, t.value.join(" ⊗ "))).collect();
            r.lines.push(format!("{op}{n}({}) = {}", e.input.join(", "), terms.join(" + ")));
        }
    }
    r.result = serde_json::to_value(&t).expect("serializable");
}

fn stasheff(alg: &ToupieAlgebra, arity: usize, r: &mut Report) {
    let ext = check_algebra(alg, &ext_table(alg, arity), arity);
    let tor = check_coalgebra(alg, &tor_table(alg, arity), arity);
    if !ext.passed() || !tor.passed() {
        r.status = Status::Failed;
    }
    r.lines.push(format!("SI(n) on Ext, n <= {arity}: {} checked, {} failures", ext.checked, ext.failures.len()));
    r.lines.push(format!("SI(n)' on Tor, n <= {arity}: {} checked, {} failures", tor.checked, tor.failures.len()));
    for (n, x) in ext.failures.iter().chain(&tor.failures) {
        r.lines.push(format!("  SI({n}) fails at {x}"));
    }
    r.result = json!({"ext": ext, "tor": tor});
}

fn hypotheses_json(h: &Hypotheses) -> Value {
    json!({
        "holds": h.holds(),
        "monomials_quadratic": h.monomials_quadratic,
        "one_long_tip_per_component": h.one_long_tip_per_component,
        "gr_quadratic": h.gr_quadratic,
        "reasons": h.reasons,
    })
}

fn emit(p: &AlgebraPresentation, cli: &Cli, r: &mut Report) -> anyhow::Result<()> {
    let q = &p.presentation;
    r.lines.push(format!("provenance: {}", p.provenance));
    for rel in q.relations() {
        r.lines.push(format!("  {}", q.fmt_relation(rel)));
    }
    r.result = json!({
        "provenance": p.provenance.to_string(),
        "presentation": PresentationJson::from_presentation(q),
        "dimension": quotient_dimension(q)?,
    });
    if let Some(path) = &cli.emit {
        std::fs::write(path, presentation_to_json(q) + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn dual(
    alg: &ToupieAlgebra,
    out: toupie::Result<AlgebraPresentation>,
    cli: &Cli,
    r: &mut Report,
) -> anyhow::Result<()> {
    match out {
        Ok(p) => emit(&p, cli, r),
        Err(e @ (Error::Hypotheses(_) | Error::NotQuadratic(_))) => {
            r.status = Status::Refused;
            r.lines.push(format!("refused: {e}"));
            r.result = json!({"refused": e.to_string(), "hypotheses": hypotheses_json(&hypotheses_check(alg))});
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn gr(alg: &ToupieAlgebra, cli: &Cli, r: &mut Report) -> anyhow::Result<()> {
    let g = gr_algebra(alg);
    emit(&g, cli, r)?;
    let dim = quotient_dimension(&g.presentation)?;
    if dim != alg.dimension() {
        r.status = Status::Failed;
    }
    r.lines.push(format!("dim A = {}, dim gr A = {dim}", alg.dimension()));
    r.result["input_dimension"] = Value::from(alg.dimension());
    r.result["hypotheses"] = hypotheses_json(&hypotheses_check(alg));
    Ok(())
}

fn oracle_diff(alg: &ToupieAlgebra, degree: usize, arity: usize, r: &mut Report) -> anyhow::Result<()> {
    let closed = tor_table(alg, arity);
    let transfer = tor_table_transfer(alg, arity)?;
    let mut delta = Vec::new();
    for n in 2..=arity {
        for c in alg.chains().all() {
            let (a, b) = (closed.get(n, c), transfer.get(n, c));
            if a != b {
                delta.push(json!({"n": n, "chain": alg.fmt_word(c)}));
                r.lines.push(format!("  Delta{n}({}) differs", alg.fmt_word(c)));
            }
        }
    }
    let sdr = compare_sdr(alg, &ClosedSdr::new(alg), &OracleSdr::build(alg)?, degree);
    for (map, cell) in &sdr {
        r.lines.push(format!("  {map}({cell}) differs"));
    }
    if !delta.is_empty() || !sdr.is_empty() {
        r.status = Status::Failed;
    }
    r.lines.insert(0, format!("closed form vs transfer: {} differences; closed SDR vs zigzag: {}", delta.len(), sdr.len()));
    r.result = json!({"coalgebra": delta, "sdr": sdr});
    Ok(())
}
