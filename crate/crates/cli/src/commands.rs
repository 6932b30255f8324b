//! One function per subcommand. Each returns JSON or text according to
//! `--json`.

use serde_json::{json, Value};
use tightmaps_core::algebra::Family;
use tightmaps_core::catalog::{
    admissible_params, find_entry, instantiate, maximal_entries, parse_address, verify_families,
    CatalogEntry, CatalogReport, SweepBounds, FAMILIES,
};
use tightmaps_core::classify::{classify, MapDescriptor, TargetTag, Verdict};
use tightmaps_core::expr::Params;
use tightmaps_core::extrep::{
    brute_force_pairing, brute_force_sostar, disc_image_eigenvalues, sostar_target_pairing,
    su_target_pairing, TensorRepDescriptor, ORACLE_MAX_P,
};
use tightmaps_core::pisystem::{identify, validate, FactorDescriptor, PiSystem};
use tightmaps_core::rootsys::parse_root_list;
use tightmaps_core::survey::{catalog_rows, describe_certificate, representation_rows, SurveyRow};
use tightmaps_core::tightness::{regular_verdict, TightnessCertificate};
use tightmaps_core::{AlgebraId, Error, Rational, Result, Root, RootSystem};

use crate::{json, text, Cli, Command, Outcome, EXIT_MISMATCH};

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let j = cli.json;
    match &cli.command {
        Command::Rootsys { algebra } => rootsys(algebra, j),
        Command::Validate { algebra, roots } => validate_roots(algebra, roots, j),
        Command::Maximal { algebra } => maximal(algebra, j),
        Command::Check { algebra, target } => check(algebra, target, j),
        Command::Tensor { p, m, oracle } => tensor(*p, *m, *oracle, j),
        Command::VerifyPaper { sweep, parallel } => verify(sweep.as_deref(), *parallel, j),
    }
}

fn emit(j: bool, value: Value, text: String) -> Outcome {
    Outcome::ok(if j { json::render(&value) } else { text })
}

fn factor_names(factors: &[FactorDescriptor]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    factors
        .iter()
        .map(FactorDescriptor::name)
        .collect::<Vec<_>>()
        .join(" + ")
}

fn rootsys(name: &str, j: bool) -> Result<Outcome> {
    let a: AlgebraId = name.parse()?;
    let rs = RootSystem::build(a)?;
    let value = json!({
        "algebra": a.to_string(),
        "simple_roots": rs.rank(),
        "real_rank": a.rank(),
        "tube_type": a.is_tube_type(),
        "gram": rs.gram().iter().map(|row| row.iter().map(json::rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "root_count": rs.all_roots().len(),
        "highest_root": json::root(rs.highest_root()),
        "noncompact_node": rs.noncompact_index() + 1,
    });
    let mut out = text::pairs(&[
        ("algebra", a.to_string()),
        ("simple roots", rs.rank().to_string()),
        ("real rank", a.rank().to_string()),
        (
            "tube type",
            if a.is_tube_type() { "yes" } else { "no" }.to_string(),
        ),
        ("roots", rs.all_roots().len().to_string()),
        ("highest root", rs.highest_root().to_string()),
        (
            "noncompact node",
            format!("alpha_{}", rs.noncompact_index() + 1),
        ),
    ]);
    out.push_str("gram\n");
    let rows: Vec<Vec<String>> = rs
        .gram()
        .iter()
        .map(|row| {
            std::iter::once(String::new())
                .chain(row.iter().map(text::rational))
                .collect()
        })
        .collect();
    out.push_str(&text::table(&[], &rows));
    Ok(emit(j, value, out))
}

fn factors_table(factors: &[FactorDescriptor]) -> String {
    let rows: Vec<Vec<String>> = factors
        .iter()
        .map(|f| {
            vec![
                f.name(),
                f.cartan_type.to_string(),
                f.gamma.to_string(),
                f.noncompact_root
                    .as_ref()
                    .map_or("-".into(), Root::to_string),
            ]
        })
        .collect();
    text::table(&["factor", "type", "gamma_i", "noncompact"], &rows)
}

fn validate_roots(name: &str, roots: &str, j: bool) -> Result<Outcome> {
    let a: AlgebraId = name.parse()?;
    let rs = RootSystem::build(a)?;
    let roots = parse_root_list(roots)?;
    if let Some(v) = validate(&rs, &roots)? {
        let value = json!({
            "algebra": a.to_string(),
            "roots": json::roots(&roots),
            "valid": false,
            "violation": json::violation(&v),
            "factors": [],
        });
        let out = format!("not a Π-system: condition ({}) fails: {v}\n", v.condition());
        return Ok(emit(j, value, out));
    }
    let ps = PiSystem::new(&rs, roots.clone())?;
    let factors = identify(&rs, &ps)?;
    let value = json!({
        "algebra": a.to_string(),
        "roots": json::roots(&roots),
        "valid": true,
        "violation": null,
        "factors": factors.iter().map(json::factor).collect::<Vec<_>>(),
    });
    let mut out = format!("Π-system in {a}: {}\n", factor_names(&factors));
    out.push_str(&factors_table(&factors));
    Ok(emit(j, value, out))
}

struct Checked {
    roots: Vec<Root>,
    factors: Vec<FactorDescriptor>,
    cert: TightnessCertificate,
}

fn certify(rs: &RootSystem, ps: &PiSystem) -> Result<Checked> {
    let factors = identify(rs, ps)?;
    let cert = regular_verdict(rs, &factors)?;
    Ok(Checked {
        roots: ps.roots().to_vec(),
        factors,
        cert,
    })
}

fn entry_instance(
    entry: &CatalogEntry,
    rs: &RootSystem,
    params: &Params,
) -> Result<(Params, Checked)> {
    let bound = entry.bind(rs.algebra(), params)?;
    let ps = instantiate(entry, rs, params)?;
    Ok((bound, certify(rs, &ps)?))
}

fn claimed_names(entry: &CatalogEntry, params: &Params) -> Result<String> {
    Ok(entry
        .claimed_factors(params)?
        .iter()
        .map(AlgebraId::to_string)
        .collect::<Vec<_>>()
        .join(" + "))
}

fn maximal(name: &str, j: bool) -> Result<Outcome> {
    let a: AlgebraId = name.parse()?;
    a.check_ambient()?;
    let rs = RootSystem::build(a)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for entry in maximal_entries(a) {
        let all = admissible_params(&entry, a);
        if all.is_empty() {
            rows.push(vec![
                entry.id.to_string(),
                "-".into(),
                "no admissible parameters".into(),
                String::new(),
                String::new(),
                String::new(),
            ]);
            continue;
        }
        for params in all {
            let (bound, c) = entry_instance(&entry, &rs, &params)?;
            let expected = entry.verdict.expected(&bound);
            let own = bound.restrict(entry.entry_params);
            items.push(json!({
                "entry": entry.id,
                "params": own.to_string(),
                "roots": json::roots(&c.roots),
                "claimed": claimed_names(&entry, &bound)?,
                "factors": c.factors.iter().map(json::factor).collect::<Vec<_>>(),
                "corrected": entry.correction.is_some(),
                "certificate": json::certificate(&c.cert),
                "expected": json::status(expected),
            }));
            rows.push(vec![
                entry.id.to_string(),
                own.to_string(),
                factor_names(&c.factors),
                describe_certificate(&c.cert),
                c.cert.verdict.to_string(),
                expected.to_string(),
            ]);
        }
    }
    let value = json!({ "algebra": a.to_string(), "entries": items });
    let out = text::table(
        &[
            "entry",
            "params",
            "factors",
            "certificate",
            "verdict",
            "expected",
        ],
        &rows,
    );
    Ok(emit(j, value, out))
}

fn check(name: &str, target: &str, j: bool) -> Result<Outcome> {
    let trimmed = target.trim();
    let (a, checked, entry_info) = if trimmed.starts_with('[') {
        let a: AlgebraId = name.parse()?;
        let rs = RootSystem::build(a)?;
        let ps = PiSystem::new(&rs, parse_root_list(trimmed)?)?;
        (a, certify(&rs, &ps)?, None)
    } else {
        let (id, params) = parse_address(trimmed)?;
        let a = AlgebraId::parse_with(name, &params)?;
        let rs = RootSystem::build(a)?;
        let entry = find_entry(a, &id)?;
        let (bound, c) = entry_instance(&entry, &rs, &params)?;
        let info = (
            entry.id,
            bound.restrict(entry.entry_params),
            claimed_names(&entry, &bound)?,
            entry.verdict.expected(&bound),
        );
        (a, c, Some(info))
    };
    let mut value = json!({
        "algebra": a.to_string(),
        "roots": json::roots(&checked.roots),
        "factors": checked.factors.iter().map(json::factor).collect::<Vec<_>>(),
        "certificate": json::certificate(&checked.cert),
    });
    let mut lines = vec![
        ("algebra", a.to_string()),
        ("roots", text::list(&checked.roots)),
        ("factors", factor_names(&checked.factors)),
        ("ratios c_i", text::list(&checked.cert.ratios)),
        ("ranks r_i", text::list(&checked.cert.ranks)),
        (
            "sum c_i r_i",
            format!(
                "{} (rank {})",
                checked.cert.weighted_sum, checked.cert.ambient_rank
            ),
        ),
        ("verdict", checked.cert.verdict.to_string()),
    ];
    if let Some((id, params, claimed, expected)) = entry_info {
        value["entry"] = json!(id);
        value["params"] = json!(params.to_string());
        value["claimed"] = json!(claimed);
        value["expected"] = json::status(expected);
        lines.insert(1, ("entry", format!("{id} {params}")));
        lines.insert(3, ("claimed", claimed));
        lines.push(("expected", expected.to_string()));
    }
    Ok(emit(j, value, text::pairs(&lines)))
}

fn verdict_line(v: &Verdict) -> String {
    let rules: Vec<&str> = v.trace.iter().map(|s| s.rule.name()).collect();
    format!("{} ({})", v.status, rules.join(", "))
}

fn tensor(p: usize, m: usize, oracle: bool, j: bool) -> Result<Outcome> {
    let rep = TensorRepDescriptor::new(p, m)?;
    let eig = disc_image_eigenvalues(p, m)?;
    let balanced_middle = 2 * m == p + 1;
    let mut targets = Vec::new();
    let mut lines = vec![
        (
            "representation",
            format!("rho_{m}: su({p},1) -> dimension {}", rep.dimension()),
        ),
        ("signature", format!("({}, {})", rep.p_prime, rep.q_prime)),
        (
            "eigenvalues",
            format!(
                "+i/2 x{}, -i/2 x{}, 0 x{}",
                eig.plus_half_i, eig.minus_half_i, eig.zero
            ),
        ),
    ];
    let mut push_target = |tag: TargetTag, pairing: Option<i64>| -> Result<()> {
        let v = classify(&MapDescriptor::TensorRep { p, m, target: tag })?;
        let cod = MapDescriptor::TensorRep { p, m, target: tag }
            .endpoints()?
            .1[0];
        targets.push(json!({
            "target": cod.to_string(),
            "pairing": pairing,
            "verdict": json::verdict(&v),
        }));
        let shown = pairing.map_or(String::new(), |x| format!("pairing {x}, "));
        lines.push(("target", format!("{cod}: {shown}{}", verdict_line(&v))));
        Ok(())
    };
    let su = su_target_pairing(p, m)?;
    push_target(TargetTag::Su, Some(su))?;
    let sostar = if p % 4 == 3 && balanced_middle {
        Some(sostar_target_pairing(p)?)
    } else {
        None
    };
    if let Some(v) = sostar {
        push_target(TargetTag::SoStar, Some(v))?;
    }
    if p % 4 == 1 && p >= 5 && balanced_middle {
        push_target(TargetTag::Sp, None)?;
    }
    let mut oracle_value = Value::Null;
    if oracle {
        if p > ORACLE_MAX_P {
            return Err(Error::SizeGuard(format!(
                "--oracle is limited to p <= {ORACLE_MAX_P}"
            )));
        }
        let o = brute_force_pairing(p, m)?;
        if o.value != Rational::from_integer(su) {
            return Err(Error::Internal(format!(
                "brute force gives {} but the closed form gives {su}",
                o.value
            )));
        }
        let mut ov = json!({
            "trace": json::rational(&o.trace),
            "killing": json::rational(&o.killing),
            "value": json::rational(&o.value),
            "agrees": true,
        });
        lines.push((
            "oracle",
            format!("su pairing {} (trace {}) agrees", o.value, o.trace),
        ));
        if let Some(closed) = sostar {
            let s = brute_force_sostar(p)?;
            if (closed == 0) != (s.trace == Rational::from_integer(0)) {
                return Err(Error::Internal(format!(
                    "so* oracle trace {} disagrees with the closed form {closed}",
                    s.trace
                )));
            }
            ov["sostar_trace"] = json::rational(&s.trace);
            lines.push((
                "oracle so*",
                format!("trace {} agrees on zero test", s.trace),
            ));
        }
        oracle_value = ov;
    }
    let value = json!({
        "p": p,
        "m": m,
        "p_prime": rep.p_prime,
        "q_prime": rep.q_prime,
        "eigenvalues": {
            "plus_half_i": eig.plus_half_i,
            "minus_half_i": eig.minus_half_i,
            "zero": eig.zero,
        },
        "targets": targets,
        "oracle": oracle_value,
    });
    Ok(emit(j, value, text::pairs(&lines)))
}

type FamilyWork = (Vec<SurveyRow>, CatalogReport);

fn family_work(family: Family, bounds: &SweepBounds) -> Result<FamilyWork> {
    Ok((
        catalog_rows(family, bounds)?,
        verify_families(bounds, &[family])?,
    ))
}

/// Catalog rows, representation rows and the catalog report. With
/// `parallel` each family runs on its own thread; results are reduced in
/// family order either way.
fn run_sweep(bounds: &SweepBounds, parallel: bool) -> Result<(Vec<SurveyRow>, CatalogReport)> {
    let per_family: Vec<Result<FamilyWork>> = if parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = FAMILIES
                .iter()
                .map(|&f| s.spawn(move || family_work(f, bounds)))
                .collect();
            handles
                .into_iter()
                .map(|h| {
                    h.join()
                        .unwrap_or_else(|_| Err(Error::Internal("sweep worker panicked".into())))
                })
                .collect()
        })
    } else {
        FAMILIES.iter().map(|&f| family_work(f, bounds)).collect()
    };
    let mut rows = Vec::new();
    let mut report = CatalogReport::default();
    for r in per_family {
        let (r, c) = r?;
        rows.extend(r);
        report.merge(c);
    }
    rows.extend(representation_rows()?);
    Ok((rows, report))
}

fn describe_bounds(b: &SweepBounds) -> String {
    format!(
        "su={},sp={},sostar={},so2={}",
        b.su_max_sum, b.sp_max, b.sostar_max, b.so2_max
    )
}

fn verify(sweep: Option<&str>, parallel: bool, j: bool) -> Result<Outcome> {
    let bounds = sweep
        .map(SweepBounds::parse)
        .transpose()?
        .unwrap_or_default();
    let (rows, catalog) = run_sweep(&bounds, parallel)?;
    let mismatches: Vec<&SurveyRow> = rows.iter().filter(|r| !r.matches()).collect();
    let unresolved = catalog.unresolved();
    let ok = mismatches.is_empty() && unresolved == 0;
    let value = json!({
        "bounds": describe_bounds(&bounds),
        "verdicts": rows.len(),
        "mismatches": mismatches.iter().map(|r| json::survey_row(r)).collect::<Vec<_>>(),
        "catalog": {
            "instances": catalog.instances,
            "discrepancies": catalog.discrepancies.iter().map(json::discrepancy).collect::<Vec<_>>(),
            "unresolved": unresolved,
            "superfluous": catalog.superfluous,
        },
        "ok": ok,
    });
    let mut out = text::pairs(&[
        ("bounds", describe_bounds(&bounds)),
        ("verdicts checked", rows.len().to_string()),
        ("mismatches", mismatches.len().to_string()),
        ("catalog instances", catalog.instances.to_string()),
        ("discrepancies", catalog.discrepancies.len().to_string()),
        ("unresolved", unresolved.to_string()),
    ]);
    if !mismatches.is_empty() {
        out.push_str("\nverdict mismatches\n");
        let t: Vec<Vec<String>> = mismatches
            .iter()
            .map(|r| {
                vec![
                    r.label.clone(),
                    r.expected.to_string(),
                    r.actual.to_string(),
                    r.detail.clone(),
                ]
            })
            .collect();
        out.push_str(&text::table(&["map", "expected", "computed", "detail"], &t));
    }
    if !catalog.discrepancies.is_empty() {
        out.push_str("\ncatalog discrepancies\n");
        let t: Vec<Vec<String>> = catalog
            .discrepancies
            .iter()
            .map(|d| {
                let status = match (d.resolved, d.minimal) {
                    (true, true) => "resolved",
                    (true, false) => "resolved, not minimal",
                    _ => "UNRESOLVED",
                };
                vec![
                    d.entry.to_string(),
                    format!("{} {}", d.ambient, d.params),
                    d.printed.clone(),
                    d.corrected.clone(),
                    status.to_string(),
                ]
            })
            .collect();
        out.push_str(&text::table(
            &["entry", "first failure", "printed", "corrected", "status"],
            &t,
        ));
    }
    let mut outcome = emit(j, value, out);
    if !ok {
        outcome.code = EXIT_MISMATCH;
    }
    Ok(outcome)
}
