//! The subcommands. Each returns a report, a plain-table view and an exit status.

use std::fmt::Write as _;

use serde_json::{json, Value};
use triclique_core::closure::global_closure_obstructions;
use triclique_core::mrd::ClosedNonMaximal;
use triclique_core::setsys::{EmptySetPolicy, Verdicts};
use triclique_core::switching::{closed_form, intersection_generators, triple_sum};
use triclique_core::*;
use std::result::Result;

use crate::formats::{Input, MrdDoc};
use crate::report::{self, Report};
use crate::{CliError, Generator, Loaded};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Brute,
    Fixpoint,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Convention {
    Product,
    Componentwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Arity {
    Pairwise,
    Multiway,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub table: String,
    /// 0, or 4 when two oracles disagree.
    pub status: i32,
}

fn context(loaded: &Loaded, command: &str) -> Result<TriContext, CliError> {
    match &loaded.input {
        Input::Context(c) => Ok(c.clone()),
        Input::Mrd(_) => Err(CliError::Parse(format!(
            "`{command}` expects a triadic context, not a database"
        ))),
    }
}

fn concepts_json(ctx: &TriContext, cs: &[Triconcept]) -> Value {
    json!(cs.iter().map(|c| report::triconcept(ctx, c)).collect::<Vec<_>>())
}

pub fn triconcepts(loaded: &Loaded, echo: String, method: Method, cap: SizeCap) -> Result<Outcome, CliError> {
    let ctx = context(loaded, "triconcepts")?;
    let brute = matches!(method, Method::Brute | Method::Both)
        .then(|| brute_force_triconcepts(&ctx, cap))
        .transpose()?;
    let fix = matches!(method, Method::Fixpoint | Method::Both)
        .then(|| fixpoint_triconcepts(&ctx, cap))
        .transpose()?;
    let agree = match (&brute, &fix) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let list = brute.as_ref().or(fix.as_ref()).expect("one method runs");
    let mut result = json!({
        "method": format!("{method:?}").to_lowercase(),
        "count": list.len(),
        "agree": agree,
        "triconcepts": concepts_json(&ctx, list),
    });
    if !agree {
        result["fixpoint_triconcepts"] = concepts_json(&ctx, fix.as_ref().expect("both ran"));
    }
    let mut table = format!("{} triconcepts\n", list.len());
    for c in list {
        let _ = writeln!(table, "  {}", ctx.fmt_parts(&c.parts()));
    }
    if !agree {
        table.push_str("brute-force and fixpoint listings disagree\n");
    }
    Ok(Outcome {
        report: Report::new(echo, loaded.digest.clone(), result),
        table,
        status: if agree { 0 } else { 4 },
    })
}

pub fn switching(
    loaded: &Loaded,
    echo: String,
    convention: Convention,
    arity: Arity,
    cap: SizeCap,
) -> Result<Outcome, CliError> {
    let ctx = context(loaded, "switching")?;
    let gens = switching_generators(&ctx, cap)?;
    let mut table = String::new();
    let listed: Vec<Value> = match arity {
        Arity::Pairwise => gens
            .proper
            .iter()
            .map(|g| {
                let _ = writeln!(table, "  {}  ({} witness pairs)", ctx.fmt_parts(&g.triset.parts()), g.witnesses.len());
                json!({
                    "triset": report::triset(&ctx, &g.triset),
                    "witnesses": g.witnesses.iter().map(|(a, b)| json!([report::triconcept(&ctx, a), report::triconcept(&ctx, b)])).collect::<Vec<_>>(),
                })
            })
            .collect(),
        Arity::Multiway => intersection_generators(&ctx, cap)?
            .iter()
            .map(|g| {
                let _ = writeln!(table, "  {}  (under {} triconcepts)", ctx.fmt_parts(&g.triset.parts()), g.covering.len());
                json!({
                    "triset": report::triset(&ctx, &g.triset),
                    "covering": concepts_json(&ctx, &g.covering),
                })
            })
            .collect(),
    };
    let empty = &gens.empty_product;
    let count = listed.len()
        + match convention {
            Convention::Product => usize::from(!empty.is_empty()),
            Convention::Componentwise => empty.len(),
        };
    let mut result = json!({
        "arity": format!("{arity:?}").to_lowercase(),
        "count_convention": format!("{convention:?}").to_lowercase(),
        "count": count,
        "generators": listed,
        "empty_product_generators": empty.iter().map(|g| report::triset(&ctx, &g.triset)).collect::<Vec<_>>(),
    });
    let mut head = format!("{count} switching generators ({:?}, {:?})\n", arity, convention).to_lowercase();
    if let Some(Generator::Power(n)) = loaded.generator {
        let n32 = n as u32;
        result["power"] = json!({
            "n": n,
            "closed_form": closed_form(n32).to_string(),
            "triple_sum": triple_sum(n32).to_string(),
        });
        let _ = writeln!(head, "closed form 4^{n}-3^{n} = {}, triple sum = {}", closed_form(n32), triple_sum(n32));
    }
    let _ = writeln!(head, "{} empty-product generators", empty.len());
    Ok(Outcome {
        report: Report::new(echo, loaded.digest.clone(), result),
        table: head + &table,
        status: 0,
    })
}

fn closed_non_maximal_json(w: Option<&ClosedNonMaximal>, show: &dyn Fn(&EntitySet) -> Value) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "set": show(&w.set),
            "mccs_supersets": w.supersets.iter().map(show).collect::<Vec<_>>(),
        }),
    }
}

pub fn mccs(loaded: &Loaded, echo: String, cap: SizeCap) -> Result<Outcome, CliError> {
    let mut table = String::new();
    let result = match &loaded.input {
        Input::Mrd(m) => {
            let list = m.enumerate_mccs(cap)?;
            let cnm = m.closed_non_maximal_witness(cap)?;
            let show = |s: &EntitySet| report::entities(m, s);
            let _ = writeln!(table, "{} MCCSs", list.len());
            for s in &list {
                let _ = writeln!(table, "  {{{}}}", s.iter().map(|e| m.qualified(e)).collect::<Vec<_>>().join(","));
            }
            json!({
                "input": "database",
                "mccs": list.iter().map(show).collect::<Vec<_>>(),
                "closed_non_maximal": closed_non_maximal_json(cnm.as_ref(), &show),
                "idempotency_condition_violations": m.idempotency_condition_violations().iter().map(|&t| m.types()[t].clone()).collect::<Vec<_>>(),
            })
        }
        Input::Context(ctx) => {
            let m = encode_tripartite(ctx);
            let list = m.enumerate_mccs(cap)?;
            let phantoms = phantom_edges(ctx);
            let concepts = brute_force_triconcepts(ctx, cap)?;
            let cnm = m.closed_non_maximal_witness(cap)?;
            let show = |s: &EntitySet| report::flat(ctx, s);
            let mut warnings = Vec::new();
            let mut recovered = Vec::new();
            let mut repairs = Vec::new();
            let _ = writeln!(table, "{} MCCSs, {} phantom hyperedges", list.len(), phantoms.len());
            for s in &list {
                let out = mccs_to_triset(ctx, s)?;
                let (kind, value) = match out {
                    RepairOutcome::Repaired(c) => {
                        if !concepts.contains(&c) {
                            warnings.push(format!("repair of {} is not a triconcept", report::set_text(&ctx.flat_labels(s))));
                        }
                        recovered.push(c);
                        ("repaired", report::triconcept(ctx, &c))
                    }
                    RepairOutcome::NotATriset => ("not_a_triset", Value::Null),
                    RepairOutcome::NotClosed(t) => ("not_closed", report::triset(ctx, &t)),
                };
                let _ = writeln!(table, "  {} -> {kind} {}", report::set_text(&ctx.flat_labels(s)), match out {
                    RepairOutcome::Repaired(c) => ctx.fmt_parts(&c.parts()),
                    RepairOutcome::NotClosed(t) => ctx.fmt_parts(&t.parts()),
                    RepairOutcome::NotATriset => String::new(),
                });
                repairs.push(json!({ "mccs": show(s), "outcome": kind, "triset": value }));
            }
            for c in concepts.iter().filter(|c| !c.is_empty_product()) {
                if !recovered.contains(c) {
                    warnings.push(format!("triconcept {} is not recovered from any MCCS", ctx.fmt_parts(&c.parts())));
                }
            }
            for w in &warnings {
                let _ = writeln!(table, "warning: {w}");
            }
            if let Some(w) = &cnm {
                let _ = writeln!(table, "g-closed non-maximal: {}", report::set_text(&ctx.flat_labels(&w.set)));
            }
            json!({
                "input": "context",
                "mccs": list.iter().map(show).collect::<Vec<_>>(),
                "phantom_edges": phantoms.iter().map(|p| json!([
                    ctx.labels(Axis::Object)[p.object],
                    ctx.labels(Axis::Attribute)[p.attribute],
                    ctx.labels(Axis::Condition)[p.condition],
                ])).collect::<Vec<_>>(),
                "repairs": repairs,
                "closed_non_maximal": closed_non_maximal_json(cnm.as_ref(), &show),
                "warnings": warnings,
            })
        }
    };
    Ok(Outcome {
        report: Report::new(echo, loaded.digest.clone(), result),
        table,
        status: 0,
    })
}

fn verdicts_json(v: &Verdicts) -> Value {
    json!({
        "accessible": v.accessible,
        "independence_system": v.independence_system,
        "confluent": v.confluent,
        "confluent_any_common_subset": v.confluent_any_subset,
        "strongly_accessible": v.strongly_accessible,
        "closure_system": v.closure_system,
    })
}

fn witness_json(ctx: &TriContext, w: &Option<MonotonicityWitness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "lower": report::triset(ctx, &w.lower),
            "upper": report::triset(ctx, &w.upper),
            "closed_lower": report::triconcept(ctx, &w.closed_lower),
            "closed_upper": report::triconcept(ctx, &w.closed_upper),
        }),
    }
}

pub fn check(loaded: &Loaded, echo: String, cap: SizeCap) -> Result<Outcome, CliError> {
    let ctx = context(loaded, "check")?;
    let trisets = all_trisets(&ctx, cap)?;
    let extensive = trisets.iter().all(|t| t.leq(&h_close(&ctx, t).as_triset()));
    let idempotent = trisets.iter().all(|t| {
        let c = h_close(&ctx, t);
        h_close(&ctx, &c.as_triset()) == c
    });
    let full = find_monotonicity_witness(&ctx, Operator::H, TrisetDomain::Full, cap)?;
    let single = TrisetDomain::Weeded(WeedingRule::SingleCover);
    let weeded = find_monotonicity_witness(&ctx, Operator::H, single, cap)?;
    let literal = find_monotonicity_witness(&ctx, Operator::H, TrisetDomain::Weeded(WeedingRule::Literal), cap)?;
    let mut sigma_weeded = serde_json::Map::new();
    for o in AxisOrdering::ALL {
        let w = find_monotonicity_witness(&ctx, Operator::Sigma(o), single, cap)?;
        sigma_weeded.insert(format!("sigma_{o}"), json!(w.is_none()));
    }
    let nc = check_non_commutativity(&ctx, cap)?;
    let obstructions = global_closure_obstructions(&ctx, cap)?;
    let antiordinal = same_extent_antiordinal_pairs(&ctx, cap)?;

    let weeded_sys = WeededSystem::new(&ctx, WeedingRule::SingleCover, cap)?;
    let flat = setsys::ExplicitFamily::materialize(&weeded_sys.flat_family(), EmptySetPolicy::Include)?;
    let flat_no_empty = flat.clone().with_empty(EmptySetPolicy::Exclude)?;
    let mrd = encode_tripartite(&ctx);
    cap.check_entities(mrd.len())?;
    let ccs = setsys::ExplicitFamily::materialize(&mrd.ccs_family(), EmptySetPolicy::AsIs)?;

    let result = json!({
        "h_extensive": extensive,
        "h_idempotent": idempotent,
        "monotonicity_witness_full": witness_json(&ctx, &full),
        "monotonicity_witness_weeded": witness_json(&ctx, &weeded),
        "monotonicity_witness_weeded_literal": witness_json(&ctx, &literal),
        "sigma_monotone_on_weeded": Value::Object(sigma_weeded),
        "non_commutativity": nc.map(|n| json!({
            "first": n.first.to_string(),
            "second": n.second.to_string(),
            "triset": report::triset(&ctx, &n.triset),
            "first_after_second": report::triconcept(&ctx, &n.first_after_second),
            "second_after_first": report::triconcept(&ctx, &n.second_after_first),
        })),
        "no_global_closure": obstructions.first().map(|(a, b, s)| json!({
            "c1": report::triconcept(&ctx, a),
            "c2": report::triconcept(&ctx, b),
            "meet": report::triset(&ctx, s),
        })),
        "same_extent_antiordinal_pairs": antiordinal.len(),
        "weeded_flat_family": {
            "members_with_empty": flat.len(),
            "with_empty": verdicts_json(&flat.verdicts()),
            "without_empty": verdicts_json(&flat_no_empty.verdicts()),
        },
        "ccs_family": {
            "members": ccs.len(),
            "verdicts": verdicts_json(&ccs.verdicts()),
        },
    });

    let yn = |b: bool| if b { "yes" } else { "no" };
    let found = |b: bool| if b { "found" } else { "none" };
    let mut table = String::new();
    let _ = writeln!(table, "h extensive                      {}", yn(extensive));
    let _ = writeln!(table, "h idempotent                     {}", yn(idempotent));
    let _ = writeln!(table, "monotonicity witness (full)      {}", full.map_or("none".into(), |w| ctx.fmt_parts(&w.lower.parts())));
    let _ = writeln!(table, "monotonicity witness (weeded)    {}", found(weeded.is_some()));
    let _ = writeln!(table, "sigma non-commutativity          {}", nc.map_or("none".into(), |n| format!("{} vs {} on {}", n.first, n.second, ctx.fmt_parts(&n.triset.parts()))));
    let _ = writeln!(table, "no-global-closure condition      {}", found(!obstructions.is_empty()));
    let v = flat.verdicts();
    let _ = writeln!(
        table,
        "weeded family                    accessible={} independence={} strongly_accessible={} closure={} confluent={}",
        yn(v.accessible), yn(v.independence_system), yn(v.strongly_accessible), yn(v.closure_system), yn(v.confluent)
    );
    let _ = writeln!(table, "CCS family strongly accessible   {}", yn(ccs.is_strongly_accessible()));
    Ok(Outcome {
        report: Report::new(echo, loaded.digest.clone(), result),
        table,
        status: 0,
    })
}

/// The tripartite encoding of a context as a database document.
pub fn encode(loaded: &Loaded) -> Result<MrdDoc, CliError> {
    let ctx = context(loaded, "encode")?;
    Ok(MrdDoc::from_mrd(&encode_tripartite(&ctx)))
}
