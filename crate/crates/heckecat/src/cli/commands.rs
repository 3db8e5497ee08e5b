use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::config::{parse_weight, parse_word, RunConfig};
use super::output::Output;
use super::WeylQuery;
use crate::error::{Error, Result};
use crate::hecke::oracle::{tilting_character, Character};
use crate::hecke::tilting::tilting_from_pcan;
use crate::hecke::{LaurentInt, PCanonical};
use crate::weyl::{ExtWeylElt, RootDatum, Stabilizer};

/// Largest length tabulated by `pcan`, by rank.
pub const PCAN_BUDGET: [usize; 2] = [10, 5];

fn gen_name(i: usize) -> String {
    format!("s{i}")
}

fn weight_string(w: &[i64]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn require_weight(cfg: &RunConfig, d: &RootDatum) -> Result<Vec<i64>> {
    let text = cfg
        .weight
        .as_deref()
        .ok_or_else(|| Error::Parse { pos: "--weight".into(), msg: "a weight is required".into() })?;
    parse_weight(text, d.rank)
}

pub fn weyl(cfg: &RunConfig, query: WeylQuery) -> Result<Output> {
    let d = cfg.datum()?;
    let base = json!({"type": d.name, "p": d.p});
    let (json, header, rows) = match query {
        WeylQuery::Orbit => {
            let lambda = match &cfg.weight {
                Some(t) => parse_weight(t, d.rank)?,
                None => vec![0; d.rank],
            };
            let orbit: Vec<Vec<i64>> = d.linkage_class(&lambda, 0, cfg.bound).into_iter().collect();
            let rows = orbit.iter().map(|w| vec![weight_string(w)]).collect();
            (
                json!({"query": "orbit", "weight": lambda, "bound": cfg.bound, "orbit": orbit}),
                vec!["weight".into()],
                rows,
            )
        }
        WeylQuery::Stab => {
            let lambda = require_weight(cfg, &d)?;
            let (kind, gens): (&str, Vec<String>) = match d.dot_stabilizer(&lambda) {
                Stabilizer::Walls(w) => ("walls", w.into_iter().map(gen_name).collect()),
                Stabilizer::FiniteImage(ix) => (
                    "finite_image",
                    ix.into_iter()
                        .map(|k| {
                            let word = d.finite_word(&d.weyl_group()[k]);
                            if word.is_empty() {
                                "e".into()
                            } else {
                                word.into_iter().map(gen_name).collect()
                            }
                        })
                        .collect(),
                ),
            };
            let walls: Vec<Value> = d
                .alcove_info(&lambda)
                .walls
                .iter()
                .map(|&s| {
                    let coroot = if s == 0 { d.highest_coroot().clone() } else { d.simple_coroots[s - 1].clone() };
                    let shifted: Vec<i64> = lambda.iter().zip(&d.rho).map(|(a, b)| a + b).collect();
                    json!({"reflection": gen_name(s), "pairing": d.pairing(&shifted, &coroot)})
                })
                .collect();
            let rows = gens.iter().map(|g| vec![kind.to_string(), g.clone()]).collect();
            (
                json!({"query": "stab", "weight": lambda, "kind": kind, "generators": gens, "walls": walls}),
                vec!["kind".into(), "generator".into()],
                rows,
            )
        }
        WeylQuery::Alcove => {
            let lambda = require_weight(cfg, &d)?;
            let info = d.alcove_info(&lambda);
            let rows = vec![
                vec!["in_fundamental".into(), info.in_fundamental.to_string()],
                vec!["in_closure".into(), info.in_closure.to_string()],
                vec!["in_lower_closure".into(), info.in_lower_closure.to_string()],
                vec!["walls".into(), info.walls.iter().map(|&s| gen_name(s)).collect::<Vec<_>>().join(" ")],
            ];
            (json!({"query": "alcove", "info": info}), vec!["property".into(), "value".into()], rows)
        }
        WeylQuery::Word => {
            let text = cfg
                .word
                .as_deref()
                .ok_or_else(|| Error::Parse { pos: "--word".into(), msg: "a word is required".into() })?;
            let word = parse_word(text, d.rank)?;
            let x = d.from_word(&word);
            let reduced = d.reduced_word(&x)?;
            let mut obj = json!({
                "query": "word",
                "word": word,
                "element": d.to_json(&x),
                "display": d.display(&x),
                "length": d.length(&x),
                "reduced_word": reduced,
            });
            let mut rows = vec![
                vec!["display".into(), d.display(&x)],
                vec!["length".into(), d.length(&x).to_string()],
                vec!["reduced_word".into(), reduced.iter().map(|&s| gen_name(s)).collect::<Vec<_>>().join(" ")],
            ];
            if let Some(t) = &cfg.weight {
                let lambda = parse_weight(t, d.rank)?;
                let image = d.dot_act(&x, &lambda);
                rows.push(vec!["dot_action".into(), weight_string(&image)]);
                obj["dot_action"] = json!({"weight": lambda, "image": image});
            }
            (obj, vec!["property".into(), "value".into()], rows)
        }
    };
    let mut json = json;
    json["datum"] = base;
    Ok(Output { json, header, rows, pass: true })
}

pub fn pcan(cfg: &RunConfig) -> Result<Output> {
    let d = cfg.datum()?;
    let budget = PCAN_BUDGET[(d.rank - 1).min(1)];
    let (elements, partial): (Vec<ExtWeylElt>, bool) = match &cfg.word {
        Some(t) => {
            let x = d.from_word(&parse_word(t, d.rank)?);
            if d.length(&x) > budget {
                return Err(Error::Budget(format!("length {} exceeds the budget {budget}", d.length(&x))));
            }
            (vec![x], false)
        }
        None => {
            let len = cfg.max_len.min(budget);
            let mut els = d.affine_elements(len);
            if cfg.finite {
                els.retain(|x| x.t.iter().all(|&c| c == 0));
            }
            (els, cfg.max_len > budget)
        }
    };
    let pc = PCanonical::new(&d, cfg.seed)?;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    let mut all_equal = true;
    for w in &elements {
        let pb = pc.p_canonical(w)?;
        let kl = pc.hecke.kl_basis(w);
        let support: BTreeSet<ExtWeylElt> = pb.terms().keys().chain(kl.terms().keys()).cloned().collect();
        let mut entries = Vec::new();
        for y in &support {
            let (a, b): (LaurentInt, LaurentInt) = (pb.coeff(y), kl.coeff(y));
            let eq = a == b;
            all_equal &= eq;
            rows.push(vec![d.display(w), d.display(y), a.to_string(), b.to_string(), eq.to_string()]);
            entries.push(json!({"y": d.display(y), "p_h": a, "kl_h": b, "equal": eq}));
        }
        table.push(json!({"w": d.display(w), "length": d.length(w), "entries": entries}));
    }
    let json = json!({
        "datum": {"type": d.name, "p": d.p},
        "seed": cfg.seed,
        "max_len": cfg.max_len,
        "budget": budget,
        "partial": partial,
        "all_equal_to_kl": all_equal,
        "table": table,
    });
    let header = ["w", "y", "p_h", "kl_h", "equal"].map(String::from).to_vec();
    Ok(Output { json, header, rows, pass: !partial })
}

fn character_string(c: &Character) -> String {
    c.iter().rev().map(|(m, k)| format!("{m}:{k}")).collect::<Vec<_>>().join(" ")
}

pub fn tilt(cfg: &RunConfig) -> Result<Output> {
    if cfg.datum_type.as_deref().is_some_and(|t| t != "A1") || cfg.datum_file.is_some() {
        return Err(Error::Precondition("tilt is defined for SL2 (type A1)".into()));
    }
    let d = RootDatum::a1(cfg.p)?;
    let pc = PCanonical::new(&d, cfg.seed)?;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    let mut all = true;
    for n in 0..=cfg.bound {
        let engine = tilting_from_pcan(&pc, n)?;
        let oracle = tilting_character(n, cfg.p as i64);
        let ok = engine == oracle;
        all &= ok;
        rows.push(vec![n.to_string(), character_string(&engine), character_string(&oracle), ok.to_string()]);
        let pairs = |c: &Character| c.iter().rev().map(|(m, k)| json!([m, k])).collect::<Vec<_>>();
        table.push(json!({"n": n, "engine": pairs(&engine), "oracle": pairs(&oracle), "match": ok}));
    }
    let json = json!({"p": cfg.p, "bound": cfg.bound, "seed": cfg.seed, "all_match": all, "table": table});
    let header = ["n", "engine", "oracle", "match"].map(String::from).to_vec();
    Ok(Output { json, header, rows, pass: all })
}
