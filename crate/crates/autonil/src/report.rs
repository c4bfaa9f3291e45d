//! Cross-validation reports in the two output formats. JSON carries a
//! schema version and fully structured evidence; text is a compact
//! per-group block for reading at the terminal.

use autonil_core::criteria::{CriterionOutcome, CrossValidation, Evidence};
use autonil_core::SeriesKind;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

fn sorted(results: &[CrossValidation]) -> Vec<&CrossValidation> {
    let mut refs: Vec<&CrossValidation> = results.iter().collect();
    refs.sort_by(|a, b| (a.group_order, &a.group_name).cmp(&(b.group_order, &b.group_name)));
    refs
}

fn evidence_value(evidence: &Evidence) -> Value {
    match evidence {
        Evidence::Series {
            kind,
            term_orders,
            terminated,
        } => json!({
            "type": "series",
            "kind": match kind { SeriesKind::K => "k", SeriesKind::L => "l" },
            "term_orders": term_orders,
            "terminated": terminated,
        }),
        Evidence::Chain {
            term_orders,
            normal_in_whole,
        } => json!({
            "type": "chain",
            "term_orders": term_orders,
            "normal_in_whole": normal_in_whole,
        }),
        Evidence::ChainStall { stalled_at_order } => json!({
            "type": "chain-stall",
            "stalled_at_order": stalled_at_order,
        }),
        Evidence::Sylow {
            nilpotent,
            per_prime,
        } => json!({
            "type": "sylow",
            "nilpotent": nilpotent,
            "per_prime": per_prime.iter().map(|s| json!({
                "p": s.p,
                "sylow_order": s.sylow_order,
                "aut_order": s.aut_order,
                "aut_is_p_group": s.aut_is_p_group,
            })).collect::<Vec<_>>(),
        }),
        Evidence::Frobenius {
            subgroups_checked,
            witness,
        } => json!({
            "type": "frobenius",
            "subgroups_checked": subgroups_checked,
            "witness": witness.as_ref().map(|w| json!({
                "p": w.p,
                "subgroup_order": w.subgroup_order,
                "subgroup_members": w.subgroup_members,
                "quotient_order": w.quotient_order,
            })),
        }),
        Evidence::Fixity {
            operator_count,
            witness,
        } => json!({
            "type": "fixity",
            "operator_count": operator_count,
            "witness": witness.as_ref().map(|w| json!({
                "operator": w.operator,
                "operator_order": w.operator_order,
                "element": w.element,
                "element_order": w.element_order,
            })),
        }),
    }
}

fn result_value(cv: &CrossValidation, timings: bool) -> Value {
    let mut criteria = Map::new();
    for outcome in &cv.outcomes {
        let value = match outcome {
            CriterionOutcome::Report(r) => {
                let mut entry = Map::new();
                entry.insert("verdict".into(), Value::Bool(r.verdict));
                entry.insert("evidence".into(), evidence_value(&r.evidence));
                if timings {
                    if let Some(us) = r.elapsed_micros {
                        entry.insert("elapsed_micros".into(), json!(us));
                    }
                }
                Value::Object(entry)
            }
            CriterionOutcome::Skipped { reason, .. } => json!({ "skipped": reason }),
        };
        criteria.insert(outcome.criterion().name().to_string(), value);
    }
    let mut baer = Map::new();
    for b in &cv.baer {
        baer.insert(
            b.p.to_string(),
            json!({
                "absolute": b.absolute_match,
                "classical": b.classical_match,
            }),
        );
    }
    json!({
        "group": cv.group_name,
        "order": cv.group_order,
        "criteria": Value::Object(criteria),
        "agree": cv.agree,
        "baer": Value::Object(baer),
    })
}

/// Versioned JSON document, records sorted by (order, name). Timing
/// fields appear only when `timings` is set.
pub fn render_json(results: &[CrossValidation], timings: bool) -> String {
    let records: Vec<Value> = sorted(results)
        .into_iter()
        .map(|cv| result_value(cv, timings))
        .collect();
    let doc = json!({ "schema": 1, "results": records });
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn evidence_text(evidence: &Evidence) -> String {
    match evidence {
        Evidence::Series {
            kind,
            term_orders,
            terminated,
        } => {
            let kind = match kind {
                SeriesKind::K => "descending",
                SeriesKind::L => "ascending",
            };
            let tail = if *terminated { "terminated" } else { "stalled" };
            format!("{kind} term orders {term_orders:?}, {tail}")
        }
        Evidence::Chain {
            term_orders,
            normal_in_whole,
        } => {
            let normal = if *normal_in_whole {
                "all normal"
            } else {
                "not all normal"
            };
            format!("chain orders {term_orders:?}, {normal}")
        }
        Evidence::ChainStall { stalled_at_order } => {
            format!("no chain; descent stalls at order {stalled_at_order}")
        }
        Evidence::Sylow {
            nilpotent,
            per_prime,
        } => {
            if !nilpotent {
                return "not nilpotent".to_string();
            }
            let parts: Vec<String> = per_prime
                .iter()
                .map(|s| {
                    format!(
                        "p={}: |P|={}, |Aut P|={}, p-group: {}",
                        s.p,
                        s.sylow_order,
                        s.aut_order,
                        if s.aut_is_p_group { "yes" } else { "no" }
                    )
                })
                .collect();
            if parts.is_empty() {
                "nilpotent, no prime divisors".to_string()
            } else {
                format!("nilpotent; {}", parts.join("; "))
            }
        }
        Evidence::Frobenius {
            subgroups_checked,
            witness,
        } => match witness {
            None => format!("{subgroups_checked} p-subgroups induce p-groups"),
            Some(w) => format!(
                "subgroup of order {} (p={}) has induced order {}",
                w.subgroup_order, w.p, w.quotient_order
            ),
        },
        Evidence::Fixity {
            operator_count,
            witness,
        } => match witness {
            None => format!("all {operator_count} operators fix coprime elements"),
            Some(w) => format!(
                "operator {} (order {}) moves element {} (order {})",
                w.operator, w.operator_order, w.element, w.element_order
            ),
        },
    }
}

/// One block per group: verdict line, then a line per criterion, then
/// the fixed-point identities per prime.
pub fn render_text(results: &[CrossValidation], timings: bool) -> String {
    let mut out = String::new();
    for cv in sorted(results) {
        let verdict = match cv.verdict() {
            Some(v) => v.to_string(),
            None => "unknown (all criteria skipped)".to_string(),
        };
        let agree = if cv.agree { "agree" } else { "DISAGREE" };
        let _ = writeln!(
            out,
            "{} (order {}): autonilpotent = {verdict}, criteria {agree}",
            cv.group_name, cv.group_order
        );
        for outcome in &cv.outcomes {
            match outcome {
                CriterionOutcome::Report(r) => {
                    let timing = match (timings, r.elapsed_micros) {
                        (true, Some(us)) => format!("  [{us} us]"),
                        _ => String::new(),
                    };
                    let _ = writeln!(
                        out,
                        "  {:<9} {:<5} {}{timing}",
                        r.criterion.name(),
                        r.verdict,
                        evidence_text(&r.evidence)
                    );
                }
                CriterionOutcome::Skipped { criterion, reason } => {
                    let _ = writeln!(out, "  {:<9} skipped: {reason}", criterion.name());
                }
            }
        }
        for b in &cv.baer {
            let absolute = match b.absolute_match {
                Some(v) => v.to_string(),
                None => "skipped".to_string(),
            };
            let _ = writeln!(
                out,
                "  baer p={}: absolute match = {absolute}, classical match = {}",
                b.p, b.classical_match
            );
        }
    }
    out
}
