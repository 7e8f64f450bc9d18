//! Rendering of check results as stable text or JSON.
//!
//! Text output is one `key=value` line per check, suitable for grepping;
//! JSON output is pretty-printed with keys in sorted order. Both are
//! fully determined by the report contents, so identical runs produce
//! byte-identical output.

use crate::catalog::CatalogEntry;
use crate::verify::{
    FgsCheck, GassmannPair, KlingenWitness, LemmaCheck, LemmaRouteCheck, SweepReport, TheoremCheck,
};
use serde::Serialize;
use std::fmt::Write as _;

/// Output encoding for [`render_report`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Everything the command-line surface can print.
#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Lemma {
        checks: Vec<LemmaCheck>,
    },
    LemmaRoute {
        checks: Vec<LemmaRouteCheck>,
    },
    Fgs {
        checks: Vec<FgsCheck>,
    },
    Theorem {
        checks: Vec<TheoremCheck>,
    },
    Falsify {
        group: String,
        subgroup: String,
        normal: String,
        witness: Option<KlingenWitness>,
    },
    Gassmann {
        group: String,
        pairs: Vec<GassmannPair>,
    },
    Sweep {
        #[serde(flatten)]
        report: SweepReport,
    },
    Catalog {
        entries: Vec<CatalogEntry>,
    },
    CanonicalFile {
        text: String,
    },
}

/// Renders a report; the result always ends in a newline.
pub fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            // routing through Value sorts every object's keys
            let value = serde_json::to_value(report).expect("reports serialize");
            let mut out = serde_json::to_string_pretty(&value).expect("values render as JSON");
            out.push('\n');
            out
        }
        ReportFormat::Text => render_text(report),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    match report {
        Report::Lemma { checks } => {
            for c in checks {
                line(w, &format!(
                    "lemma group={} subgroup={} normal={} element={} lhs={} rhs_numerator={} rhs={} holds={}",
                    c.group, c.subgroup, c.normal, c.element, c.lhs, c.rhs_numerator, c.rhs, c.holds
                ));
            }
        }
        Report::LemmaRoute { checks } => {
            for c in checks {
                line(w, &format!(
                    "route group={} subgroup={} normal={} element={} direct={} fixed_orbits={} nonsplit={} rhs={} holds={}",
                    c.group, c.subgroup, c.normal, c.element, c.direct, c.fixed_orbit_count,
                    c.nonsplit_orbits, c.rhs, c.holds
                ));
            }
        }
        Report::Fgs { checks } => {
            for c in checks {
                line(w, &format!(
                    "fgs group={} action={} subgroup_h={} normal={} element={} average={} nonsplit={} holds={}",
                    c.group, c.action, c.subgroup_h, c.normal, c.element, c.average,
                    c.nonsplit_orbits, c.holds
                ));
            }
        }
        Report::Theorem { checks } => {
            for c in checks {
                line(w, &format!(
                    "theorem group={} subgroup_u={} subgroup_v={} normal={} hypothesis={} conclusion={} vacuous={} holds={}",
                    c.group, c.subgroup_u, c.subgroup_v, c.normal, c.hypothesis_holds,
                    c.conclusion_holds, c.vacuous, c.holds
                ));
            }
        }
        Report::Falsify {
            group,
            subgroup,
            normal,
            witness,
        } => match witness {
            Some(wit) => line(
                w,
                &format!(
                    "witness group={} subgroup={} normal={} element={} char_un={} char_u={}",
                    wit.group, wit.subgroup, wit.normal, wit.element, wit.char_un, wit.char_u
                ),
            ),
            None => line(
                w,
                &format!("witness=none group={group} subgroup={subgroup} normal={normal}"),
            ),
        },
        Report::Gassmann { group, pairs } => {
            if pairs.is_empty() {
                line(w, &format!("pairs=0 group={group}"));
            }
            for p in pairs {
                let character: Vec<String> = p.character.iter().map(|v| v.to_string()).collect();
                line(
                    w,
                    &format!(
                        "pair group={} order={} index={} character={} subgroup_u={} subgroup_v={}",
                        p.group,
                        p.order,
                        p.index,
                        character.join(","),
                        p.subgroup_u,
                        p.subgroup_v
                    ),
                );
            }
        }
        Report::Sweep { report: r } => {
            line(w, &format!(
                "sweep universe={} subgroup_cap={} pointwise_cap={} groups={} subgroups={} normal_subgroups={} lemma_checks={} lemma_route_checks={} fgs_checks={} theorem_checks={} equal_character_pairs={} violations={} truncated={}",
                r.universe.len(), r.subgroup_cap, r.pointwise_cap, r.groups, r.subgroups,
                r.normal_subgroups, r.lemma_checks, r.lemma_route_checks, r.fgs_checks,
                r.theorem_checks, r.equal_character_pairs, r.violations.len(), r.truncated.len()
            ));
            for v in &r.violations {
                line(
                    w,
                    &format!("violation instance={} detail={}", v.instance, v.detail),
                );
            }
            for t in &r.truncated {
                line(w, &format!("truncated name={t}"));
            }
        }
        Report::Catalog { entries } => {
            for e in entries {
                line(
                    w,
                    &format!(
                        "catalog name={} degree={} order={}",
                        e.name, e.degree, e.order
                    ),
                );
            }
        }
        Report::CanonicalFile { text } => {
            out.push_str(text);
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
    }
    out
}

fn line(out: &mut String, content: &str) {
    writeln!(out, "{content}").expect("writing to a String cannot fail");
}
