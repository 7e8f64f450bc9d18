//! A small line-based file format for permutation groups, plus parsers
//! for subgroup and element arguments given in cycle notation.
//!
//! ```text
//! # full-line and trailing comments start with '#'
//! name my group        # optional label
//! degree 4             # required, before any gen line
//! gen (1 2 3 4)        # zero or more generators
//! gen (1 3)
//! ```
//!
//! Parse errors carry the 1-based line number; rendering writes the
//! directives back in the order above, so parse ∘ render is the
//! identity on groups.

use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;
use std::fmt::Write as _;

/// Parses the group-file format (default order cap).
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    parse_group_file_capped(text, DEFAULT_ORDER_CAP)
}

/// Parses the group-file format, enumerating at most `cap` elements.
pub fn parse_group_file_capped(text: &str, cap: usize) -> Result<PermGroup> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gen_lines: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let at = |source: Error| Error::AtLine {
            line: line_no,
            source: Box::new(source),
        };
        let parse_err = |msg: &str| {
            at(Error::ParseError {
                msg: msg.to_string(),
            })
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = match line.split_once(char::is_whitespace) {
            Some((d, r)) => (d, r.trim()),
            None => (line, ""),
        };
        match directive {
            "name" => {
                if rest.is_empty() {
                    return Err(parse_err("name directive needs a value"));
                }
                if name.is_some() {
                    return Err(parse_err("duplicate name directive"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err("duplicate degree directive"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| parse_err("degree must be a positive integer"))?;
                if n == 0 {
                    return Err(parse_err("degree must be a positive integer"));
                }
                degree = Some(n);
            }
            "gen" => {
                if degree.is_none() {
                    return Err(parse_err("gen directive before degree"));
                }
                gen_lines.push((line_no, rest.to_string()));
            }
            other => {
                return Err(parse_err(&format!("unknown directive `{other}`")));
            }
        }
    }

    let degree = degree.ok_or(Error::ParseError {
        msg: "missing degree directive".to_string(),
    })?;
    let mut generators = Vec::with_capacity(gen_lines.len());
    for (line_no, text) in gen_lines {
        let g = Permutation::from_cycles(&text, degree).map_err(|source| Error::AtLine {
            line: line_no,
            source: Box::new(source),
        })?;
        generators.push(g);
    }
    let group = PermGroup::from_generators_capped(degree, generators, cap)?;
    Ok(match name {
        Some(n) => group.with_name(n),
        None => group,
    })
}

/// Renders a group into canonical file form: the generators are
/// regenerated greedily from the sorted element list, so any two files
/// describing the same group render identically.
pub fn render_group_file(group: &PermGroup) -> String {
    let mut out = String::new();
    if let Some(name) = group.name() {
        writeln!(out, "name {name}").expect("writing to a String cannot fail");
    }
    writeln!(out, "degree {}", group.degree()).expect("writing to a String cannot fail");
    for g in group.full_subgroup().generators() {
        writeln!(out, "gen {g}").expect("writing to a String cannot fail");
    }
    out
}

/// Parses a subgroup argument: `;`-separated generators in cycle
/// notation, all of which must lie in `group`; an empty string is the
/// trivial subgroup.
pub fn parse_subgroup_arg(group: &PermGroup, text: &str) -> Result<SubgroupHandle> {
    if text.trim().is_empty() {
        return Ok(group.trivial_subgroup());
    }
    let mut gens = Vec::new();
    for part in text.split(';') {
        gens.push(parse_element_arg(group, part)?);
    }
    group.subgroup(&gens)
}

/// Parses one element in cycle notation and checks membership in
/// `group`.
pub fn parse_element_arg(group: &PermGroup, text: &str) -> Result<Permutation> {
    let p = Permutation::from_cycles(text.trim(), group.degree())?;
    if !group.contains(&p)? {
        return Err(Error::NotInGroup);
    }
    Ok(p)
}
