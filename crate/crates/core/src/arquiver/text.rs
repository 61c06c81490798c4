use std::collections::BTreeMap;
use std::fmt::Write;

use super::{ARArrow, ARQuiver, ARVertex};
use crate::Error;

/// Translation-quiver text: `vertex X [proj] [inj] [boundary]`,
/// `arrow X -> Y [mult]`, `tau X = Y`.  Aliases and module data are dropped.
pub fn export_text<F>(arq: &ARQuiver<F>) -> String {
    let mut out = String::new();
    for v in &arq.vertices {
        out.push_str("vertex ");
        out.push_str(&v.name);
        for (flag, on) in [("proj", v.is_projective), ("inj", v.is_injective), ("boundary", v.boundary)] {
            if on {
                out.push(' ');
                out.push_str(flag);
            }
        }
        out.push('\n');
    }
    let mut arrows = arq.arrows.clone();
    arrows.sort_by_key(|a| (a.source, a.target));
    for a in arrows {
        let _ = write!(out, "arrow {} -> {}", arq.vertices[a.source].name, arq.vertices[a.target].name);
        if a.multiplicity != 1 {
            let _ = write!(out, " {}", a.multiplicity);
        }
        out.push('\n');
    }
    for (x, t) in arq.tau.iter().enumerate() {
        if let Some(t) = t {
            let _ = writeln!(out, "tau {} = {}", arq.vertices[x].name, arq.vertices[*t].name);
        }
    }
    out
}

fn perr(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// `#` opens a comment only at the start of a token, so names such as
/// `M{1.1}#2` survive.
fn strip_comment(line: &str) -> &str {
    let mut prev_space = true;
    for (i, ch) in line.char_indices() {
        if ch == '#' && prev_space {
            return &line[..i];
        }
        prev_space = ch.is_whitespace();
    }
    line
}

/// Tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = vec![];
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses the translation-quiver format into a quiver without module data.
/// The result is `complete` iff no vertex is flagged `boundary`.
pub fn import_abstract<F>(text: &str) -> Result<ARQuiver<F>, Error> {
    let mut vertices: Vec<ARVertex<F>> = vec![];
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut arrows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut tau_lines = vec![];
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = strip_comment(raw);
        let toks = tokens(line);
        let Some(&(kc, kw)) = toks.first() else { continue };
        let lookup = |(c, name): (usize, &str)| -> Result<usize, Error> {
            index.get(name).copied().ok_or_else(|| perr(ln, c, format!("unknown vertex `{name}`")))
        };
        match kw {
            "vertex" => {
                let &(c, name) = toks.get(1).ok_or_else(|| perr(ln, kc, "missing vertex name"))?;
                if index.contains_key(name) {
                    return Err(perr(ln, c, format!("duplicate vertex `{name}`")));
                }
                let mut v = ARVertex {
                    name: name.to_string(),
                    aliases: vec![],
                    module: None,
                    is_projective: false,
                    is_injective: false,
                    boundary: false,
                };
                for &(fc, flag) in &toks[2..] {
                    match flag {
                        "proj" => v.is_projective = true,
                        "inj" => v.is_injective = true,
                        "boundary" => v.boundary = true,
                        _ => return Err(perr(ln, fc, format!("unknown flag `{flag}`"))),
                    }
                }
                index.insert(name.to_string(), vertices.len());
                vertices.push(v);
            }
            "arrow" => {
                if toks.len() < 4 || toks[2].1 != "->" || toks.len() > 5 {
                    return Err(perr(ln, kc, "expected `arrow X -> Y [mult]`"));
                }
                let s = lookup(toks[1])?;
                let t = lookup(toks[3])?;
                let mult = match toks.get(4) {
                    Some(&(c, m)) => match m.parse::<usize>() {
                        Ok(k) if k > 0 => k,
                        _ => return Err(perr(ln, c, "multiplicity must be a positive integer")),
                    },
                    None => 1,
                };
                if arrows.insert((s, t), mult).is_some() {
                    return Err(perr(ln, kc, "duplicate arrow"));
                }
            }
            "tau" => {
                if toks.len() != 4 || toks[2].1 != "=" {
                    return Err(perr(ln, kc, "expected `tau X = Y`"));
                }
                tau_lines.push((ln, lookup(toks[1])?, lookup(toks[3])?));
            }
            other => return Err(perr(ln, kc, format!("unknown keyword `{other}`"))),
        }
    }
    let mut tau = vec![None; vertices.len()];
    for (ln, x, t) in tau_lines {
        if tau[x].is_some() {
            return Err(Error::Validation(format!("line {ln}: τ{} given twice", vertices[x].name)));
        }
        tau[x] = Some(t);
    }
    let complete = !vertices.iter().any(|v| v.boundary);
    let arrows = arrows
        .into_iter()
        .map(|((source, target), multiplicity)| ARArrow {
            source,
            target,
            multiplicity,
        })
        .collect();
    let arq = ARQuiver::from_parts(vertices, arrows, tau, complete, None);
    arq.check_invariants()?;
    Ok(arq)
}
