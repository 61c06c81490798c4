use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraPresentation, PathWord, Quiver, Relation};
use crate::exactla::{is_prime, FieldKind};
use crate::Error;

fn err(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

fn is_label_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Star,
    Plus,
    Minus,
}

/// Splits `s` into tokens; `col0` is the 1-based column of `s[0]`.
fn tokenize(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let mut parts = text.split('/');
                let num: BigInt = parts.next().unwrap().parse().map_err(|_| err(line, col, "bad number"))?;
                let den: BigInt = match parts.next() {
                    Some(d) => d.parse().map_err(|_| err(line, col, "bad number"))?,
                    None => BigInt::one(),
                };
                if parts.next().is_some() || den.is_zero() {
                    return Err(err(line, col, format!("bad number `{text}`")));
                }
                out.push((Tok::Num(BigRational::new(num, den)), col));
            }
            c if is_label_char(c) => {
                let start = i;
                while i < chars.len() && is_label_char(chars[i]) {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => return Err(err(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

fn parse_relation(
    q: &Quiver,
    text: &str,
    line: usize,
    col0: usize,
) -> Result<Relation, Error> {
    let toks = tokenize(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut pos = 0;
    let mut terms: Vec<(BigRational, PathWord, usize)> = vec![];
    loop {
        let mut sign = BigRational::one();
        let mut saw_sign = false;
        while let Some((t, _)) = toks.get(pos) {
            match t {
                Tok::Plus => {}
                Tok::Minus => sign = -sign,
                _ => break,
            }
            saw_sign = true;
            pos += 1;
        }
        if !terms.is_empty() && !saw_sign {
            let col = toks.get(pos).map_or(end_col, |t| t.1);
            return Err(err(line, col, "expected `+` or `-` between terms"));
        }
        let term_col = toks.get(pos).map_or(end_col, |t| t.1);
        let mut coeff = sign;
        if let Some((Tok::Num(c), _)) = toks.get(pos) {
            coeff *= c.clone();
            pos += 1;
            if let Some((Tok::Star, _)) = toks.get(pos) {
                pos += 1;
            }
        }
        let mut word = vec![];
        loop {
            match toks.get(pos) {
                Some((Tok::Ident(name), col)) => {
                    let a = q
                        .arrow_index(name)
                        .ok_or_else(|| err(line, *col, format!("unknown arrow `{name}`")))?;
                    word.push(a);
                    pos += 1;
                }
                Some((_, col)) => return Err(err(line, *col, "expected an arrow label")),
                None => return Err(err(line, end_col, "expected an arrow label")),
            }
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                _ => break,
            }
        }
        let path = PathWord::from_arrows(q, word)
            .ok_or_else(|| err(line, term_col, "path is not composable"))?;
        if path.len() < 2 {
            return Err(err(line, term_col, "relation terms must have length at least 2"));
        }
        terms.push((coeff, path, term_col));
        if pos >= toks.len() {
            break;
        }
    }
    let (s, t) = (terms[0].1.source, terms[0].1.target);
    let mut merged: BTreeMap<PathWord, BigRational> = BTreeMap::new();
    let mut order = vec![];
    for (c, p, col) in terms {
        if p.source != s || p.target != t {
            return Err(err(line, col, "relation terms have different endpoints"));
        }
        if !merged.contains_key(&p) {
            order.push(p.clone());
        }
        *merged.entry(p).or_insert_with(BigRational::zero) += c;
    }
    let terms: Vec<_> = order
        .into_iter()
        .filter_map(|p| {
            let c = merged.remove(&p).unwrap();
            (!c.is_zero()).then_some((c, p))
        })
        .collect();
    if terms.is_empty() {
        return Err(err(line, col0, "relation has no nonzero term"));
    }
    Ok(Relation { terms })
}

/// Parses the algebra file format.
///
/// ```text
/// field Q
/// vertex a
/// vertex b
/// arrow alpha: a -> b
/// relation beta*alpha - 2 * gamma*delta
/// radical_square_zero
/// ```
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation, Error> {
    let mut q = Quiver::new();
    let mut field = None;
    let mut rad2 = false;
    let mut relation_lines = vec![];
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let kw: String = trimmed.chars().take_while(|c| !c.is_whitespace()).collect();
        let rest_offset = indent + kw.chars().count();
        let rest: String = content.chars().skip(rest_offset).collect();
        let rest_col = rest_offset + 1;
        match kw.as_str() {
            "field" => {
                if field.is_some() {
                    return Err(err(line, 1 + indent, "field declared twice"));
                }
                let parts: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match parts.as_slice() {
                    ["Q"] => FieldKind::Rational,
                    ["F", p] => {
                        let p: u64 = p
                            .parse()
                            .map_err(|_| err(line, rest_col, format!("bad prime `{p}`")))?;
                        if !is_prime(p) {
                            return Err(err(line, rest_col, format!("{p} is not prime")));
                        }
                        FieldKind::Prime(p)
                    }
                    _ => return Err(err(line, rest_col, "expected `Q` or `F <p>`")),
                });
            }
            "vertex" => {
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(err(line, rest_col, "expected a vertex label"));
                }
                for name in names {
                    if !name.chars().all(is_label_char) {
                        return Err(err(line, rest_col, format!("bad vertex label `{name}`")));
                    }
                    if q.vertex_index(name).is_some() {
                        return Err(err(line, rest_col, format!("duplicate vertex `{name}`")));
                    }
                    q.add_vertex(name);
                }
            }
            "arrow" => {
                let (label, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, rest_col, "expected `arrow <label>: <src> -> <tgt>`"))?;
                let label = label.trim();
                if label.is_empty() || !label.chars().all(is_label_char) {
                    return Err(err(line, rest_col, format!("bad arrow label `{label}`")));
                }
                if q.arrow_index(label).is_some() {
                    return Err(err(line, rest_col, format!("duplicate arrow `{label}`")));
                }
                let ends_col = rest_col + label.chars().count() + 1;
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| err(line, ends_col, "expected `<src> -> <tgt>`"))?;
                let s = s.trim();
                let t = t.trim();
                let si = q
                    .vertex_index(s)
                    .ok_or_else(|| err(line, ends_col, format!("unknown vertex `{s}`")))?;
                let ti = q
                    .vertex_index(t)
                    .ok_or_else(|| err(line, ends_col, format!("unknown vertex `{t}`")))?;
                q.add_arrow(label, si, ti);
            }
            "relation" => relation_lines.push((line, rest, rest_col)),
            "radical_square_zero" => {
                if !rest.trim().is_empty() {
                    return Err(err(line, rest_col, "unexpected text after radical_square_zero"));
                }
                rad2 = true;
            }
            other => return Err(err(line, 1 + indent, format!("unknown directive `{other}`"))),
        }
    }
    let mut relations = vec![];
    for (line, rest, col) in relation_lines {
        relations.push(parse_relation(&q, &rest, line, col)?);
    }
    if rad2 {
        for r in AlgebraPresentation::radical_square_zero_relations(&q) {
            if !relations.contains(&r) {
                relations.push(r);
            }
        }
    }
    Ok(AlgebraPresentation {
        quiver: q,
        relations,
        field: field.unwrap_or(FieldKind::Rational),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYCLE4: &str = "field Q
vertex a
vertex b
vertex c
vertex d
arrow alpha: a -> c
arrow beta: b -> a
arrow gamma: c -> d
arrow delta: d -> b
radical_square_zero
";

    #[test]
    fn four_cycle_counts() {
        let p = parse_presentation(CYCLE4).unwrap();
        assert_eq!(p.quiver.num_vertices(), 4);
        assert_eq!(p.quiver.num_arrows(), 4);
        assert_eq!(p.relations.len(), 4);
    }

    #[test]
    fn a2_without_relations() {
        let p = parse_presentation("vertex a\nvertex b\narrow x: a -> b\n").unwrap();
        assert_eq!((p.quiver.num_vertices(), p.quiver.num_arrows(), p.relations.len()), (2, 1, 0));
        assert_eq!(p.field, FieldKind::Rational);
    }

    #[test]
    fn non_composable_relation_rejected() {
        let text = format!("{CYCLE4}relation alpha*gamma\n");
        match parse_presentation(&text) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (11, 10)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_labels_carry_positions() {
        let e = parse_presentation("vertex a\narrow x: a -> z\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_presentation("vertex a\narrow x: a -> a\nrelation x*y\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, col: 12, .. }), "{e}");
    }

    #[test]
    fn coefficients_and_merging() {
        let text = "field F 7
vertex a b c
arrow x: a -> b
arrow y: b -> c
arrow z: a -> b
arrow w: b -> c
relation y*x - 3/2 * w*z + 2 w*z - 1/2*w*z
";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.field, FieldKind::Prime(7));
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].terms.len(), 1);
        assert_eq!(p.relations[0].display(&p.quiver), "y*x");
    }

    #[test]
    fn to_text_round_trips() {
        let text = "vertex a b c\narrow x: a -> b\narrow y: b -> c\narrow z: a -> b\narrow w: b -> c\nrelation y*x - 2 * w*z\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn short_relation_rejected() {
        let e = parse_presentation("vertex a\narrow x: a -> a\nrelation x\n").unwrap_err();
        assert!(e.to_string().contains("length at least 2"));
    }
}
