//! Bound quiver algebras `kQ/I`.
//!
//! Words are written left to right and traversed right to left: `a1*a2*...*ak`
//! means first `ak`, last `a1`.  A word is composable when
//! `source(a_i) == target(a_{i+1})`.

mod basis;
mod parse;

pub use basis::{canonical_modules, AlgebraBasis, CanonicalModules, DEFAULT_LENGTH_BOUND};
pub use parse::parse_presentation;

use num_rational::BigRational;
use serde::Serialize;

use crate::exactla::FieldKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        self.vertices.push(label.to_string());
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, label: &str, source: usize, target: usize) -> usize {
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.arrows.push(Arrow {
            label: label.to_string(),
            source,
            target,
        });
        self.arrows.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Same vertices, every arrow turned around.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = vec![];
            while let Some(v) = stack.pop() {
                members.push(v);
                for a in &self.arrows {
                    for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A path of the quiver; `arrows` in written order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn idempotent(v: usize) -> Self {
        PathWord {
            source: v,
            target: v,
            arrows: vec![],
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        PathWord {
            source: q.arrows[a].source,
            target: q.arrows[a].target,
            arrows: vec![a],
        }
    }

    /// `None` if the word is empty or not composable.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        let last = *arrows.last()?;
        for w in arrows.windows(2) {
            if q.arrows[w[0]].source != q.arrows[w[1]].target {
                return None;
            }
        }
        Some(PathWord {
            source: q.arrows[last].source,
            target: q.arrows[first].target,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other`: traverse `other` first.
    pub fn compose(&self, other: &PathWord) -> Option<PathWord> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    /// The same word read in the opposite quiver.
    pub fn reversed(&self) -> PathWord {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        PathWord {
            source: self.target,
            target: self.source,
            arrows,
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Deterministic order: length, then arrow labels, idempotents by vertex.
    pub fn sort_key(&self, q: &Quiver) -> (usize, Vec<String>, usize) {
        (
            self.len(),
            self.arrows.iter().map(|&a| q.arrows[a].label.clone()).collect(),
            self.source,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(BigRational, PathWord)>,
}

impl Relation {
    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        use num_traits::{One, Signed};
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&format!("{a} * "));
            }
            s.push_str(&p.display(q));
        }
        s
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: FieldKind,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, field: FieldKind) -> Self {
        AlgebraPresentation {
            quiver,
            relations: vec![],
            field,
        }
    }

    /// Every composable word of length two, as a monomial relation.
    pub fn radical_square_zero_relations(q: &Quiver) -> Vec<Relation> {
        use num_traits::One;
        let mut out = vec![];
        for a in 0..q.num_arrows() {
            for b in 0..q.num_arrows() {
                if let Some(p) = PathWord::from_arrows(q, vec![a, b]) {
                    out.push(Relation {
                        terms: vec![(BigRational::one(), p)],
                    });
                }
            }
        }
        out
    }

    pub fn opposite(&self) -> AlgebraPresentation {
        AlgebraPresentation {
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(Relation::reversed).collect(),
            field: self.field,
        }
    }

    /// Text in the algebra file format; parses back to an equal presentation.
    pub fn to_text(&self) -> String {
        let q = &self.quiver;
        let mut s = format!("field {}\n", self.field);
        for v in &q.vertices {
            s.push_str(&format!("vertex {v}\n"));
        }
        for a in &q.arrows {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.label, q.vertices[a.source], q.vertices[a.target]
            ));
        }
        for r in &self.relations {
            s.push_str(&format!("relation {}\n", r.display(q)));
        }
        s
    }
}
