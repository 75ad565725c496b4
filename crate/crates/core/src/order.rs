//! Monomial term orders over exponent vectors.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// The order families the engine supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Lexicographic with `p_1 > p_2 > ... > p_k`.
    Lex,
    /// Degree reverse lexicographic with `p_1 > p_2 > ... > p_k`.
    DegRevLex,
    /// Degree reverse lexicographic with the given variable moved last
    /// (smallest).
    DegRevLexLast(usize),
}

/// A term order on monomials in `dim` variables.
///
/// Internally an order is a variable priority list plus, for the graded
/// kinds, positive variable weights. Only the saturation routine uses
/// non-unit weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    weights: Option<Vec<u64>>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, dim: usize) -> Self {
        let priority = match kind {
            OrderKind::Lex | OrderKind::DegRevLex => (0..dim).collect(),
            OrderKind::DegRevLexLast(v) => {
                let mut p: Vec<usize> = (0..dim).filter(|&i| i != v).collect();
                if v < dim {
                    p.push(v);
                }
                p
            }
        };
        Self {
            kind,
            priority,
            weights: None,
        }
    }

    pub fn degrevlex(dim: usize) -> Self {
        Self::new(OrderKind::DegRevLex, dim)
    }

    pub fn lex(dim: usize) -> Self {
        Self::new(OrderKind::Lex, dim)
    }

    pub fn degrevlex_last(dim: usize, var: usize) -> Self {
        Self::new(OrderKind::DegRevLexLast(var), dim)
    }

    /// Reverse lexicographic order refining a positive weight grading, with
    /// `var` smallest.
    pub(crate) fn weighted_revlex_last(weights: Vec<u64>, var: usize) -> Self {
        let mut order = Self::degrevlex_last(weights.len(), var);
        if weights.iter().any(|&w| w != 1) {
            order.weights = Some(weights);
        }
        order
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.priority.len()
    }

    /// Same order family on a different number of variables.
    pub fn with_dim(&self, dim: usize) -> Self {
        Self::new(self.kind, dim)
    }

    pub fn name(&self) -> String {
        match self.kind {
            OrderKind::Lex => String::from("lex"),
            OrderKind::DegRevLex => String::from("degrevlex"),
            OrderKind::DegRevLexLast(v) => format!("degrevlex-last:{}", v + 1),
        }
    }

    /// Parses the names produced by [`TermOrder::name`].
    pub fn parse(name: &str, dim: usize) -> Option<Self> {
        match name {
            "lex" => Some(Self::lex(dim)),
            "degrevlex" | "grevlex" => Some(Self::degrevlex(dim)),
            _ => {
                let v: usize = name.strip_prefix("degrevlex-last:")?.parse().ok()?;
                (1..=dim)
                    .contains(&v)
                    .then(|| Self::degrevlex_last(dim, v - 1))
            }
        }
    }

    /// Weighted total degree used by the graded kinds.
    pub fn degree(&self, m: &[u64]) -> u64 {
        match &self.weights {
            Some(w) => m.iter().zip(w).map(|(e, w)| e * w).sum(),
            None => m.iter().sum(),
        }
    }

    pub fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex | OrderKind::DegRevLexLast(_) => {
                match self.degree(a).cmp(&self.degree(b)) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &i in self.priority.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
