//! Monomial orders.
//!
//! An order is a sequence of blocks. Each block compares the exponents of its
//! own variables, either lexicographically or by degree with the
//! reverse-lexicographic tie-break; the first block that distinguishes two
//! monomials decides. A single block over every variable gives the usual
//! `lex` and `degrevlex` orders with an arbitrary variable priority; two
//! blocks give the elimination orders used for intersections and saturation.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{Monomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub kind: OrderKind,
    /// Variables of the block, highest priority first.
    pub vars: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    blocks: Vec<OrderBlock>,
}

impl MonomialOrder {
    pub fn new(nvars: usize, blocks: Vec<OrderBlock>) -> Result<Self> {
        let mut seen = vec![false; nvars];
        for b in &blocks {
            for &v in &b.vars {
                if v >= nvars || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::BadOrder(format!("variable #{v} is out of range or repeated")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::BadOrder("every variable must appear exactly once".into()));
        }
        let blocks = blocks.into_iter().filter(|b| !b.vars.is_empty()).collect();
        Ok(MonomialOrder { nvars, blocks })
    }

    pub fn simple(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        MonomialOrder::new(n, vec![OrderBlock { kind, vars: priority }])
    }

    pub fn lex(priority: Vec<usize>) -> Result<Self> {
        MonomialOrder::simple(OrderKind::Lex, priority)
    }

    pub fn degrevlex(priority: Vec<usize>) -> Result<Self> {
        MonomialOrder::simple(OrderKind::DegRevLex, priority)
    }

    /// `degrevlex` with the ring's own variable order; used as the canonical order.
    pub fn native(nvars: usize) -> Self {
        MonomialOrder {
            nvars,
            blocks: vec![OrderBlock { kind: OrderKind::DegRevLex, vars: (0..nvars).collect() }],
        }
    }

    /// Lex on `drop` first, then `degrevlex` on the remaining variables in
    /// ring order. Every monomial involving `drop` beats every monomial that
    /// does not.
    pub fn elimination(nvars: usize, drop: &[usize]) -> Result<Self> {
        let rest: Vec<usize> = (0..nvars).filter(|v| !drop.contains(v)).collect();
        MonomialOrder::new(
            nvars,
            vec![
                OrderBlock { kind: OrderKind::Lex, vars: drop.to_vec() },
                OrderBlock { kind: OrderKind::DegRevLex, vars: rest },
            ],
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[OrderBlock] {
        &self.blocks
    }

    /// Kind of a single-block order; `None` for block orders.
    pub fn kind(&self) -> Option<OrderKind> {
        match self.blocks.as_slice() {
            [b] => Some(b.kind),
            [] => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }

    /// All variables, highest priority first.
    pub fn priority(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.vars.iter().copied()).collect()
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        for block in &self.blocks {
            let o = match block.kind {
                OrderKind::Lex => block
                    .vars
                    .iter()
                    .map(|&v| a[v].cmp(&b[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
                OrderKind::DegRevLex => {
                    let da: u64 = block.vars.iter().map(|&v| a[v] as u64).sum();
                    let db: u64 = block.vars.iter().map(|&v| b[v] as u64).sum();
                    da.cmp(&db).then_with(|| {
                        block
                            .vars
                            .iter()
                            .rev()
                            .map(|&v| b[v].cmp(&a[v]))
                            .find(|o| o.is_ne())
                            .unwrap_or(Ordering::Equal)
                    })
                }
            };
            if o.is_ne() {
                return o;
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    /// Checked comparison: both monomials must have this order's variable count.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars || b.nvars() != self.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(self.cmp(a, b))
    }

    /// Text form: `lex:a,b,c`, `degrevlex:a,b,c`, or for block orders
    /// `block(lex:t;degrevlex:a,b)`.
    pub fn descriptor(&self, ring: &Ring) -> String {
        let block = |b: &OrderBlock| {
            let names: Vec<&str> = b.vars.iter().map(|&v| ring.var_name(v)).collect();
            format!("{}:{}", b.kind, names.join(","))
        };
        match self.blocks.as_slice() {
            [b] => block(b),
            blocks => format!("block({})", blocks.iter().map(block).collect::<Vec<_>>().join(";")),
        }
    }

    /// Parses a descriptor; a bare `lex` or `degrevlex` uses the ring's variable order.
    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        let text = text.trim();
        let inner = text.strip_prefix("block(").and_then(|t| t.strip_suffix(')'));
        let parts: Vec<&str> = match inner {
            Some(inner) => inner.split(';').collect(),
            None => vec![text],
        };
        let mut blocks = Vec::new();
        for part in &parts {
            let (kind, list) = match part.split_once(':') {
                Some((k, l)) => (k.trim(), Some(l)),
                None => (part.trim(), None),
            };
            let kind = match kind.to_ascii_lowercase().as_str() {
                "lex" => OrderKind::Lex,
                "degrevlex" | "drl" | "grevlex" | "dp" => OrderKind::DegRevLex,
                other => return Err(Error::BadOrder(format!("unknown order kind `{other}`"))),
            };
            let vars = match list {
                None if parts.len() == 1 => (0..ring.nvars()).collect(),
                None => return Err(Error::BadOrder("block orders need explicit variable lists".into())),
                Some(l) => l
                    .split(',')
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .map(|s| ring.var_index(s).map_err(|_| Error::BadOrder(format!("unknown variable `{s}`"))))
                    .collect::<Result<Vec<_>>>()?,
            };
            blocks.push(OrderBlock { kind, vars });
        }
        MonomialOrder::new(ring.nvars(), blocks)
    }
}
