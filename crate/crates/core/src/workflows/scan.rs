use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::joinmeet::join_meet_ideal;
use crate::error::Result;
use crate::groebner::{buchberger_with, GbOptions};
use crate::lattice::Lattice;
use crate::poly::{MonomialOrder, OrderKind, Polynomial, Ring};

/// Above this many variables, `Auto` samples instead of enumerating.
pub const FULL_ENUMERATION_LIMIT: usize = 8;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 20_100_503;

/// Which variable permutations to try.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Permutations {
    All,
    Sample { count: usize, seed: u64 },
    /// `All` up to [`FULL_ENUMERATION_LIMIT`] variables, else `DEFAULT_SAMPLES` samples.
    Auto { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanFamily {
    pub kinds: Vec<OrderKind>,
    pub permutations: Permutations,
    /// Stop at the first squarefree order.
    pub stop_at_first: bool,
    /// Keep one verdict per order in the report.
    pub record_verdicts: bool,
}

impl Default for ScanFamily {
    fn default() -> Self {
        ScanFamily {
            kinds: vec![OrderKind::Lex, OrderKind::DegRevLex],
            permutations: Permutations::Auto { seed: DEFAULT_SEED },
            stop_at_first: false,
            record_verdicts: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub order: String,
    pub squarefree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub family: String,
    pub orders_checked: u64,
    pub squarefree_orders: u64,
    pub any_squarefree: bool,
    /// The first squarefree order in scan order.
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<OrderVerdict>,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `rank`-th permutation of `0..n` in lexicographic order.
fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        out.push(pool.remove((rank / f) as usize));
        rank %= f;
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

struct Job<'a> {
    ring: &'a std::sync::Arc<Ring>,
    gens: &'a [Polynomial],
    opts: GbOptions,
}

impl Job<'_> {
    fn squarefree(&self, kind: OrderKind, priority: &[usize]) -> Result<bool> {
        let order = match kind {
            OrderKind::Lex => MonomialOrder::lex(priority.to_vec())?,
            OrderKind::DegRevLex => MonomialOrder::degrevlex(priority.to_vec())?,
        };
        let gb = buchberger_with(self.gens, self.ring, &order, &self.opts)?;
        Ok(gb.leading_monomials().iter().all(|m| m.is_squarefree()))
    }
}

fn descriptor(ring: &Ring, kind: OrderKind, priority: &[usize]) -> String {
    let names: Vec<&str> = priority.iter().map(|&i| ring.var_name(i)).collect();
    format!("{kind}:{}", names.join(","))
}

/// Per-chunk tally: (checked, squarefree, first squarefree index, verdicts).
type Tally = (u64, u64, Option<u64>, Vec<(u64, bool)>);

fn merge(mut a: Tally, b: Tally) -> Tally {
    a.0 += b.0;
    a.1 += b.1;
    a.2 = match (a.2, b.2) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    a.3.extend(b.3);
    a
}

const CHUNK: u64 = 2048;

pub fn squarefree_order_scan(l: &Lattice, family: &ScanFamily) -> Result<ScanReport> {
    let jm = join_meet_ideal(l)?;
    let ring = &jm.ring;
    let n = ring.nvars();
    let job = Job { ring, gens: jm.ideal.generators(), opts: GbOptions { chain_criterion: true, ..Default::default() } };
    let mode = match family.permutations {
        Permutations::Auto { seed } if n > FULL_ENUMERATION_LIMIT => Permutations::Sample { count: DEFAULT_SAMPLES, seed },
        Permutations::Auto { .. } => Permutations::All,
        p => p,
    };
    let kinds: Vec<String> = family.kinds.iter().map(|k| k.to_string()).collect();
    let family_text = match mode {
        Permutations::All => format!("{} x all {} permutations", kinds.join("+"), factorial(n)),
        Permutations::Sample { count, seed } => format!("{} x {count} sampled permutations (seed {seed})", kinds.join("+")),
        Permutations::Auto { .. } => unreachable!(),
    };

    let mut report = ScanReport {
        family: family_text,
        orders_checked: 0,
        squarefree_orders: 0,
        any_squarefree: false,
        witness: None,
        verdicts: Vec::new(),
    };
    let record = family.record_verdicts;
    for &kind in &family.kinds {
        // index -> permutation, over one kind
        let (total, sampled) = match mode {
            Permutations::All => (factorial(n), None),
            Permutations::Sample { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut base: Vec<usize> = (0..n).collect();
                let perms: Vec<Vec<usize>> = (0..count)
                    .map(|_| {
                        base.shuffle(&mut rng);
                        base.clone()
                    })
                    .collect();
                (count as u64, Some(perms))
            }
            Permutations::Auto { .. } => unreachable!(),
        };
        let run_chunk = |c: u64| -> Result<Tally> {
            let (start, end) = (c * CHUNK, ((c + 1) * CHUNK).min(total));
            let mut tally: Tally = (0, 0, None, Vec::new());
            let mut perm = match &sampled {
                None => unrank(n, start),
                Some(s) => s[start as usize].clone(),
            };
            for idx in start..end {
                if let Some(s) = &sampled {
                    perm.clone_from(&s[idx as usize]);
                }
                let sq = job.squarefree(kind, &perm)?;
                tally.0 += 1;
                if sq {
                    tally.1 += 1;
                    tally.2.get_or_insert(idx);
                    if family.stop_at_first {
                        if record {
                            tally.3.push((idx, sq));
                        }
                        break;
                    }
                }
                if record {
                    tally.3.push((idx, sq));
                }
                if sampled.is_none() {
                    next_permutation(&mut perm);
                }
            }
            Ok(tally)
        };
        let chunks = total.div_ceil(CHUNK);
        let tally = if family.stop_at_first {
            // chunks in order, so the witness is the first in scan order
            let mut acc: Tally = (0, 0, None, Vec::new());
            for c in 0..chunks {
                acc = merge(acc, run_chunk(c)?);
                if acc.2.is_some() {
                    break;
                }
            }
            acc
        } else {
            (0..chunks)
                .into_par_iter()
                .map(run_chunk)
                .try_reduce(|| (0, 0, None, Vec::new()), |a, b| Ok(merge(a, b)))?
        };
        let perm_at = |idx: u64| match &sampled {
            None => unrank(n, idx),
            Some(s) => s[idx as usize].clone(),
        };
        report.orders_checked += tally.0;
        report.squarefree_orders += tally.1;
        let mut verdicts = tally.3;
        verdicts.sort_unstable();
        report.verdicts.extend(
            verdicts.into_iter().map(|(idx, squarefree)| OrderVerdict { order: descriptor(ring, kind, &perm_at(idx)), squarefree }),
        );
        if report.witness.is_none() {
            report.witness = tally.2.map(|idx| descriptor(ring, kind, &perm_at(idx)));
        }
        if family.stop_at_first && report.witness.is_some() {
            break;
        }
    }
    report.any_squarefree = report.squarefree_orders > 0;
    Ok(report)
}
