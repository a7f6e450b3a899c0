//! Buchberger's algorithm specialised to ideals generated by monomials and
//! pure differences `x^u - x^v`.
//!
//! That class is closed under S-polynomials and reduction, so every element
//! is stored as one or two exponent vectors and no coefficients are ever
//! touched. Exponents live in fixed-width arrays permuted so that position
//! `p` holds the variable of priority `p`; orders then act on contiguous
//! ranges.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::GbOptions;
use crate::poly::{Monomial, MonomialOrder, OrderKind};

type Exp<const N: usize> = [u16; N];

/// Largest exponent admitted on input; products above `u16::MAX` abort the kernel.
const INPUT_LIMIT: u32 = 4096;

/// Input element: `lead - tail`, or a monomial when `tail` is `None`.
pub(crate) type RawBinomial = (Monomial, Option<Monomial>);

struct KOrder {
    blocks: Vec<(OrderKind, usize, usize)>,
}

impl KOrder {
    fn new(order: &MonomialOrder) -> Self {
        let mut start = 0;
        let blocks = order
            .blocks()
            .iter()
            .map(|b| {
                let r = (b.kind, start, start + b.vars.len());
                start += b.vars.len();
                r
            })
            .collect();
        KOrder { blocks }
    }

    #[inline]
    fn cmp<const N: usize>(&self, a: &Exp<N>, b: &Exp<N>) -> Ordering {
        for &(kind, lo, hi) in &self.blocks {
            let o = match kind {
                OrderKind::Lex => a[lo..hi].cmp(&b[lo..hi]),
                OrderKind::DegRevLex => {
                    let da: u32 = a[lo..hi].iter().map(|&x| x as u32).sum();
                    let db: u32 = b[lo..hi].iter().map(|&x| x as u32).sum();
                    da.cmp(&db).then_with(|| {
                        (lo..hi).rev().map(|p| b[p].cmp(&a[p])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
                    })
                }
            };
            if o.is_ne() {
                return o;
            }
        }
        Ordering::Equal
    }
}

#[derive(Clone, Copy)]
struct Bin<const N: usize> {
    lead: Exp<N>,
    tail: Option<Exp<N>>,
    mask: u64,
}

#[inline]
fn mask<const N: usize>(e: &Exp<N>) -> u64 {
    let mut m = 0u64;
    for (p, &x) in e.iter().enumerate() {
        if x > 0 {
            m |= 1 << (p & 63);
        }
    }
    m
}

#[inline]
fn divides<const N: usize>(a: &Exp<N>, ma: u64, b: &Exp<N>, mb: u64) -> bool {
    ma & !mb == 0 && a.iter().zip(b).all(|(x, y)| x <= y)
}

struct Overflow;

#[inline]
fn shift<const N: usize>(e: &Exp<N>, minus: &Exp<N>, plus: &Exp<N>) -> Result<Exp<N>, Overflow> {
    let mut out = [0u16; N];
    for p in 0..N {
        out[p] = (e[p] - minus[p]).checked_add(plus[p]).ok_or(Overflow)?;
    }
    Ok(out)
}

#[inline]
fn lcm<const N: usize>(a: &Exp<N>, b: &Exp<N>) -> Exp<N> {
    let mut out = [0u16; N];
    for p in 0..N {
        out[p] = a[p].max(b[p]);
    }
    out
}

fn degree<const N: usize>(e: &Exp<N>) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl<const N: usize> Bin<N> {
    /// `x^a - x^b` with the larger term first; `None` when they cancel.
    fn from_terms(ord: &KOrder, a: Option<Exp<N>>, b: Option<Exp<N>>) -> Option<Self> {
        let (lead, tail) = match (a, b) {
            (None, None) => return None,
            (Some(a), None) | (None, Some(a)) => (a, None),
            (Some(a), Some(b)) => match ord.cmp(&a, &b) {
                Ordering::Equal => return None,
                Ordering::Greater => (a, Some(b)),
                Ordering::Less => (b, Some(a)),
            },
        };
        Some(Bin { lead, tail, mask: mask(&lead) })
    }
}

struct Pair<'a, const N: usize> {
    deg: u32,
    lcm: Exp<N>,
    i: usize,
    j: usize,
    ord: &'a KOrder,
}

impl<const N: usize> PartialEq for Pair<'_, N> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other).is_eq()
    }
}
impl<const N: usize> Eq for Pair<'_, N> {}
impl<const N: usize> PartialOrd for Pair<'_, N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<const N: usize> Ord for Pair<'_, N> {
    // Reversed so that the max-heap pops the smallest lcm.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .deg
            .cmp(&self.deg)
            .then_with(|| self.ord.cmp(&other.lcm, &self.lcm))
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

struct Engine<'a, const N: usize> {
    ord: &'a KOrder,
    basis: Vec<Bin<N>>,
    /// `pending[i][j]` for `i < j`: the pair is still queued.
    pending: Vec<Vec<bool>>,
    heap: BinaryHeap<Pair<'a, N>>,
    chain: bool,
}

impl<'a, const N: usize> Engine<'a, N> {
    fn reduce(&self, mut f: Bin<N>) -> Result<Option<Bin<N>>, Overflow> {
        'outer: loop {
            for g in &self.basis {
                if divides(&g.lead, g.mask, &f.lead, f.mask) {
                    let moved = match g.tail {
                        None => None,
                        Some(t) => Some(shift(&f.lead, &g.lead, &t)?),
                    };
                    match Bin::from_terms(self.ord, moved, f.tail) {
                        None => return Ok(None),
                        Some(h) => {
                            f = h;
                            continue 'outer;
                        }
                    }
                }
            }
            return Ok(Some(f));
        }
    }

    fn insert(&mut self, h: Bin<N>) {
        let j = self.basis.len();
        for row in &mut self.pending {
            row.push(false);
        }
        self.pending.push(vec![false; j + 1]);
        for i in 0..j {
            let g = &self.basis[i];
            if g.mask & h.mask == 0 {
                continue;
            }
            let l = lcm(&g.lead, &h.lead);
            self.pending[i][j] = true;
            self.heap.push(Pair { deg: degree(&l), lcm: l, i, j, ord: self.ord });
        }
        self.basis.push(h);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pending[a][b]
    }

    fn chain_skips(&self, p: &Pair<'_, N>) -> bool {
        let lm = mask(&p.lcm);
        self.basis.iter().enumerate().any(|(k, g)| {
            k != p.i
                && k != p.j
                && divides(&g.lead, g.mask, &p.lcm, lm)
                && !self.is_pending(p.i, k)
                && !self.is_pending(p.j, k)
        })
    }

    fn spoly(&self, i: usize, j: usize, l: &Exp<N>) -> Result<Option<Bin<N>>, Overflow> {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let a = match f.tail {
            Some(t) => Some(shift(l, &f.lead, &t)?),
            None => None,
        };
        let b = match g.tail {
            Some(t) => Some(shift(l, &g.lead, &t)?),
            None => None,
        };
        Ok(Bin::from_terms(self.ord, a, b))
    }

    fn run(&mut self, input: Vec<Bin<N>>) -> Result<(), Overflow> {
        for f in input {
            if let Some(h) = self.reduce(f)? {
                self.insert(h);
            }
        }
        while let Some(p) = self.heap.pop() {
            self.pending[p.i][p.j] = false;
            if self.chain && self.chain_skips(&p) {
                continue;
            }
            if let Some(s) = self.spoly(p.i, p.j, &p.lcm)? {
                if let Some(h) = self.reduce(s)? {
                    self.insert(h);
                }
            }
        }
        Ok(())
    }

    /// Minimal, tail-reduced basis sorted by descending leading monomial.
    fn reduced(self) -> Result<Vec<Bin<N>>, Overflow> {
        let b = &self.basis;
        let mut keep: Vec<Bin<N>> = Vec::new();
        for (i, g) in b.iter().enumerate() {
            let redundant = b.iter().enumerate().any(|(k, h)| {
                k != i && divides(&h.lead, h.mask, &g.lead, g.mask) && (h.lead != g.lead || k < i)
            });
            if !redundant {
                keep.push(*g);
            }
        }
        let leads: Vec<Bin<N>> = keep.clone();
        for g in &mut keep {
            'outer: while let Some(mut t) = g.tail {
                let tm = mask(&t);
                for h in &leads {
                    if divides(&h.lead, h.mask, &t, tm) {
                        match h.tail {
                            None => g.tail = None,
                            Some(ht) => {
                                t = shift(&t, &h.lead, &ht)?;
                                g.tail = Some(t);
                            }
                        }
                        continue 'outer;
                    }
                }
                break;
            }
        }
        keep.sort_by(|a, b| self.ord.cmp(&b.lead, &a.lead));
        Ok(keep)
    }
}

/// Reduced Groebner basis of a monomial/pure-difference input, or `None`
/// if the input is outside the kernel's range (too many variables or
/// exponents that would overflow).
pub(crate) fn reduced_basis(
    input: &[RawBinomial],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Option<Vec<RawBinomial>> {
    let n = order.nvars();
    let too_big = input.iter().any(|(a, b)| {
        a.exponents().iter().chain(b.iter().flat_map(|m| m.exponents())).any(|&e| e > INPUT_LIMIT)
    });
    if too_big {
        return None;
    }
    match n {
        0..=8 => run::<8>(input, order, opts),
        9..=16 => run::<16>(input, order, opts),
        17..=32 => run::<32>(input, order, opts),
        33..=64 => run::<64>(input, order, opts),
        _ => None,
    }
}

fn run<const N: usize>(input: &[RawBinomial], order: &MonomialOrder, opts: &GbOptions) -> Option<Vec<RawBinomial>> {
    let prio = order.priority();
    let nvars = order.nvars();
    let ord = KOrder::new(order);
    let to_exp = |m: &Monomial| {
        let mut e = [0u16; N];
        for (p, &v) in prio.iter().enumerate() {
            e[p] = m.exponents()[v] as u16;
        }
        e
    };
    let from_exp = |e: &Exp<N>| {
        let mut x = vec![0u32; nvars];
        for (p, &v) in prio.iter().enumerate() {
            x[v] = e[p] as u32;
        }
        Monomial::new(x)
    };
    let bins: Vec<Bin<N>> = input
        .iter()
        .filter_map(|(a, b)| Bin::from_terms(&ord, Some(to_exp(a)), b.as_ref().map(to_exp)))
        .collect();
    let mut engine = Engine { ord: &ord, basis: Vec::new(), pending: Vec::new(), heap: BinaryHeap::new(), chain: opts.chain_criterion };
    engine.run(bins).ok()?;
    let out = engine.reduced().ok()?;
    Some(out.iter().map(|g| (from_exp(&g.lead), g.tail.as_ref().map(from_exp))).collect())
}
