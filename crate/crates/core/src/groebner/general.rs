//! Buchberger's algorithm over arbitrary polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::GbOptions;
use crate::poly::{Coefficient, Monomial, MonomialOrder};

/// Terms sorted descending under the engine's order.
pub(crate) type Terms = Vec<(Coefficient, Monomial)>;

fn support_mask(m: &Monomial) -> u64 {
    m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (i, _)| acc | 1 << (i & 63))
}

/// `f - c * m * g`, both sorted under `order`.
fn sub_scaled(order: &MonomialOrder, f: &[(Coefficient, Monomial)], c: &Coefficient, m: &Monomial, g: &[(Coefficient, Monomial)]) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut it = g.iter().map(|(d, t)| (c.mul(d), t.mul(m))).peekable();
    while i < f.len() {
        let Some((d, t)) = it.peek() else { break };
        match order.cmp(&f[i].1, t) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((d.neg(), t.clone()));
                it.next();
            }
            Ordering::Equal => {
                let s = f[i].0.sub(d);
                if !s.is_zero() {
                    out.push((s, t.clone()));
                }
                i += 1;
                it.next();
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    out.extend(it.map(|(d, t)| (d.neg(), t)));
    out
}

fn make_monic(mut f: Terms) -> Terms {
    if let Some((c, _)) = f.first() {
        if !c.is_one() {
            let inv = c.inverse().expect("leading coefficient is nonzero");
            for (d, _) in &mut f {
                *d = d.mul(&inv);
            }
        }
    }
    f
}

pub(crate) struct Element {
    pub terms: Terms,
    mask: u64,
}

impl Element {
    fn new(terms: Terms) -> Self {
        let mask = support_mask(&terms[0].1);
        Element { terms, mask }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].1
    }
}

fn find_divisor<'a>(basis: &'a [Element], m: &Monomial) -> Option<&'a Element> {
    let mm = support_mask(m);
    basis.iter().find(|g| g.mask & !mm == 0 && g.lead().divides(m))
}

/// Reduces only the leading term until it is irreducible.
fn top_reduce(order: &MonomialOrder, basis: &[Element], mut f: Terms) -> Terms {
    while let Some((c, m)) = f.first() {
        match find_divisor(basis, m) {
            None => break,
            Some(g) => {
                let q = m.div(g.lead()).expect("divisor");
                let c = c.clone();
                f = sub_scaled(order, &f, &c, &q, &g.terms);
            }
        }
    }
    f
}

/// Full reduction: no term of the result is divisible by a leading monomial.
pub(crate) fn full_reduce(order: &MonomialOrder, basis: &[Element], mut f: Terms) -> Terms {
    let mut done = Vec::new();
    while !f.is_empty() {
        let (c, m) = &f[0];
        match find_divisor(basis, m) {
            None => {
                done.push(f.remove(0));
            }
            Some(g) => {
                let q = m.div(g.lead()).expect("divisor");
                let c = c.clone();
                f = sub_scaled(order, &f, &c, &q, &g.terms);
            }
        }
    }
    done
}

/// Wraps monic, order-sorted polynomials so that [`full_reduce`] can use them.
pub(crate) fn elements(basis: Vec<Terms>) -> Vec<Element> {
    basis.into_iter().filter(|t| !t.is_empty()).map(Element::new).collect()
}

struct Pair<'a> {
    deg: u64,
    lcm: Monomial,
    i: usize,
    j: usize,
    order: &'a MonomialOrder,
}

impl PartialEq for Pair<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other).is_eq()
    }
}
impl Eq for Pair<'_> {}
impl PartialOrd for Pair<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .deg
            .cmp(&self.deg)
            .then_with(|| self.order.cmp(&other.lcm, &self.lcm))
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    basis: Vec<Element>,
    pending: Vec<Vec<bool>>,
    heap: BinaryHeap<Pair<'a>>,
    chain: bool,
}

impl<'a> Engine<'a> {
    fn insert(&mut self, terms: Terms) {
        let h = Element::new(make_monic(terms));
        let j = self.basis.len();
        for row in &mut self.pending {
            row.push(false);
        }
        self.pending.push(vec![false; j + 1]);
        for i in 0..j {
            let g = &self.basis[i];
            if g.lead().coprime(h.lead()) {
                continue;
            }
            let l = g.lead().lcm(h.lead());
            self.pending[i][j] = true;
            self.heap.push(Pair { deg: l.degree(), lcm: l, i, j, order: self.order });
        }
        self.basis.push(h);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pending[a][b]
    }

    fn chain_skips(&self, p: &Pair<'_>) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            k != p.i && k != p.j && g.lead().divides(&p.lcm) && !self.is_pending(p.i, k) && !self.is_pending(p.j, k)
        })
    }

    fn spoly(&self, i: usize, j: usize, l: &Monomial) -> Terms {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let a = l.div(f.lead()).expect("lcm");
        let b = l.div(g.lead()).expect("lcm");
        let fa: Terms = f.terms.iter().map(|(c, t)| (c.clone(), t.mul(&a))).collect();
        let one = f.terms[0].0.field().one();
        sub_scaled(self.order, &fa, &one, &b, &g.terms)
    }
}

pub(crate) fn reduced_basis(input: Vec<Terms>, order: &MonomialOrder, opts: &GbOptions) -> Vec<Terms> {
    let mut e = Engine { order, basis: Vec::new(), pending: Vec::new(), heap: BinaryHeap::new(), chain: opts.chain_criterion };
    for f in input {
        let r = top_reduce(order, &e.basis, f);
        if !r.is_empty() {
            e.insert(r);
        }
    }
    while let Some(p) = e.heap.pop() {
        e.pending[p.i][p.j] = false;
        if e.chain && e.chain_skips(&p) {
            continue;
        }
        let s = e.spoly(p.i, p.j, &p.lcm);
        let r = top_reduce(order, &e.basis, s);
        if !r.is_empty() {
            e.insert(r);
        }
    }
    interreduce(order, e.basis)
}

/// Drops elements with a divisible leading monomial and fully reduces the rest.
fn interreduce(order: &MonomialOrder, basis: Vec<Element>) -> Vec<Terms> {
    let mut keep: Vec<Element> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < i));
        if !redundant {
            keep.push(Element { terms: g.terms.clone(), mask: g.mask });
        }
    }
    // A leading monomial never divides a smaller term, so each tail can be
    // reduced against the whole set, itself included.
    let mut out = Vec::with_capacity(keep.len());
    for g in &keep {
        let mut terms = g.terms.clone();
        let tail = full_reduce(order, &keep, terms.split_off(1));
        terms.extend(tail);
        out.push(terms);
    }
    out.sort_by(|a, b| order.cmp(&b[0].1, &a[0].1));
    out
}
