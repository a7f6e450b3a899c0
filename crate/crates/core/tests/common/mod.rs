#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use lattice_lab::lattice::{build_fixture, product, Fixture, Lattice};
use lattice_lab::poly::Coefficient;
use lattice_lab::{Field, Monomial, Polynomial, Ring};

/// Every named fixture with at most 12 elements, plus two products of chains.
pub fn small_corpus() -> Vec<(String, Lattice)> {
    let mut specs = vec![Fixture::Q, Fixture::N, Fixture::R, Fixture::M3, Fixture::N5];
    specs.extend((1..=5).map(Fixture::Chain));
    specs.extend((1..=6).map(Fixture::DivisorLadder));
    for n in 2..=5 {
        specs.extend((1..n).map(|k| Fixture::Lk { n, k }));
    }
    let mut out: Vec<(String, Lattice)> =
        specs.iter().map(|f| (f.to_string(), build_fixture(f).unwrap())).collect();
    let c2 = build_fixture(&Fixture::Chain(2)).unwrap();
    let c3 = build_fixture(&Fixture::Chain(3)).unwrap();
    out.push(("Chain:2 x Chain:3".into(), product(&c2, &c3).unwrap()));
    let cube = product(&product(&c2, &c2).unwrap(), &c2).unwrap();
    out.push(("Chain:2^3".into(), cube));
    out.retain(|(_, l)| l.len() <= 12);
    out
}

/// Distributive members of the corpus.
pub fn distributive_corpus() -> Vec<(String, Lattice)> {
    small_corpus()
        .into_iter()
        .filter(|(name, _)| name.starts_with("Chain") || name.starts_with("DivisorLadder"))
        .collect()
}

/// Subsets meeting `{a, b}` exactly when they meet `{a∧b, a∨b}`, by direct
/// search over all subsets and all pairs.
pub fn brute_force_admissible(l: &Lattice) -> Vec<Vec<usize>> {
    let n = l.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let inside = |x: usize| mask >> x & 1 == 1;
        let mut ok = true;
        for a in 0..n {
            for b in 0..n {
                if l.leq(a, b) || l.leq(b, a) {
                    continue;
                }
                if (inside(a) || inside(b)) != (inside(l.meet(a, b)) || inside(l.join(a, b))) {
                    ok = false;
                }
            }
        }
        if ok {
            out.push((0..n).filter(|&x| inside(x)).collect());
        }
    }
    out
}

pub fn ring(n: usize) -> Arc<Ring> {
    let names = ["x", "y", "z", "w", "u", "v"];
    Ring::new(names[..n].iter().map(|s| s.to_string()).collect(), Field::Rationals).unwrap()
}

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in monomials_of_degree(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

pub fn random_monomial(rng: &mut impl Rng, n: usize, d: u32) -> Monomial {
    let all = monomials_of_degree(n, d);
    Monomial::new(all[rng.gen_range(0..all.len())].clone())
}

/// A random homogeneous ideal: pure differences and the odd monomial.
pub fn random_binomial_ideal(rng: &mut impl Rng, r: &Arc<Ring>) -> Vec<Polynomial> {
    let n = r.nvars();
    let count = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    while gens.len() < count {
        let d = rng.gen_range(1..=3);
        let a = random_monomial(rng, n, d);
        if rng.gen_ratio(1, 6) {
            gens.push(Polynomial::monomial(r, a));
            continue;
        }
        let b = random_monomial(rng, n, d);
        if a != b {
            gens.push(Polynomial::binomial(r, a, b));
        }
    }
    gens
}

pub fn random_homogeneous(rng: &mut impl Rng, r: &Arc<Ring>, d: u32) -> Polynomial {
    let mut terms = Vec::new();
    for e in monomials_of_degree(r.nvars(), d) {
        if rng.gen_ratio(1, 3) {
            terms.push((r.field().from_i64(rng.gen_range(-3..=3)), Monomial::new(e)));
        }
    }
    Polynomial::from_terms(r, terms)
}

fn rational(c: &Coefficient) -> BigRational {
    match c {
        Coefficient::Rational(q) => q.clone(),
        other => panic!("oracle works over Q, got {other:?}"),
    }
}

type Row = BTreeMap<Vec<u32>, BigRational>;

fn row_of(f: &Polynomial) -> Row {
    f.terms().iter().map(|(c, m)| (m.exponents().to_vec(), rational(c))).collect()
}

fn reduce(mut row: Row, pivots: &BTreeMap<Vec<u32>, Row>) -> Row {
    while let Some(key) = row.keys().rev().find(|k| pivots.contains_key(*k)).cloned() {
        let c = row[&key].clone();
        for (k, v) in &pivots[&key] {
            let entry = row.entry(k.clone()).or_insert_with(BigRational::zero);
            *entry -= &c * v;
            if entry.is_zero() {
                row.remove(k);
            }
        }
    }
    row
}

/// Membership of a homogeneous `f` in the ideal generated by homogeneous
/// `gens`, by linear algebra on the degree-`deg f` component.
pub fn member_by_linear_algebra(f: &Polynomial, gens: &[Polynomial]) -> bool {
    if f.is_zero() {
        return true;
    }
    let r = f.ring();
    let d = f.total_degree().unwrap() as u32;
    let mut pivots: BTreeMap<Vec<u32>, Row> = BTreeMap::new();
    for g in gens {
        let gd = g.total_degree().unwrap() as u32;
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(r.nvars(), d - gd) {
            let row = reduce(row_of(&g.mul_monomial(&Monomial::new(m))), &pivots);
            let Some((lead, c)) = row.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) else { continue };
            let inv = c.recip();
            let normalized: Row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            // keep the echelon basis fully reduced on pivot columns
            for other in pivots.values_mut() {
                if let Some(c) = other.get(&lead).cloned() {
                    for (k, v) in &normalized {
                        let entry = other.entry(k.clone()).or_insert_with(BigRational::zero);
                        *entry -= &c * v;
                        if entry.is_zero() {
                            other.remove(k);
                        }
                    }
                }
            }
            pivots.insert(lead, normalized);
        }
    }
    reduce(row_of(f), &pivots).is_empty()
}

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn determinant(m: &IntMatrix) -> BigInt {
    // Laplace expansion; only used on small matrices
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: IntMatrix =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * determinant(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `k x k` minors.
pub fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: IntMatrix = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            g = g.gcd(&determinant(&sub));
        }
    }
    g.abs()
}
