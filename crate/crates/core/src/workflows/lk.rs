use std::collections::BTreeSet;
use std::sync::Arc;

use super::components::{minimal_primes, PrimeComponent};
use super::joinmeet::join_meet_ideal;
use super::report::{Check, Report};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, intersect, Ideal, MonomialIdeal};
use crate::lattice::{build_fixture, Fixture};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

struct Vars {
    ring: Arc<Ring>,
    x: Vec<usize>,
    y: Vec<usize>,
    z: usize,
}

impl Vars {
    fn new(ring: &Arc<Ring>, n: usize) -> Result<Self> {
        let x = (1..=n).map(|i| ring.var_index(&format!("x{i}"))).collect::<Result<_>>()?;
        let y = (1..=n).map(|i| ring.var_index(&format!("y{i}"))).collect::<Result<_>>()?;
        Ok(Vars { ring: ring.clone(), x, y, z: ring.var_index("z")? })
    }

    /// `x_i`, 1-based.
    fn x(&self, i: usize) -> usize {
        self.x[i - 1]
    }

    fn y(&self, i: usize) -> usize {
        self.y[i - 1]
    }

    fn mono(&self, vars: &[usize]) -> Monomial {
        let mut e = vec![0; self.ring.nvars()];
        for &v in vars {
            e[v] += 1;
        }
        Monomial::new(e)
    }

    fn var(&self, v: usize) -> Polynomial {
        Polynomial::variable(&self.ring, v)
    }

    fn diff(&self, a: usize, b: usize) -> Polynomial {
        Polynomial::binomial(&self.ring, self.mono(&[a]), self.mono(&[b]))
    }

    /// `x_i y_j - x_j y_i` for `lo <= i < j <= hi`.
    fn ladder_minors(&self, lo: usize, hi: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in lo..=hi {
            for j in i + 1..=hi {
                out.push(Polynomial::binomial(
                    &self.ring,
                    self.mono(&[self.x(i), self.y(j)]),
                    self.mono(&[self.x(j), self.y(i)]),
                ));
            }
        }
        out
    }

    fn text(&self, m: &Monomial) -> String {
        Polynomial::monomial(&self.ring, m.clone()).to_string()
    }
}

/// The minimal generators of the initial ideal of `I_{L_k}` under the native
/// degree reverse lexicographic order `x1 > ... > xn > y1 > ... > yn > z`.
fn expected_initial(v: &Vars, n: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(v.mono(&[v.x(j), v.y(i)]));
        }
    }
    for i in 1..k {
        out.push(v.mono(&[v.x(i), v.y(k + 1)]));
    }
    for j in k + 1..=n {
        out.push(v.mono(&[v.x(k), v.y(j)]));
    }
    for i in 1..k {
        for j in k + 2..=n {
            out.push(v.mono(&[v.x(i), v.x(k + 1), v.y(j)]));
            out.push(v.mono(&[v.x(i), v.y(k), v.y(j)]));
        }
    }
    for i in 1..k {
        out.push(v.mono(&[v.y(i), v.y(k), v.z]));
    }
    out.push(v.mono(&[v.x(k + 1), v.z]));
    out.push(v.mono(&[v.y(k), v.y(k), v.z]));
    out
}

fn compare_monomials(v: &Vars, got: &[Monomial], want: &[Monomial]) -> (bool, Option<String>) {
    let got: BTreeSet<&Monomial> = got.iter().collect();
    let want: BTreeSet<&Monomial> = want.iter().collect();
    if got == want {
        return (true, None);
    }
    let missing: Vec<String> = want.difference(&got).map(|m| v.text(m)).collect();
    let extra: Vec<String> = got.difference(&want).map(|m| v.text(m)).collect();
    (false, Some(format!("missing {missing:?}, unexpected {extra:?}")))
}

/// The seven minimal primes, named, with their quotient dimensions.
fn expected_primes(v: &Vars, base: &Ideal, n: usize, k: usize) -> Result<Vec<(&'static str, Ideal, usize)>> {
    let r = &v.ring;
    let vars = |list: Vec<usize>, extra: Vec<Polynomial>| {
        let mut gens: Vec<Polynomial> = list.into_iter().map(|x| v.var(x)).collect();
        gens.extend(extra);
        Ideal::new(r, gens)
    };
    let xs = |range: std::ops::RangeInclusive<usize>| range.map(|i| v.x(i)).collect::<Vec<_>>();
    let ys = |range: std::ops::RangeInclusive<usize>| range.map(|i| v.y(i)).collect::<Vec<_>>();
    let cat = |mut a: Vec<usize>, b: Vec<usize>| {
        a.extend(b);
        a
    };
    // Each quotient is a polynomial ring over a ladder ideal or the diamond
    // ideal; the ladder D(m) has m join-irreducibles, hence dimension m + 1.
    Ok(vec![
        ("P", base.with_generators(&[v.diff(v.z, v.x(k + 1)), v.diff(v.z, v.y(k))])?, n),
        ("P1", vars(cat(vec![v.z], xs(1..=n)), vec![])?, n),
        ("P1'", vars(cat(vec![v.z], ys(1..=n)), vec![])?, n),
        ("P2", vars(cat(cat(vec![v.z], xs(1..=k)), ys(1..=k)), v.ladder_minors(k + 1, n))?, n - k + 1),
        ("P2'", vars(cat(cat(vec![v.z], xs(k + 1..=n)), ys(k + 1..=n)), v.ladder_minors(1, k))?, k + 1),
        ("P3", vars(cat(xs(1..=n), ys(1..=k)), vec![])?, n - k + 1),
        ("P3'", vars(cat(ys(1..=n), xs(k + 1..=n)), vec![])?, k + 1),
    ])
}

/// Runs the structural checks for `L_k` and reports one check per stage.
pub fn lk_suite(n: usize, k: usize) -> Result<Report> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::BadParameters(format!("lk_suite needs 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let l = build_fixture(&Fixture::Lk { n, k })?;
    let jm = join_meet_ideal(&l)?;
    let v = Vars::new(&jm.ring, n)?;
    let i = &jm.ideal;
    let nv = v.ring.nvars();
    let mut report = Report::new(Fixture::Lk { n, k }.to_string());

    // (a)
    let ini = report.timed("a", || i.native_gb().map(|gb| gb.initial_ideal()))?;
    let (pass, witness) = compare_monomials(&v, ini.generators(), &expected_initial(&v, n, k));
    report.checks.push(Check::new("a: initial ideal generators", pass, witness));

    // (b)
    let with_z = i.with_generators(&[v.var(v.z)])?;
    let ini_z = report.timed("b", || with_z.native_gb().map(|gb| gb.initial_ideal()))?;
    let want = ini.sum(&MonomialIdeal::new(nv, vec![v.mono(&[v.z])]));
    let (pass, witness) = compare_monomials(&v, ini_z.generators(), want.generators());
    report.checks.push(Check::new("b: ini(I, z) = (ini I, z)", pass, witness));

    // (c)
    let with_lin = i.with_generators(&[v.diff(v.x(k + 1), v.y(k))])?;
    let ini_lin = report.timed("c", || with_lin.native_gb().map(|gb| gb.initial_ideal()))?;
    let mut extra = vec![v.mono(&[v.x(k + 1)])];
    extra.extend((1..=k).map(|j| v.mono(&[v.y(j), v.y(k)])));
    let want = ini.sum(&MonomialIdeal::new(nv, extra));
    let (pass, witness) = compare_monomials(&v, ini_lin.generators(), want.generators());
    report.checks.push(Check::new("c: ini(I, x_{k+1} - y_k)", pass, witness));

    // (d)
    let meet = report.timed("d", || intersect(&with_lin, &with_z))?;
    let pass = ideal_equal(&meet, i)?;
    let witness = (!pass).then(|| format!("{:?}", meet.canonical_strings().unwrap_or_default()));
    report.checks.push(Check::new("d: I = (I, x_{k+1} - y_k) ∩ (I, z)", pass, witness));

    // (e)
    let pass = ini_z.is_squarefree();
    let witness = (!pass).then(|| format!("{:?}", ini_z.to_strings(&v.ring)));
    report.checks.push(Check::new("e: ini(I, z) squarefree", pass, witness));

    // (f)
    let mut priority = vec![v.z];
    priority.extend(&v.x);
    priority.extend(&v.y);
    let lex = MonomialOrder::lex(priority)?;
    let ini_lex = report.timed("f", || with_lin.gb(&lex).map(|gb| gb.initial_ideal()))?;
    let pass = ini_lex.is_squarefree();
    let witness = (!pass).then(|| format!("{:?}", ini_lex.to_strings(&v.ring)));
    report.checks.push(Check::new("f: ini_lex(I, x_{k+1} - y_k) squarefree", pass, witness));

    // (g)
    let primes = report.timed("g", || minimal_primes(&l))?;
    let expected = expected_primes(&v, i, n, k)?;
    let mut matched: Vec<Option<&PrimeComponent>> = Vec::new();
    for (_, ideal, _) in &expected {
        let mut hit = None;
        for c in &primes.components {
            if ideal_equal(&c.ideal, ideal)? {
                hit = Some(c);
                break;
            }
        }
        matched.push(hit);
    }
    let unmatched: Vec<&str> = expected.iter().zip(&matched).filter(|(_, m)| m.is_none()).map(|(e, _)| e.0).collect();
    let pass = unmatched.is_empty() && primes.components.len() == expected.len();
    let witness = (!pass).then(|| format!("{} computed, unmatched {unmatched:?}", primes.components.len()));
    report.checks.push(Check::new("g: seven minimal primes", pass, witness));
    report.components = primes.components.iter().map(|c| c.report(&l)).collect::<Result<_>>()?;

    // (h)
    let mut wrong = Vec::new();
    for ((name, _, want), hit) in expected.iter().zip(&matched) {
        if let Some(c) = hit {
            if c.dim != *want {
                wrong.push(format!("{name}: {} (expected {want})", c.dim));
            }
        }
    }
    let pass = wrong.is_empty() && unmatched.is_empty();
    let witness = (!pass).then(|| wrong.join(", "));
    report.checks.push(Check::new("h: component dimensions", pass, witness));
    let dim = i.dim()?;
    report.checks.push(Check::new("h: quotient dimension n", dim == n, (dim != n).then(|| dim.to_string())));
    Ok(report)
}

/// Dimensions of `K[L_k]/P` for the primes named as in [`lk_suite`]'s stage (g).
pub fn lk_component_dims(n: usize, k: usize) -> Result<Vec<(String, usize)>> {
    let l = build_fixture(&Fixture::Lk { n, k })?;
    let jm = join_meet_ideal(&l)?;
    let v = Vars::new(&jm.ring, n)?;
    expected_primes(&v, &jm.ideal, n, k)?
        .into_iter()
        .map(|(name, ideal, _)| Ok((name.to_string(), ideal.dim()?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instance_passes() {
        let r = lk_suite(2, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failed());
        assert_eq!(r.components.len(), 7);
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(lk_suite(3, 3), Err(Error::BadParameters(_))));
        assert!(matches!(lk_suite(1, 0), Err(Error::BadParameters(_))));
    }
}
