//! Named verification suites.
//!
//! Each suite is a list of independent checks. Checks run through
//! [`ExecMode`] and the report is sorted by check id, so the output does not
//! depend on scheduling.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::dirichlet::{
    characters, l1_odd_exact, l1_odd_literal, l_neg, l_value_closed, power_sum,
    theorem2_corollary_residual, DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rat_int, Cyclotomic, Polynomial, Rational, RationalPolynomial};
use crate::exec::ExecMode;
use crate::hurwitz::{
    bernoulli_number, bernoulli_poly, chi4_odd_l, hurwitz_poly, hurwitz_poly_about, hurwitz_value,
    theorem2_residual, zeta_even, zeta_neg, Variant,
};
use crate::lerch::{lerch_poly, theorem4_recurrence_residual};
use crate::multi::{multiplicity_decomposition, theorem5_literal, z_r_oracle, z_r_poly};
use crate::numeric::bernoulli::b2k;
use crate::numeric::formula::hurwitz_formula_literal;
use crate::numeric::{
    conjecture_probe, functional_eq_residual, hurwitz_formula_eval, l_functional_residual,
    l_series_numeric, lemma3_residual, prop1_series, prop4_residual, theorem6_cross_check,
    zeta_numeric, Complex, ChainKind, Precision, ClassSumWeight, Real, Residual,
};
use crate::special_value::SpecialValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    ExactCore,
    Dirichlet,
    LerchMulti,
    Numeric,
    Errata,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::ExactCore,
        Suite::Dirichlet,
        Suite::LerchMulti,
        Suite::Numeric,
        Suite::Errata,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExactCore => "exact-core",
            Suite::Dirichlet => "dirichlet",
            Suite::LerchMulti => "lerch-multi",
            Suite::Numeric => "numeric",
            Suite::Errata => "errata",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub digits: u32,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}  {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.detail)?;
        }
        write!(
            f,
            "{}: {}/{} passed at {} digits",
            self.suite,
            self.passed(),
            self.checks.len(),
            self.digits
        )
    }
}

type Outcome = Result<(bool, String)>;
type Task = (String, Box<dyn Fn() -> Outcome + Send + Sync>);

fn task(id: impl Into<String>, f: impl Fn() -> Outcome + Send + Sync + 'static) -> Task {
    (id.into(), Box::new(f))
}

fn exact(ok: bool, what: impl Into<String>) -> Outcome {
    Ok((ok, what.into()))
}

fn residual(r: Residual) -> Outcome {
    Ok((r.pass, r.to_string()))
}

pub fn run_suite(suite: Suite, prec: Precision, mode: ExecMode) -> SuiteReport {
    let tasks = match suite {
        Suite::ExactCore => exact_core(),
        Suite::Dirichlet => dirichlet(),
        Suite::LerchMulti => lerch_multi(),
        Suite::Numeric => numeric(prec),
        Suite::Errata => errata(prec),
    };
    let mut checks = mode.map(tasks, |(id, f)| match f() {
        Ok((pass, detail)) => Check { id, pass, detail },
        Err(e) => Check {
            id,
            pass: false,
            detail: format!("error: {e}"),
        },
    });
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport {
        suite,
        digits: prec.get(),
        checks,
    }
}

pub fn run_all(prec: Precision, mode: ExecMode) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, prec, mode)).collect()
}

fn exact_core() -> Vec<Task> {
    let mut t = Vec::new();
    for k in (0..=60u64).step_by(10) {
        t.push(task(format!("zeta-neg/block-{k:02}"), move || {
            // Against tangent-number Bernoulli values: zeta(1-2j) = -B_{2j}/(2j).
            let mut ok = true;
            for m in k..(k + 10).min(61) {
                let want = if m == 0 {
                    rat(-1, 2)
                } else if m % 2 == 0 {
                    Rational::zero()
                } else {
                    -b2k(((m + 1) / 2) as usize) / rat_int(m + 1)
                };
                ok &= zeta_neg(m) == want;
            }
            exact(ok, format!("zeta(-m) for m in {k}..{}", (k + 9).min(60)))
        }));
    }
    for m in 1..=15u64 {
        t.push(task(format!("zeta-even/{m:02}"), move || {
            let z = zeta_even(m);
            let sign = if m % 2 == 0 { -1 } else { 1 };
            let want = b2k(m as usize) * rat(sign, 1) * crate::exact::rational::pow2(2 * m as i64 - 1)
                / rat_int(factorial(2 * m));
            let ok = z.pi_power as u64 == 2 * m && z.coeff.as_rational() == Some(want);
            exact(ok, format!("zeta({}) = {z}", 2 * m))
        }));
    }
    for m in 0..=20u64 {
        t.push(task(format!("shifted-expansion/{m:02}"), move || {
            let p = hurwitz_poly(m);
            let ok = Variant::ALL.iter().all(|&v| hurwitz_poly_about(m, v) == p);
            exact(ok, "variants I, II, III re-expand to zeta(-m, a)")
        }));
        t.push(task(format!("shift-residual/{m:02}"), move || {
            exact(theorem2_residual(m).is_zero(), "shift recurrence residual")
        }));
        t.push(task(format!("bernoulli-bridge/{m:02}"), move || {
            let n = m + 1;
            let ok = bernoulli_poly(n) == hurwitz_poly(m).scale_rational(&-rat_int(n))
                && bernoulli_number(n) == bernoulli_poly(n).eval(&Rational::one());
            exact(ok, format!("B_{n}(a) = -{n} zeta(-{m}, a)"))
        }));
    }
    t
}

fn primitive_nonprincipal(q: u64) -> Vec<DirichletCharacter> {
    characters(q)
        .iter()
        .filter(|c| c.is_primitive() && !c.is_principal())
        .cloned()
        .collect()
}

fn sv_eq(v: &SpecialValue, coeff: Cyclotomic, pi_power: u32) -> bool {
    v.pi_power == pi_power && v.coeff == coeff
}

fn dirichlet() -> Vec<Task> {
    let mut t = Vec::new();
    for q in 3..=12u64 {
        t.push(task(format!("character-residual/q{q:02}"), move || {
            let mut ok = true;
            for chi in characters(q).iter().filter(|c| !c.is_principal()) {
                for m in 0..=8 {
                    ok &= theorem2_corollary_residual(m, chi)?.is_zero();
                    ok &= l_neg(m, chi).is_ok();
                }
            }
            exact(ok, "character residual, m <= 8")
        }));
        t.push(task(format!("parity-vanishing/q{q:02}"), move || {
            let mut ok = true;
            for chi in primitive_nonprincipal(q) {
                for m in 1..=5u64 {
                    let k = if chi.is_even() { 2 * m } else { 2 * m - 1 };
                    ok &= l_neg(k, &chi)?.is_zero();
                }
            }
            exact(ok, "L(-2m, even) = L(1-2m, odd) = 0, m <= 5")
        }));
    }
    for q in 3..=24u64 {
        t.push(task(format!("gauss-norm/q{q:02}"), move || {
            let mut ok = true;
            for chi in primitive_nonprincipal(q) {
                let tau = chi.gauss_sum();
                ok &= (&tau * &tau.conj()).as_rational() == Some(rat_int(q));
            }
            exact(ok, "|tau|^2 = q")
        }));
    }
    let chi4 = || characters(4)[1].clone();
    t.push(task("closed/chi4-n1", move || {
        exact(sv_eq(&l_value_closed(1, &chi4())?, Cyclotomic::from_rational(rat(1, 4)), 1), "L(1, chi4) = pi/4")
    }));
    t.push(task("closed/chi4-n3", move || {
        exact(sv_eq(&l_value_closed(3, &chi4())?, Cyclotomic::from_rational(rat(1, 32)), 3), "L(3, chi4) = pi^3/32")
    }));
    t.push(task("closed/chi4-n5", move || {
        let v = l_value_closed(5, &chi4())?;
        exact(sv_eq(&v, Cyclotomic::from_rational(rat(5, 1536)), 5) && v == chi4_odd_l(2), "L(5, chi4) = 5 pi^5/1536")
    }));
    t.push(task("closed/quad5-n2", move || {
        let chi = characters(5)[2].clone();
        let want = chi.gauss_sum().scale(&rat(4, 125));
        exact(sv_eq(&l_value_closed(2, &chi)?, want, 2), "L(2, chi5) = 4 tau pi^2/125")
    }));
    t.push(task("closed/odd-l1-table", move || {
        let mut ok = true;
        for q in 3..=24u64 {
            for chi in primitive_nonprincipal(q).into_iter().filter(|c| c.is_odd()) {
                ok &= l1_odd_exact(&chi)? == l_value_closed(1, &chi)?;
            }
        }
        exact(ok, "L(1, odd chi) agrees between entry points, q <= 24")
    }));
    t.push(task("parity-obstruction", move || {
        let mut ok = true;
        for q in 3..=12u64 {
            for chi in primitive_nonprincipal(q) {
                let n = if chi.is_even() { 1 } else { 2 };
                ok &= matches!(l_value_closed(n, &chi), Err(Error::ParityObstruction { .. }));
            }
        }
        exact(ok, "mismatched parity is refused")
    }));
    t
}

fn lerch_multi() -> Vec<Task> {
    let mut t = Vec::new();
    for (p, q) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (5, 6)] {
        t.push(task(format!("lerch/{p}-{q}"), move || {
            let lambda = rat(p, q);
            let mut ok = true;
            for m in 0..=8u64 {
                ok &= lerch_poly(&lambda, m)?.degree() == Some(m as usize);
                ok &= theorem4_recurrence_residual(&lambda, m)?.is_zero();
            }
            exact(ok, "degree m and recurrence residual zero, m <= 8")
        }));
    }
    for r in 2..=5u64 {
        t.push(task(format!("multi/r{r}"), move || {
            let mut ok = true;
            for m in 0..=10u64 {
                let p = z_r_poly(r, m);
                ok &= p == z_r_oracle(r, m) && p.degree() == Some((m + r) as usize);
            }
            exact(ok, "z_r_poly = oracle, m <= 10")
        }));
        t.push(task(format!("multiplicity/r{r}"), move || {
            let d = multiplicity_decomposition(r);
            let poly = Polynomial::new(d.coeffs.clone());
            let ok = (1..=20u64).all(|n| poly.eval(&rat_int(n)) == rat_int(crate::exact::binomial(n + r - 1, r - 1)));
            exact(ok, "C(N+r-1, r-1) expansion")
        }));
    }
    t
}

fn real(x: f64, p: usize) -> Complex {
    Complex::from_f64(x, 0.0, p)
}

fn numeric(prec: Precision) -> Vec<Task> {
    let mut t = Vec::new();
    let p = prec.bits();
    for s in [-2.5, -1.0, -0.3] {
        for (a, b) in [(1, 4), (1, 2), (3, 4), (1, 1)] {
            t.push(task(format!("cross-route/s{s}-a{a}_{b}"), move || {
                let alpha = rat(a, b);
                let sc = real(s, p);
                let ac = Complex::from_rational(&alpha, p);
                let z1 = crate::numeric::hurwitz_numeric(&sc, &ac.re, prec)?;
                let z2 = prop1_series(&sc, &ac, 1 + (a / b) as u64, prec)?;
                let z3 = Complex::from_real(hurwitz_formula_eval(&sc.re, &alpha, prec)?);
                let bound = prec.tolerance(10);
                let d = [(&z1 - &z2).abs(), (&z1 - &z3).abs(), (&z2 - &z3).abs()];
                let worst = d.iter().cloned().fold(Real::zero(p), |m, x| m.max(x));
                let mut ok = worst <= bound;
                if a == b {
                    ok &= (&zeta_numeric(&sc, prec)? - &z1).abs() <= bound;
                }
                Ok((ok, format!("max pairwise gap {}", worst.to_string_digits(3))))
            }));
        }
    }
    for s in [-2.3, -0.5, 0.5, 2.0, 3.7] {
        t.push(task(format!("functional-eq/zeta/s{s}"), move || residual(functional_eq_residual(&real(s, p), prec)?)));
    }
    let points = [-1.5, -0.7, 0.3, 1.5, 2.0];
    for (q, idx) in [(5usize, 2usize), (4, 1), (7, 1)] {
        for s in points {
            t.push(task(format!("functional-eq/q{q}-{idx}/s{s}"), move || {
                let chi = characters(q as u64)[idx].clone();
                residual(l_functional_residual(&real(s, p), &chi, prec)?)
            }));
        }
    }
    t.push(task("derivative-chain/zeta-m1", move || residual(lemma3_residual(ChainKind::Zeta, 1, None, prec)?)));
    t.push(task("derivative-chain/zeta-m2", move || residual(lemma3_residual(ChainKind::Zeta, 2, None, prec)?)));
    t.push(task("derivative-chain/chi4-odd-m1", move || {
        residual(lemma3_residual(ChainKind::LOdd, 1, Some(&characters(4)[1]), prec)?)
    }));
    t.push(task("derivative-chain/chi5-even-m0", move || {
        residual(lemma3_residual(ChainKind::LEven, 0, Some(&characters(5)[2]), prec)?)
    }));
    t.push(task("derivative-chain/chi5-odd-m1", move || {
        residual(lemma3_residual(ChainKind::LOdd, 1, Some(&characters(5)[1]), prec)?)
    }));
    for (v, m, q) in [(ClassSumWeight::Sine, 1, 3), (ClassSumWeight::Sine, 1, 4), (ClassSumWeight::Sine, 2, 5), (ClassSumWeight::Cosine, 1, 6), (ClassSumWeight::Cosine, 2, 4)] {
        t.push(task(format!("class-sum/{v:?}-m{m}-q{q}"), move || residual(prop4_residual(v, m, q, prec)?)));
    }
    for q in [3u64, 4, 5, 7, 8, 12] {
        t.push(task(format!("l1/q{q:02}"), move || {
            let mut ok = true;
            let mut worst = Real::zero(p);
            for chi in primitive_nonprincipal(q) {
                let r = theorem6_cross_check(&chi, prec)?;
                ok &= r.pass;
                worst = worst.max(r.value.clone());
            }
            Ok((ok, format!("worst residual {}", worst.to_string_digits(3))))
        }));
    }
    for (label, q, idx, n) in [("chi4-n3", 4u64, 1usize, 3u64), ("chi4-n5", 4, 1, 5), ("quad5-n2", 5, 2, 2), ("quad8-n2", 8, 1, 2)] {
        t.push(task(format!("embed/{label}"), move || {
            let chi = characters(q)[idx].clone();
            let closed = l_value_closed(n, &chi)?.embed(prec);
            let series = l_series_numeric(&real(n as f64, p), &chi, 4, prec)?;
            residual(Residual::between(&closed, &series, prec.tolerance(10)))
        }));
    }
    for m in [1u64, 2] {
        t.push(task(format!("probe/m{m}"), move || {
            let r = conjecture_probe(m, prec, 1_000_000)?;
            Ok((
                r.consistent(),
                format!(
                    "ratio {}, nearest {} at {}; control {}",
                    r.target.value.to_string_digits(12),
                    r.target.best,
                    r.target.distance.to_string_digits(3),
                    r.control.best
                ),
            ))
        }));
    }
    t
}

fn errata(prec: Precision) -> Vec<Task> {
    let mut t = Vec::new();
    let p = prec.bits();
    t.push(task("l1-odd-literal", move || {
        // The literal odd form is -i times the true value; the series confirms which.
        let chi = characters(4)[1].clone();
        let lit = l1_odd_literal(&chi)?;
        let fixed = l1_odd_exact(&chi)?;
        let ratio = &lit.coeff * &fixed.coeff.inv()?;
        let series = l_series_numeric(&Complex::one(p), &chi, 4, prec)?;
        let bound = prec.tolerance(10);
        let lit_off = (&lit.embed(prec) - &series).abs() > bound;
        let fixed_on = (&fixed.embed(prec) - &series).abs() <= bound;
        let ok = ratio == -Cyclotomic::i() && lit_off && fixed_on;
        exact(ok, format!("literal/corrected = {ratio}; literal {lit} misses L(1, chi4)"))
    }));
    t.push(task("l1-odd-gauss-conjugate", move || {
        // For a complex odd character tau(chi) and tau(conj chi) differ.
        let chi = characters(5)[1].clone();
        let series = l_series_numeric(&Complex::one(p), &chi, 4, prec)?;
        let s1 = power_sum(1, &chi.conj()).scale(&rat(-1, 5));
        let with_tau = SpecialValue::new(&(&s1 * &chi.gauss_sum_inverse()?) * &Cyclotomic::i(), 1);
        let bound = prec.tolerance(10);
        let wrong = (&with_tau.embed(prec) - &series).abs() > bound;
        let right = (&l1_odd_exact(&chi)?.embed(prec) - &series).abs() <= bound;
        exact(wrong && right, "1/tau(chi) fails for the order-4 character mod 5, 1/tau(conj chi) holds")
    }));
    t.push(task("multi-literal", move || {
        let r = theorem5_literal(2, 0);
        let want = RationalPolynomial::new(vec![rat(-1, 2), rat(-1, 1)]);
        exact(r.discrepancy == want, format!("discrepancy {}", r.discrepancy))
    }));
    t.push(task("trig-series-literal", move || {
        let s = Real::from_i64(-2, p);
        let lit = hurwitz_formula_literal(&s, &rat(1, 4), prec)?;
        let target = Real::from_rational(&hurwitz_value(2, &rat(1, 4)), p);
        let gap = (&lit - &target).abs();
        let fixed = (&hurwitz_formula_eval(&s, &rat(1, 4), prec)? - &target).abs();
        Ok((
            gap > prec.tolerance(10) && fixed <= prec.tolerance(8),
            format!("literal form gives {} for zeta(-2, 1/4) = -1/64", lit.to_string_digits(12)),
        ))
    }));
    t.push(task("zeta-minus-one-sign", move || {
        let literal = RationalPolynomial::new(vec![zeta_neg(1), rat(-1, 2), rat(1, 2)]);
        let bridge = hurwitz_poly(1);
        let ok = literal != bridge && bridge == RationalPolynomial::new(vec![rat(-1, 12), rat(1, 2), rat(-1, 2)]);
        exact(ok, format!("literal {literal}, actual {bridge}"))
    }));
    t
}
