//! One function per subcommand. Each delegates to a single library operation
//! and wraps the result in [`OutputRecord`]s.

use serde_json::{json, Value};

use zeta_exact::dirichlet::{character, characters, l1_odd_exact, l_neg, l_value_closed, DirichletCharacter};
use zeta_exact::exact::Rational;
use zeta_exact::hurwitz::{bernoulli_number, bernoulli_poly, hurwitz_poly, hurwitz_value, zeta_even, zeta_neg};
use zeta_exact::lerch::{lerch_neg, lerch_poly};
use zeta_exact::multi::{theorem5_literal, z_r_poly};
use zeta_exact::numeric::Precision;
use zeta_exact::verify::{run_suite, Suite, SuiteReport};
use zeta_exact::{Error, ExecMode, Result};

use crate::record::{encode_cyclotomic, encode_rational_polynomial, OutputRecord, Provenance};

pub fn zeta_neg_cmd(m: u64) -> Vec<OutputRecord> {
    vec![OutputRecord::rational(&zeta_neg(m), Provenance::new("zeta_neg", json!({ "m": m })))]
}

pub fn zeta_even_cmd(m: u64) -> Result<Vec<OutputRecord>> {
    if m == 0 {
        return Err(Error::InvalidArgument("zeta_even needs m >= 1".into()));
    }
    Ok(vec![OutputRecord::special_value(&zeta_even(m), Provenance::new("zeta_even", json!({ "m": m })))])
}

pub fn hurwitz_cmd(m: u64, alpha: Option<&Rational>) -> Vec<OutputRecord> {
    match alpha {
        Some(a) => {
            let p = Provenance::new("hurwitz_value", json!({ "m": m, "alpha": a.to_string() }));
            vec![OutputRecord::rational(&hurwitz_value(m, a), p)]
        }
        None => vec![OutputRecord::polynomial(&hurwitz_poly(m), Provenance::new("hurwitz_poly", json!({ "m": m })))],
    }
}

pub fn bernoulli_cmd(n: u64, poly: bool) -> Vec<OutputRecord> {
    if poly {
        vec![OutputRecord::polynomial(&bernoulli_poly(n), Provenance::new("bernoulli_poly", json!({ "n": n })))]
    } else {
        vec![OutputRecord::rational(&bernoulli_number(n), Provenance::new("bernoulli_number", json!({ "n": n })))]
    }
}

fn describe(chi: &DirichletCharacter) -> Value {
    let q = chi.modulus() as i64;
    let values: serde_json::Map<String, Value> =
        (1..q).filter(|&a| chi.exponent(a).is_some()).map(|a| (a.to_string(), encode_cyclotomic(&chi.value(a)))).collect();
    json!({
        "index": chi.index(),
        "label": chi.label(),
        "order": chi.order(),
        "parity": chi.parity().name(),
        "conductor": chi.conductor(),
        "primitive": chi.is_primitive(),
        "values": values,
    })
}

pub fn characters_cmd(q: u64) -> Result<Vec<OutputRecord>> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let table = characters(q);
    let text = table
        .iter()
        .map(|c| {
            format!(
                "{:>3}  {:<12} order {:<3} {:<4} conductor {:<3}{}",
                c.index(),
                c.label(),
                c.order(),
                c.parity().name(),
                c.conductor(),
                if c.is_primitive() { " primitive" } else { "" }
            )
            .trim_end()
            .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n");
    let payload = json!({ "modulus": q, "characters": table.iter().map(describe).collect::<Vec<_>>() });
    Ok(vec![OutputRecord::report(payload, text, Provenance::new("characters", json!({ "q": q })))])
}

fn lookup(q: u64, index: usize) -> Result<DirichletCharacter> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    character(q, index).ok_or_else(|| {
        Error::InvalidArgument(format!("modulus {q} has {} characters; index {index} is out of range", characters(q).len()))
    })
}

/// n >= 1: closed form c pi^n; n <= 0: the exact value L(n, chi).
pub fn lvalue_cmd(n: i64, q: u64, index: usize) -> Result<Vec<OutputRecord>> {
    let chi = lookup(q, index)?;
    let args = json!({ "n": n, "q": q, "index": index });
    if n <= 0 {
        let v = l_neg(n.unsigned_abs(), &chi)?;
        return Ok(vec![OutputRecord::cyclotomic(&v, Provenance::new("l_neg", args))]);
    }
    let v = l_value_closed(n as u64, &chi)?;
    Ok(vec![OutputRecord::special_value(&v, Provenance::new("l_value_closed", args))])
}

pub fn l1_cmd(q: u64, index: usize) -> Result<Vec<OutputRecord>> {
    let chi = lookup(q, index)?;
    let v = l1_odd_exact(&chi)?;
    Ok(vec![OutputRecord::special_value(&v, Provenance::new("l1_odd_exact", json!({ "q": q, "index": index })))])
}

pub fn lerch_cmd(lambda: &Rational, m: u64, poly: bool) -> Result<Vec<OutputRecord>> {
    let args = json!({ "lambda": lambda.to_string(), "m": m });
    Ok(vec![if poly {
        OutputRecord::cyc_polynomial(&lerch_poly(lambda, m)?, Provenance::new("lerch_poly", args))
    } else {
        OutputRecord::cyclotomic(&lerch_neg(lambda, m)?, Provenance::new("lerch_neg", args))
    }])
}

pub fn multi_cmd(r: u64, m: u64, literal: bool) -> Result<Vec<OutputRecord>> {
    if r < 2 {
        return Err(Error::InvalidArgument("r must be at least 2".into()));
    }
    let args = json!({ "r": r, "m": m });
    if !literal {
        return Ok(vec![OutputRecord::polynomial(&z_r_poly(r, m), Provenance::new("z_r_poly", args))]);
    }
    let rep = theorem5_literal(r, m);
    let text = format!("literal     {}\noracle      {}\ndiscrepancy {}", rep.literal, rep.oracle, rep.discrepancy);
    let payload = json!({
        "literal": encode_rational_polynomial(&rep.literal),
        "oracle": encode_rational_polynomial(&rep.oracle),
        "discrepancy": encode_rational_polynomial(&rep.discrepancy),
        "consistent": rep.is_consistent(),
    });
    Ok(vec![OutputRecord::report(payload, text, Provenance::new("theorem5_literal", args))])
}

fn suite_record(r: &SuiteReport) -> OutputRecord {
    let checks: Vec<Value> = r.checks.iter().map(|c| json!({ "id": c.id, "pass": c.pass, "detail": c.detail })).collect();
    let payload = json!({
        "suite": r.suite.name(),
        "digits": r.digits,
        "passed": r.passed(),
        "total": r.checks.len(),
        "checks": checks,
    });
    OutputRecord::report(payload, r.to_string(), Provenance::new("verify", json!({ "suite": r.suite.name(), "prec": r.digits })))
}

/// Runs the named suites; the flag is false when any check failed.
pub fn verify_cmd(suites: &[Suite], prec: Precision, mode: ExecMode) -> (Vec<OutputRecord>, bool) {
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, prec, mode)).collect();
    let ok = reports.iter().all(SuiteReport::all_pass);
    (reports.iter().map(suite_record).collect(), ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    ZetaNeg,
    ZetaEven,
    Bernoulli,
    HurwitzPoly,
}

/// Rows `(index, record)` for `table`.
pub fn table_cmd(kind: TableKind, max: u64) -> Vec<(u64, OutputRecord)> {
    match kind {
        TableKind::ZetaNeg => (0..=max).map(|m| (m, zeta_neg_cmd(m).remove(0))).collect(),
        TableKind::ZetaEven => (1..=max).map(|m| (m, zeta_even_cmd(m).unwrap().remove(0))).collect(),
        TableKind::Bernoulli => (0..=max).map(|n| (n, bernoulli_cmd(n, false).remove(0))).collect(),
        TableKind::HurwitzPoly => (0..=max).map(|m| (m, hurwitz_cmd(m, None).remove(0))).collect(),
    }
}
