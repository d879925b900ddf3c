//! The subcommands, as functions from parsed arguments to output text.

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gcdcore::{decomposition_identity, integer_gcd_bridge_big, shifted_ratio};
use crate::heights::height_rational;
use crate::laurent::{monomial_height_bound, Function, LaurentPoly2, MonomialSet};
use crate::logcmp::ln_uint_f64;
use crate::proofscope::{build_point, choose_params, hp_bound_check, shifted_form, shifted_form_closed, verify_chain};
use crate::qplaces::{fmt_rational, product_formula_check, rpow, PlaceSet, Rational};
use crate::subtori::{
    bounded_candidates, collision_candidates, refine_translates, scaled_translates, scan,
    scan_points, CandidateSet, Classification,
};
use crate::sunits::{dependence, MultiplicativeRelation, SUnit};

use super::config::ValidConfig;
use super::parse::{parse_ast, parse_function};

/// Process exit status for a command outcome.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_CONFIG,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub warnings: Vec<String>,
    pub exit: i32,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput { text, warnings: Vec::new(), exit: EXIT_OK }
    }
}

/// Formats a float column value with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 csv"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Rows `n, gcd(a^n - 1, b^n - 1), ln(gcd)/n` for `n = 1..=n_max`.
pub fn gcd_growth(a: &BigUint, b: &BigUint, n_max: u32) -> Result<CommandOutput> {
    let two = BigUint::from(2u32);
    if *a < two || *b < two {
        return Err(Error::InvalidParameter("a and b must be at least 2".into()));
    }
    let mut warnings = Vec::new();
    let ua = SUnit::from_rational_any(&Rational::from_integer(a.clone().into()))?;
    let ub = SUnit::from_rational_any(&Rational::from_integer(b.clone().into()))?;
    if let Some(rel) = dependence(&ua, &ub) {
        warnings.push(format!("{a} and {b} are multiplicatively dependent ({rel})"));
    }
    let mut w = csv_writer();
    w.write_record(["n", "gcd", "log_gcd_over_n_f64"]).map_err(csv_err)?;
    let (mut an, mut bn) = (BigUint::one(), BigUint::one());
    for n in 1..=n_max {
        an *= a;
        bn *= b;
        let g = (&an - 1u32).gcd(&(&bn - 1u32));
        let l = ln_uint_f64(&g) / n as f64;
        w.write_record([n.to_string(), g.to_string(), fmt_f64(l)]).map_err(csv_err)?;
    }
    Ok(CommandOutput { text: finish_csv(w)?, warnings, exit: EXIT_OK })
}

/// Heights of `(u-1)/(v-1)` against `h(1:u:v)` over the scan box, skipping
/// `u = 1` or `v = 1`. The skip count goes on a trailing `#` line.
pub fn ratio_scan(cfg: &ValidConfig) -> Result<CommandOutput> {
    let one = Rational::one();
    let mut w = csv_writer();
    w.write_record([
        "u",
        "v",
        "H_ratio",
        "H_1uv",
        "h_ratio_num_f64",
        "h_1uv_f64",
        "ratio_f64",
        "dependent",
        "relation_p",
        "relation_q",
    ])
    .map_err(csv_err)?;
    let mut skipped = 0u64;
    for (u, v) in scan_points(&cfg.s, cfg.config.exponent_bound, cfg.config.signs) {
        let (uv, vv) = (u.value(), v.value());
        if uv == one || vv == one {
            skipped += 1;
            continue;
        }
        let r = shifted_ratio(&uv, &vv)?;
        let (p, q) = match &r.relation {
            Some(rel) => (rel.p.to_string(), rel.q.to_string()),
            None => (String::new(), String::new()),
        };
        w.write_record([
            fmt_rational(&uv),
            fmt_rational(&vv),
            fmt_rational(r.height_ratio.value()),
            fmt_rational(r.height_1uv.value()),
            fmt_f64(r.height_ratio.ln()),
            fmt_f64(r.height_1uv.ln()),
            r.ratio.map(fmt_f64).unwrap_or_default(),
            r.dependent().to_string(),
            p,
            q,
        ])
        .map_err(csv_err)?;
    }
    let mut text = finish_csv(w)?;
    text.push_str(&format!("# skipped={skipped}\n"));
    Ok(CommandOutput::ok(text))
}

fn relation_json(r: &MultiplicativeRelation) -> Value {
    json!({"p": r.p, "q": r.q, "w": fmt_rational(&r.w)})
}

pub fn candidates_json(c: &CandidateSet) -> Value {
    Value::Array(
        c.candidates()
            .iter()
            .map(|c| {
                let mut v = relation_json(&c.relation);
                v["provenance"] = serde_json::to_value(&c.provenance).expect("serializable");
                v
            })
            .collect(),
    )
}

/// Runs a scan and reports parameters, candidates, solutions with their
/// classification, and skip counts. Undecided comparisons set exit code 3.
pub fn exceptional_scan(cfg: &ValidConfig) -> Result<CommandOutput> {
    let spec = cfg.scan_spec()?;
    let out = scan(&spec)?;
    let c = &cfg.config;
    let function = match &c.function {
        Some(f) => Value::String(parse_ast(f)?.to_string()),
        None => Value::Null,
    };
    let solutions: Vec<Value> = out
        .solutions
        .iter()
        .map(|s| {
            let relation = match &s.class {
                Classification::OnCandidate(r) | Classification::DependentSporadic(r) => relation_json(r),
                Classification::Independent => Value::Null,
            };
            json!({
                "u": s.u.to_string(),
                "v": s.v.to_string(),
                "lhs": s.lhs.to_string(),
                "rhs": s.rhs.to_string(),
                "lhs_f64": s.lhs.to_f64(),
                "rhs_f64": s.rhs.to_f64(),
                "class": s.class.label(),
                "relation": relation,
            })
        })
        .collect();
    let report = json!({
        "params": {
            "S": cfg.s.to_string(),
            "primes": c.primes,
            "exponent_bound": c.exponent_bound,
            "epsilon": fmt_rational(&cfg.epsilon),
            "inequality": cfg.kind.name(),
            "function": function,
            "signs": c.signs,
            "precision_bits": c.precision_bits,
            "points_tested": out.points_tested,
        },
        "candidates": candidates_json(&out.candidates),
        "solutions": solutions,
        "skipped": {
            "poles": out.skipped.poles,
            "zeros": out.skipped.zeros,
            "undecided": out.skipped.undecided,
        },
        "undecided_points": out.undecided_points.iter().map(|(u, v)| json!([u.to_string(), v.to_string()])).collect::<Vec<_>>(),
    });
    let mut o = CommandOutput::ok(serde_json::to_string_pretty(&report).expect("json") + "\n");
    if out.skipped.undecided > 0 {
        o.warnings.push(format!("{} comparisons undecided", out.skipped.undecided));
        o.exit = EXIT_UNDECIDED;
    }
    Ok(o)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateMode {
    Collision { function: String },
    Bounded { epsilon: Rational },
    Scaled { theta: Rational, eta: Rational, epsilon: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Candidate relations for one generator, sorted and deduplicated. The
/// collision mode also lists translates on which two colliding terms
/// cancel.
pub fn candidates(mode: &CandidateMode, format: Format) -> Result<CommandOutput> {
    let (set, refinements) = match mode {
        CandidateMode::Collision { function } => {
            let f = parse_function(function)?;
            let set = collision_candidates(&f.monomials());
            let polys: Vec<(&str, LaurentPoly2)> = match &f {
                Function::Laurent(p) => vec![("function", p.clone())],
                Function::Rational(r) => {
                    vec![("numerator", r.numerator().clone()), ("denominator", r.denominator().clone())]
                }
            };
            let mut refs = Vec::new();
            for c in set.candidates() {
                for (part, p) in &polys {
                    for t in refine_translates(p, c.relation.p, c.relation.q) {
                        let mut v = relation_json(&t.relation);
                        v["wbar"] = Value::String(fmt_rational(&t.wbar));
                        v["degree"] = json!(t.degree);
                        v["part"] = json!(part);
                        refs.push(v);
                    }
                }
            }
            (set, Some(refs))
        }
        CandidateMode::Bounded { epsilon } => (bounded_candidates(epsilon)?, None),
        CandidateMode::Scaled { theta, eta, epsilon } => (scaled_translates(theta, eta, epsilon)?, None),
    };
    let text = match format {
        Format::Json => {
            let mut v = json!({ "candidates": candidates_json(&set) });
            if let Some(r) = refinements {
                v["refinements"] = Value::Array(r);
            }
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["p", "q", "w", "provenance"]).map_err(csv_err)?;
            for c in set.candidates() {
                let prov = serde_json::to_string(&c.provenance).expect("json");
                w.write_record([c.relation.p.to_string(), c.relation.q.to_string(), fmt_rational(&c.relation.w), prov])
                    .map_err(csv_err)?;
            }
            finish_csv(w)?
        }
    };
    Ok(CommandOutput::ok(text))
}

/// Parameters, hypotheses and every step of the double-product chain at
/// `(u, v)`.
pub fn proof_trace(u: &Rational, v: &Rational, epsilon: &Rational, s: &PlaceSet, format: Format) -> Result<CommandOutput> {
    let params = choose_params(epsilon)?;
    let ledger = verify_chain(u, v, &params, s)?;
    let hp = hp_bound_check(&ledger.u, &ledger.v, params.k, params.h)?;
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&ledger).expect("json");
            v["height_bound"] = serde_json::to_value(&hp).expect("json");
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Csv => {
            let mut t = ledger.to_string();
            t.push_str(&format!(
                "height_bound: preconditions={} H(P)<=H(u)^k H(v)^h H(1-v)={} <=2H(u)^k H(v)^(h+1)={} <=H(v)^(h+k+2)={}\n",
                hp.preconditions, hp.first, hp.second, hp.third
            ));
            t
        }
    };
    let mut o = CommandOutput::ok(text);
    if ledger.steps.iter().any(|s| s.status == crate::proofscope::StepStatus::Undecided) {
        o.exit = EXIT_UNDECIDED;
    }
    if ledger.steps.iter().any(|s| s.status == crate::proofscope::StepStatus::Fail) {
        o.warnings.push("a step of the chain failed".into());
        o.exit = EXIT_INVARIANT;
    }
    Ok(o)
}

fn random_rational(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    let n = rng.gen_range(-max..=max);
    let d = rng.gen_range(1..=max);
    Rational::new(n.into(), d.into())
}

fn random_s_unit(rng: &mut ChaCha8Rng, primes: &[u64], bound: i64) -> Rational {
    let mut x = Rational::one();
    for &p in primes {
        x *= rpow(&Rational::from_integer(p.into()), rng.gen_range(-bound..=bound));
    }
    if rng.gen_bool(0.5) {
        -x
    } else {
        x
    }
}

/// Runs the exact identities on seeded random inputs. Exit code 4 if any
/// fails.
pub fn selfcheck(seed: u64) -> Result<CommandOutput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut report = |name: &str, n: usize, failures: usize| {
        all_ok &= failures == 0;
        lines.push(format!("{name:<28} {} ({n} checks, {failures} failures)", if failures == 0 { "ok" } else { "FAIL" }));
    };

    let mut fails = 0;
    for _ in 0..200 {
        let mut x = random_rational(&mut rng, 1_000_000_000);
        if x == Rational::from_integer(0.into()) {
            x = Rational::one();
        }
        fails += usize::from(!product_formula_check(&x)?.holds);
    }
    report("product_formula", 200, fails);

    let mut fails = 0;
    for _ in 0..200 {
        let a = Rational::from_integer(rng.gen_range(1..1_000_000_000_000i64).into());
        let b = Rational::from_integer(rng.gen_range(1..1_000_000_000_000i64).into());
        fails += usize::from(!integer_gcd_bridge_big(&a, &b)?.equal);
    }
    report("gcd_bridge", 200, fails);

    let f = parse_function("(X - 1)/(Y - 1)")?;
    let (p, q) = f.as_fraction();
    let mut fails = 0;
    let mut n = 0;
    for _ in 0..200 {
        let u = random_s_unit(&mut rng, &[2, 3, 5], 10);
        let v = random_s_unit(&mut rng, &[2, 3, 5], 10);
        match decomposition_identity(&p, &q, &u, &v) {
            Ok(d) => {
                n += 1;
                fails += usize::from(!d.holds);
            }
            Err(Error::CommonZero) => {}
            Err(e) => return Err(e),
        }
    }
    report("decomposition_identity", n, fails);

    let mut fails = 0;
    let mut n = 0;
    while n < 500 {
        let t = MonomialSet::new((0..rng.gen_range(2..6)).map(|_| (rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64))));
        if t.non_constant().rank() < 2 {
            continue;
        }
        let u = random_s_unit(&mut rng, &[2, 3], 6);
        let v = random_s_unit(&mut rng, &[2, 3], 6);
        fails += usize::from(!monomial_height_bound(&t, &u, &v)?.holds);
        n += 1;
    }
    report("monomial_height_bound", n, fails);

    let mut fails = 0;
    let mut n = 0;
    for _ in 0..100 {
        let u = random_s_unit(&mut rng, &[2, 3], 5);
        let v = random_s_unit(&mut rng, &[2, 3], 5);
        let (k, h) = (rng.gen_range(1..=5u32), rng.gen_range(1..=8u32));
        let Ok(pt) = build_point(&u, &v, k, h) else { continue };
        n += 1;
        fails += usize::from((1..=k).any(|j| shifted_form(&pt, j) != shifted_form_closed(&u, &v, j, h)));
    }
    report("auxiliary_point_identities", n, fails);

    let corpus = ["(X - 1)/(Y - 1)", "1 + 2/3*X^2*Y^-1", "-X - -Y*X^-2", "3/4*X*Y^5 - 7"];
    let mut fails = 0;
    for s in corpus {
        let a = parse_ast(s)?;
        fails += usize::from(parse_ast(&a.to_string())? != a);
    }
    report("parser_round_trip", corpus.len(), fails);

    let mut text = lines.join("\n");
    text.push('\n');
    let mut o = CommandOutput::ok(text);
    if !all_ok {
        o.exit = EXIT_INVARIANT;
    }
    Ok(o)
}

/// `H` and `h` of a value, for quick inspection.
pub fn describe_value(x: &Rational) -> String {
    let h = height_rational(x);
    format!("{} H={} h={}", fmt_rational(x), fmt_rational(h.value()), h.ln().to_f64().unwrap_or(f64::NAN))
}
