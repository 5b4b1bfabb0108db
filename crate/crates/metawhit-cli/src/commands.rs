use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use metawhit::algebra::{gauss_token, specialize_coef, GaussNumeric, XPolynomial};
use metawhit::crystal::{enumerate_bzl, gk_lhs, gk_rhs, gkw, tuple_term, weight_w, whittaker_sum, Normalization};
use metawhit::gt::{compare_crystal_gt, gt_ppart};
use metawhit::lusztig::{local_transition, local_transition_inverse, transition, weight_of, BzlTuple};
use metawhit::padic_sim::{
    classify_cell_sl3, closed_form_cell, from_coordinates, integrate_cell, iwasawa, psi_lambda, psi_product_formula,
    IntegrationOptions, LaurentElem,
};
use metawhit::roots::{braid_path, build_type_a, gt_word, weyl_group_words, CartanCase, ReducedWord};

use crate::args::{Case, Command, Norm, WeightArgs};

#[derive(Debug)]
pub enum CliError {
    Core(metawhit::Error),
    Invalid(String),
}

impl From<metawhit::Error> for CliError {
    fn from(e: metawhit::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Invalid(s) => write!(f, "invalid argument: {s}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A subcommand's payload in all three renderings.
pub struct Outcome {
    pub result: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
    pub mismatch: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable payload")
}

fn norm(n: Norm) -> Normalization {
    match n {
        Norm::Classical => Normalization::Classical,
        Norm::Printed => Normalization::Printed,
    }
}

/// Drops the sign of negative zero so output does not depend on rounding noise.
fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

fn cx(z: Complex64) -> Value {
    json!({ "re": clean(z.re), "im": clean(z.im) })
}

fn fixed(v: f64) -> String {
    let s = format!("{:.12}", clean(v));
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn coef_string(terms: &[metawhit::algebra::CoefTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|t| {
            let mut s = format!("({})q^{}", t.rational, t.q_power);
            for tok in &t.tokens {
                s.push_str(&format!("g[{},{}]", tok.a, tok.b));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn poly_rows(p: &XPolynomial) -> Vec<Vec<String>> {
    p.to_terms()
        .iter()
        .map(|t| {
            vec![
                t.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
                coef_string(&t.coefficient),
            ]
        })
        .collect()
}

fn poly_header() -> Vec<String> {
    vec!["exponents".into(), "coefficient".into()]
}

fn check_weight(w: &WeightArgs) -> CliResult<()> {
    if w.lambda.len() != w.rank {
        return Err(CliError::Invalid(format!("--lambda needs {} entries, got {}", w.rank, w.lambda.len())));
    }
    Ok(())
}

fn polynomial_command(w: &WeightArgs, gt: bool) -> CliResult<Outcome> {
    check_weight(w)?;
    let rs = build_type_a(w.rank, w.cover)?;
    let poly = if gt {
        gt_ppart(&w.lambda, w.cover, &rs, norm(w.normalization))?
    } else {
        whittaker_sum(&w.lambda, w.cover, &rs, norm(w.normalization))?
    };
    Ok(Outcome {
        result: json!({ "lambda": w.lambda, "num_terms": poly.len(), "polynomial": to_value(&poly.to_terms()) }),
        header: poly_header(),
        rows: poly_rows(&poly),
        pretty: format!("{poly}\n"),
        mismatch: false,
    })
}

fn compare(w: &WeightArgs, prime: Option<u64>) -> CliResult<Outcome> {
    check_weight(w)?;
    let rs = build_type_a(w.rank, w.cover)?;
    let rep = compare_crystal_gt(&w.lambda, w.cover, &rs, norm(w.normalization), prime)?;
    let verdict = if rep.verdict { "match" } else { "mismatch" };
    let numeric_ok = rep.numeric.as_ref().map_or(true, |c| c.ok);
    let rows = rep
        .table
        .iter()
        .map(|row| {
            vec![
                row.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
                coef_string(&row.crystal),
                coef_string(&row.gt_calibrated),
                row.equal.to_string(),
            ]
        })
        .collect();
    let pretty = format!(
        "verdict: {verdict}\ncalibration: {}\nmonomials: {}\nnumeric: {}\n",
        rep.calibration_q_power.map_or("none".into(), |k| format!("x -> q^{k} x")),
        rep.table.len(),
        rep.numeric.as_ref().map_or("skipped".into(), |c| format!("p={} max diff {:.3e}", c.p, c.max_abs_diff)),
    );
    let mut result = to_value(&rep);
    result["verdict"] = json!(verdict);
    Ok(Outcome {
        result,
        header: vec!["exponents".into(), "crystal".into(), "gt_calibrated".into(), "equal".into()],
        rows,
        pretty,
        mismatch: !rep.verdict || !numeric_ok,
    })
}

fn gk(rank: usize, n: u32, d: u32) -> CliResult<Outcome> {
    let rs = build_type_a(rank, n)?;
    let lhs = gk_lhs(n, &rs, d)?;
    let rhs = gk_rhs(n, &rs, d)?;
    let equal = lhs == rhs;
    let verdict = if equal { "equal" } else { "differ" };
    Ok(Outcome {
        result: json!({ "degree": d, "verdict": verdict, "lhs": to_value(&lhs.to_terms()), "rhs": to_value(&rhs.to_terms()) }),
        header: poly_header(),
        rows: poly_rows(&lhs),
        pretty: format!("verdict: {verdict}\nterms: {}\nsum: {lhs}\n", lhs.len()),
        mismatch: !equal,
    })
}

fn gkw_command(rank: usize, n: u32, d: u32, word: Option<&[usize]>) -> CliResult<Outcome> {
    let rs = build_type_a(rank, n)?;
    let words = match word {
        Some(w) => vec![w.to_vec()],
        None if rank <= 3 => weyl_group_words(rank),
        None => return Err(CliError::Invalid("enumerating all of W is limited to rank 3; pass --word".into())),
    };
    let mut items = vec![];
    let mut rows = vec![];
    let mut all = true;
    for w in words {
        let (sum, prod) = gkw(&w, n, &rs, d)?;
        let equal = sum == prod;
        all &= equal;
        let verdict = if equal { "equal" } else { "differ" };
        rows.push(vec![w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "), verdict.into(), sum.len().to_string()]);
        items.push(json!({ "word": w, "verdict": verdict, "sum": to_value(&sum.to_terms()), "product": to_value(&prod.to_terms()) }));
    }
    let pretty = rows.iter().map(|r| format!("w = ({}): {} [{} terms]\n", r[0], r[1], r[2])).collect();
    Ok(Outcome {
        result: json!({ "degree": d, "verdict": if all { "equal" } else { "differ" }, "elements": items }),
        header: vec!["word".into(), "verdict".into(), "terms".into()],
        rows,
        pretty,
        mismatch: !all,
    })
}

fn gauss_table(p: u64, n: u32, b_min: i64, b_max: i64) -> CliResult<Outcome> {
    if b_min > b_max {
        return Err(CliError::Invalid("--b-min exceeds --b-max".into()));
    }
    let ctx = GaussNumeric::new(p, n)?;
    let symbolic = ctx.check_symbolic().is_ok();
    let mut entries = vec![];
    let mut rows = vec![];
    for a in 0..n as i64 {
        for b in b_min..=b_max {
            let sym = gauss_token(a, b, n);
            let num = ctx.gauss_numeric(a, b);
            let spec = if symbolic { Some(specialize_coef(&sym, p, &ctx)?) } else { None };
            rows.push(vec![
                a.to_string(),
                b.to_string(),
                coef_string(&sym.to_terms()),
                fixed(num.re),
                fixed(num.im),
                format!("{:.12}", num.norm()),
            ]);
            entries.push(json!({
                "a": a, "b": b,
                "symbolic": to_value(&sym.to_terms()),
                "numeric": cx(num),
                "abs": num.norm(),
                "specialized": spec.map(cx),
            }));
        }
    }
    let pretty = rows.iter().map(|r| format!("g({}, {}) = {}  ~ {} + {}i  |g| = {}\n", r[0], r[1], r[2], r[3], r[4], r[5])).collect();
    Ok(Outcome {
        result: json!({ "p": p, "n": n, "generator": ctx.generator(), "symbolic_specialization": symbolic, "entries": entries }),
        header: ["a", "b", "symbolic", "re", "im", "abs"].map(String::from).to_vec(),
        rows,
        pretty,
        mismatch: false,
    })
}

fn crystal_enum(w: &WeightArgs) -> CliResult<Outcome> {
    check_weight(w)?;
    let rs = build_type_a(w.rank, w.cover)?;
    let en = enumerate_bzl(&w.lambda, &rs)?;
    let nn = rs.num_positive();
    let mut items = vec![];
    let mut rows = vec![];
    for t in &en.tuples {
        let weights: Vec<Value> = (0..nn).map(|a| to_value(&weight_w(t, a, w.cover, norm(w.normalization)).to_terms())).collect();
        let term = tuple_term(t, &rs, w.cover, norm(w.normalization));
        let mut item = to_value(t);
        item["weights"] = Value::Array(weights);
        item["term"] = to_value(&term.to_terms());
        items.push(item);
        rows.push(vec![
            t.m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
            t.circled.iter().map(|&c| if c { "1" } else { "0" }).collect::<Vec<_>>().join(" "),
            t.boxed.iter().map(|&c| if c { "1" } else { "0" }).collect::<Vec<_>>().join(" "),
            poly_rows(&term).first().map_or("0".into(), |r| r[1].clone()),
        ]);
    }
    let pretty = rows.iter().map(|r| format!("m = ({})  circled ({})  boxed ({})  {}\n", r[0], r[1], r[2], r[3])).collect();
    Ok(Outcome {
        result: json!({
            "lambda": w.lambda,
            "roots": to_value(&rs.positive_roots()),
            "non_dominant": en.non_dominant,
            "count": en.tuples.len(),
            "tuples": items,
        }),
        header: ["m", "circled", "boxed", "term"].map(String::from).to_vec(),
        rows,
        pretty,
        mismatch: false,
    })
}

fn cartan(c: Case) -> CartanCase {
    match c {
        Case::A1xa1 => CartanCase::A1xA1,
        Case::A2 => CartanCase::A2,
        Case::B2 => CartanCase::B2,
        Case::G2 => CartanCase::G2,
    }
}

fn rank_of(letters: &[usize]) -> usize {
    letters.iter().copied().max().unwrap_or(0)
}

fn transition_command(
    from: Option<&[usize]>,
    to: Option<&[usize]>,
    case: Option<Case>,
    inverse: bool,
    m: &[u64],
) -> CliResult<Outcome> {
    let list = |v: &[String]| v.join(" ");
    if let Some(c) = case {
        if from.is_some() || to.is_some() {
            return Err(CliError::Invalid("--case excludes --from and --to".into()));
        }
        let seg: Vec<_> = m.iter().map(|&x| x.into()).collect();
        let out = if inverse { local_transition_inverse(cartan(c), &seg)? } else { local_transition(cartan(c), &seg)? };
        let s: Vec<String> = out.iter().map(|x| x.to_string()).collect();
        return Ok(Outcome {
            result: json!({ "case": to_value(&cartan(c)), "inverse": inverse, "input": m, "output": s }),
            header: vec!["input".into(), "output".into()],
            rows: vec![vec![list(&m.iter().map(|x| x.to_string()).collect::<Vec<_>>()), list(&s)]],
            pretty: format!("{:?} -> ({})\n", m, s.join(", ")),
            mismatch: false,
        });
    }
    let (Some(from), Some(to)) = (from, to) else {
        return Err(CliError::Invalid("give --from and --to, or --case".into()));
    };
    let r = rank_of(from).max(rank_of(to));
    let src = ReducedWord::new(r, from.to_vec())?;
    let dst = ReducedWord::new(r, to.to_vec())?;
    let t = BzlTuple::from_u64(src.clone(), m)?;
    let path = braid_path(&src, &dst)?;
    let out = transition(&t, &dst)?;
    let s: Vec<String> = out.entries().iter().map(|x| x.to_string()).collect();
    let wt: Vec<String> = weight_of(&out).iter().map(|x| x.to_string()).collect();
    Ok(Outcome {
        result: json!({
            "from": from, "to": to, "input": m, "output": s,
            "moves": to_value(&path),
            "weight": wt,
        }),
        header: vec!["input".into(), "output".into(), "weight".into()],
        rows: vec![vec![list(&m.iter().map(|x| x.to_string()).collect::<Vec<_>>()), list(&s), list(&wt)]],
        pretty: format!("{src} {m:?} -> {dst} ({})\nweight ({})\nmoves {}\n", s.join(", "), wt.join(", "), path.len()),
        mismatch: false,
    })
}

fn simulate(rank: usize, p: u64, n: u32, samples: usize, min_val: i64, detail: bool, seed: u64) -> CliResult<Outcome> {
    if !(1..=3).contains(&rank) {
        return Err(CliError::Invalid("simulate supports rank 1 to 3".into()));
    }
    if min_val > 0 {
        return Err(CliError::Invalid("--min-valuation must be at most 0".into()));
    }
    let ctx = GaussNumeric::new(p, n)?;
    let word = gt_word(rank);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut reconstructed, mut character, mut classified) = (0usize, 0usize, 0usize);
    let mut items = vec![];
    let mut rows = vec![];
    for k in 0..samples {
        let digits: Vec<Vec<u64>> =
            (0..word.len()).map(|_| (0..(2 - min_val) as usize).map(|_| rng.gen_range(0..p)).collect()).collect();
        let lam: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..3)).collect();
        let x: Vec<LaurentElem> = digits.iter().map(|d| LaurentElem::laurent_poly(p, min_val, d)).collect();
        let u = from_coordinates(p, &word, &x)?;
        let res = iwasawa(&u, &word)?;
        let ok = res.verify(&u)?;
        let psi_ok = (psi_lambda(&u, &lam, &ctx) - psi_product_formula(&res, &lam, &ctx)?).norm() < 1e-9;
        let table = if rank == 2 {
            let alt = iwasawa(&u, &ReducedWord::new(2, vec![2, 1, 2])?)?;
            Some(alt.m == classify_cell_sl3(&u)?.to_vec())
        } else {
            None
        };
        reconstructed += ok as usize;
        character += psi_ok as usize;
        classified += table.unwrap_or(true) as usize;
        if detail {
            items.push(json!({ "index": k, "digits": digits, "lambda": lam, "m": res.m, "reconstructed": ok, "character": psi_ok, "table": table }));
        }
        rows.push(vec![
            k.to_string(),
            res.m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
            ok.to_string(),
            psi_ok.to_string(),
            table.map_or("".into(), |b| b.to_string()),
        ]);
    }
    let all = reconstructed == samples && character == samples && classified == samples;
    Ok(Outcome {
        result: json!({
            "rank": rank, "p": p, "n": n, "samples": samples, "min_valuation": min_val,
            "reconstructed": reconstructed, "character_product": character, "table_agreement": classified,
            "verdict": if all { "pass" } else { "fail" },
            "details": items,
        }),
        header: ["index", "m", "reconstructed", "character", "table"].map(String::from).to_vec(),
        rows,
        pretty: format!(
            "samples: {samples}\nreconstructed: {reconstructed}\ncharacter product: {character}\ntable agreement: {classified}\n"
        ),
        mismatch: !all,
    })
}

fn parse_x(raw: Option<&[String]>, r: usize) -> CliResult<Vec<Complex64>> {
    let Some(raw) = raw else {
        return Ok((0..r).map(|i| Complex64::new(0.31 - 0.54 * i as f64, 0.17 + 0.12 * i as f64)).collect());
    };
    if raw.len() != r {
        return Err(CliError::Invalid(format!("--x needs {r} values")));
    }
    raw.iter()
        .map(|s| {
            let (re, im) = s.split_once(':').unwrap_or((s.as_str(), "0"));
            match (re.trim().parse::<f64>(), im.trim().parse::<f64>()) {
                (Ok(a), Ok(b)) => Ok(Complex64::new(a, b)),
                _ => Err(CliError::Invalid(format!("cannot parse x value {s:?}"))),
            }
        })
        .collect()
}

fn cells(nn: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nn {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_sum - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn integrate(
    w: &WeightArgs,
    p: u64,
    m: Option<&[u32]>,
    max_sum: u32,
    x: Option<&[String]>,
    max_depth: u32,
    tol: f64,
) -> CliResult<Outcome> {
    check_weight(w)?;
    let ctx = GaussNumeric::new(p, w.cover)?;
    let word = gt_word(w.rank);
    let xs = parse_x(x, w.rank)?;
    let opts = IntegrationOptions { max_depth };
    let list = match m {
        Some(m) => vec![m.to_vec()],
        None => cells(word.len(), max_sum),
    };
    let mut items = vec![];
    let mut rows = vec![];
    let mut worst = 0.0f64;
    for m in list {
        let got = integrate_cell(&word, &m, &w.lambda, &ctx, &xs, opts)?;
        let want = closed_form_cell(&word, &m, &w.lambda, &ctx, &xs, norm(w.normalization))?;
        let diff = (got.value() - want).norm();
        worst = worst.max(diff);
        rows.push(vec![
            m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
            got.representatives.to_string(),
            fixed(got.re),
            fixed(got.im),
            fixed(want.re),
            fixed(want.im),
            format!("{diff:.3e}"),
        ]);
        items.push(json!({
            "m": m, "depth": got.depth, "representatives": got.representatives,
            "integral": cx(got.value()), "closed_form": cx(want), "abs_diff": diff,
        }));
    }
    let ok = worst <= tol;
    let pretty = rows.iter().map(|r| format!("m = ({})  reps {}  integral ({}, {})  closed ({}, {})\n", r[0], r[1], r[2], r[3], r[4], r[5])).collect::<String>()
        + &format!("max diff {worst:.3e}\n");
    Ok(Outcome {
        result: json!({
            "lambda": w.lambda, "p": p, "n": w.cover,
            "x": xs.iter().map(|&z| cx(z)).collect::<Vec<_>>(),
            "cells": items, "max_abs_diff": worst, "tolerance": tol,
            "verdict": if ok { "match" } else { "mismatch" },
        }),
        header: ["m", "representatives", "integral_re", "integral_im", "closed_re", "closed_im", "abs_diff"].map(String::from).to_vec(),
        rows,
        pretty,
        mismatch: !ok,
    })
}

pub fn run(cmd: &Command, seed: u64) -> CliResult<Outcome> {
    match cmd {
        Command::Whittaker(w) => polynomial_command(w, false),
        Command::GtPpart(w) => polynomial_command(w, true),
        Command::Compare { w, prime } => compare(w, *prime),
        Command::Gk { rank, cover, degree } => gk(*rank, *cover, *degree),
        Command::Gkw { rank, cover, degree, word } => gkw_command(*rank, *cover, *degree, word.as_deref()),
        Command::GaussTable { prime, cover, b_min, b_max } => gauss_table(*prime, *cover, *b_min, *b_max),
        Command::CrystalEnum(w) => crystal_enum(w),
        Command::Transition { from, to, case, inverse, m } => {
            transition_command(from.as_deref(), to.as_deref(), *case, *inverse, m)
        }
        Command::Simulate { rank, prime, cover, samples, min_valuation, detail } => {
            simulate(*rank, *prime, *cover, *samples, *min_valuation, *detail, seed)
        }
        Command::Integrate { w, prime, m, max_sum, x, max_depth, tolerance } => {
            integrate(w, *prime, m.as_deref(), *max_sum, x.as_deref(), *max_depth, *tolerance)
        }
    }
}
