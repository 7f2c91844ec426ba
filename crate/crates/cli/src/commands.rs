//! The subcommands. Each writes one JSON document and returns whether the
//! run had no failures.

use std::time::Instant;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::CommandFactory;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use qyl_core::criterion::{check_general, check_pairwise, theta_cases, GeneralParams, Reduction};
use qyl_core::gln::GlnRep;
use qyl_core::gt::HighestWeight;
use qyl_core::linalg::{rank, Matrix};
use qyl_core::oracle::{burnside_outcome, is_cyclic_from_top_with_tbar, oracle_irreducible, singular_space};
use qyl_core::report::Report;
use qyl_core::sweep::{run_sweep, SweepRange};
use qyl_core::yangian::identities::{
    check_comatrix, check_comatrix_rtt, check_fusion3, check_generator_relations, check_minor_centrality,
    check_minor_coproduct, check_minor_forms, check_minor_generator_relations, check_minor_quadratic, check_qdet_central,
    check_rtt, BSideIndex,
};
use qyl_core::yangian::lowering::{check_gt_suite, check_theta, theta_vector, Normalization};
use qyl_core::yangian::rmatrix::antisymmetrizer_identity_holds;
use qyl_core::yangian::{EvalModule, TensorModule, YangianModule};

use crate::args::{Common, SweepArgs, Suite};

fn usage(msg: impl std::fmt::Display) -> ! {
    crate::args::Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

impl Common {
    fn n(&self) -> Option<usize> {
        self.n.or(self.lambda.as_ref().map(Vec::len)).or(self.mu.as_ref().map(Vec::len))
    }

    fn weight(&self, w: &Option<Vec<i64>>, flag: &str) -> HighestWeight {
        let Some(w) = w else { usage(format!("{flag} is required")) };
        if let Some(n) = self.n {
            if w.len() != n {
                usage(format!("{flag} has {} entries but --n is {n}", w.len()));
            }
        }
        HighestWeight::new(w.clone()).unwrap_or_else(|e| usage(e))
    }

    fn lambda(&self) -> HighestWeight {
        self.weight(&self.lambda, "--lambda")
    }

    fn mu(&self) -> HighestWeight {
        self.weight(&self.mu, "--mu")
    }

    fn params(&self, second: bool) -> GeneralParams {
        let (lambda, a, h, eps) = if second {
            (self.mu(), &self.b, &self.hp, &self.epsp)
        } else {
            (self.lambda(), &self.a, &self.h, &self.eps)
        };
        let n = lambda.n();
        let one = qyl_core::arith::Rational::one();
        GeneralParams::new(
            lambda,
            a.clone().unwrap_or_else(|| one.clone()),
            h.clone().unwrap_or(one),
            eps.clone().unwrap_or_else(|| vec![1; n]),
        )
        .unwrap_or_else(|e| usage(e))
    }

    fn module(&self, second: bool) -> Result<EvalModule> {
        let p = self.params(second);
        let rep = GlnRep::build_general(&p.lambda, &self.q, &p.h, &p.eps)?;
        Ok(EvalModule::new(rep, p.a)?)
    }

    fn is_standard(&self) -> bool {
        [&self.a, &self.b, &self.h, &self.hp].iter().all(|x| x.as_ref().is_none_or(One::is_one))
            && [&self.eps, &self.epsp].iter().all(|e| e.as_ref().is_none_or(|e| e.iter().all(|&s| s == 1)))
    }

    fn input(&self) -> Value {
        let r = |x: &Option<qyl_core::arith::Rational>| x.as_ref().map(|v| v.to_string());
        json!({
            "q": self.q,
            "n": self.n(),
            "lambda": self.lambda,
            "mu": self.mu,
            "a": r(&self.a),
            "b": r(&self.b),
            "h": r(&self.h),
            "hp": r(&self.hp),
            "eps": self.eps,
            "epsp": self.epsp,
        })
    }
}

fn emit<T: Serialize>(c: &Common, value: &T) -> Result<()> {
    let text = serde_json::to_string(value)? + "\n";
    match &c.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn check(c: &Common) -> Result<bool> {
    let (p, pp) = (c.params(false), c.params(true));
    let (reduction, result) = check_general(&p, &pp, &c.q)?;
    let mut out = json!({ "input": c.input(), "verdict": result.verdict });
    match &reduction {
        Reduction::Irreducible => out["reason"] = json!("ratio not in q^{2Z}"),
        Reduction::Pair { k, lambda, mu } => {
            out["normalized"] = json!({ "k": k, "lambda": lambda, "mu": mu });
            if let Some(w) = result.witness {
                out["witness"] = json!(w);
            }
            if c.debug {
                out["pairwise"] = json!(check_pairwise(lambda, mu)?);
            }
        }
    }
    emit(c, &out)?;
    Ok(true)
}

pub fn oracle(c: &Common, bound: usize) -> Result<bool> {
    let t = Instant::now();
    let tm = TensorModule::pair(c.module(false)?, c.module(true)?)?;
    let mut verdict = oracle_irreducible(&tm);
    let burnside = burnside_outcome(&tm, bound).ok();
    verdict.burnside_algebra_dim = burnside.as_ref().map(|b| b.algebra_dim);
    let mut out = serde_json::to_value(&verdict)?;
    if c.debug {
        out["dim"] = json!(tm.dim());
        out["cyclic_from_top_with_tbar"] = json!(is_cyclic_from_top_with_tbar(&tm));
        out["burnside"] = json!(burnside);
    }
    emit(c, &out)?;
    eprintln!("oracle: dim {} in {:.3?}", tm.dim(), t.elapsed());
    Ok(true)
}

pub fn sweep(c: &Common, s: &SweepArgs) -> Result<bool> {
    let n = c.n().unwrap_or(2);
    let range = if n == 2 && !s.sample {
        SweepRange::Exhaustive { lambda_max: s.lambda_max, mu_bound: s.mu_bound }
    } else {
        if n < 2 {
            usage("sweeps need n >= 2");
        }
        SweepRange::Sampled { n, count: s.count, seed: c.seed.unwrap_or(0), width: s.width, max_dim: s.max_dim }
    };
    let t = Instant::now();
    let report = run_sweep(&range, &c.q, s.burnside_bound);
    emit(c, &report)?;
    let m = &report.summary;
    eprintln!(
        "sweep: {} cases, {} agree with the oracle, {} agree with the pairwise condition, {:.3?}",
        m.total,
        m.agree,
        m.pairwise_agree,
        t.elapsed()
    );
    Ok(report.all_agree())
}

fn relations_report(rep: &GlnRep) -> Report {
    let mut r = Report::new("relations");
    let failures = rep.verify_relations();
    r.record(failures.is_empty(), || format!("{} relation failures", failures.len()));
    r.failures.extend(failures);
    r
}

fn theta_reports(c: &Common) -> Result<(Vec<Report>, Vec<Value>)> {
    if !c.is_standard() {
        usage("the theta suite needs a = b = h = 1 and all signs +1");
    }
    let cases = theta_cases(&c.lambda(), &c.mu());
    let mut reports = Vec::new();
    let mut vectors = Vec::new();
    if cases.is_empty() {
        let mut r = Report::new("theta");
        r.record(false, || "the pair does not satisfy the singular-vector hypotheses in either order".into());
        reports.push(r);
    }
    for case in cases {
        let std = |l: &HighestWeight| EvalModule::standard(GlnRep::build(l, &c.q));
        let tm = TensorModule::pair(std(&case.lambda), std(&case.mu))?;
        let norm = Normalization::singular();
        let mut r = check_theta(&tm, case.p, norm)?;
        let theta = theta_vector(&tm, case.p, norm)?;
        let mut rows = singular_space(&tm);
        let before = rank(&Matrix::from_dense(&rows));
        rows.push(theta.clone());
        r.record(rank(&Matrix::from_dense(&rows)) == before, || "theta is outside the singular space".into());
        let lead = theta.iter().position(|x| !x.is_zero());
        vectors.push(json!({
            "lambda": case.lambda,
            "mu": case.mu,
            "swapped": case.swapped,
            "p": case.p,
            "k": case.k,
            "nonzero_coordinates": theta.iter().filter(|x| !x.is_zero()).count(),
            "first_nonzero": lead,
            "theta": c.debug.then(|| theta.iter().map(ToString::to_string).collect::<Vec<_>>()),
        }));
        reports.push(r);
    }
    Ok((reports, vectors))
}

pub fn verify(c: &Common, suite: Suite) -> Result<bool> {
    let t = Instant::now();
    let mut extra = Value::Null;
    let reports: Vec<Report> = match suite {
        Suite::Relations => {
            let p = c.params(false);
            vec![relations_report(&GlnRep::build_general(&p.lambda, &c.q, &p.h, &p.eps)?)]
        }
        Suite::Rtt => {
            let run = |m: &dyn YangianModule| {
                vec![check_generator_relations(m), check_rtt(m), check_fusion3(m), check_comatrix_rtt(m)]
            };
            let mut out = run(&c.module(false)?);
            if c.mu.is_some() {
                out.extend(run(&TensorModule::pair(c.module(false)?, c.module(true)?)?));
            }
            out
        }
        Suite::Minors => {
            let single = c.module(false)?;
            let n = single.n();
            let mut a = Report::new("antisymmetrizer");
            for r in 2..=n {
                a.record(antisymmetrizer_identity_holds(n, r, &c.q), || format!("R(1, q^-2) = (1 - q^-2) A_{r} fails"));
            }
            let run = |m: &dyn YangianModule, scalar: bool| {
                vec![
                    check_minor_generator_relations(m, BSideIndex::Summed),
                    check_minor_centrality(m),
                    check_qdet_central(m, scalar),
                    check_comatrix(m),
                    check_minor_quadratic(m),
                    check_minor_forms(m),
                ]
            };
            let mut out = vec![a];
            out.extend(run(&single, true));
            if c.mu.is_some() {
                let tm = TensorModule::pair(c.module(false)?, c.module(true)?)?;
                out.extend(run(&tm, false));
                out.push(check_minor_coproduct(&tm));
            }
            out
        }
        Suite::Gt => {
            let mut out = vec![check_gt_suite(&c.module(false)?)?];
            if c.mu.is_some() {
                out.push(check_gt_suite(&c.module(true)?)?);
            }
            out
        }
        Suite::Theta => {
            let (reports, vectors) = theta_reports(c)?;
            extra = json!(vectors);
            reports
        }
    };
    let ok = reports.iter().all(Report::is_ok);
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let mut out = json!({ "input": c.input(), "ok": ok, "checks": checks, "reports": reports });
    if !extra.is_null() {
        out["theta"] = extra;
    }
    emit(c, &out)?;
    eprintln!("verify: {checks} checks in {:.3?}", t.elapsed());
    Ok(ok)
}

pub fn export(c: &Common) -> Result<bool> {
    let m = c.module(false)?;
    let n = m.n();
    let ops: Vec<Value> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| json!({ "i": i, "j": j, "t": m.t_op(i, j), "tbar": m.tbar_op(i, j) }))
        .collect();
    let out = json!({
        "rep": m.rep().export(),
        "a": m.a().to_string(),
        "h": m.rep().h().to_string(),
        "eps": m.rep().eps(),
        "operators": ops,
    });
    emit(c, &out)?;
    Ok(true)
}
