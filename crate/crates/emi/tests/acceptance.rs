//! Acceptance criteria for the EMI engine. Prints one line per criterion and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use emi::Workers;
use emi_core::pi::{matched_digits, ReferencePi};
use emi_core::{
    closed_form_arctan_with, emi_integrate, term_count, EmiConfig, Exact, Integrand, Mode, Rat, Real, Value,
};

const M0: &str = "3.1415927369231265717940545935969641467776336373917";
const M2: &str = "3.1415926535897932384637594547080737075957760027852";
const M6: &str = "3.1415926535897932384626433832795028649618474297397";

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pi_digits(workers: &Workers, l: u32, m: u32, precision: u32, digits: u32) -> Result<(String, usize), String> {
    let value = workers.pi_emi(l, m, Mode::Float, precision).map_err(|e| e.to_string())?;
    let rendered = value.render(digits).map_err(|e| e.to_string())?;
    let matched = matched_digits(&rendered, &ReferencePi::standard()).map_err(|e| e.to_string())?;
    Ok((rendered, matched))
}

fn check_pi(l: u32, m: u32, expected: &str, expected_matched: usize) -> Outcome {
    let workers = Workers::new(None).map_err(|e| e.to_string())?;
    let (rendered, matched) = pi_digits(&workers, l, m, 60, 50)?;
    ensure(rendered == expected, || format!("got {rendered}, want {expected}"))?;
    ensure(matched == expected_matched, || format!("matched {matched}, want {expected_matched}"))?;
    Ok(format!("{rendered}, {matched} digits"))
}

fn order_zero() -> Outcome {
    check_pi(1000, 0, M0, 7)
}

fn order_two() -> Outcome {
    check_pi(1000, 2, M2, 21)
}

fn order_six() -> Outcome {
    check_pi(1000, 6, M6, 35)
}

fn high_order() -> Outcome {
    let workers = Workers::new(None).map_err(|e| e.to_string())?;
    let (_, matched) = pi_digits(&workers, 46, 46, 130, 125)?;
    let terms = term_count(46, 46);
    ensure(matched == 105, || format!("matched {matched}, want 105"))?;
    ensure(terms == 1104, || format!("{terms} terms, want 1104"))?;
    Ok(format!("{matched} digits from {terms} terms"))
}

fn closed_forms() -> Outcome {
    let mut n = 0;
    for x in ["1", "1/2", "2"] {
        let x: Rat = x.parse().map_err(|e: emi_core::Error| e.to_string())?;
        for l in [1, 2, 10, 50] {
            for m in [0, 2, 6] {
                let closed = closed_form_arctan_with(&Exact, &x, l, m).map_err(|e| e.to_string())?;
                let engine = emi_integrate(&Integrand::arctan_kernel(x.clone()), &EmiConfig::exact(l, m))
                    .map_err(|e| e.to_string())?;
                ensure(engine.value == Value::Exact(closed.clone()), || {
                    format!("x={x} L={l} M={m}: engine {} vs closed form {closed}", engine.value)
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} exact identities"))
}

fn polynomial_exactness() -> Outcome {
    let mut n = 0;
    for m in (0..=8).step_by(2) {
        for k in 0..=m + 1 {
            for l in [1, 3, 7] {
                let got = emi_integrate(&Integrand::Poly(k), &EmiConfig::exact(l, m)).map_err(|e| e.to_string())?;
                let want = Rat::new(1, k as i64 + 1).map_err(|e| e.to_string())?;
                ensure(got.value == Value::Exact(want), || format!("poly:{k} L={l} M={m} gave {}", got.value))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} polynomials"))
}

fn odd_order_collapse() -> Outcome {
    let integrands = [
        Integrand::arctan_kernel(Rat::one()),
        Integrand::arctan_kernel(Rat::new(1, 2).unwrap()),
        Integrand::Exp,
        Integrand::Runge,
        Integrand::Poly(5),
    ];
    let mut n = 0;
    for f in &integrands {
        let mode = if f.exact_capable() { Mode::Exact } else { Mode::Float };
        for l in 1..=32 {
            for k in 0..=3 {
                let run = |m| {
                    let config = EmiConfig { subintervals: l, order: m, mode, precision: 40 };
                    emi_integrate(f, &config).map(|r| r.value).map_err(|e| e.to_string())
                };
                let (even, odd) = (run(2 * k)?, run(2 * k + 1)?);
                ensure(even == odd, || format!("{f} L={l} k={k}: {even} vs {odd}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn exp_order() -> Outcome {
    let precision = 60;
    let one = Real::from_integer(1, precision).map_err(|e| e.to_string())?;
    let exact = &one.exp() - &one;
    let error = |l, m| -> Result<f64, String> {
        let r = emi_integrate(&Integrand::Exp, &EmiConfig::float(l, m, precision)).map_err(|e| e.to_string())?;
        let value = r.value.to_real(precision).map_err(|e| e.to_string())?;
        Ok((&value - &exact).abs().to_f64())
    };
    let mut orders = Vec::new();
    for m in [0u32, 2, 4] {
        let p = (error(16, m)? / error(32, m)?).log2();
        let want = (m + 2) as f64;
        ensure((p - want).abs() <= 0.3, || format!("M={m}: order {p:.3}, want {want}"))?;
        orders.push(format!("M={m}: {p:.3}"));
    }
    Ok(orders.join(", "))
}

fn determinism() -> Outcome {
    let single = Workers::new(Some(1)).map_err(|e| e.to_string())?;
    let eight = Workers::new(Some(8)).map_err(|e| e.to_string())?;
    let a = pi_digits(&single, 1000, 6, 60, 50)?.0;
    let b = pi_digits(&eight, 1000, 6, 60, 50)?.0;
    ensure(a == b, || format!("library: {a} vs {b}"))?;

    let cli = |threads: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_emi"))
            .args(["pi", "--L", "1000", "--M", "6", "--precision", "60", "--digits", "50"])
            .env("EMI_THREADS", threads)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("emi exited with {}", out.status))?;
        Ok(out.stdout)
    };
    let (one, many) = (cli("1")?, cli("8")?);
    ensure(one == many, || {
        format!("cli output differs:\n{}\n{}", String::from_utf8_lossy(&one), String::from_utf8_lossy(&many))
    })?;
    Ok("library and cli identical at 1 and 8 threads".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "pi, L=1000 M=0", limit: Some(Duration::from_secs(5)), run: order_zero },
        Criterion { id: 2, name: "pi, L=1000 M=2", limit: Some(Duration::from_secs(10)), run: order_two },
        Criterion { id: 3, name: "pi, L=1000 M=6", limit: Some(Duration::from_secs(30)), run: order_six },
        Criterion { id: 4, name: "pi, L=46 M=46", limit: Some(Duration::from_secs(10)), run: high_order },
        Criterion { id: 5, name: "closed forms", limit: Some(Duration::from_secs(60)), run: closed_forms },
        Criterion { id: 6, name: "polynomial exactness", limit: None, run: polynomial_exactness },
        Criterion { id: 7, name: "odd-order collapse", limit: None, run: odd_order_collapse },
        Criterion { id: 8, name: "convergence order for exp", limit: None, run: exp_order },
        Criterion { id: 9, name: "thread-count determinism", limit: None, run: determinism },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {} ({elapsed:.2?}) {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {} ({elapsed:.2?}) {why}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
