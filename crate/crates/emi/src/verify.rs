//! Cross-checks run by `emi verify`.

use std::fmt;

use emi_core::pi::{ReferencePi, PUBLISHED_PI_PREFIX};
use emi_core::{closed_form_arctan_with, emi_integrate, EmiConfig, Exact, Integrand, Mode, Rat, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Group {
    /// Printed arctangent closed forms equal the generic engine exactly.
    ClosedForm,
    /// Polynomials up to degree M+1 integrate exactly.
    Exactness,
    /// Odd Taylor orders add nothing.
    OddOrder,
    /// The reference π expansion is sound.
    ReferencePi,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::ClosedForm, Group::Exactness, Group::OddOrder, Group::ReferencePi];

    pub fn name(self) -> &'static str {
        match self {
            Group::ClosedForm => "closed-form",
            Group::Exactness => "exactness",
            Group::OddOrder => "odd-order",
            Group::ReferencePi => "reference-pi",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupReport {
    pub group: Group,
    pub checks: usize,
    /// Inputs of the first failing check.
    pub failure: Option<String>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for GroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: PASS ({} checks)", self.group, self.checks),
            Some(why) => write!(f, "{}: FAIL after {} checks: {why}", self.group, self.checks),
        }
    }
}

/// Runs checks in order, stopping at the first failure.
fn run_checks<I>(group: Group, checks: I) -> GroupReport
where
    I: IntoIterator<Item = (String, Box<dyn FnOnce() -> bool>)>,
{
    let mut count = 0;
    for (inputs, check) in checks {
        count += 1;
        if !check() {
            return GroupReport { group, checks: count, failure: Some(inputs) };
        }
    }
    GroupReport { group, checks: count, failure: None }
}

fn exact(f: &Integrand, l: u32, m: u32) -> Option<Value> {
    emi_integrate(f, &EmiConfig::exact(l, m)).ok().map(|r| r.value)
}

type Check = (String, Box<dyn FnOnce() -> bool>);

/// Closed forms at `x ∈ xs`, `L ∈ ls`, `M ∈ {0, 2, 6}` against the engine.
pub fn closed_form_checks(xs: &[&str], ls: &[u32]) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    for &x in xs {
        for &l in ls {
            for m in [0u32, 2, 6] {
                let x: Rat = x.parse().expect("literal rational");
                checks.push((
                    format!("x={x} L={l} M={m}"),
                    Box::new(move || {
                        let closed = closed_form_arctan_with(&Exact, &x, l, m).ok().map(Value::Exact);
                        closed.is_some() && closed == exact(&Integrand::arctan_kernel(x), l, m)
                    }),
                ));
            }
        }
    }
    checks
}

/// `∫ t^k = 1/(k+1)` for even `M <= max_order`, `k <= M+1`, `L ∈ ls`.
pub fn exactness_checks(max_order: u32, ls: &[u32]) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    for m in (0..=max_order).step_by(2) {
        for k in 0..=m + 1 {
            for &l in ls {
                checks.push((
                    format!("poly:{k} L={l} M={m}"),
                    Box::new(move || {
                        exact(&Integrand::Poly(k), l, m) == Some(Value::Exact(Rat::new(1, k as i64 + 1).unwrap()))
                    }),
                ));
            }
        }
    }
    checks
}

/// Built-ins at order `2k+1` against `2k`. `exp` runs in float mode, where
/// the odd coefficients are skipped just the same.
pub fn odd_order_checks(max_l: u32, max_k: u32) -> Vec<Check> {
    let integrands = [
        Integrand::arctan_kernel(Rat::one()),
        Integrand::arctan_kernel(Rat::new(1, 2).unwrap()),
        Integrand::Runge,
        Integrand::Poly(4),
        Integrand::Exp,
    ];
    let mut checks: Vec<Check> = Vec::new();
    for f in integrands {
        for l in 1..=max_l {
            for k in 0..=max_k {
                let f = f.clone();
                checks.push((
                    format!("{f} L={l} k={k}"),
                    Box::new(move || {
                        let mode = if f.exact_capable() { Mode::Exact } else { Mode::Float };
                        let run = |m| {
                            let config = EmiConfig { subintervals: l, order: m, mode, precision: 40 };
                            emi_integrate(&f, &config).ok().map(|r| r.value)
                        };
                        let even = run(2 * k);
                        even.is_some() && even == run(2 * k + 1)
                    }),
                ));
            }
        }
    }
    checks
}

/// Bounds `lo <= arctan(1/n) <= hi` from `terms` terms of the alternating series.
fn arctan_inverse_bounds(n: i64, terms: u32) -> (Rat, Rat) {
    let x = Rat::new(1, n).expect("n > 0");
    let x2 = &x * &x;
    let mut power = x;
    let mut partial = Rat::zero();
    for k in 0..terms {
        let term = power.checked_div(&Rat::from(2 * k as i64 + 1)).expect("odd divisor");
        partial = if k % 2 == 0 { &partial + &term } else { &partial - &term };
        power = &power * &x2;
    }
    let next = power.checked_div(&Rat::from(2 * terms as i64 + 1)).expect("odd divisor");
    let other = if terms.is_multiple_of(2) { &partial + &next } else { &partial - &next };
    if partial < other {
        (partial, other)
    } else {
        (other, partial)
    }
}

/// Rational bounds on π from Machin's formula `16 arctan(1/5) - 4 arctan(1/239)`,
/// tight enough to fix `digits` decimal digits.
pub fn machin_bounds(digits: u32) -> (Rat, Rat) {
    // arctan(1/n) terms shrink by n² each; two spare digits of slack.
    let terms = |n: f64| ((digits as f64 + 2.0) / (2.0 * n.log10())).ceil() as u32 + 2;
    let (lo5, hi5) = arctan_inverse_bounds(5, terms(5.0));
    let (lo239, hi239) = arctan_inverse_bounds(239, terms(239.0));
    let sixteen = Rat::from(16);
    let four = Rat::from(4);
    (&(&sixteen * &lo5) - &(&four * &hi239), &(&sixteen * &hi5) - &(&four * &lo239))
}

pub fn reference_checks(reference: &ReferencePi) -> Vec<Check> {
    let prefix = reference.clone();
    let digits = reference.clone();
    vec![
        (format!("reference starts with {PUBLISHED_PI_PREFIX}"), Box::new(move || prefix.has_published_prefix())),
        (
            format!("reference digits agree with Machin's formula ({} digits)", reference.len()),
            Box::new(move || {
                let n = digits.len() as u32;
                if n == 0 {
                    return false;
                }
                let (lo, hi) = machin_bounds(n + 5);
                let expected = lo.render_truncated(n);
                expected == hi.render_truncated(n) && expected == digits.as_str()
            }),
        ),
    ]
}

pub fn run_group(group: Group, reference: &ReferencePi) -> GroupReport {
    match group {
        Group::ClosedForm => run_checks(group, closed_form_checks(&["1", "1/2", "1/3", "2"], &[1, 2, 10, 50])),
        Group::Exactness => run_checks(group, exactness_checks(8, &[1, 3, 7])),
        Group::OddOrder => run_checks(group, odd_order_checks(32, 3)),
        Group::ReferencePi => run_checks(group, reference_checks(reference)),
    }
}

/// Runs `groups` (all of them when empty) against `reference`.
pub fn run(groups: &[Group], reference: &ReferencePi) -> Vec<GroupReport> {
    let groups = if groups.is_empty() { &Group::ALL[..] } else { groups };
    groups.iter().map(|&g| run_group(g, reference)).collect()
}
