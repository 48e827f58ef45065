//! Independent oracles: long division, closed-form derivatives, high-precision
//! finite differences, brute-force midpoint sums, and Machin's formula.

use emi_core::pi::{convergence_scan, ReferencePi, PI_DIGITS};
use emi_core::{rat_to_real, Arithmetic, Exact, Float, Integrand, Jet, Mode, Rat, Real};

fn q(s: &str) -> Rat {
    s.parse().unwrap()
}

/// Schoolbook long division of `num/den` to `digits` significant digits
/// (truncated), for `1 <= num/den < 10`.
fn long_division(mut num: u64, den: u64, digits: usize) -> String {
    let mut out = String::new();
    for i in 0..digits {
        out.push(char::from(b'0' + (num / den) as u8));
        if i == 0 {
            out.push('.');
        }
        num = (num % den) * 10;
    }
    out
}

#[test]
fn rat_to_real_agrees_with_long_division() {
    // Eleven truncated digits decide the rounding of the tenth (no ties here).
    let oracle = long_division(355, 113, 11);
    assert_eq!(oracle, "3.1415929203");
    let rounded = rat_to_real(&q("355/113"), 10).unwrap().render(10).unwrap();
    assert_eq!(rounded, "3.141592920");
    for (n, d) in [(22u64, 7u64), (103993, 33102), (17, 16), (5, 3)] {
        let oracle = long_division(n, d, 30);
        let real = rat_to_real(&Rat::new(n as i64, d as i64).unwrap(), 40).unwrap();
        assert_eq!(real.render(30).unwrap(), oracle, "{n}/{d}");
    }
}

/// Numerator polynomials of `d^m/dt^m (1+t²)^-1 = p_m(t) / (1+t²)^(m+1)`,
/// lowest degree first.
const DERIVATIVE_NUMERATORS: [&[i64]; 7] = [
    &[1],
    &[0, -2],
    &[-2, 0, 6],
    &[0, 24, 0, -24],
    &[24, 0, -240, 0, 120],
    &[0, -720, 0, 2400, 0, -720],
    &[-720, 0, 15120, 0, -25200, 0, 5040],
];

fn symbolic_derivative(m: usize, t: &Rat) -> Rat {
    let p = DERIVATIVE_NUMERATORS[m].iter().rev().fold(Rat::zero(), |acc, &c| &(&acc * t) + &Rat::from(c));
    let u = &Rat::one() + &(t * t);
    p.checked_div(&u.pow(m as u32 + 1)).unwrap()
}

#[test]
fn arctan_kernel_derivatives_match_symbolic_forms() {
    let kernel = Integrand::arctan_kernel(Rat::one());
    for center in ["0", "1/2", "1/7", "3/8", "99/100", "1", "5/1998"] {
        let t = q(center);
        let jet = kernel.jet(&Exact, &t, 6).unwrap();
        for m in 0..=6u32 {
            assert_eq!(jet.derivative(&Exact, m).unwrap(), symbolic_derivative(m as usize, &t), "m={m} t={center}");
        }
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// m-th central difference quotient of 1/(1+t²) with step h.
fn central_difference(arith: &Float, t: &Real, h: &Real, m: u32) -> Real {
    let f = |s: &Real| {
        let u = arith.add(&arith.one(), &arith.mul(s, s));
        arith.div(&arith.one(), &u).unwrap()
    };
    let mut sum = arith.zero();
    for k in 0..=m {
        // offset (m/2 - k) h, written as (m - 2k) (h/2)
        let offset = arith.mul(&arith.from_int(m as i64 - 2 * k as i64), &arith.div(h, &arith.from_int(2)).unwrap());
        let term = arith.mul(&arith.from_int(binomial(m, k)), &f(&arith.add(t, &offset)));
        sum = if k % 2 == 0 { arith.add(&sum, &term) } else { arith.sub(&sum, &term) };
    }
    let hm = (0..m).fold(arith.one(), |acc, _| arith.mul(&acc, h));
    arith.div(&sum, &hm).unwrap()
}

#[test]
fn arctan_kernel_derivatives_match_finite_differences() {
    let arith = Float::new(80).unwrap();
    let h = Real::parse("1e-9", 80).unwrap();
    let kernel = Integrand::arctan_kernel(Rat::one());
    for center in ["1/3", "2/5", "7/9", "1/10"] {
        let t = arith.from_rat(&q(center));
        let jet = kernel.jet(&arith, &t, 6).unwrap();
        for m in 1..=6u32 {
            let fd = central_difference(&arith, &t, &h, m);
            let exact = jet.derivative(&arith, m).unwrap();
            let rel = (&fd - &exact).abs().checked_div(&exact.abs()).unwrap().to_f64();
            assert!(rel < 1e-6, "m={m} t={center} rel={rel}");
        }
    }
}

#[test]
fn reciprocal_matches_long_division() {
    // 1 ÷ (1 + e + e² + e³) by hand: quotient 1 - e, remainder e⁴ terms only.
    let a = Jet::from_coeffs(Rat::zero(), ["1", "1", "1", "1"].map(q).to_vec());
    let b = a.reciprocal(&Exact).unwrap();
    assert_eq!(b.coeffs(), &["1", "-1", "0", "0"].map(q));
    let one = a.mul(&b, &Exact).unwrap();
    assert_eq!(one.coeffs(), &["1", "0", "0", "0"].map(q));
}

/// Brute-force midpoint sum of 1/(1+t²) in f64.
fn midpoint_f64(l: u32) -> f64 {
    (1..=l)
        .map(|i| {
            let t = (i as f64 - 0.5) / l as f64;
            1.0 / (1.0 + t * t)
        })
        .sum::<f64>()
        / l as f64
}

#[test]
fn midpoint_order_matches_brute_force() {
    let quarter_pi = std::f64::consts::FRAC_PI_4;
    let oracle = ((quarter_pi - midpoint_f64(8)).abs() / (quarter_pi - midpoint_f64(16)).abs()).log2();
    assert!((oracle - 2.0).abs() <= 0.3, "{oracle}");
    let report = convergence_scan(&[8, 16], &[0], Mode::Float, 40).unwrap();
    let p = report.rows[1].est_order.unwrap();
    assert!((p - oracle).abs() < 1e-6, "{p} vs {oracle}");
}

/// Lower and upper bounds on arctan(1/n) from the alternating series.
fn arctan_inverse_bounds(n: i64, terms: u32) -> (Rat, Rat) {
    let x = Rat::new(1, n).unwrap();
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut partial = Rat::zero();
    for k in 0..terms {
        let term = power.checked_div(&Rat::from(2 * k as i64 + 1)).unwrap();
        partial = if k % 2 == 0 { &partial + &term } else { &partial - &term };
        power = &power * &x2;
    }
    // The next term bounds the tail; its sign follows the alternation.
    let next = power.checked_div(&Rat::from(2 * terms as i64 + 1)).unwrap();
    let other = if terms.is_multiple_of(2) { &partial + &next } else { &partial - &next };
    if partial < other {
        (partial, other)
    } else {
        (other, partial)
    }
}

#[test]
fn reference_pi_agrees_with_machin_formula() {
    // π = 16 arctan(1/5) - 4 arctan(1/239)
    let (lo5, hi5) = arctan_inverse_bounds(5, 100);
    let (lo239, hi239) = arctan_inverse_bounds(239, 30);
    let lo = &(&Rat::from(16) * &lo5) - &(&Rat::from(4) * &hi239);
    let hi = &(&Rat::from(16) * &hi5) - &(&Rat::from(4) * &lo239);
    assert!((&hi - &lo) < Rat::new(1, 10).unwrap().pow(130));
    let digits = 125;
    assert_eq!(lo.render_truncated(digits), PI_DIGITS);
    assert_eq!(hi.render_truncated(digits), PI_DIGITS);
    assert!(ReferencePi::standard().has_published_prefix());
}
