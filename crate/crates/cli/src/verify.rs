//! `verify`: runs every identity the library relies on, up to a size bound,
//! with seeded random instances where a property quantifies over arguments.
//!
//! Properties are independent, so they run on scoped threads; each gets its
//! own RNG derived from the seed and its position, which keeps the report
//! byte-identical across runs.

use std::fmt::Write;
use std::thread;

use bernoulli_euler_core::arith::pow;
use bernoulli_euler_core::closed::is_monic_of_degree;
use bernoulli_euler_core::determinant::is_lower_hessenberg;
use bernoulli_euler_core::series::default_order;
use bernoulli_euler_core::{
    bell_harmonic, bell_partial, bell_partial_enum, bernoulli_number_closed, bernoulli_number_qi,
    bernoulli_poly_closed, beta_seq, binomial, det_exact, det_minor_oracle, euler_number_closed,
    euler_poly_closed, factorial, gamma_seq, hessenberg_expression, oracle_bernoulli, oracle_euler,
    quotient_derivative, stirling2, BellArgs, JetPair, Rational, StirlingTable, TruncatedSeries,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Negative control: add 1 to `γ_1` before the determinant route sees it.
    pub corrupt_gamma_1: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 10,
            seed: 1,
            corrupt_gamma_1: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    /// Number of individual equalities checked, or the first failure.
    pub outcome: Result<usize, String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            match &r.outcome {
                Ok(checks) => {
                    let _ = writeln!(out, "PASS {} ({checks} checks)", r.name);
                }
                Err(why) => {
                    let _ = writeln!(out, "FAIL {}: {why}", r.name);
                }
            }
        }
        let passed = self.results.iter().filter(|r| r.passed()).count();
        let _ = writeln!(out, "{passed}/{} properties passed", self.results.len());
        out
    }
}

type Check = fn(&Ctx, &mut ChaCha8Rng) -> Result<usize, String>;

struct Ctx {
    max_n: usize,
    corrupt_gamma_1: bool,
    table: StirlingTable,
    alphas: Vec<Rational>,
    xs: Vec<Rational>,
}

const PROPERTIES: &[(&str, Check)] = &[
    ("route-equivalence-bernoulli", route_equivalence_bernoulli),
    ("route-equivalence-euler", route_equivalence_euler),
    (
        "classical-reduction-bernoulli",
        classical_reduction_bernoulli,
    ),
    ("classical-reduction-euler", classical_reduction_euler),
    ("classical-values", classical_values),
    (
        "bernoulli-number-two-formulas",
        bernoulli_number_two_formulas,
    ),
    ("euler-number-half-point", euler_number_half_point),
    ("monic-degree", monic_degree),
    ("gamma-beta-series", gamma_beta_series),
    ("bell-ones-stirling", bell_ones_stirling),
    ("bell-homogeneity", bell_homogeneity),
    ("bell-harmonic", bell_harmonic_values),
    ("bell-recurrence-enumeration", bell_recurrence_enumeration),
    ("stirling-egf", stirling_egf),
    ("faa-di-bruno", faa_di_bruno),
    ("quotient-derivative", quotient_derivative_series),
    ("determinant-cofactor", determinant_cofactor),
    ("series-addition-theorem", series_addition_theorem),
];

pub fn cmd_verify(opts: &VerifyOptions) -> Report {
    let ctx = Ctx {
        max_n: opts.max_n,
        corrupt_gamma_1: opts.corrupt_gamma_1,
        table: StirlingTable::new(2 * opts.max_n.max(1)),
        alphas: ["-2", "-1/2", "1", "2", "3", "7/3"]
            .iter()
            .map(|s| lit(s))
            .collect(),
        xs: ["0", "1", "1/2", "-3/4"].iter().map(|s| lit(s)).collect(),
    };
    let results = thread::scope(|scope| {
        let handles: Vec<_> = PROPERTIES
            .iter()
            .enumerate()
            .map(|(i, &(name, check))| {
                let ctx = &ctx;
                let seed = opts
                    .seed
                    .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                    .wrapping_add(i as u64);
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    PropertyResult {
                        name,
                        outcome: check(ctx, &mut rng),
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("property check panicked"))
            .collect()
    });
    Report { results }
}

fn lit(s: &str) -> Rational {
    bernoulli_euler_core::parse_rational(s).expect("literal")
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    let p: i64 = rng.random_range(-30..=30);
    let q: i64 = rng.random_range(1..=12);
    Rational::new(p.into(), q.into())
}

fn random_vec(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expect_eq(what: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {lhs} != {rhs}", what()))
    }
}

fn route_equivalence_bernoulli(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for alpha in &ctx.alphas {
        let mut gamma = gamma_seq(ctx.max_n, alpha, &ctx.table).map_err(err)?;
        if ctx.corrupt_gamma_1 && gamma.len() > 1 {
            gamma[1] += Rational::one();
        }
        for n in 0..=ctx.max_n {
            let poly = bernoulli_poly_closed(n, alpha, &ctx.table).map_err(err)?;
            for x in &ctx.xs {
                let closed = poly.eval(x);
                let det = hessenberg_expression(n, x, &gamma[..=n]).map_err(err)?;
                let series = oracle_bernoulli(n, alpha, x, default_order(n)).map_err(err)?;
                let at = || format!("n={n} alpha={alpha} x={x}");
                expect_eq(|| format!("closed vs det at {}", at()), &closed, &det)?;
                expect_eq(|| format!("closed vs series at {}", at()), &closed, &series)?;
                checks += 2;
            }
        }
    }
    Ok(checks)
}

fn route_equivalence_euler(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for alpha in &ctx.alphas {
        let beta = beta_seq(ctx.max_n, alpha, &ctx.table).map_err(err)?;
        for n in 0..=ctx.max_n {
            let poly = euler_poly_closed(n, alpha, &ctx.table).map_err(err)?;
            for x in &ctx.xs {
                let closed = poly.eval(x);
                let det = hessenberg_expression(n, x, &beta[..=n]).map_err(err)?;
                let series = oracle_euler(n, alpha, x, default_order(n)).map_err(err)?;
                let at = || format!("n={n} alpha={alpha} x={x}");
                expect_eq(|| format!("closed vs det at {}", at()), &closed, &det)?;
                expect_eq(|| format!("closed vs series at {}", at()), &closed, &series)?;
                checks += 2;
            }
        }
    }
    Ok(checks)
}

fn classical_reduction_bernoulli(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let one = Rational::one();
    let mut checks = 0;
    for n in 0..=ctx.max_n {
        let poly = bernoulli_poly_closed(n, &one, &ctx.table).map_err(err)?;
        for x in &ctx.xs {
            let series = oracle_bernoulli(n, &one, x, default_order(n)).map_err(err)?;
            expect_eq(|| format!("B_{n}({x})"), &poly.eval(x), &series)?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn classical_reduction_euler(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let one = Rational::one();
    let mut checks = 0;
    for n in 0..=ctx.max_n {
        let poly = euler_poly_closed(n, &one, &ctx.table).map_err(err)?;
        for x in &ctx.xs {
            let series = oracle_euler(n, &one, x, default_order(n)).map_err(err)?;
            expect_eq(|| format!("E_{n}({x})"), &poly.eval(x), &series)?;
            checks += 1;
        }
    }
    Ok(checks)
}

// B_1, B_2, B_3 from the Bernoulli recurrence and E_1, E_2 from the Euler
// recurrence, compared against the closed forms.
fn classical_values(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let one = Rational::one();
    let upto = ctx.max_n.min(3);
    let mut b: Vec<Rational> = vec![one.clone()];
    for n in 1..=upto {
        let acc = (0..n).fold(Rational::zero(), |acc, k| acc + binomial(n + 1, k) * &b[k]);
        b.push(-acc / int(n as i64 + 1));
    }
    // 2 E_n(1/2) + Σ_{k<n} C(n,k) E_k(1/2) = 2 (1/2)^n
    let half = lit("1/2");
    let mut e: Vec<Rational> = Vec::new();
    for n in 0..=ctx.max_n.min(2) {
        let acc = (0..n).fold(pow(&half, n) * int(2), |acc, k| {
            acc - binomial(n, k) * &e[k]
        });
        e.push(acc / int(2));
    }
    let mut checks = 0;
    for (n, bn) in b.iter().enumerate() {
        let closed = bernoulli_number_closed(n, &one, &ctx.table).map_err(err)?;
        expect_eq(|| format!("B_{n}"), &closed, bn)?;
        checks += 1;
    }
    for (n, en) in e.iter().enumerate() {
        let closed = euler_number_closed(n, &one, &ctx.table).map_err(err)?;
        expect_eq(|| format!("E_{n}"), &closed, &(en * pow(&int(2), n)))?;
        checks += 1;
    }
    let expected = [("1", 0usize), ("-1/2", 1), ("1/6", 2), ("0", 3)];
    for (v, n) in expected.iter().filter(|(_, n)| *n < b.len()) {
        expect_eq(|| format!("recurrence B_{n}"), &b[*n], &lit(v))?;
        checks += 1;
    }
    Ok(checks)
}

fn bernoulli_number_two_formulas(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let one = Rational::one();
    for n in 0..=ctx.max_n {
        let a = bernoulli_number_closed(n, &one, &ctx.table).map_err(err)?;
        let b = bernoulli_number_qi(n, &ctx.table).map_err(err)?;
        expect_eq(|| format!("n={n}"), &a, &b)?;
    }
    Ok(ctx.max_n + 1)
}

fn euler_number_half_point(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let half = lit("1/2");
    let mut checks = 0;
    for alpha in &ctx.alphas {
        for n in 0..=ctx.max_n {
            let number = euler_number_closed(n, alpha, &ctx.table).map_err(err)?;
            let poly = euler_poly_closed(n, alpha, &ctx.table).map_err(err)?;
            let scaled = poly.eval(&half) * pow(&int(2), n);
            expect_eq(|| format!("n={n} alpha={alpha}"), &number, &scaled)?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn monic_degree(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for alpha in &ctx.alphas {
        for n in 0..=ctx.max_n {
            let b = bernoulli_poly_closed(n, alpha, &ctx.table).map_err(err)?;
            let e = euler_poly_closed(n, alpha, &ctx.table).map_err(err)?;
            if !is_monic_of_degree(&b, n) {
                return Err(format!("B_{n}^({alpha}) not monic of degree {n}"));
            }
            if !is_monic_of_degree(&e, n) {
                return Err(format!("E_{n}^({alpha}) not monic of degree {n}"));
            }
            checks += 2;
        }
    }
    Ok(checks)
}

fn gamma_beta_series(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let order = ctx.max_n + 1;
    let mut checks = 0;
    for alpha in &ctx.alphas {
        let gamma = gamma_seq(ctx.max_n, alpha, &ctx.table).map_err(err)?;
        let beta = beta_seq(ctx.max_n, alpha, &ctx.table).map_err(err)?;
        let gs = TruncatedSeries::exp_minus_one_over_t(order)
            .pow(alpha)
            .map_err(err)?;
        let bs = TruncatedSeries::exp_plus_one_over_two(order)
            .pow(alpha)
            .map_err(err)?;
        for n in 0..=ctx.max_n {
            expect_eq(
                || format!("gamma_{n} alpha={alpha}"),
                &gamma[n],
                &gs.egf_coeff(n),
            )?;
            expect_eq(
                || format!("beta_{n} alpha={alpha}"),
                &beta[n],
                &bs.egf_coeff(n),
            )?;
            checks += 2;
        }
    }
    Ok(checks)
}

fn bell_ones_stirling(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(14);
    let mut checks = 0;
    for n in 0..=upto {
        let xs = BellArgs::ones(n + 1);
        for k in 0..=n {
            let b = bell_partial(n, k, &xs).map_err(err)?;
            expect_eq(|| format!("B_{{{n},{k}}}(1,...,1)"), &b, &stirling2(n, k))?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn bell_homogeneity(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(10);
    for _ in 0..100 {
        let n = rng.random_range(0..=upto);
        let k = rng.random_range(0..=n);
        let a = random_rational(rng);
        let b = random_rational(rng);
        let raw = random_vec(rng, n + 1);
        let scaled: Vec<Rational> = raw
            .iter()
            .enumerate()
            .map(|(i, x)| &a * pow(&b, i + 1) * x)
            .collect();
        let lhs = bell_partial(n, k, &BellArgs::new(scaled)).map_err(err)?;
        let rhs = pow(&a, k) * pow(&b, n) * bell_partial(n, k, &BellArgs::new(raw)).map_err(err)?;
        expect_eq(|| format!("n={n} k={k} a={a} b={b}"), &lhs, &rhs)?;
    }
    Ok(100)
}

fn bell_harmonic_values(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(12);
    let mut checks = 0;
    for n in 1..=upto {
        for k in 1..=n {
            let closed = bell_harmonic(n, k).map_err(err)?;
            let direct = bell_partial_enum(n, k, &BellArgs::harmonic(n - k + 1)).map_err(err)?;
            expect_eq(|| format!("n={n} k={k}"), &closed, &direct)?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn bell_recurrence_enumeration(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(10);
    for _ in 0..100 {
        let n = rng.random_range(0..=upto);
        let k = rng.random_range(0..=n);
        let xs = BellArgs::new(random_vec(rng, n + 1));
        let rec = bell_partial(n, k, &xs).map_err(err)?;
        let direct = bell_partial_enum(n, k, &xs).map_err(err)?;
        expect_eq(|| format!("n={n} k={k}"), &rec, &direct)?;
    }
    Ok(100)
}

fn stirling_egf(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let order = ctx.max_n + 1;
    let e_minus_one = TruncatedSeries::exp_linear(&Rational::one(), order)
        .add(&TruncatedSeries::constant(-Rational::one(), order))
        .map_err(err)?;
    let mut power = TruncatedSeries::one(order);
    let mut checks = 0;
    for k in 0..=ctx.max_n.min(8) {
        if k > 0 {
            power = power.mul(&e_minus_one).map_err(err)?;
        }
        let egf = power.scale(&factorial(k).recip());
        for n in 0..order {
            expect_eq(
                || format!("S({n},{k})"),
                &egf.egf_coeff(n),
                &stirling2(n, k),
            )?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn faa_di_bruno(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(8);
    let order = upto + 1;
    let mut checks = 0;
    for _ in 0..100 {
        let f = TruncatedSeries::new(random_vec(rng, order), order);
        let mut h_coeffs = random_vec(rng, order);
        h_coeffs[0] = Rational::zero();
        let h = TruncatedSeries::new(h_coeffs, order);
        let comp = f.compose(&h).map_err(err)?;
        let h_jet = BellArgs::new((1..order).map(|i| h.egf_coeff(i)).collect());
        for n in 0..=upto {
            let mut sum = Rational::zero();
            for k in 0..=n {
                sum += f.egf_coeff(k) * bell_partial_enum(n, k, &h_jet).map_err(err)?;
            }
            expect_eq(|| format!("n={n}"), &comp.egf_coeff(n), &sum)?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn quotient_derivative_series(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(8);
    let len = upto + 1;
    for _ in 0..200 {
        let p = random_vec(rng, len);
        let mut q = random_vec(rng, len);
        while q[0].is_zero() {
            q[0] = random_rational(rng);
        }
        let k = rng.random_range(0..=upto);
        let ps = TruncatedSeries::from_egf(&p, len);
        let qs = TruncatedSeries::from_egf(&q, len);
        let expected = ps.mul(&qs.inv().map_err(err)?).map_err(err)?.egf_coeff(k);
        let jets = JetPair::new(p, q).map_err(err)?;
        let got = quotient_derivative(&jets, k).map_err(err)?;
        expect_eq(|| format!("k={k}"), &got, &expected)?;
    }
    Ok(200)
}

fn determinant_cofactor(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<usize, String> {
    let upto = ctx.max_n.min(6);
    let mut checks = 0;
    for alpha in &ctx.alphas {
        let gamma = gamma_seq(upto, alpha, &ctx.table).map_err(err)?;
        let beta = beta_seq(upto, alpha, &ctx.table).map_err(err)?;
        for x in &ctx.xs {
            let powers: Vec<Rational> = (0..=upto).map(|i| pow(x, i)).collect();
            for seq in [&gamma, &beta] {
                let jets = JetPair::new(powers.clone(), seq.clone()).map_err(err)?;
                for k in 0..=upto {
                    let w = jets.quotient_matrix(k).map_err(err)?;
                    if !is_lower_hessenberg(&w) {
                        return Err(format!("matrix for k={k} is not lower Hessenberg"));
                    }
                    let oracle = det_minor_oracle(&w).map_err(err)?;
                    expect_eq(
                        || format!("k={k} alpha={alpha} x={x}"),
                        &det_exact(&w),
                        &oracle,
                    )?;
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

fn series_addition_theorem(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for _ in 0..4 {
        let (a, b) = (random_rational(rng), random_rational(rng));
        let (x, y) = (random_rational(rng), random_rational(rng));
        for n in 0..=ctx.max_n {
            let lhs = oracle_bernoulli(n, &(&a + &b), &(&x + &y), default_order(n)).map_err(err)?;
            let mut rhs = Rational::zero();
            for k in 0..=n {
                let left = oracle_bernoulli(k, &a, &x, default_order(k)).map_err(err)?;
                let right = oracle_bernoulli(n - k, &b, &y, default_order(n - k)).map_err(err)?;
                rhs += binomial(n, k) * left * right;
            }
            expect_eq(|| format!("n={n} alpha={a}+{b} x={x}+{y}"), &lhs, &rhs)?;
            checks += 1;
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = cmd_verify(&VerifyOptions {
            max_n: 6,
            seed: 3,
            corrupt_gamma_1: false,
        });
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.results.len(), PROPERTIES.len());
    }

    #[test]
    fn zero_bound_is_vacuous() {
        let report = cmd_verify(&VerifyOptions {
            max_n: 0,
            seed: 1,
            corrupt_gamma_1: false,
        });
        assert!(report.all_passed(), "{}", report.render());
    }

    #[test]
    fn corrupted_gamma_is_caught() {
        let report = cmd_verify(&VerifyOptions {
            max_n: 4,
            seed: 1,
            corrupt_gamma_1: true,
        });
        let failed: Vec<_> = report.failed().map(|r| r.name).collect();
        assert_eq!(failed, vec!["route-equivalence-bernoulli"]);
    }

    #[test]
    fn report_is_deterministic() {
        let opts = VerifyOptions {
            max_n: 5,
            seed: 42,
            corrupt_gamma_1: false,
        };
        assert_eq!(cmd_verify(&opts).render(), cmd_verify(&opts).render());
    }
}
