use std::fmt;
use std::str::FromStr;

use derangement_core::algebra::paper_nq_factorial;
use derangement_core::characters::{
    dimension_check, fz_positivity, hat_tau_blocks, hat_tau_closed_form, hat_tau_psi, kirillov_identity_residual,
    psi_in_sigma, psi_values, restrict, sigma_coords_to_psi, sigma_in_psi, sigma_values, steinberg_threshold,
};
use derangement_core::cone::{branch_tau_check, eigendiagrams, eliminate_with_budget, stable_mismatch, ConeBasis};
use derangement_core::oracle::{certify_psd, count_fixed, enumerate_gl, r_of, PsdVerdict, FIXED_POINT_GUARD};
use derangement_core::{Budget, CoeffTable, DerangementValues, Error, Partition, PsiCoeffs, RatFunc};
use num_rational::BigRational;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Transforms,
    Branching,
    Kirillov,
    HatTau,
    Dimension,
    Fz,
    Stable,
    Oracle,
    Psd,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Transforms,
        Suite::Branching,
        Suite::Kirillov,
        Suite::HatTau,
        Suite::Dimension,
        Suite::Fz,
        Suite::Stable,
        Suite::Oracle,
        Suite::Psd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Transforms => "transforms",
            Suite::Branching => "branching",
            Suite::Kirillov => "kirillov",
            Suite::HatTau => "hat-tau",
            Suite::Dimension => "dimension",
            Suite::Fz => "fz",
            Suite::Stable => "stable",
            Suite::Oracle => "oracle",
            Suite::Psd => "psd",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n_max: usize,
    /// `(n, p)` pairs for the finite-group suites.
    pub groups: Vec<(usize, u32)>,
    pub z: Option<BigRational>,
    pub q: Option<BigRational>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            groups: vec![(2, 2), (2, 3), (3, 2)],
            z: None,
            q: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
    pub info: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failure: None,
            info: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.suite, self.checks)?;
        if let Some(c) = &self.failure {
            write!(f, "\n  counterexample: {c}")?;
        }
        for i in &self.info {
            write!(f, "\n  {i}")?;
        }
        Ok(())
    }
}

/// Lazily built tables and bases, shared across suites.
struct Levels<'a, B: ?Sized> {
    budget: &'a B,
    tables: Vec<Option<CoeffTable>>,
    bases: Vec<Option<ConeBasis>>,
    source: &'a dyn Fn(usize, &B) -> Result<CoeffTable>,
}

impl<'a, B: Budget + ?Sized> Levels<'a, B> {
    fn table(&mut self, n: usize) -> Result<&CoeffTable> {
        if self.tables.len() <= n {
            self.tables.resize(n + 1, None);
        }
        if self.tables[n].is_none() {
            self.tables[n] = Some((self.source)(n, self.budget)?);
        }
        Ok(self.tables[n].as_ref().unwrap())
    }

    fn basis(&mut self, n: usize) -> Result<&ConeBasis> {
        if self.bases.len() <= n {
            self.bases.resize(n + 1, None);
        }
        if self.bases[n].is_none() {
            let budget = self.budget;
            let b = eliminate_with_budget(self.table(n)?, budget)?;
            self.bases[n] = Some(b);
        }
        Ok(self.bases[n].as_ref().unwrap())
    }

    fn poll(&self) -> Result<()> {
        if self.budget.exhausted() {
            return Err(Error::BudgetExceeded.into());
        }
        Ok(())
    }
}

/// Run `suites`, building coefficient tables with `source` (e.g. through the
/// cache).
pub fn run<B: Budget + ?Sized>(
    suites: &[Suite],
    cfg: &VerifyConfig,
    budget: &B,
    source: &dyn Fn(usize, &B) -> Result<CoeffTable>,
) -> Result<Vec<SuiteReport>> {
    let mut lv = Levels {
        budget,
        tables: Vec::new(),
        bases: Vec::new(),
        source,
    };
    suites
        .iter()
        .map(|&s| match s {
            Suite::Transforms => transforms(cfg, &mut lv),
            Suite::Branching => branching(cfg, &mut lv),
            Suite::Kirillov => kirillov(cfg, &mut lv),
            Suite::HatTau => hat_tau(cfg, &mut lv),
            Suite::Dimension => dimension(cfg, &mut lv),
            Suite::Fz => fz(cfg, &mut lv),
            Suite::Stable => stable(cfg, &mut lv),
            Suite::Oracle => oracle(cfg, &lv),
            Suite::Psd => psd(cfg, &mut lv),
        })
        .collect()
}

fn transforms<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Transforms);
    for n in 0..=cfg.n_max {
        lv.poll()?;
        for k in 0..=n {
            let s = sigma_in_psi(n, k);
            let mut back = vec![RatFunc::zero(); n + 1];
            for (j, c) in s.coeffs().iter().enumerate() {
                for (i, d) in psi_in_sigma(n, j).into_iter().enumerate() {
                    back[i] = &back[i] + &(c * &RatFunc::from_poly(d));
                }
            }
            let mut unit = vec![RatFunc::zero(); n + 1];
            unit[k] = RatFunc::one();
            rep.check(back == unit, || format!("σ_{k} at level {n} does not round-trip"));
            rep.check(sigma_coords_to_psi(n, &unit) == s, || {
                format!("σ-coordinates of σ_{k} at level {n}")
            });
        }
        let t = lv.table(n)?.clone();
        let b = lv.basis(n)?;
        for k in 0..=n {
            let x = PsiCoeffs::unit(n, k);
            rep.check(b.tau_to_psi(&b.psi_to_tau(&x)) == x, || {
                format!("ψ_{k} at level {n}: ψ → τ → ψ")
            });
            let back = PsiCoeffs::from_blocks(&x.to_blocks(&t), &t);
            rep.check(back.as_ref() == Ok(&x), || {
                format!("ψ_{k} at level {n}: ψ → blocks → ψ")
            });
        }
    }
    Ok(rep)
}

fn branching<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Branching);
    for n in 1..=cfg.n_max {
        lv.poll()?;
        for k in 0..n {
            let lhs = restrict(&sigma_values(n, k));
            let rhs = sigma_values(n - 1, k).scale(&RatFunc::q_pow(k as i64));
            rep.check(lhs == rhs, || format!("σ_{k} at level {n}"));
        }
        for k in 1..=n {
            let lhs = restrict(&psi_values(n, k));
            let c1 = RatFunc::q_pow(2 * k as i64 - 1) - RatFunc::q_pow(k as i64 - 1);
            let mut rhs = psi_values(n - 1, k - 1).scale(&c1);
            if k < n {
                rhs = rhs.add(&psi_values(n - 1, k).scale(&RatFunc::q_pow(k as i64)));
            }
            rep.check(lhs == rhs, || format!("ψ_{k} at level {n}"));
        }
        let upper = lv.basis(n)?.clone();
        let lower = lv.basis(n - 1)?;
        for k in 0..=(n - 1) / 2 {
            rep.check(branch_tau_check(&upper, lower, k), || format!("τ_{k} at level {n}"));
        }
    }
    Ok(rep)
}

fn kirillov<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Kirillov);
    for n in 1..=cfg.n_max {
        let t = lv.table(n)?.clone();
        for l in t.partitions().iter().filter(|l| l.size() == n) {
            lv.poll()?;
            let r = kirillov_identity_residual(&t, l)?;
            rep.check(r.is_zero(), || format!("residual {} at {l}", r.render("q")));
        }
    }
    Ok(rep)
}

fn hat_tau<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::HatTau);
    let mut top = Vec::new();
    for n in 1..=cfg.n_max {
        lv.poll()?;
        let t = lv.table(n)?;
        let psi = hat_tau_psi(n);
        rep.check(psi.to_blocks(t) == hat_tau_blocks(t), || {
            format!("level {n}: the two constructions differ")
        });
        let v = psi.values();
        for r in 0..n {
            let want = -(paper_nq_factorial(n - 1) * paper_nq_factorial(r));
            rep.check(hat_tau_closed_form(n, r) == want, || {
                format!("closed form at n={n}, r={r}")
            });
            rep.check(*v.at(r) == RatFunc::from_poly(want), || {
                format!("value at n={n}, r={r}")
            });
        }
        let at_n = RatFunc::from_poly(hat_tau_closed_form(n, n)) == *v.at(n);
        top.push(format!("n={n}: {}", if at_n { "agrees" } else { "differs" }));
    }
    rep.info
        .push(format!("closed form at r = n (diagnostic): {}", top.join(", ")));
    Ok(rep)
}

fn dimension<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Dimension);
    for n in 0..=cfg.n_max {
        lv.poll()?;
        let t = lv.table(n)?.clone();
        let b = lv.basis(n)?;
        for k in 0..=n {
            let cases: [(&str, _, DerangementValues); 3] = [
                ("ψ", t.psi_block(k), psi_values(n, k)),
                ("σ", sigma_in_psi(n, k).to_blocks(&t), sigma_values(n, k)),
                ("τ", b.tau(k).clone(), b.tau_psi(k).values()),
            ];
            for (name, blocks, values) in cases {
                let ok = dimension_check(&blocks, &values)?;
                rep.check(ok, || format!("{name}_{k} at level {n}"));
            }
        }
    }
    Ok(rep)
}

fn fz<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Fz);
    let Some(zq) = &cfg.z else {
        for n in 0..=cfg.n_max {
            lv.poll()?;
            let t = lv.table(n)?;
            for k in 0..=n {
                let r = fz_positivity(t, &RatFunc::q_pow(-(k as i64)), cfg.q.as_ref())?;
                rep.check(r.is_character, || {
                    let b = r
                        .first_negative_block
                        .as_ref()
                        .map(ToString::to_string)
                        .unwrap_or_default();
                    format!("z = q^-{k} at level {n}: negative block {b}")
                });
            }
        }
        return Ok(rep);
    };
    let z = RatFunc::from_rational(zq);
    let mut first_steinberg = None;
    let mut first_block = None;
    for n in 1..=cfg.n_max {
        lv.poll()?;
        let t = lv.table(n)?;
        let r = fz_positivity(t, &z, cfg.q.as_ref())?;
        if r.steinberg_negative && first_steinberg.is_none() {
            first_steinberg = Some(n);
        }
        if !r.is_character && first_block.is_none() {
            first_block = Some((n, r.first_negative_block.clone()));
        }
        if let Some(q) = &cfg.q {
            let predicted = steinberg_threshold(n, q).is_some_and(|t| *zq < t);
            rep.check(r.steinberg_negative == predicted, || {
                format!(
                    "level {n}: Steinberg coefficient negative = {}, threshold predicts {predicted}",
                    r.steinberg_negative
                )
            });
        }
    }
    let at = cfg
        .q
        .as_ref()
        .map_or_else(|| String::from("q > 1"), |q| format!("q = {q}"));
    rep.info.push(match first_steinberg {
        Some(n) => format!("first n with a negative [1^n] coefficient (z = {zq}, {at}): {n}"),
        None => format!("no negative [1^n] coefficient for n <= {} (z = {zq}, {at})", cfg.n_max),
    });
    rep.info.push(match first_block {
        Some((n, l)) => format!(
            "first n with a negative block: {n} at {}",
            l.map_or_else(|| String::from("?"), |l| l.to_string())
        ),
        None => format!("all blocks nonnegative for n <= {}", cfg.n_max),
    });
    Ok(rep)
}

fn stable<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Stable);
    for n in 0..=cfg.n_max {
        lv.poll()?;
        let t = lv.table(n)?.clone();
        let b = lv.basis(n)?;
        let m = stable_mismatch(&t, b)?;
        rep.check(m.is_none(), || {
            format!("closed form differs from elimination at n={n}, k={}", m.unwrap())
        });
        let e = eigendiagrams(b.taus());
        for (k, got) in e.iter().enumerate().take(n / 2 + 1) {
            let want = match (n, k) {
                (0, _) => Partition::empty(),
                (_, 0) => Partition::row(n),
                _ => Partition::from_slice(&[n - k, k]),
            };
            rep.check(got.as_ref() == Some(&want), || {
                format!("eigendiagram of τ_{k} at level {n}")
            });
        }
    }
    Ok(rep)
}

fn oracle<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Oracle);
    for &(n, p) in &cfg.groups {
        let group = enumerate_gl(n, p)?;
        let x = BigRational::from_integer(p.into());
        let ks: Vec<usize> = (0..=n.min(3))
            .filter(|&k| {
                (p as u64)
                    .checked_pow((n * k) as u32)
                    .is_some_and(|t| t <= FIXED_POINT_GUARD)
            })
            .collect();
        let evaluated = |v: DerangementValues| v.eval(&x).expect("polynomial values");
        let sigma: Vec<_> = ks.iter().map(|&k| evaluated(sigma_values(n, k))).collect();
        let psi: Vec<_> = ks.iter().map(|&k| evaluated(psi_values(n, k))).collect();
        for g in &group {
            lv.poll()?;
            let r = r_of(g);
            for (i, &k) in ks.iter().enumerate() {
                let all = BigRational::from_integer(count_fixed(g, k, false)?.into());
                let full = BigRational::from_integer(count_fixed(g, k, true)?.into());
                rep.check(all == sigma[i][r], || format!("σ_{k} on {g:?} over F_{p}"));
                rep.check(full == psi[i][r], || format!("ψ_{k} on {g:?} over F_{p}"));
            }
            rep.check(r_of(&g.direct_sum_one()) == r + 1, || format!("embedding of {g:?}"));
            let inv = g.inverse().expect("group element");
            rep.check(r_of(&inv) == r, || format!("inverse of {g:?}"));
        }
        rep.info
            .push(format!("GL({n},{p}): {} elements, k in {ks:?}", group.len()));
    }
    Ok(rep)
}

fn psd<B: Budget + ?Sized>(cfg: &VerifyConfig, lv: &mut Levels<B>) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Psd);
    for &(n, p) in &cfg.groups {
        let group = enumerate_gl(n, p)?;
        let x = BigRational::from_integer(p.into());
        let b = lv.basis(n)?.clone();
        let mut fs: Vec<(String, DerangementValues)> = Vec::new();
        for k in 0..=n {
            fs.push((format!("ψ_{k}"), psi_values(n, k)));
            fs.push((format!("σ_{k}"), sigma_values(n, k)));
            fs.push((format!("τ_{k}"), b.tau_psi(k).values()));
        }
        if n >= 1 {
            fs.push((String::from("hat τ"), hat_tau_psi(n).values()));
        }
        for (name, f) in fs {
            lv.poll()?;
            let Some(v) = f.eval(&x) else {
                rep.check(false, || format!("{name} has a pole at q = {p}"));
                continue;
            };
            let verdict = certify_psd(&v, &group)?;
            rep.check(verdict.is_psd(), || format!("{name} on GL({n},{p}): {verdict:?}"));
        }
        let mut bad: Vec<BigRational> = vec![BigRational::from_integer(1.into()); n + 1];
        bad[n] = BigRational::from_integer((-1).into());
        let verdict = certify_psd(&bad, &group)?;
        let certified =
            matches!(&verdict, PsdVerdict::NotPsd { minor, .. } if *minor < BigRational::from_integer(0.into()));
        rep.check(certified, || format!("corrupted function on GL({n},{p}) not rejected"));
        if let PsdVerdict::NotPsd { indices, minor } = verdict {
            rep.info.push(format!(
                "GL({n},{p}): corrupted function rejected, principal minor on {} elements = {minor}",
                indices.len()
            ));
        }
    }
    Ok(rep)
}
