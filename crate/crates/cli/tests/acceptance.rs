//! One PASS/FAIL line per acceptance criterion.
//!
//! `DERANGEMENT_ACCEPTANCE_BUDGET` sets the level-10 time budget in seconds
//! (default 600).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use derangement_cli::{Basis, BasisTable, WallClock};
use derangement_core::algebra::{frame_count, paper_nq_factorial, ratfunc_sign_on_q_gt_1};
use derangement_core::characters::*;
use derangement_core::cone::*;
use derangement_core::oracle::*;
use derangement_core::partition::{partitions_of, Partition};
use derangement_core::{CoeffTable, Error, IntPoly, RatFunc, SignVerdict, Unlimited};
use num_rational::BigRational;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn rf(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(p(c))
}

fn part(s: &[usize]) -> Partition {
    Partition::from_slice(s)
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn sign(c: &RatFunc) -> char {
    match ratfunc_sign_on_q_gt_1(c) {
        SignVerdict::ZeroEverywhere => '0',
        SignVerdict::PositiveOnQgt1 | SignVerdict::NonNegativeOnQgt1 => '+',
        _ => '-',
    }
}

type Row = (&'static [usize], [&'static [i64]; 5]);

const PSI4: [Row; 12] = [
    (&[4], [&[1], &[1], &[1], &[1], &[1]]),
    (&[3, 1], [&[], &[1], &[1, 1], &[1, 1, 1], &[0, 1, 1, 1]]),
    (&[2, 2], [&[], &[], &[1], &[0, 1, 1], &[0, 0, 1, 0, 1]]),
    (&[2, 1, 1], [&[], &[], &[0, 1], &[0, 1, 1, 1], &[0, 0, 0, 1, 1, 1]]),
    (&[1, 1, 1, 1], [&[], &[], &[], &[0, 0, 0, 1], &[0, 0, 0, 0, 0, 0, 1]]),
    (&[3], [&[], &[1], &[1, 1], &[1, 1, 1], &[1, 1, 1, 1]]),
    (&[2, 1], [&[], &[], &[1, 1], &[1, 2, 2, 1], &[0, 1, 2, 2, 2, 1]]),
    (&[1, 1, 1], [&[], &[], &[], &[0, 1, 1, 1], &[0, 0, 0, 1, 1, 1, 1]]),
    (&[2], [&[], &[], &[1], &[1, 1, 1], &[1, 1, 2, 1, 1]]),
    (&[1, 1], [&[], &[], &[], &[1, 1, 1], &[0, 1, 1, 2, 1, 1]]),
    (&[1], [&[], &[], &[], &[1], &[1, 1, 1, 1]]),
    (&[], [&[], &[], &[], &[], &[1]]),
];

const TAU4: [Row; 12] = [
    (&[4], [&[1], &[], &[], &[], &[]]),
    (&[3, 1], [&[], &[1], &[], &[], &[]]),
    (&[2, 2], [&[], &[], &[1], &[], &[]]),
    (&[2, 1, 1], [&[], &[], &[0, 1], &[0, 1], &[]]),
    (&[1, 1, 1, 1], [&[], &[], &[], &[0, 0, 0, 1], &[]]),
    (&[3], [&[], &[1], &[], &[], &[1]]),
    (&[2, 1], [&[], &[], &[1, 1], &[1, 1], &[0, 1, 1]]),
    (&[1, 1, 1], [&[], &[], &[], &[0, 1, 1, 1], &[0, 0, 0, 1]]),
    (&[2], [&[], &[], &[1], &[1], &[1, 1, 1]]),
    (&[1, 1], [&[], &[], &[], &[1, 1, 1], &[0, 1, 1, 1]]),
    (&[1], [&[], &[], &[], &[1], &[1, 1, 1]]),
    (&[], [&[], &[], &[], &[], &[1]]),
];

/// Reference ψ-in-τ relations at level 4, as printed.
const REL4: [[&[i64]; 5]; 5] = [
    [&[1], &[], &[], &[], &[]],
    [&[1], &[1], &[], &[], &[]],
    [&[1], &[1, 1], &[1], &[], &[]],
    [&[1], &[1, 1, 1], &[0, 1, 1], &[1], &[]],
    [&[1], &[1, 1, 1, 1], &[0, 0, 1, 0, 1], &[0, 0, 0, 1], &[1]],
];

fn table_matches(bt: &BasisTable, rows: &[Row]) -> (usize, Vec<String>) {
    let mut ok = 0;
    let mut bad = Vec::new();
    for (l, cells) in rows {
        let l = part(l);
        let i = bt.partitions.iter().position(|x| *x == l);
        for (k, c) in cells.iter().enumerate() {
            match i {
                Some(i) if bt.entries[i][k] == rf(c) => ok += 1,
                _ => bad.push(format!("{l}/{k}")),
            }
        }
    }
    (ok, bad)
}

fn c1() -> Outcome {
    let start = Instant::now();
    let t = CoeffTable::new(4).unwrap();
    let bt = BasisTable::build(&t, Basis::Psi, &Unlimited).unwrap();
    let order = bt.partitions.iter().cloned().eq(PSI4.iter().map(|(l, _)| part(l)));
    let (ok, bad) = table_matches(&bt, &PSI4);
    let dt = start.elapsed();
    outcome(
        order && bad.is_empty() && dt < Duration::from_secs(1),
        format!("level-4 ψ table: {ok}/60 entries, row order {order}, {dt:.2?}"),
    )
}

fn c2() -> Outcome {
    let start = Instant::now();
    let t = CoeffTable::new(4).unwrap();
    let bt = BasisTable::build(&t, Basis::Tau, &Unlimited).unwrap();
    let (ok, bad) = table_matches(&bt, &TAU4);
    let b = eliminate(&t).unwrap();
    let mut rel_ok = 0;
    let mut rel_bad = Vec::new();
    for (k, row) in REL4.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if b.transition()[k][j] == rf(c) {
                rel_ok += 1;
            } else {
                rel_bad.push((k, j));
            }
        }
    }
    // The one differing entry must be forced by the τ table itself: only τ_1
    // is nonzero at (3,1), so ψ_4⟨(3,1)⟩ is the τ_1 coefficient.
    let l = part(&[3, 1]);
    let forced = (0..=4).all(|k| bt.entries[1][k].is_zero() == (k != 1))
        && bt.entries[1][1] == RatFunc::one()
        && RatFunc::from_poly(t.coeff_of(4, &l).unwrap().clone()) == b.transition()[4][1];
    let explained = rel_bad == [(4, 1)] && forced && b.transition()[4][1] == rf(&[0, 1, 1, 1]);
    let dt = start.elapsed();
    let pass = bad.is_empty() && (rel_bad.is_empty() || explained) && dt < Duration::from_secs(5);
    let mut detail = format!("level-4 τ table: {ok}/60 entries; relations: {rel_ok}/25 as printed, {dt:.2?}");
    if explained {
        detail.push_str(
            "; deviation: reference ψ_4→τ_1 = 1+q+q^2+q^3 contradicts the reference tables at row (3,1), engine gives q+q^2+q^3",
        );
    }
    outcome(pass, detail)
}

const SIGNS7: [(&[usize], &str); 16] = [
    (&[7], "+0000000 0"),
    (&[6, 1], "0+000000 0"),
    (&[5, 2], "00+00000 0"),
    (&[5, 1, 1], "00+000+0 +"),
    (&[4, 3], "000+0000 0"),
    (&[4, 2, 1], "000+0++0 +"),
    (&[4, 1, 1, 1], "000+0++0 +"),
    (&[3, 3, 1], "0000+000 +"),
    (&[3, 2, 2], "0000++00 0"),
    (&[3, 2, 1, 1], "0000+++0 +"),
    (&[3, 1, 1, 1, 1], "0000+++0 +"),
    (&[2, 2, 2, 1], "00000++0 0"),
    (&[2, 2, 1, 1, 1], "00000++0 +"),
    (&[2, 1, 1, 1, 1, 1], "00000++0 +"),
    (&[1, 1, 1, 1, 1, 1, 1], "000000+0 +"),
    (&[], "0000000+ 0"),
];

fn c3() -> Outcome {
    let start = Instant::now();
    let t = CoeffTable::new(7).unwrap();
    let r = analyze(&t, &Unlimited).unwrap();
    let a1 = RatFunc::new(p(&[1, 1]) * p(&[1, 0, 1]), p(&[1, 1, 1])).unwrap();
    let a2 = RatFunc::new(
        p(&[1, 1]) * p(&[1, 0, 1]).pow(2) * p(&[1, 1, 1, 1, 1]),
        p(&[0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1]),
    )
    .unwrap();
    let coeffs_ok = r.tau_coords.len() == 9 && {
        let y = &r.tau_coords[8];
        y[4] == a1 && y[6] == a2 && y[5] == -RatFunc::one() && y.iter().filter(|c| !c.is_zero()).count() == 3
    };
    let mut pattern_ok = 0;
    if r.extremes.len() == 9 {
        for (l, want) in SIGNS7 {
            let l = part(l);
            let mut got: String = r.extremes[..8].iter().map(|e| sign(&e.get(&l))).collect();
            got.push(' ');
            got.push(sign(&r.extremes[8].get(&l)));
            pattern_ok += (got == want) as usize;
        }
    }
    let dt = start.elapsed();
    outcome(
        !r.simplicial && r.extremes.len() == 9 && coeffs_ok && pattern_ok == 16 && dt < Duration::from_secs(600),
        format!(
            "level 7: simplicial {}, {} extremes, a1/a2 match {coeffs_ok}, sign rows {pattern_ok}/16, {dt:.2?}",
            r.simplicial,
            r.extremes.len()
        ),
    )
}

fn c4() -> Outcome {
    let mut verdicts = Vec::new();
    let mut ok = true;
    for n in 1..=9 {
        let r = analyze(&CoeffTable::new(n).unwrap(), &Unlimited).unwrap();
        ok &= r.simplicial == (n != 7) && !r.sample_disagreement;
        verdicts.push(format!("{n}:{}", if r.simplicial { "S" } else { "N" }));
    }
    let secs: f64 = std::env::var("DERANGEMENT_ACCEPTANCE_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(600.0);
    let budget = WallClock::from_secs(Some(secs));
    let start = Instant::now();
    let ten = CoeffTable::with_budget(10, &budget).and_then(|t| analyze(&t, &budget));
    let ten = match ten {
        Ok(r) => {
            ok &= !r.simplicial;
            format!(
                "n=10: {} with {} extremes in {:.2?}",
                if r.simplicial { "simplicial" } else { "not simplicial" },
                r.extremes.len(),
                start.elapsed()
            )
        }
        Err(Error::BudgetExceeded) => format!("n=10: budget of {secs}s exceeded, no verdict"),
        Err(e) => {
            ok = false;
            format!("n=10: {e}")
        }
    };
    outcome(ok, format!("{} (S simplicial, N not); {ten}", verdicts.join(" ")))
}

fn c5() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        let t = CoeffTable::new(n).unwrap();
        for l in partitions_of(n) {
            count += 1;
            if !kirillov_identity_residual(&t, &l).unwrap().is_zero() {
                bad.push(l.to_string());
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} full-degree diagrams, n <= 8, {} nonzero residuals", bad.len()),
    )
}

fn c6() -> Outcome {
    let mut ok = true;
    let mut at_n = Vec::new();
    for n in 1..=8 {
        let t = CoeffTable::new(n).unwrap();
        let h = hat_tau_psi(n);
        ok &= h.to_blocks(&t) == hat_tau_blocks(&t);
        let v = h.values();
        for r in 0..n {
            let want = -(paper_nq_factorial(n - 1) * paper_nq_factorial(r));
            ok &= hat_tau_closed_form(n, r) == want && *v.at(r) == RatFunc::from_poly(want);
        }
        let same = RatFunc::from_poly(hat_tau_closed_form(n, n)) == *v.at(n);
        at_n.push(if same { "=" } else { "≠" });
    }
    outcome(
        ok,
        format!(
            "constructions agree and closed form holds for r < n, n <= 8; r = n diagnostic: {}",
            at_n.join("")
        ),
    )
}

fn c7() -> Outcome {
    let mut checks = 0;
    let mut bad = 0;
    for (n, pr) in [(2usize, 2u32), (2, 3), (3, 2)] {
        let x = q(pr as i64);
        for g in enumerate_gl(n, pr).unwrap() {
            let r = r_of(&g);
            for k in 0..=n {
                let sigma = sigma_values(n, k).at(r).eval(&x).unwrap();
                let psi = psi_values(n, k).at(r).eval(&x).unwrap();
                let all = q(count_fixed(&g, k, false).unwrap() as i64);
                let full = q(count_fixed(&g, k, true).unwrap() as i64);
                checks += 2;
                bad += (all != sigma) as usize + (full != psi) as usize;
            }
        }
    }
    outcome(
        bad == 0 && checks == 2 * (6 * 3 + 48 * 3 + 168 * 4),
        format!("{checks} fixed-point counts over GL(2,2), GL(2,3), GL(3,2), {bad} mismatches"),
    )
}

fn c8() -> Outcome {
    let mut certified = 0;
    let mut bad = Vec::new();
    for (n, pr) in [(2usize, 2u32), (3, 2), (2, 3)] {
        let group = enumerate_gl(n, pr).unwrap();
        let b = eliminate(&CoeffTable::new(n).unwrap()).unwrap();
        let mut fs = vec![(String::from("hat τ"), hat_tau_psi(n).values())];
        for k in 0..=n {
            fs.push((format!("ψ_{k}"), psi_values(n, k)));
            fs.push((format!("σ_{k}"), sigma_values(n, k)));
            fs.push((format!("τ_{k}"), b.tau_psi(k).values()));
        }
        for (name, f) in fs {
            let v = f.eval(&q(pr as i64)).unwrap();
            if certify_psd(&v, &group).unwrap().is_psd() {
                certified += 1;
            } else {
                bad.push(format!("{name}@GL({n},{pr})"));
            }
        }
    }
    // Positive diagonal, off-diagonal entries twice as large.
    let group = enumerate_gl(2, 2).unwrap();
    let corrupted = [q(2), q(2), q(1)];
    let rejected = match certify_psd(&corrupted, &group).unwrap() {
        PsdVerdict::NotPsd { indices, minor } => {
            let m = gram_matrix(&corrupted, &group).unwrap();
            minor < q(0) && principal_minor(&m, &indices) == minor
        }
        PsdVerdict::Psd { .. } => false,
    };
    outcome(
        bad.is_empty() && rejected,
        format!("{certified} characters certified PSD; corrupted function rejected with minor: {rejected}"),
    )
}

fn c9() -> Outcome {
    let mut symbolic_ok = true;
    for n in 0..=8 {
        let t = CoeffTable::new(n).unwrap();
        for k in 0..=n {
            symbolic_ok &= fz_positivity(&t, &RatFunc::q_pow(-(k as i64)), None)
                .unwrap()
                .is_character;
        }
    }
    let two = q(2);
    let zq = BigRational::new((-1).into(), 10.into());
    let z = RatFunc::from_rational(&zq);
    let mut first = None;
    let mut predicted = None;
    let mut first_block = None;
    for n in 1..=8 {
        let r = fz_positivity(&CoeffTable::new(n).unwrap(), &z, Some(&two)).unwrap();
        if r.steinberg_negative && first.is_none() {
            first = Some(n);
        }
        if steinberg_threshold(n, &two).is_some_and(|t| zq < t) && predicted.is_none() {
            predicted = Some(n);
        }
        if !r.is_character && first_block.is_none() {
            first_block = Some((n, r.first_negative_block.unwrap()));
        }
    }
    let block = first_block.map_or_else(|| String::from("none"), |(n, l)| format!("n={n} at {l}"));
    outcome(
        symbolic_ok && first.is_some() && first == predicted,
        format!(
            "z = q^-k nonnegative for n <= 8: {symbolic_ok}; q=2, z=-1/10: first negative [1^n] at n={first:?}, threshold predicts n={predicted:?}; first negative block overall {block}"
        ),
    )
}

fn c10() -> Outcome {
    let bases: Vec<(CoeffTable, ConeBasis)> = (0..=9)
        .map(|n| {
            let t = CoeffTable::new(n).unwrap();
            let b = eliminate(&t).unwrap();
            (t, b)
        })
        .collect();
    let mut checks = 0;
    let mut ok = true;
    for (n, (t, b)) in bases.iter().enumerate() {
        ok &= stable_mismatch(t, b).unwrap().is_none();
        let e = eigendiagrams(b.taus());
        for (k, got) in e.iter().enumerate().take(n / 2 + 1) {
            let want = match (n, k) {
                (0, _) => Partition::empty(),
                (_, 0) => Partition::row(n),
                _ => part(&[n - k, k]),
            };
            ok &= got.as_ref() == Some(&want);
            checks += 1;
        }
        if n >= 1 {
            for k in 0..=(n - 1) / 2 {
                ok &= branch_tau_check(b, &bases[n - 1].1, k);
            }
        }
    }
    outcome(
        ok,
        format!(
            "{checks} stable characters for n <= 9 equal elimination output with eigendiagram (n-k,k); branching holds"
        ),
    )
}

fn c11() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut rt = true;
    for n in 0..=10 {
        for k in 0..=n {
            let s = sigma_in_psi(n, k);
            let mut back = vec![RatFunc::zero(); n + 1];
            for (j, c) in s.coeffs().iter().enumerate() {
                for (i, d) in psi_in_sigma(n, j).into_iter().enumerate() {
                    back[i] = &back[i] + &(c * &RatFunc::from_poly(d));
                }
            }
            rt &= back
                .iter()
                .enumerate()
                .all(|(i, x)| *x == if i == k { RatFunc::one() } else { RatFunc::zero() });
        }
    }
    notes.push(format!("round-trip n<=10 {rt}"));
    let mut mono = true;
    let mut zero = true;
    for n in 0..=8 {
        let t = CoeffTable::new(n).unwrap();
        for k in 0..n {
            let (a, b) = (t.psi_block(k), t.psi_block(k + 1));
            mono &= a.support().iter().all(|l| b.in_support(l)) && b.support().len() > a.support().len();
        }
        for (i, l) in t.partitions().iter().enumerate() {
            for k in 0..=n {
                zero &= t.coeff(k, i).is_zero() == (l.first_row() < n - k);
            }
        }
    }
    notes.push(format!("support monotone n<=8 {mono}"));
    notes.push(format!("zero pattern n<=8 {zero}"));
    let mut dims = true;
    for n in 0..=7 {
        let t = CoeffTable::new(n).unwrap();
        for k in 0..=n {
            let v = psi_values(n, k);
            dims &= dimension_check(&t.psi_block(k), &v).unwrap()
                && *v.dimension() == RatFunc::from_poly(frame_count(n, k));
        }
    }
    notes.push(format!("dimension n<=7 {dims}"));
    let mut ranks = true;
    for n in 1..=6 {
        let t = CoeffTable::new(n).unwrap();
        for j in 0..n {
            ranks &= rank_blocks(&t, j) == n - j;
        }
    }
    notes.push(format!("block ranks n-j for j<n<=6 {ranks}"));
    ok &= rt && mono && zero && dims && ranks;
    outcome(ok, notes.join(", "))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("golden ψ table, level 4", c1),
        ("golden τ table and relations, level 4", c2),
        ("level-7 cone", c3),
        ("simpliciality classification", c4),
        ("Kirillov residuals", c5),
        ("ĥτ constructions", c6),
        ("finite-group fixed-point oracle", c7),
        ("exact PSD certification", c8),
        ("f_z scan", c9),
        ("stable τ", c10),
        ("property suites", c11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        failed += !o.pass as usize;
        println!(
            "{} criterion {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!("acceptance: {}/11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
