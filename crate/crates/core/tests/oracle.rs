use derangement_core::algebra::q_binomial;
use derangement_core::characters::{hat_tau_psi, psi_values, sigma_values, CoeffTable};
use derangement_core::cone::eliminate;
use derangement_core::oracle::*;
use derangement_core::DerangementValues;
use num_rational::BigRational;
use num_traits::Signed;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn at_p(v: &DerangementValues, p: u32) -> Vec<BigRational> {
    let x = q(p as i64);
    v.values().iter().map(|f| f.eval(&x).unwrap()).collect()
}

#[test]
fn group_orders() {
    for (n, p, want) in [(2, 2, 6), (3, 2, 168), (2, 3, 48), (1, 3, 2)] {
        let g = enumerate_gl(n, p).unwrap();
        assert_eq!(g.len(), want);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g.iter().all(FFMatrix::is_invertible));
    }
}

#[test]
fn fixed_point_counts_match_formulas() {
    let mut checks = 0;
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let group = enumerate_gl(n, p).unwrap();
        for k in 0..=3 {
            let engine = (k <= n).then(|| (at_p(&sigma_values(n, k), p), at_p(&psi_values(n, k), p)));
            for g in &group {
                let r = r_of(g) as u32;
                let pr = (p as u64).pow(r);
                let all = count_fixed(g, k, false).unwrap();
                let full = count_fixed(g, k, true).unwrap();
                assert_eq!(all, pr.pow(k as u32));
                let frames: i64 = (0..k as u32).map(|i| pr as i64 - (p as i64).pow(i)).product();
                assert_eq!(full as i64, frames.max(0));
                if let Some((sigma, psi)) = &engine {
                    assert_eq!(q(all as i64), sigma[r as usize]);
                    assert_eq!(q(full as i64), psi[r as usize]);
                }
                checks += 1;
            }
        }
    }
    assert_eq!(checks, 4 * (6 + 48 + 168));
}

#[test]
fn spec_counts() {
    let id = FFMatrix::identity(3, 2);
    assert_eq!(count_fixed(&id, 2, true).unwrap(), 42);
    let group = enumerate_gl(2, 3).unwrap();
    let g = group.iter().find(|g| r_of(g) == 1).unwrap();
    assert_eq!(count_fixed(g, 1, false).unwrap(), 3);
    assert!(count_fixed(&FFMatrix::identity(3, 3), 3, false).is_ok());
    assert!(count_fixed(&FFMatrix::identity(3, 2), 4, false).is_err());
}

#[test]
fn embedding_adds_fixed_vector() {
    for (n, p) in [(2, 2), (2, 3)] {
        for g in enumerate_gl(n, p).unwrap() {
            let h = g.direct_sum_one();
            assert_eq!(h.n(), n + 1);
            assert_eq!(r_of(&h), r_of(&g) + 1);
            assert_eq!(r_of(&g.inverse().unwrap()), r_of(&g));
        }
    }
}

#[test]
fn two_subspaces_of_four_space() {
    let frames = count_fixed(&FFMatrix::identity(4, 2), 2, true).unwrap();
    let gl2 = enumerate_gl(2, 2).unwrap().len() as u64;
    assert_eq!(frames / gl2, 35);
    assert_eq!(q_binomial(4, 2).eval(&q(2)), q(35));
}

fn certify_all(n: usize, p: u32) {
    let group = enumerate_gl(n, p).unwrap();
    let t = CoeffTable::new(n).unwrap();
    let b = eliminate(&t).unwrap();
    let mut fs = Vec::new();
    for k in 0..=n {
        fs.push(psi_values(n, k));
        fs.push(sigma_values(n, k));
        fs.push(b.tau_psi(k).values());
    }
    fs.push(hat_tau_psi(n).values());
    for f in &fs {
        let v = certify_psd(&at_p(f, p), &group).unwrap();
        assert!(v.is_psd(), "n={n} p={p} {v:?}");
    }
}

#[test]
fn characters_are_psd() {
    certify_all(2, 2);
    certify_all(2, 3);
    certify_all(3, 2);
}

#[test]
fn corrupted_function_is_rejected() {
    let group = enumerate_gl(2, 2).unwrap();
    let f = [q(1), q(1), q(-1)];
    match certify_psd(&f, &group).unwrap() {
        PsdVerdict::NotPsd { indices, minor } => {
            assert!(minor.is_negative());
            let m = gram_matrix(&f, &group).unwrap();
            assert_eq!(principal_minor(&m, &indices), minor);
        }
        v => panic!("expected a certificate, got {v:?}"),
    }
    let unit = [q(1), q(1), q(1)];
    assert_eq!(certify_psd(&unit, &group).unwrap(), PsdVerdict::Psd { rank: 1 });
}

#[test]
fn gram_guard() {
    let group = enumerate_gl(3, 2).unwrap();
    let big: Vec<FFMatrix> = group.iter().cycle().take(501).cloned().collect();
    assert!(gram_matrix(&vec![q(1); 4], &big).is_err());
}
