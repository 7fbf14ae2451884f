//! AdS mode space: radial equation, symplectic form, isometries and the
//! complex structures built from the candidates.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kgtube::ads_complex_structure::{
    apply_j, boost_recurrence_residual_ba, candidate_jab, complete_nondiagonal, g_rho, jfactors_from_candidate,
    JFactors,
};
use kgtube::ads_modes::{
    act_isometry, is_real_solution, omega_rho, radial_eval_deriv, AdSParams, Channel, FreqNode, Isometry, ModeVector,
};
use kgtube::harmonics::{indices_up_to, Rotation, RotationBlock, DEFAULT_ORDER};

fn grid() -> Vec<FreqNode> {
    [-2.35, -0.95, -0.45, 0.45, 0.95, 2.35].iter().map(|&omega| FreqNode { omega, weight: 0.3 }).collect()
}

fn random_mode(rng: &mut ChaCha8Rng, d: usize, lmax: u32, real: bool) -> ModeVector {
    let mut phi = ModeVector::new(grid()).unwrap();
    for node in grid() {
        for idx in indices_up_to(d, lmax) {
            let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let (a, b) = (c(), c());
            phi.set(node.omega, idx, a, b).unwrap();
        }
    }
    if real {
        phi.real_part()
    } else {
        phi
    }
}

fn points(lmax: u32) -> Vec<(f64, u32)> {
    grid().iter().flat_map(|n| (0..=lmax).map(move |l| (n.omega, l))).collect()
}

/// Both channels solve
/// `S'' + (d-1)/(sin ρ cos ρ) S' + ω² S - l(l+d-2)/sin²ρ S - Δ(Δ-d)/cos²ρ S = 0`.
#[test]
fn radial_functions_solve_the_mode_equation() {
    for (d, delta) in [(3usize, 4.2), (3, 3.1), (5, 3.1), (5, 4.2)] {
        let p = AdSParams::new(d, delta, 1.0).unwrap();
        for omega in [0.0, 0.5, 1.3, 2.7] {
            for l in 0..4u32 {
                for ch in [Channel::A, Channel::B] {
                    for rho in [0.3, 0.6, 0.9] {
                        let h = 1e-4;
                        let dd = |r: f64| radial_eval_deriv(&p, omega, l, ch, r).unwrap().1;
                        let second = (dd(rho - 2.0 * h) - 8.0 * dd(rho - h) + 8.0 * dd(rho + h) - dd(rho + 2.0 * h)) / (12.0 * h);
                        let (s, ds) = radial_eval_deriv(&p, omega, l, ch, rho).unwrap();
                        let (sn, cs) = rho.sin_cos();
                        let df = d as f64;
                        let terms = [
                            second,
                            (df - 1.0) / (sn * cs) * ds,
                            omega * omega * s,
                            -(l as f64) * (l as f64 + df - 2.0) / (sn * sn) * s,
                            -delta * (delta - df) / (cs * cs) * s,
                        ];
                        let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
                        let residual: f64 = terms.iter().sum();
                        assert!(residual.abs() < 1e-7 * scale, "d={d} ω={omega} l={l} {ch:?} ρ={rho}: {residual}");
                    }
                }
            }
        }
    }
}

#[test]
fn symplectic_form_is_antisymmetric_and_real_on_real_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = AdSParams::new(3, 4.2, 1.2).unwrap();
    for _ in 0..10 {
        let phi = random_mode(&mut rng, 3, 2, true);
        let psi = random_mode(&mut rng, 3, 2, true);
        assert!(is_real_solution(&phi));
        let a = omega_rho(&p, &phi, &psi).unwrap();
        let b = omega_rho(&p, &psi, &phi).unwrap();
        assert!((a + b).norm() < 1e-12 * (1.0 + a.norm()));
        assert!(a.im.abs() < 1e-12 * (1.0 + a.norm()));
    }
}

#[test]
fn isometries_preserve_the_symplectic_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (d, rot) in [
        (3usize, Rotation::zyz(0.3, 1.9, -2.2)),
        (4, Rotation::plane(4, 0, 3, 0.8).unwrap().compose(&Rotation::plane(4, 1, 2, -0.5).unwrap())),
    ] {
        let p = AdSParams::new(d, 4.2, 1.0).unwrap();
        let blocks: BTreeMap<u32, RotationBlock> =
            (0..=2).map(|l| (l, RotationBlock::by_quadrature(d, l, &rot, DEFAULT_ORDER).unwrap())).collect();
        let jf = jfactors_from_candidate(1, &p, &points(2), 0.3).unwrap();
        for _ in 0..5 {
            let phi = random_mode(&mut rng, d, 2, false);
            let psi = random_mode(&mut rng, d, 2, false);
            let base = omega_rho(&p, &phi, &psi).unwrap();
            for action in [Isometry::Rotation(blocks.clone()), Isometry::TimeTranslation(0.77)] {
                let (a, b) = (act_isometry(&action, &phi).unwrap(), act_isometry(&action, &psi).unwrap());
                let moved = omega_rho(&p, &a, &b).unwrap();
                assert!((moved - base).norm() < 1e-10 * (1.0 + base.norm()), "d={d}");
                // J depends only on (ω, l), so it commutes with both isometries
                let x = apply_j(&jf, &a).unwrap();
                let y = act_isometry(&action, &apply_j(&jf, &phi).unwrap()).unwrap();
                assert!(x.add_scaled(Complex64::new(-1.0, 0.0), &y).unwrap().max_norm() < 1e-10 * (1.0 + x.max_norm()));
            }
        }
    }
}

#[test]
fn rotated_real_fields_stay_real() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rot = Rotation::zyz(1.1, 0.4, 2.0);
    let blocks: BTreeMap<u32, RotationBlock> =
        (0..=2).map(|l| (l, RotationBlock::by_quadrature(3, l, &rot, DEFAULT_ORDER).unwrap())).collect();
    let phi = random_mode(&mut rng, 3, 2, true);
    let moved = act_isometry(&Isometry::Rotation(blocks), &phi).unwrap();
    let residual = moved.add_scaled(Complex64::new(-1.0, 0.0), &moved.conjugate()).unwrap().max_norm();
    assert!(residual < 1e-12);
}

#[test]
fn g_rho_is_omega_of_phi_and_j_phi() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (d, delta) in [(3usize, 4.2), (5, 3.7)] {
        let p = AdSParams::new(d, delta, 1.4).unwrap();
        for jaa in [0.0, -0.6] {
            let jf = jfactors_from_candidate(1, &p, &points(2), jaa).unwrap();
            for _ in 0..5 {
                let phi = random_mode(&mut rng, d, 2, true);
                let g = g_rho(&p, &jf, &phi).unwrap();
                let w = omega_rho(&p, &phi, &apply_j(&jf, &phi).unwrap()).unwrap();
                assert!((g - w.re).abs() < 1e-10 * (1.0 + g.abs()));
                assert!(w.im.abs() < 1e-10 * (1.0 + g.abs()));
            }
        }
    }
}

#[test]
fn completed_jba_satisfies_its_recurrence() {
    let p = AdSParams::new(3, 4.2, 1.0).unwrap();
    for jaa in [0.0, 0.5] {
        let jba = |w: f64, l: u32| {
            let e = complete_nondiagonal(candidate_jab(1, &p, w, l)?, jaa)?;
            Ok(e.jba)
        };
        for omega in [-1.65, 0.15, 0.95, 2.35] {
            for l in 0..3 {
                let r = boost_recurrence_residual_ba(&p, &jba, omega, l).unwrap();
                // the completion only satisfies it when jaa² is constant in (ω, l)
                assert!(r.max_rel() < 1e-12, "jaa={jaa} ω={omega} l={l}: {r:?}");
            }
        }
    }
}

#[test]
fn json_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let phi = random_mode(&mut rng, 4, 2, false);
    assert_eq!(ModeVector::from_json(&phi.to_json()).unwrap(), phi);
    let p = AdSParams::new(4, 3.3, 1.0).unwrap();
    let jf = jfactors_from_candidate(2, &p, &points(2), 0.1).unwrap();
    assert_eq!(JFactors::from_json(&jf.to_json()).unwrap(), jf);
}
