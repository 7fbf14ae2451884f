//! Flux and direction properties checked against the energy-momentum tensor
//! and against each other.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use kgtube::ads_modes::AdSParams;
use kgtube::flux::{
    em_tensor, mode_flux, radial_momentum_density, radial_relation, radial_sample, time_relation, DiagonalMetricPoint,
    PhiJet, RadialMode, RadialRelation, RadialSample, Spacetime, TimeRelation, Verdict,
};
use kgtube::harmonics::{eval_harmonic, MultiIndex, SphereQuadrature};
use kgtube::specfun::{sph_j, sph_n};

const STEPS_PER_PERIOD: usize = 16;

/// Flux of `e^{-iωt} Y(Ω) f + c.c.` through the sphere at `radius`, from the
/// time average of the tensor density over one period. `volume` is the
/// radial part of `√|g|` and `metric_at` builds the metric; the angular
/// derivatives are not needed for `T_{tr}` and are left at zero.
fn tensor_flux(
    b: f64,
    omega: f64,
    idx: &MultiIndex,
    s: &RadialSample,
    mass: f64,
    volume: f64,
    metric: &DiagonalMetricPoint,
) -> f64 {
    let quad = SphereQuadrature::new(3, 12).unwrap();
    let mut total = 0.0;
    quad.for_each(|p, w| {
        let y = eval_harmonic(3, idx, p).unwrap();
        let mut avg = 0.0;
        for k in 0..STEPS_PER_PERIOD {
            let t = 2.0 * PI * k as f64 / (STEPS_PER_PERIOD as f64 * omega.abs());
            let e = Complex64::from_polar(1.0, -omega * t) * y;
            let mi = Complex64::new(0.0, -omega);
            let phi = 2.0 * (e * s.f).re;
            let mut grad = DVector::zeros(4);
            grad[0] = 2.0 * (mi * e * s.f).re;
            grad[1] = 2.0 * (e * s.df).re;
            let mut hess = DMatrix::zeros(4, 4);
            hess[(0, 1)] = 2.0 * (mi * e * s.df).re;
            hess[(1, 0)] = hess[(0, 1)];
            hess[(0, 0)] = 2.0 * (mi * mi * e * s.f).re;
            let tensor = em_tensor(b, &PhiJet::new(phi, grad, hess), mass, metric, None).unwrap();
            avg += radial_momentum_density(&tensor, metric, 0, 1) / STEPS_PER_PERIOD as f64;
        }
        total += w * avg * volume;
    });
    total
}

#[test]
fn minkowski_tensor_flux_matches_wronskian_for_any_b() {
    let mass = 1.0;
    let st = Spacetime::Minkowski { mass };
    let idx = MultiIndex::new(vec![2], 1).unwrap();
    for omega in [2.0, -1.6] {
        for r in [1.5, 4.0] {
            let s = radial_sample(&st, RadialMode::Hankel, omega, 2, r).unwrap();
            let expected = mode_flux(&st, omega, &s).unwrap().flux_per_time;
            for time_sign in [1.0, -1.0] {
                let metric = DiagonalMetricPoint::minkowski_spherical(r, 1.0, time_sign).unwrap();
                for b in [0.0, 1.0 / 6.0, 0.4] {
                    let v = tensor_flux(b, omega, &idx, &s, mass, r * r, &metric);
                    assert!((v - expected).abs() < 1e-10 * expected.abs(), "b={b} r={r}: {v} vs {expected}");
                }
            }
        }
    }
}

#[test]
fn ads_flux_is_twice_the_tensor_integral() {
    let (d, delta, radius) = (3usize, 4.2, 1.3);
    let params = AdSParams::new(d, delta, radius).unwrap();
    let mass = (delta * (delta - d as f64)).sqrt() / radius;
    let st = Spacetime::AdS(params);
    let idx = MultiIndex::new(vec![1], 0).unwrap();
    for rho in [0.4, 0.9] {
        let s = radial_sample(&st, RadialMode::FlatLimit { p: 0.9 }, 1.7, 1, rho).unwrap();
        let conformal = radius * radius / rho.cos().powi(2);
        let mut metric =
            DiagonalMetricPoint::new(vec![-conformal, conformal, conformal * rho.sin().powi(2), 1.0]).unwrap();
        metric.set_christoffel(0, 0, 1, rho.tan());
        let volume = conformal * conformal * rho.sin().powi(2);
        let expected = mode_flux(&st, 1.7, &s).unwrap().flux_per_time;
        for b in [0.0, 0.25] {
            let v = tensor_flux(b, 1.7, &idx, &s, mass, volume, &metric);
            assert!((2.0 * v - expected).abs() < 1e-10 * expected.abs(), "{v} vs {expected}");
        }
    }
}

fn numeric_jet(f: &dyn Fn(&[f64; 4]) -> f64, q: [f64; 4]) -> PhiJet {
    let h = 1e-3;
    let shift = |q: [f64; 4], a: usize, s: f64| {
        let mut out = q;
        out[a] += s;
        out
    };
    let d1 = |q: [f64; 4], a: usize| {
        (f(&shift(q, a, -2.0 * h)) - 8.0 * f(&shift(q, a, -h)) + 8.0 * f(&shift(q, a, h)) - f(&shift(q, a, 2.0 * h)))
            / (12.0 * h)
    };
    let grad = DVector::from_fn(4, |a, _| d1(q, a));
    let hess = DMatrix::from_fn(4, 4, |a, b| {
        (d1(shift(q, b, -2.0 * h), a) - 8.0 * d1(shift(q, b, -h), a) + 8.0 * d1(shift(q, b, h), a)
            - d1(shift(q, b, 2.0 * h), a))
            / (12.0 * h)
    });
    PhiJet::new(f(&q), grad, hess)
}

/// The tensor transforms covariantly between Cartesian and spherical
/// coordinates once the Christoffel term is included.
#[test]
fn tensor_is_coordinate_covariant() {
    let (kx, ky, kz, m) = (0.7, -0.4, 0.9, 0.8);
    let e = (kx * kx + ky * ky + kz * kz + m * m as f64).sqrt();
    let cart = move |x: &[f64; 4]| (e * x[0] - kx * x[1] - ky * x[2] - kz * x[3]).cos();
    let to_cart = |q: &[f64; 4]| {
        let (st, ct) = q[2].sin_cos();
        let (sp, cp) = q[3].sin_cos();
        [q[0], q[1] * st * cp, q[1] * st * sp, q[1] * ct]
    };
    let sph = move |q: &[f64; 4]| cart(&to_cart(q));
    let q = [0.3, 1.7, 1.1, 0.6];
    let x = to_cart(&q);
    for b in [0.0, 0.3] {
        let g_cart = DiagonalMetricPoint::new(vec![1.0, -1.0, -1.0, -1.0]).unwrap();
        let t_cart = em_tensor(b, &numeric_jet(&cart, x), m, &g_cart, None).unwrap();
        let g_sph = DiagonalMetricPoint::minkowski_spherical(q[1], q[2], 1.0).unwrap();
        let t_sph = em_tensor(b, &numeric_jet(&sph, q), m, &g_sph, None).unwrap();
        let jac = DMatrix::from_fn(4, 4, |i, a| {
            let h = 1e-5;
            let mut hi = q;
            let mut lo = q;
            hi[a] += h;
            lo[a] -= h;
            (to_cart(&hi)[i] - to_cart(&lo)[i]) / (2.0 * h)
        });
        let pulled = jac.transpose() * &t_cart * &jac;
        let dev = (&pulled - &t_sph).abs().max();
        assert!(dev < 1e-6, "b={b}: {dev}");
    }
}

#[test]
fn conjugation_flips_and_phases_keep_the_flux() {
    let st = Spacetime::Minkowski { mass: 0.5 };
    for l in 0..4 {
        let s = radial_sample(&st, RadialMode::Hankel, 1.8, l, 2.2).unwrap();
        let v = mode_flux(&st, 1.8, &s).unwrap().flux_per_time;
        let c = mode_flux(&st, 1.8, &s.conj()).unwrap().flux_per_time;
        assert!((v + c).abs() < 1e-14 * v.abs());
        // acting with J multiplies the positive-frequency coefficient by a phase
        let j = mode_flux(&st, 1.8, &s.scale(Complex64::new(0.0, -1.0))).unwrap().flux_per_time;
        assert!((v - j).abs() < 1e-14 * v.abs());
    }
}

/// `α cos(Et) j_l + β sin(Et) n_l` moves outwards for `αβ > 0` and inwards for
/// `αβ < 0`, consistent with the extrema relations.
#[test]
fn rightmover_composition() {
    let (omega, mass, l) = (2.0, 1.0, 2u32);
    let st = Spacetime::Minkowski { mass };
    let p = (omega * omega - mass * mass as f64).sqrt();
    let r = 3.0;
    let jl = radial_sample(&st, RadialMode::Bessel, omega, l, r).unwrap();
    let nl = radial_sample(&st, RadialMode::Neumann, omega, l, r).unwrap();
    for (alpha, beta, want) in [
        (1.0, 1.0, Verdict::Outgoing),
        (0.3, 2.0, Verdict::Outgoing),
        (1.0, -0.5, Verdict::Incoming),
        (-1.0, 0.7, Verdict::Incoming),
    ] {
        let s = RadialSample::from_quadratures(r, alpha * jl.f.re, alpha * jl.df.re, beta * nl.f.re, beta * nl.df.re);
        assert_eq!(mode_flux(&st, omega, &s).unwrap().verdict, want);
    }

    let times: Vec<f64> = (0..4000).map(|i| i as f64 * 0.004).collect();
    let c: Vec<f64> = times.iter().map(|t| (omega * t).cos()).collect();
    let s: Vec<f64> = times.iter().map(|t| (omega * t).sin()).collect();
    assert_eq!(time_relation(&times, &c, &s).unwrap(), TimeRelation::Future);

    let radii: Vec<f64> = (0..6000).map(|i| 20.0 + i as f64 * 0.005).collect();
    let j: Vec<f64> = radii.iter().map(|r| sph_j(l, p * r).unwrap()).collect();
    let n: Vec<f64> = radii.iter().map(|r| sph_n(l, p * r).unwrap()).collect();
    assert_eq!(radial_relation(&radii, &j, &n).unwrap(), RadialRelation::Outwards);
    assert_eq!(radial_relation(&radii, &n, &j).unwrap(), RadialRelation::Inwards);
}
