//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::time::Instant;

use ptpartner::exact::{shifted_osc_levels, trig_pt_levels, QuasiParity};
use ptpartner::potential::{
    coupling_flip, eta_series, families, mass_flip, rotate_potential, Hamiltonian, PotentialExpr,
    PotentialTerm, RotationSign,
};
use ptpartner::solver::{
    convergence_study, discretize, eigenvector_inverse_iteration, fd_spectrum,
    fd_spectrum_richardson, matrix_eigenvalues, shoot_spectrum, Contour,
};
use ptpartner::verify::{
    ortho_check, pair_levels, verify_proposition, znojil_duality, PairingMode, PropositionConfig,
    Verdict, ZnojilConfig,
};
use ptpartner::{Cx, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Cx<f64>;

fn cx(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn pt_contour(n: usize) -> Contour<f64> {
    Contour::shifted(-12.0, 12.0, -1.0, n).unwrap()
}

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn max_err(got: &[C], want: &[f64]) -> f64 {
    got.iter()
        .zip(want)
        .map(|(g, w)| (g.re - w).abs())
        .fold(0.0, f64::max)
}

fn c1_shifted_oscillator() -> Result<Outcome> {
    let t = Instant::now();
    let h = families::shifted_oscillator(0.5, 2.0, 1.0, 0.5)?;
    let s = shoot_spectrum(&h, &pt_contour(4000), 4)?;
    let secs = t.elapsed().as_secs_f64();
    let err = max_err(&s.eigenvalues, &[1.0, 3.0, 5.0, 7.0]);
    let im = s.max_imag();
    outcome(
        s.len() == 4 && err <= 1e-4 && im <= 1e-6 && secs <= 30.0,
        format!(
            "levels {:?}, max |re err| {err:.2e}, max |im| {im:.2e}, {secs:.2}s",
            re_parts(&s.eigenvalues)
        ),
    )
}

fn re_parts(v: &[C]) -> Vec<String> {
    v.iter().map(|z| format!("{:.6}", z.re)).collect()
}

fn c2_quasi_parity() -> Result<Outcome> {
    let h = families::shifted_oscillator(0.5, 2.0, 1.0, 0.75)?;
    let cfg = PropositionConfig {
        tol: 1e-3,
        ..Default::default()
    };
    let r = verify_proposition(&h, &pt_contour(4000), &cfg)?;
    let pt = r
        .pt_spectrum
        .as_ref()
        .map(|s| s.eigenvalues.clone())
        .unwrap_or_default();
    let pt_err = max_err(&pt, &[0.5, 3.5, 4.5, 7.5]);
    let partner = r
        .partner_spectrum
        .as_ref()
        .map(|s| s.eigenvalues.clone())
        .unwrap_or_default();
    let q_plus: Vec<f64> = shifted_osc_levels(0.75, QuasiParity::Plus, 1)
        .iter()
        .map(|e| -e)
        .collect();
    // the two top partner levels are the negated q = +1 family
    let top: Vec<C> = partner.iter().rev().take(2).rev().copied().collect();
    let mut want = q_plus.clone();
    want.reverse();
    let partner_err = max_err(&top, &want);
    let half_line = r.partner_domain.as_ref().is_some_and(|d| d.pole.is_some());
    outcome(
        pt.len() == 4
            && pt_err <= 1e-3
            && partner_err <= 1e-3
            && half_line
            && r.verdict == Verdict::Partial,
        format!(
            "PT {:?} (err {pt_err:.2e}); partner top {:?} (err {partner_err:.2e}); verdict {}",
            re_parts(&pt),
            re_parts(&top),
            r.verdict.tag()
        ),
    )
}

fn c3_mass_flip() -> Result<Outcome> {
    let h = families::shifted_oscillator(0.5, 2.0, 1.0, 0.75)?;
    let f = mass_flip(&h);
    let c = pt_contour(4000);
    let a = discretize(&h, &c)?;
    let b = discretize(&f, &c)?;
    let mut entry = (a.off + b.off).abs();
    for (x, y) in a.diag.iter().zip(&b.diag) {
        entry = entry.max((x + y).norm());
    }
    let (ea, _) = matrix_eigenvalues(&a, 6)?;
    let (eb, _) = matrix_eigenvalues(&b, 6)?;
    let r = pair_levels(&ea, &eb, 1e-12, PairingMode::SignFlipped);
    let dev = r.max_deviation.unwrap_or(f64::INFINITY);
    outcome(
        entry <= 1e-14 && r.verdict == Verdict::Isospectral && dev <= 1e-12,
        format!(
            "max entry |A + A_flip| {entry:.2e}; sign_flipped pairing {} max dev {dev:.2e}",
            r.verdict.tag()
        ),
    )
}

fn random_pt_expr(rng: &mut ChaCha8Rng) -> PotentialExpr<f64> {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..5) {
        let k: i32 = rng.gen_range(0..6);
        let a: f64 = rng.gen_range(-2.0..2.0);
        // real coefficient on even powers, imaginary on odd ones
        let coef = if k % 2 == 0 { cx(a, 0.0) } else { cx(0.0, a) };
        let shift = cx(0.0, rng.gen_range(-1.5..1.5));
        terms.push(PotentialTerm::shifted_power(coef, shift, k));
    }
    if rng.gen_bool(0.3) {
        terms.push(PotentialTerm::ix_power(
            rng.gen_range(0.1..2.0),
            rng.gen_range(2..6) as f64,
        ));
    }
    if rng.gen_bool(0.3) {
        terms.push(PotentialTerm::sech_squared(
            cx(rng.gen_range(-2.0..2.0), 0.0),
            cx(0.0, rng.gen_range(-0.4..0.4)),
        ));
    }
    PotentialExpr::new(terms)
}

fn random_expr(rng: &mut ChaCha8Rng) -> PotentialExpr<f64> {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..6) {
        let coef = cx(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let shift = cx(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        terms.push(match rng.gen_range(0..4) {
            0 => PotentialTerm::shifted_power(coef, shift, rng.gen_range(-3..6)),
            1 => PotentialTerm::ix_power(rng.gen_range(0.1..3.0), rng.gen_range(2..7) as f64),
            2 => PotentialTerm::sech_squared(coef, shift),
            _ => PotentialTerm::sec_squared(coef, shift),
        });
    }
    PotentialExpr::new(terms)
}

fn c4_rotation_algebra() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut failures = 0;

    // round trip
    let mut worst_trip = 0.0_f64;
    for _ in 0..200 {
        let e = random_expr(&mut rng);
        let back = rotate_potential(
            &rotate_potential(&e, RotationSign::Minus)?,
            RotationSign::Plus,
        )?;
        let ok = back.len() == e.len()
            && e.canonical()
                .terms
                .iter()
                .zip(&back.canonical().terms)
                .all(|(x, y)| {
                    let d = (x.coef() - y.coef()).norm() + shift_gap(x, y);
                    worst_trip = worst_trip.max(d);
                    d <= 1e-14 && x.mass_scaling == y.mass_scaling
                });
        failures += usize::from(!ok);
    }

    // eta series against scaled evaluation
    let mut worst_eta = 0.0_f64;
    for beta in [
        std::f64::consts::FRAC_PI_2,
        -std::f64::consts::FRAC_PI_2,
        0.3,
    ] {
        let coeffs: Vec<C> = (0..6)
            .map(|_| cx(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let e = PotentialExpr::from_power_series(&coeffs);
        let g = PotentialExpr::from_power_series(&eta_series(&coeffs, beta));
        let phase = C::from_polar(1.0, -beta);
        for _ in 0..50 {
            let x: f64 = rng.gen_range(-2.0..2.0);
            let lhs = g.eval(cx(x, 0.0))?;
            let rhs = e.eval(phase * x)?;
            let d = (lhs - rhs).norm() / (1.0 + rhs.norm());
            worst_eta = worst_eta.max(d);
            failures += usize::from(d > 1e-12);
        }
    }

    // reality of rotated PT potentials
    let grid: Vec<f64> = (1..=12)
        .flat_map(|k| [0.173 * k as f64, -0.173 * k as f64])
        .collect();
    let mut worst_real = 0.0_f64;
    for _ in 0..200 {
        let e = random_pt_expr(&mut rng);
        for sign in [RotationSign::Minus, RotationSign::Plus] {
            let r = rotate_potential(&e, sign)?;
            let safe: Vec<f64> = grid
                .iter()
                .copied()
                .filter(|&y| r.singularity_distance(cx(y, 0.0)).is_none_or(|d| d > 1e-3))
                .collect();
            let chk = r.check_real_on_axis(&safe, 1e-9)?;
            worst_real = worst_real.max(chk.max_deviation);
            failures += usize::from(!chk.holds);
        }
    }
    outcome(
        failures == 0,
        format!(
            "{failures} failures; worst round trip {worst_trip:.1e}, eta {worst_eta:.1e}, rotated Im V {worst_real:.1e}"
        ),
    )
}

fn shift_gap(x: &PotentialTerm<f64>, y: &PotentialTerm<f64>) -> f64 {
    use ptpartner::potential::TermShape::*;
    match (x.shape, y.shape) {
        (
            ShiftedPower {
                shift: a,
                exponent: ka,
                ..
            },
            ShiftedPower {
                shift: b,
                exponent: kb,
                ..
            },
        ) => (a - b).norm() + f64::from(u8::from(ka != kb)),
        (SechSquared { shift: a, .. }, SechSquared { shift: b, .. })
        | (SecSquared { shift: a, .. }, SecSquared { shift: b, .. }) => (a - b).norm(),
        (IxPower { nu: a, .. }, IxPower { nu: b, .. }) => (a - b).abs(),
        _ => f64::INFINITY,
    }
}

fn c5_cross_method() -> Result<Outcome> {
    let pi = std::f64::consts::PI;
    let cases: Vec<(&str, Hamiltonian<f64>, Contour<f64>)> = vec![
        (
            "oscillator",
            families::harmonic(0.5, 2.0)?,
            Contour::real(-12.0, 12.0, 4000)?,
        ),
        ("box", families::free(0.5)?, Contour::real(0.0, pi, 2000)?),
        (
            "shifted a=1/2",
            families::shifted_oscillator(0.5, 2.0, 1.0, 0.5)?,
            pt_contour(4000),
        ),
        (
            "shifted a=3/4",
            families::shifted_oscillator(0.5, 2.0, 1.0, 0.75)?,
            pt_contour(4000),
        ),
        (
            "(ix)^2",
            families::bender_boettcher(0.5, 1.0, 2.0)?,
            Contour::real(-12.0, 12.0, 4000)?,
        ),
        (
            "(ix)^3",
            families::bender_boettcher(0.5, 1.0, 3.0)?,
            Contour::real(-12.0, 12.0, 4000)?,
        ),
        (
            "sec^2 B=2",
            families::trig_well(0.5, 2.0, 0.0)?,
            Contour::real(-pi / 2.0, pi / 2.0, 4000)?,
        ),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, h, c) in &cases {
        let m = fd_spectrum_richardson(h, c, 4)?;
        let s = shoot_spectrum(h, c, 4)?;
        let dev = m
            .eigenvalues
            .iter()
            .zip(&s.eigenvalues)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        pass &= m.len() == 4 && s.len() == 4 && dev <= 1e-5;
        parts.push(format!("{name} {dev:.1e}"));
    }
    let ho = families::harmonic(0.5, 2.0)?;
    let study = convergence_study(
        &ho,
        &Contour::real(-12.0, 12.0, 500)?,
        &[500, 1000, 2000, 4000],
        0,
    )?;
    pass &= (1.8..=2.2).contains(&study.order);
    outcome(
        pass,
        format!(
            "QR vs shooting: {}; FD order {:.3}",
            parts.join(", "),
            study.order
        ),
    )
}

fn c6_trig_remedy() -> Result<Outcome> {
    let pi = std::f64::consts::PI;
    let c = Contour::real(-pi / 2.0, pi / 2.0, 8000)?;
    let exact = trig_pt_levels(2.0, 2);
    let fd = fd_spectrum(&families::trig_well(0.5, 2.0, 0.0)?, &c, 3)?;
    let rel = fd
        .eigenvalues
        .iter()
        .zip(&exact)
        .map(|(z, e)| (z.re - e).abs() / e)
        .fold(0.0, f64::max);

    // −A sec² and its coupling flip
    let a = 2.0;
    let unflipped = families::trig_well(0.5, -a, 0.0)?;
    let flipped = Hamiltonian::new(0.5, coupling_flip(&unflipped.potential, 0)?)?;
    let fs = fd_spectrum(&flipped, &c, 4)?;
    let v_min = a; // B/cos²x is smallest at x = 0
    let bound = fs.eigenvalues.iter().all(|z| z.re > v_min);
    let mut dive = Vec::new();
    for n in [1000, 2000, 4000, 8000] {
        let s = fd_spectrum(&unflipped, &c.with_points(n), 1)?;
        dive.push(s.eigenvalues[0].re);
    }
    let diving = dive.windows(2).all(|w| w[1] < w[0] - 1.0);
    outcome(
        rel <= 1e-3 && bound && diving,
        format!(
            "B=2 FD {:?} vs [4, 9, 16] (rel {rel:.1e}); flipped levels above V_min={v_min}: {bound}; unflipped ground level vs N=1000..8000: {:?}",
            re_parts(&fd.eigenvalues),
            dive.iter().map(|x| format!("{x:.3e}")).collect::<Vec<_>>()
        ),
    )
}

fn c7_orthonormality() -> Result<Outcome> {
    let c = Contour::real(-12.0, 12.0, 4000)?;
    let ho = families::harmonic(0.5, 2.0)?;
    let op = discretize(&ho, &c)?;
    let (ev, _) = matrix_eigenvalues(&op, 4)?;
    let vecs = ev
        .iter()
        .map(|&l| eigenvector_inverse_iteration(&op, l).map(|v| v.values))
        .collect::<Result<Vec<_>>>()?;
    let herm = ortho_check(&vecs, &c)?;

    let pc = pt_contour(4000);
    let pt = families::shifted_oscillator(0.5, 2.0, 1.0, 0.75)?;
    let pop = discretize(&pt, &pc)?;
    let (pev, _) = matrix_eigenvalues(&pop, 4)?;
    let pvecs = pev
        .iter()
        .map(|&l| eigenvector_inverse_iteration(&pop, l).map(|v| v.values))
        .collect::<Result<Vec<_>>>()?;
    let ptr = ortho_check(&pvecs, &pc)?;
    outcome(
        herm.dev_hermitian <= 1e-6 && ptr.dev_pt_plus >= 0.1 && ptr.dev_pt_minus >= 0.1,
        format!(
            "Hermitian Gram dev {:.1e}; PT Gram dev from +iI {:.3}, from -iI {:.3}",
            herm.dev_hermitian, ptr.dev_pt_plus, ptr.dev_pt_minus
        ),
    )
}

fn c8_znojil() -> Result<Outcome> {
    let cfg = ZnojilConfig::default();
    let r = znojil_duality(1.0, 0.1, &cfg)?;
    let dev = r.plus.cross_method_deviation;
    let json = r.to_json(&cfg);
    let has = |k: &str| json.contains(&format!("\"{k}\""));
    let emitted = r.pairing.mode == PairingMode::ConstantShifted
        && has("truncation_shift")
        && has("unreliable")
        && has("fitted_shift")
        && has("pairs");
    outcome(
        emitted && dev.is_some_and(|d| d <= 1e-4),
        format!(
            "H+ {:?}; H+ QR vs shooting {:.1e}; shift {:?}; verdict {}; unreliable H+ {:?} H- {:?}",
            re_parts(&r.plus.levels),
            dev.unwrap_or(f64::NAN),
            r.pairing.fitted_shift.map(|s| format!("{:.4}", s.re)),
            r.pairing.verdict.tag(),
            r.plus.unreliable,
            r.minus.unreliable
        ),
    )
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("shifted oscillator reproduces 2n+1", c1_shifted_oscillator),
        ("quasi-parity families and partial partner", c2_quasi_parity),
        ("mass flip negates operator and spectrum", c3_mass_flip),
        ("rotation algebra properties", c4_rotation_algebra),
        ("cross-method agreement and FD order", c5_cross_method),
        ("trigonometric coupling-flip remedy", c6_trig_remedy),
        ("orthonormalization correspondence", c7_orthonormality),
        ("mass-sign duality experiment", c8_znojil),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (pass, detail) = match run() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!pass);
        println!(
            "{} [{}] {name}: {detail} ({:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
