//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.
//!
//! Every tolerance below is fixed; nothing is tuned per run. The process exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use homsim_core::basis_conversion::conversion_matrix;
use homsim_core::biphoton_state::{
    apply_local, bell_minus, bell_plus, overlap, symmetry_classify, to_hg, to_lg, LocalUnitary,
    Symmetry, TwoPhotonState,
};
use homsim_core::experiment::{
    enhancement_ratios, scan_grid, write_grid_csv, CoincidenceGrid, Interference, RunConfig,
};
use homsim_core::interferometer::{
    apply_dove_pair, coincidence_with_delay, default_coherence_time, DelaySetting, DovePairSetting,
};
use homsim_core::poly_oracle::GaussianRational;
use homsim_core::poly_oracle::{bell_raw_decomposition, eq1_identity_check, ratios_relative_to};
use homsim_core::{Basis, BellSign, HGIndex, LGIndex, SpatialMode};

const IDENTITY_TIME_LIMIT: Duration = Duration::from_secs(5);
const GRID_TIME_LIMIT: Duration = Duration::from_secs(10);
const UNITARITY_TOL: f64 = 1e-12;
const ROUND_TRIP_TOL: f64 = 1e-12;
const ZERO_TOL: f64 = 1e-12;
const RATIO_TOL: f64 = 1e-9;
const OVERLAP_TOL: f64 = 1e-12;
const DIP_TOL: f64 = 1e-12;
const SEED: u64 = 20_240_917;

type Outcome = Result<String, String>;

fn check(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(BigInt::from(re).into(), BigInt::from(im).into())
}

/// Compares `actual` with `expected` up to one overall complex constant:
/// same support, same ratios to the first expected key.
fn same_up_to_constant(
    actual: &BTreeMap<(HGIndex, HGIndex), GaussianRational>,
    expected: &BTreeMap<(HGIndex, HGIndex), GaussianRational>,
) -> Result<(), String> {
    let support =
        |m: &BTreeMap<(HGIndex, HGIndex), GaussianRational>| m.keys().copied().collect::<Vec<_>>();
    if support(actual) != support(expected) {
        return Err(format!(
            "support {:?} != {:?}",
            support(actual),
            support(expected)
        ));
    }
    let pivot = expected.keys().next().expect("non-empty expectation");
    let a = ratios_relative_to(actual, pivot).ok_or("zero pivot")?;
    let e = ratios_relative_to(expected, pivot).ok_or("zero pivot")?;
    if a != e {
        return Err(format!("ratios {a:?} != {e:?}"));
    }
    Ok(())
}

fn criterion_identity() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in 0..=4 {
        for ell in -4..=4 {
            cases += 1;
            if !eq1_identity_check(p, ell) {
                failures.push((p, ell));
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        failures.is_empty() && elapsed < IDENTITY_TIME_LIMIT,
        format!("{cases} (p, ell) cases exact, {elapsed:.2?} < {IDENTITY_TIME_LIMIT:?}"),
        format!("failures {failures:?}, {elapsed:.2?}"),
    )
}

fn criterion_symmetric_pair() -> Outcome {
    let h = HGIndex::new;
    let expected = BTreeMap::from([
        ((h(2, 0), h(2, 0)), gi(2, 0)),
        ((h(1, 1), h(1, 1)), gi(8, 0)),
        ((h(0, 2), h(0, 2)), gi(2, 0)),
        ((h(2, 0), h(0, 2)), gi(-2, 0)),
        ((h(0, 2), h(2, 0)), gi(-2, 0)),
    ]);
    let actual = bell_raw_decomposition(0, 0, 2, BellSign::Plus);
    same_up_to_constant(&actual, &expected)
        .map(|_| "ratios 2:8:2:-2:-2, all other HG pairs zero (exact)".into())
}

fn criterion_antisymmetric_pair() -> Outcome {
    let h = HGIndex::new;
    let expected = BTreeMap::from([
        ((h(0, 2), h(1, 1)), gi(0, 4)),
        ((h(1, 1), h(0, 2)), gi(0, -4)),
        ((h(1, 1), h(2, 0)), gi(0, 4)),
        ((h(2, 0), h(1, 1)), gi(0, -4)),
    ]);
    let actual = bell_raw_decomposition(0, 0, 2, BellSign::Minus);
    same_up_to_constant(&actual, &expected)
        .map(|_| "4i·(+1, -1, +1, -1) on the four cross pairs (exact)".into())
}

fn criterion_unitarity() -> Outcome {
    let worst = (0..=10)
        .map(|n| (n, conversion_matrix(n).unitarity_deviation()))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst_trip = 0.0f64;
    for k in 0..50 {
        let state =
            TwoPhotonState::random(Basis::Lg, k % 5, None, &mut rng).map_err(|e| e.to_string())?;
        worst_trip = worst_trip.max(to_lg(&to_hg(&state)).max_abs_diff(&state));
    }
    check(
        worst.1 <= UNITARITY_TOL && worst_trip <= ROUND_TRIP_TOL,
        format!(
            "max ||U†U - I|| = {:.1e} (N = {}), LG→HG→LG error {worst_trip:.1e} over 50 states",
            worst.1, worst.0
        ),
        format!(
            "unitarity {:.1e} at N = {}, round trip {worst_trip:.1e}",
            worst.1, worst.0
        ),
    )
}

fn criterion_symmetry_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut flips = Vec::new();
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    let mut evaluations = 0;
    for k in 0..100 {
        let symmetry = match k % 3 {
            0 => Some(BellSign::Plus),
            1 => Some(BellSign::Minus),
            _ => None,
        };
        // a single mode carries no antisymmetric state
        let lowest = if symmetry == Some(BellSign::Minus) {
            1
        } else {
            0
        };
        let max_order = rng.random_range(lowest..=4);
        let basis = if k % 2 == 0 { Basis::Lg } else { Basis::Hg };
        let state = TwoPhotonState::random(basis, max_order, symmetry, &mut rng)
            .map_err(|e| e.to_string())?;
        let class = symmetry_classify(&state).value;
        *classes.entry(class.to_string()).or_default() += 1;

        for conv in [to_hg(&state), to_lg(&state)] {
            evaluations += 1;
            if symmetry_classify(&conv).value != class {
                flips.push(format!("state {k} under basis change"));
            }
        }
        for u in 0..20 {
            let local = LocalUnitary::random(max_order, &mut rng);
            let moved = apply_local(&state, &local, &local).map_err(|e| e.to_string())?;
            evaluations += 1;
            if symmetry_classify(&moved).value != class {
                flips.push(format!("state {k} under unitary {u}"));
            }
        }
    }
    let all_classes = [
        Symmetry::Symmetric,
        Symmetry::Antisymmetric,
        Symmetry::Mixed,
    ]
    .iter()
    .all(|c| classes.contains_key(&c.to_string()));
    check(
        flips.is_empty() && all_classes,
        format!("0 class flips in {evaluations} transformed states, classes {classes:?}"),
        format!(
            "{} flips (first: {:?}), classes {classes:?}",
            flips.len(),
            flips.first()
        ),
    )
}

fn timed_grid(cfg: &RunConfig) -> Result<(CoincidenceGrid, Duration), String> {
    let start = Instant::now();
    let grid = scan_grid(cfg).map_err(|e| e.to_string())?;
    Ok((grid, start.elapsed()))
}

fn criterion_parallel_grid() -> Outcome {
    let cfg = RunConfig::preset("fig2").map_err(|e| e.to_string())?;
    let (hom, elapsed) = timed_grid(&cfg)?;
    let (base, _) = timed_grid(&RunConfig {
        interference: Interference::Distinguishable,
        ..cfg
    })?;
    let support: Vec<_> = base.cells().filter(|c| c.2 > ZERO_TOL).collect();
    check(
        hom.max() < ZERO_TOL && !support.is_empty() && elapsed < GRID_TIME_LIMIT,
        format!(
            "max interfering count {:.1e} over {} cells, {} distinguishable cells nonzero, {elapsed:.2?}",
            hom.max(),
            hom.rows.len() * hom.cols.len(),
            support.len()
        ),
        format!("max {:.1e}, support {}, {elapsed:.2?}", hom.max(), support.len()),
    )
}

fn criterion_rotated_grid() -> Outcome {
    let cfg = RunConfig::preset("fig3").map_err(|e| e.to_string())?;
    let (hom, _) = timed_grid(&cfg)?;
    let (base, _) = timed_grid(&RunConfig {
        interference: Interference::Distinguishable,
        ..cfg
    })?;
    let mut bad = Vec::new();
    let (mut doubled, mut zero) = (0, 0);
    for ((c, d), ratio) in enhancement_ratios(&hom, &base) {
        let count = hom.get(c, d).unwrap();
        let baseline = base.get(c, d).unwrap();
        let odd_support = c.order() % 2 == 1 && baseline > ZERO_TOL;
        if odd_support {
            match ratio {
                Some(r) if (r - 2.0).abs() <= RATIO_TOL => doubled += 1,
                _ => bad.push(format!("{c},{d}: expected 2x, got {ratio:?}")),
            }
        } else if count.abs() < ZERO_TOL {
            zero += 1;
        } else {
            bad.push(format!("{c},{d}: expected 0, got {count:e}"));
        }
    }
    check(
        bad.is_empty() && doubled > 0,
        format!("{doubled} odd-order cells doubled, {zero} cells zero, none in between"),
        format!("{} bad cells, first {:?}", bad.len(), bad.first()),
    )
}

fn criterion_dove_parity() -> Outcome {
    let setting = DovePairSetting::from_degrees(45.0);
    let mut report = Vec::new();
    for ell in 1..=4 {
        let plus = bell_plus(0, 0, ell).map_err(|e| e.to_string())?;
        let rotated = apply_dove_pair(&plus, setting).map_err(|e| e.to_string())?;
        let target = if ell % 2 == 1 {
            bell_minus(0, 0, ell)
        } else {
            bell_plus(0, 0, ell)
        }
        .map_err(|e| e.to_string())?;
        let fidelity = overlap(&target, &rotated)
            .map_err(|e| e.to_string())?
            .norm();
        if (fidelity - 1.0).abs() > OVERLAP_TOL {
            return Err(format!("ell = {ell}: |<target|rotated>| = {fidelity}"));
        }
        report.push(format!("{ell}:{}", if ell % 2 == 1 { "Ψ-" } else { "Ψ+" }));
    }
    Ok(format!(
        "Ψ+ at 45° maps to {} with |overlap| = 1 ± {OVERLAP_TOL:e}",
        report.join(" ")
    ))
}

fn criterion_delay_dip() -> Outcome {
    let state = bell_minus(0, 0, 1).map_err(|e| e.to_string())?;
    let (u, v): (SpatialMode, SpatialMode) =
        (LGIndex::new(0, 1).into(), LGIndex::new(0, -1).into());
    let tc = default_coherence_time();
    let at = |tau: f64| -> Result<f64, String> {
        let delay = DelaySetting::new(tau, tc).map_err(|e| e.to_string())?;
        coincidence_with_delay(&state, u, v, &delay)
            .map(|r| r.probability)
            .map_err(|e| e.to_string())
    };
    let mut problems = Vec::new();
    let mut expect = |label: &str, got: f64, want: f64| {
        if (got - want).abs() > DIP_TOL {
            problems.push(format!("{label}: {got} != {want}"));
        }
    };
    expect("τ = 0", at(0.0)?, 0.5);
    for k in [10.0, 12.0, 50.0] {
        expect("τ = +kτc", at(k * tc)?, 0.25);
        expect("τ = -kτc", at(-k * tc)?, 0.25);
    }
    expect("τ = τc√ln2", at(tc * 2f64.ln().sqrt())?, 0.375);

    let sweep: Vec<f64> = (0..=200)
        .map(|k| at(k as f64 * 0.05 * tc))
        .collect::<Result<_, _>>()?;
    if !sweep.windows(2).all(|w| w[1] <= w[0]) {
        problems.push("not monotone in |τ|".into());
    }
    let mirrored: Vec<f64> = (0..=200)
        .map(|k| at(-(k as f64) * 0.05 * tc))
        .collect::<Result<_, _>>()?;
    if sweep != mirrored {
        problems.push("not even in τ".into());
    }
    check(
        problems.is_empty(),
        "1/2 at τ = 0, 3/8 at τc√ln2, 1/4 beyond 10τc, monotone in |τ|",
        problems.join("; "),
    )
}

fn criterion_reproducible_csv() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut sizes = Vec::new();
    for preset in ["fig2", "fig3"] {
        let mut runs = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{preset}-{run}.csv"));
            let cfg = RunConfig::preset(preset).map_err(|e| e.to_string())?;
            let grid = scan_grid(&cfg).map_err(|e| e.to_string())?;
            write_grid_csv(&grid, &path).map_err(|e| e.to_string())?;
            runs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        if runs[0] != runs[1] {
            return Err(format!("{preset}: runs differ"));
        }
        sizes.push(format!("{preset} {} bytes", runs[0].len()));
    }
    Ok(format!("two runs byte-identical ({})", sizes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "LG/HG polynomial identity, p <= 4, |ell| <= 4",
            criterion_identity,
        ),
        ("symmetric ell = 2 pair in HG", criterion_symmetric_pair),
        (
            "antisymmetric ell = 2 pair in HG",
            criterion_antisymmetric_pair,
        ),
        ("conversion unitarity and round trip", criterion_unitarity),
        (
            "exchange symmetry under shared unitaries",
            criterion_symmetry_invariance,
        ),
        (
            "parallel Dove prisms: no coincidences",
            criterion_parallel_grid,
        ),
        ("45° Dove prisms: zero or doubled", criterion_rotated_grid),
        ("Dove rotation flips odd-ell parity", criterion_dove_parity),
        (
            "delay dip for the antisymmetric ell = 1 pair",
            criterion_delay_dip,
        ),
        ("preset CSV output reproducible", criterion_reproducible_csv),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
