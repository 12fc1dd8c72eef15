//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use catdet::catalan::catalan_mingantu_prefix;
use catdet::combinat::choose;
use catdet::sampling::{
    random_boundary_pair, random_hessenberg, random_unit_series, seeded, DEFAULT_SEED,
};
use catdet::series::toeplitz_minors;
use catdet::{
    binomial_power, catalan_closed, catalan_det, count_dyck, count_paths_det, count_paths_dp,
    det_bareiss, det_hessenberg_recurrence, pascal_table, reciprocal, reciprocal_via_minors,
    verify_convolution_identity, verify_recurrence_identity, ExactInt, TruncatedSeries,
};
use num_bigint::BigInt;

type Check = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan_determinant() -> Check {
    for n in 1..=30usize {
        let det = catalan_det(n);
        let closed = choose(2 * n as u64, n as i64) / (n as u64 + 1);
        ensure(det == closed, || {
            format!("n={n}: det {det} != closed {closed}")
        })?;
    }
    Ok("n = 1..30 exact".into())
}

fn mingantu_recurrence() -> Check {
    let rec = catalan_mingantu_prefix(500).map_err(|e| e.to_string())?;
    for n in 1..=500u64 {
        let want = catalan_closed(n);
        ensure(rec[n as usize] == want, || {
            format!("n={n}: {} != {want}", rec[n as usize])
        })?;
    }
    Ok("n = 1..500 exact".into())
}

fn path_counts() -> Check {
    let mut rng = seeded(DEFAULT_SEED);
    for t in 0..200 {
        let p = random_boundary_pair(&mut rng, 8, 10);
        let (det, dp) = (count_paths_det(&p), count_paths_dp(&p));
        ensure(det == dp, || {
            format!("trial {t} {}: det {det} != dp {dp}", p.to_json())
        })?;
    }
    for n in 1..=25usize {
        let got = count_dyck(n).map_err(|e| e.to_string())?;
        ensure(got == catalan_closed(n as u64), || {
            format!("dyck n={n}: {got}")
        })?;
    }
    Ok("200 random pairs + Dyck n = 1..25 exact".into())
}

fn toeplitz_minors_closed_form() -> Check {
    for n in 1..=20u64 {
        let minors = toeplitz_minors(n, 40).map_err(|e| e.to_string())?;
        for (k, m) in minors.iter().enumerate() {
            let want = choose(n + k as u64 - 1, k as i64);
            ensure(m == &want, || format!("M_({n},{k}) = {m} != {want}"))?;
        }
    }
    Ok("n = 1..20, k = 0..40 exact".into())
}

fn pascal_column_golden() -> Check {
    let golden = include_str!("golden/pascal_column_8.txt");
    let table = pascal_table(12, 7).map_err(|e| e.to_string())?;
    let emitted: String = table
        .highlighted_column()
        .iter()
        .map(|v| format!("{v}\n"))
        .collect();
    ensure(emitted == golden, || format!("emitted column:\n{emitted}"))?;
    let square = include_str!("golden/pascal_square_8.csv");
    let csv = pascal_table(8, 7).map_err(|e| e.to_string())?.to_csv();
    ensure(csv == square, || format!("emitted table:\n{csv}"))?;
    let minors = toeplitz_minors(8, 11).map_err(|e| e.to_string())?;
    ensure(minors == table.highlighted_column(), || {
        "M_(8,k) differs from the column".into()
    })?;
    Ok("column n = 8 and 8x8 block byte-exact".into())
}

fn alternating_convolution() -> Check {
    for n in 1..=20u64 {
        let at_zero = verify_convolution_identity(n, 0).map_err(|e| e.to_string())?;
        ensure(at_zero == BigInt::from(1), || {
            format!("n={n}, k=0: {at_zero}")
        })?;
        for k in 1..=40usize {
            let v = verify_convolution_identity(n, k).map_err(|e| e.to_string())?;
            ensure(v == BigInt::from(0), || format!("n={n}, k={k}: {v}"))?;
        }
    }
    Ok("n = 1..20: 1 at k = 0, 0 for k = 1..40".into())
}

fn toeplitz_recurrence() -> Check {
    for n in 1..=15u64 {
        for m in 0..=40usize {
            let r = verify_recurrence_identity(n, m).map_err(|e| e.to_string())?;
            ensure(r.agrees(), || format!("n={n}, m={m}: {r:?}"))?;
        }
    }
    Ok("n = 1..15, m = 0..40 three-way exact".into())
}

fn reciprocal_engine() -> Check {
    let mut rng = seeded(DEFAULT_SEED);
    for t in 0..100 {
        let f = random_unit_series(&mut rng, 30, -9, 9);
        let order = f.order();
        let g = reciprocal(&f, order).map_err(|e| e.to_string())?;
        ensure(
            f.mul_truncated(&g, order) == TruncatedSeries::one(order),
            || format!("trial {t}: f*g != 1 for {}", f.to_json()),
        )?;
    }
    for n in 1..=12u64 {
        let direct = reciprocal(&binomial_power(n, 50), 50).map_err(|e| e.to_string())?;
        let minors = reciprocal_via_minors(n, 50).map_err(|e| e.to_string())?;
        for k in 0..=50usize {
            let mag = choose(n + k as u64 - 1, k as i64);
            let closed: ExactInt = if k % 2 == 1 { -mag } else { mag };
            ensure(
                direct.coeffs()[k] == closed && minors.coeffs()[k] == closed,
                || {
                    format!(
                        "n={n}, k={k}: direct {} minors {} closed {closed}",
                        direct.coeffs()[k],
                        minors.coeffs()[k]
                    )
                },
            )?;
        }
    }
    Ok("100 random series; n = 1..12, k = 0..50 three routes".into())
}

fn determinant_engines() -> Check {
    let mut rng = seeded(DEFAULT_SEED);
    for t in 0..100 {
        let h = random_hessenberg(&mut rng, 12, -9, 9);
        let (rec, bar) = (
            det_hessenberg_recurrence(&h),
            det_bareiss(h.as_dense()).map_err(|e| e.to_string())?,
        );
        ensure(rec == bar, || {
            format!("trial {t}: recurrence {rec} != bareiss {bar}")
        })?;
    }
    Ok("100 random Hessenberg matrices exact".into())
}

fn performance_sanity() -> Check {
    let det = catalan_det(200);
    ensure(det == catalan_closed(200), || {
        "catalan_det(200) wrong".into()
    })?;
    Ok(format!("C_200 has {} digits", det.to_string().len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "Catalan determinant = closed form",
            budget: Some(Duration::from_secs(1)),
            run: catalan_determinant,
        },
        Criterion {
            id: 2,
            name: "Ming Antu recurrence = closed form",
            budget: Some(Duration::from_secs(5)),
            run: mingantu_recurrence,
        },
        Criterion {
            id: 3,
            name: "Path determinant = DP, Dyck = Catalan",
            budget: Some(Duration::from_secs(2)),
            run: path_counts,
        },
        Criterion {
            id: 4,
            name: "Toeplitz minors = C(n+k-1, k)",
            budget: Some(Duration::from_secs(2)),
            run: toeplitz_minors_closed_form,
        },
        Criterion {
            id: 5,
            name: "Pascal column golden file",
            budget: None,
            run: pascal_column_golden,
        },
        Criterion {
            id: 6,
            name: "Alternating binomial convolution",
            budget: None,
            run: alternating_convolution,
        },
        Criterion {
            id: 7,
            name: "J_{n,m} recurrence three-way",
            budget: None,
            run: toeplitz_recurrence,
        },
        Criterion {
            id: 8,
            name: "Reciprocal engine",
            budget: None,
            run: reciprocal_engine,
        },
        Criterion {
            id: 9,
            name: "Determinant engine soundness",
            budget: None,
            run: determinant_engines,
        },
        Criterion {
            id: 10,
            name: "catalan_det(200) performance",
            budget: Some(Duration::from_secs(10)),
            run: performance_sanity,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&result, c.budget) {
            (Err(e), _) => Err(e.clone()),
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (Ok(detail), _) => Ok(detail.clone()),
        };
        match verdict {
            Ok(detail) => println!("PASS [{:>2}] {} ({detail}; {elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why}", c.id, c.name);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
