use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use moduli_core::arith::{is_real_rooted, Poly};
use moduli_core::comb::{CombError, EnumerationLimits};
use moduli_core::moduli::{
    dims_a, dims_b_by_evaluation, dims_b_recursive, gamma_table, real_rootedness, Kind, Method,
    ModuliError, PoincareTable,
};
use moduli_core::oeis::{
    self, compare_dims, default_cache_dir, dims_b_from_record, Cache, Client, FetchPolicy,
    HttpTransport, NoNetwork, OeisId, SequenceRecord,
};
use moduli_core::verify::{mutation_sweep, run_all, RunConfig};
use num_traits::Signed;

use crate::record::{Emitter, Format, OutputRecord, RecordKind};
use crate::{parse_coeffs, Command, NRange, EXIT_FAILURE, EXIT_OK};

pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<ModuliError> for Failure {
    fn from(e: ModuliError) -> Self {
        match e {
            ModuliError::Comb(CombError::LimitExceeded { .. }) | ModuliError::WrongKind { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn internal(e: impl Display) -> Failure {
    Failure::Internal(e.to_string())
}

type Outcome = Result<i32, Failure>;

pub fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Poly {
            kind,
            range,
            method,
            verify_cross,
            format,
        } => poly(
            kind,
            &range,
            method,
            verify_cross,
            &mut Emitter::new(out, format),
            err,
        ),
        Command::Gamma {
            kind,
            range,
            assert_positive,
            format,
        } => gamma(
            kind,
            &range,
            assert_positive,
            &mut Emitter::new(out, format),
            err,
        ),
        Command::Verify {
            order,
            oracle_max,
            self_test,
            mutation_sweep,
            format,
        } => {
            let config = RunConfig {
                order,
                oracle_max_n: oracle_max,
                self_test,
                limits: EnumerationLimits::default(),
            };
            verify(&config, mutation_sweep, &mut Emitter::new(out, format), err)
        }
        Command::Roots {
            kind,
            range,
            poly,
            max_n,
            assert_real,
            format,
        } => {
            let mut emitter = Emitter::new(out, format);
            match (poly, kind, range) {
                (Some(coeffs), _, _) => roots_of(&coeffs, assert_real, &mut emitter),
                (None, Some(kind), Some(range)) => {
                    roots(kind, &range, max_n, assert_real, &mut emitter)
                }
                _ => Err(Failure::Usage(
                    "give a family and range, or --poly".to_owned(),
                )),
            }
        }
        Command::Dims {
            max_n,
            offline,
            policy,
            oeis_check,
            format,
        } => {
            let policy = if offline {
                FetchPolicy::Offline
            } else {
                policy
            };
            dims(
                max_n,
                policy,
                oeis_check,
                &mut Emitter::new(out, format),
                err,
            )
        }
        Command::SeedFixtures {
            fixtures_dir,
            golden_dir,
        } => {
            let root = Path::new(env!("CARGO_MANIFEST_DIR"));
            let fixtures = fixtures_dir.unwrap_or_else(|| root.join("../core/fixtures"));
            let golden = golden_dir.unwrap_or_else(|| root.join("tests/golden"));
            seed_fixtures(&fixtures, &golden, out)
        }
    }
}

fn default_method(kind: Kind) -> Method {
    match kind {
        Kind::A => Method::Keel,
        Kind::B => Method::QuadraticB,
    }
}

fn poly_kind(kind: Kind) -> RecordKind {
    match kind {
        Kind::A => RecordKind::A,
        Kind::B => RecordKind::B,
    }
}

fn gamma_kind(kind: Kind) -> RecordKind {
    match kind {
        Kind::A => RecordKind::GammaA,
        Kind::B => RecordKind::GammaB,
    }
}

fn poly(
    kind: Kind,
    range: &NRange,
    method: Option<Method>,
    verify_cross: bool,
    emitter: &mut Emitter<'_>,
    err: &mut dyn Write,
) -> Outcome {
    let method = method.unwrap_or(default_method(kind));
    if method.kind() != kind {
        return Err(ModuliError::WrongKind { method, kind }.into());
    }
    let table = PoincareTable::compute(method, range.end)?;
    for n in range.iter() {
        let r = OutputRecord::poly(poly_kind(kind), n, method.tag(), &table.polys()[n]);
        emitter.emit(&r)?;
    }
    let mut code = EXIT_OK;
    let violations: Vec<_> = table
        .invariant_violations()
        .into_iter()
        .filter(|n| range.iter().contains(n))
        .collect();
    if !violations.is_empty() {
        writeln!(err, "invariant violated at n = {violations:?}")?;
        code = EXIT_FAILURE;
    }
    if verify_cross {
        let limit = EnumerationLimits::default().signed_partitions;
        for other in Method::ALL {
            if other == method
                || other.kind() != kind
                || (other == Method::Oracle && range.end > limit)
            {
                continue;
            }
            let theirs = PoincareTable::compute(other, range.end)?;
            match range
                .iter()
                .find(|&n| theirs.polys()[n] != table.polys()[n])
            {
                None => writeln!(err, "cross-check {} = {}: ok", method.tag(), other.tag())?,
                Some(n) => {
                    writeln!(
                        err,
                        "cross-check {} = {}: differ at n = {n}",
                        method.tag(),
                        other.tag()
                    )?;
                    code = EXIT_FAILURE;
                }
            }
        }
    }
    Ok(code)
}

fn gamma(
    kind: Kind,
    range: &NRange,
    assert_positive: bool,
    emitter: &mut Emitter<'_>,
    err: &mut dyn Write,
) -> Outcome {
    let method = default_method(kind);
    let table = PoincareTable::compute(method, range.end)?;
    let gammas = gamma_table(&table).map_err(internal)?;
    let mut negative = Vec::new();
    for n in range.iter() {
        let g = &gammas[n];
        if g.coeffs().iter().any(|c| c.is_negative()) {
            negative.push(n);
        }
        emitter.emit(&OutputRecord::poly(gamma_kind(kind), n, method.tag(), g))?;
    }
    if assert_positive && !negative.is_empty() {
        writeln!(err, "negative γ-coefficients at n = {negative:?}")?;
        return Ok(EXIT_FAILURE);
    }
    Ok(EXIT_OK)
}

fn verify(
    config: &RunConfig,
    sweep: bool,
    emitter: &mut Emitter<'_>,
    err: &mut dyn Write,
) -> Outcome {
    let limit = config.limits.signed_partitions;
    if config.oracle_max_n > limit {
        return Err(Failure::Usage(format!("--oracle-max is at most {limit}")));
    }
    if sweep {
        let rows = mutation_sweep(config.order, config.oracle_max_n, &config.limits);
        let mut missed = 0;
        for m in &rows {
            missed += usize::from(!m.detected);
            let name = format!("mutation:{}:{}_{}", m.check, m.table, m.index);
            emitter.emit(&OutputRecord::check(config.order, &name, m.detected, None))?;
        }
        writeln!(
            err,
            "mutation sweep: {} of {} corruptions detected",
            rows.len() - missed,
            rows.len()
        )?;
        return Ok(if missed == 0 { EXIT_OK } else { EXIT_FAILURE });
    }
    let checks = run_all(config);
    for c in &checks {
        let detail = c
            .residual_nonzero_at
            .map(|k| format!("at t^{k}: {}", c.offending.as_deref().unwrap_or("")));
        emitter.emit(&OutputRecord::check(c.order, &c.name, c.passed(), detail))?;
    }
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name.as_str())
        .collect();
    if config.self_test {
        let detected = failed == ["manin_functional"];
        writeln!(
            err,
            "self-test: corruption {}",
            if detected {
                "detected by manin_functional only"
            } else {
                "NOT isolated"
            }
        )?;
        return Ok(if detected { EXIT_OK } else { EXIT_FAILURE });
    }
    writeln!(
        err,
        "{} of {} checks passed",
        checks.len() - failed.len(),
        checks.len()
    )?;
    Ok(if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn emit_root(
    emitter: &mut Emitter<'_>,
    label: Option<usize>,
    n: usize,
    real: bool,
) -> std::io::Result<()> {
    match (emitter.format(), label) {
        (Format::Plain, Some(n)) => emitter.note(&format!("{n} {real}")),
        (Format::Plain, None) => emitter.note(&real.to_string()),
        _ => emitter.emit(&OutputRecord::check(n, "sturm_real_rooted", real, None)),
    }
}

fn roots(
    kind: Kind,
    range: &NRange,
    max_n: usize,
    assert_real: bool,
    emitter: &mut Emitter<'_>,
) -> Outcome {
    if range.end > max_n {
        return Err(Failure::Usage(format!(
            "range ends at {} but --max-n is {max_n}",
            range.end
        )));
    }
    let table = PoincareTable::compute(default_method(kind), range.end)?;
    let verdicts = real_rootedness(&table, range.start);
    for &(n, real) in &verdicts {
        emit_root(emitter, Some(n), n, real)?;
    }
    Ok(if assert_real && verdicts.iter().any(|&(_, r)| !r) {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn roots_of(coeffs: &str, assert_real: bool, emitter: &mut Emitter<'_>) -> Outcome {
    let p = parse_coeffs(coeffs).map_err(Failure::Usage)?;
    let real = is_real_rooted(&p);
    emit_root(emitter, None, p.degree().unwrap_or(0), real)?;
    Ok(if assert_real && !real {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn fetch(policy: FetchPolicy) -> Result<SequenceRecord, oeis::OeisError> {
    let dir = default_cache_dir().unwrap_or_else(|| std::env::temp_dir().join("moduli-oeis"));
    let cache = Cache::new(dir);
    let id = OeisId::A074059;
    if policy == FetchPolicy::Offline {
        Client::new(NoNetwork, cache).fetch(id, policy)
    } else {
        Client::new(HttpTransport::default(), cache).fetch(id, policy)
    }
}

fn dims(
    max_n: usize,
    policy: FetchPolicy,
    oeis_check: bool,
    emitter: &mut Emitter<'_>,
    err: &mut dyn Write,
) -> Outcome {
    let a = moduli_core::moduli::compute_a_keel(max_n);
    let da = dims_a(&a);
    let db = dims_b_recursive(&a);
    let db_eval = dims_b_by_evaluation(&moduli_core::moduli::compute_b_quadratic(max_n));
    let mut code = EXIT_OK;
    if db != db_eval {
        writeln!(err, "dims_B: recursion and B_n(1) disagree")?;
        code = EXIT_FAILURE;
    }
    let join = |v: &[num_bigint::BigInt]| {
        v.iter()
            .skip(1)
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    if emitter.format() == Format::Plain {
        emitter.note(&format!("A_n(1): {}", join(&da)))?;
        emitter.note(&format!("B_n(1): {}", join(&db)))?;
    } else {
        for (label, values) in [("A_n(1)", &da), ("B_n(1)", &db)] {
            for (n, v) in values.iter().enumerate().skip(1) {
                emitter.emit(&OutputRecord {
                    kind: RecordKind::Dims,
                    n,
                    method: label.to_owned(),
                    coeffs: vec![v.to_string()],
                    status: None,
                    detail: None,
                })?;
            }
        }
    }
    if oeis_check {
        let record = fetch(policy).map_err(internal)?;
        let source = record.source;
        let cmp = compare_dims(&record, &da, oeis::A074059_SHIFT);
        let from_oeis = dims_b_from_record(&record, max_n);
        let b_ok = from_oeis.iter().zip(&db).all(|(x, y)| x == y);
        match &cmp.first_mismatch {
            None => writeln!(
                err,
                "oeis A074059 ({source}): A_n(1) matches over {} terms",
                cmp.compared
            )?,
            Some(m) => {
                writeln!(
                    err,
                    "oeis A074059 ({source}): A_{}(1) = {} but OEIS has {}",
                    m.n, m.computed, m.expected
                )?;
                code = EXIT_FAILURE;
            }
        }
        if b_ok {
            writeln!(
                err,
                "oeis A074059: type B recursion reproduces B_n(1) for n <= {}",
                from_oeis.len() - 1
            )?;
        } else {
            writeln!(err, "oeis A074059: type B recursion disagrees with B_n(1)")?;
            code = EXIT_FAILURE;
        }
    }
    Ok(code)
}

/// Bounds of the committed golden tables.
pub const GOLDEN_MAX_N: usize = 20;

pub fn golden_files() -> Vec<(&'static str, Vec<OutputRecord>)> {
    let a = PoincareTable::compute(Method::Keel, GOLDEN_MAX_N).expect("keel");
    let b = PoincareTable::compute(Method::QuadraticB, GOLDEN_MAX_N).expect("quadratic");
    let gb = gamma_table(&b).expect("palindromic");
    let records = |kind, method: Method, polys: &[Poly]| {
        polys
            .iter()
            .enumerate()
            .map(|(n, p)| OutputRecord::poly(kind, n, method.tag(), p))
            .collect::<Vec<_>>()
    };
    vec![
        ("A.jsonl", records(RecordKind::A, Method::Keel, a.polys())),
        (
            "B.jsonl",
            records(RecordKind::B, Method::QuadraticB, b.polys()),
        ),
        (
            "gammaB.jsonl",
            records(RecordKind::GammaB, Method::QuadraticB, &gb),
        ),
    ]
}

fn write_file(path: PathBuf, contents: &str, out: &mut dyn Write) -> Result<(), Failure> {
    std::fs::write(&path, contents).map_err(|e| internal(format!("{}: {e}", path.display())))?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

fn seed_fixtures(fixtures: &Path, golden: &Path, out: &mut dyn Write) -> Outcome {
    std::fs::create_dir_all(fixtures)?;
    std::fs::create_dir_all(golden)?;
    write_file(
        fixtures.join("b074059.txt"),
        &oeis::render_a074059_fixture(),
        out,
    )?;
    for (name, records) in golden_files() {
        let mut text = String::new();
        for r in records {
            text.push_str(&serde_json::to_string(&r).map_err(internal)?);
            text.push('\n');
        }
        write_file(golden.join(name), &text, out)?;
    }
    Ok(EXIT_OK)
}
