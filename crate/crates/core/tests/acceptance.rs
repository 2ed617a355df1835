//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{datum, matrix, spec, MATRIX_ALGEBRAS};
use num_rational::Rational64;
use wv_core::branching::{branch, compute_fan, default_depth, BranchingResult, Fan};
use wv_core::embedding::{build_embedding, EmbeddingDescriptor};
use wv_core::formal::FormalElement;
use wv_core::oracle::{brute_force_branch, character_by_division, freudenthal};
use wv_core::resolution::{bgg_resolution, resolution_from_branching, verify_euler, ResolutionSequence};
use wv_core::singular::{compute_u, decompose, singular_element, SingularDecomposition};
use wv_core::verma::{
    gv_character, gv_to_ordinary, parabolic_data, standard_weyl_verma, weyl_verma_decompose, WeylVermaDecomposition,
};

type Check = Result<(), String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn reconstruction() -> Check {
    let mut cases = 0;
    for m in matrix(2) {
        let d = m.spec.ambient();
        for (labels, mu) in &m.weights {
            let expanded = decompose(&m.spec, mu).map_err(err)?.expand(&m.spec).map_err(err)?;
            let direct = singular_element(d, mu).map_err(err)?;
            ensure(expanded == direct, || format!("{} mu={labels:?}", m.label()))?;
            cases += 1;
        }
    }
    println!("    {cases} triples");
    Ok(())
}

fn branching_vs_oracle() -> Check {
    let mut cases = 0;
    for m in matrix(2) {
        for (labels, mu) in &m.weights {
            let depth = default_depth(&m.spec, mu).map_err(err)?;
            let b = branch(&m.spec, mu, depth).map_err(err)?.b;
            let oracle = brute_force_branch(&m.spec, mu).map_err(err)?;
            ensure(b == oracle, || format!("{} mu={labels:?}: {b:?} != {oracle:?}", m.label()))?;
            cases += 1;
        }
    }
    println!("    {cases} triples");
    Ok(())
}

fn worked_example() -> Check {
    let s = spec("B2", &[&[1, 2]]);
    let d = s.ambient();
    let w1 = d.fundamental_weights()[0].clone();
    let u = compute_u(&s, &w1).map_err(err)?;
    ensure(u.len() == 4, || format!("|U| = {}", u.len()))?;
    let dec = weyl_verma_decompose(&s, &w1, 8).map_err(err)?;
    let signs: i64 = dec.entries.iter().map(|e| e.sign).sum();
    ensure(dec.entries.len() == 4 && signs == 0, || "expected two positive and two negative modules".into())?;
    let ch = freudenthal(d, &w1).map_err(err)?;
    ensure(ch.multiplicities.len() == 5 && ch.multiplicities.values().all(|&m| m == 1), || {
        format!("ch L^w1 = {:?}", ch.multiplicities)
    })?;
    let euler = dec.euler_sum(d);
    ensure(euler == ch.to_formal(), || format!("Euler sum {euler} differs from ch L^w1"))?;
    let depth = default_depth(&s, &w1).map_err(err)?;
    let rows = branch(&s, &w1, depth).map_err(err)?.rows(&s).map_err(err)?;
    let table: Vec<(Vec<Rational64>, u64)> = rows.iter().map(|r| (r.labels.clone(), r.multiplicity)).collect();
    let expected = vec![(vec![Rational64::from_integer(1)], 2), (vec![Rational64::from_integer(0)], 1)];
    ensure(table == expected, || format!("branching {table:?}"))
}

fn euler_identity() -> Check {
    let mut cases = 0;
    for m in matrix(2) {
        for (labels, mu) in &m.weights {
            let seq = bgg_resolution(&m.spec, mu).map_err(err)?;
            for depth in [4, 6, 8] {
                let ok = verify_euler(&seq, &m.spec, depth).map_err(err)?;
                ensure(ok, || format!("{} mu={labels:?} depth {depth}", m.label()))?;
                cases += 1;
            }
        }
    }
    println!("    {cases} (triple, depth) pairs");
    Ok(())
}

fn character_identities() -> Check {
    const DEPTH: u32 = 6;
    let mut cases = 0;
    for m in matrix(2) {
        let pd = parabolic_data(&m.spec).map_err(err)?;
        for (labels, mu) in &m.weights {
            for e in decompose(&m.spec, mu).map_err(err)?.entries {
                let gv = gv_character(&pd, &e.perp_hw, DEPTH).map_err(err)?.terms;
                let ordinary = gv_to_ordinary(&pd, &e.perp_hw, DEPTH).map_err(err)?;
                ensure(gv == ordinary, || format!("{} mu={labels:?} lambda={}", m.label(), e.perp_hw))?;
                cases += 1;
            }
        }
    }
    for name in MATRIX_ALGEBRAS {
        let d = datum(name);
        for labels in wv_core::rootspace::label_grid(d.rank(), 2) {
            let mu = d.from_dynkin_labels(&labels).map_err(err)?;
            let verma = standard_weyl_verma(&d, &mu, DEPTH).map_err(err)?;
            let division = character_by_division(&d, &mu, DEPTH).map_err(err)?;
            let exact = freudenthal(&d, &mu).map_err(err)?.to_formal().below(&d, &mu, DEPTH);
            ensure(verma == division && division == exact, || format!("{name} mu={labels:?}"))?;
            cases += 1;
        }
    }
    println!("    {cases} identities at depth {DEPTH}");
    Ok(())
}

fn recovered_resolution() -> Check {
    let mut cases = 0;
    for m in matrix(2) {
        if m.spec.perp_system().rank() != 1 {
            continue;
        }
        for (labels, mu) in &m.weights {
            let recovered = resolution_from_branching(&m.spec, mu, None).map_err(err)?;
            let direct = bgg_resolution(&m.spec, mu).map_err(err)?;
            ensure(recovered == direct, || format!("{} mu={labels:?}", m.label()))?;
            cases += 1;
        }
    }
    ensure(cases > 0, || "no rank-one partner in the matrix".into())?;
    println!("    {cases} triples");
    Ok(())
}

fn degenerate_limits() -> Check {
    for name in MATRIX_ALGEBRAS {
        let d = datum(name);
        let all: Vec<Vec<i64>> = (0..d.rank()).map(|i| (0..d.rank()).map(|j| i64::from(i == j)).collect()).collect();
        let whole = build_embedding(&d, &all).map_err(err)?;
        let order = d.weyl_group().map_err(err)?.order();
        for labels in wv_core::rootspace::label_grid(d.rank(), 2) {
            let mu = d.from_dynkin_labels(&labels).map_err(err)?;
            let b = branch(&whole, &mu, default_depth(&whole, &mu).map_err(err)?).map_err(err)?.b;
            let identity = b.len() == 1 && b.get(&whole.project_a(&mu)) == Some(&1);
            ensure(identity, || format!("{name} mu={labels:?}: branching {b:?}"))?;
            let u = compute_u(&whole, &mu).map_err(err)?;
            ensure(u.len() == order, || format!("{name}: |U| = {} != |W| = {order}", u.len()))?;
        }
        let mut denominator = FormalElement::one(d.ambient_dim());
        for root in d.positive_roots() {
            let mut factor = FormalElement::one(d.ambient_dim());
            factor.add_term(-&root.vector, -1);
            denominator = &denominator * &factor;
        }
        ensure(singular_element(&d, &d.zero()).map_err(err)? == denominator, || {
            format!("{name}: denominator identity")
        })?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wv")).args(args).output().map_err(err)?;
    ensure(out.status.success(), || format!("wv {args:?} failed: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn round_trip<T>(value: &T) -> Check
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let json = serde_json::to_string(value).map_err(err)?;
    let back: T = serde_json::from_str(&json).map_err(err)?;
    ensure(&back == value, || format!("round trip changed {json}"))
}

fn determinism() -> Check {
    let invocations: [&[&str]; 6] = [
        &["branch", "B2", "--hw", "1,0", "--a-roots", "1,2", "--format", "json"],
        &["fan", "G2", "--a-roots", "0,1"],
        &["decompose", "B3", "--hw", "1,0,1", "--a-roots", "1,0,0"],
        &["verma", "A3", "--hw", "1,1,0", "--a-roots", "0,1,0", "--tables", "--format", "json"],
        &["resolve", "C3", "--hw", "0,1,0", "--a-roots", "1,0,0;0,1,0"],
        &["draw", "B2", "--hw", "1,1", "--a-roots", "1,2"],
    ];
    for args in invocations {
        let first = run_cli(args)?;
        ensure(first == run_cli(args)?, || format!("wv {args:?} is not byte-identical"))?;
    }

    let s = spec("B2", &[&[1, 2]]);
    let mu = s.ambient().fundamental_weights()[0].clone();
    round_trip(&EmbeddingDescriptor::from_json(r#"{"ambient":"B2","a_roots":[[1,2]]}"#).map_err(err)?)?;
    round_trip::<SingularDecomposition>(&decompose(&s, &mu).map_err(err)?)?;
    round_trip::<BranchingResult>(&branch(&s, &mu, 6).map_err(err)?)?;
    round_trip::<ResolutionSequence>(&bgg_resolution(&s, &mu).map_err(err)?)?;
    round_trip::<WeylVermaDecomposition>(&weyl_verma_decompose(&s, &mu, 6).map_err(err)?)?;
    round_trip::<FormalElement>(&singular_element(s.ambient(), &mu).map_err(err)?)?;

    for m in matrix(0) {
        let fan: Fan = compute_fan(&m.spec).map_err(err)?;
        round_trip(&fan)?;
        for depth in [4, 8] {
            ensure(fan.round_trip(Rational64::from_integer(depth)), || {
                format!("{}: fan round trip at {depth}", m.label())
            })?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 singular element reconstruction", Some(Duration::from_secs(60)), reconstruction),
        ("2 branching equals brute-force oracle", Some(Duration::from_secs(120)), branching_vs_oracle),
        ("3 B2 over A1(a1+2a2) worked example", None, worked_example),
        ("4 Weyl-Verma Euler identity at depths 4, 6, 8", None, euler_identity),
        ("5 character identities on windows", None, character_identities),
        ("6 resolution recovered from branching", None, recovered_resolution),
        ("7 degenerate limits and denominator identity", None, degenerate_limits),
        ("8 determinism and round trips", None, determinism),
    ];
    let mut failures = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = budget.filter(|b| elapsed > *b);
        match (&result, over) {
            (Ok(()), None) => println!("PASS {name} ({:.2}s)", elapsed.as_secs_f64()),
            (Ok(()), Some(b)) => {
                failures += 1;
                println!("FAIL {name}: {:.2}s exceeds the {}s budget", elapsed.as_secs_f64(), b.as_secs());
            }
            (Err(msg), _) => {
                failures += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
