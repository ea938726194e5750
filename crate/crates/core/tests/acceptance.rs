//! Acceptance sweep. Prints one PASS / RED / FAIL line per criterion.
//!
//! RED marks a criterion whose literal wording cannot hold because the
//! underlying claim is false; the sweep then asserts the exact counterexample
//! set instead, so any additional discrepancy still fails the run.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use eds_unicyclic::audit::{
    check_degree_bounds, check_lemma, check_theorem, formula_audit, matching_oracle_check, oracle_fingerprints,
    reproduce_tables, AuditedFormula, CellReport, CellStatus, FormulaStatus, LemmaId, TheoremId,
};
use eds_unicyclic::families::{make_cycle, parse_family_spec};
use eds_unicyclic::formulas::{eval, FormulaId, Rank};
use eds_unicyclic::graph::{eds, eds_pair_form, transmission, wiener, Graph};
use eds_unicyclic::{unicyclic_canonical_code, UnicyclicCode};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

enum Verdict {
    Pass(String),
    Red(String),
}

type Outcome = Result<Verdict, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn code(spec: &str) -> Result<UnicyclicCode, String> {
    let g = parse_family_spec(spec).map_err(err)?.build().map_err(err)?;
    unicyclic_canonical_code(&g).map_err(err)
}

/// Floyd-Warshall distances, independent of the library's BFS.
fn floyd(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

fn oracle_eds(g: &Graph) -> u64 {
    floyd(g)
        .iter()
        .map(|row| row.iter().max().unwrap() * row.iter().sum::<u64>())
        .sum()
}

fn table(rank: Rank, n_max: usize, budget: Duration) -> Result<(Vec<CellReport>, String), String> {
    let start = Instant::now();
    let cells = reproduce_tables(n_max, Some(rank)).map_err(err)?;
    let elapsed = start.elapsed();
    let mut errata = Vec::new();
    for c in &cells {
        match c.status {
            CellStatus::Match => {}
            CellStatus::ErratumKnown if rank == Rank::Minimum && (c.n, c.m) == (5, 2) => {
                ensure(c.printed == 54 && c.computed == Some(56), || format!("(5,2): {c:?}"))?;
                errata.push(format!("({},{}) printed {} computed 56", c.n, c.m, c.printed));
            }
            _ => {
                return Err(format!(
                    "cell ({},{}) {:?}: printed {} computed {:?}",
                    c.n, c.m, c.status, c.printed, c.computed
                ))
            }
        }
    }
    ensure(elapsed < budget, || format!("took {elapsed:?}"))?;
    let summary = format!("{} cells in {:.1?}; errata {:?}", cells.len(), elapsed, errata);
    Ok((cells, summary))
}

fn criterion_1() -> Outcome {
    let (cells, summary) = table(Rank::Minimum, 12, Duration::from_secs(30))?;
    let errata: Vec<_> = cells.iter().filter(|c| c.status == CellStatus::ErratumKnown).collect();
    ensure(errata.len() == 1, || {
        format!("expected exactly one erratum, got {}", errata.len())
    })?;
    Ok(Verdict::Pass(summary))
}

fn criterion_2() -> Outcome {
    let (cells, summary) = table(Rank::Second, 16, Duration::from_secs(300))?;
    let expect = [
        (8, 4, 377, "U(8,4)"),
        (13, 4, 1088, "H(13,5;[1^1],[1^6],[1^1])"),
        (16, 4, 1660, "U1(16,4)"),
    ];
    for (n, m, value, spec) in expect {
        let c = cells
            .iter()
            .find(|c| (c.n, c.m) == (n, m))
            .ok_or_else(|| format!("cell ({n},{m}) missing"))?;
        ensure(c.computed == Some(value), || {
            format!("({n},{m}) computed {:?}", c.computed)
        })?;
        let want = code(spec)?;
        ensure(c.computed_codes == vec![want.clone()], || {
            format!("({n},{m}) graph {:?} vs {want}", c.computed_codes)
        })?;
    }
    for n in 13..=16 {
        ensure(cells.iter().any(|c| (c.n, c.m) == (n, 4)), || {
            format!("row ({n},4) missing")
        })?;
    }
    Ok(Verdict::Pass(summary))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for &id in TheoremId::ALL.iter() {
        let r = check_theorem(id, None, None).map_err(err)?;
        ensure(r.passed && r.violations.is_empty(), || {
            format!("{id}: {:?}", r.violations)
        })?;
        ensure(r.checked > 0, || format!("{id}: nothing checked"))?;
        parts.push(format!("{id}:{}", r.checked));
    }
    Ok(Verdict::Pass(parts.join(" ")))
}

fn integer(id: FormulaId, p: &[i64]) -> Result<i64, String> {
    let v = eval(id, p).map_err(err)?;
    v.as_integer().ok_or_else(|| format!("{id}{p:?} not integral"))
}

fn criterion_4() -> Outcome {
    for m in 2..=50 {
        let n = 2 * m;
        ensure(
            eval(FormulaId::F1, &[n, m]).map_err(err)? == eval(FormulaId::G1, &[m]).map_err(err)?,
            || format!("f1({n},{m}) != g1({m})"),
        )?;
        ensure(
            eval(FormulaId::F2, &[n, m]).map_err(err)? == eval(FormulaId::G2, &[m]).map_err(err)?,
            || format!("f2({n},{m}) != g2({m})"),
        )?;
    }
    for k in 3..=20usize {
        let c = make_cycle(k).map_err(err)?;
        let ki = k as i64;
        let d = integer(FormulaId::EQ23_D, &[ki])?;
        let w = integer(FormulaId::EQ23_W, &[ki])?;
        let truth = oracle_eds(&c) as i64;
        ensure(truth == ki * (ki / 2) * d, || {
            format!("C_{k}: eds {truth} vs k*floor(k/2)*D")
        })?;
        ensure(eds(&c).map_err(err)? as i64 == truth, || format!("C_{k}: library eds"))?;
        ensure(
            wiener(&c).map_err(err)? as i64 == w && transmission(&c, 0).map_err(err)? as i64 == d,
            || format!("C_{k}: W or D"),
        )?;
    }
    for m in 2..=10u64 {
        let even = oracle_eds(&make_cycle(2 * m as usize).map_err(err)?);
        let odd = oracle_eds(&make_cycle(2 * m as usize + 1).map_err(err)?);
        ensure(even == 2 * m.pow(4), || format!("C_{}", 2 * m))?;
        ensure(odd == 2 * m.pow(4) + 3 * m.pow(3) + m * m, || {
            format!("C_{}", 2 * m + 1)
        })?;
    }
    Ok(Verdict::Pass("m<=50, k<=20, cycles to C_21".into()))
}

fn criterion_5() -> Outcome {
    let hnk = formula_audit(AuditedFormula::Hnk, 3..=14, None).map_err(err)?;
    for r in &hnk {
        ensure(r.status == FormulaStatus::DocumentedDelta, || format!("H: {r:?}"))?;
    }
    let at = |n: usize, k: usize| hnk.iter().find(|r| r.n == Some(n) && r.k == k).cloned();
    let h64 = at(6, 4).ok_or("H_{6,4} missing")?;
    let h53 = at(5, 3).ok_or("H_{5,3} missing")?;
    ensure(h64.printed_num == Some(140) && h64.computed == 134, || {
        format!("{h64:?}")
    })?;
    ensure(h53.printed_num == Some(57) && h53.computed == 56, || format!("{h53:?}"))?;

    let unk = formula_audit(AuditedFormula::Unk, 3..=14, None).map_err(err)?;
    let mut off = BTreeSet::new();
    for r in &unk {
        let odd5 = r.k >= 5 && r.k % 2 == 1;
        let want = if odd5 {
            FormulaStatus::DocumentedDelta
        } else {
            FormulaStatus::Agree
        };
        ensure(r.status == want, || format!("U: {r:?}"))?;
        if odd5 {
            ensure(r.delta_num == Some(5 * r.k as i64) && r.delta_den == Some(4), || {
                format!("U: {r:?}")
            })?;
            off.insert(r.k);
        }
    }
    let agree = unk.iter().filter(|r| r.status == FormulaStatus::Agree).count();
    Ok(Verdict::Red(format!(
        "{} H rows off by 1 (odd k) / n (even k) as documented; U_n(k): {agree} rows agree, odd k in {off:?} \
         print a value 5k/4 above the exhaustive eds (non-integral), so exact agreement is unattainable",
        hnk.len()
    )))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let f = oracle_fingerprints(7).map_err(err)?;
    ensure(f.passed, || format!("{:?}", f.violations))?;
    let m = matching_oracle_check(10).map_err(err)?;
    ensure(m.passed, || format!("{:?}", m.violations))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(Verdict::Pass(format!(
        "{} classes fingerprinted, {} matchings in {elapsed:.1?}",
        f.checked, m.checked
    )))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for &id in LemmaId::ALL.iter() {
        let r = check_lemma(id, None, None).map_err(err)?;
        ensure(r.passed && r.violations.is_empty(), || {
            format!("{id}: {:?}", r.violations)
        })?;
        if id == LemmaId::L2_4 {
            let u63 = code("U(6,3)")?.to_string();
            let gaps: Vec<_> = r.errata.iter().map(|f| f.subject.clone()).collect();
            ensure(
                r.errata
                    .iter()
                    .any(|f| f.subject.starts_with(&u63) && f.detail.contains("lhs 148 rhs 152")),
                || format!("U_6,3 gap not reported: {gaps:?}"),
            )?;
            ensure(
                r.errata.iter().all(|f| f.detail.starts_with("precondition gap")),
                || format!("{gaps:?}"),
            )?;
            parts.push(format!("{id}:{} ({} gap cases)", r.checked, r.errata.len()));
        } else {
            ensure(r.errata.is_empty(), || format!("{id}: {:?}", r.errata))?;
            parts.push(format!("{id}:{}", r.checked));
        }
    }
    Ok(Verdict::Pass(parts.join(" ")))
}

fn criterion_8() -> Outcome {
    let r = check_degree_bounds(10).map_err(err)?;
    ensure(r.passed && r.violations.is_empty(), || format!("{:?}", r.violations))?;
    // The extra equality cases of the sharper bound: 34 classes up to n = 10,
    // all of girth 3.
    ensure(r.errata.len() == 34, || {
        format!("{} extra equality cases", r.errata.len())
    })?;
    for f in &r.errata {
        ensure(f.subject.starts_with("3:"), || {
            format!("unexpected equality case {f:?}")
        })?;
    }
    Ok(Verdict::Red(format!(
        "{} classes; n-m+1 equality exactly on U_n,m; n-m bound holds but {} girth-3 classes outside the five \
         siblings also attain it, so the claimed equality characterization is false",
        r.checked,
        r.errata.len()
    )))
}

fn random_unicyclic(rng: &mut StdRng, n: usize) -> Graph {
    let k = rng.gen_range(3..=n);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for v in k..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::new(n, &edges).expect("valid unicyclic graph")
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let n = rng.gen_range(3..=10);
        let g = random_unicyclic(&mut rng, n);
        let d = floyd(&g);
        let w: u64 = d.iter().flatten().sum::<u64>() / 2;
        let sum_d: u64 = d.iter().map(|r| r.iter().sum::<u64>()).sum();
        ensure(sum_d == 2 * w, || format!("trial {trial}: sum D != 2W"))?;
        let e = eds(&g).map_err(err)?;
        ensure(e == oracle_eds(&g) && e == eds_pair_form(&g).map_err(err)?, || {
            format!("trial {trial}: eds forms")
        })?;

        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm);
        let a = eds_unicyclic::InvariantReport::compute(&g).map_err(err)?;
        let mut b = eds_unicyclic::InvariantReport::compute(&h).map_err(err)?;
        // Per-vertex vectors follow the labels; pull them back before comparing.
        b.eccentricities = perm.iter().map(|&p| b.eccentricities[p]).collect();
        b.transmissions = perm.iter().map(|&p| b.transmissions[p]).collect();
        ensure(a == b, || format!("trial {trial}: invariants change under relabeling"))?;
        ensure(
            unicyclic_canonical_code(&g).map_err(err)? == unicyclic_canonical_code(&h).map_err(err)?,
            || format!("trial {trial}: code changes under relabeling"),
        )?;
        ensure(wiener(&g).map_err(err)? == w, || format!("trial {trial}: wiener"))?;
    }
    Ok(Verdict::Pass("200 random trials, n <= 10".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table 1 reproduction", criterion_1),
        ("table 2 reproduction", criterion_2),
        ("theorem sweeps", criterion_3),
        ("closed-form consistency", criterion_4),
        ("formula audit", criterion_5),
        ("oracle equivalences", criterion_6),
        ("lemma sweeps", criterion_7),
        ("degree-bound characterization", criterion_8),
        ("property suite", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let line = match run() {
            Ok(Verdict::Pass(d)) => format!("PASS {}", d),
            Ok(Verdict::Red(d)) => format!("RED  {}", d),
            Err(e) => {
                failed += 1;
                format!("FAIL {}", e)
            }
        };
        println!("criterion {} [{name}] ({:.1?}): {line}", i + 1, start.elapsed());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
