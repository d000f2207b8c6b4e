use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use num_integer::Integer;
use orbiseif::engine::{
    compute, derived_quantities, lens_equivalent, seifert_from_quantities, somma_is_integral,
    BaseSignature, Location, SeifertData, Underlying,
};
use orbiseif::groups::{
    enumerate_specs, goursat_group, goursat_group_literal, standard_group, FamilyId, FamilySpec,
    StandardGroupId,
};
use orbiseif::oracle::{
    compare_reports, oracle_report, slope_invariant_with, torus_quotient_map, verify_spec,
};
use orbiseif::Rational;

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Written straight to the stderr handle so the line shows up without `--nocapture`.
fn announce(number: u32, name: &str, outcome: &Outcome, elapsed: Duration) -> bool {
    let passed = outcome.failures.is_empty();
    let mut line = format!(
        "criterion {number} [{}] {name}: {} ({:.1}s)",
        if passed { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed.as_secs_f64()
    );
    for f in outcome.failures.iter().take(10) {
        line.push_str(&format!("\n    {f}"));
    }
    if outcome.failures.len() > 10 {
        line.push_str(&format!("\n    ... {} more", outcome.failures.len() - 10));
    }
    let _ = writeln!(std::io::stderr(), "{line}");
    passed
}

fn group_orders() -> Outcome {
    let mut out = Outcome::new();
    for (id, order) in [
        (StandardGroupId::BinaryTetrahedral, 24),
        (StandardGroupId::BinaryOctahedral, 48),
        (StandardGroupId::BinaryIcosahedral, 120),
    ] {
        let elements = standard_group(id);
        let set: HashSet<_> = elements.iter().copied().collect();
        out.check(elements.len() == order && set.len() == order, || {
            format!("{id} has {} elements", elements.len())
        });
        let closed = elements.iter().all(|a| {
            elements
                .iter()
                .all(|b| set.contains(&a.multiply(b).unwrap()))
        });
        out.check(closed, || format!("{id} is not closed"));
    }
    let mut families = 0;
    let mut groups = 0;
    for family in FamilyId::ALL {
        let specs = enumerate_specs(family, 500);
        if specs.is_empty() {
            continue;
        }
        let picks: Vec<_> = [0, specs.len() / 2, specs.len() - 1]
            .into_iter()
            .collect::<HashSet<_>>()
            .into_iter()
            .map(|i| specs[i])
            .collect();
        for spec in picks {
            let g = goursat_group(&spec).unwrap();
            groups += 1;
            out.check(g.elements.len() as u64 == 2 * spec.phi_order(), || {
                format!(
                    "{}: {} elements, expected {}",
                    spec.label(),
                    g.elements.len(),
                    2 * spec.phi_order()
                )
            });
        }
        families += 1;
    }
    out.check(families >= 12, || {
        format!("only {families} families sampled")
    });
    out.detail = format!("T*, O*, I* closed; {groups} groups from {families} families");
    out
}

#[derive(Default)]
struct SweepStats {
    checked: usize,
    somma_checked: usize,
    somma_failures: Vec<String>,
    engines: Vec<SeifertData>,
}

fn sweep(families: &[FamilyId], max_order: u64, stats: &mut SweepStats, want_xi: bool) -> Outcome {
    let mut out = Outcome::new();
    let specs: Vec<FamilySpec> = families
        .iter()
        .flat_map(|&f| enumerate_specs(f, max_order))
        .collect();
    for spec in &specs {
        match verify_spec(spec) {
            Ok(v) => {
                out.check(v.passed(), || {
                    format!("{}: {}", spec.label(), v.differences.join("; "))
                });
                if want_xi {
                    let (e, o) = (v.engine.seifert.normalize(), v.oracle.seifert.normalize());
                    out.check(e.xi.is_some() && e.xi == o.xi, || {
                        format!("{}: xi engine {:?}, oracle {:?}", spec.label(), e.xi, o.xi)
                    });
                }
                for (path, d) in [("engine", &v.engine.seifert), ("oracle", &v.oracle.seifert)] {
                    stats.somma_checked += 1;
                    if !somma_is_integral(d) {
                        stats.somma_failures.push(format!(
                            "{} ({path}): residue {}",
                            spec.label(),
                            d.somma_residue()
                        ));
                    }
                }
                stats.engines.push(v.engine.seifert);
            }
            Err(e) => out.failures.push(format!("{}: {e}", spec.label())),
        }
    }
    stats.checked += specs.len();
    out.detail = format!(
        "{} specs with |Φ(G)| ≤ {max_order}, {} mismatches",
        specs.len(),
        out.failures.len()
    );
    out
}

fn normalized_pairs(d: &SeifertData) -> Vec<(i64, i64, i64)> {
    let mut v: Vec<_> = d
        .invariants
        .iter()
        .map(|x| (x.normalized_num(), x.den, x.index()))
        .collect();
    v.sort_unstable();
    v
}

fn spot_values() -> Outcome {
    let mut out = Outcome::new();
    let both = |spec: FamilySpec| {
        let engine = compute(&spec).unwrap();
        let oracle = oracle_report(&goursat_group(&spec).unwrap()).unwrap();
        (engine, oracle)
    };
    let expect = |out: &mut Outcome,
                  spec: FamilySpec,
                  base: BaseSignature,
                  invariants: Vec<(i64, i64, i64)>,
                  euler: Rational,
                  underlying: Option<Underlying>| {
        let (engine, oracle) = both(spec);
        for (path, d, u) in [
            ("engine", &engine.seifert, &engine.topology.underlying),
            ("oracle", &oracle.seifert, &oracle.topology.underlying),
        ] {
            let mut want = invariants.clone();
            want.sort_unstable();
            out.check(d.base.normalize() == base.normalize(), || {
                format!("{} ({path}): base {}", spec.label(), d.base)
            });
            out.check(normalized_pairs(d) == want, || {
                format!(
                    "{} ({path}): invariants {:?}",
                    spec.label(),
                    normalized_pairs(d)
                )
            });
            out.check(d.euler == euler, || {
                format!("{} ({path}): euler {}", spec.label(), d.euler)
            });
            if let Some(expected) = &underlying {
                out.check(u == expected, || {
                    format!("{} ({path}): underlying {u}", spec.label())
                });
            }
        }
    };
    expect(
        &mut out,
        FamilySpec::with_m(FamilyId::F9, 1),
        BaseSignature::sphere(&[2, 3, 5]),
        vec![(1, 2, 1), (1, 3, 1), (1, 5, 1)],
        Rational::new(-1, 30),
        None,
    );
    expect(
        &mut out,
        FamilySpec::with_mn(FamilyId::F2, 2, 3),
        BaseSignature::sphere(&[2, 2, 3]),
        vec![(2, 3, 1), (0, 2, 2), (0, 2, 2)],
        Rational::new(-2, 3),
        None,
    );
    for h in 2..=7 {
        expect(
            &mut out,
            FamilySpec::with_mnrs(FamilyId::F1p, 1, 1, 2 * h as u64, 1),
            BaseSignature::sphere(&[h as u64, h as u64]),
            vec![(1, h, 1), (0, h, h)],
            Rational::new(-1, h),
            Some(Underlying::ThreeSphere),
        );
    }
    let rp3 = FamilySpec::with_mnrs(FamilyId::F1, 1, 1, 1, 1);
    let (engine, oracle) = both(rp3);
    for (path, u) in [
        ("engine", &engine.topology.underlying),
        ("oracle", &oracle.topology.underlying),
    ] {
        out.check(*u == Underlying::LensSpace { p: 2, q: 1 }, || {
            format!("{} ({path}): underlying {u}", rp3.label())
        });
    }
    out.detail = "families 9, 2, 1p (h = 2..7) and 1 reproduce the published values".into();
    out
}

fn properties(abelian: &[FamilySpec], engines: &[SeifertData]) -> Outcome {
    let mut out = Outcome::new();
    let mut tally = Vec::new();
    let mut mark = |out: &Outcome, name: &str| {
        let before: usize = tally.iter().map(|(_, n)| n).sum();
        tally.push((name.to_string(), out.failures.len() - before));
    };
    let mut triples = 0u64;
    for e in 1..=200i64 {
        for d in 0..e {
            for g in 0..e {
                if d.gcd(&e).gcd(&g) != 1 {
                    continue;
                }
                triples += 1;
                let map = torus_quotient_map(d, e, g).unwrap();
                out.check(map.determinant() == e, || {
                    format!("det of ({d},{e},{g}) is {}", map.determinant())
                });
                if e <= 60 {
                    let base = slope_invariant_with(&map, (1, 1), 0);
                    for shift in [-1, 1, 3] {
                        let other = slope_invariant_with(&map, (1, 1), shift);
                        out.check(base.normalize() == other.normalize(), || {
                            format!("ā shift {shift} changes ({d},{e},{g}): {base} vs {other}")
                        });
                    }
                }
            }
        }
    }

    mark(&out, "lattice");
    for spec in abelian.iter().filter(|s| s.family.is_abelian()) {
        let q = derived_quantities(spec).unwrap();
        out.check(q.b1.gcd(&q.b2) == 1, || {
            format!("{}: gcd(b1,b2) ≠ 1", spec.label())
        });
        let x = q.e.gcd(&(q.d * q.b2 - q.g * q.b1));
        out.check(x == q.m_prime, || {
            format!(
                "{}: gcd(e, d·b2 − g·b1) = {x}, m′ = {}",
                spec.label(),
                q.m_prime
            )
        });
    }
    mark(&out, "coprimality");
    for spec in abelian {
        let q = derived_quantities(spec).unwrap();
        let valid = spec.validate().unwrap();
        let reference = seifert_from_quantities(&valid, &q).unwrap().canonical();
        for (dg, df) in [(1, 0), (0, 1), (-2, 3)] {
            let mut shifted = q;
            shifted.g_bar += dg * q.e;
            shifted.f_bar += df * q.n_prime * spec.r();
            let got = seifert_from_quantities(&valid, &shifted)
                .unwrap()
                .canonical();
            out.check(got == reference, || {
                format!(
                    "{}: shifting ḡ by {dg}e, f̄ by {df}n′r changes the invariants",
                    spec.label()
                )
            });
            if spec.family.is_abelian() && q.e > 1 {
                out.check(
                    lens_equivalent(q.e, q.d * q.g_bar, q.e, q.d * shifted.g_bar),
                    || format!("{}: shifting ḡ changes the lens class", spec.label()),
                );
            }
        }
    }

    mark(&out, "representatives");
    for d in engines {
        let n = d.normalize();
        let flipped = d.flip_orientation();
        out.check(flipped.flip_orientation() == n, || {
            format!("flip is not an involution on {:?}", n.canonical())
        });
        out.check(flipped.euler == -d.euler, || {
            "flip does not negate euler".into()
        });
    }

    mark(&out, "flip");
    let mut pairs = 0;
    for spec in abelian.iter().filter(|s| s.family == FamilyId::F1) {
        let (r, s) = (spec.r(), spec.s());
        if r < 3 {
            continue;
        }
        let mirror = FamilySpec {
            s: Some((r - s) as u64),
            ..*spec
        };
        let a = oracle_report(&goursat_group_literal(spec).unwrap()).unwrap();
        let b = oracle_report(&goursat_group_literal(&mirror).unwrap()).unwrap();
        pairs += 1;
        let engine = compute(spec).unwrap();
        out.check(compare_reports(&engine, &b).is_empty(), || {
            format!(
                "{}: engine disagrees with the oracle for s = {}",
                spec.label(),
                r - s
            )
        });
        out.check(a.seifert.canonical() == b.seifert.canonical(), || {
            format!("{}: s and r − s give different invariants", spec.label())
        });
        out.check(
            a.topology.underlying.compatible(&b.topology.underlying),
            || format!("{}: s and r − s give different lens spaces", spec.label()),
        );
    }
    mark(&out, "s ↔ r−s");
    let failed: Vec<String> = tally.iter().map(|(k, n)| format!("{k} {n}")).collect();
    out.detail = format!(
        "{triples} (d,e,g) triples, {} abelian specs, {} flips, {pairs} s ↔ r−s pairs; failures by suite: {}",
        abelian.len(),
        engines.len(),
        failed.join(", ")
    );
    out
}

#[test]
fn acceptance_criteria() {
    let mut passed = Vec::new();

    let t = Instant::now();
    let mut c1 = group_orders();
    let took = t.elapsed();
    c1.check(took < Duration::from_secs(10), || {
        format!("took {took:?}, limit 10 s")
    });
    passed.push(announce(1, "group orders", &c1, took));

    let mut stats = SweepStats::default();
    let t = Instant::now();
    let mut c2 = sweep(&[FamilyId::F1, FamilyId::F1p], 240, &mut stats, false);
    let took = t.elapsed();
    c2.check(took < Duration::from_secs(300), || {
        format!("took {took:?}, limit 300 s")
    });
    passed.push(announce(2, "abelian sweep", &c2, took));

    let t = Instant::now();
    let c3 = sweep(&[FamilyId::F11, FamilyId::F11p], 240, &mut stats, true);
    passed.push(announce(3, "dihedral sweep", &c3, t.elapsed()));

    let t = Instant::now();
    let c4 = sweep(&FamilyId::TABLE4, 480, &mut stats, false);
    passed.push(announce(4, "polyhedral table sweep", &c4, t.elapsed()));

    let t = Instant::now();
    let mut c5 = Outcome::new();
    c5.failures = stats.somma_failures.clone();
    c5.detail = format!(
        "{} Seifert data from {} specs, {} non-integral",
        stats.somma_checked,
        stats.checked,
        c5.failures.len()
    );
    passed.push(announce(5, "somma integrality", &c5, t.elapsed()));

    let t = Instant::now();
    let c6 = spot_values();
    passed.push(announce(6, "spot values", &c6, t.elapsed()));

    let t = Instant::now();
    let abelian: Vec<FamilySpec> = [FamilyId::F1, FamilyId::F1p, FamilyId::F11, FamilyId::F11p]
        .into_iter()
        .flat_map(|f| enumerate_specs(f, 240))
        .collect();
    let mut c7 = properties(&abelian, &stats.engines);
    let took = t.elapsed();
    c7.check(took < Duration::from_secs(60), || {
        format!("took {took:?}, limit 60 s")
    });
    passed.push(announce(7, "property suites", &c7, took));

    let failed: Vec<usize> = passed
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn location_of_dihedral_points_is_corner() {
    let d = compute(&FamilySpec::with_mnrs(FamilyId::F11p, 1, 1, 10, 1)).unwrap();
    assert!(d
        .seifert
        .invariants
        .iter()
        .all(|x| x.location == Location::CornerReflector));
}
