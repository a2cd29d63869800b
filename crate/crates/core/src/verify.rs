//! End-to-end identity checks over the catalog: every count, distribution
//! and series is computed two independent ways and compared.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chartab::{
    character_expand, character_function, delta_class_function, eta_class_function, reconstruct, CharacterTable,
    ClassFunction,
};
use crate::fingroup::{build_group, catalog_names, FiniteGroup};
use crate::format::format_significant;
use crate::homcount::{
    ac_invariance_check, convolution_factorization, delta_product_identity_check, hom_count_brute, random_ac_sequence,
    surface_distribution_brute, surface_distribution_character, surface_hom_count_character, volume_distribution,
    HomCountError, SurfaceKind, DEFAULT_BUDGET,
};
use crate::mobius::{catalog_graphs, classify_surface, evaluate_graph_direct, evaluate_graph_formula, MobiusGraph};
use crate::words::{exponent_matrix, integer_determinant, parse_presentation, parse_word, substitute, Word};
use crate::wzeta::{
    nonorientable_volume_ratio_su2, orientable_series_at_cutoff, orientable_volume_ratio, Convergence, LieFamily,
    SeriesResult, WzetaError,
};

/// Tolerance for floating-point identities between characters.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "orientable surface counts: characters vs enumeration"),
    (2, "non-orientable surface counts: characters vs enumeration"),
    (3, "sum of squared irrep dimensions equals the group order"),
    (4, "surface distributions at every class: characters vs enumeration"),
    (5, "convolution factorization of surface distributions"),
    (6, "homomorphism counts under random Andrews-Curtis moves"),
    (7, "presentation independence and the substitution identity"),
    (8, "delta, orthogonality and expansion identities"),
    (9, "Möbius graph sums and surface invariants"),
    (10, "Lie-group series"),
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// number of individual comparisons made
    pub checks: usize,
    /// first few failures, or a summary when everything passed
    pub detail: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    fn note(&mut self, what: String) {
        self.notes.push(what);
    }
}

fn group(name: &str) -> FiniteGroup {
    build_group(name).expect("catalog group")
}

fn table(g: &FiniteGroup) -> Result<CharacterTable, String> {
    CharacterTable::compute(g).map_err(|e| format!("{}: character table: {e}", g.name()))
}

/// Runs one criterion by number.
pub fn run_criterion(id: u8) -> Option<CriterionOutcome> {
    let (_, name) = *CRITERIA.iter().find(|(i, _)| *i == id)?;
    let start = Instant::now();
    let mut t = Tally::default();
    match id {
        1 => surface_counts(&mut t, true),
        2 => surface_counts(&mut t, false),
        3 => order_formula(&mut t),
        4 => distributions(&mut t),
        5 => factorization(&mut t),
        6 => ac_fuzz(&mut t, 100),
        7 => presentation_independence(&mut t),
        8 => delta_identities(&mut t),
        9 => mobius_suite(&mut t),
        10 => lie_series(&mut t),
        _ => unreachable!(),
    }
    let passed = t.failures.is_empty() && t.checks > 0;
    let detail = if passed {
        t.notes
    } else {
        t.failures.into_iter().take(10).collect()
    };
    Some(CriterionOutcome {
        id,
        name,
        passed,
        checks: t.checks,
        detail,
        elapsed: start.elapsed(),
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().filter_map(|&(id, _)| run_criterion(id)).collect()
}

const SURFACE_GROUPS: [&str; 5] = ["Z6", "S3", "D4", "Q8", "A4"];

fn surface_counts(t: &mut Tally, orientable: bool) {
    let kinds: Vec<SurfaceKind> = if orientable {
        (0..=2).map(SurfaceKind::orientable).collect()
    } else {
        (1..=4).map(|k| SurfaceKind::NonOrientable { crosscaps: k }).collect()
    };
    for name in SURFACE_GROUPS {
        let g = group(name);
        let tab = match table(&g) {
            Ok(tab) => tab,
            Err(e) => return t.fail(e),
        };
        for &kind in &kinds {
            let brute = hom_count_brute(&g, &crate::homcount::surface_presentation(kind), DEFAULT_BUDGET);
            let chars = surface_hom_count_character(&g, &tab, kind);
            match (brute, chars) {
                (Ok(b), Ok(c)) => {
                    t.check(b.count == c.count, || {
                        format!("{name}, {kind}: enumeration {} vs characters {}", b.count, c.count)
                    });
                    if name == "S3" {
                        t.note(format!("{name}, {kind}: {}", b.count));
                    }
                }
                (b, c) => t.fail(format!("{name}, {kind}: {:?} / {:?}", b.err(), c.err())),
            }
        }
    }
}

fn order_formula(t: &mut Tally) {
    let names = catalog_names(24);
    for name in &names {
        let g = group(name);
        match table(&g) {
            Ok(tab) => {
                let sum: u64 = tab.dims().iter().map(|d| d * d).sum();
                t.check(sum == g.order() as u64, || {
                    format!("{name}: Σd² = {sum}, |G| = {}", g.order())
                });
            }
            Err(e) => t.fail(e),
        }
    }
    t.note(format!("{} catalog groups of order ≤ 24", names.len()));
}

fn distributions(t: &mut Tally) {
    let names: Vec<String> = catalog_names(8);
    for name in &names {
        let g = group(name);
        let tab = match table(&g) {
            Ok(tab) => tab,
            Err(e) => {
                t.fail(e);
                continue;
            }
        };
        let kinds = (0..=2)
            .map(SurfaceKind::orientable)
            .chain((1..=3).map(|k| SurfaceKind::NonOrientable { crosscaps: k }));
        for kind in kinds {
            let brute = surface_distribution_brute(&g, tab.classes(), kind, DEFAULT_BUDGET);
            let chars = surface_distribution_character(&tab, kind);
            match (brute, chars) {
                (Ok(b), Ok(c)) => t.check(b == c, || {
                    format!("{name}, {kind}: {:?} vs {:?}", b.values(), c.values())
                }),
                (b, c) => t.fail(format!("{name}, {kind}: {:?} / {:?}", b.err(), c.err())),
            }
        }
    }
    t.note(format!("{} groups of order ≤ 8, g ≤ 2, k ≤ 3", names.len()));
}

fn factorization(t: &mut Tally) {
    let one = SurfaceKind::orientable(1);
    let cap = SurfaceKind::NonOrientable { crosscaps: 1 };
    for name in ["S3", "Q8"] {
        let g = group(name);
        let c = g.conjugacy_classes();
        for kind in [one, cap] {
            match convolution_factorization(&g, &c, kind, kind, DEFAULT_BUDGET) {
                Ok(r) => t.check(r.equal, || {
                    format!("{name}, {kind}: {:?} vs {:?}", r.direct.values(), r.convolved.values())
                }),
                Err(e) => t.fail(format!("{name}, {kind}: {e}")),
            }
        }
    }
}

/// Largest number of generators reached during the random walks.
pub const AC_MAX_GENERATORS: usize = 4;

fn ac_fuzz(t: &mut Tally, sequences: usize) {
    let starts = ["<a, b | [a,b]>", "<a, b | a b^-1>"];
    let groups = [group("S3"), group("Q8")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ac_f022);
    let mut moves_total = 0;
    for text in starts {
        let p = parse_presentation(text).expect("fixed presentation");
        for _ in 0..sequences {
            let len = rng.random_range(1..=8);
            let (moves, _) = random_ac_sequence(&mut rng, &p, len, AC_MAX_GENERATORS);
            moves_total += moves.len();
            for g in &groups {
                let r = ac_invariance_check(g, &p, &moves, DEFAULT_BUDGET);
                let complete = r.stopped.is_none() && r.counts.len() == moves.len() + 1;
                t.check(r.consistent && complete, || {
                    format!(
                        "{} from {text}: counts {:?}, stopped {:?}, presentations {:?}",
                        g.name(),
                        r.counts.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        r.stopped,
                        r.presentations
                    )
                });
            }
        }
    }
    t.note(format!(
        "{} sequences, {moves_total} moves, groups S3 and Q8",
        2 * sequences
    ));
}

fn presentation_independence(t: &mut Tally) {
    let diag = parse_presentation("<a, b | a b^-1>").expect("fixed");
    let single = parse_presentation("<a | >").expect("fixed");
    for name in ["S3", "D4", "Q8", "A4", "Z5"] {
        let g = group(name);
        let order = BigUint::from(g.order());
        for p in [&diag, &single] {
            match hom_count_brute(&g, p, DEFAULT_BUDGET) {
                Ok(r) => t.check(r.count == order, || format!("{name}, {p}: {} ≠ |G|", r.count)),
                Err(e) => t.fail(format!("{name}, {p}: {e}")),
            }
        }
    }

    let mixed = parse_presentation("<a, b, c | [a,b] c^2>").expect("fixed");
    let squares = parse_presentation("<a, b, c | a^2 b^2 c^2>").expect("fixed");
    for name in ["S3", "D4"] {
        let g = group(name);
        let c = g.conjugacy_classes();
        match (
            volume_distribution(&g, &c, &mixed, DEFAULT_BUDGET),
            volume_distribution(&g, &c, &squares, DEFAULT_BUDGET),
        ) {
            (Ok(x), Ok(y)) => t.check(x == y, || format!("{name}: {:?} vs {:?}", x.values(), y.values())),
            (x, y) => t.fail(format!("{name}: {:?} / {:?}", x.err(), y.err())),
        }
    }

    substitution_identity(t);
}

/// `α = abc`, `β = c⁻¹b⁻¹a⁻¹c⁻¹a⁻¹c`, `γ = c⁻¹ac²` turns `α²β²γ²` into
/// `[a,b]c²`; the inverse change of variables recovers `a, b, c`.
fn substitution_identity(t: &mut Tally) {
    let names: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let w = |s: &str| parse_word(s, &names).expect("fixed word");
    let forward = [w("a b c"), w("c^-1 b^-1 a^-1 c^-1 a^-1 c"), w("c^-1 a c^2")];
    let inverse = [
        w("a b c b^-1 a^-1 c^-1 b^-1 a^-1"),
        w("a b c a b c^-1 b^-1 c^-1 b^-1 a^-1"),
        w("a b c"),
    ];
    let squares = w("a^2 b^2 c^2");
    let mixed = w("[a,b] c^2");
    let got = substitute(&squares, &forward);
    t.check(got == mixed, || {
        format!("α²β²γ² reduces to {}, expected [a,b]c²", got.display_with(&names))
    });
    for (i, image) in forward.iter().enumerate() {
        let back = substitute(image, &inverse);
        t.check(back == Word::generator(i), || {
            format!("generator {} round-trips to {}", names[i], back.display_with(&names))
        });
    }
    for (i, image) in inverse.iter().enumerate() {
        let back = substitute(image, &forward);
        t.check(back == Word::generator(i), || {
            format!(
                "inverse generator {} round-trips to {}",
                names[i],
                back.display_with(&names)
            )
        });
    }
    let n = exponent_matrix(&forward, 3);
    let det = integer_determinant(&n);
    t.check(n == vec![vec![1, 1, 1], vec![-2, -1, -1], vec![1, 0, 1]], || {
        format!("exponent matrix {n:?}")
    });
    t.check(det.is_one(), || format!("det N = {det}"));
}

fn delta_identities(t: &mut Tally) {
    let names = catalog_names(24);
    for name in &names {
        let g = group(name);
        if let Err(e) = delta_identities_for(t, &g) {
            t.fail(e);
        }
    }
    t.note(format!("{} catalog groups of order ≤ 24", names.len()));
}

fn delta_identities_for(t: &mut Tally, g: &FiniteGroup) -> Result<(), String> {
    let name = g.name();
    let tab = table(g)?;
    let classes = tab.classes();
    let order = g.order() as f64;

    let delta: ClassFunction<BigRational> = delta_class_function(classes);
    t.check(delta.convolve(&delta, classes) == delta, || format!("{name}: δ∗δ ≠ δ"));
    let two = delta_product_identity_check(g);
    t.check(two.equal, || {
        format!("{name}: δ(x)δ(y) and δ(xy)δ(y) have different zero sets")
    });

    let residual = tab.orthogonality_residual();
    t.check(residual <= IDENTITY_TOLERANCE, || {
        format!("{name}: row orthogonality residual {residual:e}")
    });

    // χ_λ ∗ χ_μ = δ_λμ (|G|/d_λ) χ_λ
    let r = tab.num_irreps();
    let mut worst = 0.0f64;
    for l in 0..r {
        let cl = character_function(&tab, l);
        for m in 0..r {
            let conv = cl.convolve(&character_function(&tab, m), classes);
            let scale = if l == m { order / tab.dim(l) as f64 } else { 0.0 };
            for (c, v) in conv.values().iter().enumerate() {
                worst = worst.max((v - cl.values()[c] * scale).norm() / order);
            }
        }
    }
    t.check(worst <= IDENTITY_TOLERANCE, || {
        format!("{name}: convolution orthogonality residual {worst:e}")
    });

    // |G| δ = Σ d_λ χ_λ
    let scaled_delta = delta.scaled(&BigRational::from_integer(g.order().into()));
    let coefficients = character_expand(&tab, &scaled_delta);
    match tab.integral_coefficients(&coefficients) {
        Ok(ints) => {
            let dims: Vec<i64> = tab.dims().iter().map(|&d| d as i64).collect();
            t.check(ints == dims, || {
                format!("{name}: δ coefficients {ints:?}, dimensions {dims:?}")
            });
        }
        Err(e) => t.fail(format!("{name}: δ coefficients: {e}")),
    }
    match reconstruct(&tab, &coefficients).round_to_integers(1e-6) {
        Ok(back) => t.check(back == scaled_delta, || format!("{name}: δ does not reconstruct")),
        Err(e) => t.fail(format!("{name}: δ reconstruction: {e}")),
    }

    // η_x = Σ_λ conj χ_λ(x) χ_λ
    for &x in classes.representatives() {
        let eta: ClassFunction<BigRational> = eta_class_function(g, classes, x);
        let coefficients = character_expand(&tab, &eta);
        let c = classes.class_of(x);
        let err = (0..r)
            .map(|l| (coefficients[l] - tab.value(l, c).conj()).norm())
            .fold(0.0, f64::max);
        t.check(err <= IDENTITY_TOLERANCE, || {
            format!("{name}: η_{} coefficients off by {err:e}", g.label(x))
        });
        match reconstruct(&tab, &coefficients).round_to_integers(1e-6) {
            Ok(back) => t.check(back == eta, || format!("{name}: η_{} does not reconstruct", g.label(x))),
            Err(e) => t.fail(format!("{name}: η_{} reconstruction: {e}", g.label(x))),
        }
    }
    Ok(())
}

fn graph_sum(g: &FiniteGroup, graph: &MobiusGraph) -> Result<BigUint, HomCountError> {
    evaluate_graph_direct(g, graph, DEFAULT_BUDGET).map(|e| e.count)
}

fn mobius_suite(t: &mut Tally) {
    let graphs = catalog_graphs();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0006_f1a9);
    for name in ["S3", "Z4"] {
        let g = group(name);
        let tab = match table(&g) {
            Ok(tab) => tab,
            Err(e) => return t.fail(e),
        };
        for (gname, graph) in &graphs {
            let direct = evaluate_graph_direct(&g, graph, DEFAULT_BUDGET);
            let formula = evaluate_graph_formula(&g, &tab, graph);
            let base = match (direct, formula) {
                (Ok(d), Ok(f)) => {
                    t.check(d.count == f.count, || {
                        format!("{gname} in {name}: direct {} vs formula {}", d.count, f.count)
                    });
                    d
                }
                (d, f) => {
                    t.fail(format!("{gname} in {name}: {:?} / {:?}", d.err(), f.err()));
                    continue;
                }
            };

            let mut current = graph.clone();
            for _ in 0..50 {
                let v = rng.random_range(0..current.num_vertices());
                current = match current.vertex_flip(v) {
                    Ok(next) => next,
                    Err(e) => {
                        t.fail(format!("{gname}: flip {v}: {e}"));
                        break;
                    }
                };
                let cls = classify_surface(&current);
                t.check(cls == base.classification, || {
                    format!("{gname}: classification changed by flips")
                });
                match graph_sum(&g, &current) {
                    Ok(c) => t.check(c == base.count, || {
                        format!("{gname} in {name}: flips give {c}, not {}", base.count)
                    }),
                    Err(e) => t.fail(format!("{gname}: {e}")),
                }
            }

            for edge in graph.contractible_edges() {
                let contracted = match graph.contract_edge(edge) {
                    Ok(c) => c,
                    Err(e) => {
                        t.fail(format!("{gname}: contract {edge}: {e}"));
                        continue;
                    }
                };
                let cls = classify_surface(&contracted);
                t.check(
                    cls.kind == base.classification.kind && cls.faces == base.classification.faces,
                    || format!("{gname}: contracting edge {edge} changed the surface"),
                );
                match graph_sum(&g, &contracted) {
                    Ok(c) => t.check(c == base.count, || {
                        format!(
                            "{gname} in {name}: contracting edge {edge} gives {c}, not {}",
                            base.count
                        )
                    }),
                    Err(e) => t.fail(format!("{gname}: {e}")),
                }
            }
        }
    }
    t.note(format!("{} graphs, groups S3 and Z4, 50 flips each", graphs.len()));
}

/// `ζ(s)` for integer `s ≥ 2` by Euler–Maclaurin: the sum to `N − 1`, the
/// integral and half-term at `N`, and four Bernoulli corrections.
pub fn euler_maclaurin_zeta(s: u32) -> f64 {
    const N: u32 = 50;
    const BERNOULLI: [f64; 4] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0];
    let s = f64::from(s);
    let n = f64::from(N);
    // summed smallest term first
    let mut sum: f64 = (1..N).rev().map(|d| f64::from(d).powf(-s)).sum();
    sum += n.powf(1.0 - s) / (s - 1.0) + n.powf(-s) / 2.0;
    let mut rising = s;
    let mut factorial = 2.0;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let j = j as f64;
        sum += b * rising / factorial * n.powf(-s - 2.0 * j - 1.0);
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        factorial *= (2.0 * j + 3.0) * (2.0 * j + 4.0);
    }
    sum
}

const SERIES_TOL: f64 = 1e-9;

fn compare_series(t: &mut Tally, label: &str, got: Result<SeriesResult<f64>, WzetaError>, want: f64) {
    match got {
        Ok(r) => {
            t.check(
                (r.value - want).abs() <= SERIES_TOL && r.error_bound() <= SERIES_TOL,
                || format!("{label}: {} vs {want} (bound {:e})", r.value, r.error_bound()),
            );
            t.note(format!(
                "{label}: {} (cutoff {}, bound {:.1e})",
                format_significant(r.value, 12),
                r.cutoff,
                r.error_bound()
            ));
        }
        Err(e) => t.fail(format!("{label}: {e}")),
    }
}

fn lie_series(t: &mut Tally) {
    const TOL: f64 = SERIES_TOL;
    let compare = compare_series;
    for g in [2, 3] {
        compare(
            t,
            &format!("SU(2), g = {g}"),
            orientable_volume_ratio(LieFamily::Su(2), g, TOL),
            euler_maclaurin_zeta(2 * g - 2),
        );
    }
    compare(
        t,
        "SU(2), k = 4",
        nonorientable_volume_ratio_su2(4, TOL),
        euler_maclaurin_zeta(2),
    );
    compare(
        t,
        "SU(2), k = 5",
        nonorientable_volume_ratio_su2(5, TOL),
        0.75 * euler_maclaurin_zeta(3),
    );

    match nonorientable_volume_ratio_su2::<f64>(3, 1e-6) {
        Ok(r) => {
            t.check((r.value - std::f64::consts::LN_2).abs() <= 1e-6, || {
                format!("k = 3: {} vs log 2", r.value)
            });
            t.check(r.convergence == Convergence::Conditional, || {
                "k = 3 not flagged conditional".into()
            });
            t.note(format!(
                "SU(2), k = 3: {} (conditional, cutoff {})",
                format_significant(r.value, 12),
                r.cutoff
            ));
        }
        Err(e) => t.fail(format!("k = 3: {e}")),
    }

    // a bound of half the stability target on the coarse box suffices
    match orientable_volume_ratio::<f64>(LieFamily::Su(3), 2, 5e-9) {
        Ok(r) => match orientable_series_at_cutoff::<f64>(LieFamily::Su(3), 2, 2 * r.cutoff) {
            Ok(fine) => {
                let diff = (fine.value - r.value).abs();
                t.check(diff <= 1e-8, || {
                    format!(
                        "SU(3), g = 2: cutoff {} vs {} differ by {diff:e}",
                        r.cutoff, fine.cutoff
                    )
                });
                t.note(format!(
                    "SU(3), g = 2: {} (cutoffs {} and {}, difference {diff:.1e})",
                    format_significant(fine.value, 12),
                    r.cutoff,
                    fine.cutoff
                ));
            }
            Err(e) => t.fail(format!("SU(3): {e}")),
        },
        Err(e) => t.fail(format!("SU(3): {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_maclaurin_matches_known_values() {
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((euler_maclaurin_zeta(2) - pi2 / 6.0).abs() < 1e-14);
        assert!((euler_maclaurin_zeta(4) - pi2 * pi2 / 90.0).abs() < 1e-14);
    }

    #[test]
    fn quick_criteria_pass() {
        for id in [3, 5, 7] {
            let out = run_criterion(id).unwrap();
            assert!(out.passed, "{id}: {:?}", out.detail);
        }
        assert!(run_criterion(11).is_none());
    }

    #[test]
    fn failures_are_reported() {
        let mut t = Tally::default();
        t.check(false, || "boom".into());
        assert_eq!((t.checks, t.failures.len()), (1, 1));
    }
}
