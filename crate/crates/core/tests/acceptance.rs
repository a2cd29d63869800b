//! The ten acceptance criteria, each checked against oracles written here:
//! plain `G^k` loops, element-level convolutions, and direct character sums.
//! Prints one PASS/FAIL line per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repvol::chartab::CharacterTable;
use repvol::fingroup::{build_group, catalog_names, FiniteGroup};
use repvol::homcount::{random_ac_sequence, surface_distribution_character, surface_hom_count_character, SurfaceKind};
use repvol::mobius::{catalog_graphs, classify_surface, evaluate_graph_direct, evaluate_graph_formula, MobiusGraph};
use repvol::words::{
    evaluate_word, exponent_matrix, integer_determinant, parse_presentation, parse_word, substitute, Presentation, Word,
};
use repvol::wzeta::{
    nonorientable_volume_ratio_su2, orientable_series_at_cutoff, orientable_volume_ratio, weyl_dimension_su,
    Convergence, LieFamily,
};
use repvol::{BigRational, Complex64};

const BUDGET: u64 = 1_000_000_000;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(name: &str) -> FiniteGroup {
    build_group(name).unwrap()
}

/// Value of `words[0]` at every point of `G^k` where the other words vanish,
/// histogrammed by element.
fn plain_fibers(g: &FiniteGroup, k: usize, observed: &Word, constraints: &[Word]) -> Vec<u64> {
    let n = g.order();
    let mut hist = vec![0u64; n];
    let mut x = vec![0usize; k];
    'outer: loop {
        if constraints.iter().all(|w| evaluate_word(g, w, &x) == g.identity()) {
            hist[evaluate_word(g, observed, &x)] += 1;
        }
        for v in x.iter_mut() {
            *v += 1;
            if *v < n {
                continue 'outer;
            }
            *v = 0;
        }
        break;
    }
    hist
}

fn plain_count(g: &FiniteGroup, p: &Presentation) -> u64 {
    let k = p.num_generators();
    plain_fibers(g, k, &Word::empty(), p.relators())[g.identity()]
}

fn surface_text(kind: SurfaceKind) -> String {
    match kind {
        SurfaceKind::Orientable { genus } => {
            let gens: Vec<String> = (1..=genus).flat_map(|i| [format!("x{i}"), format!("y{i}")]).collect();
            let rel: Vec<String> = (1..=genus).map(|i| format!("[x{i},y{i}]")).collect();
            format!("<{} | {}>", gens.join(", "), rel.join(" "))
        }
        SurfaceKind::NonOrientable { crosscaps } => {
            let gens: Vec<String> = (1..=crosscaps).map(|i| format!("z{i}")).collect();
            let rel: Vec<String> = gens.iter().map(|z| format!("{z}^2")).collect();
            format!("<{} | {}>", gens.join(", "), rel.join(" "))
        }
    }
}

fn surface_fibers(g: &FiniteGroup, kind: SurfaceKind) -> Vec<u64> {
    let p = parse_presentation(&surface_text(kind)).unwrap();
    let observed = p.relators().first().cloned().unwrap_or_else(Word::empty);
    plain_fibers(g, p.num_generators(), &observed, &[])
}

/// `|G|^{1−χ} Σ ε_λ^χ d_λ^χ` over real and quaternionic irreps (all irreps
/// for orientable surfaces), from the table's dimensions and indicators.
fn character_count(t: &CharacterTable, kind: SurfaceKind) -> BigRational {
    let chi = kind.euler_characteristic();
    let n = BigRational::from_integer(BigInt::from(t.group_order()));
    let pow = |b: &BigRational, e: i64| {
        if e >= 0 {
            num_traits::pow(b.clone(), e as usize)
        } else {
            num_traits::pow(b.recip(), (-e) as usize)
        }
    };
    let mut sum = BigRational::zero();
    for l in 0..t.num_irreps() {
        let d = BigRational::from_integer(BigInt::from(t.dim(l)));
        let fs = t.indicators()[l];
        let term = match (kind.is_orientable(), fs) {
            (true, _) | (false, 1) => pow(&d, chi),
            (false, -1) => pow(&-d, chi),
            _ => BigRational::zero(),
        };
        sum += term;
    }
    pow(&n, 1 - chi) * sum
}

fn class_values(t: &CharacterTable, per_element: &[u64]) -> Vec<BigRational> {
    t.classes()
        .representatives()
        .iter()
        .map(|&r| BigRational::from_integer(BigInt::from(per_element[r])))
        .collect()
}

/// `(f ∗ h)(x) = Σ_y f(x y⁻¹) h(y)` on element-indexed functions.
fn element_convolve(g: &FiniteGroup, f: &[u64], h: &[u64]) -> Vec<u64> {
    g.elements()
        .map(|x| g.elements().map(|y| f[g.mul(x, g.inv(y))] * h[y]).sum())
        .collect()
}

fn complex_convolve(g: &FiniteGroup, f: &[Complex64], h: &[Complex64]) -> Vec<Complex64> {
    g.elements()
        .map(|x| g.elements().map(|y| f[g.mul(x, g.inv(y))] * h[y]).sum())
        .collect()
}

fn character_on_elements(t: &CharacterTable, l: usize) -> Vec<Complex64> {
    let c = t.classes();
    (0..c.group_order()).map(|x| t.value(l, c.class_of(x))).collect()
}

const SURFACE_GROUPS: [&str; 5] = ["Z6", "S3", "D4", "Q8", "A4"];

fn surface_count_criterion(kinds: &[SurfaceKind], expected: &[(&str, SurfaceKind, u64)]) -> Check {
    let mut n = 0;
    for name in SURFACE_GROUPS {
        let g = group(name);
        let t = CharacterTable::compute(&g).map_err(|e| e.to_string())?;
        for &kind in kinds {
            let plain = surface_fibers(&g, kind)[g.identity()];
            let lib = surface_hom_count_character(&g, &t, kind)
                .map_err(|e| e.to_string())?
                .count;
            let ours = character_count(&t, kind);
            ensure(ours == BigRational::from_integer(BigInt::from(plain)), || {
                format!("{name} {kind}: enumeration {plain}, character sum {ours}")
            })?;
            ensure(lib == BigUint::from(plain), || {
                format!("{name} {kind}: library {lib}, enumeration {plain}")
            })?;
            n += 1;
        }
    }
    for &(name, kind, want) in expected {
        let g = group(name);
        let got = surface_fibers(&g, kind)[g.identity()];
        ensure(got == want, || format!("{name} {kind}: {got}, expected {want}"))?;
    }
    Ok(format!("{n} exact matches"))
}

fn criterion_1() -> Check {
    let kinds: Vec<_> = (0..=2).map(SurfaceKind::orientable).collect();
    let g = SurfaceKind::orientable;
    surface_count_criterion(&kinds, &[("S3", g(0), 1), ("S3", g(1), 18), ("S3", g(2), 486)])
}

fn criterion_2() -> Check {
    let kinds: Vec<_> = (1..=4).map(|k| SurfaceKind::NonOrientable { crosscaps: k }).collect();
    let k = |c| SurfaceKind::NonOrientable { crosscaps: c };
    surface_count_criterion(&kinds, &[("S3", k(1), 4), ("S3", k(3), 90), ("Q8", k(2), 40)])
}

fn criterion_3() -> Check {
    let names = catalog_names(24);
    for name in &names {
        let g = group(name);
        let t = CharacterTable::compute(&g).map_err(|e| format!("{name}: {e}"))?;
        let sum: u64 = t.dims().iter().map(|d| d * d).sum();
        ensure(sum == g.order() as u64, || {
            format!("{name}: Σd² = {sum}, |G| = {}", g.order())
        })?;
        // as many irreps as classes, counted by brute force
        let classes = g
            .elements()
            .filter(|&x| g.elements().all(|y| g.mul(g.mul(g.inv(y), x), y) >= x))
            .count();
        ensure(t.num_irreps() == classes, || {
            format!("{name}: {} irreps, {classes} classes", t.num_irreps())
        })?;
    }
    Ok(format!("{} groups", names.len()))
}

fn criterion_4() -> Check {
    let names = catalog_names(8);
    let mut n = 0;
    for name in &names {
        let g = group(name);
        let t = CharacterTable::compute(&g).map_err(|e| e.to_string())?;
        let kinds = (0..=2)
            .map(SurfaceKind::orientable)
            .chain((1..=3).map(|k| SurfaceKind::NonOrientable { crosscaps: k }));
        for kind in kinds {
            let plain = surface_fibers(&g, kind);
            let want = class_values(&t, &plain);
            let got = surface_distribution_character(&t, kind).map_err(|e| e.to_string())?;
            ensure(got.values() == want.as_slice(), || {
                format!("{name} {kind}: characters {:?}, fibers {:?}", got.values(), want)
            })?;
            n += want.len();
        }
    }
    let s3 = group("S3");
    let f1 = surface_fibers(&s3, SurfaceKind::orientable(1));
    let t = CharacterTable::compute(&s3).unwrap();
    let reps: Vec<u64> = t.classes().representatives().iter().map(|&r| f1[r]).collect();
    ensure(reps == [18, 0, 9], || format!("S3 f1 = {reps:?}"))?;
    Ok(format!("{} groups, {n} class values", names.len()))
}

fn criterion_5() -> Check {
    for name in ["S3", "Q8"] {
        let g = group(name);
        for (one, two) in [
            (SurfaceKind::orientable(1), SurfaceKind::orientable(2)),
            (
                SurfaceKind::NonOrientable { crosscaps: 1 },
                SurfaceKind::NonOrientable { crosscaps: 2 },
            ),
        ] {
            let f1 = surface_fibers(&g, one);
            let f2 = surface_fibers(&g, two);
            let conv = element_convolve(&g, &f1, &f1);
            ensure(conv == f2, || {
                format!("{name}: {two} is {f2:?}, square of {one} is {conv:?}")
            })?;
        }
    }
    Ok("S3 and Q8, orientable and non-orientable".into())
}

fn criterion_6() -> Check {
    let groups = [group("S3"), group("Q8")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut moves_total = 0;
    let mut sequences = 0;
    for text in ["<a, b | [a,b]>", "<a, b | a b^-1>"] {
        let start = parse_presentation(text).unwrap();
        let base: Vec<u64> = groups.iter().map(|g| plain_count(g, &start)).collect();
        for _ in 0..100 {
            let len = rng.random_range(1..=8);
            let (moves, _) = random_ac_sequence(&mut rng, &start, len, 4);
            ensure(moves.len() == len, || {
                format!("only {} of {len} moves generated", moves.len())
            })?;
            let mut p = start.clone();
            for m in &moves {
                p = repvol::words::apply_ac_move(&p, m).map_err(|e| e.to_string())?;
                for (g, &want) in groups.iter().zip(&base) {
                    let got = plain_count(g, &p);
                    ensure(got == want, || format!("{} after {}: {got} ≠ {want}", g.name(), p))?;
                }
            }
            moves_total += moves.len();
            sequences += 1;
        }
    }
    Ok(format!("{sequences} sequences, {moves_total} moves"))
}

fn criterion_7() -> Check {
    let diag = parse_presentation("<a, b | a b^-1>").unwrap();
    let single = parse_presentation("<a | >").unwrap();
    for name in ["S3", "D4", "Q8", "A4"] {
        let g = group(name);
        for p in [&diag, &single] {
            let c = plain_count(&g, p);
            ensure(c == g.order() as u64, || format!("{name} {p}: {c}"))?;
        }
    }

    let names: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let w = |s: &str| parse_word(s, &names).unwrap();
    let mixed = w("a b a^-1 b^-1 c c");
    let squares = w("a a b b c c");
    for name in ["S3", "D4"] {
        let g = group(name);
        let x = plain_fibers(&g, 3, &mixed, &[]);
        let y = plain_fibers(&g, 3, &squares, &[]);
        ensure(x == y, || format!("{name}: {x:?} vs {y:?}"))?;
    }

    let alpha = w("a b c");
    let beta = w("c^-1 b^-1 a^-1 c^-1 a^-1 c");
    let gamma = w("c^-1 a c c");
    let forward = [alpha, beta, gamma];
    let inverse = [
        w("a b c b^-1 a^-1 c^-1 b^-1 a^-1"),
        w("a b c a b c^-1 b^-1 c^-1 b^-1 a^-1"),
        w("a b c"),
    ];
    let got = substitute(&squares, &forward);
    ensure(got == mixed, || format!("α²β²γ² = {}", got.display_with(&names)))?;
    // the same identity evaluated pointwise in S4
    let s4 = group("S4");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let x: Vec<usize> = (0..3).map(|_| rng.random_range(0..24)).collect();
        let images: Vec<usize> = forward.iter().map(|f| evaluate_word(&s4, f, &x)).collect();
        ensure(
            evaluate_word(&s4, &squares, &images) == evaluate_word(&s4, &mixed, &x),
            || format!("pointwise identity fails at {x:?}"),
        )?;
    }
    for i in 0..3 {
        let round = substitute(&substitute(&Word::generator(i), &forward), &inverse);
        ensure(round == Word::generator(i), || {
            format!("generator {i} → {}", round.display_with(&names))
        })?;
        let back = substitute(&substitute(&Word::generator(i), &inverse), &forward);
        ensure(back == Word::generator(i), || {
            format!("generator {i} ← {}", back.display_with(&names))
        })?;
    }
    let n = exponent_matrix(&forward, 3);
    ensure(n == [[1, 1, 1], [-2, -1, -1], [1, 0, 1]], || format!("N = {n:?}"))?;
    let det = integer_determinant(&n);
    // cofactor expansion by hand
    let hand = n[0][0] * (n[1][1] * n[2][2] - n[1][2] * n[2][1]) - n[0][1] * (n[1][0] * n[2][2] - n[1][2] * n[2][0])
        + n[0][2] * (n[1][0] * n[2][1] - n[1][1] * n[2][0]);
    ensure(det.is_one() && hand == 1, || format!("det N = {det}, by hand {hand}"))?;
    Ok("counts, distributions, substitution, det N = 1".into())
}

fn criterion_8() -> Check {
    let names = catalog_names(24);
    let mut worst = 0.0f64;
    for name in &names {
        let g = group(name);
        let n = g.order();
        let e = g.identity();
        let t = CharacterTable::compute(&g).map_err(|err| format!("{name}: {err}"))?;
        let r = t.num_irreps();

        let delta: Vec<u64> = g.elements().map(|x| u64::from(x == e)).collect();
        ensure(element_convolve(&g, &delta, &delta) == delta, || {
            format!("{name}: δ∗δ ≠ δ")
        })?;
        for x in g.elements() {
            for y in g.elements() {
                let both = x == e && y == e;
                let product = g.mul(x, y) == e && y == e;
                ensure(both == product, || format!("{name}: two-delta identity at ({x}, {y})"))?;
            }
        }

        let chars: Vec<Vec<Complex64>> = (0..r).map(|l| character_on_elements(&t, l)).collect();
        for l in 0..r {
            for m in 0..r {
                let ip: Complex64 = g
                    .elements()
                    .map(|x| chars[l][x] * chars[m][x].conj())
                    .sum::<Complex64>()
                    / n as f64;
                let want = if l == m { 1.0 } else { 0.0 };
                worst = worst.max((ip - want).norm());
                let conv = complex_convolve(&g, &chars[l], &chars[m]);
                let scale = if l == m { n as f64 / t.dim(l) as f64 } else { 0.0 };
                for x in g.elements() {
                    worst = worst.max((conv[x] - chars[l][x] * scale).norm() / n as f64);
                }
            }
        }
        ensure(worst <= 1e-9, || format!("{name}: orthogonality residual {worst:e}"))?;

        // |G| δ(x) = Σ d χ(x) and η_x(y) = Σ conj χ(x) χ(y)
        for y in g.elements() {
            let d: Complex64 = (0..r).map(|l| chars[l][y] * t.dim(l) as f64).sum();
            let want = if y == e { n as f64 } else { 0.0 };
            ensure((d.re.round() - want).abs() == 0.0 && d.im.abs() < 1e-6, || {
                format!("{name}: δ expansion at {y} gives {d}")
            })?;
        }
        for x in g.elements() {
            let centralizer = g.elements().filter(|&z| g.mul(x, z) == g.mul(z, x)).count() as f64;
            for y in g.elements() {
                let v: Complex64 = (0..r).map(|l| chars[l][x].conj() * chars[l][y]).sum();
                let conjugate = g.elements().any(|z| g.mul(g.mul(g.inv(z), x), z) == y);
                let want = if conjugate { centralizer } else { 0.0 };
                ensure(
                    v.re.round() == want && (v.re - want).abs() < 1e-6 && v.im.abs() < 1e-6,
                    || format!("{name}: η expansion at ({x}, {y}) gives {v}"),
                )?;
            }
        }
    }
    Ok(format!("{} groups, worst residual {worst:.1e}", names.len()))
}

/// Labelings of half-edges with vertex products `e` and `x_h x_{h'}^c = e`.
fn labeling_count(g: &FiniteGroup, graph: &MobiusGraph) -> u64 {
    let halves = 2 * graph.num_edges();
    let mut x = vec![0usize; halves];
    let mut count = 0;
    'outer: loop {
        let edges_ok = graph.edges().iter().all(|e| {
            let (a, b) = e.ends;
            let xb = if e.color.sign() == 1 { x[b] } else { g.inv(x[b]) };
            g.mul(x[a], xb) == g.identity()
        });
        if edges_ok
            && graph
                .vertices()
                .iter()
                .all(|c| c.iter().fold(g.identity(), |acc, &h| g.mul(acc, x[h])) == g.identity())
        {
            count += 1;
        }
        for v in x.iter_mut() {
            *v += 1;
            if *v < g.order() {
                continue 'outer;
            }
            *v = 0;
        }
        break;
    }
    count
}

fn criterion_9() -> Check {
    let graphs = catalog_graphs();
    ensure(
        graphs.len() == 10 && graphs.iter().all(|(_, g)| g.num_edges() <= 4),
        || "catalog must hold 10 graphs with at most 4 edges".into(),
    )?;
    let kinds: Vec<String> = graphs
        .iter()
        .map(|(_, g)| classify_surface(g).kind.to_string())
        .collect();
    let needed = [
        "sphere",
        "projective plane",
        "orientable genus 1",
        "non-orientable, 2 cross-caps",
        "orientable genus 2",
    ];
    for needed in needed {
        ensure(kinds.iter().any(|k| k == needed), || {
            format!("no {needed} in the catalog")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0009_9999);
    let mut checks = 0;
    for name in ["S3", "Z4"] {
        let g = group(name);
        let t = CharacterTable::compute(&g).unwrap();
        for (gname, graph) in &graphs {
            let cls = classify_surface(graph);
            let chi = graph.num_vertices() as i64 - graph.num_edges() as i64 + cls.faces as i64;
            ensure(chi == cls.kind.euler_characteristic(), || {
                format!("{gname}: χ mismatch")
            })?;
            let direct = evaluate_graph_direct(&g, graph, BUDGET)
                .map_err(|e| e.to_string())?
                .count;
            let formula = evaluate_graph_formula(&g, &t, graph).map_err(|e| e.to_string())?.count;
            let ours = character_count(&t, cls.kind)
                * num_traits::pow(BigRational::from_integer(BigInt::from(g.order())), cls.faces - 1);
            ensure(
                direct == formula && BigRational::from_integer(BigInt::from(direct.clone())) == ours,
                || format!("{gname} in {name}: direct {direct}, formula {formula}, oracle {ours}"),
            )?;
            if graph.num_edges() <= 3 {
                let brute = labeling_count(&g, graph);
                ensure(direct == BigUint::from(brute), || {
                    format!("{gname} in {name}: labelings {brute}")
                })?;
            }

            let mut current = graph.clone();
            for _ in 0..50 {
                let v = rng.random_range(0..current.num_vertices());
                current = current.vertex_flip(v).map_err(|e| e.to_string())?;
                ensure(classify_surface(&current) == cls, || {
                    format!("{gname}: flip changed the surface")
                })?;
                let c = evaluate_graph_direct(&g, &current, BUDGET)
                    .map_err(|e| e.to_string())?
                    .count;
                ensure(c == direct, || {
                    format!("{gname} in {name}: flip gives {c}, not {direct}")
                })?;
                checks += 1;
            }
            for edge in graph.contractible_edges() {
                let c = graph.contract_edge(edge).map_err(|e| e.to_string())?;
                let ccls = classify_surface(&c);
                ensure(ccls.kind == cls.kind && ccls.faces == cls.faces, || {
                    format!("{gname}: contracting {edge} changed the surface")
                })?;
                let v = evaluate_graph_direct(&g, &c, BUDGET).map_err(|e| e.to_string())?.count;
                ensure(v == direct, || {
                    format!("{gname} in {name}: contracting {edge} gives {v}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} graphs, {checks} flip/contraction checks", graphs.len()))
}

/// Euler–Maclaurin with a different split point and more correction terms
/// than anything in the library.
fn em_zeta(s: u32) -> f64 {
    let s = f64::from(s);
    let n = 40.0f64;
    let mut sum = 0.0;
    for d in (1..40).rev() {
        sum += (d as f64).powf(-s);
    }
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    let bernoulli = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0];
    for (j, b) in bernoulli.iter().enumerate() {
        let order = 2 * j + 1;
        // s (s+1) ⋯ (s+order−1) / (order+1)!
        let mut coeff = 1.0;
        for i in 0..order {
            coeff *= (s + i as f64) / (i as f64 + 2.0);
        }
        sum += b * coeff * n.powf(-s - order as f64);
    }
    sum
}

fn criterion_10() -> Check {
    let tol = 1e-9;
    let pi2 = std::f64::consts::PI.powi(2);
    ensure((em_zeta(2) - pi2 / 6.0).abs() < 1e-13, || "oracle off for ζ(2)".into())?;
    for (g, s) in [(2, 2), (3, 4)] {
        let r = orientable_volume_ratio::<f64>(LieFamily::Su(2), g, tol).map_err(|e| e.to_string())?;
        let want = em_zeta(s);
        ensure((r.value - want).abs() <= tol, || {
            format!("SU(2) g={g}: {} vs ζ({s}) = {want}", r.value)
        })?;
    }
    let k4 = nonorientable_volume_ratio_su2::<f64>(4, tol).map_err(|e| e.to_string())?;
    ensure((k4.value - em_zeta(2)).abs() <= tol, || format!("k=4: {}", k4.value))?;
    let k5 = nonorientable_volume_ratio_su2::<f64>(5, tol).map_err(|e| e.to_string())?;
    ensure((k5.value - 0.75 * em_zeta(3)).abs() <= tol, || {
        format!("k=5: {}", k5.value)
    })?;
    let k3 = nonorientable_volume_ratio_su2::<f64>(3, 1e-6).map_err(|e| e.to_string())?;
    ensure((k3.value - std::f64::consts::LN_2).abs() <= 1e-6, || {
        format!("k=3: {}", k3.value)
    })?;
    ensure(k3.convergence == Convergence::Conditional, || {
        "k=3 not flagged conditional".into()
    })?;

    let coarse = orientable_volume_ratio::<f64>(LieFamily::Su(3), 2, 5e-9).map_err(|e| e.to_string())?;
    let fine = orientable_series_at_cutoff::<f64>(LieFamily::Su(3), 2, 2 * coarse.cutoff).map_err(|e| e.to_string())?;
    let diff = (fine.value - coarse.value).abs();
    ensure(diff <= 1e-8, || {
        format!("SU(3) g=2 moves by {diff:e} under cutoff doubling")
    })?;
    // nested oracle with exact integer dimensions on a small box
    let small = orientable_series_at_cutoff::<f64>(LieFamily::Su(3), 2, 60).map_err(|e| e.to_string())?;
    let mut nested = 0.0;
    for a in 1..=60u64 {
        for b in 1..=60u64 {
            nested += weyl_dimension_su(&[a, b]).to_f64().unwrap().powi(-2);
        }
    }
    ensure((small.partial_sum - nested).abs() < 1e-12, || {
        "SU(3) box sum differs from nested sum".into()
    })?;
    ensure(fine.value >= nested, || "SU(3) value below a partial sum".into())?;
    Ok(format!(
        "ζ(2) {:.12}, ζ(4) {:.12}, k=3 {:.9} (conditional), SU(3) g=2 {:.10} (Δ {diff:.1e})",
        em_zeta(2),
        em_zeta(4),
        k3.value,
        fine.value
    ))
}

/// id, name, check, runtime limit in seconds
type Criterion = (u8, &'static str, fn() -> Check, Option<u64>);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "orientable counts, characters = enumeration", criterion_1, Some(60)),
        (
            2,
            "non-orientable counts, characters = enumeration",
            criterion_2,
            Some(60),
        ),
        (3, "order formula", criterion_3, None),
        (4, "full distributions", criterion_4, None),
        (5, "convolution factorization", criterion_5, None),
        (6, "AC-invariance fuzz", criterion_6, Some(120)),
        (7, "presentation independence", criterion_7, None),
        (8, "delta and orthogonality identities", criterion_8, None),
        (9, "Möbius graph suite", criterion_9, Some(120)),
        (10, "Lie-group numerics", criterion_10, Some(10)),
    ];
    let mut failed = Vec::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => {
                Err(format!("took {:.1}s, limit {s}s", elapsed.as_secs_f64()))
            }
            (r, _) => r,
        };
        let line = match &result {
            Ok(summary) => format!("criterion {id:>2} PASS  {name}: {summary}"),
            Err(why) => {
                failed.push(id);
                format!("criterion {id:>2} FAIL  {name}: {why}")
            }
        };
        // straight to the stderr handle so the lines survive output capture
        writeln!(std::io::stderr(), "{line} [{:.2}s]", elapsed.as_secs_f64()).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
