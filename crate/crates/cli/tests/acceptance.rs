//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lndkit_core::classifier::{combined_image_ideal, ConjecturedHdStar};
use lndkit_core::grading::{coordinate_weights, decompose, extreme_parts, recombine};
use lndkit_core::rational::{factorial, integer, rational};
use lndkit_core::toric::{classify_toric, detect_line_factor, enumerate_roots};
use lndkit_core::trinomial::{build_relations, classify_trinomial, default_choice, is_rigid, type1_lnd, TrinomialKind};
use lndkit_core::{
    classify, Cone, Derivation, ExpParameter, Ideal, Monomial, Polynomial, PresentedAlgebra, Rational, Tags,
    TrinomialData, VarietyDossier, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Title, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn ok<T>(r: lndkit_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn algebra(vars: &[&str], relations: &[&str]) -> Arc<PresentedAlgebra> {
    Arc::new(PresentedAlgebra::parse(vars, relations).expect("valid algebra"))
}

fn derivation(a: &Arc<PresentedAlgebra>, images: &[&str]) -> Derivation {
    Derivation::parse(a.clone(), images).expect("valid derivation")
}

/// K[x,y], W₁, the suspension surface and the Type 1 trinomial surface, each
/// with one LND.
fn corpus() -> Vec<(&'static str, Derivation, Vec<i64>)> {
    let plane = algebra(&["x", "y"], &[]);
    let w1 = algebra(&["x", "y", "z"], &["x*y - z^2 + 1"]);
    let suspension = algebra(&["z", "y1", "y2"], &["y1*y2 - z^2 + 1"]);
    let trinomial = algebra(&["T11", "T12", "T21"], &["T11*T12 - T21^2 - 1"]);
    vec![
        ("K[x,y]", derivation(&plane, &["y^2", "1"]), vec![2, -1]),
        ("W1", derivation(&w1, &["0", "2*z", "x"]), vec![1, -1, 0]),
        ("suspension", derivation(&suspension, &["y1", "0", "2*z"]), vec![0, 1, -1]),
        ("trinomial", derivation(&trinomial, &["2*T21", "0", "T12"]), vec![1, -1, 0]),
    ]
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_poly(rng: &mut ChaCha8Rng, arity: usize, degree: u32, terms: usize) -> Polynomial {
    let count = rng.gen_range(0..=terms);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut exps = vec![0u32; arity];
        let total = rng.gen_range(0..=degree);
        for _ in 0..total {
            exps[rng.gen_range(0..arity)] += 1;
        }
        out.push((Monomial::from_exponents(exps), random_rational(rng)));
    }
    Polynomial::from_terms(arity, out).expect("well-formed terms")
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let corpus = corpus();
    let lnds: Vec<_> = corpus.iter().map(|(_, d, _)| d.verify_lnd(64).expect("corpus LND")).collect();
    for check in 0..1000 {
        let k = check % corpus.len();
        let (name, d, _) = &corpus[k];
        let a = d.algebra();
        let n = a.arity();
        let (f, g) = (random_poly(&mut rng, n, 3, 4), random_poly(&mut rng, n, 3, 4));
        let lhs = ok(d.apply(&(&f * &g)))?;
        let rhs = &(&f * &ok(d.apply(&g))?) + &(&g * &ok(d.apply(&f))?);
        ensure(ok(a.equal(&lhs, &rhs))?, || format!("Leibniz failed on {name} for f = {}", a.format(&f)))?;
    }
    for check in 0..1000 {
        let k = check % corpus.len();
        let (name, d, _) = &corpus[k];
        let (a, lnd) = (d.algebra(), &lnds[k]);
        let n = a.arity();
        let (f, g) = (random_poly(&mut rng, n, 2, 3), random_poly(&mut rng, n, 2, 3));
        let s = ExpParameter::Value(random_rational(&mut rng));
        let product = ok(lnd.exp(&(&f * &g), &s))?;
        let (ef, eg) = (ok(lnd.exp(&f, &s))?, ok(lnd.exp(&g, &s))?);
        ensure(ok(a.equal(&product, &(&ef * &eg)))?, || format!("exp not multiplicative on {name}"))?;
        let sum = ok(lnd.exp(&(&f + &g), &s))?;
        ensure(ok(a.equal(&sum, &(&ef + &eg)))?, || format!("exp not additive on {name}"))?;
    }
    for check in 0..1000 {
        let k = check % corpus.len();
        let (name, d, _) = &corpus[k];
        let (a, lnd) = (d.algebra(), &lnds[k]);
        let f = random_poly(&mut rng, a.arity(), 2, 3);
        let (s, t) = (random_rational(&mut rng), random_rational(&mut rng));
        let inner = ok(lnd.exp(&f, &ExpParameter::Value(t.clone())))?;
        let lhs = ok(lnd.exp(&inner, &ExpParameter::Value(s.clone())))?;
        let rhs = ok(lnd.exp(&f, &ExpParameter::Value(&s + &t)))?;
        ensure(ok(a.equal(&lhs, &rhs))?, || format!("group law failed on {name}"))?;
    }
    Ok("3 x 1000 checks (Leibniz, exp homomorphism, group law) on 4 algebras".into())
}

/// `x^n y = z^2 - 1` with the canonical LND, and the presentation with `x`
/// and `y` swapped carrying the symmetric one.
fn danielewski(n: u32) -> [(Arc<PresentedAlgebra>, Derivation); 2] {
    let relation = format!("x^{n}*y - z^2 + 1");
    let swapped = format!("x*y^{n} - z^2 + 1");
    let w = algebra(&["x", "y", "z"], &[relation.as_str()]);
    let ws = algebra(&["x", "y", "z"], &[swapped.as_str()]);
    let canonical = derivation(&w, &["0", "2*z", &format!("x^{n}")]);
    let symmetric = derivation(&ws, &["2*z", "0", &format!("y^{n}")]);
    [(w, canonical), (ws, symmetric)]
}

fn criterion_2() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 1..=3 {
        let start = Instant::now();
        let mut checks = danielewski(n).to_vec();
        if n == 1 {
            // on W₁ the symmetric LND lives on the same presentation
            let w = checks[0].0.clone();
            checks.push((w.clone(), derivation(&w, &["2*z", "0", "y"])));
        }
        for (a, d) in checks {
            ensure(d.is_well_defined(), || format!("n = {n}: not well defined"))?;
            let verdict = ok(d.nilpotency_check(32))?;
            ensure(verdict.is_verified(), || format!("n = {n}: {}", verdict.describe(a.vars())))?;
            let v = ok(VarietyDossier::new(a.clone(), vec![("d".into(), d)], Tags::default(), 32))?;
            let ideal = ok(combined_image_ideal(&v))?;
            ensure(ok(a.contains_one(&ideal))?, || format!("n = {n}: 1 not in the image ideal"))?;
            let report = classify(&v, 10);
            ensure(report.verdict == Verdict::A, || format!("n = {n}: classified {}", report.verdict))?;
        }
        slowest = slowest.max(start.elapsed());
        ensure(start.elapsed() < Duration::from_secs(5), || format!("n = {n} took {:?}", start.elapsed()))?;
    }
    Ok(format!("W_1, W_2, W_3 of type A, slowest {:.2}s", slowest.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let w1 = algebra(&["x", "y", "z"], &["x*y - z^2 + 1"]);
    let cyl = Arc::new(w1.cylinder());
    let n = cyl.arity();
    let du = ok(ok(Derivation::coordinate(cyl.clone(), n - 1))?.verify_lnd(64))?;
    let u = cyl.variable(n - 1);
    for _ in 0..200 {
        let f = random_poly(&mut rng, n, 6, 6);
        let rho = ok(du.kernel_projection(&u, &f))?;
        ensure(ok(du.derivation().kernel_membership(&rho))?, || format!("rho({}) not in the kernel", cyl.format(&f)))?;
        let mut total = Polynomial::zero(n);
        for (i, g) in ok(du.iterates(&f))?.iter().enumerate() {
            let c = ok(du.kernel_projection(&u, &g.scale(&factorial(i as u32).recip())))?;
            total = &total + &(&c * &ok(u.try_pow(i as u32))?);
        }
        ensure(ok(cyl.equal(&total, &f))?, || format!("reconstruction failed for {}", cyl.format(&f)))?;
    }
    Ok("200 random f of degree <= 6 on K[W1][u]".into())
}

fn criterion_4() -> Outcome {
    let mut parts_checked = 0;
    for (name, d, weights) in corpus() {
        let parts = ok(decompose(&d, &weights))?;
        parts_checked += parts.len();
        ensure(ok(recombine(&parts))?.as_ref() == Some(&d), || format!("{name}: round trip failed"))?;
        let (low, high) = ok(extreme_parts(&d, &weights))?;
        for p in [low, high] {
            ensure(ok(p.part.nilpotency_check(64))?.is_verified(), || {
                format!("{name}: extreme part of degree {} not nilpotent", p.degree)
            })?;
        }
    }
    let mut cylinder_lnds = 0;
    for (name, d, _) in corpus() {
        let cyl = Arc::new(d.algebra().cylinder());
        let n = cyl.arity();
        let u_weights = coordinate_weights(n, n - 1);
        let mut candidates = vec![ok(Derivation::coordinate(cyl.clone(), n - 1))?];
        for power in 0..3 {
            candidates.push(ok(d.lift(&cyl, power))?);
        }
        // h·∂/∂u with h in the base
        let h = d.algebra().variable(0).with_arity(n).expect("base element");
        candidates.push(ok(candidates[0].scaled(&h))?);
        for c in candidates {
            ensure(ok(c.nilpotency_check(64))?.is_verified(), || format!("{name}: cylinder LND not verified"))?;
            let parts = ok(decompose(&c, &u_weights))?;
            let lowest = parts.first().map(|p| p.degree).ok_or_else(|| format!("{name}: empty decomposition"))?;
            ensure(lowest >= -1, || format!("{name}: lowest u-degree {lowest}"))?;
            cylinder_lnds += 1;
        }
    }
    Ok(format!(
        "{parts_checked} homogeneous parts round-trip; {cylinder_lnds} cylinder LNDs with lowest u-degree >= -1"
    ))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn random_cone(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    loop {
        let count = if dim == 2 { 2 } else { rng.gen_range(3..=4) };
        let mut rays = Vec::new();
        for _ in 0..count {
            let mut v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
            let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
            if g == 0 {
                continue;
            }
            v.iter_mut().for_each(|x| *x /= g);
            rays.push(v);
        }
        if let Ok(cone) = Cone::new(rays) {
            if cone.pointed() && cone.full_dimensional() && cone.rays().len() == count {
                return cone;
            }
        }
    }
}

/// All `e` in the box with exactly one pairing `-1` and the rest `>= 0`.
fn brute_force_roots(cone: &Cone, bound: i64) -> Vec<(Vec<i64>, usize)> {
    let dim = cone.dim();
    let mut out = Vec::new();
    let mut e = vec![-bound; dim];
    loop {
        let pairings: Vec<i64> = cone.rays().iter().map(|v| v.iter().zip(&e).map(|(a, b)| a * b).sum()).collect();
        let negative: Vec<usize> = (0..pairings.len()).filter(|&i| pairings[i] < 0).collect();
        if let [i] = negative[..] {
            if pairings[i] == -1 {
                out.push((e.clone(), i));
            }
        }
        let mut k = 0;
        while k < dim && e[k] == bound {
            e[k] = -bound;
            k += 1;
        }
        if k == dim {
            break;
        }
        e[k] += 1;
    }
    out.sort();
    out
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in [2, 3] {
        for _ in 0..10 {
            let cone = random_cone(&mut rng, dim);
            let mut found: Vec<(Vec<i64>, usize)> =
                enumerate_roots(&cone, 6).into_iter().map(|r| (r.vector, r.distinguished)).collect();
            found.sort();
            let expected = brute_force_roots(&cone, 6);
            ensure(found == expected, || {
                format!("cone {:?}: {} roots, brute force {}", cone.rays(), found.len(), expected.len())
            })?;
        }
    }
    let plane = Cone::new(vec![vec![1, 0], vec![0, 1]]).map_err(|e| e.to_string())?;
    let count = enumerate_roots(&plane, 5).len();
    ensure(count == 12, || format!("A^2 has {count} roots at box 5"))?;
    let quadric = Cone::new(vec![vec![1, 0], vec![1, 2]]).map_err(|e| e.to_string())?;
    ensure(detect_line_factor(&quadric).is_none(), || "line factor on {(1,0),(1,2)}".into())?;
    ensure(!enumerate_roots(&quadric, 10).is_empty(), || "no roots on {(1,0),(1,2)}".into())?;
    let verdict = ok(classify_toric(&quadric, 10))?.verdict;
    ensure(verdict == Verdict::B, || format!("{{(1,0),(1,2)}} classified {verdict}"))?;
    Ok("20 random cones match brute force at box 6; A^2 has 12 roots at box 5; {(1,0),(1,2)} is B".into())
}

fn has_entry(tuple: &[u32], value: u32) -> bool {
    tuple.contains(&value)
}

/// The rigidity criterion, read condition by condition.
fn oracle_non_rigid(t: &TrinomialData) -> bool {
    if t.m() > 0 {
        return true;
    }
    let l = t.exponents();
    let r = l.len();
    let others_have_one = |skip: &[usize]| (0..r).filter(|i| !skip.contains(i)).all(|i| has_entry(&l[i], 1));
    if t.is_type1() {
        return (0..r).any(|b| others_have_one(&[b]));
    }
    for a in 0..r {
        for b in 0..r {
            if others_have_one(&[a, b]) {
                return true;
            }
        }
    }
    let even_with_two = |i: usize| l[i].iter().all(|e| e % 2 == 0) && has_entry(&l[i], 2);
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let distinct = a != b && b != c && a != c;
                if distinct && even_with_two(a) && even_with_two(b) && others_have_one(&[a, b, c]) {
                    return true;
                }
            }
        }
    }
    false
}

fn oracle_verdict(t: &TrinomialData) -> Verdict {
    if !oracle_non_rigid(t) {
        Verdict::C
    } else if t.m() > 0 || t.is_type1() {
        Verdict::A
    } else {
        Verdict::B
    }
}

fn random_trinomial(rng: &mut ChaCha8Rng) -> TrinomialData {
    loop {
        let type1 = rng.gen_bool(0.5);
        let blocks = if type1 { rng.gen_range(2..=4) } else { rng.gen_range(3..=4) };
        let m = if rng.gen_bool(0.2) { rng.gen_range(1..=2) } else { 0 };
        let exponents: Vec<Vec<u32>> =
            (0..blocks).map(|_| (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=4)).collect()).collect();
        let t = if type1 {
            let a = (0..blocks as i64).map(integer).collect();
            TrinomialData::new(TrinomialKind::Type1 { a }, m, exponents)
        } else {
            let rows = [vec![integer(1); blocks], (0..blocks as i64).map(integer).collect()];
            TrinomialData::new(TrinomialKind::Type2 { rows }, m, exponents)
        };
        match t {
            // a one-variable block [1] with m = 0 is not a reduced presentation
            Ok(t) if !(t.m() == 0 && t.exponents().iter().any(|l| l == &[1])) || t.is_type1() => return t,
            _ => continue,
        }
    }
}

fn golden_trinomials() -> Vec<(TrinomialData, bool, Verdict)> {
    let one = |v| integer(v);
    vec![
        (TrinomialData::type1(vec![vec![1, 1], vec![2]], vec![one(0), one(1)], 0).unwrap(), false, Verdict::A),
        (
            TrinomialData::type2(
                vec![vec![2], vec![2], vec![2]],
                [vec![one(1), one(0), one(1)], vec![one(0), one(1), one(1)]],
                0,
            )
            .unwrap(),
            false,
            Verdict::B,
        ),
        (TrinomialData::type1(vec![vec![2], vec![2]], vec![one(0), one(1)], 0).unwrap(), true, Verdict::C),
    ]
}

fn criterion_6() -> Outcome {
    for (t, rigid, verdict) in golden_trinomials() {
        ensure(is_rigid(&t).rigid == rigid, || format!("{:?}: rigidity", t.exponents()))?;
        let got = ok(classify_trinomial(&t))?.verdict;
        ensure(got == verdict, || format!("{:?}: {got}, expected {verdict}", t.exponents()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let t = random_trinomial(&mut rng);
        let expected = oracle_verdict(&t);
        ensure(is_rigid(&t).rigid == (expected == Verdict::C), || format!("{:?}: rigidity", t.exponents()))?;
        let got = ok(classify_trinomial(&t))?.verdict;
        ensure(got == expected, || format!("{:?} m = {}: {got}, oracle {expected}", t.exponents(), t.m()))?;
    }
    Ok("3 golden cases and 50 random trinomials match the oracle".into())
}

fn criterion_7() -> Outcome {
    let mut cases: Vec<TrinomialData> = golden_trinomials().into_iter().map(|(t, _, _)| t).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while cases.len() < 40 {
        cases.push(random_trinomial(&mut rng));
    }
    let mut checked = 0;
    for t in cases.iter().filter(|t| t.is_type1() && !is_rigid(t).rigid) {
        let Some(choice) = default_choice(t) else { continue };
        let a = Arc::new(ok(build_relations(t))?);
        let d = ok(type1_lnd(t, &a, &choice))?;
        ensure(d.is_well_defined(), || format!("{:?}: not well defined", t.exponents()))?;
        ensure(ok(d.nilpotency_check(64))?.is_verified(), || format!("{:?}: not verified", t.exponents()))?;
        ensure(ok(a.contains_one(&d.image_ideal()))?, || format!("{:?}: 1 not in I", t.exponents()))?;
        checked += 1;
    }
    ensure(checked >= 5, || format!("only {checked} non-rigid Type 1 cases"))?;
    Ok(format!("{checked} non-rigid Type 1 cases give a type-A witness"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let w1 = algebra(&["x", "y", "z"], &["x*y - z^2 + 1"]);
    let cyl = w1.cylinder();
    let n = cyl.arity();
    let u = cyl.variable(n - 1);
    let ideals: Vec<Ideal> = [vec!["x"], vec!["x", "z - 1"], vec!["y^2"]]
        .iter()
        .map(|gens| Ideal::new(3, gens.iter().map(|g| w1.parse_element(g).unwrap())).unwrap())
        .collect();
    let proper: Vec<ConjecturedHdStar> =
        ideals.iter().map(|i| ConjecturedHdStar::new(w1.clone(), i).unwrap()).collect();
    // a random member: K[Y]-part plus Σ_{i>0} g_i·h_i·u^i with g_i ∈ I
    let member = |rng: &mut ChaCha8Rng, ideal: &Ideal| -> Polynomial {
        let lift = |p: Polynomial| p.with_arity(n).unwrap();
        let mut f = lift(random_poly(rng, 3, 2, 3));
        for i in 1..=2u32 {
            let g = &ideal.generators()[rng.gen_range(0..ideal.generators().len())];
            let h = random_poly(rng, 3, 2, 2);
            f = &f + &(&lift(g * &h) * &u.try_pow(i).unwrap());
        }
        f
    };
    for pair in 0..500 {
        let k = pair % ideals.len();
        let (f, g) = (member(&mut rng, &ideals[k]), member(&mut rng, &ideals[k]));
        for (what, p) in [("sum", &f + &g), ("product", &f * &g)] {
            ensure(ok(proper[k].contains(&p))?, || format!("{what} of members rejected"))?;
        }
    }
    for (k, predicate) in proper.iter().enumerate() {
        ensure(!ok(predicate.contains(&u))?, || format!("u accepted for proper ideal {k}"))?;
        for _ in 0..20 {
            let base = random_poly(&mut rng, 3, 4, 5).with_arity(n).unwrap();
            ensure(ok(predicate.contains(&base))?, || "element of K[Y] rejected".into())?;
        }
    }
    let unit = ConjecturedHdStar::new(w1.clone(), &Ideal::unit(3)).unwrap();
    ensure(ok(unit.contains(&u))?, || "u rejected for the unit ideal".into())?;
    Ok("500 member pairs closed under + and x; u rejected for 3 proper ideals".into())
}

fn criterion_9() -> Outcome {
    let (all_squares, _, _) = golden_trinomials().swap_remove(1);
    let empty = Arc::new(PresentedAlgebra::polynomial_ring(Vec::new()).unwrap());
    let tags = Tags { trinomial: Some(all_squares), ..Tags::default() };
    let v = ok(VarietyDossier::new(empty.clone(), Vec::new(), tags, 64))?;
    let trinomial = classify(&v, 10).verdict;
    let cone = Cone::new(vec![vec![1, 0], vec![1, 2]]).unwrap();
    let tags = Tags { toric: Some(cone), ..Tags::default() };
    let v = ok(VarietyDossier::new(empty, Vec::new(), tags, 64))?;
    let toric = classify(&v, 10).verdict;
    ensure(trinomial == Verdict::B && toric == Verdict::B, || format!("trinomial {trinomial}, toric {toric}"))?;
    Ok("all-squares Type 2 trinomial and {(1,0),(1,2)} both B".into())
}

fn corpus_file(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("corpus");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn criterion_10() -> Outcome {
    let commands: Vec<Vec<String>> = [
        "check-lnd w1.json d1",
        "check-lnd w2.json canonical",
        "check-lnd plane.json euler",
        "classify w1.json",
        "classify w3_swapped.json",
        "classify quadric.json",
        "classify trinomial_a.json",
        "classify trinomial_b.json",
        "classify trinomial_c.json",
        "classify quadric_cone.json",
        "classify thin_cone.json",
        "exp plane.json dx x^2",
        "exp w1.json d1 y 1/2",
        "decompose w1.json d2 x_minus_y",
        "decompose w1.json d1 std",
        "roots plane_cone.json",
        "roots quadric_cone.json",
        "hdstar-member w1.json x*u+z*u^2",
        "check-lnd w1.json missing",
    ]
    .iter()
    .map(|c| {
        let mut words: Vec<String> = c.split(' ').map(String::from).collect();
        words[1] = corpus_file(&words[1]);
        words.push("--json".into());
        words
    })
    .collect();
    for args in &commands {
        let run = || Command::new(env!("CARGO_BIN_EXE_lndkit")).args(args).output().map_err(|e| e.to_string());
        let (first, second) = (run()?, run()?);
        ensure(!first.stdout.is_empty(), || format!("{}: no output", args[0]))?;
        ensure(first.stdout == second.stdout && first.status == second.status, || {
            format!("{} {}: output differs between runs", args[0], args[1])
        })?;
    }
    Ok(format!("{} commands run twice with byte-identical --json output", commands.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Leibniz/homomorphism suite", criterion_1, Some(60)),
        ("Danielewski surfaces are type A", criterion_2, None),
        ("slice reconstruction", criterion_3, Some(30)),
        ("graded decomposition", criterion_4, Some(30)),
        ("Demazure roots vs brute force", criterion_5, Some(10)),
        ("trinomial golden table and oracle", criterion_6, Some(10)),
        ("canonical Type 1 LND", criterion_7, Some(20)),
        ("conjectured HD* membership", criterion_8, Some(30)),
        ("cross-module consistency", criterion_9, None),
        ("determinism", criterion_10, None),
    ];
    let mut failures = 0;
    for (k, (title, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(*limit) {
                outcome = Err(format!("took {:.1}s, limit {limit}s", elapsed.as_secs_f64()));
            }
        }
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {title}: {detail} [{secs:.2}s]", k + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {title}: {reason} [{secs:.2}s]", k + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
