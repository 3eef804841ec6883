//! Acceptance gate. Runs every criterion with its time budget and prints one
//! PASS/FAIL line each; exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sz_core::bijection::verify_bijection;
use sz_core::counts::{self, check_floor_claims, count_compositions};
use sz_core::{fib, forward, inverse, Count, FiniteSet, Gap, Oracle, SequenceFamily};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f(i: i64) -> Count {
    fib(i).expect("index >= -1")
}

fn oracle_count(family: SequenceFamily, n: u64) -> Count {
    Oracle::default()
        .count_matching(n, &family.oracle_spec())
        .expect("within ceiling")
}

fn ac01_m_values() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_sz"))
        .args(["table", "M", "--from", "1", "--to", "9"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let got: Vec<String> = String::from_utf8_lossy(&out.stdout).lines().map(String::from).collect();
    let want = ["1", "1", "2", "3", "5", "8", "13", "21", "34"];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("1 1 2 3 5 8 13 21 34".into())
}

fn ac02_a_base_cases() -> Outcome {
    let got: Vec<Count> = (1..=5).map(|n| counts::count_a(n).unwrap()).collect();
    let want: Vec<Count> = [0u8, 1, 1, 2, 3].map(Count::from).to_vec();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("A(1..5) = 0 1 1 2 3".into())
}

fn ac03_schreier_counts() -> Outcome {
    use SequenceFamily::*;
    for n in 1..=20u64 {
        let i = n as i64;
        for (family, want) in [(A, f(i - 1)), (B, f(i - 2)), (C, f(i + 2)), (D, f(i + 1))] {
            let got = oracle_count(family, n);
            ensure(got == want, || format!("{family} n={n}: oracle {got}, expected {want}"))?;
        }
    }
    Ok("A, B, C, D oracle = F(n-1), F(n-2), F(n+2), F(n+1) for n <= 20".into())
}

fn ac04_parity_corollaries() -> Outcome {
    for n in 1..=20u64 {
        let i = n as i64;
        let (lw_want, ls_want) = if n % 2 == 1 { (f(i), f(i)) } else { (f(i + 1), f(i - 1)) };
        let lw = oracle_count(SequenceFamily::Lw, n);
        let ls = oracle_count(SequenceFamily::Ls, n);
        ensure(lw == lw_want && lw == counts::count_lw(n).unwrap(), || {
            format!("Lw n={n}: oracle {lw}, expected {lw_want}")
        })?;
        ensure(ls == ls_want && ls == counts::count_ls(n).unwrap(), || {
            format!("Ls n={n}: oracle {ls}, expected {ls_want}")
        })?;
    }
    Ok("Lw, Ls oracle match parity cases for n <= 20".into())
}

fn ac05_bijection() -> Outcome {
    for n in 1..=16u64 {
        let r = verify_bijection(n).map_err(|e| e.to_string())?;
        ensure(r.is_bijection, || format!("n={n}: {r:?}"))?;
        let want = f(n as i64 + 2);
        ensure(r.domain_size == want, || format!("n={n}: domain {} != {want}", r.domain_size))?;
    }
    Ok("bijective for n <= 16, |X_n| = F(n+2)".into())
}

fn ac06_gap_families() -> Outcome {
    for k in 2..=5u64 {
        let gap = Gap::new(k).unwrap();
        for n in 1..=20u64 {
            let h = oracle_count(SequenceFamily::H(gap), n);
            let i = oracle_count(SequenceFamily::I(gap), n);
            let j = oracle_count(SequenceFamily::J(gap), n);
            let (hf, if_, jf) = (
                counts::count_h(k, n).unwrap(),
                counts::count_i(k, n).unwrap(),
                counts::count_j(k, n).unwrap(),
            );
            ensure(h == hf && i == if_ && j == jf, || {
                format!("k={k} n={n}: oracle ({h},{i},{j}) vs recurrence ({hf},{if_},{jf})")
            })?;
            ensure(h == i.clone() + j.clone(), || format!("k={k} n={n}: H != I + J"))?;
        }
    }
    Ok("H, I, J oracle = recurrence and H = I + J for k in 2..=5, n <= 20".into())
}

fn ac07_h_closed_form() -> Outcome {
    for k in 2..=10u64 {
        for n in 1..=200u64 {
            let closed = counts::count_h_binomial(k, n).unwrap();
            let rec = counts::count_h(k, n).unwrap();
            ensure(closed == rec, || format!("k={k} n={n}: {closed} != {rec}"))?;
        }
    }
    Ok("binomial sum = recurrence for k in 2..=10, n <= 200".into())
}

fn ac08_floor_claims() -> Outcome {
    let mut applied = [0usize; 3];
    for k in 2..=50u64 {
        let gap = Gap::new(k).unwrap();
        for n in 1..=10_000i64 {
            let c = check_floor_claims(n, gap);
            ensure(c.all_hold(), || format!("n={n} k={k}: {c:?}"))?;
            applied[0] += usize::from(c.same_floor_steps_up.applicable);
            applied[1] += usize::from(c.larger_floor_caps.applicable);
            applied[2] += usize::from(c.same_floor_is_exact.applicable);
        }
    }
    ensure(applied.iter().all(|&a| a > 0), || format!("a claim never applied: {applied:?}"))?;
    Ok(format!("all claims hold; applicable {applied:?} times"))
}

/// Counts solutions of `y_1 + ... + y_p = n` with `y_i >= c_i` by walking
/// every tuple in `[0, n]^p`.
fn brute_solutions(n: u64, bounds: &[u64]) -> u64 {
    let p = bounds.len();
    let mut y = vec![0u64; p];
    let mut hits = 0;
    loop {
        if y.iter().sum::<u64>() == n && y.iter().zip(bounds).all(|(a, c)| a >= c) {
            hits += 1;
        }
        let mut i = 0;
        loop {
            if i == p {
                return hits;
            }
            if y[i] < n {
                y[i] += 1;
                break;
            }
            y[i] = 0;
            i += 1;
        }
    }
}

fn ac09_compositions() -> Outcome {
    let mut cases = 0;
    for p in 1..=4u32 {
        for code in 0..4usize.pow(p) {
            let bounds: Vec<u64> = (0..p).map(|i| ((code >> (2 * i)) & 3) as u64).collect();
            for n in 0..=12u64 {
                let closed = count_compositions(n, &bounds);
                let brute = Count::from(brute_solutions(n, &bounds));
                ensure(closed == brute, || format!("n={n} bounds={bounds:?}: {closed} != {brute}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases agree"))
}

fn ac10_odd_gaps() -> Outcome {
    for n in 1..=20u64 {
        let i = n as i64;
        let p = oracle_count(SequenceFamily::P, n);
        let q = oracle_count(SequenceFamily::Q, n);
        ensure(p == f(i + 1), || format!("P n={n}: {p}"))?;
        ensure(q == f(i + 3) - 1u8, || format!("Q n={n}: {q}"))?;
    }
    Ok("P = F(n+1), Q = F(n+3) - 1 for n <= 20".into())
}

fn ac11_fibonacci_identities() -> Outcome {
    let mut all = Count::from(0u8);
    let mut even = Count::from(0u8);
    let mut odd_shifted = Count::from(0u8);
    for n in 1..=1000i64 {
        ensure(f(n) == f(n - 1) + f(n - 2), || format!("recurrence at {n}"))?;
        all += f(n);
        if n % 2 == 0 {
            even += f(n);
        } else {
            odd_shifted += f(n - 1);
        }
        ensure(all == f(n + 2) - 1u8, || format!("prefix sum at {n}"))?;
        let (e, o) = if n % 2 == 0 { (n + 1, n - 1) } else { (n, n) };
        ensure(even == f(e) - 1u8, || format!("even-index sum at {n}"))?;
        ensure(odd_shifted == f(o) - 1u8, || format!("odd-shifted sum at {n}"))?;
    }
    Ok(format!("identities hold to 1000 ({} bits at F(1000))", f(1000).bits()))
}

/// Weak-Schreier subset of `{1..n}` drawn directly: cardinality `k`, minimum
/// `m` in `[k, n-k+1]`, and `k-1` further elements above `m`.
fn random_weak_schreier(rng: &mut StdRng) -> (FiniteSet, u64) {
    let n = rng.gen_range(1..=60u64);
    let k = rng.gen_range(0..=n.div_ceil(2));
    if k == 0 {
        return (FiniteSet::empty(), n);
    }
    let m = rng.gen_range(k..=n - k + 1);
    let mut elements = vec![m];
    let above = rand::seq::index::sample(rng, (n - m) as usize, (k - 1) as usize);
    elements.extend(above.into_iter().map(|i| m + 1 + i as u64));
    (FiniteSet::new(elements).expect("distinct positives"), n)
}

fn ac12_random_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    let mut largest = 0;
    for _ in 0..10_000 {
        let (a, n) = random_weak_schreier(&mut rng);
        ensure(a.is_weak_schreier(), || format!("generator produced {a}"))?;
        let image = forward(&a, n).map_err(|e| format!("{a}: {e}"))?;
        let back = inverse(&image, n).map_err(|e| format!("{image}: {e}"))?;
        ensure(back == a, || format!("{a} -> {image} -> {back}"))?;
        ensure(image.max_element() == a.max_element(), || format!("max changed for {a}"))?;
        ensure(image.len() == a.len(), || format!("size changed for {a}"))?;
        if let (Some(g), Some(h)) = (a.gap_list(), image.gap_list()) {
            ensure(g.iter().zip(h.iter()).all(|(x, y)| y == x + 1), || {
                format!("gaps of {image} are not gaps of {a} plus one")
            })?;
        }
        largest = largest.max(a.max_element().unwrap_or(0));
    }
    Ok(format!("10000 sets, largest element {largest}"))
}

type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    ("AC-01", "M values via CLI table", Duration::from_secs(1), ac01_m_values),
    ("AC-02", "A base cases", Duration::from_secs(1), ac02_a_base_cases),
    ("AC-03", "A/B/C/D oracle equivalence", Duration::from_secs(60), ac03_schreier_counts),
    ("AC-04", "Lw/Ls parity corollaries", Duration::from_secs(60), ac04_parity_corollaries),
    ("AC-05", "weak-Schreier to Zeckendorf bijection", Duration::from_secs(60), ac05_bijection),
    ("AC-06", "H/I/J oracle equivalence", Duration::from_secs(120), ac06_gap_families),
    ("AC-07", "H closed form vs recurrence", Duration::from_secs(5), ac07_h_closed_form),
    ("AC-08", "floor proposition", Duration::from_secs(5), ac08_floor_claims),
    ("AC-09", "bounded compositions lemma", Duration::from_secs(5), ac09_compositions),
    ("AC-10", "odd-gap counts", Duration::from_secs(60), ac10_odd_gaps),
    ("AC-11", "Fibonacci identities", Duration::from_secs(1), ac11_fibonacci_identities),
    ("AC-12", "random round trip beyond ceiling", Duration::from_secs(5), ac12_random_round_trip),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for &(id, name, budget, run) in CRITERIA {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
