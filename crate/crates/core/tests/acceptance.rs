//! Acceptance run: one line per criterion with its tolerance and runtime
//! bound. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;

use heisenberg_spans::linearize::{
    antisymmetrized_block, degroupoidify_span, identity_stuff_type, khovanov_iso_check, ladder_matrices, module_block,
    number_block, path_block, pointed_set_stuff_type, regular_equivalence_check, resolve_convention, stuff_type_gf,
    symmetrized_block, vacuum_moment, SymConvention,
};
use heisenberg_spans::matrix::{int, QMatrix};
use heisenberg_spans::sln::{commutator_defect, crosscheck_degroupoidification, run_sln_catalog, RelationForm};
use heisenberg_spans::span::{
    annihilation_span, compose, creation_span, direct_sum, fs_shared, identity_span, restrict_to_source,
    spans_isomorphic, word_height, word_span, Span,
};
use heisenberg_spans::verifier::{run_relation_catalog, CheckStatus, Expectation};
use heisenberg_spans::young::{
    branch_down, decompose_character, part, partitions_of, tensor_with_permutation_rep, SkewShape,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn criterion_1() -> Outcome {
    let m = 6;
    let s = ok(compose(&annihilation_span(m), &creation_span(m)))?;
    for n in 1..=5 {
        let mut orders: Vec<usize> = (0..s.apex.len())
            .filter(|&x| s.source().cardinality_of(s.right.object(x)) == n)
            .map(|x| s.apex.aut(x).order())
            .collect();
        orders.sort_unstable();
        ensure(orders == vec![factorial(n - 1), factorial(n)], format!("n = {n}: stabilizers {orders:?}"))?;
    }
    Ok("A∘A† has two classes over each n in 1..=5 with stabilizers (n−1)! and n!".into())
}

fn criterion_2() -> Outcome {
    let m = 6;
    let (a, ad) = (annihilation_span(m), creation_span(m));
    let lhs = restrict_to_source(&ok(compose(&a, &ad))?, m - 1);
    let rhs = ok(direct_sum(&ok(compose(&ad, &a))?, &identity_span(&fs_shared(m, 1), m)))?;
    let rhs = restrict_to_source(&rhs, m - 1);
    let w = spans_isomorphic(&lhs, &rhs).ok_or("no witness")?;
    ensure(w.verify(&lhs, &rhs), "witness does not verify")?;
    Ok(format!("witness on {} apex classes, sources of size ≤ {}", w.component_map.len(), m - 1))
}

fn criterion_3() -> Outcome {
    let checks = run_relation_catalog(5);
    for c in &checks {
        ensure(c.status.passed(), format!("{}: {}", c.name, c.witness))?;
    }
    let find = |name: &str| checks.iter().find(|c| c.name == name).ok_or(format!("missing {name}"));
    for name in ["biproduct-2", "biproduct-3"] {
        let c = find(name)?;
        ensure(c.classes_compared == (0, 0), format!("{name} has a non-empty apex"))?;
    }
    for name in ["snake-1", "snake-2", "snake-3", "snake-4", "sym-involution-A", "sym-involution-Adag", "braid-A", "braid-Adag"] {
        ensure(find(name)?.status == CheckStatus::Verified, format!("{name} not verified"))?;
    }
    for name in ["braid-A", "braid-Adag"] {
        ensure(find(name)?.classes_compared.0 > 0, format!("{name} compared no classes"))?;
    }
    let twist = find("twist")?;
    ensure(twist.expectation == Expectation::Zero && twist.status == CheckStatus::Verified, "twist is not zero")?;
    ensure(
        find("naturality-failure")?.status == CheckStatus::ExpectedInequalityConfirmed,
        "naturality pair not distinguished",
    )?;
    Ok(format!("{} catalog entries pass at max-card 5", checks.len()))
}

fn criterion_4() -> Outcome {
    // Window 8 means the eight classes of sets with 0..=7 elements.
    let m = 7;
    let (a, ad) = ok(ladder_matrices(m))?;
    for i in 0..=m {
        for j in 0..=m {
            ensure(*ad.get(i, j) == int(i64::from(i == j + 1)), format!("D(A†)[{i}][{j}]"))?;
            let want = if j == i + 1 { j as i64 } else { 0 };
            ensure(*a.get(i, j) == int(want), format!("D(A)[{i}][{j}]"))?;
        }
    }
    let comm = &(&a * &ad) - &(&ad * &a);
    ensure(comm.top_left(m, m) == QMatrix::identity(m), "commutator is not the identity on n ≤ 6")?;
    Ok("weights 1..7; [D(A), D(A†)] = 1 on n ≤ 6".into())
}

fn grid(rows: &[&[u64]]) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn criterion_5() -> Outcome {
    let golden: Vec<((usize, usize), Vec<Vec<u64>>)> = vec![
        ((0, 1), grid(&[&[1]])),
        ((1, 2), grid(&[&[1, 1]])),
        ((2, 3), grid(&[&[1, 1, 0], &[0, 1, 1]])),
        ((3, 4), grid(&[&[1, 1, 0, 0, 0], &[0, 1, 1, 1, 0], &[0, 0, 0, 1, 1]])),
        (
            (4, 5),
            grid(&[
                &[1, 1, 0, 0, 0, 0, 0],
                &[0, 1, 1, 1, 0, 0, 0],
                &[0, 0, 1, 0, 1, 0, 0],
                &[0, 0, 0, 1, 1, 1, 0],
                &[0, 0, 0, 0, 0, 1, 1],
            ]),
        ),
        ((0, 2), grid(&[&[1, 1]])),
        ((1, 3), grid(&[&[1, 2, 1]])),
        ((2, 4), grid(&[&[1, 2, 1, 1, 0], &[0, 1, 1, 2, 1]])),
    ];
    for ((i, j), want) in &golden {
        let b = ok(path_block(*i, *j))?;
        ensure(&b.entries == want, format!("M_{{{i},{j}}} = {:?}", b.entries))?;
    }
    // The printed M_{3,6} lists (2,2,2) before (3,1,1,1); entries are
    // compared by label.
    let printed_cols: Vec<Vec<usize>> = vec![
        vec![6],
        vec![5, 1],
        vec![4, 2],
        vec![4, 1, 1],
        vec![3, 3],
        vec![3, 2, 1],
        vec![2, 2, 2],
        vec![3, 1, 1, 1],
        vec![2, 2, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![1; 6],
    ];
    let printed = grid(&[
        &[1, 3, 3, 3, 1, 2, 0, 1, 0, 0, 0],
        &[0, 1, 3, 3, 2, 6, 2, 3, 3, 1, 0],
        &[0, 0, 0, 1, 0, 2, 1, 3, 3, 3, 1],
    ]);
    let m36 = ok(path_block(3, 6))?;
    ensure(m36.cols.len() == printed_cols.len(), "M_{3,6} has the wrong width")?;
    for (mu, row) in partitions_of(3).iter().zip(&printed) {
        for (lambda, want) in printed_cols.iter().zip(row) {
            let got = m36.get(mu, &part(lambda)).ok_or("missing M_{3,6} entry")?;
            ensure(got == *want, format!("M_{{3,6}} at {mu} → {}: {got}", part(lambda)))?;
        }
    }
    let n4 = grid(&[&[1, 1, 0, 0, 0], &[1, 2, 1, 1, 0], &[0, 1, 1, 1, 0], &[0, 1, 1, 2, 1], &[0, 0, 0, 1, 1]]);
    ensure(number_block(4).entries == n4, "N_4 differs")?;
    Ok(format!("{} path blocks, M_{{3,6}} and N_4 match entrywise", golden.len()))
}

fn criterion_6() -> Outcome {
    for n in 1..=5 {
        ensure(ok(regular_equivalence_check(n))?.passed, format!("N_{n} is not tensoring with C^{n}"))?;
        for lambda in partitions_of(n) {
            let tensor = ok(tensor_with_permutation_rep(&lambda))?;
            let below = branch_down(&lambda);
            for mu in partitions_of(n) {
                let shared = branch_down(&mu).iter().filter(|nu| below.contains(nu)).count() as u64;
                let mult = tensor.get(&mu);
                ensure(mult == shared, format!("{lambda} ⊗ C^{n} has {mu} {mult} times, {shared} shared neighbours"))?;
            }
        }
    }
    Ok("N_n ≅ (−) ⊗ C^n for n = 1..=5; multiplicities equal shared lower neighbours".into())
}

fn criterion_7() -> Outcome {
    let mb = ok(module_block(2, 2))?;
    let chi = mb.character(&part(&[2]), &part(&[3, 1])).ok_or("missing C² entry")?;
    let d = ok(decompose_character(chi))?;
    ensure(d.0 == vec![(part(&[2]), 1), (part(&[1, 1]), 1)], format!("C² entry decomposes as {d}"))?;
    let mb = ok(module_block(3, 3))?;
    let chi = mb.character(&part(&[2, 1]), &part(&[3, 2, 1])).ok_or("missing C⁶ entry")?;
    ensure(chi.values == vec![6, 0, 0], format!("C⁶ character {chi}"))?;
    let d = ok(decompose_character(chi))?;
    ensure(
        d.0 == vec![(part(&[3]), 1), (part(&[2, 1]), 2), (part(&[1, 1, 1]), 1)],
        format!("C⁶ entry decomposes as {d}"),
    )?;
    Ok("C² = trivial ⊕ sign; C⁶ has character (6,0,0) = (3) + 2·(2,1) + (1,1,1)".into())
}

fn criterion_8() -> Outcome {
    let r = ok(resolve_convention())?;
    let sym = ok(symmetrized_block(2, 2, r.convention))?;
    let anti = ok(antisymmetrized_block(2, 2, r.convention))?;
    let (want_sym, want_anti) = match r.convention {
        SymConvention::SkewModule => (grid(&[&[1, 1, 1, 0, 0], &[0, 1, 0, 1, 0]]), grid(&[&[0, 1, 0, 1, 0], &[0, 0, 1, 1, 1]])),
        SymConvention::OneDimensionalTrivial => {
            (grid(&[&[1, 1, 1, 1, 0], &[0, 1, 1, 1, 1]]), grid(&[&[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0]]))
        }
    };
    ensure(sym.entries == want_sym, format!("symmetrized block {:?}", sym.entries))?;
    ensure(anti.entries == want_anti, format!("antisymmetrized block {:?}", anti.entries))?;
    // Entries on which both conventions agree, against the printed blocks.
    let printed_sym = grid(&[&[1, 1, 1, 1, 0], &[0, 1, 1, 1, 1]]);
    let printed_anti = grid(&[&[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0]]);
    let dims = ok(path_block(2, 4))?;
    let mut common = 0;
    for (i, mu) in dims.rows.iter().enumerate() {
        for (j, lambda) in dims.cols.iter().enumerate() {
            if dims.entries[i][j] == 0 {
                continue;
            }
            let strip = ok(SkewShape::new(lambda.clone(), mu.clone()))?.is_horizontal_strip();
            if strip {
                ensure(sym.entries[i][j] == printed_sym[i][j], format!("horizontal strip {mu} → {lambda}"))?;
                common += 1;
            }
            if dims.entries[i][j] == 2 {
                ensure(
                    sym.entries[i][j] == printed_sym[i][j] && anti.entries[i][j] == printed_anti[i][j],
                    format!("C² splitting at {mu} → {lambda}"),
                )?;
                common += 1;
            }
        }
    }
    Ok(format!(
        "transposition scalar {} selects {:?}; {common} shared entries match the printed blocks",
        r.scalar, r.convention
    ))
}

fn criterion_9() -> Outcome {
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let k = ok(khovanov_iso_check(n, m, 6))?;
        ensure(k.passed, format!("(n, m) = ({n}, {m}) fails"))?;
    }
    Ok("blocks agree for (1,1), (1,2), (2,1), (2,2) through stage 6".into())
}

fn criterion_10() -> Outcome {
    for (k, want) in [(2, 1), (4, 3), (6, 15)] {
        let v = ok(vacuum_moment(k, 8))?;
        ensure(v == BigRational::from_integer(want.into()), format!("moment {k} = {v}"))?;
    }
    for k in [1, 3, 5, 7] {
        let v = ok(vacuum_moment(k, 8))?;
        ensure(v == BigRational::from_integer(0.into()), format!("moment {k} = {v}"))?;
    }
    Ok("moments 2, 4, 6 are 1, 3, 15; odd moments vanish".into())
}

fn criterion_11() -> Outcome {
    let m = 8;
    let id = ok(stuff_type_gf(&identity_stuff_type(m), m))?;
    let pointed = ok(stuff_type_gf(&ok(pointed_set_stuff_type(m))?, m))?;
    for n in 0..=m {
        let inv = |k: usize| BigRational::new(1.into(), factorial(k).into());
        ensure(id[n] == inv(n), format!("identity coefficient {n} = {}", id[n]))?;
        let want = if n == 0 { BigRational::from_integer(0.into()) } else { inv(n - 1) };
        ensure(pointed[n] == want, format!("pointed coefficient {n} = {}", pointed[n]))?;
    }
    Ok("e^z and z·e^z through z^8".into())
}

fn criterion_12() -> Outcome {
    let window = 5;
    let mut relations = 0;
    let mut literal_failures = Vec::new();
    for n in [2, 3] {
        for c in run_sln_catalog(n, window, RelationForm::Derived) {
            ensure(c.status == CheckStatus::Verified, format!("{}: {}", c.name, c.witness))?;
            relations += 1;
        }
        for c in run_sln_catalog(n, window, RelationForm::Literal) {
            if c.status == CheckStatus::Failed {
                literal_failures.push(c.name);
            }
        }
        for i in 1..=n {
            let r = ok(crosscheck_degroupoidification(i, n, 3))?;
            ensure(r.passed, format!("generators at colour {i}, n = {n}: {r:?}"))?;
        }
        for i in 1..n {
            for j in 1..n {
                ensure(ok(commutator_defect(i, j, n, window))?.is_zero(), format!("[E{i}, F{j}] for n = {n}"))?;
            }
        }
    }
    Ok(format!(
        "{relations} relation instances hold; generators and commutators exact; printed EN/FN coefficients fail at {}",
        literal_failures.join(" ")
    ))
}

fn criterion_13() -> Outcome {
    let m = 4;
    let gens = |m: usize| -> Vec<Span> { vec![identity_span(&fs_shared(m, 1), m), annihilation_span(m), creation_span(m)] };
    let mut composites = 0;
    for t in gens(m) {
        for s in gens(m) {
            let c = ok(compose(&t, &s))?;
            ensure(
                common::pullback_classes(&c) == common::raw_triple_classes(&s.left, &t.right),
                "double cosets disagree with raw triple orbits",
            )?;
            composites += 1;
        }
    }
    let w = 6;
    let words = common::all_words(4);
    for word in &words {
        let d = ok(degroupoidify_span(&*ok(word_span(word, w))?))?.matrix;
        let mut product = QMatrix::identity(w + 1);
        for x in word {
            product = &product * &ok(degroupoidify_span(&x.span(w)))?.matrix;
        }
        let oracle = common::word_matrix(word, w);
        for col in 0..=w - word_height(word) {
            for row in 0..=w {
                ensure(d.get(row, col) == product.get(row, col), format!("{word:?} not functorial"))?;
                ensure(*d.get(row, col) == int(oracle[row][col]), format!("{word:?} differs from the ladder product"))?;
            }
        }
    }
    Ok(format!("{composites} composites match raw triples at max-card 4; {} words functorial", words.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, &str, u64, fn() -> Outcome); 13] = [
        (1, "weak pullback of A∘A†", "exact", 5, criterion_1),
        (2, "categorified commutation", "witness", 10, criterion_2),
        (3, "relation catalog", "exact", 60, criterion_3),
        (4, "degroupoidification", "exact", 10, criterion_4),
        (5, "golden path blocks", "exact", 1, criterion_5),
        (6, "number operator as tensoring", "exact", 10, criterion_6),
        (7, "module decompositions", "exact", 10, criterion_7),
        (8, "symmetrizer convention", "exact", 10, criterion_8),
        (9, "Khovanov isomorphism", "exact", 10, criterion_9),
        (10, "field moments", "exact", 10, criterion_10),
        (11, "stuff types", "exact", 10, criterion_11),
        (12, "sl_n relations", "exact", 120, criterion_12),
        (13, "oracle equivalence", "exact", 30, criterion_13),
    ];
    let mut failures = 0;
    for (n, name, tolerance, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(bound);
        let (tag, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time: {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {n:>2} {tag} {name} | tolerance {tolerance} | {:.2}s of {bound}s | {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 13 criteria pass", 13 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

