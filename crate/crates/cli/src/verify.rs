use anyhow::Result;
use minbetti::coning::parse_cone_seq;
use minbetti::extremality::{cycle_support_ok, is_linear, minimal_nk_complex};
use minbetti::golden;
use minbetti::sample::random_small_complex;
use minbetti::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

fn same_entries(a: &BettiDiagram, b: &BettiDiagram) -> bool {
    a.entries().eq(b.entries())
}

/// The two reference ideals end to end: tables, invariants, witness and
/// total-Betti criteria.
pub fn reference_pair(p: u64) -> Result<Vec<Check>> {
    let f = golden::shared_fvector();
    let bi = betti_via_hochster(&golden::ideal_i().complex(), p, None)?;
    let bj = betti_via_hochster(&golden::ideal_j().complex(), p, None)?;
    let mut out = vec![
        Check::new(
            "table I",
            same_entries(&bi, &golden::table_i()),
            format!("\n{}", bi.render_macaulay2()),
        ),
        Check::new(
            "table J",
            same_entries(&bj, &golden::table_j()),
            format!("\n{}", bj.render_macaulay2()),
        ),
        Check::new(
            "column sums",
            bi.total_betti().as_slice() == golden::TOTALS_I && bj.total_betti().as_slice() == golden::TOTALS_J,
            format!(
                "{:?} and {:?}",
                bi.total_betti().as_slice(),
                bj.total_betti().as_slice()
            ),
        ),
        Check::new(
            "diagonal sums",
            bi.diagonal_sums().as_slice() == golden::DIAGONAL_SUMS && bj.diagonal_sums().same_as(&bi.diagonal_sums()),
            format!("{:?}", bi.diagonal_sums().as_slice()),
        ),
        Check::new(
            "hilbert series",
            hilbert_series_check(&bi, &f) && hilbert_series_check(&bj, &f),
            format!("against {f}"),
        ),
    ];
    let witness = check_diag_witness(&[bi.clone(), bj.clone()])?;
    let order = bi.compare(&bj)?;
    out.push(Check::new(
        "diagonal witness",
        witness.as_ref().map(|w| w.j) == Some(6) && order == DiagramOrder::Incomparable,
        format!("witness {:?}, order {order:?}", witness.map(|w| w.j)),
    ));
    let poset = BettiPoset::from_diagrams(f.clone(), p, [(bi.clone(), None), (bj.clone(), None)])?;
    out.push(Check::new(
        "no unique minimum",
        !poset.has_unique_min() && poset.minimal_indices().len() == 2,
        format!("{} minimal elements", poset.minimal_indices().len()),
    ));
    let s_sum = bj.total_betti().sum();
    out.push(Check::new(
        "J has no diagonal cancellation",
        check_sum_equals_abs_diag(&bj) && s_sum == 34 && bj.diagonal_sums().abs_sum() == 34,
        format!("sum of s_i = {s_sum}"),
    ));
    let k = check_betti_family(&bj, &bi);
    out.push(Check::new(
        "total Betti incomparability",
        k == Some(3),
        format!("k = {k:?}"),
    ));
    let root = fvector_cone_seq(&f, &parse_cone_seq("inf,inf,inf")?);
    let tree = cone_tree(&root, ConeIndex::Finite(5), 3);
    let leaves = tree.leaves().count();
    out.push(Check::new(
        "coned family distinct",
        leaves == 8 && tree.leaf_collisions().is_empty(),
        format!("{leaves} leaves over {root}"),
    ));
    Ok(out)
}

/// Exhaustive minimum over `(n, k, 0, ..., 0)` when `n` is small enough.
fn minimality_check(n: usize, k: usize, p: u64, diagram: &BettiDiagram, search_max_n: usize) -> Result<Option<Check>> {
    if n > search_max_n {
        return Ok(None);
    }
    let mut f = vec![0u64; n];
    f[0] = n as u64;
    if n > 1 {
        f[1] = k as u64;
    }
    let poset = build_poset(n, &FVector::new(f), p, true)?;
    let ok = poset.minimum() == Some(diagram);
    Ok(Some(Check::new(
        format!("n={n} k={k} minimum"),
        ok,
        format!("{} diagrams searched", poset.len()),
    )))
}

pub fn path(n: usize, p: u64, search_max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..n {
        let c = minimal_nk_complex(n, k)?;
        let b = betti_via_hochster(&c, p, None)?;
        if k > 0 {
            out.push(Check::new(
                format!("n={n} k={k} 2-linear"),
                is_linear(&b, 2),
                b.render_macaulay2(),
            ));
        }
        out.extend(minimality_check(n, k, p, &b, search_max_n)?);
    }
    Ok(out)
}

pub fn cycle(n: usize, p: u64, search_max_n: usize) -> Result<Vec<Check>> {
    let c = cycle_complex(n)?;
    let b = betti_via_hochster(&c, p, None)?;
    let mut out = vec![Check::new(
        format!("n={n} cycle support"),
        cycle_support_ok(&b, n),
        b.render_macaulay2(),
    )];
    out.extend(minimality_check(n, n, p, &b, search_max_n)?);
    Ok(out)
}

/// Random coning checks: the `j`-cone keeps `β_{i,j'}` for `j' <= j + 1`,
/// the full cone keeps everything, and the 0-cone matches its closed form.
pub fn coning(samples: usize, seed: u64, max_n: usize, chars: &[u64]) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for s in 0..samples {
        let c = random_small_complex(&mut rng, 1, max_n);
        for &p in chars {
            let base = betti_via_hochster(&c, p, None)?;
            for j in 0..=6 {
                let coned = betti_via_hochster(&cone_j(&c, ConeIndex::Finite(j))?, p, None)?;
                checked += 1;
                if !coned.agrees_through_degree(&base, j + 1) {
                    failures.push(format!("sample {s}, p={p}, j={j}"));
                }
            }
            let full = betti_via_hochster(&cone_inf(&c)?, p, None)?;
            let zero = betti_via_hochster(&cone_j(&c, ConeIndex::Finite(0))?, p, None)?;
            checked += 2;
            if full != base.with_n(c.n() + 1) {
                failures.push(format!("sample {s}, p={p}, full cone"));
            }
            if zero != betti_of_zero_cone(&base) {
                failures.push(format!("sample {s}, p={p}, 0-cone closed form"));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{checked} comparisons over {samples} complexes, seed {seed}")
    } else {
        failures.join("; ")
    };
    Ok(vec![Check::new("coning", failures.is_empty(), detail)])
}
