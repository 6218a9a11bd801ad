#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polysym::monomial_rules::{
    brick_coefficient, enumerate_etbt, enumerate_htbt, m_times_p, m_times_sequence,
};
use polysym::partition::{enumerate_partitions, part};
use polysym::power_rules::{
    block_in_p, enumerate_icrht, enumerate_icrpt, p_times_sequence, tableau_coefficient, RowChoices,
};
use polysym::rational::{frac, int, parse_rational};
use polysym::schur_rules::{
    enumerate_tprt, enumerate_trht, s_times_p_block, s_times_sequence, EVariant,
};
use polysym::shapes::{
    add_polyribbons, add_ribbons, dual_polyribbon_decompose, polyribbon_decompose, SkewShape,
};
use polysym::sym::{horizontal_strips, kostka, mn_multiply, multiply_m_by, ClassicalBasis};
use polysym::types::{blocks, enumerate_types, ty};
use polysym::{
    Basis, BlockSequence, Partition, PolyExpr, PolyMatrix, Rational, SplitType, SymExpr,
};
use serde::Deserialize;

pub type Check = std::result::Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn same<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Check {
    ensure(got == want, || {
        format!("{what}: got {got:?}, want {want:?}")
    })
}

pub fn expr(text: &str) -> PolyExpr {
    text.parse().expect("valid expression literal")
}

// ---------------------------------------------------------------- golden data

#[derive(Deserialize)]
pub struct Fixture {
    pub weight: usize,
    pub matrices: Vec<FixtureMatrix>,
}

#[derive(Deserialize)]
pub struct FixtureMatrix {
    pub from: Basis,
    pub to: Basis,
    #[serde(deserialize_with = "type_strings")]
    pub labels: Vec<SplitType>,
    pub rows: Vec<Vec<String>>,
}

fn type_strings<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<SplitType>, D::Error> {
    let raw = Vec::<String>::deserialize(d)?;
    raw.iter()
        .map(|s| s.parse().map_err(serde::de::Error::custom))
        .collect()
}

pub fn fixture() -> Fixture {
    let text = include_str!("../data/weight4.json");
    serde_json::from_str(text).expect("fixture parses")
}

/// Every entry of `m` against the fixture, matched by label.
pub fn compare_with_fixture(m: &PolyMatrix, want: &FixtureMatrix) -> Vec<String> {
    let mut out = Vec::new();
    if m.size() != want.labels.len() {
        out.push(format!("size {} vs {}", m.size(), want.labels.len()));
        return out;
    }
    for (i, row) in want.labels.iter().enumerate() {
        for (j, col) in want.labels.iter().enumerate() {
            let expected = parse_rational(&want.rows[i][j]).expect("fixture entry");
            match m.get(row, col) {
                Some(v) if *v == expected => {}
                got => out.push(format!("({row}, {col}): got {got:?}, want {expected}")),
            }
        }
    }
    out
}

// ------------------------------------------------------------ worked examples

pub fn slinky_product() -> Check {
    let s32 = SymExpr::basis_element(ClassicalBasis::S, part(&[3, 2]));
    let got = mn_multiply(&s32, 4).map_err(|e| e.to_string())?;
    let want = SymExpr::from_terms(
        ClassicalBasis::S,
        [
            (part(&[7, 2]), int(1)),
            (part(&[5, 4]), int(-1)),
            (part(&[3, 3, 3]), int(-1)),
            (part(&[3, 2, 2, 1, 1]), int(1)),
            (part(&[3, 2, 1, 1, 1, 1]), int(-1)),
        ],
    );
    same(got, want, "s_32 p_4")
}

pub fn p_block_on_mixed_type() -> Check {
    let sigma = expr("s[3^2 2^1 1^{4,3}]");
    let first_six = "s[3^2 2^1 1^{10,3}] - s[3^2 2^1 1^{8,5}] + s[3^2 2^1 1^{4,4,4,1}] \
         - s[3^2 2^1 1^{4,3,3,1,1,1}] + s[3^2 2^1 1^{4,3,2,1,1,1,1}] - s[3^2 2^1 1^{4,3,1,1,1,1,1,1}]";
    let got = s_times_p_block(&sigma, 3, 2).map_err(|e| e.to_string())?;
    same(got.len(), 9, "term count")?;
    let want = expr(&format!(
        "{first_six} + 3 s[3^4 2^1 1^{{4,3}}] + 3 s[3^{{2,2}} 2^1 1^{{4,3}}] - 3 s[3^{{2,1,1}} 2^1 1^{{4,3}}]"
    ));
    same(&got, &want, "times P_{3^2}")?;
    let got = s_times_p_block(&sigma, 2, 3).map_err(|e| e.to_string())?;
    let want = expr(&format!(
        "{first_six} + 2 s[3^2 2^4 1^{{4,3}}] - 2 s[3^2 2^{{2,2}} 1^{{4,3}}] + 2 s[3^2 2^{{1,1,1,1}} 1^{{4,3}}]"
    ));
    same(&got, &want, "times P_{2^3}")
}

pub fn eight_ribbon_tableaux() -> Check {
    let delta = blocks("2^1, 1^2");
    let mut total = PolyExpr::zero(Basis::S);
    let mut count = 0;
    for tau in enumerate_types(4) {
        for t in enumerate_trht(&tau, &SplitType::empty(), &delta) {
            count += 1;
            total.add_term(tau.clone(), t.contribution(EVariant::Plus));
        }
    }
    same(count, 8, "tableau count")?;
    let want = expr(
        "s[1^4] - s[1^{3,1}] + 2 s[1^{2,2}] - s[1^{2,1,1}] + s[1^{1,1,1,1}] + 2 s[2^1 1^2] - 2 s[2^1 1^{1,1}]",
    );
    same(total.len(), 7, "term count")?;
    same(&total, &want, "tableau sum")
}

pub fn ribbon_tableau_contribution() -> Check {
    let tau = ty("1^{2,2,2} 2^{2,2,2} 3^{2,2} 4^{3,2}");
    let sigma = ty("1^{2,1} 2^{1,1} 4^{2,2}");
    let delta = blocks("4^2, 3^2, 6^1, 3^1, 4^1");
    let matches: Vec<_> = enumerate_trht(&tau, &sigma, &delta)
        .into_iter()
        .filter(|t| {
            let cells = t.cells();
            cells[&1] == vec![vec![0, 0], vec![0, 4], vec![4, 4]]
                && cells[&2] == vec![vec![0, 1], vec![0, 1], vec![1, 1]]
                && cells[&3] == vec![vec![2, 2], vec![3, 3]]
                && cells[&4] == vec![vec![0, 0, 5], vec![0, 0]]
        })
        .collect();
    same(matches.len(), 1, "pictured tableau")?;
    same(
        matches[0].contribution(EVariant::Plus),
        int(-72),
        "contribution",
    )
}

pub fn polyribbon_coefficient() -> Check {
    let tau = ty("2^2 1^{5,3}");
    let delta = blocks("3^2, 3^2");
    let all = enumerate_tprt(&tau, &SplitType::empty(), &delta, false);
    same(all.len(), 4, "tableau count")?;
    let h =
        s_times_sequence(&PolyExpr::one(Basis::S), Basis::H, &delta).map_err(|e| e.to_string())?;
    same(h.coeff(&tau), int(-4), "coefficient")
}

pub fn block_expansions_in_p() -> Check {
    let cases = [
        (Basis::P, 2, 3, "p[1^6] + 2 p[2^3]"),
        (Basis::P, 3, 2, "p[1^6] + 3 p[3^2]"),
        (Basis::H, 2, 3, "1/2 p[1^6] + 1/2 p[1^{3,3}] + p[2^3]"),
        (
            Basis::H,
            3,
            2,
            "1/3 p[1^6] + 1/2 p[1^{4,2}] + 1/6 p[1^{2,2,2}] + p[2^2 1^2] + p[3^2]",
        ),
        (Basis::EPlus, 2, 3, "-1/2 p[1^6] + 1/2 p[1^{3,3}] + p[2^3]"),
        (
            Basis::EPlus,
            3,
            2,
            "1/3 p[1^6] - 1/2 p[1^{4,2}] + 1/6 p[1^{2,2,2}] + p[2^2 1^2] + p[3^2]",
        ),
        (Basis::E, 2, 3, "-1/2 p[1^6] + 1/2 p[1^{3,3}] - p[2^3]"),
        (
            Basis::E,
            3,
            2,
            "-1/3 p[1^6] + 1/2 p[1^{4,2}] - 1/6 p[1^{2,2,2}] + p[2^2 1^2] - p[3^2]",
        ),
    ];
    for (basis, d, r, want) in cases {
        let got = block_in_p(basis, d, r).map_err(|e| e.to_string())?;
        same(got, expr(want), &format!("{basis} of {d}^{r}"))?;
    }
    Ok(())
}

pub fn z_tensor_value() -> Check {
    same(
        ty("3^{2,2} 2^{3,2,2} 1^{4,2}").z_tensor(),
        BigInt::from(1536),
        "z",
    )
}

pub fn constant_row_tableaux_listing() -> Check {
    let sigma = ty("2^2 1^3");
    let delta = blocks("2^2, 4^1, 2^2");
    let mut found = Vec::new();
    let mut total = PolyExpr::zero(Basis::PT);
    for tau in enumerate_types(sigma.weight() + delta.weight()) {
        for t in enumerate_icrpt(&tau, &sigma, &delta) {
            total.add_term(tau.clone(), t.weight());
            let RowChoices::Divisors(ks) = &t.choices else {
                return Err("expected divisor choices".into());
            };
            found.push((ks.clone(), t.weight()));
        }
    }
    found.sort();
    let want: Vec<(Vec<usize>, Rational)> = [
        ([1, 1, 1], 1),
        ([1, 1, 2], 2),
        ([1, 2, 1], 2),
        ([1, 2, 2], 4),
        ([1, 4, 1], 4),
        ([1, 4, 2], 8),
        ([2, 1, 1], 2),
        ([2, 1, 2], 4),
        ([2, 2, 1], 4),
        ([2, 2, 2], 8),
        ([2, 4, 1], 8),
        ([2, 4, 2], 16),
    ]
    .into_iter()
    .map(|(k, w)| (k.to_vec(), int(w)))
    .collect();
    same(&found, &want, "tabloids and weights")?;
    let expansion = expr(
        "p[1^{4,4,4,3} 2^2] + 6 p[1^{4,4,3} 2^{2,2}] + 12 p[1^{4,3} 2^{2,2,2}] + 8 p[1^3 2^{2,2,2,2}] \
         + 4 p[1^{4,4,3} 2^2 4^1] + 16 p[1^{4,3} 2^{2,2} 4^1] + 16 p[1^3 2^{2,2,2} 4^1]",
    );
    same(&total, &expansion, "expansion")?;
    let start = PolyExpr::basis_element(Basis::PT, sigma);
    same(
        p_times_sequence(&start, Basis::P, &delta).map_err(|e| e.to_string())?,
        expansion,
        "block rule",
    )
}

pub fn constant_row_coefficients() -> Check {
    let tau = ty("3^{2,1} 2^{2,2,1} 1^4");
    let sigma = ty("9^1 6^1 4^1 2^2");
    let all = enumerate_icrht(
        &tau,
        &SplitType::empty(),
        &BlockSequence::new(sigma.blocks()),
    );
    same(all.len(), 6, "object count")?;
    same(tableau_coefficient(&all, Basis::H), frac(3, 8), "H")?;
    same(tableau_coefficient(&all, Basis::E), frac(3, 8), "E")?;
    same(tableau_coefficient(&all, Basis::EPlus), frac(-1, 8), "E+")
}

pub fn power_brick_expansion() -> Check {
    let got =
        m_times_p(&PolyExpr::one(Basis::M), &blocks("2^2, 2^2")).map_err(|e| e.to_string())?;
    same(
        got,
        expr("2 m[1^{4,4}] + m[1^8] + 4 m[2^2 1^4] + 8 m[2^{2,2}] + 4 m[2^4]"),
        "P_{2^2 2^2}",
    )
}

pub fn classical_brick_counts() -> Check {
    let err = |e: polysym::Error| e.to_string();
    let p = multiply_m_by(&part(&[3, 3, 1]), &[2, 4, 2], ClassicalBasis::P).map_err(err)?;
    same(p.coeff(&part(&[5, 4, 3, 3])), int(6), "p-bricks")?;
    let h = multiply_m_by(&part(&[2, 1]), &[2, 1, 2], ClassicalBasis::H).map_err(err)?;
    same(h.coeff(&part(&[4, 4])), int(10), "h-bricks")?;
    let h221 = polysym::sym::basis_in_m(ClassicalBasis::H, &part(&[2, 2, 1]));
    same(h221.coeff(&part(&[3, 2])), int(5), "h_221")?;
    let e = multiply_m_by(&part(&[2, 1]), &[2, 1, 2], ClassicalBasis::E).map_err(err)?;
    same(e.coeff(&part(&[4, 4])), int(2), "e-bricks")
}

pub fn complete_brick_count() -> Check {
    let tau = ty("3^{2,2} 2^4 1^{3,3,1}");
    let sigma = ty("2^2 1^{2,1}");
    let delta = blocks("8^1, 3^2, 3^2");
    same(enumerate_htbt(&tau, &sigma, &delta).len(), 24, "tabloids")?;
    same(
        brick_coefficient(Basis::H, &tau, &sigma, &delta).unwrap(),
        int(24),
        "coefficient",
    )
}

pub fn elementary_brick_coefficients() -> Check {
    let sigma = ty("1^{2,1}");
    let tau = ty("2^{2,1,1} 1^{5,2,1}");
    let delta = blocks("5^1, 3^2, 2^1");
    same(enumerate_etbt(&tau, &sigma, &delta).len(), 7, "tabloids")?;
    same(
        brick_coefficient(Basis::EPlus, &tau, &sigma, &delta).unwrap(),
        int(7),
        "E+",
    )?;
    same(
        brick_coefficient(Basis::E, &tau, &sigma, &delta).unwrap(),
        int(-7),
        "E",
    )
}

pub type Named = (&'static str, fn() -> Check);

pub fn worked_examples() -> Vec<Named> {
    vec![
        ("s_32 times p_4", slinky_product),
        ("P_{3^2} and P_{2^3} on a mixed type", p_block_on_mixed_type),
        ("eight ribbon tableaux", eight_ribbon_tableaux),
        ("ribbon tableau worth -72", ribbon_tableau_contribution),
        ("polyribbon coefficient -4", polyribbon_coefficient),
        ("block expansions in p-tensor", block_expansions_in_p),
        ("z-tensor 1536", z_tensor_value),
        (
            "twelve constant-row tableaux",
            constant_row_tableaux_listing,
        ),
        (
            "constant-row coefficients 3/8, 3/8, -1/8",
            constant_row_coefficients,
        ),
        ("P_{2^2 2^2} in m-tensor", power_brick_expansion),
        ("classical brick counts 6, 10, 5, 2", classical_brick_counts),
        ("24 complete brick tabloids", complete_brick_count),
        (
            "elementary brick coefficients 7 and -7",
            elementary_brick_coefficients,
        ),
    ]
}

// ----------------------------------------------------------------- properties

fn decompose(shape: &SkewShape, r: usize, dual: bool) -> Option<polysym::shapes::Decomposition> {
    if dual {
        dual_polyribbon_decompose(shape, r)
    } else {
        polyribbon_decompose(shape, r)
    }
}

/// Every polyribbon added to `mu` decomposes back to the same chain length and sign.
pub fn polyribbon_round_trip(mu: &Partition, r: usize, n: usize, dual: bool) -> Check {
    for (lambda, sign) in add_polyribbons(mu, r, n, dual) {
        let shape = SkewShape::new(lambda.clone(), mu.clone()).map_err(|e| e.to_string())?;
        let d = decompose(&shape, r, dual)
            .ok_or_else(|| format!("{lambda}/{mu} does not decompose"))?;
        same(d.n, n, "ribbon count")?;
        same(d.sign, sign, "sign")?;
        same(d.chain.first(), Some(mu), "chain start")?;
        same(d.chain.last(), Some(&lambda), "chain end")?;
    }
    Ok(())
}

/// A decomposable `λ/μ` shows up among the shapes grown from `μ`.
pub fn decomposition_is_reachable(
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    dual: bool,
) -> Check {
    let Ok(shape) = SkewShape::new(lambda.clone(), mu.clone()) else {
        return Ok(());
    };
    if let Some(d) = decompose(&shape, r, dual) {
        let grown = add_polyribbons(mu, r, d.n, dual);
        ensure(grown.contains(&(lambda.clone(), d.sign)), || {
            format!("{lambda}/{mu} decomposes but is not grown")
        })?;
    }
    Ok(())
}

/// Single-cell polyribbons are horizontal strips, and their duals vertical strips.
pub fn unit_ribbon_specialization(mu: &Partition, n: usize) -> Check {
    let strips: Vec<(Partition, i32)> = horizontal_strips(mu, n)
        .into_iter()
        .map(|p| (p, 1))
        .collect();
    let mut got = add_polyribbons(mu, 1, n, false);
    let mut want = strips;
    got.sort();
    want.sort();
    same(&got, &want, "horizontal strips")?;
    let mut dual: Vec<_> = add_polyribbons(mu, 1, n, true);
    let mut vertical: Vec<(Partition, i32)> = horizontal_strips(&mu.conjugate(), n)
        .into_iter()
        .map(|p| (p.conjugate(), 1))
        .collect();
    dual.sort();
    vertical.sort();
    same(&dual, &vertical, "vertical strips")
}

/// One polyribbon is one ribbon.
pub fn single_ribbon_specialization(mu: &Partition, r: usize) -> Check {
    let mut ribbons: Vec<(Partition, i32)> = add_ribbons(mu, r)
        .into_iter()
        .map(|s| (s.result, s.sign))
        .collect();
    ribbons.sort();
    for dual in [false, true] {
        let mut got = add_polyribbons(mu, r, 1, dual);
        got.sort();
        same(&got, &ribbons, "single ribbon")?;
    }
    Ok(())
}

/// Dual polyribbons on `μ` are the conjugates of polyribbons on `μ'`.
pub fn dual_conjugate_correspondence(mu: &Partition, r: usize, n: usize) -> Check {
    let mut dual = add_polyribbons(mu, r, n, true);
    let flip = if (n * (r - 1)).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut conj: Vec<(Partition, i32)> = add_polyribbons(&mu.conjugate(), r, n, false)
        .into_iter()
        .map(|(p, s)| (p.conjugate(), s * flip))
        .collect();
    dual.sort();
    conj.sort();
    same(&dual, &conj, "conjugate correspondence")
}

/// Product coefficients do not depend on the order of the blocks.
pub fn order_invariance(sigma: &SplitType, delta: &BlockSequence, perms: &[Vec<usize>]) -> Check {
    let err = |e: polysym::Error| e.to_string();
    let s0 = PolyExpr::basis_element(Basis::S, sigma.clone());
    let p0 = PolyExpr::basis_element(Basis::PT, sigma.clone());
    let m0 = PolyExpr::basis_element(Basis::M, sigma.clone());
    for basis in Basis::NON_PURE {
        let s_ref = s_times_sequence(&s0, basis, delta).map_err(err)?;
        let p_ref = p_times_sequence(&p0, basis, delta).map_err(err)?;
        let m_ref = m_times_sequence(&m0, basis, delta).map_err(err)?;
        for perm in perms {
            let shuffled = BlockSequence::new(perm.iter().map(|&i| delta.blocks()[i]).collect());
            let what = format!("{basis} with {shuffled}");
            same(
                &s_times_sequence(&s0, basis, &shuffled).map_err(err)?,
                &s_ref,
                &what,
            )?;
            same(
                &p_times_sequence(&p0, basis, &shuffled).map_err(err)?,
                &p_ref,
                &what,
            )?;
            same(
                &m_times_sequence(&m0, basis, &shuffled).map_err(err)?,
                &m_ref,
                &what,
            )?;
        }
    }
    Ok(())
}

/// The column of `H_{1^{1,…,1}}` in `s⊗` counts standard tableaux.
pub fn standard_tableaux_column(n: usize) -> Check {
    let m = polysym::schur_rules::transition_to_s(Basis::H, n).map_err(|e| e.to_string())?;
    let ones = Partition::from_unsorted(vec![1; n]);
    let col = SplitType::degree_one(ones.clone());
    for row in m.labels() {
        let want = if row.max_degree() <= 1 {
            Rational::from_integer(kostka(row.restriction(1), &ones))
        } else {
            Rational::zero()
        };
        same(m.get(row, &col).cloned(), Some(want), &format!("row {row}"))?;
    }
    Ok(())
}

/// Type counts against `∏_{k ≥ 1} (1 - x^k)^{-d(k)}`, `d(k)` the number of divisors.
pub fn type_counts(max: usize) -> Check {
    let mut series = vec![BigInt::zero(); max + 1];
    series[0] = BigInt::one();
    for k in 1..=max {
        let divisors = (1..=k).filter(|d| k % d == 0).count();
        for _ in 0..divisors {
            for i in k..=max {
                let add = series[i - k].clone();
                series[i] += add;
            }
        }
    }
    for (n, want) in series.iter().enumerate() {
        let types = enumerate_types(n);
        same(
            BigInt::from(types.len()),
            want.clone(),
            &format!("types of weight {n}"),
        )?;
        let mut sorted = types.clone();
        sorted.sort();
        sorted.dedup();
        same(sorted.len(), types.len(), "distinct")?;
        ensure(types.iter().all(|t| t.weight() == n), || "weights".into())?;
    }
    Ok(())
}

pub fn partitions_up_to(area: usize) -> Vec<Partition> {
    (0..=area).flat_map(enumerate_partitions).collect()
}
