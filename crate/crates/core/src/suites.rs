//! Verification suites assembling the module invariants into [`Report`]s.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, Sergeev};
use crate::fusion::{
    fusion_constant, fusion_evaluate_in, inversion_identity, simultaneous_evaluate,
    telescoping_identity, verify_projection_identity, verify_resolvent_identities,
};
use crate::idempotents::{
    clifford_idempotents, idempotent_in, left_ideal_dim_by_elimination, left_ideal_dim_by_trace,
    verify_flip_relations, verify_idempotent_system_with, verify_intertwiner_relations,
    verify_intertwining_property, verify_phi_word_independence, verify_spectral_identity,
    zeta_basis_rank, IdempotentTree, Intertwiners,
};
use crate::perm::Permutation;
use crate::repmodules::{
    commutant_dimension, epsilon_sign, normalization_b, normalization_b_from_uhat,
    seminormal_module, spin_module, spin_theta_action, uhat_module, verify_module_relations,
    verify_spin_in_uhat, verify_xi_map, Representation, UhatVectors,
};
use crate::report::Report;
use crate::scalar::{sqrt_rational, Rational, Scalar};
use crate::tableaux::{
    all_barred_tableaux, branch_up, enumerate_standard_tableaux, enumerate_strict_partitions,
    row_tableau, ShiftedTableau, StrictPartition,
};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Scalars,
    Algebra,
    Dimensions,
    Idempotents,
    Zeta,
    Modules,
    Spin,
    Fusion,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Scalars,
        Suite::Algebra,
        Suite::Dimensions,
        Suite::Idempotents,
        Suite::Zeta,
        Suite::Modules,
        Suite::Spin,
        Suite::Fusion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Scalars => "scalars",
            Suite::Algebra => "algebra",
            Suite::Dimensions => "dimensions",
            Suite::Idempotents => "idempotents",
            Suite::Zeta => "zeta",
            Suite::Modules => "modules",
            Suite::Spin => "spin",
            Suite::Fusion => "fusion",
        }
    }

    /// Largest `n` run without an explicit override.
    pub fn default_bound(self) -> usize {
        match self {
            Suite::Zeta | Suite::Fusion => 4,
            Suite::Dimensions => 10,
            _ => 5,
        }
    }

    pub fn run(self, max_n: usize) -> Result<Report> {
        match self {
            Suite::Scalars => Ok(suite_scalars()),
            Suite::Algebra => suite_algebra(max_n),
            Suite::Dimensions => suite_dimensions(max_n),
            Suite::Idempotents => suite_idempotents(max_n),
            Suite::Zeta => suite_zeta(max_n),
            Suite::Modules => suite_modules(max_n),
            Suite::Spin => suite_spin(max_n),
            Suite::Fusion => suite_fusion(max_n),
        }
    }
}

impl core::str::FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| crate::Error::Invalid(format!("unknown suite {:?}", s)))
    }
}

fn sample_scalars() -> Vec<Scalar> {
    let radicands = [1u64, 2, 3, 5, 6, 7, 30, 42];
    let mut out = Vec::new();
    for (k, &d) in radicands.iter().enumerate() {
        let k = k as i64;
        let q = Scalar::ratio(2 * k - 5, k + 1).expect("nonzero");
        out.push(&q * &Scalar::sqrt_int(d));
        out.push(
            &Scalar::sqrt_int(d) + &(&Scalar::i() * &Scalar::ratio(1, k + 2).expect("nonzero")),
        );
    }
    out.push(&Scalar::sqrt_int(2) + &Scalar::sqrt_int(3));
    out.push(&(&Scalar::sqrt_int(5) - &Scalar::sqrt_int(7)) * &Scalar::i());
    out
}

/// Field axioms on a fixed sample, inverses and square roots.
pub fn suite_scalars() -> Report {
    let mut report = Report::new();
    let xs = sample_scalars();
    let mut comm = true;
    let mut assoc = true;
    let mut dist = true;
    for a in &xs {
        for b in &xs {
            comm &= a * b == b * a && a + b == b + a;
            for c in xs.iter().step_by(3) {
                assoc &= &(a * b) * c == a * &(b * c);
                dist &= a * &(b + c) == &(a * b) + &(a * c);
            }
        }
    }
    report.record("commutativity", comm);
    report.record("associativity", assoc);
    report.record("distributivity", dist);
    let inv = xs
        .iter()
        .filter(|x| !x.is_zero())
        .all(|x| x.inverse().is_ok_and(|y| (x * &y).is_one()));
    report.record("x * x^-1 = 1", inv);
    let mut roots = true;
    for (p, q) in [(2i64, 3i64), (5, 7), (18, 1), (1, 12), (0, 1), (49, 4)] {
        let r = Rational::new(p, q).expect("nonzero");
        roots &= sqrt_rational(&r).is_ok_and(|s| s.square() == Scalar::from_rational(r.clone()));
    }
    report.record("sqrt(q)^2 = q", roots);
    report.record(
        "sqrt6 = sqrt2 sqrt3",
        Scalar::sqrt_int(6) == &Scalar::sqrt_int(2) * &Scalar::sqrt_int(3),
    );
    report.record(
        "sqrt of a negative rational is rejected",
        sqrt_rational(&Rational::from_integer(-2)).is_err(),
    );
    report
}

fn all_equal(cases: impl IntoIterator<Item = (String, bool)>) -> (bool, Option<String>) {
    for (name, ok) in cases {
        if !ok {
            return (false, Some(name));
        }
    }
    (true, None)
}

/// The defining relations of `S_n`, the Jucys-Murphy relations and the anti-involution.
pub fn sergeev_relations(g: &Sergeev) -> Result<Report> {
    let n = g.n();
    let mut report = Report::new();
    let one = g.one();
    let s: Vec<AlgebraElement> = (1..n).map(|a| g.gen_s(a)).collect::<Result<_>>()?;
    let c: Vec<AlgebraElement> = (1..=n).map(|a| g.gen_c(a)).collect::<Result<_>>()?;
    let t: Vec<AlgebraElement> = (1..n).map(|a| g.gen_t(a)).collect::<Result<_>>()?;
    let x: Vec<AlgebraElement> = (1..=n).map(|a| g.jm_x(a)).collect::<Result<_>>()?;

    let mut cases = Vec::new();
    for a in 1..n {
        cases.push((format!("s{a}^2"), &s[a - 1] * &s[a - 1] == one));
        cases.push((format!("t{a}^2"), &t[a - 1] * &t[a - 1] == one));
        for b in a + 1..n {
            let (p, q) = (&s[a - 1], &s[b - 1]);
            let (tp, tq) = (&t[a - 1], &t[b - 1]);
            if b == a + 1 {
                cases.push((format!("s braid {a}"), &(p * q) * p == &(q * p) * q));
                cases.push((format!("t braid {a}"), &(tp * tq) * tp == &(tq * tp) * tq));
            } else {
                cases.push((format!("s{a} s{b} commute"), p * q == q * p));
                cases.push((format!("t{a} t{b} anticommute"), tp * tq == -&(tq * tp)));
            }
        }
    }
    let (ok, detail) = all_equal(cases);
    report.check_with(format!("n={}: symmetric and spin relations", n), ok, || {
        detail.unwrap_or_default()
    });

    let mut cases = Vec::new();
    for a in 1..=n {
        cases.push((format!("c{a}^2"), &c[a - 1] * &c[a - 1] == -&one));
        for b in a + 1..=n {
            cases.push((
                format!("c{a} c{b}"),
                &c[a - 1] * &c[b - 1] == -&(&c[b - 1] * &c[a - 1]),
            ));
        }
        for b in 1..n {
            let target = if a == b {
                b + 1
            } else if a == b + 1 {
                b
            } else {
                a
            };
            cases.push((
                format!("s{b} c{a}"),
                &s[b - 1] * &c[a - 1] == &c[target - 1] * &s[b - 1],
            ));
            cases.push((
                format!("t{b} c{a}"),
                &t[b - 1] * &c[a - 1] == -&(&c[a - 1] * &t[b - 1]),
            ));
        }
    }
    let (ok, detail) = all_equal(cases);
    report.check_with(format!("n={}: Clifford relations", n), ok, || {
        detail.unwrap_or_default()
    });

    let mut cases = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            cases.push((
                format!("x{a} x{b}"),
                &x[a - 1] * &x[b - 1] == &x[b - 1] * &x[a - 1],
            ));
        }
        for b in 1..=n {
            let xc = &x[a - 1] * &c[b - 1];
            let cx = &c[b - 1] * &x[a - 1];
            cases.push((
                format!("x{a} c{b}"),
                if a == b { xc == -&cx } else { xc == cx },
            ));
        }
    }
    let (ok, detail) = all_equal(cases);
    report.check_with(format!("n={}: Jucys-Murphy relations", n), ok, || {
        detail.unwrap_or_default()
    });

    let mut cases = Vec::new();
    for a in 1..n {
        cases.push((format!("star s{a}"), s[a - 1].star() == s[a - 1]));
        cases.push((format!("star t{a}"), t[a - 1].star() == -&t[a - 1]));
    }
    for a in 1..=n {
        cases.push((format!("star c{a}"), c[a - 1].star() == c[a - 1]));
        cases.push((format!("star x{a}"), x[a - 1].star() == x[a - 1]));
    }
    for p in s.iter().chain(&c).chain(&t) {
        for q in s.iter().chain(&c).chain(&t) {
            cases.push((
                format!("star({p} * {q})"),
                (p * q).star() == &q.star() * &p.star(),
            ));
        }
    }
    let (ok, detail) = all_equal(cases);
    report.check_with(format!("n={}: anti-involution star", n), ok, || {
        detail.unwrap_or_default()
    });
    Ok(report)
}

pub fn suite_algebra(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=max_n {
        report.extend(sergeev_relations(&Sergeev::new(n)?)?);
    }
    let g = Sergeev::new(3.min(max_n.max(1)))?;
    if g.n() == 3 {
        let x2 = g.jm_x(2)?;
        let x3 = g.jm_x(3)?;
        report.record("x_2^2 = 2", &x2 * &x2 == g.scalar(Scalar::from_int(2)));
        report.record(
            "x_3^3 = 6 x_3",
            &(&x3 * &x3) * &x3 == x3.scale(&Scalar::from_int(6)),
        );
    }
    Ok(report)
}

/// `g_lambda` by enumeration against the hook-type formula, and `sum 2^{n-l} g^2 = n!`.
pub fn suite_dimensions(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=max_n {
        let mut total = 0u128;
        let mut agree = true;
        let mut detail = String::new();
        for shape in enumerate_strict_partitions(n) {
            let counted = enumerate_standard_tableaux(&shape, false).len() as u64;
            let formula = shape.g_lambda_formula()?;
            if counted != formula && agree {
                agree = false;
                detail = format!("{}: counted {} formula {}", shape, counted, formula);
            }
            total += (1u128 << (n - shape.len())) * (counted as u128) * (counted as u128);
        }
        report.check_with(
            format!("n={}: g_lambda by enumeration = formula", n),
            agree,
            || detail.clone(),
        );
        let fact: u128 = (1..=n as u128).product();
        report.check_with(
            format!("n={}: sum 2^(n-l) g^2 = n!", n),
            total == fact,
            || format!("{} != {}", total, fact),
        );
    }
    Ok(report)
}

fn tab(s: &str) -> Result<ShiftedTableau> {
    s.parse()
}

/// The six idempotents of `S_3` as explicit polynomials in `x_2`, `x_3`.
pub fn example_three_box_idempotents() -> Result<Report> {
    let g = Sergeev::new(3)?;
    let x2 = g.jm_x(2)?;
    let x3 = g.jm_x(3)?;
    let r2 = Scalar::sqrt_int(2);
    let r6 = Scalar::sqrt_int(6);
    let inv = |s: Scalar| s.inverse();
    let first = |sign: i64| -> Result<AlgebraElement> {
        Ok((&g.scalar(r2.clone()) + &x2.scale(&Scalar::from_int(sign)))
            .scale(&inv(&Scalar::from_int(2) * &r2)?))
    };
    let second = |sign: i64| -> Result<AlgebraElement> {
        let shifted = &x3 + &g.scalar(r6.scale_rational(&Rational::from_integer(sign)));
        Ok((&x3 * &shifted).scale(&Scalar::ratio(1, 12)?))
    };
    let middle = (&g.scalar(Scalar::from_int(6)) - &(&x3 * &x3)).scale(&Scalar::ratio(1, 6)?);
    let expected = [
        ("1,2,3", &first(1)? * &second(1)?),
        ("1,2,3b", &first(1)? * &second(-1)?),
        ("1,2b,3", &first(-1)? * &second(1)?),
        ("1,2b,3b", &first(-1)? * &second(-1)?),
        ("1,2/3", &first(1)? * &middle),
        ("1,2b/3", &first(-1)? * &middle),
    ];
    let mut report = Report::new();
    report.record(
        "six barred tableaux for n = 3",
        all_barred_tableaux(3).len() == 6,
    );
    for (text, want) in expected {
        let got = idempotent_in(&g, &tab(text)?)?;
        report.check_with(format!("e_U for {}", text), got == want, || {
            format!("{}", got)
        });
    }
    Ok(report)
}

/// For `lambda = (n)`: the simultaneous evaluation and the closed product formula.
pub fn example_one_row_fusion(n: usize) -> Result<Report> {
    let g = Sergeev::new(n)?;
    let shape = StrictPartition::new(alloc::vec![n])?;
    let u = row_tableau(&shape, &[])?;
    let e = idempotent_in(&g, &u)?;
    let mut report = Report::new();
    let value = simultaneous_evaluate(&g, &u.kappa_vector())?;
    let fact = Scalar::from_int((1..=n as i64).product());
    report.check_with(
        format!("n={}: Phi(0, sqrt2, ..., sqrt(n(n-1))) = n! e_U", n),
        value == e.scale(&fact),
        || String::from("mismatch"),
    );
    let mut closed = g.one();
    if n >= 2 {
        let r2 = Scalar::sqrt_int(2);
        closed =
            (&g.scalar(r2.clone()) + &g.jm_x(2)?).scale(&(&Scalar::from_int(2) * &r2).inverse()?);
    }
    for k in 3..=n {
        let xk = g.jm_x(k)?;
        let kk = (k * (k - 1)) as i64;
        let f = (&xk * &(&xk + &g.scalar(Scalar::sqrt_int(kk as u64))))
            .scale(&Scalar::ratio(1, 2 * kk)?);
        closed = &closed * &f;
    }
    report.check_with(
        format!("n={}: closed product formula for e_U", n),
        closed == e,
        || String::from("mismatch"),
    );
    Ok(report)
}

pub fn suite_idempotents(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    if max_n >= 3 {
        report.merge("example n=3", example_three_box_idempotents()?);
    }
    for n in 1..=max_n {
        let tree = IdempotentTree::new(n)?;
        report.extend(verify_idempotent_system_with(&tree)?);
        report.record(
            format!("n={}: x_n = sum kappa_n(U) e_U", n),
            verify_spectral_identity(&tree)?,
        );
        report.record(
            format!("n={}: e_U c_a = c_a e_U' for bar flips", n),
            verify_flip_relations(&tree)?,
        );
        if n <= 4 {
            report.extend(refined_ideal_dimensions(&tree, n <= 3)?);
        }
    }
    Ok(report)
}

/// `dim S_n E_r e_U = 2^{n - floor(l/2)} g_lambda` for every `U` and `r`.
pub fn refined_ideal_dimensions(tree: &IdempotentTree, eliminate: bool) -> Result<Report> {
    let n = tree.n();
    let g = tree.sergeev();
    let mut ok = true;
    let mut detail = String::new();
    for (u, eu) in tree.level(n) {
        let want = u.shape().g_lambda_formula()? << (n - u.shape().len() / 2);
        for (r, ce) in clifford_idempotents(g, u).iter().enumerate() {
            let e = ce.element.multiply(eu)?;
            let dim = left_ideal_dim_by_trace(&e)?;
            let mut good = dim == want && &e * &e == e;
            if eliminate {
                good &= left_ideal_dim_by_elimination(&e) as u64 == want;
            }
            if !good && ok {
                ok = false;
                detail = format!("U={}, r={}: dim {} want {}", u, r + 1, dim, want);
            }
        }
    }
    let mut report = Report::new();
    report.check_with(
        format!(
            "n={}: refined idempotent ideals have dimension dim U^lambda",
            n
        ),
        ok,
        || detail,
    );
    Ok(report)
}

pub fn suite_zeta(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for n in 2..=max_n {
        let tree = IdempotentTree::new(n)?;
        let phis = Intertwiners::new(tree.sergeev())?;
        report.extend(verify_intertwiner_relations(&phis)?);
        report.extend(verify_intertwining_property(&tree, &phis)?);
        report.record(
            format!("n={}: phi_w independent of the reduced word", n),
            verify_phi_word_independence(&phis)?,
        );
        if n == 3 {
            let ok = Permutation::all(3)
                .iter()
                .map(|w| Ok(phis.phi_w(w)?.star() == phis.phi_star_w(w)?))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|b| b);
            report.record("n=3: star(phi_w) = phi*_w for w in Sym_3", ok);
        }
        let (rank, count) = zeta_basis_rank(n)?;
        let full = (1usize << n) * (1..=n).product::<usize>();
        report.check_with(
            format!("n={}: rank of c^eps zeta = 2^n n! = {}", n, full),
            rank == full,
            || format!("rank {} from {} vectors", rank, count),
        );
    }
    Ok(report)
}

pub fn suite_modules(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=max_n {
        for shape in enumerate_strict_partitions(n) {
            report.merge(
                &format!("J^{} n={}", shape, n),
                verify_module_relations(&seminormal_module(&shape)?)?,
            );
            if n <= 4 {
                report.merge(
                    &format!("Uhat^{} n={}", shape, n),
                    verify_module_relations(&uhat_module(&shape)?)?,
                );
                report.extend(normalization_checks(&shape)?);
                let rep = seminormal_module(&shape)?;
                let c = commutant_dimension(rep.dim(), &sergeev_matrices(&rep));
                let want = if shape.len() % 2 == 1 { 2 } else { 1 };
                report.check_with(
                    format!(
                        "J^{}: commutant dimension {} (l = {})",
                        shape,
                        want,
                        shape.len()
                    ),
                    c == want,
                    || format!("got {}", c),
                );
            }
        }
    }
    if max_n >= 3 {
        let tree = IdempotentTree::new(3)?;
        let phis = Intertwiners::new(tree.sergeev())?;
        for shape in enumerate_strict_partitions(3) {
            let r = verify_xi_map(&tree, &phis, &shape)?;
            report.merge(&format!("xi map J^{}", shape), r);
            let rt = row_tableau(&shape, &[])?;
            let e = clifford_idempotents(&tree.sergeev().clone(), &rt)[0]
                .element
                .multiply(&tree.level(3)[&rt])?;
            let want = seminormal_module(&shape)?.dim() as u64;
            let dim = left_ideal_dim_by_trace(&e)?;
            report.check_with(
                format!("dim S_3 e_R E = dim J^{}", shape),
                dim == want,
                || format!("{} vs {}", dim, want),
            );
        }
    }
    Ok(report)
}

fn sergeev_matrices(rep: &Representation) -> Vec<&crate::linalg::Matrix> {
    rep.generators
        .iter()
        .filter(|g| !g.label.starts_with('x'))
        .map(|g| &g.matrix)
        .collect()
}

/// `b_T` nonzero, equal to the `Uhat` reading, and `b_{s_aT} = b_T (kappa_a^2 - kappa_{a+1}^2) Y_a(T)`.
pub fn normalization_checks(shape: &StrictPartition) -> Result<Report> {
    let uh = UhatVectors::new(shape)?;
    let mut ok = true;
    let mut detail = String::new();
    for t in enumerate_standard_tableaux(shape, false) {
        let b = normalization_b(&t)?;
        let from_matrix = normalization_b_from_uhat(&uh, &t)?;
        if (b.is_zero() || b != from_matrix) && ok {
            ok = false;
            detail = format!("T={}: b={} matrix={}", t, b, from_matrix);
        }
    }
    let mut report = Report::new();
    report.check_with(
        format!("b_T for {} matches phi_d(T) v_R", shape),
        ok,
        || detail,
    );
    Ok(report)
}

/// The explicit `(3,1)` action values.
pub fn example_spin_three_one() -> Result<Report> {
    let mut report = Report::new();
    let g = Sergeev::new(4)?;
    let t = tab("1,2,3/4")?;
    let u = tab("1,2,4/3")?;
    let r3 = Scalar::sqrt_int(3);
    let r6 = Scalar::sqrt_int(6);
    let c = |a: usize| g.gen_c(a);
    let third = Scalar::ratio(1, 3)?;
    let half = Scalar::ratio(1, 2)?;

    let a1 = spin_theta_action(&t, 1)?;
    report.record(
        "t1 theta_T = c2 theta_T",
        a1.diagonal == c(2)? && a1.off_diagonal.is_none(),
    );
    let a2 = spin_theta_action(&t, 2)?;
    let want2 = (&-&c(2)? + &c(3)?.scale(&r3)).scale(&half);
    report.record(
        "t2 theta_T = (-c2 + sqrt3 c3)/2 theta_T",
        a2.diagonal == want2 && a2.off_diagonal.is_none(),
    );
    let a3 = spin_theta_action(&t, 3)?;
    let off3 = a3.off_diagonal.clone();
    report.record(
        "t3 theta_T = (sqrt3/3) c3 theta_T + (sqrt6/3) theta_U",
        a3.diagonal == c(3)?.scale(&(&r3 * &third)) && off3 == Some((u.clone(), &r6 * &third)),
    );
    let b1 = spin_theta_action(&u, 1)?;
    let b2 = spin_theta_action(&u, 2)?;
    let b3 = spin_theta_action(&u, 3)?;
    report.record(
        "t1 theta_U = c2 theta_U",
        b1.diagonal == c(2)? && b1.off_diagonal.is_none(),
    );
    report.record(
        "t2 theta_U = c2 theta_U",
        b2.diagonal == c(2)? && b2.off_diagonal.is_none(),
    );
    report.record(
        "t3 theta_U = (sqrt3/3) c3 theta_U + (sqrt6/3) theta_T",
        b3.diagonal == c(3)?.scale(&(&r3 * &third))
            && b3.off_diagonal == Some((t.clone(), &r6 * &third)),
    );

    let shape = t.shape().clone();
    let rep = spin_module(&shape)?;
    report.record("V^(3,1) is four-dimensional", rep.dim() == 4);
    let find = |tt: &ShiftedTableau, minus: bool| {
        rep.basis
            .iter()
            .position(|b| &b.tableau == tt && b.spin.as_ref().is_some_and(|l| l.minus == [minus]))
    };
    let (Some(tp), Some(tm), Some(up)) = (find(&t, false), find(&t, true), find(&u, false)) else {
        report.fail("basis labels for (3,1)", "missing basis vector");
        return Ok(report);
    };
    let m = rep.generator("t3").expect("t3");
    let mut col_ok = true;
    for row in 0..rep.dim() {
        let want = if row == tm {
            -&(&(&Scalar::i() * &r3) * &third)
        } else if row == up {
            &r6 * &third
        } else {
            Scalar::zero()
        };
        col_ok &= m.get(row, tp) == &want;
    }
    report.record(
        "t3 (1 + i c2 c3) theta_T = -(i sqrt3/3)(c2 + i c3) theta_T + (sqrt6/3)(1 + i c2 c3) theta_U",
        col_ok,
    );
    Ok(report)
}

pub fn suite_spin(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    if max_n >= 4 {
        report.merge("example (3,1)", example_spin_three_one()?);
    }
    for n in 1..=max_n {
        for shape in enumerate_strict_partitions(n) {
            let rep = spin_module(&shape)?;
            report.merge(
                &format!("V^{} n={}", shape, n),
                verify_module_relations(&rep)?,
            );
            report.extend(epsilon_checks(&shape)?);
            if n <= 4 {
                report.merge(
                    &format!("V^{} in Uhat", shape),
                    verify_spin_in_uhat(&shape)?,
                );
                report.extend(theta_word_checks(&shape)?);
                let mats: Vec<_> = rep.generators.iter().map(|g| &g.matrix).collect();
                let c = commutant_dimension(rep.dim(), &mats);
                let want = if (n - shape.len()) % 2 == 1 { 2 } else { 1 };
                report.check_with(
                    format!(
                        "V^{}: commutant dimension {} (n - l = {})",
                        shape,
                        want,
                        n - shape.len()
                    ),
                    c == want,
                    || format!("got {}", c),
                );
            }
        }
    }
    Ok(report)
}

/// `eps_a(T) eps_a(s_aT) = 1` whenever `s_aT` is standard.
pub fn epsilon_checks(shape: &StrictPartition) -> Result<Report> {
    let mut ok = true;
    for t in enumerate_standard_tableaux(shape, false) {
        for a in 1..shape.n() {
            let st = t.swap(a);
            if st.is_standard() {
                ok &= epsilon_sign(&t, a)? * epsilon_sign(&st, a)? == 1;
            }
        }
    }
    let mut report = Report::new();
    report.record(format!("eps_a(T) eps_a(s_aT) = 1 for {}", shape), ok);
    Ok(report)
}

/// `theta_T` is reproducible and another reduced word changes it by a global sign at most.
pub fn theta_word_checks(shape: &StrictPartition) -> Result<Report> {
    let uh = UhatVectors::new(shape)?;
    let mut ok = true;
    for t in enumerate_standard_tableaux(shape, false) {
        let base = uh.theta(&t)?;
        ok &= base == uh.theta(&t)?;
        let d = crate::tableaux::permutation_d(&t);
        for word in crate::idempotents::all_reduced_words(&d) {
            // theta uses y_{a_r} ... y_{a_1}: apply a_1 first
            let v = uh.theta_with_word(&t, &word)?;
            let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
            ok &= v == base || neg == base;
        }
    }
    let mut report = Report::new();
    report.record(
        format!("theta_T up to sign across reduced words for {}", shape),
        ok,
    );
    Ok(report)
}

pub fn suite_fusion(max_n: usize) -> Result<Report> {
    let mut report = Report::new();
    for p in 1..=6 {
        report.record(
            format!("telescoping A-product, p={}", p),
            telescoping_identity(p)?,
        );
    }
    for n in 2..=max_n {
        report.extend(fusion_sweep(n)?);
        report.extend(example_one_row_fusion(n)?);
    }
    if max_n >= 3 {
        report.extend(example_fusion_two_one()?);
    }
    for n in 2..=max_n.min(4) {
        report.extend(fusion_identities(n)?);
    }
    Ok(report)
}

/// Every standard barred `U` with `n` boxes: fusion value `(n!/g) e_U`.
pub fn fusion_sweep(n: usize) -> Result<Report> {
    let tree = IdempotentTree::new(n)?;
    let mut ok = true;
    let mut detail = String::new();
    for (u, eu) in tree.level(n) {
        let v = fusion_evaluate_in(tree.sergeev(), u)?;
        if v != eu.scale(&fusion_constant(u)?) && ok {
            ok = false;
            detail = format!("U={}", u);
        }
    }
    let mut report = Report::new();
    report.check_with(
        format!(
            "n={}: fusion = (n!/g) e_U for all {} tableaux",
            n,
            tree.level(n).len()
        ),
        ok,
        || detail,
    );
    Ok(report)
}

/// Fusion at a few tableaux of size `n` without building the whole tree.
pub fn fusion_spot(tableaux: &[&str]) -> Result<Report> {
    let mut report = Report::new();
    for text in tableaux {
        let u = tab(text)?;
        let g = Sergeev::new(u.n())?;
        let e = idempotent_in(&g, &u)?;
        let v = fusion_evaluate_in(&g, &u)?;
        report.record(
            format!("fusion = (n!/g) e_U for {}", text),
            v == e.scale(&fusion_constant(&u)?),
        );
    }
    Ok(report)
}

/// `Phi(0, sqrt2, u)` at `u = 0` equals `(1 + t12 c2)(1 + c2 (t13 - t23)) = 6 e_U`.
pub fn example_fusion_two_one() -> Result<Report> {
    let g = Sergeev::new(3)?;
    let u = tab("1,2/3")?;
    let t = |a, b| g.gen_t_ab(a, b);
    let c2 = g.gen_c(2)?;
    let verbatim =
        &(&g.one() + &(&t(1, 2)? * &c2)) * &(&g.one() + &(&c2 * &(&t(1, 3)? - &t(2, 3)?)));
    let value = fusion_evaluate_in(&g, &u)?;
    let e = idempotent_in(&g, &u)?;
    let mut report = Report::new();
    report.record(
        "Phi(0, sqrt2, u)|_{u=0} = (1 + t12 c2)(1 + c2(t13 - t23))",
        value == verbatim,
    );
    report.record(
        "(1 + t12 c2)(1 + c2(t13 - t23)) = 6 e_U",
        verbatim == e.scale(&Scalar::from_int(6)),
    );
    report.record("phi_12(0, sqrt2) = 1 + t12 c2", {
        let f = crate::fusion::phi_value(&g, 1, 2, &Scalar::zero(), &Scalar::sqrt_int(2))?;
        f == &g.one() + &(&t(1, 2)? * &c2)
    });
    Ok(report)
}

/// The projection identity for every `V` with fewer than `n` boxes, the resolvent identities, and the
/// inversion identity for all pairs.
pub fn fusion_identities(n: usize) -> Result<Report> {
    let tree = IdempotentTree::new(n)?;
    let mut report = Report::new();
    let mut projection = true;
    let mut count = 0;
    for r in 1..n {
        for v in tree.level(r).keys() {
            projection &= verify_projection_identity(&tree, v)?.passed();
            count += 1;
        }
    }
    report.record(
        format!(
            "n={}: e_V phi_(n,r)...phi_(n,1) = (u - x_rn)/u e_V ({} tableaux)",
            n, count
        ),
        projection,
    );
    let mut resolvent = Report::new();
    for v in tree.level(n - 1).keys() {
        for w in branch_up(v) {
            resolvent.extend(verify_resolvent_identities(&tree, v, &w)?);
        }
    }
    let first = resolvent.failures().next().map(|c| c.name.clone());
    report.check_with(
        format!("n={}: resolvent identities ({} checks)", n, resolvent.len()),
        resolvent.passed(),
        || first.unwrap_or_default(),
    );
    let values = [
        Scalar::zero(),
        Scalar::sqrt_int(2),
        -Scalar::sqrt_int(6),
        Scalar::sqrt_int(12),
    ];
    let mut inv = true;
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                for v in &values {
                    inv &= inversion_identity(tree.sergeev(), a, b, v)?;
                }
            }
        }
    }
    report.record(format!("n={}: phi_ab(u,v) phi_ba(v,u) = A(u,v)", n), inv);
    Ok(report)
}

/// Shapes with their spin-module commutant dimension, for the parity comparison.
pub fn spin_commutants(max_n: usize) -> Result<Vec<(StrictPartition, usize)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for shape in enumerate_strict_partitions(n) {
            let rep = spin_module(&shape)?;
            let mats: Vec<_> = rep.generators.iter().map(|g| &g.matrix).collect();
            out.push((shape, commutant_dimension(rep.dim(), &mats)));
        }
    }
    Ok(out)
}
