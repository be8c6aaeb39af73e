//! Exact matrix realizations of the modules `Uhat^lambda`, `J^lambda` (seminormal form) and
//! the spin modules `V^lambda`, together with relation checkers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, Word};
use crate::idempotents::{clifford_idempotents, IdempotentTree, Intertwiners};
use crate::linalg::{solve_in_span, IncrementalRank, Matrix};
use crate::perm::Permutation;
use crate::report::Report;
use crate::scalar::{sqrt_rational, Scalar};
use crate::tableaux::{
    a_function, enumerate_standard_tableaux, inversion_counts, permutation_d, reduced_word,
    row_tableau, ShiftedTableau, StrictPartition,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// `Uhat^lambda`: all of `Cl_n` over each `v_T`.
    Uhat,
    /// `J^lambda`: `Cl^T_{n-m}` over each `xi_T`.
    Seminormal,
    /// `V^lambda`: the vectors `F^delta theta_T`.
    Spin,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Uhat => "uhat",
            Flavor::Seminormal => "seminormal",
            Flavor::Spin => "spin",
        }
    }
}

impl core::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uhat" => Ok(Flavor::Uhat),
            "seminormal" => Ok(Flavor::Seminormal),
            "spin" => Ok(Flavor::Spin),
            _ => Err(Error::Invalid(format!("unknown flavor {:?}", s))),
        }
    }
}

/// `delta = (delta_1, ..., delta_p[, alpha])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLabel {
    /// `true` marks `delta_a = -`.
    pub minus: Vec<bool>,
    pub alpha: Option<bool>,
}

impl SpinLabel {
    /// Parity of `F^delta`.
    pub fn is_odd(&self) -> bool {
        (self.minus.iter().filter(|&&m| m).count() + usize::from(self.alpha == Some(true))) % 2 == 1
    }
}

impl core::fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for &m in &self.minus {
            f.write_str(if m { "-" } else { "+" })?;
        }
        if let Some(a) = self.alpha {
            write!(f, "{}", u8::from(a))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub tableau: ShiftedTableau,
    /// Clifford word `c^mask` (bit `a - 1` for `c_a`); zero for the spin flavor.
    pub clifford: u32,
    pub spin: Option<SpinLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub label: String,
    pub matrix: Matrix,
}

/// A module given by its basis and the matrices of the generators.
#[derive(Clone, Debug)]
pub struct Representation {
    pub flavor: Flavor,
    pub shape: StrictPartition,
    pub basis: Vec<BasisIndex>,
    pub generators: Vec<RepMatrix>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn generator(&self, label: &str) -> Option<&Matrix> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .map(|g| &g.matrix)
    }

    fn gen(&self, label: &str) -> Result<&Matrix> {
        self.generator(label)
            .ok_or_else(|| Error::Invalid(format!("no generator {}", label)))
    }

    /// Expected dimension: `2^n g`, `2^{n - floor(l/2)} g` or `2^{ceil((n-l)/2)} g`.
    pub fn expected_dim(&self) -> Result<u64> {
        let g = self.shape.g_lambda_formula()?;
        let (n, l) = (self.shape.n() as u32, self.shape.len() as u32);
        Ok(match self.flavor {
            Flavor::Uhat => g << n,
            Flavor::Seminormal => g << (n - l / 2),
            Flavor::Spin => g << (n - l).div_ceil(2),
        })
    }
}

fn kappa(t: &ShiftedTableau, a: usize) -> Scalar {
    Scalar::sqrt_int(t.kappa_squared(a) as u64)
}

/// `Y_a(T) = sqrt(A(kappa_a, kappa_{a+1}))`, nonnegative branch.
pub fn y_coefficient(t: &ShiftedTableau, a: usize) -> Result<Scalar> {
    let v = a_function(t.kappa_squared(a), t.kappa_squared(a + 1))?;
    if v.is_negative() {
        return Err(Error::Internal(format!(
            "A(kappa_{}, kappa_{}) < 0 for {}",
            a,
            a + 1,
            t
        )));
    }
    sqrt_rational(&v)
}

/// `s_aT` when it is standard.
fn standard_swap(t: &ShiftedTableau, a: usize) -> Option<ShiftedTableau> {
    let s = t.swap(a);
    s.is_standard().then_some(s)
}

/// `c^m1 c^m2 = sign c^{m1 xor m2}`.
fn clifford_mul(m1: u32, m2: u32) -> (u32, Scalar) {
    let (w, neg) = Word::clifford(m1).mul(&Word::clifford(m2));
    (w.mask(), if neg { -Scalar::one() } else { Scalar::one() })
}

/// `s_a c^m s_a = sign c^{m'}`.
fn conjugate_mask(n: usize, a: usize, m: u32) -> (u32, Scalar) {
    let s = Word::new(&Permutation::simple(n, a), 0);
    let (w1, n1) = s.mul(&Word::clifford(m));
    let (w2, n2) = w1.mul(&s);
    debug_assert!(w2.image(a) == a);
    (
        w2.mask(),
        if n1 ^ n2 {
            -Scalar::one()
        } else {
            Scalar::one()
        },
    )
}

/// The vector space `span{c^mask X_T}` with the reduction `c_{d_{2a}} X_T = i c_{d_{2a-1}} X_T`.
struct CliffordSpace {
    n: usize,
    tabs: Vec<ShiftedTableau>,
    index: BTreeMap<ShiftedTableau, usize>,
    /// Per tableau, the reduction pairs `(d_{2a}, d_{2a-1})`.
    forbidden: Vec<Vec<(usize, usize)>>,
    basis: Vec<(usize, u32)>,
    pos: BTreeMap<(usize, u32), usize>,
}

impl CliffordSpace {
    fn new(shape: &StrictPartition, reduce: bool) -> Self {
        let n = shape.n();
        let tabs = enumerate_standard_tableaux(shape, false);
        let index = tabs
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let mut forbidden = Vec::new();
        let mut basis = Vec::new();
        for (k, t) in tabs.iter().enumerate() {
            let d = t.diagonal_entries();
            let pairs: Vec<(usize, usize)> = if reduce {
                (0..d.len() / 2).map(|a| (d[2 * a + 1], d[2 * a])).collect()
            } else {
                Vec::new()
            };
            let blocked: u32 = pairs.iter().map(|&(f, _)| 1u32 << (f - 1)).sum();
            for mask in 0..1u32 << n {
                if mask & blocked == 0 {
                    basis.push((k, mask));
                }
            }
            forbidden.push(pairs);
        }
        let pos = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        CliffordSpace {
            n,
            tabs,
            index,
            forbidden,
            basis,
            pos,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rewrites `c^mask X_t` in basis form.
    fn reduce(&self, t: usize, mut mask: u32) -> (u32, Scalar) {
        let mut coeff = Scalar::one();
        while let Some(&(f, p)) = self.forbidden[t]
            .iter()
            .find(|&&(f, _)| mask >> (f - 1) & 1 == 1)
        {
            // move c_f to the right end, then c_f X = i c_p X
            let rest = mask & !(1 << (f - 1));
            if (rest >> f).count_ones() % 2 == 1 {
                coeff = -coeff;
            }
            let (m, s) = clifford_mul(rest, 1 << (p - 1));
            coeff = &(&coeff * &s) * &Scalar::i();
            mask = m;
        }
        (mask, coeff)
    }

    fn add(&self, m: &mut Matrix, col: usize, t: usize, mask: u32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let (mask, r) = self.reduce(t, mask);
        m.add_to(self.pos[&(t, mask)], col, &(c * &r));
    }

    fn clifford_matrix(&self, b: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (col, &(t, mask)) in self.basis.iter().enumerate() {
            let (mm, s) = clifford_mul(1 << (b - 1), mask);
            self.add(&mut m, col, t, mm, &s);
        }
        m
    }

    fn x_matrix(&self, a: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (col, &(t, mask)) in self.basis.iter().enumerate() {
            let k = kappa(&self.tabs[t], a);
            m.set(col, col, if mask >> (a - 1) & 1 == 1 { -k } else { k });
        }
        m
    }

    fn s_matrix(&self, a: usize) -> Result<Matrix> {
        let mut m = Matrix::zero(self.dim(), self.dim());
        let pair = (1u32 << (a - 1)) | (1 << a);
        for (col, &(t, mask)) in self.basis.iter().enumerate() {
            let tab = &self.tabs[t];
            let (ka, kb) = (kappa(tab, a), kappa(tab, a + 1));
            let d1 = (&kb - &ka).inverse()?;
            let d2 = (&kb + &ka).inverse()?;
            let (mc, sign) = conjugate_mask(self.n, a, mask);
            self.add(&mut m, col, t, mc, &(&sign * &d1));
            let (mp, sp) = clifford_mul(mc, pair);
            self.add(&mut m, col, t, mp, &(&(&sign * &sp) * &d2));
            if let Some(st) = standard_swap(tab, a) {
                let y = y_coefficient(tab, a)?;
                self.add(&mut m, col, self.index[&st], mc, &(&sign * &y));
            }
        }
        Ok(m)
    }

    fn representation(&self, flavor: Flavor, shape: &StrictPartition) -> Result<Representation> {
        let mut generators = Vec::new();
        for a in 1..self.n {
            generators.push(RepMatrix {
                label: format!("s{}", a),
                matrix: self.s_matrix(a)?,
            });
        }
        for b in 1..=self.n {
            generators.push(RepMatrix {
                label: format!("c{}", b),
                matrix: self.clifford_matrix(b),
            });
        }
        for a in 1..=self.n {
            generators.push(RepMatrix {
                label: format!("x{}", a),
                matrix: self.x_matrix(a),
            });
        }
        let basis = self
            .basis
            .iter()
            .map(|&(t, mask)| BasisIndex {
                tableau: self.tabs[t].clone(),
                clifford: mask,
                spin: None,
            })
            .collect();
        Ok(Representation {
            flavor,
            shape: shape.clone(),
            basis,
            generators,
        })
    }
}

/// Generators `s_a`, `c_a`, `x_a` acting on `Uhat^lambda` with basis `c^eps v_T`.
pub fn uhat_module(shape: &StrictPartition) -> Result<Representation> {
    CliffordSpace::new(shape, false).representation(Flavor::Uhat, shape)
}

/// A single generator matrix of `Uhat^lambda`; labels `s1.., c1.., x1..`.
pub fn uhat_action(shape: &StrictPartition, generator: &str) -> Result<Matrix> {
    uhat_module(shape)?.gen(generator).cloned()
}

/// Generators `s_a`, `c_a`, `x_a` acting on `J^lambda` with basis `c^mu xi_T`,
/// `mu` running over `Cl^T_{n-m}`.
pub fn seminormal_module(shape: &StrictPartition) -> Result<Representation> {
    CliffordSpace::new(shape, true).representation(Flavor::Seminormal, shape)
}

pub fn seminormal_action(shape: &StrictPartition, generator: &str) -> Result<Matrix> {
    seminormal_module(shape)?.gen(generator).cloned()
}

/// `b_T` with `phi_{d(T)} v_R = b_T v_T`, accumulated along the reduced word of `d(T)`.
pub fn normalization_b(t: &ShiftedTableau) -> Result<Scalar> {
    let t = t.unbarred();
    let mut cur = row_tableau(t.shape(), &[])?;
    let mut b = Scalar::one();
    for &a in reduced_word(&t).iter().rev() {
        let k2 = cur.kappa_squared(a) - cur.kappa_squared(a + 1);
        b = &(&b * &Scalar::from_int(k2)) * &y_coefficient(&cur, a)?;
        cur = cur.swap(a);
    }
    if cur != t || b.is_zero() {
        return Err(Error::Internal(format!(
            "normalization chain for {} ended at {}",
            t, cur
        )));
    }
    Ok(b)
}

/// The products `t_a = y_a s_a` and `x_a = sqrt2 m_a c_a` recomputed from module matrices of
/// `s` and `c`, for cross-checking the diagonal `x` matrices.
fn derived_jm(rep: &Representation) -> Result<Vec<Matrix>> {
    let n = rep.n();
    let r2 = Scalar::sqrt_int(2);
    let inv_r2 = r2.inverse()?;
    let mut t = Vec::new();
    for a in 1..n {
        let y = (rep.gen(&format!("c{}", a + 1))? - rep.gen(&format!("c{}", a))?).scale(&inv_r2);
        t.push(&y * rep.gen(&format!("s{}", a))?);
    }
    let d = rep.dim();
    let mut out = Vec::new();
    for a in 1..=n {
        let mut m = Matrix::zero(d, d);
        for k in 1..a {
            // t_{ka} = (-1)^{a-k-1} t_{a-1} ... t_{k+1} t_k t_{k+1} ... t_{a-1}
            let mut e = t[k - 1].clone();
            for j in k + 1..a {
                e = &(&t[j - 1] * &e) * &t[j - 1];
            }
            if (a - k - 1) % 2 == 1 {
                e = -&e;
            }
            m = &m + &e;
        }
        out.push((&m * rep.gen(&format!("c{}", a))?).scale(&r2));
    }
    Ok(out)
}

/// Records a family of relations, naming the first one that fails.
fn relation_family(report: &mut Report, name: &str, cases: Vec<(String, bool)>) {
    let first = cases.iter().find(|(_, ok)| !ok).map(|(c, _)| c.clone());
    report.check_with(name, first.is_none(), || {
        format!("first violation: {}", first.unwrap_or_default())
    });
}

/// Checks the defining relations of the acting algebra, the Jucys-Murphy eigenvalues and the
/// dimension formula.
pub fn verify_module_relations(rep: &Representation) -> Result<Report> {
    let mut report = Report::new();
    let expected = rep.expected_dim()?;
    report.check_with("dimension", rep.dim() as u64 == expected, || {
        format!("dim {} expected {}", rep.dim(), expected)
    });
    let square_ok = rep
        .generators
        .iter()
        .all(|g| g.matrix.rows() == rep.dim() && g.matrix.cols() == rep.dim());
    report.check_with("matrices are square of size dim", square_ok, || {
        String::from("shape mismatch")
    });
    if !square_ok {
        return Ok(report);
    }
    match rep.flavor {
        Flavor::Spin => spin_relations(rep, &mut report)?,
        Flavor::Uhat | Flavor::Seminormal => sergeev_relations(rep, &mut report)?,
    }
    Ok(report)
}

fn sergeev_relations(rep: &Representation, report: &mut Report) -> Result<()> {
    let n = rep.n();
    let s: Vec<&Matrix> = (1..n)
        .map(|a| rep.gen(&format!("s{}", a)))
        .collect::<Result<_>>()?;
    let c: Vec<&Matrix> = (1..=n)
        .map(|a| rep.gen(&format!("c{}", a)))
        .collect::<Result<_>>()?;
    let x: Vec<&Matrix> = (1..=n)
        .map(|a| rep.gen(&format!("x{}", a)))
        .collect::<Result<_>>()?;
    let id = Matrix::identity(rep.dim());

    let mut cases = Vec::new();
    for a in 1..n {
        cases.push((format!("s{a}^2 = 1"), s[a - 1] * s[a - 1] == id));
    }
    relation_family(report, "s_a^2 = 1", cases);

    let mut cases = Vec::new();
    for a in 1..n.saturating_sub(1) {
        let (p, q) = (s[a - 1], s[a]);
        cases.push((
            format!("s{a} s{b} s{a} = s{b} s{a} s{b}", b = a + 1),
            &(p * q) * p == &(q * p) * q,
        ));
    }
    relation_family(report, "braid s_a s_{a+1} s_a = s_{a+1} s_a s_{a+1}", cases);

    let mut cases = Vec::new();
    for a in 1..n {
        for b in a + 2..n {
            cases.push((
                format!("s{a} s{b} = s{b} s{a}"),
                s[a - 1] * s[b - 1] == s[b - 1] * s[a - 1],
            ));
        }
    }
    relation_family(report, "s_a s_b = s_b s_a, |a-b| > 1", cases);

    let minus_id = -&id;
    let mut cases = Vec::new();
    for a in 1..=n {
        cases.push((format!("c{a}^2 = -1"), c[a - 1] * c[a - 1] == minus_id));
        for b in a + 1..=n {
            cases.push((
                format!("c{a} c{b} = -c{b} c{a}"),
                c[a - 1] * c[b - 1] == -&(c[b - 1] * c[a - 1]),
            ));
        }
    }
    relation_family(report, "Clifford relations", cases);

    let mut cases = Vec::new();
    for a in 1..n {
        for b in 1..=n {
            let target = if b == a {
                a + 1
            } else if b == a + 1 {
                a
            } else {
                b
            };
            cases.push((
                format!("s{a} c{b} = c{target} s{a}"),
                s[a - 1] * c[b - 1] == c[target - 1] * s[a - 1],
            ));
        }
    }
    relation_family(report, "s_a c_b = c_{s_a(b)} s_a", cases);

    let mut cases = Vec::new();
    for a in 1..=n {
        cases.push((format!("x{a} diagonal"), x[a - 1].is_diagonal()));
    }
    relation_family(report, "JM matrices diagonal", cases);

    let mut cases = Vec::new();
    for (k, b) in rep.basis.iter().enumerate() {
        for a in 1..=n {
            let mut want = kappa(&b.tableau, a);
            if b.clifford >> (a - 1) & 1 == 1 {
                want = -want;
            }
            cases.push((
                format!("x{a} on basis vector {k}"),
                x[a - 1].get(k, k) == &want,
            ));
        }
    }
    relation_family(report, "JM eigenvalues are signed contents", cases);

    let derived = derived_jm(rep)?;
    let mut cases = Vec::new();
    for a in 1..=n {
        cases.push((
            format!("x{a} = sqrt2 m{a} c{a}"),
            &derived[a - 1] == x[a - 1],
        ));
    }
    relation_family(report, "x_a agrees with sqrt2 m_a c_a", cases);
    Ok(())
}

fn spin_relations(rep: &Representation, report: &mut Report) -> Result<()> {
    let n = rep.n();
    let t: Vec<&Matrix> = (1..n)
        .map(|a| rep.gen(&format!("t{}", a)))
        .collect::<Result<_>>()?;
    let id = Matrix::identity(rep.dim());
    let mut cases = Vec::new();
    for a in 1..n {
        cases.push((format!("t{a}^2 = 1"), t[a - 1] * t[a - 1] == id));
    }
    relation_family(report, "t_a^2 = 1", cases);
    let mut cases = Vec::new();
    for a in 1..n.saturating_sub(1) {
        let (p, q) = (t[a - 1], t[a]);
        cases.push((
            format!("t{a} t{b} t{a} = t{b} t{a} t{b}", b = a + 1),
            &(p * q) * p == &(q * p) * q,
        ));
    }
    relation_family(report, "braid t_a t_{a+1} t_a = t_{a+1} t_a t_{a+1}", cases);
    let mut cases = Vec::new();
    for a in 1..n {
        for b in a + 2..n {
            cases.push((
                format!("t{a} t{b} = -t{b} t{a}"),
                t[a - 1] * t[b - 1] == -&(t[b - 1] * t[a - 1]),
            ));
        }
    }
    relation_family(report, "t_a t_b = -t_b t_a, |a-b| > 1", cases);
    Ok(())
}

/// `eps_a(T)` from the inversion numbers of the row word.
pub fn epsilon_sign(t: &ShiftedTableau, a: usize) -> Result<i64> {
    let st = standard_swap(t, a)
        .ok_or_else(|| Error::Invalid(format!("s_{} T is not standard for {}", a, t)))?;
    let n = t.n();
    let mut i = vec![0usize; n + 2];
    for (k, v) in inversion_counts(t).into_iter().enumerate() {
        i[k + 2] = v;
    }
    let tail: usize = (a + 2..=n).map(|b| i[b]).sum();
    let longer = permutation_d(&st).length() > permutation_d(t).length();
    let e = if longer {
        i[a] * (i[a + 1] + 1) + tail
    } else {
        (i[a] + 1) * (i[a + 1] + 1) + tail
    };
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

/// The Clifford coefficient `sqrt2 (kappa_a c_{a^T} - kappa_{a+1} c_{(a+1)^T}) / (kappa_a^2 - kappa_{a+1}^2)`.
pub fn spin_diagonal_coefficient(t: &ShiftedTableau, a: usize) -> Result<AlgebraElement> {
    let n = t.n();
    let dinv = permutation_d(t).inverse();
    let den = Scalar::from_int(t.kappa_squared(a) - t.kappa_squared(a + 1)).inverse()?;
    let f = &Scalar::sqrt_int(2) * &den;
    let ca = AlgebraElement::from_word(
        n,
        Word::clifford(1 << (dinv.apply(a) - 1)),
        &f * &kappa(t, a),
    );
    let cb = AlgebraElement::from_word(
        n,
        Word::clifford(1 << (dinv.apply(a + 1) - 1)),
        &f * &kappa(t, a + 1),
    );
    Ok(&ca - &cb)
}

/// One term of the rule `t_a theta_T = Gamma theta_T + eps Y theta_{s_aT}`.
#[derive(Clone, Debug)]
pub struct SpinThetaAction {
    pub diagonal: AlgebraElement,
    /// `(s_aT, eps_a(T) Y_a(T))` when `s_aT` is standard.
    pub off_diagonal: Option<(ShiftedTableau, Scalar)>,
}

pub fn spin_theta_action(t: &ShiftedTableau, a: usize) -> Result<SpinThetaAction> {
    let t = t.unbarred();
    if a == 0 || a >= t.n() {
        return Err(Error::IndexOutOfRange { index: a, n: t.n() });
    }
    let diagonal = spin_diagonal_coefficient(&t, a)?;
    let off_diagonal = match standard_swap(&t, a) {
        Some(st) => {
            let e = epsilon_sign(&t, a)?;
            Some((st, &Scalar::from_int(e) * &y_coefficient(&t, a)?))
        }
        None => None,
    };
    Ok(SpinThetaAction {
        diagonal,
        off_diagonal,
    })
}

/// The elements `F^delta` of `Cl^lambda_{n-l}` in basis order, with their labels.
pub fn f_basis(shape: &StrictPartition) -> Result<Vec<(SpinLabel, AlgebraElement)>> {
    let n = shape.n();
    let r = row_tableau(shape, &[])?;
    let diag = r.diagonal_entries();
    let b: Vec<usize> = (1..=n).filter(|x| !diag.contains(x)).collect();
    let p = b.len() / 2;
    let odd = b.len() % 2 == 1;
    let c = |k: usize| 1u32 << (b[k] - 1);
    let one = AlgebraElement::one(n);
    let i = Scalar::i();
    let plus: Vec<AlgebraElement> = (0..p)
        .map(|a| {
            &one + &AlgebraElement::from_word(n, Word::clifford(c(2 * a) | c(2 * a + 1)), i.clone())
        })
        .collect();
    let minus: Vec<AlgebraElement> = (0..p)
        .map(|a| {
            &AlgebraElement::from_word(n, Word::clifford(c(2 * a)), Scalar::one())
                + &AlgebraElement::from_word(n, Word::clifford(c(2 * a + 1)), i.clone())
        })
        .collect();
    let bits = p + usize::from(odd);
    let mut out = Vec::new();
    for k in 0..1usize << bits {
        let bit = |j: usize| k >> (bits - 1 - j) & 1 == 1;
        let label = SpinLabel {
            minus: (0..p).map(bit).collect(),
            alpha: odd.then(|| bit(p)),
        };
        let mut f = one.clone();
        for (a, &m) in label.minus.iter().enumerate() {
            f = &f * if m { &minus[a] } else { &plus[a] };
        }
        if label.alpha == Some(true) {
            f = &f * &AlgebraElement::from_word(n, Word::clifford(c(2 * p)), Scalar::one());
        }
        out.push((label, f));
    }
    Ok(out)
}

fn clifford_coordinates(e: &AlgebraElement) -> Vec<Scalar> {
    let n = e.n();
    let mut v = vec![Scalar::zero(); 1 << n];
    for (w, s) in e.terms() {
        debug_assert!(w.permutation(n).is_identity());
        v[w.mask() as usize] = s.clone();
    }
    v
}

/// The spin module `V^lambda` on the basis `F^delta theta_T` (tableau-major), generators `t_a`.
///
/// `t_a F theta_T = (-1)^{|F|} F t_a theta_T`, and `F Gamma` is re-expanded in the `F` basis.
pub fn spin_module(shape: &StrictPartition) -> Result<Representation> {
    let n = shape.n();
    let tabs = enumerate_standard_tableaux(shape, false);
    let index: BTreeMap<&ShiftedTableau, usize> =
        tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let fb = f_basis(shape)?;
    let cols: Vec<Vec<Scalar>> = fb.iter().map(|(_, f)| clifford_coordinates(f)).collect();
    let k = fb.len();
    let dim = tabs.len() * k;
    let mut generators = Vec::new();
    for a in 1..n {
        let mut m = Matrix::zero(dim, dim);
        for (ti, t) in tabs.iter().enumerate() {
            let act = spin_theta_action(t, a)?;
            for (di, (label, f)) in fb.iter().enumerate() {
                let sign = if label.is_odd() {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                let col = ti * k + di;
                let fg = f.multiply(&act.diagonal)?;
                let coeffs = solve_in_span(&cols, &clifford_coordinates(&fg))?;
                for (dj, x) in coeffs.iter().enumerate() {
                    if !x.is_zero() {
                        m.add_to(ti * k + dj, col, &(&sign * x));
                    }
                }
                if let Some((st, y)) = &act.off_diagonal {
                    m.add_to(index[st] * k + di, col, &(&sign * y));
                }
            }
        }
        generators.push(RepMatrix {
            label: format!("t{}", a),
            matrix: m,
        });
    }
    let basis = tabs
        .iter()
        .flat_map(|t| {
            fb.iter().map(move |(l, _)| BasisIndex {
                tableau: t.clone(),
                clifford: 0,
                spin: Some(l.clone()),
            })
        })
        .collect();
    Ok(Representation {
        flavor: Flavor::Spin,
        shape: shape.clone(),
        basis,
        generators,
    })
}

/// Builds any flavor.
pub fn module(shape: &StrictPartition, flavor: Flavor) -> Result<Representation> {
    match flavor {
        Flavor::Uhat => uhat_module(shape),
        Flavor::Seminormal => seminormal_module(shape),
        Flavor::Spin => spin_module(shape),
    }
}

/// Dimension of `{X : X M = M X}` for all given `d x d` matrices.
pub fn commutant_dimension(d: usize, mats: &[&Matrix]) -> usize {
    let mut rank = IncrementalRank::new();
    for m in mats {
        // (X M - M X)_{ij} = sum_k X_{ik} M_{kj} - M_{ik} X_{kj}, unknown X_{pq} at p * d + q
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![Scalar::zero(); d * d];
                for k in 0..d {
                    let mkj = m.get(k, j);
                    if !mkj.is_zero() {
                        row[i * d + k] += mkj;
                    }
                    let mik = m.get(i, k);
                    if !mik.is_zero() {
                        row[k * d + j] -= mik;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rank.push(row);
                }
            }
        }
    }
    d * d - rank.rank()
}

/// Vectors of `Uhat^lambda` in the basis `c^eps v_T`.
pub struct UhatVectors {
    rep: Representation,
    pos: BTreeMap<(ShiftedTableau, u32), usize>,
}

impl UhatVectors {
    pub fn new(shape: &StrictPartition) -> Result<Self> {
        let rep = uhat_module(shape)?;
        let pos = rep
            .basis
            .iter()
            .enumerate()
            .map(|(k, b)| ((b.tableau.clone(), b.clifford), k))
            .collect();
        Ok(UhatVectors { rep, pos })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    /// `c^mask v_T`.
    pub fn basis_vector(&self, t: &ShiftedTableau, mask: u32) -> Result<Vec<Scalar>> {
        let k = *self
            .pos
            .get(&(t.unbarred(), mask))
            .ok_or(Error::ShapeMismatch)?;
        let mut v = vec![Scalar::zero(); self.rep.dim()];
        v[k] = Scalar::one();
        Ok(v)
    }

    /// `y_a = (c_{a+1} - c_a)/sqrt2` as a matrix.
    pub fn y_matrix(&self, a: usize) -> Result<Matrix> {
        let d = self.rep.gen(&format!("c{}", a + 1))? - self.rep.gen(&format!("c{}", a))?;
        Ok(d.scale(&Scalar::sqrt_int(2).inverse()?))
    }

    /// `t_a = y_a s_a`.
    pub fn t_matrix(&self, a: usize) -> Result<Matrix> {
        Ok(&self.y_matrix(a)? * self.rep.gen(&format!("s{}", a))?)
    }

    /// Left action of a Clifford element.
    pub fn apply_clifford(&self, e: &AlgebraElement, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.rep.n();
        let mut out = vec![Scalar::zero(); v.len()];
        for (w, s) in e.terms() {
            if !w.permutation(n).is_identity() {
                return Err(Error::Invalid(String::from("not a Clifford element")));
            }
            let mut u = v.to_vec();
            for b in (1..=n).rev().filter(|b| w.mask() >> (b - 1) & 1 == 1) {
                u = self.rep.gen(&format!("c{}", b))?.apply(&u);
            }
            for (o, x) in out.iter_mut().zip(&u) {
                if !x.is_zero() {
                    *o += &(s * x);
                }
            }
        }
        Ok(out)
    }

    /// `theta_T = y_{a_r} ... y_{a_1} v_T` for the given word `(a_1, ..., a_r)`.
    pub fn theta_with_word(&self, t: &ShiftedTableau, word: &[usize]) -> Result<Vec<Scalar>> {
        let mut v = self.basis_vector(t, 0)?;
        for &a in word {
            v = self.y_matrix(a)?.apply(&v);
        }
        Ok(v)
    }

    /// `theta_T` along the row-word reduced decomposition.
    pub fn theta(&self, t: &ShiftedTableau) -> Result<Vec<Scalar>> {
        self.theta_with_word(t, &reduced_word(t))
    }
}

fn add_scaled(acc: &mut [Scalar], v: &[Scalar], s: &Scalar) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

/// Checks the spin rule for `theta_T` against the action computed inside `Uhat^lambda`,
/// and the spin matrices against the vectors `F^delta theta_T` realized there.
pub fn verify_spin_in_uhat(shape: &StrictPartition) -> Result<Report> {
    let mut report = Report::new();
    let uh = UhatVectors::new(shape)?;
    let n = shape.n();
    let tabs = enumerate_standard_tableaux(shape, false);
    let thetas: BTreeMap<&ShiftedTableau, Vec<Scalar>> = tabs
        .iter()
        .map(|t| Ok((t, uh.theta(t)?)))
        .collect::<Result<_>>()?;
    let tm: Vec<Matrix> = (1..n).map(|a| uh.t_matrix(a)).collect::<Result<_>>()?;

    let mut cases = Vec::new();
    for t in &tabs {
        for a in 1..n {
            let lhs = tm[a - 1].apply(&thetas[t]);
            let act = spin_theta_action(t, a)?;
            let mut rhs = uh.apply_clifford(&act.diagonal, &thetas[t])?;
            if let Some((st, y)) = &act.off_diagonal {
                add_scaled(&mut rhs, &thetas[st], y);
            }
            cases.push((format!("t{} theta_{}", a, t), lhs == rhs));
        }
    }
    relation_family(&mut report, "theta rule agrees with Uhat action", cases);

    let spin = spin_module(shape)?;
    let fb = f_basis(shape)?;
    let vectors: Vec<Vec<Scalar>> = spin
        .basis
        .iter()
        .map(|b| {
            let f = &fb
                .iter()
                .find(|(l, _)| Some(l) == b.spin.as_ref())
                .expect("label")
                .1;
            uh.apply_clifford(f, &thetas[&b.tableau])
        })
        .collect::<Result<_>>()?;
    let mut rank = IncrementalRank::new();
    for v in &vectors {
        rank.push(v.clone());
    }
    report.check_with(
        "F theta vectors independent",
        rank.rank() == spin.dim(),
        || format!("rank {} of {}", rank.rank(), spin.dim()),
    );
    let mut cases = Vec::new();
    for a in 1..n {
        let m = spin.gen(&format!("t{}", a))?;
        for (j, v) in vectors.iter().enumerate() {
            let lhs = tm[a - 1].apply(v);
            let mut rhs = vec![Scalar::zero(); lhs.len()];
            for (i, w) in vectors.iter().enumerate() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    add_scaled(&mut rhs, w, c);
                }
            }
            cases.push((format!("t{} on basis vector {}", a, j), lhs == rhs));
        }
    }
    relation_family(&mut report, "spin matrices match Uhat action", cases);
    Ok(report)
}

/// `phi_{d(T)} v_R = b_T v_T` read off from the `Uhat^lambda` matrices.
pub fn normalization_b_from_uhat(uh: &UhatVectors, t: &ShiftedTableau) -> Result<Scalar> {
    let rep = uh.representation();
    let r = row_tableau(t.shape(), &[])?;
    let mut v = uh.basis_vector(&r, 0)?;
    for &a in reduced_word(t).iter().rev() {
        let x1 = rep.gen(&format!("x{}", a))?;
        let x2 = rep.gen(&format!("x{}", a + 1))?;
        let cc = rep.gen(&format!("c{}", a))? * rep.gen(&format!("c{}", a + 1))?;
        let sq = &(x1 * x1) - &(x2 * x2);
        let phi = &(&(rep.gen(&format!("s{}", a))? * &sq) + &(x1 + x2)) - &(&cc * &(x1 - x2));
        v = phi.apply(&v);
    }
    let target = uh.basis_vector(t, 0)?;
    let k = target.iter().position(|x| x.is_one()).expect("unit vector");
    let b = v[k].clone();
    let rest_zero = v.iter().enumerate().all(|(i, x)| i == k || x.is_zero());
    if !rest_zero {
        return Err(Error::Internal(format!(
            "phi_d(T) v_R is not a multiple of v_T for {}",
            t
        )));
    }
    Ok(b)
}

/// Checks that `c^mu xi_T -> c^mu phi_{d(T)} e_R E / b_T` intertwines the generators of
/// `J^lambda` with left multiplication, and that the images are independent.
pub fn verify_xi_map(
    tree: &IdempotentTree,
    phis: &Intertwiners,
    shape: &StrictPartition,
) -> Result<Report> {
    let mut report = Report::new();
    let g = tree.sergeev();
    let n = g.n();
    let rep = seminormal_module(shape)?;
    let r = row_tableau(shape, &[])?;
    let er = tree.get(&r).ok_or(Error::ShapeMismatch)?;
    let e = &clifford_idempotents(g, &r)[0].element;
    let mut images = Vec::new();
    for b in &rep.basis {
        let zeta = &(&phis.phi_w(&permutation_d(&b.tableau))? * er) * e;
        let xi = zeta.scale(&normalization_b(&b.tableau)?.inverse()?);
        images.push(&g.clifford(b.clifford) * &xi);
    }
    let words: Vec<Word> = {
        let mut all: Vec<Word> = images
            .iter()
            .flat_map(|x| x.terms().iter().map(|(w, _)| *w))
            .collect();
        all.sort();
        all.dedup();
        all
    };
    let mut rank = IncrementalRank::new();
    for x in &images {
        rank.push(x.to_dense(&words));
    }
    report.check_with("images independent", rank.rank() == rep.dim(), || {
        format!("rank {} of {}", rank.rank(), rep.dim())
    });
    let mut gens: Vec<(String, AlgebraElement)> = Vec::new();
    for a in 1..n {
        gens.push((format!("s{}", a), g.gen_s(a)?));
    }
    for b in 1..=n {
        gens.push((format!("c{}", b), g.gen_c(b)?));
    }
    for a in 1..=n {
        gens.push((format!("x{}", a), g.jm_x(a)?));
    }
    let mut cases = Vec::new();
    for (label, ge) in &gens {
        let m = rep.gen(label)?;
        for (j, img) in images.iter().enumerate() {
            let lhs = ge * img;
            let mut rhs = AlgebraElement::zero(n);
            for (i, other) in images.iter().enumerate() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    rhs = &rhs + &other.scale(c);
                }
            }
            cases.push((format!("{} on basis vector {}", label, j), lhs == rhs));
        }
    }
    relation_family(&mut report, "map intertwines generators", cases);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn uhat_two_one() {
        let rep = uhat_module(&sp(&[2, 1])).unwrap();
        assert_eq!(rep.dim(), 8);
        let r = verify_module_relations(&rep).unwrap();
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn seminormal_small() {
        for n in 1..=4 {
            for shape in crate::tableaux::enumerate_strict_partitions(n) {
                let rep = seminormal_module(&shape).unwrap();
                let r = verify_module_relations(&rep).unwrap();
                assert!(r.passed(), "{}:\n{}", shape, r);
            }
        }
    }

    #[test]
    fn spin_small() {
        for n in 1..=4 {
            for shape in crate::tableaux::enumerate_strict_partitions(n) {
                let rep = spin_module(&shape).unwrap();
                let r = verify_module_relations(&rep).unwrap();
                assert!(r.passed(), "{}:\n{}", shape, r);
            }
        }
    }

    #[test]
    fn spin_vectors_in_uhat() {
        for shape in [sp(&[2, 1]), sp(&[3, 1]), sp(&[3])] {
            let r = verify_spin_in_uhat(&shape).unwrap();
            assert!(r.passed(), "{}:\n{}", shape, r);
        }
    }

    #[test]
    fn b_t_for_three_one() {
        let t = tab("1,2,4/3");
        let b = normalization_b(&t).unwrap();
        assert_eq!(b, &Scalar::from_int(2) * &Scalar::sqrt_int(6));
        let uh = UhatVectors::new(&sp(&[3, 1])).unwrap();
        assert_eq!(normalization_b_from_uhat(&uh, &t).unwrap(), b);
    }

    #[test]
    fn corrupted_matrix_fails() {
        let mut rep = seminormal_module(&sp(&[2, 1])).unwrap();
        let m = &mut rep.generators[0].matrix;
        let v = m.get(0, 0) + &Scalar::one();
        m.set(0, 0, v);
        let r = verify_module_relations(&rep).unwrap();
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.name.starts_with("s_a^2")));
    }
}
