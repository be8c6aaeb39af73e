//! Primitive idempotents `e_U` from Jucys-Murphy elements, Clifford refinements,
//! intertwiners `phi_a` and the elements `zeta^beta_{TU}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{basis_words, AlgebraElement, Sergeev};
use crate::linalg::IncrementalRank;
use crate::perm::Permutation;
use crate::report::Report;
use crate::scalar::{Rational, Scalar};
use crate::tableaux::{
    addable_signed_contents, all_barred_tableaux, branch_up, enumerate_standard_tableaux,
    enumerate_strict_partitions, permutation_d, row_tableau, Box2, ShiftedTableau, StrictPartition,
};
use crate::{Error, Result};

/// An idempotent together with its tableau and the eigenvalues `kappa_1..kappa_n`.
#[derive(Clone, Debug)]
pub struct IdempotentRecord {
    pub tableau: ShiftedTableau,
    pub element: AlgebraElement,
    pub kappa: Vec<Scalar>,
}

/// The linear factors `(x_n - b_j)/(kappa - b_j)` that extend `e_V` to `e_U`.
///
/// Returns the roots `b_j` and the common normalizing scalar `1 / prod (kappa - b_j)`.
pub fn step_factors(u: &ShiftedTableau) -> Result<(Vec<Scalar>, Scalar)> {
    let n = u.n();
    let Some(v) = u.remove_max() else {
        return Ok((Vec::new(), Scalar::one()));
    };
    let kappa = u.signed_content(n);
    let target = u.box_of(n);
    let mut roots = Vec::new();
    let mut den = Scalar::one();
    let mut skipped = false;
    for (bx, b) in addable_signed_contents(v.shape()) {
        if !skipped && bx == target && b == kappa {
            skipped = true;
            continue;
        }
        let d = &kappa - &b;
        if d.is_zero() {
            return Err(Error::Internal(alloc::format!(
                "vanishing denominator for {}",
                u
            )));
        }
        den = &den * &d;
        roots.push(b);
    }
    if !skipped {
        return Err(Error::Internal(alloc::format!(
            "entry {} of {} is not at an addable box",
            n,
            u
        )));
    }
    Ok((roots, den.inverse()?))
}

/// `p * prod_j (x_k - b_j) / (kappa - b_j)` where `k = |u|`, computed in the algebra of `g`.
pub fn apply_step(g: &Sergeev, p: &AlgebraElement, u: &ShiftedTableau) -> Result<AlgebraElement> {
    let (roots, norm) = step_factors(u)?;
    let x = g.jm_x_ref(u.n());
    let mut acc = p.clone();
    for b in &roots {
        if acc.is_zero() {
            break;
        }
        acc = &acc.multiply(x)? - &acc.scale(b);
    }
    Ok(acc.scale(&norm))
}

/// `e_U` computed along the chain `U|1, U|2, ..., U`.
pub fn idempotent(u: &ShiftedTableau) -> Result<IdempotentRecord> {
    let g = Sergeev::new(u.n())?;
    let element = idempotent_in(&g, u)?;
    Ok(IdempotentRecord {
        tableau: u.clone(),
        element,
        kappa: u.kappa_vector(),
    })
}

/// `e_U` inside `S_m` for the context `g` (`m >= |U|`).
pub fn idempotent_in(g: &Sergeev, u: &ShiftedTableau) -> Result<AlgebraElement> {
    let mut e = g.one();
    for k in 2..=u.n() {
        e = apply_step(g, &e, &u.restrict(k))?;
    }
    Ok(e)
}

/// All idempotents `e_U` for `|U| <= n`, built level by level and stored in `S_n`.
#[derive(Clone, Debug)]
pub struct IdempotentTree {
    g: Sergeev,
    levels: Vec<BTreeMap<ShiftedTableau, AlgebraElement>>,
}

impl IdempotentTree {
    pub fn new(n: usize) -> Result<Self> {
        let g = Sergeev::new(n)?;
        let mut levels = Vec::with_capacity(n);
        let mut first = BTreeMap::new();
        first.insert(ShiftedTableau::single(), g.one());
        levels.push(first);
        for _ in 2..=n {
            let prev: &BTreeMap<ShiftedTableau, AlgebraElement> = levels.last().expect("nonempty");
            let mut next = BTreeMap::new();
            for (v, ev) in prev {
                for w in branch_up(v) {
                    let ew = apply_step(&g, ev, &w)?;
                    next.insert(w, ew);
                }
            }
            levels.push(next);
        }
        Ok(IdempotentTree { g, levels })
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn sergeev(&self) -> &Sergeev {
        &self.g
    }

    /// Tableaux with `k` boxes and their idempotents, embedded in `S_n`.
    pub fn level(&self, k: usize) -> &BTreeMap<ShiftedTableau, AlgebraElement> {
        &self.levels[k - 1]
    }

    pub fn get(&self, u: &ShiftedTableau) -> Option<&AlgebraElement> {
        self.levels.get(u.n().checked_sub(1)?)?.get(u)
    }

    /// Top-level idempotents in tableau enumeration order.
    pub fn records(&self) -> Vec<IdempotentRecord> {
        let n = self.n();
        all_barred_tableaux(n)
            .into_iter()
            .map(|u| {
                let element = self.levels[n - 1][&u].clone();
                IdempotentRecord {
                    kappa: u.kappa_vector(),
                    tableau: u,
                    element,
                }
            })
            .collect()
    }
}

/// Number of standard barred tableaux with `n` boxes extending `v`.
fn leaf_count(v: &ShiftedTableau, n: usize) -> usize {
    if v.n() == n {
        1
    } else {
        branch_up(v).iter().map(|w| leaf_count(w, n)).sum()
    }
}

/// Walks the branching tree multiplying `p = e_U` by the factors of each `e_W`; a zero partial
/// product annihilates the whole subtree. Returns `(pairs checked, first failure)`.
fn orthogonality_walk(
    g: &Sergeev,
    p: &AlgebraElement,
    node: &ShiftedTableau,
    u: &ShiftedTableau,
    eu: &AlgebraElement,
) -> Result<(usize, Option<String>)> {
    let n = u.n();
    let mut count = 0;
    for w in branch_up(node) {
        let q = apply_step(g, p, &w)?;
        if w.n() == n {
            count += 1;
            let ok = if &w == u { &q == eu } else { q.is_zero() };
            if !ok {
                return Ok((count, Some(alloc::format!("e_{} e_{} wrong", u, w))));
            }
        } else if q.is_zero() {
            count += leaf_count(&w, n);
        } else {
            let (c, fail) = orthogonality_walk(g, &q, &w, u, eu)?;
            count += c;
            if fail.is_some() {
                return Ok((count, fail));
            }
        }
    }
    Ok((count, None))
}

/// Idempotency, orthogonality, completeness and `x_a e_U = e_U x_a = kappa_a e_U`.
pub fn verify_idempotent_system(n: usize) -> Result<Report> {
    let tree = IdempotentTree::new(n)?;
    verify_idempotent_system_with(&tree)
}

pub fn verify_idempotent_system_with(tree: &IdempotentTree) -> Result<Report> {
    let n = tree.n();
    let g = tree.sergeev();
    let mut report = Report::new();
    let top = tree.level(n);
    let expected: usize = enumerate_strict_partitions(n)
        .iter()
        .map(|l| (1usize << (n - l.len())) * l.g_lambda_formula().unwrap_or(0) as usize)
        .sum();
    report.record(
        alloc::format!("n={}: {} idempotents", n, top.len()),
        top.len() == expected,
    );

    let mut sum = g.zero();
    let mut pairs = 0;
    let mut pair_fail = None;
    let mut eigen_fail = None;
    for (u, eu) in top {
        sum = &sum + eu;
        if n == 1 {
            pairs += 1;
            if &(eu * eu) != eu {
                pair_fail = Some(String::from("e^2 != e"));
            }
        } else {
            let (c, fail) = orthogonality_walk(g, eu, &ShiftedTableau::single(), u, eu)?;
            pairs += c;
            if pair_fail.is_none() {
                pair_fail = fail;
            }
        }
        for a in 1..=n {
            let x = g.jm_x_ref(a);
            let k = u.signed_content(a);
            let target = eu.scale(&k);
            if eigen_fail.is_none() && (x.multiply(eu)? != target || eu.multiply(x)? != target) {
                eigen_fail = Some(alloc::format!("x_{} e_{}", a, u));
            }
        }
    }
    report.check_with(
        alloc::format!("n={}: e_U e_V = delta_UV e_V over {} pairs", n, pairs),
        pair_fail.is_none() && pairs == top.len() * top.len(),
        || {
            pair_fail
                .clone()
                .unwrap_or_else(|| alloc::format!("only {} pairs visited", pairs))
        },
    );
    report.check_with(
        alloc::format!("n={}: sum of e_U is 1", n),
        sum == g.one(),
        || alloc::format!("sum has {} terms", sum.len()),
    );
    report.check_with(
        alloc::format!("n={}: x_a e_U = e_U x_a = kappa_a e_U", n),
        eigen_fail.is_none(),
        || eigen_fail.clone().unwrap_or_default(),
    );
    Ok(report)
}

/// `x_n = sum_U kappa_n(U) e_U`.
pub fn verify_spectral_identity(tree: &IdempotentTree) -> Result<bool> {
    let n = tree.n();
    let mut rhs = tree.sergeev().zero();
    for (u, eu) in tree.level(n) {
        rhs = &rhs + &eu.scale(&u.signed_content(n));
    }
    Ok(rhs == *tree.sergeev().jm_x_ref(n))
}

/// One of the `2^m` products `prod_a (1 + eps_a i c_{d_{2a-1}} c_{d_{2a}})/2`.
#[derive(Clone, Debug)]
pub struct CliffordIdempotent {
    pub diagonal_entries: Vec<usize>,
    /// `true` where `eps_a = -1`.
    pub minus: Vec<bool>,
    pub element: AlgebraElement,
}

/// The Clifford idempotents attached to the diagonal entries of `u`, indexed `r = 1..2^m`:
/// bit `a - 1` of `r - 1` selects `eps_a = -1`, so `r = 1` is the all-plus product.
pub fn clifford_idempotents(g: &Sergeev, u: &ShiftedTableau) -> Vec<CliffordIdempotent> {
    let d = u.diagonal_entries();
    let m = d.len() / 2;
    let half = Scalar::ratio(1, 2).expect("nonzero");
    (0..1usize << m)
        .map(|r| {
            let minus: Vec<bool> = (0..m).map(|a| r >> a & 1 == 1).collect();
            let mut e = g.one();
            for (a, &neg) in minus.iter().enumerate() {
                let cc = g.clifford((1 << (d[2 * a] - 1)) | (1 << (d[2 * a + 1] - 1)));
                let i = if neg { -Scalar::i() } else { Scalar::i() };
                let f = (&g.one() + &cc.scale(&i)).scale(&half);
                e = &e * &f;
            }
            CliffordIdempotent {
                diagonal_entries: d.clone(),
                minus,
                element: e,
            }
        })
        .collect()
}

/// `e^{(r)}_U = E^U_r e_U`, `1 <= r <= 2^m`.
pub fn refined_idempotent(
    g: &Sergeev,
    u: &ShiftedTableau,
    eu: &AlgebraElement,
    r: usize,
) -> Result<AlgebraElement> {
    let family = clifford_idempotents(g, u);
    let e = family
        .get(r.wrapping_sub(1))
        .ok_or(Error::IndexOutOfRange {
            index: r,
            n: family.len(),
        })?;
    e.element.multiply(eu)
}

/// `dim S_n e` for an idempotent `e`: the trace of `y -> y e`, which is `2^n n!` times the
/// identity coefficient of `e` because `w v = +/- w` forces `v = 1`.
pub fn left_ideal_dim_by_trace(e: &AlgebraElement) -> Result<u64> {
    let n = e.n();
    let size = (1i64 << n) * (1..=n as i64).product::<i64>();
    let c = e
        .identity_coeff()
        .as_rational()
        .ok_or_else(|| Error::Internal(String::from("identity coefficient is not rational")))?;
    let t = &c * &Rational::from_integer(size);
    if !t.is_integer() || t.is_negative() {
        return Err(Error::Internal(alloc::format!(
            "trace {} is not a dimension",
            t
        )));
    }
    t.numer()
        .try_into()
        .map_err(|_| Error::Internal(String::from("trace overflow")))
}

/// `dim S_n e` by exact elimination over the vectors `w e`, `w` a basis word.
pub fn left_ideal_dim_by_elimination(e: &AlgebraElement) -> usize {
    let n = e.n();
    let basis = basis_words(n);
    let mut rank = IncrementalRank::new();
    for w in &basis {
        let we = &AlgebraElement::from_word(n, *w, Scalar::one()) * e;
        rank.push(we.to_dense(&basis));
    }
    rank.rank()
}

/// Intertwining elements `phi_a` and their products.
#[derive(Clone, Debug)]
pub struct Intertwiners {
    g: Sergeev,
    phi: Vec<AlgebraElement>,
}

impl Intertwiners {
    pub fn new(g: &Sergeev) -> Result<Self> {
        let n = g.n();
        let mut phi = Vec::with_capacity(n.saturating_sub(1));
        for a in 1..n {
            let xa = g.jm_x(a)?;
            let xb = g.jm_x(a + 1)?;
            let sq = &(&xa * &xa) - &(&xb * &xb);
            let cc = g.clifford((1 << (a - 1)) | (1 << a));
            // s_a (x_a^2 - x_{a+1}^2) + x_a + x_{a+1} - c_a c_{a+1} (x_a - x_{a+1})
            let e = &(&(&g.gen_s(a)? * &sq) + &(&xa + &xb)) - &(&cc * &(&xa - &xb));
            phi.push(e);
        }
        Ok(Intertwiners { g: g.clone(), phi })
    }

    pub fn sergeev(&self) -> &Sergeev {
        &self.g
    }

    pub fn phi(&self, a: usize) -> Result<&AlgebraElement> {
        self.phi
            .get(a.wrapping_sub(1))
            .ok_or(Error::IndexOutOfRange {
                index: a,
                n: self.g.n(),
            })
    }

    /// `phi_{a_1} ... phi_{a_r}` for an arbitrary word.
    pub fn phi_word(&self, word: &[usize]) -> Result<AlgebraElement> {
        let mut e = self.g.one();
        for &a in word {
            e = e.multiply(self.phi(a)?)?;
        }
        Ok(e)
    }

    /// `phi_w` along the lexicographically smallest reduced word of `w`.
    pub fn phi_w(&self, w: &Permutation) -> Result<AlgebraElement> {
        self.phi_word(&w.reduced_word())
    }

    /// `phi^*_w = phi_{a_r} ... phi_{a_1}`.
    pub fn phi_star_w(&self, w: &Permutation) -> Result<AlgebraElement> {
        let mut word = w.reduced_word();
        word.reverse();
        self.phi_word(&word)
    }

    /// `zeta^beta_{TU} = phi_{d(T)} e_{R^{lambda,beta}} phi^*_{d(U)}`.
    pub fn zeta(
        &self,
        tree: &IdempotentTree,
        t: &ShiftedTableau,
        u: &ShiftedTableau,
        beta: &[Box2],
    ) -> Result<AlgebraElement> {
        if t.shape() != u.shape() {
            return Err(Error::ShapeMismatch);
        }
        let r = row_tableau(t.shape(), beta)?;
        let er = tree
            .get(&r)
            .ok_or_else(|| Error::Internal(alloc::format!("no idempotent for {}", r)))?;
        let left = self.phi_w(&permutation_d(t))?;
        let right = self.phi_star_w(&permutation_d(u))?;
        Ok(&(&left * er) * &right)
    }

    /// The two alternative forms `e_{T'} phi_{d(T)} phi^*_{d(U)}` and
    /// `phi_{d(T)} phi^*_{d(U)} e_{U'}`, primes marking bars on `beta`.
    pub fn zeta_alternatives(
        &self,
        tree: &IdempotentTree,
        t: &ShiftedTableau,
        u: &ShiftedTableau,
        beta: &[Box2],
    ) -> Result<(AlgebraElement, AlgebraElement)> {
        let tb = t.with_barred_boxes(beta)?;
        let ub = u.with_barred_boxes(beta)?;
        let middle = &self.phi_w(&permutation_d(t))? * &self.phi_star_w(&permutation_d(u))?;
        let et = tree.get(&tb).ok_or(Error::ShapeMismatch)?;
        let eu = tree.get(&ub).ok_or(Error::ShapeMismatch)?;
        Ok((et * &middle, &middle * eu))
    }
}

/// All subsets of the non-diagonal boxes of `shape`, as box lists in increasing bitmask order.
pub fn bar_box_sets(shape: &StrictPartition) -> Vec<Vec<Box2>> {
    let free = shape.non_diagonal_boxes();
    (0..1usize << free.len())
        .map(|m| {
            free.iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, b)| *b)
                .collect()
        })
        .collect()
}

/// Rank of `{c^eps zeta^beta_{TU}}` over the scalars; full rank is `2^n n!`.
pub fn zeta_basis_rank(n: usize) -> Result<(usize, usize)> {
    let tree = IdempotentTree::new(n)?;
    let phis = Intertwiners::new(tree.sergeev())?;
    let g = tree.sergeev();
    let basis = basis_words(n);
    let mut rank = IncrementalRank::new();
    let mut count = 0;
    for shape in enumerate_strict_partitions(n) {
        let tabs = enumerate_standard_tableaux(&shape, false);
        for beta in bar_box_sets(&shape) {
            for t in &tabs {
                for u in &tabs {
                    let z = phis.zeta(&tree, t, u, &beta)?;
                    for mask in 0..1u32 << n {
                        let v = &g.clifford(mask) * &z;
                        rank.push(v.to_dense(&basis));
                        count += 1;
                    }
                }
            }
        }
    }
    Ok((rank.rank(), count))
}

/// `e_U c_a = c_a e_{U'}` for every unbarred non-diagonal `a`, `U'` having `a` barred.
pub fn verify_flip_relations(tree: &IdempotentTree) -> Result<bool> {
    let n = tree.n();
    let g = tree.sergeev();
    for (u, eu) in tree.level(n) {
        for a in 1..=n {
            if u.is_diagonal(a) || u.is_barred(a) {
                continue;
            }
            let u2 = u.toggle_bar(a)?;
            let eu2 = &tree.level(n)[&u2];
            let c = g.gen_c(a)?;
            if eu.multiply(&c)? != c.multiply(eu2)? || eu2.multiply(&c)? != c.multiply(eu)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `phi_a e_U = e_{s_a U} phi_a`, the right side zero when `s_a U` is not standard.
pub fn verify_intertwining_property(tree: &IdempotentTree, phis: &Intertwiners) -> Result<Report> {
    let n = tree.n();
    let mut report = Report::new();
    let mut fail = None;
    let mut count = 0;
    for (u, eu) in tree.level(n) {
        for a in 1..n {
            let phi = phis.phi(a)?;
            let lhs = phi.multiply(eu)?;
            let su = u.swap(a);
            let rhs = if su.is_standard() {
                tree.level(n)[&su].multiply(phi)?
            } else {
                tree.sergeev().zero()
            };
            count += 1;
            if lhs != rhs && fail.is_none() {
                fail = Some(alloc::format!("a={}, U={}", a, u));
            }
        }
    }
    report.check_with(
        alloc::format!("n={}: phi_a e_U = e_(s_a U) phi_a ({} cases)", n, count),
        fail.is_none(),
        || fail.clone().unwrap_or_default(),
    );
    Ok(report)
}

/// Braid relations, `phi_a^2`, and `phi_w c_a = c_{w(a)} phi_w` for all `w` in `Sym_n`.
pub fn verify_intertwiner_relations(phis: &Intertwiners) -> Result<Report> {
    let g = phis.sergeev();
    let n = g.n();
    let mut report = Report::new();
    let mut braid = true;
    for a in 1..n {
        for b in a + 1..n {
            let (pa, pb) = (phis.phi(a)?, phis.phi(b)?);
            if b == a + 1 {
                braid &= (&(pa * pb) * pa) == (&(pb * pa) * pb);
            } else {
                braid &= (pa * pb) == (pb * pa);
            }
        }
    }
    report.record(alloc::format!("n={}: braid relations for phi_a", n), braid);
    let mut square = true;
    for a in 1..n {
        let xa2 = &g.jm_x(a)? * &g.jm_x(a)?;
        let xb2 = &g.jm_x(a + 1)? * &g.jm_x(a + 1)?;
        let diff = &xa2 - &xb2;
        let rhs = &(&xa2 + &xb2).scale(&Scalar::from_int(2)) - &(&diff * &diff);
        let p = phis.phi(a)?;
        square &= (p * p) == rhs;
    }
    report.record(
        alloc::format!(
            "n={}: phi_a^2 = 2(x_a^2 + x_(a+1)^2) - (x_a^2 - x_(a+1)^2)^2",
            n
        ),
        square,
    );
    let mut clifford = true;
    for w in Permutation::all(n) {
        let pw = phis.phi_w(&w)?;
        for a in 1..=n {
            clifford &= &pw * &g.gen_c(a)? == &g.gen_c(w.apply(a))? * &pw;
        }
    }
    report.record(
        alloc::format!("n={}: phi_w c_a = c_(w(a)) phi_w", n),
        clifford,
    );
    Ok(report)
}

/// Every reduced word of every `w` gives the same product of intertwiners.
pub fn verify_phi_word_independence(phis: &Intertwiners) -> Result<bool> {
    let n = phis.sergeev().n();
    for w in Permutation::all(n) {
        let reference = phis.phi_w(&w)?;
        for word in all_reduced_words(&w) {
            if phis.phi_word(&word)? != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All reduced words of `w`, by peeling left descents.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    let n = w.n();
    if w.is_identity() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for a in 1..n {
        if w.has_left_descent(a) {
            let rest = Permutation::simple(n, a).compose(w);
            for mut tail in all_reduced_words(&rest) {
                tail.insert(0, a);
                out.push(tail);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn step_factor_roots() {
        let (roots, norm) = step_factors(&tab("1,2/3")).unwrap();
        let r6 = Scalar::sqrt_int(6);
        assert_eq!(roots, alloc::vec![r6.clone(), -&r6]);
        assert_eq!(norm, Scalar::ratio(-1, 6).unwrap());
        assert!(step_factors(&ShiftedTableau::single())
            .unwrap()
            .0
            .is_empty());
    }

    #[test]
    fn one_box_is_one() {
        assert_eq!(
            idempotent(&ShiftedTableau::single()).unwrap().element,
            AlgebraElement::one(1)
        );
    }

    #[test]
    fn small_systems() {
        for n in 1..=3 {
            let r = verify_idempotent_system(n).unwrap();
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn clifford_family() {
        let g = Sergeev::new(6).unwrap();
        let u = tab("1,2,3/4,5/6");
        let fam = clifford_idempotents(&g, &u);
        assert_eq!(fam.len(), 2);
        let sum = &fam[0].element + &fam[1].element;
        assert_eq!(sum, g.one());
        assert!((&fam[0].element * &fam[1].element).is_zero());
        assert_eq!(&fam[0].element * &fam[0].element, fam[0].element);
        assert_eq!(clifford_idempotents(&g, &tab("1,2,3,4,5,6")).len(), 1);
    }

    #[test]
    fn ideal_dimensions_agree() {
        let tree = IdempotentTree::new(3).unwrap();
        for (u, e) in tree.level(3) {
            let g = u.shape().g_lambda_formula().unwrap();
            assert_eq!(left_ideal_dim_by_trace(e).unwrap(), 8 * g);
            assert_eq!(left_ideal_dim_by_elimination(e) as u64, 8 * g);
        }
    }

    #[test]
    fn reduced_words_of_longest() {
        let w = Permutation::from_images(alloc::vec![3, 2, 1]).unwrap();
        assert_eq!(
            all_reduced_words(&w),
            alloc::vec![alloc::vec![1, 2, 1], alloc::vec![2, 1, 2]]
        );
    }
}
