//! Closed-form indicator and root-number formulas.

use std::sync::Arc;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    irreducibles_of, multiplicities, stab_total, ClassFn, ClassFunction, PartitionMatrix, ProductCharacter,
};
use crate::error::{Error, Result};
use crate::gset::{gamma_matrix, is_outer_involution, CompositionMatrix, GSet, OrderedSetPartition};
use crate::linalg::{q, Rational};
use crate::perm::{factorial, falling_factorial, Composition, CosetSide, PermGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    DirectTrace,
    NuR,
    ClosedFormYoung,
    DivisorSum,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Formula => "formula",
            Method::DirectTrace => "direct-trace",
            Method::NuR => "nu_r",
            Method::ClosedFormYoung => "closed-form-young",
            Method::DivisorSum => "divisor-sum",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndicatorValue {
    pub value: Rational,
    pub method: Method,
}

impl IndicatorValue {
    pub fn new(value: Rational, method: Method) -> Self {
        IndicatorValue { value, method }
    }
}

fn power_on_point(gset: &GSet, a: usize, x: usize, r: u32) -> usize {
    let mut p = x;
    for _ in 0..r {
        p = gset.act(a, p);
    }
    p
}

/// `G[x,y;r] = {a ∈ G | ax = y, a^r x = x}` as element indices.
pub fn root_set(gset: &GSet, x: usize, y: usize, r: u32) -> Vec<usize> {
    (0..gset.group().order())
        .into_par_iter()
        .filter(|&a| gset.act(a, x) == y && power_on_point(gset, a, x, r) == x)
        .collect()
}

fn sum_over_root_set(gset: &GSet, set: &[usize], r: u32, chi: &dyn ClassFn) -> Rational {
    let g = gset.group();
    set.par_iter()
        .map(|&a| chi.eval(&g.element(a).pow(-(r as i64))))
        .reduce(Rational::zero, |s, v| s + v)
}

/// `FS_r(I_{xy}(V)) = |G_{xy}|⁻¹ Σ_{a ∈ G[x,y;r]} χ_V(a^{−r})`.
pub fn fs_formula(gset: &GSet, x: usize, y: usize, chi: &dyn ClassFn, r: u32) -> Rational {
    let k_order = gset.pair_stabilizer(x, y).order();
    let set = root_set(gset, x, y, r);
    sum_over_root_set(gset, &set, r, chi) / q(k_order as i64)
}

/// [`fs_formula`] for several characters sharing one scan of `G`.
pub fn fs_formula_many(gset: &GSet, x: usize, y: usize, chis: &[&dyn ClassFn], r: u32) -> Vec<Rational> {
    let k_order = q(gset.pair_stabilizer(x, y).order() as i64);
    let set = root_set(gset, x, y, r);
    chis.iter()
        .map(|chi| sum_over_root_set(gset, &set, r, *chi) / &k_order)
        .collect()
}

/// `FS₂(V,t) = |K|⁻¹ Σ_k χ((tk)²)`.
pub fn twisted_fs2(k: &PermGroup, chi: &dyn ClassFn, t: &Permutation) -> Result<Rational> {
    if t.degree() != k.degree() || !is_outer_involution(k, t) {
        return Err(Error::OuterInvolution);
    }
    let sum = k
        .elements()
        .par_iter()
        .map(|e| {
            let tk = t.mul(e);
            chi.eval(&tk.mul(&tk))
        })
        .reduce(Rational::zero, |s, v| s + v);
    Ok(sum / q(k.order() as i64))
}

/// `FS₂(I_{AB}(V(Λ)^ψ))`: 1 when `Γ` and `Λ` are both symmetric, else 0.
pub fn fs2_young(gamma: &CompositionMatrix, lambda: &PartitionMatrix) -> Result<i64> {
    if lambda.gamma() != gamma {
        return Err(Error::SizeMismatch(format!(
            "partition matrix does not fit Γ = {}",
            gamma
        )));
    }
    Ok((gamma.is_symmetric() && lambda.is_symmetric()) as i64)
}

/// `Γ = [|A_i ∩ b A_j|]` for the standard blocks of `α`.
pub fn young_gamma(alpha: &Composition, b: &Permutation) -> Result<CompositionMatrix> {
    if b.degree() != alpha.total() {
        return Err(Error::DegreeMismatch(b.degree(), alpha.total()));
    }
    let a = OrderedSetPartition::standard(alpha);
    gamma_matrix(&a, &a.act(b))
}

/// `|{a ∈ b𝔖_α | a² = 1}|`.
pub fn involutions_in_young_coset(alpha: &Composition, b: &Permutation) -> Result<u128> {
    let gamma = young_gamma(alpha, b)?;
    if !gamma.is_symmetric() {
        return Ok(0);
    }
    let l = gamma.size();
    let mut count: u128 = 1;
    for i in 0..l {
        count = count
            .checked_mul(stab_total(gamma.get(i, i)))
            .ok_or(Error::Overflow("involution count"))?;
        for j in i + 1..l {
            let f = factorial(gamma.get(i, j)).ok_or(Error::Overflow("factorial"))?;
            count = count.checked_mul(f).ok_or(Error::Overflow("involution count"))?;
        }
    }
    Ok(count)
}

/// `k = |[m] ∖ b[m]|`.
fn moved_out(m: usize, b: &Permutation) -> usize {
    (0..m).filter(|&i| b.inverse().apply(i) >= m).count()
}

/// Involutions in `b𝔖_m`, `0 < m < n`.
pub fn involutions_bs(n: usize, m: usize, b: &Permutation) -> Result<u128> {
    if m == 0 || m >= n {
        return Err(Error::Invalid(format!("need 0 < m < n, got m = {}, n = {}", m, n)));
    }
    let mut parts = vec![m];
    parts.extend(std::iter::repeat_n(1, n - m));
    let gamma = young_gamma(&Composition::new(parts)?, b)?;
    if !gamma.is_symmetric() {
        return Ok(0);
    }
    Ok(stab_total(m - moved_out(m, b)))
}

/// Involutions in `b(𝔖_m × 𝔖_{n−m})`.
pub fn involutions_bss(n: usize, m: usize, b: &Permutation) -> Result<u128> {
    if m == 0 || m >= n {
        return Err(Error::Invalid(format!("need 0 < m < n, got m = {}, n = {}", m, n)));
    }
    if b.degree() != n {
        return Err(Error::DegreeMismatch(b.degree(), n));
    }
    let k = moved_out(m, b);
    let f = factorial(k).ok_or(Error::Overflow("factorial"))?;
    Ok(f * stab_total(m - k) * stab_total(n - m - k))
}

/// `Σ_k m! m'! / (k! (m−k)! (m'−k)!) · |STab(m−k)| |STab(m'−k)|`, to be
/// compared with `|STab(n)|`.
pub fn stab_identity_rhs(n: usize, m: usize) -> Result<u128> {
    if m > n {
        return Err(Error::Invalid(format!("m = {} exceeds n = {}", m, n)));
    }
    let mp = n - m;
    let fact = |x: usize| factorial(x).ok_or(Error::Overflow("factorial"));
    let mut sum = 0u128;
    for k in 0..=m.min(mp) {
        let coeff = fact(m)? * fact(mp)? / (fact(k)? * fact(m - k)? * fact(mp - k)?);
        sum += coeff * stab_total(m - k) * stab_total(mp - k);
    }
    Ok(sum)
}

/// The class function `Σ_λ FS_r(I_{xy}(V(λ))) χ_λ` on `K = G_{xy}` for
/// `x = H`, `y = bH`, together with where it is supported.
#[derive(Clone, Debug)]
pub struct RootExpansion {
    pub group: Arc<PermGroup>,
    pub subgroup: Arc<PermGroup>,
    pub k: Arc<PermGroup>,
    pub b: Permutation,
    pub r: u32,
    pub coefficients: Vec<Rational>,
    pub class_function: ClassFunction,
    /// Classes of `K` on which the expansion is nonzero.
    pub support_classes: Vec<usize>,
    pub support_is_all_of_k: bool,
}

impl RootExpansion {
    /// Predicted `|{c ∈ bH | c^r = a}|` for `a ∈ H`; zero off `K`.
    pub fn evaluate(&self, a: &Permutation) -> Rational {
        if self.k.contains(a) {
            self.class_function.value_at(a)
        } else {
            Rational::zero()
        }
    }
}

/// Coset root expansion with the irreducibles of `K` found automatically;
/// `K` must be the full product of the symmetric groups on its orbits.
pub fn coset_root_expansion(
    g: Arc<PermGroup>,
    h: Arc<PermGroup>,
    b: &Permutation,
    r: u32,
) -> Result<RootExpansion> {
    let gset = GSet::coset_space(g, h.clone())?;
    coset_root_expansion_in(&gset, h, b, r)
}

/// [`coset_root_expansion`] on an already built `X = G/H` (base point `H`).
pub fn coset_root_expansion_in(gset: &GSet, h: Arc<PermGroup>, b: &Permutation, r: u32) -> Result<RootExpansion> {
    let y = gset.image_of_base(b)?;
    let k = Arc::new(gset.pair_stabilizer(0, y));
    let irr: Vec<ProductCharacter> = irreducibles_of(&k).ok_or_else(|| {
        Error::CharactersUnavailable("two-point stabilizer is not a product of symmetric groups".into())
    })?;
    let chis: Vec<ClassFunction> = irr.iter().map(|c| c.to_class_function(k.clone())).collect();
    expansion_from(gset, h, k, y, b, r, &chis)
}

/// Coset root expansion over caller-supplied irreducible characters of `K`.
pub fn coset_root_expansion_with(
    g: Arc<PermGroup>,
    h: Arc<PermGroup>,
    b: &Permutation,
    r: u32,
    irreducibles: &[ClassFunction],
) -> Result<RootExpansion> {
    let gset = GSet::coset_space(g.clone(), h.clone())?;
    let y = gset.image_of_base(b)?;
    let k = Arc::new(gset.pair_stabilizer(0, y));
    if irreducibles.iter().any(|c| !c.group().same_elements(&k)) {
        return Err(Error::AmbientMismatch);
    }
    let chis: Vec<ClassFunction> = irreducibles
        .iter()
        .map(|c| ClassFunction::from_fn(k.clone(), |p| c.value_at(p)))
        .collect();
    expansion_from(&gset, h, k, y, b, r, &chis)
}

fn expansion_from(
    gset: &GSet,
    h: Arc<PermGroup>,
    k: Arc<PermGroup>,
    y: usize,
    b: &Permutation,
    r: u32,
    chis: &[ClassFunction],
) -> Result<RootExpansion> {
    let refs: Vec<&dyn ClassFn> = chis.iter().map(|c| c as &dyn ClassFn).collect();
    let coefficients = fs_formula_many(gset, 0, y, &refs, r);
    let mut cf = ClassFunction::zero(k.clone());
    for (c, chi) in coefficients.iter().zip(chis) {
        cf = cf.add(&chi.scale(c))?;
    }
    let support_classes: Vec<usize> = cf
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    let support_is_all_of_k = support_classes.len() == cf.values().len();
    Ok(RootExpansion {
        group: gset.group().clone(),
        subgroup: h,
        k,
        b: b.clone(),
        r,
        coefficients,
        class_function: cf,
        support_classes,
        support_is_all_of_k,
    })
}

/// `𝔖_m` on the first `m` of `n` points.
fn leading_symmetric(n: usize, m: usize) -> Result<Arc<PermGroup>> {
    Ok(Arc::new(PermGroup::symmetric_on(n, &(0..m).collect::<Vec<_>>())?))
}

/// `FS_r(V|_{𝔖_k}) = |𝔖_k|⁻¹ Σ_h χ(h^{−r})`, with `dim V` at `k = 0`.
fn fs_restricted(n: usize, k: usize, chi: &dyn ClassFn, r: u32) -> Result<Rational> {
    let grp = leading_symmetric(n, k)?;
    let sum = grp
        .elements()
        .iter()
        .fold(Rational::zero(), |s, h| s + chi.eval(&h.pow(-(r as i64))));
    Ok(sum / q(grp.order() as i64))
}

/// `FS_r(I_{n,n−1}(V)) = Σ_{2≤s≤n, s|r} FS_r(V|_{𝔖_{n−s}})` for a class
/// function `χ` of `𝔖_{n−2}` on the first `n−2` points.
pub fn fs_r_divisor_sum(n: usize, chi: &dyn ClassFn, r: u32) -> Result<Rational> {
    if n < 2 || r == 0 {
        return Err(Error::Invalid("need n ≥ 2 and r ≥ 1".into()));
    }
    let mut sum = Rational::zero();
    for s in (2..=n).filter(|s| (r as usize).is_multiple_of(*s)) {
        sum += fs_restricted(n, n - s, chi, r)?;
    }
    Ok(sum)
}

/// `R^r_H` as a class function on `H`.
pub fn root_number_function(h: Arc<PermGroup>, r: u32) -> ClassFunction {
    let classes = h.conjugacy_classes();
    let mut counts = vec![0u64; classes.classes.len()];
    for c in h.elements() {
        let p = c.pow(r as i64);
        let idx = h.index_of(&p).expect("closed under powers");
        counts[classes.class_of[idx]] += 1;
    }
    let values = counts
        .into_iter()
        .zip(&classes.classes)
        .map(|(c, members)| q(c as i64) / q(members.len() as i64))
        .collect();
    ClassFunction::new(h, values).expect("one value per class")
}

/// `R^r_{𝔖_n}(1)` through `Σ_{1≤s≤n, s|r} (n−1)!/(n−s)! R^r_{𝔖_{n−s}}(1)`.
pub fn recurrence_rr(n: usize, r: u32) -> Result<u128> {
    Ok(recurrence_table(n, r)?[n])
}

/// `R^r_{𝔖_m}(1)` for `m = 0..=n`.
pub fn recurrence_table(n: usize, r: u32) -> Result<Vec<u128>> {
    if r == 0 {
        return Err(Error::Invalid("r must be positive".into()));
    }
    let mut table = vec![1u128; n + 1];
    for m in 1..=n {
        let mut sum = 0u128;
        for s in (1..=m).filter(|s| (r as usize).is_multiple_of(*s)) {
            let coeff = falling_factorial(m - 1, s - 1).ok_or(Error::Overflow("falling factorial"))?;
            sum = coeff
                .checked_mul(table[m - s])
                .and_then(|v| v.checked_add(sum))
                .ok_or(Error::Overflow("root number"))?;
        }
        table[m] = sum;
    }
    Ok(table)
}

/// Both sides of the induced-character identity for `b = (n−1 n)`.
#[derive(Clone, Debug)]
pub struct CosetRootsSn {
    pub n: usize,
    pub r: u32,
    /// `Σ_{2≤s≤n, s|r} (n−2)!/(n−s)! R^r_{𝔖_{n−s}}(1)`.
    pub count: u128,
    /// `R^r_{𝔖_n,(n−1 n)𝔖_{n−1}}` restricted to `𝔖_{n−2}`, by counting.
    pub lhs: ClassFunction,
    /// `Σ_s Ind_{𝔖_{n−s}}^{𝔖_{n−2}} R^r_{𝔖_{n−s}}`.
    pub rhs: ClassFunction,
    pub multiplicities: Vec<(ProductCharacter, Rational)>,
}

impl CosetRootsSn {
    pub fn identity_holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn is_character(&self) -> bool {
        self.multiplicities
            .iter()
            .all(|(_, m)| m.is_integer() && *m >= Rational::zero())
    }
}

pub fn coset_roots_sn(n: usize, r: u32) -> Result<CosetRootsSn> {
    if n < 2 || r == 0 {
        return Err(Error::Invalid("need n ≥ 2 and r ≥ 1".into()));
    }
    let table = recurrence_table(n, r)?;
    let mut count = 0u128;
    for s in (2..=n).filter(|s| (r as usize).is_multiple_of(*s)) {
        count += falling_factorial(n - 2, s - 2).ok_or(Error::Overflow("falling factorial"))? * table[n - s];
    }

    let k = leading_symmetric(n, n - 2)?;
    let h = leading_symmetric(n, n - 1)?;
    let b = Permutation::transposition(n, n - 2, n - 1);
    let classes = k.conjugacy_classes();
    let mut counts = vec![0i64; classes.classes.len()];
    for hh in h.elements() {
        let c = b.mul(hh);
        let p = c.pow(r as i64);
        if let Some(idx) = k.index_of(&p) {
            counts[classes.class_of[idx]] += 1;
        }
    }
    // counts are per element; class function value is the per-element count
    let mut values = vec![Rational::zero(); counts.len()];
    for (cl, members) in classes.classes.iter().enumerate() {
        values[cl] = q(counts[cl]) / q(members.len() as i64);
    }
    let lhs = ClassFunction::new(k.clone(), values)?;

    let mut rhs = ClassFunction::zero(k.clone());
    for s in (2..=n).filter(|s| (r as usize).is_multiple_of(*s)) {
        let sub = leading_symmetric(n, n - s)?;
        rhs = rhs.add(&root_number_function(sub, r).induce(k.clone())?)?;
    }
    let multiplicities = multiplicities(&lhs)?;
    Ok(CosetRootsSn {
        n,
        r,
        count,
        lhs,
        rhs,
        multiplicities,
    })
}

/// One double coset's contribution to `R^r_G(1)`.
#[derive(Clone, Debug)]
pub struct DoubleCosetTerm {
    pub representative: Permutation,
    pub multiplicity: u128,
    pub count: u128,
}

#[derive(Clone, Debug)]
pub struct DoubleCosetSum {
    pub terms: Vec<DoubleCosetTerm>,
    pub total: u128,
}

/// `Σ_{HbH} |H|/|H ∩ bHb⁻¹| · R^r_{G,bH}(1)` with the per-coset count
/// supplied by `count`.
pub fn sum_over_double_cosets(
    g: &PermGroup,
    h: &PermGroup,
    count: impl Fn(&Permutation) -> Result<u128> + Sync,
) -> Result<DoubleCosetSum> {
    let dec = g.coset_decomposition(h, CosetSide::Double)?;
    let terms: Vec<DoubleCosetTerm> = dec
        .reps
        .par_iter()
        .map(|&bi| {
            let b = g.element(bi).clone();
            let conj = h.conjugate_subgroup(&b);
            let meet = h.intersection(&conj)?;
            Ok(DoubleCosetTerm {
                multiplicity: (h.order() / meet.order()) as u128,
                count: count(&b)?,
                representative: b,
            })
        })
        .collect::<Result<_>>()?;
    let total = terms.iter().map(|t| t.multiplicity * t.count).sum();
    Ok(DoubleCosetSum { terms, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{partitions, twist_by_psi};
    use crate::perm::Partition;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn sym(n: usize) -> Arc<PermGroup> {
        Arc::new(PermGroup::symmetric(n).unwrap())
    }

    #[test]
    fn fs_formula_examples() {
        let g = sym(3);
        let h = Arc::new(PermGroup::symmetric_on(3, &[0, 1]).unwrap());
        let x = GSet::coset_space(g.clone(), h.clone()).unwrap();
        let k = Arc::new(x.pair_stabilizer(0, 0));
        let triv = ClassFunction::trivial(k.clone());
        assert_eq!(fs_formula(&x, 0, 0, &triv, 1), q(1));

        let x = GSet::ordered_set_partitions(g, &Composition::new(vec![1, 1, 1]).unwrap()).unwrap();
        let y = x.image_of_base(&perm(3, "(1 2 3)")).unwrap();
        let k = Arc::new(x.pair_stabilizer(0, y));
        assert_eq!(fs_formula(&x, 0, y, &ClassFunction::trivial(k), 2), q(0));
    }

    #[test]
    fn twisted_examples() {
        let k = sym(4);
        for lam in partitions(4) {
            let chi = ProductCharacter::new(vec![(0..4).collect()], vec![lam]).unwrap();
            assert_eq!(twisted_fs2(&k, &chi, &Permutation::identity(4)).unwrap(), q(1));
        }
        let triv = Arc::new(PermGroup::trivial(3));
        let t = perm(3, "(1 2)");
        assert_eq!(twisted_fs2(&triv, &ClassFunction::trivial(triv.clone()), &t).unwrap(), q(1));

        // 𝔖₂ × 𝔖₂ with the factors swapped
        let k = Arc::new(PermGroup::close(4, vec![perm(4, "(1 2)"), perm(4, "(3 4)")]).unwrap());
        let t = perm(4, "(1 3)(2 4)");
        let chi = ProductCharacter::new(
            vec![vec![0, 1], vec![2, 3]],
            vec![Partition::new(vec![1, 1]).unwrap(), Partition::new(vec![2]).unwrap()],
        )
        .unwrap();
        assert_eq!(twisted_fs2(&k, &chi, &t).unwrap(), q(0));
        assert!(matches!(
            twisted_fs2(&k, &chi, &perm(4, "(1 3)")),
            Err(Error::OuterInvolution)
        ));
    }

    #[test]
    fn fs2_young_examples() {
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let diag = CompositionMatrix::new(alpha.clone(), vec![vec![2, 0], vec![0, 2]]).unwrap();
        for lm in PartitionMatrix::all(&diag) {
            assert_eq!(fs2_young(&diag, &lm).unwrap(), 1);
        }
        let ones = CompositionMatrix::new(alpha, vec![vec![1, 1], vec![1, 1]]).unwrap();
        let lm = &PartitionMatrix::all(&ones)[0];
        assert_eq!(fs2_young(&ones, lm).unwrap(), 1);
        assert!(fs2_young(&diag, lm).is_err());
        let a = Composition::new(vec![2, 1]).unwrap();
        let skew = CompositionMatrix::new(a, vec![vec![1, 1], vec![0, 1]]);
        if let Ok(skew) = skew {
            assert!(!skew.is_symmetric());
            for lm in PartitionMatrix::all(&skew) {
                assert_eq!(fs2_young(&skew, &lm).unwrap(), 0);
            }
        }
    }

    #[test]
    fn young_triple_on_small_cases() {
        for (n, alpha) in [(3, vec![1, 1, 1]), (4, vec![2, 2]), (4, vec![2, 1, 1])] {
            let g = sym(n);
            let comp = Composition::new(alpha).unwrap();
            let x = GSet::ordered_set_partitions(g, &comp).unwrap();
            for o in x.orbitals() {
                let (a, y) = o.base;
                let data = x.two_point_stabilizer(a, y).unwrap();
                let young = data.young.unwrap();
                for lm in PartitionMatrix::all(&young.gamma) {
                    let chi = twist_by_psi(lm.character_on(&young.intervals).unwrap(), &young);
                    let v = fs_formula(&x, a, y, &chi, 2);
                    assert_eq!(v, q(fs2_young(&young.gamma, &lm).unwrap()));
                    if let Some((_, t)) = &young.transposer {
                        assert_eq!(twisted_fs2(&data.k, &chi, t).unwrap(), v);
                        // independence of the transposer within tK
                        for kk in data.k.elements().iter().take(4) {
                            assert_eq!(twisted_fs2(&data.k, &chi, &t.mul(kk)).unwrap(), v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let a = Composition::new(vec![3, 1]).unwrap();
        assert_eq!(involutions_in_young_coset(&a, &perm(4, "(3 4)")).unwrap(), 2);
        let a = Composition::new(vec![2, 2]).unwrap();
        assert_eq!(involutions_in_young_coset(&a, &perm(4, "(2 3)")).unwrap(), 1);
        for alpha in [vec![4], vec![2, 2], vec![3, 1], vec![1, 2, 1]] {
            let c = Composition::new(alpha.clone()).unwrap();
            let expected: u128 = alpha.iter().map(|&m| stab_total(m)).product();
            assert_eq!(involutions_in_young_coset(&c, &Permutation::identity(4)).unwrap(), expected);
        }
        assert_eq!(involutions_bs(4, 3, &perm(4, "(3 4)")).unwrap(), 2);
        assert_eq!(involutions_bss(4, 2, &perm(4, "(2 3)")).unwrap(), 1);
        let a = Composition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(involutions_in_young_coset(&a, &perm(3, "(1 2 3)")).unwrap(), 0);
    }

    #[test]
    fn expansion_example() {
        let g = sym(4);
        let h = Arc::new(PermGroup::symmetric_on(4, &[0, 1, 2]).unwrap());
        let e = coset_root_expansion(g, h, &perm(4, "(3 4)"), 2).unwrap();
        assert_eq!(e.evaluate(&Permutation::identity(4)), q(2));
        assert_eq!(e.evaluate(&perm(4, "(1 2)")), q(0));
        assert_eq!(e.evaluate(&perm(4, "(1 3)")), q(0));
    }

    #[test]
    fn divisor_sum_examples() {
        for n in 3..=6 {
            let k = leading_symmetric(n, n - 2).unwrap();
            let triv = ClassFunction::trivial(k);
            assert_eq!(fs_r_divisor_sum(n, &triv, 2).unwrap(), q(1));
        }
        let k = leading_symmetric(4, 2).unwrap();
        assert_eq!(fs_r_divisor_sum(4, &ClassFunction::trivial(k), 5).unwrap(), q(0));
        let k = leading_symmetric(5, 3).unwrap();
        assert_eq!(fs_r_divisor_sum(5, &ClassFunction::trivial(k), 6).unwrap(), q(2));
    }

    #[test]
    fn coset_roots_examples() {
        assert_eq!(coset_roots_sn(3, 2).unwrap().count, 1);
        let c = coset_roots_sn(4, 2).unwrap();
        assert_eq!(c.count, 2);
        assert!(c.identity_holds());
        assert!(c.is_character());
        assert_eq!(coset_roots_sn(5, 1).unwrap().count, 0);
    }

    #[test]
    fn root_number_function_is_per_element() {
        let f = root_number_function(sym(3), 2);
        assert_eq!(f.value_at(&Permutation::identity(3)), q(4));
        assert_eq!(f.value_at(&perm(3, "(1 2)")), q(0));
        assert_eq!(f.value_at(&perm(3, "(1 2 3)")), q(1));
    }

    #[test]
    fn recurrence_examples() {
        let tel: Vec<u128> = (0..=8).map(|n| recurrence_rr(n, 2).unwrap()).collect();
        assert_eq!(tel, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
        assert!((0..=8).all(|n| recurrence_rr(n, 1).unwrap() == 1));
        assert_eq!(recurrence_rr(4, 3).unwrap(), 9);
    }

    #[test]
    fn double_coset_examples() {
        let g = PermGroup::symmetric(4).unwrap();
        let h = PermGroup::young(&Composition::new(vec![2, 2]).unwrap()).unwrap();
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let s = sum_over_double_cosets(&g, &h, |b| involutions_in_young_coset(&alpha, b)).unwrap();
        assert_eq!(s.total, 10);
        let mut contributions: Vec<u128> = s.terms.iter().map(|t| t.multiplicity * t.count).collect();
        contributions.sort();
        assert_eq!(contributions, vec![2, 4, 4]);

        let h = PermGroup::symmetric_on(4, &[0, 1, 2]).unwrap();
        let alpha = Composition::new(vec![3, 1]).unwrap();
        let s = sum_over_double_cosets(&g, &h, |b| involutions_in_young_coset(&alpha, b)).unwrap();
        assert_eq!(s.total, 10);
        let s = sum_over_double_cosets(&g, &g, |_| Ok(10)).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(stab_identity_rhs(4, 2).unwrap(), stab_total(4));
    }
}
