//! Characters of symmetric groups and of products of symmetric groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigUint, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gset::{CompositionMatrix, YoungStabilizer};
use crate::linalg::{q, Rational};
use crate::perm::{Composition, Partition, PermGroup, Permutation};

/// All partitions of `m` in reverse-lexicographic order; `𝒫(0) = {()}`.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unsorted(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// `|STab(λ)|` by the hook-length formula.
///
/// Panics if the count does not fit in 128 bits (never for `|λ| ≤ 34`).
pub fn stab_count(lambda: &Partition) -> u128 {
    let parts = lambda.parts();
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            den *= row - j + conj.parts()[j] - i - 1;
        }
    }
    (num / den).to_u128().expect("standard tableau count exceeds u128")
}

/// `|STab(m)| = Σ_{λ⊢m} |STab(λ)|`.
pub fn stab_total(m: usize) -> u128 {
    partitions(m).iter().map(stab_count).sum()
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_memo() -> &'static RwLock<HashMap<MnKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{}| = {} but |{}| = {}",
            lambda,
            lambda.size(),
            mu,
            mu.size()
        )));
    }
    Ok(mn_rec(lambda.parts(), mu.parts()))
}

fn mn_rec(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    if lambda.len() <= 1 {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = mn_memo().read().expect("memo lock").get(&key) {
        return v;
    }
    let h = mu[0];
    let rest = &mu[1..];
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + len - 1 - i).collect();
    let mut total = 0i64;
    for i in 0..len {
        if beta[i] < h {
            continue;
        }
        let target = beta[i] - h;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let sub: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let v = mn_rec(&sub, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    mn_memo().write().expect("memo lock").insert(key, total);
    total
}

/// Anything that can be evaluated on group elements and is constant on
/// conjugacy classes of its group.
pub trait ClassFn: Send + Sync {
    fn eval(&self, p: &Permutation) -> Rational;
}

/// A rational class function on an enumerated group, one value per class.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<Rational>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(crate::linalg::format_rational).collect();
        write!(f, "ClassFunction[{}]", v.join(", "))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_elements(&other.group) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: Arc<PermGroup>, values: Vec<Rational>) -> Result<Self> {
        let nc = group.conjugacy_classes().len();
        if values.len() != nc {
            return Err(Error::SizeMismatch(format!(
                "{} values for {} classes",
                values.len(),
                nc
            )));
        }
        Ok(ClassFunction { group, values })
    }

    /// Samples `f` on class representatives.
    pub fn from_fn(group: Arc<PermGroup>, f: impl Fn(&Permutation) -> Rational) -> Self {
        let values = group
            .conjugacy_classes()
            .classes
            .iter()
            .map(|c| f(group.element(c[0])))
            .collect();
        ClassFunction { group, values }
    }

    pub fn from_class_fn(group: Arc<PermGroup>, f: &dyn ClassFn) -> Self {
        Self::from_fn(group, |p| f.eval(p))
    }

    pub fn trivial(group: Arc<PermGroup>) -> Self {
        Self::from_fn(group, |_| q(1))
    }

    pub fn zero(group: Arc<PermGroup>) -> Self {
        Self::from_fn(group, |_| q(0))
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_on_class(&self, c: usize) -> &Rational {
        &self.values[c]
    }

    /// Value at an element; zero outside the group.
    pub fn value_at(&self, p: &Permutation) -> Rational {
        match self.group.class_of(p) {
            Some(c) => self.values[c].clone(),
            None => Rational::zero(),
        }
    }

    pub fn degree(&self) -> Rational {
        self.value_at(&Permutation::identity(self.group.degree()))
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group.same_elements(&other.group) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `(f|g)_K = |K|⁻¹ Σ f(a) g(a)`; all values are real here.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Rational> {
        self.check_same(other)?;
        let sizes = self.group.conjugacy_classes().sizes();
        let mut sum = Rational::zero();
        for ((a, b), s) in self.values.iter().zip(&other.values).zip(sizes) {
            sum += a * b * q(s as i64);
        }
        Ok(sum / q(self.group.order() as i64))
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn restrict(&self, sub: Arc<PermGroup>) -> Result<ClassFunction> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup);
        }
        Ok(Self::from_fn(sub, |p| self.value_at(p)))
    }

    /// `Ind(f)(g) = |H|⁻¹ Σ_{x∈G} f°(x⁻¹gx)`.
    pub fn induce(&self, ambient: Arc<PermGroup>) -> Result<ClassFunction> {
        if !self.group.is_subgroup_of(&ambient) {
            return Err(Error::NotSubgroup);
        }
        let h = q(self.group.order() as i64);
        let f = |g: &Permutation| {
            let mut sum = Rational::zero();
            for x in ambient.elements() {
                let c = g.conjugate_by(x);
                if let Some(cl) = self.group.class_of(&c) {
                    sum += &self.values[cl];
                }
            }
            sum / &h
        };
        Ok(Self::from_fn(ambient.clone(), f))
    }
}

impl ClassFn for ClassFunction {
    fn eval(&self, p: &Permutation) -> Rational {
        self.value_at(p)
    }
}

/// `χ_{λ_1} ⊠ ⋯ ⊠ χ_{λ_m}` on `𝔖(S_1) × ⋯ × 𝔖(S_m)`, evaluated blockwise by
/// cycle type, so the product group never has to be enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCharacter {
    pub blocks: Vec<Vec<usize>>,
    pub parts: Vec<Partition>,
}

impl ProductCharacter {
    pub fn new(blocks: Vec<Vec<usize>>, parts: Vec<Partition>) -> Result<Self> {
        if blocks.len() != parts.len() {
            return Err(Error::SizeMismatch("one partition per block".into()));
        }
        for (b, p) in blocks.iter().zip(&parts) {
            if b.len() != p.size() {
                return Err(Error::SizeMismatch(format!(
                    "block of size {} with partition {}",
                    b.len(),
                    p
                )));
            }
        }
        Ok(ProductCharacter { blocks, parts })
    }

    pub fn degree(&self) -> u128 {
        self.parts.iter().map(stab_count).product()
    }

    pub fn value(&self, p: &Permutation) -> i64 {
        let mut v = 1i64;
        for (b, lam) in self.blocks.iter().zip(&self.parts) {
            if lam.size() <= 1 {
                continue;
            }
            v *= mn_rec(lam.parts(), p.cycle_type_on(b).parts());
            if v == 0 {
                break;
            }
        }
        v
    }

    pub fn to_class_function(&self, group: Arc<PermGroup>) -> ClassFunction {
        ClassFunction::from_class_fn(group, self)
    }
}

impl ClassFn for ProductCharacter {
    fn eval(&self, p: &Permutation) -> Rational {
        q(self.value(p))
    }
}

/// All irreducible characters of the product of symmetric groups on the
/// given blocks (empty blocks allowed), in product order of [`partitions`].
pub fn product_characters_on(blocks: &[Vec<usize>]) -> Vec<ProductCharacter> {
    let mut out = vec![Vec::<Partition>::new()];
    for b in blocks {
        let ps = partitions(b.len());
        out = out
            .into_iter()
            .flat_map(|prefix| {
                ps.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|parts| ProductCharacter {
            blocks: blocks.to_vec(),
            parts,
        })
        .collect()
}

/// Irreducible characters of `K₀ = 𝔖_γ`, γ possibly with zero parts.
pub fn product_characters(gamma: &Composition) -> Vec<ProductCharacter> {
    product_characters_on(&gamma.blocks())
}

/// Irreducible characters of `K` when `K` is the full product of the
/// symmetric groups on its orbits.
pub fn irreducibles_of(k: &PermGroup) -> Option<Vec<ProductCharacter>> {
    k.as_product_of_symmetric()
        .map(|orbits| product_characters_on(&orbits))
}

/// `χ^ψ(k) = χ(ψ(k))` for a character of `K₀`.
#[derive(Clone, Debug)]
pub struct TwistedCharacter<'a> {
    pub inner: ProductCharacter,
    pub young: &'a YoungStabilizer,
}

impl ClassFn for TwistedCharacter<'_> {
    fn eval(&self, k: &Permutation) -> Rational {
        self.inner.eval(&self.young.psi(k))
    }
}

pub fn twist_by_psi<'a>(chi: ProductCharacter, young: &'a YoungStabilizer) -> TwistedCharacter<'a> {
    TwistedCharacter { inner: chi, young }
}

/// `Λ = [λ_ij]` with `|λ_ij| = γ_ij`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionMatrix {
    gamma: CompositionMatrix,
    entries: Vec<Vec<Partition>>,
}

impl PartitionMatrix {
    pub fn new(gamma: CompositionMatrix, entries: Vec<Vec<Partition>>) -> Result<Self> {
        let l = gamma.size();
        if entries.len() != l || entries.iter().any(|r| r.len() != l) {
            return Err(Error::SizeMismatch(format!("Λ must be {}x{}", l, l)));
        }
        for i in 0..l {
            for j in 0..l {
                if entries[i][j].size() != gamma.get(i, j) {
                    return Err(Error::SizeMismatch(format!(
                        "|λ_{}{}| = {} but γ_{}{} = {}",
                        i + 1,
                        j + 1,
                        entries[i][j].size(),
                        i + 1,
                        j + 1,
                        gamma.get(i, j)
                    )));
                }
            }
        }
        Ok(PartitionMatrix { gamma, entries })
    }

    /// `𝒫(Γ)` in row-major product order.
    pub fn all(gamma: &CompositionMatrix) -> Vec<PartitionMatrix> {
        let l = gamma.size();
        let blocks: Vec<Vec<usize>> = gamma.flatten().iter().map(|&g| (0..g).collect()).collect();
        product_characters_on(&blocks)
            .into_iter()
            .map(|pc| PartitionMatrix {
                gamma: gamma.clone(),
                entries: pc.parts.chunks(l).map(<[Partition]>::to_vec).collect(),
            })
            .collect()
    }

    pub fn gamma(&self) -> &CompositionMatrix {
        &self.gamma
    }

    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.entries[i][j]
    }

    pub fn flatten(&self) -> Vec<Partition> {
        self.entries.iter().flatten().cloned().collect()
    }

    pub fn transpose(&self) -> PartitionMatrix {
        let l = self.gamma.size();
        PartitionMatrix {
            gamma: self.gamma.transpose(),
            entries: (0..l)
                .map(|i| (0..l).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let l = self.gamma.size();
        (0..l).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// The character `χ_Λ` of `K₀` on the interval blocks `A_ij`.
    pub fn character_on(&self, intervals: &[Vec<usize>]) -> Result<ProductCharacter> {
        ProductCharacter::new(intervals.to_vec(), self.flatten())
    }
}

impl fmt::Display for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", v.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// The character table of `𝔖_n`: rows by [`partitions`], columns by cycle
/// types in the same order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub irreducibles: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn symmetric(n: usize) -> CharacterTable {
        let ps = partitions(n);
        let values = ps
            .iter()
            .map(|l| ps.iter().map(|m| mn_rec(l.parts(), m.parts())).collect())
            .collect();
        CharacterTable {
            n,
            irreducibles: ps.clone(),
            classes: ps,
            values,
        }
    }

    /// `|C_{𝔖_n}(μ)| = Π_k k^{m_k} m_k!`.
    pub fn centralizer_order(mu: &Partition) -> u128 {
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for &p in mu.parts() {
            *counts.entry(p).or_default() += 1;
        }
        counts
            .iter()
            .map(|(&k, &m)| (k as u128).pow(m) * crate::perm::factorial(m as usize).unwrap())
            .product()
    }

    /// A class representative in cycle notation, cycles on consecutive points.
    pub fn class_representative(mu: &Partition) -> Permutation {
        let n = mu.size();
        let mut start = 0;
        let cycles: Vec<Vec<usize>> = mu
            .parts()
            .iter()
            .map(|&p| {
                let c = (start..start + p).collect();
                start += p;
                c
            })
            .collect();
        Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
    }

    /// CSV with class representatives in the header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for mu in &self.classes {
            out.push_str(&format!(",\"{}\"", Self::class_representative(mu).to_cycle_string()));
        }
        out.push('\n');
        for (lam, row) in self.irreducibles.iter().zip(&self.values) {
            out.push_str(&format!("\"{}\"", lam));
            for v in row {
                out.push_str(&format!(",{}", v));
            }
            out.push('\n');
        }
        out
    }
}

/// Multiplicities `(χ | f)` of every irreducible product character.
pub fn multiplicities(f: &ClassFunction) -> Result<Vec<(ProductCharacter, Rational)>> {
    let irr = irreducibles_of(f.group()).ok_or_else(|| {
        Error::CharactersUnavailable("group is not a product of symmetric groups".into())
    })?;
    irr.into_iter()
        .map(|chi| {
            let cf = chi.to_class_function(f.group().clone());
            let m = cf.inner_product(f)?;
            Ok((chi, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Composition;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(1), vec![p(&[1])]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(
            partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=10).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(stab_count(&p(&[2, 1])), 2);
        assert_eq!(stab_count(&p(&[5])), 1);
        assert_eq!(stab_count(&p(&[3, 2])), 5);
        assert_eq!(stab_count(&Partition::empty()), 1);
        let totals: Vec<u128> = (0..=8).map(stab_total).collect();
        assert_eq!(totals, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn rsk_identity() {
        for n in 0..=8 {
            let s: u128 = partitions(n).iter().map(|l| stab_count(l).pow(2)).sum();
            assert_eq!(s, crate::perm::factorial(n).unwrap());
        }
    }

    #[test]
    fn mn_examples() {
        for mu in partitions(3) {
            assert_eq!(mn_character(&p(&[3]), &mu).unwrap(), 1);
        }
        let l = p(&[2, 1]);
        assert_eq!(mn_character(&l, &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&l, &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&l, &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert!(mn_character(&p(&[2]), &p(&[3])).is_err());
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn mn_degree_and_sign() {
        for n in 1..=8 {
            let id = p(&vec![1; n]);
            for l in partitions(n) {
                assert_eq!(mn_character(&l, &id).unwrap() as u128, stab_count(&l));
            }
            let sign = p(&vec![1; n]);
            for mu in partitions(n) {
                let odd = mu.parts().iter().filter(|&&c| c % 2 == 0).count() % 2 == 1;
                assert_eq!(mn_character(&sign, &mu).unwrap(), if odd { -1 } else { 1 });
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn column_and_row_orthogonality() {
        for n in 1..=6 {
            let t = CharacterTable::symmetric(n);
            let nfact = crate::perm::factorial(n).unwrap() as i128;
            for (a, mu) in t.classes.iter().enumerate() {
                for (b, _) in t.classes.iter().enumerate() {
                    let s: i128 = (0..t.irreducibles.len())
                        .map(|l| t.values[l][a] as i128 * t.values[l][b] as i128)
                        .sum();
                    let expected = if a == b { CharacterTable::centralizer_order(mu) as i128 } else { 0 };
                    assert_eq!(s, expected);
                }
            }
            for l1 in 0..t.irreducibles.len() {
                for l2 in 0..t.irreducibles.len() {
                    let s: i128 = t
                        .classes
                        .iter()
                        .enumerate()
                        .map(|(c, mu)| {
                            (nfact / CharacterTable::centralizer_order(mu) as i128)
                                * t.values[l1][c] as i128
                                * t.values[l2][c] as i128
                        })
                        .sum();
                    assert_eq!(s, if l1 == l2 { nfact } else { 0 });
                }
            }
        }
    }

    #[test]
    fn class_function_inner_products() {
        let g = Arc::new(PermGroup::symmetric(4).unwrap());
        let blocks = vec![(0..4).collect::<Vec<_>>()];
        let chars: Vec<ClassFunction> = product_characters_on(&blocks)
            .iter()
            .map(|c| c.to_class_function(g.clone()))
            .collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                assert_eq!(a.inner_product(b).unwrap(), q((i == j) as i64));
            }
        }
        let h = Arc::new(PermGroup::symmetric_on(4, &[0, 1, 2]).unwrap());
        let triv = ClassFunction::trivial(g.clone());
        assert_eq!(triv.restrict(h.clone()).unwrap(), ClassFunction::trivial(h.clone()));
        let f = ClassFunction::trivial(h.clone()).induce(g.clone()).unwrap();
        assert_eq!(f.degree(), q(4));
        let other = Arc::new(PermGroup::symmetric(3).unwrap());
        assert_eq!(
            triv.inner_product(&ClassFunction::trivial(other)),
            Err(Error::AmbientMismatch)
        );
    }

    #[test]
    fn product_character_lists() {
        let zero = product_characters(&Composition::with_zeros(vec![0, 0, 0]));
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].value(&Permutation::identity(0)), 1);
        assert_eq!(product_characters(&Composition::with_zeros(vec![1, 1, 1, 1])).len(), 1);
        let two = product_characters(&Composition::with_zeros(vec![2, 2]));
        assert_eq!(two.len(), 4);
        assert!(two.iter().all(|c| c.degree() == 1));
        let k0 = Arc::new(PermGroup::young(&Composition::new(vec![2, 2]).unwrap()).unwrap());
        let cfs: Vec<ClassFunction> = two.iter().map(|c| c.to_class_function(k0.clone())).collect();
        for (i, a) in cfs.iter().enumerate() {
            for (j, b) in cfs.iter().enumerate() {
                assert_eq!(a.inner_product(b).unwrap(), q((i == j) as i64));
            }
        }
        let irr = irreducibles_of(&k0).unwrap();
        assert_eq!(irr.len(), 4);
    }

    #[test]
    fn partition_matrices() {
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let gamma = CompositionMatrix::new(alpha.clone(), vec![vec![1, 1], vec![1, 1]]).unwrap();
        let all = PartitionMatrix::all(&gamma);
        assert_eq!(all.len(), 1);
        assert!(all[0].is_symmetric());
        let gamma = CompositionMatrix::new(alpha, vec![vec![2, 0], vec![0, 2]]).unwrap();
        let all = PartitionMatrix::all(&gamma);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(PartitionMatrix::is_symmetric));
        let alpha = Composition::new(vec![3, 2]).unwrap();
        let gamma = CompositionMatrix::new(alpha, vec![vec![1, 2], vec![2, 0]]).unwrap();
        let all = PartitionMatrix::all(&gamma);
        assert_eq!(all.len(), 4);
        assert_eq!(all.iter().filter(|l| l.is_symmetric()).count(), 2);
        assert_eq!(all[1].transpose().transpose(), all[1]);
        assert!(PartitionMatrix::new(gamma, vec![vec![p(&[1]), p(&[2])], vec![p(&[2]), p(&[1])]]).is_err());
    }

    #[test]
    fn csv_export() {
        let csv = CharacterTable::symmetric(3).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "lambda,\"(1 2 3)\",\"(1 2)\",\"()\"");
        assert_eq!(lines[2], "\"(2,1)\",-1,0,2");
    }

    fn arb_values(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-5i64..=5, n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn frobenius_reciprocity(fv in arb_values(3), gv in arb_values(7), which in 0usize..3) {
            let g = Arc::new(PermGroup::symmetric(5).unwrap());
            let h = Arc::new(match which {
                0 => PermGroup::symmetric_on(5, &[0, 1, 2]).unwrap(),
                1 => PermGroup::young(&Composition::new(vec![2, 3]).unwrap()).unwrap(),
                _ => PermGroup::close(5, vec![Permutation::parse(5, "(1 2 3 4 5)").unwrap()]).unwrap(),
            });
            let nh = h.conjugacy_classes().len();
            let f = ClassFunction::new(
                h.clone(),
                (0..nh).map(|i| q(fv[i % fv.len()])).collect(),
            ).unwrap();
            let gf = ClassFunction::new(g.clone(), gv.iter().map(|&v| q(v)).collect()).unwrap();
            let lhs = f.induce(g.clone()).unwrap().inner_product(&gf).unwrap();
            let rhs = f.inner_product(&gf.restrict(h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
