//! The group-like face algebra `F(G,X)` as sparse rational combinations of
//! symbols `e^x_y·a`.
//!
//! Product: `(e^x_y a)(e^z_w b) = δ_{x,az} δ_{y,aw} e^x_y ab`.
//! Coproduct: `Δ(e^x_y a) = Σ_z e^x_z a ⊗ e^z_y a`, counit `ε(e^x_y a) = δ_{xy}`,
//! antipode `S(e^x_y a) = a⁻¹ e^y_x`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::perm::{PermGroup, Permutation};
use crate::linalg::{format_rational, q, Rational};

pub const DEFAULT_AMBIENT_CAP: usize = 1_000_000;
const MUL_TABLE_LIMIT: usize = 1 << 26;

/// `e^x_y·a` with `x, y` point indices and `a` an element index of `G`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Symbol {
    pub x: u32,
    pub y: u32,
    pub a: u32,
}

impl Symbol {
    pub fn new(x: usize, y: usize, a: usize) -> Symbol {
        Symbol {
            x: x as u32,
            y: y as u32,
            a: a as u32,
        }
    }
}

pub struct FaceAlgebra {
    gset: Arc<GSet>,
    inverse: Vec<u32>,
    mul: Option<Vec<u32>>,
}

impl fmt::Debug for FaceAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FaceAlgebra")
            .field("group_order", &self.group_order())
            .field("points", &self.points())
            .finish()
    }
}

/// Full multiplication table `t[a·|G| + b] = ab`. Every `b` is reached from
/// the identity by right multiplication with generators, `b = b's`, so row
/// `a` fills in as `ab = (ab')s` from a right-multiplication table.
fn cayley_table(g: &PermGroup) -> Vec<u32> {
    let n = g.order();
    let gens: Vec<&Permutation> = g.generators().iter().collect();
    let right: Vec<Vec<u32>> = (0..n)
        .map(|c| {
            gens.iter()
                .map(|s| g.index_of(&g.element(c).mul(s)).expect("closed group") as u32)
                .collect()
        })
        .collect();
    let id = g.identity_index();
    let mut order = vec![id];
    let mut step: Vec<Option<(u32, u32)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[id] = true;
    let mut head = 0;
    while head < order.len() {
        let b = order[head];
        head += 1;
        for (k, &c) in right[b].iter().enumerate() {
            if !seen[c as usize] {
                seen[c as usize] = true;
                step[c as usize] = Some((b as u32, k as u32));
                order.push(c as usize);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    let mut t = vec![0u32; n * n];
    for a in 0..n {
        let row = a * n;
        t[row + id] = a as u32;
        for &b in &order[1..] {
            let (prev, k) = step[b].expect("reached");
            t[row + b] = right[t[row + prev as usize] as usize][k as usize];
        }
    }
    t
}

impl FaceAlgebra {
    pub fn new(gset: Arc<GSet>) -> Result<Arc<FaceAlgebra>> {
        Self::with_cap(gset, DEFAULT_AMBIENT_CAP)
    }

    /// Rejects ambients whose symbol universe `|X|²|G|` exceeds `cap`.
    pub fn with_cap(gset: Arc<GSet>, cap: usize) -> Result<Arc<FaceAlgebra>> {
        let g = gset.group().clone();
        let size = gset
            .len()
            .checked_mul(gset.len())
            .and_then(|v| v.checked_mul(g.order()))
            .unwrap_or(usize::MAX);
        if size > cap {
            return Err(Error::CapExceeded {
                what: "face algebra |X|^2|G|",
                size,
                cap,
            });
        }
        let n = g.order();
        let inverse = (0..n)
            .map(|i| g.index_of(&g.element(i).inverse()).expect("closed group") as u32)
            .collect();
        let mul = (n * n <= MUL_TABLE_LIMIT).then(|| cayley_table(&g));
        Ok(Arc::new(FaceAlgebra { gset, inverse, mul }))
    }

    pub fn gset(&self) -> &Arc<GSet> {
        &self.gset
    }

    pub fn points(&self) -> usize {
        self.gset.len()
    }

    pub fn group_order(&self) -> usize {
        self.gset.group().order()
    }

    pub fn dimension(&self) -> usize {
        self.points() * self.points() * self.group_order()
    }

    #[inline]
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Some(t) => t[a * self.group_order() + b] as usize,
            None => {
                let g = self.gset.group();
                g.index_of(&g.element(a).mul(g.element(b))).expect("closed group")
            }
        }
    }

    #[inline]
    pub fn inv_index(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow_index(&self, a: usize, r: i64) -> usize {
        let base = if r < 0 { self.inv_index(a) } else { a };
        let mut acc = self.gset.group().identity_index();
        for _ in 0..r.unsigned_abs() {
            acc = self.mul_index(acc, base);
        }
        acc
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.gset.act(a, x)
    }

    /// The product of two symbols, or `None` when it vanishes.
    #[inline]
    pub fn symbol_product(&self, s: Symbol, t: Symbol) -> Option<Symbol> {
        let a = s.a as usize;
        (s.x as usize == self.act(a, t.x as usize) && s.y as usize == self.act(a, t.y as usize))
            .then(|| Symbol {
                x: s.x,
                y: s.y,
                a: self.mul_index(a, t.a as usize) as u32,
            })
    }
}

/// Sparse element of `F(G,X)`; zero coefficients are never stored.
#[derive(Clone)]
pub struct FaceElement {
    algebra: Arc<FaceAlgebra>,
    terms: BTreeMap<Symbol, Rational>,
}

impl PartialEq for FaceElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for FaceElement {}

impl std::hash::Hash for FaceElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for FaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{}·e^{}_{}[{}]", format_rational(c), s.x, s.y, s.a))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn accumulate(terms: &mut BTreeMap<Symbol, Rational>, s: Symbol, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(s) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Numbers distinct coefficient values on first sight. Runs of equal
/// values skip the hash lookup.
#[derive(Default)]
struct Interner<'a> {
    ids: HashMap<&'a Rational, u32>,
    values: Vec<&'a Rational>,
    last: Option<(&'a Rational, u32)>,
}

impl<'a> Interner<'a> {
    fn id(&mut self, c: &'a Rational) -> u32 {
        if let Some((v, id)) = self.last {
            if v == c {
                return id;
            }
        }
        let values = &mut self.values;
        let id = *self.ids.entry(c).or_insert_with(|| {
            values.push(c);
            (values.len() - 1) as u32
        });
        self.last = Some((c, id));
        id
    }
}

impl FaceAlgebra {
    pub fn element(self: &Arc<Self>, terms: impl IntoIterator<Item = (Symbol, Rational)>) -> FaceElement {
        let mut map = BTreeMap::new();
        for (s, c) in terms {
            accumulate(&mut map, s, c);
        }
        FaceElement {
            algebra: self.clone(),
            terms: map,
        }
    }

    pub fn zero(self: &Arc<Self>) -> FaceElement {
        self.element([])
    }

    pub fn symbol(self: &Arc<Self>, x: usize, y: usize, a: usize) -> FaceElement {
        self.element([(Symbol::new(x, y, a), q(1))])
    }

    /// `e^x_y = e^x_y·1`.
    pub fn idempotent(self: &Arc<Self>, x: usize, y: usize) -> FaceElement {
        self.symbol(x, y, self.gset.group().identity_index())
    }

    /// `a = Σ_{x,y} e^x_y a`.
    pub fn group_element(self: &Arc<Self>, a: usize) -> FaceElement {
        let n = self.points();
        self.element((0..n).flat_map(|x| (0..n).map(move |y| (Symbol::new(x, y, a), q(1)))))
    }

    pub fn unit(self: &Arc<Self>) -> FaceElement {
        self.group_element(self.gset.group().identity_index())
    }

    /// `∫ = |G|⁻¹ Σ_{a,x} e^x_x a`.
    pub fn integral(self: &Arc<Self>) -> FaceElement {
        let c = Rational::new(1.into(), (self.group_order() as i64).into());
        let n = self.points();
        let mut terms = Vec::with_capacity(n * self.group_order());
        for a in 0..self.group_order() {
            for x in 0..n {
                terms.push((Symbol::new(x, x, a), c.clone()));
            }
        }
        self.element(terms)
    }

    /// `∫^[r]`: the integral itself for `r = 1`, otherwise
    /// [`FaceAlgebra::integral_r_formula`].
    pub fn integral_r_closed(self: &Arc<Self>, r: u32) -> FaceElement {
        if r == 1 {
            self.integral()
        } else {
            self.integral_r_formula(r)
        }
    }

    /// `|G|⁻¹ Σ_{a,x} δ_{x,a^r x} e^x_{a⁻¹x} a^r`.
    ///
    /// For `r = 1` this keeps only the terms `e^x_x a` with `a ∈ G_x`, so it
    /// differs from `∫` while having the same trace on every module.
    pub fn integral_r_formula(self: &Arc<Self>, r: u32) -> FaceElement {
        let c = Rational::new(1.into(), (self.group_order() as i64).into());
        let mut terms = Vec::new();
        for a in 0..self.group_order() {
            let ar = self.pow_index(a, r as i64);
            let ainv = self.inv_index(a);
            for x in 0..self.points() {
                if self.act(ar, x) == x {
                    terms.push((Symbol::new(x, self.act(ainv, x), ar), c.clone()));
                }
            }
        }
        self.element(terms)
    }

    /// The same element written `|G|⁻¹ Σ δ_{x,a^r x} a^r e^x_{a⁻¹x}`, each
    /// summand formed by an actual product in the algebra.
    pub fn integral_r_closed_left(self: &Arc<Self>, r: u32) -> FaceElement {
        let c = Rational::new(1.into(), (self.group_order() as i64).into());
        let mut out = self.zero();
        for a in 0..self.group_order() {
            let ar = self.pow_index(a, r as i64);
            let ainv = self.inv_index(a);
            let g = self.group_element(ar);
            for x in 0..self.points() {
                if self.act(ar, x) == x {
                    let e = self.idempotent(x, self.act(ainv, x));
                    out = out.add(&g.mul(&e).expect("same ambient").scale(&c)).expect("same ambient");
                }
            }
        }
        out
    }

    /// `m^{(r)} ∘ Δ^{(r)}` applied to `∫`.
    pub fn integral_r_composed(self: &Arc<Self>, r: u32) -> FaceElement {
        self.integral().power_of_coproduct(r)
    }
}

/// Element of `F ⊗ F`, as a sparse map on symbol pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    pub terms: BTreeMap<(Symbol, Symbol), Rational>,
}

pub type TripleTensor = BTreeMap<(Symbol, Symbol, Symbol), Rational>;

fn add_triple(map: &mut TripleTensor, k: (Symbol, Symbol, Symbol), c: Rational) {
    let e = map.entry(k).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&k);
    }
}

impl TensorElement {
    /// `(Δ ⊗ id)` of this element.
    pub fn expand_left(&self, alg: &FaceAlgebra) -> TripleTensor {
        let mut out = TripleTensor::new();
        for (&(s, t), c) in &self.terms {
            for z in 0..alg.points() {
                let s1 = Symbol { x: s.x, y: z as u32, a: s.a };
                let s2 = Symbol { x: z as u32, y: s.y, a: s.a };
                add_triple(&mut out, (s1, s2, t), c.clone());
            }
        }
        out
    }

    /// `(id ⊗ Δ)` of this element.
    pub fn expand_right(&self, alg: &FaceAlgebra) -> TripleTensor {
        let mut out = TripleTensor::new();
        for (&(s, t), c) in &self.terms {
            for z in 0..alg.points() {
                let t1 = Symbol { x: t.x, y: z as u32, a: t.a };
                let t2 = Symbol { x: z as u32, y: t.y, a: t.a };
                add_triple(&mut out, (s, t1, t2), c.clone());
            }
        }
        out
    }

    /// `(ε ⊗ id)` of this element.
    pub fn counit_left(&self, alg: &Arc<FaceAlgebra>) -> FaceElement {
        alg.element(
            self.terms
                .iter()
                .filter(|((s, _), _)| s.x == s.y)
                .map(|(&(_, t), c)| (t, c.clone())),
        )
    }

    /// `(id ⊗ ε)` of this element.
    pub fn counit_right(&self, alg: &Arc<FaceAlgebra>) -> FaceElement {
        alg.element(
            self.terms
                .iter()
                .filter(|((_, t), _)| t.x == t.y)
                .map(|(&(s, _), c)| (s, c.clone())),
        )
    }
}

impl FaceElement {
    pub fn algebra(&self) -> &Arc<FaceAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Symbol, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Symbol) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    fn check(&self, other: &FaceElement) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &FaceElement) -> Result<FaceElement> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (&s, c) in &other.terms {
            accumulate(&mut terms, s, c.clone());
        }
        Ok(FaceElement {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &FaceElement) -> Result<FaceElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> FaceElement {
        self.algebra
            .element(self.terms.iter().map(|(&s, v)| (s, v * c)))
    }

    /// Bilinear product. Each term `e^x_y a` of `self` meets only the terms
    /// of `other` with `z = a⁻¹x`, `w = a⁻¹y`, a contiguous range in symbol
    /// order; when `other` is much shorter, each of its terms `e^z_w b` is
    /// matched against `e^{az}_{aw} a` for every `a` instead. Contributions are counted per pair of coefficient values and
    /// the rational arithmetic is done once per output symbol and pair.
    pub fn mul(&self, other: &FaceElement) -> Result<FaceElement> {
        self.check(other)?;
        let alg = &self.algebra;
        let mut left = Interner::default();
        let mut right = Interner::default();
        let mut raw: Vec<(Symbol, u32, u32)> = Vec::new();
        if other.terms.len().saturating_mul(alg.group_order()) < self.terms.len() {
            for (t, d) in &other.terms {
                let j = right.id(d);
                for a in 0..alg.group_order() {
                    let key = Symbol::new(alg.act(a, t.x as usize), alg.act(a, t.y as usize), a);
                    if let Some(c) = self.terms.get(&key) {
                        let sym = Symbol {
                            a: alg.mul_index(a, t.a as usize) as u32,
                            ..key
                        };
                        raw.push((sym, left.id(c), j));
                    }
                }
            }
        } else {
            for (s, c) in &self.terms {
                let i = left.id(c);
                let ainv = alg.inv_index(s.a as usize);
                let z = alg.act(ainv, s.x as usize) as u32;
                let w = alg.act(ainv, s.y as usize) as u32;
                let lo = Symbol { x: z, y: w, a: 0 };
                let hi = Symbol { x: z, y: w, a: u32::MAX };
                for (t, d) in other.terms.range(lo..=hi) {
                    let sym = Symbol {
                        x: s.x,
                        y: s.y,
                        a: alg.mul_index(s.a as usize, t.a as usize) as u32,
                    };
                    raw.push((sym, i, right.id(d)));
                }
            }
        }
        raw.sort_unstable();
        let mut products: HashMap<(u32, u32), Rational> = HashMap::new();
        let mut last: Option<((u32, u32), Rational)> = None;
        let mut product = |i: u32, j: u32| -> Rational {
            if let Some((key, v)) = &last {
                if *key == (i, j) {
                    return v.clone();
                }
            }
            let v = products
                .entry((i, j))
                .or_insert_with(|| left.values[i as usize] * right.values[j as usize])
                .clone();
            last = Some(((i, j), v.clone()));
            v
        };
        let mut merged: Vec<(Symbol, Rational)> = Vec::new();
        for group in raw.chunk_by(|p, q| p.0 == q.0) {
            let mut acc: Option<Rational> = None;
            for run in group.chunk_by(|p, q| p == q) {
                let (_, i, j) = run[0];
                let mut v = product(i, j);
                if run.len() > 1 {
                    v *= Rational::from_integer(run.len().into());
                }
                acc = Some(match acc {
                    None => v,
                    Some(a) => a + v,
                });
            }
            if let Some(v) = acc.filter(|v| !v.is_zero()) {
                merged.push((group[0].0, v));
            }
        }
        let terms: BTreeMap<Symbol, Rational> = merged.into_iter().collect();
        Ok(FaceElement {
            algebra: alg.clone(),
            terms,
        })
    }

    pub fn counit(&self) -> Rational {
        self.terms
            .iter()
            .filter(|(s, _)| s.x == s.y)
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn coproduct(&self) -> TensorElement {
        let mut terms = BTreeMap::new();
        for (s, c) in &self.terms {
            for z in 0..self.algebra.points() as u32 {
                let l = Symbol { x: s.x, y: z, a: s.a };
                let r = Symbol { x: z, y: s.y, a: s.a };
                terms.insert((l, r), c.clone());
            }
        }
        TensorElement { terms }
    }

    /// `S(e^x_y a) = a⁻¹ e^y_x = e^{a⁻¹y}_{a⁻¹x} a⁻¹`.
    pub fn antipode(&self) -> FaceElement {
        let alg = &self.algebra;
        alg.element(self.terms.iter().map(|(s, c)| {
            let ainv = alg.inv_index(s.a as usize);
            (
                Symbol::new(alg.act(ainv, s.y as usize), alg.act(ainv, s.x as usize), ainv),
                c.clone(),
            )
        }))
    }

    /// `ε^L(e^p_q a) = δ_{pq} Σ_y e^p_y`.
    pub fn epsilon_l(&self) -> FaceElement {
        let alg = &self.algebra;
        let id = alg.gset().group().identity_index();
        let n = alg.points();
        alg.element(
            self.terms
                .iter()
                .filter(|(s, _)| s.x == s.y)
                .flat_map(|(s, c)| (0..n).map(move |y| (Symbol::new(s.x as usize, y, id), c.clone()))),
        )
    }

    /// `ε^R(e^p_q a) = δ_{pq} Σ_x e^x_{a⁻¹p}`.
    pub fn epsilon_r(&self) -> FaceElement {
        let alg = &self.algebra;
        let id = alg.gset().group().identity_index();
        let n = alg.points();
        alg.element(self.terms.iter().filter(|(s, _)| s.x == s.y).flat_map(|(s, c)| {
            let z = alg.act(alg.inv_index(s.a as usize), s.x as usize);
            (0..n).map(move |x| (Symbol::new(x, z, id), c.clone()))
        }))
    }

    /// `m^{(r)} ∘ Δ^{(r)}` of this element, folding the product into the
    /// iterated coproduct one tensor factor at a time. For each term
    /// `e^x_y a`, partial products are kept together with the upper index of
    /// the pending factor; a branch is dropped as soon as its product
    /// vanishes.
    pub fn power_of_coproduct(&self, r: u32) -> FaceElement {
        assert!(r >= 1, "r must be positive");
        let alg = &self.algebra;
        let n = alg.points() as u32;
        let mut terms = BTreeMap::new();
        for (s, c) in &self.terms {
            // (prefix product, upper index of the next factor)
            let mut states: Vec<(Option<Symbol>, u32)> = vec![(None, s.x)];
            for step in 1..=r {
                let mut next = Vec::new();
                for (prefix, upper) in states {
                    let lowers: Vec<u32> = if step == r { vec![s.y] } else { (0..n).collect() };
                    for lower in lowers {
                        let factor = Symbol { x: upper, y: lower, a: s.a };
                        let p = match prefix {
                            None => Some(factor),
                            Some(pp) => alg.symbol_product(pp, factor),
                        };
                        if let Some(p) = p {
                            next.push((Some(p), lower));
                        }
                    }
                }
                states = next;
            }
            for (p, _) in states {
                accumulate(&mut terms, p.expect("r >= 1"), c.clone());
            }
        }
        FaceElement {
            algebra: alg.clone(),
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Composition, PermGroup};

    fn ambient_cosets(n: usize, h_points: &[usize]) -> Arc<FaceAlgebra> {
        let g = Arc::new(PermGroup::symmetric(n).unwrap());
        let h = Arc::new(PermGroup::symmetric_on(n, h_points).unwrap());
        FaceAlgebra::new(Arc::new(GSet::coset_space(g, h).unwrap())).unwrap()
    }

    fn s3_on_3() -> Arc<FaceAlgebra> {
        ambient_cosets(3, &[0, 1])
    }

    fn s2_on_2() -> Arc<FaceAlgebra> {
        ambient_cosets(2, &[])
    }

    fn all_symbols(alg: &Arc<FaceAlgebra>) -> Vec<Symbol> {
        let n = alg.points();
        let mut v = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for a in 0..alg.group_order() {
                    v.push(Symbol::new(x, y, a));
                }
            }
        }
        v
    }

    #[test]
    fn symbol_products() {
        let alg = s2_on_2();
        let s = 1;
        let x = 0;
        let y = alg.act(s, x);
        assert_ne!(x, y);
        let p = alg.symbol(x, y, s).mul(&alg.symbol(y, x, s)).unwrap();
        assert_eq!(p, alg.idempotent(x, y));
        // x ≠ a z kills the product
        let p = alg.symbol(x, x, 0).mul(&alg.symbol(y, x, 0)).unwrap();
        assert!(p.is_zero());
        for sym in all_symbols(&alg) {
            let e = alg.element([(sym, q(1))]);
            assert_eq!(alg.unit().mul(&e).unwrap(), e);
            assert_eq!(e.mul(&alg.unit()).unwrap(), e);
        }
        let other = s2_on_2();
        assert_eq!(alg.unit().mul(&other.unit()), Err(Error::AmbientMismatch));
    }

    #[test]
    fn associativity_on_basis() {
        let alg = s3_on_3();
        let syms = all_symbols(&alg);
        let el: Vec<FaceElement> = syms.iter().map(|&s| alg.element([(s, q(1))])).collect();
        for a in el.iter().step_by(3) {
            for b in el.iter().step_by(2) {
                let ab = a.mul(b).unwrap();
                for c in el.iter().step_by(5) {
                    assert_eq!(ab.mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn coalgebra_laws() {
        let alg = s3_on_3();
        for sym in all_symbols(&alg) {
            let e = alg.element([(sym, q(1))]);
            assert_eq!(e.counit(), q((sym.x == sym.y) as i64));
            let d = e.coproduct();
            assert_eq!(d.expand_left(&alg), d.expand_right(&alg));
            assert_eq!(d.counit_left(&alg), e);
            assert_eq!(d.counit_right(&alg), e);
            assert_eq!(e.antipode().antipode(), e);
        }
    }

    #[test]
    fn antipode_matches_product_form() {
        let alg = s3_on_3();
        for sym in all_symbols(&alg) {
            let ainv = alg.inv_index(sym.a as usize);
            let lit = alg
                .group_element(ainv)
                .mul(&alg.idempotent(sym.y as usize, sym.x as usize))
                .unwrap();
            assert_eq!(alg.element([(sym, q(1))]).antipode(), lit);
        }
    }

    /// `ε^L` and `ε^R` straight from their defining sums.
    fn epsilon_l_literal(a: &FaceElement) -> FaceElement {
        let alg = a.algebra();
        let n = alg.points();
        let mut out = alg.zero();
        for x in 0..n {
            for z in 0..n {
                let c = alg.idempotent(x, z).mul(a).unwrap().counit();
                if c.is_zero() {
                    continue;
                }
                for y in 0..n {
                    out = out.add(&alg.idempotent(z, y).scale(&c)).unwrap();
                }
            }
        }
        out
    }

    fn epsilon_r_literal(a: &FaceElement) -> FaceElement {
        let alg = a.algebra();
        let n = alg.points();
        let mut out = alg.zero();
        for z in 0..n {
            for y in 0..n {
                let c = a.mul(&alg.idempotent(z, y)).unwrap().counit();
                if c.is_zero() {
                    continue;
                }
                for x in 0..n {
                    out = out.add(&alg.idempotent(x, z).scale(&c)).unwrap();
                }
            }
        }
        out
    }

    #[test]
    fn epsilon_maps_and_integral_identity() {
        let alg = s3_on_3();
        let int = alg.integral();
        assert_eq!(alg.unit().epsilon_l(), alg.unit());
        assert_eq!(int.epsilon_l(), alg.unit());
        assert_eq!(int.mul(&int).unwrap(), int);
        for sym in all_symbols(&alg) {
            let e = alg.element([(sym, q(1))]);
            assert_eq!(e.epsilon_l(), epsilon_l_literal(&e));
            assert_eq!(e.epsilon_r(), epsilon_r_literal(&e));
            assert_eq!(e.mul(&int).unwrap(), e.epsilon_l().mul(&int).unwrap());
            assert_eq!(int.mul(&e).unwrap(), int.mul(&e.epsilon_r()).unwrap());
        }
    }

    #[test]
    fn integral_powers_agree() {
        for alg in [s2_on_2(), s3_on_3(), ambient_cosets(3, &[])] {
            assert_eq!(alg.integral_r_closed(1), alg.integral());
            assert_eq!(alg.integral_r_composed(1), alg.integral());
            for r in 1..=8 {
                let closed = alg.integral_r_closed(r);
                assert_eq!(closed, alg.integral_r_composed(r), "r = {}", r);
                if r > 1 {
                    assert_eq!(closed, alg.integral_r_closed_left(r), "r = {}", r);
                }
            }
            assert_eq!(alg.integral_r_formula(1), alg.integral_r_closed_left(1));
        }
        let alg = s3_on_3();
        assert_ne!(alg.integral_r_formula(1), alg.integral());
    }

    #[test]
    fn integral_powers_are_central() {
        let alg = s3_on_3();
        let g = alg.gset().group().clone();
        let int = alg.integral();
        let e = alg.idempotent(0, 0);
        assert_ne!(int.mul(&e).unwrap(), e.mul(&int).unwrap());
        for r in 1..=6 {
            let s = alg.integral_r_formula(r);
            for gen in g.generators() {
                let c = alg.group_element(g.index_of(gen).unwrap());
                assert_eq!(s.mul(&c).unwrap(), c.mul(&s).unwrap());
            }
            for y in 0..alg.points() {
                for z in 0..alg.points() {
                    let e = alg.idempotent(y, z);
                    assert_eq!(s.mul(&e).unwrap(), e.mul(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn ambient_cap() {
        let g = Arc::new(PermGroup::symmetric(5).unwrap());
        let x = Arc::new(
            GSet::ordered_set_partitions(g, &Composition::new(vec![1, 1, 1, 1, 1]).unwrap()).unwrap(),
        );
        assert!(matches!(
            FaceAlgebra::new(x.clone()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(FaceAlgebra::with_cap(x, 2_000_000).is_ok());
    }

    #[test]
    fn powers_of_group_elements() {
        let alg = s3_on_3();
        let g = alg.gset().group();
        for a in 0..g.order() {
            for r in -3..=4i64 {
                assert_eq!(g.element(alg.pow_index(a, r)), &g.element(a).pow(r));
            }
        }
    }
}
