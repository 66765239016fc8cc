//! Finite left G-sets, orbitals, two-point stabilizers and the block
//! bookkeeping for the G-set of ordered set partitions `binom([n], α)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{Composition, CosetSide, PermGroup, Permutation};

/// Dense action tables are stored up to this many `(g, x)` entries.
pub const DENSE_ACTION_LIMIT: usize = 10_000_000;

/// An ordered tuple of disjoint blocks covering `{0..n}`, blocks as bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<u64>) -> Result<Self> {
        if n > 64 {
            return Err(Error::Invalid("set partitions support at most 64 points".into()));
        }
        let mut union = 0u64;
        for &b in &blocks {
            if union & b != 0 {
                return Err(Error::Invalid("blocks are not disjoint".into()));
            }
            union |= b;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if union != full {
            return Err(Error::Invalid("blocks do not cover the point set".into()));
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    /// The base point `A = (A_1, …, A_ℓ)` of consecutive blocks.
    pub fn standard(alpha: &Composition) -> Self {
        let blocks = alpha
            .blocks()
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &p| m | (1 << p)))
            .collect();
        OrderedSetPartition {
            n: alpha.total(),
            blocks,
        }
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_points(&self, i: usize) -> Vec<usize> {
        mask_points(self.blocks[i])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.count_ones() as usize).collect()
    }

    pub fn act(&self, g: &Permutation) -> OrderedSetPartition {
        OrderedSetPartition {
            n: self.n,
            blocks: self.blocks.iter().map(|&b| g.apply_mask(b)).collect(),
        }
    }

    /// Parses `{1,2}|{3,4}`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in text.trim().split('|') {
            let inner = part
                .trim()
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("expected {{..}} in {:?}", part)))?;
            let mut mask = 0u64;
            for s in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let v: usize = s
                    .parse()
                    .map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))?;
                if v == 0 || v > n {
                    return Err(Error::Parse(format!("point {} out of range 1..={}", v, n)));
                }
                mask |= 1 << (v - 1);
            }
            blocks.push(mask);
        }
        Self::new(n, blocks)
    }
}

pub(crate) fn mask_points(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&b| {
                let pts: Vec<String> = mask_points(b).iter().map(|p| (p + 1).to_string()).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointLabel {
    /// A left coset, named by its canonical representative.
    Coset(Permutation),
    SetPartition(OrderedSetPartition),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Coset(p) => write!(f, "{}H", p),
            PointLabel::SetPartition(b) => write!(f, "{}", b),
        }
    }
}

enum Realization {
    Cosets {
        subgroup: Arc<PermGroup>,
        coset_of: Vec<usize>,
    },
    SetPartitions {
        alpha: Composition,
        lookup: HashMap<OrderedSetPartition, usize>,
    },
}

/// A finite left G-set with integer point indices.
pub struct GSet {
    group: Arc<PermGroup>,
    labels: Vec<PointLabel>,
    realization: Realization,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSet")
            .field("group_order", &self.group.order())
            .field("points", &self.labels.len())
            .finish()
    }
}

impl GSet {
    /// `X = G/H` with `a·(bH) = (ab)H`; point 0 is the base point `H`.
    pub fn coset_space(group: Arc<PermGroup>, subgroup: Arc<PermGroup>) -> Result<GSet> {
        let dec = group.coset_decomposition(&subgroup, CosetSide::Left)?;
        let labels = dec
            .reps
            .iter()
            .map(|&i| PointLabel::Coset(group.element(i).clone()))
            .collect();
        let mut x = GSet {
            group,
            labels,
            realization: Realization::Cosets {
                subgroup,
                coset_of: dec.coset_of,
            },
            table: None,
        };
        x.build_table();
        Ok(x)
    }

    /// `binom([n], α)`: ordered set partitions with block sizes `α`, acted on
    /// blockwise. Points are listed in the order of the orbit of the base
    /// point `A`, which is point 0; the group must be transitive on them
    /// (any group containing enough of `𝔖_n`), otherwise only the orbit of `A`
    /// is represented.
    pub fn ordered_set_partitions(group: Arc<PermGroup>, alpha: &Composition) -> Result<GSet> {
        if alpha.total() != group.degree() {
            return Err(Error::DegreeMismatch(alpha.total(), group.degree()));
        }
        let base = OrderedSetPartition::standard(alpha);
        let mut pts: BTreeSet<OrderedSetPartition> = BTreeSet::new();
        for g in group.elements() {
            pts.insert(base.act(g));
        }
        let mut ordered: Vec<OrderedSetPartition> = Vec::with_capacity(pts.len());
        ordered.push(base.clone());
        ordered.extend(pts.into_iter().filter(|p| *p != base));
        let lookup = ordered
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut x = GSet {
            group,
            labels: ordered.into_iter().map(PointLabel::SetPartition).collect(),
            realization: Realization::SetPartitions {
                alpha: alpha.clone(),
                lookup,
            },
            table: None,
        };
        x.build_table();
        Ok(x)
    }

    fn build_table(&mut self) {
        let size = self.group.order() * self.labels.len();
        if size > DENSE_ACTION_LIMIT || self.labels.len() > u32::MAX as usize {
            return;
        }
        let mut table = vec![0u32; size];
        let npts = self.labels.len();
        for gi in 0..self.group.order() {
            for x in 0..npts {
                table[gi * npts + x] = self.act_uncached(gi, x) as u32;
            }
        }
        self.table = Some(table);
    }

    fn act_uncached(&self, gi: usize, x: usize) -> usize {
        let g = self.group.element(gi);
        match (&self.realization, &self.labels[x]) {
            (Realization::Cosets { coset_of, .. }, PointLabel::Coset(rep)) => {
                coset_of[self.group.index_of(&g.mul(rep)).expect("closed group")]
            }
            (Realization::SetPartitions { lookup, .. }, PointLabel::SetPartition(b)) => {
                lookup[&b.act(g)]
            }
            _ => unreachable!("labels match their realization"),
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &PointLabel {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[PointLabel] {
        &self.labels
    }

    /// Index of the base point (`H` or `A`).
    pub fn base_point(&self) -> usize {
        0
    }

    /// `g·x` for the group element with index `gi`.
    #[inline]
    pub fn act(&self, gi: usize, x: usize) -> usize {
        match &self.table {
            Some(t) => t[gi * self.labels.len() + x] as usize,
            None => self.act_uncached(gi, x),
        }
    }

    pub fn act_perm(&self, g: &Permutation, x: usize) -> Result<usize> {
        let gi = self
            .group
            .index_of(g)
            .ok_or_else(|| Error::Invalid(format!("{} is not in the acting group", g)))?;
        Ok(self.act(gi, x))
    }

    /// The composition `α` when this is `binom([n], α)`.
    pub fn young_composition(&self) -> Option<&Composition> {
        match &self.realization {
            Realization::SetPartitions { alpha, .. } => Some(alpha),
            Realization::Cosets { .. } => None,
        }
    }

    pub fn coset_subgroup(&self) -> Option<&Arc<PermGroup>> {
        match &self.realization {
            Realization::Cosets { subgroup, .. } => Some(subgroup),
            Realization::SetPartitions { .. } => None,
        }
    }

    pub fn set_partition(&self, x: usize) -> Option<&OrderedSetPartition> {
        match &self.labels[x] {
            PointLabel::SetPartition(b) => Some(b),
            PointLabel::Coset(_) => None,
        }
    }

    /// Index of a set-partition point.
    pub fn point_of(&self, b: &OrderedSetPartition) -> Option<usize> {
        match &self.realization {
            Realization::SetPartitions { lookup, .. } => lookup.get(b).copied(),
            Realization::Cosets { .. } => None,
        }
    }

    /// Point `g·x₀`.
    pub fn image_of_base(&self, g: &Permutation) -> Result<usize> {
        self.act_perm(g, self.base_point())
    }

    /// Orbits of G on X, each sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for x in 0..self.len() {
            if seen[x] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for gi in 0..self.group.order() {
                orbit.insert(self.act(gi, x));
            }
            for &p in &orbit {
                seen[p] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    /// `G_x` as a group.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let elems = (0..self.group.order())
            .filter(|&gi| self.act(gi, x) == x)
            .map(|gi| self.group.element(gi).clone())
            .collect();
        PermGroup::from_closed_elements(self.group.degree(), elems)
    }

    /// `G_{xy} = G_x ∩ G_y` as a group.
    pub fn pair_stabilizer(&self, x: usize, y: usize) -> PermGroup {
        let elems = (0..self.group.order())
            .filter(|&gi| self.act(gi, x) == x && self.act(gi, y) == y)
            .map(|gi| self.group.element(gi).clone())
            .collect();
        PermGroup::from_closed_elements(self.group.degree(), elems)
    }

    pub fn orbital_of(&self, x: usize, y: usize) -> Orbital {
        let pairs: BTreeSet<(usize, usize)> = (0..self.group.order())
            .map(|gi| (self.act(gi, x), self.act(gi, y)))
            .collect();
        Orbital {
            base: (x, y),
            pairs: pairs.into_iter().collect(),
        }
    }

    /// All orbitals, each based at its lexicographically least pair.
    pub fn orbitals(&self) -> Vec<Orbital> {
        let n = self.len();
        let mut seen = vec![false; n * n];
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if seen[x * n + y] {
                    continue;
                }
                let o = self.orbital_of(x, y);
                for &(a, b) in &o.pairs {
                    seen[a * n + b] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// The minimal `t ∈ G` with `t(x,y) = (y,x)`, if any, after checking
    /// that it normalizes `K = G_{xy}` with `t² ∈ K`.
    pub fn find_transposer(&self, x: usize, y: usize) -> Result<Option<Permutation>> {
        let Some(ti) = (0..self.group.order())
            .find(|&gi| self.act(gi, x) == y && self.act(gi, y) == x)
        else {
            return Ok(None);
        };
        let t = self.group.element(ti).clone();
        let k = self.pair_stabilizer(x, y);
        if !is_outer_involution(&k, &t) {
            return Err(Error::OuterInvolution);
        }
        Ok(Some(t))
    }

    /// `K = G_{xy}` plus, for `binom([n], α)` with `x` the base point, the
    /// interval bookkeeping relating `K` to `𝔖_γ`.
    pub fn two_point_stabilizer(&self, x: usize, y: usize) -> Result<StabilizerData> {
        let k = Arc::new(self.pair_stabilizer(x, y));
        let young = match self.young_composition() {
            Some(alpha) if x == self.base_point() => {
                let b = self.set_partition(y).expect("set partition point");
                Some(YoungStabilizer::build(alpha, b, &k)?)
            }
            _ => None,
        };
        Ok(StabilizerData { k, young })
    }
}

/// Whether conjugation by `t` preserves `K` and `t² ∈ K`.
pub fn is_outer_involution(k: &PermGroup, t: &Permutation) -> bool {
    let t_inv = t.inverse();
    k.generators()
        .iter()
        .all(|g| k.contains(&t_inv.mul(g).mul(t)))
        && k.contains(&t.mul(t))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbital {
    pub base: (usize, usize),
    /// The orbit `G(x,y)`, sorted.
    pub pairs: Vec<(usize, usize)>,
}

impl Orbital {
    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `Ω^T = Ω`.
    pub fn is_symmetric(&self) -> bool {
        self.contains((self.base.1, self.base.0))
    }

    pub fn transpose(&self) -> Orbital {
        let mut pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        Orbital {
            base: (self.base.1, self.base.0),
            pairs,
        }
    }
}

/// `Γ = [γ_ij]` with row and column sums equal to `α`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompositionMatrix {
    alpha: Composition,
    entries: Vec<Vec<usize>>,
}

impl CompositionMatrix {
    pub fn new(alpha: Composition, entries: Vec<Vec<usize>>) -> Result<Self> {
        let l = alpha.len();
        if entries.len() != l || entries.iter().any(|r| r.len() != l) {
            return Err(Error::SizeMismatch(format!("Γ must be {}x{}", l, l)));
        }
        for j in 0..l {
            let col: usize = (0..l).map(|i| entries[i][j]).sum();
            let row: usize = entries[j].iter().sum();
            if col != alpha.parts()[j] || row != alpha.parts()[j] {
                return Err(Error::Invalid(format!(
                    "Γ = {:?} is not in M_α for α = {}",
                    entries, alpha
                )));
            }
        }
        Ok(CompositionMatrix { alpha, entries })
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let l = self.size();
        (0..l).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn transpose(&self) -> CompositionMatrix {
        let l = self.size();
        CompositionMatrix {
            alpha: self.alpha.clone(),
            entries: (0..l)
                .map(|i| (0..l).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    /// Row-major flattening `(γ_11, …, γ_1ℓ, γ_21, …, γ_ℓℓ)`, zeros kept.
    pub fn flatten(&self) -> Vec<usize> {
        self.entries.iter().flatten().copied().collect()
    }
}

impl fmt::Display for CompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", v.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `γ_ij = |A_i ∩ B_j|`.
pub fn gamma_matrix(a: &OrderedSetPartition, b: &OrderedSetPartition) -> Result<CompositionMatrix> {
    if a.sizes() != b.sizes() {
        return Err(Error::SizeMismatch("block sizes differ".into()));
    }
    let alpha = Composition::new(a.sizes())?;
    let entries = a
        .blocks()
        .iter()
        .map(|&ai| {
            b.blocks()
                .iter()
                .map(|&bj| (ai & bj).count_ones() as usize)
                .collect()
        })
        .collect();
    CompositionMatrix::new(alpha, entries)
}

#[derive(Debug, Clone)]
pub struct StabilizerData {
    pub k: Arc<PermGroup>,
    pub young: Option<YoungStabilizer>,
}

/// Block bookkeeping for `K = G_{AB}` inside `binom([n], α)`.
///
/// Blocks `B_ij = A_i ∩ B_j` and intervals `A_ij = ε_ij + [γ_ij]` are stored
/// row-major (index `i*ℓ + j`), 0-based.
#[derive(Debug, Clone)]
pub struct YoungStabilizer {
    pub gamma: CompositionMatrix,
    pub b_blocks: Vec<Vec<usize>>,
    pub offsets: Vec<usize>,
    pub intervals: Vec<Vec<usize>>,
    /// `u|_{A_ij}` is the order-preserving bijection `A_ij → B_ij`.
    pub u: Permutation,
    u_inv: Permutation,
    pub k0: Arc<PermGroup>,
    /// `(t₀, t = u t₀ u⁻¹)` when `Γ` is symmetric.
    pub transposer: Option<(Permutation, Permutation)>,
}

impl YoungStabilizer {
    fn build(alpha: &Composition, b: &OrderedSetPartition, k: &PermGroup) -> Result<Self> {
        let a = OrderedSetPartition::standard(alpha);
        let gamma = gamma_matrix(&a, b)?;
        let l = alpha.len();
        let n = alpha.total();
        let mut b_blocks = Vec::with_capacity(l * l);
        let mut offsets = Vec::with_capacity(l * l);
        let mut intervals = Vec::with_capacity(l * l);
        let mut eps = 0;
        for i in 0..l {
            for j in 0..l {
                b_blocks.push(mask_points(a.blocks()[i] & b.blocks()[j]));
                offsets.push(eps);
                intervals.push((eps..eps + gamma.get(i, j)).collect::<Vec<_>>());
                eps += gamma.get(i, j);
            }
        }
        let mut images = vec![0; n];
        for (interval, block) in intervals.iter().zip(&b_blocks) {
            for (&s, &t) in interval.iter().zip(block) {
                images[s] = t;
            }
        }
        let u = Permutation::from_images(images)?;
        let u_inv = u.inverse();
        let k0 = Arc::new(PermGroup::young(&Composition::with_zeros(gamma.flatten()))?);
        let transposer = if gamma.is_symmetric() {
            let mut t0 = vec![0; n];
            for i in 0..l {
                for j in 0..l {
                    for s in 0..gamma.get(i, j) {
                        t0[offsets[i * l + j] + s] = offsets[j * l + i] + s;
                    }
                }
            }
            let t0 = Permutation::from_images(t0)?;
            let t = u.mul(&t0).mul(&u_inv);
            Some((t0, t))
        } else {
            None
        };
        let data = YoungStabilizer {
            gamma,
            b_blocks,
            offsets,
            intervals,
            u,
            u_inv,
            k0,
            transposer,
        };
        debug_assert_eq!(data.k0.order(), k.order());
        Ok(data)
    }

    pub fn ell(&self) -> usize {
        self.gamma.size()
    }

    /// `ψ(k) = u⁻¹ k u ∈ K₀`.
    pub fn psi(&self, k: &Permutation) -> Permutation {
        self.u_inv.mul(k).mul(&self.u)
    }

    /// `ψ⁻¹(a) = u a u⁻¹ ∈ K`.
    pub fn psi_inv(&self, a: &Permutation) -> Permutation {
        self.u.mul(a).mul(&self.u_inv)
    }

    /// Block transpose `a ↦ aᵀ` on `K₀`, i.e. `t₀ a t₀`.
    pub fn block_transpose(&self, a: &Permutation) -> Option<Permutation> {
        self.transposer.as_ref().map(|(t0, _)| t0.mul(a).mul(t0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Arc<PermGroup> {
        Arc::new(PermGroup::symmetric(n).unwrap())
    }

    fn binom(n: usize, alpha: &[usize]) -> GSet {
        GSet::ordered_set_partitions(sym(n), &Composition::new(alpha.to_vec()).unwrap()).unwrap()
    }

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn coset_space_sizes() {
        let g = sym(3);
        let h = Arc::new(PermGroup::symmetric_on(3, &[0, 1]).unwrap());
        let x = GSet::coset_space(g.clone(), h).unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(x.orbits().len(), 1);
        assert_eq!(GSet::coset_space(g.clone(), g).unwrap().len(), 1);
        let s4 = sym(4);
        let h = Arc::new(PermGroup::young(&Composition::new(vec![2, 2]).unwrap()).unwrap());
        assert_eq!(GSet::coset_space(s4, h).unwrap().len(), 6);
    }

    #[test]
    fn set_partition_space_sizes() {
        assert_eq!(binom(4, &[2, 2]).len(), 6);
        assert_eq!(binom(4, &[4]).len(), 1);
        assert_eq!(binom(3, &[1, 1, 1]).len(), 6);
        let x = binom(4, &[2, 2]);
        assert_eq!(x.label(0).to_string(), "{1,2}|{3,4}");
        let p = OrderedSetPartition::parse(4, "{1,3}|{2,4}").unwrap();
        assert_eq!(p.to_string(), "{1,3}|{2,4}");
        assert!(OrderedSetPartition::parse(4, "{1,3}|{3,4}").is_err());
        assert!(OrderedSetPartition::parse(4, "{1,3}|{2}").is_err());
    }

    #[test]
    fn action_laws() {
        let x = binom(4, &[2, 1, 1]);
        let g = x.group().clone();
        for a in 0..g.order() {
            for b in (0..g.order()).step_by(5) {
                let ab = g.index_of(&g.element(a).mul(g.element(b))).unwrap();
                for p in 0..x.len() {
                    assert_eq!(x.act(ab, p), x.act(a, x.act(b, p)));
                }
            }
        }
        for p in 0..x.len() {
            assert_eq!(x.act(g.identity_index(), p), p);
        }
    }

    #[test]
    fn orbit_stabilizer() {
        let x = binom(4, &[2, 1, 1]);
        let g = x.group();
        let sizes: usize = x.orbits().iter().map(Vec::len).sum();
        assert_eq!(sizes, x.len());
        for p in 0..x.len() {
            assert_eq!(x.orbits()[0].len() * x.stabilizer(p).order(), g.order());
        }
    }

    #[test]
    fn cosets_match_set_partitions() {
        // bH ↦ bA is a G-set isomorphism G/𝔖_α ≅ binom([n], α).
        let alpha = Composition::new(vec![2, 1, 1]).unwrap();
        let g = sym(4);
        let h = Arc::new(PermGroup::young(&alpha).unwrap());
        let cos = GSet::coset_space(g.clone(), h).unwrap();
        let parts = GSet::ordered_set_partitions(g.clone(), &alpha).unwrap();
        let phi: Vec<usize> = (0..cos.len())
            .map(|c| match cos.label(c) {
                PointLabel::Coset(b) => parts.image_of_base(b).unwrap(),
                _ => unreachable!(),
            })
            .collect();
        let mut sorted = phi.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), cos.len());
        for gi in 0..g.order() {
            for c in 0..cos.len() {
                assert_eq!(phi[cos.act(gi, c)], parts.act(gi, phi[c]));
            }
        }
    }

    #[test]
    fn two_point_stabilizer_examples() {
        let x = binom(4, &[2, 2]);
        let a = x.base_point();
        let s = x.two_point_stabilizer(a, a).unwrap();
        assert_eq!(s.k.order(), 4);
        let y = x
            .point_of(&OrderedSetPartition::parse(4, "{1,3}|{2,4}").unwrap())
            .unwrap();
        let s = x.two_point_stabilizer(a, y).unwrap();
        assert_eq!(s.k.order(), 1);
        let young = s.young.unwrap();
        assert_eq!(young.gamma.entries(), &[vec![1, 1], vec![1, 1]]);

        // 𝔖_n/𝔖_{n-1}: stabilizer of n and n-1 is 𝔖_{n-2}.
        for n in 3..=6usize {
            let x = binom(n, &[n - 1, 1]);
            let y = x.image_of_base(&Permutation::transposition(n, n - 2, n - 1)).unwrap();
            let s = x.two_point_stabilizer(x.base_point(), y).unwrap();
            let expected = PermGroup::symmetric_on(n, &(0..n - 2).collect::<Vec<_>>()).unwrap();
            assert!(s.k.same_elements(&expected));
        }
    }

    #[test]
    fn young_package_laws() {
        for (n, alpha) in [(4, vec![2, 2]), (5, vec![2, 2, 1]), (5, vec![3, 2]), (4, vec![1, 1, 2])] {
            let x = binom(n, &alpha);
            let a = x.base_point();
            for y in 0..x.len() {
                let s = x.two_point_stabilizer(a, y).unwrap();
                let young = s.young.as_ref().unwrap();
                // |K| = Π γ_ij!
                let prod: u128 = young
                    .gamma
                    .flatten()
                    .iter()
                    .map(|&g| crate::perm::factorial(g).unwrap())
                    .product();
                assert_eq!(prod, s.k.order() as u128);
                // ψ is a bijection K → K₀.
                let mut img: Vec<Permutation> = s.k.elements().iter().map(|k| young.psi(k)).collect();
                img.sort();
                assert_eq!(img, young.k0.elements());
                // ψ is multiplicative.
                for k1 in s.k.elements().iter().take(6) {
                    for k2 in s.k.elements().iter().take(6) {
                        assert_eq!(young.psi(&k1.mul(k2)), young.psi(k1).mul(&young.psi(k2)));
                    }
                }
                assert_eq!(young.transposer.is_some(), x.orbital_of(a, y).is_symmetric());
                if let Some((t0, t)) = &young.transposer {
                    assert!(t0.mul(t0).is_identity());
                    assert_eq!(x.act_perm(t, a).unwrap(), y);
                    assert_eq!(x.act_perm(t, y).unwrap(), a);
                    // t ψ⁻¹(a) t = ψ⁻¹(aᵀ)
                    for k0 in young.k0.elements() {
                        let lhs = t.mul(&young.psi_inv(k0)).mul(t);
                        let rhs = young.psi_inv(&young.block_transpose(k0).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn orbitals_and_transposers() {
        let x = binom(4, &[2, 2]);
        let a = x.base_point();
        let o = x.orbital_of(a, a);
        assert!(o.is_symmetric());
        assert!(x.find_transposer(a, a).unwrap().unwrap().is_identity());

        let y = x
            .point_of(&OrderedSetPartition::parse(4, "{1,3}|{2,4}").unwrap())
            .unwrap();
        assert!(x.orbital_of(a, y).is_symmetric());
        let t = x.find_transposer(a, y).unwrap().unwrap();
        assert_eq!((x.act_perm(&t, a).unwrap(), x.act_perm(&t, y).unwrap()), (y, a));

        let x = binom(3, &[1, 1, 1]);
        let y = x.image_of_base(&perm(3, "(1 2 3)")).unwrap();
        assert!(!x.orbital_of(x.base_point(), y).is_symmetric());
        assert!(x.find_transposer(x.base_point(), y).unwrap().is_none());
        assert_eq!(x.orbital_of(x.base_point(), y).transpose().base, (y, 0));

        // Orbitals partition X×X; transposer exists iff symmetric.
        let x = binom(4, &[2, 1, 1]);
        let total: usize = x.orbitals().iter().map(Orbital::len).sum();
        assert_eq!(total, x.len() * x.len());
        for o in x.orbitals() {
            let t = x.find_transposer(o.base.0, o.base.1).unwrap();
            assert_eq!(t.is_some(), o.is_symmetric());
        }
    }

    #[test]
    fn gamma_examples() {
        let alpha = Composition::new(vec![3, 1]).unwrap();
        let a = OrderedSetPartition::standard(&alpha);
        assert_eq!(gamma_matrix(&a, &a).unwrap().entries(), &[vec![3, 0], vec![0, 1]]);
        let b = a.act(&perm(4, "(3 4)"));
        assert_eq!(gamma_matrix(&a, &b).unwrap().entries(), &[vec![2, 1], vec![1, 0]]);
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let a = OrderedSetPartition::standard(&alpha);
        let b = a.act(&perm(4, "(2 3)"));
        assert_eq!(gamma_matrix(&a, &b).unwrap().entries(), &[vec![1, 1], vec![1, 1]]);
        assert!(CompositionMatrix::new(alpha, vec![vec![2, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn gamma_classifies_double_cosets() {
        for n in 2..=5 {
            let g = sym(n);
            for alpha in Composition::all(n) {
                let h = PermGroup::young(&alpha).unwrap();
                let a = OrderedSetPartition::standard(&alpha);
                let reps = g.cosets(&h, CosetSide::Double).unwrap();
                let mut gammas: Vec<CompositionMatrix> = reps
                    .iter()
                    .map(|b| gamma_matrix(&a, &a.act(b)).unwrap())
                    .collect();
                for (b, gm) in reps.iter().zip(&gammas) {
                    // Γᵀ = Γ iff HbH = Hb⁻¹H
                    let d = g.coset_decomposition(&h, CosetSide::Double).unwrap();
                    let same = d.coset_of[g.index_of(b).unwrap()]
                        == d.coset_of[g.index_of(&b.inverse()).unwrap()];
                    assert_eq!(gm.is_symmetric(), same);
                }
                let count = gammas.len();
                gammas.sort_by_key(|m| m.flatten());
                gammas.dedup();
                assert_eq!(gammas.len(), count, "Γ is injective on double cosets");
            }
        }
    }
}
