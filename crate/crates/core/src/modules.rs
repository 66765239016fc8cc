//! `F(G,X)`-modules `I_{xy}(V)` induced from representations of the
//! two-point stabilizer, their indicators, and invariant bilinear forms.
//!
//! The basis of `I_{xy}(V)` is `b_i ⊗ v_p` with `b_i` the canonical left
//! coset representatives of `G/K`, `K = G_{xy}`, ordered block by block.

use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::face::{FaceAlgebra, FaceElement, Symbol};
use crate::characters::PartitionMatrix;
use crate::gset::{is_outer_involution, YoungStabilizer};
use crate::linalg::{nullspace, q, rank_of, Matrix, Rational};
use crate::perm::{CosetSide, PermGroup, Permutation};
use crate::repr::Representation;

/// Default bound on `dim(M)^r` for [`InducedModule::nu_r`].
pub const DEFAULT_TENSOR_BUDGET: usize = 20_736;

const NO_BLOCK: u32 = u32::MAX;

pub struct InducedModule {
    algebra: Arc<FaceAlgebra>,
    x: usize,
    y: usize,
    k: Arc<PermGroup>,
    rep: Representation,
    /// Element index of `b_i` in `G`.
    coset_reps: Vec<usize>,
    /// `(b_i x, b_i y)`.
    labels: Vec<(usize, usize)>,
    /// Block of each pair of points, `NO_BLOCK` off the orbital.
    block_of_pair: Vec<u32>,
}

impl std::fmt::Debug for InducedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InducedModule")
            .field("x", &self.x)
            .field("y", &self.y)
            .field("blocks", &self.labels.len())
            .field("rep_dim", &self.rep.dim())
            .finish()
    }
}

/// A block-monomial action: block `i` goes to block `target[i]` through
/// the `K`-element `k[i]`.
struct BlockMonomial {
    target: Vec<usize>,
    k: Vec<usize>,
}

impl InducedModule {
    /// `I_{xy}(V)`, checking that `V` is a representation of `G_{xy}`.
    pub fn induce(algebra: Arc<FaceAlgebra>, x: usize, y: usize, rep: Representation) -> Result<Self> {
        let gset = algebra.gset().clone();
        let g = gset.group().clone();
        let k = Arc::new(gset.pair_stabilizer(x, y));
        if !rep.group().same_elements(&k) {
            return Err(Error::NotARepresentation(
                "V must be a representation of the two-point stabilizer".into(),
            ));
        }
        rep.verify()?;
        let dec = g.coset_decomposition(&k, CosetSide::Left)?;
        let coset_reps = dec.reps.clone();
        let labels: Vec<(usize, usize)> = coset_reps
            .iter()
            .map(|&b| (gset.act(b, x), gset.act(b, y)))
            .collect();
        let n = gset.len();
        let mut block_of_pair = vec![NO_BLOCK; n * n];
        for (i, &(z, w)) in labels.iter().enumerate() {
            block_of_pair[z * n + w] = i as u32;
        }
        Ok(InducedModule {
            algebra,
            x,
            y,
            k,
            rep,
            coset_reps,
            labels,
            block_of_pair,
        })
    }

    pub fn algebra(&self) -> &Arc<FaceAlgebra> {
        &self.algebra
    }

    pub fn base_pair(&self) -> (usize, usize) {
        (self.x, self.y)
    }

    pub fn stabilizer(&self) -> &Arc<PermGroup> {
        &self.k
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn blocks(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len() * self.rep.dim()
    }

    fn group(&self) -> &Arc<PermGroup> {
        self.algebra.gset().group()
    }

    /// Block with label `(z, w)`.
    pub fn block_of(&self, z: usize, w: usize) -> Option<usize> {
        let b = self.block_of_pair[z * self.algebra.points() + w];
        (b != NO_BLOCK).then_some(b as usize)
    }

    /// `k = b_j⁻¹ a b_i ∈ K` for `a b_i ∈ b_j K`.
    fn k_index(&self, j: usize, a: usize, i: usize) -> usize {
        let g = self.group();
        let b_j_inv = self.algebra.inv_index(self.coset_reps[j]);
        let e = self
            .algebra
            .mul_index(b_j_inv, self.algebra.mul_index(a, self.coset_reps[i]));
        self.k.index_of(g.element(e)).expect("b_j⁻¹ a b_i lies in K")
    }

    fn group_action(&self, a: usize) -> BlockMonomial {
        let gset = self.algebra.gset();
        let mut target = Vec::with_capacity(self.blocks());
        let mut ks = Vec::with_capacity(self.blocks());
        for (i, &(z, w)) in self.labels.iter().enumerate() {
            let j = self
                .block_of(gset.act(a, z), gset.act(a, w))
                .expect("orbital is G-stable");
            target.push(j);
            ks.push(self.k_index(j, a, i));
        }
        BlockMonomial { target, k: ks }
    }

    /// `e^z_w a` maps block `i = block(a⁻¹z, a⁻¹w)` to block `j = block(z, w)`
    /// through `ρ(b_j⁻¹ a b_i)`; `None` when it acts as zero.
    pub fn symbol_action(&self, s: Symbol) -> Option<(usize, usize, usize)> {
        let a = s.a as usize;
        let j = self.block_of(s.x as usize, s.y as usize)?;
        let ainv = self.algebra.inv_index(a);
        let i = self.block_of(self.algebra.act(ainv, s.x as usize), self.algebra.act(ainv, s.y as usize))?;
        Some((j, i, self.k_index(j, a, i)))
    }

    /// Dense matrix of the action of an algebra element.
    pub fn action_matrix(&self, e: &FaceElement) -> Result<Matrix> {
        if !Arc::ptr_eq(e.algebra(), &self.algebra) {
            return Err(Error::AmbientMismatch);
        }
        let d = self.rep.dim();
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (&s, c) in e.terms() {
            if let Some((j, i, k)) = self.symbol_action(s) {
                let block = self.rep.matrix(k);
                for p in 0..d {
                    for q in 0..d {
                        let v = block.get(p, q);
                        if !v.is_zero() {
                            m.add_at(j * d + p, i * d + q, &(v * c));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// `Tr_M(e)`, summing the traces of the individual symbols.
    pub fn trace(&self, e: &FaceElement) -> Result<Rational> {
        if !Arc::ptr_eq(e.algebra(), &self.algebra) {
            return Err(Error::AmbientMismatch);
        }
        let mut sum = Rational::zero();
        for (&s, c) in e.terms() {
            if let Some((j, i, k)) = self.symbol_action(s) {
                if i == j {
                    sum += c * self.rep.matrix(k).trace();
                }
            }
        }
        Ok(sum)
    }

    /// `FS_r(M) = Tr_M(∫^[r])`.
    pub fn fs_direct(&self, r: u32) -> Rational {
        self.trace(&self.algebra.integral_r_closed(r))
            .expect("integral lives in the module's algebra")
    }

    /// `ν_r(M) = Tr(π^{⊗r}(Δ^{(r)}∫) ∘ tw_{M,M^{⊗r−1}})`.
    ///
    /// Each tensor term `f_1 ⊗ ⋯ ⊗ f_r` of `Δ^{(r)}∫` contributes
    /// `Σ_I f_1[i_1,i_2] f_2[i_2,i_3] ⋯ f_r[i_r,i_1]` over basis tuples `I`.
    /// Coproduct branches are enumerated depth first; a branch is abandoned
    /// once its factors can no longer close up into a nonzero diagonal entry.
    pub fn nu_r(&self, r: u32, budget: usize) -> Result<Rational> {
        assert!(r >= 1, "r must be positive");
        let tensor_dim = (self.dim() as u128).checked_pow(r).unwrap_or(u128::MAX);
        if tensor_dim > budget as u128 {
            return Err(Error::CapExceeded {
                what: "nu_r tensor dimension",
                size: tensor_dim.min(usize::MAX as u128) as usize,
                cap: budget,
            });
        }
        let alg = &self.algebra;
        let npts = alg.points();
        let mut total = Rational::zero();
        for a in 0..alg.group_order() {
            for x in 0..npts {
                // factors (block_row, block_col, K-index) chosen so far
                let mut chain: Vec<(usize, usize, usize)> = Vec::with_capacity(r as usize);
                self.nu_branch(a, x, x, r, &mut chain, &mut total);
            }
        }
        Ok(total / q(alg.group_order() as i64))
    }

    fn nu_branch(
        &self,
        a: usize,
        x: usize,
        upper: usize,
        r: u32,
        chain: &mut Vec<(usize, usize, usize)>,
        total: &mut Rational,
    ) {
        let last = chain.len() + 1 == r as usize;
        let lowers: Vec<usize> = if last { vec![x] } else { (0..self.algebra.points()).collect() };
        for lower in lowers {
            // f_k[i_k, i_{k+1}]: row block of f_{k+1} must equal column block of f_k
            let Some(row) = self.block_of(upper, lower) else {
                continue;
            };
            if chain.last().is_some_and(|prev| prev.1 != row) {
                continue;
            }
            let Some(f) = self.symbol_action(Symbol::new(upper, lower, a)) else {
                continue;
            };
            chain.push(f);
            if last {
                if chain[0].0 == f.1 {
                    *total += self.cyclic_index_sum(chain);
                }
            } else {
                self.nu_branch(a, x, lower, r, chain, total);
            }
            chain.pop();
        }
    }

    /// `Σ_{p_1..p_r} Π_k B_k[p_k, p_{k+1}]` with `p_{r+1} = p_1`.
    fn cyclic_index_sum(&self, chain: &[(usize, usize, usize)]) -> Rational {
        let d = self.rep.dim();
        let blocks: Vec<&Matrix> = chain.iter().map(|&(_, _, k)| self.rep.matrix(k)).collect();
        let mut sum = Rational::zero();
        let mut idx = vec![0usize; chain.len()];
        fn rec(
            depth: usize,
            acc: Rational,
            idx: &mut Vec<usize>,
            blocks: &[&Matrix],
            d: usize,
            sum: &mut Rational,
        ) {
            let r = blocks.len();
            if depth == r {
                let v = blocks[r - 1].get(idx[r - 1], idx[0]);
                if !v.is_zero() {
                    *sum += acc * v;
                }
                return;
            }
            for p in 0..d {
                idx[depth] = p;
                let next = if depth == 0 {
                    Some(acc.clone())
                } else {
                    let v = blocks[depth - 1].get(idx[depth - 1], p);
                    (!v.is_zero()).then(|| &acc * v)
                };
                if let Some(n) = next {
                    rec(depth + 1, n, idx, blocks, d, sum);
                }
            }
        }
        rec(0, Rational::one(), &mut idx, &blocks, d, &mut sum);
        sum
    }

    /// Dimension of `End_F(M)`. Commuting with every `e^z_w` forces a
    /// block-diagonal endomorphism; the remaining unknowns are constrained
    /// by the generators of `G`.
    pub fn commutant_dim(&self) -> usize {
        let d = self.rep.dim();
        let nb = self.blocks();
        let nvars = nb * d * d;
        let var = |blk: usize, p: usize, q: usize| blk * d * d + p * d + q;
        let mut rows = Vec::new();
        let g = self.group().clone();
        for s in g.generators() {
            let a = g.index_of(s).expect("generator");
            let act = self.group_action(a);
            // X_j A_i = A_i X_i for each block i with j = target(i)
            for i in 0..nb {
                let j = act.target[i];
                let m = self.rep.matrix(act.k[i]);
                for p in 0..d {
                    for qq in 0..d {
                        let mut row = vec![Rational::zero(); nvars];
                        for l in 0..d {
                            row[var(j, p, l)] += m.get(l, qq);
                            row[var(i, l, qq)] -= m.get(p, l);
                        }
                        if row.iter().any(|v| !v.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        nullspace(&rows, nvars).len()
    }

    pub fn is_simple(&self) -> bool {
        self.commutant_dim() == 1
    }

    fn swapped_block(&self, i: usize) -> Option<usize> {
        let (z, w) = self.labels[i];
        self.block_of(w, z)
    }

    /// `C` is `F`-invariant: `ρ(a)ᵀ C = C ρ(a⁻¹)` for generators `a` and
    /// `P_{zw} C = C P_{wz}` for the idempotents.
    pub fn is_invariant_form(&self, c: &Matrix) -> bool {
        if c.rows() != self.dim() || c.cols() != self.dim() {
            return false;
        }
        let g = self.group().clone();
        for s in g.generators() {
            let a = g.index_of(s).expect("generator");
            let ga = self.algebra.group_element(a);
            let gi = self.algebra.group_element(self.algebra.inv_index(a));
            let ma = self.action_matrix(&ga).expect("same algebra");
            let mi = self.action_matrix(&gi).expect("same algebra");
            if ma.transpose().mul(c) != c.mul(&mi) {
                return false;
            }
        }
        let d = self.rep.dim();
        for i in 0..self.blocks() {
            for j in 0..self.blocks() {
                if Some(j) == self.swapped_block(i) {
                    continue;
                }
                for p in 0..d {
                    for qq in 0..d {
                        if !c.get(i * d + p, j * d + qq).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// A basis of `ℬ(M)` with its `Cᵀ = ±C` split.
    pub fn invariant_forms(&self) -> FormSpace {
        let d = self.rep.dim();
        let nb = self.blocks();
        let slots: Vec<(usize, usize)> = (0..nb)
            .filter_map(|i| self.swapped_block(i).map(|j| (i, j)))
            .collect();
        let mut slot_of = vec![usize::MAX; nb];
        for (n, &(i, _)) in slots.iter().enumerate() {
            slot_of[i] = n;
        }
        let nvars = slots.len() * d * d;
        let var = |i: usize, p: usize, q: usize| slot_of[i] * d * d + p * d + q;
        let mut rows = Vec::new();
        let g = self.group().clone();
        for s in g.generators() {
            let a = g.index_of(s).expect("generator");
            let fwd = self.group_action(a);
            let back = self.group_action(self.algebra.inv_index(a));
            // block (i, σ i) of ρ(a)ᵀ C equals block (i, σ i) of C ρ(a⁻¹):
            // A_iᵀ C[a i, σ a i] = C[i, σ i] A'_{a σ i}
            for &(i, si) in &slots {
                let ai = fwd.target[i];
                let a_mat = self.rep.matrix(fwd.k[i]);
                let col = fwd.target[si];
                let b_mat = self.rep.matrix(back.k[col]);
                debug_assert_eq!(back.target[col], si);
                for p in 0..d {
                    for qq in 0..d {
                        let mut row = vec![Rational::zero(); nvars];
                        for l in 0..d {
                            row[var(ai, l, qq)] += a_mat.get(l, p);
                            row[var(i, p, l)] -= b_mat.get(l, qq);
                        }
                        if row.iter().any(|v| !v.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let basis: Vec<Matrix> = nullspace(&rows, nvars)
            .into_iter()
            .map(|v| {
                let mut c = Matrix::zeros(self.dim(), self.dim());
                for &(i, j) in &slots {
                    for p in 0..d {
                        for qq in 0..d {
                            c.set(i * d + p, j * d + qq, v[var(i, p, qq)].clone());
                        }
                    }
                }
                c
            })
            .collect();
        FormSpace::new(basis, |c| c.transpose())
    }

    /// The transposer's coset data: `t = b_j k₀`.
    fn transposer_split(&self, t: &Permutation) -> Result<(usize, usize)> {
        let g = self.group();
        let ti = g
            .index_of(t)
            .ok_or_else(|| Error::Invalid(format!("{} is not in G", t)))?;
        let gset = self.algebra.gset();
        if gset.act(ti, self.x) != self.y || gset.act(ti, self.y) != self.x {
            return Err(Error::Invalid("t must swap x and y".into()));
        }
        let j = self.block_of(self.y, self.x).ok_or(Error::NotSymmetric)?;
        let k0 = self
            .k
            .index_of(&g.element(self.coset_reps[j]).inverse().mul(t))
            .expect("t lies in b_j K");
        Ok((j, k0))
    }

    /// `Res(C)(v, ᵗw) = C(1⊗v, t⊗w)`.
    pub fn res_form(&self, c: &Matrix, t: &Permutation) -> Result<Matrix> {
        let (j, k0) = self.transposer_split(t)?;
        let d = self.rep.dim();
        let mut block = Matrix::zeros(d, d);
        let base = self.block_of(self.x, self.y).expect("base pair is a block");
        for p in 0..d {
            for qq in 0..d {
                block.set(p, qq, c.get(base * d + p, j * d + qq).clone());
            }
        }
        Ok(block.mul(self.rep.matrix(k0)))
    }

    /// `Ind(B)(b_i⊗v, b_j⊗w) = B(v, k ᵗw)` with `k = b_i⁻¹ b_j t⁻¹` when it
    /// lies in `K`, and 0 otherwise.
    pub fn ind_form(&self, b: &Matrix, t: &Permutation) -> Result<Matrix> {
        self.transposer_split(t)?;
        let g = self.group();
        let d = self.rep.dim();
        let t_inv = t.inverse();
        let mut c = Matrix::zeros(self.dim(), self.dim());
        for i in 0..self.blocks() {
            let bi_inv = g.element(self.coset_reps[i]).inverse();
            for j in 0..self.blocks() {
                let k = bi_inv.mul(g.element(self.coset_reps[j])).mul(&t_inv);
                if !self.k.contains(&k) {
                    continue;
                }
                let conj = t_inv.mul(&k).mul(t);
                let blk = b.mul(self.rep.matrix_of(&conj).expect("t normalizes K"));
                for p in 0..d {
                    for qq in 0..d {
                        c.set(i * d + p, j * d + qq, blk.get(p, qq).clone());
                    }
                }
            }
        }
        Ok(c)
    }
}

/// `V(Λ)^ψ`: the product irreducible of `K₀` on the intervals `A_ij`,
/// pulled back to `K = G_{AB}` through `ψ`.
pub fn young_representation(
    k: Arc<PermGroup>,
    young: &YoungStabilizer,
    lambda: &PartitionMatrix,
) -> Result<Representation> {
    if lambda.gamma() != &young.gamma {
        return Err(Error::SizeMismatch("partition matrix does not fit Γ".into()));
    }
    let (blocks, parts): (Vec<_>, Vec<_>) = young
        .intervals
        .iter()
        .cloned()
        .zip(lambda.flatten())
        .filter(|(b, _)| !b.is_empty())
        .unzip();
    Representation::product_irrep(k, &blocks, &parts, |p| young.psi(p))
}

/// A space of bilinear forms with its `±` split under an involution.
#[derive(Clone, Debug)]
pub struct FormSpace {
    pub basis: Vec<Matrix>,
    pub plus: Vec<Matrix>,
    pub minus: Vec<Matrix>,
    pub nondegenerate: Vec<bool>,
}

impl FormSpace {
    fn new(basis: Vec<Matrix>, transpose: impl Fn(&Matrix) -> Matrix) -> FormSpace {
        let mut plus_candidates = Vec::new();
        let mut minus_candidates = Vec::new();
        for b in &basis {
            let tb = transpose(b);
            plus_candidates.push(b.add(&tb));
            minus_candidates.push(b.sub(&tb));
        }
        let nondegenerate = basis.iter().map(Matrix::is_invertible).collect();
        FormSpace {
            plus: independent_subset(plus_candidates),
            minus: independent_subset(minus_candidates),
            basis,
            nondegenerate,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn plus_dim(&self) -> usize {
        self.plus.len()
    }

    pub fn minus_dim(&self) -> usize {
        self.minus.len()
    }

    /// `+1`, `−1` or `0` according to which part is nonzero; `None` when
    /// the space is not of the shape of a simple module (dimension above 1).
    pub fn sign(&self) -> Option<i64> {
        match (self.dim(), self.plus_dim(), self.minus_dim()) {
            (0, _, _) => Some(0),
            (1, 1, 0) => Some(1),
            (1, 0, 1) => Some(-1),
            _ => None,
        }
    }
}

fn independent_subset(candidates: Vec<Matrix>) -> Vec<Matrix> {
    let mut chosen: Vec<Matrix> = Vec::new();
    let mut vecs: Vec<Vec<Rational>> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        let v = c.to_vec();
        let ncols = v.len();
        vecs.push(v);
        if rank_of(&vecs, ncols) == vecs.len() {
            chosen.push(c);
        } else {
            vecs.pop();
        }
    }
    chosen
}

/// `Bᵀ` as a matrix: `Bᵀ(v, ᵗw) = B(t²w, ᵗv)`, i.e. `Bᵀ_matrix = Bᵗ ρ(t²)`.
pub fn pairing_transpose(rep: &Representation, t: &Permutation, b: &Matrix) -> Matrix {
    let t2 = t.mul(t);
    b.transpose().mul(rep.matrix_of(&t2).expect("t² ∈ K"))
}

fn check_outer(rep: &Representation, t: &Permutation) -> Result<()> {
    if t.degree() != rep.group().degree() || !is_outer_involution(rep.group(), t) {
        return Err(Error::OuterInvolution);
    }
    Ok(())
}

/// `B(kv, ᵗw) = B(v, k⁻¹ ᵗw)`, i.e. `ρ(k)ᵀ B = B ρ(t⁻¹k⁻¹t)`, on generators.
pub fn is_twisted_invariant(rep: &Representation, t: &Permutation, b: &Matrix) -> Result<bool> {
    check_outer(rep, t)?;
    let t_inv = t.inverse();
    for k in rep.group().generators() {
        let lhs = rep.matrix_of(k).expect("generator").transpose().mul(b);
        let tw = t_inv.mul(&k.inverse()).mul(t);
        let rhs = b.mul(rep.matrix_of(&tw).expect("t normalizes K"));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of `ℬ(V, t)` with its `Bᵀ = ±B` split.
pub fn twisted_forms(rep: &Representation, t: &Permutation) -> Result<FormSpace> {
    check_outer(rep, t)?;
    let d = rep.dim();
    let t_inv = t.inverse();
    let mut rows = Vec::new();
    for k in rep.group().generators() {
        let m = rep.matrix_of(k).expect("generator");
        let n = rep
            .matrix_of(&t_inv.mul(&k.inverse()).mul(t))
            .expect("t normalizes K");
        // (mᵀ B − B n)[p][q]
        for p in 0..d {
            for qq in 0..d {
                let mut row = vec![Rational::zero(); d * d];
                for l in 0..d {
                    row[l * d + qq] += m.get(l, p);
                    row[p * d + l] -= n.get(l, qq);
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis: Vec<Matrix> = nullspace(&rows, d * d)
        .into_iter()
        .map(|v| Matrix::from_vec(d, d, v))
        .collect();
    for b in &basis {
        debug_assert_eq!(pairing_transpose(rep, t, &pairing_transpose(rep, t, b)), *b);
    }
    Ok(FormSpace::new(basis, |b| pairing_transpose(rep, t, b)))
}
