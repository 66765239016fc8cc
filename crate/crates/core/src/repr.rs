//! Exact matrix representations of enumerated permutation groups.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};
use serde::Deserialize;

use crate::characters::{partitions, stab_count, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, q, Matrix, Rational};
use crate::perm::{Partition, PermGroup, Permutation};

/// `ρ: K → GL_d(ℚ)` stored elementwise, indexed like `K.elements()`.
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<PermGroup>,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Closes generator matrices over the group by breadth-first search on
    /// the Cayley graph, rejecting inconsistent assignments.
    pub fn from_generators(
        group: Arc<PermGroup>,
        generators: &[Permutation],
        matrices: &[Matrix],
    ) -> Result<Self> {
        if generators.len() != matrices.len() {
            return Err(Error::SizeMismatch("one matrix per generator".into()));
        }
        let dim = match matrices.first() {
            Some(m) => m.rows(),
            None => 1,
        };
        for m in matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::SizeMismatch(format!(
                    "generator matrices must all be {}x{}",
                    dim, dim
                )));
            }
        }
        let mut assigned: Vec<Option<Matrix>> = vec![None; group.order()];
        let id = group.identity_index();
        assigned[id] = Some(Matrix::identity(dim));
        let mut queue = VecDeque::from([id]);
        while let Some(gi) = queue.pop_front() {
            let rg = assigned[gi].clone().expect("queued elements are assigned");
            for (s, ms) in generators.iter().zip(matrices) {
                let h = s.mul(group.element(gi));
                let hi = group.index_of(&h).ok_or_else(|| {
                    Error::NotARepresentation(format!("generator {} is not in the group", s))
                })?;
                let candidate = ms.mul(&rg);
                match &assigned[hi] {
                    Some(existing) if *existing != candidate => {
                        return Err(Error::NotARepresentation(format!(
                            "inconsistent matrix for {}",
                            h
                        )));
                    }
                    Some(_) => {}
                    None => {
                        assigned[hi] = Some(candidate);
                        queue.push_back(hi);
                    }
                }
            }
        }
        let matrices = assigned
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotARepresentation("generators do not generate the group".into()))?;
        Ok(Representation { group, dim, matrices })
    }

    /// Tabulates `f` on every element and verifies multiplicativity on
    /// generators.
    pub fn from_fn(group: Arc<PermGroup>, dim: usize, f: impl Fn(&Permutation) -> Matrix) -> Result<Self> {
        let matrices: Vec<Matrix> = group.elements().iter().map(f).collect();
        let rep = Representation { group, dim, matrices };
        rep.verify()?;
        Ok(rep)
    }

    /// `ρ(1) = I` and `ρ(sg) = ρ(s)ρ(g)` for every generator `s` and element `g`.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        if self.matrices.len() != g.order() {
            return Err(Error::SizeMismatch("one matrix per element".into()));
        }
        if self.matrices[g.identity_index()] != Matrix::identity(self.dim) {
            return Err(Error::NotARepresentation("ρ(1) is not the identity".into()));
        }
        for s in g.generators() {
            let si = g.index_of(s).expect("generators are elements");
            for (hi, h) in g.elements().iter().enumerate() {
                let shi = g.index_of(&s.mul(h)).expect("closed group");
                if self.matrices[si].mul(&self.matrices[hi]) != self.matrices[shi] {
                    return Err(Error::NotARepresentation(format!(
                        "ρ({})ρ({}) ≠ ρ({})",
                        s,
                        h,
                        s.mul(h)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(group: Arc<PermGroup>) -> Self {
        let matrices = vec![Matrix::identity(1); group.order()];
        Representation { group, dim: 1, matrices }
    }

    pub fn sign(group: Arc<PermGroup>) -> Self {
        let matrices = group
            .elements()
            .iter()
            .map(|p| {
                let even = p.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 0;
                Matrix::from_vec(1, 1, vec![q(if even { 1 } else { -1 })])
            })
            .collect();
        Representation { group, dim: 1, matrices }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, index: usize) -> &Matrix {
        &self.matrices[index]
    }

    pub fn matrix_of(&self, p: &Permutation) -> Option<&Matrix> {
        self.group.index_of(p).map(|i| &self.matrices[i])
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.group.same_elements(&other.group) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Representation {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    pub fn character(&self) -> ClassFunction {
        ClassFunction::from_fn(self.group.clone(), |p| {
            self.matrix_of(p).expect("element of the group").trace()
        })
    }

    /// Product irreducible `V(λ_1) ⊠ ⋯ ⊠ V(λ_m)` of `Π 𝔖(S_b)` evaluated on
    /// each element of `group`, after mapping it through `twist`.
    pub fn product_irrep(
        group: Arc<PermGroup>,
        blocks: &[Vec<usize>],
        parts: &[Partition],
        twist: impl Fn(&Permutation) -> Permutation,
    ) -> Result<Self> {
        if blocks.len() != parts.len() {
            return Err(Error::SizeMismatch("one partition per block".into()));
        }
        let dim = parts.iter().map(stab_count).product::<u128>() as usize;
        Self::from_fn(group, dim, |k| {
            let k0 = twist(k);
            let mut m = Matrix::identity(1);
            for (b, lam) in blocks.iter().zip(parts) {
                m = m.kron(&seminormal_matrix(lam, &restrict_to_block(&k0, b)));
            }
            m
        })
    }
}

/// The permutation of `{0..|b|}` induced by `p` on the (sorted) block `b`.
fn restrict_to_block(p: &Permutation, b: &[usize]) -> Permutation {
    let pos: HashMap<usize, usize> = b.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let images = b.iter().map(|&v| pos[&p.apply(v)]).collect();
    Permutation::from_images(images).expect("p preserves the block")
}

/// Standard Young tableaux of shape `λ`, each as the (row, col) of entries `0..m`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        lambda: &[usize],
        filled: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        m: usize,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for row in 0..lambda.len() {
            let col = filled[row];
            if col < lambda[row] && (row == 0 || filled[row - 1] > col) {
                filled[row] += 1;
                cur.push((row, col));
                rec(lambda, filled, cur, out, m);
                cur.pop();
                filled[row] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        lambda.parts(),
        &mut vec![0; lambda.len()],
        &mut Vec::new(),
        &mut out,
        lambda.size(),
    );
    out
}

/// Young's seminormal matrices of the adjacent transpositions `s_0, …, s_{m-2}`.
///
/// With content difference `r = c(i+1) − c(i)`, `s_i` acts on the pair
/// `(T, s_i T)` with `r > 0` by `[[1/r, 1 − 1/r²], [1, −1/r]]`, and by `1/r`
/// on `T` when `s_i T` is not standard.
pub fn seminormal_generators(lambda: &Partition) -> Vec<Matrix> {
    let tabs = standard_tableaux(lambda);
    let index: HashMap<Vec<(usize, usize)>, usize> =
        tabs.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let d = tabs.len();
    let m = lambda.size();
    (0..m.saturating_sub(1))
        .map(|i| {
            let mut mat = Matrix::zeros(d, d);
            for (ti, t) in tabs.iter().enumerate() {
                let content = |(r, c): (usize, usize)| c as i64 - r as i64;
                let r = content(t[i + 1]) - content(t[i]);
                let rr = q(r);
                mat.set(ti, ti, Rational::one() / &rr);
                let mut swapped = t.clone();
                swapped.swap(i, i + 1);
                if let Some(&si) = index.get(&swapped) {
                    if r > 0 {
                        mat.set(si, ti, q(1));
                    } else {
                        mat.set(si, ti, Rational::one() - Rational::one() / (&rr * &rr));
                    }
                }
            }
            mat
        })
        .collect()
}

type IrrepTable = HashMap<Permutation, Matrix>;

fn irrep_cache() -> &'static Mutex<HashMap<Vec<usize>, Arc<IrrepTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<IrrepTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn irrep_table(lambda: &Partition) -> Arc<IrrepTable> {
    if let Some(t) = irrep_cache().lock().expect("cache lock").get(lambda.parts()) {
        return t.clone();
    }
    let m = lambda.size();
    let gens: Vec<Permutation> = (0..m.saturating_sub(1))
        .map(|i| Permutation::transposition(m, i, i + 1))
        .collect();
    let mats = seminormal_generators(lambda);
    let d = stab_count(lambda) as usize;
    let mut table: IrrepTable = HashMap::new();
    table.insert(Permutation::identity(m), Matrix::identity(d));
    let mut queue = VecDeque::from([Permutation::identity(m)]);
    while let Some(g) = queue.pop_front() {
        let rg = table[&g].clone();
        for (s, ms) in gens.iter().zip(&mats) {
            let h = s.mul(&g);
            if !table.contains_key(&h) {
                table.insert(h.clone(), ms.mul(&rg));
                queue.push_back(h);
            }
        }
    }
    let table = Arc::new(table);
    irrep_cache()
        .lock()
        .expect("cache lock")
        .insert(lambda.parts().to_vec(), table.clone());
    table
}

/// `ρ_λ(σ)` for `σ ∈ 𝔖_{|λ|}` in Young's seminormal basis.
pub fn seminormal_matrix(lambda: &Partition, sigma: &Permutation) -> Matrix {
    irrep_table(lambda)[sigma].clone()
}

/// The seminormal irreducible `V(λ)` of `𝔖_m` as a representation.
pub fn symmetric_irrep(group: Arc<PermGroup>, lambda: &Partition) -> Result<Representation> {
    let d = stab_count(lambda) as usize;
    Representation::from_fn(group, d, |p| seminormal_matrix(lambda, p))
}

/// All seminormal irreducibles of `𝔖_m`, in [`partitions`] order.
pub fn symmetric_irreps(m: usize) -> Result<Vec<(Partition, Representation)>> {
    let g = Arc::new(PermGroup::symmetric(m)?);
    partitions(m)
        .into_iter()
        .map(|l| Ok((l.clone(), symmetric_irrep(g.clone(), &l)?)))
        .collect()
}

#[derive(Deserialize)]
struct RepresentationJson {
    degree: usize,
    group_generators: Vec<String>,
    matrices: Vec<Vec<String>>,
}

impl Representation {
    /// Reads `{degree, group_generators: [cycle strings], matrices: [row-major "p/q"]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepresentationJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let gens = raw
            .group_generators
            .iter()
            .map(|s| Permutation::parse(raw.degree, s))
            .collect::<Result<Vec<_>>>()?;
        let mats = raw
            .matrices
            .iter()
            .map(|m| {
                let entries = m.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                Matrix::square_from_row_major(entries)
            })
            .collect::<Result<Vec<_>>>()?;
        let group = Arc::new(PermGroup::close(raw.degree, gens.clone())?);
        Self::from_generators(group, &gens, &mats)
    }

    /// `dim {X | ρ(s)X = Xρ(s) for all generators s}`; equal to 1 exactly
    /// when the representation is absolutely simple.
    pub fn commutant_dim(&self) -> usize {
        let d = self.dim;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for s in self.group.generators() {
            let m = self.matrix_of(s).expect("generator");
            // (m X − X m)[i][j] = 0 with X row-major unknowns
            for i in 0..d {
                for j in 0..d {
                    let mut row = vec![Rational::zero(); d * d];
                    for k in 0..d {
                        row[k * d + j] += m.get(i, k);
                        row[i * d + k] -= m.get(k, j);
                    }
                    rows.push(row);
                }
            }
        }
        crate::linalg::nullspace(&rows, d * d).len()
    }
}
