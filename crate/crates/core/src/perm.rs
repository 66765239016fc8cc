//! Permutations of `{1..n}`, permutation groups enumerated by closure,
//! conjugacy classes, Young subgroups and coset decompositions.
//!
//! Points are stored 0-based; every textual form is 1-based. Composition
//! follows the left-action convention: `a.compose(&b)` maps `i` to `a(b(i))`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default bound on the number of elements a group may enumerate to.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Invalid(format!(
                    "images {:?} do not form a bijection",
                    images
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::Parse("one-line images are 1-based".into()));
        }
        Self::from_images(one_based.iter().map(|v| v - 1).collect())
    }

    /// Builds a permutation of the given degree from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Invalid(format!(
                        "point {} exceeds degree {}",
                        p + 1,
                        degree
                    )));
                }
                if touched[p] {
                    return Err(Error::Invalid(format!(
                        "point {} appears in two cycles",
                        p + 1
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Transposition of two 0-based points.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// `self ∘ other` without the degree check.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `self^r` for any integer `r`.
    pub fn pow(&self, r: i64) -> Permutation {
        let base = if r < 0 { self.inverse() } else { self.clone() };
        let mut e = r.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        result
    }

    /// `c^{-1} self c`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        c.inverse().mul(self).mul(c)
    }

    /// Disjoint cycles (0-based) including fixed points, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        Partition::from_parts_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Cycle type of the restriction to `points`, which must be invariant.
    pub fn cycle_type_on(&self, points: &[usize]) -> CycleType {
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.degree()];
        for &start in points {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            lengths.push(len);
        }
        Partition::from_parts_unsorted(lengths)
    }

    /// Order of the permutation: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num::integer::lcm)
    }

    /// Image of a set of points encoded as a bitmask.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            m &= m - 1;
        }
        out
    }

    /// 1-based one-line notation, e.g. `[2,1,3]`.
    pub fn to_one_line(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Cycle notation with fixed points omitted, e.g. `(1 2)(3 4)`; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push('(');
            s.push_str(&pts.join(" "));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Parses either one-line form `[2,1,3]` or cycle form `(1 2)(3 4)`.
    pub fn parse(degree: usize, text: &str) -> Result<Permutation> {
        let t = text.trim();
        if t.starts_with('[') {
            let p = parse_one_line(t)?;
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
            Ok(p)
        } else {
            parse_cycles(degree, t)
        }
    }
}

fn parse_one_line(t: &str) -> Result<Permutation> {
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..] in {:?}", t)))?;
    if inner.trim().is_empty() {
        return Ok(Permutation::identity(0));
    }
    let vals = inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_one_line(&vals)
}

fn parse_cycles(degree: usize, t: &str) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {:?}", t)))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {:?}", t)))?;
        let body = &open[..close];
        let pts = body
            .split_whitespace()
            .map(|s| {
                let v = s
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))?;
                if v == 0 {
                    return Err(Error::Parse("cycle points are 1-based".into()));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = open[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Only the one-line form carries its own degree.
    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s.trim())
    }
}

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// Cycle types are partitions of the degree.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {:?} is not weakly decreasing", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ordered block sizes `(α₁,…,α_ℓ)`. Zero parts are only admitted through
/// [`Composition::with_zeros`], for flattened block-intersection data.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid("composition must have at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("composition {:?} has a zero part", parts)));
        }
        Ok(Composition(parts))
    }

    pub fn with_zeros(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Consecutive 0-based blocks `A_1 = [α₁]`, `A_2 = α₁ + [α₂]`, …
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&a| {
                let b: Vec<usize> = (start..start + a).collect();
                start += a;
                b
            })
            .collect()
    }

    /// Parses `2,2` or `(2,2)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t);
        let parts = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    /// All compositions of `n` (n ≥ 1), in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for first in 1..=rest {
                cur.push(first);
                rec(rest - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug)]
pub struct ConjugacyClasses {
    /// Element indices per class, ascending; `classes[c][0]` is the representative.
    pub classes: Vec<Vec<usize>>,
    /// Class index of each element.
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A finite permutation group with its full element list.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    blocks: Option<Vec<Vec<usize>>>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.mul(&g);
            if !seen.contains_key(&h) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group",
                        size: seen.len() + 1,
                        cap,
                    });
                }
                seen.insert(h.clone(), ());
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out.sort();
    Ok(out)
}

impl PermGroup {
    /// Enumerates the group generated by `generators` with the default cap.
    pub fn close(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        Self::close_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn close_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let elements = closure(degree, &generators, cap)?;
        Ok(Self::assemble(degree, generators, elements, None))
    }

    /// Builds a group from an element list already known to be closed.
    /// A generating set is chosen greedily in element order.
    pub fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> PermGroup {
        elements.sort();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashMap<Permutation, ()> = HashMap::new();
        span.insert(Permutation::identity(degree), ());
        for e in &elements {
            if !span.contains_key(e) {
                generators.push(e.clone());
                span = closure(degree, &generators, usize::MAX)
                    .expect("uncapped closure")
                    .into_iter()
                    .map(|p| (p, ()))
                    .collect();
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Self::assemble(degree, generators, elements, None)
    }

    fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
        blocks: Option<Vec<Vec<usize>>>,
    ) -> PermGroup {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
            blocks,
            classes: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::assemble(degree, vec![], vec![Permutation::identity(degree)], None)
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Result<PermGroup> {
        Self::symmetric_on(degree, &(0..degree).collect::<Vec<_>>())
    }

    /// `𝔖(S)`: permutations of `degree` points fixing everything outside `points`.
    pub fn symmetric_on(degree: usize, points: &[usize]) -> Result<PermGroup> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        let gens: Vec<Permutation> = pts
            .windows(2)
            .map(|w| Permutation::transposition(degree, w[0], w[1]))
            .collect();
        let elements = closure(degree, &gens, DEFAULT_ELEMENT_CAP)?;
        Ok(Self::assemble(degree, gens, elements, Some(vec![pts])))
    }

    /// The Young subgroup `𝔖_α = 𝔖(A_1)⋯𝔖(A_ℓ)` on consecutive blocks. Zero
    /// parts contribute trivial factors.
    pub fn young(alpha: &Composition) -> Result<PermGroup> {
        Self::young_with_cap(alpha, DEFAULT_ELEMENT_CAP)
    }

    pub fn young_with_cap(alpha: &Composition, cap: usize) -> Result<PermGroup> {
        let degree = alpha.total();
        let blocks = alpha.blocks();
        let gens: Vec<Permutation> = blocks
            .iter()
            .flat_map(|b| {
                b.windows(2)
                    .map(|w| Permutation::transposition(degree, w[0], w[1]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let elements = closure(degree, &gens, cap)?;
        Ok(Self::assemble(degree, gens, elements, Some(blocks)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Block sets of a Young subgroup or `𝔖(S)`, when the group was built that way.
    pub fn blocks(&self) -> Option<&[Vec<usize>]> {
        self.blocks.as_deref()
    }

    /// Index of the identity, which is always the first element.
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && if self.generators.is_empty() {
                self.elements.iter().all(|e| other.contains(e))
            } else {
                self.generators.iter().all(|g| other.contains(g))
            }
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        let gens_inv: Vec<(Permutation, Permutation)> = self
            .generators
            .iter()
            .map(|g| (g.clone(), g.inverse()))
            .collect();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let g = &self.elements[i];
                for (s, s_inv) in &gens_inv {
                    let h = s.mul(g).mul(s_inv);
                    let j = self.index[&h];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Class index of an element of the group.
    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of(p)
            .map(|i| self.conjugacy_classes().class_of[i])
    }

    pub fn class_representatives(&self) -> Vec<&Permutation> {
        self.conjugacy_classes()
            .classes
            .iter()
            .map(|c| &self.elements[c[0]])
            .collect()
    }

    /// Left cosets `bH` of a subgroup, with canonical (minimal) representatives.
    pub fn left_cosets(&self, sub: &PermGroup) -> Result<CosetDecomposition> {
        self.coset_decomposition(sub, CosetSide::Left)
    }

    pub fn coset_decomposition(&self, sub: &PermGroup, side: CosetSide) -> Result<CosetDecomposition> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        let n = self.elements.len();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for start in 0..n {
            if coset_of[start] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(start);
            let b = &self.elements[start];
            match side {
                CosetSide::Left => {
                    for h in &sub.elements {
                        coset_of[self.index[&b.mul(h)]] = c;
                    }
                }
                CosetSide::Right => {
                    for h in &sub.elements {
                        coset_of[self.index[&h.mul(b)]] = c;
                    }
                }
                CosetSide::Double => {
                    coset_of[start] = c;
                    let mut queue = VecDeque::from([start]);
                    while let Some(i) = queue.pop_front() {
                        let g = &self.elements[i];
                        for s in &sub.generators {
                            for h in [s.mul(g), g.mul(s)] {
                                let j = self.index[&h];
                                if coset_of[j] == usize::MAX {
                                    coset_of[j] = c;
                                    queue.push_back(j);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(CosetDecomposition {
            side,
            reps,
            coset_of,
        })
    }

    /// Canonical coset representatives for the requested side.
    pub fn cosets(&self, sub: &PermGroup, side: CosetSide) -> Result<Vec<Permutation>> {
        let d = self.coset_decomposition(sub, side)?;
        Ok(d.reps.iter().map(|&i| self.elements[i].clone()).collect())
    }

    /// `self ∩ other` as an enumerated group.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let elems: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Ok(PermGroup::from_closed_elements(self.degree, elems))
    }

    /// `c H c^{-1}`.
    pub fn conjugate_subgroup(&self, c: &Permutation) -> PermGroup {
        let c_inv = c.inverse();
        let elems = self.elements.iter().map(|h| c.mul(h).mul(&c_inv)).collect();
        PermGroup::from_closed_elements(self.degree, elems)
    }

    /// Orbits of the group on `{0..degree}`, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                for g in &self.generators {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Returns the orbits on points when the group is the full product of the
    /// symmetric groups on its orbits.
    pub fn as_product_of_symmetric(&self) -> Option<Vec<Vec<usize>>> {
        let orbits = self.orbits();
        let mut expected: u128 = 1;
        for o in &orbits {
            expected = expected.checked_mul(factorial(o.len())?)?;
        }
        (expected == self.order() as u128).then_some(orbits)
    }

    /// Same element set.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.elements == other.elements
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSide {
    Left,
    Right,
    Double,
}

#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    pub side: CosetSide,
    /// Element index of each canonical representative, ascending.
    pub reps: Vec<usize>,
    /// Coset index of each element of the ambient group.
    pub coset_of: Vec<usize>,
}

impl CosetDecomposition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// `n!` when it fits in 128 bits.
pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// `n!/(n-k)!` when it fits in 128 bits.
pub fn falling_factorial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    ((n - k + 1) as u128..=n as u128).try_fold(1u128, |acc, v| acc.checked_mul(v))
}
