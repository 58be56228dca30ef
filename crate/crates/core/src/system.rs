//! Coxeter systems and their elements.
//!
//! An element is stored as the permutation it induces on the root set, acting
//! on the right: `perm[i]` is the index of `root_i . w`. Products compose left
//! to right, `(a*b).perm[i] = b.perm[a.perm[i]]`, so a word `s_1 s_2 ... s_l`
//! applies `s_1` first, matching the right-action convention used for cycle
//! notation of permutations.

use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::ctype::CoxeterType;
use crate::error::{CoxeterError, Result};
use crate::roots::RootSystem;
use crate::store::ElementStore;
use crate::subset::SubsetJ;
use crate::Rational;

/// Default limit on the order of groups that may be enumerated.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ctype: CoxeterType,
    perm: Arc<[u16]>,
}

impl Element {
    pub(crate) fn from_perm(ctype: CoxeterType, perm: Vec<u16>) -> Self {
        Element { ctype, perm: perm.into() }
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    fn positive(&self) -> usize {
        self.perm.len() / 2
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.positive();
        self.perm[..n].iter().filter(|&&k| k as usize >= n).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &k)| i == k as usize)
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &k) in self.perm.iter().enumerate() {
            inv[k as usize] = i as u16;
        }
        Element::from_perm(self.ctype, inv)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        if self.ctype != other.ctype {
            return Err(CoxeterError::MixedSystems(self.ctype.to_string(), other.ctype.to_string()));
        }
        let perm = self.perm.iter().map(|&k| other.perm[k as usize]).collect();
        Ok(Element::from_perm(self.ctype, perm))
    }

    /// `x^-1 * self * x`.
    pub fn conjugate_by(&self, x: &Element) -> Element {
        &(&x.inverse() * self) * x
    }

    pub fn commutes_with(&self, x: &Element) -> bool {
        (self * x) == (x * self)
    }

    /// Left descent set `{s : l(s w) < l(w)}`.
    pub fn descent_set(&self) -> SubsetJ {
        let n = self.positive();
        SubsetJ::from_indices((0..self.ctype.rank()).filter(|&s| self.perm[s] as usize >= n))
    }

    pub fn ascent_set(&self) -> SubsetJ {
        self.descent_set().complement(self.ctype.rank())
    }

    /// Right descent set `{s : l(w s) < l(w)}`.
    pub fn right_descent_set(&self) -> SubsetJ {
        self.inverse().descent_set()
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("multiplying elements of different Coxeter systems")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}, len {})", self.ctype, self.length())
    }
}

/// Which descent a word reduction strips first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    SmallestDescent,
    LargestDescent,
}

/// An immutable finite Coxeter system with its root permutation representation.
#[derive(Debug)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    matrix: Vec<Vec<u32>>,
    roots: RootSystem<Rational>,
    generators: Vec<Element>,
    order: u64,
}

impl CoxeterSystem {
    pub fn build(ctype: CoxeterType) -> Result<Self> {
        let roots = RootSystem::<Rational>::new(ctype)?;
        let generators = roots.actions().iter().map(|p| Element::from_perm(ctype, p.clone())).collect();
        let mut sys = CoxeterSystem { ctype, matrix: ctype.coxeter_matrix(), roots, generators, order: 0 };
        sys.order = sys.order_by_parabolic_chain();
        Ok(sys)
    }

    /// `|W|` as a product of transversal sizes `|W_{J_k} : W_{J_{k-1}}|`
    /// along `J_k = {0..k}`. Each transversal is the set of minimal coset
    /// representatives, grown by right multiplication (prefixes of minimal
    /// representatives are minimal representatives).
    fn order_by_parabolic_chain(&self) -> u64 {
        let rank = self.rank();
        let mut order = 1u64;
        for k in 0..rank {
            let prev = SubsetJ::full(k);
            let gens: Vec<&Element> = (0..=k).map(|i| &self.generators[i]).collect();
            let id = self.identity();
            let mut seen: FxHashSet<Vec<u16>> = FxHashSet::default();
            seen.insert(self.key(&id));
            let mut frontier = vec![id];
            let mut count = 1u64;
            while let Some(x) = frontier.pop() {
                for s in &gens {
                    let y = &x * s;
                    if !prev.is_subset(y.ascent_set()) {
                        continue;
                    }
                    if seen.insert(self.key(&y)) {
                        count += 1;
                        frontier.push(y);
                    }
                }
            }
            order *= count;
        }
        order
    }

    pub(crate) fn key(&self, w: &Element) -> Vec<u16> {
        w.perm[..self.rank()].to_vec()
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }
    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }
    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }
    pub fn order(&self) -> u64 {
        self.order
    }
    pub fn positive_root_count(&self) -> usize {
        self.roots.positive_count()
    }
    pub fn root_count(&self) -> usize {
        2 * self.roots.positive_count()
    }
    pub fn root_system(&self) -> &RootSystem<Rational> {
        &self.roots
    }
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }
    pub fn generator(&self, i: usize) -> &Element {
        &self.generators[i]
    }
    pub fn all_generators(&self) -> SubsetJ {
        SubsetJ::full(self.rank())
    }

    pub fn identity(&self) -> Element {
        Element::from_perm(self.ctype, (0..self.root_count() as u16).collect())
    }

    fn check_home(&self, w: &Element) -> Result<()> {
        if w.ctype != self.ctype {
            return Err(CoxeterError::MixedSystems(self.ctype.to_string(), w.ctype.to_string()));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_home(a)?;
        self.check_home(b)?;
        a.try_mul(b)
    }

    pub fn length(&self, w: &Element) -> usize {
        w.length()
    }

    pub fn descent_set(&self, w: &Element) -> SubsetJ {
        w.descent_set()
    }

    pub fn ascent_set(&self, w: &Element) -> SubsetJ {
        w.ascent_set()
    }

    /// `J(w)`: generators in a reduced word, read off as the union of the
    /// supports of the inversion roots.
    pub fn support(&self, w: &Element) -> SubsetJ {
        let n = self.positive_root_count();
        let sup = self.roots.supports();
        SubsetJ(w.perm[..n].iter().enumerate().filter(|(_, &k)| k as usize >= n).fold(0, |m, (i, _)| m | sup[i]))
    }

    /// Reduced word, stripping the smallest left descent first (this is the
    /// lexicographically smallest reduced word). 0-based generator indices.
    pub fn reduce_word(&self, w: &Element) -> Vec<usize> {
        self.reduce_word_with(w, ReductionOrder::SmallestDescent)
    }

    pub fn reduce_word_with(&self, w: &Element, order: ReductionOrder) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        loop {
            let d = cur.descent_set();
            let s = match order {
                ReductionOrder::SmallestDescent => d.iter().next(),
                ReductionOrder::LargestDescent => d.iter().last(),
            };
            let Some(s) = s else { break };
            word.push(s);
            cur = &self.generators[s] * &cur;
        }
        word
    }

    /// Product of generators, 0-based indices.
    pub fn element_from_word(&self, word: &[usize]) -> Result<Element> {
        let mut w = self.identity();
        for &s in word {
            let g = self.generators.get(s).ok_or_else(|| {
                CoxeterError::Parse(format!("generator {} out of range for {}", s + 1, self.ctype))
            })?;
            w = &w * g;
        }
        Ok(w)
    }

    /// Product of generators given with 1-based labels (the serialized form).
    pub fn element_from_labels(&self, labels: &[usize]) -> Result<Element> {
        if labels.contains(&0) {
            return Err(CoxeterError::Parse("generator labels are 1-based".into()));
        }
        self.element_from_word(&labels.iter().map(|l| l - 1).collect::<Vec<_>>())
    }

    /// Reduced word with 1-based labels.
    pub fn word_labels(&self, w: &Element) -> Vec<usize> {
        self.reduce_word(w).into_iter().map(|s| s + 1).collect()
    }

    /// The longest element `w_J` of the standard parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: SubsetJ) -> Element {
        let mut w = self.identity();
        while let Some(s) = j.difference(w.descent_set()).iter().next() {
            w = &self.generators[s] * &w;
        }
        w
    }

    pub fn longest(&self) -> Element {
        self.longest_element(self.all_generators())
    }

    /// `J^x = {x^-1 s x : s in J}` if every conjugate is simple.
    pub fn conjugate_subset(&self, j: SubsetJ, x: &Element) -> Option<SubsetJ> {
        let mut out = SubsetJ::EMPTY;
        for s in j.iter() {
            let c = self.generators[s].conjugate_by(x);
            let t = self.generators.iter().position(|g| *g == c)?;
            out = out.with(t);
        }
        Some(out)
    }

    pub fn enumerate(&self, budget: u64) -> Result<ElementStore> {
        ElementStore::build(self, budget)
    }
}
