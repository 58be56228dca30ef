//! Full enumeration of a Coxeter group with a perfect index.
//!
//! Elements are numbered `0..|W|` in shortlex order of their lexicographically
//! smallest reduced words (breadth first by length, ties by word). Set-level
//! operations elsewhere in the crate work on these indices.

use rustc_hash::FxHashMap;

use crate::ctype::CoxeterType;
use crate::error::{CoxeterError, Result};
use crate::subset::SubsetJ;
use crate::system::{CoxeterSystem, Element};

pub type ElemId = u32;

pub struct ElementStore {
    ctype: CoxeterType,
    rank: usize,
    npos: usize,
    nroots: usize,
    key_bits: u32,
    perms: Vec<u16>,
    index: FxHashMap<u128, ElemId>,
    length: Vec<u16>,
    descents: Vec<u32>,
    support: Vec<u32>,
    inverse: Vec<ElemId>,
    lmul: Vec<ElemId>,
    rmul: Vec<ElemId>,
}

fn pack(images: impl Iterator<Item = u16>, bits: u32) -> u128 {
    images.fold(0u128, |acc, k| (acc << bits) | k as u128)
}

impl ElementStore {
    pub(crate) fn build(sys: &CoxeterSystem, budget: u64) -> Result<Self> {
        let order = sys.order();
        if order > budget {
            return Err(CoxeterError::BudgetExceeded { order, budget });
        }
        let rank = sys.rank();
        let nroots = sys.root_count();
        let npos = nroots / 2;
        let key_bits = usize::BITS - (nroots - 1).leading_zeros();
        if key_bits as usize * rank > 128 {
            return Err(CoxeterError::Unsupported(format!("{} is too large to index", sys.ctype())));
        }
        let mut store = ElementStore {
            ctype: sys.ctype(),
            rank,
            npos,
            nroots,
            key_bits,
            perms: Vec::with_capacity(order as usize * nroots),
            index: FxHashMap::default(),
            length: Vec::with_capacity(order as usize),
            descents: Vec::new(),
            support: Vec::new(),
            inverse: Vec::new(),
            lmul: Vec::new(),
            rmul: Vec::new(),
        };
        store.index.reserve(order as usize);
        let gens: Vec<&[u16]> = sys.generators().iter().map(|g| g.perm()).collect();

        // level-by-level BFS over left multiplication
        let identity: Vec<u16> = (0..nroots as u16).collect();
        store.push(&identity, 0);
        let mut level_start = 0usize;
        let mut len = 0u16;
        loop {
            let level_end = store.length.len();
            let mut next: FxHashMap<u128, Vec<u16>> = FxHashMap::default();
            for x in level_start..level_end {
                let xp = store.perm_of(x as ElemId).to_vec();
                for (s, g) in gens.iter().enumerate() {
                    if xp[s] as usize >= npos {
                        continue; // s is a left descent of x
                    }
                    // (s*x).perm[i] = x.perm[s.perm[i]]
                    let y: Vec<u16> = g.iter().map(|&k| xp[k as usize]).collect();
                    let key = pack(y[..rank].iter().copied(), key_bits);
                    next.entry(key).or_insert(y);
                }
            }
            if next.is_empty() {
                break;
            }
            // sort key: (smallest left descent d, position of d*y in the current level)
            let mut batch: Vec<(usize, ElemId, Vec<u16>)> = next
                .into_values()
                .map(|y| {
                    let d = (0..rank).find(|&s| y[s] as usize >= npos).expect("nonidentity has a descent");
                    let dy: Vec<u16> = gens[d][..rank].iter().map(|&k| y[k as usize]).collect();
                    let pos = store.index[&pack(dy.into_iter(), key_bits)];
                    (d, pos, y)
                })
                .collect();
            batch.sort_unstable_by_key(|(d, pos, _)| (*d, *pos));
            len += 1;
            for (_, _, y) in batch {
                store.push(&y, len);
            }
            level_start = level_end;
        }
        if store.length.len() as u64 != order {
            return Err(CoxeterError::Invariant(format!(
                "enumeration found {} elements, expected {order}",
                store.length.len()
            )));
        }
        store.finish(sys);
        Ok(store)
    }

    fn push(&mut self, perm: &[u16], len: u16) {
        let id = self.length.len() as ElemId;
        self.index.insert(pack(perm[..self.rank].iter().copied(), self.key_bits), id);
        self.perms.extend_from_slice(perm);
        self.length.push(len);
    }

    fn finish(&mut self, sys: &CoxeterSystem) {
        let n = self.len();
        let sup = sys.root_system().supports();
        let npos = self.npos;
        self.descents = (0..n)
            .map(|x| {
                let p = self.perm_of(x as ElemId);
                (0..self.rank).filter(|&s| p[s] as usize >= npos).fold(0u32, |m, s| m | 1 << s)
            })
            .collect();
        self.support = (0..n)
            .map(|x| {
                let p = self.perm_of(x as ElemId);
                (0..npos).filter(|&i| p[i] as usize >= npos).fold(0u32, |m, i| m | sup[i])
            })
            .collect();
        self.inverse = (0..n)
            .map(|x| {
                let p = self.perm_of(x as ElemId);
                let mut inv = vec![0u16; self.nroots];
                for (i, &k) in p.iter().enumerate() {
                    inv[k as usize] = i as u16;
                }
                self.lookup(&inv[..self.rank])
            })
            .collect();
        let gen_ids: Vec<ElemId> = sys.generators().iter().map(|g| self.lookup(&g.perm()[..self.rank])).collect();
        let mut lmul = vec![0; n * self.rank];
        let mut rmul = vec![0; n * self.rank];
        for x in 0..n as ElemId {
            for (s, &g) in gen_ids.iter().enumerate() {
                lmul[x as usize * self.rank + s] = self.mul(g, x);
                rmul[x as usize * self.rank + s] = self.mul(x, g);
            }
        }
        self.lmul = lmul;
        self.rmul = rmul;
    }

    fn lookup(&self, simple_images: &[u16]) -> ElemId {
        self.index[&pack(simple_images.iter().copied(), self.key_bits)]
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn len(&self) -> usize {
        self.length.len()
    }
    pub fn is_empty(&self) -> bool {
        self.length.is_empty()
    }
    pub fn order(&self) -> u64 {
        self.len() as u64
    }
    pub fn ids(&self) -> impl Iterator<Item = ElemId> + Clone {
        0..self.len() as ElemId
    }
    pub fn identity(&self) -> ElemId {
        0
    }
    pub fn generator(&self, s: usize) -> ElemId {
        self.lmul[s] // s * e
    }

    pub fn perm_of(&self, x: ElemId) -> &[u16] {
        let k = x as usize * self.nroots;
        &self.perms[k..k + self.nroots]
    }

    pub fn element(&self, x: ElemId) -> Element {
        Element::from_perm(self.ctype, self.perm_of(x).to_vec())
    }

    pub fn id_of(&self, w: &Element) -> Result<ElemId> {
        if w.ctype() != self.ctype {
            return Err(CoxeterError::MixedSystems(self.ctype.to_string(), w.ctype().to_string()));
        }
        self.index
            .get(&pack(w.perm()[..self.rank].iter().copied(), self.key_bits))
            .copied()
            .ok_or_else(|| CoxeterError::Invariant("element not in enumeration".into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.ids().map(move |x| self.element(x))
    }

    pub fn length(&self, x: ElemId) -> usize {
        self.length[x as usize] as usize
    }
    pub fn descents(&self, x: ElemId) -> SubsetJ {
        SubsetJ(self.descents[x as usize])
    }
    pub fn ascents(&self, x: ElemId) -> SubsetJ {
        self.descents(x).complement(self.rank)
    }
    /// `J(x)`.
    pub fn support(&self, x: ElemId) -> SubsetJ {
        SubsetJ(self.support[x as usize])
    }
    pub fn in_parabolic(&self, x: ElemId, j: SubsetJ) -> bool {
        self.support(x).is_subset(j)
    }
    pub fn inverse(&self, x: ElemId) -> ElemId {
        self.inverse[x as usize]
    }
    /// `s * x`.
    pub fn left_gen(&self, s: usize, x: ElemId) -> ElemId {
        self.lmul[x as usize * self.rank + s]
    }
    /// `x * s`.
    pub fn right_gen(&self, x: ElemId, s: usize) -> ElemId {
        self.rmul[x as usize * self.rank + s]
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let pa = self.perm_of(a);
        let pb = self.perm_of(b);
        let key = pack(pa[..self.rank].iter().map(|&k| pb[k as usize]), self.key_bits);
        self.index[&key]
    }

    /// `x^-1 w x`.
    pub fn conj(&self, w: ElemId, x: ElemId) -> ElemId {
        let px = self.perm_of(x);
        let pw = self.perm_of(w);
        let pxi = self.perm_of(self.inverse(x));
        let key = pack(pxi[..self.rank].iter().map(|&k| px[pw[k as usize] as usize]), self.key_bits);
        self.index[&key]
    }

    pub fn commute(&self, a: ElemId, b: ElemId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_involution(&self, x: ElemId) -> bool {
        x != 0 && self.inverse(x) == x
    }

    pub fn element_order(&self, x: ElemId) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Smallest-descent-first reduced word, 0-based.
    pub fn reduce_word(&self, x: ElemId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(x));
        let mut cur = x;
        while let Some(s) = self.descents(cur).iter().next() {
            word.push(s);
            cur = self.left_gen(s, cur);
        }
        word
    }

    pub fn from_word(&self, word: &[usize]) -> ElemId {
        word.iter().fold(0, |x, &s| self.right_gen(x, s))
    }

    pub fn longest_element(&self, j: SubsetJ) -> ElemId {
        let mut w = 0;
        while let Some(s) = j.difference(self.descents(w)).iter().next() {
            w = self.left_gen(s, w);
        }
        w
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[ElemId]) -> Vec<ElemId> {
        self.closure_bounded(gens, usize::MAX, |_| true).expect("unbounded closure")
    }

    /// Subgroup closure that aborts (returning `None`) as soon as it exceeds
    /// `cap` elements or meets an element rejected by `accept`.
    pub fn closure_bounded(&self, gens: &[ElemId], cap: usize, accept: impl Fn(ElemId) -> bool) -> Option<Vec<ElemId>> {
        let mut seen = rustc_hash::FxHashSet::default();
        seen.insert(0);
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    if !accept(y) || out.len() >= cap {
                        return None;
                    }
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        Some(out)
    }
}
