//! A Coxeter system together with its full enumeration.

use std::sync::OnceLock;

use crate::conjugacy::ClassTable;
use crate::ctype::CoxeterType;
use crate::error::Result;
use crate::store::{ElemId, ElementStore};
use crate::system::{CoxeterSystem, Element};

/// The working context for set-level computations: elements are addressed
/// by their [`ElemId`] in the shortlex enumeration.
pub struct Group {
    sys: CoxeterSystem,
    store: ElementStore,
    classes: OnceLock<ClassTable>,
}

impl Group {
    pub fn new(ctype: CoxeterType, budget: u64) -> Result<Self> {
        Self::from_system(CoxeterSystem::build(ctype)?, budget)
    }

    pub fn from_system(sys: CoxeterSystem, budget: u64) -> Result<Self> {
        let store = sys.enumerate(budget)?;
        Ok(Group { sys, store, classes: OnceLock::new() })
    }

    pub fn sys(&self) -> &CoxeterSystem {
        &self.sys
    }
    pub fn store(&self) -> &ElementStore {
        &self.store
    }
    pub fn ctype(&self) -> CoxeterType {
        self.sys.ctype()
    }
    pub fn rank(&self) -> usize {
        self.sys.rank()
    }
    pub fn order(&self) -> u64 {
        self.store.order()
    }

    pub fn element(&self, x: ElemId) -> Element {
        self.store.element(x)
    }
    pub fn id_of(&self, w: &Element) -> Result<ElemId> {
        self.store.id_of(w)
    }

    /// Reduced word with 1-based labels, the serialized form of an element.
    pub fn word(&self, x: ElemId) -> Vec<usize> {
        self.store.reduce_word(x).into_iter().map(|s| s + 1).collect()
    }

    pub fn from_labels(&self, labels: &[usize]) -> Result<ElemId> {
        self.id_of(&self.sys.element_from_labels(labels)?)
    }

    pub(crate) fn class_cache(&self) -> &OnceLock<ClassTable> {
        &self.classes
    }

    /// Membership mask over all ids.
    pub fn mask(&self, set: &[ElemId]) -> Vec<bool> {
        let mut m = vec![false; self.store.len()];
        for &x in set {
            m[x as usize] = true;
        }
        m
    }
}
