//! On-disk JSON cache of class tables.
//!
//! Files carry a schema number and the engine version; a mismatch in either
//! makes the file stale and it is ignored.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::conjugacy::ConjClassRecord;
use crate::ctype::CoxeterType;
use crate::group::Group;

pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedClassTable {
    pub schema: u32,
    pub engine: String,
    pub ctype: CoxeterType,
    pub order: u64,
    pub records: Vec<ConjClassRecord>,
}

impl CachedClassTable {
    pub fn from_group(g: &Group) -> Self {
        CachedClassTable {
            schema: SCHEMA_VERSION,
            engine: ENGINE_VERSION.to_string(),
            ctype: g.ctype(),
            order: g.order(),
            records: g.classes().records.clone(),
        }
    }

    pub fn path(dir: &Path, ctype: CoxeterType) -> PathBuf {
        dir.join(format!("classes-{}.json", ctype.to_string().replace(':', "_")))
    }

    pub fn is_current(&self) -> bool {
        self.schema == SCHEMA_VERSION && self.engine == ENGINE_VERSION
    }

    pub fn save(&self, dir: &Path) -> io::Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = Self::path(dir, self.ctype);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(self)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// The cached table for `ctype`, if present, readable and current.
    pub fn load(dir: &Path, ctype: CoxeterType) -> Option<Self> {
        let bytes = fs::read(Self::path(dir, ctype)).ok()?;
        let table: Self = serde_json::from_slice(&bytes).ok()?;
        (table.is_current() && table.ctype == ctype).then_some(table)
    }
}

/// Class records for `g`, from the cache when current, otherwise computed
/// and written back. The flag tells whether the cache was used.
pub fn load_or_compute(g: &Group, dir: &Path) -> io::Result<(Vec<ConjClassRecord>, bool)> {
    if let Some(t) = CachedClassTable::load(dir, g.ctype()) {
        return Ok((t.records, true));
    }
    let t = CachedClassTable::from_group(g);
    t.save(dir)?;
    Ok((t.records, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn round_trip_is_identical() {
        let dir = tempfile::tempdir().unwrap();
        let g = Group::new("D4".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        let (first, cached) = load_or_compute(&g, dir.path()).unwrap();
        assert!(!cached);
        let bytes = fs::read(CachedClassTable::path(dir.path(), g.ctype())).unwrap();
        let (second, cached) = load_or_compute(&g, dir.path()).unwrap();
        assert!(cached);
        assert_eq!(first, second);
        CachedClassTable::from_group(&g).save(dir.path()).unwrap();
        assert_eq!(fs::read(CachedClassTable::path(dir.path(), g.ctype())).unwrap(), bytes);
    }

    #[test]
    fn stale_versions_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let g = Group::new("I2:5".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        let mut t = CachedClassTable::from_group(&g);
        t.engine = "0.0.0-old".into();
        let path = t.save(dir.path()).unwrap();
        assert!(path.ends_with("classes-I2_5.json"));
        assert!(CachedClassTable::load(dir.path(), g.ctype()).is_none());
        fs::write(&path, b"not json").unwrap();
        assert!(CachedClassTable::load(dir.path(), g.ctype()).is_none());
        let (_, cached) = load_or_compute(&g, dir.path()).unwrap();
        assert!(!cached);
        assert!(CachedClassTable::load(dir.path(), g.ctype()).is_some());
    }
}
