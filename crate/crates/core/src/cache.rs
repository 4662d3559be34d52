//! Content-addressed on-disk cache of reduced Gröbner bases.
//!
//! An entry's key is the SHA-256 of the engine version, characteristic,
//! variable list, term order and the sorted, normalized generator strings.
//! Entries are plain text and written atomically (temp file, then rename).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::polyring::{PolyRing, Polynomial};

/// Bumped whenever basis normalization or the entry format changes.
pub const ENGINE_VERSION: &str = "segrelab-gb-1";

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "SEGRELAB_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
    version: String,
}

/// A parsed cache entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    pub basis: Vec<String>,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<DiskCache> {
        DiskCache::with_version(dir, ENGINE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Result<DiskCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache {
            dir,
            version: version.to_string(),
        })
    }

    /// Uses `$SEGRELAB_CACHE_DIR` when set.
    pub fn from_env() -> Result<Option<DiskCache>> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Ok(Some(DiskCache::new(PathBuf::from(dir))?)),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Cache key for the basis of `gens` in `ring` (whose order is the basis order).
    pub fn key(&self, ring: &PolyRing, gens: &[Polynomial]) -> String {
        let mut lines: Vec<String> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.normalized().to_string())
            .collect();
        lines.sort();
        lines.dedup();
        let mut h = Sha256::new();
        h.update(format!("engine={}\n", self.version));
        h.update(format!("char={}\n", ring.characteristic()));
        h.update(format!("vars={}\n", ring.names().join(",")));
        h.update(format!("order={}\n", ring.order()));
        for l in &lines {
            h.update(l.as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.gb"))
    }

    pub fn read_entry(&self, key: &str) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let mut lines = text.lines();
        if lines.next()? != format!("segrelab-gb {}", self.version) {
            return None;
        }
        if lines.next()?.strip_prefix("key ")? != key {
            return None;
        }
        let count: usize = lines.next()?.strip_prefix("count ")?.parse().ok()?;
        let basis: Vec<String> = lines.map(str::to_string).collect();
        (basis.len() == count).then(|| CacheEntry {
            key: key.to_string(),
            basis,
        })
    }

    /// Cached basis, or `None` on a miss or an unreadable entry.
    pub fn load(&self, ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let key = self.key(ring, gens);
        let entry = self.read_entry(&key)?;
        entry
            .basis
            .iter()
            .map(|s| ring.parse(s).ok())
            .collect::<Option<Vec<_>>>()
    }

    pub fn store(&self, ring: &Arc<PolyRing>, gens: &[Polynomial], basis: &[Polynomial]) -> Result<PathBuf> {
        let key = self.key(ring, gens);
        let mut body = format!("segrelab-gb {}\nkey {key}\ncount {}\n", self.version, basis.len());
        for g in basis {
            body.push_str(&g.to_string());
            body.push('\n');
        }
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(body.as_bytes())?;
        let path = self.path(&key);
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }
}
