//! On-disk cache of exact counts: one JSON file per key, values as decimal
//! strings, written atomically.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use floorcount::{Invariant, Method};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheKey {
    pub degree: u32,
    pub genus: u32,
    pub kind: Invariant,
    pub method: Method,
}

impl CacheKey {
    pub fn name(&self) -> String {
        format!("{}-{}-d{}-g{}", self.kind, self.method, self.degree, self.genus)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    key: String,
    value: String,
    tool_version: String,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Creates the directory if needed and checks that it is writable.
    pub fn open(dir: &Path) -> io::Result<Cache> {
        fs::create_dir_all(dir)?;
        tempfile::NamedTempFile::new_in(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.name()))
    }

    /// `None` when missing; also `None`, with a warning, when unreadable.
    pub fn load(&self, key: &CacheKey, warnings: &mut dyn Write) -> Option<BigUint> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                let _ = writeln!(warnings, "warning: cannot read {}: {e}", path.display());
                return None;
            }
        };
        let parsed = serde_json::from_str::<Entry>(&text)
            .map_err(|e| e.to_string())
            .and_then(|entry| {
                if entry.key != key.name() {
                    return Err(format!("entry is for `{}`", entry.key));
                }
                entry
                    .value
                    .parse::<BigUint>()
                    .map_err(|_| format!("value `{}` is not a decimal integer", entry.value))
            });
        match parsed {
            Ok(v) => Some(v),
            Err(why) => {
                let _ = writeln!(
                    warnings,
                    "warning: ignoring corrupted cache entry {}: {why}",
                    path.display()
                );
                None
            }
        }
    }

    pub fn store(&self, key: &CacheKey, value: &BigUint) -> io::Result<()> {
        let entry = Entry {
            key: key.name(),
            value: value.to_string(),
            tool_version: TOOL_VERSION.to_string(),
        };
        let mut file = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer_pretty(&mut file, &entry)?;
        file.write_all(b"\n")?;
        file.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key() -> CacheKey {
        CacheKey {
            degree: 5,
            genus: 0,
            kind: Invariant::Complex,
            method: Method::FloorDiagrams,
        }
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let mut warn = Vec::new();
        assert_eq!(cache.load(&key(), &mut warn), None);
        cache.store(&key(), &BigUint::from(87304u32)).unwrap();
        assert_eq!(cache.load(&key(), &mut warn), Some(BigUint::from(87304u32)));
        assert!(warn.is_empty());
    }

    #[test]
    fn corrupted_entry_is_ignored_with_warning() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.store(&key(), &BigUint::from(87304u32)).unwrap();
        fs::write(cache.path(&key()), "{\"key\": ").unwrap();
        let mut warn = Vec::new();
        assert_eq!(cache.load(&key(), &mut warn), None);
        assert!(String::from_utf8(warn).unwrap().contains("corrupted"));
    }

    #[test]
    fn mismatched_key_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let other = CacheKey { degree: 4, ..key() };
        cache.store(&other, &BigUint::from(620u32)).unwrap();
        fs::copy(cache.path(&other), cache.path(&key())).unwrap();
        let mut warn = Vec::new();
        assert_eq!(cache.load(&key(), &mut warn), None);
        assert!(!warn.is_empty());
    }
}
