//! On-disk cache for enumeration results.
//!
//! Each entry is a file whose first line is the hex SHA-256 of the payload
//! that follows it. Entries with a bad checksum are regenerated. Writes go
//! through a temporary file in the same directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Result;
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "MULLINEUX_CACHE_DIR";
pub const DEFAULT_DIR: &str = ".mullineux-cache";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Directory from `MULLINEUX_CACHE_DIR`, else `.mullineux-cache/`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(ENV_VAR)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache { dir: Some(dir) }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache {
            dir: Some(dir.into()),
        }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.cache")))
    }

    /// The stored payload for `key`, if present and intact.
    pub fn load(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        let (sum, payload) = text.split_once('\n')?;
        (sum == checksum(payload)).then(|| payload.to_owned())
    }

    pub fn store(&self, key: &str, payload: &str) -> Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(key)) else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        writeln!(tmp, "{}", checksum(payload))?;
        tmp.write_all(payload.as_bytes())?;
        tmp.flush()?;
        tmp.persist(path)?;
        Ok(())
    }

    /// Cached payload for `key`, computing and storing it on a miss. A failed
    /// store is reported on stderr and otherwise ignored.
    pub fn get_or_insert_with(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        if let Some(hit) = self.load(key) {
            return Ok(hit);
        }
        let payload = compute()?;
        if let Err(err) = self.store(key, &payload) {
            eprintln!("warning: could not write cache entry {key}: {err}");
        }
        Ok(payload)
    }
}

pub fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}
