//! Content-addressed cache of rendered command output.
//!
//! One JSON file per key. Writers go through a temporary file in the cache
//! directory and rename it into place, so concurrent invocations never see a
//! half-written entry.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};
use crate::request::CommandRequest;

pub const ENV_DIR: &str = "DEMAZURE_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    /// Seconds since the Unix epoch.
    pub created: u64,
    pub value: String,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Cache(format!("{}: {e}", path.display()))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `--cache-dir`, then `$DEMAZURE_CACHE_DIR`, then the per-user cache
    /// directory. `None` if none of them is available.
    pub fn locate(explicit: Option<&Path>) -> Option<Self> {
        if let Some(p) = explicit {
            return Some(Self::new(p));
        }
        if let Some(p) = std::env::var_os(ENV_DIR).filter(|p| !p.is_empty()) {
            return Some(Self::new(p));
        }
        dirs::cache_dir().map(|p| Self::new(p.join("demazure")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(req: &CommandRequest) -> String {
        let material = format!(
            "demazure-cli {}\n{}\n{}\n{}\n{}",
            env!("CARGO_PKG_VERSION"),
            req.datum.label(),
            req.command,
            req.canonical_params(),
            req.format.name()
        );
        format!("{:x}", Sha256::digest(material.as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored value; unreadable or mismatching entries count as misses.
    pub fn get(&self, key: &str) -> Result<Option<String>> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(io_err(&path, e)),
        };
        Ok(serde_json::from_str::<CacheEntry>(&text)
            .ok()
            .filter(|entry| entry.key == key)
            .map(|entry| entry.value))
    }

    pub fn put(&self, key: &str, value: &str) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| io_err(&self.dir, e))?;
        let entry = CacheEntry {
            key: key.to_string(),
            created: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            value: value.to_string(),
        };
        let json = serde_json::to_vec(&entry).expect("cache entry is serializable");
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| io_err(&self.dir, e))?;
        tmp.write_all(&json).map_err(|e| io_err(tmp.path(), e))?;
        let path = self.path(key);
        tmp.persist(&path).map_err(|e| io_err(&path, e.error))?;
        Ok(())
    }
}
