//! Content-addressed result cache.
//!
//! Records are JSON files named by the SHA-256 of the request. Writes go
//! through a temporary file in the same directory and are renamed into place.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use woi_core::monomial::IdealDocument;

use crate::error::{CliError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything that determines a cached value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    pub operation: String,
    pub ideal: IdealDocument,
    pub params: BTreeMap<String, String>,
}

impl Request {
    pub fn key(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("requests serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema: String,
    pub key: String,
    pub version: String,
    pub request: Request,
    pub value: Value,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Reads a record by key. Unreadable or corrupt records are reported on
    /// standard error and treated as absent.
    pub fn record(&self, key: &str) -> Option<CacheRecord> {
        let path = self.path(key);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<CacheRecord>(&text) {
            Ok(r) if r.key == key && r.request.key() == key => Some(r),
            Ok(_) => {
                eprintln!("warning: {}: key does not match contents, ignoring", path.display());
                None
            }
            Err(e) => {
                eprintln!("warning: {}: corrupt cache record ({e}), ignoring", path.display());
                None
            }
        }
    }

    /// The cached value for `request`, if written by this version.
    pub fn get(&self, request: &Request) -> Option<Value> {
        self.record(&request.key()).filter(|r| r.version == VERSION).map(|r| r.value)
    }

    pub fn put(&self, request: &Request, value: &Value) -> Result<()> {
        let key = request.key();
        let record = CacheRecord {
            schema: woi_core::SCHEMA.to_string(),
            key: key.clone(),
            version: VERSION.to_string(),
            request: request.clone(),
            value: value.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        serde_json::to_writer_pretty(&mut tmp, &record).map_err(|e| CliError::json(tmp.path(), e))?;
        tmp.write_all(b"\n").map_err(|e| CliError::io(tmp.path(), e))?;
        let path = self.path(&key);
        tmp.persist(&path).map_err(|e| CliError::io(&path, e.error))?;
        Ok(())
    }

    /// Keys of all record files, sorted.
    pub fn keys(&self) -> Result<Vec<String>> {
        let mut keys = Vec::new();
        for item in fs::read_dir(&self.dir).map_err(|e| CliError::io(&self.dir, e))? {
            let path = item.map_err(|e| CliError::io(&self.dir, e))?.path();
            if path.extension().is_some_and(|e| e == "json") {
                if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                    keys.push(stem.to_string());
                }
            }
        }
        keys.sort();
        Ok(keys)
    }
}
