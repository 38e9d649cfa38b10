//! Content-addressed result cache. Entries are written to a temporary file
//! and renamed into place, so readers never see a partial entry.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Bumped whenever a cached payload changes shape.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Cache {
    dir: PathBuf,
}

pub struct Key {
    canonical: String,
    digest: String,
}

impl Key {
    pub fn new(command: &str, params: &Value) -> Self {
        let canonical = json!({ "schema": SCHEMA_VERSION, "command": command, "params": params }).to_string();
        let digest = hex::encode(Sha256::digest(canonical.as_bytes()));
        Key { canonical, digest }
    }

    #[cfg(test)]
    pub fn digest(&self) -> &str {
        &self.digest
    }
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &Key) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest))
    }

    /// The cached value, or `None` on a miss. Unreadable or mismatched
    /// entries are reported on stderr and treated as misses.
    pub fn load(&self, key: &Key) -> Option<Value> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                eprintln!("warning: cannot read cache entry {}: {e}; recomputing", path.display());
                return None;
            }
        };
        let entry: Option<Value> = serde_json::from_str(&text).ok();
        match entry {
            Some(Value::Object(mut m)) if m.get("key").and_then(Value::as_str) == Some(key.canonical.as_str()) => {
                m.remove("value")
            }
            _ => {
                eprintln!("warning: corrupt cache entry {}; recomputing", path.display());
                None
            }
        }
    }

    pub fn store(&self, key: &Key, value: &Value) -> io::Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            key.digest,
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let entry = json!({ "key": key.canonical, "value": value });
        let mut f = fs::File::create(&tmp)?;
        f.write_all(entry.to_string().as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, self.path(key)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}
