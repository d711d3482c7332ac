use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const CACHE_ENV: &str = "HSPEED_CACHE";

#[derive(Serialize, Deserialize)]
struct Line {
    class: String,
    n: usize,
    count: String,
}

/// Append-only JSON-lines store of labelled counts keyed by canonical class
/// description and `n`.
#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: Mutex<HashMap<(String, usize), u128>>,
    writer: Mutex<Option<File>>,
}

impl CountCache {
    /// Loads `path` if it exists; unreadable lines are skipped with a warning.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (no, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Line>(&line).ok().and_then(|l| Some((l.count.parse::<u128>().ok()?, l))) {
                    Some((count, l)) => {
                        entries.insert((l.class, l.n), count);
                    }
                    None => log::warn!("{}:{}: ignoring corrupt cache line", path.display(), no + 1),
                }
            }
        }
        Ok(CountCache { path, entries: Mutex::new(entries), writer: Mutex::new(None) })
    }

    /// The cache named by `HSPEED_CACHE`, if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => Ok(Some(Self::open(p)?)),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, class: &str, n: usize) -> Option<u128> {
        self.entries.lock().expect("cache lock").get(&(class.to_string(), n)).copied()
    }

    pub fn put(&self, class: &str, n: usize, count: u128) -> Result<()> {
        let key = (class.to_string(), n);
        if self.entries.lock().expect("cache lock").insert(key, count) == Some(count) {
            return Ok(());
        }
        let line = serde_json::to_string(&Line { class: class.to_string(), n, count: count.to_string() })
            .expect("cache line serialises");
        let mut writer = self.writer.lock().expect("cache writer lock");
        if writer.is_none() {
            *writer = Some(OpenOptions::new().create(true).append(true).open(&self.path)?);
        }
        let file = writer.as_mut().expect("writer opened");
        writeln!(file, "{line}")?;
        file.flush()?;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
