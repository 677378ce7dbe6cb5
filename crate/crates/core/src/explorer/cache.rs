//! Append-only result cache: one JSON object per line, keyed by
//! `(check_id, params)`. A corrupt line ends the valid prefix; it and
//! everything after it are dropped and the file is rewritten.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::Laurent;
use crate::error::{Error, Result};
use crate::verifier::{CheckResult, Params, Status, Witness};

/// Serialized form of one result. Field order is part of the file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub check_id: String,
    pub params: String,
    pub status: String,
    pub witness_digest: String,
    pub min_coefficient: Option<String>,
    pub support: Option<(i64, i64)>,
    pub witness: Option<String>,
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

pub fn witness_digest(tagged: Option<&str>) -> String {
    hex::encode(Sha256::digest(tagged.unwrap_or("").as_bytes()))
}

impl CacheEntry {
    /// `min_coefficient` and `support` describe a Laurent witness; pass
    /// `laurent_stats = false` to leave them empty.
    pub fn from_result(result: &CheckResult, laurent_stats: bool) -> Self {
        let witness = result.witness.as_ref().map(Witness::to_tagged);
        let laurent: Option<&Laurent> = result.witness.as_ref().and_then(Witness::as_laurent).filter(|_| laurent_stats);
        Self {
            check_id: result.check_id.clone(),
            params: result.params.to_string(),
            status: result.status.to_string(),
            witness_digest: witness_digest(witness.as_deref()),
            min_coefficient: laurent.map(|l| l.min_coefficient().unwrap_or_default().to_string()),
            support: laurent.and_then(Laurent::support),
            witness,
            detail: result.detail.clone(),
            elapsed_ms: u64::try_from(result.elapsed.as_millis()).unwrap_or(u64::MAX),
        }
    }

    pub fn to_result(&self) -> Result<CheckResult> {
        let witness = self.witness.as_deref().map(Witness::from_tagged).transpose()?;
        if witness_digest(self.witness.as_deref()) != self.witness_digest {
            return Err(Error::Parse(format!("witness digest mismatch for {} {}", self.check_id, self.params)));
        }
        Ok(CheckResult {
            check_id: self.check_id.clone(),
            params: self.params.parse::<Params>()?,
            status: self.status.parse::<Status>()?,
            witness,
            detail: self.detail.clone(),
            elapsed: Duration::from_millis(self.elapsed_ms),
        })
    }

    pub fn key(&self) -> (String, String) {
        (self.check_id.clone(), self.params.clone())
    }

    fn parse_line(line: &str) -> Result<Self> {
        let entry: CacheEntry =
            serde_json::from_str(line).map_err(|e| Error::Parse(format!("cache line: {e}")))?;
        entry.to_result()?;
        Ok(entry)
    }
}

/// Open cache file. Loaded entries are read-only; new entries go through a
/// single mutex-guarded writer.
pub struct ResultCache {
    path: PathBuf,
    entries: HashMap<(String, String), CacheEntry>,
    writer: Mutex<BufWriter<File>>,
}

impl ResultCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut valid: Vec<String> = Vec::new();
        let mut corrupt = false;
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            let complete = text.ends_with('\n');
            let lines: Vec<&str> = text.lines().collect();
            for (i, line) in lines.iter().enumerate() {
                let truncated = i + 1 == lines.len() && !complete;
                match CacheEntry::parse_line(line) {
                    Ok(entry) if !truncated => {
                        entries.insert(entry.key(), entry);
                        valid.push(line.to_string());
                    }
                    Ok(_) => {
                        log::warn!("{}: dropping unterminated last line", path.display());
                        corrupt = true;
                        break;
                    }
                    Err(e) => {
                        log::warn!("{}: dropping corrupt tail from line {}: {e}", path.display(), i + 1);
                        corrupt = true;
                        break;
                    }
                }
            }
        }
        if corrupt {
            let mut f = BufWriter::new(File::create(&path)?);
            for line in &valid {
                writeln!(f, "{line}")?;
            }
            f.flush()?;
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self { path, entries, writer: Mutex::new(BufWriter::new(file)) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, check_id: &str, params: &Params) -> Option<&CacheEntry> {
        self.entries.get(&(check_id.to_string(), params.to_string()))
    }

    /// Loaded entries, sorted by key.
    pub fn entries(&self) -> Vec<&CacheEntry> {
        let mut all: Vec<&CacheEntry> = self.entries.values().collect();
        all.sort_by(|a, b| a.key().cmp(&b.key()));
        all
    }

    /// Appends one line and flushes it.
    pub fn append(&self, entry: &CacheEntry) -> Result<()> {
        let line = serde_json::to_string(entry).map_err(|e| Error::Parse(e.to_string()))?;
        let mut w = self.writer.lock().expect("cache writer poisoned");
        writeln!(w, "{line}")?;
        w.flush()?;
        Ok(())
    }
}

/// All valid entries of a cache file in file order, later duplicates
/// replacing earlier ones in place.
pub fn read_entries(path: impl AsRef<Path>) -> Result<Vec<CacheEntry>> {
    let file = File::open(path.as_ref())?;
    let mut order: Vec<CacheEntry> = Vec::new();
    let mut index: HashMap<(String, String), usize> = HashMap::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        let Ok(entry) = CacheEntry::parse_line(&line) else {
            log::warn!("{}: ignoring corrupt tail", path.as_ref().display());
            break;
        };
        match index.get(&entry.key()) {
            Some(&i) => order[i] = entry,
            None => {
                index.insert(entry.key(), order.len());
                order.push(entry);
            }
        }
    }
    Ok(order)
}
