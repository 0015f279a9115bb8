//! Memo cache for product expansions, optionally backed by a directory of
//! text files.
//!
//! Each file `deg<N>.lrcache` holds the products of total degree `N`, one
//! record `λ;μ;ν1:c1,ν2:c2,...` per line with `λ <= μ` and terms in
//! graded-lex order. The last line is `sha256:<hex>` over everything before
//! it. A file whose checksum does not match is ignored as a whole, so a
//! damaged cache costs recomputation and nothing else.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lr::{product_expansion, SchurExpansion};
use crate::partition::Partition;

type Key = (Partition, Partition);

fn key(lambda: &Partition, mu: &Partition) -> Key {
    if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    }
}

pub fn encode_record(lambda: &Partition, mu: &Partition, expansion: &SchurExpansion) -> String {
    let (a, b) = key(lambda, mu);
    let terms: Vec<String> = expansion.iter().map(|(nu, c)| format!("{nu}:{c}")).collect();
    format!("{a};{b};{}", terms.join(","))
}

pub fn decode_record(line: &str) -> Result<(Partition, Partition, SchurExpansion)> {
    let bad = || Error::CacheRecord(line.to_string());
    let mut fields = line.split(';');
    let (Some(a), Some(b), Some(terms), None) = (fields.next(), fields.next(), fields.next(), fields.next()) else {
        return Err(bad());
    };
    let lambda: Partition = a.parse().map_err(|_| bad())?;
    let mu: Partition = b.parse().map_err(|_| bad())?;
    let degree = lambda.size() + mu.size();
    let mut expansion = SchurExpansion::zero(degree);
    if !terms.is_empty() {
        for term in terms.split(',') {
            let (nu, c) = term.split_once(':').ok_or_else(bad)?;
            let nu: Partition = nu.parse().map_err(|_| bad())?;
            let c: BigUint = c.parse().map_err(|_| bad())?;
            if nu.size() != degree || c == BigUint::from(0u32) || expansion.contains(&nu) {
                return Err(bad());
            }
            expansion.add_term(nu, c);
        }
    }
    Ok((lambda, mu, expansion))
}

fn checksum(body: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(body.as_bytes())))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::CacheIo {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Parses a whole cache file, checking its trailing checksum line.
fn parse_file(text: &str) -> Result<Vec<(Partition, Partition, SchurExpansion)>> {
    let body_end = text.trim_end_matches('\n').rfind('\n').map_or(0, |i| i + 1);
    let (body, last) = text.split_at(body_end);
    if last.trim_end_matches('\n') != checksum(body) {
        return Err(Error::CacheRecord("checksum mismatch".into()));
    }
    body.lines().map(decode_record).collect()
}

fn render_file(records: &[(&Key, &Arc<SchurExpansion>)]) -> String {
    let mut body = String::new();
    for ((a, b), e) in records {
        body.push_str(&encode_record(a, b, e));
        body.push('\n');
    }
    let sum = checksum(&body);
    body + &sum + "\n"
}

/// Shared expansion cache: concurrent readers, exclusive inserts.
pub struct ExpansionCache {
    dir: Option<PathBuf>,
    map: RwLock<HashMap<Key, Arc<SchurExpansion>>>,
    rejected: Vec<PathBuf>,
}

impl ExpansionCache {
    pub fn in_memory() -> Self {
        Self {
            dir: None,
            map: RwLock::new(HashMap::new()),
            rejected: Vec::new(),
        }
    }

    /// Loads every `deg<N>.lrcache` file in `dir`, creating the directory if
    /// needed. Files that fail their checksum or contain malformed records
    /// are skipped and listed by [`ExpansionCache::rejected_files`].
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
        let mut map = HashMap::new();
        let mut rejected = Vec::new();
        let mut paths: Vec<PathBuf> = fs::read_dir(&dir)
            .map_err(|e| io_error(&dir, e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| degree_of(p).is_some())
            .collect();
        paths.sort();
        for path in paths {
            let degree = degree_of(&path).unwrap();
            let text = fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
            match parse_file(&text) {
                Ok(records) if records.iter().all(|(_, _, e)| e.degree() == degree) => {
                    for (a, b, e) in records {
                        map.insert(key(&a, &b), Arc::new(e));
                    }
                }
                _ => rejected.push(path),
            }
        }
        Ok(Self {
            dir: Some(dir),
            map: RwLock::new(map),
            rejected,
        })
    }

    pub fn rejected_files(&self) -> &[PathBuf] {
        &self.rejected
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<Arc<SchurExpansion>> {
        self.map.read().unwrap().get(&key(lambda, mu)).cloned()
    }

    pub fn get_or_compute(&self, lambda: &Partition, mu: &Partition) -> Arc<SchurExpansion> {
        if let Some(e) = self.get(lambda, mu) {
            return e;
        }
        let computed = Arc::new(product_expansion(lambda, mu));
        self.map
            .write()
            .unwrap()
            .entry(key(lambda, mu))
            .or_insert(computed)
            .clone()
    }

    /// Rewrites every degree file from the in-memory map. A no-op for an
    /// in-memory cache.
    pub fn flush(&self) -> Result<()> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let map = self.map.read().unwrap();
        let mut by_degree: BTreeMap<usize, Vec<(&Key, &Arc<SchurExpansion>)>> = BTreeMap::new();
        for (k, e) in map.iter() {
            by_degree.entry(e.degree()).or_default().push((k, e));
        }
        for (degree, mut records) in by_degree {
            records.sort_by(|x, y| x.0.cmp(y.0));
            let path = dir.join(format!("deg{degree}.lrcache"));
            let tmp = dir.join(format!("deg{degree}.lrcache.tmp"));
            fs::write(&tmp, render_file(&records)).map_err(|e| io_error(&tmp, e))?;
            fs::rename(&tmp, &path).map_err(|e| io_error(&path, e))?;
        }
        Ok(())
    }
}

fn degree_of(path: &Path) -> Option<usize> {
    path.file_name()?
        .to_str()?
        .strip_prefix("deg")?
        .strip_suffix(".lrcache")?
        .parse()
        .ok()
}
