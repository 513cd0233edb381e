//! Persistent cache of evaluated indices.
//!
//! One record per line, `;`-separated: star flag (`0`/`1`), comma-joined
//! index, digit count, decimal value. The file is append-only; on load,
//! duplicate keys resolve to the entry with the most digits. Unreadable
//! lines are skipped with a warning rather than failing the run.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::words::Composition;

pub const CACHE_FILE_NAME: &str = "mzv.cache";

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "ZETASTAR_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueCacheEntry {
    pub star: bool,
    pub index: Composition,
    pub digits: u32,
    pub value: String,
}

#[derive(Debug)]
pub struct ValueCache {
    path: PathBuf,
    entries: HashMap<(bool, Composition), (u32, String)>,
}

impl ValueCache {
    /// Open (creating the directory if needed) and load the cache file.
    pub fn open(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE_NAME);
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match parse_line(&line) {
                    Some(entry) => {
                        let key = (entry.star, entry.index);
                        let keep = entries
                            .get(&key)
                            .is_none_or(|(digits, _)| *digits < entry.digits);
                        if keep {
                            entries.insert(key, (entry.digits, entry.value));
                        }
                    }
                    None => {
                        eprintln!(
                            "warning: ignoring corrupt cache line {} in {}",
                            lineno + 1,
                            path.display()
                        );
                    }
                }
            }
        }
        Ok(ValueCache { path, entries })
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

    /// A hit requires at least as many stored digits as requested.
    pub fn get(&self, star: bool, index: &Composition, digits: u32) -> Option<ValueCacheEntry> {
        self.entries.get(&(star, index.clone())).and_then(|(stored_digits, value)| {
            (*stored_digits >= digits).then(|| ValueCacheEntry {
                star,
                index: index.clone(),
                digits: *stored_digits,
                value: value.clone(),
            })
        })
    }

    /// Append a record; the in-memory view keeps the highest digit count.
    pub fn put(&mut self, entry: ValueCacheEntry) -> Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(
            file,
            "{};{};{};{}",
            if entry.star { 1 } else { 0 },
            entry.index,
            entry.digits,
            entry.value
        )?;
        let key = (entry.star, entry.index);
        let keep = self.entries.get(&key).is_none_or(|(digits, _)| *digits < entry.digits);
        if keep {
            self.entries.insert(key, (entry.digits, entry.value));
        }
        Ok(())
    }
}

fn parse_line(line: &str) -> Option<ValueCacheEntry> {
    let mut fields = line.splitn(4, ';');
    let star = match fields.next()? {
        "0" => false,
        "1" => true,
        _ => return None,
    };
    let index: Composition = fields.next()?.parse().ok()?;
    let digits: u32 = fields.next()?.parse().ok()?;
    let value = fields.next()?.trim().to_string();
    // The value must round-trip as a decimal at the stated digit count.
    let parsed = super::fixed::BigFixed::parse_decimal(&value, digits).ok()?;
    if parsed.to_decimal_string() != value {
        return None;
    }
    Some(ValueCacheEntry { star, index, digits, value })
}
