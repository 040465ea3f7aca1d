//! On-disk presentation cache under `$JD_CACHE_DIR`.
//!
//! One JSON file per `(format version, genus, flavor)`; the payload carries
//! a SHA-256 checksum that is re-verified on every hit. Unreadable,
//! mismatched or stale entries are recomputed and overwritten.

use std::fs;
use std::path::PathBuf;

use jd_abelian::PresentedGroup;
use jd_spaces::{Flavor, Space};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_FORMAT: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Payload {
    pub group: PresentedGroup,
    /// Rendered generators, in generator order.
    pub generators: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CacheEntry {
    pub format_version: u32,
    pub key: String,
    pub payload: Payload,
    pub checksum: String,
}

pub fn key(genus: u16, flavor: &Flavor) -> String {
    format!("g{genus}-{flavor}")
}

fn checksum(p: &Payload) -> String {
    let bytes = serde_json::to_vec(p).expect("payload serializes");
    hex::encode(Sha256::digest(&bytes))
}

fn file_name(key: &str) -> String {
    let safe: String = key.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
    format!("v{CACHE_FORMAT}-{safe}.json")
}

pub struct Cache {
    dir: Option<PathBuf>,
}

/// Where a payload came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Hit,
    Computed,
}

impl Cache {
    pub fn from_env() -> Cache {
        Cache { dir: std::env::var_os("JD_CACHE_DIR").map(PathBuf::from) }
    }

    #[cfg(test)]
    pub fn at(dir: &std::path::Path) -> Cache {
        Cache { dir: Some(dir.to_path_buf()) }
    }

    fn read(&self, key: &str) -> Option<Payload> {
        let path = self.dir.as_ref()?.join(file_name(key));
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.format_version == CACHE_FORMAT && entry.key == key && checksum(&entry.payload) == entry.checksum).then_some(entry.payload)
    }

    fn write(&self, key: &str, payload: &Payload) {
        let Some(dir) = &self.dir else { return };
        let entry = CacheEntry { format_version: CACHE_FORMAT, key: key.to_string(), payload: payload.clone(), checksum: checksum(payload) };
        // The cache is an optimization; failing to write it is not an error.
        if fs::create_dir_all(dir).is_ok() {
            let tmp = dir.join(format!("{}.tmp{}", file_name(key), std::process::id()));
            if fs::write(&tmp, serde_json::to_vec(&entry).expect("entry serializes")).is_ok() {
                let _ = fs::rename(&tmp, dir.join(file_name(key)));
            }
        }
    }

    /// The presentation of a space, from the cache or freshly built.
    pub fn presentation(&self, genus: u16, flavor: Flavor, build: impl FnOnce() -> Result<Space, jd_spaces::SpaceError>) -> Result<(Payload, Source), jd_spaces::SpaceError> {
        let k = key(genus, &flavor);
        if let Some(p) = self.read(&k) {
            return Ok((p, Source::Hit));
        }
        let space = build()?;
        let payload = Payload { group: (*space.group()).clone(), generators: (0..space.len()).map(|i| space.generator_name(i)).collect() };
        self.write(&k, &payload);
        Ok((payload, Source::Computed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksum_detects_tampering() {
        let p = Payload { group: PresentedGroup::free(2), generators: vec!["a".into(), "b".into()] };
        let mut q = p.clone();
        q.generators[1] = "c".into();
        assert_ne!(checksum(&p), checksum(&q));
    }

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let f = Flavor::Connected { ideg: 2, loops: Some(1) };
        let build = || Space::new(jd_spaces::Catalog::global(), 1, f);
        let (cold, s1) = cache.presentation(1, f, build).unwrap();
        let (warm, s2) = cache.presentation(1, f, build).unwrap();
        assert_eq!((s1, s2), (Source::Computed, Source::Hit));
        assert_eq!(checksum(&cold), checksum(&warm));
        let path = dir.path().join(file_name(&key(1, &f)));
        let text = fs::read_to_string(&path).unwrap().replacen("O(", "Q(", 1);
        fs::write(&path, text).unwrap();
        let (again, s3) = cache.presentation(1, f, build).unwrap();
        assert_eq!(s3, Source::Computed);
        assert_eq!(checksum(&again), checksum(&cold));
    }

    #[test]
    fn file_names_are_flat() {
        assert_eq!(file_name("g1-c3,1"), "v1-g1-c3_1.json");
    }
}
