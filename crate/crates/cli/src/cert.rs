//! Certificate persistence: run manifests, content-addressed storage, and
//! replay. The manifest hash covers the manifest and the certificate body
//! but not the timestamps, so identical runs produce byte-identical bodies.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const ENV_OUT_DIR: &str = "FINRING_CERT_DIR";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub ring: Option<String>,
    pub seed: Option<u64>,
    pub shards: Option<(u64, u64)>,
    pub jobs: Option<usize>,
    pub version: String,
}

impl RunManifest {
    pub fn new(command_line: Vec<String>) -> Self {
        RunManifest {
            command_line,
            ring: None,
            seed: None,
            shards: None,
            jobs: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct Timestamps {
    pub started_unix: u64,
    pub finished_unix: u64,
}

/// A stored artifact: manifest + body are hashed; timestamps are not.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StoredCertificate {
    pub manifest: RunManifest,
    pub body: serde_json::Value,
    pub manifest_hash: String,
    pub timestamps: Timestamps,
}

pub fn hash_of(manifest: &RunManifest, body: &serde_json::Value) -> String {
    let payload = serde_json::to_string(&(manifest, body)).expect("serializable");
    let mut hasher = Sha256::new();
    hasher.update(payload.as_bytes());
    hex::encode(hasher.finalize())
}

impl StoredCertificate {
    pub fn new(manifest: RunManifest, body: serde_json::Value, timestamps: Timestamps) -> Self {
        let manifest_hash = hash_of(&manifest, &body);
        StoredCertificate { manifest, body, manifest_hash, timestamps }
    }

    pub fn verify_hash(&self) -> bool {
        hash_of(&self.manifest, &self.body) == self.manifest_hash
    }
}

fn sanitize(part: &str) -> String {
    part.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// certs/<ring>/<command>/<hash prefix>.json under the output root.
pub fn cert_path(root: &Path, ring: &str, command: &str, hash: &str) -> PathBuf {
    root.join(sanitize(ring))
        .join(sanitize(command))
        .join(format!("{}.json", &hash[..16.min(hash.len())]))
}

pub fn out_dir(flag: Option<&str>) -> PathBuf {
    if let Some(f) = flag {
        return PathBuf::from(f);
    }
    if let Ok(env) = std::env::var(ENV_OUT_DIR) {
        if !env.is_empty() {
            return PathBuf::from(env);
        }
    }
    PathBuf::from("certs")
}

pub fn write_certificate(
    root: &Path,
    ring: &str,
    command: &str,
    cert: &StoredCertificate,
) -> std::io::Result<PathBuf> {
    let path = cert_path(root, ring, command, &cert.manifest_hash);
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(&path, serde_json::to_string_pretty(cert)?)?;
    Ok(path)
}

pub fn read_certificate(path: &Path) -> std::io::Result<StoredCertificate> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn now_unix() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_ignores_timestamps() {
        let manifest = RunManifest::new(vec!["gui".into(), "check".into()]);
        let body = serde_json::json!({"verdict": "pass"});
        let a = StoredCertificate::new(manifest.clone(), body.clone(), Timestamps::default());
        let b = StoredCertificate::new(
            manifest,
            body,
            Timestamps { started_unix: 1, finished_unix: 2 },
        );
        assert_eq!(a.manifest_hash, b.manifest_hash);
        assert!(a.verify_hash() && b.verify_hash());
    }

    #[test]
    fn paths_are_sanitized() {
        let p = cert_path(Path::new("certs"), "mat(2,gf(2))", "gui-check", "abcdef0123456789ff");
        let s = p.to_string_lossy();
        assert!(s.contains("mat_2_gf_2__"));
        assert!(s.ends_with("abcdef0123456789.json"));
    }
}
