//! Corpora of spaces and their on-disk form.
//!
//! ```text
//! <dir>/manifest.json              tool version, spec, fingerprint, instance files
//! <dir>/spaces/<hash>.json         one space file per instance
//! <dir>/witnesses/<claim>/<n>/     witness bundles written by the suite
//! ```
//!
//! `<hash>` is the SHA-256 of the space's canonical encoding; the corpus
//! fingerprint is the SHA-256 of all encodings, sorted, newline-joined.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::explorer::generate::CorpusSpec;
use crate::files::{read_space, write_json, write_space};
use crate::topology::SoftTopology;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MANIFEST: &str = "manifest.json";
pub const SPACES_DIR: &str = "spaces";

#[derive(Debug, Clone)]
pub struct Corpus {
    pub spec: Option<CorpusSpec>,
    pub instances: Vec<SoftTopology>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub tool_version: String,
    pub spec: Option<CorpusSpec>,
    pub fingerprint: String,
    pub instances: Vec<String>,
}

pub fn encoding_hash(encoding: &str) -> String {
    hex::encode(Sha256::digest(encoding.as_bytes()))
}

/// Short instance name used in reports.
pub fn instance_name(t: &SoftTopology) -> String {
    encoding_hash(&t.encoding())[..16].to_string()
}

pub fn fingerprint_of<'a, I: IntoIterator<Item = &'a SoftTopology>>(spaces: I) -> String {
    let mut encodings: Vec<String> = spaces.into_iter().map(SoftTopology::encoding).collect();
    encodings.sort();
    encoding_hash(&encodings.join("\n"))
}

impl Corpus {
    pub fn new(spec: Option<CorpusSpec>, instances: Vec<SoftTopology>) -> Self {
        Self { spec, instances }
    }

    pub fn generate(spec: &CorpusSpec) -> Result<Self> {
        Ok(Self::new(Some(spec.clone()), spec.generate()?))
    }

    pub fn single(space: SoftTopology) -> Self {
        Self::new(None, vec![space])
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn fingerprint(&self) -> String {
        fingerprint_of(&self.instances)
    }

    pub fn export(&self, dir: &Path) -> Result<Manifest> {
        let spaces = dir.join(SPACES_DIR);
        fs::create_dir_all(&spaces)?;
        let mut files = Vec::with_capacity(self.len());
        for t in &self.instances {
            let name = format!("{}.json", encoding_hash(&t.encoding()));
            write_space(&spaces.join(&name), t)?;
            files.push(format!("{SPACES_DIR}/{name}"));
        }
        let manifest = Manifest {
            tool_version: TOOL_VERSION.to_string(),
            spec: self.spec.clone(),
            fingerprint: self.fingerprint(),
            instances: files,
        };
        write_json(&dir.join(MANIFEST), &manifest)?;
        Ok(manifest)
    }

    pub fn import(dir: &Path) -> Result<Self> {
        let path = dir.join(MANIFEST);
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        let manifest: Manifest = serde_json::from_str(&text)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        let instances = manifest
            .instances
            .iter()
            .map(|f| read_space(&dir.join(f)))
            .collect::<Result<Vec<_>>>()?;
        let corpus = Self::new(manifest.spec, instances);
        let actual = corpus.fingerprint();
        if actual != manifest.fingerprint {
            return Err(Error::FingerprintMismatch {
                expected: manifest.fingerprint,
                actual,
            });
        }
        Ok(corpus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_keeps_fingerprint() {
        let dir = tempfile::tempdir().unwrap();
        let corpus = Corpus::generate(&CorpusSpec::exhaustive(2, 1, 2)).unwrap();
        let m = corpus.export(dir.path()).unwrap();
        let back = Corpus::import(dir.path()).unwrap();
        assert_eq!(back.fingerprint(), m.fingerprint);
        assert_eq!(back.len(), corpus.len());
        assert_eq!(back.spec, corpus.spec);
    }

    #[test]
    fn edited_manifest_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        Corpus::single(fixtures::example_space()).export(dir.path()).unwrap();
        let path = dir.path().join(MANIFEST);
        let mut m: Manifest = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        m.fingerprint = "00".repeat(32);
        write_json(&path, &m).unwrap();
        assert!(matches!(Corpus::import(dir.path()), Err(Error::FingerprintMismatch { .. })));
        fs::write(&path, "{").unwrap();
        assert!(matches!(Corpus::import(dir.path()), Err(Error::Manifest(_))));
        fs::remove_file(&path).unwrap();
        assert!(matches!(Corpus::import(dir.path()), Err(Error::Manifest(_))));
    }

    #[test]
    fn empty_corpus_has_a_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let m = Corpus::new(None, vec![]).export(dir.path()).unwrap();
        assert!(m.instances.is_empty());
        assert!(Corpus::import(dir.path()).unwrap().is_empty());
    }

    #[test]
    fn fingerprint_ignores_order() {
        let a = fixtures::example_space();
        let b = fixtures::discrete_space();
        assert_eq!(fingerprint_of([&a, &b]), fingerprint_of([&b, &a]));
        assert_ne!(fingerprint_of([&a]), fingerprint_of([&b]));
    }
}
