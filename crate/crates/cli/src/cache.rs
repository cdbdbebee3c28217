//! On-disk cache of admissible bases.
//!
//! Each entry is a binary payload `cohit-h{h}-n{n}-v{V}.bin` plus a JSON
//! sidecar holding the key, the dimension and a SHA-256 of the payload. Both
//! files are written to a temporary name and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use hitcore::hit::{CohitBasis, HitSpace, Limits};
use hitcore::poly::Monomial;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "HITCALC_CACHE_DIR";
const MAGIC: &[u8; 4] = b"HITC";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub schema: u32,
    pub h: usize,
    pub n: u32,
    pub dim: usize,
    pub payload: String,
    pub bytes: usize,
    pub sha256: String,
}

/// Where the cache lives when neither `--cache-dir` nor the environment names a directory.
pub fn default_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(x).join("hitcalc");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(home).join(".cache").join("hitcalc");
    }
    PathBuf::from(".hitcalc-cache")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn encode(basis: &CohitBasis) -> Vec<u8> {
    let mut out = Vec::with_capacity(20 + 2 * basis.h * basis.dim());
    out.extend_from_slice(MAGIC);
    for x in [SCHEMA_VERSION, basis.h as u32, basis.n, basis.dim() as u32] {
        out.extend_from_slice(&x.to_le_bytes());
    }
    for m in &basis.admissibles {
        for &a in m.exponents() {
            out.extend_from_slice(&a.to_le_bytes());
        }
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<CohitBasis> {
    ensure!(bytes.len() >= 20 && &bytes[..4] == MAGIC, "not a cohit payload");
    let word = |i: usize| u32::from_le_bytes(bytes[4 + 4 * i..8 + 4 * i].try_into().unwrap());
    let (schema, h, n, count) = (word(0), word(1) as usize, word(2), word(3) as usize);
    ensure!(schema == SCHEMA_VERSION, "payload schema {schema}, expected {SCHEMA_VERSION}");
    let body = &bytes[20..];
    ensure!(body.len() == 2 * h * count, "payload length {} for {count} monomials in {h} variables", body.len());
    let mut admissibles = Vec::with_capacity(count);
    for i in 0..count {
        let e: Vec<u32> = body[2 * h * i..2 * h * (i + 1)]
            .chunks_exact(2)
            .map(|b| u16::from_le_bytes([b[0], b[1]]) as u32)
            .collect();
        let m = Monomial::new(&e)?;
        ensure!(m.degree() == n, "monomial of degree {} in a degree-{n} payload", m.degree());
        admissibles.push(m);
    }
    Ok(CohitBasis::from_admissibles(h, n, admissibles))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn stem(h: usize, n: u32) -> String {
        format!("cohit-h{h}-n{n}-v{SCHEMA_VERSION}")
    }

    pub fn payload_path(&self, h: usize, n: u32) -> PathBuf {
        self.dir.join(format!("{}.bin", Self::stem(h, n)))
    }

    pub fn sidecar_path(&self, h: usize, n: u32) -> PathBuf {
        self.dir.join(format!("{}.json", Self::stem(h, n)))
    }

    /// A verified entry, or `None` when it is missing, stale or damaged.
    pub fn load(&self, h: usize, n: u32) -> Option<CohitBasis> {
        let side: Sidecar = serde_json::from_slice(&fs::read(self.sidecar_path(h, n)).ok()?).ok()?;
        if side.schema != SCHEMA_VERSION || side.h != h || side.n != n {
            return None;
        }
        let bytes = fs::read(self.payload_path(h, n)).ok()?;
        if bytes.len() != side.bytes || sha256_hex(&bytes) != side.sha256 {
            return None;
        }
        let basis = decode(&bytes).ok()?;
        (basis.h == h && basis.n == n && basis.dim() == side.dim).then_some(basis)
    }

    pub fn store(&self, basis: &CohitBasis) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let bytes = encode(basis);
        let side = Sidecar {
            schema: SCHEMA_VERSION,
            h: basis.h,
            n: basis.n,
            dim: basis.dim(),
            payload: format!("{}.bin", Self::stem(basis.h, basis.n)),
            bytes: bytes.len(),
            sha256: sha256_hex(&bytes),
        };
        write_atomic(&self.payload_path(basis.h, basis.n), &bytes)?;
        let mut json = serde_json::to_vec_pretty(&side)?;
        json.push(b'\n');
        write_atomic(&self.sidecar_path(basis.h, basis.n), &json)
    }

    /// Loads the basis, or computes and stores it.
    pub fn cohit_basis(&self, h: usize, n: u32, limits: &Limits) -> Result<(CohitBasis, bool)> {
        if let Some(b) = self.load(h, n) {
            return Ok((b, true));
        }
        let basis = HitSpace::compute(h, n, limits)
            .map_err(|e| crate::commands::capacity(e, format!("QP_{n} in {h} variables")))?
            .cohit_basis();
        self.store(&basis)?;
        Ok((basis, false))
    }
}
