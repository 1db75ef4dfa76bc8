//! On-disk memo snapshots.
//!
//! A snapshot is a text file
//!
//! ```text
//! bruhat-memo 1
//! group A3
//! order 24
//! entries 2
//! R 0 23 1 -6 15 -20 15 -6 1
//! RS 0 5 0 1
//! sha256 <hex digest of every preceding byte>
//! ```
//!
//! Entries are `family u w c0 c1 ...` with element ids from the group's
//! canonical enumeration and coefficients ascending. The group line and the
//! order guard against loading a snapshot into the wrong group.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::coxeter::{Element, Group};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rpoly::{Family, RContext};

pub const CACHE_ENV: &str = "BRUHAT_CACHE_DIR";
const MAGIC: &str = "bruhat-memo";
const VERSION: u32 = 1;

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// `A3.memo`, `I2-7.memo`, ...
pub fn cache_file(dir: &Path, group: &Group) -> PathBuf {
    let name: String =
        group.descriptor().to_string().chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect();
    dir.join(format!("{name}.memo"))
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn encode(ctx: &RContext) -> String {
    let g = ctx.group();
    let entries = ctx.snapshot();
    let mut body = format!("{MAGIC} {VERSION}\ngroup {}\norder {}\nentries {}\n", g.descriptor(), g.order(), entries.len());
    for (family, u, w, p) in entries {
        body.push_str(&format!("{} {} {}", family.tag(), u.id(), w.id()));
        for c in p.coeffs() {
            body.push(' ');
            body.push_str(&c.to_string());
        }
        body.push('\n');
    }
    let sum = digest(&body);
    body.push_str(&format!("sha256 {sum}\n"));
    body
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Cache(msg.into())
}

/// Validates `text` against `ctx`'s group and loads its entries. Returns the
/// number of entries loaded; nothing is loaded on any error.
pub fn decode_into(ctx: &mut RContext, text: &str) -> Result<usize> {
    let body_end = text.rfind("sha256 ").ok_or_else(|| bad("missing checksum line"))?;
    let (body, trailer) = text.split_at(body_end);
    let stated = trailer.trim_start_matches("sha256 ").trim_end();
    if stated != digest(body) {
        return Err(bad("checksum mismatch"));
    }
    let g = ctx.group();
    let mut lines = body.lines();
    let mut header = |key: &str| -> Result<String> {
        let line = lines.next().ok_or_else(|| bad(format!("missing {key} line")))?;
        line.strip_prefix(key)
            .and_then(|rest| rest.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| bad(format!("expected `{key} ...`, found `{line}`")))
    };
    let version = header(MAGIC)?;
    if version != VERSION.to_string() {
        return Err(bad(format!("unsupported version {version}")));
    }
    let group = header("group")?;
    if group != g.descriptor().to_string() {
        return Err(bad(format!("snapshot is for group {group}, not {}", g.descriptor())));
    }
    let order: usize = header("order")?.parse().map_err(|_| bad("bad order line"))?;
    if order != g.order() {
        return Err(bad("group order mismatch"));
    }
    let count: usize = header("entries")?.parse().map_err(|_| bad("bad entries line"))?;

    let mut parsed = Vec::with_capacity(count);
    for line in lines {
        let mut fields = line.split_ascii_whitespace();
        let family = fields.next().and_then(Family::from_tag).ok_or_else(|| bad(format!("bad entry `{line}`")))?;
        let mut id = || -> Result<Element> {
            let i: usize = fields.next().and_then(|f| f.parse().ok()).ok_or_else(|| bad(format!("bad entry `{line}`")))?;
            if i >= order {
                return Err(bad(format!("element id {i} out of range")));
            }
            Ok(Element(i as u32))
        };
        let (u, w) = (id()?, id()?);
        let coeffs: Vec<BigInt> =
            fields.map(|f| f.parse::<BigInt>().map_err(|_| bad(format!("bad coefficient `{f}`")))).collect::<Result<_>>()?;
        parsed.push((family, u, w, IntPoly::from_coeffs(coeffs)));
    }
    if parsed.len() != count {
        return Err(bad(format!("expected {count} entries, found {}", parsed.len())));
    }
    for (family, u, w, p) in parsed {
        ctx.preload(family, u, w, p);
    }
    Ok(count)
}

/// Writes via a temporary file and rename so readers never see a torn file.
pub fn save(ctx: &RContext, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| bad(e.to_string()))?;
    }
    let tmp = path.with_extension("memo.tmp");
    fs::write(&tmp, encode(ctx)).map_err(|e| bad(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| bad(e.to_string()))
}

/// Loads a snapshot if the file exists; `Ok(0)` when it does not.
pub fn load(ctx: &mut RContext, path: &Path) -> Result<usize> {
    match fs::read_to_string(path) {
        Ok(text) => decode_into(ctx, &text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(bad(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn warm(g: &Group) -> RContext<'_> {
        let mut ctx = RContext::new(g);
        ctx.r_poly(g.identity(), g.longest());
        ctx.shifted_r(g.identity(), g.longest());
        ctx.rtilde_poly(g.generator(0), g.longest());
        ctx
    }

    #[test]
    fn roundtrip_through_disk() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let ctx = warm(&g);
        let dir = tempfile::tempdir().unwrap();
        let path = cache_file(dir.path(), &g);
        assert!(path.ends_with("A3.memo"));
        save(&ctx, &path).unwrap();

        let mut fresh = RContext::new(&g);
        assert_eq!(load(&mut fresh, &path).unwrap(), ctx.memo_len());
        assert_eq!(fresh.snapshot(), ctx.snapshot());
        let before = fresh.misses();
        fresh.r_poly(g.identity(), g.longest());
        assert_eq!(fresh.misses(), before);
    }

    #[test]
    fn missing_file_is_empty() {
        let g = Group::new(CoxeterType::Dihedral(5)).unwrap();
        let mut ctx = RContext::new(&g);
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(load(&mut ctx, &cache_file(dir.path(), &g)).unwrap(), 0);
        assert!(cache_file(dir.path(), &g).ends_with("I2-5.memo"));
    }

    #[test]
    fn corruption_is_rejected() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let text = encode(&warm(&g));
        let tampered = text.replacen(" 1\n", " 2\n", 1);
        assert_ne!(tampered, text);
        let mut ctx = RContext::new(&g);
        assert!(matches!(decode_into(&mut ctx, &tampered), Err(Error::Cache(_))));
        assert_eq!(ctx.memo_len(), 0);
        let truncated = &text[..text.len() / 2];
        assert!(decode_into(&mut ctx, truncated).is_err());
    }

    #[test]
    fn wrong_group_is_rejected() {
        let a3 = Group::new(CoxeterType::A(3)).unwrap();
        let text = encode(&warm(&a3));
        let d = Group::new(CoxeterType::Dihedral(12)).unwrap();
        let mut ctx = RContext::new(&d);
        let err = decode_into(&mut ctx, &text).unwrap_err();
        assert!(err.to_string().contains("A3"));
    }
}
