//! Line-based on-disk cache of enumerated lattices.
//!
//! ```text
//! cwalg-lattice 1
//! type E6
//! reflections 36
//! classes 5079
//! <hex bitset> <parabolic closure id> <root closure id or ->
//! ...
//! checksum <fnv-1a 64 of every preceding line>
//! ```

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::{ClassId, SubgroupLattice};
use crate::coxeter::{CoxeterType, RootSystem};

pub const CACHE_FORMAT_VERSION: u32 = 1;

const MAGIC: &str = "cwalg-lattice";

fn fnv1a(data: &[u8]) -> u64 {
    data.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn cache_path(dir: &Path, ty: CoxeterType) -> PathBuf {
    let name = ty.to_string().replace(':', "_");
    dir.join(format!("lattice-{name}-v{CACHE_FORMAT_VERSION}.txt"))
}

pub fn serialize(lattice: &SubgroupLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC} {CACHE_FORMAT_VERSION}");
    let _ = writeln!(out, "type {}", lattice.coxeter_type());
    let _ = writeln!(out, "reflections {}", lattice.roots().num_reflections());
    let _ = writeln!(out, "classes {}", lattice.len());
    let pmap = lattice.parabolic_closure_map();
    let rmap = lattice.root_closure_map();
    for (c, &b) in lattice.sets().iter().enumerate() {
        let r = rmap.map_or_else(|| "-".to_string(), |m| m[c].to_string());
        let _ = writeln!(out, "{b:x} {} {r}", pmap[c]);
    }
    let sum = fnv1a(out.as_bytes());
    let _ = writeln!(out, "checksum {sum:016x}");
    out
}

/// Parses a cache file. Any inconsistency yields `None`; a cache is never
/// trusted partially.
pub fn deserialize(text: &str, ty: CoxeterType) -> Option<SubgroupLattice> {
    let body_end = text.trim_end_matches('\n').rfind('\n')? + 1;
    let (body, tail) = text.split_at(body_end);
    let sum = u64::from_str_radix(tail.trim().strip_prefix("checksum ")?, 16).ok()?;
    if sum != fnv1a(body.as_bytes()) {
        return None;
    }
    let mut lines = body.lines();
    if lines.next()? != format!("{MAGIC} {CACHE_FORMAT_VERSION}") {
        return None;
    }
    if lines.next()?.strip_prefix("type ")?.parse::<CoxeterType>().ok()? != ty {
        return None;
    }
    let roots = Arc::new(RootSystem::new(ty));
    let n: usize = lines.next()?.strip_prefix("reflections ")?.parse().ok()?;
    if n != roots.num_reflections() {
        return None;
    }
    let classes: usize = lines.next()?.strip_prefix("classes ")?.parse().ok()?;
    let mut sets = Vec::with_capacity(classes);
    let mut pmap = Vec::with_capacity(classes);
    let mut rmap = Vec::with_capacity(classes);
    for line in lines {
        let mut parts = line.split(' ');
        sets.push(u64::from_str_radix(parts.next()?, 16).ok()?);
        pmap.push(parts.next()?.parse::<ClassId>().ok()?);
        rmap.push(match parts.next()? {
            "-" => None,
            r => Some(r.parse::<ClassId>().ok()?),
        });
    }
    if sets.len() != classes || pmap.iter().chain(rmap.iter().flatten()).any(|&c| c as usize >= classes) {
        return None;
    }
    let lattice = SubgroupLattice::from_sets(roots, sets).ok()?;
    let rmap: Option<Vec<ClassId>> = rmap.into_iter().collect();
    if rmap.is_some() != ty.is_crystallographic() {
        return None;
    }
    let _ = lattice.parabolic_closure.set(pmap);
    let _ = lattice.root_closure.set(rmap);
    Some(lattice)
}

/// Reads the cached lattice for `ty`, if a valid file exists.
pub fn load(dir: &Path, ty: CoxeterType) -> Option<SubgroupLattice> {
    let text = fs::read_to_string(cache_path(dir, ty)).ok()?;
    deserialize(&text, ty)
}

pub fn store(dir: &Path, lattice: &SubgroupLattice) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, lattice.coxeter_type());
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serialize(lattice))?;
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let ty: CoxeterType = "B3".parse().unwrap();
        let l = SubgroupLattice::enumerate(Arc::new(RootSystem::new(ty))).unwrap();
        let text = serialize(&l);
        let back = deserialize(&text, ty).unwrap();
        assert_eq!(back.sets(), l.sets());
        assert_eq!(back.parabolic_closure_map(), l.parabolic_closure_map());
        assert_eq!(back.root_closure_map(), l.root_closure_map());

        let corrupted = text.replacen("classes 38", "classes 37", 1);
        assert!(deserialize(&corrupted, ty).is_none());
        assert!(deserialize(&text, "A3".parse().unwrap()).is_none());
        assert!(deserialize("", ty).is_none());
    }
}
