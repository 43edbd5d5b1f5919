//! On-disk cache of reduced Gröbner bases.
//!
//! Format (UTF-8): the header line `gb-cache v1 <order> <sha256-of-generators>`,
//! then one canonical polynomial per line. The hash is taken over the canonical
//! text of the generators joined by newlines, so it also pins the variable order.
//! An interrupted computation leaves `<file>.partial` with header
//! `gb-partial v1 <order> <hash>` holding the current generating set.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::buchberger::{Buchberger, BuchbergerOptions, Progress};
use super::GroebnerBasis;
use crate::algebra::{format_poly, parse_poly, BigRat, MonomialOrder, QPoly};
use crate::error::GroebnerError;

const MAGIC: &str = "gb-cache";
const PARTIAL_MAGIC: &str = "gb-partial";
const VERSION: &str = "v1";

pub fn generators_hash(gens: &[QPoly]) -> String {
    let mut h = Sha256::new();
    for (i, g) in gens.iter().enumerate() {
        if i > 0 {
            h.update(b"\n");
        }
        h.update(format_poly(g).as_bytes());
    }
    hex::encode(h.finalize())
}

fn cache_err(path: &Path, reason: impl Into<String>) -> GroebnerError {
    GroebnerError::Cache { path: path.to_path_buf(), reason: reason.into() }
}

fn write_polys(path: &Path, header: &str, polys: &[QPoly]) -> Result<(), GroebnerError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    // write then rename so a crash never leaves a truncated cache behind
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    writeln!(f, "{header}")?;
    for p in polys {
        writeln!(f, "{}", format_poly(p))?;
    }
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn read_polys(path: &Path, magic: &str) -> Result<(MonomialOrder, String, Vec<QPoly>), GroebnerError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| cache_err(path, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields.as_slice() {
        [m, v, order, hash] if *m == magic && *v == VERSION => {
            let order = MonomialOrder::from_name(order)
                .ok_or_else(|| cache_err(path, format!("unknown order `{order}`")))?;
            let polys = lines
                .filter(|l| !l.trim().is_empty())
                .enumerate()
                .map(|(i, l)| {
                    parse_poly::<BigRat>(l).map_err(|e| cache_err(path, format!("line {}: {e}", i + 2)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((order, hash.to_string(), polys))
        }
        _ => Err(cache_err(path, format!("bad header `{header}`"))),
    }
}

pub fn write_cache(path: &Path, gb: &GroebnerBasis, gens_hash: &str) -> Result<(), GroebnerError> {
    let header = format!("{MAGIC} {VERSION} {} {gens_hash}", gb.order());
    write_polys(path, &header, gb.elements())
}

/// Load a cached basis, returning it with the generator hash recorded in the file.
pub fn read_cache(path: &Path) -> Result<(GroebnerBasis, String), GroebnerError> {
    let (order, hash, polys) = read_polys(path, MAGIC)?;
    if polys.is_empty() {
        return Err(cache_err(path, "no basis elements"));
    }
    let gb = GroebnerBasis::from_elements(polys, order, true)?;
    if !gb.check_reduced_shape() {
        return Err(cache_err(path, "basis is not in reduced form"));
    }
    Ok((gb, hash))
}

pub fn partial_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".partial");
    PathBuf::from(s)
}

/// Where a basis came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Computed,
    /// Computed, seeded from an earlier interrupted run.
    Resumed,
}

/// Outcome of [`load_or_compute`].
pub enum CacheOutcome {
    Ready(GroebnerBasis, CacheStatus),
    /// The deadline passed; the partial generating set was written to `partial`.
    BudgetExceeded { partial: PathBuf, reductions: usize, pending: usize },
}

/// Consult the cache at `path`; on a miss (or when `use_cache` is false) compute the
/// reduced basis and write it.
pub fn load_or_compute(
    path: &Path,
    gens: &[QPoly],
    ord: MonomialOrder,
    opts: BuchbergerOptions,
    use_cache: bool,
) -> Result<CacheOutcome, GroebnerError> {
    let hash = generators_hash(gens);
    if use_cache && path.exists() {
        let (gb, h) = read_cache(path)?;
        if h == hash && gb.order() == ord {
            return Ok(CacheOutcome::Ready(gb, CacheStatus::Hit));
        }
    }
    let partial = partial_path(path);
    let mut seed: Vec<QPoly> = gens.to_vec();
    let mut resumed = false;
    if use_cache && partial.exists() {
        if let Ok((o, h, polys)) = read_polys(&partial, PARTIAL_MAGIC) {
            if o == ord && h == hash {
                // the partial set generates the same ideal as the generators
                seed.extend(polys);
                resumed = true;
            }
        }
    }
    let mut engine = Buchberger::new(&seed, ord, opts)?;
    match engine.run() {
        Progress::Done => {
            let gb = engine.into_reduced()?;
            write_cache(path, &gb, &hash)?;
            if partial.exists() {
                fs::remove_file(&partial)?;
            }
            let status = if resumed { CacheStatus::Resumed } else { CacheStatus::Computed };
            Ok(CacheOutcome::Ready(gb, status))
        }
        Progress::BudgetExceeded => {
            let header = format!("{PARTIAL_MAGIC} {VERSION} {ord} {hash}");
            write_polys(&partial, &header, &engine.current_basis())?;
            Ok(CacheOutcome::BudgetExceeded {
                partial,
                reductions: engine.stats().pairs_considered,
                pending: engine.pending_pairs(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::symplectic::sp_generators;

    #[test]
    fn round_trip_and_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sp4.gb");
        let gens = sp_generators(2).unwrap();
        let gb = buchberger(&gens, MonomialOrder::Degrevlex).unwrap();
        let hash = generators_hash(&gens);
        write_cache(&path, &gb, &hash).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, format!("gb-cache v1 degrevlex {hash}"));
        assert_eq!(hash.len(), 64);
        assert_eq!(text.lines().count(), gb.len() + 1);
        let (back, h) = read_cache(&path).unwrap();
        assert_eq!(h, hash);
        assert_eq!(back, gb);
    }

    #[test]
    fn load_or_compute_hits_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub").join("sp2.gb");
        let gens = sp_generators(1).unwrap();
        let ord = MonomialOrder::Degrevlex;
        let first = load_or_compute(&path, &gens, ord, BuchbergerOptions::default(), true).unwrap();
        assert!(matches!(first, CacheOutcome::Ready(_, CacheStatus::Computed)));
        let second = load_or_compute(&path, &gens, ord, BuchbergerOptions::default(), true).unwrap();
        assert!(matches!(second, CacheOutcome::Ready(_, CacheStatus::Hit)));
        let forced = load_or_compute(&path, &gens, ord, BuchbergerOptions::default(), false).unwrap();
        assert!(matches!(forced, CacheOutcome::Ready(_, CacheStatus::Computed)));
        // a different generator set invalidates the entry
        let other = sp_generators(2).unwrap();
        let third = load_or_compute(&path, &other, ord, BuchbergerOptions::default(), true).unwrap();
        match third {
            CacheOutcome::Ready(gb, CacheStatus::Computed) => assert_eq!(gb.len(), 16),
            _ => panic!("expected recomputation"),
        }
    }

    #[test]
    fn expired_budget_writes_partial_state_and_resumes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sp4.gb");
        let gens = sp_generators(2).unwrap();
        let ord = MonomialOrder::Degrevlex;
        let opts = BuchbergerOptions { deadline: Some(std::time::Instant::now()), ..Default::default() };
        match load_or_compute(&path, &gens, ord, opts, true).unwrap() {
            CacheOutcome::BudgetExceeded { partial, pending, .. } => {
                assert!(partial.exists());
                assert!(pending > 0);
            }
            CacheOutcome::Ready(..) => panic!("deadline in the past must stop the run"),
        }
        match load_or_compute(&path, &gens, ord, BuchbergerOptions::default(), true).unwrap() {
            CacheOutcome::Ready(gb, CacheStatus::Resumed) => {
                assert_eq!(gb, buchberger(&gens, ord).unwrap());
            }
            _ => panic!("expected a resumed computation"),
        }
        assert!(!partial_path(&path).exists());
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.gb");
        fs::write(&path, "not a cache\n").unwrap();
        assert!(matches!(read_cache(&path), Err(GroebnerError::Cache { .. })));
        fs::write(&path, "gb-cache v1 degrevlex abc\n1 * Q11\n").unwrap();
        assert!(matches!(read_cache(&path), Err(GroebnerError::Cache { .. })));
        fs::write(&path, "gb-cache v1 degrevlex abc\n").unwrap();
        assert!(matches!(read_cache(&path), Err(GroebnerError::Cache { .. })));
        // not monic, hence not reduced
        fs::write(&path, "gb-cache v1 degrevlex abc\n2 * X11\n").unwrap();
        assert!(matches!(read_cache(&path), Err(GroebnerError::Cache { .. })));
    }
}
