use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use relaxsolve_core::harness::{Case, RunConfig};

/// Parses and validates a configuration file. Nothing grid-sized is
/// allocated before validation succeeds.
pub fn load(path: &Path) -> anyhow::Result<(RunConfig, Case)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cfg: RunConfig = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let case = cfg.build().with_context(|| format!("validating {}", path.display()))?;
    Ok((cfg, case))
}

/// Writes `contents` to `dir/name` through a temporary file in the same
/// directory, so the target either holds the full contents or is untouched.
pub fn write_atomic(dir: &Path, name: &str, contents: &str) -> anyhow::Result<PathBuf> {
    anyhow::ensure!(
        !name.is_empty() && Path::new(name).file_name().map(|f| f == name).unwrap_or(false),
        "output name '{name}' must be a plain file name"
    );
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let target = dir.join(name);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(&target).with_context(|| format!("writing {}", target.display()))?;
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces_and_rejects_paths() {
        let dir = tempfile::tempdir().unwrap();
        let p = write_atomic(dir.path(), "a.csv", "one").unwrap();
        write_atomic(dir.path(), "a.csv", "two").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "two");
        assert!(write_atomic(dir.path(), "../a.csv", "x").is_err());
        assert!(write_atomic(dir.path(), "", "x").is_err());
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
