use std::path::{Path, PathBuf};

use super::entry;
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// Environment variable naming the asset directory.
pub const ASSET_ENV: &str = "BABI_DATA_DIR";

/// Named data assets and their file names.
pub const ASSET_FILES: &[(&str, &str)] = &[
    ("cage-6-5", "cage-6-5.g6"),
    ("hog-53705", "hog-53705.g6"),
    ("hog-54321", "hog-54321.g6"),
];

/// Resolves the asset directory: an explicit path wins, then
/// `$BABI_DATA_DIR`, then `./data`, then the `data` directory shipped
/// with this crate.
pub fn asset_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(ASSET_ENV) {
        return PathBuf::from(p);
    }
    let local = PathBuf::from("data");
    if local.join(ASSET_FILES[0].1).is_file() {
        return local;
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Loads and validates a data asset. Missing files, parse failures and
/// graphs of the wrong shape give distinct errors.
pub fn load_named(name: &str, dir: Option<&Path>) -> Result<Graph> {
    let e = entry(name)?;
    let file = ASSET_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| *f)
        .ok_or_else(|| Error::InvalidParams(format!("`{name}` is built in, not a data asset")))?;
    let path = asset_dir(dir).join(file);
    let bytes = std::fs::read(&path).map_err(|err| match err.kind() {
        std::io::ErrorKind::NotFound => Error::AssetMissing(path.clone()),
        _ => Error::Io(err),
    })?;
    let g = graph6::decode(&bytes)?;
    e.validate(&g)?;
    if name == "cage-6-5" && g.diameter() != Some(3) {
        return Err(Error::Validation { name: name.into(), reason: "diameter is not 3".into() });
    }
    Ok(g)
}
