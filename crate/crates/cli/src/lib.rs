//! File formats and command implementations for the `smallcover` binary.

pub mod commands;
pub mod error;
pub mod formats;

pub use commands::{run, Artifact, Cli, Command, Format, LambdaSource};
pub use error::CliError;

use std::io::Write;
use std::path::Path;

/// Writes artifacts into `dir`, creating it if needed.
pub fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> Result<(), CliError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    for a in artifacts {
        let path = dir.join(&a.name);
        std::fs::write(&path, &a.contents).map_err(io(&path))?;
    }
    Ok(())
}

/// Prints artifacts to `w`; several are separated by `==> name <==` headers.
pub fn print_artifacts(w: &mut impl Write, artifacts: &[Artifact]) -> std::io::Result<()> {
    if let [single] = artifacts {
        return w.write_all(single.contents.as_bytes());
    }
    for (i, a) in artifacts.iter().enumerate() {
        if i > 0 {
            writeln!(w)?;
        }
        writeln!(w, "==> {} <==", a.name)?;
        w.write_all(a.contents.as_bytes())?;
    }
    Ok(())
}
