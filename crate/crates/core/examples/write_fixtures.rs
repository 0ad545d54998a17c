//! Regenerates the HOA files under `fixtures/`.

use std::fs;
use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    fs::create_dir_all(&dir)?;
    for (stem, a) in gfgmin::fixtures::all() {
        fs::write(dir.join(format!("{stem}.hoa")), gfgmin::hoa::emit_hoa(&a))?;
    }
    Ok(())
}
