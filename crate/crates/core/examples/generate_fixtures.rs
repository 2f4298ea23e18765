//! Recomputes the shipped 3-cocycle tables under `fixtures/omega/`.
//!
//! ```bash
//! cargo run --release --example generate_fixtures
//! ```

use std::path::PathBuf;
use std::time::Instant;

use gcrossed::group::{build_group, GroupSpec};
use gcrossed::omega::{unity_classes, OmegaFixture, BATTERY};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/omega");
    std::fs::create_dir_all(&dir)?;
    for name in BATTERY {
        let t = Instant::now();
        let g = build_group(&GroupSpec::builtin(name))?;
        let classes = unity_classes(&g)?;
        let fixture = OmegaFixture::from_classes(name, &g, &classes);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&fixture)? + "\n")?;
        println!("{name:>6}: {:>2} classes  ({:.2?})", classes.len(), t.elapsed());
    }
    Ok(())
}
