//! Writes DOT, SVG and CSV renderings of a few drawings to a directory.
//!
//! cargo run --example export_figures -- [out_dir]

use std::path::PathBuf;

use layerlens::export::{export, parse_dot, ExportFormat};
use layerlens::families::{opt2planar, planar5_family, special_s};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).expect("output directory");
    let drawings =
        [("opt2planar_3", opt2planar(3).unwrap()), ("planar5_3", planar5_family(3).unwrap()), ("s", special_s())];
    for (name, d) in &drawings {
        for (ext, format) in [("dot", ExportFormat::Dot), ("svg", ExportFormat::Svg), ("csv", ExportFormat::Csv)] {
            let path = dir.join(format!("{name}.{ext}"));
            std::fs::write(&path, export(d, format)).expect("writable");
            println!("wrote {}", path.display());
        }
        assert_eq!(&parse_dot(&export(d, ExportFormat::Dot)).unwrap(), d);
    }
}
