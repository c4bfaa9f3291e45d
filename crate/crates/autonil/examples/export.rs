//! Export any builtin-constructible group as a Cayley-table JSON file:
//!
//!     cargo run --example export -- "C729" c729.json

use autonil::cayley;
use autonil::spec::{parse_spec, realize};

fn main() {
    let mut args = std::env::args().skip(1);
    let (Some(spec_text), Some(path)) = (args.next(), args.next()) else {
        eprintln!("usage: export <SPEC> <PATH>");
        std::process::exit(1);
    };
    let spec = match parse_spec(&spec_text) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("spec {spec_text:?}: {e}");
            std::process::exit(1);
        }
    };
    let group = match realize(&spec) {
        Ok(group) => group,
        Err(e) => {
            eprintln!("spec {spec_text:?}: {e}");
            std::process::exit(1);
        }
    };
    if let Err(e) = std::fs::write(&path, cayley::export(&group)) {
        eprintln!("writing {path}: {e}");
        std::process::exit(1);
    }
    println!("wrote {} (order {}) to {path}", group.name(), group.order());
}
