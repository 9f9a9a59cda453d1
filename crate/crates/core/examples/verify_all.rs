//! The whole check suite over the shipped fixture groups of order at
//! most 6. Pass fixture names to pick other groups.

use dirings::io;
use dirings::verify::{render_table, verify_group, VerifyConfig};

fn main() -> dirings::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["cyclic2", "cyclic3", "cyclic4", "klein4", "sym3"]
            .map(String::from)
            .to_vec();
    }
    let cfg = VerifyConfig::default();
    let mut failed = 0;
    for name in &names {
        let g = io::resolve_group(name)?;
        let report = verify_group(name, &g, &cfg);
        print!("{}", render_table(&report));
        failed += report.failures().count();
    }
    println!("{failed} failing checks");
    Ok(())
}
