//! A seeded corpus written to a temporary directory, then analyzed file by
//! file.

use flatlab::cli::{analyze, exit_code_for_report};
use flatlab::corpus::write_corpus;

fn main() -> flatlab::error::Result<()> {
    let dir = std::env::temp_dir().join("flatlab-corpus-example");
    let manifest = write_corpus(3, 16, &dir)?;
    println!("seed {} -> {}", manifest.seed, dir.display());
    for entry in &manifest.files {
        let text = std::fs::read_to_string(dir.join(&entry.file))?;
        let report = analyze(&text)?;
        println!(
            "{}  {:13} exit {:2}  oracle {}",
            entry.file,
            report.verdict.as_deref().unwrap_or("-"),
            exit_code_for_report(&report),
            report.oracle_agreement
        );
    }
    Ok(())
}
