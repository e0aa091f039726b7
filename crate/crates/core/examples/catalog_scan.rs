//! Analyze the builtin catalog in parallel and print a table.

use rayon::prelude::*;

use hugheslab::harness::{analyze, builtin_catalog, render_table, AnalysisReport};
use hugheslab::hughes::PiChoice;

fn main() -> hugheslab::Result<()> {
    let catalog = builtin_catalog();
    let reports: Vec<AnalysisReport> = catalog
        .par_iter()
        .map(|e| analyze(&e.name, &e.group, &PiChoice::All))
        .collect::<hugheslab::Result<_>>()?;
    print!("{}", render_table(&reports));
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    println!("{} groups, {violations} violations", reports.len());
    Ok(())
}
