//! The prefilter over prime pairs `(p, q)`.

use hugheslab::harness::{hunt, question_prefilter};

fn main() -> hugheslab::Result<()> {
    let v = question_prefilter(7, 5, None)?;
    println!("(7, 5) unbounded: rejected = {}", v.rejected);
    for o in &v.obligations {
        println!("  obligation: {o}");
    }

    let h = hunt(Some(1_000_000), 13, 13)?;
    for v in &h.verdicts {
        let reasons: Vec<&str> = v.rejections().map(|f| f.citation.as_str()).collect();
        println!(
            "p = {:>2}, q = {:>2}: {}",
            v.p,
            v.q,
            if v.rejected {
                reasons.join("; ")
            } else {
                "PASS".into()
            }
        );
    }
    println!("{}", h.summary.statement);
    Ok(())
}
