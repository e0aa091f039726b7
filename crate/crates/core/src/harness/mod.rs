//! Catalog files, per-group reports, the prefilter hunt and the
//! verification suite behind the `hugheslab` binary.

mod analysis;
mod catalog;
mod question;
mod verify;

pub use analysis::{
    analyze, analyze_with, render_table, AnalysisReport, AnalyzeOptions, FrobeniusSummary,
    MainTheoremSummary, PGroupSummary, PrimeHughes,
};
pub use catalog::{
    builtin, builtin_catalog, parse_catalog, write_catalog, BuiltinEntry, CatalogLineError,
    GroupRecord,
};
pub use question::{
    hunt, multiplicative_order, question_prefilter, FilterOutcome, FilterVerdict, Hunt,
    HuntSummary, QuestionVerdict, Survivor, CITE_CLASS_ORDER, CITE_DIVISIBILITY, CITE_HIGMAN,
    CITE_METABELIAN, CITE_NEUMANN, CITE_PARITY, CITE_Q, CITE_SMOOTH,
};
pub use verify::{
    full_iff, gamma_chain, intersections, main_theorem, oracle, p_groups, question_hunt, run_suite,
    s3_chain, CriterionOutcome,
};
