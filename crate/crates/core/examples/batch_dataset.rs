//! Scores every record of a dataset CSV and tallies harmony labels.
//!
//! cargo run --example batch_dataset -- [DATASET.csv]

use palette_fis::pipeline::{bundled_sample, harmony_distribution, ingest_dataset, score_record, ScoringConfig};

fn main() -> palette_fis::Result<()> {
    let records = match std::env::args().nth(1) {
        Some(path) => ingest_dataset(path)?,
        None => bundled_sample(),
    };
    let config = ScoringConfig::default();
    let mut labelled = Vec::new();
    for record in &records {
        let report = score_record(record, &config)?;
        println!(
            "{:<18} {:<16} {:<14} harmony {} font {:>5.1} score {:5.1}",
            record.name,
            record.category,
            report.harmony.primary,
            report.harmony.count,
            report.font_popularity,
            report.score
        );
        labelled.push((record.category.clone(), report.harmony.primary));
    }
    let dist = harmony_distribution(labelled.iter().map(|(c, t)| (c.as_str(), *t)), false);
    for group in &dist.groups {
        for share in &group.shares {
            println!("{:<16} {:>3}  {:5.1}%", share.label, share.count, share.percent);
        }
    }
    Ok(())
}
