use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::harmony::HarmonyTemplate;

/// Group name used when records are not split by category.
pub const ALL_GROUP: &str = "All";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelShare {
    pub label: HarmonyTemplate,
    pub count: usize,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionGroup {
    pub name: String,
    pub total: usize,
    pub shares: Vec<LabelShare>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Distribution {
    pub groups: Vec<DistributionGroup>,
}

impl Distribution {
    pub fn total(&self) -> usize {
        self.groups.iter().map(|g| g.total).sum()
    }
}

/// Counts primary harmony labels, overall or per category.
///
/// Groups are ordered by name and labels by template order; only labels
/// that occur are listed.
pub fn harmony_distribution<'a, I>(records: I, by_category: bool) -> Distribution
where
    I: IntoIterator<Item = (&'a str, HarmonyTemplate)>,
{
    let mut groups: BTreeMap<String, BTreeMap<HarmonyTemplate, usize>> = BTreeMap::new();
    for (category, label) in records {
        let key = if by_category { category.to_owned() } else { ALL_GROUP.to_owned() };
        *groups.entry(key).or_default().entry(label).or_default() += 1;
    }
    let groups = groups
        .into_iter()
        .map(|(name, counts)| {
            let total: usize = counts.values().sum();
            let shares = counts
                .into_iter()
                .map(|(label, count)| LabelShare { label, count, percent: 100.0 * count as f64 / total as f64 })
                .collect();
            DistributionGroup { name, total, shares }
        })
        .collect();
    Distribution { groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use HarmonyTemplate::*;

    #[test]
    fn all_one_label() {
        let d = harmony_distribution(vec![("x", Monochromatic); 4], false);
        assert_eq!(d.groups.len(), 1);
        assert_eq!(d.groups[0].shares, vec![LabelShare { label: Monochromatic, count: 4, percent: 100.0 }]);
    }

    #[test]
    fn even_split() {
        let recs = [("c", Complementary), ("c", Triad), ("c", Triad), ("c", Complementary)];
        let d = harmony_distribution(recs, true);
        let pct: Vec<f64> = d.groups[0].shares.iter().map(|s| s.percent).collect();
        assert_eq!(pct, vec![50.0, 50.0]);
    }

    #[test]
    fn groups_conserve_counts() {
        let recs = [("a", Other), ("b", Triad), ("a", Analogous), ("b", Triad), ("c", Square)];
        let d = harmony_distribution(recs, true);
        assert_eq!(d.groups.iter().map(|g| g.name.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert_eq!(d.total(), 5);
        for g in &d.groups {
            assert_eq!(g.shares.iter().map(|s| s.count).sum::<usize>(), g.total);
            assert!((g.shares.iter().map(|s| s.percent).sum::<f64>() - 100.0).abs() < 0.1);
        }
    }

    #[test]
    fn empty_input() {
        assert!(harmony_distribution(std::iter::empty(), false).groups.is_empty());
    }
}
