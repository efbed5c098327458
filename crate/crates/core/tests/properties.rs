mod common;

use std::sync::Arc;

use palette_fis::clustering::{assign, objective, run_kmeans, InitMethod, KMeansConfig, Point3};
use palette_fis::color::{hsv_to_rgb, rgb_to_hsv, wheel_position, HsvColor, RgbColor, WheelPosition};
use palette_fis::fuzzy::{aggregate, MembershipFunction, RuleBase};
use palette_fis::harmony::{analyze_segments, HarmonyTemplate, SegmentSet};
use palette_fis::palette::{extract_palette, Palette, PaletteEntry, PixelImage};
use palette_fis::pipeline::{
    harmony_distribution, score_palette, score_website, AestheticsReport, FontPopularityTable, PaletteSource,
    ScoringConfig,
};
use proptest::prelude::*;

fn rgb() -> impl Strategy<Value = RgbColor> {
    any::<[u8; 3]>().prop_map(|[r, g, b]| RgbColor::new(r, g, b))
}

fn points(max: usize) -> impl Strategy<Value = Vec<Point3>> {
    prop::collection::vec(any::<[u8; 3]>().prop_map(|c| Point3(c.map(f64::from))), 1..max)
}

fn distinct_count(pts: &[Point3]) -> usize {
    let mut v: Vec<[u64; 3]> = pts.iter().map(|p| p.0.map(f64::to_bits)).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn membership() -> impl Strategy<Value = MembershipFunction> {
    let tri = prop::array::uniform3(-50.0f64..150.0).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        MembershipFunction::Triangular(v[0], v[1], v[2])
    });
    let trap = prop::array::uniform4(-50.0f64..150.0).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        MembershipFunction::Trapezoidal(v[0], v[1], v[2], v[3])
    });
    prop_oneof![tri, trap]
}

proptest! {
    #[test]
    fn hsv_round_trip(c in rgb()) {
        let back = hsv_to_rgb(rgb_to_hsv(c));
        for (a, b) in [(c.r, back.r), (c.g, back.g), (c.b, back.b)] {
            prop_assert!(a.abs_diff(b) <= 1, "{} -> {}", c, back);
        }
    }

    #[test]
    fn rotating_hue_30_advances_segment(h in 0.0f64..360.0, s in 0.1f64..=1.0, v in 0.1f64..=1.0) {
        let c = HsvColor::new(h, s, v);
        let r = c.rotate(30.0);
        prop_assert_eq!((r.s, r.v), (c.s, c.v));
        match (wheel_position(c, 0.1, 0.1), wheel_position(r, 0.1, 0.1)) {
            (WheelPosition::Chromatic(a), WheelPosition::Chromatic(b)) => prop_assert_eq!(b, (a + 1) % 12),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn wheel_position_is_total(h in 0.0f64..360.0, s in 0.0f64..=1.0, v in 0.0f64..=1.0) {
        match wheel_position(HsvColor::new(h, s, v), 0.1, 0.1) {
            WheelPosition::Chromatic(seg) => prop_assert!(seg < 12 && s >= 0.1 && v >= 0.1),
            WheelPosition::Achromatic => prop_assert!(s < 0.1 || v < 0.1),
        }
    }

    #[test]
    fn membership_degree_in_unit_interval(mf in membership(), x in -100.0f64..200.0) {
        let m = mf.eval(x);
        prop_assert!((0.0..=1.0).contains(&m), "{:?}({}) = {}", mf, x, m);
    }

    #[test]
    fn raising_one_strength_never_lowers_aggregate(
        strengths in prop::array::uniform9(0.0f64..=1.0),
        rule in 0usize..9,
        bump in 0.0f64..=1.0,
    ) {
        let rb = RuleBase::default_aesthetics();
        let before = aggregate(&strengths, &rb, 201);
        let mut raised = strengths;
        raised[rule] = (raised[rule] + bump).min(1.0);
        let after = aggregate(&raised, &rb, 201);
        for (a, b) in before.values.iter().zip(&after.values) {
            prop_assert!(b >= a);
        }
    }

    #[test]
    fn kmeans_invariants(pts in points(40), k in 1usize..6, seed in any::<u64>(), pp in any::<bool>()) {
        let k = k.min(distinct_count(&pts));
        let init = if pp { InitMethod::KMeansPlusPlus } else { InitMethod::Random };
        let cfg = KMeansConfig { k, seed, init, tolerance: 0.0, ..Default::default() };
        let r = run_kmeans(&pts, &cfg).unwrap();

        for w in r.objective_history.windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-9 * (1.0 + w[0]), "J rose {} -> {}", w[0], w[1]);
        }
        for c in &r.centroids {
            for d in 0..3 {
                let lo = pts.iter().map(|p| p.0[d]).fold(f64::INFINITY, f64::min);
                let hi = pts.iter().map(|p| p.0[d]).fold(f64::NEG_INFINITY, f64::max);
                prop_assert!(c.0[d] >= lo - 1e-9 && c.0[d] <= hi + 1e-9);
            }
        }
        if r.converged {
            prop_assert_eq!(&assign(&pts, &r.centroids), &r.assignments);
        }
        prop_assert!((objective(&pts, &r.assignments, &r.centroids) - r.objective).abs() <= 1e-6 * (1.0 + r.objective));
        prop_assert_eq!(run_kmeans(&pts, &cfg).unwrap(), r);
    }

    #[test]
    fn palette_ordering_ignores_input_order(
        entries in prop::collection::vec((rgb(), 0.01f64..1.0), 1..8),
        rotation in 0usize..8,
    ) {
        let make = |v: &[(RgbColor, f64)]| Palette::from_entries(v.iter().map(|&(c, w)| PaletteEntry::new(c, w)).collect()).unwrap();
        let mut shuffled = entries.clone();
        shuffled.reverse();
        let n = shuffled.len();
        shuffled.rotate_left(rotation % n);
        let (a, b) = (make(&entries), make(&shuffled));
        prop_assert_eq!(a.colors().collect::<Vec<_>>(), b.colors().collect::<Vec<_>>());
        let sum: f64 = a.entries().iter().map(|e| e.weight).sum();
        prop_assert!((sum - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn extracted_weights_sum_to_one(px in prop::collection::vec(any::<[u8; 4]>(), 1..300), k in 1usize..6, seed in any::<u64>()) {
        let n = px.len() as u32;
        let img = PixelImage::from_rgba(n, 1, px.clone()).unwrap();
        let cfg = KMeansConfig { k, seed, ..Default::default() };
        match extract_palette(&img, 1000, &cfg) {
            Ok(p) => {
                let sum: f64 = p.entries().iter().map(|e| e.weight).sum();
                prop_assert!((sum - 1.0).abs() <= 1e-9);
                prop_assert_eq!(extract_palette(&img, 1000, &cfg).unwrap(), p);
            }
            Err(_) => prop_assert!(px.iter().all(|p| p[3] == 0)),
        }
    }

    #[test]
    fn harmony_is_rotation_and_mirror_invariant(bits in 0u16..4096, offset in 0u8..12, gray in 0usize..3) {
        let set = SegmentSet::from_bits(bits);
        let base = analyze_segments(set, gray);
        for other in [set.rotate(offset), set.mirror()] {
            let a = analyze_segments(other, gray);
            prop_assert_eq!(&a.matched, &base.matched);
            prop_assert_eq!(a.count, base.count);
            prop_assert_eq!(a.primary, base.primary);
        }
        prop_assert!(base.count <= 7);
        prop_assert_eq!(base.count == 0, base.primary == HarmonyTemplate::Other);
    }

    #[test]
    fn scores_stay_in_range(colors in prop::collection::vec(rgb(), 1..6), popularity in 0.0f64..=100.0) {
        let mut fonts = FontPopularityTable::new(5.0).unwrap();
        fonts.insert("probe", popularity).unwrap();
        let cfg = ScoringConfig { fonts: Arc::new(fonts), ..Default::default() };
        let report = score_palette(Palette::uniform(&colors).unwrap(), "probe", &cfg, PaletteSource::Record).unwrap();
        prop_assert!((0.0..=100.0).contains(&report.score));
    }

    #[test]
    fn report_json_round_trip_is_idempotent(colors in prop::collection::vec(rgb(), 1..5)) {
        let report = score_palette(Palette::uniform(&colors).unwrap(), "Roboto", &ScoringConfig::default(), PaletteSource::Record).unwrap();
        let json = report.to_json();
        let parsed: AestheticsReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn distribution_groups_conserve_counts(
        labels in prop::collection::vec((0usize..3, 0usize..8), 0..40),
        by_category in any::<bool>(),
    ) {
        let cats = ["News", "Tech", "Food"];
        let all = [HarmonyTemplate::Other].into_iter().chain(HarmonyTemplate::ALL).collect::<Vec<_>>();
        let rows: Vec<(&str, HarmonyTemplate)> = labels.iter().map(|&(c, t)| (cats[c], all[t])).collect();
        let dist = harmony_distribution(rows.iter().copied(), by_category);
        prop_assert_eq!(dist.total(), rows.len());
        for g in &dist.groups {
            prop_assert_eq!(g.shares.iter().map(|s| s.count).sum::<usize>(), g.total);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn downscaling_by_two_keeps_palette(
        colors in prop::collection::btree_set(any::<[u8; 3]>(), 2..4),
        rows in prop::collection::vec(1u32..6, 3),
    ) {
        let bands: Vec<(RgbColor, u32)> = colors.iter().zip(&rows).map(|(&[r, g, b], &n)| (RgbColor::new(r, g, b), 2 * n)).collect();
        let img = common::banded_image(16, &bands);
        let small = img.downscale_nearest(2).unwrap();
        let cfg = ScoringConfig { kmeans: KMeansConfig { k: bands.len(), ..Default::default() }, ..Default::default() };
        let a = score_website(&img, "Roboto", &cfg).unwrap();
        let b = score_website(&small, "Roboto", &cfg).unwrap();
        prop_assert_eq!(a.palette.len(), b.palette.len());
        for (x, y) in a.palette.colors().zip(b.palette.colors()) {
            prop_assert!(x.r.abs_diff(y.r) <= 2 && x.g.abs_diff(y.g) <= 2 && x.b.abs_diff(y.b) <= 2);
        }
        prop_assert_eq!(a.harmony.primary, b.harmony.primary);
    }
}
