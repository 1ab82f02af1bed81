use docscan_core::geometry::{compute_homography, Point2F, Quad};
use docscan_core::pipeline::{binarize, detect_document, fcpt_crop, render, scan};
use docscan_core::raster::to_gray;
use docscan_core::synth::{
    corner_rms, ink_agreement, place_page, random_quad_scene, render_convex, rotated_rect,
    similarity, text_page, Lighting,
};
use docscan_core::{
    AnyRaster, Error, GrayRaster, InkCombine, PipelineConfig, Raster, Samples, ScanMode,
};
use docscan_oracles::masked_mad;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(x: f64, y: f64) -> Point2F {
    Point2F::new(x, y)
}

#[test]
fn detects_rotated_quads() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = PipelineConfig::default();
    for _ in 0..10 {
        let scene = random_quad_scene(&mut rng, 640, 480, 30.0, 20.0);
        let quad = detect_document(&scene.image, &cfg).unwrap();
        let rms = corner_rms(&quad, &scene.truth);
        assert!(rms < 2.0, "rms {rms}");
    }
}

#[test]
fn black_frame_has_no_document() {
    let cfg = PipelineConfig::default();
    assert!(matches!(
        detect_document(&Raster::filled(64, 48, [0; 3]), &cfg),
        Err(Error::NoDocument)
    ));
    assert!(matches!(
        scan(&Raster::filled(64, 48, [0; 3]), &cfg),
        Err(Error::NoDocument)
    ));
}

#[test]
fn speck_is_below_document_gate() {
    let img = Raster::from_fn(200, 100, |x, y| {
        if (100..112).contains(&x) && (40..52).contains(&y) {
            [255; 3]
        } else {
            [0; 3]
        }
    });
    assert!(matches!(
        detect_document(&img, &PipelineConfig::default()),
        Err(Error::NoDocument)
    ));
}

#[test]
fn white_frame_is_whole_image() {
    let quad = detect_document(
        &Raster::filled(160, 120, [255; 3]),
        &PipelineConfig::default(),
    )
    .unwrap();
    let frame = Quad::output_rect(160, 120).unwrap();
    assert!(corner_rms(&quad, &frame) <= 2.0, "{quad:?}");
}

#[test]
fn detection_is_scale_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let scene = random_quad_scene(&mut rng, 320, 240, 30.0, 20.0);
        let t = scene.truth;
        // pixel centres scale about (-0.5, -0.5)
        let up = |q: Point2F| p(2.0 * q.x + 0.5, 2.0 * q.y + 0.5);
        let big = render_convex(640, 480, &[up(t.tl), up(t.tr), up(t.br), up(t.bl)], 220, 30);
        let small = render_convex(320, 240, &[t.tl, t.tr, t.br, t.bl], 220, 30);

        let cfg = PipelineConfig::default();
        let big_cfg = PipelineConfig {
            prep_blur_size: 9,
            prep_blur_sigma: 2.8,
            ..cfg
        };
        let a = detect_document(&small, &cfg).unwrap().map(up).unwrap();
        let b = detect_document(&big, &big_cfg).unwrap();
        for (u, v) in a.corners().iter().zip(b.corners()) {
            assert!(u.distance(v) < 2.0, "{u:?} vs {v:?}");
        }
    }
}

struct PlacedPage {
    page: docscan_core::synth::TextPage,
    scene: Raster,
    g: docscan_core::Homography,
}

fn placed_page(lighting: Lighting, seed: u64) -> PlacedPage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let page = text_page(&mut rng, 400, 300, lighting);
    let g = similarity(12.0, 1.0, 150.0, 60.0);
    let scene = place_page(&page.image, &g, 640, 480);
    PlacedPage { page, scene, g }
}

#[test]
fn binarization_flat_and_ramp() {
    let cfg = PipelineConfig::default();
    for lighting in [Lighting::Flat(200), Lighting::Ramp { from: 60, to: 220 }] {
        let s = placed_page(lighting, 5);
        let r = scan(&s.scene, &cfg).unwrap();
        let a = ink_agreement(&r.thresh, &r.detected_quad, &s.page, &s.g);
        assert!(a >= 0.95, "{lighting:?}: {a}");
    }
}

#[test]
fn global_branch_alone_fails_under_ramp() {
    let cfg = PipelineConfig::default();
    let s = placed_page(Lighting::Ramp { from: 60, to: 220 }, 5);
    let r = scan(&s.scene, &cfg).unwrap();
    let b = binarize(&r.gray, &cfg).unwrap();
    let global = ink_agreement(&b.global, &r.detected_quad, &s.page, &s.g);
    let adaptive = ink_agreement(&b.adaptive, &r.detected_quad, &s.page, &s.g);
    assert!(global < 0.95, "global {global}");
    assert!(adaptive > global);
}

#[test]
fn combine_modes_keep_their_invariants() {
    let s = placed_page(Lighting::Ramp { from: 60, to: 220 }, 6);
    for mode in [InkCombine::Intersection, InkCombine::Union] {
        let cfg = PipelineConfig {
            ink_combine: mode,
            ..Default::default()
        };
        let r = scan(&s.scene, &cfg).unwrap();
        let b = binarize(&r.gray, &cfg).unwrap();
        assert_eq!(b.combined, r.thresh);
        for i in 0..r.thresh.data().len() {
            let (g, a, c) = (
                b.global.data()[i],
                b.adaptive.data()[i],
                b.combined.data()[i],
            );
            match mode {
                // black in either branch is black in the output
                InkCombine::Union => assert_eq!(c, g.min(a)),
                // black only where both branches agree
                InkCombine::Intersection => assert_eq!(c, g.max(a)),
            }
        }
    }
}

#[test]
fn render_modes_are_consistent() {
    let s = placed_page(Lighting::Flat(210), 9);
    let r = scan(&s.scene, &PipelineConfig::default()).unwrap();
    let dims = r.dimensions();
    assert_eq!(r.gray.dimensions(), dims);
    assert_eq!(r.thresh.dimensions(), dims);

    let AnyRaster::Binary(t) = render(&r, ScanMode::Thresh) else {
        panic!("thresh is binary")
    };
    assert!(t.data().iter().all(|&v| v == 0 || v == 255));
    let AnyRaster::Gray(g) = render(&r, ScanMode::Gray) else {
        panic!("gray is gray")
    };
    assert_eq!(g, to_gray(&r.color));
    let AnyRaster::Color(c) = render(&r, ScanMode::Color) else {
        panic!("color is color")
    };
    assert_eq!(c.dimensions(), t.dimensions());
}

#[test]
fn scan_is_deterministic() {
    let s = placed_page(Lighting::Ramp { from: 80, to: 230 }, 11);
    let cfg = PipelineConfig::default();
    let a = scan(&s.scene, &cfg).unwrap();
    let b = scan(&s.scene, &cfg).unwrap();
    assert_eq!(a.detected_quad, b.detected_quad);
    assert_eq!(a.color, b.color);
    assert_eq!(a.gray, b.gray);
    assert_eq!(a.thresh, b.thresh);
}

#[test]
fn perspective_card_crops_back_flat() {
    let (cw, ch) = (240usize, 150usize);
    let card = Raster::from_fn(cw, ch, |x, y| {
        let (fx, fy) = (x as f64 / cw as f64, y as f64 / ch as f64);
        let band = if (40..200).contains(&x) && (60..90).contains(&y) {
            80.0
        } else {
            0.0
        };
        let v = 170.0 + 50.0 * (fx * 3.0).sin() * (fy * 2.0).cos() - band;
        [v as u8, (v * 0.9) as u8, (255.0 - v) as u8]
    });
    let card_rect = Quad::output_rect(cw, ch).unwrap();
    let placed = Quad::new(p(120., 70.), p(380., 95.), p(90., 260.), p(400., 300.)).unwrap();
    let h = compute_homography(&card_rect, &placed).unwrap();
    let scene = place_page(&card, &h, 480, 360);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut clicks = placed.corners().to_vec();
    for i in (1..4).rev() {
        clicks.swap(i, rng.random_range(0..=i));
    }
    let crop = fcpt_crop(&scene, &clicks).unwrap();
    let (w, hgt) = crop.dimensions();

    // resample the flat card onto the crop's grid
    let expected = Raster::from_fn(w, hgt, |x, y| {
        let sx = (x as f64 * (cw - 1) as f64 / (w - 1) as f64).round() as usize;
        let sy = (y as f64 * (ch - 1) as f64 / (hgt - 1) as f64).round() as usize;
        card.pixel(sx, sy)
    });
    let interior = |i: usize| {
        let (x, y) = ((i / 3) % w, (i / 3) / w);
        (3..w - 3).contains(&x) && (3..hgt - 3).contains(&y)
    };
    let mad = masked_mad(crop.data(), expected.data(), interior);
    assert!(mad < 5.0, "mean abs diff {mad}");
}

#[test]
fn crop_is_click_order_invariant() {
    let img = Raster::from_fn(90, 70, |x, y| {
        [(x * 2) as u8, (y * 3) as u8, ((x + y) % 256) as u8]
    });
    let q = rotated_rect(p(45., 35.), 50., 30., 10.);
    let base = fcpt_crop(&img, &q.corners()).unwrap();
    let c = q.corners();
    for perm in [[3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]] {
        assert_eq!(fcpt_crop(&img, &perm.map(|i| c[i])).unwrap(), base);
    }
}

#[test]
fn full_frame_gray_crop_within_one_level() {
    let g = GrayRaster::from_fn(50, 40, |x, y| ((x * 5 + y * 3) % 256) as u8);
    let img = Raster::from_gray(&g);
    let clicks = [p(49., 39.), p(0., 0.), p(0., 39.), p(49., 0.)];
    let out = fcpt_crop(&img, &clicks).unwrap();
    assert_eq!(out.dimensions(), (50, 40));
    assert!(out
        .data()
        .iter()
        .zip(img.data())
        .all(|(a, b)| a.abs_diff(*b) <= 1));
}
