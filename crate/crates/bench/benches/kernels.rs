use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use docscan_core::filters::{convolve, gaussian_blur, gaussian_kernel, sharpen};
use docscan_core::geometry::{compute_homography, warp_perspective, Point2F, Quad};
use docscan_core::threshold::{adaptive_mean_threshold, otsu_threshold, ThresholdParams};
use docscan_core::{GrayRaster, Raster};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn noise(w: usize, h: usize) -> GrayRaster {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    GrayRaster::from_fn(w, h, |_, _| rng.random())
}

fn convolution(c: &mut Criterion) {
    let img = noise(640, 480);
    let mut group = c.benchmark_group("convolve");
    group.throughput(Throughput::Elements(640 * 480));
    for size in [3, 5, 9] {
        let k = gaussian_kernel(size, 1.4).unwrap();
        let direct = k.clone().without_separable();
        group.bench_with_input(BenchmarkId::new("separable", size), &k, |b, k| {
            b.iter(|| convolve(black_box(&img), k))
        });
        group.bench_with_input(BenchmarkId::new("direct", size), &direct, |b, k| {
            b.iter(|| convolve(black_box(&img), k))
        });
    }
    group.finish();

    let color = Raster::from_gray(&img);
    c.bench_function("gaussian_blur rgb 640x480", |b| {
        b.iter(|| gaussian_blur(black_box(&color), 5, 1.1).unwrap())
    });
    c.bench_function("sharpen rgb 640x480", |b| {
        b.iter(|| sharpen(black_box(&color)))
    });
}

fn thresholds(c: &mut Criterion) {
    let img = noise(1280, 960);
    let mut group = c.benchmark_group("threshold 1280x960");
    group.throughput(Throughput::Elements(1280 * 960));
    group.bench_function("otsu", |b| b.iter(|| otsu_threshold(black_box(&img))));
    for block in [15, 51] {
        let p = ThresholdParams::new(block, 8).unwrap();
        group.bench_with_input(BenchmarkId::new("adaptive", block), &p, |b, &p| {
            b.iter(|| adaptive_mean_threshold(black_box(&img), p).unwrap())
        });
    }
    group.finish();
}

fn warping(c: &mut Criterion) {
    let img = Raster::from_gray(&noise(1280, 960));
    let quad = Quad::new(
        Point2F::new(140.0, 90.0),
        Point2F::new(1150.0, 130.0),
        Point2F::new(90.0, 880.0),
        Point2F::new(1200.0, 860.0),
    )
    .unwrap();
    let h = compute_homography(&quad, &Quad::output_rect(1100, 800).unwrap()).unwrap();
    let mut group = c.benchmark_group("warp_perspective");
    group.throughput(Throughput::Elements(1100 * 800));
    group.bench_function("rgb 1100x800", |b| {
        b.iter(|| warp_perspective(black_box(&img), &h, 1100, 800))
    });
    group.finish();
}

criterion_group!(benches, convolution, thresholds, warping);
criterion_main!(benches);
