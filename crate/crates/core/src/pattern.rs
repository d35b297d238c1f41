//! Dot patterns: the synthetic generators (shape subsampling, grid noise,
//! frame circle), edge-mask subsampling, and pattern file I/O.
//!
//! All randomness flows through a caller-supplied seed; noise generation
//! uses ChaCha8 so identical seeds reproduce identical patterns on every
//! platform.

use crate::error::Error;
use crate::geom::Point2;
use crate::scalar::{c, geom_eps, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::io::{Read, Write};
use std::path::Path;

/// An ordered set of pairwise-distinct dots.
#[derive(Debug, Clone, PartialEq)]
pub struct DotPattern<S> {
    points: Vec<Point2<S>>,
}

impl<S: Scalar> DotPattern<S> {
    /// Build a pattern, rejecting empty input, non-finite coordinates and
    /// duplicate dots (within the global coincidence tolerance).
    pub fn new(points: Vec<Point2<S>>) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidPattern("non-finite coordinate".into()));
        }
        let eps = geom_eps::<S>();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i].distance(&points[j]) <= eps {
                    return Err(Error::InvalidPattern(format!(
                        "duplicate dots at indices {i} and {j}"
                    )));
                }
            }
        }
        Ok(DotPattern { points })
    }

    pub fn points(&self) -> &[Point2<S>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Axis-aligned box, used for the noise region and shape fitting target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box2<S> {
    pub lo: Point2<S>,
    pub hi: Point2<S>,
}

impl<S: Scalar> Box2<S> {
    pub fn new(lo: Point2<S>, hi: Point2<S>) -> Self {
        Box2 { lo, hi }
    }

    /// The standard pattern region, x and y in [200, 800].
    pub fn standard() -> Self {
        Box2::new(Point2::new(c(200.0), c(200.0)), Point2::new(c(800.0), c(800.0)))
    }

    pub fn width(&self) -> S {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> S {
        self.hi.y - self.lo.y
    }
}

/// Parameters for grid noise.
///
/// `s` scales the grid cell relative to the mean adjacent dot spacing of the
/// shape; 1 is the densest level, 2 the sparsest, 0 disables noise. A 10%
/// margin per cell side keeps noise dots apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec<S> {
    pub s: S,
    pub seed: u64,
    pub region: Box2<S>,
    pub margin_fraction: S,
}

impl<S: Scalar> NoiseSpec<S> {
    /// Validated spec; `s` must be one of 0, 1, 1.5, 2.
    pub fn new(s: S, seed: u64) -> Result<Self, Error> {
        let allowed = [0.0, 1.0, 1.5, 2.0];
        if !allowed.iter().any(|&a| s == c(a)) {
            return Err(Error::InvalidParameter(format!(
                "noise level s must be one of 0, 1, 1.5, 2 (got {:?})",
                s
            )));
        }
        Ok(NoiseSpec {
            s,
            seed,
            region: Box2::standard(),
            margin_fraction: c(0.10),
        })
    }
}

/// Keep every `stride`-th boundary point, then similarity-fit into `target`.
///
/// The scaled boundary preserves shape (a uniform scale plus translation):
/// the larger bounding-box dimension spans the target exactly and the other
/// is centered.
pub fn sample_shape<S: Scalar>(
    boundary: &[Point2<S>],
    stride: usize,
    target: Box2<S>,
) -> Result<DotPattern<S>, Error> {
    if stride == 0 {
        return Err(Error::InvalidParameter("stride must be positive".into()));
    }
    if boundary.len() < stride {
        return Err(Error::InvalidPattern(format!(
            "boundary has {} points, fewer than stride {}",
            boundary.len(),
            stride
        )));
    }
    let kept: Vec<Point2<S>> = boundary.iter().step_by(stride).cloned().collect();
    DotPattern::new(fit_points(&kept, target))
}

/// Similarity-transform `points` so their bounding box fits `target`.
pub fn fit_points<S: Scalar>(points: &[Point2<S>], target: Box2<S>) -> Vec<Point2<S>> {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let w = (hi.x - lo.x).max(geom_eps());
    let h = (hi.y - lo.y).max(geom_eps());
    let scale = (target.width() / w).min(target.height() / h);
    let half = c::<S>(0.5);
    let cx = (target.lo.x + target.hi.x) * half;
    let cy = (target.lo.y + target.hi.y) * half;
    let mx = (lo.x + hi.x) * half;
    let my = (lo.y + hi.y) * half;
    points
        .iter()
        .map(|p| Point2::new(cx + (p.x - mx) * scale, cy + (p.y - my) * scale))
        .collect()
}

/// Mean spacing between adjacent dots of a closed boundary sample.
pub fn mean_adjacent_spacing<S: Scalar>(dots: &DotPattern<S>) -> S {
    let pts = dots.points();
    let n = pts.len();
    if n < 2 {
        return S::zero();
    }
    let mut acc = S::zero();
    for i in 0..n {
        acc = acc + pts[i].distance(&pts[(i + 1) % n]);
    }
    acc / S::from_usize(n).unwrap()
}

/// Grid noise: one uniform dot per full `s*mu` cell of the region, confined
/// to the inner 80% of the cell. Deterministic given the seed.
pub fn gen_noise<S: Scalar>(shape_dots: &DotPattern<S>, spec: &NoiseSpec<S>) -> Vec<Point2<S>> {
    if spec.s <= S::zero() {
        return Vec::new();
    }
    let mu = mean_adjacent_spacing(shape_dots);
    if mu <= S::zero() {
        return Vec::new();
    }
    let cell = spec.s * mu;
    let nx = (spec.region.width() / cell).floor().to_usize().unwrap_or(0);
    let ny = (spec.region.height() / cell).floor().to_usize().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let usable = S::one() - spec.margin_fraction - spec.margin_fraction;
    let mut out = Vec::with_capacity(nx * ny);
    for gy in 0..ny {
        for gx in 0..nx {
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            let x0 = spec.region.lo.x + cell * S::from_usize(gx).unwrap();
            let y0 = spec.region.lo.y + cell * S::from_usize(gy).unwrap();
            let x = x0 + cell * (spec.margin_fraction + usable * c::<S>(u));
            let y = y0 + cell * (spec.margin_fraction + usable * c::<S>(v));
            out.push(Point2::new(x, y));
        }
    }
    out
}

/// `count` evenly spaced dots on a circle, first at angle 0.
pub fn frame_circle<S: Scalar>(
    center: Point2<S>,
    radius: S,
    count: usize,
) -> Result<Vec<Point2<S>>, Error> {
    if count < 3 {
        return Err(Error::InvalidParameter("frame needs at least 3 dots".into()));
    }
    let tau = c::<S>(std::f64::consts::TAU);
    let n = S::from_usize(count).unwrap();
    Ok((0..count)
        .map(|i| {
            let theta = tau * S::from_usize(i).unwrap() / n;
            Point2::new(center.x + radius * theta.cos(), center.y + radius * theta.sin())
        })
        .collect())
}

/// Default frame: 32 dots, radius 490, centered at (500, 500).
pub fn default_frame<S: Scalar>() -> Vec<Point2<S>> {
    frame_circle(Point2::new(c(500.0), c(500.0)), c(490.0), 32).unwrap()
}

/// Assemble shape + noise + frame into one pattern, dropping any dot that
/// coincides with an earlier one.
pub fn assemble<S: Scalar>(
    shape_dots: &DotPattern<S>,
    noise: &[Point2<S>],
    frame: &[Point2<S>],
) -> Result<DotPattern<S>, Error> {
    let eps = geom_eps::<S>();
    let mut pts: Vec<Point2<S>> = shape_dots.points().to_vec();
    for p in noise.iter().chain(frame.iter()) {
        if pts.iter().all(|q| q.distance(p) > eps) {
            pts.push(*p);
        }
    }
    DotPattern::new(pts)
}

/// A binary raster mask (row-major, y-down pixel coordinates).
#[derive(Debug, Clone)]
pub struct BinaryMask {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<bool>,
}

impl BinaryMask {
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.pixels[y * self.width + x]
    }

    /// Parse a PGM image (P2 or P5); any nonzero sample is an edge pixel.
    pub fn from_pgm(bytes: &[u8]) -> Result<Self, Error> {
        let mut header = Vec::new();
        let mut pos = 0;
        // Header tokens: magic, width, height, maxval; '#' starts a comment.
        while header.len() < 4 && pos < bytes.len() {
            let b = bytes[pos];
            if b == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                pos += 1;
            } else {
                let start = pos;
                while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() && bytes[pos] != b'#' {
                    pos += 1;
                }
                header.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| {
                    Error::Malformed("PGM header is not ASCII".into())
                })?.to_string());
            }
        }
        if header.len() < 4 {
            return Err(Error::Malformed("truncated PGM header".into()));
        }
        let magic = header[0].as_str();
        let width: usize = header[1].parse().map_err(|_| Error::Malformed("bad PGM width".into()))?;
        let height: usize = header[2].parse().map_err(|_| Error::Malformed("bad PGM height".into()))?;
        let maxval: usize = header[3].parse().map_err(|_| Error::Malformed("bad PGM maxval".into()))?;
        if maxval == 0 || maxval > 65535 {
            return Err(Error::Malformed("bad PGM maxval".into()));
        }
        let mut pixels = Vec::with_capacity(width * height);
        match magic {
            "P5" => {
                pos += 1; // single whitespace after maxval
                let bpp = if maxval > 255 { 2 } else { 1 };
                let need = width * height * bpp;
                if bytes.len() < pos + need {
                    return Err(Error::Malformed("truncated PGM data".into()));
                }
                for i in 0..width * height {
                    let v = if bpp == 1 {
                        bytes[pos + i] as usize
                    } else {
                        ((bytes[pos + 2 * i] as usize) << 8) | bytes[pos + 2 * i + 1] as usize
                    };
                    pixels.push(v != 0);
                }
            }
            "P2" => {
                let text = std::str::from_utf8(&bytes[pos..])
                    .map_err(|_| Error::Malformed("PGM data is not ASCII".into()))?;
                for tok in text.split_ascii_whitespace().take(width * height) {
                    let v: usize =
                        tok.parse().map_err(|_| Error::Malformed("bad PGM sample".into()))?;
                    pixels.push(v != 0);
                }
                if pixels.len() < width * height {
                    return Err(Error::Malformed("truncated PGM data".into()));
                }
            }
            other => {
                return Err(Error::Malformed(format!("unsupported PGM magic {other}")));
            }
        }
        Ok(BinaryMask { width, height, pixels })
    }
}

/// One dot per non-empty 4x4 block: the centroid of the block's set pixels,
/// rounded to the pixel. An all-empty mask yields an empty point list.
pub fn subsample_edges<S: Scalar>(mask: &BinaryMask) -> Result<Vec<Point2<S>>, Error> {
    if mask.width < 4 || mask.height < 4 {
        return Err(Error::InvalidParameter(
            "mask must be at least 4x4 pixels".into(),
        ));
    }
    let mut dots = Vec::new();
    let mut by = 0;
    while by < mask.height {
        let mut bx = 0;
        while bx < mask.width {
            let mut count = 0usize;
            let mut sx = 0usize;
            let mut sy = 0usize;
            for y in by..(by + 4).min(mask.height) {
                for x in bx..(bx + 4).min(mask.width) {
                    if mask.get(x, y) {
                        count += 1;
                        sx += x;
                        sy += y;
                    }
                }
            }
            if count > 0 {
                let cx = (sx as f64 / count as f64).round();
                let cy = (sy as f64 / count as f64).round();
                dots.push(Point2::new(c(cx), c(cy)));
            }
            bx += 4;
        }
        by += 4;
    }
    Ok(dots)
}

// ---------------------------------------------------------------------------
// File formats (f64 only)
// ---------------------------------------------------------------------------

/// Metadata recorded alongside generated patterns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct PatternMeta {
    pub seed: Option<u64>,
    pub s: Option<f64>,
    pub shape: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PatternFile {
    points: Vec<[f64; 2]>,
    meta: PatternMeta,
}

/// Serialize a pattern (plus metadata) as canonical JSON.
pub fn pattern_to_json(pattern: &DotPattern<f64>, meta: &PatternMeta) -> String {
    let file = PatternFile {
        points: pattern.points().iter().map(|p| [p.x, p.y]).collect(),
        meta: meta.clone(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("pattern serialization");
    s.push('\n');
    s
}

pub fn pattern_from_json(json: &str) -> Result<(DotPattern<f64>, PatternMeta), Error> {
    let file: PatternFile = serde_json::from_str(json)?;
    let pts = file.points.iter().map(|&[x, y]| Point2::new(x, y)).collect();
    Ok((DotPattern::new(pts)?, file.meta))
}

/// Read a pattern from JSON (`.json`) or CSV (`x,y` per line, anything else).
pub fn load_pattern(path: &Path) -> Result<(DotPattern<f64>, PatternMeta), Error> {
    let mut buf = String::new();
    std::fs::File::open(path)?.read_to_string(&mut buf)?;
    if path.extension().and_then(|e| e.to_str()) == Some("json") {
        pattern_from_json(&buf)
    } else {
        let mut pts = Vec::new();
        for (lineno, line) in buf.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split(',');
            let x: f64 = it
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| Error::Malformed(format!("bad CSV at line {}", lineno + 1)))?;
            let y: f64 = it
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| Error::Malformed(format!("bad CSV at line {}", lineno + 1)))?;
            pts.push(Point2::new(x, y));
        }
        Ok((DotPattern::new(pts)?, PatternMeta::default()))
    }
}

pub fn save_pattern(
    path: &Path,
    pattern: &DotPattern<f64>,
    meta: &PatternMeta,
) -> Result<(), Error> {
    let json = pattern_to_json(pattern, meta);
    let mut f = std::fs::File::create(path)?;
    f.write_all(json.as_bytes())?;
    Ok(())
}

/// Load a PGM mask from disk.
pub fn load_mask(path: &Path) -> Result<BinaryMask, Error> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    BinaryMask::from_pgm(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn circle_boundary(n: usize) -> Vec<Point2<f64>> {
        (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / n as f64;
                Point2::new(t.cos(), t.sin())
            })
            .collect()
    }

    #[test]
    fn pattern_rejects_bad_input() {
        assert!(DotPattern::<f64>::new(vec![]).is_err());
        assert!(DotPattern::new(vec![Point2::new(0.0, 0.0), Point2::new(0.0, 0.0)]).is_err());
        assert!(DotPattern::new(vec![Point2::new(f64::INFINITY, 0.0)]).is_err());
        assert!(DotPattern::new(vec![Point2::new(0.0, 0.0)]).is_ok());
    }

    #[test]
    fn sample_shape_counts_and_similarity() {
        let boundary = circle_boundary(100);
        let dots = sample_shape(&boundary, 10, Box2::standard()).unwrap();
        assert_eq!(dots.len(), 10);

        // stride 1 keeps every point; pairwise distance ratios preserved.
        let all = sample_shape(&boundary, 1, Box2::standard()).unwrap();
        assert_eq!(all.len(), 100);
        let d01 = all.points()[0].distance(&all.points()[1]);
        let d05 = all.points()[0].distance(&all.points()[5]);
        let r_in = boundary[0].distance(&boundary[1]) / boundary[0].distance(&boundary[5]);
        assert_relative_eq!(d01 / d05, r_in, epsilon = 1e-9);

        // The circle spans the target box.
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in all.points() {
            lo = lo.min(p.x);
            hi = hi.max(p.x);
        }
        assert_relative_eq!(hi - lo, 600.0, epsilon = 1e-6);
    }

    #[test]
    fn sample_shape_too_few_points() {
        let boundary = circle_boundary(5);
        assert!(sample_shape(&boundary, 10, Box2::standard()).is_err());
    }

    #[test]
    fn noise_grid_count_and_margin() {
        // Square ring of dots spaced exactly 30 apart: mu = 30.
        let mut pts = Vec::new();
        for i in 0..10 {
            pts.push(Point2::new(300.0 + 30.0 * i as f64, 300.0));
        }
        for i in 0..10 {
            pts.push(Point2::new(600.0, 300.0 + 30.0 * i as f64));
        }
        for i in 0..10 {
            pts.push(Point2::new(600.0 - 30.0 * i as f64, 600.0));
        }
        for i in 0..10 {
            pts.push(Point2::new(300.0, 600.0 - 30.0 * i as f64));
        }
        let dots = DotPattern::new(pts).unwrap();
        assert_relative_eq!(mean_adjacent_spacing(&dots), 30.0, epsilon = 1e-9);

        // s=2 -> 60x60 cells over 600x600 -> 10x10 grid -> 100 noise dots.
        let spec = NoiseSpec::new(2.0, 7).unwrap();
        let noise = gen_noise(&dots, &spec);
        assert_eq!(noise.len(), 100);

        // Margin: every dot at least 10% of the cell from its cell border,
        // so no two noise dots closer than 0.2 * s * mu.
        let cell = 60.0;
        for p in &noise {
            let fx = ((p.x - 200.0) / cell).fract();
            let fy = ((p.y - 200.0) / cell).fract();
            assert!(fx >= 0.1 - 1e-12 && fx <= 0.9 + 1e-12);
            assert!(fy >= 0.1 - 1e-12 && fy <= 0.9 + 1e-12);
        }
        for i in 0..noise.len() {
            for j in (i + 1)..noise.len() {
                assert!(noise[i].distance(&noise[j]) >= 0.2 * cell - 1e-9);
            }
        }

        // Determinism and the s=0 case.
        assert_eq!(noise, gen_noise(&dots, &spec));
        let silent = NoiseSpec::new(0.0, 7).unwrap();
        assert!(gen_noise(&dots, &silent).is_empty());
    }

    #[test]
    fn noise_spec_validation() {
        assert!(NoiseSpec::<f64>::new(1.5, 0).is_ok());
        assert!(NoiseSpec::<f64>::new(0.7, 0).is_err());
    }

    #[test]
    fn frame_circle_examples() {
        let frame = default_frame::<f64>();
        assert_eq!(frame.len(), 32);
        let center = Point2::new(500.0, 500.0);
        for p in &frame {
            assert_relative_eq!(p.distance(&center), 490.0, epsilon = 1e-9);
        }
        // Adjacent angular gap is exactly tau/32.
        let a0 = (frame[0] - center).angle();
        let a1 = (frame[1] - center).angle();
        assert_relative_eq!(a1 - a0, std::f64::consts::TAU / 32.0, epsilon = 1e-12);

        let cross = frame_circle(Point2::new(0.0, 0.0), 1.0, 4).unwrap();
        assert_relative_eq!(cross[0].x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(cross[1].y, 1.0, epsilon = 1e-12);
        assert_relative_eq!(cross[2].x, -1.0, epsilon = 1e-12);
        assert_relative_eq!(cross[3].y, -1.0, epsilon = 1e-12);

        assert!(frame_circle(Point2::new(0.0, 0.0), 1.0, 2).is_err());
    }

    #[test]
    fn assembly_all_distinct() {
        let shape = DotPattern::new(vec![
            Point2::new(400.0, 400.0),
            Point2::new(500.0, 400.0),
            Point2::new(450.0, 500.0),
        ])
        .unwrap();
        let spec = NoiseSpec::new(2.0, 3).unwrap();
        let noise = gen_noise(&shape, &spec);
        let frame = default_frame();
        let full = assemble(&shape, &noise, &frame).unwrap();
        assert!(full.len() >= shape.len() + frame.len());
    }

    #[test]
    fn subsample_examples() {
        // One set pixel at (5, 6).
        let mut mask = BinaryMask {
            width: 8,
            height: 8,
            pixels: vec![false; 64],
        };
        mask.pixels[6 * 8 + 5] = true;
        let dots = subsample_edges::<f64>(&mask).unwrap();
        assert_eq!(dots, vec![Point2::new(5.0, 6.0)]);

        // Pixels (4,4) and (6,6) in one block -> centroid (5,5).
        let mut mask2 = BinaryMask {
            width: 8,
            height: 8,
            pixels: vec![false; 64],
        };
        mask2.pixels[4 * 8 + 4] = true;
        mask2.pixels[6 * 8 + 6] = true;
        let dots2 = subsample_edges::<f64>(&mask2).unwrap();
        assert_eq!(dots2, vec![Point2::new(5.0, 5.0)]);

        // Empty mask -> empty pattern.
        let empty = BinaryMask {
            width: 8,
            height: 8,
            pixels: vec![false; 64],
        };
        assert!(subsample_edges::<f64>(&empty).unwrap().is_empty());

        // Undersized mask is a usage error.
        let tiny = BinaryMask {
            width: 2,
            height: 2,
            pixels: vec![true; 4],
        };
        assert!(subsample_edges::<f64>(&tiny).is_err());
    }

    #[test]
    fn pgm_parsing() {
        let p2 = b"P2\n# comment\n4 4\n255\n0 0 0 0 0 255 0 0 0 0 0 0 0 0 0 0\n";
        let mask = BinaryMask::from_pgm(p2).unwrap();
        assert!(mask.get(1, 1));
        assert!(!mask.get(0, 0));

        let mut p5 = b"P5 4 4 255\n".to_vec();
        let mut data = vec![0u8; 16];
        data[2] = 200;
        p5.extend_from_slice(&data);
        let mask5 = BinaryMask::from_pgm(&p5).unwrap();
        assert!(mask5.get(2, 0));

        assert!(BinaryMask::from_pgm(b"P6 2 2 255\nxxxx").is_err());
    }

    #[test]
    fn json_round_trip() {
        let dots = DotPattern::new(vec![Point2::new(1.5, 2.0), Point2::new(3.0, 4.25)]).unwrap();
        let meta = PatternMeta {
            seed: Some(7),
            s: Some(2.0),
            shape: Some("blob".into()),
        };
        let json = pattern_to_json(&dots, &meta);
        let (back, meta2) = pattern_from_json(&json).unwrap();
        assert_eq!(back, dots);
        assert_eq!(meta2, meta);
        // Byte-identical re-serialization.
        assert_eq!(pattern_to_json(&back, &meta2), json);
    }
}
