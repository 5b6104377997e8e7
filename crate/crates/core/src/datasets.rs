//! Random convex polygons and distant / touching / overlap pair datasets.
//!
//! Every case is a pure function of `(spec.seed, regime, case index)`: the
//! three are mixed into a per-case seed that drives a ChaCha8 stream.
//!
//! Datasets persist as JSON lines. The first line is a header object, every
//! following line one case:
//!
//! ```text
//! {"schema":1,"vertex_count":8,"cases_per_regime":1000,"seed":42,"rng":"ChaCha8Rng+splitmix64",...}
//! {"regime":"distant","seed":1234,"p":{"vertices":[[x,y],...]},"q":{"vertices":[...]}}
//! ```

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baseline::{oracle_distance, sat_overlap_depth};
use crate::geometry::{cross, ConvexPolygon, PolygonError, Transform2, Vec2};
use crate::gjk::{distance, QueryOptions};

pub const SCHEMA_VERSION: u32 = 1;
pub const RNG_NAME: &str = "ChaCha8Rng+splitmix64";

/// Distant pairs must be at least this far apart.
pub const DISTANT_MIN_DISTANCE: f64 = 1e-6;
/// Touching pairs must be within this distance and overlap by no more.
pub const TOUCHING_MAX_DISTANCE: f64 = 1e-7;
/// Overlapping pairs must penetrate at least this deep along every axis.
pub const OVERLAP_MIN_DEPTH: f64 = 1e-6;

/// Polygon radius range.
const SCALE_RANGE: (f64, f64) = (0.5, 2.0);
/// Gap added to the summed bounding radii of distant pairs, as a fraction of
/// that sum.
const DISTANT_GAP_FRACTION: (f64, f64) = (0.02, 0.5);
/// Placement of an overlapping polygon's centroid along a ray from the
/// other's centroid toward one of its vertices.
const OVERLAP_OFFSET_FRACTION: (f64, f64) = (0.0, 0.8);
/// Pair centres are spread over this square.
const WORLD_HALF_EXTENT: f64 = 10.0;

const MAX_POLYGON_ATTEMPTS: u32 = 1000;
const MAX_PAIR_ATTEMPTS: u32 = 100;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("invalid dataset spec: {0}")]
    InvalidSpec(String),
    #[error("failed to generate a {n}-vertex convex polygon after {attempts} attempts")]
    PolygonGenerationFailed { n: usize, attempts: u32 },
    #[error("could not construct a {regime} case for seed {seed} after {attempts} attempts")]
    RegimeConstructionFailed {
        regime: Regime,
        seed: u64,
        attempts: u32,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: polygon {which}: {source}")]
    InvalidPolygon {
        line: usize,
        which: char,
        #[source]
        source: PolygonError,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Distant,
    Touching,
    Overlap,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::Distant, Regime::Touching, Regime::Overlap];

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Distant => "distant",
            Regime::Touching => "touching",
            Regime::Overlap => "overlap",
        }
    }

    fn tag(self) -> u64 {
        match self {
            Regime::Distant => 1,
            Regime::Touching => 2,
            Regime::Overlap => 3,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "distant" => Ok(Regime::Distant),
            "touching" => Ok(Regime::Touching),
            "overlap" => Ok(Regime::Overlap),
            other => Err(format!("unknown regime `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetSpec {
    pub vertex_count: usize,
    pub cases_per_regime: usize,
    pub seed: u64,
}

impl DatasetSpec {
    pub fn new(vertex_count: usize, cases_per_regime: usize, seed: u64) -> Self {
        Self {
            vertex_count,
            cases_per_regime,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), DatasetError> {
        if self.vertex_count < 3 {
            return Err(DatasetError::InvalidSpec(format!(
                "vertex_count must be at least 3, got {}",
                self.vertex_count
            )));
        }
        if self.cases_per_regime < 1 {
            return Err(DatasetError::InvalidSpec(
                "cases_per_regime must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCase {
    pub regime: Regime,
    pub seed: u64,
    pub p: ConvexPolygon,
    pub q: ConvexPolygon,
}

impl PairCase {
    /// Re-checks the regime invariant with the brute-force oracles.
    pub fn verify(&self) -> bool {
        verify_regime(&self.p, &self.q, self.regime)
    }
}

fn verify_regime(p: &ConvexPolygon, q: &ConvexPolygon, regime: Regime) -> bool {
    match regime {
        Regime::Distant => oracle_distance(p, q).distance > DISTANT_MIN_DISTANCE,
        Regime::Touching => {
            oracle_distance(p, q).distance <= TOUCHING_MAX_DISTANCE
                && sat_overlap_depth(p, q) <= TOUCHING_MAX_DISTANCE
        }
        Regime::Overlap => sat_overlap_depth(p, q) > OVERLAP_MIN_DEPTH,
    }
}

/// First line of a dataset file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetHeader {
    pub schema: u32,
    pub vertex_count: usize,
    pub cases_per_regime: usize,
    pub seed: u64,
    pub rng: String,
    #[serde(default)]
    pub scale_range: Option<[f64; 2]>,
    #[serde(default)]
    pub distant_gap_fraction: Option<[f64; 2]>,
    #[serde(default)]
    pub overlap_offset_fraction: Option<[f64; 2]>,
}

impl DatasetHeader {
    pub fn for_spec(spec: &DatasetSpec) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            vertex_count: spec.vertex_count,
            cases_per_regime: spec.cases_per_regime,
            seed: spec.seed,
            rng: RNG_NAME.to_string(),
            scale_range: Some([SCALE_RANGE.0, SCALE_RANGE.1]),
            distant_gap_fraction: Some([DISTANT_GAP_FRACTION.0, DISTANT_GAP_FRACTION.1]),
            overlap_offset_fraction: Some([OVERLAP_OFFSET_FRACTION.0, OVERLAP_OFFSET_FRACTION.1]),
        }
    }
}

/// A header (absent only for a completely empty file) and the cases.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Dataset {
    pub header: Option<DatasetHeader>,
    pub cases: Vec<PairCase>,
}

impl Dataset {
    pub fn regime(&self, regime: Regime) -> impl Iterator<Item = &PairCase> {
        self.cases.iter().filter(move |c| c.regime == regime)
    }

    pub fn vertex_count(&self) -> Option<usize> {
        self.header
            .as_ref()
            .map(|h| h.vertex_count)
            .or_else(|| self.cases.first().map(|c| c.p.len()))
    }
}

/// Counters gathered while generating a dataset.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenerationReport {
    pub distant: usize,
    pub touching: usize,
    pub overlap: usize,
    /// Touching constructions attempted, including rejected ones.
    pub touching_attempts: usize,
    /// Seeds of touching cases that needed at least one regeneration.
    pub touching_regenerated: Vec<u64>,
}

impl GenerationReport {
    /// Share of touching constructions that verified on the first try.
    pub fn touching_success_rate(&self) -> f64 {
        if self.touching_attempts == 0 {
            return 1.0;
        }
        self.touching as f64 / self.touching_attempts as f64
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of case `index` of `regime` in a dataset seeded with `seed`.
pub fn case_seed(seed: u64, regime: Regime, index: u64) -> u64 {
    splitmix64(splitmix64(seed ^ regime.tag().wrapping_mul(0xD1B5_4A32_D192_ED03)) ^ index)
}

/// Convex hull by monotone chain. Returns the strictly convex hull in
/// counter-clockwise order starting from the lowest-x (then lowest-y) point;
/// collinear and duplicate points are dropped.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Vec2> = Vec::with_capacity(pts.len() + 1);
    let push = |hull: &mut Vec<Vec2>, p: Vec2, floor: usize| {
        while hull.len() >= floor + 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            if cross(b - a, p - b) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    };
    for &p in &pts {
        push(&mut hull, p, 0);
    }
    let lower_len = hull.len() - 1;
    for &p in pts.iter().rev().skip(1) {
        push(&mut hull, p, lower_len);
    }
    // the last point repeats the first
    hull.pop();
    hull
}

/// Random convex polygon with exactly `n` vertices, centred on its vertex
/// centroid and scaled so the farthest vertex sits at distance `scale`.
///
/// Uses Valtr's construction: random x and y increments are split into two
/// monotone chains each, paired up, sorted by angle and laid end to end,
/// which always yields a convex `n`-gon.
pub fn random_convex_polygon<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
    scale: f64,
) -> Result<ConvexPolygon, DatasetError> {
    if n < 3 {
        return Err(DatasetError::InvalidSpec(format!(
            "polygon needs at least 3 vertices, got {n}"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(DatasetError::InvalidSpec(format!(
            "scale must be positive, got {scale}"
        )));
    }
    for _ in 0..MAX_POLYGON_ATTEMPTS {
        let xs = chain_increments(n, rng);
        let mut ys = chain_increments(n, rng);
        ys.shuffle(rng);
        let mut edges: Vec<Vec2> = xs
            .into_iter()
            .zip(ys)
            .map(|(x, y)| Vec2::new(x, y))
            .collect();
        edges.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

        let mut verts = Vec::with_capacity(n);
        let mut cur = Vec2::ZERO;
        for e in &edges {
            verts.push(cur);
            cur += *e;
        }
        let centroid = verts.iter().fold(Vec2::ZERO, |acc, &v| acc + v) * (1.0 / n as f64);
        let radius = verts
            .iter()
            .map(|&v| (v - centroid).norm())
            .fold(0.0, f64::max);
        if !(radius > 0.0) {
            continue;
        }
        let k = scale / radius;
        let verts: Vec<Vec2> = verts.into_iter().map(|v| (v - centroid) * k).collect();
        if let Ok(poly) = ConvexPolygon::new(verts) {
            if poly.bounding_radius(Vec2::ZERO) <= scale {
                return Ok(poly);
            }
        }
    }
    Err(DatasetError::PolygonGenerationFailed {
        n,
        attempts: MAX_POLYGON_ATTEMPTS,
    })
}

/// `n` signed increments summing to zero, from two random monotone chains
/// between the smallest and largest of `n` uniform samples.
fn chain_increments<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut vals: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    vals.sort_by(f64::total_cmp);
    let (min, max) = (vals[0], vals[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut last_a, mut last_b) = (min, min);
    for &v in &vals[1..n - 1] {
        if rng.gen::<bool>() {
            out.push(v - last_a);
            last_a = v;
        } else {
            out.push(last_b - v);
            last_b = v;
        }
    }
    out.push(max - last_a);
    out.push(last_b - max);
    out
}

fn random_placed_polygon<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
    center: Vec2,
) -> Result<ConvexPolygon, DatasetError> {
    let scale = rng.gen_range(SCALE_RANGE.0..SCALE_RANGE.1);
    let poly = random_convex_polygon(n, rng, scale)?;
    let angle = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Ok(poly.transformed(&Transform2::new(angle, center)))
}

fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Vec2 {
    let a = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Vec2::new(a.cos(), a.sin())
}

fn distant_candidate<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<(ConvexPolygon, ConvexPolygon), DatasetError> {
    let center = Vec2::new(
        rng.gen_range(-WORLD_HALF_EXTENT..WORLD_HALF_EXTENT),
        rng.gen_range(-WORLD_HALF_EXTENT..WORLD_HALF_EXTENT),
    );
    let p = random_placed_polygon(n, rng, center)?;
    let q0 = random_placed_polygon(n, rng, Vec2::ZERO)?;
    let reach = p.bounding_radius(p.vertex_centroid()) + q0.bounding_radius(Vec2::ZERO);
    let gap = reach * rng.gen_range(DISTANT_GAP_FRACTION.0..DISTANT_GAP_FRACTION.1);
    let offset = random_unit(rng) * (reach + gap);
    let q = q0.translated(p.vertex_centroid() + offset);
    Ok((p, q))
}

fn overlap_candidate<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<(ConvexPolygon, ConvexPolygon), DatasetError> {
    let center = Vec2::new(
        rng.gen_range(-WORLD_HALF_EXTENT..WORLD_HALF_EXTENT),
        rng.gen_range(-WORLD_HALF_EXTENT..WORLD_HALF_EXTENT),
    );
    let p = random_placed_polygon(n, rng, center)?;
    let c = p.vertex_centroid();
    let corner = p.vertex(rng.gen_range(0..n));
    let t = rng.gen_range(OVERLAP_OFFSET_FRACTION.0..OVERLAP_OFFSET_FRACTION.1);
    let q = random_placed_polygon(n, rng, c + (corner - c) * t)?;
    Ok((p, q))
}

/// Shifts `q` by the separating vector of a distant pair so the two touch.
fn touching_candidate<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<(ConvexPolygon, ConvexPolygon), DatasetError> {
    let (p, q) = distant_candidate(n, rng)?;
    let r = distance(&p, &q, &QueryOptions::default());
    Ok((p, q.translated(r.separating_vector)))
}

/// Outcome of building one case, including rejected attempts.
#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub case: PairCase,
    /// Candidates that failed oracle verification before this one passed.
    pub rejected: u32,
}

/// Builds one case of `regime`, retrying with derived seeds until the
/// brute-force oracle confirms the regime.
pub fn generate_pair(
    spec: &DatasetSpec,
    regime: Regime,
    seed: u64,
) -> Result<PairOutcome, DatasetError> {
    spec.validate()?;
    let n = spec.vertex_count;
    for attempt in 0..MAX_PAIR_ATTEMPTS {
        let stream = if attempt == 0 {
            seed
        } else {
            splitmix64(seed ^ splitmix64(attempt as u64))
        };
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        let (p, q) = match regime {
            Regime::Distant => distant_candidate(n, &mut rng)?,
            Regime::Touching => touching_candidate(n, &mut rng)?,
            Regime::Overlap => overlap_candidate(n, &mut rng)?,
        };
        if verify_regime(&p, &q, regime) {
            return Ok(PairOutcome {
                case: PairCase { regime, seed, p, q },
                rejected: attempt,
            });
        }
    }
    Err(DatasetError::RegimeConstructionFailed {
        regime,
        seed,
        attempts: MAX_PAIR_ATTEMPTS,
    })
}

pub fn make_pair(spec: &DatasetSpec, regime: Regime, seed: u64) -> Result<PairCase, DatasetError> {
    generate_pair(spec, regime, seed).map(|o| o.case)
}

/// Generates `cases_per_regime` cases for each regime, in regime order.
pub fn generate_dataset(spec: &DatasetSpec) -> Result<(Dataset, GenerationReport), DatasetError> {
    spec.validate()?;
    let mut report = GenerationReport::default();
    let mut cases = Vec::with_capacity(3 * spec.cases_per_regime);
    for regime in Regime::ALL {
        for index in 0..spec.cases_per_regime {
            let seed = case_seed(spec.seed, regime, index as u64);
            let outcome = generate_pair(spec, regime, seed)?;
            match regime {
                Regime::Distant => report.distant += 1,
                Regime::Touching => {
                    report.touching += 1;
                    report.touching_attempts += 1 + outcome.rejected as usize;
                    if outcome.rejected > 0 {
                        report.touching_regenerated.push(seed);
                    }
                }
                Regime::Overlap => report.overlap += 1,
            }
            cases.push(outcome.case);
        }
    }
    Ok((
        Dataset {
            header: Some(DatasetHeader::for_spec(spec)),
            cases,
        },
        report,
    ))
}

#[derive(Serialize, Deserialize)]
struct RawPolygon {
    vertices: Vec<Vec2>,
}

#[derive(Deserialize)]
struct RawCase {
    regime: Regime,
    seed: u64,
    p: RawPolygon,
    q: RawPolygon,
}

pub fn write_dataset_to<W: Write>(mut out: W, dataset: &Dataset) -> Result<(), DatasetError> {
    let to_io = |e: serde_json::Error| DatasetError::Io(io::Error::other(e));
    if let Some(header) = &dataset.header {
        serde_json::to_writer(&mut out, header).map_err(to_io)?;
        out.write_all(b"\n")?;
    }
    for case in &dataset.cases {
        serde_json::to_writer(&mut out, case).map_err(to_io)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_dataset(path: impl AsRef<Path>, dataset: &Dataset) -> Result<(), DatasetError> {
    let file = File::create(path)?;
    write_dataset_to(BufWriter::new(file), dataset)
}

pub fn read_dataset_from<R: BufRead>(input: R) -> Result<Dataset, DatasetError> {
    let mut dataset = Dataset::default();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        // a header, when present, is the first line and carries `schema`
        if line_no == 1 && line.contains("\"schema\"") {
            let header: DatasetHeader =
                serde_json::from_str(&line).map_err(|e| DatasetError::Parse {
                    line: line_no,
                    message: format!("bad header: {e}"),
                })?;
            if header.schema != SCHEMA_VERSION {
                return Err(DatasetError::Parse {
                    line: line_no,
                    message: format!("unsupported schema {}", header.schema),
                });
            }
            dataset.header = Some(header);
            continue;
        }
        let raw: RawCase = serde_json::from_str(&line).map_err(|e| DatasetError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let p =
            ConvexPolygon::new(raw.p.vertices).map_err(|source| DatasetError::InvalidPolygon {
                line: line_no,
                which: 'p',
                source,
            })?;
        let q =
            ConvexPolygon::new(raw.q.vertices).map_err(|source| DatasetError::InvalidPolygon {
                line: line_no,
                which: 'q',
                source,
            })?;
        dataset.cases.push(PairCase {
            regime: raw.regime,
            seed: raw.seed,
            p,
            q,
        });
    }
    Ok(dataset)
}

pub fn read_dataset(path: impl AsRef<Path>) -> Result<Dataset, DatasetError> {
    read_dataset_from(BufReader::new(File::open(path)?))
}
