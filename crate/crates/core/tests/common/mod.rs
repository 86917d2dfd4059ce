//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use ihom::conecalc::{LefschetzData, PairMorphismData};
use ihom::exactla::{inverse, q, GradedDims, RationalMatrix};
use rand::Rng;

pub const BIN: &str = env!("CARGO_BIN_EXE_ihom");

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn input(name: &str) -> String {
    fixtures().join("inputs").join(name).display().to_string()
}

/// `(golden name, arguments)`; `@file` expands to an input fixture path.
pub const CASES: &[(&str, &[&str])] = &[
    (
        "validate_crossing_spheres",
        &["validate", "@crossing_spheres.json"],
    ),
    (
        "validate_suspended_torus",
        &["validate", "@suspended_torus.json"],
    ),
    (
        "betti_suspended_torus_middle",
        &["betti", "@suspended_torus.json", "--perversity", "middle"],
    ),
    (
        "betti_suspended_torus_zero",
        &["betti", "@suspended_torus.json", "--perversity", "zero"],
    ),
    (
        "betti_suspended_torus_top",
        &["betti", "@suspended_torus.json", "--perversity", "top"],
    ),
    (
        "betti_suspended_torus_log",
        &["betti", "@suspended_torus.json", "--perversity", "log"],
    ),
    (
        "betti_crossing_spheres",
        &["betti", "@crossing_spheres.json"],
    ),
    ("betti_klein_bottle", &["betti", "@klein_bottle.json"]),
    (
        "betti_custom",
        &["betti", "@suspended_sphere.json", "-p", "custom=3:1"],
    ),
    ("cone_hexagon", &["cone", "@hexagon.json", "--apex", "c"]),
    ("suspend_hexagon", &["suspend", "@hexagon.json"]),
    (
        "link_suspended_torus",
        &["link", "@suspended_torus.json", "--vertex", "N"],
    ),
    (
        "linkmap_factor_circle",
        &[
            "linkmap",
            "@suspended_factor_circle.json",
            "@suspended_torus.json",
            "--vertex",
            "N",
            "--degree",
            "1",
        ],
    ),
    (
        "linkmap_equator",
        &[
            "linkmap",
            "@suspended_equator.json",
            "@suspended_sphere.json",
            "--vertex",
            "N",
            "--degree",
            "1",
        ],
    ),
    (
        "surgery_equator",
        &[
            "surgery",
            "@suspended_equator.json",
            "@suspended_sphere.json",
            "--apex",
            "N",
        ],
    ),
    (
        "surgery_factor_circle",
        &[
            "surgery",
            "@suspended_factor_circle.json",
            "@suspended_torus.json",
            "--apex",
            "S",
        ],
    ),
    (
        "lift_equator",
        &[
            "lift",
            "@suspended_sphere.json",
            "--chain",
            "@suspended_equator_cycle.json",
        ],
    ),
    (
        "lift_factor_circle",
        &[
            "lift",
            "@suspended_torus.json",
            "--chain",
            "@suspended_factor_circle_cycle.json",
        ],
    ),
    (
        "flag_sphere",
        &[
            "flag",
            "@sphere_flag_0.json",
            "@sphere_flag_1.json",
            "@sphere_flag_2.json",
        ],
    ),
    ("cone_formula_torus", &["cone-formula", "@torus.json"]),
    (
        "cone_formula_klein_bottle",
        &["cone-formula", "@klein_bottle.json"],
    ),
    (
        "cone_formula_dims",
        &["cone-formula", "--dims", "1,2,1", "--cone-dim", "3"],
    ),
    ("table_point_in_line", &["table", "@point_in_line.json"]),
    (
        "table_two_points_in_line",
        &["table", "@two_points_in_line.json"],
    ),
    ("gysin_projective_line", &["gysin", "@projective_line.json"]),
    ("gysin_quadric", &["gysin", "@quadric.json"]),
    ("gysin_point", &["gysin", "@point.json"]),
    (
        "chase_curve_in_quadric",
        &["chase", "@curve_in_quadric.json"],
    ),
    ("chase_point_in_line", &["chase", "@point_in_line.json"]),
    ("hl_plane_with_line", &["hl", "@plane_with_line.json"]),
    ("hl_quadric_with_conic", &["hl", "@quadric_with_conic.json"]),
    (
        "hl_restriction_not_onto",
        &["hl", "@surface_restriction_not_onto.json"],
    ),
    ("chern_plane", &["chern", "@plane_polar.json"]),
    ("chern_conic", &["chern", "@conic_polar.json"]),
    ("chern_cubic", &["chern", "@cubic_polar.json"]),
];

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => input(f),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(BIN).args(&args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn data(args: &[&str]) -> Run {
    let mut full = args.to_vec();
    full.extend(["--format", "data"]);
    run(&full)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, q(rng.gen_range(-2..=2)));
        }
    }
    m
}

/// Unit lower times unit upper triangular: always invertible.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let mut lower = RationalMatrix::identity(n);
    let mut upper = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, q(rng.gen_range(-2..=2)));
            upper.set(j, i, q(rng.gen_range(-2..=2)));
        }
    }
    lower.mul(&upper).unwrap()
}

/// Graded dimensions with random `Λ` in every degree.
pub fn random_lefschetz(rng: &mut impl Rng, max_len: usize) -> LefschetzData {
    let len = rng.gen_range(1..=max_len);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
    random_lambda(rng, dims, &[])
}

/// Random `Λ` on `dims`, invertible out of degree `iso`.
pub fn lefschetz_with_iso(rng: &mut impl Rng, dims: Vec<usize>, iso: usize) -> LefschetzData {
    random_lambda(rng, dims, &[iso])
}

fn random_lambda(rng: &mut impl Rng, dims: Vec<usize>, iso_at: &[usize]) -> LefschetzData {
    let g = GradedDims(dims);
    let mut lambda = BTreeMap::new();
    for i in 2..g.len() {
        let (r, c) = (g.get(i as isize - 2), g.get(i as isize));
        let m = if iso_at.contains(&i) {
            random_invertible(rng, c)
        } else {
            random_matrix(rng, r, c)
        };
        lambda.insert(i, m);
    }
    LefschetzData::new(g, lambda).unwrap()
}

/// A pair `dim 𝔛 = k - 1 ⊂ dim 𝔜 = k` with `Λ_x: x_k → x_{k-2}` and
/// `Λ_y: y_{k+1} → y_{k-1}` invertible and `α` commuting with `Λ` out of
/// degrees `k + 1` and `k`. Returns `(k, data)`.
pub fn random_hl_pair(rng: &mut impl Rng) -> (usize, PairMorphismData) {
    let k = rng.gen_range(1..=4usize);
    let mut xd: Vec<usize> = (0..2 * k - 1).map(|_| rng.gen_range(0..=3)).collect();
    let mut yd: Vec<usize> = (0..2 * k + 1).map(|_| rng.gen_range(0..=3)).collect();
    if k >= 2 {
        xd[k] = xd[k - 2];
    }
    yd[k + 1] = yd[k - 1];
    let x = random_lambda(rng, xd, &[k]);
    let y = random_lambda(rng, yd, &[k + 1]);
    let ki = k as isize;
    let mut alpha = BTreeMap::new();
    for i in 0..x.dims().len().max(y.dims().len()) {
        let ii = i as isize;
        alpha.insert(i, random_matrix(rng, y.dim(ii), x.dim(ii)));
    }
    let a = |alpha: &BTreeMap<usize, RationalMatrix>, i: isize| {
        if i < 0 {
            RationalMatrix::zeros(y.dim(i), x.dim(i))
        } else {
            alpha[&(i as usize)].clone()
        }
    };
    let ly_inv = inverse(&y.lambda(ki + 1)).unwrap();
    let top = ly_inv
        .mul(&a(&alpha, ki - 1))
        .unwrap()
        .mul(&x.lambda(ki + 1))
        .unwrap();
    alpha.insert(k + 1, top);
    if k >= 2 {
        let lx_inv = inverse(&x.lambda(ki)).unwrap();
        let low = y
            .lambda(ki)
            .mul(&a(&alpha, ki))
            .unwrap()
            .mul(&lx_inv)
            .unwrap();
        alpha.insert(k - 2, low);
    }
    (k, PairMorphismData::new(x, y, alpha).unwrap())
}
