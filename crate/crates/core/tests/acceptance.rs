//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every check compares the library against an oracle coded here, seeded so
//! runs are reproducible.

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, ExitCode};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paravector::exterior::BLADES;
use paravector::operator::{op_exp_series, star_bracket};
use paravector::paravector::{plane_through, LineRelation, Paravector};
use paravector::transform::{
    cotranslate, hyperbolic_split, pseudo_perspective, rotation_split, screw_scale_exp, Side,
};
use paravector::{
    classify_lines, line_through, on_line, on_plane, Multivector, OpElement, PerspectiveCamera,
    Point, Transform, Vector3,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rvec(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Vector3 {
    Vector3::new(r.gen_range(lo..hi), r.gen_range(lo..hi), r.gen_range(lo..hi))
}

fn unit(r: &mut ChaCha8Rng) -> Vector3 {
    loop {
        let v = rvec(r, -1.0, 1.0);
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

// orthonormal pair by Gram–Schmidt on random draws
fn frame(r: &mut ChaCha8Rng) -> (Vector3, Vector3) {
    loop {
        let u = unit(r);
        let w = rvec(r, -1.0, 1.0);
        let w = w - u * w.dot(&u);
        if w.norm() > 0.1 {
            return (u, w / w.norm());
        }
    }
}

fn check(worst: f64, tol: f64, what: &str) -> Outcome {
    if worst <= tol {
        Ok(format!("{what}: max deviation {worst:.2e} <= {tol:.0e}"))
    } else {
        Err(format!("{what}: max deviation {worst:.2e} > {tol:.0e}"))
    }
}

fn op_dev(a: &OpElement, b: &OpElement) -> f64 {
    a.max_abs_diff(b)
}

fn car_suite() -> Outcome {
    let mut r = rng(1);
    let mut worst: f64 = 0.0;
    let one = OpElement::identity();
    for _ in 0..500 {
        let (u, v) = (rvec(&mut r, -2.0, 2.0), rvec(&mut r, -2.0, 2.0));
        let (cu, cv) = (OpElement::creation(u), OpElement::creation(v));
        let (au, av) = (OpElement::annihilation(u), OpElement::annihilation(v));
        worst = worst.max((cv * cu + cu * cv).max_abs());
        worst = worst.max((av * au + au * av).max_abs());
        worst = worst.max(op_dev(&(cv * au + au * cv), &(one * v.dot(&u))));
    }
    check(worst, 1e-12, "500 vector pairs")
}

fn hodge_tables() -> Outcome {
    let e = Multivector::basis;
    let one = Multivector::scalar(1.0);
    let omega = Multivector::omega();
    let table = [
        (one, omega),
        (e(1), e(2).wedge(&e(3))),
        (e(2), e(3).wedge(&e(1))),
        (e(3), e(1).wedge(&e(2))),
        (e(1).wedge(&e(2)), e(3)),
        (e(2).wedge(&e(3)), e(1)),
        (e(3).wedge(&e(1)), e(2)),
        (omega, one),
    ];
    for (a, want) in table {
        if a.hodge() != want {
            return Err(format!("⋆({a}) = {}, want {want}", a.hodge()));
        }
        let op = OpElement::iota(&a);
        let star = op.star().map_err(|e| e.to_string())?;
        if star != OpElement::iota(&want) {
            return Err(format!("operator ⋆ of {op} = {star}"));
        }
    }
    for s in 0..BLADES {
        let b = Multivector::blade(s, 1.0);
        if b.hodge().hodge() != b {
            return Err(format!("⋆⋆ fails on blade {s}"));
        }
        let m = OpElement::monomial(s, 0, 1.0);
        if star_bracket(s) != m.star().map_err(|e| e.to_string())? {
            return Err(format!("bracket star differs on blade {s}"));
        }
    }
    Ok("8 multivector identities, 8 operator identities, ⋆⋆ = id, bracket form agrees: all exact".into())
}

fn rotation_split_identities() -> Outcome {
    let mut r = rng(3);
    let one = OpElement::identity();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    while count < 200 {
        let (u, v) = (rvec(&mut r, -1.5, 1.5), rvec(&mut r, -1.5, 1.5));
        let area2 = u.cross(&v).norm_squared();
        if area2 < 1e-3 {
            continue;
        }
        count += 1;
        let (r1, r2) = rotation_split(u, v);
        worst = worst.max(op_dev(&(r1 * r1), &(one * -area2)));
        worst = worst.max(op_dev(&(r2 * r2), &(one * -area2)));
        worst = worst.max(r1.commutator(&r2).max_abs());
    }
    let mut s_worst: f64 = 0.0;
    for _ in 0..200 {
        let u = rvec(&mut r, -1.5, 1.5);
        let w = rvec(&mut r, -1.5, 1.5);
        let v = w - u * (w.dot(&u) / u.norm_squared());
        let (s1, s2) = hyperbolic_split(u, v);
        let k = u.norm_squared() * v.norm_squared();
        s_worst = s_worst.max(op_dev(&(s1 * s1), &(one * k)));
        s_worst = s_worst.max(op_dev(&(s2 * s2), &(one * k)));
        s_worst = s_worst.max(s1.commutator(&s2).max_abs());
    }
    let total = worst.max(s_worst);
    check(total, 1e-10, &format!("R-split {worst:.1e}, S-split {s_worst:.1e} over 200 draws each"))
}

// p⃗ as an independent 3×3 matrix product
fn mat_apply(m: &[[f64; 3]; 3], p: Vector3) -> Vector3 {
    let a = p.to_array();
    let row = |i: usize| m[i][0] * a[0] + m[i][1] * a[1] + m[i][2] * a[2];
    Vector3::new(row(0), row(1), row(2))
}

fn outer(a: Vector3, b: Vector3) -> [[f64; 3]; 3] {
    let (a, b) = (a.to_array(), b.to_array());
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i] * b[j];
        }
    }
    m
}

fn madd(terms: &[(f64, [[f64; 3]; 3])]) -> [[f64; 3]; 3] {
    let mut m = [[0.0; 3]; 3];
    for (c, t) in terms {
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += c * t[i][j];
            }
        }
    }
    m
}

fn point_dev(got: &Point, weight: f64, loc: Vector3) -> f64 {
    (got.scalar() - weight).abs().max(got.vector_part().max_abs_diff(&(loc * weight)))
}

fn point_transforms() -> Outcome {
    let mut r = rng(4);
    let mut worst = [0.0f64; 7];
    let names = ["reflection", "scale", "shear", "rotation", "hrotation", "translation", "cotranslation"];
    let fail = |e: paravector::Error| e.to_string();
    for _ in 0..200 {
        let p = rvec(&mut r, -3.0, 3.0);
        let pp = Point::at(p);

        let n = unit(&mut r);
        let got = Transform::reflection(n).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[0] = worst[0].max(point_dev(&got, 1.0, p - n * (2.0 * p.dot(&n))));

        let v = rvec(&mut r, -1.0, 1.0);
        let t = r.gen_range(-1.5..1.5);
        let par = v * (p.dot(&v) / v.norm_squared());
        let want = (p - par) + par * (t * v.norm_squared()).exp();
        let got = Transform::scale(v, t).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[1] = worst[1].max(point_dev(&got, 1.0, want));

        let (fu, fv) = frame(&mut r);
        let (su, sv) = (fu * r.gen_range(0.2..2.0), fv * r.gen_range(0.2..2.0));
        let t = r.gen_range(-3.0..3.0);
        let got = Transform::shear(su, sv, t).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[2] = worst[2].max(point_dev(&got, 1.0, p + su * (t * p.dot(&sv))));

        let th: f64 = r.gen_range(-PI..PI);
        let w = fu.cross(&fv);
        // positive angle turns v⃗ towards u⃗
        let rot = madd(&[
            (1.0, outer(w, w)),
            (th.cos(), outer(fu, fu)),
            (th.cos(), outer(fv, fv)),
            (th.sin(), outer(fu, fv)),
            (-th.sin(), outer(fv, fu)),
        ]);
        let got = Transform::rotation(fu, fv, th).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[3] = worst[3].max(point_dev(&got, 1.0, mat_apply(&rot, p)));

        let th: f64 = r.gen_range(-2.0..2.0);
        let (pu, pv) = (p.dot(&fu), p.dot(&fv));
        let perp = p - fu * pu - fv * pv;
        let want = perp + fu * (th.cosh() * pu + th.sinh() * pv) + fv * (th.cosh() * pv + th.sinh() * pu);
        let got = Transform::hyperbolic_rotation(fu, fv, th).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[4] = worst[4].max(point_dev(&got, 1.0, want));

        let tv = rvec(&mut r, -3.0, 3.0);
        let got = Transform::translation(tv).map_err(fail)?.apply(&pp).map_err(fail)?;
        worst[5] = worst[5].max(point_dev(&got, 1.0, p + tv));

        let got = cotranslate(tv, &pp).map_err(fail)?;
        let dev = (got.scalar() - (1.0 + p.dot(&tv))).abs().max(got.vector_part().max_abs_diff(&p));
        worst[6] = worst[6].max(dev);
    }
    let max = worst.iter().cloned().fold(0.0, f64::max);
    let detail = names
        .iter()
        .zip(worst)
        .map(|(n, w)| format!("{n} {w:.0e}"))
        .collect::<Vec<_>>()
        .join(", ");
    check(max, 1e-9, &format!("200 draws each ({detail})"))
}

fn exponential_oracle() -> Outcome {
    let mut r = rng(5);
    let fail = |e: paravector::Error| e.to_string();
    let mut worst: f64 = 0.0;
    let mut near_branch: f64 = 0.0;
    for i in 0..100 {
        let t = r.gen_range(-3.0..3.0);
        let (fu, fv) = frame(&mut r);
        let u = fu * r.gen_range(0.3..1.5);
        // general pair, then one a hair away from orthogonal
        let v = rvec(&mut r, -1.0, 1.0);
        let w = fv * r.gen_range(0.3..1.5)
            + u * (if i % 10 == 0 { 0.0 } else { r.gen_range(0.0..1e-6) } / u.norm_squared());
        for (a, b) in [(u, v), (u, w), (u, u)] {
            let closed = screw_scale_exp(a, b, t);
            let generator = OpElement::creation(a).commutator(&OpElement::annihilation(b)) * (t / 2.0);
            let dev = op_dev(&closed, &op_exp_series(&generator, 1e-14).map_err(fail)?);
            worst = worst.max(dev);
            if a.dot(&b).abs() <= 1e-6 {
                near_branch = near_branch.max(dev);
            }
        }
        let th = r.gen_range(-10.0..10.0);
        let transforms = [
            Transform::rotation(fu, fv, th).map_err(fail)?,
            Transform::hyperbolic_rotation(fu, fv, r.gen_range(-3.0..3.0)).map_err(fail)?,
            Transform::translation(rvec(&mut r, -3.0, 3.0)).map_err(fail)?,
            Transform::scale(u, t).map_err(fail)?,
            Transform::shear(u, fv, t).map_err(fail)?,
        ];
        for tr in transforms {
            let g = tr.generator().ok_or("missing generator")?;
            let series = op_exp_series(&g, 1e-14).map_err(fail)?;
            worst = worst.max(op_dev(tr.operator(), &series));
        }
    }
    check(worst, 1e-10, &format!("screw/scale/shear/rotation/hrotation/translation, near branch {near_branch:.1e}"))
}

fn perspective() -> Outcome {
    let mut r = rng(6);
    let mut count = 0;
    let (mut plane_res, mut line_res, mut weight_res): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut sign_mismatch = 0;
    while count < 500 {
        let eye = rvec(&mut r, -3.0, 3.0);
        let n = unit(&mut r);
        let c = r.gen_range(-3.0..3.0);
        let p = rvec(&mut r, -5.0, 5.0);
        let depth = n.dot(&(p - eye));
        let a = c - n.dot(&eye);
        if depth.abs() <= 1e-6 || a.abs() <= 1e-6 {
            continue;
        }
        count += 1;
        let cam = PerspectiveCamera::new(eye, n, c).map_err(|e| e.to_string())?;
        let img = cam.project(&Point::at(p)).map_err(|e| e.to_string())?;
        let x = img.location;
        plane_res = plane_res.max((n.dot(&x) - c).abs());
        // sine of the angle between eye→X and eye→P
        let (ex, ep) = (x - eye, p - eye);
        line_res = line_res.max(ex.cross(&ep).norm() / (ex.norm() * ep.norm()));
        let want = (c - n.dot(&eye)) / depth;
        weight_res = weight_res.max((img.weight - want).abs() / want.abs().max(1.0));
        // the operator route carries the reciprocal in its scalar part
        weight_res = weight_res.max((1.0 / img.raw.scalar() - want).abs() / want.abs().max(1.0));
        // in front when P and the plane lie on the same side of the eye
        let front = (depth > 0.0) == (a > 0.0);
        if front != (img.side == Side::Front) || front != (img.weight > 0.0) {
            sign_mismatch += 1;
        }
    }
    let detail = format!(
        "500 configs: plane {plane_res:.1e}, collinearity {line_res:.1e}, weight {weight_res:.1e}, sign mismatches {sign_mismatch}"
    );
    if plane_res <= 1e-9 && line_res <= 1e-9 && weight_res <= 1e-12 && sign_mismatch == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn pseudo() -> Outcome {
    let fail = |e: paravector::Error| e.to_string();
    for n in [Vector3::E1, Vector3::E2, Vector3::E3, -Vector3::E1, -Vector3::E2, -Vector3::E3] {
        let eye = Point::from_raw(1.0, -n);
        let img = pseudo_perspective(n, &eye).map_err(fail)?;
        if *img.data() != -n.to_multivector() {
            return Err(format!("W_n(1 − n) = {img} for n = {n:?}"));
        }
    }
    let mut r = rng(7);
    let mut frames = vec![(Vector3::E3, Vector3::E1)];
    for _ in 0..20 {
        frames.push(frame(&mut r));
    }
    let mut worst: f64 = 0.0;
    for (n, perp) in frames {
        for (s, t) in [(1.0, 2.0), (0.5, 3.0)] {
            let eye = Point::from_raw(1.0, -n);
            let corners = [(s, 1.0), (t, 1.0), (t, -1.0), (s, -1.0)];
            for (k, side) in corners {
                let f = eye + Point::vector(n * k + perp * (side * k));
                let got = pseudo_perspective(n, &f).map_err(fail)?;
                let want = Point::from_raw(1.0, n * ((k - 1.0) / k) + perp * side) * k;
                worst = worst.max(got.max_abs_diff(&want));
            }
        }
    }
    check(worst, 1e-12, "eye maps to −n exactly; frustum corners over (s,t) = (1,2), (0.5,3)")
}

fn two_route() -> Outcome {
    let mut r = rng(8);
    let fail = |e: paravector::Error| e.to_string();
    let mut worst: f64 = 0.0;
    let mut kinds = Vec::new();
    for _ in 0..100 {
        let (fu, fv) = frame(&mut r);
        let transforms = [
            Transform::reflection(unit(&mut r)).map_err(fail)?,
            Transform::scale(rvec(&mut r, -1.0, 1.0), r.gen_range(-1.0..1.0)).map_err(fail)?,
            Transform::shear(fu, fv * 1.3, r.gen_range(-2.0..2.0)).map_err(fail)?,
            Transform::rotation(fu, fv, r.gen_range(-PI..PI)).map_err(fail)?,
            Transform::hyperbolic_rotation(fu, fv, r.gen_range(-1.0..1.0)).map_err(fail)?,
            Transform::translation(rvec(&mut r, -2.0, 2.0)).map_err(fail)?,
        ];
        let composed = transforms[0].compose(&transforms[3]).compose(&transforms[5]);
        let (p, q, s) = (
            Point::at(rvec(&mut r, -2.0, 2.0)),
            Point::at(rvec(&mut r, -2.0, 2.0)),
            Point::at(rvec(&mut r, -2.0, 2.0)),
        );
        let line = line_through(&p, &q).map_err(fail)?;
        let plane = plane_through(&p, &q, &s).map_err(fail)?;
        for t in transforms.iter().chain(std::iter::once(&composed)) {
            let (tp, tq, ts) = (t.apply(&p).map_err(fail)?, t.apply(&q).map_err(fail)?, t.apply(&s).map_err(fail)?);
            let direct = line_through(&tp, &tq).map_err(fail)?;
            worst = worst.max(t.apply(&line).map_err(fail)?.max_abs_diff(&direct));
            let direct = plane_through(&tp, &tq, &ts).map_err(fail)?;
            worst = worst.max(t.apply(&plane).map_err(fail)?.max_abs_diff(&direct));
            if kinds.len() < 7 {
                kinds.push(t.kind().tag());
            }
        }
    }
    check(worst, 1e-9, &format!("100 draws for {}", kinds.join("/")))
}

// exact small-integer geometry keeps the oracle free of rounding
fn ipoint(r: &mut ChaCha8Rng) -> Vector3 {
    Vector3::new(
        r.gen_range(-4..=4) as f64,
        r.gen_range(-4..=4) as f64,
        r.gen_range(-4..=4) as f64,
    )
}

fn det4_ones_first(p: [Vector3; 4]) -> f64 {
    // rows (1, pᵢ); expand by subtracting the first row
    let a = p[1] - p[0];
    let b = p[2] - p[0];
    let c = p[3] - p[0];
    a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x)
}

#[derive(Debug, PartialEq)]
enum Oracle {
    Skew(f64),
    Parallel,
    Coincident,
    Intersecting(bool),
}

fn oracle(p: Vector3, q: Vector3, s: Vector3, t: Vector3) -> Oracle {
    let vol = det4_ones_first([p, q, s, t]);
    if vol != 0.0 {
        return Oracle::Skew(vol);
    }
    let (d1, d2) = (q - p, t - s);
    if d1.cross(&d2) != Vector3::ZERO {
        return Oracle::Intersecting(d1.dot(&d2) == 0.0);
    }
    if (s - p).cross(&d1) == Vector3::ZERO {
        Oracle::Coincident
    } else {
        Oracle::Parallel
    }
}

fn incidence_and_classification() -> Outcome {
    let mut r = rng(9);
    let fail = |e: paravector::Error| e.to_string();
    let mut disagreements = 0;
    for _ in 0..1000 {
        let (p, q, s) = (rvec(&mut r, -3.0, 3.0), rvec(&mut r, -3.0, 3.0), rvec(&mut r, -3.0, 3.0));
        let line = line_through(&Point::at(p), &Point::at(q)).map_err(fail)?;
        let t = r.gen_range(-5.0..5.0);
        let on = p + (q - p) * t;
        let normal = (q - p).cross(&rvec(&mut r, -1.0, 1.0));
        let off = on + normal / normal.norm() * r.gen_range(1e-3..1.0);
        disagreements += usize::from(!on_line(&line, &Point::at(on)));
        disagreements += usize::from(on_line(&line, &Point::at(off)));

        let plane = plane_through(&Point::at(p), &Point::at(q), &Point::at(s)).map_err(fail)?;
        let (tt, uu) = (r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let inside = p + (q - p) * tt + (s - p) * uu;
        let n = (q - p).cross(&(s - p));
        let outside = inside + n / n.norm() * r.gen_range(1e-3..1.0);
        disagreements += usize::from(!on_plane(&plane, &Point::at(inside)));
        disagreements += usize::from(on_plane(&plane, &Point::at(outside)));
    }

    let mut mismatches = 0;
    let mut tally = [0usize; 4];
    let mut count = 0;
    while count < 500 {
        let p = ipoint(&mut r);
        let q = ipoint(&mut r);
        if p == q {
            continue;
        }
        let d = q - p;
        let (s, t) = match count % 5 {
            0 => (ipoint(&mut r), ipoint(&mut r)),
            1 => {
                let s = ipoint(&mut r);
                (s, s + d * r.gen_range(1..3) as f64)
            }
            2 => (p + d * r.gen_range(-2..3) as f64, p + d * r.gen_range(3..5) as f64),
            3 => (p, ipoint(&mut r)),
            _ => {
                // perpendicular through a lattice point of the first line
                let w = d.cross(&ipoint(&mut r));
                let s = p + d * r.gen_range(-2..3) as f64;
                (s, s + w)
            }
        };
        if s == t {
            continue;
        }
        count += 1;
        let (lp, lq, ls, lt) = (Point::at(p), Point::at(q), Point::at(s), Point::at(t));
        let got = classify_lines(&line_through(&lp, &lq).map_err(fail)?, &line_through(&ls, &lt).map_err(fail)?)
            .map_err(fail)?;
        let want = oracle(p, q, s, t);
        let agree = match (&got, &want) {
            (LineRelation::Skew { volume }, Oracle::Skew(v)) => (volume - v).abs() <= 1e-9 * v.abs().max(1.0),
            (LineRelation::Parallel, Oracle::Parallel) => true,
            (LineRelation::Coincident, Oracle::Coincident) => true,
            (LineRelation::Intersecting { perpendicular }, Oracle::Intersecting(w)) => perpendicular == w,
            _ => false,
        };
        if !agree {
            mismatches += 1;
        }
        tally[match want {
            Oracle::Skew(_) => 0,
            Oracle::Parallel => 1,
            Oracle::Coincident => 2,
            Oracle::Intersecting(_) => 3,
        }] += 1;
    }
    let detail = format!(
        "incidence disagreements {disagreements}/4000; classification mismatches {mismatches}/500 \
         (skew {}, parallel {}, coincident {}, intersecting {})",
        tally[0], tally[1], tally[2], tally[3]
    );
    if disagreements == 0 && mismatches == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn cli_golden() -> Outcome {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let bin = env!("CARGO_BIN_EXE_paravec");
    let runs: [(&str, Vec<&str>); 2] = [
        (
            "cube_project.json",
            vec!["project", "--scene", "cube.json", "--eye", "0,0,0", "--normal", "0,0,1", "--c", "1"],
        ),
        (
            "frustum_pseudo.json",
            vec!["project", "--scene", "frustum.json", "--eye", "0,0,-1", "--normal", "0,0,1", "--pseudo"],
        ),
    ];
    for (golden, args) in runs {
        let out = Command::new(bin)
            .current_dir(&data)
            .args(&args)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{golden}: exit {}", out.status));
        }
        let want = std::fs::read(data.join("golden").join(golden)).map_err(|e| e.to_string())?;
        if out.stdout != want {
            return Err(format!("{golden}: output differs from committed golden file"));
        }
    }
    Ok("cube projection and frustum-to-box outputs byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("CAR relations", car_suite),
        ("Hodge tables", hodge_tables),
        ("R/S split identities", rotation_split_identities),
        ("point transforms", point_transforms),
        ("exponential oracle", exponential_oracle),
        ("perspective", perspective),
        ("pseudo-perspective", pseudo),
        ("two-route consistency", two_route),
        ("incidence and classification", incidence_and_classification),
        ("CLI golden files", cli_golden),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
