use bertini_core::curve::{
    verify, CurveBundle, MultiplicityVerdict, PowerObstruction, VerificationReport,
};
use bertini_core::galois::{certify_galois, GaloisCertificate, GaloisVerdict};
use bertini_core::lattice::{
    build_hyperbolic, enumerate_short_vectors, exhaustive_linalg_check, f8s_iso_check,
    mod2_quadratic_census, orth_complement, picard_model_check, random_linalg_check,
};
use bertini_core::position::{position_report, PositionReport};
use bertini_core::{SeedPoly, UniPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::report::{form_json, Report};
use crate::seed::parse_seed;

/// Exhaustive dimension bound and random-trial settings for the mod-2 lemma suite.
pub const LINALG_EXHAUSTIVE_DIM: usize = 4;
pub const LINALG_RANDOM_DIM: usize = 8;
pub const LINALG_RANDOM_TRIALS: u64 = 1000;
const LINALG_RNG_SEED: u64 = 0x5eed_0008;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// 0: all requested checks pass; 1: a check failed (witness attached).
    pub exit_code: u8,
    pub report: Report,
}

impl Outcome {
    fn from_report(report: Report, passes: bool) -> Self {
        Self {
            exit_code: if passes { 0 } else { 1 },
            report,
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    match config.command {
        Command::Lattice => run_lattice(config.d),
        command => {
            let text = config.poly.as_deref().ok_or_else(|| {
                CliError::InvalidInput(format!("`{}` requires --poly", command.name()))
            })?;
            let seed = parse_seed(text)?;
            Ok(match command {
                Command::Construct => run_construct(seed),
                Command::Verify => run_verify(seed, config.prime_bound),
                Command::Position => run_position(seed),
                Command::Galois => run_galois(seed, config.prime_bound),
                Command::Lattice => unreachable!(),
            })
        }
    }
}

fn poly_str(p: &UniPoly) -> String {
    p.to_string()
}

fn set_forms(report: &mut Report, b: &CurveBundle) {
    report.forms = Some([b.u.clone(), b.v.clone(), b.w.clone(), b.q.clone()]);
}

fn run_construct(seed: SeedPoly) -> Outcome {
    let bundle = CurveBundle::build(&seed);
    let mut report = Report::new("construct", Some(seed));
    set_forms(&mut report, &bundle);
    report.checks.insert(
        "intermediate".into(),
        json!({
            "p": poly_str(&bundle.parts.p),
            "G": form_json(&bundle.parts.g),
            "H": form_json(&bundle.parts.h),
        }),
    );
    Outcome::from_report(report, true)
}

fn obstruction_str(r: &Result<bertini_core::TriPoly, PowerObstruction>) -> String {
    match r {
        Ok(root) => format!("root {root}"),
        Err(PowerObstruction::Zero) => "zero form".into(),
        Err(PowerObstruction::NotHomogeneous) => "not homogeneous".into(),
        Err(PowerObstruction::Degree(d)) => format!("degree {d} not divisible"),
        Err(PowerObstruction::LeadingMonomial(m)) => {
            format!("leading monomial {:?} is not a power", m.0)
        }
        Err(PowerObstruction::Mismatch(m)) => format!("mismatch at monomial {:?}", m.0),
    }
}

fn curve_checks(
    r: &VerificationReport,
    checks: &mut Map<String, Value>,
    witnesses: &mut Map<String, Value>,
) {
    let id = &r.identities;
    checks.insert(
        "identities".into(),
        json!({
            "u_vanishes_on_cubic": id.u_param.is_zero(),
            "v_restricts_to_t_h": id.v_param_defect.is_zero(),
            "v_x_degree": id.v_x_degree,
            "w_at_ninth_point": id.w_at_ninth_point.to_string(),
            "h0_squared": id.h0_squared.to_string(),
            "w_and_gradient_vanish_on_b": id.w_vanishing.iter().all(UniPoly::is_zero),
            "euler_relation": id.euler_holds,
            "amap_sections": id.amap_sections_hold,
            "passes": id.passes(),
        }),
    );
    if !id.passes() {
        witnesses.insert(
            "identities".into(),
            json!({
                "u_param": poly_str(&id.u_param),
                "v_param_defect": poly_str(&id.v_param_defect),
                "w_residues": id.w_vanishing.iter().map(poly_str).collect::<Vec<_>>(),
            }),
        );
    }

    let c = &r.cubic_space;
    checks.insert(
        "cubic_space".into(),
        json!({
            "dimension": c.dimension,
            "contains_u": c.contains_u,
            "contains_v": c.contains_v,
            "uv_rank": c.uv_rank,
            "passes": c.passes(),
        }),
    );
    if !c.passes() {
        witnesses.insert(
            "cubic_space".into(),
            json!({ "basis": c.basis.iter().map(form_json).collect::<Vec<_>>() }),
        );
    }

    let s = &r.sextic_space;
    checks.insert(
        "sextic_space".into(),
        json!({
            "dimension": s.dimension,
            "contains": { "u^2": s.members[0], "uv": s.members[1], "v^2": s.members[2], "w": s.members[3] },
            "members_rank": s.members_rank,
            "passes": s.passes(),
        }),
    );
    if !s.passes() {
        witnesses.insert(
            "sextic_space".into(),
            json!({ "basis": s.basis.iter().map(form_json).collect::<Vec<_>>() }),
        );
    }

    checks.insert(
        "degree".into(),
        json!({
            "degree": r.q_degree.degree,
            "homogeneous": r.q_degree.homogeneous,
            "passes": r.q_degree.passes(),
        }),
    );
    checks.insert("q_vanishes_on_b".into(), json!(r.q_on_b.is_zero()));
    if !r.q_on_b.is_zero() {
        witnesses.insert("q_on_b".into(), json!(poly_str(&r.q_on_b)));
    }

    let m = &r.multiplicity;
    let verdict = match &m.verdict {
        MultiplicityVerdict::Below { .. } => "below-3",
        MultiplicityVerdict::Exactly3 => "exactly-3",
        MultiplicityVerdict::Above { .. } => "above-3",
    };
    checks.insert(
        "multiplicity".into(),
        json!({
            "orders_vanishing": m.orders.iter().map(|o| o.all_vanish).collect::<Vec<_>>(),
            "order3_gcd": poly_str(&m.order3_gcd),
            "verdict": verdict,
            "passes": m.passes(),
        }),
    );
    match &m.verdict {
        MultiplicityVerdict::Below { order } => {
            if let Some((partial, residue)) = m
                .orders
                .iter()
                .find(|o| o.order == *order)
                .and_then(|o| o.witness.as_ref())
            {
                witnesses.insert(
                    "multiplicity".into(),
                    json!({ "partial": partial, "residue_mod_h": poly_str(residue) }),
                );
            }
        }
        MultiplicityVerdict::Above { gcd } => {
            witnesses.insert(
                "multiplicity".into(),
                json!({ "order3_gcd": poly_str(gcd) }),
            );
        }
        MultiplicityVerdict::Exactly3 => {}
    }

    let p = &r.perfect_power;
    let verdict = match p.verdict {
        bertini_core::curve::PowerVerdict::NinthPowerOfLinear => "ninth-power-of-linear",
        bertini_core::curve::PowerVerdict::CubeOfCubic => "cube-of-cubic",
        bertini_core::curve::PowerVerdict::Neither => "neither",
    };
    let pp_passes = p.verdict == bertini_core::curve::PowerVerdict::Neither;
    checks.insert(
        "perfect_power".into(),
        json!({
            "verdict": verdict,
            "ninth_root": obstruction_str(&p.ninth_root),
            "cube_root": obstruction_str(&p.cube_root),
            "passes": pp_passes,
        }),
    );
    if !pp_passes {
        let root = p.ninth_root.as_ref().or(p.cube_root.as_ref()).ok();
        witnesses.insert(
            "perfect_power".into(),
            json!({
                "leading_coefficient": p.leading_coefficient.to_string(),
                "root": root.map_or(Value::Null, form_json),
            }),
        );
    }
    checks.insert(
        "genus".into(),
        json!({ "value": r.genus, "expected": bertini_core::curve::EXPECTED_GENUS, "passes": r.genus == Some(bertini_core::curve::EXPECTED_GENUS) }),
    );
}

fn position_checks(
    r: &PositionReport,
    checks: &mut Map<String, Value>,
    witnesses: &mut Map<String, Value>,
) {
    let col = &r.collinear;
    let slow = col.slow_path.as_ref().map_or(Value::Null, |d| {
        json!({
            "deg_t": d.deg_t,
            "deg_e": d.deg_e,
            "deg_h3": d.deg_h3,
            "deg_t_distinct": d.deg_t_distinct,
            "e_at_zero": d.e_at_zero.to_string(),
            "t_distinct_at_zero": d.t_distinct_at_zero.to_string(),
        })
    });
    checks.insert(
        "no_three_collinear".into(),
        json!({ "passes": col.passes, "t_at_zero": col.t_at_zero.to_string(), "deflation": slow }),
    );
    if !col.passes {
        witnesses.insert(
            "no_three_collinear".into(),
            json!({
                "t_at_zero": col.t_at_zero.to_string(),
                "t_distinct_at_zero": col.slow_path.as_ref().map(|d| d.t_distinct_at_zero.to_string()),
            }),
        );
    }
    checks.insert(
        "no_six_on_conic".into(),
        json!({ "passes": r.conic.passes, "gcd_h_h_neg": poly_str(&r.conic.gcd) }),
    );
    if !r.conic.passes {
        witnesses.insert(
            "no_six_on_conic".into(),
            json!({ "gcd_h_h_neg": poly_str(&r.conic.gcd) }),
        );
    }
    let sc = &r.singular_cubic;
    checks.insert(
        "no_singular_cubic".into(),
        json!({ "passes": sc.passes, "minor_gcd": poly_str(&sc.gcd) }),
    );
    if !sc.passes {
        witnesses.insert(
            "no_singular_cubic".into(),
            json!({
                "minor_gcd": poly_str(&sc.gcd),
                "minors_mod_h": sc.minors.iter().map(poly_str).collect::<Vec<_>>(),
            }),
        );
    }
}

fn galois_json(cert: &GaloisCertificate, prime_bound: u64) -> Value {
    let verdict = match cert.verdict {
        GaloisVerdict::S8Certified => "S8-certified",
        GaloisVerdict::A8Certified => "A8-certified",
        GaloisVerdict::Inconclusive => "inconclusive",
    };
    json!({
        "verdict": verdict,
        "prime_bound": prime_bound,
        "discriminant": cert.discriminant.to_string(),
        "discriminant_is_square": cert.disc_is_square,
        "transitivity_prime": cert.transitivity_prime,
        "five_cycle_prime": cert.five_cycle_prime,
        "passes": cert.is_certified(),
    })
}

fn galois_witness(cert: &GaloisCertificate) -> Value {
    json!({
        "sampled_cycle_types": cert.sampled_types.iter().map(|t| json!({ "p": t.prime, "parts": t.parts })).collect::<Vec<_>>(),
        "skipped_primes": cert.skipped_primes,
    })
}

fn run_verify(seed: SeedPoly, prime_bound: u64) -> Outcome {
    let bundle = CurveBundle::build(&seed);
    let curve = verify(&bundle);
    let position = position_report(&seed);
    let cert = certify_galois(&seed, prime_bound);

    let mut report = Report::new("verify", Some(seed));
    set_forms(&mut report, &bundle);
    let mut curve_map = Map::new();
    curve_checks(&curve, &mut curve_map, &mut report.witnesses);
    curve_map.insert("passes".into(), json!(curve.passes()));
    report
        .checks
        .insert("curve".into(), Value::Object(curve_map));

    let mut pos_map = Map::new();
    position_checks(&position, &mut pos_map, &mut report.witnesses);
    pos_map.insert("passes".into(), json!(position.passes()));
    report
        .checks
        .insert("position".into(), Value::Object(pos_map));

    report
        .checks
        .insert("galois".into(), galois_json(&cert, prime_bound));
    if !cert.is_certified() {
        report
            .witnesses
            .insert("galois".into(), galois_witness(&cert));
    }
    let passes = curve.passes() && position.passes() && cert.is_certified();
    report.checks.insert("passes".into(), json!(passes));
    Outcome::from_report(report, passes)
}

fn run_position(seed: SeedPoly) -> Outcome {
    let position = position_report(&seed);
    let mut report = Report::new("position", Some(seed));
    position_checks(&position, &mut report.checks, &mut report.witnesses);
    report
        .checks
        .insert("passes".into(), json!(position.passes()));
    Outcome::from_report(report, position.passes())
}

fn run_galois(seed: SeedPoly, prime_bound: u64) -> Outcome {
    let cert = certify_galois(&seed, prime_bound);
    let mut report = Report::new("galois", Some(seed));
    report
        .checks
        .insert("galois".into(), galois_json(&cert, prime_bound));
    report
        .witnesses
        .insert("galois".into(), galois_witness(&cert));
    report
        .checks
        .insert("passes".into(), json!(cert.is_certified()));
    Outcome::from_report(report, cert.is_certified())
}

/// Bits of a mask in index order, bit 0 first.
fn bit_row(r: u32, n: usize) -> String {
    (0..n)
        .map(|j| if (r >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn lattice_err(e: bertini_core::Error) -> CliError {
    CliError::InvalidInput(e.to_string())
}

fn run_lattice(d: u32) -> Result<Outcome, CliError> {
    let h = build_hyperbolic(d).map_err(lattice_err)?;
    let comp = orth_complement(&h.lattice, &h.omega).map_err(lattice_err)?;
    let roots = enumerate_short_vectors(comp.lattice.gram(), -2).map_err(lattice_err)?;
    let expected_roots = if d == 1 { 240 } else { 126 };
    let det = comp.lattice.determinant();
    let omega_norm = h.lattice.norm(&h.omega);

    let mut report = Report::new("lattice", None);
    let c = &mut report.checks;
    c.insert("d".into(), json!(d));
    c.insert("omega".into(), json!(h.omega));
    c.insert("omega_norm".into(), json!(omega_norm));
    c.insert(
        "complement".into(),
        json!({
            "rank": comp.lattice.rank(),
            "determinant_abs": det.abs(),
            "even": comp.lattice.is_even(),
            "basis": comp.basis,
            "gram": comp.lattice.gram(),
        }),
    );
    c.insert(
        "roots".into(),
        json!({ "count": roots.len(), "expected": expected_roots }),
    );
    let mut passes = omega_norm == i64::from(d)
        && comp.lattice.rank() == 9 - d as usize
        && det.abs() == i64::from(d)
        && comp.lattice.is_even()
        && roots.len() == expected_roots;

    if d == 1 {
        let picard = picard_model_check().map_err(lattice_err)?;
        let f8s = f8s_iso_check().map_err(lattice_err)?;
        let census = mod2_quadratic_census().map_err(lattice_err)?;
        let exhaustive = exhaustive_linalg_check(LINALG_EXHAUSTIVE_DIM).map_err(lattice_err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(LINALG_RNG_SEED);
        let random = random_linalg_check(
            LINALG_RANDOM_DIM,
            LINALG_RANDOM_DIM,
            LINALG_RANDOM_TRIALS,
            &mut rng,
        )
        .map_err(lattice_err)?;

        c.insert(
            "picard".into(),
            json!({
                "k_squared": picard.k_squared,
                "v_norms": picard.v_norms,
                "v_cross_all_minus_one": picard.v_cross_minus_one,
                "v_orthogonal_to_k": picard.v_orthogonal_to_k,
                "mod2_rank": picard.mod2_rank,
                "mod2_gram_is_j_minus_i": picard.mod2_gram_is_j_minus_i,
                "mod2_det": picard.mod2_det,
                "passes": picard.passes(),
            }),
        );
        c.insert(
            "f8s".into(),
            json!({
                "complement_dimension": f8s.complement_dimension,
                "complement_reduction_rank": f8s.complement_reduction_rank,
                "bijective": f8s.bijective,
                "linear": f8s.linear,
                "equivariant_transposition": f8s.equivariant[0],
                "equivariant_long_cycle": f8s.equivariant[1],
                "all_ones_fixed": f8s.all_ones_fixed,
                "induced_form_rows": f8s.induced_form.iter().map(|&r| bit_row(r, 8)).collect::<Vec<_>>(),
                "induced_form_is_standard": f8s.induced_is_standard,
                "passes": f8s.passes(),
            }),
        );
        c.insert(
            "census".into(),
            json!({
                "q_one": census.q_one,
                "q_zero": census.q_zero,
                "roots": census.roots,
                "root_classes": census.root_classes,
                "roots_have_q_one": census.roots_have_q_one,
                "polarization_consistent": census.polarization_consistent,
                "reflections_preserve_q": census.reflections_preserve_q,
                "reflections_integral": census.reflections_integral,
                "passes": census.passes(),
            }),
        );
        c.insert(
            "linalg".into(),
            json!({
                "exhaustive_max_dim": LINALG_EXHAUSTIVE_DIM,
                "exhaustive_instances": exhaustive.instances,
                "exhaustive_counterexamples": exhaustive.counterexamples,
                "random_dim": LINALG_RANDOM_DIM,
                "random_trials": random.instances,
                "random_counterexamples": random.counterexamples,
                "random_restarts": random.restarts,
                "passes": exhaustive.passes() && random.passes(),
            }),
        );
        passes &= picard.passes()
            && f8s.passes()
            && census.passes()
            && exhaustive.passes()
            && random.passes();
    }
    report.checks.insert("passes".into(), json!(passes));
    if !passes {
        // The numeric invariants above are themselves the witnesses.
        let checks = Value::Object(report.checks.clone());
        report.witnesses.insert("lattice".into(), checks);
    }
    Ok(Outcome::from_report(report, passes))
}
