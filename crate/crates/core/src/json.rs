//! JSON views of reports. Integers that fit in an `i64` are numbers, larger
//! ones are decimal strings, and every rational is a `"p/q"` string, so no
//! floating-point value ever appears.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::chern::{
    c_d_coefficient_in_h, h4_permutahedron, h4_permutahedron_check, perm_c1k, perm_ck, perm_pk,
};
use crate::chern::{AlphaRow, ChernInequality, ChernReport, MiyaokaYau};
use crate::chow::GammaVector;
use crate::cmfs::CmfsState;
use crate::cone::{ConeCertificate, ConeOutcome};
use crate::flags::FlagTable;
use crate::matroid::Matroid;
use crate::moments::{BoundComparison, InequalityValue, MomentReport, PowerSums, SweepOutcome, SweepPoint};
use crate::poly::UniPoly;
use crate::verify::{CmfsCheck, VerifyReport};
use crate::{Integer, Rational};

pub fn integer(n: &Integer) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> Value {
    qs.into_iter().map(rational).collect()
}

/// Integral polynomials as integer arrays, others as `"p/q"` arrays.
pub fn poly_coeffs(p: &UniPoly) -> Value {
    match p.to_integers() {
        Some(ints) => ints.iter().map(integer).collect(),
        None => rationals(p.coeffs()),
    }
}

pub fn matroid_info(name: &str, m: &Matroid) -> Value {
    let lattice = m.flats();
    json!({
        "name": name,
        "n": m.n(),
        "rank": m.rank(),
        "d": m.d(),
        "bases": m.bases().len(),
        "flats_by_rank": lattice.layer_sizes(),
        "coloops": m.coloops().to_vec(),
        "rank_one_flats": m.rank_one_flats().len(),
        "simplification_is_boolean": m.simplification_is_boolean(),
    })
}

/// `{"d": d, "table": {"<mask>": count, ..}}` with masks in increasing order.
pub fn flag_table(table: &FlagTable) -> Value {
    let entries: Map<String, Value> = table
        .counts()
        .iter()
        .enumerate()
        .map(|(mask, n)| (mask.to_string(), integer(n)))
        .collect();
    json!({ "d": table.d(), "table": entries })
}

/// `mask,J,count` rows, with `J` written as space-separated indices.
pub fn flag_table_csv(table: &FlagTable) -> String {
    let mut out = String::from("mask,J,count\n");
    for (j, n) in table.iter() {
        let elems: Vec<String> = j.elems().iter().map(ToString::to_string).collect();
        out.push_str(&format!("{},{},{}\n", j.mask(), elems.join(" "), n));
    }
    out
}

pub fn chow(name: &str, d: usize, p: &UniPoly, gamma: &GammaVector) -> Value {
    json!({
        "name": name,
        "d": d,
        "coeffs": poly_coeffs(p),
        "display": p.to_string(),
        "gamma": rationals(&gamma.gamma),
        "gamma_nonnegative": gamma.is_nonnegative(),
    })
}

fn bound_comparison(b: &BoundComparison) -> Value {
    json!({
        "kind": b.kind.name(),
        "k": b.k,
        "bound": rational(&b.value),
        "holds": b.holds,
        "equality": b.equality,
    })
}

pub fn moment_report(r: &MomentReport) -> Value {
    let keyed = |m: &std::collections::BTreeMap<u32, Rational>| -> Map<String, Value> {
        m.iter().map(|(k, v)| (k.to_string(), rational(v))).collect()
    };
    json!({
        "d": r.d,
        "central_moments": keyed(&r.central_moments),
        "factorial_moments": keyed(&r.factorial_moments),
        "bounds": r.bound_comparisons.iter().map(bound_comparison).collect::<Vec<_>>(),
        "equality_diagnosis": r.equality_diagnosis.name(),
        "diagnosis_consistent": r.diagnosis_consistent,
        "all_hold": r.all_hold(),
    })
}

pub fn inequality(v: &InequalityValue) -> Value {
    json!({ "value": rational(&v.value), "holds": v.holds, "equality": v.equality })
}

pub fn power_sums(p: &PowerSums) -> Value {
    json!({
        "w1": rational(&p.w1),
        "w2": rational(&p.w2),
        "w3": rational(&p.w3),
        "bounds_hold": p.bounds_hold,
    })
}

fn sweep_points(points: &[SweepPoint]) -> Value {
    points.iter().map(|p| json!({ "d": p.d, "t": p.t })).collect()
}

pub fn sweep(d_max: usize, t_max: u32, s: &SweepOutcome) -> Value {
    json!({
        "d_max": d_max,
        "t_max": t_max,
        "checked": s.checked,
        "violations": sweep_points(&s.violations),
        "equalities": sweep_points(&s.equalities),
    })
}

pub fn cmfs(state: &CmfsState) -> Value {
    json!({
        "order": state.k,
        "h": rationals(&state.h_coeffs),
        "f": state
            .f_polys
            .iter()
            .enumerate()
            .map(|(k, f)| json!({ "k": k, "coeffs": rationals(f.coeffs()), "display": f.to_string() }))
            .collect::<Vec<_>>(),
        "steps": state
            .steps
            .iter()
            .map(|s| json!({ "from_order": s.from_order, "c": rational(&s.c), "cutoff": s.cutoff }))
            .collect::<Vec<_>>(),
    })
}

fn chern_inequality(c: &ChernInequality) -> Value {
    json!({ "lhs": integer(&c.lhs), "holds": c.holds, "equality": c.equality })
}

fn miyaoka_yau(my: &MiyaokaYau) -> Value {
    json!({
        "value": integer(&my.value),
        "closed_form": integer(&my.closed_form),
        "holds": my.holds,
    })
}

fn alpha_row(r: &AlphaRow) -> Value {
    json!({
        "k": r.k,
        "ck_alpha": integer(&r.ck_alpha),
        "c1_ck1_alpha": integer(&r.c1ck1_alpha),
        "lower_bound": integer(&r.lower_bound),
        "todd_holds": r.todd_holds,
    })
}

pub fn chern_report(r: &ChernReport) -> Value {
    json!({
        "d": r.d,
        "c_d": integer(&r.c_d),
        "c1_cd1": integer(&r.c1_cd1),
        "chow_at_one": integer(&r.chow_at_one),
        "inequality": chern_inequality(&r.inequality),
        "h": r.h_values.iter().map(|(k, v)| (k.to_string(), rational(v))).collect::<Map<_, _>>(),
        "h2_matches_chern": r.h2_matches_chern,
        "miyaoka_yau": r.miyaoka_yau.as_ref().map(miyaoka_yau),
        "alpha": r.alpha_rows.iter().map(alpha_row).collect::<Vec<_>>(),
    })
}

/// Intersection numbers of the permutahedral variety of dimension `d`.
pub fn permutahedron(d: usize) -> Value {
    let rows: Vec<Value> = (0..=d)
        .map(|k| {
            let (primary, alternative) = perm_ck(d, k);
            json!({
                "k": k,
                "c1k": rational(&perm_c1k(d, k)),
                "pk": if k >= 1 { rational(&perm_pk(d, k)) } else { Value::Null },
                "ck": rational(&primary),
                "ck_formulas_agree": primary == alternative,
                "c_d_coefficient_in_h": if (1..d).contains(&k) {
                    rational(&c_d_coefficient_in_h(k, d))
                } else {
                    Value::Null
                },
            })
        })
        .collect();
    let h4 = (d >= 4).then(|| json!({ "value": rational(&h4_permutahedron(d)), "check": h4_permutahedron_check(d) }));
    json!({ "d": d, "rows": rows, "h4": h4 })
}

fn cmfs_check(c: &CmfsCheck) -> Value {
    json!({ "k": c.k, "moment": rational(&c.moment), "bound": rational(&c.bound), "holds": c.holds })
}

pub fn verify_report(r: &VerifyReport) -> Value {
    json!({
        "name": r.name,
        "n": r.n,
        "d": r.d,
        "passed": r.passed(),
        "failures": r.failures(),
        "equality_diagnosis": r.diagnosis.name(),
        "simplification_is_boolean": r.simplification_is_boolean,
        "chow": { "coeffs": poly_coeffs(&r.chow), "consistent": r.chow_consistent },
        "gamma": { "values": rationals(&r.gamma.gamma), "nonnegative": r.gamma.is_nonnegative() },
        "moments": moment_report(&r.moments),
        "cmfs": r.cmfs.iter().map(cmfs_check).collect::<Vec<_>>(),
        "gamma_inequality": inequality(&r.gamma_inequality),
        "flag_inequality": inequality(&r.flag_inequality),
        "power_sums": power_sums(&r.power_sums),
        "chern": chern_report(&r.chern),
    })
}

fn mask_elems(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect()
}

pub fn cone_certificate(c: &ConeCertificate) -> Value {
    let multipliers: Vec<Value> = c
        .multipliers
        .iter()
        .map(|(p, l)| {
            json!({
                "lower": mask_elems(p.lower),
                "upper": mask_elems(p.upper),
                "lambda": rational(l),
            })
        })
        .collect();
    json!({
        "d": c.d,
        "status": "certified",
        "multipliers": multipliers,
        "residual_zero": c.residual.iter().all(num_traits::Zero::is_zero),
    })
}

pub fn cone_outcome(o: &ConeOutcome, verified: bool) -> Value {
    match o {
        ConeOutcome::Certified(c) => {
            let mut v = cone_certificate(c);
            v["verified"] = Value::Bool(verified);
            v
        }
        ConeOutcome::Infeasible { d, farkas } => json!({
            "d": d,
            "status": "infeasible",
            "farkas": rationals(farkas),
            "verified": verified,
        }),
    }
}
