//! The `analyze` command: run every structural check on one input
//! specification and emit a report with exact witnesses.

use std::path::Path;
use std::process::ExitCode;

use anyhow::Result;
use num::bigint::BigInt;
use serde_json::{json, Value};

use endoscopy_core::cohomology::{
    coinvariants, pairing_cft, pairing_cup, pairing_is_perfect, pairing_standard, tate_h0,
    tate_h_minus1, GammaLattice,
};
use endoscopy_core::endoscopy::{
    classify_orbits, endoscopic_subsystem, parity_claims, three_signs,
};
use endoscopy_core::packets::ParameterCombinatorics;

use crate::input::{self, AnalyzeJob};
use crate::report::{self, Check};

pub fn run(file: &Path, json_out: Option<&Path>) -> Result<ExitCode> {
    let job = input::load(file)?;
    let checks = run_checks(&job)?;
    let body = report::body_from_checks(&job.echo, &checks);
    let report = report::wrap(body);
    report::emit(&report, json_out)?;
    if checks.iter().any(|c| !c.pass) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn big_list(xs: &[BigInt]) -> Value {
    json!(xs.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn run_checks(job: &AnalyzeJob) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let endo = endoscopic_subsystem(
        &job.datum,
        job.q.clone(),
        job.omega.clone(),
        job.theta.clone(),
    )?;
    checks.push(Check::new(
        "endoscopic_subsystem",
        true,
        json!({
            "datum": job.datum_name,
            "rank": job.datum.rank(),
            "parent_roots": job.datum.num_roots(),
            "h_roots": endo.h_root_indices().len(),
            "q": job.q.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "q_order": job.q.order().to_string(),
            "twist_order": endo.twist().order,
        }),
    ));

    let fixed = endo.is_gamma_fixed();
    checks.push(Check::new("gamma_fixed", fixed, json!({ "fixed": fixed })));

    let elliptic = endo.is_elliptic();
    checks.push(Check::new("elliptic", elliptic, json!({ "elliptic": elliptic })));

    let signs = three_signs(&job.datum, &job.theta, &job.omega)?;
    checks.push(Check::new(
        "three_signs",
        signs.all_equal,
        json!({
            "eps_relative_rank": signs.eps_relative_rank,
            "det_omega": signs.det_omega,
            "eps_L": signs.eps_l,
            "minus_one_to_N": signs.minus_one_to_n,
            "n_symmetric": signs.n_symmetric,
        }),
    ));
    checks.push(Check::new(
        "det_equals_symmetric_parity",
        signs.det_omega == signs.minus_one_to_n,
        json!({ "det_omega": signs.det_omega, "minus_one_to_N": signs.minus_one_to_n }),
    ));

    let claims = parity_claims(&job.datum, &job.theta, &job.omega)?;
    checks.push(Check::new(
        "parity_claims",
        claims.claim1 && claims.claim2,
        json!({
            "inversion_count": claims.s_prime.len(),
            "symmetric_meets": claims.symmetric_meets,
            "claim1": claims.claim1,
            "claim2": claims.claim2,
        }),
    ));

    let orbits = classify_orbits(&job.datum, &endo.twist().matrix)?;
    checks.push(Check::new(
        "orbits",
        true,
        json!({
            "total": orbits.orbits.len(),
            "symmetric": orbits.n_symmetric(),
            "sizes": orbits.orbits.iter().map(|o| o.indices.len()).collect::<Vec<_>>(),
        }),
    ));

    let pc = ParameterCombinatorics::with_declared_order(
        &job.datum,
        job.theta.clone(),
        job.omega.clone(),
        job.m_override,
    )?;
    let trselp = pc.trselp();
    let warning = if trselp.valid {
        None
    } else {
        Some("twist is not elliptic for parameters (TRSELP fails); results kept".to_string())
    };
    checks.push(Check::warn(
        "trselp",
        warning,
        json!({
            "valid": trselp.valid,
            "witness": trselp.witness.as_ref().map(|(v, root)| json!({
                "fixed_cocharacter": big_list(v),
                "pairs_with_root": root,
            })),
        }),
    ));

    let cg = pc.component_group();
    checks.push(Check::new(
        "component_group",
        cg.order_matches,
        json!({
            "invariant_factors": big_list(cg.group.invariant_factors()),
            "order": cg.group.order().to_string(),
            "coinvariants_torsion_order": pc.x_coinvariants().torsion().order().to_string(),
        }),
    ));

    let classes = pc.x_coinvariants().torsion_classes();
    let mut fibers = Vec::new();
    let mut covered = 0usize;
    let mut sizes = std::collections::BTreeSet::new();
    for u in pc.xbar_quotient().torsion_classes() {
        let fiber = pc.packet_fiber(&u.element)?;
        covered += fiber.len();
        if !fiber.is_empty() {
            sizes.insert(fiber.len());
        }
        fibers.push(json!({
            "u": big_list(u.element.coords()),
            "size": fiber.len(),
            "classes": fiber.iter().map(|c| big_list(c.element.coords())).collect::<Vec<_>>(),
        }));
    }
    let fibers_ok = covered == classes.len() && sizes.len() <= 1;
    checks.push(Check::new(
        "packet_fibers",
        fibers_ok,
        json!({
            "num_classes": classes.len(),
            "xbar_torsion_order": pc.xbar_quotient().torsion().order().to_string(),
            "fibers": fibers,
        }),
    ));

    for (i, lat) in job.lattice_jobs.iter().enumerate() {
        checks.push(lattice_job_check(i, lat)?);
    }

    Ok(checks)
}

fn lattice_job_check(index: usize, lat: &GammaLattice) -> Result<Check> {
    let hm1 = tate_h_minus1(lat);
    let h0 = tate_h0(lat);
    let coinv = coinvariants(lat);
    let dual_hm1 = tate_h_minus1(&lat.dual());
    let mut agree = true;
    let mut witness_pair = Value::Null;
    'outer: for c in tate_h_minus1(lat).classes() {
        for mu in dual_hm1.classes() {
            let p1 = pairing_standard(lat, &c.representative, &mu.representative)?;
            let p2 = pairing_cup(lat, &c.representative, &mu.representative)?;
            let p3 = pairing_cft(lat, &c.representative, &mu.representative)?;
            if p1 != p2 || p2 != p3 {
                agree = false;
                witness_pair = json!({
                    "c": big_list(&c.representative),
                    "mu": big_list(&mu.representative),
                    "standard": p1.to_string(),
                    "cup": p2.to_string(),
                    "cft": p3.to_string(),
                });
                break 'outer;
            }
        }
    }
    let perfect = pairing_is_perfect(lat)?;
    Ok(Check::new(
        &format!("lattice_job[{index}]"),
        agree && perfect,
        json!({
            "m": lat.m(),
            "rank": lat.rank(),
            "h_minus1": big_list(hm1.group().invariant_factors()),
            "h0": big_list(h0.group().invariant_factors()),
            "coinvariants_free_rank": coinv.group().free_rank(),
            "coinvariants_torsion": big_list(coinv.torsion().invariant_factors()),
            "pairings_agree": agree,
            "perfect": perfect,
            "counterexample": witness_pair,
        }),
    ))
}
