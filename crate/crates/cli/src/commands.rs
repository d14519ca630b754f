use serde_json::{json, Value};

use scrolldiv::algebra::{FineDegree, Monomial};
use scrolldiv::betti::{default_bound, invariants_from_betti, koszul_betti, regularity_formula, BettiTable};
use scrolldiv::groebner::{
    buchberger, depth_certificate, initial_ideal_counts, kappa_generators, l_g_spair_report, verify_gb,
    GroebnerBasis,
};
use scrolldiv::rees::{factor_element, is_rees_generator, monomial_product, rees_generating_set, u_degree};
use scrolldiv::resolution::{
    euler_check, factor_resolutions, hilbert_function, ComplexRanks, FactorKind, Filtration, HilbertTarget,
};
use scrolldiv::scroll::{a_monomial_basis, build_psi, minors_h};
use scrolldiv::symbolic::{check_minimality, generating_set_with_tuples};
use scrolldiv::{Result, ScrollData};

use crate::report::{strings, Report};

pub struct Options {
    pub degree_bound: Option<u32>,
    pub filtration: Filtration,
    pub max_pairs: usize,
}

const EULER_BOUND: u32 = 8;

fn fdeg_value(d: &FineDegree) -> Value {
    serde_json::to_value(d).expect("plain data")
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn gens(d: &ScrollData) -> Result<Report> {
    let elems = generating_set_with_tuples(d);
    let monos: Vec<Monomial> = elems.iter().map(|e| e.monomial.clone()).collect();
    let counterexample = check_minimality(d, &monos);
    let mut r = Report {
        header: strings(["#", "generator", "tuple", "slot", "Deg", "degree", "fdeg"]),
        ..Report::default()
    };
    let mut list = Vec::new();
    for (i, e) in elems.iter().enumerate() {
        let g = d.grade(&e.monomial);
        let name = d.format_monomial(&e.monomial);
        r.rows.push(vec![
            (i + 1).to_string(),
            name.clone(),
            e.tuple.to_string(),
            e.slot.to_string(),
            g.deg.to_string(),
            g.total.to_string(),
            g.fdeg.to_string(),
        ]);
        list.push(json!({
            "monomial": name,
            "tuple": e.tuple.a,
            "f": e.tuple.f,
            "r": e.tuple.r,
            "slot": e.slot,
            "deg": g.deg,
            "total_degree": g.total,
            "fdeg": fdeg_value(&g.fdeg),
        }));
    }
    let minimal = counterexample.is_none();
    r.notes.push(format!("{} minimal generators of K^({})", elems.len(), d.n()));
    if let Some((a, b)) = counterexample {
        r.notes.push(format!("not minimal: generator {} divides generator {}", a + 1, b + 1));
    }
    r.result = json!({
        "count": elems.len(),
        "generators": list,
        "minimal": minimal,
        "counterexample": counterexample,
    });
    r.check("minimal", minimal);
    r.check("deg_at_least_n", monos.iter().all(|m| d.deg(m) >= d.n() as i64));
    Ok(r)
}

/// Minimal generators of the monomial ideal spanned by `leads`, descending.
fn minimal_leads(leads: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = leads
        .iter()
        .filter(|m| !leads.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

pub fn gb(d: &ScrollData, opts: &Options) -> Result<Report> {
    let ring = d.ring();
    let minors = minors_h(d, &build_psi(d));
    let kappa = kappa_generators(d);
    let verdict = verify_gb(&ring, &kappa);
    let engine = buchberger(&ring, &kappa, opts.max_pairs)?;
    let leads: Vec<Monomial> = kappa.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let engine_agrees = engine.certified && engine.leads() == minimal_leads(&leads);
    let spairs = l_g_spair_report(d);

    let top = leads.iter().map(Monomial::total_degree).max().unwrap_or(0);
    let bound = opts.degree_bound.unwrap_or(top + 2);
    let as_basis = GroebnerBasis { generators: kappa.clone(), certified: verdict.ok };
    let counts = initial_ideal_counts(&as_basis, d.nvars(), bound);
    let expected: Vec<u64> = (0..=bound)
        .map(|t| a_monomial_basis(d, t).iter().filter(|f| f.alpha < d.n() as i64).count() as u64)
        .collect();

    let mut r = Report {
        header: strings(["#", "role", "polynomial", "lead"]),
        ..Report::default()
    };
    let mut basis = Vec::new();
    for (i, g) in kappa.iter().enumerate() {
        let role = if i < minors.len() { "minor" } else { "generator" };
        let poly = d.format_polynomial(g);
        let lead = d.format_monomial(g.leading_monomial().unwrap());
        r.rows.push(vec![(i + 1).to_string(), role.into(), poly.clone(), lead.clone()]);
        basis.push(json!({ "role": role, "polynomial": poly, "lead": lead }));
    }
    r.notes.push(format!(
        "basis of the preimage of K^({}): {} minors + {} generators = {}",
        d.n(),
        minors.len(),
        kappa.len() - minors.len(),
        kappa.len()
    ));
    r.notes.push(format!("certified: {}", verdict.ok));
    r.notes.push(format!("standard monomials by degree 0..={bound}: {}", joined(&counts)));
    let failing = verdict.failing.as_ref().map(|f| {
        json!({ "i": f.i, "j": f.j, "remainder": d.format_polynomial(&f.remainder) })
    });
    r.result = json!({
        "basis": basis,
        "size": kappa.len(),
        "minors": minors.len(),
        "certified": verdict.ok,
        "failing_pair": failing,
        "engine_basis_size": engine.generators.len(),
        "standard_monomials": counts,
        "spair_checks": spairs.checked,
        "spair_min_deg": spairs.min_deg,
    });
    r.check("certified", verdict.ok);
    r.check("engine_agrees", engine_agrees);
    r.check("spair_remainders", spairs.ok());
    r.check("standard_monomials", counts == expected);
    Ok(r)
}

fn kind_name(k: &FactorKind) -> &'static str {
    match k {
        FactorKind::SymmetricPower => "symmetric_power",
        FactorKind::FirstRow { .. } => "first_row",
    }
}

pub fn resolve(d: &ScrollData, opts: &Options) -> Result<Report> {
    let parts = factor_resolutions(d, opts.filtration);
    let total = ComplexRanks::direct_sum(&parts.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>());
    let bound = opts.degree_bound.unwrap_or(EULER_BOUND);
    let euler = euler_check(d, &total, bound);
    let expected_length = d.sigma_sum() as usize + d.ell() - 2;
    let ngens = generating_set_with_tuples(d).len();

    let mut r = Report {
        header: strings(["#", "tuple", "kind", "cutoff", "shift", "ranks", "length"]),
        ..Report::default()
    };
    let mut factors = Vec::new();
    for (i, (f, c)) in parts.iter().enumerate() {
        r.rows.push(vec![
            (i + 1).to_string(),
            f.tuple.to_string(),
            kind_name(&f.kind).into(),
            f.cutoff().to_string(),
            f.shift.to_string(),
            joined(&c.ranks()),
            c.length().to_string(),
        ]);
        factors.push(json!({
            "tuple": f.tuple.a,
            "kind": kind_name(&f.kind),
            "cutoff": f.cutoff(),
            "shift": fdeg_value(&f.shift),
            "ranks": c.ranks(),
            "length": c.length(),
        }));
    }
    let filtration = match opts.filtration {
        Filtration::Fine => "fine",
        Filtration::Coarse => "coarse",
    };
    r.notes.push(format!("{filtration} filtration, {} factors", parts.len()));
    r.notes.push(format!("total ranks: {}", joined(&total.ranks())));
    r.notes.push(format!("length: {} (expected {expected_length})", total.length()));
    r.notes.push(format!(
        "euler characteristic vs Hilbert function of K^({}): {} on {} fine degrees of total degree <= {bound}",
        d.n(),
        if euler.ok { "equal" } else { "DIFFERENT" },
        euler.checked
    ));
    r.result = json!({
        "filtration": filtration,
        "factors": factors,
        "ranks": total.ranks(),
        "length": total.length(),
        "expected_length": expected_length,
        "euler_ok": euler.ok,
        "euler_bound": bound,
        "euler_checked": euler.checked,
        "regularity_bound": total.regularity_bound(),
    });
    r.check("length", total.length() == expected_length);
    r.check("generators", total.ranks().first() == Some(&ngens));
    r.check("euler", euler.ok);
    Ok(r)
}

fn betti_rows(t: &BettiTable) -> (Vec<Vec<String>>, Vec<Value>) {
    t.entries
        .iter()
        .map(|(&(i, deg), &b)| {
            (strings([i as i64, deg, b as i64]), json!({ "i": i, "d": deg, "beta": b }))
        })
        .unzip()
}

pub fn betti(d: &ScrollData, opts: &Options) -> Result<Report> {
    let table = koszul_betti(d, opts.degree_bound)?;
    let (rows, entries) = betti_rows(&table);
    let mut r = Report { header: strings(["i", "d", "beta"]), rows, ..Report::default() };
    r.notes.push(format!(
        "Betti numbers of K^({}) through total degree {} ({})",
        d.n(),
        table.bound,
        if table.complete { "complete" } else { "INCOMPLETE: raise --degree-bound" }
    ));
    let resolution = factor_resolutions(d, Filtration::Fine);
    let total = ComplexRanks::direct_sum(&resolution.into_iter().map(|(_, c)| c).collect::<Vec<_>>());
    let graded = total.graded_ranks();
    let dominated = table.entries.iter().all(|(k, &b)| b as usize <= graded.get(k).copied().unwrap_or(0));
    let within = graded.keys().all(|&(_, t)| t <= table.bound as i64);
    let census: u64 = table.generator_census().values().sum();
    r.check("complete", table.complete);
    r.check("dominated_by_resolution", dominated);
    r.check("resolution_within_bound", within);
    r.check("generator_census", census as usize == generating_set_with_tuples(d).len());

    let mut result = json!({
        "entries": entries,
        "bound": table.bound,
        "complete": table.complete,
    });
    match invariants_from_betti(&table, d) {
        Ok(inv) => {
            r.notes.push(format!("pd = {} (formula {})", inv.pd, inv.pd_formula));
            r.notes.push(format!("depth = {}", inv.depth));
            r.notes.push(format!("reg = {} (formula {})", inv.reg, inv.reg_formula));
            r.check("pd", inv.pd_matches);
            r.check("depth", inv.depth_is_two);
            r.check("reg", inv.reg_matches);
            result["invariants"] = serde_json::to_value(&inv).expect("plain data");
        }
        Err(_) => {
            r.incomplete = true;
            result["invariants"] = Value::Null;
        }
    }
    let cert = depth_certificate(d, opts.max_pairs);
    if let Ok(c) = &cert {
        r.notes.push(format!(
            "depth certificate: {} is regular, socle witness {}",
            c.regular,
            d.format_monomial(&c.witness)
        ));
        result["depth_witness"] = json!(d.format_monomial(&c.witness));
    }
    r.check("depth_certificate", cert.is_ok());
    r.result = result;
    Ok(r)
}

pub fn reg(d: &ScrollData, opts: &Options) -> Result<Report> {
    let table = koszul_betti(d, opts.degree_bound)?;
    let formula = regularity_formula(d);
    let resolution = factor_resolutions(d, Filtration::Fine);
    let total = ComplexRanks::direct_sum(&resolution.into_iter().map(|(_, c)| c).collect::<Vec<_>>());
    let upper = total.regularity_bound();
    let mut r = Report { header: strings(["source", "value"]), ..Report::default() };
    r.rows.push(strings(["formula".to_string(), formula.to_string()]));
    let oracle = invariants_from_betti(&table, d).ok().map(|inv| inv.reg);
    match oracle {
        Some(v) => r.rows.push(strings(["oracle".to_string(), v.to_string()])),
        None => {
            r.incomplete = true;
            r.rows.push(strings(["oracle", "incomplete"]));
        }
    }
    if let Some(u) = upper {
        r.rows.push(strings(["resolution_upper_bound".to_string(), u.to_string()]));
    }
    let matches = oracle == Some(formula);
    r.notes.push(format!(
        "regularity of K^({}): formula {formula}, oracle {}, {}",
        d.n(),
        oracle.map_or("incomplete".to_string(), |v| v.to_string()),
        if matches { "match" } else { "NO MATCH" }
    ));
    r.result = json!({
        "formula": formula,
        "oracle": oracle,
        "resolution_upper_bound": upper,
        "match": matches,
        "bound": table.bound,
    });
    r.check("match", matches);
    r.check("upper_bound", upper.is_some_and(|u| u >= formula));
    Ok(r)
}

pub fn hilbert(d: &ScrollData, opts: &Options) -> Result<Report> {
    let bound = opts.degree_bound.unwrap_or(EULER_BOUND);
    let ring = hilbert_function(d, HilbertTarget::Ring, bound);
    let ideal = hilbert_function(d, HilbertTarget::Ideal, bound);
    let parts = factor_resolutions(d, opts.filtration);
    let mut sum = vec![0i64; bound as usize + 1];
    for (f, _) in &parts {
        for (t, v) in hilbert_function(d, HilbertTarget::Factor(f), bound).into_iter().enumerate() {
            sum[t] += v;
        }
    }
    let total = ComplexRanks::direct_sum(&parts.into_iter().map(|(_, c)| c).collect::<Vec<_>>());
    let euler = euler_check(d, &total, bound);
    let mut r = Report {
        header: strings(["degree", "dim_A", "dim_K", "factor_sum", "dim_A/K"]),
        ..Report::default()
    };
    for t in 0..=bound as usize {
        r.rows.push(strings([t as i64, ring[t], ideal[t], sum[t], ring[t] - ideal[t]]));
    }
    r.notes.push(format!("Hilbert functions through total degree {bound}"));
    r.result = json!({
        "bound": bound,
        "ring": ring,
        "ideal": ideal,
        "factor_sum": sum,
        "quotient": ring.iter().zip(&ideal).map(|(a, b)| a - b).collect::<Vec<_>>(),
    });
    r.check("factor_sum", sum == ideal);
    r.check("euler", euler.ok);
    Ok(r)
}

pub fn rees(d: &ScrollData) -> Result<Report> {
    let s = rees_generating_set(d);
    let expected: u32 = d.sigma().iter().map(|&x| x * (x + 1) / 2).sum();
    let mut r = Report {
        header: strings(["generator", "tuple", "factorization", "u_degree"]),
        ..Report::default()
    };
    let mut exact = true;
    let mut list = Vec::new();
    for e in generating_set_with_tuples(d) {
        let f = factor_element(d, &e);
        let ok = u_degree(&f) == d.n()
            && monomial_product(d, &f) == e.monomial
            && f.iter().all(|g| is_rees_generator(d, g));
        exact &= ok;
        let name = d.format_monomial(&e.monomial);
        let text = strings(&f).join(" * ");
        r.rows.push(vec![name.clone(), e.tuple.to_string(), text, u_degree(&f).to_string()]);
        list.push(json!({
            "generator": name,
            "factors": strings(&f),
            "u_degree": u_degree(&f),
        }));
    }
    r.notes.push(format!("{} Rees algebra generators: {}", s.len(), strings(&s).join(", ")));
    r.result = json!({
        "rees_generators": strings(&s),
        "count": s.len(),
        "factorizations": list,
    });
    r.check("generator_count", s.len() as u32 == expected);
    r.check("factorizations", exact);
    Ok(r)
}

pub fn default_betti_bound(d: &ScrollData) -> u32 {
    default_bound(d)
}
