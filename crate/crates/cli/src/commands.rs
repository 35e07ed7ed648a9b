use anyhow::{bail, Context, Result};
use monopol::decomposition::{intersect_all, minimal_primes};
use monopol::parse::parse_prime;
use monopol::polar::{
    ass_correspondence_report, depolarize_ideal, polar_decomposition_general,
    polarization_sequence, polarize_ideal, LoweredStatus, PolarRing,
};
use monopol::simplicial::{alexander_dual_ideal, facet_complex};
use monopol::structure::{
    cm_tree_criterion, coprime_witness, joint_removal_check, konig_check,
    localization_forest_check, polar_complex, scm_filtration, sequentially_cm_verdict,
    verify_filtration_ass_strata, ScmVerdict, Verdict,
};
use monopol::{
    ass_quotient, beta_coprime, height as ideal_height, irreducible_decomposition, MonomialIdeal,
    MonomialPrime, SimplicialComplex, SquareFreeIdeal,
};
use serde_json::{json, Value};

use crate::report::{self, Outcome};

fn inputs(ideal: &MonomialIdeal) -> Value {
    json!({ "ideal": report::ideal(ideal) })
}

/// The facet complex of a square-free ideal, or of its polarization.
fn complex_of(ideal: &MonomialIdeal) -> Result<(SimplicialComplex, &'static str)> {
    if ideal.is_square_free() {
        let sq = SquareFreeIdeal::new(ideal.clone())?;
        Ok((facet_complex(&sq), "facet ideal"))
    } else {
        let (complex, _, _) = polar_complex(ideal)?;
        Ok((complex, "polarization"))
    }
}

fn leafless_witness(c: &SimplicialComplex) -> Result<Value> {
    Ok(match c.leafless_subcollection()? {
        Some(w) => {
            let facets: Vec<_> = w.iter().map(|&i| c.facets()[i].clone()).collect();
            report::faces(&facets, c.vertices())
        }
        None => Value::Null,
    })
}

pub fn polarize(ideal: &MonomialIdeal) -> Result<Outcome> {
    let (p, ring) = polarize_ideal(ideal)?;
    let results = json!({
        "polarization": report::ideal(p.ideal()),
        "slots": ring.slots(),
        "polarizing_sequence": polarization_sequence(&ring).display(),
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn depolarize(ideal: &MonomialIdeal) -> Result<Outcome> {
    let ring = PolarRing::from_flat(ideal.ring())
        .context("depolarize expects variables x[i,j] in the full polar layout")?;
    let sq = SquareFreeIdeal::new(ideal.clone())?;
    let base = depolarize_ideal(&sq, &ring)?;
    let results = json!({
        "depolarization": report::ideal(&base),
        "substituted": polarization_sequence(&ring).display(),
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn decompose(ideal: &MonomialIdeal) -> Result<Outcome> {
    let comps = irreducible_decomposition(ideal)?;
    let as_ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal()).collect();
    let meet = intersect_all(ideal.ring(), &as_ideals)?;
    let (_, ring) = polarize_ideal(ideal)?;
    let polar = polar_decomposition_general(ideal, &ring)?;
    let results = json!({
        "components": comps.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "count": comps.len(),
        "intersection_is_ideal": meet.as_ref() == Some(ideal),
        "polar_primes": report::primes(&polar),
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn ass(ideal: &MonomialIdeal) -> Result<Outcome> {
    let witnesses = ass_quotient(ideal, None)?;
    let primes: Vec<Value> = witnesses
        .iter()
        .map(|w| {
            json!({
                "prime": report::prime(&w.prime),
                "height": w.prime.height(),
                "witness": report::monomial(&w.witness, ideal.ring()),
            })
        })
        .collect();
    let corr = ass_correspondence_report(ideal)?;
    let absorbed: Vec<Value> = corr
        .saturation
        .iter()
        .flat_map(|entry| {
            entry
                .lowered
                .iter()
                .filter_map(move |(lower, status)| match status {
                    LoweredStatus::Associated => None,
                    LoweredStatus::Absorbed(by) => Some(json!({
                        "from": report::prime(&entry.prime),
                        "lowered": report::prime(lower),
                        "contains": report::prime(by),
                    })),
                    LoweredStatus::NotOverIdeal => Some(json!({
                        "from": report::prime(&entry.prime),
                        "lowered": report::prime(lower),
                        "contains": Value::Null,
                    })),
                })
        })
        .collect();
    let strata: serde_json::Map<String, Value> = corr
        .strata
        .iter()
        .map(|(h, (b, p))| (h.to_string(), json!({ "base": b, "polar": p })))
        .collect();
    let results = json!({
        "associated_primes": primes,
        "minimal_primes": report::primes(&minimal_primes(ideal)?),
        "polar_associated_primes": report::primes(&corr.polar_ass),
        "projection_matches": corr.projection_matches,
        "saturation_holds": corr.saturation_holds,
        "strict_saturation": corr.strict_saturation,
        "lowered_not_associated": absorbed,
        "strata": strata,
    });
    let verdict = if corr.passes() { "pass" } else { "fail" };
    Ok(Outcome::new(inputs(ideal), results).verdict(verdict))
}

pub fn height(ideal: &MonomialIdeal) -> Result<Outcome> {
    let h = ideal_height(ideal)?;
    let smallest = minimal_primes(ideal)?
        .into_iter()
        .find(|p| p.height() == h)
        .expect("some minimal prime has the height");
    let results = json!({ "height": h });
    Ok(Outcome::new(inputs(ideal), results).witness(report::prime(&smallest)))
}

pub fn beta(ideal: &MonomialIdeal) -> Result<Outcome> {
    let results = json!({ "beta": beta_coprime(ideal)? });
    let witness = report::monomials(&coprime_witness(ideal.gens()), ideal.ring());
    Ok(Outcome::new(inputs(ideal), results).witness(witness))
}

fn required_prime(ideal: &MonomialIdeal, prime: Option<&str>) -> Result<MonomialPrime> {
    let Some(text) = prime else {
        bail!("--prime is required");
    };
    Ok(parse_prime(text, ideal.ring())?)
}

pub fn localize(ideal: &MonomialIdeal, prime: Option<&str>) -> Result<Outcome> {
    let p = required_prime(ideal, prime)?;
    let mut ins = inputs(ideal);
    ins["prime"] = report::prime(&p);
    let results = match ideal.localize(&p) {
        Ok(local) => json!({ "localized": report::ideal(&local), "unit": false }),
        Err(monopol::Error::UnitIdeal) => json!({ "localized": Value::Null, "unit": true }),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome::new(ins, results))
}

pub fn dual(ideal: &MonomialIdeal) -> Result<Outcome> {
    let sq = SquareFreeIdeal::new(ideal.clone()).context("dual expects a square-free ideal")?;
    let complex = facet_complex(&sq);
    let results = match alexander_dual_ideal(&sq) {
        Ok(d) => json!({
            "dual": report::ideal(d.ideal()),
            "nonface_complex_of_dual": report::complex(&complex.alexander_dual()),
        }),
        Err(monopol::Error::ZeroIdeal) => json!({ "dual": Value::Null }),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn complex_info(ideal: &MonomialIdeal) -> Result<Outcome> {
    let (c, source) = complex_of(ideal)?;
    let nonfaces = match c.nonface_ideal() {
        Ok(n) => report::ideal(n.ideal()),
        Err(_) => Value::Null,
    };
    let components: Vec<Value> = c
        .components()
        .iter()
        .map(|comp| {
            let facets: Vec<_> = comp.iter().map(|&i| c.facets()[i].clone()).collect();
            report::faces(&facets, c.vertices())
        })
        .collect();
    let forest = c.is_forest()?;
    let results = json!({
        "complex_of": source,
        "complex": report::complex(&c),
        "alpha": c.alpha(),
        "beta": c.beta(),
        "unmixed": c.is_unmixed(),
        "connected": c.is_connected(),
        "components": components,
        "nonface_ideal": nonfaces,
        "forest": forest,
        "tree": forest && c.is_connected(),
        "leaves": report::faces(&c.leaves(), c.vertices()),
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn is_tree(ideal: &MonomialIdeal) -> Result<Outcome> {
    let (c, source) = complex_of(ideal)?;
    let witness = leafless_witness(&c)?;
    let forest = witness.is_null();
    let results = json!({
        "complex_of": source,
        "complex": report::complex(&c),
        "forest": forest,
        "connected": c.is_connected(),
        "tree": forest && c.is_connected(),
    });
    Ok(Outcome::new(inputs(ideal), results).witness(witness))
}

pub fn leaves(ideal: &MonomialIdeal) -> Result<Outcome> {
    let (c, source) = complex_of(ideal)?;
    let ring = c.vertices();
    let leaves = c
        .leaves()
        .iter()
        .map(|leaf| {
            Ok(json!({
                "leaf": report::face(leaf, ring),
                "joints": report::faces(&c.joints(leaf)?, ring),
                "free_vertices": report::face(&c.free_vertices(leaf)?, ring),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let results = json!({
        "complex_of": source,
        "complex": report::complex(&c),
        "leaves": leaves,
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn covers(ideal: &MonomialIdeal) -> Result<Outcome> {
    let (c, source) = complex_of(ideal)?;
    let results = json!({
        "complex_of": source,
        "complex": report::complex(&c),
        "minimal_vertex_covers": report::faces(&c.minimal_vertex_covers(), c.vertices()),
        "alpha": c.alpha(),
        "unmixed": c.is_unmixed(),
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn filtration(ideal: &MonomialIdeal) -> Result<Outcome> {
    let f = scm_filtration(ideal)?;
    let strata: serde_json::Map<String, Value> = f
        .strata
        .strata
        .iter()
        .map(|(h, comps)| {
            let comps: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
            (h.to_string(), json!(comps))
        })
        .collect();
    let chain: Vec<Value> = f
        .chain
        .iter()
        .map(|t| json!({ "bound": t.bound, "ideal": report::ideal(&t.ideal) }))
        .collect();
    let results = json!({
        "h": f.strata.h(),
        "s": f.strata.s(),
        "strata": strata,
        "chain": chain,
    });
    Ok(Outcome::new(inputs(ideal), results))
}

pub fn check_konig(ideal: &MonomialIdeal) -> Result<Outcome> {
    let r = konig_check(ideal)?;
    let results = json!({
        "height": r.height,
        "beta": r.beta,
        "polarization_is_tree": r.is_tree,
    });
    let witness = report::monomials(&r.coprime_witness, ideal.ring());
    Ok(Outcome::new(inputs(ideal), results)
        .verdict(r.verdict.as_str())
        .witness(witness))
}

pub fn check_joint_removal(ideal: &MonomialIdeal) -> Result<Outcome> {
    let r = joint_removal_check(ideal)?;
    let ring = ideal.ring();
    let drops: Vec<Value> = r
        .drops
        .iter()
        .map(|d| {
            json!({
                "generator": report::monomial(&d.generator, ring),
                "leaves": report::monomials(&d.leaves, ring),
                "height_after": d.height_after,
            })
        })
        .collect();
    let combinations: Vec<Value> = r
        .combinations
        .iter()
        .map(|(gens, h)| json!({ "dropped": report::monomials(gens, ring), "height_after": h }))
        .collect();
    let witness = match r.verdict {
        Verdict::Fail => Value::Array(
            r.drops
                .iter()
                .filter(|d| d.height_after != r.height)
                .map(|d| report::monomial(&d.generator, ring))
                .collect(),
        ),
        _ => Value::Null,
    };
    let results = json!({
        "height": r.height,
        "joint_drops": drops,
        "combinations": combinations,
    });
    Ok(Outcome::new(inputs(ideal), results)
        .verdict(r.verdict.as_str())
        .witness(witness))
}

/// Every prime generated by variables that contains the ideal.
pub fn primes_over(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let n = ideal.ring().len();
    if n > 16 {
        bail!("too many variables ({n}) to try every prime; pass --prime");
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let p = MonomialPrime::new(ideal.ring(), (0..n).filter(|v| mask >> v & 1 == 1))?;
        if p.contains_ideal(ideal) {
            out.push(p);
        }
    }
    Ok(out)
}

pub fn check_localization(ideal: &MonomialIdeal, prime: Option<&str>) -> Result<Outcome> {
    let primes = match prime {
        Some(_) => vec![required_prime(ideal, prime)?],
        None => primes_over(ideal)?,
    };
    let mut checks = Vec::new();
    let mut verdict = Verdict::Inapplicable;
    let mut witness = Value::Null;
    for p in &primes {
        let r = localization_forest_check(ideal, p)?;
        if r.verdict == Verdict::Fail && witness.is_null() {
            witness = json!({
                "prime": report::prime(p),
                "leafless": r.witness.as_ref().map(|w| report::monomials(w, r.polar_ring.ring())),
            });
        }
        verdict = match (verdict, r.verdict) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Pass, _) | (_, Verdict::Pass) => Verdict::Pass,
            _ => Verdict::Inapplicable,
        };
        checks.push(json!({
            "prime": report::prime(p),
            "localized": report::ideal(&r.localized),
            "polarized": report::ideal(r.polarized.ideal()),
            "forest": r.is_forest,
            "ambient_localized": report::ideal(&r.ambient_localized),
            "commutes": r.commutes,
        }));
    }
    let (complex, _, _) = polar_complex(ideal)?;
    let mut ins = inputs(ideal);
    if let Some(p) = primes.first().filter(|_| prime.is_some()) {
        ins["prime"] = report::prime(p);
    }
    let results = json!({
        "polarization_is_tree": complex.is_tree()?,
        "localizations": checks,
    });
    Ok(Outcome::new(ins, results)
        .verdict(verdict.as_str())
        .witness(witness))
}

pub fn cm_verdict(ideal: &MonomialIdeal) -> Result<Outcome> {
    let r = cm_tree_criterion(ideal)?;
    let results = json!({
        "polarization_is_tree": r.is_tree,
        "height": r.height,
        "associated_heights": r.ass_heights,
        "unmixed": r.unmixed,
    });
    Ok(Outcome::new(inputs(ideal), results).verdict(r.verdict.as_str()))
}

pub fn scm_verdict(ideal: &MonomialIdeal) -> Result<Outcome> {
    let r = sequentially_cm_verdict(ideal)?;
    let (verdict, extension) = match r.verdict {
        ScmVerdict::SequentiallyCm { forest_extension } => {
            ("sequentially-cohen-macaulay", forest_extension)
        }
        ScmVerdict::Unknown => ("unknown", false),
    };
    let (_, ring) = polarize_ideal(ideal)?;
    let witness = r
        .witness
        .as_ref()
        .map_or(Value::Null, |w| report::monomials(w, ring.ring()));
    let results = json!({
        "polarization_is_forest": r.is_forest,
        "polarization_is_connected": r.is_connected,
        "forest_extension": extension,
    });
    Ok(Outcome::new(inputs(ideal), results)
        .verdict(verdict)
        .witness(witness))
}

pub fn check_appendix(ideal: &MonomialIdeal) -> Result<Outcome> {
    let r = verify_filtration_ass_strata(ideal)?;
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "index": s.index,
                "bound": s.bound,
                "term": report::ideal(&s.term),
                "ass_term": report::primes(&s.ass_term),
                "expected_ass_term": report::primes(&s.expected_ass_term),
                "decomposition_matches": s.decomposition_matches,
                "quotient_ass": report::primes(s.quotient_ass.iter().map(|w| &w.prime)),
                "expected_quotient_ass": report::primes(&s.expected_quotient_ass),
                "passes": s.passes(),
            })
        })
        .collect();
    // asserted only under the forest hypothesis
    let verdict = match (r.passes(), r.polarization_is_forest) {
        (true, _) => Verdict::Pass,
        (false, true) => Verdict::Fail,
        (false, false) => Verdict::Inapplicable,
    };
    let witness = r
        .steps
        .iter()
        .find(|s| !s.passes())
        .filter(|_| verdict == Verdict::Fail)
        .map_or(Value::Null, |s| json!({ "index": s.index }));
    let results = json!({
        "polarization_is_forest": r.polarization_is_forest,
        "strictly_ascending": r.strictly_ascending,
        "steps": steps,
    });
    Ok(Outcome::new(inputs(ideal), results)
        .verdict(verdict.as_str())
        .witness(witness))
}
