//! End-to-end hunts for a monochromatic family member in a given colouring.
//!
//! Both strategies start the same way: a majority descent until one colour
//! has `k` hubs. The colouring is then normalised so that colour is blue
//! (swapping red and blue if needed, and swapping back on the certificate),
//! and a fraction descent tries to collect `k` red hubs too. What happens to
//! the survivors afterwards differs per family. Every success is assembled
//! into an [`Embedding`] of the exact target graph and re-validated before
//! being returned.

use serde::Serialize;
use serde_json::{json, Value};

use super::auxiliary::{build_aux_digraph, digraph_colouring, greedy_blue_clique_across, pigeonhole_extract};
use super::cliques::{clique_packing, greedy_sparse_clique, PackingOptions};
use super::descent::{fraction_descent, majority_descent};
use crate::bitset::VertexSet;
use crate::colouring::{Colour, TwoColouring};
use crate::constructions::{ConstructionParams, Family};
use crate::embedding::{validate_embedding, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ramsey::find_mono_copy_within;
use crate::ratio::Ratio;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: &'static str,
    pub params: Value,
    pub sizes: Value,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyOutcome {
    Found(Embedding),
    Exhausted { stage: &'static str, diagnostics: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyReport {
    pub params: ConstructionParams,
    pub outcome: StrategyOutcome,
    pub stages: Vec<StageRecord>,
}

impl StrategyReport {
    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.outcome {
            StrategyOutcome::Found(e) => Some(e),
            StrategyOutcome::Exhausted { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.embedding().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrategyOptions {
    pub epsilon: Ratio,
    pub packing: PackingOptions,
}

impl StrategyOptions {
    pub fn case1() -> Self {
        StrategyOptions { epsilon: Ratio::new(1, 40).unwrap(), packing: PackingOptions::default() }
    }

    pub fn case2() -> Self {
        StrategyOptions { epsilon: Ratio::new(1, 8).unwrap(), packing: PackingOptions::default() }
    }
}

struct Run<'a> {
    original: &'a TwoColouring,
    /// The colouring with the complete hub set blue.
    c: TwoColouring,
    swapped: bool,
    params: ConstructionParams,
    target: Graph,
    stages: Vec<StageRecord>,
}

impl<'a> Run<'a> {
    fn record(&mut self, stage: &'static str, params: Value, sizes: Value, outcome: impl Into<String>) {
        self.stages.push(StageRecord { stage, params, sizes, outcome: outcome.into() });
    }

    fn exhausted(self, stage: &'static str, diagnostics: impl Into<String>) -> StrategyReport {
        StrategyReport {
            params: self.params,
            outcome: StrategyOutcome::Exhausted { stage, diagnostics: diagnostics.into() },
            stages: self.stages,
        }
    }

    /// Maps the target onto `hubs` plus a `colour` copy of the family core
    /// inside `u` (`core_map[i]` hosts core vertex `i`), with pendants taken
    /// from the lowest unused vertices of `u`. Hubs must be `colour`-complete
    /// to `u` and, for the clique family, a `colour`-clique.
    fn assemble(
        mut self,
        hubs: &[usize],
        colour: Colour,
        core_map: &[usize],
        u: &VertexSet,
    ) -> StrategyReport {
        let p = &self.params;
        let (n, t, k) = (p.n, p.t, p.k);
        let mut map = Vec::with_capacity(n);
        map.extend_from_slice(&hubs[..k]);
        match p.family {
            Family::Biclique => {
                map.extend_from_slice(&core_map[..t - k]);
                map.extend_from_slice(&core_map[t..2 * t]);
            }
            Family::Clique => map.extend_from_slice(&core_map[..t - k]),
        }
        let mut free = u.clone();
        for &v in &map {
            free.remove(v);
        }
        let need = p.pendant_count();
        let available = free.len();
        map.extend(free.iter().take(need));
        if map.len() < n {
            self.record(
                "assembly",
                json!({ "colour": colour }),
                json!({ "pendants_needed": need, "pendants_available": available }),
                "short",
            );
            return self.exhausted("assembly", format!("need {need} pendants, {available} available"));
        }
        let colour = if self.swapped { colour.other() } else { colour };
        let e = Embedding::new(self.target.clone(), self.original.order(), map, colour);
        let ok = validate_embedding(&e, self.original) == Ok(true);
        assert!(ok, "assembled embedding does not validate; this is a bug");
        self.record("assembly", json!({ "colour": colour }), json!({ "vertices": n }), "found");
        StrategyReport { params: self.params, outcome: StrategyOutcome::Found(e), stages: self.stages }
    }
}

/// A run past the majority descent: the hub lists by colour and the remaining pool.
type Started<'a> = (Run<'a>, Vec<usize>, Vec<usize>, VertexSet);

fn start<'a>(
    c: &'a TwoColouring,
    params: ConstructionParams,
    opts: &StrategyOptions,
) -> std::result::Result<Started<'a>, Box<StrategyReport>> {
    let k = params.k;
    let target = params.build();
    let st = majority_descent(c, k);
    let swapped = st.red_hubs.len() == k;
    let mut run = Run {
        original: c,
        c: if swapped { c.swapped() } else { c.clone() },
        swapped,
        params,
        target,
        stages: Vec::new(),
    };
    let (mut red, blue) = if swapped { (st.blue_hubs, st.red_hubs) } else { (st.red_hubs, st.blue_hubs) };
    run.record(
        "majority_descent",
        json!({ "k": k, "N": c.order() }),
        json!({ "steps": st.trace.len(), "red_hubs": red.len(), "blue_hubs": blue.len(), "survivors": st.survivors.len(), "swapped": swapped }),
        if blue.len() == k { "complete" } else { "ran dry" },
    );
    if blue.len() < k {
        return Err(Box::new(
            run.exhausted("majority_descent", "survivors ran out before k hubs of one colour"),
        ));
    }
    let fd = fraction_descent(&run.c, &st.survivors, k - red.len(), opts.epsilon);
    red.extend(&fd.added);
    run.record(
        "fraction_descent",
        json!({ "epsilon": opts.epsilon, "k_needed": k - (red.len() - fd.added.len()) }),
        json!({ "added": fd.added.len(), "red_hubs": red.len(), "survivors": fd.survivors.len() }),
        if red.len() == k { "complete" } else { "stalled" },
    );
    Ok((run, red, blue, fd.survivors))
}

fn check(
    n: usize,
    t: usize,
    k: usize,
    family: Family,
    c: &TwoColouring,
    opts: &StrategyOptions,
) -> Result<ConstructionParams> {
    if !opts.epsilon.is_proper() {
        return Err(Error::param(format!("epsilon must lie in (0, 1), got {}", opts.epsilon)));
    }
    if family == Family::Clique && !opts.epsilon.at_most_half() {
        return Err(Error::param(format!("epsilon must lie in (0, 1/2], got {}", opts.epsilon)));
    }
    if c.order() == 0 {
        return Err(Error::param("empty colouring"));
    }
    ConstructionParams::new(n, t, k, family)
}

/// Biclique-family hunt. After the descents, either both hub sets are
/// complete and any monochromatic `K_{t,t}` among the survivors finishes the
/// copy, or the fraction descent stalled and a blue `K_{t,t}` among the
/// survivors (completed with the blue hubs) is what remains to look for.
pub fn case1_strategy(
    c: &TwoColouring,
    n: usize,
    t: usize,
    k: usize,
    opts: &StrategyOptions,
) -> Result<StrategyReport> {
    let params = check(n, t, k, Family::Biclique, c, opts)?;
    let core = Graph::complete_bipartite(t, t);
    let (mut run, red, blue, u) = match start(c, params, opts) {
        Ok(s) => s,
        Err(report) => return Ok(*report),
    };
    let colours: &[Colour] = if red.len() == k { &[Colour::Red, Colour::Blue] } else { &[Colour::Blue] };
    for &colour in colours {
        let found = find_mono_copy_within(&run.c, &core, colour, &u);
        run.record(
            "biclique_search",
            json!({ "colour": colour, "t": t }),
            json!({ "survivors": u.len() }),
            if found.is_some() { "found" } else { "none" },
        );
        if let Some(e) = found {
            let hubs = if colour == Colour::Red { red } else { blue };
            return Ok(run.assemble(&hubs, colour, &e.map, &u));
        }
    }
    let stage = if red.len() == k { "biclique_search" } else { "dichotomy" };
    Ok(run.exhausted(stage, format!("no suitable K_{{{t},{t}}} among {} survivors", u.len())))
}

/// Clique-family hunt. With both hub sets complete a monochromatic `K_t`
/// among the survivors finishes the copy. Otherwise the survivors have low
/// red degree: a blue `K_t` from the sparse-red greedy is used directly if it
/// is big enough, else red `K_{kt}`'s are packed, the auxiliary digraph is
/// built on them, a high in-degree clique is tried for a red copy via
/// pigeonhole, and finally one colour class of the digraph colouring with at
/// least `t` cliques yields a blue `K_t` one vertex per clique.
pub fn case2_strategy(
    c: &TwoColouring,
    n: usize,
    t: usize,
    k: usize,
    opts: &StrategyOptions,
) -> Result<StrategyReport> {
    let params = check(n, t, k, Family::Clique, c, opts)?;
    let core = Graph::complete(t);
    let (mut run, red, blue, u) = match start(c, params, opts) {
        Ok(s) => s,
        Err(report) => return Ok(*report),
    };

    if red.len() == k {
        for colour in [Colour::Red, Colour::Blue] {
            let found = find_mono_copy_within(&run.c, &core, colour, &u);
            run.record(
                "clique_search",
                json!({ "colour": colour, "t": t }),
                json!({ "survivors": u.len() }),
                if found.is_some() { "found" } else { "none" },
            );
            if let Some(e) = found {
                let hubs = if colour == Colour::Red { red } else { blue };
                return Ok(run.assemble(&hubs, colour, &e.map, &u));
            }
        }
        return Ok(
            run.exhausted("clique_search", format!("no monochromatic K_{t} among {} survivors", u.len()))
        );
    }

    let greedy = greedy_sparse_clique(&run.c, &u, Colour::Red);
    run.record(
        "sparse_clique",
        json!({ "sparse": Colour::Red }),
        json!({ "survivors": u.len(), "blue_clique": greedy.map.len() }),
        if greedy.map.len() >= t { "blue K_t" } else { "too small" },
    );
    if greedy.map.len() >= t {
        return Ok(run.assemble(&blue, Colour::Blue, &greedy.map[..t], &u));
    }

    let size = k * t;
    let count = u.len() / size;
    if count == 0 {
        return Ok(run.exhausted("packing", format!("{} survivors cannot hold one K_{size}", u.len())));
    }
    let packing = match clique_packing(&run.c, &u, size, count, Colour::Red, opts.packing) {
        Ok(p) => p,
        Err(f) => f.partial,
    };
    run.record(
        "packing",
        json!({ "size_each": size, "target_count": count, "colour": Colour::Red }),
        json!({ "packed": packing.cliques.len() }),
        if packing.cliques.len() == count { "complete" } else { "partial" },
    );
    if packing.cliques.is_empty() {
        return Ok(run.exhausted("packing", format!("no red K_{size} among {} survivors", u.len())));
    }

    let d = build_aux_digraph(&run.c, &packing, k);
    let in_degrees = d.in_degrees();
    let threshold = (k as u128 * t as u128).checked_pow(k as u32).and_then(|x| x.checked_mul(n as u128));
    let heavy: Vec<usize> =
        (0..d.order()).filter(|&i| threshold.is_some_and(|th| in_degrees[i] as u128 >= th)).collect();
    run.record(
        "aux_digraph",
        json!({ "k": k, "in_degree_threshold": threshold.map(|x| x.to_string()) }),
        json!({ "vertices": d.order(), "arcs": d.arc_count(), "max_in_degree": d.max_in_degree(), "heavy": heavy.len() }),
        if heavy.is_empty() { "no heavy clique" } else { "heavy cliques" },
    );
    for &i in &heavy {
        let q = &packing.cliques[i];
        if let Some((hub, common)) = pigeonhole_extract(&run.c, q, k, n) {
            run.record("pigeonhole", json!({ "clique": i }), json!({ "common": common.len() }), "found");
            // Core from the rest of Q_i, pendants from the common red neighbourhood.
            let rest: Vec<usize> = q.iter().copied().filter(|v| !hub.contains(v)).collect();
            let mut host = common;
            for &v in &rest {
                host.insert(v);
            }
            return Ok(run.assemble(&hub, Colour::Red, &rest, &host));
        }
        run.record("pigeonhole", json!({ "clique": i }), json!({}), "none");
    }

    let col = digraph_colouring(&d);
    let classes = col.classes();
    let (best, members) = classes
        .iter()
        .enumerate()
        .max_by_key(|(i, cls)| (cls.len(), std::cmp::Reverse(*i)))
        .map(|(i, cls)| (i, cls.clone()))
        .expect("nonempty digraph");
    run.record(
        "digraph_colouring",
        json!({ "max_in_degree": col.max_in_degree }),
        json!({ "colours": col.colour_count, "largest_class": members.len(), "class": best }),
        if members.len() >= t { "class large enough" } else { "class too small" },
    );
    if members.len() < t {
        return Ok(run.exhausted(
            "digraph_colouring",
            format!("largest colour class has {} < {t} cliques", members.len()),
        ));
    }
    let chosen: Vec<Vec<usize>> = members[..t].iter().map(|&i| packing.cliques[i].clone()).collect();
    match greedy_blue_clique_across(&run.c, &chosen) {
        Ok(e) => {
            run.record("greedy_across", json!({ "t": t }), json!({ "picked": e.map.len() }), "found");
            Ok(run.assemble(&blue, Colour::Blue, &e.map, &u))
        }
        Err(i) => {
            run.record("greedy_across", json!({ "t": t }), json!({ "stuck_at": i }), "stuck");
            Ok(run
                .exhausted("greedy_across", format!("no vertex of clique {i} is blue to the earlier picks")))
        }
    }
}
