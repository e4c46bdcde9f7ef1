//! The two k-connected families and the choice of their size parameter `t`.
//!
//! Biclique family: `K_{t,t}` on parts `A = 0..t`, `B = t..2t`, plus pendants
//! `2t..n` each joined to the hub `0..k` inside `A`. Clique family: `K_t` on
//! `0..t` plus pendants `t..n` joined to the hub `0..k`. In both, the hub is
//! the unique minimum vertex cut once pendants exist.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ramsey::{arrows_with, SearchLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Built around `K_{t,t}`.
    Biclique,
    /// Built around `K_t`.
    Clique,
}

impl Family {
    /// The dense core whose Ramsey number drives the family's.
    pub fn core(self, t: usize) -> Graph {
        match self {
            Family::Biclique => Graph::complete_bipartite(t, t),
            Family::Clique => Graph::complete(t),
        }
    }

    fn core_name(self) -> &'static str {
        match self {
            Family::Biclique => "K_{t,t}",
            Family::Clique => "K_t",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub family: Family,
    /// Always `0..k`.
    pub hub: Vec<usize>,
}

impl ConstructionParams {
    pub fn new(n: usize, t: usize, k: usize, family: Family) -> Result<Self> {
        if k < 2 {
            return Err(Error::param(format!("k >= 2 violated (k = {k})")));
        }
        if t < k {
            return Err(Error::param(format!("t >= k violated (k = {k}, t = {t})")));
        }
        if family == Family::Clique && n == t && k + 1 > t {
            // K_k alone is only (k-1)-connected.
            return Err(Error::param(format!(
                "k + 1 <= t violated for a pendant-free clique (k = {k}, t = {t})"
            )));
        }
        match family {
            Family::Biclique if n < 2 * t => {
                return Err(Error::param(format!("n >= 2t violated (n = {n}, t = {t})")))
            }
            Family::Clique if n < t => {
                return Err(Error::param(format!("n >= t violated (n = {n}, t = {t})")))
            }
            _ => {}
        }
        Ok(ConstructionParams { n, t, k, family, hub: (0..k).collect() })
    }

    /// First pendant vertex.
    pub fn pendant_start(&self) -> usize {
        match self.family {
            Family::Biclique => 2 * self.t,
            Family::Clique => self.t,
        }
    }

    pub fn pendant_count(&self) -> usize {
        self.n - self.pendant_start()
    }

    pub fn expected_edge_count(&self) -> usize {
        let (n, t, k) = (self.n, self.t, self.k);
        match self.family {
            Family::Biclique => t * t + k * (n - 2 * t),
            Family::Clique => t * (t - 1) / 2 + k * (n - t),
        }
    }

    pub fn build(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        match self.family {
            Family::Biclique => {
                for a in 0..self.t {
                    for b in self.t..2 * self.t {
                        g.add_edge(a, b);
                    }
                }
            }
            Family::Clique => {
                for u in 0..self.t {
                    for v in u + 1..self.t {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        for &h in &self.hub {
            for p in self.pendant_start()..self.n {
                g.add_edge(h, p);
            }
        }
        g
    }
}

pub fn construct_case1(p: &ConstructionParams) -> Result<Graph> {
    if p.family != Family::Biclique {
        return Err(Error::param("construct_case1 needs the biclique family"));
    }
    let p = ConstructionParams::new(p.n, p.t, p.k, p.family)?;
    Ok(p.build())
}

pub fn construct_case2(p: &ConstructionParams) -> Result<Graph> {
    if p.family != Family::Clique {
        return Err(Error::param("construct_case2 needs the clique family"));
    }
    let p = ConstructionParams::new(p.n, p.t, p.k, p.family)?;
    Ok(p.build())
}

/// How `r(K_t)` / `r(K_{t,t})` is estimated when choosing `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum BoundProxy {
    /// Use `2^{t/2}`, a lower bound for both `r(K_t)` and `r(K_{t,t})`. The
    /// selected `t` certifies `r > f` but may exceed the true minimum.
    ExpLower,
    /// Decide `r > f` exactly by exhaustive arrowing, for `f <= cap`.
    Exact { cap: usize },
}

/// Smallest `t` with `2^{t/2} > f`, i.e. `2^t > f^2`.
fn exp_lower_t(fn_value: u64) -> usize {
    let f2 = (fn_value as u128) * (fn_value as u128);
    (1..128).find(|&t| (1u128 << t) > f2).unwrap_or(128)
}

/// Smallest `t` whose core Ramsey number (under `proxy`) exceeds `fn_value`.
pub fn select_t(fn_value: u64, family: Family, proxy: BoundProxy) -> Result<usize> {
    if fn_value == 0 {
        return Err(Error::param("f(n) must be at least 1"));
    }
    match proxy {
        BoundProxy::ExpLower => Ok(exp_lower_t(fn_value)),
        BoundProxy::Exact { cap } => {
            let hi = exp_lower_t(fn_value);
            if fn_value > cap as u64 {
                return Err(Error::capacity(
                    format!("exact selection needs arrowing on K_{fn_value}, cap is {cap}"),
                    Some(format!("minimal t for {} lies in [1, {hi}]", family.core_name())),
                ));
            }
            let n = fn_value as usize;
            let limits = SearchLimits { max_order: cap };
            for t in 1.. {
                let core = family.core(t);
                // r(core) > n  <=>  K_n does not arrow the core.
                if !arrows_with(n, &core, &core, &limits)?.holds {
                    return Ok(t);
                }
            }
            unreachable!("a core larger than K_n never arrows")
        }
    }
}

/// `f <= 2^{n/8}`, exactly.
pub fn in_biclique_range(n: usize, fn_value: u64) -> bool {
    BigUint::from(fn_value).pow(8) <= (BigUint::from(1u8) << n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseChoice {
    /// Biclique family when `f <= 2^{n/8}`, clique family otherwise.
    Auto,
    Biclique,
    Clique,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    #[serde(skip)]
    pub graph: Graph,
    pub params: ConstructionParams,
    pub proxy: BoundProxy,
    /// `t` as returned by the proxy, before raising it to `k + 1`.
    pub proxy_t: usize,
}

/// Builds the family member for `(n, k, f)`. The proxy's `t` is raised to
/// `k + 1` if needed, which keeps `r(core) > f`.
pub fn build_family_member(
    n: usize,
    k: usize,
    fn_value: u64,
    proxy: BoundProxy,
    choice: CaseChoice,
) -> Result<FamilyMember> {
    if k < 2 {
        return Err(Error::param(format!("k >= 2 violated (k = {k})")));
    }
    if n as u64 > fn_value {
        return Err(Error::param(format!("n <= f(n) violated (n = {n}, f = {fn_value})")));
    }
    let family = match choice {
        CaseChoice::Auto if in_biclique_range(n, fn_value) => Family::Biclique,
        CaseChoice::Auto => Family::Clique,
        CaseChoice::Biclique => Family::Biclique,
        CaseChoice::Clique => Family::Clique,
    };
    let proxy_t = select_t(fn_value, family, proxy)?;
    let t = proxy_t.max(k + 1);
    let params = ConstructionParams::new(n, t, k, family).map_err(|e| match e {
        Error::Param(msg) => Error::capacity(
            format!("selected t = {t} does not fit n = {n}: {msg}"),
            Some(format!("proxy t = {proxy_t}, k + 1 = {}", k + 1)),
        ),
        other => other,
    })?;
    Ok(FamilyMember { graph: params.build(), params, proxy, proxy_t })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case1_small() {
        let p = ConstructionParams::new(10, 2, 2, Family::Biclique).unwrap();
        let g = construct_case1(&p).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 16));
        assert!((4..10).all(|v| g.degree(v) == 2));

        let g = construct_case1(&ConstructionParams::new(4, 2, 2, Family::Biclique).unwrap()).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 2));

        let p = ConstructionParams::new(12, 3, 2, Family::Biclique).unwrap();
        let g = construct_case1(&p).unwrap();
        assert!(g.contains_labelled(&Graph::complete_bipartite(3, 3)));
        assert_eq!(g.degree(2), 3);
    }

    #[test]
    fn case2_small() {
        let g = construct_case2(&ConstructionParams::new(10, 3, 2, Family::Clique).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 17);
        let g = construct_case2(&ConstructionParams::new(3, 3, 2, Family::Clique).unwrap()).unwrap();
        assert_eq!(g, Graph::complete(3));
        let g = construct_case2(&ConstructionParams::new(7, 4, 3, Family::Clique).unwrap()).unwrap();
        assert!((4..7).all(|v| g.degree(v) == 3));
        assert_eq!(g.degree(3), 3);
        assert!((0..3).all(|v| g.degree(v) == 6));
    }

    #[test]
    fn param_errors_name_the_inequality() {
        let cases = [
            (ConstructionParams::new(10, 3, 1, Family::Clique), "k >= 2"),
            (ConstructionParams::new(10, 2, 3, Family::Clique), "t >= k"),
            (ConstructionParams::new(3, 3, 3, Family::Clique), "k + 1 <= t"),
            (ConstructionParams::new(5, 3, 2, Family::Biclique), "n >= 2t"),
            (ConstructionParams::new(2, 3, 2, Family::Clique), "n >= t"),
        ];
        for (res, needle) in cases {
            match res {
                Err(Error::Param(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("{other:?}"),
            }
        }
        let p = ConstructionParams {
            family: Family::Clique,
            ..ConstructionParams::new(10, 3, 2, Family::Biclique).unwrap()
        };
        assert!(construct_case1(&p).is_err());
    }

    #[test]
    fn exp_lower_selection() {
        assert_eq!(select_t(100, Family::Clique, BoundProxy::ExpLower).unwrap(), 14);
        assert_eq!(select_t(1, Family::Clique, BoundProxy::ExpLower).unwrap(), 1);
        assert_eq!(select_t(u64::MAX, Family::Clique, BoundProxy::ExpLower).unwrap(), 128);
    }

    #[test]
    fn exact_selection() {
        let exact = BoundProxy::Exact { cap: 8 };
        assert_eq!(select_t(5, Family::Clique, exact).unwrap(), 3);
        assert_eq!(select_t(5, Family::Biclique, exact).unwrap(), 2);
        assert!(matches!(select_t(9, Family::Clique, exact), Err(Error::Capacity { .. })));
    }

    #[test]
    fn biclique_range_is_exact() {
        assert!(in_biclique_range(64, 100));
        assert!(!in_biclique_range(5, 5));
        assert!(in_biclique_range(8, 2));
        assert!(!in_biclique_range(8, 3));
        assert!(in_biclique_range(16, 4));
    }

    #[test]
    fn family_members() {
        let m = build_family_member(64, 2, 100, BoundProxy::ExpLower, CaseChoice::Auto).unwrap();
        assert_eq!((m.params.family, m.params.t, m.graph.order()), (Family::Biclique, 14, 64));

        let m = build_family_member(5, 2, 5, BoundProxy::Exact { cap: 8 }, CaseChoice::Auto).unwrap();
        assert_eq!((m.params.family, m.params.t), (Family::Clique, 3));
        assert_eq!(m.graph.edge_count(), 3 + 2 * 2);

        let m = build_family_member(4, 3, 4, BoundProxy::Exact { cap: 8 }, CaseChoice::Auto).unwrap();
        assert_eq!((m.proxy_t, m.params.t), (3, 4));
        assert_eq!(m.graph, Graph::complete(4));

        assert!(matches!(
            build_family_member(10, 2, 5, BoundProxy::ExpLower, CaseChoice::Auto),
            Err(Error::Param(_))
        ));
        // t = 14 needs n >= 28 in the biclique family.
        assert!(matches!(
            build_family_member(20, 2, 100, BoundProxy::ExpLower, CaseChoice::Biclique),
            Err(Error::Capacity { .. })
        ));
    }
}
