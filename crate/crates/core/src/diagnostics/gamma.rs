use std::collections::VecDeque;

use petgraph::graph::{NodeIndex, UnGraph};
use serde::Serialize;

use crate::algebra::Field;
use crate::centraliser::annihilator_dim;
use crate::domain::{map_domains, run_over, Domain, FieldTask};
use crate::error::{Error, Result};
use crate::modules::{coset_space_module, GSetModule};
use crate::perm::{Perm, SymGroup};

/// `Γ(G, {1, t})` for `G = Sym(m)`: vertices are the group elements, with an
/// edge `{x y^-1, x t y^-1}` for every pair `(x, y)`. Equivalently `g` is
/// joined to `c g` for each conjugate `c` of `t`.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    pub m: usize,
    pub t: Perm,
    pub vertices: Vec<Perm>,
    pub graph: UnGraph<(), ()>,
}

impl GammaGraph {
    pub fn new(m: usize, t: &Perm) -> Result<Self> {
        if t.degree() != m {
            return Err(Error::DegreeMismatch(t.degree(), m));
        }
        if t.is_identity() || !t.compose(t).is_identity() {
            return Err(Error::NotAnInvolution(t.to_string()));
        }
        let group = SymGroup::new(m);
        let mut class: Vec<Perm> = group
            .elements()
            .iter()
            .map(|x| x.compose(t).compose(&x.inverse()))
            .collect();
        class.sort();
        class.dedup();
        let mut graph = UnGraph::with_capacity(group.order(), group.order() * class.len() / 2);
        for _ in 0..group.order() {
            graph.add_node(());
        }
        for (i, g) in group.elements().iter().enumerate() {
            for c in &class {
                let j = group.index_of(&c.compose(g));
                if i < j {
                    graph.add_edge(NodeIndex::new(i), NodeIndex::new(j), ());
                }
            }
        }
        Ok(GammaGraph {
            m,
            t: t.clone(),
            vertices: group.elements().to_vec(),
            graph,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Components, each with an odd cycle if it has one. Odd cycles are found
    /// by 2-colouring each component breadth first.
    pub fn components(&self) -> Vec<Component> {
        let n = self.graph.node_count();
        let mut colour: Vec<Option<(usize, bool)>> = vec![None; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut out = Vec::new();
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            let id = out.len();
            let mut size = 0;
            let mut conflict = None;
            colour[start] = Some((id, false));
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                size += 1;
                let cu = colour[u].unwrap().1;
                for v in self
                    .graph
                    .neighbors(NodeIndex::new(u))
                    .map(NodeIndex::index)
                {
                    match colour[v] {
                        None => {
                            colour[v] = Some((id, !cu));
                            parent[v] = Some(u);
                            queue.push_back(v);
                        }
                        Some((_, cv)) if cv == cu && conflict.is_none() => conflict = Some((u, v)),
                        _ => {}
                    }
                }
            }
            let odd_cycle = conflict.map(|(u, v)| {
                let path = |mut x: usize| {
                    let mut p = vec![x];
                    while let Some(y) = parent[x] {
                        p.push(y);
                        x = y;
                    }
                    p
                };
                let (pu, pv) = (path(u), path(v));
                let meet = *pu.iter().find(|x| pv.contains(x)).unwrap();
                let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
                cycle.push(meet);
                cycle.extend(
                    pv.iter()
                        .copied()
                        .take_while(|&x| x != meet)
                        .collect::<Vec<_>>()
                        .into_iter()
                        .rev(),
                );
                cycle.iter().map(|&i| self.vertices[i].clone()).collect()
            });
            out.push(Component { size, odd_cycle });
        }
        out
    }

    /// Whether consecutive entries (cyclically) are adjacent.
    pub fn is_closed_walk(&self, walk: &[Perm]) -> bool {
        let index = |p: &Perm| self.vertices.iter().position(|v| v == p);
        (0..walk.len()).all(|k| {
            let (a, b) = (&walk[k], &walk[(k + 1) % walk.len()]);
            match (index(a), index(b)) {
                (Some(i), Some(j)) => self
                    .graph
                    .contains_edge(NodeIndex::new(i), NodeIndex::new(j)),
                _ => false,
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub size: usize,
    pub odd_cycle: Option<Vec<Perm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaFieldDims {
    pub domain: String,
    /// `r` in characteristic 2, otherwise `r_0`
    pub by_graph: usize,
    pub by_annihilator: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub m: usize,
    pub t: String,
    pub vertices: usize,
    pub edges: usize,
    /// `r`
    pub components: usize,
    /// `r_0`, components without an odd cycle
    pub bipartite_components: usize,
    pub odd_cycle: Option<Vec<String>>,
    pub fields: Vec<GammaFieldDims>,
}

struct CosetAnn<'a>(&'a GSetModule);

impl FieldTask for CosetAnn<'_> {
    type Output = usize;
    fn run<F: Field>(self, field: F, _q: F::Elem) -> Result<usize> {
        Ok(annihilator_dim(&self.0.to_module(field)?))
    }
}

/// Builds `Γ(Sym(m), {1, t})`, counts components with and without odd
/// cycles, and compares the predicted `dim Ann(F[Sym(m)/T])` with a direct
/// computation over each field.
pub fn gamma_graph_analysis(m: usize, t: &Perm, fields: &[Domain]) -> Result<GammaReport> {
    let gamma = GammaGraph::new(m, t)?;
    let comps = gamma.components();
    let r = comps.len();
    let r0 = comps.iter().filter(|c| c.odd_cycle.is_none()).count();
    let odd_cycle = comps
        .iter()
        .find_map(|c| c.odd_cycle.as_ref())
        .map(|c| c.iter().map(ToString::to_string).collect());
    let cosets = coset_space_module(m, std::slice::from_ref(t))?;
    let dims = map_domains(fields, |d| {
        let by_graph = if d.characteristic() == 2 { r } else { r0 };
        let by_annihilator = run_over(d, "1", CosetAnn(&cosets))?;
        Ok(GammaFieldDims {
            domain: d.to_string(),
            by_graph,
            by_annihilator,
            agree: by_graph == by_annihilator,
        })
    })?;
    Ok(GammaReport {
        m,
        t: t.to_string(),
        vertices: gamma.vertices.len(),
        edges: gamma.edge_count(),
        components: r,
        bipartite_components: r0,
        odd_cycle,
        fields: dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2() {
        let t = Perm::parse(2, "(12)").unwrap();
        let rep = gamma_graph_analysis(2, &t, &[Domain::Q, Domain::Fp(2)]).unwrap();
        assert_eq!((rep.components, rep.bipartite_components), (1, 1));
        assert!(rep.fields.iter().all(|f| f.agree && f.by_graph == 1));
    }

    #[test]
    fn m4_double_transposition() {
        let t = Perm::parse(4, "(13)(24)").unwrap();
        let gamma = GammaGraph::new(4, &t).unwrap();
        let comps = gamma.components();
        assert_eq!(comps.len(), 6);
        let cycle = comps[0].odd_cycle.clone().unwrap();
        assert_eq!(cycle.len() % 2, 1);
        assert!(gamma.is_closed_walk(&cycle));
        let rep = gamma_graph_analysis(4, &t, &[Domain::Q, Domain::Fp(2), Domain::Fp(3)]).unwrap();
        assert_eq!((rep.components, rep.bipartite_components), (6, 0));
        assert!(rep.fields.iter().all(|f| f.agree));
    }

    #[test]
    fn explicit_triangle_m4() {
        let t = Perm::parse(4, "(13)(24)").unwrap();
        let x = Perm::parse(4, "(123)").unwrap();
        let y = Perm::parse(4, "(234)").unwrap().inverse();
        let h = |g: &Perm| x.compose(g).compose(&y.inverse());
        let e = Perm::identity(4);
        let triple = [e.clone(), h(&e), h(&h(&e))];
        let gamma = GammaGraph::new(4, &t).unwrap();
        assert!(gamma.is_closed_walk(&triple));
        assert_eq!(
            h(&h(&e)),
            x.compose(&x).compose(&y.inverse()).compose(&y.inverse())
        );
    }

    #[test]
    fn transposition_graph_is_bipartite() {
        let t = Perm::parse(3, "(12)").unwrap();
        let rep = gamma_graph_analysis(3, &t, &[Domain::Q, Domain::Fp(2)]).unwrap();
        assert_eq!(rep.components, rep.bipartite_components);
        assert!(rep.fields.iter().all(|f| f.agree));
    }

    #[test]
    fn rejects_non_involutions() {
        assert!(matches!(
            GammaGraph::new(3, &Perm::parse(3, "(123)").unwrap()),
            Err(Error::NotAnInvolution(_))
        ));
        assert!(matches!(
            GammaGraph::new(3, &Perm::identity(3)),
            Err(Error::NotAnInvolution(_))
        ));
    }
}
